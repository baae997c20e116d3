//! Exact divisor-class arithmetic on the rational Picard group of the
//! space of degree-`e` rational curves in `P^n` with `marks` marked points.
//!
//! Classes are sparse rational vectors over the basis `{H}` (incidence to a
//! codimension-2 linear space), `{L_p}` (hyperplane pullback at the p-th
//! marked point), and `{D[i,j]}` (the boundary stratum aggregating
//! two-component splittings with one side of degree `i` carrying `j` marked
//! points). `(n, e) = (2, 2)` is rejected everywhere: the boundary classes
//! do not freely span in that case.

use crate::error::{Error, Result};
use crate::rational::{rat_wide, render, Rational};
use num::Signed;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PicBasis {
    pub ambient_dim: u32,
    pub degree: u32,
    pub marks: u32,
}

impl PicBasis {
    pub fn new(ambient_dim: u32, degree: u32, marks: u32) -> Result<Self> {
        if ambient_dim <= 1 {
            return Err(Error::OutOfRange(
                "ambient dimension must be at least 2".into(),
            ));
        }
        if degree == 0 {
            return Err(Error::OutOfRange("map degree must be at least 1".into()));
        }
        if (ambient_dim, degree) == (2, 2) {
            return Err(Error::ExcludedPair { n: 2, e: 2 });
        }
        Ok(Self {
            ambient_dim,
            degree,
            marks,
        })
    }

    /// Folds a boundary key onto its canonical representative: the weight
    /// is reflected into `0..=e/2`, and at exactly half weight the two
    /// sides of the splitting name the same class, so the size is
    /// reflected into `0..=marks/2`.
    fn fold(&self, weight: u32, size: u32) -> (u32, u32) {
        let (e, r) = (self.degree, self.marks);
        if 2 * weight > e {
            (e - weight, r - size)
        } else if 2 * weight == e {
            (weight, size.min(r - size))
        } else {
            (weight, size)
        }
    }

    /// Canonical form of a key, or an error when the key does not name a
    /// basis element (out of range, or a degree-0 side with fewer than two
    /// marked points).
    pub fn canonical_key(&self, key: BasisKey) -> Result<BasisKey> {
        match key {
            BasisKey::H => Ok(BasisKey::H),
            BasisKey::Mark(p) => {
                if p >= 1 && p <= self.marks {
                    Ok(BasisKey::Mark(p))
                } else {
                    Err(Error::OutOfRange(format!(
                        "marked point {p} is not in 1..={}",
                        self.marks
                    )))
                }
            }
            BasisKey::Boundary { weight, size } => {
                if weight > self.degree || size > self.marks {
                    return Err(Error::OutOfRange(format!(
                        "boundary key D[{weight},{size}] is outside the (degree, marks) box"
                    )));
                }
                let (w, s) = self.fold(weight, size);
                // a degree-0 side must carry at least two marked points
                if w == 0 && s < 2 {
                    return Err(Error::OutOfRange(format!(
                        "boundary key D[{weight},{size}] does not satisfy the partition constraints"
                    )));
                }
                Ok(BasisKey::Boundary { weight: w, size: s })
            }
        }
    }

    pub fn is_valid_key(&self, key: BasisKey) -> bool {
        self.canonical_key(key).is_ok()
    }
}

/// A basis element. The derived ordering (H, then marks ascending, then
/// boundary keys lexicographically) is the rendering order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisKey {
    H,
    Mark(u32),
    Boundary { weight: u32, size: u32 },
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKey::H => f.write_str("H"),
            BasisKey::Mark(p) => write!(f, "L_{p}"),
            BasisKey::Boundary { weight, size } => write!(f, "D[{weight},{size}]"),
        }
    }
}

/// Sparse exact-rational divisor class. Absent keys have coefficient zero;
/// zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorClass {
    basis: PicBasis,
    coeffs: BTreeMap<BasisKey, Rational>,
}

impl DivisorClass {
    pub fn zero(basis: PicBasis) -> Self {
        Self {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> PicBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `value` to the coefficient of `key` (canonicalized first).
    pub fn add_term(&mut self, key: BasisKey, value: Rational) -> Result<()> {
        let key = self.basis.canonical_key(key)?;
        if value.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
        Ok(())
    }

    /// Coefficient of `key`; zero for absent or invalid keys.
    pub fn coeff(&self, key: BasisKey) -> Rational {
        match self.basis.canonical_key(key) {
            Ok(k) => self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero),
            Err(_) => Rational::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Rational)> {
        self.coeffs.iter()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::OutOfRange(
                "cannot add classes over different bases".into(),
            ));
        }
        let mut sum = self.clone();
        for (key, value) in &other.coeffs {
            sum.add_term(*key, value.clone())?;
        }
        Ok(sum)
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.basis);
        }
        Self {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (*k, v * factor))
                .collect(),
        }
    }

    /// Fixed-order rendering: `c*H + c*L_p + c*D[i,j]` with coefficients in
    /// lowest terms, zero terms omitted, `0` for the zero class.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(key, value)| format!("{}*{}", render(value), key))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Dualizing-sheaf class on the unmarked space:
/// `1/2e [ -(n+1)(e+1) H + sum_i ((n+1)(e-i)i - 4e) D[i,0] ]`.
pub fn omega_unmarked(n: u32, e: u32) -> Result<DivisorClass> {
    let basis = PicBasis::new(n, e, 0)?;
    let mut class = DivisorClass::zero(basis);
    let (n, e) = (n as i128, e as i128);
    class.add_term(BasisKey::H, rat_wide(-(n + 1) * (e + 1), 2 * e))?;
    for i in 1..=(e / 2) {
        class.add_term(
            BasisKey::Boundary {
                weight: i as u32,
                size: 0,
            },
            rat_wide((n + 1) * (e - i) * i - 4 * e, 2 * e),
        )?;
    }
    Ok(class)
}

/// First Chern class of the dualizing sheaf on the space with `marks`
/// marked points. Specializes to `omega_unmarked` at `marks = 0`; the
/// marked-point sum runs over the marked points. Boundary keys that do not
/// name a basis element are omitted, and at half weight the two sides of
/// the splitting fold onto one canonical key.
pub fn omega_c1(n: u32, e: u32, marks: u32) -> Result<DivisorClass> {
    let basis = PicBasis::new(n, e, marks)?;
    let mut class = DivisorClass::zero(basis);
    let (n_, e_, r_) = (n as i128, e as i128, marks as i128);
    class.add_term(
        BasisKey::H,
        rat_wide(-(n_ + 1) * (e_ + 1) * e_ + 2 * r_, 2 * e_ * e_),
    )?;
    for p in 1..=marks {
        class.add_term(BasisKey::Mark(p), rat_wide(-1, 2 * e_))?;
    }
    for i in 0..=(e / 2) {
        for j in 0..=marks {
            let key = BasisKey::Boundary { weight: i, size: j };
            if !basis.is_valid_key(key) {
                continue;
            }
            let (i_, j_) = (i as i128, j as i128);
            let numerator = (n_ + 1) * e_ * (e_ - i_) * i_ + 2 * e_ * e_ * j_
                - 4 * e_ * i_ * j_
                + 2 * r_ * i_ * i_
                - 4 * e_ * e_;
            class.add_term(key, rat_wide(numerator, 2 * e_ * e_))?;
        }
    }
    Ok(class)
}

/// Rank `de + 1` of the bundle of degree-`d` section restrictions.
pub fn sections_rank(e: u32, d: u32) -> u64 {
    (e as u64) * (d as u64) + 1
}

/// First Chern class of the degree-`d` section-restriction bundle:
/// `d/2e [ (ed+1) H - sum_{i,j} i(e-i) D[i,j] ]`. Zero for `d = 0`.
pub fn sections_c1(n: u32, e: u32, marks: u32, d: u32) -> Result<DivisorClass> {
    let basis = PicBasis::new(n, e, marks)?;
    let mut class = DivisorClass::zero(basis);
    if d == 0 {
        return Ok(class);
    }
    let (e_, d_) = (e as i128, d as i128);
    class.add_term(BasisKey::H, rat_wide(d_ * (e_ * d_ + 1), 2 * e_))?;
    for i in 1..=(e / 2) {
        for j in 0..=marks {
            let key = BasisKey::Boundary { weight: i, size: j };
            if !basis.is_valid_key(key) {
                continue;
            }
            let i_ = i as i128;
            class.add_term(key, rat_wide(-d_ * i_ * (e_ - i_), 2 * e_))?;
        }
    }
    Ok(class)
}

/// Rank `e|d| + c` of the section-restriction bundle of a degree tuple.
pub fn sections_tuple_rank(e: u32, degrees: &[u32]) -> u64 {
    let total: u64 = degrees.iter().map(|d| *d as u64).sum();
    (e as u64) * total + degrees.len() as u64
}

/// First Chern class of the section-restriction bundle of a degree tuple:
/// `1/2e prod(ed_k+1) [ (sum d_k) H - (sum d_k/(ed_k+1)) sum_{i,j} i(e-i) D[i,j] ]`.
/// The boundary sign is pinned so that a singleton tuple reproduces
/// `sections_c1` exactly.
pub fn sections_tuple_c1(n: u32, e: u32, marks: u32, degrees: &[u32]) -> Result<DivisorClass> {
    let basis = PicBasis::new(n, e, marks)?;
    if degrees.is_empty() {
        return Err(Error::EmptyTuple);
    }
    if degrees.iter().any(|d| *d == 0) {
        return Err(Error::OutOfRange(
            "every degree in the tuple must be at least 1".into(),
        ));
    }
    let e_ = e as i128;
    let mut rank_product = Rational::from_integer(1.into());
    let mut degree_sum = Rational::zero();
    let mut weighted_sum = Rational::zero();
    for d in degrees {
        let d_ = *d as i128;
        rank_product *= rat_wide(e_ * d_ + 1, 1);
        degree_sum += rat_wide(d_, 1);
        weighted_sum += rat_wide(d_, e_ * d_ + 1);
    }
    let prefactor = rank_product * rat_wide(1, 2 * e_);

    let mut class = DivisorClass::zero(basis);
    class.add_term(BasisKey::H, &prefactor * &degree_sum)?;
    let boundary_factor = &prefactor * &weighted_sum;
    for i in 1..=(e / 2) {
        for j in 0..=marks {
            let key = BasisKey::Boundary { weight: i, size: j };
            if !basis.is_valid_key(key) {
                continue;
            }
            let i_ = i as i128;
            class.add_term(key, -(&boundary_factor) * rat_wide(i_ * (e_ - i_), 1))?;
        }
    }
    Ok(class)
}

/// Canonical class of the space of degree-`e` rational curves on a general
/// degree-`d` hypersurface, computed as the ambient dualizing class plus
/// the section-bundle first Chern class.
pub fn canonical_hypersurface(n: u32, d: u32, e: u32) -> Result<DivisorClass> {
    if d < 1 {
        return Err(Error::OutOfRange(
            "hypersurface degree must be at least 1".into(),
        ));
    }
    omega_unmarked(n, e)?.checked_add(&sections_c1(n, e, 0, d)?)
}

/// Canonical class for a complete intersection of the given degree tuple,
/// with marked points. Computed additively from `omega_c1` and
/// `sections_tuple_c1`; a closed form is intentionally not used.
pub fn canonical_complete_intersection(
    n: u32,
    degrees: &[u32],
    e: u32,
    marks: u32,
) -> Result<DivisorClass> {
    omega_c1(n, e, marks)?.checked_add(&sections_tuple_c1(n, e, marks, degrees)?)
}

/// Geometric hypotheses under which the positivity test below actually
/// certifies bigness: the generic stable map must be birational to its
/// image and have irreducible domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BigHypotheses {
    pub birational_generic: bool,
    pub irreducible_generic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BignessResult {
    pub big: bool,
    pub certificate: String,
}

/// One-sided bigness test on an unmarked class: under the hypotheses, a
/// positive `H` coefficient plus nonnegative boundary coefficients
/// decompose the class as big + effective. Failure of the test proves
/// nothing.
pub fn is_big_sufficient(class: &DivisorClass, hypotheses: BigHypotheses) -> Result<BignessResult> {
    if class.basis().marks != 0 {
        return Err(Error::MarkedPointsUnsupported);
    }
    if !hypotheses.birational_generic || !hypotheses.irreducible_generic {
        return Ok(BignessResult {
            big: false,
            certificate: "hypotheses not established".to_string(),
        });
    }
    let h = class.coeff(BasisKey::H);
    if !h.is_positive() {
        return Ok(BignessResult {
            big: false,
            certificate: "H-coefficient not positive".to_string(),
        });
    }
    let negative_boundary = class
        .terms()
        .any(|(key, value)| matches!(key, BasisKey::Boundary { .. }) && value.is_negative());
    if negative_boundary {
        return Ok(BignessResult {
            big: false,
            certificate: "indefinite".to_string(),
        });
    }
    Ok(BignessResult {
        big: true,
        certificate: format!(
            "decomposition {} = (positive)*H + (nonnegative boundary)",
            class.render()
        ),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KbigItem1 {
    pub holds_hypotheses: bool,
    /// Least `e0 <= e_max` such that the sufficient test passes for every
    /// `e` in `e0..=e_max`; `None` when the test fails at `e_max` itself.
    pub e_threshold: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KbigItem2 {
    pub holds_hypotheses: bool,
    pub big_for_all_e: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KbigRegion {
    pub item1: KbigItem1,
    pub item2: KbigItem2,
}

/// Region check for bigness of the canonical class of the curve space of a
/// general degree-`d` hypersurface in `P^n`, scanning `1 <= e <= e_max`.
/// Item 1 asks for `d < min(n-3, (n+1)/2)` and `d^2 >= n+2` and looks for
/// an eventual threshold; item 2 asks for `d < min(n-6, (n+1)/2)` and
/// `d^2 + d >= 2n+2` and requires the test to pass for every `e`.
pub fn kbig_region(n: u32, d: u32, e_max: u32) -> Result<KbigRegion> {
    if n < 2 || d < 1 || e_max < 1 {
        return Err(Error::OutOfRange(
            "need n >= 2, d >= 1 and e_max >= 1".into(),
        ));
    }
    let (n_, d_) = (n as i64, d as i64);
    // d < (n+1)/2 as integers: 2d < n+1
    let proof_hypotheses = 2 * d_ < n_ + 1;
    let hypotheses = BigHypotheses {
        birational_generic: proof_hypotheses,
        irreducible_generic: proof_hypotheses,
    };

    let passes = |e: u32| -> bool {
        canonical_hypersurface(n, d, e)
            .and_then(|class| is_big_sufficient(&class, hypotheses))
            .map(|result| result.big)
            .unwrap_or(false)
    };

    let mut threshold = None;
    for e in (1..=e_max).rev() {
        if passes(e) {
            threshold = Some(e);
        } else {
            break;
        }
    }

    let item1_holds = d_ < n_ - 3 && 2 * d_ < n_ + 1 && d_ * d_ >= n_ + 2;
    let item2_holds = d_ < n_ - 6 && 2 * d_ < n_ + 1 && d_ * d_ + d_ >= 2 * n_ + 2;
    let big_for_all_e = (1..=e_max).all(passes);

    Ok(KbigRegion {
        item1: KbigItem1 {
            holds_hypotheses: item1_holds,
            e_threshold: threshold,
        },
        item2: KbigItem2 {
            holds_hypotheses: item2_holds,
            big_for_all_e,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn boundary(weight: u32, size: u32) -> BasisKey {
        BasisKey::Boundary { weight, size }
    }

    #[test]
    fn omega_unmarked_examples() {
        let class = omega_unmarked(4, 2).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat(-15, 4));
        assert_eq!(class.coeff(boundary(1, 0)), rat(-3, 4));

        // no boundary classes at e = 1
        let class = omega_unmarked(7, 1).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat_int(-8));
        assert_eq!(class.terms().count(), 1);

        let class = omega_unmarked(3, 3).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat(-8, 3));
        assert_eq!(class.coeff(boundary(1, 0)), rat(-2, 3));

        assert_eq!(omega_unmarked(2, 2), Err(Error::ExcludedPair { n: 2, e: 2 }));
    }

    #[test]
    fn omega_c1_examples() {
        // r = 0 specializes to the unmarked class
        for (n, e) in [(4u32, 2u32), (3, 3), (5, 4), (2, 3), (9, 1)] {
            assert_eq!(omega_c1(n, e, 0).unwrap(), omega_unmarked(n, e).unwrap());
        }

        let class = omega_c1(4, 2, 1).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat(-7, 2));
        assert_eq!(class.coeff(BasisKey::Mark(1)), rat(-1, 4));
        // D[0,1] is not a valid key and is omitted
        assert_eq!(class.coeff(boundary(0, 1)), rat_int(0));
        // the two half-weight keys D[1,0] and D[1,1] fold together
        assert_eq!(class.coeff(boundary(1, 0)), rat_int(-1));
        assert_eq!(class.coeff(boundary(1, 1)), rat_int(-1));
    }

    #[test]
    fn sections_c1_examples() {
        let class = sections_c1(5, 2, 0, 1).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat(3, 4));
        assert_eq!(class.coeff(boundary(1, 0)), rat(-1, 4));

        let class = sections_c1(5, 2, 0, 0).unwrap();
        assert!(class.is_zero());
        assert_eq!(sections_rank(2, 0), 1);
        assert_eq!(sections_rank(2, 1), 3);

        let class = sections_c1(5, 4, 0, 2).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat(9, 4));
        assert_eq!(class.coeff(boundary(1, 0)), rat(-3, 4));
        assert_eq!(class.coeff(boundary(2, 0)), rat_int(-1));
    }

    #[test]
    fn tuple_specializes_to_single_degree() {
        for (n, e, d) in [(4u32, 2u32, 1u32), (5, 3, 2), (8, 4, 3), (3, 1, 5)] {
            assert_eq!(
                sections_tuple_c1(n, e, 0, &[d]).unwrap(),
                sections_c1(n, e, 0, d).unwrap(),
                "(n, e, d) = ({n}, {e}, {d})"
            );
        }
        assert_eq!(sections_tuple_rank(2, &[1, 1]), 6);
        assert_eq!(
            sections_tuple_c1(4, 2, 0, &[]),
            Err(Error::EmptyTuple)
        );
    }

    #[test]
    fn tuple_prefactor() {
        // ds = [1,1], e = 2: prefactor 9/4, H term (9/4) * 2
        let class = sections_tuple_c1(5, 2, 0, &[1, 1]).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat(9, 2));
        // boundary: -(9/4)(2/3) * i(e-i) = -(3/2) * 1
        assert_eq!(class.coeff(boundary(1, 0)), rat(-3, 2));
    }

    #[test]
    fn canonical_hypersurface_examples() {
        let class = canonical_hypersurface(4, 1, 2).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat_int(-3));
        assert_eq!(class.coeff(boundary(1, 0)), rat_int(-1));

        let class = canonical_hypersurface(13, 6, 2).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat_int(9));
        assert_eq!(class.coeff(boundary(1, 0)), rat_int(0));
        assert_eq!(class.render(), "9*H");

        // e = 1: the single H term ((d^2-n-1)e - (n+1-d))/2e
        let class = canonical_hypersurface(6, 2, 1).unwrap();
        assert_eq!(class.coeff(BasisKey::H), rat_int(-4));
        assert_eq!(class.terms().count(), 1);
    }

    #[test]
    fn complete_intersection_specializes() {
        for (n, d, e) in [(4u32, 1u32, 2u32), (13, 6, 2), (5, 2, 3), (9, 4, 1)] {
            assert_eq!(
                canonical_complete_intersection(n, &[d], e, 0).unwrap(),
                canonical_hypersurface(n, d, e).unwrap()
            );
        }

        // additivity with marks
        let total = canonical_complete_intersection(4, &[1], 2, 1).unwrap();
        let expect = omega_c1(4, 2, 1)
            .unwrap()
            .checked_add(&sections_tuple_c1(4, 2, 1, &[1]).unwrap())
            .unwrap();
        assert_eq!(total, expect);

        // e = 1 classes carry only H and L terms
        let class = canonical_complete_intersection(6, &[2, 1], 1, 2).unwrap();
        assert!(class
            .terms()
            .all(|(key, _)| !matches!(key, BasisKey::Boundary { .. })));
    }

    #[test]
    fn render_ordering_and_zero() {
        let basis = PicBasis::new(4, 4, 2).unwrap();
        let mut class = DivisorClass::zero(basis);
        class.add_term(boundary(1, 2), rat(1, 2)).unwrap();
        class.add_term(BasisKey::Mark(2), rat_int(-2)).unwrap();
        class.add_term(BasisKey::H, rat(7, 3)).unwrap();
        class.add_term(BasisKey::Mark(1), rat_int(4)).unwrap();
        class.add_term(boundary(1, 0), rat_int(1)).unwrap();
        assert_eq!(
            class.render(),
            "7/3*H + 4*L_1 + -2*L_2 + 1*D[1,0] + 1/2*D[1,2]"
        );
        assert_eq!(DivisorClass::zero(basis).render(), "0");
    }

    #[test]
    fn key_folding() {
        let basis = PicBasis::new(5, 4, 3).unwrap();
        // weight above e/2 reflects
        assert_eq!(
            basis.canonical_key(boundary(3, 1)).unwrap(),
            boundary(1, 2)
        );
        // at half weight the size reflects
        assert_eq!(
            basis.canonical_key(boundary(2, 3)).unwrap(),
            boundary(2, 0)
        );
        // full-degree side with too few marks on the other side
        assert!(basis.canonical_key(boundary(4, 2)).is_err());
        assert!(basis.canonical_key(boundary(0, 1)).is_err());
        assert!(basis.canonical_key(boundary(0, 2)).is_ok());
    }

    #[test]
    fn bigness_test() {
        let both = BigHypotheses {
            birational_generic: true,
            irreducible_generic: true,
        };
        let class = canonical_hypersurface(13, 6, 2).unwrap();
        let result = is_big_sufficient(&class, both).unwrap();
        assert!(result.big);

        let zero = DivisorClass::zero(PicBasis::new(13, 2, 0).unwrap());
        assert!(!is_big_sufficient(&zero, both).unwrap().big);

        // positive H but a negative boundary coefficient: one-sided failure
        let mut indefinite = DivisorClass::zero(PicBasis::new(13, 2, 0).unwrap());
        indefinite.add_term(BasisKey::H, rat_int(5)).unwrap();
        indefinite.add_term(boundary(1, 0), rat(-1, 2)).unwrap();
        let result = is_big_sufficient(&indefinite, both).unwrap();
        assert!(!result.big);
        assert_eq!(result.certificate, "indefinite");

        let no_hyp = BigHypotheses {
            birational_generic: false,
            irreducible_generic: true,
        };
        assert!(!is_big_sufficient(&class, no_hyp).unwrap().big);

        let marked = omega_c1(4, 2, 1).unwrap();
        assert_eq!(
            is_big_sufficient(&marked, both),
            Err(Error::MarkedPointsUnsupported)
        );
    }

    #[test]
    fn kbig_region_examples() {
        let region = kbig_region(10, 5, 20).unwrap();
        assert!(region.item1.holds_hypotheses);
        assert!(region.item1.e_threshold.is_some());
        // fails at e = 2 (boundary coefficient -1/2), stable from e = 3 on
        assert_eq!(region.item1.e_threshold, Some(3));

        let region = kbig_region(13, 6, 20).unwrap();
        assert!(region.item2.holds_hypotheses);
        assert!(region.item2.big_for_all_e);

        let region = kbig_region(5, 2, 20).unwrap();
        assert!(!region.item1.holds_hypotheses);
    }
}
