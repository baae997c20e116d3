//! Representations of finite cyclic groups as character multiplicity
//! vectors, and the age-style invariant that governs whether a finite
//! cyclic quotient singularity is terminal or canonical.
//!
//! A representation of the cyclic group of order `r` over a field containing
//! the `r`-th roots of unity splits as a direct sum of one-dimensional
//! characters. We store the multiplicity of each character indexed by a
//! residue mod `r` against one fixed generator of the character group.
//! Alternate generators are handled by re-indexing at evaluation time; the
//! stored vector is never rewritten.

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rational};
use num::bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicRep {
    order: u64,
    mult: Vec<u64>,
}

impl CyclicRep {
    pub fn new(order: u64, mult: Vec<u64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::OutOfRange("group order must be at least 1".into()));
        }
        if mult.len() as u64 != order {
            return Err(Error::OutOfRange(format!(
                "expected {order} multiplicities, got {}",
                mult.len()
            )));
        }
        Ok(Self { order, mult })
    }

    pub fn zero(order: u64) -> Self {
        Self::trivial(order, 0)
    }

    /// `dim` copies of the trivial character.
    pub fn trivial(order: u64, dim: u64) -> Self {
        assert!(order >= 1, "group order must be at least 1");
        let mut mult = vec![0; order as usize];
        mult[0] = dim;
        Self { order, mult }
    }

    /// The single character of the given index (taken mod the order).
    pub fn character(order: u64, index: u64) -> Self {
        assert!(order >= 1, "group order must be at least 1");
        let mut mult = vec![0; order as usize];
        mult[(index % order) as usize] = 1;
        Self { order, mult }
    }

    /// The regular representation: every character exactly once.
    pub fn regular(order: u64) -> Self {
        assert!(order >= 1, "group order must be at least 1");
        Self {
            order,
            mult: vec![1; order as usize],
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn dim(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn multiplicity(&self, index: u64) -> u64 {
        self.mult[(index % self.order) as usize]
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mult = self
            .mult
            .iter()
            .zip(&other.mult)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            order: self.order,
            mult,
        })
    }

    /// `n` copies of this representation.
    pub fn repeated(&self, copies: u64) -> Self {
        Self {
            order: self.order,
            mult: self.mult.iter().map(|m| m * copies).collect(),
        }
    }

    /// Tensor product: convolution of the multiplicity vectors.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let r = self.order as usize;
        let mut mult = vec![0u64; r];
        for (i, a) in self.mult.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.mult.iter().enumerate() {
                mult[(i + j) % r] += a * b;
            }
        }
        Ok(Self {
            order: self.order,
            mult,
        })
    }

    /// Dual representation: the character of index `i` becomes index `-i`.
    pub fn dual(&self) -> Self {
        let r = self.order as usize;
        let mut mult = vec![0u64; r];
        for (i, a) in self.mult.iter().enumerate() {
            mult[(r - i) % r] += a;
        }
        Self {
            order: self.order,
            mult,
        }
    }

    /// Induction to the overgroup of index `s` (order `s * self.order()`).
    /// The character of index `l` induces to the sum of the characters of
    /// index `l + j * self.order()` for `j = 0..s`.
    pub fn induce(&self, index: u64) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidInductionIndex);
        }
        let sub_order = self.order;
        let order = sub_order * index;
        let mut mult = vec![0u64; order as usize];
        for (l, a) in self.mult.iter().enumerate() {
            for j in 0..index {
                mult[(l as u64 + j * sub_order) as usize] += a;
            }
        }
        Ok(Self { order, mult })
    }

    /// Index of the determinant character: the sum of `i * mult[i]` mod the
    /// order. Zero means the determinant of the action is trivial.
    pub fn det_character(&self) -> u64 {
        let r = self.order as u128;
        let total: u128 = self
            .mult
            .iter()
            .enumerate()
            .map(|(i, a)| (i as u128) * (*a as u128))
            .sum();
        (total % r) as u64
    }

    /// The invariant with respect to the generator selected by the unit
    /// `u`: the character stored at index `i` has index `i * u^{-1}` mod r
    /// against the new generator, and the invariant is the weighted index
    /// sum divided by the order.
    pub fn rsbt_invariant_wrt(&self, unit: u64) -> Result<Rational> {
        let r = self.order;
        let u = unit % r; // order 1 reduces everything to 0
        if num::integer::gcd(if r == 1 { 1 } else { u }, r) != 1 {
            return Err(Error::InvalidGenerator { unit, order: r });
        }
        let u_inv = mod_inverse(u, r);
        let total: u128 = self
            .mult
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let reindexed = (i as u64 * u_inv) % r;
                (reindexed as u128) * (*a as u128)
            })
            .sum();
        Ok(Rational::new(BigInt::from(total), BigInt::from(r)))
    }

    /// The invariant: the minimum over all generators of the character
    /// group.
    pub fn rsbt_invariant(&self) -> Rational {
        units(self.order)
            .into_iter()
            .map(|u| {
                self.rsbt_invariant_wrt(u)
                    .expect("enumerated units are valid generators")
            })
            .min()
            .expect("every order has at least one unit")
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }
}

/// The units mod `order`, i.e. the residues selecting generators of the
/// character group. For order 1 this is the single residue 1 (≡ 0).
pub fn units(order: u64) -> Vec<u64> {
    (1..=order)
        .filter(|u| num::integer::gcd(*u, order) == 1)
        .collect()
}

fn mod_inverse(value: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    // extended Euclid on (value, modulus); value is a unit by precondition
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (modulus as i128, (value % modulus) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a non-unit requested");
    t.rem_euclid(modulus as i128) as u64
}

/// Tangent-space decomposition at a degree-`e` cover of a line in `P^n`
/// whose cyclic stabilizer has order `r`. The three blocks are the tangent
/// directions along the Grassmannian of lines (trivial action), the
/// vertical directions of the covers-of-a-fixed-line fibration, and the
/// normal directions to the multiple-cover locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentAssembly {
    pub ambient_dim: u32,
    pub degree: u32,
    pub stabilizer_order: u32,
    pub grassmann_trivial: CyclicRep,
    pub vert_cover: CyclicRep,
    pub normal_copies: CyclicRep,
}

impl TangentAssembly {
    pub fn total(&self) -> CyclicRep {
        self.grassmann_trivial
            .direct_sum(&self.vert_cover)
            .and_then(|s| s.direct_sum(&self.normal_copies))
            .expect("assembly blocks share one order")
    }

    pub fn dim(&self) -> u64 {
        self.grassmann_trivial.dim() + self.vert_cover.dim() + self.normal_copies.dim()
    }

    pub fn invariant_wrt(&self, unit: u64) -> Result<Rational> {
        self.total().rsbt_invariant_wrt(unit)
    }

    pub fn invariant(&self) -> Rational {
        self.total().rsbt_invariant()
    }
}

/// Closed form `e(n+1)/2 * (1 - 1/r) - 1` for the invariant of the tangent
/// assembly. Valid for `r >= 2`; the trivial stabilizer `r = 1` acts
/// trivially and has invariant 0 instead.
pub fn multiple_cover_invariant(ambient_dim: u32, degree: u32, stabilizer_order: u32) -> Rational {
    let n = ambient_dim as i64;
    let e = degree as i64;
    let r = stabilizer_order as i64;
    // e(n+1)/2 * (r-1)/r - 1
    Rational::new(BigInt::from(e * (n + 1) * (r - 1)), BigInt::from(2 * r)) - rat_int(1)
}

/// Assembles the stabilizer action on the tangent space at a degree-`e`
/// multiple cover of a line in `P^n`, for a stabilizer of order `r | e`.
///
/// Writing `m = e/r`, the blocks are:
/// * a trivial block of dimension `2(n-1)` for the Grassmannian directions;
/// * `2(m-1)` regular representations plus, for `r >= 2`, the weight block
///   at the two ramification points: two copies of every character minus
///   one copy each of the characters of index 1 and -1 (dimension `2r-2`);
/// * `n-1` copies of the dual of `R_f = (R_h ⊗ R_g) ⊕ R_g ⊕ R_h`, where
///   `R_g` carries every nontrivial character once and `R_h` is trivial of
///   dimension `m-1`.
///
/// The total dimension is `(n+1)e + (n-3)`, and for `r >= 2` the invariant
/// with respect to every generator is `e(n+1)/2 * (1 - 1/r) - 1`.
pub fn tangent_rep_multiple_cover(
    ambient_dim: u32,
    degree: u32,
    stabilizer_order: u32,
) -> Result<TangentAssembly> {
    if ambient_dim < 1 {
        return Err(Error::OutOfRange("ambient dimension must be at least 1".into()));
    }
    if degree < 1 || stabilizer_order < 1 {
        return Err(Error::OutOfRange("degree and stabilizer order must be at least 1".into()));
    }
    if degree % stabilizer_order != 0 {
        return Err(Error::NonDividingOrder {
            stabilizer: stabilizer_order as u64,
            degree: degree as u64,
        });
    }
    let n = ambient_dim as u64;
    let e = degree as u64;
    let r = stabilizer_order as u64;
    let m = e / r;

    let grassmann_trivial = CyclicRep::trivial(r, 2 * (n - 1));

    let mut vert = CyclicRep::regular(r).repeated(2 * (m - 1));
    if r >= 2 {
        // ramification block: 2*(full character sum) minus the two weights
        // of index ±1
        let mut block = vec![2u64; r as usize];
        block[1] -= 1;
        block[(r - 1) as usize] -= 1;
        vert = vert.direct_sum(&CyclicRep::new(r, block)?)?;
    }

    let mut nontrivial = vec![1u64; r as usize];
    nontrivial[0] = 0;
    let r_g = CyclicRep::new(r, nontrivial)?;
    let r_h = CyclicRep::trivial(r, m - 1);
    let r_f = r_h
        .tensor(&r_g)?
        .direct_sum(&r_g)?
        .direct_sum(&r_h)?;
    let normal_copies = r_f.dual().repeated(n - 1);

    Ok(TangentAssembly {
        ambient_dim,
        degree,
        stabilizer_order,
        grassmann_trivial,
        vert_cover: vert,
        normal_copies,
    })
}
