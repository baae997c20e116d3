//! Closed-form dimension counts, log discrepancies, and singularity
//! classification for generic determinantal strata and Grassmannian cones,
//! together with the numeric stratum data of the multiple-cover locus in
//! the space of rational curves.
//!
//! All arithmetic here is exact integer arithmetic.

use crate::error::{Error, Result};
use crate::rational::{rat_int, Rational};
use serde::Serialize;
use std::fmt;

/// Severity ladder for singularities, ordered from worst to best:
/// `NotLogCanonical < LogCanonical < KawamataLogTerminal < Canonical <
/// Terminal`. A tag denotes the finest class the object satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularityTag {
    NotLogCanonical,
    LogCanonical,
    KawamataLogTerminal,
    Canonical,
    Terminal,
}

impl SingularityTag {
    pub fn is_log_canonical(self) -> bool {
        self >= SingularityTag::LogCanonical
    }

    pub fn is_klt(self) -> bool {
        self >= SingularityTag::KawamataLogTerminal
    }

    pub fn is_canonical(self) -> bool {
        self >= SingularityTag::Canonical
    }

    pub fn is_terminal(self) -> bool {
        self >= SingularityTag::Terminal
    }
}

impl fmt::Display for SingularityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SingularityTag::NotLogCanonical => "not log canonical",
            SingularityTag::LogCanonical => "log canonical",
            SingularityTag::KawamataLogTerminal => "kawamata log terminal",
            SingularityTag::Canonical => "canonical",
            SingularityTag::Terminal => "terminal",
        };
        f.write_str(name)
    }
}

/// Classification result: the finest tag together with the minimal log
/// discrepancy, which is defined exactly when the object is log canonical.
/// Class transfers between a pair and its cone carry the tag only, so a
/// transferred class has no mld.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularityClass {
    pub tag: SingularityTag,
    pub mld: Option<Rational>,
}

/// Parameters of a generic determinantal pair: a map between bundles of
/// ranks `source_rank <= target_rank` over a smooth base, the stratum where
/// the rank drops to at most `stratum`, an integer multiplicity on that
/// stratum, and the level of the resolving tower the pair lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetPairSpec {
    pub source_rank: u32,
    pub target_rank: u32,
    pub multiplicity: u32,
    pub stratum: u32,
    pub base_level: u32,
}

impl DetPairSpec {
    pub fn new(
        source_rank: u32,
        target_rank: u32,
        multiplicity: u32,
        stratum: u32,
        base_level: u32,
    ) -> Result<Self> {
        if source_rank < 1 {
            return Err(Error::OutOfRange("source rank must be at least 1".into()));
        }
        if target_rank < source_rank {
            return Err(Error::OutOfRange(format!(
                "target rank {target_rank} must be at least the source rank {source_rank}"
            )));
        }
        if stratum >= source_rank {
            return Err(Error::OutOfRange(format!(
                "stratum {stratum} must be at most source rank - 1 = {}",
                source_rank - 1
            )));
        }
        if base_level > stratum {
            return Err(Error::OutOfRange(format!(
                "base level {base_level} must be at most the stratum {stratum}"
            )));
        }
        Ok(Self {
            source_rank,
            target_rank,
            multiplicity,
            stratum,
            base_level,
        })
    }
}

/// Codimension `(f - k)(g - k)` of the rank-at-most-`k` stratum in the
/// space of `g x f` matrices.
pub fn stratum_codim(source_rank: u32, target_rank: u32, stratum: u32) -> Result<u64> {
    let (g, f, k) = (source_rank as u64, target_rank as u64, stratum as u64);
    if !(k <= g && g <= f) {
        return Err(Error::OutOfRange(format!(
            "need stratum <= source rank <= target rank, got ({g}, {f}, {k})"
        )));
    }
    Ok((f - k) * (g - k))
}

/// Log discrepancies `(f-i)(g-i) - q(k+1-i)` of the exceptional divisors of
/// the resolving tower, for levels `i = base_level ..= stratum`.
pub fn log_discrepancies(pair: &DetPairSpec) -> Vec<(u32, i64)> {
    let g = pair.source_rank as i64;
    let f = pair.target_rank as i64;
    let q = pair.multiplicity as i64;
    let k = pair.stratum as i64;
    (pair.base_level..=pair.stratum)
        .map(|level| {
            let i = level as i64;
            (level, (f - i) * (g - i) - q * (k + 1 - i))
        })
        .collect()
}

/// Classifies the pair by the minimum `a` of its log discrepancies: not log
/// canonical when `a < 0`, otherwise log canonical with minimal log
/// discrepancy `min(1, a)`. Terminal is reported only when `a > 1`; at
/// `a = 1` the pair is reported canonical even when the underlying space is
/// better behaved.
pub fn classify_pair(pair: &DetPairSpec) -> SingularityClass {
    let a = log_discrepancies(pair)
        .into_iter()
        .map(|(_, value)| value)
        .min()
        .expect("the level range base_level..=stratum is never empty");
    let tag = if a < 0 {
        SingularityTag::NotLogCanonical
    } else if a > 1 {
        SingularityTag::Terminal
    } else if a == 1 {
        SingularityTag::Canonical
    } else {
        // a == 0: log canonical but not klt
        SingularityTag::LogCanonical
    };
    let mld = (a >= 0).then(|| rat_int(a.min(1)));
    SingularityClass { tag, mld }
}

/// A relative Grassmannian cone: rank-`quot_rank` locally free quotients of
/// a sheaf of generic rank `coker_rank` presented over a base of dimension
/// `base_dim`. `stratum_codims[k]` is the codimension in the base of the
/// locus where the presentation matrix has rank exactly `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSpec {
    pub base_dim: u64,
    pub coker_rank: u32,
    pub quot_rank: u32,
    pub stratum_codims: Vec<u64>,
}

impl ConeSpec {
    fn check_quot_rank(&self) -> Result<()> {
        if self.quot_rank < 1 || self.quot_rank > self.coker_rank {
            return Err(Error::OutOfRange(format!(
                "quotient rank {} must lie in 1..={}",
                self.quot_rank, self.coker_rank
            )));
        }
        Ok(())
    }

    fn check_codims(&self, source_rank: u32) -> Result<()> {
        if self.stratum_codims.len() as u64 != source_rank as u64 {
            return Err(Error::OutOfRange(format!(
                "expected {source_rank} stratum codimensions, got {}",
                self.stratum_codims.len()
            )));
        }
        Ok(())
    }
}

/// Expected dimension `b + r(e - r)` of the cone.
pub fn cone_expected_dim(cone: &ConeSpec) -> Result<u64> {
    cone.check_quot_rank()?;
    let (e, r) = (cone.coker_rank as u64, cone.quot_rank as u64);
    Ok(cone.base_dim + r * (e - r))
}

/// The cone is irreducible iff every rank stratum of the presentation
/// matrix satisfies `codim >= r(g - k) + 1`. Vacuously true for `g = 0`.
pub fn cone_irreducible(cone: &ConeSpec, source_rank: u32) -> Result<bool> {
    cone.check_quot_rank()?;
    cone.check_codims(source_rank)?;
    let r = cone.quot_rank as u64;
    let g = source_rank as u64;
    Ok(cone
        .stratum_codims
        .iter()
        .enumerate()
        .all(|(k, codim)| *codim >= r * (g - k as u64) + 1))
}

/// Regularity in codimension one holds when every stratum satisfies the
/// stronger bound `codim >= r(g - k) + 2`. Vacuously true for `g = 0`.
pub fn cone_r1(cone: &ConeSpec, source_rank: u32) -> Result<bool> {
    cone.check_quot_rank()?;
    cone.check_codims(source_rank)?;
    let r = cone.quot_rank as u64;
    let g = source_rank as u64;
    Ok(cone
        .stratum_codims
        .iter()
        .enumerate()
        .all(|(k, codim)| *codim >= r * (g - k as u64) + 2))
}

/// Outcome of the direct-sum cone criterion. When it applies, the cone is
/// canonical of dimension `dim(base) + dim_offset`; outside the criterion
/// the cone is reducible and no class is asserted.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectSumCone {
    pub applies: bool,
    pub dim_offset: Option<i64>,
    pub class: Option<SingularityClass>,
}

/// Criterion for the cone of rank-`r` quotients of `a` copies of a generic
/// rank-`(f-g)` cokernel plus a free summand of rank `a_prime`: when
/// `a * r <= f - g` the cone is canonical of the expected dimension.
pub fn direct_sum_cone_classify(
    source_rank: u32,
    target_rank: u32,
    copies: u32,
    extra_rank: u32,
    quot_rank: u32,
) -> Result<DirectSumCone> {
    let (g, f, a, a_prime, r) = (
        source_rank as i64,
        target_rank as i64,
        copies as i64,
        extra_rank as i64,
        quot_rank as i64,
    );
    if g < 1 || f < 2 {
        return Err(Error::OutOfRange(
            "need source rank >= 1 and target rank >= 2".into(),
        ));
    }
    if f < g {
        return Err(Error::OutOfRange(
            "target rank must be at least the source rank".into(),
        ));
    }
    if a < 1 || r < 1 {
        return Err(Error::OutOfRange(
            "copies and quotient rank must be at least 1".into(),
        ));
    }
    if a * r <= f - g {
        let offset = f * g + r * ((a * (f - g) + a_prime) - r);
        Ok(DirectSumCone {
            applies: true,
            dim_offset: Some(offset),
            class: Some(SingularityClass {
                tag: SingularityTag::Canonical,
                mld: None,
            }),
        })
    } else {
        Ok(DirectSumCone {
            applies: false,
            dim_offset: None,
            class: None,
        })
    }
}

/// Coefficients `(f-i)(g-i) - 1` of the relative canonical divisor of the
/// tower map from level `s` down to level `base_level`, one per blown-up
/// level `i = base_level .. s`.
pub fn relative_canonical_coeffs(
    source_rank: u32,
    target_rank: u32,
    base_level: u32,
    level: u32,
) -> Result<Vec<(u32, i64)>> {
    let (g, f) = (source_rank as i64, target_rank as i64);
    if g < 1 || f < g {
        return Err(Error::OutOfRange(
            "need 1 <= source rank <= target rank".into(),
        ));
    }
    if !(base_level < level && level <= source_rank) {
        return Err(Error::OutOfRange(format!(
            "need base_level < level <= source rank, got {base_level}, {level}, {source_rank}"
        )));
    }
    Ok((base_level..level)
        .map(|lvl| {
            let i = lvl as i64;
            (lvl, (f - i) * (g - i) - 1)
        })
        .collect())
}

/// Pullback to tower level `level` of the `multiplicity`-th power of the
/// stratum ideal: the strict transform survives with its multiplicity only
/// while `stratum >= level`, and each blown-up level `i` contributes the
/// exceptional coefficient `q(k + 1 - i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingCycle {
    pub strict_multiplicity: Option<u64>,
    pub exceptional: Vec<(u32, u64)>,
}

pub fn fitting_pullback_cycle(
    source_rank: u32,
    target_rank: u32,
    multiplicity: u32,
    stratum: u32,
    base_level: u32,
    level: u32,
) -> Result<FittingCycle> {
    if source_rank < 1 || target_rank < source_rank {
        return Err(Error::OutOfRange(
            "need 1 <= source rank <= target rank".into(),
        ));
    }
    if stratum >= source_rank {
        return Err(Error::OutOfRange(format!(
            "stratum {stratum} must be at most source rank - 1"
        )));
    }
    if !(base_level < level && level <= source_rank) {
        return Err(Error::OutOfRange(format!(
            "need base_level < level <= source rank, got {base_level}, {level}, {source_rank}"
        )));
    }
    if base_level > stratum {
        return Err(Error::OutOfRange(format!(
            "base level {base_level} must be at most the stratum {stratum}"
        )));
    }
    let q = multiplicity as u64;
    if q == 0 {
        return Ok(FittingCycle {
            strict_multiplicity: None,
            exceptional: Vec::new(),
        });
    }
    let upper = level.min(stratum + 1);
    let k = stratum as u64;
    Ok(FittingCycle {
        strict_multiplicity: (stratum >= level).then_some(q),
        exceptional: (base_level..upper)
            .map(|lvl| (lvl, q * (k + 1 - lvl as u64)))
            .collect(),
    })
}

/// Transfers a pair classification to its Grassmannian cone. The log
/// canonical, klt, and canonical memberships transfer unchanged; terminal
/// does not transfer and is capped at canonical. The mld does not transfer.
pub fn cone_class_from_pair(pair_class: &SingularityClass) -> SingularityClass {
    SingularityClass {
        tag: pair_class.tag.min(SingularityTag::Canonical),
        mld: None,
    }
}

/// Numeric data of the presentation of the normal cone to the locus of
/// multiple covers of lines: the cokernel is a matrix of shape
/// `(e-1) x (n-1)` taken in `d` copies with a free summand of rank
/// `extra_rank`, and the direct-sum cone criterion reads `d <= n - e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StratumData {
    pub coker_rows: u32,
    pub coker_cols: u32,
    pub copies: u32,
    pub extra_rank: u64,
    pub within_cone_criterion: bool,
}

pub fn kbm_stratum_data(n: u32, d: u32, e: u32) -> Result<StratumData> {
    if n < 2 {
        return Err(Error::OutOfRange("ambient dimension must be at least 2".into()));
    }
    if d < 1 {
        return Err(Error::OutOfRange("hypersurface degree must be at least 1".into()));
    }
    if e == 1 {
        return Err(Error::LinesCase);
    }
    if e < 2 {
        return Err(Error::OutOfRange("map degree must be at least 1".into()));
    }
    // rank of the order->=2 part of the vanishing filtration:
    // C(n+d, d) - (d+1) - (n-1)d
    let total = binomial(n as u64 + d as u64, d as u64)?;
    let lower = (d as u128 + 1) + (n as u128 - 1) * d as u128;
    if total < lower {
        return Err(Error::OutOfRange(format!(
            "filtration ranks are inconsistent for (n, d) = ({n}, {d})"
        )));
    }
    let extra_rank = u64::try_from(total - lower)
        .map_err(|_| Error::OutOfRange("filtration rank overflow".into()))?;
    Ok(StratumData {
        coker_rows: e - 1,
        coker_cols: n - 1,
        copies: d,
        extra_rank,
        within_cone_criterion: d + e <= n,
    })
}

fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut value: u128 = 1;
    for i in 0..k {
        value = value
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::OutOfRange("binomial overflow".into()))?;
        value /= (i + 1) as u128;
    }
    Ok(value)
}

/// Whether the main structure theorem applies to the triple `(n, d, e)`,
/// with the expected dimension `(n+1-d)e + (n-3)` of the space of degree-e
/// rational curves on a general degree-d hypersurface in `P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremStatus {
    pub applies: bool,
    pub status: String,
    pub expected_dim: i64,
}

pub fn main_theorem_status(n: u32, d: u32, e: u32) -> MainTheoremStatus {
    let applies = e >= 2 && d + e <= n;
    let status = if applies {
        "integral normal lci stack with canonical singularities".to_string()
    } else if e == 1 {
        "projective bundle over the Grassmannian of lines (smooth)".to_string()
    } else {
        format!("not applicable: d+e = {} > n = {n}", d + e)
    };
    let (n, d, e) = (n as i64, d as i64, e as i64);
    MainTheoremStatus {
        applies,
        status,
        expected_dim: (n + 1 - d) * e + (n - 3),
    }
}

/// Lines on a general degree-d hypersurface in `P^n`: empty when
/// `d > 2n-3`, otherwise smooth of dimension `2n-d-3`, and connected away
/// from the boundary cases `d = 2n-3` and `(d, n) = (2, 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinesStatus {
    pub nonempty_general: bool,
    pub smooth_expected_dim: Option<i64>,
    pub connected_general: bool,
}

pub fn lines_fano_status(n: u32, d: u32) -> Result<LinesStatus> {
    if n < 2 || d < 1 {
        return Err(Error::OutOfRange("need n >= 2 and d >= 1".into()));
    }
    let (n, d) = (n as i64, d as i64);
    let bound = 2 * n - 3;
    if d > bound {
        return Ok(LinesStatus {
            nonempty_general: false,
            smooth_expected_dim: None,
            connected_general: false,
        });
    }
    Ok(LinesStatus {
        nonempty_general: true,
        smooth_expected_dim: Some(bound - d),
        connected_general: d < bound && (d, n) != (2, 3),
    })
}
