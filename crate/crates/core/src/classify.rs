//! Per-`(n, d, e)` classification reports: coarse-space singularity type,
//! Gorenstein parity, conditional canonicity flags, canonical divisor
//! class, and the bigness test, with JSON and CSV emitters.

use crate::determinantal::{lines_fano_status, main_theorem_status};
use crate::error::{Error, Result};
use crate::picard::{self, BigHypotheses};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// Singularity type of the coarse space of unmarked degree-`e` rational
/// curves in `P^n`. The pairs `(e, n) = (2, 1)` and `(2, 2)` are excluded
/// (the coarse map is a gerbe there); the space is canonical exactly for
/// `n = 1, e >= 3` and `(e, n) = (2, 3)`, and terminal otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoarseSpace {
    Terminal,
    Canonical,
    Excluded,
}

impl fmt::Display for CoarseSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoarseSpace::Terminal => "terminal",
            CoarseSpace::Canonical => "canonical",
            CoarseSpace::Excluded => "excluded",
        })
    }
}

pub fn coarse_space_status(n: u32, e: u32) -> Result<CoarseSpace> {
    if n < 1 || e < 1 {
        return Err(Error::OutOfRange("need n >= 1 and e >= 1".into()));
    }
    if e == 2 && (n == 1 || n == 2) {
        return Ok(CoarseSpace::Excluded);
    }
    if (n == 1 && e >= 3) || (e == 2 && n == 3) {
        return Ok(CoarseSpace::Canonical);
    }
    Ok(CoarseSpace::Terminal)
}

/// Whether the coarse space is Gorenstein: yes unless both `e` and `n`
/// are even (excluded pairs aside).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GorensteinStatus {
    Yes,
    No,
    Excluded,
}

impl fmt::Display for GorensteinStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GorensteinStatus::Yes => "yes",
            GorensteinStatus::No => "no",
            GorensteinStatus::Excluded => "excluded",
        })
    }
}

pub fn gorenstein_status(n: u32, e: u32) -> Result<GorensteinStatus> {
    if n < 1 || e < 1 {
        return Err(Error::OutOfRange("need n >= 1 and e >= 1".into()));
    }
    if e == 2 && (n == 1 || n == 2) {
        return Ok(GorensteinStatus::Excluded);
    }
    if e % 2 == 0 && n % 2 == 0 {
        return Ok(GorensteinStatus::No);
    }
    Ok(GorensteinStatus::Yes)
}

/// Flags for the coarse space of the total space over the hypersurface
/// linear system: klt for `e >= 2` and `d+e <= n`; the coarse map is an
/// isomorphism away from codimension 2 for `e >= 3` and `d+e <= n`; and
/// the conjecture-conditional canonicity applies for `e >= 3, d+e <= n`
/// or `e = 2, d+3 <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoarseCdStatus {
    pub klt: bool,
    pub iso_away_codim2: bool,
    pub canonical_if_conjecture: bool,
}

pub fn coarse_cd_status(n: u32, d: u32, e: u32) -> CoarseCdStatus {
    CoarseCdStatus {
        klt: e >= 2 && d + e <= n,
        iso_away_codim2: e >= 3 && d + e <= n,
        canonical_if_conjecture: (e >= 3 && d + e <= n) || (e == 2 && d + 3 <= n),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportInput {
    pub n: u32,
    pub d: u32,
    pub e: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StackSection {
    pub theorem_applies: bool,
    pub status: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiberSection {
    pub expected_dim: i64,
    pub canonical_if_general: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoarseSection {
    pub status: String,
    pub gorenstein: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BignessSection {
    pub hypotheses_ok: bool,
    pub sufficient_test: bool,
}

/// Full classification record for a triple `(n, d, e)`. Deterministic for
/// fixed input; fields that do not apply carry an explicit reason. For
/// `(n, e) = (2, 2)` the class and bigness fields are null.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub input: ReportInput,
    #[serde(rename = "stack_Cd")]
    pub stack_cd: StackSection,
    #[serde(rename = "kbm_X")]
    pub kbm_x: FiberSection,
    #[serde(rename = "coarse_kbm_Pn")]
    pub coarse_kbm_pn: CoarseSection,
    #[serde(rename = "coarse_Cd")]
    pub coarse_cd: CoarseCdStatus,
    pub canonical_class: Option<String>,
    pub bigness: Option<BignessSection>,
    pub general_type_conditional: bool,
}

pub fn full_report(n: u32, d: u32, e: u32) -> Result<Report> {
    if n < 2 {
        return Err(Error::OutOfRange("ambient dimension must be at least 2".into()));
    }
    if d < 1 || e < 1 {
        return Err(Error::OutOfRange("need d >= 1 and e >= 1".into()));
    }

    let theorem = main_theorem_status(n, d, e);
    let status = if e == 1 {
        let lines = lines_fano_status(n, d)?;
        match lines.smooth_expected_dim {
            None => "smooth projective bundle; general fiber empty (d > 2n-3)".to_string(),
            Some(dim) => format!(
                "smooth projective bundle; general fiber smooth of dimension {dim}{}",
                if lines.connected_general { "; connected" } else { "" }
            ),
        }
    } else {
        theorem.status.clone()
    };

    let coarse = if e == 1 {
        let reason = "not applicable: e = 1 (lines; trivial stabilizers)".to_string();
        CoarseSection {
            status: reason.clone(),
            gorenstein: reason,
        }
    } else {
        CoarseSection {
            status: coarse_space_status(n, e)?.to_string(),
            gorenstein: gorenstein_status(n, e)?.to_string(),
        }
    };

    let coarse_cd = coarse_cd_status(n, d, e);

    let (canonical_class, bigness) = if (n, e) == (2, 2) {
        (None, None)
    } else {
        let class = picard::canonical_hypersurface(n, d, e)?;
        let hypotheses_ok = 2 * d < n + 1;
        let test = picard::is_big_sufficient(
            &class,
            BigHypotheses {
                birational_generic: hypotheses_ok,
                irreducible_generic: hypotheses_ok,
            },
        )?;
        (
            Some(class.render()),
            Some(BignessSection {
                hypotheses_ok,
                sufficient_test: test.big,
            }),
        )
    };

    let general_type_conditional = coarse_cd.canonical_if_conjecture
        && bigness.map_or(false, |b| b.sufficient_test);

    Ok(Report {
        input: ReportInput { n, d, e },
        stack_cd: StackSection {
            theorem_applies: theorem.applies,
            status,
        },
        kbm_x: FiberSection {
            expected_dim: theorem.expected_dim,
            canonical_if_general: theorem.applies,
        },
        coarse_kbm_pn: coarse,
        coarse_cd,
        canonical_class,
        bigness,
        general_type_conditional,
    })
}

/// Report filters accepted by `scan`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportFilter {
    TheoremApplies,
    Big,
    GeneralTypeConditional,
    Klt,
    IsoAwayCodim2,
    Gorenstein(String),
    Coarse(String),
}

impl std::str::FromStr for ReportFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem_applies" => Ok(Self::TheoremApplies),
            "big" => Ok(Self::Big),
            "general_type_conditional" => Ok(Self::GeneralTypeConditional),
            "klt" => Ok(Self::Klt),
            "iso_away_codim2" => Ok(Self::IsoAwayCodim2),
            _ => {
                if let Some(value) = s.strip_prefix("gorenstein=") {
                    if !["yes", "no", "excluded"].contains(&value) {
                        return Err(Error::UnknownFilter(s.to_string()));
                    }
                    Ok(Self::Gorenstein(value.to_string()))
                } else if let Some(value) = s.strip_prefix("coarse=") {
                    if !["terminal", "canonical", "excluded"].contains(&value) {
                        return Err(Error::UnknownFilter(s.to_string()));
                    }
                    Ok(Self::Coarse(value.to_string()))
                } else {
                    Err(Error::UnknownFilter(s.to_string()))
                }
            }
        }
    }
}

impl ReportFilter {
    pub fn matches(&self, report: &Report) -> bool {
        match self {
            Self::TheoremApplies => report.stack_cd.theorem_applies,
            Self::Big => report.bigness.map_or(false, |b| b.sufficient_test),
            Self::GeneralTypeConditional => report.general_type_conditional,
            Self::Klt => report.coarse_cd.klt,
            Self::IsoAwayCodim2 => report.coarse_cd.iso_away_codim2,
            Self::Gorenstein(value) => report.coarse_kbm_pn.gorenstein == *value,
            Self::Coarse(value) => report.coarse_kbm_pn.status == *value,
        }
    }
}

/// Inclusive-range scan in lexicographic `(n, d, e)` order. Triples are
/// classified in parallel; the output order is restored by sorting.
pub fn scan(
    n_range: (u32, u32),
    d_range: (u32, u32),
    e_range: (u32, u32),
    filter: Option<&ReportFilter>,
) -> Result<Vec<Report>> {
    for (name, (lo, hi)) in [("n", n_range), ("d", d_range), ("e", e_range)] {
        if lo > hi {
            return Err(Error::BadRange(format!("{name}: {lo}..{hi}")));
        }
    }
    let mut triples = Vec::new();
    for n in n_range.0..=n_range.1 {
        for d in d_range.0..=d_range.1 {
            for e in e_range.0..=e_range.1 {
                triples.push((n, d, e));
            }
        }
    }
    let mut reports = triples
        .into_par_iter()
        .map(|(n, d, e)| full_report(n, d, e))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| (r.input.n, r.input.d, r.input.e));
    if let Some(filter) = filter {
        reports.retain(|r| filter.matches(r));
    }
    Ok(reports)
}

/// CSV rendering: one row per report, columns in report field order.
pub fn reports_to_csv(reports: &[Report]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "n",
            "d",
            "e",
            "theorem_applies",
            "stack_status",
            "expected_dim",
            "canonical_if_general",
            "coarse_status",
            "gorenstein",
            "klt",
            "iso_away_codim2",
            "canonical_if_conjecture",
            "canonical_class",
            "bigness_hypotheses_ok",
            "bigness_sufficient_test",
            "general_type_conditional",
        ])
        .expect("writing to a vec cannot fail");
    for report in reports {
        writer
            .write_record([
                report.input.n.to_string(),
                report.input.d.to_string(),
                report.input.e.to_string(),
                report.stack_cd.theorem_applies.to_string(),
                report.stack_cd.status.clone(),
                report.kbm_x.expected_dim.to_string(),
                report.kbm_x.canonical_if_general.to_string(),
                report.coarse_kbm_pn.status.clone(),
                report.coarse_kbm_pn.gorenstein.clone(),
                report.coarse_cd.klt.to_string(),
                report.coarse_cd.iso_away_codim2.to_string(),
                report.coarse_cd.canonical_if_conjecture.to_string(),
                report.canonical_class.clone().unwrap_or_default(),
                report
                    .bigness
                    .map(|b| b.hypotheses_ok.to_string())
                    .unwrap_or_default(),
                report
                    .bigness
                    .map(|b| b.sufficient_test.to_string())
                    .unwrap_or_default(),
                report.general_type_conditional.to_string(),
            ])
            .expect("writing to a vec cannot fail");
    }
    String::from_utf8(writer.into_inner().expect("vec writer never errors"))
        .expect("csv output is utf-8")
}
