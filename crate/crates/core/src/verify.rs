//! Closed forms against the oracles, one instance or a whole sweep.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::BettiTable;
use crate::closed_forms::{
    betti_top, check_bounds, closed_form_table, graded_table, homology_cycle_complement, pd_reg,
    pd_reg_line, BoundsReport,
};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_with, FieldSpec, HomologyDims};
use crate::oracle::{
    betti_table_facet, betti_table_sr, pd_from_table, reg_from_table, OracleConfig,
};
use crate::path_ideals::{
    build_cycle_complex, build_run_complex, facet_ideal, make_params, CycleParams,
};
use crate::simplicial::complement_complex;

/// A statement checked for one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Claim {
    TopColumn,
    PdRegDepth,
    ComplementHomology,
    GradedCounting,
    Bounds,
    DoubleOracle,
    FieldIndependence,
    LinePdReg,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::TopColumn => "top column",
            Claim::PdRegDepth => "pd/reg/depth",
            Claim::ComplementHomology => "complement homology",
            Claim::GradedCounting => "graded counting",
            Claim::Bounds => "vanishing bounds",
            Claim::DoubleOracle => "facet sum = Stanley-Reisner sum",
            Claim::FieldIndependence => "field independence",
            Claim::LinePdReg => "line pd/reg",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Match,
    Mismatch { detail: String },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: Claim,
    pub status: Status,
}

impl Check {
    fn compare<T: PartialEq + fmt::Display>(claim: Claim, closed: T, oracle: T) -> Check {
        let status = if closed == oracle {
            Status::Match
        } else {
            Status::Mismatch {
                detail: format!("closed form {closed}, oracle {oracle}"),
            }
        };
        Check { claim, status }
    }

    fn skipped(claim: Claim, reason: impl Into<String>) -> Check {
        Check {
            claim,
            status: Status::Skipped {
                reason: reason.into(),
            },
        }
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self.status, Status::Mismatch { .. })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Match => write!(f, "{}: match", self.claim),
            Status::Mismatch { detail } => write!(f, "{}: MISMATCH ({detail})", self.claim),
            Status::Skipped { reason } => write!(f, "{}: skipped ({reason})", self.claim),
        }
    }
}

/// Closed forms and oracle outputs for one `(n, m, l)` over one field.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub params: CycleParams,
    pub field: FieldSpec,
    pub closed_table: BettiTable,
    pub closed_complete: bool,
    pub oracle_table: Option<BettiTable>,
    pub complement_homology: Option<HomologyDims>,
    pub checks: Vec<Check>,
    pub duration_ms: u128,
}

impl RunReport {
    pub fn all_match(&self) -> bool {
        !self.checks.iter().any(Check::is_mismatch)
    }

    pub fn check(&self, claim: Claim) -> Option<&Check> {
        self.checks.iter().find(|c| c.claim == claim)
    }
}

/// Run every applicable check for one instance.
///
/// Resource-limit errors from the oracles are returned; the double-oracle check
/// alone is skipped when only the vertex-subset budget is exceeded.
pub fn verify_instance(params: &CycleParams, cfg: &OracleConfig) -> Result<RunReport> {
    let start = Instant::now();
    let n = params.n();
    let delta = build_cycle_complex(params);
    let closed = closed_form_table(params)?;
    let oracle = betti_table_facet(&delta, cfg)?;
    let mut checks = Vec::new();

    checks.push(Check::compare(
        Claim::TopColumn,
        betti_top(params).to_string(),
        oracle.column(n).to_string(),
    ));

    let (pd, reg) = pd_reg(params);
    let (opd, oreg) = (pd_from_table(&oracle), reg_from_table(&oracle));
    let mut pdreg = Check::compare(
        Claim::PdRegDepth,
        format!("pd={pd} reg={reg}"),
        format!("pd={opd} reg={oreg}"),
    );
    if n - pd != reg && !pdreg.is_mismatch() {
        pdreg.status = Status::Mismatch {
            detail: format!("depth n-pd={} differs from reg={reg}", n - pd),
        };
    }
    checks.push(pdreg);

    let comp = complement_complex(&delta, delta.vertex_set())?;
    let dims = reduced_homology_with(&comp, &cfg.homology_options())?;
    checks.push(Check::compare(
        Claim::ComplementHomology,
        homology_cycle_complement(params).to_dims(),
        dims.clone(),
    ));

    match graded_table(params)? {
        Some(graded) => checks.push(Check::compare(
            Claim::GradedCounting,
            graded.to_string(),
            oracle.filter_degrees(|j| j < n).to_string(),
        )),
        None => checks.push(Check::skipped(
            Claim::GradedCounting,
            "t = 1, deferred to the oracle",
        )),
    }

    checks.push(match check_bounds(params, &oracle) {
        BoundsReport::Ok { .. } => Check {
            claim: Claim::Bounds,
            status: Status::Match,
        },
        BoundsReport::Skipped { reason } => Check::skipped(Claim::Bounds, reason),
        BoundsReport::Violation { i, j, clause } => Check {
            claim: Claim::Bounds,
            status: Status::Mismatch {
                detail: format!("beta_{{{i},{j}}} = {} breaks {clause}", oracle.get(i, j)),
            },
        },
    });

    match betti_table_sr(&facet_ideal(&delta), cfg) {
        Ok(sr) => checks.push(Check::compare(
            Claim::DoubleOracle,
            oracle.to_string(),
            sr.to_string(),
        )),
        Err(e @ Error::ResourceLimit { .. }) => {
            checks.push(Check::skipped(Claim::DoubleOracle, e.to_string()))
        }
        Err(e) => return Err(e),
    }

    Ok(RunReport {
        params: *params,
        field: cfg.field,
        closed_table: closed.table,
        closed_complete: closed.complete,
        oracle_table: Some(oracle),
        complement_homology: Some(dims),
        checks,
        duration_ms: start.elapsed().as_millis(),
    })
}

/// `pd` and `reg` of `J_m(L_n)` from the oracle, converted from `R/J` to `J`.
pub fn verify_line(n: usize, m: usize, cfg: &OracleConfig) -> Result<Check> {
    let (pd, reg) = pd_reg_line(n, m)?;
    let run = build_run_complex(n - m + 1, m, 1)?;
    let table = betti_table_facet(&run, cfg)?;
    let opd = pd_from_table(&table) - 1;
    let oreg = reg_from_table(&table) + 1;
    Ok(Check::compare(
        Claim::LinePdReg,
        format!("pd={pd} reg={reg}"),
        format!("pd={opd} reg={oreg}"),
    ))
}

/// Outcome of one instance in a sweep.
#[derive(Clone, Debug, Serialize)]
pub enum SweepEntry {
    Done(RunReport),
    Failed {
        params: CycleParams,
        field: FieldSpec,
        error: String,
        resource_limit: bool,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    /// Cross-field comparisons, one per instance, when several fields are swept.
    pub field_checks: Vec<(CycleParams, Check)>,
    /// Raw triples in range that are not normalized valid parameters.
    pub skipped_triples: usize,
}

impl SweepReport {
    pub fn reports(&self) -> impl Iterator<Item = &RunReport> {
        self.entries.iter().filter_map(|e| match e {
            SweepEntry::Done(r) => Some(r),
            SweepEntry::Failed { .. } => None,
        })
    }

    pub fn failures(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| match e {
                SweepEntry::Done(r) => !r.all_match(),
                SweepEntry::Failed { .. } => true,
            })
            .count()
            + self
                .field_checks
                .iter()
                .filter(|(_, c)| c.is_mismatch())
                .count()
    }

    pub fn resource_limited(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| {
                matches!(
                    e,
                    SweepEntry::Failed {
                        resource_limit: true,
                        ..
                    }
                )
            })
            .count()
    }

    /// `(matched, mismatched, skipped)` for a claim across all reports.
    pub fn tally(&self, claim: Claim) -> (usize, usize, usize) {
        let mut out = (0, 0, 0);
        let checks = self.reports().filter_map(|r| r.check(claim)).chain(
            self.field_checks
                .iter()
                .map(|(_, c)| c)
                .filter(|c| c.claim == claim),
        );
        for c in checks {
            match c.status {
                Status::Match => out.0 += 1,
                Status::Mismatch { .. } => out.1 += 1,
                Status::Skipped { .. } => out.2 += 1,
            }
        }
        out
    }
}

/// Raw `(n, m, l)` with `2 <= m <= n` and `1 <= l <= n`, split into valid
/// normalized parameters and a count of the rest.
pub fn sweep_triples(min_n: usize, max_n: usize) -> (Vec<CycleParams>, usize) {
    let mut valid = Vec::new();
    let mut skipped = 0;
    for n in min_n.max(2)..=max_n {
        for m in 2..=n {
            for l in 1..=n {
                match make_params(n, m, l) {
                    Ok(p) if p.l() == l => valid.push(p),
                    _ => skipped += 1,
                }
            }
        }
    }
    (valid, skipped)
}

/// Verify every valid triple with `min_n <= n <= max_n` over each field.
pub fn sweep(min_n: usize, max_n: usize, fields: &[FieldSpec], base: &OracleConfig) -> SweepReport {
    let (triples, skipped_triples) = sweep_triples(min_n, max_n);
    let jobs: Vec<(CycleParams, FieldSpec)> = triples
        .iter()
        .flat_map(|p| fields.iter().map(move |&f| (*p, f)))
        .collect();
    let entries: Vec<SweepEntry> = jobs
        .par_iter()
        .map(|(params, field)| {
            let cfg = OracleConfig {
                field: *field,
                ..*base
            };
            match verify_instance(params, &cfg) {
                Ok(r) => SweepEntry::Done(r),
                Err(e) => SweepEntry::Failed {
                    params: *params,
                    field: *field,
                    error: e.to_string(),
                    resource_limit: e.is_resource_limit(),
                },
            }
        })
        .collect();
    let field_checks = if fields.len() > 1 {
        triples
            .iter()
            .map(|p| (*p, field_check(p, &entries)))
            .collect()
    } else {
        Vec::new()
    };
    SweepReport {
        entries,
        field_checks,
        skipped_triples,
    }
}

/// Oracle tables, complement homology and check outcomes must not depend on the field.
fn field_check(params: &CycleParams, entries: &[SweepEntry]) -> Check {
    let reports: Vec<&RunReport> = entries
        .iter()
        .filter_map(|e| match e {
            SweepEntry::Done(r) if r.params == *params => Some(r),
            _ => None,
        })
        .collect();
    let Some((first, rest)) = reports.split_first() else {
        return Check::skipped(Claim::FieldIndependence, "no field completed");
    };
    let summary = |r: &RunReport| {
        let statuses: Vec<bool> = r.checks.iter().map(|c| c.status == Status::Match).collect();
        (
            r.oracle_table.clone(),
            r.complement_homology.clone(),
            statuses,
        )
    };
    let base = summary(first);
    for r in rest {
        if summary(r) != base {
            return Check {
                claim: Claim::FieldIndependence,
                status: Status::Mismatch {
                    detail: format!("results over {} differ from {}", r.field, first.field),
                },
            };
        }
    }
    Check {
        claim: Claim::FieldIndependence,
        status: Status::Match,
    }
}
