//! Closed-form homology, Betti numbers, pd, reg and depth for path ideals of
//! cycles, plus pd and reg of path ideals of lines.
//!
//! Everything here is arithmetic on [`CycleParams`] and run lengths, except the
//! graded count, which walks the induced facet subsets of `Δ_{m,l}(C_n)` and
//! classifies their runs; no homology is computed.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::homology::HomologyDims;
use crate::path_ideals::{build_cycle_complex, CycleParams, RunProfile};
use crate::simplicial::{connected_components, is_induced_mask};

/// A homology prediction with at most one nonzero degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyAnswer {
    pub nonzero_degree: Option<isize>,
    pub dimension: usize,
}

impl HomologyAnswer {
    pub fn zero() -> Self {
        HomologyAnswer {
            nonzero_degree: None,
            dimension: 0,
        }
    }

    pub fn at(degree: isize, dimension: usize) -> Self {
        if dimension == 0 {
            return Self::zero();
        }
        HomologyAnswer {
            nonzero_degree: Some(degree),
            dimension,
        }
    }

    pub fn to_dims(self) -> HomologyDims {
        match self.nonzero_degree {
            Some(deg) => HomologyDims::single(deg, self.dimension),
            None => HomologyDims::zero(),
        }
    }
}

impl fmt::Display for HomologyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_dims().fmt(f)
    }
}

/// `E(s_1, ..., s_r)` when `t = 1`: `K` in degree `Σ s_j - 2`.
pub fn homology_e_t1(run_lengths: &[usize]) -> HomologyAnswer {
    let total: usize = run_lengths.iter().sum();
    HomologyAnswer::at(total as isize - 2, 1)
}

/// `E` of an eligible profile when `t >= 2`: `K` in degree `2(P+Q) + 2β + α - 2`.
pub fn homology_e_profile(profile: &RunProfile) -> HomologyAnswer {
    let pq = profile.big_p() + profile.big_q();
    let deg = 2 * pq + 2 * profile.beta() + profile.alpha();
    HomologyAnswer::at(deg as isize - 2, 1)
}

/// `E(s_1, ..., s_r)` for any `t >= 1`. For `t >= 2` a run whose length is
/// `≢ 1, 2 (mod t+1)` kills all homology.
pub fn homology_e_runs(run_lengths: &[usize], t: usize) -> HomologyAnswer {
    if t == 1 {
        return homology_e_t1(run_lengths);
    }
    match RunProfile::classify(run_lengths, t) {
        Some(profile) => homology_e_profile(&profile),
        None => HomologyAnswer::zero(),
    }
}

/// `E` of a single run of length `p(t+1) + d`, `t >= 2`.
pub fn homology_single_run(p: usize, d: usize) -> HomologyAnswer {
    match d {
        1 => HomologyAnswer::at(2 * p as isize - 1, 1),
        2 => HomologyAnswer::at(2 * p as isize, 1),
        _ => HomologyAnswer::zero(),
    }
}

/// Reduced homology of the complement of `Δ_{m,l}(C_n)` in its vertex set.
pub fn homology_cycle_complement(params: &CycleParams) -> HomologyAnswer {
    let (t, p, d) = (params.t(), params.p(), params.d());
    if t == 1 {
        return HomologyAnswer::at(params.k() as isize - 2, 1);
    }
    if d == 0 {
        if p > 0 {
            HomologyAnswer::at(2 * p as isize - 2, t)
        } else {
            HomologyAnswer::zero()
        }
    } else {
        HomologyAnswer::at(2 * p as isize - 1, 1)
    }
}

/// Column `j = n`: `β_{2p,n} = t` if `d = 0`, else `β_{2p+1,n} = 1`.
pub fn betti_top(params: &CycleParams) -> BettiTable {
    let mut table = BettiTable::new();
    let (n, p) = (params.n(), params.p());
    if params.d() == 0 {
        table.add(2 * p, n, params.t() as u64);
    } else {
        table.add(2 * p + 1, n, 1);
    }
    table
}

/// Outcome of the graded count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GradedCount {
    Count(u64),
    /// `t = 1`: no counting rule is available; use the oracle.
    DeferredToOracle,
}

/// All `β_{i,j}` with `j < n` by counting induced subcollections whose runs are
/// all `≡ 1, 2 (mod t+1)`. Includes `β_{0,0} = 1`. `None` when `t = 1`.
pub fn graded_table(params: &CycleParams) -> Result<Option<BettiTable>> {
    let t = params.t();
    if t == 1 {
        return Ok(None);
    }
    let (l, m) = (params.l(), params.m());
    let delta = build_cycle_complex(params);
    let q = delta.num_facets();
    if q > 63 {
        return Err(Error::ResourceLimit {
            what: "facet subset enumeration",
            size: 1u128 << q.min(127),
            budget: 1 << 63,
        });
    }
    let full = (1u64 << q) - 1;
    let mut table = BettiTable::unit();
    for mask in 1..full {
        if !is_induced_mask(&delta, mask) {
            continue;
        }
        let members: Vec<usize> = (0..q).filter(|i| mask >> i & 1 == 1).collect();
        let runs = connected_components(&delta, &members).cyclic_runs()?;
        let Some(profile) = RunProfile::classify(&runs, t) else {
            continue;
        };
        let pq = profile.big_p() + profile.big_q();
        let (alpha, beta) = (profile.alpha(), profile.beta());
        let i = 2 * pq + 2 * beta + alpha;
        let j = (pq * (t + 1) + beta) * l + m * (alpha + beta);
        let window = delta.union_of_mask(mask).len();
        if j != window {
            return Err(Error::Consistency(format!(
                "runs {runs:?} predict {j} vertices but the subcollection has {window}"
            )));
        }
        table.add(i, j, 1);
    }
    Ok(Some(table))
}

/// `β_{i,j}(R/I_{m,l}(C_n))` for `j < n` by the counting rule.
pub fn betti_graded_cycle(params: &CycleParams, i: usize, j: usize) -> Result<GradedCount> {
    if j >= params.n() || i > j {
        return Err(Error::Precondition(format!(
            "need i <= j < n, got i={i}, j={j}, n={}",
            params.n()
        )));
    }
    Ok(match graded_table(params)? {
        Some(table) => GradedCount::Count(table.get(i, j)),
        None => GradedCount::DeferredToOracle,
    })
}

/// Closed-form table: graded part plus top column. `complete` is false when the
/// graded part is deferred (`t = 1`), in which case only the top column and
/// `β_{0,0}` are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormTable {
    pub table: BettiTable,
    pub complete: bool,
}

pub fn closed_form_table(params: &CycleParams) -> Result<ClosedFormTable> {
    let (mut table, complete) = match graded_table(params)? {
        Some(t) => (t, true),
        None => (BettiTable::unit(), false),
    };
    table.merge(&betti_top(params));
    Ok(ClosedFormTable { table, complete })
}

/// `(pd(R/I), reg(R/I))`.
pub fn pd_reg(params: &CycleParams) -> (usize, usize) {
    let (n, p) = (params.n(), params.p());
    if params.d() == 0 {
        (2 * p, n - 2 * p)
    } else {
        (2 * p + 1, n - 2 * p - 1)
    }
}

/// `depth(R/I) = n - pd`, which coincides with `reg`.
pub fn depth(params: &CycleParams) -> usize {
    let (pd, reg) = pd_reg(params);
    let depth = params.n() - pd;
    assert_eq!(
        depth, reg,
        "depth and regularity formulas disagree for {params}"
    );
    depth
}

/// `(pd(J), reg(J))` for the ideal `J = J_m(L_n)` of all paths of length `m` on a
/// line with `n` vertices (step 1).
pub fn pd_reg_line(n: usize, m: usize) -> Result<(usize, usize)> {
    if m < 2 || n < m {
        return Err(Error::InvalidParams(format!(
            "a line path ideal needs 2 <= m <= n, got m={m}, n={n}"
        )));
    }
    let (p, d) = n.div_rem(&(m + 1));
    Ok(if d == m {
        (2 * p, p * (m - 1) + m)
    } else {
        (2 * p - 1, p * (m - 1) + 1)
    })
}

/// Which vanishing bound an entry broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundClause {
    /// `j <= m·i`
    DegreeAtMostMI,
    /// `i < 2p` when `d = 0`
    HomologicalDegreeD0,
    /// `i <= 2p + 1` when `d != 0`
    HomologicalDegreeD,
    /// `j - i <= n - 2p` (`d = 0`) or `n - 2p - 2` (`d != 0`)
    Regularity,
}

impl fmt::Display for BoundClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundClause::DegreeAtMostMI => "j <= m*i",
            BoundClause::HomologicalDegreeD0 => "i < 2p (d = 0)",
            BoundClause::HomologicalDegreeD => "i <= 2p+1 (d != 0)",
            BoundClause::Regularity => "j - i <= n-2p (d = 0) or n-2p-2 (d != 0)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BoundsReport {
    Skipped {
        reason: String,
    },
    Ok {
        entries_checked: usize,
    },
    Violation {
        i: usize,
        j: usize,
        clause: BoundClause,
    },
}

impl BoundsReport {
    pub fn is_violation(&self) -> bool {
        matches!(self, BoundsReport::Violation { .. })
    }
}

/// Check every entry with `0 < j` against `j <= m·i`, and every entry with
/// `0 < j < n` against the `i` and `j - i` bounds. Only for `t >= 2`.
pub fn check_bounds(params: &CycleParams, table: &BettiTable) -> BoundsReport {
    if params.t() == 1 {
        return BoundsReport::Skipped {
            reason: format!("t = 1 for {params}; the bounds are stated for t >= 2"),
        };
    }
    let (n, m, p, d) = (params.n(), params.m(), params.p(), params.d());
    let mut checked = 0;
    for e in table.entries().filter(|e| e.j > 0) {
        let (i, j) = (e.i, e.j);
        checked += 1;
        let violation = |clause| BoundsReport::Violation { i, j, clause };
        if j > m * i {
            return violation(BoundClause::DegreeAtMostMI);
        }
        if j >= n {
            continue;
        }
        if d == 0 && i >= 2 * p {
            return violation(BoundClause::HomologicalDegreeD0);
        }
        if d != 0 && i > 2 * p + 1 {
            return violation(BoundClause::HomologicalDegreeD);
        }
        let limit = if d == 0 {
            n - 2 * p
        } else {
            (n - 2 * p).saturating_sub(2)
        };
        if j - i > limit {
            return violation(BoundClause::Regularity);
        }
    }
    BoundsReport::Ok {
        entries_checked: checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_ideals::make_params;

    fn params(n: usize, m: usize, l: usize) -> CycleParams {
        make_params(n, m, l).unwrap()
    }

    #[test]
    fn e_complexes_with_t1() {
        assert_eq!(homology_e_t1(&[1]), HomologyAnswer::at(-1, 1));
        assert_eq!(homology_e_t1(&[2]), HomologyAnswer::at(0, 1));
        assert_eq!(homology_e_t1(&[2, 1]), HomologyAnswer::at(1, 1));
    }

    #[test]
    fn e_profiles() {
        let single = |alpha: &[usize], beta: &[usize]| {
            homology_e_profile(&RunProfile {
                alpha_runs: alpha.to_vec(),
                beta_runs: beta.to_vec(),
            })
        };
        assert_eq!(single(&[0], &[]), HomologyAnswer::at(-1, 1));
        assert_eq!(single(&[], &[0]), HomologyAnswer::at(0, 1));
        assert_eq!(single(&[1], &[0]), HomologyAnswer::at(3, 1));
        assert_eq!(homology_e_runs(&[4, 2], 2), HomologyAnswer::at(3, 1));
        assert_eq!(homology_e_runs(&[3], 2), HomologyAnswer::zero());
        // profiles with one run agree with the single-run form
        for p in 0..4 {
            assert_eq!(single(&[p], &[]), homology_single_run(p, 1));
            assert_eq!(single(&[], &[p]), homology_single_run(p, 2));
        }
    }

    #[test]
    fn single_runs() {
        assert_eq!(homology_single_run(0, 1), HomologyAnswer::at(-1, 1));
        assert_eq!(homology_single_run(1, 0), HomologyAnswer::zero());
        assert_eq!(homology_single_run(1, 2), HomologyAnswer::at(2, 1));
    }

    #[test]
    fn cycle_complements() {
        assert_eq!(
            homology_cycle_complement(&params(4, 3, 2)),
            HomologyAnswer::at(0, 1)
        );
        assert_eq!(
            homology_cycle_complement(&params(6, 3, 2)),
            HomologyAnswer::at(1, 1)
        );
        let p = params(16, 7, 2);
        assert_eq!((p.t(), p.p(), p.d()), (3, 2, 0));
        assert_eq!(homology_cycle_complement(&p), HomologyAnswer::at(2, 3));
        assert_eq!(
            HomologyAnswer::at(2, 3).to_dims(),
            HomologyDims::single(2, 3)
        );
    }

    #[test]
    fn top_column() {
        assert_eq!(betti_top(&params(4, 3, 2)).to_string(), "{(2,4):1}");
        assert_eq!(betti_top(&params(6, 3, 2)).to_string(), "{(3,6):1}");
        assert_eq!(betti_top(&params(6, 5, 3)).to_string(), "{(2,6):1}");
    }

    #[test]
    fn graded_counts() {
        let p = params(12, 11, 4);
        assert_eq!(
            betti_graded_cycle(&p, 1, 11).unwrap(),
            GradedCount::Count(3)
        );
        assert_eq!(betti_graded_cycle(&p, 0, 0).unwrap(), GradedCount::Count(1));
        assert_eq!(
            betti_graded_cycle(&params(6, 3, 2), 1, 3).unwrap(),
            GradedCount::DeferredToOracle
        );
        assert!(betti_graded_cycle(&p, 1, 12).is_err());
    }

    #[test]
    fn closed_tables() {
        let c = closed_form_table(&params(12, 11, 4)).unwrap();
        assert!(c.complete);
        assert_eq!(c.table.get(0, 0), 1);
        let c = closed_form_table(&params(4, 3, 2)).unwrap();
        assert!(!c.complete);
        assert_eq!(c.table.to_string(), "{(0,0):1,(2,4):1}");
    }

    #[test]
    fn pd_reg_depth() {
        assert_eq!(pd_reg(&params(4, 3, 2)), (2, 2));
        assert_eq!(pd_reg(&params(6, 3, 2)), (3, 3));
        assert_eq!(pd_reg(&params(5, 5, 1)), (1, 4));
        assert_eq!(depth(&params(4, 3, 2)), 2);
        assert_eq!(depth(&params(6, 3, 2)), 3);
        assert_eq!(depth(&params(7, 7, 1)), 6);
    }

    #[test]
    fn line_formulas() {
        assert_eq!(pd_reg_line(5, 2).unwrap(), (2, 3));
        assert_eq!(pd_reg_line(3, 3).unwrap(), (0, 3));
        assert_eq!(pd_reg_line(4, 2).unwrap(), (1, 2));
        assert!(pd_reg_line(2, 3).is_err());
    }

    #[test]
    fn bounds() {
        let p = params(6, 3, 2);
        assert!(matches!(
            check_bounds(&p, &BettiTable::unit()),
            BoundsReport::Skipped { .. }
        ));
        let p = params(12, 11, 4);
        let table = closed_form_table(&p).unwrap().table;
        assert!(matches!(check_bounds(&p, &table), BoundsReport::Ok { .. }));
        // C_4 edge ideal: beta_{1,2} = 4 has j - i = 1 > n - 2p - 2 = 0
        let p4 = params(4, 2, 1);
        let mut c4 = BettiTable::unit();
        c4.add(1, 2, 4);
        c4.add(2, 3, 4);
        c4.add(3, 4, 1);
        assert_eq!(
            check_bounds(&p4, &c4),
            BoundsReport::Violation {
                i: 1,
                j: 2,
                clause: BoundClause::Regularity
            }
        );
        let mut bad = BettiTable::new();
        bad.add(1, 12, 1);
        assert_eq!(
            check_bounds(&p, &bad),
            BoundsReport::Violation {
                i: 1,
                j: 12,
                clause: BoundClause::DegreeAtMostMI
            }
        );
    }
}
