//! Brute-force graded Betti numbers of squarefree monomial ideals.
//!
//! Two independent Hochster-type sums:
//!
//! * over induced subcollections `Γ` of the facet complex `Δ(I)`:
//!   `β_{i,j}(R/I) = Σ_{|V(Γ)| = j} dim H̃_{i-2}(Γ^c_{V(Γ)})`;
//! * over vertex subsets `W` of the Stanley-Reisner complex `N(I)`:
//!   `β_{i,j}(R/I) = Σ_{|W| = j} dim H̃_{j-i-1}(N(I)|_W)`.
//!
//! Neither knows anything about path ideals; they are the ground truth the
//! closed forms are checked against.

use rayon::prelude::*;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::homology::{
    reduced_homology_with, FieldSpec, HomologyOptions, Strategy, DEFAULT_FACE_BUDGET,
};
use crate::path_ideals::MonomialIdeal;
use crate::simplicial::{complement_complex, SimplicialComplex};
use crate::vertex_set::VertexSet;

pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub field: FieldSpec,
    /// Cap on `2^(#facets)` for the facet sum.
    pub facet_subset_budget: u64,
    /// Cap on `2^n` for the Stanley-Reisner sum.
    pub vertex_subset_budget: u64,
    /// Cap on faces per homology computation.
    pub face_budget: usize,
    pub strategy: Strategy,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            field: FieldSpec::default(),
            facet_subset_budget: DEFAULT_SUBSET_BUDGET,
            vertex_subset_budget: DEFAULT_SUBSET_BUDGET,
            face_budget: DEFAULT_FACE_BUDGET,
            strategy: Strategy::default(),
            parallel: true,
        }
    }
}

impl OracleConfig {
    pub fn with_field(field: FieldSpec) -> Self {
        OracleConfig {
            field,
            ..Self::default()
        }
    }

    pub fn homology_options(&self) -> HomologyOptions {
        HomologyOptions {
            field: self.field,
            face_budget: self.face_budget,
            strategy: self.strategy,
        }
    }
}

fn check_subset_budget(what: &'static str, count: u32, budget: u64) -> Result<u64> {
    if count >= 63 || (1u64 << count) > budget {
        return Err(Error::ResourceLimit {
            what,
            size: if count >= 127 {
                u128::MAX
            } else {
                1u128 << count
            },
            budget: budget as u128,
        });
    }
    Ok(1u64 << count)
}

/// Masks of `q` bits grouped by popcount, ascending (Gosper's hack within a size).
fn masks_of_size(q: u32, size: u32) -> Vec<u64> {
    if size == 0 || size > q {
        return if size == 0 { vec![0] } else { Vec::new() };
    }
    let limit = 1u64 << q;
    let mut out = Vec::new();
    let mut x = (1u64 << size) - 1;
    while x < limit {
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// Apply `f` to every item and sum the resulting tables, in parallel if asked.
fn accumulate<T, F>(items: Vec<T>, parallel: bool, f: F) -> Result<BettiTable>
where
    T: Send + Sync,
    F: Fn(&T, &mut BettiTable) -> Result<()> + Send + Sync,
{
    if parallel {
        items
            .par_iter()
            .try_fold(BettiTable::new, |mut acc, item| {
                f(item, &mut acc)?;
                Ok(acc)
            })
            .try_reduce(BettiTable::new, |mut a, b| {
                a.merge(&b);
                Ok(a)
            })
    } else {
        let mut acc = BettiTable::new();
        for item in &items {
            f(item, &mut acc)?;
        }
        Ok(acc)
    }
}

/// Betti table of `R/I(Δ)` from the facet-complex sum.
pub fn betti_table_facet(delta: &SimplicialComplex, cfg: &OracleConfig) -> Result<BettiTable> {
    if delta.facets().iter().any(|f| f.is_empty()) {
        return Err(Error::Precondition(
            "the empty facet gives the unit ideal".into(),
        ));
    }
    let q = delta.num_facets() as u32;
    check_subset_budget("facet subset enumeration", q, cfg.facet_subset_budget)?;
    let opts = cfg.homology_options();
    let mut table = BettiTable::unit();
    for size in 1..=q {
        let masks = masks_of_size(q, size);
        let part = accumulate(masks, cfg.parallel, |&mask, acc| {
            let window = delta.union_of_mask(mask);
            if delta.mask_within(window) != mask {
                return Ok(());
            }
            let gamma = SimplicialComplex::from_facets(
                (0..q as usize)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| delta.facets()[i]),
            );
            let comp = complement_complex(&gamma, window)?;
            let dims = reduced_homology_with(&comp, &opts)?;
            for (deg, dim) in dims.nonzero() {
                acc.add((deg + 2) as usize, window.len(), dim as u64);
            }
            Ok(())
        })?;
        table.merge(&part);
    }
    Ok(table)
}

fn contains_generator(ideal: &MonomialIdeal, w: VertexSet) -> bool {
    ideal.generators().iter().any(|g| g.is_subset(w))
}

/// `N(I)`: maximal subsets of `1..n` containing no generator support.
pub fn stanley_reisner_complex(
    ideal: &MonomialIdeal,
    cfg: &OracleConfig,
) -> Result<SimplicialComplex> {
    let n = ideal.num_vars();
    let count = check_subset_budget(
        "vertex subset enumeration",
        n as u32,
        cfg.vertex_subset_budget,
    )?;
    let all = VertexSet::full(n);
    let facets: Vec<VertexSet> = (0..count)
        .map(|bits| VertexSet::from_bits(bits as u128))
        .filter(|&w| {
            !contains_generator(ideal, w)
                && all
                    .difference(w)
                    .iter()
                    .all(|v| contains_generator(ideal, w | VertexSet::singleton(v)))
        })
        .collect();
    SimplicialComplex::new(all, facets)
}

/// Betti table of `R/I` from the Stanley-Reisner sum (including `W = ∅`, which
/// contributes `β_{0,0}`).
pub fn betti_table_sr(ideal: &MonomialIdeal, cfg: &OracleConfig) -> Result<BettiTable> {
    let sr = stanley_reisner_complex(ideal, cfg)?;
    let n = ideal.num_vars();
    let count = 1u64 << n;
    let opts = cfg.homology_options();
    let windows: Vec<u64> = (0..count).collect();
    accumulate(windows, cfg.parallel, |&bits, acc| {
        let w = VertexSet::from_bits(bits as u128);
        let restricted = SimplicialComplex::new(w, sr.facets().iter().map(|&f| f & w))?;
        let dims = reduced_homology_with(&restricted, &opts)?;
        let j = w.len();
        for (deg, dim) in dims.nonzero() {
            let i = j as isize - 1 - deg;
            debug_assert!(i >= 0);
            acc.add(i as usize, j, dim as u64);
        }
        Ok(())
    })
}

/// `pd(R/I)` read off a table; 0 for an empty table.
pub fn pd_from_table(table: &BettiTable) -> usize {
    table.projective_dimension().unwrap_or(0)
}

/// `reg(R/I)` read off a table; 0 for an empty table.
pub fn reg_from_table(table: &BettiTable) -> usize {
    table.regularity().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path_ideals::{build_cycle_complex, facet_ideal, make_params};

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn table(entries: &[(usize, usize, u64)]) -> BettiTable {
        let mut t = BettiTable::new();
        for &(i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    #[test]
    fn gosper_masks() {
        assert_eq!(
            masks_of_size(4, 2),
            vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
        );
        assert_eq!(masks_of_size(3, 0), vec![0]);
        assert!(masks_of_size(2, 3).is_empty());
    }

    #[test]
    fn c4_path_ideal() {
        let delta = build_cycle_complex(&make_params(4, 3, 2).unwrap());
        let cfg = OracleConfig::default();
        let expect = table(&[(0, 0, 1), (1, 3, 2), (2, 4, 1)]);
        assert_eq!(betti_table_facet(&delta, &cfg).unwrap(), expect);
        assert_eq!(betti_table_sr(&facet_ideal(&delta), &cfg).unwrap(), expect);
        assert_eq!(pd_from_table(&expect), 2);
        assert_eq!(reg_from_table(&expect), 2);
    }

    #[test]
    fn c6_path_ideal() {
        let delta = build_cycle_complex(&make_params(6, 3, 2).unwrap());
        let cfg = OracleConfig::default();
        let expect = table(&[(0, 0, 1), (1, 3, 3), (2, 5, 3), (3, 6, 1)]);
        assert_eq!(betti_table_facet(&delta, &cfg).unwrap(), expect);
        assert_eq!(betti_table_sr(&facet_ideal(&delta), &cfg).unwrap(), expect);
        assert_eq!((pd_from_table(&expect), reg_from_table(&expect)), (3, 3));
    }

    #[test]
    fn principal_ideal() {
        let cfg = OracleConfig::default();
        let simplex = SimplicialComplex::from_facets([VertexSet::full(5)]);
        let expect = table(&[(0, 0, 1), (1, 5, 1)]);
        assert_eq!(betti_table_facet(&simplex, &cfg).unwrap(), expect);
        let ideal = MonomialIdeal::new(5, vec![VertexSet::full(5)]).unwrap();
        assert_eq!(betti_table_sr(&ideal, &cfg).unwrap(), expect);
        let sr = stanley_reisner_complex(&ideal, &cfg).unwrap();
        assert_eq!(sr.num_facets(), 5);
        assert!(sr.facets().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn stanley_reisner_complexes() {
        let cfg = OracleConfig::default();
        let i = MonomialIdeal::new(4, vec![vs(&[1, 2, 3]), vs(&[1, 3, 4])]).unwrap();
        let sr = stanley_reisner_complex(&i, &cfg).unwrap();
        // maximal generator-free subsets of {1,2,3,4}, checked by hand
        assert_eq!(
            sr.sorted_facets(),
            vec![vs(&[1, 2, 4]), vs(&[1, 3]), vs(&[2, 3, 4])]
        );
        let i = MonomialIdeal::new(2, vec![vs(&[1])]).unwrap();
        assert_eq!(
            stanley_reisner_complex(&i, &cfg).unwrap().facets(),
            &[vs(&[2])]
        );
    }

    #[test]
    fn zero_ideal_and_unit_ideal() {
        let cfg = OracleConfig::default();
        let void = SimplicialComplex::void(VertexSet::full(3));
        assert_eq!(betti_table_facet(&void, &cfg).unwrap(), BettiTable::unit());
        let unit = SimplicialComplex::empty_face(VertexSet::full(3));
        assert!(betti_table_facet(&unit, &cfg).is_err());
    }

    #[test]
    fn budgets() {
        let delta = build_cycle_complex(&make_params(12, 2, 1).unwrap());
        let cfg = OracleConfig {
            facet_subset_budget: 1 << 10,
            vertex_subset_budget: 1 << 10,
            ..OracleConfig::default()
        };
        assert!(betti_table_facet(&delta, &cfg)
            .unwrap_err()
            .is_resource_limit());
        assert!(betti_table_sr(&facet_ideal(&delta), &cfg)
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn sequential_matches_parallel() {
        let delta = build_cycle_complex(&make_params(8, 3, 1).unwrap());
        let par = OracleConfig::default();
        let seq = OracleConfig {
            parallel: false,
            ..par
        };
        assert_eq!(
            betti_table_facet(&delta, &par).unwrap(),
            betti_table_facet(&delta, &seq).unwrap()
        );
    }
}
