//! Homotopy-preserving shrinking of facet-presented complexes.
//!
//! Two moves, both exact for reduced homology:
//!
//! * removing a dominated vertex `v` (every facet through `v` also contains some
//!   `w != v`): the link of `v` is then a cone, so deleting `v` is a strong
//!   deformation retraction;
//! * replacing a complex by the nerve of its facet cover: all intersections of
//!   facets are simplices or empty, so the nerve lemma applies.
//!
//! The nerve of `<F_1, ..., F_q>` has vertex `i` for facet `F_i`, and its facets
//! are the maximal sets `{i : v ∈ F_i}` over vertices `v`.

use crate::simplicial::{maximal_sets, SimplicialComplex};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Repeatedly delete dominated vertices until none is left.
pub fn core_complex(delta: &SimplicialComplex) -> SimplicialComplex {
    let mut facets = delta.facets().to_vec();
    loop {
        let mut changed = false;
        let verts = facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc | f);
        for v in verts.iter() {
            let common = facets
                .iter()
                .filter(|f| f.contains(v))
                .fold(verts, |acc, &f| acc & f);
            if common.len() > 1 {
                for f in facets.iter_mut() {
                    f.remove(v);
                }
                facets = maximal_sets(facets);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    SimplicialComplex::new(delta.universe(), facets).expect("facets only shrink")
}

/// Nerve of the facet cover. `None` for the void complex, for `{∅}`, and when
/// there are more facets than vertex labels.
pub fn nerve(delta: &SimplicialComplex) -> Option<SimplicialComplex> {
    let facets = delta.facets();
    if facets.is_empty() || delta.is_empty_face_only() || facets.len() > MAX_VERTICES {
        return None;
    }
    let stars: Vec<VertexSet> = delta
        .vertex_set()
        .iter()
        .map(|v| {
            facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(v))
                .map(|(i, _)| i + 1)
                .collect()
        })
        .collect();
    SimplicialComplex::new(VertexSet::full(facets.len()), stars).ok()
}

/// Upper bound on the face count: `Σ 2^|F|`, saturating.
fn face_estimate(delta: &SimplicialComplex) -> u128 {
    delta.facets().iter().fold(0u128, |acc, f| {
        let term = if f.len() >= 128 {
            u128::MAX
        } else {
            1u128 << f.len()
        };
        acc.saturating_add(term)
    })
}

/// Alternate cores and nerves, keeping whichever model has the fewest faces.
pub(crate) fn smallest_model(delta: &SimplicialComplex) -> SimplicialComplex {
    let mut current = core_complex(delta);
    let mut best = current.clone();
    let mut best_size = face_estimate(&best);
    for _ in 0..8 {
        let Some(n) = nerve(&current) else { break };
        let next = core_complex(&n);
        let same_shape = next.num_facets() == current.num_facets()
            && next.vertex_set().len() == current.vertex_set().len();
        let size = face_estimate(&next);
        if size < best_size {
            best = next.clone();
            best_size = size;
        }
        if same_shape && size >= best_size {
            break;
        }
        current = next;
    }
    best
}
