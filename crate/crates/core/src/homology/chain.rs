//! Reduced chain complexes of facet-presented complexes.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::homology::field::SignedMatrix;
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Default cap on the number of faces a chain complex may enumerate.
pub const DEFAULT_FACE_BUDGET: usize = 1 << 22;

/// Faces graded by dimension; `faces_by_dim[0]` holds the single (-1)-face `∅`.
///
/// Within a dimension faces are sorted lexicographically by vertex label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    faces_by_dim: Vec<Vec<VertexSet>>,
}

impl ChainComplex {
    /// Faces of dimension `dim` (`dim >= -1`); empty beyond the top dimension.
    pub fn faces(&self, dim: isize) -> &[VertexSet] {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.faces_by_dim.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// Top dimension, `None` for the void complex (which has no faces, not even `∅`).
    pub fn top_dim(&self) -> Option<isize> {
        (!self.faces_by_dim.is_empty()).then(|| self.faces_by_dim.len() as isize - 2)
    }

    pub fn total_faces(&self) -> usize {
        self.faces_by_dim.iter().map(Vec::len).sum()
    }

    /// Reduced Euler characteristic `Σ (-1)^d #faces(d)`, from d = -1.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces_by_dim
            .iter()
            .enumerate()
            .map(|(i, f)| {
                if i % 2 == 0 {
                    -(f.len() as i64)
                } else {
                    f.len() as i64
                }
            })
            .sum()
    }

    /// `∂_d`, mapping d-chains to (d-1)-chains. Column `σ` has entry `(-1)^j` at
    /// row `σ` minus its j-th smallest vertex.
    pub fn boundary_matrix(&self, dim: isize) -> SignedMatrix {
        let cols = self.faces(dim);
        let rows = self.faces(dim - 1);
        let index: HashMap<VertexSet, u32> = rows
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i as u32))
            .collect();
        let columns = cols
            .iter()
            .map(|&sigma| {
                let mut col: Vec<(u32, i8)> = sigma
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        let mut tau = sigma;
                        tau.remove(v);
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        (index[&tau], sign)
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        SignedMatrix {
            rows: rows.len(),
            cols: cols.len(),
            columns,
        }
    }
}

/// Sort key realising lexicographic order among sets of equal size: the first
/// differing label decides, so the set holding the lower label comes first.
fn lex_key(s: &VertexSet) -> std::cmp::Reverse<u128> {
    std::cmp::Reverse(s.bits().reverse_bits())
}

/// Every face of every facet, exactly once, graded and sorted.
pub fn enumerate_faces(delta: &SimplicialComplex, budget: usize) -> Result<ChainComplex> {
    if delta.is_void() {
        return Ok(ChainComplex {
            faces_by_dim: Vec::new(),
        });
    }
    let limit = |size: u128| Error::ResourceLimit {
        what: "face enumeration",
        size,
        budget: budget as u128,
    };
    if let Some(big) = delta.facets().iter().map(|f| f.len()).max() {
        if big >= 127 || (1u128 << big) > budget as u128 {
            return Err(limit(if big >= 127 { u128::MAX } else { 1u128 << big }));
        }
    }
    let mut seen: HashSet<u128> = HashSet::new();
    for f in delta.facets() {
        let full = f.bits();
        let mut sub = full;
        loop {
            seen.insert(sub);
            if seen.len() > budget {
                return Err(limit(seen.len() as u128));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
    }
    let top = delta.facets().iter().map(|f| f.len()).max().unwrap_or(0);
    let mut faces_by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for bits in seen {
        let s = VertexSet::from_bits(bits);
        faces_by_dim[s.len()].push(s);
    }
    for layer in &mut faces_by_dim {
        layer.sort_unstable_by_key(lex_key);
    }
    Ok(ChainComplex { faces_by_dim })
}
