//! Exact reduced simplicial homology over a field.
//!
//! `dim H̃_d = (#d-faces - rank ∂_d) - rank ∂_{d+1}`, with ranks from exact
//! column reduction. Two evaluation strategies share that core:
//!
//! * [`Strategy::Direct`] enumerates the faces of the complex as given.
//! * [`Strategy::Reduced`] first shrinks the complex by homotopy equivalences
//!   (dominated-vertex removal and passing to the nerve of the facet cover)
//!   and then enumerates the faces of whichever model is smaller.
//!
//! The two must agree everywhere; the tests hold them to that.

mod chain;
mod field;
mod reduce;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use chain::{enumerate_faces, ChainComplex, DEFAULT_FACE_BUDGET};
pub use field::{rank, FieldSpec, SignedMatrix};
pub use reduce::{core_complex, nerve};

use crate::error::Result;
use crate::simplicial::SimplicialComplex;

/// Reduced homology dimensions indexed from degree -1; trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyDims {
    dims: Vec<usize>,
}

impl HomologyDims {
    pub fn zero() -> Self {
        HomologyDims::default()
    }

    /// `dims[0]` is degree -1.
    pub fn from_vec(mut dims: Vec<usize>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        HomologyDims { dims }
    }

    /// A single nonzero degree.
    pub fn single(degree: isize, dim: usize) -> Self {
        if dim == 0 || degree < -1 {
            return Self::zero();
        }
        let mut dims = vec![0; (degree + 2) as usize];
        dims[(degree + 1) as usize] = dim;
        HomologyDims { dims }
    }

    pub fn get(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.dims.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `(degree, dim)` for every nonzero degree, ascending.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| (i as isize - 1, d))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `Σ (-1)^d dim H̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .into_iter()
            .map(|(d, x)| {
                if d.rem_euclid(2) == 0 {
                    x as i64
                } else {
                    -(x as i64)
                }
            })
            .sum()
    }
}

impl fmt::Display for HomologyDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("all reduced homology vanishes");
        }
        let parts: Vec<String> = self
            .nonzero()
            .into_iter()
            .map(|(d, x)| format!("H~_{d} = {x}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Strategy {
    /// Enumerate the faces of the complex exactly as given.
    Direct,
    /// Shrink by homotopy equivalences first, then enumerate.
    #[default]
    Reduced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologyOptions {
    pub field: FieldSpec,
    pub face_budget: usize,
    pub strategy: Strategy,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions {
            field: FieldSpec::default(),
            face_budget: DEFAULT_FACE_BUDGET,
            strategy: Strategy::default(),
        }
    }
}

impl HomologyOptions {
    pub fn with_field(field: FieldSpec) -> Self {
        HomologyOptions {
            field,
            ..Self::default()
        }
    }
}

/// Reduced homology over `field` with default budget and strategy.
pub fn reduced_homology_dims(delta: &SimplicialComplex, field: FieldSpec) -> Result<HomologyDims> {
    reduced_homology_with(delta, &HomologyOptions::with_field(field))
}

pub fn reduced_homology_with(
    delta: &SimplicialComplex,
    opts: &HomologyOptions,
) -> Result<HomologyDims> {
    match opts.strategy {
        Strategy::Direct => {
            let chain = enumerate_faces(delta, opts.face_budget)?;
            Ok(homology_of_chain(&chain, opts.field))
        }
        Strategy::Reduced => {
            if delta.is_void() {
                return Ok(HomologyDims::zero());
            }
            if delta.is_empty_face_only() {
                return Ok(HomologyDims::single(-1, 1));
            }
            let model = reduce::smallest_model(delta);
            if model.num_facets() == 1 {
                // a single nonempty simplex
                return Ok(HomologyDims::zero());
            }
            let chain = enumerate_faces(&model, opts.face_budget)?;
            Ok(homology_of_chain(&chain, opts.field))
        }
    }
}

/// Homology of an explicit chain complex.
///
/// Ranks are computed from the top dimension down. A d-face that is the pivot of
/// a reduced column of `∂_{d+1}` is the leading term of a cycle, so its own column
/// in `∂_d` reduces to zero and can be skipped.
pub fn homology_of_chain(chain: &ChainComplex, field: FieldSpec) -> HomologyDims {
    let Some(top) = chain.top_dim() else {
        return HomologyDims::zero();
    };
    // ranks[d + 1] = rank ∂_d for d in -1..=top, with ∂_{-1} = 0
    let mut ranks = vec![0usize; (top + 3) as usize];
    let mut cleared: HashSet<u32> = HashSet::new();
    for d in (0..=top).rev() {
        let matrix = chain.boundary_matrix(d);
        let mut reducer = field::new_reducer(field, matrix.rows);
        let mut next_cleared = HashSet::new();
        let mut r = 0;
        for (c, column) in matrix.columns.iter().enumerate() {
            if cleared.contains(&(c as u32)) {
                continue;
            }
            if let Some(pivot) = reducer.push(column) {
                next_cleared.insert(pivot);
                r += 1;
            }
        }
        ranks[(d + 1) as usize] = r;
        cleared = next_cleared;
    }
    let dims = (-1..=top)
        .map(|d| {
            let faces = chain.faces(d).len();
            let rank_here = ranks[(d + 1) as usize];
            let rank_above = ranks.get((d + 2) as usize).copied().unwrap_or(0);
            faces - rank_here - rank_above
        })
        .collect();
    HomologyDims::from_vec(dims)
}
