//! Simplicial complexes stored by their facets.
//!
//! A complex keeps its facets in insertion order after dropping duplicates and
//! non-maximal sets, so the standard labeling `F_1, ..., F_k` of a path complex
//! survives construction and facet indices stay meaningful.
//!
//! Two degenerate complexes are kept apart on purpose: the *void* complex has no
//! facets at all, while `{∅}` has exactly one facet, the empty set.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    universe: VertexSet,
    facets: Vec<VertexSet>,
}

/// Drop duplicates and sets strictly contained in another, keeping first occurrences in order.
pub(crate) fn maximal_sets(sets: Vec<VertexSet>) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for (i, &f) in sets.iter().enumerate() {
        let dominated = sets.iter().enumerate().any(|(j, &g)| {
            if i == j || !f.is_subset(g) {
                return false;
            }
            // equal sets: only the first copy survives
            f != g || j < i
        });
        if !dominated {
            out.push(f);
        }
    }
    out
}

impl SimplicialComplex {
    /// Build a complex on `universe`; every facet must lie inside it.
    pub fn new<I>(universe: VertexSet, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        if let Some(bad) = facets.iter().find(|f| !f.is_subset(universe)) {
            return Err(Error::Precondition(format!(
                "facet {{{bad}}} is not contained in the universe {{{universe}}}"
            )));
        }
        Ok(SimplicialComplex {
            universe,
            facets: maximal_sets(facets),
        })
    }

    /// Complex whose universe is the union of the given facets.
    pub fn from_facets<I>(facets: I) -> Self
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        let universe = facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc | f);
        SimplicialComplex {
            universe,
            facets: maximal_sets(facets),
        }
    }

    /// The complex with no faces at all.
    pub fn void(universe: VertexSet) -> Self {
        SimplicialComplex {
            universe,
            facets: Vec::new(),
        }
    }

    /// `{∅}`: one facet, the empty face.
    pub fn empty_face(universe: VertexSet) -> Self {
        SimplicialComplex {
            universe,
            facets: vec![VertexSet::EMPTY],
        }
    }

    pub fn universe(&self) -> VertexSet {
        self.universe
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// `V(Δ)`, the union of the facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc | f)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_face_only(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Largest facet cardinality minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// All facets have the same cardinality.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Same universe and same facet set, ignoring facet order.
    pub fn same_facets(&self, other: &SimplicialComplex) -> bool {
        let mut a = self.facets.clone();
        let mut b = other.facets.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// Facets sorted lexicographically.
    pub fn sorted_facets(&self) -> Vec<VertexSet> {
        let mut f = self.facets.clone();
        f.sort();
        f
    }

    /// Union of the facets selected by `mask` (bit `i` selects facet `i`).
    pub(crate) fn union_of_mask(&self, mask: u64) -> VertexSet {
        let mut u = VertexSet::EMPTY;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            u = u | self.facets[i];
        }
        u
    }

    /// Facets contained in `window`, as a bit mask.
    pub(crate) fn mask_within(&self, window: VertexSet) -> u64 {
        debug_assert!(self.facets.len() <= 64);
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_subset(window))
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    }

    /// Parse the plain-text exchange format.
    ///
    /// One facet per line as comma-separated labels, `{}` for the empty facet,
    /// `#universe n` to declare the universe `1..n`, other `#` lines are comments.
    pub fn parse_exchange(text: &str) -> Result<Self> {
        let mut universe: Option<VertexSet> = None;
        let mut facets = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("#universe") {
                let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad universe size {:?}", rest.trim()),
                })?;
                if n == 0 || n > MAX_VERTICES {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("universe size must be in 1..={MAX_VERTICES}"),
                    });
                }
                universe = Some(VertexSet::full(n));
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            if line == "{}" {
                facets.push(VertexSet::EMPTY);
                continue;
            }
            let mut facet = VertexSet::EMPTY;
            for tok in line.split(',') {
                let tok = tok.trim();
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("not a vertex label: {tok:?}"),
                })?;
                if v == 0 || v > MAX_VERTICES {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex label {v} outside 1..={MAX_VERTICES}"),
                    });
                }
                facet.insert(v);
            }
            facets.push(facet);
        }
        match universe {
            Some(u) => SimplicialComplex::new(u, facets),
            None => Ok(SimplicialComplex::from_facets(facets)),
        }
    }

    /// Inverse of [`SimplicialComplex::parse_exchange`].
    pub fn to_exchange(&self) -> String {
        let mut out = String::new();
        if let Some(n) = self.universe.max() {
            if self.universe == VertexSet::full(n) {
                out.push_str(&format!("#universe {n}\n"));
            }
        }
        for f in &self.facets {
            if f.is_empty() {
                out.push_str("{}\n");
            } else {
                out.push_str(&format!("{f}\n"));
            }
        }
        out
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.same_facets(other)
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{{facet}}}")?;
        }
        f.write_str(">")
    }
}

/// `Δ^c_V = <V \ F_1, ..., V \ F_q>`.
///
/// An empty complement is kept as the empty facet, so the complement of a full
/// simplex is `{∅}` rather than the void complex.
pub fn complement_complex(
    delta: &SimplicialComplex,
    ambient: VertexSet,
) -> Result<SimplicialComplex> {
    if let Some(bad) = delta.facets().iter().find(|f| !f.is_subset(ambient)) {
        return Err(Error::Precondition(format!(
            "facet {{{bad}}} is not contained in the complement ambient set {{{ambient}}}"
        )));
    }
    SimplicialComplex::new(
        ambient,
        delta.facets().iter().map(|&f| ambient.difference(f)),
    )
}

/// `Δ_U`: the facets of a parent complex lying inside a vertex window.
#[derive(Clone, Debug)]
pub struct InducedSubcollection<'a> {
    parent: &'a SimplicialComplex,
    window: VertexSet,
    members: Vec<usize>,
}

impl<'a> InducedSubcollection<'a> {
    pub fn parent(&self) -> &'a SimplicialComplex {
        self.parent
    }

    pub fn window(&self) -> VertexSet {
        self.window
    }

    /// Indices (into the parent's facet list) of the member facets.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        self.members
            .iter()
            .map(|&i| self.parent.facets()[i])
            .collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::EMPTY, |acc, &i| acc | self.parent.facets()[i])
    }

    /// The subcollection as a complex on its own vertex set.
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.facets())
    }
}

pub fn induced_on(
    delta: &SimplicialComplex,
    window: VertexSet,
) -> Result<InducedSubcollection<'_>> {
    if !window.is_subset(delta.universe()) {
        return Err(Error::Precondition(format!(
            "window {{{window}}} is not inside the universe {{{}}}",
            delta.universe()
        )));
    }
    let members = delta
        .facets()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_subset(window))
        .map(|(i, _)| i)
        .collect();
    Ok(InducedSubcollection {
        parent: delta,
        window,
        members,
    })
}

/// True iff `subset` is exactly the set of facets inside its own vertex union.
pub fn is_induced_facet_subset(delta: &SimplicialComplex, subset: &[usize]) -> bool {
    let union = subset
        .iter()
        .fold(VertexSet::EMPTY, |acc, &i| acc | delta.facets()[i]);
    delta
        .facets()
        .iter()
        .enumerate()
        .all(|(i, f)| !f.is_subset(union) || subset.contains(&i))
}

/// Mask form of [`is_induced_facet_subset`] for complexes with at most 64 facets.
pub(crate) fn is_induced_mask(delta: &SimplicialComplex, mask: u64) -> bool {
    delta.mask_within(delta.union_of_mask(mask)) == mask
}

/// Connected components of a facet subset under "facets share a vertex".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    parent_facets: usize,
    components: Vec<Vec<usize>>,
}

impl RunDecomposition {
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Number of facets in each component, in component order.
    pub fn lengths(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// At least one facet of the parent is missing.
    pub fn is_proper(&self) -> bool {
        self.components.iter().map(Vec::len).sum::<usize>() < self.parent_facets
    }

    /// Check that every component is a block of cyclically consecutive facets
    /// `F_a, F_{a+1}, ...` (indices mod the parent facet count) and return the run lengths.
    ///
    /// Only meaningful for proper induced subcollections of a cycle path complex;
    /// for the full cycle this reports the single closed component.
    pub fn cyclic_runs(&self) -> Result<Vec<usize>> {
        let k = self.parent_facets;
        if !self.is_proper() {
            return Ok(self.lengths());
        }
        for comp in &self.components {
            let ends = comp
                .iter()
                .filter(|&&i| !comp.contains(&((i + 1) % k)))
                .count();
            if ends != 1 {
                return Err(Error::Consistency(format!(
                    "component {comp:?} of a proper induced subcollection is not a run of consecutive facets"
                )));
            }
        }
        Ok(self.lengths())
    }
}

pub fn connected_components(delta: &SimplicialComplex, subset: &[usize]) -> RunDecomposition {
    let facets = delta.facets();
    let mut seen = vec![false; subset.len()];
    let mut components = Vec::new();
    for start in 0..subset.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![subset[start]];
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for b in 0..subset.len() {
                if !seen[b] && !facets[subset[a]].intersection(facets[subset[b]]).is_empty() {
                    seen[b] = true;
                    comp.push(subset[b]);
                    stack.push(b);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components.sort();
    RunDecomposition {
        parent_facets: facets.len(),
        components,
    }
}

/// Some vertex lies in every facet. `{∅}` and the void complex are not cones.
pub fn is_cone(delta: &SimplicialComplex) -> bool {
    let Some((&first, rest)) = delta.facets().split_first() else {
        return false;
    };
    !rest.iter().fold(first, |acc, &f| acc & f).is_empty()
}
