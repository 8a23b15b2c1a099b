//! Path ideals of cycles and lines, and the complexes built from them.
//!
//! The cycle path complex `Δ_{m,l}(C_n)` has facets
//! `F_i = {x_{(i-1)l+1}, ..., x_{(i-1)l+m}}` for `i = 1..k`, `k = n/l`, labels
//! read modulo `n`. A *run* is the same construction along a line (no
//! wraparound), and `E(s_1, ..., s_r)` is the complement of a disjoint union of
//! runs inside its own vertex set.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{complement_complex, maximal_sets, SimplicialComplex};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Parameter record `(n, m, l, s, t, k, p, d)` of a cycle path ideal.
///
/// `l` is normalized to `gcd(l_raw, n)`; `m = t·l + s` with `0 <= s < l`;
/// `k = n / l = p·(t+1) + d` with `0 <= d <= t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleParams {
    n: usize,
    m: usize,
    l: usize,
    s: usize,
    t: usize,
    k: usize,
    p: usize,
    d: usize,
}

impl CycleParams {
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn l(&self) -> usize {
        self.l
    }
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn d(&self) -> usize {
        self.d
    }
}

impl fmt::Display for CycleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} l={} s={} t={} k={} p={} d={}",
            self.n, self.m, self.l, self.s, self.t, self.k, self.p, self.d
        )
    }
}

/// Reduce a raw step to `gcd(l_raw, n)`.
///
/// `I_{m,l}(C_n)` only depends on `gcd(l, n)`, and `l` and `n - l` give the same
/// ideal. The normalized step must satisfy `l <= min(m - 1, n/2)`.
pub fn normalize_step(l_raw: usize, m: usize, n: usize) -> Result<usize> {
    if l_raw == 0 {
        return Err(Error::InvalidParams("step l must be positive".into()));
    }
    if l_raw >= m {
        return Err(Error::InvalidParams(format!(
            "step l={l_raw} violates l <= min(m-1, n/2) = {} (a step is shorter than the path length m={m})",
            (m - 1).min(n / 2)
        )));
    }
    let l = l_raw.gcd(&n);
    if l == n {
        return Err(Error::InvalidParams(format!(
            "step l={l_raw} is a multiple of n={n}: every path would start at x_1"
        )));
    }
    if l > m - 1 || l > n / 2 {
        return Err(Error::InvalidParams(format!(
            "normalized step l={l} violates l <= min(m-1, n/2) = {}",
            (m - 1).min(n / 2)
        )));
    }
    Ok(l)
}

pub fn make_params(n: usize, m: usize, l_raw: usize) -> Result<CycleParams> {
    if n > MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "n={n} exceeds the supported maximum of {MAX_VERTICES} vertices"
        )));
    }
    if m < 2 || m > n {
        return Err(Error::InvalidParams(format!(
            "need 2 <= m <= n, got m={m}, n={n}"
        )));
    }
    let l = normalize_step(l_raw, m, n)?;
    let s = m % l;
    let t = (m - s) / l;
    let k = n / l;
    let (p, d) = k.div_rem(&(t + 1));
    Ok(CycleParams {
        n,
        m,
        l,
        s,
        t,
        k,
        p,
        d,
    })
}

/// Every valid `(n, m, l)` with `l` already a divisor of `n`, for `n` in the range.
pub fn valid_triples(min_n: usize, max_n: usize) -> Vec<CycleParams> {
    let mut out = Vec::new();
    for n in min_n.max(2)..=max_n {
        for m in 2..=n {
            for l in 1..m {
                if n % l == 0 && l <= n / 2 {
                    if let Ok(p) = make_params(n, m, l) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn cyclic_window(start: usize, len: usize, n: usize) -> VertexSet {
    // labels start, start+1, ..., start+len-1 taken mod n into 1..=n
    (0..len).map(|o| (start - 1 + o) % n + 1).collect()
}

/// `Δ_{m,l}(C_n)` with the standard labeling `F_1, ..., F_k`.
///
/// When `m = n` all facets coincide with the vertex set and collapse to one.
pub fn build_cycle_complex(params: &CycleParams) -> SimplicialComplex {
    let CycleParams { n, m, l, k, .. } = *params;
    let facets = (0..k).map(|i| cyclic_window(i * l + 1, m, n));
    SimplicialComplex::new(VertexSet::full(n), facets).expect("windows lie inside 1..=n")
}

/// Number of vertices of a run of `length` facets.
pub fn run_vertex_count(length: usize, m: usize, l: usize) -> usize {
    (length - 1) * l + m
}

/// Path complex of a line: facets `{x_{(i-1)l+1}, ..., x_{(i-1)l+m}}`, `i = 1..length`,
/// starting at vertex `offset + 1`.
fn run_facets(length: usize, m: usize, l: usize, offset: usize) -> Vec<VertexSet> {
    (0..length)
        .map(|i| VertexSet::range(offset + i * l + 1, offset + i * l + m))
        .collect()
}

/// A run of `length` facets on `(length-1)·l + m` vertices.
pub fn build_run_complex(length: usize, m: usize, l: usize) -> Result<SimplicialComplex> {
    if length == 0 || l == 0 || l >= m {
        return Err(Error::InvalidParams(format!(
            "a run needs length >= 1 and 1 <= l < m, got length={length}, m={m}, l={l}"
        )));
    }
    let nv = run_vertex_count(length, m, l);
    if nv > MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "a run of length {length} needs {nv} vertices (max {MAX_VERTICES})"
        )));
    }
    SimplicialComplex::new(VertexSet::full(nv), run_facets(length, m, l, 0))
}

/// Disjoint union of runs laid out in consecutive vertex blocks.
pub fn build_run_union(run_lengths: &[usize], m: usize, l: usize) -> Result<SimplicialComplex> {
    if run_lengths.is_empty() || run_lengths.contains(&0) || l == 0 || l >= m {
        return Err(Error::InvalidParams(format!(
            "a run sequence needs positive lengths and 1 <= l < m, got {run_lengths:?}, m={m}, l={l}"
        )));
    }
    let total: usize = run_lengths.iter().map(|&s| run_vertex_count(s, m, l)).sum();
    if total > MAX_VERTICES {
        return Err(Error::InvalidParams(format!(
            "run sequence {run_lengths:?} needs {total} vertices (max {MAX_VERTICES})"
        )));
    }
    let mut facets = Vec::new();
    let mut offset = 0;
    for &s in run_lengths {
        facets.extend(run_facets(s, m, l, offset));
        offset += run_vertex_count(s, m, l);
    }
    SimplicialComplex::new(VertexSet::full(total), facets)
}

/// `E(s_1, ..., s_r)`: complement of the run union inside its own vertex set.
pub fn build_e_complex(run_lengths: &[usize], m: usize, l: usize) -> Result<SimplicialComplex> {
    let gamma = build_run_union(run_lengths, m, l)?;
    complement_complex(&gamma, gamma.vertex_set())
}

/// Squarefree monomial ideal given by the supports of its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<VertexSet>,
}

impl MonomialIdeal {
    /// Generators are reduced to a minimal set; every support must lie in `1..=n`
    /// and be nonempty.
    pub fn new(n: usize, generators: Vec<VertexSet>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidParams(format!(
                "ambient ring needs 1 <= n <= {MAX_VERTICES}"
            )));
        }
        if generators.iter().any(|g| g.is_empty()) {
            return Err(Error::InvalidParams(
                "the unit ideal has no Stanley-Reisner complex".into(),
            ));
        }
        if let Some(g) = generators.iter().find(|g| !g.is_subset(VertexSet::full(n))) {
            return Err(Error::InvalidParams(format!(
                "generator support {{{g}}} uses variables beyond x_{n}"
            )));
        }
        // minimal generators are the minimal supports under divisibility
        let minimal: Vec<VertexSet> = generators
            .iter()
            .enumerate()
            .filter(|&(i, g)| {
                !generators
                    .iter()
                    .enumerate()
                    .any(|(j, h)| h.is_subset(*g) && (h != g || j < i))
            })
            .map(|(_, g)| *g)
            .collect();
        Ok(MonomialIdeal {
            n,
            generators: minimal,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    /// Facet complex `Δ(I)`: one facet per minimal generator.
    pub fn facet_complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(VertexSet::full(self.n), self.generators.iter().copied())
            .expect("supports checked at construction")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|v| format!("x{v}")).collect::<String>())
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Facet ideal `I(Δ)` in `K[x_1..x_N]`, `N` the largest label of the universe.
pub fn facet_ideal(delta: &SimplicialComplex) -> MonomialIdeal {
    let n = delta
        .universe()
        .max()
        .unwrap_or(1)
        .max(delta.vertex_set().max().unwrap_or(1));
    let gens = maximal_sets(delta.facets().to_vec());
    MonomialIdeal::new(n, gens).expect("facets of a complex are incomparable supports")
}

/// Run lengths grouped as `p_u(t+1)+1` (the alpha runs) and `q_v(t+1)+2` (the beta runs).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunProfile {
    pub alpha_runs: Vec<usize>,
    pub beta_runs: Vec<usize>,
}

impl RunProfile {
    /// `None` when some length is `≢ 1, 2 (mod t+1)`.
    pub fn classify(run_lengths: &[usize], t: usize) -> Option<RunProfile> {
        let mut profile = RunProfile {
            alpha_runs: Vec::new(),
            beta_runs: Vec::new(),
        };
        for &s in run_lengths {
            let (q, r) = s.div_rem(&(t + 1));
            match r {
                1 => profile.alpha_runs.push(q),
                2 => profile.beta_runs.push(q),
                _ => return None,
            }
        }
        Some(profile)
    }

    pub fn alpha(&self) -> usize {
        self.alpha_runs.len()
    }

    pub fn beta(&self) -> usize {
        self.beta_runs.len()
    }

    /// `P = Σ p_u`.
    pub fn big_p(&self) -> usize {
        self.alpha_runs.iter().sum()
    }

    /// `Q = Σ q_v`.
    pub fn big_q(&self) -> usize {
        self.beta_runs.iter().sum()
    }

    /// The run lengths this profile describes, alpha runs first.
    pub fn lengths(&self, t: usize) -> Vec<usize> {
        self.alpha_runs
            .iter()
            .map(|p| p * (t + 1) + 1)
            .chain(self.beta_runs.iter().map(|q| q * (t + 1) + 2))
            .collect()
    }
}
