//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact; the only tolerances are the wall-clock limits.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;

use cyclebetti::{
    betti_table_facet, betti_table_sr, betti_top, build_cycle_complex, build_e_complex,
    build_run_complex, check_bounds, complement_complex, facet_ideal, graded_table,
    homology_cycle_complement, homology_e_runs, homology_single_run, make_params, pd_from_table,
    pd_reg, pd_reg_line, reduced_homology_dims, reg_from_table, valid_triples, BettiTable,
    BoundsReport, CycleParams, FieldSpec, HomologyDims, OracleConfig, VertexSet,
};

const FIELDS: [FieldSpec; 3] = [
    FieldSpec::Prime(2),
    FieldSpec::Prime(3),
    FieldSpec::Rationals,
];
const TOP_SWEEP_LIMIT: Duration = Duration::from_secs(120);
const E_COMPLEX_LIMIT: Duration = Duration::from_secs(60);

#[derive(Clone, Debug, PartialEq, Eq)]
struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

type Key = (usize, usize, usize);

fn key(p: &CycleParams) -> Key {
    (p.n(), p.m(), p.l())
}

/// Oracle data for the cycle corpus over one field.
struct Corpus {
    facet: BTreeMap<Key, BettiTable>,
    sr: BTreeMap<Key, BettiTable>,
    params: Vec<CycleParams>,
    elapsed: Duration,
}

fn cycle_corpus(field: FieldSpec) -> Corpus {
    let start = Instant::now();
    let cfg = OracleConfig::with_field(field);
    let params = valid_triples(4, 12);
    let tables: Vec<(Key, BettiTable, BettiTable)> = params
        .par_iter()
        .map(|p| {
            let delta = build_cycle_complex(p);
            let facet = betti_table_facet(&delta, &cfg).expect("facet oracle within budget");
            let sr = betti_table_sr(&facet_ideal(&delta), &cfg)
                .expect("Stanley-Reisner oracle within budget");
            (key(p), facet, sr)
        })
        .collect();
    let mut facet = BTreeMap::new();
    let mut sr = BTreeMap::new();
    for (k, f, s) in tables {
        facet.insert(k, f);
        sr.insert(k, s);
    }
    Corpus {
        facet,
        sr,
        params,
        elapsed: start.elapsed(),
    }
}

fn first_failures(failures: &[String]) -> String {
    let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
    format!("{} failures, e.g. {}", failures.len(), shown.join("; "))
}

fn criterion_top(c: &Corpus) -> Outcome {
    let failures: Vec<String> = c
        .params
        .iter()
        .filter_map(|p| {
            let oracle = c.facet[&key(p)].column(p.n());
            let closed = betti_top(p);
            (oracle != closed).then(|| format!("{p}: closed {closed} oracle {oracle}"))
        })
        .collect();
    let in_time = c.elapsed <= TOP_SWEEP_LIMIT;
    let detail = if failures.is_empty() {
        format!(
            "{} instances, sweep {:.1}s (limit {}s)",
            c.params.len(),
            c.elapsed.as_secs_f64(),
            TOP_SWEEP_LIMIT.as_secs()
        )
    } else {
        first_failures(&failures)
    };
    Outcome::new(failures.is_empty() && in_time, detail)
}

fn criterion_pd_reg(c: &Corpus) -> Outcome {
    let failures: Vec<String> = c
        .params
        .iter()
        .filter_map(|p| {
            let t = &c.facet[&key(p)];
            let oracle = (pd_from_table(t), reg_from_table(t));
            let closed = pd_reg(p);
            let depth_ok = p.n() - closed.0 == closed.1;
            (oracle != closed || !depth_ok)
                .then(|| format!("{p}: closed {closed:?} oracle {oracle:?}"))
        })
        .collect();
    if failures.is_empty() {
        Outcome::new(
            true,
            format!("{} instances, n - pd = reg in every case", c.params.len()),
        )
    } else {
        Outcome::new(false, first_failures(&failures))
    }
}

/// All ordered sequences of positive integers with the given sum.
fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    (1..=total)
        .flat_map(|first| {
            compositions(total - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn criterion_e_complexes(field: FieldSpec) -> (Outcome, Vec<HomologyDims>) {
    let start = Instant::now();
    let mut cases = Vec::new();
    for l in 1..=3 {
        for t in 1..=4 {
            for s in 0..l {
                let m = t * l + s;
                if m < 2 || l >= m {
                    continue;
                }
                for total in 1..=8 {
                    for runs in compositions(total) {
                        cases.push((runs, m, l, t));
                    }
                }
            }
        }
    }
    let results: Vec<(HomologyDims, Option<String>)> = cases
        .par_iter()
        .map(|(runs, m, l, t)| {
            let e = build_e_complex(runs, *m, *l).expect("E-complex fits in 128 vertices");
            let dims = reduced_homology_dims(&e, field).expect("homology within budget");
            let closed = homology_e_runs(runs, *t).to_dims();
            let mut err = (dims != closed).then(|| format!("runs {runs:?} m={m} l={l}: closed {closed}, oracle {dims}"));
            if *t >= 2 && runs.len() == 1 {
                let (p, d) = runs[0].div_rem(&(t + 1));
                let single = homology_single_run(p, d).to_dims();
                if single != closed {
                    err = Some(format!("single run {runs:?} t={t}: profile form {closed}, single-run form {single}"));
                }
            }
            (dims, err)
        })
        .collect();
    let elapsed = start.elapsed();
    let failures: Vec<String> = results.iter().filter_map(|(_, e)| e.clone()).collect();
    let zeros = results.iter().filter(|(d, _)| d.is_zero()).count();
    let in_time = elapsed <= E_COMPLEX_LIMIT;
    let detail = if failures.is_empty() {
        format!(
            "{} run sequences ({zeros} with vanishing homology), {:.1}s (limit {}s)",
            cases.len(),
            elapsed.as_secs_f64(),
            E_COMPLEX_LIMIT.as_secs()
        )
    } else {
        first_failures(&failures)
    };
    (
        Outcome::new(failures.is_empty() && in_time, detail),
        results.into_iter().map(|(d, _)| d).collect(),
    )
}

fn criterion_complement(field: FieldSpec) -> (Outcome, Vec<HomologyDims>) {
    let mut params = valid_triples(3, 14);
    params.push(make_params(16, 7, 2).unwrap());
    let results: Vec<(HomologyDims, Option<String>)> = params
        .par_iter()
        .map(|p| {
            let delta = build_cycle_complex(p);
            let comp = complement_complex(&delta, delta.vertex_set()).unwrap();
            let dims = reduced_homology_dims(&comp, field).expect("homology within budget");
            let closed = homology_cycle_complement(p).to_dims();
            let err = (dims != closed).then(|| format!("{p}: closed {closed}, oracle {dims}"));
            (dims, err)
        })
        .collect();
    let failures: Vec<String> = results.iter().filter_map(|(_, e)| e.clone()).collect();
    let big = results.last().unwrap().0.clone();
    let outcome = if failures.is_empty() {
        Outcome::new(
            true,
            format!(
                "{} instances up to n = 14, plus (16,7,2): {big}",
                params.len() - 1
            ),
        )
    } else {
        Outcome::new(false, first_failures(&failures))
    };
    (outcome, results.into_iter().map(|(d, _)| d).collect())
}

fn criterion_counting(c: &Corpus) -> Outcome {
    let mut checked = 0;
    let failures: Vec<String> = c
        .params
        .iter()
        .filter(|p| p.t() >= 2)
        .filter_map(|p| {
            checked += 1;
            let closed = graded_table(p).unwrap().expect("t >= 2 is counted");
            let oracle = c.facet[&key(p)].filter_degrees(|j| j < p.n());
            (closed != oracle).then(|| format!("{p}: closed {closed} oracle {oracle}"))
        })
        .collect();
    if failures.is_empty() {
        Outcome::new(
            true,
            format!("{checked} instances with t >= 2, all entries j < n"),
        )
    } else {
        Outcome::new(false, first_failures(&failures))
    }
}

fn criterion_bounds(c: &Corpus) -> Outcome {
    let mut checked = 0;
    let mut weaker_holds = true;
    let failures: Vec<String> = c
        .params
        .iter()
        .filter(|p| p.t() >= 2)
        .filter_map(|p| {
            checked += 1;
            let table = &c.facet[&key(p)];
            // j - i <= n - 2p - 1 for j < n, d != 0, reported alongside
            if p.d() != 0 {
                let limit = p.n() - 2 * p.p() - 1;
                weaker_holds &= table
                    .entries()
                    .filter(|e| e.j < p.n())
                    .all(|e| e.j - e.i <= limit);
            }
            match check_bounds(p, table) {
                BoundsReport::Violation { i, j, clause } => Some(format!(
                    "({},{},{}) beta_{{{i},{j}}}={} breaks {clause}",
                    p.n(),
                    p.m(),
                    p.l(),
                    table.get(i, j)
                )),
                _ => None,
            }
        })
        .collect();
    if failures.is_empty() {
        Outcome::new(
            true,
            format!("{checked} instances with t >= 2, no violations"),
        )
    } else {
        Outcome::new(
            false,
            format!(
                "{} of {checked} instances violate; {}; j - i <= n-2p-1 (d != 0) holds everywhere: {weaker_holds}",
                failures.len(),
                failures[..failures.len().min(2)].join("; ")
            ),
        )
    }
}

fn criterion_double_oracle(c: &Corpus) -> Outcome {
    let failures: Vec<String> = c
        .params
        .iter()
        .filter_map(|p| {
            let (f, s) = (&c.facet[&key(p)], &c.sr[&key(p)]);
            (f != s).then(|| format!("{p}: facet {f} sr {s}"))
        })
        .collect();
    if failures.is_empty() {
        Outcome::new(true, format!("{} ideals, tables identical", c.params.len()))
    } else {
        Outcome::new(false, first_failures(&failures))
    }
}

fn criterion_lines() -> Outcome {
    let cfg = OracleConfig::default();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 2..=10 {
        for m in 2..=n {
            checked += 1;
            let run = build_run_complex(n - m + 1, m, 1).unwrap();
            let table = betti_table_facet(&run, &cfg).unwrap();
            let oracle = (pd_from_table(&table) - 1, reg_from_table(&table) + 1);
            let closed = pd_reg_line(n, m).unwrap();
            if oracle != closed {
                failures.push(format!("n={n} m={m}: closed {closed:?} oracle {oracle:?}"));
            }
        }
    }
    if failures.is_empty() {
        Outcome::new(true, format!("{checked} line ideals, 2 <= m <= n <= 10"))
    } else {
        Outcome::new(false, first_failures(&failures))
    }
}

/// Generators `x_{s} ... x_{s+len-1}` (indices mod n) for each listed start.
fn windows(n: usize, len: usize, starts: &[usize]) -> Vec<VertexSet> {
    starts
        .iter()
        .map(|&s| (0..len).map(|o| (s - 1 + o) % n + 1).collect())
        .collect()
}

fn criterion_worked_examples() -> Outcome {
    let every = |from: usize, step: usize, count: usize| -> Vec<usize> {
        (0..count).map(|i| from + i * step).collect()
    };
    let mut expected: Vec<(usize, usize, usize, Vec<VertexSet>)> = vec![
        (4, 3, 2, windows(4, 3, &[1, 3])),
        (6, 3, 2, windows(6, 3, &[1, 3, 5])),
        (6, 5, 3, windows(6, 5, &[1, 4])),
    ];
    for (steps, starts) in [
        (vec![1, 5, 7], every(1, 1, 12)),
        (vec![2, 10], every(1, 2, 6)),
        (vec![3, 9], every(1, 3, 4)),
        (vec![4, 8], every(1, 4, 3)),
        (vec![6], every(1, 6, 2)),
    ] {
        for l in steps {
            expected.push((12, 11, l, windows(12, 11, &starts)));
        }
    }
    let mut failures = Vec::new();
    for (n, m, l, gens) in &expected {
        let ideal = facet_ideal(&build_cycle_complex(&make_params(*n, *m, *l).unwrap()));
        if ideal.generators() != gens.as_slice() {
            failures.push(format!("I_{{{m},{l}}}(C_{n}) = {ideal}"));
        }
    }
    if failures.is_empty() {
        Outcome::new(
            true,
            format!(
                "{} ideals reproduced generator by generator",
                expected.len()
            ),
        )
    } else {
        Outcome::new(false, first_failures(&failures))
    }
}

/// Per-field verdicts of criteria 1 to 7 plus the raw oracle data behind them.
struct FieldResults {
    outcomes: Vec<Outcome>,
    fingerprint: (
        Vec<BettiTable>,
        Vec<BettiTable>,
        Vec<HomologyDims>,
        Vec<HomologyDims>,
    ),
}

fn run_field(field: FieldSpec) -> FieldResults {
    let corpus = cycle_corpus(field);
    let (e_outcome, e_dims) = criterion_e_complexes(field);
    let (c_outcome, c_dims) = criterion_complement(field);
    let outcomes = vec![
        criterion_top(&corpus),
        criterion_pd_reg(&corpus),
        e_outcome,
        c_outcome,
        criterion_counting(&corpus),
        criterion_bounds(&corpus),
        criterion_double_oracle(&corpus),
    ];
    FieldResults {
        outcomes,
        fingerprint: (
            corpus.facet.into_values().collect(),
            corpus.sr.into_values().collect(),
            e_dims,
            c_dims,
        ),
    }
}

/// Timing details vary between fields; verdicts and data must not.
fn same_verdicts(a: &FieldResults, b: &FieldResults) -> bool {
    a.fingerprint == b.fingerprint
        && a.outcomes
            .iter()
            .zip(&b.outcomes)
            .all(|(x, y)| x.pass == y.pass)
}

fn main() {
    const NAMES: [&str; 10] = [
        "top-degree Betti column",
        "pd, reg and depth",
        "E-complex homology",
        "cycle-complement homology",
        "graded counting",
        "vanishing bounds",
        "facet sum equals Stanley-Reisner sum",
        "field independence",
        "line pd and reg",
        "worked generator lists",
    ];
    let per_field: Vec<FieldResults> = FIELDS.iter().map(|&f| run_field(f)).collect();
    let mut lines = Vec::new();
    for (idx, name) in NAMES.iter().enumerate().take(7) {
        let pass = per_field.iter().all(|r| r.outcomes[idx].pass);
        let detail = per_field
            .iter()
            .zip(FIELDS)
            .map(|(r, f)| format!("{f}: {}", r.outcomes[idx].detail))
            .collect::<Vec<_>>()
            .join(" | ");
        lines.push((idx + 1, *name, Outcome::new(pass, detail)));
    }
    let base = &per_field[0];
    let independent = per_field[1..].iter().all(|r| same_verdicts(base, r));
    lines.push((
        8,
        NAMES[7],
        Outcome::new(
            independent,
            if independent {
                "criteria 1-7 give identical tables, homology and verdicts over GF(2), GF(3), Q"
                    .into()
            } else {
                "results differ between fields".to_string()
            },
        ),
    ));
    lines.push((9, NAMES[8], criterion_lines()));
    lines.push((10, NAMES[9], criterion_worked_examples()));

    let mut failed = 0;
    for (n, name, o) in &lines {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{tag}] {name}: {}", o.detail);
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        lines.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
