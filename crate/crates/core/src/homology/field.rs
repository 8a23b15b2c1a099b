//! Coefficient fields and exact rank computation for sparse boundary matrices.
//!
//! Ranks come from the standard left-to-right column reduction: a column is
//! reduced against earlier columns sharing its pivot (largest nonzero row)
//! until it vanishes or owns a fresh pivot. Everything is exact; GF(2) uses
//! symmetric differences of row lists, GF(p) uses `u64` residues and the
//! rationals use arbitrary-precision fractions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology: a prime field GF(p) or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(2)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidParams(format!("{p} is not a prime")))
        }
    }

    /// Numeric code used on the command line: 0 for the rationals, otherwise a prime.
    pub fn from_code(code: u32) -> Result<Self> {
        if code == 0 {
            Ok(FieldSpec::Rationals)
        } else {
            Self::prime(code)
        }
    }

    pub fn code(self) -> u32 {
        match self {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn characteristic(self) -> u32 {
        self.code()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => f.write_str("Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let code: u32 = s.trim().parse().map_err(|_| {
            Error::InvalidParams(format!("field code {s:?} is not a nonnegative integer"))
        })?;
        Self::from_code(code)
    }
}

/// A matrix with entries in {-1, 0, 1}, stored column by column.
///
/// Each column lists `(row, sign)` pairs sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(u32, i8)>>,
}

impl SignedMatrix {
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r as usize == row)
            .map_or(0, |&(_, s)| s as i64)
    }

    /// Dense integer form, row-major. Intended for tests and debug dumps.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, s) in col {
                out[r as usize][c] = s as i64;
            }
        }
        out
    }

    /// Coordinate-list dump in a Matrix Market style: a size line, then `row col value`, 1-based.
    pub fn to_matrix_market(&self) -> String {
        let nnz: usize = self.columns.iter().map(Vec::len).sum();
        let mut out = format!("{} {} {}\n", self.rows, self.cols, nnz);
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, s) in col {
                out.push_str(&format!("{} {} {}\n", r + 1, c + 1, s));
            }
        }
        out
    }
}

/// Column reducer that remembers which column owns each pivot row.
///
/// Feeding the columns of one matrix in order yields its rank; `cleared`
/// columns (known to reduce to zero) are skipped by the caller.
pub(crate) trait Reducer {
    /// Reduce one column; returns its pivot row if it survives.
    fn push(&mut self, column: &[(u32, i8)]) -> Option<u32>;
}

pub(crate) fn new_reducer(field: FieldSpec, rows: usize) -> Box<dyn Reducer> {
    match field {
        FieldSpec::Prime(2) => Box::new(Gf2Reducer::new(rows)),
        FieldSpec::Prime(p) => Box::new(GfpReducer::new(rows, p as u64)),
        FieldSpec::Rationals => Box::new(RationalReducer::new(rows)),
    }
}

/// Rank of a signed matrix over the given field.
pub fn rank(matrix: &SignedMatrix, field: FieldSpec) -> usize {
    let mut reducer = new_reducer(field, matrix.rows);
    matrix
        .columns
        .iter()
        .filter(|c| reducer.push(c).is_some())
        .count()
}

struct Gf2Reducer {
    owner: Vec<Option<Vec<u32>>>,
}

impl Gf2Reducer {
    fn new(rows: usize) -> Self {
        Gf2Reducer {
            owner: vec![None; rows],
        }
    }
}

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Reducer for Gf2Reducer {
    fn push(&mut self, column: &[(u32, i8)]) -> Option<u32> {
        let mut col: Vec<u32> = column.iter().map(|&(r, _)| r).collect();
        while let Some(&pivot) = col.last() {
            match &self.owner[pivot as usize] {
                Some(other) => col = xor_sorted(&col, other),
                None => {
                    self.owner[pivot as usize] = Some(col);
                    return Some(pivot);
                }
            }
        }
        None
    }
}

/// Sparse column over a coefficient type, sorted by row.
type SparseCol<T> = Vec<(u32, T)>;

/// `a - factor * b` for sorted sparse columns, dropping zeros.
fn axpy<T, F>(
    a: &SparseCol<T>,
    b: &SparseCol<T>,
    combine: F,
    is_zero: impl Fn(&T) -> bool,
) -> SparseCol<T>
where
    T: Clone,
    F: Fn(Option<&T>, Option<&T>) -> T,
{
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (row, v) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            let r = (a[i].0, combine(Some(&a[i].1), None));
            i += 1;
            r
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let r = (b[j].0, combine(None, Some(&b[j].1)));
            j += 1;
            r
        } else {
            let r = (a[i].0, combine(Some(&a[i].1), Some(&b[j].1)));
            i += 1;
            j += 1;
            r
        };
        if !is_zero(&v) {
            out.push((row, v));
        }
    }
    out
}

struct GfpReducer {
    p: u64,
    // stored pivot columns are normalized so the pivot entry is 1
    owner: Vec<Option<SparseCol<u64>>>,
}

impl GfpReducer {
    fn new(rows: usize, p: u64) -> Self {
        GfpReducer {
            p,
            owner: vec![None; rows],
        }
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Reducer for GfpReducer {
    fn push(&mut self, column: &[(u32, i8)]) -> Option<u32> {
        let p = self.p;
        let mut col: SparseCol<u64> = column
            .iter()
            .map(|&(r, s)| (r, if s > 0 { 1 } else { p - 1 }))
            .collect();
        while let Some(&(pivot, lead)) = col.last() {
            match &self.owner[pivot as usize] {
                Some(other) => {
                    col = axpy(
                        &col,
                        other,
                        |x, y| {
                            let x = x.copied().unwrap_or(0);
                            let y = y.copied().unwrap_or(0);
                            (x + p - lead * y % p) % p
                        },
                        |v| *v == 0,
                    );
                }
                None => {
                    let inv = self.inv(lead);
                    for e in col.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    self.owner[pivot as usize] = Some(col);
                    return Some(pivot);
                }
            }
        }
        None
    }
}

struct RationalReducer {
    owner: Vec<Option<SparseCol<BigRational>>>,
}

impl RationalReducer {
    fn new(rows: usize) -> Self {
        RationalReducer {
            owner: vec![None; rows],
        }
    }
}

impl Reducer for RationalReducer {
    fn push(&mut self, column: &[(u32, i8)]) -> Option<u32> {
        let mut col: SparseCol<BigRational> = column
            .iter()
            .map(|&(r, s)| (r, BigRational::from_integer(BigInt::from(s))))
            .collect();
        while let Some((pivot, lead)) = col.last().cloned() {
            match &self.owner[pivot as usize] {
                Some(other) => {
                    let zero = BigRational::zero();
                    col = axpy(
                        &col,
                        other,
                        |x, y| {
                            let x = x.unwrap_or(&zero);
                            match y {
                                Some(y) => x - &lead * y,
                                None => x.clone(),
                            }
                        },
                        |v| v.is_zero(),
                    );
                }
                None => {
                    if !lead.is_one() {
                        let inv = lead.recip();
                        for e in col.iter_mut() {
                            e.1 = &e.1 * &inv;
                        }
                    }
                    self.owner[pivot as usize] = Some(col);
                    return Some(pivot);
                }
            }
        }
        None
    }
}
