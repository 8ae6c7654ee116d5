//! The `A_i`/`B_i` recurrences behind the associahedron chromatic number and
//! the cyclohedron upper bound, plus the closed-form bounds derived from them.
//!
//! For the associahedron (`base = n + 3`) and the cyclohedron (`base = n + 1`),
//! with `2 ≤ i ≤ ⌈n/2⌉ + 1`:
//!
//! ```text
//! B_2 = 0,   B_i = base + B_{i-1} − (i − 1)·A_{i-1}
//! A_i = ⌈(base + B_i) / i⌉
//! ```
//!
//! except in the last row: the associahedron has `A = 1` there when `n` is
//! odd; the cyclohedron has `A = 1` for even `n` and `A = 0` for odd `n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceVariant {
    Assoc,
    Cyclo,
}

/// The sequences `A_i`, `B_i` for `2 ≤ i ≤ ⌈n/2⌉ + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePair {
    pub variant: SequenceVariant,
    pub n: usize,
    a: Vec<i64>,
    b: Vec<i64>,
}

impl SequencePair {
    /// Last index `⌈n/2⌉ + 1`.
    pub fn top(&self) -> usize {
        self.n.div_ceil(2) + 1
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        2..=self.top()
    }

    /// `A_i`; panics outside `2..=top()`.
    pub fn a(&self, i: usize) -> i64 {
        self.a[i - 2]
    }

    pub fn b(&self, i: usize) -> i64 {
        self.b[i - 2]
    }

    pub fn a_values(&self) -> &[i64] {
        &self.a
    }

    pub fn b_values(&self) -> &[i64] {
        &self.b
    }

    pub fn sum_a(&self) -> i64 {
        self.a.iter().sum()
    }

    pub fn sum_a_plus_one(&self) -> i64 {
        self.a.iter().map(|a| a + 1).sum()
    }
}

fn ceil_div(p: i64, q: i64) -> i64 {
    debug_assert!(q > 0);
    p.div_euclid(q) + i64::from(p.rem_euclid(q) != 0)
}

fn run_recurrence(n: usize, variant: SequenceVariant) -> SequencePair {
    let top = n.div_ceil(2) + 1;
    let base = match variant {
        SequenceVariant::Assoc => n as i64 + 3,
        SequenceVariant::Cyclo => n as i64 + 1,
    };
    let odd = n % 2 == 1;
    let mut a = Vec::with_capacity(top - 1);
    let mut b = Vec::with_capacity(top - 1);
    for i in 2..=top {
        let bi = if i == 2 {
            0
        } else {
            base + b[i - 3] - (i as i64 - 1) * a[i - 3]
        };
        let ai = match variant {
            SequenceVariant::Assoc if odd && i == top => 1,
            SequenceVariant::Cyclo if i == top => i64::from(!odd),
            _ => ceil_div(base + bi, i as i64),
        };
        a.push(ai);
        b.push(bi);
    }
    SequencePair { variant, n, a, b }
}

pub fn assoc_sequences(n: usize) -> Result<SequencePair> {
    if n == 0 {
        return Err(Error::domain("assoc_sequences needs n ≥ 1"));
    }
    Ok(run_recurrence(n, SequenceVariant::Assoc))
}

pub fn cyclo_sequences(n: usize) -> Result<SequencePair> {
    if n < 2 {
        return Err(Error::domain("cyclo_sequences needs n ≥ 2"));
    }
    Ok(run_recurrence(n, SequenceVariant::Cyclo))
}

/// Chromatic number of the `n`-dimensional associahedron, `Σ A_i`.
///
/// `alpha(0) = 0` by convention (a point has no facets).
pub fn alpha(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    run_recurrence(n, SequenceVariant::Assoc).sum_a() as u64
}

/// The cyclohedron upper bound `Σ (A_i + 1)` from the cyclic recurrence.
pub fn gamma_upper(n: usize) -> Result<u64> {
    Ok(cyclo_sequences(n)?.sum_a_plus_one() as u64)
}

/// The coarser cyclohedron interval `[α_{n−1} + 1, α_{n−1} + n]`.
pub fn gamma_interval(n: usize) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::domain("gamma_interval needs n ≥ 2"));
    }
    let a = alpha(n - 1);
    Ok((a + 1, a + n as u64))
}

/// Stellohedron bounds `n + 1 ≤ σ_n ≤ 2n − 1 − ⌊(n−1)/2⌋`.
///
/// The lower bound is only claimed for `n ≥ 2`; for `n = 1` both entries
/// are 1.
pub fn sigma_bounds(n: usize) -> Result<(u64, u64)> {
    if n == 0 {
        return Err(Error::domain("sigma_bounds needs n ≥ 1"));
    }
    let upper = stello_colour_count(n);
    Ok(((n as u64 + 1).min(upper), upper))
}

/// Colours used by the constructive stellohedron colouring.
pub fn stello_colour_count(n: usize) -> u64 {
    (2 * n - 1 - (n - 1) / 2) as u64
}

/// Chromatic number of the simple permutoassociahedron, `α_{n−1} + 1`.
pub fn delta(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("delta needs n ≥ 1"));
    }
    Ok(alpha(n - 1) + 1)
}

/// Harmonic numbers `H_0 = 0, H_1, …, H_m` as exact rationals.
#[derive(Clone, Debug)]
pub struct HarmonicTable {
    values: Vec<BigRational>,
}

impl HarmonicTable {
    pub fn up_to(m: usize) -> Self {
        let mut values = Vec::with_capacity(m + 1);
        let mut h = BigRational::zero();
        values.push(h.clone());
        for j in 1..=m {
            h += BigRational::new(BigInt::one(), BigInt::from(j));
            values.push(h.clone());
        }
        HarmonicTable { values }
    }

    pub fn get(&self, m: usize) -> &BigRational {
        &self.values[m]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The explicit lower and upper bounds on `α_n`:
///
/// ```text
/// lower = (n + 4)·H_{⌈n/2⌉} − (3n + 8)/2
/// upper = (n + 3)·H_{⌈n/2⌉+1}
/// ```
pub fn alpha_bounds(n: usize) -> Result<(BigRational, BigRational)> {
    let table = HarmonicTable::up_to(n.div_ceil(2) + 1);
    alpha_bounds_with(n, &table)
}

/// As [`alpha_bounds`], reusing a precomputed harmonic table.
pub fn alpha_bounds_with(n: usize, table: &HarmonicTable) -> Result<(BigRational, BigRational)> {
    if n < 2 {
        return Err(Error::domain("alpha_bounds needs n ≥ 2"));
    }
    let half = n.div_ceil(2);
    if table.len() < half + 2 {
        return Err(Error::capacity(
            "harmonic table length",
            table.len(),
            half + 2,
        ));
    }
    let int = |v: usize| BigRational::from_integer(BigInt::from(v));
    let lower =
        int(n + 4) * table.get(half) - BigRational::new(BigInt::from(3 * n + 8), BigInt::from(2));
    let upper = int(n + 3) * table.get(half + 1);
    Ok((lower, upper))
}
