//! Partitions, integer weights, and the hook content formula.
//!
//! A [`Partition`] is stored without trailing zeros, so two partitions compare
//! equal exactly when their Young diagrams agree. A [`Weight`] keeps its full
//! length because the Bott algorithm needs to know which slots are padded.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&p| i64::from(p)).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Whether the diagram of `self` sits inside the diagram of `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.length() <= rows && self.first() <= cols
    }

    /// Zero-padded weight of the given length.
    pub fn to_weight(&self, len: usize) -> Result<Weight> {
        if self.length() > len {
            return Err(Error::RankViolation {
                what: "partition",
                len: self.length(),
                rank: len,
            });
        }
        let mut entries: Vec<i64> = self.0.iter().map(|&p| i64::from(p)).collect();
        entries.resize(len, 0);
        Ok(Weight(entries))
    }

    /// Content `j - i` and hook length of every box, 1-based coordinates.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as usize).map(move |j| (i + 1, j)))
    }

    pub fn hook_length(&self, i: usize, j: usize) -> u32 {
        let conj = self.conjugate();
        self.part(i) - j as u32 + conj.part(j) - i as u32 + 1
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Builds a partition from a literal slice; panics if the slice is not
/// weakly decreasing. Intended for constants and tests.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition must be weakly decreasing")
}

impl fmt::Display for Partition {
    /// Comma-joined parts with exponent shorthand, e.g. `2,1^2`; `0` for the
    /// empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut idx = 0;
        while idx < self.0.len() {
            let value = self.0[idx];
            let run = self.0[idx..].iter().take_while(|&&p| p == value).count();
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{value}^{run}")?;
            } else {
                write!(f, "{value}")?;
            }
            idx += run;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the display format (`2,1^2`), plain lists (`2,1,1`), and the
    /// empty partition as `0`, `∅` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (value, reps) = match token.split_once('^') {
                Some((v, r)) => (v, r),
                None => (token, "1"),
            };
            let value: u32 = value.parse().map_err(|_| Error::Parse(s.to_string()))?;
            let reps: usize = reps.parse().map_err(|_| Error::Parse(s.to_string()))?;
            parts.extend(std::iter::repeat_n(value, reps));
        }
        Partition::new(parts)
    }
}

/// A weakly decreasing integer sequence of fixed length; entries may be
/// negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(entries));
        }
        Ok(Weight(entries))
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The weight of the dual representation: negate and reverse.
    pub fn dual(&self) -> Weight {
        Weight(self.0.iter().rev().map(|&x| -x).collect())
    }

    /// Interprets the weight as a partition if every entry is nonnegative.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.0.iter().any(|&x| x < 0) {
            return Err(Error::NegativePart(self.0.clone()));
        }
        Partition::new(self.0.iter().map(|&x| x as u32).collect())
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        Weight::new(entries)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `λ'_i = #{j | λ_j ≥ i}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.first();
    let parts = (1..=first)
        .map(|i| lambda.0.iter().take_while(|&&p| p >= i).count() as u32)
        .collect();
    Partition(parts)
}

/// Rank of the Schur (equivalently Weyl) functor `λ` applied to a free module
/// of rank `n`, by the hook content formula.
pub fn schur_rank(lambda: &Partition, n: usize) -> BigUint {
    if lambda.length() > n {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for (i, j) in lambda.boxes() {
        // n + j - i > 0 because i <= ℓ(λ) <= n
        numerator *= (n + j - i) as u64;
        let hook = lambda.part(i) as usize - j + conj.part(j) as usize - i + 1;
        denominator *= hook as u64;
    }
    let (quotient, remainder) = (&numerator / &denominator, &numerator % &denominator);
    assert!(
        remainder.is_zero(),
        "hook content product for {lambda} not divisible"
    );
    quotient
}

/// All partitions of `q` with at most `rows` parts, each at most `cols`, in
/// lexicographically descending order.
pub fn partitions_in_box(q: u32, rows: usize, cols: u32) -> Vec<Partition> {
    fn recurse(
        remaining: u32,
        rows_left: usize,
        max_part: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        let top = max_part.min(remaining);
        for p in (1..=top).rev() {
            // remaining boxes must fit in the rows below
            if u64::from(remaining - p) > u64::from(p) * (rows_left as u64 - 1) {
                break;
            }
            current.push(p);
            recurse(remaining - p, rows_left - 1, p, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    recurse(q, rows, cols, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `q`.
pub fn partitions_of(q: u32) -> Vec<Partition> {
    partitions_in_box(q, q as usize, q)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
