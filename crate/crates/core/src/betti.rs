//! Equivariant Betti tables: for each homological index `i` and internal
//! degree `e`, a multiset of `GL(L) × GL(W)` labels `(λ_L; μ_W)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::partitions::{schur_rank, Partition};

/// One irreducible `S_λ L ⊗ S_μ W`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label {
    pub lambda_l: Partition,
    pub mu_w: Partition,
}

impl Label {
    pub fn new(lambda_l: Partition, mu_w: Partition) -> Self {
        Label { lambda_l, mu_w }
    }

    pub fn trivial() -> Self {
        Label::new(Partition::empty(), Partition::empty())
    }

    pub fn rank(&self, d: usize, n: usize) -> BigUint {
        schur_rank(&self.lambda_l, d) * schur_rank(&self.mu_w, n - d)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.lambda_l, self.mu_w)
    }
}

/// Position of a summand: `label ⊗ A(-degree)` in `F_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BettiKey {
    pub i: i32,
    pub degree: i32,
    pub label: Label,
}

impl BettiKey {
    pub fn new(i: i32, degree: i32, lambda_l: Partition, mu_w: Partition) -> Self {
        BettiKey {
            i,
            degree,
            label: Label::new(lambda_l, mu_w),
        }
    }
}

impl fmt::Display for BettiKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} {}(-{})", self.i, self.label, self.degree)
    }
}

/// Serialized form of one table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub i: i32,
    pub degree: i32,
    #[serde(rename = "lambdaL")]
    pub lambda_l: Partition,
    #[serde(rename = "muW")]
    pub mu_w: Partition,
    pub mult: u64,
    pub rank: u128,
}

/// Betti table over `A = Sym(End(V)*)` with `dim L = d`, `dim V = n`.
///
/// Entries whose label has rank zero for these dimensions are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    d: usize,
    n: usize,
    entries: BTreeMap<BettiKey, u64>,
}

impl BettiTable {
    pub fn new(d: usize, n: usize) -> Self {
        assert!(d <= n, "dim L = {d} exceeds dim V = {n}");
        BettiTable {
            d,
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Adds `mult` copies; zero-rank labels are dropped.
    pub fn add(&mut self, key: BettiKey, mult: u64) {
        if mult == 0 || key.label.rank(self.d, self.n).is_zero() {
            return;
        }
        *self.entries.entry(key).or_insert(0) += mult;
    }

    pub fn add_parts(
        &mut self,
        i: i32,
        degree: i32,
        lambda_l: Partition,
        mu_w: Partition,
        mult: u64,
    ) {
        self.add(BettiKey::new(i, degree, lambda_l, mu_w), mult);
    }

    pub fn multiplicity(&self, key: &BettiKey) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    /// Removes `mult` copies, failing if fewer are present.
    pub fn remove(&mut self, key: &BettiKey, mult: u64) -> std::result::Result<(), u64> {
        let have = self.multiplicity(key);
        if have < mult {
            return Err(have);
        }
        if have == mult {
            self.entries.remove(key);
        } else {
            self.entries.insert(key.clone(), have - mult);
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BettiKey, u64)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }

    /// Entries of `F_i`.
    pub fn term(&self, i: i32) -> impl Iterator<Item = (&BettiKey, u64)> {
        self.iter().filter(move |(k, _)| k.i == i)
    }

    pub fn rank_of(&self, key: &BettiKey) -> BigUint {
        key.label.rank(self.d, self.n)
    }

    /// Total rank of `F_i`.
    pub fn term_rank(&self, i: i32) -> BigUint {
        self.term(i)
            .map(|(k, m)| self.rank_of(k) * m)
            .fold(BigUint::zero(), |a, b| a + b)
    }

    pub fn indices(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.entries.keys().map(|k| k.i).collect();
        v.dedup();
        v
    }

    pub fn min_index(&self) -> Option<i32> {
        self.entries.keys().map(|k| k.i).min()
    }

    /// Entries with `i <= max_i`.
    pub fn truncate(&self, max_i: i32) -> BettiTable {
        self.filter(|k| k.i <= max_i)
    }

    pub fn filter(&self, keep: impl Fn(&BettiKey) -> bool) -> BettiTable {
        BettiTable {
            d: self.d,
            n: self.n,
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, &m)| (k.clone(), m))
                .collect(),
        }
    }

    /// Moves every entry by `di` in homological index and `de` in degree.
    pub fn shifted(&self, di: i32, de: i32) -> BettiTable {
        BettiTable {
            d: self.d,
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(k, &m)| {
                    let mut k = k.clone();
                    k.i += di;
                    k.degree += de;
                    (k, m)
                })
                .collect(),
        }
    }

    /// Multiset union.
    pub fn merge(&mut self, other: &BettiTable) {
        assert_eq!(
            (self.d, self.n),
            (other.d, other.n),
            "merging tables of different shapes"
        );
        for (k, m) in other.iter() {
            *self.entries.entry(k.clone()).or_insert(0) += m;
        }
    }

    /// Castelnuovo–Mumford regularity, `max(e - i)`.
    pub fn regularity(&self) -> Result<i32> {
        self.entries
            .keys()
            .map(|k| k.degree - k.i)
            .max()
            .ok_or(Error::EmptyTable)
    }

    /// Largest homological index.
    pub fn proj_dim(&self) -> Result<i32> {
        self.entries
            .keys()
            .map(|k| k.i)
            .max()
            .ok_or(Error::EmptyTable)
    }

    /// `Σ (-1)^i rank · t^e / (1 - t)^{n²}`.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let mut hs = HilbertSeries::zero((self.n * self.n) as u32);
        for (k, m) in self.iter() {
            assert!(k.degree >= 0, "negative internal degree in {k}");
            let r = num_bigint::BigInt::from(self.rank_of(k) * m);
            hs.add_term(
                k.degree as usize,
                if k.i.rem_euclid(2) == 0 { r } else { -r },
            );
        }
        hs
    }

    pub fn to_rows(&self) -> Vec<BettiRow> {
        self.iter()
            .map(|(k, m)| BettiRow {
                i: k.i,
                degree: k.degree,
                lambda_l: k.label.lambda_l.clone(),
                mu_w: k.label.mu_w.clone(),
                mult: m,
                rank: self
                    .rank_of(k)
                    .to_u128()
                    .expect("summand rank exceeds u128"),
            })
            .collect()
    }

    pub fn from_rows(d: usize, n: usize, rows: &[BettiRow]) -> BettiTable {
        let mut t = BettiTable::new(d, n);
        for r in rows {
            t.add_parts(r.i, r.degree, r.lambda_l.clone(), r.mu_w.clone(), r.mult);
        }
        t
    }

    /// Entries present in exactly one of the two tables, as signed
    /// multiplicity differences `self - other`.
    pub fn difference(&self, other: &BettiTable) -> Vec<(BettiKey, i64)> {
        let mut keys: Vec<&BettiKey> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let diff = self.multiplicity(k) as i64 - other.multiplicity(k) as i64;
                (diff != 0).then(|| (k.clone(), diff))
            })
            .collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3} {:>4}  {:<12} {:<12} {:>4} {:>10}",
            "i", "deg", "L", "W", "mult", "rank"
        )?;
        for (k, m) in self.iter() {
            writeln!(
                f,
                "{:>3} {:>4}  {:<12} {:<12} {:>4} {:>10}",
                k.i,
                k.degree,
                k.label.lambda_l.to_string(),
                k.label.mu_w.to_string(),
                m,
                self.rank_of(k)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    #[test]
    fn zero_rank_labels_are_dropped() {
        let mut t = BettiTable::new(2, 4);
        t.add_parts(1, 2, part(&[1, 1, 1]), Partition::empty(), 1);
        t.add_parts(1, 2, part(&[1]), part(&[1, 1, 1]), 1);
        assert!(t.is_empty());
        t.add_parts(1, 2, part(&[1, 1]), part(&[1, 1]), 2);
        assert_eq!(t.term_rank(1), BigUint::from(2u32));
    }

    #[test]
    fn regularity_and_projdim() {
        let mut t = BettiTable::new(2, 4);
        assert!(t.regularity().is_err());
        assert!(t.proj_dim().is_err());
        t.add_parts(0, 0, Partition::empty(), Partition::empty(), 1);
        t.add_parts(1, 3, part(&[1]), part(&[1]), 1);
        t.add_parts(2, 3, part(&[1, 1]), part(&[1]), 1);
        assert_eq!(t.regularity().unwrap(), 2);
        assert_eq!(t.proj_dim().unwrap(), 2);
    }

    #[test]
    fn remove_and_difference() {
        let mut t = BettiTable::new(2, 4);
        let k = BettiKey::new(0, 1, Partition::empty(), Partition::empty());
        t.add(k.clone(), 2);
        assert_eq!(t.remove(&k, 3), Err(2));
        t.remove(&k, 1).unwrap();
        assert_eq!(t.multiplicity(&k), 1);
        let empty = BettiTable::new(2, 4);
        assert_eq!(t.difference(&empty), vec![(k.clone(), 1)]);
        t.remove(&k, 1).unwrap();
        assert!(t.is_empty());
    }

    #[test]
    fn rows_round_trip_through_json() {
        let mut t = BettiTable::new(3, 8);
        t.add_parts(2, 3, part(&[2, 1]), part(&[1, 1, 1]), 1);
        t.add_parts(3, 5, part(&[2, 1, 1]), part(&[2, 2]), 2);
        let json = serde_json::to_string(&t.to_rows()).unwrap();
        assert!(json.contains("\"lambdaL\":[2,1]"));
        let rows: Vec<BettiRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(BettiTable::from_rows(3, 8, &rows), t);
    }
}
