use serde::{Deserialize, Serialize};

use crate::betti::{BettiKey, BettiTable, Label};
use crate::error::{Error, Result};
use crate::partitions::{partitions_in_box, Partition};
use crate::schur::lr_product;

/// One side of a cancellation pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecSummand {
    pub i: i32,
    pub e: i32,
    #[serde(rename = "lambdaL")]
    pub lambda_l: Partition,
    #[serde(rename = "muW")]
    pub mu_w: Partition,
    pub mult: u64,
}

impl SpecSummand {
    pub fn new(i: i32, e: i32, lambda_l: Partition, mu_w: Partition, mult: u64) -> Self {
        SpecSummand {
            i,
            e,
            lambda_l,
            mu_w,
            mult,
        }
    }

    pub fn key(&self) -> BettiKey {
        BettiKey::new(self.i, self.e, self.lambda_l.clone(), self.mu_w.clone())
    }
}

/// A summand of the source resolution mapped isomorphically onto a summand of
/// the target resolution by the comparison map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationPair {
    pub source: SpecSummand,
    pub target: SpecSummand,
}

impl CancellationPair {
    /// A pair cancelling `mult` copies of `(λ; μ)(-e)` in homological index `i`.
    pub fn same(i: i32, e: i32, lambda_l: Partition, mu_w: Partition, mult: u64) -> Self {
        let s = SpecSummand::new(i, e, lambda_l, mu_w, mult);
        CancellationPair {
            source: s.clone(),
            target: s,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.source != self.target {
            return Err(Error::MalformedCancellation(format!(
                "source {} x{} and target {} x{} differ",
                self.source.key(),
                self.source.mult,
                self.target.key(),
                self.target.mult
            )));
        }
        Ok(())
    }
}

/// The isomorphic components of a comparison map `F̃ → G`, stored as data.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CancellationSpec {
    pub pairs: Vec<CancellationPair>,
}

impl CancellationSpec {
    pub fn new(pairs: Vec<CancellationPair>) -> Self {
        CancellationSpec { pairs }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Drops pairs whose label is zero for `dim L = d`, `dim V = n`.
    pub fn pruned(&self, d: usize, n: usize) -> Self {
        CancellationSpec {
            pairs: self
                .pairs
                .iter()
                .filter(|p| {
                    let label = Label::new(p.source.lambda_l.clone(), p.source.mu_w.clone());
                    label.rank(d, n) != num_bigint::BigUint::from(0u32)
                })
                .cloned()
                .collect(),
        }
    }

    /// Largest homological index named by the spec.
    pub fn max_index(&self) -> Option<i32> {
        self.pairs.iter().map(|p| p.source.i).max()
    }
}

/// Koszul complex on the `d(n-d)` linear forms `L ⊗ W`, tensored with each
/// generator label and twisted: `G_i = ⊕ label ⊗ ∧^i(L ⊗ W) ⊗ A(-i-c)`.
pub fn koszul_table(generators: &[(Label, i32)], d: usize, n: usize) -> BettiTable {
    let mut table = BettiTable::new(d, n);
    let dim_w = n - d;
    for i in 0..=(d * dim_w) as u32 {
        for kappa in partitions_in_box(i, d, dim_w as u32) {
            let kappa_w = kappa.conjugate();
            for (label, twist) in generators {
                let l_side = lr_product(&label.lambda_l, &kappa);
                let w_side = lr_product(&label.mu_w, &kappa_w);
                for (lp, &lm) in &l_side {
                    for (wp, &wm) in &w_side {
                        table.add(
                            BettiKey::new(i as i32, i as i32 + twist, lp.clone(), wp.clone()),
                            lm * wm,
                        );
                    }
                }
            }
        }
    }
    table
}

/// Betti table of the mapping cone of a comparison map `F̃ → G` lifting a
/// surjection `Õ → Q`, reindexed to resolve the kernel:
/// `out_i = F̃_i ⊕ G_{i+1}` with every spec pair removed from both sides.
pub fn mapping_cone(
    f_tilde: &BettiTable,
    g: &BettiTable,
    spec: &CancellationSpec,
) -> Result<BettiTable> {
    if (f_tilde.d(), f_tilde.n()) != (g.d(), g.n()) {
        return Err(Error::InvalidContext(format!(
            "cone of tables with different shapes ({}, {}) and ({}, {})",
            f_tilde.d(),
            f_tilde.n(),
            g.d(),
            g.n()
        )));
    }
    let mut source = f_tilde.clone();
    let mut target = g.clone();
    for pair in &spec.pairs {
        pair.validate()?;
        let key = pair.source.key();
        source
            .remove(&key, pair.source.mult)
            .map_err(|have| Error::MissingCancellation {
                side: "source",
                summand: format!("{key} x{} (have {have})", pair.source.mult),
            })?;
        target
            .remove(&key, pair.target.mult)
            .map_err(|have| Error::MissingCancellation {
                side: "target",
                summand: format!("{key} x{} (have {have})", pair.target.mult),
            })?;
    }
    let mut out = source;
    out.merge(&target.shifted(-1, 0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{binomial, part};

    #[test]
    fn koszul_basics() {
        let g = koszul_table(&[(Label::trivial(), 3)], 2, 5);
        let f0: Vec<_> = g.term(0).collect();
        assert_eq!(f0.len(), 1);
        assert_eq!(f0[0].0.degree, 3);
        for i in 0..=6 {
            assert_eq!(g.term_rank(i), binomial(6, i as u64));
            assert!(g.term(i).all(|(k, _)| k.degree == i + 3));
        }
        // d = 2: G_i = ⊕_{λ ⊢ i, ℓ(λ) <= 2} (λ; λ')
        let g = koszul_table(&[(Label::trivial(), 1)], 2, 6);
        let f2: Vec<Label> = g.term(2).map(|(k, _)| k.label.clone()).collect();
        assert_eq!(
            f2,
            vec![
                Label::new(part(&[1, 1]), part(&[2])),
                Label::new(part(&[2]), part(&[1, 1]))
            ]
        );
    }

    #[test]
    fn koszul_with_nontrivial_generator() {
        let g = koszul_table(&[(Label::new(part(&[1]), part(&[1])), 0)], 2, 4);
        // rank of G_i is 4 · binomial(4, i)
        for i in 0..=4 {
            assert_eq!(g.term_rank(i), binomial(4, i as u64) * 4u32);
        }
    }

    #[test]
    fn empty_spec_cone_is_shifted_sum() {
        let f = koszul_table(&[(Label::trivial(), 0)], 2, 4);
        let g = koszul_table(&[(Label::trivial(), 1)], 2, 4);
        let cone = mapping_cone(&f, &g, &CancellationSpec::empty()).unwrap();
        assert_eq!(cone.len(), f.len() + g.len());
        assert_eq!(
            cone.hilbert_series(),
            &f.hilbert_series() - &g.hilbert_series()
        );
        assert_eq!(cone.min_index(), Some(-1));
    }

    #[test]
    fn missing_pair_is_an_error() {
        let f = koszul_table(&[(Label::trivial(), 0)], 2, 4);
        let g = koszul_table(&[(Label::trivial(), 1)], 2, 4);
        let spec = CancellationSpec::new(vec![CancellationPair::same(
            0,
            0,
            Partition::empty(),
            Partition::empty(),
            1,
        )]);
        let err = mapping_cone(&f, &g, &spec).unwrap_err();
        assert!(
            matches!(err, Error::MissingCancellation { side: "target", .. }),
            "{err}"
        );
        let spec = CancellationSpec::new(vec![CancellationPair::same(
            0,
            1,
            Partition::empty(),
            Partition::empty(),
            1,
        )]);
        let err = mapping_cone(&f, &g, &spec).unwrap_err();
        assert!(
            matches!(err, Error::MissingCancellation { side: "source", .. }),
            "{err}"
        );
        let mut bad = CancellationPair::same(0, 1, Partition::empty(), Partition::empty(), 1);
        bad.target.mult = 2;
        assert!(matches!(
            mapping_cone(&f, &g, &CancellationSpec::new(vec![bad])),
            Err(Error::MalformedCancellation(_))
        ));
    }

    #[test]
    fn spec_json_schema() {
        let spec = CancellationSpec::new(vec![CancellationPair::same(
            2,
            4,
            part(&[2]),
            part(&[1, 1]),
            1,
        )]);
        let json = spec.to_json().unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value[0]["source"]["lambdaL"], serde_json::json!([2]));
        assert_eq!(value[0]["target"]["muW"], serde_json::json!([1, 1]));
        assert_eq!(value[0]["source"]["e"], 4);
        assert_eq!(CancellationSpec::from_json(&json).unwrap(), spec);
    }

    mod props {
        use super::*;
        use crate::bott::GrassmannianContext;
        use crate::geometric::resolution_terms;
        use crate::resolution::d2_cancellation_spec;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn cone_hilbert_series_identity(n in 3usize..8, mask in any::<u16>()) {
                let f = resolution_terms(&GrassmannianContext::new(1, 2, n).unwrap()).unwrap();
                let g = koszul_table(&[(Label::trivial(), 1)], 2, n);
                let pairs = d2_cancellation_spec(n)
                    .pairs
                    .into_iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, p)| p)
                    .collect();
                let cone = mapping_cone(&f, &g, &CancellationSpec::new(pairs)).unwrap();
                prop_assert_eq!(cone.hilbert_series(), &f.hilbert_series() - &g.hilbert_series());
            }

            #[test]
            fn koszul_ranks(d in 1usize..4, extra in 1usize..3, twist in 0i32..3) {
                let n = d + extra;
                let g = koszul_table(&[(Label::trivial(), twist)], d, n);
                let m = (d * (n - d)) as u64;
                for i in 0..=m {
                    prop_assert_eq!(g.term_rank(i as i32), binomial(m, i));
                }
            }
        }
    }
}
