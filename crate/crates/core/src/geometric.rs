//! The geometric technique on `Gr(s, L)`: decompose `∧^q ξ` for
//! `ξ = R ⊗ (Q* ⊕ W)`, push every summand through Bott, and collect
//! `F_i = ⊕_j H^j(∧^{i+j} ξ) ⊗ A(-i-j)`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::betti::{BettiKey, BettiTable, Label};
use crate::bott::{
    cohomology_of_summand, euler_characteristic, summand_weights, CohomologyResult,
    GrassmannianContext,
};
use crate::error::Result;
use crate::hilbert::HilbertSeries;
use crate::partitions::{conjugate, partitions_in_box, schur_rank, Partition};
use crate::resolution::koszul_table;
use crate::schur::lr_product;

/// One irreducible summand `S_λ R ⊗ S_μ Q* ⊗ S_ν W` of `∧^q ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiSummand {
    pub lambda_r: Partition,
    pub mu_qstar: Partition,
    pub nu_w: Partition,
    pub multiplicity: u64,
}

impl XiSummand {
    /// Rank of the bundle: `rank S_λ R · rank S_μ Q* · dim S_ν W`.
    pub fn rank(&self, ctx: &GrassmannianContext) -> BigUint {
        schur_rank(&self.lambda_r, ctx.s)
            * schur_rank(&self.mu_qstar, ctx.rank_q())
            * schur_rank(&self.nu_w, ctx.dim_w())
            * self.multiplicity
    }
}

/// `rank ξ = s(d - s) + s(n - d)`.
pub fn xi_rank(ctx: &GrassmannianContext) -> usize {
    ctx.s * ctx.rank_q() + ctx.s * ctx.dim_w()
}

/// Irreducible decomposition of `∧^q ξ`, grouped by the split
/// `∧^a(R ⊗ Q*) ⊗ ∧^{q-a}(R ⊗ W)` with `a` descending.
pub fn xi_exterior_decomposition(ctx: &GrassmannianContext, q: u32) -> Vec<XiSummand> {
    let mut out = Vec::new();
    for a in (0..=q).rev() {
        let b = q - a;
        // S_λ R ⊗ S_{λ'} Q* needs ℓ(λ) <= s and λ_1 = ℓ(λ') <= d - s
        let q_parts = partitions_in_box(a, ctx.s, ctx.rank_q() as u32);
        let w_parts = partitions_in_box(b, ctx.s, ctx.dim_w() as u32);
        for lambda in &q_parts {
            for mu in &w_parts {
                for (nu, &c) in &lr_product(lambda, mu) {
                    if nu.length() > ctx.s {
                        continue;
                    }
                    out.push(XiSummand {
                        lambda_r: nu.clone(),
                        mu_qstar: conjugate(lambda),
                        nu_w: conjugate(mu),
                        multiplicity: c,
                    });
                }
            }
        }
    }
    out
}

/// Multiplicities of labels `(λ_L; μ_W)`.
pub type LabelCounts = BTreeMap<Label, u64>;

/// `H^j(Gr; ∧^q ξ)` for every `j`, as `GL(L) × GL(W)` labels.
pub fn cohomology_table(ctx: &GrassmannianContext, q: u32) -> Result<BTreeMap<usize, LabelCounts>> {
    let mut table: BTreeMap<usize, LabelCounts> = BTreeMap::new();
    for summand in xi_exterior_decomposition(ctx, q) {
        if let CohomologyResult::Nonzero { degree, weight } =
            cohomology_of_summand(&summand.lambda_r, &summand.mu_qstar, ctx)?
        {
            // entries of ν + ρ are nonnegative here, so η is a partition
            let eta = weight.to_partition()?;
            *table
                .entry(degree)
                .or_default()
                .entry(Label::new(eta, summand.nu_w.clone()))
                .or_insert(0) += summand.multiplicity;
        }
    }
    Ok(table)
}

/// Total rank of `H^j(∧^q ξ)` for every `j` with nonzero cohomology.
pub fn cohomology_ranks(ctx: &GrassmannianContext, q: u32) -> Result<BTreeMap<usize, BigUint>> {
    Ok(cohomology_table(ctx, q)?
        .into_iter()
        .map(|(j, labels)| {
            let total = labels
                .iter()
                .map(|(l, &m)| l.rank(ctx.d, ctx.n) * m)
                .fold(BigUint::zero(), |a, b| a + b);
            (j, total)
        })
        .collect())
}

fn assemble(
    ctx: &GrassmannianContext,
    keep: impl Fn(&XiSummand) -> bool + Sync,
) -> Result<BettiTable> {
    let parts: Vec<Result<BettiTable>> = (0..=xi_rank(ctx) as u32)
        .into_par_iter()
        .map(|q| {
            let mut t = BettiTable::new(ctx.d, ctx.n);
            for summand in xi_exterior_decomposition(ctx, q) {
                if !keep(&summand) {
                    continue;
                }
                if let CohomologyResult::Nonzero { degree, weight } =
                    cohomology_of_summand(&summand.lambda_r, &summand.mu_qstar, ctx)?
                {
                    let i = q as i32 - degree as i32;
                    assert!(i >= 0, "F_{i} nonzero: H^{degree} of a summand of ∧^{q} ξ");
                    t.add(
                        BettiKey::new(i, q as i32, weight.to_partition()?, summand.nu_w.clone()),
                        summand.multiplicity,
                    );
                }
            }
            Ok(t)
        })
        .collect();
    let mut table = BettiTable::new(ctx.d, ctx.n);
    for t in parts {
        table.merge(&t?);
    }
    Ok(table)
}

/// Terms of the minimal free resolution of the normalization `Õ_{s,d,n}`.
pub fn resolution_terms(ctx: &GrassmannianContext) -> Result<BettiTable> {
    if ctx.s == ctx.d {
        // Gr(d, L) is a point and ξ = L ⊗ W: the Koszul complex
        return Ok(koszul_table(&[(Label::trivial(), 0)], ctx.d, ctx.n));
    }
    assemble(ctx, |_| true)
}

/// Same as [`resolution_terms`] without the Koszul shortcut for `s = d`.
pub fn resolution_terms_generic(ctx: &GrassmannianContext) -> Result<BettiTable> {
    assemble(ctx, |_| true)
}

/// The subcomplex `F^{≤r,s}`: keeps summands coming from
/// `∧^k(R ⊗ Q*) ⊗ ∧^{q-k}(R ⊗ W)` with `k <= r` and `q - k <= s_cap`
/// (`None` means no cap).
pub fn subcomplex_terms(
    ctx: &GrassmannianContext,
    r: usize,
    s_cap: Option<usize>,
) -> Result<BettiTable> {
    assemble(ctx, move |x| {
        let k = x.mu_qstar.size() as usize;
        let rest = x.nu_w.size() as usize;
        k <= r && s_cap.is_none_or(|cap| rest <= cap)
    })
}

/// Hilbert series of `Õ_{s,d,n}` from `Σ_q (-t)^q χ(∧^q ξ)`, with each Euler
/// characteristic taken from the Weyl dimension polynomial rather than from
/// the sorted Bott weights.
pub fn hilbert_series_normalization(ctx: &GrassmannianContext) -> Result<HilbertSeries> {
    let mut hs = HilbertSeries::zero((ctx.n * ctx.n) as u32);
    for q in 0..=xi_rank(ctx) as u32 {
        let mut chi = BigInt::zero();
        for x in xi_exterior_decomposition(ctx, q) {
            let (alpha, beta) = summand_weights(&x.lambda_r, &x.mu_qstar, ctx)?;
            chi += euler_characteristic(&alpha, &beta, ctx)?
                * BigInt::from(schur_rank(&x.nu_w, ctx.dim_w()))
                * BigInt::from(x.multiplicity);
        }
        hs.add_term(q as usize, if q % 2 == 0 { chi } else { -chi });
    }
    Ok(hs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{binomial, part};

    fn ctx(s: usize, d: usize, n: usize) -> GrassmannianContext {
        GrassmannianContext::new(s, d, n).unwrap()
    }

    fn all_contexts() -> Vec<GrassmannianContext> {
        let mut v = Vec::new();
        for d in 1..=4 {
            for s in 1..=d {
                for n in d + 1..=9 {
                    v.push(ctx(s, d, n));
                }
            }
        }
        v
    }

    #[test]
    fn decomposition_examples() {
        let c = ctx(1, 2, 4);
        let q1 = xi_exterior_decomposition(&c, 1);
        assert_eq!(
            q1,
            vec![
                XiSummand {
                    lambda_r: part(&[1]),
                    mu_qstar: part(&[1]),
                    nu_w: Partition::empty(),
                    multiplicity: 1
                },
                XiSummand {
                    lambda_r: part(&[1]),
                    mu_qstar: Partition::empty(),
                    nu_w: part(&[1]),
                    multiplicity: 1
                },
            ]
        );
        let q0 = xi_exterior_decomposition(&c, 0);
        assert_eq!(q0.len(), 1);
        assert!(q0[0].lambda_r.is_empty() && q0[0].nu_w.is_empty());

        let c = ctx(2, 3, 8);
        let total: BigUint = xi_exterior_decomposition(&c, 3)
            .iter()
            .map(|x| x.rank(&c))
            .sum();
        assert_eq!(total, BigUint::from(220u32));
    }

    #[test]
    fn decomposition_ranks_are_binomial() {
        for c in all_contexts() {
            let r = xi_rank(&c) as u64;
            for q in 0..=r as u32 + 1 {
                let parts = xi_exterior_decomposition(&c, q);
                for x in &parts {
                    assert_eq!(x.lambda_r.size(), x.mu_qstar.size() + x.nu_w.size());
                }
                let total: BigUint = parts.iter().map(|x| x.rank(&c)).sum();
                assert_eq!(total, binomial(r, u64::from(q)), "{c:?} q={q}");
            }
        }
    }

    #[test]
    fn macaulay2_cohomology_ranks() {
        let c = ctx(2, 3, 8);
        let expected = [(1u32, 1u32, 0u32), (2, 45, 1), (3, 180, 15), (4, 310, 145)];
        for (q, h1, h2) in expected {
            let ranks = cohomology_ranks(&c, q).unwrap();
            assert_eq!(
                ranks.get(&1).cloned().unwrap_or_default(),
                BigUint::from(h1),
                "q={q}"
            );
            assert_eq!(
                ranks.get(&2).cloned().unwrap_or_default(),
                BigUint::from(h2),
                "q={q}"
            );
        }
        let ranks = cohomology_ranks(&c, 5).unwrap();
        assert_eq!(ranks[&2], BigUint::from(705u32));
    }

    #[test]
    fn no_negative_terms_and_s1_degrees() {
        for c in all_contexts() {
            let t = resolution_terms(&c).unwrap();
            assert!(t.min_index().unwrap() >= 0);
            if c.s == 1 {
                for q in 0..=xi_rank(&c) as u32 {
                    for j in cohomology_table(&c, q).unwrap().keys() {
                        assert!(*j < c.d, "{c:?} q={q} j={j}");
                    }
                }
                for (k, _) in t.iter().filter(|(k, _)| k.i > 0) {
                    assert_eq!(k.degree - k.i, c.d as i32 - 1, "{c:?} {k}");
                }
            }
        }
    }

    #[test]
    fn hilbert_series_routes_agree() {
        for c in all_contexts() {
            let t = resolution_terms(&c).unwrap();
            assert_eq!(
                t.hilbert_series(),
                hilbert_series_normalization(&c).unwrap(),
                "{c:?}"
            );
        }
    }

    #[test]
    fn degenerate_context_is_koszul() {
        for d in 1..=3 {
            for n in d + 1..=6 {
                let c = ctx(d, d, n);
                let t = resolution_terms(&c).unwrap();
                assert_eq!(t, resolution_terms_generic(&c).unwrap());
                assert_eq!(t.regularity().unwrap(), 0);
                let hs = HilbertSeries::one_minus_t_power((d * (n - d)) as u32, (n * n) as u32);
                assert_eq!(t.hilbert_series(), hs);
                for i in 0..=(d * (n - d)) as i32 {
                    assert_eq!(t.term_rank(i), binomial((d * (n - d)) as u64, i as u64));
                }
            }
        }
    }

    #[test]
    fn uncapped_subcomplex_is_everything() {
        for c in all_contexts().into_iter().filter(|c| c.n <= 7) {
            let full = resolution_terms_generic(&c).unwrap();
            let sub = subcomplex_terms(&c, c.s * c.rank_q(), Some(c.s * c.dim_w())).unwrap();
            assert_eq!(sub, full);
            assert_eq!(subcomplex_terms(&c, usize::MAX, None).unwrap(), full);
        }
    }

    #[test]
    fn pure_w_subcomplex_for_d2() {
        // r = 0 keeps only ∧^•(R ⊗ W): A and (i,1; 1^{i+1})(-i-1)
        let c = ctx(1, 2, 6);
        let sub = subcomplex_terms(&c, 0, None).unwrap();
        let mut expected = BettiTable::new(2, 6);
        expected.add_parts(0, 0, Partition::empty(), Partition::empty(), 1);
        for i in 1..=3u32 {
            expected.add_parts(
                i as i32,
                i as i32 + 1,
                part(&[i, 1]),
                Partition::column(i + 1),
                1,
            );
        }
        assert_eq!(sub, expected);
        // F_1 of this subcomplex is only ∧²L ⊗ ∧²W in degree 2
        let f1: Vec<_> = sub.term(1).collect();
        assert_eq!(f1.len(), 1);
        assert_eq!(f1[0].0.label, Label::new(part(&[1, 1]), part(&[1, 1])));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_context() -> impl Strategy<Value = GrassmannianContext> {
            (2usize..=6)
                .prop_flat_map(|n| (Just(n), 1..n))
                .prop_flat_map(|(n, d)| (Just(n), Just(d), 1..=d))
                .prop_filter("keeps ξ small", |(n, _, s)| s * (n - s) <= 9)
                .prop_map(|(n, d, s)| GrassmannianContext::new(s, d, n).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn no_negative_terms_and_hilbert_routes_agree(c in small_context()) {
                let t = resolution_terms(&c).unwrap();
                prop_assert!(t.min_index().unwrap() >= 0);
                prop_assert_eq!(t.hilbert_series(), hilbert_series_normalization(&c).unwrap());
            }
        }
    }
}
