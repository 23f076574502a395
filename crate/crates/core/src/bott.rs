//! Cohomology of irreducible homogeneous bundles on the Grassmannian
//! `Gr(s, L)` in characteristic zero (Borel–Weil–Bott), and the Kempf
//! vanishing predicate.
//!
//! Weights are written `(α, β)` with the `Q`-part first and the `R`-part
//! second, so a bundle `S_α Q ⊗ S_β R` corresponds to the length-`d` weight
//! obtained by concatenation. Bundles built from `Q*` must be converted with
//! [`Weight::dual`] first; [`cohomology_of_summand`] does this.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, Weight};

/// `Gr(s, L)` inside `V`, with `dim L = d` and `dim V = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannianContext {
    pub s: usize,
    pub d: usize,
    pub n: usize,
}

impl GrassmannianContext {
    pub fn new(s: usize, d: usize, n: usize) -> Result<Self> {
        if s < 1 || s > d || d >= n {
            return Err(Error::InvalidContext(format!(
                "need 1 <= s <= d < n, got s={s}, d={d}, n={n}"
            )));
        }
        Ok(GrassmannianContext { s, d, n })
    }

    /// Rank of the tautological quotient `Q`.
    pub fn rank_q(&self) -> usize {
        self.d - self.s
    }

    /// `dim W = n - d`.
    pub fn dim_w(&self) -> usize {
        self.n - self.d
    }

    /// `dim Gr(s, L) = s(d - s)`.
    pub fn dim(&self) -> usize {
        self.s * (self.d - self.s)
    }

    /// `ρ = (d-1, ..., 1, 0)`.
    pub fn rho(&self) -> Vec<i64> {
        (0..self.d as i64).rev().collect()
    }

    fn shifted(&self, alpha: &Weight, beta: &Weight) -> Result<Vec<i64>> {
        if alpha.len() != self.rank_q() {
            return Err(Error::LengthMismatch {
                expected: self.rank_q(),
                got: alpha.len(),
            });
        }
        if beta.len() != self.s {
            return Err(Error::LengthMismatch {
                expected: self.s,
                got: beta.len(),
            });
        }
        Ok(alpha
            .entries()
            .iter()
            .chain(beta.entries())
            .zip(self.rho())
            .map(|(x, r)| x + r)
            .collect())
    }
}

/// The unique nonvanishing cohomology group of an irreducible bundle, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CohomologyResult {
    Zero,
    /// `H^degree = S_weight L`.
    Nonzero {
        degree: usize,
        weight: Weight,
    },
}

impl CohomologyResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, CohomologyResult::Zero)
    }
}

/// `H^*(Gr(s, L); S_α Q ⊗ S_β R)` by the ρ-shifted sorting algorithm.
pub fn bott(alpha: &Weight, beta: &Weight, ctx: &GrassmannianContext) -> Result<CohomologyResult> {
    let shifted = ctx.shifted(alpha, beta)?;

    // inversions of the sorting permutation; a tie means a fixed reflection
    let mut inversions = 0usize;
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Equal => return Ok(CohomologyResult::Zero),
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let eta = sorted.iter().zip(ctx.rho()).map(|(x, r)| x - r).collect();
    Ok(CohomologyResult::Nonzero {
        degree: inversions,
        weight: Weight::new(eta)?,
    })
}

/// Cohomology of `S_λ R ⊗ S_μ Q*`.
pub fn cohomology_of_summand(
    lambda_r: &Partition,
    mu_qstar: &Partition,
    ctx: &GrassmannianContext,
) -> Result<CohomologyResult> {
    let (alpha, beta) = summand_weights(lambda_r, mu_qstar, ctx)?;
    bott(&alpha, &beta, ctx)
}

/// The `(Q, R)` weight pair of `S_λ R ⊗ S_μ Q*`.
pub fn summand_weights(
    lambda_r: &Partition,
    mu_qstar: &Partition,
    ctx: &GrassmannianContext,
) -> Result<(Weight, Weight)> {
    if lambda_r.length() > ctx.s {
        return Err(Error::RankViolation {
            what: "R-partition",
            len: lambda_r.length(),
            rank: ctx.s,
        });
    }
    if mu_qstar.length() > ctx.rank_q() {
        return Err(Error::RankViolation {
            what: "Q*-partition",
            len: mu_qstar.length(),
            rank: ctx.rank_q(),
        });
    }
    let alpha = mu_qstar.to_weight(ctx.rank_q())?.dual();
    let beta = lambda_r.to_weight(ctx.s)?;
    Ok((alpha, beta))
}

/// `Σ_j (-1)^j rank H^j(S_α Q ⊗ S_β R)`, computed from the Weyl dimension
/// polynomial evaluated at the ρ-shifted weight (no sorting involved).
pub fn euler_characteristic(
    alpha: &Weight,
    beta: &Weight,
    ctx: &GrassmannianContext,
) -> Result<BigInt> {
    let x = ctx.shifted(alpha, beta)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            num *= x[i] - x[j];
            den *= (j - i) as i64;
        }
    }
    if num.is_zero() {
        return Ok(num);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Outcome of the Kempf vanishing test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KempfResult {
    /// `H^0 = L_{(α,β)}(L*)`, all higher cohomology vanishing.
    Sections(Partition),
    NoSections,
}

/// Global sections of `L_α(R*) ⊗ L_β(Q*)`.
pub fn kempf_h0(
    alpha: &Partition,
    beta: &Partition,
    ctx: &GrassmannianContext,
) -> Result<KempfResult> {
    if alpha.length() > ctx.s {
        return Err(Error::RankViolation {
            what: "R*-partition",
            len: alpha.length(),
            rank: ctx.s,
        });
    }
    if beta.length() > ctx.rank_q() {
        return Err(Error::RankViolation {
            what: "Q*-partition",
            len: beta.length(),
            rank: ctx.rank_q(),
        });
    }
    if alpha.part(ctx.s) < beta.first() {
        return Ok(KempfResult::NoSections);
    }
    let mut parts = alpha.to_weight(ctx.s)?.entries().to_vec();
    parts.extend(beta.parts().iter().map(|&b| i64::from(b)));
    let concatenated = Weight::new(parts)?.to_partition()?;
    Ok(KempfResult::Sections(concatenated))
}
