use itertools::Itertools;

use super::field::{add_mod, mul_mod, PrimeFieldMatrix};
use super::kalman::{reduced_kalman_matrix, sample_member};
use crate::error::{Error, Result};

/// `s(n - d)`.
pub fn expected_codim(s: usize, d: usize, n: usize) -> usize {
    s * (n - d)
}

/// Derivative of the stack `(γ α^m)_m` in the direction `(dα, dγ)`:
/// `dγ α^m + γ Σ_t α^t dα α^{m-1-t}`.
fn kalman_derivative(
    alpha: &PrimeFieldMatrix,
    gamma: &PrimeFieldMatrix,
    d_alpha: &PrimeFieldMatrix,
    d_gamma: &PrimeFieldMatrix,
) -> PrimeFieldMatrix {
    let d = alpha.rows();
    let p = alpha.prime();
    let mut powers = vec![PrimeFieldMatrix::identity(d, p)];
    for m in 1..d {
        powers.push(powers[m - 1].mul(alpha));
    }
    let blocks: Vec<PrimeFieldMatrix> = (0..d)
        .map(|m| {
            let mut block = d_gamma.mul(&powers[m]);
            for t in 0..m {
                let inner = powers[t].mul(d_alpha).mul(&powers[m - 1 - t]);
                block = block.add(&gamma.mul(&inner));
            }
            block
        })
        .collect();
    PrimeFieldMatrix::vstack(&blocks)
}

/// Rank of the Jacobian of all `(d-s+1)`-minors of the reduced Kalman matrix
/// at `sample_member(s, d, n, seed)`. The minors only involve `α` and `γ`, so
/// the `β` and `δ` columns are identically zero and omitted.
pub fn jacobian_codim(s: usize, d: usize, n: usize, seed: u64, p: u64) -> Result<usize> {
    if s >= d {
        return Err(Error::OutOfRange(format!(
            "need s < d for a nontrivial minor ideal, got s={s}, d={d}"
        )));
    }
    let pt = sample_member(s, d, n, seed, p)?;
    let (alpha, gamma) = (pt.alpha(), pt.gamma());
    let k_mat = reduced_kalman_matrix(&pt);
    let size = d - s + 1;

    let minors: Vec<(Vec<usize>, Vec<usize>, PrimeFieldMatrix)> = (0..k_mat.rows())
        .combinations(size)
        .cartesian_product((0..d).combinations(size))
        .map(|(rows, cols)| {
            let adj = k_mat.select(&rows, &cols).adjugate();
            (rows, cols, adj)
        })
        .collect();

    let w = n - d;
    let directions = d * d + w * d;
    let mut jac = PrimeFieldMatrix::zeros(minors.len(), directions, p);
    for dir in 0..directions {
        let mut d_alpha = PrimeFieldMatrix::zeros(d, d, p);
        let mut d_gamma = PrimeFieldMatrix::zeros(w, d, p);
        if dir < d * d {
            d_alpha.set(dir / d, dir % d, 1);
        } else {
            let e = dir - d * d;
            d_gamma.set(e / d, e % d, 1);
        }
        let dk = kalman_derivative(&alpha, &gamma, &d_alpha, &d_gamma);
        for (r, (rows, cols, adj)) in minors.iter().enumerate() {
            // d det(M) = tr(adj(M) dM)
            let mut v = 0;
            for (x, &i) in rows.iter().enumerate() {
                for (y, &j) in cols.iter().enumerate() {
                    v = add_mod(v, mul_mod(adj.get(y, x), dk.get(i, j), p), p);
                }
            }
            jac.set(r, dir, v);
        }
    }
    Ok(jac.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::field::DEFAULT_PRIME;
    use crate::verifier::kalman::{kalman_stack, sample_generic};

    #[test]
    fn derivative_matches_central_difference() {
        // with d = 3 the stack has degree <= 2 in α, so the central difference is exact
        let p = 1_000_003;
        let pt = sample_generic(3, 5, 1, p).unwrap();
        let (a, g) = (pt.alpha(), pt.gamma());
        let mut da = PrimeFieldMatrix::zeros(3, 3, p);
        da.set(1, 2, 1);
        let lin = kalman_derivative(&a, &g, &da, &PrimeFieldMatrix::zeros(2, 3, p));
        let shifted = |t: u64| {
            let mut a2 = a.clone();
            a2.set(1, 2, add_mod(a2.get(1, 2), t, p));
            kalman_stack(&a2, &g)
        };
        let (plus, minus) = (shifted(1), shifted(p - 1));
        let half = crate::verifier::field::inv_mod(2, p);
        for i in 0..lin.rows() {
            for j in 0..3 {
                let diff = crate::verifier::field::sub_mod(plus.get(i, j), minus.get(i, j), p);
                assert_eq!(mul_mod(diff, half, p), lin.get(i, j));
            }
        }
    }

    #[test]
    fn codim_examples() {
        for (s, d, n) in [(1, 2, 4), (1, 3, 5), (2, 3, 5)] {
            assert_eq!(
                jacobian_codim(s, d, n, 0, DEFAULT_PRIME).unwrap(),
                expected_codim(s, d, n)
            );
        }
        assert!(jacobian_codim(2, 2, 4, 0, DEFAULT_PRIME).is_err());
    }
}
