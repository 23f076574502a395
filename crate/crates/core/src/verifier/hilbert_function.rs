//! Evaluation-rank oracle for the Hilbert function of `A / I`, where `I` is
//! generated by the `(d-s+1)`-minors of the reduced Kalman matrix.

use itertools::Itertools;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::field::{mul_mod, PrimeFieldMatrix, DEFAULT_PRIME};
use super::kalman::kalman_stack;
use crate::error::{Error, Result};
use crate::partitions::binomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfConfig {
    pub prime: u64,
    /// Refuse degrees whose monomial count in `n²` variables exceeds this.
    pub budget: u64,
    /// Independent point sets per degree; the largest rank wins.
    pub repeats: usize,
    /// Extra evaluation points beyond the dimension bound.
    pub margin: usize,
}

impl Default for HfConfig {
    fn default() -> Self {
        HfConfig {
            prime: DEFAULT_PRIME,
            budget: 100_000,
            repeats: 2,
            margin: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericHilbertFunction {
    /// `HF(k)` of `A / I` for `k = 0..=k_max`.
    pub values: Vec<u64>,
    /// `dim I_k`.
    pub ideal_dims: Vec<u64>,
}

fn small_binomial(n: u64, k: u64) -> u64 {
    binomial(n, k).to_u64().expect("binomial fits in u64")
}

/// Monomials of degree `e` in `m` variables, `binomial(m + e - 1, e)` of them.
fn monomials(m: usize, e: usize) -> Vec<Vec<usize>> {
    (0..m).combinations_with_replacement(e).collect()
}

struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
    degree: usize,
}

/// Values of all minors at a point `x = (α, γ)` flattened row-major.
fn eval_minors(x: &[u64], d: usize, w: usize, minors: &[Minor], p: u64) -> Vec<u64> {
    let alpha = PrimeFieldMatrix::from_rows(
        &x[..d * d]
            .chunks(d)
            .map(<[u64]>::to_vec)
            .collect::<Vec<_>>(),
        p,
    );
    let gamma = PrimeFieldMatrix::from_rows(
        &x[d * d..]
            .chunks(d)
            .map(<[u64]>::to_vec)
            .collect::<Vec<_>>(),
        p,
    );
    debug_assert_eq!(gamma.rows(), w);
    let k = kalman_stack(&alpha, &gamma);
    minors
        .iter()
        .map(|mi| k.select(&mi.rows, &mi.cols).det())
        .collect()
}

fn eval_monomial(x: &[u64], mono: &[usize], p: u64) -> u64 {
    mono.iter().fold(1, |acc, &v| mul_mod(acc, x[v], p))
}

/// `HF(k)` for `k = 0..=k_max` of `A / I` with `A` the polynomial ring on
/// `End(V)`. Only the `dn` coordinates of `α` and `γ` occur in the minors, so
/// the computation runs in that subring `B` and the remaining `n² - dn`
/// variables are added back by convolution:
/// `HF_A(k) = Σ_j HF_B(j) · binomial(f + k - j - 1, k - j)`.
pub fn numeric_hilbert_function_with(
    s: usize,
    d: usize,
    n: usize,
    k_max: usize,
    seed: u64,
    config: &HfConfig,
) -> Result<NumericHilbertFunction> {
    if s < 1 || s > d || d >= n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= s <= d < n, got ({s}, {d}, {n})"
        )));
    }
    let total_vars = (n * n) as u64;
    for k in 0..=k_max as u64 {
        let count = binomial(total_vars + k - 1, k);
        if count > config.budget.into() {
            return Err(Error::BudgetExceeded {
                binomial: format!("binomial({}, {k})", total_vars + k - 1),
                value: count.to_string(),
                budget: config.budget,
            });
        }
    }
    let p = config.prime;
    let w = n - d;
    let m = d * n;
    let size = d - s + 1;
    let minors: Vec<Minor> = (0..d * w)
        .combinations(size)
        .cartesian_product((0..d).combinations(size))
        .map(|(rows, cols)| Minor {
            degree: rows.iter().map(|r| r / w + 1).sum(),
            rows,
            cols,
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hf_b = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let monomial_count = small_binomial((m + k) as u64 - 1, k as u64) as usize;
        let generators: Vec<(usize, Vec<usize>)> = minors
            .iter()
            .enumerate()
            .filter(|(_, mi)| mi.degree <= k)
            .flat_map(|(idx, mi)| {
                monomials(m, k - mi.degree)
                    .into_iter()
                    .map(move |mono| (idx, mono))
            })
            .collect();
        let mut dim = 0usize;
        if !generators.is_empty() {
            let points = generators.len().min(monomial_count) + config.margin;
            for _ in 0..config.repeats {
                let xs: Vec<Vec<u64>> = (0..points)
                    .map(|_| (0..m).map(|_| rng.gen_range(0..p)).collect())
                    .collect();
                let columns: Vec<Vec<u64>> = xs
                    .par_iter()
                    .map(|x| {
                        let mv = eval_minors(x, d, w, &minors, p);
                        generators
                            .iter()
                            .map(|(idx, mono)| mul_mod(mv[*idx], eval_monomial(x, mono, p), p))
                            .collect()
                    })
                    .collect();
                // rows are points, columns generators; the rank is the same
                dim = dim.max(PrimeFieldMatrix::from_rows(&columns, p).rank());
            }
        }
        hf_b.push(monomial_count as u64 - dim as u64);
    }

    let f = total_vars - m as u64;
    let mut values = Vec::with_capacity(k_max + 1);
    let mut ideal_dims = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let hf: u64 = (0..=k)
            .map(|j| hf_b[j] * small_binomial(f + (k - j) as u64 - 1, (k - j) as u64))
            .sum();
        values.push(hf);
        ideal_dims.push(small_binomial(total_vars + k as u64 - 1, k as u64) - hf);
    }
    Ok(NumericHilbertFunction { values, ideal_dims })
}

pub fn numeric_hilbert_function(
    s: usize,
    d: usize,
    n: usize,
    k_max: usize,
    seed: u64,
) -> Result<NumericHilbertFunction> {
    numeric_hilbert_function_with(s, d, n, k_max, seed, &HfConfig::default())
}
