//! Points of `End(V)` in block form relative to `L = span(e_1, …, e_d)`,
//! reduced Kalman matrices, and seeded sampling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::PrimeFieldMatrix;
use crate::error::{Error, Result};

/// Attempts at drawing an invertible `g` before giving up.
const MAX_RESAMPLES: usize = 64;

/// `φ = [[α, β], [γ, δ]]` with `α` of size `d × d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KalmanPoint {
    pub d: usize,
    pub n: usize,
    phi: PrimeFieldMatrix,
}

impl KalmanPoint {
    pub fn new(phi: PrimeFieldMatrix, d: usize) -> Result<Self> {
        let n = phi.rows();
        if phi.cols() != n || d == 0 || d >= n {
            return Err(Error::InvalidContext(format!(
                "a {}x{} matrix does not split with d = {d}",
                phi.rows(),
                phi.cols()
            )));
        }
        Ok(KalmanPoint { d, n, phi })
    }

    pub fn phi(&self) -> &PrimeFieldMatrix {
        &self.phi
    }

    pub fn alpha(&self) -> PrimeFieldMatrix {
        self.phi.block(0, 0, self.d, self.d)
    }

    pub fn beta(&self) -> PrimeFieldMatrix {
        self.phi.block(0, self.d, self.d, self.n - self.d)
    }

    pub fn gamma(&self) -> PrimeFieldMatrix {
        self.phi.block(self.d, 0, self.n - self.d, self.d)
    }

    pub fn delta(&self) -> PrimeFieldMatrix {
        self.phi
            .block(self.d, self.d, self.n - self.d, self.n - self.d)
    }
}

/// Stack of `γ, γα, …, γα^{d-1}`, a `d(n-d) × d` matrix.
pub fn reduced_kalman_matrix(pt: &KalmanPoint) -> PrimeFieldMatrix {
    kalman_stack(&pt.alpha(), &pt.gamma())
}

pub(crate) fn kalman_stack(alpha: &PrimeFieldMatrix, gamma: &PrimeFieldMatrix) -> PrimeFieldMatrix {
    let d = alpha.rows();
    let mut blocks = Vec::with_capacity(d);
    let mut cur = gamma.clone();
    for _ in 0..d {
        let next = cur.mul(alpha);
        blocks.push(cur);
        cur = next;
    }
    PrimeFieldMatrix::vstack(&blocks)
}

/// Whether every `k × k` minor vanishes, i.e. `rank < k`.
pub fn minors_vanish(m: &PrimeFieldMatrix, k: usize) -> bool {
    m.rank() < k
}

fn check_range(s: usize, d: usize, n: usize) -> Result<()> {
    if s < 1 || s > d || d >= n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= s <= d < n, got ({s}, {d}, {n})"
        )));
    }
    Ok(())
}

/// `φ = g φ₀ g⁻¹` where `φ₀` preserves `span(e_1, …, e_s)` and `g` is a
/// random invertible map preserving `L`, so `g(span(e_1, …, e_s)) ⊆ L` is a
/// random `φ`-invariant subspace.
pub fn sample_member(s: usize, d: usize, n: usize, seed: u64, p: u64) -> Result<KalmanPoint> {
    check_range(s, d, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut phi0 = PrimeFieldMatrix::random(n, n, p, &mut rng);
    for i in s..n {
        for j in 0..s {
            phi0.set(i, j, 0);
        }
    }
    for _ in 0..MAX_RESAMPLES {
        let mut g = PrimeFieldMatrix::random(n, n, p, &mut rng);
        for i in d..n {
            for j in 0..d {
                g.set(i, j, 0);
            }
        }
        if let Some(g_inv) = g.inverse() {
            return KalmanPoint::new(g.mul(&phi0).mul(&g_inv), d);
        }
    }
    Err(Error::SingularSample(MAX_RESAMPLES))
}

/// A uniformly random `φ`.
pub fn sample_generic(d: usize, n: usize, seed: u64, p: u64) -> Result<KalmanPoint> {
    check_range(1, d, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    KalmanPoint::new(PrimeFieldMatrix::random(n, n, p, &mut rng), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::field::DEFAULT_PRIME;

    const P: u64 = DEFAULT_PRIME;

    #[test]
    fn identity_has_zero_kalman_matrix() {
        let pt = KalmanPoint::new(PrimeFieldMatrix::identity(5, P), 3).unwrap();
        let k = reduced_kalman_matrix(&pt);
        assert_eq!((k.rows(), k.cols()), (6, 3));
        assert!(k.is_zero());
        assert!(minors_vanish(&k, 1));
    }

    #[test]
    fn block_upper_triangular_lies_in_every_variety() {
        let mut phi = sample_generic(2, 5, 9, P).unwrap().phi().clone();
        for i in 2..5 {
            for j in 0..2 {
                phi.set(i, j, 0);
            }
        }
        let pt = KalmanPoint::new(phi, 2).unwrap();
        assert!(reduced_kalman_matrix(&pt).is_zero());
    }

    #[test]
    fn d2_stack_shape() {
        let pt = sample_generic(2, 6, 1, P).unwrap();
        let k = reduced_kalman_matrix(&pt);
        assert_eq!((k.rows(), k.cols()), (8, 2));
        assert_eq!(k.block(4, 0, 4, 2), pt.gamma().mul(&pt.alpha()));
    }

    #[test]
    fn minors_vanish_examples() {
        assert!(minors_vanish(&PrimeFieldMatrix::zeros(4, 3, P), 1));
        assert!(!minors_vanish(&PrimeFieldMatrix::identity(3, P), 3));
        for seed in 0..10 {
            let pt = sample_member(1, 3, 5, seed, P).unwrap();
            assert!(minors_vanish(&reduced_kalman_matrix(&pt), 3));
            let pt = sample_member(2, 3, 5, seed, P).unwrap();
            assert!(minors_vanish(&reduced_kalman_matrix(&pt), 2));
        }
        assert!(!minors_vanish(
            &reduced_kalman_matrix(&sample_generic(3, 5, 0, P).unwrap()),
            3
        ));
    }

    #[test]
    fn member_has_invariant_subspace_in_l() {
        // The image of span(e_1) under g is an eigenvector inside L.
        let pt = sample_member(1, 3, 5, 4, P).unwrap();
        let k = reduced_kalman_matrix(&pt);
        assert_eq!(k.rank(), 2);
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            sample_member(2, 3, 5, 42, P).unwrap(),
            sample_member(2, 3, 5, 42, P).unwrap()
        );
        assert_ne!(
            sample_generic(2, 4, 1, P).unwrap(),
            sample_generic(2, 4, 2, P).unwrap()
        );
        assert!(sample_member(0, 3, 5, 0, P).is_err());
        assert!(sample_generic(5, 5, 0, P).is_err());
    }

    #[test]
    fn blocks() {
        let pt = sample_generic(2, 5, 3, P).unwrap();
        assert_eq!(pt.beta().cols(), 3);
        assert_eq!(pt.delta().rows(), 3);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn members_always_satisfy_the_minors(
                (s, d, n) in (2usize..6).prop_flat_map(|n| (1..n).prop_flat_map(move |d| (1..=d, Just(d), Just(n)))),
                seed in any::<u64>(),
            ) {
                let pt = sample_member(s, d, n, seed, P).unwrap();
                prop_assert!(minors_vanish(&reduced_kalman_matrix(&pt), d - s + 1));
                prop_assert_eq!(pt, sample_member(s, d, n, seed, P).unwrap());
            }
        }
    }
}
