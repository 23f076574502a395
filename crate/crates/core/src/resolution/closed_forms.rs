//! Closed-form Betti tables and generator lists, transcribed from the known
//! resolutions. Labels are pruned to the given dimensions automatically.

use crate::betti::{BettiTable, Label};
use crate::error::{Error, Result};
use crate::partitions::{part, partitions_in_box, Partition};
use crate::schur::cauchy_exterior;

fn hook(first: u32, column: u32) -> Partition {
    let mut parts = vec![first];
    parts.extend(std::iter::repeat_n(1, column as usize));
    Partition::new(parts).expect("hook shape")
}

/// Minimal free resolution of `Õ_{1,d,n}`.
pub fn prop_1dn_table(d: usize, n: usize) -> Result<BettiTable> {
    if d < 1 || d >= n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= d < n, got d={d}, n={n}"
        )));
    }
    let mut t = BettiTable::new(d, n);
    for j in 0..d as i32 {
        t.add_parts(0, j, Partition::empty(), Partition::empty(), 1);
    }
    let (d_, n_) = (d as i64, n as i64);
    for i in 1..=(n - d) as i64 {
        let lower = (i + 2 * d_ - 1 - n_).max(0);
        for a in lower..=d_ - 1 {
            t.add_parts(
                i as i32,
                (i + d_ - 1) as i32,
                hook(i as u32, (d_ - a - 1) as u32),
                Partition::column((i + d_ - a - 1) as u32),
                1,
            );
        }
    }
    Ok(t)
}

/// The displayed terms `F_0..F_3` of the resolution of `Õ_{2,3,n}`.
pub fn prop_23n_table(n: usize) -> Result<BettiTable> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("need n >= 4, got {n}")));
    }
    let e = Partition::empty;
    let rows = [
        (0, 0, e(), e()),
        (0, 1, e(), e()),
        (0, 2, e(), e()),
        (1, 2, part(&[1, 1]), part(&[1, 1])),
        (1, 2, part(&[1]), part(&[1])),
        (1, 3, part(&[1]), part(&[1])),
        (2, 3, part(&[2, 1]), part(&[1, 1, 1])),
        (2, 3, part(&[1, 1, 1]), part(&[2, 1])),
        (2, 3, part(&[2]), part(&[1, 1])),
        // ∧²(L ⊗ W) = (2; 1²) ⊕ (1²; 2)
        (2, 4, part(&[2]), part(&[1, 1])),
        (2, 4, part(&[1, 1]), part(&[2])),
        (2, 4, part(&[1, 1, 1]), part(&[2, 1])),
        (3, 4, part(&[3, 1]), part(&[1, 1, 1, 1])),
        (3, 4, part(&[2, 1, 1]), part(&[2, 1, 1])),
        (3, 4, part(&[3]), part(&[1, 1, 1])),
        (3, 5, part(&[2, 1, 1]), part(&[2, 1, 1])),
        (3, 5, part(&[2, 1, 1]), part(&[2, 2])),
        (3, 5, part(&[3]), part(&[1, 1, 1])),
        (3, 5, part(&[2, 1]), part(&[2, 1])),
    ];
    let mut t = BettiTable::new(3, n);
    for (i, deg, l, w) in rows {
        t.add_parts(i, deg, l, w, 1);
    }
    Ok(t)
}

/// The displayed terms `F_0..F_2` of the resolution of `Õ_{d-1,d,n}`.
pub fn prop_sdm1_table(d: usize, n: usize) -> Result<BettiTable> {
    if d < 2 || d >= n {
        return Err(Error::OutOfRange(format!(
            "need 2 <= d < n, got d={d}, n={n}"
        )));
    }
    let d_ = d as i32;
    let mut t = BettiTable::new(d, n);
    for j in 0..d_ {
        t.add_parts(0, j, Partition::empty(), Partition::empty(), 1);
    }
    t.add_parts(1, 2, part(&[1, 1]), part(&[1, 1]), 1);
    for j in 2..=d_ {
        t.add_parts(1, j, part(&[1]), part(&[1]), 1);
    }
    t.add_parts(2, 4, part(&[1, 1, 1]), part(&[2, 1]), 1);
    for j in 3..=d_ + 1 {
        t.add_parts(2, j, part(&[2]), part(&[1, 1]), 1);
    }
    for j in 4..=d_ + 1 {
        t.add_parts(2, j, part(&[1, 1]), part(&[2]), 1);
    }
    Ok(t)
}

/// Minimal free resolution of `Õ_{s,d,d+1}`:
/// `F_i = ⊕_{λ ⊆ (s-i) × (d-s)} ∧^i L ⊗ S^i W ⊗ A(-i(d-s+1) - |λ|)`.
pub fn prop_ndp1_table(s: usize, d: usize) -> Result<BettiTable> {
    if s < 1 || s > d {
        return Err(Error::OutOfRange(format!(
            "need 1 <= s <= d, got s={s}, d={d}"
        )));
    }
    let mut t = BettiTable::new(d, d + 1);
    for i in 0..=s {
        let rows = s - i;
        let cols = (d - s) as u32;
        for size in 0..=(rows as u32 * cols) {
            for _lambda in partitions_in_box(size, rows, cols) {
                t.add_parts(
                    i as i32,
                    (i * (d - s + 1)) as i32 + size as i32,
                    Partition::column(i as u32),
                    Partition::row(i as u32),
                    1,
                );
            }
        }
    }
    Ok(t)
}

/// Minimal free resolution of the coordinate ring `O_{1,2,n}`.
pub fn thm_12n_table(n: usize) -> Result<BettiTable> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("need n >= 4, got {n}")));
    }
    let mut t = BettiTable::new(2, n);
    t.add_parts(0, 0, Partition::empty(), Partition::empty(), 1);
    let n_ = n as i32;
    for i in 1..=2 * n_ - 5 {
        let top = (i + 1) as u32;
        if i <= n_ - 3 {
            // det L ⊗ D^{i-1} L ⊗ ∧^{i+1} W
            t.add_parts(i, i + 1, part(&[i as u32, 1]), Partition::column(top), 1);
        }
        for (lambda, conj) in cauchy_exterior(top) {
            if i <= n_ - 3 && lambda == Partition::row(top) {
                continue;
            }
            t.add_parts(i, i + 2, lambda, conj, 1);
        }
    }
    Ok(t)
}

/// Minimal generators of the ideal of `K_{1,3,n}`: `(λ_L, μ_W, degree)`.
pub fn thm_13n_equations() -> Vec<(Partition, Partition, i32)> {
    let c3 = Partition::column(3);
    vec![
        (c3.clone(), c3.clone(), 3),
        (c3.clone(), part(&[2, 1]), 4),
        (c3.clone(), part(&[2, 1]), 5),
        (c3, part(&[3]), 6),
    ]
}

/// Projective dimension `3n - 11` and regularity 5 of `O_{1,3,n}`; not
/// recomputed.
pub fn thm_13n_invariants(n: usize) -> (i64, i64) {
    (3 * n as i64 - 11, 5)
}

/// The displayed beginning `F_0..F_2` of the resolution of the submodule
/// `M ⊂ Õ_{2,3,n}` generated in degrees 0 and 1.
pub fn prop_m_table(n: usize) -> Result<BettiTable> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("need n >= 4, got {n}")));
    }
    let mut t = BettiTable::new(3, n);
    t.add_parts(0, 0, Partition::empty(), Partition::empty(), 1);
    t.add_parts(0, 1, Partition::empty(), Partition::empty(), 1);
    t.add_parts(1, 2, part(&[1, 1]), part(&[1, 1]), 1);
    t.add_parts(1, 2, part(&[1]), part(&[1]), 1);
    t.add_parts(2, 3, part(&[2, 1]), part(&[1, 1, 1]), 1);
    t.add_parts(2, 3, part(&[2]), part(&[1, 1]), 1);
    t.add_parts(2, 3, part(&[1, 1, 1]), part(&[2, 1]), 1);
    t.add_parts(2, 4, part(&[1, 1, 1]), part(&[2, 1]), 1);
    t.add_parts(2, 5, part(&[1, 1, 1]), part(&[3]), 1);
    Ok(t)
}

/// Projective dimension `3n - 10` and regularity 3 of `M`; not recomputed.
pub fn prop_m_invariants(n: usize) -> (i64, i64) {
    (3 * n as i64 - 10, 3)
}

/// Generator labels of the trivial module: `A(-c)`.
pub fn shifted_ring(c: i32) -> Vec<(Label, i32)> {
    vec![(Label::trivial(), c)]
}
