//! Tensor-product combinatorics: Pieri rules, Littlewood–Richardson
//! coefficients and the Cauchy decompositions.

use std::collections::btree_map::{self, BTreeMap};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::partitions::{conjugate, partitions_of, schur_rank, Partition};

/// Partitions with strictly positive multiplicities, ordered by partition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionMultiset {
    entries: BTreeMap<Partition, u64>,
}

impl PartitionMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Partition, mult: u64) {
        if mult > 0 {
            *self.entries.entry(p).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Partition, u64> {
        self.entries.iter()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.entries.keys()
    }

    /// `Σ mult · rank S_ν(K^n)`.
    pub fn total_rank(&self, n: usize) -> BigUint {
        self.entries
            .iter()
            .map(|(p, &m)| schur_rank(p, n) * m)
            .fold(BigUint::zero(), |a, b| a + b)
    }
}

impl FromIterator<(Partition, u64)> for PartitionMultiset {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut out = PartitionMultiset::new();
        for (p, m) in iter {
            out.insert(p, m);
        }
        out
    }
}

impl<'a> IntoIterator for &'a PartitionMultiset {
    type Item = (&'a Partition, &'a u64);
    type IntoIter = btree_map::Iter<'a, Partition, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// All `ν` obtained from `μ` by adding a horizontal strip of `k` boxes.
pub fn pieri_horizontal(mu: &Partition, k: u32) -> Vec<Partition> {
    let old = mu.parts();
    let mut out = Vec::new();
    let mut added = vec![0u32; old.len() + 1];

    fn go(old: &[u32], r: usize, remaining: u32, added: &mut [u32], out: &mut Vec<Partition>) {
        if r == added.len() {
            if remaining == 0 {
                let parts = (0..added.len())
                    .map(|i| old.get(i).copied().unwrap_or(0) + added[i])
                    .collect();
                out.push(Partition::new(parts).expect("strip keeps shape decreasing"));
            }
            return;
        }
        let cap = if r == 0 {
            remaining
        } else {
            (old[r - 1] - old.get(r).copied().unwrap_or(0)).min(remaining)
        };
        for c in (0..=cap).rev() {
            added[r] = c;
            go(old, r + 1, remaining - c, added, out);
        }
        added[r] = 0;
    }

    go(old, 0, k, &mut added, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// All `ν` obtained from `μ` by adding a vertical strip of `k` boxes.
pub fn pieri_vertical(mu: &Partition, k: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = pieri_horizontal(&conjugate(mu), k)
        .iter()
        .map(conjugate)
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Enumerates Littlewood–Richardson tableaux of shape `ν/λ` and content `μ`,
/// calling `visit` with every outer shape `ν` reached. If `bound` is given,
/// shapes are restricted to lie inside it.
fn for_each_lr_tableau(
    lambda: &Partition,
    mu: &Partition,
    bound: Option<&Partition>,
    visit: &mut dyn FnMut(&[u32]),
) {
    // Label k is placed as a horizontal strip; the lattice-word condition
    // reads rows top to bottom, each right to left, so within a row the k's
    // are read before the (k-1)'s:
    //   #k in rows <= r  <=  #(k-1) in rows < r.
    struct Ctx<'a> {
        content: &'a [u32],
        bound: Option<&'a [u32]>,
    }

    fn place_label(
        ctx: &Ctx,
        label: usize,
        shape: &[u32],
        prev_counts: &[u32],
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if label == ctx.content.len() {
            visit(shape);
            return;
        }
        let mut counts = vec![0u32; shape.len() + 1];
        strip_rows(
            ctx,
            label,
            shape,
            prev_counts,
            0,
            ctx.content[label],
            0,
            0,
            &mut counts,
            visit,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn strip_rows(
        ctx: &Ctx,
        label: usize,
        shape: &[u32],
        prev_counts: &[u32],
        r: usize,
        remaining: u32,
        placed_so_far: u32,
        prev_before_r: u32,
        counts: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if r == counts.len() {
            if remaining == 0 {
                let mut next: Vec<u32> = (0..counts.len())
                    .map(|i| shape.get(i).copied().unwrap_or(0) + counts[i])
                    .collect();
                while next.last() == Some(&0) {
                    next.pop();
                }
                let next_counts = counts.clone();
                place_label(ctx, label + 1, &next, &next_counts, visit);
            }
            return;
        }
        let current = shape.get(r).copied().unwrap_or(0);
        let mut cap = if r == 0 {
            remaining
        } else {
            (shape[r - 1] - current).min(remaining)
        };
        if label > 0 {
            cap = cap.min(prev_before_r.saturating_sub(placed_so_far));
        }
        if let Some(b) = ctx.bound {
            let limit = b.get(r).copied().unwrap_or(0);
            if limit < current {
                return;
            }
            cap = cap.min(limit - current);
        }
        let prev_here = prev_counts.get(r).copied().unwrap_or(0);
        for c in (0..=cap).rev() {
            counts[r] = c;
            strip_rows(
                ctx,
                label,
                shape,
                prev_counts,
                r + 1,
                remaining - c,
                placed_so_far + c,
                prev_before_r + prev_here,
                counts,
                visit,
            );
        }
        counts[r] = 0;
    }

    let ctx = Ctx {
        content: mu.parts(),
        bound: bound.map(|b| b.parts()),
    };
    place_label(&ctx, 0, lambda.parts(), &[], visit);
}

/// `c^ν_{λ,μ}`, the multiplicity of `S_ν` in `S_λ ⊗ S_μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !lambda.contained_in(nu) {
        return 0;
    }
    let mut count = 0u64;
    for_each_lr_tableau(lambda, mu, Some(nu), &mut |shape| {
        if shape == nu.parts() {
            count += 1;
        }
    });
    count
}

/// The decomposition of `S_λ ⊗ S_μ` as a multiset of partitions.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> PartitionMultiset {
    let mut out = PartitionMultiset::new();
    for_each_lr_tableau(lambda, mu, None, &mut |shape| {
        out.insert(
            Partition::new(shape.to_vec()).expect("LR shapes are partitions"),
            1,
        );
    });
    out
}

/// Summands `(λ, λ')` of `∧^q(U ⊗ U')`, i.e. `S_λ U ⊗ S_{λ'} U'` over `λ ⊢ q`.
pub fn cauchy_exterior(q: u32) -> Vec<(Partition, Partition)> {
    partitions_of(q)
        .into_iter()
        .map(|l| {
            let c = conjugate(&l);
            (l, c)
        })
        .collect()
}

/// Summands `(λ, λ)` of `Sym^q(U ⊗ U')`.
pub fn cauchy_symmetric(q: u32) -> Vec<(Partition, Partition)> {
    partitions_of(q)
        .into_iter()
        .map(|l| (l.clone(), l))
        .collect()
}
