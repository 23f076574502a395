pub mod betti;
pub mod bott;
pub mod error;
pub mod geometric;
pub mod hilbert;
pub mod partitions;
pub mod resolution;
pub mod schur;
pub mod verifier;

pub use error::{Error, Result};

#[cfg(test)]
mod strategies {
    use proptest::prelude::*;

    use crate::partitions::{partitions_of, Partition};

    pub fn small_partition(max_size: u32) -> impl Strategy<Value = Partition> {
        (0..=max_size).prop_flat_map(|q| {
            let all = partitions_of(q);
            (0..all.len()).prop_map(move |k| all[k].clone())
        })
    }

    /// Partitions with at most `rows` rows and `cols` columns.
    pub fn boxed_partition(rows: usize, cols: u32) -> impl Strategy<Value = Partition> {
        small_partition(rows as u32 * cols)
            .prop_filter("fits in the box", move |p| p.fits_in_box(rows, cols))
    }
}
