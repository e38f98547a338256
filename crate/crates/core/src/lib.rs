//! Exact equivariant homology of packing complexes and the syzygy functors of
//! line bundles on Segre-Veronese varieties that it computes.
//!
//! The crate is `no_std` and only needs an allocator. IO, caching, JSON and
//! the command line live in the `packsyz` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod characters;
pub mod complex;
pub mod decomposition;
pub mod equivariant;
pub mod error;
pub mod linalg;
pub mod partitions;
pub mod plethysm;
pub mod stability;
pub mod syzygy;

pub use characters::{CharacterTables, ClassFunction, CycleType};
pub use complex::{PackingComplex, Permutation, SignedPermutation, Vertex};
pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use partitions::{NPartition, Partition, Tuple};
