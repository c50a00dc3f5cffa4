//! Exact construction of Macdonald polynomials in superspace and mechanical
//! verification of their conjectured properties.

pub mod algebra;
pub mod inner;
pub mod macdonald;
pub mod partition;
pub mod serial;
pub mod special;
pub mod tables;
pub mod superpartition;
pub mod superpoly;

pub use partition::{Dominance, Partition};
pub use superpartition::{Cell, SuperPartition};
