//! Exact composition-sum identities from spectral residues of parameterized
//! recurrences, and their use in counting constrained subsets of discrete
//! order simplices.

pub mod algebra;
pub mod cli;
pub mod compositions;
pub mod identities;
pub mod samples;
pub mod simplex;
pub mod spectral;
