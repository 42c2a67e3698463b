//! Exact universal (Vogel-parameter) dimensions and split-Casimir eigenvalues
//! for the decomposition of g⊗n, n ≤ 4, together with an independent
//! measurement engine that builds the algebra and reads the eigenspace
//! dimensions off exact trace moments.

pub mod chevalley;
pub mod cli;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod splitcas;
pub mod udim;
pub mod verify;
pub mod vparams;
