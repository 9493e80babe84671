//! Exact verification of q-supercongruences modulo powers of cyclotomic
//! polynomials and of p-adic supercongruences involving Morita's p-adic
//! Gamma function.
//!
//! The q-side works in `Q(q)` with every auxiliary parameter specialized to
//! an exact rational; congruences are decided by exact division. The p-side
//! works with residues modulo `p^k`.

pub mod algebra;
pub mod cyclotomic;
pub mod padic;
pub mod qseries;
pub mod verify;
