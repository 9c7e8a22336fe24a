//! Configurations: finite windows, infinite sources, and checks on them.

mod ops;
mod source;
mod window;

pub use ops::{
    check_annihilates, close_ca_torus, fourdot_decompose, fourdot_decompose_at,
    monomial_difference, search_monomial_difference_annihilator, sublattice_counterexample,
    AnnihilatorCertificate, CertificateScope, CertificateStatus, DifferenceProduct,
    FourDotDecomposition,
};
pub use source::{ConfigSource, LineFamily};
pub use window::{apply_poly, apply_poly_torus, detect_periods, PeriodEvidence, Region, Window};
