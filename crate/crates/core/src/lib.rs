//! Exact Gauss-Manin connection matrices for degenerations of affine
//! hyperplane arrangements.
//!
//! The pipeline: a realization gives a combinatorial type `T`; its
//! Orlik-Solomon algebra gives the beta-nbc cohomology basis and the
//! projection `P(T)` from the general-position cohomology; the
//! Aomoto-Kita matrices `Omega_G(J)` weighted by vanishing orders along a
//! degeneration path then determine `Omega_T(T')` through
//! `P(T) * Omega_T(T') = (sum_J m_J Omega_G(J)) * P(T)`.

pub mod error;
pub mod exact;
pub mod arrangement;
pub mod linalg;
pub mod orlik_solomon;
pub mod aomoto_kita;
pub mod gauss_manin;
pub mod golden;

pub use aomoto_kita::{general_basis, omega_general, ConnectionMatrix};
pub use arrangement::{compute_type, CombinatorialType, IndexSet, Matroid, Realization, Weights};
pub use error::{Error, Result};
pub use exact::{MultiPoly, PathPoly, RatFunc, Rational};
pub use gauss_manin::{
    analyze_path, codim1_projection_closed_form, connection_concrete, connection_symbolic,
    multiplicities, solve_connection, Connection, Degeneration, DegenerationPath, MultiplicityTable,
};
pub use linalg::Matrix;
pub use orlik_solomon::{projection_matrix, CocycleBasis, ProjectionMatrix, Straightener};
