//! Exact arithmetic over ℚ(ζ): field elements, polynomials, resultants,
//! gcds and small polynomial systems.

pub mod eisenstein;
pub mod gcd;
pub mod linear;
pub mod mpoly;
pub mod parse;
pub mod residue;
pub mod resultant;
pub mod roots;
pub mod solve;
pub mod unipoly;
pub mod var;

pub use eisenstein::Eisenstein;
pub use gcd::{gcd, squarefree_part};
pub use mpoly::{ys, MPoly, Monomial};
pub use resultant::{principal_subresultant, resultant};
pub use unipoly::UniPoly;
pub use var::Var;
pub use parse::{parse_poly, parse_scalar};
pub use linear::{linear_change, Mat3};
pub use solve::{solve_system, ExtensionCertificate, Solutions};
