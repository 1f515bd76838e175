//! The projective plane over ℚ(ζ): points, lines, projectivities and the
//! groups G ⊂ Ĝ.

pub mod group;
pub mod point;

pub use group::{build_groups, is_invariant, nine_lines, orbit, sigma, shift, stabilizer, tau, FiniteGroup, ProjMap};
pub use point::{ProjLine, ProjPoint};
