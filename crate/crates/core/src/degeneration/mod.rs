//! The special fiber: dual curves, `W0 = 3E + ΣL_i`, the local
//! discriminant model and numerical consistency of the degree 18 curves.

pub mod avoidance;
pub mod dual;
pub mod enumerative;
pub mod local_model;
pub mod w0;

pub use avoidance::{c_avoidance_audit, curve_c, AvoidanceReport};
pub use dual::{dual_curve, tangency_discriminant, DualCurve};
pub use enumerative::{plucker_profile, zeuthen_segre_check, EnumerativeProfile, ZeuthenSegre};
pub use local_model::{local_family, local_model_check, LocalModelReport, SingularBranch};
pub use w0::{w0_assemble, w0_singularity_audit, W0Audit};
