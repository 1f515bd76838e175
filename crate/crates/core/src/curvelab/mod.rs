//! Plane curves: singular points and their types, intersection numbers,
//! transversality.

pub mod curve;
pub mod intersect;
pub mod local;
pub mod singular;

pub use curve::PlaneCurve;
pub use intersect::{
    intersect, intersect_from, intersect_with_shear, intersection_multiplicity, intersection_multiplicity_with_shear, transversal,
    Intersection, Transversality,
};
pub use local::{classify_singularity, local_chart, local_multiplicity, ConeType, SingularPointRecord, SingularityTag};
pub use singular::{is_smooth, singular_points, SingularLocus};
