//! Singular loci of plane curves.

use std::collections::BTreeSet;

use serde::Serialize;

use super::curve::PlaneCurve;
use super::intersect::intersect;
use super::local::{classify_singularity, SingularPointRecord};
use crate::algebra::{gcd, solve_system, ExtensionCertificate, MPoly};
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SingularLocus {
    /// Classified ℚ(ζ)-rational singular points, sorted by point.
    pub records: Vec<SingularPointRecord>,
    /// Singular points outside ℚ(ζ).
    pub certificates: Vec<ExtensionCertificate>,
    /// Curves along which the form is singular (multiple components).
    pub components: Vec<String>,
}

impl SingularLocus {
    pub fn is_empty(&self) -> bool {
        self.records.is_empty() && self.certificates.is_empty() && self.components.is_empty()
    }
}

fn classify_all(f: &PlaneCurve, pts: BTreeSet<ProjPoint>) -> Result<Vec<SingularPointRecord>> {
    pts.iter().map(|p| classify_singularity(f, p)).collect()
}

/// All singular points of `F`. With known components the locus is
/// assembled from pairwise intersections and the components' own
/// singularities; otherwise the partials are solved directly.
pub fn singular_points(f: &PlaneCurve) -> Result<SingularLocus> {
    if let Some(parts) = f.components() {
        return from_components(f, parts);
    }
    let partials = f.partials();
    match solve_system(&partials) {
        Ok(sol) => Ok(SingularLocus {
            records: classify_all(f, sol.points.into_iter().collect())?,
            certificates: sol.certificates,
            components: vec![],
        }),
        Err(Error::PositiveDimensional) => {
            let g = partials.iter().fold(MPoly::zero(), |acc, p| gcd(&acc, p));
            Ok(SingularLocus { records: vec![], certificates: vec![], components: vec![g.to_string()] })
        }
        Err(e) => Err(e),
    }
}

fn from_components(f: &PlaneCurve, parts: &[(PlaneCurve, u32)]) -> Result<SingularLocus> {
    let mut out = SingularLocus::default();
    let mut pts = BTreeSet::new();
    for (c, m) in parts {
        if *m > 1 {
            out.components.push(c.form().to_string());
        }
        let own = singular_points(c)?;
        pts.extend(own.records.into_iter().map(|r| r.point));
        out.certificates.extend(own.certificates);
        out.components.extend(own.components);
    }
    for (i, (a, _)) in parts.iter().enumerate() {
        for (b, _) in &parts[i + 1..] {
            let x = intersect(a, b)?;
            pts.extend(x.points.into_iter().map(|(p, _)| p));
            out.certificates.extend(x.certificates.into_iter().map(|(c, _)| c));
        }
    }
    out.records = classify_all(f, pts)?;
    Ok(out)
}

pub fn is_smooth(f: &PlaneCurve) -> Result<bool> {
    Ok(singular_points(f)?.is_empty())
}
