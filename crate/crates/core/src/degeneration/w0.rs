//! The degenerate curve `W0 = 3E + L1 + … + L9` and its singularities.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::curvelab::{intersect, singular_points, PlaneCurve, SingularPointRecord, SingularityTag};
use crate::error::{Error, Result};
use crate::hesse::{flex_data, flex_meeting_points, hesse_cubic, nine_line_incidence, ParamClass, PencilParam};
use crate::projective::ProjPoint;

/// `E³·ΠL_i` with its components.
pub fn w0_assemble(param: &PencilParam) -> Result<PlaneCurve> {
    if param.is_singular() {
        return Err(Error::ExceptionalParameter(format!("{param} gives a singular member")));
    }
    let e = hesse_cubic(param);
    let fd = flex_data(param)?;
    let mut parts = vec![(e, 3)];
    for l in &fd.tangents {
        parts.push((PlaneCurve::new(l.form())?, 1));
    }
    PlaneCurve::from_components(parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct W0Audit {
    pub param: PencilParam,
    pub degree: u32,
    pub reduced_degree: u32,
    /// Singular points of the reduced curve at the pairwise meets of the
    /// tangents.
    pub meeting_records: Vec<SingularPointRecord>,
    pub node_count: usize,
    /// Points where `E` meets a tangent, with the intersection number.
    pub tangencies: Vec<(ProjPoint, u32)>,
    /// Records at the tangency points.
    pub tangency_records: Vec<SingularPointRecord>,
    /// Meeting points of tangents lying on `E`.
    pub meets_on_e: usize,
    /// Meeting points on each of the nine lines `y_{j+1} = ζ^i y_j`.
    pub per_line: Vec<usize>,
    /// Singular points found that are neither meets nor tangencies.
    pub other: Vec<SingularPointRecord>,
}

/// Singularities of the reduced curve `E·ΠL_i`.
pub fn w0_singularity_audit(param: &PencilParam) -> Result<W0Audit> {
    match param.classify() {
        ParamClass::Singular => return Err(Error::ExceptionalParameter(format!("{param} gives a singular member"))),
        ParamClass::Equianharmonic => {
            return Err(Error::ExceptionalParameter(format!("{param} gives an equianharmonic member")))
        }
        _ => {}
    }
    let w0 = w0_assemble(param)?;
    let reduced = w0.reduced().expect("components known");
    let e = hesse_cubic(param);
    let meets: BTreeSet<ProjPoint> = flex_meeting_points(param)?.point_set().into_iter().collect();
    let mut tangencies = Vec::new();
    for (l, _) in &w0.components().expect("components known")[1..] {
        let x = intersect(&e, l)?;
        tangencies.extend(x.points.into_iter());
    }
    tangencies.sort();
    let tangent_pts: BTreeSet<ProjPoint> = tangencies.iter().map(|(p, _)| p.clone()).collect();
    let locus = singular_points(&reduced)?;
    let (mut meeting_records, mut tangency_records, mut other) = (vec![], vec![], vec![]);
    for r in locus.records {
        if meets.contains(&r.point) {
            meeting_records.push(r);
        } else if tangent_pts.contains(&r.point) {
            tangency_records.push(r);
        } else {
            other.push(r);
        }
    }
    let node_count = meeting_records.iter().filter(|r| r.tag == SingularityTag::Node).count();
    let meets_on_e = meets.iter().filter(|p| p.lies_on(e.form())).count();
    let (per_line, _) = nine_line_incidence(&meets.iter().cloned().collect::<Vec<_>>());
    Ok(W0Audit {
        param: param.clone(),
        degree: w0.degree(),
        reduced_degree: reduced.degree(),
        meeting_records,
        node_count,
        tangencies,
        tangency_records,
        meets_on_e,
        per_line,
        other,
    })
}
