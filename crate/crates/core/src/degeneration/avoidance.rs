//! The cubic `C = Σ y_j² y_{j+1}` against the special fiber: it misses the
//! flexpoints and the nodes and crosses `E` and the tangents transversally.

use serde::Serialize;

use crate::algebra::{parse_poly, Eisenstein};
use crate::curvelab::{intersect, transversal, PlaneCurve, Transversality};
use crate::error::{Error, Result};
use crate::hesse::{flex_data, flex_meeting_points, hesse_cubic, ParamClass, PencilParam};

pub fn curve_c() -> PlaneCurve {
    PlaneCurve::new(parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1").expect("literal")).expect("cubic")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AvoidanceReport {
    pub param: PencilParam,
    /// `C` evaluated at each flexpoint.
    pub flex_values: Vec<Eisenstein>,
    pub nodes: usize,
    pub nodes_on_c: usize,
    pub with_e: Transversality,
    pub e_total: usize,
    pub with_tangents: Vec<Transversality>,
}

impl AvoidanceReport {
    pub fn flexes_off(&self) -> bool {
        self.flex_values.iter().all(|v| *v != Eisenstein::int(0))
    }

    pub fn all_transversal(&self) -> bool {
        self.with_e.transversal && self.with_tangents.iter().all(|t| t.transversal)
    }
}

pub fn c_avoidance_audit(param: &PencilParam) -> Result<AvoidanceReport> {
    if matches!(param.classify(), ParamClass::Singular | ParamClass::Equianharmonic) {
        return Err(Error::ExceptionalParameter(format!("{param}")));
    }
    let c = curve_c();
    let e = hesse_cubic(param);
    let fd = flex_data(param)?;
    let flex_values = fd.flexpoints.iter().map(|p| p.coords()).map(|x| c.form().eval_y(x)).collect::<Result<_>>()?;
    let nodes = flex_meeting_points(param)?.point_set();
    let nodes_on_c = nodes.iter().filter(|p| p.lies_on(c.form())).count();
    let with_e = transversal(&c, &e)?;
    let e_total = intersect(&c, &e)?.total();
    let with_tangents = fd
        .tangents
        .iter()
        .map(|l| transversal(&c, &PlaneCurve::new(l.form())?))
        .collect::<Result<_>>()?;
    Ok(AvoidanceReport { param: param.clone(), flex_values, nodes: nodes.len(), nodes_on_c, with_e, e_total, with_tangents })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelab::is_smooth;
    use crate::projective::ProjPoint;

    #[test]
    fn c_is_smooth_and_misses_first_flex() {
        let c = curve_c();
        assert!(is_smooth(&c).unwrap());
        assert_eq!(c.form().eval_y(ProjPoint::from_ints(1, -1, 0).coords()), Ok(Eisenstein::int(-1)));
    }

    #[test]
    fn audit_general_member() {
        let r = c_avoidance_audit(&PencilParam::int(2)).unwrap();
        assert!(r.flexes_off());
        assert_eq!((r.nodes, r.nodes_on_c), (36, 0));
        assert!(r.all_transversal());
        assert_eq!(r.e_total, 9);
    }
}
