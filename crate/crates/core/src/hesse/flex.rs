//! Flexpoints, flex tangents and the points where flex tangents meet.

use std::collections::BTreeMap;

use serde::Serialize;

use super::pencil::{hesse_cubic, PencilParam};
use super::polar::polar_conic;
use crate::algebra::{Eisenstein, MPoly};
use crate::curvelab::{intersection_multiplicity, PlaneCurve};
use crate::error::{Error, Result};
use crate::projective::{build_groups, nine_lines, orbit, FiniteGroup, ProjLine, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexData {
    pub param: PencilParam,
    /// The nine base points of the pencil, sorted.
    pub flexpoints: Vec<ProjPoint>,
    /// `tangents[i]` is the tangent line at `flexpoints[i]`.
    pub tangents: Vec<ProjLine>,
    /// `I(E, L_i; P_i)` for each `i`.
    pub contact: Vec<u32>,
}

/// The nine base points, `G·(1 : −1 : 0)`.
pub fn base_points() -> Vec<ProjPoint> {
    let (g, _) = build_groups();
    orbit(&ProjPoint::from_ints(1, -1, 0), &g)
}

/// The line `∇F(P)·y = 0`.
pub fn tangent_line(f: &MPoly, p: &ProjPoint) -> Result<ProjLine> {
    let grad = crate::algebra::Var::Y.map(|v| f.differentiate(v).eval_y(p.coords()));
    let [a, b, c] = grad;
    ProjLine::new([a?, b?, c?]).map_err(|_| Error::SmoothPoint)
}

fn smooth_member(param: &PencilParam) -> Result<PlaneCurve> {
    if param.is_singular() {
        return Err(Error::SingularMember(param.to_string()));
    }
    Ok(hesse_cubic(param))
}

pub fn flex_data(param: &PencilParam) -> Result<FlexData> {
    let e = smooth_member(param)?;
    let flexpoints = base_points();
    let mut tangents = Vec::with_capacity(9);
    let mut contact = Vec::with_capacity(9);
    for p in &flexpoints {
        if !p.lies_on(e.form()) {
            return Err(Error::NotOnCurve);
        }
        let l = tangent_line(e.form(), p)?;
        contact.push(intersection_multiplicity(&e, &PlaneCurve::new(l.form())?, p)?);
        tangents.push(l);
    }
    Ok(FlexData { param: param.clone(), flexpoints, tangents, contact })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeetingPoint {
    pub point: ProjPoint,
    /// Indices of the tangents through the point.
    pub lines: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeetingPoints {
    pub param: PencilParam,
    pub points: Vec<MeetingPoint>,
}

impl MeetingPoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points where at least three tangents concur.
    pub fn concurrences(&self) -> Vec<&MeetingPoint> {
        self.points.iter().filter(|m| m.lines.len() >= 3).collect()
    }

    pub fn only_crossings(&self) -> bool {
        self.points.iter().all(|m| m.lines.len() == 2)
    }

    pub fn point_set(&self) -> Vec<ProjPoint> {
        self.points.iter().map(|m| m.point.clone()).collect()
    }
}

/// All `L_i ∩ L_j`, `i ≠ j`, deduplicated, with the tangents through each.
pub fn flex_meeting_points(param: &PencilParam) -> Result<MeetingPoints> {
    let fd = flex_data(param)?;
    Ok(meeting_points_of(param, &fd.tangents))
}

fn meeting_points_of(param: &PencilParam, lines: &[ProjLine]) -> MeetingPoints {
    let mut at: BTreeMap<ProjPoint, Vec<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = lines[i].meet(&lines[j]).expect("distinct tangents");
            let e = at.entry(p).or_default();
            for k in [i, j] {
                if !e.contains(&k) {
                    e.push(k);
                }
            }
        }
    }
    let points = at
        .into_iter()
        .map(|(point, mut lines)| {
            lines.sort_unstable();
            MeetingPoint { point, lines }
        })
        .collect();
    MeetingPoints { param: param.clone(), points }
}

/// For each of the nine lines `y_{j+1} = ζ^i y_j`, how many of `pts` it
/// carries; and for each point, how many of the nine lines pass through it.
pub fn nine_line_incidence(pts: &[ProjPoint]) -> (Vec<usize>, Vec<usize>) {
    let lines = nine_lines();
    let per_line = lines.iter().map(|l| pts.iter().filter(|p| l.contains(p)).count()).collect();
    let per_point = pts.iter().map(|p| lines.iter().filter(|l| l.contains(p)).count()).collect();
    (per_line, per_point)
}

/// Sizes of the orbits of `grp` on `pts`, which must be a stable set.
pub fn orbit_sizes(pts: &[ProjPoint], grp: &FiniteGroup) -> Result<Vec<usize>> {
    let mut left: Vec<ProjPoint> = pts.to_vec();
    let mut sizes = Vec::new();
    while let Some(p) = left.first().cloned() {
        let o = orbit(&p, grp);
        if o.iter().any(|q| !left.contains(q)) {
            return Err(Error::Invalid(format!("point set is not stable under the group: orbit of {p}")));
        }
        left.retain(|q| !o.contains(q));
        sizes.push(o.len());
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// Equianharmonicity read off the geometry: some point on three flex
/// tangents has a rank one polar conic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralTest {
    pub equianharmonic: bool,
    /// Concurrency points whose polar conic is a double line.
    pub witnesses: Vec<ProjPoint>,
    pub meeting_points: usize,
}

pub fn structural_equianharmonic(param: &PencilParam) -> Result<StructuralTest> {
    let e = smooth_member(param)?;
    let mp = flex_meeting_points(param)?;
    let mut witnesses = Vec::new();
    for m in mp.concurrences() {
        if polar_conic(&m.point, &e)?.rank == 1 {
            witnesses.push(m.point.clone());
        }
    }
    Ok(StructuralTest { equianharmonic: !witnesses.is_empty(), witnesses, meeting_points: mp.len() })
}

/// The parameters `0, ∞, ±ζ^i, −ζ^i/2`.
pub fn listed_exceptions() -> Vec<PencilParam> {
    let mut out = vec![PencilParam::int(0), PencilParam::infinity()];
    for i in 0..3 {
        let z = Eisenstein::zeta_pow(i);
        out.push(PencilParam::finite(z.clone()));
        out.push(PencilParam::finite(-&z));
        out.push(PencilParam::finite(&z * &Eisenstein::ratio(-1, 2)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionRow {
    pub param: PencilParam,
    pub class: super::pencil::ParamClass,
    /// `None` for singular members.
    pub meeting_points: Option<usize>,
    pub structural: Option<bool>,
}

/// What actually happens at each listed exceptional parameter.
pub fn exception_partition() -> Result<Vec<ExceptionRow>> {
    listed_exceptions()
        .into_iter()
        .map(|p| {
            let class = p.classify();
            if p.is_singular() {
                return Ok(ExceptionRow { param: p, class, meeting_points: None, structural: None });
            }
            let s = structural_equianharmonic(&p)?;
            Ok(ExceptionRow { param: p, class, meeting_points: Some(s.meeting_points), structural: Some(s.equianharmonic) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hesse::ParamClass;

    #[test]
    fn tangent_at_first_flex() {
        let fd = flex_data(&PencilParam::int(3)).unwrap();
        let i = fd.flexpoints.iter().position(|p| *p == ProjPoint::from_ints(1, -1, 0)).unwrap();
        assert_eq!(fd.tangents[i], ProjLine::from_ints(1, 1, -6));
        assert!(fd.contact.iter().all(|&c| c == 3));
    }

    #[test]
    fn general_member_has_36_crossings() {
        let mp = flex_meeting_points(&PencilParam::int(2)).unwrap();
        assert_eq!(mp.len(), 36);
        assert!(mp.only_crossings());
        let (per_line, per_point) = nine_line_incidence(&mp.point_set());
        assert!(per_line.iter().all(|&n| n == 4));
        assert!(per_point.iter().all(|&n| n == 1));
        let (_, gh) = build_groups();
        assert_eq!(orbit_sizes(&mp.point_set(), &gh).unwrap(), vec![9, 9, 9, 9]);
    }

    #[test]
    fn fermat_concurs_at_vertices() {
        let s = structural_equianharmonic(&PencilParam::int(0)).unwrap();
        assert!(s.equianharmonic);
        assert!(s.meeting_points < 36);
        assert!(s.witnesses.contains(&ProjPoint::from_ints(0, 0, 1)));
    }

    #[test]
    fn structural_test_agrees_with_classes() {
        for row in exception_partition().unwrap() {
            match row.class {
                ParamClass::Singular => assert_eq!(row.structural, None),
                ParamClass::Equianharmonic => assert_eq!(row.structural, Some(true), "{:?}", row.param),
                _ => {
                    assert_eq!(row.structural, Some(false), "{:?}", row.param);
                    assert_eq!(row.meeting_points, Some(36));
                }
            }
        }
    }
}
