//! Local analysis at a point: multiplicity, tangent cone and the
//! node / cusp / tacnode / ordinary triple point classification.

use num_traits::Zero;
use serde::Serialize;

use super::curve::PlaneCurve;
use crate::algebra::{Eisenstein, MPoly, Monomial, Var};
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum SingularityTag {
    Node,
    CuspA2,
    TacnodeA3,
    OrdinaryTriple,
    /// Anything else; `jet` holds the local equation up to a few orders
    /// above the multiplicity.
    Higher { jet: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConeType {
    DistinctLines,
    DoubleLine,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularPointRecord {
    pub point: ProjPoint,
    pub multiplicity: u32,
    /// Tangent cone in the affine chart with local coordinates `z1, z2`.
    pub tangent_cone: String,
    pub cone: ConeType,
    /// Contact order of the tangent line for a double-line cone (`None`
    /// when the line is a component).
    pub contact: Option<u32>,
    pub tag: SingularityTag,
    /// Index of the coordinate set to 1 for the affine chart.
    pub chart: usize,
}

/// `F` near `P` in the chart `y_c = 1`: the polynomial `f(z1, z2)` with
/// `f(0, 0) = F(P)`.
#[derive(Clone, Debug)]
pub struct LocalChart {
    pub chart: usize,
    pub f: MPoly,
}

pub fn local_chart(form: &MPoly, p: &ProjPoint) -> LocalChart {
    let c = p.coords().iter().position(|x| !x.is_zero()).expect("nonzero point");
    let others: Vec<usize> = (0..3).filter(|&i| i != c).collect();
    let inv = p.coords()[c].inv().expect("nonzero");
    let q: Vec<Eisenstein> = p.coords().iter().map(|x| x * &inv).collect();
    let subs = vec![
        (Var::Y[others[0]], &MPoly::constant(q[others[0]].clone()) + &MPoly::var(Var::Z1)),
        (Var::Y[others[1]], &MPoly::constant(q[others[1]].clone()) + &MPoly::var(Var::Z2)),
        (Var::Y[c], MPoly::constant(q[c].clone())),
    ];
    LocalChart { chart: c, f: form.compose(&subs) }
}

fn homogeneous_part(f: &MPoly, d: u32) -> MPoly {
    MPoly::from_terms(f.terms().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())))
}

fn order(f: &MPoly) -> Option<u32> {
    f.terms().map(|(m, _)| m.degree()).min()
}

fn zc(f: &MPoly, e1: u16, e2: u16) -> Eisenstein {
    f.coeff(&Monomial::var(Var::Z1, e1).mul(&Monomial::var(Var::Z2, e2)))
}

fn truncated(f: &MPoly, upto: u32) -> MPoly {
    MPoly::from_terms(f.terms().filter(|(m, _)| m.degree() <= upto).map(|(m, c)| (*m, c.clone())))
}

/// Multiplicity of `F` at `P`.
pub fn local_multiplicity(f: &PlaneCurve, p: &ProjPoint) -> Result<u32> {
    if !p.lies_on(f.form()) {
        return Err(Error::NotOnCurve);
    }
    Ok(order(&local_chart(f.form(), p).f).expect("nonzero form"))
}

/// Discriminant of the binary cubic `a z1³ + b z1²z2 + c z1z2² + d z2³`.
fn cubic_discriminant(t: &MPoly) -> Eisenstein {
    let (a, b, c, d) = (zc(t, 3, 0), zc(t, 2, 1), zc(t, 1, 2), zc(t, 0, 3));
    let i = |n: i64| Eisenstein::int(n);
    let terms = [
        &(&b * &b) * &(&c * &c),
        &i(-4) * &(&a * &c.pow(3)),
        &i(-4) * &(&b.pow(3) * &d),
        &i(-27) * &(&(&a * &a) * &(&d * &d)),
        &i(18) * &(&(&a * &b) * &(&c * &d)),
    ];
    terms.iter().fold(Eisenstein::zero(), |acc, t| &acc + t)
}

struct DoubleLine {
    contact: Option<u32>,
    tag: SingularityTag,
}

/// With tangent cone `α z1² + β z1z2 + γ z2²` a perfect square, move the
/// tangent line to `v = 0` and read off the weighted principal part.
fn analyse_double_line(f: &MPoly, jet: &dyn Fn() -> String) -> DoubleLine {
    let (al, be) = (zc(f, 2, 0), zc(f, 1, 1));
    let (u, v) = (MPoly::var(Var::Z1), MPoly::var(Var::Z2));
    // New coordinates (u, v) with the tangent line at v = 0.
    let g = if al.is_zero() {
        // cone γ z2²: tangent z2 = 0 already
        f.clone()
    } else {
        // cone α (z1 + k z2)²: z1 = v − k u, z2 = u
        let k = &be / &(&al * &Eisenstein::int(2));
        f.compose(&[(Var::Z1, &v - &u.scale(&k)), (Var::Z2, u.clone())])
    };
    // here z1 plays u (along the tangent) and z2 plays v
    let along = g.substitute(Var::Z2, &Eisenstein::zero());
    let contact = order(&along);
    let a2 = zc(&g, 0, 2);
    let tag = if !zc(&g, 3, 0).is_zero() {
        SingularityTag::CuspA2
    } else {
        let (b, c) = (zc(&g, 2, 1), zc(&g, 4, 0));
        let disc = &(&b * &b) - &(&Eisenstein::int(4) * &(&a2 * &c));
        if !disc.is_zero() {
            SingularityTag::TacnodeA3
        } else {
            SingularityTag::Higher { jet: jet() }
        }
    };
    DoubleLine { contact, tag }
}

/// Classifies a singular point of `F`.
pub fn classify_singularity(f: &PlaneCurve, p: &ProjPoint) -> Result<SingularPointRecord> {
    if !p.lies_on(f.form()) {
        return Err(Error::NotOnCurve);
    }
    let lc = local_chart(f.form(), p);
    let m = order(&lc.f).expect("nonzero form");
    if m < 2 {
        return Err(Error::SmoothPoint);
    }
    let cone_form = homogeneous_part(&lc.f, m);
    let jet = || truncated(&lc.f, m + 2).to_string();
    let (cone, contact, tag) = match m {
        2 => {
            let (a, b, c) = (zc(&cone_form, 2, 0), zc(&cone_form, 1, 1), zc(&cone_form, 0, 2));
            let disc = &(&b * &b) - &(&Eisenstein::int(4) * &(&a * &c));
            if !disc.is_zero() {
                (ConeType::DistinctLines, None, SingularityTag::Node)
            } else {
                let d = analyse_double_line(&lc.f, &jet);
                (ConeType::DoubleLine, d.contact, d.tag)
            }
        }
        3 => {
            if !cubic_discriminant(&cone_form).is_zero() {
                (ConeType::DistinctLines, None, SingularityTag::OrdinaryTriple)
            } else {
                (ConeType::Degenerate, None, SingularityTag::Higher { jet: jet() })
            }
        }
        _ => (ConeType::Degenerate, None, SingularityTag::Higher { jet: jet() }),
    };
    Ok(SingularPointRecord {
        point: p.clone(),
        multiplicity: m,
        tangent_cone: cone_form.to_string(),
        cone,
        contact,
        tag,
        chart: lc.chart,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s).unwrap()).unwrap()
    }

    fn origin() -> ProjPoint {
        ProjPoint::from_ints(0, 0, 1)
    }

    #[test]
    fn multiplicities() {
        assert_eq!(local_multiplicity(&curve("y1*y2"), &origin()), Ok(2));
        assert_eq!(local_multiplicity(&curve("y1*y2*(y1+y2)"), &origin()), Ok(3));
        assert_eq!(local_multiplicity(&curve("y1*y3 - y2^2"), &origin()), Ok(1));
        assert_eq!(local_multiplicity(&curve("y1 - y3"), &origin()), Err(Error::NotOnCurve));
    }

    #[test]
    fn standard_types() {
        assert_eq!(classify_singularity(&curve("y1*y2"), &origin()).unwrap().tag, SingularityTag::Node);
        let cusp = classify_singularity(&curve("y2^2*y3 - y1^3"), &origin()).unwrap();
        assert_eq!(cusp.tag, SingularityTag::CuspA2);
        assert_eq!(cusp.contact, Some(3));
        let tac = classify_singularity(&curve("(y1^2 - y2*y3)*(y1^2 + y2*y3)"), &ProjPoint::from_ints(0, 1, 0)).unwrap();
        assert_eq!(tac.tag, SingularityTag::TacnodeA3);
        assert_eq!(tac.contact, Some(4));
        let triple = classify_singularity(&curve("y1*y2*(y1+y2)"), &origin()).unwrap();
        assert_eq!(triple.tag, SingularityTag::OrdinaryTriple);
        assert_eq!(classify_singularity(&curve("y1*y3 - y2^2"), &origin()), Err(Error::SmoothPoint));
    }

    #[test]
    fn tilted_cusp_and_higher_types() {
        // cusp with tangent line z1 + z2 = 0
        let c = classify_singularity(&curve("(y1 + y2)^2*y3 - y1^3"), &origin()).unwrap();
        assert_eq!(c.tag, SingularityTag::CuspA2);
        // A4: (v + u²)² + u⁵
        let a4 = classify_singularity(&curve("(y2*y3 + y1^2)^2*y3 + y1^5"), &origin()).unwrap();
        assert!(matches!(a4.tag, SingularityTag::Higher { .. }));
        // two smooth branches with contact 3
        let a5 = classify_singularity(&curve("y2*(y2*y3^2 - y1^3)"), &origin()).unwrap();
        assert!(matches!(a5.tag, SingularityTag::Higher { .. }));
        assert_eq!(a5.contact, None);
    }
}
