//! The local family `D(a, b, c) = a(z1z2 − (z1+z2)²) − b·z1z2(z1+z2) + c`
//! and the singular members over the `(a, c)`-plane at `b = 1`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{parse_poly, resultant, Eisenstein, MPoly, Var};
use crate::curvelab::{intersection_multiplicity, local_chart, PlaneCurve};
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

pub fn local_family() -> MPoly {
    parse_poly("a*(z1*z2 - (z1 + z2)^2) - b*z1*z2*(z1 + z2) + c").expect("valid literal")
}

/// One singular branch: a common zero `(z1, z2)` of the partials, as
/// polynomials in `a`, and the relation `c = value` making it lie on `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularBranch {
    pub factors: (String, String),
    pub z1: String,
    pub z2: String,
    pub c: String,
    /// Product of the three branch lines at the point, zero when the point
    /// lies on one of them.
    pub on_branch_lines: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalModelReport {
    pub d1_factored: bool,
    pub d2_factored: bool,
    pub branches: Vec<SingularBranch>,
    /// `k` with every non-trivial branch lying over `c = k·a³`.
    pub k: Option<String>,
    /// Contact order of `c = k·a³` with `c = 0` at the origin.
    pub contact: Option<u32>,
    /// Iterated resultant `Res_z1(Res_z2(D, ∂1D), Res_z2(D, ∂2D))` at `b = 1`.
    pub iterated: String,
    pub iterated_divisible: bool,
}

/// `(α, β, γ)` with `f = α·z1 + β·z2 + γ`, `α, β` constants.
fn linear_parts(f: &MPoly) -> (Eisenstein, Eisenstein, MPoly) {
    let zero = Eisenstein::zero();
    let g = f.substitute(Var::Z1, &zero).substitute(Var::Z2, &zero);
    let a = f.differentiate(Var::Z1).constant_term();
    let b = f.differentiate(Var::Z2).constant_term();
    (a, b, g)
}

/// Solves `f = g = 0` for `(z1, z2)` by Cramer's rule.
fn solve_linear(f: &MPoly, g: &MPoly) -> Option<(MPoly, MPoly)> {
    let (a1, b1, c1) = linear_parts(f);
    let (a2, b2, c2) = linear_parts(g);
    let det = &(&a1 * &b2) - &(&a2 * &b1);
    let inv = det.inv().ok()?;
    let z1 = (&c2.scale(&b1) - &c1.scale(&b2)).scale(&inv);
    let z2 = (&c1.scale(&a2) - &c2.scale(&a1)).scale(&inv);
    Some((z1, z2))
}

pub fn local_model_check() -> Result<LocalModelReport> {
    let d = local_family();
    let p = |s: &str| parse_poly(s).expect("valid literal");
    let d1 = d.differentiate(Var::Z1);
    let d2 = d.differentiate(Var::Z2);
    let d1_factored = d1 == -&(&p("2*z1 + z2") * &p("a + b*z2"));
    let d2_factored = d2 == -&(&p("2*z2 + z1") * &p("a + b*z1"));
    if !(d1_factored && d2_factored) {
        return Err(Error::Invalid("partials do not factor".into()));
    }
    let one = Eisenstein::int(1);
    let db = d.substitute(Var::B, &one);
    let first = [p("2*z1 + z2"), p("a + z2")];
    let second = [p("2*z2 + z1"), p("a + z1")];
    let lines = p("(z2 + 2*z1)*(z1 - z2)*(z1 + 2*z2)");
    let mut branches = Vec::new();
    let mut relations = Vec::new();
    for f in &first {
        for g in &second {
            let Some((z1, z2)) = solve_linear(f, g) else { continue };
            let subs = [(Var::Z1, z1.clone()), (Var::Z2, z2.clone())];
            // D = 0 at the point gives c = −(D − c)
            let c = -&(&db - &MPoly::var(Var::C)).compose(&subs);
            let on_lines = lines.compose(&subs).is_zero();
            relations.push(c.clone());
            branches.push(SingularBranch {
                factors: (f.to_string(), g.to_string()),
                z1: z1.to_string(),
                z2: z2.to_string(),
                c: c.to_string(),
                on_branch_lines: on_lines,
            });
        }
    }
    let a3 = MPoly::var(Var::A).pow(3);
    let nontrivial: Vec<&MPoly> = relations.iter().filter(|c| !c.is_zero()).collect();
    let k = nontrivial
        .iter()
        .map(|c| c.proportional_to(&a3))
        .collect::<Option<Vec<_>>>()
        .and_then(|ks| (ks.windows(2).all(|w| w[0] == w[1])).then(|| ks.first().cloned()).flatten());
    let contact = match &k {
        Some(k) => Some(flex_contact(k)?),
        None => None,
    };
    let r1 = resultant(&db, &d1.substitute(Var::B, &one), Var::Z2)?;
    let r2 = resultant(&db, &d2.substitute(Var::B, &one), Var::Z2)?;
    let iterated = resultant(&r1, &r2, Var::Z1)?;
    let iterated_divisible = match &k {
        Some(k) => {
            let rel = &MPoly::var(Var::C) - &a3.scale(k);
            iterated.exact_div(&rel).is_ok() && iterated.exact_div(&MPoly::var(Var::C)).is_ok()
        }
        None => false,
    };
    Ok(LocalModelReport {
        d1_factored,
        d2_factored,
        branches,
        k: k.map(|k| k.to_string()),
        contact,
        iterated: iterated.to_string(),
        iterated_divisible,
    })
}

/// `I(c − k·a³, c; 0)` after homogenizing with `y1 = a`, `y2 = c`, `y3 = 1`,
/// checking first that `c = 0` is the tangent line.
fn flex_contact(k: &Eisenstein) -> Result<u32> {
    let curve = PlaneCurve::new(&parse_poly("y2*y3^2").expect("literal") - &parse_poly("y1^3").expect("literal").scale(k))?;
    let origin = ProjPoint::from_ints(0, 0, 1);
    let lc = local_chart(curve.form(), &origin);
    let linear: Vec<_> = lc.f.terms().filter(|(m, _)| m.degree() == 1).collect();
    if linear.len() != 1 || linear[0].0.exp(Var::Z2) != 1 {
        return Err(Error::Invalid("tangent at the origin is not c = 0".into()));
    }
    intersection_multiplicity(&curve, &PlaneCurve::new(parse_poly("y2").expect("literal"))?, &origin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_model() {
        let r = local_model_check().unwrap();
        assert!(r.d1_factored && r.d2_factored);
        assert_eq!(r.branches.len(), 4);
        assert!(r.branches.iter().all(|b| b.on_branch_lines));
        assert_eq!(r.k.as_deref(), Some("1"));
        assert_eq!(r.contact, Some(3));
        assert!(r.iterated_divisible);
    }
}
