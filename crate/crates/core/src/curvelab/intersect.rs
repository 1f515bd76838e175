//! Intersection multiplicities, intersection cycles and transversality,
//! all read off `Res_{y3}` after a shear that makes the projection from
//! `(0 : 0 : 1)` proper.

use num_traits::{One, Zero};
use serde::Serialize;

use super::curve::PlaneCurve;
use crate::algebra::linear::{linear_change, Mat3};
use crate::algebra::residue::common_gcd_mod;
use crate::algebra::roots::split_roots;
use crate::algebra::solve::{affine, fiber_at, monic_in_y3, res_y3, residue_poly, shear_matrix, MAX_SHEARS};
use crate::algebra::{gcd, principal_subresultant, Eisenstein, ExtensionCertificate, MPoly, UniPoly, Var};
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

/// A pair of curves pulled back by a shear, with the one that is monic in
/// `y3` first.
struct Sheared {
    m: Mat3,
    a: MPoly,
    b: MPoly,
    bezout: usize,
}

impl Sheared {
    fn new(f: &MPoly, g: &MPoly, k: i64) -> Option<Sheared> {
        let m = shear_matrix(k);
        let fk = linear_change(f, &m).ok()?;
        let gk = linear_change(g, &m).ok()?;
        let bezout = (f.total_degree()? * g.total_degree()?) as usize;
        if monic_in_y3(&fk) {
            Some(Sheared { m, a: fk, b: gk, bezout })
        } else if monic_in_y3(&gk) {
            Some(Sheared { m, a: gk, b: fk, bezout })
        } else {
            None
        }
    }

    /// Eliminant in the chart `y2 = 1`, as a polynomial in `y1`.
    fn eliminant(&self) -> UniPoly {
        res_y3(&affine(&self.a), &affine(&self.b))
            .and_then(|r| r.to_unipoly(Var::Y1))
            .expect("resultant in y1 only")
    }

    fn fiber_gcd(&self, y1: &Eisenstein, y2: &Eisenstein) -> UniPoly {
        fiber_at(&self.a, y1, y2).gcd(&fiber_at(&self.b, y1, y2))
    }

    /// Unique fiber root over `(y1 : y2)`, if the fiber holds exactly one
    /// common point.
    fn single_fiber_root(&self, y1: &Eisenstein, y2: &Eisenstein) -> Option<Eisenstein> {
        let g = self.fiber_gcd(y1, y2).squarefree_part();
        (g.deg() == 1).then(|| -&g.coeff(0))
    }

    fn point(&self, y: [Eisenstein; 3]) -> ProjPoint {
        ProjPoint::new(self.m.apply(&y)).expect("nonzero")
    }

    /// Certifies that distinct intersection points have distinct
    /// projections: the first principal subresultant coefficient has no
    /// common root with the eliminant, and the fiber over `(1 : 0)` holds
    /// at most one point.
    fn is_proper(&self, r: &UniPoly) -> Result<bool> {
        let (a, b) = (affine(&self.a), affine(&self.b));
        if a.degree_in(Var::Y3) >= 2 && b.degree_in(Var::Y3) >= 2 {
            let psc1 = principal_subresultant(&a, &b, Var::Y3, 1)?.to_unipoly(Var::Y1)?;
            if r.squarefree_part().gcd(&psc1).deg() > 0 {
                return Ok(false);
            }
        }
        let at_inf = self.bezout - r.deg();
        if at_inf > 0 && self.single_fiber_root(&Eisenstein::one(), &Eisenstein::zero()).is_none() {
            return Ok(false);
        }
        Ok(true)
    }
}

fn strip_common(f: &PlaneCurve, g: &PlaneCurve) -> Result<(MPoly, MPoly, MPoly)> {
    let c = gcd(f.form(), g.form());
    if c.is_constant() {
        return Ok((f.form().clone(), g.form().clone(), c));
    }
    Ok((f.form().exact_div(&c)?, g.form().exact_div(&c)?, c))
}

/// Local intersection number of `F` and `G` at `P`, with the shear used.
pub fn intersection_multiplicity_with_shear(f: &PlaneCurve, g: &PlaneCurve, p: &ProjPoint) -> Result<(u32, i64)> {
    if !p.lies_on(f.form()) || !p.lies_on(g.form()) {
        return Err(Error::NotOnCurve);
    }
    let (fr, gr, c) = strip_common(f, g)?;
    if !c.is_constant() && p.lies_on(&c) {
        return Err(Error::CommonComponent);
    }
    for k in 0..MAX_SHEARS as i64 {
        let Some(sh) = Sheared::new(&fr, &gr, k) else { continue };
        let q = sh.m.inverse()?.apply(p.coords());
        if sh.single_fiber_root(&q[0], &q[1]).is_none() {
            continue;
        }
        let order = if !q[1].is_zero() {
            let s0 = &q[0] / &q[1];
            sh.eliminant().root_order(&s0).expect("nonzero eliminant")
        } else {
            (sh.bezout - sh.eliminant().deg()) as u32
        };
        return Ok((order, k));
    }
    Err(Error::ShearExhausted(MAX_SHEARS))
}

pub fn intersection_multiplicity(f: &PlaneCurve, g: &PlaneCurve, p: &ProjPoint) -> Result<u32> {
    intersection_multiplicity_with_shear(f, g, p).map(|x| x.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Intersection {
    /// ℚ(ζ)-rational points with their intersection numbers, sorted.
    pub points: Vec<(ProjPoint, u32)>,
    /// Conjugate families of points outside ℚ(ζ), each point of the family
    /// carrying the given intersection number.
    pub certificates: Vec<(ExtensionCertificate, u32)>,
    pub shear: i64,
}

impl Intersection {
    /// Sum of all intersection numbers, certificates counted by degree.
    pub fn total(&self) -> usize {
        self.points.iter().map(|(_, m)| *m as usize).sum::<usize>()
            + self.certificates.iter().map(|(c, m)| c.degree() * *m as usize).sum::<usize>()
    }

    pub fn multiplicity_at(&self, p: &ProjPoint) -> u32 {
        self.points.iter().find(|(q, _)| q == p).map_or(0, |(_, m)| *m)
    }
}

fn no_common_component(f: &PlaneCurve, g: &PlaneCurve) -> Result<()> {
    if gcd(f.form(), g.form()).is_constant() {
        Ok(())
    } else {
        Err(Error::CommonComponent)
    }
}

/// The intersection cycle computed with shear `k`, or `None` when that
/// shear does not give a proper projection.
pub fn intersect_with_shear(f: &PlaneCurve, g: &PlaneCurve, k: i64) -> Result<Option<Intersection>> {
    no_common_component(f, g)?;
    let Some(sh) = Sheared::new(f.form(), g.form(), k) else { return Ok(None) };
    let r = sh.eliminant();
    if !sh.is_proper(&r)? {
        return Ok(None);
    }
    let mut points = Vec::new();
    let mut certificates = Vec::new();
    let split = split_roots(&r);
    for (s0, mult) in &split.roots {
        let Some(y3) = sh.single_fiber_root(s0, &Eisenstein::one()) else { return Ok(None) };
        points.push((sh.point([s0.clone(), Eisenstein::one(), y3]), *mult));
    }
    for (h, mult) in &split.rest {
        let residues = vec![residue_poly(&sh.a, h), residue_poly(&sh.b, h)];
        for case in common_gcd_mod(h, &residues) {
            let d = case.fiber_degree();
            if d > 0 {
                // the fiber is (y3 − α)^d by properness; keep y3 − α
                let alpha = case.gcd[d - 1].scale(&Eisenstein::ratio(-1, d as i64));
                let fiber = vec![-&alpha, UniPoly::one()];
                let cert = ExtensionCertificate { shear: k, base: case.modulus, fiber, at_infinity: false };
                certificates.push((cert, *mult));
            }
        }
    }
    let at_inf = sh.bezout - r.deg();
    if at_inf > 0 {
        let y3 = sh.single_fiber_root(&Eisenstein::one(), &Eisenstein::zero()).expect("checked proper");
        points.push((sh.point([Eisenstein::one(), Eisenstein::zero(), y3]), at_inf as u32));
    }
    points.sort();
    Ok(Some(Intersection { points, certificates, shear: k }))
}

/// The full intersection cycle of two curves without common components.
pub fn intersect(f: &PlaneCurve, g: &PlaneCurve) -> Result<Intersection> {
    intersect_from(f, g, 0)
}

/// Like [`intersect`], trying the shears `start, start + 1, …` instead.
pub fn intersect_from(f: &PlaneCurve, g: &PlaneCurve, start: i64) -> Result<Intersection> {
    no_common_component(f, g)?;
    for k in start..start + MAX_SHEARS as i64 {
        if let Some(out) = intersect_with_shear(f, g, k)? {
            return Ok(out);
        }
    }
    Err(Error::ShearExhausted(MAX_SHEARS))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transversality {
    pub transversal: bool,
    pub shear: i64,
    /// The eliminant in the chart `y2 = 1` and, when it is not squarefree,
    /// its repeated part.
    pub eliminant: String,
    pub repeated: Option<String>,
}

/// Decides whether all intersections of `F` and `G` are simple.
pub fn transversal(f: &PlaneCurve, g: &PlaneCurve) -> Result<Transversality> {
    no_common_component(f, g)?;
    for k in 0..MAX_SHEARS as i64 {
        let Some(sh) = Sheared::new(f.form(), g.form(), k) else { continue };
        let r = sh.eliminant();
        if r.deg() != sh.bezout {
            continue;
        }
        let rep = r.gcd(&r.derivative());
        if rep.deg() == 0 {
            return Ok(Transversality { transversal: true, shear: k, eliminant: r.to_string(), repeated: None });
        }
        if sh.is_proper(&r)? {
            return Ok(Transversality {
                transversal: false,
                shear: k,
                eliminant: r.to_string(),
                repeated: Some(rep.to_string()),
            });
        }
    }
    Err(Error::ShearExhausted(MAX_SHEARS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn lines_meet_once() {
        let i = intersect(&curve("y1 - y2"), &curve("y2 + 3*y3")).unwrap();
        let expect = ProjPoint::new([Eisenstein::int(-3), Eisenstein::int(-3), Eisenstein::int(1)]).unwrap();
        assert_eq!(i.points, vec![(expect, 1)]);
        assert_eq!(intersection_multiplicity(&curve("y1"), &curve("y2"), &ProjPoint::from_ints(0, 0, 1)), Ok(1));
    }

    #[test]
    fn flex_tangent_of_fermat() {
        let e = curve("y1^3 + y2^3 + y3^3");
        let l = curve("y1 + y2");
        let p = ProjPoint::from_ints(1, -1, 0);
        assert_eq!(intersection_multiplicity(&e, &l, &p), Ok(3));
        let i = intersect(&e, &l).unwrap();
        assert_eq!(i.points, vec![(p, 3)]);
        assert!(!transversal(&e, &l).unwrap().transversal);
    }

    #[test]
    fn c_against_tangent_line() {
        let c = curve("y1^2*y2 + y2^2*y3 + y3^2*y1");
        let i = intersect(&c, &curve("y1 + y2")).unwrap();
        assert_eq!(i.total(), 3);
        assert!(i.points.iter().all(|(_, m)| *m == 1));
        assert_eq!(i.points.len(), 1);
        assert_eq!(i.certificates.len(), 1);
        assert!(transversal(&c, &curve("y1 + y2")).unwrap().transversal);
    }

    #[test]
    fn conic_and_tangent() {
        let q = curve("y1*y3 - y2^2");
        let t = curve("y1");
        assert!(!transversal(&q, &t).unwrap().transversal);
        let i = intersect(&q, &t).unwrap();
        assert_eq!(i.points, vec![(ProjPoint::from_ints(0, 0, 1), 2)]);
    }

    #[test]
    fn common_component_rejected() {
        assert_eq!(intersect(&curve("y1*y2"), &curve("y1*y3")), Err(Error::CommonComponent));
    }
}
