//! Common projective zeros of two or three homogeneous forms in
//! `y1, y2, y3`, by elimination of `y3` and back-substitution.
//!
//! Coordinates are first sheared by `S_k = [[1,0,k],[0,1,k²],[0,0,1]]`,
//! `k = 0, 1, 2, …`, until one of the forms has a constant `y3^d`
//! coefficient. Then `(0 : 0 : 1)` is not a common zero and every solution
//! lies over a root of the eliminant in `(y1 : y2)`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::eisenstein::Eisenstein;
use super::gcd::gcd;
use super::linear::{linear_change, Mat3};
use super::mpoly::{MPoly, Monomial};
use super::residue::{common_gcd_mod, ResiduePoly};
use super::resultant::resultant;
use super::roots::split_roots;
use super::unipoly::UniPoly;
use super::var::Var;
use crate::error::{Error, Result};
use crate::projective::ProjPoint;

/// Number of shears tried before giving up.
pub const MAX_SHEARS: usize = 32;

/// The point map `S_k`; forms are pulled back as `F(S_k·y)`.
pub fn shear_matrix(k: i64) -> Mat3 {
    Mat3::from_ints([[1, 0, k], [0, 1, k * k], [0, 0, 1]])
}

/// Solutions whose coordinates need an extension of ℚ(ζ). In sheared
/// coordinates the points are `(s : 1 : y3)` with `base(s) = 0` and
/// `fiber(y3) = 0`, where `fiber` has coefficients in ℚ(ζ)[s]/(base).
/// `base = t − b` with rational `b` covers rational base points, and a
/// base point at `(1 : 0)` is written with `base = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCertificate {
    pub shear: i64,
    pub base: UniPoly,
    pub fiber: ResiduePoly,
    pub at_infinity: bool,
}

impl ExtensionCertificate {
    /// Number of geometric points described, counted by degree.
    pub fn degree(&self) -> usize {
        self.base.deg().max(1) * self.fiber.len().saturating_sub(1)
    }

    pub fn fiber_form(&self) -> MPoly {
        self.fiber.iter().enumerate().fold(MPoly::zero(), |acc, (i, c)| {
            &acc + &(&MPoly::from_unipoly(c, Var::T) * &MPoly::var(Var::Y3).pow(i as u32))
        })
    }
}

impl Serialize for ExtensionCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExtensionCertificate", 5)?;
        st.serialize_field("shear", &self.shear)?;
        st.serialize_field("base", &self.base.to_string())?;
        st.serialize_field("fiber", &self.fiber_form().to_string())?;
        st.serialize_field("at_infinity", &self.at_infinity)?;
        st.serialize_field("degree", &self.degree())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solutions {
    pub points: Vec<ProjPoint>,
    pub certificates: Vec<ExtensionCertificate>,
    pub shear: i64,
}

fn check_input(p: &MPoly) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    p.homogeneous_degree()?;
    if let Some(v) = p.support().into_iter().find(|v| !Var::Y.contains(v)) {
        return Err(Error::Invalid(format!("unexpected variable {v} in system")));
    }
    Ok(())
}

/// `y3^deg` coefficient is a nonzero constant.
pub(crate) fn monic_in_y3(p: &MPoly) -> bool {
    let d = p.total_degree().unwrap_or(0);
    !p.coeff(&Monomial::var(Var::Y3, d as u16)).is_zero()
}

/// Resultant in `y3`, allowing a side of degree 0.
pub(crate) fn res_y3(p: &MPoly, q: &MPoly) -> Result<MPoly> {
    match (p.degree_in(Var::Y3), q.degree_in(Var::Y3)) {
        (0, 0) => Ok(MPoly::one()),
        (0, dq) => Ok(p.pow(dq)),
        (dp, 0) => Ok(q.pow(dp)),
        _ => resultant(p, q, Var::Y3),
    }
}

pub(crate) fn affine(p: &MPoly) -> MPoly {
    p.substitute(Var::Y2, &Eisenstein::one())
}

/// Univariate eliminant in `y1` (chart `y2 = 1`), or `None` if every
/// attempted combination vanishes identically.
fn eliminant(pivot: &MPoly, others: &[MPoly]) -> Result<Option<UniPoly>> {
    let p = affine(pivot);
    let mut candidates: Vec<MPoly> = Vec::new();
    if others.len() == 1 {
        candidates.push(others[0].clone());
    } else {
        let top = others.iter().filter_map(|o| o.total_degree()).max().unwrap_or(0);
        for l in [Var::Y3, Var::Y1] {
            for c in 1..=others.len() as i64 + 1 {
                let mut q = MPoly::zero();
                let mut w = Eisenstein::one();
                for o in others {
                    w = &w * &Eisenstein::int(c);
                    let e = top - o.total_degree().unwrap_or(0);
                    q = &q + &(&MPoly::var(l).pow(e) * o).scale(&w);
                }
                candidates.push(q);
            }
        }
    }
    for q in candidates {
        let r = res_y3(&p, &affine(&q))?;
        if !r.is_zero() {
            return Ok(Some(r.to_unipoly(Var::Y1)?));
        }
    }
    Ok(None)
}

pub(crate) fn fiber_at(p: &MPoly, y1: &Eisenstein, y2: &Eisenstein) -> UniPoly {
    p.substitute(Var::Y1, y1).substitute(Var::Y2, y2).to_unipoly(Var::Y3).expect("only y3 left")
}

fn fiber_gcd(polys: &[MPoly], y1: &Eisenstein, y2: &Eisenstein) -> UniPoly {
    polys.iter().fold(UniPoly::zero(), |g, p| g.gcd(&fiber_at(p, y1, y2)))
}

/// Coefficients in `y3` of the chart `y2 = 1`, each a polynomial in `y1`
/// read as `s`, reduced modulo `h`.
pub(crate) fn residue_poly(p: &MPoly, h: &UniPoly) -> ResiduePoly {
    affine(p)
        .coeffs_in(Var::Y3)
        .iter()
        .map(|c| c.to_unipoly(Var::Y1).expect("only y1 left").rem(h).expect("nonzero modulus"))
        .collect()
}

/// All common zeros of `polys` in ℙ² over ℚ(ζ), plus certificates for
/// the ones that are not ℚ(ζ)-rational.
pub fn solve_system(polys: &[MPoly]) -> Result<Solutions> {
    for p in polys {
        check_input(p)?;
    }
    let polys: Vec<MPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if polys.iter().any(|p| p.is_constant()) {
        return Ok(Solutions { points: vec![], certificates: vec![], shear: 0 });
    }
    let common = polys.iter().fold(MPoly::zero(), |g, p| gcd(&g, p));
    if polys.len() < 2 || !common.is_constant() {
        return Err(Error::PositiveDimensional);
    }
    for k in 0..MAX_SHEARS as i64 {
        let m = shear_matrix(k);
        let sheared: Vec<MPoly> = polys.iter().map(|p| linear_change(p, &m)).collect::<Result<_>>()?;
        let Some(pi) = sheared.iter().position(monic_in_y3) else { continue };
        let others: Vec<MPoly> =
            sheared.iter().enumerate().filter(|(i, _)| *i != pi).map(|(_, p)| p.clone()).collect();
        let Some(r) = eliminant(&sheared[pi], &others)? else { continue };
        return Ok(back_substitute(&sheared, &r, k, &m));
    }
    Err(Error::ShearExhausted(MAX_SHEARS))
}

fn back_substitute(sheared: &[MPoly], r: &UniPoly, k: i64, m: &Mat3) -> Solutions {
    let mut points = BTreeSet::new();
    let mut certificates = Vec::new();
    let mut bases: Vec<(Eisenstein, Eisenstein)> = vec![(Eisenstein::one(), Eisenstein::zero())];
    let split = split_roots(r);
    bases.extend(split.roots.iter().map(|(b, _)| (b.clone(), Eisenstein::one())));
    for (y1, y2) in &bases {
        let g = fiber_gcd(sheared, y1, y2);
        if g.deg() == 0 {
            continue;
        }
        let fs = split_roots(&g);
        for (y3, _) in &fs.roots {
            let p = m.apply(&[y1.clone(), y2.clone(), y3.clone()]);
            points.insert(ProjPoint::new(p).expect("nonzero"));
        }
        let at_infinity = y2.is_zero();
        for (f, _) in fs.rest {
            let base = if at_infinity { UniPoly::one() } else { UniPoly::linear_root(y1) };
            certificates.push(ExtensionCertificate { shear: k, base, fiber: f.coeffs().iter().cloned().map(UniPoly::constant).collect(), at_infinity });
        }
    }
    for (h, _) in &split.rest {
        let residues: Vec<ResiduePoly> = sheared.iter().map(|p| residue_poly(p, h)).collect();
        for case in common_gcd_mod(h, &residues) {
            if case.fiber_degree() > 0 {
                certificates.push(ExtensionCertificate { shear: k, base: case.modulus, fiber: case.gcd, at_infinity: false });
            }
        }
    }
    Solutions { points: points.into_iter().collect(), certificates, shear: k }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn coordinate_axes_meet_at_vertex() {
        let s = solve_system(&[p("y1"), p("y2")]).unwrap();
        assert_eq!(s.points, vec![ProjPoint::from_ints(0, 0, 1)]);
        assert!(s.certificates.is_empty());
    }

    #[test]
    fn smooth_cubic_has_no_singular_points() {
        let f = p("y1^2*y2 + y2^2*y3 + y3^2*y1");
        let parts: Vec<MPoly> = Var::Y.iter().map(|v| f.differentiate(*v)).collect();
        let s = solve_system(&parts).unwrap();
        assert!(s.points.is_empty());
        assert!(s.certificates.is_empty());
    }

    #[test]
    fn triangle_vertices() {
        let f = p("y1*y2*y3");
        let parts: Vec<MPoly> = Var::Y.iter().map(|v| f.differentiate(*v)).collect();
        let s = solve_system(&parts).unwrap();
        assert_eq!(s.points.len(), 3);
    }

    #[test]
    fn irrational_points_become_certificates() {
        let s = solve_system(&[p("y1^2 - 2*y3^2"), p("y2 - y3")]).unwrap();
        assert!(s.points.is_empty());
        assert_eq!(s.certificates.iter().map(|c| c.degree()).sum::<usize>(), 2);
    }

    #[test]
    fn common_component_is_positive_dimensional() {
        assert_eq!(
            solve_system(&[p("y1*(y2 - y3)"), p("y1*(y1 + y3)")]),
            Err(Error::PositiveDimensional)
        );
    }
}
