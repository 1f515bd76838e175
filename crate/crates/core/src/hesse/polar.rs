//! Polar conics, the determinant of the polar pencil, and loci of
//! intersections of corresponding lines in two projective line pencils.

use num_traits::Zero;
use serde::Serialize;

use super::pencil::{hesse_cubic_generic, hesse_member, nu_generic};
use crate::algebra::resultant::bareiss_det;
use crate::algebra::roots::split_roots;
use crate::algebra::{gcd, Eisenstein, MPoly, Monomial, UniPoly, Var};
use crate::curvelab::PlaneCurve;
use crate::error::{Error, Result};
use crate::projective::{ProjLine, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarConic {
    pub conic: PlaneCurve,
    /// Rank of the symmetric matrix: 3 smooth, 2 line pair, 1 double line.
    pub rank: u32,
}

/// Symmetric matrix of a quadratic form in `y1, y2, y3`.
pub fn conic_matrix(q: &MPoly) -> [[Eisenstein; 3]; 3] {
    let half = Eisenstein::ratio(1, 2);
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let m = Monomial::var(Var::Y[a], 1).mul(&Monomial::var(Var::Y[b], 1));
            let c = q.coeff(&m);
            if a == b {
                c
            } else {
                &c * &half
            }
        })
    })
}

fn minor(m: &[[Eisenstein; 3]; 3], r: [usize; 2], c: [usize; 2]) -> Eisenstein {
    &(&m[r[0]][c[0]] * &m[r[1]][c[1]]) - &(&m[r[0]][c[1]] * &m[r[1]][c[0]])
}

pub fn rank3(m: &[[Eisenstein; 3]; 3]) -> u32 {
    let det = crate::algebra::Mat3(m.clone()).det();
    if !det.is_zero() {
        return 3;
    }
    let pairs = [[0, 1], [0, 2], [1, 2]];
    if pairs.iter().any(|r| pairs.iter().any(|c| !minor(m, *r, *c).is_zero())) {
        return 2;
    }
    if m.iter().flatten().any(|x| !x.is_zero()) {
        1
    } else {
        0
    }
}

/// `Σ x_j ∂F/∂y_j`.
pub fn polar_conic(x: &ProjPoint, f: &PlaneCurve) -> Result<PolarConic> {
    let q = Var::Y
        .iter()
        .zip(x.coords())
        .fold(MPoly::zero(), |acc, (v, c)| &acc + &f.form().differentiate(*v).scale(c));
    let conic = PlaneCurve::new(q)?;
    if conic.degree() != 2 {
        return Err(Error::Invalid(format!("polar of a degree {} curve", f.degree())));
    }
    let rank = rank3(&conic_matrix(conic.form()));
    Ok(PolarConic { conic, rank })
}

/// Determinant of the conic `Σ_j x_j(λ0 y_j² + 2λ1 y_{j−1}y_{j+1})` with
/// `x1, x2, x3, λ0, λ1` kept as the variables `x1, x2, x3, l0, l1`.
pub fn polar_pencil_determinant() -> MPoly {
    let (l0, l1) = (MPoly::var(Var::L0), MPoly::var(Var::L1));
    let mut m: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(); 3]; 3];
    for j in 0..3 {
        let x = MPoly::var(Var::X[j]);
        m[j][j] = &l0 * &x;
        let (a, b) = ((j + 2) % 3, (j + 1) % 3);
        m[a][b] = &l1 * &x;
        m[b][a] = &l1 * &x;
    }
    bareiss_det(m).expect("exact determinant")
}

/// `x1x2x3(λ0³ + 2λ1³) − λ0λ1²·Σ x_j³`.
pub fn polar_pencil_target() -> MPoly {
    let (l0, l1) = (MPoly::var(Var::L0), MPoly::var(Var::L1));
    let [x1, x2, x3] = Var::X.map(MPoly::var);
    let cubes = &(&x1.pow(3) + &x2.pow(3)) + &x3.pow(3);
    let first = &(&(&x1 * &x2) * &x3) * &(&l0.pow(3) + &(&l1.pow(3) * &MPoly::int(2)));
    &first - &(&(&l0 * &l1.pow(2)) * &cubes)
}

/// The determinant is the pencil member with parameter `ν(λ)` written in
/// `x`: returns the scalar relating the two, if any.
pub fn polar_determinant_is_hessian_member() -> Option<Eisenstein> {
    let (n0, n1) = nu_generic();
    let member = hesse_member(&n0, &n1).rename(&[(Var::Y1, Var::X1), (Var::Y2, Var::X2), (Var::Y3, Var::X3)]);
    polar_pencil_determinant().proportional_to(&member)
}

/// `2λ³ − 3ζ^i λ² + 1`, with its roots and multiplicities.
pub fn concurrency_cubic(i: i64) -> (UniPoly, Vec<(Eisenstein, u32)>) {
    let z = Eisenstein::zeta_pow(i);
    let p = UniPoly::new(vec![Eisenstein::int(1), Eisenstein::zero(), &z * &Eisenstein::int(-3), Eisenstein::int(2)]);
    let split = split_roots(&p);
    debug_assert!(split.rest.is_empty());
    (p, split.roots)
}

/// Two projectively related pencils of lines: `L(λ) = λ0·A0 + λ1·A1`
/// through `P_i` and `M(λ) = λ0·B0 + λ1·B1` through `P_j`, as linear
/// forms. The relative scale within each pair matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinePencilPair {
    pub a: [MPoly; 2],
    pub b: [MPoly; 2],
}

impl LinePencilPair {
    /// Flex tangents to the Hesse pencil at two base points.
    pub fn flex_tangents(pi: &ProjPoint, pj: &ProjPoint) -> Result<LinePencilPair> {
        let f = hesse_cubic_generic();
        let grad = Var::Y.map(|v| f.differentiate(v));
        // gradient at p of the member with (l0, l1) = (u, 1 − u)
        let line = |p: &ProjPoint, u: i64| -> Result<MPoly> {
            let mut c: [Eisenstein; 3] = Default::default();
            for (k, g) in grad.iter().enumerate() {
                let g = g.substitute(Var::L0, &Eisenstein::int(u)).substitute(Var::L1, &Eisenstein::int(1 - u));
                c[k] = g.eval_y(p.coords())?;
            }
            Ok(MPoly::linear(&c, &Var::Y))
        };
        let side = |p: &ProjPoint| -> Result<[MPoly; 2]> { Ok([line(p, 1)?, line(p, 0)?]) };
        Ok(LinePencilPair { a: side(pi)?, b: side(pj)? })
    }
}

fn center(pencil: &[MPoly; 2]) -> Result<ProjPoint> {
    let [l, m] = [&pencil[0], &pencil[1]].map(|f| ProjLine::from_form(f).map_err(|_| Error::DegenerateCorrespondence));
    l?.meet(&m?).map_err(|_| Error::DegenerateCorrespondence)
}

/// The curve traced by `L(λ) ∩ M(λ)`: the conic
/// `(A0·y)(B1·y) − (A1·y)(B0·y)`, or the residual line when the line
/// joining the centers corresponds to itself.
pub fn homological_locus(pi: &ProjPoint, pj: &ProjPoint, pencils: &LinePencilPair) -> Result<PlaneCurve> {
    if pi == pj || center(&pencils.a)? != *pi || center(&pencils.b)? != *pj {
        return Err(Error::DegenerateCorrespondence);
    }
    let [a0, a1] = &pencils.a;
    let [b0, b1] = &pencils.b;
    let q = &(a0 * b1) - &(a1 * b0);
    if q.is_zero() {
        return Err(Error::DegenerateCorrespondence);
    }
    let join = ProjLine::through(pi, pj)?.form();
    let g = gcd(&q, &join);
    let out = if g.is_constant() { q } else { q.exact_div(&join)? };
    PlaneCurve::new(out)
}
