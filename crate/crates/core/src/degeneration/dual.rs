//! Dual curves of smooth plane curves.
//!
//! A line `x·y = 0` with `x3 ≠ 0` meets `F` in the zeros of
//! `G(t) = F(x3·t, x3, −(x1·t + x2))`, and it is tangent exactly when `G`
//! has a repeated root. So the dual form is the discriminant of `G` in `t`
//! once the known extraneous factors are removed: the leading coefficient
//! of `G` and powers of `x3`.

use std::collections::HashMap;

use num_traits::One;
use serde::Serialize;

use crate::algebra::{resultant, squarefree_part, Eisenstein, MPoly, UniPoly, Var};
use crate::curvelab::{is_smooth, PlaneCurve};
use crate::error::{Error, Result};

/// The dual of a smooth curve. Dual coordinates `x1, x2, x3` are written
/// with `y1, y2, y3` so the result is an ordinary plane curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCurve {
    pub curve: PlaneCurve,
    /// Degree of the discriminant before stripping.
    pub raw_degree: u32,
    /// Points of `F` whose tangent line was checked to lie on the dual.
    pub sampled: usize,
    /// Of those, points where the dual's tangent line recovered the point.
    pub bidual: usize,
}

fn x_to_y(p: &MPoly) -> MPoly {
    p.rename(&[(Var::X1, Var::Y1), (Var::X2, Var::Y2), (Var::X3, Var::Y3)])
}

fn strip_x3(mut p: MPoly) -> MPoly {
    let x3 = MPoly::var(Var::X3);
    while let Ok(q) = p.exact_div(&x3) {
        if q.is_zero() {
            break;
        }
        p = q;
    }
    p
}

/// The raw eliminant `Res_t(G, ∂G/∂t)`.
pub fn tangency_discriminant(f: &MPoly) -> Result<MPoly> {
    let [x1, x2, x3] = Var::X.map(MPoly::var);
    let t = MPoly::var(Var::T);
    let g = f.compose(&[(Var::Y1, &x3 * &t), (Var::Y2, x3.clone()), (Var::Y3, -&(&(&x1 * &t) + &x2))]);
    resultant(&g, &g.differentiate(Var::T), Var::T)
}

pub fn dual_curve(f: &PlaneCurve) -> Result<DualCurve> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Invalid("dual of a line".into()));
    }
    if !is_smooth(f)? {
        return Err(Error::SingularMember(f.form().to_string()));
    }
    let raw = tangency_discriminant(f.form())?;
    let raw_degree = raw.total_degree().unwrap_or(0);
    // leading coefficient of G in t is F(x3, 0, −x1)
    let lead = f.form().compose(&[
        (Var::Y1, MPoly::var(Var::X3)),
        (Var::Y2, MPoly::zero()),
        (Var::Y3, -&MPoly::var(Var::X1)),
    ]);
    let mut p = raw.exact_div(&lead).map_err(|_| Error::DualValidation(format!("leading factor does not divide {raw}")))?;
    p = strip_x3(p);
    let target = d * (d - 1);
    if p.total_degree() != Some(target) {
        let (sq, _) = squarefree_part(&p, Var::X1)?;
        p = strip_x3(sq);
    }
    if p.total_degree() != Some(target) {
        return Err(Error::DualValidation(format!("eliminant of degree {:?}, expected {target}: {p}", p.total_degree())));
    }
    let curve = PlaneCurve::new(x_to_y(&p))?;
    let (sampled, bidual) = validate(f, &curve)?;
    if sampled < 10 {
        return Err(Error::DualValidation(format!("only {sampled} sample points")));
    }
    Ok(DualCurve { curve, raw_degree, sampled, bidual })
}

/// Arithmetic in `K[u]/(m)`.
struct Quotient<'a> {
    m: &'a UniPoly,
}

impl Quotient<'_> {
    fn reduce(&self, p: &UniPoly) -> UniPoly {
        p.rem(self.m).expect("nonzero modulus")
    }

    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.reduce(&(a * b))
    }

    /// `p(vals)` for a form in `y1, y2, y3`.
    fn eval(&self, p: &MPoly, vals: &[UniPoly; 3]) -> UniPoly {
        let mut powers: HashMap<(usize, u16), UniPoly> = HashMap::new();
        let mut acc = UniPoly::zero();
        for (m, c) in p.terms() {
            let mut t = UniPoly::constant(c.clone());
            for (i, v) in Var::Y.iter().enumerate() {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| {
                    (0..e).fold(UniPoly::one(), |a, _| self.mul(&a, &vals[i]))
                });
                t = self.mul(&t, pw);
            }
            acc = &acc + &t;
        }
        acc
    }
}

/// Checks the dual on the points of `F` over the lines `y2 = c·y1`,
/// `c = 2, …, 13`: each fiber is the root set of `m(u) = F(1, c, u)` and the
/// identities are checked in `K[u]/(m)`. Returns the number of points
/// sampled and the number passing the bidual test.
fn validate(f: &PlaneCurve, dual: &PlaneCurve) -> Result<(usize, usize)> {
    let grad_f = f.partials();
    let grad_d = dual.partials();
    let mut sampled = 0;
    let mut bidual = 0;
    for c in 2..14i64 {
        let m = f
            .form()
            .substitute(Var::Y1, &Eisenstein::one())
            .substitute(Var::Y2, &Eisenstein::int(c))
            .to_unipoly(Var::Y3)?
            .squarefree_part();
        if m.deg() == 0 {
            continue;
        }
        let q = Quotient { m: &m };
        let y = [UniPoly::one(), UniPoly::constant(Eisenstein::int(c)), UniPoly::from_ints(&[0, 1])];
        if !q.eval(f.form(), &y).is_zero() {
            return Err(Error::DualValidation(format!("sample fiber c = {c} not on the curve")));
        }
        let x: [UniPoly; 3] = std::array::from_fn(|i| q.eval(&grad_f[i], &y));
        if !q.eval(dual.form(), &x).is_zero() {
            return Err(Error::DualValidation(format!("tangent lines over c = {c} miss the dual")));
        }
        sampled += m.deg();
        let back: [UniPoly; 3] = std::array::from_fn(|i| q.eval(&grad_d[i], &x));
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let cross = &q.mul(&back[i], &y[j]) - &q.mul(&back[j], &y[i]);
            if !q.reduce(&cross).is_zero() {
                return Err(Error::DualValidation(format!("bidual mismatch over c = {c}")));
            }
        }
        // points where the dual's gradient vanishes prove nothing
        let vanish = back.iter().fold(m.clone(), |g, b| g.gcd(b));
        bidual += m.deg() - vanish.deg();
    }
    Ok((sampled, bidual))
}
