//! Multivariate gcd (recursive, subresultant-based) and squarefree parts.

use super::mpoly::MPoly;
use super::resultant::{prs_last, trim, Coeffs};
use super::var::Var;
use crate::error::{Error, Result};

fn main_var(a: &MPoly, b: &MPoly) -> Option<Var> {
    a.support().into_iter().chain(b.support()).max()
}

/// Content of `p` viewed as a polynomial in `v` (gcd of its coefficients).
pub fn content_in(p: &MPoly, v: Var) -> MPoly {
    p.coeffs_in(v).iter().fold(MPoly::zero(), |g, c| gcd(&g, c))
}

/// Primitive part of `p` in `v`, normalized to leading coefficient 1.
pub fn primitive_part_in(p: &MPoly, v: Var) -> MPoly {
    if p.is_zero() {
        return MPoly::zero();
    }
    let c = content_in(p, v);
    p.exact_div(&c).expect("content divides").monic()
}

/// Gcd of two polynomials, normalized to leading coefficient 1
/// (`gcd(0, 0) = 0`).
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let v = match main_var(a, b) {
        None => return MPoly::one(),
        Some(v) => v,
    };
    let (ca, cb) = (content_in(a, v), content_in(b, v));
    let c = gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    if pa.degree_in(v) == 0 || pb.degree_in(v) == 0 {
        return c.monic();
    }
    let last: Coeffs = prs_last(&pa.coeffs_in(v), &pb.coeffs_in(v)).expect("exact subresultant divisions");
    let d = MPoly::from_coeffs_in(v, &trim(last));
    let d = primitive_part_in(&d, v);
    (&c * &d).monic()
}

/// Gcd of `a` and `b` as polynomials in `v` over the fraction field of the
/// other variables, returned primitive in `v`.
pub fn gcd_in(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let g = gcd(a, b);
    if g.degree_in(v) == 0 {
        MPoly::one()
    } else {
        primitive_part_in(&g, v)
    }
}

/// Squarefree part of `p` with respect to `v`, and whether `p` already
/// was squarefree in `v`.
pub fn squarefree_part(p: &MPoly, v: Var) -> Result<(MPoly, bool)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree_in(v) == 0 {
        return Ok((p.clone(), true));
    }
    let g = gcd_in(p, &p.differentiate(v), v);
    let flag = g.degree_in(v) == 0;
    Ok((p.exact_div(&g)?, flag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::eisenstein::Eisenstein;
    use crate::algebra::mpoly::ys;

    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    #[test]
    fn squarefree_examples() {
        let p = &(&t() - &MPoly::int(1)).pow(2) * &(&t() + &MPoly::int(2));
        let (s, flag) = squarefree_part(&p, Var::T).unwrap();
        assert!(!flag);
        let expect = &(&t() - &MPoly::int(1)) * &(&t() + &MPoly::int(2));
        assert!(s.proportional_to(&expect).is_some());

        let q = &(&t().pow(2) + &t()) + &MPoly::int(1);
        assert!(squarefree_part(&q, Var::T).unwrap().1);
        assert_eq!(squarefree_part(&MPoly::zero(), Var::T), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn multivariate_gcd_recovers_common_factor() {
        let [y1, y2, y3] = ys();
        let common = &(&y1 * &y2) - &y3.pow(2).scale(&Eisenstein::zeta());
        let a = &common * &(&y1 + &y3);
        let b = &common * &(&y2.pow(2) - &y1);
        let g = gcd(&a, &b);
        assert!(g.proportional_to(&common).is_some());
        assert_eq!(gcd(&(&y1 + &y2), &(&y1 - &y2)), MPoly::one());
    }

    #[test]
    fn multivariate_squarefree_in_one_variable() {
        let [y1, y2, _] = ys();
        let p = &(&y1 - &y2).pow(2) * &(&y1 + &y2);
        let (s, flag) = squarefree_part(&p, Var::Y1).unwrap();
        assert!(!flag);
        assert!(s.proportional_to(&(&(&y1 - &y2) * &(&y1 + &y2))).is_some());
    }
}
