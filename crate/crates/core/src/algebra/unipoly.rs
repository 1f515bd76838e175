//! Dense univariate polynomials over ℚ(ζ).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::eisenstein::Eisenstein;
use crate::error::{Error, Result};

/// Coefficients stored from the constant term upward, with no trailing
/// zeros. The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    c: Vec<Eisenstein>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Eisenstein>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Eisenstein::one())
    }

    pub fn constant(x: Eisenstein) -> Self {
        UniPoly::new(vec![x])
    }

    /// `t − root`.
    pub fn linear_root(root: &Eisenstein) -> Self {
        UniPoly::new(vec![-root, Eisenstein::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&x| Eisenstein::int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Eisenstein] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Eisenstein {
        self.c.get(i).cloned().unwrap_or_else(Eisenstein::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Eisenstein {
        self.c.last().cloned().unwrap_or_else(Eisenstein::zero)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = self.lead().inv().expect("nonzero lead");
        self.scale(&inv)
    }

    pub fn scale(&self, x: &Eisenstein) -> UniPoly {
        UniPoly::new(self.c.iter().map(|c| c * x).collect())
    }

    pub fn eval(&self, x: &Eisenstein) -> Eisenstein {
        let mut acc = Eisenstein::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.c.iter().enumerate().skip(1).map(|(i, c)| c * &Eisenstein::int(i as i64)).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lead().inv()?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Eisenstein::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = &r[i + dd] * &inv;
            if !coef.is_zero() {
                for (j, dc) in d.c.iter().enumerate() {
                    let t = &coef * dc;
                    r[i + j] -= &t;
                }
            }
            q[i] = coef;
        }
        r.truncate(dd);
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.monic(), o.monic());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Extended gcd: returns `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().inv().expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Yun's squarefree decomposition: monic factors `s_i` with
    /// `self ∝ Π s_i^i`, listed as `(s_i, i)` for nonconstant `s_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = fp.exact_div(&a).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg() > 0 {
            a = b.gcd(&d);
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Monic squarefree part.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.deg() == 0 {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Multiplicity of `x` as a root (0 if not a root); `None` for zero.
    pub fn root_order(&self, x: &Eisenstein) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let lin = UniPoly::linear_root(x);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin).expect("linear divisor");
            if !r.is_zero() {
                return Some(k);
            }
            p = q;
            k += 1;
        }
    }

    /// Order of vanishing at 0.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.c.iter().position(|c| !c.is_zero())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Eisenstein::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += &(x * y);
            }
        }
        UniPoly::new(c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = super::mpoly::MPoly::from_unipoly(self, super::var::Var::T);
        write!(f, "{p}")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_of_repeated_root() {
        // (t − 1)²(t + 2)
        let p = &UniPoly::from_ints(&[-1, 1]).pow(2) * &UniPoly::from_ints(&[2, 1]);
        let s = p.squarefree_part();
        assert_eq!(s, &UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[2, 1]));
        let dec = p.squarefree_decomposition();
        assert_eq!(dec, vec![(UniPoly::from_ints(&[2, 1]), 1), (UniPoly::from_ints(&[-1, 1]), 2)]);
    }

    #[test]
    fn cyclotomic_quadratic_is_squarefree() {
        let p = UniPoly::from_ints(&[1, 1, 1]);
        assert_eq!(p.gcd(&p.derivative()), UniPoly::one());
        assert!(p.eval(&Eisenstein::zeta()).is_zero());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = UniPoly::from_ints(&[3, 0, 1, 2]);
        let b = UniPoly::from_ints(&[1, 5, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, UniPoly::one());
    }

    #[test]
    fn root_order_counts_multiplicity() {
        let p = &UniPoly::from_ints(&[-1, 1]).pow(3) * &UniPoly::from_ints(&[0, 1]);
        assert_eq!(p.root_order(&Eisenstein::one()), Some(3));
        assert_eq!(p.root_order(&Eisenstein::zero()), Some(1));
        assert_eq!(p.root_order(&Eisenstein::int(5)), Some(0));
    }
}
