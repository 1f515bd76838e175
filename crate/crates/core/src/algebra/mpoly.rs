//! Sparse multivariate polynomials over ℚ(ζ).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::eisenstein::Eisenstein;
use super::unipoly::UniPoly;
use super::var::{Var, NVARS};
use crate::error::{Error, Result};

/// Exponent vector over the fixed alphabet, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Monomial::one();
        m.0[v.index()] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (x, y) in r.0.iter_mut().zip(o.0.iter()) {
            *x += *y;
        }
        r
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (x, y) in r.0.iter_mut().zip(o.0.iter()) {
            *x -= *y;
        }
        r
    }

    pub fn with_exp(&self, v: Var, e: u16) -> Monomial {
        let mut r = *self;
        r.0[v.index()] = e;
        r
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A polynomial is a map from monomials to nonzero coefficients; the zero
/// polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Eisenstein>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Eisenstein::one())
    }

    pub fn constant(c: Eisenstein) -> Self {
        MPoly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(Eisenstein::int(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(Eisenstein::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Eisenstein, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Linear form `Σ cᵢ·varsᵢ`.
    pub fn linear(coeffs: &[Eisenstein], vars: &[Var]) -> Self {
        let mut p = MPoly::zero();
        for (c, v) in coeffs.iter().zip(vars) {
            p.add_term(c.clone(), Monomial::var(*v, 1));
        }
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Eisenstein)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(c, m);
        }
        p
    }

    pub fn add_term(&mut self, c: Eisenstein, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Eisenstein)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Eisenstein {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Eisenstein::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Eisenstein {
        self.terms.get(m).cloned().unwrap_or_else(Eisenstein::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v) as u32).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.total_degree().unwrap_or(0))
    }

    /// Variables that occur with positive exponent, in alphabet order.
    pub fn support(&self) -> Vec<Var> {
        let mut used = [false; NVARS];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        Var::all().filter(|v| used[v.index()]).collect()
    }

    /// Leading term under graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Eisenstein)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Eisenstein {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Eisenstein::zero)
    }

    pub fn scale(&self, c: &Eisenstein) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect() }
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at a point given as a binding of `vars` to `values`.
    pub fn evaluate(&self, vars: &[Var], values: &[Eisenstein]) -> Result<Eisenstein> {
        if vars.len() != values.len() {
            return Err(Error::ArityMismatch { expected: vars.len(), got: values.len() });
        }
        for v in self.support() {
            if !vars.contains(&v) {
                return Err(Error::ArityMismatch { expected: self.support().len(), got: values.len() });
            }
        }
        let mut acc = Eisenstein::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in vars.iter().zip(values) {
                let e = m.exp(*v);
                if e > 0 {
                    t *= &x.pow(e as u32);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Evaluation of a form in `(y1, y2, y3)`.
    pub fn eval_y(&self, p: &[Eisenstein; 3]) -> Result<Eisenstein> {
        self.evaluate(&Var::Y, p)
    }

    pub fn differentiate(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(c * &Eisenstein::int(e as i64), m.with_exp(v, e - 1));
            }
        }
        out
    }

    /// Substitute a constant for `v`.
    pub fn substitute(&self, v: Var, value: &Eisenstein) -> MPoly {
        let mut out = MPoly::zero();
        let mut powers: Vec<Eisenstein> = vec![Eisenstein::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out.add_term(c * &powers[e], m.with_exp(v, 0));
        }
        out
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn compose(&self, subs: &[(Var, MPoly)]) -> MPoly {
        let mut cache: Vec<Vec<MPoly>> = subs.iter().map(|(_, p)| vec![MPoly::one(), p.clone()]).collect();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut t = MPoly::one();
            for (k, (v, _)) in subs.iter().enumerate() {
                let e = m.exp(*v) as usize;
                rest = rest.with_exp(*v, 0);
                if e == 0 {
                    continue;
                }
                while cache[k].len() <= e {
                    let next = cache[k].last().unwrap() * &cache[k][1];
                    cache[k].push(next);
                }
                t = &t * &cache[k][e];
            }
            out = &out + &t.mul_monomial(&rest).scale(c);
        }
        out
    }

    /// Dense coefficient list in `v`: `self = Σ coeffs[i]·v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        if self.is_zero() {
            return vec![];
        }
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].add_term(c.clone(), m.with_exp(v, 0));
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, x) in c.terms() {
                out.add_term(x.clone(), m.with_exp(v, m.exp(v) + i as u16));
            }
        }
        out
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self`.
    pub fn exact_div(&self, d: &MPoly) -> Result<MPoly> {
        let (lm, lc) = match d.leading() {
            None => return Err(Error::DivisionByZero),
            Some((m, c)) => (*m, c.inv()?),
        };
        if d.num_terms() == 1 {
            let mut q = MPoly::zero();
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return Err(Error::InexactDivision);
                }
                q.terms.insert(m.div(&lm), c * &lc);
            }
            return Ok(q);
        }
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((m, c)) = r.leading() {
            if !lm.divides(m) {
                return Err(Error::InexactDivision);
            }
            let qm = m.div(&lm);
            let qc = c * &lc;
            for (dm, dc) in d.terms() {
                r.add_term(-(&qc * dc), dm.mul(&qm));
            }
            q.add_term(qc, qm);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &MPoly) -> bool {
        !self.is_zero() && other.exact_div(self).is_ok()
    }

    /// Interpret a polynomial in the single variable `v` as a dense
    /// univariate polynomial.
    pub fn to_unipoly(&self, v: Var) -> Result<UniPoly> {
        let mut c = vec![Eisenstein::zero(); self.degree_in(v) as usize + 1];
        for (m, x) in &self.terms {
            if m.with_exp(v, 0) != Monomial::one() {
                return Err(Error::Invalid(format!("polynomial is not univariate in {v}")));
            }
            c[m.exp(v) as usize] = x.clone();
        }
        Ok(UniPoly::new(c))
    }

    pub fn from_unipoly(p: &UniPoly, v: Var) -> MPoly {
        MPoly::from_terms(
            p.coeffs().iter().enumerate().map(|(i, c)| (Monomial::var(v, i as u16), c.clone())),
        )
    }

    /// Binary form in `(u, w)` ↦ univariate polynomial in `u` with `w = 1`.
    pub fn dehomogenize(&self, u: Var, w: Var) -> Result<UniPoly> {
        self.substitute(w, &Eisenstein::one()).to_unipoly(u)
    }

    /// Rename variables via a permutation-like map.
    pub fn rename(&self, map: &[(Var, Var)]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut nm = *m;
            for (from, _) in map {
                nm = nm.with_exp(*from, 0);
            }
            for (from, to) in map {
                let e = m.exp(*from);
                nm = nm.with_exp(*to, nm.exp(*to) + e);
            }
            out.add_term(c.clone(), nm);
        }
        out
    }

    /// Is `self = c·other` for some nonzero scalar `c`? Returns the scalar.
    pub fn proportional_to(&self, other: &MPoly) -> Option<Eisenstein> {
        if self.is_zero() || other.is_zero() || self.num_terms() != other.num_terms() {
            return None;
        }
        let (m, a) = self.leading()?;
        let b = other.coeff(m);
        if b.is_zero() {
            return None;
        }
        let c = a / &b;
        (*self == other.scale(&c)).then_some(c)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in o.terms() {
            out.add_term(c.clone(), *m);
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in o.terms() {
            out.add_term(-c, *m);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut out: BTreeMap<Monomial, Eisenstein> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e = out.entry(m1.mul(m2)).or_insert_with(Eisenstein::zero);
                *e += &(c1 * c2);
            }
        }
        out.retain(|_, c| !c.is_zero());
        MPoly { terms: out }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<Eisenstein> for MPoly {
    fn from(c: Eisenstein) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

/// Convenience: `y1`, `y2`, `y3` as polynomials.
pub fn ys() -> [MPoly; 3] {
    [MPoly::var(Var::Y1), MPoly::var(Var::Y2), MPoly::var(Var::Y3)]
}
