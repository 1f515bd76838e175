//! Resultants by the fraction-free subresultant polynomial remainder
//! sequence, plus Sylvester-type determinants for individual principal
//! subresultant coefficients.
//!
//! Polynomials are viewed in one distinguished variable with coefficients
//! in the polynomial ring of the remaining ones. Every division performed
//! by the sequence is exact in that ring.

use num_traits::One;

use super::eisenstein::Eisenstein;
use super::mpoly::MPoly;
use super::var::Var;
use crate::error::{Error, Result};

/// Dense coefficient vector in the distinguished variable, constant first.
pub(crate) type Coeffs = Vec<MPoly>;

pub(crate) fn trim(mut c: Coeffs) -> Coeffs {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn deg(c: &Coeffs) -> usize {
    c.len().saturating_sub(1)
}

fn lc(c: &Coeffs) -> &MPoly {
    c.last().expect("nonzero polynomial")
}

/// Pseudo-remainder: `lc(b)^(deg a − deg b + 1)·a mod b`.
pub(crate) fn prem(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let db = deg(b);
    if a.len() < b.len() {
        return a.clone();
    }
    let delta = deg(a) - db;
    let lb = lc(b).clone();
    let mut r = a.clone();
    let mut steps = 0u32;
    while !r.is_empty() && deg(&r) >= db {
        let lr = lc(&r).clone();
        let shift = deg(&r) - db;
        let mut next: Coeffs = r.iter().map(|c| c * &lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(bc * &lr);
        }
        r = trim(next);
        steps += 1;
    }
    let fix = (delta as u32 + 1) - steps;
    if fix > 0 {
        let m = lb.pow(fix);
        r = r.iter().map(|c| c * &m).collect();
    }
    r
}

fn exact_div_all(c: &Coeffs, d: &MPoly) -> Result<Coeffs> {
    c.iter().map(|x| x.exact_div(d)).collect()
}

/// `h^(1−δ)·g^δ`, exact.
fn next_h(h: &MPoly, g: &MPoly, delta: usize) -> Result<MPoly> {
    match delta {
        0 => Ok(h.clone()),
        1 => Ok(g.clone()),
        _ => g.pow(delta as u32).exact_div(&h.pow(delta as u32 - 1)),
    }
}

/// Resultant of `p` and `q` with respect to `var`.
///
/// Both inputs must have positive degree in `var`.
pub fn resultant(p: &MPoly, q: &MPoly, var: Var) -> Result<MPoly> {
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        return Err(Error::DegreeZero(var.name().to_string()));
    }
    resultant_coeffs(&p.coeffs_in(var), &q.coeffs_in(var))
}

pub(crate) fn resultant_coeffs(p: &Coeffs, q: &Coeffs) -> Result<MPoly> {
    let (mut a, mut b) = (trim(p.clone()), trim(q.clone()));
    if a.is_empty() || b.is_empty() {
        return Ok(MPoly::zero());
    }
    let mut s = Eisenstein::one();
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        return Ok(lc(&b).pow(deg(&a) as u32).scale(&s));
    }
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            s = -s;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return Ok(MPoly::zero());
        }
        let div = &g * &h.pow(delta as u32);
        a = b;
        b = exact_div_all(&r, &div)?;
        g = lc(&a).clone();
        h = next_h(&h, &g, delta)?;
        if deg(&b) == 0 {
            let da = deg(&a) as u32;
            let num = lc(&b).pow(da);
            let res = if da == 0 { num } else { num.exact_div(&h.pow(da - 1))? };
            return Ok(res.scale(&s));
        }
    }
}

/// Gcd over the fraction field of the coefficient ring, returned as the
/// last nonzero element of the subresultant sequence (not made primitive).
pub(crate) fn prs_last(p: &Coeffs, q: &Coeffs) -> Result<Coeffs> {
    let (mut a, mut b) = (trim(p.clone()), trim(q.clone()));
    if b.is_empty() {
        return Ok(a);
    }
    if a.is_empty() {
        return Ok(b);
    }
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            return Ok(b);
        }
        if deg(&r) == 0 {
            return Ok(vec![MPoly::one()]);
        }
        let div = &g * &h.pow(delta as u32);
        a = b;
        b = exact_div_all(&r, &div)?;
        g = lc(&a).clone();
        h = next_h(&h, &g, delta)?;
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> Result<MPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut sign = Eisenstein::one();
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                None => return Ok(MPoly::zero()),
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(m[n - 1][n - 1].scale(&sign))
}

/// The `j`-th principal subresultant coefficient of `p`, `q` in `var`,
/// computed directly as a determinant. `j = 0` gives the Sylvester
/// resultant.
pub fn principal_subresultant(p: &MPoly, q: &MPoly, var: Var, j: usize) -> Result<MPoly> {
    let (a, b) = (p.coeffs_in(var), q.coeffs_in(var));
    let (m, n) = (deg(&a), deg(&b));
    if a.is_empty() || b.is_empty() || m == 0 || n == 0 {
        return Err(Error::DegreeZero(var.name().to_string()));
    }
    if j >= m.min(n) {
        return Err(Error::Invalid(format!("subresultant index {j} out of range")));
    }
    let size = m + n - 2 * j;
    // Rows: x^(n−j−1)·a … a, x^(m−j−1)·b … b. Columns: powers
    // m+n−j−1 down to j (the last column is the x^j one).
    let top = m + n - j - 1;
    let mut rows: Vec<Vec<MPoly>> = Vec::with_capacity(size);
    for (poly, count) in [(&a, n - j), (&b, m - j)] {
        for shift in (0..count).rev() {
            let mut row = vec![MPoly::zero(); size];
            for (e, c) in poly.iter().enumerate() {
                let power = e + shift;
                if power >= j && power <= top {
                    row[top - power] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    bareiss_det(rows)
}
