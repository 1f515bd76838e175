//! Exact roots in ℚ(ζ) of univariate polynomials over ℚ(ζ).
//!
//! For a squarefree `p` with coefficients cleared into ℤ[ζ] and leading
//! coefficient `c`, every root `α ∈ ℚ(ζ)` has `c·α ∈ ℤ[ζ]` with complex
//! absolute value at most `|c| + max|pᵢ|`. Reducing modulo a prime
//! `q ≡ 1 (mod 3)` sends ζ to a cube root of unity in 𝔽_q; simple roots
//! mod `q` are lifted by Newton iteration to `q^k` and `c·α` is recovered as
//! the unique short vector of a rank-2 lattice. Every candidate is checked
//! exactly, so the output is both sound and complete.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::eisenstein::Eisenstein;
use super::unipoly::UniPoly;

/// Factorization of a polynomial into roots in ℚ(ζ) and a root-free rest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSplit {
    /// Distinct roots with multiplicity, sorted.
    pub roots: Vec<(Eisenstein, u32)>,
    /// Monic factors without roots in ℚ(ζ), with multiplicity.
    pub rest: Vec<(UniPoly, u32)>,
}

impl RootSplit {
    /// Degree accounted for by the root-free factors.
    pub fn rest_degree(&self) -> usize {
        self.rest.iter().map(|(f, m)| f.deg() * *m as usize).sum()
    }
}

/// Roots in ℚ(ζ) of a nonzero polynomial, with multiplicities.
pub fn split_roots(p: &UniPoly) -> RootSplit {
    let mut out = RootSplit::default();
    for (factor, mult) in p.squarefree_decomposition() {
        let roots = squarefree_roots(&factor);
        let mut rest = factor.clone();
        for r in &roots {
            rest = rest.exact_div(&UniPoly::linear_root(r)).expect("verified root");
            out.roots.push((r.clone(), mult));
        }
        if rest.deg() > 0 {
            out.rest.push((rest.monic(), mult));
        }
    }
    out.roots.sort();
    out
}

/// Distinct roots in ℚ(ζ) of a squarefree polynomial.
pub fn squarefree_roots(p: &UniPoly) -> Vec<Eisenstein> {
    match p.deg() {
        0 => vec![],
        1 => vec![-(&p.coeff(0) / &p.coeff(1))],
        _ => lift_and_reconstruct(p),
    }
}

struct IntPoly {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

fn to_integral(p: &UniPoly) -> IntPoly {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let lq = BigRational::from_integer(l);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for c in p.coeffs() {
        let s = c.scale(&lq);
        a.push(s.re_part().to_integer());
        b.push(s.zeta_part().to_integer());
    }
    IntPoly { a, b }
}

fn primes_one_mod_three(min: u64) -> impl Iterator<Item = u64> {
    (min.max(7)..).filter(|n| n % 3 == 1 && is_prime(*n))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn cube_root_of_unity(q: u64) -> u64 {
    (2..q)
        .map(|g| pow_mod(g, (q - 1) / 3, q))
        .find(|&w| w != 1)
        .expect("q ≡ 1 mod 3 has a primitive cube root of unity")
}

fn eval_mod(c: &[u64], x: u64, q: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &k| (acc * x + k) % q)
}

fn reduce(c: &IntPoly, w: &BigInt, m: &BigInt) -> Vec<BigInt> {
    c.a.iter().zip(&c.b).map(|(a, b)| (a + b * w).mod_floor(m)).collect()
}

fn eval_big(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, k| (acc * x + k).mod_floor(m))
}

fn deriv_big(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().enumerate().skip(1).map(|(i, k)| k * BigInt::from(i)).collect()
}

fn inv_mod(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = x.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Newton iteration for a simple root of `c` modulo `m = q^k`.
fn newton_lift(c: &[BigInt], r0: u64, m: &BigInt, k: u32) -> Option<BigInt> {
    let dc = deriv_big(c);
    let mut r = BigInt::from(r0);
    let mut prec = 1u32;
    while prec < k {
        let f = eval_big(c, &r, m);
        let fp = eval_big(&dc, &r, m);
        r = (&r - f * inv_mod(&fp, m)?).mod_floor(m);
        prec *= 2;
    }
    Some(r)
}

fn q2(u: &BigInt, v: &BigInt) -> BigInt {
    u * u - u * v + v * v
}

/// Twice the bilinear form of `u² − uv + v²`.
fn b2(x: &(BigInt, BigInt), y: &(BigInt, BigInt)) -> BigInt {
    BigInt::from(2) * &x.0 * &y.0 - &x.0 * &y.1 - &x.1 * &y.0 + BigInt::from(2) * &x.1 * &y.1
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    BigRational::new(n.clone(), d.clone()).round().to_integer()
}

/// Short representative `(u, v)` of `{(u, v) : u + v·w ≡ target (mod m)}`.
fn reconstruct(target: &BigInt, w: &BigInt, m: &BigInt) -> (BigInt, BigInt) {
    let mut b1 = (m.clone(), BigInt::zero());
    let mut b2v = ((-w).mod_floor(m), BigInt::one());
    if b2(&b1, &b1) > b2(&b2v, &b2v) {
        std::mem::swap(&mut b1, &mut b2v);
    }
    loop {
        let mu = round_div(&b2(&b1, &b2v), &b2(&b1, &b1));
        b2v = (&b2v.0 - &mu * &b1.0, &b2v.1 - &mu * &b1.1);
        if b2(&b2v, &b2v) >= b2(&b1, &b1) {
            break;
        }
        std::mem::swap(&mut b1, &mut b2v);
    }
    let t = (target.clone(), BigInt::zero());
    let det = &b1.0 * &b2v.1 - &b1.1 * &b2v.0;
    let x1 = round_div(&(&t.0 * &b2v.1 - &t.1 * &b2v.0), &det);
    let x2 = round_div(&(&b1.0 * &t.1 - &b1.1 * &t.0), &det);
    let mut best: Option<(BigInt, (BigInt, BigInt))> = None;
    for d1 in -1..=1 {
        for d2 in -1..=1 {
            let c1 = &x1 + BigInt::from(d1);
            let c2 = &x2 + BigInt::from(d2);
            let u = &t.0 - &c1 * &b1.0 - &c2 * &b2v.0;
            let v = &t.1 - &c1 * &b1.1 - &c2 * &b2v.1;
            let n = q2(&u, &v);
            if best.as_ref().is_none_or(|(bn, _)| n < *bn) {
                best = Some((n, (u, v)));
            }
        }
    }
    best.expect("nonempty neighbourhood").1
}

fn lift_and_reconstruct(p: &UniPoly) -> Vec<Eisenstein> {
    let ip = to_integral(p);
    let n = ip.a.len() - 1;
    let lc = Eisenstein::new(
        BigRational::from_integer(ip.a[n].clone()),
        BigRational::from_integer(ip.b[n].clone()),
    );
    let lc_bound = ip.a[n].abs() + ip.b[n].abs();
    let coeff_bound = ip.a.iter().zip(&ip.b).map(|(a, b)| a.abs() + b.abs()).max().unwrap_or_default();
    let bound = lc_bound + coeff_bound;
    let need: BigInt = BigInt::from(4) * &bound * &bound + 1;

    for q in primes_one_mod_three(2 * n as u64 + 11).take(400) {
        let qb = BigInt::from(q);
        let w = cube_root_of_unity(q);
        let img: Vec<u64> = reduce(&ip, &BigInt::from(w), &qb).iter().map(|x| x.to_u64().unwrap()).collect();
        if img[n] == 0 {
            continue;
        }
        let dimg: Vec<u64> = img.iter().enumerate().skip(1).map(|(i, k)| (k * i as u64) % q).collect();
        let roots: Vec<u64> = (0..q).filter(|&x| eval_mod(&img, x, q) == 0).collect();
        if roots.iter().any(|&r| eval_mod(&dimg, r, q) == 0) {
            continue;
        }
        if roots.is_empty() {
            return vec![];
        }
        let mut k = 1u32;
        let mut m = qb.clone();
        while m < need {
            m *= &qb;
            k += 1;
        }
        // lift ω along x² + x + 1
        let wpoly = [BigInt::one(), BigInt::one(), BigInt::one()];
        let wk = match newton_lift(&wpoly, w, &m, k) {
            Some(x) => x,
            None => continue,
        };
        let cm = reduce(&ip, &wk, &m);
        let lcm = &cm[n];
        let mut found = Vec::new();
        for r in roots {
            let Some(rk) = newton_lift(&cm, r, &m, k) else { continue };
            let beta = (lcm * &rk).mod_floor(&m);
            let (u, v) = reconstruct(&beta, &wk, &m);
            let cand = Eisenstein::new(BigRational::from_integer(u), BigRational::from_integer(v));
            let alpha = &cand / &lc;
            if p.eval(&alpha).is_zero() && !found.contains(&alpha) {
                found.push(alpha);
            }
        }
        found.sort();
        return found;
    }
    panic!("no good prime found for root isolation");
}
