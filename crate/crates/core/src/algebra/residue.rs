//! Gcds of polynomials whose coefficients live in `K[s]/(h)` for a
//! squarefree `h`, splitting `h` whenever a leading coefficient turns out
//! to be a zero divisor. Used to decide what happens in the fibre over
//! roots of `h` that are not in ℚ(ζ).


use super::unipoly::UniPoly;

/// Polynomial in the fibre variable with coefficients reduced mod `h`,
/// constant term first.
pub type ResiduePoly = Vec<UniPoly>;

/// One branch of a split computation: on the roots of `modulus` the
/// polynomials share the monic factor `gcd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCase {
    pub modulus: UniPoly,
    pub gcd: ResiduePoly,
}

impl ResidueCase {
    pub fn fiber_degree(&self) -> usize {
        self.gcd.len().saturating_sub(1)
    }
}

fn reduce(p: &ResiduePoly, h: &UniPoly) -> ResiduePoly {
    let mut out: ResiduePoly = p.iter().map(|c| c.rem(h).expect("nonzero modulus")).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn mulmod(a: &UniPoly, b: &UniPoly, h: &UniPoly) -> UniPoly {
    (a * b).rem(h).expect("nonzero modulus")
}

fn invmod(a: &UniPoly, h: &UniPoly) -> UniPoly {
    let (g, s, _) = a.ext_gcd(h);
    debug_assert_eq!(g, UniPoly::one());
    s.rem(h).expect("nonzero modulus")
}

enum Step {
    Split(UniPoly, UniPoly),
    Unit(UniPoly),
}

fn classify_lead(c: &UniPoly, h: &UniPoly) -> Step {
    let g = c.gcd(h);
    if g.deg() > 0 {
        Step::Split(g.clone(), h.exact_div(&g).expect("gcd divides").monic())
    } else {
        Step::Unit(invmod(c, h))
    }
}

/// Monic normalization, splitting the modulus where the lead is a zero
/// divisor.
fn make_monic(h: UniPoly, a: ResiduePoly) -> Vec<ResidueCase> {
    let mut out = Vec::new();
    let mut stack = vec![(h, a)];
    while let Some((h, a)) = stack.pop() {
        if h.deg() == 0 {
            continue;
        }
        let a = reduce(&a, &h);
        let Some(lead) = a.last() else {
            out.push(ResidueCase { modulus: h, gcd: vec![] });
            continue;
        };
        match classify_lead(lead, &h) {
            Step::Split(g1, g2) => {
                stack.push((g1, a.clone()));
                stack.push((g2, a));
            }
            Step::Unit(inv) => {
                let gcd = a.iter().map(|c| mulmod(c, &inv, &h)).collect();
                out.push(ResidueCase { modulus: h, gcd });
            }
        }
    }
    out
}

/// Gcd of `a` and `b` over every residue branch of `h`.
pub fn gcd_mod(h: &UniPoly, a: &ResiduePoly, b: &ResiduePoly) -> Vec<ResidueCase> {
    let mut out = Vec::new();
    let mut stack = vec![(h.monic(), a.clone(), b.clone())];
    while let Some((h, a, b)) = stack.pop() {
        if h.deg() == 0 {
            continue;
        }
        let mut a = reduce(&a, &h);
        let b = reduce(&b, &h);
        let Some(lead) = b.last() else {
            out.extend(make_monic(h, a));
            continue;
        };
        match classify_lead(lead, &h) {
            Step::Split(g1, g2) => {
                stack.push((g1, a.clone(), b.clone()));
                stack.push((g2, a, b));
            }
            Step::Unit(inv) => {
                let db = b.len() - 1;
                while a.len() > db {
                    let shift = a.len() - 1 - db;
                    let coef = mulmod(a.last().unwrap(), &inv, &h);
                    for (i, bc) in b.iter().enumerate() {
                        a[i + shift] = (&a[i + shift] - &mulmod(&coef, bc, &h)).rem(&h).unwrap();
                    }
                    debug_assert!(a.last().unwrap().is_zero());
                    while a.last().is_some_and(|c| c.is_zero()) {
                        a.pop();
                    }
                }
                stack.push((h, b, a));
            }
        }
    }
    out
}

/// Common factor of several polynomials over every residue branch of `h`.
pub fn common_gcd_mod(h: &UniPoly, polys: &[ResiduePoly]) -> Vec<ResidueCase> {
    let Some((first, rest)) = polys.split_first() else {
        return vec![];
    };
    let mut cases = make_monic(h.monic(), first.clone());
    for p in rest {
        cases = cases.into_iter().flat_map(|c| gcd_mod(&c.modulus, &c.gcd, p)).collect();
    }
    cases.retain(|c| !c.modulus.is_zero() && c.modulus.deg() > 0);
    cases
}
