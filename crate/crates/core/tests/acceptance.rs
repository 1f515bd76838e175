//! Acceptance gate. Each criterion prints one PASS/FAIL line; parts that
//! failed are listed after it. Runs without the libtest harness so that every
//! line is shown, and exits nonzero if any criterion fails.
//!
//! Reference values that are derived rather than stated are recomputed here
//! by deliberately naive means (cofactor expansion, Sylvester matrices,
//! cross products) instead of reusing the library's routines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hesse_lab::algebra::{gcd, parse_poly, resultant, Eisenstein, MPoly, Var};
use hesse_lab::curvelab::{intersect, intersect_from, singular_points, transversal, PlaneCurve, SingularityTag};
use hesse_lab::degeneration::{
    curve_c, dual_curve, local_model_check, plucker_profile, w0_assemble, w0_singularity_audit, zeuthen_segre_check,
};
use hesse_lab::hesse::{
    concurrency_cubic, flex_meeting_points, hesse_cubic, hesse_cubic_generic, hessian_form, nu_generic,
    polar_pencil_determinant, PencilParam,
};
use hesse_lab::projective::{build_groups, nine_lines, orbit, ProjPoint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Gate {
    parts: Vec<(String, bool)>,
}

impl Gate {
    fn new() -> Gate {
        Gate { parts: vec![] }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.parts.push((name.into(), ok));
    }

    fn finish(self, n: u32, title: &str, start: Instant, budget: Duration) -> bool {
        let elapsed = start.elapsed();
        let mut failed: Vec<&str> = self.parts.iter().filter(|(_, ok)| !ok).map(|(s, _)| s.as_str()).collect();
        let timing = format!("runtime {:.2}s < {}s", elapsed.as_secs_f64(), budget.as_secs());
        if elapsed >= budget {
            failed.push(&timing);
        }
        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {n:>2} {status}  {title}  ({} parts, {:.2}s)",
            self.parts.len(),
            elapsed.as_secs_f64()
        );
        for f in &failed {
            println!("    failed: {f}");
        }
        failed.is_empty()
    }
}

fn e(n: i64) -> Eisenstein {
    Eisenstein::int(n)
}

fn w() -> Eisenstein {
    Eisenstein::zeta()
}

fn poly(s: &str) -> MPoly {
    parse_poly(s).unwrap()
}

fn lam(n: i64) -> PencilParam {
    PencilParam::int(n)
}

fn mat_apply(m: &[[Eisenstein; 3]; 3], p: &[Eisenstein; 3]) -> [Eisenstein; 3] {
    std::array::from_fn(|i| (0..3).fold(e(0), |acc, j| &acc + &(&m[i][j] * &p[j])))
}

fn brute_orbit(p: ProjPoint) -> BTreeSet<ProjPoint> {
    let zero = e(0);
    let one = e(1);
    let gens = [
        [[one.clone(), zero.clone(), zero.clone()], [zero.clone(), w(), zero.clone()], [zero.clone(), zero.clone(), &w() * &w()]],
        [[zero.clone(), one.clone(), zero.clone()], [zero.clone(), zero.clone(), one.clone()], [one.clone(), zero.clone(), zero.clone()]],
        [[zero.clone(), one.clone(), zero.clone()], [one.clone(), zero.clone(), zero.clone()], [zero.clone(), zero.clone(), one.clone()]],
    ];
    let mut seen = BTreeSet::from([p.clone()]);
    let mut todo = vec![p];
    while let Some(q) = todo.pop() {
        for g in &gens {
            let r = ProjPoint::new(mat_apply(g, q.coords())).unwrap();
            if seen.insert(r.clone()) {
                todo.push(r);
            }
        }
    }
    seen
}

fn criterion_01_orbits() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    let (_, gh) = build_groups();
    let flex = ProjPoint::from_ints(1, -1, 0);
    g.check("flexpoint orbit 9", orbit(&flex, &gh).len() == 9);
    g.check("flexpoint orbit matches brute force", orbit(&flex, &gh).into_iter().collect::<BTreeSet<_>>() == brute_orbit(flex));
    let vertices = [
        ProjPoint::from_ints(0, 0, 1),
        ProjPoint::from_ints(1, 1, 1),
        ProjPoint::new([e(1), e(1), w()]).unwrap(),
        ProjPoint::new([e(1), e(1), &w() * &w()]).unwrap(),
    ];
    // the members λ = ∞ and λ = −ζ^i/2 are triangles with these vertices
    let members = [
        PencilParam::infinity(),
        PencilParam::finite(Eisenstein::ratio(-1, 2)),
        PencilParam::finite(&Eisenstein::ratio(-1, 2) * &w()),
        PencilParam::finite(&Eisenstein::ratio(-1, 2) * &(&w() * &w())),
    ];
    let singular_on = |q: &ProjPoint, m: &PencilParam| {
        let f = hesse_cubic(m);
        Var::Y.iter().all(|y| q.lies_on(&f.form().differentiate(*y)))
    };
    let hosts: BTreeSet<usize> = vertices
        .iter()
        .filter_map(|v| members.iter().position(|m| orbit(v, &gh).iter().all(|q| singular_on(q, m))))
        .collect();
    g.check("each vertex orbit is the singular locus of its own triangle", hosts.len() == 4);
    let mut covered = BTreeSet::new();
    for v in &vertices {
        let o = orbit(v, &gh);
        g.check(format!("vertex orbit of {v} has size 3"), o.len() == 3);
        g.check(format!("vertex orbit of {v} matches brute force"), o.iter().cloned().collect::<BTreeSet<_>>() == brute_orbit(v.clone()));
        covered.extend(o);
    }
    g.check("four distinct vertex orbits", covered.len() == 12);
    let generic = ProjPoint::from_ints(1, 2, 5);
    g.check("generic orbit 18", orbit(&generic, &gh).len() == 18 && brute_orbit(generic).len() == 18);
    let on_line = ProjPoint::from_ints(1, 1, 2);
    g.check("(1 : 1 : 2) is on a nine-line", nine_lines().iter().any(|l| l.contains(&on_line)));
    g.check("nine-line point orbit 9", orbit(&on_line, &gh).len() == 9 && brute_orbit(on_line).len() == 9);
    g.finish(1, "orbit structure", start, Duration::from_secs(5))
}

fn det3(m: &[[MPoly; 3]; 3]) -> MPoly {
    let minor = |a: &MPoly, b: &MPoly, c: &MPoly, d: &MPoly| &(a * d) - &(b * c);
    let t0 = &m[0][0] * &minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let t1 = &m[0][1] * &minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let t2 = &m[0][2] * &minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    &(&t0 - &t1) + &t2
}

fn criterion_02_hessian_identity() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    let f = hesse_cubic_generic();
    let ys = Var::Y;
    let h: [[MPoly; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| f.differentiate(ys[i]).differentiate(ys[j])));
    let oracle = det3(&h);
    // ν = (6λ0λ1² : −(λ0³ + 2λ1³)) written out by hand
    let target = poly("6*l0*l1^2*(y1^3 + y2^3 + y3^3) - 6*(l0^3 + 2*l1^3)*y1*y2*y3");
    let scalar = oracle.proportional_to(&target);
    g.check("cofactor Hessian is a constant multiple of the ν member", scalar.is_some());
    g.check("library Hessian agrees with cofactor Hessian", hessian_form(&f) == oracle);
    let (n0, n1) = nu_generic();
    g.check("ν formula", n0.proportional_to(&poly("6*l0*l1^2")).is_some() && n1 == poly("-(l0^3 + 2*l1^3)"));
    println!("    Hessian = {} · E_ν", scalar.map(|s| s.to_string()).unwrap_or_default());
    g.finish(2, "Hessian identity", start, Duration::from_secs(5))
}

fn criterion_03_polar_pencil() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    // rows: coefficients of Σ x_j (y_j² + 2λ y_{j+1} y_{j+2}) as a conic in y
    let m: [[MPoly; 3]; 3] = [
        [poly("x1"), poly("l1*x3"), poly("l1*x2")],
        [poly("l1*x3"), poly("x2"), poly("l1*x1")],
        [poly("l1*x2"), poly("l1*x1"), poly("x3")],
    ];
    let oracle = det3(&m);
    let target = poly("x1*x2*x3*(1 + 2*l1^3) - l1^2*(x1^3 + x2^3 + x3^3)");
    g.check("cofactor determinant ∝ target", oracle.proportional_to(&target).is_some());
    let lib = polar_pencil_determinant().substitute(Var::L0, &e(1));
    g.check("library determinant ∝ target", lib.proportional_to(&target).is_some());
    let (p, roots) = concurrency_cubic(0);
    let cubic = |x: &Eisenstein| {
        let x2 = x * x;
        &(&(&(&x2 * x) * &e(2)) - &(&x2 * &e(3))) + &e(1)
    };
    let set: BTreeSet<Eisenstein> = roots.iter().map(|(r, _)| r.clone()).collect();
    g.check("root set {1, -1/2}", set == BTreeSet::from([e(1), Eisenstein::ratio(-1, 2)]));
    g.check("oracle: 1 and -1/2 are roots", cubic(&e(1)).is_zero() && cubic(&Eisenstein::ratio(-1, 2)).is_zero());
    g.check("library cubic is 2λ³ − 3λ² + 1 up to scale", (0..=3).all(|i| {
        let want = [e(1), e(0), e(-3), e(2)];
        &p.coeff(i) * &want[3] == &want[i] * &p.lead()
    }));
    let mult: Vec<(String, u32)> = roots.iter().map(|(r, m)| (r.to_string(), *m)).collect();
    g.check("1 is a double root and -1/2 simple", mult == [("-1/2".to_string(), 1), ("1".to_string(), 2)]);
    println!("    roots with multiplicity: {mult:?}");
    g.finish(3, "polar pencil determinant", start, Duration::from_secs(5))
}

/// Tangent lines at the nine flexpoints by the gradient and their pairwise
/// meets by cross products.
fn oracle_meets(p: &PencilParam) -> (Vec<ProjPoint>, Vec<Vec<usize>>) {
    let f = hesse_cubic(p);
    let flexes = brute_orbit(ProjPoint::from_ints(1, -1, 0));
    let tangents: Vec<[Eisenstein; 3]> = flexes
        .iter()
        .map(|q| std::array::from_fn(|i| f.form().differentiate(Var::Y[i]).eval_y(q.coords()).unwrap()))
        .collect();
    let mut pts: Vec<(ProjPoint, Vec<usize>)> = vec![];
    for i in 0..9 {
        for j in i + 1..9 {
            let (a, b) = (&tangents[i], &tangents[j]);
            let c = std::array::from_fn(|k| &(&a[(k + 1) % 3] * &b[(k + 2) % 3]) - &(&a[(k + 2) % 3] * &b[(k + 1) % 3]));
            let q = ProjPoint::new(c).unwrap();
            match pts.iter_mut().find(|(r, _)| *r == q) {
                Some((_, ls)) => ls.extend([i, j]),
                None => pts.push((q, vec![i, j])),
            }
        }
    }
    pts.iter_mut().for_each(|(_, ls)| {
        ls.sort();
        ls.dedup();
    });
    pts.into_iter().unzip()
}

fn criterion_04_flex_arrangement() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    let (_, gh) = build_groups();
    let lines = nine_lines();
    for n in [1, 2, -3] {
        let p = lam(n);
        let (pts, through) = oracle_meets(&p);
        let lib = flex_meeting_points(&p).unwrap();
        g.check(format!("λ={n}: library and oracle agree"), {
            let a: BTreeSet<_> = lib.point_set().into_iter().collect();
            a == pts.iter().cloned().collect()
        });
        g.check(format!("λ={n}: 36 distinct meeting points (found {})", pts.len()), pts.len() == 36);
        g.check(format!("λ={n}: all simple crossings"), through.iter().all(|ls| ls.len() == 2));
        let per_point: Vec<usize> = pts.iter().map(|q| lines.iter().filter(|l| l.contains(q)).count()).collect();
        let per_line: Vec<usize> = lines.iter().map(|l| pts.iter().filter(|q| l.contains(q)).count()).collect();
        g.check(format!("λ={n}: each point on one nine-line"), per_point.iter().all(|&c| c == 1));
        g.check(format!("λ={n}: four per line (found {per_line:?})"), per_line == [4; 9]);
        let mut orbits: Vec<usize> = vec![];
        let mut left: BTreeSet<ProjPoint> = pts.iter().cloned().collect();
        while let Some(q) = left.iter().next().cloned() {
            let o: BTreeSet<ProjPoint> = orbit(&q, &gh).into_iter().collect();
            orbits.push(o.len());
            left = &left - &o;
        }
        g.check(format!("λ={n}: four orbits of size 9 (found {orbits:?})"), orbits == [9, 9, 9, 9]);
    }
    let (pts, through) = oracle_meets(&lam(0));
    g.check(format!("λ=0: fewer than 36 (found {})", pts.len()), pts.len() < 36);
    let triple: BTreeSet<ProjPoint> = pts.iter().zip(&through).filter(|(_, ls)| ls.len() >= 3).map(|(q, _)| q.clone()).collect();
    let vertex_orbit: BTreeSet<ProjPoint> = orbit(&ProjPoint::from_ints(0, 0, 1), &gh).into_iter().collect();
    g.check("λ=0: concurrency exactly at the orbit of (0 : 0 : 1)", triple == vertex_orbit);
    let lib = flex_meeting_points(&lam(0)).unwrap();
    let reported: BTreeSet<ProjPoint> = lib.concurrences().iter().map(|m| m.point.clone()).collect();
    g.check("λ=0: library reports the concurrency", reported == vertex_orbit);
    g.finish(4, "flex-tangent arrangement", start, Duration::from_secs(60))
}

fn criterion_05_duality() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    let p = lam(1);
    let d = dual_curve(&hesse_cubic(&p)).unwrap();
    g.check("degree 6", d.curve.degree() == 6);
    let locus = singular_points(&d.curve).unwrap();
    g.check(
        format!("exactly 9 singular points (found {} + {} conjugate families)", locus.records.len(), locus.certificates.len()),
        locus.records.len() == 9 && locus.certificates.is_empty() && locus.components.is_empty(),
    );
    g.check("all CuspA2", locus.records.iter().all(|r| r.tag == SingularityTag::CuspA2));
    let f = hesse_cubic(&p);
    let tangent_points: BTreeSet<ProjPoint> = brute_orbit(ProjPoint::from_ints(1, -1, 0))
        .iter()
        .map(|q| ProjPoint::new(std::array::from_fn(|i| f.form().differentiate(Var::Y[i]).eval_y(q.coords()).unwrap())).unwrap())
        .collect();
    g.check("flex tangents lie on the dual", tangent_points.iter().all(|t| t.lies_on(d.curve.form())));
    g.check(
        "cusps are the flex tangents",
        locus.records.iter().map(|r| r.point.clone()).collect::<BTreeSet<_>>() == tangent_points,
    );
    g.check(format!("bidual sampled on ≥ 10 points ({} / {})", d.sampled, d.bidual), d.sampled >= 10 && d.bidual >= 10);
    g.finish(5, "duality", start, Duration::from_secs(120))
}

fn criterion_06_w0_audit() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    for n in [1, 2, -3] {
        let p = lam(n);
        let w0 = w0_assemble(&p).unwrap();
        let reduced = w0.reduced().unwrap();
        let e_curve = hesse_cubic(&p);
        let (meets, _) = oracle_meets(&p);
        let meets: BTreeSet<ProjPoint> = meets.into_iter().collect();
        let locus = singular_points(&reduced).unwrap();
        let nodes_at_meets =
            locus.records.iter().filter(|r| r.tag == SingularityTag::Node && meets.contains(&r.point)).count();
        let nodes_on_e =
            locus.records.iter().filter(|r| r.tag == SingularityTag::Node && r.point.lies_on(e_curve.form())).count();
        let mut tangency = vec![];
        for (l, _) in &w0.components().unwrap()[1..] {
            tangency.extend(intersect(&e_curve, l).unwrap().points);
        }
        let triple = tangency.iter().filter(|(_, m)| *m == 3).map(|(q, _)| q.clone()).collect::<BTreeSet<_>>();
        g.check(format!("λ={n}: 36 nodes at L_i ∩ L_j (found {nodes_at_meets})"), nodes_at_meets == 36);
        g.check(format!("λ={n}: 9 points where E meets a tangent with multiplicity 3 (found {})", triple.len()), triple.len() == 9 && tangency.len() == 9);
        g.check(format!("λ={n}: no node on E"), nodes_on_e == 0);
        if !p.is_equianharmonic() {
            let a = w0_singularity_audit(&p).unwrap();
            g.check(format!("λ={n}: library audit agrees"), a.node_count == nodes_at_meets && a.meets_on_e == 0);
        }
    }
    g.finish(6, "W0 audit", start, Duration::from_secs(120))
}

fn criterion_07_local_model() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    let r = local_model_check().unwrap();
    g.check("∂/∂z1 factorization", r.d1_factored);
    g.check("∂/∂z2 factorization", r.d2_factored);
    g.check("branches on (z2 + 2z1)(z1 − z2)(z1 + 2z2) = 0", r.branches.iter().all(|b| b.on_branch_lines));
    g.check("cubic relation c = k·a³ found", r.k.is_some());
    g.check("flex contact 3", r.contact == Some(3));
    g.check("iterated resultant divisible by c − k·a³", r.iterated_divisible);
    // independent oracle: on z1 = −a, z2 = 2a with b = 1 both partials vanish
    let d = poly("a*(z1*z2 - (z1 + z2)^2) - b*z1*z2*(z1 + z2) + c");
    let at = |s: &MPoly| {
        s.compose(&[(Var::Z1, poly("-a")), (Var::Z2, poly("2*a")), (Var::B, MPoly::one())])
    };
    let c_value = -&at(&d.substitute(Var::C, &e(0)));
    g.check("oracle: branch z = (−a, 2a) is singular", at(&d.differentiate(Var::Z1)).is_zero() && at(&d.differentiate(Var::Z2)).is_zero());
    let k_oracle = c_value.coeff(&hesse_lab::algebra::Monomial::var(Var::A, 3));
    g.check("library k equals oracle", r.k.as_deref() == Some(k_oracle.to_string().as_str()));
    println!("    k computed = {}, stated 5 (reported, not gated)", r.k.as_deref().unwrap_or("none"));
    g.finish(7, "local model", start, Duration::from_secs(10))
}

fn criterion_08_enumerative() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    let p = plucker_profile(18, 36, 72).unwrap();
    // oracle: the closed-form formulas
    let pg = (17 * 16) / 2 - 36 - 72;
    let class = 18 * 17 - 2 * 36 - 3 * 72;
    g.check(format!("p_g = 28 (found {})", p.geometric_genus), p.geometric_genus == 28 && pg == 28);
    g.check(format!("class = 18 (found {})", p.class), p.class == 18 && class == 18);
    let zs = zeuthen_segre_check();
    g.check("18 singular fibres", zs.singular_fibres == 18 && 6 + 4 * (4 - 1) == 18);
    g.check("deg branch curve 18", zs.branch_degree == 18);
    g.finish(8, "enumerative consistency", start, Duration::from_secs(1))
}

fn criterion_09_transversality() -> bool {
    let start = Instant::now();
    let mut g = Gate::new();
    let c = curve_c();
    g.check("C smooth", singular_points(&c).unwrap().is_empty());
    let flexes = brute_orbit(ProjPoint::from_ints(1, -1, 0));
    g.check("C(1, −1, 0) = −1", c.form().eval_y(ProjPoint::from_ints(1, -1, 0).coords()).unwrap() == e(-1));
    g.check("flexpoints off C", flexes.iter().all(|q| !q.lies_on(c.form())));
    for n in [1, 2, -3] {
        let p = lam(n);
        let e_curve = hesse_cubic(&p);
        let x = intersect(&c, &e_curve).unwrap();
        g.check(format!("λ={n}: C ∩ E transversal"), transversal(&c, &e_curve).unwrap().transversal);
        g.check(format!("λ={n}: Bézout total 9 (found {})", x.total()), x.total() == 9);
        let (meets, through) = oracle_meets(&p);
        let nodes: Vec<&ProjPoint> = meets.iter().zip(&through).filter(|(_, ls)| ls.len() == 2).map(|(q, _)| q).collect();
        g.check(format!("λ={n}: 36 nodes (found {})", nodes.len()), nodes.len() == 36);
        g.check(format!("λ={n}: all meeting points off C"), meets.iter().all(|q| !q.lies_on(c.form())));
    }
    let l1 = PlaneCurve::new(poly("y1 + y2")).unwrap();
    let x = intersect(&c, &l1).unwrap();
    let distinct = x.points.len() + x.certificates.iter().map(|(cert, _)| cert.degree()).sum::<usize>();
    g.check(format!("C ∩ L1(0): 3 distinct points (found {distinct})"), distinct == 3 && x.total() == 3);
    g.finish(9, "transversality", start, Duration::from_secs(60))
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Eisenstein {
    let a = rng.gen_range(-4..=4);
    let b = if rng.gen_bool(0.3) { rng.gen_range(-2..=2) } else { 0 };
    Eisenstein::from_ints(a, b)
}

fn random_form(rng: &mut ChaCha8Rng, d: u16) -> MPoly {
    loop {
        let mut f = MPoly::zero();
        for i in 0..=d {
            for j in 0..=d - i {
                if rng.gen_bool(0.6) {
                    let m = hesse_lab::algebra::Monomial::var(Var::Y1, i)
                        .mul(&hesse_lab::algebra::Monomial::var(Var::Y2, j))
                        .mul(&hesse_lab::algebra::Monomial::var(Var::Y3, d - i - j));
                    f.add_term(random_coeff(rng), m);
                }
            }
        }
        if f.homogeneous_degree().ok() == Some(d as u32) {
            return f;
        }
    }
}

fn coprime_pair(rng: &mut ChaCha8Rng, max: u16) -> (MPoly, MPoly) {
    loop {
        let (a, b) = (rng.gen_range(1..=max), rng.gen_range(1..=max));
        let (f, g) = (random_form(rng, a), random_form(rng, b));
        if gcd(&f, &g).is_constant() {
            return (f, g);
        }
    }
}

fn euler_holds(f: &MPoly) -> bool {
    let d = f.homogeneous_degree().unwrap() as i64;
    let lhs = Var::Y.iter().fold(MPoly::zero(), |acc, v| &acc + &(&MPoly::var(*v) * &f.differentiate(*v)));
    lhs == f.scale(&e(d))
}

/// Sylvester determinant of two univariate coefficient lists (low to
/// high), by plain Gaussian elimination.
fn sylvester(p: &[Eisenstein], q: &[Eisenstein]) -> Eisenstein {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let size = m + n;
    let mut a = vec![vec![e(0); size]; size];
    for r in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            a[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in q.iter().rev().enumerate() {
            a[n + r][r + k] = c.clone();
        }
    }
    let mut det = e(1);
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !a[r][col].is_zero()) else { return e(0) };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det = &det * &a[col][col];
        for r in col + 1..size {
            let factor = &a[r][col] / &a[col][col];
            for k in col..size {
                let sub = &factor * &a[col][k];
                a[r][k] = &a[r][k] - &sub;
            }
        }
    }
    det
}

fn coeffs_at(f: &MPoly, y1: &Eisenstein, y2: &Eisenstein) -> Vec<Eisenstein> {
    let g = f.substitute(Var::Y1, y1).substitute(Var::Y2, y2);
    (0..=f.degree_in(Var::Y3))
        .map(|k| g.coeff(&hesse_lab::algebra::Monomial::var(Var::Y3, k as u16)))
        .collect()
}

fn criterion_10_properties() -> bool {
    let start = Instant::now();
    let mut gate = Gate::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e55e);
    let mut generated = vec![];

    let mut bezout_ok = 0;
    for _ in 0..20 {
        let (f, g) = coprime_pair(&mut rng, 4);
        let (cf, cg) = (PlaneCurve::new(f.clone()).unwrap(), PlaneCurve::new(g.clone()).unwrap());
        let x = intersect(&cf, &cg).unwrap();
        let on_both = x.points.iter().all(|(p, _)| p.lies_on(&f) && p.lies_on(&g));
        if x.total() == (cf.degree() * cg.degree()) as usize && on_both {
            bezout_ok += 1;
        }
        generated.extend([f, g]);
    }
    gate.check(format!("Bézout on 20 pairs ({bezout_ok} ok)"), bezout_ok == 20);

    let mut res_ok = 0;
    for _ in 0..20 {
        let (f, g) = loop {
            let (f, g) = coprime_pair(&mut rng, 3);
            if Some(f.degree_in(Var::Y3)) == f.total_degree() && Some(g.degree_in(Var::Y3)) == g.total_degree() {
                break (f, g);
            }
        };
        let h = loop {
            let dh = rng.gen_range(1..=2);
            let h = random_form(&mut rng, dh);
            if h.degree_in(Var::Y3) == dh as u32 {
                break h;
            }
        };
        let (df, dg) = (f.degree_in(Var::Y3), g.degree_in(Var::Y3));
        let rfg = resultant(&f, &g, Var::Y3).unwrap();
        let rgf = resultant(&g, &f, Var::Y3).unwrap();
        let sign = if (df * dg) % 2 == 1 { -1 } else { 1 };
        let symmetric = rfg == rgf.scale(&e(sign));
        let multiplicative = resultant(&(&f * &h), &g, Var::Y3).unwrap()
            == &rfg * &resultant(&h, &g, Var::Y3).unwrap();
        // oracle: specialise y1, y2 and compare with a Sylvester determinant
        let (a, b) = (Eisenstein::from_ints(rng.gen_range(-5..=5), 1), e(rng.gen_range(1..=7)));
        let pa = coeffs_at(&f, &a, &b);
        let pb = coeffs_at(&g, &a, &b);
        let specialised = rfg.substitute(Var::Y1, &a).substitute(Var::Y2, &b).constant_term();
        let oracle = if pa.len() == df as usize + 1 && pb.len() == dg as usize + 1 {
            sylvester(&pa, &pb)
        } else {
            specialised.clone()
        };
        if symmetric && multiplicative && specialised == oracle {
            res_ok += 1;
        }
        generated.extend([f, g, h]);
    }
    gate.check(format!("resultant symmetry and multiplicativity on 20 pairs ({res_ok} ok)"), res_ok == 20);

    let mut shear_ok = 0;
    for _ in 0..10 {
        let (f, g) = coprime_pair(&mut rng, 3);
        let (cf, cg) = (PlaneCurve::new(f.clone()).unwrap(), PlaneCurve::new(g.clone()).unwrap());
        let a = intersect(&cf, &cg).unwrap();
        let b = intersect_from(&cf, &cg, rng.gen_range(1..=8)).unwrap();
        let degs = |x: &hesse_lab::curvelab::Intersection| {
            let mut v: Vec<(usize, u32)> = x.certificates.iter().map(|(c, m)| (c.degree(), *m)).collect();
            v.sort();
            v
        };
        if a.points == b.points && degs(&a) == degs(&b) && a.total() == b.total() {
            shear_ok += 1;
        }
        generated.extend([f, g]);
    }
    gate.check(format!("shear invariance on 10 pairs ({shear_ok} ok)"), shear_ok == 10);

    let euler = generated.iter().filter(|f| euler_holds(f)).count();
    gate.check(format!("Euler identity on {} generated forms ({euler} ok)", generated.len()), euler == generated.len());
    gate.finish(10, "property suites", start, Duration::from_secs(60))
}

fn main() {
    let criteria: [fn() -> bool; 10] = [
        criterion_01_orbits,
        criterion_02_hessian_identity,
        criterion_03_polar_pencil,
        criterion_04_flex_arrangement,
        criterion_05_duality,
        criterion_06_w0_audit,
        criterion_07_local_model,
        criterion_08_enumerative,
        criterion_09_transversality,
        criterion_10_properties,
    ];
    let mut failed = vec![];
    for (i, c) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(c) {
            Ok(true) => {}
            Ok(false) => failed.push(i + 1),
            Err(_) => {
                println!("criterion {:>2} FAIL  panicked", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        println!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
