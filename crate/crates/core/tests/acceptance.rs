//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Tolerances are pinned here:
//! * fixture runtime < 5 s each; scaling oracle < 60 s total; kernel checks < 120 s;
//! * trig sampling: 10^5 points, NONNEG must sample ≥ -1e-9;
//! * full-torus infimum within 1e-3 of the closed form;
//! * everything else exact.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use upos::algebraic::AlgebraicNumber;
use upos::decider::{decide_ultimate_positivity, Budgets, Outcome};
use upos::harness::{falsify, gaussian_units, lrs_from_json, reduce_pos_to_lrs, verdict_to_json, PolyInstance};
use upos::kernel::rational::{ratio, to_f64};
use upos::kernel::{cyclotomic, isolate_roots, resultant, Rational, UniPoly};
use upos::lrs::LrsRep;
use upos::relations::{find_relations, scale_lattice, verify_relation, Completeness, RelationConfig, RelationLattice};
use upos::torus::{decide_nonneg, min_full_torus, Stage, TorusOutcome, TorusProblem};

type Check = Result<String, String>;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn lrs(name: &str) -> LrsRep {
    lrs_from_json(&fixture(name)).unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

const UP_FIXTURES: [&str; 2] = ["fibonacci.json", "one_plus_cos.json"];
const NOT_UP_FIXTURES: [&str; 3] = ["constant_minus_one.json", "cos_quarter_turn.json", "one_plus_three_halves_cos.json"];

fn criterion_1() -> Check {
    let b = Budgets::default();
    let mut notes = Vec::new();
    for name in UP_FIXTURES.iter().chain(NOT_UP_FIXTURES.iter()) {
        let u = lrs(name);
        let t = Instant::now();
        let v = decide_ultimate_positivity(&u, &b).map_err(err)?;
        let dt = t.elapsed();
        ensure(dt < Duration::from_secs(5), format!("{name} took {dt:?}"))?;
        let up = UP_FIXTURES.contains(name);
        let want = if up { Outcome::UltimatelyPositive } else { Outcome::NotUltimatelyPositive };
        ensure(v.outcome == want, format!("{name}: {} instead of {}", v.outcome, want))?;
        if up {
            let neg = falsify(&u, 10_000);
            ensure(neg.is_empty(), format!("{name}: negative terms {:?}", &neg[..neg.len().min(5)]))?;
        } else {
            let late = falsify(&u, 100_000).into_iter().filter(|&n| n > 100).count();
            ensure(late >= 3, format!("{name}: only {late} negative terms past 100"))?;
        }
        notes.push(format!("{name} {:.2}s", dt.as_secs_f64()));
    }
    let v = decide_ultimate_positivity(&lrs("cos_quarter_turn.json"), &b).map_err(err)?;
    ensure(v.diagnostics.m == 4, format!("M = {}", v.diagnostics.m))?;
    let bad: Vec<u64> = v.residues.iter().filter(|r| r.outcome == Outcome::NotUltimatelyPositive).map(|r| r.l).collect();
    ensure(bad == vec![2], format!("negative residues {bad:?}"))?;
    let v = decide_ultimate_positivity(&lrs("one_plus_cos.json"), &b).map_err(err)?;
    let r = &v.residues[0];
    ensure(r.stage == Some(Stage::FullTorus), "1 + cos nθ not decided by the full-torus closed form")?;
    ensure(r.minimum.as_ref().is_some_and(AlgebraicNumber::is_zero), "closed-form minimum is not exactly 0")?;
    let v = decide_ultimate_positivity(&lrs("one_plus_three_halves_cos.json"), &b).map_err(err)?;
    let w = v.residues[0].witness.as_ref().ok_or("no torsion witness")?;
    ensure(w.value.sign().map_err(err)? < 0, "witness value is not negative")?;
    Ok(notes.join(", "))
}

fn gaussian(a: i64, b: i64, p: i64) -> AlgebraicNumber {
    AlgebraicNumber::gaussian(ratio(a, p), ratio(b, p))
}

fn criterion_2() -> Check {
    let cfg = RelationConfig::default();
    let l1 = gaussian(-3, 4, 5);
    let l2 = gaussian(-5, 12, 13);
    let ind = find_relations(&[l1.clone(), l2], cfg).map_err(err)?;
    ensure(ind.rank() == 0, format!("independent units gave rank {}", ind.rank()))?;
    let pair = [l1.clone(), l1.conj()];
    let lat = find_relations(&pair, cfg).map_err(err)?;
    ensure(lat.rank() == 1 && lat.contains(&[1, 1]), format!("(λ, λ̄) gave {:?}", lat.basis))?;
    for v in &lat.basis {
        ensure(verify_relation(&pair, v).map_err(err)?, format!("{v:?} fails exact verification"))?;
    }
    let i = find_relations(&[AlgebraicNumber::i()], RelationConfig { masser_cap: 4, ..cfg }).map_err(err)?;
    ensure(i.basis == vec![vec![4]], format!("λ = i gave {:?}", i.basis))?;
    ensure(i.completeness == Completeness::Exhaustive, "λ = i not exhaustive")?;
    Ok("ranks 0, 1, 4Z exhaustive".into())
}

fn det3(m: &[[i128; 3]; 3], n: usize) -> i128 {
    match n {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
    }
}

/// Membership by Cramer's rule on a square minor of the basis.
struct Member {
    basis: Vec<Vec<i64>>,
    cols: Vec<usize>,
    det: i128,
}

impl Member {
    fn new(basis: &[Vec<i64>], s: usize) -> Self {
        let rho = basis.len();
        let subsets: Vec<Vec<usize>> = match (s, rho) {
            (_, 0) => vec![vec![]],
            (_, 1) => (0..s).map(|i| vec![i]).collect(),
            (_, 2) => (0..s).flat_map(|i| (i + 1..s).map(move |j| vec![i, j])).collect(),
            _ => vec![vec![0, 1, 2]],
        };
        for cols in subsets {
            let det = Self::minor_det(basis, &cols, None);
            if det != 0 || rho == 0 {
                return Member { basis: basis.to_vec(), cols, det: if rho == 0 { 1 } else { det } };
            }
        }
        panic!("basis is not independent");
    }

    /// Determinant of the minor, optionally with row `r` replaced by `v`.
    fn minor_det(basis: &[Vec<i64>], cols: &[usize], replace: Option<(usize, &[i64])>) -> i128 {
        let n = cols.len();
        let mut m = [[0i128; 3]; 3];
        for i in 0..n {
            let row: &[i64] = match replace {
                Some((r, v)) if r == i => v,
                _ => &basis[i],
            };
            for (j, &c) in cols.iter().enumerate() {
                m[i][j] = row[c] as i128;
            }
        }
        det3(&m, n)
    }

    fn contains(&self, v: &[i64]) -> bool {
        let rho = self.basis.len();
        if rho == 0 {
            return v.iter().all(|&x| x == 0);
        }
        // x B_P = v_P  =>  x_i = det(B_P with row i := v_P) / det(B_P)
        let mut x = Vec::with_capacity(rho);
        for i in 0..rho {
            let num = Self::minor_det(&self.basis, &self.cols, Some((i, v)));
            if num % self.det != 0 {
                return false;
            }
            x.push(num / self.det);
        }
        (0..v.len()).all(|j| (0..rho).map(|i| x[i] * self.basis[i][j] as i128).sum::<i128>() == v[j] as i128)
    }
}

fn criterion_3() -> Check {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..50 {
        let s = rng.gen_range(1..=3usize);
        let rho = rng.gen_range(1..=s);
        let gens: Vec<Vec<i64>> = (0..rho).map(|_| (0..s).map(|_| rng.gen_range(-10..=10)).collect()).collect();
        let l = RelationLattice::from_vectors(s, &gens, Completeness::Exhaustive).map_err(err)?;
        let m = [2i64, 3, 6][rng.gen_range(0..3)];
        let scaled = scale_lattice(&l, m as u64).map_err(err)?;
        // brute force: points of L in the sup-norm 60 box that lie in M Z^s, divided by M
        let member = Member::new(&l.basis, s);
        let mut pts: Vec<Vec<i64>> = Vec::new();
        let r = 60 / m;
        let mut v = vec![-r; s];
        loop {
            let w: Vec<i64> = v.iter().map(|x| x * m).collect();
            if member.contains(&w) {
                pts.push(v.clone());
            }
            let mut i = 0;
            while i < s {
                v[i] += 1;
                if v[i] <= r {
                    break;
                }
                v[i] = -r;
                i += 1;
            }
            if i == s {
                break;
            }
        }
        let oracle = RelationLattice::from_vectors(s, &pts, Completeness::Exhaustive).map_err(err)?;
        ensure(
            oracle.basis == scaled.basis,
            format!("trial {trial}: L = {:?}, M = {m}: oracle {:?} vs {:?}", l.basis, oracle.basis, scaled.basis),
        )?;
    }
    let dt = t.elapsed();
    ensure(dt < Duration::from_secs(60), format!("took {dt:?}"))?;
    Ok(format!("50 lattices in {:.2}s", dt.as_secs_f64()))
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-8..=8), rng.gen_range(1..=4))
}

fn criterion_4() -> Check {
    let b = Budgets::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut neg, mut nonneg) = (0, 0);
    for trial in 0..100 {
        // g(φ) = b0 + Σ_k a_k cos kφ + b_k sin kφ on z_k = z_1^k
        let kmax = rng.gen_range(2..=4usize);
        let ab: Vec<(Rational, Rational)> = (0..kmax).map(|_| (small_rational(&mut rng), small_rational(&mut rng))).collect();
        let n = 100_000;
        let g0 = |phi: f64| -> f64 {
            ab.iter().enumerate().map(|(k, (a, c))| to_f64(a) * ((k + 1) as f64 * phi).cos() + to_f64(c) * ((k + 1) as f64 * phi).sin()).sum()
        };
        let coarse = (0..4096).map(|i| g0(std::f64::consts::TAU * i as f64 / 4096.0)).fold(f64::INFINITY, f64::min);
        // shift near the minimum so both answers occur
        let shift = Rational::new(BigInt::from((-coarse * 64.0).round() as i64), BigInt::from(64)) + ratio(rng.gen_range(-2..=2), 16);
        let cs: Vec<AlgebraicNumber> = ab.iter().map(|(a, c)| AlgebraicNumber::gaussian(a / ratio(2, 1), -c / ratio(2, 1))).collect();
        let rels: Vec<Vec<i64>> = (2..=kmax)
            .map(|k| {
                let mut v = vec![0i64; kmax];
                v[0] = k as i64;
                v[k - 1] = -1;
                v
            })
            .collect();
        let p = TorusProblem::with_relations(AlgebraicNumber::from_rational(shift.clone()), cs, &rels).map_err(err)?;
        let v = decide_nonneg(&p, &b).map_err(err)?;
        ensure(v.stage == Stage::OneParameter, format!("trial {trial}: stage {}", v.stage))?;
        let b0 = to_f64(&shift);
        let sampled = (0..n).map(|i| b0 + g0(std::f64::consts::TAU * i as f64 / n as f64)).fold(f64::INFINITY, f64::min);
        match v.outcome {
            TorusOutcome::NegWitness => neg += 1,
            TorusOutcome::Nonneg => {
                nonneg += 1;
                ensure(sampled >= -1e-9, format!("trial {trial}: NONNEG but sampled min {sampled}"))?;
            }
            TorusOutcome::Inconclusive => return Err(format!("trial {trial}: inconclusive")),
        }
        if sampled < -1e-9 {
            ensure(v.outcome == TorusOutcome::NegWitness, format!("trial {trial}: sampled {sampled} but {}", v.outcome))?;
        }
    }
    // full torus: the coordinates separate, so the grid infimum is a sum of per-coordinate minima
    for trial in 0..20 {
        let s = rng.gen_range(1..=3usize);
        let cs: Vec<AlgebraicNumber> =
            (0..s).map(|_| AlgebraicNumber::gaussian(small_rational(&mut rng), small_rational(&mut rng))).collect();
        let b0 = small_rational(&mut rng);
        let exact = to_f64_alg(&min_full_torus(&AlgebraicNumber::from_rational(b0.clone()), &cs).map_err(err)?);
        let grid = 10_000;
        let mut inf = to_f64(&b0);
        for c in &cs {
            let (re, im) = c.to_f64_pair();
            inf += (0..grid)
                .map(|k| {
                    let x = std::f64::consts::TAU * k as f64 / grid as f64;
                    2.0 * (re * x.cos() - im * x.sin())
                })
                .fold(f64::INFINITY, f64::min);
        }
        ensure((inf - exact).abs() < 1e-3, format!("full torus trial {trial}: sampled {inf}, closed form {exact}"))?;
    }
    Ok(format!("r = 1: {neg} NEG / {nonneg} NONNEG agree with sampling; 20 full-torus minima within 1e-3"))
}

fn to_f64_alg(a: &AlgebraicNumber) -> f64 {
    a.to_f64_pair().0
}

fn random_quadratic(rng: &mut ChaCha8Rng) -> AlgebraicNumber {
    loop {
        let p = UniPoly::from_ints(&[rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(1..=3)]);
        if p.coeff(0).is_zero() {
            continue;
        }
        if let Ok(roots) = AlgebraicNumber::roots_of(&p) {
            let i = rng.gen_range(0..roots.len());
            return roots[i].clone();
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-6..=6)).collect();
    c.push(rng.gen_range(1..=4));
    UniPoly::from_ints(&c)
}

fn criterion_5() -> Check {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checks = 0;
    let one = AlgebraicNumber::one();
    for _ in 0..150 {
        let (a, b, c) = (random_quadratic(&mut rng), random_quadratic(&mut rng), random_quadratic(&mut rng));
        let ab = a.add(&b).map_err(err)?;
        ensure(ab.equals(&b.add(&a).map_err(err)?), "addition is not commutative")?;
        ensure(ab.add(&c).map_err(err)?.equals(&a.add(&b.add(&c).map_err(err)?).map_err(err)?), "addition is not associative")?;
        checks += 1;
    }
    for _ in 0..150 {
        let (a, b, c) = (random_quadratic(&mut rng), random_quadratic(&mut rng), random_quadratic(&mut rng));
        let lhs = a.mul(&b.add(&c).map_err(err)?).map_err(err)?;
        let rhs = a.mul(&b).map_err(err)?.add(&a.mul(&c).map_err(err)?).map_err(err)?;
        ensure(lhs.equals(&rhs), "multiplication does not distribute")?;
        checks += 1;
    }
    for _ in 0..200 {
        let a = random_quadratic(&mut rng);
        ensure(a.mul(&a.inv().map_err(err)?).map_err(err)?.equals(&one), format!("α·α⁻¹ ≠ 1 for {a}"))?;
        checks += 1;
    }
    for _ in 0..464 {
        let (dp, dq) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (p, q) = (random_poly(&mut rng, dp), random_poly(&mut rng, dq));
        let r = resultant(&p, &q).map_err(err)?;
        let common = p.gcd(&q).deg() > 0;
        ensure(r.is_zero() == common, format!("Res({p}, {q}) = {r} but gcd degree {}", p.gcd(&q).deg()))?;
        checks += 1;
    }
    for n in 1..=36u64 {
        let xn = &UniPoly::monomial(Rational::one(), n as usize) - &UniPoly::one();
        ensure(cyclotomic(n).divides(&xn), format!("Φ_{n} does not divide x^{n} - 1"))?;
        checks += 1;
    }
    let mut counted = 0;
    while counted < 200 {
        let dp = rng.gen_range(1..=6);
        let p = random_poly(&mut rng, dp);
        if !p.is_squarefree() || p.coeff(0).is_zero() && p.deg() == 0 {
            continue;
        }
        let boxes = isolate_roots(&p).map_err(err)?;
        ensure(boxes.len() == p.deg(), format!("{p}: {} boxes", boxes.len()))?;
        counted += 1;
    }
    let dt = t.elapsed();
    ensure(dt < Duration::from_secs(120), format!("took {dt:?}"))?;
    Ok(format!("{checks} identities, 200 isolations in {:.1}s", dt.as_secs_f64()))
}

fn criterion_6() -> Check {
    let us = gaussian_units(3);
    for (u, (a, b, p)) in us.iter().zip([(-3, 4, 5), (-5, 12, 13), (-15, 8, 17)]) {
        ensure(u.p == p as u64 && u.lambda.equals(&gaussian(a, b, p)), format!("unit for p = {} is {}", u.p, u.lambda))?;
    }
    let f = PolyInstance::from_json(&fixture("poly_x_minus_quarter.json")).map_err(err)?;
    let u = reduce_pos_to_lrs(&f).map_err(err)?;
    // y_{n+2} = 2 Re(λ) y_{n+1} - y_n with Re(λ) = (1 - 4)/5
    let re = ratio(-3, 5);
    let mut y = vec![Rational::one(), re.clone()];
    while y.len() < 30 {
        let n = y.len();
        y.push(&re * ratio(2, 1) * &y[n - 1] - &y[n - 2]);
    }
    let terms = u.evaluate_terms(29);
    for n in 0..30 {
        ensure(terms[n] == &y[n] * &y[n] - ratio(1, 4), format!("term {n} differs"))?;
    }
    let v = decide_ultimate_positivity(&u.scale(&ratio(-1, 1)), &Budgets::default()).map_err(err)?;
    ensure(v.outcome == Outcome::NotUltimatelyPositive, format!("decide(-u) = {}", v.outcome))?;
    Ok(format!("order {} LRS, decide(-u) = NOT_UP", u.order()))
}

fn criterion_7() -> Check {
    let b = Budgets::default();
    let mut names: Vec<String> = UP_FIXTURES.iter().chain(NOT_UP_FIXTURES.iter()).map(|s| s.to_string()).collect();
    names.push("generated".into());
    for name in &names {
        let u = if name == "generated" {
            reduce_pos_to_lrs(&PolyInstance::from_json(&fixture("poly_x_minus_quarter.json")).map_err(err)?).map_err(err)?
        } else {
            lrs(name)
        };
        let a = verdict_to_json(&decide_ultimate_positivity(&u, &b).map_err(err)?, false);
        let again = verdict_to_json(&decide_ultimate_positivity(&u, &b).map_err(err)?, false);
        ensure(a == again, format!("{name}: output differs between runs"))?;
        let v = decide_ultimate_positivity(&u, &b).map_err(err)?;
        let w = decide_ultimate_positivity(&u.scale(&ratio(7, 3)), &b).map_err(err)?;
        ensure(v.outcome == w.outcome, format!("{name}: scaling by 7/3 changed {} to {}", v.outcome, w.outcome))?;
    }
    Ok(format!("{} fixtures", names.len()))
}

fn criterion_8() -> Check {
    let b = Budgets::default();
    let half = || AlgebraicNumber::from_rational(ratio(1, 2));
    // two independent units: L = {0}, the closed form decides with minimum exactly 0
    let units: Vec<AlgebraicNumber> = gaussian_units(2).into_iter().map(|u| u.lambda).collect();
    let lat = find_relations(&units, RelationConfig::default()).map_err(err)?;
    ensure(lat.rank() == 0, "units are not independent")?;
    let p = TorusProblem::new(AlgebraicNumber::from_int(2), vec![half(), half()], upos::relations::parametrize_torus(&lat).map_err(err)?)
        .map_err(err)?;
    let v = decide_nonneg(&p, &b).map_err(err)?;
    ensure(v.outcome == TorusOutcome::Nonneg && v.stage == Stage::FullTorus, format!("L = 0 instance: {} via {}", v.outcome, v.stage))?;
    // relation (1, -1) in dimension 2 leaves a circle: decided exactly, never NEG
    let p = TorusProblem::with_relations(AlgebraicNumber::from_int(2), vec![half(), half()], &[vec![1, -1]]).map_err(err)?;
    let v = decide_nonneg(&p, &b).map_err(err)?;
    ensure(v.outcome == TorusOutcome::Nonneg, format!("(1,-1) instance: {}", v.outcome))?;
    // a third coordinate keeps r = 2 and forces the search stage
    let p = TorusProblem::with_relations(AlgebraicNumber::from_int(3), vec![half(), half(), half()], &[vec![1, -1, 0]]).map_err(err)?;
    let v = decide_nonneg(&p, &b).map_err(err)?;
    ensure(v.stage == Stage::Search, format!("r = 2 instance went to {}", v.stage))?;
    ensure(v.outcome == TorusOutcome::Inconclusive, format!("r = 2 instance with minimum 0 returned {}", v.outcome))?;
    let (lo, hi) = v.bounds.ok_or("no bounds")?;
    ensure(lo <= 0.0 && hi >= 0.0, format!("bounds [{lo}, {hi}] exclude the true minimum 0"))?;
    Ok(format!("L=0: NONNEG exact; (1,-1): NONNEG; r=2: INCONCLUSIVE with bounds [{lo:.2e}, {hi:.2e}]"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("fixture verdicts", criterion_1),
        ("lattice correctness", criterion_2),
        ("scaling identity", criterion_3),
        ("torus structured cases", criterion_4),
        ("algebraic kernel", criterion_5),
        ("generator soundness", criterion_6),
        ("determinism and scaling invariance", criterion_7),
        ("honesty", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let dt = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {}: PASS  {name} ({dt:.1}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({dt:.1}s): {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
