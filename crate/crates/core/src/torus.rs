//! Nonnegativity of `f(z) = b + Σ_j (c_j z_j + c̄_j z̄_j)` on a subtorus.
//!
//! The subtorus comes as a finite union of cosets of an `r`-dimensional torus
//! (see [`TorusDecomposition`]). Three shapes are decided exactly:
//!
//! * `r = 0`: finitely many torsion points, each evaluated exactly;
//! * no relations: the coordinates are independent and `min f = b - 2Σ|c_j|`;
//! * `r = 1`: on each coset `f` is a trigonometric polynomial in one angle,
//!   turned into a real polynomial by `t = tan(φ/2)` and decided by sampling
//!   between the real roots of its norm.
//!
//! Everything else goes to a two-sided search: torsion points on a refining
//! grid look for a negative value, interval branch-and-bound looks for a
//! positive lower bound. If neither succeeds the answer is inconclusive.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::kernel::cyclotomic::euler_phi;
use crate::kernel::interval::FInterval;
use crate::kernel::poly::UniPoly;
use crate::kernel::rational::{rat, to_f64, Rational};
use crate::kernel::resultant::{resultant_bivariate, BiPoly};
use crate::kernel::roots::{isolate_real_roots, refine_real};
use crate::numfield::NumberField;
use crate::relations::{parametrize_torus, RelationLattice, TorusDecomposition};

/// Search limits shared by the torus stages and the decider.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub precision_bits: u32,
    pub masser_cap: u32,
    pub bnb_depth: u32,
    pub torsion_denominator_max: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { precision_bits: 128, masser_cap: 20, bnb_depth: 24, torsion_denominator_max: 64 }
    }
}

/// Branch-and-bound gives up when a level holds more boxes than this.
pub const MAX_BOXES: usize = 1 << 18;
/// Total torsion points examined by the search stage.
pub const MAX_TORSION_POINTS: u64 = 2_000_000;
/// Denominators tried when rounding a known negative point to a torsion point.
const WITNESS_DENOMINATOR_MIN: u64 = 256;
/// Witness candidates needing a larger field are not evaluated exactly.
const WITNESS_MAX_FIELD_DEGREE: u64 = 64;

#[derive(Clone, Debug)]
pub struct TorusProblem {
    pub b: AlgebraicNumber,
    pub cs: Vec<AlgebraicNumber>,
    pub torus: TorusDecomposition,
}

impl TorusProblem {
    pub fn new(b: AlgebraicNumber, cs: Vec<AlgebraicNumber>, torus: TorusDecomposition) -> Result<Self> {
        if !b.is_real() {
            return Err(Error::invalid("constant term must be real"));
        }
        if cs.len() != torus.dim {
            return Err(Error::invalid(format!("{} coefficients for a torus in dimension {}", cs.len(), torus.dim)));
        }
        Ok(TorusProblem { b, cs, torus })
    }

    /// The problem on the whole of `T^s`.
    pub fn full(b: AlgebraicNumber, cs: Vec<AlgebraicNumber>) -> Result<Self> {
        let torus = parametrize_torus(&RelationLattice::trivial(cs.len()))?;
        Self::new(b, cs, torus)
    }

    /// On the subtorus cut out by the given relations.
    pub fn with_relations(b: AlgebraicNumber, cs: Vec<AlgebraicNumber>, relations: &[Vec<i64>]) -> Result<Self> {
        let l = RelationLattice::from_vectors(cs.len(), relations, crate::relations::Completeness::Exhaustive)?;
        Self::new(b, cs, parametrize_torus(&l)?)
    }

    /// Floating-point value at angles given in turns.
    pub fn value_f64(&self, angles: &[f64]) -> f64 {
        let (b, _) = self.b.to_f64_pair();
        let mut acc = b;
        for (c, a) in self.cs.iter().zip(angles) {
            let (re, im) = c.to_f64_pair();
            let x = std::f64::consts::TAU * a;
            acc += 2.0 * (re * x.cos() - im * x.sin());
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusOutcome {
    Nonneg,
    NegWitness,
    Inconclusive,
}

impl fmt::Display for TorusOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorusOutcome::Nonneg => "NONNEG",
            TorusOutcome::NegWitness => "NEG_WITNESS",
            TorusOutcome::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Which part of the cascade produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Finite,
    FullTorus,
    OneParameter,
    Search,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Finite => "FINITE",
            Stage::FullTorus => "FULL_TORUS",
            Stage::OneParameter => "ONE_PARAMETER",
            Stage::Search => "SEARCH",
        })
    }
}

/// A torsion point of the subtorus (angles in turns) with its exact value.
#[derive(Clone, Debug)]
pub struct Witness {
    pub angles: Vec<Rational>,
    pub value: AlgebraicNumber,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub torsion_points: u64,
    pub boxes: u64,
    pub max_denominator: u64,
    pub depth: u32,
}

#[derive(Clone, Debug)]
pub struct TorusVerdict {
    pub outcome: TorusOutcome,
    pub stage: Stage,
    /// Present for most negative verdicts; a negative value found exactly by
    /// the one-parameter stage may lack a torsion point within budget.
    pub witness: Option<Witness>,
    /// The exact minimum, when the stage computes it.
    pub minimum: Option<AlgebraicNumber>,
    /// Certified lower and upper bounds on the minimum, when known.
    pub bounds: Option<(f64, f64)>,
    pub report: SearchReport,
}

impl TorusVerdict {
    fn new(outcome: TorusOutcome, stage: Stage) -> Self {
        TorusVerdict { outcome, stage, witness: None, minimum: None, bounds: None, report: SearchReport::default() }
    }
}

/// `b - 2 Σ |c_j|`, the minimum over the full torus.
pub fn min_full_torus(b: &AlgebraicNumber, cs: &[AlgebraicNumber]) -> Result<AlgebraicNumber> {
    let mut total = AlgebraicNumber::zero();
    for c in cs {
        if !c.is_zero() {
            total = total.add(&c.abs()?)?;
        }
    }
    b.sub(&total.scale(&rat(2))?)
}

fn denominator_lcm(angles: &[Rational]) -> Result<u64> {
    let mut d = BigInt::one();
    for a in angles {
        d = d.lcm(a.denom());
    }
    d.to_u64().ok_or_else(|| Error::limit("torsion order too large"))
}

fn residue(a: &Rational, d: u64) -> u64 {
    let x = (a - a.floor()) * Rational::from_integer(BigInt::from(d));
    x.to_integer().to_u64().unwrap_or(0) % d
}

/// A field containing `ζ_d`, `b`, the `c_j` and their conjugates, and `i`
/// when asked. Returns the image of `ζ_d` and the images of `[i], b, c, c̄`.
/// Gaussian-rational coefficients (the common case) live in a cyclotomic
/// field, which needs no primitive-element search.
fn torsion_field(p: &TorusProblem, d: u64, with_i: bool) -> Result<(NumberField, UniPoly, Vec<UniPoly>)> {
    let mut elems = if with_i { vec![AlgebraicNumber::i()] } else { Vec::new() };
    elems.push(p.b.clone());
    elems.extend(p.cs.iter().cloned());
    elems.extend(p.cs.iter().map(AlgebraicNumber::conj));
    let parts: Option<Vec<(Rational, Rational)>> = elems.iter().map(AlgebraicNumber::as_gaussian).collect();
    if let Some(parts) = parts {
        let needs_i = with_i || parts.iter().any(|(_, im)| !im.is_zero());
        let mut k = NumberField::cyclotomic(if needs_i { d.lcm(&4) } else { d })?;
        let hz = k.root_of_unity_image(&Rational::new(BigInt::one(), BigInt::from(d))).expect("d divides the order");
        let img = elems.iter().map(|e| k.adjoin(e)).collect::<Result<Vec<_>>>()?;
        return Ok((k, hz, img));
    }
    let zeta = AlgebraicNumber::root_of_unity(&Rational::new(BigInt::one(), BigInt::from(d)))?;
    let mut all = vec![zeta];
    all.extend(elems);
    let (k, mut img) = NumberField::with_elements(&all)?;
    let hz = img.remove(0);
    Ok((k, hz, img))
}

/// Exact value of `f` at `(e^{2πi q_1}, ..., e^{2πi q_s})`.
pub fn eval_at_torsion(p: &TorusProblem, point: &[Rational]) -> Result<AlgebraicNumber> {
    if !p.torus.contains_angles(point) {
        return Err(Error::invalid("point does not lie on the subtorus"));
    }
    let d = denominator_lcm(point)?;
    let (k, hz, img) = torsion_field(p, d, false)?;
    let s = p.cs.len();
    let mut acc = img[0].clone();
    for j in 0..s {
        let n = residue(&point[j], d);
        let z = k.pow(&hz, n);
        let zb = k.pow(&hz, (d - n) % d);
        acc = &acc + &(&k.mul(&img[1 + j], &z) + &k.mul(&img[1 + s + j], &zb));
    }
    let v = k.value(&acc)?;
    if !v.is_real() {
        return Err(Error::invalid("value is not real"));
    }
    Ok(v)
}

/// Floating-point enclosures of the coefficients.
struct Approx {
    b: FInterval,
    re: Vec<FInterval>,
    im: Vec<FInterval>,
}

impl Approx {
    fn new(p: &TorusProblem, bits: u32) -> Result<Self> {
        let bits = bits.clamp(60, 256);
        let b = FInterval::from_q(&p.b.enclosure(bits)?.re);
        let mut re = Vec::new();
        let mut im = Vec::new();
        for c in &p.cs {
            let e = c.enclosure(bits)?;
            re.push(FInterval::from_q(&e.re));
            im.push(FInterval::from_q(&e.im));
        }
        Ok(Approx { b, re, im })
    }

    /// Enclosure of `f` over angle intervals (turns).
    fn at(&self, angles: &[FInterval]) -> FInterval {
        let mut acc = self.b;
        let two = FInterval::point(2.0);
        for (j, a) in angles.iter().enumerate() {
            let (c, s) = a.cis_turns();
            acc = acc.add(self.re[j].mul(c).sub(self.im[j].mul(s)).mul(two));
        }
        acc
    }

    fn at_rational(&self, angles: &[Rational]) -> FInterval {
        let a: Vec<FInterval> = angles.iter().map(FInterval::from_rational).collect();
        self.at(&a)
    }

    /// Enclosure over a box of parameters on one coset.
    fn on_box(&self, torus: &TorusDecomposition, coset: usize, t: &[FInterval]) -> FInterval {
        let angles: Vec<FInterval> = (0..torus.dim)
            .map(|j| {
                let mut a = FInterval::from_rational(&torus.cosets[coset][j]);
                for (k, tk) in t.iter().enumerate() {
                    let f = torus.frequencies[j][k];
                    if f != 0 {
                        a = a.add(FInterval::point(f as f64).mul(*tk));
                    }
                }
                a
            })
            .collect();
        self.at(&angles)
    }
}

/// Decide `f ≥ 0` on the subtorus.
pub fn decide_nonneg(p: &TorusProblem, budgets: &Budgets) -> Result<TorusVerdict> {
    let ap = Approx::new(p, budgets.precision_bits)?;
    if p.torus.rank == 0 {
        finite(p, &ap)
    } else if p.torus.relations.is_empty() {
        full_torus(p, &ap, budgets)
    } else if p.torus.rank == 1 {
        one_parameter(p, &ap, budgets)
    } else {
        search_with(p, &ap, budgets)
    }
}

fn finite(p: &TorusProblem, ap: &Approx) -> Result<TorusVerdict> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::INFINITY;
    let mut v = TorusVerdict::new(TorusOutcome::Nonneg, Stage::Finite);
    for o in &p.torus.cosets {
        v.report.torsion_points += 1;
        let e = ap.at_rational(o);
        lo = lo.min(e.lo);
        hi = hi.min(e.hi);
        if e.lo > 0.0 {
            continue;
        }
        let val = eval_at_torsion(p, o)?;
        if val.sign()? < 0 {
            v.outcome = TorusOutcome::NegWitness;
            v.witness = Some(Witness { angles: o.clone(), value: val });
            return Ok(v);
        }
    }
    v.bounds = Some((lo, hi));
    Ok(v)
}

fn full_torus(p: &TorusProblem, ap: &Approx, budgets: &Budgets) -> Result<TorusVerdict> {
    let m = min_full_torus(&p.b, &p.cs)?;
    let mut v = TorusVerdict::new(TorusOutcome::Nonneg, Stage::FullTorus);
    if m.sign()? < 0 {
        v.outcome = TorusOutcome::NegWitness;
        // the minimum sits where every c_j z_j points along the negative axis
        let target: Vec<f64> = p
            .cs
            .iter()
            .map(|c| {
                let (re, im) = c.to_f64_pair();
                0.5 - im.atan2(re) / std::f64::consts::TAU
            })
            .collect();
        v.witness = witness_near(p, ap, 0, &target, budgets, &mut v.report)?;
    }
    v.minimum = Some(m);
    Ok(v)
}

/// Round a parameter point with a negative value to nearby torsion points
/// and return the first one whose exact value is negative. Candidates that
/// pass the interval screen are tried in order of the degree of the field
/// their evaluation needs, which is what the exact evaluation costs.
fn witness_near(
    p: &TorusProblem,
    ap: &Approx,
    coset: usize,
    target: &[f64],
    budgets: &Budgets,
    report: &mut SearchReport,
) -> Result<Option<Witness>> {
    let dmax = budgets.torsion_denominator_max.max(WITNESS_DENOMINATOR_MIN);
    let mut last: Option<Vec<Rational>> = None;
    let mut candidates = Vec::new();
    for d in 1..=dmax {
        let t: Vec<Rational> = target
            .iter()
            .map(|x| Rational::new(BigInt::from((x * d as f64).round() as i64), BigInt::from(d)))
            .collect();
        if last.as_ref() == Some(&t) {
            continue;
        }
        let angles = p.torus.point(coset, &t);
        last = Some(t);
        report.torsion_points += 1;
        if ap.at_rational(&angles).hi >= 0.0 {
            continue;
        }
        let order = denominator_lcm(&angles)?;
        let degree = euler_phi(order.lcm(&4));
        if degree <= WITNESS_MAX_FIELD_DEGREE {
            candidates.push((degree, order, angles));
        }
    }
    candidates.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    for (_, order, angles) in candidates {
        report.max_denominator = report.max_denominator.max(order);
                    match eval_at_torsion(p, &angles) {
            Ok(val) if val.sign()? < 0 => return Ok(Some(Witness { angles, value: val })),
            Ok(_) | Err(Error::ResourceLimit(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Coefficients of `(1 + it)^a (1 - it)^b` as (real, imaginary) pairs.
fn gauss_product(a: usize, b: usize) -> Vec<(BigInt, BigInt)> {
    let mut acc = vec![(BigInt::one(), BigInt::zero())];
    let mut times = |sign: i64| {
        let mut out = vec![(BigInt::zero(), BigInt::zero()); acc.len() + 1];
        for (m, (re, im)) in acc.iter().enumerate() {
            out[m].0 += re;
            out[m].1 += im;
            // (re + i im) * (sign i) = -sign im + i sign re
            out[m + 1].0 -= im * sign;
            out[m + 1].1 += re * sign;
        }
        acc = out;
    };
    for _ in 0..a {
        times(1);
    }
    for _ in 0..b {
        times(-1);
    }
    acc
}

/// Rational points strictly between (and beyond) the real roots of a
/// squarefree polynomial, one per interval of constant sign.
fn sample_points(n: &UniPoly) -> Result<Vec<Rational>> {
    if n.deg() == 0 {
        return Ok(vec![Rational::zero()]);
    }
    let roots = isolate_real_roots(n)?;
    if roots.is_empty() {
        return Ok(vec![Rational::zero()]);
    }
    let mut out = vec![&roots[0].0 - rat(1)];
    for w in roots.windows(2) {
        let (mut alo, mut ahi) = w[0].clone();
        let (mut blo, mut bhi) = w[1].clone();
        loop {
            if ahi < blo {
                out.push((&ahi + &blo) / rat(2));
                break;
            }
            if ahi == blo && !n.eval(&ahi).is_zero() {
                out.push(ahi.clone());
                break;
            }
            (alo, ahi) = refine_real(n, alo.clone(), ahi.clone(), &((&ahi - &alo) / rat(2)));
            (blo, bhi) = refine_real(n, blo.clone(), bhi.clone(), &((&bhi - &blo) / rat(2)));
        }
    }
    out.push(&roots.last().unwrap().1 + rat(1));
    Ok(out)
}

fn one_parameter(p: &TorusProblem, ap: &Approx, budgets: &Budgets) -> Result<TorusVerdict> {
    let torus = &p.torus;
    let s = p.cs.len();
    let freq: Vec<i64> = (0..s).map(|j| torus.frequencies[j][0]).collect();
    let kmax = freq.iter().map(|f| f.unsigned_abs() as usize).max().unwrap_or(0);
    let d = denominator_lcm(&torus.cosets.concat())?;
    let (k, hz, img) = torsion_field(p, d, true)?;
    let (hz, hi, hb) = (&hz, &img[0], &img[1]);
    let gp: Vec<Vec<Vec<(BigInt, BigInt)>>> = (0..=2 * kmax)
        .map(|a| (0..=2 * kmax).map(|b| if a + b == 2 * kmax { gauss_product(a, b) } else { Vec::new() }).collect())
        .collect();
    let mut v = TorusVerdict::new(TorusOutcome::Nonneg, Stage::OneParameter);
    for (ci, o) in torus.cosets.iter().enumerate() {
        // f = Σ_k e[k] w^k + ebar[k] w^-k with w = e^{iφ}; the constant lives in e[0]
        let mut e = vec![UniPoly::zero(); kmax + 1];
        let mut ebar = vec![UniPoly::zero(); kmax + 1];
        e[0] = hb.clone();
        for j in 0..s {
            let n = residue(&o[j], d);
            let dj = k.mul(&img[2 + j], &k.pow(hz, n));
            let dbj = k.mul(&img[2 + s + j], &k.pow(hz, (d - n) % d));
            let f = freq[j];
            let a = f.unsigned_abs() as usize;
            if f == 0 {
                e[0] = &e[0] + &(&dj + &dbj);
            } else if f > 0 {
                e[a] = &e[a] + &dj;
                ebar[a] = &ebar[a] + &dbj;
            } else {
                e[a] = &e[a] + &dbj;
                ebar[a] = &ebar[a] + &dj;
            }
        }
        // φ = π, the point t = ∞ of the half-angle substitution
        let mut at_pi = e[0].clone();
        for a in 1..=kmax {
            let term = &e[a] + &ebar[a];
            at_pi = if a % 2 == 0 { &at_pi + &term } else { &at_pi - &term };
        }
        if k.sign(&at_pi)? < 0 {
            let angles = torus.point(ci, &[Rational::new(BigInt::one(), BigInt::from(2))]);
            let value = eval_at_torsion(p, &angles)?;
            v.outcome = TorusOutcome::NegWitness;
            v.witness = Some(Witness { angles, value });
            return Ok(v);
        }
        // (1 + t^2)^K f = P(t) with coefficients in the field
        let mut pc = vec![UniPoly::zero(); 2 * kmax + 1];
        let mut add_term = |h: &UniPoly, g: &[(BigInt, BigInt)]| {
            if h.is_zero() {
                return;
            }
            let hih = k.mul(h, hi);
            for (m, (re, im)) in g.iter().enumerate() {
                let c = &h.scale(&Rational::from_integer(re.clone())) + &hih.scale(&Rational::from_integer(im.clone()));
                pc[m] = k.reduce(&(&pc[m] + &c));
            }
        };
        add_term(&e[0], &gp[kmax][kmax]);
        for a in 1..=kmax {
            add_term(&e[a], &gp[kmax + a][kmax - a]);
            add_term(&ebar[a], &gp[kmax - a][kmax + a]);
        }
        if pc.iter().all(UniPoly::is_zero) {
            continue;
        }
        // the norm vanishes at every real root of P
        let deg = k.degree();
        let terms: Vec<UniPoly> =
            (0..deg).map(|i| UniPoly::new(pc.iter().map(|c| c.coeff(i)).collect())).collect();
        let norm = resultant_bivariate(&BiPoly::in_y(k.modulus()), &BiPoly::new(terms))?;
        if norm.is_zero() {
            return Err(Error::limit("vanishing norm polynomial"));
        }
        for q in sample_points(&norm.squarefree_part()?)? {
            let mut h = UniPoly::zero();
            let mut qp = Rational::one();
            for c in &pc {
                h = &h + &c.scale(&qp);
                qp *= &q;
            }
            if k.sign(&h)? < 0 {
                v.outcome = TorusOutcome::NegWitness;
                // φ = 2 atan q, in turns
                let t = to_f64(&q).atan() / std::f64::consts::PI;
                v.witness = witness_near(p, ap, ci, &[t], budgets, &mut v.report)?;
                return Ok(v);
            }
        }
    }
    Ok(v)
}

/// The two-sided search stage, usable on any problem.
pub fn search(p: &TorusProblem, budgets: &Budgets) -> Result<TorusVerdict> {
    let ap = Approx::new(p, budgets.precision_bits)?;
    search_with(p, &ap, budgets)
}

fn search_with(p: &TorusProblem, ap: &Approx, budgets: &Budgets) -> Result<TorusVerdict> {
    let torus = &p.torus;
    let r = torus.rank;
    let depth = budgets.bnb_depth;
    let dmax = budgets.torsion_denominator_max.max(1);
    let mut v = TorusVerdict::new(TorusOutcome::Inconclusive, Stage::Search);
    let mut upper = f64::INFINITY;
    let mut settled_lower = f64::INFINITY;
    let unit = vec![FInterval::new(0.0, 1.0); r];
    let mut boxes: Vec<(usize, Vec<FInterval>)> = (0..torus.cosets.len()).map(|c| (c, unit.clone())).collect();
    let mut next_d = 1u64;
    for level in 0..=depth {
        // negativity side: torsion denominators up to a level-dependent bound
        let d_hi = (dmax * u64::from(level + 1)).div_ceil(u64::from(depth + 1));
        while next_d <= d_hi && v.report.torsion_points < MAX_TORSION_POINTS {
            if let Some(w) = sample_denominator(p, ap, next_d, &mut upper, &mut v.report)? {
                v.outcome = TorusOutcome::NegWitness;
                v.witness = Some(w);
                return Ok(v);
            }
            v.report.max_denominator = next_d;
            next_d += 1;
        }
        // positivity side: discard boxes certified positive
        v.report.depth = level;
        let mut open = Vec::new();
        let mut open_lower = f64::INFINITY;
        for (c, bx) in boxes {
            v.report.boxes += 1;
            let e = ap.on_box(torus, c, &bx);
            if e.lo > 0.0 {
                settled_lower = settled_lower.min(e.lo);
            } else {
                open_lower = open_lower.min(e.lo);
                open.push((c, bx));
            }
        }
        if open.is_empty() {
            v.outcome = TorusOutcome::Nonneg;
            v.bounds = Some((settled_lower, upper));
            return Ok(v);
        }
        if level == depth || open.len() * 2 > MAX_BOXES {
            v.bounds = Some((settled_lower.min(open_lower), upper));
            return Ok(v);
        }
        boxes = Vec::with_capacity(open.len() * 2);
        for (c, bx) in open {
            let (i, _) = bx
                .iter()
                .enumerate()
                .fold((0, -1.0), |best, (i, x)| if x.width() > best.1 { (i, x.width()) } else { best });
            let mid = 0.5 * (bx[i].lo + bx[i].hi);
            let mut left = bx.clone();
            left[i].hi = mid;
            let mut right = bx;
            right[i].lo = mid;
            boxes.push((c, left));
            boxes.push((c, right));
        }
    }
    Ok(v)
}

/// Torsion points `coset + F k/d` whose parameter has exact denominator `d`.
fn sample_denominator(
    p: &TorusProblem,
    ap: &Approx,
    d: u64,
    upper: &mut f64,
    report: &mut SearchReport,
) -> Result<Option<Witness>> {
    let torus = &p.torus;
    let r = torus.rank;
    let dd = BigInt::from(d);
    for c in 0..torus.cosets.len() {
        let mut k = vec![0u64; r];
        loop {
            let g = k.iter().fold(d, |g, &x| g.gcd(&x));
            if g == 1 {
                let t: Vec<Rational> = k.iter().map(|&x| Rational::new(BigInt::from(x), dd.clone())).collect();
                let angles = torus.point(c, &t);
                report.torsion_points += 1;
                let e = ap.at_rational(&angles);
                *upper = upper.min(e.hi);
                if e.hi < 0.0 {
                    match eval_at_torsion(p, &angles) {
                        Ok(val) if val.sign()? < 0 => return Ok(Some(Witness { angles, value: val })),
                        Ok(_) | Err(Error::ResourceLimit(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
            // odometer over {0..d-1}^r
            let mut i = 0;
            while i < r {
                k[i] += 1;
                if k[i] < d {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
        }
    }
    Ok(None)
}
