//! Exact root isolation.
//!
//! Real roots are isolated by Sturm-sequence bisection. Non-real roots are
//! approximated numerically (Aberth iteration, then Newton in dyadic
//! rationals) and then *certified*: for an approximation `z` of a root of a
//! degree-`n` polynomial, some root lies within `n·|p(z)/p'(z)|` of `z`. When
//! the resulting boxes for the upper half-plane are pairwise disjoint, lie
//! strictly above the real axis and number exactly half the non-real roots,
//! each one contains exactly one root. Numerics only propose; every accepted
//! box is proven with exact rational arithmetic.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::interval::{CInterval, QInterval};
use super::poly::UniPoly;
use super::rational::{decimal, from_f64, rat, round_dyadic, sqrt_lower, sqrt_upper, to_f64, Rational};
use super::sturm::{root_bound, sturm_sequence, variations_at};
use crate::error::{Error, Result};

/// Axis-aligned isolating region with rational corners. Real roots get
/// boxes with `im_lo = im_hi = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootBox {
    pub re_lo: Rational,
    pub re_hi: Rational,
    pub im_lo: Rational,
    pub im_hi: Rational,
}

impl RootBox {
    pub fn real(lo: Rational, hi: Rational) -> Self {
        RootBox { re_lo: lo, re_hi: hi, im_lo: Rational::zero(), im_hi: Rational::zero() }
    }

    pub fn point(re: Rational, im: Rational) -> Self {
        RootBox { re_lo: re.clone(), re_hi: re, im_lo: im.clone(), im_hi: im }
    }

    pub fn square(center_re: &Rational, center_im: &Rational, radius: &Rational) -> Self {
        RootBox {
            re_lo: center_re - radius,
            re_hi: center_re + radius,
            im_lo: center_im - radius,
            im_hi: center_im + radius,
        }
    }

    pub fn is_real(&self) -> bool {
        self.im_lo.is_zero() && self.im_hi.is_zero()
    }

    pub fn width(&self) -> Rational {
        &self.re_hi - &self.re_lo
    }

    pub fn height(&self) -> Rational {
        &self.im_hi - &self.im_lo
    }

    pub fn size(&self) -> Rational {
        self.width().max(self.height())
    }

    pub fn center(&self) -> (Rational, Rational) {
        ((&self.re_lo + &self.re_hi) / rat(2), (&self.im_lo + &self.im_hi) / rat(2))
    }

    pub fn conj(&self) -> Self {
        RootBox {
            re_lo: self.re_lo.clone(),
            re_hi: self.re_hi.clone(),
            im_lo: -&self.im_hi,
            im_hi: -&self.im_lo,
        }
    }

    pub fn neg(&self) -> Self {
        RootBox { re_lo: -&self.re_hi, re_hi: -&self.re_lo, im_lo: -&self.im_hi, im_hi: -&self.im_lo }
    }

    pub fn contains_box(&self, o: &RootBox) -> bool {
        self.re_lo <= o.re_lo && o.re_hi <= self.re_hi && self.im_lo <= o.im_lo && o.im_hi <= self.im_hi
    }

    pub fn contains_point(&self, re: &Rational, im: &Rational) -> bool {
        &self.re_lo <= re && re <= &self.re_hi && &self.im_lo <= im && im <= &self.im_hi
    }

    pub fn intersects(&self, o: &RootBox) -> bool {
        self.re_lo <= o.re_hi && o.re_lo <= self.re_hi && self.im_lo <= o.im_hi && o.im_lo <= self.im_hi
    }

    pub fn to_interval(&self) -> CInterval {
        CInterval::new(
            QInterval::new(self.re_lo.clone(), self.re_hi.clone()),
            QInterval::new(self.im_lo.clone(), self.im_hi.clone()),
        )
    }

    pub fn from_interval(c: &CInterval) -> Self {
        RootBox { re_lo: c.re.lo.clone(), re_hi: c.re.hi.clone(), im_lo: c.im.lo.clone(), im_hi: c.im.hi.clone() }
    }

    /// Short decimal rendering of the box center.
    pub fn approx(&self, digits: usize) -> String {
        let (re, im) = self.center();
        if self.is_real() {
            decimal(&re, digits)
        } else {
            let sign = if im.is_negative() { "-" } else { "+" };
            format!("{}{}{}i", decimal(&re, digits), sign, decimal(&im.abs(), digits))
        }
    }
}

/// Positive rational `r` no larger than `√6 / (d^((d+1)/2) H^(d-1))`: distinct
/// roots of `p` are farther apart than `r`. The value is rounded down to a
/// power of two. Degree below 2 returns 1.
pub fn mignotte_gap(p: &UniPoly) -> Rational {
    let d = p.deg();
    if d < 2 {
        return rat(1);
    }
    let h = Rational::from_integer(p.height());
    let dd = rat(d as i64);
    // d^((d+1)/2): integer power times sqrt(d) when d+1 is odd
    let mut den = num_traits::pow(dd.clone(), (d + 1) / 2);
    if (d + 1) % 2 == 1 {
        den *= sqrt_upper(&dd, 16);
    }
    den *= num_traits::pow(h, d - 1);
    let bound = sqrt_lower(&rat(6), 16) / den;
    let mut r = rat(1);
    while r > bound {
        r /= rat(2);
    }
    r
}

fn check_squarefree(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::invalid("cannot isolate roots of the zero polynomial"));
    }
    if !p.is_squarefree() {
        return Err(Error::invalid(format!("{p} is not squarefree")));
    }
    Ok(p.to_primitive())
}

/// Isolating boxes for all complex roots of a squarefree polynomial: real
/// roots first (ascending), then conjugate pairs (upper member first).
/// Real intervals are only as narrow as isolation needs; complex boxes are
/// narrower than [`mignotte_gap`]. Use [`refine_root`] for more.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<RootBox>> {
    let p = check_squarefree(p)?;
    if p.deg() == 0 {
        return Ok(Vec::new());
    }
    let gap = mignotte_gap(&p);
    let mut out: Vec<RootBox> = isolate_real_roots_sqf(&p).into_iter().map(|(lo, hi)| RootBox::real(lo, hi)).collect();
    let n_complex = p.deg() - out.len();
    if n_complex > 0 {
        for b in isolate_upper_roots(&p, n_complex / 2, &gap)? {
            let c = b.conj();
            out.push(b);
            out.push(c);
        }
    }
    Ok(out)
}

/// Isolating intervals `(lo, hi)` for the real roots, ascending. An exact
/// rational root is returned as a degenerate interval `lo == hi`.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<(Rational, Rational)>> {
    let p = check_squarefree(p)?;
    Ok(isolate_real_roots_sqf(&p))
}

fn isolate_real_roots_sqf(p: &UniPoly) -> Vec<(Rational, Rational)> {
    if p.deg() == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let gap = mignotte_gap(p);
    let mut found = Vec::new();
    let lo = -b.clone();
    let (vlo, vhi) = (variations_at(&seq, &lo), variations_at(&seq, &b));
    let mut stack = vec![(lo, b, vlo, vhi)];
    while let Some((a, c, va, vc)) = stack.pop() {
        let count = va - vc;
        if count == 0 {
            continue;
        }
        if count == 1 {
            found.push((a, c));
            continue;
        }
        let m = (&a + &c) / rat(2);
        if p.eval(&m).is_zero() {
            found.push((m.clone(), m.clone()));
            let delta = &gap / rat(2);
            let left = &m - &delta;
            let right = &m + &delta;
            if a < left {
                let vl = variations_at(&seq, &left);
                stack.push((a, left, va, vl));
            }
            if right < c {
                let vr = variations_at(&seq, &right);
                stack.push((right, c, vr, vc));
            }
        } else {
            let vm = variations_at(&seq, &m);
            stack.push((a, m.clone(), va, vm));
            stack.push((m, c, vm, vc));
        }
    }
    found.sort();
    found
}

/// Shrink an isolating interval of a simple real root until narrower than
/// `target`. Degenerate intervals are exact roots and are returned as is.
///
/// Quadratic interval refinement: a secant step picks one of `N` equal
/// subintervals; on success `N` is squared, otherwise one bisection is done
/// and `N` shrinks. Convergence is quadratic once the root is well isolated.
pub fn refine_real(p: &UniPoly, mut lo: Rational, mut hi: Rational, target: &Rational) -> (Rational, Rational) {
    if lo == hi {
        return (lo, hi);
    }
    let mut flo = p.eval(&lo);
    let mut fhi = p.eval(&hi);
    if flo.is_zero() {
        return (lo.clone(), lo);
    }
    if fhi.is_zero() {
        return (hi.clone(), hi);
    }
    let mut n = BigInt::from(4);
    while &(&hi - &lo) >= target {
        let w = &hi - &lo;
        // secant estimate, snapped to the grid of n cells
        let t = &flo / (&flo - &fhi);
        let j = (t * Rational::from_integer(n.clone())).floor().to_integer();
        let j = j.max(BigInt::zero()).min(&n - 1);
        let step = &w / Rational::from_integer(n.clone());
        let a = &lo + &step * Rational::from_integer(j.clone());
        let b = &a + &step;
        let fa = if j.is_zero() { flo.clone() } else { p.eval(&a) };
        let fb = if j == &n - 1 { fhi.clone() } else { p.eval(&b) };
        if fa.is_zero() {
            return (a.clone(), a);
        }
        if fb.is_zero() {
            return (b.clone(), b);
        }
        if fa.signum() != fb.signum() {
            lo = a;
            hi = b;
            flo = fa;
            fhi = fb;
            n = &n * &n;
            continue;
        }
        let m = (&lo + &hi) / rat(2);
        let v = p.eval(&m);
        if v.is_zero() {
            return (m.clone(), m);
        }
        if v.signum() == flo.signum() {
            lo = m;
            flo = v;
        } else {
            hi = m;
            fhi = v;
        }
        n = n.sqrt().max(BigInt::from(4));
    }
    (lo, hi)
}

/// Shrink an isolating box of `p` until its larger side is below `target`.
pub fn refine_root(p: &UniPoly, b: &RootBox, target: &Rational) -> Result<RootBox> {
    if &b.size() < target {
        return Ok(b.clone());
    }
    if b.is_real() {
        let p = p.to_primitive();
        let (lo, hi) = refine_real(&p, b.re_lo.clone(), b.re_hi.clone(), target);
        return Ok(RootBox::real(lo, hi));
    }
    refine_complex(&p.to_primitive(), b, target)
}

// ---------------------------------------------------------------------------
// Complex roots.

#[derive(Clone, Debug, PartialEq)]
struct Cq {
    re: Rational,
    im: Rational,
}

impl Cq {
    fn new(re: Rational, im: Rational) -> Self {
        Cq { re, im }
    }
    fn from_c64(z: Complex64) -> Self {
        Cq { re: from_f64(z.re), im: from_f64(z.im) }
    }
    fn add(&self, o: &Cq) -> Cq {
        Cq::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Cq) -> Cq {
        Cq::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Cq) -> Cq {
        Cq::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    fn abs2(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
    fn div(&self, o: &Cq) -> Option<Cq> {
        let d = o.abs2();
        if d.is_zero() {
            return None;
        }
        let n = self.mul(&Cq::new(o.re.clone(), -&o.im));
        Some(Cq::new(n.re / &d, n.im / d))
    }
    fn round(&self, bits: u32) -> Cq {
        Cq::new(round_dyadic(&self.re, bits), round_dyadic(&self.im, bits))
    }
}

fn eval_cq(p: &UniPoly, z: &Cq) -> Cq {
    if let (Some((a, ka)), Some((b, kb)), true) = (dyadic_parts(&z.re), dyadic_parts(&z.im), p.is_integral()) {
        let k = ka.max(kb);
        let (a, b) = (a << (k - ka), b << (k - kb));
        let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer().clone()).collect();
        let (re, im) = eval_dyadic(&ints, &a, &b, k);
        let shift = k * p.deg();
        return Cq::new(dyadic(re, shift), dyadic(im, shift));
    }
    let mut acc = Cq::new(Rational::zero(), Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re += c;
    }
    acc
}

/// `(m, k)` with `q = m / 2^k`, if the denominator is a power of two.
fn dyadic_parts(q: &Rational) -> Option<(BigInt, usize)> {
    let d = q.denom();
    let k = d.trailing_zeros().unwrap_or(0);
    (d >> k as usize).is_one().then(|| (q.numer().clone(), k as usize))
}

/// `m / 2^k` in lowest terms without a gcd.
fn dyadic(m: BigInt, k: usize) -> Rational {
    if m.is_zero() {
        return Rational::zero();
    }
    let t = (m.trailing_zeros().unwrap_or(0) as usize).min(k);
    Rational::new_raw(m >> t, BigInt::one() << (k - t))
}

/// `2^(k·deg) p((a + ib) / 2^k)` for integer coefficients, as (re, im).
fn eval_dyadic(p: &[BigInt], a: &BigInt, b: &BigInt, k: usize) -> (BigInt, BigInt) {
    let d = p.len().saturating_sub(1);
    let mut re = p.last().cloned().unwrap_or_default();
    let mut im = BigInt::zero();
    for j in (0..d).rev() {
        let r2 = &re * a - &im * b;
        im = &re * b + &im * a;
        re = r2 + (&p[j] << (k * (d - j)));
    }
    (re, im)
}

/// Newton's method in integer arithmetic on a grid of `2^-(bits+8)`, `p` integral.
fn newton_dyadic(p: &UniPoly, dp: &UniPoly, z: &Cq, bits: u32) -> Cq {
    let k = bits as usize + 8;
    let scale = |q: &Rational| (q * Rational::from_integer(BigInt::one() << k)).round().to_integer();
    let (mut a, mut b) = (scale(&z.re), scale(&z.im));
    let pi: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer().clone()).collect();
    let di: Vec<BigInt> = dp.coeffs().iter().map(|c| c.numer().clone()).collect();
    // stop once |step| < 2^-bits, which is 2^8 grid units
    let tol = BigInt::one() << 16usize;
    for _ in 0..200 {
        let (pr, pim) = eval_dyadic(&pi, &a, &b, k);
        let (qr, qim) = eval_dyadic(&di, &a, &b, k);
        let den = &qr * &qr + &qim * &qim;
        if den.is_zero() {
            break;
        }
        // step = P / (Q 2^k) in real units, P conj(Q) / |Q|^2 in grid units
        let sr = (&pr * &qr + &pim * &qim).div_floor(&den);
        let si = (&pim * &qr - &pr * &qim).div_floor(&den);
        a -= &sr;
        b -= &si;
        if &sr * &sr + &si * &si < tol {
            break;
        }
    }
    Cq::new(dyadic(a, k), dyadic(b, k))
}

fn newton(p: &UniPoly, dp: &UniPoly, mut z: Cq, bits: u32) -> Cq {
    if p.is_integral() {
        return newton_dyadic(p, dp, &z, bits);
    }
    let eps = Rational::one() / Rational::from_integer(super::rational::pow2(2 * bits));
    for _ in 0..200 {
        let Some(step) = eval_cq(p, &z).div(&eval_cq(dp, &z)) else {
            return z;
        };
        z = z.sub(&step).round(bits + 8);
        if step.abs2() < eps {
            break;
        }
    }
    z
}

/// Radius of a disc around `z` guaranteed to contain a root of `p`.
fn inclusion_radius(p: &UniPoly, dp: &UniPoly, z: &Cq, bits: u32) -> Option<Rational> {
    let pv = eval_cq(p, z).abs2();
    if pv.is_zero() {
        return Some(Rational::zero());
    }
    let dv = eval_cq(dp, z).abs2();
    if dv.is_zero() {
        return None;
    }
    let n = rat(p.deg() as i64);
    let r2 = &n * &n * pv / dv;
    Some(sqrt_upper(&r2, bits + 8))
}

fn to_f64_poly(p: &UniPoly) -> Vec<f64> {
    let max_bits = p.coeffs().iter().map(|c| c.numer().bits() as i64 - c.denom().bits() as i64).max().unwrap_or(0);
    let shift = (max_bits - 900).max(0);
    let scale = Rational::from_integer(super::rational::pow2(shift as u32));
    p.coeffs().iter().map(|c| to_f64(&(c / &scale))).collect()
}

fn horner_c64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

/// Aberth–Ehrlich simultaneous iteration in double precision.
fn aberth_f64(p: &UniPoly) -> Vec<Complex64> {
    let c = to_f64_poly(p);
    let n = c.len() - 1;
    let lead = c[n].abs();
    let r0 = if c[0] != 0.0 && lead != 0.0 {
        (c[0].abs() / lead).powf(1.0 / n as f64).clamp(1e-3, 1e6)
    } else {
        1.0
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..800 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = horner_c64(&c, z[i]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / d;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += Complex64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.re.is_finite() && w.im.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Aberth iteration in dyadic rationals, seeded from `start`.
fn aberth_exact(p: &UniPoly, start: &[Cq], bits: u32) -> Vec<Cq> {
    let dp = p.derivative();
    let mut z = start.to_vec();
    let n = z.len();
    let eps = Rational::one() / Rational::from_integer(super::rational::pow2(2 * bits));
    let one = Cq::new(rat(1), Rational::zero());
    for _ in 0..400 {
        let mut worst = Rational::zero();
        for i in 0..n {
            let v = eval_cq(p, &z[i]);
            if v.abs2().is_zero() {
                continue;
            }
            let Some(ratio) = v.div(&eval_cq(&dp, &z[i])) else { continue };
            let mut s = Cq::new(Rational::zero(), Rational::zero());
            for j in 0..n {
                if j != i {
                    if let Some(t) = one.div(&z[i].sub(&z[j])) {
                        s = s.add(&t);
                    }
                }
            }
            let Some(w) = ratio.div(&one.sub(&ratio.mul(&s))) else { continue };
            z[i] = z[i].sub(&w).round(bits + 8);
            let m = w.abs2();
            if m > worst {
                worst = m;
            }
        }
        if worst < eps {
            break;
        }
    }
    z
}

struct UpperCert {
    centers: Vec<Cq>,
    boxes: Vec<RootBox>,
}

fn certify_upper(p: &UniPoly, dp: &UniPoly, cands: &[Cq], want: usize, bits: u32) -> Option<UpperCert> {
    let mut ups: Vec<Cq> = cands.iter().filter(|z| z.im.is_positive()).cloned().collect();
    ups.sort_by(|a, b| b.im.cmp(&a.im));
    if ups.len() < want {
        return None;
    }
    ups.truncate(want);
    let mut centers = Vec::with_capacity(want);
    let mut boxes: Vec<RootBox> = Vec::with_capacity(want);
    for z in ups {
        let z = newton(p, dp, z, bits);
        let r = inclusion_radius(p, dp, &z, bits)?;
        let b = RootBox::square(&z.re, &z.im, &r);
        if !b.im_lo.is_positive() || boxes.iter().any(|o| o.intersects(&b)) {
            return None;
        }
        centers.push(z);
        boxes.push(b);
    }
    Some(UpperCert { centers, boxes })
}

fn isolate_upper_roots(p: &UniPoly, want: usize, gap: &Rational) -> Result<Vec<RootBox>> {
    let dp = p.derivative();
    let approx: Vec<Cq> = aberth_f64(p).into_iter().map(Cq::from_c64).collect();
    let mut cert = None;
    for bits in [64u32, 128, 256] {
        if let Some(c) = certify_upper(p, &dp, &approx, want, bits) {
            cert = Some(c);
            break;
        }
    }
    if cert.is_none() {
        let mut seeds = approx.clone();
        for bits in [96u32, 192, 384, 768, 1536] {
            seeds = aberth_exact(p, &seeds, bits);
            if let Some(c) = certify_upper(p, &dp, &seeds, want, bits) {
                cert = Some(c);
                break;
            }
        }
    }
    let cert = cert.ok_or_else(|| Error::limit(format!("could not certify complex roots of {p}")))?;
    let mut out = Vec::with_capacity(want);
    for (z, b) in cert.centers.iter().zip(cert.boxes) {
        let refined = if b.size() < *gap { b } else { shrink_complex(p, &dp, z, &b, gap)? };
        out.push(refined);
    }
    out.sort_by(|a, b| {
        let (ar, ai) = a.center();
        let (br, bi) = b.center();
        ar.cmp(&br).then(ai.cmp(&bi))
    });
    Ok(out)
}

/// Newton from `start` until the certified box fits inside `outer` and is
/// narrower than `target`.
fn shrink_complex(p: &UniPoly, dp: &UniPoly, start: &Cq, outer: &RootBox, target: &Rational) -> Result<RootBox> {
    let need = bits_for(target);
    let mut bits = need.max(64);
    for _ in 0..8 {
        let z = newton(p, dp, start.clone(), bits);
        if let Some(r) = inclusion_radius(p, dp, &z, bits) {
            let b = RootBox::square(&z.re, &z.im, &r);
            if outer.contains_box(&b) && &b.size() < target {
                return Ok(b);
            }
        }
        bits *= 2;
    }
    Err(Error::limit(format!("complex root refinement stalled for {p}")))
}

fn bits_for(target: &Rational) -> u32 {
    // smallest b with 2^-b well below target
    let t = target.abs();
    if t.is_zero() {
        return 64;
    }
    let nb = t.numer().bits() as i64;
    let db = t.denom().bits() as i64;
    ((db - nb + 8).max(8)) as u32
}

fn refine_complex(p: &UniPoly, b: &RootBox, target: &Rational) -> Result<RootBox> {
    let dp = p.derivative();
    let (cr, ci) = b.center();
    let center = Cq::new(cr, ci);
    if let Ok(r) = shrink_complex(p, &dp, &center, b, target) {
        return Ok(r);
    }
    // Newton left the box from its center: restart from points spread over it.
    let w = b.width() / rat(4);
    let h = b.height() / rat(4);
    for (dx, dy) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
        let s = Cq::new(&center.re + &w * rat(dx), &center.im + &h * rat(dy));
        if let Ok(r) = shrink_complex(p, &dp, &s, b, target) {
            return Ok(r);
        }
    }
    Err(Error::limit(format!("complex root refinement stalled for {p}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::ratio;
    use crate::kernel::sturm::sturm_count;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn contains(b: &RootBox, re: f64, im: f64) -> bool {
        to_f64(&b.re_lo) - 1e-12 <= re
            && re <= to_f64(&b.re_hi) + 1e-12
            && to_f64(&b.im_lo) - 1e-12 <= im
            && im <= to_f64(&b.im_hi) + 1e-12
    }

    #[test]
    fn sqrt_two_boxes() {
        let q = p(&[-2, 0, 1]);
        let boxes = isolate_roots(&q).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().all(RootBox::is_real));
        // sign-change oracle: each interval brackets a root
        for b in &boxes {
            assert!(q.eval(&b.re_lo).signum() != q.eval(&b.re_hi).signum());
            let r = refine_root(&q, b, &mignotte_gap(&q)).unwrap();
            assert!(r.width() < mignotte_gap(&q));
            assert!(q.eval(&r.re_lo).signum() != q.eval(&r.re_hi).signum());
        }
        assert!(contains(&boxes[0], -std::f64::consts::SQRT_2, 0.0));
        assert!(contains(&boxes[1], std::f64::consts::SQRT_2, 0.0));
    }

    #[test]
    fn refinement_reaches_high_precision() {
        // x^5 - 3x + 1 has three real roots; push each one to 2^-2000
        let q = p(&[1, -3, 0, 0, 0, 1]);
        let target = Rational::new(BigInt::one(), BigInt::one() << 2000usize);
        for (lo, hi) in isolate_real_roots(&q).unwrap() {
            let (a, b) = refine_real(&q, lo, hi, &target);
            assert!(&b - &a < target);
            assert!(a == b || q.eval(&a).signum() != q.eval(&b).signum());
        }
    }

    #[test]
    fn integer_newton_matches_roots_of_unity() {
        let q = p(&[1, 1, 1, 1, 1]);
        let z = newton(&q, &q.derivative(), Cq::new(ratio(3, 10), ratio(9, 10)), 300);
        let e = crate::kernel::interval::cis_turns(&ratio(1, 5), 280);
        assert!(e.re.lo <= z.re && z.re <= e.re.hi && e.im.lo <= z.im && z.im <= e.im.hi);
    }

    #[test]
    fn imaginary_unit_boxes() {
        let boxes = isolate_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(contains(&boxes[0], 0.0, 1.0));
        assert!(contains(&boxes[1], 0.0, -1.0));
        assert!(boxes.iter().all(|b| !b.is_real()));
    }

    #[test]
    fn mixed_roots() {
        // (x-1)(x^2+1)
        let boxes = isolate_roots(&p(&[-1, 1, -1, 1])).unwrap();
        assert_eq!(boxes.len(), 3);
        assert!(contains(&boxes[0], 1.0, 0.0));
        assert!(contains(&boxes[1], 0.0, 1.0) && contains(&boxes[2], 0.0, -1.0));
    }

    #[test]
    fn rational_root_found_exactly_at_midpoint() {
        // roots 0, 1, -1: the first bisection point is an exact root
        let boxes = isolate_roots(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(boxes.len(), 3);
        assert!(boxes.iter().any(|b| b.re_lo.is_zero() && b.re_hi.is_zero()));
    }

    #[test]
    fn rejects_repeated_roots() {
        assert!(isolate_roots(&p(&[1, -2, 1])).is_err());
    }

    #[test]
    fn mignotte_examples() {
        let g = mignotte_gap(&p(&[-2, 0, 1]));
        assert!(g > Rational::zero() && g <= ratio(433, 1000));
        let g1 = mignotte_gap(&p(&[1, 0, 1]));
        assert!(g1 <= ratio(866, 1000) && g1 >= ratio(1, 2));
        // oracle: the closed-form bound in floating point
        let f = |d: f64, h: f64| 6f64.sqrt() / (d.powf((d + 1.0) / 2.0) * h.powf(d - 1.0));
        for c in [&[-2i64, 0, 1][..], &[1, 0, 1], &[3, -7, 0, 2], &[1, 1, 1, 1, 5]] {
            let q = p(c);
            let g = to_f64(&mignotte_gap(&q));
            let exact = f(q.deg() as f64, to_f64(&Rational::from_integer(q.height())));
            assert!(g <= exact && g > exact / 2.0);
        }
        assert_eq!(mignotte_gap(&p(&[3, 1])), rat(1));
    }

    #[test]
    fn refinement_shrinks() {
        let q = p(&[1, 1, 1]);
        let boxes = isolate_roots(&q).unwrap();
        let t = ratio(1, 1 << 40);
        let r = refine_root(&q, &boxes[0], &t).unwrap();
        assert!(r.size() < t && boxes[0].contains_box(&r));
        let s = p(&[-5, 0, 1]);
        let rb = isolate_roots(&s).unwrap();
        let rr = refine_root(&s, &rb[1], &t).unwrap();
        assert!(rr.size() < t);
        assert_eq!(sturm_count(&s, &rr.re_lo, &rr.re_hi).unwrap(), 1);
    }

    #[test]
    fn high_degree_cyclotomic() {
        let q = crate::kernel::cyclotomic::cyclotomic(35);
        let boxes = isolate_roots(&q).unwrap();
        assert_eq!(boxes.len(), 24);
        for (i, a) in boxes.iter().enumerate() {
            for b in &boxes[i + 1..] {
                assert!(!a.intersects(b));
            }
        }
    }
}
