//! Outward-rounded interval arithmetic.
//!
//! [`QInterval`] and [`CInterval`] carry rational endpoints and are rounded to
//! a caller-chosen dyadic precision; they back root selection for algebraic
//! numbers and arbitrary-precision arguments. [`FInterval`] uses `f64`
//! endpoints widened by one ulp after every operation and is used where many
//! cheap enclosures are needed (branch and bound, sampling).

use std::f64::consts::PI;

use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::rational::{ceil_dyadic, floor_dyadic, rat, ratio, sqrt_lower, sqrt_upper, to_f64, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl QInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        QInterval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        QInterval { lo: q.clone(), hi: q }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn intersects(&self, o: &QInterval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn hull(&self, o: &QInterval) -> QInterval {
        QInterval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }

    pub fn round_out(&self, bits: u32) -> QInterval {
        QInterval { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }

    pub fn add(&self, o: &QInterval) -> QInterval {
        QInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &QInterval) -> QInterval {
        QInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> QInterval {
        QInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &QInterval) -> QInterval {
        if self.lo == self.hi && o.lo == o.hi {
            return Self::point(&self.lo * &o.lo);
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        QInterval { lo, hi }
    }

    pub fn scale(&self, q: &Rational) -> QInterval {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            QInterval { lo: a, hi: b }
        } else {
            QInterval { lo: b, hi: a }
        }
    }

    pub fn square(&self) -> QInterval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            QInterval { lo: Rational::zero(), hi: a.max(b) }
        } else {
            QInterval { lo: a.clone().min(b.clone()), hi: a.max(b) }
        }
    }

    pub fn recip(&self) -> Result<QInterval> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn sqrt(&self, bits: u32) -> QInterval {
        let lo = if self.lo.is_positive() { sqrt_lower(&self.lo, bits) } else { Rational::zero() };
        QInterval { lo, hi: sqrt_upper(&self.hi.clone().max(Rational::zero()), bits) }
    }

    pub fn abs(&self) -> QInterval {
        if self.contains_zero() {
            QInterval { lo: Rational::zero(), hi: self.lo.abs().max(self.hi.abs()) }
        } else if self.lo.is_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (super::rational::f64_below(&self.lo), super::rational::f64_above(&self.hi))
    }
}

/// Rectangle `re × i·im` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CInterval {
    pub re: QInterval,
    pub im: QInterval,
}

impl CInterval {
    pub fn new(re: QInterval, im: QInterval) -> Self {
        CInterval { re, im }
    }

    pub fn real(re: QInterval) -> Self {
        CInterval { re, im: QInterval::zero() }
    }

    pub fn point(re: Rational, im: Rational) -> Self {
        CInterval { re: QInterval::point(re), im: QInterval::point(im) }
    }

    pub fn add(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> CInterval {
        CInterval { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> CInterval {
        CInterval { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, q: &Rational) -> CInterval {
        CInterval { re: self.re.scale(q), im: self.im.scale(q) }
    }

    /// Enclosure of `|z|^2`.
    pub fn abs2(&self) -> QInterval {
        self.re.square().add(&self.im.square())
    }

    pub fn recip(&self) -> Result<CInterval> {
        let inv = self.abs2().recip()?;
        let c = self.conj();
        Ok(CInterval { re: c.re.mul(&inv), im: c.im.mul(&inv) })
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn intersects(&self, o: &CInterval) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn round_out(&self, bits: u32) -> CInterval {
        CInterval { re: self.re.round_out(bits), im: self.im.round_out(bits) }
    }

    /// Larger of the two side lengths.
    pub fn size(&self) -> Rational {
        self.re.width().max(self.im.width())
    }
}

/// Horner evaluation of `p` over a complex rectangle, rounding every step.
pub fn eval_complex(p: &UniPoly, z: &CInterval, bits: u32) -> CInterval {
    let mut acc = CInterval::point(Rational::zero(), Rational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add(&CInterval::point(c.clone(), Rational::zero())).round_out(bits);
    }
    acc
}

pub fn eval_real(p: &UniPoly, x: &QInterval, bits: u32) -> QInterval {
    let mut acc = QInterval::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&QInterval::point(c.clone())).round_out(bits);
    }
    acc
}

// ---------------------------------------------------------------------------
// Arbitrary-precision transcendental enclosures.

/// `atan(x)` for a point `|x| <= 1/2`, alternating series with the first
/// omitted term as remainder.
fn atan_series(x: &Rational, bits: u32) -> QInterval {
    let work = bits + 16;
    let eps = Rational::one() / Rational::from_integer(super::rational::pow2(work));
    let x2 = QInterval::point(x * x).round_out(work);
    let mut power = QInterval::point(x.clone()).round_out(work);
    let mut sum = QInterval::zero();
    let mut n: i64 = 0;
    loop {
        let term = power.scale(&ratio(1, 2 * n + 1));
        sum = if n % 2 == 0 { sum.add(&term) } else { sum.sub(&term) }.round_out(work);
        power = power.mul(&x2).round_out(work);
        n += 1;
        let next = power.abs().hi.clone() / rat(2 * n + 1);
        if next < eps {
            let rem = QInterval::new(-next.clone(), next);
            return sum.add(&rem).round_out(bits + 8);
        }
    }
}

/// Enclosure of π, width about `2^-bits`.
pub fn pi(bits: u32) -> QInterval {
    let a = atan_series(&ratio(1, 5), bits + 8).scale(&rat(16));
    let b = atan_series(&ratio(1, 239), bits + 8).scale(&rat(4));
    a.sub(&b).round_out(bits + 4)
}

/// `atan(x)` for a rational point, any magnitude.
pub fn atan_point(x: &Rational, bits: u32) -> QInterval {
    let work = bits + 12;
    if x.is_zero() {
        return QInterval::zero();
    }
    if x.abs() > rat(1) {
        let half_pi = pi(work).scale(&ratio(1, 2));
        let inner = atan_point(&x.recip(), work);
        let base = if x.is_positive() { half_pi } else { half_pi.neg() };
        return base.sub(&inner).round_out(bits + 4);
    }
    // two half-angle reductions: t -> t / (1 + sqrt(1 + t^2)), each halves atan
    let mut t = QInterval::point(x.clone());
    for _ in 0..2 {
        let lo = halve(&t.lo, work);
        let hi = halve(&t.hi, work);
        t = QInterval::new(lo.lo.min(hi.lo.clone()), hi.hi.max(lo.hi));
    }
    let a = atan_series(&t.lo, work);
    let b = atan_series(&t.hi, work);
    a.hull(&b).scale(&rat(4)).round_out(bits + 4)
}

/// Enclosure of `t / (1 + sqrt(1 + t^2))` for a point `t`.
fn halve(t: &Rational, bits: u32) -> QInterval {
    let s = QInterval::point(rat(1) + t * t).sqrt(bits + 4);
    let den = s.add(&QInterval::point(rat(1)));
    QInterval::point(t.clone()).mul(&den.recip().expect("positive")).round_out(bits + 4)
}

/// `atan2(y, x)` in `(-π, π]` for a nonzero rational point.
pub fn atan2_point(y: &Rational, x: &Rational, bits: u32) -> QInterval {
    let work = bits + 8;
    if x.is_zero() {
        let hp = pi(work).scale(&ratio(1, 2));
        return if y.is_negative() { hp.neg() } else { hp };
    }
    let base = atan_point(&(y / x), work);
    if x.is_positive() {
        base
    } else if y.is_negative() {
        base.sub(&pi(work))
    } else {
        base.add(&pi(work))
    }
}

/// Enclosure of `(cos 2πq, sin 2πq)` for a rational number of turns `q`.
pub fn cis_turns(q: &Rational, bits: u32) -> CInterval {
    let work = bits + 16;
    let r = q - q.round();
    let x = pi(work).scale(&(rat(2) * &r)).round_out(work);
    let bound = rat(4);
    let mut cos_sum = QInterval::zero();
    let mut sin_sum = QInterval::zero();
    // term_k = x^k / k!
    let mut term = QInterval::point(rat(1));
    let mut k: i64 = 0;
    let eps = Rational::one() / Rational::from_integer(super::rational::pow2(work));
    let mut mag = Rational::one();
    loop {
        match k % 4 {
            0 => cos_sum = cos_sum.add(&term),
            1 => sin_sum = sin_sum.add(&term),
            2 => cos_sum = cos_sum.sub(&term),
            _ => sin_sum = sin_sum.sub(&term),
        }
        k += 1;
        term = term.mul(&x).scale(&ratio(1, k)).round_out(work);
        mag = mag * &bound / rat(k);
        if k > 4 && mag < eps {
            break;
        }
    }
    // Lagrange remainder: |x|^k / k! with |x| <= 4
    let rem = QInterval::new(-mag.clone(), mag);
    let clamp = |i: QInterval| QInterval {
        lo: i.lo.max(rat(-1)),
        hi: i.hi.min(rat(1)),
    };
    CInterval::new(
        clamp(cos_sum.add(&rem).round_out(bits + 4)),
        clamp(sin_sum.add(&rem).round_out(bits + 4)),
    )
}

// ---------------------------------------------------------------------------
// f64 intervals.

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FInterval {
    pub lo: f64,
    pub hi: f64,
}

impl FInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        FInterval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        FInterval { lo: x, hi: x }
    }

    pub fn from_q(q: &QInterval) -> Self {
        let (lo, hi) = q.to_f64_bounds();
        FInterval { lo, hi }
    }

    pub fn from_rational(q: &Rational) -> Self {
        FInterval { lo: super::rational::f64_below(q), hi: super::rational::f64_above(q) }
    }

    pub fn pi() -> Self {
        FInterval { lo: PI.next_down(), hi: PI.next_up() }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn add(self, o: Self) -> Self {
        FInterval { lo: (self.lo + o.lo).next_down(), hi: (self.hi + o.hi).next_up() }
    }

    pub fn sub(self, o: Self) -> Self {
        FInterval { lo: (self.lo - o.hi).next_down(), hi: (self.hi - o.lo).next_up() }
    }

    pub fn neg(self) -> Self {
        FInterval { lo: -self.hi, hi: -self.lo }
    }

    pub fn mul(self, o: Self) -> Self {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        FInterval { lo: lo.next_down(), hi: hi.next_up() }
    }

    /// Division by a positive exact scalar.
    pub fn div_pos(self, d: f64) -> Self {
        debug_assert!(d > 0.0);
        FInterval { lo: (self.lo / d).next_down(), hi: (self.hi / d).next_up() }
    }

    pub fn hull(self, o: Self) -> Self {
        FInterval { lo: self.lo.min(o.lo), hi: self.hi.max(o.hi) }
    }

    pub fn symmetric(r: f64) -> Self {
        FInterval { lo: -r, hi: r }
    }

    pub fn abs_max(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    fn clamp_unit(self) -> Self {
        FInterval { lo: self.lo.max(-1.0), hi: self.hi.min(1.0) }
    }

    /// `(cos 2πm, sin 2πm)` at a point `m` given in turns.
    pub fn cis_turns_point(m: f64) -> (FInterval, FInterval) {
        let r = m - m.round();
        let x = FInterval::point(2.0 * r).mul(FInterval::pi());
        let x2 = x.mul(x);
        // cos: sum_{k<=14} (-1)^k x^{2k}/(2k)!, sin: sum (-1)^k x^{2k+1}/(2k+1)!
        let mut c = FInterval::point(0.0);
        let mut s = FInterval::point(0.0);
        let mut ct = FInterval::point(1.0);
        let mut st = x;
        for k in 0..15 {
            if k % 2 == 0 {
                c = c.add(ct);
                s = s.add(st);
            } else {
                c = c.sub(ct);
                s = s.sub(st);
            }
            let a = (2 * k + 1) as f64;
            let b = (2 * k + 2) as f64;
            ct = ct.mul(x2).div_pos(a * b);
            st = st.mul(x2).div_pos(b * (b + 1.0));
        }
        // |x| <= pi: remainder below pi^30/30! < 1e-17
        let rem = FInterval::symmetric(1e-17);
        (c.add(rem).clamp_unit(), s.add(rem).clamp_unit())
    }

    /// Enclosure of `(cos 2πθ, sin 2πθ)` for all θ in `self` (turns).
    pub fn cis_turns(self) -> (FInterval, FInterval) {
        let m = 0.5 * (self.lo + self.hi);
        let h = (m - self.lo).max(self.hi - m).next_up();
        let (c, s) = Self::cis_turns_point(m);
        if h == 0.0 {
            return (c, s);
        }
        // second-order Taylor around m with radius d = 2πh
        let d = FInterval::point(2.0 * h).mul(FInterval::pi()).hi;
        let quad = FInterval::symmetric((d * d * 0.5).next_up());
        let lin_c = FInterval::symmetric((s.abs_max() * d).next_up());
        let lin_s = FInterval::symmetric((c.abs_max() * d).next_up());
        (c.add(lin_c).add(quad).clamp_unit(), s.add(lin_s).add(quad).clamp_unit())
    }
}

pub fn q_to_f64(q: &Rational) -> f64 {
    to_f64(q)
}
