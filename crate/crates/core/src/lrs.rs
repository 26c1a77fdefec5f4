//! Linear recurrence sequences over Q and their exponential-sum closed
//! forms.

use num_traits::Zero;

use crate::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::kernel::poly::UniPoly;
use crate::kernel::rational::{format_rational, rat, Rational};
use crate::kernel::resultant::{resultant_bivariate, BiPoly};

/// `u_{n+k} = a_1 u_{n+k-1} + ... + a_k u_n` with initial values
/// `u_0 .. u_{k-1}`. Order 0 is the identically zero sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrsRep {
    coeffs: Vec<Rational>,
    initial: Vec<Rational>,
}

impl LrsRep {
    pub fn new(coeffs: Vec<Rational>, initial: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != initial.len() {
            return Err(Error::invalid(format!(
                "{} recurrence coefficients but {} initial values",
                coeffs.len(),
                initial.len()
            )));
        }
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(Error::invalid("last recurrence coefficient must be nonzero"));
        }
        Ok(LrsRep { coeffs, initial })
    }

    pub fn from_ints(coeffs: &[i64], initial: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), initial.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        LrsRep { coeffs: Vec::new(), initial: Vec::new() }
    }

    /// The constant sequence `c, c, c, ...`.
    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LrsRep { coeffs: vec![rat(1)], initial: vec![c] }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `x^k - a_1 x^{k-1} - ... - a_k`.
    pub fn char_poly(&self) -> UniPoly {
        let k = self.order();
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = rat(1);
        for (i, a) in self.coeffs.iter().enumerate() {
            c[k - 1 - i] = -a;
        }
        UniPoly::new(c)
    }

    /// Exact `u_0 ..= u_{n_max}`.
    pub fn evaluate_terms(&self, n_max: usize) -> Vec<Rational> {
        let k = self.order();
        let mut u: Vec<Rational> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            if k == 0 {
                u.push(Rational::zero());
            } else if n < k {
                u.push(self.initial[n].clone());
            } else {
                let mut s = Rational::zero();
                for (i, a) in self.coeffs.iter().enumerate() {
                    s += a * &u[n - 1 - i];
                }
                u.push(s);
            }
        }
        u
    }

    /// Termwise scaling by a rational.
    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        LrsRep { coeffs: self.coeffs.clone(), initial: self.initial.iter().map(|u| u * q).collect() }
    }

    /// The shifted sequence `u_{n+t}`.
    pub fn shift(&self, t: usize) -> Self {
        let k = self.order();
        if k == 0 {
            return self.clone();
        }
        let terms = self.evaluate_terms(t + k);
        LrsRep { coeffs: self.coeffs.clone(), initial: terms[t..t + k].to_vec() }
    }

    /// The unique minimal-order representation of the same sequence.
    pub fn minimize(&self) -> Self {
        let k = self.order();
        if k == 0 {
            return self.clone();
        }
        let terms = self.evaluate_terms(2 * k - 1);
        let a = berlekamp_massey(&terms);
        let l = a.len();
        LrsRep { coeffs: a, initial: terms[..l].to_vec() }
    }

    /// Whether the characteristic polynomial of the minimal recurrence has
    /// only simple roots.
    pub fn is_simple(&self) -> bool {
        let m = self.minimize();
        m.order() == 0 || m.char_poly().is_squarefree()
    }

    /// Characteristic roots of this representation.
    pub fn char_roots(&self) -> Result<Vec<AlgebraicNumber>> {
        if self.order() == 0 {
            return Ok(Vec::new());
        }
        AlgebraicNumber::roots_of(&self.char_poly())
    }

    /// `Σ_{m<k} x^m (u_m - Σ_{t=1}^{m} a_t u_{m-t})`: numerator of the
    /// generating function `N(x) / (1 - a_1 x - ... - a_k x^k)`.
    pub fn generating_numerator(&self) -> UniPoly {
        let k = self.order();
        let c: Vec<Rational> = (0..k)
            .map(|m| {
                let mut v = self.initial[m].clone();
                for t in 1..=m {
                    v -= &self.coeffs[t - 1] * &self.initial[m - t];
                }
                v
            })
            .collect();
        UniPoly::new(c)
    }

    pub fn display_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn display_initial(&self) -> Vec<String> {
        self.initial.iter().map(format_rational).collect()
    }
}

/// Minimal recurrence `s_n = Σ a_i s_{n-i}` generating the given prefix
/// (Berlekamp–Massey over Q). Returns `a_1 .. a_L`.
pub fn berlekamp_massey(s: &[Rational]) -> Vec<Rational> {
    // connection polynomial C(x) = 1 + c_1 x + ... ; s_n + Σ c_i s_{n-i} = 0
    let mut c: Vec<Rational> = vec![rat(1)];
    let mut b: Vec<Rational> = vec![rat(1)];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = rat(1);
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l {
            if i < c.len() {
                d += &c[i] * &s[n - i];
            }
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &bd;
        let mut next = c.clone();
        if next.len() < b.len() + m {
            next.resize(b.len() + m, Rational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            next[i + m] -= &coef * bi;
        }
        if 2 * l <= n {
            b = std::mem::replace(&mut c, next);
            l = n + 1 - l;
            bd = d;
            m = 1;
        } else {
            c = next;
            m += 1;
        }
    }
    c.resize(l + 1, Rational::zero());
    c[1..].iter().map(|x| -x).collect()
}

/// `u_n = Σ_j coeff_j · root_j^n`, roots pairwise distinct, conjugate closed.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub terms: Vec<(AlgebraicNumber, AlgebraicNumber)>,
}

impl ClosedForm {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Exact value of the `n`-th term.
    pub fn evaluate(&self, n: u64) -> Result<AlgebraicNumber> {
        let mut acc = AlgebraicNumber::zero();
        for (r, c) in &self.terms {
            acc = acc.add(&c.mul(&r.pow(n as i64)?)?)?;
        }
        Ok(acc)
    }

    /// Enclosure-based numeric value of the `n`-th term (real part).
    pub fn evaluate_f64(&self, n: i32) -> f64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (r, c) in &self.terms {
            let (rr, ri) = r.to_f64_pair();
            let (cr, ci) = c.to_f64_pair();
            acc += num_complex::Complex64::new(cr, ci) * num_complex::Complex64::new(rr, ri).powi(n);
        }
        acc.re
    }
}

/// Closed form of a simple LRS: coefficient of `λ` is `Ñ(λ) / f'(λ)` where
/// `Ñ(y) = y^{k-1} N(1/y)` and `N / (x^k f(1/x))` is the generating function.
pub fn closed_form(u: &LrsRep) -> Result<ClosedForm> {
    let u = u.minimize();
    let k = u.order();
    if k == 0 {
        return Ok(ClosedForm { terms: Vec::new() });
    }
    let f = u.char_poly();
    if !f.is_squarefree() {
        return Err(Error::NotSimple(f.to_string()));
    }
    let n = u.generating_numerator();
    let mut nt = n.coeffs().to_vec();
    nt.resize(k, Rational::zero());
    nt.reverse();
    let n_rev = UniPoly::new(nt);
    let inv = f.derivative().inverse_mod(&f).expect("f' is invertible modulo a squarefree f");
    let h = (&n_rev * &inv).rem(&f);
    let mut terms = Vec::with_capacity(k);
    for r in u.char_roots()? {
        let c = r.poly_eval(&h)?;
        terms.push((r, c));
    }
    Ok(ClosedForm { terms })
}

/// Pointwise sum, minimized.
pub fn lrs_add(u: &LrsRep, v: &LrsRep) -> Result<LrsRep> {
    let f = &u.char_poly() * &v.char_poly();
    combine(&f, |n| {
        let a = u.evaluate_terms(n);
        let b = v.evaluate_terms(n);
        a.iter().zip(&b).map(|(x, y)| x + y).collect()
    })
}

/// Pointwise product, minimized.
pub fn lrs_mul(u: &LrsRep, v: &LrsRep) -> Result<LrsRep> {
    if u.order() == 0 || v.order() == 0 {
        return Ok(LrsRep::zero());
    }
    // roots λ_i μ_j: Res_y(f(y), y^l g(x / y))
    let f = resultant_bivariate(&BiPoly::in_y(&u.char_poly()), &BiPoly::homogenized_quotient(&v.char_poly()))?;
    combine(&f, |n| {
        let a = u.evaluate_terms(n);
        let b = v.evaluate_terms(n);
        a.iter().zip(&b).map(|(x, y)| x * y).collect()
    })
}

fn combine(f: &UniPoly, terms: impl Fn(usize) -> Vec<Rational>) -> Result<LrsRep> {
    let f = f.monic();
    let k = f.deg();
    if k == 0 {
        return Ok(LrsRep::zero());
    }
    let coeffs: Vec<Rational> = (1..=k).map(|i| -f.coeff(k - i)).collect();
    let init = terms(k - 1);
    if coeffs.last().is_some_and(Zero::is_zero) {
        return Err(Error::invalid("characteristic polynomial has a zero root"));
    }
    Ok(LrsRep { coeffs, initial: init }.minimize())
}

impl Default for LrsRep {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::ratio;

    fn fib() -> LrsRep {
        LrsRep::from_ints(&[1, 1], &[0, 1]).unwrap()
    }

    #[test]
    fn minimize_examples() {
        let ones = LrsRep::from_ints(&[2, -1], &[1, 1]).unwrap().minimize();
        assert_eq!(ones, LrsRep::from_ints(&[1], &[1]).unwrap());
        assert_eq!(fib().minimize(), fib());
        let z = LrsRep::from_ints(&[3, 5], &[0, 0]).unwrap().minimize();
        assert_eq!(z.order(), 0);
        assert!(LrsRep::from_ints(&[1, 0], &[1, 1]).is_err());
    }

    #[test]
    fn simplicity() {
        assert!(fib().is_simple());
        assert!(!LrsRep::from_ints(&[2, -1], &[0, 1]).unwrap().is_simple());
        assert!(LrsRep::constant(rat(4)).is_simple());
    }

    #[test]
    fn terms() {
        let t: Vec<Rational> = fib().evaluate_terms(6);
        assert_eq!(t, [0, 1, 1, 2, 3, 5, 8].map(rat).to_vec());
        let u = LrsRep::from_ints(&[1, -1, 1], &[3, 1, -1]).unwrap();
        assert_eq!(u.evaluate_terms(5), [3, 1, -1, 1, 3, 1].map(rat).to_vec());
    }

    #[test]
    fn fibonacci_closed_form() {
        let cf = closed_form(&fib()).unwrap();
        assert_eq!(cf.len(), 2);
        let s5 = AlgebraicNumber::from_int(5).sqrt().unwrap();
        for (r, c) in &cf.terms {
            // c = ±1/√5 with the sign of (root - 1/2)
            let c2 = c.mul(c).unwrap();
            assert_eq!(c2.to_rational(), Some(ratio(1, 5)));
            assert_eq!(c.sign().unwrap(), r.sub(&AlgebraicNumber::from_rational(ratio(1, 2))).unwrap().sign().unwrap());
            assert!(c.mul(&s5).unwrap().to_rational().is_some());
        }
        for n in 0..6 {
            assert_eq!(cf.evaluate(n).unwrap().to_rational(), Some(fib().evaluate_terms(n as usize)[n as usize].clone()));
        }
    }

    #[test]
    fn cosine_closed_form() {
        let u = LrsRep::from_ints(&[1, -1, 1], &[3, 1, -1]).unwrap();
        let cf = closed_form(&u).unwrap();
        assert_eq!(cf.len(), 3);
        for (_, c) in &cf.terms {
            assert!(c.is_one());
        }
    }

    #[test]
    fn non_simple_rejected() {
        let u = LrsRep::from_ints(&[2, -1], &[0, 1]).unwrap();
        assert!(matches!(closed_form(&u), Err(Error::NotSimple(_))));
    }

    #[test]
    fn closure_operations() {
        let s = lrs_add(&fib(), &fib()).unwrap();
        assert_eq!(s.order(), 2);
        let sq = lrs_mul(&fib(), &fib()).unwrap();
        assert_eq!(sq.order(), 3);
        let f = fib().evaluate_terms(20);
        let t = sq.evaluate_terms(20);
        for n in 0..=20 {
            assert_eq!(t[n], &f[n] * &f[n]);
        }
        let one = LrsRep::constant(rat(1));
        assert_eq!(lrs_mul(&one, &fib()).unwrap(), fib());
    }
}
