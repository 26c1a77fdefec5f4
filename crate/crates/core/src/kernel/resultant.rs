//! Resultants: univariate by the Euclidean recurrence, bivariate by
//! evaluation at integer points and Newton interpolation.

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// `Res(p, q)`, zero exactly when `p` and `q` share a complex root.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::invalid("resultant of the zero polynomial"));
    }
    Ok(resultant_nonzero(p, q))
}

fn resultant_nonzero(p: &UniPoly, q: &UniPoly) -> Rational {
    let (m, n) = (p.deg(), q.deg());
    if n == 0 {
        return num_traits::pow(q.leading(), m);
    }
    if m == 0 {
        return num_traits::pow(p.leading(), n);
    }
    let r = p.rem(q);
    if r.is_zero() {
        return Rational::zero();
    }
    let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
    let lc = num_traits::pow(q.leading(), m - r.deg());
    sign * lc * resultant_nonzero(q, &r)
}

/// Polynomial in `y` whose coefficients are polynomials in `x`:
/// `terms[i]` is the coefficient of `y^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    terms: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut terms: Vec<UniPoly>) -> Self {
        while terms.last().is_some_and(UniPoly::is_zero) {
            terms.pop();
        }
        BiPoly { terms }
    }

    /// `p(y)`, constant in `x`.
    pub fn in_y(p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    pub fn terms(&self) -> &[UniPoly] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_y(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn deg_x(&self) -> usize {
        self.terms.iter().map(UniPoly::deg).max().unwrap_or(0)
    }

    /// Specialize `x := x0`, giving a polynomial in `y`.
    pub fn at_x(&self, x0: &Rational) -> UniPoly {
        UniPoly::new(self.terms.iter().map(|c| c.eval(x0)).collect())
    }

    /// `q(x - y)` as a polynomial in `y`.
    pub fn shifted_difference(q: &UniPoly) -> Self {
        // (x - y) as BiPoly: y^0 coefficient x, y^1 coefficient -1
        let x_minus_y = BiPoly::new(vec![UniPoly::x(), UniPoly::constant(-Rational::one())]);
        let mut acc = BiPoly::new(vec![]);
        for c in q.coeffs().iter().rev() {
            acc = acc.mul(&x_minus_y).add(&BiPoly::new(vec![UniPoly::constant(c.clone())]));
        }
        acc
    }

    /// `y^deg(q) * q(x / y)` as a polynomial in `y`.
    pub fn homogenized_quotient(q: &UniPoly) -> Self {
        let n = q.deg();
        let mut terms = vec![UniPoly::zero(); n + 1];
        for (i, c) in q.coeffs().iter().enumerate() {
            // c x^i y^(n-i)
            terms[n - i] = UniPoly::monomial(c.clone(), i);
        }
        Self::new(terms)
    }

    /// `x * b(y) - a(y)`, whose `y`-roots specialise to `a/b`.
    pub fn value_relation(a: &UniPoly, b: &UniPoly) -> Self {
        let n = a.coeffs().len().max(b.coeffs().len());
        let terms = (0..n)
            .map(|i| UniPoly::new(vec![-a.coeff(i), b.coeff(i)]))
            .collect();
        Self::new(terms)
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let n = self.terms.len().max(o.terms.len());
        let z = UniPoly::zero();
        BiPoly::new(
            (0..n)
                .map(|i| self.terms.get(i).unwrap_or(&z) + o.terms.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::new(vec![]);
        }
        let mut out = vec![UniPoly::zero(); self.terms.len() + o.terms.len() - 1];
        for (i, a) in self.terms.iter().enumerate() {
            for (j, b) in o.terms.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

/// Eliminate `y`: returns `Res_y(p, q)` as a polynomial in `x`.
///
/// Evaluates at integer points where neither leading `y`-coefficient
/// vanishes (so specialization commutes with the resultant) and interpolates.
pub fn resultant_bivariate(p: &BiPoly, q: &BiPoly) -> Result<UniPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::invalid("resultant of the zero polynomial"));
    }
    let (m, n) = (p.deg_y(), q.deg_y());
    let bound = n * p.deg_x() + m * q.deg_x();
    let lp = p.terms.last().unwrap();
    let lq = q.terms.last().unwrap();
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut t: i64 = 0;
    while xs.len() < bound + 1 {
        let x0 = rat(t);
        t = if t > 0 { -t } else { -t + 1 };
        if lp.eval(&x0).is_zero() || lq.eval(&x0).is_zero() {
            continue;
        }
        let r = resultant_nonzero(&p.at_x(&x0), &q.at_x(&x0));
        xs.push(x0);
        ys.push(r);
    }
    Ok(interpolate(&xs, &ys))
}

/// Newton-form interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::linear_root(&xs[i])) + &UniPoly::constant(dd[i].clone());
    }
    acc
}
