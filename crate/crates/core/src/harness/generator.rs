//! Hard instances: polynomial nonnegativity on a box, encoded as positivity
//! of an LRS built from Gaussian-prime units.
//!
//! For a prime `p ≡ 1 (mod 4)` write `p = a² + b²`; then
//! `λ = (a + ib)² / p` has modulus 1, degree 2, and is not a root of unity,
//! and units for distinct primes are multiplicatively independent. The
//! sequences `y_n = Re(λ^n)` therefore make `(y_{1,n}², ..., y_{s,n}²)` dense in
//! `[0, 1]^s`, so `f` takes a positive value on the box iff
//! `u_n = f(y²_{1,n}, ..., y²_{s,n})` is positive infinitely often.

use serde::{Deserialize, Serialize};

use crate::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::kernel::rational::{format_rational, parse_rational, rat, ratio, Rational};
use crate::lrs::{lrs_add, lrs_mul, LrsRep};

#[derive(Clone, Debug)]
pub struct GaussianPrimeUnit {
    pub p: u64,
    pub a: u64,
    pub b: u64,
    pub lambda: AlgebraicNumber,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The first `s` primes `≡ 1 (mod 4)` with their units.
pub fn gaussian_units(s: usize) -> Vec<GaussianPrimeUnit> {
    let mut out = Vec::with_capacity(s);
    let mut p = 1u64;
    while out.len() < s {
        p += 4;
        if !is_prime(p) {
            continue;
        }
        let (a, b) = (1..)
            .take_while(|a| a * a <= p)
            .find_map(|a| {
                let r = p - a * a;
                let b = (r as f64).sqrt().round() as u64;
                (b * b == r).then_some((a, b))
            })
            .expect("Fermat: p ≡ 1 mod 4 is a sum of two squares");
        let (ai, bi, pi) = (a as i64, b as i64, p as i64);
        let lambda = AlgebraicNumber::gaussian(ratio(ai * ai - bi * bi, pi), ratio(2 * ai * bi, pi));
        out.push(GaussianPrimeUnit { p, a, b, lambda });
    }
    out
}

/// Total degree limit for polynomial instances.
pub const MAX_POLY_DEGREE: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

/// A polynomial in `vars` variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyInstance {
    pub vars: usize,
    pub terms: Vec<Term>,
}

impl PolyInstance {
    pub fn new(vars: usize, terms: Vec<(Rational, Vec<u32>)>) -> Result<Self> {
        let p = PolyInstance {
            vars,
            terms: terms.into_iter().map(|(c, e)| Term { coeff: format_rational(&c), exponents: e }).collect(),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let p: PolyInstance = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.vars == 0 {
            return Err(Error::invalid("a polynomial instance needs at least one variable"));
        }
        for t in &self.terms {
            parse_rational(&t.coeff)?;
            if t.exponents.len() != self.vars {
                return Err(Error::invalid(format!("monomial has {} exponents, expected {}", t.exponents.len(), self.vars)));
            }
            let d: u32 = t.exponents.iter().sum();
            if d > MAX_POLY_DEGREE {
                return Err(Error::invalid(format!("total degree {d} exceeds {MAX_POLY_DEGREE}")));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.exponents.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        let mut acc = rat(0);
        for t in &self.terms {
            let mut m = parse_rational(&t.coeff)?;
            for (xi, &e) in x.iter().zip(&t.exponents) {
                m *= num_traits::pow(xi.clone(), e as usize);
            }
            acc += m;
        }
        Ok(acc)
    }
}

/// `y_n = Re(λ^n)`: `y_{n+2} = 2 Re(λ) y_{n+1} - y_n`, `y_0 = 1`, `y_1 = Re(λ)`.
pub fn real_part_lrs(lambda: &AlgebraicNumber) -> Result<LrsRep> {
    let re = lambda.re()?.to_rational().ok_or_else(|| Error::invalid("unit must have a rational real part"))?;
    LrsRep::new(vec![&re * rat(2), rat(-1)], vec![rat(1), re])
}

pub fn reduce_pos_to_lrs(f: &PolyInstance) -> Result<LrsRep> {
    f.validate()?;
    let units = gaussian_units(f.vars);
    let squares: Vec<LrsRep> = units
        .iter()
        .map(|u| {
            let y = real_part_lrs(&u.lambda)?;
            lrs_mul(&y, &y)
        })
        .collect::<Result<_>>()?;
    let mut acc = LrsRep::zero();
    for t in &f.terms {
        let c = parse_rational(&t.coeff)?;
        let mut m = LrsRep::constant(c);
        for (sq, &e) in squares.iter().zip(&t.exponents) {
            for _ in 0..e {
                m = lrs_mul(&m, sq)?;
            }
        }
        acc = lrs_add(&acc, &m)?;
    }
    Ok(acc.minimize())
}
