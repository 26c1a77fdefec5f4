//! Arithmetic in a simple extension `Q(γ)`.
//!
//! The field is grown one algebraic number at a time. Adjoining `β` to
//! `Q(γ)` tries `γ' = γ + kβ` for small `k` and accepts it when
//! `gcd(m_β(y), m_γ(γ' - ky))` over `Q(γ')` is linear, which both proves
//! `γ'` primitive and expresses `β` as a polynomial in `γ'`.
//! Elements are rational polynomials in the generator, reduced modulo its
//! minimal polynomial.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::kernel::poly::UniPoly;
use crate::kernel::rational::{rat, Rational};

#[derive(Clone, Debug)]
pub struct NumberField {
    gen: AlgebraicNumber,
    adjoined: Vec<(AlgebraicNumber, UniPoly)>,
    /// `n` when the generator is `e^{2πi/n}`.
    cyclotomic: Option<u64>,
}

impl Default for NumberField {
    fn default() -> Self {
        Self::rationals()
    }
}

impl NumberField {
    pub fn rationals() -> Self {
        NumberField { gen: AlgebraicNumber::zero(), adjoined: Vec::new(), cyclotomic: None }
    }

    /// `Q(ζ_n)` with generator `ζ_n = e^{2πi/n}`.
    pub fn cyclotomic(n: u64) -> Result<Self> {
        let gen = AlgebraicNumber::root_of_unity(&Rational::new(BigInt::one(), BigInt::from(n.max(1))))?;
        let mut k = NumberField { gen, adjoined: Vec::new(), cyclotomic: Some(n.max(1)) };
        if n % 4 == 0 {
            let hi = k.root_of_unity_image(&(rat(1) / rat(4))).expect("4 divides n");
            k.adjoined.push((AlgebraicNumber::i(), hi));
        }
        Ok(k)
    }

    /// Image of `e^{2πi q}` in a cyclotomic field containing it.
    pub fn root_of_unity_image(&self, q: &Rational) -> Option<UniPoly> {
        let n = self.cyclotomic?;
        let r = q - q.floor();
        let e = r * Rational::from_integer(BigInt::from(n));
        if !e.is_integer() {
            return None;
        }
        let e = e.to_integer().to_u64()?;
        Some(if n == 1 { UniPoly::one() } else { self.pow(&UniPoly::x(), e) })
    }

    pub fn generated_by(xs: &[AlgebraicNumber]) -> Result<Self> {
        let mut k = Self::rationals();
        for x in xs {
            k.adjoin(x)?;
        }
        Ok(k)
    }

    /// The field generated by `xs`, with the image of each element.
    pub fn with_elements(xs: &[AlgebraicNumber]) -> Result<(Self, Vec<UniPoly>)> {
        let k = Self::generated_by(xs)?;
        let images = xs.iter().map(|x| k.image(x).expect("just adjoined")).collect();
        Ok((k, images))
    }

    /// Image of an already adjoined number.
    pub fn image(&self, a: &AlgebraicNumber) -> Option<UniPoly> {
        if let Some(q) = a.to_rational() {
            return Some(UniPoly::constant(q));
        }
        self.adjoined.iter().find(|(b, _)| b.equals(a)).map(|(_, h)| h.clone())
    }

    pub fn degree(&self) -> usize {
        self.gen.degree()
    }

    pub fn generator(&self) -> &AlgebraicNumber {
        &self.gen
    }

    pub fn modulus(&self) -> &UniPoly {
        self.gen.poly()
    }

    /// Adjoin `a` and return its image (a polynomial in the generator).
    pub fn adjoin(&mut self, a: &AlgebraicNumber) -> Result<UniPoly> {
        if let Some(q) = a.to_rational() {
            return Ok(UniPoly::constant(q));
        }
        if let Some((_, h)) = self.adjoined.iter().find(|(b, _)| b.equals(a)) {
            return Ok(h.clone());
        }
        if let Some((re, im)) = a.as_gaussian().filter(|(re, im)| !(re.is_zero() && im.is_one())) {
            // cheaper than a primitive-element search once i is present
            let hi = self.adjoin(&AlgebraicNumber::i())?;
            let h = (&UniPoly::constant(re) + &hi.scale(&im)).rem(self.modulus());
            self.adjoined.push((a.clone(), h.clone()));
            return Ok(h);
        }
        for k in (1..=12i64).flat_map(|k| [k, -k]) {
            let g2 = self.gen.add(&a.scale(&rat(k))?)?;
            if let Some(beta) = self.express(&g2, a, k)? {
                // old generator γ = γ' - kβ
                let m2 = g2.poly().clone();
                let old = (&UniPoly::x() - &beta.scale(&rat(k))).rem(&m2);
                for (_, h) in self.adjoined.iter_mut() {
                    *h = h.compose(&old).rem(&m2);
                }
                self.adjoined.push((a.clone(), beta.clone()));
                self.gen = g2;
                self.cyclotomic = None;
                return Ok(beta);
            }
        }
        Err(Error::limit("no small primitive element found"))
    }

    /// `β` as a polynomial in `g2 = γ + kβ`, if `g2` generates `Q(γ, β)`.
    fn express(&self, g2: &AlgebraicNumber, beta: &AlgebraicNumber, k: i64) -> Result<Option<UniPoly>> {
        let m2 = g2.poly();
        let a: Vec<UniPoly> = beta.poly().coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
        // m_γ(x - k y) by Horner in K'[y]
        let step = vec![UniPoly::x(), UniPoly::constant(rat(-k))];
        let mut b: Vec<UniPoly> = Vec::new();
        for c in self.gen.poly().coeffs().iter().rev() {
            b = kp_mul(&b, &step, m2);
            if b.is_empty() {
                b.push(UniPoly::zero());
            }
            b[0] = &b[0] + &UniPoly::constant(c.clone());
            kp_trim(&mut b);
        }
        let g = kp_gcd(a, b, m2)?;
        if g.len() != 2 {
            return Ok(None);
        }
        // g = g0 + g1 y  =>  β = -g0 / g1
        let inv = g[1].inverse_mod(m2).ok_or(Error::DivisionByZero)?;
        Ok(Some((&(-&g[0]) * &inv).rem(m2)))
    }

    pub fn reduce(&self, h: &UniPoly) -> UniPoly {
        h.rem(self.modulus())
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        (a * b).rem(self.modulus())
    }

    pub fn pow(&self, a: &UniPoly, e: u64) -> UniPoly {
        a.pow_mod(e, self.modulus())
    }

    pub fn is_zero(&self, h: &UniPoly) -> bool {
        self.reduce(h).is_zero()
    }

    /// The element as an algebraic number.
    pub fn value(&self, h: &UniPoly) -> Result<AlgebraicNumber> {
        let h = self.reduce(h);
        if h.deg() == 0 {
            return Ok(AlgebraicNumber::from_rational(h.coeff(0)));
        }
        self.gen.poly_eval(&h)
    }

    /// Sign of a real element.
    pub fn sign(&self, h: &UniPoly) -> Result<i8> {
        self.value(h)?.sign()
    }
}

// Polynomials in y over K = Q[x]/(m), coefficients ascending.

fn kp_trim(a: &mut Vec<UniPoly>) {
    while a.last().is_some_and(UniPoly::is_zero) {
        a.pop();
    }
}

fn kp_mul(a: &[UniPoly], b: &[UniPoly], m: &UniPoly) -> Vec<UniPoly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![UniPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    let mut out: Vec<UniPoly> = out.into_iter().map(|c| c.rem(m)).collect();
    kp_trim(&mut out);
    out
}

fn kp_rem(mut a: Vec<UniPoly>, b: &[UniPoly], m: &UniPoly) -> Result<Vec<UniPoly>> {
    let lb = b.last().ok_or(Error::DivisionByZero)?;
    let inv = lb.inverse_mod(m).ok_or(Error::DivisionByZero)?;
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let f = (a.last().unwrap() * &inv).rem(m);
        for (j, c) in b.iter().enumerate() {
            a[shift + j] = (&a[shift + j] - &(&f * c)).rem(m);
        }
        // the leading term cancels exactly
        a.pop();
        kp_trim(&mut a);
    }
    Ok(a)
}

fn kp_gcd(mut a: Vec<UniPoly>, mut b: Vec<UniPoly>, m: &UniPoly) -> Result<Vec<UniPoly>> {
    kp_trim(&mut a);
    kp_trim(&mut b);
    while !b.is_empty() {
        let r = kp_rem(a, &b, m)?;
        a = b;
        b = r;
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::ratio;

    #[test]
    fn sqrt2_sqrt3() {
        let s2 = AlgebraicNumber::from_int(2).sqrt().unwrap();
        let s3 = AlgebraicNumber::from_int(3).sqrt().unwrap();
        let k = NumberField::generated_by(&[s2.clone(), s3.clone()]).unwrap();
        assert_eq!(k.degree(), 4);
        let h2 = k.adjoined[0].1.clone();
        let h3 = k.adjoined[1].1.clone();
        // images square to 2 and 3, product is sqrt 6
        assert_eq!(k.mul(&h2, &h2), UniPoly::constant(rat(2)));
        assert_eq!(k.mul(&h3, &h3), UniPoly::constant(rat(3)));
        let six = k.value(&k.mul(&h2, &h3)).unwrap();
        assert!(six.equals(&AlgebraicNumber::from_int(6).sqrt().unwrap()));
        assert_eq!(k.sign(&(&h2 - &h3)).unwrap(), -1);
    }

    #[test]
    fn roots_of_unity_and_i() {
        let z8 = AlgebraicNumber::root_of_unity(&ratio(1, 8)).unwrap();
        let mut k = NumberField::generated_by(&[z8]).unwrap();
        assert_eq!(k.degree(), 4);
        // i = ζ8^2 already lies in the field
        let hi = k.adjoin(&AlgebraicNumber::i()).unwrap();
        assert_eq!(k.degree(), 4);
        assert_eq!(k.mul(&hi, &hi), UniPoly::constant(rat(-1)));
        let z3 = AlgebraicNumber::root_of_unity(&ratio(1, 3)).unwrap();
        let h3 = k.adjoin(&z3).unwrap();
        assert_eq!(k.degree(), 8);
        assert_eq!(k.pow(&h3, 3), UniPoly::constant(rat(1)));
        // images are re-expressed in the new generator
        let hi = k.adjoin(&AlgebraicNumber::i()).unwrap();
        assert!(k.value(&k.pow(&hi, 2)).unwrap().equals(&AlgebraicNumber::from_int(-1)));
    }

    #[test]
    fn gaussian_elements_use_i() {
        let z9 = AlgebraicNumber::root_of_unity(&ratio(1, 9)).unwrap();
        let c = AlgebraicNumber::gaussian(ratio(3, 2), ratio(-1, 4));
        assert_eq!(c.as_gaussian(), Some((ratio(3, 2), ratio(-1, 4))));
        assert_eq!(c.conj().as_gaussian(), Some((ratio(3, 2), ratio(1, 4))));
        let (k, img) = NumberField::with_elements(&[z9, c.clone(), c.conj()]).unwrap();
        assert_eq!(k.degree(), 12);
        assert!(k.value(&img[1]).unwrap().equals(&c));
        assert!(k.value(&k.mul(&img[1], &img[2])).unwrap().equals(&c.abs2().unwrap()));
    }
}
