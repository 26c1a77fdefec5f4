//! Real and complex algebraic numbers.
//!
//! A number is stored as its minimal polynomial (irreducible, primitive,
//! positive leading coefficient) together with a rectangle isolating it from
//! the other roots. Keeping the polynomial minimal makes structural questions
//! cheap: a number is rational iff the degree is 1, zero iff the polynomial
//! is `x`, and a root of unity iff the polynomial is cyclotomic.
//!
//! New numbers are built by elimination: a resultant gives a polynomial
//! vanishing at the result, and interval evaluation of the operands picks out
//! which root of which factor is meant.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::factor::{factor_squarefree, irreducible_factors};
use crate::kernel::interval::{cis_turns, eval_complex, CInterval, QInterval};
use crate::kernel::poly::UniPoly;
use crate::kernel::rational::{decimal, pow2, rat, to_f64, Rational};
use crate::kernel::resultant::{resultant_bivariate, BiPoly};
use crate::kernel::roots::{isolate_roots, mignotte_gap, refine_root, RootBox};
use crate::kernel::{cyclotomic, phi_inverse};

/// Results whose defining polynomial would exceed this degree are refused.
pub const MAX_DEGREE: usize = 256;

const MAX_BITS: u32 = 1 << 14;

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    poly: UniPoly,
    region: RootBox,
}

fn eps(bits: u32) -> Rational {
    Rational::new(One::one(), pow2(bits))
}

impl AlgebraicNumber {
    pub fn from_rational(q: Rational) -> Self {
        AlgebraicNumber { poly: UniPoly::linear_root(&q).to_primitive(), region: RootBox::point(q, Rational::zero()) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let region = RootBox { re_lo: rat(-1) / rat(4), re_hi: rat(1) / rat(4), im_lo: rat(3) / rat(4), im_hi: rat(5) / rat(4) };
        AlgebraicNumber { poly: p, region }
    }

    /// `re + i·im` for rational parts.
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        if im.is_zero() {
            return Self::from_rational(re);
        }
        let p = UniPoly::new(vec![&re * &re + &im * &im, -(&re * rat(2)), rat(1)]).to_primitive();
        Self::select(&p, move |_| Ok(CInterval::point(re.clone(), im.clone())))
            .expect("a quadratic with distinct conjugate roots is always separable")
    }

    /// `(re, im)` when the number lies in `Q(i)`.
    pub fn as_gaussian(&self) -> Option<(Rational, Rational)> {
        if let Some(q) = self.to_rational() {
            return Some((q, Rational::zero()));
        }
        if self.degree() != 2 || self.is_real() {
            return None;
        }
        // x^2 + p x + q with roots re ± i·im
        let lc = self.poly.coeff(2);
        let re = -self.poly.coeff(1) / (&lc * rat(2));
        let im2 = self.poly.coeff(0) / &lc - &re * &re;
        let a = exact_isqrt(im2.numer())?;
        let b = exact_isqrt(im2.denom())?;
        let im = Rational::new(a, b);
        // the box holds one of ±im and not the other, so its centre has the right sign
        let im = if (&self.region.im_lo + &self.region.im_hi).is_negative() { -im } else { im };
        Some((re, im))
    }

    /// `e^{2πi q}`, a root of unity of order `denom(q)`.
    pub fn root_of_unity(q: &Rational) -> Result<Self> {
        let r = q - q.floor();
        let n = r.denom().clone();
        let n: u64 = n.try_into().map_err(|_| Error::limit("root-of-unity order too large"))?;
        if n == 1 {
            return Ok(Self::one());
        }
        if n == 2 {
            return Ok(Self::from_int(-1));
        }
        if crate::kernel::euler_phi(n) as usize > MAX_DEGREE {
            return Err(Error::limit(format!("cyclotomic degree for order {n} exceeds {MAX_DEGREE}")));
        }
        // distinct n-th roots of unity are at least 4/n apart, so a box of
        // half-width about 1/(4n) around e^{2πir} isolates it
        let bits = 8 + 2 * (64 - n.leading_zeros());
        let e = cis_turns(&r, bits);
        let pad = Rational::new(num_bigint::BigInt::one(), num_bigint::BigInt::from(4 * n));
        let region = RootBox {
            re_lo: &e.re.lo - &pad,
            re_hi: &e.re.hi + &pad,
            im_lo: &e.im.lo - &pad,
            im_hi: &e.im.hi + &pad,
        };
        Ok(AlgebraicNumber { poly: cyclotomic(n), region })
    }

    /// All distinct complex roots of a nonzero polynomial.
    pub fn roots_of(p: &UniPoly) -> Result<Vec<Self>> {
        if p.is_zero() {
            return Err(Error::invalid("roots of the zero polynomial"));
        }
        let mut out = Vec::new();
        for f in irreducible_factors(p)? {
            for b in isolate_roots(&f)? {
                out.push(AlgebraicNumber { poly: f.clone(), region: b });
            }
        }
        Ok(out)
    }

    /// Build from an irreducible polynomial and a region isolating one of its
    /// roots (checked).
    pub fn from_parts(poly: UniPoly, region: RootBox) -> Result<Self> {
        let fs = factor_squarefree(&poly)?;
        if fs.len() != 1 {
            return Err(Error::invalid(format!("{poly} is not irreducible")));
        }
        let poly = fs.into_iter().next().unwrap();
        let hits: Vec<RootBox> = isolate_roots(&poly)?.into_iter().filter(|b| b.intersects(&region)).collect();
        let gap = mignotte_gap(&poly);
        let mut tgt = gap.clone();
        let mut hits = hits;
        // refine until the candidates either fit inside the region or stop touching it
        for _ in 0..64 {
            let inside: Vec<&RootBox> = hits.iter().filter(|b| region.contains_box(b)).collect();
            if inside.len() == 1 && hits.len() == 1 {
                return Ok(AlgebraicNumber { poly, region: inside[0].clone() });
            }
            if hits.is_empty() {
                break;
            }
            tgt /= rat(4);
            hits = hits
                .iter()
                .map(|b| refine_root(&poly, b, &tgt))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|b| b.intersects(&region))
                .collect();
        }
        Err(Error::invalid("region does not isolate a single root"))
    }

    /// The root of `q` singled out by a family of shrinking enclosures:
    /// `enclosure(bits)` must contain the intended value and have width
    /// roughly `2^-bits`.
    pub fn select(q: &UniPoly, enclosure: impl Fn(u32) -> Result<CInterval>) -> Result<Self> {
        if q.deg() > MAX_DEGREE {
            return Err(Error::limit(format!("defining polynomial of degree {} exceeds {MAX_DEGREE}", q.deg())));
        }
        Self::select_among(irreducible_factors(q)?, enclosure)
    }

    /// `select` over polynomials already known to be irreducible.
    fn select_among(factors: Vec<UniPoly>, enclosure: impl Fn(u32) -> Result<CInterval>) -> Result<Self> {
        let mut live: Vec<(UniPoly, RootBox)> = Vec::new();
        for f in factors {
            for b in isolate_roots(&f)? {
                live.push((f.clone(), b));
            }
        }
        let mut bits = 24;
        while bits <= MAX_BITS {
            let e = RootBox::from_interval(&enclosure(bits)?);
            live.retain(|(_, b)| b.intersects(&e));
            match live.len() {
                0 => return Err(Error::limit("enclosure excludes every candidate root")),
                1 => {
                    let (poly, region) = live.pop().unwrap();
                    return Ok(AlgebraicNumber { poly, region });
                }
                _ => {}
            }
            let target = (e.size() / rat(2)).max(eps(bits + 2));
            for (f, b) in live.iter_mut() {
                *b = refine_root(f, b, &target)?;
            }
            bits *= 2;
        }
        Err(Error::limit("could not separate candidate roots"))
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn region(&self) -> &RootBox {
        &self.region
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn is_rational(&self) -> bool {
        self.poly.deg() == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| -self.poly.coeff(0) / self.poly.coeff(1))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.deg() == 1 && self.poly.coeff(0).is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_one())
    }

    pub fn is_real(&self) -> bool {
        self.region.is_real()
    }

    /// Isolating region refined until both sides are below `target`.
    pub fn refined(&self, target: &Rational) -> Result<RootBox> {
        refine_root(&self.poly, &self.region, target)
    }

    /// Rectangle of width below `2^-bits` containing the number.
    pub fn enclosure(&self, bits: u32) -> Result<CInterval> {
        Ok(self.refined(&eps(bits))?.to_interval())
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        match self.enclosure(60) {
            Ok(c) => (to_f64(&c.re.mid()), to_f64(&c.im.mid())),
            Err(_) => {
                let (re, im) = self.region.center();
                (to_f64(&re), to_f64(&im))
            }
        }
    }

    /// Decimal approximation such as `1.6180339887` or `-0.6+0.8i`.
    pub fn approx(&self, digits: usize) -> String {
        if let Some(q) = self.to_rational() {
            return decimal(&q, digits);
        }
        let bits = (digits as f64 * 3.33) as u32 + 8;
        match self.refined(&eps(bits)) {
            Ok(b) => b.approx(digits),
            Err(_) => self.region.approx(digits),
        }
    }

    pub fn neg(&self) -> Self {
        AlgebraicNumber { poly: self.poly.scale_var(&rat(-1)).to_primitive(), region: self.region.neg() }
    }

    pub fn conj(&self) -> Self {
        if self.is_real() {
            return self.clone();
        }
        AlgebraicNumber { poly: self.poly.clone(), region: self.region.conj() }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        match (self.to_rational(), o.to_rational()) {
            (Some(a), Some(b)) => return Ok(Self::from_rational(a + b)),
            (Some(_), None) => return o.add(self),
            (None, Some(b)) => {
                if b.is_zero() {
                    return Ok(self.clone());
                }
                // roots of p(x - b) are α + b
                let q = self.poly.compose(&UniPoly::new(vec![-b.clone(), rat(1)]));
                let pt = CInterval::point(b, Rational::zero());
                return Self::select(&q, |bits| Ok(self.enclosure(bits + 2)?.add(&pt)));
            }
            _ => {}
        }
        check_degree(self, o)?;
        let q = resultant_bivariate(&BiPoly::in_y(&self.poly), &BiPoly::shifted_difference(&o.poly))?;
        Self::select(&q, |bits| Ok(self.enclosure(bits + 2)?.add(&o.enclosure(bits + 2)?)))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        match (self.to_rational(), o.to_rational()) {
            (Some(a), Some(b)) => return Ok(Self::from_rational(a * b)),
            (Some(_), None) => return o.mul(self),
            (None, Some(b)) => {
                if b.is_one() {
                    return Ok(self.clone());
                }
                // roots of p(x / b) are b α
                let q = self.poly.scale_var(&b.recip());
                return Self::select(&q, |bits| {
                    let w = bits + 4 + b.abs().to_integer().bits() as u32;
                    Ok(self.enclosure(w)?.scale(&b))
                });
            }
            _ => {}
        }
        check_degree(self, o)?;
        let q = resultant_bivariate(&BiPoly::in_y(&self.poly), &BiPoly::homogenized_quotient(&o.poly))?;
        Self::select(&q, |bits| {
            let w = bits + 8 + magnitude_bits(self) + magnitude_bits(o);
            Ok(self.enclosure(w)?.mul(&o.enclosure(w)?).round_out(w))
        })
    }

    pub fn scale(&self, q: &Rational) -> Result<Self> {
        self.mul(&Self::from_rational(q.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        let q = self.poly.reverse();
        Self::select(&q, |bits| {
            // |1/α| derivative scale: 1/|α|^2; widen precision accordingly
            let lo = self.enclosure(bits)?;
            let w = bits + 4 + 2 * inverse_magnitude_bits(&lo);
            self.enclosure(w)?.recip().map(|c| c.round_out(w))
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.inv()?)
    }

    /// `g(α)` for a rational polynomial `g`.
    pub fn poly_eval(&self, g: &UniPoly) -> Result<Self> {
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(g.eval(&q)));
        }
        let g = g.rem(&self.poly);
        if g.deg() == 0 {
            return Ok(Self::from_rational(g.coeff(0)));
        }
        let q = minimal_polynomial_mod(&g, &self.poly);
        let gb = g.height().bits() as u32 + 4 * g.deg() as u32 * (1 + magnitude_bits(self));
        Self::select_among(vec![q], |bits| {
            let w = bits + 8 + gb;
            Ok(eval_complex(&g, &self.enclosure(w)?, w))
        })
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(num_traits::pow(q, n as usize)));
        }
        let g = UniPoly::x().pow_mod(n as u64, &self.poly);
        self.poly_eval(&g)
    }

    /// Real part, as a real algebraic number.
    pub fn re(&self) -> Result<Self> {
        if self.is_real() {
            return Ok(self.clone());
        }
        self.add(&self.conj())?.scale(&(rat(1) / rat(2)))
    }

    /// Imaginary part, as a real algebraic number.
    pub fn im(&self) -> Result<Self> {
        if self.is_real() {
            return Ok(Self::zero());
        }
        let d = self.sub(&self.conj())?;
        // d = 2i·Im, so Im = d · (-i/2)
        d.mul(&Self::i().neg())?.scale(&(rat(1) / rat(2)))
    }

    /// `|α|^2`, real and nonnegative.
    pub fn abs2(&self) -> Result<Self> {
        if self.is_real() {
            return self.mul(self);
        }
        self.mul(&self.conj())
    }

    /// Nonnegative square root of a nonnegative real number.
    pub fn sqrt(&self) -> Result<Self> {
        if self.sign()? < 0 {
            return Err(Error::invalid("square root of a negative number"));
        }
        if let Some(q) = self.to_rational() {
            if let (Some(a), Some(b)) = (exact_isqrt(q.numer()), exact_isqrt(q.denom())) {
                return Ok(Self::from_rational(Rational::new(a, b)));
            }
        }
        let q = self.poly.compose(&UniPoly::monomial(rat(1), 2));
        Self::select(&q, |bits| {
            let e = self.enclosure(2 * bits + 8)?;
            let lo = e.re.lo.clone().max(Rational::zero());
            Ok(CInterval::real(QInterval::new(lo, e.re.hi.clone().max(Rational::zero())).sqrt(bits + 4)))
        })
    }

    pub fn abs(&self) -> Result<Self> {
        self.abs2()?.sqrt()
    }

    /// Sign of a real number.
    pub fn sign(&self) -> Result<i8> {
        if !self.is_real() {
            return Err(Error::invalid("sign of a non-real number"));
        }
        if let Some(q) = self.to_rational() {
            return Ok(if q.is_zero() { 0 } else if q.is_positive() { 1 } else { -1 });
        }
        let mut b = self.region.clone();
        loop {
            if b.re_lo.is_positive() {
                return Ok(1);
            }
            if b.re_hi.is_negative() {
                return Ok(-1);
            }
            b = refine_root(&self.poly, &b, &(b.width() / rat(4)))?;
        }
    }

    pub fn equals(&self, o: &Self) -> bool {
        if self.poly != o.poly {
            return false;
        }
        if self.is_rational() {
            return true;
        }
        let t = mignotte_gap(&self.poly) / rat(4);
        match (self.refined(&t), o.refined(&t)) {
            (Ok(a), Ok(b)) => a.intersects(&b),
            _ => self.region.intersects(&o.region),
        }
    }

    /// Order of two real numbers.
    pub fn cmp_real(&self, o: &Self) -> Result<Ordering> {
        if !self.is_real() || !o.is_real() {
            return Err(Error::invalid("ordering of non-real numbers"));
        }
        if self.equals(o) {
            return Ok(Ordering::Equal);
        }
        if let (Some(a), Some(b)) = (self.to_rational(), o.to_rational()) {
            return Ok(a.cmp(&b));
        }
        let mut bits = 16;
        loop {
            let a = self.enclosure(bits)?.re;
            let b = o.enclosure(bits)?.re;
            if a.hi < b.lo {
                return Ok(Ordering::Less);
            }
            if b.hi < a.lo {
                return Ok(Ordering::Greater);
            }
            if bits > MAX_BITS {
                return Err(Error::limit("could not separate distinct real numbers"));
            }
            bits *= 2;
        }
    }

    /// Compare `|α|` with `|β|`.
    pub fn cmp_modulus(&self, o: &Self) -> Result<Ordering> {
        self.abs2()?.cmp_real(&o.abs2()?)
    }

    /// The multiplicative order if this is a root of unity.
    pub fn root_of_unity_order(&self) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(Error::invalid("zero is not a root of unity"));
        }
        let c0 = self.poly.coeff(0);
        if !self.poly.is_integral() || !self.poly.leading().is_one() || !c0.abs().is_one() {
            return Ok(None);
        }
        for n in phi_inverse(self.degree() as u64) {
            if cyclotomic(n) == self.poly {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// Minimal polynomial and center of the region, for diagnostics.
    pub fn describe(&self) -> String {
        if let Some(q) = self.to_rational() {
            return crate::kernel::rational::format_rational(&q);
        }
        format!("{} ~ {}", self.approx(10), self.poly)
    }
}

/// Minimal polynomial of `g(α)` where `m` is the minimal polynomial of `α`:
/// the first linear dependency among `1, g, g^2, ...` in `Q[x]/(m)`.
fn minimal_polynomial_mod(g: &UniPoly, m: &UniPoly) -> UniPoly {
    let n = m.deg();
    // echelon rows (pivot, coordinates, combination of powers)
    let mut rows: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut pw = UniPoly::one();
    for k in 0..=n {
        let mut v: Vec<Rational> = (0..n).map(|i| pw.coeff(i)).collect();
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = rat(1);
        for (piv, r, rc) in &rows {
            if v[*piv].is_zero() {
                continue;
            }
            let f = &v[*piv] / &r[*piv];
            for (x, y) in v.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in c.iter_mut().zip(rc) {
                *x -= &f * y;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return UniPoly::new(c).to_primitive(),
            Some(piv) => rows.push((piv, v, c)),
        }
        pw = (&pw * g).rem(m);
    }
    unreachable!("n + 1 vectors in dimension n are dependent")
}

fn exact_isqrt(n: &num_bigint::BigInt) -> Option<num_bigint::BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = num_integer::Roots::sqrt(n);
    (&r * &r == *n).then_some(r)
}

/// Bits needed to cover `|α|` (at least 0).
fn magnitude_bits(a: &AlgebraicNumber) -> u32 {
    let b = &a.region;
    let m = b.re_lo.abs().max(b.re_hi.abs()).max(b.im_lo.abs()).max(b.im_hi.abs());
    let i = m.ceil().to_integer();
    i.bits() as u32
}

fn inverse_magnitude_bits(c: &CInterval) -> u32 {
    // a lower bound on |z|^2 from the rectangle
    let lo2 = c.abs2().lo;
    if lo2.is_zero() {
        return 32;
    }
    let inv = lo2.recip().ceil().to_integer();
    inv.bits() as u32
}

fn check_degree(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<()> {
    let d = a.degree() * b.degree();
    if d > MAX_DEGREE {
        return Err(Error::limit(format!("result degree {d} exceeds {MAX_DEGREE}")));
    }
    Ok(())
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl From<Rational> for AlgebraicNumber {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

pub fn alg_add(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    a.add(b)
}

pub fn alg_mul(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    a.mul(b)
}

pub fn alg_neg(a: &AlgebraicNumber) -> AlgebraicNumber {
    a.neg()
}

pub fn alg_inv(a: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    a.inv()
}

pub fn alg_conj(a: &AlgebraicNumber) -> AlgebraicNumber {
    a.conj()
}

pub fn alg_equals(a: &AlgebraicNumber, b: &AlgebraicNumber) -> bool {
    a.equals(b)
}

pub fn alg_sign_real(a: &AlgebraicNumber) -> Result<i8> {
    a.sign()
}

pub fn compare_modulus(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<Ordering> {
    a.cmp_modulus(b)
}

pub fn is_root_of_unity(a: &AlgebraicNumber) -> Result<Option<u64>> {
    a.root_of_unity_order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::ratio;

    fn sqrt(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_int(n).sqrt().unwrap()
    }

    fn gaussian(re: Rational, im: Rational) -> AlgebraicNumber {
        // root of x^2 - 2 re x + (re^2 + im^2) in the half plane of `im`
        let p = UniPoly::new(vec![&re * &re + &im * &im, -rat(2) * &re, rat(1)]);
        let (re2, im2) = (re.clone(), im.clone());
        AlgebraicNumber::select(&p, move |_| Ok(CInterval::point(re2.clone(), im2.clone()))).unwrap()
    }

    #[test]
    fn square_roots() {
        let r2 = sqrt(2);
        assert_eq!(r2.poly(), &UniPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(r2.sign().unwrap(), 1);
        assert!(r2.add(&r2.neg()).unwrap().is_zero());
        assert_eq!(r2.mul(&r2).unwrap().to_rational(), Some(rat(2)));
        assert_eq!(sqrt(9).to_rational(), Some(rat(3)));
    }

    #[test]
    fn imaginary_unit() {
        let i = AlgebraicNumber::i();
        assert_eq!(i.mul(&i).unwrap().to_rational(), Some(rat(-1)));
        assert_eq!(i.root_of_unity_order().unwrap(), Some(4));
        assert_eq!(AlgebraicNumber::from_int(-1).root_of_unity_order().unwrap(), Some(2));
        assert!(i.conj().equals(&i.neg()));
        assert!(!i.equals(&i.conj()));
    }

    #[test]
    fn unit_gaussian_rational() {
        let l = gaussian(ratio(-3, 5), ratio(4, 5));
        assert_eq!(l.mul(&l.conj()).unwrap().to_rational(), Some(rat(1)));
        assert_eq!(l.root_of_unity_order().unwrap(), None);
        assert_eq!(l.cmp_modulus(&AlgebraicNumber::one()).unwrap(), Ordering::Equal);
        let one_i = gaussian(rat(1), rat(1));
        assert_eq!(one_i.cmp_modulus(&sqrt(2)).unwrap(), Ordering::Equal);
        assert_eq!(l.re().unwrap().to_rational(), Some(ratio(-3, 5)));
        assert_eq!(l.im().unwrap().to_rational(), Some(ratio(4, 5)));
    }

    #[test]
    fn sums_and_products_of_radicals() {
        let s = sqrt(2).add(&sqrt(3)).unwrap();
        assert_eq!(s.poly(), &UniPoly::from_ints(&[1, 0, -10, 0, 1]));
        let (re, _) = s.to_f64_pair();
        assert!((re - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-12);
        let p = sqrt(2).mul(&sqrt(3)).unwrap();
        assert!(p.equals(&sqrt(6)));
        let q = sqrt(2).div(&sqrt(8)).unwrap();
        assert_eq!(q.to_rational(), Some(ratio(1, 2)));
    }

    #[test]
    fn powers_and_inverse() {
        let phi = AlgebraicNumber::from_int(1).add(&sqrt(5)).unwrap().scale(&ratio(1, 2)).unwrap();
        let p10 = phi.pow(10).unwrap();
        // phi^10 = 55 phi + 34
        let expect = phi.scale(&rat(55)).unwrap().add(&AlgebraicNumber::from_int(34)).unwrap();
        assert!(p10.equals(&expect));
        assert!(phi.mul(&phi.inv().unwrap()).unwrap().is_one());
        assert_eq!(phi.pow(-2).unwrap().mul(&phi.pow(2).unwrap()).unwrap().to_rational(), Some(rat(1)));
    }

    #[test]
    fn roots_of_unity_from_angles() {
        let z = AlgebraicNumber::root_of_unity(&ratio(1, 3)).unwrap();
        assert_eq!(z.root_of_unity_order().unwrap(), Some(3));
        assert_eq!(z.re().unwrap().to_rational(), Some(ratio(-1, 2)));
        let w = AlgebraicNumber::root_of_unity(&ratio(5, 12)).unwrap();
        assert_eq!(w.pow(12).unwrap().to_rational(), Some(rat(1)));
        assert_ne!(w.pow(6).unwrap().to_rational(), Some(rat(1)));
        assert!(AlgebraicNumber::zero().root_of_unity_order().is_err());
    }

    #[test]
    fn real_ordering() {
        assert_eq!(sqrt(2).cmp_real(&ratio(141, 100).into()).unwrap(), Ordering::Greater);
        assert_eq!(sqrt(2).cmp_real(&sqrt(3)).unwrap(), Ordering::Less);
        assert!(AlgebraicNumber::i().sign().is_err());
        assert!(AlgebraicNumber::zero().inv().is_err());
    }

    #[test]
    fn parts_round_trip() {
        let r = sqrt(2);
        let back = AlgebraicNumber::from_parts(UniPoly::from_ints(&[-4, 0, 2]), RootBox::real(rat(1), rat(2))).unwrap();
        assert!(r.equals(&back));
        assert!(AlgebraicNumber::from_parts(UniPoly::from_ints(&[-2, 0, 1]), RootBox::real(rat(-2), rat(2))).is_err());
    }
}
