//! Factorization of squarefree integer polynomials (Zassenhaus): factor
//! modulo a small prime, Hensel-lift to a modulus beyond the coefficient
//! bound, recombine lifted factors by trial division.
//!
//! Minimal polynomials fall out of this directly, which keeps every
//! algebraic number at its true degree.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::UniPoly;
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Dense polynomials over Z/p, lowest degree first.

type Zp = Vec<u64>;

fn trim(a: &mut Zp) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn zp_sub(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    let mut r: Zp = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut r);
    r
}

fn zp_add(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    let mut r: Zp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut r);
    r
}

fn zp_mul(a: &Zp, b: &Zp, p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    trim(&mut r);
    r
}

fn zp_divrem(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * inv % p;
        q[shift] = c;
        for (i, &y) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * y % p) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn zp_rem(a: &Zp, b: &Zp, p: u64) -> Zp {
    zp_divrem(a, b, p).1
}

fn zp_monic(a: &Zp, p: u64) -> Zp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|&x| x * inv % p).collect()
        }
    }
}

fn zp_gcd(a: &Zp, b: &Zp, p: u64) -> Zp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = zp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    zp_monic(&a, p)
}

/// `(g, s, t)` with `s a + t b = g`, `g` monic.
fn zp_ext_gcd(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp, Zp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        let s2 = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        let t2 = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    let sc = |v: &Zp| -> Zp { v.iter().map(|&x| x * inv % p).collect() };
    (sc(&r0), sc(&s0), sc(&t0))
}

fn zp_powmod(base: &Zp, e: &BigUint, m: &Zp, p: u64) -> Zp {
    let mut r: Zp = vec![1];
    let b = zp_rem(base, m, p);
    for i in (0..e.bits()).rev() {
        r = zp_rem(&zp_mul(&r, &r, p), m, p);
        if e.bit(i) {
            r = zp_rem(&zp_mul(&r, &b, p), m, p);
        }
    }
    r
}

fn zp_derivative(a: &Zp, p: u64) -> Zp {
    let mut r: Zp = a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect();
    trim(&mut r);
    r
}

fn reduce(f: &[BigInt], p: u64) -> Zp {
    let pb = BigInt::from(p);
    let mut r: Zp = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    trim(&mut r);
    r
}

/// Distinct-degree then equal-degree splitting of a monic squarefree `f`.
fn factor_mod_p(f: &Zp, p: u64, rng: &mut ChaCha8Rng) -> Vec<Zp> {
    let x: Zp = vec![0, 1];
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0usize;
    let pe = BigUint::from(p);
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push(rest.clone());
            break;
        }
        h = zp_powmod(&h, &pe, &rest, p);
        let g = zp_gcd(&rest, &zp_sub(&h, &x, p), p);
        if g.len() > 1 {
            out.extend(equal_degree(&g, d, p, rng));
            rest = zp_divrem(&rest, &g, p).0;
            h = zp_rem(&h, &rest, p);
        }
    }
    out
}

fn equal_degree(f: &Zp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Zp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.clone()];
    }
    let e: BigUint = (num_traits::pow(BigUint::from(p), d) - 1u32) / 2u32;
    loop {
        let mut a: Zp = (0..n).map(|_| rng.gen_range(0..p)).collect();
        trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let b = zp_sub(&zp_powmod(&a, &e, f, p), &vec![1], p);
        let g = zp_gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let q = zp_divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&zp_monic(&q, p), d, p, rng));
            return out;
        }
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/p^k with BigInt coefficients.

type Zi = Vec<BigInt>;

fn zi_trim(a: &mut Zi) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn zi_mul(a: &Zi, b: &Zi) -> Zi {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    zi_trim(&mut r);
    r
}

fn zi_mod(a: &Zi, m: &BigInt) -> Zi {
    let mut r: Zi = a.iter().map(|c| c.mod_floor(m)).collect();
    zi_trim(&mut r);
    r
}

fn zi_from_zp(a: &Zp) -> Zi {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift monic `g, h` with `f ≡ g h (mod p)` to `f ≡ g* h* (mod p^k)`, where
/// `f` is monic modulo `p^k`.
fn hensel_pair(f: &Zi, g: &Zp, h: &Zp, p: u64, k: u32) -> (Zi, Zi) {
    let (_, s, t) = zp_ext_gcd(g, h, p);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    let mut gl = zi_from_zp(g);
    let mut hl = zi_from_zp(h);
    for _ in 1..k {
        let next = &m * &pb;
        // e = (f - g h) / m  (mod p)
        let prod = zi_mul(&gl, &hl);
        let n = f.len().max(prod.len());
        let mut diff: Zi = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next) / &m
            })
            .collect();
        zi_trim(&mut diff);
        let e = reduce(&diff, p);
        if !e.is_empty() {
            let te = zp_mul(&t, &e, p);
            let (q, dg) = zp_divrem(&te, g, p);
            let dh = zp_add(&zp_mul(&s, &e, p), &zp_mul(&q, h, p), p);
            for (i, c) in dg.iter().enumerate() {
                gl[i] += &m * BigInt::from(*c);
            }
            for (i, c) in dh.iter().enumerate() {
                if i < hl.len() {
                    hl[i] += &m * BigInt::from(*c);
                } else {
                    hl.push(&m * BigInt::from(*c));
                }
            }
        }
        m = next;
    }
    (zi_mod(&gl, &m), zi_mod(&hl, &m))
}

fn zp_product(fs: &[Zp], p: u64) -> Zp {
    fs.iter().fold(vec![1u64], |acc, f| zp_mul(&acc, f, p))
}

fn hensel_multi(f: &Zi, factors: &[Zp], p: u64, k: u32) -> Vec<Zi> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let mid = factors.len() / 2;
    let g = zp_product(&factors[..mid], p);
    let h = zp_product(&factors[mid..], p);
    let (gl, hl) = hensel_pair(f, &g, &h, p, k);
    let mut out = hensel_multi(&gl, &factors[..mid], p, k);
    out.extend(hensel_multi(&hl, &factors[mid..], p, k));
    out
}

// ---------------------------------------------------------------------------

const SMALL_PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
    109, 113, 127,
];

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Irreducible factors over Q of a squarefree polynomial, each primitive
/// with positive leading coefficient, sorted by degree then coefficients.
pub fn factor_squarefree(f: &UniPoly) -> Result<Vec<UniPoly>> {
    if f.is_zero() {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    }
    if !f.is_squarefree() {
        return Err(Error::invalid(format!("{f} is not squarefree")));
    }
    let mut out = Vec::new();
    let mut f = f.to_primitive();
    if f.deg() == 0 {
        return Ok(out);
    }
    if f.coeff(0).is_zero() {
        out.push(UniPoly::x());
        f = f.div_exact(&UniPoly::x())?.to_primitive();
    }
    if f.deg() >= 1 {
        out.extend(zassenhaus(&f));
    }
    out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(out)
}

fn zassenhaus(f: &UniPoly) -> Vec<UniPoly> {
    let n = f.deg();
    if n == 1 {
        return vec![f.clone()];
    }
    let fi = f.primitive_int();
    let lc = fi[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);

    // Pick the prime (among a few good ones) giving the fewest modular factors.
    let mut best: Option<(u64, Vec<Zp>)> = None;
    let mut tried = 0;
    for &p in &SMALL_PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = zp_monic(&reduce(&fi, p), p);
        if fp.len() != n + 1 || zp_gcd(&fp, &zp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let fac = factor_mod_p(&fp, p, &mut rng);
        if fac.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| fac.len() < b.len()) {
            best = Some((p, fac));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, mut modular) = best.expect("a squarefree integer polynomial stays squarefree modulo some small prime");

    // Factor coefficients are bounded by 2^n ||f||_2 |lc| (Mignotte); lift past twice that.
    let norm2: BigInt = fi.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (num_integer::Roots::sqrt(&norm2) + 1u32) * lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= &bound * 2 {
        m *= &pb;
        k += 1;
    }
    let lc_inv = lc.modpow(&(&m - num_integer::Integer::div_floor(&m, &pb) - 1u32), &m);
    let monic_f: Zi = fi.iter().map(|c| (c * &lc_inv).mod_floor(&m)).collect();
    modular.sort();
    let lifted = hensel_multi(&monic_f, &modular, p, k);

    // Recombination.
    let mut remaining: Vec<Zi> = lifted;
    let mut rest = fi.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let r = remaining.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let rest_lc = rest.last().unwrap().clone();
            let mut cand: Zi = vec![rest_lc.clone()];
            for &i in &idx {
                cand = zi_mod(&zi_mul(&cand, &remaining[i]), &m);
            }
            let cand: Vec<BigInt> = cand.iter().map(|c| symmetric(c, &m)).collect();
            let g = UniPoly::from_bigints(&cand).to_primitive();
            let rp = UniPoly::from_bigints(&rest);
            let divides = !g.coeff(0).is_zero()
                && (rp.coeff(0).numer() % g.coeff(0).numer()).is_zero()
                && g.divides(&rp)
                && rp.div_exact(&g).map(|q| q.is_integral()).unwrap_or(false);
            if divides {
                found.push(g.clone());
                rest = rp.div_exact(&g).unwrap().primitive_int();
                let mut keep = Vec::with_capacity(r - size);
                for (i, fac) in remaining.iter().enumerate() {
                    if !idx.contains(&i) {
                        keep.push(fac.clone());
                    }
                }
                remaining = keep;
                continue 'outer;
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
        size += 1;
    }
    let rest = UniPoly::from_bigints(&rest);
    if rest.deg() > 0 {
        found.push(rest.to_primitive());
    }
    found
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Squarefree factorization then irreducible factors, without multiplicity.
pub fn irreducible_factors(f: &UniPoly) -> Result<Vec<UniPoly>> {
    factor_squarefree(&f.squarefree_part()?)
}

/// Whether `f` is irreducible over Q.
pub fn is_irreducible(f: &UniPoly) -> bool {
    f.deg() >= 1 && f.is_squarefree() && factor_squarefree(f).map(|v| v.len() == 1).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::cyclotomic::cyclotomic;
    use crate::kernel::rational::Rational;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn product(fs: &[UniPoly]) -> UniPoly {
        fs.iter().fold(UniPoly::one(), |acc, f| &acc * f)
    }

    #[test]
    fn splits_small_products() {
        let f = &p(&[-1, 1]) * &p(&[1, 0, 1]);
        let fs = factor_squarefree(&f).unwrap();
        assert_eq!(fs, vec![p(&[-1, 1]), p(&[1, 0, 1])]);
    }

    #[test]
    fn swinnerton_dyer_is_irreducible() {
        assert!(is_irreducible(&p(&[1, 0, -10, 0, 1])));
        assert!(!is_irreducible(&p(&[-4, 0, 1])));
    }

    #[test]
    fn x_to_the_n_minus_one() {
        let f = &UniPoly::monomial(crate::kernel::rational::rat(1), 36) - &UniPoly::one();
        let fs = factor_squarefree(&f).unwrap();
        let mut expect: Vec<UniPoly> = crate::kernel::cyclotomic::divisors(36).into_iter().map(cyclotomic).collect();
        expect.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
        assert_eq!(fs, expect);
    }

    #[test]
    fn non_monic_factors() {
        let a = p(&[3, 0, 2]);
        let b = p(&[-1, 5]);
        let c = p(&[1, 1, 7]);
        let f = product(&[a.clone(), b.clone(), c.clone()]);
        let fs = factor_squarefree(&f).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs).to_primitive(), f.to_primitive());
        for g in [a, b, c] {
            assert!(fs.contains(&g.to_primitive()));
        }
    }

    #[test]
    fn zero_root_and_rational_coefficients() {
        let f = UniPoly::new(vec![Rational::zero(), crate::kernel::rational::ratio(-1, 2), Rational::zero(), crate::kernel::rational::ratio(1, 2)]);
        let fs = factor_squarefree(&f).unwrap();
        assert_eq!(fs, vec![p(&[-1, 1]), p(&[0, 1]), p(&[1, 1])]);
    }
}
