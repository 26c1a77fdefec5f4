//! Sturm sequences and real-root counting.

use num_traits::{Signed, Zero};

use super::poly::UniPoly;
use super::rational::{format_rational, rat, Rational};
use crate::error::{Error, Result};

/// Canonical Sturm chain `p, p', -rem(p, p'), ...`, each member made
/// primitive (positive scaling preserves sign patterns).
pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone()];
    if p.is_zero() {
        return seq;
    }
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        seq.push(cur.clone());
        let r = -&prev.rem(&cur);
        prev = cur;
        cur = scale_positive(&r);
    }
    seq
}

fn scale_positive(p: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return p.clone();
    }
    let prim = p.to_primitive();
    // to_primitive forces a positive leading coefficient; undo if needed
    if p.leading().is_negative() {
        -&prim
    } else {
        prim
    }
}

fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

pub fn variations_at(seq: &[UniPoly], x: &Rational) -> usize {
    variations(seq.iter().map(|p| sign(&p.eval(x))))
}

pub fn variations_at_pos_inf(seq: &[UniPoly]) -> usize {
    variations(seq.iter().map(|p| sign(&p.leading())))
}

pub fn variations_at_neg_inf(seq: &[UniPoly]) -> usize {
    variations(seq.iter().map(|p| {
        let s = sign(&p.leading());
        if p.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
///
/// `p` must be squarefree and nonzero at both endpoints.
pub fn sturm_count(p: &UniPoly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::invalid("sturm_count of the zero polynomial"));
    }
    if a >= b {
        return Err(Error::invalid(format!(
            "empty interval ({}, {})",
            format_rational(a),
            format_rational(b)
        )));
    }
    for e in [a, b] {
        if p.eval(e).is_zero() {
            return Err(Error::EndpointRoot(format_rational(e)));
        }
    }
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, a) - variations_at(&seq, b))
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &UniPoly) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    let seq = sturm_sequence(p);
    variations_at_neg_inf(&seq) - variations_at_pos_inf(&seq)
}

/// Cauchy bound: every complex root has modulus strictly less than the
/// returned power of two.
pub fn root_bound(p: &UniPoly) -> Rational {
    let lc = p.leading().abs();
    let mut m = Rational::zero();
    for c in &p.coeffs()[..p.deg()] {
        let r = c.abs() / &lc;
        if r > m {
            m = r;
        }
    }
    let bound = m + rat(1);
    let mut pw = rat(1);
    while pw <= bound {
        pw *= rat(2);
    }
    pw
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_examples() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &rat(0), &rat(2)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &rat(-2), &rat(2)).unwrap(), 2);
        let q = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_count(&q, &rat(-10), &rat(10)).unwrap(), 0);
    }

    #[test]
    fn endpoint_root_is_an_error() {
        let p = UniPoly::from_ints(&[-1, 1]);
        assert!(matches!(sturm_count(&p, &rat(1), &rat(2)), Err(Error::EndpointRoot(_))));
        assert!(sturm_count(&p, &rat(2), &rat(1)).is_err());
    }

    #[test]
    fn total_real_roots() {
        // (x-1)(x+2)(x^2+1)
        let p = &(&UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[2, 1])) * &UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(count_real_roots(&p), 2);
        assert!(root_bound(&p) > rat(2));
    }
}
