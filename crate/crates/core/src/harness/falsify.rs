//! Direct evaluation of a prefix of the sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::kernel::rational::Rational;
use crate::lrs::LrsRep;

/// Indices `n ≤ horizon` with `u_n < 0`.
///
/// Runs over the integers: with `D` clearing the recurrence denominators and
/// `E` those of the initial values, `w_n = E D^n u_n` satisfies an integer
/// recurrence and has the sign of `u_n`.
pub fn falsify(u: &LrsRep, horizon: u64) -> Vec<u64> {
    let k = u.order();
    if k == 0 {
        return Vec::new();
    }
    let d = u.coeffs().iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let e = u.initial().iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    // a_i D^i
    let mut dp = BigInt::one();
    let mut ac = Vec::with_capacity(k);
    for a in u.coeffs() {
        dp *= &d;
        ac.push((a * Rational::from_integer(dp.clone())).to_integer());
    }
    let mut window: Vec<BigInt> = Vec::with_capacity(k);
    let mut dp = BigInt::one();
    for x in u.initial() {
        window.push((x * Rational::from_integer(&e * &dp)).to_integer());
        dp *= &d;
    }
    let mut out = Vec::new();
    for (n, w) in window.iter().enumerate() {
        if (n as u64) <= horizon && w.is_negative() {
            out.push(n as u64);
        }
    }
    // ring buffer: window[(n) % k] holds w_n
    let mut n = k as u64;
    while n <= horizon {
        let mut next = BigInt::zero();
        for (i, a) in ac.iter().enumerate() {
            if !a.is_zero() {
                let idx = ((n - 1 - i as u64) % k as u64) as usize;
                next += a * &window[idx];
            }
        }
        if next.is_negative() {
            out.push(n);
        }
        window[(n % k as u64) as usize] = next;
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = LrsRep::from_ints(&[1, -1, 1], &[3, 1, -1]).unwrap();
        assert_eq!(falsify(&c, 12), vec![2, 6, 10]);
        assert!(falsify(&LrsRep::from_ints(&[1, 1], &[0, 1]).unwrap(), 100).is_empty());
        assert!(falsify(&LrsRep::zero(), 50).is_empty());
    }

    #[test]
    fn agrees_with_rational_iteration() {
        let p = |s: &str| crate::kernel::rational::parse_rational(s).unwrap();
        let u = LrsRep::new(vec![p("-1/5"), p("1/5"), p("1")], vec![p("5/2"), p("1/10"), p("29/50")]).unwrap();
        let direct: Vec<u64> = u
            .evaluate_terms(200)
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_negative())
            .map(|(i, _)| i as u64)
            .collect();
        assert_eq!(falsify(&u, 200), direct);
        assert!(!direct.is_empty());
    }
}
