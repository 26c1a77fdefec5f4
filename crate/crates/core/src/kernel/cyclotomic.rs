//! Cyclotomic polynomials and Euler's totient.

use num_integer::Integer;

use super::poly::UniPoly;
use super::rational::rat;

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn mobius(n: u64) -> i8 {
    let mut m = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The `n`-th cyclotomic polynomial, `∏_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic(n: u64) -> UniPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let binom = |d: u64| &UniPoly::monomial(rat(1), d as usize) - &UniPoly::one();
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = &num * &binom(d),
            -1 => den = &den * &binom(d),
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic divisibility")
}

/// Every `N` with `φ(N) = d`. Uses `φ(N) ≥ sqrt(N/2)`, so `N ≤ 2 d²`.
pub fn phi_inverse(d: u64) -> Vec<u64> {
    (1..=2 * d * d + 2).filter(|&n| euler_phi(n) == d).collect()
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
