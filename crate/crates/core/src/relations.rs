//! Multiplicative relations `λ_1^{v_1} ··· λ_s^{v_s} = 1` among unit-modulus
//! algebraic numbers, and the subtorus they cut out.
//!
//! Relations are searched for numerically (by enumeration under a cap, or by
//! LLL on the arguments) and every reported vector is verified exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::kernel::interval::{atan2_point, pi, QInterval};
use crate::kernel::rational::{int, pow2, rat, ratio, to_f64, Rational};
use crate::lattice::{self, Row};

/// How much of the relation group a basis is known to cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Completeness {
    /// Every vector of sup-norm at most the cap was examined.
    Exhaustive,
    /// Integer-relation detection stopped changing at this precision.
    Stabilized(u32),
}

impl fmt::Display for Completeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Completeness::Exhaustive => write!(f, "EXHAUSTIVE"),
            Completeness::Stabilized(b) => write!(f, "STABILIZED({b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationLattice {
    pub dim: usize,
    /// Hermite basis; empty for the trivial lattice.
    pub basis: Vec<Vec<i64>>,
    pub completeness: Completeness,
}

impl RelationLattice {
    pub fn trivial(dim: usize) -> Self {
        RelationLattice { dim, basis: Vec::new(), completeness: Completeness::Exhaustive }
    }

    /// Lattice spanned by `vectors` (reduced to Hermite form).
    pub fn from_vectors(dim: usize, vectors: &[Vec<i64>], completeness: Completeness) -> Result<Self> {
        let rows: Vec<Row> = vectors.iter().map(|v| lattice::to_big(v)).collect();
        Ok(RelationLattice { dim, basis: from_rows(&lattice::hnf(&rows, dim))?, completeness })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        lattice::contains(&self.rows(), &lattice::to_big(v))
    }

    fn rows(&self) -> Vec<Row> {
        self.basis.iter().map(|v| lattice::to_big(v)).collect()
    }
}

fn from_rows(rows: &[Row]) -> Result<Vec<Vec<i64>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::limit("lattice entry exceeds 64 bits")))
                .collect()
        })
        .collect()
}

/// Enclosures of the arguments `θ_j` with `λ_j = e^{2πiθ_j}`, in turns.
#[derive(Clone, Debug)]
pub struct ArgVector {
    pub thetas: Vec<QInterval>,
    pub precision: u32,
}

/// Argument of a nonzero algebraic number, in turns, in roughly `[0, 1)`
/// (an enclosure straddling 0 may start slightly below).
pub fn turns(l: &AlgebraicNumber, bits: u32) -> Result<QInterval> {
    if l.is_zero() {
        return Err(Error::invalid("argument of zero"));
    }
    if let Some(q) = l.to_rational() {
        let t = if q.is_positive() { Rational::zero() } else { ratio(1, 2) };
        return Ok(QInterval::point(t));
    }
    let work = bits + 8;
    let b = l.refined(&Rational::new(BigInt::one(), pow2(work)))?;
    let across_cut = b.re_hi.is_negative() && !b.im_lo.is_positive() && !b.im_hi.is_negative();
    let two_pi = pi(work + 4).scale(&rat(2));
    let mut hull: Option<QInterval> = None;
    for re in [&b.re_lo, &b.re_hi] {
        for im in [&b.im_lo, &b.im_hi] {
            if re.is_zero() && im.is_zero() {
                return Err(Error::limit("argument enclosure touches the origin"));
            }
            let mut a = atan2_point(im, re, work);
            if across_cut && im.is_negative() {
                a = a.add(&two_pi);
            }
            hull = Some(match hull {
                None => a,
                Some(h) => h.hull(&a),
            });
        }
    }
    let t = hull.unwrap().mul(&two_pi.recip()?).round_out(work);
    if t.mid().is_negative() {
        Ok(t.add(&QInterval::point(rat(1))))
    } else {
        Ok(t)
    }
}

pub fn arg_vector(lambdas: &[AlgebraicNumber], bits: u32) -> Result<ArgVector> {
    Ok(ArgVector { thetas: lambdas.iter().map(|l| turns(l, bits)).collect::<Result<_>>()?, precision: bits })
}

fn dot_interval(thetas: &[QInterval], v: &[i64]) -> QInterval {
    let mut acc = QInterval::zero();
    for (t, &x) in thetas.iter().zip(v) {
        if x != 0 {
            acc = acc.add(&t.scale(&rat(x)));
        }
    }
    acc
}

fn contains_integer(i: &QInterval) -> bool {
    i.lo.ceil() <= i.hi.floor()
}

/// Exact test of `λ_1^{v_1} ··· λ_s^{v_s} = 1`.
pub fn verify_relation(lambdas: &[AlgebraicNumber], v: &[i64]) -> Result<bool> {
    if lambdas.len() != v.len() {
        return Err(Error::invalid("relation length does not match the number of values"));
    }
    if v.iter().all(|&x| x == 0) {
        return Ok(true);
    }
    // necessary condition on arguments (sound for any nonzero values)
    let args: Vec<QInterval> = lambdas.iter().map(|l| turns(l, 64)).collect::<Result<_>>()?;
    if !contains_integer(&dot_interval(&args, v)) {
        return Ok(false);
    }
    let mut pos = AlgebraicNumber::one();
    let mut neg = AlgebraicNumber::one();
    for (l, &x) in lambdas.iter().zip(v) {
        if x > 0 {
            pos = pos.mul(&l.pow(x)?)?;
        } else if x < 0 {
            neg = neg.mul(&l.pow(-x)?)?;
        }
    }
    Ok(pos.equals(&neg))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationConfig {
    pub masser_cap: u32,
    pub precision_bits: u32,
}

impl Default for RelationConfig {
    fn default() -> Self {
        RelationConfig { masser_cap: 20, precision_bits: 128 }
    }
}

/// Enumeration is used while `(2 cap + 1)^s` stays below this.
pub const EXHAUSTIVE_LIMIT: u64 = 200_000;

/// Basis of (a sublattice of) the relation group of unit-modulus numbers.
pub fn find_relations(lambdas: &[AlgebraicNumber], cfg: RelationConfig) -> Result<RelationLattice> {
    let s = lambdas.len();
    if s == 0 {
        return Ok(RelationLattice::trivial(0));
    }
    for l in lambdas {
        if !l.abs2()?.is_one() {
            return Err(Error::invalid(format!("{l} does not have modulus 1")));
        }
    }
    let side = 2 * cfg.masser_cap as u64 + 1;
    let count = side.checked_pow(s as u32).unwrap_or(u64::MAX);
    if count <= EXHAUSTIVE_LIMIT {
        exhaustive(lambdas, cfg)
    } else {
        stabilized(lambdas, cfg)
    }
}

fn exhaustive(lambdas: &[AlgebraicNumber], cfg: RelationConfig) -> Result<RelationLattice> {
    let s = lambdas.len();
    let cap = cfg.masser_cap as i64;
    let av = arg_vector(lambdas, cfg.precision_bits)?;
    let approx: Vec<f64> = av.thetas.iter().map(|t| to_f64(&t.mid())).collect();
    let mut found: Vec<Row> = Vec::new();
    let mut v = vec![-cap; s];
    loop {
        // canonical sign: first nonzero coordinate positive
        let first = v.iter().find(|&&x| x != 0).copied();
        if first.is_some_and(|x| x > 0) {
            let x: f64 = v.iter().zip(&approx).map(|(&a, &t)| a as f64 * t).sum();
            if (x - x.round()).abs() < 1e-6
                && contains_integer(&dot_interval(&av.thetas, &v))
                && !lattice::contains(&found, &lattice::to_big(&v))
                && verify_relation(lambdas, &v)?
            {
                found.push(lattice::to_big(&v));
                found = lattice::hnf(&found, s);
            }
        }
        if !odometer(&mut v, cap) {
            break;
        }
    }
    Ok(RelationLattice { dim: s, basis: from_rows(&found)?, completeness: Completeness::Exhaustive })
}

fn odometer(v: &mut [i64], cap: i64) -> bool {
    for x in v.iter_mut().rev() {
        if *x < cap {
            *x += 1;
            return true;
        }
        *x = -cap;
    }
    false
}

fn stabilized(lambdas: &[AlgebraicNumber], cfg: RelationConfig) -> Result<RelationLattice> {
    let s = lambdas.len();
    let mut bits = cfg.precision_bits.max(64);
    let max_bits = bits * 32;
    let mut history: Vec<Vec<Row>> = Vec::new();
    loop {
        let found = lll_round(lambdas, bits)?;
        history.push(found.clone());
        let n = history.len();
        let stable = n >= 3 && history[n - 1] == history[n - 2] && history[n - 2] == history[n - 3];
        if stable || bits >= max_bits {
            return Ok(RelationLattice { dim: s, basis: from_rows(&found)?, completeness: Completeness::Stabilized(bits) });
        }
        bits *= 2;
    }
}

/// One round of integer-relation detection on `(θ_1, ..., θ_s, 1)` at the
/// given precision; returns the Hermite basis of the verified candidates.
fn lll_round(lambdas: &[AlgebraicNumber], bits: u32) -> Result<Vec<Row>> {
    let s = lambdas.len();
    let av = arg_vector(lambdas, bits)?;
    let scale = int(&pow2(bits));
    let mut basis: Vec<Row> = Vec::with_capacity(s + 1);
    for j in 0..=s {
        let mut row = vec![BigInt::zero(); s + 2];
        row[j] = BigInt::one();
        row[s + 1] = if j < s { (&av.thetas[j].mid() * &scale).round().to_integer() } else { pow2(bits) };
        basis.push(row);
    }
    let reduced = lattice::lll(&basis);
    // candidates: short vectors (a true relation stays short at every precision)
    let bound = BigInt::one() << ((bits as usize) / (2 * (s + 1))).clamp(4, 20);
    let mut found: Vec<Row> = Vec::new();
    for row in &reduced {
        let v: Vec<BigInt> = row[..s].to_vec();
        if v.iter().all(Zero::is_zero) || v.iter().any(|x| x.abs() > bound) {
            continue;
        }
        let vi: Vec<i64> = v.iter().map(|x| x.to_i64().unwrap()).collect();
        if lattice::contains(&found, &v) {
            continue;
        }
        if contains_integer(&dot_interval(&av.thetas, &vi)) && verify_relation(lambdas, &vi)? {
            found.push(v);
            found = lattice::hnf(&found, s);
        }
    }
    Ok(found)
}

/// `L(λ^M) = (1/M)(L(λ) ∩ M Z^s)`.
pub fn scale_lattice(l: &RelationLattice, m: u64) -> Result<RelationLattice> {
    if m == 0 {
        return Err(Error::invalid("scale factor must be positive"));
    }
    if l.basis.is_empty() || m == 1 {
        return Ok(l.clone());
    }
    let s = l.dim;
    let mb = BigInt::from(m);
    let m_rows: Vec<Row> = (0..s)
        .map(|i| (0..s).map(|j| if i == j { mb.clone() } else { BigInt::zero() }).collect())
        .collect();
    let inter = lattice::intersect(&l.rows(), &m_rows, s);
    let scaled: Vec<Row> = inter.iter().map(|r| r.iter().map(|x| x / &mb).collect()).collect();
    Ok(RelationLattice { dim: s, basis: from_rows(&lattice::hnf(&scaled, s))?, completeness: l.completeness })
}

/// `T(λ)` as a finite union of cosets of an `r`-dimensional torus:
/// `φ = offset + F t` (angles in turns, `t ∈ R^r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusDecomposition {
    pub dim: usize,
    /// Continuous rank `r = s - rank(L)`.
    pub rank: usize,
    /// `s × r` integer frequency matrix (row `j` gives the frequencies of
    /// coordinate `j`).
    pub frequencies: Vec<Vec<i64>>,
    /// Offsets in turns, each entry in `[0, 1)`.
    pub cosets: Vec<Vec<Rational>>,
    /// The relation basis the decomposition was built from.
    pub relations: Vec<Vec<i64>>,
}

/// Cosets beyond this count are refused.
pub const MAX_COSETS: u64 = 100_000;

impl TorusDecomposition {
    /// Whether an angle vector (in turns) satisfies every relation mod 1.
    pub fn contains_angles(&self, angles: &[Rational]) -> bool {
        angles.len() == self.dim
            && self.relations.iter().all(|v| {
                let d: Rational = v.iter().zip(angles).map(|(&x, a)| a * rat(x)).sum();
                d.is_integer()
            })
    }

    /// The angle vector for coset `c` and free parameters `t` (turns).
    pub fn point(&self, c: usize, t: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|j| {
                let mut a = self.cosets[c][j].clone();
                for (k, tk) in t.iter().enumerate() {
                    a += tk * rat(self.frequencies[j][k]);
                }
                &a - a.floor()
            })
            .collect()
    }
}

pub fn parametrize_torus(l: &RelationLattice) -> Result<TorusDecomposition> {
    let s = l.dim;
    if l.basis.is_empty() {
        let frequencies = (0..s).map(|i| (0..s).map(|j| i64::from(i == j)).collect()).collect();
        return Ok(TorusDecomposition {
            dim: s,
            rank: s,
            frequencies,
            cosets: vec![vec![Rational::zero(); s]],
            relations: Vec::new(),
        });
    }
    let rows = l.rows();
    let rho = rows.len();
    let (_, d, v) = lattice::smith(&rows, s);
    let divs: Vec<BigInt> = (0..rho).map(|i| d[i][i].clone()).collect();
    if divs.iter().any(Zero::is_zero) {
        return Err(Error::invalid("relation basis is not linearly independent"));
    }
    let total = divs.iter().try_fold(1u64, |acc, x| x.to_u64().and_then(|x| acc.checked_mul(x)));
    let total = match total {
        Some(t) if t <= MAX_COSETS => t,
        _ => return Err(Error::limit("too many torsion cosets")),
    };
    let r = s - rho;
    let frequencies: Vec<Vec<i64>> = (0..s)
        .map(|j| {
            (rho..s)
                .map(|i| v[j][i].to_i64().ok_or_else(|| Error::limit("frequency exceeds 64 bits")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut cosets = Vec::with_capacity(total as usize);
    let mut k = vec![0u64; rho];
    loop {
        let off: Vec<Rational> = (0..s)
            .map(|j| {
                let mut a = Rational::zero();
                for i in 0..rho {
                    a += Rational::new(&v[j][i] * BigInt::from(k[i]), divs[i].clone());
                }
                &a - a.floor()
            })
            .collect();
        cosets.push(off);
        // advance mixed-radix counter
        let mut i = 0;
        loop {
            if i == rho {
                break;
            }
            k[i] += 1;
            if BigInt::from(k[i]) < divs[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if i == rho {
            break;
        }
    }
    cosets.sort();
    cosets.dedup();
    Ok(TorusDecomposition { dim: s, rank: r, frequencies, cosets, relations: l.basis.clone() })
}

/// Content of an integer vector (gcd of entries), used in tests and
/// diagnostics.
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::interval::CInterval;
    use crate::kernel::poly::UniPoly;

    fn gaussian_unit(a: i64, b: i64) -> AlgebraicNumber {
        // (a + bi)^2 / (a^2 + b^2)
        let p = a * a + b * b;
        let re = ratio(a * a - b * b, p);
        let im = ratio(2 * a * b, p);
        let poly = UniPoly::new(vec![rat(1), -rat(2) * &re, rat(1)]);
        AlgebraicNumber::select(&poly, move |_| Ok(CInterval::point(re.clone(), im.clone()))).unwrap()
    }

    #[test]
    fn relation_checks() {
        let l = gaussian_unit(1, 2);
        assert!(verify_relation(&[l.clone(), l.conj()], &[1, 1]).unwrap());
        assert!(!verify_relation(&[l.clone()], &[1]).unwrap());
        assert!(verify_relation(&[AlgebraicNumber::i()], &[4]).unwrap());
    }

    #[test]
    fn independent_units() {
        let cfg = RelationConfig::default();
        let l = find_relations(&[gaussian_unit(1, 2), gaussian_unit(2, 3)], cfg).unwrap();
        assert_eq!(l.rank(), 0);
        assert_eq!(l.completeness, Completeness::Exhaustive);
    }

    #[test]
    fn conjugate_pair_and_i() {
        let l = gaussian_unit(1, 2);
        let lat = find_relations(&[l.clone(), l.conj()], RelationConfig::default()).unwrap();
        assert_eq!(lat.rank(), 1);
        assert!(lat.contains(&[1, 1]));
        let li = find_relations(&[AlgebraicNumber::i()], RelationConfig { masser_cap: 4, precision_bits: 128 }).unwrap();
        assert_eq!(li.basis, vec![vec![4]]);
        let pair = find_relations(&[AlgebraicNumber::i(), AlgebraicNumber::i().conj()], RelationConfig { masser_cap: 4, precision_bits: 128 })
            .unwrap();
        assert!(pair.contains(&[1, 1]) && pair.contains(&[4, 0]) && !pair.contains(&[1, 0]));
    }

    #[test]
    fn lll_path_matches_enumeration() {
        let l = gaussian_unit(1, 2);
        let m = gaussian_unit(2, 3);
        let ls = [l.clone(), m.clone(), l.conj(), l.mul(&m).unwrap()];
        let lat = find_relations(&ls, RelationConfig::default()).unwrap();
        assert!(matches!(lat.completeness, Completeness::Stabilized(_)));
        assert_eq!(lat.rank(), 2);
        assert!(lat.contains(&[1, 0, 1, 0]));
        assert!(lat.contains(&[1, 1, 0, -1]));
    }

    #[test]
    fn scaling_examples() {
        let l = RelationLattice::from_vectors(1, &[vec![4]], Completeness::Exhaustive).unwrap();
        assert_eq!(scale_lattice(&l, 2).unwrap().basis, vec![vec![2]]);
        let t = RelationLattice::trivial(2);
        assert_eq!(scale_lattice(&t, 5).unwrap().basis, Vec::<Vec<i64>>::new());
        let z2 = RelationLattice::from_vectors(2, &[vec![1, 0], vec![0, 1]], Completeness::Exhaustive).unwrap();
        assert_eq!(scale_lattice(&z2, 3).unwrap().basis, z2.basis);
    }

    #[test]
    fn torus_shapes() {
        let full = parametrize_torus(&RelationLattice::trivial(2)).unwrap();
        assert_eq!((full.rank, full.cosets.len()), (2, 1));
        let four = parametrize_torus(&RelationLattice::from_vectors(1, &[vec![4]], Completeness::Exhaustive).unwrap()).unwrap();
        assert_eq!(four.rank, 0);
        assert_eq!(four.cosets, vec![vec![rat(0)], vec![ratio(1, 4)], vec![ratio(1, 2)], vec![ratio(3, 4)]]);
        let anti = parametrize_torus(&RelationLattice::from_vectors(2, &[vec![1, 1]], Completeness::Exhaustive).unwrap()).unwrap();
        assert_eq!(anti.rank, 1);
        assert_eq!(anti.cosets.len(), 1);
        let f = &anti.frequencies;
        assert_eq!(f[0][0] + f[1][0], 0);
        assert!(f[0][0].abs() == 1);
    }
}
