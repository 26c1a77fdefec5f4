//! Integer lattices: Hermite and Smith normal forms, kernels,
//! intersections, and LLL reduction.
//!
//! Vectors are rows; a lattice is given by any finite generating set.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::kernel::rational::{int, ratio, Rational};

pub type Row = Vec<BigInt>;

pub fn to_big(v: &[i64]) -> Row {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn swap_rows(m: &mut [Row], i: usize, j: usize) {
    m.swap(i, j);
}

fn axpy(target: &mut Row, src: &Row, q: &BigInt) {
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`, along
/// with the unimodular transform `U` (`U · rows = H`, zero rows at the end
/// of `H` included). Pivots are positive and entries above a pivot lie in
/// `[0, pivot)`.
pub fn hnf_with_transform(rows: &[Row], dim: usize) -> (Vec<Row>, Vec<Row>) {
    let n = rows.len();
    let mut h: Vec<Row> = rows.to_vec();
    let mut u: Vec<Row> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut r = 0;
    for col in 0..dim {
        if r == n {
            break;
        }
        // Euclid down the column until a single nonzero entry remains at row r.
        loop {
            let mut best: Option<usize> = None;
            for i in r..n {
                if !h[i][col].is_zero() && best.is_none_or(|b| h[i][col].abs() < h[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            swap_rows(&mut h, r, b);
            swap_rows(&mut u, r, b);
            let mut done = true;
            for i in r + 1..n {
                if !h[i][col].is_zero() {
                    let q = h[i][col].div_floor(&h[r][col]);
                    let (hr, ur) = (h[r].clone(), u[r].clone());
                    axpy(&mut h[i], &hr, &q);
                    axpy(&mut u[i], &ur, &q);
                    if !h[i][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < n && !h[r][col].is_zero() {
            if h[r][col].is_negative() {
                h[r].iter_mut().for_each(|x| *x = -&*x);
                u[r].iter_mut().for_each(|x| *x = -&*x);
            }
            for i in 0..r {
                let q = h[i][col].div_floor(&h[r][col]);
                if !q.is_zero() {
                    let (hr, ur) = (h[r].clone(), u[r].clone());
                    axpy(&mut h[i], &hr, &q);
                    axpy(&mut u[i], &ur, &q);
                }
            }
            r += 1;
        }
    }
    (h, u)
}

/// Hermite basis (nonzero rows only).
pub fn hnf(rows: &[Row], dim: usize) -> Vec<Row> {
    let (h, _) = hnf_with_transform(rows, dim);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Basis of the integer left kernel `{x : x · rows = 0}`.
pub fn left_kernel(rows: &[Row], dim: usize) -> Vec<Row> {
    let (h, u) = hnf_with_transform(rows, dim);
    h.iter()
        .zip(u)
        .filter(|(r, _)| r.iter().all(Zero::is_zero))
        .map(|(_, x)| x)
        .collect()
}

/// Basis of the intersection of two lattices in `Z^dim`.
pub fn intersect(a: &[Row], b: &[Row], dim: usize) -> Vec<Row> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // x A = y B  <=>  (x, y) · [A; -B] = 0
    let mut stacked: Vec<Row> = a.to_vec();
    stacked.extend(b.iter().map(|r| r.iter().map(|x| -x).collect::<Row>()));
    let ker = left_kernel(&stacked, dim);
    let vecs: Vec<Row> = ker
        .iter()
        .map(|k| {
            let mut v = vec![BigInt::zero(); dim];
            for (coef, row) in k[..a.len()].iter().zip(a) {
                for (t, x) in v.iter_mut().zip(row) {
                    *t += coef * x;
                }
            }
            v
        })
        .collect();
    hnf(&vecs, dim)
}

/// Whether `v` lies in the lattice with Hermite basis `basis`.
pub fn contains(basis: &[Row], v: &Row) -> bool {
    let mut r = v.clone();
    for b in basis {
        let Some(p) = b.iter().position(|x| !x.is_zero()) else { continue };
        if r[..p].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, rem) = r[p].div_rem(&b[p]);
        if !rem.is_zero() {
            return false;
        }
        axpy(&mut r, b, &q);
    }
    r.iter().all(Zero::is_zero)
}

pub fn rank(rows: &[Row], dim: usize) -> usize {
    hnf(rows, dim).len()
}

/// Smith normal form `U · B · V = D` for an `n × m` matrix `B`.
/// Returns `(U, D, V)`; the diagonal of `D` is nonnegative and each entry
/// divides the next.
pub fn smith(b: &[Row], m: usize) -> (Vec<Row>, Vec<Row>, Vec<Row>) {
    let n = b.len();
    let ident = |k: usize| -> Vec<Row> {
        (0..k).map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
    };
    let mut d: Vec<Row> = b.to_vec();
    let mut u = ident(n);
    let mut v = ident(m);
    let col_op = |mat: &mut Vec<Row>, dst: usize, src: usize, q: &BigInt| {
        for row in mat.iter_mut() {
            let s = row[src].clone();
            row[dst] -= q * s;
        }
    };
    let swap_cols = |mat: &mut Vec<Row>, i: usize, j: usize| {
        for row in mat.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut t = 0;
    while t < n.min(m) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let mut piv: Option<(usize, usize)> = None;
        for i in t..n {
            for j in t..m {
                if !d[i][j].is_zero() && piv.is_none_or(|(a, c)| d[i][j].abs() < d[a][c].abs()) {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        let mut clean = true;
        for i in t + 1..n {
            if !d[i][t].is_zero() {
                let q = d[i][t].div_floor(&d[t][t]);
                let (dt, ut) = (d[t].clone(), u[t].clone());
                axpy(&mut d[i], &dt, &q);
                axpy(&mut u[i], &ut, &q);
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..m {
            if !d[t][j].is_zero() {
                let q = d[t][j].div_floor(&d[t][t]);
                col_op(&mut d, j, t, &q);
                col_op(&mut v, j, t, &q);
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility: pivot must divide every entry of the remaining block
        let mut bad: Option<(usize, usize)> = None;
        'scan: for i in t + 1..n {
            for j in t + 1..m {
                if !(&d[i][j] % &d[t][t]).is_zero() {
                    bad = Some((i, j));
                    break 'scan;
                }
            }
        }
        if let Some((i, _)) = bad {
            // add row i to row t and redo this pivot
            let (di, ui) = (d[i].clone(), u[i].clone());
            axpy(&mut d[t], &di, &-BigInt::one());
            axpy(&mut u[t], &ui, &-BigInt::one());
            continue;
        }
        if d[t][t].is_negative() {
            d[t].iter_mut().for_each(|x| *x = -&*x);
            u[t].iter_mut().for_each(|x| *x = -&*x);
        }
        t += 1;
    }
    (u, d, v)
}

/// LLL reduction (δ = 3/4) of linearly independent integer rows, exact
/// rational Gram–Schmidt.
pub fn lll(basis: &[Row]) -> Vec<Row> {
    let n = basis.len();
    if n <= 1 {
        return basis.to_vec();
    }
    let mut b: Vec<Row> = basis.to_vec();
    let delta = ratio(3, 4);
    let gram_schmidt = |b: &[Row]| -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let n = b.len();
        let mut mu = vec![vec![Rational::zero(); n]; n];
        let mut bstar: Vec<Vec<Rational>> = Vec::with_capacity(n);
        let mut norms = Vec::with_capacity(n);
        for i in 0..n {
            let mut v: Vec<Rational> = b[i].iter().map(int).collect();
            for j in 0..i {
                let num: Rational = b[i].iter().zip(&bstar[j]).map(|(a, c)| int(a) * c).sum();
                mu[i][j] = if norms[j] == Rational::zero() { Rational::zero() } else { num / &norms[j] };
                for (t, s) in v.iter_mut().zip(&bstar[j]) {
                    *t -= &mu[i][j] * s;
                }
            }
            let nn: Rational = v.iter().map(|x| x * x).sum();
            norms.push(nn);
            bstar.push(v);
        }
        (mu, norms)
    };
    let (mut mu, mut norms) = gram_schmidt(&b);
    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        if guard > 100_000 {
            break;
        }
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if !q.is_zero() {
                let qi = q.to_integer();
                let bj = b[j].clone();
                axpy(&mut b[k], &bj, &qi);
                for l in 0..=j {
                    let t = if l == j { Rational::one() } else { mu[j][l].clone() };
                    mu[k][l] -= &q * t;
                }
            }
        }
        let lhs = &norms[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if lhs >= &rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            let gs = gram_schmidt(&b);
            mu = gs.0;
            norms = gs.1;
            k = (k - 1).max(1);
        }
    }
    b
}
