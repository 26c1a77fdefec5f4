//! Degenerate sequences: characteristic roots whose quotient is a root of
//! unity. Splitting `u` into the subsequences `u_{Mn+l}` removes them.

use crate::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::kernel::cyclotomic::lcm;
use crate::lrs::ClosedForm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionPlan {
    /// lcm of the orders of all root-of-unity quotients.
    pub m: u64,
    /// Root indices grouped by "quotient is a root of unity".
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
}

impl DecompositionPlan {
    pub fn is_degenerate(&self) -> bool {
        self.m > 1
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut j = i;
    while parent[j] != r {
        let next = parent[j];
        parent[j] = r;
        j = next;
    }
    r
}

/// Whether `|a|` and `|b|` could be equal, judged from enclosures only.
fn moduli_may_agree(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<bool> {
    let ea = a.enclosure(64)?.abs2();
    let eb = b.enclosure(64)?.abs2();
    Ok(ea.intersects(&eb))
}

/// Order of `a / b` if it is a root of unity.
pub fn quotient_order(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<Option<u64>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::invalid("zero characteristic root"));
    }
    if !moduli_may_agree(a, b)? {
        return Ok(None);
    }
    a.div(b)?.root_of_unity_order()
}

pub fn plan_decomposition(roots: &[AlgebraicNumber]) -> Result<DecompositionPlan> {
    if roots.iter().any(AlgebraicNumber::is_zero) {
        return Err(Error::invalid("zero characteristic root"));
    }
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut m = 1u64;
    for i in 0..n {
        for j in i + 1..n {
            if let Some(ord) = quotient_order(&roots[i], &roots[j])? {
                m = lcm(m, ord);
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b.max(a)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match seen[r] {
            Some(c) => classes[c].push(i),
            None => {
                seen[r] = Some(classes.len());
                classes.push(vec![i]);
            }
        }
    }
    let representatives = classes.iter().map(|c| c[0]).collect();
    Ok(DecompositionPlan { m, classes, representatives })
}

/// Closed form of `v_n = u_{Mn+l}`: each `(λ, c)` becomes `(λ^M, c λ^l)`,
/// equal roots are merged and exactly-zero coefficients dropped.
pub fn subsequence_closed_form(cf: &ClosedForm, m: u64, l: u64) -> Result<ClosedForm> {
    if m == 0 || l >= m {
        return Err(Error::invalid(format!("residue {l} out of range for modulus {m}")));
    }
    let mut merged: Vec<(AlgebraicNumber, AlgebraicNumber)> = Vec::new();
    for (root, coeff) in &cf.terms {
        let r = root.pow(m as i64)?;
        let c = coeff.mul(&root.pow(l as i64)?)?;
        match merged.iter_mut().find(|(x, _)| x.equals(&r)) {
            Some((_, acc)) => *acc = acc.add(&c)?,
            None => merged.push((r, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    Ok(ClosedForm { terms: merged })
}
