//! Ultimate positivity of a simple rational LRS.
//!
//! The sequence is split into `M` non-degenerate subsequences. For each, the
//! dominant characteristic roots decide: without a positive real dominant
//! root the subsequence changes sign infinitely often; otherwise, after
//! dividing by `ρ^n`, the dominant part is `f(λ^n)` for a function `f` on a
//! torus, and the subsequence is ultimately nonnegative iff `f ≥ 0` on the
//! closure of the orbit, the subtorus cut out by the multiplicative
//! relations among the `λ_j`.
//!
//! No threshold index is ever produced.

use std::cmp::Ordering;
use std::fmt;

use crate::algebraic::AlgebraicNumber;
use crate::degeneracy::{plan_decomposition, subsequence_closed_form};
use crate::error::{Error, Result};
use crate::lrs::{closed_form, ClosedForm, LrsRep};
use crate::relations::{find_relations, parametrize_torus, Completeness, RelationConfig, RelationLattice};
use crate::torus::{decide_nonneg, Stage, TorusOutcome, TorusProblem, Witness};

pub use crate::torus::Budgets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    UltimatelyPositive,
    NotUltimatelyPositive,
    Inconclusive,
}

impl Outcome {
    /// Short code used in JSON and on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Outcome::UltimatelyPositive => "UP",
            Outcome::NotUltimatelyPositive => "NOT_UP",
            Outcome::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    ZeroSeq,
    NoPositiveRealDominant,
    TorusNonneg,
    TorusNeg,
    TorusInconclusive,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::ZeroSeq => "ZERO_SEQ",
            Reason::NoPositiveRealDominant => "NO_POSITIVE_REAL_DOMINANT",
            Reason::TorusNonneg => "TORUS_NONNEG",
            Reason::TorusNeg => "TORUS_NEG",
            Reason::TorusInconclusive => "TORUS_INCONCLUSIVE",
        })
    }
}

/// The verdict on one subsequence `u_{Mn+l}`.
#[derive(Clone, Debug)]
pub struct ResidueReport {
    pub l: u64,
    pub outcome: Outcome,
    pub reason: Reason,
    pub witness: Option<Witness>,
    /// Dominant roots of the subsequence.
    pub dominant: Vec<AlgebraicNumber>,
    pub stage: Option<Stage>,
    /// Exact minimum of the torus function, when its stage computes one.
    pub minimum: Option<AlgebraicNumber>,
    pub bounds: Option<(f64, f64)>,
    pub lattice: Option<RelationLattice>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    /// Order of the minimal recurrence.
    pub order: usize,
    pub m: u64,
    /// Dominant characteristic roots of the whole sequence.
    pub dominant_roots: Vec<String>,
    /// Relation lattice of the first residue that needed one.
    pub lattice_basis: Vec<Vec<i64>>,
    /// `EXHAUSTIVE` unless some residue's lattice is only `STABILIZED`.
    pub lattice_completeness: String,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub residues: Vec<ResidueReport>,
    pub diagnostics: Diagnostics,
}

/// Indices of the roots of largest modulus.
fn dominant_indices(roots: &[&AlgebraicNumber]) -> Result<Vec<usize>> {
    let mods: Vec<AlgebraicNumber> = roots.iter().map(|r| r.abs2()).collect::<Result<_>>()?;
    let mut best: Vec<usize> = Vec::new();
    for (i, m) in mods.iter().enumerate() {
        match best.first() {
            None => best.push(i),
            Some(&b) => match m.cmp_real(&mods[b])? {
                Ordering::Greater => best = vec![i],
                Ordering::Equal => best.push(i),
                Ordering::Less => {}
            },
        }
    }
    Ok(best)
}

fn decide_residue(l: u64, v: &ClosedForm, budgets: &Budgets) -> Result<ResidueReport> {
    let mut rep = ResidueReport {
        l,
        outcome: Outcome::UltimatelyPositive,
        reason: Reason::ZeroSeq,
        witness: None,
        dominant: Vec::new(),
        stage: None,
        minimum: None,
        bounds: None,
        lattice: None,
    };
    if v.is_empty() {
        return Ok(rep);
    }
    let roots: Vec<&AlgebraicNumber> = v.terms.iter().map(|(r, _)| r).collect();
    let dom = dominant_indices(&roots)?;
    rep.dominant = dom.iter().map(|&i| v.terms[i].0.clone()).collect();
    let mut rho = None;
    for &i in &dom {
        let r = &v.terms[i].0;
        if r.is_real() && r.sign()? > 0 {
            rho = Some(i);
        }
    }
    let Some(rho) = rho else {
        rep.outcome = Outcome::NotUltimatelyPositive;
        rep.reason = Reason::NoPositiveRealDominant;
        return Ok(rep);
    };
    let (rho_root, b) = &v.terms[rho];
    let mut lambdas = Vec::new();
    let mut cs = Vec::new();
    for &i in &dom {
        let (g, c) = &v.terms[i];
        // one root from each conjugate pair
        if !g.is_real() && g.im()?.sign()? > 0 {
            lambdas.push(g.div(rho_root)?);
            cs.push(c.clone());
        }
    }
    let cfg = RelationConfig { masser_cap: budgets.masser_cap, precision_bits: budgets.precision_bits };
    let lattice = find_relations(&lambdas, cfg)?;
    let torus = parametrize_torus(&lattice)?;
    let tv = decide_nonneg(&TorusProblem::new(b.clone(), cs, torus)?, budgets)?;
    rep.lattice = Some(lattice);
    rep.stage = Some(tv.stage);
    rep.bounds = tv.bounds;
    rep.minimum = tv.minimum;
    match tv.outcome {
        TorusOutcome::Nonneg => rep.reason = Reason::TorusNonneg,
        TorusOutcome::NegWitness => {
            rep.outcome = Outcome::NotUltimatelyPositive;
            rep.reason = Reason::TorusNeg;
            rep.witness = tv.witness;
        }
        TorusOutcome::Inconclusive => {
            rep.outcome = Outcome::Inconclusive;
            rep.reason = Reason::TorusInconclusive;
        }
    }
    Ok(rep)
}

pub fn decide_ultimate_positivity(u: &LrsRep, budgets: &Budgets) -> Result<Verdict> {
    let u = u.minimize();
    if !u.is_simple() {
        return Err(Error::NotSimple(u.char_poly().to_string()));
    }
    let cf = closed_form(&u)?;
    let roots: Vec<AlgebraicNumber> = cf.terms.iter().map(|(r, _)| r.clone()).collect();
    let plan = plan_decomposition(&roots)?;
    let dominant_roots = if roots.is_empty() {
        Vec::new()
    } else {
        let refs: Vec<&AlgebraicNumber> = roots.iter().collect();
        dominant_indices(&refs)?.into_iter().map(|i| roots[i].describe()).collect()
    };
    let mut residues = Vec::with_capacity(plan.m as usize);
    for l in 0..plan.m {
        let v = subsequence_closed_form(&cf, plan.m, l)?;
        residues.push(decide_residue(l, &v, budgets)?);
    }
    let outcome = if residues.iter().any(|r| r.outcome == Outcome::NotUltimatelyPositive) {
        Outcome::NotUltimatelyPositive
    } else if residues.iter().any(|r| r.outcome == Outcome::Inconclusive) {
        Outcome::Inconclusive
    } else {
        Outcome::UltimatelyPositive
    };
    let lattice_basis = residues
        .iter()
        .filter_map(|r| r.lattice.as_ref())
        .find(|l| l.dim > 0)
        .map(|l| l.basis.clone())
        .unwrap_or_default();
    let weakest = residues.iter().filter_map(|r| r.lattice.as_ref()).find_map(|l| match l.completeness {
        Completeness::Stabilized(_) => Some(l.completeness),
        Completeness::Exhaustive => None,
    });
    let diagnostics = Diagnostics {
        order: u.order(),
        m: plan.m,
        dominant_roots,
        lattice_basis,
        lattice_completeness: weakest.unwrap_or(Completeness::Exhaustive).to_string(),
    };
    Ok(Verdict { outcome, residues, diagnostics })
}
