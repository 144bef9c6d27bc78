//! The canonical basis of the q-deformed Fock space: principal monomials,
//! the bar-correction recursion, decomposition of arbitrary vectors into
//! canonical elements, graded shapes, and products of elements with
//! non-interacting residue supports.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::partitions::{Multicharge, Multipartition};
use crate::qpoly::LaurentPoly;

/// A canonical basis element: a vector whose largest term (the leader) has
/// coefficient exactly 1 and whose other coefficients lie in `v·Z[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalElement {
    leader: Multipartition,
    vector: FockVector,
}

impl CanonicalElement {
    pub fn leader(&self) -> &Multipartition {
        &self.leader
    }

    pub fn vector(&self) -> &FockVector {
        &self.vector
    }

    /// The graded shape: the sum of all coefficients, read as a polynomial
    /// in the grading variable. Sound elements give a polynomial with
    /// nonnegative exponents and positive coefficients.
    pub fn shape(&self) -> Result<LaurentPoly> {
        let total = self.vector.shape()?;
        if total.min_exp().is_some_and(|m| m < 0) {
            return Err(Error::integrity("canonical shape has a negative grade"));
        }
        if total.terms().any(|(_, c)| c < 0) {
            return Err(Error::integrity("canonical shape has a negative coefficient"));
        }
        Ok(total)
    }
}

/// Computes and caches canonical basis elements over one multicharge.
pub struct CanonicalCtx {
    charge: Multicharge,
    memo: BTreeMap<Multipartition, CanonicalElement>,
}

impl CanonicalCtx {
    pub fn new(charge: Multicharge) -> Self {
        CanonicalCtx { charge, memo: BTreeMap::new() }
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    /// Number of elements computed so far.
    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    fn check_charge(&self, mp: &Multipartition) -> Result<()> {
        if mp.charge() != &self.charge {
            return Err(Error::domain("multipartition charge does not match this context"));
        }
        Ok(())
    }

    /// The principal monomial: peel the multipartition down to empty along
    /// maximal strings (smallest residue first), then apply the reversed
    /// word of divided powers to the vacuum. Its largest term is the input
    /// itself with coefficient 1.
    pub fn monomial_for(&self, mp: &Multipartition) -> Result<FockVector> {
        self.check_charge(mp)?;
        let mut cur = mp.clone();
        let mut word: Vec<(usize, u64)> = Vec::new();
        while !cur.is_empty() {
            let mut stepped = false;
            for i in 0..self.charge.e() {
                let mut k = 0u64;
                while let Some(prev) = cur.e_tilde(i) {
                    cur = prev;
                    k += 1;
                }
                if k > 0 {
                    word.push((i, k));
                    stepped = true;
                    break;
                }
            }
            if !stepped {
                return Err(Error::domain(format!(
                    "no canonical element: {mp} is not reachable (stuck at {cur})"
                )));
            }
        }
        word.reverse();
        let v = FockVector::eval_path(self.charge.clone(), &word)?;
        match v.leading_term() {
            Some((lead, coef)) if lead == mp && coef.is_one() => Ok(v),
            _ => Err(Error::integrity(format!(
                "principal monomial for {mp} does not lead with coefficient 1"
            ))),
        }
    }

    /// The canonical basis element with the given leader. Fails with a
    /// domain error when the leader is not reachable from the vacuum.
    pub fn canonical_basis(&mut self, mp: &Multipartition) -> Result<CanonicalElement> {
        self.check_charge(mp)?;
        if let Some(hit) = self.memo.get(mp) {
            return Ok(hit.clone());
        }
        let mut work = self.monomial_for(mp)?;
        let mut seen: BTreeSet<Multipartition> =
            work.terms().map(|(m, _)| m.clone()).collect();
        let mut iterations = 0usize;
        loop {
            // The largest term below the leader whose coefficient has a
            // bar-symmetric part is the next one to correct.
            let offender = work
                .terms()
                .rev()
                .filter(|(m, _)| *m != mp)
                .find_map(|(m, coef)| match coef.bar_symmetric_part() {
                    Ok((beta, _)) if beta.is_zero() => None,
                    Ok((beta, _)) => Some(Ok((m.clone(), beta))),
                    Err(err) => Some(Err(err)),
                });
            let Some(found) = offender else { break };
            let (mu, beta) = found?;
            let g_mu = self.canonical_basis(&mu)?;
            work = work.sub(&g_mu.vector().scaled(&beta)?)?;
            for (m, _) in work.terms() {
                seen.insert(m.clone());
            }
            iterations += 1;
            if iterations > seen.len() {
                return Err(Error::integrity(
                    "bar correction failed to settle: some term was corrected twice",
                ));
            }
        }
        let element = CanonicalElement { leader: mp.clone(), vector: work };
        validate_canonical(&element)?;
        self.memo.insert(mp.clone(), element.clone());
        Ok(element)
    }

    /// The graded shape of the canonical element with the given leader.
    pub fn shape_of(&mut self, mp: &Multipartition) -> Result<LaurentPoly> {
        self.canonical_basis(mp)?.shape()
    }

    /// Decompose a vector as a combination of canonical elements, largest
    /// leader first. Each extracted coefficient must be bar-symmetric and
    /// each extracted leader reachable; anything else means the vector is
    /// not in the span.
    pub fn strip(&mut self, v: &FockVector) -> Result<Vec<(LaurentPoly, CanonicalElement)>> {
        if v.charge() != &self.charge {
            return Err(Error::domain("vector charge does not match this context"));
        }
        let mut rest = v.clone();
        let mut out = Vec::new();
        while let Some((mu, coef)) = rest.leading_term() {
            let (mu, coef) = (mu.clone(), coef.clone());
            if !coef.is_bar_symmetric() {
                return Err(Error::integrity(format!(
                    "leading coefficient {} at {} is not bar-symmetric",
                    coef.render_desc("v"),
                    mu
                )));
            }
            let g = self.canonical_basis(&mu)?;
            rest = rest.sub(&g.vector().scaled(&coef)?)?;
            out.push((coef, g));
        }
        Ok(out)
    }

    /// Combine two canonical elements whose residue supports never touch:
    /// no residue of one support equals or neighbours (mod e) a residue of
    /// the other. Terms merge componentwise and coefficients multiply; the
    /// result is again canonical, with multiplicative shape.
    pub fn wedge(
        &self,
        a: &CanonicalElement,
        b: &CanonicalElement,
    ) -> Result<CanonicalElement> {
        self.check_charge(a.leader())?;
        self.check_charge(b.leader())?;
        let e = self.charge.e() as i64;
        let support = |m: &Multipartition| -> Vec<usize> {
            m.content()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, _)| i)
                .collect()
        };
        let sa = support(a.leader());
        let sb = support(b.leader());
        for &i in &sa {
            for &j in &sb {
                let d = (i as i64 - j as i64).rem_euclid(e);
                if d == 0 || d == 1 || d == e - 1 {
                    return Err(Error::domain(format!(
                        "supports touch: residues {i} and {j} interact"
                    )));
                }
            }
        }
        let mut vector = FockVector::zero(self.charge.clone());
        for (ma, ca) in a.vector().terms() {
            for (mb, cb) in b.vector().terms() {
                let merged = merge_disjoint(ma, mb)?;
                vector.add_term(merged, &ca.mul(cb)?)?;
            }
        }
        let leader = vector
            .leading_term()
            .map(|(m, _)| m.clone())
            .ok_or_else(|| Error::integrity("empty product of canonical elements"))?;
        let element = CanonicalElement { leader, vector };
        validate_canonical(&element)?;
        Ok(element)
    }
}

/// Componentwise union of two multipartitions that occupy disjoint
/// components.
fn merge_disjoint(a: &Multipartition, b: &Multipartition) -> Result<Multipartition> {
    let level = a.level();
    let mut comps = Vec::with_capacity(level);
    for k in 1..=level {
        let (pa, pb) = (a.component(k), b.component(k));
        if !pa.is_empty() && !pb.is_empty() {
            return Err(Error::integrity(
                "component occupied on both sides of a support-disjoint product",
            ));
        }
        comps.push(if pa.is_empty() { pb.clone() } else { pa.clone() });
    }
    Multipartition::new(a.charge().clone(), comps)
}

/// The structural invariants of a canonical element: the leader is the
/// largest term with coefficient exactly 1, every other coefficient lies in
/// `v·Z[v]`, every term is dominated by the leader, and all terms share one
/// content.
fn validate_canonical(el: &CanonicalElement) -> Result<()> {
    let (lead, coef) = el
        .vector()
        .leading_term()
        .ok_or_else(|| Error::integrity("canonical element with no terms"))?;
    if lead != el.leader() || !coef.is_one() {
        return Err(Error::integrity(format!(
            "canonical element does not lead at {} with coefficient 1",
            el.leader()
        )));
    }
    if el.vector().homogeneous_content().is_none() {
        return Err(Error::integrity("canonical element mixes contents"));
    }
    for (m, c) in el.vector().terms() {
        if m == el.leader() {
            continue;
        }
        if c.min_exp().is_some_and(|k| k <= 0) {
            return Err(Error::integrity(format!(
                "coefficient {} at {} escapes v*Z[v]",
                c.render_desc("v"),
                m
            )));
        }
        if !el.leader().dominance_geq(m)? {
            return Err(Error::integrity(format!(
                "term {} is not dominated by the leader {}",
                m,
                el.leader()
            )));
        }
    }
    Ok(())
}
