//! The q-Fock space: finite formal sums of multipartitions with
//! Laurent-polynomial coefficients, the residue operators `fᵢ`/`eᵢ`, the
//! grading operators `v^{hᵢ}`/`v^d`, divided powers, and path evaluation.
//!
//! Exponent conventions (with "above"/"below" in the global node order):
//! `fᵢ` weights an addable node by `#addable i-nodes above − #removable
//! i-nodes above`; `eᵢ` weights a removable node by `#removable i-nodes
//! below − #addable i-nodes below`. Together these satisfy the quantum
//! commutation `e₁f₁|∅⟩ = [a₁]·|∅⟩` exercised in the tests.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partitions::{Multicharge, Multipartition, Node};
use crate::qpoly::{quantum_factorial, LaurentPoly};

/// A finite formal sum `Σ c_μ(v) |μ⟩` over one multicharge. No stored
/// coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    charge: Multicharge,
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(charge: Multicharge) -> Self {
        FockVector { charge, terms: BTreeMap::new() }
    }

    /// The vacuum `|∅⟩`.
    pub fn vacuum(charge: Multicharge) -> Self {
        let empty = Multipartition::empty(charge.clone());
        let mut v = FockVector::zero(charge);
        v.terms.insert(empty, LaurentPoly::one());
        v
    }

    /// A single natural-basis term with coefficient 1.
    pub fn unit(mp: Multipartition) -> Self {
        let mut v = FockVector::zero(mp.charge().clone());
        v.terms.insert(mp, LaurentPoly::one());
        v
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending multipartition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Multipartition, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Coefficient of `|mp⟩` (zero when absent).
    pub fn coeff(&self, mp: &Multipartition) -> LaurentPoly {
        self.terms.get(mp).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// The largest multipartition carrying a nonzero coefficient.
    pub fn leading_term(&self) -> Option<(&Multipartition, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, mp: Multipartition, coef: &LaurentPoly) -> Result<()> {
        if mp.charge() != &self.charge {
            return Err(Error::domain("multipartition charge does not match the vector"));
        }
        if coef.is_zero() {
            return Ok(());
        }
        let current = self.terms.get(&mp).cloned().unwrap_or_else(LaurentPoly::zero);
        let next = current.add(coef)?;
        if next.is_zero() {
            self.terms.remove(&mp);
        } else {
            self.terms.insert(mp, next);
        }
        Ok(())
    }

    pub fn add(&self, other: &FockVector) -> Result<FockVector> {
        if self.charge != other.charge {
            return Err(Error::domain("cannot add vectors over different multicharges"));
        }
        let mut out = self.clone();
        for (mp, coef) in other.terms() {
            out.add_term(mp.clone(), coef)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FockVector) -> Result<FockVector> {
        self.add(&other.scaled(&LaurentPoly::monomial(0, -1))?)
    }

    /// Multiply every coefficient by `p`.
    pub fn scaled(&self, p: &LaurentPoly) -> Result<FockVector> {
        let mut out = FockVector::zero(self.charge.clone());
        for (mp, coef) in self.terms() {
            let c = coef.mul(p)?;
            if !c.is_zero() {
                out.terms.insert(mp.clone(), c);
            }
        }
        Ok(out)
    }

    /// The sum of all coefficients: the grading generating function of the
    /// vector, one monomial per coefficient term.
    pub fn shape(&self) -> Result<LaurentPoly> {
        let mut total = LaurentPoly::zero();
        for (_, coef) in self.terms() {
            total = total.add(coef)?;
        }
        Ok(total)
    }

    /// The common content of all terms, `None` when the vector is zero or
    /// inhomogeneous.
    pub fn homogeneous_content(&self) -> Option<Vec<i64>> {
        let mut iter = self.terms.keys();
        let first = iter.next()?.content();
        for mp in iter {
            if mp.content() != first {
                return None;
            }
        }
        Some(first)
    }

    fn above(a: &Node, b: &Node) -> bool {
        (a.component, a.row) < (b.component, b.row)
    }

    /// Apply `fᵢ`: each addable `i`-node 𝔫 of each term contributes
    /// `v^{#addable above − #removable above} |λ + 𝔫⟩`.
    pub fn f_op(&self, i: usize) -> Result<FockVector> {
        self.residue_op(i, true)
    }

    /// Apply `eᵢ`: each removable `i`-node 𝔪 contributes
    /// `v^{#removable below − #addable below} |λ − 𝔪⟩`.
    pub fn e_op(&self, i: usize) -> Result<FockVector> {
        self.residue_op(i, false)
    }

    fn residue_op(&self, i: usize, lowering: bool) -> Result<FockVector> {
        if i >= self.charge.e() {
            return Err(Error::domain(format!("residue {i} out of range")));
        }
        let mut out = FockVector::zero(self.charge.clone());
        for (mp, coef) in self.terms() {
            let addable = mp.addable_nodes(i);
            let removable = mp.removable_nodes(i);
            if lowering {
                for (idx, node) in addable.iter().enumerate() {
                    let rem_above =
                        removable.iter().filter(|r| Self::above(r, node)).count() as i64;
                    let exponent = idx as i64 - rem_above;
                    let target = mp.add_node(*node)?;
                    out.add_term(target, &coef.shifted(exponent)?)?;
                }
            } else {
                for (idx, node) in removable.iter().enumerate() {
                    let rem_below = (removable.len() - 1 - idx) as i64;
                    let add_below =
                        addable.iter().filter(|a| Self::above(node, a)).count() as i64;
                    let exponent = rem_below - add_below;
                    let target = mp.remove_node(*node)?;
                    out.add_term(target, &coef.shifted(exponent)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Apply `v^{hᵢ}`: scale each term by `v^{#addable − #removable}` for
    /// residue `i` (the hub component of its weight).
    pub fn vh_op(&self, i: usize) -> Result<FockVector> {
        if i >= self.charge.e() {
            return Err(Error::domain(format!("residue {i} out of range")));
        }
        let mut out = FockVector::zero(self.charge.clone());
        for (mp, coef) in self.terms() {
            let n = mp.addable_nodes(i).len() as i64 - mp.removable_nodes(i).len() as i64;
            out.add_term(mp.clone(), &coef.shifted(n)?)?;
        }
        Ok(out)
    }

    /// Apply `v^d`: scale each term by `v^{number of 0-nodes}`.
    pub fn vd_op(&self) -> Result<FockVector> {
        let mut out = FockVector::zero(self.charge.clone());
        for (mp, coef) in self.terms() {
            out.add_term(mp.clone(), &coef.shifted(mp.content()[0])?)?;
        }
        Ok(out)
    }

    /// The divided power `fᵢ^{(k)} = fᵢᵏ / [k]!`. The division must be
    /// exact; a remainder signals an implementation bug.
    pub fn divided_f(&self, i: usize, k: u64) -> Result<FockVector> {
        let mut v = self.clone();
        for _ in 0..k {
            v = v.f_op(i)?;
        }
        let fact = quantum_factorial(k as i64)?;
        let mut out = FockVector::zero(self.charge.clone());
        for (mp, coef) in v.terms() {
            let q = coef.exact_div(&fact).map_err(|_| {
                Error::integrity(format!(
                    "divided power f_{i}^({k}) left a remainder at {mp}"
                ))
            })?;
            out.terms.insert(mp.clone(), q);
        }
        Ok(out)
    }

    /// Evaluate a path: apply the divided powers `f_res^{(mult)}` to `|∅⟩`,
    /// first word entry first.
    pub fn eval_path(charge: Multicharge, word: &[(usize, u64)]) -> Result<FockVector> {
        let mut v = FockVector::vacuum(charge);
        for &(residue, mult) in word {
            v = v.divided_f(residue, mult)?;
        }
        Ok(v)
    }

    fn render_ket(mp: &Multipartition) -> String {
        let inner: Vec<String> = mp.components().iter().map(|p| p.to_string()).collect();
        format!("|{}>", inner.join(", "))
    }

    /// Text rendering, largest multipartition first, `q` for the variable:
    /// `|[2], [1]> + q^2*|[1], [1, 1]> + (q^3+q)*|...>`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(mp, coef)| {
                let ket = Self::render_ket(mp);
                if coef.is_one() {
                    ket
                } else if coef.term_count() == 1 && coef.terms().next().unwrap().1 == 1 {
                    format!("{}*{}", coef.render_desc("q"), ket)
                } else {
                    format!("({})*{}", coef.render_desc("q"), ket)
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parse the `render` format (whitespace-insensitive between terms).
    pub fn parse(charge: Multicharge, text: &str) -> Result<FockVector> {
        let mut out = FockVector::zero(charge.clone());
        let trimmed = text.trim();
        if trimmed == "0" {
            return Ok(out);
        }
        for piece in trimmed.split(" + ") {
            let piece = piece.trim();
            let (coef, ket) = match piece.find('|') {
                Some(0) => (LaurentPoly::one(), piece),
                Some(bar) => {
                    let mut head = &piece[..bar];
                    head = head
                        .strip_suffix('*')
                        .ok_or_else(|| Error::domain(format!("missing '*' in term {piece:?}")))?;
                    let head = head
                        .strip_prefix('(')
                        .and_then(|h| h.strip_suffix(')'))
                        .unwrap_or(head);
                    (LaurentPoly::parse(head, 'q')?, &piece[bar..])
                }
                None => return Err(Error::domain(format!("missing ket in term {piece:?}"))),
            };
            let inner = ket
                .strip_prefix('|')
                .and_then(|k| k.strip_suffix('>'))
                .ok_or_else(|| Error::domain(format!("malformed ket in term {piece:?}")))?;
            let mp = Multipartition::parse(charge.clone(), &format!("[{inner}]"))?;
            out.add_term(mp, &coef)?;
        }
        Ok(out)
    }

    /// JSON rendering: a list of `{"mp": [[...], ...], "coef": {...}}`,
    /// largest multipartition first.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(mp, coef)| {
                let comps: Vec<serde_json::Value> = mp
                    .components()
                    .iter()
                    .map(|p| serde_json::json!(p.parts()))
                    .collect();
                serde_json::json!({ "mp": comps, "coef": coef.to_json() })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::quantum_int;
    use crate::weights::{DominantWeight, WeightPoint};

    fn charge23() -> Multicharge {
        Multicharge::from_coeffs(4, &[0, 2, 3, 0]).unwrap()
    }

    fn mp(charge: &Multicharge, text: &str) -> Multipartition {
        Multipartition::parse(charge.clone(), text).unwrap()
    }

    #[test]
    fn f_on_vacuum_spreads_with_ascending_powers() {
        let c = charge23();
        let v = FockVector::vacuum(c.clone()).f_op(2).unwrap();
        assert_eq!(
            v.render(),
            "|[], [], [1], [], []> + q*|[], [], [], [1], []> + q^2*|[], [], [], [], [1]>"
        );

        let w = FockVector::vacuum(c.clone()).f_op(1).unwrap();
        assert_eq!(w.coeff(&mp(&c, "[[1], [], [], [], []]")), LaurentPoly::one());
        assert_eq!(
            w.coeff(&mp(&c, "[[], [1], [], [], []]")),
            LaurentPoly::monomial(1, 1)
        );
    }

    #[test]
    fn second_addition_above_a_removable_costs_inverse_power() {
        let c = charge23();
        let v = FockVector::vacuum(c.clone()).f_op(1).unwrap().f_op(1).unwrap();
        assert_eq!(v.term_count(), 1);
        assert_eq!(
            v.coeff(&mp(&c, "[[1], [1], [], [], []]")),
            quantum_int(2).unwrap()
        );
    }

    #[test]
    fn e_on_vacuum_is_zero_and_ef_gives_quantum_level() {
        let c = charge23();
        let vac = FockVector::vacuum(c.clone());
        assert!(vac.e_op(1).unwrap().is_zero());
        // e₁f₁|∅⟩ = [a₁]|∅⟩ and e₂f₂|∅⟩ = [a₂]|∅⟩.
        let ef1 = vac.f_op(1).unwrap().e_op(1).unwrap();
        assert_eq!(ef1.coeff(&Multipartition::empty(c.clone())), quantum_int(2).unwrap());
        let ef2 = vac.f_op(2).unwrap().e_op(2).unwrap();
        assert_eq!(ef2.coeff(&Multipartition::empty(c.clone())), quantum_int(3).unwrap());
    }

    #[test]
    fn vh_scales_by_hub_component() {
        let c = charge23();
        let vac = FockVector::vacuum(c.clone());
        assert_eq!(
            vac.vh_op(1).unwrap().coeff(&Multipartition::empty(c.clone())),
            LaurentPoly::monomial(2, 1)
        );

        // N(i) equals the hub component of the term's weight, across a few
        // crystal layers.
        let base = DominantWeight::new(4, vec![0, 2, 3, 0]).unwrap();
        let mut layer = vec![Multipartition::empty(c.clone())];
        for _ in 0..4 {
            let mut next: Vec<Multipartition> = layer
                .iter()
                .flat_map(|m| (0..4).filter_map(|i| m.f_tilde(i)).collect::<Vec<_>>())
                .collect();
            next.sort();
            next.dedup();
            for m in &next {
                let hub = WeightPoint::new(base.clone(), m.content(), 0).unwrap().hub();
                for (i, &component) in hub.iter().enumerate() {
                    let n = m.addable_nodes(i).len() as i64 - m.removable_nodes(i).len() as i64;
                    assert_eq!(n, component, "hub mismatch at {m} residue {i}");
                }
            }
            layer = next;
        }
    }

    #[test]
    fn vd_counts_zero_nodes() {
        let c = charge23();
        let vac = FockVector::vacuum(c.clone());
        assert_eq!(vac.vd_op().unwrap(), vac);
        // [[1, 1]] in a 1-corner component has a 0-node at (2, 1).
        let m = mp(&c, "[[1, 1], [], [], [], []]");
        let v = FockVector::unit(m.clone()).vd_op().unwrap();
        assert_eq!(v.coeff(&m), LaurentPoly::monomial(1, 1));
    }

    #[test]
    fn divided_powers() {
        let c = charge23();
        let vac = FockVector::vacuum(c.clone());
        assert_eq!(vac.divided_f(1, 0).unwrap(), vac);
        let f12 = vac.divided_f(1, 2).unwrap();
        assert_eq!(f12.term_count(), 1);
        assert_eq!(
            f12.coeff(&mp(&c, "[[1], [1], [], [], []]")),
            LaurentPoly::one()
        );
        let f23 = vac.divided_f(2, 3).unwrap();
        assert_eq!(f23.term_count(), 1);
        assert_eq!(
            f23.coeff(&mp(&c, "[[], [], [1], [1], [1]]")),
            LaurentPoly::one()
        );
    }

    #[test]
    fn eval_path_examples() {
        let c = charge23();
        assert_eq!(
            FockVector::eval_path(c.clone(), &[]).unwrap(),
            FockVector::vacuum(c.clone())
        );
        let single = FockVector::eval_path(c.clone(), &[(2, 1)]).unwrap();
        assert_eq!(single.term_count(), 3);

        // The two-step path 2¹1²2²: the all-singleton multipartition picks
        // up v² + v⁴ + v⁶.
        let v = FockVector::eval_path(c.clone(), &[(2, 1), (1, 2), (2, 2)]).unwrap();
        let target = mp(&c, "[[1], [1], [1], [1], [1]]");
        assert_eq!(
            v.coeff(&target),
            LaurentPoly::from_pairs(&[(2, 1), (4, 1), (6, 1)]).unwrap()
        );
        assert_eq!(v.homogeneous_content(), Some(vec![0, 2, 3, 0]));
    }

    #[test]
    fn homogeneity_of_path_outputs() {
        let c = charge23();
        for word in [
            vec![(1usize, 1u64)],
            vec![(1, 2), (2, 1)],
            vec![(2, 2), (1, 1), (2, 1)],
            vec![(2, 3), (1, 2), (2, 1), (1, 1)],
        ] {
            let v = FockVector::eval_path(c.clone(), &word).unwrap();
            assert!(v.homogeneous_content().is_some(), "path {word:?}");
        }
    }

    #[test]
    fn parse_inverts_render() {
        let c = charge23();
        for word in [vec![(2usize, 1u64)], vec![(2, 1), (1, 2), (2, 2)]] {
            let v = FockVector::eval_path(c.clone(), &word).unwrap();
            assert_eq!(FockVector::parse(c.clone(), &v.render()).unwrap(), v);
        }
        assert_eq!(
            FockVector::parse(c.clone(), "0").unwrap(),
            FockVector::zero(c.clone())
        );
        assert!(FockVector::parse(c.clone(), "q*").is_err());
        // A coefficient with several terms round-trips through parentheses.
        let m = mp(&c, "[[1], [], [], [], []]");
        let mut v = FockVector::zero(c.clone());
        v.add_term(m, &LaurentPoly::from_pairs(&[(2, 1), (0, 2)]).unwrap()).unwrap();
        assert_eq!(v.render(), "(q^2+2)*|[1], [], [], [], []>");
        assert_eq!(FockVector::parse(c.clone(), &v.render()).unwrap(), v);
    }

    #[test]
    fn charge_mismatch_is_rejected() {
        let c = charge23();
        let other = Multicharge::from_coeffs(4, &[0, 1, 1, 0]).unwrap();
        let v = FockVector::vacuum(c);
        let w = FockVector::vacuum(other);
        assert!(v.add(&w).is_err());
    }
}
