//! Non-recursive closed forms for two-residue faces: the classification of
//! reachable multipartitions at a content point, the counting formula, the
//! word-indexed multipartition construction, the fully expanded two-step
//! path vector, and shape generating functions — all written against the
//! combinatorics of binary words, sharing no code with the recursive
//! machinery they are tested against.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partitions::{Multicharge, Multipartition, Partition};
use crate::fock::FockVector;
use crate::qpoly::{gauss_binom, inv_excl, inv_rel, BinaryWord, LaurentPoly};
use crate::weights::in_face_region;

/// Parameters of one content point `(j₁, j₂)` on the two-residue face with
/// interval coefficients `a₁, a₂` (all other base coefficients zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceParams {
    e: usize,
    a1: i64,
    a2: i64,
    j1: i64,
    j2: i64,
}

impl FaceParams {
    pub fn new(e: usize, a1: i64, a2: i64, j1: i64, j2: i64) -> Result<Self> {
        if e < 3 {
            return Err(Error::domain("two-residue faces need at least three residues"));
        }
        if a1 < 0 || a2 < 0 || a1 + a2 == 0 {
            return Err(Error::domain("interval coefficients must be nonnegative, not both zero"));
        }
        if !in_face_region(a1, a2, j1, j2) {
            return Err(Error::domain(format!(
                "content ({j1}, {j2}) lies outside the ({a1}, {a2}) face"
            )));
        }
        Ok(FaceParams { e, a1, a2, j1, j2 })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn a1(&self) -> i64 {
        self.a1
    }

    pub fn a2(&self) -> i64 {
        self.a2
    }

    pub fn j1(&self) -> i64 {
        self.j1
    }

    pub fn j2(&self) -> i64 {
        self.j2
    }

    /// The multicharge: `a₁` corner-1 components above `a₂` corner-2 ones.
    pub fn charge(&self) -> Result<Multicharge> {
        let mut a = vec![0i64; self.e];
        a[1] = self.a1;
        a[2] = self.a2;
        Multicharge::from_coeffs(self.e, &a)
    }
}

/// One reachable multipartition at a face content point: its class index
/// `w`, the multipartition itself, and a crystal path landing on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceClass {
    pub w: i64,
    pub mu: Multipartition,
    pub path: Vec<(usize, u64)>,
    pub u: i64,
}

/// Enumerate the reachable multipartitions with content `(j₁, j₂)`: one for
/// each `w` between `max(0, j₂−a₂)` and `min(t, j₂, a₁+j₂−j₁)`, where
/// `t = min(a₁, j₁)`. Class `w` puts `w` two-node rows and `t−w` single
/// nodes on the top components, and `j₁−t` angles plus `j₂−w−(j₁−t)` single
/// nodes on the bottom ones; it is reached by the path
/// `2ᵘ 1^{j₁} 2^{j₂−u}` with `u = min(j₁−w, j₂−w)`.
pub fn classify_face_mps(p: &FaceParams) -> Result<Vec<FaceClass>> {
    let charge = p.charge()?;
    let t = p.a1.min(p.j1);
    let x = (p.j1 - p.a1).max(0);
    let lo = (p.j2 - p.a2).max(0);
    let hi = t.min(p.j2).min(p.a1 + p.j2 - p.j1);
    let mut out = Vec::new();
    for w in lo..=hi {
        let mut comps: Vec<Partition> = Vec::with_capacity((p.a1 + p.a2) as usize);
        for k in 0..p.a1 {
            comps.push(if k < w {
                Partition::new(vec![2])?
            } else if k < t {
                Partition::new(vec![1])?
            } else {
                Partition::empty()
            });
        }
        let singles = p.j2 - w - x;
        for k in 0..p.a2 {
            comps.push(if k < x {
                Partition::new(vec![1, 1])?
            } else if k < x + singles {
                Partition::new(vec![1])?
            } else {
                Partition::empty()
            });
        }
        let mu = Multipartition::new(charge.clone(), comps)?;
        let u = (p.j1 - w).min(p.j2 - w);
        let path: Vec<(usize, u64)> = [(2usize, u as u64), (1, p.j1 as u64), (2, (p.j2 - u) as u64)]
            .into_iter()
            .filter(|&(_, mult)| mult > 0)
            .collect();
        out.push(FaceClass { w, mu, path, u });
    }
    Ok(out)
}

/// The number of reachable multipartitions at the content point, by the
/// reflected-coordinate formula.
pub fn count_face_mps(p: &FaceParams) -> i64 {
    let j1r = p.a1 + p.a2.min(p.j2) - p.j1;
    let j2r = p.a2 + p.a1.min(p.j1) - p.j2;
    if p.j2 <= p.a2 {
        p.j1.min(p.j2).min(p.a1).min(j1r) + 1
    } else {
        j2r.min(p.a2).min(j1r) + 1
    }
}

/// A choice of binary words indexing one term family of the expanded path
/// vector: `T` marks the occupied top components (`W ⊆ T` the two-node
/// rows), `S` the occupied bottom components (`X ⊆ S` the angles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwsxChoice {
    pub t_word: BinaryWord,
    pub w_word: BinaryWord,
    pub s_word: BinaryWord,
    pub x_word: BinaryWord,
    pub u: i64,
}

impl TwsxChoice {
    /// Check the word lengths, containments, and count windows against the
    /// face parameters and the path split `u`.
    pub fn validate(&self, p: &FaceParams) -> Result<()> {
        if self.t_word.len() as i64 != p.a1 || self.w_word.len() as i64 != p.a1 {
            return Err(Error::domain("top words must have length a1"));
        }
        if self.s_word.len() as i64 != p.a2 || self.x_word.len() as i64 != p.a2 {
            return Err(Error::domain("bottom words must have length a2"));
        }
        if !self.t_word.contains(&self.w_word) {
            return Err(Error::domain("W must be a subword of T"));
        }
        if !self.s_word.contains(&self.x_word) {
            return Err(Error::domain("X must be a subword of S"));
        }
        if self.u < 0 || self.u > p.a2.min(p.j2) {
            return Err(Error::domain("path split u out of range"));
        }
        let t = self.t_word.ones() as i64;
        if t < (p.j1 - self.u).max(0) || t > p.a1.min(p.j1) {
            return Err(Error::domain("top occupation count out of range"));
        }
        if self.x_word.ones() as i64 != p.j1 - t {
            return Err(Error::domain("angle count must complete j1"));
        }
        let w = self.w_word.ones() as i64;
        if w < (p.j2 - p.a2).max(0) || w > t.min(p.j2 - self.u) {
            return Err(Error::domain("two-node row count out of range"));
        }
        if self.s_word.ones() as i64 != p.j2 - w {
            return Err(Error::domain("bottom occupation count must complete j2"));
        }
        Ok(())
    }

    /// The multipartition the choice describes: a two-node row on each `W`
    /// component, a single node on each `T−W` one, an angle on each `X`
    /// component, a single node on each `S−X` one. Word position 1 is the
    /// topmost component of its group.
    pub fn tau_mp(&self, p: &FaceParams) -> Result<Multipartition> {
        self.validate(p)?;
        let charge = p.charge()?;
        let mut comps: Vec<Partition> = Vec::with_capacity((p.a1 + p.a2) as usize);
        for k in 0..p.a1 as usize {
            comps.push(if self.w_word.bit(k) {
                Partition::new(vec![2])?
            } else if self.t_word.bit(k) {
                Partition::new(vec![1])?
            } else {
                Partition::empty()
            });
        }
        for k in 0..p.a2 as usize {
            comps.push(if self.x_word.bit(k) {
                Partition::new(vec![1, 1])?
            } else if self.s_word.bit(k) {
                Partition::new(vec![1])?
            } else {
                Partition::empty()
            });
        }
        Multipartition::new(charge, comps)
    }
}

/// Positionwise union of two binary words of equal length.
fn word_union(a: &BinaryWord, b: &BinaryWord) -> BinaryWord {
    let bits = a
        .bits()
        .iter()
        .zip(b.bits())
        .map(|(&x, &y)| x || y)
        .collect();
    BinaryWord::new(bits)
}

/// The fully expanded path vector `f₂^{(j₂−u)} f₁^{(j₁)} f₂^{(u)} |∅⟩`,
/// written directly as a word-indexed sum with explicit exponents — no
/// operator is ever applied. Sums `v^{E(T,W)} (Σ_U v^{E(S,U,X)})` over all
/// valid `(T, W, S, X)`, with `U` running over words between `X` and `S`
/// with `u` ones.
pub fn closed_fock(p: &FaceParams, u: i64) -> Result<FockVector> {
    if u < 0 || u > p.a2.min(p.j2) {
        return Err(Error::domain("path split u out of range"));
    }
    let charge = p.charge()?;
    let mut out = FockVector::zero(charge);
    let t_hi = p.a1.min(p.j1);
    let t_lo = (p.j1 - u).max(0);
    for t in t_lo..=t_hi {
        let x = p.j1 - t;
        if x > p.a2 {
            continue;
        }
        let e_x = (p.a1 - t) * (p.j1 - t);
        let w_lo = (p.j2 - p.a2).max(0);
        let w_hi = t.min(p.j2 - u);
        for w in w_lo..=w_hi {
            let e_s = (t - w) * (p.j2 - u - w);
            for t_word in BinaryWord::all(p.a1 as usize, t as usize) {
                let base_top = t_word.coinversions() as i64 + e_x + e_s;
                for w_word in t_word.subwords(w as usize) {
                    let e_tw = base_top + inv_rel(&w_word, &t_word)? as i64;
                    for s_word in BinaryWord::all(p.a2 as usize, (p.j2 - w) as usize) {
                        for x_word in s_word.subwords(x as usize) {
                            let mut inner = LaurentPoly::zero();
                            let extra = s_word.minus(&x_word)?;
                            for more in extra.subwords((u - x) as usize) {
                                let u_word = word_union(&x_word, &more);
                                let e_sux = u_word.coinversions() as i64
                                    + inv_rel(&x_word, &u_word)? as i64
                                    + inv_excl(&s_word, &u_word, &x_word)?;
                                inner = inner.add(&LaurentPoly::monomial(e_sux, 1))?;
                            }
                            if inner.is_zero() {
                                continue;
                            }
                            let choice = TwsxChoice {
                                t_word: t_word.clone(),
                                w_word: w_word.clone(),
                                s_word: s_word.clone(),
                                x_word: x_word.clone(),
                                u,
                            };
                            let mp = choice.tau_mp(p)?;
                            let coef = inner.shifted(e_tw)?;
                            out.add_term(mp, &coef)?;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Shape generating function of the two-step path `f₁^{(j₁)} f₂^{(u)} |∅⟩`:
/// the product of the two Gaussian binomials for the steps.
pub fn two_step_shape(a1: i64, a2: i64, u: i64, j1: i64) -> Result<LaurentPoly> {
    if u < 0 || u > a2 {
        return Err(Error::domain("second-residue step must fit its components"));
    }
    if j1 < 0 || j1 > a1 + u {
        return Err(Error::domain("first-residue step must fit its slots"));
    }
    gauss_binom(a2, u)?.mul(&gauss_binom(a1 + u, j1)?)
}

/// Coefficient of `z^t` in the Gaussian binomial `(a ¦ j)_z`, by the Pascal
/// recursion `s(a,j,t) = s(a−1,j−1,t) + s(a−1,j,t−j)`; zero outside
/// `0 ≤ t ≤ j(a−j)`.
pub fn s_value(a: i64, j: i64, t: i64) -> Result<u64> {
    fn rec(a: i64, j: i64, t: i64, memo: &mut HashMap<(i64, i64, i64), u128>) -> u128 {
        if j < 0 || t < 0 || j > a {
            return 0;
        }
        if a == 0 {
            return u128::from(j == 0 && t == 0);
        }
        if let Some(&hit) = memo.get(&(a, j, t)) {
            return hit;
        }
        let value = rec(a - 1, j - 1, t, memo) + rec(a - 1, j, t - j, memo);
        memo.insert((a, j, t), value);
        value
    }
    if a < 0 {
        return Ok(0);
    }
    let mut memo = HashMap::new();
    u64::try_from(rec(a, j, t, &mut memo)).map_err(|_| Error::Overflow("shape coefficient"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::CanonicalCtx;
    use crate::crystal::{build_crystal, FaceSpec};
    use crate::weights::DominantWeight;

    #[test]
    fn shape_coefficients_match_their_generating_function() {
        assert_eq!(s_value(2, 1, 0).unwrap(), 1);
        assert_eq!(s_value(2, 1, 1).unwrap(), 1);
        assert_eq!(s_value(4, 2, 2).unwrap(), 2);
        for t in 0..=2 {
            assert_eq!(s_value(3, 1, t).unwrap(), 1);
        }
        assert_eq!(s_value(3, 1, 3).unwrap(), 0);
        for a in 0..=7i64 {
            for j in 0..=a {
                let g = gauss_binom(a, j).unwrap();
                for t in -1..=(j * (a - j) + 1) {
                    assert_eq!(
                        s_value(a, j, t).unwrap() as i64,
                        g.coeff(t),
                        "s({a},{j},{t})"
                    );
                    assert_eq!(s_value(a, j, t).unwrap(), s_value(a, a - j, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn classification_at_the_printed_example() {
        let p = FaceParams::new(4, 2, 3, 2, 3).unwrap();
        let classes = classify_face_mps(&p).unwrap();
        assert_eq!(classes.iter().map(|c| c.w).collect::<Vec<_>>(), vec![0, 1, 2]);
        let charge = p.charge().unwrap();
        let w1 = &classes[1];
        assert_eq!(
            w1.mu,
            Multipartition::parse(charge.clone(), "[[2], [1], [1], [1], []]").unwrap()
        );
        assert_eq!(w1.u, 1);
        assert_eq!(w1.path, vec![(2, 1), (1, 2), (2, 2)]);
        let w2 = &classes[2];
        assert_eq!(
            w2.mu,
            Multipartition::parse(charge.clone(), "[[2], [2], [1], [], []]").unwrap()
        );
        assert_eq!(w2.u, 0);
        assert_eq!(count_face_mps(&p), 3);
    }

    #[test]
    fn deeper_content_points_shrink_the_class_range() {
        // At (4, 6) three classes survive; one step further, at (4, 7),
        // only two do, because the bottom components saturate.
        let p6 = FaceParams::new(4, 3, 5, 4, 6).unwrap();
        let c6 = classify_face_mps(&p6).unwrap();
        assert_eq!(c6.iter().map(|c| c.w).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(count_face_mps(&p6), 3);
        let charge = p6.charge().unwrap();
        assert_eq!(
            c6[2].mu,
            Multipartition::parse(
                charge.clone(),
                "[[2], [2], [2], [1, 1], [1], [1], [], []]"
            )
            .unwrap()
        );

        let p7 = FaceParams::new(4, 3, 5, 4, 7).unwrap();
        let c7 = classify_face_mps(&p7).unwrap();
        assert_eq!(c7.iter().map(|c| c.w).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(count_face_mps(&p7), 2);

        // Brute force over the crystal confirms both counts.
        for (p, expected) in [(&p6, 3u64), (&p7, 2u64)] {
            let base = DominantWeight::new(4, vec![0, p.a1(), p.a2(), 0]).unwrap();
            let graph = FaceSpec::new(base, vec![1, 2]).unwrap().crystal(false).unwrap();
            let idx = graph.vertex_by_content(&[0, p.j1(), p.j2(), 0]).unwrap();
            assert_eq!(graph.vertices()[idx].count, expected);
        }
    }

    #[test]
    fn single_string_contents_have_one_class() {
        let p = FaceParams::new(4, 2, 3, 0, 2).unwrap();
        let classes = classify_face_mps(&p).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].w, 0);
        assert_eq!(
            classes[0].mu,
            Multipartition::parse(p.charge().unwrap(), "[[], [], [1], [1], []]").unwrap()
        );
        assert_eq!(count_face_mps(&FaceParams::new(5, 3, 2, 0, 0).unwrap()), 1);
    }

    #[test]
    fn counting_formula_examples() {
        assert_eq!(count_face_mps(&FaceParams::new(4, 3, 2, 2, 2).unwrap()), 3);
        assert_eq!(count_face_mps(&FaceParams::new(4, 3, 2, 3, 5).unwrap()), 1);
    }

    #[test]
    fn every_class_is_reachable_by_its_path() {
        for a1 in 0..=3i64 {
            for a2 in 0..=3i64 {
                if a1 + a2 == 0 {
                    continue;
                }
                for j1 in 0..=(a1 + a2) {
                    for j2 in 0..=(a1 + a2) {
                        if !in_face_region(a1, a2, j1, j2) {
                            continue;
                        }
                        let p = FaceParams::new(4, a1, a2, j1, j2).unwrap();
                        let classes = classify_face_mps(&p).unwrap();
                        assert_eq!(classes.len() as i64, count_face_mps(&p));
                        let empty = Multipartition::empty(p.charge().unwrap());
                        for class in &classes {
                            assert!(class.mu.is_e_regular(), "unreachable {}", class.mu);
                            assert_eq!(class.mu.content()[1], j1);
                            assert_eq!(class.mu.content()[2], j2);
                            let landed = empty.apply_f_path(&class.path).unwrap();
                            assert_eq!(landed, class.mu, "path missed its class at w={}", class.w);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classes_exhaust_the_crystal_multiplicity() {
        // Small two-residue faces: the classified multipartitions are
        // exactly the ones the crystal reaches.
        for (a1, a2) in [(1i64, 1i64), (2, 1), (1, 2), (2, 2)] {
            let base = DominantWeight::new(4, vec![0, a1, a2, 0]).unwrap();
            let graph = FaceSpec::new(base, vec![1, 2]).unwrap().crystal(true).unwrap();
            for v in graph.vertices() {
                let p = FaceParams::new(4, a1, a2, v.content[1], v.content[2]).unwrap();
                let mut classified: Vec<Multipartition> =
                    classify_face_mps(&p).unwrap().into_iter().map(|c| c.mu).collect();
                classified.sort();
                assert_eq!(v.mps.as_deref().unwrap(), &classified[..]);
            }
        }
    }

    #[test]
    fn word_indexed_multipartitions() {
        let p = FaceParams::new(4, 2, 3, 2, 3).unwrap();
        let charge = p.charge().unwrap();
        let angled = TwsxChoice {
            t_word: BinaryWord::parse("10").unwrap(),
            w_word: BinaryWord::parse("10").unwrap(),
            s_word: BinaryWord::parse("110").unwrap(),
            x_word: BinaryWord::parse("100").unwrap(),
            u: 1,
        };
        assert_eq!(
            angled.tau_mp(&p).unwrap(),
            Multipartition::parse(charge.clone(), "[[2], [], [1, 1], [1], []]").unwrap()
        );
        let leader = TwsxChoice {
            t_word: BinaryWord::parse("11").unwrap(),
            w_word: BinaryWord::parse("10").unwrap(),
            s_word: BinaryWord::parse("110").unwrap(),
            x_word: BinaryWord::parse("000").unwrap(),
            u: 1,
        };
        assert_eq!(
            leader.tau_mp(&p).unwrap(),
            Multipartition::parse(charge.clone(), "[[2], [1], [1], [1], []]").unwrap()
        );

        // Violations are rejected: W ⊄ T, wrong bottom count, bad u.
        let mut bad = angled.clone();
        bad.w_word = BinaryWord::parse("01").unwrap();
        assert!(bad.tau_mp(&p).is_err());
        let mut bad = leader.clone();
        bad.s_word = BinaryWord::parse("100").unwrap();
        assert!(bad.tau_mp(&p).is_err());
        let mut bad = leader;
        bad.u = 4;
        assert!(bad.tau_mp(&p).is_err());
    }

    #[test]
    fn expanded_vector_matches_the_operator_product() {
        // The expansion never applies an operator; the recursive engine
        // never sees a word. They must still agree exactly.
        for (a1, a2, j1, j2, u) in [
            (2i64, 3i64, 2i64, 3i64, 1i64),
            (2, 3, 2, 3, 0),
            (2, 3, 2, 3, 3),
            (1, 2, 1, 2, 1),
            (3, 2, 4, 3, 2),
            (2, 2, 3, 2, 1),
        ] {
            let p = FaceParams::new(4, a1, a2, j1, j2).unwrap();
            let direct = closed_fock(&p, u).unwrap();
            let word: Vec<(usize, u64)> = [(2usize, u as u64), (1, j1 as u64), (2, (j2 - u) as u64)]
                .into_iter()
                .filter(|&(_, m)| m > 0)
                .collect();
            let oracle = FockVector::eval_path(p.charge().unwrap(), &word).unwrap();
            assert_eq!(direct, oracle, "at ({a1},{a2},{j1},{j2}) u={u}");
        }
    }

    #[test]
    fn expanded_vector_agrees_when_the_interval_wraps_tight() {
        // Three residues only: the two face residues are cyclically doubly
        // adjacent, which must not disturb the expansion.
        for u in 0..=2i64 {
            let p = FaceParams::new(3, 2, 2, 2, 2).unwrap();
            let direct = closed_fock(&p, u).unwrap();
            let word: Vec<(usize, u64)> = [(2usize, u as u64), (1, 2u64), (2, (2 - u) as u64)]
                .into_iter()
                .filter(|&(_, m)| m > 0)
                .collect();
            let oracle = FockVector::eval_path(p.charge().unwrap(), &word).unwrap();
            assert_eq!(direct, oracle, "e=3, u={u}");
        }
    }

    #[test]
    fn single_string_expansion_is_the_word_sum() {
        // With nothing on the top components the expansion collapses to one
        // word family.
        let p = FaceParams::new(4, 2, 3, 0, 2).unwrap();
        let v = closed_fock(&p, 0).unwrap();
        let charge = p.charge().unwrap();
        let mut expected = FockVector::zero(charge.clone());
        for s in BinaryWord::all(3, 2) {
            let choice = TwsxChoice {
                t_word: BinaryWord::parse("00").unwrap(),
                w_word: BinaryWord::parse("00").unwrap(),
                s_word: s.clone(),
                x_word: BinaryWord::parse("000").unwrap(),
                u: 0,
            };
            expected
                .add_term(
                    choice.tau_mp(&p).unwrap(),
                    &LaurentPoly::monomial(s.coinversions() as i64, 1),
                )
                .unwrap();
        }
        assert_eq!(v, expected);
    }

    #[test]
    fn two_step_shapes() {
        let square = LaurentPoly::from_pairs(&[(0, 1), (1, 2), (2, 3), (3, 2), (4, 1)]).unwrap();
        assert_eq!(two_step_shape(2, 3, 1, 2).unwrap(), square);
        assert_eq!(two_step_shape(3, 2, 0, 2).unwrap(), gauss_binom(3, 2).unwrap());
        assert!(two_step_shape(3, 2, 2, 0).unwrap().is_one());
        assert!(two_step_shape(1, 1, 2, 0).is_err());
        assert!(two_step_shape(1, 1, 1, 3).is_err());

        // The product formula is the shape of the actual two-step vector.
        for a1 in 0..=3i64 {
            for a2 in 0..=3i64 {
                if a1 + a2 == 0 {
                    continue;
                }
                let mut a = vec![0i64; 4];
                a[1] = a1;
                a[2] = a2;
                let charge = Multicharge::from_coeffs(4, &a).unwrap();
                for u in 0..=a2 {
                    for j1 in 0..=(a1 + u) {
                        let word: Vec<(usize, u64)> =
                            [(2usize, u as u64), (1, j1 as u64)]
                                .into_iter()
                                .filter(|&(_, m)| m > 0)
                                .collect();
                        let v = FockVector::eval_path(charge.clone(), &word).unwrap();
                        assert_eq!(
                            v.shape().unwrap(),
                            two_step_shape(a1, a2, u, j1).unwrap(),
                            "({a1},{a2}) u={u} j1={j1}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sector_polynomials_sum_to_the_leading_shape() {
        // The four grading sectors of the printed three-step example add up
        // to the shape of the canonical element leading its expansion.
        let sectors = [
            LaurentPoly::from_pairs(&[(0, 1), (1, 2), (2, 2), (3, 1)]).unwrap(),
            LaurentPoly::from_pairs(&[(2, 1), (4, 1)]).unwrap(),
            LaurentPoly::from_pairs(&[(1, 1), (2, 3), (3, 4), (4, 3), (5, 1)]).unwrap(),
            LaurentPoly::from_pairs(&[(3, 1), (4, 2), (5, 2), (6, 1)]).unwrap(),
        ];
        let mut total = LaurentPoly::zero();
        for s in &sectors {
            total = total.add(s).unwrap();
        }
        let p = FaceParams::new(4, 2, 3, 2, 3).unwrap();
        let charge = p.charge().unwrap();
        let mut ctx = CanonicalCtx::new(charge.clone());
        let leader = Multipartition::parse(charge, "[[2], [1], [1], [1], []]").unwrap();
        assert_eq!(ctx.shape_of(&leader).unwrap(), total);
    }

    #[test]
    fn face_region_gate() {
        assert!(FaceParams::new(4, 3, 2, 6, 0).is_err());
        assert!(FaceParams::new(2, 1, 1, 0, 0).is_err());
        assert!(FaceParams::new(4, 0, 0, 0, 0).is_err());
        // An unrestricted crystal reaches contents the face cannot.
        let base = DominantWeight::new(4, vec![0, 1, 1, 0]).unwrap();
        let graph = build_crystal(&base, 3, None, false).unwrap();
        assert!(graph.vertices().iter().any(|v| v.content[0] > 0));
    }
}
