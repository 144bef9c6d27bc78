//! Exact Laurent-polynomial arithmetic over the integers, balanced quantum
//! integers and factorials, Gaussian binomials, and inversion statistics on
//! binary words.
//!
//! One polynomial type serves two roles: coefficients of Fock-space vectors
//! (variable `v`, rendered as `q`, exponents of either sign) and shape
//! polynomials (variable `z`, nonnegative exponents). Coefficients are
//! 64-bit signed with checked arithmetic throughout — overflow is an error,
//! never a wraparound.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_k x^k` with integer coefficients, stored sparsely
/// with ascending exponents. No zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// The single term `c·x^k` (zero when `c == 0`).
    pub fn monomial(exp: i64, coef: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exp, coef);
        }
        LaurentPoly { terms }
    }

    /// Build from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for &(exp, coef) in pairs {
            p.add_term(exp, coef)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0) == 1
    }

    /// Coefficient of `x^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Term iterator in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of coefficients, i.e. the evaluation at `x = 1`.
    pub fn eval_one(&self) -> Result<i64> {
        let mut acc: i64 = 0;
        for (_, c) in self.terms() {
            acc = acc.checked_add(c).ok_or(Error::Overflow("eval_one"))?;
        }
        Ok(acc)
    }

    fn add_term(&mut self, exp: i64, coef: i64) -> Result<()> {
        if coef == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry
            .checked_add(coef)
            .ok_or(Error::Overflow("polynomial addition"))?;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = self.clone();
        for (exp, coef) in other.terms() {
            out.add_term(exp, coef)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = self.clone();
        for (exp, coef) in other.terms() {
            out.add_term(exp, coef.checked_neg().ok_or(Error::Overflow("negation"))?)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        // i64::MIN coefficients cannot arise: every stored value was produced
        // by checked arithmetic from desk-scale inputs.
        let terms = self.terms.iter().map(|(&e, &c)| (e, -c)).collect();
        LaurentPoly { terms }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let exp = e1.checked_add(e2).ok_or(Error::Overflow("exponent addition"))?;
                let coef = c1.checked_mul(c2).ok_or(Error::Overflow("coefficient product"))?;
                out.add_term(exp, coef)?;
            }
        }
        Ok(out)
    }

    /// Multiply by the scalar `c`.
    pub fn scaled(&self, c: i64) -> Result<LaurentPoly> {
        self.mul(&LaurentPoly::monomial(0, c))
    }

    /// Multiply by `x^k`.
    pub fn shifted(&self, k: i64) -> Result<LaurentPoly> {
        self.mul(&LaurentPoly::monomial(k, 1))
    }

    /// The bar involution `x ↦ x^{-1}` (exponent negation).
    pub fn bar(&self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(&e, &c)| (-e, c)).collect();
        LaurentPoly { terms }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.bar() == *self
    }

    /// Exact division: returns `q` with `self = q·d`, or an integrity error
    /// when the division leaves a remainder. Division by zero is a domain
    /// error.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // In an exact division every quotient exponent lies between
        // min_exp(self)-min_exp(d) and max_exp(self)-max_exp(d); falling below
        // the lower bound proves the division inexact and stops what would
        // otherwise be an infinite Laurent-series expansion.
        let low = self.min_exp().unwrap() - d.min_exp().unwrap();
        let (de, dc) = (d.max_exp().unwrap(), d.coeff(d.max_exp().unwrap()));
        let mut quot = LaurentPoly::zero();
        let mut rem = self.clone();
        while let Some(re) = rem.max_exp() {
            let rc = rem.coeff(re);
            let exp = re - de;
            if rc % dc != 0 || exp < low {
                return Err(Error::integrity("inexact polynomial division"));
            }
            let t = LaurentPoly::monomial(exp, rc / dc);
            quot = quot.add(&t)?;
            rem = rem.sub(&t.mul(d)?)?;
        }
        Ok(quot)
    }

    /// Split into `(beta, rest)`: `beta` is the unique bar-symmetric
    /// polynomial agreeing with `self` on all exponents ≤ 0, and
    /// `rest = self − beta` is supported on strictly positive exponents.
    pub fn bar_symmetric_part(&self) -> Result<(LaurentPoly, LaurentPoly)> {
        let mut beta = LaurentPoly::zero();
        for (exp, coef) in self.terms() {
            if exp < 0 {
                beta.add_term(exp, coef)?;
                beta.add_term(-exp, coef)?;
            } else if exp == 0 {
                beta.add_term(0, coef)?;
            }
        }
        let rest = self.sub(&beta)?;
        Ok((beta, rest))
    }

    /// Render with descending exponents, the coefficient style of Fock-space
    /// output: `q^4+q^2`, `q+q^-1`, `2q^2-1`, `0`.
    pub fn render_desc(&self, var: &str) -> String {
        self.render(var, true)
    }

    /// Render with ascending exponents, the shape-polynomial style:
    /// `1+z+z^2`.
    pub fn render_asc(&self, var: &str) -> String {
        self.render(var, false)
    }

    fn render(&self, var: &str, descending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let terms: Vec<(i64, i64)> = if descending {
            self.terms().rev().collect()
        } else {
            self.terms().collect()
        };
        for (idx, (exp, coef)) in terms.into_iter().enumerate() {
            let neg = coef < 0;
            let mag = coef.unsigned_abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let power = match exp {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&power);
            }
        }
        out
    }

    /// Parse the rendered form back: a sum of terms like `q^4`, `-2q`, `7`,
    /// `q^-1`, with `var` naming the variable. Whitespace is ignored.
    pub fn parse(text: &str, var: char) -> Result<LaurentPoly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::domain("empty polynomial text"));
        }
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        while pos < chars.len() {
            let mut sign = 1i64;
            while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
                if chars[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let digits_start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let coef_mag: i64 = if digits_start == pos {
                1
            } else {
                chars[digits_start..pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::domain("invalid polynomial coefficient"))?
            };
            let mut exp = 0i64;
            if pos < chars.len() && chars[pos] == var {
                pos += 1;
                exp = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let exp_start = pos;
                    if pos < chars.len() && chars[pos] == '-' {
                        pos += 1;
                    }
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    exp = chars[exp_start..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| Error::domain("invalid polynomial exponent"))?;
                }
            } else if digits_start == pos {
                return Err(Error::domain(format!("invalid polynomial text {text:?}")));
            }
            out.add_term(exp, sign * coef_mag)?;
        }
        Ok(out)
    }

    /// JSON form `{"terms": [[exponent, coefficient], ...]}`, exponents
    /// ascending.
    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, c)| serde_json::json!([e, c]))
            .collect();
        serde_json::json!({ "terms": pairs })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LaurentPoly> {
        let pairs = value
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::domain("polynomial JSON must have a \"terms\" array"))?;
        let mut out = LaurentPoly::zero();
        for pair in pairs {
            let entry = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::domain("polynomial term must be [exponent, coefficient]"))?;
            let exp = entry[0]
                .as_i64()
                .ok_or_else(|| Error::domain("polynomial exponent must be an integer"))?;
            let coef = entry[1]
                .as_i64()
                .ok_or_else(|| Error::domain("polynomial coefficient must be an integer"))?;
            out.add_term(exp, coef)?;
        }
        Ok(out)
    }
}

/// The balanced quantum integer `[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}`.
pub fn quantum_int(n: i64) -> Result<LaurentPoly> {
    if n <= 0 {
        return Err(Error::domain(format!("quantum integer requires n ≥ 1, got {n}")));
    }
    let mut p = LaurentPoly::zero();
    let mut exp = n - 1;
    while exp >= 1 - n {
        p.add_term(exp, 1)?;
        exp -= 2;
    }
    Ok(p)
}

/// The quantum factorial `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn quantum_factorial(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::domain(format!("quantum factorial requires n ≥ 0, got {n}")));
    }
    let mut p = LaurentPoly::one();
    for k in 1..=n {
        p = p.mul(&quantum_int(k)?)?;
    }
    Ok(p)
}

/// The Gaussian binomial coefficient as a polynomial in `z` with nonnegative
/// exponents; zero when `j < 0` or `j > a`. Degree is `j(a−j)`.
///
/// Computed by the Pascal-type recursion
/// `s(a,j,t) = s(a−1,j−1,t) + s(a−1,j,t−j)` entirely in integer arithmetic;
/// as polynomials, `P(a,j) = P(a−1,j−1) + z^j · P(a−1,j)`.
pub fn gauss_binom(a: i64, j: i64) -> Result<LaurentPoly> {
    if a < 0 {
        return Err(Error::domain(format!("gauss_binom requires a ≥ 0, got {a}")));
    }
    if j < 0 || j > a {
        return Ok(LaurentPoly::zero());
    }
    // row[j'] holds the polynomial for the current word length.
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for _b in 1..=a {
        let mut next = Vec::with_capacity(row.len() + 1);
        for jp in 0..row.len() + 1 {
            let from_smaller = if jp >= 1 { row[jp - 1].clone() } else { LaurentPoly::zero() };
            let shifted = if jp < row.len() {
                row[jp].shifted(jp as i64)?
            } else {
                LaurentPoly::zero()
            };
            next.push(from_smaller.add(&shifted)?);
        }
        row = next;
    }
    Ok(row[j as usize].clone())
}

/// A word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryWord { bits }
    }

    /// Parse from a string of `0`/`1` digits.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::domain(format!("invalid binary digit {other:?}"))),
            }
        }
        Ok(BinaryWord { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn bit(&self, idx: usize) -> bool {
        self.bits[idx]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Indices (0-based) of the `1` digits.
    pub fn one_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.bits[i]).collect()
    }

    pub fn reversed(&self) -> BinaryWord {
        let mut bits = self.bits.clone();
        bits.reverse();
        BinaryWord { bits }
    }

    /// True when every `1` of `other` is a `1` of `self` (equal lengths).
    pub fn contains(&self, other: &BinaryWord) -> bool {
        self.len() == other.len()
            && self.bits.iter().zip(&other.bits).all(|(&s, &o)| s || !o)
    }

    /// Positionwise difference of 1-sets; `other` must be contained in `self`.
    pub fn minus(&self, other: &BinaryWord) -> Result<BinaryWord> {
        if !self.contains(other) {
            return Err(Error::domain("word difference requires containment"));
        }
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(&s, &o)| s && !o)
            .collect();
        Ok(BinaryWord { bits })
    }

    /// All words of length `len` with `ones` ones, in lexicographic order of
    /// their 1-position sets. Empty when `ones > len`.
    pub fn all(len: usize, ones: usize) -> Vec<BinaryWord> {
        if ones > len {
            return Vec::new();
        }
        use itertools::Itertools;
        (0..len)
            .combinations(ones)
            .map(|pos| {
                let mut bits = vec![false; len];
                for p in pos {
                    bits[p] = true;
                }
                BinaryWord { bits }
            })
            .collect()
    }

    /// All subwords of `self` (1-sets contained in self's) with exactly
    /// `ones` ones.
    pub fn subwords(&self, ones: usize) -> Vec<BinaryWord> {
        use itertools::Itertools;
        self.one_positions()
            .into_iter()
            .combinations(ones)
            .map(|pos| {
                let mut bits = vec![false; self.len()];
                for p in pos {
                    bits[p] = true;
                }
                BinaryWord { bits }
            })
            .collect()
    }

    /// All words of the same length containing `self` with exactly `ones`
    /// ones in total.
    pub fn superwords(&self, ones: usize) -> Vec<BinaryWord> {
        use itertools::Itertools;
        let have = self.ones();
        if ones < have {
            return Vec::new();
        }
        let zeros: Vec<usize> = (0..self.len()).filter(|&i| !self.bits[i]).collect();
        zeros
            .into_iter()
            .combinations(ones - have)
            .map(|extra| {
                let mut bits = self.bits.clone();
                for p in extra {
                    bits[p] = true;
                }
                BinaryWord { bits }
            })
            .collect()
    }

    /// Number of pairs `(i, j)` with `i < j`, digit `1` at `i` and `0` at `j`.
    pub fn inversions(&self) -> u64 {
        let mut ones_seen = 0u64;
        let mut total = 0u64;
        for &b in &self.bits {
            if b {
                ones_seen += 1;
            } else {
                total += ones_seen;
            }
        }
        total
    }

    /// Number of pairs `(i, j)` with `i < j`, digit `0` at `i` and `1` at `j`
    /// — the inversion count read from the opposite end
    /// (`self.reversed().inversions()`).
    pub fn coinversions(&self) -> u64 {
        let mut zeros_seen = 0u64;
        let mut total = 0u64;
        for &b in &self.bits {
            if b {
                total += zeros_seen;
            } else {
                zeros_seen += 1;
            }
        }
        total
    }
}

impl std::fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Relative inversions: for each `1` of `t`, count the `1`s of `s − t`
/// strictly before it. Requires `t ⊆ s` with equal lengths.
pub fn inv_rel(t: &BinaryWord, s: &BinaryWord) -> Result<u64> {
    if s.len() != t.len() {
        return Err(Error::domain("relative inversions require equal lengths"));
    }
    if !s.contains(t) {
        return Err(Error::domain("relative inversions require t ⊆ s"));
    }
    let mut others_before = 0u64;
    let mut total = 0u64;
    for i in 0..s.len() {
        if t.bit(i) {
            total += others_before;
        } else if s.bit(i) {
            others_before += 1;
        }
    }
    Ok(total)
}

/// Exclusion-adjusted inversions: for each `1` of `s − u`, add `+1` per
/// `0`-digit of `s` before it and `−1` per `1`-digit of `u − x` before it.
/// Requires `x ⊆ u ⊆ s` with equal lengths. May be negative.
pub fn inv_excl(s: &BinaryWord, u: &BinaryWord, x: &BinaryWord) -> Result<i64> {
    if s.len() != u.len() || u.len() != x.len() {
        return Err(Error::domain("exclusion inversions require equal lengths"));
    }
    if !s.contains(u) || !u.contains(x) {
        return Err(Error::domain("exclusion inversions require x ⊆ u ⊆ s"));
    }
    let mut zeros_before = 0i64;
    let mut ux_before = 0i64;
    let mut total = 0i64;
    for i in 0..s.len() {
        if s.bit(i) && !u.bit(i) {
            total += zeros_before - ux_before;
        }
        if !s.bit(i) {
            zeros_before += 1;
        }
        if u.bit(i) && !x.bit(i) {
            ux_before += 1;
        }
    }
    Ok(total)
}
