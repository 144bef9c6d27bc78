//! Partitions, multipartitions with a multicharge, residues, the signature
//! rule with good/cogood nodes, the crystal operators, e-regularity, the
//! dominance order, and contents.
//!
//! Node order convention: nodes are ordered component-major, then by row;
//! "above" always means smaller in that order. Signatures are written bottom
//! to top (reverse of the node order) and reduced by deleting adjacent `−+`
//! pairs; the leftmost surviving `−` marks the good node, the rightmost
//! surviving `+` the cogood node.

use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::domain(format!(
                    "partition parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Part at 1-based `row`, zero beyond the last row.
    pub fn part(&self, row: usize) -> u64 {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// The sequence of corner residues, one per component, together with the
/// rank `e`. Built from dominant-weight coefficients as `a₀` copies of
/// residue 0, then `a₁` copies of 1, and so on (ascending corner residues).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multicharge {
    e: usize,
    residues: Vec<usize>,
}

impl Multicharge {
    /// From fundamental-weight coefficients `(a₀, ..., a_{e−1})`.
    pub fn from_coeffs(e: usize, a: &[i64]) -> Result<Self> {
        if e < 2 {
            return Err(Error::domain(format!("rank must be at least 2, got {e}")));
        }
        if a.len() != e {
            return Err(Error::domain(format!(
                "expected {e} weight coefficients, got {}",
                a.len()
            )));
        }
        if a.iter().any(|&x| x < 0) {
            return Err(Error::domain("weight coefficients must be nonnegative"));
        }
        if a.iter().all(|&x| x == 0) {
            return Err(Error::domain("the dominant weight must be nonzero"));
        }
        let mut residues = Vec::new();
        for (i, &count) in a.iter().enumerate() {
            residues.extend(std::iter::repeat_n(i, count as usize));
        }
        Ok(Multicharge { e, residues })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// The level: number of components.
    pub fn level(&self) -> usize {
        self.residues.len()
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    /// Corner residue of the 1-based `component`.
    pub fn corner(&self, component: usize) -> usize {
        self.residues[component - 1]
    }
}

/// A node of a multipartition diagram: 1-based component, row, and column,
/// with its residue `corner + col − row (mod e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub component: usize,
    pub row: usize,
    pub col: usize,
    pub residue: usize,
}

impl Node {
    /// Position in the global node order (component-major, then row).
    fn order_key(&self) -> (usize, usize) {
        (self.component, self.row)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(component {}, row {}, col {}; residue {})",
            self.component, self.row, self.col, self.residue
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A reduced signature: the surviving signs with their nodes, written bottom
/// to top.
#[derive(Debug, Clone)]
pub struct Signature {
    reduced: Vec<(Sign, Node)>,
}

impl Signature {
    /// Surviving signs, bottom to top.
    pub fn entries(&self) -> &[(Sign, Node)] {
        &self.reduced
    }

    /// Number of surviving `−` signs (the ε statistic).
    pub fn eps(&self) -> usize {
        self.reduced
            .iter()
            .filter(|(s, _)| *s == Sign::Minus)
            .count()
    }

    /// Number of surviving `+` signs (the φ statistic).
    pub fn phi(&self) -> usize {
        self.reduced.len() - self.eps()
    }

    /// Node of the leftmost surviving `−`, if any.
    pub fn good(&self) -> Option<Node> {
        self.reduced
            .iter()
            .find(|(s, _)| *s == Sign::Minus)
            .map(|(_, n)| *n)
    }

    /// Node of the rightmost surviving `+`, if any.
    pub fn cogood(&self) -> Option<Node> {
        self.reduced
            .iter()
            .rev()
            .find(|(s, _)| *s == Sign::Plus)
            .map(|(_, n)| *n)
    }

    /// The reduced word as a string of `+`/`-`.
    pub fn word(&self) -> String {
        self.reduced
            .iter()
            .map(|(s, _)| if *s == Sign::Plus { '+' } else { '-' })
            .collect()
    }
}

/// A sequence of partitions over a multicharge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    // Field order matters for the derived lexicographic comparison: compare
    // component lists first (charges agree whenever a comparison is
    // meaningful).
    components: Vec<Partition>,
    charge: Multicharge,
}

impl Multipartition {
    pub fn empty(charge: Multicharge) -> Self {
        let components = vec![Partition::empty(); charge.level()];
        Multipartition { components, charge }
    }

    pub fn new(charge: Multicharge, components: Vec<Partition>) -> Result<Self> {
        if components.len() != charge.level() {
            return Err(Error::domain(format!(
                "expected {} components, got {}",
                charge.level(),
                components.len()
            )));
        }
        Ok(Multipartition { components, charge })
    }

    /// Parse the nested bracket format, e.g. `[[2], [1], [1], [1], []]`.
    pub fn parse(charge: Multicharge, text: &str) -> Result<Self> {
        let lists: Vec<Vec<u64>> = serde_json::from_str(text)
            .map_err(|err| Error::domain(format!("invalid multipartition text: {err}")))?;
        let components = lists
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(charge, components)
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// 1-based component access.
    pub fn component(&self, idx: usize) -> &Partition {
        &self.components[idx - 1]
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    /// Total number of nodes.
    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    fn residue_at(&self, component: usize, row: usize, col: usize) -> usize {
        let e = self.charge.e() as i64;
        let k = self.charge.corner(component) as i64;
        (k + col as i64 - row as i64).rem_euclid(e) as usize
    }

    /// All addable nodes of residue `i`, in the global order (top to bottom).
    pub fn addable_nodes(&self, i: usize) -> Vec<Node> {
        let mut nodes = Vec::new();
        for comp in 1..=self.level() {
            let p = self.component(comp);
            for row in 1..=p.rows() + 1 {
                // A node may be added at (row, part(row)+1) when the result
                // stays weakly decreasing: row 1 always, otherwise only when
                // the row above is strictly longer.
                if row > 1 && p.part(row - 1) <= p.part(row) {
                    continue;
                }
                let col = p.part(row) as usize + 1;
                let residue = self.residue_at(comp, row, col);
                if residue == i {
                    nodes.push(Node { component: comp, row, col, residue });
                }
            }
        }
        nodes
    }

    /// All removable nodes of residue `i`, in the global order.
    pub fn removable_nodes(&self, i: usize) -> Vec<Node> {
        let mut nodes = Vec::new();
        for comp in 1..=self.level() {
            let p = self.component(comp);
            for row in 1..=p.rows() {
                // The last node of a row is removable when the row below is
                // strictly shorter.
                if p.part(row) > p.part(row + 1) {
                    let col = p.part(row) as usize;
                    let residue = self.residue_at(comp, row, col);
                    if residue == i {
                        nodes.push(Node { component: comp, row, col, residue });
                    }
                }
            }
        }
        nodes
    }

    /// The reduced `i`-signature: `+` per addable and `−` per removable node,
    /// written bottom to top, with adjacent `−+` pairs cancelled.
    pub fn signature(&self, i: usize) -> Signature {
        let addable = self.addable_nodes(i);
        let removable = self.removable_nodes(i);
        // Merge the two node lists into the global order, then reverse to
        // read bottom to top. Addable and removable nodes never coincide.
        let mut signed: Vec<(Sign, Node)> = addable
            .into_iter()
            .map(|n| (Sign::Plus, n))
            .chain(removable.into_iter().map(|n| (Sign::Minus, n)))
            .collect();
        signed.sort_by_key(|(_, n)| n.order_key());
        signed.reverse();
        // Stack reduction: a `+` cancels an immediately preceding `−`.
        let mut reduced: Vec<(Sign, Node)> = Vec::with_capacity(signed.len());
        for entry in signed {
            if entry.0 == Sign::Plus && matches!(reduced.last(), Some((Sign::Minus, _))) {
                reduced.pop();
            } else {
                reduced.push(entry);
            }
        }
        Signature { reduced }
    }

    pub fn good_node(&self, i: usize) -> Option<Node> {
        self.signature(i).good()
    }

    pub fn cogood_node(&self, i: usize) -> Option<Node> {
        self.signature(i).cogood()
    }

    /// Add a node previously reported addable.
    pub fn add_node(&self, node: Node) -> Result<Multipartition> {
        let mut components = self.components.clone();
        let p = &self.components[node.component - 1];
        let mut parts = p.parts().to_vec();
        if node.row == p.rows() + 1 {
            if node.col != 1 {
                return Err(Error::domain(format!("cannot add node at {node}")));
            }
            parts.push(1);
        } else {
            if p.part(node.row) as usize + 1 != node.col {
                return Err(Error::domain(format!("cannot add node at {node}")));
            }
            parts[node.row - 1] += 1;
        }
        components[node.component - 1] = Partition::new(parts)?;
        Multipartition::new(self.charge.clone(), components)
    }

    /// Remove a node previously reported removable.
    pub fn remove_node(&self, node: Node) -> Result<Multipartition> {
        let mut components = self.components.clone();
        let p = &self.components[node.component - 1];
        if p.part(node.row) as usize != node.col || node.col == 0 {
            return Err(Error::domain(format!("cannot remove node at {node}")));
        }
        let mut parts = p.parts().to_vec();
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.remove(node.row - 1);
        }
        components[node.component - 1] = Partition::new(parts)?;
        Multipartition::new(self.charge.clone(), components)
    }

    /// Add the `i`-cogood node, if one exists.
    pub fn f_tilde(&self, i: usize) -> Option<Multipartition> {
        self.cogood_node(i).map(|n| {
            self.add_node(n)
                .expect("cogood node reported by the signature is addable")
        })
    }

    /// Remove the `i`-good node, if one exists.
    pub fn e_tilde(&self, i: usize) -> Option<Multipartition> {
        self.good_node(i).map(|n| {
            self.remove_node(n)
                .expect("good node reported by the signature is removable")
        })
    }

    /// Apply a path word of `(residue, multiplicity)` steps, first entry
    /// applied first; `None` as soon as a cogood node is missing.
    pub fn apply_f_path(&self, word: &[(usize, u64)]) -> Option<Multipartition> {
        let mut mu = self.clone();
        for &(residue, mult) in word {
            for _ in 0..mult {
                mu = mu.f_tilde(residue)?;
            }
        }
        Some(mu)
    }

    /// True when the multipartition is reachable from the empty one by
    /// cogood additions — equivalently, when repeatedly removing good nodes
    /// (smallest residue first) empties the diagram.
    pub fn is_e_regular(&self) -> bool {
        self.peel().is_ok()
    }

    /// Peel good nodes, smallest residue first, until empty. On success the
    /// removal steps are returned (in removal order); otherwise the stuck
    /// multipartition.
    pub fn peel(&self) -> std::result::Result<Vec<(usize, Node)>, Multipartition> {
        let mut mu = self.clone();
        let mut steps = Vec::new();
        while !mu.is_empty() {
            let mut progressed = false;
            for i in 0..self.charge.e() {
                if let Some(node) = mu.good_node(i) {
                    mu = mu.remove_node(node).expect("good node is removable");
                    steps.push((i, node));
                    progressed = true;
                    break;
                }
            }
            if !progressed {
                return Err(mu);
            }
        }
        Ok(steps)
    }

    /// Dominance: `self ⊵ other` — every cumulative sum (previous components
    /// plus the first `j` parts of the current one) of `self` is at least the
    /// matching sum of `other`.
    pub fn dominance_geq(&self, other: &Multipartition) -> Result<bool> {
        if self.charge != other.charge {
            return Err(Error::domain("dominance compares equal multicharges only"));
        }
        let mut pre_self: u64 = 0;
        let mut pre_other: u64 = 0;
        for comp in 1..=self.level() {
            let a = self.component(comp);
            let b = other.component(comp);
            let rows = a.rows().max(b.rows());
            let mut run_a = pre_self;
            let mut run_b = pre_other;
            for row in 1..=rows {
                run_a += a.part(row);
                run_b += b.part(row);
                if run_a < run_b {
                    return Ok(false);
                }
            }
            pre_self += a.size();
            pre_other += b.size();
        }
        Ok(true)
    }

    /// Residue counts `(c₀, ..., c_{e−1})`.
    pub fn content(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.charge.e()];
        for comp in 1..=self.level() {
            let p = self.component(comp);
            for row in 1..=p.rows() {
                for col in 1..=p.part(row) as usize {
                    c[self.residue_at(comp, row, col)] += 1;
                }
            }
        }
        c
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, p) in self.components.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
