//! Weight-lattice arithmetic: the affine Cartan matrix, contents, hubs, the
//! symmetric bilinear form and defects, string and face defect formulas, and
//! Weyl reflections driven by the hub.
//!
//! A weight is stored as (dominant-weight coefficients, content, δ-shift):
//! content is the crystal's native coordinate, the hub is derived via
//! `hub = a − C·content`, and the δ direction never enters a face (faces
//! assert a zero shift).

use crate::error::{Error, Result};
use crate::partitions::Multicharge;

/// A nonzero dominant integral weight `Λ = Σ aᵢΛᵢ` at rank `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    e: usize,
    a: Vec<i64>,
}

impl DominantWeight {
    pub fn new(e: usize, a: Vec<i64>) -> Result<Self> {
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
        Ok(DominantWeight { e, a })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.a
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.a[i]
    }

    /// The level `r = Σ aᵢ`.
    pub fn level(&self) -> i64 {
        self.a.iter().sum()
    }

    /// The multicharge with ascending corner residues.
    pub fn multicharge(&self) -> Multicharge {
        Multicharge::from_coeffs(self.e, &self.a).expect("validated at construction")
    }
}

/// The affine Cartan matrix: `[[2,−2],[−2,2]]` at rank 2, the circulant with
/// 2 on the diagonal and −1 on both cyclic neighbours at rank ≥ 3.
pub fn cartan_matrix(e: usize) -> Result<Vec<Vec<i64>>> {
    if e < 2 {
        return Err(Error::domain(format!("rank must be at least 2, got {e}")));
    }
    if e == 2 {
        return Ok(vec![vec![2, -2], vec![-2, 2]]);
    }
    let mut m = vec![vec![0i64; e]; e];
    for i in 0..e {
        m[i][i] = 2;
        m[i][(i + 1) % e] = -1;
        m[i][(i + e - 1) % e] = -1;
    }
    Ok(m)
}

/// A point `Λ − Σ cᵢαᵢ − t·δ` of the weight lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoint {
    base: DominantWeight,
    content: Vec<i64>,
    delta_shift: i64,
}

impl WeightPoint {
    pub fn new(base: DominantWeight, content: Vec<i64>, delta_shift: i64) -> Result<Self> {
        if content.len() != base.e() {
            return Err(Error::domain(format!(
                "content length {} does not match rank {}",
                content.len(),
                base.e()
            )));
        }
        if content.iter().any(|&c| c < 0) || delta_shift < 0 {
            return Err(Error::domain("content and δ-shift must be nonnegative"));
        }
        Ok(WeightPoint { base, content, delta_shift })
    }

    /// The highest weight itself (zero content).
    pub fn highest(base: DominantWeight) -> Self {
        let content = vec![0; base.e()];
        WeightPoint { base, content, delta_shift: 0 }
    }

    pub fn base(&self) -> &DominantWeight {
        &self.base
    }

    pub fn content(&self) -> &[i64] {
        &self.content
    }

    pub fn delta_shift(&self) -> i64 {
        self.delta_shift
    }

    /// Content degree `Σ cᵢ` (δ excluded).
    pub fn degree(&self) -> i64 {
        self.content.iter().sum()
    }

    /// The hub `θ = a − C·content`; δ pairs to zero with every coroot, so
    /// the shift does not enter.
    pub fn hub(&self) -> Vec<i64> {
        let e = self.base.e();
        let cartan = cartan_matrix(e).expect("rank validated at construction");
        (0..e)
            .map(|i| {
                let cc: i64 = (0..e).map(|j| cartan[i][j] * self.content[j]).sum();
                self.base.coeff(i) - cc
            })
            .collect()
    }

    /// The defect `(Λ|α) − ½(α|α)` plus `t·r` for a δ-shift of `t`. Negative
    /// values are an integrity violation: every point of the highest-weight
    /// module has nonnegative defect.
    pub fn defect(&self) -> Result<i64> {
        let e = self.base.e();
        let cartan = cartan_matrix(e)?;
        let lambda_alpha: i64 = (0..e).map(|i| self.base.coeff(i) * self.content[i]).sum();
        let alpha_alpha: i64 = (0..e)
            .map(|i| {
                self.content[i]
                    * (0..e)
                        .map(|j| cartan[i][j] * self.content[j])
                        .sum::<i64>()
            })
            .sum();
        debug_assert!(alpha_alpha % 2 == 0, "the form (α|α) is always even");
        let d = lambda_alpha - alpha_alpha / 2 + self.delta_shift * self.base.level();
        if d < 0 {
            return Err(Error::integrity(format!(
                "negative defect {d} at content {:?}",
                self.content
            )));
        }
        Ok(d)
    }

    /// Reflect in the simple root `αᵢ`: the content moves by `θᵢ` copies of
    /// `αᵢ`, the hub's `i`-component negates, the defect is preserved.
    pub fn weyl_reflect(&self, i: usize) -> Result<WeightPoint> {
        if i >= self.base.e() {
            return Err(Error::domain(format!("residue {i} out of range")));
        }
        let theta = self.hub()[i];
        let mut content = self.content.clone();
        content[i] += theta;
        if content[i] < 0 {
            return Err(Error::domain(format!(
                "reflection s_{i} leaves the dominant cone of contents at {:?}",
                self.content
            )));
        }
        WeightPoint::new(self.base.clone(), content, self.delta_shift)
    }
}

/// Defects along an `i`-string whose top has hub component `w`:
/// entry `k` is `defect_at_top + k(w−k)`, for `k = 0..=w`.
pub fn string_defects(defect_at_top: i64, w: i64) -> Vec<i64> {
    (0..=w.max(0)).map(|k| defect_at_top + k * (w - k)).collect()
}

/// True when `(j₁, j₂)` lies in the two-residue face region for interval
/// coefficients `(a₁, a₂)`.
pub fn in_face_region(a1: i64, a2: i64, j1: i64, j2: i64) -> bool {
    j1 >= 0
        && j2 >= 0
        && j1 <= a1 + j2
        && j2 <= a2 + j1
        && j1 <= a1 + a2
        && j2 <= a1 + a2
}

/// Defect of the face vertex with content `(j₁, j₂)` on a two-residue face:
/// `a₁j₁ + a₂j₂ − j₁² − j₂² + j₁j₂`. Inside the box `0 ≤ jᵢ ≤ aᵢ` this is
/// the string composition `j₁(a₁−j₁) + j₂(a₂−j₂) + j₁j₂`; the quadratic
/// extends it to the whole region, where it agrees with the bilinear form.
pub fn face_defect(a1: i64, a2: i64, j1: i64, j2: i64) -> Result<i64> {
    if !in_face_region(a1, a2, j1, j2) {
        return Err(Error::domain(format!(
            "content ({j1}, {j2}) lies outside the face region for a₁={a1}, a₂={a2}"
        )));
    }
    Ok(a1 * j1 + a2 * j2 - j1 * j1 - j2 * j2 + j1 * j2)
}

/// Recover the content supported on a cyclic interval from a hub: solves the
/// finite tridiagonal system `θᵢ = aᵢ − (C·c)ᵢ` over the interval with zero
/// content elsewhere. Errors when the hub does not come from such a content.
pub fn content_from_hub_on_interval(
    base: &DominantWeight,
    interval: &[usize],
    hub: &[i64],
) -> Result<Vec<i64>> {
    let e = base.e();
    if hub.len() != e {
        return Err(Error::domain("hub length must equal the rank"));
    }
    let t = interval.len();
    if t == 0 || t >= e {
        return Err(Error::domain("interval must be a nonempty proper subinterval"));
    }
    for k in 0..t {
        if interval[k] >= e || (k + 1 < t && interval[k + 1] != (interval[k] + 1) % e) {
            return Err(Error::domain("interval must be cyclically consecutive residues"));
        }
    }
    // d_k = a_{i_k} − θ_{i_k} = (C·c)_{i_k}; with zero content outside the
    // interval this is the finite-type A_t system 2c_k − c_{k−1} − c_{k+1},
    // solved by the discrete Green's function
    // c_k = Σ_m min(k,m)·(t+1−max(k,m))·d_m / (t+1).
    let d: Vec<i128> = interval
        .iter()
        .map(|&i| (base.coeff(i) - hub[i]) as i128)
        .collect();
    let tt = (t + 1) as i128;
    let mut content = vec![0i64; e];
    for k in 1..=t {
        let mut num: i128 = 0;
        for m in 1..=t {
            num += (k.min(m) as i128) * (tt - k.max(m) as i128) * d[m - 1];
        }
        if num % tt != 0 {
            return Err(Error::domain(
                "hub does not correspond to an integral content on the interval",
            ));
        }
        let c = num / tt;
        if c < 0 {
            return Err(Error::domain(
                "hub corresponds to a negative content on the interval",
            ));
        }
        content[interval[k - 1]] = c as i64;
    }
    // Components of the hub outside the interval must also match.
    let point = WeightPoint::new(base.clone(), content.clone(), 0)?;
    if point.hub() != hub {
        return Err(Error::domain(
            "hub is not supported on the given interval",
        ));
    }
    Ok(content)
}

/// Render a hub with square brackets, `[θ₀,...]`.
pub fn render_hub(hub: &[i64]) -> String {
    let inner: Vec<String> = hub.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// Render a content with parentheses, `(c₀,...)`.
pub fn render_content(content: &[i64]) -> String {
    let inner: Vec<String> = content.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(e: usize, a: &[i64]) -> DominantWeight {
        DominantWeight::new(e, a.to_vec()).unwrap()
    }

    #[test]
    fn cartan_matrix_shapes() {
        assert_eq!(cartan_matrix(2).unwrap(), vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(
            cartan_matrix(3).unwrap(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        assert_eq!(cartan_matrix(5).unwrap()[0], vec![2, -1, 0, 0, -1]);
        assert!(cartan_matrix(1).is_err());
    }

    #[test]
    fn hub_examples() {
        let base = w(5, &[0, 1, 1, 0, 0]);
        assert_eq!(WeightPoint::highest(base.clone()).hub(), vec![0, 1, 1, 0, 0]);
        let p = WeightPoint::new(base.clone(), vec![0, 1, 1, 0, 0], 0).unwrap();
        assert_eq!(p.hub(), vec![1, 0, 0, 1, 0]);
        let rho = WeightPoint::new(base, vec![0, 2, 3, 2, 0], 0).unwrap();
        assert_eq!(rho.hub(), vec![2, 0, -1, -1, 2]);
    }

    #[test]
    fn defect_examples() {
        let base = w(5, &[0, 1, 1, 0, 0]);
        assert_eq!(WeightPoint::highest(base.clone()).defect().unwrap(), 0);
        let p = WeightPoint::new(base.clone(), vec![0, 1, 1, 0, 0], 0).unwrap();
        assert_eq!(p.defect().unwrap(), 1);
        let rho = WeightPoint::new(base, vec![0, 2, 3, 2, 0], 0).unwrap();
        assert_eq!(rho.defect().unwrap(), 0);

        let hex = w(4, &[0, 3, 2, 0]);
        let q = WeightPoint::new(hex, vec![0, 2, 2, 0], 0).unwrap();
        assert_eq!(q.defect().unwrap(), 6);
    }

    #[test]
    fn delta_shift_adds_level_per_copy() {
        let base = w(5, &[0, 1, 1, 0, 0]);
        for t in 0..=5 {
            let p = WeightPoint::new(base.clone(), vec![0, 1, 1, 0, 0], t).unwrap();
            assert_eq!(p.defect().unwrap(), 1 + t * base.level());
        }
    }

    #[test]
    fn string_defect_profiles() {
        assert_eq!(string_defects(0, 3), vec![0, 2, 2, 0]);
        assert_eq!(string_defects(0, 0), vec![0]);
        assert_eq!(string_defects(1, 2), vec![1, 2, 1]);
    }

    #[test]
    fn face_defect_examples() {
        assert_eq!(face_defect(3, 2, 1, 1).unwrap(), 4);
        assert_eq!(face_defect(3, 2, 0, 0).unwrap(), 0);
        assert_eq!(face_defect(3, 2, 2, 1).unwrap(), 5);
        assert!(face_defect(3, 2, 6, 2).is_err());
        assert!(face_defect(3, 2, 0, 3).is_err());
    }

    #[test]
    fn face_defect_matches_bilinear_form() {
        // Over every face point with a₁, a₂ ≤ 5 (rank 4, interval {1, 2}).
        for a1 in 0..=5i64 {
            for a2 in 0..=5i64 {
                if a1 == 0 && a2 == 0 {
                    continue;
                }
                let base = w(4, &[0, a1, a2, 0]);
                for j1 in 0..=(a1 + a2) {
                    for j2 in 0..=(a1 + a2) {
                        if !in_face_region(a1, a2, j1, j2) {
                            continue;
                        }
                        let p =
                            WeightPoint::new(base.clone(), vec![0, j1, j2, 0], 0).unwrap();
                        assert_eq!(
                            face_defect(a1, a2, j1, j2).unwrap(),
                            p.defect().unwrap(),
                            "a=({a1},{a2}) j=({j1},{j2})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_reflection_examples() {
        let base = w(5, &[1, 2, 1, 0, 3]);
        let top = WeightPoint::highest(base.clone());
        let s1 = top.weyl_reflect(1).unwrap();
        assert_eq!(s1.hub(), vec![1 + 2, -2, 1 + 2, 0, 3]);
        assert_eq!(s1.weyl_reflect(1).unwrap(), top);
        assert_eq!(s1.defect().unwrap(), 0);
    }

    #[test]
    fn weyl_orbit_reaches_the_face_bottom() {
        // Rank 5, Λ = Λ₁ + Λ₂, interval {1,2,3}: the reflection schedule
        // s₁, s₂, s₃, s₂, s₁ walks down the face (the middle s₂ fixes its
        // vertex), and one more s₂ lands on the lowest vertex.
        let base = w(5, &[0, 1, 1, 0, 0]);
        let mut p = WeightPoint::highest(base);
        let expect = [
            (1usize, vec![1, -1, 2, 0, 0]),
            (2, vec![1, 1, -2, 2, 0]),
            (3, vec![1, 1, 0, -2, 2]),
            (2, vec![1, 1, 0, -2, 2]),
            (1, vec![2, -1, 1, -2, 2]),
            (2, vec![2, 0, -1, -1, 2]),
        ];
        for (i, hub) in expect {
            p = p.weyl_reflect(i).unwrap();
            assert_eq!(p.hub(), hub);
            assert_eq!(p.defect().unwrap(), 0);
        }
        assert_eq!(p.content(), &[0, 2, 3, 2, 0]);
    }

    #[test]
    fn hub_reconstruction_round_trips() {
        let base = w(5, &[0, 1, 1, 0, 0]);
        let interval = [1usize, 2, 3];
        for c in [[0i64, 1, 1, 0, 0], [0, 2, 3, 2, 0], [0, 1, 2, 2, 0]] {
            let p = WeightPoint::new(base.clone(), c.to_vec(), 0).unwrap();
            let got = content_from_hub_on_interval(&base, &interval, &p.hub()).unwrap();
            assert_eq!(got, c.to_vec());
        }
        // A hub not of interval-supported form is rejected.
        assert!(content_from_hub_on_interval(&base, &interval, &[9, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn renderings() {
        assert_eq!(render_hub(&[2, 0, -1, -1, 2]), "[2,0,-1,-1,2]");
        assert_eq!(render_content(&[0, 2, 3, 2, 0]), "(0,2,3,2,0)");
    }
}
