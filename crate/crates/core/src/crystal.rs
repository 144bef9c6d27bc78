//! Block-reduced crystal graphs: breadth-first generation from the empty
//! multipartition, vertices grouped by content, faces cut out by a residue
//! interval, the distinguished top weight of a face, and the content
//! reflection exchanging the two ends of a face.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use crate::error::{Error, Result};
use crate::partitions::{Multicharge, Multipartition};
use crate::weights::{render_hub, DominantWeight, WeightPoint};

/// One vertex of a block-reduced crystal: a content point together with
/// derived weight data and the number of multipartitions sitting on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalVertex {
    pub content: Vec<i64>,
    pub hub: Vec<i64>,
    pub defect: i64,
    pub count: u64,
    /// The multipartitions on this vertex, ascending; populated on request.
    pub mps: Option<Vec<Multipartition>>,
}

impl CrystalVertex {
    pub fn degree(&self) -> i64 {
        self.content.iter().sum()
    }
}

/// A directed edge between vertex indices, labelled by its residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub residue: usize,
}

/// A block-reduced crystal graph. Vertices are sorted by (degree, content)
/// so index 0 is always the highest-weight vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    base: DominantWeight,
    interval: Option<Vec<usize>>,
    vertices: Vec<CrystalVertex>,
    edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn base(&self) -> &DominantWeight {
        &self.base
    }

    /// The residue restriction the graph was generated under, if any.
    pub fn interval(&self) -> Option<&[usize]> {
        self.interval.as_deref()
    }

    pub fn vertices(&self) -> &[CrystalVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[CrystalEdge] {
        &self.edges
    }

    /// Index of the vertex with the given content, if present.
    pub fn vertex_by_content(&self, content: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|v| v.content == content)
    }

    pub fn max_degree(&self) -> i64 {
        self.vertices.iter().map(CrystalVertex::degree).max().unwrap_or(0)
    }

    /// JSON description: block data plus vertex and edge lists. The
    /// per-vertex multipartition lists are not serialized.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "e": self.base.e(),
            "lambda": self.base.coeffs(),
            "interval": self.interval,
            "vertices": self
                .vertices
                .iter()
                .map(|v| {
                    json!({
                        "content": v.content,
                        "hub": v.hub,
                        "defect": v.defect,
                        "count": v.count,
                    })
                })
                .collect::<Vec<_>>(),
            "edges": self
                .edges
                .iter()
                .map(|e| json!({"from": e.from, "to": e.to, "residue": e.residue}))
                .collect::<Vec<_>>(),
        })
    }

    /// Rebuild a graph from `to_json` output, recomputing and checking the
    /// derived weight data.
    pub fn from_json(value: &serde_json::Value) -> Result<CrystalGraph> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::domain("crystal data must be a JSON object"))?;
        let e = json_usize(obj.get("e"), "e")?;
        let lambda = json_i64_vec(obj.get("lambda"), "lambda")?;
        let base = DominantWeight::new(e, lambda)?;
        let interval = match obj.get("interval") {
            None | Some(serde_json::Value::Null) => None,
            Some(v) => {
                let rs = json_i64_vec(Some(v), "interval")?;
                Some(
                    rs.into_iter()
                        .map(|r| {
                            usize::try_from(r)
                                .map_err(|_| Error::domain("negative residue in interval"))
                        })
                        .collect::<Result<Vec<usize>>>()?,
                )
            }
        };
        let raw_vertices = obj
            .get("vertices")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::domain("crystal data lacks a vertex list"))?;
        let mut vertices = Vec::with_capacity(raw_vertices.len());
        for rv in raw_vertices {
            let vo = rv
                .as_object()
                .ok_or_else(|| Error::domain("crystal vertex must be a JSON object"))?;
            let content = json_i64_vec(vo.get("content"), "content")?;
            let point = WeightPoint::new(base.clone(), content.clone(), 0)?;
            let hub = json_i64_vec(vo.get("hub"), "hub")?;
            let defect = json_i64(vo.get("defect"), "defect")?;
            if point.hub() != hub || point.defect()? != defect {
                return Err(Error::domain(
                    "crystal data does not match its block: stored hub or defect is wrong",
                ));
            }
            let count = json_i64(vo.get("count"), "count")?;
            let count = u64::try_from(count)
                .map_err(|_| Error::domain("negative vertex count in crystal data"))?;
            vertices.push(CrystalVertex { content, hub, defect, count, mps: None });
        }
        let raw_edges = obj
            .get("edges")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::domain("crystal data lacks an edge list"))?;
        let mut edges = Vec::with_capacity(raw_edges.len());
        for re in raw_edges {
            let eo = re
                .as_object()
                .ok_or_else(|| Error::domain("crystal edge must be a JSON object"))?;
            let from = json_usize(eo.get("from"), "from")?;
            let to = json_usize(eo.get("to"), "to")?;
            let residue = json_usize(eo.get("residue"), "residue")?;
            if from >= vertices.len() || to >= vertices.len() || residue >= e {
                return Err(Error::domain("crystal edge out of range"));
            }
            edges.push(CrystalEdge { from, to, residue });
        }
        edges.sort_by_key(|e| (e.from, e.to, e.residue));
        Ok(CrystalGraph { base, interval, vertices, edges })
    }

    /// Graphviz rendering; vertex labels are `hub^defect`, edge labels the
    /// residue.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!(
                "  v{} [label=\"{}^{}\"];\n",
                i,
                render_hub(&v.hub),
                v.defect
            ));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  v{} -> v{} [label=\"{}\"];\n",
                e.from, e.to, e.residue
            ));
        }
        s.push_str("}\n");
        s
    }
}

fn json_i64(v: Option<&serde_json::Value>, what: &str) -> Result<i64> {
    v.and_then(|x| x.as_i64())
        .ok_or_else(|| Error::domain(format!("crystal data field {what:?} must be an integer")))
}

fn json_usize(v: Option<&serde_json::Value>, what: &str) -> Result<usize> {
    let n = json_i64(v, what)?;
    usize::try_from(n).map_err(|_| Error::domain(format!("field {what:?} must be nonnegative")))
}

fn json_i64_vec(v: Option<&serde_json::Value>, what: &str) -> Result<Vec<i64>> {
    let arr = v
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::domain(format!("crystal data field {what:?} must be a list")))?;
    arr.iter()
        .map(|x| {
            x.as_i64().ok_or_else(|| {
                Error::domain(format!("field {what:?} must hold integers"))
            })
        })
        .collect()
}

/// Generate the crystal reachable from the empty multipartition, applying
/// only the given residues (all of them when `restrict` is `None`), up to
/// the degree cap. Vertices are the distinct contents.
pub fn build_crystal(
    base: &DominantWeight,
    max_degree: u64,
    restrict: Option<&[usize]>,
    keep_mps: bool,
) -> Result<CrystalGraph> {
    let e = base.e();
    let allowed: Vec<usize> = match restrict {
        Some(rs) => {
            let set: BTreeSet<usize> = rs.iter().copied().collect();
            if let Some(&bad) = set.iter().find(|&&r| r >= e) {
                return Err(Error::domain(format!("residue {bad} out of range")));
            }
            set.into_iter().collect()
        }
        None => (0..e).collect(),
    };
    let charge = base.multicharge();
    let (by_content, edge_set) = bfs(&charge, &allowed, max_degree);
    assemble(base, restrict.map(<[usize]>::to_vec), by_content, edge_set, keep_mps)
}

type ContentEdges = BTreeSet<(Vec<i64>, Vec<i64>, usize)>;

fn bfs(
    charge: &Multicharge,
    allowed: &[usize],
    max_degree: u64,
) -> (BTreeMap<Vec<i64>, Vec<Multipartition>>, ContentEdges) {
    let empty = Multipartition::empty(charge.clone());
    let mut by_content: BTreeMap<Vec<i64>, Vec<Multipartition>> = BTreeMap::new();
    by_content.insert(empty.content(), vec![empty.clone()]);
    let mut edges: ContentEdges = BTreeSet::new();
    let mut seen: BTreeSet<Multipartition> = BTreeSet::new();
    seen.insert(empty.clone());
    let mut frontier = vec![empty];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for mp in &frontier {
            let c_from = mp.content();
            for &i in allowed {
                if let Some(succ) = mp.f_tilde(i) {
                    edges.insert((c_from.clone(), succ.content(), i));
                    if seen.insert(succ.clone()) {
                        next.push(succ);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for mp in &next {
            by_content.entry(mp.content()).or_default().push(mp.clone());
        }
        frontier = next;
    }
    (by_content, edges)
}

fn assemble(
    base: &DominantWeight,
    interval: Option<Vec<usize>>,
    by_content: BTreeMap<Vec<i64>, Vec<Multipartition>>,
    edge_set: ContentEdges,
    keep_mps: bool,
) -> Result<CrystalGraph> {
    let mut keys: Vec<Vec<i64>> = by_content.keys().cloned().collect();
    keys.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    let index: BTreeMap<&[i64], usize> =
        keys.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut vertices = Vec::with_capacity(keys.len());
    for c in &keys {
        let point = WeightPoint::new(base.clone(), c.clone(), 0)?;
        let mps_here = &by_content[c];
        let mps = if keep_mps {
            let mut sorted = mps_here.clone();
            sorted.sort();
            Some(sorted)
        } else {
            None
        };
        vertices.push(CrystalVertex {
            content: c.clone(),
            hub: point.hub(),
            defect: point.defect()?,
            count: mps_here.len() as u64,
            mps,
        });
    }
    let mut edges: Vec<CrystalEdge> = edge_set
        .iter()
        .map(|(f, t, r)| CrystalEdge {
            from: index[f.as_slice()],
            to: index[t.as_slice()],
            residue: *r,
        })
        .collect();
    edges.sort_by_key(|e| (e.from, e.to, e.residue));
    Ok(CrystalGraph { base: base.clone(), interval, vertices, edges })
}

/// A face of the block-reduced crystal: the part reachable using only the
/// residues of one cyclically consecutive proper interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSpec {
    base: DominantWeight,
    interval: Vec<usize>,
}

impl FaceSpec {
    pub fn new(base: DominantWeight, interval: Vec<usize>) -> Result<Self> {
        let e = base.e();
        if interval.is_empty() {
            return Err(Error::domain("face interval must be nonempty"));
        }
        if interval.len() >= e {
            return Err(Error::domain("face interval must be a proper subset of the residues"));
        }
        if interval.iter().any(|&r| r >= e) {
            return Err(Error::domain("face interval contains an out-of-range residue"));
        }
        for pair in interval.windows(2) {
            if pair[1] != (pair[0] + 1) % e {
                return Err(Error::domain(
                    "face interval must be cyclically consecutive residues in order",
                ));
            }
        }
        Ok(FaceSpec { base, interval })
    }

    pub fn base(&self) -> &DominantWeight {
        &self.base
    }

    pub fn interval(&self) -> &[usize] {
        &self.interval
    }

    /// The interval length.
    pub fn t(&self) -> usize {
        self.interval.len()
    }

    /// Original residue sitting at rotated position `k`, where rotated
    /// positions 1..=t are the interval in order.
    fn orig(&self, k: usize) -> usize {
        let e = self.base.e();
        (self.interval[0] + e + k - 1) % e
    }

    /// The base coefficients in rotated coordinates.
    fn rotated_coeffs(&self) -> Vec<i64> {
        let e = self.base.e();
        (0..e).map(|k| self.base.coeff(self.orig(k))).collect()
    }

    /// Content of the face's top weight, in original coordinates.
    pub fn rho_content(&self) -> Result<Vec<i64>> {
        let e = self.base.e();
        let t = self.t();
        let a = self.rotated_coeffs();
        let rp: i128 = (1..=t).map(|k| i128::from(a[k])).sum();
        let mut out = vec![0i64; e];
        for j in 1..=t {
            let mut acc: i128 = 0;
            for k in 1..=t {
                acc += (j.min(k) as i128) * (i128::from(a[k]) + i128::from(a[t + 1 - k]));
            }
            acc -= (j as i128) * rp;
            if acc < 0 {
                return Err(Error::integrity("negative content in the face's top weight"));
            }
            out[self.orig(j)] =
                i64::try_from(acc).map_err(|_| Error::Overflow("face top content"))?;
        }
        Ok(out)
    }

    /// Hub of the face's top weight: interval coefficients reversed and
    /// negated, the sum of the interval coefficients added just outside it.
    pub fn rho_hub(&self) -> Result<Vec<i64>> {
        let e = self.base.e();
        let t = self.t();
        let a = self.rotated_coeffs();
        let rp: i128 = (1..=t).map(|k| i128::from(a[k])).sum();
        let big = |x: i128| i64::try_from(x).map_err(|_| Error::Overflow("face top hub"));
        let mut rot = vec![0i64; e];
        if e == t + 1 {
            rot[0] = big(i128::from(a[0]) + 2 * rp)?;
        } else {
            rot[0] = big(i128::from(a[0]) + rp)?;
            rot[t + 1] = big(i128::from(a[t + 1]) + rp)?;
            rot[t + 2..e].copy_from_slice(&a[t + 2..e]);
        }
        for j in 1..=t {
            rot[j] = -a[t + 1 - j];
        }
        let mut out = vec![0i64; e];
        for (j, item) in rot.iter().enumerate() {
            out[self.orig(j)] = *item;
        }
        Ok(out)
    }

    /// Total degree of the face's top weight.
    pub fn rho_degree(&self) -> Result<i64> {
        let t = self.t();
        let a = self.rotated_coeffs();
        let mut twice: i128 = 0;
        for k in 1..=t {
            twice += (i128::from(a[k]) + i128::from(a[t + 1 - k]))
                * (k as i128)
                * ((t + 1 - k) as i128);
        }
        debug_assert_eq!(twice % 2, 0);
        i64::try_from(twice / 2).map_err(|_| Error::Overflow("face top degree"))
    }

    /// The top weight as a weight point.
    pub fn rho_point(&self) -> Result<WeightPoint> {
        WeightPoint::new(self.base.clone(), self.rho_content()?, 0)
    }

    /// The reflection of the face: reverse the content across the interval,
    /// `c'_j = c_j(top) − c_{reversed j}`. An involution exchanging the
    /// highest weight with the top weight, preserving defect.
    pub fn tau(&self, point: &WeightPoint) -> Result<WeightPoint> {
        if point.base() != &self.base {
            return Err(Error::domain("weight point does not belong to this face's block"));
        }
        if point.delta_shift() != 0 {
            return Err(Error::domain("the face reflection acts on undeflected weight points"));
        }
        let e = self.base.e();
        let t = self.t();
        let c = point.content();
        let inside: BTreeSet<usize> = self.interval.iter().copied().collect();
        for (r, &cr) in c.iter().enumerate() {
            if !inside.contains(&r) && cr != 0 {
                return Err(Error::domain(format!(
                    "content is supported at residue {r}, outside the face interval"
                )));
            }
        }
        let rho = self.rho_content()?;
        let mut out = vec![0i64; e];
        for j in 1..=t {
            let v = rho[self.orig(j)] - c[self.orig(t + 1 - j)];
            if v < 0 {
                return Err(Error::domain("weight point lies outside the face"));
            }
            out[self.orig(j)] = v;
        }
        let image = WeightPoint::new(self.base.clone(), out, 0)?;
        if image.defect()? != point.defect()? {
            return Err(Error::integrity("face reflection failed to preserve defect"));
        }
        if e >= t + 2 {
            // Cross-check the hub against its closed form.
            let rho_hub = self.rho_hub()?;
            let a = self.rotated_coeffs();
            let in_hub = point.hub();
            let img_hub = image.hub();
            for j in 1..=t {
                let expect = rho_hub[self.orig(j)] + a[t + 1 - j] - in_hub[self.orig(t + 1 - j)];
                if img_hub[self.orig(j)] != expect {
                    return Err(Error::integrity("face reflection hub formula mismatch"));
                }
            }
        }
        Ok(image)
    }

    /// Generate the face crystal, checking that it closes exactly at the
    /// top weight.
    pub fn crystal(&self, keep_mps: bool) -> Result<CrystalGraph> {
        let d = self.rho_degree()?;
        let cap =
            u64::try_from(d + 1).map_err(|_| Error::Overflow("face degree"))?;
        let graph = build_crystal(&self.base, cap, Some(&self.interval), keep_mps)?;
        let max_attained = graph.max_degree();
        if max_attained > d {
            return Err(Error::integrity("face crystal grows past its top weight"));
        }
        if max_attained < d {
            return Err(Error::integrity("face crystal stops short of its top weight"));
        }
        let rho = self.rho_content()?;
        let top: Vec<&CrystalVertex> =
            graph.vertices.iter().filter(|v| v.degree() == d).collect();
        if top.len() != 1 || top[0].content != rho {
            return Err(Error::integrity("face crystal does not end at its top weight"));
        }
        Ok(graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{content_from_hub_on_interval, face_defect, in_face_region, string_defects};

    fn hexagon() -> FaceSpec {
        let base = DominantWeight::new(4, vec![0, 3, 2, 0]).unwrap();
        FaceSpec::new(base, vec![1, 2]).unwrap()
    }

    fn pentagon() -> FaceSpec {
        let base = DominantWeight::new(5, vec![0, 1, 1, 0, 0]).unwrap();
        FaceSpec::new(base, vec![1, 2, 3]).unwrap()
    }

    #[test]
    fn interval_validation() {
        let base = DominantWeight::new(4, vec![0, 3, 2, 0]).unwrap();
        assert!(FaceSpec::new(base.clone(), vec![]).is_err());
        assert!(FaceSpec::new(base.clone(), vec![0, 1, 2, 3]).is_err());
        assert!(FaceSpec::new(base.clone(), vec![1, 3]).is_err());
        assert!(FaceSpec::new(base.clone(), vec![4]).is_err());
        // Wrapping around the top residue is fine.
        assert!(FaceSpec::new(base.clone(), vec![3, 0]).is_ok());
    }

    #[test]
    fn top_weight_data() {
        let hex = hexagon();
        assert_eq!(hex.rho_content().unwrap(), vec![0, 5, 5, 0]);
        assert_eq!(hex.rho_hub().unwrap(), vec![5, -2, -3, 5]);
        assert_eq!(hex.rho_degree().unwrap(), 10);

        let pent = pentagon();
        assert_eq!(pent.rho_content().unwrap(), vec![0, 2, 3, 2, 0]);
        assert_eq!(pent.rho_hub().unwrap(), vec![2, 0, -1, -1, 2]);
        assert_eq!(pent.rho_degree().unwrap(), 7);

        // Interval covering all residues but one: the two outside additions
        // merge onto the single outside position.
        let base = DominantWeight::new(3, vec![1, 2, 1]).unwrap();
        let wrap = FaceSpec::new(base, vec![1, 2]).unwrap();
        assert_eq!(wrap.rho_content().unwrap(), vec![0, 3, 3]);
        assert_eq!(wrap.rho_hub().unwrap(), vec![7, -1, -2]);
        assert_eq!(wrap.rho_degree().unwrap(), 6);

        // The degree is the total content, and the hub pins down the content.
        for face in [hexagon(), pentagon(), wrap] {
            let c = face.rho_content().unwrap();
            assert_eq!(c.iter().sum::<i64>(), face.rho_degree().unwrap());
            assert_eq!(
                content_from_hub_on_interval(
                    face.base(),
                    face.interval(),
                    &face.rho_hub().unwrap()
                )
                .unwrap(),
                c
            );
        }
    }

    #[test]
    fn hexagon_face_matches_the_planar_region() {
        let graph = hexagon().crystal(false).unwrap();
        assert_eq!(graph.vertices().len(), 27);
        let mut expected: Vec<Vec<i64>> = Vec::new();
        for j1 in 0..=5i64 {
            for j2 in 0..=5i64 {
                if in_face_region(3, 2, j1, j2) {
                    expected.push(vec![0, j1, j2, 0]);
                }
            }
        }
        let mut got: Vec<Vec<i64>> =
            graph.vertices().iter().map(|v| v.content.clone()).collect();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);

        // Defects agree with the quadratic form on the region, and the six
        // corners are exactly the defect-zero points.
        let corners = [(0, 0), (3, 0), (0, 2), (5, 2), (3, 5), (5, 5)];
        for v in graph.vertices() {
            let (j1, j2) = (v.content[1], v.content[2]);
            assert_eq!(v.defect, face_defect(3, 2, j1, j2).unwrap());
            assert_eq!(v.defect == 0, corners.contains(&(j1, j2)), "at ({j1}, {j2})");
            assert!(v.count >= 1);
        }
    }

    #[test]
    fn pentagonal_face_matches_its_figure() {
        let graph = pentagon().crystal(true).unwrap();
        assert_eq!(graph.vertices().len(), 16);
        let zeros = graph.vertices().iter().filter(|v| v.defect == 0).count();
        let ones = graph.vertices().iter().filter(|v| v.defect == 1).count();
        assert_eq!((zeros, ones), (12, 4));

        let top = graph.vertex_by_content(&[0, 2, 3, 2, 0]).unwrap();
        let top = &graph.vertices()[top];
        assert_eq!(top.hub, vec![2, 0, -1, -1, 2]);
        assert_eq!(top.defect, 0);
        assert_eq!(top.count, 1);
        let charge = pentagon().base().multicharge();
        assert_eq!(
            top.mps.as_deref().unwrap(),
            &[Multipartition::parse(charge.clone(), "[[3], [2, 2]]").unwrap()]
        );

        // The defect-1 vertex whose hub is [1,0,0,1,0] carries two
        // multipartitions.
        let v = graph.vertex_by_content(&[0, 1, 1, 0, 0]).unwrap();
        let v = &graph.vertices()[v];
        assert_eq!(v.hub, vec![1, 0, 0, 1, 0]);
        assert_eq!(v.defect, 1);
        assert_eq!(v.count, 2);
        assert_eq!(
            v.mps.as_deref().unwrap(),
            &[
                Multipartition::parse(charge.clone(), "[[1], [1]]").unwrap(),
                Multipartition::parse(charge.clone(), "[[2], []]").unwrap(),
            ]
        );
    }

    #[test]
    fn single_residue_face_is_a_string() {
        let base = DominantWeight::new(4, vec![1, 0, 3, 1]).unwrap();
        let face = FaceSpec::new(base, vec![2]).unwrap();
        assert_eq!(face.rho_degree().unwrap(), 3);
        let graph = face.crystal(false).unwrap();
        let defects: Vec<i64> = graph.vertices().iter().map(|v| v.defect).collect();
        assert_eq!(defects, string_defects(0, 3));
        assert_eq!(
            graph.edges(),
            &[
                CrystalEdge { from: 0, to: 1, residue: 2 },
                CrystalEdge { from: 1, to: 2, residue: 2 },
                CrystalEdge { from: 2, to: 3, residue: 2 },
            ]
        );
    }

    #[test]
    fn reflection_swaps_the_ends_and_preserves_defect() {
        let pent = pentagon();
        let highest = WeightPoint::highest(pent.base().clone());
        assert_eq!(pent.tau(&highest).unwrap(), pent.rho_point().unwrap());
        assert_eq!(pent.tau(&pent.rho_point().unwrap()).unwrap(), highest);

        // The figure's example: hub [1,0,0,1,0] reflects to [2,-1,0,0,1].
        let p = WeightPoint::new(pent.base().clone(), vec![0, 1, 1, 0, 0], 0).unwrap();
        assert_eq!(p.hub(), vec![1, 0, 0, 1, 0]);
        let image = pent.tau(&p).unwrap();
        assert_eq!(image.hub(), vec![2, -1, 0, 0, 1]);
        assert_eq!(image.content(), vec![0, 2, 2, 1, 0]);

        // An involution on every vertex of the face, preserving defect.
        for face in [pentagon(), hexagon()] {
            let graph = face.crystal(false).unwrap();
            for v in graph.vertices() {
                let point =
                    WeightPoint::new(face.base().clone(), v.content.clone(), 0).unwrap();
                let image = face.tau(&point).unwrap();
                assert_eq!(image.defect().unwrap(), v.defect);
                assert!(graph.vertex_by_content(image.content()).is_some());
                assert_eq!(face.tau(&image).unwrap(), point);
            }
        }

        // Off-face points are rejected.
        let off = WeightPoint::new(pent.base().clone(), vec![1, 0, 0, 0, 0], 0).unwrap();
        assert!(pent.tau(&off).is_err());
        let deep = WeightPoint::new(pent.base().clone(), vec![0, 0, 0, 3, 0], 0).unwrap();
        assert!(pent.tau(&deep).is_err());
    }

    #[test]
    fn reflection_reverses_edges() {
        for face in [pentagon(), hexagon()] {
            let graph = face.crystal(false).unwrap();
            let t = face.t();
            for e in graph.edges() {
                let cu = &graph.vertices()[e.from].content;
                let cv = &graph.vertices()[e.to].content;
                let pu = WeightPoint::new(face.base().clone(), cu.clone(), 0).unwrap();
                let pv = WeightPoint::new(face.base().clone(), cv.clone(), 0).unwrap();
                let iu = graph.vertex_by_content(face.tau(&pu).unwrap().content()).unwrap();
                let iv = graph.vertex_by_content(face.tau(&pv).unwrap().content()).unwrap();
                let pos = face.interval().iter().position(|&r| r == e.residue).unwrap();
                let mirrored = face.interval()[t - 1 - pos];
                assert!(
                    graph
                        .edges()
                        .iter()
                        .any(|f| f.from == iv && f.to == iu && f.residue == mirrored),
                    "missing mirror of {e:?}"
                );
            }
        }
    }

    #[test]
    fn unrestricted_crystal_layers() {
        let base = DominantWeight::new(4, vec![0, 2, 3, 0]).unwrap();
        let graph = build_crystal(&base, 2, None, true).unwrap();
        // Degree 0: the vacuum; degree 1: one vertex per residue with an
        // addable corner; degree 2: distinct contents of two-node shapes.
        assert_eq!(graph.vertices()[0].content, vec![0, 0, 0, 0]);
        assert_eq!(graph.vertices()[0].hub, vec![0, 2, 3, 0]);
        let d1: Vec<i64> =
            graph.vertices().iter().filter(|v| v.degree() == 1).map(|v| v.count as i64).collect();
        assert_eq!(d1.len(), 2);
        assert!(graph.max_degree() <= 2);
        // Every vertex carries at least one multipartition and a
        // nonnegative defect.
        for v in graph.vertices() {
            assert!(v.count >= 1);
            assert!(v.defect >= 0);
            assert_eq!(v.mps.as_ref().unwrap().len() as u64, v.count);
        }
    }

    #[test]
    fn json_round_trip_and_dot() {
        let graph = pentagon().crystal(false).unwrap();
        let json = graph.to_json();
        let back = CrystalGraph::from_json(&json).unwrap();
        assert_eq!(back, graph);

        let dot = graph.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("v0 [label=\"[0,1,1,0,0]^0\"];"));
        assert!(dot.contains("v0 -> v1 [label=\"2\"];"));
        assert!(dot.contains("v0 -> v2 [label=\"1\"];"));

        // Tampered data is rejected.
        let mut bad = json.clone();
        bad["vertices"][0]["defect"] = json!(5);
        assert!(CrystalGraph::from_json(&bad).is_err());
    }
}
