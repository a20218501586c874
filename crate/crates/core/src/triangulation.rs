//! Combinatorial marked surfaces, dotted ideal triangulations, and diagonal
//! flips with persistent dot identities.
//!
//! A triangulation is stored as an oriented combinatorial map: each face is a
//! cyclic triple of directed edge sides, so self-gluings (as on the
//! once-punctured torus) are first-class. Every edge carries two labeled dots
//! and every face one; flips move the four interior dots of the flipped quad
//! to their new positions without relabeling them.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub type EdgeId = usize;
pub type FaceId = usize;
pub type DotId = usize;
pub type VertexId = usize;

/// A compact oriented surface with marked points on some boundary components.
///
/// `boundary` holds one entry per boundary component: the number of marked
/// points on it, with `0` meaning the component is a puncture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSurface {
    pub genus: usize,
    pub boundary: Vec<usize>,
}

impl MarkedSurface {
    /// Checks the Euler-characteristic condition guaranteeing that an ideal
    /// triangulation exists: chi(S) < d/2 with d the number of boundary arcs
    /// limiting to a marked point.
    pub fn new(genus: usize, boundary: Vec<usize>) -> Result<Self> {
        let chi = 2i64 - 2 * genus as i64 - boundary.len() as i64;
        let d: i64 = boundary.iter().map(|&m| m as i64).sum();
        if 2 * chi >= d {
            return Err(Error::InvalidTriangulation(format!(
                "no ideal triangulation: chi = {chi} is not < d/2 with d = {d}"
            )));
        }
        Ok(Self { genus, boundary })
    }
}

/// A directed reference to one side of an edge inside a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideRef {
    pub edge: EdgeId,
    /// True when the face traverses the edge against its canonical direction.
    pub reversed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Gluing {
    /// Two sides, each a (face, side-index) pair. The first one traverses the
    /// edge in its canonical direction.
    Interior([(FaceId, u8); 2]),
    Boundary((FaceId, u8)),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Edge {
    gluing: Gluing,
    /// Dots along the canonical direction: `dots[0]` is nearer the source.
    dots: [DotId; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Face {
    sides: [SideRef; 3],
    /// `corners[k]` is the vertex at the start of side `k`.
    corners: [VertexId; 3],
    dot: DotId,
    /// Order in which the three pointings are enumerated for rhombus numbers.
    pointing: [u8; 3],
}

/// An ideal triangulation decorated with two labeled dots per edge and one
/// per face. Dots index tropical coordinates; their labels persist under
/// flips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DottedTriangulation {
    faces: Vec<Face>,
    edges: Vec<Edge>,
    n_vertices: usize,
}

/// The twelve dot labels of the square around a flippable interior edge, in
/// the canonical slot order `(x1..x8, y1..y4)`.
///
/// Slots `x1..x8` run over the four boundary edges of the quad (near/far dot
/// per edge), `y1` and `y3` are the two face dots, `y2` and `y4` the two dots
/// of the diagonal. On a self-glued quad distinct slots may carry the same
/// dot label; the slot array records exactly that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadFrame {
    pub edge: EdgeId,
    pub slots: [DotId; 12],
}

impl QuadFrame {
    /// Dot labels that occupy more than one slot (nonempty only on
    /// self-glued quads).
    pub fn aliased_dots(&self) -> Vec<DotId> {
        let mut seen = BTreeMap::new();
        for &d in &self.slots {
            *seen.entry(d).or_insert(0usize) += 1;
        }
        seen.into_iter().filter(|&(_, n)| n > 1).map(|(d, _)| d).collect()
    }
}

impl DottedTriangulation {
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Total number of dots: twice the number of edges plus the number of
    /// faces.
    pub fn dot_count(&self) -> usize {
        2 * self.edges.len() + self.faces.len()
    }

    pub fn is_interior(&self, e: EdgeId) -> bool {
        matches!(self.edges[e].gluing, Gluing::Interior(_))
    }

    pub fn interior_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| self.is_interior(e)).collect()
    }

    pub fn boundary_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| !self.is_interior(e)).collect()
    }

    pub fn face_dot(&self, f: FaceId) -> DotId {
        self.faces[f].dot
    }

    /// The two dots of edge `e` along its canonical direction.
    pub fn edge_dots(&self, e: EdgeId) -> [DotId; 2] {
        self.edges[e].dots
    }

    /// The pointing enumeration order of face `f` (indices into its corners).
    pub fn pointing_order(&self, f: FaceId) -> [u8; 3] {
        self.faces[f].pointing
    }

    fn side_src(&self, f: FaceId, k: u8) -> VertexId {
        self.faces[f].corners[k as usize]
    }

    fn side_tgt(&self, f: FaceId, k: u8) -> VertexId {
        self.faces[f].corners[(k as usize + 1) % 3]
    }

    /// Dot of the side's edge nearer the side's source corner.
    pub fn dot_near_src(&self, f: FaceId, k: u8) -> DotId {
        let s = self.faces[f].sides[k as usize];
        self.edges[s.edge].dots[if s.reversed { 1 } else { 0 }]
    }

    /// Dot of the side's edge nearer the side's target corner.
    pub fn dot_near_tgt(&self, f: FaceId, k: u8) -> DotId {
        let s = self.faces[f].sides[k as usize];
        self.edges[s.edge].dots[if s.reversed { 0 } else { 1 }]
    }

    /// The seven dots of face `f` in side order: for each side its
    /// (near-source, near-target) dots, then the face dot.
    pub fn face_dots_local(&self, f: FaceId) -> [DotId; 7] {
        [
            self.dot_near_src(f, 0),
            self.dot_near_tgt(f, 0),
            self.dot_near_src(f, 1),
            self.dot_near_tgt(f, 1),
            self.dot_near_src(f, 2),
            self.dot_near_tgt(f, 2),
            self.faces[f].dot,
        ]
    }

    fn check(&self) -> Result<()> {
        let n = self.dot_count();
        let mut seen = vec![false; n];
        let mut mark = |d: DotId| -> Result<()> {
            if d >= n {
                return Err(Error::InvalidTriangulation(format!("dot label {d} out of range")));
            }
            if seen[d] {
                return Err(Error::InvalidTriangulation(format!("dot label {d} used twice")));
            }
            seen[d] = true;
            Ok(())
        };
        for e in &self.edges {
            mark(e.dots[0])?;
            mark(e.dots[1])?;
        }
        for f in &self.faces {
            mark(f.dot)?;
            let mut p = f.pointing;
            p.sort_unstable();
            if p != [0, 1, 2] {
                return Err(Error::InvalidTriangulation("pointing order is not a permutation".into()));
            }
        }
        for (ei, e) in self.edges.iter().enumerate() {
            let sides: &[(FaceId, u8)] = match &e.gluing {
                Gluing::Interior(s) => s,
                Gluing::Boundary(s) => std::slice::from_ref(s),
            };
            for &(f, k) in sides {
                if f >= self.faces.len() || k > 2 {
                    return Err(Error::InvalidTriangulation(format!("edge {ei} references invalid side")));
                }
                if self.faces[f].sides[k as usize].edge != ei {
                    return Err(Error::InvalidTriangulation(format!("edge {ei} gluing disagrees with face {f}")));
                }
            }
            if let Gluing::Interior([(f1, k1), (f2, k2)]) = e.gluing {
                let r1 = self.faces[f1].sides[k1 as usize].reversed;
                let r2 = self.faces[f2].sides[k2 as usize].reversed;
                if r1 || !r2 {
                    return Err(Error::InvalidTriangulation(format!(
                        "edge {ei}: canonical side must be forward and the glued side reversed"
                    )));
                }
                if self.side_src(f1, k1) != self.side_tgt(f2, k2) || self.side_tgt(f1, k1) != self.side_src(f2, k2) {
                    return Err(Error::InvalidTriangulation(format!("edge {ei}: endpoint mismatch across gluing")));
                }
            }
        }
        for (fi, f) in self.faces.iter().enumerate() {
            // no self-folded triangles
            if f.sides[0].edge == f.sides[1].edge
                || f.sides[1].edge == f.sides[2].edge
                || f.sides[0].edge == f.sides[2].edge
            {
                return Err(Error::SelfFolded);
            }
            for k in 0..3u8 {
                let s = f.sides[k as usize];
                let listed = match self.edges[s.edge].gluing {
                    Gluing::Interior(sides) => sides.contains(&(fi, k)),
                    Gluing::Boundary(side) => side == (fi, k),
                };
                if !listed {
                    return Err(Error::InvalidTriangulation(format!(
                        "face {fi} side {k} not listed in edge {}",
                        s.edge
                    )));
                }
            }
        }
        Ok(())
    }

    /// The quad frame around an interior edge, rejecting flips that would
    /// create a self-folded triangle.
    pub fn quad_around_edge(&self, e: EdgeId) -> Result<QuadFrame> {
        let [(f1, k1), (f2, k2)] = match self.edges[e].gluing {
            Gluing::Interior(s) => s,
            Gluing::Boundary(_) => return Err(Error::BoundaryEdge(e)),
        };
        let s_ab = (f1, (k1 + 2) % 3);
        let s_ca = (f1, (k1 + 1) % 3);
        let s_bd = (f2, (k2 + 1) % 3);
        let s_dc = (f2, (k2 + 2) % 3);
        let edge_of = |(f, k): (FaceId, u8)| self.faces[f].sides[k as usize].edge;
        if edge_of(s_ab) == edge_of(s_bd) || edge_of(s_dc) == edge_of(s_ca) {
            return Err(Error::FlipWouldSelfFold(e));
        }
        let frame = QuadFrame {
            edge: e,
            slots: [
                self.dot_near_src(s_ab.0, s_ab.1),
                self.dot_near_tgt(s_ab.0, s_ab.1),
                self.dot_near_src(s_bd.0, s_bd.1),
                self.dot_near_tgt(s_bd.0, s_bd.1),
                self.dot_near_src(s_dc.0, s_dc.1),
                self.dot_near_tgt(s_dc.0, s_dc.1),
                self.dot_near_src(s_ca.0, s_ca.1),
                self.dot_near_tgt(s_ca.0, s_ca.1),
                self.faces[f1].dot,
                self.dot_near_src(f1, k1),
                self.faces[f2].dot,
                self.dot_near_tgt(f1, k1),
            ],
        };
        // x-slots may alias on self-glued quads; the four interior slots
        // never can (only whole edges glue, and the dot labeling is a
        // bijection)
        let ys = &frame.slots[8..12];
        assert!(
            (0..4).all(|i| (i + 1..4).all(|j| ys[i] != ys[j])),
            "interior quad slots must be distinct dots"
        );
        Ok(frame)
    }

    /// Flips the diagonal `e`, returning the new dotted triangulation.
    ///
    /// Dots persist: the dot in slot `y_i` of the quad frame occupies slot
    /// `z_i` afterwards (face dots move onto the new diagonal, diagonal dots
    /// into the new faces). All other dots keep their edge or face.
    pub fn flip(&self, e: EdgeId) -> Result<DottedTriangulation> {
        let frame = self.quad_around_edge(e)?; // validates flippability
        let [(f1, k1), (f2, k2)] = match self.edges[e].gluing {
            Gluing::Interior(s) => s,
            Gluing::Boundary(_) => unreachable!(),
        };
        let a = self.faces[f1].corners[(k1 as usize + 2) % 3];
        let b = self.faces[f1].corners[k1 as usize];
        let c = self.faces[f1].corners[(k1 as usize + 1) % 3];
        let d = self.faces[f2].corners[(k2 as usize + 2) % 3];
        let s_ab = self.faces[f1].sides[(k1 as usize + 2) % 3];
        let s_ca = self.faces[f1].sides[(k1 as usize + 1) % 3];
        let s_bd = self.faces[f2].sides[(k2 as usize + 1) % 3];
        let s_dc = self.faces[f2].sides[(k2 as usize + 2) % 3];
        let (y1, y2, y3, y4) = (frame.slots[8], frame.slots[9], frame.slots[10], frame.slots[11]);

        let mut t = self.clone();
        t.faces[f1] = Face {
            sides: [s_ab, s_bd, SideRef { edge: e, reversed: true }],
            corners: [a, b, d],
            dot: y2,
            pointing: [0, 1, 2],
        };
        t.faces[f2] = Face {
            sides: [SideRef { edge: e, reversed: false }, s_dc, s_ca],
            corners: [a, d, c],
            dot: y4,
            pointing: [0, 1, 2],
        };
        t.edges[e].dots = [y1, y3];
        // rebuild every edge's gluing record from the face tables, keeping
        // the forward side canonical so dot order stays consistent
        let mut occurrences: Vec<Vec<(FaceId, u8)>> = vec![Vec::new(); t.edges.len()];
        for (fi, f) in t.faces.iter().enumerate() {
            for (k, s) in f.sides.iter().enumerate() {
                occurrences[s.edge].push((fi, k as u8));
            }
        }
        for (ei, occ) in occurrences.into_iter().enumerate() {
            let fwd = |s: &(FaceId, u8)| !t.faces[s.0].sides[s.1 as usize].reversed;
            t.edges[ei].gluing = match occ[..] {
                [s] => Gluing::Boundary(s),
                [s1, s2] if fwd(&s1) => Gluing::Interior([s1, s2]),
                [s1, s2] => Gluing::Interior([s2, s1]),
                _ => return Err(Error::InvalidTriangulation(format!("edge {ei} has bad side count"))),
            };
        }
        t.check()?;
        Ok(t)
    }

    /// Position descriptors for every dot, anchored on vertex identities.
    fn dot_positions(&self) -> Result<BTreeMap<DotId, PositionKey>> {
        let mut out = BTreeMap::new();
        for e in &self.edges {
            let (f, k) = match e.gluing {
                Gluing::Interior([s, _]) => s,
                Gluing::Boundary(s) => s,
            };
            let (u, v) = (self.side_src(f, k), self.side_tgt(f, k));
            let pair = if u <= v { (u, v) } else { (v, u) };
            out.insert(e.dots[0], PositionKey::EdgeDot { endpoints: pair, near: u });
            out.insert(e.dots[1], PositionKey::EdgeDot { endpoints: pair, near: v });
        }
        for f in &self.faces {
            let mut cs = f.corners;
            cs.sort_unstable();
            out.insert(f.dot, PositionKey::FaceDot { corners: cs });
        }
        // descriptors must be unambiguous
        let mut uniq = BTreeSet::new();
        for key in out.values() {
            if !uniq.insert(key.clone()) {
                return Err(Error::AmbiguousTopology);
            }
        }
        Ok(out)
    }

    /// The permutation relating two dottings of the same topological
    /// triangulation: `sigma[i]` is the label, in `other`, of the dot sitting
    /// at the position that label `i` occupies in `self`.
    pub fn permutation_between(&self, other: &DottedTriangulation) -> Result<Vec<usize>> {
        if self.dot_count() != other.dot_count() {
            return Err(Error::TopologicallyDistinct);
        }
        let p1 = self.dot_positions()?;
        let p2 = other.dot_positions()?;
        let inv2: BTreeMap<&PositionKey, DotId> = p2.iter().map(|(d, k)| (k, *d)).collect();
        let mut sigma = vec![0usize; self.dot_count()];
        for (d, key) in &p1 {
            match inv2.get(key) {
                Some(&d2) => sigma[*d] = d2,
                None => return Err(Error::TopologicallyDistinct),
            }
        }
        Ok(sigma)
    }

    // ---------------------------------------------------------------- JSON

    /// Serializes to the interchange schema:
    /// `{"faces":[[e,e,e],...],"boundary":[e,...],"dots":{"1":{"edge":e,"slot":0},...}}`.
    ///
    /// Dot labels are 1-based in the schema; in-memory labels are 0-based.
    pub fn to_json(&self) -> serde_json::Value {
        let faces: Vec<Vec<usize>> =
            self.faces.iter().map(|f| f.sides.iter().map(|s| s.edge).collect()).collect();
        let boundary = self.boundary_edges();
        let mut dots = serde_json::Map::new();
        for (ei, e) in self.edges.iter().enumerate() {
            for (slot, &d) in e.dots.iter().enumerate() {
                dots.insert((d + 1).to_string(), serde_json::json!({ "edge": ei, "slot": slot }));
            }
        }
        for (fi, f) in self.faces.iter().enumerate() {
            dots.insert((f.dot + 1).to_string(), serde_json::json!({ "face": fi }));
        }
        serde_json::json!({ "faces": faces, "boundary": boundary, "dots": dots })
    }

    /// Parses the interchange schema. Orientations are reconstructed by
    /// propagation (the first face is taken as written), and vertices by
    /// gluing corners around each ideal point.
    pub fn from_json(v: &serde_json::Value) -> Result<DottedTriangulation> {
        let bad = |m: &str| Error::InvalidTriangulation(m.to_string());
        let faces_raw: Vec<Vec<usize>> = serde_json::from_value(
            v.get("faces").cloned().ok_or_else(|| bad("missing faces"))?,
        )
        .map_err(|e| bad(&format!("faces: {e}")))?;
        let boundary: Vec<usize> = serde_json::from_value(
            v.get("boundary").cloned().unwrap_or_else(|| serde_json::json!([])),
        )
        .map_err(|e| bad(&format!("boundary: {e}")))?;
        if faces_raw.iter().any(|f| f.len() != 3) {
            return Err(bad("every face needs exactly 3 edges"));
        }
        let n_edges = faces_raw.iter().flatten().copied().max().map_or(0, |m| m + 1);
        // collect side occurrences per edge
        let mut occ: Vec<Vec<(FaceId, u8)>> = vec![Vec::new(); n_edges];
        for (fi, f) in faces_raw.iter().enumerate() {
            for (k, &e) in f.iter().enumerate() {
                occ[e].push((fi, k as u8));
            }
        }
        let boundary_set: BTreeSet<usize> = boundary.iter().copied().collect();
        for (ei, o) in occ.iter().enumerate() {
            let expect = if boundary_set.contains(&ei) { 1 } else { 2 };
            if o.len() != expect {
                return Err(bad(&format!("edge {ei} occurs {} times, expected {expect}", o.len())));
            }
        }
        // connectivity (needed for a meaningful vertex derivation)
        let mut face_seen = vec![false; faces_raw.len()];
        let mut stack = vec![0usize];
        while let Some(fi) = stack.pop() {
            if face_seen[fi] {
                continue;
            }
            face_seen[fi] = true;
            for &e in &faces_raw[fi] {
                if let [s1, s2] = occ[e][..] {
                    let other = if s1.0 == fi { s2.0 } else { s1.0 };
                    if !face_seen[other] {
                        stack.push(other);
                    }
                }
            }
        }
        if face_seen.iter().any(|&s| !s) {
            return Err(bad("triangulation is not connected"));
        }
        // canonical edge directions: faces are listed counterclockwise, so
        // the first occurrence (in face order) traverses each edge forward
        let mut reversed: Vec<[Option<bool>; 3]> = vec![[None; 3]; faces_raw.len()];
        for o in &occ {
            for (idx, &(fi, k)) in o.iter().enumerate() {
                reversed[fi][k as usize] = Some(idx == 1);
            }
        }
        // vertices via union-find on corners (corner (f,k) = start of side k)
        let nf = faces_raw.len();
        let mut parent: Vec<usize> = (0..3 * nf).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let corner = |f: usize, k: usize| 3 * f + k;
        for o in &occ {
            if let [(f1, k1), (f2, k2)] = o[..] {
                // src corner of one side  ==  tgt corner of the other
                let a = find(&mut parent, corner(f1, k1 as usize));
                let b = find(&mut parent, corner(f2, (k2 as usize + 1) % 3));
                parent[a] = b;
                let c = find(&mut parent, corner(f1, (k1 as usize + 1) % 3));
                let d = find(&mut parent, corner(f2, k2 as usize));
                parent[c] = d;
            }
        }
        let mut next = 0usize;
        let mut names: BTreeMap<usize, usize> = BTreeMap::new();
        let mut vertex_of = Vec::with_capacity(3 * nf);
        for x in 0..3 * nf {
            let r = find(&mut parent, x);
            let id = *names.entry(r).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            vertex_of.push(id);
        }
        // dots
        let dots_raw = v.get("dots").and_then(|d| d.as_object()).ok_or_else(|| bad("missing dots"))?;
        let n_dots = 2 * n_edges + nf;
        if dots_raw.len() != n_dots {
            return Err(bad(&format!("expected {n_dots} dots, got {}", dots_raw.len())));
        }
        let mut edge_dots: Vec<[Option<DotId>; 2]> = vec![[None; 2]; n_edges];
        let mut face_dots: Vec<Option<DotId>> = vec![None; nf];
        for (label, place) in dots_raw {
            let l: usize = label.parse().map_err(|_| bad("dot labels must be integers"))?;
            if l == 0 || l > n_dots {
                return Err(bad(&format!("dot label {l} out of range 1..{n_dots}")));
            }
            let d = l - 1;
            if let Some(e) = place.get("edge") {
                let e = e.as_u64().ok_or_else(|| bad("edge must be an index"))? as usize;
                let slot = place.get("slot").and_then(|s| s.as_u64()).ok_or_else(|| bad("edge dot needs slot"))? as usize;
                if e >= n_edges || slot > 1 {
                    return Err(bad("edge dot out of range"));
                }
                edge_dots[e][slot] = Some(d);
            } else if let Some(f) = place.get("face") {
                let f = f.as_u64().ok_or_else(|| bad("face must be an index"))? as usize;
                if f >= nf {
                    return Err(bad("face dot out of range"));
                }
                face_dots[f] = Some(d);
            } else {
                return Err(bad("dot must name an edge or a face"));
            }
        }
        let edges: Vec<Edge> = (0..n_edges)
            .map(|ei| {
                let dots = [
                    edge_dots[ei][0].ok_or_else(|| bad(&format!("edge {ei} missing dot slot 0")))?,
                    edge_dots[ei][1].ok_or_else(|| bad(&format!("edge {ei} missing dot slot 1")))?,
                ];
                let gluing = match occ[ei][..] {
                    [s] => Gluing::Boundary(s),
                    [s1, s2] => Gluing::Interior([s1, s2]),
                    _ => unreachable!(),
                };
                Ok(Edge { gluing, dots })
            })
            .collect::<Result<_>>()?;
        let faces: Vec<Face> = (0..nf)
            .map(|fi| {
                let sides = [0, 1, 2].map(|k| SideRef {
                    edge: faces_raw[fi][k],
                    reversed: reversed[fi][k].unwrap(),
                });
                let corners = [0, 1, 2].map(|k| vertex_of[corner(fi, k)]);
                Ok(Face {
                    sides,
                    corners,
                    dot: face_dots[fi].ok_or_else(|| bad(&format!("face {fi} missing dot")))?,
                    pointing: [0, 1, 2],
                })
            })
            .collect::<Result<_>>()?;
        let t = DottedTriangulation { faces, edges, n_vertices: next };
        t.check()?;
        Ok(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum PositionKey {
    EdgeDot { endpoints: (VertexId, VertexId), near: VertexId },
    FaceDot { corners: [VertexId; 3] },
}

// -------------------------------------------------------------------- builders

/// Single ideal triangle: corners `a, b, c` counterclockwise, 7 dots ordered
/// `(ab_a, ab_b, bc_b, bc_c, ca_c, ca_a, face)`.
pub fn build_triangle() -> DottedTriangulation {
    let faces = vec![Face {
        sides: [
            SideRef { edge: 0, reversed: false },
            SideRef { edge: 1, reversed: false },
            SideRef { edge: 2, reversed: false },
        ],
        corners: [0, 1, 2],
        dot: 6,
        pointing: [0, 1, 2],
    }];
    let edges = vec![
        Edge { gluing: Gluing::Boundary((0, 0)), dots: [0, 1] },
        Edge { gluing: Gluing::Boundary((0, 1)), dots: [2, 3] },
        Edge { gluing: Gluing::Boundary((0, 2)), dots: [4, 5] },
    ];
    let t = DottedTriangulation { faces, edges, n_vertices: 3 };
    debug_assert!(t.check().is_ok());
    t
}

/// The diagonal edge id of [`build_square`].
pub const SQUARE_DIAGONAL: EdgeId = 4;

/// Ideal square with corners `a, b, d, c` counterclockwise and diagonal
/// `b-c`; dots are labeled so that coordinate vectors read
/// `(x1..x8, y1..y4)` in the canonical quad-frame order.
pub fn build_square() -> DottedTriangulation {
    let faces = vec![
        // top (a, b, c): sides ab, bc (diagonal), ca
        Face {
            sides: [
                SideRef { edge: 0, reversed: false },
                SideRef { edge: 4, reversed: false },
                SideRef { edge: 3, reversed: false },
            ],
            corners: [0, 1, 3],
            dot: 8,
            pointing: [0, 1, 2],
        },
        // bottom, stored (d, c, b) so its local letters match the bracket
        // convention (square corner c is the bottom's local b and vice
        // versa); pointings run apex-first, then b, then c.
        Face {
            sides: [
                SideRef { edge: 2, reversed: false },
                SideRef { edge: 4, reversed: true },
                SideRef { edge: 1, reversed: false },
            ],
            corners: [2, 3, 1],
            dot: 10,
            pointing: [0, 2, 1],
        },
    ];
    let edges = vec![
        Edge { gluing: Gluing::Boundary((0, 0)), dots: [0, 1] }, // ab: x1 x2
        Edge { gluing: Gluing::Boundary((1, 2)), dots: [2, 3] }, // bd: x3 x4
        Edge { gluing: Gluing::Boundary((1, 0)), dots: [4, 5] }, // dc: x5 x6
        Edge { gluing: Gluing::Boundary((0, 2)), dots: [6, 7] }, // ca: x7 x8
        Edge { gluing: Gluing::Interior([(0, 1), (1, 1)]), dots: [9, 11] }, // diagonal: y2 y4
    ];
    let t = DottedTriangulation { faces, edges, n_vertices: 4 };
    debug_assert!(t.check().is_ok());
    t
}

/// The two diagonal edge ids of [`build_pentagon_base`].
pub const PENTAGON_DIAGONALS: [EdgeId; 2] = [5, 6];

/// Pentagon with vertices `P0..P4` counterclockwise, fan-triangulated from
/// `P0` with diagonals `P0P2` and `P0P3`.
///
/// Interior dots are labeled `0..=6` so that the canonical five-flip loop
/// ([`pentagon_flip_loop`] of length 5) induces the dot permutation
/// `0->1->4->6->5->3->2->0`; boundary dots are `7..=16` in edge order.
pub fn build_pentagon_base() -> DottedTriangulation {
    let faces = vec![
        Face {
            sides: [
                SideRef { edge: 0, reversed: false },
                SideRef { edge: 1, reversed: false },
                SideRef { edge: 5, reversed: true },
            ],
            corners: [0, 1, 2],
            dot: 2,
            pointing: [0, 1, 2],
        },
        Face {
            sides: [
                SideRef { edge: 5, reversed: false },
                SideRef { edge: 2, reversed: false },
                SideRef { edge: 6, reversed: true },
            ],
            corners: [0, 2, 3],
            dot: 5,
            pointing: [0, 1, 2],
        },
        Face {
            sides: [
                SideRef { edge: 6, reversed: false },
                SideRef { edge: 3, reversed: false },
                SideRef { edge: 4, reversed: false },
            ],
            corners: [0, 3, 4],
            dot: 4,
            pointing: [0, 1, 2],
        },
    ];
    let edges = vec![
        Edge { gluing: Gluing::Boundary((0, 0)), dots: [7, 8] },
        Edge { gluing: Gluing::Boundary((0, 1)), dots: [9, 10] },
        Edge { gluing: Gluing::Boundary((1, 1)), dots: [11, 12] },
        Edge { gluing: Gluing::Boundary((2, 1)), dots: [13, 14] },
        Edge { gluing: Gluing::Boundary((2, 2)), dots: [15, 16] },
        Edge { gluing: Gluing::Interior([(1, 0), (0, 2)]), dots: [0, 3] },
        Edge { gluing: Gluing::Interior([(2, 0), (1, 2)]), dots: [1, 6] },
    ];
    let t = DottedTriangulation { faces, edges, n_vertices: 5 };
    debug_assert!(t.check().is_ok());
    t
}

/// The canonical pentagon flip sequence of the given length: the two
/// diagonals are flipped in strict alternation. Length 5 returns to the
/// starting topological triangulation; length 35 returns to the starting
/// dotted triangulation.
pub fn pentagon_flip_loop(len: usize) -> Vec<EdgeId> {
    (0..len).map(|i| PENTAGON_DIAGONALS[i % 2]).collect()
}

/// Once-punctured torus: one vertex, three edges, two faces (8 dots).
pub fn build_once_punctured_torus() -> DottedTriangulation {
    let faces = vec![
        Face {
            sides: [
                SideRef { edge: 0, reversed: false },
                SideRef { edge: 1, reversed: false },
                SideRef { edge: 2, reversed: false },
            ],
            corners: [0, 0, 0],
            dot: 6,
            pointing: [0, 1, 2],
        },
        Face {
            sides: [
                SideRef { edge: 0, reversed: true },
                SideRef { edge: 1, reversed: true },
                SideRef { edge: 2, reversed: true },
            ],
            corners: [0, 0, 0],
            dot: 7,
            pointing: [0, 1, 2],
        },
    ];
    let edges = vec![
        Edge { gluing: Gluing::Interior([(0, 0), (1, 0)]), dots: [0, 1] },
        Edge { gluing: Gluing::Interior([(0, 1), (1, 1)]), dots: [2, 3] },
        Edge { gluing: Gluing::Interior([(0, 2), (1, 2)]), dots: [4, 5] },
    ];
    let t = DottedTriangulation { faces, edges, n_vertices: 1 };
    debug_assert!(t.check().is_ok());
    t
}
