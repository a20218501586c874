//! Web schematics and the tropical coordinate map.
//!
//! A reduced web restricted to a triangle is a single honeycomb (oriented
//! all-in or all-out) plus corner arcs; the schematic records the honeycomb
//! orientation and size together with six arc counts. Coordinates are the
//! integer combination of the eight local generator columns, glued across
//! edges by matching edge-coordinate pairs.

use crate::cone::{decompose, is_in_ktgs_cone, ConePoint};
use crate::square;
use crate::triangulation::{build_square, DottedTriangulation, FaceId};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Honeycomb orientation in a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoneycombDir {
    In,
    Out,
    None,
}

/// Honeycomb plus corner-arc counts for one triangle.
///
/// `arcs` is ordered `[l_a, r_a, l_b, r_b, l_c, r_c]` over the triangle's
/// corners `a, b, c`; the honeycomb size is zero exactly when the direction
/// is `None`. Serialized as
/// `{"honeycomb":{"dir":"in|out|none","size":n},"arcs":[...]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TriangleSchematicRepr", into = "TriangleSchematicRepr")]
pub struct TriangleSchematic {
    pub honeycomb: HoneycombDir,
    pub size: u64,
    pub arcs: [u64; 6],
}

#[derive(Serialize, Deserialize)]
struct HoneycombRepr {
    dir: HoneycombDir,
    size: u64,
}

#[derive(Serialize, Deserialize)]
struct TriangleSchematicRepr {
    honeycomb: HoneycombRepr,
    arcs: [u64; 6],
}

impl From<TriangleSchematic> for TriangleSchematicRepr {
    fn from(s: TriangleSchematic) -> Self {
        TriangleSchematicRepr {
            honeycomb: HoneycombRepr { dir: s.honeycomb, size: s.size },
            arcs: s.arcs,
        }
    }
}

impl TryFrom<TriangleSchematicRepr> for TriangleSchematic {
    type Error = Error;
    fn try_from(r: TriangleSchematicRepr) -> Result<Self> {
        let s = TriangleSchematic { honeycomb: r.honeycomb.dir, size: r.honeycomb.size, arcs: r.arcs };
        s.validate()?;
        Ok(s)
    }
}

impl Default for TriangleSchematic {
    fn default() -> Self {
        TriangleSchematic { honeycomb: HoneycombDir::None, size: 0, arcs: [0; 6] }
    }
}

pub const ARC_LA: usize = 0;
pub const ARC_RA: usize = 1;
pub const ARC_LB: usize = 2;
pub const ARC_RB: usize = 3;
pub const ARC_LC: usize = 4;
pub const ARC_RC: usize = 5;

/// Local generator columns in the 7-dot order
/// `(ab_a, ab_b, bc_b, bc_c, ca_c, ca_a, face)`.
pub const GEN_L_A: [i64; 7] = [1, 2, 0, 0, 2, 1, 2];
pub const GEN_R_A: [i64; 7] = [2, 1, 0, 0, 1, 2, 1];
pub const GEN_L_B: [i64; 7] = [2, 1, 1, 2, 0, 0, 2];
pub const GEN_R_B: [i64; 7] = [1, 2, 2, 1, 0, 0, 1];
pub const GEN_L_C: [i64; 7] = [0, 0, 2, 1, 1, 2, 2];
pub const GEN_R_C: [i64; 7] = [0, 0, 1, 2, 2, 1, 1];
pub const GEN_T_IN: [i64; 7] = [1, 2, 1, 2, 1, 2, 3];
pub const GEN_T_OUT: [i64; 7] = [2, 1, 2, 1, 2, 1, 3];

const ARC_GENS: [[i64; 7]; 6] = [GEN_L_A, GEN_R_A, GEN_L_B, GEN_R_B, GEN_L_C, GEN_R_C];

impl TriangleSchematic {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn validate(&self) -> Result<()> {
        let none = matches!(self.honeycomb, HoneycombDir::None);
        if none != (self.size == 0) {
            return Err(Error::InvalidSchematic(
                "honeycomb size must be zero exactly when the direction is none".into(),
            ));
        }
        Ok(())
    }

    pub fn arcs_only(arcs: [u64; 6]) -> Self {
        TriangleSchematic { honeycomb: HoneycombDir::None, size: 0, arcs }
    }

    pub fn honeycomb(dir: HoneycombDir, size: u64) -> Self {
        TriangleSchematic { honeycomb: dir, size, arcs: [0; 6] }
    }

    fn single_arc(idx: usize) -> Self {
        let mut arcs = [0u64; 6];
        arcs[idx] = 1;
        Self::arcs_only(arcs)
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0 && self.arcs.iter().all(|&a| a == 0)
    }

    /// Componentwise union of two schematics; fails when the honeycomb
    /// orientations conflict.
    pub fn try_add(&self, other: &TriangleSchematic) -> Result<TriangleSchematic> {
        let honeycomb = match (self.honeycomb, other.honeycomb, self.size, other.size) {
            (h, HoneycombDir::None, _, _) => h,
            (HoneycombDir::None, h, _, _) => h,
            (a, b, _, _) if a == b => a,
            _ => {
                return Err(Error::InvalidSchematic(
                    "cannot union opposite honeycomb orientations in one triangle".into(),
                ))
            }
        };
        let mut arcs = self.arcs;
        for (a, b) in arcs.iter_mut().zip(&other.arcs) {
            *a += b;
        }
        Ok(TriangleSchematic { honeycomb, size: self.size + other.size, arcs })
    }

    pub fn scaled(&self, k: u64) -> TriangleSchematic {
        let honeycomb = if self.size * k == 0 { HoneycombDir::None } else { self.honeycomb };
        TriangleSchematic {
            honeycomb,
            size: self.size * k,
            arcs: self.arcs.map(|a| a * k),
        }
    }
}

/// The seven local coordinates of a triangle schematic.
pub fn triangle_coords(s: &TriangleSchematic) -> ConePoint {
    s.validate().expect("invalid schematic");
    let honey: [i64; 7] = match s.honeycomb {
        HoneycombDir::In => GEN_T_IN,
        HoneycombDir::Out => GEN_T_OUT,
        HoneycombDir::None => [0; 7],
    };
    let out: [i64; 7] = std::array::from_fn(|i| {
        let mut v = s.size as i64 * honey[i];
        for (arc, gen) in s.arcs.iter().zip(ARC_GENS.iter()) {
            v += *arc as i64 * gen[i];
        }
        v
    });
    ConePoint(out.to_vec())
}

/// Glues per-face local coordinates into a global vector; faces missing from
/// the map are empty. Fails when the two sides of an interior edge disagree.
pub fn glue_coords(
    per_face: &BTreeMap<FaceId, TriangleSchematic>,
    t: &DottedTriangulation,
) -> Result<ConePoint> {
    let n = t.dot_count();
    let mut values: Vec<Option<i64>> = vec![None; n];
    let empty = TriangleSchematic::empty();
    for f in 0..t.n_faces() {
        let s = per_face.get(&f).unwrap_or(&empty);
        s.validate()?;
        let local = triangle_coords(s);
        let dots = t.face_dots_local(f);
        for (i, &d) in dots.iter().enumerate() {
            match values[d] {
                None => values[d] = Some(local.0[i]),
                Some(prev) if prev == local.0[i] => {}
                Some(prev) => {
                    // report the offending edge with both coordinate pairs
                    let edge = (0..t.n_edges())
                        .find(|&e| t.edge_dots(e).contains(&d))
                        .unwrap_or(usize::MAX);
                    let [d0, d1] = t.edge_dots(edge);
                    let get = |dd: usize, fallback: i64| {
                        if dd == d {
                            fallback
                        } else {
                            values[dd].unwrap_or(fallback)
                        }
                    };
                    return Err(Error::EdgeMismatch {
                        edge,
                        left: (get(d0, prev), get(d1, prev)),
                        right: (get(d0, local.0[i]), get(d1, local.0[i])),
                    });
                }
            }
        }
    }
    Ok(ConePoint(values.into_iter().map(|v| v.unwrap_or(0)).collect()))
}

/// Inverts the coordinate map on the triangle: determines the honeycomb
/// orientation by sector membership and returns the unique nonnegative
/// integer schematic. On the wall (no honeycomb needed) size zero is
/// returned.
pub fn triangle_inverse(c: &ConePoint) -> Result<TriangleSchematic> {
    let t = crate::triangulation::build_triangle();
    if c.len() != 7 {
        return Err(Error::LengthMismatch { expected: 7, got: c.len() });
    }
    if !is_in_ktgs_cone(c, &t)? {
        return Err(Error::NotInCone);
    }
    let arcs = [GEN_L_A, GEN_R_A, GEN_L_B, GEN_R_B, GEN_L_C, GEN_R_C];
    for dir in [HoneycombDir::Out, HoneycombDir::In] {
        let honey = if matches!(dir, HoneycombDir::Out) { GEN_T_OUT } else { GEN_T_IN };
        let mut gens: Vec<ConePoint> = arcs.iter().map(|g| ConePoint(g.to_vec())).collect();
        gens.push(ConePoint(honey.to_vec()));
        if let Ok(lambda) = decompose(c, &gens) {
            let size = lambda[6] as u64;
            let dir = if size == 0 { HoneycombDir::None } else { dir };
            return Ok(TriangleSchematic {
                honeycomb: dir,
                size,
                arcs: std::array::from_fn(|i| lambda[i] as u64),
            });
        }
    }
    Err(Error::NotInCone)
}

/// The topological web model for the square: the restrictions to the two
/// triangles of the split triangulation. Corner letters are local to each
/// face; the canonical square maps its face 0 to the top triangle and face 1
/// to the bottom one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareWebSchematic {
    pub top: TriangleSchematic,
    pub bottom: TriangleSchematic,
    /// Optional family the schematic was assembled from.
    pub family: Option<u8>,
}

impl SquareWebSchematic {
    pub fn empty() -> Self {
        SquareWebSchematic {
            top: TriangleSchematic::empty(),
            bottom: TriangleSchematic::empty(),
            family: None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty() && self.bottom.is_empty()
    }

    pub fn per_face(&self) -> BTreeMap<FaceId, TriangleSchematic> {
        BTreeMap::from([(0, self.top), (1, self.bottom)])
    }

    pub fn try_add(&self, other: &SquareWebSchematic) -> Result<SquareWebSchematic> {
        Ok(SquareWebSchematic {
            top: self.top.try_add(&other.top)?,
            bottom: self.bottom.try_add(&other.bottom)?,
            family: self.family.or(other.family),
        })
    }

    /// Interchange form: `{"faces":{"0":{...},"1":{...}},"family":n?}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({ "faces": schematics_to_json(&self.per_face()) });
        if let Some(f) = self.family {
            v["family"] = serde_json::json!(f);
        }
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SquareWebSchematic> {
        let per_face = schematics_from_json(v)?;
        let empty = TriangleSchematic::empty();
        let family = v
            .get("family")
            .and_then(|f| f.as_u64())
            .map(|f| f as u8);
        Ok(SquareWebSchematic {
            top: *per_face.get(&0).unwrap_or(&empty),
            bottom: *per_face.get(&1).unwrap_or(&empty),
            family,
        })
    }
}

/// Serializes a per-face schematic map as `{"0": {...}, "1": {...}}`.
pub fn schematics_to_json(per_face: &BTreeMap<FaceId, TriangleSchematic>) -> serde_json::Value {
    let mut faces = serde_json::Map::new();
    for (f, s) in per_face {
        faces.insert(f.to_string(), serde_json::to_value(s).expect("schematic serializes"));
    }
    serde_json::Value::Object(faces)
}

/// Parses the `{"faces":{...}}` interchange form (or a bare face map).
pub fn schematics_from_json(v: &serde_json::Value) -> Result<BTreeMap<FaceId, TriangleSchematic>> {
    let faces = v.get("faces").unwrap_or(v);
    let obj = faces
        .as_object()
        .ok_or_else(|| Error::InvalidSchematic("expected a face map".into()))?;
    let mut out = BTreeMap::new();
    for (k, sv) in obj {
        let f: FaceId = k
            .parse()
            .map_err(|_| Error::InvalidSchematic(format!("bad face index {k}")))?;
        let s: TriangleSchematic = serde_json::from_value(sv.clone())
            .map_err(|e| Error::InvalidSchematic(e.to_string()))?;
        out.insert(f, s);
    }
    Ok(out)
}

/// Display names of the 22 Hilbert-basis webs of the triangulated square,
/// indexed 1..=22. Bracket entries refer to the top and bottom triangle.
pub const WEB_NAMES: [&str; 22] = [
    "[R_a]",
    "[L_a]",
    "[R_b]",
    "[L_b]",
    "[R_c]",
    "[L_c]",
    "[R_d]",
    "[L_d]",
    "[T_out,R_b]",
    "[T_out,L_c]",
    "[T_in,L_b]",
    "[T_in,R_c]",
    "[L_b,T_out]",
    "[L_c,T_in]",
    "[R_b,T_in]",
    "[R_c,T_out]",
    "[T_out,T_in]",
    "[T_in,T_out]",
    "[L_b,R_c]",
    "[R_b,L_c]",
    "[R_c,L_b]",
    "[L_c,R_b]",
];

/// Schematic of Hilbert-basis web `id` (1..=22) on the canonical square.
///
/// The square's corner letters and the bottom face's local letters differ:
/// the bottom face is traversed with the opposite orientation, so a bracket
/// arc at square corner `b` sits at the bottom face's local corner `c` and
/// vice versa.
pub fn hilbert_web(id: usize) -> SquareWebSchematic {
    assert!((1..=22).contains(&id), "web ids are 1..=22");
    let arc = TriangleSchematic::single_arc;
    let empty = TriangleSchematic::empty;
    let het = |d| TriangleSchematic::honeycomb(d, 1);
    let (top, bottom) = match id {
        1 => (arc(ARC_RA), empty()),
        2 => (arc(ARC_LA), empty()),
        3 => (arc(ARC_RB), arc(ARC_RC)),
        4 => (arc(ARC_LB), arc(ARC_LC)),
        5 => (arc(ARC_RC), arc(ARC_RB)),
        6 => (arc(ARC_LC), arc(ARC_LB)),
        7 => (empty(), arc(ARC_RA)),
        8 => (empty(), arc(ARC_LA)),
        9 => (het(HoneycombDir::Out), arc(ARC_RC)),
        10 => (het(HoneycombDir::Out), arc(ARC_LB)),
        11 => (het(HoneycombDir::In), arc(ARC_LC)),
        12 => (het(HoneycombDir::In), arc(ARC_RB)),
        13 => (arc(ARC_LB), het(HoneycombDir::Out)),
        14 => (arc(ARC_LC), het(HoneycombDir::In)),
        15 => (arc(ARC_RB), het(HoneycombDir::In)),
        16 => (arc(ARC_RC), het(HoneycombDir::Out)),
        17 => (het(HoneycombDir::Out), het(HoneycombDir::In)),
        18 => (het(HoneycombDir::In), het(HoneycombDir::Out)),
        19 => (arc(ARC_LB), arc(ARC_RB)),
        20 => (arc(ARC_RB), arc(ARC_LB)),
        21 => (arc(ARC_RC), arc(ARC_LC)),
        22 => (arc(ARC_LC), arc(ARC_RC)),
        _ => unreachable!(),
    };
    SquareWebSchematic { top, bottom, family: None }
}

/// Coordinates of Hilbert-basis web `id` (1..=22) on the canonical square.
pub fn hilbert_vector(id: usize) -> ConePoint {
    static TABLE: std::sync::OnceLock<Vec<ConePoint>> = std::sync::OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let sq = build_square();
        (1..=22)
            .map(|i| glue_coords(&hilbert_web(i).per_face(), &sq).expect("catalog webs glue"))
            .collect()
    });
    table[id - 1].clone()
}

/// All families whose sector contains `c`: sector membership of the
/// X-coordinates narrowed by an exact nonnegativity solve. Generic points
/// yield one family; walls several; zero all 42.
pub fn classify_family(c: &ConePoint) -> Result<BTreeSet<u8>> {
    let sq = build_square();
    if !is_in_ktgs_cone(c, &sq)? {
        return Err(Error::NotInCone);
    }
    let x = square::x_coords(c)?;
    let mut out = BTreeSet::new();
    for i in square::sector_of(&x) {
        let gens = square::sector_generators(i);
        if decompose(c, &gens).is_ok() {
            out.insert(i);
        }
    }
    Ok(out)
}

/// Inverts the coordinate map on the square: picks the least containing
/// family, decomposes against its twelve generators, and assembles the
/// schematic.
pub fn square_inverse(c: &ConePoint) -> Result<SquareWebSchematic> {
    let families = classify_family(c)?;
    let &fam = families.iter().next().ok_or(Error::NotInCone)?;
    let lambda = decompose(c, &square::sector_generators(fam))?;
    let mut out = SquareWebSchematic::empty();
    for (j, &l) in lambda.iter().enumerate() {
        if l == 0 {
            continue;
        }
        let web_id = if j < 8 { j + 1 } else { square::sector_webs(fam)[j - 8] };
        let piece = hilbert_web(web_id);
        out = out.try_add(&SquareWebSchematic {
            top: piece.top.scaled(l as u64),
            bottom: piece.bottom.scaled(l as u64),
            family: None,
        })?;
    }
    out.family = Some(fam);
    Ok(out)
}

/// Transports a schematic across the diagonal flip: mutate its coordinates,
/// re-express them in the flipped triangulation's canonical frame, and
/// invert there.
pub fn flip_web(s: &SquareWebSchematic) -> Result<SquareWebSchematic> {
    let sq = build_square();
    let c = glue_coords(&s.per_face(), &sq)?;
    let step = crate::mutation::MutationStep::new(&sq, crate::triangulation::SQUARE_DIAGONAL)?;
    let m = crate::mutation::flip_mutation(&c, &step)?;
    square_inverse(&square::to_flipped_frame(&m))
}

/// Report of the randomized square verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct SquareReport {
    pub pass: bool,
    pub samples: usize,
    pub seed: u64,
    pub first_counterexample: Option<Vec<i64>>,
}

/// Checks, on seeded random cone points (nonnegative combinations of the 22
/// basis vectors with coefficients up to 10), that the flip mutation stays
/// nonnegative, lands in the flipped cone, agrees with reglueing the flipped
/// web, and is undone by the reverse flip.
pub fn verify_square_naturality(samples: usize, seed: u64) -> Result<SquareReport> {
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    let sq = build_square();
    let step = crate::mutation::MutationStep::new(&sq, crate::triangulation::SQUARE_DIAGONAL)?;
    let gens: Vec<ConePoint> = (1..=22).map(hilbert_vector).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mut c = ConePoint::zeros(12);
        for g in &gens {
            let l = rng.gen_range(0..=10i64);
            for (a, b) in c.0.iter_mut().zip(&g.0) {
                *a += l * b;
            }
        }
        let m = crate::mutation::flip_mutation(&c, &step)?;
        let reframed = square::to_flipped_frame(&m);
        let natural = m.0.iter().all(|&v| v >= 0)
            && is_in_ktgs_cone(&reframed, &sq)?
            && glue_coords(&flip_web(&square_inverse(&c)?)?.per_face(), &sq)? == reframed;
        let (back, _) =
            crate::mutation::compose_flips(&sq, &c, &[crate::triangulation::SQUARE_DIAGONAL; 2])?;
        if !(natural && back == c) {
            return Ok(SquareReport {
                pass: false,
                samples,
                seed,
                first_counterexample: Some(c.0),
            });
        }
    }
    Ok(SquareReport { pass: true, samples, seed, first_counterexample: None })
}
