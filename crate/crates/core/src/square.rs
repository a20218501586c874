//! Square-specific linear maps, tropical X-coordinates, the 42-sector
//! decomposition with its wall graph, skein relations, and the cornerless
//! solver.
//!
//! Conventions for the canonical square (see [`crate::triangulation::build_square`]):
//! coordinates `(x1..x8, y1..y4)`, eighteen rhombus numbers `beta_1..beta_18`
//! ordered top-triangle pointings `(a, b, c)` then bottom pointings
//! `(d, b, c)`, and four X-coordinates
//!
//! ```text
//! X1 = b3 - b2 = b6 - b5 = b9 - b8
//! X2 = b4 - b13 = b17 - b9
//! X3 = b12 - b11 = b15 - b14 = b18 - b17
//! X4 = b16 - b7 = b5 - b15
//! ```

use crate::cone::{rank, rhombus_numbers, ConePoint, RhombusVector};
use crate::triangulation::build_square;
use crate::webs::{hilbert_vector, hilbert_web, SquareWebSchematic};
use crate::{Error, Result};
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Tropical X-coordinates; integers on cone points, exact rationals in
/// general.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XVector(pub [Rational64; 4]);

impl XVector {
    pub fn from_integers(v: [i64; 4]) -> Self {
        XVector(v.map(Rational64::from_integer))
    }

    pub fn to_integers(&self) -> Option<[i64; 4]> {
        if self.0.iter().all(|q| q.is_integer()) {
            Some(self.0.map(|q| q.to_integer()))
        } else {
            None
        }
    }
}

/// Rhombus numbers of the canonical square, as the linear map on `Z^12`.
pub fn theta(c: &ConePoint) -> Result<RhombusVector> {
    rhombus_numbers(c, &build_square())
}

/// The six linear relations cutting out the image of `theta` (components of
/// the relation map; each must vanish).
fn vt_defects(b: &[Rational64]) -> [Rational64; 6] {
    [
        b[2] - b[1] + b[4] - b[5],
        b[5] - b[4] + b[7] - b[8],
        b[3] - b[12] + b[8] - b[16],
        b[11] - b[10] + b[13] - b[14],
        b[14] - b[13] + b[16] - b[17],
        b[15] - b[6] + b[14] - b[4],
    ]
}

/// Projects a rhombus vector to the eight distinguished rhombus numbers and
/// the four X-coordinates, after checking it satisfies the six defining
/// relations of the X-coordinate subspace.
pub fn phi(rv: &RhombusVector) -> Result<([Rational64; 8], XVector)> {
    if rv.0.len() != 18 {
        return Err(Error::LengthMismatch { expected: 18, got: rv.0.len() });
    }
    let b = &rv.0;
    for (i, defect) in vt_defects(b).iter().enumerate() {
        if !defect.is_zero() {
            return Err(Error::NotInVt { relation: i + 1 });
        }
    }
    let first8 = [b[0], b[1], b[3], b[4], b[6], b[7], b[9], b[10]];
    let x = XVector([b[2] - b[1], b[3] - b[12], b[11] - b[10], b[15] - b[6]]);
    Ok((first8, x))
}

/// The four tropical X-coordinates of a coordinate vector on the square.
pub fn x_coords(c: &ConePoint) -> Result<XVector> {
    let rv = theta(c)?;
    let b = &rv.0;
    debug_assert!(vt_defects(b).iter().all(|d| d.is_zero()));
    Ok(XVector([b[2] - b[1], b[3] - b[12], b[11] - b[10], b[15] - b[6]]))
}

/// Reads a mutated vector in the flipped triangulation's own canonical
/// frame: boundary slots rotate by two edges and the interior slots cycle.
pub fn to_flipped_frame(c: &ConePoint) -> ConePoint {
    const PERM: [usize; 12] = [2, 3, 4, 5, 6, 7, 0, 1, 9, 10, 11, 8];
    ConePoint(PERM.iter().map(|&i| c.0[i]).collect())
}

/// Inverse of [`to_flipped_frame`].
pub fn from_flipped_frame(c: &ConePoint) -> ConePoint {
    const INV: [usize; 12] = [6, 7, 0, 1, 2, 3, 4, 5, 11, 8, 9, 10];
    ConePoint(INV.iter().map(|&i| c.0[i]).collect())
}

// ------------------------------------------------------------- sector tables

/// Topological types: the four non-corner Hilbert webs generating each
/// sector, by web id (1..=22), in listed order. Index 0 holds sector 1.
pub const SECTOR_WEBS: [[usize; 4]; 42] = [
    [11, 16, 21, 20],
    [10, 16, 21, 20],
    [11, 20, 15, 21],
    [10, 20, 15, 21],
    [18, 11, 16, 20],
    [13, 18, 12, 20],
    [11, 22, 18, 16],
    [18, 22, 13, 12],
    [9, 22, 14, 19],
    [12, 22, 14, 19],
    [9, 22, 13, 19],
    [12, 22, 13, 19],
    [17, 9, 14, 19],
    [10, 15, 17, 19],
    [17, 9, 14, 21],
    [10, 15, 17, 21],
    [9, 10, 21, 16],
    [11, 15, 14, 21],
    [11, 22, 14, 12],
    [9, 22, 13, 16],
    [9, 22, 16, 21],
    [9, 22, 14, 21],
    [11, 22, 16, 21],
    [11, 22, 14, 21],
    [10, 9, 13, 19],
    [12, 15, 14, 19],
    [11, 20, 15, 12],
    [10, 20, 13, 16],
    [13, 20, 19, 10],
    [15, 20, 19, 10],
    [12, 20, 13, 19],
    [12, 20, 15, 19],
    [9, 10, 13, 16],
    [11, 15, 14, 12],
    [18, 11, 12, 20],
    [18, 20, 13, 16],
    [11, 22, 18, 12],
    [18, 22, 13, 16],
    [10, 9, 17, 19],
    [17, 15, 14, 19],
    [10, 9, 17, 21],
    [15, 17, 14, 21],
];

/// Sign pattern (+1: `>= 0`, -1: `<= 0`) and extra half-space constraints
/// (`coeffs . X >= 0` when the direction is +1) describing each sector of
/// the X-lattice.
pub struct SectorSystem {
    pub signs: [i8; 4],
    pub extras: &'static [([i64; 4], i8)],
}

pub const SECTOR_SYSTEMS: [SectorSystem; 42] = [
    SectorSystem { signs: [-1, 1, 1, -1], extras: &[([0, 0, 1, 1], -1)] },
    SectorSystem { signs: [1, 1, 1, -1], extras: &[([0, 0, 1, 1], -1)] },
    SectorSystem { signs: [-1, 1, -1, -1], extras: &[([0, 1, 1, 0], 1)] },
    SectorSystem { signs: [1, 1, -1, -1], extras: &[([0, 1, 1, 0], 1)] },
    SectorSystem { signs: [-1, 1, 1, -1], extras: &[([0, 0, 1, 1], 1), ([1, 0, 1, 1], -1)] },
    SectorSystem { signs: [-1, 1, 1, 1], extras: &[([1, 0, 0, 1], -1), ([1, 0, 1, 1], 1)] },
    SectorSystem { signs: [-1, -1, 1, -1], extras: &[([0, 0, 1, 1], 1), ([1, 0, 1, 1], -1)] },
    SectorSystem { signs: [-1, -1, 1, 1], extras: &[([1, 0, 0, 1], -1), ([1, 0, 1, 1], 1)] },
    SectorSystem { signs: [1, -1, -1, 1], extras: &[([1, 1, 0, 0], -1)] },
    SectorSystem { signs: [-1, -1, -1, 1], extras: &[([1, 0, 0, 1], 1)] },
    SectorSystem { signs: [1, -1, 1, 1], extras: &[([1, 1, 0, 0], -1)] },
    SectorSystem { signs: [-1, -1, 1, 1], extras: &[([1, 0, 0, 1], 1)] },
    SectorSystem { signs: [1, -1, -1, 1], extras: &[([1, 1, 0, 0], 1), ([1, 1, 1, 0], -1)] },
    SectorSystem { signs: [1, 1, -1, 1], extras: &[([0, 1, 1, 0], -1), ([1, 1, 1, 0], 1)] },
    SectorSystem { signs: [1, -1, -1, -1], extras: &[([1, 1, 0, 0], 1), ([1, 1, 1, 0], -1)] },
    SectorSystem { signs: [1, 1, -1, -1], extras: &[([0, 1, 1, 0], -1), ([1, 1, 1, 0], 1)] },
    SectorSystem { signs: [1, -1, 1, -1], extras: &[([1, 1, 0, 0], 1), ([0, 0, 1, 1], -1)] },
    SectorSystem { signs: [-1, 1, -1, -1], extras: &[([0, 1, 1, 0], -1)] },
    SectorSystem { signs: [-1, -1, -1, 1], extras: &[([1, 0, 0, 1], -1)] },
    SectorSystem { signs: [1, -1, 1, -1], extras: &[([1, 1, 0, 0], -1), ([0, 0, 1, 1], 1)] },
    SectorSystem { signs: [1, -1, 1, -1], extras: &[([1, 1, 0, 0], -1), ([0, 0, 1, 1], -1)] },
    SectorSystem { signs: [1, -1, -1, -1], extras: &[([1, 1, 0, 0], -1)] },
    SectorSystem { signs: [-1, -1, 1, -1], extras: &[([0, 0, 1, 1], -1)] },
    SectorSystem { signs: [-1, -1, -1, -1], extras: &[] },
    SectorSystem { signs: [1, -1, 1, 1], extras: &[([1, 1, 0, 0], 1)] },
    SectorSystem { signs: [-1, 1, -1, 1], extras: &[([1, 0, 0, 1], 1), ([0, 1, 1, 0], -1)] },
    SectorSystem { signs: [-1, 1, -1, 1], extras: &[([1, 0, 0, 1], -1), ([0, 1, 1, 0], 1)] },
    SectorSystem { signs: [1, 1, 1, -1], extras: &[([0, 0, 1, 1], 1)] },
    SectorSystem { signs: [1, 1, 1, 1], extras: &[] },
    SectorSystem { signs: [1, 1, -1, 1], extras: &[([0, 1, 1, 0], 1)] },
    SectorSystem { signs: [-1, 1, 1, 1], extras: &[([1, 0, 0, 1], 1)] },
    SectorSystem { signs: [-1, 1, -1, 1], extras: &[([1, 0, 0, 1], 1), ([0, 1, 1, 0], 1)] },
    SectorSystem { signs: [1, -1, 1, -1], extras: &[([1, 1, 0, 0], 1), ([0, 0, 1, 1], 1)] },
    SectorSystem { signs: [-1, 1, -1, 1], extras: &[([1, 0, 0, 1], -1), ([0, 1, 1, 0], -1)] },
    SectorSystem { signs: [-1, 1, 1, 1], extras: &[([1, 0, 1, 1], -1)] },
    SectorSystem { signs: [-1, 1, 1, -1], extras: &[([1, 0, 1, 1], 1)] },
    SectorSystem { signs: [-1, -1, 1, 1], extras: &[([1, 0, 1, 1], -1)] },
    SectorSystem { signs: [-1, -1, 1, -1], extras: &[([1, 0, 1, 1], 1)] },
    SectorSystem { signs: [1, -1, -1, 1], extras: &[([1, 1, 1, 0], 1)] },
    SectorSystem { signs: [1, 1, -1, 1], extras: &[([1, 1, 1, 0], -1)] },
    SectorSystem { signs: [1, -1, -1, -1], extras: &[([1, 1, 1, 0], 1)] },
    SectorSystem { signs: [1, 1, -1, -1], extras: &[([1, 1, 1, 0], -1)] },
];

/// The sixteen orthants of the X-lattice and the sectors decomposing each.
pub const ORTHANT_DECOMPOSITIONS: [([i8; 4], &[u8]); 16] = [
    ([-1, -1, -1, -1], &[24]),
    ([1, 1, 1, 1], &[29]),
    ([1, 1, 1, -1], &[2, 28]),
    ([-1, 1, -1, -1], &[3, 18]),
    ([-1, 1, 1, 1], &[6, 31, 35]),
    ([-1, -1, 1, -1], &[7, 23, 38]),
    ([-1, -1, -1, 1], &[10, 19]),
    ([1, -1, 1, 1], &[11, 25]),
    ([1, 1, -1, 1], &[14, 30, 40]),
    ([1, -1, -1, -1], &[15, 22, 41]),
    ([-1, 1, 1, -1], &[1, 5, 36]),
    ([1, 1, -1, -1], &[4, 16, 42]),
    ([-1, -1, 1, 1], &[8, 12, 37]),
    ([1, -1, -1, 1], &[9, 13, 39]),
    ([1, -1, 1, -1], &[17, 20, 21, 33]),
    ([-1, 1, -1, 1], &[26, 27, 32, 34]),
];

/// Web ids of the four non-corner generators of sector `i` (1..=42).
pub fn sector_webs(i: u8) -> [usize; 4] {
    SECTOR_WEBS[i as usize - 1]
}

/// The twelve generators of sector `i`: the eight corner arcs followed by
/// the sector's four webs in listed order.
pub fn sector_generators(i: u8) -> Vec<ConePoint> {
    let mut gens: Vec<ConePoint> = (1..=8).map(hilbert_vector).collect();
    gens.extend(sector_webs(i).iter().map(|&w| hilbert_vector(w)));
    gens
}

fn in_sector(i: u8, x: &XVector) -> bool {
    let sys = &SECTOR_SYSTEMS[i as usize - 1];
    for (s, v) in sys.signs.iter().zip(&x.0) {
        if *s > 0 && v.is_negative() {
            return false;
        }
        if *s < 0 && v.is_positive() {
            return false;
        }
    }
    for (coeffs, dir) in sys.extras {
        let val: Rational64 =
            coeffs.iter().zip(&x.0).map(|(&c, v)| Rational64::from_integer(c) * v).sum();
        if *dir > 0 && val.is_negative() {
            return false;
        }
        if *dir < 0 && val.is_positive() {
            return false;
        }
    }
    true
}

/// All sectors of the X-lattice containing the given point.
pub fn sector_of(x: &XVector) -> Vec<u8> {
    (1u8..=42).filter(|&i| in_sector(i, x)).collect()
}

/// The 4x4 matrix whose rows are the X-coordinates of sector `i`'s webs.
pub fn sector_matrix(i: u8) -> [[i64; 4]; 4] {
    let webs = sector_webs(i);
    std::array::from_fn(|r| {
        let x = x_coords(&hilbert_vector(webs[r])).expect("catalog vectors");
        x.to_integers().expect("catalog X-coordinates are integral")
    })
}

/// Solves the cornerless inversion problem: the least sector containing `x`,
/// an exact solve against its four web generators, and the assembled
/// cornerless schematic. Surjectivity onto the integer lattice guarantees a
/// nonnegative integral solution.
pub fn solve_cornerless(x: [i64; 4]) -> SquareWebSchematic {
    let xv = XVector::from_integers(x);
    let sector = sector_of(&xv)
        .into_iter()
        .next()
        .expect("the sectors cover the X-lattice");
    let m = sector_matrix(sector);
    // solve lambda * M = x exactly via the integer adjugate
    let a: [[i64; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| m[c][r]));
    let det = det4(&a);
    assert!(det != 0, "sector matrices have rank 4");
    let mut lambda = [0i64; 4];
    for r in 0..4 {
        let mut replaced = a;
        for row in 0..4 {
            replaced[row][r] = x[row];
        }
        let num = det4(&replaced);
        assert!(
            num % det == 0 && num / det >= 0,
            "cornerless solve must be nonnegative integral (sector {sector}, x {x:?})"
        );
        lambda[r] = num / det;
    }
    let webs = sector_webs(sector);
    let mut out = SquareWebSchematic::empty();
    for (r, &l) in lambda.iter().enumerate() {
        if l > 0 {
            let piece = hilbert_web(webs[r]);
            out = out
                .try_add(&SquareWebSchematic {
                    top: piece.top.scaled(l as u64),
                    bottom: piece.bottom.scaled(l as u64),
                    family: None,
                })
                .expect("sector generators are compatible");
        }
    }
    out.family = Some(sector);
    out
}

/// The coefficients solved for by [`solve_cornerless`], exposed for
/// reporting.
pub fn solve_cornerless_coefficients(x: [i64; 4]) -> (u8, [i64; 4]) {
    let xv = XVector::from_integers(x);
    let sector = sector_of(&xv).into_iter().next().expect("sector cover");
    let m = sector_matrix(sector);
    let a: [[i64; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| m[c][r]));
    let det = det4(&a);
    let mut lambda = [0i64; 4];
    for r in 0..4 {
        let mut replaced = a;
        for row in 0..4 {
            replaced[row][r] = x[row];
        }
        lambda[r] = det4(&replaced) / det;
    }
    (sector, lambda)
}

#[allow(clippy::needless_range_loop)]
fn det4(m: &[[i64; 4]; 4]) -> i64 {
    let det3 = |m: [[i64; 3]; 3]| -> i64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let mut det = 0i64;
    for c in 0..4 {
        let minor: [[i64; 3]; 3] = std::array::from_fn(|r| {
            let mut row = [0i64; 3];
            let mut k = 0;
            for cc in 0..4 {
                if cc != c {
                    row[k] = m[r + 1][cc];
                    k += 1;
                }
            }
            row
        });
        let sign = if c % 2 == 0 { 1 } else { -1 };
        det += sign * m[0][c] * det3(minor);
    }
    det
}

// ---------------------------------------------------------------- wall graph

/// Crossing a wall removes one web from the topological type and adds one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WallCrossing {
    pub removed_web: usize,
    pub neighbor: u8,
    pub added_web: usize,
}

/// The 4-regular adjacency graph of the 42 sectors: an edge when the
/// topological types share three webs.
#[derive(Debug, Clone)]
pub struct WallGraph {
    /// `crossings[i - 1]` lists, per web of sector `i`, the neighbor reached
    /// by swapping that web out.
    pub crossings: Vec<Vec<WallCrossing>>,
}

impl WallGraph {
    pub fn neighbors(&self, i: u8) -> Vec<u8> {
        self.crossings[i as usize - 1].iter().map(|c| c.neighbor).collect()
    }

    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for i in 1u8..=42 {
            for c in &self.crossings[i as usize - 1] {
                if i < c.neighbor {
                    out.push((i, c.neighbor));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Builds the wall graph from the topological types.
pub fn wall_graph() -> WallGraph {
    let sets: Vec<std::collections::BTreeSet<usize>> =
        SECTOR_WEBS.iter().map(|ws| ws.iter().copied().collect()).collect();
    let mut crossings = Vec::with_capacity(42);
    for i in 0..42 {
        let mut list = Vec::with_capacity(4);
        for &w in &SECTOR_WEBS[i] {
            let mut without = sets[i].clone();
            without.remove(&w);
            let mut matches = (0..42).filter(|&l| {
                l != i && without.is_subset(&sets[l]) && sets[i].intersection(&sets[l]).count() == 3
            });
            let l = matches.next().expect("each web of a sector crosses exactly one wall");
            assert!(matches.next().is_none(), "wall neighbor must be unique");
            let added = *sets[l].difference(&sets[i]).next().expect("one web is swapped in");
            list.push(WallCrossing { removed_web: w, neighbor: (l + 1) as u8, added_web: added });
        }
        crossings.push(list);
    }
    WallGraph { crossings }
}

// ------------------------------------------------------------ skein relations

/// The ten tropical skein relations among the 22 Hilbert-basis vectors, as
/// (left web ids, right web ids) with equal coordinate sums.
pub const SKEIN_RELATIONS: [(&[usize], &[usize]); 10] = [
    (&[11, 10], &[2, 4, 6]),
    (&[10, 12], &[2, 6, 19]),
    (&[14, 13], &[4, 6, 8]),
    (&[13, 15, 9], &[4, 3, 8, 10]),
    (&[16, 19], &[13, 5]),
    (&[17, 13], &[4, 8, 10]),
    (&[18, 10], &[2, 6, 13]),
    (&[9, 20], &[3, 10]),
    (&[19, 21], &[4, 5]),
    (&[10, 22], &[9, 6]),
];

#[derive(Debug, Clone, Serialize)]
pub struct RelationsReport {
    pub pass: bool,
    pub failed_relations: Vec<usize>,
    pub relation_space_dimension: usize,
    pub relations_independent: bool,
}

/// Checks the ten relations exactly, that they are linearly independent, and
/// that the kernel of the evaluation map from coefficient space to
/// coordinates is exactly ten-dimensional.
pub fn verify_relations() -> RelationsReport {
    let mut failed = Vec::new();
    for (k, (lhs, rhs)) in SKEIN_RELATIONS.iter().enumerate() {
        let sum = |ids: &[usize]| -> Vec<i64> {
            let mut acc = vec![0i64; 12];
            for &id in ids {
                for (a, b) in acc.iter_mut().zip(&hilbert_vector(id).0) {
                    *a += b;
                }
            }
            acc
        };
        if sum(lhs) != sum(rhs) {
            failed.push(k + 1);
        }
    }
    // relation vectors in coefficient space
    let mut rel_rows: Vec<Vec<i64>> = Vec::new();
    for (lhs, rhs) in &SKEIN_RELATIONS {
        let mut row = vec![0i64; 22];
        for &id in *lhs {
            row[id - 1] += 1;
        }
        for &id in *rhs {
            row[id - 1] -= 1;
        }
        rel_rows.push(row);
    }
    let relations_independent = rank(&rel_rows) == 10;
    // kernel dimension of the 22 -> 12 evaluation map
    let eval_rows: Vec<Vec<i64>> = (1..=22).map(|id| hilbert_vector(id).0).collect();
    let relation_space_dimension = 22 - rank(&eval_rows);
    RelationsReport {
        pass: failed.is_empty() && relations_independent && relation_space_dimension == 10,
        failed_relations: failed,
        relation_space_dimension,
        relations_independent,
    }
}
