//! Frozen expected values for the acceptance suite: the reference rhombus
//! images and projections of the 22 basis webs, the coordinate vectors
//! reconstructed from them, and the three symbolic family coordinate lists.
#![allow(dead_code)]

/// The 8 triangle generators in dot order `(ab_a, ab_b, bc_b, bc_c, ca_c, ca_a, face)`:
/// `R_a, L_a, R_b, L_b, R_c, L_c, T_in, T_out`.
pub const TRIANGLE_TABLE: [[i64; 7]; 8] = [
    [2, 1, 0, 0, 1, 2, 1],
    [1, 2, 0, 0, 2, 1, 2],
    [1, 2, 2, 1, 0, 0, 1],
    [2, 1, 1, 2, 0, 0, 2],
    [0, 0, 1, 2, 2, 1, 1],
    [0, 0, 2, 1, 1, 2, 2],
    [1, 2, 1, 2, 1, 2, 3],
    [2, 1, 2, 1, 2, 1, 3],
];

/// Coordinates of the 22 Hilbert-basis webs on the canonical square,
/// `(x1..x8, y1..y4)`, web ids 1..=22.
pub const PHI_TABLE: [[i64; 12]; 22] = [
    [2, 1, 0, 0, 0, 0, 1, 2, 1, 0, 0, 0],
    [1, 2, 0, 0, 0, 0, 2, 1, 2, 0, 0, 0],
    [1, 2, 2, 1, 0, 0, 0, 0, 1, 2, 1, 1],
    [2, 1, 1, 2, 0, 0, 0, 0, 2, 1, 2, 2],
    [0, 0, 0, 0, 1, 2, 2, 1, 1, 1, 1, 2],
    [0, 0, 0, 0, 2, 1, 1, 2, 2, 2, 2, 1],
    [0, 0, 1, 2, 2, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 2, 1, 1, 2, 0, 0, 0, 0, 2, 0],
    [2, 1, 2, 1, 0, 0, 2, 1, 3, 2, 1, 1],
    [2, 1, 0, 0, 2, 1, 2, 1, 3, 2, 2, 1],
    [1, 2, 1, 2, 0, 0, 1, 2, 3, 1, 2, 2],
    [1, 2, 0, 0, 1, 2, 1, 2, 3, 1, 1, 2],
    [2, 1, 2, 1, 2, 1, 0, 0, 2, 1, 3, 2],
    [0, 0, 1, 2, 1, 2, 1, 2, 2, 2, 3, 1],
    [1, 2, 1, 2, 1, 2, 0, 0, 1, 2, 3, 1],
    [0, 0, 2, 1, 2, 1, 2, 1, 1, 1, 3, 2],
    [2, 1, 1, 2, 1, 2, 2, 1, 3, 2, 3, 1],
    [1, 2, 2, 1, 2, 1, 1, 2, 3, 1, 3, 2],
    [2, 1, 0, 0, 1, 2, 0, 0, 2, 1, 1, 2],
    [1, 2, 0, 0, 2, 1, 0, 0, 1, 2, 2, 1],
    [0, 0, 1, 2, 0, 0, 2, 1, 1, 1, 2, 2],
    [0, 0, 2, 1, 0, 0, 1, 2, 2, 2, 1, 1],
];

/// Reference rhombus-number images of the 22 basis webs.
pub const THETA_LIST: [[i64; 18]; 22] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
];

/// Reference projections `(b1, b2, b4, b5, b7, b8, b10, b11; X1..X4)`.
pub const PHI_THETA_LIST: [[i64; 12]; 22] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 0, -1, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 0, -1, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, -1, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0, 1, -1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, -1, 0],
    [0, 1, 0, 1, 0, 1, 0, 0, -1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0],
];

/// Family (1) (sector 29): coordinates as linear forms in `(x, y, z, t)`.
pub const FAMILY1_COORDS: [[i64; 4]; 12] = [
    [2, 1, 2, 2],
    [1, 2, 1, 1],
    [2, 0, 0, 0],
    [1, 0, 0, 0],
    [2, 2, 1, 2],
    [1, 1, 2, 1],
    [0, 0, 0, 2],
    [0, 0, 0, 1],
    [2, 1, 2, 3],
    [1, 2, 1, 2],
    [3, 2, 1, 2],
    [2, 1, 2, 1],
];

/// Family (1): interior coordinates after the flip.
pub const FAMILY1_PRIMED: [[i64; 4]; 4] = [
    [1, 1, 2, 2],
    [3, 2, 1, 1],
    [2, 2, 1, 1],
    [1, 1, 2, 3],
];

/// Family (3) (sector 42).
pub const FAMILY3_COORDS: [[i64; 4]; 12] = [
    [1, 2, 0, 0],
    [2, 1, 0, 0],
    [1, 1, 1, 1],
    [2, 2, 2, 2],
    [1, 1, 1, 0],
    [2, 2, 2, 0],
    [0, 2, 1, 2],
    [0, 1, 2, 1],
    [1, 3, 2, 1],
    [2, 2, 2, 1],
    [3, 3, 3, 2],
    [1, 1, 1, 2],
];

pub const FAMILY3_PRIMED: [[i64; 4]; 4] = [
    [2, 3, 1, 1],
    [3, 2, 1, 1],
    [1, 3, 2, 2],
    [2, 4, 3, 2],
];

/// Family (7) (sector 2).
pub const FAMILY7_COORDS: [[i64; 4]; 12] = [
    [2, 0, 0, 1],
    [1, 0, 0, 2],
    [0, 2, 1, 0],
    [0, 1, 2, 0],
    [2, 2, 0, 2],
    [1, 1, 0, 1],
    [2, 2, 2, 0],
    [1, 1, 1, 0],
    [3, 1, 1, 1],
    [2, 1, 1, 2],
    [2, 3, 2, 2],
    [1, 2, 2, 1],
];

/// Family (7), `z >= t` branch of the flipped interior coordinates.
pub const FAMILY7_PRIMED_GE: [[i64; 4]; 4] = [
    [2, 2, 1, 1],
    [1, 2, 1, 2],
    [1, 1, 2, -1],
    [3, 3, 2, 1],
];

/// Family (7), `z <= t` branch (only the third coordinate switches branch).
pub const FAMILY7_PRIMED_LE: [[i64; 4]; 4] = [
    [2, 2, 1, 1],
    [1, 2, 1, 2],
    [1, 1, -1, 2],
    [3, 3, 2, 1],
];
