//! The tropical A-coordinate cluster transformation attached to a diagonal
//! flip, flip-sequence composition, and flip-loop verification.
//!
//! For a quad frame `(x1..x8, y1..y4)` around the flipped diagonal, the new
//! interior values are
//!
//! ```text
//! z2 = max(x2 + y3, y1 + x3) - y2
//! z4 = max(y1 + x6, x7 + y3) - y4
//! z1 = max(x1 + z4, x8 + z2) - y1
//! z3 = max(z2 + x5, z4 + x4) - y3
//! ```
//!
//! evaluated in that order (`z1` and `z3` consume `z2` and `z4`), while all
//! boundary values are fixed. The map is defined on all integer vectors, not
//! only on cone points.

use crate::triangulation::{DottedTriangulation, EdgeId, QuadFrame};
use crate::{ConePoint, Error, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// One flip, from the triangulation the frame was extracted from to its
/// flipped image.
#[derive(Debug, Clone, Copy)]
pub struct MutationStep {
    pub frame: QuadFrame,
}

impl MutationStep {
    pub fn new(t: &DottedTriangulation, edge: EdgeId) -> Result<Self> {
        Ok(MutationStep { frame: t.quad_around_edge(edge)? })
    }
}

#[inline]
fn checked_zs(x: [i64; 8], y: [i64; 4]) -> Result<[i64; 4]> {
    let add = |a: i64, b: i64| a.checked_add(b).ok_or(Error::Overflow);
    let sub = |a: i64, b: i64| a.checked_sub(b).ok_or(Error::Overflow);
    let z2 = sub(add(x[1], y[2])?.max(add(y[0], x[2])?), y[1])?;
    let z4 = sub(add(y[0], x[5])?.max(add(x[6], y[2])?), y[3])?;
    let z1 = sub(add(x[0], z4)?.max(add(x[7], z2)?), y[0])?;
    let z3 = sub(add(z2, x[4])?.max(add(z4, x[3])?), y[2])?;
    Ok([z1, z2, z3, z4])
}

/// Applies the flip transformation to an integer vector indexed by dot
/// labels. Values are read through the frame's slots before any write, so
/// self-glued quads (repeated slot labels) are handled.
pub fn flip_mutation(c: &ConePoint, step: &MutationStep) -> Result<ConePoint> {
    let slots = step.frame.slots;
    if let Some(&max_slot) = slots.iter().max() {
        if max_slot >= c.len() {
            return Err(Error::LengthMismatch { expected: max_slot + 1, got: c.len() });
        }
    }
    let x: [i64; 8] = std::array::from_fn(|i| c.0[slots[i]]);
    let y: [i64; 4] = std::array::from_fn(|i| c.0[slots[8 + i]]);
    let z = checked_zs(x, y)?;
    let mut out = c.clone();
    for i in 0..4 {
        out.0[slots[8 + i]] = z[i];
    }
    Ok(out)
}

/// Left-to-right composition of flip mutations along an edge sequence,
/// returning the final value vector and the final dotted triangulation.
pub fn compose_flips(
    t0: &DottedTriangulation,
    c: &ConePoint,
    edges: &[EdgeId],
) -> Result<(ConePoint, DottedTriangulation)> {
    if c.len() != t0.dot_count() {
        return Err(Error::LengthMismatch { expected: t0.dot_count(), got: c.len() });
    }
    let mut t = t0.clone();
    let mut v = c.clone();
    for &e in edges {
        let step = MutationStep::new(&t, e)?;
        v = flip_mutation(&v, &step)?;
        t = t.flip(e)?;
    }
    Ok((v, t))
}

/// Result of checking a closed flip loop against its dot permutation.
#[derive(Debug, Clone, Serialize)]
pub struct LoopReport {
    pub pass: bool,
    pub samples: usize,
    /// 1-based permutation images, for readability.
    pub permutation: Vec<usize>,
    pub first_counterexample: Option<LoopCounterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopCounterexample {
    pub input: Vec<i64>,
    pub composed: Vec<i64>,
    pub permuted: Vec<i64>,
}

/// Applies a permutation as a linear map: the value at position `i` moves to
/// position `sigma[i]`.
pub fn apply_permutation(sigma: &[usize], c: &ConePoint) -> ConePoint {
    let mut out = vec![0i64; c.len()];
    for (i, &v) in c.0.iter().enumerate() {
        out[sigma[i]] = v;
    }
    ConePoint(out)
}

/// For a flip sequence returning to the starting topological triangulation,
/// checks on random integer samples that the composed mutation equals the
/// permutation relating the two dottings.
pub fn verify_flip_loop(
    t0: &DottedTriangulation,
    edges: &[EdgeId],
    samples: usize,
    range: i64,
    seed: u64,
) -> Result<LoopReport> {
    let zero = ConePoint::zeros(t0.dot_count());
    let (_, t_end) = compose_flips(t0, &zero, edges)?;
    let sigma = t0.permutation_between(&t_end)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = t0.dot_count();
    for _ in 0..samples {
        let c = ConePoint((0..n).map(|_| rng.gen_range(-range..=range)).collect());
        let (composed, _) = compose_flips(t0, &c, edges)?;
        let permuted = apply_permutation(&sigma, &c);
        if composed != permuted {
            return Ok(LoopReport {
                pass: false,
                samples,
                permutation: sigma.iter().map(|&s| s + 1).collect(),
                first_counterexample: Some(LoopCounterexample {
                    input: c.0,
                    composed: composed.0,
                    permuted: permuted.0,
                }),
            });
        }
    }
    Ok(LoopReport {
        pass: true,
        samples,
        permutation: sigma.iter().map(|&s| s + 1).collect(),
        first_counterexample: None,
    })
}
