//! Positive integer cones cut out by rhombus inequalities and mod-3
//! congruences, with bounded Hilbert-basis enumeration and exact
//! decomposition against sector generators.
//!
//! A point of the cone assigns a nonnegative integer to every dot of a
//! dotted triangulation. Each pointed triangle contributes three rhombi; a
//! rhombus with values `a, b` at its obtuse vertices and `c, d` at its acute
//! vertices yields the rhombus number `beta = (a + b - c - d) / 3` (with
//! `d = 0` for corner rhombi). Membership asks every `beta` to be a
//! nonnegative integer.

use crate::triangulation::{DotId, DottedTriangulation, FaceId};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashSet;

/// Integer vector indexed by the dots of a dotted triangulation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConePoint(pub Vec<i64>);

impl ConePoint {
    pub fn zeros(n: usize) -> Self {
        ConePoint(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl std::ops::Add<&ConePoint> for &ConePoint {
    type Output = ConePoint;
    fn add(self, rhs: &ConePoint) -> ConePoint {
        assert_eq!(self.len(), rhs.len());
        ConePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// One rhombus number per rhombus of the triangulation, as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhombusVector(pub Vec<Rational64>);

impl Serialize for RhombusVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> =
            self.0.iter().map(|q| format!("{}/{}", q.numer(), q.denom())).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RhombusVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let mut out = Vec::with_capacity(strings.len());
        for s in strings {
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p, q),
                None => (s.as_str(), "1"),
            };
            let p: i64 = p.trim().parse().map_err(D::Error::custom)?;
            let q: i64 = q.trim().parse().map_err(D::Error::custom)?;
            if q == 0 {
                return Err(D::Error::custom("zero denominator"));
            }
            out.push(Rational64::new(p, q));
        }
        Ok(RhombusVector(out))
    }
}

/// A rhombus as dot indices: two obtuse dots, then one or two acute dots
/// (corner rhombi have a single acute dot).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rhombus {
    pub obtuse: [DotId; 2],
    pub acute: [DotId; 2],
    pub is_corner: bool,
}

impl Rhombus {
    /// `3 * beta` evaluated at `c`.
    #[inline]
    pub fn triple(&self, c: &[i64]) -> i64 {
        let mut v = c[self.obtuse[0]] + c[self.obtuse[1]] - c[self.acute[0]];
        if !self.is_corner {
            v -= c[self.acute[1]];
        }
        v
    }
}

/// The rhombi of a triangulation in canonical order: faces in storage order,
/// each face's three pointings in its stored pointing order, and within a
/// pointing the corner rhombus, then the interior rhombus toward the next
/// side, then the one toward the previous side.
pub fn rhombi(t: &DottedTriangulation) -> Result<Vec<Rhombus>> {
    let mut out = Vec::with_capacity(9 * t.n_faces());
    for f in 0..t.n_faces() as FaceId {
        let fd = t.face_dot(f);
        for &v in &t.pointing_order(f) {
            let nxt = v;
            let prv = (v + 2) % 3;
            let after = (v + 1) % 3;
            out.push(Rhombus {
                obtuse: [t.dot_near_src(f, nxt), t.dot_near_tgt(f, prv)],
                acute: [fd, fd],
                is_corner: true,
            });
            out.push(Rhombus {
                obtuse: [t.dot_near_tgt(f, nxt), fd],
                acute: [t.dot_near_src(f, nxt), t.dot_near_src(f, after)],
                is_corner: false,
            });
            out.push(Rhombus {
                obtuse: [t.dot_near_src(f, prv), fd],
                acute: [t.dot_near_tgt(f, prv), t.dot_near_tgt(f, after)],
                is_corner: false,
            });
        }
    }
    Ok(out)
}

fn check_length(c: &ConePoint, t: &DottedTriangulation) -> Result<()> {
    if c.len() != t.dot_count() {
        return Err(Error::LengthMismatch { expected: t.dot_count(), got: c.len() });
    }
    Ok(())
}

/// The rhombus numbers of `c`, one exact rational per rhombus of `t`.
pub fn rhombus_numbers(c: &ConePoint, t: &DottedTriangulation) -> Result<RhombusVector> {
    check_length(c, t)?;
    let rs = rhombi(t)?;
    Ok(RhombusVector(rs.iter().map(|r| Rational64::new(r.triple(&c.0), 3)).collect()))
}

/// Membership in the KTGS cone: every coordinate nonnegative and every
/// rhombus number a nonnegative integer.
pub fn is_in_ktgs_cone(c: &ConePoint, t: &DottedTriangulation) -> Result<bool> {
    check_length(c, t)?;
    if c.0.iter().any(|&v| v < 0) {
        return Ok(false);
    }
    let rs = rhombi(t)?;
    Ok(rs.iter().all(|r| {
        let v = r.triple(&c.0);
        v >= 0 && v % 3 == 0
    }))
}

/// Raw membership test against a precomputed rhombus table.
#[inline]
pub fn satisfies_rhombi(c: &[i64], rs: &[Rhombus]) -> bool {
    c.iter().all(|&v| v >= 0)
        && rs.iter().all(|r| {
            let v = r.triple(c);
            v >= 0 && v % 3 == 0
        })
}

/// The irreducible elements of a bounded slice of a positive integer cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    pub elements: Vec<ConePoint>,
    pub bound: i64,
}

/// Enumerates the Hilbert basis of the cone described by a membership
/// oracle, restricted to coordinate sum `<= bound`.
///
/// Every oracle-positive point within the bound is checked to decompose over
/// the returned irreducibles; failure means the oracle is not closed under
/// addition inside the bound and is reported as an error.
pub fn hilbert_basis<F>(oracle: F, dim: usize, bound: i64) -> Result<HilbertBasis>
where
    F: Fn(&[i64]) -> bool + Sync,
{
    if dim == 0 {
        return Ok(HilbertBasis { elements: Vec::new(), bound });
    }
    assert!(oracle(&vec![0; dim]), "oracle must accept the zero vector");
    // enumerate oracle-positive points with coordinate sum <= bound,
    // splitting on the first coordinate for parallelism
    let mut points: Vec<Vec<i64>> = (0..=bound)
        .into_par_iter()
        .flat_map_iter(|v0| {
            let mut buf = vec![0i64; dim];
            buf[0] = v0;
            let mut found = Vec::new();
            enumerate_rec(&mut buf, 1, bound - v0, &oracle, &mut found);
            found
        })
        .collect();
    points.retain(|p| p.iter().any(|&v| v != 0));
    points.sort_unstable_by_key(|p| (p.iter().sum::<i64>(), p.clone()));
    let set: HashSet<&[i64]> = points.iter().map(|p| p.as_slice()).collect();

    let le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    let irreducible = |p: &Vec<i64>| -> bool {
        let half = p.iter().sum::<i64>() / 2;
        for q in &points {
            if q.iter().sum::<i64>() > half {
                break; // points sorted by sum; one summand has sum <= half
            }
            if le(q, p) {
                let diff: Vec<i64> = p.iter().zip(q).map(|(a, b)| a - b).collect();
                if diff.iter().any(|&v| v != 0) && set.contains(diff.as_slice()) {
                    return false;
                }
            }
        }
        true
    };
    let elements: Vec<Vec<i64>> = points.par_iter().filter(|p| irreducible(p)).cloned().collect();

    // completeness witness: induction on the coordinate sum
    let basis_set: HashSet<&[i64]> = elements.iter().map(|p| p.as_slice()).collect();
    let mut decomposable: HashSet<&[i64]> = HashSet::new();
    for p in &points {
        if basis_set.contains(p.as_slice()) {
            decomposable.insert(p.as_slice());
            continue;
        }
        let ok = elements.iter().any(|h| {
            if !le(h, p) {
                return false;
            }
            let diff: Vec<i64> = p.iter().zip(h).map(|(a, b)| a - b).collect();
            set.contains(diff.as_slice()) && decomposable.contains(diff.as_slice())
        });
        if ok {
            decomposable.insert(p.as_slice());
        } else {
            return Err(Error::DecompositionFailure(p.clone()));
        }
    }
    let mut elements: Vec<ConePoint> = elements.into_iter().map(ConePoint).collect();
    elements.sort_unstable();
    Ok(HilbertBasis { elements, bound })
}

fn enumerate_rec<F>(buf: &mut Vec<i64>, idx: usize, remaining: i64, oracle: &F, out: &mut Vec<Vec<i64>>)
where
    F: Fn(&[i64]) -> bool + Sync,
{
    if idx == buf.len() {
        if oracle(buf) {
            out.push(buf.clone());
        }
        return;
    }
    if idx == buf.len() - 1 {
        // unroll the last coordinate to avoid a deep call per value
        for v in 0..=remaining {
            buf[idx] = v;
            if oracle(buf) {
                out.push(buf.clone());
            }
        }
        buf[idx] = 0;
        return;
    }
    for v in 0..=remaining {
        buf[idx] = v;
        enumerate_rec(buf, idx + 1, remaining - v, oracle, out);
    }
    buf[idx] = 0;
}

/// Expresses `c` as a linear combination of the generators by an exact
/// rational solve, then demands nonnegative integer coefficients.
///
/// The generators must be linearly independent and as many as the ambient
/// dimension.
#[allow(clippy::needless_range_loop)]
pub fn decompose(c: &ConePoint, generators: &[ConePoint]) -> Result<Vec<i64>> {
    let n = c.len();
    if generators.len() != n || generators.iter().any(|g| g.len() != n) {
        return Err(Error::LengthMismatch { expected: n, got: generators.len() });
    }
    // solve  A * lambda = c  with columns of A the generators
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|row| generators.iter().map(|g| BigRational::from(BigInt::from(g.0[row]))).collect())
        .collect();
    let mut b: Vec<BigRational> = c.0.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularGenerators)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] / &inv;
                for k in col..n {
                    let sub = &factor * &a[col][k];
                    a[r][k] = &a[r][k] - sub;
                }
                let sub = &factor * &b[col];
                b[r] = &b[r] - sub;
            }
        }
    }
    let mut lambda = Vec::with_capacity(n);
    for (r, num) in b.iter().enumerate() {
        let q = num / &a[r][r];
        if !q.denom().is_one() {
            return Err(Error::NonIntegralCoefficient(r));
        }
        if q.is_negative() {
            return Err(Error::NegativeCoefficient(r));
        }
        let val: i64 = q.numer().try_into().map_err(|_| Error::Overflow)?;
        lambda.push(val);
    }
    Ok(lambda)
}

/// Rank of an integer matrix (rows), by exact elimination.
#[allow(clippy::needless_range_loop)]
pub fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let pivot = match (rank..m.len()).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(rank, pivot);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for k in col..cols {
                    let sub = &factor * &m[rank][k];
                    m[r][k] = &m[r][k] - sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{build_square, build_triangle};

    #[test]
    fn zero_is_in_every_cone() {
        for t in [build_triangle(), build_square()] {
            let z = ConePoint::zeros(t.dot_count());
            assert!(is_in_ktgs_cone(&z, &t).unwrap());
            let rv = rhombus_numbers(&z, &t).unwrap();
            assert!(rv.0.iter().all(|q| q.is_zero()));
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let sq = build_square();
        let c = ConePoint(vec![]);
        assert!(matches!(is_in_ktgs_cone(&c, &sq), Err(Error::LengthMismatch { expected: 12, got: 0 })));
        assert!(rhombus_numbers(&c, &sq).is_err());
    }

    #[test]
    fn family_one_point_is_in_cone_and_perturbation_is_not() {
        let sq = build_square();
        let c = ConePoint(vec![7, 5, 2, 1, 7, 5, 2, 1, 8, 6, 8, 6]);
        assert!(is_in_ktgs_cone(&c, &sq).unwrap());
        // bumping y1 breaks a congruence
        let mut bad = c.clone();
        bad.0[8] += 1;
        assert!(!is_in_ktgs_cone(&bad, &sq).unwrap());
    }

    #[test]
    fn rhombus_numbers_are_linear() {
        let sq = build_square();
        let a = ConePoint(vec![7, 5, 2, 1, 7, 5, 2, 1, 8, 6, 8, 6]);
        let b = ConePoint(vec![2, 1, 0, 0, 0, 0, 1, 2, 1, 0, 0, 0]);
        let sum = &a + &b;
        let ra = rhombus_numbers(&a, &sq).unwrap();
        let rb = rhombus_numbers(&b, &sq).unwrap();
        let rs = rhombus_numbers(&sum, &sq).unwrap();
        for i in 0..18 {
            assert_eq!(rs.0[i], ra.0[i] + rb.0[i]);
        }
    }

    #[test]
    fn hilbert_toy_examples() {
        // span{(1,0),(1,1),(0,2)}
        let gens: Vec<Vec<i64>> = vec![vec![1, 0], vec![1, 1], vec![0, 2]];
        let oracle = |p: &[i64]| -> bool {
            // brute-force decomposition over the generators
            for a in 0..=7 {
                for b in 0..=7 {
                    for c in 0..=7 {
                        if p[0] == a * gens[0][0] + b * gens[1][0] + c * gens[2][0]
                            && p[1] == a * gens[0][1] + b * gens[1][1] + c * gens[2][1]
                        {
                            return true;
                        }
                    }
                }
            }
            false
        };
        let hb = hilbert_basis(oracle, 2, 6).unwrap();
        let got: Vec<Vec<i64>> = hb.elements.iter().map(|e| e.0.clone()).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 0], vec![1, 1]]); // lexicographic

        // all of Z_+^3
        let hb = hilbert_basis(|_| true, 3, 4).unwrap();
        let got: Vec<Vec<i64>> = hb.elements.iter().map(|e| e.0.clone()).collect();
        assert_eq!(got, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);

        // quoted four-element basis in Z_+^3: span{(0,1,0),(1,1,0),(1,0,1),(0,1,1)}
        let oracle4 = |p: &[i64]| -> bool {
            for a in 0..=6i64 {
                for b in 0..=6i64 {
                    for c in 0..=6i64 {
                        for d in 0..=6i64 {
                            if [b + c, a + b + d, c + d] == [p[0], p[1], p[2]] {
                                return true;
                            }
                        }
                    }
                }
            }
            false
        };
        let hb = hilbert_basis(oracle4, 3, 6).unwrap();
        let mut got: Vec<Vec<i64>> = hb.elements.iter().map(|e| e.0.clone()).collect();
        got.sort();
        let mut expect = vec![vec![0, 1, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn hilbert_dimension_zero() {
        let hb = hilbert_basis(|_| true, 0, 5).unwrap();
        assert!(hb.elements.is_empty());
    }

    #[test]
    fn hilbert_non_monoid_oracle_fails_witness() {
        // {0,2,3,5,10}: 10 = 5 + 5 is reducible, but subtracting any
        // irreducible (2 or 3) leaves the set, so the witness must fail
        let oracle = |p: &[i64]| [0i64, 2, 3, 5, 10].contains(&p[0]);
        match hilbert_basis(oracle, 1, 10) {
            Err(Error::DecompositionFailure(p)) => assert_eq!(p, vec![10]),
            other => panic!("expected decomposition failure, got {other:?}"),
        }
    }

    #[test]
    fn decompose_examples() {
        let gens = vec![
            ConePoint(vec![1, 0, 0]),
            ConePoint(vec![1, 1, 0]),
            ConePoint(vec![0, 1, 2]),
        ];
        let c = ConePoint(vec![2, 3, 4]);
        assert_eq!(decompose(&c, &gens).unwrap(), vec![1, 1, 2]);
        let neg = ConePoint(vec![0, 1, 0]);
        assert!(matches!(decompose(&neg, &gens), Err(Error::NonIntegralCoefficient(_)) | Err(Error::NegativeCoefficient(_))));
        let dep = vec![
            ConePoint(vec![1, 0, 0]),
            ConePoint(vec![2, 0, 0]),
            ConePoint(vec![0, 1, 0]),
        ];
        assert_eq!(decompose(&c, &dep).unwrap_err(), Error::SingularGenerators);
    }
}
