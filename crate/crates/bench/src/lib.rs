//! Shared fixtures for the benchmark suite.

use sl3web::webs::hilbert_vector;
use sl3web::ConePoint;

/// A deterministic spread of cone points built from the basis vectors.
pub fn sample_cone_points(n: usize) -> Vec<ConePoint> {
    (0..n)
        .map(|k| {
            let mut c = ConePoint::zeros(12);
            for id in 1..=22usize {
                let l = ((k * 7 + id * 3) % 11) as i64;
                let g = hilbert_vector(id);
                for (a, b) in c.0.iter_mut().zip(&g.0) {
                    *a += l * b;
                }
            }
            c
        })
        .collect()
}
