//! Property tests for the algebraic invariants: monoid closure, linearity,
//! additivity, the cornerless identities, bigon strand counting, round
//! trips, and flip-loop permutations.

use proptest::prelude::*;
use sl3web::cone::{rhombus_numbers, ConePoint};
use sl3web::mutation::{compose_flips, flip_mutation, verify_flip_loop, MutationStep};
use sl3web::square::{to_flipped_frame, SECTOR_WEBS};
use sl3web::triangulation::{
    build_once_punctured_torus, build_pentagon_base, build_square, pentagon_flip_loop,
    SQUARE_DIAGONAL,
};
use sl3web::webs::{
    classify_family, glue_coords, hilbert_vector, hilbert_web, square_inverse, HoneycombDir,
    SquareWebSchematic, TriangleSchematic,
};
use sl3web::{is_in_ktgs_cone, square, webs};

fn combo(lambda: &[i64]) -> ConePoint {
    let mut c = ConePoint::zeros(12);
    for (i, &l) in lambda.iter().enumerate() {
        let g = hilbert_vector(i + 1);
        for (a, b) in c.0.iter_mut().zip(&g.0) {
            *a += l * b;
        }
    }
    c
}

fn sector_combo(sector: u8, coeffs: [i64; 4], arcs: [i64; 8]) -> SquareWebSchematic {
    let mut s = SquareWebSchematic::empty();
    for (r, &w) in SECTOR_WEBS[sector as usize - 1].iter().enumerate() {
        let piece = hilbert_web(w);
        s = s
            .try_add(&SquareWebSchematic {
                top: piece.top.scaled(coeffs[r] as u64),
                bottom: piece.bottom.scaled(coeffs[r] as u64),
                family: None,
            })
            .unwrap();
    }
    for (i, &a) in arcs.iter().enumerate() {
        let piece = hilbert_web(i + 1);
        s = s
            .try_add(&SquareWebSchematic {
                top: piece.top.scaled(a as u64),
                bottom: piece.bottom.scaled(a as u64),
                family: None,
            })
            .unwrap();
    }
    s
}

proptest! {
    #[test]
    fn monoid_closure(l1 in proptest::collection::vec(0i64..6, 22),
                      l2 in proptest::collection::vec(0i64..6, 22)) {
        let sq = build_square();
        let a = combo(&l1);
        let b = combo(&l2);
        prop_assert!(is_in_ktgs_cone(&a, &sq).unwrap());
        prop_assert!(is_in_ktgs_cone(&b, &sq).unwrap());
        prop_assert!(is_in_ktgs_cone(&(&a + &b), &sq).unwrap());
    }

    #[test]
    fn rhombus_numbers_linear(a in proptest::collection::vec(-40i64..40, 12),
                              b in proptest::collection::vec(-40i64..40, 12)) {
        let sq = build_square();
        let pa = ConePoint(a.clone());
        let pb = ConePoint(b.clone());
        let sum = &pa + &pb;
        let ra = rhombus_numbers(&pa, &sq).unwrap();
        let rb = rhombus_numbers(&pb, &sq).unwrap();
        let rs = rhombus_numbers(&sum, &sq).unwrap();
        for i in 0..18 {
            prop_assert_eq!(rs.0[i], ra.0[i] + rb.0[i]);
        }
    }

    #[test]
    fn torus_rhombus_linearity(a in proptest::collection::vec(-20i64..20, 8),
                               b in proptest::collection::vec(-20i64..20, 8)) {
        let t = build_once_punctured_torus();
        let pa = ConePoint(a);
        let pb = ConePoint(b);
        let sum = &pa + &pb;
        let ra = rhombus_numbers(&pa, &t).unwrap();
        let rb = rhombus_numbers(&pb, &t).unwrap();
        let rs = rhombus_numbers(&sum, &t).unwrap();
        for i in 0..ra.0.len() {
            prop_assert_eq!(rs.0[i], ra.0[i] + rb.0[i]);
        }
    }

    #[test]
    fn glue_coords_additive(sector in 1u8..=42,
                            c1 in [0i64..5, 0i64..5, 0i64..5, 0i64..5],
                            c2 in [0i64..5, 0i64..5, 0i64..5, 0i64..5],
                            arcs in [0i64..4, 0i64..4, 0i64..4, 0i64..4,
                                     0i64..4, 0i64..4, 0i64..4, 0i64..4]) {
        let sq = build_square();
        let s1 = sector_combo(sector, c1, arcs);
        let s2 = sector_combo(sector, c2, [0; 8]);
        let union = s1.try_add(&s2).unwrap();
        let g1 = glue_coords(&s1.per_face(), &sq).unwrap();
        let g2 = glue_coords(&s2.per_face(), &sq).unwrap();
        let gu = glue_coords(&union.per_face(), &sq).unwrap();
        prop_assert_eq!(gu, &g1 + &g2);
    }

    #[test]
    fn corner_additivity_of_mutation(arcs in proptest::collection::vec(0i64..8, 8),
                                     l in proptest::collection::vec(0i64..6, 22)) {
        // corner-web vectors split off additively under the flip map
        let sq = build_square();
        let step = MutationStep::new(&sq, SQUARE_DIAGONAL).unwrap();
        let mut lam = vec![0i64; 22];
        lam[..8].copy_from_slice(&arcs);
        let r = combo(&lam);
        let c = combo(&l);
        let mr = flip_mutation(&r, &step).unwrap();
        let mc = flip_mutation(&c, &step).unwrap();
        let msum = flip_mutation(&(&r + &c), &step).unwrap();
        prop_assert_eq!(msum, &mr + &mc);
    }

    #[test]
    fn cornerless_identities(sector in 1u8..=42,
                             coeffs in [0i64..8, 0i64..8, 0i64..8, 0i64..8]) {
        let sq = build_square();
        let step = MutationStep::new(&sq, SQUARE_DIAGONAL).unwrap();
        let s = sector_combo(sector, coeffs, [0; 8]);
        let c = glue_coords(&s.per_face(), &sq).unwrap();
        // interior coordinates of a cornerless web are boundary sums
        prop_assert_eq!(c.0[8], c.0[0] + c.0[7]);
        prop_assert_eq!(c.0[10], c.0[3] + c.0[4]);
        let m = flip_mutation(&c, &step).unwrap();
        prop_assert_eq!(m.0[9], c.0[1] + c.0[2]);
        prop_assert_eq!(m.0[11], c.0[5] + c.0[6]);
    }

    #[test]
    fn bigon_strand_counting(sector in 1u8..=42,
                             coeffs in [0i64..6, 0i64..6, 0i64..6, 0i64..6],
                             arcs in [0i64..4, 0i64..4, 0i64..4, 0i64..4,
                                      0i64..4, 0i64..4, 0i64..4, 0i64..4]) {
        // strand counts across the bigon, by honeycomb orientation case
        let s = sector_combo(sector, coeffs, arcs);
        let (n, m) = (s.top.size as i64, s.bottom.size as i64);
        let (w, a, x, d) = (s.top.arcs[2] as i64, s.top.arcs[3] as i64,
                           s.top.arcs[4] as i64, s.top.arcs[5] as i64);
        let (y, c, z, b) = (s.bottom.arcs[2] as i64, s.bottom.arcs[3] as i64,
                            s.bottom.arcs[4] as i64, s.bottom.arcs[5] as i64);
        let eff = |dir: HoneycombDir, size: u64| if size == 0 { HoneycombDir::Out } else { dir };
        match (eff(s.top.honeycomb, s.top.size), eff(s.bottom.honeycomb, s.bottom.size)) {
            (HoneycombDir::Out, HoneycombDir::Out) => {
                prop_assert_eq!(a + n + x, b + y);
                prop_assert_eq!(w + d, z + m + c);
            }
            (HoneycombDir::Out, HoneycombDir::In) => {
                prop_assert_eq!(a + n + x, b + y + m);
                prop_assert_eq!(w + d, z + c);
            }
            (HoneycombDir::In, HoneycombDir::Out) => {
                prop_assert_eq!(a + x, b + y);
                prop_assert_eq!(w + d + n, z + m + c);
            }
            (HoneycombDir::In, HoneycombDir::In) => {
                prop_assert_eq!(a + x, b + y + m);
                prop_assert_eq!(w + d + n, z + c);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn square_round_trips(l in proptest::collection::vec(0i64..5, 22)) {
        let sq = build_square();
        let c = combo(&l);
        let s = square_inverse(&c).unwrap();
        prop_assert_eq!(glue_coords(&s.per_face(), &sq).unwrap(), c.clone());
        // canonical schematics: inverting their glue reproduces them
        let again = square_inverse(&glue_coords(&s.per_face(), &sq).unwrap()).unwrap();
        prop_assert_eq!(again, s);
        // classification contains the decomposition family
        let fams = classify_family(&c).unwrap();
        prop_assert!(fams.contains(&s.family.unwrap()));
    }

    #[test]
    fn naturality_on_cone_points(l in proptest::collection::vec(0i64..5, 22)) {
        let sq = build_square();
        let step = MutationStep::new(&sq, SQUARE_DIAGONAL).unwrap();
        let c = combo(&l);
        let m = flip_mutation(&c, &step).unwrap();
        let reframed = to_flipped_frame(&m);
        prop_assert!(is_in_ktgs_cone(&reframed, &sq).unwrap());
        let flipped = webs::flip_web(&square_inverse(&c).unwrap()).unwrap();
        prop_assert_eq!(glue_coords(&flipped.per_face(), &sq).unwrap(), reframed);
    }

    #[test]
    fn pentagon_alternating_loops_are_permutations(k in 1usize..=3, seed in 0u64..1000) {
        let p = build_pentagon_base();
        let report = verify_flip_loop(&p, &pentagon_flip_loop(5 * k), 20, 30, seed).unwrap();
        prop_assert!(report.pass);
        // the permutation really is a bijection
        let mut seen = [false; 17];
        for &img in &report.permutation {
            prop_assert!(!seen[img - 1]);
            seen[img - 1] = true;
        }
    }

    #[test]
    fn double_flip_loops_fix_values(e in 0usize..3, vals in proptest::collection::vec(0i64..20, 8)) {
        // torus: flipping the same edge twice restores every coordinate
        let t = build_once_punctured_torus();
        let c = ConePoint(vals);
        let (back, _) = compose_flips(&t, &c, &[e, e]).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn theta_image_lands_in_vt(vals in proptest::collection::vec(-50i64..50, 12)) {
        let c = ConePoint(vals);
        let rv = square::theta(&c).unwrap();
        prop_assert!(square::phi(&rv).is_ok());
    }

    #[test]
    fn schematic_json_round_trip(sector in 1u8..=42,
                                 coeffs in [0i64..5, 0i64..5, 0i64..5, 0i64..5],
                                 arcs in [0i64..4, 0i64..4, 0i64..4, 0i64..4,
                                          0i64..4, 0i64..4, 0i64..4, 0i64..4]) {
        let s = sector_combo(sector, coeffs, arcs);
        let v = s.to_json();
        let back = SquareWebSchematic::from_json(&v).unwrap();
        prop_assert_eq!(back.top, s.top);
        prop_assert_eq!(back.bottom, s.bottom);
    }

    #[test]
    fn rhombus_vector_json_round_trip(vals in proptest::collection::vec(-30i64..30, 12)) {
        let sq = build_square();
        let rv = rhombus_numbers(&ConePoint(vals), &sq).unwrap();
        let text = serde_json::to_string(&rv).unwrap();
        let back: sl3web::RhombusVector = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, rv);
    }
}

#[test]
fn schematic_json_shape() {
    let s = TriangleSchematic { honeycomb: HoneycombDir::Out, size: 2, arcs: [1, 0, 0, 3, 0, 0] };
    let v = serde_json::to_value(s).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"honeycomb": {"dir": "out", "size": 2}, "arcs": [1, 0, 0, 3, 0, 0]})
    );
    // size/direction consistency is enforced on parse
    let bad = serde_json::json!({"honeycomb": {"dir": "none", "size": 2}, "arcs": [0,0,0,0,0,0]});
    assert!(serde_json::from_value::<TriangleSchematic>(bad).is_err());
}
