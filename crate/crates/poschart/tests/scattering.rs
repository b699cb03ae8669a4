use poschart::scattering::{solve, ScatteringConfig};
use poschart_core::chart::{build_from_sections, PositiveChart};
use poschart_core::poly::Poly;
use poschart_core::{ratio, IntMatrix, Rational};

fn pentagon() -> PositiveChart {
    let sections: Vec<Poly> =
        ["1 + t1", "1 + t2", "1 + t2 + t1*t2"].iter().map(|s| Poly::parse(s, &["t1", "t2"]).unwrap()).collect();
    let order = IntMatrix::from_rows_i64(&[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1]]);
    build_from_sections(&sections, Some(&order)).unwrap()
}

fn x(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(p, q)| ratio(p, q)).collect()
}

#[test]
fn far_root_is_found_for_mixed_signs() {
    // one of the two roots has |t1| near 18
    let res = solve(&pentagon(), &x(&[(3, 2), (1, 1), (-8, 5), (-1, 4), (11, 3)]), &ScatteringConfig::default()).unwrap();
    assert_eq!(res.method, "homotopy");
    assert_eq!(res.count, 2);
    assert!(res.solutions.iter().any(|s| s.t[0][0].abs() > 10.0), "{:?}", res.solutions);
}

#[test]
fn random_starts_fallback() {
    let cfg = ScatteringConfig { max_paths: 0, starts: 400, ..Default::default() };
    let res = solve(&pentagon(), &x(&[(3, 1), (5, 2), (1, 1), (7, 3), (2, 1)]), &cfg).unwrap();
    assert_eq!(res.method, "random-starts");
    assert_eq!(res.count, 2);
    assert_eq!(res.starts_per_batch, 400);
}

#[test]
fn seed_changes_gamma_but_not_the_solutions() {
    let xs = x(&[(3, 1), (5, 2), (1, 1), (7, 3), (2, 1)]);
    let a = solve(&pentagon(), &xs, &ScatteringConfig::default()).unwrap();
    let b = solve(&pentagon(), &xs, &ScatteringConfig { seed: 11, ..Default::default() }).unwrap();
    assert_eq!(a.count, b.count);
    for (p, q) in a.solutions.iter().zip(&b.solutions) {
        for (u, v) in p.y.iter().zip(&q.y) {
            assert!((u[0] - v[0]).abs() < 1e-8 && (u[1] - v[1]).abs() < 1e-8);
        }
    }
}
