use num_traits::{One, Signed, Zero};
use poschart_core::exactla::{det, gale_dual, hnf, integer_kernel, rank, smith, snf_invariants, unimodular_inverse, IntMatrix};
use poschart_core::{BigInt, Error, Rational, RatMatrix};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-range..=range, rows * cols).prop_map(move |v| {
        let r: Vec<&[i64]> = v.chunks(cols).collect();
        IntMatrix::from_rows_i64(&r)
    })
}

fn shaped(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| matrix(r, c, 6))
}

fn rational_det(a: &IntMatrix) -> Rational {
    let n = a.rows();
    let mut m = a.to_rational();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else { return Rational::zero() };
        if p != c {
            for j in 0..n {
                let t = m[(c, j)].clone();
                m[(c, j)] = m[(p, j)].clone();
                m[(p, j)] = t;
            }
            d = -d;
        }
        d *= m[(c, c)].clone();
        for i in c + 1..n {
            let f = m[(i, c)].clone() / m[(c, c)].clone();
            for j in c..n {
                let v = m[(c, j)].clone() * &f;
                m[(i, j)] -= v;
            }
        }
    }
    d
}

fn is_row_hnf(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) {
            None => seen_zero = true,
            Some(p) => {
                if seen_zero || last_pivot.is_some_and(|q| p <= q) || !h[(i, p)].is_positive() {
                    return false;
                }
                // entries above a pivot are reduced modulo it
                if (0..i).any(|k| h[(k, p)].is_negative() || h[(k, p)] >= h[(i, p)]) {
                    return false;
                }
                last_pivot = Some(p);
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hnf_is_a_unimodular_transform(a in shaped(5, 6)) {
        let (h, u) = hnf(&a);
        prop_assert_eq!(&(&u * &a), &h);
        prop_assert!(det(&u).abs().is_one());
        prop_assert!(is_row_hnf(&h));
    }

    #[test]
    fn smith_form_divisibility(a in shaped(4, 6)) {
        let (d, u, v) = smith(&a);
        prop_assert_eq!(&(&(&u * &a) * &v), &d);
        prop_assert!(det(&u).abs().is_one());
        prop_assert!(det(&v).abs().is_one());
        let diag: Vec<BigInt> = (0..a.rows().min(a.cols())).map(|i| d[(i, i)].clone()).collect();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    prop_assert!(d[(i, j)].is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        prop_assert_eq!(diag.iter().filter(|x| !x.is_zero()).count(), rank(&a));
    }

    #[test]
    fn bareiss_matches_rational_elimination(a in (1usize..=5).prop_flat_map(|n| matrix(n, n, 9))) {
        prop_assert_eq!(Rational::from_integer(det(&a)), rational_det(&a));
    }

    #[test]
    fn kernel_is_saturated(a in shaped(4, 7)) {
        let k = integer_kernel(&a);
        prop_assert_eq!(k.cols(), a.cols() - rank(&a));
        prop_assert!((&a * &k).is_zero());
        if k.cols() > 0 {
            // a saturated lattice has all elementary divisors equal to one
            let inv = snf_invariants(&k.transpose()).unwrap();
            prop_assert!(inv.divisors.iter().all(One::is_one));
        }
    }

    #[test]
    fn gale_dual_or_torsion(a in (1usize..=3).prop_flat_map(|d| matrix(d, d + 3, 4))) {
        match gale_dual(&a) {
            Ok(k) => {
                prop_assert!((&a * &k).is_zero());
                prop_assert_eq!(k.cols(), a.cols() - a.rows());
                let inv = snf_invariants(&a).unwrap();
                prop_assert!(inv.divisors.iter().all(One::is_one));
                let s = inv.right_inverse.unwrap();
                prop_assert_eq!(&a * &s, IntMatrix::identity(a.rows()));
            }
            Err(Error::Torsion { divisors }) => prop_assert!(divisors.iter().any(|x| !x.is_one())),
            Err(Error::RankDeficient { rank: r, .. }) => prop_assert_eq!(r, rank(&a)),
            Err(e) => prop_assert!(false, "unexpected error {:?}", e),
        }
    }

    #[test]
    fn unimodular_inverse_round_trip(ops in proptest::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..12)) {
        let mut rows = vec![vec![0i64; 4]; 4];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = 1;
        }
        for (i, j, c) in ops {
            if i != j {
                for col in 0..4 {
                    rows[i][col] += c * rows[j][col];
                }
            }
        }
        let r: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntMatrix::from_rows_i64(&r);
        let inv = unimodular_inverse(&m).unwrap();
        prop_assert_eq!(&m * &inv, IntMatrix::identity(4));
        prop_assert_eq!(&inv * &m, IntMatrix::identity(4));
    }
}

#[test]
fn rational_inverse_agrees_with_integer_inverse() {
    let m = IntMatrix::from_rows_i64(&[&[1, 0, -1, -1, 0], &[0, 1, 1, 0, -1], &[0, 0, 1, 1, 0], &[0, 0, 0, 0, 1], &[0, 0, 0, 1, 1]]);
    let inv = unimodular_inverse(&m).unwrap();
    let rinv: RatMatrix = m.to_rational().inverse().unwrap();
    assert_eq!(inv.to_rational(), rinv);
}

#[test]
fn non_unimodular_is_rejected() {
    let m = IntMatrix::from_rows_i64(&[&[2, 0], &[0, 1]]);
    assert!(matches!(unimodular_inverse(&m), Err(Error::NotUnimodular { .. })));
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// gcd of all k×k minors.
fn determinantal_divisor(a: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in combinations(a.rows(), k) {
        let sub = a.select_rows(&rows);
        for cols in combinations(a.cols(), k) {
            g = gcd(&g, &det(&sub.select_columns(&cols)));
        }
    }
    g
}

/// Textbook row HNF by repeated extended gcd on pairs of rows.
fn naive_hnf(a: &IntMatrix) -> IntMatrix {
    let mut h = a.to_rows();
    let (m, n) = (a.rows(), a.cols());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            while !h[i][c].is_zero() {
                let q = &h[r][c] / &h[i][c];
                let new_r: Vec<BigInt> = (0..n).map(|j| &h[r][j] - &q * &h[i][j]).collect();
                h[r] = core::mem::replace(&mut h[i], new_r);
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            h[r] = h[r].iter().map(|x| -x).collect();
        }
        for i in 0..r {
            let p = h[r][c].clone();
            let q = {
                let x = &h[i][c];
                let rem = ((x % &p) + &p) % &p;
                (x - rem) / &p
            };
            h[i] = (0..n).map(|j| &h[i][j] - &q * &h[r][j]).collect();
        }
        r += 1;
    }
    IntMatrix::from_rows(&h, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn oracles_on_small_random_matrices(a in (1usize..=6, 1usize..=8).prop_flat_map(|(r, c)| matrix(r, c, 5))) {
        let (h, _) = hnf(&a);
        prop_assert_eq!(&h, &naive_hnf(&a));
        let (d, _, _) = smith(&a);
        let mut prev = BigInt::one();
        for k in 1..=a.rows().min(a.cols()).min(4) {
            let dk = determinantal_divisor(&a, k);
            let expected = if dk.is_zero() { BigInt::zero() } else { &dk / &prev };
            prop_assert_eq!(&d[(k - 1, k - 1)], &expected);
            if dk.is_zero() {
                break;
            }
            prev = dk;
        }
        if a.rows() <= a.cols() && a.rows() <= 4 {
            if let Ok(inv) = snf_invariants(&a) {
                let prod = inv.divisors.iter().fold(BigInt::one(), |acc, x| acc * x);
                prop_assert_eq!(prod, determinantal_divisor(&a, a.rows()));
            }
        }
        if let Ok(k) = gale_dual(&a) {
            prop_assert!((&a * &k).is_zero());
            prop_assert_eq!(rank(&a.transpose().hstack(&k)), a.cols());
        }
        if a.rows() == a.cols() {
            let pivots = (0..h.rows()).fold(BigInt::one(), |acc, i| acc * &h[(i, i)]);
            prop_assert_eq!(det(&a).abs(), pivots);
        }
    }
}
