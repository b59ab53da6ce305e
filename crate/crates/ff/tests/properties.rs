use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use setreal_ff::{prime_divisors, FieldSpec, Matrix, Poly};

fn fields() -> Vec<FieldSpec> {
    [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (7, 1)]
        .iter()
        .map(|&(p, k)| FieldSpec::new(p, k, None).unwrap())
        .collect()
}

fn arb_case() -> impl Strategy<Value = (usize, usize, usize, u64)> {
    (0..7usize, 0..9usize, 0..9usize, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_of_transpose((fi, r, c, seed) in arb_case()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Matrix::random(f, r, c, &mut rng);
        prop_assert_eq!(m.rank(f), m.transpose().rank(f));
    }

    #[test]
    fn rank_plus_nullity((fi, r, c, seed) in arb_case()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Matrix::random(f, r, c, &mut rng);
        let n = m.nullspace(f);
        prop_assert_eq!(m.rank(f) + n.cols(), c);
        prop_assert!(m.dot(f, &n).is_zero());
        prop_assert_eq!(n.rank(f), n.cols());
    }

    #[test]
    fn solutions_reproduce_rhs((fi, r, c, seed) in arb_case()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Matrix::random(f, r, c, &mut rng);
        // A consistent right-hand side built from a random point.
        let x0: Vec<u32> = (0..c).map(|_| rand::Rng::gen_range(&mut rng, 0..f.order())).collect();
        let b = m.mul_vec(f, &x0);
        let x = m.solve(f, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(f, &x), b.clone());
        // A random right-hand side: either solvable and reproduced, or not in the column space.
        let b2: Vec<u32> = (0..r).map(|_| rand::Rng::gen_range(&mut rng, 0..f.order())).collect();
        match m.solve(f, &b2).unwrap() {
            Some(x) => prop_assert_eq!(m.mul_vec(f, &x), b2),
            None => prop_assert!(m.hstack(&Matrix::column(&b2)).unwrap().rank(f) > m.rank(f)),
        }
    }

    #[test]
    fn left_nullspace_annihilates((fi, r, c, seed) in arb_case()) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Matrix::random(f, r, c, &mut rng);
        let l = m.left_nullspace(f);
        prop_assert!(l.dot(f, &m).is_zero());
        prop_assert_eq!(l.rows() + m.rank(f), r);
    }
}

#[test]
fn root_of_unity_orders() {
    for f in fields() {
        let q1 = (f.order() - 1) as u64;
        for n in 1..=q1 {
            if q1 % n != 0 {
                assert!(f.root_of_unity(n).is_err());
                continue;
            }
            let z = f.root_of_unity(n).unwrap();
            assert_eq!(f.pow(z, n), 1);
            for l in prime_divisors(n) {
                assert_ne!(f.pow(z, n / l), 1, "{f}: n={n}");
            }
        }
    }
}

#[test]
fn gf5_fourth_root_is_two() {
    let f = FieldSpec::prime(5).unwrap();
    assert_eq!(f.root_of_unity(4).unwrap(), 2);
    assert_eq!(f.root_of_unity(1).unwrap(), 1);
    assert!(FieldSpec::prime(2).unwrap().root_of_unity(3).is_err());
}

#[test]
fn gf2_fast_path_matches_generic_elimination() {
    // Reference elimination written independently of the library, with the same pivot rule.
    fn reference(m: &[Vec<u32>]) -> (Vec<Vec<u32>>, Vec<usize>) {
        let mut m = m.to_vec();
        let rows = m.len();
        let cols = if rows > 0 { m[0].len() } else { 0 };
        let mut piv = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            if let Some(p) = (r..rows).find(|&i| m[i][c] == 1) {
                m.swap(r, p);
                for i in 0..rows {
                    if i != r && m[i][c] == 1 {
                        for j in 0..cols {
                            m[i][j] ^= m[r][j];
                        }
                    }
                }
                piv.push(c);
                r += 1;
            }
        }
        (m, piv)
    }
    let f = FieldSpec::prime(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let r = rand::Rng::gen_range(&mut rng, 1..20);
        let c = rand::Rng::gen_range(&mut rng, 1..150);
        let m = Matrix::random(&f, r, c, &mut rng);
        let (rm, piv) = reference(&m.to_rows());
        let got = m.rref(&f);
        assert_eq!(got.matrix.to_rows(), rm);
        assert_eq!(got.pivots, piv);
    }
}

#[test]
fn companion_matrix_is_root_of_its_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for f in fields() {
        for deg in 1..6 {
            let mut c: Vec<u32> = (0..deg).map(|_| rand::Rng::gen_range(&mut rng, 0..f.order())).collect();
            c.push(1);
            let p = Poly::new(&f, c);
            let m = Matrix::companion(&f, &p);
            assert!(m.eval_poly(&f, &p).is_zero());
            assert_eq!(setreal_ff::min_poly(&f, &[m]), p);
        }
    }
}
