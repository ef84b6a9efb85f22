use exactla::{
    rank, rank_mod_p, rank_rational, smith_normal_form, solve_linear, solve_rational, CoefficientRing, FieldVector,
    FpMatrix, LinAlgError, PrimeField, SparseMatrix,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn factors(m: &SparseMatrix) -> Vec<u64> {
    smith_normal_form(m).factors_u64().unwrap()
}

#[test]
fn rank_examples() {
    assert_eq!(rank(&SparseMatrix::zeros(3, 3), CoefficientRing::Rationals).unwrap(), 0);
    let id = SparseMatrix::identity(4);
    assert_eq!(rank(&id, CoefficientRing::prime_field(3).unwrap()).unwrap(), 4);
    let m = SparseMatrix::from_dense(&[vec![1, 2], vec![2, 4]]);
    assert_eq!(rank(&m, CoefficientRing::Rationals).unwrap(), 1);
    assert_eq!(rank(&m, CoefficientRing::PrimeField(2)).unwrap(), 1);
    assert_eq!(rank(&m, CoefficientRing::Integers), Err(LinAlgError::NotAField));
}

#[test]
fn rank_depends_on_characteristic() {
    let m = SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
    assert_eq!(rank(&m, CoefficientRing::PrimeField(2)).unwrap(), 1);
    assert_eq!(rank(&m, CoefficientRing::PrimeField(3)).unwrap(), 1);
    assert_eq!(rank(&m, CoefficientRing::PrimeField(5)).unwrap(), 2);
}

#[test]
fn smith_examples() {
    assert_eq!(
        factors(&SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]])),
        vec![1, 6]
    );
    assert_eq!(factors(&SparseMatrix::identity(2)), vec![1, 1]);
    assert_eq!(factors(&SparseMatrix::from_dense(&[vec![2]])), vec![2]);
    assert!(smith_normal_form(&SparseMatrix::zeros(0, 0))
        .invariant_factors
        .is_empty());
    assert!(smith_normal_form(&SparseMatrix::zeros(3, 2))
        .invariant_factors
        .is_empty());
}

#[test]
fn smith_needs_general_pivots() {
    // no unit entries at all
    let m = SparseMatrix::from_dense(&[vec![4, 6], vec![6, 9], vec![2, 10]]);
    assert_eq!(factors(&m), minors_oracle(&m.to_dense()));
}

#[test]
fn smith_survives_i128_overflow() {
    // entries near 2^62 push the i128 path over; the result must fall back to bignums
    let big = 1i64 << 62;
    let m = SparseMatrix::from_dense(&[vec![big, big - 1], vec![big - 3, big - 7]]);
    let sf = smith_normal_form(&m);
    let det = BigInt::from(big) * BigInt::from(big - 7) - BigInt::from(big - 1) * BigInt::from(big - 3);
    let prod: BigInt = sf.invariant_factors.iter().map(|d| BigInt::from(d.clone())).product();
    assert_eq!(prod, det.abs());
}

#[test]
fn solve_examples() {
    let id = SparseMatrix::identity(3);
    let b = [4, -1, 7];
    assert_eq!(
        solve_linear(&id, &b, CoefficientRing::PrimeField(5)).unwrap(),
        FieldVector::Fp(vec![4, 4, 2])
    );
    let zero = SparseMatrix::zeros(1, 1);
    assert_eq!(
        solve_linear(&zero, &[1], CoefficientRing::PrimeField(3)),
        Err(LinAlgError::NoSolution)
    );
    assert_eq!(solve_rational(&zero, &[1]), Err(LinAlgError::NoSolution));
    assert!(matches!(
        solve_linear(&id, &[1, 2], CoefficientRing::Rationals),
        Err(LinAlgError::DimensionMismatch { .. })
    ));
}

#[test]
fn solve_rational_fraction() {
    let m = SparseMatrix::from_dense(&[vec![2, 1], vec![0, 3]]);
    let x = solve_rational(&m, &[1, 1]).unwrap();
    assert_eq!(x[0].to_string(), "1/3");
    assert_eq!(x[1].to_string(), "1/3");
}

#[test]
fn construction_rejects_bad_input() {
    assert!(matches!(
        SparseMatrix::new(2, 2, vec![(0, 0, 1), (0, 0, 2)]),
        Err(LinAlgError::DuplicateEntry(0, 0))
    ));
    assert!(matches!(
        SparseMatrix::new(2, 2, vec![(2, 0, 1)]),
        Err(LinAlgError::OutOfRange { .. })
    ));
    let m = SparseMatrix::new(2, 2, vec![(1, 1, 0), (0, 1, 3)]).unwrap();
    assert_eq!(m.nnz(), 1);
    assert!(CoefficientRing::prime_field(9).is_err());
    assert!(PrimeField::new(1 << 31).is_err());
}

#[test]
fn dense_kernel_and_solve() {
    let f = PrimeField::new(7).unwrap();
    let a = FpMatrix::from_rows(f, &[vec![1, 2, 3], vec![2, 4, 6]]);
    assert_eq!(a.rank(), 1);
    let k = a.kernel();
    assert_eq!(k.len(), 2);
    for v in &k {
        assert!(a.mul_vec(v).iter().all(|&x| x == 0));
    }
    let x = a.solve(&[1, 2]).unwrap().unwrap();
    assert_eq!(a.mul_vec(&x), vec![1, 2]);
    assert_eq!(a.solve(&[1, 3]).unwrap(), None);
}

// Independent oracles written directly in the test.

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from gcds of k×k minors: d₁⋯d_k = Δ_k.
fn minors_oracle(a: &[Vec<i64>]) -> Vec<u64> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut deltas = vec![BigInt::from(1)];
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| BigInt::from(a[r][c])).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        deltas.push(g);
    }
    deltas.windows(2).map(|w| (&w[1] / &w[0]).to_u64().unwrap()).collect()
}

fn naive_rank_mod(a: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|v| v.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c] * inv % p;
                for k in 0..cols {
                    m[i][k] = (m[i][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn matrix_strategy(max_r: usize, max_c: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_r, 1..=max_c)
        .prop_flat_map(move |(r, c)| proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r))
}

fn sparse_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=9, 1usize..=9).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            proptest::collection::vec(prop_oneof![6 => Just(0i64), 2 => -1i64..=1, 1 => -6i64..=6], c),
            r,
        )
    })
}

proptest! {
    #[test]
    fn snf_matches_minor_gcds(a in matrix_strategy(4, 4, 6)) {
        let m = SparseMatrix::from_dense(&a);
        prop_assert_eq!(factors(&m), minors_oracle(&a));
    }

    #[test]
    fn rank_is_transpose_invariant(a in sparse_strategy()) {
        let m = SparseMatrix::from_dense(&a);
        let t = m.transpose();
        prop_assert_eq!(rank_rational(&m), rank_rational(&t));
        for p in [2u64, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            prop_assert_eq!(rank_mod_p(&m, f), rank_mod_p(&t, f));
        }
    }

    #[test]
    fn rational_rank_counts_invariant_factors(a in sparse_strategy()) {
        let m = SparseMatrix::from_dense(&a);
        prop_assert_eq!(rank_rational(&m), smith_normal_form(&m).rank());
    }

    #[test]
    fn snf_is_permutation_invariant(a in sparse_strategy(), seed in any::<u64>()) {
        let m = SparseMatrix::from_dense(&a);
        let mut rp: Vec<usize> = (0..m.rows()).collect();
        let mut cp: Vec<usize> = (0..m.cols()).collect();
        let mut s = seed;
        for v in [&mut rp, &mut cp] {
            for i in (1..v.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (s >> 33) as usize % (i + 1));
            }
        }
        prop_assert_eq!(smith_normal_form(&m), smith_normal_form(&m.permuted(&rp, &cp)));
    }

    #[test]
    fn mod_p_rank_matches_naive(a in sparse_strategy()) {
        let m = SparseMatrix::from_dense(&a);
        for p in [2u64, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            let expect = naive_rank_mod(&a, p as i64);
            prop_assert_eq!(rank_mod_p(&m, f), expect);
            prop_assert_eq!(m.to_fp(f).rank(), expect);
        }
    }

    #[test]
    fn mod_p_rank_from_snf(a in sparse_strategy()) {
        // rank mod p = number of invariant factors prime to p
        let m = SparseMatrix::from_dense(&a);
        let sf = smith_normal_form(&m);
        for p in [2u64, 3, 5] {
            let expect = sf.invariant_factors.iter().filter(|d| !(*d % p as u32).is_zero()).count();
            prop_assert_eq!(rank_mod_p(&m, PrimeField::new(p).unwrap()), expect);
        }
    }

    #[test]
    fn solutions_satisfy_the_system(a in sparse_strategy(), seed in proptest::collection::vec(-3i64..=3, 9)) {
        let m = SparseMatrix::from_dense(&a);
        let x: Vec<i64> = seed[..m.cols()].to_vec();
        let b = m.mul_vec(&x).unwrap();
        let FieldVector::Fp(sol) = solve_linear(&m, &b, CoefficientRing::PrimeField(5)).unwrap() else { unreachable!() };
        let f = PrimeField::new(5).unwrap();
        let lhs = m.to_fp(f).mul_vec(&sol);
        prop_assert_eq!(lhs, b.iter().map(|&v| f.reduce(v)).collect::<Vec<_>>());
        let q = solve_rational(&m, &b).unwrap();
        for (r, row) in a.iter().enumerate() {
            let s: num_rational::BigRational = row.iter().zip(&q).map(|(&c, v)| v * BigInt::from(c)).sum();
            prop_assert_eq!(s, num_rational::BigRational::from_integer(BigInt::from(b[r])));
        }
    }
}
