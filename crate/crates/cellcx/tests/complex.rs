use cellcx::{
    act, cohomology_image_rank, deconcatenate, differential, enumerate_records, eps_cochain, homology, product,
    record_product, records_with_bars, Chain, ChainSlice, FpCochains, Record,
};
use exactla::{CoefficientRing, PrimeField, SparseMatrix};
use freegroup::{parse_word, FreeGroupMap, Word};
use grading::HomologyEntry;
use proptest::prelude::*;

fn rec(parts: &[u32], v: &[u32]) -> Record {
    Record::new(parts.to_vec(), v.to_vec())
}

fn chain(terms: &[(Record, i128)]) -> Chain {
    let mut c = Chain::zero();
    for (t, k) in terms {
        c.add_term(t.clone(), *k);
    }
    c
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Generalized binomial C(x, n) for any integer x.
fn gen_binom(x: i64, n: u32) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..n as i128 {
        num *= x as i128 - i;
        den *= i + 1;
    }
    (num / den) as i64
}

#[test]
fn record_enumeration() {
    assert_eq!(enumerate_records(0, 0), vec![Record::empty(0)]);
    assert_eq!(enumerate_records(0, 2), vec![rec(&[2], &[]), rec(&[1, 1], &[])]);
    for g in 0..=3usize {
        for n in 0..=10u32 {
            let bouquet = records_with_bars(g, n, 0).len() as i64;
            let expected = if g == 0 {
                i64::from(n == 0)
            } else {
                binom(n as i64 + 2 * g as i64 - 1, 2 * g as i64 - 1)
            };
            assert_eq!(bouquet, expected, "g={g} n={n}");
        }
    }
    let all = enumerate_records(2, 5);
    let mut sorted = all.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(all, sorted);
    assert!(all.iter().all(|t| t.n() == 5 && t.d() == 5 + t.b() as u32));
}

// Count of reduced bar tensors a₁⊗…⊗a_b⊗c: one disc basis element per positive weight,
// c ranging over the bouquet basis. Coefficient extraction by series convolution.
fn bar_tensor_count(g: usize, n: usize, b: usize) -> u64 {
    let mut series = vec![0u64; n + 1];
    series[0] = 1;
    for _ in 0..b {
        let mut next = vec![0u64; n + 1];
        for (i, &c) in series.iter().enumerate() {
            for w in 1..=n - i {
                next[i + w] += c;
            }
        }
        series = next;
    }
    for _ in 0..2 * g {
        for i in 1..=n {
            series[i] += series[i - 1];
        }
    }
    series[n]
}

#[test]
fn bar_dictionary_counts() {
    for g in 0..=2 {
        for n in 0..=9u32 {
            let slice = ChainSlice::build(g, n).unwrap();
            for b in 0..=n as usize {
                assert_eq!(
                    slice.dim(b) as u64,
                    bar_tensor_count(g, n as usize, b),
                    "g={g} n={n} b={b}"
                );
            }
        }
    }
}

#[test]
fn differential_examples() {
    assert_eq!(differential(&rec(&[2], &[1, 1])), Ok(Chain::zero()));
    assert_eq!(differential(&rec(&[2], &[])).unwrap(), Chain::zero());
    assert_eq!(
        differential(&rec(&[2], &[0, 0])).unwrap(),
        chain(&[(rec(&[], &[1, 1]), -2)])
    );
    assert_eq!(
        differential(&rec(&[2], &[0, 0, 0, 0])).unwrap(),
        chain(&[(rec(&[], &[1, 1, 0, 0]), -2), (rec(&[], &[0, 0, 1, 1]), -2)])
    );
    assert!(differential(&rec(&[1, 1], &[0, 0])).unwrap().is_zero());
    // −e(1,(3)) + e(1,(1))·Ω₂
    let omega2 = chain(&[(rec(&[], &[1, 1]), 2)]);
    let expected =
        chain(&[(rec(&[3], &[0, 0]), -1)]).add(&product(&chain(&[(rec(&[1], &[0, 0]), 1)]), &omega2).unwrap());
    assert_eq!(differential(&rec(&[1, 2], &[0, 0])).unwrap(), expected);
    assert_eq!(expected.coeff(&rec(&[1], &[1, 1])), 2);
}

#[test]
fn square_zero_small_range() {
    for g in 0..=3 {
        for n in 0..=7 {
            ChainSlice::build_verified(g, n).unwrap();
        }
    }
}

#[test]
fn product_examples() {
    let e1 = rec(&[1], &[]);
    assert_eq!(record_product(&e1, &e1).unwrap(), chain(&[(rec(&[1, 1], &[]), -2)]));
    for t in enumerate_records(1, 3) {
        let unit = Record::empty(1);
        assert_eq!(record_product(&unit, &t).unwrap(), Chain::single(t.clone(), 1));
        assert_eq!(record_product(&t, &unit).unwrap(), Chain::single(t.clone(), 1));
    }
    assert!(record_product(&rec(&[1], &[0, 0]), &rec(&[1], &[])).is_err());
}

fn parity_sign(k: u32) -> i128 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[test]
fn graded_commutativity_brute_force() {
    for g in 0..=1 {
        let records: Vec<Record> = (0..=6)
            .flat_map(|n| enumerate_records(g, n))
            .filter(|t| t.d() <= 6)
            .collect();
        for s in &records {
            for t in &records {
                if s.d() + t.d() > 6 {
                    continue;
                }
                let st = record_product(s, t).unwrap();
                let ts = record_product(t, s).unwrap();
                assert_eq!(st, ts.scale(parity_sign(s.d() * t.d())), "{s} · {t}");
            }
        }
    }
}

#[test]
fn deconcatenation_examples() {
    let t = rec(&[], &[2, 0]);
    let terms = deconcatenate(&t);
    assert_eq!(terms.len(), 1);
    assert_eq!(
        (terms[0].left.clone(), terms[0].right.clone(), terms[0].sign),
        (vec![], t, 1)
    );

    let terms = deconcatenate(&rec(&[1, 2], &[]));
    let got: Vec<(Vec<u32>, Record, i64)> = terms.into_iter().map(|d| (d.left, d.right, d.sign)).collect();
    assert_eq!(
        got,
        vec![
            (vec![], rec(&[1, 2], &[]), 1),
            (vec![1], rec(&[2], &[]), -1),
            (vec![1, 2], rec(&[], &[]), 1),
        ]
    );
    let signs: Vec<i64> = deconcatenate(&rec(&[2, 1, 1], &[])).iter().map(|d| d.sign).collect();
    assert_eq!(signs, vec![1, 1, -1, 1]);
}

fn entry(rank: u64, torsion: &[u64]) -> HomologyEntry {
    HomologyEntry {
        rank,
        torsion: torsion.to_vec(),
    }
}

#[test]
fn small_homology_groups() {
    let z = CoefficientRing::Integers;
    let h = homology(&ChainSlice::build_verified(1, 2).unwrap(), z).unwrap();
    assert_eq!(h[1], entry(2, &[2]));
    // C_2 of a disc is a circle up to homotopy
    let h = homology(&ChainSlice::build_verified(0, 2).unwrap(), z).unwrap();
    assert_eq!(h, vec![entry(1, &[]), entry(1, &[]), entry(0, &[])]);
    for g in 0..=2 {
        for n in 0..=6 {
            let slice = ChainSlice::build_verified(g, n).unwrap();
            for ring in [z, CoefficientRing::Rationals, CoefficientRing::prime_field(3).unwrap()] {
                assert_eq!(homology(&slice, ring).unwrap()[0], entry(1, &[]), "g={g} n={n}");
            }
        }
    }
}

#[test]
fn rational_homology_of_disc_configurations() {
    for n in 2..=9 {
        let h = homology(&ChainSlice::build_verified(0, n).unwrap(), CoefficientRing::Rationals).unwrap();
        let dims: Vec<u64> = h.iter().map(|e| e.rank).collect();
        let mut expected = vec![0; n as usize + 1];
        expected[0] = 1;
        expected[1] = 1;
        assert_eq!(dims, expected, "n={n}");
    }
}

#[test]
fn euler_characteristic() {
    // χ(C_n(M)) = C(χ(M), n) and χ(Σ_{g,1}) = 1 − 2g
    for g in 0..=2usize {
        for n in 0..=7u32 {
            let slice = ChainSlice::build_verified(g, n).unwrap();
            let chain_euler: i64 = (0..=n as usize)
                .map(|b| if (n as usize - b).is_multiple_of(2) { 1 } else { -1 } * slice.dim(b) as i64)
                .sum();
            assert_eq!(chain_euler, gen_binom(1 - 2 * g as i64, n), "g={g} n={n}");
            for ring in [
                CoefficientRing::Rationals,
                CoefficientRing::prime_field(2).unwrap(),
                CoefficientRing::prime_field(3).unwrap(),
            ] {
                let h = homology(&slice, ring).unwrap();
                let euler: i64 = h
                    .iter()
                    .enumerate()
                    .map(|(i, e)| if i % 2 == 0 { 1 } else { -1 } * e.rank as i64)
                    .sum();
                assert_eq!(euler, chain_euler, "g={g} n={n} {}", ring.label());
            }
            let hz = homology(&slice, CoefficientRing::Integers).unwrap();
            let euler: i64 = hz
                .iter()
                .enumerate()
                .map(|(i, e)| if i % 2 == 0 { 1 } else { -1 } * e.rank as i64)
                .sum();
            assert_eq!(euler, chain_euler);
        }
    }
}

#[test]
fn top_degree_integral_homology_is_free() {
    for g in 0..=2 {
        for n in 0..=6 {
            let h = homology(&ChainSlice::build_verified(g, n).unwrap(), CoefficientRing::Integers).unwrap();
            assert!(h[n as usize].torsion.is_empty(), "g={g} n={n}");
        }
    }
}

fn twist(g: usize) -> FreeGroupMap {
    let k = 2 * g;
    let w = parse_word(k, &format!("g{} g{}", k - 1, k)).unwrap();
    FreeGroupMap::with_images(k, vec![(k - 1, w)]).unwrap()
}

#[test]
fn action_examples() {
    let slice = ChainSlice::build(1, 2).unwrap();
    for (b, m) in act(&FreeGroupMap::identity(2), &slice).unwrap().into_iter().enumerate() {
        assert_eq!(m, SparseMatrix::identity(slice.dim(b)));
    }
    let phi = FreeGroupMap::with_images(2, vec![(0, parse_word(2, "g1 g2").unwrap())]).unwrap();
    let m = &act(&phi, &slice).unwrap()[0];
    let col = slice.index_of(&rec(&[], &[2, 0])).unwrap();
    for (v, c) in [([2, 0], 1), ([0, 2], 1), ([1, 1], 1)] {
        assert_eq!(m.get(slice.index_of(&rec(&[], &v)).unwrap(), col), c);
    }
    assert!(act(&FreeGroupMap::identity(4), &slice).is_err());
}

fn assert_equivariant(phi: &FreeGroupMap, g: usize, max_n: u32) {
    for n in 0..=max_n {
        let slice = ChainSlice::build(g, n).unwrap();
        let rho = act(phi, &slice).unwrap();
        for b in 1..=n as usize {
            let d = slice.differential(b);
            assert_eq!(
                d.mul(&rho[b]).unwrap(),
                rho[b - 1].mul(&d).unwrap(),
                "g={g} n={n} b={b}"
            );
        }
    }
}

#[test]
fn action_commutes_with_differential() {
    assert_equivariant(&twist(1), 1, 7);
    let w = |s: &str| parse_word(4, s).unwrap();
    let sep = FreeGroupMap::new(
        4,
        vec![
            w("g1"),
            w("g2"),
            w("g1 g2 G1 G2 g3 g2 g1 G2 G1"),
            w("g1 g2 G1 G2 g4 g2 g1 G2 G1"),
        ],
    )
    .unwrap();
    assert_equivariant(&sep, 2, 5);
    assert_equivariant(&twist(2), 2, 5);
}

fn minus_identity(m: &SparseMatrix) -> SparseMatrix {
    let id = (0..m.rows()).map(|i| (i, i, -1));
    SparseMatrix::from_accumulated(m.rows(), m.cols(), m.entries().iter().copied().chain(id)).unwrap()
}

#[test]
fn cubed_twist_acts_trivially_mod_three() {
    let f3 = PrimeField::new(3).unwrap();
    let phi = twist(1).pow(3).unwrap();
    for n in 0..=5 {
        let slice = ChainSlice::build_verified(1, n).unwrap();
        let cochains = FpCochains::new(&slice, f3);
        let rho = act(&phi, &slice).unwrap();
        for b in 0..=n as usize {
            let diff = minus_identity(&rho[b].transpose());
            assert_eq!(cochains.induced_rank(b, &diff, &cochains, b), 0, "n={n} b={b}");
        }
    }
    // a single twist is visible mod 3 on H_1(C_1) = H
    let slice = ChainSlice::build_verified(1, 1).unwrap();
    let cochains = FpCochains::new(&slice, f3);
    let diff = minus_identity(&act(&twist(1), &slice).unwrap()[0].transpose());
    assert_eq!(cochains.induced_rank(0, &diff, &cochains, 0), 1);
}

#[test]
fn stabilization_is_a_cochain_map_and_injective() {
    let f3 = PrimeField::new(3).unwrap();
    for g in 0..=1 {
        for n in 0..=5 {
            let src = ChainSlice::build_verified(g, n).unwrap();
            let tgt = ChainSlice::build_verified(g, n + 1).unwrap();
            for b in 0..=n as usize {
                let e_b = eps_cochain(&src, b, &tgt).unwrap();
                let e_next = eps_cochain(&src, b + 1, &tgt).unwrap();
                let lhs = e_next.mul(&src.codifferential(b)).unwrap();
                let rhs = tgt.codifferential(b + 1).mul(&e_b).unwrap();
                let neg: Vec<_> = rhs.entries().iter().map(|&(r, c, x)| (r, c, -x)).collect();
                let neg = SparseMatrix::new(rhs.rows(), rhs.cols(), neg).unwrap();
                assert!(lhs == rhs || lhs == neg, "g={g} n={n} b={b}");
            }
            let (cs, ct) = (FpCochains::new(&src, f3), FpCochains::new(&tgt, f3));
            for b in 0..=n as usize {
                let e = eps_cochain(&src, b, &tgt).unwrap();
                let dense = cs.induced_rank(b, &e, &ct, b + 1);
                assert_eq!(dense, cs.dim_h(b), "g={g} n={n} b={b}");
                let sparse = cohomology_image_rank(&[(e, src.codifferential(b))], &tgt.codifferential(b), f3).unwrap();
                assert_eq!(sparse, dense);
            }
        }
    }
}

fn record_strategy(g: usize, max_n: u32) -> impl Strategy<Value = Record> {
    (0..=max_n).prop_flat_map(move |n| {
        let records = enumerate_records(g, n);
        (0..records.len()).prop_map(move |i| records[i].clone())
    })
}

fn chain_strategy(g: usize, max_n: u32) -> impl Strategy<Value = Chain> {
    proptest::collection::vec((record_strategy(g, max_n), -3i128..=3), 1..4).prop_map(|ts| {
        let mut c = Chain::zero();
        for (t, k) in ts {
            c.add_term(t, k);
        }
        c
    })
}

fn homogeneous_parts(c: &Chain) -> Vec<(u32, Chain)> {
    let mut by_degree: std::collections::BTreeMap<u32, Chain> = Default::default();
    for (t, &k) in c.terms() {
        by_degree.entry(t.d()).or_default().add_term(t.clone(), k);
    }
    by_degree.into_iter().collect()
}

proptest! {
    #[test]
    fn leibniz_rule(a in chain_strategy(1, 4), b in chain_strategy(1, 4)) {
        for (da, a) in homogeneous_parts(&a) {
            let lhs = product(&a, &b).unwrap().boundary().unwrap();
            let rhs = product(&a.boundary().unwrap(), &b)
                .unwrap()
                .add(&product(&a, &b.boundary().unwrap()).unwrap().scale(parity_sign(da)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn leibniz_rule_genus_two(a in chain_strategy(2, 3), b in chain_strategy(2, 3)) {
        for (da, a) in homogeneous_parts(&a) {
            let lhs = product(&a, &b).unwrap().boundary().unwrap();
            let rhs = product(&a.boundary().unwrap(), &b)
                .unwrap()
                .add(&product(&a, &b.boundary().unwrap()).unwrap().scale(parity_sign(da)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn product_is_associative(a in chain_strategy(1, 3), b in chain_strategy(1, 3), c in chain_strategy(1, 3)) {
        let l = product(&product(&a, &b).unwrap(), &c).unwrap();
        let r = product(&a, &product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn conjugated_boundary_preserving_maps_are_equivariant(
        letters in proptest::collection::vec((0usize..2, prop_oneof![Just(1i64), Just(-1i64)]), 0..5)
    ) {
        // φ(γ) = uγu⁻¹ fixes ζ₁ up to conjugacy
        let u = Word::from_letters(2, letters).unwrap();
        let phi = FreeGroupMap::new(2, vec![Word::generator(2, 0).unwrap().conjugate_by(&u), Word::generator(2, 1).unwrap().conjugate_by(&u)]).unwrap();
        assert_equivariant(&phi, 1, 5);
    }
}
