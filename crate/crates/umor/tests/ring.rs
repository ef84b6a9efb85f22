use freegroup::{parse_word, FreeGroupMap, Word};
use proptest::prelude::*;
use umor::{
    big_omega, binomial, exterior_divided_power, induced_map, monomials_of_weight, omega, signed_shuffle_coeff,
    Monomial, UMorElement,
};

fn el(terms: &[(&[u32], i128)]) -> UMorElement {
    let rank = terms[0].0.len();
    let mut e = UMorElement::zero(rank);
    for (v, c) in terms {
        e.add_term(v.to_vec(), *c).unwrap();
    }
    e
}

/// Brute force: sum of signs of permutations of 1..m+n increasing on both blocks.
fn shuffle_sign_sum(m: usize, n: usize) -> i128 {
    let mut total = 0;
    // a shuffle is determined by the positions taken by the first block
    for mask in 0u32..(1 << (m + n)) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let mut sigma = vec![0usize; m + n];
        let (mut a, mut b) = (0, m);
        for pos in 0..m + n {
            if mask & (1 << pos) != 0 {
                sigma[a] = pos;
                a += 1;
            } else {
                sigma[b] = pos;
                b += 1;
            }
        }
        let inv = (0..m + n)
            .flat_map(|i| (i + 1..m + n).map(move |j| (i, j)))
            .filter(|&(i, j)| sigma[i] > sigma[j])
            .count();
        total += if inv % 2 == 0 { 1 } else { -1 };
    }
    total
}

#[test]
fn shuffle_coefficients() {
    assert_eq!(signed_shuffle_coeff(1, 1), 0);
    assert_eq!(signed_shuffle_coeff(2, 2), 2);
    for n in 0..12 {
        assert_eq!(signed_shuffle_coeff(0, n), 1);
    }
    for m in 0..=10usize {
        for n in 0..=10 - m {
            assert_eq!(
                signed_shuffle_coeff(m as u64, n as u64),
                shuffle_sign_sum(m, n),
                "ss({m},{n})"
            );
        }
    }
    assert_eq!(binomial(10, 3), Some(120));
}

#[test]
fn product_rules() {
    let x1 = UMorElement::x(2, 0);
    let x2 = UMorElement::x(2, 1);
    assert!(x1.multiply(&x1).unwrap().is_zero());
    assert_eq!(x1.multiply(&x2).unwrap(), x2.multiply(&x1).unwrap().scale(-1).unwrap());
    for m in 0..5 {
        for n in 0..5 {
            let lhs = UMorElement::divided_y(2, 1, m)
                .multiply(&UMorElement::divided_y(2, 1, n))
                .unwrap();
            let rhs = UMorElement::divided_y(2, 1, m + n)
                .scale(binomial((m + n) as u64, m as u64).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    assert!(x1.multiply(&UMorElement::x(3, 0)).is_err());
}

#[test]
fn symplectic_elements() {
    assert!(omega(0).is_zero());
    assert_eq!(omega(1), el(&[(&[1, 1], 1)]));
    assert_eq!(omega(2), el(&[(&[1, 1, 0, 0], 1), (&[0, 0, 1, 1], 1)]));
    for g in 0..3 {
        assert!(big_omega(g, 1).is_zero());
        assert!(big_omega(g, 3).is_zero());
    }
    assert_eq!(big_omega(1, 2), el(&[(&[1, 1], 2)]));
    assert!(big_omega(1, 4).is_zero());
    assert_eq!(big_omega(2, 4), el(&[(&[1, 1, 1, 1], 4)]));
    // Ω₂^{[m]} = Ω_{2m}
    for g in 0..4 {
        for m in 0..=g as u32 + 1 {
            assert_eq!(
                exterior_divided_power(&big_omega(g, 2), m).unwrap(),
                big_omega(g, 2 * m)
            );
        }
    }
    // (2ω)^k = k!·Ω_{2k}
    let two_omega = omega(3).scale(2).unwrap();
    let mut pw = UMorElement::one(6);
    for k in 0..=3u32 {
        let fact: i128 = (1..=k as i128).product();
        assert_eq!(pw, big_omega(3, 2 * k).scale(fact).unwrap());
        pw = pw.multiply(&two_omega).unwrap();
    }
}

#[test]
fn induced_examples() {
    let pinch = FreeGroupMap::with_images(2, vec![(0, parse_word(2, "g1 g2").unwrap())]).unwrap();
    let f = induced_map(&pinch);
    assert_eq!(
        f.y_image(0, 1).unwrap(),
        el(&[(&[2, 0], 1), (&[0, 2], 1), (&[1, 1], 1)])
    );

    // γ1 ↦ γ3, γ2 ↦ 1, γ3 ↦ γ3
    let w = |s: &str| parse_word(3, s).unwrap();
    let simple = FreeGroupMap::new(3, vec![w("g3"), w("1"), w("g3")]).unwrap();
    let f = induced_map(&simple);
    assert_eq!(f.y_image(0, 1).unwrap(), UMorElement::y(3, 2));
    assert!(f.y_image(1, 1).unwrap().is_zero());
    assert_eq!(f.y_image(1, 0).unwrap(), UMorElement::one(3));

    let id = induced_map(&FreeGroupMap::identity(4));
    for n in 0..6 {
        for v in monomials_of_weight(4, n) {
            assert_eq!(id.apply_monomial(&v).unwrap(), UMorElement::monomial(v.clone(), 1));
        }
    }

    for g in 1..4usize {
        let zeta = FreeGroupMap::new(2 * g, vec![Word::boundary(g)]).unwrap();
        let f = induced_map(&zeta);
        assert!(f.x_image(0).is_zero());
        for m in 0..=g as u32 + 1 {
            assert_eq!(f.apply_monomial(&[2 * m]).unwrap(), big_omega(g, 2 * m));
            assert!(f.apply_monomial(&[2 * m + 1]).unwrap().is_zero());
        }
    }
}

// Independent model of the product: x's in increasing order, then divided powers.
fn oracle_product(v: &[u32], w: &[u32]) -> i128 {
    let xs_v: Vec<usize> = (0..v.len()).filter(|&i| v[i] % 2 == 1).collect();
    let xs_w: Vec<usize> = (0..w.len()).filter(|&i| w[i] % 2 == 1).collect();
    if xs_v.iter().any(|i| xs_w.contains(i)) {
        return 0;
    }
    let inversions = xs_v
        .iter()
        .map(|&i| xs_w.iter().filter(|&&j| j < i).count())
        .sum::<usize>();
    let mut c: i128 = if inversions % 2 == 0 { 1 } else { -1 };
    for i in 0..v.len() {
        c *= binomial(((v[i] / 2) + (w[i] / 2)) as u64, (v[i] / 2) as u64).unwrap();
    }
    c
}

fn dimension_parity(a: &UMorElement) -> Option<u64> {
    let ps: Vec<u64> = a
        .terms()
        .keys()
        .map(|v| v.iter().map(|&x| x as u64).sum::<u64>() % 2)
        .collect();
    ps.first().copied().filter(|p| ps.iter().all(|q| q == p))
}

fn monomial_strategy(rank: usize, max_w: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_w, rank).prop_filter("weight bound", move |v| v.iter().sum::<u32>() <= max_w)
}

fn element_strategy(rank: usize, max_w: u32) -> impl Strategy<Value = UMorElement> {
    proptest::collection::vec((monomial_strategy(rank, max_w), -3i128..=3), 1..4).prop_map(move |ts| {
        let mut e = UMorElement::zero(rank);
        for (v, c) in ts {
            e.add_term(v, c).unwrap();
        }
        e
    })
}

fn triple() -> impl Strategy<Value = (UMorElement, UMorElement, UMorElement)> {
    (1usize..=4).prop_flat_map(|k| (element_strategy(k, 3), element_strategy(k, 3), element_strategy(k, 3)))
}

fn random_map(rank: usize) -> impl Strategy<Value = FreeGroupMap> {
    proptest::collection::vec(
        proptest::collection::vec((0..rank, prop_oneof![Just(1i64), Just(-1i64)]), 0..5),
        rank,
    )
    .prop_map(move |ims| {
        FreeGroupMap::new(
            rank,
            ims.into_iter()
                .map(|ls| Word::from_letters(rank, ls).unwrap())
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn product_matches_model(k in 1usize..=4, seed in proptest::collection::vec(0u32..4, 8)) {
        let v: Vec<u32> = seed[..k].to_vec();
        let w: Vec<u32> = seed[4..4 + k].to_vec();
        let prod = UMorElement::monomial(v.clone(), 1).multiply(&UMorElement::monomial(w.clone(), 1)).unwrap();
        let sum: Vec<u32> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
        prop_assert_eq!(prod.coeff(&sum), oracle_product(&v, &w));
        prop_assert!(prod.terms().len() <= 1);
    }

    #[test]
    fn associative_and_graded_commutative((a, b, c) in triple()) {
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        for (x, y) in [(&a, &b), (&b, &c)] {
            for v in x.terms().keys() {
                for w in y.terms().keys() {
                    let (mv, mw) = (UMorElement::monomial(v.clone(), 1), UMorElement::monomial(w.clone(), 1));
                    let d1 = dimension_parity(&mv).unwrap();
                    let d2 = dimension_parity(&mw).unwrap();
                    let sign = if d1 * d2 % 2 == 1 { -1 } else { 1 };
                    prop_assert_eq!(mv.multiply(&mw).unwrap(), mw.multiply(&mv).unwrap().scale(sign).unwrap());
                }
            }
        }
    }

    #[test]
    fn induced_maps_are_ring_maps(phi in random_map(3), a in element_strategy(3, 3), b in element_strategy(3, 3)) {
        let f = induced_map(&phi);
        let lhs = f.apply(&a.multiply(&b).unwrap()).unwrap();
        let rhs = f.apply(&a).unwrap().multiply(&f.apply(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_maps_are_functorial(phi in random_map(2), psi in random_map(2)) {
        let composite = induced_map(&psi.compose(&phi).unwrap());
        let (f, g) = (induced_map(&phi), induced_map(&psi));
        for n in 0..=8 {
            for v in monomials_of_weight(2, n) {
                let direct = composite.apply_monomial(&v).unwrap();
                let stepwise = g.apply(&f.apply_monomial(&v).unwrap()).unwrap();
                prop_assert_eq!(direct, stepwise, "monomial {:?}", v);
            }
        }
    }

    #[test]
    fn conjugated_boundary_word(g in 1usize..=2, letters in proptest::collection::vec((0usize..4, prop_oneof![Just(1i64), Just(-1i64)]), 0..6)) {
        let rank = 2 * g;
        let u = Word::from_letters(rank, letters.into_iter().map(|(i, e)| (i % rank, e))).unwrap();
        let phi = FreeGroupMap::new(rank, vec![Word::boundary(g).conjugate_by(&u)]).unwrap();
        let f = induced_map(&phi);
        for m in 0..=3u32 {
            prop_assert_eq!(f.apply_monomial(&[2 * m]).unwrap(), big_omega(g, 2 * m));
        }
    }
}
