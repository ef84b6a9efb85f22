use freegroup::{parse_word, ExteriorClass, FreeGroupMap, Word};
use mcg::{
    catalog_entry, check_chain_triviality, check_cocycle, check_equivariance, check_umor_triviality, identity,
    load_candidates, separating_candidate, twist, twist_power, validate, xi, xi_p, MappingClassCandidate, McgError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn candidate(genus: usize, label: &str, images: &[&str]) -> MappingClassCandidate {
    let k = 2 * genus;
    let words = images.iter().map(|s| parse_word(k, s).unwrap()).collect();
    MappingClassCandidate::new(label, genus, FreeGroupMap::new(k, words).unwrap()).unwrap()
}

/// γ_{2g−1} ↦ γ_{2g−1}γ_{2g}, which fixes ζ_g exactly.
fn twist_b(genus: usize) -> MappingClassCandidate {
    let k = 2 * genus;
    let w = parse_word(k, &format!("g{} g{}", k - 1, k)).unwrap();
    MappingClassCandidate::new("Db", genus, FreeGroupMap::with_images(k, vec![(k - 2, w)]).unwrap()).unwrap()
}

fn inner(genus: usize, u: &Word) -> MappingClassCandidate {
    let k = 2 * genus;
    let images = (0..k).map(|i| Word::generator(k, i).unwrap().conjugate_by(u)).collect();
    MappingClassCandidate::new(format!("c[{u}]"), genus, FreeGroupMap::new(k, images).unwrap()).unwrap()
}

fn wedge(rank: usize, i: usize, j: usize, c: i64) -> ExteriorClass {
    ExteriorClass::monomial(rank, &[i, j], c).unwrap()
}

#[test]
fn validation_examples() {
    for g in 1..=3 {
        let r = identity(g).validate();
        assert!(r.passes() && r.boundary_exact);
        assert!(separating_candidate(g).validate().passes());
        assert!(twist_b(g).validate().boundary_exact);
    }
    let r = twist(1).validate();
    assert!(r.passes());
    assert!(!r.boundary_exact);
    let zeta = Word::boundary(1);
    assert_eq!(
        twist(1).map().apply(&zeta).unwrap(),
        zeta.conjugate_by(&Word::generator(2, 0).unwrap())
    );

    // the formula only fixes the last commutator up to conjugacy, which breaks the product for g ≥ 2
    let r = twist(2).validate();
    assert!(r.symplectic);
    assert!(!r.boundary_conjugate);

    let square = candidate(1, "sq", &["g1^2", "g2"]);
    let r = square.validate();
    assert!(!r.boundary_conjugate);
    assert!(!r.symplectic);
    assert!(validate(&FreeGroupMap::identity(3), 1).is_err());
}

#[test]
fn xi_examples() {
    assert!(xi(&identity(2)).is_zero());
    for g in 1..=2 {
        let k = 2 * g;
        for p in [2u64, 3, 5, 7] {
            let v = xi(&twist_power(g, p as u32));
            for i in 0..k - 1 {
                assert!(v.images[i].is_zero());
            }
            assert_eq!(v.images[k - 1], wedge(k, k - 2, k - 1, p as i64));
            assert!(xi_p(&twist_power(g, p as u32), p).unwrap().is_zero());
        }
        assert!(xi(&separating_candidate(g)).is_zero());
    }
    assert!(xi_p(&identity(1), 1).is_err());
}

#[test]
fn catalog_lookup() {
    assert_eq!(catalog_entry("Da^3", 2), Some(twist_power(2, 3)));
    assert_eq!(catalog_entry("sep", 1), Some(separating_candidate(1)));
    assert_eq!(catalog_entry("id", 0), Some(identity(0)));
    assert_eq!(catalog_entry("Dx", 1), None);
    assert_eq!(catalog_entry("Da", 0), None);
}

#[test]
fn cocycle_examples() {
    let id = identity(1);
    for other in [
        twist(1),
        separating_candidate(1),
        candidate(1, "x", &["g1 g2 g1", "G2"]),
    ] {
        assert!(check_cocycle(&id, &other).unwrap());
        assert!(check_cocycle(&other, &id).unwrap());
    }
    assert!(check_cocycle(&twist(1), &twist(1)).unwrap());
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| (rng.gen_range(0..rank), if rng.gen_bool(0.5) { 1 } else { -1 }));
    Word::from_letters(rank, letters).unwrap()
}

fn random_validated(rng: &mut ChaCha8Rng, genus: usize) -> MappingClassCandidate {
    loop {
        let mut pool = vec![
            twist_b(genus),
            separating_candidate(genus),
            inner(genus, &random_word(rng, 2 * genus, 12)),
        ];
        if genus == 1 {
            pool.push(twist(1));
        }
        let mut phi = identity(genus);
        for _ in 0..rng.gen_range(1..=3) {
            let k = rng.gen_range(0..pool.len());
            phi = phi.compose(&pool[k]).unwrap();
        }
        let longest = phi.map().images().iter().map(Word::len).max().unwrap_or(0);
        if phi.validate().passes() && longest <= 60 {
            return phi;
        }
    }
}

#[test]
fn cocycle_on_random_validated_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let genus = 1 + trial % 2;
        let phi = random_validated(&mut rng, genus);
        let psi = random_validated(&mut rng, genus);
        assert!(check_cocycle(&phi, &psi).unwrap(), "{phi} / {psi}");
    }
}

#[test]
fn xi_is_additive_on_torelli_elements() {
    // identity abelianization, nonzero ξ
    let bp = candidate(2, "t", &["g1 g3 g4 G3 G4", "g2", "g3", "g4"]);
    assert_eq!(xi(&bp).images[0], wedge(4, 2, 3, 2));
    let sep = separating_candidate(2);
    for (a, b) in [(&bp, &sep), (&sep, &bp), (&bp, &bp)] {
        assert_eq!(xi(&a.compose(b).unwrap()), xi(a).add(&xi(b)));
    }
}

#[test]
fn xi_is_equivariant() {
    let da_inv = candidate(1, "Da-", &["g1", "G1 g2"]);
    assert!(check_equivariance(&twist(1), &da_inv, &separating_candidate(1)).unwrap());
    let db = twist_b(2);
    let db_inv = candidate(2, "Db-", &["g1", "g2", "g3 G4", "g4"]);
    let torelli = candidate(2, "t", &["g1 g3 g4 G3 G4", "g2", "g3", "g4"]);
    for psi in [separating_candidate(2), torelli.clone()] {
        assert!(check_equivariance(&db, &db_inv, &psi).unwrap());
    }
    let swap = candidate(2, "s", &["g3", "g4", "g1", "g2"]);
    assert!(check_equivariance(&swap, &swap, &torelli).unwrap());
    assert_eq!(check_equivariance(&db, &db, &torelli), Err(McgError::NotAnInverse));
}

#[test]
fn umor_triviality() {
    assert!(check_umor_triviality(&identity(1), 3, 8).unwrap());
    for g in 1..=2 {
        assert!(check_umor_triviality(&twist_power(g, 3), 3, 8).unwrap());
        assert!(check_umor_triviality(&separating_candidate(g), 3, 8).unwrap());
    }
    assert!(check_umor_triviality(&twist_power(1, 5), 5, 8).unwrap());
    assert_eq!(
        check_umor_triviality(&twist(1), 3, 8),
        Err(McgError::AbelianizationNontrivial { p: 3 })
    );
    let torelli = candidate(2, "t", &["g1 g3 g4 G3 G4", "g2", "g3", "g4"]);
    assert_eq!(
        check_umor_triviality(&torelli, 3, 4),
        Err(McgError::XiNonzero { p: 3, generator: 1 })
    );
    assert!(check_umor_triviality(&identity(1), 4, 2).is_err());
}

#[test]
fn chain_level_triviality() {
    assert!(check_chain_triviality(&twist_power(1, 3), 3, 8).unwrap());
    assert!(check_chain_triviality(&separating_candidate(1), 3, 8).unwrap());
    assert!(check_chain_triviality(&twist_power(2, 3), 3, 5).unwrap());
    assert!(check_chain_triviality(&separating_candidate(2), 3, 5).unwrap());
    assert_eq!(
        check_chain_triviality(&twist_power(1, 3), 5, 2),
        Err(McgError::AbelianizationNontrivial { p: 5 })
    );
}

#[test]
fn candidate_file() {
    let text = "# twists\nDa: g1 -> g1; g2 -> g1 g2\n\nsq: g1 -> g1^2\n";
    let cs = load_candidates(1, text).unwrap();
    assert_eq!(cs.len(), 2);
    assert_eq!(cs[0].map(), twist(1).map());
    assert_eq!(cs[0].label, "Da");
    assert_eq!(cs[0].to_string(), "Da: g1 -> g1; g2 -> g1 g2");
    assert!(!cs[1].validate().boundary_conjugate);
    match load_candidates(1, "ok: g1 -> g1\nbad: g1 -> g7\n") {
        Err(McgError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("unexpected {other:?}"),
    }
}
