use affine_crystals::abacus::{AbacusConfig, DescendingCrystal, DominantWeight};
use affine_crystals::charformula::{
    compare, dimq_v, lambda_prime, profile_of, z_borodin, z_enumerate, z_weyl,
};
use affine_crystals::cpp::CylindricPlanePartition;
use affine_crystals::crystal::explore;
use affine_crystals::partition::Partition;
use affine_crystals::series::QSeries;
use rand::{Rng, SeedableRng};

fn w(c: &[usize]) -> DominantWeight {
    DominantWeight::new(c.to_vec()).unwrap()
}

fn triples() -> Vec<(usize, usize, DominantWeight)> {
    vec![
        (2, 2, w(&[1, 1])),
        (3, 2, w(&[1, 1, 0])),
        (2, 3, w(&[2, 1])),
        (3, 4, w(&[1, 2, 1])),
    ]
}

#[test]
fn three_way_equality() {
    for (n, l, lam) in triples() {
        let c = compare(&lam, n, 15).unwrap();
        assert_eq!(c.l, l);
        assert_eq!(c.weyl, c.enumerated, "weyl vs enumeration for {lam}");
        assert_eq!(c.borodin, c.enumerated, "borodin vs enumeration for {lam}");
    }
}

#[test]
fn rank_level_duality() {
    let mut cases = triples();
    cases.push((3, 6, w(&[2, 3, 1])));
    for (n, l, lam) in cases {
        let dual = lambda_prime(&lam).unwrap();
        assert_eq!(dual.n(), l);
        assert_eq!(dual.level(), n);
        assert_eq!(z_weyl(&lam, n, 15).unwrap(), z_weyl(&dual, l, 15).unwrap(), "{lam}");
    }
    assert_eq!(lambda_prime(&w(&[2, 3, 1])).unwrap(), w(&[1, 1, 0, 0, 1, 0]));
}

#[test]
fn level_one_is_partition_count() {
    let oracle: Vec<i64> = (0..=9).map(|k| Partition::all_of_size(k).len() as i64).collect();
    for n in 2..6 {
        for i in 0..n {
            let lam = DominantWeight::fundamental(n, i);
            assert_eq!(z_weyl(&lam, n, 9).unwrap().to_i64().unwrap(), oracle);
        }
    }
}

#[test]
fn dimq_matches_tight_component() {
    for (n, _, lam) in triples() {
        let seed = lam.compact_config().unwrap();
        let g = explore(&DescendingCrystal { n }, &seed, 8).unwrap();
        assert_eq!(g.q_character(8).unwrap(), dimq_v(&lam, n, 8).unwrap(), "{lam}");
    }
}

#[test]
fn random_weights_three_way() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..6 {
        let n = rng.gen_range(2..4);
        let coeffs: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        if coeffs.iter().sum::<usize>() == 0 {
            continue;
        }
        let c = compare(&DominantWeight::new(coeffs).unwrap(), n, 9).unwrap();
        assert!(c.agree(), "{c:?}");
    }
}

#[test]
fn profile_matches_zero_cpp_boundary() {
    for (n, l, lam) in triples().into_iter().chain([(3, 6, w(&[2, 3, 1]))]) {
        let p = profile_of(&lam, n, l).unwrap();
        assert_eq!(p.n(), n);
        // Walk the boundary of the zero CPP: each row is an up step, and a
        // drop of the starting diagonal by d contributes d down steps.
        let zero = CylindricPlanePartition::zero(n, &lam.compact_config().unwrap().charges()).unwrap();
        let mut walk = String::new();
        let charges = zero.charges();
        for i in (0..l).rev() {
            let next = if i == 0 { charges[l - 1] + n as i64 } else { charges[i - 1] };
            walk.push('A');
            for _ in 0..(next - charges[i]) {
                walk.push('B');
            }
        }
        let pat = p.pattern();
        let doubled = format!("{pat}{pat}");
        assert!(doubled.contains(&walk), "{pat} vs {walk}");
    }
    assert_eq!(profile_of(&w(&[2, 3, 1]), 3, 6).unwrap().pattern(), "BAABAAABA");
}

#[test]
fn borodin_level_one_n_one() {
    // One down step and one up step: a single row with no constraint.
    let p = affine_crystals::charformula::BoundaryProfile::from_b(vec![false, true]);
    let s = z_borodin(&p, 1, 10).unwrap();
    let mut extra = QSeries::one(10);
    // A at 1, B at 2: residue (1 - 2) mod 2 = 1, so ∏ 1/(1 - q^{2k-1}).
    for k in (1..=10).step_by(2) {
        extra.div_one_minus(k);
    }
    assert_eq!(s, &QSeries::partition_product(2, 10) * &extra);
    assert_eq!(s, QSeries::partition_product(1, 10));
    assert_eq!(
        z_enumerate(&w(&[1, 0]), 2, 10).unwrap(),
        z_borodin(&profile_of(&w(&[1, 0]), 2, 1).unwrap(), 2, 10).unwrap()
    );
}

#[test]
fn abacus_seed_ball_matches_level_one_dimq() {
    let seed = AbacusConfig::compact(3, &[0]).unwrap();
    let g = explore(&DescendingCrystal { n: 3 }, &seed, 6).unwrap();
    assert_eq!(g.q_character(6).unwrap(), dimq_v(&w(&[1, 0, 0]), 3, 6).unwrap());
}
