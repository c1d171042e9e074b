use std::collections::{BTreeSet, HashSet, VecDeque};

use affine_crystals::abacus::{
    enumerate_descending, enumerate_tight, partition_e, partition_f, AbacusConfig, AbacusCrystal,
    DescendingCrystal, DominantWeight,
};
use affine_crystals::crystal::{check_local_axioms, explore, Crystal};
use affine_crystals::partition::{BeadRow, Partition};
use proptest::prelude::*;

/// Weakly decreasing charge vectors with entries in `0..n`: one compact
/// descending boundary per dominant weight of level `l`.
fn boundaries(n: usize, l: usize) -> Vec<Vec<i64>> {
    fn go(n: i64, l: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for c in (0..=max).rev() {
            cur.push(c);
            go(n, l, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as i64, l, n as i64 - 1, &mut Vec::new(), &mut out);
    out
}

fn descending_ball(n: usize, l: usize, w: usize) -> Vec<AbacusConfig> {
    boundaries(n, l)
        .into_iter()
        .flat_map(|b| enumerate_descending(n, &b, w).unwrap())
        .collect()
}

fn nottight() -> AbacusConfig {
    AbacusConfig::from_art(
        3,
        -6,
        &["#####oo##ooo", "###o##o#oooo", "####o##ooooo", "#####o#ooooo"],
    )
    .unwrap()
}

fn descending_figure() -> AbacusConfig {
    AbacusConfig::from_art(
        3,
        -7,
        &[
            "###o#o##o#oo#o",
            "##o#o#o#o#o#oo",
            "###o##oo#o#ooo",
            "####o#oo#o#ooo",
        ],
    )
    .unwrap()
}

fn good_abacus() -> AbacusConfig {
    AbacusConfig::from_art(
        3,
        -6,
        &["#####o##o#oo", "####o#o##ooo", "#####o#o#ooo", "##o##o##oooo"],
    )
    .unwrap()
}

#[test]
fn figure_configurations_are_descending() {
    assert!(nottight().is_descending());
    assert!(!nottight().is_tight().unwrap());
    assert!(descending_figure().is_descending());
    let g = good_abacus();
    assert!(g.is_descending());
    assert!(g.is_tight().unwrap());
    assert_eq!(g.weight(), 18);
    assert_eq!(g.compactify().charges(), vec![2, 1, 1, 0]);
}

#[test]
fn nottight_strand_two_shifts() {
    let psi = nottight();
    let shifted = psi.tighten(2).unwrap().expect("T_2 applies");
    assert_eq!(shifted.weight() + 3, psi.weight());
    assert_eq!(shifted.strand(1), psi.strand(1));
    assert_eq!(shifted.strand(3), psi.strand(3));
    let l = psi.l() as i64;
    let expected: Vec<i64> = (0..l).map(|i| psi.bead(i + 1, 2)).collect();
    assert_eq!(shifted.strand(2), expected);
}

#[test]
fn descending_figure_shiftable_strands() {
    let psi = descending_figure();
    let shiftable: Vec<usize> = (1..=5)
        .filter(|&k| psi.tighten(k).unwrap().is_some())
        .collect();
    assert_eq!(shiftable, vec![1, 2, 4]);
}

#[test]
fn shift_preserves_descent_on_figure() {
    let psi = descending_figure();
    let mut cur = psi.clone();
    for _ in 0..psi.l() {
        cur = cur.shift();
        assert!(cur.is_descending());
        assert_eq!(cur.weight(), psi.weight());
    }
    let cyclic = AbacusConfig::from_art(
        3,
        -5,
        &["###o#o##oo", "####o#o#oo", "#o##o##ooo", "#o##o#oooo"],
    )
    .unwrap();
    assert!(cyclic.is_descending());
    assert!(cyclic.shift().is_descending());
}

#[test]
fn strand_rule_matches_general_rule() {
    for (n, l) in [(3, 2), (3, 4), (2, 3)] {
        for psi in descending_ball(n, l, 8) {
            for i in 0..n {
                let fast = psi.f_descending(i).unwrap();
                assert_eq!(fast, psi.f(i), "f_{i} on\n{psi}");
                assert_eq!(psi.e_descending(i).unwrap(), psi.e(i), "e_{i} on\n{psi}");
                if let Some(next) = fast {
                    assert!(next.is_descending());
                }
            }
        }
    }
}

#[test]
fn acting_strand_is_the_moved_strand() {
    for psi in descending_ball(3, 2, 7) {
        for i in 0..3 {
            if let Some(k) = psi.acting_strand(i, true).unwrap() {
                let next = psi.f(i).unwrap();
                let changed: Vec<usize> = (1..=psi.max_len() + 2)
                    .filter(|&k| next.strand(k) != psi.strand(k))
                    .collect();
                assert_eq!(changed, vec![k]);
            }
        }
    }
}

#[test]
fn f_then_e_is_identity_and_weight_grows() {
    for (n, l) in [(2, 2), (3, 2)] {
        for psi in descending_ball(n, l, 6) {
            for i in 0..n {
                if let Some(next) = psi.f(i) {
                    assert_eq!(next.e(i).as_ref(), Some(&psi));
                    assert_eq!(next.weight(), psi.weight() + 1);
                }
            }
        }
    }
    for psi in descending_ball(3, 4, 8) {
        for i in 0..3 {
            if let Some(next) = psi.f(i) {
                assert_eq!(next.weight(), psi.weight() + 1);
            }
        }
    }
}

#[test]
fn string_lengths_match_weight_pairing() {
    let c = AbacusCrystal { n: 3 };
    for psi in descending_ball(3, 2, 6) {
        for i in 0..3 {
            let phi = c.phi(&psi, i).unwrap() as i64;
            let eps = c.epsilon(&psi, i).unwrap() as i64;
            assert_eq!(phi - eps, psi.weight_pairing(i), "{psi}");
        }
    }
}

#[test]
fn tighten_untighten_round_trip() {
    for (n, l) in [(2, 2), (3, 2), (3, 4)] {
        let w = if l == 4 { 8 } else { 10 };
        for psi in descending_ball(n, l, w) {
            for k in 1..=psi.max_len() + 1 {
                if let Some(t) = psi.tighten(k).unwrap() {
                    assert!(t.is_descending());
                    assert_eq!(t.weight() + n, psi.weight());
                    assert_eq!(t.untighten(k).unwrap().as_ref(), Some(&psi));
                }
                if let Some(u) = psi.untighten(k).unwrap() {
                    assert_eq!(u.tighten(k).unwrap().as_ref(), Some(&psi));
                }
            }
        }
    }
}

#[test]
fn compact_strands_never_move() {
    for b in boundaries(3, 4) {
        let psi0 = AbacusConfig::compact(3, &b).unwrap();
        for k in 1..6 {
            assert_eq!(psi0.tighten(k).unwrap(), None);
        }
        let (gamma, lambda) = psi0.decompose().unwrap();
        assert_eq!(gamma, psi0);
        assert!(lambda.is_empty());
    }
}

/// Apply whichever `T_k` applies until none does.
fn greedy_tighten(psi: &AbacusConfig) -> AbacusConfig {
    let mut cur = psi.clone();
    'outer: loop {
        for k in 1..=cur.max_len() {
            if let Some(next) = cur.tighten(k).unwrap() {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

#[test]
fn decompose_is_a_weighted_bijection() {
    for (n, l) in [(2, 2), (3, 2), (3, 4)] {
        let w = 10;
        for b in boundaries(n, l) {
            let all = enumerate_descending(n, &b, w).unwrap();
            let tight = enumerate_tight(n, &b, w).unwrap();
            let mut seen = HashSet::new();
            for psi in &all {
                let (gamma, lambda) = psi.decompose().unwrap();
                assert!(gamma.is_tight().unwrap());
                assert_eq!(gamma, greedy_tighten(psi));
                assert_eq!(gamma.compactify(), psi.compactify());
                assert_eq!(psi.weight(), gamma.weight() + n * lambda.size());
                assert_eq!(&AbacusConfig::compose(&gamma, &lambda).unwrap(), psi);
                assert!(seen.insert((gamma, lambda)));
            }
            // Surjectivity: every (γ, λ) within the weight bound occurs.
            let mut expected = 0;
            for gamma in &tight {
                for s in 0..=(w - gamma.weight()) / n {
                    expected += Partition::all_of_size(s).len();
                }
            }
            assert_eq!(all.len(), expected, "n={n} l={l} boundary {b:?}");
        }
    }
}

#[test]
fn crystal_operators_commute_with_tightening() {
    for (n, l) in [(2, 2), (3, 2), (3, 4)] {
        for psi in descending_ball(n, l, 8) {
            for k in 1..=psi.max_len() + 1 {
                for i in 0..n {
                    let t = |x: &AbacusConfig| x.tighten(k).unwrap();
                    let ts = |x: &AbacusConfig| x.untighten(k).unwrap();
                    assert_eq!(t(&psi).and_then(|x| x.f(i)), psi.f(i).and_then(|x| t(&x)));
                    assert_eq!(t(&psi).and_then(|x| x.e(i)), psi.e(i).and_then(|x| t(&x)));
                    assert_eq!(ts(&psi).and_then(|x| x.f(i)), psi.f(i).and_then(|x| ts(&x)));
                    assert_eq!(ts(&psi).and_then(|x| x.e(i)), psi.e(i).and_then(|x| ts(&x)));
                }
            }
        }
    }
}

#[test]
fn sources_are_untightenings_of_the_compact_configuration() {
    let w = 9;
    for (n, l) in [(2, 2), (3, 2), (3, 3)] {
        for b in boundaries(n, l) {
            let psi0 = AbacusConfig::compact(n, &b).unwrap();
            let mut reach = BTreeSet::new();
            let mut queue = VecDeque::from([psi0.clone()]);
            reach.insert(psi0);
            while let Some(cur) = queue.pop_front() {
                for k in 1..=cur.max_len() + 1 {
                    if let Some(next) = cur.untighten(k).unwrap() {
                        if next.weight() <= w && reach.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
            let sources: BTreeSet<AbacusConfig> = enumerate_descending(n, &b, w)
                .unwrap()
                .into_iter()
                .filter(|psi| (0..n).all(|i| psi.e(i).is_none()))
                .collect();
            assert_eq!(sources, reach, "n={n} boundary {b:?}");
        }
    }
}

#[test]
fn tight_configurations_form_the_component_of_the_source() {
    for (n, l) in [(3, 2), (2, 2), (3, 4)] {
        for b in boundaries(n, l) {
            let psi0 = AbacusConfig::compact(n, &b).unwrap();
            let g = explore(&DescendingCrystal { n }, &psi0, 8).unwrap();
            let tight: Vec<AbacusConfig> = enumerate_tight(n, &b, 8).unwrap();
            let mut vertices = g.vertices.clone();
            vertices.sort();
            assert_eq!(vertices, tight);
            for (v, d) in g.vertices.iter().zip(&g.degrees) {
                assert_eq!(v.weight(), *d);
            }
        }
    }
}

#[test]
fn local_axioms_on_descending_balls() {
    for (n, l) in [(3, 2), (4, 2)] {
        for b in boundaries(n, l) {
            let psi0 = AbacusConfig::compact(n, &b).unwrap();
            let c = DescendingCrystal { n };
            let g = explore(&c, &psi0, 6).unwrap();
            let report = check_local_axioms(&c, &g);
            assert!(report.passed(), "{:?}", report.first());
        }
    }
}

#[test]
fn level_one_component_counts() {
    // The component of the empty partition at level 1 has as many
    // elements in degree d as there are partitions of d with no part
    // divisible by n.
    for n in 2..5 {
        let c = affine_crystals::abacus::PartitionCrystal { n, l: 1, offset: 0 };
        let g = explore(&c, &Partition::empty(), 8).unwrap();
        let counts = g.q_character(8).unwrap().to_i64().unwrap();
        let oracle: Vec<i64> = (0..=8)
            .map(|d| {
                Partition::all_of_size(d)
                    .iter()
                    .filter(|p| p.parts().iter().all(|&x| x % n != 0))
                    .count() as i64
            })
            .collect();
        assert_eq!(counts, oracle, "n={n}");
    }
}

/// The partition-side rule read straight off the ribbon description.
fn direct_partition_f(p: &Partition, n: usize, l: usize, i: usize, raise: bool) -> Option<Partition> {
    let row = BeadRow::new(0, p.clone());
    let li = l as i64;
    let (lo, hi) = row.span();
    let mut brackets: Vec<(i64, bool)> = Vec::new();
    for x in lo - li - 1..=hi + li + 1 {
        if x.div_euclid(li).rem_euclid(n as i64) as usize != i {
            continue;
        }
        if row.is_occupied(x - li) && !row.is_occupied(x) {
            brackets.push((x, true));
        }
        if row.is_occupied(x) && !row.is_occupied(x - li) {
            brackets.push((x, false));
        }
    }
    // Literal cancellation of adjacent "()" pairs.
    loop {
        let hit = brackets.windows(2).position(|w| w[0].1 && !w[1].1);
        match hit {
            Some(k) => {
                brackets.drain(k..k + 2);
            }
            None => break,
        }
    }
    let x = if raise {
        brackets.iter().find(|b| b.1)?.0
    } else {
        brackets.iter().rev().find(|b| !b.1)?.0
    };
    let moved = if raise {
        row.move_bead(x - li, li)
    } else {
        row.move_bead(x, -li)
    };
    Some(moved.unwrap().partition)
}

#[test]
fn partition_model_matches_ribbon_rule() {
    for (n, l) in [(3, 2), (2, 3), (3, 4)] {
        for p in Partition::up_to_size(12) {
            for i in 0..n {
                assert_eq!(partition_f(&p, n, l, i), direct_partition_f(&p, n, l, i, true), "{p}");
                assert_eq!(partition_e(&p, n, l, i), direct_partition_f(&p, n, l, i, false), "{p}");
            }
        }
    }
}

#[test]
fn lambda_of_matches_string_lengths() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.gen_range(2..5);
        let l = rng.gen_range(1..5);
        let mut charges: Vec<i64> = (0..l).map(|_| rng.gen_range(0..n as i64)).collect();
        charges.sort_unstable_by(|a, b| b.cmp(a));
        let shift = rng.gen_range(-5..5);
        let charges: Vec<i64> = charges.iter().map(|c| c + shift).collect();
        let psi0 = AbacusConfig::compact(n, &charges).unwrap();
        let lambda = psi0.lambda_of().unwrap();
        let c = AbacusCrystal { n };
        for i in 0..n {
            assert_eq!(c.phi(&psi0, i).unwrap(), lambda.coeff(i));
        }
    }
}

#[test]
fn canonical_compact_configuration_has_its_weight() {
    for b in boundaries(3, 4) {
        let psi0 = AbacusConfig::compact(3, &b).unwrap();
        let w: DominantWeight = psi0.lambda_of().unwrap();
        assert_eq!(w.compact_config().unwrap(), psi0);
    }
}

fn arb_row() -> impl Strategy<Value = BeadRow> {
    (-3i64..4, proptest::collection::vec(0usize..5, 0..4)).prop_map(|(c, mut v)| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        BeadRow::new(c, Partition::new(v).unwrap())
    })
}

proptest! {
    #[test]
    fn shift_commutes_with_operators(rows in proptest::collection::vec(arb_row(), 1..4), i in 0usize..3) {
        let psi = AbacusConfig::new(3, rows).unwrap();
        prop_assert_eq!(psi.shift().f(i), psi.f(i).map(|x| x.shift()));
        prop_assert_eq!(psi.shift().e(i), psi.e(i).map(|x| x.shift()));
        prop_assert_eq!(psi.shift().is_descending(), psi.is_descending());
        prop_assert_eq!(psi.shift().weight(), psi.weight());
    }

    #[test]
    fn general_rule_e_f_inverse(rows in proptest::collection::vec(arb_row(), 1..4), i in 0usize..3) {
        let psi = AbacusConfig::new(3, rows).unwrap();
        if let Some(next) = psi.f(i) {
            prop_assert_eq!(next.e(i), Some(psi.clone()));
        }
        if let Some(prev) = psi.e(i) {
            prop_assert_eq!(prev.f(i), Some(psi));
        }
    }

    #[test]
    fn single_right_moves_and_descent(rows in proptest::collection::vec(arb_row(), 1..4), row in 0usize..4, k in 1usize..4) {
        // Brute check of descent: compare explicit occupancy windows.
        let psi = AbacusConfig::new(3, rows).unwrap();
        let row = row % psi.l();
        let r = &psi.rows()[row];
        let p = r.bead(k);
        if let Ok(moved) = r.move_bead(p, 1) {
            let mut rows = psi.rows().to_vec();
            rows[row] = moved;
            let next = AbacusConfig::new(3, rows).unwrap();
            let brute = (0..next.l() as i64).all(|i| (1..12).all(|k| next.bead(i, k) >= next.bead(i + 1, k)));
            prop_assert_eq!(next.is_descending(), brute);
        }
    }
}

#[test]
fn partition_seed_generates_the_irreducible() {
    use affine_crystals::abacus::{partition_seed, DominantWeight, PartitionCrystal};
    use affine_crystals::charformula::dimq_v;
    let cases = [vec![2, 0, 0], vec![0, 1, 1], vec![0, 2, 0], vec![1, 1, 1], vec![1, 0, 1, 0], vec![0, 3]];
    for c in cases {
        let lam = DominantWeight::new(c).unwrap();
        let (n, l) = (lam.n(), lam.level());
        let (seed, offset) = partition_seed(&lam).unwrap();
        let crystal = PartitionCrystal { n, l, offset };
        for i in 0..n {
            assert_eq!(crystal.e(&seed, i), None);
            assert_eq!(crystal.phi(&seed, i).unwrap(), lam.coeff(i), "{lam}");
        }
        let g = explore(&crystal, &seed, 7).unwrap();
        assert_eq!(g.q_character(7).unwrap(), dimq_v(&lam, n, 7).unwrap(), "{lam}");
    }
    for c in [vec![1, 1], vec![1, 2, 0], vec![1, 1, 1, 1]] {
        assert!(partition_seed(&DominantWeight::new(c).unwrap()).is_none());
    }
}
