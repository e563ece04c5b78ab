//! Randomised round trips and transport laws on lengths beyond what the
//! exhaustive tests reach.

use pexlab::bijections::{
    cycle_word, cycle_word_inverse, foata, foata_inverse, lambda_inv, lambda_map, phi, phi_inv,
    psi, psi_bar,
};
use pexlab::{statistic, MeshPattern, Permutation, StatisticName::*, Symmetry, TranspositionArray};
use proptest::prelude::*;

fn perm(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn derangement(max_len: usize) -> impl Strategy<Value = Permutation> {
    perm(max_len).prop_map(|p| p.strip_fixed_points().0)
}

fn array(max_len: usize) -> impl Strategy<Value = TranspositionArray> {
    (0..=max_len)
        .prop_flat_map(|n| (1..=n).map(|i| 1..=i).collect::<Vec<_>>())
        .prop_map(|t| TranspositionArray::new(t).unwrap())
}

/// `⟨t₁,1⟩·⟨t₂,2⟩⋯⟨tₙ,n⟩` multiplied out factor by factor.
fn product_of_transpositions(t: &TranspositionArray) -> Permutation {
    let n = t.len();
    let mut acc: Vec<usize> = (1..=n).collect();
    for i in 1..=n {
        let mut factor: Vec<usize> = (1..=n).collect();
        factor.swap(t.at(i) - 1, i - 1);
        // acc · factor sends j to acc(factor(j))
        acc = (0..n).map(|j| acc[factor[j] - 1]).collect();
    }
    Permutation::new(acc).unwrap()
}

proptest! {
    #[test]
    fn transposition_array_is_the_factorisation(t in array(14)) {
        prop_assert_eq!(t.to_permutation(), product_of_transpositions(&t));
        prop_assert_eq!(TranspositionArray::from_permutation(&t.to_permutation()), t.clone());
        prop_assert_eq!(t.fix(), statistic(Cyc, &t.to_permutation()));
        prop_assert_eq!(t.is_star(), t.to_permutation().is_derangement());
    }

    #[test]
    fn permutation_round_trips(p in perm(14)) {
        prop_assert_eq!(p.transposition_array().to_permutation(), p.clone());
        let (core, fixed) = p.strip_fixed_points();
        prop_assert!(core.is_derangement());
        prop_assert_eq!(Permutation::insert_fixed_points(&core, &fixed).unwrap(), p.clone());
        prop_assert_eq!(p.cycle_decomposition().to_permutation(), p.clone());
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
    }

    #[test]
    fn symmetries_are_involutions(p in perm(14)) {
        for sym in [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse, Symmetry::ReverseComplement] {
            prop_assert_eq!(p.apply_symmetry(sym).apply_symmetry(sym), p.clone());
        }
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn phi_transports_des2_to_pcyc(p in perm(14)) {
        let q = phi(&p);
        prop_assert_eq!(statistic(Pcyc, &q), statistic(Des2, &p));
        prop_assert_eq!(phi_inv(&q), p.clone());
        prop_assert_eq!(phi(&phi_inv(&p)), p);
    }

    #[test]
    fn lambda_round_trip(p in derangement(12)) {
        let t = lambda_map(&p).unwrap();
        prop_assert!(t.is_star());
        prop_assert_eq!(t.fix(), statistic(Pex, &p));
        prop_assert_eq!(lambda_inv(&t).unwrap(), p.clone());
        let q = psi(&p).unwrap();
        prop_assert!(q.is_derangement());
        prop_assert_eq!(statistic(Cyc, &q), statistic(Pex, &p));
    }

    #[test]
    fn psi_bar_transports_pex_and_fix(p in perm(12)) {
        let q = psi_bar(&p);
        prop_assert_eq!(statistic(Pcyc, &q), statistic(Pex, &p));
        prop_assert_eq!(q.fixed_points(), p.fixed_points());
    }

    #[test]
    fn foata_transports_des_to_exc(p in perm(14)) {
        let q = foata(&p);
        prop_assert_eq!(statistic(Exc, &q), statistic(Des, &p));
        prop_assert_eq!(foata_inverse(&q), p.clone());
        prop_assert_eq!(cycle_word_inverse(&cycle_word(&p)), p);
    }

    #[test]
    fn growth_laws(p in perm(10), seed in any::<usize>()) {
        let n = p.len() + 1;
        let x = seed % n + 1;
        let q = p.insert_last(x).unwrap();
        let last = p.as_slice().last().copied();
        let gain = |b: bool| usize::from(b);
        prop_assert_eq!(statistic(Des0, &q), statistic(Des0, &p) + gain(x == 1 && !p.is_empty()));
        prop_assert_eq!(statistic(Des1, &q), statistic(Des1, &p) + gain(last == Some(x)));
        prop_assert_eq!(
            statistic(Des2, &q),
            statistic(Des2, &p) + gain(x < n && last == Some(n - 1))
        );
    }

    #[test]
    fn mesh_counts_match_scans_and_mirror(p in perm(9)) {
        let rc = p.reverse_complement();
        for (i, name) in [Des0, Des1, Des2].into_iter().enumerate() {
            let left = MeshPattern::left(i).count(&p);
            prop_assert_eq!(left, statistic(name, &p));
            prop_assert_eq!(left, MeshPattern::right(2 - i).count(&rc));
        }
        prop_assert_eq!(statistic(Pdes, &p), statistic(Des1, &p));
    }

    #[test]
    fn pex_ignores_fixed_points(p in perm(14)) {
        prop_assert_eq!(statistic(Pex, &p), statistic(Pex, &p.strip_fixed_points().0));
        prop_assert!(2 * statistic(Pex, &p) <= p.len());
        prop_assert!(2 * statistic(Des2, &p) <= p.len());
        prop_assert_eq!(statistic(Pcyc, &p) + statistic(Fix, &p), statistic(Cyc, &p));
    }
}
