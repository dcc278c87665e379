use proptest::prelude::*;

use camina::chartable::CharacterTable;
use camina::clifford::CliffordPair;
use camina::orbits::LinearAction;
use camina::{arith, construct, io, property_d, Group};

fn metacyclic() -> impl Strategy<Value = Group> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_flat_map(|p| {
        let divisors: Vec<u64> = (2..p).filter(|k| (p - 1) % k == 0).collect();
        prop::sample::select(divisors).prop_map(move |k| {
            let r = arith::mod_pow(arith::primitive_root(p), (p - 1) / k, p);
            construct::cyclic_by_cyclic(p as usize, k as usize, r as usize).unwrap()
        })
    })
}

fn base_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        (1usize..40).prop_map(construct::cyclic),
        prop::collection::vec(2usize..5, 1..4)
            .prop_filter("small", |d| d.iter().product::<usize>() <= 64)
            .prop_map(|d| construct::abelian(&d)),
        (2usize..20).prop_map(construct::dihedral),
        metacyclic(),
        prop::sample::select(vec!["sym(3)", "alt(4)", "sym(4)", "sl23", "quaternion(16)", "agl1(7)"])
            .prop_map(|n| construct::by_name(n).unwrap()),
    ]
}

fn small_group() -> impl Strategy<Value = Group> {
    prop_oneof![
        3 => base_group(),
        1 => (base_group(), base_group())
            .prop_filter("product bound", |(a, b)| a.order() * b.order() <= 96)
            .prop_map(|(a, b)| construct::direct_product(&a, &b)),
    ]
}

fn proper_normals(g: &Group) -> Vec<camina::Subgroup> {
    g.normal_subgroups()
        .unwrap()
        .iter()
        .filter(|n| !n.is_trivial() && n.order() < g.order())
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tables_are_sound(g in small_group()) {
        let t = CharacterTable::compute(&g).unwrap();
        t.verify().unwrap();
        prop_assert_eq!(t.len(), g.conjugacy_classes().len());
        if g.is_abelian() {
            prop_assert!(t.degrees().iter().all(|&d| d == 1));
        }
        let mut meet: Vec<usize> = g.elements().collect();
        for chi in t.rows() {
            let k = t.kernel(chi);
            prop_assert!(k.is_normal());
            meet.retain(|&x| k.contains(x));
        }
        prop_assert_eq!(meet, vec![0]);
    }

    #[test]
    fn camina_methods_agree(g in small_group()) {
        let t = CharacterTable::compute(&g).unwrap();
        for n in proper_normals(&g) {
            prop_assert_eq!(
                property_d::is_camina_centralizer(&g, &n).unwrap(),
                property_d::is_camina_vanishing(&t, &n).unwrap()
            );
        }
    }

    #[test]
    fn property_d_is_monotone(g in small_group()) {
        let t = CharacterTable::compute(&g).unwrap();
        let normals = g.normal_subgroups().unwrap();
        for m in normals {
            if !property_d::has_property_d(&t, m) {
                continue;
            }
            for n in normals.iter().filter(|n| n.is_subset_of(m)) {
                prop_assert!(property_d::has_property_d(&t, n));
            }
        }
    }

    #[test]
    fn clifford_bookkeeping(g in small_group(), pick in any::<prop::sample::Index>()) {
        let normals = proper_normals(&g);
        prop_assume!(!normals.is_empty());
        let n = pick.get(&normals);
        let t = CharacterTable::compute(&g).unwrap();
        let pair = CliffordPair::new(&t, n).unwrap();
        for chi in 0..t.len() {
            let res = pair.restriction(chi);
            let d: u64 = res.iter().enumerate().map(|(i, m)| m * pair.theta(i).degree()).sum();
            prop_assert_eq!(d, t.row(chi).degree());
        }
        for theta in 0..pair.sub_table().len() {
            let above = pair.above(theta).unwrap();
            let induced: u64 = above.iter().map(|&(chi, e)| e * t.row(chi).degree()).sum();
            prop_assert_eq!(induced, pair.index() as u64 * pair.theta(theta).degree());
            let orbit = pair.orbit(theta).len();
            for &(chi, e) in &above {
                prop_assert_eq!(orbit as u64 * e * pair.theta(theta).degree(), t.row(chi).degree());
            }
        }
    }

    #[test]
    fn cayley_round_trip(g in small_group()) {
        let h = io::parse_group(&io::format_cayley(&g), g.label()).unwrap();
        prop_assert_eq!(h, g);
    }

    #[test]
    fn orbit_sizes_partition_nonzero_vectors(
        p in prop::sample::select(vec![2u64, 3, 5]),
        n in 1usize..3,
        raw in prop::collection::vec(prop::collection::vec(0u64..5, 4), 1..3),
    ) {
        let gens: Vec<Vec<Vec<u64>>> = raw
            .iter()
            .map(|e| (0..n).map(|i| (0..n).map(|j| e[i * n + j] % p).collect()).collect())
            .collect();
        let Ok(a) = LinearAction::new(p, n, &gens) else {
            return Ok(());
        };
        let sizes = a.orbit_sizes();
        let order = a.group_order().unwrap();
        prop_assert_eq!(sizes.iter().sum::<usize>(), a.space_size() - 1);
        prop_assert!(sizes.iter().all(|s| order % s == 0));
        if p > 2 {
            prop_assert!(a.negation_pairing().unwrap());
        }
        if a.is_transitive_nonzero() {
            prop_assert_eq!(order % (a.space_size() - 1), 0);
        }
    }
}
