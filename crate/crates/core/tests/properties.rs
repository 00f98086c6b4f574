use mans_core::oracle::{oracle_enumerate_ma, oracle_gaps, oracle_membership, oracle_pf};
use mans_core::*;
use proptest::prelude::*;

fn semigroup_strategy(max_gen: u64, max_len: usize) -> impl Strategy<Value = Generators> {
    prop::collection::vec(2..=max_gen, 2..=max_len)
        .prop_filter_map("gcd must be 1", |v| Generators::new(&v).ok())
}

fn oracle_apery(gens: &[u64], n: u64) -> Vec<u64> {
    let max = *gens.iter().max().unwrap();
    let table = oracle_membership(gens, (max * n * 2).max(max)).unwrap();
    (0..n)
        .map(|i| (0..).map(|k| i + k * n).find(|&x| table.get(x)).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn apery_invariants(s in semigroup_strategy(60, 4)) {
        let gens = s.as_slice();
        for n in (1u64..=30).filter(|&n| s.contains(n as i64).unwrap()) {
            let ap = apery_set(&s, n).unwrap();
            let bound = (ap.max() + 1).max(*gens.last().unwrap());
            let table = oracle_membership(gens, bound).unwrap();
            prop_assert_eq!(ap.values().len() as u64, n);
            prop_assert_eq!(ap.get(0), 0);
            for (i, &w) in ap.values().iter().enumerate() {
                prop_assert_eq!(w % n, i as u64);
                prop_assert!(table.get(w));
                prop_assert!(w < n || !table.get(w - n));
            }
        }
    }

    #[test]
    fn frobenius_independent_of_modulus(s in semigroup_strategy(60, 4)) {
        let f = frobenius(&s).unwrap();
        for n in 1..=30u64 {
            if s.contains(n as i64).unwrap() {
                prop_assert_eq!(frobenius_from_apery(&apery_set(&s, n).unwrap()).unwrap(), f);
                prop_assert_eq!(genus_from_apery(&apery_set(&s, n).unwrap()).unwrap(), genus(&s).unwrap());
                prop_assert_eq!(pseudo_frobenius_via(&s, n).unwrap(), pseudo_frobenius(&s).unwrap());
            }
        }
    }

    #[test]
    fn invariants_match_oracle(s in semigroup_strategy(60, 4)) {
        let gaps = oracle_gaps(s.as_slice()).unwrap();
        prop_assert_eq!(genus(&s).unwrap(), gaps.len() as u64);
        prop_assert_eq!(frobenius(&s).unwrap(), gaps.last().map_or(-1, |&g| g as i64));
        let pf = pseudo_frobenius(&s).unwrap();
        prop_assert_eq!(&pf, &oracle_pf(s.as_slice()).unwrap());
        prop_assert_eq!(pf.last().map(|&x| x as i64), Some(frobenius(&s).unwrap()));
        prop_assert_eq!(Generators::new(s.as_slice()).unwrap(), s.clone());
    }

    #[test]
    fn reduction_preserves_membership(raw in prop::collection::vec(1u64..=40, 1..=6)) {
        if let Ok(s) = Generators::new(&raw) {
            let bound = 400;
            prop_assert_eq!(
                oracle_membership(&raw, bound).unwrap(),
                oracle_membership(s.as_slice(), bound).unwrap()
            );
            prop_assert_eq!(Generators::new(s.as_slice()).unwrap(), s);
        }
    }

    #[test]
    fn recursive_check_agrees(s in semigroup_strategy(200, 5)) {
        prop_assume!(s.multiplicity() <= 12);
        let direct = is_mans(&s).unwrap().is_mans;
        prop_assert_eq!(direct, is_mans_recursive(&s).unwrap());
        if direct {
            prop_assert!(residues_monotone(&s));
        }
    }

    #[test]
    fn apery_matches_brute_force(s in semigroup_strategy(30, 3)) {
        let m = s.multiplicity();
        let expected = oracle_apery(s.as_slice(), m);
        let ap = apery_set(&s, m).unwrap();
        prop_assert_eq!(ap.values(), &expected[..]);
    }
}

fn sweep() -> Vec<Mans3Params> {
    (3..=12)
        .flat_map(|m| (1..=4).flat_map(move |a| mans3_family(m, a).unwrap()))
        .collect()
}

#[test]
fn closed_forms_match_definitions() {
    for p in sweep() {
        let s = mans3_from_params(&p);
        assert_eq!(s.embedding_dimension(), 3, "{p:?}");
        assert_eq!(mans3_params(&s).unwrap(), p);
        assert!(is_mans(&s).unwrap().is_mans);
        assert_eq!(
            mans3_apery(&p).unwrap(),
            apery_set(&s, p.m()).unwrap(),
            "{p:?}"
        );
        assert_eq!(
            mans3_frobenius(&p).unwrap(),
            frobenius(&s).unwrap(),
            "{p:?}"
        );
        assert_eq!(mans3_genus(&p).unwrap(), genus(&s).unwrap(), "{p:?}");
        let pf = mans3_pseudo_frobenius(&p).unwrap();
        assert_eq!(pf, oracle_pf(s.as_slice()).unwrap(), "{p:?}");

        assert!(pf.len() == 1 || pf.len() == 2);
        assert_eq!(pf.len() == 1, p.m() % p.t() == 0);

        let (f, g) = (frobenius(&s).unwrap(), genus(&s).unwrap() as i64);
        assert_eq!(mans3_is_symmetric(&p), f == 2 * g - 1, "{p:?}");
        assert_eq!(mans3_is_pseudo_symmetric(&p), f == 2 * g - 2, "{p:?}");
        assert_eq!(
            classify_irreducible(&s).unwrap() == Irreducibility::Symmetric,
            type_of(&s).unwrap() == 1
        );

        // q(bm+t)+r(am+1)-m ∈ PF ⊆ {(q-1)(bm+t)+(t-1)(am+1)-m, q(bm+t)+r(am+1)-m}
        let (q, r, t) = (p.q(), p.r(), p.t());
        let big = q * p.max_generator() + r * p.ratio() - p.m();
        let small = (q - 1) * p.max_generator() + (t - 1) * p.ratio() - p.m();
        assert!(pf.contains(&big));
        assert!(pf.iter().all(|&x| x == big || x == small));
    }
}

#[test]
fn every_mans_dim3_semigroup_is_parametrized() {
    // converse direction: any MANS ⟨m, x, y⟩ in a window has admissible parameters
    for m in 3..=8u64 {
        for x in m + 1..=40 {
            for y in x + 1..=60 {
                let Ok(s) = Generators::new(&[m, x, y]) else {
                    continue;
                };
                if s.embedding_dimension() == 3 && is_mans(&s).unwrap().is_mans {
                    let p = mans3_params(&s).unwrap();
                    assert_eq!(mans3_from_params(&p), s);
                }
            }
        }
    }
}

const FAMILIES: [(u64, u64); 6] = [(3, 4), (4, 5), (5, 6), (5, 11), (6, 7), (7, 15)];

#[test]
fn trees_match_oracle_and_formulas() {
    for (m, r) in FAMILIES {
        let tree = build_tree(m, r).unwrap();
        let mut vertices: Vec<Generators> =
            tree.nodes().iter().map(|n| n.semigroup.clone()).collect();
        vertices.sort();
        assert_eq!(vertices, oracle_enumerate_ma(m, r).unwrap(), "MA({m},{r})");

        for (i, node) in tree.nodes().iter().enumerate() {
            let s = &node.semigroup;
            assert_eq!(node.depth + 2, s.embedding_dimension());
            assert!(node.depth as u64 <= m - 2);
            assert_eq!(s.multiplicity(), m);
            assert_eq!(s.ratio(), Some(r));

            let kids = children(s).unwrap();
            assert_eq!(kids.len() as u64, child_count(s).unwrap(), "{s}");
            assert_eq!(node.children.len(), kids.len());
            for kid in &kids {
                assert_eq!(&parent(kid).unwrap(), s);
            }
            let top = s.max_generator();
            if top % m < m - 1 {
                assert!(
                    suitably_monotone_elements(s).unwrap().contains(&(top + 1)),
                    "{s}"
                );
            }
            if let Some(p) = node.parent {
                let parent_s = &tree.node(p).semigroup;
                let ap = apery_set(parent_s, m).unwrap();
                let extended = extend_apery(parent_s, &ap, top).unwrap();
                assert!(extended.is_strictly_increasing());
                assert_eq!(extended, apery_set(s, m).unwrap());
                assert!(tree.node(p).children.contains(&i));
            }
        }
    }
}

#[test]
fn peeling_stays_mans() {
    for (m, r) in FAMILIES {
        for s in oracle_enumerate_ma(m, r).unwrap() {
            if s.embedding_dimension() >= 3 {
                let peeled = s.without_max().unwrap();
                assert!(is_mans(&peeled).unwrap().is_mans);
                assert_eq!(peeled.embedding_dimension() + 1, s.embedding_dimension());
            }
        }
    }
}

#[test]
fn successor_chain_in_tree() {
    for m in 3..=7u64 {
        for a in 1..=3u64 {
            let tree = build_tree(m, a * m + 1).unwrap();
            let mut previous = None;
            for i in 1..m {
                let gens: Vec<u64> = core::iter::once(m)
                    .chain((1..=i).map(|k| a * m + k))
                    .collect();
                let s = Generators::new(&gens).unwrap();
                let idx = tree.find(&s).unwrap_or_else(|| panic!("{s} missing"));
                assert_eq!(tree.node(idx).parent, previous);
                previous = Some(idx);
            }
        }
    }
}

#[test]
fn oracle_pf_is_antichain() {
    for p in sweep().into_iter().take(120) {
        let s = mans3_from_params(&p);
        let pf = oracle_pf(s.as_slice()).unwrap();
        for &x in &pf {
            for &y in &pf {
                if x < y {
                    assert!(!s.contains((y - x) as i64).unwrap());
                }
            }
        }
        let ap = apery_set(&s, p.m()).unwrap();
        assert_eq!(*pf.last().unwrap() as i64, ap.max() as i64 - p.m() as i64);
    }
}

#[test]
fn oracle_family_closed_under_parent() {
    for (m, r) in FAMILIES {
        let family = oracle_enumerate_ma(m, r).unwrap();
        for s in &family {
            if s.embedding_dimension() >= 3 {
                assert!(family.contains(&s.without_max().unwrap()));
            }
        }
    }
}

#[test]
fn membership_table_closed() {
    for gens in [&[3u64, 5][..], &[5, 6, 13], &[7, 9, 10, 12]] {
        let t = oracle_membership(gens, 50).unwrap();
        let members: Vec<u64> = t.members().collect();
        for &x in &members {
            for &y in &members {
                if x + y <= 50 {
                    assert!(t.get(x + y));
                }
            }
        }
        let m = gens[0];
        let f = frobenius(&Generators::new(gens).unwrap()).unwrap() as u64;
        assert!((50 - m + 1..=50).all(|x| x <= f || t.get(x)));
    }
}
