//! Randomised invariants on universes larger than the exhaustive sweeps reach.

use primaltop::{
    check_space, kuratowski_check, topology_from_base, OperatorKind, OperatorTable, Primal,
    PrimalSpace, SetFamily, Subset, TheoremId, Topology, Universe,
};
use proptest::prelude::*;

/// Closes `seeds` under union and intersection and adds ∅ and X.
fn topology(u: &Universe, seeds: &[u16]) -> Topology {
    let full = (1u16 << u.size()) - 1;
    let mut opens: Vec<u16> = vec![0, full];
    opens.extend(seeds.iter().map(|s| s & full));
    opens.sort_unstable();
    opens.dedup();
    loop {
        let mut next = opens.clone();
        for &a in &opens {
            for &b in &opens {
                next.push(a | b);
                next.push(a & b);
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() == opens.len() {
            break;
        }
        opens = next;
    }
    let fam = SetFamily::new(
        u,
        opens.iter().map(|&b| u.subset_from_bits(b as u32).unwrap()),
    )
    .unwrap();
    Topology::validate(&fam, u).unwrap()
}

/// The primal whose non-members are the supersets of `core`.
fn primal(u: &Universe, core: u16) -> Primal {
    let core = core & ((1u16 << u.size()) - 1);
    let fam = SetFamily::new(u, u.powerset().filter(|a| core & !a.bits() != 0)).unwrap();
    Primal::validate(&fam, u).unwrap()
}

fn space() -> impl Strategy<Value = PrimalSpace> {
    (1usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<u16>(), 0..5),
                any::<u16>(),
            )
        })
        .prop_map(|(n, seeds, core)| {
            let u = Universe::letters(n).unwrap();
            PrimalSpace::new(topology(&u, &seeds), primal(&u, core)).unwrap()
        })
}

fn subset(space: &PrimalSpace, bits: u16) -> Subset {
    let u = space.universe();
    u.subset_from_bits((bits & ((1u16 << u.size()) - 1)) as u32)
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn diamond_r_is_additive(s in space(), a in any::<u16>(), b in any::<u16>()) {
        let (a, b) = (subset(&s, a), subset(&s, b));
        prop_assert_eq!(s.diamond_r(a | b).unwrap(), s.diamond_r(a).unwrap() | s.diamond_r(b).unwrap());
        prop_assert!(s.diamond(a).unwrap().is_subset_of(s.diamond_r(a).unwrap()));
    }

    #[test]
    fn cl_diamond_r_is_kuratowski(s in space()) {
        let report = kuratowski_check(&OperatorTable::build(&s, OperatorKind::ClDiamondR));
        prop_assert!(report.is_closure_operator());
    }

    #[test]
    fn induced_topologies_nest(s in space()) {
        let flags = s.induced_topologies().comparisons();
        prop_assert!(flags.delta_in_diamond_r);
        prop_assert!(flags.diamond_r_in_diamond);
        prop_assert!(flags.delta_in_tau);
        prop_assert!(flags.tau_in_diamond);
        let generated = topology_from_base(&s.base_family(), s.universe()).unwrap();
        prop_assert_eq!(generated.opens(), &s.tau_diamond_r());
    }

    #[test]
    fn direct_catalog_holds(s in space()) {
        let ids: Vec<_> = TheoremId::direct().filter(|&t| t != TheoremId::C23).collect();
        for r in check_space(&s, &ids) {
            prop_assert!(r.passed(), "{} fails: {:?}", r.theorem, r.witnesses.first());
        }
    }

    #[test]
    fn complement_and_de_morgan(n in 1usize..=8, a in any::<u16>(), b in any::<u16>()) {
        let u = Universe::letters(n).unwrap();
        let mask = (1u32 << n) - 1;
        let a = u.subset_from_bits(a as u32 & mask).unwrap();
        let b = u.subset_from_bits(b as u32 & mask).unwrap();
        prop_assert_eq!(!!a, a);
        prop_assert_eq!(!(a | b), !a & !b);
        prop_assert_eq!(!(a & b), !a | !b);
        prop_assert_eq!(a - b, a & !b);
    }
}
