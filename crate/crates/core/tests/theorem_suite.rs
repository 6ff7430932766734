use primaltop::{
    check_space, check_theorem, find_counterexample, fixtures, sweep, sweep_many, Status, Strategy,
    TheoremError, TheoremId, TheoremKind,
};

#[test]
fn check_theorem_on_fixture() {
    let report = check_theorem(TheoremId::T36g, &fixtures::load("EX-A"));
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.spaces_checked, 1);
    assert!(report.witnesses.is_empty());
    assert_eq!(report.seed, None);
}

#[test]
fn sweep_counts_every_space() {
    assert_eq!(
        sweep(TheoremId::T36c, 1, Strategy::Exhaustive)
            .unwrap()
            .spaces_checked,
        2
    );
    assert_eq!(
        sweep(TheoremId::T36c, 2, Strategy::Exhaustive)
            .unwrap()
            .spaces_checked,
        16
    );
    let r = sweep(TheoremId::T36g, 3, Strategy::Exhaustive).unwrap();
    assert!(r.passed());
    assert_eq!(r.spaces_checked, 29 * 8);
}

#[test]
fn direct_ids_pass_on_one_point() {
    let ids: Vec<_> = TheoremId::direct().collect();
    for r in sweep_many(&ids, 1, Strategy::Exhaustive).unwrap() {
        assert!(r.passed(), "{} fails on one point", r.theorem);
    }
}

#[test]
fn sweep_bounds() {
    assert!(matches!(
        sweep(TheoremId::T36g, 4, Strategy::Exhaustive),
        Err(TheoremError::BoundExceeded { n: 4, max: 3, .. })
    ));
    assert!(matches!(
        sweep(
            TheoremId::T36g,
            5,
            Strategy::Sampled {
                samples: 10,
                seed: 1
            }
        ),
        Err(TheoremError::BoundExceeded { n: 5, max: 4, .. })
    ));
    assert!(sweep(TheoremId::T36g, 0, Strategy::Exhaustive).is_err());
}

#[test]
fn sampled_runs_are_reproducible() {
    let strategy = Strategy::Sampled {
        samples: 200,
        seed: 11,
    };
    let a = sweep(TheoremId::Tmono, 4, strategy).unwrap();
    let b = sweep(TheoremId::Tmono, 4, strategy).unwrap();
    assert!(a.passed());
    assert_eq!(a.seed, Some(11));
    assert_eq!(
        (a.spaces_checked, a.failures, &a.witnesses),
        (b.spaces_checked, b.failures, &b.witnesses)
    );
}

#[test]
fn published_converses_fail_on_their_fixtures() {
    for id in TheoremId::converses() {
        let Some(name) = id.refuting_fixture() else {
            continue;
        };
        let r = check_theorem(id, &fixtures::load(name));
        assert_eq!(r.status, Status::Fail, "{id} holds on {name}");
        assert!(!r.witnesses.is_empty());
        assert!(!r.is_breach());
    }
}

#[test]
fn converse_witnesses_match_the_examples() {
    let c = fixtures::load("EX-C");
    let u = c.universe();
    let r = check_theorem(TheoremId::ConvT36h, &c);
    let pair = vec![u.subset(["b"]).unwrap(), u.subset(["c"]).unwrap()];
    assert!(r.witnesses.iter().any(|w| w.subsets == pair));

    let e = fixtures::load("EX-E");
    let u = e.universe();
    let r = check_theorem(TheoremId::ConvTmemB, &e);
    let b = vec![u.subset(["b"]).unwrap()];
    assert!(r.witnesses.iter().any(|w| w.subsets == b));

    let d = fixtures::load("EX-D");
    let r = check_theorem(TheoremId::IndepTau, &d);
    assert_eq!(r.status, Status::Fail);
}

#[test]
fn first_counterexamples_at_three_points() {
    let e = fixtures::load("EX-E");
    let f = fixtures::load("EX-F");
    let r = find_counterexample(TheoremId::ConvTextA, 3, Strategy::Exhaustive).unwrap();
    assert_eq!(r.status, Status::Fail);
    let w = &r.witnesses[0];
    assert_eq!(&w.topology, e.topology().opens());
    assert_eq!(&w.primal, e.primal().members());

    let r = find_counterexample(TheoremId::ConvTextB, 3, Strategy::Exhaustive).unwrap();
    let w = &r.witnesses[0];
    assert_eq!(&w.topology, f.topology().opens());
    assert_eq!(&w.primal, f.primal().members());
}

#[test]
fn every_converse_is_refuted_somewhere_small() {
    for id in TheoremId::converses() {
        let r = find_counterexample(id, 3, Strategy::Exhaustive).unwrap();
        assert_eq!(r.status, Status::Fail, "{id} survives every 3-point space");
        assert_eq!(r.spaces_failed, 1);
        assert!(r.spaces_checked <= 232);
    }
}

#[test]
fn counterexample_search_rejects_direct_ids() {
    assert_eq!(
        find_counterexample(TheoremId::T36g, 2, Strategy::Exhaustive),
        Err(TheoremError::NotAConverse(TheoremId::T36g))
    );
}

#[test]
fn check_space_keeps_id_order() {
    let ids = [TheoremId::Tbase, TheoremId::ConvExt, TheoremId::InfoCl];
    let reports = check_space(&fixtures::load("EX-A"), &ids);
    let got: Vec<_> = reports.iter().map(|r| r.theorem).collect();
    assert_eq!(got, ids);
    assert!(reports[0].passed());
    assert!(!reports[1].passed());
    assert_eq!(reports[2].theorem.kind(), TheoremKind::Informational);
    assert!(!reports[2].is_breach());
}

#[test]
fn catalog_examples() {
    assert!(check_theorem(TheoremId::T36g, &fixtures::load("EX-C")).passed());
    assert!(sweep(TheoremId::Tbase, 2, Strategy::Exhaustive)
        .unwrap()
        .passed());
    let r = sweep(TheoremId::T36a, 3, Strategy::Exhaustive).unwrap();
    assert!(r.passed());
    assert_eq!(r.spaces_checked, 29 * 8);
}

#[test]
fn membership_converse_search() {
    // In canonical order the empty set, open and a primal member on the
    // indiscrete space, comes first.
    let u = primaltop::Universe::letters(3).unwrap();
    let r = find_counterexample(TheoremId::ConvTmemB, 3, Strategy::Exhaustive).unwrap();
    assert_eq!(r.status, Status::Fail);
    let w = &r.witnesses[0];
    assert_eq!(w.topology.len(), 2);
    assert_eq!(w.subsets, [u.empty()]);

    let e = fixtures::load("EX-E");
    let r = check_theorem(TheoremId::ConvTmemB, &e);
    let u = e.universe();
    assert!(r
        .witnesses
        .iter()
        .any(|w| w.subsets == [u.subset(["b"]).unwrap()]));
}

#[test]
fn independence_witness_on_ex_d() {
    let d = fixtures::load("EX-D");
    let u = d.universe();
    let r = check_theorem(TheoremId::IndepTau, &d);
    assert_eq!(r.witnesses.len(), 1);
    assert_eq!(
        r.witnesses[0].subsets,
        [u.subset(["b"]).unwrap(), u.subset(["c"]).unwrap()]
    );
}

#[test]
fn four_point_primals() {
    let u = primaltop::Universe::letters(4).unwrap();
    assert_eq!(primaltop::enumerate_primals(&u).unwrap().len(), 16);
    let r = primaltop::primal_characterizations_agree(4).unwrap();
    assert!(r.passed());
    assert!(primaltop::primal_characterizations_agree(5).is_err());
}
