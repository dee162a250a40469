use extremal::counting::count_triangles_oracle;
use extremal::enumeration::binomial;
use extremal::families::FamilySpec;
use extremal::verify::{
    check_conjecture1, check_conjecture2, check_erdos, check_lemma1, check_lemma3,
    check_lovasz_simonovits_bound, check_main, check_mantel, check_turan, lemma3_minimum,
    violates_claim, CheckOptions, ClaimId, Params, VerificationReport,
};
use extremal::Error;

fn opts() -> CheckOptions {
    CheckOptions {
        shards: 5,
        threads: 2,
        ..CheckOptions::default()
    }
}

fn slice(n: usize, m: usize) -> u64 {
    binomial((n * (n - 1) / 2) as u64, m as u64)
}

#[test]
fn space_sizes_match_closed_forms() {
    for n in 4..=7 {
        let q = n * n / 4;
        assert_eq!(check_main(n, &opts()).unwrap().space_size, slice(n, q + 1));
        assert_eq!(
            check_lemma1(n.max(5), &opts()).unwrap().space_size,
            slice(n.max(5), n.max(5) * n.max(5) / 4 + 1)
        );
        let mantel: u64 = (q..=n * (n - 1) / 2).map(|m| slice(n, m)).sum();
        assert_eq!(check_mantel(n, &opts()).unwrap().space_size, mantel);
    }
    assert_eq!(
        check_lemma3(4, 5).unwrap().space_size,
        (1..=4u64)
            .map(|a| (1..=5u64).map(|b| a * b).sum::<u64>())
            .sum::<u64>()
    );
}

#[test]
fn second_conjecture_at_two_one_is_the_main_claim() {
    for n in 4..=7 {
        let main = check_main(n, &opts()).unwrap();
        let conj = check_conjecture2(n, 2, 1, &opts()).unwrap();
        assert_eq!(main.extremal_value, conj.extremal_value, "n={n}");
        assert_eq!(main.witnesses, conj.witnesses, "n={n}");
    }
    let c1 = check_conjecture1(6, 3, &opts()).unwrap();
    assert_eq!(
        c1.extremal_value,
        check_main(6, &opts()).unwrap().extremal_value
    );
}

#[test]
fn small_claims_hold() {
    let r = check_mantel(5, &opts()).unwrap();
    assert!(r.holds);
    assert_eq!(r.witnesses.len(), 1);
    assert_eq!(check_erdos(7, 2, &opts()).unwrap().extremal_value, Some(6));
    assert_eq!(
        check_lovasz_simonovits_bound(6, 2, &opts())
            .unwrap()
            .extremal_value,
        Some(6)
    );
    assert_eq!(
        check_lovasz_simonovits_bound(7, 1, &opts())
            .unwrap()
            .extremal_value,
        Some(3)
    );
    assert!(check_turan(6, 3, &opts()).unwrap().holds);
    assert!(check_main(5, &opts()).unwrap().holds);
    assert_eq!(lemma3_minimum(5, 7), (5, vec![(5, 1)]));
}

#[test]
fn listed_class_missing_at_five_is_only_noted() {
    let r = check_lemma1(5, &opts()).unwrap();
    assert!(r.holds);
    assert!(r
        .notes
        .iter()
        .any(|n| n.contains("kminus:2,3 does not occur")));
}

#[test]
fn out_of_range_parameters() {
    assert!(matches!(check_main(9, &opts()), Err(Error::ClaimRange(_))));
    assert!(matches!(
        check_erdos(8, 4, &opts()),
        Err(Error::ClaimRange(_))
    ));
    assert!(matches!(
        check_lovasz_simonovits_bound(6, 3, &opts()),
        Err(Error::ClaimRange(_))
    ));
    assert!(matches!(
        check_turan(5, 6, &opts()),
        Err(Error::ClaimRange(_))
    ));
    assert!(matches!(
        check_conjecture2(8, 2, 2, &opts()),
        Err(Error::ClaimRange(_))
    ));
    assert!(matches!(
        check_lemma1(4, &opts()),
        Err(Error::ClaimRange(_))
    ));
}

#[test]
fn grid_counterexamples_revalidate() {
    let r = check_lemma3(10, 10).unwrap();
    assert_eq!(
        r.counterexamples,
        vec!["A=2,B=2,a=1,b=1,f=2,kind=equality".to_string()]
    );
    r.revalidate().unwrap();
    assert!(VerificationReport::from_json(&r.to_json()).is_ok());
}

#[test]
fn forged_counterexamples_are_rejected() {
    let mut r = check_main(6, &opts()).unwrap();
    // K-minus_{3,3} has tau = 1, so it cannot violate the claim
    let kminus = FamilySpec::KMinus { i: 3, m: 3 }.build().unwrap();
    r.counterexamples.push(kminus.to_graph6().unwrap());
    assert!(matches!(
        VerificationReport::from_json(&r.to_json()),
        Err(Error::Report(_))
    ));

    let mut r = check_lemma3(3, 3).unwrap();
    r.counterexamples.push("A=3,B=3,a=3,b=1,f=3".into());
    assert!(r.revalidate().is_err());
}

#[test]
fn oracle_violation_judgements() {
    let p = Params {
        n: Some(6),
        t: Some(1),
        ..Params::default()
    };
    // a graph with 10 edges and fewer than 3 triangles would break the bound
    let g = FamilySpec::KMinus { i: 3, m: 3 }.build().unwrap();
    assert_eq!(count_triangles_oracle(&g), 3);
    assert!(!violates_claim(ClaimId::Erdos, &p, &g.to_graph6().unwrap()).unwrap());

    // triangle-free but below the edge bound
    let tri_free = FamilySpec::CompleteBipartite { i: 2, m: 4 }
        .build()
        .unwrap();
    assert!(!violates_claim(
        ClaimId::Mantel,
        &Params::n(6),
        &tri_free.to_graph6().unwrap()
    )
    .unwrap());
}

#[test]
fn reports_are_independent_of_sharding() {
    let a = check_conjecture1(
        7,
        4,
        &CheckOptions {
            shards: 1,
            threads: 1,
            ..opts()
        },
    )
    .unwrap();
    let b = check_conjecture1(
        7,
        4,
        &CheckOptions {
            shards: 13,
            threads: 3,
            ..opts()
        },
    )
    .unwrap();
    assert_eq!(
        (
            a.extremal_value,
            &a.witnesses,
            &a.counterexamples,
            a.space_size
        ),
        (
            b.extremal_value,
            &b.witnesses,
            &b.counterexamples,
            b.space_size
        )
    );
}
