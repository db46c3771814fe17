mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use nnseq::codec::{format_record, parse_record};
use nnseq::search::{
    canonicalize, enumerate_cases, nn_orbit, search, Checkpoint, EquivalenceOp, Prunes, ReportMode, SearchError,
    SearchKind, SearchSpec, CASE_COUNT,
};
use nnseq::{sum_of_squares_check, verify_quadruple, SeqQuadruple};

fn solutions(kind: SearchKind, order: usize) -> Vec<SeqQuadruple> {
    search(&SearchSpec::new(kind, order)).unwrap().solutions
}

fn plaintexts(qs: &[SeqQuadruple]) -> BTreeSet<String> {
    qs.iter().map(|q| q.plaintext()).collect()
}

#[test]
fn near_normal_matches_brute_force() {
    for s in 1..=4 {
        let ours = solutions(SearchKind::Nn, s);
        assert_eq!(plaintexts(&ours), brute_force(s, true), "NN({s})");
    }
}

#[test]
fn normal_matches_brute_force() {
    for n in 1..=6 {
        let ours = solutions(SearchKind::Ns, n);
        assert_eq!(plaintexts(&ours), brute_force(n, false), "NS({n})");
    }
}

#[test]
fn small_order_existence() {
    for s in [2, 4, 6, 8] {
        let out = search(&SearchSpec::new(SearchKind::Nn, s).mode(ReportMode::First)).unwrap();
        assert_eq!(out.solutions.len(), 1, "NN({s})");
        assert!(verify_quadruple(&out.solutions[0]).unwrap().passed());
    }
    for s in [3, 5, 7] {
        let out = search(&SearchSpec::new(SearchKind::Nn, s).mode(ReportMode::Count)).unwrap();
        assert_eq!(out.count, 0, "NN({s})");
        assert!(out.note.is_some());
    }
    let out = search(&SearchSpec::new(SearchKind::Ns, 6).mode(ReportMode::Count)).unwrap();
    assert_eq!(out.count, 0);
    let out = search(&SearchSpec::new(SearchKind::Ns, 10).mode(ReportMode::First)).unwrap();
    assert_eq!(out.solutions.len(), 1);
}

#[test]
fn emitted_quadruples_verify() {
    for (kind, order) in [
        (SearchKind::Nn, 6),
        (SearchKind::Nn, 8),
        (SearchKind::Ns, 5),
        (SearchKind::Ns, 7),
    ] {
        let out = search(&SearchSpec::new(kind, order)).unwrap();
        assert_eq!(out.count as usize, out.solutions.len());
        for q in &out.solutions {
            assert_eq!(q.kind(), kind.quad_kind());
            assert!(verify_quadruple(q).unwrap().passed());
            let (m, n) = q.shape();
            assert!(sum_of_squares_check(m, n, &q.sums()));
        }
        let texts: Vec<String> = out.solutions.iter().map(|q| q.plaintext()).collect();
        let mut sorted = texts.clone();
        sorted.sort();
        assert_eq!(texts, sorted);
    }
}

#[test]
fn prunes_never_change_the_solution_set() {
    for kind in [SearchKind::Nn, SearchKind::Ns] {
        for order in 1..=6 {
            let reference = plaintexts(&solutions(kind, order));
            for (sos, lag) in [(false, false), (true, false), (false, true)] {
                let spec = SearchSpec::new(kind, order).prunes(Prunes {
                    sum_of_squares: sos,
                    partial_lag: lag,
                });
                let out = search(&spec).unwrap();
                assert_eq!(
                    plaintexts(&out.solutions),
                    reference,
                    "{kind}({order}) sos={sos} lag={lag}"
                );
            }
        }
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let render = |workers: usize| -> String {
        let out = search(&SearchSpec::new(SearchKind::Nn, 8).workers(workers)).unwrap();
        out.solutions.iter().map(format_record).collect::<Vec<_>>().join("\n")
    };
    let one = render(1);
    assert_eq!(one, render(4));
    assert_eq!(one, render(3));
}

#[test]
fn count_mode_agrees() {
    for s in [2, 4, 6] {
        let all = search(&SearchSpec::new(SearchKind::Nn, s)).unwrap();
        let count = search(&SearchSpec::new(SearchKind::Nn, s).mode(ReportMode::Count)).unwrap();
        assert_eq!(count.count, all.count);
        assert!(count.solutions.is_empty());
    }
}

#[test]
fn cases_partition_the_solutions() {
    assert_eq!(enumerate_cases(36).len(), CASE_COUNT);
    for s in [4, 6] {
        let full = plaintexts(&solutions(SearchKind::Nn, s));
        let mut union = BTreeSet::new();
        let mut total = 0;
        for case in enumerate_cases(s) {
            let part = search(&SearchSpec::new(SearchKind::Nn, s).cases(vec![case.id])).unwrap();
            total += part.solutions.len();
            union.extend(plaintexts(&part.solutions));
        }
        assert_eq!(union, full, "s={s}");
        assert_eq!(total, full.len(), "cases overlap at s={s}");
    }
    let cases = enumerate_cases(10);
    for (i, x) in cases.iter().enumerate() {
        for y in &cases[i + 1..] {
            assert!(x.keys.iter().all(|k| !y.contains(k)));
        }
    }
}

#[test]
fn unknown_case_and_large_order_are_rejected() {
    assert!(matches!(
        search(&SearchSpec::new(SearchKind::Nn, 4).cases(vec![13])),
        Err(SearchError::BadCase(13))
    ));
    assert!(matches!(
        search(&SearchSpec::new(SearchKind::Nn, 36)),
        Err(SearchError::OrderTooLarge { .. })
    ));
}

#[test]
fn equivalence_ops_preserve_near_normality() {
    for s in [1, 2, 4, 6] {
        for q in solutions(SearchKind::Nn, s) {
            for op in EquivalenceOp::ALL {
                let image = op.apply(&q);
                let [a, b, c, d] = split_plain(&image.plaintext());
                assert!(is_base(&a, &b, &c, &d), "{op:?} on {}", q.plaintext());
                assert!(verify_quadruple(&image).unwrap().passed());
            }
        }
    }
}

#[test]
fn orbits_partition_and_canonical_form_is_constant() {
    for s in [2, 4] {
        let all = solutions(SearchKind::Nn, s);
        let mut covered: HashSet<SeqQuadruple> = HashSet::new();
        let mut classes = BTreeSet::new();
        for q in &all {
            let orbit = nn_orbit(q).unwrap();
            assert!(orbit.contains(q));
            let members: HashSet<SeqQuadruple> = orbit.iter().cloned().collect();
            let meets = members.iter().any(|m| covered.contains(m));
            assert!(
                !meets || members.iter().all(|m| covered.contains(m)),
                "orbits overlap partially"
            );
            covered.extend(members);

            let c = canonicalize(q).unwrap();
            assert_eq!(canonicalize(&c).unwrap(), c);
            assert_eq!(c.plaintext(), orbit[0].plaintext());
            for m in &orbit {
                assert_eq!(canonicalize(m).unwrap(), c);
            }
            classes.insert(c.plaintext());
        }
        assert_eq!(covered.len(), all.len());
        let reps = search(&SearchSpec::new(SearchKind::Nn, s).classes(true)).unwrap();
        assert_eq!(plaintexts(&reps.solutions), classes);
    }
    let reps = search(&SearchSpec::new(SearchKind::Nn, 2).classes(true)).unwrap();
    assert_eq!(reps.count, 1);
}

#[test]
fn orbit_of_published_nn36_verifies() {
    let q = parse_record(&row_record(5)).unwrap();
    let orbit = nn_orbit(&q).unwrap();
    for m in &orbit {
        assert!(verify_quadruple(m).unwrap().passed());
    }
    let c = canonicalize(&q).unwrap();
    assert_eq!(canonicalize(&c).unwrap(), c);
    assert!(format_record(&c).starts_with("NN 36 0"));
}

#[test]
fn checkpoint_resume_reproduces_the_full_run() {
    let full = search(&SearchSpec::new(SearchKind::Nn, 8)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nn8.ckpt");

    let mut spec = SearchSpec::new(SearchKind::Nn, 8).max_nodes(100);
    let mut rounds = 0;
    let done = loop {
        match search(&spec) {
            Ok(out) => break out,
            Err(SearchError::Budget { partial, checkpoint }) => {
                assert!(partial.count <= full.count);
                checkpoint.save(&path).unwrap();
                let text = std::fs::read_to_string(&path).unwrap();
                let loaded = Checkpoint::load(&path).unwrap();
                assert_eq!(loaded.to_text(), text);
                let next_budget = loaded.stats.nodes + 100;
                spec = SearchSpec::new(SearchKind::Nn, 8).max_nodes(next_budget).resume(loaded);
                rounds += 1;
            }
            Err(e) => panic!("{e}"),
        }
    };
    assert!(rounds >= 2);
    assert_eq!(done.count, full.count);
    assert_eq!(plaintexts(&done.solutions), plaintexts(&full.solutions));
    assert_eq!(done.stats.nodes, full.stats.nodes);
}

#[test]
fn checkpoint_rejects_a_different_spec() {
    let err = search(&SearchSpec::new(SearchKind::Nn, 8).max_nodes(50)).unwrap_err();
    let SearchError::Budget { checkpoint, .. } = err else {
        panic!("expected budget error");
    };
    let other = SearchSpec::new(SearchKind::Nn, 6).resume(*checkpoint);
    assert!(matches!(search(&other), Err(SearchError::Checkpoint(_))));
    assert!(Checkpoint::parse("# nnseq checkpoint\nkind XX\n").is_err());
}
