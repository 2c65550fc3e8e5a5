use semikan::construct::{
    synthesize, synthesize_with, verify_identities, verify_lemmas, SynthesisOptions, Synthesizer,
};
use semikan::corpus::{forget_degeneracies, nerve, nerve_simplex, point, FiniteGroupTable, Nerve};
use semikan::{AnyHorn, Error, Identity, SemiSimplicialSet, SimplexId, Stage};

fn cyclic_nerve(order: usize, truncation: usize) -> (FiniteGroupTable, Nerve) {
    let g = FiniteGroupTable::cyclic(order);
    let n = nerve(&g, truncation);
    (g, n)
}

/// Minimal simplex of degree `t` with the given faces, by scanning the whole level.
fn brute_fill(x: &SemiSimplicialSet, t: usize, faces: &[(usize, SimplexId)]) -> Option<SimplexId> {
    x.level(t).iter().copied().find(|&s| faces.iter().all(|&(i, f)| x.face(s, i) == f))
}

fn debug() -> SynthesisOptions {
    SynthesisOptions { debug_checks: true }
}

#[test]
fn t_of_the_vertex_in_z2_and_z3() {
    for order in [2, 3] {
        let (g, nv) = cyclic_nerve(order, 3);
        let x = &nv.complex;
        let star = nerve_simplex(&g, 3, &[]);
        let y = brute_fill(x, 1, &[(0, star)]).unwrap();
        let expected = brute_fill(x, 2, &[(1, y), (2, y)]).unwrap();
        assert_eq!(y, nerve_simplex(&g, 3, &[0]));
        assert_eq!(expected, nerve_simplex(&g, 3, &[0, 0]));

        let mut engine = Synthesizer::new(x, debug());
        let t = engine.build_t(star, 0).unwrap();
        assert_eq!(t, expected);
        assert_eq!(x.face(t, 1), x.face(t, 2));
        assert_eq!(x.face(x.face(t, 1), 0), star);
        assert_eq!(engine.state().compatibility_checks(), 2);
    }
}

#[test]
fn first_degeneracy_of_the_vertex() {
    let (g, nv) = cyclic_nerve(2, 3);
    let x = &nv.complex;
    let star = nerve_simplex(&g, 3, &[]);
    let e = nerve_simplex(&g, 3, &[0]);
    let mut engine = Synthesizer::new(x, debug());
    let s0 = engine.build_s(star, 0).unwrap();
    assert_eq!(s0, x.face(nerve_simplex(&g, 3, &[0, 0]), 0));
    assert_eq!(s0, e);
    assert_eq!(x.face(s0, 0), star);
    assert_eq!(x.face(s0, 1), star);
    assert_eq!(engine.state().preimages(e).collect::<Vec<_>>(), vec![(0, star)]);
}

#[test]
fn degenerate_edge_takes_the_degenerate_case() {
    let (g, nv) = cyclic_nerve(2, 5);
    let star = nerve_simplex(&g, 5, &[]);
    let e = nerve_simplex(&g, 5, &[0]);
    let mut engine = Synthesizer::new(&nv.complex, debug());
    engine.build_s(star, 0).unwrap();
    for &x in nv.complex.level(1) {
        engine.build_s(x, 0).unwrap();
    }
    let fills = engine.state().compatibility_checks();
    let s1e = engine.build_s(e, 1).unwrap();
    assert_eq!(engine.state().compatibility_checks(), fills);
    assert_eq!(engine.state().t(e, 1), None);
    let st = engine.state();
    assert_eq!(s1e, st.s(st.s(star, 0).unwrap(), 0).unwrap());

    let result = synthesize(&nv.complex, 3).unwrap();
    assert_eq!(result.state.s(e, 1), Some(s1e));
}

#[test]
fn z2_horizon_three_is_clean() {
    let (_, nv) = cyclic_nerve(2, 5);
    let result = synthesize_with(&nv.complex, 3, debug()).unwrap();
    let report = verify_identities(&result.simplicial, Some(result.state.t_table()));
    assert!(report.is_clean(), "{:?}", report.lines());
    for id in [Identity::FaceBelow, Identity::FaceRetract, Identity::FaceAbove, Identity::DegeneracyOrder] {
        assert!(report.checked(id) > 0, "{id:?}");
    }
    for id in [Identity::TFaceBelow, Identity::TFaceAbove, Identity::TMiddle, Identity::TRetract] {
        assert!(report.checked(id) > 0, "{id:?}");
    }
    assert_eq!(result.state.compatibility_checks(), 2 * result.state.t_table().len());
}

#[test]
fn z3_horizon_three_is_clean() {
    let (_, nv) = cyclic_nerve(3, 5);
    let result = synthesize_with(&nv.complex, 3, debug()).unwrap();
    let report = verify_identities(&result.simplicial, Some(result.state.t_table()));
    assert!(report.is_clean(), "{:?}", report.lines());
    assert!(verify_lemmas(&result.simplicial).is_clean());
}

#[test]
fn minimal_headroom_builds_one_entry() {
    let (g, nv) = cyclic_nerve(2, 2);
    let result = synthesize(&nv.complex, 0).unwrap();
    let star = nerve_simplex(&g, 2, &[]);
    let e = nerve_simplex(&g, 2, &[0]);
    let entries: Vec<_> = result.state.s_table().iter().map(|(&k, &v)| (k, v)).collect();
    assert_eq!(entries, vec![((star, 0), e)]);
}

#[test]
fn lone_vertex_fails_at_the_first_fill() {
    let x = point(2);
    match synthesize(&x, 0) {
        Err(Error::NoFiller { stage: Some(Stage::Y), horn: AnyHorn::Single(h) }) => {
            assert_eq!((h.target_degree(), h.missing()), (1, 1));
            assert_eq!(h.faces().collect::<Vec<_>>(), vec![(0, SimplexId(0))]);
            assert_eq!(h.to_string(), "horn 1 missing 1 ; 0:0");
        }
        other => panic!("unexpected {other:?}"),
    }
    let err = synthesize(&x, 0).unwrap_err();
    assert_eq!(err.to_string(), "y-stage: no filler for horn 1 missing 1 ; 0:0");
}

#[test]
fn headroom_and_validity_are_checked_first() {
    let (_, nv) = cyclic_nerve(2, 4);
    assert!(matches!(synthesize(&nv.complex, 3), Err(Error::InsufficientTruncation { horizon: 3, truncation: 4 })));

    let mut b = semikan::complex::SemiSimplicialSetBuilder::new(2);
    let v = b.push(0, &[]).unwrap();
    let w = b.push(0, &[]).unwrap();
    let a = b.push(1, &[v, v]).unwrap();
    let c = b.push(1, &[w, v]).unwrap();
    b.push(2, &[a, a, c]).unwrap();
    let bad = b.build().unwrap();
    assert!(matches!(synthesize(&bad, 0), Err(Error::InvalidComplex(n)) if n > 0));
}

#[test]
fn out_of_order_requests_are_refused() {
    let (g, nv) = cyclic_nerve(2, 4);
    let e = nerve_simplex(&g, 4, &[0]);
    let mut engine = Synthesizer::new(&nv.complex, SynthesisOptions::default());
    assert!(matches!(engine.build_s(e, 0), Err(Error::InductionOrder { .. })));
    let star = nerve_simplex(&g, 4, &[]);
    engine.build_s(star, 0).unwrap();
    assert!(matches!(engine.build_s(e, 1), Err(Error::InductionOrder { .. })));
    assert!(matches!(engine.build_t(e, 2), Err(Error::BadIndex { index: 2, .. })));
    assert!(matches!(engine.build_t(nerve_simplex(&g, 4, &[0, 0, 0]), 0), Err(Error::BeyondTruncation { .. })));
}

#[test]
fn corrupted_entry_is_reported() {
    let (g, nv) = cyclic_nerve(2, 5);
    let result = synthesize(&nv.complex, 3).unwrap();
    let mut broken = result.simplicial.clone();
    let e = nerve_simplex(&g, 5, &[0]);
    let wrong = nerve_simplex(&g, 5, &[1, 1]);
    broken.set_degeneracy(e, 1, wrong);
    let report = verify_identities(&broken, None);
    assert!(!report.is_clean());
    assert!(report.violations_of(Identity::FaceRetract) > 0);
    // d_1 (g,g) = g*g = e still matches; d_2 (g,g) = g does not
    let gen = nerve_simplex(&g, 5, &[1]);
    let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    assert!(lines.contains(&format!("VIOLATION face-retract x={e} i=2 j=1 lhs={gen} rhs={e}")), "{lines:?}");

    let mut t = result.state.t_table().clone();
    let star = nerve_simplex(&g, 5, &[]);
    t.insert((star, 0), nerve_simplex(&g, 5, &[0, 1]));
    let report = verify_identities(&result.simplicial, Some(&t));
    assert_eq!(report.violations_of(Identity::TMiddle), 1);
}

#[test]
fn tables_have_the_right_degrees_and_inverse_index() {
    let (_, nv) = cyclic_nerve(3, 4);
    let result = synthesize(&nv.complex, 2).unwrap();
    let x = &nv.complex;
    let st = &result.state;
    for (&(w, _), &v) in st.s_table() {
        assert_eq!(x.degree(v), x.degree(w).map(|d| d + 1));
        assert!(st.preimages(v).any(|(_, p)| p == w));
    }
    for (&(w, _), &v) in st.t_table() {
        assert_eq!(x.degree(v), x.degree(w).map(|d| d + 2));
    }
    let indexed: usize = x.iter().map(|(_, v)| st.preimages(v).count()).sum();
    assert_eq!(indexed, st.s_table().len());
    for n in 0..=2 {
        for &w in x.level(n) {
            assert!((0..=n).all(|j| st.s(w, j).is_some()));
        }
    }
}

#[test]
fn injectivity_and_shared_images_hold_on_larger_runs() {
    for (order, truncation, horizon) in [(2, 6, 4), (3, 5, 3)] {
        let (_, nv) = cyclic_nerve(order, truncation);
        let result = synthesize(&nv.complex, horizon).unwrap();
        let lemmas = verify_lemmas(&result.simplicial);
        assert!(lemmas.is_clean(), "{:?}", lemmas.lines());
        assert!(lemmas.checked(Identity::Injective) > 0);
        assert!(lemmas.checked(Identity::SharedImage) > 0);
    }
}

#[test]
fn collapsed_degeneracy_breaks_injectivity() {
    let (g, nv) = cyclic_nerve(2, 4);
    let mut s = synthesize(&nv.complex, 2).unwrap().simplicial;
    let e = nerve_simplex(&g, 4, &[0]);
    let gen = nerve_simplex(&g, 4, &[1]);
    let target = s.degeneracy(e, 0).unwrap();
    s.set_degeneracy(gen, 0, target);
    assert!(verify_lemmas(&s).violations_of(Identity::Injective) > 0);
}

#[test]
fn reference_degeneracies_pass_the_verifier() {
    let (_, nv) = cyclic_nerve(3, 4);
    assert!(verify_identities(&nv.reference, None).is_clean());
    assert!(verify_lemmas(&nv.reference).is_clean());
}

#[test]
fn forgetting_then_synthesizing_gives_a_simplicial_set() {
    let (_, nv) = cyclic_nerve(2, 5);
    let bare = forget_degeneracies(&nv.reference);
    assert_eq!(bare, nv.complex);
    let result = synthesize(&bare, 3).unwrap();
    assert!(verify_identities(&result.simplicial, Some(result.state.t_table())).is_clean());
    let agree = result.state.s_table().iter().filter(|(&(x, j), &v)| nv.reference.degeneracy(x, j) == Some(v)).count();
    println!("agreement with inserted identities: {agree} of {}", result.state.s_table().len());
}

#[test]
fn synthesis_is_deterministic() {
    let (_, nv) = cyclic_nerve(3, 4);
    let a = synthesize(&nv.complex, 2).unwrap();
    let b = synthesize(&nv.complex, 2).unwrap();
    assert_eq!(a.state, b.state);
    assert_eq!(a.simplicial.degeneracies(), b.simplicial.degeneracies());
}
