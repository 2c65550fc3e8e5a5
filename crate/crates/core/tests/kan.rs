use std::collections::{BTreeMap, BTreeSet};

use semikan::complex::SemiSimplicialSetBuilder;
use semikan::corpus::{discrete, external_product, nerve, nerve_simplex, point, product_simplex, FiniteGroupTable};
use semikan::kan::{
    check_kan, check_multi_kan, compatible_horns, fill_horn, fill_multi_horn, for_each_compatible_multi_horn,
    make_horn, make_multi_horn, MultiHorn,
};
use semikan::{AnyHorn, Error, MultiIndex, MultiSemiSimplicialSet, SemiSimplicialSet, SimplexId};

fn z2(truncation: usize) -> (FiniteGroupTable, SemiSimplicialSet) {
    let g = FiniteGroupTable::cyclic(2);
    let x = nerve(&g, truncation).complex;
    (g, x)
}

/// Brute force: every simplex of the target level, keep those with matching faces.
fn fillers(x: &SemiSimplicialSet, t: usize, faces: &[(usize, SimplexId)]) -> Vec<SimplexId> {
    x.level(t).iter().copied().filter(|&s| faces.iter().all(|&(i, f)| x.face(s, i) == f)).collect()
}

/// Counts compatible horns by walking the full product of the level, slot by slot.
fn brute_horn_count(x: &SemiSimplicialSet, t: usize) -> usize {
    let level = x.level(t - 1);
    let mut count = 0;
    for k in 0..=t {
        let slots: Vec<usize> = (0..=t).filter(|&i| i != k).collect();
        let total = level.len().pow(slots.len() as u32);
        for code in 0..total {
            let mut c = code;
            let mut faces = vec![None; t + 1];
            for &i in &slots {
                faces[i] = Some(level[c % level.len()]);
                c /= level.len();
            }
            let ok = (0..=t).all(|i| {
                (i + 1..=t).all(|j| {
                    if i == k || j == k || t < 2 {
                        return true;
                    }
                    x.face(faces[j].unwrap(), i) == x.face(faces[i].unwrap(), j - 1)
                })
            });
            count += usize::from(ok);
        }
    }
    count
}

#[test]
fn vacuous_and_checked_horns_in_z2_nerve() {
    let (g, x) = z2(3);
    let star = nerve_simplex(&g, 3, &[]);
    let gen = nerve_simplex(&g, 3, &[1]);
    let h = make_horn(&x, 1, 0, &[(1, star)]).unwrap();
    assert_eq!(h.to_string(), format!("horn 1 missing 0 ; 1:{star}"));
    let h = make_horn(&x, 2, 1, &[(0, gen), (2, gen)]).unwrap();
    assert_eq!(x.face(gen, 0), x.face(gen, 1));
    assert_eq!(h.face(0), Some(gen));
}

#[test]
fn incompatible_pair_is_named() {
    let (g, x) = z2(3);
    let ee = nerve_simplex(&g, 3, &[0, 0]);
    let ge = nerve_simplex(&g, 3, &[1, 0]);
    // pairs (0,1) and (1,2) agree, but d_0 x_2 = e while d_1 x_0 = g
    let err = make_horn(&x, 3, 3, &[(0, ge), (1, ee), (2, ee)]).unwrap_err();
    assert!(matches!(err, Error::IncompatibleHorn { i: 0, j: 2 }), "{err}");
}

#[test]
fn malformed_horns_are_rejected() {
    let (g, x) = z2(3);
    let star = nerve_simplex(&g, 3, &[]);
    let e = nerve_simplex(&g, 3, &[0]);
    assert!(matches!(make_horn(&x, 1, 0, &[]), Err(Error::MalformedHorn(_))));
    assert!(matches!(make_horn(&x, 1, 0, &[(0, star)]), Err(Error::MalformedHorn(_))));
    assert!(matches!(make_horn(&x, 1, 0, &[(1, e)]), Err(Error::MalformedHorn(_))));
    assert!(matches!(make_horn(&x, 0, 0, &[]), Err(Error::MalformedHorn(_))));
}

#[test]
fn fill_picks_minimal_id() {
    let (g, x) = z2(3);
    let star = nerve_simplex(&g, 3, &[]);
    let e = nerve_simplex(&g, 3, &[0]);
    let h = make_horn(&x, 1, 0, &[(1, star)]).unwrap();
    let brute = fillers(&x, 1, &[(1, star)]);
    assert_eq!(brute.len(), 2);
    assert_eq!(fill_horn(&x, &h).unwrap(), e);
    assert_eq!(brute[0], e);

    let h = make_horn(&x, 2, 0, &[(1, e), (2, e)]).unwrap();
    let ee = nerve_simplex(&g, 3, &[0, 0]);
    assert_eq!(fillers(&x, 2, &[(1, e), (2, e)]), vec![ee]);
    assert_eq!(fill_horn(&x, &h).unwrap(), ee);
    assert_eq!(fill_horn(&x, &h).unwrap(), fill_horn(&x, &h).unwrap());
}

#[test]
fn empty_level_gives_no_filler() {
    let x = discrete(2, 1);
    let a = x.level(0)[0];
    let h = make_horn(&x, 1, 0, &[(1, a)]).unwrap();
    match fill_horn(&x, &h) {
        Err(Error::NoFiller { stage: None, horn: AnyHorn::Single(got) }) => assert_eq!(got, h),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn fill_above_truncation_is_an_error() {
    let (_, x) = z2(1);
    let h = make_horn(&x, 1, 0, &[(1, x.level(0)[0])]).unwrap();
    assert!(fill_horn(&x, &h).is_ok());
    assert!(matches!(check_kan(&x, 2), Err(Error::BeyondTruncation { requested: 2, truncation: 1 })));
}

#[test]
fn z2_nerve_is_kan_to_depth_three() {
    let (_, x) = z2(4);
    assert_eq!(check_kan(&x, 3).unwrap(), Vec::new());
}

#[test]
fn z3_nerve_is_kan_below_truncation() {
    let x = nerve(&FiniteGroupTable::cyclic(3), 3).complex;
    assert!(check_kan(&x, 2).unwrap().is_empty());
}

#[test]
fn discrete_complex_fails_at_depth_one() {
    let x = discrete(2, 1);
    let a = x.level(0)[0];
    let bad = check_kan(&x, 1).unwrap();
    let wanted = make_horn(&x, 1, 0, &[(1, a)]).unwrap();
    assert!(bad.contains(&wanted));
    assert_eq!(bad.len(), 4);
}

#[test]
fn single_loop_is_kan_at_depth_one() {
    let mut b = SemiSimplicialSetBuilder::new(1);
    let v = b.push(0, &[]).unwrap();
    b.push(1, &[v, v]).unwrap();
    let x = b.build().unwrap();
    assert!(check_kan(&x, 1).unwrap().is_empty());
}

#[test]
fn horn_enumeration_matches_brute_force_on_corpus() {
    let samples =
        [z2(2).1, nerve(&FiniteGroupTable::cyclic(3), 2).complex, discrete(3, 2), semikan::corpus::circle(2), point(2)];
    for x in &samples {
        for t in 1..=2 {
            assert_eq!(compatible_horns(x, t).len(), brute_horn_count(x, t));
        }
    }
    // one vertex for the single given face, two choices of missing index
    assert_eq!(compatible_horns(&z2(2).1, 1).len(), 2);
}

#[test]
fn kan_check_empty_means_every_horn_fills() {
    let (_, x) = z2(3);
    assert!(check_kan(&x, 3).unwrap().is_empty());
    for t in 1..=3 {
        for h in compatible_horns(&x, t) {
            let f = fill_horn(&x, &h).unwrap();
            assert!(h.faces().all(|(i, y)| x.face(f, i) == y));
        }
    }
}

fn z2_square(truncation: usize) -> (FiniteGroupTable, SemiSimplicialSet, MultiSemiSimplicialSet) {
    let (g, x) = z2(truncation);
    let p = external_product(&x, &x, Some(truncation)).unwrap();
    (g, x, p)
}

#[test]
fn multi_fill_examples() {
    let (g, x, p) = z2_square(3);
    let at = |a: &[usize], b: &[usize]| {
        product_simplex(&p, &x, &x, nerve_simplex(&g, 3, a), nerve_simplex(&g, 3, b)).unwrap()
    };
    let h = make_multi_horn(&p, MultiIndex::new(vec![1, 0]), (0, 0), &[((0, 1), at(&[], &[]))]).unwrap();
    assert_eq!(h.to_string(), format!("multihorn 1 0 missing 1 0 ; 1:1:{}", at(&[], &[])));
    assert_eq!(fill_multi_horn(&p, &h).unwrap(), at(&[0], &[]));

    let ee = at(&[0], &[0]);
    let faces: Vec<_> = [(0, 1), (1, 0), (1, 1)].iter().map(|&(q, j)| ((q, j), p.face(ee, q, j))).collect();
    let h = make_multi_horn(&p, MultiIndex::new(vec![1, 1]), (0, 0), &faces).unwrap();
    assert_eq!(fill_multi_horn(&p, &h).unwrap(), ee);
}

#[test]
fn multi_horn_cross_incompatibility_is_named() {
    let (g, x, p) = z2_square(3);
    let at = |a: &[usize], b: &[usize]| {
        product_simplex(&p, &x, &x, nerve_simplex(&g, 3, a), nerve_simplex(&g, 3, b)).unwrap()
    };
    // the faces of ((e,e), g) at (2,1), except that x^2_0 comes from ((g,e), g)
    let t = at(&[0, 0], &[1]);
    let mut faces: Vec<_> = [(0, 1), (0, 2), (1, 1)].iter().map(|&(q, j)| ((q, j), p.face(t, q, j))).collect();
    faces.push(((1, 0), p.face(at(&[1, 0], &[1]), 1, 0)));
    let err = make_multi_horn(&p, MultiIndex::new(vec![2, 1]), (0, 0), &faces).unwrap_err();
    assert!(matches!(err, Error::IncompatibleMultiHorn { .. }), "{err}");
    // a face slot at a zero axis entry does not exist
    assert!(make_multi_horn(&p, MultiIndex::new(vec![1, 0]), (1, 0), &[]).is_err());
}

#[test]
fn emptied_level_blocks_multi_fill() {
    let (g, x) = z2(3);
    let p = external_product(&x, &point(3), None).unwrap();
    let star = product_simplex(&p, &x, &point(3), nerve_simplex(&g, 3, &[]), SimplexId(0)).unwrap();
    let h = make_multi_horn(&p, MultiIndex::new(vec![0, 1]), (1, 0), &[((1, 1), star)]).unwrap();
    assert!(matches!(fill_multi_horn(&p, &h), Err(Error::NoFiller { horn: AnyHorn::Multi(_), .. })));
    assert!(!check_multi_kan(&p, 2).unwrap().is_empty());
}

/// In a product every face along axis `q` keeps the other factor, so a horn
/// prescribing a full boundary along `q` with two different other-factor
/// components cannot be filled. These are the only failures.
#[test]
fn product_of_nerves_fails_only_on_split_boundaries() {
    let (_, x, p) = z2_square(3);
    let mut parts = BTreeMap::new();
    for (_, a) in x.iter() {
        for (_, b) in x.iter() {
            if let Some(id) = product_simplex(&p, &x, &x, a, b) {
                parts.insert(id, (a, b));
            }
        }
    }
    let split = |h: &MultiHorn| {
        (0..2).filter(|&q| q != h.missing().0 && h.target().get(q) > 0).any(|q| {
            let kept: BTreeSet<SimplexId> = h
                .faces()
                .filter(|((axis, _), _)| *axis == q)
                .map(|(_, f)| if q == 0 { parts[&f].1 } else { parts[&f].0 })
                .collect();
            kept.len() > 1
        })
    };
    let mut expected = Vec::new();
    for m in 1..=2 {
        for n in MultiIndex::all_with_total(2, m) {
            for r in (0..2).filter(|&r| n.get(r) > 0) {
                for k in 0..=n.get(r) {
                    for_each_compatible_multi_horn(&p, &n, (r, k), |h| {
                        if split(h) {
                            expected.push(h.clone());
                        }
                    });
                }
            }
        }
    }
    expected.sort();
    let bad = check_multi_kan(&p, 2).unwrap();
    assert_eq!(bad, expected);
    assert_eq!(bad.len(), 16);
    assert!(bad.iter().all(|h| h.target() == &MultiIndex::new(vec![1, 1])));
}

#[test]
fn one_axis_wrapper_matches_single_check() {
    let (_, x) = z2(3);
    let w = MultiSemiSimplicialSet::from_single(&x);
    assert!(check_multi_kan(&w, 3).unwrap().is_empty());
    let d = discrete(2, 1);
    assert_eq!(
        check_multi_kan(&MultiSemiSimplicialSet::from_single(&d), 1).unwrap().len(),
        check_kan(&d, 1).unwrap().len()
    );
}
