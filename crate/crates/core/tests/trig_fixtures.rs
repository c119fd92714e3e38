use riccati_core::qpoly::rat;
use riccati_core::riccati_trig::{gen_extremal_trig, solve_all_trig, trig_closure, TrigRiccatiEq};
use riccati_core::trigring::TrigPoly;

fn t(a0: i64, cos: &[i64], sin: &[i64]) -> TrigPoly {
    TrigPoly::from_i64(a0, cos, sin)
}

fn six_solution_eq() -> TrigRiccatiEq {
    TrigRiccatiEq::new(
        t(0, &[], &[5, 8, 5]),
        TrigPoly::zero(),
        t(2, &[6, 18, 10], &[]),
        t(-1, &[], &[]),
    )
    .unwrap()
}

fn six_solutions() -> Vec<TrigPoly> {
    vec![
        TrigPoly::zero(),
        t(10, &[16, 10], &[]),
        t(1, &[-2, 1], &[0, 3]),
        t(1, &[-2, 1], &[0, -3]),
        t(-3, &[-2, 5], &[-8, -5]),
        t(-3, &[-2, 5], &[8, 5]),
    ]
}

#[test]
fn listed_solutions_certify() {
    let eq = six_solution_eq();
    assert_eq!(eq.degree_bound(), 3);
    for y in six_solutions() {
        assert!(eq.verify_solution(&y), "{y}");
    }
    assert!(!eq.verify_solution(&t(0, &[1], &[])));
}

#[test]
fn solve_finds_exactly_the_six() {
    let set = solve_all_trig(&six_solution_eq(), None).unwrap();
    let mut expected = six_solutions();
    expected.sort_by(|a, b| a.canonical_cmp(b));
    assert_eq!(set.trigs(), expected);
    assert!(set.complete_over_rationals());
}

#[test]
fn closure_from_any_equal_degree_pair() {
    let eq = six_solution_eq();
    let ys = six_solutions();
    for i in 1..6 {
        for j in i + 1..6 {
            let set = trig_closure(&eq, &ys[i], &ys[j]).unwrap();
            assert_eq!(set.len(), 6, "seeds {} and {}", ys[i], ys[j]);
        }
    }
}

#[test]
fn extremal_counts_and_reproduction() {
    for eta in 2..=4usize {
        for k in 1..=2 * eta - 3 {
            let cs: Vec<_> = (1..=k as i64).map(|i| rat(i + 1)).collect();
            let (eq, set) = gen_extremal_trig(eta, &cs, &rat(1), &rat(-1)).unwrap();
            assert_eq!(set.len(), k + 3);
            let solved = solve_all_trig(&eq, None).unwrap();
            assert_eq!(solved.trigs(), set.trigs(), "eta {eta} k {k}");
        }
    }
}
