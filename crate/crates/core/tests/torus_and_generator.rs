use upos::harness::{reduce_pos_to_lrs, PolyInstance};
use upos::kernel::{ratio, Rational};
use upos::torus::{decide_nonneg, eval_at_torsion, Stage, TorusOutcome, TorusProblem};
use upos::{decide_ultimate_positivity, AlgebraicNumber, Budgets, Outcome};

fn q(n: i64, d: i64) -> AlgebraicNumber {
    AlgebraicNumber::from_rational(ratio(n, d))
}

// f = b + cos φ + cos 2φ
fn two_harmonics(b: Rational) -> TorusProblem {
    TorusProblem::with_relations(AlgebraicNumber::from_rational(b), vec![q(1, 2), q(1, 2)], &[vec![2, -1]]).unwrap()
}

#[test]
fn full_torus_minimum_is_b_minus_twice_the_moduli() {
    // [DERIVED] min = b - 2(|1/2| + |3/10 + 2i/5|) = b - 1 - 1 = b - 2
    let c2 = AlgebraicNumber::gaussian(ratio(3, 10), ratio(2, 5));
    let p = |b: i64, d: i64| TorusProblem::full(q(b, d), vec![q(1, 2), c2.clone()]).unwrap();
    let v = decide_nonneg(&p(2, 1), &Budgets::default()).unwrap();
    assert_eq!((v.outcome, v.stage), (TorusOutcome::Nonneg, Stage::FullTorus));
    assert!(v.minimum.unwrap().equals(&q(0, 1)));
    let v = decide_nonneg(&p(199, 100), &Budgets::default()).unwrap();
    assert_eq!(v.outcome, TorusOutcome::NegWitness);
}

#[test]
fn one_parameter_threshold() {
    // [DERIVED] cos φ + cos 2φ = 2t² + t - 1 with t = cos φ, minimal at t = -1/4: -9/8
    let b = Budgets::default();
    assert_eq!(decide_nonneg(&two_harmonics(ratio(9, 8)), &b).unwrap().outcome, TorusOutcome::Nonneg);
    let v = decide_nonneg(&two_harmonics(ratio(1, 1)), &b).unwrap();
    assert_eq!((v.outcome, v.stage), (TorusOutcome::NegWitness, Stage::OneParameter));
    if let Some(w) = v.witness {
        assert_eq!(w.value.sign().unwrap(), -1);
        let p = two_harmonics(ratio(1, 1));
        assert!(w.value.equals(&eval_at_torsion(&p, &w.angles).unwrap()));
    }
}

#[test]
fn torsion_values() {
    let p = two_harmonics(ratio(1, 1));
    // [DERIVED] φ = 1/2: 1 - 1 + 1 = 1; φ = 1/3: 1 - 1/2 - 1/2 = 0; φ = 1/4: 1 + 0 - 1 = 0
    for (t, want) in [((1, 2), q(1, 1)), ((1, 3), q(0, 1)), ((1, 4), q(0, 1))] {
        let got = eval_at_torsion(&p, &[ratio(t.0, t.1), ratio(2 * t.0, t.1)]).unwrap();
        assert!(got.equals(&want), "{t:?}: {}", got.describe());
    }
}

#[test]
fn generated_orders() {
    // [DERIVED] y² has roots λ², λ̄², 1, so x - 1/4 gives order 3; x1 x2 gives 3·3 = 9
    let f = PolyInstance::new(1, vec![(ratio(1, 1), vec![1]), (ratio(-1, 4), vec![0])]).unwrap();
    assert_eq!(reduce_pos_to_lrs(&f).unwrap().order(), 3);
    let g = PolyInstance::new(2, vec![(ratio(1, 1), vec![1, 1])]).unwrap();
    assert_eq!(reduce_pos_to_lrs(&g).unwrap().order(), 9);
}

#[test]
fn generated_sign_follows_the_polynomial() {
    let b = Budgets::default();
    // x + 1/4 > 0 on [0, 1]
    let f = PolyInstance::new(1, vec![(ratio(1, 1), vec![1]), (ratio(1, 4), vec![0])]).unwrap();
    assert_eq!(decide_ultimate_positivity(&reduce_pos_to_lrs(&f).unwrap(), &b).unwrap().outcome, Outcome::UltimatelyPositive);
    // 1/2 - x < 0 near x = 1
    let g = PolyInstance::new(1, vec![(ratio(-1, 1), vec![1]), (ratio(1, 2), vec![0])]).unwrap();
    assert_eq!(decide_ultimate_positivity(&reduce_pos_to_lrs(&g).unwrap(), &b).unwrap().outcome, Outcome::NotUltimatelyPositive);
}
