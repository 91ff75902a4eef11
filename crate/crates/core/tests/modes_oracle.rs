//! Cross-checks the mode calculus against an independent recursion: the
//! iterate formula
//!
//! (a_p b)_q = sum_i (-1)^i binom(p,i) (a_{p-i} b_{q+i} - (-1)^p b_{p+q-i} a_i)
//!
//! with `a = w`, peeling the leftmost `L(-k) = w_{1-k}` off a PBW word.

use modvir::coeffring::Field;
use modvir::modes::{binomial, build_state, mode_apply, state_s, ModeEvaluator};
use modvir::virasoro::{partitions, ModuleParams, VermaModule, VermaVector};

/// `(L(-k1)...L(-kr)1)_q t` by the iterate formula.
fn oracle(module: &VermaModule, word: &[u32], q: i64, t: &VermaVector) -> VermaVector {
    let Some(d) = t.degree() else {
        let mut out = VermaVector::zero();
        for (p, c) in t.terms() {
            let mono = VermaVector::monomial(p.clone(), module.ring().one());
            out.add_scaled(&oracle(module, word, q, &mono), c);
        }
        return out;
    };
    let deg_word: i64 = word.iter().map(|&k| k as i64).sum();
    if d as i64 + deg_word - q - 1 < 0 {
        return VermaVector::zero();
    }
    let Some((&k, rest)) = word.split_first() else {
        return if q == -1 { t.clone() } else { VermaVector::zero() };
    };
    let ring = module.ring();
    let p = 1 - k as i64;
    let deg_rest: i64 = rest.iter().map(|&k| k as i64).sum();
    let omega = |j: i64, x: &VermaVector| module.apply_mode(j - 1, x);
    let top = (d as i64 + deg_rest - q - 1).max(d as i64 + 1);
    let mut out = VermaVector::zero();
    for i in 0..=top {
        let b = Field::Rational.from_bigint(&binomial(p, i as u32));
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = ring.lift(&b * &Field::Rational.from_int(sign));
        if c.is_zero() {
            continue;
        }
        let first = omega(p - i, &oracle(module, rest, q + i, t));
        let mut second = oracle(module, rest, p + q - i, &omega(i, t));
        if p.rem_euclid(2) == 1 {
            second = second.scale(&ring.from_int(-1));
        }
        out.add_scaled(&(&first - &second), &c);
    }
    out
}

fn generic() -> VermaModule {
    VermaModule::new(ModuleParams::parse("1/2", "h", Field::Rational).unwrap())
}

#[test]
fn pbw_states_agree_with_the_iterate_formula() {
    let m = generic();
    let eval = ModeEvaluator::new(&m);
    for deg in 1..=6 {
        for word in partitions(deg) {
            let modes: Vec<i64> = word.parts().iter().map(|&k| -(k as i64)).collect();
            let state = build_state(&modes).unwrap();
            for td in 0..=2 {
                for tp in partitions(td) {
                    let t = VermaVector::monomial(tp, m.ring().one());
                    for q in (deg as i64 + td as i64 - 4)..=(deg as i64 + td as i64 - 1) {
                        let got = eval.apply(&state, q, &t).unwrap();
                        let want = oracle(&m, word.parts(), q, &t);
                        assert_eq!(got, want, "{word} mode {q} on {t}");
                    }
                }
            }
        }
    }
}

#[test]
fn zero_modes_on_the_highest_weight_vector() {
    let m = generic();
    let v = m.highest_weight_vector();
    for deg in 2..=6 {
        for word in partitions(deg) {
            let modes: Vec<i64> = word.parts().iter().map(|&k| -(k as i64)).collect();
            let got = mode_apply(&build_state(&modes).unwrap(), deg as i64 - 1, &v, &m).unwrap();
            assert_eq!(got, oracle(&m, word.parts(), deg as i64 - 1, &v), "{word}");
        }
    }
}

#[test]
fn s_on_degree_two_agrees_with_the_iterate_formula() {
    let m = generic();
    let q = |n: i64| Field::Rational.from_int(n);
    let target = m.monomial(&[2]).unwrap();
    let mut want = VermaVector::zero();
    for (word, c) in [
        (&[2u32, 2, 2][..], q(64)),
        (&[3, 3], q(93)),
        (&[4, 2], q(-264)),
        (&[6], q(-108)),
    ] {
        want.add_scaled(&oracle(&m, word, 5, &target), &m.ring().lift(c));
    }
    assert_eq!(mode_apply(&state_s(), 5, &target, &m).unwrap(), want);
}
