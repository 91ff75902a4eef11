//! Modes of vacuum descendants acting on highest-weight modules.
//!
//! A state `L(-n1)...L(-nk)1` is rewritten with the `-1` product
//! `P(x, y) = x_{-1} y` and the leaves `L(-k)1`, `k >= 2`. Its modes follow
//! from two rules:
//!
//! * `(L(-k)1)_m = (-1)^k binom(m, k-2) L(m-k+1)`, from `L(-k)1 = D^{k-2} w / (k-2)!`
//!   and `(Dx)_m = -m x_{m-1}`;
//! * `P(x,y)_m = sum_{i<0} x_i y_{m-1-i} + sum_{i>=0} y_{m-1-i} x_i`.
//!
//! `u_n` lowers degree by `n + 1 - deg u`, so `w_m = L(m-1)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeffring::{reduce_mod_p, Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::virasoro::{Partition, VermaModule, VermaVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// The vacuum `1`.
    Vacuum,
    /// `L(-k)1` for `k >= 2`.
    Leaf(u32),
    /// `x_{-1} y`.
    Product(Box<Term>, Box<Term>),
}

impl Term {
    pub fn degree(&self) -> u32 {
        match self {
            Term::Vacuum => 0,
            Term::Leaf(k) => *k,
            Term::Product(x, y) => x.degree() + y.degree(),
        }
    }

    fn product(x: Term, y: Term) -> Term {
        match y {
            Term::Vacuum => x,
            y => Term::Product(Box::new(x), Box::new(y)),
        }
    }

    /// `L(-1)` applied to the term, as integer combination of terms.
    fn derivative(&self) -> Vec<(Term, i64)> {
        match self {
            Term::Vacuum => Vec::new(),
            Term::Leaf(k) => vec![(Term::Leaf(k + 1), *k as i64 - 1)],
            Term::Product(x, y) => {
                let mut out: Vec<(Term, i64)> = x
                    .derivative()
                    .into_iter()
                    .map(|(dx, c)| (Term::product(dx, (**y).clone()), c))
                    .collect();
                out.extend(
                    y.derivative()
                        .into_iter()
                        .map(|(dy, c)| (Term::product((**x).clone(), dy), c)),
                );
                out
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Vacuum => write!(f, "1"),
            Term::Leaf(2) => write!(f, "w"),
            Term::Leaf(k) => write!(f, "D^{}(w)/{}!", k - 2, k - 2),
            Term::Product(x, y) => write!(f, "P({x}, {y})"),
        }
    }
}

/// A linear combination of [`Term`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateWord {
    terms: Vec<(Term, Scalar)>,
}

impl StateWord {
    pub fn terms(&self) -> &[(Term, Scalar)] {
        &self.terms
    }

    /// Common degree of the terms.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(t, _)| t.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, term: Term, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        if let Some(slot) = self.terms.iter_mut().find(|(t, _)| *t == term) {
            slot.1 = &slot.1 + &coeff;
            if slot.1.is_zero() {
                self.terms.retain(|(_, c)| !c.is_zero());
            }
        } else {
            self.terms.push((term, coeff));
        }
    }

    /// `c1 * word1 + c2 * word2 + ...` for PBW words given as mode lists.
    pub fn from_words(words: &[(&[i64], Scalar)]) -> Result<StateWord> {
        let mut out = StateWord { terms: Vec::new() };
        for (word, c) in words {
            for (t, d) in build_state(word)?.terms {
                out.push(t, &d * c);
            }
        }
        Ok(out)
    }

    /// The state corresponding to a vector of the vacuum module.
    pub fn from_vacuum_vector(v: &VermaVector) -> Result<StateWord> {
        let mut out = StateWord { terms: Vec::new() };
        for (p, c) in v.terms() {
            let word: Vec<i64> = p.parts().iter().map(|&k| -(k as i64)).collect();
            let state = if word.is_empty() {
                StateWord {
                    terms: vec![(Term::Vacuum, Field::Rational.one())],
                }
            } else {
                build_state(&word)?
            };
            for (t, d) in state.terms {
                let d = coerce(&d, c.ring())?;
                out.push(t, &d * c);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for StateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {t}")?;
        }
        Ok(())
    }
}

/// Normal form of `L(n1)...L(nk)1`; every `n_i <= -1`.
pub fn build_state(word: &[i64]) -> Result<StateWord> {
    if word.is_empty() {
        return Err(Error::Invalid("empty state word".into()));
    }
    if let Some(&n) = word.iter().find(|&&n| n > -1) {
        return Err(Error::Invalid(format!("state words use modes <= -1, got {n}")));
    }
    let q = Field::Rational;
    let mut terms: Vec<(Term, BigInt)> = vec![(Term::Vacuum, BigInt::one())];
    for &n in word.iter().rev() {
        let mut next: Vec<(Term, BigInt)> = Vec::new();
        let mut add = |t: Term, c: BigInt| {
            if let Some(slot) = next.iter_mut().find(|(s, _)| *s == t) {
                slot.1 += c;
            } else {
                next.push((t, c));
            }
        };
        for (t, c) in terms {
            if n == -1 {
                for (dt, k) in t.derivative() {
                    add(dt, &c * k);
                }
            } else {
                add(Term::product(Term::Leaf((-n) as u32), t), c);
            }
        }
        next.retain(|(_, c)| !c.is_zero());
        terms = next;
    }
    Ok(StateWord {
        terms: terms.into_iter().map(|(t, c)| (t, q.from_bigint(&c))).collect(),
    })
}

/// The degree-6 vector `64L(-2)^3 + 93L(-3)^2 - 264L(-4)L(-2) - 108L(-6)` of the vacuum module.
pub fn state_s() -> StateWord {
    let q = Field::Rational;
    StateWord::from_words(&[
        (&[-2, -2, -2], q.from_int(64)),
        (&[-3, -3], q.from_int(93)),
        (&[-4, -2], q.from_int(-264)),
        (&[-6], q.from_int(-108)),
    ])
    .expect("valid words")
}

/// The degree-4 vector `L(-2)^2 - 2L(-4)`, singular in characteristic 7.
pub fn state_u() -> StateWord {
    let q = Field::Rational;
    StateWord::from_words(&[(&[-2, -2], q.one()), (&[-4], q.from_int(-2))]).expect("valid words")
}

/// Moves a scalar into `ring`: rationals reduce mod `p` or lift to polynomials.
pub fn coerce(x: &Scalar, ring: Ring) -> Result<Scalar> {
    if ring.contains(x) {
        return Ok(x.clone());
    }
    let base = match ring {
        Ring::Field(f) | Ring::Polynomial(f) => f,
    };
    let in_base = match (x, base) {
        (Scalar::Rational(_), Field::Prime(p)) => reduce_mod_p(x, p)?,
        (_, _) if x.ring() == Ring::Field(base) => x.clone(),
        _ => return Err(Error::RingMismatch(format!("cannot move {x} into {ring}"))),
    };
    Ok(match ring {
        Ring::Field(_) => in_base,
        Ring::Polynomial(_) => ring.lift(in_base),
    })
}

/// `binom(m, j)` for any integer `m`.
pub fn binomial(m: i64, j: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j as i64 {
        num *= m - i;
        den *= i + 1;
    }
    num / den
}

/// Evaluates state modes on one module, memoizing per `(term, mode, monomial)`.
pub struct ModeEvaluator<'a> {
    module: &'a VermaModule,
    cache: RefCell<HashMap<(Term, i64, Partition), VermaVector>>,
}

impl<'a> ModeEvaluator<'a> {
    pub fn new(module: &'a VermaModule) -> ModeEvaluator<'a> {
        ModeEvaluator {
            module,
            cache: RefCell::default(),
        }
    }

    pub fn module(&self) -> &VermaModule {
        self.module
    }

    /// `state_n target`.
    pub fn apply(&self, state: &StateWord, n: i64, target: &VermaVector) -> Result<VermaVector> {
        let ring = self.module.ring();
        let mut out = VermaVector::zero();
        for (term, c) in &state.terms {
            let c = coerce(c, ring)?;
            out.add_scaled(&self.apply_term(term, n, target), &c);
        }
        Ok(out)
    }

    fn apply_term(&self, term: &Term, m: i64, target: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (p, c) in target.terms() {
            out.add_scaled(&self.term_on_monomial(term, m, p), c);
        }
        out
    }

    fn term_on_monomial(&self, term: &Term, m: i64, p: &Partition) -> VermaVector {
        let d = p.degree() as i64;
        let ring = self.module.ring();
        if d + term.degree() as i64 - m - 1 < 0 {
            return VermaVector::zero();
        }
        let key = (term.clone(), m, p.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        let t = VermaVector::monomial(p.clone(), ring.one());
        let result = match term {
            Term::Vacuum => {
                if m == -1 {
                    t
                } else {
                    VermaVector::zero()
                }
            }
            Term::Leaf(k) => {
                let j = k - 2;
                let mut c = binomial(m, j);
                if j % 2 == 1 {
                    c = -c;
                }
                let c = ring.base().from_bigint(&c);
                let image = self.module.apply_to_monomial(m - *k as i64 + 1, p);
                image.scale(&ring.lift(c))
            }
            Term::Product(x, y) => {
                let (dx, dy) = (x.degree() as i64, y.degree() as i64);
                let mut acc = VermaVector::zero();
                let one = ring.one();
                // i < 0: x_i (y_{m-1-i} t), nonzero only while y_{m-1-i} t has degree >= 0
                for i in (m - d - dy)..0 {
                    let inner = self.term_on_monomial(y, m - 1 - i, p);
                    if !inner.is_zero() {
                        acc.add_scaled(&self.apply_term(x, i, &inner), &one);
                    }
                }
                // i >= 0: y_{m-1-i} (x_i t), nonzero only while x_i t has degree >= 0
                for i in 0..=(d + dx - 1) {
                    let inner = self.term_on_monomial(x, i, p);
                    if !inner.is_zero() {
                        acc.add_scaled(&self.apply_term(y, m - 1 - i, &inner), &one);
                    }
                }
                acc
            }
        };
        self.cache.borrow_mut().insert(key, result.clone());
        result
    }
}

/// `state_n target` in `module`.
pub fn mode_apply(state: &StateWord, n: i64, target: &VermaVector, module: &VermaModule) -> Result<VermaVector> {
    ModeEvaluator::new(module).apply(state, n, target)
}

/// Checks `w_1 = L(0)` on the monomials of degree at most 3.
pub fn convention_self_test(module: &VermaModule) -> bool {
    let omega = build_state(&[-2]).expect("valid word");
    let eval = ModeEvaluator::new(module);
    (0..=3).all(|d| {
        module.basis(d).into_iter().all(|p| {
            let t = VermaVector::monomial(p, module.ring().one());
            eval.apply(&omega, 1, &t).ok() == Some(module.apply_mode(0, &t))
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub mode: i64,
    pub target: Partition,
    pub image: VermaVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AnnihilationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every mode of `state` maps each PBW monomial of degree at most
/// `max_degree` into the radical of the contravariant form, i.e. that the
/// state acts as zero on the irreducible quotient. Modes whose image degree
/// falls outside `0..=max_degree` are skipped.
pub fn verify_annihilation(state: &StateWord, module: &VermaModule, max_degree: u32) -> Result<AnnihilationReport> {
    let k = state
        .degree()
        .ok_or_else(|| Error::Invalid("state must be homogeneous".into()))? as i64;
    let eval = ModeEvaluator::new(module);
    let mut checked = 0;
    let mut violations = Vec::new();
    for d in 0..=max_degree as i64 {
        for p in module.basis(d as u32) {
            let t = VermaVector::monomial(p.clone(), module.ring().one());
            for r in 0..=max_degree as i64 {
                let n = d + k - 1 - r;
                let image = eval.apply(state, n, &t)?;
                checked += 1;
                if !module.gram_matrix(r as u32).annihilates(&image)? {
                    violations.push(Violation {
                        mode: n,
                        target: p.clone(),
                        image,
                    });
                }
            }
        }
    }
    Ok(AnnihilationReport { checked, violations })
}
