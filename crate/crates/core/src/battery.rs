//! The verification battery: every published computation and structural
//! claim about `c = 1/2`, re-run against the engine.
//!
//! Checks are grouped by criterion number 1-8 and carry tags for filtering.
//! A check either passes, fails, or only reports a value.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coeffring::{central_coeff, reduce_mod_p};
use crate::coeffring::{factorize, Field, Ring, Scalar};
use crate::error::Result;
use crate::fock::{sector_dims, FockSpace, FockVector, Sector};
use crate::linalg::Matrix;
use crate::modes::{build_state, coerce, mode_apply, state_s, state_u};
use crate::singular::{
    generated_slice, irreducible_dims, is_singular, radical, reduce_vector_mod_p, singular_space, span_dim,
};
use crate::virasoro::{partitions, ModuleParams, Partition, VermaModule, VermaVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported-value",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Where the expected value of a check comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Printed in the source text.
    Published,
    /// Produced by an independent computation (oracle, enumeration, brute force).
    Computed,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::Published => "published",
            Source::Computed => "computed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub tags: Vec<&'static str>,
    pub source: Source,
    pub status: Status,
    pub value: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "singular-vector golden set"),
    (2, "classification identity s_5 v = 64h(h-1/2)(h-1/16)v"),
    (3, "expansions of s_5 L(-2)v and the h = 0 scalar"),
    (4, "characteristic-7 suite"),
    (5, "induction-step determinant -7"),
    (6, "character equalities against Fock sectors"),
    (7, "property suites"),
    (8, "oracle equivalence of irreducible dimensions"),
];

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Status per criterion that has at least one check in the report.
    pub fn criteria(&self) -> Vec<(u8, &'static str, Status)> {
        CRITERIA
            .iter()
            .filter_map(|&(n, title)| {
                let mut checks = self.checks.iter().filter(|c| c.criterion == n).peekable();
                checks.peek()?;
                let failed = checks.any(|c| c.status == Status::Fail);
                Some((n, title, if failed { Status::Fail } else { Status::Pass }))
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "criteria": self.criteria().iter().map(|(n, title, s)| json!({
                "criterion": n, "title": title, "status": s.label(),
            })).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| json!({
                "criterion": c.criterion,
                "name": c.name,
                "tags": c.tags,
                "source": c.source.label(),
                "status": c.status.label(),
                "value": c.value,
                "elapsed_ms": c.elapsed.as_secs_f64() * 1e3,
            })).collect::<Vec<_>>(),
        })
    }
}

struct Outcome {
    status: Status,
    value: String,
}

fn verdict(ok: bool, value: impl Into<String>) -> Outcome {
    Outcome {
        status: if ok { Status::Pass } else { Status::Fail },
        value: value.into(),
    }
}

type Runner = Box<dyn Fn() -> Result<Outcome>>;

struct Entry {
    criterion: u8,
    name: String,
    tags: Vec<&'static str>,
    source: Source,
    run: Runner,
}

fn entry(
    criterion: u8,
    name: impl Into<String>,
    tags: &[&'static str],
    source: Source,
    run: impl Fn() -> Result<Outcome> + 'static,
) -> Entry {
    Entry {
        criterion,
        name: name.into(),
        tags: tags.to_vec(),
        source,
        run: Box::new(run),
    }
}

impl Entry {
    fn matches(&self, filter: &str) -> bool {
        filter.split(',').map(str::trim).filter(|f| !f.is_empty()).any(|f| {
            let f = f.to_ascii_lowercase();
            self.tags.contains(&f.as_str())
                || f == self.criterion.to_string()
                || f == format!("c{}", self.criterion)
                || self.name.to_ascii_lowercase().contains(&f)
        })
    }
}

/// Runs every check, or those matching `only` (comma-separated tags,
/// criterion numbers, or name fragments).
pub fn run(only: Option<&str>) -> VerificationReport {
    let mut checks = Vec::new();
    for s in all_entries() {
        if let Some(filter) = only {
            if !s.matches(filter) {
                continue;
            }
        }
        let start = Instant::now();
        let outcome = (s.run)().unwrap_or_else(|e| Outcome {
            status: Status::Fail,
            value: format!("error: {e}"),
        });
        checks.push(Check {
            criterion: s.criterion,
            name: s.name,
            tags: s.tags,
            source: s.source,
            status: outcome.status,
            value: outcome.value,
            elapsed: start.elapsed(),
        });
    }
    checks.sort_by_key(|c| c.criterion);
    VerificationReport { checks }
}

/// Names of every check with its criterion and tags.
pub fn catalogue() -> Vec<(u8, String, Vec<&'static str>)> {
    all_entries()
        .into_iter()
        .map(|s| (s.criterion, s.name, s.tags))
        .collect()
}

fn all_entries() -> Vec<Entry> {
    let mut out = Vec::new();
    golden_entries(&mut out);
    classification_entries(&mut out);
    expansion_entries(&mut out);
    char7_entries(&mut out);
    determinant_entries(&mut out);
    character_entries(&mut out);
    property_entries(&mut out);
    oracle_entries(&mut out);
    out
}

// ---------------------------------------------------------------- helpers

const Q: Field = Field::Rational;

fn module(h: &str, field: Field) -> Result<VermaModule> {
    Ok(VermaModule::new(ModuleParams::parse("1/2", h, field)?))
}

fn vacuum(field: Field) -> Result<VermaModule> {
    Ok(VermaModule::new(ModuleParams::vacuum(field.parse("1/2")?)))
}

fn vector(field: Field, terms: &[(&[u32], &str)]) -> Result<VermaVector> {
    let mut out = VermaVector::zero();
    for (parts, c) in terms {
        out.add_term(Partition::new(parts.to_vec())?, field.parse(c)?);
    }
    Ok(out)
}

fn s_vector(field: Field) -> Result<VermaVector> {
    let s = vector(
        Q,
        &[(&[2, 2, 2], "64"), (&[3, 3], "93"), (&[4, 2], "-264"), (&[6], "-108")],
    )?;
    match field {
        Field::Rational => Ok(s),
        Field::Prime(p) => reduce_vector_mod_p(&s, p),
    }
}

fn show(vs: &[VermaVector]) -> String {
    let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join("; "))
}

/// Polynomial in the formal weight from coefficients, constant term first.
fn poly(ring: Ring, coeffs: &[&str]) -> Result<Scalar> {
    let h = ring.variable()?;
    let mut acc = ring.zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &h) + &coerce(&Q.parse(c)?, ring)?;
    }
    Ok(acc)
}

fn word(modes: &[i64]) -> Result<crate::modes::StateWord> {
    build_state(modes)
}

/// Degrees in `1..=max` where a singular vector appears that does not lie in
/// the submodule generated by singular vectors of lower degree.
fn generator_degrees(m: &VermaModule, max: u32) -> Result<Vec<u32>> {
    let mut generators = Vec::new();
    let mut degrees = Vec::new();
    for n in 1..=max {
        let basis = singular_space(m, n)?;
        let inherited = generated_slice(m, &generators, n);
        let below = span_dim(m, &inherited, n)?;
        let mut all = inherited;
        all.extend(basis.vectors.iter().cloned());
        if span_dim(m, &all, n)? > below {
            degrees.push(n);
            generators.extend(basis.vectors);
        }
    }
    Ok(degrees)
}

// ------------------------------------------------------------- criterion 1

fn golden_entries(out: &mut Vec<Entry>) {
    type Golden = (&'static str, u32, Vec<(&'static [u32], &'static str)>);
    let golden: [Golden; 5] = [
        ("0", 1, vec![(&[1], "1")]),
        ("1/2", 2, vec![(&[2], "4"), (&[1, 1], "-3")]),
        ("1/2", 3, vec![(&[1, 1, 1], "1"), (&[2, 1], "-3"), (&[3], "3/4")]),
        ("1/16", 2, vec![(&[2], "3"), (&[1, 1], "-4")]),
        // u = -25/12
        (
            "1/16",
            4,
            vec![
                (&[1, 1, 1, 1], "1"),
                (&[2, 1, 1], "-25/6"),
                (&[2, 2], "49/144"),
                (&[3, 1], "11/6"),
                (&[4], "-1/4"),
            ],
        ),
    ];
    for (h, n, terms) in golden {
        out.push(entry(
            1,
            format!("singular vector of V(1/2,{h}) at degree {n}"),
            &["golden"],
            Source::Published,
            move || {
                let m = module(h, Q)?;
                let want = vector(Q, &terms)?.normalized()?;
                let got = singular_space(&m, n)?.vectors;
                Ok(verdict(got == [want.clone()], format!("found {}", show(&got))))
            },
        ));
    }
    out.push(entry(
        1,
        "singular vector s of the vacuum quotient at degree 6",
        &["golden"],
        Source::Published,
        || {
            let m = vacuum(Q)?;
            let want = s_vector(Q)?.normalized()?;
            let got = singular_space(&m, 6)?.vectors;
            Ok(verdict(got == [want], format!("found {}", show(&got))))
        },
    ));
    out.push(entry(
        1,
        "Verma V(1/2,0) degree-6 singular vector projects to s",
        &["golden"],
        Source::Published,
        || {
            let m = module("0", Q)?;
            let got = singular_space(&m, 6)?.vectors;
            let [w] = got.as_slice() else {
                return Ok(verdict(false, format!("expected one vector, found {}", got.len())));
            };
            let mut projected = VermaVector::zero();
            for (p, c) in w.terms() {
                if !p.has_unit_part() {
                    projected.add_term(p.clone(), c.clone());
                }
            }
            let ok = projected.normalized()? == s_vector(Q)?.normalized()?;
            Ok(verdict(ok, format!("projection {projected}")))
        },
    ));
    for (h, want) in [("0", vec![1u32, 6]), ("1/2", vec![2, 3]), ("1/16", vec![2, 4])] {
        out.push(entry(
            1,
            format!("V(1/2,{h}): singular vectors up to degree 8 generated in degrees {want:?}"),
            &["golden"],
            Source::Published,
            move || {
                let degrees = generator_degrees(&module(h, Q)?, 8)?;
                Ok(verdict(
                    degrees == want,
                    format!("new singular vectors at degrees {degrees:?}"),
                ))
            },
        ));
    }
}

// ------------------------------------------------------------- criterion 2

fn classification_entries(out: &mut Vec<Entry>) {
    let cases: [(&'static [i64], &'static str, Vec<&'static str>); 4] = [
        (
            &[-2, -2, -2],
            "(L(-2)^3 1)_5 v = (h^3+6h^2+8h)v",
            vec!["0", "8", "6", "1"],
        ),
        (&[-3, -3], "(L(-3)^2 1)_5 v = (4h^2+6h)v", vec!["0", "6", "4"]),
        (&[-4, -2], "(L(-4)L(-2) 1)_5 v = (3h^2+2h)v", vec!["0", "2", "3"]),
        (&[-6], "(L(-6) 1)_5 v = 5hv", vec!["0", "5"]),
    ];
    for (w, name, coeffs) in cases {
        out.push(entry(2, name, &["classification"], Source::Published, move || {
            let m = module("h", Q)?;
            let v = m.highest_weight_vector();
            let got = mode_apply(&word(w)?, 5, &v, &m)?;
            let want = v.scale(&poly(m.ring(), &coeffs)?);
            Ok(verdict(got == want, got.to_string()))
        }));
    }
    out.push(entry(
        2,
        "s_5 v = 64h(h-1/2)(h-1/16)v",
        &["classification"],
        Source::Published,
        || {
            let m = module("h", Q)?;
            let ring = m.ring();
            let v = m.highest_weight_vector();
            let h = ring.variable()?;
            let shift = |a: &str| -> Result<Scalar> { Ok(&h - &coerce(&Q.parse(a)?, ring)?) };
            let want = &(&(&ring.from_int(64) * &h) * &shift("1/2")?) * &shift("1/16")?;
            let got = mode_apply(&state_s(), 5, &v, &m)?;
            Ok(verdict(got == v.scale(&want), got.to_string()))
        },
    ));
}

// ------------------------------------------------------------- criterion 3

/// `x L(-2)v + y L(-1)^2 v` over the generic module.
fn degree_two(m: &VermaModule, x: Scalar, y: Scalar) -> VermaVector {
    let mut v = VermaVector::zero();
    v.add_term(Partition::new(vec![2]).expect("valid"), x);
    v.add_term(Partition::new(vec![1, 1]).expect("valid"), y);
    let _ = m;
    v
}

fn published_p(ring: Ring) -> Result<Scalar> {
    // (6h+7)(h+1/4) + (h+2)(11h+24) + 18h
    let a = &poly(ring, &["7", "6"])? * &poly(ring, &["1/4", "1"])?;
    let b = &poly(ring, &["2", "1"])? * &poly(ring, &["24", "11"])?;
    Ok(&(&a + &b) + &poly(ring, &["0", "18"])?)
}

fn published_q(ring: Ring) -> Result<Scalar> {
    // 2(h+1/4) + 18h + 54
    poly(ring, &["109/2", "20"])
}

fn published_l4l2(ring: Ring) -> Result<Scalar> {
    // 10(1/4+h) + (h+2)(3h+10)
    Ok(&poly(ring, &["5/2", "10"])? + &(&poly(ring, &["2", "1"])? * &poly(ring, &["10", "3"])?))
}

fn published_f_g(ring: Ring) -> Result<(Scalar, Scalar)> {
    let k = |n: i64| ring.from_int(n);
    let h2 = poly(ring, &["2", "1"])?;
    let l3 = &(&k(4) * &(&h2 * &h2)) + &(&k(6) * &h2);
    let f = &(&(&(&k(64) * &published_p(ring)?) + &(&k(93) * &l3)) - &(&k(264) * &published_l4l2(ring)?))
        - &(&k(540) * &h2);
    let g = &(&(&k(64) * &published_q(ring)?) + &k(93 * 18)) - &k(264 * 21);
    Ok((f, g))
}

fn expansion_entries(out: &mut Vec<Entry>) {
    out.push(entry(
        3,
        "(L(-2)^3 1)_5 L(-2)v = p(h)L(-2)v + q(h)L(-1)^2v",
        &["expansion"],
        Source::Published,
        || {
            let m = module("h", Q)?;
            let ring = m.ring();
            let got = mode_apply(&word(&[-2, -2, -2])?, 5, &m.monomial(&[2])?, &m)?;
            let want = degree_two(&m, published_p(ring)?, published_q(ring)?);
            Ok(verdict(got == want, format!("engine {got}; published {want}")))
        },
    ));
    out.push(entry(
        3,
        "(L(-3)^2 1)_5 L(-2)v = (4(h+2)^2+6(h+2))L(-2)v + 18L(-1)^2v",
        &["expansion"],
        Source::Published,
        || {
            let m = module("h", Q)?;
            let ring = m.ring();
            let got = mode_apply(&word(&[-3, -3])?, 5, &m.monomial(&[2])?, &m)?;
            let want = degree_two(&m, poly(ring, &["28", "22", "4"])?, ring.from_int(18));
            Ok(verdict(got == want, got.to_string()))
        },
    ));
    out.push(entry(
        3,
        "(L(-4)L(-2) 1)_5 L(-2)v = (10(1/4+h)+(h+2)(3h+10))L(-2)v + 21L(-1)^2v",
        &["expansion"],
        Source::Published,
        || {
            let m = module("h", Q)?;
            let ring = m.ring();
            let got = mode_apply(&word(&[-4, -2])?, 5, &m.monomial(&[2])?, &m)?;
            let want = degree_two(&m, published_l4l2(ring)?, ring.from_int(21));
            Ok(verdict(got == want, format!("engine {got}; published {want}")))
        },
    ));
    out.push(entry(
        3,
        "(L(-6) 1)_5 L(-2)v = 5(h+2)L(-2)v",
        &["expansion"],
        Source::Published,
        || {
            let m = module("h", Q)?;
            let ring = m.ring();
            let got = mode_apply(&word(&[-6])?, 5, &m.monomial(&[2])?, &m)?;
            let want = degree_two(&m, poly(ring, &["10", "5"])?, ring.zero());
            Ok(verdict(got == want, got.to_string()))
        },
    ));
    out.push(entry(
        3,
        "s_5 L(-2)v = f(h)L(-2)v + g(h)L(-1)^2v",
        &["expansion"],
        Source::Published,
        || {
            let m = module("h", Q)?;
            let (f, g) = published_f_g(m.ring())?;
            let got = mode_apply(&state_s(), 5, &m.monomial(&[2])?, &m)?;
            let want = degree_two(&m, f, g);
            Ok(verdict(got == want, format!("engine {got}; published {want}")))
        },
    ));
    for (h, x, y) in [("1/2", 4, -3), ("1/16", 3, -4)] {
        out.push(entry(
            3,
            format!(
                "s_5 L(-2)v at h = {h} is a nonzero multiple of ({x}L(-2) - {}L(-1)^2)v",
                -y
            ),
            &["expansion"],
            Source::Published,
            move || {
                let m = module(h, Q)?;
                let got = mode_apply(&state_s(), 5, &m.monomial(&[2])?, &m)?;
                let target = degree_two(&m, Q.from_int(x), Q.from_int(y));
                let ok = !got.is_zero() && got.normalized()? == target.normalized()?;
                Ok(verdict(ok, got.to_string()))
            },
        ));
    }
    out.push(entry(3, "h = 0: scalar k in s_6 L(-2)v = k L(-1)v", &["expansion"], Source::Computed, || {
        let m = module("0", Q)?;
        let target = m.monomial(&[2])?;
        let l1 = m.monomial(&[1])?;
        let coefficient = |w: &crate::modes::StateWord| -> Result<Scalar> {
            let image = mode_apply(w, 6, &target, &m)?;
            let k = image.coeff(&Partition::new(vec![1])?).cloned().unwrap_or_else(|| Q.zero());
            if image != l1.scale(&k) {
                return Err(crate::error::Error::Invalid(format!("unexpected image {image}")));
            }
            Ok(k)
        };
        let parts: Vec<String> = [(&[-2i64, -2, -2][..], "L(-2)^3"), (&[-3, -3], "L(-3)^2"), (&[-4, -2], "L(-4)L(-2)"), (&[-6], "L(-6)")]
            .iter()
            .map(|(w, name)| Ok(format!("({name} 1)_6 L(-2)v = {} L(-1)v", coefficient(&word(w)?)?)))
            .collect::<Result<_>>()?;
        let k = coefficient(&state_s())?;
        let seventh = mode_apply(&state_s(), 7, &target, &m)?;
        let factors = k.as_rational().filter(|r| r.is_integer()).map(|r| format_factorization(r.numer()));
        Ok(Outcome {
            status: Status::Reported,
            value: format!(
                "k = {k}{}; {}; published combination 64(121+3/4)+93*92-264(47+3/4)-108*45 = -1118 = {}; s_7 L(-2)v = {seventh}",
                factors.map(|f| format!(" = {f}")).unwrap_or_default(),
                parts.join(", "),
                format_factorization(&BigInt::from(-1118)),
            ),
        })
    }));
}

fn format_factorization(n: &BigInt) -> String {
    if n == &BigInt::from(0) {
        return "0".into();
    }
    let mut items: Vec<String> = factorize(n)
        .into_iter()
        .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect();
    if n < &BigInt::from(0) {
        items.insert(0, "-1".into());
    }
    if items.is_empty() {
        items.push("1".into());
    }
    items.join(" * ")
}

// ------------------------------------------------------------- criterion 4

fn char7_entries(out: &mut Vec<Entry>) {
    let f7 = Field::Prime(7);
    out.push(entry(
        4,
        "u = (L(-2)^2 - 2L(-4))1 spans the degree-4 singular vectors of the vacuum quotient over F_7",
        &["char7"],
        Source::Published,
        move || {
            let m = vacuum(f7)?;
            let u = vector(f7, &[(&[2, 2], "1"), (&[4], "-2")])?;
            let got = singular_space(&m, 4)?.vectors;
            let ok = is_singular(&m, &u)? && got == [u.normalized()?];
            Ok(verdict(ok, format!("found {}", show(&got))))
        },
    ));
    out.push(entry(
        4,
        "(L(-2) + L(-1)^2)u = s over F_7",
        &["char7"],
        Source::Published,
        move || {
            let m = vacuum(f7)?;
            let u = vector(f7, &[(&[2, 2], "1"), (&[4], "-2")])?;
            let got = &m.apply_mode(-2, &u) + &m.apply_word(&[-1, -1], &u);
            let want = s_vector(f7)?;
            Ok(verdict(got == want, got.to_string()))
        },
    ));
    out.push(entry(
        4,
        "u_3 w = h(h-4)w over F_7",
        &["char7"],
        Source::Published,
        move || {
            let m = module("h", f7)?;
            let v = m.highest_weight_vector();
            let got = mode_apply(&state_u(), 3, &v, &m)?;
            let want = v.scale(&poly(m.ring(), &["0", "-4", "1"])?);
            Ok(verdict(got == want, got.to_string()))
        },
    ));
    out.push(entry(
        4,
        "V(1/2,0) over F_7 has a degree-4 singular vector",
        &["char7"],
        Source::Published,
        move || {
            let got = singular_space(&module("0", f7)?, 4)?.vectors;
            Ok(verdict(got.len() == 1, format!("found {}", show(&got))))
        },
    ));
    out.push(entry(
        4,
        "a(-1/2)a(-7/2) - 3a(-3/2)a(-5/2) is a highest-weight vector over F_7",
        &["char7", "fock"],
        Source::Published,
        move || {
            let space = FockSpace::new(Sector::NS, f7);
            let mut v = space.word(&[-1, -7], f7.one())?;
            v.add_scaled(&space.word(&[-3, -5], f7.one())?, &f7.from_int(-3));
            let found = space.hw_vectors(0, 4)?;
            Ok(verdict(
                space.in_span(&found, &v)?,
                format!(
                    "kernel basis: {}",
                    found.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
                ),
            ))
        },
    ));
    out.push(entry(4, "-a(-15/2) + a(-1/2)a(-3/2)a(-11/2) + a(-1/2)a(-5/2)a(-9/2) + 3a(-3/2)a(-5/2)a(-7/2) is a highest-weight vector over F_7", &["char7", "fock"], Source::Published, move || {
        let space = FockSpace::new(Sector::NS, f7);
        let mut v = space.word(&[-15], -f7.one())?;
        for (w, c) in [(&[-1i64, -3, -11][..], 1), (&[-1, -5, -9], 1), (&[-3, -5, -7], 3)] {
            v.add_scaled(&space.word(w, f7.one())?, &f7.from_int(c));
        }
        let found = space.hw_vectors(1, 7)?;
        Ok(verdict(space.in_span(&found, &v)?, format!("kernel dimension {}", found.len())))
    }));
    out.push(entry(
        4,
        "NS even Fock sector over Q has no degree-4 highest-weight vector",
        &["char7", "fock"],
        Source::Computed,
        || {
            let found = FockSpace::new(Sector::NS, Q).hw_vectors(0, 4)?;
            Ok(verdict(found.is_empty(), format!("kernel dimension {}", found.len())))
        },
    ));
}

// ------------------------------------------------------------- criterion 5

/// Coefficients of `L(-1)a(-5/2)a(-1/2)1` and `L(-2)a(-3/2)a(-1/2)1` on
/// `a(-7/2)a(-1/2)1` and `a(-5/2)a(-3/2)1`.
fn induction_matrix(field: Field) -> Result<Matrix> {
    let space = FockSpace::new(Sector::NS, field);
    let rows = [(-1i64, [-5i64, -1]), (-2, [-3, -1])];
    let cols = [space.word(&[-7, -1], field.one())?, space.word(&[-5, -3], field.one())?];
    let mut data = Vec::new();
    for (n, w) in rows {
        let image = space.apply_virasoro(n, &space.word(&w, field.one())?)?;
        let row = cols
            .iter()
            .map(|c| {
                let (mono, sign) = c.terms().next().expect("monomial");
                image.coeff(mono).map(|x| x * sign).unwrap_or_else(|| field.zero())
            })
            .collect();
        data.push(row);
    }
    Ok(Matrix::from_rows(field, 2, data))
}

fn determinant_entries(out: &mut Vec<Entry>) {
    out.push(entry(
        5,
        "induction-step matrix from the Fock action is [[3,1],[5/2,-3/2]]",
        &["determinant", "fock"],
        Source::Published,
        || {
            let got = induction_matrix(Q)?;
            let want = Matrix::from_rows(
                Q,
                2,
                vec![vec![Q.from_int(3), Q.one()], vec![Q.ratio(5, 2)?, Q.ratio(-3, 2)?]],
            );
            Ok(verdict(
                got == want,
                format!(
                    "{:?}",
                    (0..2)
                        .map(|i| got.row(i).iter().map(ToString::to_string).collect::<Vec<_>>())
                        .collect::<Vec<_>>()
                ),
            ))
        },
    ));
    out.push(entry(
        5,
        "determinant is -7",
        &["determinant"],
        Source::Published,
        || {
            let m = Matrix::from_rows(
                Q,
                2,
                vec![vec![Q.from_int(3), Q.one()], vec![Q.ratio(5, 2)?, Q.ratio(-3, 2)?]],
            );
            let det = m.determinant()?;
            Ok(verdict(det == Q.from_int(-7), det.to_string()))
        },
    ));
    out.push(entry(
        5,
        "induction-step matrix is singular over F_p exactly for p = 7",
        &["determinant", "char7"],
        Source::Published,
        || {
            let mut singular = Vec::new();
            for p in [3u64, 5, 7, 11, 13] {
                if induction_matrix(Field::Prime(p))?.determinant()?.is_zero() {
                    singular.push(p);
                }
            }
            Ok(verdict(singular == [7], format!("singular for p in {singular:?}")))
        },
    ));
}

// ------------------------------------------------------------- criterion 6

const PAIRINGS: [(&str, Sector, u8); 4] = [
    ("0", Sector::NS, 0),
    ("1/2", Sector::NS, 1),
    ("1/16", Sector::Ramond, 0),
    ("1/16", Sector::Ramond, 1),
];

fn fock_start(space: &FockSpace, parity: u8) -> Result<FockVector> {
    let field = space.field();
    match (space.sector(), parity) {
        (_, 0) => Ok(space.vacuum()),
        (Sector::NS, _) => space.word(&[-1], field.one()),
        (Sector::Ramond, _) => space.word(&[0], field.one()),
    }
}

fn character_entries(out: &mut Vec<Entry>) {
    for ch in [0u64, 3, 5, 11, 13] {
        for (h, sector, parity) in PAIRINGS {
            let name = format!("char {ch}, h = {h}: L(1/2,h) = Fock {sector} parity {parity} = Vir-span of its highest-weight vector, degrees <= 10");
            out.push(entry(6, name, &["characters"], Source::Published, move || {
                let field = Field::from_characteristic(ch)?;
                let irr = irreducible_dims(&module(h, field)?, 10)?.irreducible();
                let sec = sector_dims(sector, parity, 10);
                let space = FockSpace::new(sector, field);
                let span = space.vir_span_dims(&fock_start(&space, parity)?, 10)?;
                Ok(verdict(
                    irr == sec && sec == span,
                    format!("irreducible {irr:?}, sector {sec:?}, span {span:?}"),
                ))
            }));
        }
    }
    out.push(entry(
        6,
        "char 7, h = 0: irreducible and Fock NS even dimensions first differ at degree 4",
        &["characters", "char7"],
        Source::Published,
        || {
            let irr = irreducible_dims(&module("0", Field::Prime(7))?, 10)?.irreducible();
            let sec = sector_dims(Sector::NS, 0, 10);
            let first = irr.iter().zip(&sec).position(|(a, b)| a != b);
            Ok(verdict(
                first == Some(4),
                format!("irreducible {irr:?}, sector {sec:?}"),
            ))
        },
    ));
}

// ------------------------------------------------------------- criterion 7

fn fock_basis(space: &FockSpace, max_degree: u32) -> Vec<FockVector> {
    let mut out = Vec::new();
    for parity in 0..2 {
        for d in 0..=max_degree {
            out.extend(space.basis(parity, d).into_iter().map(|m| space.monomial(m)));
        }
    }
    out
}

fn sector_modes(sector: Sector, bound: i64) -> Vec<i64> {
    (-bound..=bound).filter(|&m| sector.admits(m)).collect()
}

fn property_entries(out: &mut Vec<Entry>) {
    out.push(entry(
        7,
        "Virasoro relations on V(1/2,h), degrees <= 8, modes -4..4",
        &["properties", "verma"],
        Source::Computed,
        || {
            let m = module("h", Q)?;
            let ring = m.ring();
            let c = ring.lift(Q.ratio(1, 2)?);
            let mut count = 0;
            for d in 0..=8 {
                for p in partitions(d) {
                    let x = VermaVector::monomial(p, ring.one());
                    for a in -4..=4i64 {
                        for b in -4..=4i64 {
                            let lhs = &m.apply_mode(a, &m.apply_mode(b, &x)) - &m.apply_mode(b, &m.apply_mode(a, &x));
                            let mut rhs = m.apply_mode(a + b, &x).scale(&ring.from_int(a - b));
                            if a + b == 0 {
                                rhs.add_scaled(&x, &(&central_coeff(a, ring) * &c));
                            }
                            if lhs != rhs {
                                return Ok(verdict(false, format!("[L({a}),L({b})] fails on {x}")));
                            }
                            count += 1;
                        }
                    }
                }
            }
            Ok(verdict(true, format!("{count} relations")))
        },
    ));
    for sector in [Sector::NS, Sector::Ramond] {
        out.push(entry(
            7,
            format!("Virasoro relations with c = 1/2 on the {sector} Fock sector, weights <= 8"),
            &["properties", "fock"],
            Source::Computed,
            move || {
                let space = FockSpace::new(sector, Q);
                let mut count = 0;
                for x in fock_basis(&space, 8) {
                    for m in -3..=3i64 {
                        for n in -3..=3i64 {
                            let mut lhs = space.apply_virasoro_word(&[m, n], &x)?;
                            lhs.add_scaled(&space.apply_virasoro_word(&[n, m], &x)?, &Q.from_int(-1));
                            let mut rhs = space.apply_virasoro(m + n, &x)?.scale(&Q.from_int(m - n));
                            if m + n == 0 {
                                rhs.add_scaled(&x, &Q.ratio(m * m * m - m, 24)?);
                            }
                            if lhs != rhs {
                                return Ok(verdict(false, format!("[L({m}),L({n})] fails on {x}")));
                            }
                            count += 1;
                        }
                    }
                }
                Ok(verdict(true, format!("{count} relations")))
            },
        ));
        out.push(entry(
            7,
            format!("fermion anticommutation on the {sector} sector"),
            &["properties", "fock"],
            Source::Computed,
            move || {
                let space = FockSpace::new(sector, Q);
                let ms = sector_modes(sector, 9);
                let mut count = 0;
                for x in fock_basis(&space, 5) {
                    for &a in &ms {
                        for &b in &ms {
                            let mut lhs = space.apply_fermion(a, &space.apply_fermion(b, &x)?)?;
                            lhs.add_scaled(&space.apply_fermion(b, &space.apply_fermion(a, &x)?)?, &Q.one());
                            let want = if a + b == 0 {
                                x.clone()
                            } else {
                                FockVector::zero(sector)
                            };
                            if lhs != want {
                                return Ok(verdict(false, format!("a({a}/2), a({b}/2) on {x}")));
                            }
                            count += 1;
                        }
                    }
                }
                Ok(verdict(true, format!("{count} relations")))
            },
        ));
        out.push(entry(
            7,
            format!("[L(p), a(q)] = -(q + p/2)a(p+q) on the {sector} sector"),
            &["properties", "fock"],
            Source::Published,
            move || {
                let space = FockSpace::new(sector, Q);
                let mut count = 0;
                for x in fock_basis(&space, 5) {
                    for p in -3..=3i64 {
                        for qq in sector_modes(sector, 7) {
                            let mut lhs = space.apply_virasoro(p, &space.apply_fermion(qq, &x)?)?;
                            lhs.add_scaled(
                                &space.apply_fermion(qq, &space.apply_virasoro(p, &x)?)?,
                                &Q.from_int(-1),
                            );
                            let rhs = space.apply_fermion(2 * p + qq, &x)?.scale(&Q.ratio(-(qq + p), 2)?);
                            if lhs != rhs {
                                return Ok(verdict(false, format!("[L({p}), a({qq}/2)] on {x}")));
                            }
                            count += 1;
                        }
                    }
                }
                Ok(verdict(true, format!("{count} relations")))
            },
        ));
        out.push(entry(
            7,
            format!("contravariance (L(n)u, v) = (u, L(-n)v) on the {sector} sector"),
            &["properties", "fock"],
            Source::Published,
            move || {
                let space = FockSpace::new(sector, Q);
                let basis = fock_basis(&space, 4);
                let mut count = 0;
                for u in &basis {
                    for v in &basis {
                        for n in -4..=4i64 {
                            let lhs = space.form(&space.apply_virasoro(n, u)?, v)?;
                            let rhs = space.form(u, &space.apply_virasoro(-n, v)?)?;
                            if lhs != rhs {
                                return Ok(verdict(false, format!("L({n}) between {u} and {v}")));
                            }
                            count += 1;
                        }
                    }
                }
                Ok(verdict(true, format!("{count} pairs")))
            },
        ));
    }
    out.push(entry(
        7,
        "sigma intertwines a(s)a(t) for s > t and the Virasoro action",
        &["properties", "fock"],
        Source::Published,
        || {
            let space = FockSpace::new(Sector::Ramond, Q);
            let ms = sector_modes(Sector::Ramond, 8);
            let mut count = 0;
            for x in fock_basis(&space, 5).into_iter().filter(|v| v.parity() == Some(0)) {
                for &s in &ms {
                    for &t in ms.iter().filter(|&&t| t < s) {
                        let lhs = space.apply_fermion(s, &space.apply_fermion(t, &space.sigma(&x)?)?)?;
                        let rhs = space.sigma(&space.apply_fermion(s, &space.apply_fermion(t, &x)?)?)?;
                        if lhs != rhs {
                            return Ok(verdict(false, format!("a({s}/2)a({t}/2) on {x}")));
                        }
                        count += 1;
                    }
                }
                for n in -3..=3 {
                    if space.apply_virasoro(n, &space.sigma(&x)?)? != space.sigma(&space.apply_virasoro(n, &x)?)? {
                        return Ok(verdict(false, format!("L({n}) on {x}")));
                    }
                }
                if space.sigma_inverse(&space.sigma(&x)?)? != x {
                    return Ok(verdict(false, format!("sigma is not invertible on {x}")));
                }
            }
            Ok(verdict(true, format!("{count} relations")))
        },
    ));
    out.push(entry(
        7,
        "Gram radical is a submodule",
        &["properties", "verma"],
        Source::Computed,
        || {
            let mut count = 0;
            for (h, field) in [
                ("0", Q),
                ("1/2", Q),
                ("1/16", Q),
                ("0", Field::Prime(7)),
                ("1/2", Field::Prime(7)),
            ] {
                let m = module(h, field)?;
                for n in 0..=7 {
                    for r in radical(&m, n)? {
                        for k in 1..=3u32 {
                            let image = m.apply_mode(-(k as i64), &r);
                            if !m.gram_matrix(n + k).annihilates(&image)? {
                                return Ok(verdict(false, format!("L(-{k}) of radical vector {r} at h = {h}")));
                            }
                            count += 1;
                        }
                    }
                }
            }
            Ok(verdict(true, format!("{count} images")))
        },
    ));
    out.push(entry(
        7,
        "Gram matrices commute with reduction mod p",
        &["properties", "verma"],
        Source::Computed,
        || {
            let mut count = 0;
            for h in ["0", "1/2", "1/16", "4/17"] {
                let params = ModuleParams::parse("1/2", h, Q)?;
                let over_q = VermaModule::new(params.clone());
                for p in [3u64, 5, 7, 11, 13] {
                    let over_p = VermaModule::new(params.reduce_mod_p(p)?);
                    for n in 0..=6 {
                        let reduced = over_q
                            .gram_matrix(n)
                            .matrix()?
                            .map(|x| reduce_mod_p(x, p), Field::Prime(p))?;
                        if reduced != over_p.gram_matrix(n).matrix()? {
                            return Ok(verdict(false, format!("h = {h}, p = {p}, degree {n}")));
                        }
                        count += 1;
                    }
                }
            }
            Ok(verdict(true, format!("{count} matrices")))
        },
    ));
    out.push(entry(
        7,
        "Fock actions commute with reduction mod p",
        &["properties", "fock"],
        Source::Computed,
        || {
            let mut count = 0;
            for sector in [Sector::NS, Sector::Ramond] {
                let over_q = FockSpace::new(sector, Q);
                for p in [3u64, 5, 7, 11, 13] {
                    let over_p = FockSpace::new(sector, Field::Prime(p));
                    for x in fock_basis(&over_q, 3) {
                        let xp = x.reduce_mod_p(p)?;
                        for n in -3..=3 {
                            if over_q.apply_virasoro(n, &x)?.reduce_mod_p(p)? != over_p.apply_virasoro(n, &xp)? {
                                return Ok(verdict(false, format!("L({n}) on {x} mod {p}")));
                            }
                            count += 1;
                        }
                        for m in sector_modes(sector, 5) {
                            if over_q.apply_fermion(m, &x)?.reduce_mod_p(p)? != over_p.apply_fermion(m, &xp)? {
                                return Ok(verdict(false, format!("a({m}/2) on {x} mod {p}")));
                            }
                            count += 1;
                        }
                    }
                }
            }
            Ok(verdict(true, format!("{count} images")))
        },
    ));
}

// ------------------------------------------------------------- criterion 8

/// Counts sets of distinct values from `values` with the given total and
/// cardinality parity, by running over every subset.
fn brute_force_count(values: &[u32], total: u32, parity: u8) -> usize {
    (0u64..1 << values.len())
        .filter(|mask| {
            let chosen = values.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
            let (sum, count) = chosen.fold((0, 0u32), |(s, c), (_, &v)| (s + v, c + 1));
            sum == total && count % 2 == u32::from(parity)
        })
        .count()
}

fn oracle_entries(out: &mut Vec<Entry>) {
    for (h, sector, parity) in PAIRINGS {
        out.push(entry(
            8,
            format!("h = {h}: Gram ranks over Q equal subset counts ({sector}, parity {parity}), degrees <= 10"),
            &["oracle"],
            Source::Computed,
            move || {
                let irr = irreducible_dims(&module(h, Q)?, 10)?.irreducible();
                let brute: Vec<usize> = (0..=10u32)
                    .map(|n| {
                        // doubled values: half-odd integers 1/2, 3/2, ... or integers 0, 1, 2, ...
                        let total = sector.doubled_weight(parity, n);
                        let values: Vec<u32> = match sector {
                            Sector::NS => (0..=total / 2).map(|k| 2 * k + 1).filter(|&v| v <= total).collect(),
                            Sector::Ramond => (0..=total / 2).map(|k| 2 * k).collect(),
                        };
                        brute_force_count(&values, total, parity)
                    })
                    .collect();
                Ok(verdict(irr == brute, format!("gram {irr:?}, subsets {brute:?}")))
            },
        ));
    }
}
