//! Exact coefficient arithmetic.
//!
//! A [`Scalar`] is an arbitrary-precision rational, a residue modulo an odd
//! prime, or a dense univariate polynomial in the formal highest weight `h`
//! over one of those two fields. Every value carries its ring, so mixing
//! rings is detected instead of silently producing garbage.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// A coefficient field: the rationals or `F_p` for an odd prime `p`.
///
/// Characteristic 2 cannot be represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// A coefficient ring: a field, or polynomials in `h` over a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Field(Field),
    Polynomial(Field),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
    Polynomial(Poly),
}

/// Dense polynomial in `h`; `coeffs[i]` is the coefficient of `h^i`.
/// No trailing zeros, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

impl Field {
    /// `F_p` for an odd prime `p`.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 {
            Err(Error::CharacteristicTwo)
        } else if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotOddPrime(p))
        }
    }

    /// `0` selects the rationals.
    pub fn from_characteristic(ch: u64) -> Result<Field> {
        if ch == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(ch)
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Scalar::Prime {
                value: bigint_mod(n, p),
                p,
            },
        }
    }

    /// Image of a rational number; fails when `p` divides the denominator.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let den = bigint_mod(q.denom(), p);
                if den == 0 {
                    return Err(Error::DenominatorDivisibleByP {
                        value: q.to_string(),
                        p,
                    });
                }
                let num = bigint_mod(q.numer(), p);
                Ok(Scalar::Prime {
                    value: mul_mod(num, pow_mod(den, p - 2, p), p),
                    p,
                })
            }
        }
    }

    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.from_rational(&BigRational::new(num.into(), den.into()))
    }

    /// Parses `"a"`, `"a/b"` or `"k mod p"` (the last only when `p` matches).
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some((k, p)) = s.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            if self != Field::Prime(p) {
                return Err(Error::RingMismatch(format!("{s:?} is not an element of {self}")));
            }
            let k: BigInt = k.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            return Ok(self.from_bigint(&k));
        }
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl Ring {
    pub fn base(self) -> Field {
        match self {
            Ring::Field(f) | Ring::Polynomial(f) => f,
        }
    }

    pub fn characteristic(self) -> u64 {
        self.base().characteristic()
    }

    pub fn is_field(self) -> bool {
        matches!(self, Ring::Field(_))
    }

    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> Scalar {
        self.lift(self.base().from_int(n))
    }

    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        Ok(self.lift(self.base().from_rational(q)?))
    }

    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        Ok(self.lift(self.base().ratio(num, den)?))
    }

    /// The formal variable `h`.
    pub fn variable(self) -> Result<Scalar> {
        match self {
            Ring::Polynomial(f) => Ok(Scalar::Polynomial(Poly::new(f, vec![f.zero(), f.one()]))),
            Ring::Field(f) => Err(Error::RingMismatch(format!("{f} has no formal variable"))),
        }
    }

    /// Embeds a base-field scalar as a constant of this ring.
    pub fn lift(self, x: Scalar) -> Scalar {
        match (self, x) {
            (Ring::Polynomial(f), x @ (Scalar::Rational(_) | Scalar::Prime { .. })) => {
                Scalar::Polynomial(Poly::new(f, vec![x]))
            }
            (_, x) => x,
        }
    }

    pub fn contains(self, x: &Scalar) -> bool {
        x.ring() == self
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Field(k) => write!(f, "{k}"),
            Ring::Polynomial(k) => write!(f, "{k}[h]"),
        }
    }
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.ring() == Ring::Field(field)));
        Poly { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        if x.ring() != Ring::Field(self.field) {
            return Err(Error::RingMismatch(format!(
                "cannot evaluate a polynomial over {} at an element of {}",
                self.field,
                x.ring()
            )));
        }
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        Ok(acc)
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                a + b
            })
            .collect();
        Poly::new(self.field, coeffs)
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::new(self.field, Vec::new());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    fn neg(&self) -> Poly {
        Poly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "h")?,
                (1, false) => write!(f, "({c})*h")?,
                (_, true) => write!(f, "h^{i}")?,
                (_, false) => write!(f, "({c})*h^{i}")?,
            }
        }
        Ok(())
    }
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Rational(_) => Ring::Field(Field::Rational),
            Scalar::Prime { p, .. } => Ring::Field(Field::Prime(*p)),
            Scalar::Polynomial(poly) => Ring::Polynomial(poly.field),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Polynomial(poly) => poly.coeffs.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Polynomial(poly) => poly.coeffs.len() == 1 && poly.coeffs[0].is_one(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Scalar::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    /// Multiplicative inverse. Polynomials are invertible only when constant.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Prime { value, p } => Ok(Scalar::Prime {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            }),
            Scalar::Polynomial(poly) => match poly.coeffs.as_slice() {
                [c] => Ok(Scalar::Polynomial(Poly::new(poly.field, vec![c.inv()?]))),
                _ => Err(Error::NotAField(format!("{} is not a unit", self))),
            },
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.ring().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// JSON form: a string for field elements, an array of coefficient
    /// strings (constant term first) for polynomials.
    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Polynomial(poly) => {
                Value::Array(poly.coeffs.iter().map(|c| Value::String(c.to_string())).collect())
            }
            other => Value::String(other.to_string()),
        }
    }

    pub fn from_json(value: &Value, ring: Ring) -> Result<Scalar> {
        match (value, ring) {
            (Value::String(s), Ring::Field(f)) => f.parse(s),
            (Value::String(s), Ring::Polynomial(f)) => Ok(ring.lift(f.parse(s)?)),
            (Value::Array(items), Ring::Polynomial(f)) => {
                let coeffs = items
                    .iter()
                    .map(|v| match v {
                        Value::String(s) => f.parse(s),
                        other => Err(Error::Parse(other.to_string())),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Scalar::Polynomial(Poly::new(f, coeffs)))
            }
            (other, _) => Err(Error::Parse(other.to_string())),
        }
    }

    fn binary(&self, other: &Scalar, op: Op) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(match op {
                Op::Add => a + b,
                Op::Mul => a * b,
            }),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) if p == q => {
                let value = match op {
                    Op::Add => ((*a as u128 + *b as u128) % *p as u128) as u64,
                    Op::Mul => mul_mod(*a, *b, *p),
                };
                Scalar::Prime { value, p: *p }
            }
            (Scalar::Polynomial(a), Scalar::Polynomial(b)) if a.field == b.field => Scalar::Polynomial(match op {
                Op::Add => a.add(b),
                Op::Mul => a.mul(b),
            }),
            (Scalar::Polynomial(a), b) if Ring::Field(a.field) == b.ring() => {
                Scalar::Polynomial(a.clone()).binary(&Ring::Polynomial(a.field).lift(b.clone()), op)
            }
            (a, Scalar::Polynomial(b)) if Ring::Field(b.field) == a.ring() => {
                Ring::Polynomial(b.field).lift(a.clone()).binary(other, op)
            }
            (a, b) => panic!("ring mismatch: {} and {}", a.ring(), b.ring()),
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Mul,
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, p } => write!(f, "{value} mod {p}"),
            Scalar::Polynomial(poly) => write!(f, "{poly}"),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, Op::Add)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, Op::Mul)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: (p - value) % p,
                p: *p,
            },
            Scalar::Polynomial(poly) => Scalar::Polynomial(poly.neg()),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

/// `(m^3 - m)/12` in `ring`, computed as the integer `(m^3 - m)/3` times `1/4`.
pub fn central_coeff(m: i64, ring: Ring) -> Scalar {
    let m = BigInt::from(m);
    let third = (&m * &m * &m - &m) / BigInt::from(3);
    let quarter = ring.ratio(1, 4).expect("4 is invertible away from characteristic 2");
    &ring.lift(ring.base().from_bigint(&third)) * &quarter
}

/// Image of a rational scalar in `F_p`.
pub fn reduce_mod_p(q: &Scalar, p: u64) -> Result<Scalar> {
    let field = Field::prime(p)?;
    match q {
        Scalar::Rational(q) => field.from_rational(q),
        Scalar::Polynomial(poly) if poly.field == Field::Rational => {
            let coeffs = poly
                .coeffs
                .iter()
                .map(|c| reduce_mod_p(c, p))
                .collect::<Result<Vec<_>>>()?;
            Ok(Scalar::Polynomial(Poly::new(field, coeffs)))
        }
        other => Err(Error::RingMismatch(format!(
            "cannot reduce an element of {} mod {p}",
            other.ring()
        ))),
    }
}

/// Horner evaluation of a polynomial scalar at a base-field scalar.
pub fn poly_eval(f: &Scalar, x: &Scalar) -> Result<Scalar> {
    match f {
        Scalar::Polynomial(poly) => poly.eval(x),
        other => Err(Error::RingMismatch(format!("{other} is not a polynomial"))),
    }
}

/// Prime factorization of a nonzero integer, smallest prime first.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut k = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            k += 1;
        }
        if k > 0 {
            out.push((d.clone(), k));
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rational.ratio(n, d).unwrap()
    }

    #[test]
    fn central_coefficients() {
        let rat = Ring::Field(Field::Rational);
        assert_eq!(central_coeff(1, rat), q(0, 1));
        assert_eq!(central_coeff(2, rat), q(1, 2));
        assert_eq!(
            central_coeff(5, Ring::Field(Field::Prime(7))),
            Field::Prime(7).from_int(3)
        );
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_mod_p(&q(3, 4), 7).unwrap(), Field::Prime(7).from_int(6));
        assert_eq!(reduce_mod_p(&q(-108, 1), 7).unwrap(), Scalar::Prime { value: 4, p: 7 });
        assert!(matches!(
            reduce_mod_p(&q(1, 7), 7),
            Err(Error::DenominatorDivisibleByP { p: 7, .. })
        ));
    }

    #[test]
    fn characteristic_two_and_composites_rejected() {
        assert_eq!(Field::prime(2), Err(Error::CharacteristicTwo));
        assert_eq!(Field::from_characteristic(9), Err(Error::NotOddPrime(9)));
        assert_eq!(Field::from_characteristic(0), Ok(Field::Rational));
    }

    #[test]
    fn poly_eval_examples() {
        let ring = Ring::Polynomial(Field::Rational);
        let h = ring.variable().unwrap();
        assert_eq!(poly_eval(&h, &q(1, 2)).unwrap(), q(1, 2));

        let f =
            &(&(&ring.from_int(64) * &h) * &(&h - &ring.ratio(1, 2).unwrap())) * &(&h - &ring.ratio(1, 16).unwrap());
        assert_eq!(poly_eval(&f, &q(1, 16)).unwrap(), q(0, 1));

        let r7 = Ring::Polynomial(Field::Prime(7));
        let h7 = r7.variable().unwrap();
        let g = &h7 * &(&h7 - &r7.from_int(4));
        assert!(poly_eval(&g, &Field::Prime(7).from_int(4)).unwrap().is_zero());
        assert!(poly_eval(&g, &q(4, 1)).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(q(-3, 4).to_string(), "-3/4");
        assert_eq!(q(6, 3).to_string(), "2");
        assert_eq!(Field::Prime(7).from_int(-1).to_string(), "6 mod 7");
        assert_eq!(Field::Prime(7).parse("6 mod 7").unwrap(), Field::Prime(7).from_int(6));
        assert_eq!(Field::Prime(7).parse("1/2").unwrap(), Field::Prime(7).from_int(4));
        assert!(Field::Prime(5).parse("6 mod 7").is_err());
        assert!(Field::Rational.parse("x").is_err());
        let ring = Ring::Polynomial(Field::Rational);
        let h = ring.variable().unwrap();
        let f = &(&h * &h) - &ring.ratio(1, 2).unwrap();
        assert_eq!(Scalar::from_json(&f.to_json(), ring).unwrap(), f);
    }

    #[test]
    fn factorization() {
        let f = factorize(&BigInt::from(-1118));
        assert_eq!(f, vec![(2.into(), 1), (13.into(), 1), (43.into(), 1)]);
    }

    fn any_rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| q(n, d))
    }

    fn any_mod(p: u64) -> impl Strategy<Value = Scalar> {
        (0..p).prop_map(move |v| Scalar::Prime { value: v, p })
    }

    fn axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        assert!((a - &a.clone()).is_zero());
        if !a.is_zero() {
            assert!((a * &a.inv().unwrap()).is_one());
        }
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in any_rational(), b in any_rational(), c in any_rational()) {
            axioms(&a, &b, &c);
        }

        #[test]
        fn prime_field_axioms(a in any_mod(13), b in any_mod(13), c in any_mod(13)) {
            axioms(&a, &b, &c);
        }

        #[test]
        fn reduction_is_a_homomorphism(a in any_rational(), b in any_rational(), p in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
            if let (Ok(ra), Ok(rb)) = (reduce_mod_p(&a, p), reduce_mod_p(&b, p)) {
                prop_assert_eq!(reduce_mod_p(&(&a + &b), p).unwrap(), &ra + &rb);
                prop_assert_eq!(reduce_mod_p(&(&a * &b), p).unwrap(), &ra * &rb);
            }
        }

        #[test]
        fn central_coeff_is_odd(m in -200i64..200, ch in prop::sample::select(vec![0u64, 3, 7, 43])) {
            let ring = Ring::Field(Field::from_characteristic(ch).unwrap());
            prop_assert_eq!(central_coeff(m, ring), -central_coeff(-m, ring));
        }
    }
}
