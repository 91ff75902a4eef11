//! Verma modules `V(c,h)` for the Virasoro algebra.
//!
//! Vectors are finite combinations of PBW monomials `L(-n1)...L(-nk)v` with
//! `n1 >= ... >= nk >= 1`, indexed by [`Partition`]. The action of a mode
//! `L(n)` is computed by commuting it rightward through the monomial,
//! memoized per `(mode, partition)`.
//!
//! [`ModuleKind::Vacuum`] is the quotient `V(c,0)/U(Vir)L(-1)v`, whose PBW
//! basis is the partitions without a part equal to 1. Since the submodule
//! generated by `L(-1)v` is exactly the span of monomials ending in `L(-1)`,
//! the quotient action is the Verma action followed by dropping those
//! monomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use serde_json::{json, Value};

use crate::coeffring::{central_coeff, Field, Ring, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Weakly decreasing list of positive parts.
///
/// Ordered by degree first, then lexicographically on the part list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_unit_part(&self) -> bool {
        self.0.last() == Some(&1)
    }

    fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    fn tail(&self) -> Partition {
        Partition(self.0[1..].to_vec())
    }

    fn prepend(&self, part: u32) -> Partition {
        debug_assert!(self.first().is_none_or(|f| part >= f));
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.0);
        Partition(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "v");
        }
        let mut i = 0;
        while i < self.0.len() {
            let n = self.0[i];
            let run = self.0[i..].iter().take_while(|&&m| m == n).count();
            if run == 1 {
                write!(f, "L(-{n})")?;
            } else {
                write!(f, "L(-{n})^{run}")?;
            }
            i += run;
        }
        write!(f, "v")
    }
}

/// All partitions of `n` with parts at most `max_part`, ascending.
fn partitions_bounded(n: u32, max_part: u32, min_part: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (min_part..=max_part.min(n)).rev() {
        for mut rest in partitions_bounded(n - first, first, min_part) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Partitions of `n`, in ascending order.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = partitions_bounded(n, n, 1).into_iter().map(Partition).collect();
    out.sort();
    out
}

/// Number of partitions of `n`.
pub fn verma_dim(n: u32) -> usize {
    let n = n as usize;
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    /// The Verma module `V(c,h)`.
    Verma,
    /// The vacuum quotient `V(c,0)/U(Vir)L(-1)v`.
    Vacuum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleParams {
    c: Scalar,
    h: Scalar,
    ring: Ring,
    kind: ModuleKind,
}

impl ModuleParams {
    /// Verma module parameters. When `h` is a polynomial, `c` must be a
    /// constant of its base field and is lifted into the polynomial ring.
    pub fn new(c: Scalar, h: Scalar) -> Result<ModuleParams> {
        let ring = h.ring();
        let c = match (c.ring(), ring) {
            (rc, rh) if rc == rh => match rh {
                Ring::Polynomial(_) if c.as_poly().and_then(|p| p.degree()).unwrap_or(0) > 0 => {
                    return Err(Error::RingMismatch("central charge must be a constant".into()))
                }
                _ => c,
            },
            (Ring::Field(f), Ring::Polynomial(g)) if f == g => ring.lift(c),
            (rc, rh) => {
                return Err(Error::RingMismatch(format!("c lies in {rc} but h lies in {rh}")));
            }
        };
        Ok(ModuleParams {
            c,
            h,
            ring,
            kind: ModuleKind::Verma,
        })
    }

    /// The vacuum quotient with central charge `c`.
    pub fn vacuum(c: Scalar) -> ModuleParams {
        let ring = c.ring();
        ModuleParams {
            h: ring.zero(),
            c,
            ring,
            kind: ModuleKind::Vacuum,
        }
    }

    /// Parameters over `field` from scalar strings; `h` may be `"h"` for the
    /// formal variable.
    pub fn parse(c: &str, h: &str, field: Field) -> Result<ModuleParams> {
        let c = field.parse(c)?;
        let h = if h.trim() == "h" {
            Ring::Polynomial(field).variable()?
        } else {
            field.parse(h)?
        };
        ModuleParams::new(c, h)
    }

    pub fn with_kind(mut self, kind: ModuleKind) -> Result<ModuleParams> {
        if kind == ModuleKind::Vacuum && !self.h.is_zero() {
            return Err(Error::Invalid(format!(
                "the vacuum quotient needs h = 0, got {}",
                self.h
            )));
        }
        self.kind = kind;
        Ok(self)
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn h(&self) -> &Scalar {
        &self.h
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn field(&self) -> Result<Field> {
        match self.ring {
            Ring::Field(f) => Ok(f),
            other => Err(Error::NotAField(other.to_string())),
        }
    }

    /// Reduces rational parameters modulo `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<ModuleParams> {
        use crate::coeffring::reduce_mod_p;
        Ok(ModuleParams {
            c: reduce_mod_p(&self.c, p)?,
            h: reduce_mod_p(&self.h, p)?,
            ring: match self.ring {
                Ring::Field(_) => Ring::Field(Field::prime(p)?),
                Ring::Polynomial(_) => Ring::Polynomial(Field::prime(p)?),
            },
            kind: self.kind,
        })
    }
}

impl fmt::Display for ModuleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ModuleKind::Verma => "V",
            ModuleKind::Vacuum => "Vbar",
        };
        write!(f, "{name}(c={}, h={}) over {}", self.c, self.h, self.ring)
    }
}

/// A finite linear combination of PBW monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VermaVector {
    terms: BTreeMap<Partition, Scalar>,
}

impl VermaVector {
    pub fn zero() -> VermaVector {
        VermaVector::default()
    }

    pub fn monomial(p: Partition, coeff: Scalar) -> VermaVector {
        let mut v = VermaVector::zero();
        v.add_term(p, coeff);
        v
    }

    /// Builds a vector from `(parts, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Result<VermaVector> {
        let mut v = VermaVector::zero();
        for (parts, coeff) in terms {
            v.add_term(Partition::new(parts)?, coeff);
        }
        Ok(v)
    }

    pub fn add_term(&mut self, p: Partition, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &VermaVector, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Scalar) -> VermaVector {
        let mut out = VermaVector::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> Option<&Scalar> {
        self.terms.get(p)
    }

    /// Common degree of all terms, `None` for zero or mixed vectors.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Partition::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// The lexicographically largest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Partition, &Scalar)> {
        self.terms.iter().max_by(|a, b| a.0.parts().cmp(b.0.parts()))
    }

    /// Rescales so the leading coefficient is 1.
    pub fn normalized(&self) -> Result<VermaVector> {
        let (_, lead) = self.leading().ok_or(Error::ZeroVector)?;
        Ok(self.scale(&lead.inv()?))
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<VermaVector> {
        let mut out = VermaVector::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(p, c)| json!({ "partition": p.parts(), "coeff": c.to_json() }))
                .collect(),
        )
    }

    pub fn from_json(value: &Value, ring: Ring) -> Result<VermaVector> {
        let items = value.as_array().ok_or_else(|| Error::Parse(value.to_string()))?;
        let mut v = VermaVector::zero();
        for item in items {
            let parts = item
                .get("partition")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(item.to_string()))?
                .iter()
                .map(|n| n.as_u64().map(|n| n as u32).ok_or_else(|| Error::Parse(n.to_string())))
                .collect::<Result<Vec<_>>>()?;
            let coeff = Scalar::from_json(item.get("coeff").ok_or_else(|| Error::Parse(item.to_string()))?, ring)?;
            v.add_term(Partition::new(parts)?, coeff);
        }
        Ok(v)
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "({c}) {p}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add<&VermaVector> for &VermaVector {
    type Output = VermaVector;
    fn add(self, rhs: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub<&VermaVector> for &VermaVector {
    type Output = VermaVector;
    fn sub(self, rhs: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

/// Contravariant form values on one degree slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub degree: u32,
    pub basis: Vec<Partition>,
    pub entries: Vec<Vec<Scalar>>,
}

impl GramMatrix {
    pub fn matrix(&self) -> Result<Matrix> {
        let field = match self.entries.first().and_then(|r| r.first()).map(Scalar::ring) {
            Some(Ring::Field(f)) => f,
            Some(other) => return Err(Error::NotAField(other.to_string())),
            None => Field::Rational,
        };
        Ok(Matrix::from_rows(field, self.basis.len(), self.entries.clone()))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.matrix()?.rank())
    }

    /// Basis of the radical on this slice.
    pub fn radical(&self) -> Result<Vec<VermaVector>> {
        Ok(self
            .matrix()?
            .nullspace()
            .into_iter()
            .map(|x| {
                let mut v = VermaVector::zero();
                for (p, c) in self.basis.iter().zip(x) {
                    v.add_term(p.clone(), c);
                }
                v
            })
            .collect())
    }

    /// Whether `vec` (homogeneous of this degree) pairs to zero with everything.
    pub fn annihilates(&self, vec: &VermaVector) -> Result<bool> {
        let zero = match self.entries.first().and_then(|r| r.first()) {
            Some(x) => x.ring().zero(),
            None => return Ok(true),
        };
        let x: Vec<Scalar> = self
            .basis
            .iter()
            .map(|p| vec.coeff(p).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        Ok(self.matrix()?.mul_vec(&x).iter().all(Scalar::is_zero))
    }
}

/// A Verma module (or its vacuum quotient) with a straightening cache.
pub struct VermaModule {
    params: ModuleParams,
    straighten_cache: RwLock<HashMap<(i64, Partition), VermaVector>>,
    gram_cache: RwLock<Vec<GramMatrix>>,
}

impl VermaModule {
    pub fn new(params: ModuleParams) -> VermaModule {
        VermaModule {
            params,
            straighten_cache: RwLock::default(),
            gram_cache: RwLock::default(),
        }
    }

    pub fn params(&self) -> &ModuleParams {
        &self.params
    }

    pub fn ring(&self) -> Ring {
        self.params.ring
    }

    /// The highest-weight vector `v`.
    pub fn highest_weight_vector(&self) -> VermaVector {
        VermaVector::monomial(Partition::empty(), self.ring().one())
    }

    pub fn monomial(&self, parts: &[u32]) -> Result<VermaVector> {
        Ok(VermaVector::monomial(
            Partition::new(parts.to_vec())?,
            self.ring().one(),
        ))
    }

    /// PBW basis of the degree-`n` slice, ascending.
    pub fn basis(&self, n: u32) -> Vec<Partition> {
        let mut out = partitions(n);
        if self.params.kind == ModuleKind::Vacuum {
            out.retain(|p| !p.has_unit_part());
        }
        out
    }

    pub fn dim(&self, n: u32) -> usize {
        match self.params.kind {
            ModuleKind::Verma => verma_dim(n),
            ModuleKind::Vacuum => self.basis(n).len(),
        }
    }

    /// `L(n) vec`.
    pub fn apply_mode(&self, n: i64, vec: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (p, c) in vec.terms() {
            out.add_scaled(&self.apply_to_monomial(n, p), c);
        }
        out
    }

    /// `L(n1) L(n2) ... L(nk) vec`, rightmost mode first.
    pub fn apply_word(&self, word: &[i64], vec: &VermaVector) -> VermaVector {
        word.iter().rev().fold(vec.clone(), |acc, &n| self.apply_mode(n, &acc))
    }

    pub fn apply_to_monomial(&self, n: i64, p: &Partition) -> VermaVector {
        let out = self.straighten(n, p);
        match self.params.kind {
            ModuleKind::Verma => out,
            ModuleKind::Vacuum => {
                let mut projected = VermaVector::zero();
                for (q, c) in out.terms() {
                    if !q.has_unit_part() {
                        projected.add_term(q.clone(), c.clone());
                    }
                }
                projected
            }
        }
    }

    fn apply_verma(&self, n: i64, vec: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (p, c) in vec.terms() {
            out.add_scaled(&self.straighten(n, p), c);
        }
        out
    }

    /// `L(m)` on a PBW monomial of the Verma module, re-expressed in PBW form.
    fn straighten(&self, m: i64, p: &Partition) -> VermaVector {
        let key = (m, p.clone());
        if let Some(hit) = self.straighten_cache.read().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        let ring = self.ring();
        let result = match p.first() {
            _ if m == 0 => {
                let weight = &self.params.h + &ring.from_int(p.degree() as i64);
                VermaVector::monomial(p.clone(), weight)
            }
            None if m > 0 => VermaVector::zero(),
            None => VermaVector::monomial(Partition(vec![(-m) as u32]), ring.one()),
            Some(first) if m < 0 && (-m) as u32 >= first => VermaVector::monomial(p.prepend((-m) as u32), ring.one()),
            Some(first) => {
                // L(m) L(-a) X = L(-a) L(m) X + (m + a) L(m - a) X + [m = a] (m^3 - m)/12 c X
                let a = first as i64;
                let rest = p.tail();
                let mut out = self.apply_verma(-a, &self.straighten(m, &rest));
                if m + a != 0 {
                    out.add_scaled(&self.straighten(m - a, &rest), &ring.from_int(m + a));
                }
                if m == a {
                    let central = &central_coeff(m, ring) * &self.params.c;
                    out.add_term(rest, central);
                }
                out
            }
        };
        self.straighten_cache
            .write()
            .expect("cache poisoned")
            .insert(key, result.clone());
        result
    }

    /// Gram matrix of the contravariant form (`<v,v> = 1`, `L(n)` adjoint to
    /// `L(-n)`) on the degree-`n` slice.
    ///
    /// Built bottom-up: `<L(-a)X, Y> = <X, L(a)Y>`, so row `(a, rest)` of the
    /// degree-`n` matrix is `L(a)` applied to each column, paired against row
    /// `rest` of the degree `n - a` matrix.
    pub fn gram_matrix(&self, n: u32) -> GramMatrix {
        if let Some(g) = self.gram_cache.read().expect("cache poisoned").get(n as usize) {
            return g.clone();
        }
        for d in 0..=n {
            if self.gram_cache.read().expect("cache poisoned").len() > d as usize {
                continue;
            }
            let g = self.compute_gram(d);
            let mut cache = self.gram_cache.write().expect("cache poisoned");
            if cache.len() == d as usize {
                cache.push(g);
            }
        }
        self.gram_cache.read().expect("cache poisoned")[n as usize].clone()
    }

    fn compute_gram(&self, n: u32) -> GramMatrix {
        let ring = self.ring();
        let basis = self.basis(n);
        if n == 0 {
            return GramMatrix {
                degree: 0,
                basis,
                entries: vec![vec![ring.one()]],
            };
        }
        let cache = self.gram_cache.read().expect("cache poisoned");
        let index: Vec<HashMap<&Partition, usize>> = cache
            .iter()
            .map(|g| g.basis.iter().enumerate().map(|(i, p)| (p, i)).collect())
            .collect();
        let entries = basis
            .iter()
            .map(|row| {
                let a = row.first().expect("positive degree");
                let rest = row.tail();
                let lower = &cache[(n - a) as usize];
                let rest_row = &lower.entries[index[(n - a) as usize][&rest]];
                basis
                    .iter()
                    .map(|col| {
                        let image = self.apply_to_monomial(a as i64, col);
                        image.terms().fold(ring.zero(), |acc, (q, c)| {
                            let g = &rest_row[index[(n - a) as usize][q]];
                            if g.is_zero() {
                                acc
                            } else {
                                &acc + &(c * g)
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        GramMatrix {
            degree: n,
            basis,
            entries,
        }
    }

    /// The contravariant pairing of two vectors.
    pub fn form(&self, u: &VermaVector, w: &VermaVector) -> Scalar {
        let ring = self.ring();
        let mut acc = ring.zero();
        for (p, a) in u.terms() {
            for (q, b) in w.terms() {
                if p.degree() != q.degree() {
                    continue;
                }
                let g = self.gram_matrix(p.degree());
                let i = g.basis.iter().position(|x| x == p).expect("monomial in basis");
                let j = g.basis.iter().position(|x| x == q).expect("monomial in basis");
                acc = &acc + &(&(a * b) * &g.entries[i][j]);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::reduce_mod_p;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Scalar {
        Field::Rational.ratio(n, d).unwrap()
    }

    fn generic_module(c: Scalar) -> VermaModule {
        let ring = Ring::Polynomial(Field::Rational);
        VermaModule::new(ModuleParams::new(c, ring.variable().unwrap()).unwrap())
    }

    #[test]
    fn partition_counts() {
        assert_eq!(verma_dim(0), 1);
        assert_eq!(verma_dim(4), 5);
        assert_eq!(verma_dim(6), 11);
        assert_eq!(verma_dim(12), 77);
        for n in 0..13 {
            assert_eq!(partitions(n).len(), verma_dim(n));
        }
    }

    #[test]
    fn partition_validation_and_order() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let ps = partitions(4);
        let parts: Vec<&[u32]> = ps.iter().map(Partition::parts).collect();
        assert_eq!(parts, vec![&[1, 1, 1, 1][..], &[2, 1, 1], &[2, 2], &[3, 1], &[4]]);
    }

    #[test]
    fn single_bracket_examples() {
        let m = generic_module(rat(7, 3));
        let ring = m.ring();
        let h = ring.variable().unwrap();
        let c = m.params().c().clone();
        let l1 = m.monomial(&[1]).unwrap();
        assert_eq!(
            m.apply_mode(1, &l1),
            m.highest_weight_vector().scale(&(&ring.from_int(2) * &h))
        );

        let l2 = m.monomial(&[2]).unwrap();
        let expected = &(&ring.from_int(4) * &h) + &(&c * &ring.ratio(1, 2).unwrap());
        assert_eq!(m.apply_mode(2, &l2), m.highest_weight_vector().scale(&expected));

        let got = m.apply_mode(-1, &l2);
        let want = VermaVector::from_terms([(vec![2, 1], ring.one()), (vec![3], ring.one())]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn gram_degree_one_and_two() {
        let m = VermaModule::new(ModuleParams::new(rat(1, 2), rat(0, 1)).unwrap());
        assert_eq!(m.gram_matrix(1).entries, vec![vec![rat(0, 1)]]);

        // basis order: L(-1)^2 v, L(-2) v
        for c in [rat(1, 2), rat(-22, 5), rat(3, 1)] {
            let m = generic_module(c.clone());
            let ring = m.ring();
            let h = ring.variable().unwrap();
            let k = |n: i64| ring.from_int(n);
            let g = m.gram_matrix(2);
            assert_eq!(g.entries[1][1], &(&k(4) * &h) + &(&c * &rat(1, 2)));
            assert_eq!(g.entries[0][1], &k(6) * &h);
            assert_eq!(g.entries[1][0], &k(6) * &h);
            assert_eq!(g.entries[0][0], &(&k(4) * &h) * &(&(&k(2) * &h) + &k(1)));
            assert_eq!(m.gram_matrix(1).entries, vec![vec![&k(2) * &h]]);
        }
    }

    #[test]
    fn grading_and_l0() {
        let m = generic_module(rat(1, 2));
        let ring = m.ring();
        let h = ring.variable().unwrap();
        for p in partitions(5) {
            let v = VermaVector::monomial(p.clone(), ring.one());
            for n in -3..=5i64 {
                let image = m.apply_mode(n, &v);
                if !image.is_zero() {
                    assert_eq!(image.degree(), Some((5 - n) as u32));
                }
            }
            assert_eq!(m.apply_mode(0, &v), v.scale(&(&h + &ring.from_int(5))));
        }
        // L(0) on a mixed vector acts termwise.
        let mixed = &m.monomial(&[1]).unwrap() + &m.monomial(&[2, 1]).unwrap();
        let want = &m.monomial(&[1]).unwrap().scale(&(&h + &ring.one()))
            + &m.monomial(&[2, 1]).unwrap().scale(&(&h + &ring.from_int(3)));
        assert_eq!(m.apply_mode(0, &mixed), want);
    }

    #[test]
    fn vacuum_quotient_drops_unit_parts() {
        let m = VermaModule::new(ModuleParams::vacuum(rat(1, 2)));
        assert_eq!(m.basis(4).len(), 2);
        assert!(m.apply_mode(-1, &m.highest_weight_vector()).is_zero());
        assert!(ModuleParams::new(rat(1, 2), rat(1, 2))
            .unwrap()
            .with_kind(ModuleKind::Vacuum)
            .is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = generic_module(rat(1, 2));
        let v = m.apply_word(&[-1, -1, -2], &m.highest_weight_vector());
        assert_eq!(VermaVector::from_json(&v.to_json(), m.ring()).unwrap(), v);
    }

    #[test]
    fn mismatched_parameters_rejected() {
        assert!(ModuleParams::new(rat(1, 2), Field::Prime(7).from_int(1)).is_err());
        let ring = Ring::Polynomial(Field::Rational);
        assert!(ModuleParams::new(ring.variable().unwrap(), ring.variable().unwrap()).is_err());
    }

    #[test]
    fn bracket_consistency_up_to_degree_eight() {
        let c = rat(1, 2);
        let m = generic_module(c.clone());
        let ring = m.ring();
        for d in 0..=8 {
            for p in partitions(d) {
                let x = VermaVector::monomial(p, ring.one());
                for a in -4..=4i64 {
                    for b in -4..=4i64 {
                        let lhs = &m.apply_mode(a, &m.apply_mode(b, &x)) - &m.apply_mode(b, &m.apply_mode(a, &x));
                        let mut rhs = m.apply_mode(a + b, &x).scale(&ring.from_int(a - b));
                        if a + b == 0 {
                            rhs.add_scaled(&x, &(&central_coeff(a, ring) * &ring.lift(c.clone())));
                        }
                        assert_eq!(lhs, rhs, "[L({a}), L({b})] on degree {d}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn gram_is_symmetric(cn in -20i64..20, hn in -20i64..20, d in 1i64..9) {
            let m = VermaModule::new(ModuleParams::new(rat(cn, d), rat(hn, 16)).unwrap());
            for n in 0..=6 {
                prop_assert!(m.gram_matrix(n).matrix().unwrap().is_symmetric());
            }
        }

        #[test]
        fn gram_commutes_with_reduction(cn in -20i64..20, hn in -20i64..20, p in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
            let params = ModuleParams::new(rat(cn, 2), rat(hn, 16)).unwrap();
            let over_q = VermaModule::new(params.clone());
            let over_p = VermaModule::new(params.reduce_mod_p(p).unwrap());
            for n in 0..=5 {
                let reduced = over_q.gram_matrix(n).matrix().unwrap()
                    .map(|x| reduce_mod_p(x, p), Field::Prime(p)).unwrap();
                prop_assert_eq!(reduced, over_p.gram_matrix(n).matrix().unwrap());
            }
        }
    }
}
