//! Free-fermion Fock spaces in the Neveu-Schwarz (`Z+1/2`) and Ramond (`Z`)
//! sectors.
//!
//! Modes are stored doubled so half-integers stay integral: `a(-3/2)` is the
//! doubled index `-3`. A monomial `a(-n1)...a(-nk)1` keeps `n1 > ... > nk`
//! and is stored as the list of doubled `n_i`; in the Ramond sector `a(0)`
//! may appear once, last.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coeffring::{reduce_mod_p, Field, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{rank_of, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    /// Half-odd-integer modes.
    NS,
    /// Integer modes, including the zero mode.
    Ramond,
}

impl Sector {
    pub fn parse(s: &str) -> Result<Sector> {
        match s.to_ascii_lowercase().as_str() {
            "ns" => Ok(Sector::NS),
            "r" | "ramond" => Ok(Sector::Ramond),
            _ => Err(Error::Parse(s.to_string())),
        }
    }

    /// Whether the doubled mode index belongs to this sector.
    pub fn admits(self, doubled: i64) -> bool {
        match self {
            Sector::NS => doubled.rem_euclid(2) == 1,
            Sector::Ramond => doubled.rem_euclid(2) == 0,
        }
    }

    /// Doubled weight of the degree-`n` slice with the given parity.
    pub fn doubled_weight(self, parity: u8, degree: u32) -> u32 {
        match self {
            Sector::NS => 2 * degree + u32::from(parity),
            Sector::Ramond => 2 * degree,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Sector::NS => "NS",
            Sector::Ramond => "R",
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Writes a doubled index as an integer or `n/2`.
pub fn format_half(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

/// Parses `"3"`, `"-3/2"`, etc. into a doubled index.
pub fn parse_half(s: &str) -> Result<i64> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, "2")) => n.trim().parse::<i64>().map_err(|_| bad()),
        Some(_) => Err(bad()),
        None => s.parse::<i64>().map(|n| 2 * n).map_err(|_| bad()),
    }
}

/// A basis monomial, ordered by weight and then by its doubled parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockMonomial(Vec<u32>);

impl FockMonomial {
    pub fn vacuum() -> FockMonomial {
        FockMonomial(Vec::new())
    }

    /// Doubled absolute values `2*n_i`, strictly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn doubled_weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parity(&self) -> u8 {
        (self.0.len() % 2) as u8
    }

    pub fn has_zero_mode(&self) -> bool {
        self.0.last() == Some(&0)
    }

    /// Sector-adjusted degree: weight minus `parity/2` in NS, weight in Ramond.
    pub fn degree(&self, sector: Sector) -> u32 {
        match sector {
            Sector::NS => (self.doubled_weight() - u32::from(self.parity())) / 2,
            Sector::Ramond => self.doubled_weight() / 2,
        }
    }
}

impl Ord for FockMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.doubled_weight()
            .cmp(&other.doubled_weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FockMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &n in &self.0 {
            if n == 0 {
                write!(f, "a(0)")?;
            } else {
                write!(f, "a({})", format_half(-(n as i64)))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    sector: Sector,
    terms: BTreeMap<FockMonomial, Scalar>,
}

impl FockVector {
    pub fn zero(sector: Sector) -> FockVector {
        FockVector {
            sector,
            terms: BTreeMap::new(),
        }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &FockMonomial) -> Option<&Scalar> {
        self.terms.get(m)
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

    pub fn add_term(&mut self, m: FockMonomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &FockVector, factor: &Scalar) {
        debug_assert_eq!(self.sector, other.sector);
        if factor.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Scalar) -> FockVector {
        let mut out = FockVector::zero(self.sector);
        out.add_scaled(self, factor);
        out
    }

    /// Common parity of all terms.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(FockMonomial::parity);
        let p = it.next()?;
        it.all(|q| q == p).then_some(p)
    }

    /// Common sector-adjusted degree of all terms.
    pub fn degree(&self) -> Option<u32> {
        let sector = self.sector;
        let mut it = self.terms.keys().map(|m| m.degree(sector));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<FockVector> {
        let mut out = FockVector::zero(self.sector);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn reduce_mod_p(&self, p: u64) -> Result<FockVector> {
        self.map_coeffs(|c| reduce_mod_p(c, p))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let modes: Vec<i64> = m.parts().iter().map(|&n| -(n as i64)).collect();
                    json!({ "sector": self.sector.label(), "modes": modes, "coeff": c.to_json() })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value, field: Field) -> Result<FockVector> {
        let items = value.as_array().ok_or_else(|| Error::Parse(value.to_string()))?;
        let bad = |v: &Value| Error::Parse(v.to_string());
        let mut out: Option<FockVector> = None;
        for item in items {
            let sector = Sector::parse(item.get("sector").and_then(Value::as_str).ok_or_else(|| bad(item))?)?;
            let modes = item
                .get("modes")
                .and_then(Value::as_array)
                .ok_or_else(|| bad(item))?
                .iter()
                .map(|m| m.as_i64().ok_or_else(|| bad(m)))
                .collect::<Result<Vec<_>>>()?;
            let coeff = Scalar::from_json(
                item.get("coeff").ok_or_else(|| bad(item))?,
                crate::coeffring::Ring::Field(field),
            )?;
            let space = FockSpace::new(sector, field);
            let term = space.word(&modes, coeff)?;
            match &mut out {
                None => out = Some(term),
                Some(v) if v.sector == sector => v.add_scaled(&term, &field.one()),
                Some(v) => return Err(Error::SectorMismatch(format!("{} and {}", v.sector, sector))),
            }
        }
        out.ok_or_else(|| Error::Parse("empty Fock vector needs a sector".into()))
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c}) {m}")?;
            }
        }
        Ok(())
    }
}

/// One Fock sector over a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockSpace {
    sector: Sector,
    field: Field,
}

impl FockSpace {
    pub fn new(sector: Sector, field: Field) -> FockSpace {
        FockSpace { sector, field }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vacuum(&self) -> FockVector {
        self.monomial(FockMonomial::vacuum())
    }

    pub fn monomial(&self, m: FockMonomial) -> FockVector {
        let mut v = FockVector::zero(self.sector);
        v.add_term(m, self.field.one());
        v
    }

    /// `coeff * a(m1) a(m2) ... a(mk) 1` for doubled modes in any order.
    pub fn word(&self, modes: &[i64], coeff: Scalar) -> Result<FockVector> {
        let mut v = self.vacuum().scale(&coeff);
        for &m in modes.iter().rev() {
            v = self.apply_fermion(m, &v)?;
        }
        Ok(v)
    }

    fn check(&self, v: &FockVector) -> Result<()> {
        if v.sector != self.sector {
            return Err(Error::SectorMismatch(format!(
                "vector in {} used with {} space",
                v.sector, self.sector
            )));
        }
        Ok(())
    }

    /// `a(m)` on a monomial, `m` doubled.
    fn fermion_on_monomial(&self, m: i64, mono: &FockMonomial) -> Option<(FockMonomial, Scalar)> {
        let parts = mono.parts();
        let field = self.field;
        let sign = |i: usize| if i.is_multiple_of(2) { field.one() } else { -field.one() };
        if m > 0 {
            let i = parts.iter().position(|&n| n as i64 == m)?;
            let mut rest = parts.to_vec();
            rest.remove(i);
            return Some((FockMonomial(rest), sign(i)));
        }
        let n = (-m) as u32;
        let i = parts.iter().position(|&p| p <= n).unwrap_or(parts.len());
        if parts.get(i) == Some(&n) {
            if n != 0 {
                return None;
            }
            // a(0) X a(0) = (-1)^len(X) X a(0)^2 = (-1)^len(X) X / 2
            let mut rest = parts.to_vec();
            rest.pop();
            let half = field.ratio(1, 2).expect("odd characteristic");
            return Some((FockMonomial(rest), &sign(i) * &half));
        }
        let mut out = parts.to_vec();
        out.insert(i, n);
        Some((FockMonomial(out), sign(i)))
    }

    /// The fermion mode `a(m)`, `m` doubled.
    pub fn apply_fermion(&self, m: i64, v: &FockVector) -> Result<FockVector> {
        self.check(v)?;
        if !self.sector.admits(m) {
            return Err(Error::SectorMismatch(format!(
                "mode {} is not in the {} sector",
                format_half(m),
                self.sector
            )));
        }
        let mut out = FockVector::zero(self.sector);
        for (mono, c) in v.terms() {
            if let Some((image, s)) = self.fermion_on_monomial(m, mono) {
                out.add_term(image, c * &s);
            }
        }
        Ok(out)
    }

    /// `L(n) = 1/2 sum_j j :a(-j) a(n+j):`, plus `1/16` on `L(0)` in the Ramond sector.
    pub fn apply_virasoro(&self, n: i64, v: &FockVector) -> Result<FockVector> {
        self.check(v)?;
        let mut out = FockVector::zero(self.sector);
        for (mono, c) in v.terms() {
            for (image, s) in self.virasoro_on_monomial(n, mono) {
                out.add_term(image, c * &s);
            }
        }
        Ok(out)
    }

    fn virasoro_on_monomial(&self, n: i64, mono: &FockMonomial) -> Vec<(FockMonomial, Scalar)> {
        let field = self.field;
        let mut acc = FockVector::zero(self.sector);
        if n == 0 && self.sector == Sector::Ramond {
            acc.add_term(mono.clone(), field.ratio(1, 16).expect("odd characteristic"));
        }
        // Doubled j runs over [-w, w - 2n]; outside it the right-hand factor
        // of the normal-ordered product annihilates the monomial.
        let w = mono.parts().first().copied().unwrap_or(0) as i64;
        let start = if self.sector.admits(-w) { -w } else { -w - 1 };
        let mut j = start;
        while j <= w - 2 * n {
            if j != 0 {
                let (left, right) = (-j, 2 * n + j);
                let (first, second, sign) = if left <= right {
                    (right, left, 1)
                } else {
                    (left, right, -1)
                };
                if let Some((m1, s1)) = self.fermion_on_monomial(first, mono) {
                    if let Some((m2, s2)) = self.fermion_on_monomial(second, &m1) {
                        let coeff = field.ratio(sign * j, 4).expect("odd characteristic");
                        acc.add_term(m2, &coeff * &(&s1 * &s2));
                    }
                }
            }
            j += 2;
        }
        acc.terms.into_iter().collect()
    }

    /// `L(n1) ... L(nk) v`, rightmost first.
    pub fn apply_virasoro_word(&self, word: &[i64], v: &FockVector) -> Result<FockVector> {
        word.iter()
            .rev()
            .try_fold(v.clone(), |acc, &n| self.apply_virasoro(n, &acc))
    }

    /// Monomials of the given parity and sector-adjusted degree, ascending.
    pub fn basis(&self, parity: u8, degree: u32) -> Vec<FockMonomial> {
        let total = self.sector.doubled_weight(parity, degree);
        let mut out = Vec::new();
        let step = 2;
        let top = match self.sector {
            Sector::NS => {
                if total == 0 {
                    0
                } else if total % 2 == 1 {
                    total
                } else {
                    total - 1
                }
            }
            Sector::Ramond => total,
        };
        distinct_parts(
            total,
            top as i64,
            step,
            self.sector == Sector::Ramond,
            &mut Vec::new(),
            &mut out,
        );
        out.retain(|m| m.parity() == parity);
        out.sort();
        out
    }

    fn coordinates(&self, basis: &[FockMonomial], v: &FockVector) -> Vec<Scalar> {
        basis
            .iter()
            .map(|m| v.coeff(m).cloned().unwrap_or_else(|| self.field.zero()))
            .collect()
    }

    fn vector(&self, basis: &[FockMonomial], x: Vec<Scalar>) -> FockVector {
        let mut v = FockVector::zero(self.sector);
        for (m, c) in basis.iter().zip(x) {
            v.add_term(m.clone(), c);
        }
        v
    }

    /// Graded dimensions of the Virasoro submodule generated by `start`, in degrees `0..=max`.
    pub fn vir_span_dims(&self, start: &FockVector, max: u32) -> Result<Vec<usize>> {
        self.check(start)?;
        let (Some(d0), Some(parity)) = (start.degree(), start.parity()) else {
            return Err(Error::Invalid("start vector must be nonzero and homogeneous".into()));
        };
        let mut slices: Vec<Vec<FockVector>> = vec![Vec::new(); max as usize + 1];
        if d0 > max {
            return Ok(vec![0; max as usize + 1]);
        }
        slices[d0 as usize] = vec![start.clone()];
        for n in d0 + 1..=max {
            let basis = self.basis(parity, n);
            let mut rows = Vec::new();
            for k in 1..=(n - d0) {
                for x in &slices[(n - k) as usize] {
                    let image = self.apply_virasoro(-(k as i64), x)?;
                    if !image.is_zero() {
                        rows.push(self.coordinates(&basis, &image));
                    }
                }
            }
            let reduced = Matrix::from_rows(self.field, basis.len(), rows).row_space_basis();
            slices[n as usize] = reduced.into_iter().map(|x| self.vector(&basis, x)).collect();
        }
        Ok(slices.iter().map(Vec::len).collect())
    }

    /// Basis of the vectors in one slice killed by `L(1)` and `L(2)`.
    pub fn hw_vectors(&self, parity: u8, degree: u32) -> Result<Vec<FockVector>> {
        let basis = self.basis(parity, degree);
        let mut rows = Vec::new();
        for k in [1u32, 2] {
            if k > degree {
                continue;
            }
            let target = self.basis(parity, degree - k);
            let images = basis
                .iter()
                .map(|m| self.apply_virasoro(k as i64, &self.monomial(m.clone())))
                .collect::<Result<Vec<_>>>()?;
            for t in &target {
                rows.push(
                    images
                        .iter()
                        .map(|img| img.coeff(t).cloned().unwrap_or_else(|| self.field.zero()))
                        .collect(),
                );
            }
        }
        let matrix = Matrix::from_rows(self.field, basis.len(), rows);
        Ok(matrix.nullspace().into_iter().map(|x| self.vector(&basis, x)).collect())
    }

    /// Whether `v` lies in the span of `vectors` (all in one slice).
    pub fn in_span(&self, vectors: &[FockVector], v: &FockVector) -> Result<bool> {
        let (Some(d), Some(parity)) = (v.degree(), v.parity()) else {
            return Ok(v.is_zero());
        };
        let basis = self.basis(parity, d);
        let rows: Vec<Vec<Scalar>> = vectors.iter().map(|x| self.coordinates(&basis, x)).collect();
        let mut with = rows.clone();
        with.push(self.coordinates(&basis, v));
        Ok(rank_of(self.field, basis.len(), &rows) == rank_of(self.field, basis.len(), &with))
    }

    /// Right multiplication by `a(0)`, from even to odd Ramond vectors.
    pub fn sigma(&self, v: &FockVector) -> Result<FockVector> {
        self.right_zero_mode(v, 0, self.field.one())
    }

    /// Inverse of [`FockSpace::sigma`]: twice right multiplication by `a(0)`.
    pub fn sigma_inverse(&self, v: &FockVector) -> Result<FockVector> {
        self.right_zero_mode(v, 1, self.field.from_int(2))
    }

    fn right_zero_mode(&self, v: &FockVector, parity: u8, factor: Scalar) -> Result<FockVector> {
        self.check(v)?;
        if self.sector != Sector::Ramond {
            return Err(Error::SectorMismatch("sigma is defined on the Ramond sector".into()));
        }
        let half = self.field.ratio(1, 2)?;
        let mut out = FockVector::zero(self.sector);
        for (m, c) in v.terms() {
            if m.parity() != parity {
                return Err(Error::ParityMismatch {
                    expected: parity,
                    found: m.parity(),
                });
            }
            let mut parts = m.parts().to_vec();
            let scale = if m.has_zero_mode() {
                parts.pop();
                &factor * &half
            } else {
                parts.push(0);
                factor.clone()
            };
            out.add_term(FockMonomial(parts), c * &scale);
        }
        Ok(out)
    }

    /// The symmetric form with `(a(n)u, v) = (u, a(-n)v)` and `(1,1) = 1`:
    /// distinct monomials are orthogonal, a monomial has norm 1, or 1/2 if it
    /// contains `a(0)`.
    pub fn form(&self, u: &FockVector, v: &FockVector) -> Result<Scalar> {
        self.check(u)?;
        self.check(v)?;
        let half = self.field.ratio(1, 2)?;
        let mut acc = self.field.zero();
        for (m, a) in u.terms() {
            if let Some(b) = v.coeff(m) {
                let norm = if m.has_zero_mode() {
                    half.clone()
                } else {
                    self.field.one()
                };
                acc = &acc + &(&(a * b) * &norm);
            }
        }
        Ok(acc)
    }
}

/// Strictly decreasing lists of values `<= top` stepping by 2 that sum to `total`.
fn distinct_parts(
    total: u32,
    top: i64,
    step: i64,
    allow_zero: bool,
    prefix: &mut Vec<u32>,
    out: &mut Vec<FockMonomial>,
) {
    if total == 0 {
        out.push(FockMonomial(prefix.clone()));
        if allow_zero {
            let mut with_zero = prefix.clone();
            with_zero.push(0);
            out.push(FockMonomial(with_zero));
        }
        return;
    }
    let mut part = top.min(total as i64);
    if (top - part) % step != 0 {
        part -= 1;
    }
    while part > 0 {
        prefix.push(part as u32);
        distinct_parts(total - part as u32, part - step, step, allow_zero, prefix, out);
        prefix.pop();
        part -= step;
    }
}

/// Number of monomials of each sector-adjusted degree `0..=max`.
pub fn sector_dims(sector: Sector, parity: u8, max: u32) -> Vec<usize> {
    let space = FockSpace::new(sector, Field::Rational);
    (0..=max).map(|n| space.basis(parity, n).len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rational.ratio(n, d).unwrap()
    }

    fn ns() -> FockSpace {
        FockSpace::new(Sector::NS, Field::Rational)
    }

    fn ramond() -> FockSpace {
        FockSpace::new(Sector::Ramond, Field::Rational)
    }

    fn all_basis(space: &FockSpace, max_degree: u32) -> Vec<FockVector> {
        let mut out = Vec::new();
        for parity in 0..2 {
            for d in 0..=max_degree {
                out.extend(space.basis(parity, d).into_iter().map(|m| space.monomial(m)));
            }
        }
        out
    }

    fn modes(sector: Sector, bound: i64) -> Vec<i64> {
        (-bound..=bound).filter(|&m| sector.admits(m)).collect()
    }

    #[test]
    fn fermion_examples() {
        let s = ns();
        let a = s.word(&[-1], q(1, 1)).unwrap();
        assert_eq!(s.apply_fermion(1, &a).unwrap(), s.vacuum());
        assert!(s.apply_fermion(-1, &a).unwrap().is_zero());
        let r = ramond();
        let a0 = r.word(&[0], q(1, 1)).unwrap();
        assert_eq!(r.apply_fermion(0, &a0).unwrap(), r.vacuum().scale(&q(1, 2)));
        assert!(matches!(s.apply_fermion(0, &a), Err(Error::SectorMismatch(_))));
    }

    #[test]
    fn word_reorders_with_sign() {
        let s = ns();
        let a = s.word(&[-1, -7], q(1, 1)).unwrap();
        let b = s.word(&[-7, -1], q(1, 1)).unwrap();
        assert_eq!(a, b.scale(&q(-1, 1)));
    }

    #[test]
    fn virasoro_examples() {
        let s = ns();
        assert_eq!(
            s.apply_virasoro(-2, &s.vacuum()).unwrap(),
            s.word(&[-3, -1], q(1, 2)).unwrap()
        );
        let r = ramond();
        assert_eq!(r.apply_virasoro(0, &r.vacuum()).unwrap(), r.vacuum().scale(&q(1, 16)));
        let a = s.word(&[-1], q(1, 1)).unwrap();
        assert_eq!(s.apply_virasoro(-1, &a).unwrap(), s.word(&[-3], q(1, 1)).unwrap());
        assert_eq!(s.apply_virasoro(0, &a).unwrap(), a.scale(&q(1, 2)));
        let a0 = r.word(&[0], q(1, 1)).unwrap();
        assert_eq!(r.apply_virasoro(0, &a0).unwrap(), a0.scale(&q(1, 16)));
        assert!(r.apply_virasoro(1, &a0).unwrap().is_zero());
        assert!(r.apply_virasoro(2, &a0).unwrap().is_zero());
    }

    #[test]
    fn sector_dim_examples() {
        assert_eq!(sector_dims(Sector::NS, 0, 4), vec![1, 0, 1, 1, 2]);
        assert_eq!(sector_dims(Sector::NS, 1, 4), vec![1, 1, 1, 1, 2]);
        assert_eq!(sector_dims(Sector::Ramond, 0, 3), vec![1, 1, 1, 2]);
        assert_eq!(sector_dims(Sector::Ramond, 1, 3), vec![1, 1, 1, 2]);
        assert_eq!(ramond().basis(0, 1)[0].to_string(), "a(-1)a(0)");
    }

    #[test]
    fn vir_span_examples() {
        let s = ns();
        assert_eq!(s.vir_span_dims(&s.vacuum(), 4).unwrap(), vec![1, 0, 1, 1, 2]);
        let s7 = FockSpace::new(Sector::NS, Field::Prime(7));
        assert!(s7.vir_span_dims(&s7.vacuum(), 4).unwrap()[4] < 2);
        let r = ramond();
        let a0 = r.word(&[0], q(1, 1)).unwrap();
        assert_eq!(r.vir_span_dims(&a0, 2).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn hw_vector_examples() {
        let f7 = FockSpace::new(Sector::NS, Field::Prime(7));
        let one = Field::Prime(7).one();
        let three = Field::Prime(7).from_int(3);
        let mut v = f7.word(&[-1, -7], one.clone()).unwrap();
        v.add_scaled(&f7.word(&[-3, -5], one.clone()).unwrap(), &-three.clone());
        let found = f7.hw_vectors(0, 4).unwrap();
        assert!(f7.in_span(&found, &v).unwrap());
        assert!(ns().hw_vectors(0, 4).unwrap().is_empty());

        let mut w = f7.word(&[-15], -one.clone()).unwrap();
        w.add_scaled(&f7.word(&[-1, -3, -11], one.clone()).unwrap(), &one);
        w.add_scaled(&f7.word(&[-1, -5, -9], one.clone()).unwrap(), &one);
        w.add_scaled(&f7.word(&[-3, -5, -7], one.clone()).unwrap(), &three);
        assert_eq!(w.degree(), Some(7));
        assert!(f7.in_span(&f7.hw_vectors(1, 7).unwrap(), &w).unwrap());
    }

    #[test]
    fn sigma_examples() {
        let r = ramond();
        assert_eq!(r.sigma(&r.vacuum()).unwrap(), r.word(&[0], q(1, 1)).unwrap());
        let x = r.word(&[-2, 0], q(1, 1)).unwrap();
        assert_eq!(r.sigma(&x).unwrap(), r.word(&[-2], q(1, 2)).unwrap());
        assert!(matches!(
            r.sigma(&r.word(&[0], q(1, 1)).unwrap()),
            Err(Error::ParityMismatch { .. })
        ));
        for v in all_basis(&r, 4) {
            let back = match v.parity() {
                Some(0) => r.sigma_inverse(&r.sigma(&v).unwrap()).unwrap(),
                _ => r.sigma(&r.sigma_inverse(&v).unwrap()).unwrap(),
            };
            assert_eq!(back, v);
        }
    }

    #[test]
    fn form_examples() {
        let s = ns();
        assert_eq!(s.form(&s.vacuum(), &s.vacuum()).unwrap(), q(1, 1));
        let x = s.word(&[-3, -1], q(1, 1)).unwrap();
        assert_eq!(s.form(&x, &x).unwrap(), q(1, 1));
        let l2 = s.apply_virasoro(-2, &s.vacuum()).unwrap();
        let back = s.apply_virasoro(2, &l2).unwrap();
        assert_eq!(s.form(&l2, &l2).unwrap(), s.form(&s.vacuum(), &back).unwrap());
    }

    #[test]
    fn anticommutation() {
        for space in [ns(), ramond()] {
            let ms = modes(space.sector, 9);
            for x in all_basis(&space, 4) {
                for &m in &ms {
                    for &n in &ms {
                        let mut lhs = space.apply_fermion(m, &space.apply_fermion(n, &x).unwrap()).unwrap();
                        lhs.add_scaled(
                            &space.apply_fermion(n, &space.apply_fermion(m, &x).unwrap()).unwrap(),
                            &q(1, 1),
                        );
                        let want = if m + n == 0 {
                            x.clone()
                        } else {
                            FockVector::zero(space.sector)
                        };
                        assert_eq!(lhs, want, "a({m}), a({n}) on {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn virasoro_relations_at_central_charge_one_half() {
        for space in [ns(), ramond()] {
            for x in all_basis(&space, 8) {
                for m in -3..=3i64 {
                    for n in -3..=3i64 {
                        let mut lhs = space.apply_virasoro_word(&[m, n], &x).unwrap();
                        lhs.add_scaled(&space.apply_virasoro_word(&[n, m], &x).unwrap(), &q(-1, 1));
                        let mut rhs = space.apply_virasoro(m + n, &x).unwrap().scale(&q(m - n, 1));
                        if m + n == 0 {
                            rhs.add_scaled(&x, &q(m * m * m - m, 24));
                        }
                        assert_eq!(lhs, rhs, "[L({m}), L({n})] on {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_commutator() {
        for space in [ns(), ramond()] {
            let ms = modes(space.sector, 7);
            for x in all_basis(&space, 4) {
                for p in -3..=3i64 {
                    for &qq in &ms {
                        let mut lhs = space.apply_virasoro(p, &space.apply_fermion(qq, &x).unwrap()).unwrap();
                        lhs.add_scaled(
                            &space.apply_fermion(qq, &space.apply_virasoro(p, &x).unwrap()).unwrap(),
                            &q(-1, 1),
                        );
                        // -(q + p/2) a(p+q), with q doubled
                        let rhs = space.apply_fermion(2 * p + qq, &x).unwrap().scale(&q(-(qq + p), 2));
                        assert_eq!(lhs, rhs, "[L({p}), a({qq}/2)] on {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn contravariance() {
        for space in [ns(), ramond()] {
            let basis = all_basis(&space, 4);
            for u in &basis {
                for v in &basis {
                    for n in -4..=4i64 {
                        let lhs = space.form(&space.apply_virasoro(n, u).unwrap(), v).unwrap();
                        let rhs = space.form(u, &space.apply_virasoro(-n, v).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "L({n}) between {u} and {v}");
                    }
                    for m in modes(space.sector, 9) {
                        let lhs = space.form(&space.apply_fermion(m, u).unwrap(), v).unwrap();
                        let rhs = space.form(u, &space.apply_fermion(-m, v).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "a({m}/2) between {u} and {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_intertwines_fermion_pairs_and_virasoro() {
        let r = ramond();
        let ms = modes(Sector::Ramond, 8);
        for x in all_basis(&r, 4).into_iter().filter(|v| v.parity() == Some(0)) {
            for &s in &ms {
                for &t in ms.iter().filter(|&&t| t < s) {
                    let lhs = r
                        .apply_fermion(s, &r.apply_fermion(t, &r.sigma(&x).unwrap()).unwrap())
                        .unwrap();
                    let rhs = r
                        .sigma(&r.apply_fermion(s, &r.apply_fermion(t, &x).unwrap()).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
            for n in -3..=3 {
                let lhs = r.apply_virasoro(n, &r.sigma(&x).unwrap()).unwrap();
                let rhs = r.sigma(&r.apply_virasoro(n, &x).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s = ns();
        let v = s.apply_virasoro_word(&[-3, -2], &s.vacuum()).unwrap();
        assert_eq!(FockVector::from_json(&v.to_json(), Field::Rational).unwrap(), v);
        assert_eq!(parse_half("-15/2").unwrap(), -15);
        assert_eq!(format_half(-15), "-15/2");
        assert_eq!(format_half(4), "2");
    }

    proptest! {
        #[test]
        fn base_change(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), ramond_sector: bool, word in prop::collection::vec(-3i64..=3, 1..4), fermions in prop::collection::vec(-5i64..=5, 0..3)) {
            let sector = if ramond_sector { Sector::Ramond } else { Sector::NS };
            let fermions: Vec<i64> = fermions.into_iter().map(|m| if sector.admits(m) { m } else { m - 1 }).collect();
            let over_q = FockSpace::new(sector, Field::Rational);
            let over_p = FockSpace::new(sector, Field::Prime(p));
            let x = over_q.word(&fermions, q(1, 1)).unwrap();
            let xp = over_p.word(&fermions, Field::Prime(p).one()).unwrap();
            prop_assert_eq!(x.reduce_mod_p(p).unwrap(), xp.clone());
            let y = over_q.apply_virasoro_word(&word, &x).unwrap();
            let yp = over_p.apply_virasoro_word(&word, &xp).unwrap();
            prop_assert_eq!(y.reduce_mod_p(p).unwrap(), yp);
        }
    }
}
