//! Singular vectors and irreducible graded dimensions.
//!
//! A homogeneous vector is singular when `L(1)` and `L(2)` kill it; these
//! two modes generate every positive mode under brackets. The maximal graded
//! submodule of `V(c,h)` is the radical of the contravariant form, so the
//! irreducible quotient has graded dimensions equal to the Gram ranks.

use serde_json::{json, Value};

use crate::coeffring::{reduce_mod_p, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::virasoro::{ModuleParams, VermaModule, VermaVector};

/// Basis of the singular vectors in one degree.
///
/// Each vector has coefficient 1 on its lexicographically largest monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularBasis {
    pub params: ModuleParams,
    pub degree: u32,
    pub vectors: Vec<VermaVector>,
}

impl SingularBasis {
    pub fn to_json(&self) -> Value {
        json!({
            "c": self.params.c().to_json(),
            "h": self.params.h().to_json(),
            "char": self.params.ring().characteristic(),
            "degree": self.degree,
            "vectors": self.vectors.iter().map(VermaVector::to_json).collect::<Vec<_>>(),
        })
    }
}

/// The joint kernel of `L(1)` and `L(2)` on the degree-`n` slice.
pub fn singular_space(module: &VermaModule, n: u32) -> Result<SingularBasis> {
    let field = module.params().field()?;
    if n == 0 {
        return Err(Error::Invalid("singular vectors have positive degree".into()));
    }
    let basis = module.basis(n);
    let targets: Vec<(i64, Vec<_>)> = [1i64, 2]
        .into_iter()
        .filter(|&m| m as u32 <= n)
        .map(|m| (m, module.basis(n - m as u32)))
        .collect();
    let zero = field.zero();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (m, target) in &targets {
        let images: Vec<VermaVector> = basis.iter().map(|p| module.apply_to_monomial(*m, p)).collect();
        for q in target {
            rows.push(
                images
                    .iter()
                    .map(|img| img.coeff(q).cloned().unwrap_or_else(|| zero.clone()))
                    .collect(),
            );
        }
    }
    let matrix = Matrix::from_rows(field, basis.len(), rows);
    let vectors = matrix
        .nullspace()
        .into_iter()
        .map(|x| {
            let mut v = VermaVector::zero();
            for (p, c) in basis.iter().zip(x) {
                v.add_term(p.clone(), c);
            }
            v
        })
        .collect();
    Ok(SingularBasis {
        params: module.params().clone(),
        degree: n,
        vectors,
    })
}

/// Whether `L(1)` and `L(2)` both annihilate the homogeneous vector `vec`.
pub fn is_singular(module: &VermaModule, vec: &VermaVector) -> Result<bool> {
    if vec.is_zero() {
        return Err(Error::ZeroVector);
    }
    if vec.degree().is_none() {
        return Err(Error::Invalid("vector is not homogeneous".into()));
    }
    Ok(module.apply_mode(1, vec).is_zero() && module.apply_mode(2, vec).is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterRow {
    pub degree: u32,
    pub verma: usize,
    pub radical: usize,
    pub irreducible: usize,
}

/// Graded dimensions of the module, its maximal submodule, and the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub params: ModuleParams,
    pub rows: Vec<CharacterRow>,
}

impl CharacterTable {
    pub fn irreducible(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.irreducible).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "c": self.params.c().to_json(),
            "h": self.params.h().to_json(),
            "char": self.params.ring().characteristic(),
            "rows": self.rows.iter().map(|r| json!({
                "degree": r.degree,
                "verma": r.verma,
                "radical": r.radical,
                "irreducible": r.irreducible,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Gram ranks in degrees `0..=max`.
pub fn irreducible_dims(module: &VermaModule, max: u32) -> Result<CharacterTable> {
    module.params().field()?;
    let mut rows = Vec::with_capacity(max as usize + 1);
    for n in 0..=max {
        let g = module.gram_matrix(n);
        let verma = g.basis.len();
        let irreducible = g.rank()?;
        rows.push(CharacterRow {
            degree: n,
            verma,
            radical: verma - irreducible,
            irreducible,
        });
    }
    Ok(CharacterTable {
        params: module.params().clone(),
        rows,
    })
}

/// Basis of the degree-`n` slice of the maximal graded submodule.
pub fn radical(module: &VermaModule, n: u32) -> Result<Vec<VermaVector>> {
    module.gram_matrix(n).radical()
}

/// Degree-`n` slice of the submodule generated by homogeneous `generators`:
/// all `L(-k1)...L(-kj) g` of total degree `n`.
pub fn generated_slice(module: &VermaModule, generators: &[VermaVector], n: u32) -> Vec<VermaVector> {
    let mut out = Vec::new();
    for g in generators {
        let Some(d) = g.degree() else { continue };
        if d > n {
            continue;
        }
        for word in module.basis(n - d) {
            let modes: Vec<i64> = word.parts().iter().map(|&k| -(k as i64)).collect();
            let image = module.apply_word(&modes, g);
            if !image.is_zero() {
                out.push(image);
            }
        }
    }
    out
}

/// Dimension of the span of homogeneous degree-`n` vectors.
pub fn span_dim(module: &VermaModule, vectors: &[VermaVector], n: u32) -> Result<usize> {
    let field = module.params().field()?;
    let basis = module.basis(n);
    let zero = field.zero();
    let rows: Vec<Vec<Scalar>> = vectors
        .iter()
        .map(|v| {
            basis
                .iter()
                .map(|p| v.coeff(p).cloned().unwrap_or_else(|| zero.clone()))
                .collect()
        })
        .collect();
    Ok(crate::linalg::rank_of(field, basis.len(), &rows))
}

/// Entrywise reduction of a rational vector; terms that vanish mod `p` are dropped.
pub fn reduce_vector_mod_p(vec: &VermaVector, p: u64) -> Result<VermaVector> {
    vec.map_coeffs(|c| reduce_mod_p(c, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::Field;

    fn module(c: &str, h: &str, field: Field) -> VermaModule {
        VermaModule::new(ModuleParams::parse(c, h, field).unwrap())
    }

    fn vector(field: Field, terms: &[(&[u32], &str)]) -> VermaVector {
        VermaVector::from_terms(terms.iter().map(|(p, c)| (p.to_vec(), field.parse(c).unwrap()))).unwrap()
    }

    #[test]
    fn degree_two_singular_vector_at_one_half() {
        let m = module("1/2", "1/2", Field::Rational);
        let got = singular_space(&m, 2).unwrap();
        let want = vector(Field::Rational, &[(&[2], "4"), (&[1, 1], "-3")])
            .normalized()
            .unwrap();
        assert_eq!(got.vectors, vec![want]);
    }

    #[test]
    fn no_degree_two_singular_vector_in_vacuum_verma() {
        let m = module("1/2", "0", Field::Rational);
        assert!(singular_space(&m, 2).unwrap().vectors.is_empty());
        assert!(singular_space(&m, 3).unwrap().vectors.is_empty());
    }

    #[test]
    fn is_singular_examples() {
        let m = module("1/2", "0", Field::Rational);
        assert!(is_singular(&m, &m.monomial(&[1]).unwrap()).unwrap());
        assert!(!is_singular(&m, &m.monomial(&[2]).unwrap()).unwrap());
        assert_eq!(is_singular(&m, &VermaVector::zero()), Err(Error::ZeroVector));
        let m = module("1/2", "1/2", Field::Rational);
        let v = vector(Field::Rational, &[(&[1, 1, 1], "1"), (&[2, 1], "-3"), (&[3], "3/4")]);
        assert!(is_singular(&m, &v).unwrap());
    }

    #[test]
    fn formal_weight_is_rejected() {
        let m = module("1/2", "h", Field::Rational);
        assert!(matches!(singular_space(&m, 1), Err(Error::NotAField(_))));
    }

    #[test]
    fn irreducible_dims_small() {
        let m = module("1/2", "0", Field::Rational);
        assert_eq!(irreducible_dims(&m, 4).unwrap().irreducible(), vec![1, 0, 1, 1, 2]);
        let m = module("1/2", "1/2", Field::Rational);
        assert_eq!(irreducible_dims(&m, 4).unwrap().irreducible(), vec![1, 1, 1, 1, 2]);
        let m = module("1/2", "0", Field::Prime(7));
        assert!(irreducible_dims(&m, 4).unwrap().irreducible()[4] < 2);
    }

    #[test]
    fn singular_vectors_up_to_eight_come_from_two_generators() {
        for (h, degrees) in [("0", [1, 6]), ("1/2", [2, 3]), ("1/16", [2, 4])] {
            let m = module("1/2", h, Field::Rational);
            let mut generators = Vec::new();
            for n in 1..=8 {
                let basis = singular_space(&m, n).unwrap();
                let inherited = generated_slice(&m, &generators, n);
                let below = span_dim(&m, &inherited, n).unwrap();
                let mut all = inherited.clone();
                all.extend(basis.vectors.iter().cloned());
                let new = span_dim(&m, &all, n).unwrap() - below;
                assert_eq!(new, usize::from(degrees.contains(&n)), "h = {h}, degree {n}");
                if new > 0 {
                    generators.extend(basis.vectors.iter().cloned());
                }
                for w in &basis.vectors {
                    for k in 1..=n as i64 {
                        assert!(m.apply_mode(k, w).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn radical_is_a_submodule() {
        for (h, field) in [
            ("0", Field::Rational),
            ("1/16", Field::Rational),
            ("0", Field::Prime(7)),
        ] {
            let m = module("1/2", h, field);
            for n in 0..=5 {
                for r in radical(&m, n).unwrap() {
                    for k in 1..=3 {
                        let image = m.apply_mode(-k, &r);
                        assert!(m.gram_matrix(n + k as u32).annihilates(&image).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn char_seven_identity() {
        let f7 = Field::Prime(7);
        let m = VermaModule::new(ModuleParams::vacuum(f7.parse("1/2").unwrap()));
        let u = vector(f7, &[(&[2, 2], "1"), (&[4], "-2")]);
        assert!(is_singular(&m, &u).unwrap());
        assert_eq!(singular_space(&m, 4).unwrap().vectors, vec![u.normalized().unwrap()]);
        let lifted = &m.apply_mode(-2, &u) + &m.apply_word(&[-1, -1], &u);
        let s = vector(
            Field::Rational,
            &[(&[2, 2, 2], "64"), (&[3, 3], "93"), (&[4, 2], "-264"), (&[6], "-108")],
        );
        assert_eq!(lifted, reduce_vector_mod_p(&s, 7).unwrap());
    }

    #[test]
    fn reduction_examples() {
        let s = vector(
            Field::Rational,
            &[(&[2, 2, 2], "64"), (&[3, 3], "93"), (&[4, 2], "-264"), (&[6], "-108")],
        );
        let want = vector(
            Field::Prime(7),
            &[(&[2, 2, 2], "1"), (&[3, 3], "2"), (&[4, 2], "2"), (&[6], "4")],
        );
        assert_eq!(reduce_vector_mod_p(&s, 7).unwrap(), want);
        let v = vector(Field::Rational, &[(&[3], "3/4"), (&[2, 1], "1")]);
        assert_eq!(
            reduce_vector_mod_p(&v, 3).unwrap(),
            vector(Field::Prime(3), &[(&[2, 1], "1")])
        );
        let w = vector(Field::Rational, &[(&[3], "1/3")]);
        assert!(matches!(
            reduce_vector_mod_p(&w, 3),
            Err(Error::DenominatorDivisibleByP { .. })
        ));
    }
}
