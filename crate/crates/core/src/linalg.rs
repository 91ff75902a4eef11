//! Dense exact linear algebra over `Q` and `F_p`.
//!
//! Rational matrices are scaled row-wise to integers and reduced with
//! fraction-free (Bareiss) elimination, so intermediate entries stay minors
//! of the input instead of growing as nested fractions. Prime-field matrices
//! use ordinary elimination on machine words.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeffring::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Row echelon form: `rows[k]` has its first nonzero entry in column `pivots[k]`.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    swaps: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            field,
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(x).fold(self.field.zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect()
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Result<Scalar>, field: Field) -> Result<Matrix> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => bareiss(self.integer_rows()).pivots.len(),
            Field::Prime(p) => modular_echelon(self.residue_rows(), p).pivots.len(),
        }
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    ///
    /// One vector per non-pivot column `f`: it has a 1 in position `f`, zero in
    /// every other non-pivot column, and is supported on `f` and pivot columns
    /// left of `f`. The basis is therefore canonical, and `f` is the last
    /// nonzero position of its vector.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        match self.field {
            Field::Rational => {
                let ech = bareiss(self.integer_rows());
                let rows: Vec<Vec<BigRational>> = ech
                    .rows
                    .iter()
                    .take(ech.pivots.len())
                    .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
                    .collect();
                back_substitute(
                    &rows,
                    &ech.pivots,
                    self.cols,
                    BigRational::zero(),
                    BigRational::one(),
                    |a, b| a / b,
                )
                .into_iter()
                .map(|v| v.into_iter().map(Scalar::Rational).collect())
                .collect()
            }
            Field::Prime(p) => {
                let ech = modular_echelon(self.residue_rows(), p);
                let rows = &ech.rows[..ech.pivots.len()];
                let div = |a: &u64, b: &u64| -> u64 { mulm(*a, inv_mod(*b, p), p) };
                let sols = back_substitute_mod(rows, &ech.pivots, self.cols, p, div);
                sols.into_iter()
                    .map(|v| v.into_iter().map(|value| Scalar::Prime { value, p }).collect())
                    .collect()
            }
        }
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::Invalid(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.field.one());
        }
        match self.field {
            Field::Rational => {
                let scales: Vec<BigInt> = (0..n).map(|i| row_denominator_lcm(self.row(i))).collect();
                let ech = bareiss(self.integer_rows());
                if ech.pivots.len() < n {
                    return Ok(self.field.zero());
                }
                let mut det = BigRational::from_integer(ech.rows[n - 1][n - 1].clone());
                for s in scales {
                    det /= BigRational::from_integer(s);
                }
                if ech.swaps % 2 == 1 {
                    det = -det;
                }
                Ok(Scalar::Rational(det))
            }
            Field::Prime(p) => {
                let ech = modular_echelon(self.residue_rows(), p);
                if ech.pivots.len() < n {
                    return Ok(self.field.zero());
                }
                let mut det = (0..n).fold(1u64, |acc, i| mulm(acc, ech.rows[i][i], p));
                if ech.swaps % 2 == 1 {
                    det = (p - det) % p;
                }
                Ok(Scalar::Prime { value: det, p })
            }
        }
    }

    /// A basis of the row space, in echelon form.
    pub fn row_space_basis(&self) -> Vec<Vec<Scalar>> {
        match self.field {
            Field::Rational => {
                let ech = bareiss(self.integer_rows());
                ech.rows
                    .into_iter()
                    .take(ech.pivots.len())
                    .map(|row| {
                        let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                        row.into_iter()
                            .map(|x| Scalar::Rational(BigRational::from_integer(x / &g)))
                            .collect()
                    })
                    .collect()
            }
            Field::Prime(p) => {
                let ech = modular_echelon(self.residue_rows(), p);
                ech.rows
                    .into_iter()
                    .take(ech.pivots.len())
                    .map(|row| row.into_iter().map(|value| Scalar::Prime { value, p }).collect())
                    .collect()
            }
        }
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row_denominator_lcm(row);
                row.iter()
                    .map(|x| {
                        let q = rational(x);
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect()
    }

    fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| match x {
                        Scalar::Prime { value, .. } => *value,
                        other => panic!("non-residue {other} in a matrix over {}", self.field),
                    })
                    .collect()
            })
            .collect()
    }
}

fn rational(x: &Scalar) -> &BigRational {
    x.as_rational()
        .unwrap_or_else(|| panic!("non-rational entry {x} in a rational matrix"))
}

fn row_denominator_lcm(row: &[Scalar]) -> BigInt {
    row.iter().fold(BigInt::one(), |l, x| l.lcm(rational(x).denom()))
}

fn bareiss(mut m: Vec<Vec<BigInt>>) -> Echelon<BigInt> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(i) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if i != r {
            m.swap(i, r);
            swaps += 1;
        }
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let num = pivot * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "inexact Bareiss division");
                row[j] = num / &prev;
            }
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: m, pivots, swaps }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Row echelon form by ordinary elimination mod `p`.
fn modular_echelon(mut m: Vec<Vec<u64>>, p: u64) -> Echelon<u64> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(i) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if i != r {
            m.swap(i, r);
            swaps += 1;
        }
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let inv = inv_mod(pivot_row[c], p);
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let factor = mulm(row[c], inv, p);
            for j in c..ncols {
                row[j] = (row[j] + p - mulm(factor, pivot_row[j], p)) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: m, pivots, swaps }
}

fn back_substitute<T>(
    rows: &[Vec<T>],
    pivots: &[usize],
    ncols: usize,
    zero: T,
    one: T,
    div: impl Fn(&T, &T) -> T,
) -> Vec<Vec<T>>
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T> + std::ops::Sub<&'a T, Output = T>,
    T: Clone + Zero,
{
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![zero.clone(); ncols];
            x[f] = one.clone();
            for (row, &pc) in rows.iter().zip(pivots).rev() {
                let mut acc = zero.clone();
                for j in pc + 1..ncols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc = &acc - &(&row[j] * &x[j]);
                    }
                }
                x[pc] = div(&acc, &row[pc]);
            }
            x
        })
        .collect()
}

fn back_substitute_mod(
    rows: &[Vec<u64>],
    pivots: &[usize],
    ncols: usize,
    p: u64,
    div: impl Fn(&u64, &u64) -> u64,
) -> Vec<Vec<u64>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0u64; ncols];
            x[f] = 1;
            for (row, &pc) in rows.iter().zip(pivots).rev() {
                let mut acc = 0u64;
                for j in pc + 1..ncols {
                    acc = (acc + p - mulm(row[j], x[j], p)) % p;
                }
                x[pc] = div(&acc, &row[pc]);
            }
            x
        })
        .collect()
}

/// Rank of a list of vectors of equal length.
pub fn rank_of(field: Field, cols: usize, vectors: &[Vec<Scalar>]) -> usize {
    Matrix::from_rows(field, cols, vectors.to_vec()).rank()
}
