//! Dense matrices over the scalar ring: Kronecker products, tensor-leg
//! embeddings, the flip operator, exact nilpotent exponentials and exact
//! inverses.
//!
//! Tensor index convention: the `(i,j)`-th basis vector of `d ⊗ d` is
//! `e_i ⊗ e_j` at flat index `d*(i-1) + j` (1-based), i.e. row-major.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::scalar::{Bindings, Polynomial, RationalFunction, ScalarError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatrixError {
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    NotSquare { rows: usize, cols: usize },
    Singular,
    NotNilpotent { bound: usize },
    BadLegs,
    Scalar(ScalarError),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, square required")
            }
            MatrixError::Singular => f.write_str("matrix is singular"),
            MatrixError::NotNilpotent { bound } => {
                write!(f, "nilpotency not reached within bound {bound}")
            }
            MatrixError::BadLegs => f.write_str("legs must be a distinct pair from {1,2,3}"),
            MatrixError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MatrixError {}

impl From<ScalarError> for MatrixError {
    fn from(e: ScalarError) -> Self {
        MatrixError::Scalar(e)
    }
}

/// Dense matrix of rational functions, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ParamMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl ParamMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch {
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(ParamMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ParamMatrix {
            rows,
            cols,
            entries: alloc::vec![RationalFunction::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ParamMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalFunction::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(ParamMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(ParamMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn neg(&self) -> Self {
        ParamMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(RationalFunction::neg).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        ParamMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = ParamMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self, MatrixError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = ParamMatrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Entrywise substitution.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Self, MatrixError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.substitute(bindings))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ParamMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// True when every entry is a polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.entries.iter().all(RationalFunction::is_polynomial)
    }

    /// Exact exponential of a nilpotent matrix: sum of `M^i/i!` for `i < k`
    /// where `M^k = 0` with `k <= bound`.
    pub fn nilpotent_exp(&self, bound: usize) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = ParamMatrix::identity(self.rows);
        let mut power = ParamMatrix::identity(self.rows);
        let mut factorial = BigRational::one();
        for i in 1..=bound {
            power = power.mul(self)?;
            if power.is_zero() {
                return Ok(acc);
            }
            factorial *= BigRational::from_integer(BigInt::from(i));
            let inv = RationalFunction::from_rational(BigRational::one() / &factorial);
            acc = acc.add(&power.scale(&inv))?;
        }
        Err(MatrixError::NotNilpotent { bound })
    }

    /// Exponential with the default bound (the dimension).
    pub fn exp_nilpotent(&self) -> Result<Self, MatrixError> {
        self.nilpotent_exp(self.rows.max(self.cols))
    }

    /// Exact inverse by fraction-free (Bareiss) elimination with final division.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        // clear denominators row by row: row_i * lcm(dens) keeps the system
        // equivalent if the same factor multiplies the RHS row
        let mut a: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
        let mut b: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = Polynomial::one();
            for j in 0..n {
                lcm = lcm.lcm(self.get(i, j).denominator());
            }
            let row_a = (0..n)
                .map(|j| {
                    let e = self.get(i, j);
                    e.numerator()
                        .mul(&lcm.exact_div(e.denominator()).expect("lcm divisible"))
                })
                .collect::<Vec<_>>();
            let mut row_b = alloc::vec![Polynomial::zero(); n];
            row_b[i] = lcm;
            a.push(row_a);
            b.push(row_b);
        }
        // fraction-free forward elimination
        let mut prev = Polynomial::one();
        for col in 0..n {
            // pivot: first row with nonzero entry in this column
            let pivot_row = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(MatrixError::Singular)?;
            a.swap(col, pivot_row);
            b.swap(col, pivot_row);
            let pa = a[col].clone();
            let pb = b[col].clone();
            for r in col + 1..n {
                let factor = a[r][col].clone();
                for c in 0..n {
                    a[r][c] = pa[col]
                        .mul(&a[r][c])
                        .sub(&factor.mul(&pa[c]))
                        .exact_div(&prev)
                        .expect("Bareiss divisibility");
                    b[r][c] = pa[col]
                        .mul(&b[r][c])
                        .sub(&factor.mul(&pb[c]))
                        .exact_div(&prev)
                        .expect("Bareiss divisibility");
                }
            }
            prev = pa[col].clone();
        }
        // back substitution over the fraction field
        let mut inv = ParamMatrix::zeros(n, n);
        for rhs_col in 0..n {
            let mut x = alloc::vec![RationalFunction::zero(); n];
            for i in (0..n).rev() {
                let mut acc = RationalFunction::from_poly(b[i][rhs_col].clone());
                for j in i + 1..n {
                    acc = acc.sub(&RationalFunction::from_poly(a[i][j].clone()).mul(&x[j]));
                }
                x[i] = acc
                    .div(&RationalFunction::from_poly(a[i][i].clone()))
                    .map_err(|_| MatrixError::Singular)?;
            }
            for i in 0..n {
                inv.set(i, rhs_col, x[i].clone());
            }
        }
        Ok(inv)
    }
}

/// The flip `P` on `d ⊗ d`: `P(u ⊗ v) = v ⊗ u`.
pub fn flip_matrix(d: usize) -> ParamMatrix {
    let mut p = ParamMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            p.set(j * d + i, i * d + j, RationalFunction::one());
        }
    }
    p
}

/// Embeds an operator on `d ⊗ d` into the stated pair of legs of `d ⊗ d ⊗ d`.
pub fn leg_embed(a: &ParamMatrix, legs: (usize, usize), d: usize) -> Result<ParamMatrix, MatrixError> {
    if a.rows() != d * d || a.cols() != d * d {
        return Err(MatrixError::DimensionMismatch {
            left: (a.rows(), a.cols()),
            right: (d * d, d * d),
        });
    }
    let (l1, l2) = legs;
    if l1 == l2 || !(1..=3).contains(&l1) || !(1..=3).contains(&l2) {
        return Err(MatrixError::BadLegs);
    }
    let dim = d * d * d;
    let mut out = ParamMatrix::zeros(dim, dim);
    let idx = |flat: usize| -> [usize; 3] {
        [flat / (d * d), (flat / d) % d, flat % d]
    };
    for row in 0..dim {
        let ri = idx(row);
        for col in 0..dim {
            let ci = idx(col);
            let mut ok = true;
            for k in 0..3 {
                if k + 1 != l1 && k + 1 != l2 && ri[k] != ci[k] {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let v = a.get(ri[l1 - 1] * d + ri[l2 - 1], ci[l1 - 1] * d + ci[l2 - 1]);
            if !v.is_zero() {
                out.set(row, col, v.clone());
            }
        }
    }
    Ok(out)
}

impl fmt::Debug for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Symbol;

    fn sym(n: &str) -> RationalFunction {
        RationalFunction::symbol(Symbol::new(n))
    }

    fn e12() -> ParamMatrix {
        let mut m = ParamMatrix::zeros(2, 2);
        m.set(0, 1, RationalFunction::one());
        m
    }

    #[test]
    fn kron_identity_and_e12() {
        let i2 = ParamMatrix::identity(2);
        assert_eq!(i2.kron(&i2), ParamMatrix::identity(4));
        let k = e12().kron(&i2);
        // ones at (1,3) and (2,4) in 1-based indexing
        assert!(k.get(0, 2).is_one());
        assert!(k.get(1, 3).is_one());
        let nonzero = k.entries().iter().filter(|e| !e.is_zero()).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn flip_properties() {
        let p = flip_matrix(2);
        assert!(p.get(0, 0).is_one());
        assert!(p.get(1, 2).is_one());
        assert!(p.get(2, 1).is_one());
        assert!(p.get(3, 3).is_one());
        assert_eq!(p.mul(&p).unwrap(), ParamMatrix::identity(4));
    }

    #[test]
    fn flip_conjugates_kron() {
        // P * (A kron B) * P = B kron A for symbolic 2x2 matrices
        let names = ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"];
        let a = ParamMatrix::new(2, 2, names[..4].iter().map(|n| sym(n)).collect()).unwrap();
        let b = ParamMatrix::new(2, 2, names[4..].iter().map(|n| sym(n)).collect()).unwrap();
        let p = flip_matrix(2);
        let lhs = p.mul(&a.kron(&b)).unwrap().mul(&p).unwrap();
        assert_eq!(lhs, b.kron(&a));
    }

    #[test]
    fn leg_embed_identity_and_flip() {
        let i4 = ParamMatrix::identity(4);
        assert_eq!(leg_embed(&i4, (1, 2), 2).unwrap(), ParamMatrix::identity(8));
        // P embedded on legs (1,3) permutes factors 1 and 3 on all 8 basis vectors
        let p13 = leg_embed(&flip_matrix(2), (1, 3), 2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let from = a * 4 + b * 2 + c;
                    let to = c * 4 + b * 2 + a;
                    assert!(p13.get(to, from).is_one(), "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn leg_embed_13_is_q_conjugation() {
        let names = ["x0", "x1", "x2", "x3"];
        let mut a = ParamMatrix::zeros(4, 4);
        for (k, n) in names.iter().enumerate() {
            a.set(k, (k + 1) % 4, sym(n));
        }
        let direct = leg_embed(&a, (1, 3), 2).unwrap();
        // Q exchanges legs 2 and 3
        let q = leg_embed(&flip_matrix(2), (2, 3), 2).unwrap();
        let via_q = q
            .mul(&leg_embed(&a, (1, 2), 2).unwrap())
            .unwrap()
            .mul(&q)
            .unwrap();
        assert_eq!(direct, via_q);
    }

    #[test]
    fn nilpotent_exp_basics() {
        let z = ParamMatrix::zeros(2, 2);
        assert_eq!(z.exp_nilpotent().unwrap(), ParamMatrix::identity(2));
        // exp(2h e12) = I + 2h e12
        let m = e12().scale(&sym("h").scale_int(2));
        let e = m.exp_nilpotent().unwrap();
        assert_eq!(e, ParamMatrix::identity(2).add(&m).unwrap());
        // exp(M) exp(-M) = I
        assert_eq!(
            e.mul(&m.neg().exp_nilpotent().unwrap()).unwrap(),
            ParamMatrix::identity(2)
        );
    }

    #[test]
    fn nilpotent_exp_rejects_non_nilpotent() {
        let i2 = ParamMatrix::identity(2);
        assert_eq!(i2.exp_nilpotent(), Err(MatrixError::NotNilpotent { bound: 2 }));
    }

    #[test]
    fn inverse_exact() {
        assert_eq!(ParamMatrix::identity(4).inverse().unwrap(), ParamMatrix::identity(4));
        // generic symbolic 2x2
        let a = ParamMatrix::new(2, 2, ["p", "q", "r", "t"].iter().map(|n| sym(n)).collect())
            .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ParamMatrix::identity(2));
        assert_eq!(inv.mul(&a).unwrap(), ParamMatrix::identity(2));
    }

    #[test]
    fn inverse_singular() {
        let mut m = ParamMatrix::zeros(2, 2);
        m.set(0, 0, sym("h"));
        m.set(1, 0, sym("h"));
        assert_eq!(m.inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn mixed_product_property() {
        let names: Vec<RationalFunction> =
            (0..16).map(|k| sym(&alloc::format!("v{k}"))).collect();
        let a = ParamMatrix::new(2, 2, names[0..4].to_vec()).unwrap();
        let b = ParamMatrix::new(2, 2, names[4..8].to_vec()).unwrap();
        let c = ParamMatrix::new(2, 2, names[8..12].to_vec()).unwrap();
        let d = ParamMatrix::new(2, 2, names[12..16].to_vec()).unwrap();
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        assert_eq!(lhs, rhs);
    }
}
