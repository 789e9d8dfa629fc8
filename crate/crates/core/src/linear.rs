//! Vectors and subspaces over an exact field.
//!
//! A [`Subspace`] is stored by its reduced row-echelon basis, so two
//! subspaces are equal as sets exactly when their stored bases are equal.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(field: Field, dim: usize) -> Vector {
        Vector {
            field,
            coords: vec![field.zero(); dim],
        }
    }

    /// The `i`-th standard basis vector, 0-based.
    pub fn unit(field: Field, dim: usize, i: usize) -> Vector {
        let mut v = Vector::zero(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn new(field: Field, coords: Vec<Scalar>) -> Result<Vector> {
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(Vector { field, coords })
    }

    pub fn from_ints(field: Field, coords: &[i64]) -> Vector {
        Vector {
            field,
            coords: coords.iter().map(|&c| field.from_int(c)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        self.check_conformal(other);
        if c.is_zero() {
            return;
        }
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            if !y.is_zero() {
                *x = &*x + &(c * y);
            }
        }
    }

    pub(crate) fn conforms(&self, field: Field, dim: usize) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch {
                expected: field,
                found: self.field,
            });
        }
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }

    #[track_caller]
    fn check_conformal(&self, other: &Vector) {
        assert_eq!(self.field, other.field, "vectors over different fields");
        assert_eq!(self.dim(), other.dim(), "vectors of different length");
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&self.field.one(), rhs);
        out
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&-self.field.one(), rhs);
        out
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        self.scale(&-self.field.one())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Reduces `rows` in place to reduced row-echelon form and drops zero rows.
fn rref(mut rows: Vec<Vec<Scalar>>, width: usize) -> Vec<Vec<Scalar>> {
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == rows.len() {
            break;
        }
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(found, pivot_row);
        let inv = rows[pivot_row][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[pivot_row].iter_mut().skip(col) {
                *x = &*x * &inv;
            }
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..width {
                if !pivot[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &pivot[c]);
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    debug_assert!(rows.iter().all(|r| r.iter().any(|x| !x.is_zero())));
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    /// Reduced row-echelon rows; pivot columns strictly increase.
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace {
            field,
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| Vector::unit(field, ambient_dim, i))
                .collect(),
        }
    }

    /// Canonical basis of the span of `vectors`.
    pub fn span<'a, I>(field: Field, ambient_dim: usize, vectors: I) -> Result<Subspace>
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            v.conforms(field, ambient_dim)?;
            if !v.is_zero() {
                rows.push(v.coords.clone());
            }
        }
        Ok(Subspace::from_rows(field, ambient_dim, rows))
    }

    /// Span of vectors already known to conform.
    pub(crate) fn span_owned(field: Field, ambient_dim: usize, vectors: Vec<Vector>) -> Subspace {
        let rows = vectors
            .into_iter()
            .filter(|v| !v.is_zero())
            .map(|v| {
                debug_assert!(v.conforms(field, ambient_dim).is_ok());
                v.coords
            })
            .collect();
        Subspace::from_rows(field, ambient_dim, rows)
    }

    fn from_rows(field: Field, ambient_dim: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        let basis = rref(rows, ambient_dim)
            .into_iter()
            .map(|coords| Vector { field, coords })
            .collect();
        Subspace {
            field,
            ambient_dim,
            basis,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.sum_of(other))
    }

    pub(crate) fn sum_of(&self, other: &Subspace) -> Subspace {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let rows = self
            .basis
            .iter()
            .chain(&other.basis)
            .map(|v| v.coords.clone())
            .collect();
        Subspace::from_rows(self.field, self.ambient_dim, rows)
    }

    /// Intersection by the Zassenhaus construction: row-reduce `[u | u]` and
    /// `[v | 0]`; rows with vanishing left half span the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(self.intersect_of(other))
    }

    pub(crate) fn intersect_of(&self, other: &Subspace) -> Subspace {
        let n = self.ambient_dim;
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, n);
        }
        let zero = self.field.zero();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            rows.push(u.coords.iter().chain(&u.coords).cloned().collect());
        }
        for v in &other.basis {
            rows.push(
                v.coords
                    .iter()
                    .cloned()
                    .chain(std::iter::repeat_n(zero.clone(), n))
                    .collect(),
            );
        }
        let reduced = rref(rows, 2 * n);
        let meet = reduced
            .into_iter()
            .filter(|row| row[..n].iter().all(Scalar::is_zero))
            .map(|row| row[n..].to_vec())
            .collect();
        Subspace::from_rows(self.field, n, meet)
    }

    /// Residual of `v` after eliminating against the echelon basis.
    fn residual(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for b in &self.basis {
            let pivot = b
                .coords
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if !r.coords[pivot].is_zero() {
                let c = -&r.coords[pivot];
                r.add_scaled(&c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        v.conforms(self.field, self.ambient_dim)?;
        Ok(self.contains_vector(v))
    }

    pub(crate) fn contains_vector(&self, v: &Vector) -> bool {
        self.residual(v).is_zero()
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.included_in(other))
    }

    pub(crate) fn included_in(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.basis.iter().all(|b| other.contains_vector(b))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}
