//! Leibniz algebras given by structure constants.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{Subspace, Vector};
use crate::scalar::{Field, Scalar};

/// A finite-dimensional algebra with bracket `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Basis indices are 1-based in every public constructor and accessor that
/// talks about `e_i`, matching the usual `e1, …, en` naming.
#[derive(Clone, Debug)]
pub struct AlgebraDef {
    name: String,
    dim: usize,
    field: Field,
    /// Nonzero constants keyed by 0-based `(i, j, k)`.
    constants: BTreeMap<(usize, usize, usize), Scalar>,
    /// `table[i * dim + j] = [e_i, e_j]`.
    table: Vec<Vector>,
    validated: bool,
}

impl AlgebraDef {
    /// Builds an algebra from 1-based `(i, j, k, c)` triples. Repeated
    /// positions are summed; zero constants are dropped.
    pub fn new<I>(name: impl Into<String>, dim: usize, field: Field, constants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        if dim == 0 {
            return Err(Error::EmptyAlgebra);
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        let mut sparse: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, j, k, c) in constants {
            if !(1..=dim).contains(&i) || !(1..=dim).contains(&j) || !(1..=dim).contains(&k) {
                return Err(Error::IndexOutOfRange { i, j, k, dim });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
            let slot = sparse
                .entry((i - 1, j - 1, k - 1))
                .or_insert_with(|| field.zero());
            *slot = &*slot + &c;
        }
        sparse.retain(|_, c| !c.is_zero());

        let mut table = vec![Vector::zero(field, dim); dim * dim];
        for (&(i, j, k), c) in &sparse {
            table[i * dim + j].add_scaled(c, &Vector::unit(field, dim, k));
        }
        Ok(AlgebraDef {
            name: name.into(),
            dim,
            field,
            constants: sparse,
            table,
            validated: false,
        })
    }

    /// The abelian algebra of dimension `dim`.
    pub fn abelian(dim: usize, field: Field) -> Result<Self> {
        AlgebraDef::new(format!("abelian{dim}"), dim, field, [])
    }

    /// Checks the right Leibniz identity and marks the algebra validated.
    pub fn validate(mut self) -> Result<Self> {
        let report = verify_right_leibniz(&self);
        if !report.is_valid() {
            return Err(Error::NotLeibniz {
                name: self.name.clone(),
                failures: report.failures.len() + report.derived_failures.len(),
            });
        }
        self.validated = true;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Nonzero constants as 1-based `(i, j, k, c)`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.constants
            .iter()
            .map(|(&(i, j, k), c)| (i + 1, j + 1, k + 1, c))
    }

    /// Basis vector `e_i`, 1-based.
    pub fn e(&self, i: usize) -> Vector {
        assert!((1..=self.dim).contains(&i), "basis index {i} out of range");
        Vector::unit(self.field, self.dim, i - 1)
    }

    pub fn vector(&self, coords: &[i64]) -> Result<Vector> {
        let v = Vector::from_ints(self.field, coords);
        v.conforms(self.field, self.dim)?;
        Ok(v)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn whole_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn span(&self, vectors: &[Vector]) -> Result<Subspace> {
        Subspace::span(self.field, self.dim, vectors)
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        x.conforms(self.field, self.dim)?;
        y.conforms(self.field, self.dim)?;
        Ok(self.bracket_of(x, y))
    }

    pub(crate) fn bracket_of(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.field, self.dim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * yj), &self.table[i * self.dim + j]);
            }
        }
        out
    }

    fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    /// `U·V`: span of all brackets of basis vectors of `U` with those of `V`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        for s in [u, v] {
            self.check_subspace(s)?;
        }
        Ok(self.product_of(u, v))
    }

    pub(crate) fn product_of(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let products = u
            .basis()
            .iter()
            .flat_map(|a| v.basis().iter().map(move |b| (a, b)))
            .map(|(a, b)| self.bracket_of(a, b))
            .collect();
        Subspace::span_owned(self.field, self.dim, products)
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: s.field(),
            });
        }
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Result<IdealHandle<'_>> {
        self.check_subspace(s)?;
        Ok(IdealHandle {
            algebra: self,
            space: self.closure_of(s),
        })
    }

    /// Iterates `I ← I + I·L + L·I`. Each non-final round raises the
    /// dimension, so at most `dim + 1` rounds run.
    pub(crate) fn closure_of(&self, s: &Subspace) -> Subspace {
        let whole = self.whole_space();
        let mut current = s.clone();
        for _ in 0..=self.dim {
            let next = current
                .sum_of(&self.product_of(&current, &whole))
                .sum_of(&self.product_of(&whole, &current));
            if next.dim() == current.dim() {
                return current;
            }
            assert!(next.dim() > current.dim());
            current = next;
        }
        unreachable!("ideal closure did not stabilize within dim + 1 rounds")
    }

    pub(crate) fn is_two_sided(&self, s: &Subspace) -> bool {
        let whole = self.whole_space();
        self.product_of(s, &whole).included_in(s) && self.product_of(&whole, s).included_in(s)
    }

    /// `[e_i, e_j] = -[e_j, e_i]` for all `i, j`, including `[e_i, e_i] = 0`.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| (self.basis_bracket(i, j) + self.basis_bracket(j, i)).is_zero())
        })
    }

    /// `Ess(L)`: the ideal generated by all squares `[x, x]`.
    ///
    /// Generated by `[e_i, e_i]` and the polarized squares `[e_i + e_j, e_i + e_j]`;
    /// in characteristic ≠ 2 these span every `[x, x]` up to the ideal.
    pub fn squares_ideal(&self) -> IdealHandle<'_> {
        let mut squares = Vec::new();
        for i in 0..self.dim {
            squares.push(self.basis_bracket(i, i).clone());
            for j in i + 1..self.dim {
                let mut s = self.basis_bracket(i, i).clone();
                let one = self.field.one();
                s.add_scaled(&one, self.basis_bracket(i, j));
                s.add_scaled(&one, self.basis_bracket(j, i));
                s.add_scaled(&one, self.basis_bracket(j, j));
                squares.push(s);
            }
        }
        let generators = Subspace::span_owned(self.field, self.dim, squares);
        IdealHandle {
            algebra: self,
            space: self.closure_of(&generators),
        }
    }

    /// `Es(B) = B ∩ Ess(L)`.
    pub fn es_of(&self, ideal: &IdealHandle<'_>) -> Subspace {
        ideal.space.intersect_of(&self.squares_ideal().space)
    }
}

impl fmt::Display for AlgebraDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, over {})", self.name, self.dim, self.field)?;
        for (i, j, k, c) in self.constants() {
            write!(f, "\n  [e{i}, e{j}] += {c}·e{k}")?;
        }
        Ok(())
    }
}

/// A two-sided ideal of a particular algebra.
#[derive(Clone, Debug)]
pub struct IdealHandle<'a> {
    algebra: &'a AlgebraDef,
    space: Subspace,
}

impl<'a> IdealHandle<'a> {
    /// Wraps `space` after checking that it is a two-sided ideal.
    pub fn new(algebra: &'a AlgebraDef, space: Subspace) -> Result<Self> {
        algebra.check_subspace(&space)?;
        let whole = algebra.whole_space();
        if !algebra.product_of(&space, &whole).included_in(&space) {
            return Err(Error::NotAnIdeal(format!(
                "{space}·L is not contained in {space}"
            )));
        }
        if !algebra.product_of(&whole, &space).included_in(&space) {
            return Err(Error::NotAnIdeal(format!(
                "L·{space} is not contained in {space}"
            )));
        }
        Ok(IdealHandle { algebra, space })
    }

    /// `L` itself.
    pub fn whole(algebra: &'a AlgebraDef) -> Self {
        IdealHandle {
            algebra,
            space: algebra.whole_space(),
        }
    }

    pub fn algebra(&self) -> &'a AlgebraDef {
        self.algebra
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// `[x,[y,z]] = [[x,y],z] - [[x,z],y]`
    RightLeibniz,
    /// `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`
    LeftLeibniz,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::RightLeibniz => write!(f, "right Leibniz"),
            Identity::LeftLeibniz => write!(f, "left Leibniz"),
        }
    }
}

/// A basis triple on which an identity fails, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleFailure {
    pub triple: (usize, usize, usize),
    pub lhs: Vector,
    pub rhs: Vector,
}

/// A basis instance of one of the derived identities that does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedFailure {
    pub identity: &'static str,
    pub indices: (usize, usize, usize),
    pub value: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub triples_checked: usize,
    pub failures: Vec<TripleFailure>,
    pub derived_failures: Vec<DerivedFailure>,
}

impl IdentityReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `[x,[y,z]] = [[x,y],z] - [[x,z],y]` on all basis triples, which
/// suffices by trilinearity, and the consequences `[y,[x,x]] = 0` and
/// `[z,[x,y]] + [z,[y,x]] = 0` on basis vectors.
pub fn verify_right_leibniz(a: &AlgebraDef) -> IdentityReport {
    let n = a.dim;
    let mut failures = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = Vector::unit(a.field, n, x);
                let lhs = a.bracket_of(&ex, a.basis_bracket(y, z));
                let ez = Vector::unit(a.field, n, z);
                let ey = Vector::unit(a.field, n, y);
                let rhs = &a.bracket_of(a.basis_bracket(x, y), &ez)
                    - &a.bracket_of(a.basis_bracket(x, z), &ey);
                if lhs != rhs {
                    failures.push(TripleFailure {
                        triple: (x + 1, y + 1, z + 1),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }

    let mut derived_failures = Vec::new();
    for outer in 0..n {
        let e = Vector::unit(a.field, n, outer);
        for x in 0..n {
            let sq = a.bracket_of(&e, a.basis_bracket(x, x));
            if !sq.is_zero() {
                derived_failures.push(DerivedFailure {
                    identity: "[y,[x,x]] = 0",
                    indices: (outer + 1, x + 1, x + 1),
                    value: sq,
                });
            }
            for y in x + 1..n {
                let sym = &a.bracket_of(&e, a.basis_bracket(x, y))
                    + &a.bracket_of(&e, a.basis_bracket(y, x));
                if !sym.is_zero() {
                    derived_failures.push(DerivedFailure {
                        identity: "[z,[x,y]] + [z,[y,x]] = 0",
                        indices: (outer + 1, x + 1, y + 1),
                        value: sym,
                    });
                }
            }
        }
    }

    IdentityReport {
        identity: Identity::RightLeibniz,
        triples_checked: n * n * n,
        failures,
        derived_failures,
    }
}

/// Checks `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` on all basis triples, plus the
/// mirrored consequences `[[x,x],y] = 0` and `[[x,y],z] + [[y,x],z] = 0`.
pub fn verify_left_leibniz(a: &AlgebraDef) -> IdentityReport {
    let n = a.dim;
    let mut failures = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = Vector::unit(a.field, n, x);
                let ey = Vector::unit(a.field, n, y);
                let ez = Vector::unit(a.field, n, z);
                let lhs = a.bracket_of(&ex, a.basis_bracket(y, z));
                let rhs = &a.bracket_of(a.basis_bracket(x, y), &ez)
                    + &a.bracket_of(&ey, a.basis_bracket(x, z));
                if lhs != rhs {
                    failures.push(TripleFailure {
                        triple: (x + 1, y + 1, z + 1),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }

    let mut derived_failures = Vec::new();
    for outer in 0..n {
        let e = Vector::unit(a.field, n, outer);
        for x in 0..n {
            let sq = a.bracket_of(a.basis_bracket(x, x), &e);
            if !sq.is_zero() {
                derived_failures.push(DerivedFailure {
                    identity: "[[x,x],y] = 0",
                    indices: (x + 1, x + 1, outer + 1),
                    value: sq,
                });
            }
            for y in x + 1..n {
                let sym = &a.bracket_of(a.basis_bracket(x, y), &e)
                    + &a.bracket_of(a.basis_bracket(y, x), &e);
                if !sym.is_zero() {
                    derived_failures.push(DerivedFailure {
                        identity: "[[x,y],z] + [[y,x],z] = 0",
                        indices: (x + 1, y + 1, outer + 1),
                        value: sym,
                    });
                }
            }
        }
    }

    IdentityReport {
        identity: Identity::LeftLeibniz,
        triples_checked: n * n * n,
        failures,
        derived_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn alg(name: &str, dim: usize, consts: &[(usize, usize, usize, i64)]) -> AlgebraDef {
        AlgebraDef::new(
            name,
            dim,
            Q,
            consts.iter().map(|&(i, j, k, c)| (i, j, k, Q.from_int(c))),
        )
        .unwrap()
    }

    fn a2() -> AlgebraDef {
        alg("A2", 2, &[(2, 1, 2, 1)])
    }

    fn l2() -> AlgebraDef {
        alg("L2", 2, &[(1, 1, 2, 1)])
    }

    fn h3() -> AlgebraDef {
        alg("H3", 3, &[(1, 2, 3, 1), (2, 1, 3, -1)])
    }

    #[test]
    fn construction_errors() {
        assert_eq!(AlgebraDef::abelian(0, Q).unwrap_err(), Error::EmptyAlgebra);
        let err = AlgebraDef::new("x", 2, Q, [(1, 3, 1, Q.one())]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { .. }));
        let err = AlgebraDef::new("x", 2, Q, [(1, 1, 1, Field::Prime(3).one())]).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch { .. }));
        assert!(AlgebraDef::abelian(2, Field::Prime(2)).is_err());
    }

    #[test]
    fn repeated_constants_are_summed_and_zeros_dropped() {
        let a = AlgebraDef::new(
            "x",
            2,
            Q,
            [
                (1, 1, 2, Q.one()),
                (1, 1, 2, Q.from_int(-1)),
                (2, 2, 1, Q.from_int(3)),
            ],
        )
        .unwrap();
        let consts: Vec<_> = a
            .constants()
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .collect();
        assert_eq!(consts, vec![(2, 2, 1, Q.from_int(3))]);
    }

    #[test]
    fn bracket_examples() {
        let ab = AlgebraDef::abelian(3, Q).unwrap();
        let x = ab.vector(&[1, 2, 3]).unwrap();
        assert!(ab.bracket(&x, &x).unwrap().is_zero());

        let a = a2();
        assert_eq!(a.bracket(&a.e(2), &a.e(1)).unwrap(), a.e(2));
        assert!(a.bracket(&a.e(1), &a.e(2)).unwrap().is_zero());

        let h = h3();
        let s = &h.e(1) + &h.e(2);
        assert!(h.bracket(&s, &s).unwrap().is_zero());
        assert!(h.bracket(&a.e(1), &h.e(1)).is_err());
    }

    #[test]
    fn right_identity_examples() {
        assert!(verify_right_leibniz(&AlgebraDef::abelian(2, Q).unwrap()).is_valid());
        let r = verify_right_leibniz(&a2());
        assert!(r.is_valid());
        assert_eq!(r.triples_checked, 8);
        assert!(r.derived_failures.is_empty());

        let broken = alg("A2'", 2, &[(2, 1, 2, 1), (1, 2, 1, 1)]);
        let r = verify_right_leibniz(&broken);
        assert!(!r.is_valid());
        // [e1,[e2,e1]] = [e1,e2] = e1 while [[e1,e2],e1] - [[e1,e1],e2] = [e1,e1] = 0
        let f = r.failures.iter().find(|f| f.triple == (1, 2, 1)).unwrap();
        assert_eq!(f.lhs, broken.e(1));
        assert!(f.rhs.is_zero());
        assert!(broken.validate().is_err());
    }

    #[test]
    fn lie_algebras_satisfy_both_identities() {
        let h = h3();
        assert!(verify_right_leibniz(&h).is_valid());
        assert!(verify_left_leibniz(&h).is_valid());
    }

    #[test]
    fn a2_is_not_left_leibniz() {
        // [e2,[e1,e1]] = 0 but [[e2,e1],e1] + [e1,[e2,e1]] = e2
        let a = a2();
        let r = verify_left_leibniz(&a);
        let f = r.failures.iter().find(|f| f.triple == (2, 1, 1)).unwrap();
        assert!(f.lhs.is_zero());
        assert_eq!(f.rhs, a.e(2));
    }

    #[test]
    fn subspace_product_examples() {
        let a = a2();
        let whole = a.whole_space();
        assert!(a
            .subspace_product(&whole, &a.zero_space())
            .unwrap()
            .is_zero());
        assert_eq!(
            a.subspace_product(&whole, &whole).unwrap(),
            a.span(&[a.e(2)]).unwrap()
        );

        let h = h3();
        let hw = h.whole_space();
        let derived = h.subspace_product(&hw, &hw).unwrap();
        assert_eq!(derived, h.span(&[h.e(3)]).unwrap());
        assert!(h.subspace_product(&derived, &hw).unwrap().is_zero());
    }

    #[test]
    fn ideal_closure_examples() {
        let a = a2();
        assert!(a.ideal_closure(&a.zero_space()).unwrap().space().is_zero());
        let e2 = a.span(&[a.e(2)]).unwrap();
        assert_eq!(a.ideal_closure(&e2).unwrap().space(), &e2);

        let h = h3();
        let closure = h.ideal_closure(&h.span(&[h.e(1)]).unwrap()).unwrap();
        assert_eq!(closure.space(), &h.span(&[h.e(1), h.e(3)]).unwrap());
    }

    #[test]
    fn ideal_handle_rejects_one_sided_subspaces() {
        let a = a2();
        // span{e1}: [e2,e1] = e2 escapes
        let err = IdealHandle::new(&a, a.span(&[a.e(1)]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotAnIdeal(_)));
        assert!(IdealHandle::new(&a, a.span(&[a.e(2)]).unwrap()).is_ok());
    }

    #[test]
    fn antisymmetry() {
        assert!(h3().is_antisymmetric());
        assert!(!a2().is_antisymmetric());
        assert!(!l2().is_antisymmetric());
    }

    #[test]
    fn squares_ideal_examples() {
        let h = h3();
        assert!(h.squares_ideal().space().is_zero());
        let a = a2();
        assert_eq!(a.squares_ideal().space(), &a.span(&[a.e(2)]).unwrap());
        let l = l2();
        assert_eq!(l.squares_ideal().space(), &l.span(&[l.e(2)]).unwrap());
    }

    #[test]
    fn es_examples() {
        let a = a2();
        let zero = IdealHandle::new(&a, a.zero_space()).unwrap();
        assert!(a.es_of(&zero).is_zero());
        assert_eq!(a.es_of(&IdealHandle::whole(&a)), a.span(&[a.e(2)]).unwrap());
        let h = h3();
        assert!(h.es_of(&IdealHandle::whole(&h)).is_zero());
    }
}
