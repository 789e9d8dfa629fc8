use std::collections::BTreeMap;

use crate::algebra::{AlgebraDef, IdealHandle};
use crate::error::{Error, Result};
use crate::linear::Vector;

use super::tree::{Generator, LinComb, ProductTree, RightWord};

/// Generator name → element of the algebra.
pub type Assignment = BTreeMap<String, Vector>;

/// Anything that denotes an element of an algebra once generators are assigned.
pub trait Evaluate {
    fn evaluate(&self, assignment: &Assignment, algebra: &AlgebraDef) -> Result<Vector>;
}

fn lookup(g: &Generator, assignment: &Assignment, algebra: &AlgebraDef) -> Result<Vector> {
    let v = assignment
        .get(&g.name)
        .ok_or_else(|| Error::UnassignedGenerator(g.name.clone()))?;
    v.conforms(algebra.field(), algebra.dim())?;
    Ok(v.clone())
}

impl Evaluate for ProductTree {
    fn evaluate(&self, assignment: &Assignment, algebra: &AlgebraDef) -> Result<Vector> {
        match self {
            ProductTree::Leaf(g) => lookup(g, assignment, algebra),
            ProductTree::Node(l, r) => {
                let x = l.evaluate(assignment, algebra)?;
                let y = r.evaluate(assignment, algebra)?;
                algebra.bracket(&x, &y)
            }
        }
    }
}

impl Evaluate for RightWord {
    fn evaluate(&self, assignment: &Assignment, algebra: &AlgebraDef) -> Result<Vector> {
        let mut factors = self.factors().iter();
        let mut acc = lookup(factors.next().expect("nonempty"), assignment, algebra)?;
        for g in factors {
            acc = algebra.bracket(&acc, &lookup(g, assignment, algebra)?)?;
        }
        Ok(acc)
    }
}

impl Evaluate for LinComb {
    fn evaluate(&self, assignment: &Assignment, algebra: &AlgebraDef) -> Result<Vector> {
        let field = algebra.field();
        let mut acc = Vector::zero(field, algebra.dim());
        for (w, c) in self.terms() {
            acc.add_scaled(&field.from_int(c), &w.evaluate(assignment, algebra)?);
        }
        Ok(acc)
    }
}

/// Checks that every `!`-tagged generator of `t` is assigned a vector in `ideal`.
pub fn check_tags(t: &ProductTree, assignment: &Assignment, ideal: &IdealHandle<'_>) -> Result<()> {
    for g in t.leaves().into_iter().filter(|g| g.in_b) {
        let v = assignment
            .get(&g.name)
            .ok_or_else(|| Error::UnassignedGenerator(g.name.clone()))?;
        if !ideal.space().contains(v)? {
            return Err(Error::TagOutsideIdeal {
                name: g.name.clone(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::{normalize, parse};
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn l2() -> AlgebraDef {
        AlgebraDef::new("L2", 2, Q, [(1, 1, 2, Q.one())]).unwrap()
    }

    fn h3() -> AlgebraDef {
        AlgebraDef::new("H3", 3, Q, [(1, 2, 3, Q.one()), (2, 1, 3, Q.from_int(-1))]).unwrap()
    }

    #[test]
    fn leaf_evaluates_to_its_assignment() {
        let a = l2();
        let v = a.vector(&[3, -1]).unwrap();
        let asg = Assignment::from([("a".to_string(), v.clone())]);
        assert_eq!(parse("a").unwrap().evaluate(&asg, &a).unwrap(), v);
    }

    #[test]
    fn l2_nested_square() {
        let a = l2();
        let asg = Assignment::from([("a".to_string(), a.e(1))]);
        let t = parse("a*(a*a)").unwrap();
        assert!(t.evaluate(&asg, &a).unwrap().is_zero());
        assert!(normalize(&t).evaluate(&asg, &a).unwrap().is_zero());
        // the right word [a,a,a] itself is [[e1,e1],e1] = [e2,e1] = 0 in L2
        assert!(parse("a*a*a")
            .unwrap()
            .evaluate(&asg, &a)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn h3_evaluation_matches_normal_form() {
        let a = h3();
        let asg = Assignment::from([("x".to_string(), a.e(1)), ("y".to_string(), a.e(2))]);
        let t = parse("x*(y*x)").unwrap();
        let direct = t.evaluate(&asg, &a).unwrap();
        assert!(direct.is_zero());
        assert_eq!(normalize(&t).evaluate(&asg, &a).unwrap(), direct);
    }

    #[test]
    fn missing_or_mismatched_assignments() {
        let a = h3();
        let asg = Assignment::from([("x".to_string(), a.e(1))]);
        assert_eq!(
            parse("x*y").unwrap().evaluate(&asg, &a),
            Err(Error::UnassignedGenerator("y".into()))
        );
        let short = Assignment::from([("x".to_string(), Vector::from_ints(Q, &[1, 0]))]);
        assert!(matches!(
            parse("x").unwrap().evaluate(&short, &a),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn tag_consistency() {
        let a = h3();
        let center = IdealHandle::new(&a, a.span(&[a.e(3)]).unwrap()).unwrap();
        let t = parse("x*z!").unwrap();
        let good = Assignment::from([("x".to_string(), a.e(1)), ("z".to_string(), a.e(3))]);
        assert!(check_tags(&t, &good, &center).is_ok());
        let bad = Assignment::from([("x".to_string(), a.e(1)), ("z".to_string(), a.e(2))]);
        assert_eq!(
            check_tags(&t, &bad, &center),
            Err(Error::TagOutsideIdeal { name: "z".into() })
        );
    }
}
