//! Expansion of `Q_0·P_0` along a right product `P_0 = a_m a_{m-1} … a_1`:
//!
//! ```text
//! Q_0 P_0 = Σ_{i=1}^{m-1} Q_{i-1} P_i a_i + Q_{m-1} a_m
//! P_i = a_m … a_{i+1},   Q_i = −Q_{i-1} a_i
//! ```
//!
//! This is a second route to normal forms, independent of the rewrite rule
//! in [`super::normalize`]; the two are checked against each other.
//!
//! At `m = 2` this reads `Q_0 (a_2 a_1) = Q_0 a_2 a_1 − Q_0 a_1 a_2
//! = Q_0 P_1 a_1 + Q_1 a_2`; note the last factor is `a_2`, not `a_1`.

use std::fmt;

use super::normalize::normalize_all;
use super::tree::{Generator, LinComb, ProductTree, RightWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn alternating(i: usize) -> Sign {
        if i.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One summand `Q_{i-1} P_i a_i` (or `Q_{m-1} a_m` when `p` is `None`).
///
/// `Q_{i-1}` is kept as the unsigned tree `Q_0 a_1 … a_{i-1}` together with
/// its sign `(−1)^{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsomSummand {
    /// `i`, 1-based; equals `m` for the closing summand.
    pub index: usize,
    pub q_sign: Sign,
    pub q: ProductTree,
    pub p: Option<RightWord>,
    pub a: Generator,
}

impl PsomSummand {
    /// The unsigned product tree of this summand.
    pub fn tree(&self) -> ProductTree {
        let a = ProductTree::Leaf(self.a.clone());
        match &self.p {
            Some(p) => ProductTree::node(ProductTree::node(self.q.clone(), p.to_tree()), a),
            None => ProductTree::node(self.q.clone(), a),
        }
    }

    /// Length and weight bookkeeping against the whole product `total`:
    /// `#(P) = #(Q_{k-1}) + #(P_k) + 1`, `#_B(P) = #_B(Q_{k-1}) + #_B(P_k) + #_B(a_k)`,
    /// and for the closing summand `#(P) = #(Q_{m-1}) + 1`,
    /// `#_B(P) = #_B(Q_{m-1}) + #_B(a_m)`.
    pub fn measures_consistent(&self, total: &ProductTree) -> bool {
        let (len, wt) = total.measures();
        let (q_len, q_wt) = self.q.measures();
        let a_wt = usize::from(self.a.in_b);
        match &self.p {
            Some(p) => len == q_len + p.length() + 1 && wt == q_wt + p.weight() + a_wt,
            None => len == q_len + 1 && wt == q_wt + a_wt,
        }
    }
}

impl fmt::Display for PsomSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.q_sign, self.tree())
    }
}

/// Summands of `Q_0·P_0`, in order `i = 1, …, m`.
pub fn psom_expand(q0: &ProductTree, p0: &RightWord) -> Vec<PsomSummand> {
    let factors = p0.factors();
    let m = factors.len();
    // a_i = factors[m - i]
    let a = |i: usize| factors[m - i].clone();
    let mut out = Vec::with_capacity(m);
    let mut q = q0.clone();
    for i in 1..m {
        out.push(PsomSummand {
            index: i,
            q_sign: Sign::alternating(i - 1),
            q: q.clone(),
            p: Some(RightWord::new(factors[..m - i].to_vec())),
            a: a(i),
        });
        q = ProductTree::node(q, ProductTree::Leaf(a(i)));
    }
    out.push(PsomSummand {
        index: m,
        q_sign: Sign::alternating(m - 1),
        q,
        p: None,
        a: a(m),
    });
    out
}

/// Signed sum of the normal forms of the summands.
pub fn psom_normal_form(summands: &[PsomSummand]) -> LinComb {
    normalize_all(summands.iter().map(|s| (s.tree(), s.q_sign.as_i64())))
}
