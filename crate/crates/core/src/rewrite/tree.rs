use std::collections::BTreeMap;
use std::fmt;

/// A generator of the free algebra. `in_b` marks generators standing for
/// elements of the ideal `B`; it is written as a trailing `!`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub name: String,
    pub in_b: bool,
}

impl Generator {
    pub fn new(name: impl Into<String>, in_b: bool) -> Self {
        Generator {
            name: name.into(),
            in_b,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if self.in_b {
            f.write_str("!")?;
        }
        Ok(())
    }
}

/// A bracketing of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductTree {
    Leaf(Generator),
    Node(Box<ProductTree>, Box<ProductTree>),
}

impl ProductTree {
    pub fn leaf(name: impl Into<String>) -> Self {
        ProductTree::Leaf(Generator::new(name, false))
    }

    /// A leaf tagged as lying in `B`.
    pub fn b_leaf(name: impl Into<String>) -> Self {
        ProductTree::Leaf(Generator::new(name, true))
    }

    pub fn node(left: ProductTree, right: ProductTree) -> Self {
        ProductTree::Node(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn length(&self) -> usize {
        match self {
            ProductTree::Leaf(_) => 1,
            ProductTree::Node(l, r) => l.length() + r.length(),
        }
    }

    /// Number of leaves tagged as lying in `B`.
    pub fn weight(&self) -> usize {
        match self {
            ProductTree::Leaf(g) => usize::from(g.in_b),
            ProductTree::Node(l, r) => l.weight() + r.weight(),
        }
    }

    /// `(length, weight)`.
    pub fn measures(&self) -> (usize, usize) {
        (self.length(), self.weight())
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&Generator> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Generator>) {
        match self {
            ProductTree::Leaf(g) => out.push(g),
            ProductTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Every right child is a leaf.
    pub fn is_right_normed(&self) -> bool {
        match self {
            ProductTree::Leaf(_) => true,
            ProductTree::Node(l, r) => matches!(**r, ProductTree::Leaf(_)) && l.is_right_normed(),
        }
    }

    pub fn to_right_word(&self) -> Option<RightWord> {
        self.is_right_normed().then(|| RightWord {
            factors: self.leaves().into_iter().cloned().collect(),
        })
    }

    /// Termination measure of the rewrite rule: the sum over internal nodes
    /// of `(leaves in the right child) - 1`. Zero exactly on right-normed trees.
    pub fn rewrite_potential(&self) -> usize {
        match self {
            ProductTree::Leaf(_) => 0,
            ProductTree::Node(l, r) => {
                l.rewrite_potential() + r.rewrite_potential() + r.length() - 1
            }
        }
    }
}

impl fmt::Display for ProductTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductTree::Leaf(g) => write!(f, "{g}"),
            ProductTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// A right product `(((s_m s_{m-1}) s_{m-2}) …) s_1`, stored as
/// `[s_m, …, s_1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RightWord {
    factors: Vec<Generator>,
}

impl RightWord {
    /// Panics on an empty factor list.
    pub fn new(factors: Vec<Generator>) -> Self {
        assert!(
            !factors.is_empty(),
            "a right word needs at least one factor"
        );
        RightWord { factors }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn length(&self) -> usize {
        self.factors.len()
    }

    pub fn weight(&self) -> usize {
        self.factors.iter().filter(|g| g.in_b).count()
    }

    pub fn to_tree(&self) -> ProductTree {
        let mut factors = self.factors.iter();
        let first = ProductTree::Leaf(factors.next().expect("nonempty").clone());
        factors.fold(first, |acc, g| {
            ProductTree::node(acc, ProductTree::Leaf(g.clone()))
        })
    }
}

impl fmt::Display for RightWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}

/// Integer combination of right words; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<RightWord, i64>,
}

impl LinComb {
    pub fn new() -> Self {
        LinComb::default()
    }

    pub fn single(word: RightWord) -> Self {
        let mut lc = LinComb::new();
        lc.add_term(word, 1);
        lc
    }

    pub fn add_term(&mut self, word: RightWord, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(word).or_insert(0);
        *slot = slot.checked_add(coeff).expect("coefficient overflow");
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, coeff: i64) {
        for (w, c) in &other.terms {
            self.add_term(
                w.clone(),
                c.checked_mul(coeff).expect("coefficient overflow"),
            );
        }
    }

    /// Terms in lexicographic order of their factor lists.
    pub fn terms(&self) -> impl Iterator<Item = (&RightWord, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coeff(&self, word: &RightWord) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c:+}*{w}")?;
        }
        Ok(())
    }
}
