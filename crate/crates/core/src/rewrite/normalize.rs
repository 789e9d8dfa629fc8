//! Normal forms by the rewrite rule `x·(y·z) → (x·y)·z − (x·z)·y`.

use std::collections::BTreeMap;

use super::tree::{LinComb, ProductTree};

/// Rewrites the leftmost-innermost redex `x·(y·z)` of `t`, returning the two
/// trees `T[(x·y)·z]` and `T[(x·z)·y]` with `T[x·(y·z)] = first − second`.
fn rewrite_once(t: &ProductTree) -> Option<(ProductTree, ProductTree)> {
    let ProductTree::Node(l, r) = t else {
        return None;
    };
    if let Some((a, b)) = rewrite_once(l) {
        return Some((
            ProductTree::Node(Box::new(a), r.clone()),
            ProductTree::Node(Box::new(b), r.clone()),
        ));
    }
    if let Some((a, b)) = rewrite_once(r) {
        return Some((
            ProductTree::Node(l.clone(), Box::new(a)),
            ProductTree::Node(l.clone(), Box::new(b)),
        ));
    }
    let ProductTree::Node(y, z) = &**r else {
        return None;
    };
    Some((
        ProductTree::node(ProductTree::Node(l.clone(), y.clone()), (**z).clone()),
        ProductTree::node(ProductTree::Node(l.clone(), z.clone()), (**y).clone()),
    ))
}

/// Expresses `t` as an integer combination of right words.
///
/// Each rewrite step lowers [`ProductTree::rewrite_potential`] of both
/// resulting trees by the length of `z`, so the loop terminates; the
/// potential is asserted at every step.
pub fn normalize(t: &ProductTree) -> LinComb {
    normalize_all([(t.clone(), 1)])
}

pub(crate) fn normalize_all(start: impl IntoIterator<Item = (ProductTree, i64)>) -> LinComb {
    let mut pending: BTreeMap<ProductTree, i64> = BTreeMap::new();
    for (t, c) in start {
        push(&mut pending, t, c);
    }
    let mut out = LinComb::new();
    while let Some((tree, c)) = pending.pop_first() {
        match rewrite_once(&tree) {
            None => out.add_term(tree.to_right_word().expect("no redex left"), c),
            Some((plus, minus)) => {
                let before = tree.rewrite_potential();
                assert!(plus.rewrite_potential() < before && minus.rewrite_potential() < before);
                push(&mut pending, plus, c);
                push(&mut pending, minus, -c);
            }
        }
    }
    out
}

fn push(pending: &mut BTreeMap<ProductTree, i64>, t: ProductTree, c: i64) {
    let slot = pending.entry(t).or_insert(0);
    *slot = slot.checked_add(c).expect("coefficient overflow");
    if *slot == 0 {
        pending.retain(|_, c| *c != 0);
    }
}
