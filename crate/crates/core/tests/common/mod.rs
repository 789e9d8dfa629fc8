//! Independent reference implementation for the integration tests.
//!
//! Reads fixture JSON with plain `serde_json::Value`, stores structure
//! constants densely over `BigRational` and does its own Gaussian
//! elimination. It shares no code with the library beyond the dependency
//! crates, so agreement between the two is meaningful.

#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use leibniz::rewrite::{Generator, ProductTree, RightWord};

pub type Q = BigRational;
pub type Row = Vec<Q>;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub const VALID_FIXTURES: [&str; 4] = ["abelian2.json", "a2.json", "l2.json", "h3.json"];

fn q(text: &str) -> Q {
    match text.split_once('/') {
        Some((n, d)) => Q::new(n.trim().parse().unwrap(), d.trim().parse().unwrap()),
        None => Q::from_integer(text.trim().parse().unwrap()),
    }
}

/// `c[(i*n + j)*n + k]` is the coefficient of `e_k` in `[e_i, e_j]`, 0-based.
#[derive(Clone, Debug)]
pub struct Dense {
    pub n: usize,
    pub c: Vec<Q>,
}

impl Dense {
    pub fn from_fixture(name: &str) -> Dense {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            v["field"]["type"], "Q",
            "oracle handles rational fixtures only"
        );
        let n = v["dim"].as_u64().unwrap() as usize;
        let mut c = vec![Q::zero(); n * n * n];
        for entry in v["constants"].as_array().unwrap() {
            let e = entry.as_array().unwrap();
            let idx = |t: usize| e[t].as_u64().unwrap() as usize - 1;
            c[(idx(0) * n + idx(1)) * n + idx(2)] += q(e[3].as_str().unwrap());
        }
        Dense { n, c }
    }

    pub fn unit(&self, i: usize) -> Row {
        let mut r = vec![Q::zero(); self.n];
        r[i] = Q::one();
        r
    }

    pub fn bracket(&self, x: &Row, y: &Row) -> Row {
        let n = self.n;
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    let c = &self.c[(i * n + j) * n + k];
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Basis triples `(i, j, k)`, 1-based, where `[x,[y,z]] ≠ [[x,y],z] − [[x,z],y]`.
    pub fn right_failures(&self) -> Vec<(usize, usize, usize)> {
        self.triples(|x, y, z| {
            let lhs = self.bracket(x, &self.bracket(y, z));
            let rhs = sub(
                &self.bracket(&self.bracket(x, y), z),
                &self.bracket(&self.bracket(x, z), y),
            );
            lhs == rhs
        })
    }

    /// Same for `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`.
    pub fn left_failures(&self) -> Vec<(usize, usize, usize)> {
        self.triples(|x, y, z| {
            let lhs = self.bracket(x, &self.bracket(y, z));
            let rhs = add(
                &self.bracket(&self.bracket(x, y), z),
                &self.bracket(y, &self.bracket(x, z)),
            );
            lhs == rhs
        })
    }

    fn triples(&self, ok: impl Fn(&Row, &Row, &Row) -> bool) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    if !ok(&self.unit(i), &self.unit(j), &self.unit(k)) {
                        bad.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        bad
    }

    pub fn whole(&self) -> Vec<Row> {
        (0..self.n).map(|i| self.unit(i)).collect()
    }

    pub fn product(&self, u: &[Row], v: &[Row]) -> Vec<Row> {
        let mut rows = Vec::new();
        for x in u {
            for y in v {
                rows.push(self.bracket(x, y));
            }
        }
        basis(rows)
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn closure(&self, s: &[Row]) -> Vec<Row> {
        let whole = self.whole();
        let mut cur = basis(s.to_vec());
        loop {
            let mut rows = cur.clone();
            rows.extend(self.product(&cur, &whole));
            rows.extend(self.product(&whole, &cur));
            let next = basis(rows);
            if next.len() == cur.len() {
                return cur;
            }
            cur = next;
        }
    }

    /// Dimensions of `L^1, L^2, …` under `next = step(prev)` until zero or a
    /// repeat, at most `limit` terms.
    fn chain(&self, limit: usize, step: impl Fn(&[Row]) -> Vec<Row>) -> Vec<usize> {
        let mut cur = self.whole();
        let mut dims = vec![cur.len()];
        while dims.len() < limit && !cur.is_empty() {
            let next = step(&cur);
            let repeat = next.len() == cur.len();
            dims.push(next.len());
            cur = next;
            if repeat {
                break;
            }
        }
        dims
    }

    pub fn right_power_dims(&self, limit: usize) -> Vec<usize> {
        let whole = self.whole();
        self.chain(limit, |prev| self.product(prev, &whole))
    }

    pub fn left_power_dims(&self, limit: usize) -> Vec<usize> {
        let whole = self.whole();
        self.chain(limit, |prev| self.product(&whole, prev))
    }

    /// `W_1 = L`, `W_m` = ideal generated by `Σ_{i+j=m} W_i W_j`.
    pub fn strong_dims(&self, limit: usize) -> Vec<usize> {
        let mut levels: Vec<Vec<Row>> = vec![self.whole()];
        while levels.len() < limit && !levels.last().unwrap().is_empty() {
            let m = levels.len() + 1;
            let mut rows = Vec::new();
            for i in 1..m {
                rows.extend(self.product(&levels[i - 1], &levels[m - i - 1]));
            }
            levels.push(self.closure(&rows));
        }
        levels.iter().map(Vec::len).collect()
    }
}

/// Least `k` with a zero entry at position `k` (1-based) in a dims list.
pub fn zero_index(dims: &[usize]) -> Option<usize> {
    dims.iter().position(|d| *d == 0).map(|p| p + 1)
}

pub fn add(x: &Row, y: &Row) -> Row {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &Row, y: &Row) -> Row {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Row-reduced basis of the span of `rows`.
pub fn basis(mut rows: Vec<Row>) -> Vec<Row> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        rows[rank] = rows[rank].iter().map(|x| x * &inv).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                rows[r] = rows[r]
                    .iter()
                    .zip(&rows[rank])
                    .map(|(a, b)| a - &f * b)
                    .collect();
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

pub fn in_span(span: &[Row], v: &Row) -> bool {
    let mut rows = span.to_vec();
    rows.push(v.clone());
    basis(rows).len() == basis(span.to_vec()).len()
}

// ---------------------------------------------------------------------------
// random terms

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const NAMES: [&str; 4] = ["a", "b", "c", "d"];

pub fn random_generator(rng: &mut ChaCha8Rng, tag_rate: f64) -> Generator {
    Generator::new(
        NAMES[rng.random_range(0..NAMES.len())],
        rng.random_bool(tag_rate),
    )
}

/// A uniformly shaped random tree with exactly `len` leaves.
pub fn random_tree(rng: &mut ChaCha8Rng, len: usize, tag_rate: f64) -> ProductTree {
    if len == 1 {
        return ProductTree::Leaf(random_generator(rng, tag_rate));
    }
    let left = rng.random_range(1..len);
    let l = random_tree(rng, left, tag_rate);
    let r = random_tree(rng, len - left, tag_rate);
    ProductTree::node(l, r)
}

pub fn random_word(rng: &mut ChaCha8Rng, len: usize, tag_rate: f64) -> RightWord {
    RightWord::new((0..len).map(|_| random_generator(rng, tag_rate)).collect())
}

pub fn sorted_leaves(t: &ProductTree) -> Vec<Generator> {
    let mut v: Vec<Generator> = t.leaves().into_iter().cloned().collect();
    v.sort();
    v
}
