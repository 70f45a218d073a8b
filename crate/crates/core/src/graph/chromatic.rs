//! Chromatic polynomial by deletion-contraction with memoization.
//!
//! Subgraphs are keyed by their labeled, sorted, deduplicated edge list after
//! compacting vertex labels, not by isomorphism class.

use std::collections::HashMap;

use super::Graph;
use crate::poly::IntPolynomial;

type Key = (usize, Vec<(u8, u8)>);

#[derive(Default)]
struct Memo {
    table: HashMap<Key, IntPolynomial>,
}

/// Merges vertex `v` into `u` (`u < v`), drops the resulting loop, and
/// shifts labels above `v` down by one.
fn contract(edges: &[(u8, u8)], u: u8, v: u8) -> Vec<(u8, u8)> {
    let relabel = |w: u8| {
        if w == v {
            u
        } else if w > v {
            w - 1
        } else {
            w
        }
    };
    let mut out: Vec<(u8, u8)> = edges
        .iter()
        .filter_map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            match a.cmp(&b) {
                std::cmp::Ordering::Less => Some((a, b)),
                std::cmp::Ordering::Greater => Some((b, a)),
                std::cmp::Ordering::Equal => None,
            }
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Removes vertex `v` (which must be isolated or a leaf) and compacts labels.
fn remove_vertex(edges: &[(u8, u8)], v: u8) -> Vec<(u8, u8)> {
    let shift = |w: u8| if w > v { w - 1 } else { w };
    let mut out: Vec<(u8, u8)> = edges
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (shift(a), shift(b)))
        .collect();
    out.sort_unstable();
    out
}

fn solve(k: usize, edges: Vec<(u8, u8)>, memo: &mut Memo) -> IntPolynomial {
    if edges.is_empty() {
        return IntPolynomial::monomial(k);
    }
    let pairs = k * (k - 1) / 2;
    if edges.len() == pairs {
        return IntPolynomial::falling_factorial(k);
    }
    let key = (k, edges);
    if let Some(p) = memo.table.get(&key) {
        return p.clone();
    }
    let (k, edges) = key;

    let mut degree = vec![0usize; k];
    for &(a, b) in &edges {
        degree[a as usize] += 1;
        degree[b as usize] += 1;
    }
    let result = if let Some(v) = degree.iter().position(|&x| x <= 1) {
        // An isolated vertex contributes a factor n, a leaf a factor (n - 1).
        let factor = if degree[v] == 0 {
            IntPolynomial::monomial(1)
        } else {
            IntPolynomial::linear_root(1)
        };
        let rest = solve(k - 1, remove_vertex(&edges, v as u8), memo);
        &factor * &rest
    } else if 2 * edges.len() <= pairs {
        // P(G) = P(G - e) - P(G / e)
        let (u, v) = *edges.last().expect("nonempty");
        let deleted = edges[..edges.len() - 1].to_vec();
        let contracted = contract(&edges, u, v);
        let a = solve(k, deleted, memo);
        let b = solve(k - 1, contracted, memo);
        &a - &b
    } else {
        // Dense: P(G) = P(G + e) + P(G / e) for a non-edge e.
        let (u, v) = (0..k as u8)
            .flat_map(|a| (a + 1..k as u8).map(move |b| (a, b)))
            .find(|p| edges.binary_search(p).is_err())
            .expect("graph is not complete");
        let mut added = edges.clone();
        let pos = added.binary_search(&(u, v)).unwrap_err();
        added.insert(pos, (u, v));
        let contracted = contract(&edges, u, v);
        let a = solve(k, added, memo);
        let b = solve(k - 1, contracted, memo);
        &a + &b
    };
    memo.table.insert((k, edges), result.clone());
    result
}

/// The chromatic polynomial `χ_G(n)`.
pub fn chromatic_polynomial(g: &Graph) -> IntPolynomial {
    deletion_contraction(g.d(), g.edges().iter().map(|e| (e.0, e.1)))
}

/// Chromatic polynomial of the graph on `k` vertices with the given 1-based
/// edges.
pub fn deletion_contraction<I>(k: usize, edges: I) -> IntPolynomial
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut list: Vec<(u8, u8)> = edges
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = ((a - 1) as u8, (b - 1) as u8);
            (a.min(b), a.max(b))
        })
        .collect();
    list.sort_unstable();
    list.dedup();
    solve(k, list, &mut Memo::default())
}
