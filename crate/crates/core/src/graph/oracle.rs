//! Exhaustive counters: colorings, acyclic orientations, and the coloring
//! class signature.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{chromatic_polynomial, Graph};
use crate::config::Config;
use crate::error::Result;
use crate::exec::fold_range;

fn edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.0 - 1, e.1 - 1)).collect()
}

/// Visits every map `{0..d} -> {0..n}` whose mixed-radix index lies in `range`.
fn for_each_map(d: usize, n: u64, range: Range<u64>, mut visit: impl FnMut(&[u32])) {
    if range.is_empty() {
        return;
    }
    let mut digits = vec![0u32; d];
    let mut idx = range.start;
    for slot in digits.iter_mut() {
        *slot = (idx % n) as u32;
        idx /= n;
    }
    for _ in range {
        visit(&digits);
        for slot in digits.iter_mut() {
            *slot += 1;
            if (*slot as u64) < n {
                break;
            }
            *slot = 0;
        }
    }
}

/// Number of proper colorings of `g` with colors from `[n]`, by enumeration.
pub fn count_colorings(g: &Graph, n: u64) -> Result<BigInt> {
    count_colorings_with(g, n, &Config::default())
}

pub fn count_colorings_with(g: &Graph, n: u64, cfg: &Config) -> Result<BigInt> {
    let total = cfg.limits.check_colorings(n, g.d())?;
    let edges = edge_pairs(g);
    let d = g.d();
    let count = fold_range(
        cfg.exec,
        total,
        || 0u64,
        |mut acc, r| {
            for_each_map(d, n, r, |c| {
                if edges.iter().all(|&(a, b)| c[a] != c[b]) {
                    acc += 1;
                }
            });
            acc
        },
        |a, b| a + b,
    );
    Ok(BigInt::from(count))
}

/// How an acyclic-orientation count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Enumeration,
    /// `(-1)^d χ_G(-1)`, used when `2^E` exceeds the guard.
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicCount {
    pub count: BigInt,
    pub method: CountMethod,
}

fn is_acyclic(d: usize, preds: &[u32]) -> bool {
    let mut remaining: u32 = if d == 32 { u32::MAX } else { (1 << d) - 1 };
    while remaining != 0 {
        let mut progressed = false;
        let mut scan = remaining;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if preds[v] & remaining == 0 {
                remaining &= !(1 << v);
                progressed = true;
            }
        }
        if !progressed {
            return false;
        }
    }
    true
}

/// Acyclic orientations of `g` by trying all `2^E` orientations; falls back to
/// the formula `|χ(-1)|` past the edge guard.
pub fn count_acyclic_orientations(g: &Graph) -> AcyclicCount {
    count_acyclic_orientations_with(g, &Config::default())
}

pub fn count_acyclic_orientations_with(g: &Graph, cfg: &Config) -> AcyclicCount {
    let e = g.edge_count();
    if e > cfg.limits.max_orientation_edges || e >= 63 {
        let chi = chromatic_polynomial(g);
        let mut v = chi.eval_i64(-1);
        if g.d() % 2 == 1 {
            v = -v;
        }
        debug_assert!(!v.is_negative());
        return AcyclicCount {
            count: v,
            method: CountMethod::Formula,
        };
    }
    let edges = edge_pairs(g);
    let d = g.d();
    let count = fold_range(
        cfg.exec,
        1u64 << e,
        || 0u64,
        |mut acc, r| {
            let mut preds = vec![0u32; d];
            for mask in r {
                preds.iter_mut().for_each(|p| *p = 0);
                for (k, &(a, b)) in edges.iter().enumerate() {
                    if mask >> k & 1 == 0 {
                        preds[b] |= 1 << a;
                    } else {
                        preds[a] |= 1 << b;
                    }
                }
                if is_acyclic(d, &preds) {
                    acc += 1;
                }
            }
            acc
        },
        |a, b| a + b,
    );
    AcyclicCount {
        count: BigInt::from(count),
        method: CountMethod::Enumeration,
    }
}

/// Multiset of color-class sizes, largest first.
pub type Partition = Vec<usize>;

/// Proper colorings with colors from `[n]`, grouped by the multiset of their
/// nonempty class sizes.
pub fn chromatic_class_signature(g: &Graph, n: u64) -> Result<BTreeMap<Partition, BigInt>> {
    chromatic_class_signature_with(g, n, &Config::default())
}

pub fn chromatic_class_signature_with(
    g: &Graph,
    n: u64,
    cfg: &Config,
) -> Result<BTreeMap<Partition, BigInt>> {
    let total = cfg.limits.check_colorings(n, g.d())?;
    let edges = edge_pairs(g);
    let d = g.d();
    let merge = |mut a: BTreeMap<Partition, u64>, b: BTreeMap<Partition, u64>| {
        for (k, v) in b {
            *a.entry(k).or_default() += v;
        }
        a
    };
    let counts = fold_range(
        cfg.exec,
        total,
        BTreeMap::<Partition, u64>::new,
        |mut acc, r| {
            let mut sizes = vec![0usize; n as usize];
            for_each_map(d, n, r, |c| {
                if edges.iter().any(|&(a, b)| c[a] == c[b]) {
                    return;
                }
                sizes.iter_mut().for_each(|s| *s = 0);
                for &col in c {
                    sizes[col as usize] += 1;
                }
                let mut part: Partition = sizes.iter().copied().filter(|&s| s > 0).collect();
                part.sort_unstable_by(|a, b| b.cmp(a));
                *acc.entry(part).or_default() += 1;
            });
            acc
        },
        merge,
    );
    Ok(counts
        .into_iter()
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;
    use crate::error::Error;
    use crate::graph::Named;

    #[test]
    fn coloring_counts() {
        let k3 = Graph::complete(3);
        assert_eq!(count_colorings(&k3, 3).unwrap(), BigInt::from(6));
        assert_eq!(count_colorings(&k3, 2).unwrap(), BigInt::from(0));
        let g = Named::EdgePlusIsolated.graph();
        // 2^3 maps, of which (1,1,*) and (2,2,*) are improper.
        assert_eq!(count_colorings(&g, 2).unwrap(), BigInt::from(4));
        assert_eq!(count_colorings(&g, 0).unwrap(), BigInt::from(0));
    }

    #[test]
    fn coloring_guard() {
        let cfg = Config {
            limits: Limits {
                max_colorings: 100,
                ..Limits::default()
            },
            ..Config::default()
        };
        assert!(matches!(
            count_colorings_with(&Graph::edgeless(5), 3, &cfg),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn acyclic_counts() {
        assert_eq!(count_acyclic_orientations(&Graph::path(4)).count, BigInt::from(8));
        assert_eq!(count_acyclic_orientations(&Graph::complete(3)).count, BigInt::from(6));
        let e = count_acyclic_orientations(&Graph::edgeless(4));
        assert_eq!(e.count, BigInt::from(1));
        assert_eq!(e.method, CountMethod::Enumeration);
    }

    #[test]
    fn acyclic_formula_fallback() {
        let cfg = Config {
            limits: Limits {
                max_orientation_edges: 2,
                ..Limits::default()
            },
            ..Config::default()
        };
        let k4 = Graph::complete(4);
        let r = count_acyclic_orientations_with(&k4, &cfg);
        assert_eq!(r.method, CountMethod::Formula);
        // Acyclic orientations of K_n are the n! linear orders.
        assert_eq!(r.count, BigInt::from(24));
        assert_eq!(count_acyclic_orientations(&k4).count, BigInt::from(24));
    }

    #[test]
    fn signatures() {
        let k3 = chromatic_class_signature(&Graph::complete(3), 3).unwrap();
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[&vec![1, 1, 1]], BigInt::from(6));
        // Edge 12 plus isolated 3 with three colors: 27 maps, 9 improper
        // (c1 = c2). Rainbow: 6. Class type (2,1): vertex 3 joins 1 or 2, 2*3*2 = 12.
        let s = chromatic_class_signature(&Named::EdgePlusIsolated.graph(), 3).unwrap();
        assert_eq!(s[&vec![1, 1, 1]], BigInt::from(6));
        assert_eq!(s[&vec![2, 1]], BigInt::from(12));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = Named::Bowtie.graph();
        let seq = Config::sequential();
        let par = Config::default();
        assert_eq!(
            count_colorings_with(&g, 4, &seq).unwrap(),
            count_colorings_with(&g, 4, &par).unwrap()
        );
        assert_eq!(
            count_acyclic_orientations_with(&g, &seq),
            count_acyclic_orientations_with(&g, &par)
        );
        assert_eq!(
            chromatic_class_signature_with(&g, 5, &seq).unwrap(),
            chromatic_class_signature_with(&g, 5, &par).unwrap()
        );
    }
}
