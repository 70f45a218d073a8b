//! The coloring ideal `K_G` in the face ring of the order complex of the
//! Boolean algebra on `[d]`.
//!
//! Face-ring monomials are multichains `x_{S_1}^{e_1} ⋯ x_{S_k}^{e_k}` with
//! `S_1 ⊊ ⋯ ⊊ S_k ⊆ [d]`. A permutation's short G-sequence has cumulative
//! unions `T_1 ⊊ ⋯ ⊊ T_j`; the square-free monomial on these is a basic
//! coloring monomial, and `K_G` is generated by the basic monomials. Degree-`n`
//! monomials of `K_G` correspond to `(n+1)`-colorings of `G`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::config::Config;
use crate::cuts::{adjacency_masks, cut_positions, perm};
use crate::error::{Error, Result};
use crate::exec::fold_range;
use crate::graph::{Coloring, Graph, VertexSet};

/// A face-ring monomial: a strictly nested chain of subsets of `[d]` with
/// positive exponents. The empty chain is the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    d: usize,
    factors: Vec<(VertexSet, u32)>,
}

impl Monomial {
    pub fn unit(d: usize) -> Self {
        Monomial {
            d,
            factors: Vec::new(),
        }
    }

    /// Builds from `(set, exponent)` pairs in any order. Repeated sets add
    /// their exponents; zero exponents are dropped.
    pub fn new<I>(d: usize, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexSet, u32)>,
    {
        let mut merged: BTreeMap<(usize, VertexSet), u32> = BTreeMap::new();
        for (s, e) in factors {
            if !s.within(d) {
                return Err(Error::InvalidMonomial(format!("{s} is not a subset of [{d}]")));
            }
            if e > 0 {
                *merged.entry((s.len(), s)).or_default() += e;
            }
        }
        let factors: Vec<(VertexSet, u32)> = merged.into_iter().map(|((_, s), e)| (s, e)).collect();
        if let Some(w) = factors.windows(2).find(|w| !w[0].0.is_proper_subset(w[1].0)) {
            return Err(Error::InvalidMonomial(format!(
                "x{} and x{} are not nested (the product is zero in the face ring)",
                w[0].0, w[1].0
            )));
        }
        Ok(Monomial { d, factors })
    }

    /// The square-free monomial on a chain.
    pub fn square_free<I: IntoIterator<Item = VertexSet>>(d: usize, chain: I) -> Result<Self> {
        Monomial::new(d, chain.into_iter().map(|s| (s, 1)))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn factors(&self) -> &[(VertexSet, u32)] {
        &self.factors
    }

    pub fn support(&self) -> Vec<VertexSet> {
        self.factors.iter().map(|f| f.0).collect()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.1 as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|f| f.1 == 1)
    }

    /// Face-ring divisibility.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.d == other.d
            && self.factors.iter().all(|&(s, e)| {
                other
                    .factors
                    .iter()
                    .any(|&(t, f)| t == s && f >= e)
            })
    }

    /// `self · x_S^e`, or `None` when `S` does not fit the chain.
    pub fn times(&self, s: VertexSet, e: u32) -> Option<Monomial> {
        Monomial::new(self.d, self.factors.iter().copied().chain([(s, e)])).ok()
    }

    fn write_set(&self, s: VertexSet, out: &mut String) {
        if self.d > 0 && s == VertexSet::full(self.d) {
            out.push_str("{*}");
        } else {
            out.push_str(&s.to_string());
        }
    }

    /// Parses `x{2,5}^3 * x{}^2 * x{2,3,5}`; `{}` is `∅`, `{*}` is `[d]`,
    /// and `1` is the unit. Whitespace is ignored.
    pub fn parse(text: &str, d: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" {
            return Ok(Monomial::unit(d));
        }
        if compact.is_empty() {
            return Err(Error::InvalidMonomial("empty expression".into()));
        }
        let mut factors = Vec::new();
        let mut terms = Vec::new();
        let (mut depth, mut start) = (0i32, 0);
        for (i, ch) in compact.char_indices() {
            match ch {
                '{' => depth += 1,
                '}' => depth -= 1,
                '*' if depth == 0 => {
                    terms.push(&compact[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let bad = || Error::InvalidMonomial(format!("malformed factor {term:?}"));
            let rest = term.strip_prefix("x{").ok_or_else(bad)?;
            let (inner, tail) = rest.split_once('}').ok_or_else(bad)?;
            let set = if inner == "*" {
                VertexSet::full(d)
            } else if inner.is_empty() {
                VertexSet::EMPTY
            } else {
                let mut s = VertexSet::EMPTY;
                for v in inner.split(',') {
                    let v: usize = v.parse().map_err(|_| bad())?;
                    if v == 0 || v > d {
                        return Err(Error::InvalidMonomial(format!(
                            "vertex {v} out of range 1..={d}"
                        )));
                    }
                    s = s.with(v);
                }
                s
            };
            let exp = match tail {
                "" => 1,
                t => t
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(bad)?,
            };
            factors.push((set, exp));
        }
        Monomial::new(d, factors)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut out = String::new();
        for (k, &(s, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                out.push_str(" * ");
            }
            out.push('x');
            self.write_set(s, &mut out);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        f.write_str(&out)
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Which G-sequence the basic monomials come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GSequence {
    /// Drop the last block; the usual coloring ideal.
    Short,
    /// Keep every block, so the chain always ends in `[d]`.
    Full,
}

/// Support chains of the basic coloring monomials, one per distinct chain.
pub fn basic_chains(g: &Graph, which: GSequence, cfg: &Config) -> Result<BTreeSet<Vec<VertexSet>>> {
    cfg.limits.check_perms(g.d())?;
    let d = g.d();
    let adj = adjacency_masks(g);
    Ok(fold_range(
        cfg.exec,
        perm::factorial(d),
        BTreeSet::new,
        |mut acc, range| {
            let mut ell = vec![0u32; d];
            let mut cuts = Vec::with_capacity(d);
            perm::for_each_in_range(d, range, |p| {
                cut_positions(&adj, p, &mut ell, &mut cuts);
                let mut prefix = VertexSet::EMPTY;
                let mut chain = Vec::with_capacity(cuts.len());
                let mut next_cut = 1;
                for (k, &a) in p.iter().enumerate() {
                    if next_cut < cuts.len() && cuts[next_cut] == k {
                        chain.push(prefix);
                        next_cut += 1;
                    }
                    prefix = prefix.with(a as usize);
                }
                if which == GSequence::Full {
                    chain.push(prefix);
                }
                acc.insert(chain);
            });
            acc
        },
        |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        },
    ))
}

/// Basic coloring monomials, deduplicated. Contains the unit monomial exactly
/// when `g` has no edges.
pub fn basic_coloring_monomials(g: &Graph) -> Result<BTreeSet<Monomial>> {
    basic_coloring_monomials_with(g, &Config::default())
}

pub fn basic_coloring_monomials_with(g: &Graph, cfg: &Config) -> Result<BTreeSet<Monomial>> {
    basic_chains(g, GSequence::Short, cfg)?
        .into_iter()
        .map(|c| Monomial::square_free(g.d(), c))
        .collect()
}

fn minimal_chains(basic: &HashSet<Vec<VertexSet>>) -> BTreeSet<Vec<VertexSet>> {
    basic
        .iter()
        .filter(|chain| {
            let k = chain.len();
            // no proper subchain is itself basic
            (0u32..(1 << k) - 1).all(|mask| !basic.contains(&subchain(chain, mask)))
        })
        .cloned()
        .collect()
}

fn subchain(chain: &[VertexSet], mask: u32) -> Vec<VertexSet> {
    chain
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &s)| s)
        .collect()
}

/// The coloring ideal of one graph with its generators precomputed.
#[derive(Debug, Clone)]
pub struct ColoringIdeal {
    graph: Graph,
    basic: HashSet<Vec<VertexSet>>,
    minimal: BTreeSet<Vec<VertexSet>>,
}

impl ColoringIdeal {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_config(g, &Config::default())
    }

    pub fn with_config(g: &Graph, cfg: &Config) -> Result<Self> {
        let basic: HashSet<_> = basic_chains(g, GSequence::Short, cfg)?.into_iter().collect();
        let minimal = minimal_chains(&basic);
        Ok(ColoringIdeal {
            graph: g.clone(),
            basic,
            minimal,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn basic_monomials(&self) -> BTreeSet<Monomial> {
        self.basic
            .iter()
            .map(|c| Monomial::square_free(self.graph.d(), c.iter().copied()).expect("nested"))
            .collect()
    }

    pub fn minimal_generators(&self) -> Vec<Monomial> {
        self.minimal
            .iter()
            .map(|c| Monomial::square_free(self.graph.d(), c.iter().copied()).expect("nested"))
            .collect()
    }

    /// Support chains of the minimal generators.
    pub fn minimal_supports(&self) -> &BTreeSet<Vec<VertexSet>> {
        &self.minimal
    }

    /// Membership by divisibility: some basic support chain is a subchain of
    /// the support of `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_universe(&self.graph, m)?;
        Ok(self.contains_support(&m.support()))
    }

    pub(crate) fn contains_support(&self, support: &[VertexSet]) -> bool {
        let full = self.graph.vertices();
        // ∅ and [d] never occur in a basic chain.
        let inner: Vec<VertexSet> = support
            .iter()
            .copied()
            .filter(|&s| !s.is_empty() && s != full)
            .collect();
        (0u32..(1 << inner.len())).any(|mask| self.basic.contains(&subchain(&inner, mask)))
    }
}

fn check_universe(g: &Graph, m: &Monomial) -> Result<()> {
    if m.d() != g.d() {
        return Err(Error::InvalidMonomial(format!(
            "monomial lives over [{}], graph has {} vertices",
            m.d(),
            g.d()
        )));
    }
    Ok(())
}

pub fn minimal_generators(g: &Graph) -> Result<Vec<Monomial>> {
    Ok(ColoringIdeal::new(g)?.minimal_generators())
}

/// Membership by the block criterion: every difference block
/// `S_1, S_2 ∖ S_1, …, S_k ∖ S_{k-1}` and the remainder `[d] ∖ S_k` is stable.
pub fn contains_monomial(g: &Graph, m: &Monomial) -> Result<bool> {
    check_universe(g, m)?;
    Ok(support_blocks_stable(g, &m.support()))
}

fn support_blocks_stable(g: &Graph, support: &[VertexSet]) -> bool {
    let mut prev = VertexSet::EMPTY;
    for &s in support {
        if !g.is_stable(s.minus(prev)) {
            return false;
        }
        prev = s;
    }
    g.is_stable(g.vertices().minus(prev))
}

/// Membership by divisibility against the basic monomials.
pub fn contains_by_divisibility(g: &Graph, m: &Monomial) -> Result<bool> {
    ColoringIdeal::new(g)?.contains(m)
}

/// The `(n+1)`-coloring encoded by a degree-`n` monomial of `K_G`.
pub fn decode_monomial(g: &Graph, m: &Monomial) -> Result<Coloring> {
    if !contains_monomial(g, m)? {
        return Err(Error::NotInIdeal(m.to_string()));
    }
    let top = m.degree() as u32 + 1;
    let mut colors = vec![top; g.d()];
    let mut prev = VertexSet::EMPTY;
    let mut used = 0u32;
    for &(s, e) in m.factors() {
        for v in s.minus(prev).iter() {
            colors[v - 1] = used + 1;
        }
        used += e;
        prev = s;
    }
    Coloring::new(top, colors)
}

/// The monomial of degree `palette - 1` encoding a proper coloring.
pub fn encode_coloring(g: &Graph, c: &Coloring) -> Result<Monomial> {
    c.check_proper(g)?;
    let classes: Vec<(u32, VertexSet)> = c.classes().into_iter().collect();
    let mut factors = Vec::with_capacity(classes.len() + 1);
    let first = classes[0].0;
    factors.push((VertexSet::EMPTY, first - 1));
    let mut union = VertexSet::EMPTY;
    for (i, &(color, class)) in classes.iter().enumerate() {
        union = union | class;
        let next = classes.get(i + 1).map_or(c.palette(), |x| x.0);
        factors.push((union, next - color));
    }
    Monomial::new(g.d(), factors)
}

/// Visits every face-ring monomial of degree `n` over `[d]`, built as a
/// weakly increasing sequence `T_1 ⊆ ⋯ ⊆ T_n` of subsets.
pub fn for_each_monomial(d: usize, n: usize, mut visit: impl FnMut(&Monomial)) {
    fn rec(
        d: usize,
        remaining: usize,
        factors: &mut Vec<(VertexSet, u32)>,
        visit: &mut dyn FnMut(&Monomial),
    ) {
        if remaining == 0 {
            visit(&Monomial {
                d,
                factors: factors.clone(),
            });
            return;
        }
        let full = VertexSet::full(d).mask();
        let base = factors.last().map_or(0, |f| f.0.mask());
        // supersets of base: base | sub for every submask of the complement
        let free = full & !base;
        let mut sub = free;
        loop {
            let s = VertexSet::from_mask(base | sub);
            match factors.last_mut() {
                Some(last) if last.0 == s => {
                    last.1 += 1;
                    rec(d, remaining - 1, factors, visit);
                    factors.last_mut().expect("present").1 -= 1;
                }
                _ => {
                    factors.push((s, 1));
                    rec(d, remaining - 1, factors, visit);
                    factors.pop();
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    rec(d, n, &mut Vec::new(), &mut visit);
}

/// Number of degree-`n` monomials of `K_G`, by enumerating every face-ring
/// monomial of that degree and testing divisibility.
pub fn count_degree_monomials(g: &Graph, n: usize) -> Result<BigInt> {
    count_degree_monomials_with(g, n, &Config::default())
}

pub fn count_degree_monomials_with(g: &Graph, n: usize, cfg: &Config) -> Result<BigInt> {
    cfg.limits.check_monomials(g.d(), n)?;
    ColoringIdeal::with_config(g, cfg)?.count_degree_monomials(n, cfg)
}

impl ColoringIdeal {
    /// Number of degree-`n` face-ring monomials in this ideal.
    pub fn count_degree_monomials(&self, n: usize, cfg: &Config) -> Result<BigInt> {
        count_in_ideal(self, n, cfg)
    }
}

fn count_in_ideal(ideal: &ColoringIdeal, n: usize, cfg: &Config) -> Result<BigInt> {
    let d = ideal.graph().d();
    cfg.limits.check_monomials(d, n)?;
    if n == 0 {
        return Ok(BigInt::from(ideal.contains_support(&[]) as u32));
    }
    // Split on the first set T_1.
    let count = fold_range(
        cfg.exec,
        1u64 << d,
        || 0u64,
        |mut acc, range| {
            for first in range {
                let t1 = VertexSet::from_mask(first as u32);
                let base = Monomial::new(d, [(t1, 1)]).expect("single factor");
                let mut count_rest = |m: &Monomial| {
                    if ideal.contains_support(&m.support()) {
                        acc += 1;
                    }
                };
                extend_monomials(&base, n - 1, &mut count_rest);
            }
            acc
        },
        |a, b| a + b,
    );
    Ok(BigInt::from(count))
}

fn extend_monomials(start: &Monomial, extra: usize, visit: &mut dyn FnMut(&Monomial)) {
    fn rec(m: &mut Monomial, remaining: usize, visit: &mut dyn FnMut(&Monomial)) {
        if remaining == 0 {
            visit(m);
            return;
        }
        let full = VertexSet::full(m.d).mask();
        let base = m.factors.last().map_or(0, |f| f.0.mask());
        let free = full & !base;
        let mut sub = free;
        loop {
            if sub == 0 {
                m.factors.last_mut().expect("nonempty").1 += 1;
                rec(m, remaining - 1, visit);
                m.factors.last_mut().expect("nonempty").1 -= 1;
                break;
            }
            m.factors.push((VertexSet::from_mask(base | sub), 1));
            rec(m, remaining - 1, visit);
            m.factors.pop();
            sub = (sub - 1) & free;
        }
    }
    let mut m = start.clone();
    rec(&mut m, extra, visit);
}

/// Label-free statistics of the minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenStats {
    /// Degree → number of minimal generators of that degree.
    pub degree_histogram: BTreeMap<usize, usize>,
    /// For each indeterminate `x_S` occurring in some minimal generator, the
    /// number of generators it occurs in; sorted ascending.
    pub indeterminate_multiplicities: Vec<usize>,
}

pub fn generator_stats(g: &Graph) -> Result<GenStats> {
    Ok(ColoringIdeal::new(g)?.generator_stats())
}

impl ColoringIdeal {
    pub fn generator_stats(&self) -> GenStats {
        let mut degree_histogram = BTreeMap::new();
        let mut occurrences: BTreeMap<VertexSet, usize> = BTreeMap::new();
        for chain in &self.minimal {
            *degree_histogram.entry(chain.len()).or_default() += 1;
            for &s in chain {
                *occurrences.entry(s).or_default() += 1;
            }
        }
        let mut indeterminate_multiplicities: Vec<usize> = occurrences.into_values().collect();
        indeterminate_multiplicities.sort_unstable();
        GenStats {
            degree_histogram,
            indeterminate_multiplicities,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_labeled_graphs, chromatic_polynomial, Named};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn m(g: &Graph, text: &str) -> Monomial {
        Monomial::parse(text, g.d()).unwrap()
    }

    #[test]
    fn worked_permutation_basic_monomial() {
        let g = Named::PathPlusEdge7.graph();
        let basic = basic_coloring_monomials(&g).unwrap();
        let want = Monomial::square_free(7, [vs(&[2, 5]), vs(&[2, 3, 5, 6]), vs(&[1, 2, 3, 4, 5, 6])])
            .unwrap();
        assert!(basic.contains(&want));
    }

    #[test]
    fn edge_plus_isolated_basic_and_minimal() {
        let g = Named::EdgePlusIsolated.graph();
        let basic = basic_coloring_monomials(&g).unwrap();
        let want: BTreeSet<Monomial> = ["x{1}", "x{1}*x{1,3}", "x{2}", "x{2}*x{2,3}", "x{1,3}", "x{2,3}"]
            .iter()
            .map(|t| m(&g, t))
            .collect();
        assert_eq!(basic, want);
        let minimal: BTreeSet<Monomial> = minimal_generators(&g).unwrap().into_iter().collect();
        let want: BTreeSet<Monomial> = ["x{1}", "x{2}", "x{1,3}", "x{2,3}"]
            .iter()
            .map(|t| m(&g, t))
            .collect();
        assert_eq!(minimal, want);
    }

    #[test]
    fn edgeless_ideal_is_whole_ring() {
        let g = Graph::edgeless(4);
        let basic = basic_coloring_monomials(&g).unwrap();
        assert!(basic.contains(&Monomial::unit(4)));
        assert_eq!(minimal_generators(&g).unwrap(), vec![Monomial::unit(4)]);
        let stats = generator_stats(&g).unwrap();
        assert_eq!(stats.degree_histogram, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn k3_generators_have_small_degree() {
        let g = Graph::complete(3);
        let gens = minimal_generators(&g).unwrap();
        assert!(!gens.is_empty());
        assert!(gens.iter().all(|m| m.degree() <= 2 && m.is_square_free()));
        // In K3 every permutation is all cuts: chains {a} ⊂ {a,b}.
        assert_eq!(gens.len(), 6);
    }

    #[test]
    fn membership_examples() {
        let g = Named::EdgePlusIsolated.graph();
        let x13 = m(&g, "x{1,3}");
        assert!(contains_monomial(&g, &x13).unwrap());
        assert!(contains_by_divisibility(&g, &x13).unwrap());
        let empty = m(&g, "x{}");
        assert!(!contains_monomial(&g, &empty).unwrap());
        assert!(!contains_by_divisibility(&g, &empty).unwrap());
        let top = m(&g, "x{*}^3");
        assert!(!contains_monomial(&g, &top).unwrap());
        assert!(!contains_by_divisibility(&g, &top).unwrap());
        assert!(contains_monomial(&Graph::path(4), &Monomial::unit(3)).is_err());
    }

    #[test]
    fn decode_worked_example() {
        // any graph for which the blocks {2,5}, {3}, {1,4,6,7} are stable
        for g in [Graph::edgeless(7), Named::CodecExample7.graph()] {
            let mono = Monomial::parse("x{}^2 * x{2,5}^3 * x{2,3,5}^2", 7).unwrap();
            let c = decode_monomial(&g, &mono).unwrap();
            assert_eq!(c.palette(), 8);
            assert_eq!(c.colors(), &[8, 3, 6, 8, 3, 8, 8]);
        }
        let g = Named::PathPlusEdge7.graph();
        let mono = Monomial::parse("x{}^2 * x{2,5}^3 * x{2,3,5}^2", 7).unwrap();
        assert!(matches!(decode_monomial(&g, &mono), Err(Error::NotInIdeal(_))));
    }

    #[test]
    fn decode_small_examples() {
        let g = Named::EdgePlusIsolated.graph();
        let c = decode_monomial(&g, &m(&g, "x{1,3}")).unwrap();
        assert_eq!((c.palette(), c.colors()), (2, &[1, 2, 1][..]));
        let e = Graph::edgeless(4);
        let c = decode_monomial(&e, &Monomial::unit(4)).unwrap();
        assert_eq!((c.palette(), c.colors()), (1, &[1, 1, 1, 1][..]));
    }

    #[test]
    fn encode_worked_example() {
        let g = Named::CodecExample7.graph();
        let c = Coloring::new(9, vec![7, 7, 4, 7, 7, 4, 6]).unwrap();
        let mono = encode_coloring(&g, &c).unwrap();
        assert_eq!(mono.to_string(), "x{}^3 * x{3,6}^2 * x{3,6,7} * x{*}^2");
        assert_eq!(mono.degree(), 8);
        assert_eq!(decode_monomial(&g, &mono).unwrap(), c);
    }

    #[test]
    fn encode_small_examples() {
        let g = Named::EdgePlusIsolated.graph();
        let c = Coloring::new(2, vec![1, 2, 1]).unwrap();
        assert_eq!(encode_coloring(&g, &c).unwrap().to_string(), "x{1,3}");
        let e = Graph::edgeless(3);
        let c = Coloring::new(1, vec![1, 1, 1]).unwrap();
        assert!(encode_coloring(&e, &c).unwrap().is_unit());
        let bad = Coloring::new(2, vec![1, 1, 2]).unwrap();
        assert!(encode_coloring(&g, &bad).is_err());
    }

    #[test]
    fn parser_and_printer() {
        let mono = Monomial::parse(" x{2,5}^3*x{ }^2 * x{2,3,5}^2 ", 7).unwrap();
        assert_eq!(mono.to_string(), "x{}^2 * x{2,5}^3 * x{2,3,5}^2");
        assert_eq!(Monomial::parse(&mono.to_string(), 7).unwrap(), mono);
        assert_eq!(Monomial::parse("x{1}*x{1}", 3).unwrap().to_string(), "x{1}^2");
        assert_eq!(Monomial::parse("1", 3).unwrap(), Monomial::unit(3));
        assert!(Monomial::parse("x{1}*x{2}", 3).is_err());
        assert!(Monomial::parse("x{4}", 3).is_err());
        assert!(Monomial::parse("y{1}", 3).is_err());
        assert!(Monomial::parse("x{1}^", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
    }

    #[test]
    fn degree_counts_examples() {
        let g = Named::EdgePlusIsolated.graph();
        assert_eq!(count_degree_monomials(&g, 1).unwrap(), BigInt::from(4));
        assert_eq!(count_degree_monomials(&g, 0).unwrap(), BigInt::from(0));
        assert_eq!(count_degree_monomials(&Graph::edgeless(3), 0).unwrap(), BigInt::from(1));
        assert_eq!(count_degree_monomials(&Graph::complete(3), 2).unwrap(), BigInt::from(6));
    }

    #[test]
    fn enumerator_counts_multichains() {
        // degree-n multichains in B_d number (n+1)^d
        for d in 1..=4 {
            for n in 0..=3 {
                let mut count = 0u64;
                for_each_monomial(d, n, |_| count += 1);
                assert_eq!(count, (n as u64 + 1).pow(d as u32));
            }
        }
    }

    #[test]
    fn hilbert_function_matches_shifted_chromatic_on_four() {
        for g in all_labeled_graphs(4) {
            let chi = chromatic_polynomial(&g);
            let ideal = ColoringIdeal::new(&g).unwrap();
            for n in 0..=3 {
                let cnt = ideal.count_degree_monomials(n, &Config::default()).unwrap();
                assert_eq!(cnt, chi.eval_i64(n as i64 + 1), "{g} n={n}");
            }
        }
    }

    #[test]
    fn membership_paths_agree_on_four() {
        for g in all_labeled_graphs(4) {
            let ideal = ColoringIdeal::new(&g).unwrap();
            for n in 0..=3 {
                for_each_monomial(4, n, |mono| {
                    assert_eq!(
                        ideal.contains(mono).unwrap(),
                        contains_monomial(&g, mono).unwrap(),
                        "{g} {mono}"
                    );
                });
            }
        }
    }

    #[test]
    fn basic_monomials_are_square_free_chains_without_top() {
        for g in all_labeled_graphs(4) {
            for b in basic_coloring_monomials(&g).unwrap() {
                assert!(b.is_square_free());
                assert!(b.support().iter().all(|&s| !s.is_empty() && s != g.vertices()));
            }
        }
    }

    #[test]
    fn top_multiplication_widens_palette() {
        let g = Named::Star4.graph();
        for n in 1..=3 {
            for_each_monomial(4, n, |mono| {
                if !contains_monomial(&g, mono).unwrap() {
                    return;
                }
                let c = decode_monomial(&g, mono).unwrap();
                let up = mono.times(g.vertices(), 1).unwrap();
                assert!(contains_monomial(&g, &up).unwrap());
                let c2 = decode_monomial(&g, &up).unwrap();
                assert_eq!(c2.colors(), c.colors());
                assert_eq!(c2.palette(), c.palette() + 1);
                let down = mono.times(VertexSet::EMPTY, 1).unwrap();
                assert!(contains_monomial(&g, &down).unwrap());
            });
        }
    }

    #[test]
    fn stats_of_edge_plus_isolated() {
        let s = generator_stats(&Named::EdgePlusIsolated.graph()).unwrap();
        assert_eq!(s.degree_histogram, BTreeMap::from([(1, 4)]));
        assert_eq!(s.indeterminate_multiplicities, vec![1, 1, 1, 1]);
    }
}
