//! Path lengths, cuts and G-sequences of permutations, the W-polynomial, and
//! the coloring ↔ (permutation, extra cuts) correspondence.
//!
//! For `π = a_1 … a_d`, `ℓ(k)` is the length of the longest path of `G` that
//! ends at `a_k` and visits letters at strictly increasing positions. Position
//! `k ∈ {0..d-1}` is a cut when `k = 0`, when `ℓ(k) < ℓ(k+1)`, or when
//! `ℓ(k) = ℓ(k+1)` and `a_k < a_{k+1}`. The blocks between consecutive cuts
//! form the G-sequence; every block is a stable set.

pub(crate) mod perm;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exec::fold_range;
use crate::graph::{chromatic_polynomial, Coloring, Graph, VertexSet};
use crate::poly::IntPolynomial;
use crate::poly_lab::binomial;

/// A permutation `a_1 … a_d` of `1..=d`, in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let d = letters.len();
        let mut seen = vec![false; d + 1];
        for &a in &letters {
            if a == 0 || a > d {
                return Err(Error::NotPermutation {
                    d,
                    detail: format!("letter {a} out of range"),
                });
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::NotPermutation {
                    d,
                    detail: format!("letter {a} repeated"),
                });
            }
        }
        Ok(Permutation(letters))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((1..=d).collect())
    }

    /// `d (d-1) … 1`.
    pub fn reversed(d: usize) -> Self {
        Permutation((1..=d).rev().collect())
    }

    /// Accepts either a digit string (`"5236417"`) or whitespace- or
    /// comma-separated letters.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let letters: Vec<usize> = if t.contains(|c: char| c == ',' || c.is_whitespace()) {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse().map_err(|_| Error::NotPermutation {
                        d: 0,
                        detail: format!("bad letter {s:?}"),
                    })
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10).map(|x| x as usize).ok_or(Error::NotPermutation {
                        d: 0,
                        detail: format!("bad letter {c:?}"),
                    })
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { " " } else { "" };
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Which cut rule to apply.
///
/// `DropLetterTieBreak` omits the `a_k < a_{k+1}` case and exists only as a
/// negative control for the verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutRule {
    #[default]
    Standard,
    DropLetterTieBreak,
}

/// Path lengths, cuts and G-sequence of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutProfile {
    pub perm: Vec<usize>,
    /// `ell[k-1] = ℓ(k)`.
    pub ell: Vec<u32>,
    /// Cut positions in increasing order, always starting with 0.
    pub cuts: Vec<usize>,
    pub gseq: Vec<VertexSet>,
}

impl CutProfile {
    pub fn cut_count(&self) -> usize {
        self.cuts.len()
    }

    /// The G-sequence without its last block.
    pub fn short_gseq(&self) -> &[VertexSet] {
        &self.gseq[..self.gseq.len().saturating_sub(1)]
    }
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (1..=g.d()).map(|v| g.neighbors(v).mask()).collect()
}

/// `ℓ` for the letters of `perm` (1-based labels), by the left-to-right DP.
fn path_lengths(adj: &[u32], perm: &[u8], ell: &mut [u32]) {
    // best[v] = ℓ at the position of v, for letters already placed.
    let mut best = [0u32; 32];
    let mut placed = 0u32;
    for (k, &a) in perm.iter().enumerate() {
        let v = (a - 1) as usize;
        let mut nb = adj[v] & placed;
        let mut l = 0u32;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            l = l.max(best[u] + 1);
        }
        ell[k] = l;
        best[v] = l;
        placed |= 1 << v;
    }
}

#[inline]
fn is_cut_between(rule: CutRule, ell: &[u32], perm: &[u8], k: usize) -> bool {
    // Positions are 1-based in the definition: compare ℓ(k) with ℓ(k+1).
    let (l0, l1) = (ell[k - 1], ell[k]);
    match rule {
        CutRule::Standard => l0 < l1 || (l0 == l1 && perm[k - 1] < perm[k]),
        CutRule::DropLetterTieBreak => l0 < l1,
    }
}

fn count_cuts(rule: CutRule, adj: &[u32], perm: &[u8], ell: &mut [u32]) -> usize {
    path_lengths(adj, perm, ell);
    1 + (1..perm.len())
        .filter(|&k| is_cut_between(rule, ell, perm, k))
        .count()
}

/// Cut positions of `perm` (1-based labels) into `cuts`, starting with 0.
pub(crate) fn cut_positions(adj: &[u32], perm: &[u8], ell: &mut [u32], cuts: &mut Vec<usize>) {
    path_lengths(adj, perm, ell);
    cuts.clear();
    cuts.push(0);
    cuts.extend((1..perm.len()).filter(|&k| is_cut_between(CutRule::Standard, ell, perm, k)));
}

fn to_letters(perm: &Permutation) -> Vec<u8> {
    perm.letters().iter().map(|&a| a as u8).collect()
}

fn check_perm(g: &Graph, perm: &Permutation) -> Result<()> {
    if perm.len() != g.d() {
        return Err(Error::NotPermutation {
            d: g.d(),
            detail: format!("length {}", perm.len()),
        });
    }
    Ok(())
}

/// Full cut profile of `perm` with respect to `g`.
pub fn cut_profile(g: &Graph, perm: &Permutation) -> Result<CutProfile> {
    cut_profile_with_rule(g, perm, CutRule::Standard)
}

pub fn cut_profile_with_rule(g: &Graph, perm: &Permutation, rule: CutRule) -> Result<CutProfile> {
    check_perm(g, perm)?;
    let d = g.d();
    let letters = to_letters(perm);
    let adj = adjacency_masks(g);
    let mut ell = vec![0u32; d];
    path_lengths(&adj, &letters, &mut ell);
    let mut cuts = vec![0usize];
    cuts.extend((1..d).filter(|&k| is_cut_between(rule, &ell, &letters, k)));
    let gseq = blocks(perm.letters(), &cuts);
    Ok(CutProfile {
        perm: perm.letters().to_vec(),
        ell,
        cuts,
        gseq,
    })
}

/// Splits `letters` at the given cut positions (which include 0).
fn blocks(letters: &[usize], cuts: &[usize]) -> Vec<VertexSet> {
    let mut bounds: Vec<usize> = cuts.to_vec();
    bounds.push(letters.len());
    bounds
        .windows(2)
        .map(|w| VertexSet::from_vertices(letters[w[0]..w[1]].iter().copied()))
        .collect()
}

/// `W_G(t) = Σ_{π ∈ S_d} t^{c(π)}`, stored as coefficients `w_0..w_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPolynomial {
    d: usize,
    poly: IntPolynomial,
}

impl WPolynomial {
    pub fn from_poly(d: usize, poly: IntPolynomial) -> Self {
        WPolynomial { d, poly }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn as_poly(&self) -> &IntPolynomial {
        &self.poly
    }

    /// `w_0..w_d`, zero-padded to length `d + 1`.
    pub fn coeffs(&self) -> Vec<BigInt> {
        self.poly.padded(self.d + 1)
    }
}

/// Histogram of cut counts over all of `S_d`, index = number of cuts.
pub fn cut_histogram(g: &Graph, rule: CutRule, cfg: &Config) -> Result<Vec<u64>> {
    cfg.limits.check_perms(g.d())?;
    let d = g.d();
    let adj = adjacency_masks(g);
    Ok(fold_range(
        cfg.exec,
        perm::factorial(d),
        || vec![0u64; d + 1],
        |mut hist, range| {
            let mut ell = vec![0u32; d];
            perm::for_each_in_range(d, range, |p| {
                hist[count_cuts(rule, &adj, p, &mut ell)] += 1;
            });
            hist
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    ))
}

pub fn w_polynomial(g: &Graph) -> Result<WPolynomial> {
    w_polynomial_with(g, CutRule::Standard, &Config::default())
}

pub fn w_polynomial_with(g: &Graph, rule: CutRule, cfg: &Config) -> Result<WPolynomial> {
    let hist = cut_histogram(g, rule, cfg)?;
    Ok(WPolynomial {
        d: g.d(),
        poly: IntPolynomial::new(hist.into_iter().map(BigInt::from).collect()),
    })
}

/// The permutation a coloring comes from, with the class boundaries that are
/// not cuts of that permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub profile: CutProfile,
    /// Positions where one color class ends and the next begins (never 0).
    pub boundaries: BTreeSet<usize>,
    pub extra_cuts: BTreeSet<usize>,
}

/// Concatenates the color classes in increasing color order, each sorted by
/// decreasing `ℓ` and then decreasing label.
pub fn canonical_permutation(g: &Graph, c: &Coloring) -> Result<CanonicalForm> {
    c.check_proper(g)?;
    let adj = adjacency_masks(g);
    let mut best = vec![0u32; g.d()];
    let mut placed = 0u32;
    let mut letters: Vec<usize> = Vec::with_capacity(g.d());
    let mut boundaries = BTreeSet::new();
    for class in c.classes().values() {
        if !letters.is_empty() {
            boundaries.insert(letters.len());
        }
        // A class is stable, so its ℓ values depend only on earlier classes.
        let mut members: Vec<(u32, usize)> = class
            .iter()
            .map(|v| {
                let mut nb = adj[v - 1] & placed;
                let mut l = 0;
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    l = l.max(best[u] + 1);
                }
                (l, v)
            })
            .collect();
        members.sort_unstable_by(|a, b| b.cmp(a));
        for (l, v) in members {
            best[v - 1] = l;
            letters.push(v);
        }
        placed |= class.mask();
    }
    let perm = Permutation::new(letters)?;
    let profile = cut_profile(g, &perm)?;
    if let Some(&k) = profile
        .cuts
        .iter()
        .find(|&&k| k != 0 && !boundaries.contains(&k))
    {
        return Err(Error::Invalid(format!(
            "cut {k} of {perm} falls inside a color class"
        )));
    }
    let extra_cuts = boundaries
        .iter()
        .copied()
        .filter(|k| profile.cuts.binary_search(k).is_err())
        .collect();
    Ok(CanonicalForm {
        profile,
        boundaries,
        extra_cuts,
    })
}

/// The forward direction: split `perm` at its cuts plus `extra_cuts` and color
/// the blocks with `colors` in order.
pub fn coloring_from_cuts(
    profile: &CutProfile,
    extra_cuts: &BTreeSet<usize>,
    colors: &[u32],
    palette: u32,
) -> Result<Coloring> {
    let d = profile.perm.len();
    if let Some(&k) = extra_cuts
        .iter()
        .find(|&&k| k == 0 || k >= d || profile.cuts.contains(&k))
    {
        return Err(Error::Invalid(format!("{k} is not a non-cut position")));
    }
    let mut all: Vec<usize> = profile.cuts.iter().chain(extra_cuts).copied().collect();
    all.sort_unstable();
    if colors.len() != all.len() {
        return Err(Error::LengthMismatch {
            expected: all.len(),
            actual: colors.len(),
        });
    }
    if colors.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidColoring("block colors must increase".into()));
    }
    let mut out = vec![0u32; d];
    for (block, &col) in blocks(&profile.perm, &all).iter().zip(colors) {
        for v in block.iter() {
            out[v - 1] = col;
        }
    }
    Coloring::new(palette, out)
}

/// Checks `Σ_{π ∈ S_d} C(n + d - c(π), d) = χ_G(n)` exactly.
pub fn chromatic_identity_check(g: &Graph, n: u64) -> Result<bool> {
    chromatic_identity_check_with(g, n, CutRule::Standard, &Config::default())
}

pub fn chromatic_identity_check_with(
    g: &Graph,
    n: u64,
    rule: CutRule,
    cfg: &Config,
) -> Result<bool> {
    let d = g.d() as u64;
    let hist = cut_histogram(g, rule, cfg)?;
    let lhs: BigInt = hist
        .iter()
        .enumerate()
        .map(|(c, &count)| BigInt::from(count) * binomial(n + d - c as u64, d))
        .sum();
    Ok(lhs == chromatic_polynomial(g).eval(&BigInt::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_colorings, Named};
    use crate::poly_lab::eulerian_polynomial;

    /// Definitional ℓ: longest path ending at position k through strictly
    /// increasing positions, by exhaustive search over position subsets.
    fn brute_force_ell(g: &Graph, perm: &[usize]) -> Vec<u32> {
        let d = perm.len();
        let mut out = vec![0u32; d];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut best = 0;
            for mask in 0u32..(1 << k) {
                let mut positions: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
                positions.push(k);
                let ok = positions
                    .windows(2)
                    .all(|w| g.has_edge(perm[w[0]], perm[w[1]]));
                if ok {
                    best = best.max(positions.len() as u32 - 1);
                }
            }
            *slot = best;
        }
        out
    }

    #[test]
    fn worked_example_profile() {
        let g = Named::PathPlusEdge7.graph();
        let p = cut_profile(&g, &Permutation::parse("5236417").unwrap()).unwrap();
        assert_eq!(p.ell, vec![0, 0, 1, 0, 2, 1, 1]);
        assert_eq!(p.cuts, vec![0, 2, 4, 6]);
        let want: Vec<VertexSet> = [vec![2, 5], vec![3, 6], vec![1, 4], vec![7]]
            .into_iter()
            .map(VertexSet::from_vertices)
            .collect();
        assert_eq!(p.gseq, want);
        assert_eq!(p.short_gseq(), &want[..3]);
    }

    #[test]
    fn edgeless_reverse_has_one_block() {
        for d in 1..7 {
            let p = cut_profile(&Graph::edgeless(d), &Permutation::reversed(d)).unwrap();
            assert_eq!(p.cuts, vec![0]);
            assert_eq!(p.gseq, vec![VertexSet::full(d)]);
            assert!(p.short_gseq().is_empty());
        }
    }

    #[test]
    fn edge_plus_isolated_312() {
        let g = Named::EdgePlusIsolated.graph();
        let perm = Permutation::parse("312").unwrap();
        let p = cut_profile(&g, &perm).unwrap();
        assert_eq!(p.ell, vec![0, 0, 1]);
        assert_eq!(p.ell, brute_force_ell(&g, perm.letters()));
        assert_eq!(p.cuts, vec![0, 2]);
        assert_eq!(
            p.gseq,
            vec![VertexSet::from_vertices([1, 3]), VertexSet::singleton(2)]
        );
        assert_eq!(p.short_gseq(), &[VertexSet::from_vertices([1, 3])]);
    }

    #[test]
    fn dp_matches_definition_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for d in 1..=7 {
            for _ in 0..20 {
                let g = crate::graph::random_graph(d, &mut rng);
                let perm = Permutation::new(crate::graph::random_permutation(d, &mut rng)).unwrap();
                let p = cut_profile(&g, &perm).unwrap();
                assert_eq!(p.ell, brute_force_ell(&g, perm.letters()), "{g} {perm}");
            }
        }
    }

    #[test]
    fn blocks_are_stable_and_decreasing() {
        let g = Named::Bowtie.graph();
        perm::for_each_in_range(5, 0..120, |p| {
            let perm = Permutation::new(p.iter().map(|&a| a as usize).collect()).unwrap();
            let prof = cut_profile(&g, &perm).unwrap();
            for b in &prof.gseq {
                assert!(g.is_stable(*b));
            }
            for m in 1..5 {
                if !prof.cuts.contains(&m) {
                    let (l0, l1) = (prof.ell[m - 1], prof.ell[m]);
                    assert!(l0 > l1 || (l0 == l1 && prof.perm[m - 1] > prof.perm[m]));
                }
            }
        });
    }

    #[test]
    fn w_polynomial_examples() {
        let k3 = w_polynomial(&Graph::complete(3)).unwrap();
        assert_eq!(k3.as_poly(), &IntPolynomial::from_i64(&[0, 0, 0, 6]));
        let e = w_polynomial(&Named::EdgePlusIsolated.graph()).unwrap();
        assert_eq!(e.as_poly(), &IntPolynomial::from_i64(&[0, 0, 4, 2]));
        for d in 1..=6 {
            let w = w_polynomial(&Graph::edgeless(d)).unwrap();
            assert_eq!(w.as_poly(), &eulerian_polynomial(d));
            assert_eq!(w.coeffs()[0], BigInt::from(0));
        }
    }

    #[test]
    fn w_guard() {
        let cfg = Config {
            limits: crate::config::Limits {
                max_d: 5,
                ..Default::default()
            },
            ..Config::default()
        };
        assert!(matches!(
            w_polynomial_with(&Graph::edgeless(6), CutRule::Standard, &cfg),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn canonical_examples() {
        let g = Named::EdgePlusIsolated.graph();
        let c = Coloring::new(2, vec![1, 2, 1]).unwrap();
        let cf = canonical_permutation(&g, &c).unwrap();
        assert_eq!(cf.profile.perm, vec![3, 1, 2]);
        assert_eq!(cf.profile.cuts, vec![0, 2]);
        assert_eq!(cf.boundaries, BTreeSet::from([2]));
        assert!(cf.extra_cuts.is_empty());

        let k3 = Graph::complete(3);
        let c = Coloring::new(3, vec![1, 2, 3]).unwrap();
        let cf = canonical_permutation(&k3, &c).unwrap();
        assert_eq!(cf.profile.perm, vec![1, 2, 3]);
        assert_eq!(cf.profile.cuts, vec![0, 1, 2]);
        assert!(cf.extra_cuts.is_empty());

        let e5 = Graph::edgeless(5);
        let c = Coloring::new(1, vec![1; 5]).unwrap();
        let cf = canonical_permutation(&e5, &c).unwrap();
        assert_eq!(cf.profile.perm, vec![5, 4, 3, 2, 1]);
        assert_eq!(cf.profile.cuts, vec![0]);
        assert!(cf.extra_cuts.is_empty());

        let improper = Coloring::new(2, vec![1, 1, 2]).unwrap();
        assert!(matches!(
            canonical_permutation(&g, &improper),
            Err(Error::ImproperColoring(1, 2, 1))
        ));
    }

    #[test]
    fn canonical_extra_cuts() {
        // Edgeless, two classes {1,2} then {3}: permutation 213, ℓ all 0,
        // position 2 has 1 < 3 so it is a genuine cut; no extras.
        let g = Graph::edgeless(3);
        let c = Coloring::new(2, vec![1, 1, 2]).unwrap();
        let cf = canonical_permutation(&g, &c).unwrap();
        assert_eq!(cf.profile.perm, vec![2, 1, 3]);
        assert!(cf.extra_cuts.is_empty());
        // Classes {3} then {1,2}: permutation 321, no cut at 1, so it is extra.
        let c = Coloring::new(2, vec![2, 2, 1]).unwrap();
        let cf = canonical_permutation(&g, &c).unwrap();
        assert_eq!(cf.profile.perm, vec![3, 2, 1]);
        assert_eq!(cf.extra_cuts, BTreeSet::from([1]));
    }

    /// Enumerates all n-colorings of g by brute force.
    fn colorings(g: &Graph, n: u32) -> Vec<Coloring> {
        let d = g.d();
        let mut out = Vec::new();
        let total = (n as u64).pow(d as u32);
        for idx in 0..total {
            let mut x = idx;
            let colors: Vec<u32> = (0..d)
                .map(|_| {
                    let c = (x % n as u64) as u32 + 1;
                    x /= n as u64;
                    c
                })
                .collect();
            let c = Coloring::new(n, colors).unwrap();
            if c.is_proper(g) {
                out.push(c);
            }
        }
        out
    }

    #[test]
    fn bijection_round_trip() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for d in 1..=5 {
            for _ in 0..8 {
                let g = crate::graph::random_graph(d, &mut rng);
                for n in 1..=3u32 {
                    let all = colorings(&g, n);
                    assert_eq!(BigInt::from(all.len()), count_colorings(&g, n as u64).unwrap());
                    for c in all {
                        let cf = canonical_permutation(&g, &c).unwrap();
                        let used: Vec<u32> = c.classes().keys().copied().collect();
                        let back = coloring_from_cuts(&cf.profile, &cf.extra_cuts, &used, n).unwrap();
                        assert_eq!(back, c);
                    }
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        let g = Named::EdgePlusIsolated.graph();
        assert!(chromatic_identity_check(&g, 2).unwrap());
        assert!(chromatic_identity_check(&Graph::complete(3), 3).unwrap());
        for n in 0..5 {
            assert!(chromatic_identity_check(&Named::Bowtie.graph(), n).unwrap());
        }
    }

    #[test]
    fn mutated_rule_breaks_identity() {
        let g = Graph::edgeless(3);
        assert!(!chromatic_identity_check_with(
            &g,
            2,
            CutRule::DropLetterTieBreak,
            &Config::default()
        )
        .unwrap());
    }

    #[test]
    fn permutation_parsing() {
        assert_eq!(Permutation::parse("312").unwrap().letters(), &[3, 1, 2]);
        assert_eq!(Permutation::parse("3 1 2").unwrap().letters(), &[3, 1, 2]);
        assert_eq!(Permutation::parse("3,1,2").unwrap().to_string(), "312");
        assert!(Permutation::parse("3113").is_err());
        assert!(Permutation::parse("12x").is_err());
        assert!(cut_profile(&Graph::path(4), &Permutation::identity(3)).is_err());
    }
}
