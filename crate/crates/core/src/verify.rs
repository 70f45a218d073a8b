//! Self-verification: replays every identity the crate relies on against
//! exhaustive and seeded random graph families and reports per-identity
//! instance counts.

use std::fmt;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{build_complex_with, for_each_chain, is_face, nontruncated_h_vector};
use crate::config::Config;
use crate::cuts::{chromatic_identity_check_with, cut_profile, w_polynomial_with, CutRule, Permutation};
use crate::error::Result;
use crate::exec::map_ordered;
use crate::graph::{
    all_labeled_graphs, chromatic_polynomial, count_acyclic_orientations_with,
    count_colorings_with, random_graph, random_permutation, Coloring, Graph, Named, VertexSet,
};
use crate::ideal::{
    decode_monomial, encode_coloring, for_each_monomial, ColoringIdeal, Monomial,
};
use crate::poly_lab::{tail_polynomial, w_transform, HVector};

/// What to sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Every labeled graph on this many vertices is checked.
    pub exhaustive_d: usize,
    /// Vertex counts for the seeded random samples.
    pub sample_d: Vec<usize>,
    /// Random graphs per sampled vertex count.
    pub count: usize,
    pub seed: u64,
    /// Cut rule used by the cut-based checks; anything but `Standard`
    /// should make them fail.
    pub rule: CutRule,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_d: 4,
            sample_d: vec![5, 6],
            count: 200,
            seed: 1,
            rule: CutRule::Standard,
        }
    }
}

/// One identity's outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub exhaustive_d: usize,
    pub sample_d: Vec<usize>,
    pub count: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{tag}  {:width$}  {:>6} instances", c.name, c.instances)?;
            if let Some(msg) = &c.first_failure {
                write!(f, "  {} failed, first: {msg}", c.failures)?;
            }
            writeln!(f)?;
        }
        let ok = self.checks.iter().filter(|c| c.passed()).count();
        write!(
            f,
            "{ok}/{} identities passed (exhaustive d={}, sampled d={:?} x{}, seed {})",
            self.checks.len(),
            self.exhaustive_d,
            self.sample_d,
            self.count,
            self.seed
        )
    }
}

type Outcome = Result<Option<String>>;

fn check<T: Sync>(
    name: &'static str,
    items: &[T],
    cfg: &Config,
    f: impl Fn(&T) -> Outcome + Sync + Send,
) -> CheckResult {
    let outcomes = map_ordered(cfg.exec, items, |item| match f(item) {
        Ok(r) => r,
        Err(e) => Some(format!("error: {e}")),
    });
    let failures: Vec<String> = outcomes.into_iter().flatten().collect();
    CheckResult {
        name,
        instances: items.len(),
        failures: failures.len(),
        first_failure: failures.into_iter().next(),
    }
}

fn expect<T: PartialEq + fmt::Debug>(what: &Graph, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got:?}, expected {want:?}"))
}

/// The h-vector predicted from the tail `n^d - χ_G`.
pub fn tail_h_vector(g: &Graph) -> Result<HVector> {
    let d = g.d();
    let tail = tail_polynomial(&chromatic_polynomial(g), d)?;
    let w = w_transform(&tail, d)?.shift_down()?;
    Ok(HVector(w.padded(d.saturating_sub(1))))
}

/// Runs every check. Inner computations run sequentially so the parallel
/// split happens once, across instances.
pub fn run_verification(opts: &VerifyOptions, cfg: &Config) -> Report {
    let inner = Config {
        limits: cfg.limits.clone(),
        exec: crate::Execution::Sequential,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let exhaustive: Vec<Graph> = all_labeled_graphs(opts.exhaustive_d).collect();
    let mut sampled = Vec::new();
    for &d in &opts.sample_d {
        for _ in 0..opts.count {
            sampled.push(random_graph(d, &mut rng));
        }
    }
    let all: Vec<Graph> = exhaustive.iter().chain(&sampled).cloned().collect();
    let relabel_pairs: Vec<(Graph, Vec<usize>)> = all
        .iter()
        .filter(|g| g.d() <= 6)
        .map(|g| (g.clone(), random_permutation(g.d(), &mut rng)))
        .collect();
    let complex_graphs: Vec<Graph> = all
        .iter()
        .filter(|g| (3..=6.min(cfg.limits.max_complex_d)).contains(&g.d()))
        .cloned()
        .collect();
    let with_edge: Vec<Graph> = complex_graphs.iter().filter(|g| g.edge_count() > 0).cloned().collect();
    let small: Vec<Graph> = all.iter().filter(|g| g.d() <= 5).cloned().collect();
    let rule = opts.rule;

    let mut checks = Vec::new();
    checks.push(check("w_identity", &all, cfg, |g| {
        let w = w_polynomial_with(g, rule, &inner)?;
        let want = w_transform(&chromatic_polynomial(g), g.d() + 1)?;
        Ok(expect(g, w.as_poly().clone(), want))
    }));
    checks.push(check("chromatic_cut_identity", &small, cfg, |g| {
        for n in 0..=4 {
            if !chromatic_identity_check_with(g, n, rule, &inner)? {
                return Ok(Some(format!("{g}: fails at n={n}")));
            }
        }
        Ok(None)
    }));
    checks.push(check("label_invariance", &relabel_pairs, cfg, |(g, sigma)| {
        let a = w_polynomial_with(g, rule, &inner)?;
        let b = w_polynomial_with(&g.relabel(sigma)?, rule, &inner)?;
        Ok(expect(g, a, b))
    }));
    checks.push(check("chromatic_oracle", &small, cfg, |g| {
        let chi = chromatic_polynomial(g);
        for n in 0..=4u64 {
            let got = count_colorings_with(g, n, &inner)?;
            if got != chi.eval_i64(n as i64) {
                return Ok(Some(format!("{g}: n={n} counted {got}, polynomial {}", chi.eval_i64(n as i64))));
            }
        }
        Ok(None)
    }));
    let hilbert: Vec<Graph> = exhaustive.iter().filter(|g| g.d() <= 5).cloned().collect();
    checks.push(check("hilbert_function", &hilbert, cfg, |g| {
        let ideal = ColoringIdeal::with_config(g, &inner)?;
        let chi = chromatic_polynomial(g);
        for n in 0..=3 {
            let got = ideal.count_degree_monomials(n, &inner)?;
            let want = chi.eval_i64(n as i64 + 1);
            if got != want {
                return Ok(Some(format!("{g}: degree {n} has {got} monomials, expected {want}")));
            }
        }
        Ok(None)
    }));
    checks.push(check("membership_paths", &hilbert, cfg, |g| {
        let ideal = ColoringIdeal::with_config(g, &inner)?;
        let mut bad = None;
        for n in 0..=3 {
            for_each_monomial(g.d(), n, |m| {
                if bad.is_none() {
                    let a = ideal.contains(m).unwrap_or(false);
                    let b = crate::ideal::contains_monomial(g, m).unwrap_or(true);
                    if a != b {
                        bad = Some(format!("{g}: {m} divisibility={a} blocks={b}"));
                    }
                }
            });
        }
        Ok(bad)
    }));
    checks.push(check("codec_round_trip", &hilbert, cfg, |g| Ok(codec_round_trip(g, 3))));
    checks.push(check("tail_h_vector", &with_edge, cfg, |g| {
        let c = build_complex_with(g, &inner)?;
        Ok(expect(g, c.h_vector(), tail_h_vector(g)?))
    }));
    checks.push(check("facet_count", &complex_graphs, cfg, |g| {
        let c = build_complex_with(g, &inner)?;
        let per = crate::config::factorial_u128(g.d() - 1) as usize;
        if c.facets().len() != g.edge_count() * per {
            return Ok(expect(g, c.facets().len(), g.edge_count() * per));
        }
        let classes = c.edges_to_facets();
        if classes.len() != g.edge_count() || classes.values().any(|v| v.len() != per) {
            return Ok(Some(format!("{g}: uneven facet classes")));
        }
        Ok(expect(g, c.h_vector().total(), BigInt::from(c.facets().len())))
    }));
    checks.push(check("acyclic_orientations", &with_edge, cfg, |g| {
        let c = build_complex_with(g, &inner)?;
        let ao = count_acyclic_orientations_with(g, &inner).count;
        let h = c.h_vector();
        if let Some(msg) = expect(g, h.0[g.d() - 2].clone(), &ao - 1) {
            return Ok(Some(msg));
        }
        let reduced = c.euler_characteristics().reduced;
        let signed = if (g.d() - 3) % 2 == 0 { reduced } else { -reduced };
        Ok(expect(g, signed, ao - 1))
    }));
    let faces: Vec<Graph> = complex_graphs.iter().filter(|g| g.d() <= 5).cloned().collect();
    checks.push(check("face_sets", &faces, cfg, |g| {
        let c = build_complex_with(g, &inner)?;
        let mut bad = None;
        let mut count = 0usize;
        for_each_chain(g.d(), false, |ch| {
            let direct = is_face(g, ch).unwrap_or(false);
            count += direct as usize;
            if bad.is_none() && direct != c.complex().contains(ch) {
                bad = Some(format!("{g}: {ch} disagrees"));
            }
        });
        if bad.is_none() && count != c.complex().face_count() {
            bad = Some(format!("{g}: {count} chains pass is_face, complex has {}", c.complex().face_count()));
        }
        Ok(bad)
    }));
    let examples: Vec<usize> = (0..4).collect();
    checks.push(check("worked_examples", &examples, cfg, |&k| worked_example(k)));
    Report {
        seed: opts.seed,
        exhaustive_d: opts.exhaustive_d,
        sample_d: opts.sample_d.clone(),
        count: opts.count,
        checks,
    }
}

/// Decode/encode round trips for every monomial of degree ≤ `max_n` and
/// every proper coloring with at most `max_n + 1` colors.
pub fn codec_round_trip(g: &Graph, max_n: usize) -> Option<String> {
    let mut bad = None;
    for n in 0..=max_n {
        for_each_monomial(g.d(), n, |m| {
            if bad.is_some() || !crate::ideal::contains_monomial(g, m).unwrap_or(false) {
                return;
            }
            let back = decode_monomial(g, m).and_then(|c| encode_coloring(g, &c));
            if back.as_ref().ok() != Some(m) {
                bad = Some(format!("{g}: {m} came back as {back:?}"));
            }
        });
        let palette = n as u32 + 1;
        let total = (palette as u64).pow(g.d() as u32);
        for code in 0..total {
            if bad.is_some() {
                break;
            }
            let mut x = code;
            let colors: Vec<u32> = (0..g.d())
                .map(|_| {
                    let c = (x % palette as u64) as u32 + 1;
                    x /= palette as u64;
                    c
                })
                .collect();
            let c = Coloring::new(palette, colors).expect("colors in range");
            if !c.is_proper(g) {
                continue;
            }
            let back = encode_coloring(g, &c).and_then(|m| {
                if m.degree() != n {
                    return Err(crate::Error::Invalid(format!("degree {}", m.degree())));
                }
                decode_monomial(g, &m)
            });
            if back.as_ref().ok() != Some(&c) {
                bad = Some(format!("{g}: coloring {c} came back as {back:?}"));
            }
        }
    }
    bad
}

fn worked_example(k: usize) -> Outcome {
    let vs = |v: &[usize]| VertexSet::from_vertices(v.iter().copied());
    Ok(match k {
        0 => {
            let g = Named::PathPlusEdge7.graph();
            let p = cut_profile(&g, &Permutation::parse("5236417")?)?;
            let got = (p.ell.clone(), p.cuts.clone(), p.gseq.clone());
            let want = (
                vec![0, 0, 1, 0, 2, 1, 1],
                vec![0, 2, 4, 6],
                vec![vs(&[2, 5]), vs(&[3, 6]), vs(&[1, 4]), vs(&[7])],
            );
            expect(&g, got, want)
        }
        1 => {
            let g = Named::CodecExample7.graph();
            let c = decode_monomial(&g, &Monomial::parse("x{}^2 * x{2,5}^3 * x{2,3,5}^2", 7)?)?;
            expect(&g, (c.palette(), c.colors().to_vec()), (8, vec![8, 3, 6, 8, 3, 8, 8]))
        }
        2 => {
            let g = Named::CodecExample7.graph();
            let c = Coloring::new(9, vec![7, 7, 4, 7, 7, 4, 6])?;
            let m = encode_coloring(&g, &c)?;
            expect(&g, m.to_string(), "x{}^3 * x{3,6}^2 * x{3,6,7} * x{*}^2".to_string())
        }
        _ => {
            let mut bad = None;
            for g in [Named::Path4.graph(), Named::Star4.graph()] {
                let h = build_complex_with(&g, &Config::sequential())?.h_vector();
                let full = nontruncated_h_vector(&g)?;
                bad = bad.or(expect(
                    &g,
                    (h, full),
                    (HVector::from_i64(&[1, 10, 7]), HVector::from_i64(&[1, 12, 21, 8])),
                ));
            }
            bad
        }
    })
}
