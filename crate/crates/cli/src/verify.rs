//! Sweeps over ranges or families of `n`, checking formulas against computation.

use essgraph::graph::{build_from_ring, equitable_partition};
use essgraph::indices::{self, Rational};
use essgraph::ring::{first_primes, is_prime};
use essgraph::spectral::{self, closed_form_charpoly, closed_form_spectrum};
use essgraph::{factorize, join_decomposition, universal_vertices, IdealGraph};
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// p^m
    Pm,
    /// p^a q^b
    TwoPrime,
    /// products of distinct primes
    Squarefree,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckKind {
    Structure,
    Nullity,
    Wiener,
    Spectrum,
    Charpoly,
    All,
}

#[derive(Debug, Clone)]
pub struct Plan {
    pub range: Option<(u64, u64)>,
    pub family: Option<Family>,
    pub k: Option<(u64, u64)>,
    pub m: Option<(u64, u64)>,
    pub primes: Vec<u64>,
    pub checks: Vec<CheckKind>,
    pub max_vertices: usize,
    pub exact_cap: usize,
    pub tol: f64,
}

impl Default for Plan {
    fn default() -> Self {
        Plan {
            range: None,
            family: None,
            k: None,
            m: None,
            primes: vec![2, 3, 5],
            checks: vec![CheckKind::All],
            max_vertices: 512,
            exact_cap: essgraph::exact::DEFAULT_EXACT_CAP,
            tol: essgraph::eigen::DEFAULT_CLUSTER_TOL,
        }
    }
}

impl Plan {
    fn wants(&self, c: CheckKind) -> bool {
        self.checks.iter().any(|&x| x == c || x == CheckKind::All)
    }

    fn in_family(&self, n: u64) -> bool {
        let Ok(f) = factorize(n) else { return false };
        let fam = self.family.unwrap_or(Family::All);
        let k = f.num_primes() as u64;
        let in_k = self.k.is_none_or(|(a, b)| (a..=b).contains(&k));
        let in_m = self
            .m
            .is_none_or(|(a, b)| f.exponents().iter().all(|&e| (a..=b).contains(&(e as u64))));
        let shape = match fam {
            Family::Pm => k == 1,
            Family::TwoPrime => k == 2,
            Family::Squarefree => k >= 2 && f.is_squarefree(),
            Family::All => true,
        };
        shape && in_k && in_m
    }

    /// The values of `n` to check, ascending and deduplicated.
    pub fn targets(&self) -> Vec<u64> {
        if let Some((lo, hi)) = self.range {
            return (lo.max(4)..=hi)
                .filter(|&n| !is_prime(n) && self.in_family(n))
                .collect();
        }
        let fam = self.family.unwrap_or(Family::All);
        let mut out = Vec::new();
        if matches!(fam, Family::Pm | Family::All) {
            let (a, b) = self.m.unwrap_or((2, 10));
            for &p in &self.primes {
                for m in a.max(2)..=b {
                    out.extend(u32::try_from(m).ok().and_then(|m| p.checked_pow(m)));
                }
            }
        }
        if matches!(fam, Family::TwoPrime | Family::All) {
            let (a, b) = self.m.unwrap_or((1, 5));
            for (i, &p) in self.primes.iter().enumerate() {
                for &q in &self.primes[i + 1..] {
                    for m1 in a.max(1)..=b {
                        for m2 in a.max(1)..=b {
                            let n = p.checked_pow(m1 as u32).and_then(|x| {
                                q.checked_pow(m2 as u32).and_then(|y| x.checked_mul(y))
                            });
                            out.extend(n);
                        }
                    }
                }
            }
        }
        if matches!(fam, Family::Squarefree | Family::All) {
            let (a, b) = self.k.unwrap_or((2, 6));
            for k in a.max(2)..=b.min(15) {
                out.push(first_primes(k as usize).iter().product());
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct NResult {
    pub n: u64,
    pub vertices: usize,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub messages: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub results: Vec<NResult>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &NResult> {
        self.results.iter().filter(|r| r.outcome == Outcome::Fail)
    }
}

/// Runs the plan on `threads` workers (0 = one per core). Results are sorted by `n`.
pub fn run(plan: &Plan, threads: usize) -> Result<Summary, rayon::ThreadPoolBuildError> {
    let targets = plan.targets();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;
    let mut results: Vec<NResult> =
        pool.install(|| targets.par_iter().map(|&n| verify_one(n, plan)).collect());
    results.sort_by_key(|r| r.n);
    let count = |o: Outcome| results.iter().filter(|r| r.outcome == o).count();
    Ok(Summary {
        checked: results.len(),
        passed: count(Outcome::Pass),
        failed: count(Outcome::Fail),
        skipped: count(Outcome::Skipped),
        results,
    })
}

pub fn verify_one(n: u64, plan: &Plan) -> NResult {
    let fail = |vertices, msg: String| NResult {
        n,
        vertices,
        outcome: Outcome::Fail,
        messages: vec![msg],
    };
    let f = match factorize(n) {
        Ok(f) => f,
        Err(e) => return fail(0, e.to_string()),
    };
    let order = f.vertex_count();
    if order > plan.max_vertices {
        return NResult {
            n,
            vertices: order,
            outcome: Outcome::Skipped,
            messages: vec![format!(
                "{order} vertices exceeds cap {}",
                plan.max_vertices
            )],
        };
    }
    let g = match build_from_ring(f, plan.max_vertices) {
        Ok(g) => g,
        Err(e) => return fail(order, e.to_string()),
    };
    let mut msgs = Vec::new();
    if let Err(e) = run_checks(&g, plan, &mut msgs) {
        msgs.push(e.to_string());
    }
    let outcome = if msgs.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail
    };
    NResult {
        n,
        vertices: order,
        outcome,
        messages: msgs,
    }
}

fn run_checks(g: &IdealGraph, plan: &Plan, msgs: &mut Vec<String>) -> essgraph::Result<()> {
    let f = g.ring();
    let order = g.order();
    let mut expect = |ok: bool, msg: String| {
        if !ok {
            msgs.push(msg);
        }
    };
    let exact_nullity = (plan.wants(CheckKind::Nullity) || plan.wants(CheckKind::Spectrum))
        .then(|| spectral::nullity_exact(g));

    if plan.wants(CheckKind::Structure) {
        expect(
            g.adjacency().is_symmetric_irreflexive(),
            "adjacency is not symmetric and irreflexive".into(),
        );
        expect(
            g.degree_sum() == 2 * g.edge_count(),
            format!("degree sum {} != 2|E|", g.degree_sum()),
        );
        let jd = join_decomposition(g)?;
        let universal = universal_vertices(g);
        expect(
            jd.clique.iter().all(|i| universal.contains(i)),
            "an essential vertex is not universal".into(),
        );
        if f.is_squarefree() {
            equitable_partition(g)?;
        }
        let d = indices::all_pairs_distances(g)?;
        expect(d.diameter() <= 3, format!("diameter {}", d.diameter()));
    }
    if plan.wants(CheckKind::Nullity) {
        let nul = exact_nullity.unwrap_or(0);
        let predicted = spectral::zero_eigenvalue_predicted(f);
        expect(
            (nul > 0) == predicted,
            format!("nullity {nul} but zero eigenvalue predicted = {predicted}"),
        );
    }
    if plan.wants(CheckKind::Wiener) {
        let d = indices::all_pairs_distances(g)?;
        let w = indices::wiener(&d);
        expect(
            w == indices::wiener_by_transmission(&d),
            "Wiener summations disagree".into(),
        );
        if let Some(cw) = indices::closed_wiener(f) {
            expect(
                cw == Rational::from_integer(w as i64),
                format!("Wiener {w} != closed form {cw}"),
            );
        }
        if let Some(cww) = indices::closed_hyper_wiener(f) {
            let ww = indices::hyper_wiener(&d);
            expect(cww == ww, format!("hyper-Wiener {ww} != closed form {cww}"));
        }
    }
    if plan.wants(CheckKind::Spectrum) {
        let s = spectral::eigenvalues_numeric(g, plan.tol)?;
        expect(
            s.trace().abs() < 1e-8 * order as f64,
            format!("trace {:e}", s.trace()),
        );
        let sq = s.sum_squares();
        expect(
            (sq - 2.0 * g.edge_count() as f64).abs() < 1e-6,
            format!("sum of squares {sq}"),
        );
        if let Some(c) = closed_form_spectrum(f) {
            let dev = s.max_deviation(&c);
            expect(
                dev < 1e-8,
                format!("spectrum deviates from closed form by {dev:e}"),
            );
        }
        if let Some(nul) = exact_nullity {
            let zeros = s.multiplicity_near(0.0, 1e-7);
            expect(
                zeros == nul,
                format!("numeric zero multiplicity {zeros} != nullity {nul}"),
            );
        }
    }
    if plan.wants(CheckKind::Charpoly) && order <= plan.exact_cap {
        let p = spectral::char_poly_exact_capped(g, plan.exact_cap)?;
        expect(
            order < 1 || p.coeff(order - 1).is_zero(),
            "char poly has nonzero trace coefficient".into(),
        );
        expect(
            order < 2 || p.coeff(order - 2) == -BigInt::from(g.edge_count()),
            "char poly second coefficient != -|E|".into(),
        );
        if let Some(c) = closed_form_charpoly(f) {
            expect(c == p, format!("char poly {p} != closed form {c}"));
        }
    }
    Ok(())
}

pub fn render_table(s: &Summary) -> String {
    let mut out = String::new();
    for r in &s.results {
        if r.outcome != Outcome::Pass {
            let tag = if r.outcome == Outcome::Fail {
                "FAIL"
            } else {
                "skip"
            };
            let _ = writeln!(
                out,
                "{tag} n={} ({} vertices): {}",
                r.n,
                r.vertices,
                r.messages.join("; ")
            );
        }
    }
    let _ = writeln!(
        out,
        "checked {}: {} passed, {} failed, {} skipped",
        s.checked, s.passed, s.failed, s.skipped
    );
    out
}

pub fn render_csv(s: &Summary) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "N", "outcome", "messages"])?;
    for r in &s.results {
        let outcome = match r.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped => "skipped",
        };
        w.write_record([
            r.n.to_string(),
            r.vertices.to_string(),
            outcome.to_string(),
            r.messages.join("; "),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_targets_skip_primes() {
        let plan = Plan {
            range: Some((4, 12)),
            ..Plan::default()
        };
        assert_eq!(plan.targets(), vec![4, 6, 8, 9, 10, 12]);
        let single = Plan {
            range: Some((4, 4)),
            ..Plan::default()
        };
        assert_eq!(single.targets(), vec![4]);
        let primes_only = Plan {
            range: Some((2, 3)),
            ..Plan::default()
        };
        assert!(primes_only.targets().is_empty());
    }

    #[test]
    fn family_targets() {
        let pm = Plan {
            family: Some(Family::Pm),
            m: Some((2, 3)),
            primes: vec![2, 3],
            ..Plan::default()
        };
        assert_eq!(pm.targets(), vec![4, 8, 9, 27]);
        let sq = Plan {
            family: Some(Family::Squarefree),
            k: Some((2, 4)),
            ..Plan::default()
        };
        assert_eq!(sq.targets(), vec![6, 30, 210]);
        let tp = Plan {
            family: Some(Family::TwoPrime),
            m: Some((1, 2)),
            primes: vec![2, 3],
            ..Plan::default()
        };
        assert_eq!(tp.targets(), vec![6, 12, 18, 36]);
        let filtered = Plan {
            range: Some((4, 40)),
            family: Some(Family::Squarefree),
            ..Plan::default()
        };
        assert_eq!(
            filtered.targets(),
            vec![6, 10, 14, 15, 21, 22, 26, 30, 33, 34, 35, 38, 39]
        );
    }

    #[test]
    fn small_sweep_passes_and_is_sorted() {
        let plan = Plan {
            range: Some((4, 300)),
            ..Plan::default()
        };
        let s = run(&plan, 2).unwrap();
        assert!(s.ok(), "{}", render_table(&s));
        assert!(s.results.windows(2).all(|w| w[0].n < w[1].n));
        assert_eq!(s.checked, s.passed + s.skipped);
    }

    #[test]
    fn cap_skips() {
        let plan = Plan {
            range: Some((64, 64)),
            max_vertices: 3,
            ..Plan::default()
        };
        let s = run(&plan, 1).unwrap();
        assert_eq!((s.skipped, s.failed), (1, 0));
    }
}
