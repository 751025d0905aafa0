//! Per-`n` analysis with internal cross-checks.

use crate::round_to;
use essgraph::eigen::DEFAULT_CLUSTER_TOL;
use essgraph::graph::{build_graph_capped, equitable_partition, DEFAULT_MAX_VERTICES};
use essgraph::indices::{self, Rational};
use essgraph::spectral::{self, closed_form_charpoly, closed_form_spectrum};
use essgraph::{
    exact, join_decomposition, universal_vertices, IdealGraph, IntPolynomial, Spectrum,
};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

/// Which spectral paths run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpectralMode {
    /// Exact characteristic polynomial and rank when the graph is within the exact cap.
    #[default]
    Auto,
    /// Always run the exact path, up to the vertex cap.
    Exact,
    /// Numeric eigenvalues only.
    Numeric,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub tol: f64,
    pub max_vertices: usize,
    pub exact_cap: usize,
    pub mode: SpectralMode,
    pub precision: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            tol: DEFAULT_CLUSTER_TOL,
            max_vertices: DEFAULT_MAX_VERTICES,
            exact_cap: exact::DEFAULT_EXACT_CAP,
            mode: SpectralMode::Auto,
            precision: 9,
        }
    }
}

impl Options {
    pub fn runs_exact(&self, order: usize) -> bool {
        match self.mode {
            SpectralMode::Auto => order <= self.exact_cap,
            SpectralMode::Exact => true,
            SpectralMode::Numeric => false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalValue {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for RationalValue {
    fn from(r: Rational) -> Self {
        RationalValue {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueRow {
    pub value: f64,
    pub multiplicity: usize,
    pub symbol: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JoinSummary {
    pub clique_size: usize,
    pub remainder_size: usize,
    pub remainder_edges: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub n: u64,
    pub factorization: String,
    pub primes: Vec<(u64, u32)>,
    pub vertices: usize,
    pub edges: usize,
    pub vertex_generators: Vec<u64>,
    pub universal_vertices: Vec<u64>,
    pub join: JoinSummary,
    pub eigenvalues: Vec<EigenvalueRow>,
    pub spectrum_closed_form: Option<bool>,
    /// Coefficients of `det(λI - A)`, ascending, as decimal strings.
    pub charpoly: Option<Vec<String>>,
    pub charpoly_display: Option<String>,
    pub charpoly_closed_form: Option<bool>,
    pub energy: f64,
    pub hyperenergetic: bool,
    pub nullity_exact: Option<usize>,
    pub nullity_numeric: usize,
    pub zero_eigenvalue_predicted: bool,
    pub diameter: u32,
    pub wiener: u64,
    pub hyper_wiener: RationalValue,
    pub closed_wiener: Option<RationalValue>,
    pub closed_hyper_wiener: Option<RationalValue>,
    pub wiener_closed_form: Option<bool>,
    pub checks: Vec<CheckResult>,
    pub status: &'static str,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub spectrum: Spectrum,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn nullity(&self) -> usize {
        self.nullity_exact.unwrap_or(self.nullity_numeric)
    }

    pub fn failed_checks(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn push(&mut self, name: &'static str, pass: bool, detail: impl Into<String>) {
        let detail = if pass { String::new() } else { detail.into() };
        self.0.push(CheckResult { name, pass, detail });
    }
}

pub fn analyze(n: u64, opts: &Options) -> essgraph::Result<AnalysisReport> {
    let start = Instant::now();
    let g = build_graph_capped(n, opts.max_vertices)?;
    analyze_graph(&g, opts, start)
}

fn analyze_graph(
    g: &IdealGraph,
    opts: &Options,
    start: Instant,
) -> essgraph::Result<AnalysisReport> {
    let f = g.ring();
    let order = g.order();
    let gens = g.generators();
    let mut checks = Checks(Vec::new());

    checks.push(
        "adjacency symmetric and irreflexive",
        g.adjacency().is_symmetric_irreflexive(),
        "adjacency matrix is not a simple-graph matrix",
    );
    checks.push(
        "degree sum = 2|E|",
        g.degree_sum() == 2 * g.edge_count(),
        format!("{} vs {}", g.degree_sum(), 2 * g.edge_count()),
    );

    let universal = universal_vertices(g);
    let join = match join_decomposition(g) {
        Ok(jd) => {
            checks.push("join decomposition", true, "");
            let h = g.adjacency().induced(&jd.remainder);
            JoinSummary {
                clique_size: jd.clique.len(),
                remainder_size: jd.remainder.len(),
                remainder_edges: h.edge_count(),
            }
        }
        Err(e) => {
            checks.push("join decomposition", false, e.to_string());
            JoinSummary {
                clique_size: 0,
                remainder_size: order,
                remainder_edges: 0,
            }
        }
    };
    if f.is_squarefree() {
        let r = equitable_partition(g);
        checks.push(
            "equitable partition C(k-t, s)",
            r.is_ok(),
            r.err().map(|e| e.to_string()).unwrap_or_default(),
        );
    }

    // spectrum
    let mut spectrum = spectral::eigenvalues_numeric(g, opts.tol)?;
    let closed = closed_form_spectrum(f);
    let spectrum_closed_form = closed.as_ref().map(|c| {
        let dev = spectrum.max_deviation(c);
        checks.push(
            "spectrum = closed form",
            dev < 1e-8,
            format!("max deviation {dev:e}"),
        );
        dev < 1e-8
    });
    if let Some(c) = &closed {
        spectrum.adopt_symbols(c, 1e-8);
    }
    let trace = spectrum.trace();
    checks.push(
        "trace = 0",
        trace.abs() < 1e-8 * order as f64,
        format!("trace {trace:e}"),
    );
    let sq = spectrum.sum_squares();
    checks.push(
        "sum of squared eigenvalues = 2|E|",
        (sq - 2.0 * g.edge_count() as f64).abs() < 1e-6,
        format!("{sq} vs {}", 2 * g.edge_count()),
    );
    let energy = spectral::energy(&spectrum);
    let hyperenergetic = spectral::is_hyperenergetic_spectrum(&spectrum);
    let nullity_numeric = spectrum.multiplicity_near(0.0, 1e-7);

    // exact path
    let (mut charpoly, mut charpoly_display, mut charpoly_closed_form, mut nullity_exact) =
        (None, None, None, None);
    if opts.runs_exact(order) {
        let cap = opts.exact_cap.max(if opts.mode == SpectralMode::Exact {
            opts.max_vertices
        } else {
            0
        });
        let p = spectral::char_poly_exact_capped(g, cap)?;
        check_trace_coefficients(&p, g, &mut checks);
        if let Some(expected) = closed_form_charpoly(f) {
            let ok = expected == p;
            checks.push(
                "char poly = closed form",
                ok,
                format!("expected {expected}"),
            );
            charpoly_closed_form = Some(ok);
        }
        charpoly = Some(p.to_decimal_strings());
        charpoly_display = Some(p.to_string());
        let nul = spectral::nullity_exact(g);
        checks.push(
            "numeric zero multiplicity = exact nullity",
            nul == nullity_numeric,
            format!("{nullity_numeric} vs {nul}"),
        );
        nullity_exact = Some(nul);
    }
    let predicted = spectral::zero_eigenvalue_predicted(f);
    let nullity = nullity_exact.unwrap_or(nullity_numeric);
    checks.push(
        "0 is an eigenvalue iff predicted",
        (nullity > 0) == predicted,
        format!("nullity {nullity}, predicted {predicted}"),
    );

    // indices
    let d = indices::all_pairs_distances(g)?;
    let wiener = indices::wiener(&d);
    let by_transmission = indices::wiener_by_transmission(&d);
    checks.push(
        "Wiener by pairs = Wiener by transmissions",
        wiener == by_transmission,
        format!("{wiener} vs {by_transmission}"),
    );
    let ww = indices::hyper_wiener(&d);
    let closed_w = indices::closed_wiener(f);
    let closed_ww = indices::closed_hyper_wiener(f);
    let wiener_closed_form = match (closed_w, closed_ww) {
        (Some(cw), Some(cww)) => {
            let ok_w = cw == Rational::from_integer(wiener as i64);
            let ok_ww = cww == ww;
            checks.push("Wiener = closed form", ok_w, format!("closed form {cw}"));
            checks.push(
                "hyper-Wiener = closed form",
                ok_ww,
                format!("closed form {cww}"),
            );
            Some(ok_w && ok_ww)
        }
        _ => None,
    };

    let status = if checks.0.iter().all(|c| c.pass) {
        "ok"
    } else {
        "FAILED"
    };
    Ok(AnalysisReport {
        n: f.value(),
        factorization: f.to_string(),
        primes: f
            .primes()
            .iter()
            .copied()
            .zip(f.exponents().iter().copied())
            .collect(),
        vertices: order,
        edges: g.edge_count(),
        vertex_generators: gens.clone(),
        universal_vertices: universal.iter().map(|&i| gens[i]).collect(),
        join,
        eigenvalues: spectrum
            .entries
            .iter()
            .map(|e| EigenvalueRow {
                value: round_to(e.value, opts.precision),
                multiplicity: e.multiplicity,
                symbol: e.symbol.clone(),
            })
            .collect(),
        spectrum_closed_form,
        charpoly,
        charpoly_display,
        charpoly_closed_form,
        energy: round_to(energy, opts.precision),
        hyperenergetic,
        nullity_exact,
        nullity_numeric,
        zero_eigenvalue_predicted: predicted,
        diameter: d.diameter(),
        wiener,
        hyper_wiener: ww.into(),
        closed_wiener: closed_w.map(Into::into),
        closed_hyper_wiener: closed_ww.map(Into::into),
        wiener_closed_form,
        checks: checks.0,
        status,
        elapsed: start.elapsed(),
        spectrum,
    })
}

fn check_trace_coefficients(p: &IntPolynomial, g: &IdealGraph, checks: &mut Checks) {
    let order = g.order();
    let ok1 = p.coeff(order.saturating_sub(1)).is_zero() || order == 0;
    let ok2 = order < 2 || p.coeff(order - 2) == -BigInt::from(g.edge_count());
    checks.push("char poly trace coefficients", ok1 && ok2, format!("{p}"));
}

fn fmt_opt_bool(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "match",
        Some(false) => "MISMATCH",
        None => "not covered",
    }
}

fn fmt_rational(r: &RationalValue) -> String {
    if r.den == 1 {
        r.num.to_string()
    } else {
        format!("{}/{}", r.num, r.den)
    }
}

/// Human-readable report.
pub fn render_table(r: &AnalysisReport, precision: u32) -> String {
    let p = precision as usize;
    let mut s = String::new();
    let _ = writeln!(s, "E(Z_{})  n = {}", r.n, r.factorization);
    let _ = writeln!(s, "  vertices            {}", r.vertices);
    let _ = writeln!(s, "  edges               {}", r.edges);
    let _ = writeln!(s, "  universal vertices  {:?}", r.universal_vertices);
    let _ = writeln!(
        s,
        "  join                K_{} v H  (H: {} vertices, {} edges)",
        r.join.clique_size, r.join.remainder_size, r.join.remainder_edges
    );
    let _ = writeln!(
        s,
        "  spectrum            ({})",
        fmt_opt_bool(r.spectrum_closed_form)
    );
    for e in &r.eigenvalues {
        let sym = e
            .symbol
            .as_deref()
            .map(|x| format!("  [{x}]"))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            "    {:>+width$.p$}  x{}{}",
            e.value,
            e.multiplicity,
            sym,
            width = p + 5
        );
    }
    if let Some(cp) = &r.charpoly_display {
        let _ = writeln!(
            s,
            "  char poly           {cp}  ({})",
            fmt_opt_bool(r.charpoly_closed_form)
        );
    }
    let _ = writeln!(s, "  energy              {:.p$}", r.energy);
    let _ = writeln!(s, "  hyperenergetic      {}", r.hyperenergetic);
    let exact = r
        .nullity_exact
        .map_or_else(|| "-".to_string(), |x| x.to_string());
    let _ = writeln!(
        s,
        "  nullity             exact {exact}, numeric {}, 0 predicted: {}",
        r.nullity_numeric, r.zero_eigenvalue_predicted
    );
    let _ = writeln!(s, "  diameter            {}", r.diameter);
    let _ = writeln!(
        s,
        "  Wiener              {}  (closed form: {})",
        r.wiener,
        r.closed_wiener
            .as_ref()
            .map_or("not covered".into(), fmt_rational)
    );
    let _ = writeln!(
        s,
        "  hyper-Wiener        {}  (closed form: {})",
        fmt_rational(&r.hyper_wiener),
        r.closed_hyper_wiener
            .as_ref()
            .map_or("not covered".into(), fmt_rational)
    );
    let failed = r.failed_checks();
    let _ = writeln!(
        s,
        "  checks              {}/{} passed",
        r.checks.len() - failed.len(),
        r.checks.len()
    );
    for c in failed {
        let _ = writeln!(s, "    FAILED {}: {}", c.name, c.detail);
    }
    let _ = writeln!(s, "  status              {}", r.status);
    let _ = writeln!(
        s,
        "  elapsed             {:.3} ms",
        r.elapsed.as_secs_f64() * 1e3
    );
    s
}

pub const CSV_HEADER: [&str; 9] = [
    "n",
    "N",
    "edges",
    "energy",
    "nullity",
    "wiener",
    "hyper_wiener_num",
    "hyper_wiener_den",
    "all_checks_pass",
];

pub fn csv_record(r: &AnalysisReport, precision: u32) -> [String; 9] {
    [
        r.n.to_string(),
        r.vertices.to_string(),
        r.edges.to_string(),
        format!("{:.*}", precision as usize, r.energy),
        r.nullity().to_string(),
        r.wiener.to_string(),
        r.hyper_wiener.num.to_string(),
        r.hyper_wiener.den.to_string(),
        r.all_checks_pass().to_string(),
    ]
}

pub fn render_csv(reports: &[AnalysisReport], precision: u32) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.write_record(csv_record(r, precision))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
