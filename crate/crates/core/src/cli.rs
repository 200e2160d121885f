//! The `nfvaaler` command line. Every subcommand builds a [`Table`] and the
//! table is rendered as CSV (with trailing `key = value` summary lines) or
//! as JSON.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::analytic::{ideal_count_residue, mertens_log_sum, mertens_product, mertens_recip_sum};
use crate::config::{ideal_by_index, OutputFormat, RunConfig};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::gfun::{banded_g_sum, count_large_g_table, divisor_g_sum, g_value};
use crate::ideal::PrimeTable;
use crate::io::{fmt_float, fmt_rational};
use crate::measure::{build_approx_set, measure_of, overlap_report, quasi_independence_experiment, MeasureOptions, OverlapRecord};
use crate::psi::{balanced_check, divergence_partial_sum, vaaler_condition_check};
use crate::selberg::{build_sieve, coprime_count_exact, sieve_upper_bound, sigma1};

#[derive(Debug, Parser)]
#[command(name = "nfvaaler", version, about = "Ideal arithmetic, sieve and measure experiments over number fields")]
pub struct Cli {
    /// JSON run configuration
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Override a config key, e.g. --set seed=3
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// Worker threads for parallel sections (output does not depend on it)
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Signature, discriminant and embeddings of the field
    Field,
    /// All ideals up to a norm bound
    Ideals {
        #[arg(long = "max-norm")]
        max_norm: u64,
    },
    /// Prime ideals up to a norm bound
    Primes {
        #[arg(long = "max-norm")]
        max_norm: u64,
    },
    /// The three Mertens reports and the ideal-count residue estimate
    Mertens {
        #[arg(long = "X")]
        x: u64,
    },
    /// Erdős g-function tables and sums
    Gfun {
        #[command(subcommand)]
        what: GfunCommand,
    },
    /// Selberg sieve weights, Σ₁, upper bound against the exact count
    Sieve {
        #[arg(long = "modulus-norm")]
        modulus_norm: u64,
        #[arg(long = "modulus-index", default_value_t = 0)]
        modulus_index: usize,
        #[arg(long = "X")]
        x: u64,
    },
    /// Balanced and growth verdicts for the configured ψ, plus Σ Φ·Ψ
    Psi {
        /// norm bound for the witness scans
        #[arg(long, default_value_t = 200)]
        cap: u64,
        /// norm bound for the partial sum
        #[arg(long = "R", default_value_t = 100)]
        r: u64,
    },
    /// λ(A_n) for one ideal
    Measure {
        #[arg(long)]
        norm: u64,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Overlap report for a pair of ideals
    Overlap {
        #[arg(long = "m-norm")]
        m_norm: u64,
        #[arg(long = "m-index", default_value_t = 0)]
        m_index: usize,
        #[arg(long = "n-norm")]
        n_norm: u64,
        #[arg(long = "n-index", default_value_t = 0)]
        n_index: usize,
    },
    /// Quasi-independence sweep over all ideals of norm ≤ R
    Experiment {
        #[arg(long = "R")]
        r: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GfunCommand {
    /// #{a : Nm a ≤ X, g(a) ≥ v} for v = 1..=v-max
    Counts {
        #[arg(long = "X")]
        x: u64,
        #[arg(long = "v-max", default_value_t = 5)]
        v_max: u64,
    },
    /// g and its tail sum for every ideal up to a norm bound
    Values {
        #[arg(long = "max-norm")]
        max_norm: u64,
    },
    /// Σ_{d | q, g(q/d) ≤ v} 1/Nm d
    DivisorSum {
        #[arg(long)]
        norm: u64,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        v: u64,
    },
    /// Σ_{g(s) = T, X < Nm s < Y} 1/Nm s
    Band {
        #[arg(long = "T")]
        t: u64,
        #[arg(long = "X")]
        x: u64,
        #[arg(long = "Y")]
        y: u64,
    },
}

/// A table cell. Rationals print as "p/q", floats at 12 significant digits.
#[derive(Clone, Debug)]
pub enum Cell {
    Int(i128),
    Bool(bool),
    Float(f64),
    Rat(BigRational),
    Text(String),
    Missing,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Float(v) => fmt_float(*v),
            Cell::Rat(r) => fmt_rational(r),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(*v as i64),
            Cell::Bool(b) => json!(b),
            Cell::Float(v) => json!(v),
            Cell::Rat(r) => json!(fmt_rational(r)),
            Cell::Text(s) => json!(s),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i128)
    }
}
impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Int(v as i128)
    }
}
impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i128)
    }
}
impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}
impl From<BigRational> for Cell {
    fn from(v: BigRational) -> Self {
        Cell::Rat(v)
    }
}
impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}
impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}
impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Float)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(&'static str, Cell)>,
    /// a single row rendered as a JSON object rather than a list
    pub single: bool,
}

impl Table {
    fn new(header: &[&'static str]) -> Table {
        Table { header: header.to_vec(), ..Table::default() }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn note(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.summary.push((key, value.into()));
    }

    pub fn render(&self, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
        match format {
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Io(e.to_string());
                w.write_record(&self.header).map_err(io)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(Cell::csv)).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
                out.write_all(&bytes)?;
                for (k, v) in &self.summary {
                    writeln!(out, "{k} = {}", v.csv())?;
                }
            }
            OutputFormat::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        Value::Object(self.header.iter().zip(r).map(|(h, c)| (h.to_string(), c.json())).collect())
                    })
                    .collect();
                let doc = if self.single && rows.len() == 1 && self.summary.is_empty() {
                    rows.into_iter().next().unwrap()
                } else {
                    let mut m = Map::new();
                    m.insert("rows".into(), Value::Array(rows));
                    if !self.summary.is_empty() {
                        let s: Map<String, Value> = self.summary.iter().map(|(k, v)| (k.to_string(), v.json())).collect();
                        m.insert("summary".into(), Value::Object(s));
                    }
                    Value::Object(m)
                };
                serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Io(e.to_string()))?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

fn check_cap(needed: u64, cap: u64) -> Result<()> {
    if needed > cap {
        return Err(Error::EnumerationCapExceeded { needed, cap });
    }
    Ok(())
}

struct Ctx {
    cfg: RunConfig,
    field: NumberField,
    table: PrimeTable,
}

impl Ctx {
    fn opts(&self) -> MeasureOptions {
        MeasureOptions { samples: self.cfg.mc_samples, seed: self.cfg.seed, force_monte_carlo: false }
    }
}

fn field_table(ctx: &Ctx) -> Table {
    let k = &ctx.field;
    let (s, t) = k.signature();
    let mut tab = Table::new(&["n", "s", "t", "ell", "discriminant", "domain_volume", "axis_aligned", "real_roots", "complex_roots"]);
    let reals: Vec<String> = k.real_roots().iter().map(|r| fmt_float(*r)).collect();
    let complexes: Vec<String> =
        k.complex_roots().iter().map(|z| format!("{}{}{}i", fmt_float(z.re), if z.im < 0.0 { "-" } else { "+" }, fmt_float(z.im.abs()))).collect();
    tab.push(vec![
        k.degree().into(),
        s.into(),
        t.into(),
        k.unit_rank().into(),
        k.discriminant().to_string().into(),
        k.domain_volume().into(),
        Cell::Bool(k.axis_aligned_domain()),
        reals.join(" ").into(),
        complexes.join(" ").into(),
    ]);
    tab.single = true;
    tab
}

/// (norm, index within norm) for each ideal of an ordered list.
fn indexed(ideals: &[crate::ideal::Ideal]) -> Vec<(usize, &crate::ideal::Ideal)> {
    let mut out = Vec::with_capacity(ideals.len());
    let mut last = 0;
    let mut idx = 0;
    for a in ideals {
        if a.norm() == last {
            idx += 1;
        } else {
            last = a.norm();
            idx = 0;
        }
        out.push((idx, a));
    }
    out
}

fn overlap_row(r: &OverlapRecord) -> Vec<Cell> {
    vec![
        r.nm_m.into(),
        r.nm_n.into(),
        r.m.clone().into(),
        r.n.clone().into(),
        r.lambda_m.into(),
        r.lambda_n.into(),
        r.lambda_mn.into(),
        r.d.into(),
        r.p.into(),
        r.tau.into(),
        r.regime.to_string().into(),
        r.ratio.into(),
        r.method.to_string().into(),
        r.stderr.into(),
    ]
}

const OVERLAP_HEADER: [&str; 14] = [
    "Nm_m", "Nm_n", "m", "n", "lambda_m", "lambda_n", "lambda_mn", "D", "P", "tau", "regime", "ratio", "method", "stderr",
];

fn execute(command: &Command, ctx: &Ctx) -> Result<Table> {
    let cap = ctx.cfg.enumeration_cap;
    let table = &ctx.table;
    match command {
        Command::Field => Ok(field_table(ctx)),
        Command::Ideals { max_norm } => {
            check_cap(*max_norm, cap)?;
            let ideals = table.enumerate_ideals(*max_norm, false);
            let mut tab = Table::new(&["norm", "index", "ideal", "phi", "mu", "g"]);
            for (i, a) in indexed(&ideals) {
                tab.push(vec![a.norm().into(), i.into(), a.to_string().into(), a.euler_phi().into(), a.moebius().into(), g_value(a).g.into()]);
            }
            Ok(tab)
        }
        Command::Primes { max_norm } => {
            check_cap(*max_norm, cap)?;
            let primes = table.enumerate_ideals(*max_norm, true);
            let mut tab = Table::new(&["norm", "index", "ideal", "p", "e", "f"]);
            for (i, a) in indexed(&primes) {
                let q = &a.factors()[0].0;
                tab.push(vec![a.norm().into(), i.into(), a.to_string().into(), q.p.into(), (q.e as u64).into(), (q.f as u64).into()]);
            }
            Ok(tab)
        }
        Command::Mertens { x } => {
            check_cap(*x, cap)?;
            let mut tab = Table::new(&["report", "X", "value", "model", "residual", "estimate"]);
            for (name, r) in [
                ("log_sum", mertens_log_sum(table, *x)?),
                ("recip_sum", mertens_recip_sum(table, *x)?),
                ("product", mertens_product(table, *x)?),
            ] {
                tab.push(vec![name.into(), r.x.into(), r.value.into(), r.model.into(), r.residual.into(), r.estimate.into()]);
            }
            let (count, alpha) = ideal_count_residue(table, *x)?;
            tab.push(vec!["ideal_count".into(), (*x).into(), count.into(), (*x).into(), Cell::Missing, alpha.into()]);
            Ok(tab)
        }
        Command::Gfun { what } => gfun(what, ctx),
        Command::Sieve { modulus_norm, modulus_index, x } => {
            let n = ideal_by_index(table, *modulus_norm, *modulus_index)?;
            let sieve = build_sieve(ctx.field.degree(), &n, *x)?;
            let mut tab = Table::new(&["d", "Nm_d", "lambda"]);
            for (d, l) in &sieve.weights {
                tab.push(vec![d.to_string().into(), d.norm().into(), l.clone().into()]);
            }
            let s1 = sigma1(&sieve);
            let ub = sieve_upper_bound(table, &sieve, cap)?;
            let exact = coprime_count_exact(table, &n, *x, cap)?;
            tab.note("modulus", n.to_string());
            tab.note("X", *x);
            tab.note("P", sieve.p.to_string());
            tab.note("G", sieve.g.clone());
            tab.note("sigma1", s1);
            tab.note("upper_bound", ub.clone());
            tab.note("exact_count", exact);
            let ratio = if exact > 0 { Cell::Float(num_traits::ToPrimitive::to_f64(&ub).unwrap() / exact as f64) } else { Cell::Missing };
            tab.note("ratio", ratio);
            Ok(tab)
        }
        Command::Psi { cap: scan, r } => {
            check_cap((*scan).max(*r), cap)?;
            let sys = ctx.cfg.psi_system(&ctx.field, table)?;
            let b = balanced_check(&sys, table, *scan);
            let v = vaaler_condition_check(&sys, table, *scan);
            let mut tab = Table::new(&["check", "verdict", "value", "witness", "witness_norm"]);
            let verdict = if b.trivially { "balanced (odd number of places)" } else if b.balanced { "balanced" } else { "not balanced" };
            let (w, wn) = b.witness.map_or((Cell::Missing, Cell::Missing), |w| (w.ideal.into(), w.norm.into()));
            tab.push(vec!["balanced".into(), verdict.into(), b.max_ratio.into(), w, wn]);
            let (w, wn) = v.witness.map_or((Cell::Missing, Cell::Missing), |w| (w.ideal.into(), w.norm.into()));
            let verdict = if v.satisfied { "satisfied" } else { "violated" };
            tab.push(vec!["growth".into(), verdict.into(), v.max_scaled.into(), w, wn]);
            tab.push(vec![
                "partial_sum".into(),
                format!("R = {r}").into(),
                divergence_partial_sum(&sys, table, *r).into(),
                Cell::Missing,
                Cell::Missing,
            ]);
            Ok(tab)
        }
        Command::Measure { norm, index } => {
            let sys = ctx.cfg.psi_system(&ctx.field, table)?;
            let n = ideal_by_index(table, *norm, *index)?;
            let set = build_approx_set(&ctx.field, table, &sys, &n)?;
            let m = measure_of(&ctx.field, &[&set], &ctx.opts())?;
            let mut tab = Table::new(&["Nm_n", "n", "phi", "boxes", "lambda", "exact", "method", "stderr", "samples", "seed"]);
            tab.push(vec![
                n.norm().into(),
                n.to_string().into(),
                n.euler_phi().into(),
                set.boxes.len().into(),
                m.value.into(),
                m.exact.map_or(Cell::Missing, Cell::Rat),
                m.method.to_string().into(),
                m.stderr.into(),
                m.samples.into(),
                m.seed.into(),
            ]);
            tab.single = true;
            Ok(tab)
        }
        Command::Overlap { m_norm, m_index, n_norm, n_index } => {
            let sys = ctx.cfg.psi_system(&ctx.field, table)?;
            let m = ideal_by_index(table, *m_norm, *m_index)?;
            let n = ideal_by_index(table, *n_norm, *n_index)?;
            let r = overlap_report(&ctx.field, table, &sys, &m, &n, &ctx.opts())?;
            let mut tab = Table::new(&OVERLAP_HEADER);
            tab.push(overlap_row(&r));
            tab.single = true;
            Ok(tab)
        }
        Command::Experiment { r } => {
            check_cap(*r, cap)?;
            let sys = ctx.cfg.psi_system(&ctx.field, table)?;
            let q = quasi_independence_experiment(&ctx.field, table, &sys, *r, &ctx.opts())?;
            let mut tab = Table::new(&OVERLAP_HEADER);
            for p in &q.pairs {
                tab.push(overlap_row(p));
            }
            tab.note("R", *r);
            tab.note("single_sum", q.single_sum);
            tab.note("pair_sum", q.pair_sum);
            tab.note("ratio", q.ratio.map_or(Cell::Text("undefined".into()), Cell::Float));
            tab.note("ratio_stderr", q.ratio_stderr);
            tab.note("max_pair_ratio", q.max_pair_ratio);
            Ok(tab)
        }
    }
}

fn gfun(what: &GfunCommand, ctx: &Ctx) -> Result<Table> {
    let cap = ctx.cfg.enumeration_cap;
    let table = &ctx.table;
    match what {
        GfunCommand::Counts { x, v_max } => {
            check_cap(*x, cap)?;
            let counts = count_large_g_table(table, *x, *v_max);
            let mut tab = Table::new(&["v", "count", "scaled"]);
            for (i, c) in counts.iter().enumerate() {
                let v = i as u64 + 1;
                tab.push(vec![v.into(), (*c).into(), (*c as f64 * crate::arith::factorial(v) / *x as f64).into()]);
            }
            tab.note("X", *x);
            Ok(tab)
        }
        GfunCommand::Values { max_norm } => {
            check_cap(*max_norm, cap)?;
            let ideals = table.enumerate_ideals(*max_norm, false);
            let mut tab = Table::new(&["norm", "index", "ideal", "g", "tail_sum"]);
            for (i, a) in indexed(&ideals) {
                let r = g_value(a);
                tab.push(vec![a.norm().into(), i.into(), a.to_string().into(), r.g.into(), r.tail_sum.into()]);
            }
            Ok(tab)
        }
        GfunCommand::DivisorSum { norm, index, v } => {
            let q = ideal_by_index(table, *norm, *index)?;
            let mut tab = Table::new(&["q", "v", "sum"]);
            tab.push(vec![q.to_string().into(), (*v).into(), divisor_g_sum(&q, *v).into()]);
            tab.single = true;
            Ok(tab)
        }
        GfunCommand::Band { t, x, y } => {
            let s = banded_g_sum(table, *t, *x, *y, cap)?;
            let mut tab = Table::new(&["T", "X", "Y", "sum", "sum_float"]);
            let f = num_traits::ToPrimitive::to_f64(&s).unwrap();
            tab.push(vec![(*t).into(), (*x).into(), (*y).into(), s.into(), f.into()]);
            tab.single = true;
            Ok(tab)
        }
    }
}

fn run_parsed(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let path = cli.config.as_ref().ok_or_else(|| Error::ConfigInvalid("--config is required".into()))?;
    let mut cfg = RunConfig::load(path, &cli.set)?;
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Error::ConfigInvalid("--workers must be positive".into()));
        }
        cfg.workers = Some(w);
    }
    let field = cfg.field()?;
    let table = cfg.prime_table(&field)?;
    let ctx = Ctx { cfg, field, table };
    let threads = ctx.cfg.workers.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {threads} workers: {e}")))?;
    let tab = pool.install(|| execute(&cli.command, &ctx))?;
    tab.render(ctx.cfg.output, out)
}

/// Parse `args` (program name first), run, and return the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match run_parsed(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
