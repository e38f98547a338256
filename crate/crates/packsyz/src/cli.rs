//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use packsyz_core::characters::CharacterTables;
use packsyz_core::stability::{stable_range_scan, syzygy_stability_check, Axis, Unpadded};
use packsyz_core::syzygy::{
    betti_entry_with, betti_table_with, linear_strand_segre, linear_strand_veronese, mpower_resolution, render_cell,
    HomologySource, SyzygyQuery,
};
use packsyz_core::{Decomposition, PackingComplex};
use serde::Serialize;

use crate::cache::{top_dim, Engine, Key};
use crate::config::{default_cache_dir, Config, Format};
use crate::error::{CliError, CliResult};
use crate::json;
use crate::verify::{self, Suite};

#[derive(Debug, Parser)]
#[command(name = "packsyz", version, about = "Equivariant homology of packing complexes and Segre-Veronese syzygies")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// TOML configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Homology cache directory; overrides PACKSYZ_CACHE_DIR.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true)]
    pub no_cache: bool,

    #[arg(long, global = true)]
    pub max_simplices: Option<u64>,

    #[arg(long, global = true)]
    pub max_oracle_entries: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced homology of C_N^d with its S_N decomposition.
    Homology {
        #[arg(long = "N", value_delimiter = ',', required = true)]
        sizes: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
        /// Single degree; every degree when omitted.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i32>,
        /// Draw Young diagrams under each constituent.
        #[arg(long)]
        diagrams: bool,
    },
    /// Equivariant Betti table K_{p,q}^d(b) for p ≤ pmax, q ≤ qmax.
    Betti {
        #[arg(long)]
        pmax: u32,
        #[arg(long)]
        qmax: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        b: Vec<i64>,
    },
    /// Closed-form linear strands.
    #[command(subcommand)]
    LinearStrand(Strand),
    /// Stable-range scan of homology or of a syzygy entry.
    Scan {
        /// Scan K_{p,q}^d(b) over b instead of homology over N.
        #[arg(long)]
        syzygy: bool,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        /// Fixed coordinate, e.g. N2=3 or b2=0.
        #[arg(long)]
        fix: Vec<String>,
        /// Scanned coordinate, e.g. N1=3..7 or b1=0..4.
        #[arg(long)]
        range: Vec<String>,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Face list of C_N^d, one simplex per line.
    ExportComplex {
        #[arg(long = "N", value_delimiter = ',', required = true)]
        sizes: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Strand {
    /// K_{p,0}^{(1,…,1)}(a,0,…,0) on an n-factor Segre product.
    Segre {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        n: usize,
        /// Compare with the homology computation.
        #[arg(long)]
        check: bool,
    },
    /// K_{p,0}^{(d)}(1) on a Veronese embedding.
    Veronese {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        check: bool,
    },
    /// Shapes (a,1^p) resolving the a-th power of the maximal ideal.
    Mpower {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        pmax: u32,
    },
}

impl Global {
    /// Defaults, then the config file, then the environment, then flags.
    pub fn resolve(&self) -> CliResult<Config> {
        let mut cfg = match &self.config {
            Some(path) => Config::load(path)?,
            None => Config::default(),
        };
        if cfg.cache_dir.is_none() {
            cfg.cache_dir = default_cache_dir();
        }
        let mut cfg = cfg.with_env();
        if let Some(f) = self.format {
            cfg.format = f;
        }
        if let Some(t) = self.threads {
            cfg.threads = t;
        }
        if let Some(dir) = &self.cache_dir {
            cfg.cache_dir = Some(dir.clone());
        }
        if self.no_cache {
            cfg.cache_dir = None;
        }
        if let Some(m) = self.max_simplices {
            cfg.max_simplices = m;
        }
        if let Some(m) = self.max_oracle_entries {
            cfg.max_oracle_entries = m;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Runs a parsed command, writing the report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let cfg = cli.global.resolve()?;
    let mut engine = Engine::from_config(&cfg)?;
    match &cli.command {
        Command::Homology { sizes, d, k, diagrams } => homology(&mut engine, &cfg, out, sizes, d, *k, *diagrams),
        Command::Betti { pmax, qmax, d, b } => betti(&mut engine, &cfg, out, *pmax, *qmax, d, b),
        Command::LinearStrand(s) => strand(&mut engine, &cfg, out, s),
        Command::Scan {
            syzygy,
            d,
            k,
            p,
            q,
            fix,
            range,
        } => scan(&mut engine, &cfg, out, *syzygy, d, *k, *p, *q, fix, range),
        Command::Verify { suite } => verify_cmd(&mut engine, &cfg, out, *suite),
        Command::ExportComplex { sizes, d, output } => export(&cfg, out, sizes, d, output.as_ref()),
    }
}

fn check_shape(sizes: &[u32], d: &[u32]) -> CliResult<()> {
    if sizes.len() != d.len() || sizes.is_empty() {
        return Err(CliError::Usage(format!(
            "--N has {} entries but --d has {}",
            sizes.len(),
            d.len()
        )));
    }
    if d.contains(&0) {
        return Err(CliError::Usage("--d entries must be positive".into()));
    }
    Ok(())
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn subscript(k: i32) -> String {
    k.to_string()
        .chars()
        .map(|c| match c {
            '-' => '₋',
            d => char::from_u32(0x2080 + d.to_digit(10).unwrap_or(0)).unwrap_or(d),
        })
        .collect()
}

fn homology(
    engine: &mut Engine,
    cfg: &Config,
    out: &mut dyn Write,
    sizes: &[u32],
    d: &[u32],
    k: Option<i32>,
    diagrams: bool,
) -> CliResult<()> {
    check_shape(sizes, d)?;
    let degrees: Vec<(i32, Decomposition)> = match k {
        Some(k) => vec![(k, engine.decomposition(sizes, d, k)?)],
        None => engine.all_degrees(sizes, d)?,
    };
    if cfg.format == Format::Json {
        let doc = json::Homology {
            sizes: sizes.to_vec(),
            d: d.to_vec(),
            degrees: degrees
                .iter()
                .map(|(k, dec)| json::Degree {
                    k: *k,
                    dimension: dec.dimension(),
                    entries: json::terms(dec),
                })
                .collect(),
        };
        return write_json(out, &doc);
    }
    if top_dim(sizes, d) < 0 && k.is_none_or(|k| k == -1) {
        writeln!(out, "empty complex; H̃₋₁ = trivial")?;
        return Ok(());
    }
    for (k, dec) in &degrees {
        if dec.is_empty() {
            writeln!(out, "H̃{} = 0", subscript(*k))?;
            continue;
        }
        writeln!(out, "H̃{} = {}  (dim {})", subscript(*k), dec, dec.dimension())?;
        if diagrams {
            for (l, m) in dec.terms() {
                writeln!(out, "  {m} x {l}")?;
                for line in l.young_diagram().lines() {
                    writeln!(out, "    {line}")?;
                }
            }
        }
    }
    Ok(())
}

fn betti(
    engine: &mut Engine,
    cfg: &Config,
    out: &mut dyn Write,
    pmax: u32,
    qmax: u32,
    d: &[u32],
    b: &[i64],
) -> CliResult<()> {
    if d.len() != b.len() || d.is_empty() || d.contains(&0) {
        return Err(CliError::Usage("--d and --b must have the same positive length; d entries positive".into()));
    }
    let mut keys: Vec<Key> = Vec::new();
    for p in 0..=pmax {
        for q in 0..=qmax {
            let qy = SyzygyQuery::new(p, q, d.to_vec(), b.to_vec())?;
            if let Some(n) = qy.sizes() {
                keys.push((n, d.to_vec(), qy.homology_degree()));
            }
        }
    }
    engine.prefetch(keys)?;
    let table = betti_table_with(engine, pmax, qmax, d, b)?;
    match cfg.format {
        Format::Json => write_json(out, &json::Table::of(&table)),
        Format::Text => Ok(write!(out, "{}", table.render_text())?),
    }
}

fn strand(engine: &mut Engine, cfg: &Config, out: &mut dyn Write, s: &Strand) -> CliResult<()> {
    let (closed, query) = match *s {
        Strand::Segre { p, a, n, check } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            let tables = CharacterTables::new(p + a)?;
            let mut b = vec![0i64; n];
            b[0] = i64::from(a);
            let qy = SyzygyQuery::new(p, 0, vec![1; n], b)?;
            (linear_strand_segre(p, a, n, &tables)?, check.then_some(qy))
        }
        Strand::Veronese { p, d, check } => {
            let qy = SyzygyQuery::new(p, 0, vec![d], vec![1])?;
            (linear_strand_veronese(p, d)?, check.then_some(qy))
        }
        Strand::Mpower { a, pmax } => {
            let shapes: Vec<Vec<u32>> = mpower_resolution(a, pmax).iter().map(|l| l.parts().to_vec()).collect();
            return match cfg.format {
                Format::Json => write_json(out, &shapes),
                Format::Text => {
                    for (p, l) in mpower_resolution(a, pmax).iter().enumerate() {
                        writeln!(out, "K_{p} = {l}")?;
                    }
                    Ok(())
                }
            };
        }
    };
    let direct = query.as_ref().map(|qy| betti_entry_with(engine, qy)).transpose()?;
    let agrees = direct.as_ref().is_none_or(|h| *h == closed);
    match cfg.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                entries: Vec<json::Term>,
                #[serde(skip_serializing_if = "Option::is_none")]
                homology: Option<Vec<json::Term>>,
                agrees: bool,
            }
            write_json(
                out,
                &Doc {
                    entries: json::terms(&closed),
                    homology: direct.as_ref().map(json::terms),
                    agrees,
                },
            )?;
        }
        Format::Text => {
            writeln!(out, "{}", render_cell(&closed))?;
            if let Some(h) = &direct {
                let verdict = if agrees { "PASS" } else { "FAIL" };
                writeln!(out, "homology: {}", render_cell(h))?;
                writeln!(out, "{verdict}")?;
            }
        }
    }
    if agrees {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

/// Parses `X3=5` or `X3=1..4` for the coordinate letter `X`.
fn parse_axis(spec: &str, letter: char, ranged: bool) -> CliResult<(usize, Axis)> {
    let bad = || CliError::Usage(format!("cannot parse axis {spec:?}"));
    let rest = spec.strip_prefix(letter).ok_or_else(|| {
        CliError::Usage(format!("axis {spec:?} must name a coordinate {letter}1, {letter}2, …"))
    })?;
    let (idx, value) = rest.split_once('=').ok_or_else(bad)?;
    let idx: usize = idx.parse().map_err(|_| bad())?;
    if idx == 0 {
        return Err(bad());
    }
    let axis = if ranged {
        let (lo, hi) = value.split_once("..").ok_or_else(bad)?;
        let lo: u32 = lo.parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim_start_matches('=').parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(CliError::Usage(format!("empty range {spec:?}")));
        }
        Axis::Range(lo, hi)
    } else {
        Axis::Fixed(value.parse().map_err(|_| bad())?)
    };
    Ok((idx - 1, axis))
}

fn parse_axes(n: usize, letter: char, fix: &[String], range: &[String]) -> CliResult<Vec<Axis>> {
    let mut axes: Vec<Option<Axis>> = vec![None; n];
    let specs = fix.iter().map(|s| (s, false)).chain(range.iter().map(|s| (s, true)));
    for (spec, ranged) in specs {
        let (i, axis) = parse_axis(spec, letter, ranged)?;
        if i >= n {
            return Err(CliError::Usage(format!("coordinate {} out of range in {spec:?}", i + 1)));
        }
        if axes[i].replace(axis).is_some() {
            return Err(CliError::Usage(format!("coordinate {} given twice", i + 1)));
        }
    }
    axes.into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| CliError::Usage(format!("coordinate {letter}{} not specified", i + 1))))
        .collect()
}

fn box_points(axes: &[Axis]) -> Vec<Vec<u32>> {
    let mut pts = vec![Vec::new()];
    for a in axes {
        let (lo, hi) = match *a {
            Axis::Fixed(v) => (v, v),
            Axis::Range(lo, hi) => (lo, hi),
        };
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    pts
}

fn render_unpadded(u: &Unpadded) -> String {
    if u.is_empty() {
        return "0".into();
    }
    u.iter()
        .map(|(l, &m)| if m > 1 { format!("{m} [{l}]") } else { format!("[{l}]") })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[allow(clippy::too_many_arguments)]
fn scan(
    engine: &mut Engine,
    cfg: &Config,
    out: &mut dyn Write,
    syzygy: bool,
    d: &[u32],
    k: Option<i32>,
    p: Option<u32>,
    q: Option<u32>,
    fix: &[String],
    range: &[String],
) -> CliResult<()> {
    if d.is_empty() || d.contains(&0) {
        return Err(CliError::Usage("--d entries must be positive".into()));
    }
    let (doc, sharp, report) = if syzygy {
        let (p, q) = match (p, q, k) {
            (Some(p), Some(q), None) => (p, q),
            _ => return Err(CliError::Usage("--syzygy scans take --p and --q and no --k".into())),
        };
        let b_axes = parse_axes(d.len(), 'b', fix, range)?;
        let shifted: Vec<Axis> = b_axes
            .iter()
            .zip(d)
            .map(|(a, &dj)| match *a {
                Axis::Fixed(b) => Axis::Fixed((p + q) * dj + b),
                Axis::Range(lo, hi) => Axis::Range((p + q) * dj + lo, (p + q) * dj + hi),
            })
            .collect();
        engine.prefetch(box_points(&shifted).into_iter().map(|n| (n, d.to_vec(), p as i32 - 1)))?;
        let r = syzygy_stability_check(engine, p, q, d, &b_axes)?;
        (json::Scan::of_syzygy(&r), r.sharp, r.scan)
    } else {
        let k = match (k, p, q) {
            (Some(k), None, None) => k,
            _ => return Err(CliError::Usage("homology scans take --k and no --p/--q".into())),
        };
        let axes = parse_axes(d.len(), 'N', fix, range)?;
        engine.prefetch(box_points(&axes).into_iter().map(|n| (n, d.to_vec(), k)))?;
        let r = stable_range_scan(engine, d, k, &axes)?;
        (json::Scan::of(&r), None, r)
    };
    if cfg.format == Format::Json {
        write_json(out, &doc)?;
    } else {
        let what = if syzygy {
            format!("K_{{{},{}}}^{}(b) over b, N = (p+q)d + b", doc.p.unwrap_or(0), doc.q.unwrap_or(0), tuple(d))
        } else {
            format!("H̃{}(C_N^{})", subscript(report.k), tuple(d))
        };
        writeln!(out, "scan of {what}")?;
        let bound: Vec<String> = report
            .bound
            .iter()
            .enumerate()
            .filter_map(|(i, b)| b.map(|b| format!("N{} >= {b}", i + 1)))
            .collect();
        writeln!(out, "m = {}, bound {}", report.m, bound.join(", "))?;
        for pt in &report.points {
            writeln!(
                out,
                "N={}: {} | unpadded {}",
                tuple(&pt.sizes),
                pt.decomposition,
                render_unpadded(&pt.unpadded)
            )?;
        }
        let corners: Vec<String> = report.stable_from.iter().map(|c| tuple(c)).collect();
        writeln!(out, "stable from {}", corners.join(", "))?;
        writeln!(out, "within bound: {}", yes(report.within_bound))?;
        writeln!(out, "margin of 2 past the bound: {}", yes(report.margin_ok))?;
        if let Some(s) = sharp {
            writeln!(out, "sharp at b = p: {}", yes(s))?;
        }
        writeln!(out, "{}", if doc.passed { "PASS" } else { "FAIL" })?;
    }
    if doc.passed {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn tuple(xs: &[u32]) -> String {
    let parts: Vec<String> = xs.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verify_cmd(engine: &mut Engine, cfg: &Config, out: &mut dyn Write, suite: Suite) -> CliResult<()> {
    let reports = verify::run(suite, engine, cfg)?;
    let passed = reports.iter().all(|r| r.passed());
    if cfg.format == Format::Json {
        #[derive(Serialize)]
        struct Doc<'a> {
            suite: &'a str,
            passed: bool,
            checks: &'a [verify::Check],
        }
        let docs: Vec<Doc> = reports
            .iter()
            .map(|r| Doc {
                suite: r.suite.name(),
                passed: r.passed(),
                checks: &r.checks,
            })
            .collect();
        write_json(out, &docs)?;
    } else {
        for r in &reports {
            for c in &r.checks {
                writeln!(out, "{c}")?;
            }
            let ok = r.checks.iter().filter(|c| c.passed).count();
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "suite {}: {verdict} ({ok}/{})", r.suite.name(), r.checks.len())?;
        }
    }
    if passed {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn export(cfg: &Config, out: &mut dyn Write, sizes: &[u32], d: &[u32], output: Option<&PathBuf>) -> CliResult<()> {
    check_shape(sizes, d)?;
    let cx = PackingComplex::build_capped(sizes, d, cfg.max_simplices)?;
    let mut buf: Vec<u8> = Vec::new();
    match cfg.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                #[serde(rename = "N")]
                sizes: Vec<u32>,
                d: Vec<u32>,
                f_vector: Vec<usize>,
                faces: Vec<String>,
            }
            let faces = cx.face_list().lines().map(String::from).collect();
            write_json(
                &mut buf,
                &Doc {
                    sizes: sizes.to_vec(),
                    d: d.to_vec(),
                    f_vector: cx.f_vector(),
                    faces,
                },
            )?;
        }
        Format::Text => buf.extend_from_slice(cx.face_list().as_bytes()),
    }
    match output {
        Some(path) => std::fs::write(path, buf)?,
        None => out.write_all(&buf)?,
    }
    Ok(())
}
