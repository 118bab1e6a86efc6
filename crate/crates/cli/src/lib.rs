//! Command implementations behind the `qhcat` binary.
//!
//! Every subcommand loads its inputs from JSON files, runs one engine
//! operation over the exact rational scalars, and produces a single
//! [`Report`].  The binary prints the report — as a plain-text summary
//! by default, or verbatim JSON under `--json` — and exits with
//!
//! * `0` when every asserted condition held (`pass: true`),
//! * `1` when a mathematical check failed (the report names it),
//! * `2` when the input was invalid (parse errors, missing files,
//!   malformed presentations, unknown labels).
//!
//! Reports contain no timestamps, paths or other volatile data, so a
//! command run twice over the same inputs produces byte-identical
//! output; [`diff_reports`] turns that into a regression harness.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qhcat::error::Error;
use qhcat::io::{algebra_from_json, module_from_json, module_to_json, Entry};
use qhcat::linalg::Mat;
use qhcat::nodal::{
    build_block, ext_tower, isolated_block, tor_tower, verify_block, verify_blocks, GradedSheaf,
    NodalBlock, Support, Weight,
};
use qhcat::qh::{
    canonical_std_filtration, check_quasihereditary, check_skew_constraint, costandard_object,
    ext1_support, injective_hull_stratified, projective_cover_iterative,
    projective_cover_stratified, reciprocity_table, standard_object, CoverDiagnostic,
    CoverOutcome, PurityFailure,
};
use qhcat::quiver::{hom_basis, is_isomorphic, Ext1, Module, ModuleMap};
use qhcat::report::Report;
use qhcat::{Q, QAlgebra, Result};

/// Exact workbench for quasi-hereditary quiver categories and the
/// bigraded nodal-curve calculator.
#[derive(Debug, Parser)]
#[command(name = "qhcat", version, about)]
pub struct Cli {
    /// Print the full JSON report instead of the plain-text summary.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse an algebra presentation, validate it, and summarise it;
    /// optionally validate a module over it as well.
    Validate {
        /// Algebra presentation (JSON).
        #[arg(long)]
        algebra: PathBuf,
        /// Optional module over the algebra (JSON).
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Compute the homomorphism space between two modules.
    Hom {
        #[arg(long)]
        algebra: PathBuf,
        /// Source module (JSON).
        #[arg(long)]
        from: PathBuf,
        /// Target module (JSON).
        #[arg(long)]
        to: PathBuf,
    },
    /// Compute the first extension group Ext^1(of, by).
    Ext1 {
        #[arg(long)]
        algebra: PathBuf,
        /// The extended module (first argument of Ext).
        #[arg(long)]
        of: PathBuf,
        /// The extending module (second argument of Ext).
        #[arg(long)]
        by: PathBuf,
    },
    /// Compute the standard object at a vertex with its multiplicity
    /// certificate.
    Standard {
        #[arg(long)]
        algebra: PathBuf,
        /// Vertex label.
        #[arg(long)]
        vertex: String,
    },
    /// Compute the costandard object at a vertex with its multiplicity
    /// certificate.
    Costandard {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// Run the full quasi-hereditary test on an ordered algebra.
    CheckQh {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Compute the canonical filtration of a module by standard traces.
    Filtration {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// Compare filtration multiplicities, hom brackets and costandard
    /// composition counts across all projectives.
    Reciprocity {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Build the projective cover of a simple, stratum by stratum or by
    /// iterated universal extensions.
    Projcover {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, value_enum, default_value_t = Method::Stratified)]
        method: Method,
    },
    /// Build the injective hull of a simple, dually to `projcover`.
    Injhull {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, value_enum, default_value_t = Method::Stratified)]
        method: Method,
    },
    /// Compute the extension support of a simple and cross-check it
    /// against the standard kernel and costandard cokernel.
    ExtSupport {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// Check the skew-degree labels declared on the algebra: every first
    /// extension must drop the degree by exactly one.
    SkewCheck {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Build one block of the nodal-curve heart as a quiver algebra and
    /// run its verification ladder.
    NodalBlock {
        /// Block index.
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Shift of the isolated origin simple; selects the one-vertex
        /// block O_{C0}(n,k)[k] instead of the glued block at n.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Tower truncation depth for the leading-term checks.
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Verify every nodal block in a range of indices.
    NodalVerify {
        /// Inclusive index range `a..b`.
        #[arg(long, value_parser = parse_range, default_value = "-3..3", allow_hyphen_values = true)]
        range: (i64, i64),
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Compute the Tor and Ext towers of a twisted structure sheaf
    /// against the point module.
    Towers {
        /// Support of the sheaf: X, C+, C-, or C0.
        #[arg(long, value_parser = parse_support)]
        support: Support,
        /// Twist `a,b`.
        #[arg(long, value_parser = parse_weight, default_value = "0,0", allow_hyphen_values = true)]
        twist: Weight,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Structurally compare two report files produced by the same
    /// subcommand.
    Diff {
        /// First report (JSON).
        left: PathBuf,
        /// Second report (JSON).
        right: PathBuf,
    },
}

/// Which cover-building algorithm to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Stratum-by-stratum construction with the diagnostic ladder.
    Stratified,
    /// Iterated universal extensions against the standard modules.
    Iterative,
}

/// One differing entry between two reports: the JSON path and the two
/// values (`null` when the entry is missing on one side).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiffLine {
    pub path: String,
    pub left: Value,
    pub right: Value,
}

/// Runs a parsed invocation and maps the outcome to an exit code:
/// 0 = all checks pass, 1 = a check failed, 2 = invalid input.
pub fn run(cli: &Cli) -> i32 {
    match execute(&cli.command) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", render_text(&report));
            }
            i32::from(!report.pass)
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Renders the plain-text summary: the verdict line followed by every
/// table and witness in key order, one compact JSON value per line.
pub fn render_text(report: &Report) -> String {
    let mut out = format!("{}: {}\n", report.check, if report.pass { "PASS" } else { "FAIL" });
    for (key, value) in &report.tables {
        out.push_str(&format!("  {key} = {value}\n"));
    }
    for (key, value) in &report.witnesses {
        out.push_str(&format!("  {key} = {value}\n"));
    }
    out
}

/// Structural diff of two reports from the same subcommand: the list of
/// JSON paths at which they disagree.  Reports from different
/// subcommands cannot be meaningfully compared and are rejected.
pub fn diff_reports(a: &Report, b: &Report) -> Result<Vec<DiffLine>> {
    if a.check != b.check {
        return Err(Error::input(format!(
            "reports come from different commands: '{}' vs '{}'",
            a.check, b.check
        )));
    }
    let left = serde_json::to_value(a).expect("reports serialize");
    let right = serde_json::to_value(b).expect("reports serialize");
    let mut out = Vec::new();
    diff_value("", &left, &right, &mut out);
    Ok(out)
}

fn diff_value(path: &str, a: &Value, b: &Value, out: &mut Vec<DiffLine>) {
    match (a, b) {
        (Value::Object(ma), Value::Object(mb)) => {
            let mut keys: Vec<&String> = ma.keys().chain(mb.keys()).collect();
            keys.sort();
            keys.dedup();
            for key in keys {
                let sub = if path.is_empty() { key.clone() } else { format!("{path}.{key}") };
                match (ma.get(key), mb.get(key)) {
                    (Some(x), Some(y)) => diff_value(&sub, x, y, out),
                    (x, y) => push_diff(&sub, x, y, out),
                }
            }
        }
        (Value::Array(xa), Value::Array(xb)) => {
            for i in 0..xa.len().max(xb.len()) {
                let sub = format!("{path}[{i}]");
                match (xa.get(i), xb.get(i)) {
                    (Some(x), Some(y)) => diff_value(&sub, x, y, out),
                    (x, y) => push_diff(&sub, x, y, out),
                }
            }
        }
        _ if a == b => {}
        _ => push_diff(path, Some(a), Some(b), out),
    }
}

fn push_diff(path: &str, a: Option<&Value>, b: Option<&Value>, out: &mut Vec<DiffLine>) {
    if a != b {
        out.push(DiffLine {
            path: path.to_string(),
            left: a.cloned().unwrap_or(Value::Null),
            right: b.cloned().unwrap_or(Value::Null),
        });
    }
}

/// Executes one subcommand; any [`Error`] is an invalid-input outcome.
pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Validate { algebra, module } => {
            let alg = load_algebra(algebra)?;
            let mut report = Report::new("validate", true)
                .with_table("vertices", labels(&alg))
                .with_table("arrows", arrow_rows(&alg))
                .with_table("algebra-dimension", alg.dimension())
                .with_table("nilpotency-bound", alg.nilpotency_bound())
                .with_table("ordered", alg.ordering().is_some());
            if let Some(ord) = alg.ordering() {
                let strata: Vec<Vec<&str>> = (0..ord.stratum_count())
                    .map(|i| {
                        (0..alg.vertex_count())
                            .filter(|&v| ord.stratum_of(v) == i)
                            .map(|v| alg.vertex_label(v))
                            .collect()
                    })
                    .collect();
                report = report.with_table("strata", strata);
            }
            if let Some(path) = module {
                let m = load_module(&alg, path)?;
                report = report
                    .with_table("module-dims", labeled_dims(&m))
                    .with_witness("module", module_value(&m));
            }
            Ok(report)
        }

        Command::Hom { algebra, from, to } => {
            let alg = load_algebra(algebra)?;
            let x = load_module(&alg, from)?;
            let y = load_module(&alg, to)?;
            let basis = hom_basis(&x, &y);
            Ok(Report::new("hom", true)
                .with_table("dimension", basis.len())
                .with_table("from-dims", labeled_dims(&x))
                .with_table("to-dims", labeled_dims(&y))
                .with_witness("basis", basis.iter().map(map_value).collect::<Vec<_>>()))
        }

        Command::Ext1 { algebra, of, by } => {
            let alg = load_algebra(algebra)?;
            let b = load_module(&alg, of)?;
            let a = load_module(&alg, by)?;
            let ext = Ext1::compute(&b, &a);
            Ok(Report::new("ext1", true)
                .with_table("dimension", ext.dim())
                .with_table("of-dims", labeled_dims(&b))
                .with_table("by-dims", labeled_dims(&a)))
        }

        Command::Standard { algebra, vertex } => {
            let alg = load_algebra(algebra)?;
            let s = alg.vertex_by_label(vertex)?;
            let (m, _, valid) = standard_object(&alg, s)?;
            let projective = alg.projective(s);
            let kernel_dims: Vec<(String, usize)> = (0..alg.vertex_count())
                .map(|v| (alg.vertex_label(v).to_string(), projective.dim_at(v) - m.dim_at(v)))
                .collect();
            Ok(Report::new("standard", valid)
                .with_table("dims", labeled_dims(&m))
                .with_table("kernel-dims", kernel_dims)
                .with_table("own-multiplicity", m.dim_at(s))
                .with_witness("vertex", vertex)
                .with_witness("module", module_value(&m)))
        }

        Command::Costandard { algebra, vertex } => {
            let alg = load_algebra(algebra)?;
            let s = alg.vertex_by_label(vertex)?;
            let (n, _, valid) = costandard_object(&alg, s)?;
            let injective = alg.injective(s);
            let cokernel_dims: Vec<(String, usize)> = (0..alg.vertex_count())
                .map(|v| (alg.vertex_label(v).to_string(), injective.dim_at(v) - n.dim_at(v)))
                .collect();
            Ok(Report::new("costandard", valid)
                .with_table("dims", labeled_dims(&n))
                .with_table("cokernel-dims", cokernel_dims)
                .with_table("own-multiplicity", n.dim_at(s))
                .with_witness("vertex", vertex)
                .with_witness("module", module_value(&n)))
        }

        Command::CheckQh { algebra } => {
            let alg = load_algebra(algebra)?;
            let qh = check_quasihereditary(&alg)?;
            Ok(Report::new("check-qh", qh.holds)
                .with_table("vertices", labels(&alg))
                .with_table("standard-dims", &qh.standard_dims)
                .with_table("costandard-dims", &qh.costandard_dims)
                .with_witness("failures", &qh.failures))
        }

        Command::Filtration { algebra, module } => {
            let alg = load_algebra(algebra)?;
            let x = load_module(&alg, module)?;
            let filt = canonical_std_filtration(&x)?;
            let pass = filt.complete && filt.layers.iter().all(|l| l.multiplicity_certified);
            let layers: Vec<Value> = filt
                .layers
                .iter()
                .map(|l| {
                    json!({
                        "vertex": alg.vertex_label(l.vertex),
                        "multiplicity": l.multiplicity,
                        "layer-dims": l.layer_dims,
                        "certified": l.multiplicity_certified,
                        "standard-power": l.is_standard_power,
                    })
                })
                .collect();
            Ok(Report::new("filtration", pass)
                .with_table("module-dims", labeled_dims(&x))
                .with_table("chain", &filt.chain_dims)
                .with_table("layers", layers)
                .with_table("residue", &filt.residue_dims)
                .with_table("complete", filt.complete))
        }

        Command::Reciprocity { algebra } => {
            let alg = load_algebra(algebra)?;
            let (rows, all_match) = reciprocity_table(&alg)?;
            let mismatches: Vec<&str> = rows
                .iter()
                .filter(|r| !r.matches)
                .map(|r| alg.vertex_label(r.vertex))
                .collect();
            Ok(Report::new("reciprocity", all_match)
                .with_table("vertices", labels(&alg))
                .with_table(
                    "filtration-multiplicities",
                    rows.iter().map(|r| &r.filtration_multiplicities).collect::<Vec<_>>(),
                )
                .with_table(
                    "hom-brackets",
                    rows.iter().map(|r| &r.hom_brackets).collect::<Vec<_>>(),
                )
                .with_table(
                    "costandard-factors",
                    rows.iter().map(|r| &r.costandard_factors).collect::<Vec<_>>(),
                )
                .with_witness("mismatches", mismatches))
        }

        Command::Projcover { algebra, vertex, method } => {
            let alg = load_algebra(algebra)?;
            let s = alg.vertex_by_label(vertex)?;
            match method {
                Method::Stratified => {
                    let outcome = projective_cover_stratified(&alg, s)?;
                    Ok(cover_report("projcover", &alg, s, &outcome, &alg.projective(s)))
                }
                Method::Iterative => {
                    let p = projective_cover_iterative(&alg, s)?;
                    Ok(plain_cover_report("projcover", &p, &alg.projective(s)))
                }
            }
        }

        Command::Injhull { algebra, vertex, method } => {
            let alg = load_algebra(algebra)?;
            let s = alg.vertex_by_label(vertex)?;
            match method {
                Method::Stratified => {
                    let outcome = injective_hull_stratified(&alg, s)?;
                    Ok(cover_report("injhull", &alg, s, &outcome, &alg.injective(s)))
                }
                Method::Iterative => {
                    let opp = alg.opposite();
                    let hull =
                        projective_cover_iterative(&opp, s)?.dual().with_algebra(&alg)?;
                    Ok(plain_cover_report("injhull", &hull, &alg.injective(s)))
                }
            }
        }

        Command::ExtSupport { algebra, vertex } => {
            let alg = load_algebra(algebra)?;
            let s = alg.vertex_by_label(vertex)?;
            let r = ext1_support(&alg, s)?;
            let name = |set: &[usize]| {
                set.iter().map(|&v| alg.vertex_label(v).to_string()).collect::<Vec<_>>()
            };
            Ok(Report::new("ext-support", r.agrees)
                .with_table("out-dims", &r.out_dims)
                .with_table("in-dims", &r.in_dims)
                .with_table("kernel-hom-dims", &r.kernel_hom_dims)
                .with_table("cokernel-hom-dims", &r.cokernel_hom_dims)
                .with_table("out-set", name(&r.out_set))
                .with_table("in-set", name(&r.in_set))
                .with_table("compared", name(&r.compared))
                .with_witness("vertex", vertex))
        }

        Command::SkewCheck { algebra } => {
            let alg = load_algebra(algebra)?;
            let ord = alg.require_ordering()?;
            if !ord.has_skew() {
                return Err(Error::input(
                    "the algebra declares no skew-degree labels".to_string(),
                ));
            }
            let skdeg: Vec<i64> = (0..alg.vertex_count())
                .map(|v| ord.skew(v).expect("label checked above"))
                .collect();
            let r = check_skew_constraint(&alg, &skdeg)?;
            let labeled: Vec<(String, i64)> = (0..alg.vertex_count())
                .map(|v| (alg.vertex_label(v).to_string(), skdeg[v]))
                .collect();
            let violations: Vec<Value> = r
                .violations
                .iter()
                .map(|v| {
                    json!({
                        "source": alg.vertex_label(v.source),
                        "target": alg.vertex_label(v.target),
                        "reason": v.reason,
                    })
                })
                .collect();
            Ok(Report::new("skew-check", r.holds())
                .with_table("skew", labeled)
                .with_table("checked-pairs", r.checked_pairs)
                .with_witness("violations", violations))
        }

        Command::NodalBlock { n, k, depth } => {
            let block: NodalBlock<Q> = match k {
                None => build_block(*n)?,
                Some(k) => isolated_block(*n, *k)?,
            };
            let verdict = verify_block(&block, *depth)?;
            let dictionary: Vec<Value> = block
                .dictionary
                .iter()
                .map(|(label, sheaf)| json!([label, sheaf]))
                .collect();
            let checks: Vec<Value> = verdict
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
                .collect();
            Ok(Report::new("nodal-block", verdict.pass)
                .with_table("n", *n)
                .with_table("labels", &verdict.labels)
                .with_table(
                    "arrows",
                    block
                        .spec
                        .arrows
                        .iter()
                        .map(|a| [&a.name, &a.source, &a.target])
                        .collect::<Vec<_>>(),
                )
                .with_table("standard-dims", &block.expected.standard_dims)
                .with_table("costandard-dims", &block.expected.costandard_dims)
                .with_table("projective-dims", &block.expected.projective_dims)
                .with_table("injective-dims", &block.expected.injective_dims)
                .with_table("skew", &block.skew)
                .with_table("dictionary", dictionary)
                .with_witness("checks", checks))
        }

        Command::NodalVerify { range, depth } => {
            let report = verify_blocks::<Q>(range.0..=range.1, *depth)?;
            let blocks: Vec<Value> = report
                .blocks
                .iter()
                .map(|b| serde_json::to_value(b).expect("block reports serialize"))
                .collect();
            let failing: Vec<i64> =
                report.blocks.iter().filter(|b| !b.pass).map(|b| b.n).collect();
            Ok(Report::new("nodal-verify", report.pass)
                .with_table("range", [range.0, range.1])
                .with_table("block-count", report.blocks.len())
                .with_table("blocks", blocks)
                .with_witness("failing", failing))
        }

        Command::Towers { support, twist, depth } => {
            let sheaf = GradedSheaf::new(*support, *twist, 0);
            let tor = tor_tower(&sheaf, *depth);
            let ext = ext_tower(&sheaf, *depth);
            Ok(Report::new("towers", true)
                .with_table("tor", &tor)
                .with_table("ext", &ext)
                .with_witness("sheaf", sheaf))
        }

        Command::Diff { left, right } => {
            let a = Report::from_json(&read_file(left)?)?;
            let b = Report::from_json(&read_file(right)?)?;
            let diff = diff_reports(&a, &b)?;
            Ok(Report::new("diff", diff.is_empty())
                .with_table("differences", &diff)
                .with_table("difference-count", diff.len())
                .with_witness("compared-check", &a.check))
        }
    }
}

/// Report for a stratified cover/hull outcome: the final certificates
/// decide the verdict, the level-by-level diagnostic ladder is attached
/// as a table, and purity warnings are included without failing the run.
fn cover_report(
    check: &str,
    alg: &Arc<QAlgebra>,
    s: usize,
    outcome: &CoverOutcome<Q>,
    expected: &Module<Q>,
) -> Report {
    let candidate = outcome.module();
    let levels: Vec<Value> = outcome.levels().iter().map(|d| level_value(alg, d)).collect();
    let warnings: Vec<Value> = outcome.warnings().iter().map(failure_value).collect();
    let mut report = Report::new(check, outcome.is_cover())
        .with_table("cover-dims", labeled_dims(candidate))
        .with_table("levels", levels)
        .with_witness("vertex", alg.vertex_label(s))
        .with_witness("warnings", warnings)
        .with_witness("module", module_value(candidate));
    report = if check == "injhull" {
        report.with_witness("isomorphic-to-injective", is_isomorphic(candidate, expected))
    } else {
        report.with_witness("isomorphic-to-projective", is_isomorphic(candidate, expected))
    };
    if let Some(failure) = outcome.failure() {
        report = report.with_witness("failure", failure_value(failure));
    }
    report
}

/// Report for an iterative cover/hull: no ladder, but the same stable
/// dimension table and isomorphism-class line as the stratified run.
fn plain_cover_report(check: &str, candidate: &Module<Q>, expected: &Module<Q>) -> Report {
    let iso = is_isomorphic(candidate, expected);
    let report = Report::new(check, iso)
        .with_table("cover-dims", labeled_dims(candidate))
        .with_witness("module", module_value(candidate));
    if check == "injhull" {
        report.with_witness("isomorphic-to-injective", iso)
    } else {
        report.with_witness("isomorphic-to-projective", iso)
    }
}

fn level_value(alg: &Arc<QAlgebra>, d: &CoverDiagnostic) -> Value {
    let named = |table: &[(usize, usize)]| {
        table
            .iter()
            .map(|&(v, k)| json!([alg.vertex_label(v), k]))
            .collect::<Vec<_>>()
    };
    json!({
        "level": d.level,
        "open-stratum": d.open_stratum.iter().map(|&v| alg.vertex_label(v)).collect::<Vec<_>>(),
        "checks": d
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
            .collect::<Vec<_>>(),
        "socle-table": named(&d.socle_table),
        "correction-table": named(&d.correction_table),
        "socle-ext-table": named(&d.socle_ext_table),
        "excess-table": named(&d.excess_table),
    })
}

fn failure_value(f: &PurityFailure) -> Value {
    json!({
        "vertex": f.vertex,
        "check": f.check,
        "detail": f.detail,
        "table": f.table,
    })
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<Arc<QAlgebra>> {
    algebra_from_json(&read_file(path)?)
}

fn load_module(alg: &Arc<QAlgebra>, path: &Path) -> Result<Module<Q>> {
    module_from_json(alg, &read_file(path)?)
}

fn labels(alg: &Arc<QAlgebra>) -> Vec<&str> {
    (0..alg.vertex_count()).map(|v| alg.vertex_label(v)).collect()
}

fn arrow_rows(alg: &Arc<QAlgebra>) -> Vec<[String; 3]> {
    (0..alg.arrow_count())
        .map(|i| {
            let a = alg.arrow(i);
            [
                a.name.clone(),
                alg.vertex_label(a.source).to_string(),
                alg.vertex_label(a.target).to_string(),
            ]
        })
        .collect()
}

fn labeled_dims(m: &Module<Q>) -> Vec<(String, usize)> {
    let alg = m.algebra();
    (0..alg.vertex_count())
        .map(|v| (alg.vertex_label(v).to_string(), m.dim_at(v)))
        .collect()
}

/// A module rendered exactly as its canonical JSON file, so any module
/// embedded in a report re-parses to an equal module.
fn module_value(m: &Module<Q>) -> Value {
    serde_json::from_str(&module_to_json(m)).expect("canonical module JSON parses")
}

/// A map of modules rendered vertexwise; only nonempty blocks appear.
fn map_value(f: &ModuleMap<Q>) -> Value {
    let alg = f.source().algebra();
    let mut parts = serde_json::Map::new();
    for v in 0..alg.vertex_count() {
        let block = f.part(v);
        if block.rows() * block.cols() > 0 {
            parts.insert(alg.vertex_label(v).to_string(), mat_value(block));
        }
    }
    Value::Object(parts)
}

fn mat_value(m: &Mat<Q>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| {
                            serde_json::to_value(Entry::from_q(&m[(i, j)]))
                                .expect("entries serialize")
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("range '{s}' must look like a..b"))?;
    let lo: i64 = a.trim().parse().map_err(|e| format!("bad range start '{a}': {e}"))?;
    let hi: i64 = b.trim().parse().map_err(|e| format!("bad range end '{b}': {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_weight(s: &str) -> std::result::Result<Weight, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("weight '{s}' must look like a,b"))?;
    let x: i64 = a.trim().parse().map_err(|e| format!("bad weight entry '{a}': {e}"))?;
    let y: i64 = b.trim().parse().map_err(|e| format!("bad weight entry '{b}': {e}"))?;
    Ok(Weight(x, y))
}

fn parse_support(s: &str) -> std::result::Result<Support, String> {
    match s {
        "X" => Ok(Support::Whole),
        "C+" => Ok(Support::BranchPlus),
        "C-" => Ok(Support::BranchMinus),
        "C0" => Ok(Support::Origin),
        other => Err(format!("unknown support '{other}': expected X, C+, C- or C0")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing_accepts_negative_endpoints() {
        assert_eq!(parse_range("-3..3").unwrap(), (-3, 3));
        assert_eq!(parse_range("-5..-2").unwrap(), (-5, -2));
        assert_eq!(parse_range("0..0").unwrap(), (0, 0));
        assert!(parse_range("3..-3").is_err());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn weight_and_support_parsing() {
        assert_eq!(parse_weight("3,-5").unwrap(), Weight(3, -5));
        assert!(parse_weight("3").is_err());
        assert_eq!(parse_support("C+").unwrap(), Support::BranchPlus);
        assert_eq!(parse_support("X").unwrap(), Support::Whole);
        assert!(parse_support("C*").is_err());
    }

    #[test]
    fn diffing_reports_from_different_commands_is_an_input_error() {
        let a = Report::new("hom", true);
        let b = Report::new("ext1", true);
        assert!(diff_reports(&a, &b).is_err());
    }

    #[test]
    fn diff_localizes_to_the_changed_path() {
        let a = Report::new("towers", true)
            .with_table("tor", vec![1, 2])
            .with_table("ext", 7);
        let same = a.clone();
        assert!(diff_reports(&a, &same).unwrap().is_empty());

        let b = Report::new("towers", true)
            .with_table("tor", vec![1, 3, 4])
            .with_table("ext", 7);
        let diff = diff_reports(&a, &b).unwrap();
        let paths: Vec<&str> = diff.iter().map(|d| d.path.as_str()).collect();
        assert_eq!(paths, ["tables.tor[1]", "tables.tor[2]"]);
        assert_eq!(diff[1].left, Value::Null);
        assert_eq!(diff[1].right, json!(4));
    }
}
