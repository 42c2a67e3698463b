//! Command-line front end. `run` turns a parsed configuration into output
//! text and an exit code; `main` only does I/O.

use crate::chevalley::LieAlgebra;
use crate::rational::{fmt_q, ser_q, Q};
use crate::splitcas::{moments_csv, ModuleSpectrum};
use crate::udim::{self, casimir_eigenvalue, module_table, tables, Catalog, EvalError, Label, Module, Provenance};
use crate::verify::{self, Budget, Finding, VerificationReport};
use crate::vparams::{algebra_point, AlgebraId, VogelPoint};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "vogel-g4", version, about = "Universal dimensions and split-Casimir spectra of g⊗n, n ≤ 4")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// as-printed or corrected
    #[arg(long, global = true, default_value = "corrected")]
    pub provenance: Provenance,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct At {
    /// Algebra such as sl3, so8, sp4, g2, e8.
    #[arg(long)]
    pub algebra: Option<AlgebraId>,
    /// Parameter point a,b,c (rescaled so that a+b+c = 1/2).
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension of one label.
    Dim {
        label: String,
        #[command(flatten)]
        at: At,
    },
    /// Every entry of a module with eig₄ and dimension.
    Table {
        module: Module,
        #[command(flatten)]
        at: At,
    },
    /// Measure spectra and compare them with the catalog.
    Verify {
        #[arg(long, value_delimiter = ',', required = true)]
        algebras: Vec<AlgebraId>,
        /// Comma-separated module codes, or "all", "fourth", "warmup".
        #[arg(long, default_value = "all")]
        modules: String,
        #[arg(long, default_value = "standard")]
        budget: Budget,
    },
    /// Reduce mismatches to the formula families responsible.
    Scan {
        #[arg(long, value_delimiter = ',', required = true)]
        algebras: Vec<AlgebraId>,
        #[arg(long, default_value = "all")]
        modules: String,
        #[arg(long, default_value = "standard")]
        budget: Budget,
    },
    /// Measured spectrum of one module.
    Spectrum {
        #[arg(long)]
        algebra: AlgebraId,
        #[arg(long)]
        module: Module,
        #[arg(long, default_value = "standard")]
        budget: Budget,
    },
    /// Exact trace moments tr(P_R Ĉ^k), k = 0..=kmax.
    Moments {
        #[arg(long)]
        algebra: AlgebraId,
        #[arg(long)]
        module: Module,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, default_value = "standard")]
        budget: Budget,
    },
    /// Exceptional-point relations.
    Relations {
        #[command(flatten)]
        at: At,
    },
    /// Chevalley basis, structure constants and Killing form as JSON.
    DumpAlgebra {
        #[arg(long)]
        algebra: AlgebraId,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
    #[error(transparent)]
    Algebra(#[from] crate::chevalley::ChevalleyError),
}

/// What `main` prints: output text, notices for stderr, exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub notices: Vec<String>,
    pub exit: i32,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, notices: vec![], exit: 0 }
    }
}

pub fn parse_modules(s: &str) -> Result<Vec<Module>, CliError> {
    match s {
        "all" => Ok(Module::ALL.to_vec()),
        "fourth" => Ok(Module::FOURTH.to_vec()),
        "warmup" => Ok(Module::WARMUP.to_vec()),
        _ => s.split(',').map(|t| t.parse::<Module>().map_err(CliError::Usage)).collect(),
    }
}

enum Place {
    Algebra(AlgebraId, VogelPoint),
    Point(VogelPoint),
}

impl Place {
    fn new(at: &At) -> Result<Place, CliError> {
        match (&at.algebra, &at.point) {
            (Some(a), None) => Ok(Place::Algebra(*a, algebra_point(a).map_err(|e| CliError::Usage(e.to_string()))?)),
            (None, Some(p)) => Ok(Place::Point(VogelPoint::parse(p).map_err(CliError::Usage)?)),
            _ => Err(CliError::Usage("give exactly one of --algebra and --point".into())),
        }
    }

    fn point(&self) -> &VogelPoint {
        match self {
            Place::Algebra(_, p) | Place::Point(p) => p,
        }
    }

    fn dim(&self, cat: &Catalog, label: &Label) -> Result<(Q, bool), EvalError> {
        match self {
            Place::Algebra(a, p) => {
                let (line, n) = a.line();
                cat.dim_with_fallback(label, p, Some((&line, &n)))
            }
            Place::Point(p) => cat.dim(label, p).map(|v| (v, false)),
        }
    }

    fn describe(&self) -> (Option<String>, Vec<String>) {
        let pt: Vec<String> = self.point().coords().iter().map(fmt_q).collect();
        match self {
            Place::Algebra(a, _) => (Some(a.to_string()), pt),
            Place::Point(_) => (None, pt),
        }
    }
}

#[derive(Serialize)]
struct DimOut {
    label: String,
    algebra: Option<String>,
    point: Vec<String>,
    provenance: Provenance,
    #[serde(serialize_with = "ser_q")]
    value: Q,
    line_evaluated: bool,
}

#[derive(Serialize)]
struct TableRow {
    label: String,
    mult: u32,
    #[serde(serialize_with = "ser_q")]
    eig4: Q,
    dim: Option<String>,
    error: Option<String>,
    line_evaluated: bool,
}

#[derive(Serialize)]
struct TableOut {
    module: Module,
    algebra: Option<String>,
    point: Vec<String>,
    provenance: Provenance,
    entries: Vec<TableRow>,
    sum: Option<String>,
    total: Option<String>,
    total_poly: Vec<String>,
}

#[derive(Serialize)]
struct MomentsOut {
    algebra: String,
    module: Module,
    moments: Vec<String>,
}

#[derive(Serialize)]
struct RelationsOut {
    point: Vec<String>,
    relations: Vec<udim::exceptional::RelationCheck>,
    all_hold: bool,
}

fn render_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(header).unwrap();
    for r in rows {
        w.write_record(r).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

pub fn run(cfg: &RunConfig) -> Result<Output, CliError> {
    let cat = Catalog::new(cfg.provenance);
    match &cfg.command {
        Command::Dim { label, at } => cmd_dim(cfg, &cat, label, at),
        Command::Table { module, at } => cmd_table(cfg, &cat, *module, at),
        Command::Verify { algebras, modules, budget } => cmd_verify(cfg, &cat, algebras, modules, *budget),
        Command::Scan { algebras, modules, budget } => cmd_scan(cfg, algebras, modules, *budget),
        Command::Spectrum { algebra, module, budget } => cmd_spectrum(cfg, algebra, *module, *budget),
        Command::Moments { algebra, module, kmax, budget } => cmd_moments(cfg, algebra, *module, *kmax, *budget),
        Command::Relations { at } => cmd_relations(cfg, &cat, at),
        Command::DumpAlgebra { algebra } => {
            let g = LieAlgebra::build(algebra)?;
            let dump = g.dump();
            Ok(Output::ok(match cfg.format {
                Format::Csv => csv_text(
                    &["a", "b", "c", "coefficient"],
                    dump.structure_constants
                        .iter()
                        .map(|(a, b, c, x)| vec![a.to_string(), b.to_string(), c.to_string(), x.clone()])
                        .collect(),
                ),
                _ => render_json(&dump),
            }))
        }
    }
}

fn cmd_dim(cfg: &RunConfig, cat: &Catalog, label: &str, at: &At) -> Result<Output, CliError> {
    let place = Place::new(at)?;
    let l: Label = label.parse().map_err(CliError::Usage)?;
    let (value, on_line) = place.dim(cat, &l)?;
    let mut notices = vec![];
    if on_line {
        notices.push(format!("note: {l} has a removable singularity at the point; evaluated on the family line"));
    }
    let (algebra, point) = place.describe();
    let text = match cfg.format {
        Format::Pretty => format!("{}\n", fmt_q(&value)),
        Format::Csv => csv_text(&["label", "provenance", "value"], vec![vec![l.to_string(), cat.provenance().to_string(), fmt_q(&value)]]),
        Format::Json => render_json(&DimOut {
            label: l.to_string(),
            algebra,
            point,
            provenance: cat.provenance(),
            value,
            line_evaluated: on_line,
        }),
    };
    Ok(Output { text, notices, exit: 0 })
}

fn cmd_table(cfg: &RunConfig, cat: &Catalog, module: Module, at: &At) -> Result<Output, CliError> {
    let place = Place::new(at)?;
    let tab = module_table(module, cat.provenance());
    let mut sum = Some(Q::zero());
    let mut entries = Vec::new();
    for (l, m) in &tab.entries {
        let eig4 = casimir_eigenvalue(l, place.point(), 4);
        let (dim, error, line_evaluated) = match place.dim(cat, l) {
            Ok((v, on_line)) => {
                if let Some(s) = &mut sum {
                    *s += &v * Q::from_integer((*m).into());
                }
                (Some(v), None, on_line)
            }
            Err(e) => {
                sum = None;
                (None, Some(e.to_string()), false)
            }
        };
        entries.push(TableRow { label: l.to_string(), mult: *m, eig4, dim: dim.as_ref().map(fmt_q), error, line_evaluated });
    }
    let d = match &place {
        Place::Algebra(a, _) => Some(Q::from_integer(a.classical_dim().into())),
        Place::Point(p) => cat.dim_g().eval_point(p).ok(),
    };
    let total = d.map(|d| tables::eval_total(module, &d));
    let (algebra, point) = place.describe();
    let out = TableOut {
        module,
        algebra,
        point,
        provenance: cat.provenance(),
        entries,
        sum: sum.as_ref().map(fmt_q),
        total: total.as_ref().map(fmt_q),
        total_poly: tab.total.iter().map(fmt_q).collect(),
    };
    let text = match cfg.format {
        Format::Json => render_json(&out),
        Format::Csv => csv_text(
            &["label", "mult", "eig4", "dim"],
            out.entries
                .iter()
                .map(|r| vec![r.label.clone(), r.mult.to_string(), fmt_q(&r.eig4), r.dim.clone().unwrap_or_default()])
                .collect(),
        ),
        Format::Pretty => {
            let mut s = format!("{module} ({})\n", cat.provenance());
            s.push_str(&format!("  {:<8} {:>4} {:>10} {:>14}\n", "label", "mult", "eig4", "dim"));
            for r in &out.entries {
                let dim = r.dim.clone().unwrap_or_else(|| format!("undefined: {}", r.error.clone().unwrap_or_default()));
                s.push_str(&format!(
                    "  {:<8} {:>4} {:>10} {:>14}{}\n",
                    r.label,
                    r.mult,
                    fmt_q(&r.eig4),
                    dim,
                    if r.line_evaluated { "  (line)" } else { "" }
                ));
            }
            s.push_str(&format!(
                "  sum {}   closed form {}\n",
                out.sum.clone().unwrap_or_else(|| "undefined".into()),
                out.total.clone().unwrap_or_else(|| "undefined".into())
            ));
            s
        }
    };
    Ok(Output::ok(text))
}

fn check_budget(algebras: &[AlgebraId], modules: &[Module], budget: Budget) -> Result<(), CliError> {
    for a in algebras {
        for m in modules {
            budget.check(a, *m).map_err(|e| CliError::Usage(e.to_string()))?;
        }
    }
    Ok(())
}

fn measure_all(algebras: &[AlgebraId], modules: &[Module], budget: Budget) -> Result<Vec<verify::Measured>, CliError> {
    check_budget(algebras, modules, budget)?;
    let mut out = Vec::new();
    for a in algebras {
        let g = LieAlgebra::build(a)?;
        for m in modules {
            out.push(verify::measure(a, &g, *m, budget)?);
        }
    }
    Ok(out)
}

fn report_rows(reports: &[VerificationReport]) -> Vec<Vec<String>> {
    reports
        .iter()
        .flat_map(|r| {
            r.rows.iter().map(move |row| {
                vec![
                    r.algebra.clone(),
                    r.module.code().to_string(),
                    r.provenance.to_string(),
                    fmt_q(&row.eigenvalue),
                    row.labels.join(" "),
                    fmt_q(&row.predicted),
                    row.measured.to_string(),
                    row.matches.to_string(),
                    row.line_evaluated.to_string(),
                ]
            })
        })
        .collect()
}

fn cmd_verify(cfg: &RunConfig, cat: &Catalog, algebras: &[AlgebraId], modules: &str, budget: Budget) -> Result<Output, CliError> {
    let modules = parse_modules(modules)?;
    let measured = measure_all(algebras, &modules, budget)?;
    let reports: Vec<VerificationReport> = measured
        .into_iter()
        .map(|m| verify::compare(cat, &m.algebra, &m.spectrum, Some(m.annihilator)))
        .collect::<Result<_, _>>()?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    let text = match cfg.format {
        Format::Json => render_json(&reports),
        Format::Csv => csv_text(
            &["algebra", "module", "provenance", "eigenvalue", "labels", "predicted", "measured", "match", "line_evaluated"],
            report_rows(&reports),
        ),
        Format::Pretty => {
            let mut s: String = reports.iter().map(verify::fmt_report_pretty).collect();
            s.push_str(&format!("{passed}/{} passed\n", reports.len()));
            s
        }
    };
    Ok(Output { text, notices: vec![], exit: if passed == reports.len() { 0 } else { 1 } })
}

fn cmd_scan(cfg: &RunConfig, algebras: &[AlgebraId], modules: &str, budget: Budget) -> Result<Output, CliError> {
    let modules = parse_modules(modules)?;
    let measured = measure_all(algebras, &modules, budget)?;
    let findings: Vec<Finding> = verify::erratum_scan(&measured, cfg.provenance)?;
    let text = match cfg.format {
        Format::Json => render_json(&findings),
        Format::Csv => csv_text(
            &["family", "algebra", "module", "eigenvalue", "predicted", "measured", "status"],
            findings
                .iter()
                .flat_map(|f| {
                    f.evidence.iter().map(move |e| {
                        vec![
                            f.family.clone(),
                            e.algebra.clone(),
                            e.module.code().to_string(),
                            fmt_q(&e.eigenvalue),
                            fmt_q(&e.predicted),
                            e.measured.to_string(),
                            f.status.clone(),
                        ]
                    })
                })
                .collect(),
        ),
        Format::Pretty => {
            if findings.is_empty() {
                "no findings\n".to_string()
            } else {
                let mut s = String::new();
                for f in &findings {
                    s.push_str(&format!("{}: {}\n", f.family, f.status));
                    for e in &f.evidence {
                        s.push_str(&format!(
                            "  {} {} eigenvalue {} [{}]: predicted {} measured {}\n",
                            e.algebra,
                            e.module,
                            fmt_q(&e.eigenvalue),
                            e.labels.join(" "),
                            fmt_q(&e.predicted),
                            e.measured
                        ));
                    }
                }
                s
            }
        }
    };
    Ok(Output::ok(text))
}

fn cmd_spectrum(cfg: &RunConfig, algebra: &AlgebraId, module: Module, budget: Budget) -> Result<Output, CliError> {
    let measured = measure_all(&[*algebra], &[module], budget)?;
    let s: &ModuleSpectrum = &measured[0].spectrum;
    let text = match cfg.format {
        Format::Json => render_json(s),
        Format::Csv => csv_text(
            &["eigenvalue", "labels", "dim"],
            s.entries.iter().map(|e| vec![fmt_q(&e.eigenvalue), e.labels.join(" "), e.dim.to_string()]).collect(),
        ),
        Format::Pretty => {
            let mut t = format!("{} {}\n", s.algebra, s.module);
            for e in &s.entries {
                t.push_str(&format!("  {:>8}  {:>8}  {}\n", fmt_q(&e.eigenvalue), e.dim, e.labels.join(" ")));
            }
            t.push_str(&format!("  total {}\n", s.total()));
            t
        }
    };
    Ok(Output::ok(text))
}

fn cmd_moments(cfg: &RunConfig, algebra: &AlgebraId, module: Module, kmax: usize, budget: Budget) -> Result<Output, CliError> {
    check_budget(&[*algebra], &[module], budget)?;
    let g = LieAlgebra::build(algebra)?;
    let m = crate::splitcas::trace_moments(&g, module, kmax).map_err(verify::VerifyError::from)?;
    let text = match cfg.format {
        Format::Json => render_json(&MomentsOut {
            algebra: algebra.to_string(),
            module,
            moments: m.iter().map(fmt_q).collect(),
        }),
        Format::Csv => moments_csv(&m),
        Format::Pretty => m.iter().enumerate().map(|(k, t)| format!("{k:>3}  {}\n", fmt_q(t))).collect(),
    };
    Ok(Output::ok(text))
}

fn cmd_relations(cfg: &RunConfig, cat: &Catalog, at: &At) -> Result<Output, CliError> {
    let place = Place::new(at)?;
    let rel = udim::exceptional_relations(cat, place.point())?;
    let all_hold = rel.iter().all(|r| r.holds);
    let (_, point) = place.describe();
    let text = match cfg.format {
        Format::Json => render_json(&RelationsOut { point, relations: rel, all_hold }),
        Format::Csv => csv_text(
            &["group", "relation", "value", "holds"],
            rel.iter().map(|r| vec![r.relation.group.to_string(), relation_text(&r.relation), fmt_q(&r.value), r.holds.to_string()]).collect(),
        ),
        Format::Pretty => rel
            .iter()
            .map(|r| format!("{:<4} {:<24} = {:>6}  {}\n", r.relation.group, relation_text(&r.relation), fmt_q(&r.value), if r.holds { "ok" } else { "FAILS" }))
            .collect(),
    };
    Ok(Output { text, notices: vec![], exit: if all_hold { 0 } else { 1 } })
}

fn relation_text(r: &udim::exceptional::Relation) -> String {
    r.terms
        .iter()
        .map(|(l, k)| if *k == 1 { format!("dim {l}") } else { format!("{k}·dim {l}") })
        .collect::<Vec<_>>()
        .join(" + ")
}
