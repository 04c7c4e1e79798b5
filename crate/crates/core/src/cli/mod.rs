//! The `archifold` command line: mesh export, verification suites, snub
//! roots and fold traces.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 usage error, 3 I/O error.

pub mod export;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::facerules::{
    snub_cube_params, snub_dodec_params, verify_appendix_identities, Chirality, PlatonicKind,
    SnubKind, SnubParams,
};
use crate::foldverify::{
    final_fold_to_a1, snub_cube_fold_trace, verify_dodec_fold, FoldTrace, VerifyError,
};
use crate::solidbuilder::{
    build, build_on, metrics, verify_regular_faces, BuildError, Polyhedron, SolidKind,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "archifold",
    version,
    about = "Archimedean solids on Platonic faces, and the folds that construct the snubs"
)]
struct Cli {
    /// List the solid names and exit.
    #[arg(long, global = true)]
    list: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Obj,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Hand {
    Left,
    Right,
}

impl From<Hand> for Chirality {
    fn from(h: Hand) -> Self {
        match h {
            Hand::Left => Chirality::Left,
            Hand::Right => Chirality::Right,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a solid and write it as OBJ or JSON.
    Generate {
        solid: Option<String>,
        /// Platonic solid to build on; defaults per solid.
        #[arg(long)]
        parent: Option<String>,
        #[arg(long, value_enum)]
        chirality: Option<Hand>,
        #[arg(long, value_enum, default_value = "obj")]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Run checks: all, appendix, folds, or a solid name.
    Verify {
        #[arg(default_value = "all")]
        scope: String,
        /// Tolerance for mesh checks.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum)]
        chirality: Option<Hand>,
    },
    /// Print the snub parameters x, y and their residuals.
    Roots {
        solid: Option<String>,
        /// Largest accepted residual.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Print a fold construction as JSON.
    FoldTrace {
        solid: Option<String>,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("verification failed")]
    Failed,
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Build(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Failed => EXIT_FAILED,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            if !matches!(e, CliError::Failed) {
                let _ = writeln!(err, "archifold: {e}");
            }
            e.code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    if cli.list {
        for k in SolidKind::all() {
            line(out, k.name())?;
        }
        return Ok(());
    }
    match cli.command {
        None => Err(CliError::Usage("missing command; try --help".into())),
        Some(Command::Generate {
            solid,
            parent,
            chirality,
            format,
            out: path,
        }) => {
            let kind = parse_solid(solid.as_deref())?;
            let poly = match (kind, parent) {
                (SolidKind::Archimedean(a), Some(p)) => {
                    let p: PlatonicKind = p.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
                    build_on(a, p, chirality.map(Into::into))?
                }
                (SolidKind::Platonic(_), Some(_)) => {
                    return Err(CliError::Usage(format!("{kind} takes no parent")))
                }
                (_, None) => build(kind, chirality.map(Into::into))?,
            };
            let text = match format {
                Format::Obj => export::to_obj(&poly),
                Format::Json => export::to_json(&poly),
            };
            emit(out, path.as_deref(), &text)
        }
        Some(Command::Verify {
            scope,
            tol,
            chirality,
        }) => {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(format!(
                    "--tol must be positive, got {tol}"
                )));
            }
            let mut table = Table::default();
            match scope.as_str() {
                "all" => {
                    appendix_rows(&mut table);
                    fold_rows(&mut table);
                    for k in SolidKind::all() {
                        solid_rows(&mut table, k, chirality.map(Into::into), tol)?;
                    }
                }
                "appendix" => appendix_rows(&mut table),
                "folds" => fold_rows(&mut table),
                name => {
                    let k = parse_solid(Some(name))?;
                    solid_rows(&mut table, k, chirality.map(Into::into), tol)?;
                }
            }
            table.print(out)?;
            if table.all_pass() {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
        Some(Command::Roots { solid, tol }) => {
            let params = snub_params(parse_snub(solid.as_deref())?);
            line(out, &format!("x = {:.10}, y = {:.10}", params.x, params.y))?;
            for (k, v) in &params.residuals {
                line(out, &format!("residual {k} = {v:.3e}"))?;
            }
            if params.max_residual() < tol {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
        Some(Command::FoldTrace { solid, out: path }) => {
            let results = match parse_snub(solid.as_deref())? {
                SnubKind::Cube => vec![snub_cube_fold_trace()],
                SnubKind::Dodecahedron => vec![verify_dodec_fold(), final_fold_to_a1()],
            };
            let mut ok = true;
            let traces: Vec<FoldTrace> = results
                .into_iter()
                .map(|r| match r {
                    Ok(t) => Ok(t),
                    Err(VerifyError::VerificationFailed { trace, .. }) => {
                        ok = false;
                        Ok(*trace)
                    }
                    Err(e) => Err(CliError::Usage(e.to_string())),
                })
                .collect::<Result<_, _>>()?;
            let mut text = serde_json::to_string_pretty(&traces).expect("finite values serialize");
            text.push('\n');
            emit(out, path.as_deref(), &text)?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
    }
}

fn line(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    writeln!(out, "{s}").map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn parse_solid(name: Option<&str>) -> Result<SolidKind, CliError> {
    let name = name.ok_or_else(|| CliError::Usage("missing solid name; see --list".into()))?;
    name.parse()
        .map_err(|_| CliError::Usage(format!("unknown solid `{name}`; see --list")))
}

fn parse_snub(name: Option<&str>) -> Result<SnubKind, CliError> {
    let name = name.unwrap_or("snub-cube");
    name.parse().map_err(|_| {
        CliError::Usage(format!(
            "expected snub-cube or snub-dodecahedron, got `{name}`"
        ))
    })
}

fn snub_params(kind: SnubKind) -> SnubParams {
    match kind {
        SnubKind::Cube => snub_cube_params(),
        SnubKind::Dodecahedron => snub_dodec_params(),
    }
}

#[derive(Default)]
struct Table {
    rows: Vec<(bool, String, String)>,
}

impl Table {
    fn push(&mut self, pass: bool, name: impl Into<String>, detail: impl Into<String>) {
        self.rows.push((pass, name.into(), detail.into()));
    }

    fn below(&mut self, name: impl Into<String>, value: f64, tol: f64) {
        self.push(value <= tol, name, format!("{value:.3e} <= {tol:.0e}"));
    }

    fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.0)
    }

    fn print(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let width = self
            .rows
            .iter()
            .map(|r| r.1.chars().count())
            .max()
            .unwrap_or(0);
        for (pass, name, detail) in &self.rows {
            let tag = if *pass { "PASS" } else { "FAIL" };
            let pad = width - name.chars().count();
            line(out, &format!("{tag}  {name}{}  {detail}", " ".repeat(pad)))?;
        }
        let failed = self.rows.iter().filter(|r| !r.0).count();
        line(out, &format!("{} checks, {failed} failed", self.rows.len()))
    }
}

fn appendix_rows(table: &mut Table) {
    for c in verify_appendix_identities().checks {
        table.push(
            c.holds,
            format!("appendix: {}", c.name),
            format!("{} = {}", c.lhs, c.rhs),
        );
    }
}

fn trace_rows(table: &mut Table, result: Result<FoldTrace, VerifyError>) {
    let trace = match result {
        Ok(t) => t,
        Err(VerifyError::VerificationFailed { trace, .. }) => *trace,
        Err(e) => {
            table.push(false, "fold", e.to_string());
            return;
        }
    };
    for (name, c) in &trace.checks {
        table.push(
            c.pass,
            format!("{}: {name}", trace.name),
            format!("{:.3e} {:?} {:.0e}", c.value, c.relation, c.tol),
        );
    }
}

fn fold_rows(table: &mut Table) {
    trace_rows(table, snub_cube_fold_trace());
    trace_rows(table, verify_dodec_fold());
    trace_rows(table, final_fold_to_a1());
}

fn mesh_rows(table: &mut Table, poly: &Polyhedron, tol: f64) {
    let mut label = poly.solid.to_string();
    if let (SolidKind::Archimedean(a), Some(p)) = (poly.solid, poly.parent) {
        if p != a.default_parent() {
            label = format!("{label} on {p}");
        }
    }
    if let Some(c) = poly.chirality {
        label = format!("{label} ({c})");
    }
    let expected = match poly.solid {
        SolidKind::Platonic(k) => k.counts(),
        SolidKind::Archimedean(k) => k.counts(),
    };
    match poly.check_mesh() {
        Ok(c) => {
            let got = (c.vertices, c.edges, c.faces);
            table.push(
                got == expected,
                format!("{label}: V/E/F"),
                format!("{}/{}/{}", got.0, got.1, got.2),
            );
        }
        Err(e) => table.push(false, format!("{label}: mesh"), e.to_string()),
    }
    let m = metrics(poly);
    table.below(format!("{label}: edge spread"), m.edge_spread(), tol);
    table.below(
        format!("{label}: vertex norm spread"),
        m.vertex_norm_spread,
        tol,
    );
    table.below(
        format!("{label}: face regularity"),
        verify_regular_faces(poly, tol).max_error,
        tol,
    );
    if let Some(wm) = m.wm_residual {
        table.below(format!("{label}: circumsphere sextic"), wm, 1e-6);
    }
}

fn solid_rows(
    table: &mut Table,
    kind: SolidKind,
    chirality: Option<Chirality>,
    tol: f64,
) -> Result<(), CliError> {
    match (kind, kind.snub()) {
        (_, Some(s)) => {
            let params = snub_params(s);
            table.push(
                true,
                format!("{kind}: x, y"),
                format!("{:.10}, {:.10}", params.x, params.y),
            );
            for (k, v) in &params.residuals {
                table.below(format!("{kind}: residual {k}"), *v, 1e-10);
            }
            let hands = match chirality {
                Some(c) => vec![c],
                None => vec![Chirality::Left, Chirality::Right],
            };
            for c in hands {
                mesh_rows(table, &build(kind, Some(c))?, tol);
            }
        }
        (SolidKind::Archimedean(a), None) => {
            if chirality.is_some() {
                return Err(BuildError::ChiralityNotApplicable(a).into());
            }
            // every parent with a rule, not only the default one
            for &p in PlatonicKind::ALL {
                if let Ok(poly) = build_on(a, p, None) {
                    mesh_rows(table, &poly, tol);
                }
            }
        }
        (SolidKind::Platonic(_), None) => mesh_rows(table, &build(kind, None)?, tol),
    }
    Ok(())
}
