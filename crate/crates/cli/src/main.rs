use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};
use hvector::construction::is_constructible_input;
use hvector::homology::classify;
use hvector::io::{parse_vector, ComplexDocument, ParsedVector};
use hvector::obstruction::{
    betti_split_verdict, enumerate_splits, extension_predicate, family_certificate, family_hvector,
    skeleton_search, verdict, EngineOptions, FamilyParams, DEFAULT_SKELETON_CAP,
};
use hvector::{
    glue, verify_shelling, CountVector, Face, GlueMap, GluePair, GlueTarget, Role,
    SimplicialComplex,
};
use serde_json::{json, Value};

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

/// Decide, obstruct, and construct h-vectors of shellable simplicial balls.
///
/// Exit codes: 0 constructible (or success), 1 input error, 2 impossible,
/// 3 unknown.
#[derive(Parser, Debug)]
#[command(name = "hvector", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct EngineArgs {
    /// Largest absent-edge count the skeleton engine enumerates.
    #[arg(long, default_value_t = DEFAULT_SKELETON_CAP)]
    cap_absent_edges: usize,
    /// Drop split candidates whose components are themselves ruled out.
    #[arg(long)]
    recursive_splits: bool,
}

impl EngineArgs {
    fn options(&self) -> EngineOptions {
        EngineOptions {
            recursive_splits: self.recursive_splits,
            skeleton_cap: self.cap_absent_edges,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between f- and h-vectors (and report g for h input).
    Convert {
        vector: String,
        /// Pad the vector with zeros to dimension d (length d+1).
        #[arg(long)]
        dim: Option<usize>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Run the full verdict pipeline on an h-vector.
    Check {
        vector: String,
        #[command(flatten)]
        engine: EngineArgs,
        /// Let the m-extension predicate start at m = 0 (false: m > 0 only).
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        m_nonneg: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Build a certified ball and write it as a complex document.
    Construct {
        vector: String,
        #[command(flatten)]
        engine: EngineArgs,
        /// Complex document path (embedded in the report when absent).
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Re-check a complex document and its shelling certificate.
    Verify {
        file: PathBuf,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Certificate for the one-parameter family of vectors.
    Family {
        #[arg(long)]
        x: u32,
        #[arg(long)]
        y: u32,
        #[arg(long)]
        dim: usize,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Peeva bounds and the splitting engine.
    Betti {
        vector: String,
        #[arg(long)]
        recursive_splits: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// List the admissible splits h = h' + h''.
    Splits {
        vector: String,
        #[arg(long)]
        recursive_splits: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// The edge and triangle counting engine.
    Skeleton {
        vector: String,
        #[arg(long, default_value_t = DEFAULT_SKELETON_CAP)]
        cap_absent_edges: usize,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Glue two complexes (or one to itself) along boundary ridges.
    Glue {
        left: PathBuf,
        right: Option<PathBuf>,
        /// Ridge pair `a,b,c:x,y,z`, vertices matched in increasing order.
        /// Defaults to the first boundary ridge of each complex.
        #[arg(long = "pair")]
        pairs: Vec<String>,
        /// Complex document path (embedded in the report when absent).
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

fn write_text(text: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => {
            let mut out = io::stdout().lock();
            if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

fn emit(value: &Value, path: Option<&Path>) -> CliResult<()> {
    write_text(&serde_json::to_string_pretty(value)?, path)
}

/// An h-vector argument; f-vectors are converted.
fn h_argument(text: &str) -> CliResult<Vec<i64>> {
    match parse_vector(text)? {
        ParsedVector::Count(v) if v.role == Role::H => Ok(v.entries),
        ParsedVector::Count(v) if v.role == Role::F => Ok(v.convert(Role::H)?.entries),
        _ => Err(format!("{text:?} is not an h- or f-vector").into()),
    }
}

fn convert(text: &str, dim: Option<usize>, output: Option<&Path>) -> CliResult<i32> {
    let ParsedVector::Count(mut v) = parse_vector(text)? else {
        return Err("degree sequences have no f/h conversion".into());
    };
    if let Some(d) = dim {
        if v.entries.len() > d + 1 {
            return Err(format!("{v} is longer than dimension {d} allows").into());
        }
        v.entries.resize(d + 1, 0);
        v.d = d;
    }
    let h = match v.role {
        Role::H => v.clone(),
        Role::F => v.convert(Role::H)?,
        Role::G => return Err("g-vectors are only produced from h-vectors".into()),
    };
    let f = h.convert(Role::F)?;
    let g = h.g_of_h()?;
    emit(
        &json!({
            "d": h.d,
            "f": f.to_text(),
            "h": h.to_text(),
            "g": g.to_text(),
        }),
        output,
    )?;
    Ok(0)
}

fn check(
    text: &str,
    opts: &EngineOptions,
    m_nonneg: bool,
    output: Option<&Path>,
) -> CliResult<i32> {
    let h = h_argument(text)?;
    let decision = verdict(&h, opts)?;
    let mut doc = json!({ "report": decision.report });
    if h.len() == 7 {
        doc["extension"] = serde_json::to_value(extension_predicate(&h, !m_nonneg)?)?;
    }
    emit(&doc, output)?;
    Ok(decision.report.verdict.exit_code())
}

fn construct(text: &str, opts: &EngineOptions, output: Option<&Path>) -> CliResult<i32> {
    let h = h_argument(text)?;
    let decision = verdict(&h, opts)?;
    let mut doc = json!({ "report": decision.report });
    if let Some(ball) = decision.ball {
        let complex = ComplexDocument::new(&ball.complex, Some(ball.certificate));
        match output {
            Some(p) => {
                write_text(&complex.to_json(), Some(p))?;
                doc["complex_file"] = json!(p.display().to_string());
            }
            None => doc["complex"] = serde_json::to_value(&complex)?,
        }
    }
    emit(&doc, None)?;
    Ok(decision.report.verdict.exit_code())
}

fn read_document(path: &Path) -> CliResult<ComplexDocument> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(ComplexDocument::from_json(&text)?)
}

fn verify(path: &Path, output: Option<&Path>) -> CliResult<i32> {
    let doc = read_document(path)?;
    let c = doc.complex()?;
    let mut problems = Vec::new();
    if !c.is_pure() {
        problems.push("complex is not pure".to_string());
    }
    let h = c.h_vector();
    if let Some(declared) = &doc.h {
        if *declared != h.to_text() {
            problems.push(format!("declared {declared}, computed {h}"));
        }
    }
    let certificate = match &doc.certificate {
        None => Value::Null,
        Some(cert) => match verify_shelling(&cert.ordered_facets) {
            Err(e) => {
                problems.push(e.to_string());
                json!({ "valid": false })
            }
            Ok(replay) => {
                let ours: BTreeSet<&Face> = cert.ordered_facets.iter().collect();
                let theirs: BTreeSet<&Face> = c.facets().iter().collect();
                if ours != theirs {
                    problems.push("certificate facets differ from the complex".into());
                }
                if replay.restrictions != cert.restrictions {
                    problems.push("stored restrictions differ from the checker".into());
                }
                let from_cert = replay.h_vector();
                if from_cert != h {
                    problems.push(format!("certificate gives {from_cert}, faces give {h}"));
                }
                json!({ "valid": true, "h": from_cert.to_text() })
            }
        },
    };
    let class = classify(&c);
    let ok = problems.is_empty();
    emit(
        &json!({
            "ok": ok,
            "dim": c.dim(),
            "facets": c.facets().len(),
            "vertices": c.vertex_count(),
            "f": c.f_vector().to_text(),
            "h": h.to_text(),
            "certificate": certificate,
            "topology": class.tag,
            "problems": problems,
        }),
        output,
    )?;
    Ok(if ok { 0 } else { 1 })
}

fn family(x: u32, y: u32, dim: usize, output: Option<&Path>) -> CliResult<i32> {
    let p = FamilyParams::new(x, y, dim)?;
    let report = family_certificate(&p);
    emit(
        &json!({ "h": family_hvector(&p).to_text(), "report": report }),
        output,
    )?;
    Ok(report.verdict.exit_code())
}

fn betti(text: &str, recursive: bool, output: Option<&Path>) -> CliResult<i32> {
    let h = h_argument(text)?;
    let opts = EngineOptions {
        recursive_splits: recursive,
        ..EngineOptions::default()
    };
    let report = betti_split_verdict(&h, &opts);
    emit(&json!({ "report": report }), output)?;
    Ok(report.verdict.exit_code())
}

fn splits(text: &str, recursive: bool, output: Option<&Path>) -> CliResult<i32> {
    let h = h_argument(text)?;
    let found = enumerate_splits(&h, recursive);
    emit(
        &json!({
            "h": CountVector::h(&h).to_text(),
            "recursive": recursive,
            "count": found.len(),
            "splits": found,
        }),
        output,
    )?;
    Ok(0)
}

fn skeleton(text: &str, cap: usize, output: Option<&Path>) -> CliResult<i32> {
    let h = h_argument(text)?;
    let opts = EngineOptions {
        skeleton_cap: cap,
        ..EngineOptions::default()
    };
    let report = skeleton_search(&h, &opts);
    emit(&json!({ "report": report }), output)?;
    Ok(report.verdict.exit_code())
}

fn parse_face(text: &str) -> CliResult<Face> {
    let vertices = text
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("bad face {text:?}: {e}"))?;
    Ok(Face::from_iter_unsorted(vertices))
}

fn parse_pair(text: &str) -> CliResult<GluePair> {
    let (l, r) = text
        .split_once(':')
        .ok_or_else(|| format!("pair {text:?} needs the form a,b:c,d"))?;
    Ok(GluePair::in_order(parse_face(l)?, parse_face(r)?))
}

fn first_ridge(c: &SimplicialComplex) -> CliResult<Face> {
    c.boundary_ridges()
        .into_iter()
        .next()
        .ok_or_else(|| "complex has no boundary ridge".into())
}

fn glue_files(
    left: &Path,
    right: Option<&Path>,
    pairs: &[String],
    output: Option<&Path>,
) -> CliResult<i32> {
    let a = read_document(left)?.complex()?;
    let b = right
        .map(read_document)
        .transpose()?
        .map(|d| d.complex())
        .transpose()?;
    let mut map = GlueMap {
        pairs: pairs
            .iter()
            .map(|p| parse_pair(p))
            .collect::<CliResult<_>>()?,
    };
    let target = match &b {
        Some(b) => {
            if map.pairs.is_empty() {
                map.pairs
                    .push(GluePair::in_order(first_ridge(&a)?, first_ridge(b)?));
            }
            GlueTarget::Other(b)
        }
        None if map.pairs.is_empty() => return Err("self-gluing needs at least one --pair".into()),
        None => GlueTarget::SelfGlue,
    };
    let glued = glue(&a, target, &map)?;
    let complex = ComplexDocument::new(&glued, None);
    let mut doc = json!({
        "pairs": map.pairs,
        "f": glued.f_vector().to_text(),
        "h": glued.is_pure().then(|| glued.h_vector().to_text()),
        "constructible_input": glued.is_pure() && is_constructible_input(&glued.h_vector().entries),
    });
    match output {
        Some(p) => {
            write_text(&complex.to_json(), Some(p))?;
            doc["complex_file"] = json!(p.display().to_string());
        }
        None => doc["complex"] = serde_json::to_value(&complex)?,
    }
    emit(&doc, None)?;
    Ok(0)
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Convert {
            vector,
            dim,
            output,
        } => convert(&vector, dim, output.as_deref()),
        Command::Check {
            vector,
            engine,
            m_nonneg,
            output,
        } => check(&vector, &engine.options(), m_nonneg, output.as_deref()),
        Command::Construct {
            vector,
            engine,
            output,
        } => construct(&vector, &engine.options(), output.as_deref()),
        Command::Verify { file, output } => verify(&file, output.as_deref()),
        Command::Family { x, y, dim, output } => family(x, y, dim, output.as_deref()),
        Command::Betti {
            vector,
            recursive_splits,
            output,
        } => betti(&vector, recursive_splits, output.as_deref()),
        Command::Splits {
            vector,
            recursive_splits,
            output,
        } => splits(&vector, recursive_splits, output.as_deref()),
        Command::Skeleton {
            vector,
            cap_absent_edges,
            output,
        } => skeleton(&vector, cap_absent_edges, output.as_deref()),
        Command::Glue {
            left,
            right,
            pairs,
            output,
        } => glue_files(&left, right.as_deref(), &pairs, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
