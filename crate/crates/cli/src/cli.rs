//! Argument parsing and the verbs.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use thiserror::Error;

use pomlab_core::directoid::{AssignmentMode, AssignmentPolicy, Chooser, DirectoidClass};
use pomlab_core::dm::{self, dm_complete, DmError, Quantification, SetPair};
use pomlab_core::effect::{
    directoids_from_orthoalgebra, orthoalgebra_from_ortho_directoid, EffectError,
};
use pomlab_core::enumerate::{
    directoid_classes, effect_algebras_over, enumerate_directoids, enumerate_effect_algebras,
    enumerate_posets, CapExceeded, Caps,
};
use pomlab_core::term::{self, evaluate, Formula, TermError};
use pomlab_core::{
    find_b6_witness, BoundedInvolutivePoset, Element, InvolutiveDirectoid, PosetProperty, Subset,
    Verdict, Witness,
};

use crate::doc::{self, Document, FormatError, LabeledEffectAlgebra, Structure};
use crate::dot::poset_dot;
use crate::reproduce::{self, Target};

pub const EXIT_HOLDS: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pomlab",
    version,
    about = "Check, convert and enumerate bounded involutive posets, directoids and effect algebras",
    after_help = "Exit status: 0 when every check holds, 1 when a check fails, 2 on usage or format errors."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,
    /// Write a Graphviz diagram of the (induced) poset to FILE
    #[arg(long, global = true, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Worker threads for exhaustive sweeps
    #[arg(long, global = true, value_name = "K")]
    pub threads: Option<usize>,
    /// Largest structure size enumeration may reach
    #[arg(long, global = true, env = "POMLAB_CAP", value_name = "N")]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide properties of a structure
    Check {
        file: PathBuf,
        /// Property or class names, comma separated or repeated
        #[arg(
            long = "prop",
            alias = "filter",
            value_delimiter = ',',
            required = true
        )]
        props: Vec<String>,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Search for a B6 hexagon witnessing failure of paraorthomodularity
    Witness { file: PathBuf },
    /// Enumerate structures of one size up to isomorphism
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only structures with these properties
        #[arg(long = "prop", alias = "filter", value_delimiter = ',')]
        props: Vec<String>,
        #[arg(long, value_enum, default_value_t = Kind::Poset)]
        structure: Kind,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Dedekind-MacNeille completion with its diagnosis
    Complete {
        file: PathBuf,
        /// Write the completion document to FILE
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Quantify over all subsets or closed sets only
        #[arg(long, value_enum, default_value_t = Mode::Reduced)]
        mode: Mode,
    },
    /// Convert between structure kinds
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Evaluate every formula of FORMULAS on a structure; `catalog` names the
    /// bundled axiom catalog
    Eval {
        file: PathBuf,
        formulas: String,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Rerun a bundled example end to end
    Reproduce {
        #[arg(value_enum)]
        target: Target,
        /// Largest size for the exhaustive targets
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct PolicyArgs {
    /// How meets of incomparable elements are assigned
    #[arg(long, value_enum, default_value_t = Policy::Arbitrary)]
    pub policy: Policy,
    /// Take the least choice or every choice
    #[arg(long, value_enum, default_value_t = ChooserArg::Least)]
    pub chooser: ChooserArg,
}

impl PolicyArgs {
    fn get(self) -> AssignmentPolicy {
        let mode = match self.policy {
            Policy::Arbitrary => AssignmentMode::Arbitrary,
            Policy::Relaxed => AssignmentMode::Relaxed,
            Policy::Canonical => AssignmentMode::Canonical,
        };
        AssignmentPolicy::new(mode, self.chooser.get())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    Arbitrary,
    Relaxed,
    Canonical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChooserArg {
    Least,
    All,
}

impl ChooserArg {
    fn get(self) -> Chooser {
        match self {
            ChooserArg::Least => Chooser::Least,
            ChooserArg::All => Chooser::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Poset,
    Directoid,
    EffectAlgebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvertTarget {
    Directoid,
    Poset,
    EffectAlgebra,
    Orthoalgebra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Raw,
    Reduced,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error(transparent)]
    Dm(#[from] DmError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

type Outcome = Result<u8, CliError>;

/// Runs the command line, writing reports to `out` and diagnostics to
/// `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_HOLDS
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut (dyn Write + Send)) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Check {
            file,
            props,
            policy,
        } => check(cli, out, file, props, policy.get()),
        Command::Witness { file } => witness(cli, out, file),
        Command::Enumerate {
            n,
            props,
            structure,
            policy,
        } => enumerate(cli, out, *n, props, *structure, policy.get()),
        Command::Complete {
            file,
            out: path,
            mode,
        } => complete(cli, out, file, path.as_deref(), *mode),
        Command::Convert { file, to, policy } => convert(cli, out, file, *to, policy.get()),
        Command::Eval {
            file,
            formulas,
            policy,
        } => eval(cli, out, file, formulas, policy.get()),
        Command::Reproduce { target, n } => {
            let report = reproduce::run(*target, *n, &caps(cli));
            emit(out, cli.json, &report.to_json(), &report.to_text())?;
            Ok(if report.confirmed() {
                EXIT_HOLDS
            } else {
                EXIT_FAILS
            })
        }
    })
}

fn caps(cli: &Cli) -> Caps {
    match cli.cap {
        Some(n) => Caps::uniform(n),
        None => Caps::default(),
    }
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn emit(
    out: &mut (dyn Write + Send),
    json: bool,
    value: &Value,
    text: &str,
) -> Result<(), CliError> {
    let r = if json {
        writeln!(out, "{value}")
    } else {
        out.write_all(text.as_bytes())
    };
    r.map_err(io_error(Path::new("<stdout>")))
}

fn write_dot(cli: &Cli, p: &BoundedInvolutivePoset, name: &str) -> Result<(), CliError> {
    if let Some(path) = &cli.dot {
        std::fs::write(path, poset_dot(p, name)).map_err(io_error(path))?;
    }
    Ok(())
}

fn stem(file: &Path) -> String {
    file.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "structure".into())
}

/// The poset underlying any structure.
fn underlying_poset(s: &Structure) -> Result<BoundedInvolutivePoset, CliError> {
    Ok(match s {
        Structure::Poset(p) => p.clone(),
        Structure::Directoid(d) => d.induced_poset().map_err(FormatError::from)?,
        Structure::EffectAlgebra(a) => {
            let p = a.algebra.induced_order().map_err(FormatError::from)?;
            match &a.labels {
                Some(l) => p.with_labels(l.clone()).map_err(FormatError::from)?,
                None => p,
            }
        }
    })
}

fn labelled(d: InvolutiveDirectoid, p: &BoundedInvolutivePoset) -> InvolutiveDirectoid {
    match p.labels() {
        Some(l) => d.with_labels(l.to_vec()),
        None => d,
    }
}

// ---------------------------------------------------------------- properties

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Prop {
    Poset(PosetProperty),
    Lattice,
    Class(DirectoidClass),
    OrthoDerivedLaws,
    Orthoalgebra,
}

impl Prop {
    fn name(self) -> &'static str {
        match self {
            Prop::Poset(p) => p.name(),
            Prop::Lattice => "lattice",
            Prop::Class(c) => c.name(),
            Prop::OrthoDerivedLaws => "ortho_derived_laws",
            Prop::Orthoalgebra => "orthoalgebra",
        }
    }

    fn all() -> Vec<Prop> {
        let mut v: Vec<Prop> = PosetProperty::ALL.iter().map(|&p| Prop::Poset(p)).collect();
        v.push(Prop::Lattice);
        v.extend(DirectoidClass::ALL.iter().map(|&c| Prop::Class(c)));
        v.push(Prop::OrthoDerivedLaws);
        v.push(Prop::Orthoalgebra);
        v
    }

    fn parse(s: &str) -> Result<Prop, CliError> {
        let key = s.replace('-', "_");
        Prop::all()
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| {
                let names: Vec<&str> = Prop::all().iter().map(|p| p.name()).collect();
                CliError::Usage(format!(
                    "unknown property `{s}`; known: {}",
                    names.join(", ")
                ))
            })
    }
}

/// One decided property.
struct Decided {
    prop: &'static str,
    verdict: Verdict,
    /// The assigned directoid that failed, when the property was checked
    /// over assignments of a poset.
    directoid: Option<InvolutiveDirectoid>,
    note: Option<String>,
}

fn lattice_verdict(p: &BoundedInvolutivePoset) -> Verdict {
    for x in 0..p.size() {
        for y in 0..p.size() {
            if p.meet(x, y).is_none() || p.join(x, y).is_none() {
                return Verdict::Fails(Witness::new([("x", x), ("y", y)]));
            }
        }
    }
    Verdict::Holds
}

fn decide(
    s: &Structure,
    prop: Prop,
    policy: AssignmentPolicy,
    caps: &Caps,
) -> Result<Decided, CliError> {
    let plain = |verdict| Decided {
        prop: prop.name(),
        verdict,
        directoid: None,
        note: None,
    };
    let mismatch = || {
        CliError::Usage(format!(
            "property `{}` does not apply to a {}",
            prop.name(),
            s.kind()
        ))
    };
    match (prop, s) {
        (Prop::Poset(q), _) => Ok(plain(underlying_poset(s)?.check(q))),
        (Prop::Lattice, _) => Ok(plain(lattice_verdict(&underlying_poset(s)?))),
        (Prop::Class(c), Structure::Directoid(d)) => Ok(plain(d.check_class(c))),
        (Prop::OrthoDerivedLaws, Structure::Directoid(d)) => {
            Ok(plain(d.check_ortho_derived_laws()))
        }
        (Prop::Class(c), Structure::Poset(p)) => {
            let mut count = 0u128;
            for d in enumerate_directoids(p, policy, caps)? {
                count += 1;
                let v = d.check_class(c);
                if !v.holds() {
                    return Ok(Decided {
                        prop: prop.name(),
                        verdict: v,
                        directoid: Some(labelled(d, p)),
                        note: Some(format!("assigned directoid #{count}")),
                    });
                }
            }
            Ok(Decided {
                note: Some(format!("all {count} assigned directoids")),
                ..plain(Verdict::Holds)
            })
        }
        (Prop::Orthoalgebra, Structure::EffectAlgebra(a)) => {
            Ok(plain(if a.algebra.is_orthoalgebra() {
                Verdict::Holds
            } else {
                let p = a.algebra.induced_order().map_err(FormatError::from)?;
                p.check(PosetProperty::Orthoposet)
            }))
        }
        _ => Err(mismatch()),
    }
}

fn witness_text(w: &Witness, label: &dyn Fn(Element) -> String) -> String {
    w.bindings
        .iter()
        .map(|(n, x)| format!("{n}={}", label(*x)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn witness_json(w: &Witness, label: &dyn Fn(Element) -> String) -> Value {
    let mut idx = Map::new();
    let mut lab = Map::new();
    for (n, x) in &w.bindings {
        idx.insert(n.clone(), (*x).into());
        lab.insert(n.clone(), label(*x).into());
    }
    json!({ "witness": idx, "witness_labels": lab })
}

fn verdict_text(v: &Verdict, label: &dyn Fn(Element) -> String) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::Fails(w) if w.bindings.is_empty() => "fails".into(),
        Verdict::Fails(w) => format!("fails at {}", witness_text(w, label)),
        Verdict::Inconsistent { reason, witness } => {
            format!(
                "inconsistent ({reason}) at {}",
                witness_text(witness, label)
            )
        }
    }
}

fn verdict_json(v: &Verdict, label: &dyn Fn(Element) -> String) -> Value {
    let mut o = json!({ "holds": v.holds() });
    match v {
        Verdict::Holds => {}
        Verdict::Fails(w) => merge(&mut o, witness_json(w, label)),
        Verdict::Inconsistent { reason, witness } => {
            merge(&mut o, witness_json(witness, label));
            o["inconsistent"] = (*reason).into();
        }
    }
    o
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn check(
    cli: &Cli,
    out: &mut (dyn Write + Send),
    file: &Path,
    props: &[String],
    policy: AssignmentPolicy,
) -> Outcome {
    let s = doc::read_document(file)?;
    let props = props
        .iter()
        .map(|p| Prop::parse(p))
        .collect::<Result<Vec<_>, _>>()?;
    let caps = caps(cli);
    let results = props
        .iter()
        .map(|&p| decide(&s, p, policy, &caps))
        .collect::<Result<Vec<_>, _>>()?;
    write_dot(cli, &underlying_poset(&s)?, &stem(file))?;
    let label = |x| s.label(x);
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in &results {
        let mut line = format!(
            "{}: {} {}",
            file.display(),
            r.prop,
            verdict_text(&r.verdict, &label)
        );
        if let Some(n) = &r.note {
            let _ = write!(line, " ({n})");
        }
        let _ = writeln!(text, "{line}");
        let mut row = json!({ "property": r.prop });
        merge(&mut row, verdict_json(&r.verdict, &label));
        if let Some(n) = &r.note {
            row["note"] = n.clone().into();
        }
        if let Some(d) = &r.directoid {
            row["directoid"] = serde_json::to_value(Document::Directoid(doc::directoid_doc(d)))
                .expect("serializes");
        }
        rows.push(row);
    }
    let holds = results.iter().all(|r| r.verdict.holds());
    emit(
        out,
        cli.json,
        &json!({ "file": file.display().to_string(), "holds": holds, "results": rows }),
        &text,
    )?;
    Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
}

fn witness(cli: &Cli, out: &mut (dyn Write + Send), file: &Path) -> Outcome {
    let s = doc::read_document(file)?;
    let p = underlying_poset(&s)?;
    write_dot(cli, &p, &stem(file))?;
    let found = find_b6_witness(&p);
    let pstar = p.check(PosetProperty::Paraorthomodular);
    if found.is_some() == pstar.holds() {
        return Err(CliError::Usage(format!(
            "internal disagreement between the B6 search and the (P*) check on {}",
            file.display()
        )));
    }
    match found {
        None => {
            emit(
                out,
                cli.json,
                &json!({ "paraorthomodular": true, "witness": null }),
                &format!("{}: no B6 witness; paraorthomodular\n", file.display()),
            )?;
            Ok(EXIT_HOLDS)
        }
        Some(w) => {
            let roles: Vec<String> = pomlab_core::forbidden::Role::ALL
                .iter()
                .map(|&r| format!("{}={}", r.name(), p.label(w.get(r))))
                .collect();
            let text = format!(
                "{}: B6 witness {}; not paraorthomodular\n",
                file.display(),
                roles.join(", ")
            );
            emit(
                out,
                cli.json,
                &json!({ "paraorthomodular": false, "witness": doc::b6_witness_json(&w) }),
                &text,
            )?;
            Ok(EXIT_FAILS)
        }
    }
}

// ---------------------------------------------------------------- enumerate

fn enumerate(
    cli: &Cli,
    out: &mut (dyn Write + Send),
    n: usize,
    props: &[String],
    kind: Kind,
    policy: AssignmentPolicy,
) -> Outcome {
    let caps = caps(cli);
    let props = props
        .iter()
        .map(|p| Prop::parse(p))
        .collect::<Result<Vec<_>, _>>()?;
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let keep = |s: &Structure| -> bool {
        props.iter().all(|&p| {
            decide(s, p, policy, &caps)
                .map(|r| r.verdict.holds())
                .unwrap_or(false)
        })
    };
    let structures: Vec<Structure> = match kind {
        Kind::Poset => enumerate_posets(n, &[], &caps)?
            .into_par_iter()
            .map(Structure::Poset)
            .filter(|s| keep(s))
            .collect(),
        Kind::Directoid => {
            let posets = enumerate_posets(n, &[], &caps)?;
            let per: Vec<Result<Vec<Structure>, CapExceeded>> = posets
                .par_iter()
                .map(|p| {
                    Ok(directoid_classes(p, policy, &caps)?
                        .into_iter()
                        .map(Structure::Directoid)
                        .filter(|s| keep(s))
                        .collect())
                })
                .collect();
            let mut all = Vec::new();
            for r in per {
                all.extend(r?);
            }
            all
        }
        Kind::EffectAlgebra => enumerate_effect_algebras(n, &caps)?
            .into_par_iter()
            .map(|a| {
                Structure::EffectAlgebra(LabeledEffectAlgebra {
                    algebra: a,
                    labels: None,
                })
            })
            .filter(|s| keep(s))
            .collect(),
    };
    if cli.json {
        for s in &structures {
            writeln!(out, "{}", doc::to_json(&s.to_document()))
                .map_err(io_error(Path::new("<stdout>")))?;
        }
        return Ok(EXIT_HOLDS);
    }
    let name = match kind {
        Kind::Poset => "posets",
        Kind::Directoid => "directoids",
        Kind::EffectAlgebra => "effect_algebras",
    };
    let summary: Vec<Prop> = match kind {
        Kind::Poset => PosetProperty::ALL
            .iter()
            .map(|&p| Prop::Poset(p))
            .chain([Prop::Lattice])
            .collect(),
        Kind::Directoid => DirectoidClass::ALL
            .iter()
            .map(|&c| Prop::Class(c))
            .collect(),
        Kind::EffectAlgebra => vec![Prop::Orthoalgebra, Prop::Poset(PosetProperty::Orthomodular)],
    };
    let mut text = format!("n\tclass\tcount\n{n}\t{name}\t{}\n", structures.len());
    for p in summary {
        let count = structures
            .par_iter()
            .filter(|s| {
                decide(s, p, policy, &caps)
                    .map(|r| r.verdict.holds())
                    .unwrap_or(false)
            })
            .count();
        let _ = writeln!(text, "{n}\t{}\t{count}", p.name());
    }
    out.write_all(text.as_bytes())
        .map_err(io_error(Path::new("<stdout>")))?;
    Ok(EXIT_HOLDS)
}

// ---------------------------------------------------------------- complete

fn pair_json(p: &BoundedInvolutivePoset, pair: &Option<SetPair>) -> Value {
    let names = |s: Subset| -> Vec<String> { s.iter().map(|x| p.label(x)).collect() };
    match pair {
        None => json!({ "holds": true }),
        Some(sp) => json!({ "holds": false, "first": names(sp.first), "second": names(sp.second) }),
    }
}

fn pair_text(p: &BoundedInvolutivePoset, pair: &Option<SetPair>) -> String {
    let names = |s: Subset| -> String {
        let v: Vec<String> = s.iter().map(|x| p.label(x)).collect();
        format!("{{{}}}", v.join(","))
    };
    match pair {
        None => "holds".into(),
        Some(sp) => format!("fails at {}, {}", names(sp.first), names(sp.second)),
    }
}

fn complete(
    cli: &Cli,
    out: &mut (dyn Write + Send),
    file: &Path,
    target: Option<&Path>,
    mode: Mode,
) -> Outcome {
    let s = doc::read_document(file)?;
    let p = underlying_poset(&s)?;
    let (q, budget) = match mode {
        Mode::Raw => (Quantification::Raw, dm::RAW_PAIR_BUDGET),
        Mode::Reduced => (Quantification::Reduced, dm::REDUCED_PAIR_BUDGET),
    };
    let c = dm_complete(&p);
    let pom = c.is_paraorthomodular();
    let wdc = dm::is_weakly_d_continuous(&p, q, budget)?;
    let flp = dm::satisfies_flp(&p, q, budget)?;
    let completion = Document::Poset(doc::completion_doc(&c));
    if let Some(path) = target {
        std::fs::write(path, doc::to_json_pretty(&completion) + "\n").map_err(io_error(path))?;
    }
    write_dot(cli, c.lattice(), &format!("{}-completion", stem(file)))?;
    let agree = pom == wdc.is_none() && pom == flp.is_none();
    let embedding: Vec<String> = (0..p.size())
        .map(|x| format!("{}->{}", p.label(x), c.lattice().label(c.embedding()[x])))
        .collect();
    let text = format!(
        "{}: completion has {} elements ({} new)\nembedding: {}\ncompletion paraorthomodular: {}\nweakly D-continuous: {}\nFLP: {}\n{}",
        file.display(),
        c.size(),
        c.size() - p.size(),
        embedding.join(", "),
        if pom { "yes" } else { "no" },
        pair_text(&p, &wdc),
        pair_text(&p, &flp),
        if agree { "" } else { "the three conditions disagree\n" },
    );
    let value = json!({
        "completion": serde_json::to_value(&completion).expect("serializes"),
        "paraorthomodular": pom,
        "weakly_d_continuous": pair_json(&p, &wdc),
        "flp": pair_json(&p, &flp),
        "agree": agree,
    });
    emit(out, cli.json, &value, &text)?;
    Ok(if pom && agree { EXIT_HOLDS } else { EXIT_FAILS })
}

// ---------------------------------------------------------------- convert

fn convert(
    cli: &Cli,
    out: &mut (dyn Write + Send),
    file: &Path,
    to: ConvertTarget,
    policy: AssignmentPolicy,
) -> Outcome {
    let s = doc::read_document(file)?;
    let fail = |out: &mut (dyn Write + Send), msg: String| -> Outcome {
        emit(
            out,
            cli.json,
            &json!({ "converted": false, "reason": msg }),
            &format!("{msg}\n"),
        )?;
        Ok(EXIT_FAILS)
    };
    let results: Vec<Structure> = match (to, &s) {
        (ConvertTarget::Poset, _) => vec![Structure::Poset(underlying_poset(&s)?)],
        (ConvertTarget::Directoid, Structure::Directoid(_)) => vec![s.clone()],
        (ConvertTarget::Directoid, Structure::Poset(p)) => {
            enumerate_directoids(p, policy, &caps(cli))?
                .map(|d| Structure::Directoid(labelled(d, p)))
                .collect()
        }
        (ConvertTarget::Directoid, Structure::EffectAlgebra(a)) => {
            match directoids_from_orthoalgebra(&a.algebra, policy.chooser) {
                Ok(it) => it
                    .map(|d| {
                        Structure::Directoid(match &a.labels {
                            Some(l) => d.with_labels(l.clone()),
                            None => d,
                        })
                    })
                    .collect(),
                Err(e) => return fail(out, format!("{}: {e}", file.display())),
            }
        }
        (
            ConvertTarget::EffectAlgebra | ConvertTarget::Orthoalgebra,
            Structure::EffectAlgebra(a),
        ) => {
            if to == ConvertTarget::Orthoalgebra && !a.algebra.is_orthoalgebra() {
                return fail(
                    out,
                    format!("{}: {}", file.display(), EffectError::NotOrthoalgebra),
                );
            }
            vec![s.clone()]
        }
        (ConvertTarget::EffectAlgebra | ConvertTarget::Orthoalgebra, Structure::Directoid(d)) => {
            match orthoalgebra_from_ortho_directoid(d) {
                Ok(a) => vec![Structure::EffectAlgebra(LabeledEffectAlgebra {
                    algebra: a,
                    labels: d.labels().map(<[String]>::to_vec),
                })],
                Err(EffectError::NotOrthoDirectoid(v)) => {
                    let label = |x| d.label(x);
                    return fail(
                        out,
                        format!(
                            "{}: not an ortho-directoid, {}",
                            file.display(),
                            verdict_text(&v, &label)
                        ),
                    );
                }
                Err(e) => return fail(out, format!("{}: {e}", file.display())),
            }
        }
        (ConvertTarget::EffectAlgebra | ConvertTarget::Orthoalgebra, Structure::Poset(p)) => {
            effect_algebras_over(p)
                .into_iter()
                .filter(|a| to == ConvertTarget::EffectAlgebra || a.is_orthoalgebra())
                .map(|a| {
                    Structure::EffectAlgebra(LabeledEffectAlgebra {
                        algebra: a,
                        labels: p.labels().map(<[String]>::to_vec),
                    })
                })
                .collect()
        }
    };
    if results.is_empty() {
        return fail(
            out,
            format!("{}: no structure of the requested kind", file.display()),
        );
    }
    write_dot(cli, &underlying_poset(&results[0])?, &stem(file))?;
    let mut text = String::new();
    if results.len() == 1 {
        text.push_str(&doc::to_json_pretty(&results[0].to_document()));
        text.push('\n');
    } else {
        for r in &results {
            let _ = writeln!(text, "{}", doc::to_json(&r.to_document()));
        }
    }
    out.write_all(text.as_bytes())
        .map_err(io_error(Path::new("<stdout>")))?;
    Ok(EXIT_HOLDS)
}

// ---------------------------------------------------------------- eval

fn eval(
    cli: &Cli,
    out: &mut (dyn Write + Send),
    file: &Path,
    formulas: &str,
    policy: AssignmentPolicy,
) -> Outcome {
    let s = doc::read_document(file)?;
    let list: Vec<Formula> = if formulas == "catalog" {
        term::catalog()
    } else {
        let path = Path::new(formulas);
        let text = std::fs::read_to_string(path).map_err(io_error(path))?;
        term::parse_file(&text)
            .map_err(|(line, e)| CliError::Usage(format!("{formulas}:{line}: {e}")))?
    };
    write_dot(cli, &underlying_poset(&s)?, &stem(file))?;
    let label = |x| s.label(x);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut holds = true;
    for f in &list {
        let (verdict, note) = eval_one(&s, f, policy, &caps(cli))?;
        holds &= verdict.holds();
        let name = f.label.clone().unwrap_or_else(|| f.to_string());
        let mut line = format!("{name}: {}", verdict_text(&verdict, &label));
        if let Some(n) = &note {
            let _ = write!(line, " ({n})");
        }
        let _ = writeln!(text, "{line}");
        let mut row = json!({ "formula": f.to_string(), "label": f.label });
        merge(&mut row, verdict_json(&verdict, &label));
        rows.push(row);
    }
    emit(
        out,
        cli.json,
        &json!({ "holds": holds, "results": rows }),
        &text,
    )?;
    Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
}

fn eval_one(
    s: &Structure,
    f: &Formula,
    policy: AssignmentPolicy,
    caps: &Caps,
) -> Result<(Verdict, Option<String>), CliError> {
    let usage = |e: TermError| CliError::Usage(e.to_string());
    match s {
        Structure::Directoid(d) => Ok((
            evaluate(term::Structure::Directoid(d), f).map_err(usage)?,
            None,
        )),
        Structure::Poset(p) if f.uses_lattice_ops() => {
            let mut count = 0u128;
            for d in enumerate_directoids(p, policy, caps)? {
                count += 1;
                let v = evaluate(term::Structure::Directoid(&d), f).map_err(usage)?;
                if !v.holds() {
                    return Ok((v, Some(format!("assigned directoid #{count}"))));
                }
            }
            Ok((
                Verdict::Holds,
                Some(format!("all {count} assigned directoids")),
            ))
        }
        _ => {
            let p = underlying_poset(s)?;
            Ok((
                evaluate(term::Structure::Poset(&p), f).map_err(usage)?,
                None,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_parse() {
        for p in Prop::all() {
            assert_eq!(Prop::parse(p.name()).unwrap(), p);
        }
        assert_eq!(
            Prop::parse("pseudo-orthomodular").unwrap(),
            Prop::Poset(PosetProperty::PseudoOrthomodular)
        );
        assert!(Prop::parse("boolean").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
