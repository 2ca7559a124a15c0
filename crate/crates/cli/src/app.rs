//! Argument parsing and command dispatch for `towercheck`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use tower_core::catalog::{self, EntryOutcome};
use tower_core::surfaces::{
    enumerate_floor_profiles, enumerate_subsurface_profiles, euler_from_presentation_data, is_floor_admissible,
    standard_presentation,
};
use tower_core::towers::{verify_floor, verify_floor_seeded, verify_tower, verify_tower_seeded, Status};
use tower_core::whitehead::{is_basis, is_primitive, minimize};
use tower_core::word::is_genus_one_commutator;
use tower_core::{Generator, GroupModel, SurfaceDatum, VerificationReport, Word};

use crate::build;
use crate::document::InputDocument;
use crate::syntax::{parse_any, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "towercheck", version, about = "Verify hyperbolic floor and tower structures")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Input document (text format, or JSON)
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for concurrent verification
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for the randomized retraction sampling
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe surfaces given as `surface(...)`, `O<g>[:b]`, `N<q>[:b]` or a declared name
    Classify { surfaces: Vec<String> },
    #[command(subcommand)]
    Word(WordCommand),
    #[command(subcommand)]
    Presentation(PresentationCommand),
    /// Floor profiles of a closed surface, or proper subsurface profiles of a bounded one
    Profiles {
        surface: String,
        #[arg(long, default_value_t = 4)]
        pieces: usize,
    },
    /// Verify floor candidates from the input document
    VerifyFloor {
        #[arg(long)]
        name: Vec<String>,
    },
    /// Verify tower candidates from the input document
    VerifyTower {
        #[arg(long)]
        name: Vec<String>,
    },
    #[command(subcommand)]
    Whitehead(WhiteheadCommand),
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Subcommand)]
pub enum WordCommand {
    Reduce { word: String },
    IsTrivial {
        #[arg(long)]
        group: Option<String>,
        word: String,
    },
    Equal {
        #[arg(long)]
        group: Option<String>,
        left: String,
        right: String,
    },
    CommutatorTest { word: String },
}

#[derive(Debug, Subcommand)]
pub enum PresentationCommand {
    Standard { surface: String },
    /// Euler characteristic from (orientability, handles or crosscaps, boundary)
    Chi {
        #[arg(value_parser = ["orientable", "nonorientable"])]
        kind: String,
        count: u32,
        boundary: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum WhiteheadCommand {
    Minimize {
        words: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
    },
    IsPrimitive {
        word: String,
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
    },
    IsBasis {
        words: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Run {
        names: Vec<String>,
        #[arg(long)]
        all: bool,
    },
}

/// A failure that ends the command: bad input (exit 2) or a message
/// explaining a failed verification (exit 1).
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::input(format!("parse error at {e}"))
    }
}

impl From<build::BuildError> for Failure {
    fn from(e: build::BuildError) -> Self {
        Failure::input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e)
    }
}

struct Ctx<'a> {
    global: &'a GlobalArgs,
    doc: Option<InputDocument>,
    out: &'a mut (dyn Write + Send),
}

impl Ctx<'_> {
    fn records(&self) -> bool {
        self.global.format == Format::Records
    }

    fn line(&mut self, text: impl std::fmt::Display) -> Result<(), Failure> {
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn record(&mut self, value: serde_json::Value) -> Result<(), Failure> {
        self.line(value)
    }

    fn doc(&self) -> Result<&InputDocument, Failure> {
        self.doc.as_ref().ok_or_else(|| Failure::input("this command needs --in <file>"))
    }

    fn report(&mut self, r: &VerificationReport) -> Result<(), Failure> {
        if self.records() {
            for c in &r.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                };
                self.record(json!({"subject": r.subject, "clause": c.clause, "status": status, "detail": c.detail}))?;
            }
            self.record(json!({"subject": r.subject, "verdict": r.verdict.to_string(), "accepted": r.accepted()}))
        } else {
            write!(self.out, "{r}")?;
            Ok(())
        }
    }
}

/// Runs one parsed command line, writing the report to `out` and
/// diagnostics to `err`. Returns the exit status.
pub fn run(cli: &Cli, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32 {
    let result = (|| {
        let doc = match &cli.global.input {
            Some(path) => Some(parse_any(&std::fs::read_to_string(path)?)?),
            None => None,
        };
        let mut ctx = Ctx { global: &cli.global, doc, out };
        match cli.global.jobs {
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().map_err(Failure::input)?;
                pool.install(|| dispatch(&mut ctx, &cli.command))
            }
            None => dispatch(&mut ctx, &cli.command),
        }
    })();
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>, command: &Command) -> Result<i32, Failure> {
    match command {
        Command::Classify { surfaces } => classify(ctx, surfaces),
        Command::Word(w) => word(ctx, w),
        Command::Presentation(p) => presentation(ctx, p),
        Command::Profiles { surface, pieces } => profiles(ctx, surface, *pieces),
        Command::VerifyFloor { name } => verify_floors(ctx, name),
        Command::VerifyTower { name } => verify_towers(ctx, name),
        Command::Whitehead(w) => whitehead(ctx, w),
        Command::Catalog(c) => catalog_command(ctx, c),
    }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    Word::parse(text).map_err(|e| Failure::input(format!("bad word {text:?}: {e}")))
}

/// `surface(...)`, `O<g>[:b]`, `N<q>[:b]`, or a surface declared in the document.
pub fn parse_surface(doc: Option<&InputDocument>, text: &str) -> Result<SurfaceDatum, Failure> {
    if let Some(s) = doc.and_then(|d| d.surface(text)) {
        return Ok(s.datum);
    }
    if text.trim_start().starts_with("surface") {
        return text.parse().map_err(Failure::input);
    }
    let (head, boundary) = match text.split_once(':') {
        Some((h, b)) => (h, b.parse::<u32>().map_err(|_| Failure::input(format!("bad boundary count in {text:?}")))?),
        None => (text, 0),
    };
    let count = |s: &str| s.parse::<u32>().map_err(|_| Failure::input(format!("unknown surface {text:?}")));
    match head.split_at(head.len().min(1)) {
        ("O", n) => Ok(SurfaceDatum::orientable(count(n)?, boundary)),
        ("N", n) => SurfaceDatum::nonorientable(count(n)?, boundary).map_err(Failure::input),
        _ => Err(Failure::input(format!("unknown surface {text:?}"))),
    }
}

fn classify(ctx: &mut Ctx<'_>, surfaces: &[String]) -> Result<i32, Failure> {
    let mut data = Vec::new();
    for s in surfaces {
        data.push((s.clone(), parse_surface(ctx.doc.as_ref(), s)?));
    }
    if surfaces.is_empty() {
        data.extend(ctx.doc()?.surfaces.iter().map(|s| (s.name.clone(), s.datum)));
    }
    for (label, s) in data {
        let admissible = is_floor_admissible(s).ok();
        if ctx.records() {
            ctx.record(json!({
                "surface": label,
                "name": s.common_name(),
                "orientable": s.is_orientable(),
                "euler_char": s.euler_char(),
                "boundary": s.boundary_count(),
                "genus": s.genus(),
                "crosscaps": s.crosscaps(),
                "free_rank": s.free_rank(),
                "floor_admissible": admissible,
            }))?;
        } else {
            let kind = match (s.genus(), s.crosscaps()) {
                (Some(g), _) => format!("genus {g}"),
                (_, Some(q)) => format!("{q} crosscaps"),
                _ => String::new(),
            };
            let mut line = format!("{label}: {} ({kind}, chi = {}, {} boundary)", s.common_name(), s.euler_char(), s.boundary_count());
            if let Some(r) = s.free_rank() {
                line.push_str(&format!(", free of rank {r}"));
            }
            if let Some(a) = admissible {
                line.push_str(if a { ", floor-admissible" } else { ", not floor-admissible" });
            }
            ctx.line(line)?;
        }
    }
    Ok(EXIT_OK)
}

fn model(ctx: &Ctx<'_>, group: Option<&str>, words: &[&Word]) -> Result<GroupModel, Failure> {
    match group {
        Some(name) => {
            let p = build::group(ctx.doc.as_ref(), name)?;
            GroupModel::from_presentation(&p).map_err(Failure::input)
        }
        None => {
            let mut names: Vec<String> = words.iter().flat_map(|w| w.generators()).map(|g| g.name().to_string()).collect();
            names.sort();
            names.dedup();
            let alpha = tower_core::Alphabet::from_names(&names).map_err(Failure::input)?;
            Ok(GroupModel::free(alpha))
        }
    }
}

fn answer(ctx: &mut Ctx<'_>, command: &str, input: &str, result: serde_json::Value, text: String) -> Result<i32, Failure> {
    if ctx.records() {
        ctx.record(json!({"command": command, "input": input, "result": result}))?;
    } else {
        ctx.line(text)?;
    }
    Ok(EXIT_OK)
}

fn word(ctx: &mut Ctx<'_>, command: &WordCommand) -> Result<i32, Failure> {
    match command {
        WordCommand::Reduce { word } => {
            let w = parse_word(word)?;
            answer(ctx, "word reduce", word, json!(w.to_string()), w.to_string())
        }
        WordCommand::IsTrivial { group, word } => {
            let w = parse_word(word)?;
            let m = model(ctx, group.as_deref(), &[&w])?;
            let t = m.is_trivial(&w).map_err(Failure::input)?;
            answer(ctx, "word is-trivial", word, json!(t), t.to_string())
        }
        WordCommand::Equal { group, left, right } => {
            let (a, b) = (parse_word(left)?, parse_word(right)?);
            let m = model(ctx, group.as_deref(), &[&a, &b])?;
            let eq = m.are_equal(&a, &b).map_err(Failure::input)?;
            answer(ctx, "word equal", &format!("{left} = {right}"), json!(eq), eq.to_string())
        }
        WordCommand::CommutatorTest { word } => {
            let w = parse_word(word)?;
            match is_genus_one_commutator(&w) {
                Some(wit) => {
                    let (x, y) = wit.commutator_pair();
                    let text = format!("commutator: conjugate by ({}) of [{x}, {y}]", wit.conjugator);
                    let result = json!({"x": x.to_string(), "y": y.to_string(), "conjugator": wit.conjugator.to_string(),
                        "a": wit.a.to_string(), "b": wit.b.to_string(), "c": wit.c.to_string()});
                    answer(ctx, "word commutator-test", word, result, text)
                }
                None => answer(ctx, "word commutator-test", word, json!(null), "not a commutator".into()),
            }
        }
    }
}

fn presentation(ctx: &mut Ctx<'_>, command: &PresentationCommand) -> Result<i32, Failure> {
    match command {
        PresentationCommand::Standard { surface } => {
            let s = parse_surface(ctx.doc.as_ref(), surface)?;
            let sp = standard_presentation(s).map_err(Failure::input)?;
            let boundary: Vec<String> = sp.boundary_words.iter().map(Word::to_string).collect();
            if ctx.records() {
                ctx.record(json!({"surface": s.to_string(), "presentation": sp.presentation.to_string(), "boundary_words": boundary}))?;
            } else {
                ctx.line(format!("{}: {}", s.common_name(), sp.presentation))?;
                for (i, b) in boundary.iter().enumerate() {
                    ctx.line(format!("  boundary {}: {b}", i + 1))?;
                }
            }
            Ok(EXIT_OK)
        }
        PresentationCommand::Chi { kind, count, boundary } => {
            let chi = euler_from_presentation_data(kind == "orientable", *count, *boundary).map_err(Failure::input)?;
            answer(ctx, "presentation chi", &format!("{kind} {count} {boundary}"), json!(chi), chi.to_string())
        }
    }
}

fn profiles(ctx: &mut Ctx<'_>, surface: &str, pieces: usize) -> Result<i32, Failure> {
    let s = parse_surface(ctx.doc.as_ref(), surface)?;
    let lines: Vec<(String, bool)> = if s.is_closed() {
        enumerate_floor_profiles(s, pieces)
            .map_err(Failure::input)?
            .iter()
            .map(|p| (p.to_string(), p.rejection.is_none()))
            .collect()
    } else {
        enumerate_subsurface_profiles(s, pieces)
            .map_err(Failure::input)?
            .iter()
            .map(|p| (p.to_string(), p.has_admissible_piece()))
            .collect()
    };
    if ctx.records() {
        for (p, ok) in &lines {
            ctx.record(json!({"surface": s.to_string(), "profile": p, "admissible": ok}))?;
        }
    } else {
        ctx.line(format!("{} ({} profiles)", s.common_name(), lines.len()))?;
        for (p, _) in &lines {
            ctx.line(format!("  {p}"))?;
        }
    }
    Ok(EXIT_OK)
}

fn selected<'a, T>(all: &'a [T], names: &[String], name_of: impl Fn(&T) -> &str, kind: &str) -> Result<Vec<&'a T>, Failure> {
    if names.is_empty() {
        let mut v: Vec<&T> = all.iter().collect();
        v.sort_by(|a, b| name_of(a).cmp(name_of(b)));
        if v.is_empty() {
            return Err(Failure::input(format!("the document declares no {kind}")));
        }
        return Ok(v);
    }
    names
        .iter()
        .map(|n| all.iter().find(|x| name_of(x) == n).ok_or_else(|| Failure::input(format!("unknown {kind} `{n}`"))))
        .collect()
}

fn emit_reports(ctx: &mut Ctx<'_>, results: Vec<Result<VerificationReport, Failure>>) -> Result<i32, Failure> {
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    let mut code = EXIT_OK;
    for r in &reports {
        ctx.report(r)?;
        if !r.accepted() {
            code = EXIT_FAILED;
        }
    }
    Ok(code)
}

fn verify_floors(ctx: &mut Ctx<'_>, names: &[String]) -> Result<i32, Failure> {
    let doc = ctx.doc()?;
    let seed = ctx.global.seed;
    let results: Vec<_> = selected(&doc.floors, names, |f| &f.name, "floor")?
        .par_iter()
        .map(|f| {
            let c = build::floor(doc, f)?;
            let r = match seed {
                Some(s) => verify_floor_seeded(&c, s),
                None => verify_floor(&c),
            };
            r.map_err(Failure::input)
        })
        .collect();
    emit_reports(ctx, results)
}

fn verify_towers(ctx: &mut Ctx<'_>, names: &[String]) -> Result<i32, Failure> {
    let doc = ctx.doc()?;
    let seed = ctx.global.seed;
    let results: Vec<_> = selected(&doc.towers, names, |t| &t.name, "tower")?
        .par_iter()
        .map(|t| {
            let c = build::tower(doc, t)?;
            let r = match seed {
                Some(s) => verify_tower_seeded(&c, s),
                None => verify_tower(&c),
            };
            r.map_err(Failure::input)
        })
        .collect();
    emit_reports(ctx, results)
}

fn basis(names: &[String], words: &[Word]) -> Result<Vec<Generator>, Failure> {
    if !names.is_empty() {
        return names.iter().map(|n| Generator::new(n).map_err(Failure::input)).collect();
    }
    let mut found: Vec<String> = words.iter().flat_map(|w| w.generators()).map(|g| g.name().to_string()).collect();
    found.sort();
    found.dedup();
    Ok(found.iter().map(|n| Generator::named(n)).collect())
}

fn whitehead(ctx: &mut Ctx<'_>, command: &WhiteheadCommand) -> Result<i32, Failure> {
    match command {
        WhiteheadCommand::Minimize { words, generators } => {
            let t = words.iter().map(|w| parse_word(w)).collect::<Result<Vec<_>, _>>()?;
            let b = basis(generators, &t)?;
            let m = minimize(&t, &b);
            let tuple: Vec<String> = m.tuple.iter().map(Word::to_string).collect();
            let steps: Vec<String> = m.steps.iter().map(|s| s.to_string()).collect();
            if ctx.records() {
                ctx.record(json!({"command": "whitehead minimize", "input": words, "result": tuple,
                    "length": m.total_length(), "steps": steps}))?;
            } else {
                ctx.line(format!("({}) total length {} after {} steps", tuple.join(", "), m.total_length(), steps.len()))?;
                for s in &steps {
                    ctx.line(format!("  {s}"))?;
                }
            }
            Ok(EXIT_OK)
        }
        WhiteheadCommand::IsPrimitive { word, generators } => {
            let w = parse_word(word)?;
            let b = basis(generators, std::slice::from_ref(&w))?;
            let p = is_primitive(&w, &b);
            answer(ctx, "whitehead is-primitive", word, json!(p), p.to_string())
        }
        WhiteheadCommand::IsBasis { words, generators } => {
            let t = words.iter().map(|w| parse_word(w)).collect::<Result<Vec<_>, _>>()?;
            let b = basis(generators, &t)?;
            let ok = is_basis(&t, &b);
            answer(ctx, "whitehead is-basis", &words.join(", "), json!(ok), ok.to_string())
        }
    }
}

fn outcome(ctx: &mut Ctx<'_>, o: &EntryOutcome) -> Result<(), Failure> {
    if ctx.records() {
        ctx.report(&o.report)?;
        ctx.record(json!({"entry": o.name, "expected": o.expected.to_string(), "verdict": o.report.verdict.to_string(),
            "passed": o.passed, "elapsed_ms": o.elapsed.as_secs_f64() * 1e3}))
    } else {
        let mark = if o.passed { "ok  " } else { "FAIL" };
        ctx.line(format!("{mark} {:<36} {} [{:.1?}]", o.name, o.report.verdict, o.elapsed))?;
        if !o.passed {
            ctx.line(format!("     expected {}", o.expected))?;
            write!(ctx.out, "{}", o.report)?;
        }
        Ok(())
    }
}

fn catalog_command(ctx: &mut Ctx<'_>, command: &CatalogCommand) -> Result<i32, Failure> {
    match command {
        CatalogCommand::List => {
            for e in catalog::list_entries() {
                if ctx.records() {
                    ctx.record(json!({"entry": e.name, "expected": e.expected.to_string(), "summary": e.summary}))?;
                } else {
                    ctx.line(format!("{:<36} {:<48} {}", e.name, e.expected, e.summary))?;
                }
            }
            Ok(EXIT_OK)
        }
        CatalogCommand::Run { names, all } => {
            if names.is_empty() && !all {
                return Err(Failure::input("name catalog entries or pass --all"));
            }
            let seed = ctx.global.seed;
            let (outcomes, errors) = if *all {
                let s = match seed {
                    Some(seed) => catalog::run_all_seeded(seed),
                    None => catalog::run_all(),
                };
                (s.outcomes, s.errors.iter().map(|e| e.to_string()).collect::<Vec<_>>())
            } else {
                let mut outs = Vec::new();
                for n in names {
                    let o = match seed {
                        Some(seed) => catalog::run_entry_seeded(n, seed),
                        None => catalog::run_entry(n),
                    };
                    outs.push(o.map_err(Failure::input)?);
                }
                (outs, Vec::new())
            };
            for o in &outcomes {
                outcome(ctx, o)?;
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            if ctx.records() {
                ctx.record(json!({"summary": {"passed": passed, "failed": outcomes.len() - passed, "errors": errors}}))?;
            } else {
                for e in &errors {
                    ctx.line(format!("error: {e}"))?;
                }
                ctx.line(format!("{passed}/{} entries passed", outcomes.len()))?;
            }
            Ok(if passed == outcomes.len() && errors.is_empty() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Convenience for callers holding a plain argument list.
pub fn run_args<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            EXIT_INPUT
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            EXIT_OK
        }
    }
}
