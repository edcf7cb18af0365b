//! Command dispatch. [`run`] takes explicit writers and returns the exit
//! status: 0 on success, 1 when a law fails or a counterexample is found,
//! 2 for usage, parse and file errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use homsg_core::enumerate::{enumerate, Census, LawFilter};
use homsg_core::finite::{fixture, FiniteHomMagma, Law, LawFlags};
use homsg_core::terms::GeneratorId;
use homsg_core::universal::{GeneratorAssignment, UniversalError};

use crate::expr::{parse, Expr};
use crate::structure_file;

/// Witnesses listed per failed law before eliding the rest.
pub const MAX_LISTED_WITNESSES: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "homsg", version, about = "Free involutive Hom-semigroups and Hom-associative algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct ExprArgs {
    /// Expression, e.g. "x * [y]", "A(x * y)", "3/2 . x + y".
    #[arg(allow_hyphen_values = true)]
    expr: String,
    /// Print the parsed expression fully parenthesized first.
    #[arg(long)]
    echo: bool,
    /// Also print a generator/`*`/`A(...)` expression producing the result word.
    #[arg(long)]
    generate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    /// Hom-associative.
    Hom,
    /// α² = id.
    Inv,
    /// Associative (a semigroup).
    Sg,
    /// α multiplicative.
    Mult,
}

impl FilterArg {
    fn law(self) -> Law {
        match self {
            FilterArg::Hom => Law::HomAssociative,
            FilterArg::Inv => Law::InvolutiveAlpha,
            FilterArg::Sg => Law::Associative,
            FilterArg::Mult => Law::Multiplicative,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression; prints a word, or an algebra element if the
    /// expression uses sums or scalars.
    Prod(ExprArgs),
    /// Apply alpha to the value of an expression.
    Alpha(ExprArgs),
    /// Evaluate in the rational span and print the canonical sum.
    Expand(ExprArgs),
    /// Check the laws of a structure file; exit 0 iff hom-associative.
    Check {
        /// Structure JSON file.
        file: PathBuf,
    },
    /// Evaluate a word expression in a finite target via the unique morphism
    /// extending the generator map.
    Eval {
        /// Target structure JSON file (an involutive Hom-semigroup).
        #[arg(long)]
        target: PathBuf,
        /// Generator image, `gen=label`; repeatable.
        #[arg(long = "map", value_name = "GEN=LABEL")]
        maps: Vec<String>,
        /// Word expression.
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Census of all (table, alpha) pairs of a given order.
    Enum {
        /// Carrier size, 1 to 4.
        #[arg(long)]
        order: usize,
        /// Required law; repeat to combine. Matches are streamed as JSON lines.
        #[arg(long = "filter", value_enum)]
        filters: Vec<FilterArg>,
        /// Count and stream isomorphism classes as well.
        #[arg(long)]
        up_to_iso: bool,
        /// Stream at most this many matching structures.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Print S⁰ with the constant zero map as a structure file.
    AdjoinZero {
        /// Structure JSON file with an associative product.
        file: PathBuf,
    },
    /// Print a built-in example structure (hom_not_sg or involutive).
    Fixture {
        /// Fixture name.
        name: String,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn violation(message: impl ToString) -> Failure {
    Failure {
        code: 1,
        message: message.to_string(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut text = String::new();
    let code = match command {
        Command::Prod(args) => {
            evaluate(&args, false, false, &mut text)?;
            0
        }
        Command::Alpha(args) => {
            evaluate(&args, true, false, &mut text)?;
            0
        }
        Command::Expand(args) => {
            evaluate(&args, false, true, &mut text)?;
            0
        }
        Command::Check { file } => {
            let m = structure_file::read(&file).map_err(usage)?;
            text.push_str(&format_report(&m));
            if m.check_hom_associative().is_ok() {
                0
            } else {
                1
            }
        }
        Command::Eval { target, maps, expr } => {
            text.push_str(&eval_in_target(&target, &maps, &expr)?);
            text.push('\n');
            0
        }
        Command::Enum {
            order,
            filters,
            up_to_iso,
            limit,
        } => {
            let filter = filters
                .iter()
                .fold(LawFilter::any(), |f, a| f.require(a.law()));
            let stream = !filter.is_empty() || limit.is_some();
            let cap = limit.unwrap_or(usize::MAX);
            let mut lines = Vec::new();
            let census = enumerate(order, &filter, up_to_iso, |_, m| {
                if stream && lines.len() < cap {
                    lines.push(structure_file::to_json_line(m));
                }
            })
            .map_err(usage)?;
            text.push_str(&format_census(&census, &filter));
            for l in lines {
                text.push_str(&l);
                text.push('\n');
            }
            0
        }
        Command::AdjoinZero { file } => {
            let m = structure_file::read(&file).map_err(usage)?;
            let s0 = m.adjoin_zero().map_err(violation)?;
            text.push_str(&structure_file::to_json(&s0));
            0
        }
        Command::Fixture { name } => {
            text.push_str(&structure_file::to_json(&fixture(&name).map_err(usage)?));
            0
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("writing output: {e}")))?;
    Ok(code)
}

fn parse_expr(s: &str) -> Result<Expr, Failure> {
    parse(s).map_err(|e| usage(format!("parse error at {e}")))
}

fn evaluate(args: &ExprArgs, apply_alpha: bool, force_algebra: bool, text: &mut String) -> Result<(), Failure> {
    let e = parse_expr(&args.expr)?;
    if args.echo {
        text.push_str(&e.echo());
        text.push('\n');
    }
    if e.is_word_expression() && !force_algebra {
        let mut w = e.eval_word().map_err(usage)?;
        if apply_alpha {
            w = w.alpha();
        }
        text.push_str(&format!("{w}\n"));
        if args.generate {
            text.push_str(&format!("{}\n", w.construction()));
        }
    } else {
        let mut a = e.eval_algebra();
        if apply_alpha {
            a = a.alpha();
        }
        text.push_str(&format!("{a}\n"));
        if args.generate {
            match a.as_basis_word() {
                Some(w) => text.push_str(&format!("{}\n", w.construction())),
                None => return Err(usage("--generate needs a value that is a single word")),
            }
        }
    }
    Ok(())
}

fn eval_in_target(target: &std::path::Path, maps: &[String], expr: &str) -> Result<String, Failure> {
    let t = structure_file::read(target).map_err(usage)?;
    let mut map = BTreeMap::new();
    for m in maps {
        let (g, label) = m
            .split_once('=')
            .ok_or_else(|| usage(format!("--map expects GEN=LABEL, got {m:?}")))?;
        let gen = GeneratorId::new(g.trim()).map_err(usage)?;
        let idx = t
            .index_of(label.trim())
            .ok_or_else(|| usage(format!("--map {m}: target has no element {label:?}")))?;
        map.insert(gen, idx);
    }
    let e = parse_expr(expr)?;
    let w = e.eval_word().map_err(usage)?;
    let assignment = GeneratorAssignment::new(t.clone(), map).map_err(|e| match e {
        UniversalError::TargetNotInvolutive { law, witness } => violation(format!(
            "target is not an involutive Hom-semigroup: {law} fails at {}",
            t.format_witness(&witness)
        )),
        other => usage(other),
    })?;
    let v = assignment.extend(&w).map_err(usage)?;
    Ok(t.label(v).to_string())
}

/// The aligned law report used by `check`: one line per law, failed laws
/// followed by their witnesses in index order.
pub fn format_report(m: &FiniteHomMagma) -> String {
    let mut s = String::new();
    for law in Law::ALL {
        let violations = m.violations(law);
        if violations.is_empty() {
            s.push_str(&format!("{:<18}true\n", law.name()));
            continue;
        }
        let listed: Vec<String> = violations
            .iter()
            .take(MAX_LISTED_WITNESSES)
            .map(|c| m.format_witness(c))
            .collect();
        s.push_str(&format!("{:<18}false  {}", law.name(), listed.join(" ")));
        if violations.len() > MAX_LISTED_WITNESSES {
            s.push_str(&format!(" (+{} more)", violations.len() - MAX_LISTED_WITNESSES));
        }
        s.push('\n');
    }
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The census table printed by `enum`, most laws first.
pub fn format_census(c: &Census, filter: &LawFilter) -> String {
    let mut s = format!("order {}: {} candidates\n", c.order, c.total_candidates);
    s.push_str("hom  sg   mult inv  count");
    if c.iso_counts.is_some() {
        s.push_str("    classes");
    }
    s.push('\n');
    let mut keys: Vec<&LawFlags> = c.counts.keys().collect();
    keys.sort_by(|a, b| b.cmp(a));
    for k in keys {
        s.push_str(&format!(
            "{:<5}{:<5}{:<5}{:<5}{:<8}",
            yes_no(k.hom_associative),
            yes_no(k.associative),
            yes_no(k.multiplicative),
            yes_no(k.involutive_alpha),
            c.counts[k]
        ));
        if let Some(iso) = &c.iso_counts {
            s.push_str(&format!(" {}", iso.get(k).copied().unwrap_or(0)));
        }
        let trimmed = s.trim_end().len();
        s.truncate(trimmed);
        s.push('\n');
    }
    if !filter.is_empty() {
        let names: Vec<&str> = filter.laws().map(Law::name).collect();
        s.push_str(&format!("matched ({}): {}", names.join(" & "), c.matched));
        if let Some(m) = c.matched_up_to_iso {
            s.push_str(&format!(", {m} up to isomorphism"));
        }
        s.push('\n');
    }
    s
}
