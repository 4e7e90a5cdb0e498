//! Command-line surface: argument parsing, command execution, and the
//! output envelope rendered as text or JSON.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::morphisms::DirectiveSpec;
use crate::oracle::{scan_adaptive, Naming};
use crate::sturmian::SturmianContext;
use crate::substitutive::{
    derived_inventory, fixing_morphisms, four_letter_words, parse_period, verify_fixing,
};
use crate::{iet, Error, Result};

/// Longest text the oracle cross-check will scan before giving up.
const SCAN_BUDGET: usize = 1 << 22;

#[derive(Parser)]
#[command(
    name = "rote-words",
    version,
    about = "Complementary symmetric Rote sequences, their return words, and derivated sequences"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print a prefix of the Sturmian or Rote sequence of a directive.
    Generate(GenerateArgs),
    /// Classify a bispecial prefix and list its return words.
    Analyze(AnalyzeArgs),
    /// Print a derivated sequence, optionally cross-checked.
    Derive(DeriveArgs),
    /// Emit fixing morphisms for a periodic directive.
    Fix(FixArgs),
    /// Compare the four-letter and three-letter presentations of the
    /// projected example sequence.
    Rote7(Rote7Args),
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Directive word, e.g. "|bB" or "bb|bBb".
    #[arg(long)]
    pub directive: String,
    #[arg(long, value_enum, default_value_t = SequenceKind::Sturmian)]
    pub kind: SequenceKind,
    #[arg(long, default_value_t = 40)]
    pub length: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceKind {
    Sturmian,
    Rote,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub directive: String,
    /// Bispecial prefix index.
    #[arg(long)]
    pub index: usize,
}

#[derive(Args)]
pub struct DeriveArgs {
    #[arg(long)]
    pub directive: String,
    #[arg(long)]
    pub index: usize,
    #[arg(long, default_value_t = 40)]
    pub length: usize,
    /// Cross-check the result against an independent construction.
    #[arg(long, value_enum, default_value_t = CheckMode::None)]
    pub check: CheckMode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    None,
    Oracle,
    Iet,
}

#[derive(Args)]
pub struct FixArgs {
    /// Directive period, e.g. "bB".
    #[arg(long)]
    pub z: String,
    #[arg(long, default_value_t = 200)]
    pub verify_length: usize,
}

#[derive(Args)]
pub struct Rote7Args {
    /// Morphism family parameter.
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 40)]
    pub length: usize,
}

#[derive(Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directive: Option<String>,
    pub payload: Payload,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Payload {
    Generate(GeneratePayload),
    Analyze(AnalyzePayload),
    Derive(DerivePayload),
    Fix(FixPayload),
    Rote7(Rote7Payload),
}

#[derive(Serialize)]
pub struct GeneratePayload {
    pub kind: String,
    pub length: usize,
    pub word: String,
}

#[derive(Serialize)]
pub struct AnalyzePayload {
    pub index: usize,
    pub bispecial: String,
    pub r: String,
    pub s: String,
    pub matrix: String,
    pub prefix_type: String,
    pub rote_bispecial: String,
    pub a: String,
    pub b: String,
    pub c: String,
}

#[derive(Serialize)]
pub struct DerivePayload {
    pub index: usize,
    pub length: usize,
    pub word: String,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

#[derive(Serialize)]
pub struct FixEntryPayload {
    pub index: usize,
    pub span: usize,
    pub prefix_type: String,
    pub class: usize,
    pub images: String,
    pub verified: bool,
}

#[derive(Serialize)]
pub struct FixPayload {
    pub z: String,
    pub q: u32,
    pub period_length: usize,
    pub verify_length: usize,
    pub distinct: usize,
    pub entries: Vec<FixEntryPayload>,
}

#[derive(Serialize)]
pub struct Rote7Payload {
    pub n: u32,
    pub length: usize,
    pub projected: String,
    pub expanded: String,
    pub agreement: bool,
}

fn context(directive: &str) -> Result<SturmianContext> {
    SturmianContext::new(DirectiveSpec::parse(directive)?)
}

fn check_name(mode: CheckMode) -> &'static str {
    match mode {
        CheckMode::None => "none",
        CheckMode::Oracle => "oracle",
        CheckMode::Iet => "iet",
    }
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<OutputEnvelope> {
    let ctx = context(&args.directive)?;
    let (kind, word) = match args.kind {
        SequenceKind::Sturmian => ("sturmian", ctx.generate(args.length)),
        SequenceKind::Rote => ("rote", ctx.generate_rote(args.length)),
    };
    Ok(OutputEnvelope {
        command: "generate".into(),
        directive: Some(args.directive.clone()),
        payload: Payload::Generate(GeneratePayload {
            kind: kind.into(),
            length: args.length,
            word: word.to_string(),
        }),
    })
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<OutputEnvelope> {
    let ctx = context(&args.directive)?;
    let n = args.index;
    let pair = ctx.return_words(n);
    let triple = ctx.rote_return_words(n);
    Ok(OutputEnvelope {
        command: "analyze".into(),
        directive: Some(args.directive.clone()),
        payload: Payload::Analyze(AnalyzePayload {
            index: n,
            bispecial: ctx.bispecial_prefix(n).to_string(),
            r: pair.r.to_string(),
            s: pair.s.to_string(),
            matrix: ctx.prefix_matrix(n).to_string(),
            prefix_type: ctx.prefix_type(n).to_string(),
            rote_bispecial: ctx.rote_bispecial(n).to_string(),
            a: triple.a.to_string(),
            b: triple.b.to_string(),
            c: triple.c.to_string(),
        }),
    })
}

pub fn cmd_derive(args: &DeriveArgs) -> Result<OutputEnvelope> {
    let ctx = context(&args.directive)?;
    let n = args.index;
    let word = ctx.rote_derived(n, args.length)?;
    let agreement = match args.check {
        CheckMode::None => None,
        CheckMode::Oracle => {
            let triple = ctx.rote_return_words(n);
            let names = [triple.a, triple.b, triple.c];
            let scan = scan_adaptive(
                |k| ctx.generate_rote(k),
                &ctx.rote_bispecial(n),
                Naming::Canonical(&names),
                args.length + 1,
                SCAN_BUDGET,
            )?;
            if scan.derivated_prefix.prefix(args.length) != word {
                return Err(Error::Internal(format!(
                    "oracle scan disagrees: scanned {}, constructed {}",
                    scan.derivated_prefix.prefix(args.length),
                    word
                )));
            }
            Some(true)
        }
        CheckMode::Iet => {
            let coded = iet::iet3_code(&ctx.iet3_params(n), args.length);
            if coded != word {
                return Err(Error::Internal(format!(
                    "interval-exchange coding disagrees: coded {coded}, constructed {word}"
                )));
            }
            Some(true)
        }
    };
    Ok(OutputEnvelope {
        command: "derive".into(),
        directive: Some(args.directive.clone()),
        payload: Payload::Derive(DerivePayload {
            index: n,
            length: args.length,
            word: word.to_string(),
            check: check_name(args.check).into(),
            agreement,
        }),
    })
}

pub fn cmd_fix(args: &FixArgs) -> Result<OutputEnvelope> {
    let period = parse_period(&args.z)?;
    let list = fixing_morphisms(&period)?;
    let inventory = derived_inventory(&period)?;
    let ctx = SturmianContext::new(DirectiveSpec::periodic(period))?;
    let mut entries = Vec::with_capacity(list.entries.len());
    for (entry, inv) in list.entries.iter().zip(&inventory.entries) {
        let prefix = ctx.rote_derived(entry.index, args.verify_length)?;
        if !verify_fixing(&entry.morphism, &prefix) {
            return Err(Error::Internal(format!(
                "morphism at index {} does not fix its derivated sequence",
                entry.index
            )));
        }
        if !entry.morphism.is_primitive() {
            return Err(Error::Internal(format!(
                "morphism at index {} is not primitive",
                entry.index
            )));
        }
        entries.push(FixEntryPayload {
            index: entry.index,
            span: entry.span,
            prefix_type: entry.prefix_type.to_string(),
            class: inv.class,
            images: entry.morphism.to_string(),
            verified: true,
        });
    }
    Ok(OutputEnvelope {
        command: "fix".into(),
        directive: Some(args.z.clone()),
        payload: Payload::Fix(FixPayload {
            z: args.z.clone(),
            q: list.q,
            period_length: list.period_length,
            verify_length: args.verify_length,
            distinct: inventory.distinct,
            entries,
        }),
    })
}

pub fn cmd_rote7(args: &Rote7Args) -> Result<OutputEnvelope> {
    let (projected, expanded) = four_letter_words(args.n, args.length);
    if projected != expanded {
        return Err(Error::Internal(format!(
            "presentations disagree: projected {projected}, expanded {expanded}"
        )));
    }
    Ok(OutputEnvelope {
        command: "rote7".into(),
        directive: None,
        payload: Payload::Rote7(Rote7Payload {
            n: args.n,
            length: args.length,
            projected: projected.to_string(),
            expanded: expanded.to_string(),
            agreement: true,
        }),
    })
}

pub fn execute(command: &Command) -> Result<OutputEnvelope> {
    match command {
        Command::Generate(args) => cmd_generate(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Derive(args) => cmd_derive(args),
        Command::Fix(args) => cmd_fix(args),
        Command::Rote7(args) => cmd_rote7(args),
    }
}

/// Render the envelope as human-readable lines.
pub fn render_text(envelope: &OutputEnvelope) -> String {
    let mut lines = Vec::new();
    match &envelope.payload {
        Payload::Generate(p) => lines.push(p.word.clone()),
        Payload::Analyze(p) => {
            if let Some(d) = &envelope.directive {
                lines.push(format!("directive: {d}"));
            }
            lines.push(format!("index: {}", p.index));
            lines.push(format!("bispecial: {}", p.bispecial));
            lines.push(format!("r: {}", p.r));
            lines.push(format!("s: {}", p.s));
            lines.push(format!("matrix: {}", p.matrix));
            lines.push(format!("type: {}", p.prefix_type));
            lines.push(format!("rote bispecial: {}", p.rote_bispecial));
            lines.push(format!("A: {}", p.a));
            lines.push(format!("B: {}", p.b));
            lines.push(format!("C: {}", p.c));
        }
        Payload::Derive(p) => {
            lines.push(p.word.clone());
            if p.check != "none" {
                lines.push(format!("check: {}", p.check));
                lines.push(format!(
                    "agreement: {}",
                    p.agreement.map_or("n/a".to_string(), |a| a.to_string())
                ));
            }
        }
        Payload::Fix(p) => {
            lines.push(format!("z: {}", p.z));
            lines.push(format!("q: {}", p.q));
            lines.push(format!("entries: {}", p.entries.len()));
            lines.push(format!("distinct: {}", p.distinct));
            for e in &p.entries {
                lines.push(format!(
                    "sigma_{} (type {}, span {}, class {}, {}): {}",
                    e.index,
                    e.prefix_type,
                    e.span,
                    e.class,
                    if e.verified { "verified" } else { "UNVERIFIED" },
                    e.images
                ));
            }
        }
        Payload::Rote7(p) => {
            lines.push(format!("projected: {}", p.projected));
            lines.push(format!("expanded: {}", p.expanded));
            lines.push(format!("agreement: {}", p.agreement));
        }
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// Map an error to the process exit code.
pub fn exit_code(error: &Error) -> u8 {
    match error {
        Error::Parse(_) | Error::LetterRange | Error::AlphabetMismatch => 2,
        Error::InvalidDirective(_)
        | Error::NotSturmianPrefix(_)
        | Error::RationalParameter
        | Error::InvalidIet(_) => 3,
        Error::Factorization { .. }
        | Error::ScanBudget
        | Error::TooManyReturnWords
        | Error::Internal(_) => 4,
    }
}

/// Parse the process arguments, run the command, print the result, and
/// return the exit code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(envelope) => {
            match cli.format {
                Format::Text => print!("{}", render_text(&envelope)),
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string(&envelope).expect("payloads serialize")
                    );
                }
            }
            0
        }
        Err(error) => {
            eprintln!("error: {error}");
            exit_code(&error)
        }
    }
}
