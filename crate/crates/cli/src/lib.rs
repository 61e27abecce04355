//! Command dispatch for the `vwp` binary.
//!
//! Every command returns a [`CommandOutcome`] instead of writing to the
//! process streams, so the whole front end can be driven from tests.
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use vwp::demonstrative::{self, check_demonstration_node};
use vwp::modular::{self, GeneratorMap, GroupWord, ModularPresentation};
use vwp::pda::{self, BuildOptions, Pda};
use vwp::prm::{self, Prm};
use vwp::BinaryWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { exit_code: 0, stdout, stderr: String::new() }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        CommandOutcome { exit_code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(stderr: String) -> Self {
        CommandOutcome { exit_code: 2, stdout: String::new(), stderr }
    }
}

#[derive(Debug, Parser)]
#[command(name = "vwp", version, about = "Prefix replacement maps on Cantor space and word-problem pushdown automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Algebra of prefix replacement maps stored as `<domain> -> <range>` tables.
    #[command(subcommand)]
    Prm(PrmCommand),
    /// Print a built-in element as a table.
    Embed {
        #[arg(value_enum)]
        target: EmbedTarget,
    },
    /// Check that a node is demonstrative for the generated subgroup, up to a word length.
    Demo(DemoArgs),
    /// Build, refine, run and validate word-problem automata.
    #[command(subcommand)]
    Pda(PdaCommand),
}

#[derive(Debug, Subcommand)]
enum PrmCommand {
    /// Print the product: first map applied first.
    Compose {
        first: PathBuf,
        second: PathBuf,
    },
    Invert {
        file: PathBuf,
    },
    Reduce {
        file: PathBuf,
    },
    /// Smallest k <= --max with p^k = 1, else `unbounded`.
    Order {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        max: usize,
    },
    /// Image of a word lying under a single domain leaf.
    Apply {
        file: PathBuf,
        word: String,
    },
    /// Cone labels covering the image of the cone [word].
    Image {
        file: PathBuf,
        word: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmbedTarget {
    A,
    B,
    Gz,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WordSet {
    /// Normal forms of C2 * C3 (generators must be named a and b).
    Modular,
    /// Freely reduced words over the generators and inverses.
    Free,
}

#[derive(Debug, Args)]
struct GeneratorArgs {
    /// Generator assignment NAME=FILE; repeatable.
    #[arg(long = "gen", value_name = "NAME=FILE", required = true)]
    generators: Vec<String>,
}

#[derive(Debug, Args)]
struct DemoArgs {
    #[command(flatten)]
    generators: GeneratorArgs,
    #[arg(long)]
    node: String,
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    /// Which non-trivial words to test. Defaults to `modular` when the
    /// generators are exactly a and b, `free` otherwise.
    #[arg(long, value_enum)]
    words: Option<WordSet>,
}

#[derive(Debug, Subcommand)]
enum PdaCommand {
    /// Emit the transition table of the word-problem automaton.
    Build {
        #[command(flatten)]
        generators: GeneratorArgs,
        #[arg(long)]
        node: String,
        /// Extend the node by 0 and retry while stacks are too shallow.
        #[arg(long)]
        deepen: bool,
    },
    /// Split reading rows that overlap accepting rows.
    Determinize {
        /// Table file, `-` or absent for standard input.
        table: Option<PathBuf>,
        /// Expected node; must match the table header.
        #[arg(long)]
        node: Option<String>,
    },
    /// Print ACCEPT or REJECT for a word of space-separated tokens.
    Run { table: PathBuf, word: String },
    /// Compare the automaton with direct evaluation on all words up to --max-len.
    Validate {
        table: PathBuf,
        #[command(flatten)]
        generators: GeneratorArgs,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Pretty-print a table with column headings.
    Table { table: Option<PathBuf> },
}

/// Parses `args` (including the program name) and executes the command.
/// `stdin` is read only by commands given `-` or no table file.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() { CommandOutcome::usage(text) } else { CommandOutcome::ok(text) };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(outcome) => outcome,
        Err(err) => CommandOutcome::usage(format!("error: {err:#}\n")),
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> anyhow::Result<CommandOutcome> {
    match command {
        Command::Prm(cmd) => cmd_prm(cmd),
        Command::Embed { target } => Ok(CommandOutcome::ok(embedded(target).reduce().to_string())),
        Command::Demo(args) => cmd_demo(args),
        Command::Pda(cmd) => cmd_pda(cmd, stdin),
    }
}

fn embedded(target: EmbedTarget) -> Prm {
    match target {
        EmbedTarget::A => modular::element_a(),
        EmbedTarget::B => modular::element_b(),
        EmbedTarget::Gz => prm::z_generator(),
    }
}

fn read_prm(path: &Path) -> anyhow::Result<Prm> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.parse().with_context(|| format!("parsing {}", path.display()))
}

fn parse_word(text: &str) -> anyhow::Result<BinaryWord> {
    text.parse().with_context(|| format!("invalid binary word {text:?}"))
}

fn cmd_prm(cmd: PrmCommand) -> anyhow::Result<CommandOutcome> {
    let out = match cmd {
        PrmCommand::Compose { first, second } => read_prm(&first)?.compose(&read_prm(&second)?).to_string(),
        PrmCommand::Invert { file } => read_prm(&file)?.invert().to_string(),
        PrmCommand::Reduce { file } => read_prm(&file)?.reduce().to_string(),
        PrmCommand::Order { file, max } => {
            if max == 0 {
                bail!("--max must be at least 1");
            }
            format!("{}\n", read_prm(&file)?.element_order(max))
        }
        PrmCommand::Apply { file, word } => format!("{}\n", read_prm(&file)?.apply_to_word(&parse_word(&word)?)?),
        PrmCommand::Image { file, word } => {
            let labels: Vec<String> =
                read_prm(&file)?.image_of_cone(&parse_word(&word)?).iter().map(ToString::to_string).collect();
            format!("{}\n", labels.join(","))
        }
    };
    Ok(CommandOutcome::ok(out))
}

fn load_generators(args: &GeneratorArgs) -> anyhow::Result<GeneratorMap> {
    let mut map = GeneratorMap::new();
    for spec in &args.generators {
        let (name, file) = spec.split_once('=').ok_or_else(|| anyhow!("--gen expects NAME=FILE, got {spec:?}"))?;
        if map.get(name).is_some() {
            bail!("generator {name} given twice");
        }
        map.insert(name, read_prm(Path::new(file))?)?;
    }
    Ok(map)
}

fn cmd_demo(args: DemoArgs) -> anyhow::Result<CommandOutcome> {
    let generators = load_generators(&args.generators)?;
    let node = parse_word(&args.node)?;
    let is_modular_pair = generators.names().eq(["a", "b"]);
    let words = match args.words {
        Some(WordSet::Modular) if !is_modular_pair => bail!("--words modular needs generators named a and b"),
        Some(WordSet::Modular) => ModularPresentation::default().enumerate_normal_forms(args.max_len),
        None if is_modular_pair => ModularPresentation::default().enumerate_normal_forms(args.max_len),
        _ => demonstrative::freely_reduced_words(&generators, args.max_len),
    };
    let report = check_demonstration_node(&generators, &node, &words)?;
    Ok(CommandOutcome::verdict(report.holds(), report.to_string()))
}

fn read_table(path: Option<&Path>, stdin: &mut dyn Read) -> anyhow::Result<Pda> {
    let text = match path {
        None => read_stdin(stdin)?,
        Some(p) if p == Path::new("-") => read_stdin(stdin)?,
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
    };
    Ok(pda::parse_table(&text)?)
}

fn read_stdin(stdin: &mut dyn Read) -> anyhow::Result<String> {
    let mut text = String::new();
    stdin.read_to_string(&mut text).context("reading standard input")?;
    Ok(text)
}

fn cmd_pda(cmd: PdaCommand, stdin: &mut dyn Read) -> anyhow::Result<CommandOutcome> {
    match cmd {
        PdaCommand::Build { generators, node, deepen } => {
            let generators = load_generators(&generators)?;
            let options = BuildOptions { deepen, ..BuildOptions::default() };
            let automaton = pda::build_with_options(&generators, &parse_word(&node)?, options)?;
            Ok(CommandOutcome::ok(pda::serialize_table(&automaton)))
        }
        PdaCommand::Determinize { table, node } => {
            let automaton = read_table(table.as_deref(), stdin)?;
            if let Some(node) = node {
                let node = parse_word(&node)?;
                if &node != automaton.node() {
                    bail!("--node {node} does not match table node {}", automaton.node());
                }
            }
            let refined = pda::determinize_against_accept(&automaton)?;
            Ok(CommandOutcome::ok(pda::serialize_table(&refined)))
        }
        PdaCommand::Run { table, word } => {
            let automaton = read_table(Some(&table), stdin)?;
            let word: GroupWord = word.parse()?;
            let outcome = automaton.run(word.letters())?;
            let verdict = if outcome.accepted { "ACCEPT" } else { "REJECT" };
            Ok(CommandOutcome::verdict(outcome.accepted, format!("{verdict}\n")))
        }
        PdaCommand::Validate { table, generators, max_len } => {
            let automaton = read_table(Some(&table), stdin)?;
            let generators = load_generators(&generators)?;
            let report = pda::cross_validate(&automaton, &generators, max_len)?;
            let mut out = format!("{} mismatches\n", report.mismatches.len());
            for m in &report.mismatches {
                let verdict = if m.pda_accepts { "ACCEPT" } else { "REJECT" };
                let truth = if m.is_identity { "identity" } else { "non-identity" };
                writeln!(out, "{}\t{verdict}\t{truth}", m.word.to_tokens())?;
            }
            Ok(CommandOutcome::verdict(report.mismatches.is_empty(), out))
        }
        PdaCommand::Table { table } => {
            let automaton = read_table(table.as_deref(), stdin)?;
            Ok(CommandOutcome::ok(pretty_table(&automaton)))
        }
    }
}

fn pretty_table(automaton: &Pda) -> String {
    let heading = ["Current State", "Input", "Stack Top", "Stack Replacement", "New State"];
    let rows: Vec<Vec<String>> =
        automaton.transitions().iter().map(|t| t.to_string().split('\t').map(str::to_string).collect()).collect();
    let widths: Vec<usize> = (0..heading.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([heading[i].len()]).max().unwrap_or(0))
        .collect();
    let render = |cells: &[&str]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = render(&heading);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&format!("|-{}-|\n", rule.join("-|-")));
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        out.push_str(&render(&cells));
    }
    out
}
