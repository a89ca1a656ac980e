//! Command-line front end for the necklace toolkit.
//!
//! Every command reads its size (`--size n1,n2,…`) and alphabet size
//! (`--alphabet q`) from flags, writes data to the output stream and
//! diagnostics to the error stream. Ranks are zero-based throughout: the
//! smallest necklace has rank 0.
//!
//! Words are given with `--word`, either inline or as `@path`, in one of two
//! formats:
//!
//! * text: `abab` (letters for `q ≤ 26`, else comma-separated integers), or a
//!   two-dimensional grid `[ab;ba]` with one slice (row) per `;`. Text input is
//!   accepted only for one and two dimensions.
//! * JSON: `{"q":2,"size":[2,2],"data":[1,2,2,1]}` with the cells in linear
//!   index order (first coordinate fastest); nested arrays are flattened.
//!
//! With `--emit json` every output record is one JSON object per line with a
//! fixed key order.

use clap::{Args, Parser, Subcommand, ValueEnum};
use necklace_core::counting::{
    count_atranslational, count_fc_atranslational, count_fc_lyndon, count_fc_necklaces,
    count_lyndon, count_necklaces,
};
use necklace_core::generation::{enumerate, next_necklace};
use necklace_core::kcentre::{k_centre, overlap_distance, ratio_table};
use necklace_core::unranking::{unrank, unrank_fixed_content};
use necklace_core::{rank_fixed_content, rank_necklace, Error, SizeVec, Word};
use necklace_oracle as oracle;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::io::{self, Write};

/// Exit code for malformed or inconsistent input.
pub const EXIT_INVALID: u8 = 2;
/// Exit code when a size guard refuses the request.
pub const EXIT_GUARD: u8 = 3;

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unparsable words, non-canonical input and the like.
    Invalid(String),
    /// The request exceeds a configured size guard.
    Guard(String),
    /// Writing the output failed.
    Io(io::Error),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => EXIT_INVALID,
            CliError::Guard(_) => EXIT_GUARD,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "{m}"),
            CliError::Guard(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "write failed: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded(_) => CliError::Guard(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Multidimensional necklaces: counting, generation, ranking and k-centres.
#[derive(Parser, Debug)]
#[command(name = "necklace", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Output format.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Emit {
    #[default]
    Text,
    Json,
}

/// Which family of necklaces a command works on.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Class {
    #[default]
    Necklace,
    Lyndon,
    Atranslational,
}

/// Flags shared by the commands that work on one size and alphabet.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Size vector, e.g. `2,2`.
    #[arg(long)]
    pub size: Option<String>,
    /// Alphabet size q (symbols 1..=q).
    #[arg(long)]
    pub alphabet: Option<u8>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Number of necklaces of the chosen class.
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Class::Necklace)]
        class: Class,
        /// Parikh vector p1,…,pq restricting to fixed content.
        #[arg(long)]
        content: Option<String>,
    },
    /// Stream canonical necklaces in increasing order.
    List {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Class::Necklace)]
        class: Class,
        #[arg(long)]
        content: Option<String>,
        /// Stop after this many words.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Smallest necklace strictly greater than a word, or `EXHAUSTED`.
    Next {
        #[command(flatten)]
        common: Common,
        /// Word as text (`abab`, `[ab;ba]`), JSON, or `@file`.
        #[arg(long)]
        word: String,
    },
    /// Zero-based ranks of a canonical necklace.
    Rank {
        #[command(flatten)]
        common: Common,
        /// Word as text (`abab`, `[ab;ba]`), JSON, or `@file`.
        #[arg(long)]
        word: String,
        /// Rank among necklaces with this Parikh vector instead.
        #[arg(long)]
        content: Option<String>,
    },
    /// The necklace with a given zero-based rank.
    Unrank {
        #[command(flatten)]
        common: Common,
        /// Zero-based rank.
        #[arg(long)]
        index: String,
        /// Unrank among necklaces with this Parikh vector instead.
        #[arg(long)]
        content: Option<String>,
    },
    /// k centres with a guaranteed covering radius.
    Centres {
        #[command(flatten)]
        common: Common,
        /// Number of centres.
        #[arg(short, long)]
        k: usize,
    },
    /// Exact overlap distance between two words.
    Dist {
        #[command(flatten)]
        common: Common,
        /// Word as text, JSON or `@file`; give exactly two.
        #[arg(long, num_args = 1, required = true)]
        word: Vec<String>,
    },
    /// Approximation ratios of the de Bruijn k-centre construction.
    RatioTable {
        /// Alphabet size q.
        #[arg(long)]
        alphabet: u8,
        /// Inclusive range of lengths, e.g. `1..8`.
        #[arg(long, default_value = "1..8")]
        n_range: String,
        /// Inclusive range of k, e.g. `1..8`.
        #[arg(long, default_value = "1..8")]
        k_range: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Brute-force reference answers (exponential; guarded).
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Count by exhaustive enumeration.
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Class::Necklace)]
        class: Class,
        #[arg(long)]
        content: Option<String>,
    },
    /// List by exhaustive enumeration.
    List {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Class::Necklace)]
        class: Class,
        #[arg(long)]
        content: Option<String>,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Rank by position in the sorted census.
    Rank {
        #[command(flatten)]
        common: Common,
        /// Word as text (`abab`, `[ab;ba]`), JSON, or `@file`.
        #[arg(long)]
        word: String,
    },
    /// Distance by literal multiset intersection.
    Dist {
        #[command(flatten)]
        common: Common,
        /// Word as text, JSON or `@file`; give exactly two.
        #[arg(long, num_args = 1, required = true)]
        word: Vec<String>,
    },
}

/// JSON form of a word.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct WordJson {
    pub q: u8,
    pub size: Vec<usize>,
    pub data: serde_json::Value,
}

impl WordJson {
    fn from_word(w: &Word) -> Self {
        WordJson {
            q: w.q(),
            size: w.dims().to_vec(),
            data: serde_json::Value::from(w.cells().to_vec()),
        }
    }
}

#[derive(Serialize)]
struct CountRecord {
    count: String,
}

#[derive(Serialize)]
struct RankRecord {
    rn: String,
    rl: String,
    ra: String,
}

#[derive(Serialize)]
struct FixedRankRecord {
    rank: String,
}

#[derive(Serialize)]
struct DistRecord {
    distance: String,
    numerator: u64,
    denominator: u64,
}

#[derive(Serialize)]
struct CentreSummary {
    k: usize,
    lambda: usize,
    shared: Vec<usize>,
    bound: String,
}

#[derive(Serialize)]
struct RatioRow {
    k: usize,
    n: Vec<usize>,
    ratio: Vec<Option<f64>>,
}

#[derive(Serialize)]
struct NextRecord {
    exhausted: bool,
}

/// Parse a comma-separated list of positive integers.
fn parse_list(text: &str, what: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Invalid(format!("bad {what} entry {t:?} in {text:?}")))
        })
        .collect()
}

/// Parse an inclusive range `a..b`, `a..=b` or `a-b`, or a single value.
fn parse_range(text: &str) -> CliResult<Vec<usize>> {
    let bad = || CliError::Invalid(format!("bad range {text:?}"));
    let (a, b) = if let Some((a, b)) = text.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = text.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = text.split_once('-') {
        (a, b)
    } else {
        (text, text)
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn flatten_cells(v: &serde_json::Value, out: &mut Vec<u8>) -> CliResult<()> {
    match v {
        serde_json::Value::Array(items) => items.iter().try_for_each(|x| flatten_cells(x, out)),
        serde_json::Value::Number(n) => {
            let s = n
                .as_u64()
                .filter(|&s| s <= u8::MAX as u64)
                .ok_or_else(|| CliError::Invalid(format!("bad symbol {n}")))?;
            out.push(s as u8);
            Ok(())
        }
        other => Err(CliError::Invalid(format!("bad cell value {other}"))),
    }
}

/// The size and alphabet resolved from flags, possibly completed by a word.
struct Context {
    size: Option<SizeVec>,
    q: Option<u8>,
    emit: Emit,
}

impl Context {
    fn new(common: &Common) -> CliResult<Self> {
        let size = match &common.size {
            Some(s) => Some(SizeVec::new(&parse_list(s, "size")?)?),
            None => None,
        };
        if common.alphabet == Some(0) {
            return Err(CliError::Invalid("alphabet size must be at least 1".into()));
        }
        Ok(Context {
            size,
            q: common.alphabet,
            emit: common.emit,
        })
    }

    fn size(&self) -> CliResult<&SizeVec> {
        self.size
            .as_ref()
            .ok_or_else(|| CliError::Invalid("--size is required".into()))
    }

    fn q(&self) -> CliResult<u8> {
        self.q
            .ok_or_else(|| CliError::Invalid("--alphabet is required".into()))
    }

    /// Parse a Parikh vector, inferring `q` from its length when absent.
    fn content(&mut self, text: &str) -> CliResult<Vec<usize>> {
        let p = parse_list(text, "content")?;
        match self.q {
            Some(q) if q as usize != p.len() => {
                return Err(CliError::Invalid(format!(
                    "content has {} entries but the alphabet has {q} symbols",
                    p.len()
                )))
            }
            None => {
                let q = u8::try_from(p.len())
                    .map_err(|_| CliError::Invalid("content vector too long".into()))?;
                self.q = Some(q);
            }
            _ => {}
        }
        let n = self.size()?.total();
        if p.iter().sum::<usize>() != n {
            return Err(CliError::Invalid(format!(
                "content {text} does not sum to the {n} cells of the word"
            )));
        }
        Ok(p)
    }

    /// Parse a `--word` argument, reading `@path` files.
    fn word(&mut self, arg: &str) -> CliResult<Word> {
        let text = match arg.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Invalid(format!("cannot read {path}: {e}")))?,
            None => arg.to_string(),
        };
        let text = text.trim();
        if text.starts_with('{') {
            let json: WordJson = serde_json::from_str(text)
                .map_err(|e| CliError::Invalid(format!("bad JSON word: {e}")))?;
            let size = SizeVec::new(&json.size)?;
            if let Some(s) = &self.size {
                if s != &size {
                    return Err(CliError::Invalid(format!(
                        "word has size {size} but --size is {s}"
                    )));
                }
            }
            if let Some(q) = self.q {
                if q != json.q {
                    return Err(CliError::Invalid(format!(
                        "word has alphabet {} but --alphabet is {q}",
                        json.q
                    )));
                }
            }
            let mut cells = Vec::new();
            flatten_cells(&json.data, &mut cells)?;
            self.size = Some(size.clone());
            self.q = Some(json.q);
            Ok(Word::new(size, json.q, cells)?)
        } else {
            let size = self.size()?.clone();
            if size.d() > 2 {
                return Err(CliError::Invalid(
                    "text words are accepted only up to two dimensions; use JSON".into(),
                ));
            }
            Ok(Word::parse_text(text, &size, self.q()?)?)
        }
    }
}

/// Text form of a word when it re-parses unambiguously, else its JSON form.
fn word_text(w: &Word) -> String {
    if w.size().d() <= 2 {
        w.to_text()
    } else {
        serde_json::to_string(&WordJson::from_word(w)).expect("serializable")
    }
}

fn emit_word(out: &mut dyn Write, w: &Word, emit: Emit) -> io::Result<()> {
    match emit {
        Emit::Text => writeln!(out, "{}", word_text(w)),
        Emit::Json => emit_json(out, &WordJson::from_word(w)),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, record: &T) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(record).expect("serializable"))
}

fn emit_count(out: &mut dyn Write, count: &BigUint, emit: Emit) -> io::Result<()> {
    match emit {
        Emit::Text => writeln!(out, "{count}"),
        Emit::Json => emit_json(out, &CountRecord { count: count.to_string() }),
    }
}

fn in_class(w: &Word, class: Class) -> bool {
    match class {
        Class::Necklace => true,
        Class::Lyndon => w.is_aperiodic(),
        Class::Atranslational => w.is_atranslational(),
    }
}

/// Run a parsed command line, writing results to `out`.
///
/// A closed output pipe ends the command successfully.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match dispatch(cli, out) {
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Count { common, class, content } => {
            let mut ctx = Context::new(common)?;
            let size = ctx.size()?.clone();
            let count = match content {
                Some(p) => {
                    let p = ctx.content(p)?;
                    match class {
                        Class::Necklace => count_fc_necklaces(&size, &p)?,
                        Class::Lyndon => count_fc_lyndon(&size, &p)?,
                        Class::Atranslational => count_fc_atranslational(&size, &p)?,
                    }
                }
                None => {
                    let q = ctx.q()?;
                    match class {
                        Class::Necklace => count_necklaces(&size, q),
                        Class::Lyndon => count_lyndon(&size, q),
                        Class::Atranslational => count_atranslational(&size, q),
                    }
                }
            };
            emit_count(out, &count, ctx.emit)?;
        }
        Command::List { common, class, content, limit } => {
            let mut ctx = Context::new(common)?;
            let p = content.as_deref().map(|p| ctx.content(p)).transpose()?;
            let size = ctx.size()?.clone();
            let mut left = limit.unwrap_or(u64::MAX);
            for w in enumerate(&size, ctx.q()?) {
                if left == 0 {
                    break;
                }
                if in_class(&w, *class) && p.as_ref().is_none_or(|p| &w.parikh() == p) {
                    emit_word(out, &w, ctx.emit)?;
                    left -= 1;
                }
            }
        }
        Command::Next { common, word } => {
            let mut ctx = Context::new(common)?;
            let w = ctx.word(word)?;
            match next_necklace(&w) {
                Some(v) => emit_word(out, &v, ctx.emit)?,
                None => match ctx.emit {
                    Emit::Text => writeln!(out, "EXHAUSTED")?,
                    Emit::Json => emit_json(out, &NextRecord { exhausted: true })?,
                },
            }
        }
        Command::Rank { common, word, content } => {
            let mut ctx = Context::new(common)?;
            // The content can fix q for a text word; a JSON word can fix the size.
            let early = match (content, &ctx.size) {
                (Some(p), Some(_)) => Some(ctx.content(p)?),
                _ => None,
            };
            let w = ctx.word(word)?;
            match content {
                Some(p) => {
                    let p = match early {
                        Some(p) => p,
                        None => ctx.content(p)?,
                    };
                    let r = rank_fixed_content(&w, &p)?;
                    match ctx.emit {
                        Emit::Text => writeln!(out, "{r}")?,
                        Emit::Json => emit_json(out, &FixedRankRecord { rank: r.to_string() })?,
                    }
                }
                None => {
                    let r = rank_necklace(&w)?;
                    emit_ranks(out, &r.rn, &r.rl, &r.ra, ctx.emit)?;
                }
            }
        }
        Command::Unrank { common, index, content } => {
            let mut ctx = Context::new(common)?;
            let i: BigUint = index
                .trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("bad index {index:?}")))?;
            let w = match content {
                Some(p) => {
                    let p = ctx.content(p)?;
                    unrank_fixed_content(&i, ctx.size()?, &p)?
                }
                None => unrank(&i, ctx.size()?, ctx.q()?)?,
            };
            emit_word(out, &w, ctx.emit)?;
        }
        Command::Centres { common, k } => {
            let ctx = Context::new(common)?;
            let set = k_centre(ctx.size()?, ctx.q()?, *k)?;
            for c in &set.centres {
                emit_word(out, c, ctx.emit)?;
            }
            let summary = CentreSummary {
                k: *k,
                lambda: set.lambda,
                shared: set.shared.clone(),
                bound: set.bound.to_string(),
            };
            match ctx.emit {
                Emit::Text => writeln!(
                    out,
                    "k={} lambda={} shared={} bound={}",
                    summary.k,
                    summary.lambda,
                    summary
                        .shared
                        .iter()
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    summary.bound
                )?,
                Emit::Json => emit_json(out, &summary)?,
            }
        }
        Command::Dist { common, word } => {
            let mut ctx = Context::new(common)?;
            let (a, b) = two_words(&mut ctx, word)?;
            let d = overlap_distance(&a, &b)?;
            emit_distance(out, *d.numer(), *d.denom(), ctx.emit)?;
        }
        Command::RatioTable { alphabet, n_range, k_range, emit } => {
            if *alphabet < 2 {
                return Err(CliError::Invalid("ratio table needs an alphabet of at least 2".into()));
            }
            let ns = parse_range(n_range)?;
            let ks = parse_range(k_range)?;
            let rows = ratio_table(*alphabet, &ns, &ks);
            match emit {
                Emit::Text => {
                    let header: Vec<String> = ns.iter().map(|n| format!("{n:>9}")).collect();
                    writeln!(out, "k\\n{}", header.join(""))?;
                    for (k, row) in ks.iter().zip(&rows) {
                        let cells: Vec<String> = row
                            .iter()
                            .map(|r| match r {
                                Some(v) => format!("{v:>9.5}"),
                                None => format!("{:>9}", "1.0"),
                            })
                            .collect();
                        writeln!(out, "{k:<3}{}", cells.join(""))?;
                    }
                }
                Emit::Json => {
                    for (k, row) in ks.iter().zip(rows) {
                        emit_json(out, &RatioRow { k: *k, n: ns.clone(), ratio: row })?;
                    }
                }
            }
        }
        Command::Oracle { command } => oracle_command(command, out)?,
    }
    Ok(())
}

fn two_words(ctx: &mut Context, words: &[String]) -> CliResult<(Word, Word)> {
    if words.len() != 2 {
        return Err(CliError::Invalid(format!(
            "exactly two --word arguments are required, got {}",
            words.len()
        )));
    }
    let a = ctx.word(&words[0])?;
    let b = ctx.word(&words[1])?;
    Ok((a, b))
}

fn emit_ranks(
    out: &mut dyn Write,
    rn: &dyn fmt::Display,
    rl: &dyn fmt::Display,
    ra: &dyn fmt::Display,
    emit: Emit,
) -> io::Result<()> {
    match emit {
        Emit::Text => writeln!(out, "rn={rn} rl={rl} ra={ra}"),
        Emit::Json => emit_json(
            out,
            &RankRecord {
                rn: rn.to_string(),
                rl: rl.to_string(),
                ra: ra.to_string(),
            },
        ),
    }
}

fn emit_distance(out: &mut dyn Write, numer: u64, denom: u64, emit: Emit) -> io::Result<()> {
    let text = if denom == 1 {
        numer.to_string()
    } else {
        format!("{numer}/{denom}")
    };
    match emit {
        Emit::Text => writeln!(out, "{text}"),
        Emit::Json => emit_json(
            out,
            &DistRecord {
                distance: text,
                numerator: numer,
                denominator: denom,
            },
        ),
    }
}

fn oracle_command(command: &OracleCommand, out: &mut dyn Write) -> CliResult<()> {
    match command {
        OracleCommand::Count { common, class, content }
        | OracleCommand::List { common, class, content, .. } => {
            let mut ctx = Context::new(common)?;
            let p = content.as_deref().map(|p| ctx.content(p)).transpose()?;
            let census = oracle::census(ctx.size()?, ctx.q()?)?;
            let selected: Vec<usize> = match &p {
                Some(p) => census.with_content(p),
                None => (0..census.len()).collect(),
            };
            let selected = selected.into_iter().filter(|&i| match class {
                Class::Necklace => true,
                Class::Lyndon => census.is_lyndon(i),
                Class::Atranslational => census.is_atranslational(i),
            });
            if let OracleCommand::List { limit, .. } = command {
                let limit = limit.unwrap_or(u64::MAX);
                for i in selected.take(usize::try_from(limit).unwrap_or(usize::MAX)) {
                    emit_word(out, &census.word(i), ctx.emit)?;
                }
            } else {
                emit_count(out, &BigUint::from(selected.count()), ctx.emit)?;
            }
        }
        OracleCommand::Rank { common, word } => {
            let mut ctx = Context::new(common)?;
            let w = ctx.word(word)?;
            let census = oracle::census(w.size(), w.q())?;
            let (rn, rl, ra) = census.ranks(&w)?;
            emit_ranks(out, &rn, &rl, &ra, ctx.emit)?;
        }
        OracleCommand::Dist { common, word } => {
            let mut ctx = Context::new(common)?;
            let (a, b) = two_words(&mut ctx, word)?;
            let d = oracle::oracle_distance(&a, &b)?;
            emit_distance(out, *d.numer(), *d.denom(), ctx.emit)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..8").unwrap(), (1..=8).collect::<Vec<_>>());
        assert_eq!(parse_range("2-3").unwrap(), vec![2, 3]);
        assert_eq!(parse_range("4").unwrap(), vec![4]);
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("5..3").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("2, 3,4", "size").unwrap(), vec![2, 3, 4]);
        assert!(parse_list("2,x", "size").is_err());
    }
}
