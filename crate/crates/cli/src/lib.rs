//! The `asmtool` command set.
//!
//! Exit codes: 0 on success, 1 when a matrix fails a check or a move does not
//! validate, 2 on usage, parse or guard errors. Indices on the command line
//! and in every output are 1-based.

pub mod format;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use asm_core::analysis::{components, is_connected, min_line_cover, term_rank, term_rank_lower_bound};
use asm_core::enumeration::{
    class_size_formula, count_with, enumerate_with, equivalence_class, extremal_scan_with, zeta, zeta_p, ClassFormula,
    Direction, Filter, Guards, Statistic, ZetaHit,
};
use asm_core::generators::{
    attach_d3, basic_unicyclic, diamond, elementary_expansion, from_row_sums, hollowed_diamond, hollowed_near_diamond,
    min_term_rank_asm, near_diamond, permutation_asm, CycleSigns, D3Anchor, HollowVariant,
};
use asm_core::model::{asm_count_formula, SumVector};
use asm_core::transforms::{apply, elementary_extensions, is_maximal, reduce_to_identity, InterchangeMove};
use asm_core::{validate, Asm, Error, Grid, Permutation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use format::Format;

#[derive(Parser, Debug)]
#[command(name = "asmtool", version, about = "Alternating sign matrix toolkit")]
pub struct Cli {
    /// Output format for matrices and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Read the input matrix from this file instead of standard input.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a matrix from one of the constructions.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Validate the input matrix, optionally requiring more properties.
    Check(CheckArgs),
    /// Print a JSON report of the input ASM's invariants.
    Analyze,
    /// List order-n ASMs, or scan them for the extreme value of a statistic.
    Enum(EnumArgs),
    /// Number of order-n ASMs.
    Count(CountArgs),
    /// Submatrix and equivalence-class searches.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Interchange moves on the input ASM.
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
}

/// A 1-based pair written `a,b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pair(pub usize, pub usize);

impl FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once(',').ok_or_else(|| format!("expected 'a,b', got '{s}'"))?;
        let num = |t: &str| match t.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("'{t}' is not a positive index")),
            Ok(v) => Ok(v),
        };
        Ok(Pair(num(a)?, num(b)?))
    }
}

impl Pair {
    fn zero_based(self) -> (usize, usize) {
        (self.0 - 1, self.1 - 1)
    }
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// The diamond D_n.
    Diamond {
        n: usize,
        /// Reverse the row order (differs from D_n only for even n).
        #[arg(long)]
        reversed: bool,
    },
    /// Symmetric zero-diagonal hollowing of a diamond (n even, n >= 4).
    Hollowed {
        n: usize,
        /// type1 or type2 for n divisible by 4, standard otherwise.
        #[arg(long)]
        variant: Option<HollowVariant>,
    },
    /// The near-diamond E_n (n divisible by 4).
    NearDiamond { n: usize },
    /// Hollowing of the near-diamond E_n (n divisible by 4).
    NearHollowed { n: usize },
    /// An ASM whose rows have the given numbers of nonzeros, e.g. 1,3,1.
    FromRowSums {
        #[arg(value_delimiter = ',', required = true)]
        sums: Vec<usize>,
    },
    /// Embed the input {-1,0,1} grid in an ASM by adding lines.
    Expand {
        /// Also print which rows and columns hold the input.
        #[arg(long)]
        embedding: bool,
    },
    /// Attach D_3 at a +1 of the input ASM.
    AttachD3 {
        /// Position i,j of the host +1 in the input.
        #[arg(long)]
        at: Pair,
        /// Final positions of the two new rows.
        #[arg(long)]
        rows: Pair,
        /// Final positions of the two new columns.
        #[arg(long)]
        cols: Pair,
        /// Which corner of D_3 the host +1 becomes: top, left, right or bottom.
        #[arg(long, default_value = "left")]
        anchor: D3Anchor,
    },
    /// Minimal connected ASM grown from a signed even cycle, e.g. ++-+--.
    Unicyclic {
        signs: String,
        /// Shuffle the cycle's lines with this seed before expanding.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// An ASM of least possible term rank.
    MinTermRank { n: usize },
    /// A permutation matrix from 1-based images, e.g. 2,4,1,5,3.
    Permutation {
        #[arg(value_delimiter = ',', required = true)]
        images: Vec<usize>,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub symmetric: bool,
    #[arg(long)]
    pub zero_diagonal: bool,
    /// Require that no elementary extension exists.
    #[arg(long)]
    pub maximal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterName {
    Connected,
    Symmetric,
    ZeroDiagonal,
    Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StatName {
    Sigma,
    TermRank,
}

#[derive(Args, Debug)]
pub struct EnumArgs {
    pub n: usize,
    /// Restrict to matrices with these properties (comma separated).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub filter: Vec<FilterName>,
    /// Report the optimum of this statistic and how many matrices attain it.
    #[arg(long, value_enum)]
    pub stat: Option<StatName>,
    #[arg(long, requires = "stat", conflicts_with = "max")]
    pub min: bool,
    #[arg(long, requires = "stat")]
    pub max: bool,
    /// Print only the number of matrices.
    #[arg(long, conflicts_with = "stat")]
    pub count_only: bool,
    /// With --stat, also print the attaining matrices.
    #[arg(long, requires = "stat")]
    pub list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enum,
    Formula,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormulaName {
    /// l copies of D_3 plus I_1.
    DirectSum,
    /// l - 1 copies of D_3 plus D_4.
    WithD4,
}

#[derive(Subcommand, Debug)]
pub enum SearchKind {
    /// Least order of an ASM containing the input grid as a submatrix.
    Zeta {
        /// Largest order to try; defaults to the enumeration guard.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Least order of a symmetric ASM containing the input as a principal submatrix.
    ZetaP {
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Size of the class of ASMs P A Q for the input A, or a closed formula.
    ClassSize {
        #[arg(long, value_enum, requires = "copies")]
        formula: Option<FormulaName>,
        /// Number l of D_3 blocks, giving order 3l + 1.
        #[arg(long, requires = "formula")]
        copies: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum TransformOp {
    /// Interchange moves leading from the identity to the input.
    Reduce {
        /// Also print every matrix along the way.
        #[arg(long)]
        trace: bool,
    },
    /// Apply moves given as groups of five numbers: sign p q k l.
    Apply {
        #[arg(allow_negative_numbers = true, required = true)]
        moves: Vec<i64>,
    },
    /// List every elementary extension move of the input.
    Extensions,
}

#[derive(Debug)]
pub enum Failure {
    /// A matrix failed a requested property or a move did not validate.
    Semantic(String),
    /// Bad arguments, unreadable input or a guard violation.
    Usage(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Semantic(_) => 1,
            Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
            Failure::Usage(_) | Failure::Io(_) => 2,
        }
    }

    pub fn message(&self) -> Option<String> {
        match self {
            Failure::Semantic(m) | Failure::Usage(m) => Some(m.clone()),
            Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => None,
            Failure::Io(e) => Some(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn semantic(e: impl ToString) -> Failure {
    Failure::Semantic(e.to_string())
}

/// Guard violations are usage errors; anything else is semantic.
fn classify(e: Error) -> Failure {
    match e {
        Error::OrderTooLarge { .. } | Error::BadOrder { .. } => usage(e),
        other => semantic(other),
    }
}

type Outcome = Result<(), Failure>;

/// Runs one command. `input` supplies the matrix text when `--file` is absent.
pub fn run(cli: &Cli, input: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let mut ctx = Ctx {
        format: cli.format,
        file: cli.file.clone(),
        input,
        out,
        guards: Guards::from_env(),
    };
    match &cli.command {
        Command::Gen { family } => ctx.gen(family),
        Command::Check(args) => ctx.check(args),
        Command::Analyze => ctx.analyze(),
        Command::Enum(args) => ctx.enumerate(args),
        Command::Count(args) => ctx.count(args),
        Command::Search { kind } => ctx.search(kind),
        Command::Transform { op } => ctx.transform(op),
    }
}

struct Ctx<'a> {
    format: Format,
    file: Option<PathBuf>,
    input: &'a mut dyn Read,
    out: &'a mut dyn Write,
    guards: Guards,
}

fn positive(n: usize) -> Result<usize, Failure> {
    if n == 0 {
        return Err(usage("order must be positive"));
    }
    Ok(n)
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

#[derive(Serialize)]
struct MoveJson {
    sign: i8,
    p: usize,
    q: usize,
    k: usize,
    l: usize,
}

impl From<&InterchangeMove> for MoveJson {
    fn from(m: &InterchangeMove) -> Self {
        MoveJson {
            sign: m.sign,
            p: m.p + 1,
            q: m.q + 1,
            k: m.k + 1,
            l: m.l + 1,
        }
    }
}

fn move_line(m: &InterchangeMove) -> String {
    format!("{:+} {} {} {} {}", m.sign, m.p + 1, m.q + 1, m.k + 1, m.l + 1)
}

fn matrix_value(a: &Asm) -> serde_json::Value {
    serde_json::from_str(&format::asm_json(a)).expect("emitted JSON parses")
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serialises")
}

impl Ctx<'_> {
    fn read_grid(&mut self) -> Result<Grid, Failure> {
        let mut text = String::new();
        match &self.file {
            Some(path) => {
                text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            None => {
                self.input.read_to_string(&mut text)?;
            }
        }
        format::parse(&text).map_err(|e| usage(format!("cannot parse input: {e}")))
    }

    fn read_asm(&mut self) -> Result<Asm, Failure> {
        let g = self.read_grid()?;
        validate(g).map_err(|e| semantic(format!("input is not an ASM: {e}")))
    }

    fn line(&mut self, s: impl AsRef<str>) -> Outcome {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    fn matrix(&mut self, a: &Asm) -> Outcome {
        let s = format::emit(a, self.format);
        self.line(s)
    }

    /// Matrices one per line in JSON, blank-line separated in text.
    fn matrices<'m>(&mut self, list: impl IntoIterator<Item = &'m Asm>) -> Outcome {
        for (t, a) in list.into_iter().enumerate() {
            if t > 0 && self.format == Format::Text {
                self.line("")?;
            }
            self.matrix(a)?;
        }
        Ok(())
    }

    fn gen(&mut self, family: &Family) -> Outcome {
        let a = match family {
            Family::Diamond { n, reversed } => diamond(positive(*n)?, *reversed),
            Family::Hollowed { n, variant } => {
                let v = match variant {
                    Some(v) => *v,
                    None => *HollowVariant::legal_for(*n)
                        .first()
                        .ok_or_else(|| usage(format!("no hollowed diamond of order {n}; n must be even and >= 4")))?,
                };
                hollowed_diamond(*n, v).map_err(usage)?
            }
            Family::NearDiamond { n } => near_diamond(*n).map_err(usage)?,
            Family::NearHollowed { n } => hollowed_near_diamond(*n).map_err(usage)?,
            Family::FromRowSums { sums } => from_row_sums(&SumVector::new(sums.clone())).map_err(usage)?,
            Family::Expand { embedding } => {
                let g = self.read_grid()?;
                let e = elementary_expansion(&g);
                self.matrix(&e.asm)?;
                if *embedding {
                    match self.format {
                        Format::Text => {
                            let join =
                                |v: &[usize]| one_based(v).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                            let (r, c) = (join(&e.rows), join(&e.cols));
                            self.line(format!("rows {r}"))?;
                            self.line(format!("cols {c}"))?;
                        }
                        Format::Json => {
                            let s = serde_json::json!({"rows": one_based(&e.rows), "cols": one_based(&e.cols)});
                            self.line(s.to_string())?;
                        }
                    }
                }
                return Ok(());
            }
            Family::AttachD3 { at, rows, cols, anchor } => {
                let host = self.read_asm().map_err(|e| match e {
                    Failure::Semantic(m) => Failure::Usage(m),
                    other => other,
                })?;
                attach_d3(&host, at.zero_based(), rows.zero_based(), cols.zero_based(), *anchor).map_err(usage)?
            }
            Family::Unicyclic { signs, seed } => {
                let parsed = signs
                    .chars()
                    .filter(|c| !matches!(c, ',' | ' '))
                    .map(|c| match c {
                        '+' => Ok(1),
                        '-' => Ok(-1),
                        other => Err(usage(format!("cycle signs are '+' or '-', got '{other}'"))),
                    })
                    .collect::<Result<Vec<i8>, _>>()?;
                let cycle = CycleSigns::new(parsed).map_err(usage)?;
                basic_unicyclic(&cycle, *seed)
            }
            Family::MinTermRank { n } => min_term_rank_asm(positive(*n)?),
            Family::Permutation { images } => {
                let p = Permutation::from_one_based(images).map_err(usage)?;
                permutation_asm(&p)
            }
        };
        self.matrix(&a)
    }

    fn check(&mut self, args: &CheckArgs) -> Outcome {
        #[derive(Serialize)]
        struct Report {
            valid: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            error: Option<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            symmetric: Option<bool>,
            #[serde(skip_serializing_if = "Option::is_none")]
            zero_diagonal: Option<bool>,
            #[serde(skip_serializing_if = "Option::is_none")]
            maximal: Option<bool>,
        }
        let g = self.read_grid()?;
        let symmetric = args.symmetric.then(|| g.is_symmetric());
        let zero_diagonal = args
            .zero_diagonal
            .then(|| g.is_square() && (0..g.rows()).all(|i| g.get(i, i) == 0));
        let (valid, error, maximal) = match validate(g) {
            Ok(a) => (true, None, args.maximal.then(|| is_maximal(&a))),
            Err(e) => (false, Some(e.to_string()), None),
        };
        let r = Report {
            valid,
            error,
            symmetric,
            zero_diagonal,
            maximal,
        };
        match self.format {
            Format::Json => self.line(pretty(&r))?,
            Format::Text => {
                self.line(format!("valid: {}", r.valid))?;
                if let Some(e) = &r.error {
                    self.line(format!("error: {e}"))?;
                }
                for (name, v) in [
                    ("symmetric", r.symmetric),
                    ("zero_diagonal", r.zero_diagonal),
                    ("maximal", r.maximal),
                ] {
                    if let Some(v) = v {
                        self.line(format!("{name}: {v}"))?;
                    }
                }
            }
        }
        let pass = r.valid
            && [r.symmetric, r.zero_diagonal, r.maximal]
                .iter()
                .all(|v| v.unwrap_or(true));
        if pass {
            Ok(())
        } else {
            Err(Failure::Semantic(String::new()))
        }
    }

    fn analyze(&mut self) -> Outcome {
        #[derive(Serialize)]
        struct Cover {
            rows: Vec<usize>,
            cols: Vec<usize>,
        }
        #[derive(Serialize)]
        struct Report {
            n: usize,
            sigma: usize,
            sigma_star: usize,
            row_sums: Vec<usize>,
            col_sums: Vec<usize>,
            term_rank: usize,
            cover: Cover,
            bound: usize,
            connected: bool,
            components: usize,
            symmetric: bool,
            zero_diagonal: bool,
            maximal: bool,
        }
        let a = self.read_asm()?;
        let p = a.pattern();
        let cover = min_line_cover(&a);
        let r = Report {
            n: a.n(),
            sigma: a.sigma(),
            sigma_star: a.sigma_star(),
            row_sums: p.row_sums().values().to_vec(),
            col_sums: p.col_sums().values().to_vec(),
            term_rank: term_rank(&a),
            cover: Cover {
                rows: one_based(&cover.rows),
                cols: one_based(&cover.cols),
            },
            bound: term_rank_lower_bound(a.n()),
            connected: is_connected(&a),
            components: components(&a).len(),
            symmetric: a.is_symmetric(),
            zero_diagonal: a.has_zero_diagonal(),
            maximal: is_maximal(&a),
        };
        self.line(pretty(&r))
    }

    fn filter(names: &[FilterName]) -> Filter {
        names.iter().fold(Filter::none(), |f, name| match name {
            FilterName::Connected => f.connected(),
            FilterName::Symmetric => f.symmetric(),
            FilterName::ZeroDiagonal => f.zero_diagonal(),
            FilterName::Permutation => f.permutation(),
        })
    }

    fn enumerate(&mut self, args: &EnumArgs) -> Outcome {
        let n = positive(args.n)?;
        let filter = Self::filter(&args.filter);
        if args.count_only {
            let c = count_with(n, filter, &self.guards).map_err(classify)?;
            return self.line(c.to_string());
        }
        let Some(stat) = args.stat else {
            let all = enumerate_with(n, filter, &self.guards).map_err(classify)?;
            for (t, a) in all.enumerate() {
                if t > 0 && self.format == Format::Text {
                    self.line("")?;
                }
                self.matrix(&a)?;
            }
            return Ok(());
        };
        let direction = match (args.min, args.max) {
            (true, false) => Direction::Min,
            (false, true) => Direction::Max,
            _ => return Err(usage("--stat needs --min or --max")),
        };
        let statistic = match stat {
            StatName::Sigma => Statistic::Sigma,
            StatName::TermRank => Statistic::TermRank,
        };
        let Some(best) = extremal_scan_with(n, filter, statistic, direction, &self.guards).map_err(classify)? else {
            return Err(semantic(format!("no ASM of order {n} passes the filter")));
        };
        match self.format {
            Format::Text => {
                self.line(format!("value {}", best.value))?;
                self.line(format!("attainers {}", best.attainers.len()))?;
                if args.list {
                    self.line("")?;
                    self.matrices(&best.attainers)?;
                }
            }
            Format::Json => {
                let mut v = serde_json::json!({
                    "stat": match stat { StatName::Sigma => "sigma", StatName::TermRank => "term_rank" },
                    "direction": if direction == Direction::Min { "min" } else { "max" },
                    "value": best.value,
                    "attainers": best.attainers.len(),
                });
                if args.list {
                    v["matrices"] = best.attainers.iter().map(matrix_value).collect();
                }
                self.line(pretty(&v))?;
            }
        }
        Ok(())
    }

    fn count(&mut self, args: &CountArgs) -> Outcome {
        let n = positive(args.n)?;
        let c = match args.method {
            Method::Formula => asm_count_formula(n).to_string(),
            Method::Enum => count_with(n, Filter::none(), &self.guards)
                .map_err(classify)?
                .to_string(),
        };
        self.line(c)
    }

    fn zeta_report(&mut self, hit: Option<ZetaHit>, n_max: usize) -> Outcome {
        let Some(hit) = hit else {
            return Err(semantic(format!(
                "no ASM of order at most {n_max} contains the pattern"
            )));
        };
        let (rows, cols) = (one_based(&hit.witness.rows), one_based(&hit.witness.cols));
        match self.format {
            Format::Text => {
                let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                self.line(hit.order.to_string())?;
                self.line(format!("rows {}", join(&rows)))?;
                self.line(format!("cols {}", join(&cols)))?;
                self.matrix(&hit.asm)
            }
            Format::Json => {
                let v = serde_json::json!({
                    "order": hit.order,
                    "rows": rows,
                    "cols": cols,
                    "asm": matrix_value(&hit.asm),
                });
                self.line(pretty(&v))
            }
        }
    }

    fn search(&mut self, kind: &SearchKind) -> Outcome {
        match kind {
            SearchKind::Zeta { max_n } => {
                let b = self.read_grid()?;
                let n_max = max_n.unwrap_or(self.guards.unfiltered);
                let hit = zeta(&b, n_max, &self.guards).map_err(classify)?;
                self.zeta_report(hit, n_max)
            }
            SearchKind::ZetaP { max_n } => {
                let b = self.read_grid()?;
                if !b.is_square() {
                    return Err(usage("a principal submatrix must be square"));
                }
                let n_max = max_n.unwrap_or(self.guards.symmetric);
                let hit = zeta_p(&b, n_max, &self.guards).map_err(classify)?;
                self.zeta_report(hit, n_max)
            }
            SearchKind::ClassSize { formula, copies } => {
                let size = match (formula, copies) {
                    (Some(f), Some(l)) => {
                        let kind = match f {
                            FormulaName::DirectSum => ClassFormula::DirectSumOfD3,
                            FormulaName::WithD4 => ClassFormula::WithD4,
                        };
                        class_size_formula(kind, *l).map_err(usage)?.to_string()
                    }
                    _ => {
                        let a = self.read_asm()?;
                        equivalence_class(&a, &self.guards).map_err(classify)?.len().to_string()
                    }
                };
                self.line(size)
            }
        }
    }

    fn transform(&mut self, op: &TransformOp) -> Outcome {
        match op {
            TransformOp::Reduce { trace } => {
                let a = self.read_asm()?;
                let seq = reduce_to_identity(&a);
                let steps = seq.trace(&Asm::identity(a.n())).map_err(semantic)?;
                let intermediates = seq.len().saturating_sub(1);
                match self.format {
                    Format::Text => {
                        for m in seq.moves() {
                            self.line(move_line(m))?;
                        }
                        self.line(format!("intermediates {intermediates}"))?;
                        if *trace {
                            self.line("")?;
                            self.matrices(&steps)?;
                        }
                    }
                    Format::Json => {
                        let moves: Vec<MoveJson> = seq.moves().iter().map(MoveJson::from).collect();
                        let mut v = serde_json::json!({"moves": moves, "intermediates": intermediates});
                        if *trace {
                            v["trace"] = steps.iter().map(matrix_value).collect();
                        }
                        self.line(pretty(&v))?;
                    }
                }
                Ok(())
            }
            TransformOp::Apply { moves } => {
                if moves.len() % 5 != 0 {
                    return Err(usage("moves are groups of five numbers: sign p q k l"));
                }
                let parsed = moves
                    .chunks(5)
                    .map(|c| {
                        let sign = match c[0] {
                            1 => 1,
                            -1 => -1,
                            s => return Err(usage(format!("move sign must be 1 or -1, got {s}"))),
                        };
                        let idx = |v: i64| usize::try_from(v).map_err(|_| usage(format!("bad index {v}")));
                        InterchangeMove::from_one_based(idx(c[1])?, idx(c[2])?, idx(c[3])?, idx(c[4])?, sign)
                            .map_err(usage)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let mut a = self.read_asm()?;
                for m in &parsed {
                    a = apply(&a, m).map_err(|e| semantic(format!("move {}: {e}", move_line(m))))?;
                }
                self.matrix(&a)
            }
            TransformOp::Extensions => {
                let a = self.read_asm()?;
                let moves = elementary_extensions(&a);
                match self.format {
                    Format::Text => {
                        for m in &moves {
                            self.line(move_line(m))?;
                        }
                        Ok(())
                    }
                    Format::Json => {
                        let v: Vec<MoveJson> = moves.iter().map(MoveJson::from).collect();
                        self.line(serde_json::to_string(&v).expect("plain data serialises"))
                    }
                }
            }
        }
    }
}
