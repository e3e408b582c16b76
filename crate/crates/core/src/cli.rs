//! Command-line front end.
//!
//! Results go to stdout in machine-readable form (plain values, JSON or
//! JSONL); diagnostics go to stderr. Exit codes: 0 success, 1 a verification
//! came out false, 2 bad usage or input, 3 search budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cock::{cock_construct, cock_count, cock_family, cock_locate, CockParams};
use crate::debruijn::{
    acyclic_from_cyclic, count_acyclic, count_cyclic, enumerate_all_cyclic, generate_cyclic, is_acyclic_debruijn,
    is_cyclic_debruijn, parse_symbols, Generator,
};
use crate::lattice::{parse_ascii, Cell, ColoredCellSet, ColoredPolyomino, JsonShape, LatticeMap, Polyomino};
use crate::search::{
    count_prismatic_colorings, enumerate_prismatic_colorings, min_size_with_instances, shape_census, verify_cell_set,
    SearchConfig, SearchError,
};
use crate::shapes::{pyramid, pyramid_trimmed, role_partition, row_profile, ziggurat, Trim};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "prismatic", version, about = "De Bruijn and prismatic polyominoes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// De Bruijn sequences.
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Row-rotation construction of square-window colorings.
    #[command(subcommand)]
    Cock(CockCommand),
    /// Shape families and structural counts.
    #[command(subcommand)]
    Shapes(ShapeCommand),
    /// Check that a colored shape holds every pattern coloring exactly once.
    Verify {
        /// Colored shape (JSON or ASCII; `-` for stdin).
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        pattern: String,
        /// Color count for ASCII input (default: largest digit present).
        #[arg(long)]
        colors: Option<u8>,
        /// Print the full certificate as JSON.
        #[arg(long)]
        json: bool,
    },
    /// All prismatic colorings of a shape, as JSONL.
    Enumerate {
        #[arg(long)]
        shape: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u8,
        /// Write colorings here and print only their number.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Print only the number of colorings.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Smallest shape with a given number of pattern instances.
    MinSize {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        instances: usize,
        #[arg(long)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Shapes of a given size in a box that admit a prismatic coloring.
    ShapeCensus {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        size: usize,
        /// Bounding box as `WxH`.
        #[arg(long, value_parser = parse_bbox)]
        bbox: (usize, usize),
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Apply a lattice map (row-shift, third-turn, transpose) to a shape.
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long)]
        colors: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// Convert a shape between JSON and ASCII.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        colors: Option<u8>,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Subcommand, Debug)]
enum SeqCommand {
    /// Print one cyclic sequence (or an acyclic reading of it).
    Generate {
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        order: u32,
        /// `greedy` or `eulerian:SEED`.
        #[arg(long, default_value = "greedy")]
        method: String,
        /// Print the acyclic sequence read from this start index.
        #[arg(long)]
        acyclic_start: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check a sequence such as `(1,1,2,2)`.
    Verify {
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        acyclic: bool,
    },
    /// Every cyclic sequence, one per rotation class.
    Enumerate {
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        order: u32,
    },
}

#[derive(Args, Debug)]
struct CockArgs {
    /// JSON parameter file: {"n":3,"r0":[...],"start":0,"sigma":[...]}.
    #[arg(long, conflicts_with_all = ["colors", "sequence", "start", "sigma"])]
    params: Option<PathBuf>,
    /// Color count; uses the least de Bruijn sequence unless `--sequence` is given.
    #[arg(long)]
    colors: Option<u8>,
    #[arg(long)]
    sequence: Option<String>,
    #[arg(long)]
    start: Option<usize>,
    /// Permutation of 1..=n², comma separated (default: identity).
    #[arg(long)]
    sigma: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CockCommand {
    /// Build the colored square.
    Construct {
        #[command(flatten)]
        params: CockArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Row index and 1-based column of the square with the given rows.
    Locate {
        #[command(flatten)]
        params: CockArgs,
        /// Top row colors `w,x`.
        #[arg(long)]
        top: String,
        /// Bottom row colors `y,z`.
        #[arg(long)]
        bottom: String,
    },
    /// Every parameter choice, as JSONL.
    Family {
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum ShapeCommand {
    Ziggurat {
        height: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    Pyramid {
        height: u32,
        /// `corner:k`, for example `bottom-right-row:2`.
        #[arg(long)]
        trim: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    Rect {
        width: u32,
        height: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    Straight {
        length: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Row lengths and T-tetromino top-cell counts, top row first.
    Profile {
        #[arg(long)]
        input: PathBuf,
    },
    /// L-tromino role partition.
    Roles {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CountCommand {
    /// Parameter choices of the row-rotation construction.
    Cock {
        #[arg(long)]
        colors: u32,
    },
    Cyclic {
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        order: u32,
    },
    Acyclic {
        #[arg(long)]
        colors: u32,
        #[arg(long)]
        order: u32,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let code = match e {
            SearchError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure::usage(message)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // A closed pipe (`| head`) is a normal way for a reader to stop.
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure { code: EXIT_OK, message: String::new() };
        }
        Failure::usage(e)
    }
}

type CliResult = Result<i32, Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Seq(c) => seq(c, out),
        Command::Cock(c) => cock(c, out),
        Command::Shapes(c) => shapes(c, out),
        Command::Verify { input, pattern, colors, json } => {
            let p = parse_pattern(&pattern)?;
            let set = load_colored(&input, colors)?;
            let verdict = verify_cell_set(&set, &p)?;
            if json {
                writeln!(out, "{}", to_json(&verdict.summary()))?;
            } else {
                writeln!(out, "de Bruijn: {}", verdict.is_debruijn)?;
                for m in &verdict.missing {
                    writeln!(err, "missing {m}")?;
                }
                for (d, c) in &verdict.duplicated {
                    writeln!(err, "duplicated {d} x{c}")?;
                }
            }
            Ok(if verdict.is_debruijn { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Enumerate { shape, pattern, colors, emit, count, search } => {
            let p = parse_pattern(&pattern)?;
            let shape = load_shape(&shape)?;
            let cfg = search_config(&search)?;
            if count && emit.is_none() {
                writeln!(out, "{}", count_prismatic_colorings(&shape, &p, colors, &cfg)?)?;
                return Ok(EXIT_OK);
            }
            let sols = enumerate_prismatic_colorings(&shape, &p, colors, &cfg)?;
            match emit {
                Some(path) => {
                    let mut f = io::BufWriter::new(fs::File::create(&path)?);
                    write_jsonl(&mut f, &sols)?;
                    f.flush()?;
                    writeln!(out, "{}", sols.len())?;
                }
                None => write_jsonl(out, &sols)?,
            }
            writeln!(err, "{} colorings", sols.len())?;
            Ok(EXIT_OK)
        }
        Command::MinSize { pattern, instances, cap, format, search } => {
            let p = parse_pattern(&pattern)?;
            let r = min_size_with_instances(&p, instances, cap, &search_config(&search)?)?;
            match format {
                Format::Json => {
                    let witnesses: Vec<JsonShape> = r.witnesses.iter().map(JsonShape::from_polyomino).collect();
                    writeln!(out, "{}", to_json(&MinSizeJson { size: r.size, witnesses }))?;
                }
                Format::Ascii => {
                    writeln!(out, "{}", r.size)?;
                    for w in &r.witnesses {
                        write!(out, "\n{}", w.to_ascii())?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::ShapeCensus { pattern, colors, size, bbox, format, search } => {
            let p = parse_pattern(&pattern)?;
            let entries = shape_census(&p, colors, size, bbox, &search_config(&search)?)?;
            for e in &entries {
                match format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        to_json(&CensusJson { colorings: e.colorings, shape: JsonShape::from_polyomino(&e.shape) })
                    )?,
                    Format::Ascii => write!(out, "{}\n{}\n", e.colorings, e.shape.to_ascii())?,
                }
            }
            writeln!(err, "{} shapes", entries.len())?;
            Ok(EXIT_OK)
        }
        Command::Transform { input, map, colors, format } => {
            let map: LatticeMap = map.parse().map_err(Failure::usage)?;
            let image = load_colored(&input, colors)?.map(map);
            if !image.is_connected() {
                writeln!(err, "note: the image is not connected; cells are left in place")?;
                match format {
                    Format::Json => writeln!(out, "{}", JsonShape::from_colored_set(&image).to_json())?,
                    Format::Ascii => write!(out, "{}", image.to_ascii())?,
                }
                return Ok(EXIT_OK);
            }
            let cp = image.into_polyomino().map_err(Failure::usage)?;
            emit_colored(out, &cp, format)?;
            Ok(EXIT_OK)
        }
        Command::Count(c) => {
            let value = match c {
                CountCommand::Cock { colors } => cock_count(colors),
                CountCommand::Cyclic { colors, order } => count_cyclic(colors, order),
                CountCommand::Acyclic { colors, order } => count_acyclic(colors, order),
            };
            writeln!(out, "{value}")?;
            Ok(EXIT_OK)
        }
        Command::Render { input, format, colors } => {
            let text = read_input(&input)?;
            let cells = parse_any(&text)?;
            if cells.iter().all(|(_, k)| k.is_none()) {
                let p = Polyomino::from_cells(cells.into_iter().map(|(c, _)| c)).map_err(Failure::usage)?;
                emit_shape(out, &p, format)?;
            } else {
                let cp = colored_from_cells(cells, colors)?.into_polyomino().map_err(Failure::usage)?;
                emit_colored(out, &cp, format)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn seq(cmd: SeqCommand, out: &mut dyn Write) -> CliResult {
    match cmd {
        SeqCommand::Generate { colors, order, method, acyclic_start, json } => {
            let method: Generator = method.parse().map_err(Failure::usage)?;
            let mut s = generate_cyclic(colors, order, method).map_err(Failure::usage)?;
            if let Some(start) = acyclic_start {
                s = acyclic_from_cyclic(&s, start).map_err(Failure::usage)?;
            }
            if json {
                writeln!(out, "{}", to_json(&s.to_json()))?;
            } else {
                writeln!(out, "{s}")?;
            }
            Ok(EXIT_OK)
        }
        SeqCommand::Verify { sequence, colors, order, acyclic } => {
            let symbols = parse_symbols(&sequence).map_err(Failure::usage)?;
            let ok = if acyclic {
                is_acyclic_debruijn(&symbols, colors, order)
            } else {
                is_cyclic_debruijn(&symbols, colors, order)
            };
            writeln!(out, "de Bruijn: {ok}")?;
            Ok(if ok { EXIT_OK } else { EXIT_FALSE })
        }
        SeqCommand::Enumerate { colors, order } => {
            for s in enumerate_all_cyclic(colors, order).map_err(Failure::usage)? {
                writeln!(out, "{s}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn cock_params(args: &CockArgs) -> Result<CockParams, Failure> {
    if let Some(path) = &args.params {
        let text = read_input(path)?;
        return serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())));
    }
    let n = args.colors.ok_or_else(|| Failure::usage("give either --params FILE or --colors N"))?;
    let r0 = match &args.sequence {
        Some(s) => parse_symbols(s).map_err(Failure::usage)?,
        None => generate_cyclic(n, 2, Generator::GreedyLeast).map_err(Failure::usage)?.symbols().to_vec(),
    };
    let len = n as usize * n as usize;
    let sigma = match &args.sigma {
        Some(s) => s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Failure::usage(format!("sigma: {e}"))))
            .collect::<Result<_, _>>()?,
        None => (1..=len).collect(),
    };
    Ok(CockParams { n, r0, start: args.start.unwrap_or(0), sigma })
}

fn parse_pair(s: &str) -> Result<(u8, u8), Failure> {
    let parts = parse_symbols(s).map_err(Failure::usage)?;
    match parts[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Failure::usage(format!("expected two colors, got {s:?}"))),
    }
}

fn cock(cmd: CockCommand, out: &mut dyn Write) -> CliResult {
    match cmd {
        CockCommand::Construct { params, format } => {
            let cp = cock_construct(&cock_params(&params)?).map_err(Failure::usage)?;
            emit_colored(out, &cp, format)?;
        }
        CockCommand::Locate { params, top, bottom } => {
            let (w, x) = parse_pair(&top)?;
            let (y, z) = parse_pair(&bottom)?;
            let (i, j) = cock_locate(&cock_params(&params)?, w, x, y, z).map_err(Failure::usage)?;
            writeln!(out, "{i} {j}")?;
        }
        CockCommand::Family { colors, limit } => {
            let family = cock_family(colors).map_err(Failure::usage)?;
            for p in family.take(limit.unwrap_or(usize::MAX)) {
                writeln!(out, "{}", to_json(&p))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn shapes(cmd: ShapeCommand, out: &mut dyn Write) -> CliResult {
    let (shape, format) = match cmd {
        ShapeCommand::Ziggurat { height, format } => (ziggurat(height).map_err(Failure::usage)?, format),
        ShapeCommand::Pyramid { height, trim, format } => {
            let p = match trim {
                None => pyramid(height),
                Some(spec) => {
                    let (corner, k) = spec
                        .rsplit_once(':')
                        .ok_or_else(|| Failure::usage(format!("trim must look like corner:k, got {spec:?}")))?;
                    let trim: Trim = corner.parse().map_err(Failure::usage)?;
                    let k: u32 = k.parse().map_err(|e| Failure::usage(format!("trim length: {e}")))?;
                    pyramid_trimmed(height, trim, k)
                }
            };
            (p.map_err(Failure::usage)?, format)
        }
        ShapeCommand::Rect { width, height, format } => {
            if width == 0 || height == 0 {
                return Err(Failure::usage("rectangle sides must be positive"));
            }
            (Polyomino::rectangle(width, height), format)
        }
        ShapeCommand::Straight { length, format } => {
            if length == 0 {
                return Err(Failure::usage("length must be positive"));
            }
            (Polyomino::straight(length), format)
        }
        ShapeCommand::Profile { input } => {
            writeln!(out, "{}", to_json(&row_profile(&load_shape(&input)?)))?;
            return Ok(EXIT_OK);
        }
        ShapeCommand::Roles { input } => {
            writeln!(out, "{}", to_json(&role_partition(&load_shape(&input)?)))?;
            return Ok(EXIT_OK);
        }
    };
    emit_shape(out, &shape, format)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct MinSizeJson {
    size: usize,
    witnesses: Vec<JsonShape>,
}

#[derive(Serialize)]
struct CensusJson {
    colorings: u64,
    shape: JsonShape,
}

fn parse_bbox(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected WxH, got {s:?}"))?;
    let side = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((side(w)?, side(h)?))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn write_jsonl(out: &mut dyn Write, sols: &[ColoredPolyomino]) -> io::Result<()> {
    for cp in sols {
        writeln!(out, "{}", JsonShape::from_colored(cp).to_json())?;
    }
    Ok(())
}

fn emit_shape(out: &mut dyn Write, p: &Polyomino, format: Format) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", JsonShape::from_polyomino(p).to_json()),
        Format::Ascii => write!(out, "{}", p.to_ascii()),
    }
}

fn emit_colored(out: &mut dyn Write, cp: &ColoredPolyomino, format: Format) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", JsonShape::from_colored(cp).to_json()),
        Format::Ascii => write!(out, "{}", cp.to_ascii()),
    }
}

fn search_config(args: &SearchArgs) -> Result<SearchConfig, Failure> {
    Ok(SearchConfig::from_env()?.with_threads(args.threads))
}

/// A built-in pattern name or a shape file.
pub fn parse_pattern(name: &str) -> Result<Polyomino, String> {
    let builtin = match name {
        "monomino" => Some(Polyomino::monomino()),
        "square" => Some(Polyomino::square_tetromino()),
        "zee" => Some(Polyomino::z_tetromino()),
        "tee" => Some(Polyomino::t_tetromino()),
        "ell" => Some(Polyomino::l_tetromino()),
        "ltromino" => Some(Polyomino::l_tromino()),
        _ => None,
    };
    if let Some(p) = builtin {
        return Ok(p);
    }
    if let Some(k) = name.strip_prefix("straight:") {
        return match k.parse::<u32>() {
            Ok(k) if k > 0 => Ok(Polyomino::straight(k)),
            _ => Err(format!("bad straight length in {name:?}")),
        };
    }
    let path = Path::new(name);
    if path.exists() {
        return load_shape(path).map_err(|f| f.message);
    }
    Err(format!("unknown pattern {name:?} (expected square, zee, tee, ell, ltromino, straight:K or a file)"))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Cells with optional colors from JSON or ASCII text.
fn parse_any(text: &str) -> Result<Vec<(Cell, Option<u8>)>, Failure> {
    if text.trim_start().starts_with('{') {
        let js = JsonShape::from_json(text).map_err(Failure::usage)?;
        Ok(js.cells.iter().map(|c| (Cell::new(c.x, c.y), c.color)).collect())
    } else {
        parse_ascii(text).map_err(Failure::usage)
    }
}

fn json_colors(text: &str) -> Option<u8> {
    if text.trim_start().starts_with('{') {
        JsonShape::from_json(text).ok().and_then(|js| js.n)
    } else {
        None
    }
}

fn colored_from_cells(cells: Vec<(Cell, Option<u8>)>, colors: Option<u8>) -> Result<ColoredCellSet, Failure> {
    let cells: Vec<_> = cells
        .into_iter()
        .map(|(c, k)| k.map(|k| (c, k)).ok_or_else(|| Failure::usage(format!("cell {c} has no color"))))
        .collect::<Result<_, _>>()?;
    let n = colors.or_else(|| cells.iter().map(|&(_, k)| k).max()).ok_or_else(|| Failure::usage("empty shape"))?;
    ColoredCellSet::new(n, cells).map_err(Failure::usage)
}

fn load_colored(path: &Path, colors: Option<u8>) -> Result<ColoredCellSet, Failure> {
    let text = read_input(path)?;
    let colors = colors.or_else(|| json_colors(&text));
    colored_from_cells(parse_any(&text)?, colors)
}

fn load_shape(path: &Path) -> Result<Polyomino, Failure> {
    let text = read_input(path)?;
    Polyomino::from_cells(parse_any(&text)?.into_iter().map(|(c, _)| c))
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("prismatic").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn counts() {
        assert_eq!(run_args(&["count", "cock", "--colors", "3"]).1, "78382080\n");
        assert_eq!(run_args(&["count", "cyclic", "--colors", "2", "--order", "4"]).1, "16\n");
        assert_eq!(run_args(&["count", "acyclic", "--colors", "2", "--order", "4"]).1, "256\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["count", "cock"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["shapes", "ziggurat", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn patterns() {
        assert_eq!(parse_pattern("ltromino").unwrap(), Polyomino::l_tromino());
        assert_eq!(parse_pattern("straight:3").unwrap(), Polyomino::straight(3));
        assert!(parse_pattern("straight:0").is_err());
        assert!(parse_pattern("hexagon").is_err());
    }

    #[test]
    fn sequence_commands() {
        let (code, out, _) = run_args(&["seq", "generate", "--colors", "2", "--order", "2"]);
        assert_eq!((code, out.as_str()), (0, "(1,1,2,2)\n"));
        let (code, out, _) = run_args(&["seq", "verify", "--sequence", "(1,1,1,2)", "--colors", "2", "--order", "2"]);
        assert_eq!((code, out.as_str()), (EXIT_FALSE, "de Bruijn: false\n"));
        let (_, out, _) = run_args(&["seq", "enumerate", "--colors", "3", "--order", "2"]);
        assert_eq!(out.lines().count(), 24);
    }

    #[test]
    fn locate_command() {
        let (code, out, _) = run_args(&[
            "cock",
            "locate",
            "--colors",
            "3",
            "--sequence",
            "(1,1,2,2,3,3,1,3,2)",
            "--top",
            "2,1",
            "--bottom",
            "1,2",
        ]);
        assert_eq!((code, out.as_str()), (0, "1 8\n"));
    }
}
