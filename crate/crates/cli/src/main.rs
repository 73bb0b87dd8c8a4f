mod sheet;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use severi_core::fn2c::{ledger_2c, RouteComparison, RouteRegistry};
use severi_core::fngeneral::{theorem_fn_terms, TangentialDegreeTable};
use severi_core::recursion::{resolve_n, NTable};
use severi_core::store::{load_table, save_table};
use severi_core::{Count, DivisorClass, Error, Surface};

use sheet::{Align, Cell, Format, Sheet};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_MISSING: u8 = 3;

/// Degrees of Severi varieties of rational curves on P2, P1xP1 and the
/// Hirzebruch surfaces F_n, in exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "severi", version)]
struct Cli {
    /// Read a saved table before running (a missing file is an empty table).
    #[arg(long, global = true, value_name = "FILE")]
    load: Option<PathBuf>,
    /// Write the table after running.
    #[arg(long, global = true, value_name = "FILE")]
    save: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print N(D), or N_i(D) with --tangency.
    Count(CountArgs),
    /// Print N over a box of classes.
    Table(TableArgs),
    /// Check that every route to N(2C) on F_n agrees.
    #[command(name = "verify-2c")]
    Verify2c(VerifyArgs),
    /// Dump the zero and pole terms behind N(2C) on F_n.
    Ledger(LedgerArgs),
    /// Evaluate the general F_n formula for one class.
    FnRhs(FnRhsArgs),
    /// Only load and save the table.
    Cache,
}

#[derive(Args, Debug)]
struct CountArgs {
    /// p2, q or f<n>.
    #[arg(long)]
    surface: Surface,
    /// Comma-separated coordinates, e.g. `3` on p2 or `2,0` on f2.
    #[arg(long, allow_hyphen_values = true)]
    class: String,
    /// Order of contact with E.
    #[arg(long, default_value_t = 1)]
    tangency: u32,
    /// Table of externally supplied degrees.
    #[arg(long, value_name = "FILE")]
    tangential: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    surface: Surface,
    /// Largest degree on p2, largest first coordinate otherwise.
    #[arg(long)]
    max_c: i64,
    /// Largest second coordinate (not used on p2).
    #[arg(long)]
    max_f: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    n: u32,
    /// Check every index from --n through this one.
    #[arg(long)]
    through: Option<u32>,
    /// Comma-separated route names (default: all).
    #[arg(long, value_delimiter = ',')]
    routes: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct LedgerArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct FnRhsArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, allow_hyphen_values = true)]
    class: String,
    /// Table holding the N_i(D) with i >= 2 (and N(D) where F_n has no recursion).
    #[arg(long, value_name = "FILE")]
    tangential: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MissingDegree { .. } => EXIT_MISSING,
            Error::Inconsistent(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let mut table = match &cli.load {
        Some(path) if path.exists() => read_table(path)?,
        _ => NTable::new(),
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Count(args) => count(args, &mut table, &mut out),
        Command::Table(args) => table_cmd(args, &mut table, &mut out),
        Command::Verify2c(args) => verify_2c(args, &mut out),
        Command::Ledger(args) => ledger(args, &mut out),
        Command::FnRhs(args) => fn_rhs(args, &mut table, &mut out),
        Command::Cache => cache(&table, &mut out),
    };
    out.flush()?;
    if let Some(path) = &cli.save {
        let file = File::create(path)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
        save_table(&table, BufWriter::new(file))?;
    }
    result
}

fn read_table(path: &Path) -> Result<NTable, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::new(EXIT_MISSING, format!("{}: {e}", path.display())))?;
    load_table(BufReader::new(file)).map_err(|e| {
        let f = Failure::from(e);
        Failure::new(f.code, format!("{}: {}", path.display(), f.message))
    })
}

fn merge(into: &mut NTable, from: &NTable) -> Outcome {
    for (key, entry) in from.iter() {
        into.insert(
            key.class,
            key.tangency,
            entry.value.clone(),
            entry.provenance,
        )?;
    }
    Ok(())
}

fn merge_external(table: &mut NTable, path: Option<&Path>) -> Outcome {
    if let Some(path) = path {
        let external = read_table(path)?;
        merge(table, &external)?;
    }
    Ok(())
}

fn count<W: Write>(args: CountArgs, table: &mut NTable, out: &mut W) -> Outcome {
    let d = DivisorClass::parse(args.surface, &args.class)?;
    if args.tangency == 0 {
        return Err(Failure::new(EXIT_USAGE, "--tangency must be at least 1"));
    }
    if args.tangency > 1 && d.surface().exceptional().is_none() {
        return Err(Failure::new(
            EXIT_USAGE,
            format!(
                "tangency to E needs a Hirzebruch surface, got {}",
                d.surface()
            ),
        ));
    }
    merge_external(table, args.tangential.as_deref())?;
    let value = if args.tangency == 1 {
        resolve_n(d, table)?
    } else {
        table.degree(&d, args.tangency)?
    };
    writeln!(out, "{value}")?;
    Ok(())
}

fn table_cmd<W: Write>(args: TableArgs, table: &mut NTable, out: &mut W) -> Outcome {
    let surface = args.surface;
    let classes: Vec<DivisorClass> = match (surface.rank(), args.max_f) {
        (1, None) => (1..=args.max_c).map(DivisorClass::plane).collect(),
        (1, Some(_)) => return Err(Failure::new(EXIT_USAGE, "--max-f does not apply to p2")),
        (_, None) => {
            return Err(Failure::new(
                EXIT_USAGE,
                format!("--max-f is required on {surface}"),
            ))
        }
        (_, Some(max_f)) => (0..=args.max_c)
            .flat_map(|a| (0..=max_f).map(move |b| (a, b)))
            .filter(|&(a, b)| (a, b) != (0, 0))
            .map(|(a, b)| surface.class(&[a, b]))
            .collect::<Result<_, _>>()?,
    };

    let mut columns: Vec<(&str, Align)> = match surface {
        Surface::Plane => vec![("d", Align::Right)],
        Surface::Quadric => vec![("a", Align::Right), ("b", Align::Right)],
        Surface::Hirzebruch(_) => vec![("alpha", Align::Right), ("beta", Align::Right)],
    };
    columns.extend([
        ("class", Align::Left),
        ("points", Align::Right),
        ("N", Align::Right),
    ]);
    let mut sheet = Sheet::new(&columns);
    let mut missing = Vec::new();
    for d in classes {
        let value = match resolve_n(d, table) {
            Ok(v) => Cell::number(v),
            Err(Error::MissingDegree { class, .. }) => {
                missing.push(class);
                Cell::missing()
            }
            Err(e) => return Err(e.into()),
        };
        let class_json = serde_json::to_value(d).expect("class serializes");
        let mut row: Vec<Cell> = d.coords().iter().map(|&c| Cell::int(c)).collect();
        row.extend([
            Cell::with_json(d.to_string(), class_json),
            Cell::int(d.r0()),
            value,
        ]);
        sheet.push(row);
    }
    sheet.render(args.format, &mut *out)?;
    if let Some(first) = missing.first() {
        return Err(Failure::new(
            EXIT_MISSING,
            format!(
                "{} entries need external data (first: {first}); supply them with --load",
                missing.len()
            ),
        ));
    }
    Ok(())
}

fn verify_2c<W: Write>(args: VerifyArgs, out: &mut W) -> Outcome {
    let through = args.through.unwrap_or(args.n);
    if args.n == 0 || through < args.n {
        return Err(Failure::new(EXIT_USAGE, "need 1 <= --n <= --through"));
    }
    let registry = RouteRegistry::standard();
    let names: Vec<&str> = if args.routes.is_empty() {
        registry.names()
    } else {
        args.routes.iter().map(String::as_str).collect()
    };
    let routes = registry.select(&names)?;

    let mut columns = vec![("n", Align::Right)];
    columns.extend(routes.iter().map(|r| (r.name(), Align::Right)));
    columns.push(("agree", Align::Left));
    let mut sheet = Sheet::new(&columns);
    let mut failed = Vec::new();
    for n in args.n..=through {
        let cmp = RouteComparison::run(&routes, n);
        let mut row = vec![Cell::int(i64::from(n))];
        for (_, v) in &cmp.values {
            row.push(match v {
                Ok(v) => Cell::number(v),
                Err(e) => Cell::with_json(format!("error: {e}"), Value::Null),
            });
        }
        let ok = cmp.agrees();
        row.push(Cell::with_json(
            if ok { "yes" } else { "NO" },
            Value::Bool(ok),
        ));
        sheet.push(row);
        if !ok {
            failed.push(n);
        }
    }
    sheet.render(args.format, &mut *out)?;
    if !failed.is_empty() {
        return Err(Failure::new(
            EXIT_MISMATCH,
            format!("routes disagree at n = {failed:?}"),
        ));
    }
    Ok(())
}

fn ledger<W: Write>(args: LedgerArgs, out: &mut W) -> Outcome {
    if args.n == 0 {
        return Err(Failure::new(EXIT_USAGE, "--n must be at least 1"));
    }
    let ledger = ledger_2c(args.n);
    let degree = ledger.solve()?;
    let mut sheet = Sheet::new(&[
        ("side", Align::Left),
        ("case", Align::Left),
        ("k", Align::Right),
        ("count", Align::Right),
        ("multiplicity", Align::Right),
        ("contribution", Align::Right),
    ]);
    let row =
        |side: &str, case: &str, k: Option<u32>, count: Cell, mult: Cell, contribution: &Count| {
            vec![
                Cell::text(side),
                Cell::text(case),
                k.map_or_else(
                    || Cell::with_json("", Value::Null),
                    |k| Cell::int(i64::from(k)),
                ),
                count,
                mult,
                Cell::number(contribution),
            ]
        };
    let blank = || Cell::with_json("", Value::Null);
    let nn = i64::from(args.n);
    sheet.push(row(
        "zero",
        "N(2C)",
        None,
        Cell::number(&degree),
        Cell::int(nn),
        &(&degree * nn),
    ));
    for (side, terms) in [("zero", &ledger.zero_terms), ("pole", &ledger.pole_terms)] {
        for t in terms {
            sheet.push(row(
                side,
                t.case,
                t.k,
                Cell::number(&t.count),
                Cell::int(t.multiplicity),
                &t.contribution(),
            ));
        }
    }
    sheet.push(row(
        "zero",
        "total",
        None,
        blank(),
        blank(),
        &ledger.zero_total(&degree),
    ));
    sheet.push(row(
        "pole",
        "total",
        None,
        blank(),
        blank(),
        &ledger.pole_total(),
    ));
    sheet.render(args.format, &mut *out)?;
    Ok(())
}

fn fn_rhs<W: Write>(args: FnRhsArgs, table: &mut NTable, out: &mut W) -> Outcome {
    let surface = Surface::hirzebruch(args.n)?;
    let d = DivisorClass::parse(surface, &args.class)?;
    merge_external(table, args.tangential.as_deref())?;
    let mut tangential = TangentialDegreeTable::from_table(args.n, table)?;
    tangential.autofill_plain(d)?;
    merge(table, tangential.table())?;
    let rhs = theorem_fn_terms(d, args.n, &tangential)?;

    let mut sheet = Sheet::new(&[("quantity", Align::Left), ("value", Align::Right)]);
    sheet.push(vec![
        Cell::text("class"),
        Cell::with_json(
            d.to_string(),
            serde_json::to_value(d).expect("class serializes"),
        ),
    ]);
    sheet.push(vec![Cell::text("first sum"), Cell::number(&rhs.first_sum)]);
    for (t, v) in &rhs.by_parts {
        sheet.push(vec![Cell::text(format!("t = {t} sum")), Cell::number(v)]);
    }
    sheet.push(vec![Cell::text("rhs"), Cell::number(rhs.total())]);
    sheet.push(vec![Cell::text("rhs / n"), Cell::number(rhs.over_n())]);
    sheet.render(args.format, &mut *out)?;
    Ok(())
}

fn cache<W: Write>(table: &NTable, out: &mut W) -> Outcome {
    let mut counts: Vec<(Surface, usize)> = Vec::new();
    for (key, _) in table.iter() {
        let s = key.class.surface();
        match counts.iter_mut().find(|(t, _)| *t == s) {
            Some((_, c)) => *c += 1,
            None => counts.push((s, 1)),
        }
    }
    for (s, c) in &counts {
        writeln!(out, "{s}\t{c}")?;
    }
    writeln!(out, "total\t{}", table.len())?;
    Ok(())
}
