mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qpart_core::classes::{generate_class, members_of_weight, signed_counts_with, ClassId, SignConvention};
use qpart_core::verify::{verify, verify_all, TheoremId, VerificationReport};
use qpart_core::SeriesId;
use serde_json::Value;

use render::TableRow;

#[derive(Parser, Debug)]
#[command(name = "qpart", version)]
#[command(about = "Exact q-series expansion and Legendre-type theorem checks for partitions with initial repetitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    Structural,
    OddTail,
}

impl From<Convention> for SignConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Structural => SignConvention::Structural,
            Convention::OddTail => SignConvention::OddTail,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficients of a named series
    Expand {
        /// Series identifier, e.g. `euler`, `theta_prod(8,1,+1)`, `slater9_lhs`
        #[arg(long)]
        series: String,
        /// Number of coefficients
        #[arg(long, visible_alias = "series-order", env = "QPART_DEFAULT_ORDER", default_value_t = 300)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check one theorem or all of them
    Verify {
        /// Theorem id, or `all`
        #[arg(long)]
        target: String,
        #[arg(long, env = "QPART_DEFAULT_ORDER", default_value_t = 300)]
        series_order: usize,
        #[arg(long, default_value_t = 40)]
        enum_limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the members of a class at one weight
    Enumerate {
        /// d-distinct, init-<k>, b-even, b-odd, c1 .. c8
        #[arg(long)]
        class: String,
        #[arg(long)]
        weight: u64,
        /// Append the class parameter and the signed statistic
        #[arg(long)]
        signed: bool,
        #[arg(long, value_enum, default_value_t = Convention::Structural)]
        convention: Convention,
    },
    /// Tabulate even and odd counts against the predicted difference
    Table {
        /// d-distinct, b (b-even against b-odd), c1 .. c8
        #[arg(long)]
        class: String,
        #[arg(long = "max")]
        max: u64,
        /// Sign convention; c7 defaults to odd-tail, every other class to structural
        #[arg(long, value_enum)]
        convention: Option<Convention>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand { series, order, format } => expand(&series, order, format),
        Command::Verify { target, series_order, enum_limit, format } => {
            run_verify(&target, series_order, enum_limit, format)
        }
        Command::Enumerate { class, weight, signed, convention } => {
            enumerate(&class, weight, signed, convention.into())
        }
        Command::Table { class, max, convention, format } => table(&class, max, convention.map(Into::into), format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("qpart: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn expand(id: &str, order: usize, format: Format) -> Result<(), Failure> {
    let parsed: SeriesId = id.parse().map_err(usage)?;
    let series = parsed.build(order).map_err(usage)?;
    match format {
        Format::Text => print!("{}", render::series_text(&series)),
        Format::Csv => print!("{}", render::series_csv(&series)),
        Format::Json => print_json(&render::series_json(id, &series)),
    }
    Ok(())
}

fn run_verify(target: &str, series_order: usize, enum_limit: usize, format: Format) -> Result<(), Failure> {
    let all = target == "all";
    let reports: Vec<VerificationReport> = if all {
        verify_all(series_order, enum_limit).map_err(usage)?
    } else {
        let id: TheoremId = target.parse().map_err(usage)?;
        vec![verify(id, series_order, enum_limit).map_err(usage)?]
    };
    match format {
        Format::Text => {
            for r in &reports {
                println!("{}", render::report_text(r));
            }
        }
        Format::Csv => {
            println!("{}", render::REPORT_CSV_HEADER);
            for r in &reports {
                println!("{}", render::report_csv(r));
            }
        }
        Format::Json => {
            let values: Vec<Value> = reports.iter().map(render::report_json).collect();
            if all {
                print_json(&Value::Array(values));
            } else {
                print_json(&values[0]);
            }
        }
    }
    if reports.iter().all(|r| r.status.is_ok()) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn enumerate(class: &str, weight: u64, signed: bool, convention: SignConvention) -> Result<(), Failure> {
    let class: ClassId = class.parse().map_err(usage)?;
    for (p, d) in members_of_weight(class, weight) {
        if signed {
            println!("{p}\tj={}\tsigned={}", d.parameter, d.statistic(convention));
        } else {
            println!("{p}");
        }
    }
    Ok(())
}

fn table(class: &str, max: u64, convention: Option<SignConvention>, format: Format) -> Result<(), Failure> {
    let (theorem, counts) = if class == "b" {
        let even = generate_class(ClassId::BEven, max);
        let odd = generate_class(ClassId::BOdd, max);
        let mut counts = vec![(0u64, 0u64); max as usize + 1];
        for (p, _) in &even {
            counts[p.weight() as usize].0 += 1;
        }
        for (p, _) in &odd {
            counts[p.weight() as usize].1 += 1;
        }
        (TheoremId::ThmB, counts)
    } else {
        let id: ClassId = class.parse().map_err(usage)?;
        let theorem = match id {
            ClassId::DDistinct => TheoremId::LegendrePentagonal,
            ClassId::C1 => TheoremId::ThmC(1),
            ClassId::C2 => TheoremId::ThmC(2),
            ClassId::C3 => TheoremId::ThmC(3),
            ClassId::C4 => TheoremId::ThmC(4),
            ClassId::C5 => TheoremId::ThmC(5),
            ClassId::C6 => TheoremId::ThmC(6),
            ClassId::C7 => TheoremId::ThmC(7),
            ClassId::C8 => TheoremId::ThmC(8),
            other => return Err(Failure::Usage(format!("class {other} has no single-variable difference theorem"))),
        };
        let convention =
            convention.unwrap_or(if id == ClassId::C7 { SignConvention::OddTail } else { SignConvention::Structural });
        let counts = signed_counts_with(id, max, convention).iter().map(|c| (c.even_count, c.odd_count)).collect();
        (theorem, counts)
    };
    let predicted = theorem.indicator().expect("class theorems carry an indicator").series(max as usize + 1);
    let rows: Vec<TableRow> = counts
        .into_iter()
        .enumerate()
        .map(|(n, (even, odd))| TableRow { n: n as u64, even, odd, predicted: predicted.coeff(n) })
        .collect();
    match format {
        Format::Text => print!("{}", render::table_text(&rows)),
        Format::Csv => print!("{}", render::table_csv(&rows)),
        Format::Json => print_json(&render::table_json(class, &rows)),
    }
    if rows.iter().all(TableRow::matches) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
