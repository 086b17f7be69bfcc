use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use compbern::commands::{self, Kind, OpArgs, SeriesOp};
use compbern::format::render_series;
use compbern::input::SeriesInput;
use compbern::table::{render_polys, TableFormat};
use compbern::verify::{self, Suite};
use compbern::{CliError, CliResult};
use compbern_core::SignedRatio;

#[derive(Parser)]
#[command(name = "compbern", version, about = "Exact generalized and compositional Bernoulli numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print B_{N,n}^f for n = 0..=max-n, or C_{N,n}^f for n = 1..=max-n.
    Table {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Catalog name (exp, sin, cos, ek:K, zeta:M, zrising:M, sfac2) or a series file.
        #[arg(long)]
        series: String,
        #[arg(long = "N", default_value_t = 1)]
        shift: usize,
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "list")]
        format: TableFormat,
    },
    /// Print the polynomials B_{N,m}^f(x) for m <= n (C_{N,m}^f(x) for 1 <= m <= n).
    Poly {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        series: String,
        #[arg(long = "N", default_value_t = 1)]
        shift: usize,
        #[arg(long = "max-n", short = 'n', default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "list")]
        format: TableFormat,
    },
    /// Apply a series operation and print the result as a series file.
    SeriesOp {
        #[arg(value_enum)]
        op: SeriesOp,
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        with: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<SignedRatio>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<SignedRatio>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<SignedRatio>,
        #[arg(short = 'T', long = "order", default_value_t = 16)]
        order: usize,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Table { kind, series, shift, max_n, format } => {
            let input = SeriesInput::resolve(&series)?;
            Ok(commands::table(kind, &input, &series, shift, max_n)?.render(format))
        }
        Command::Poly { kind, series, shift, max_n, format } => {
            let input = SeriesInput::resolve(&series)?;
            Ok(render_polys(&commands::polys(kind, &input, &series, shift, max_n)?, format))
        }
        Command::SeriesOp { op, input, with, p, q, r, order } => {
            let ratios = match (p, q, r) {
                (Some(p), Some(q), Some(r)) => Some([p, q, r]),
                (None, None, None) => None,
                _ => return Err(CliError::Usage("--p, --q and --r go together".into())),
            };
            let args = OpArgs {
                input: input.as_deref().map(SeriesInput::resolve).transpose()?,
                with: with.as_deref().map(SeriesInput::resolve).transpose()?,
                ratios,
            };
            Ok(render_series(&commands::series_op(op, &args, order)?))
        }
        Command::Verify { suite, max_n, format } => {
            let report = verify::run(suite, max_n);
            let text = match format {
                ReportFormat::Text => report.render_text(),
                ReportFormat::Json => report.render_json(),
            };
            match report.failed() {
                0 => Ok(text),
                failed => {
                    print!("{text}");
                    Err(CliError::VerifyFailed { failed })
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("compbern: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
