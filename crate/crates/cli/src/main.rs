mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "somos", version, about = "Exact checks for Somos sequences and their symmetry maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a claim suite and write a report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Print the claim manifest instead of running it.
        #[arg(long)]
        manifest: bool,
        /// Zero all timings so reports are reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print terms of a Somos-k sequence.
    Seq {
        #[arg(long)]
        k: usize,
        /// Initial values, comma separated; integers or fractions.
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        /// Index of the first initial value.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        base: i64,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
        /// Group element `b,c,m,reflect` acting by (t a)_n = b c^n a_(s(n+m)).
        #[arg(long, allow_hyphen_values = true)]
        transform: Option<String>,
        /// Print k-term windows instead of single terms.
        #[arg(long)]
        windows: bool,
    },
    /// Degrees of iterated maps next to the printed lists.
    Degrees {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "F")]
        pattern: String,
        #[arg(long)]
        n_max: usize,
    },
    /// Integer points on S = 0 up to a height.
    Search {
        #[arg(long)]
        height: i64,
        /// Extension length checked in each direction.
        #[arg(long, default_value_t = 8)]
        len: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare a generated sequence with a b-file.
    Crosscheck {
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        base: i64,
        /// Largest index shift tried by the alignment search.
        #[arg(long, default_value_t = 0)]
        max_shift: i64,
        #[arg(long, default_value_t = 1)]
        min_overlap: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Verify { suite, out: path, format, manifest, no_timing } => {
            commands::verify(&mut out, &suite, path.as_deref(), format, manifest, no_timing)
        }
        Command::Seq { k, init, base, from, to, transform, windows } => {
            commands::seq(&mut out, k, &init, base, from, to, transform.as_deref(), windows)
        }
        Command::Degrees { k, pattern, n_max } => commands::degrees(&mut out, k, &pattern, n_max),
        Command::Search { height, len, format } => commands::search(&mut out, height, len, format),
        Command::Crosscheck { bfile, k, init, base, max_shift, min_overlap } => {
            commands::crosscheck(&mut out, &bfile, k, &init, base, max_shift, min_overlap)
        }
    };
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
