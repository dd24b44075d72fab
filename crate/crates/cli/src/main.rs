mod compute;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use talex_core::knots::{Presentation, TwoBridgeFraction};
use talex_core::Error;

use output::Format;

#[derive(Parser)]
#[command(
    name = "talex",
    version,
    about = "Twisted Alexander polynomials of 2-bridge knots"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

/// A 2-bridge fraction `β/α` or a named preset.
#[derive(Args, Clone, Debug)]
pub struct KnotArg {
    /// fraction β/α with α odd
    #[arg(value_parser = parse_fraction, required_unless_present = "preset")]
    r: Option<TwoBridgeFraction>,

    /// named knot presentation (8_5)
    #[arg(long, conflicts_with = "r")]
    preset: Option<String>,
}

fn parse_fraction(s: &str) -> Result<TwoBridgeFraction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MetacyclicRep {
    /// the 2n·φ(2q)-dimensional irreducible part
    Irr,
    /// the full 2pq-dimensional representation of N(q, p)
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Paper,
    Identities,
    Appendix,
    Census,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial
    Alexander {
        #[command(flatten)]
        knot: KnotArg,
    },
    /// Total twisted polynomial D for the dihedral group D_p
    Dihedral {
        #[arg(value_parser = parse_fraction)]
        r: TwoBridgeFraction,
        #[arg(short)]
        p: u64,
        /// also factor D = F(t) F(-t)
        #[arg(long)]
        factor: bool,
    },
    /// Total polynomial for the binary dihedral representation
    BinaryDihedral {
        #[arg(value_parser = parse_fraction)]
        r: TwoBridgeFraction,
        #[arg(short)]
        p: u64,
    },
    /// Invariants for the metacyclic group N(q, p)
    Metacyclic {
        #[arg(value_parser = parse_fraction)]
        r: TwoBridgeFraction,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        #[arg(long, value_enum, default_value_t = MetacyclicRep::Irr)]
        rep: MetacyclicRep,
    },
    /// Invariant for the K-metacyclic group G(m, p | k)
    Kmeta {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(short)]
        p: u64,
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
    },
    /// Search for a continued fraction exhibiting membership in H(p)
    HpTest {
        #[arg(value_parser = parse_fraction)]
        r: TwoBridgeFraction,
        #[arg(short)]
        p: u64,
        /// longest continued fraction tried
        #[arg(long, default_value_t = 7)]
        max_len: usize,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// suite size: largest n, prime or α depending on the suite
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// number of sampled knots for the census
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

impl KnotArg {
    pub fn presentation(&self) -> talex_core::Result<Presentation> {
        match (&self.r, &self.preset) {
            (Some(f), _) => Ok(talex_core::knots::presentation(f)),
            (None, Some(name)) => Presentation::preset(name),
            (None, None) => Err(Error::InvalidInput("need a fraction or --preset".into())),
        }
    }

    pub fn label(&self) -> String {
        match (&self.r, &self.preset) {
            (Some(f), _) => f.to_string(),
            (None, Some(name)) => name.clone(),
            (None, None) => String::new(),
        }
    }
}

/// 2 for inputs outside an operation's domain, 3 for failed internal checks.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_)
        | Error::InvalidInput(_)
        | Error::Parse(_)
        | Error::NoValidAssignment
        | Error::Unsupported(_)
        | Error::NotMonic(_)
        | Error::UnassignedGenerator(_) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Alexander { knot } => compute::alexander_cmd(&knot),
        Command::Dihedral { r, p, factor } => compute::dihedral(&r, p, factor),
        Command::BinaryDihedral { r, p } => compute::binary_dihedral(&r, p),
        Command::Metacyclic { r, p, q, rep } => compute::metacyclic(&r, p, q, rep),
        Command::Kmeta { knot, p, k } => compute::kmeta(&knot, p, k),
        Command::HpTest { r, p, max_len } => compute::hp_test(&r, p, max_len),
        Command::Verify {
            suite,
            max_n,
            seed,
            jobs,
            count,
        } => {
            let report = verify::run(
                suite,
                &verify::Options {
                    max_n,
                    seed,
                    jobs,
                    count,
                },
            );
            println!("{}", report.render(cli.format));
            return ExitCode::from(if report.all_passed() { 0 } else { 3 });
        }
    };
    match result {
        Ok(record) => {
            println!("{}", record.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
