use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use outbraid::presentation_file::{self, PresentationFile};
use outbraid::{list_suites, run_suite, Params};
use outbraid_core::braid::{normal_form, permutation_of};
use outbraid_core::hom_enum::{enumerate_homs, EnumOptions};
use outbraid_core::perm::tuple_to_string;
use outbraid_core::BraidWord;

#[derive(Parser)]
#[command(name = "outbraid", version, about = "Exact checks on braid groups and their finite quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (or `all`) and print a report.
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        dmax: Option<u64>,
        #[arg(long)]
        maxlen: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Random words drawn by `gtcomm`.
        #[arg(long)]
        samples: Option<usize>,
        /// Write the JSON report here; `-` prints it to stdout instead of the table.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Allow the degree-six classification in `artin_n`.
        #[arg(long)]
        enable_n6: bool,
    },
    /// Print the Garside left-canonical form of a braid word.
    NormalForm {
        #[arg(long)]
        n: usize,
        /// Signed generator indices, e.g. "1 2 -3".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Classify homomorphisms from a presentation into S_m up to conjugacy.
    Enumerate {
        #[arg(long)]
        target_degree: usize,
        /// A TOML/JSON presentation file or a built-in such as `braid:4`.
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        surjective: bool,
        #[arg(long)]
        enable_n6: bool,
        /// Maximum number of relator evaluations.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List the verification suites.
    List,
    /// Print a presentation in the TOML file format. Built-ins: braid:N,
    /// mcg-sphere:N, central-quotient:N, coxeter:N, free-product-z2:K.
    ShowPresentation { presentation: String },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Verify {
            suite,
            n,
            dmax,
            maxlen,
            seed,
            samples,
            json,
            enable_n6,
        } => {
            let params = Params {
                n,
                dmax,
                maxlen,
                seed,
                samples,
                enable_n6,
            };
            let report = run_suite(&suite, &params)?;
            match json.as_deref() {
                Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
                Some(p) => {
                    std::fs::write(p, report.to_json())
                        .with_context(|| format!("writing {}", p.display()))?;
                    print!("{}", report.table());
                }
                None => print!("{}", report.table()),
            }
            Ok(report.passed())
        }
        Command::NormalForm { n, word } => {
            let w = BraidWord::parse(n, &word)?;
            let nf = normal_form(&w);
            println!("{nf}");
            println!("infimum {}, canonical length {}", nf.infimum(), nf.canonical_length());
            println!("permutation {}", permutation_of(&w));
            println!("word {}", nf.to_word());
            Ok(true)
        }
        Command::Enumerate {
            target_degree,
            presentation,
            surjective,
            enable_n6,
            budget,
        } => {
            let p = presentation_file::load(&presentation)?;
            let opts = EnumOptions {
                surjective_only: surjective,
                allow_degree_six: enable_n6,
                budget,
            };
            let c = enumerate_homs(&p, target_degree, opts)?;
            println!(
                "{} classes, {} homomorphisms into S{}",
                c.class_count(),
                c.total,
                target_degree
            );
            for class in &c.classes {
                println!("{:>6}  {}", class.orbit_size, tuple_to_string(&class.representative));
            }
            Ok(true)
        }
        Command::List => {
            for (name, summary) in list_suites() {
                println!("{name:<16} {summary}");
            }
            println!("{:<16} every suite above", "all");
            Ok(true)
        }
        Command::ShowPresentation { presentation } => {
            let p = presentation_file::load(&presentation)?;
            print!("{}", PresentationFile::from_presentation(&p).to_toml());
            Ok(true)
        }
    }
}
