use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use circword::debruijn::{build_graph, export_dot, parse_edge_list, path_of_word, DotStyle};
use circword::invariants::{grandsart_report, square_dot};
use circword::span::{
    default_max_len, express_in_span, format_combination, format_rational, matrix_csv, occurrence_matrix,
    sample_words, span_dimension, verify_cks_basis, verify_spanning_set, FunctionalFamily,
};
use circword::verify::{verify, VerifyConfig, DEFAULT_RANDOM_LEN, DEFAULT_SEED};
use circword::words::count_occurrences;
use circword::{Alphabet, CircularWord, Error, Word};

/// Factor occurrences in circular words.
#[derive(Debug, Parser)]
#[command(name = "circword", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of occurrences of FACTOR in the circular word WORD.
    Count {
        word: String,
        factor: String,
        /// Alphabet size; inferred from the digits when omitted.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Print the four pair differences and both winding numbers of a binary word.
    Report {
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check every binary word of length 1..=N, plus optional random words.
    Verify {
        #[arg(long)]
        max_len: usize,
        /// Number of extra random words.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RANDOM_LEN)]
        rand_len: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact rank of the length-L occurrence functionals over a D-letter alphabet.
    Rank {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
        /// Longest sampled word; defaults to 2L + 2.
        #[arg(long)]
        max_len: Option<usize>,
        /// Also check the basis of words with non-zero first and last letters.
        #[arg(long)]
        cks: bool,
        /// Also check that {0000} and the words 1V span all length-4 functionals.
        #[arg(long)]
        spanning_set: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Express the functional of TARGET in a basis, with exact coefficients.
    Express {
        /// Target factor; the empty string stands for the word length.
        target: String,
        /// Comma-separated basis factors, or "nine" for {0000} and the words 1V,
        /// or "cks" for the non-zero-ends basis of length L.
        #[arg(long, default_value = "nine")]
        basis: String,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Dump the occurrence matrix of all length-L factors as CSV.
    Matrix {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 4)]
        l: usize,
        #[arg(long)]
        max_len: usize,
    },
    /// Emit a De Bruijn graph, or the four-vertex square graph, as DOT text.
    Dot {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Highlight the closed path of this word.
        #[arg(long)]
        word: Option<String>,
        /// Comma-separated edge labels to highlight.
        #[arg(long)]
        highlight: Option<String>,
        /// Comma-separated vertex labels drawn with a double circle.
        #[arg(long)]
        circle: Option<String>,
        /// Emit the square graph of the eight palindromic-pair edges instead.
        #[arg(long, conflicts_with_all = ["word", "highlight", "circle"])]
        square: bool,
    },
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable")
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Count { word, factor, d } => {
            let alphabet = d.map(Alphabet::new).transpose()?;
            let w = CircularWord::parse(&word, alphabet)?;
            let u = Word::parse(&factor)?;
            println!("{}", count_occurrences(&w, &u)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { word, format } => {
            let w = CircularWord::parse(&word, Some(Alphabet::BINARY))?;
            let report = grandsart_report(&w)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv(true)),
            }
            Ok(status(report.consistent))
        }
        Command::Verify {
            max_len,
            random,
            seed,
            rand_len,
            format,
        } => {
            let config = VerifyConfig {
                max_len,
                random,
                seed,
                random_len: rand_len,
                kirchhoff_orders: vec![3],
            };
            let summary = verify(&config)?;
            match format {
                Format::Json => println!("{}", to_json(&summary)),
                _ => {
                    println!("{}", summary.summary_line());
                    if let Some(first) = summary.violations.first() {
                        println!("{first}");
                    }
                }
            }
            Ok(status(summary.passed()))
        }
        Command::Rank {
            d,
            l,
            max_len,
            cks,
            spanning_set,
            format,
        } => {
            let alphabet = Alphabet::new(d)?;
            let max_len = max_len.unwrap_or_else(|| default_max_len(l));
            let report = span_dimension(alphabet, l, max_len)?;
            let mut ok = report.matches_prediction();
            let cks_check = cks.then(|| verify_cks_basis(alphabet, l, max_len)).transpose()?;
            let set_check = if spanning_set {
                if d != 2 || l != 4 {
                    return Err(Error::InvalidArgument(
                        "--spanning-set applies to d = 2, l = 4".into(),
                    ));
                }
                Some(verify_spanning_set(max_len)?)
            } else {
                None
            };
            ok &= cks_check.as_ref().is_none_or(|c| c.passed());
            ok &= set_check.as_ref().is_none_or(|c| c.passed());
            match format {
                Format::Json => {
                    let value = serde_json::json!({
                        "span": report,
                        "cks": cks_check,
                        "spanning_set": set_check,
                        "passed": ok,
                    });
                    println!("{}", to_json(&value));
                }
                _ => {
                    print!("{}", report.to_text());
                    if let Some(c) = &cks_check {
                        println!(
                            "non-zero-ends basis {{{}}}: rank {}, escaping {:?}, {}",
                            c.basis.join(", "),
                            c.rank,
                            c.escaping,
                            if c.passed() { "ok" } else { "FAILED" }
                        );
                    }
                    if let Some(c) = &set_check {
                        println!(
                            "spanning set {{{}}}: rank {}, escaping {:?}, spanning tree {}, {}",
                            c.set.join(", "),
                            c.rank,
                            c.escaping,
                            c.spanning_tree,
                            if c.passed() { "ok" } else { "FAILED" }
                        );
                    }
                }
            }
            Ok(status(ok))
        }
        Command::Express {
            target,
            basis,
            d,
            l,
            max_len,
        } => {
            let alphabet = Alphabet::new(d)?;
            let family = match basis.as_str() {
                "nine" => FunctionalFamily::nine_function_set(),
                "cks" => FunctionalFamily::nonzero_ends_basis(alphabet, l),
                list => FunctionalFamily::new(alphabet, parse_edge_list(list)?, false)?,
            };
            let target = Word::parse(&target)?;
            let max_len = max_len.unwrap_or_else(|| default_max_len(target.len().max(l)));
            let coefficients = express_in_span(&target, &family, max_len)?;
            for (label, c) in family.labels().iter().zip(&coefficients) {
                println!("{label}\t{}", format_rational(c));
            }
            println!("= {}", format_combination(&coefficients, &family));
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix { d, l, max_len } => {
            let alphabet = Alphabet::new(d)?;
            let words = sample_words(alphabet, max_len)?;
            let family = FunctionalFamily::all_of_length(alphabet, l);
            let m = occurrence_matrix(&words, &family)?;
            print!("{}", matrix_csv(&words, &family, &m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot {
            d,
            n,
            word,
            highlight,
            circle,
            square,
        } => {
            if square {
                print!("{}", square_dot());
                return Ok(ExitCode::SUCCESS);
            }
            let g = build_graph(Alphabet::new(d)?, n)?;
            let mut style = DotStyle::default();
            if let Some(w) = word {
                let w = CircularWord::parse(&w, Some(g.alphabet()))?;
                style.highlight_edges = path_of_word(&g, &w)?.edge_set();
            }
            if let Some(list) = highlight {
                for e in parse_edge_list(&list)? {
                    if !g.contains_edge(&e) {
                        return Err(Error::UnknownLabel {
                            label: e.to_string(),
                            d,
                            n,
                        });
                    }
                    style.highlight_edges.insert(e);
                }
            }
            if let Some(list) = circle {
                for v in parse_edge_list(&list)? {
                    if !g.contains_vertex(&v) {
                        return Err(Error::UnknownLabel {
                            label: v.to_string(),
                            d,
                            n,
                        });
                    }
                    style.double_circled.insert(v);
                }
            }
            print!("{}", export_dot(&g, &style));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
