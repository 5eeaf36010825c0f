//! Exhaustive and seeded-random checking of the palindromic-pair identity and
//! of flow conservation over binary circular words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::debruijn::verify_kirchhoff;
use crate::error::{Error, Result};
use crate::invariants::grandsart_report;
use crate::words::{Alphabet, CircularWord, Word};

pub const DEFAULT_SEED: u64 = 2010;
pub const DEFAULT_RANDOM_LEN: usize = 64;
/// Longest exhaustively enumerated length.
pub const MAX_EXHAUSTIVE_LEN: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Every binary word of length `1..=max_len` is checked.
    pub max_len: usize,
    /// Number of additional random words.
    pub random: usize,
    pub seed: u64,
    pub random_len: usize,
    /// De Bruijn orders at which flow conservation is checked.
    pub kirchhoff_orders: Vec<usize>,
}

impl VerifyConfig {
    pub fn exhaustive(max_len: usize) -> Self {
        VerifyConfig {
            max_len,
            random: 0,
            seed: DEFAULT_SEED,
            random_len: DEFAULT_RANDOM_LEN,
            kirchhoff_orders: vec![3],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Inconsistent {
        word: String,
        diffs: [i64; 4],
        k_graph: i64,
        k_decomp: i64,
    },
    Kirchhoff {
        word: String,
        order: usize,
        vertex: String,
    },
    Error {
        word: String,
        message: String,
    },
}

impl Violation {
    pub fn word(&self) -> &str {
        match self {
            Violation::Inconsistent { word, .. }
            | Violation::Kirchhoff { word, .. }
            | Violation::Error { word, .. } => word,
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Inconsistent {
                word,
                diffs,
                k_graph,
                k_decomp,
            } => write!(
                f,
                "counterexample {word}: diffs {diffs:?}, k_graph {k_graph}, k_decomp {k_decomp}"
            ),
            Violation::Kirchhoff {
                word,
                order,
                vertex,
            } => write!(
                f,
                "counterexample {word}: flow not conserved at vertex {vertex} of order {order}"
            ),
            Violation::Error { word, message } => write!(f, "counterexample {word}: {message}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub words_checked: usize,
    /// In enumeration order, so the first entry is the shortest,
    /// lexicographically least failing word.
    pub violations: Vec<Violation>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} words checked, {} violations",
            self.words_checked,
            self.violations.len()
        )
    }
}

/// All checks for one word; `None` when everything holds.
pub fn check_word(w: &CircularWord, kirchhoff_orders: &[usize]) -> Option<Violation> {
    let word = w.to_string();
    match grandsart_report(w) {
        Ok(r) if !r.consistent => {
            return Some(Violation::Inconsistent {
                word,
                diffs: r.diffs,
                k_graph: r.k_graph,
                k_decomp: r.k_decomposition,
            })
        }
        Err(e) => {
            return Some(Violation::Error {
                word,
                message: e.to_string(),
            })
        }
        Ok(_) => {}
    }
    for &order in kirchhoff_orders {
        match verify_kirchhoff(w, order) {
            Ok(report) => {
                if let Some(v) = report.violations().next() {
                    return Some(Violation::Kirchhoff {
                        word,
                        order,
                        vertex: v.vertex.to_string(),
                    });
                }
            }
            Err(e) => {
                return Some(Violation::Error {
                    word,
                    message: e.to_string(),
                })
            }
        }
    }
    None
}

/// Words of one length, checked in parallel; results keep enumeration order.
fn check_length(n: usize, orders: &[usize]) -> Vec<Violation> {
    let total = 1usize << n;
    (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let w = CircularWord::binary(Word::from_index(i, Alphabet::BINARY, n).letters().to_vec())
                .expect("binary letters");
            check_word(&w, orders)
        })
        .collect()
}

/// `count` random binary words of length `len` from a seeded generator.
pub fn random_words(count: usize, len: usize, seed: u64) -> Vec<CircularWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let letters = (0..len).map(|_| rng.gen_range(0..2u8)).collect();
            CircularWord::binary(letters).expect("non-empty binary word")
        })
        .collect()
}

pub fn verify(config: &VerifyConfig) -> Result<VerifySummary> {
    if config.max_len == 0 {
        return Err(Error::InvalidArgument("--max-len must be at least 1".into()));
    }
    if config.max_len > MAX_EXHAUSTIVE_LEN {
        return Err(Error::SizeLimit {
            what: "exhaustive enumeration",
            needed: 1u128 << config.max_len.min(127),
            limit: 1u128 << MAX_EXHAUSTIVE_LEN,
        });
    }
    if config.random > 0 && config.random_len == 0 {
        return Err(Error::InvalidArgument("--rand-len must be at least 1".into()));
    }
    let mut summary = VerifySummary::default();
    for n in 1..=config.max_len {
        summary.words_checked += 1 << n;
        summary
            .violations
            .extend(check_length(n, &config.kirchhoff_orders));
    }
    let extra = random_words(config.random, config.random_len, config.seed);
    summary.words_checked += extra.len();
    let found: Vec<Violation> = extra
        .par_iter()
        .filter_map(|w| check_word(w, &config.kirchhoff_orders))
        .collect();
    summary.violations.extend(found);
    Ok(summary)
}
