//! The four-way equality of palindromic-pair differences for binary circular
//! words, and the winding number that explains it.
//!
//! Erasing from a word's path in `B(2,3)` every edge whose prefix is not one
//! of the four "square" vertices `001, 110, 101, 010` leaves a closed walk on
//! the 4-cycle `001 -> 110 -> 101 -> 010 -> 001`. Each of the eight retained
//! edge labels moves one quarter turn, positively (`0011, 1101, 1010, 0100`)
//! or negatively (their mirrors). The walk winds `k` times, and for every
//! palindromic pair the positive count minus the negative count equals `k`.

use serde::{Deserialize, Serialize};

use crate::debruijn::{build_graph, path_of_word};
use crate::dot::DotGraph;
use crate::error::{Error, Result};
use crate::words::{all_words, decompose_blocks, occurrence_vector, Alphabet, Block, CircularWord, Word};

/// The four palindromic pairs `(positive, negative)` in the order of the
/// differences reported by [`grandsart_differences`].
pub const GRANDSART_PAIRS: [(&str, &str); 4] = [
    ("0011", "1100"),
    ("1101", "1011"),
    ("1010", "0101"),
    ("0100", "0010"),
];

/// Vertices of the square graph in rotation order: `R` maps each entry to the next.
pub const SQUARE_CYCLE: [&str; 4] = ["001", "110", "101", "010"];

fn square_position(v: &[u8]) -> Option<usize> {
    // A square vertex is a length-3 word whose last two letters differ.
    if v.len() != 3 || v[1] == v[2] {
        return None;
    }
    SQUARE_CYCLE
        .iter()
        .position(|s| s.bytes().zip(v).all(|(c, &a)| c - b'0' == a))
}

fn square_vertex(position: usize) -> Word {
    Word::parse(SQUARE_CYCLE[position % 4]).unwrap()
}

/// The rotation `R` of the square, and its powers.
pub fn rotate_square(v: &Word, power: i64) -> Option<Word> {
    let p = square_position(v.letters())?;
    Some(square_vertex((p as i64 + power).rem_euclid(4) as usize))
}

/// The square vertex where a Grandsart edge ends once the run it enters is
/// followed to its end: `0011` enters `011`, runs through `111` and leaves at `110`.
pub fn square_target(edge: &Word) -> Option<Word> {
    let e = edge.letters();
    if e.len() != 4 || square_position(&e[..3]).is_none() {
        return None;
    }
    let (b, c) = (e[2], e[3]);
    Some(if b != c {
        Word::new(e[1..].to_vec())
    } else {
        Word::new(vec![c, c, 1 - c])
    })
}

/// `+1` for a quarter turn along `R`, `-1` against it, `None` for edges that
/// do not start on the square.
pub fn edge_sign(edge: &Word) -> Option<i8> {
    let target = square_target(edge)?;
    let source = edge.prefix(3);
    if rotate_square(&source, 1)? == target {
        Some(1)
    } else if rotate_square(&source, -1)? == target {
        Some(-1)
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Length4Classification {
    pub palindromes: Vec<Word>,
    /// Palindromic pairs containing a run of three equal letters.
    pub run_pairs: Vec<(Word, Word)>,
    /// `(positive, negative)` pairs ordered as in [`GRANDSART_PAIRS`].
    pub grandsart_pairs: Vec<(Word, Word)>,
}

/// Sorts the sixteen binary words of length four into palindromes, pairs with
/// a run of three, and the four Grandsart pairs.
pub fn classify_length4() -> Length4Classification {
    let words: Vec<Word> = all_words(Alphabet::BINARY, 4).collect();
    let palindromes: Vec<Word> = words.iter().filter(|w| w.is_palindrome()).cloned().collect();

    // Each non-palindrome once, as the lexicographically larger member of its pair.
    let pairs = words
        .iter()
        .filter(|w| !w.is_palindrome() && **w > w.mirror())
        .map(|w| (w.clone(), w.mirror()));
    let (run_pairs, rest): (Vec<_>, Vec<_>) =
        pairs.partition(|(u, v)| u.has_run_of(3) || v.has_run_of(3));

    let mut grandsart_pairs: Vec<(Word, Word)> = rest
        .into_iter()
        .map(|(u, v)| if edge_sign(&u) == Some(1) { (u, v) } else { (v, u) })
        .collect();
    grandsart_pairs.sort_by_key(|(pos, _)| square_position(&pos.letters()[..3]));

    Length4Classification {
        palindromes,
        run_pairs,
        grandsart_pairs,
    }
}

fn require_binary(w: &CircularWord) -> Result<()> {
    if w.alphabet().is_binary() {
        Ok(())
    } else {
        Err(Error::NotBinary(w.alphabet().size()))
    }
}

/// `(|W|_0011 - |W|_1100, |W|_1101 - |W|_1011, |W|_1010 - |W|_0101, |W|_0100 - |W|_0010)`.
pub fn grandsart_differences(w: &CircularWord) -> Result<[i64; 4]> {
    require_binary(w)?;
    let v = occurrence_vector(w, 4)?;
    Ok(GRANDSART_PAIRS.map(|(pos, neg)| v.count(pos) as i64 - v.count(neg) as i64))
}

/// A word's path in `B(2,3)` with every non-Grandsart edge erased.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareProjection {
    pub start_vertex: Option<Word>,
    pub retained_edges: Vec<Word>,
    pub epsilons: Vec<i8>,
}

impl SquareProjection {
    pub fn epsilon_sum(&self) -> i64 {
        self.epsilons.iter().map(|&e| e as i64).sum()
    }

    /// Signed number of full turns, if the sum of quarter turns is a multiple of four.
    pub fn winding(&self) -> Option<i64> {
        let s = self.epsilon_sum();
        (s % 4 == 0).then_some(s / 4)
    }

    /// Positive minus negative occurrences for each pair, counted on the retained edges.
    pub fn pair_differences(&self) -> [i64; 4] {
        GRANDSART_PAIRS.map(|(pos, neg)| {
            let count = |label: &str| {
                self.retained_edges
                    .iter()
                    .filter(|e| e.to_string() == label)
                    .count() as i64
            };
            count(pos) - count(neg)
        })
    }

    /// Cyclically cancels every edge immediately followed by its reverse.
    /// What remains is `4|k|` edges, all of the same sign.
    pub fn reduce(&self) -> SquareProjection {
        let mut stack: Vec<(Word, i8)> = Vec::new();
        for (e, &s) in self.retained_edges.iter().zip(&self.epsilons) {
            match stack.last() {
                Some((_, t)) if *t == -s => {
                    stack.pop();
                }
                _ => stack.push((e.clone(), s)),
            }
        }
        // The walk is closed, so the two ends may still cancel each other.
        let mut lo = 0;
        while stack.len() - lo >= 2 && stack[lo].1 == -stack[stack.len() - 1].1 {
            stack.pop();
            lo += 1;
        }
        let kept = &stack[lo..];
        SquareProjection {
            start_vertex: kept.first().map(|(e, _)| e.prefix(3)),
            retained_edges: kept.iter().map(|(e, _)| e.clone()).collect(),
            epsilons: kept.iter().map(|(_, s)| *s).collect(),
        }
    }

    fn check_closed(&self, word: &CircularWord) -> Result<()> {
        let m = self.retained_edges.len();
        for (i, e) in self.retained_edges.iter().enumerate() {
            let next = &self.retained_edges[(i + 1) % m];
            let end = square_target(e);
            if end.as_ref() != Some(&next.prefix(3)) {
                return Err(Error::BrokenProjection {
                    word: word.to_string(),
                    reason: format!("edge {e} is followed by {next}"),
                });
            }
        }
        Ok(())
    }
}

pub fn project_to_square(w: &CircularWord) -> Result<SquareProjection> {
    require_binary(w)?;
    let g = build_graph(Alphabet::BINARY, 3)?;
    let path = path_of_word(&g, w)?;
    let (retained_edges, epsilons): (Vec<Word>, Vec<i8>) = path
        .edges
        .into_iter()
        .filter_map(|e| edge_sign(&e).map(|s| (e, s)))
        .unzip();
    let projection = SquareProjection {
        start_vertex: retained_edges.first().map(|e| e.prefix(3)),
        retained_edges,
        epsilons,
    };
    projection.check_closed(w)?;
    Ok(projection)
}

/// Signed turns of the projected walk around the square.
pub fn winding_number_graph(w: &CircularWord) -> Result<i64> {
    let projection = project_to_square(w)?;
    projection.winding().ok_or_else(|| Error::BrokenProjection {
        word: w.to_string(),
        reason: format!("sum of quarter turns {} is not a multiple of 4", projection.epsilon_sum()),
    })
}

/// Even-length stretches of isolated letters starting with 0, minus those
/// starting with 1. A word made only of isolated letters counts as 0.
pub fn winding_number_decomposition(w: &CircularWord) -> Result<i64> {
    let decomposition = decompose_blocks(w)?;
    if decomposition.whole_word_alternating {
        return Ok(0);
    }
    Ok(decomposition
        .blocks
        .iter()
        .map(|b| match b {
            Block::Isolated {
                first_letter,
                length,
                ..
            } if length % 2 == 0 => {
                if *first_letter == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => 0,
        })
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrandsartReport {
    pub word: String,
    pub diffs: [i64; 4],
    pub k_graph: i64,
    pub k_decomposition: i64,
    pub consistent: bool,
}

/// Flat form used for JSON and CSV output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrandsartRecord {
    pub word: String,
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
    pub d4: i64,
    pub k_graph: i64,
    pub k_decomp: i64,
    pub consistent: bool,
}

impl GrandsartReport {
    pub fn record(&self) -> GrandsartRecord {
        let [d1, d2, d3, d4] = self.diffs;
        GrandsartRecord {
            word: self.word.clone(),
            d1,
            d2,
            d3,
            d4,
            k_graph: self.k_graph,
            k_decomp: self.k_decomposition,
            consistent: self.consistent,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("record serialises")
    }

    /// One CSV line, optionally preceded by the header line.
    pub fn to_csv(&self, header: bool) -> String {
        let mut writer = csv::WriterBuilder::new()
            .has_headers(header)
            .from_writer(Vec::new());
        writer.serialize(self.record()).expect("record serialises");
        String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("ascii")
    }

    pub fn to_text(&self) -> String {
        let [d1, d2, d3, d4] = self.diffs;
        format!(
            "word: {}\n\
             |W|_0011 - |W|_1100 = {d1}\n\
             |W|_1101 - |W|_1011 = {d2}\n\
             |W|_1010 - |W|_0101 = {d3}\n\
             |W|_0100 - |W|_0010 = {d4}\n\
             k (square winding) = {}\n\
             k (block decomposition) = {}\n\
             consistent: {}\n",
            self.word, self.k_graph, self.k_decomposition, self.consistent
        )
    }
}

pub fn grandsart_report(w: &CircularWord) -> Result<GrandsartReport> {
    let diffs = grandsart_differences(w)?;
    let k_graph = winding_number_graph(w)?;
    let k_decomposition = winding_number_decomposition(w)?;
    let consistent = diffs.iter().all(|&x| x == k_graph) && k_decomposition == k_graph;
    Ok(GrandsartReport {
        word: w.to_string(),
        diffs,
        k_graph,
        k_decomposition,
        consistent,
    })
}

/// DOT text for the square graph: four vertices and the eight Grandsart edges.
pub fn square_dot() -> String {
    let mut dot = DotGraph::new("square");
    dot.node_default("shape", "doublecircle");
    for v in ["110", "001", "101", "010"] {
        dot.node(v, &[]);
    }
    for (pos, neg) in GRANDSART_PAIRS {
        for (label, class) in [(pos, "positive"), (neg, "negative")] {
            let e = Word::parse(label).unwrap();
            let target = square_target(&e).unwrap();
            dot.edge(
                e.prefix(3).to_string(),
                target.to_string(),
                &[("label", label), ("class", class)],
            );
        }
    }
    dot.render()
}
