//! Finite and circular words over a small alphabet `{0, .., d-1}`.
//!
//! Words are stored as explicit letter sequences and travel as digit strings
//! (`"010011"`), which caps the alphabet at ten letters. Occurrences in a
//! circular word are counted with indices reduced modulo its length, so a
//! factor longer than the word is read against the periodic extension.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = u8;

/// Largest alphabet that still prints as one digit per letter.
pub const MAX_ALPHABET: usize = 10;

/// Occurrence vectors with more than this many entries are refused.
pub const MAX_VECTOR_LEN: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);

    pub fn new(d: usize) -> Result<Self> {
        if (2..=MAX_ALPHABET).contains(&d) {
            Ok(Alphabet(d as u8))
        } else {
            Err(Error::BadAlphabet {
                got: d,
                max: MAX_ALPHABET,
            })
        }
    }

    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn is_binary(self) -> bool {
        self.0 == 2
    }

    /// `d^k`, or `None` on overflow.
    pub fn power(self, k: usize) -> Option<usize> {
        u32::try_from(k).ok().and_then(|k| self.size().checked_pow(k))
    }

    pub(crate) fn power_bounded(self, k: usize, what: &'static str, limit: u128) -> Result<usize> {
        let needed = (self.size() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if k > u32::MAX as usize || needed > limit {
            return Err(Error::SizeLimit {
                what,
                needed,
                limit,
            });
        }
        Ok(needed as usize)
    }

    pub(crate) fn check(self, letters: &[Letter]) -> Result<()> {
        match letters.iter().position(|&a| a >= self.0) {
            Some(position) => Err(Error::BadLetter {
                letter: letters[position] as usize,
                position,
                d: self.size(),
            }),
            None => Ok(()),
        }
    }

    /// Smallest alphabet containing every letter (at least binary).
    pub fn covering(letters: &[Letter]) -> Result<Self> {
        let max = letters.iter().copied().max().unwrap_or(0) as usize;
        Alphabet::new((max + 1).max(2))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn parse_digits(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .map(|c| c.to_digit(10).map(|v| v as Letter))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Parse(s.to_string()))
}

fn write_digits(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    for &a in letters {
        write!(f, "{a}")?;
    }
    Ok(())
}

/// A plain finite word; possibly empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses a digit string; the empty string is the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        parse_digits(s).map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    pub fn suffix(&self, k: usize) -> Word {
        Word(self.0[self.0.len() - k..].to_vec())
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    /// Reversal: `V_i = U_{|U|-1-i}`.
    pub fn mirror(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Both words have the same length, are mirror images, and neither is a palindrome.
    pub fn is_palindromic_pair(&self, other: &Word) -> bool {
        self.len() == other.len() && !self.is_palindrome() && *other == self.mirror()
    }

    /// True if some letter repeats `k` times in a row (linear reading).
    pub fn has_run_of(&self, k: usize) -> bool {
        k == 0 || (k <= self.len() && self.0.windows(k).any(|w| w.iter().all(|&a| a == w[0])))
    }

    /// Position of the word in the lexicographic order of `d^len` words.
    pub fn index(&self, alphabet: Alphabet) -> usize {
        let d = alphabet.size();
        self.0.iter().fold(0, |acc, &a| acc * d + a as usize)
    }

    pub fn from_index(mut index: usize, alphabet: Alphabet, len: usize) -> Word {
        let d = alphabet.size();
        let mut letters = vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = (index % d) as Letter;
            index /= d;
        }
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.0)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

/// All `d^len` words of length `len`, in lexicographic order.
pub fn all_words(alphabet: Alphabet, len: usize) -> impl Iterator<Item = Word> {
    let total = alphabet.power(len).expect("word space too large to enumerate");
    (0..total).map(move |i| Word::from_index(i, alphabet, len))
}

/// A non-empty word indexed by the integers modulo its length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularWord {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

/// Builds a circular word, checking that it is non-empty and fits the alphabet.
pub fn make_circular(letters: Vec<Letter>, alphabet: Alphabet) -> Result<CircularWord> {
    CircularWord::new(letters, alphabet)
}

impl CircularWord {
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        alphabet.check(&letters)?;
        Ok(CircularWord { alphabet, letters })
    }

    pub fn binary(letters: Vec<Letter>) -> Result<Self> {
        Self::new(letters, Alphabet::BINARY)
    }

    /// Parses a digit string. Without an explicit alphabet the size is the
    /// largest digit plus one, and never below two.
    pub fn parse(s: &str, alphabet: Option<Alphabet>) -> Result<Self> {
        let letters = parse_digits(s)?;
        let alphabet = match alphabet {
            Some(a) => a,
            None => Alphabet::covering(&letters)?,
        };
        Self::new(letters, alphabet)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; present for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// `letter(i) = letters[i mod n]` for any integer `i`.
    pub fn letter(&self, i: i64) -> Letter {
        self.letters[i.rem_euclid(self.len() as i64) as usize]
    }

    fn at(&self, i: usize) -> Letter {
        self.letters[i % self.letters.len()]
    }

    /// The factor of length `len` starting at position `i` (periodic reading).
    pub fn factor_at(&self, i: usize, len: usize) -> Word {
        Word((i..i + len).map(|j| self.at(j)).collect())
    }

    pub fn to_word(&self) -> Word {
        Word(self.letters.clone())
    }

    /// Shifts indices by `s`: the result has `letter(i) = self.letter(i + s)`.
    pub fn rotate(&self, s: i64) -> CircularWord {
        let n = self.len();
        let shift = s.rem_euclid(n as i64) as usize;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[shift..]);
        letters.extend_from_slice(&self.letters[..shift]);
        CircularWord {
            alphabet: self.alphabet,
            letters,
        }
    }

    /// Lexicographically least rotation; the conjugacy-class representative.
    pub fn canonical_rotation(&self) -> CircularWord {
        let n = self.len();
        let best = (1..n).fold(0, |best, s| {
            let cand = self.letters[s..].iter().chain(&self.letters[..s]);
            let cur = self.letters[best..].iter().chain(&self.letters[..best]);
            if cand.lt(cur) {
                s
            } else {
                best
            }
        });
        self.rotate(best as i64)
    }

    /// Reverses the letter sequence.
    pub fn mirror(&self) -> CircularWord {
        CircularWord {
            alphabet: self.alphabet,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Exchanges letter `a` with `d - 1 - a`; for binary words this swaps 0 and 1.
    pub fn complement(&self) -> CircularWord {
        let top = self.alphabet.0 - 1;
        CircularWord {
            alphabet: self.alphabet,
            letters: self.letters.iter().map(|&a| top - a).collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.letters.iter().all(|&a| a == self.letters[0])
    }

    fn occurs_at(&self, i: usize, factor: &[Letter]) -> bool {
        factor.iter().enumerate().all(|(j, &u)| self.at(i + j) == u)
    }

    /// Positions `i` in `0..n` at which `factor` occurs.
    pub fn occurrences<'a>(&'a self, factor: &'a Word) -> impl Iterator<Item = usize> + 'a {
        (0..self.len()).filter(move |&i| self.occurs_at(i, factor.letters()))
    }
}

impl fmt::Display for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.letters)
    }
}

/// `|W|_U`: the number of positions of `w` at which `u` occurs.
pub fn count_occurrences(w: &CircularWord, u: &Word) -> Result<usize> {
    if u.is_empty() {
        return Err(Error::EmptyFactor);
    }
    Ok(w.occurrences(u).count())
}

/// Counts `|W|_U` for every word `U` of one fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceVector {
    alphabet: Alphabet,
    factor_len: usize,
    counts: Vec<u64>,
}

impl OccurrenceVector {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn factor_len(&self) -> usize {
        self.factor_len
    }

    /// Counts indexed by [`Word::index`].
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `None` when `u` has the wrong length or letters outside the alphabet.
    pub fn get(&self, u: &Word) -> Option<u64> {
        if u.len() != self.factor_len || self.alphabet.check(u.letters()).is_err() {
            return None;
        }
        Some(self.counts[u.index(self.alphabet)])
    }

    /// Like [`get`](Self::get) but panics on a malformed factor.
    pub fn count(&self, u: &str) -> u64 {
        let w = Word::parse(u).expect("digit string");
        self.get(&w)
            .unwrap_or_else(|| panic!("{u} is not a factor of length {}", self.factor_len))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Word, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(move |(i, &c)| (Word::from_index(i, self.alphabet, self.factor_len), c))
    }

    /// Factors with a non-zero count.
    pub fn support(&self) -> impl Iterator<Item = (Word, u64)> + '_ {
        self.iter().filter(|&(_, c)| c > 0)
    }
}

/// Occurrence counts of all `d^l` factors of length `l`.
pub fn occurrence_vector(w: &CircularWord, l: usize) -> Result<OccurrenceVector> {
    if l == 0 {
        return Err(Error::EmptyFactor);
    }
    let alphabet = w.alphabet();
    let size = alphabet.power_bounded(l, "occurrence vector", MAX_VECTOR_LEN)?;
    let d = alphabet.size();
    let mut counts = vec![0u64; size];
    // Rolling base-d index of the factor starting at position i.
    let mut index = (0..l).fold(0usize, |acc, j| acc * d + w.at(j) as usize);
    for i in 0..w.len() {
        counts[index] += 1;
        index = (index * d + w.at(i + l) as usize) % size;
    }
    Ok(OccurrenceVector {
        alphabet,
        factor_len: l,
        counts,
    })
}

/// A maximal block of equal letters in a circular word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Run {
    pub letter: Letter,
    pub start: usize,
    pub length: usize,
}

/// Circular maximal runs ordered by start position. A constant word is a
/// single run of length `n` starting at 0.
pub fn runs(w: &CircularWord) -> Vec<Run> {
    let n = w.len();
    if w.is_constant() {
        return vec![Run {
            letter: w.letters[0],
            start: 0,
            length: n,
        }];
    }
    // Start scanning at a run boundary so no run is split by the wrap.
    let origin = (0..n)
        .find(|&i| w.letter(i as i64) != w.letter(i as i64 - 1))
        .expect("non-constant word has a boundary");
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let start = (origin + i) % n;
        let letter = w.at(start);
        let mut length = 1;
        while i + length < n && w.at(start + length) == letter {
            length += 1;
        }
        out.push(Run {
            letter,
            start,
            length,
        });
        i += length;
    }
    out.sort_by_key(|r| r.start);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Block {
    /// Consecutive runs of length one, i.e. an alternating stretch.
    Isolated {
        start: usize,
        first_letter: Letter,
        length: usize,
    },
    /// Consecutive runs of length at least two.
    LongRuns { start: usize, runs: Vec<Run> },
}

impl Block {
    pub fn start(&self) -> usize {
        match self {
            Block::Isolated { start, .. } | Block::LongRuns { start, .. } => *start,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Block::Isolated { length, .. } => *length,
            Block::LongRuns { runs, .. } => runs.iter().map(|r| r.length).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_isolated(&self) -> bool {
        matches!(self, Block::Isolated { .. })
    }

    fn letters(&self) -> Vec<Letter> {
        match self {
            Block::Isolated {
                first_letter,
                length,
                ..
            } => (0..*length)
                .map(|i| if i % 2 == 0 { *first_letter } else { 1 - *first_letter })
                .collect(),
            Block::LongRuns { runs, .. } => runs
                .iter()
                .flat_map(|r| std::iter::repeat_n(r.letter, r.length))
                .collect(),
        }
    }
}

/// A binary circular word cut into alternating stretches of isolated
/// letters and stretches of long runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Set when no run has length two or more. The single isolated block
    /// then has no meaningful anchor.
    pub whole_word_alternating: bool,
}

impl BlockDecomposition {
    /// Concatenation of the blocks, read from the start of the first block.
    pub fn concatenate(&self) -> Vec<Letter> {
        self.blocks.iter().flat_map(Block::letters).collect()
    }
}

/// Splits a binary circular word into maximal groups of isolated letters and
/// maximal groups of long runs, ordered by start position.
///
/// A constant word, including a single letter, is one long-run block: in the
/// periodic reading its letter is never isolated.
pub fn decompose_blocks(w: &CircularWord) -> Result<BlockDecomposition> {
    if !w.alphabet().is_binary() {
        return Err(Error::NotBinary(w.alphabet().size()));
    }
    let all = runs(w);
    if w.is_constant() {
        return Ok(BlockDecomposition {
            blocks: vec![Block::LongRuns {
                start: 0,
                runs: all,
            }],
            whole_word_alternating: false,
        });
    }
    let Some(anchor) = all.iter().position(|r| r.length >= 2) else {
        return Ok(BlockDecomposition {
            blocks: vec![Block::Isolated {
                start: 0,
                first_letter: w.letters[0],
                length: w.len(),
            }],
            whole_word_alternating: true,
        });
    };

    // Walk the runs circularly starting from a long run, so every isolated
    // group is entered right after a long run.
    let mut blocks: Vec<Block> = Vec::new();
    for k in 0..all.len() {
        let run = all[(anchor + k) % all.len()];
        let isolated = run.length == 1;
        match blocks.last_mut() {
            Some(Block::Isolated { length, .. }) if isolated => *length += 1,
            Some(Block::LongRuns { runs, .. }) if !isolated => runs.push(run),
            _ if isolated => blocks.push(Block::Isolated {
                start: run.start,
                first_letter: run.letter,
                length: 1,
            }),
            _ => blocks.push(Block::LongRuns {
                start: run.start,
                runs: vec![run],
            }),
        }
    }
    // The walk began on a long run but possibly in the middle of a group of
    // long runs; fold the trailing group into the leading one.
    if blocks.len() > 1 {
        if let (Some(Block::LongRuns { .. }), Some(Block::LongRuns { .. })) =
            (blocks.first(), blocks.last())
        {
            let Some(Block::LongRuns { start, runs: mut tail }) = blocks.pop() else {
                unreachable!()
            };
            if let Block::LongRuns { start: head_start, runs } = &mut blocks[0] {
                tail.append(runs);
                *runs = tail;
                *head_start = start;
            }
        }
    }
    blocks.sort_by_key(Block::start);
    Ok(BlockDecomposition {
        blocks,
        whole_word_alternating: false,
    })
}

/// Iterator over all `d^n` circular words of length `n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct WordEnumerator {
    alphabet: Alphabet,
    next: Option<Vec<Letter>>,
}

impl Iterator for WordEnumerator {
    type Item = CircularWord;

    fn next(&mut self) -> Option<CircularWord> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let top = self.alphabet.0 - 1;
        // Odometer increment; None after the all-top word.
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] < top {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(CircularWord {
            alphabet: self.alphabet,
            letters: current,
        })
    }
}

pub fn enumerate_words(alphabet: Alphabet, n: usize) -> Result<WordEnumerator> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    Ok(WordEnumerator {
        alphabet,
        next: Some(vec![0; n]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CircularWord {
        CircularWord::parse(s, Some(Alphabet::BINARY)).unwrap()
    }

    fn word(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Unrolls the word periodically and counts matches starting in `0..n`.
    fn unrolled_count(w: &str, u: &str) -> usize {
        let n = w.len();
        let long: String = w.chars().cycle().take(n + u.len()).collect();
        (0..n).filter(|&i| long[i..].starts_with(u)).count()
    }

    #[test]
    fn make_circular_checks_input() {
        assert_eq!(make_circular(vec![0, 0, 1, 0, 1], Alphabet::BINARY).unwrap().len(), 5);
        assert_eq!(make_circular(vec![], Alphabet::BINARY), Err(Error::EmptyWord));
        assert!(matches!(
            make_circular(vec![0, 2], Alphabet::BINARY),
            Err(Error::BadLetter { letter: 2, position: 1, d: 2 })
        ));
        assert!(Alphabet::new(1).is_err());
        assert!(Alphabet::new(11).is_err());
    }

    #[test]
    fn parse_infers_alphabet() {
        assert_eq!(CircularWord::parse("0120", None).unwrap().alphabet().size(), 3);
        assert_eq!(CircularWord::parse("000", None).unwrap().alphabet().size(), 2);
        assert!(CircularWord::parse("01a", None).is_err());
        assert_eq!(CircularWord::parse("", None), Err(Error::EmptyWord));
        assert!(CircularWord::parse("012", Some(Alphabet::BINARY)).is_err());
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_occurrences(&cw("00101"), &word("010")).unwrap(), 2);
        assert_eq!(cw("00101").occurrences(&word("010")).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(cw("0001").occurrences(&word("010")).collect::<Vec<_>>(), vec![2]);
        assert_eq!(count_occurrences(&cw("0000"), &word("00")).unwrap(), 4);
        assert_eq!(unrolled_count("0", "0000"), 1);
        assert_eq!(count_occurrences(&cw("0"), &word("0000")).unwrap(), 1);
        assert_eq!(count_occurrences(&cw("01"), &word("0202")).unwrap(), 0);
        assert_eq!(count_occurrences(&cw("01"), &Word::empty()), Err(Error::EmptyFactor));
    }

    #[test]
    fn counting_matches_unrolled_oracle() {
        for n in 1..=7 {
            for w in enumerate_words(Alphabet::BINARY, n).unwrap() {
                for l in 1..=9 {
                    for u in all_words(Alphabet::BINARY, l) {
                        assert_eq!(
                            count_occurrences(&w, &u).unwrap(),
                            unrolled_count(&w.to_string(), &u.to_string()),
                            "W={w} U={u}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn occurrence_vector_examples() {
        let v = occurrence_vector(&cw("010011"), 4).unwrap();
        let support: Vec<(String, u64)> = v.support().map(|(u, c)| (u.to_string(), c)).collect();
        let mut expected: Vec<(String, u64)> = ["0100", "1001", "0011", "0110", "1101", "1010"]
            .iter()
            .map(|s| (s.to_string(), 1))
            .collect();
        expected.sort();
        assert_eq!(support, expected);

        let v = occurrence_vector(&cw("1111"), 4).unwrap();
        assert_eq!(v.count("1111"), 4);
        assert_eq!(v.total(), 4);
        assert_eq!(v.get(&word("111")), None);
        assert_eq!(occurrence_vector(&cw("01"), 0), Err(Error::EmptyFactor));
        assert!(matches!(occurrence_vector(&cw("01"), 40), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn occurrence_vector_agrees_with_direct_count() {
        let w = CircularWord::parse("0120221", None).unwrap();
        for l in 1..=5 {
            let v = occurrence_vector(&w, l).unwrap();
            assert_eq!(v.total(), 7);
            for (u, c) in v.iter() {
                assert_eq!(c as usize, count_occurrences(&w, &u).unwrap());
            }
        }
    }

    #[test]
    fn mirror_and_palindromes() {
        assert_eq!(word("0011").mirror(), word("1100"));
        assert_eq!(word("0110").mirror(), word("0110"));
        assert_eq!(Word::empty().mirror(), Word::empty());
        assert!(word("1001").is_palindrome());
        assert!(word("1010").is_palindromic_pair(&word("0101")));
        assert!(!word("0110").is_palindromic_pair(&word("0110")));
        assert!(!word("0011").is_palindromic_pair(&word("110")));
        assert!(!word("0011").is_palindromic_pair(&word("1010")));
    }

    #[test]
    fn run_detection() {
        assert!(word("0001").has_run_of(3));
        assert!(!word("0010").has_run_of(3));
        assert!(!word("00").has_run_of(3));
        assert!(word("0").has_run_of(1));
        assert!(!Word::empty().has_run_of(1));
    }

    #[test]
    fn runs_examples() {
        let r = runs(&cw("00101"));
        let triples: Vec<_> = r.iter().map(|r| (r.letter, r.start, r.length)).collect();
        assert_eq!(triples, vec![(0, 0, 2), (1, 2, 1), (0, 3, 1), (1, 4, 1)]);
        assert_eq!(
            runs(&cw("0000")),
            vec![Run { letter: 0, start: 0, length: 4 }]
        );
        let wrapped: Vec<_> = runs(&cw("0110")).iter().map(|r| (r.letter, r.start, r.length)).collect();
        assert_eq!(wrapped, vec![(1, 1, 2), (0, 3, 2)]);

        let w = cw("00101");
        let long_zero_runs = runs(&w).iter().filter(|r| r.letter == 0 && r.length >= 2).count();
        assert_eq!(long_zero_runs, 1);
        assert_eq!(count_occurrences(&w, &word("001")).unwrap(), 1);
        assert_eq!(count_occurrences(&w, &word("100")).unwrap(), 1);
    }

    #[test]
    fn runs_are_maximal_and_cover() {
        for n in 1..=10 {
            for w in enumerate_words(Alphabet::BINARY, n).unwrap() {
                let rs = runs(&w);
                assert_eq!(rs.iter().map(|r| r.length).sum::<usize>(), n);
                for r in &rs {
                    for j in 0..r.length {
                        assert_eq!(w.letter((r.start + j) as i64), r.letter);
                    }
                    if r.length < n {
                        assert_ne!(w.letter(r.start as i64 - 1), r.letter, "{w}");
                        assert_ne!(w.letter((r.start + r.length) as i64), r.letter, "{w}");
                    }
                }
                assert!(rs.windows(2).all(|p| p[0].start < p[1].start));
            }
        }
    }

    #[test]
    fn blocks_examples() {
        let b = decompose_blocks(&cw("010011")).unwrap();
        assert!(!b.whole_word_alternating);
        assert_eq!(
            b.blocks[0],
            Block::Isolated { start: 0, first_letter: 0, length: 2 }
        );
        match &b.blocks[1] {
            Block::LongRuns { start, runs } => {
                assert_eq!(*start, 2);
                assert_eq!(runs.iter().map(|r| (r.letter, r.length)).collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }

        let b = decompose_blocks(&cw("0101")).unwrap();
        assert!(b.whole_word_alternating);
        assert_eq!(b.blocks.len(), 1);
        assert_eq!(b.blocks[0].len(), 4);
        assert!(runs(&cw("0101")).iter().all(|r| r.length == 1));

        let b = decompose_blocks(&cw("0000")).unwrap();
        assert_eq!(b.blocks.len(), 1);
        assert!(!b.blocks[0].is_isolated());

        let b = decompose_blocks(&cw("0")).unwrap();
        assert!(!b.whole_word_alternating);
        assert!(!b.blocks[0].is_isolated());

        assert_eq!(
            decompose_blocks(&CircularWord::parse("012", None).unwrap()),
            Err(Error::NotBinary(3))
        );
    }

    #[test]
    fn blocks_anchor_after_long_run() {
        // 1 | 0 0 | 1 1 | 0 1 0 -> the isolated stretch 0,1,0,1 wraps around.
        let w = cw("10011010");
        let b = decompose_blocks(&w).unwrap();
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.blocks[0].start(), 1);
        assert_eq!(
            b.blocks[1],
            Block::Isolated { start: 5, first_letter: 0, length: 4 }
        );
    }

    #[test]
    fn blocks_reassemble_and_alternate() {
        for n in 1..=12 {
            for w in enumerate_words(Alphabet::BINARY, n).unwrap() {
                let b = decompose_blocks(&w).unwrap();
                let first = b.blocks[0].start() as i64;
                assert_eq!(b.concatenate(), w.rotate(first).letters(), "{w}");
                if b.blocks.len() > 1 {
                    for k in 0..b.blocks.len() {
                        let next = &b.blocks[(k + 1) % b.blocks.len()];
                        assert_ne!(b.blocks[k].is_isolated(), next.is_isolated(), "{w}");
                    }
                }
                assert_eq!(b.whole_word_alternating, !w.is_constant() && runs(&w).iter().all(|r| r.length == 1));
            }
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(cw("001").rotate(1), cw("010"));
        assert_eq!(cw("001").rotate(-1), cw("100"));
        assert_eq!(cw("010011").rotate(0), cw("010011"));
        assert_eq!(cw("010011").rotate(6), cw("010011"));
        assert_eq!(cw("010").canonical_rotation(), cw("001"));
        let w = cw("0010110");
        assert_eq!(w.letter(-1), 0);
        assert_eq!(w.letter(9), 1);
    }

    #[test]
    fn canonical_rotation_is_brute_force_minimum() {
        for n in 1..=9 {
            for w in enumerate_words(Alphabet::BINARY, n).unwrap() {
                let brute = (0..n as i64).map(|s| w.rotate(s).to_string()).min().unwrap();
                assert_eq!(w.canonical_rotation().to_string(), brute);
            }
        }
    }

    #[test]
    fn enumeration() {
        let ones: Vec<String> = enumerate_words(Alphabet::BINARY, 1).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(ones, ["0", "1"]);
        let threes: Vec<String> = enumerate_words(Alphabet::BINARY, 3).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(threes, ["000", "001", "010", "011", "100", "101", "110", "111"]);
        let ternary = Alphabet::new(3).unwrap();
        assert_eq!(enumerate_words(ternary, 2).unwrap().count(), 9);
        assert!(enumerate_words(Alphabet::BINARY, 0).is_err());
        let words: Vec<Word> = all_words(ternary, 3).collect();
        assert_eq!(words.len(), 27);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        for (i, u) in words.iter().enumerate() {
            assert_eq!(u.index(ternary), i);
        }
    }
}
