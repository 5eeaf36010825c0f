//! Linear relations among the occurrence-count functionals `W -> |W|_U`.
//!
//! A functional is sampled on every circular word up to some length; the
//! sample matrix has one row per word and one column per functional, and its
//! rational column rank is the dimension of the space the functionals span
//! (once enough words are sampled). Everything is exact: ranks by
//! fraction-free elimination, coefficients as rationals.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::debruijn::{build_graph, is_spanning_tree};
use crate::error::{Error, Result};
use crate::matrix::{exact_rank, IntegerMatrix};
use crate::words::{all_words, enumerate_words, occurrence_vector, Alphabet, CircularWord, OccurrenceVector, Word};

/// Cap on the number of words of the longest sampled length, `d^max_len <= 2^20`.
pub const DEFAULT_SAMPLE_LIMIT: u128 = 1 << 20;

/// An ordered list of functionals `W -> |W|_U`, optionally preceded by the
/// length functional `W -> |W|` (the count of the empty factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalFamily {
    alphabet: Alphabet,
    factors: Vec<Word>,
    includes_length: bool,
}

impl FunctionalFamily {
    pub fn new(alphabet: Alphabet, factors: Vec<Word>, includes_length: bool) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for u in &factors {
            if u.is_empty() {
                return Err(Error::EmptyFactor);
            }
            alphabet.check(u.letters())?;
            if !seen.insert(u) {
                return Err(Error::DuplicateFactor(u.to_string()));
            }
        }
        Ok(FunctionalFamily {
            alphabet,
            factors,
            includes_length,
        })
    }

    /// Parses comma-free digit strings, e.g. `["0000", "1000"]`.
    pub fn from_strs(alphabet: Alphabet, factors: &[&str], includes_length: bool) -> Result<Self> {
        let words = factors.iter().map(|s| Word::parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, words, includes_length)
    }

    /// All `d^l` words of length `l`, lexicographically.
    pub fn all_of_length(alphabet: Alphabet, l: usize) -> Self {
        FunctionalFamily {
            alphabet,
            factors: all_words(alphabet, l).collect(),
            includes_length: false,
        }
    }

    /// All words of length `1..=l`, shortest first, each length lexicographically.
    pub fn up_to_length(alphabet: Alphabet, l: usize, includes_length: bool) -> Self {
        FunctionalFamily {
            alphabet,
            factors: (1..=l).flat_map(|k| all_words(alphabet, k)).collect(),
            includes_length,
        }
    }

    /// The length functional plus every word of length `1..=l` whose first
    /// and last letters are non-zero.
    pub fn nonzero_ends_basis(alphabet: Alphabet, l: usize) -> Self {
        let factors = (1..=l)
            .flat_map(|k| all_words(alphabet, k))
            .filter(|u| u.first() != Some(0) && u.last() != Some(0))
            .collect();
        FunctionalFamily {
            alphabet,
            factors,
            includes_length: true,
        }
    }

    /// `0000` together with the eight binary words `1V` of length four.
    pub fn nine_function_set() -> Self {
        let mut factors = vec![Word::parse("0000").unwrap()];
        factors.extend(all_words(Alphabet::BINARY, 4).filter(|u| u.first() == Some(1)));
        FunctionalFamily {
            alphabet: Alphabet::BINARY,
            factors,
            includes_length: false,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn includes_length(&self) -> bool {
        self.includes_length
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.factors.len() + usize::from(self.includes_length)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Column headers; the length functional is labelled `length`.
    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.len());
        if self.includes_length {
            out.push("length".to_string());
        }
        out.extend(self.factors.iter().map(Word::to_string));
        out
    }

    fn max_factor_len(&self) -> usize {
        self.factors.iter().map(Word::len).max().unwrap_or(0)
    }

    /// The functionals evaluated on one word.
    pub fn evaluate(&self, w: &CircularWord) -> Result<Vec<u64>> {
        if w.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.size(),
                got: w.alphabet().size(),
            });
        }
        let vectors: Vec<OccurrenceVector> = (1..=self.max_factor_len())
            .map(|k| occurrence_vector(w, k))
            .collect::<Result<_>>()?;
        let mut row = Vec::with_capacity(self.len());
        if self.includes_length {
            row.push(w.len() as u64);
        }
        row.extend(
            self.factors
                .iter()
                .map(|u| vectors[u.len() - 1].counts()[u.index(self.alphabet)]),
        );
        Ok(row)
    }
}

/// Entry `(i, j)` is functional `j` of the family evaluated on word `i`.
pub fn occurrence_matrix(words: &[CircularWord], family: &FunctionalFamily) -> Result<IntegerMatrix> {
    let rows = words
        .iter()
        .map(|w| family.evaluate(w))
        .collect::<Result<Vec<_>>>()?;
    let mut m = IntegerMatrix::from_rows(&rows);
    if rows.is_empty() {
        m = IntegerMatrix::zeros(0, family.len());
    }
    Ok(m)
}

/// CSV dump: a header of column labels, then one line per word.
pub fn matrix_csv(words: &[CircularWord], family: &FunctionalFamily, m: &IntegerMatrix) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["word".to_string()];
    header.extend(family.labels());
    writer.write_record(&header).expect("in-memory write");
    for (w, row) in words.iter().zip(m.row_iter()) {
        let mut record = vec![w.to_string()];
        record.extend(row.iter().map(BigInt::to_string));
        writer.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("ascii")
}

/// Every circular word of length `1..=max_len`, shortest first.
pub fn sample_words(alphabet: Alphabet, max_len: usize) -> Result<Vec<CircularWord>> {
    alphabet.power_bounded(max_len, "sample words", DEFAULT_SAMPLE_LIMIT)?;
    let mut out = Vec::new();
    for m in 1..=max_len {
        out.extend(enumerate_words(alphabet, m)?);
    }
    Ok(out)
}

/// `(d - 1) d^(l - 1) + 1`
pub fn predicted_dimension(alphabet: Alphabet, l: usize) -> usize {
    let d = alphabet.size();
    (d - 1) * d.pow(l as u32 - 1) + 1
}

pub fn default_max_len(l: usize) -> usize {
    2 * l + 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub d: usize,
    pub l: usize,
    pub max_len: usize,
    /// Rank after adding all words of length `1..=m`, for `m = 1..=max_len`.
    pub rank_by_length: Vec<usize>,
    pub rank: usize,
    pub predicted: usize,
    pub columns: usize,
    pub relations: usize,
    /// The rank did not move over the last two added lengths.
    pub saturated: bool,
}

impl SpanReport {
    pub fn matches_prediction(&self) -> bool {
        self.rank == self.predicted
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "d = {}, l = {}, words of length 1..={}\n\
             rank = {}\npredicted = {}\ncolumns = {}\nrelations = {}\n\
             rank by length: {:?}\n",
            self.d,
            self.l,
            self.max_len,
            self.rank,
            self.predicted,
            self.columns,
            self.relations,
            self.rank_by_length
        );
        if !self.saturated {
            out.push_str("warning: rank not yet stable over the last two lengths\n");
        }
        out
    }
}

fn check_sampling(l: usize, max_len: usize) -> Result<()> {
    if l == 0 || max_len < l {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= l <= max_len, got l = {l}, max_len = {max_len}"
        )));
    }
    Ok(())
}

/// Rank of the `d^l` functionals of length-`l` factors, sampled on all
/// words of length `1..=max_len`.
pub fn span_dimension(alphabet: Alphabet, l: usize, max_len: usize) -> Result<SpanReport> {
    check_sampling(l, max_len)?;
    let words = sample_words(alphabet, max_len)?;
    let family = FunctionalFamily::all_of_length(alphabet, l);
    let m = occurrence_matrix(&words, &family)?;

    let mut rank_by_length = Vec::with_capacity(max_len);
    let mut rows = 0;
    for len in 1..=max_len {
        rows += alphabet.power(len).expect("bounded above");
        rank_by_length.push(exact_rank(&m.take_rows(rows)));
    }
    let rank = *rank_by_length.last().expect("max_len >= 1");
    let saturated = max_len >= 3 && rank_by_length[max_len - 3..].iter().all(|&r| r == rank);
    Ok(SpanReport {
        d: alphabet.size(),
        l,
        max_len,
        rank_by_length,
        rank,
        predicted: predicted_dimension(alphabet, l),
        columns: family.len(),
        relations: family.len() - rank,
        saturated,
    })
}

/// Column indices of `cols` that increase the rank of `base` when appended.
fn escaping_columns(m: &IntegerMatrix, base: &[usize], cols: &[usize]) -> Vec<usize> {
    let base_rank = exact_rank(&m.select_columns(base));
    cols.iter()
        .copied()
        .filter(|&c| {
            let mut ext = base.to_vec();
            ext.push(c);
            exact_rank(&m.select_columns(&ext)) > base_rank
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningSetCheck {
    pub set: Vec<String>,
    pub rank: usize,
    pub independent: bool,
    /// Length-4 functionals outside the span of the set.
    pub escaping: Vec<String>,
    /// The non-loop words of the set form a spanning tree of `B(2,3)`.
    pub spanning_tree: bool,
}

impl SpanningSetCheck {
    pub fn passed(&self) -> bool {
        self.independent && self.escaping.is_empty() && self.spanning_tree
    }
}

/// Checks that `{0000} ∪ {1V}` is a basis of the sixteen length-4 functionals.
pub fn verify_spanning_set(max_len: usize) -> Result<SpanningSetCheck> {
    verify_spanning_set_for(FunctionalFamily::nine_function_set().factors(), max_len)
}

/// Same check for an arbitrary set of binary length-4 words.
pub fn verify_spanning_set_for(set: &[Word], max_len: usize) -> Result<SpanningSetCheck> {
    check_sampling(4, max_len)?;
    let alphabet = Alphabet::BINARY;
    let all = FunctionalFamily::all_of_length(alphabet, 4);
    // Validates letters and duplicates.
    FunctionalFamily::new(alphabet, set.to_vec(), false)?;
    if let Some(u) = set.iter().find(|u| u.len() != 4) {
        return Err(Error::InvalidArgument(format!("{u} is not of length 4")));
    }
    let words = sample_words(alphabet, max_len)?;
    let m = occurrence_matrix(&words, &all)?;
    let base: Vec<usize> = set.iter().map(|u| u.index(alphabet)).collect();
    let rest: Vec<usize> = (0..all.len()).filter(|c| !base.contains(c)).collect();
    let rank = exact_rank(&m.select_columns(&base));
    let escaping = escaping_columns(&m, &base, &rest)
        .into_iter()
        .map(|c| all.factors()[c].to_string())
        .collect();

    let g = build_graph(alphabet, 3)?;
    let non_loops: Vec<Word> = set
        .iter()
        .filter(|u| u.letters().iter().any(|&a| a != u.letters()[0]))
        .cloned()
        .collect();
    Ok(SpanningSetCheck {
        set: set.iter().map(Word::to_string).collect(),
        rank,
        independent: rank == set.len(),
        escaping,
        spanning_tree: is_spanning_tree(&g, &non_loops)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCheck {
    pub d: usize,
    pub l: usize,
    pub basis: Vec<String>,
    pub rank: usize,
    pub predicted: usize,
    /// Functionals `|W|_U`, `1 <= |U| <= l`, outside the span of the basis.
    pub escaping: Vec<String>,
}

impl BasisCheck {
    pub fn passed(&self) -> bool {
        self.rank == self.predicted && self.basis.len() == self.rank && self.escaping.is_empty()
    }
}

/// Checks that the length functional and the words of length `1..=l` with
/// non-zero first and last letters span every `|W|_U` with `|U| <= l`, with
/// rank `(d - 1) d^(l - 1) + 1`.
pub fn verify_cks_basis(alphabet: Alphabet, l: usize, max_len: usize) -> Result<BasisCheck> {
    check_sampling(l, max_len)?;
    let basis = FunctionalFamily::nonzero_ends_basis(alphabet, l);
    let everything = FunctionalFamily::up_to_length(alphabet, l, true);
    let words = sample_words(alphabet, max_len)?;
    let m = occurrence_matrix(&words, &everything)?;
    let labels = everything.labels();
    let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let basis_labels = basis.labels();
    let base: Vec<usize> = basis_labels.iter().map(|s| index[s.as_str()]).collect();
    let rest: Vec<usize> = (0..everything.len()).filter(|c| !base.contains(c)).collect();
    let rank = exact_rank(&m.select_columns(&base));
    let escaping = escaping_columns(&m, &base, &rest)
        .into_iter()
        .map(|c| labels[c].clone())
        .collect();
    Ok(BasisCheck {
        d: alphabet.size(),
        l,
        basis: basis_labels,
        rank,
        predicted: predicted_dimension(alphabet, l),
        escaping,
    })
}

/// Solves `|W|_target = sum_j c_j f_j(W)` exactly on all words of length
/// `1..=max_len`. An empty target stands for the length functional. When the
/// basis is dependent, coefficients of non-pivot columns are zero.
pub fn express_in_span(target: &Word, basis: &FunctionalFamily, max_len: usize) -> Result<Vec<BigRational>> {
    let alphabet = basis.alphabet();
    alphabet.check(target.letters())?;
    let words = sample_words(alphabet, max_len)?;
    let a = occurrence_matrix(&words, basis)?;
    let b: Vec<u64> = words
        .iter()
        .map(|w| target_value(w, target))
        .collect::<Result<_>>()?;

    // Duplicate sample rows carry no information.
    let mut system: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for (row, rhs) in a.row_iter().zip(&b) {
        let mut r = row.to_vec();
        r.push(BigInt::from(*rhs));
        system.insert(r);
    }
    let cols = basis.len();
    let mut rows: Vec<Vec<BigRational>> = system
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();

    // Reduced row echelon form of [A | b].
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[cols].is_zero()) {
        let name = if target.is_empty() { "length".to_string() } else { target.to_string() };
        return Err(Error::NotInSpan(name));
    }
    let mut coefficients = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        coefficients[c] = rows[r][cols].clone();
    }
    Ok(coefficients)
}

fn target_value(w: &CircularWord, target: &Word) -> Result<u64> {
    if target.is_empty() {
        return Ok(w.len() as u64);
    }
    Ok(occurrence_vector(w, target.len())?.counts()[target.index(w.alphabet())])
}

/// `sum_j c_j f_j(w)` for the functionals of `basis`.
pub fn evaluate_combination(coefficients: &[BigRational], basis: &FunctionalFamily, w: &CircularWord) -> Result<BigRational> {
    let values = basis.evaluate(w)?;
    Ok(coefficients
        .iter()
        .zip(values)
        .map(|(c, v)| c * BigRational::from_integer(BigInt::from(v)))
        .sum())
}

/// Whether `|w|_target` equals the combination on `w`.
pub fn combination_holds(coefficients: &[BigRational], basis: &FunctionalFamily, target: &Word, w: &CircularWord) -> Result<bool> {
    let lhs = BigRational::from_integer(BigInt::from(target_value(w, target)?));
    Ok(evaluate_combination(coefficients, basis, w)? == lhs)
}

/// Exact rational as `p/q`, always with an explicit denominator.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Human-readable `c1·U1 + c2·U2 ...`, skipping zero coefficients.
pub fn format_combination(coefficients: &[BigRational], basis: &FunctionalFamily) -> String {
    let terms: Vec<String> = coefficients
        .iter()
        .zip(basis.labels())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, label)| {
            if c.is_one() {
                label
            } else if (-c).is_one() {
                format!("-{label}")
            } else if c.is_integer() {
                format!("{}·{label}", c.numer())
            } else {
                format!("({})·{label}", format_rational(c))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// For every `U` with `1 <= |U| < l`: `|W|_U` equals the sum of `|W|_V` over
/// the length-`l` words `V` having `U` as a prefix.
pub fn marginalization_check(w: &CircularWord, l: usize) -> Result<bool> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!("marginalization needs l >= 2, got {l}")));
    }
    let d = w.alphabet().size();
    let full = occurrence_vector(w, l)?;
    for m in 1..l {
        let shorter = occurrence_vector(w, m)?;
        let block = d.pow((l - m) as u32);
        let ok = shorter
            .counts()
            .iter()
            .enumerate()
            .all(|(u, &c)| full.counts()[u * block..(u + 1) * block].iter().sum::<u64>() == c);
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row per vertex `U` of `B(d, n)`: the coefficient vector over edges of
/// `sum_a |W|_{Ua} - sum_a |W|_{aU}`, which vanishes on every circular word.
pub fn kirchhoff_relations(alphabet: Alphabet, n: usize) -> Result<IntegerMatrix> {
    let g = build_graph(alphabet, n)?;
    let mut m = IntegerMatrix::zeros(g.vertex_count(), g.edge_count());
    for v in 0..g.vertex_count() {
        let mut row = vec![0i64; g.edge_count()];
        for e in g.out_edges(v) {
            row[e] += 1;
        }
        for e in g.in_edges(v) {
            row[e] -= 1;
        }
        for (e, x) in row.into_iter().enumerate() {
            m.set(v, e, BigInt::from(x));
        }
    }
    Ok(m)
}

/// Whether every entry has absolute value at most one; relation rows of
/// [`kirchhoff_relations`] always do.
pub fn is_unit_bounded(m: &IntegerMatrix) -> bool {
    m.row_iter().flatten().all(|x| x.abs() <= BigInt::one())
}
