//! Codes of minimum distance 3 in the hypercube: the recursive Hamming
//! construction, the parity-biased extension step, the run-suppressing
//! variant that keeps long blocks of 1s out of every codeword, and full
//! domination sweeps that certify perfectness.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitword::{Word, MAX_LEN};
use crate::error::{Error, Result};

/// Outcome of a perfect-code verification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyStatus {
    /// Every vertex lies in the closed neighbourhood of exactly one codeword.
    PerfectCode,
    /// Two codewords are too close (or a codeword is not even a vertex).
    NotCode,
    /// Some vertex has no codeword in its closed neighbourhood.
    NotDominated,
    /// Some vertex has two or more codewords in its closed neighbourhood.
    MultiplyDominated,
}

impl fmt::Display for VerifyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerifyStatus::PerfectCode => "PerfectCode",
            VerifyStatus::NotCode => "NotCode",
            VerifyStatus::NotDominated => "NotDominated",
            VerifyStatus::MultiplyDominated => "MultiplyDominated",
        };
        f.write_str(s)
    }
}

/// Re-checkable evidence for a failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// Two codewords violating the pairwise distance requirement.
    Pair(Word, Word),
    /// A vertex dominated zero or several times, or a codeword outside
    /// the graph.
    Vertex(Word),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
            Witness::Vertex(v) => write!(f, "{v}"),
        }
    }
}

/// Which graph a verification sweep ran in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphDescriptor {
    Hypercube { n: u32 },
    Avoidance { n: u32, pattern: Word },
}

impl fmt::Display for GraphDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphDescriptor::Hypercube { n } => write!(f, "Q{n}"),
            GraphDescriptor::Avoidance { n, pattern } => {
                if pattern.bits().count_ones() == pattern.len() {
                    write!(f, "Gamma{n}(1^{})", pattern.len())
                } else {
                    write!(f, "Gamma{n}({pattern})")
                }
            }
        }
    }
}

/// Machine-readable certificate produced by the verification sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub status: VerifyStatus,
    pub witness: Option<Witness>,
    pub code_size: usize,
    pub max_run: u32,
    pub graph: GraphDescriptor,
}

impl VerificationReport {
    pub fn is_perfect(&self) -> bool {
        self.status == VerifyStatus::PerfectCode
    }

    fn n(&self) -> u32 {
        match self.graph {
            GraphDescriptor::Hypercube { n } => n,
            GraphDescriptor::Avoidance { n, .. } => n,
        }
    }

    /// Flat key-value rendering, one `key: value` pair per line.
    pub fn render_kv(&self) -> String {
        let witness = match &self.witness {
            None => "none".to_string(),
            Some(w) => w.to_string(),
        };
        format!(
            "status: {}\ngraph: {}\nn: {}\ncode_size: {}\nmax_run: {}\nwitness: {}\n",
            self.status,
            self.graph,
            self.n(),
            self.code_size,
            self.max_run,
            witness
        )
    }
}

/// A set of equal-length words, pairwise-distinct, kept in ascending
/// mask order. Whether it is a *code* (pairwise distance >= 3) is a
/// property to check, not an invariant of the type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    n: u32,
    words: Vec<Word>,
}

impl Code {
    /// Build a code over words of length `n`. The input may arrive in
    /// any order and with repeats; it is sorted and deduplicated.
    pub fn new(n: u32, mut words: Vec<Word>) -> Result<Code> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::LengthOutOfRange(n as u64));
        }
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
        }
        words.sort_unstable_by_key(Word::bits);
        words.dedup();
        Ok(Code { n, words })
    }

    /// Like [`Code::new`] with the length taken from the first word.
    pub fn from_words(words: Vec<Word>) -> Result<Code> {
        let n = words.first().ok_or(Error::EmptyCode)?.len();
        Code::new(n, words)
    }

    /// Parse the plain-text code format: one word per line, lines
    /// starting with '#' ignored, all words of equal length. Ragged
    /// input is rejected with the offending line number.
    pub fn parse(text: &str) -> Result<Code> {
        let mut words: Vec<Word> = Vec::new();
        let mut n = 0u32;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') {
                continue;
            }
            let word: Word = line.parse().map_err(|e: Error| e.at_line(idx + 1))?;
            if n == 0 {
                n = word.len();
            } else if word.len() != n {
                return Err(Error::RaggedWord {
                    expected: n,
                    found: word.len(),
                }
                .at_line(idx + 1));
            }
            words.push(word);
        }
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        Code::new(n, words)
    }

    /// One word per line in ascending mask order, trailing newline.
    pub fn render_lines(&self) -> String {
        let mut out = String::with_capacity(self.words.len() * (self.n as usize + 1));
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    #[inline]
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = Word> + '_ {
        self.words.iter().copied()
    }

    pub fn contains(&self, w: Word) -> bool {
        w.len() == self.n && self.words.binary_search_by_key(&w.bits(), Word::bits).is_ok()
    }

    /// The first (by ascending mask, then ascending partner mask) pair
    /// of codewords at Hamming distance < 3, if any.
    pub fn min_distance_violation(&self) -> Option<(Word, Word)> {
        for (i, &a) in self.words.iter().enumerate() {
            for &b in &self.words[i + 1..] {
                if (a.bits() ^ b.bits()).count_ones() < 3 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// True iff all distinct codewords are at Hamming distance >= 3.
    pub fn is_code(&self) -> bool {
        self.min_distance_violation().is_none()
    }

    /// Longest block of consecutive 1s over all codewords; 0 if empty.
    pub fn max_run_ones(&self) -> u32 {
        self.words.iter().map(|w| w.max_run_ones()).max().unwrap_or(0)
    }

    /// Counts of codewords by their longest 1-run.
    pub fn run_histogram(&self) -> BTreeMap<u32, u64> {
        run_histogram(self.iter())
    }

    /// |C| * (n+1) == 2^n, the counting condition every perfect code of
    /// the hypercube satisfies.
    pub fn satisfies_sphere_packing(&self) -> bool {
        self.words.len() as u128 * (self.n as u128 + 1) == 1u128 << self.n
    }

    /// XOR every codeword with `t`. Preserves pairwise distances and
    /// perfectness in the hypercube.
    pub fn translate(&self, t: Word) -> Result<Code> {
        if t.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: t.len(),
            });
        }
        let words = self
            .words
            .iter()
            .map(|w| w.xor_add(t))
            .collect::<Result<Vec<_>>>()?;
        Code::new(self.n, words)
    }

    /// Full 2^n domination sweep deciding whether this is a perfect code
    /// of the n-cube. Capped at n <= 25.
    ///
    /// The pairwise distance check runs first, so `NotCode` means
    /// exactly "not a code" and every status is translation-invariant;
    /// its witness is the smallest violating pair. The counting
    /// condition |C|(n+1) = 2^n is a fast-fail cross-check: when it
    /// holds and the distance check passes, the sweep must come out
    /// perfect, and when it fails the sweep pins the smallest vertex
    /// dominated the wrong number of times (necessarily zero times,
    /// distance 3 having ruled out overlaps).
    pub fn verify_perfect_qn(&self) -> Result<VerificationReport> {
        let n = self.n;
        if n > 25 {
            return Err(Error::Capacity {
                task: "hypercube domination sweep (2^n vertices)",
                needed: n as u64,
                limit: 25,
            });
        }
        let graph = GraphDescriptor::Hypercube { n };
        let mut report = VerificationReport {
            status: VerifyStatus::PerfectCode,
            witness: None,
            code_size: self.words.len(),
            max_run: self.max_run_ones(),
            graph,
        };

        if let Some((a, b)) = self.min_distance_violation() {
            report.status = VerifyStatus::NotCode;
            report.witness = Some(Witness::Pair(a, b));
            return Ok(report);
        }

        let mut counts = vec![0u8; 1usize << n];
        for w in &self.words {
            counts[w.bits() as usize] += 1;
            for i in 0..n {
                counts[(w.bits() ^ 1 << i) as usize] += 1;
            }
        }
        for v in 0..1u64 << n {
            match counts[v as usize] {
                1 => {}
                0 => {
                    report.status = VerifyStatus::NotDominated;
                    report.witness = Some(Witness::Vertex(Word::new(n, v)?));
                    return Ok(report);
                }
                _ => unreachable!("closed balls of a distance-3 code are disjoint"),
            }
        }
        debug_assert!(self.satisfies_sphere_packing());
        Ok(report)
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// Counts of words by their longest 1-run; total equals the number of
/// words consumed.
pub fn run_histogram<I: IntoIterator<Item = Word>>(words: I) -> BTreeMap<u32, u64> {
    let mut hist = BTreeMap::new();
    for w in words {
        *hist.entry(w.max_run_ones()).or_insert(0u64) += 1;
    }
    hist
}

/// How a word of odd length 2m+1 containing a window of m+1 zeros
/// decomposes: either `0^{m+1} y` (index 0) or `z 1 0^{m+1} y` (index
/// i >= 1 with |z| = i-1, |y| = m-i). Empty components are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroWindowSplit {
    pub index: u32,
    pub prefix: Option<Word>,
    pub suffix: Option<Word>,
}

/// Classify `w` (length 2m+1) by the leftmost window of m+1 zeros.
/// The classes are disjoint and cover every word with such a window:
/// minimality of the window position forces a 1 immediately before it.
pub fn split_at_zero_window(w: Word, m: u32) -> Result<ZeroWindowSplit> {
    let n = 2 * m + 1;
    if w.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: w.len(),
        });
    }
    let window = (1u64 << (m + 1)) - 1;
    let index = (0..=m)
        .find(|&off| w.bits() >> off & window == 0)
        .ok_or_else(|| Error::NoZeroWindow {
            word: w.to_string(),
            zeros: m + 1,
        })?;
    if index > 0 {
        debug_assert_eq!(w.get(index), 1);
    }
    let (prefix, suffix) = if index == 0 {
        (None, w.slice(m + 2, m))
    } else {
        (w.slice(1, index - 1), w.slice(index + m + 2, m - index))
    };
    Ok(ZeroWindowSplit {
        index,
        prefix,
        suffix,
    })
}

/// Rebuild the word a [`ZeroWindowSplit`] came from: `0^{m+1} y` for
/// index 0, else `z 1 0^{m+1} y`. Validates that the parts have the
/// lengths the class prescribes.
pub fn reassemble_zero_window(m: u32, split: &ZeroWindowSplit) -> Result<Word> {
    let window = Word::zeros(m + 1)?;
    let i = split.index;
    if i > m {
        return Err(Error::ParamRange {
            name: "index",
            value: i as u64,
            range: "0..=m",
        });
    }
    let prefix_len = split.prefix.map_or(0, |z| z.len());
    if prefix_len != i.saturating_sub(1) {
        return Err(Error::LengthMismatch {
            left: i.saturating_sub(1),
            right: prefix_len,
        });
    }
    let mut word = match split.prefix {
        None if i == 0 => window,
        None => Word::ones(1)?.concat(window)?,
        Some(z) => z.concat(Word::ones(1)?)?.concat(window)?,
    };
    if let Some(y) = split.suffix {
        word = word.concat(y)?;
    }
    if word.len() != 2 * m + 1 {
        return Err(Error::LengthMismatch {
            left: 2 * m + 1,
            right: word.len(),
        });
    }
    Ok(word)
}

#[derive(Clone)]
enum BiasRule {
    Zero,
    Table(Vec<u8>),
    SuppressRuns { m: u32 },
}

/// A total map from words of length r to Z_2, plugged into the middle
/// bit of the extension step.
#[derive(Clone)]
pub struct BiasFunction {
    r: u32,
    rule: BiasRule,
}

impl BiasFunction {
    /// Identically zero; the extension step then reproduces the
    /// classical Hamming recursion.
    pub fn zero(r: u32) -> Result<BiasFunction> {
        if r == 0 || r > MAX_LEN {
            return Err(Error::LengthOutOfRange(r as u64));
        }
        Ok(BiasFunction {
            r,
            rule: BiasRule::Zero,
        })
    }

    /// Explicit table indexed by word mask; must have exactly 2^r
    /// entries, each 0 or 1.
    pub fn from_table(r: u32, table: Vec<u8>) -> Result<BiasFunction> {
        if r == 0 || r > 25 {
            return Err(Error::ParamRange {
                name: "r",
                value: r as u64,
                range: "1..=25 (table form)",
            });
        }
        if table.len() != 1usize << r {
            return Err(Error::ParamRange {
                name: "table length",
                value: table.len() as u64,
                range: "2^r",
            });
        }
        if table.iter().any(|&v| v > 1) {
            return Err(Error::ParamRange {
                name: "table entry",
                value: 2,
                range: "0..=1",
            });
        }
        Ok(BiasFunction {
            r,
            rule: BiasRule::Table(table),
        })
    }

    /// The four-case bias over words of length 2m+1 that steers the
    /// extension step away from long 1-runs: words starting with a
    /// zero window map to 1, a lone leading 1 before the window maps
    /// to 0, a longer prefix z before the separating 1 maps to the
    /// parity of z, and everything without a zero window maps to 0.
    /// For m = 0 this degenerates to f(0) = 1, f(1) = 0.
    pub fn suppress_runs(m: u32) -> Result<BiasFunction> {
        if 2 * m + 1 > MAX_LEN {
            return Err(Error::ParamRange {
                name: "m",
                value: m as u64,
                range: "0..=31",
            });
        }
        Ok(BiasFunction {
            r: 2 * m + 1,
            rule: BiasRule::SuppressRuns { m },
        })
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Evaluate at a word of length r (total on that domain).
    pub fn eval(&self, w: Word) -> u8 {
        assert_eq!(
            w.len(),
            self.r,
            "bias function over length {} evaluated at a word of length {}",
            self.r,
            w.len()
        );
        match &self.rule {
            BiasRule::Zero => 0,
            BiasRule::Table(t) => t[w.bits() as usize],
            BiasRule::SuppressRuns { m } => match split_at_zero_window(w, *m) {
                Ok(split) => match split.index {
                    0 => 1,
                    1 => 0,
                    _ => split.prefix.expect("index >= 2 has a prefix").parity(),
                },
                Err(_) => 0,
            },
        }
    }
}

impl fmt::Debug for BiasFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.rule {
            BiasRule::Zero => "zero",
            BiasRule::Table(_) => "table",
            BiasRule::SuppressRuns { .. } => "suppress-runs",
        };
        write!(f, "BiasFunction(r={}, {kind})", self.r)
    }
}

/// Cap on materialized construction size; beyond it, use the streaming
/// form.
const MATERIALIZE_CAP: u64 = 1 << 24;

/// The extension step: from a perfect code over length r and a bias f,
/// produce `{ x || parity(x)+f(c) || x+c }` over length 2r+1, emitted in
/// strictly ascending mask order with O(|base|) working memory.
///
/// The suffix x+c occupies the high bits, so the stream walks suffix
/// values upward and sorts the |base| words sharing each suffix.
pub struct VasilevStream {
    r: u32,
    pairs: Vec<(u64, u8)>,
    next_suffix: u64,
    buf: Vec<u64>,
    pos: usize,
}

impl VasilevStream {
    fn new(base: &Code, bias: &BiasFunction) -> Result<VasilevStream> {
        let r = base.n();
        if bias.r() != r {
            return Err(Error::LengthMismatch {
                left: r,
                right: bias.r(),
            });
        }
        if 2 * r + 1 > MAX_LEN {
            return Err(Error::ConcatOverflow {
                left: r,
                right: r + 1,
            });
        }
        let pairs = base
            .iter()
            .map(|c| (c.bits(), bias.eval(c)))
            .collect::<Vec<_>>();
        Ok(VasilevStream {
            r,
            pairs,
            next_suffix: 0,
            buf: Vec::new(),
            pos: 0,
        })
    }

    /// Total number of words the stream will yield: 2^r * |base|.
    pub fn expected_len(&self) -> u64 {
        (1u64 << self.r) * self.pairs.len() as u64
    }

    /// Output word length, 2r+1.
    pub fn word_len(&self) -> u32 {
        2 * self.r + 1
    }
}

impl Iterator for VasilevStream {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        while self.pos == self.buf.len() {
            if self.next_suffix >= 1u64 << self.r {
                return None;
            }
            let u = self.next_suffix;
            self.next_suffix += 1;
            self.buf.clear();
            self.pos = 0;
            for &(c, fc) in &self.pairs {
                let x = c ^ u;
                let mid = (x.count_ones() as u8 & 1) ^ fc;
                self.buf
                    .push(x | (mid as u64) << self.r | u << (self.r + 1));
            }
            self.buf.sort_unstable();
        }
        let bits = self.buf[self.pos];
        self.pos += 1;
        Some(Word::new(2 * self.r + 1, bits).expect("stream words are in range"))
    }
}

/// Streaming form of [`vasilev_extend`]; the only way to traverse
/// outputs too large to hold in memory.
pub fn vasilev_stream(base: &Code, bias: &BiasFunction) -> Result<VasilevStream> {
    VasilevStream::new(base, bias)
}

/// Materialized extension step. The output is a perfect code of the
/// (2r+1)-cube whenever the base is a perfect code of the r-cube, for
/// every choice of bias.
pub fn vasilev_extend(base: &Code, bias: &BiasFunction) -> Result<Code> {
    let stream = VasilevStream::new(base, bias)?;
    if stream.expected_len() > MATERIALIZE_CAP {
        return Err(Error::Capacity {
            task: "materialized extension (use the streaming form)",
            needed: stream.expected_len(),
            limit: MATERIALIZE_CAP,
        });
    }
    let n = stream.word_len();
    Code::new(n, stream.collect())
}

/// The Hamming code of length 2^p - 1, built by iterating the zero-bias
/// extension step from the one-word base {0}. Materialized, so p is
/// capped at 4 (2048 words of length 15).
pub fn hamming_code(p: u32) -> Result<Code> {
    if !(1..=4).contains(&p) {
        return Err(Error::ParamRange {
            name: "p",
            value: p as u64,
            range: "1..=4",
        });
    }
    let mut code = Code::new(1, vec![Word::zeros(1)?])?;
    for _ in 1..p {
        code = vasilev_extend(&code, &BiasFunction::zero(code.n())?)?;
    }
    Ok(code)
}

/// Longest 1-run that [`run_avoiding_code`] is guaranteed to stay
/// strictly below: 3 * 2^(p-2).
pub fn guaranteed_run_bound(p: u32) -> u32 {
    3 << (p - 2)
}

fn run_avoiding_parts(p: u32, base: Option<&Code>) -> Result<(Code, BiasFunction)> {
    if !(2..=5).contains(&p) {
        return Err(Error::ParamRange {
            name: "p",
            value: p as u64,
            range: "2..=5",
        });
    }
    let m = (1u32 << (p - 2)) - 1;
    let r = 2 * m + 1;
    let base = match base {
        None => hamming_code(p - 1)?,
        Some(b) => {
            if b.n() != r {
                return Err(Error::LengthMismatch {
                    left: r,
                    right: b.n(),
                });
            }
            if !b.verify_perfect_qn()?.is_perfect() {
                return Err(Error::InvalidBase { n: r });
            }
            b.clone()
        }
    };
    Ok((base, BiasFunction::suppress_runs(m)?))
}

/// A perfect code of the (2^p - 1)-cube in which no codeword contains a
/// run of 3 * 2^(p-2) ones: one run-suppressing extension step on a
/// perfect code of half the dimension (default: the Hamming code).
/// Materialized for p in 2..=4; use [`run_avoiding_stream`] for p = 5.
pub fn run_avoiding_code(p: u32, base: Option<&Code>) -> Result<Code> {
    let (base, bias) = run_avoiding_parts(p, base)?;
    vasilev_extend(&base, &bias)
}

/// Streaming form of [`run_avoiding_code`], valid for p in 2..=5. At
/// p = 5 it yields 2^26 words of length 31 in ascending mask order
/// without materializing them.
pub fn run_avoiding_stream(p: u32, base: Option<&Code>) -> Result<VasilevStream> {
    let (base, bias) = run_avoiding_parts(p, base)?;
    vasilev_stream(&base, &bias)
}

/// The 16-word perfect code of the 7-cube obtained from base {000, 111}
/// with bias 1 on both base codewords. Perfect in the subgraph avoiding
/// 11111: no codeword has a 1-run longer than 4.
pub fn example_gamma7_code() -> Code {
    let base = Code::new(
        3,
        vec![Word::zeros(3).expect("len 3"), Word::ones(3).expect("len 3")],
    )
    .expect("two words of length 3");
    let mut table = vec![0u8; 8];
    table[0b000] = 1;
    table[0b111] = 1;
    let bias = BiasFunction::from_table(3, table).expect("8-entry table");
    vasilev_extend(&base, &bias).expect("extension of a 3-bit base")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn code(words: &[&str]) -> Code {
        Code::from_words(words.iter().map(|s| w(s)).collect()).unwrap()
    }

    // Character-level reimplementation of the extension step, used as an
    // independent oracle for the bitmask route.
    fn naive_vasilev(base: &[&str], bias: &dyn Fn(&str) -> u8) -> Vec<String> {
        let r = base[0].len();
        let mut out = Vec::new();
        for xb in 0..1u64 << r {
            let x: String = (0..r)
                .map(|i| if xb >> i & 1 == 1 { '1' } else { '0' })
                .collect();
            for c in base {
                let parity = x.chars().filter(|&ch| ch == '1').count() % 2;
                let mid = (parity as u8 + bias(c)) % 2;
                let sum: String = x
                    .chars()
                    .zip(c.chars())
                    .map(|(a, b)| if a == b { '0' } else { '1' })
                    .collect();
                out.push(format!("{x}{mid}{sum}"));
            }
        }
        out.sort_by_key(|s| s.parse::<Word>().unwrap().bits());
        out
    }

    #[test]
    fn code_sorts_and_dedups() {
        let c = code(&["101", "010", "101"]);
        assert_eq!(c.len(), 2);
        assert_eq!(c.words(), &[w("010"), w("101")]);
        assert!(c.contains(w("101")));
        assert!(!c.contains(w("000")));
    }

    #[test]
    fn code_rejects_mixed_lengths() {
        let err = Code::from_words(vec![w("010"), w("0101")]).unwrap_err();
        assert_eq!(err, Error::LengthMismatch { left: 3, right: 4 });
    }

    #[test]
    fn parse_and_render_roundtrip() {
        let text = "# comment\n010\n101\n";
        let c = Code::parse(text).unwrap();
        assert_eq!(c.render_lines(), "010\n101\n");
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = Code::parse("# ok\n010\n1x1\n").unwrap_err();
        assert_eq!(
            err,
            Error::InvalidChar {
                position: 2,
                found: 'x'
            }
            .at_line(3)
        );
        assert!(err.to_string().contains("line 3"));

        let err = Code::parse("010\n0101\n").unwrap_err();
        assert_eq!(
            err,
            Error::RaggedWord {
                expected: 3,
                found: 4
            }
            .at_line(2)
        );

        assert_eq!(Code::parse("# only comments\n"), Err(Error::EmptyCode));
    }

    #[test]
    fn is_code_examples() {
        assert!(code(&["000", "111"]).is_code());
        assert!(code(&["010", "101"]).is_code());
        let c = code(&["000", "011"]);
        assert_eq!(c.min_distance_violation(), Some((w("000"), w("011"))));
    }

    #[test]
    fn verify_qn_accepts_the_two_codes_of_q3() {
        for c in [code(&["000", "111"]), code(&["010", "101"])] {
            let report = c.verify_perfect_qn().unwrap();
            assert!(report.is_perfect(), "{}", report.render_kv());
            assert_eq!(report.witness, None);
            assert_eq!(report.code_size, 2);
        }
    }

    #[test]
    fn verify_qn_not_dominated() {
        let report = code(&["000"]).verify_perfect_qn().unwrap();
        assert_eq!(report.status, VerifyStatus::NotDominated);
        // Smallest undominated vertex by mask: 110 (mask 3) is at
        // distance 2 from 000, as is every other witness candidate.
        assert_eq!(report.witness, Some(Witness::Vertex(w("110"))));
        let Witness::Vertex(v) = report.witness.unwrap() else {
            panic!("expected a vertex witness");
        };
        assert!(v.hamming_distance(w("000")).unwrap() >= 2);
    }

    #[test]
    fn verify_qn_not_code_with_pair_witness() {
        let report = code(&["000", "011"]).verify_perfect_qn().unwrap();
        assert_eq!(report.status, VerifyStatus::NotCode);
        assert_eq!(report.witness, Some(Witness::Pair(w("000"), w("011"))));
    }

    #[test]
    fn verify_qn_capacity_cap() {
        let c = Code::new(26, vec![Word::zeros(26).unwrap()]).unwrap();
        assert!(matches!(
            c.verify_perfect_qn(),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn report_renders_flat_key_values() {
        let report = code(&["010", "101"]).verify_perfect_qn().unwrap();
        assert_eq!(
            report.render_kv(),
            "status: PerfectCode\ngraph: Q3\nn: 3\ncode_size: 2\nmax_run: 1\nwitness: none\n"
        );
    }

    #[test]
    fn vasilev_base_zero_with_bias_one_gives_the_gamma3_code() {
        let base = code(&["0"]);
        let bias = BiasFunction::from_table(1, vec![1, 0]).unwrap();
        let c = vasilev_extend(&base, &bias).unwrap();
        assert_eq!(c, code(&["010", "101"]));
    }

    #[test]
    fn vasilev_base_zero_with_zero_bias_gives_the_repetition_code() {
        let base = code(&["0"]);
        let c = vasilev_extend(&base, &BiasFunction::zero(1).unwrap()).unwrap();
        assert_eq!(c, code(&["000", "111"]));
    }

    #[test]
    fn vasilev_from_q3_base_is_perfect_in_q7() {
        let base = code(&["000", "111"]);
        let mut table = vec![0u8; 8];
        table[0b011] = 1;
        let bias = BiasFunction::from_table(3, table).unwrap();
        let c = vasilev_extend(&base, &bias).unwrap();
        assert_eq!(c.len(), 16);
        assert!(c.verify_perfect_qn().unwrap().is_perfect());
    }

    #[test]
    fn vasilev_matches_character_level_oracle() {
        let base = code(&["000", "111"]);
        let bias = BiasFunction::suppress_runs(1).unwrap();
        let got: Vec<String> = vasilev_extend(&base, &bias)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        let naive = naive_vasilev(&["000", "111"], &|c| {
            // same rule, written on characters: 00-prefix -> 1, 1 then
            // 00 -> 0, otherwise 0
            let s: &str = c;
            if s.starts_with("00") {
                1
            } else {
                0
            }
        });
        assert_eq!(got, naive);
    }

    #[test]
    fn stream_and_materialized_agree() {
        for p in 2..=4 {
            let streamed: Vec<Word> = run_avoiding_stream(p, None).unwrap().collect();
            let materialized = run_avoiding_code(p, None).unwrap();
            assert_eq!(streamed, materialized.words());
            assert!(streamed.windows(2).all(|p| p[0].bits() < p[1].bits()));
        }
    }

    #[test]
    fn hamming_code_base_cases() {
        assert_eq!(hamming_code(1).unwrap(), code(&["0"]));
        assert_eq!(hamming_code(2).unwrap(), code(&["000", "111"]));
        assert!(hamming_code(0).is_err());
        assert!(hamming_code(5).is_err());
    }

    #[test]
    fn hamming_code_p3_contents() {
        let c = hamming_code(3).unwrap();
        assert_eq!(c.len(), 16);
        assert!(c.contains(w("0000000")));
        assert!(c.contains(w("1111111")));
        assert!(c.verify_perfect_qn().unwrap().is_perfect());
        // Run histogram computed by hand from the 16 codewords.
        let hist = c.run_histogram();
        let expected: BTreeMap<u32, u64> =
            [(0, 1), (1, 3), (2, 8), (3, 1), (4, 2), (7, 1)].into();
        assert_eq!(hist, expected);
    }

    #[test]
    fn hamming_codes_are_linear() {
        for p in 1..=4 {
            let c = hamming_code(p).unwrap();
            assert!(c.contains(Word::zeros(c.n()).unwrap()));
            for &a in c.words() {
                for &b in c.words() {
                    assert!(c.contains(a.xor_add(b).unwrap()), "p={p} {a}+{b}");
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        // 0000101 = 0^4 || 101
        let s = split_at_zero_window(w("0000101"), 3).unwrap();
        assert_eq!(s.index, 0);
        assert_eq!(s.prefix, None);
        assert_eq!(s.suffix, Some(w("101")));

        // 0100001 = 0 || 1 || 0000 || 1
        let s = split_at_zero_window(w("0100001"), 3).unwrap();
        assert_eq!(s.index, 2);
        assert_eq!(s.prefix, Some(w("0")));
        assert_eq!(s.suffix, Some(w("1")));

        assert!(matches!(
            split_at_zero_window(w("1010101"), 3),
            Err(Error::NoZeroWindow { .. })
        ));

        // m = 0 degenerate case
        let s = split_at_zero_window(w("0"), 0).unwrap();
        assert_eq!((s.index, s.prefix, s.suffix), (0, None, None));
        assert!(split_at_zero_window(w("1"), 0).is_err());
    }

    #[test]
    fn split_rejects_wrong_length() {
        assert_eq!(
            split_at_zero_window(w("00000"), 3),
            Err(Error::LengthMismatch { left: 7, right: 5 })
        );
    }

    #[test]
    fn split_reassembles_exhaustively() {
        for m in 0..=4u32 {
            let n = 2 * m + 1;
            let window = Word::zeros(m + 1).unwrap();
            let mut in_domain = 0u64;
            for word in Word::all(n).unwrap() {
                if !word.contains_substring(window) {
                    assert!(split_at_zero_window(word, m).is_err());
                    continue;
                }
                in_domain += 1;
                let split = split_at_zero_window(word, m).unwrap();
                assert!(split.index <= m);
                assert_eq!(reassemble_zero_window(m, &split).unwrap(), word);
            }
            assert!(in_domain > 0);
        }
    }

    #[test]
    fn suppress_runs_bias_m1() {
        let f = BiasFunction::suppress_runs(1).unwrap();
        assert_eq!(f.eval(w("000")), 1);
        assert_eq!(f.eval(w("001")), 1);
        assert_eq!(f.eval(w("100")), 0);
        assert_eq!(f.eval(w("110")), 0);
        assert_eq!(f.eval(w("010")), 0);
        assert_eq!(f.eval(w("111")), 0);
    }

    #[test]
    fn suppress_runs_bias_m3_parity_case() {
        let f = BiasFunction::suppress_runs(3).unwrap();
        // 1100001 = z=1, separator 1, 0000, y=1: parity(z) = 1
        assert_eq!(f.eval(w("1100001")), 1);
        // 0100001 = z=0, separator 1, 0000, y=1: parity(z) = 0
        assert_eq!(f.eval(w("0100001")), 0);
    }

    #[test]
    fn suppress_runs_bias_m0() {
        let f = BiasFunction::suppress_runs(0).unwrap();
        assert_eq!(f.eval(w("0")), 1);
        assert_eq!(f.eval(w("1")), 0);
    }

    #[test]
    fn run_avoiding_code_p2() {
        let c = run_avoiding_code(2, None).unwrap();
        assert_eq!(c, code(&["010", "101"]));
        assert_eq!(c.max_run_ones(), 1);
        assert!(c.max_run_ones() < guaranteed_run_bound(2));
    }

    #[test]
    fn run_avoiding_code_p3() {
        let c = run_avoiding_code(3, None).unwrap();
        assert_eq!(c.len(), 16);
        assert!(c.max_run_ones() <= 5);
        assert!(c.verify_perfect_qn().unwrap().is_perfect());
        // Exact histogram, derived once by hand from the 16 words.
        let expected: BTreeMap<u32, u64> = [(1, 5), (2, 4), (3, 5), (4, 2)].into();
        assert_eq!(c.run_histogram(), expected);
    }

    #[test]
    fn run_avoiding_code_p4() {
        let c = run_avoiding_code(4, None).unwrap();
        assert_eq!(c.len(), 2048);
        assert!(!c.words().iter().any(|w| w.max_run_ones() >= 12));
        assert!(c.satisfies_sphere_packing());
    }

    #[test]
    fn run_avoiding_code_rejects_bad_base() {
        // Right length, not a perfect code.
        let bad = code(&["000", "011"]);
        assert_eq!(
            run_avoiding_code(3, Some(&bad)).unwrap_err(),
            Error::InvalidBase { n: 3 }
        );
        // Wrong length entirely.
        let short = code(&["0"]);
        assert!(matches!(
            run_avoiding_code(3, Some(&short)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn run_avoiding_code_accepts_alternative_base() {
        // {010, 101} is a perfect code of Q3 distinct from hamming(2).
        let alt = code(&["010", "101"]);
        let c = run_avoiding_code(3, Some(&alt)).unwrap();
        assert_eq!(c.len(), 16);
        assert!(c.max_run_ones() < guaranteed_run_bound(3));
        assert!(c.verify_perfect_qn().unwrap().is_perfect());
    }

    #[test]
    fn translate_examples() {
        let c = code(&["000", "111"]);
        assert_eq!(c.translate(w("010")).unwrap(), code(&["010", "101"]));
        assert_eq!(c.translate(w("000")).unwrap(), c);
        let t = w("011");
        assert_eq!(c.translate(t).unwrap().translate(t).unwrap(), c);
        assert!(c.translate(w("01")).is_err());
    }

    #[test]
    fn translation_preserves_status_of_failing_codes() {
        // Two words at distance 1: NotCode before and after translation,
        // regardless of which anomalous vertex a sweep would meet first.
        let c = code(&["0000000", "0001000"]);
        let moved = c.translate(w("0100000")).unwrap();
        let before = c.verify_perfect_qn().unwrap();
        let after = moved.verify_perfect_qn().unwrap();
        assert_eq!(before.status, VerifyStatus::NotCode);
        assert_eq!(before.status, after.status);
    }

    #[test]
    fn translation_preserves_perfectness() {
        let c = hamming_code(3).unwrap();
        let t = w("0001000");
        let moved = c.translate(t).unwrap();
        assert!(moved.verify_perfect_qn().unwrap().is_perfect());
        // This particular translate is the worked 7-bit example.
        assert_eq!(moved, example_gamma7_code());
    }

    #[test]
    fn gamma7_example_properties() {
        let c = example_gamma7_code();
        assert_eq!(c.len(), 16);
        assert_eq!(c.max_run_ones(), 4);
        assert!(!c.words().iter().any(|w| w.to_string().starts_with("11111")));
        assert!(c.verify_perfect_qn().unwrap().is_perfect());
        // The two codewords beginning 011 are exactly these.
        let mut with_011: Vec<String> = c
            .iter()
            .filter(|w| w.to_string().starts_with("011"))
            .map(|w| w.to_string())
            .collect();
        with_011.sort();
        assert_eq!(with_011, ["0111011", "0111100"]);
    }

    #[test]
    fn histogram_examples() {
        let hist = code(&["010", "101"]).run_histogram();
        assert_eq!(hist, [(1u32, 2u64)].into());
        let total: u64 = run_avoiding_code(4, None)
            .unwrap()
            .run_histogram()
            .values()
            .sum();
        assert_eq!(total, 2048);
    }

    #[test]
    fn sphere_packing_examples() {
        assert!(code(&["010", "101"]).satisfies_sphere_packing());
        assert!(hamming_code(3).unwrap().satisfies_sphere_packing());
        assert!(!code(&["000"]).satisfies_sphere_packing());
    }
}
