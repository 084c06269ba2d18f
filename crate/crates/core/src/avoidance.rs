//! Subgraphs of the hypercube induced by pattern-avoiding words: the
//! Fibonacci cube (no 11), its run-generalizations (no 1^s) and any
//! other fixed forbidden substring. Adjacency is inherited from the
//! cube: single-bit flips that stay pattern-avoiding.

use crate::bitword::{Word, MAX_LEN};
use crate::codes::{Code, GraphDescriptor, VerificationReport, VerifyStatus, Witness};
use crate::error::{Error, Result};

/// Largest dimension for which the full vertex stream is offered.
pub const ENUMERATION_CAP: u32 = 30;

/// Largest dimension for which domination sweeps are offered.
pub const SWEEP_CAP: u32 = 25;

/// The subgraph of the n-cube induced by words that do not contain
/// `pattern` as a substring. When the pattern is longer than n the
/// graph is the whole cube. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceGraph {
    n: u32,
    pattern: Word,
    vertex_count: u64,
}

impl AvoidanceGraph {
    pub fn new(n: u32, pattern: Word) -> Result<AvoidanceGraph> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::LengthOutOfRange(n as u64));
        }
        Ok(AvoidanceGraph {
            n,
            pattern,
            vertex_count: count_avoiding(n, pattern),
        })
    }

    /// The graph forbidding a run of s ones. s >= n+1 leaves the whole
    /// cube, so the stored pattern is clamped to length n+1; that keeps
    /// n <= 62 here.
    pub fn ones_run(n: u32, s: u64) -> Result<AvoidanceGraph> {
        if n > 62 {
            return Err(Error::ParamRange {
                name: "n",
                value: n as u64,
                range: "1..=62 (run-avoidance graphs)",
            });
        }
        if s == 0 {
            return Err(Error::ParamRange {
                name: "s",
                value: 0,
                range: "1..",
            });
        }
        let clamped = s.min(n as u64 + 1) as u32;
        AvoidanceGraph::new(n, Word::ones(clamped)?)
    }

    /// The full n-cube, as the graph avoiding a pattern longer than n.
    pub fn hypercube(n: u32) -> Result<AvoidanceGraph> {
        AvoidanceGraph::ones_run(n, n as u64 + 1)
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn pattern(&self) -> Word {
        self.pattern
    }

    /// Number of vertices, counted at construction by a linear pass
    /// over a substring automaton (no enumeration).
    #[inline]
    pub fn vertex_count(&self) -> u64 {
        self.vertex_count
    }

    pub fn descriptor(&self) -> GraphDescriptor {
        if self.pattern.len() > self.n {
            GraphDescriptor::Hypercube { n: self.n }
        } else {
            GraphDescriptor::Avoidance {
                n: self.n,
                pattern: self.pattern,
            }
        }
    }

    #[inline]
    fn bits_avoid(&self, bits: u64) -> bool {
        let plen = self.pattern.len();
        if plen > self.n {
            return true;
        }
        let mask = (1u64 << plen) - 1;
        !(0..=self.n - plen).any(|off| bits >> off & mask == self.pattern.bits())
    }

    pub fn is_vertex(&self, w: Word) -> bool {
        w.len() == self.n && self.bits_avoid(w.bits())
    }

    /// All vertices in ascending mask order, each exactly once.
    pub fn vertices(&self) -> Result<impl Iterator<Item = Word> + '_> {
        if self.n > ENUMERATION_CAP {
            return Err(Error::Capacity {
                task: "vertex enumeration (2^n scan)",
                needed: self.n as u64,
                limit: ENUMERATION_CAP as u64,
            });
        }
        let n = self.n;
        Ok((0..1u64 << n)
            .filter(move |&bits| self.bits_avoid(bits))
            .map(move |bits| Word::new(n, bits).expect("scan stays in range")))
    }

    /// The single-bit flips of `v` that remain vertices, in flip-position
    /// order. `v` itself must be a vertex.
    pub fn neighbors(&self, v: Word) -> Result<Vec<Word>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        if !self.is_vertex(v) {
            return Err(Error::NotAVertex {
                word: v.to_string(),
                graph: self.descriptor().to_string(),
            });
        }
        Ok((0..self.n)
            .filter_map(|i| {
                let flipped = v.bits() ^ 1 << i;
                self.bits_avoid(flipped)
                    .then(|| Word::new(self.n, flipped).expect("flip stays in range"))
            })
            .collect())
    }

    /// Full domination sweep inside this graph: every codeword must be
    /// a vertex, and every vertex must lie in the closed in-graph
    /// neighbourhood of exactly one codeword. Capped at n <= 25.
    ///
    /// A codeword outside the graph reports `NotCode` with the smallest
    /// offender; otherwise the smallest vertex dominated zero times or
    /// more than once is the witness.
    pub fn verify_perfect(&self, code: &Code) -> Result<VerificationReport> {
        if code.n() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: code.n(),
            });
        }
        if self.n > SWEEP_CAP {
            return Err(Error::Capacity {
                task: "in-graph domination sweep (2^n vertices)",
                needed: self.n as u64,
                limit: SWEEP_CAP as u64,
            });
        }
        let mut report = VerificationReport {
            status: VerifyStatus::PerfectCode,
            witness: None,
            code_size: code.len(),
            max_run: code.max_run_ones(),
            graph: self.descriptor(),
        };

        // Membership first; code words are already in ascending order.
        for &w in code.words() {
            if !self.bits_avoid(w.bits()) {
                report.status = VerifyStatus::NotCode;
                report.witness = Some(Witness::Vertex(w));
                return Ok(report);
            }
        }

        let n = self.n;
        let mut counts = vec![0u8; 1usize << n];
        for &c in code.words() {
            counts[c.bits() as usize] += 1;
            for i in 0..n {
                let u = c.bits() ^ 1 << i;
                if self.bits_avoid(u) {
                    counts[u as usize] += 1;
                }
            }
        }
        for v in 0..1u64 << n {
            if !self.bits_avoid(v) {
                continue;
            }
            match counts[v as usize] {
                1 => {}
                0 => {
                    report.status = VerifyStatus::NotDominated;
                    report.witness = Some(Witness::Vertex(Word::new(n, v)?));
                    return Ok(report);
                }
                _ => {
                    report.status = VerifyStatus::MultiplyDominated;
                    report.witness = Some(Witness::Vertex(Word::new(n, v)?));
                    return Ok(report);
                }
            }
        }
        Ok(report)
    }
}

/// Number of length-n words avoiding a run of s ones, by the s-step
/// recurrence a(k) = a(k-1) + ... + a(k-s) with a(k) = 2^k for k < s.
/// Independent of the enumeration path.
pub fn vertex_count(n: u32, s: u32) -> Result<u64> {
    if n == 0 || n > MAX_LEN {
        return Err(Error::ParamRange {
            name: "n",
            value: n as u64,
            range: "1..=63",
        });
    }
    if s == 0 {
        return Err(Error::ParamRange {
            name: "s",
            value: 0,
            range: "1..",
        });
    }
    let n = n as usize;
    let s = s as usize;
    let mut a = vec![0u64; n + 1];
    for k in 0..=n {
        a[k] = if k < s {
            1u64 << k
        } else {
            (k - s..k).map(|j| a[j]).sum()
        };
    }
    Ok(a[n])
}

/// Count words of length n avoiding `pattern`, via a walk count on the
/// substring-matching automaton (states = matched prefix length).
fn count_avoiding(n: u32, pattern: Word) -> u64 {
    let k = pattern.len() as usize;
    if k > n as usize {
        return 1u64 << n;
    }
    // delta[q][b]: longest prefix of the pattern that is a suffix of the
    // current word after appending bit b, given q characters matched.
    let mut delta = vec![[0usize; 2]; k];
    let pat = |i: usize| (pattern.bits() >> i & 1) as usize;
    let mut fail = 0usize;
    delta[0] = std::array::from_fn(|b| usize::from(b == pat(0)));
    for q in 1..k {
        let row = std::array::from_fn(|b| if b == pat(q) { q + 1 } else { delta[fail][b] });
        delta[q] = row;
        fail = delta[fail][pat(q)];
    }
    let mut dp = vec![0u64; k + 1];
    dp[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; k + 1];
        for q in 0..k {
            for b in 0..2 {
                next[delta[q][b]] += dp[q];
            }
        }
        dp = next;
    }
    dp[..k].iter().sum()
}
