//! Exhaustive perfect-code search in run-avoidance graphs, posed as
//! exact cover: columns are vertices, rows are closed in-graph
//! neighbourhoods, and a perfect code is a set of rows partitioning the
//! column set. Branching is deterministic: always the uncovered column
//! with the fewest live rows (ties to the smallest vertex mask), rows
//! tried in ascending vertex mask order.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::avoidance::AvoidanceGraph;
use crate::bitword::Word;
use crate::codes::Code;
use crate::error::{Error, Result};

/// Practical exact-cover budget: searches over larger vertex sets are
/// refused rather than attempted.
pub const VERTEX_BUDGET: u64 = 4096;

/// Node budget applied per cell by [`conjecture_scan`]; cells that hit
/// it come back undecided instead of running away.
pub const SCAN_NODE_BUDGET: u64 = 500_000_000;

/// Result of one exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// At least one perfect code was found.
    pub exists: bool,
    /// Solutions in discovery order, possibly truncated at the caller's
    /// limit.
    pub solutions: Vec<Code>,
    /// Number of solutions found; a lower bound unless `exhausted`.
    pub solution_count: u64,
    /// Search-tree nodes expanded. Excluded from determinism contracts.
    pub nodes_expanded: u64,
    /// True iff the whole search space was explored: together with
    /// `exists == false` this certifies non-existence.
    pub exhausted: bool,
}

struct CoverState {
    /// Column indices covered by each row, ascending.
    row_cols: Vec<Vec<u32>>,
    /// Rows covering each column, ascending.
    col_rows: Vec<Vec<u32>>,
    covered: Vec<bool>,
    uncovered: usize,
    alive: Vec<bool>,
    /// Live rows still covering each column.
    alive_count: Vec<u32>,
    /// Rows killed, in kill order, for undo.
    trail: Vec<u32>,
    chosen: Vec<u32>,

    limit: Option<usize>,
    node_budget: Option<u64>,
    nodes: u64,
    stopped: bool,
    budget_hit: bool,
    solutions: Vec<Vec<u32>>,
}

impl CoverState {
    fn new(neighborhoods: Vec<Vec<u32>>, limit: Option<usize>, node_budget: Option<u64>) -> Self {
        let v = neighborhoods.len();
        let mut col_rows = vec![Vec::new(); v];
        for (row, cols) in neighborhoods.iter().enumerate() {
            for &c in cols {
                col_rows[c as usize].push(row as u32);
            }
        }
        let alive_count = col_rows.iter().map(|rows| rows.len() as u32).collect();
        CoverState {
            row_cols: neighborhoods,
            col_rows,
            covered: vec![false; v],
            uncovered: v,
            alive: vec![true; v],
            alive_count,
            trail: Vec::new(),
            chosen: Vec::new(),
            limit,
            node_budget,
            nodes: 0,
            stopped: false,
            budget_hit: false,
            solutions: Vec::new(),
        }
    }

    fn kill_row(&mut self, row: u32) {
        self.alive[row as usize] = false;
        self.trail.push(row);
        for &c in &self.row_cols[row as usize] {
            self.alive_count[c as usize] -= 1;
        }
    }

    fn revive_row(&mut self, row: u32) {
        self.alive[row as usize] = true;
        for &c in &self.row_cols[row as usize] {
            self.alive_count[c as usize] += 1;
        }
    }

    /// Cover all columns of `row` and kill every live row meeting them
    /// (including `row` itself). Returns the trail mark needed to undo.
    fn select(&mut self, row: u32) -> usize {
        let mark = self.trail.len();
        self.chosen.push(row);
        for k in 0..self.row_cols[row as usize].len() {
            let c = self.row_cols[row as usize][k] as usize;
            self.covered[c] = true;
            self.uncovered -= 1;
        }
        for k in 0..self.row_cols[row as usize].len() {
            let c = self.row_cols[row as usize][k] as usize;
            for j in 0..self.col_rows[c].len() {
                let r = self.col_rows[c][j];
                if self.alive[r as usize] {
                    self.kill_row(r);
                }
            }
        }
        mark
    }

    fn unselect(&mut self, row: u32, mark: usize) {
        while self.trail.len() > mark {
            let r = self.trail.pop().expect("trail underflow");
            self.revive_row(r);
        }
        for &c in &self.row_cols[row as usize] {
            self.covered[c as usize] = false;
            self.uncovered += 1;
        }
        self.chosen.pop();
    }

    /// Uncovered column with the fewest live rows; ties to the smallest
    /// index. None when everything is covered.
    fn branch_column(&self) -> Option<u32> {
        if self.uncovered == 0 {
            return None;
        }
        let mut best: Option<(u32, u32)> = None;
        for c in 0..self.covered.len() {
            if self.covered[c] {
                continue;
            }
            let count = self.alive_count[c];
            if best.is_none_or(|(bc, _)| count < bc) {
                best = Some((count, c as u32));
                if count == 0 {
                    break;
                }
            }
        }
        best.map(|(_, c)| c)
    }

    fn dfs(&mut self) {
        if self.stopped {
            return;
        }
        let Some(col) = self.branch_column() else {
            self.solutions.push(self.chosen.clone());
            if Some(self.solutions.len()) == self.limit {
                self.stopped = true;
            }
            return;
        };
        let candidates: Vec<u32> = self.col_rows[col as usize]
            .iter()
            .copied()
            .filter(|&r| self.alive[r as usize])
            .collect();
        for row in candidates {
            self.nodes += 1;
            if let Some(budget) = self.node_budget {
                if self.nodes > budget {
                    self.stopped = true;
                    self.budget_hit = true;
                    return;
                }
            }
            let mark = self.select(row);
            self.dfs();
            self.unselect(row, mark);
            if self.stopped {
                return;
            }
        }
    }
}

/// Search `graph` for all perfect codes, up to `limit` solutions and
/// `node_budget` expanded nodes. Deterministic for fixed inputs.
pub fn search_graph(
    graph: &AvoidanceGraph,
    limit: Option<usize>,
    node_budget: Option<u64>,
) -> Result<SearchOutcome> {
    if graph.vertex_count() > VERTEX_BUDGET {
        return Err(Error::Capacity {
            task: "exact-cover search (vertices)",
            needed: graph.vertex_count(),
            limit: VERTEX_BUDGET,
        });
    }
    if limit == Some(0) {
        return Err(Error::ParamRange {
            name: "limit",
            value: 0,
            range: "1..",
        });
    }
    let vertices: Vec<Word> = graph.vertices()?.collect();
    let masks: Vec<u64> = vertices.iter().map(|v| v.bits()).collect();
    let col_of = |bits: u64| masks.binary_search(&bits).expect("neighbor is a vertex") as u32;

    let neighborhoods: Vec<Vec<u32>> = vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut cols: Vec<u32> = graph
                .neighbors(v)
                .expect("enumerated vertex")
                .into_iter()
                .map(|u| col_of(u.bits()))
                .collect();
            cols.push(i as u32);
            cols.sort_unstable();
            cols
        })
        .collect();

    let mut state = CoverState::new(neighborhoods, limit, node_budget);
    state.dfs();

    let solutions = state
        .solutions
        .iter()
        .map(|rows| {
            let words = rows.iter().map(|&r| vertices[r as usize]).collect();
            Code::new(graph.n(), words)
        })
        .collect::<Result<Vec<Code>>>()?;
    Ok(SearchOutcome {
        exists: !solutions.is_empty(),
        solution_count: solutions.len() as u64,
        solutions,
        nodes_expanded: state.nodes,
        exhausted: !state.stopped,
    })
}

/// All perfect codes of the graph on length-n words avoiding a run of
/// s ones.
pub fn search_perfect_codes(n: u32, s: u32, limit: Option<usize>) -> Result<SearchOutcome> {
    let graph = AvoidanceGraph::ones_run(n, s as u64)?;
    search_graph(&graph, limit, None)
}

/// Smallest s in 2..=s_max admitting a perfect code at length n, if any.
pub fn min_s(n: u32, s_max: u32) -> Result<Option<u32>> {
    for s in 2..=s_max {
        if search_perfect_codes(n, s, Some(1))?.exists {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Consistency verdict for one scanned cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellVerdict {
    /// No perfect codes, so nothing to check.
    Vacuous,
    /// Every perfect code has n = 2^p - 1 and is perfect in the cube.
    Consistent,
    /// Cell lies outside the conjectured range (s = 1, or n < 3): the
    /// single-vertex graph at s = 1 carries the trivial code {0^n} for
    /// every n, which the scan reports without judging.
    Anomaly,
    /// At least one perfect code violates a conjectured property.
    Counterexamples(Vec<Counterexample>),
}

/// A perfect code violating the scan's checks, kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub code: Code,
    /// n + 1 is a power of two.
    pub dimension_ok: bool,
    /// The code is also perfect in the whole cube.
    pub perfect_in_cube: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellResult {
    Decided {
        exists: bool,
        solution_count: u64,
        verdict: CellVerdict,
    },
    Undecided {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanCell {
    pub n: u32,
    pub s: u32,
    pub vertices: u64,
    pub result: CellResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub cells: Vec<ScanCell>,
}

impl ScanReport {
    pub fn fully_decided(&self) -> bool {
        self.cells
            .iter()
            .all(|c| matches!(c.result, CellResult::Decided { .. }))
    }

    pub fn counterexamples(&self) -> Vec<(&ScanCell, &Counterexample)> {
        let mut out = Vec::new();
        for cell in &self.cells {
            if let CellResult::Decided {
                verdict: CellVerdict::Counterexamples(list),
                ..
            } = &cell.result
            {
                out.extend(list.iter().map(|cx| (cell, cx)));
            }
        }
        out
    }

    pub fn anomalies(&self) -> Vec<&ScanCell> {
        self.cells
            .iter()
            .filter(|c| {
                matches!(
                    c.result,
                    CellResult::Decided {
                        verdict: CellVerdict::Anomaly,
                        ..
                    }
                )
            })
            .collect()
    }

    /// Fixed-width table, one row per cell, followed by any
    /// counterexamples verbatim.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:>4} {:>4} {:>9} {:>10} {:>10} {:>12}",
            "n", "s", "vertices", "exists", "count", "consistent"
        )
        .expect("string write");
        for cell in &self.cells {
            let (exists, count, consistent) = match &cell.result {
                CellResult::Undecided { .. } => {
                    ("undecided".to_string(), "-".to_string(), "-".to_string())
                }
                CellResult::Decided {
                    exists,
                    solution_count,
                    verdict,
                } => {
                    let verdict = match verdict {
                        CellVerdict::Vacuous => "vacuous",
                        CellVerdict::Consistent => "yes",
                        CellVerdict::Anomaly => "anomaly",
                        CellVerdict::Counterexamples(_) => "NO",
                    };
                    (
                        if *exists { "yes" } else { "no" }.to_string(),
                        solution_count.to_string(),
                        verdict.to_string(),
                    )
                }
            };
            writeln!(
                out,
                "{:>4} {:>4} {:>9} {:>10} {:>10} {:>12}",
                cell.n, cell.s, cell.vertices, exists, count, consistent
            )
            .expect("string write");
        }
        for (cell, cx) in self.counterexamples() {
            writeln!(
                out,
                "counterexample n={} s={}: {} (dimension_ok={}, perfect_in_cube={})",
                cell.n,
                cell.s,
                cx.code
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                cx.dimension_ok,
                cx.perfect_in_cube
            )
            .expect("string write");
        }
        out
    }
}

fn scan_cell(n: u32, s: u32, node_budget: Option<u64>) -> ScanCell {
    let graph = match AvoidanceGraph::ones_run(n, s as u64) {
        Ok(g) => g,
        Err(e) => {
            return ScanCell {
                n,
                s,
                vertices: 0,
                result: CellResult::Undecided {
                    reason: e.to_string(),
                },
            }
        }
    };
    let vertices = graph.vertex_count();
    let outcome = match search_graph(&graph, None, node_budget) {
        Ok(o) => o,
        Err(e) => {
            return ScanCell {
                n,
                s,
                vertices,
                result: CellResult::Undecided {
                    reason: e.to_string(),
                },
            }
        }
    };
    if !outcome.exhausted {
        return ScanCell {
            n,
            s,
            vertices,
            result: CellResult::Undecided {
                reason: format!(
                    "node budget exhausted after {} solutions",
                    outcome.solution_count
                ),
            },
        };
    }
    let verdict = if s == 1 || n < 3 {
        CellVerdict::Anomaly
    } else if outcome.solutions.is_empty() {
        CellVerdict::Vacuous
    } else {
        let mut bad = Vec::new();
        for code in &outcome.solutions {
            let dimension_ok = (n as u64 + 1).is_power_of_two();
            let perfect_in_cube = code
                .verify_perfect_qn()
                .map(|r| r.is_perfect())
                .unwrap_or(false);
            if !dimension_ok || !perfect_in_cube {
                bad.push(Counterexample {
                    code: code.clone(),
                    dimension_ok,
                    perfect_in_cube,
                });
            }
        }
        if bad.is_empty() {
            CellVerdict::Consistent
        } else {
            CellVerdict::Counterexamples(bad)
        }
    };
    ScanCell {
        n,
        s,
        vertices,
        result: CellResult::Decided {
            exists: outcome.exists,
            solution_count: outcome.solution_count,
            verdict,
        },
    }
}

/// For every (n, s) in the rectangle, enumerate all perfect codes of
/// the run-avoidance graph and check each against the two conjectured
/// properties. Cells beyond the search budget are reported undecided,
/// never skipped.
pub fn conjecture_scan(
    n_range: RangeInclusive<u32>,
    s_range: RangeInclusive<u32>,
    node_budget: Option<u64>,
) -> ScanReport {
    let mut cells = Vec::new();
    for n in n_range {
        for s in s_range.clone() {
            cells.push(scan_cell(n, s, node_budget));
        }
    }
    ScanReport { cells }
}
