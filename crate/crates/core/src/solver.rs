//! Exact search for NBC and QNBC colorings.
//!
//! [`solve`] is a backtracking search over vertex colors with per-vertex
//! bounds on the number of red neighbors. [`oracle`] sweeps all `2^n`
//! colorings through the checker and shares no code with the search.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::checker::{classify, Classification, Kind};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

/// Which kind of coloring is being asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VariantMode {
    Nbc,
    AnyQnbc,
    Positive,
    Negative,
    /// `None` accepts either dominant color.
    Uniform(Option<Color>),
}

impl VariantMode {
    /// The five modes swept by the agreement checks.
    pub const CORE: [VariantMode; 5] = [
        VariantMode::Nbc,
        VariantMode::AnyQnbc,
        VariantMode::Positive,
        VariantMode::Negative,
        VariantMode::Uniform(None),
    ];

    pub const ALL: [VariantMode; 7] = [
        VariantMode::Nbc,
        VariantMode::AnyQnbc,
        VariantMode::Positive,
        VariantMode::Negative,
        VariantMode::Uniform(None),
        VariantMode::Uniform(Some(Color::Red)),
        VariantMode::Uniform(Some(Color::Blue)),
    ];

    pub fn accepts(&self, class: &Classification) -> bool {
        match *self {
            VariantMode::Nbc => class.kind == Kind::Nbc,
            VariantMode::AnyQnbc => class.is_qnbc(),
            VariantMode::Positive => class.is_qnbc() && class.positive,
            VariantMode::Negative => class.is_qnbc() && class.negative,
            VariantMode::Uniform(None) => class.is_qnbc() && class.uniform_dominant.is_some(),
            VariantMode::Uniform(Some(d)) => class.is_qnbc() && class.uniform_dominant == Some(d),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            VariantMode::Nbc => "nbc",
            VariantMode::AnyQnbc => "any",
            VariantMode::Positive => "positive",
            VariantMode::Negative => "negative",
            VariantMode::Uniform(None) => "uniform",
            VariantMode::Uniform(Some(Color::Red)) => "uniform-red",
            VariantMode::Uniform(Some(Color::Blue)) => "uniform-blue",
        }
    }
}

impl fmt::Display for VariantMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VariantMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VariantMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown variant `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Satisfiable,
    Unsatisfiable,
    /// Node budget exhausted before a verdict.
    Unknown,
}

/// Why a mode was rejected without search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Prefilter {
    /// QNBC needs an odd-degree vertex.
    NoOddDegreeVertex,
    /// NBC forces every degree to be even.
    OddDegreeVertex,
    /// Positive and negative colorings need `2|E| ≡ k (mod 4)`.
    CongruenceObstruction,
}

impl fmt::Display for Prefilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prefilter::NoOddDegreeVertex => "no odd-degree vertex",
            Prefilter::OddDegreeVertex => "odd-degree vertex present",
            Prefilter::CongruenceObstruction => "congruence obstruction",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
    pub prefilter: Option<Prefilter>,
}

impl SearchOutcome {
    pub fn satisfiable(&self) -> bool {
        self.verdict == Verdict::Satisfiable
    }

    fn rejected(reason: Prefilter) -> Self {
        SearchOutcome {
            verdict: Verdict::Unsatisfiable,
            witness: None,
            nodes_explored: 0,
            prefilter: Some(reason),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Give up with [`Verdict::Unknown`] after this many assignments.
    pub budget: Option<u64>,
}

pub fn prefilter(g: &Graph, mode: VariantMode) -> Option<Prefilter> {
    let k = g.odd_degree_count();
    match mode {
        VariantMode::Nbc if k > 0 => Some(Prefilter::OddDegreeVertex),
        VariantMode::Nbc => None,
        _ if k == 0 => Some(Prefilter::NoOddDegreeVertex),
        VariantMode::Positive | VariantMode::Negative if (2 * g.edge_count()) % 4 != k % 4 => {
            Some(Prefilter::CongruenceObstruction)
        }
        _ => None,
    }
}

pub fn solve(g: &Graph, mode: VariantMode) -> SearchOutcome {
    solve_with(g, mode, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, mode: VariantMode, opts: &SolveOptions) -> SearchOutcome {
    if let Some(reason) = prefilter(g, mode) {
        return SearchOutcome::rejected(reason);
    }
    // Every mode except a fixed-dominant uniform one is closed under
    // complement, so the first vertex in search order can be pinned to red.
    // For uniform-either, pinning is sound once both dominants are tried.
    let runs: &[(Target, bool)] = match mode {
        VariantMode::Nbc | VariantMode::AnyQnbc => &[(Target::Any, true)],
        VariantMode::Positive => &[(Target::Positive, true)],
        VariantMode::Negative => &[(Target::Negative, true)],
        VariantMode::Uniform(Some(Color::Red)) => &[(Target::Surplus(Color::Red), false)],
        VariantMode::Uniform(Some(Color::Blue)) => &[(Target::Surplus(Color::Blue), false)],
        VariantMode::Uniform(None) => &[
            (Target::Surplus(Color::Red), true),
            (Target::Surplus(Color::Blue), true),
        ],
    };
    let mut nodes = 0;
    for &(target, pin) in runs {
        let remaining = opts.budget.map(|b| b.saturating_sub(nodes));
        let mut search = Search::new(g, target, remaining);
        let mut found = None;
        let completed = search.run(pin, &mut |c| {
            found = Some(c.clone());
            false
        });
        nodes += search.nodes;
        if let Some(witness) = found {
            debug_assert!(mode.accepts(&classify(g, &witness).expect("length")));
            return SearchOutcome {
                verdict: Verdict::Satisfiable,
                witness: Some(witness),
                nodes_explored: nodes,
                prefilter: None,
            };
        }
        if !completed {
            return SearchOutcome {
                verdict: Verdict::Unknown,
                witness: None,
                nodes_explored: nodes,
                prefilter: None,
            };
        }
    }
    SearchOutcome {
        verdict: Verdict::Unsatisfiable,
        witness: None,
        nodes_explored: nodes,
        prefilter: None,
    }
}

/// Up to `limit` distinct colorings satisfying `mode`, complements included,
/// in search order.
pub fn enumerate(g: &Graph, mode: VariantMode, limit: usize) -> Vec<Coloring> {
    let mut out = Vec::new();
    if limit == 0 || prefilter(g, mode).is_some() {
        return out;
    }
    let targets: &[Target] = match mode {
        VariantMode::Nbc | VariantMode::AnyQnbc => &[Target::Any],
        VariantMode::Positive => &[Target::Positive],
        VariantMode::Negative => &[Target::Negative],
        VariantMode::Uniform(Some(d)) => match d {
            Color::Red => &[Target::Surplus(Color::Red)],
            Color::Blue => &[Target::Surplus(Color::Blue)],
        },
        VariantMode::Uniform(None) => &[Target::Surplus(Color::Red), Target::Surplus(Color::Blue)],
    };
    for &target in targets {
        let mut search = Search::new(g, target, None);
        search.run(false, &mut |c| {
            out.push(c.clone());
            out.len() < limit
        });
        if out.len() >= limit {
            break;
        }
    }
    out
}

/// Largest graph the exhaustive oracle accepts.
pub const ORACLE_LIMIT: usize = 24;

/// Exhaustive sweep: classifies every coloring, no pruning or prefilters.
/// The witness is the first accepted coloring in mask order.
pub fn oracle(g: &Graph, mode: VariantMode) -> Result<SearchOutcome> {
    if g.n() > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: ORACLE_LIMIT,
        });
    }
    let total = 1u64 << g.n();
    for mask in 0..total {
        let c = Coloring::from_mask(g.n(), mask);
        if mode.accepts(&classify(g, &c)?) {
            return Ok(SearchOutcome {
                verdict: Verdict::Satisfiable,
                witness: Some(c),
                nodes_explored: mask + 1,
                prefilter: None,
            });
        }
    }
    Ok(SearchOutcome {
        verdict: Verdict::Unsatisfiable,
        witness: None,
        nodes_explored: total,
        prefilter: None,
    })
}

/// Per-vertex requirement on the red-neighbor count at odd-degree vertices.
/// Even-degree vertices always need exactly `deg/2`.
#[derive(Debug, Clone, Copy)]
enum Target {
    /// Surplus of either color.
    Any,
    /// Surplus of the vertex's own color.
    Positive,
    /// Surplus of the opposite color.
    Negative,
    /// Surplus of a fixed color.
    Surplus(Color),
}

struct Search<'a> {
    g: &'a Graph,
    target: Target,
    order: Vec<usize>,
    colors: Vec<Option<Color>>,
    red: Vec<usize>,
    blue: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, target: Target, budget: Option<u64>) -> Self {
        let mut order: Vec<usize> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Search {
            g,
            target,
            order,
            colors: vec![None; g.n()],
            red: vec![0; g.n()],
            blue: vec![0; g.n()],
            nodes: 0,
            budget,
        }
    }

    /// Inclusive bounds on the red-neighbor count of `v`.
    fn red_bounds(&self, v: usize) -> (usize, usize) {
        let d = self.g.degree(v);
        let half = d / 2;
        if d % 2 == 0 {
            return (half, half);
        }
        let surplus = match (self.target, self.colors[v]) {
            (Target::Any, _) => None,
            (Target::Positive, own) => own,
            (Target::Negative, own) => own.map(Color::flip),
            (Target::Surplus(c), _) => Some(c),
        };
        match surplus {
            None => (half, half + 1),
            Some(Color::Red) => (half + 1, half + 1),
            Some(Color::Blue) => (half, half),
        }
    }

    fn feasible(&self, v: usize) -> bool {
        let (lo, hi) = self.red_bounds(v);
        let open = self.g.degree(v) - self.red[v] - self.blue[v];
        self.red[v] <= hi && self.red[v] + open >= lo
    }

    fn assign(&mut self, v: usize, c: Color) {
        self.colors[v] = Some(c);
        let g = self.g;
        for &w in g.neighbors(v) {
            match c {
                Color::Red => self.red[w] += 1,
                Color::Blue => self.blue[w] += 1,
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v].take().expect("assigned");
        let g = self.g;
        for &w in g.neighbors(v) {
            match c {
                Color::Red => self.red[w] -= 1,
                Color::Blue => self.blue[w] -= 1,
            }
        }
    }

    /// Runs the search, calling `emit` on each complete solution until it
    /// returns `false`. Returns `false` iff the budget ran out.
    fn run(&mut self, pin_first: bool, emit: &mut dyn FnMut(&Coloring) -> bool) -> bool {
        let mut stop = false;
        self.descend(0, pin_first, emit, &mut stop)
    }

    fn descend(
        &mut self,
        depth: usize,
        pin: bool,
        emit: &mut dyn FnMut(&Coloring) -> bool,
        stop: &mut bool,
    ) -> bool {
        if depth == self.order.len() {
            let c: Coloring = self.colors.iter().map(|c| c.expect("total")).collect();
            *stop = !emit(&c);
            return true;
        }
        let v = self.order[depth];
        let choices: &[Color] = if pin {
            &[Color::Red]
        } else {
            &[Color::Red, Color::Blue]
        };
        for &c in choices {
            if self.budget.is_some_and(|b| self.nodes >= b) {
                return false;
            }
            self.nodes += 1;
            self.assign(v, c);
            let g = self.g;
            let ok = self.feasible(v) && g.neighbors(v).iter().all(|&w| self.feasible(w));
            let completed = !ok || self.descend(depth + 1, false, emit, stop);
            self.unassign(v);
            if !completed {
                return false;
            }
            if *stop {
                return true;
            }
        }
        true
    }
}
