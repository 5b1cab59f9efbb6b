//! Satisfiability census over labeled graphs.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sample;
use crate::solver::{solve, VariantMode, Verdict};

/// Largest `n` swept exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub enum CensusSpec {
    /// Every labeled graph with `1 <= n <= max_n`.
    Exhaustive { max_n: usize },
    /// `count` draws of `G(n, p)`.
    Sample {
        n: usize,
        count: usize,
        p: f64,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    /// Edge bitmask for exhaustive rows, draw ordinal for sampled rows.
    pub graph_index: u64,
    pub edges: usize,
    pub verdicts: Vec<(VariantMode, Verdict)>,
}

impl CensusRow {
    pub fn verdict(&self, mode: VariantMode) -> Option<Verdict> {
        self.verdicts
            .iter()
            .find(|(m, _)| *m == mode)
            .map(|&(_, v)| v)
    }

    /// Any satisfiable QNBC variant implies plain QNBC is satisfiable.
    pub fn consistent(&self) -> bool {
        let any = self.verdict(VariantMode::AnyQnbc);
        self.verdicts.iter().all(|&(m, v)| {
            m == VariantMode::Nbc
                || m == VariantMode::AnyQnbc
                || v != Verdict::Satisfiable
                || any.is_none_or(|a| a == Verdict::Satisfiable)
        })
    }
}

fn row(n: usize, graph_index: u64, g: &Graph, modes: &[VariantMode]) -> CensusRow {
    CensusRow {
        n,
        graph_index,
        edges: g.edge_count(),
        verdicts: modes.iter().map(|&m| (m, solve(g, m).verdict)).collect(),
    }
}

/// Rows come back in enumeration order regardless of `workers`.
pub fn census(spec: &CensusSpec, modes: &[VariantMode], workers: usize) -> Result<Vec<CensusRow>> {
    let jobs: Vec<(usize, u64, Graph)> = match *spec {
        CensusSpec::Exhaustive { max_n } => {
            if max_n > EXHAUSTIVE_LIMIT {
                return Err(Error::InvalidParameter(format!(
                    "exhaustive census is limited to n <= {EXHAUSTIVE_LIMIT}; use a seeded sample"
                )));
            }
            (1..=max_n)
                .flat_map(|n| {
                    let count = sample::labeled_count(n).expect("small n");
                    (0..count).map(move |i| (n, i, sample::labeled_graph(n, i)))
                })
                .collect()
        }
        CensusSpec::Sample { n, count, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("edge probability {p}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count as u64)
                .map(|i| (n, i, sample::gnp(&mut rng, n, p)))
                .collect()
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    Ok(pool.install(|| {
        jobs.par_iter()
            .map(|(n, i, g)| row(*n, *i, g, modes))
            .collect()
    }))
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Satisfiable => "sat",
        Verdict::Unsatisfiable => "unsat",
        Verdict::Unknown => "unknown",
    }
}

/// Tab-separated table with a header row.
pub fn render_tsv(rows: &[CensusRow], modes: &[VariantMode]) -> String {
    let mut out = String::from("n\tgraph_index\tedges");
    for m in modes {
        let _ = write!(out, "\t{m}");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(out, "{}\t{}\t{}", r.n, r.graph_index, r.edges);
        for &m in modes {
            let _ = write!(out, "\t{}", r.verdict(m).map_or("-", verdict_word));
        }
        out.push('\n');
    }
    out
}

/// Satisfiable counts per `(n, mode)`.
pub fn summarize(rows: &[CensusRow], modes: &[VariantMode]) -> String {
    let mut out = String::from("n\tgraphs");
    for m in modes {
        let _ = write!(out, "\t{m}");
    }
    out.push('\n');
    let mut ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
    ns.dedup();
    for n in ns {
        let group: Vec<&CensusRow> = rows.iter().filter(|r| r.n == n).collect();
        let _ = write!(out, "{n}\t{}", group.len());
        for &m in modes {
            let sat = group
                .iter()
                .filter(|r| r.verdict(m) == Some(Verdict::Satisfiable))
                .count();
            let _ = write!(out, "\t{sat}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_n4() {
        let rows = census(&CensusSpec::Exhaustive { max_n: 4 }, &VariantMode::CORE, 1).unwrap();
        assert_eq!(rows.iter().filter(|r| r.n == 4).count(), 64);
        let k4 = rows
            .iter()
            .find(|r| r.n == 4 && r.graph_index == 63)
            .unwrap();
        assert_eq!(
            k4.verdict(VariantMode::Negative),
            Some(Verdict::Satisfiable)
        );
        assert!(rows.iter().all(CensusRow::consistent));
    }

    #[test]
    fn exhaustive_n3_needs_odd_degree() {
        let rows = census(
            &CensusSpec::Exhaustive { max_n: 3 },
            &[VariantMode::AnyQnbc],
            1,
        )
        .unwrap();
        for r in rows.iter().filter(|r| r.n == 3) {
            let g = sample::labeled_graph(3, r.graph_index);
            if r.verdict(VariantMode::AnyQnbc) == Some(Verdict::Satisfiable) {
                assert!(g.odd_degree_count() > 0);
            }
        }
        // P_3 (edges 12, 23) yes, K_3 no.
        let p3 = rows
            .iter()
            .find(|r| r.n == 3 && r.graph_index == 0b101)
            .unwrap();
        assert_eq!(p3.verdict(VariantMode::AnyQnbc), Some(Verdict::Satisfiable));
        let k3 = rows
            .iter()
            .find(|r| r.n == 3 && r.graph_index == 0b111)
            .unwrap();
        assert_eq!(
            k3.verdict(VariantMode::AnyQnbc),
            Some(Verdict::Unsatisfiable)
        );
    }

    #[test]
    fn sample_reproducible_and_parallel_stable() {
        let spec = CensusSpec::Sample {
            n: 10,
            count: 100,
            p: 0.5,
            seed: 42,
        };
        let a = census(&spec, &VariantMode::CORE, 1).unwrap();
        let b = census(&spec, &VariantMode::CORE, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            render_tsv(&a, &VariantMode::CORE),
            render_tsv(&b, &VariantMode::CORE)
        );
    }

    #[test]
    fn rejects_large_exhaustive() {
        assert!(census(&CensusSpec::Exhaustive { max_n: 7 }, &VariantMode::CORE, 1).is_err());
    }
}
