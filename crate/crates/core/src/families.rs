//! Graph families with explicit certified colorings.

use std::fmt;

use serde::Serialize;

use crate::checker::{Classification, Kind};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

/// What a construction asserts about its coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Claim {
    /// No QNBC coloring exists; none is returned.
    NotQnbc,
    Qnbc,
    Positive,
    Negative,
    Uniform(Color),
}

impl Claim {
    pub fn confirmed_by(&self, class: &Classification) -> bool {
        match *self {
            Claim::NotQnbc => class.kind != Kind::Qnbc,
            Claim::Qnbc => class.is_qnbc(),
            Claim::Positive => class.is_qnbc() && class.positive,
            Claim::Negative => class.is_qnbc() && class.negative,
            Claim::Uniform(d) => class.is_qnbc() && class.uniform_dominant == Some(d),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::NotQnbc => f.write_str("not QNBC"),
            Claim::Qnbc => f.write_str("QNBC"),
            Claim::Positive => f.write_str("positive QNBC"),
            Claim::Negative => f.write_str("negative QNBC"),
            Claim::Uniform(d) => write!(f, "uniform QNBC dominant {d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyResult {
    pub graph: Graph,
    pub coloring: Option<Coloring>,
    pub claim: Claim,
}

/// First `red` entries red, the rest blue.
fn split(len: usize, red: usize) -> impl Iterator<Item = Color> {
    (0..len).map(move |i| if i < red { Color::Red } else { Color::Blue })
}

/// Part of size `t`: half red when even, surplus in blue when odd.
fn part_split(t: usize) -> impl Iterator<Item = Color> {
    split(t, t / 2)
}

/// `K_n`. Even `n`: half red, half blue (negative). Odd `n`: every degree is
/// even, so no QNBC coloring exists.
pub fn complete(n: usize) -> Result<FamilyResult> {
    if n == 0 {
        return Err(Error::InvalidParameter("K_n needs n >= 1".into()));
    }
    let graph = Graph::complete(n);
    Ok(if n % 2 == 0 {
        FamilyResult {
            graph,
            coloring: Some(split(n, n / 2).collect()),
            claim: Claim::Negative,
        }
    } else {
        FamilyResult {
            graph,
            coloring: None,
            claim: Claim::NotQnbc,
        }
    })
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<FamilyResult> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(
            "K_{m,n} needs both parts non-empty".into(),
        ));
    }
    let graph = Graph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))?;
    Ok(if m % 2 == 1 || n % 2 == 1 {
        FamilyResult {
            graph,
            coloring: Some(part_split(m).chain(part_split(n)).collect()),
            claim: Claim::Uniform(Color::Blue),
        }
    } else {
        FamilyResult {
            graph,
            coloring: None,
            claim: Claim::NotQnbc,
        }
    })
}

/// The star `K_{1,n}`.
pub fn star(n: usize) -> Result<FamilyResult> {
    complete_bipartite(1, n)
}

/// `P_n` on vertices `0..n`; vertex `i` here is `i+1` in 1-indexed terms.
///
/// The returned coloring is uniform unless `n ≡ 1 (mod 4)`, where no uniform
/// QNBC coloring exists and the `RRBB` pattern is returned instead.
pub fn path(n: usize) -> Result<FamilyResult> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "P_n needs n >= 2 to have an odd-degree vertex".into(),
        ));
    }
    let red_residues: [usize; 2] = if n % 4 == 0 { [0, 1] } else { [1, 2] };
    let coloring = (1..=n)
        .map(|i| {
            if red_residues.contains(&(i % 4)) {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .collect();
    let claim = match n % 4 {
        0 => Claim::Uniform(Color::Blue),
        1 => Claim::Qnbc,
        _ => Claim::Uniform(Color::Red),
    };
    Ok(FamilyResult {
        graph: Graph::path(n),
        coloring: Some(coloring),
        claim,
    })
}

/// `GP(n, d)`: outer cycle `v_i = i`, inner vertices `u_i = n + i`, spokes
/// `v_i u_i` and inner edges `u_i u_{i+d}`. Outer red, inner blue.
pub fn generalized_petersen(n: usize, d: usize) -> Result<FamilyResult> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "GP(n, d) needs n >= 3, got {n}"
        )));
    }
    if d < 1 || d > (n - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "GP({n}, d) needs 1 <= d <= {}, got {d}",
            (n - 1) / 2
        )));
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    let inner = (0..n).map(|i| (n + i, n + (i + d) % n));
    let graph = Graph::new(2 * n, outer.chain(spokes).chain(inner))?;
    debug_assert_eq!(graph.edge_count(), 3 * n);
    Ok(FamilyResult {
        graph,
        coloring: Some(split(2 * n, n).collect()),
        claim: Claim::Positive,
    })
}

/// Bistar `B_{m,n}`: centers `a = 0`, `b = 1`; pendants of `a` are
/// `2..2+m`, pendants of `b` follow. Centers red, pendant groups split with
/// any surplus in blue.
pub fn bistar(m: usize, n: usize) -> Result<FamilyResult> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(
            "bistar needs at least one pendant on each center".into(),
        ));
    }
    let edges = std::iter::once((0, 1))
        .chain((0..m).map(|i| (0, 2 + i)))
        .chain((0..n).map(|i| (1, 2 + m + i)));
    let graph = Graph::new(2 + m + n, edges)?;
    let coloring = [Color::Red, Color::Red]
        .into_iter()
        .chain(part_split(m))
        .chain(part_split(n))
        .collect();
    Ok(FamilyResult {
        graph,
        coloring: Some(coloring),
        claim: Claim::Uniform(Color::Red),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::{classify, imbalances};

    fn confirm(fr: &FamilyResult) -> Classification {
        let c = fr.coloring.as_ref().expect("coloring");
        let class = classify(&fr.graph, c).unwrap();
        assert!(fr.claim.confirmed_by(&class), "{} vs {}", fr.claim, class);
        class
    }

    #[test]
    fn complete_graphs() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.coloring.as_ref().unwrap().to_string(), "RRBB");
        assert!(confirm(&k4).negative);

        let k3 = complete(3).unwrap();
        assert!(k3.coloring.is_none());
        assert_eq!(k3.claim, Claim::NotQnbc);

        let k2 = complete(2).unwrap();
        assert_eq!(k2.coloring.as_ref().unwrap().to_string(), "RB");
        confirm(&k2);

        assert!(complete(0).is_err());
    }

    #[test]
    fn complete_bipartite_graphs() {
        let k34 = complete_bipartite(3, 4).unwrap();
        assert_eq!(k34.coloring.as_ref().unwrap().to_string(), "RBBRRBB");
        let imb = imbalances(&k34.graph, k34.coloring.as_ref().unwrap()).unwrap();
        assert!(imb[..3].iter().all(|&x| x == 0));
        assert!(imb[3..].iter().all(|&x| x == -1));
        confirm(&k34);

        assert!(complete_bipartite(2, 2).unwrap().coloring.is_none());
        assert!(complete_bipartite(0, 2).is_err());

        let s = star(5).unwrap();
        assert_eq!(s.coloring.as_ref().unwrap().to_string(), "BRRBBB");
        confirm(&s);
    }

    #[test]
    fn paths_match_figure_rows() {
        let p5 = path(5).unwrap();
        assert_eq!(p5.coloring.as_ref().unwrap().to_string(), "RRBBR");
        assert_eq!(confirm(&p5).uniform_dominant, None);

        let p8 = path(8).unwrap();
        assert_eq!(p8.coloring.as_ref().unwrap().to_string(), "RBBRRBBR");
        assert_eq!(confirm(&p8).uniform_dominant, Some(Color::Blue));

        let p6 = path(6).unwrap();
        assert_eq!(p6.coloring.as_ref().unwrap().to_string(), "RRBBRR");
        assert_eq!(confirm(&p6).uniform_dominant, Some(Color::Red));

        assert!(path(1).is_err());
    }

    #[test]
    fn petersen_variants() {
        for (n, d) in [(5, 1), (5, 2), (7, 3)] {
            let fr = generalized_petersen(n, d).unwrap();
            assert!(fr.graph.degrees().all(|deg| deg == 3));
            assert!(confirm(&fr).positive);
        }
        assert!(generalized_petersen(6, 3).is_err());
        assert!(generalized_petersen(5, 0).is_err());
        assert!(generalized_petersen(2, 1).is_err());
    }

    #[test]
    fn bistars() {
        let b = bistar(5, 6).unwrap();
        let c = b.coloring.as_ref().unwrap();
        assert_eq!(c.to_string(), "RRRRBBBRRRBBB");
        confirm(&b);

        let b11 = bistar(1, 1).unwrap();
        assert_eq!(b11.coloring.as_ref().unwrap().to_string(), "RRBB");
        let imb = imbalances(&b11.graph, b11.coloring.as_ref().unwrap()).unwrap();
        assert_eq!(imb, vec![0, 0, 1, 1]);
        confirm(&b11);

        let b22 = bistar(2, 2).unwrap();
        let imb = imbalances(&b22.graph, b22.coloring.as_ref().unwrap()).unwrap();
        assert_eq!(&imb[..2], &[1, 1]);
        confirm(&b22);

        assert!(bistar(0, 3).is_err());
    }
}
