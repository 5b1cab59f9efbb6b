//! Classification of a (graph, coloring) pair and the edge-counting
//! quantities attached to a quasi neighborhood balanced coloring.
//!
//! Imbalance at a vertex is `#red neighbors - #blue neighbors`. Every vertex's
//! imbalance has the parity of its degree, so a coloring is QNBC exactly when
//! even-degree vertices are balanced, odd-degree vertices are off by one, and
//! at least one odd-degree vertex exists.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Kind {
    Invalid,
    Nbc,
    Qnbc,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Invalid => "invalid",
            Kind::Nbc => "NBC",
            Kind::Qnbc => "QNBC",
        })
    }
}

/// Checker verdict. The variant flags are only set for `Kind::Qnbc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Classification {
    pub kind: Kind,
    /// Every odd-degree vertex has a surplus of its own color.
    pub positive: bool,
    /// Every odd-degree vertex has a surplus of the opposite color.
    pub negative: bool,
    /// The one color every odd-degree vertex has a surplus of, if any.
    pub uniform_dominant: Option<Color>,
}

impl Classification {
    fn plain(kind: Kind) -> Self {
        Classification {
            kind,
            positive: false,
            negative: false,
            uniform_dominant: None,
        }
    }

    pub fn is_qnbc(&self) -> bool {
        self.kind == Kind::Qnbc
    }

    pub fn is_nbc(&self) -> bool {
        self.kind == Kind::Nbc
    }

    /// Same verdict on the complemented coloring.
    pub fn complemented(&self) -> Self {
        Classification {
            uniform_dominant: self.uniform_dominant.map(Color::flip),
            ..*self
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.kind == Kind::Qnbc {
            if self.positive {
                f.write_str(" positive")?;
            }
            if self.negative {
                f.write_str(" negative")?;
            }
            if let Some(d) = self.uniform_dominant {
                write!(f, " uniform({d})")?;
            }
        }
        Ok(())
    }
}

/// Signed imbalance at `v`: red neighbors minus blue neighbors.
pub fn imbalance(g: &Graph, c: &Coloring, v: usize) -> Result<i64> {
    c.check_len(g)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(imbalance_unchecked(g, c, v))
}

fn imbalance_unchecked(g: &Graph, c: &Coloring, v: usize) -> i64 {
    g.neighbors(v).iter().map(|&w| c[w].sign()).sum()
}

pub fn imbalances(g: &Graph, c: &Coloring) -> Result<Vec<i64>> {
    c.check_len(g)?;
    Ok(g.vertices().map(|v| imbalance_unchecked(g, c, v)).collect())
}

pub fn classify(g: &Graph, c: &Coloring) -> Result<Classification> {
    let imb = imbalances(g, c)?;
    Ok(classify_imbalances(g, c, &imb))
}

fn classify_imbalances(g: &Graph, c: &Coloring, imb: &[i64]) -> Classification {
    if imb.iter().any(|x| x.abs() > 1) {
        return Classification::plain(Kind::Invalid);
    }
    if imb.iter().all(|&x| x == 0) {
        return Classification::plain(Kind::Nbc);
    }
    // |imbalance| == 1 happens exactly at odd-degree vertices here.
    let mut positive = true;
    let mut negative = true;
    let mut dominant: Option<Option<Color>> = None;
    for v in g.vertices().filter(|&v| imb[v] != 0) {
        let surplus = if imb[v] > 0 { Color::Red } else { Color::Blue };
        if surplus == c[v] {
            negative = false;
        } else {
            positive = false;
        }
        dominant = match dominant {
            None => Some(Some(surplus)),
            Some(Some(d)) if d == surplus => Some(Some(d)),
            _ => Some(None),
        };
    }
    Classification {
        kind: Kind::Qnbc,
        positive,
        negative,
        uniform_dominant: dominant.flatten(),
    }
}

/// Counting quantities of a QNBC coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountingSummary {
    /// Odd-degree vertices whose surplus is the opposite color.
    pub r: usize,
    /// Odd-degree vertices whose surplus is their own color.
    pub s: usize,
    /// Edges with one red and one blue endpoint.
    pub cross_edges: usize,
    /// Number of odd-degree vertices.
    pub k: usize,
    pub edge_count: usize,
    /// `2|E| mod 4`.
    pub twice_edges_mod4: usize,
}

impl CountingSummary {
    /// `4·cross = 2|E| + r − s`, the form that follows from summing
    /// opposite-color neighbor counts over all vertices.
    pub fn identity_holds(&self) -> bool {
        4 * self.cross_edges as i64 == 2 * self.edge_count as i64 + self.r as i64 - self.s as i64
    }

    /// The sign-flipped form `4·cross = 2|E| − r + s`. It fails whenever
    /// `r != s` (e.g. K2 colored RB), and is kept only to demonstrate that.
    pub fn flipped_identity_holds(&self) -> bool {
        4 * self.cross_edges as i64 == 2 * self.edge_count as i64 - self.r as i64 + self.s as i64
    }

    /// `(2|E| + r − s) / 4`, which equals `cross_edges`.
    pub fn predicted_cross_edges(&self) -> f64 {
        (2 * self.edge_count as i64 + self.r as i64 - self.s as i64) as f64 / 4.0
    }

    pub fn flipped_predicted_cross_edges(&self) -> f64 {
        (2 * self.edge_count as i64 - self.r as i64 + self.s as i64) as f64 / 4.0
    }
}

pub fn counting_summary(g: &Graph, c: &Coloring) -> Result<CountingSummary> {
    let imb = imbalances(g, c)?;
    let class = classify_imbalances(g, c, &imb);
    if !class.is_qnbc() {
        return Err(Error::NotQnbc(class.to_string()));
    }
    let (mut r, mut s) = (0, 0);
    for v in g.vertices().filter(|&v| imb[v] != 0) {
        let surplus = if imb[v] > 0 { Color::Red } else { Color::Blue };
        if surplus == c[v] {
            s += 1;
        } else {
            r += 1;
        }
    }
    let cross_edges = g.edges().iter().filter(|&&(u, v)| c[u] != c[v]).count();
    Ok(CountingSummary {
        r,
        s,
        cross_edges,
        k: g.odd_degree_count(),
        edge_count: g.edge_count(),
        twice_edges_mod4: (2 * g.edge_count()) % 4,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub twice_edges_mod4: usize,
    pub k_mod4: usize,
    pub neg_k_mod4: usize,
    pub positive: bool,
    pub negative: bool,
    /// `2|E| ≡ −k (mod 4)`, checked when the coloring is positive.
    pub positive_holds: Option<bool>,
    /// `2|E| ≡ k (mod 4)`, checked when the coloring is negative.
    pub negative_holds: Option<bool>,
}

impl CongruenceReport {
    /// True unless an applicable congruence failed.
    pub fn ok(&self) -> bool {
        self.positive_holds != Some(false) && self.negative_holds != Some(false)
    }

    pub const NOTE: &'static str =
        "k is always even, so -k and k agree mod 4 and both congruences are the same condition";
}

pub fn check_congruence(g: &Graph, c: &Coloring) -> Result<CongruenceReport> {
    let class = classify(g, c)?;
    if !class.is_qnbc() {
        return Err(Error::NotQnbc(class.to_string()));
    }
    let twice = (2 * g.edge_count()) % 4;
    let k = g.odd_degree_count() % 4;
    let neg_k = (4 - k) % 4;
    Ok(CongruenceReport {
        twice_edges_mod4: twice,
        k_mod4: k,
        neg_k_mod4: neg_k,
        positive: class.positive,
        negative: class.negative,
        positive_holds: class.positive.then_some(twice == neg_k),
        negative_holds: class.negative.then_some(twice == k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn col(s: &str) -> Coloring {
        Coloring::parse(s).unwrap()
    }

    #[test]
    fn imbalance_examples() {
        let p3 = Graph::path(3);
        assert_eq!(imbalance(&p3, &col("RBR"), 1).unwrap(), 2);
        let k2 = Graph::complete(2);
        assert_eq!(imbalance(&k2, &col("RB"), 0).unwrap(), -1);
        assert_eq!(imbalance(&k2, &col("RB"), 1).unwrap(), 1);
        assert!(matches!(
            imbalance(&k2, &col("RB"), 2),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            imbalance(&k2, &col("R"), 0),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn gp51_outer_red_inner_blue() {
        let fr = families::generalized_petersen(5, 1).unwrap();
        let imb = imbalances(&fr.graph, fr.coloring.as_ref().unwrap()).unwrap();
        assert!(imb[..5].iter().all(|&x| x == 1));
        assert!(imb[5..].iter().all(|&x| x == -1));
    }

    #[test]
    fn classify_examples() {
        let k4 = classify(&Graph::complete(4), &col("RRBB")).unwrap();
        assert_eq!(k4.kind, Kind::Qnbc);
        assert!(k4.negative && !k4.positive);
        assert_eq!(k4.uniform_dominant, None);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(classify(&c4, &col("RRBB")).unwrap().kind, Kind::Nbc);

        let p5 = classify(&Graph::path(5), &col("RRBBR")).unwrap();
        assert_eq!(p5.kind, Kind::Qnbc);
        assert_eq!(p5.uniform_dominant, None);

        let k3 = Graph::complete(3);
        for mask in 0..8 {
            let c = Coloring::from_mask(3, mask);
            assert_ne!(classify(&k3, &c).unwrap().kind, Kind::Qnbc);
        }
    }

    #[test]
    fn classify_length_mismatch() {
        assert!(matches!(
            classify(&Graph::complete(3), &col("RB")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn counting_examples() {
        let fr = families::generalized_petersen(5, 1).unwrap();
        let cs = counting_summary(&fr.graph, fr.coloring.as_ref().unwrap()).unwrap();
        assert_eq!((cs.r, cs.s, cs.cross_edges, cs.k), (0, 10, 5, 10));
        assert!(cs.identity_holds());

        let cs = counting_summary(&Graph::complete(2), &col("RB")).unwrap();
        assert_eq!((cs.r, cs.s, cs.cross_edges), (2, 0, 1));
        assert!(cs.identity_holds());
        assert!(!cs.flipped_identity_holds());
        assert_eq!(cs.flipped_predicted_cross_edges(), 0.0);

        let cs = counting_summary(&Graph::complete(4), &col("RRBB")).unwrap();
        assert_eq!((cs.r, cs.s, cs.cross_edges), (4, 0, 4));
        assert!(cs.identity_holds());
    }

    #[test]
    fn counting_rejects_non_qnbc() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(matches!(
            counting_summary(&c4, &col("RRBB")),
            Err(Error::NotQnbc(_))
        ));
    }

    #[test]
    fn congruence_examples() {
        let fr = families::generalized_petersen(5, 1).unwrap();
        let rep = check_congruence(&fr.graph, fr.coloring.as_ref().unwrap()).unwrap();
        assert_eq!((rep.twice_edges_mod4, rep.neg_k_mod4), (2, 2));
        assert_eq!(rep.positive_holds, Some(true));
        assert_eq!(rep.negative_holds, None);

        let rep = check_congruence(&Graph::complete(4), &col("RRBB")).unwrap();
        assert_eq!((rep.twice_edges_mod4, rep.k_mod4), (0, 0));
        assert_eq!(rep.negative_holds, Some(true));

        let rep = check_congruence(&Graph::complete(2), &col("RR")).unwrap();
        assert_eq!((rep.twice_edges_mod4, rep.neg_k_mod4), (2, 2));
        assert!(rep.ok());

        assert!(check_congruence(&Graph::complete(3), &col("RRB")).is_err());
    }
}
