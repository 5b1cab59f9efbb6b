//! Graph products and coloring lifts.
//!
//! For the four vertex-pair products, `(u, v)` is vertex `u * |V(H)| + v`, so
//! row `u` is the H-layer `H_u` and column `v` is the G-layer `G_v`. The join
//! places `G` at `0..|V(G)|` and `H` after it.
//!
//! Every lift re-classifies its inputs, refuses to build when a hypothesis
//! fails, and returns a [`Promise`] describing what the output is guaranteed
//! to satisfy.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::checker::{classify, Classification, Kind};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProductKind {
    Lexicographic,
    Direct,
    Cartesian,
    Strong,
    Join,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Lexicographic,
        ProductKind::Direct,
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Join,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProductKind::Lexicographic => "lex",
            ProductKind::Direct => "direct",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Join => "join",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown product kind `{s}`")))
    }
}

/// Index of `(u, v)` in a vertex-pair product with second factor of order `h_n`.
pub fn layer_index(u: usize, v: usize, h_n: usize) -> usize {
    u * h_n + v
}

pub fn layer_pair(index: usize, h_n: usize) -> (usize, usize) {
    (index / h_n, index % h_n)
}

pub fn product_graph(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::InvalidParameter(
            "products need non-empty factors".into(),
        ));
    }
    let hn = h.n();
    let at = |u: usize, v: usize| layer_index(u, v, hn);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let h_layers = |edges: &mut Vec<(usize, usize)>| {
        for u in g.vertices() {
            edges.extend(h.edges().iter().map(|&(v, w)| (at(u, v), at(u, w))));
        }
    };
    let g_layers = |edges: &mut Vec<(usize, usize)>| {
        for v in h.vertices() {
            edges.extend(g.edges().iter().map(|&(u, x)| (at(u, v), at(x, v))));
        }
    };
    let direct = |edges: &mut Vec<(usize, usize)>| {
        for &(u, x) in g.edges() {
            for &(v, w) in h.edges() {
                edges.push((at(u, v), at(x, w)));
                edges.push((at(u, w), at(x, v)));
            }
        }
    };
    let n = match kind {
        ProductKind::Lexicographic => {
            h_layers(&mut edges);
            for &(u, x) in g.edges() {
                for v in h.vertices() {
                    edges.extend(h.vertices().map(|w| (at(u, v), at(x, w))));
                }
            }
            g.n() * hn
        }
        ProductKind::Direct => {
            direct(&mut edges);
            g.n() * hn
        }
        ProductKind::Cartesian => {
            h_layers(&mut edges);
            g_layers(&mut edges);
            g.n() * hn
        }
        ProductKind::Strong => {
            h_layers(&mut edges);
            g_layers(&mut edges);
            direct(&mut edges);
            g.n() * hn
        }
        ProductKind::Join => {
            let off = g.n();
            edges.extend_from_slice(g.edges());
            edges.extend(h.edges().iter().map(|&(v, w)| (off + v, off + w)));
            for x in g.vertices() {
                edges.extend(h.vertices().map(|y| (x, off + y)));
            }
            g.n() + hn
        }
    };
    Graph::new(n, edges)
}

/// What a lifted coloring is guaranteed to satisfy. The flags are
/// requirements; a classification may carry additional flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Promise {
    pub kind: Kind,
    pub positive: bool,
    pub negative: bool,
    pub uniform: Option<Color>,
}

impl Promise {
    fn kind(kind: Kind) -> Self {
        Promise {
            kind,
            positive: false,
            negative: false,
            uniform: None,
        }
    }

    pub fn holds(&self, class: &Classification) -> bool {
        class.kind == self.kind
            && (!self.positive || class.positive)
            && (!self.negative || class.negative)
            && self
                .uniform
                .is_none_or(|d| class.uniform_dominant == Some(d))
    }
}

impl fmt::Display for Promise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.positive {
            f.write_str(" positive")?;
        }
        if self.negative {
            f.write_str(" negative")?;
        }
        if let Some(d) = self.uniform {
            write!(f, " uniform({d})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub graph: Graph,
    pub coloring: Coloring,
    pub promise: Promise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LexMode {
    /// `H` is QNBC with equally many red and blue vertices; every layer gets `h`.
    Balanced,
    /// `G` is NBC; layer `H_u` gets `h` or its complement by the color of `u`.
    NbcBase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum JoinMode {
    /// Both QNBC with `|R| = |B|`.
    A,
    /// `G` NBC with `|R| = |B| + 1`, `H` NBC with `|R| = |B|`.
    B,
    /// `G` QNBC with `|R| = |B| + 1`, `H` NBC with `|R| = |B|`.
    C,
    /// Mode A hypotheses, both colorings positive.
    Positive,
    /// Mode A hypotheses, both colorings negative.
    Negative,
    /// Mode A hypotheses, both uniform with the same dominant color.
    Uniform,
}

impl FromStr for LexMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "balanced" => Ok(LexMode::Balanced),
            "ii" | "nbc-base" => Ok(LexMode::NbcBase),
            _ => Err(Error::InvalidParameter(format!(
                "unknown lexicographic mode `{s}`"
            ))),
        }
    }
}

impl FromStr for JoinMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(JoinMode::A),
            "b" => Ok(JoinMode::B),
            "c" => Ok(JoinMode::C),
            "positive" => Ok(JoinMode::Positive),
            "negative" => Ok(JoinMode::Negative),
            "uniform" => Ok(JoinMode::Uniform),
            _ => Err(Error::InvalidParameter(format!("unknown join mode `{s}`"))),
        }
    }
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(hypothesis(msg))
    }
}

fn balanced(c: &Coloring) -> bool {
    c.count(Color::Red) == c.count(Color::Blue)
}

fn all_red(c: &Coloring) -> bool {
    c.count(Color::Blue) == 0
}

/// Layer `G_v` gets `g_col` when `h_col(v)` is red, its complement otherwise.
/// `(u, v)` ends up red iff `g_col(u) == h_col(v)`, so equivalently layer
/// `H_u` gets `h_col` when `g_col(u)` is red and its complement otherwise.
fn column_lift(g_col: &Coloring, h_col: &Coloring) -> Coloring {
    let mut out = Vec::with_capacity(g_col.len() * h_col.len());
    for &gu in g_col.colors() {
        out.extend(h_col.colors().iter().map(|&hv| match hv {
            Color::Red => gu,
            Color::Blue => gu.flip(),
        }));
    }
    Coloring::new(out)
}

pub fn lift_lexicographic(
    g: &Graph,
    g_col: Option<&Coloring>,
    h: &Graph,
    h_col: &Coloring,
    mode: LexMode,
) -> Result<Lift> {
    let hc = classify(h, h_col)?;
    require(hc.is_qnbc(), "h_col must be QNBC on H")?;
    let (coloring, uniform) = match mode {
        LexMode::Balanced => {
            if g_col.is_some() {
                return Err(hypothesis("mode (i) takes no coloring of G"));
            }
            require(balanced(h_col), "mode (i) needs |R| = |B| in h_col")?;
            let colors = g
                .vertices()
                .flat_map(|_| h_col.colors().iter().copied())
                .collect();
            (colors, hc.uniform_dominant)
        }
        LexMode::NbcBase => {
            let g_col = g_col.ok_or_else(|| hypothesis("mode (ii) needs an NBC coloring of G"))?;
            require(classify(g, g_col)?.is_nbc(), "g_col must be NBC on G")?;
            // Complemented layers flip the dominant color.
            let uniform = if all_red(g_col) {
                hc.uniform_dominant
            } else {
                None
            };
            (column_lift(g_col, h_col), uniform)
        }
    };
    Ok(Lift {
        graph: product_graph(ProductKind::Lexicographic, g, h)?,
        coloring,
        promise: Promise {
            kind: Kind::Qnbc,
            positive: hc.positive,
            negative: hc.negative,
            uniform,
        },
    })
}

/// With `h_col` NBC the lift is NBC; with `h_col` QNBC it is QNBC, and the
/// imbalance at `(u, v)` is the product of the factor imbalances.
pub fn lift_direct(g: &Graph, g_col: &Coloring, h: &Graph, h_col: &Coloring) -> Result<Lift> {
    let gc = classify(g, g_col)?;
    let hc = classify(h, h_col)?;
    require(gc.is_qnbc(), "g_col must be QNBC on G")?;
    require(
        hc.is_qnbc() || hc.is_nbc(),
        "h_col must be NBC or QNBC on H",
    )?;
    let promise = if hc.is_nbc() {
        Promise::kind(Kind::Nbc)
    } else {
        Promise {
            kind: Kind::Qnbc,
            positive: (gc.positive && hc.positive) || (gc.negative && hc.negative),
            negative: (gc.positive && hc.negative) || (gc.negative && hc.positive),
            uniform: match (gc.uniform_dominant, hc.uniform_dominant) {
                (Some(a), Some(b)) if a == b => Some(Color::Red),
                (Some(_), Some(_)) => Some(Color::Blue),
                _ => None,
            },
        }
    };
    Ok(Lift {
        graph: product_graph(ProductKind::Direct, g, h)?,
        coloring: column_lift(g_col, h_col),
        promise,
    })
}

fn lift_over_nbc(
    kind: ProductKind,
    g: &Graph,
    g_col: &Coloring,
    h: &Graph,
    h_col: &Coloring,
) -> Result<Lift> {
    let gc = classify(g, g_col)?;
    require(gc.is_qnbc(), "g_col must be QNBC on G")?;
    require(classify(h, h_col)?.is_nbc(), "h_col must be NBC on H")?;
    Ok(Lift {
        graph: product_graph(kind, g, h)?,
        coloring: column_lift(g_col, h_col),
        promise: Promise {
            kind: Kind::Qnbc,
            positive: gc.positive,
            negative: gc.negative,
            // Complemented G-layers flip the dominant color.
            uniform: if all_red(h_col) {
                gc.uniform_dominant
            } else {
                None
            },
        },
    })
}

pub fn lift_cartesian(g: &Graph, g_col: &Coloring, h: &Graph, h_col: &Coloring) -> Result<Lift> {
    lift_over_nbc(ProductKind::Cartesian, g, g_col, h, h_col)
}

pub fn lift_strong(g: &Graph, g_col: &Coloring, h: &Graph, h_col: &Coloring) -> Result<Lift> {
    lift_over_nbc(ProductKind::Strong, g, g_col, h, h_col)
}

pub fn lift_join(
    g: &Graph,
    g_col: &Coloring,
    h: &Graph,
    h_col: &Coloring,
    mode: JoinMode,
) -> Result<Lift> {
    let gc = classify(g, g_col)?;
    let hc = classify(h, h_col)?;
    let g_red_surplus = g_col.count(Color::Red) == g_col.count(Color::Blue) + 1;
    let promise = match mode {
        JoinMode::A | JoinMode::Positive | JoinMode::Negative | JoinMode::Uniform => {
            require(gc.is_qnbc() && hc.is_qnbc(), "both colorings must be QNBC")?;
            require(
                balanced(g_col) && balanced(h_col),
                "both colorings need |R| = |B|",
            )?;
            let mut p = Promise::kind(Kind::Qnbc);
            match mode {
                JoinMode::Positive => {
                    require(
                        gc.positive && hc.positive,
                        "both colorings must be positive",
                    )?;
                    p.positive = true;
                }
                JoinMode::Negative => {
                    require(
                        gc.negative && hc.negative,
                        "both colorings must be negative",
                    )?;
                    p.negative = true;
                }
                JoinMode::Uniform => match (gc.uniform_dominant, hc.uniform_dominant) {
                    (Some(a), Some(b)) if a == b => p.uniform = Some(a),
                    (Some(_), Some(_)) => {
                        return Err(hypothesis(
                            "uniform colorings have different dominant colors",
                        ))
                    }
                    _ => return Err(hypothesis("both colorings must be uniform")),
                },
                _ => {}
            }
            p
        }
        JoinMode::B => {
            require(gc.is_nbc(), "g_col must be NBC")?;
            require(g_red_surplus, "g_col needs |R| = |B| + 1")?;
            require(
                hc.is_nbc() && balanced(h_col),
                "h_col must be NBC with |R| = |B|",
            )?;
            Promise {
                uniform: Some(Color::Red),
                ..Promise::kind(Kind::Qnbc)
            }
        }
        JoinMode::C => {
            require(gc.is_qnbc(), "g_col must be QNBC")?;
            require(g_red_surplus, "g_col needs |R| = |B| + 1")?;
            require(
                hc.is_nbc() && balanced(h_col),
                "h_col must be NBC with |R| = |B|",
            )?;
            Promise::kind(Kind::Qnbc)
        }
    };
    let coloring = g_col
        .colors()
        .iter()
        .chain(h_col.colors())
        .copied()
        .collect();
    Ok(Lift {
        graph: product_graph(ProductKind::Join, g, h)?,
        coloring,
        promise,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn col(s: &str) -> Coloring {
        Coloring::parse(s).unwrap()
    }

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    fn check(l: &Lift) -> Classification {
        let class = classify(&l.graph, &l.coloring).unwrap();
        assert!(l.promise.holds(&class), "{} vs {}", l.promise, class);
        class
    }

    #[test]
    fn product_shapes() {
        let k2 = Graph::complete(2);
        let d = product_graph(ProductKind::Direct, &k2, &c4()).unwrap();
        assert_eq!((d.n(), d.edge_count()), (8, 8));
        assert!(d.degrees().all(|x| x == 2));

        let q3 = product_graph(ProductKind::Cartesian, &k2, &c4()).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert!(q3.degrees().all(|x| x == 3));

        let j = product_graph(ProductKind::Join, &k2, &k2).unwrap();
        assert_eq!(j, Graph::complete(4));

        let lex = product_graph(ProductKind::Lexicographic, &k2, &Graph::empty(2)).unwrap();
        assert_eq!(lex, families::complete_bipartite(2, 2).unwrap().graph);

        assert!(product_graph(ProductKind::Strong, &Graph::empty(0), &k2).is_err());
    }

    #[test]
    fn lex_modes() {
        let l = lift_lexicographic(
            &Graph::path(3),
            None,
            &Graph::complete(2),
            &col("RB"),
            LexMode::Balanced,
        )
        .unwrap();
        assert_eq!(l.coloring.to_string(), "RBRBRB");
        check(&l);

        let l = lift_lexicographic(
            &c4(),
            Some(&col("RRBB")),
            &Graph::complete(2),
            &col("RR"),
            LexMode::NbcBase,
        )
        .unwrap();
        assert_eq!(l.graph.n(), 8);
        assert!(check(&l).positive);

        assert!(matches!(
            lift_lexicographic(
                &Graph::path(3),
                None,
                &Graph::complete(2),
                &col("RR"),
                LexMode::Balanced
            ),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn direct_modes() {
        let k2 = Graph::complete(2);
        let l = lift_direct(&k2, &col("RR"), &c4(), &col("RRBB")).unwrap();
        assert_eq!(check(&l).kind, Kind::Nbc);

        let l = lift_direct(&k2, &col("RR"), &k2, &col("RR")).unwrap();
        assert_eq!((l.graph.n(), l.graph.edge_count()), (4, 2));
        assert!(check(&l).positive);

        assert!(lift_direct(&Graph::path(3), &col("RBR"), &k2, &col("RR")).is_err());
    }

    #[test]
    fn cartesian_modes() {
        let k2 = Graph::complete(2);
        let l = lift_cartesian(&k2, &col("RR"), &c4(), &col("RRBB")).unwrap();
        assert!(check(&l).positive);
        let l = lift_cartesian(&k2, &col("RB"), &c4(), &col("RRBB")).unwrap();
        assert!(check(&l).negative);
        assert!(lift_cartesian(&k2, &col("RR"), &k2, &col("RB")).is_err());
    }

    #[test]
    fn strong_modes() {
        let k2 = Graph::complete(2);
        let l = lift_strong(&k2, &col("RR"), &c4(), &col("RRBB")).unwrap();
        assert!(check(&l).positive);
        let p5 = families::path(5).unwrap();
        let l = lift_strong(
            &p5.graph,
            p5.coloring.as_ref().unwrap(),
            &c4(),
            &col("RRBB"),
        )
        .unwrap();
        check(&l);
        assert!(lift_strong(&k2, &col("RR"), &k2, &col("RR")).is_err());
    }

    #[test]
    fn join_modes() {
        let k2 = Graph::complete(2);
        let l = lift_join(&k2, &col("RB"), &k2, &col("RB"), JoinMode::A).unwrap();
        assert_eq!(l.graph, Graph::complete(4));
        assert!(check(&l).negative);

        let l = lift_join(
            &Graph::empty(1),
            &col("R"),
            &Graph::empty(2),
            &col("RB"),
            JoinMode::B,
        )
        .unwrap();
        assert_eq!(l.graph.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(check(&l).uniform_dominant, Some(Color::Red));

        assert!(lift_join(&k2, &col("RR"), &k2, &col("RB"), JoinMode::A).is_err());

        let l = lift_join(&k2, &col("RB"), &k2, &col("RB"), JoinMode::Negative).unwrap();
        check(&l);
        assert!(lift_join(&k2, &col("RB"), &k2, &col("RB"), JoinMode::Positive).is_err());
    }

    #[test]
    fn join_uniform_dominant_mismatch() {
        // P_4 colored RBBR is uniform blue with two of each color;
        // its complement BRRB is uniform red.
        let p4 = Graph::path(4);
        let blue = families::path(4).unwrap().coloring.unwrap();
        let red = blue.complement();
        assert!(lift_join(&p4, &blue, &p4, &blue, JoinMode::Uniform).is_ok());
        assert!(matches!(
            lift_join(&p4, &blue, &p4, &red, JoinMode::Uniform),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn layer_index_round_trip() {
        for idx in 0..20 {
            let (u, v) = layer_pair(idx, 4);
            assert_eq!(layer_index(u, v, 4), idx);
        }
    }
}
