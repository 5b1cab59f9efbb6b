//! Embedding any graph as an induced subgraph of a QNBC graph, and the
//! gadget that turns an NBC instance into a QNBC one.

use crate::checker::{classify, Kind};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph, VertexMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedResult {
    pub host: Graph,
    pub host_coloring: Coloring,
    /// `v_i ↦ v_i¹`.
    pub embedding: VertexMap,
}

/// Three copies of the vertex set: `v_i^j` is vertex `(j - 1) * n + i`.
/// Copies 1 and 2 each carry `E(G)`, every edge `v_i v_j` also links
/// `v_i¹ v_j²` and `v_j¹ v_i²`, and `v_i² v_i³` is a pendant edge. Copy 1 is
/// red, copies 2 and 3 blue.
pub fn heredity_embed(g: &Graph) -> Result<EmbedResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cannot embed the empty graph".into(),
        ));
    }
    let mut edges = Vec::with_capacity(4 * g.edge_count() + n);
    for &(i, j) in g.edges() {
        edges.push((i, j));
        edges.push((n + i, n + j));
        edges.push((i, n + j));
        edges.push((j, n + i));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n + i)));
    let host = Graph::new(3 * n, edges)?;
    let host_coloring = (0..3 * n)
        .map(|v| if v < n { Color::Red } else { Color::Blue })
        .collect();
    Ok(EmbedResult {
        host,
        host_coloring,
        embedding: VertexMap::from_targets((0..n).collect())?,
    })
}

/// Whether `map` is an induced-subgraph embedding of `g` into `host`.
pub fn verify_induced(g: &Graph, host: &Graph, map: &VertexMap) -> Result<bool> {
    if map.len() != g.n() {
        return Err(Error::InvalidMap(format!(
            "map covers {} vertices, graph has {}",
            map.len(),
            g.n()
        )));
    }
    if let Some(&(_, t)) = map.pairs().iter().find(|&&(_, t)| t >= host.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: t,
            n: host.n(),
        });
    }
    let image = |v: usize| map.image(v).expect("covered");
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != host.has_edge(image(u), image(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetResult {
    pub gprime: Graph,
    pub gprime_coloring: Coloring,
    /// Always the last vertex of `gprime`.
    pub added_vertex: usize,
    pub anchor_edge: (usize, usize),
}

/// Adds a red vertex adjacent to both ends of a red–blue edge of an NBC
/// coloring. Both ends then see one extra red neighbor; nothing else moves.
///
/// The edge must be chosen with the coloring in hand, so this is a
/// coloring-directed transformation, not a coloring-oblivious reduction.
/// With `edge = None` the least red–blue edge is used.
pub fn nbc_to_qnbc_gadget(
    g: &Graph,
    c: &Coloring,
    edge: Option<(usize, usize)>,
) -> Result<GadgetResult> {
    let class = classify(g, c)?;
    if class.kind != Kind::Nbc {
        return Err(Error::Hypothesis(format!(
            "coloring must be NBC, classified {class}"
        )));
    }
    if g.edge_count() == 0 {
        return Err(Error::Hypothesis("graph has no edges".into()));
    }
    let (a, b) = match edge {
        Some((u, v)) => {
            if !g.has_edge(u, v) {
                return Err(Error::Hypothesis(format!(
                    "{{{}, {}}} is not an edge",
                    u + 1,
                    v + 1
                )));
            }
            if c[u] == c[v] {
                return Err(Error::Hypothesis(format!(
                    "edge {{{}, {}}} is monochromatic",
                    u + 1,
                    v + 1
                )));
            }
            (u.min(v), u.max(v))
        }
        None => *g
            .edges()
            .iter()
            .find(|&&(u, v)| c[u] != c[v])
            .expect("an NBC graph with an edge has a red-blue edge"),
    };
    let ve = g.n();
    let gprime = Graph::new(
        g.n() + 1,
        g.edges().iter().copied().chain([(a, ve), (b, ve)]),
    )?;
    let gprime_coloring = c.colors().iter().copied().chain([Color::Red]).collect();
    Ok(GadgetResult {
        gprime,
        gprime_coloring,
        added_vertex: ve,
        anchor_edge: (a, b),
    })
}

/// Deletes the added vertex and checks the restriction is NBC again.
pub fn gadget_inverse(gr: &GadgetResult) -> Result<(Graph, Coloring)> {
    let g = &gr.gprime;
    let ve = gr.added_vertex;
    let (a, b) = gr.anchor_edge;
    let malformed = |msg: String| Err(Error::MalformedGadget(msg));
    if g.n() == 0 || ve + 1 != g.n() {
        return malformed(format!("added vertex {ve} is not the last vertex"));
    }
    if gr.gprime_coloring.len() != g.n() {
        return malformed("coloring length does not match".into());
    }
    if g.neighbors(ve) != [a.min(b), a.max(b)] {
        return malformed(format!(
            "added vertex must be adjacent exactly to {} and {}",
            a + 1,
            b + 1
        ));
    }
    if !g.has_edge(a, b) {
        return malformed("anchor edge missing".into());
    }
    if gr.gprime_coloring[ve] != Color::Red {
        return malformed("added vertex is not red".into());
    }
    let restored = g.truncate(ve);
    let coloring: Coloring = gr.gprime_coloring.colors()[..ve].iter().copied().collect();
    let class = classify(&restored, &coloring)?;
    if !class.is_nbc() {
        return malformed(format!("restored coloring classified {class}, not NBC"));
    }
    Ok((restored, coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::imbalances;
    use crate::families;

    fn col(s: &str) -> Coloring {
        Coloring::parse(s).unwrap()
    }

    #[test]
    fn embed_k2() {
        let e = heredity_embed(&Graph::complete(2)).unwrap();
        // v1¹=0 v2¹=1 v1²=2 v2²=3 v1³=4 v2³=5
        assert_eq!(
            e.host.edges(),
            &[(0, 1), (0, 3), (1, 2), (2, 3), (2, 4), (3, 5)]
        );
        let imb = imbalances(&e.host, &e.host_coloring).unwrap();
        assert_eq!(imb, vec![0, 0, -1, -1, -1, -1]);
        let class = classify(&e.host, &e.host_coloring).unwrap();
        assert_eq!(class.uniform_dominant, Some(Color::Blue));
        assert!(verify_induced(&Graph::complete(2), &e.host, &e.embedding).unwrap());
    }

    #[test]
    fn embed_single_vertex() {
        let e = heredity_embed(&Graph::empty(1)).unwrap();
        assert_eq!(e.host.edges(), &[(1, 2)]);
        assert_eq!(e.host_coloring.to_string(), "RBB");
        assert!(classify(&e.host, &e.host_coloring).unwrap().is_qnbc());
    }

    #[test]
    fn embed_k3() {
        let k3 = Graph::complete(3);
        let e = heredity_embed(&k3).unwrap();
        assert_eq!(e.host.n(), 9);
        let imb = imbalances(&e.host, &e.host_coloring).unwrap();
        assert!(imb.iter().all(|&x| x == 0 || x == -1));
        assert!(verify_induced(&k3, &e.host, &e.embedding).unwrap());
    }

    #[test]
    fn induced_checks() {
        let k2 = Graph::complete(2);
        let host = heredity_embed(&k2).unwrap().host;
        assert!(verify_induced(&k2, &host, &VertexMap::from_targets(vec![2, 4]).unwrap()).unwrap());
        assert!(
            !verify_induced(&k2, &host, &VertexMap::from_targets(vec![0, 4]).unwrap()).unwrap()
        );
        assert!(verify_induced(&k2, &host, &VertexMap::from_targets(vec![0, 9]).unwrap()).is_err());
        assert!(verify_induced(&k2, &host, &VertexMap::from_targets(vec![0]).unwrap()).is_err());
    }

    #[test]
    fn gadget_on_c4() {
        let c4 = Graph::cycle(4).unwrap();
        let c = col("RRBB");
        let gr = nbc_to_qnbc_gadget(&c4, &c, Some((1, 2))).unwrap();
        assert_eq!(gr.gprime.n(), 5);
        let imb = imbalances(&gr.gprime, &gr.gprime_coloring).unwrap();
        assert_eq!(imb, vec![0, 1, 1, 0, 0]);
        assert!(classify(&gr.gprime, &gr.gprime_coloring).unwrap().is_qnbc());
        assert_eq!(gadget_inverse(&gr).unwrap(), (c4, c));
    }

    #[test]
    fn gadget_default_edge_and_k22() {
        let k22 = families::complete_bipartite(2, 2).unwrap().graph;
        let c = col("RBRB");
        let gr = nbc_to_qnbc_gadget(&k22, &c, None).unwrap();
        assert_eq!(gr.anchor_edge, (0, 3));
        let imb = imbalances(&gr.gprime, &gr.gprime_coloring).unwrap();
        assert_eq!(imb.iter().filter(|&&x| x != 0).count(), 2);
    }

    #[test]
    fn gadget_errors() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(nbc_to_qnbc_gadget(&c4, &col("RBRB"), None).is_err());
        assert!(nbc_to_qnbc_gadget(&c4, &col("RRBB"), Some((0, 1))).is_err());
        assert!(nbc_to_qnbc_gadget(&c4, &col("RRBB"), Some((0, 2))).is_err());
        assert!(nbc_to_qnbc_gadget(&Graph::empty(2), &col("RB"), None).is_err());
    }

    #[test]
    fn tampered_gadget_rejected() {
        let c4 = Graph::cycle(4).unwrap();
        let mut gr = nbc_to_qnbc_gadget(&c4, &col("RRBB"), Some((1, 2))).unwrap();
        let mut edges = gr.gprime.edges().to_vec();
        edges.push((0, 4));
        gr.gprime = Graph::new(5, edges).unwrap();
        gr.gprime_coloring = col("RRBBR");
        assert!(matches!(
            gadget_inverse(&gr),
            Err(Error::MalformedGadget(_))
        ));
    }
}
