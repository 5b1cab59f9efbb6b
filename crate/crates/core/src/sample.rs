//! Labeled-graph enumeration and seeded random graphs.

use rand::Rng;

use crate::graph::Graph;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Number of labeled graphs on `n` vertices, if it fits in a `u64`.
pub fn labeled_count(n: usize) -> Option<u64> {
    let pairs = n * n.saturating_sub(1) / 2;
    1u64.checked_shl(pairs as u32)
}

/// The labeled graph whose edge set is bit `i` of `index` over
/// [`vertex_pairs`].
pub fn labeled_graph(n: usize, index: u64) -> Graph {
    let edges = vertex_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| index >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_canonical(n, edges)
}

/// All labeled graphs on `n` vertices in index order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let count = labeled_count(n).expect("n too large to enumerate");
    (0..count).map(move |i| labeled_graph(n, i))
}

/// Erdős–Rényi `G(n, p)`, pairs drawn in lexicographic order.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_canonical(n, edges)
}

/// `G(n, p)` followed by toggling the pair between consecutive odd-degree
/// vertices, which leaves every degree even.
pub fn even_degree_gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let g = gnp(rng, n, p);
    let odd: Vec<usize> = g.vertices().filter(|&v| g.degree(v) % 2 == 1).collect();
    let mut edges = g.edges().to_vec();
    for pair in odd.chunks(2) {
        let e = (pair[0], pair[1]);
        match edges.binary_search(&e) {
            Ok(i) => {
                edges.remove(i);
            }
            Err(i) => edges.insert(i, e),
        }
    }
    let out = Graph::from_canonical(n, edges);
    debug_assert_eq!(out.odd_degree_count(), 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts() {
        assert_eq!(labeled_count(4), Some(64));
        assert_eq!(labeled_count(5), Some(1024));
        assert_eq!(labeled_count(1), Some(1));
        assert_eq!(labeled_graphs(3).count(), 8);
        assert_eq!(labeled_graph(4, 63), Graph::complete(4));
    }

    #[test]
    fn even_degree_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..12 {
            let g = even_degree_gnp(&mut rng, n, 0.5);
            assert!(g.degrees().all(|d| d % 2 == 0));
        }
    }

    #[test]
    fn gnp_is_seeded() {
        let a = gnp(&mut ChaCha8Rng::seed_from_u64(3), 9, 0.5);
        let b = gnp(&mut ChaCha8Rng::seed_from_u64(3), 9, 0.5);
        assert_eq!(a, b);
    }
}
