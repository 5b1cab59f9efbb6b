//! Simple undirected graphs, two-colorings and vertex maps, together with the
//! text formats used to exchange them.
//!
//! Vertices are `0..n` in memory. The edge-list format is 1-indexed:
//!
//! ```text
//! c optional comment
//! p edge <n> <m>
//! e <u> <v>
//! ```
//!
//! A coloring file is a single line of `R`/`B` characters, one per vertex.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Canonical edge list: `u < v`, sorted, no duplicates.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(n, canon))
    }

    /// `edges` must already be sorted, deduplicated, `u < v < n`.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn odd_degree_count(&self) -> usize {
        self.degrees().filter(|d| d % 2 == 1).count()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Subgraph induced on `0..keep` (drops every later vertex).
    pub fn truncate(&self, keep: usize) -> Graph {
        let keep = keep.min(self.n);
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(_, v)| v < keep)
            .collect();
        Self::from_canonical(keep, edges)
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_canonical(n, edges)
    }

    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_canonical(n, edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Parses the 1-indexed edge-list format.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line == "c" || line.starts_with("c ") {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(parse_err("duplicate header".into()));
                    }
                    if fields.next() != Some("edge") {
                        return Err(parse_err("expected `p edge <n> <m>`".into()));
                    }
                    let n = parse_count(fields.next(), "vertex count").map_err(parse_err)?;
                    let m = parse_count(fields.next(), "edge count").map_err(parse_err)?;
                    if fields.next().is_some() {
                        return Err(parse_err("trailing fields after header".into()));
                    }
                    header = Some((n, m));
                }
                Some("e") => {
                    let (n, _) = header
                        .ok_or_else(|| parse_err("edge line before `p edge` header".into()))?;
                    let u = parse_count(fields.next(), "endpoint").map_err(parse_err)?;
                    let v = parse_count(fields.next(), "endpoint").map_err(parse_err)?;
                    if fields.next().is_some() {
                        return Err(parse_err("trailing fields after edge".into()));
                    }
                    for w in [u, v] {
                        if w == 0 || w > n {
                            return Err(parse_err(format!("vertex {w} outside [1, {n}]")));
                        }
                    }
                    if u == v {
                        return Err(parse_err(format!("self-loop at vertex {u}")));
                    }
                    edges.push((u - 1, v - 1));
                }
                Some(other) => {
                    return Err(parse_err(format!("unrecognized line type `{other}`")));
                }
                None => unreachable!("blank lines are skipped"),
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `p edge <n> <m>` header".into(),
        })?;
        let graph = Graph::new(n, edges)?;
        if graph.edge_count() != m {
            return Err(Error::EdgeCountMismatch {
                declared: m,
                found: graph.edge_count(),
            });
        }
        Ok(graph)
    }

    /// Canonical edge-list text; `parse(serialize(g)) == g`.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.edges.len());
        let _ = writeln!(out, "p edge {} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }

    /// Graphviz rendering with red/blue fill colors.
    pub fn to_dot(&self, coloring: Option<&Coloring>) -> String {
        let mut out = String::from("graph G {\n  node [style=filled, fontcolor=white];\n");
        for v in self.vertices() {
            let fill = match coloring.and_then(|c| c.get(v)) {
                Some(Color::Red) => "red",
                Some(Color::Blue) => "blue",
                None => "gray",
            };
            let _ = writeln!(out, "  {} [fillcolor={fill}];", v + 1);
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
        }
        out.push_str("}\n");
        out
    }
}

fn parse_count(field: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let field = field.ok_or_else(|| format!("missing {what}"))?;
    field
        .parse::<usize>()
        .map_err(|_| format!("invalid {what} `{field}`"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    /// `+1` for red, `-1` for blue.
    pub fn sign(self) -> i64 {
        match self {
            Color::Red => 1,
            Color::Blue => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A total red/blue assignment indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring(colors)
    }

    pub fn uniform(n: usize, color: Color) -> Self {
        Coloring(vec![color; n])
    }

    /// Vertex `i` is red iff bit `i` of `mask` is set.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Coloring(
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Color::Red
                    } else {
                        Color::Blue
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.0.get(v).copied()
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.0
    }

    pub fn count(&self, color: Color) -> usize {
        self.0.iter().filter(|&&c| c == color).count()
    }

    pub fn complement(&self) -> Coloring {
        Coloring(self.0.iter().map(|c| c.flip()).collect())
    }

    pub fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                coloring: self.len(),
                graph: g.n(),
            })
        }
    }

    pub fn parse(text: &str) -> Result<Coloring> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (idx, line) = lines.next().unwrap_or((0, ""));
        if let Some((extra, _)) = lines.next() {
            return Err(Error::Parse {
                line: extra + 1,
                message: "coloring must be a single line".into(),
            });
        }
        let colors = line
            .trim_end()
            .chars()
            .enumerate()
            .map(|(col, ch)| {
                Color::from_char(ch).ok_or_else(|| Error::Parse {
                    line: idx + 1,
                    message: format!("column {}: expected R or B, found `{ch}`", col + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Coloring(colors))
    }

    pub fn serialize(&self) -> String {
        let mut s: String = self.0.iter().map(|c| c.as_char()).collect();
        s.push('\n');
        s
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            f.write_char(c.as_char())?;
        }
        Ok(())
    }
}

impl FromIterator<Color> for Coloring {
    fn from_iter<T: IntoIterator<Item = Color>>(iter: T) -> Self {
        Coloring(iter.into_iter().collect())
    }
}

impl std::ops::Index<usize> for Coloring {
    type Output = Color;

    fn index(&self, v: usize) -> &Color {
        &self.0[v]
    }
}

/// Flips every color.
pub fn complement_coloring(c: &Coloring) -> Coloring {
    c.complement()
}

/// Injective map from the vertices of a source graph into a target graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    pairs: Vec<(usize, usize)>,
}

impl VertexMap {
    /// Sources must be exactly `0..pairs.len()` (any order), targets distinct.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen_src = vec![false; pairs.len()];
        let mut targets: Vec<usize> = pairs.iter().map(|&(_, t)| t).collect();
        for &(s, _) in &pairs {
            if s >= pairs.len() || std::mem::replace(&mut seen_src[s], true) {
                return Err(Error::InvalidMap(format!(
                    "source vertex {s} is repeated or outside 0..{}",
                    pairs.len()
                )));
            }
        }
        targets.sort_unstable();
        if let Some(w) = targets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMap(format!(
                "target vertex {} is hit twice",
                w[0]
            )));
        }
        let mut pairs = pairs;
        pairs.sort_unstable();
        Ok(VertexMap { pairs })
    }

    pub fn from_targets(targets: Vec<usize>) -> Result<Self> {
        Self::new(targets.into_iter().enumerate().collect())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn image(&self, source: usize) -> Option<usize> {
        self.pairs.get(source).map(|&(_, t)| t)
    }

    /// Two-column table, 1-indexed.
    pub fn to_table(&self) -> String {
        let mut out = String::from("source target\n");
        for &(s, t) in &self.pairs {
            let _ = writeln!(out, "{} {}", s + 1, t + 1);
        }
        out
    }
}
