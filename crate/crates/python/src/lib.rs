//! Python bindings: `import qnbc`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qnbc_core::constructions;
use qnbc_core::families;
use qnbc_core::products::{self, JoinMode, LexMode, ProductKind};
use qnbc_core::solver::{self, SolveOptions, VariantMode, Verdict};
use qnbc_core::theorems::{self, VerifyConfig};
use qnbc_core::{checker, Color};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "qnbc", frozen)]
struct PyGraph(qnbc_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        qnbc_core::Graph::new(n, edges).map(Self).map_err(err)
    }

    /// Parse the `p edge n m` / `e u v` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        qnbc_core::Graph::parse(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Self(qnbc_core::Graph::complete(n))
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Self(qnbc_core::Graph::path(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        qnbc_core::Graph::cycle(n).map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.n() {
            return Err(err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.neighbors(v).map(|nb| nb.len())
    }

    fn serialize(&self) -> String {
        self.0.serialize()
    }

    #[pyo3(signature = (coloring=None))]
    fn to_dot(&self, coloring: Option<PyRef<'_, PyColoring>>) -> String {
        self.0.to_dot(coloring.as_deref().map(|c| &c.0))
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __eq__(&self, other: PyRef<'_, PyGraph>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.edge_count())
    }
}

/// Red/blue vertex coloring, written as a string of `R` and `B`.
#[pyclass(name = "Coloring", module = "qnbc", frozen)]
struct PyColoring(qnbc_core::Coloring);

#[pymethods]
impl PyColoring {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        qnbc_core::Coloring::parse(text).map(Self).map_err(err)
    }

    /// Bit `i` of `mask` set means vertex `i` is red.
    #[staticmethod]
    fn from_mask(n: usize, mask: u64) -> Self {
        Self(qnbc_core::Coloring::from_mask(n, mask))
    }

    fn complement(&self) -> Self {
        Self(self.0.complement())
    }

    #[getter]
    fn red(&self) -> usize {
        self.0.count(Color::Red)
    }

    #[getter]
    fn blue(&self) -> usize {
        self.0.count(Color::Blue)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __eq__(&self, other: PyRef<'_, PyColoring>) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Coloring('{}')", self.0)
    }
}

/// Result of [`classify`].
#[pyclass(name = "Classification", module = "qnbc", frozen, get_all)]
struct PyClassification {
    /// `"invalid"`, `"NBC"` or `"QNBC"`.
    kind: String,
    positive: bool,
    negative: bool,
    /// `"red"`, `"blue"` or `None`.
    uniform: Option<String>,
}

#[pymethods]
impl PyClassification {
    #[getter]
    fn is_qnbc(&self) -> bool {
        self.kind == "QNBC"
    }

    fn __repr__(&self) -> String {
        format!(
            "Classification(kind={:?}, positive={}, negative={}, uniform={:?})",
            self.kind, self.positive, self.negative, self.uniform
        )
    }
}

impl From<checker::Classification> for PyClassification {
    fn from(c: checker::Classification) -> Self {
        Self {
            kind: c.kind.to_string(),
            positive: c.positive,
            negative: c.negative,
            uniform: c.uniform_dominant.map(|d| d.to_string()),
        }
    }
}

#[pyfunction]
fn classify(g: PyRef<'_, PyGraph>, c: PyRef<'_, PyColoring>) -> PyResult<PyClassification> {
    checker::classify(&g.0, &c.0).map(Into::into).map_err(err)
}

#[pyfunction]
fn imbalances(g: PyRef<'_, PyGraph>, c: PyRef<'_, PyColoring>) -> PyResult<Vec<i64>> {
    checker::imbalances(&g.0, &c.0).map_err(err)
}

/// Returns `(verdict, witness, nodes, reason)`; verdict is `"sat"`,
/// `"unsat"` or `"unknown"`.
#[pyfunction]
#[pyo3(signature = (g, variant="any", budget=None))]
fn solve(
    g: PyRef<'_, PyGraph>,
    variant: &str,
    budget: Option<u64>,
) -> PyResult<(&'static str, Option<PyColoring>, u64, Option<String>)> {
    let mode: VariantMode = variant.parse().map_err(err)?;
    let out = solver::solve_with(&g.0, mode, &SolveOptions { budget });
    let verdict = match out.verdict {
        Verdict::Satisfiable => "sat",
        Verdict::Unsatisfiable => "unsat",
        Verdict::Unknown => "unknown",
    };
    Ok((
        verdict,
        out.witness.map(PyColoring),
        out.nodes_explored,
        out.prefilter.map(|p| p.to_string()),
    ))
}

#[pyfunction]
#[pyo3(signature = (g, variant="any", limit=100))]
fn enumerate(g: PyRef<'_, PyGraph>, variant: &str, limit: usize) -> PyResult<Vec<PyColoring>> {
    let mode: VariantMode = variant.parse().map_err(err)?;
    Ok(solver::enumerate(&g.0, mode, limit)
        .into_iter()
        .map(PyColoring)
        .collect())
}

/// `family(name, *params)` for `complete`, `kmn`, `star`, `path`, `gp`,
/// `bistar`. Returns `(graph, coloring or None, claim)`.
#[pyfunction]
#[pyo3(signature = (name, *params))]
fn family(name: &str, params: Vec<usize>) -> PyResult<(PyGraph, Option<PyColoring>, String)> {
    let arg = |i: usize| {
        params
            .get(i)
            .copied()
            .ok_or_else(|| err(format!("{name} needs {} parameter(s)", i + 1)))
    };
    let fr = match name {
        "complete" => families::complete(arg(0)?),
        "kmn" => families::complete_bipartite(arg(0)?, arg(1)?),
        "star" => families::star(arg(0)?),
        "path" => families::path(arg(0)?),
        "gp" => families::generalized_petersen(arg(0)?, arg(1)?),
        "bistar" => families::bistar(arg(0)?, arg(1)?),
        other => return Err(err(format!("unknown family `{other}`"))),
    }
    .map_err(err)?;
    Ok((
        PyGraph(fr.graph),
        fr.coloring.map(PyColoring),
        fr.claim.to_string(),
    ))
}

#[pyfunction]
fn product(kind: &str, g: PyRef<'_, PyGraph>, h: PyRef<'_, PyGraph>) -> PyResult<PyGraph> {
    let kind: ProductKind = kind.parse().map_err(err)?;
    products::product_graph(kind, &g.0, &h.0)
        .map(PyGraph)
        .map_err(err)
}

/// Lift colorings onto a product. `mode` is `i`/`ii` for `lex`,
/// `a`/`b`/`c`/`positive`/`negative`/`uniform` for `join`, ignored otherwise.
/// Returns `(graph, coloring, promise)`.
#[pyfunction]
#[pyo3(signature = (kind, g, g_col, h, h_col, mode=None))]
fn lift(
    kind: &str,
    g: PyRef<'_, PyGraph>,
    g_col: Option<PyRef<'_, PyColoring>>,
    h: PyRef<'_, PyGraph>,
    h_col: PyRef<'_, PyColoring>,
    mode: Option<&str>,
) -> PyResult<(PyGraph, PyColoring, String)> {
    let kind: ProductKind = kind.parse().map_err(err)?;
    let gc = g_col.as_deref().map(|c| &c.0);
    let need_g = || gc.ok_or_else(|| err("g_col is required for this product"));
    let need_mode = || mode.ok_or_else(|| err("mode is required for this product"));
    let lifted = match kind {
        ProductKind::Lexicographic => {
            let m: LexMode = need_mode()?.parse().map_err(err)?;
            products::lift_lexicographic(&g.0, gc, &h.0, &h_col.0, m)
        }
        ProductKind::Join => {
            let m: JoinMode = need_mode()?.parse().map_err(err)?;
            products::lift_join(&g.0, need_g()?, &h.0, &h_col.0, m)
        }
        ProductKind::Direct => products::lift_direct(&g.0, need_g()?, &h.0, &h_col.0),
        ProductKind::Cartesian => products::lift_cartesian(&g.0, need_g()?, &h.0, &h_col.0),
        ProductKind::Strong => products::lift_strong(&g.0, need_g()?, &h.0, &h_col.0),
    }
    .map_err(err)?;
    Ok((
        PyGraph(lifted.graph),
        PyColoring(lifted.coloring),
        lifted.promise.to_string(),
    ))
}

/// Returns `(host, host_coloring, [(source, target), ...])`.
#[pyfunction]
fn embed(g: PyRef<'_, PyGraph>) -> PyResult<(PyGraph, PyColoring, Vec<(usize, usize)>)> {
    let e = constructions::heredity_embed(&g.0).map_err(err)?;
    Ok((
        PyGraph(e.host),
        PyColoring(e.host_coloring),
        e.embedding.pairs().to_vec(),
    ))
}

/// NBC-to-QNBC gadget. Returns `(graph, coloring, added_vertex, anchor_edge)`.
#[pyfunction]
#[pyo3(signature = (g, c, edge=None))]
fn gadget(
    g: PyRef<'_, PyGraph>,
    c: PyRef<'_, PyColoring>,
    edge: Option<(usize, usize)>,
) -> PyResult<(PyGraph, PyColoring, usize, (usize, usize))> {
    let r = constructions::nbc_to_qnbc_gadget(&g.0, &c.0, edge).map_err(err)?;
    Ok((
        PyGraph(r.gprime),
        PyColoring(r.gprime_coloring),
        r.added_vertex,
        r.anchor_edge,
    ))
}

/// Run every theorem check. Returns `(all_passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (seed=None))]
fn verify(py: Python<'_>, seed: Option<u64>) -> (bool, String) {
    let cfg = VerifyConfig {
        seed: seed.unwrap_or(theorems::DEFAULT_SEED),
        ..Default::default()
    };
    let report = py.detach(|| theorems::verify(&cfg));
    (report.passed(), report.render())
}

#[pymodule]
fn qnbc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyColoring>()?;
    m.add_class::<PyClassification>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(imbalances, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(lift, m)?)?;
    m.add_function(wrap_pyfunction!(embed, m)?)?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
