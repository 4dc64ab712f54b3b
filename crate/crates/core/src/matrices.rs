//! Dense symmetric graph matrices: adjacency, Laplacian, normalized
//! Laplacian. Storage is a full row-major square kept exactly symmetric;
//! at the desk-scale cap (n <= 4096) sparse formats buy nothing.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which symmetric matrix a spectrum or sweep refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    NormalizedLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] =
        [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian];

    /// CLI token: `adj`, `lap` or `nlap`.
    pub fn token(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adj",
            MatrixKind::Laplacian => "lap",
            MatrixKind::NormalizedLaplacian => "nlap",
        }
    }

    pub fn from_token(token: &str) -> Result<Self> {
        match token {
            "adj" => Ok(MatrixKind::Adjacency),
            "lap" => Ok(MatrixKind::Laplacian),
            "nlap" => Ok(MatrixKind::NormalizedLaplacian),
            other => Err(Error::domain(format!(
                "unknown matrix kind {other:?} (expected adj, lap or nlap)"
            ))),
        }
    }
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Dense symmetric real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    /// Max row sum of absolute values (infinity norm; equals the 1-norm
    /// here by symmetry).
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).abs()).sum())
            .fold(0.0f64, f64::max)
    }
}

/// A(i, j) = 1 iff `{i, j}` is an edge; zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for &(u, v) in g.edges() {
        m.set_sym(u, v, 1.0);
    }
    m
}

/// L = D - A: degrees on the diagonal, -1 per edge; every row sums to zero.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    let deg = g.degrees();
    for (i, &d) in deg.iter().enumerate() {
        m.set_sym(i, i, d as f64);
    }
    for &(u, v) in g.edges() {
        m.set_sym(u, v, -1.0);
    }
    m
}

/// Normalized Laplacian I - D^{-1/2} A D^{-1/2}: unit diagonal and
/// -1/sqrt(d_i d_j) per edge. Isolated vertices leave it undefined, which is
/// reported as a domain error rather than patched by convention.
pub fn normalized_laplacian(g: &Graph) -> Result<SymMatrix> {
    let deg = g.degrees();
    if let Some(v) = deg.iter().position(|&d| d == 0) {
        return Err(Error::domain(format!(
            "normalized Laplacian undefined: vertex {v} is isolated"
        )));
    }
    let mut m = SymMatrix::zeros(g.order());
    for i in 0..g.order() {
        m.set_sym(i, i, 1.0);
    }
    for &(u, v) in g.edges() {
        m.set_sym(u, v, -1.0 / ((deg[u] as f64) * (deg[v] as f64)).sqrt());
    }
    Ok(m)
}

/// Builds the matrix selected by `kind`.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> Result<SymMatrix> {
    match kind {
        MatrixKind::Adjacency => Ok(adjacency_matrix(g)),
        MatrixKind::Laplacian => Ok(laplacian(g)),
        MatrixKind::NormalizedLaplacian => normalized_laplacian(g),
    }
}
