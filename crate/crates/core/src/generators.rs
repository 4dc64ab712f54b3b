//! Seeded random-graph models (Erdos-Renyi, Chung-Lu, Watts-Strogatz,
//! Barabasi-Albert) and the deterministic graph classes, all driven by a
//! fully specified PRNG so a (spec, seed) pair maps to the same graph on
//! every platform and in every language binding.
//!
//! Traversal orders are pinned: vertex pairs are visited lexicographically
//! with one draw each, Watts-Strogatz rewires vertices in ascending order
//! and clockwise offsets in increasing order, and Barabasi-Albert arrivals
//! attach through sequential degree-proportional draws with duplicate
//! rejection (degrees frozen during one arrival round).

use std::collections::BTreeSet;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Seed for the graph generators. The same `(GeneratorSpec, RngSeed)` pair
/// always produces the same graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngSeed(pub u64);

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed(seed)
    }
}

/// xorshift64* generator.
///
/// State update per draw (all arithmetic mod 2^64):
/// `s ^= s >> 12; s ^= s << 25; s ^= s >> 27; output = s * 0x2545F4914F6CDD1D`.
/// The state is initialized by one splitmix64 round of the seed:
/// `z = seed + 0x9E3779B97F4A7C15;
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB; state = z ^ (z >> 31)`,
/// substituting the constant 0x9E3779B97F4A7C15 if that yields zero.
///
/// Floats: `next_f64 = (next_u64 >> 11) * 2^-53`, uniform on [0, 1).
/// Bounded integers: `next_index(n) = (next_u64 * n) >> 64` in 128-bit
/// arithmetic.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn from_seed(seed: RngSeed) -> Self {
        let mut z = seed.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        if z == 0 {
            z = 0x9E37_79B9_7F4A_7C15;
        }
        Rng { state: z }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state ^= self.state >> 12;
        self.state ^= self.state << 25;
        self.state ^= self.state >> 27;
        self.state.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform on [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on 0..bound (bound > 0).
    pub fn next_index(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

/// Tagged description of a graph source: a random model with parameters or
/// a deterministic class.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    ErdosRenyi { n: usize, p: f64 },
    ChungLu { weights: Vec<f64> },
    WattsStrogatz { n: usize, k: usize, beta: f64 },
    BarabasiAlbert { n: usize, m0: usize, m: usize },
    Empty { n: usize },
    Complete { n: usize },
    CompleteBipartite { n1: usize, n2: usize },
    Star { n1: usize },
    Cycle { n: usize },
}

impl GeneratorSpec {
    fn validate(&self) -> Result<()> {
        match self {
            GeneratorSpec::ErdosRenyi { p, .. } => {
                if !(*p >= 0.0 && *p <= 1.0) {
                    return Err(Error::domain(format!("Erdos-Renyi p = {p} outside [0, 1]")));
                }
            }
            GeneratorSpec::ChungLu { weights } => {
                if weights.iter().any(|w| !(*w > 0.0) || !w.is_finite()) {
                    return Err(Error::domain("Chung-Lu weights must be positive and finite"));
                }
                if weights.len() >= 2 {
                    let total: f64 = weights.iter().sum();
                    let mut sorted = weights.clone();
                    sorted.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
                    if sorted[0] * sorted[1] / total > 1.0 {
                        return Err(Error::domain(
                            "Chung-Lu pair probability above 1; the model is undefined",
                        ));
                    }
                }
            }
            GeneratorSpec::WattsStrogatz { n, k, beta } => {
                if *k < 2 || *k % 2 != 0 {
                    return Err(Error::domain(format!("Watts-Strogatz K = {k} must be even >= 2")));
                }
                if *n <= *k {
                    return Err(Error::domain(format!(
                        "Watts-Strogatz needs n > K (got n = {n}, K = {k})"
                    )));
                }
                if !(*beta >= 0.0 && *beta <= 1.0) {
                    return Err(Error::domain(format!("Watts-Strogatz beta = {beta} outside [0, 1]")));
                }
            }
            GeneratorSpec::BarabasiAlbert { n, m0, m } => {
                if *m0 < 1 {
                    return Err(Error::domain("Barabasi-Albert m0 must be >= 1"));
                }
                if *m < 1 || *m > *m0 {
                    return Err(Error::domain(format!(
                        "Barabasi-Albert m = {m} must satisfy 1 <= m <= m0 = {m0}"
                    )));
                }
                if *n < *m0 {
                    return Err(Error::domain(format!(
                        "Barabasi-Albert n = {n} smaller than the m0 = {m0} seed clique"
                    )));
                }
            }
            GeneratorSpec::Cycle { n } => {
                if *n < 3 {
                    return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
                }
            }
            GeneratorSpec::Star { n1 } => {
                if *n1 < 1 {
                    return Err(Error::domain("star needs at least one leaf"));
                }
            }
            GeneratorSpec::CompleteBipartite { n1, n2 } => {
                if *n1 < 1 || *n2 < 1 {
                    return Err(Error::domain("complete bipartite parts must be non-empty"));
                }
            }
            GeneratorSpec::Empty { .. } | GeneratorSpec::Complete { .. } => {}
        }
        Ok(())
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            GeneratorSpec::ErdosRenyi { n, .. }
            | GeneratorSpec::WattsStrogatz { n, .. }
            | GeneratorSpec::BarabasiAlbert { n, .. }
            | GeneratorSpec::Empty { n }
            | GeneratorSpec::Complete { n }
            | GeneratorSpec::Cycle { n } => *n,
            GeneratorSpec::ChungLu { weights } => weights.len(),
            GeneratorSpec::CompleteBipartite { n1, n2 } => n1 + n2,
            GeneratorSpec::Star { n1 } => n1 + 1,
        }
    }
}

/// Draws a graph from `spec` with the explicit PRNG seeded by `seed`.
pub fn generate(spec: &GeneratorSpec, seed: RngSeed) -> Result<Graph> {
    spec.validate()?;
    let mut rng = Rng::from_seed(seed);
    match spec {
        GeneratorSpec::ErdosRenyi { n, p } => {
            let mut pairs = Vec::new();
            for i in 0..*n {
                for j in (i + 1)..*n {
                    if rng.next_f64() < *p {
                        pairs.push((i, j));
                    }
                }
            }
            Graph::from_edge_list(&pairs, Some(*n))
        }
        GeneratorSpec::ChungLu { weights } => {
            let n = weights.len();
            let total: f64 = weights.iter().sum();
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.next_f64() < weights[i] * weights[j] / total {
                        pairs.push((i, j));
                    }
                }
            }
            Graph::from_edge_list(&pairs, Some(n))
        }
        GeneratorSpec::WattsStrogatz { n, k, beta } => watts_strogatz(*n, *k, *beta, &mut rng),
        GeneratorSpec::BarabasiAlbert { n, m0, m } => barabasi_albert(*n, *m0, *m, &mut rng),
        GeneratorSpec::Empty { n } => Ok(Graph::empty(*n)),
        GeneratorSpec::Complete { n } => {
            let mut pairs = Vec::new();
            for i in 0..*n {
                for j in (i + 1)..*n {
                    pairs.push((i, j));
                }
            }
            Graph::from_edge_list(&pairs, Some(*n))
        }
        GeneratorSpec::CompleteBipartite { n1, n2 } => {
            let mut pairs = Vec::new();
            for i in 0..*n1 {
                for j in 0..*n2 {
                    pairs.push((i, n1 + j));
                }
            }
            Graph::from_edge_list(&pairs, Some(n1 + n2))
        }
        GeneratorSpec::Star { n1 } => {
            let pairs: Vec<(usize, usize)> = (1..=*n1).map(|leaf| (0, leaf)).collect();
            Graph::from_edge_list(&pairs, Some(n1 + 1))
        }
        GeneratorSpec::Cycle { n } => {
            let pairs: Vec<(usize, usize)> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(&pairs, Some(*n))
        }
    }
}

fn watts_strogatz(n: usize, k: usize, beta: f64, rng: &mut Rng) -> Result<Graph> {
    let mut neighbors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for v in 0..n {
        for offset in 1..=(k / 2) {
            let w = (v + offset) % n;
            neighbors[v].insert(w);
            neighbors[w].insert(v);
        }
    }
    for v in 0..n {
        for offset in 1..=(k / 2) {
            let old = (v + offset) % n;
            if rng.next_f64() >= beta {
                continue;
            }
            if neighbors[v].len() == n - 1 {
                continue; // adjacent to everyone; nothing to rewire to
            }
            let new = loop {
                let cand = rng.next_index(n);
                if cand != v && !neighbors[v].contains(&cand) {
                    break cand;
                }
            };
            neighbors[v].remove(&old);
            neighbors[old].remove(&v);
            neighbors[v].insert(new);
            neighbors[new].insert(v);
        }
    }
    let mut pairs = Vec::new();
    for (v, adj) in neighbors.iter().enumerate() {
        for &w in adj.range(v + 1..) {
            pairs.push((v, w));
        }
    }
    Graph::from_edge_list(&pairs, Some(n))
}

fn barabasi_albert(n: usize, m0: usize, m: usize, rng: &mut Rng) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    // one endpoint entry per unit of degree
    let mut endpoints: Vec<usize> = Vec::new();
    for i in 0..m0 {
        for j in (i + 1)..m0 {
            pairs.push((i, j));
            endpoints.push(i);
            endpoints.push(j);
        }
    }
    for v in m0..n {
        let mut targets: BTreeSet<usize> = BTreeSet::new();
        while targets.len() < m {
            let t = if endpoints.is_empty() {
                // all-zero degrees (m0 = 1 start): fall back to a uniform pick
                rng.next_index(v)
            } else {
                endpoints[rng.next_index(endpoints.len())]
            };
            targets.insert(t);
        }
        for &t in &targets {
            pairs.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Graph::from_edge_list(&pairs, Some(n))
}

/// Erdos-Renyi spec matched to a concrete graph: same order, p = 2m / n^2.
pub fn matched_er_spec(g: &Graph) -> GeneratorSpec {
    let n = g.order();
    let p = if n == 0 {
        0.0
    } else {
        2.0 * g.edge_count() as f64 / (n as f64 * n as f64)
    };
    GeneratorSpec::ErdosRenyi { n, p }
}

/// The connectivity-threshold scaling p = p0 log(n) / n.
pub fn er_threshold_p(n: usize, p0: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("er_threshold_p needs n >= 2, got {n}")));
    }
    if !(p0 > 0.0) || !p0.is_finite() {
        return Err(Error::domain(format!("er_threshold_p needs p0 > 0, got {p0}")));
    }
    let p = p0 * (n as f64).ln() / n as f64;
    if p > 1.0 {
        return Err(Error::domain(format!(
            "p0 log(n)/n = {p} exceeds 1 for n = {n}, p0 = {p0}"
        )));
    }
    Ok(p)
}

/// Canonical textual form, e.g. `er:n=1200,p0=10.5`, `ws:n=1200,K=4,beta=0.6`,
/// `ba:n=1200,m0=4,m=4`, `cycle:n=64`, `cl:weights=1;2;3` (or `cl:n=100,w=10`
/// for constant weights).
impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (tag, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("generator spec {text:?} missing ':'")))?;
        let mut fields = std::collections::BTreeMap::new();
        if !rest.is_empty() {
            for part in rest.split(',') {
                let (key, value) = part.split_once('=').ok_or_else(|| {
                    Error::domain(format!("malformed generator parameter {part:?}"))
                })?;
                fields.insert(key.trim().to_string(), value.trim().to_string());
            }
        }
        let take_usize = |fields: &std::collections::BTreeMap<String, String>, key: &str| {
            fields
                .get(key)
                .ok_or_else(|| Error::domain(format!("generator spec missing {key:?}")))?
                .parse::<usize>()
                .map_err(|_| Error::domain(format!("parameter {key:?} is not an integer")))
        };
        let take_f64 = |fields: &std::collections::BTreeMap<String, String>, key: &str| {
            fields
                .get(key)
                .ok_or_else(|| Error::domain(format!("generator spec missing {key:?}")))?
                .parse::<f64>()
                .map_err(|_| Error::domain(format!("parameter {key:?} is not a number")))
        };
        let spec = match tag {
            "er" => {
                let n = take_usize(&fields, "n")?;
                let p = if fields.contains_key("p") {
                    take_f64(&fields, "p")?
                } else if fields.contains_key("p0") {
                    er_threshold_p(n, take_f64(&fields, "p0")?)?
                } else {
                    return Err(Error::domain("er spec needs p=... or p0=..."));
                };
                GeneratorSpec::ErdosRenyi { n, p }
            }
            "cl" | "chunglu" => {
                if let Some(raw) = fields.get("weights") {
                    let weights = raw
                        .split(';')
                        .map(|tok| {
                            tok.trim().parse::<f64>().map_err(|_| {
                                Error::domain(format!("Chung-Lu weight {tok:?} is not a number"))
                            })
                        })
                        .collect::<Result<Vec<f64>>>()?;
                    GeneratorSpec::ChungLu { weights }
                } else {
                    let n = take_usize(&fields, "n")?;
                    let w = take_f64(&fields, "w")?;
                    GeneratorSpec::ChungLu { weights: vec![w; n] }
                }
            }
            "ws" => GeneratorSpec::WattsStrogatz {
                n: take_usize(&fields, "n")?,
                k: take_usize(&fields, "K").or_else(|_| take_usize(&fields, "k"))?,
                beta: take_f64(&fields, "beta")?,
            },
            "ba" => GeneratorSpec::BarabasiAlbert {
                n: take_usize(&fields, "n")?,
                m0: take_usize(&fields, "m0")?,
                m: take_usize(&fields, "m")?,
            },
            "empty" => GeneratorSpec::Empty { n: take_usize(&fields, "n")? },
            "complete" => GeneratorSpec::Complete { n: take_usize(&fields, "n")? },
            "bipartite" => GeneratorSpec::CompleteBipartite {
                n1: take_usize(&fields, "n1")?,
                n2: take_usize(&fields, "n2")?,
            },
            "star" => GeneratorSpec::Star { n1: take_usize(&fields, "n1")? },
            "cycle" => GeneratorSpec::Cycle { n: take_usize(&fields, "n")? },
            other => return Err(Error::domain(format!("unknown generator tag {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
