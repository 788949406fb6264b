//! Simple undirected graphs, named families, random connected sampling and
//! the edge-list text format.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and free of duplicates, so two graphs
/// with the same edge set compare equal regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * (n - 1) / 2
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n() && is_connected(self)
    }
}

/// True iff a breadth-first search from vertex 0 reaches every vertex.
pub fn is_connected(g: &Graph) -> bool {
    first_unreached(g).is_none()
}

/// The smallest vertex not reachable from vertex 0, if any.
pub(crate) fn first_unreached(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::with_capacity(n);
    seen[0] = true;
    queue.push_back(0);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.iter().position(|&s| !s)
}

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    /// Center is vertex 0.
    Star,
    Complete,
    /// Parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path => write!(f, "path"),
            Family::Cycle => write!(f, "cycle"),
            Family::Star => write!(f, "star"),
            Family::Complete => write!(f, "complete"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a},{b}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `path`, `cycle`, `star`, `complete` and `bipartite:A,B`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            other => {
                let parts = other
                    .strip_prefix("bipartite:")
                    .or_else(|| other.strip_prefix("complete_bipartite:"))
                    .ok_or_else(|| Error::Config(format!("unknown family '{s}'")))?;
                let (a, b) = parts
                    .split_once(',')
                    .ok_or_else(|| Error::Config(format!("bipartite family needs 'A,B': '{s}'")))?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Config(format!("bad bipartite part size '{t}'")))
                };
                Ok(Family::CompleteBipartite(parse(a)?, parse(b)?))
            }
        }
    }
}

/// Canonical instance of `family` on `n` vertices.
pub fn generate_family(family: Family, n: usize) -> Result<Graph> {
    let invalid = || Error::InvalidFamilySize {
        family: family.to_string(),
        n,
    };
    match family {
        Family::Path => {
            if n < 1 {
                return Err(invalid());
            }
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle => {
            if n < 3 {
                return Err(invalid());
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Star => {
            if n < 1 {
                return Err(invalid());
            }
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        Family::Complete => {
            if n < 1 {
                return Err(invalid());
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 || a + b != n {
                return Err(invalid());
            }
            Graph::from_edges(n, (0..a).flat_map(|u| (a..n).map(move |v| (u, v))))
        }
    }
}

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into tree edges.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidGraph(format!(
            "Prüfer label {bad} out of range 0..{n}"
        )));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u, v));
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree on `n` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    match n {
        0 => Err(Error::InvalidGraph(
            "graph must have at least one vertex".into(),
        )),
        1 => Graph::empty(1),
        2 => Graph::from_edges(2, [(0, 1)]),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// Random connected graph: a uniform random spanning tree plus
/// `extra_edges` distinct non-tree edges chosen without replacement.
/// The same `(n, extra_edges, seed)` always yields the same graph.
pub fn generate_random_connected(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph(
            "graph must have at least one vertex".into(),
        ));
    }
    let available = n * (n - 1) / 2 - (n - 1);
    if extra_edges > available {
        return Err(Error::Precondition(format!(
            "{extra_edges} extra edges requested but only {available} non-tree pairs exist for n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(n, &mut rng)?;
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    let extra = candidates.choose_multiple(&mut rng, extra_edges).copied();
    Graph::from_edges(n, tree.edges().chain(extra))
}

/// Parses the edge-list format: the first token is the vertex count, then
/// one `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let mut header_tokens = header.split_whitespace();
    let n_token = header_tokens.next().unwrap_or("");
    let n: usize = n_token.parse().map_err(|_| Error::EdgeList {
        line: header_line,
        reason: format!("vertex count '{n_token}' is not a non-negative integer"),
    })?;
    if header_tokens.next().is_some() {
        return Err(Error::EdgeList {
            line: header_line,
            reason: "expected only the vertex count on the first line".into(),
        });
    }
    if n == 0 {
        return Err(Error::EdgeList {
            line: header_line,
            reason: "vertex count must be at least 1".into(),
        });
    }

    let mut edges = Vec::new();
    for (line, body) in lines {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::EdgeList {
                line,
                reason: format!("expected 'u v', found {} tokens", tokens.len()),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| Error::EdgeList {
                line,
                reason: format!("'{tok}' is not a non-negative integer"),
            })?;
            if *slot >= n {
                return Err(Error::EdgeList {
                    line,
                    reason: format!("vertex {slot} out of range 0..{n}"),
                });
            }
        }
        if ends[0] == ends[1] {
            return Err(Error::EdgeList {
                line,
                reason: format!("self-loop at vertex {}", ends[0]),
            });
        }
        edges.push((ends[0], ends[1]));
    }
    Graph::from_edges(n, edges)
}

/// Writes `g` in the edge-list format accepted by [`parse_edge_list`].
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
