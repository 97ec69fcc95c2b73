//! Simple undirected graphs with canonical vertex and edge indexing.
//!
//! Vertices are `0..n` internally and `1..=n` in every text format. Edges are
//! stored as `(u, v)` with `u < v`, sorted lexicographically; the position in
//! that list is the edge index used by every vector over `V ⊎ E`.

mod chordal;
mod generate;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use chordal::{
    find_hole, format_set, is_chordal, is_clique, is_hole, maximal_cliques, maximal_cliques_any, mcs_order,
    validate_peo, Clique, Peo,
};
pub use generate::{gen_random_chordal, gen_random_graph};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds a graph from 0-based edge pairs. Duplicate pairs collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut matrix = vec![false; n * n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::NotAnEdge(format!("loop at vertex {}", u + 1)));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    fn from_matrix(n: usize, matrix: Vec<bool>) -> Self {
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect())
            .collect();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| adj[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Graph {
            n,
            adj,
            matrix,
            edges,
            edge_index,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_matrix(n, vec![false; n * n])
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of coordinates of a vector over `V ⊎ E`.
    pub fn dim(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_index.get(&key).copied()
    }

    /// Indices of the edges with both endpoints in `w` (`E(W)`).
    pub fn induced_edges(&self, w: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &a) in w.iter().enumerate() {
            for &b in &w[i + 1..] {
                if let Some(e) = self.edge_index(a, b) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_vertex_set(&self, w: &[usize]) -> Result<()> {
        match w.iter().find(|&&v| v >= self.n) {
            Some(&v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut matrix = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                matrix[u * n + v] = u != v && !self.matrix[u * n + v];
            }
        }
        Self::from_matrix(n, matrix)
    }

    /// `G[W]`. Vertex `i` of the result is `map[i]` in `self`; `map` is `W`
    /// sorted and deduplicated.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<(Graph, Vec<usize>)> {
        self.is_vertex_set(w)?;
        let mut map = w.to_vec();
        map.sort_unstable();
        map.dedup();
        let k = map.len();
        let mut matrix = vec![false; k * k];
        for i in 0..k {
            for j in 0..k {
                matrix[i * k + j] = self.adjacent(map[i], map[j]);
            }
        }
        Ok((Self::from_matrix(k, matrix), map))
    }

    /// `G / F`. Each connected component of `(V(F), F)` becomes one vertex.
    /// `map[v]` is the vertex of the result that `v` ends up in; result
    /// vertices are numbered by the smallest original vertex they contain.
    pub fn contract_edges(&self, f: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for &e in f {
            if e >= self.m() {
                return Err(Error::NotAnEdge(format!("edge index {e}")));
            }
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
                parent[hi] = lo;
            }
        }
        let roots: Vec<usize> = (0..self.n).map(|v| find(&mut parent, v)).collect();
        let mut relabel = vec![usize::MAX; self.n];
        let mut k = 0;
        for v in 0..self.n {
            if roots[v] == v {
                relabel[v] = k;
                k += 1;
            }
        }
        let map: Vec<usize> = roots.iter().map(|&r| relabel[r]).collect();
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (map[u], map[v]))
            .filter(|(a, b)| a != b);
        Ok((Graph::new(k, edges)?, map))
    }

    /// Edge indices for 0-based endpoint pairs.
    pub fn edge_indices(&self, pairs: &[(usize, usize)]) -> Result<Vec<usize>> {
        pairs
            .iter()
            .map(|&(u, v)| {
                self.edge_index(u, v)
                    .ok_or_else(|| Error::NotAnEdge(format!("{}-{}", u + 1, v + 1)))
            })
            .collect()
    }

    /// `C_G(W)`: vertices outside `W` adjacent to every vertex of `W`.
    /// For `W = ∅` every vertex qualifies.
    pub fn complete_to(&self, w: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|v| !w.contains(v) && w.iter().all(|&u| self.adjacent(u, *v)))
            .collect()
    }

    /// Connected components (sorted vertex sets) with a 2-colourability flag.
    pub fn components_bipartite(&self) -> Vec<(Vec<usize>, bool)> {
        let mut colour = vec![u8::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut comp = vec![s];
            let mut bipartite = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        comp.push(v);
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        bipartite = false;
                    }
                }
            }
            comp.sort_unstable();
            out.push((comp, bipartite));
        }
        out
    }

    /// Connected components of `G[W]` as sorted vertex sets.
    pub fn components_of(&self, w: &[usize]) -> Vec<Vec<usize>> {
        let (sub, map) = self.induced_subgraph(w).expect("vertex set of self");
        sub.components_bipartite()
            .into_iter()
            .map(|(c, _)| c.into_iter().map(|i| map[i]).collect())
            .collect()
    }

    /// Renders in the DIMACS-like text format.
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p edge {} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}

/// Parses the DIMACS-like format: `p edge <n> <m>` followed by `e <u> <v>`
/// lines (1-based). Blank lines and lines starting with `#` or `c` are
/// skipped. Duplicate edges collapse.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("c ") || line == "c" {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate header".into()));
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(err(format!("malformed header `{line}`")));
                }
                let n = tokens[2]
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{}`", tokens[2])))?;
                let m = tokens[3]
                    .parse()
                    .map_err(|_| err(format!("bad edge count `{}`", tokens[3])))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("edge before header".into()))?;
                if tokens.len() != 3 {
                    return Err(err(format!("malformed edge line `{line}`")));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&tokens[1..]) {
                    let id: usize = tok.parse().map_err(|_| err(format!("bad vertex id `{tok}`")))?;
                    if id == 0 || id > n {
                        return Err(err(format!("vertex {id} out of range 1..={n}")));
                    }
                    *slot = id - 1;
                }
                if ends[0] == ends[1] {
                    return Err(err(format!("loop at vertex {}", ends[0] + 1)));
                }
                edges.push((ends[0], ends[1]));
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `p edge` header".into(),
    })?;
    if edges.len() != m {
        log::warn!("header declares {m} edges, found {} edge lines", edges.len());
    }
    Graph::new(n, edges)
}
