//! Simple undirected graphs with optional vertex labels.

mod search;

use std::collections::VecDeque;
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perms::{Partition, Permutation};

pub use search::{
    are_isomorphic, automorphism_group, automorphism_group_with, AutOptions, MAX_VERTICES,
};

/// Tag tying a vertex back to the object it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexLabel {
    /// A group element, optionally on side 0 or 1 of a bi-Cayley graph.
    Element { elem: String, side: Option<u8> },
    /// `x_i^r` or `x_i^{r,s}` of a (multi-)cross ladder.
    Ladder { i: u32, r: u8, s: Option<u8> },
    /// `u_i` (outer) or `v_i` (inner) of a generalized Petersen graph.
    Petersen { outer: bool, i: u32 },
    /// `C_j^x` of the lexicographic product of a cycle with two points.
    Lex { j: u32, x: u8 },
    /// A cell of a quotient.
    Cell { members: Vec<u32> },
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Element {
                elem,
                side: Some(s),
            } => write!(f, "({elem})_{s}"),
            VertexLabel::Element { elem, side: None } => write!(f, "{elem}"),
            VertexLabel::Ladder { i, r, s: None } => write!(f, "x_{i}^{r}"),
            VertexLabel::Ladder { i, r, s: Some(s) } => write!(f, "x_{i}^{{{r},{s}}}"),
            VertexLabel::Petersen { outer: true, i } => write!(f, "u_{i}"),
            VertexLabel::Petersen { outer: false, i } => write!(f, "v_{i}"),
            VertexLabel::Lex { j, x } => write!(f, "C_{j}^{x}"),
            VertexLabel::Cell { members } => write!(f, "{members:?}"),
        }
    }
}

/// A simple undirected graph on `0..n`. Adjacency lists are sorted. Labels
/// ride along for reporting and are ignored by equality.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<VertexLabel>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Loops are rejected; repeated edges
    /// are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.adj.len() {
            return Err(Error::InvalidGraph(
                "label count differs from vertex count".into(),
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n as u32).map(|i| (i, (i + 1) % n as u32))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a as u32).flat_map(|u| (a as u32..(a + b) as u32).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("valid complete bipartite graph")
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, |l| l.len());
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, l)| {
            l.iter()
                .filter(move |&&v| v > u as u32)
                .map(move |&v| (u as u32, v))
        })
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: u32) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v as usize])
    }

    /// Vertex carrying `label`, if labels are present.
    pub fn vertex_with_label(&self, label: &VertexLabel) -> Option<u32> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == label)
            .map(|i| i as u32)
    }

    pub fn is_connected(&self) -> bool {
        self.n_vertices() == 0 || self.distances_from(0).iter().all(|d| d.is_some())
    }

    pub fn distances_from(&self, v: u32) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n_vertices()];
        dist[v as usize] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x as usize].expect("queued vertices have a distance");
            for &y in &self.adj[x as usize] {
                if dist[y as usize].is_none() {
                    dist[y as usize] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Vertices at distance exactly `i` from `v`.
    pub fn sphere(&self, v: u32, i: u32) -> Vec<u32> {
        self.distances_from(v)
            .iter()
            .enumerate()
            .filter(|(_, d)| **d == Some(i))
            .map(|(x, _)| x as u32)
            .collect()
    }

    /// Number of cycles of exactly `length` vertices containing every vertex
    /// of `required`. Each cycle is counted once regardless of starting point
    /// and direction.
    pub fn count_cycles_through(&self, required: &[u32], length: usize) -> u64 {
        if length < 3 || required.len() > length || self.n_vertices() == 0 {
            return 0;
        }
        let start = match required.iter().min() {
            Some(&s) => s,
            None => {
                return (0..self.n_vertices() as u32)
                    .map(|s| self.cycles_with_min_vertex(s, length))
                    .sum();
            }
        };
        let dist = self.distances_from(start);
        let mut on_path = vec![false; self.n_vertices()];
        let mut is_required = vec![false; self.n_vertices()];
        for &r in required {
            is_required[r as usize] = true;
        }
        let need = required
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        let mut path = vec![start];
        on_path[start as usize] = true;
        let mut count = 0;
        let mut walker = CycleWalk {
            g: self,
            dist: &dist,
            length,
            start,
            min_vertex: None,
        };
        walker.extend(&mut path, &mut on_path, &is_required, need, 1, &mut count);
        count
    }

    /// Cycles whose smallest vertex is `s`; used when nothing is required.
    fn cycles_with_min_vertex(&self, s: u32, length: usize) -> u64 {
        let dist = self.distances_from(s);
        let mut on_path = vec![false; self.n_vertices()];
        let is_required = vec![false; self.n_vertices()];
        let mut path = vec![s];
        on_path[s as usize] = true;
        let mut count = 0;
        let mut walker = CycleWalk {
            g: self,
            dist: &dist,
            length,
            start: s,
            min_vertex: Some(s),
        };
        walker.extend(&mut path, &mut on_path, &is_required, 0, 0, &mut count);
        count
    }

    /// Quotient by a partition: cells become vertices, two cells adjacent
    /// when some edge joins them. Edges inside a cell are dropped.
    pub fn quotient(&self, partition: &Partition) -> Result<Graph> {
        if partition.degree() != self.n_vertices() {
            return Err(Error::InvalidPartition(format!(
                "partition of {} points for a graph on {} vertices",
                partition.degree(),
                self.n_vertices()
            )));
        }
        let idx = partition.cell_index();
        let edges: Vec<(u32, u32)> = self
            .edges()
            .filter(|&(u, v)| idx[u as usize] != idx[v as usize])
            .map(|(u, v)| (idx[u as usize] as u32, idx[v as usize] as u32))
            .collect();
        let labels = partition
            .cells()
            .iter()
            .map(|c| VertexLabel::Cell { members: c.clone() })
            .collect();
        Graph::from_edges(partition.len(), edges)?.with_labels(labels)
    }

    /// Image of the graph under a vertex relabeling `v ↦ p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.degree() != self.n_vertices() {
            return Err(Error::InvalidPermutation(
                "degree differs from vertex count".into(),
            ));
        }
        Graph::from_edges(
            self.n_vertices(),
            self.edges().map(|(u, v)| (p.apply(u), p.apply(v))),
        )
    }

    /// True iff `p` maps every edge onto an edge.
    pub fn verify_automorphism(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.n_vertices() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of degree {} on a graph with {} vertices",
                p.degree(),
                self.n_vertices()
            )));
        }
        Ok(self
            .edges()
            .all(|(u, v)| self.has_edge(p.apply(u), p.apply(v))))
    }

    /// Reads the `p <n> <m>` / `e <u> <v>` edge-list format. Blank lines and
    /// lines starting with `c` or `#` are ignored.
    pub fn read_edge_list(reader: impl BufRead) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::Parse(e.to_string()))?;
            let mut parts = line.split_whitespace();
            let bad = || Error::Parse(format!("line {}: `{}`", lineno + 1, line.trim()));
            match parts.next() {
                None | Some("c") | Some("#") => continue,
                Some("p") => {
                    let n = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    let m = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    header = Some((n, m));
                }
                Some("e") => {
                    let u: u32 = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    let v: u32 = parts.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                    edges.push((u, v));
                }
                Some(_) => return Err(bad()),
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse("missing `p` header".into()))?;
        let g = Graph::from_edges(n, edges)?;
        if g.n_edges() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {}",
                g.n_edges()
            )));
        }
        Ok(g)
    }

    pub fn write_edge_list(&self, mut w: impl Write) -> std::io::Result<()> {
        writeln!(w, "p {} {}", self.n_vertices(), self.n_edges())?;
        for (u, v) in self.edges() {
            writeln!(w, "e {u} {v}")?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    /// JSON with `n`, `edges` and, when present, `labels`.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[u32; 2]> = self.edges().map(|(u, v)| [u, v]).collect();
        let mut obj = serde_json::json!({ "n": self.n_vertices(), "edges": edges });
        if let Some(labels) = &self.labels {
            obj["labels"] =
                serde_json::json!(labels.iter().map(|l| l.to_string()).collect::<Vec<_>>());
        }
        obj
    }
}

struct CycleWalk<'a> {
    g: &'a Graph,
    dist: &'a [Option<u32>],
    length: usize,
    start: u32,
    /// When set, every vertex of the cycle must be at least this.
    min_vertex: Option<u32>,
}

impl CycleWalk<'_> {
    fn extend(
        &mut self,
        path: &mut Vec<u32>,
        on_path: &mut [bool],
        is_required: &[bool],
        need: usize,
        have: usize,
        count: &mut u64,
    ) {
        let last = *path.last().expect("path starts at the root");
        if path.len() == self.length {
            // closing edge, with the second vertex below the last one so each
            // cycle is seen in only one direction
            if have == need && self.g.has_edge(last, self.start) && path[1] < last {
                *count += 1;
            }
            return;
        }
        let remaining = (self.length - path.len()) as u32;
        for &y in self.g.neighbors(last) {
            if on_path[y as usize] || self.min_vertex.is_some_and(|m| y < m) {
                continue;
            }
            // after stepping to y, `remaining - 1` more steps plus the closing edge
            match self.dist[y as usize] {
                Some(d) if d <= remaining => {}
                _ => continue,
            }
            let req = is_required[y as usize] as usize;
            if need - have - req > remaining as usize - 1 {
                continue;
            }
            on_path[y as usize] = true;
            path.push(y);
            self.extend(path, on_path, is_required, need, have + req, count);
            path.pop();
            on_path[y as usize] = false;
        }
    }
}

/// A vertex bijection claimed to be an isomorphism `from → to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    /// `map[v]` is the image of vertex `v` of the source graph.
    pub map: Vec<u32>,
    pub note: String,
}

impl IsoWitness {
    pub fn new(map: Vec<u32>, note: impl Into<String>) -> Self {
        IsoWitness {
            map,
            note: note.into(),
        }
    }

    /// Bijective, same edge counts, and every edge of `from` lands on an edge
    /// of `to`.
    pub fn validate(&self, from: &Graph, to: &Graph) -> bool {
        let n = from.n_vertices();
        if self.map.len() != n || to.n_vertices() != n || from.n_edges() != to.n_edges() {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in &self.map {
            if x as usize >= n || seen[x as usize] {
                return false;
            }
            seen[x as usize] = true;
        }
        from.edges()
            .all(|(u, v)| to.has_edge(self.map[u as usize], self.map[v as usize]))
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        IsoWitness {
            map: inv,
            note: format!("inverse of {}", self.note),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &IsoWitness) -> IsoWitness {
        IsoWitness {
            map: self.map.iter().map(|&x| next.map[x as usize]).collect(),
            note: format!("{} then {}", self.note, next.note),
        }
    }
}
