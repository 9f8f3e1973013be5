//! Graph ingestion, canonicalization, degree ordering and orientation.
//!
//! The [`Graph`] type is an immutable undirected simple graph in CSR form with
//! sorted neighbor lists, per-edge ids and O(1) expected edge membership.
//! [`OrientedGraph`] is the DAG obtained by orienting every edge from the
//! endpoint that is smaller under the degree ordering (degree, then vertex id)
//! to the larger one.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, BufRead, Read, Write};

/// Edge list as parsed from text, before any cleanup.
#[derive(Debug, Clone, Default)]
pub struct RawEdgeList {
    pub edges: Vec<(u64, u64)>,
}

/// Errors from reading an edge-list stream.
#[derive(Debug)]
pub enum ParseError {
    Io(io::Error),
    /// A token that is not a non-negative integer, with the 1-based line number.
    MalformedToken { line: usize, token: String },
    /// A negative vertex id, with the 1-based line number.
    NegativeId { line: usize, token: String },
    /// A non-comment line that does not hold exactly two tokens.
    WrongTokenCount { line: usize, count: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Io(e) => write!(f, "i/o error: {e}"),
            ParseError::MalformedToken { line, token } => {
                write!(f, "line {line}: malformed token {token:?}")
            }
            ParseError::NegativeId { line, token } => {
                write!(f, "line {line}: negative vertex id {token:?}")
            }
            ParseError::WrongTokenCount { line, count } => {
                write!(f, "line {line}: expected 2 vertex ids, found {count}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

impl From<io::Error> for ParseError {
    fn from(e: io::Error) -> Self {
        ParseError::Io(e)
    }
}

/// Parses whitespace-separated integer pairs, one edge per line.
/// Lines starting with '#' or '%' are comments; blank lines are skipped.
/// Duplicates, self loops and reversed copies are kept for [`build_graph`].
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<RawEdgeList, ParseError> {
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut ids = [0u64; 2];
        let mut count = 0;
        for tok in trimmed.split_whitespace() {
            if count < 2 {
                ids[count] = parse_id(tok, lineno)?;
            }
            count += 1;
        }
        if count != 2 {
            return Err(ParseError::WrongTokenCount { line: lineno, count });
        }
        edges.push((ids[0], ids[1]));
    }
    Ok(RawEdgeList { edges })
}

fn parse_id(tok: &str, line: usize) -> Result<u64, ParseError> {
    match tok.parse::<u64>() {
        Ok(v) => Ok(v),
        Err(_) => {
            if tok.starts_with('-') && tok[1..].bytes().all(|b| b.is_ascii_digit()) && tok.len() > 1
            {
                Err(ParseError::NegativeId {
                    line,
                    token: tok.to_string(),
                })
            } else {
                Err(ParseError::MalformedToken {
                    line,
                    token: tok.to_string(),
                })
            }
        }
    }
}

/// Immutable undirected simple graph.
///
/// Vertices are `0..n`. Edges carry ids `0..m` given by the position of the
/// canonical `(min, max)` pair in lexicographic order, so two builds of the
/// same graph agree bit for bit.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    /// CSR offsets, length n + 1.
    offsets: Vec<usize>,
    /// Concatenated sorted neighbor lists, length 2m.
    nbrs: Vec<u32>,
    /// Undirected edge id per adjacency slot, parallel to `nbrs`.
    eids: Vec<u32>,
    /// Canonical (min, max) edge list; index = edge id.
    edges: Vec<(u32, u32)>,
    /// Packed (min << 32 | max) -> edge id.
    index: HashMap<u64, u32>,
}

#[inline]
fn pack(u: u32, v: u32) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    ((a as u64) << 32) | b as u64
}

/// Removes self loops, collapses duplicate and reversed edges, and keeps every
/// id up to the largest one seen, so isolated ids inside the range stay as
/// degree-0 vertices and output rows line up with input ids.
pub fn build_graph(raw: &RawEdgeList) -> Graph {
    let mut max_id = 0u64;
    for &(u, v) in &raw.edges {
        max_id = max_id.max(u).max(v);
    }
    assert!(
        raw.edges.is_empty() || max_id < u32::MAX as u64,
        "vertex ids must fit in u32"
    );
    let n = if raw.edges.is_empty() {
        0
    } else {
        max_id as usize + 1
    };
    let mut canon: Vec<(u32, u32)> = raw
        .edges
        .iter()
        .filter(|&&(u, v)| u != v)
        .map(|&(u, v)| {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            (a as u32, b as u32)
        })
        .collect();
    canon.sort_unstable();
    canon.dedup();
    Graph::from_canonical_edges(n, canon)
}

impl Graph {
    /// Builds from an explicit vertex count and a set of edges (tests and
    /// generators). Self loops and duplicates are dropped.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Graph {
        let mut canon: Vec<(u32, u32)> = edges
            .iter()
            .filter(|&&(u, v)| u != v)
            .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        canon.sort_unstable();
        canon.dedup();
        if let Some(&(_, b)) = canon.last() {
            assert!((b as usize) < n, "edge endpoint out of range");
        }
        Graph::from_canonical_edges(n, canon)
    }

    fn from_canonical_edges(n: usize, canon: Vec<(u32, u32)>) -> Graph {
        let m = canon.len();
        let mut deg = vec![0usize; n];
        for &(u, v) in &canon {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut nbrs = vec![0u32; 2 * m];
        let mut eids = vec![0u32; 2 * m];
        let mut cursor = offsets.clone();
        let mut index = HashMap::with_capacity(m);
        for (id, &(u, v)) in canon.iter().enumerate() {
            let id = id as u32;
            nbrs[cursor[u as usize]] = v;
            eids[cursor[u as usize]] = id;
            cursor[u as usize] += 1;
            nbrs[cursor[v as usize]] = u;
            eids[cursor[v as usize]] = id;
            cursor[v as usize] += 1;
            index.insert(pack(u, v), id);
        }
        // Canonical edges are sorted, so every neighbor list comes out sorted.
        Graph {
            n,
            offsets,
            nbrs,
            eids,
            edges: canon,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.nbrs[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Neighbor list of `v` zipped with undirected edge ids.
    #[inline]
    pub fn neighbor_edges(&self, v: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        let r = self.offsets[v as usize]..self.offsets[v as usize + 1];
        self.nbrs[r.clone()]
            .iter()
            .copied()
            .zip(self.eids[r].iter().copied())
    }

    /// O(1) expected membership test. Panics on out-of-range ids.
    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        assert!((u as usize) < self.n && (v as usize) < self.n, "vertex out of range");
        u != v && self.index.contains_key(&pack(u, v))
    }

    #[inline]
    pub fn edge_id(&self, u: u32, v: u32) -> Option<u32> {
        if u == v {
            return None;
        }
        self.index.get(&pack(u, v)).copied()
    }

    /// Canonical (min, max) edge list; position = edge id.
    pub fn canonical_edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Writes the binary cache: magic, n, m, degree array, concatenated
    /// adjacency, all little-endian u64.
    pub fn write_cache<W: Write>(&self, w: &mut W) -> io::Result<()> {
        w.write_all(CACHE_MAGIC)?;
        w.write_all(&(self.n as u64).to_le_bytes())?;
        w.write_all(&(self.m() as u64).to_le_bytes())?;
        for v in 0..self.n {
            w.write_all(&(self.degree(v as u32) as u64).to_le_bytes())?;
        }
        for &x in &self.nbrs {
            w.write_all(&(x as u64).to_le_bytes())?;
        }
        Ok(())
    }

    /// Reads a graph previously written by [`Graph::write_cache`].
    pub fn read_cache<R: Read>(r: &mut R) -> io::Result<Graph> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if magic != *CACHE_MAGIC {
            return Err(io::Error::new(io::ErrorKind::InvalidData, "bad cache magic"));
        }
        let n = read_u64(r)? as usize;
        let m = read_u64(r)? as usize;
        let mut deg = Vec::with_capacity(n);
        for _ in 0..n {
            deg.push(read_u64(r)? as usize);
        }
        let total: usize = deg.iter().sum();
        if total != 2 * m {
            return Err(io::Error::new(io::ErrorKind::InvalidData, "degree sum mismatch"));
        }
        let mut edges = Vec::with_capacity(m);
        let mut pos = 0usize;
        for v in 0..n {
            for _ in 0..deg[v] {
                let w = read_u64(r)? as u32;
                if (v as u32) < w {
                    edges.push((v as u32, w));
                }
                pos += 1;
            }
        }
        debug_assert_eq!(pos, 2 * m);
        edges.sort_unstable();
        Ok(Graph::from_canonical_edges(n, edges))
    }
}

pub const CACHE_MAGIC: &[u8; 8] = b"GRLCACH1";

fn read_u64<R: Read>(r: &mut R) -> io::Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

/// DAG induced by the degree ordering: edge u->v iff d(u) < d(v), or
/// d(u) = d(v) and u < v. Out-adjacency only; lists sorted by rank.
#[derive(Debug, Clone)]
pub struct OrientedGraph {
    /// rank[v] = position of v in the degree ordering.
    rank: Vec<u32>,
    out_offsets: Vec<usize>,
    out_nbrs: Vec<u32>,
    /// Undirected edge id per out-adjacency slot.
    out_eids: Vec<u32>,
}

pub fn build_oriented(g: &Graph) -> OrientedGraph {
    let n = g.n();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_unstable_by_key(|&v| (g.degree(v), v));
    let mut rank = vec![0u32; n];
    for (pos, &v) in order.iter().enumerate() {
        rank[v as usize] = pos as u32;
    }
    let mut outdeg = vec![0usize; n];
    for &(u, v) in g.canonical_edges() {
        let src = if rank[u as usize] < rank[v as usize] { u } else { v };
        outdeg[src as usize] += 1;
    }
    let mut out_offsets = vec![0usize; n + 1];
    for v in 0..n {
        out_offsets[v + 1] = out_offsets[v] + outdeg[v];
    }
    let mut out_nbrs = vec![0u32; g.m()];
    let mut out_eids = vec![0u32; g.m()];
    let mut cursor = out_offsets.clone();
    for (id, &(u, v)) in g.canonical_edges().iter().enumerate() {
        let (src, dst) = if rank[u as usize] < rank[v as usize] { (u, v) } else { (v, u) };
        out_nbrs[cursor[src as usize]] = dst;
        out_eids[cursor[src as usize]] = id as u32;
        cursor[src as usize] += 1;
    }
    let mut og = OrientedGraph {
        rank,
        out_offsets,
        out_nbrs,
        out_eids,
    };
    for v in 0..n {
        let r = og.out_offsets[v]..og.out_offsets[v + 1];
        let mut pairs: Vec<(u32, u32)> = og.out_nbrs[r.clone()]
            .iter()
            .copied()
            .zip(og.out_eids[r.clone()].iter().copied())
            .collect();
        pairs.sort_unstable_by_key(|&(w, _)| og.rank[w as usize]);
        for (i, (w, e)) in pairs.into_iter().enumerate() {
            og.out_nbrs[r.start + i] = w;
            og.out_eids[r.start + i] = e;
        }
    }
    og
}

impl OrientedGraph {
    #[inline]
    pub fn rank(&self, v: u32) -> u32 {
        self.rank[v as usize]
    }

    /// True iff the edge {u, v} (assumed present) is oriented u -> v.
    #[inline]
    pub fn precedes(&self, u: u32, v: u32) -> bool {
        self.rank[u as usize] < self.rank[v as usize]
    }

    /// Out-neighbors of v, sorted by rank.
    #[inline]
    pub fn out(&self, v: u32) -> &[u32] {
        &self.out_nbrs[self.out_offsets[v as usize]..self.out_offsets[v as usize + 1]]
    }

    /// Out-neighbors of v zipped with undirected edge ids, sorted by rank.
    #[inline]
    pub fn out_edges(&self, v: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        let r = self.out_offsets[v as usize]..self.out_offsets[v as usize + 1];
        self.out_nbrs[r.clone()]
            .iter()
            .copied()
            .zip(self.out_eids[r].iter().copied())
    }

    /// Edge ids parallel to [`OrientedGraph::out`].
    #[inline]
    pub fn out_eids(&self, v: u32) -> &[u32] {
        &self.out_eids[self.out_offsets[v as usize]..self.out_offsets[v as usize + 1]]
    }

    #[inline]
    pub fn out_degree(&self, v: u32) -> usize {
        self.out_offsets[v as usize + 1] - self.out_offsets[v as usize]
    }

    pub fn n(&self) -> usize {
        self.rank.len()
    }
}
