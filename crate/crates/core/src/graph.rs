//! Simple undirected graphs with cached all-pairs BFS distances.
//!
//! Vertices are dense integers `0..n`. Graphs are immutable after
//! construction; the distance matrix is computed once on first use and is
//! safe to read from any number of threads.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Sentinel distance for unreachable vertex pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph.
#[derive(Debug)]
pub struct Graph {
    n: usize,
    /// Canonical edge list: `u < v`, sorted, deduplicated.
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
    dist: OnceLock<DistanceMatrix>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            edges: self.edges.clone(),
            adj: self.adj.clone(),
            labels: self.labels.clone(),
            dist: OnceLock::new(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Graph {}

/// All-pairs hop counts, row-major, `UNREACHABLE` where no path exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Eccentricities, radius, diameter and center of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Vertices of minimum eccentricity, ascending.
    pub center: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut canon: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a as usize >= n {
                return Err(Error::InvalidVertex {
                    vertex: a as usize,
                    n,
                });
            }
            if b as usize >= n {
                return Err(Error::InvalidVertex {
                    vertex: b as usize,
                    n,
                });
            }
            if a == b {
                return Err(Error::InvalidParams(format!("loop at vertex {a}")));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        let before = canon.len();
        canon.dedup();
        if canon.len() != before {
            return Err(Error::InvalidParams("duplicate edge".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
            labels: None,
            dist: OnceLock::new(),
        })
    }

    /// Attaches display labels (one per vertex).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidParams(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// All-pairs distances, computed on first use by n BFS runs.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| {
            let mut d = vec![UNREACHABLE; self.n * self.n];
            for s in 0..self.n {
                let row = bfs_row(self, s);
                d[s * self.n..(s + 1) * self.n].copy_from_slice(&row);
            }
            DistanceMatrix { n: self.n, d }
        })
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.distances().get(u, v)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.distances().row(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph)
        }
    }
}

fn bfs_row(g: &Graph, source: usize) -> Vec<u32> {
    let mut d = vec![UNREACHABLE; g.n];
    d[source] = 0;
    let mut q = VecDeque::with_capacity(g.n);
    q.push_back(source as u32);
    while let Some(u) = q.pop_front() {
        let du = d[u as usize];
        for &w in &g.adj[u as usize] {
            if d[w as usize] == UNREACHABLE {
                d[w as usize] = du + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Single-source BFS hop counts; `UNREACHABLE` marks disconnected vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    g.check_vertex(source)?;
    Ok(bfs_row(g, source))
}

/// Eccentricities, radius, diameter, center. Requires a connected graph.
pub fn metrics(g: &Graph) -> Result<GraphMetrics> {
    if g.n == 0 {
        return Err(Error::InvalidParams("empty graph".into()));
    }
    g.ensure_connected()?;
    let dm = g.distances();
    let eccentricity: Vec<u32> = (0..g.n)
        .map(|v| dm.row(v).iter().copied().max().unwrap())
        .collect();
    let radius = *eccentricity.iter().min().unwrap();
    let diameter = *eccentricity.iter().max().unwrap();
    let center = (0..g.n as u32)
        .filter(|&v| eccentricity[v as usize] == radius)
        .collect();
    Ok(GraphMetrics {
        eccentricity,
        radius,
        diameter,
        center,
    })
}

/// The ball `N_r[v]`, ascending. Saturates at the component of `v`.
pub fn ball(g: &Graph, v: usize, r: u32) -> Result<Vec<u32>> {
    g.check_vertex(v)?;
    let dm = g.distances();
    Ok((0..g.n as u32)
        .filter(|&u| dm.get(v, u as usize) <= r)
        .collect())
}

/// A shortest path realizing the diameter.
///
/// Tie-breaks are fixed: the lexicographically smallest endpoint pair
/// `(u, v)` with `u < v`, then the lowest-index predecessor at every step,
/// so the result is reproducible across runs.
pub fn diametral_path(g: &Graph) -> Result<Vec<u32>> {
    if g.n == 0 {
        return Err(Error::InvalidParams("empty graph".into()));
    }
    g.ensure_connected()?;
    let dm = g.distances();
    let diam = (0..g.n)
        .map(|v| dm.row(v).iter().copied().max().unwrap())
        .max()
        .unwrap();
    let (mut src, mut dst) = (0usize, 0usize);
    'outer: for u in 0..g.n {
        for v in u + 1..g.n {
            if dm.get(u, v) == diam {
                src = u;
                dst = v;
                break 'outer;
            }
        }
    }
    // walk back from dst picking the smallest predecessor each step
    let row = dm.row(src);
    let mut path = vec![dst as u32];
    let mut cur = dst;
    while cur != src {
        let want = row[cur] - 1;
        let pred = *g.adj[cur]
            .iter()
            .find(|&&x| row[x as usize] == want)
            .expect("BFS predecessor exists");
        path.push(pred);
        cur = pred as usize;
    }
    path.reverse();
    Ok(path)
}

/// Parses the shared edge-list format: `n m` on the first significant line,
/// then `m` lines `u v` with `0 <= u < v < n`. Lines starting with `#` and
/// blank lines are ignored. Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        if header.is_none() {
            let n = parse_num(it.next(), lineno, "vertex count")?;
            let m = parse_num(it.next(), lineno, "edge count")?;
            if it.next().is_some() {
                return Err(Error::parse(lineno, "trailing tokens after header"));
            }
            header = Some((n, m));
        } else {
            let u = parse_num(it.next(), lineno, "edge endpoint")?;
            let v = parse_num(it.next(), lineno, "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::parse(lineno, "trailing tokens after edge"));
            }
            let (n, _) = header.unwrap();
            if u >= v {
                return Err(Error::parse(lineno, format!("expected u < v, got {u} {v}")));
            }
            if v >= n {
                return Err(Error::parse(
                    lineno,
                    format!("endpoint {v} out of range (n = {n})"),
                ));
            }
            edges.push((u as u32, v as u32));
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(1, "missing header line"))?;
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count(),
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

/// Canonical edge-list text for a graph.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn path(n: usize) -> Graph {
        families::gen_path(n).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        families::gen_cycle(n).unwrap()
    }

    #[test]
    fn bfs_on_path() {
        let g = path(4);
        assert_eq!(bfs_distances(&g, 0).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn bfs_on_triangle() {
        let g = families::gen_complete(3).unwrap();
        assert_eq!(bfs_distances(&g, 1).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn bfs_disconnected_sentinel() {
        let g = Graph::new(2, &[]).unwrap();
        assert_eq!(bfs_distances(&g, 0).unwrap(), vec![0, UNREACHABLE]);
    }

    #[test]
    fn bfs_bad_source() {
        let g = path(3);
        assert_eq!(
            bfs_distances(&g, 5),
            Err(Error::InvalidVertex { vertex: 5, n: 3 })
        );
    }

    #[test]
    fn metrics_p5() {
        let m = metrics(&path(5)).unwrap();
        assert_eq!((m.radius, m.diameter), (2, 4));
        assert_eq!(m.center, vec![2]);
    }

    #[test]
    fn metrics_c4() {
        let m = metrics(&cycle(4)).unwrap();
        assert_eq!((m.radius, m.diameter), (2, 2));
        assert_eq!(m.center, vec![0, 1, 2, 3]);
    }

    #[test]
    fn metrics_k1() {
        let m = metrics(&families::gen_complete(1).unwrap()).unwrap();
        assert_eq!((m.radius, m.diameter), (0, 0));
        assert_eq!(m.center, vec![0]);
    }

    #[test]
    fn metrics_rejects_disconnected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(metrics(&g), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn balls_on_p5() {
        let g = path(5);
        assert_eq!(ball(&g, 2, 1).unwrap(), vec![1, 2, 3]);
        assert_eq!(ball(&g, 0, 10).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(ball(&g, 0, 0).unwrap(), vec![0]);
    }

    #[test]
    fn ball_c4_saturates() {
        let g = cycle(4);
        assert_eq!(ball(&g, 0, 2).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn diametral_paths() {
        assert_eq!(diametral_path(&path(5)).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(
            diametral_path(&families::gen_complete(3).unwrap()).unwrap(),
            vec![0, 1]
        );
        // endpoint pair (0, 2), predecessor tie broken toward vertex 1
        assert_eq!(diametral_path(&cycle(4)).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn parse_round_trip() {
        let g = cycle(5);
        let txt = format_edge_list(&g);
        let h = parse_edge_list(&txt).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn parse_accepts_comments_and_blanks() {
        let g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n0 2\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_edge_list("3 1\n2 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_edge_list("2 1\n0 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_edge_list("# only comments\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(3, &[(1, 1)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn dist_one_iff_edge() {
        let g = families::gen_petersen().unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(g.dist(u, v) == 1, g.has_edge(u, v), "{u} {v}");
            }
        }
    }
}
