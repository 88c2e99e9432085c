//! Combinatorial simple graphs: graph6 codec, degree/clique/cycle queries
//! and exhaustive enumeration of small graphs.
//!
//! Vertex ids are 1-based throughout the public API.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex id {0} out of range 1..={1}")]
    BadVertex(usize, usize),
}

/// Simple undirected graph on vertices `1..=n`, adjacency as bitmask rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 62, "graphs larger than 62 vertices are unsupported");
        SimpleGraph { n, adj: vec![0; n] }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, w) in edges {
            g.add_edge(u, w);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) {
        assert!(v >= 1 && v <= self.n, "vertex id {} out of range 1..={}", v, self.n);
    }

    pub fn add_edge(&mut self, u: usize, w: usize) {
        self.check(u);
        self.check(w);
        assert_ne!(u, w, "loop edges are not allowed");
        self.adj[u - 1] |= 1 << (w - 1);
        self.adj[w - 1] |= 1 << (u - 1);
    }

    pub fn remove_edge(&mut self, u: usize, w: usize) {
        self.check(u);
        self.check(w);
        self.adj[u - 1] &= !(1 << (w - 1));
        self.adj[w - 1] &= !(1 << (u - 1));
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.check(u);
        self.check(w);
        u != w && self.adj[u - 1] & (1 << (w - 1)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.check(v);
        self.adj[v - 1].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.check(v);
        let row = self.adj[v - 1];
        (1..=self.n).filter(move |w| row & (1 << (w - 1)) != 0)
    }

    /// Edges as ordered pairs `(u, w)` with `u < w`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 1..=self.n {
            for w in (u + 1)..=self.n {
                if self.has_edge(u, w) {
                    e.push((u, w));
                }
            }
        }
        e
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Largest `r` such that the complete graph on `r` vertices is a subgraph.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &SimpleGraph, candidates: u64, size: usize, best: &mut usize) {
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            if candidates == 0 {
                *best = (*best).max(size);
                return;
            }
            let mut c = candidates;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                grow(g, c & g.adj[v], size + 1, best);
                if size + 1 + c.count_ones() as usize <= *best {
                    break;
                }
            }
        }
        if self.n == 0 {
            return 0;
        }
        let mut best = 1;
        let all = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        grow(self, all, 0, &mut best);
        best
    }

    /// First Betti number `|E| - |V| + 1` of a connected graph.
    pub fn betti(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.edge_count() + 1 - self.n)
    }

    /// Lexicographically least simple cycle of length exactly `k`, if any.
    ///
    /// The cycle is reported as a vertex sequence starting at its smallest
    /// vertex; consecutive vertices (and last-first) are adjacent.
    pub fn find_cycle(&self, k: usize) -> Option<Vec<usize>> {
        if k < 3 || k > self.n {
            return None;
        }
        fn dfs(
            g: &SimpleGraph,
            start: usize,
            path: &mut Vec<usize>,
            used: &mut u64,
            k: usize,
        ) -> bool {
            if path.len() == k {
                return g.has_edge(*path.last().unwrap(), start);
            }
            let last = *path.last().unwrap();
            for w in g.neighbors(last) {
                if w > start && *used & (1 << (w - 1)) == 0 {
                    path.push(w);
                    *used |= 1 << (w - 1);
                    if dfs(g, start, path, used, k) {
                        return true;
                    }
                    *used &= !(1 << (w - 1));
                    path.pop();
                }
            }
            false
        }
        for start in 1..=self.n {
            let mut path = vec![start];
            let mut used = 1u64 << (start - 1);
            if dfs(self, start, &mut path, &mut used, k) {
                return Some(path);
            }
        }
        None
    }

    /// Exhaustive search for a vertex-disjoint pair of a 4-cycle and a
    /// 3-cycle. Deterministic: subsets and arrangements are scanned in
    /// lexicographic order.
    pub fn find_disjoint_4_3_cycles(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n;
        if n < 7 {
            return None;
        }
        let verts: Vec<usize> = (1..=n).collect();
        for quad in subsets(&verts, 4) {
            if let Some(c4) = four_cycle_in(self, &quad) {
                let rest: Vec<usize> = verts.iter().copied().filter(|v| !quad.contains(v)).collect();
                for tri in subsets(&rest, 3) {
                    if self.has_edge(tri[0], tri[1])
                        && self.has_edge(tri[1], tri[2])
                        && self.has_edge(tri[0], tri[2])
                    {
                        return Some((c4, tri));
                    }
                }
            }
        }
        None
    }

    /// Canonical adjacency key: the minimum edge bitstring over all vertex
    /// relabelings. Exponential in `n`; intended for n <= 8.
    pub fn canonical_key(&self) -> Vec<u64> {
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut rows = vec![0u64; n];
            for u in 0..n {
                for w in 0..n {
                    if u != w && self.adj[u] & (1 << w) != 0 {
                        rows[p[u]] |= 1 << p[w];
                    }
                }
            }
            if best.as_ref().map_or(true, |b| rows < *b) {
                best = Some(rows);
            }
        });
        best.unwrap_or_default()
    }

    pub fn is_canonical(&self) -> bool {
        self.adj == self.canonical_key()
    }

    /// Bipartition into two color classes, if the graph is bipartite and
    /// connected. Classes are sorted, the one containing vertex 1 first.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![-1i8; self.n + 1];
        color[1] = 0;
        let mut queue = std::collections::VecDeque::from([1usize]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if color[w] == -1 {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        if color[1..].iter().any(|&c| c == -1) {
            return None; // disconnected
        }
        let a = (1..=self.n).filter(|&v| color[v] == 0).collect();
        let b = (1..=self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }

    /// Checks whether the graph is complete bipartite; returns the classes.
    pub fn complete_bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let (a, b) = self.bipartition()?;
        for &u in &a {
            for &w in &b {
                if !self.has_edge(u, w) {
                    return None;
                }
            }
        }
        Some((a, b))
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 1..=n {
            for w in (u + 1)..=n {
                g.add_edge(u, w);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = SimpleGraph::new(a + b);
        for u in 1..=a {
            for w in (a + 1)..=(a + b) {
                g.add_edge(u, w);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for v in 1..=n {
            g.add_edge(v, v % n + 1);
        }
        g
    }

    // ---- graph6 codec ----

    /// Encode in the standard graph6 convention: byte `63+n`, then the
    /// upper-triangle bits in column-major order packed into 6-bit groups,
    /// each offset by 63.
    pub fn to_graph6(&self) -> String {
        let mut out = String::new();
        out.push((63 + self.n as u8) as char);
        let mut bits: Vec<bool> = Vec::new();
        for w in 2..=self.n {
            for u in 1..w {
                bits.push(self.has_edge(u, w));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                if b {
                    v |= 1 << (5 - i);
                }
            }
            out.push((63 + v) as char);
        }
        out
    }

    pub fn from_graph6(s: &str) -> Result<Self, GraphError> {
        let bytes = s.trim().as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::MalformedGraph6(s.to_string()));
        }
        let n = bytes[0];
        if !(63..=125).contains(&n) {
            return Err(GraphError::MalformedGraph6(s.to_string()));
        }
        let n = (n - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() != 1 + nbytes {
            return Err(GraphError::MalformedGraph6(s.to_string()));
        }
        let mut bits = Vec::with_capacity(nbytes * 6);
        for &b in &bytes[1..] {
            if !(63..=126).contains(&b) {
                return Err(GraphError::MalformedGraph6(s.to_string()));
            }
            let v = b - 63;
            for i in 0..6 {
                bits.push(v & (1 << (5 - i)) != 0);
            }
        }
        if bits[nbits..].iter().any(|&b| b) {
            return Err(GraphError::MalformedGraph6(s.to_string()));
        }
        let mut g = SimpleGraph::new(n);
        let mut k = 0;
        for w in 2..=n {
            for u in 1..w {
                if bits[k] {
                    g.add_edge(u, w);
                }
                k += 1;
            }
        }
        Ok(g)
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// All `k`-subsets of `items`, in lexicographic order.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Lexicographically least 4-cycle using exactly the four given vertices.
fn four_cycle_in(g: &SimpleGraph, quad: &[usize]) -> Option<Vec<usize>> {
    let (a, b, c, d) = (quad[0], quad[1], quad[2], quad[3]);
    for order in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
        if g.has_edge(order[0], order[1])
            && g.has_edge(order[1], order[2])
            && g.has_edge(order[2], order[3])
            && g.has_edge(order[3], order[0])
        {
            return Some(order.to_vec());
        }
    }
    None
}

/// Deterministic stream of all labeled simple graphs on `n` vertices with
/// minimum degree at least `min_deg` (and connected, when asked). Every
/// isomorphism class appears at least once; duplicates are allowed and can
/// be filtered with [`SimpleGraph::is_canonical`].
pub fn enumerate_graphs(
    n: usize,
    min_deg: usize,
    connected: bool,
) -> impl Iterator<Item = SimpleGraph> {
    assert!(n <= 8, "enumeration supports n <= 8");
    let nbits = n * n.saturating_sub(1) / 2;
    (0u64..(1u64 << nbits)).filter_map(move |mask| {
        let g = graph_from_mask(n, mask);
        if g.min_degree() >= min_deg && (!connected || g.is_connected()) {
            Some(g)
        } else {
            None
        }
    })
}

pub(crate) fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    let mut k = 0;
    for u in 1..=n {
        for w in (u + 1)..=n {
            if mask & (1 << k) != 0 {
                g.add_edge(u, w);
            }
            k += 1;
        }
    }
    g
}

/// Parse a graph6 file: one graph per line, `#` comments and blank lines
/// are skipped.
pub fn read_graph6_lines(text: &str) -> Result<Vec<SimpleGraph>, GraphError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(SimpleGraph::from_graph6(line)?);
    }
    Ok(out)
}

pub fn write_graph6_lines(graphs: &[SimpleGraph]) -> String {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&g.to_graph6());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_values() {
        assert_eq!(SimpleGraph::complete(2).to_graph6(), "A_");
        assert_eq!(SimpleGraph::complete(4).to_graph6(), "C~");
        assert_eq!(SimpleGraph::complete(5).to_graph6(), "D~{");
        assert_eq!(SimpleGraph::from_graph6("A_").unwrap(), SimpleGraph::complete(2));
        assert_eq!(SimpleGraph::from_graph6("C~").unwrap(), SimpleGraph::complete(4));
        assert_eq!(SimpleGraph::from_graph6("D~{").unwrap(), SimpleGraph::complete(5));
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(SimpleGraph::from_graph6("").is_err());
        assert!(SimpleGraph::from_graph6("C").is_err());
        assert!(SimpleGraph::from_graph6("C~~").is_err());
        // Padding bits must be zero.
        assert!(SimpleGraph::from_graph6("A\x7f").is_err());
    }

    #[test]
    fn graph6_roundtrip_exhaustive_small() {
        for n in 0..=5usize {
            let nbits = n * n.saturating_sub(1) / 2;
            for mask in 0u64..(1 << nbits) {
                let g = graph_from_mask(n, mask);
                let enc = g.to_graph6();
                assert_eq!(SimpleGraph::from_graph6(&enc).unwrap(), g);
            }
        }
    }

    #[test]
    fn degree_clique_betti() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.min_degree(), 3);
        assert_eq!(k4.clique_number(), 4);
        assert_eq!(k4.betti().unwrap(), 3);

        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(k33.min_degree(), 3);
        assert_eq!(k33.clique_number(), 2);
        assert_eq!(k33.betti().unwrap(), 4);

        // Any tree has betti 0.
        let tree = SimpleGraph::with_edges(5, &[(1, 2), (1, 3), (3, 4), (3, 5)]);
        assert_eq!(tree.betti().unwrap(), 0);

        let two_parts = SimpleGraph::with_edges(4, &[(1, 2), (3, 4)]);
        assert_eq!(two_parts.betti(), Err(GraphError::Disconnected));
    }

    #[test]
    fn find_cycle_examples() {
        let k4 = SimpleGraph::complete(4);
        let c = k4.find_cycle(4).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], 1);
        let tree = SimpleGraph::with_edges(4, &[(1, 2), (2, 3), (2, 4)]);
        assert_eq!(tree.find_cycle(3), None);
        let c7 = SimpleGraph::cycle(7);
        assert_eq!(c7.find_cycle(4), None);
        assert!(c7.find_cycle(7).is_some());
    }

    #[test]
    fn disjoint_cycles_k7_and_c7() {
        let k7 = SimpleGraph::complete(7);
        let (c4, c3) = k7.find_disjoint_4_3_cycles().unwrap();
        assert_eq!(c4.len(), 4);
        assert_eq!(c3.len(), 3);
        assert!(c4.iter().all(|v| !c3.contains(v)));
        assert_eq!(SimpleGraph::cycle(7).find_disjoint_4_3_cycles(), None);
    }

    #[test]
    fn enumerate_small_min_degree() {
        // Minimum degree 3 is impossible on 3 vertices.
        assert_eq!(enumerate_graphs(3, 3, true).count(), 0);
        // On 4 vertices only the complete graph has min degree 3.
        let found: Vec<_> = enumerate_graphs(4, 3, true).collect();
        assert_eq!(found, vec![SimpleGraph::complete(4)]);
        // On 5 vertices only the complete graph has min degree 4.
        let found: Vec<_> = enumerate_graphs(5, 4, true).collect();
        assert_eq!(found, vec![SimpleGraph::complete(5)]);
    }

    #[test]
    fn canonical_key_identifies_isomorphs() {
        let a = SimpleGraph::with_edges(4, &[(1, 2), (2, 3), (3, 4)]);
        let b = SimpleGraph::with_edges(4, &[(2, 4), (1, 4), (1, 3)]);
        assert_eq!(a.canonical_key(), b.canonical_key());
        let c = SimpleGraph::with_edges(4, &[(1, 2), (2, 3), (1, 3)]);
        assert_ne!(a.canonical_key(), c.canonical_key());
    }

    #[test]
    fn bipartition_detection() {
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        let (a, b) = k33.complete_bipartition().unwrap();
        assert_eq!(a, vec![1, 2, 3]);
        assert_eq!(b, vec![4, 5, 6]);
        assert!(SimpleGraph::complete(4).complete_bipartition().is_none());
        // Bipartite but not complete bipartite.
        let p4 = SimpleGraph::with_edges(4, &[(1, 2), (2, 3), (3, 4)]);
        assert!(p4.bipartition().is_some());
        assert!(p4.complete_bipartition().is_none());
    }

    #[test]
    fn graph6_file_io() {
        let text = "# two graphs\nC~\n\nA_\n";
        let gs = read_graph6_lines(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(write_graph6_lines(&gs), "C~\nA_\n");
    }
}
