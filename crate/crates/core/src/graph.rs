use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph on the dense vertex range `0..n`.
///
/// Neighbor lists are kept sorted and the graph is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Common neighbors of `u` and `v`, by merging the two sorted lists.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// All triangles `(a, b, c)` with `a < b < c`, lexicographically ordered.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            for w in self.common_neighbors(u, v) {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// `N[v] = {v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = VertexSet::new(self.n());
        s.insert(v);
        for &u in &self.adj[v] {
            s.insert(u);
        }
        Ok(s)
    }

    /// Number of members of `s` in `N[v]`.
    pub fn closed_hits(&self, v: usize, s: &VertexSet) -> usize {
        usize::from(s.contains(v)) + self.adj[v].iter().filter(|&&u| s.contains(u)).count()
    }

    /// True iff `|N[v] ∩ s| ≥ 2` for every vertex `v`.
    pub fn is_double_dominating(&self, s: &VertexSet) -> Result<bool> {
        if let Some(v) = s.iter().find(|&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok((0..self.n()).all(|v| self.closed_hits(v, s) >= 2))
    }

    pub fn degree_two_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&v| self.degree(v) == 2))
    }

    /// Vertices of degree at least three.
    pub fn high_degree_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&v| self.degree(v) >= 3))
    }

    /// Induced subgraph on `0..k`, keeping labels.
    pub fn prefix_subgraph(&self, k: usize) -> Result<Graph> {
        Graph::from_edges(k, self.edges().filter(|&(_, v)| v < k))
    }
}

pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

/// Subset of `0..universe`; iteration is ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { members: vec![false; universe], len: 0 }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet { members: vec![true; universe], len: universe }
    }

    /// Members at or beyond `universe` grow the universe.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = VertexSet::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        if v >= self.members.len() {
            self.members.resize(v + 1, false);
        }
        let fresh = !self.members[v];
        self.members[v] = true;
        self.len += usize::from(fresh);
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.contains(v);
        if present {
            self.members[v] = false;
            self.len -= 1;
        }
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(v, _)| v)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for v in other.iter() {
            out.insert(v);
        }
        out
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Members below `k`, with universe `k`.
    pub fn restrict(&self, k: usize) -> VertexSet {
        VertexSet::from_vertices(k, self.iter().take_while(|&v| v < k))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Which construction produced a [`DominationResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Peel3Color,
    Rainbow4Color,
    DegreeAtLeast3,
    Dispatch,
    Exact,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Peel3Color => "peel",
            Method::Rainbow4Color => "rainbow",
            Method::DegreeAtLeast3 => "degree",
            Method::Dispatch => "dispatch",
            Method::Exact => "exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A double dominating set together with the construction that produced it
/// and the upper bound that construction guarantees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub set: VertexSet,
    pub method: Method,
    pub claimed_bound: Option<usize>,
}

impl DominationResult {
    /// Checks the set against `g` and the claimed bound before wrapping it.
    pub(crate) fn verified(
        g: &Graph,
        set: VertexSet,
        method: Method,
        claimed_bound: Option<usize>,
    ) -> Result<Self> {
        if !g.is_double_dominating(&set)? {
            return Err(Error::InvariantViolation(format!(
                "{method} set {set} is not double dominating"
            )));
        }
        if let Some(bound) = claimed_bound {
            if set.len() > bound {
                return Err(Error::InvariantViolation(format!(
                    "{method} set has size {} > claimed bound {bound}",
                    set.len()
                )));
            }
        }
        Ok(DominationResult { set, method, claimed_bound })
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }
}
