//! Graphs, host models (a pattern plus one of its subdivisions) and
//! representations, together with the verifier everything else is checked by.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{argument, structural, Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    mat: Vec<bool>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut g = Graph::from_edges(raw.n, &edges).map_err(serde::de::Error::custom)?;
        if let Some(l) = raw.labels {
            g.set_labels(l).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { n, adj: vec![Vec::new(); n], mat: vec![false; n * n], labels: None }
    }

    /// Builds a graph from an edge list; duplicates are merged, loops and
    /// out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return structural(format!("edge ({u},{v}) out of range for n={n}"));
            }
            if u == v {
                return structural(format!("self-loop at {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// The star with `d` leaves; node 0 is the center.
    pub fn star(d: usize) -> Graph {
        let mut g = Graph::new(d + 1);
        for v in 1..=d {
            g.add_edge(0, v);
        }
        g
    }

    /// K4 minus the edge {2,3}.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    /// Adds an edge; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        if self.mat[u * self.n + v] {
            return false;
        }
        self.mat[u * self.n + v] = true;
        self.mat[v * self.n + u] = true;
        let pu = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pu, v);
        let pv = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pv, u);
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.mat[u * self.n + v]
    }

    /// Sorted neighbour list.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return structural(format!("{} labels for {} vertices", labels.len(), self.n));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_dominating(&self, set: &[usize]) -> bool {
        let mut dom = vec![false; self.n];
        for &v in set {
            dom[v] = true;
            for &w in &self.adj[v] {
                dom[w] = true;
            }
        }
        dom.into_iter().all(|b| b)
    }

    /// Induced subgraph on `verts` (in the given order): vertex `i` of the
    /// result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Vertices reachable from `start` avoiding `blocked`.
    pub fn reach(&self, start: usize, blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        if blocked[start] {
            return seen;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Components of the graph minus `blocked`, each sorted, ordered by
    /// smallest vertex.
    pub fn components_avoiding(&self, blocked: &[bool]) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if blocked[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !blocked[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || connected_components(self).len() == 1
    }

    /// Whether `set` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut blocked = vec![true; self.n];
        for &v in set {
            blocked[v] = false;
        }
        let seen = self.reach(set[0], &blocked);
        set.iter().all(|&v| seen[v])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Reads the DIMACS edge format (`p edge n m`, `e u v`, 1-based ids).
    pub fn from_dimacs(text: &str) -> Result<Graph> {
        let mut g: Option<Graph> = None;
        for (lineno, line) in text.lines().enumerate() {
            let mut it = line.split_whitespace();
            match it.next() {
                None | Some("c") => {}
                Some("p") => {
                    let _kind = it.next();
                    let n: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("line {}: bad problem line", lineno + 1)))?;
                    g = Some(Graph::new(n));
                }
                Some("e") => {
                    let gr = g
                        .as_mut()
                        .ok_or_else(|| Error::Parse(format!("line {}: edge before problem line", lineno + 1)))?;
                    let mut next = || -> Result<usize> {
                        it.next()
                            .and_then(|t| t.parse::<usize>().ok())
                            .filter(|&x| x >= 1 && x <= gr.n)
                            .ok_or_else(|| Error::Parse(format!("line {}: bad endpoint", lineno + 1)))
                    };
                    let u = next()? - 1;
                    let v = next()? - 1;
                    if u == v {
                        return Err(Error::Parse(format!("line {}: self-loop", lineno + 1)));
                    }
                    gr.add_edge(u, v);
                }
                Some(tok) => return Err(Error::Parse(format!("line {}: unknown record {tok:?}", lineno + 1))),
            }
        }
        g.ok_or_else(|| Error::Parse("missing problem line".into()))
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p edge {} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        s
    }
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    g.components_avoiding(&vec![false; g.n()])
}

/// A pattern graph, a subdivision of it, and the path of the subdivision
/// that replaces each pattern edge (indexed like `pattern.edges()`).
///
/// Pattern nodes keep their ids in the subdivision; interior nodes come after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostModel {
    pub pattern: Graph,
    pub subdivision: Graph,
    pub edge_paths: Vec<Vec<usize>>,
}

impl HostModel {
    /// Subdivides pattern edge `i` (in `h.edges()` order) `counts[i]` times.
    pub fn subdivide(h: &Graph, counts: &[usize]) -> HostModel {
        let edges = h.edges();
        assert_eq!(edges.len(), counts.len());
        let total = h.n() + counts.iter().sum::<usize>();
        let mut sub = Graph::new(total);
        let mut next = h.n();
        let mut paths = Vec::with_capacity(edges.len());
        for (&(u, v), &c) in edges.iter().zip(counts) {
            let mut path = vec![u];
            path.extend(next..next + c);
            next += c;
            path.push(v);
            for w in path.windows(2) {
                sub.add_edge(w[0], w[1]);
            }
            paths.push(path);
        }
        HostModel { pattern: h.clone(), subdivision: sub, edge_paths: paths }
    }

    /// The pattern itself, with no extra nodes.
    pub fn trivial(h: &Graph) -> HostModel {
        HostModel::subdivide(h, &vec![0; h.m()])
    }

    /// Checks that the subdivision really is the pattern with its edges
    /// replaced by internally disjoint paths.
    pub fn validate(&self) -> Result<()> {
        let h = &self.pattern;
        let sub = &self.subdivision;
        let edges = h.edges();
        if edges.len() != self.edge_paths.len() {
            return structural("edge_paths length differs from pattern edge count");
        }
        if sub.n() < h.n() {
            return structural("subdivision smaller than pattern");
        }
        let mut owner = vec![usize::MAX; sub.n()];
        let mut sub_edges = 0;
        for (i, (&(u, v), path)) in edges.iter().zip(&self.edge_paths).enumerate() {
            if path.len() < 2 || path[0] != u || *path.last().unwrap() != v {
                return structural(format!("edge path {i} does not join {u} and {v}"));
            }
            for &x in &path[1..path.len() - 1] {
                if x < h.n() || x >= sub.n() || owner[x] != usize::MAX {
                    return structural(format!("edge path {i} has a bad interior node {x}"));
                }
                owner[x] = i;
            }
            for w in path.windows(2) {
                if !sub.has_edge(w[0], w[1]) {
                    return structural(format!("edge path {i} uses a missing edge"));
                }
                sub_edges += 1;
            }
        }
        if sub_edges != sub.m() {
            return structural("subdivision has edges outside the edge paths");
        }
        if (h.n()..sub.n()).any(|x| owner[x] == usize::MAX) {
            return structural("subdivision node on no edge path");
        }
        Ok(())
    }

    /// Pattern edge index owning an interior node, or `None` for pattern nodes.
    pub fn owner_of(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.subdivision.n()];
        for (i, p) in self.edge_paths.iter().enumerate() {
            for &x in &p[1..p.len() - 1] {
                owner[x] = Some(i);
            }
        }
        owner
    }

    /// Every edge of the subdivision gets `k` more interior nodes.
    /// Returns the new model and, for each old subdivision edge `(a, b)`
    /// with `a < b`, the new nodes placed on it (ordered from `a` to `b`).
    pub fn refine(&self, k: usize) -> (HostModel, BTreeMap<(usize, usize), Vec<usize>>) {
        let old_n = self.subdivision.n();
        let mut next = old_n;
        let mut inserted = BTreeMap::new();
        let mut paths = Vec::with_capacity(self.edge_paths.len());
        let mut sub = Graph::new(old_n + k * self.subdivision.m());
        for p in &self.edge_paths {
            let mut np = vec![p[0]];
            for w in p.windows(2) {
                let fresh: Vec<usize> = (next..next + k).collect();
                next += k;
                np.extend(&fresh);
                np.push(w[1]);
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                let oriented = if w[0] < w[1] { fresh } else { fresh.into_iter().rev().collect() };
                inserted.insert(key, oriented);
            }
            for w in np.windows(2) {
                sub.add_edge(w[0], w[1]);
            }
            paths.push(np);
        }
        (HostModel { pattern: self.pattern.clone(), subdivision: sub, edge_paths: paths }, inserted)
    }
}

/// Every pattern edge subdivided `2n` times.
pub fn canonical_subdivision(h: &Graph, n: usize) -> HostModel {
    HostModel::subdivide(h, &vec![2 * n; h.m()])
}

/// Assignment of a node set of the host subdivision to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub host: HostModel,
    pub subtrees: BTreeMap<usize, Vec<usize>>,
}

impl Representation {
    /// Builds a representation from per-vertex node lists (sorted and
    /// deduplicated here).
    pub fn new(host: HostModel, sets: Vec<Vec<usize>>) -> Representation {
        let subtrees = sets
            .into_iter()
            .enumerate()
            .map(|(v, mut s)| {
                s.sort_unstable();
                s.dedup();
                (v, s)
            })
            .collect();
        Representation { host, subtrees }
    }

    pub fn set(&self, v: usize) -> &[usize] {
        &self.subtrees[&v]
    }

    /// Intersection graph of the node sets, assuming keys `0..k`.
    pub fn intersection_graph(&self) -> Graph {
        let k = self.subtrees.len();
        let hn = self.host.subdivision.n();
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); hn];
        for (&v, s) in &self.subtrees {
            for &x in s {
                at[x].push(v);
            }
        }
        let mut g = Graph::new(k);
        for list in &at {
            for (i, &u) in list.iter().enumerate() {
                for &v in &list[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Same intersections on a host where every subdivision edge carries `k`
    /// extra nodes; a vertex takes the new nodes of an edge when it holds
    /// both of its ends.
    pub fn refine(&self, k: usize) -> Representation {
        let (host, inserted) = self.host.refine(k);
        let hn = self.host.subdivision.n();
        let mut subtrees = BTreeMap::new();
        for (&v, s) in &self.subtrees {
            let mut mark = vec![false; hn];
            for &x in s {
                mark[x] = true;
            }
            let mut ns = s.clone();
            for (&(a, b), fresh) in &inserted {
                if mark[a] && mark[b] {
                    ns.extend(fresh);
                }
            }
            ns.sort_unstable();
            subtrees.insert(v, ns);
        }
        Representation { host, subtrees }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("representation serializes")
    }

    pub fn from_json(s: &str) -> Result<Representation> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptySet { vertex: usize },
    UnknownNode { vertex: usize, node: usize },
    Disconnected { vertex: usize },
    /// `uv` is an edge but the node sets are disjoint.
    MissingIntersection { u: usize, v: usize },
    /// The node sets meet but `uv` is not an edge.
    SpuriousIntersection { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks that `rep` is a representation of `g`: node sets connected in the
/// subdivision and intersecting exactly along the edges of `g`.
pub fn verify_representation(g: &Graph, rep: &Representation) -> Result<Report> {
    let keys: Vec<usize> = rep.subtrees.keys().copied().collect();
    if keys.len() != g.n() || keys.iter().enumerate().any(|(i, &k)| i != k) {
        return structural(format!(
            "representation keys do not match the {} vertices of the graph",
            g.n()
        ));
    }
    rep.host.validate()?;
    let host = &rep.host.subdivision;
    let mut violations = Vec::new();
    let mut sane = vec![true; g.n()];
    for (&v, s) in &rep.subtrees {
        if s.is_empty() {
            violations.push(Violation::EmptySet { vertex: v });
            sane[v] = false;
            continue;
        }
        if let Some(&x) = s.iter().find(|&&x| x >= host.n()) {
            violations.push(Violation::UnknownNode { vertex: v, node: x });
            sane[v] = false;
            continue;
        }
        if !host.is_connected_set(s) {
            violations.push(Violation::Disconnected { vertex: v });
        }
    }
    let mut sorted: Vec<Vec<usize>> = Vec::with_capacity(g.n());
    for s in rep.subtrees.values() {
        let mut s = s.clone();
        s.sort_unstable();
        s.dedup();
        sorted.push(s);
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !sane[u] || !sane[v] {
                continue;
            }
            let meet = sorted_intersect(&sorted[u], &sorted[v]);
            match (g.has_edge(u, v), meet) {
                (true, false) => violations.push(Violation::MissingIntersection { u, v }),
                (false, true) => violations.push(Violation::SpuriousIntersection { u, v }),
                _ => {}
            }
        }
    }
    Ok(Report { valid: violations.is_empty(), violations })
}

pub(crate) fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Checks a vertex set argument against `0..n`.
pub(crate) fn check_vertices(g: &Graph, set: &[usize], what: &str) -> Result<()> {
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return argument(format!("{what}: vertex {v} out of range"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_on_single_edge() {
        let g = Graph::complete(2);
        let host = HostModel::trivial(&Graph::complete(2));
        let rep = Representation::new(host, vec![vec![0], vec![0, 1]]);
        assert!(verify_representation(&g, &rep).unwrap().valid);
    }

    #[test]
    fn missing_edge_is_reported() {
        let g = Graph::new(2);
        let host = HostModel::trivial(&Graph::complete(2));
        let rep = Representation::new(host, vec![vec![0], vec![0]]);
        let r = verify_representation(&g, &rep).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations, vec![Violation::SpuriousIntersection { u: 0, v: 1 }]);
    }

    #[test]
    fn key_mismatch_is_structural() {
        let g = Graph::new(3);
        let host = HostModel::trivial(&Graph::complete(2));
        let rep = Representation::new(host, vec![vec![0], vec![1]]);
        assert!(matches!(verify_representation(&g, &rep), Err(Error::Structural(_))));
    }

    #[test]
    fn disconnected_set() {
        let g = Graph::new(1);
        let host = canonical_subdivision(&Graph::complete(2), 1);
        let rep = Representation::new(host, vec![vec![0, 1]]);
        let r = verify_representation(&g, &rep).unwrap();
        assert_eq!(r.violations, vec![Violation::Disconnected { vertex: 0 }]);
    }

    #[test]
    fn components() {
        assert!(connected_components(&Graph::new(0)).is_empty());
        assert_eq!(connected_components(&Graph::path(3)), vec![vec![0, 1, 2]]);
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        let sizes: Vec<usize> = connected_components(&g).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2]);
    }

    #[test]
    fn subdivision_sizes() {
        let p = canonical_subdivision(&Graph::complete(2), 1);
        assert_eq!(p.subdivision.n(), 4);
        assert_eq!(p.subdivision.m(), 3);
        assert_eq!(canonical_subdivision(&Graph::complete(3), 2).subdivision.n(), 15);
        assert_eq!(canonical_subdivision(&Graph::diamond(), 3).subdivision.n(), 34);
        for h in [Graph::complete(3), Graph::diamond(), Graph::star(3)] {
            canonical_subdivision(&h, 3).validate().unwrap();
        }
    }

    #[test]
    fn contracting_interiors_recovers_pattern() {
        let h = Graph::diamond();
        let host = canonical_subdivision(&h, 2);
        let mut back = Graph::new(h.n());
        for p in &host.edge_paths {
            assert!(p[1..p.len() - 1].iter().all(|&x| host.subdivision.degree(x) == 2));
            back.add_edge(p[0], *p.last().unwrap());
        }
        assert_eq!(back, h);
    }

    #[test]
    fn empty_graph_is_represented() {
        let rep = Representation::new(HostModel::trivial(&Graph::diamond()), vec![]);
        assert!(verify_representation(&Graph::new(0), &rep).unwrap().valid);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(4, &[(2, 1), (0, 3)]).unwrap();
        let s = g.to_json();
        assert_eq!(s, r#"{"n":4,"edges":[[0,3],[1,2]]}"#);
        assert_eq!(Graph::from_json(&s).unwrap(), g);
        let host = canonical_subdivision(&Graph::complete(3), 1);
        let rep = Representation::new(host, vec![vec![0, 3], vec![3, 4]]);
        let js = rep.to_json();
        assert_eq!(Representation::from_json(&js).unwrap().to_json(), js);
    }

    #[test]
    fn dimacs() {
        let g = Graph::from_dimacs("c hi\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(Graph::from_dimacs(&g.to_dimacs()).unwrap(), g);
        assert!(Graph::from_dimacs("e 1 2").is_err());
    }

    #[test]
    fn refine_keeps_intersections() {
        let host = canonical_subdivision(&Graph::complete(3), 1);
        let rep = Representation::new(host, vec![vec![0, 3], vec![3, 4, 1], vec![2]]);
        let g = rep.intersection_graph();
        let r2 = rep.refine(2);
        r2.host.validate().unwrap();
        assert!(verify_representation(&g, &r2).unwrap().valid);
    }
}
