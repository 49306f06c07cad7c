//! List coloring of k-thin graphs through a layered reachability digraph,
//! and its use on co-comparability graphs.
//!
//! A node of layer `r` is a matrix `beta[i][j]`: color `i` is forbidden on
//! the last `beta[i][j]` vertices of class `j` among `v_1..v_r`. Such a node
//! is reachable from layer 0 iff that constrained prefix problem is
//! solvable. Layers are huge, so nodes are materialized only when a
//! backward search from the sink touches them.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{argument, Result};
use crate::graph::Graph;
use crate::order::{min_chain_cover, transitive_orientation, Poset};

/// Vertex order, class partition and the per-class bound on earlier
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThinStructure {
    pub order: Vec<usize>,
    pub class_of: Vec<usize>,
    pub classes: usize,
    pub delta_less: Vec<usize>,
}

impl ThinStructure {
    /// Checks the consistency condition and recomputes the bounds.
    pub fn new(g: &Graph, order: Vec<usize>, class_of: Vec<usize>) -> Result<ThinStructure> {
        let n = g.n();
        if order.len() != n || class_of.len() != n {
            return argument("order and classes must cover every vertex");
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return argument("order is not a permutation");
            }
        }
        let classes = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let ts = ThinStructure { order, class_of, classes, delta_less: vec![0; classes] };
        let delta_less = (0..classes).map(|j| (0..n).map(|r| ts.earlier_neighbors(g, r, j).len()).max().unwrap_or(0)).collect();
        let ts = ThinStructure { delta_less, ..ts };
        if let Some((p, q, r)) = ts.inconsistency(g) {
            return argument(format!("order and partition are not consistent at positions {p} < {q} < {r}"));
        }
        Ok(ts)
    }

    /// Positions `p < q < r` with `v_p, v_q` in one class, `v_r v_p` an
    /// edge and `v_r v_q` not.
    pub fn inconsistency(&self, g: &Graph) -> Option<(usize, usize, usize)> {
        let n = self.order.len();
        for r in 0..n {
            let vr = self.order[r];
            for p in 0..r {
                let vp = self.order[p];
                if !g.has_edge(vr, vp) {
                    continue;
                }
                for q in p + 1..r {
                    let vq = self.order[q];
                    if self.class_of[vq] == self.class_of[vp] && !g.has_edge(vr, vq) {
                        return Some((p, q, r));
                    }
                }
            }
        }
        None
    }

    /// `N(v_r, j)_<` as positions, increasing.
    pub fn earlier_neighbors(&self, g: &Graph, r: usize, j: usize) -> Vec<usize> {
        let vr = self.order[r];
        (0..r).filter(|&p| self.class_of[self.order[p]] == j && g.has_edge(vr, self.order[p])).collect()
    }

    /// Size of every inner layer: `prod_j (delta_less[j] + 1)^s`.
    pub fn layer_size(&self, s: usize) -> u128 {
        self.delta_less.iter().map(|&d| (d as u128 + 1).pow(s as u32)).product()
    }
}

/// Order from a transitive orientation of the complement and classes from
/// a minimum chain cover of it (a proper coloring of `g`); `None` when the
/// complement is not a comparability graph.
pub fn thin_structure_from_coloring(g: &Graph) -> Option<ThinStructure> {
    let arcs = transitive_orientation(&g.complement()).ok()?;
    let p = Poset::new(g.n(), &arcs).expect("orientation is transitive");
    let order = p.linear_extension();
    let mut class_of = vec![0; g.n()];
    for (j, chain) in min_chain_cover(&p).iter().enumerate() {
        for &v in chain {
            class_of[v] = j;
        }
    }
    Some(ThinStructure::new(g, order, class_of).expect("coloring classes and comparability orders are consistent"))
}

/// One node of the layered digraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LayeredNode {
    pub layer: usize,
    /// `beta[i * k + j]`.
    pub beta: Vec<u16>,
}

/// The digraph for one list-coloring instance. Colors are dense `0..s`.
pub struct LayeredDigraph<'a> {
    g: &'a Graph,
    ts: &'a ThinStructure,
    /// Allowed dense colors per position `r` (0-based: `lists[r]` is `L(v_{r+1})`).
    lists: Vec<Vec<bool>>,
    s: usize,
    /// `|N(v_r, j)_<|` per position and class.
    earlier: Vec<Vec<usize>>,
}

impl<'a> LayeredDigraph<'a> {
    pub fn new(g: &'a Graph, ts: &'a ThinStructure, dense_lists: &[Vec<usize>], s: usize) -> Result<LayeredDigraph<'a>> {
        let n = g.n();
        if dense_lists.len() != n {
            return argument("one list per vertex is required");
        }
        let mut lists = Vec::with_capacity(n);
        for r in 0..n {
            let mut allowed = vec![false; s];
            for &c in &dense_lists[ts.order[r]] {
                if c >= s {
                    return argument(format!("color {c} outside 0..{s}"));
                }
                allowed[c] = true;
            }
            lists.push(allowed);
        }
        let earlier = (0..n).map(|r| (0..ts.classes).map(|j| ts.earlier_neighbors(g, r, j).len()).collect()).collect();
        Ok(LayeredDigraph { g, ts, lists, s, earlier })
    }

    pub fn colors(&self) -> usize {
        self.s
    }

    fn k(&self) -> usize {
        self.ts.classes
    }

    pub fn sink(&self) -> LayeredNode {
        LayeredNode { layer: self.g.n(), beta: vec![0; self.s * self.k()] }
    }

    /// Layer 0 holds one node per color of `L(v_1)`; they are not matrices
    /// and are represented implicitly.
    pub fn first_layer(&self) -> Vec<usize> {
        if self.g.n() == 0 {
            return vec![];
        }
        (0..self.s).filter(|&i| self.lists[0][i]).collect()
    }

    pub fn in_bounds(&self, u: &LayeredNode) -> bool {
        let k = self.k();
        u.beta.len() == self.s * k
            && (0..self.s).all(|i| (0..k).all(|j| (u.beta[i * k + j] as usize) <= self.ts.delta_less[j]))
    }

    /// `C(u)`: colors of the arcs entering `u`.
    pub fn entering_colors(&self, u: &LayeredNode) -> Vec<usize> {
        let r = u.layer - 1;
        let jr = self.ts.class_of[self.ts.order[r]];
        let k = self.k();
        (0..self.s).filter(|&i| self.lists[r][i] && u.beta[i * k + jr] == 0).collect()
    }

    /// Source of the arc of color `istar` entering `u` (layer >= 2), by the
    /// three-case rule.
    pub fn arc_source(&self, u: &LayeredNode, istar: usize) -> LayeredNode {
        let r = u.layer - 1;
        let jr = self.ts.class_of[self.ts.order[r]];
        let k = self.k();
        let mut beta = u.beta.clone();
        for i in 0..self.s {
            for j in 0..k {
                let b = u.beta[i * k + j];
                beta[i * k + j] = if i == istar {
                    (self.earlier[r][j] as u16).max(b)
                } else if j == jr {
                    b.saturating_sub(1)
                } else {
                    b
                };
            }
        }
        LayeredNode { layer: u.layer - 1, beta }
    }

    /// Counts capped at the class sizes of the prefix `v_1..v_r`; larger
    /// counts forbid nothing more.
    pub fn truncated(&self, u: &LayeredNode) -> LayeredNode {
        let k = self.k();
        let mut beta = u.beta.clone();
        for j in 0..k {
            let size = (0..u.layer).filter(|&p| self.ts.class_of[self.ts.order[p]] == j).count() as u16;
            for i in 0..self.s {
                beta[i * k + j] = beta[i * k + j].min(size);
            }
        }
        LayeredNode { layer: u.layer, beta }
    }

    /// The arc source derived from what the counts mean, up to
    /// [`truncated`](Self::truncated): the forbidden vertices are
    /// materialized as sets, `v_r` is dropped, the earlier neighbours of
    /// `v_r` gain the arc color, and each set is read back as a suffix
    /// length of its class.
    pub fn arc_source_by_sets(&self, u: &LayeredNode, istar: usize) -> LayeredNode {
        let r = u.layer - 1;
        let k = self.k();
        let members = |j: usize, upto: usize| -> Vec<usize> {
            (0..upto).filter(|&p| self.ts.class_of[self.ts.order[p]] == j).collect()
        };
        let mut beta = vec![0u16; self.s * k];
        for j in 0..k {
            let now = members(j, r + 1);
            let before = members(j, r);
            let nbrs = self.ts.earlier_neighbors(self.g, r, j);
            for i in 0..self.s {
                let take = (u.beta[i * k + j] as usize).min(now.len());
                let mut forbidden: BTreeSet<usize> = now[now.len() - take..].iter().copied().collect();
                forbidden.remove(&r);
                if i == istar {
                    forbidden.extend(nbrs.iter().copied());
                }
                let len = forbidden.len();
                assert!(
                    before[before.len() - len..].iter().all(|p| forbidden.contains(p)),
                    "forbidden vertices are not a suffix of their class"
                );
                beta[i * k + j] = len as u16;
            }
        }
        LayeredNode { layer: r, beta }
    }

    /// Every node of an inner layer, for exhaustive checks on tiny instances.
    pub fn materialize_layer(&self, r: usize) -> Vec<LayeredNode> {
        let k = self.k();
        let dims: Vec<usize> = (0..self.s * k).map(|idx| self.ts.delta_less[idx % k] + 1).collect();
        let total: usize = dims.iter().product();
        (0..total)
            .map(|mut code| {
                let beta = dims
                    .iter()
                    .map(|&d| {
                        let b = code % d;
                        code /= d;
                        b as u16
                    })
                    .collect();
                LayeredNode { layer: r, beta }
            })
            .collect()
    }
}

/// Counters checked during a solve.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes_materialized: usize,
    pub max_in_degree: usize,
    /// Sources that fell outside their layer (must stay 0).
    pub out_of_bounds: usize,
    /// Nodes with more than `s` entering arcs (must stay 0).
    pub in_degree_violations: usize,
}

/// Proper coloring respecting `lists` (arbitrary color ids), or `None`.
/// Among all solutions the lexicographically smallest dense color sequence
/// along the order is returned.
pub fn solve_list_coloring(g: &Graph, ts: &ThinStructure, lists: &[Vec<usize>]) -> Result<Option<Vec<usize>>> {
    Ok(solve_list_coloring_with_stats(g, ts, lists)?.0)
}

pub fn solve_list_coloring_with_stats(
    g: &Graph,
    ts: &ThinStructure,
    lists: &[Vec<usize>],
) -> Result<(Option<Vec<usize>>, SolveStats)> {
    let n = g.n();
    if lists.len() != n {
        return argument("one list per vertex is required");
    }
    if ts.order.len() != n {
        return argument("thin structure does not match the graph");
    }
    let palette: Vec<usize> = lists.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let dense: Vec<Vec<usize>> =
        lists.iter().map(|l| l.iter().map(|c| palette.binary_search(c).unwrap()).collect()).collect();
    let s = palette.len();
    let mut stats = SolveStats::default();
    if n == 0 {
        return Ok((Some(vec![]), stats));
    }
    if lists.iter().any(|l| l.is_empty()) {
        return Ok((None, stats));
    }
    let d = LayeredDigraph::new(g, ts, &dense, s)?;
    let mut search = Search { d: &d, memo: HashMap::new(), preds: HashMap::new(), stats: &mut stats };
    let sink = d.sink();
    if !search.reachable(&sink) {
        return Ok((None, stats));
    }
    // forward pass over good nodes for the smallest color sequence
    let mut succ: HashMap<LayeredNode, Vec<(usize, LayeredNode)>> = HashMap::new();
    for (u, ps) in &search.preds {
        if !search.memo[u] {
            continue;
        }
        for (c, w) in ps {
            if w.layer >= 1 && search.memo.get(w) == Some(&true) {
                succ.entry(w.clone()).or_default().push((*c, u.clone()));
            }
        }
    }
    let mut seq = Vec::with_capacity(n);
    if n == 1 {
        seq.push(d.entering_colors(&sink)[0]);
    } else {
        let layer1: Vec<&LayeredNode> = succ.keys().filter(|u| u.layer == 1).collect();
        let c1 = layer1.iter().map(|u| d.entering_colors(u)[0]).min().expect("a good path exists");
        seq.push(c1);
        let mut frontier: BTreeSet<LayeredNode> =
            layer1.into_iter().filter(|u| d.entering_colors(u).contains(&c1)).cloned().collect();
        for _ in 2..=n {
            let best = frontier.iter().flat_map(|w| &succ[w]).map(|(c, _)| *c).min().expect("good nodes lead to the sink");
            let next: BTreeSet<LayeredNode> = frontier
                .iter()
                .flat_map(|w| &succ[w])
                .filter(|(c, _)| *c == best)
                .map(|(_, u)| u.clone())
                .collect();
            seq.push(best);
            frontier = next.into_iter().filter(|u| u.layer == d.g.n() || succ.contains_key(u)).collect();
        }
    }
    let mut coloring = vec![0; n];
    for (r, &c) in seq.iter().enumerate() {
        coloring[ts.order[r]] = palette[c];
    }
    debug_assert!(is_list_coloring(g, lists, &coloring));
    Ok((Some(coloring), stats))
}

struct Search<'a, 'b> {
    d: &'a LayeredDigraph<'b>,
    memo: HashMap<LayeredNode, bool>,
    preds: HashMap<LayeredNode, Vec<(usize, LayeredNode)>>,
    stats: &'a mut SolveStats,
}

impl Search<'_, '_> {
    fn reachable(&mut self, u: &LayeredNode) -> bool {
        if let Some(&r) = self.memo.get(u) {
            return r;
        }
        self.stats.nodes_materialized += 1;
        let colors = self.d.entering_colors(u);
        self.stats.max_in_degree = self.stats.max_in_degree.max(colors.len());
        if colors.len() > self.d.colors() {
            self.stats.in_degree_violations += 1;
        }
        let mut ok = false;
        let mut ps = Vec::new();
        if u.layer == 1 {
            // arcs from z_i for i in C(u), and C(u) lies inside L(v_1)
            ok = !colors.is_empty();
        } else {
            for &c in &colors {
                let w = self.d.arc_source(u, c);
                if !self.d.in_bounds(&w) {
                    self.stats.out_of_bounds += 1;
                }
                if self.reachable(&w) {
                    ok = true;
                }
                ps.push((c, w));
            }
        }
        self.preds.insert(u.clone(), ps);
        self.memo.insert(u.clone(), ok);
        ok
    }
}

pub fn is_list_coloring(g: &Graph, lists: &[Vec<usize>], coloring: &[usize]) -> bool {
    coloring.len() == g.n()
        && (0..g.n()).all(|v| lists[v].contains(&coloring[v]))
        && g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}

/// List coloring of a co-comparability graph; `Err` if the complement is
/// not a comparability graph.
pub fn solve_list_coloring_cocomparability(g: &Graph, lists: &[Vec<usize>]) -> Result<Option<Vec<usize>>> {
    let Some(ts) = thin_structure_from_coloring(g) else {
        return argument("complement is not a comparability graph");
    };
    let s = lists.iter().flatten().collect::<BTreeSet<_>>().len();
    // the classes are a minimum coloring, so more classes than colors is hopeless
    if ts.classes > s && g.n() > 0 {
        return Ok(None);
    }
    solve_list_coloring(g, &ts, lists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_list_coloring, random_cocomparability, Rng};

    fn all_lists(n: usize, colors: &[usize]) -> Vec<Vec<usize>> {
        vec![colors.to_vec(); n]
    }

    #[test]
    fn thin_structure_examples() {
        let cop4 = Graph::path(4).complement();
        assert!(thin_structure_from_coloring(&cop4).unwrap().classes <= 2);
        assert_eq!(thin_structure_from_coloring(&Graph::complete(5)).unwrap().classes, 5);
        assert_eq!(thin_structure_from_coloring(&Graph::new(4)).unwrap().classes, 1);
        assert!(thin_structure_from_coloring(&Graph::cycle(5).complement()).is_none());
    }

    #[test]
    fn small_examples() {
        let k1 = Graph::new(1);
        let ts = thin_structure_from_coloring(&k1).unwrap();
        let d = LayeredDigraph::new(&k1, &ts, &[vec![0, 1]], 2).unwrap();
        assert_eq!(d.first_layer().len(), 2);
        assert_eq!(d.entering_colors(&d.sink()).len(), 2);
        let k2 = Graph::complete(2);
        let ts = thin_structure_from_coloring(&k2).unwrap();
        assert_eq!(solve_list_coloring(&k2, &ts, &[vec![1], vec![1]]).unwrap(), None);
        let c4 = Graph::cycle(4);
        let col = solve_list_coloring_cocomparability(&c4, &all_lists(4, &[1, 2])).unwrap().unwrap();
        assert!(is_list_coloring(&c4, &all_lists(4, &[1, 2]), &col));
        assert_eq!(solve_list_coloring_cocomparability(&Graph::complete(3), &all_lists(3, &[1, 2])).unwrap(), None);
        assert_eq!(solve_list_coloring_cocomparability(&Graph::new(3), &all_lists(3, &[7])).unwrap(), Some(vec![7, 7, 7]));
    }

    #[test]
    fn two_codings_of_the_arc_rule_agree() {
        let mut rng = Rng::new(21);
        let mut compared = 0;
        for _ in 0..40 {
            let n = rng.range(2, 6);
            let g = random_cocomparability(n, 0.5, &mut rng);
            let ts = thin_structure_from_coloring(&g).unwrap();
            let s = rng.range(1, 3);
            let lists: Vec<Vec<usize>> = (0..n).map(|_| (0..s).collect()).collect();
            let d = LayeredDigraph::new(&g, &ts, &lists, s).unwrap();
            if ts.layer_size(s) > 5000 {
                continue;
            }
            for r in 2..=n {
                let layer = if r == n { vec![d.sink()] } else { d.materialize_layer(r) };
                if r < n {
                    assert_eq!(layer.len() as u128, ts.layer_size(s));
                }
                for u in &layer {
                    let cs = d.entering_colors(u);
                    assert!(cs.len() <= s);
                    for &c in &cs {
                        let a = d.arc_source(u, c);
                        assert_eq!(d.truncated(&a), d.arc_source_by_sets(u, c));
                        assert!(d.in_bounds(&a));
                        compared += 1;
                    }
                }
            }
        }
        assert!(compared > 100);
    }

    #[test]
    fn agrees_with_exhaustive_assignment() {
        let mut rng = Rng::new(4);
        for _ in 0..200 {
            let n = rng.range(1, 12);
            let g = random_cocomparability(n, 0.5, &mut rng);
            let s = rng.range(1, 3);
            let lists: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    let l: Vec<usize> = (1..=s).filter(|_| rng.chance(0.7)).collect();
                    if l.is_empty() { vec![1 + rng.below(s)] } else { l }
                })
                .collect();
            let ts = thin_structure_from_coloring(&g).unwrap();
            let (got, stats) = solve_list_coloring_with_stats(&g, &ts, &lists).unwrap();
            assert_eq!(stats.out_of_bounds, 0);
            assert_eq!(stats.in_degree_violations, 0);
            let brute = brute_list_coloring(&g, &lists).unwrap();
            assert_eq!(got.is_some(), brute.is_some());
            if let Some(c) = got {
                assert!(is_list_coloring(&g, &lists, &c));
            }
            assert_eq!(solve_list_coloring_cocomparability(&g, &lists).unwrap().is_some(), brute.is_some());
        }
    }
}
