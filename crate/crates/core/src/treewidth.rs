//! Tree decompositions at desk scale and the FPT routines that run on
//! them: k-clique and list-k-colouring on graphs whose treewidth is
//! bounded by a function of the clique number.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::clique::max_clique_exact;
use crate::error::{argument, Error, Result};
use crate::graph::Graph;

/// Largest graph for which [`exact_treewidth`] runs.
pub const EXACT_TW_CAP: usize = 25;
/// Search nodes the exact branch and bound may visit before refusing.
pub const EXACT_TW_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub tree: Graph,
    pub bags: Vec<Vec<usize>>,
    pub width: usize,
}

impl TreeDecomposition {
    /// Tree is a tree, every vertex and edge is in a bag, and the bags
    /// holding a vertex form a subtree.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let t = &self.tree;
        if t.n() != self.bags.len() || t.n() == 0 || t.m() + 1 != t.n() || !t.is_connected() {
            return false;
        }
        if self.bags.iter().any(|b| b.iter().any(|&v| v >= g.n())) {
            return false;
        }
        let width = self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1);
        if width != self.width {
            return false;
        }
        let holds = |i: usize, v: usize| self.bags[i].contains(&v);
        let edges_ok = g.edges().iter().all(|&(u, v)| (0..t.n()).any(|i| holds(i, u) && holds(i, v)));
        let vertices_ok = (0..g.n()).all(|v| {
            let nodes: Vec<usize> = (0..t.n()).filter(|&i| holds(i, v)).collect();
            !nodes.is_empty() && t.is_connected_set(&nodes)
        });
        edges_ok && vertices_ok
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect()
}

fn eliminate(adj: &mut [u32], v: usize) -> u32 {
    let nb = adj[v];
    let mut rest = nb;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        adj[u] = (adj[u] | nb) & !(1 << u) & !(1 << v);
    }
    adj[v] = 0;
    nb
}

fn fill_in(adj: &[u32], v: usize) -> u32 {
    let nb = adj[v];
    let mut missing = 0;
    let mut rest = nb;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        missing += (nb & !adj[u] & !(1 << u)).count_ones();
    }
    missing / 2
}

/// Minor-min-width: contract a minimum-degree vertex into its neighbour of
/// least degree, recording the largest minimum degree seen.
fn minor_min_width(adj: &[u32], alive: u32) -> usize {
    let mut adj = adj.to_vec();
    let mut alive = alive;
    let mut lb = 0;
    while alive != 0 {
        let mut best = None;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = adj[v].count_ones();
            if best.map_or(true, |(bd, _)| d < bd) {
                best = Some((d, v));
            }
        }
        let (d, v) = best.unwrap();
        lb = lb.max(d as usize);
        alive &= !(1 << v);
        if d == 0 {
            continue;
        }
        let mut u_best = None;
        let mut rest = adj[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let du = adj[u].count_ones();
            if u_best.map_or(true, |(bd, _)| du < bd) {
                u_best = Some((du, u));
            }
        }
        let u = u_best.unwrap().1;
        let nb = adj[v];
        let mut rest = nb;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            adj[w] &= !(1 << v);
            if w != u {
                adj[w] |= 1 << u;
            }
        }
        adj[u] |= nb & !(1 << u);
        adj[v] = 0;
    }
    lb
}

fn min_fill_order_masks(adj: &[u32]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut adj = adj.to_vec();
    let mut alive: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    while alive != 0 {
        let mut best = None;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let key = (fill_in(&adj, v), adj[v].count_ones());
            if best.map_or(true, |(bk, _)| key < bk) {
                best = Some((key, v));
            }
        }
        let v = best.unwrap().1;
        width = width.max(eliminate(&mut adj, v).count_ones() as usize);
        alive &= !(1 << v);
        order.push(v);
    }
    (order, width)
}

/// Min-fill elimination order for graphs of any size, with its width.
pub fn min_fill_order(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    for _ in 0..n {
        let fill = |v: usize, adj: &[std::collections::BTreeSet<usize>]| {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut missing = 0;
            for (i, &a) in nb.iter().enumerate() {
                missing += nb[i + 1..].iter().filter(|b| !adj[a].contains(b)).count();
            }
            missing
        };
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (fill(v, &adj), adj[v].len(), v)).unwrap();
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        width = width.max(nb.len());
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    (order, width)
}

struct Search {
    best: usize,
    best_order: Vec<usize>,
    seen: HashMap<u32, usize>,
    nodes: u64,
}

impl Search {
    fn go(&mut self, adj: &[u32], alive: u32, width: usize, prefix: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > EXACT_TW_BUDGET {
            return Err(Error::Cap(format!("exact_treewidth: more than {EXACT_TW_BUDGET} search nodes")));
        }
        let left = alive.count_ones() as usize;
        if left == 0 || left - 1 <= width {
            if width < self.best {
                self.best = width;
                self.best_order = prefix.clone();
                let mut rest = alive;
                while rest != 0 {
                    self.best_order.push(rest.trailing_zeros() as usize);
                    rest &= rest - 1;
                }
            }
            return Ok(());
        }
        if width.max(minor_min_width(adj, alive)) >= self.best {
            return Ok(());
        }
        match self.seen.get(&alive) {
            Some(&w) if w <= width => return Ok(()),
            _ => {
                self.seen.insert(alive, width);
            }
        }
        let mut cands: Vec<(u32, u32, usize)> = Vec::new();
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let f = fill_in(adj, v);
            // a simplicial vertex can always go first
            if f == 0 {
                cands = vec![(0, adj[v].count_ones(), v)];
                break;
            }
            cands.push((f, adj[v].count_ones(), v));
        }
        cands.sort_unstable();
        for (_, deg, v) in cands {
            let w = width.max(deg as usize);
            if w >= self.best {
                continue;
            }
            let mut next = adj.to_vec();
            eliminate(&mut next, v);
            prefix.push(v);
            self.go(&next, alive & !(1 << v), w, prefix)?;
            prefix.pop();
        }
        Ok(())
    }
}

/// Exact treewidth with an optimal elimination order, by branch and bound
/// over elimination orders.
pub fn exact_treewidth(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n > EXACT_TW_CAP {
        return Err(Error::Cap(format!("exact_treewidth: n = {n} exceeds {EXACT_TW_CAP}")));
    }
    if n == 0 {
        return Ok((0, vec![]));
    }
    let adj = masks(g);
    let (order, width) = min_fill_order_masks(&adj);
    let alive = (1u32 << n) - 1;
    if minor_min_width(&adj, alive) >= width {
        return Ok((width, order));
    }
    let mut s = Search { best: width, best_order: order, seen: HashMap::new(), nodes: 0 };
    s.go(&adj, alive, 0, &mut Vec::new())?;
    Ok((s.best, s.best_order))
}

/// The decomposition built from an elimination order: each vertex's bag is
/// itself plus its later neighbours in the filled graph.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition { tree: Graph::new(1), bags: vec![vec![]], width: 0 };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    for &v in order {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        let mut bag = later;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    // bag i belongs to order[i]; its parent is the bag of the earliest later vertex
    let mut tree = Graph::new(n);
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        match bags[i].iter().filter(|&&u| u != v).map(|&u| pos[u]).min() {
            Some(p) => {
                tree.add_edge(i, p);
            }
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        tree.add_edge(w[0], w[1]);
    }
    let width = bags.iter().map(|b| b.len()).max().unwrap_or(1) - 1;
    TreeDecomposition { tree, bags, width }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum TwAnswer {
    /// Width at most the target; exact when `exact` is set.
    Decomposition { decomposition: TreeDecomposition, exact: bool },
    /// Treewidth is larger than the target; `lower_bound` exceeds it.
    Exceeds { lower_bound: usize },
}

/// A decomposition of width at most `t`, or a proof that none exists.
/// Exact up to `EXACT_TW_CAP` vertices; above it a min-fill decomposition
/// of width at most `5t` is accepted and a minor-min-width bound
/// above `t` is the refusal.
pub fn tree_decomposition(g: &Graph, t: usize) -> Result<TwAnswer> {
    if g.n() <= EXACT_TW_CAP {
        let (tw, order) = exact_treewidth(g)?;
        return Ok(if tw <= t {
            TwAnswer::Decomposition { decomposition: decomposition_from_order(g, &order), exact: true }
        } else {
            TwAnswer::Exceeds { lower_bound: tw }
        });
    }
    let (order, width) = min_fill_order(g);
    if width <= 5 * t {
        return Ok(TwAnswer::Decomposition { decomposition: decomposition_from_order(g, &order), exact: false });
    }
    let lb = large_lower_bound(g);
    if lb > t {
        return Ok(TwAnswer::Exceeds { lower_bound: lb });
    }
    Err(Error::Cap(format!("tree_decomposition: min-fill width {width} > 5·{t} and lower bound {lb} ≤ {t} at n = {}", g.n())))
}

/// Minor-min-width for graphs past the bitmask size.
fn large_lower_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut lb = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (adj[v].len(), v)).unwrap();
        lb = lb.max(adj[v].len());
        alive[v] = false;
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        if let Some(&u) = nb.iter().min_by_key(|&&u| (adj[u].len(), u)) {
            for &w in &nb {
                adj[w].remove(&v);
                if w != u {
                    adj[w].insert(u);
                    adj[u].insert(w);
                }
            }
        }
        adj[v].clear();
    }
    lb
}

/// The width bound `(tw(H) + 1)·ω − 1` for H-graphs.
pub fn width_bound(tw_h: usize) -> impl Fn(usize) -> usize {
    move |omega| ((tw_h + 1) * omega).saturating_sub(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum KCliqueAnswer {
    /// A `k`-clique; `from_refusal` marks the branch where the width
    /// target was exceeded.
    Found { clique: Vec<usize>, from_refusal: bool },
    /// No `k`-clique, decided on a decomposition of this width.
    Absent { width: usize },
    /// Treewidth exceeds `f(k)` yet there is no `k`-clique, so the graph is
    /// outside the promised class.
    PromiseViolated { lower_bound: usize, target: usize },
}

/// k-clique on a graph promised to satisfy `tw ≤ f(ω)`. With a
/// decomposition every clique sits in one bag, so bags are searched; when
/// the width target is refused a clique must exist and is searched for
/// directly.
pub fn k_clique_fpt(g: &Graph, k: usize, f: &dyn Fn(usize) -> usize) -> Result<KCliqueAnswer> {
    if k == 0 {
        return Ok(KCliqueAnswer::Found { clique: vec![], from_refusal: false });
    }
    let target = f(k);
    match tree_decomposition(g, target)? {
        TwAnswer::Decomposition { decomposition, .. } => {
            for bag in &decomposition.bags {
                if bag.len() < k {
                    continue;
                }
                let c = max_clique_exact(&g.induced(bag));
                if c.len() >= k {
                    let mut clique: Vec<usize> = c[..k].iter().map(|&i| bag[i]).collect();
                    clique.sort_unstable();
                    return Ok(KCliqueAnswer::Found { clique, from_refusal: false });
                }
            }
            Ok(KCliqueAnswer::Absent { width: decomposition.width })
        }
        TwAnswer::Exceeds { lower_bound } => {
            let c = max_clique_exact(g);
            if c.len() >= k {
                Ok(KCliqueAnswer::Found { clique: c[..k].to_vec(), from_refusal: true })
            } else {
                Ok(KCliqueAnswer::PromiseViolated { lower_bound, target })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum ListColoringAnswer {
    Coloring { coloring: Vec<usize>, width: usize },
    /// A clique with more vertices than colours.
    CliqueObstruction { clique: Vec<usize> },
    /// The DP over the decomposition found nothing.
    Infeasible { width: usize },
    PromiseViolated { lower_bound: usize, target: usize },
}

/// List colouring with colours `1..=k`: reject on a `(k + 1)`-clique,
/// otherwise colour by dynamic programming over a decomposition of width
/// at most `f(k)`.
pub fn list_k_coloring_fpt(g: &Graph, lists: &[Vec<usize>], k: usize, f: &dyn Fn(usize) -> usize) -> Result<ListColoringAnswer> {
    if lists.len() != g.n() {
        return argument(format!("{} lists for {} vertices", lists.len(), g.n()));
    }
    if let Some(bad) = lists.iter().flatten().find(|&&c| c == 0 || c > k) {
        return argument(format!("colour {bad} is outside 1..={k}"));
    }
    match k_clique_fpt(g, k + 1, f)? {
        KCliqueAnswer::Found { clique, .. } => return Ok(ListColoringAnswer::CliqueObstruction { clique }),
        KCliqueAnswer::PromiseViolated { lower_bound, target } => return Ok(ListColoringAnswer::PromiseViolated { lower_bound, target }),
        KCliqueAnswer::Absent { .. } => {}
    }
    let target = f(k);
    let td = match tree_decomposition(g, target)? {
        TwAnswer::Decomposition { decomposition, .. } => decomposition,
        TwAnswer::Exceeds { lower_bound } => return Ok(ListColoringAnswer::PromiseViolated { lower_bound, target }),
    };
    Ok(match color_on_decomposition(g, lists, &td) {
        Some(coloring) => ListColoringAnswer::Coloring { coloring, width: td.width },
        None => ListColoringAnswer::Infeasible { width: td.width },
    })
}

/// Bottom-up table of bag colourings that extend into the subtree, then a
/// top-down pick.
pub fn color_on_decomposition(g: &Graph, lists: &[Vec<usize>], td: &TreeDecomposition) -> Option<Vec<usize>> {
    let t = &td.tree;
    let nodes = t.n();
    // root at 0; parents and a post-order
    let mut parent = vec![usize::MAX; nodes];
    let mut order = vec![0];
    let mut seen = vec![false; nodes];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for &y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                order.push(y);
            }
        }
        i += 1;
    }
    let proper = |bag: &[usize], col: &[usize]| {
        bag.iter().enumerate().all(|(a, &u)| bag[a + 1..].iter().enumerate().all(|(b, &v)| !g.has_edge(u, v) || col[a] != col[a + 1 + b]))
    };
    let assignments = |bag: &[usize]| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![]];
        for &v in bag {
            let mut opts = lists[v].clone();
            opts.sort_unstable();
            opts.dedup();
            out = out.into_iter().flat_map(|p| opts.iter().map(move |&c| {
                let mut q = p.clone();
                q.push(c);
                q
            })).collect();
        }
        out.retain(|c| proper(bag, c));
        out
    };
    let project = |from: &[usize], col: &[usize], onto: &[usize]| -> Vec<usize> {
        onto.iter().map(|v| from.iter().position(|u| u == v).map_or(0, |p| col[p])).collect()
    };
    let mut tables: Vec<Vec<Vec<usize>>> = vec![vec![]; nodes];
    for &x in order.iter().rev() {
        let bag = &td.bags[x];
        let children: Vec<usize> = t.neighbors(x).iter().copied().filter(|&y| parent[y] == x).collect();
        let mut table = assignments(bag);
        for &c in &children {
            let shared: Vec<usize> = bag.iter().copied().filter(|v| td.bags[c].contains(v)).collect();
            let keys: std::collections::HashSet<Vec<usize>> = tables[c].iter().map(|col| project(&td.bags[c], col, &shared)).collect();
            table.retain(|col| keys.contains(&project(bag, col, &shared)));
        }
        if table.is_empty() {
            return None;
        }
        tables[x] = table;
    }
    let mut colour = vec![0usize; g.n()];
    let mut chosen: Vec<Option<usize>> = vec![None; nodes];
    for &x in &order {
        let bag = &td.bags[x];
        let pick = if parent[x] == usize::MAX {
            0
        } else {
            let p = parent[x];
            let pcol = &tables[p][chosen[p].unwrap()];
            let shared: Vec<usize> = bag.iter().copied().filter(|v| td.bags[p].contains(v)).collect();
            let want = project(&td.bags[p], pcol, &shared);
            tables[x].iter().position(|col| project(bag, col, &shared) == want).unwrap()
        };
        chosen[x] = Some(pick);
        for (a, &v) in bag.iter().enumerate() {
            colour[v] = tables[x][pick][a];
        }
    }
    Some(colour)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthBoundCheck {
    pub tw_graph: usize,
    pub tw_pattern: usize,
    pub omega: usize,
    pub bound: usize,
    pub holds: bool,
}

/// Compares the exact treewidth of `g` with `(tw(h) + 1)·ω(g) − 1`.
pub fn check_width_bound(g: &Graph, h: &Graph) -> Result<WidthBoundCheck> {
    let (tw_graph, _) = exact_treewidth(g)?;
    let (tw_pattern, _) = exact_treewidth(h)?;
    let omega = max_clique_exact(g).len();
    let bound = width_bound(tw_pattern)(omega);
    Ok(WidthBoundCheck { tw_graph, tw_pattern, omega, bound, holds: tw_graph <= bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::HostModel;
    use crate::listcolor::is_list_coloring;
    use crate::oracle::{brute_has_clique, brute_list_coloring, brute_treewidth, random_graph, random_rep_on, random_tree, Rng};

    #[test]
    fn small_examples() {
        let mut rng = Rng::new(3);
        let tree = random_tree(12, &mut rng);
        assert_eq!(exact_treewidth(&tree).unwrap().0, 1);
        assert_eq!(tree_decomposition(&Graph::complete(5), 3).unwrap(), TwAnswer::Exceeds { lower_bound: 4 });
        assert_eq!(exact_treewidth(&Graph::cycle(7)).unwrap().0, 2);
        assert_eq!(exact_treewidth(&Graph::new(0)).unwrap().0, 0);
        assert_eq!(exact_treewidth(&Graph::new(3)).unwrap().0, 0);
        // 4x4 grid
        let mut grid = Graph::new(16);
        for r in 0..4 {
            for c in 0..4 {
                if c < 3 {
                    grid.add_edge(4 * r + c, 4 * r + c + 1);
                }
                if r < 3 {
                    grid.add_edge(4 * r + c, 4 * r + c + 4);
                }
            }
        }
        assert_eq!(exact_treewidth(&grid).unwrap().0, 4);
    }

    #[test]
    fn exact_matches_subset_recurrence() {
        let mut rng = Rng::new(11);
        for _ in 0..200 {
            let n = rng.range(1, 13);
            let g = random_graph(n, rng.range(1, 8) as f64 / 10.0, &mut rng);
            let (tw, order) = exact_treewidth(&g).unwrap();
            assert_eq!(tw, brute_treewidth(&g).unwrap(), "{}", g.to_json());
            let td = decomposition_from_order(&g, &order);
            assert!(td.is_valid_for(&g));
            assert_eq!(td.width, tw);
        }
    }

    #[test]
    fn fpt_routines_against_brute_force() {
        let mut rng = Rng::new(12);
        for round in 0..120 {
            let h = [Graph::path(2), Graph::cycle(3), Graph::star(3), Graph::diamond()][round % 4].clone();
            let host = HostModel::subdivide(&h, &vec![rng.range(0, 3); h.m()]);
            let (g, _) = random_rep_on(&host, rng.range(1, 14), rng.range(1, 5), &mut rng);
            let tw_h = exact_treewidth(&h).unwrap().0;
            let f = width_bound(tw_h);
            for k in 1..5 {
                let want = brute_has_clique(&g, k).unwrap();
                match k_clique_fpt(&g, k, &f).unwrap() {
                    KCliqueAnswer::Found { clique, .. } => {
                        assert!(want && clique.len() == k && g.is_clique(&clique));
                    }
                    KCliqueAnswer::Absent { .. } => assert!(!want),
                    other => panic!("{other:?}"),
                }
            }
            let k = rng.range(1, 4);
            let lists: Vec<Vec<usize>> = (0..g.n()).map(|_| (1..=k).filter(|_| rng.chance(0.7)).collect()).collect();
            let want = brute_list_coloring(&g, &lists).unwrap();
            match list_k_coloring_fpt(&g, &lists, k, &f).unwrap() {
                ListColoringAnswer::Coloring { coloring, .. } => {
                    assert!(want.is_some());
                    assert!(is_list_coloring(&g, &lists, &coloring));
                }
                ListColoringAnswer::CliqueObstruction { clique } => {
                    assert!(want.is_none() && clique.len() == k + 1 && g.is_clique(&clique));
                }
                ListColoringAnswer::Infeasible { .. } => assert!(want.is_none()),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn promise_violation_is_reported() {
        // the grid has no triangle but treewidth 4 > f(3) for an interval promise
        let mut grid = Graph::new(16);
        for r in 0..4 {
            for c in 0..4 {
                if c < 3 {
                    grid.add_edge(4 * r + c, 4 * r + c + 1);
                }
                if r < 3 {
                    grid.add_edge(4 * r + c, 4 * r + c + 4);
                }
            }
        }
        let f = |w: usize| w.saturating_sub(1);
        assert!(matches!(k_clique_fpt(&grid, 3, &f).unwrap(), KCliqueAnswer::PromiseViolated { .. }));
        assert!(matches!(k_clique_fpt(&Graph::complete(4), 4, &f).unwrap(), KCliqueAnswer::Found { .. }));
        assert!(matches!(list_k_coloring_fpt(&Graph::complete(3), &vec![vec![1, 2]; 3], 2, &f).unwrap(), ListColoringAnswer::CliqueObstruction { .. }));
    }

    #[test]
    fn large_graphs_use_the_heuristic() {
        let mut rng = Rng::new(5);
        let tree = random_tree(40, &mut rng);
        match tree_decomposition(&tree, 1).unwrap() {
            TwAnswer::Decomposition { decomposition, exact } => {
                assert!(!exact);
                assert!(decomposition.is_valid_for(&tree));
                assert_eq!(decomposition.width, 1);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(tree_decomposition(&Graph::complete(30), 4).unwrap(), TwAnswer::Exceeds { lower_bound: 29 }));
    }

    #[test]
    fn width_bound_on_generated_instances() {
        let mut rng = Rng::new(77);
        for round in 0..60 {
            let h = [Graph::cycle(3), Graph::star(3), Graph::diamond(), Graph::complete(4)][round % 4].clone();
            let host = HostModel::subdivide(&h, &vec![rng.range(0, 3); h.m()]);
            let (g, _) = random_rep_on(&host, rng.range(1, 16), rng.range(1, 5), &mut rng);
            let c = check_width_bound(&g, &h).unwrap();
            assert!(c.holds, "{c:?}");
            assert!(c.omega <= c.tw_graph + 1);
        }
    }
}
