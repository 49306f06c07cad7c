//! Chordality, maximal cliques, interval recognition (optionally with the
//! first and last clique constrained) and domination on interval graphs.

use pq_tree::PQTree;
use serde::{Deserialize, Serialize};

use crate::bits::{neighborhoods, Bits};
use crate::error::{argument, Result};
use crate::graph::{check_vertices, connected_components, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chordality {
    /// Perfect elimination ordering: each vertex's later neighbours form a clique.
    Peo(Vec<usize>),
    /// A chordless cycle of length at least 4.
    Hole(Vec<usize>),
}

/// Maximum cardinality search; the reverse visiting order is a PEO exactly
/// when the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        done[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

pub fn is_peo(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        g.is_clique(&later)
    })
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    if is_peo(g, &order) {
        return Chordality::Peo(order);
    }
    Chordality::Hole(find_hole(g).expect("a graph without a PEO has a hole"))
}

/// A chordless cycle through some vertex `v` and two nonadjacent neighbours
/// `a, b`: `v`, then a shortest `a-b` path avoiding the rest of `N[v]`.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nv = g.neighbors(v);
        for (i, &a) in nv.iter().enumerate() {
            for &b in &nv[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nv {
                    if w != a && w != b {
                        blocked[w] = true;
                    }
                }
                if let Some(path) = shortest_path(g, a, b, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub(crate) fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut c = to;
            while c != from {
                c = parent[c];
                path.push(c);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(x) {
            if parent[w] == usize::MAX && !blocked[w] {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let adjacent_on_cycle = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != adjacent_on_cycle {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CliqueList {
    Cliques(Vec<Vec<usize>>),
    /// More than the cutoff; `found` = cutoff + 1.
    Overflow { found: usize },
}

/// All maximal cliques, each sorted, the list sorted. Chordal graphs go
/// through the PEO; others through Bron–Kerbosch with pivoting. With a
/// cutoff the enumeration stops once cutoff + 1 cliques are seen.
pub fn maximal_cliques(g: &Graph, cutoff: Option<usize>) -> CliqueList {
    let limit = cutoff.unwrap_or(usize::MAX);
    let mut out = match is_chordal(g) {
        Chordality::Peo(order) => peo_cliques(g, &order),
        Chordality::Hole(_) => {
            let nb = neighborhoods(g);
            let mut out = Vec::new();
            let n = g.n();
            if n > 0 {
                bron_kerbosch(&nb, Vec::new(), Bits::full(n), Bits::new(n), limit, &mut out);
            }
            out
        }
    };
    if out.len() > limit {
        return CliqueList::Overflow { found: limit.saturating_add(1) };
    }
    out.sort();
    CliqueList::Cliques(out)
}

/// Shorthand for the uncapped list.
pub fn all_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    match maximal_cliques(g, None) {
        CliqueList::Cliques(c) => c,
        CliqueList::Overflow { .. } => unreachable!(),
    }
}

fn peo_cliques(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let cand: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    let bits: Vec<Bits> = cand.iter().map(|c| Bits::from_slice(g.n(), c)).collect();
    let mut out = Vec::new();
    for (i, c) in cand.iter().enumerate() {
        let dominated = (0..cand.len()).any(|j| j != i && bits[i].is_subset(&bits[j]) && (cand[j].len() > c.len() || j < i));
        if !dominated {
            out.push(c.clone());
        }
    }
    out
}

fn bron_kerbosch(nb: &[Bits], r: Vec<usize>, p: Bits, x: Bits, limit: usize, out: &mut Vec<Vec<usize>>) {
    if out.len() > limit {
        return;
    }
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r;
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let px = p.or(&x);
    let pivot = px.iter().max_by_key(|&u| p.and_count(&nb[u])).unwrap();
    let mut p = p;
    let mut x = x;
    for v in p.minus(&nb[pivot]).to_vec() {
        let mut r2 = r.clone();
        r2.push(v);
        bron_kerbosch(nb, r2, p.and(&nb[v]), x.and(&nb[v]), limit, out);
        p.remove(v);
        x.insert(v);
        if out.len() > limit {
            return;
        }
    }
}

/// Maximal cliques in an order where every vertex occupies a consecutive
/// run of cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOrder {
    pub cliques: Vec<Vec<usize>>,
}

impl Serialize for CliqueOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cliques.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CliqueOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(CliqueOrder { cliques: Vec::deserialize(d)? })
    }
}

impl CliqueOrder {
    /// First and last clique index of every vertex (`None` if absent).
    pub fn spans(&self, n: usize) -> Vec<Option<(usize, usize)>> {
        let mut span: Vec<Option<(usize, usize)>> = vec![None; n];
        for (i, c) in self.cliques.iter().enumerate() {
            for &v in c {
                span[v] = Some(match span[v] {
                    None => (i, i),
                    Some((a, _)) => (a, i),
                });
            }
        }
        span
    }

    /// Checks: cliques are exactly the maximal cliques, each vertex's
    /// cliques are consecutive.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut mine: Vec<Vec<usize>> = self.cliques.clone();
        for c in &mut mine {
            c.sort_unstable();
        }
        mine.sort();
        if mine != all_maximal_cliques(g) {
            return false;
        }
        let spans = self.spans(g.n());
        for (v, sp) in spans.iter().enumerate() {
            let Some((a, b)) = *sp else { return false };
            if (a..=b).any(|i| !self.cliques[i].contains(&v)) {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalRefutation {
    Hole(Vec<usize>),
    AsteroidalTriple([usize; 3]),
    /// The requested ends lie in one component while other components exist.
    EndsSplitByComponents,
}

/// Components of `G - N[x]` as labels (`usize::MAX` on `N[x]`).
fn avoid_labels(g: &Graph, x: usize) -> Vec<usize> {
    let mut blocked = vec![false; g.n()];
    blocked[x] = true;
    for &w in g.neighbors(x) {
        blocked[w] = true;
    }
    let mut label = vec![usize::MAX; g.n()];
    for (i, comp) in g.components_avoiding(&blocked).into_iter().enumerate() {
        for v in comp {
            label[v] = i;
        }
    }
    label
}

/// Three pairwise nonadjacent vertices, each pair joined by a path avoiding
/// the neighbourhood of the third.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    let labels: Vec<Vec<usize>> = (0..n).map(|x| avoid_labels(g, x)).collect();
    let same = |x: usize, a: usize, b: usize| labels[x][a] != usize::MAX && labels[x][a] == labels[x][b];
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if same(a, b, c) && same(b, a, c) && same(c, a, b) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn is_asteroidal_triple(g: &Graph, t: [usize; 3]) -> bool {
    let [a, b, c] = t;
    if a == b || b == c || a == c || g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
        return false;
    }
    let check = |x: usize, p: usize, q: usize| {
        let l = avoid_labels(g, x);
        l[p] != usize::MAX && l[p] == l[q]
    };
    check(a, b, c) && check(b, a, c) && check(c, a, b)
}

/// Consecutive arrangement of the maximal cliques via a PQ-tree, or a hole
/// or asteroidal triple showing none exists.
pub fn interval_order(g: &Graph) -> std::result::Result<CliqueOrder, IntervalRefutation> {
    if let Chordality::Hole(h) = is_chordal(g) {
        return Err(IntervalRefutation::Hole(h));
    }
    let cliques = all_maximal_cliques(g);
    match arrange(g, &cliques) {
        Some(order) => Ok(order),
        None => Err(IntervalRefutation::AsteroidalTriple(
            find_asteroidal_triple(g).expect("chordal non-interval graph has an asteroidal triple"),
        )),
    }
}

fn arrange(g: &Graph, cliques: &[Vec<usize>]) -> Option<CliqueOrder> {
    let k = cliques.len();
    if k == 0 {
        return Some(CliqueOrder { cliques: vec![] });
    }
    let leaves: Vec<usize> = (0..k).collect();
    let mut tree = PQTree::from_leaves(&leaves).expect("distinct leaves");
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            member[v].push(i);
        }
    }
    for m in &member {
        if m.len() >= 2 {
            tree = tree.reduction(m).ok()?;
        }
    }
    tree.sort_lexicographically();
    let order = CliqueOrder { cliques: tree.frontier().into_iter().map(|i| cliques[i].clone()).collect() };
    order.is_valid_for(g).then_some(order)
}

/// Like [`interval_order`], but the first clique must contain `left` and,
/// if given, the last must contain `right`.
///
/// Each constrained end is forced by a pendant path `q - p` with `p` joined
/// to the end set: the enlarged graph is interval exactly when the wanted
/// arrangement exists (per connected component; the component holding
/// `left` goes first and the one holding `right` last).
pub fn interval_order_with_ends(
    g: &Graph,
    left: &[usize],
    right: Option<&[usize]>,
) -> Result<std::result::Result<CliqueOrder, IntervalRefutation>> {
    check_vertices(g, left, "left")?;
    if !g.is_clique(left) {
        return argument("left end is not a clique");
    }
    let right = right.unwrap_or(&[]);
    check_vertices(g, right, "right")?;
    if !g.is_clique(right) {
        return argument("right end is not a clique");
    }
    let comps = connected_components(g);
    let comp_of = |v: usize| comps.iter().position(|c| c.contains(&v)).unwrap();
    let cl = left.first().map(|&v| comp_of(v));
    let cr = right.first().map(|&v| comp_of(v));
    if let (Some(a), Some(b)) = (cl, cr) {
        if a == b && comps.len() > 1 {
            return Ok(Err(IntervalRefutation::EndsSplitByComponents));
        }
    }
    let mut blocks: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for (ci, comp) in comps.iter().enumerate() {
        let l: Vec<usize> = if cl == Some(ci) { left.to_vec() } else { vec![] };
        let r: Vec<usize> = if cr == Some(ci) { right.to_vec() } else { vec![] };
        let sub = g.induced(comp);
        let local = |set: &[usize]| -> Vec<usize> { set.iter().map(|v| comp.binary_search(v).unwrap()).collect() };
        let order = match constrained_connected(&sub, &local(&l), &local(&r)) {
            Ok(o) => o,
            Err(refutation) => {
                let lift = |v: usize| if v < comp.len() { comp[v] } else { v - comp.len() + g.n() };
                return Ok(Err(match refutation {
                    IntervalRefutation::Hole(h) => IntervalRefutation::Hole(h.into_iter().map(lift).collect()),
                    IntervalRefutation::AsteroidalTriple(t) => IntervalRefutation::AsteroidalTriple(t.map(lift)),
                    r => r,
                }));
            }
        };
        let lifted: Vec<Vec<usize>> =
            order.cliques.into_iter().map(|c| c.into_iter().map(|v| comp[v]).collect()).collect();
        let rank = if cl == Some(ci) {
            0
        } else if cr == Some(ci) {
            2
        } else {
            1
        };
        blocks.push((rank, lifted));
    }
    blocks.sort_by_key(|b| b.0);
    let order = CliqueOrder { cliques: blocks.into_iter().flat_map(|b| b.1).collect() };
    debug_assert!(order.is_valid_for(g), "{} {:?} {:?} {:?}", g.to_json(), left, right, order);
    Ok(Ok(order))
}

/// Constrained arrangement of a connected graph through the pendant gadget.
/// Refutations may mention the gadget vertices `n..n+4` (in the order
/// `p, q, p', q'`).
fn constrained_connected(
    g: &Graph,
    left: &[usize],
    right: &[usize],
) -> std::result::Result<CliqueOrder, IntervalRefutation> {
    let n = g.n();
    if left.is_empty() && right.is_empty() {
        return interval_order(g);
    }
    let mut big = Graph::new(n + 4);
    for (u, v) in g.edges() {
        big.add_edge(u, v);
    }
    let (p, q, p2, q2) = (n, n + 1, n + 2, n + 3);
    let mut used = vec![true; n + 4];
    if left.is_empty() {
        used[p] = false;
        used[q] = false;
    } else {
        big.add_edge(p, q);
        for &v in left {
            big.add_edge(p, v);
        }
    }
    if right.is_empty() {
        used[p2] = false;
        used[q2] = false;
    } else {
        big.add_edge(p2, q2);
        for &v in right {
            big.add_edge(p2, v);
        }
    }
    let keep: Vec<usize> = (0..n + 4).filter(|&v| used[v]).collect();
    let sub = big.induced(&keep);
    let back = |v: usize| keep[v];
    let order = match interval_order(&sub) {
        Ok(o) => o,
        Err(IntervalRefutation::Hole(h)) => return Err(IntervalRefutation::Hole(h.into_iter().map(back).collect())),
        Err(IntervalRefutation::AsteroidalTriple(t)) => return Err(IntervalRefutation::AsteroidalTriple(t.map(back))),
        Err(r) => return Err(r),
    };
    let mut cl: Vec<Vec<usize>> = order
        .cliques
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(back).collect();
            c.sort_unstable();
            c
        })
        .collect();
    // orient so that the left gadget (or, lacking one, the right) is at the front
    let front_marker = if left.is_empty() { q2 } else { q };
    let at_front = cl.first().is_some_and(|c| c.contains(&front_marker));
    if !at_front {
        cl.reverse();
    }
    if left.is_empty() {
        cl.reverse();
    }
    let cliques: Vec<Vec<usize>> = cl
        .into_iter()
        .map(|c| c.into_iter().filter(|&v| v < n).collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .collect();
    // drop the trimmed end cliques that are not maximal in g
    let mut out: Vec<Vec<usize>> = Vec::new();
    for c in cliques {
        let cb = Bits::from_slice(n, &c);
        if out.last().is_some_and(|l| cb.is_subset(&Bits::from_slice(n, l))) {
            continue;
        }
        while out.last().is_some_and(|l| Bits::from_slice(n, l).is_subset(&cb)) {
            out.pop();
        }
        out.push(c);
    }
    Ok(CliqueOrder { cliques: out })
}

/// Interval of clique indices per vertex.
fn interval_spans(g: &Graph, order: &CliqueOrder) -> Vec<(usize, usize)> {
    order.spans(g.n()).into_iter().map(|s| s.expect("every vertex lies in a clique")).collect()
}

/// Dominates `targets` with vertices from `candidates`: repeatedly take the
/// undominated target whose interval ends first and add its candidate
/// neighbour (or itself) reaching furthest right, ties to the smaller id.
/// `None` if some target has no candidate in its closed neighbourhood.
pub fn greedy_targeted_domination(
    g: &Graph,
    order: &CliqueOrder,
    targets: &[bool],
    candidates: &[bool],
) -> Option<Vec<usize>> {
    let span = interval_spans(g, order);
    let mut dominated: Vec<bool> = targets.iter().map(|&t| !t).collect();
    let mut pending: Vec<usize> = (0..g.n()).filter(|&v| targets[v]).collect();
    pending.sort_by_key(|&v| (span[v].1, v));
    let mut chosen = Vec::new();
    for &u in &pending {
        if dominated[u] {
            continue;
        }
        let best = std::iter::once(u)
            .chain(g.neighbors(u).iter().copied())
            .filter(|&w| candidates[w])
            .max_by_key(|&w| (span[w].1, std::cmp::Reverse(w)))?;
        chosen.push(best);
        dominated[best] = true;
        for &w in g.neighbors(best) {
            dominated[w] = true;
        }
    }
    chosen.sort_unstable();
    chosen.dedup();
    Some(chosen)
}

/// Minimum dominating set of an interval graph by the standard greedy.
pub fn greedy_min_domset_interval(g: &Graph, order: &CliqueOrder) -> Vec<usize> {
    let all = vec![true; g.n()];
    greedy_targeted_domination(g, order, &all, &all).expect("every vertex dominates itself")
}

/// Dominating set that is minimum among those containing `x` (from the
/// first clique) and, if given, `y` (from the second clique).
pub fn domset_including(g: &Graph, order: &CliqueOrder, x: usize, y: Option<usize>) -> Result<Vec<usize>> {
    let Some(first) = order.cliques.first() else {
        return argument("empty clique order");
    };
    if x >= g.n() || !first.contains(&x) {
        return argument("x is not in the first clique");
    }
    if let Some(y) = y {
        if order.cliques.len() < 2 {
            return argument("a second clique is needed for y");
        }
        if y >= g.n() || !order.cliques[1].contains(&y) {
            return argument("y is not in the second clique");
        }
        let mut targets = vec![true; g.n()];
        for &v in [x, y].iter().chain(g.neighbors(x)).chain(g.neighbors(y)) {
            targets[v] = false;
        }
        let rest = greedy_targeted_domination(g, order, &targets, &vec![true; g.n()]).unwrap();
        let mut out: Vec<usize> = rest.into_iter().chain([x, y]).collect();
        out.sort_unstable();
        out.dedup();
        return Ok(out);
    }
    // two pendants u, u' on x; {u,x}, {u',x}, C_1, ... stays a clique order
    let n = g.n();
    let mut big = Graph::new(n + 2);
    for (a, b) in g.edges() {
        big.add_edge(a, b);
    }
    big.add_edge(n, x);
    big.add_edge(n + 1, x);
    let mut cliques = vec![vec![x, n], vec![x, n + 1]];
    cliques.extend(order.cliques.iter().cloned());
    let big_order = CliqueOrder { cliques };
    let d = greedy_min_domset_interval(&big, &big_order);
    debug_assert!(d.contains(&x));
    Ok(d.into_iter().filter(|&v| v < n).collect())
}

/// Maximum independent set of an interval graph: repeatedly keep the
/// interval ending first among those disjoint from the kept ones.
pub fn greedy_mis_interval(g: &Graph, order: &CliqueOrder) -> Vec<usize> {
    let span = interval_spans(g, order);
    let mut verts: Vec<usize> = (0..g.n()).collect();
    verts.sort_by_key(|&v| (span[v].1, v));
    let mut out = Vec::new();
    let mut last_end: Option<usize> = None;
    for v in verts {
        if last_end.is_none_or(|e| span[v].0 > e) {
            out.push(v);
            last_end = Some(span[v].1);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_interval_order, brute_min_domset, random_graph, random_subtree_rep, Rng};

    fn t3() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    #[test]
    fn chordality_examples() {
        match is_chordal(&Graph::cycle(4)) {
            Chordality::Hole(h) => assert!(is_hole(&Graph::cycle(4), &h) && h.len() == 4),
            _ => panic!(),
        }
        assert!(matches!(is_chordal(&Graph::diamond()), Chordality::Peo(_)));
        for seed in 0..20 {
            let (g, _) = random_subtree_rep(&Graph::complete(2), 10, seed);
            assert!(matches!(is_chordal(&g), Chordality::Peo(_)));
        }
    }

    #[test]
    fn holes_are_certified() {
        let mut rng = Rng::new(3);
        for _ in 0..100 {
            let g = random_graph(9, 0.35, &mut rng);
            match is_chordal(&g) {
                Chordality::Peo(o) => assert!(is_peo(&g, &o)),
                Chordality::Hole(h) => assert!(is_hole(&g, &h)),
            }
        }
    }

    #[test]
    fn clique_examples() {
        assert_eq!(all_maximal_cliques(&Graph::complete(4)), vec![vec![0, 1, 2, 3]]);
        let mut rng = Rng::new(9);
        for _ in 0..50 {
            let g = random_graph(10, 0.5, &mut rng);
            assert_eq!(all_maximal_cliques(&g), crate::oracle::brute_maximal_cliques(&g).unwrap());
        }
        for seed in 0..10 {
            let (g, _) = random_subtree_rep(&Graph::star(3), 30, seed);
            assert!(all_maximal_cliques(&g).len() <= 30);
        }
    }

    #[test]
    fn cutoff_overflows() {
        // complement of a perfect matching on 10 vertices: 2^5 maximal cliques
        let mut g = Graph::complete(10);
        g = g.complement();
        for i in 0..5 {
            g.add_edge(2 * i, 2 * i + 1);
        }
        let g = g.complement();
        assert_eq!(crate::oracle::brute_count_maximal_cliques(&g).unwrap(), 32);
        assert_eq!(maximal_cliques(&g, Some(10)), CliqueList::Overflow { found: 11 });
    }

    #[test]
    fn interval_examples() {
        let o = interval_order(&Graph::path(4)).unwrap();
        assert_eq!(o.cliques.len(), 3);
        assert!(o.is_valid_for(&Graph::path(4)));
        match interval_order(&t3()) {
            Err(IntervalRefutation::AsteroidalTriple(t)) => assert!(is_asteroidal_triple(&t3(), t)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(interval_order(&Graph::cycle(4)), Err(IntervalRefutation::Hole(_))));
    }

    #[test]
    fn interval_agrees_with_permutations() {
        let mut rng = Rng::new(11);
        for _ in 0..300 {
            let n = rng.range(1, 8);
            let g = random_graph(n, 0.45, &mut rng);
            let Ok(brute) = brute_interval_order(&g, None, None) else { continue };
            match interval_order(&g) {
                Ok(o) => {
                    assert!(brute);
                    assert!(o.is_valid_for(&g));
                }
                Err(IntervalRefutation::Hole(h)) => {
                    assert!(!brute);
                    assert!(is_hole(&g, &h));
                }
                Err(IntervalRefutation::AsteroidalTriple(t)) => {
                    assert!(!brute);
                    assert!(is_asteroidal_triple(&g, t));
                }
                Err(r) => panic!("{r:?}"),
            }
        }
    }

    #[test]
    fn ends_pendant_example() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let o = interval_order_with_ends(&g, &[0, 1, 2], None).unwrap().unwrap();
        assert_eq!(o.cliques, vec![vec![0, 1, 2], vec![0, 3]]);
        let o = interval_order_with_ends(&g, &[0, 3], None).unwrap().unwrap();
        assert_eq!(o.cliques, vec![vec![0, 3], vec![0, 1, 2]]);
        assert!(interval_order_with_ends(&g, &[1, 3], None).is_err());
    }

    #[test]
    fn ends_agree_with_permutations() {
        let mut rng = Rng::new(12);
        let mut checked = 0;
        while checked < 400 {
            let n = rng.range(1, 8);
            let g = random_graph(n, 0.5, &mut rng);
            let cliques = all_maximal_cliques(&g);
            let pick = |rng: &mut Rng| -> Vec<usize> {
                let c = &cliques[rng.below(cliques.len())];
                c.iter().copied().filter(|_| rng.chance(0.6)).collect()
            };
            let left = pick(&mut rng);
            let right = if rng.chance(0.5) { Some(pick(&mut rng)) } else { None };
            let Ok(brute) = brute_interval_order(&g, Some(&left), right.as_deref()) else { continue };
            let got = interval_order_with_ends(&g, &left, right.as_deref()).unwrap();
            assert_eq!(got.is_ok(), brute, "g={} left={left:?} right={right:?}", g.to_json());
            if let Ok(o) = got {
                assert!(o.is_valid_for(&g));
                assert!(left.iter().all(|v| o.cliques[0].contains(v)));
                if let Some(r) = &right {
                    assert!(r.iter().all(|v| o.cliques.last().unwrap().contains(v)));
                }
            }
            checked += 1;
        }
    }

    #[test]
    fn greedy_examples() {
        let p3 = Graph::path(3);
        assert_eq!(greedy_min_domset_interval(&p3, &interval_order(&p3).unwrap()), vec![1]);
        let p7 = Graph::path(7);
        assert_eq!(greedy_min_domset_interval(&p7, &interval_order(&p7).unwrap()).len(), 3);
        assert_eq!(brute_min_domset(&p7).unwrap().len(), 3);
        let k5 = Graph::complete(5);
        assert_eq!(greedy_min_domset_interval(&k5, &interval_order(&k5).unwrap()).len(), 1);
    }

    #[test]
    fn forced_vertex_examples() {
        let p3 = Graph::path(3);
        let o = interval_order(&p3).unwrap();
        let x = if o.cliques[0].contains(&0) { 0 } else { 2 };
        let d = domset_including(&p3, &o, x, None).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.contains(&x) && p3.is_dominating(&d));
        let k2 = Graph::complete(2);
        let o = interval_order(&k2).unwrap();
        assert_eq!(domset_including(&k2, &o, 0, None).unwrap(), vec![0]);
        let g = Graph::path(2).disjoint_union(&Graph::new(0));
        assert!(domset_including(&g, &CliqueOrder { cliques: vec![vec![0, 1]] }, 1, Some(0)).is_err());
    }

    #[test]
    fn interval_domination_matches_brute_force() {
        for seed in 0..150 {
            let (g, _) = random_subtree_rep(&Graph::complete(2), 1 + (seed % 10) as usize, seed);
            let o = interval_order(&g).unwrap();
            let d = greedy_min_domset_interval(&g, &o);
            let best = brute_min_domset(&g).unwrap().len();
            assert!(g.is_dominating(&d));
            assert_eq!(d.len(), best);
            let mis = greedy_mis_interval(&g, &o);
            assert!(g.is_independent(&mis));
            assert_eq!(mis.len(), crate::oracle::brute_mis(&g).unwrap().len());
            for &x in &o.cliques[0] {
                let dx = domset_including(&g, &o, x, None).unwrap();
                assert!(dx.contains(&x) && g.is_dominating(&dx));
                let forced = crate::oracle::brute_all_min_domsets(&g).unwrap().iter().any(|s| s.contains(&x));
                assert!(dx.len() >= d.len());
                assert_eq!(dx.len() == d.len(), forced);
                // brute force over sets containing x
                let mut best_x = usize::MAX;
                for m in 0u32..(1 << g.n()) {
                    if m >> x & 1 == 1 {
                        let s: Vec<usize> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
                        if g.is_dominating(&s) {
                            best_x = best_x.min(s.len());
                        }
                    }
                }
                assert_eq!(dx.len(), best_x);
                if o.cliques.len() >= 2 {
                    for &y in &o.cliques[1] {
                        let dxy = domset_including(&g, &o, x, Some(y)).unwrap();
                        let mut best_xy = usize::MAX;
                        for m in 0u32..(1 << g.n()) {
                            if m >> x & 1 == 1 && m >> y & 1 == 1 {
                                let s: Vec<usize> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
                                if g.is_dominating(&s) {
                                    best_xy = best_xy.min(s.len());
                                }
                            }
                        }
                        assert!(dxy.contains(&x) && dxy.contains(&y) && g.is_dominating(&dxy));
                        assert_eq!(dxy.len(), best_xy);
                    }
                }
            }
        }
    }
}
