//! Minimal separators: enumeration, and the candidates an H-representation
//! predicts for them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{argument, Result};
use crate::graph::{Graph, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum SeparatorList {
    Separators { separators: Vec<Vec<usize>> },
    Overflow { found: usize },
}

/// Components of `g - removed`.
fn components_without(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    g.components_avoiding(removed)
}

fn neighbourhood_of(g: &Graph, set: &[usize], inside: &[bool]) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for &v in set {
        for &u in g.neighbors(v) {
            if !inside[u] {
                out.insert(u);
            }
        }
    }
    out.into_iter().collect()
}

/// `S` is a minimal separator iff `g - S` has at least two components whose
/// neighbourhood is all of `S`.
pub fn is_minimal_separator(g: &Graph, s: &[usize]) -> bool {
    let mut removed = vec![false; g.n()];
    for &v in s {
        removed[v] = true;
    }
    let full = components_without(g, &removed)
        .iter()
        .filter(|c| {
            let mut inside = vec![false; g.n()];
            for &v in c.iter() {
                inside[v] = true;
            }
            neighbourhood_of(g, c, &inside).len() == s.len()
        })
        .count();
    !s.is_empty() && full >= 2
}

/// The neighbourhoods of the components of `g - removed`.
fn close_separators(g: &Graph, removed: &[bool], out: &mut Vec<Vec<usize>>) {
    for c in components_without(g, removed) {
        let mut inside = vec![false; g.n()];
        for &v in &c {
            inside[v] = true;
        }
        let s = neighbourhood_of(g, &c, &inside);
        if !s.is_empty() {
            out.push(s);
        }
    }
}

/// All minimal separators of a connected graph: start from the
/// component neighbourhoods of each `g - N[v]`, then, for each separator `S`
/// and `x ∈ S`, add those of `g - (S ∪ N(x))` until nothing new appears.
pub fn minimal_separators(g: &Graph, cap: usize) -> Result<SeparatorList> {
    if !g.is_connected() {
        return argument("minimal_separators needs a connected graph");
    }
    let n = g.n();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    let push = |cands: Vec<Vec<usize>>, found: &mut BTreeSet<Vec<usize>>, queue: &mut Vec<Vec<usize>>| {
        for s in cands {
            if found.insert(s.clone()) {
                queue.push(s);
            }
        }
    };
    for v in 0..n {
        let mut removed = vec![false; n];
        removed[v] = true;
        for &u in g.neighbors(v) {
            removed[u] = true;
        }
        let mut cands = Vec::new();
        close_separators(g, &removed, &mut cands);
        push(cands, &mut found, &mut queue);
    }
    let mut i = 0;
    while i < queue.len() {
        if found.len() > cap {
            return Ok(SeparatorList::Overflow { found: found.len() });
        }
        let s = queue[i].clone();
        i += 1;
        for &x in &s {
            let mut removed = vec![false; n];
            for &v in &s {
                removed[v] = true;
            }
            for &u in g.neighbors(x) {
                removed[u] = true;
            }
            let mut cands = Vec::new();
            close_separators(g, &removed, &mut cands);
            push(cands, &mut found, &mut queue);
        }
    }
    if found.len() > cap {
        return Ok(SeparatorList::Overflow { found: found.len() });
    }
    Ok(SeparatorList::Separators { separators: found.into_iter().collect() })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeparatorCandidate {
    /// Host edges chosen, as node pairs `(a, b)` with `a < b`.
    pub edges: Vec<(usize, usize)>,
    /// Vertices whose node set contains one of the edges.
    pub vertices: Vec<usize>,
}

/// Host edges grouped per pattern edge, each tagged with the vertices that
/// hold it; consecutive edges carrying the same vertices are merged since
/// they produce the same candidates.
fn edge_classes(rep: &Representation) -> Vec<Vec<((usize, usize), Vec<usize>)>> {
    let n = rep.subtrees.len();
    rep.host
        .edge_paths
        .iter()
        .map(|path| {
            let mut classes: Vec<((usize, usize), Vec<usize>)> = Vec::new();
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            for w in path.windows(2) {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                let holders: Vec<usize> = (0..n).filter(|&x| rep.set(x).binary_search(&a).is_ok() && rep.set(x).binary_search(&b).is_ok()).collect();
                // only edges of the union of the vertex subgraphs count
                if !holders.is_empty() && seen.insert(holders.clone()) {
                    classes.push(((a, b), holders));
                }
            }
            classes
        })
        .collect()
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Blocks of the pattern as lists of edge indices (into `h.edges()`), and
/// whether every block is a single edge or a cycle.
fn pattern_blocks(h: &Graph) -> (Vec<Vec<usize>>, bool) {
    let edges = h.edges();
    let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let key = |u: usize, v: usize| index[&(u.min(v), u.max(v))];
    let n = h.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn dfs(
        h: &Graph,
        v: usize,
        parent_edge: Option<usize>,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        stack: &mut Vec<usize>,
        blocks: &mut Vec<Vec<usize>>,
        key: &dyn Fn(usize, usize) -> usize,
    ) {
        disc[v] = *time;
        low[v] = *time;
        *time += 1;
        for &u in h.neighbors(v) {
            let e = key(u, v);
            if Some(e) == parent_edge {
                continue;
            }
            if disc[u] == usize::MAX {
                stack.push(e);
                dfs(h, u, Some(e), disc, low, time, stack, blocks, key);
                low[v] = low[v].min(low[u]);
                if low[u] >= disc[v] {
                    let mut block = Vec::new();
                    while let Some(f) = stack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            } else if disc[u] < disc[v] {
                stack.push(e);
                low[v] = low[v].min(disc[u]);
            }
        }
    }
    for v in 0..n {
        if disc[v] == usize::MAX {
            dfs(h, v, None, &mut disc, &mut low, &mut time, &mut stack, &mut blocks, &key);
        }
    }
    blocks.sort();
    let cactus = blocks.iter().all(|b| {
        let nodes: BTreeSet<usize> = b.iter().flat_map(|&i| [edges[i].0, edges[i].1]).collect();
        b.len() == 1 || nodes.len() == b.len()
    });
    (blocks, cactus)
}

/// Whether every block of `h` is an edge or a cycle.
pub fn is_cactus(h: &Graph) -> bool {
    pattern_blocks(h).1
}

/// Candidate separators from a representation. General mode picks at most
/// two edges on each subdivided pattern edge; cactus mode picks one edge,
/// or two edges on a common cycle. Candidates are deduplicated by vertex
/// set and sorted by it.
pub fn separator_candidates(g: &Graph, rep: &Representation, cactus_mode: bool) -> Result<Vec<SeparatorCandidate>> {
    if rep.subtrees.len() != g.n() {
        return argument(format!("representation has {} sets for {} vertices", rep.subtrees.len(), g.n()));
    }
    let classes = edge_classes(rep);
    let mut out: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    let offer = |vertices: Vec<usize>, edges: Vec<(usize, usize)>, out: &mut BTreeMap<Vec<usize>, Vec<(usize, usize)>>| {
        if vertices.is_empty() {
            return;
        }
        let mut edges = edges;
        edges.sort_unstable();
        match out.get(&vertices) {
            Some(old) if (old.len(), old) <= (edges.len(), &edges) => {}
            _ => {
                out.insert(vertices, edges);
            }
        }
    };
    if cactus_mode {
        let (blocks, cactus) = pattern_blocks(&rep.host.pattern);
        if !cactus {
            return argument("cactus mode needs a cactus pattern");
        }
        for block in &blocks {
            let pool: Vec<&((usize, usize), Vec<usize>)> = block.iter().flat_map(|&i| classes[i].iter()).collect();
            for (i, a) in pool.iter().enumerate() {
                offer(a.1.clone(), vec![a.0], &mut out);
                if block.len() > 1 {
                    for b in &pool[i + 1..] {
                        offer(union(&a.1, &b.1), vec![a.0, b.0], &mut out);
                    }
                }
            }
        }
    } else {
        // vertex set -> edges, grown one pattern edge at a time
        let mut layer: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        layer.insert(vec![], vec![]);
        for path in &classes {
            let mut next = layer.clone();
            for (vs, es) in &layer {
                for (i, a) in path.iter().enumerate() {
                    let mut choices = vec![(union(vs, &a.1), vec![a.0])];
                    for b in &path[i + 1..] {
                        choices.push((union(vs, &union(&a.1, &b.1)), vec![a.0, b.0]));
                    }
                    for (u, extra) in choices {
                        let mut e = es.clone();
                        e.extend(extra);
                        e.sort_unstable();
                        match next.get(&u) {
                            Some(old) if (old.len(), old) <= (e.len(), &e) => {}
                            _ => {
                                next.insert(u, e);
                            }
                        }
                    }
                }
            }
            layer = next;
        }
        for (vs, es) in layer {
            offer(vs, es, &mut out);
        }
    }
    Ok(out.into_iter().map(|(vertices, edges)| SeparatorCandidate { edges, vertices }).collect())
}

/// `(C(2n,2) + 2n + 1)^|E(H)|`, saturating.
pub fn general_candidate_bound(n: usize, pattern_edges: usize) -> u128 {
    let m = 2 * n as u128;
    let per = m * m.saturating_sub(1) / 2 + m + 1;
    (0..pattern_edges).fold(1u128, |acc, _| acc.saturating_mul(per))
}

/// `|E(C)|·(2n² + n)`.
pub fn cactus_separator_bound(n: usize, pattern_edges: usize) -> usize {
    pattern_edges * (2 * n * n + n)
}

/// `2n² − 3n` for circular-arc graphs.
pub fn circular_arc_separator_bound(n: usize) -> usize {
    (2 * n * n).saturating_sub(3 * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::HostModel;
    use crate::oracle::{brute_minimal_separators, random_cactus, random_graph, random_rep_on, random_tree, Rng};

    fn seps(g: &Graph) -> Vec<Vec<usize>> {
        match minimal_separators(g, usize::MAX).unwrap() {
            SeparatorList::Separators { separators } => separators,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(seps(&Graph::path(3)), vec![vec![1]]);
        let c6 = seps(&Graph::cycle(6));
        assert_eq!(c6.len(), 9);
        assert!(c6.iter().all(|s| s.len() == 2 && !Graph::cycle(6).has_edge(s[0], s[1])));
        assert!(seps(&Graph::complete(5)).is_empty());
        assert!(minimal_separators(&Graph::new(2), 10).is_err());
        assert_eq!(minimal_separators(&Graph::cycle(6), 5).unwrap(), SeparatorList::Overflow { found: 6 });
    }

    #[test]
    fn enumeration_matches_subset_search() {
        let mut rng = Rng::new(21);
        let mut done = 0;
        while done < 150 {
            let n = rng.range(1, 11);
            let g = random_graph(n, rng.range(2, 8) as f64 / 10.0, &mut rng);
            if !g.is_connected() {
                continue;
            }
            done += 1;
            let got = seps(&g);
            assert_eq!(got, brute_minimal_separators(&g).unwrap(), "{}", g.to_json());
            assert!(got.iter().all(|s| is_minimal_separator(&g, s)));
        }
    }

    #[test]
    fn path_host_candidates_are_cuts_on_a_line() {
        let host = HostModel::subdivide(&Graph::path(2), &[4]);
        let rep = Representation::new(host, vec![vec![0, 2], vec![2, 3, 4], vec![4, 5, 1], vec![3]]);
        let g = rep.intersection_graph();
        let cands = separator_candidates(&g, &rep, false).unwrap();
        assert!(cands.iter().all(|c| c.edges.len() <= 2 && !c.vertices.is_empty()));
        let vs: Vec<Vec<usize>> = cands.iter().map(|c| c.vertices.clone()).collect();
        for s in seps(&g) {
            assert!(vs.contains(&s));
        }
    }

    #[test]
    fn blocks_and_cactus_detection() {
        assert!(is_cactus(&Graph::cycle(5)));
        assert!(is_cactus(&Graph::star(3)));
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(is_cactus(&bowtie));
        assert!(!is_cactus(&Graph::diamond()));
        assert!(!is_cactus(&Graph::complete(4)));
    }

    #[test]
    fn coverage_on_random_instances() {
        let mut rng = Rng::new(22);
        let mut done = 0;
        while done < 200 {
            let cactus = done % 2 == 0;
            let h = if cactus {
                random_cactus(rng.range(1, 4), &mut rng)
            } else {
                [Graph::diamond(), Graph::complete(4), Graph::star(3), Graph::cycle(3)][rng.below(4)].clone()
            };
            let host = HostModel::subdivide(&h, &vec![rng.range(0, 4); h.m()]);
            let (g, rep) = random_rep_on(&host, rng.range(2, 11), rng.range(1, 5), &mut rng);
            if !g.is_connected() {
                continue;
            }
            done += 1;
            let truth = seps(&g);
            for mode in [false, true] {
                if mode && !cactus {
                    continue;
                }
                let cands = separator_candidates(&g, &rep, mode).unwrap();
                let vs: BTreeSet<Vec<usize>> = cands.iter().map(|c| c.vertices.clone()).collect();
                for s in &truth {
                    assert!(vs.contains(s), "mode {mode}: {s:?} missing for {}", g.to_json());
                }
                if mode {
                    assert!(cands.len() <= cactus_separator_bound(g.n(), h.m()));
                    assert!(truth.len() <= cactus_separator_bound(g.n(), h.m()));
                }
            }
        }
    }

    #[test]
    fn chordal_and_circular_arc_counts() {
        let mut rng = Rng::new(23);
        for _ in 0..30 {
            let t = random_tree(rng.range(2, 8), &mut rng);
            let host = HostModel::subdivide(&t, &vec![2; t.m()]);
            let (g, _) = random_rep_on(&host, 20, 5, &mut rng);
            if g.is_connected() {
                assert!(seps(&g).len() <= g.n());
            }
            let c = Graph::cycle(3);
            let host = HostModel::subdivide(&c, &[4, 4, 4]);
            let (g, rep) = random_rep_on(&host, rng.range(2, 13), 6, &mut rng);
            if g.is_connected() {
                let s = seps(&g);
                assert!(s.len() <= circular_arc_separator_bound(g.n()));
                let cands = separator_candidates(&g, &rep, true).unwrap();
                assert!(cands.len() <= cactus_separator_bound(g.n(), 3));
            }
        }
    }
}
