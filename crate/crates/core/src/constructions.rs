//! Gadget builders for the hardness reductions: the poset-to-diamond
//! reduction with its blocker generalisation, and complements of
//! 2-subdivisions as H-graphs. Every constructive output comes with a
//! representation that the verifier accepts.

use serde::Serialize;

use crate::error::{argument, Result};
use crate::graph::{verify_representation, Graph, HostModel, Representation};
use crate::order::{incomparability_graph, realizer_intersection, IntervalOrderSpec, Poset};

/// The star S_3 with every edge subdivided once: center 0, middle
/// vertices 1..=3, leaves 4..=6 (leaf `3 + i` hangs on `i`).
pub fn t3_gadget() -> Graph {
    Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
}

/// Vertex layout of [`build_membership_instance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipInstance {
    pub graph: Graph,
    pub minima: Vec<usize>,
    pub maxima: Vec<usize>,
    /// First vertex of each copy of the gadget (7 consecutive ids).
    pub t_min: usize,
    pub t_max: usize,
}

/// Incomparability graph of a height-1 poset with a copy of
/// [`t3_gadget`] joined to the minima and another joined to the maxima.
/// Poset elements keep their ids; the copies follow at `|P|` and `|P|+7`.
pub fn build_membership_instance(p: &Poset) -> Result<MembershipInstance> {
    let (minima, maxima) = p.height1_split()?;
    let n = p.n();
    let base = incomparability_graph(p);
    let t = t3_gadget();
    let mut g = base.disjoint_union(&t).disjoint_union(&t);
    let (t_min, t_max) = (n, n + 7);
    for k in 0..7 {
        for &x in &minima {
            g.add_edge(x, t_min + k);
        }
        for &y in &maxima {
            g.add_edge(y, t_max + k);
        }
    }
    Ok(MembershipInstance { graph: g, minima, maxima, t_min, t_max })
}

/// The diamond with its three paths between the degree-3 nodes 0 and 1
/// each carrying `inner` nodes; returned with the node lists of the three
/// paths, each from node 0 to node 1.
fn diamond_host(inner: usize) -> (HostModel, [Vec<usize>; 3]) {
    let d = Graph::diamond();
    // edges: (0,1), (0,2), (0,3), (1,2), (1,3)
    let side = 2;
    let host = HostModel::subdivide(&d, &[inner, side, side, inner - side - 1, inner - side - 1]);
    let p = &host.edge_paths;
    let via = |a: usize, b: usize| -> Vec<usize> {
        let mut out = p[a].clone();
        out.extend(p[b].iter().rev().skip(1));
        out
    };
    let paths = [p[0].clone(), via(1, 3), via(2, 4)];
    (host, paths)
}

/// Diamond representation of [`build_membership_instance`]`(p)` from three
/// interval orders whose intersection is `p`.
///
/// Each path from `u_min` (node 0) to `u_max` (node 1) carries, in order,
/// two private nodes for the min gadget, `n + 1` nodes for interval ends
/// `0..=n`, and two private nodes for the max gadget. A minimum takes the
/// prefix of every path up to its right end in that order, a maximum the
/// suffix from its left end. A realizer with fewer than three orders is
/// padded by repeating its last order.
pub fn realize_diamond_representation(p: &Poset, realizer: &[IntervalOrderSpec]) -> Result<Representation> {
    if realizer.is_empty() || realizer.len() > 3 {
        return argument(format!("expected 1 to 3 interval orders, got {}", realizer.len()));
    }
    let mut padded = realizer.to_vec();
    while padded.len() < 3 {
        padded.push(padded[padded.len() - 1].clone());
    }
    let realizer = &padded[..];
    let n = p.n();
    if realizer_intersection(realizer, n)? != *p {
        return argument("the interval orders do not intersect to the poset");
    }
    let inst = build_membership_instance(p)?;
    let (mins, maxs) = (&inst.minima, &inst.maxima);
    let norm: Vec<IntervalOrderSpec> = realizer.iter().map(|s| s.normalized(mins, maxs)).collect();
    let (host, paths) = diamond_host(n + 5);
    // node of interval end `e` on a path
    let at = |e: usize| 3 + e;
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); n + 14];
    for &x in mins {
        for (i, path) in paths.iter().enumerate() {
            let r = norm[i].endpoints[x].1.to_integer() as usize;
            sets[x].extend(&path[..=at(r)]);
        }
    }
    for &y in maxs {
        for (i, path) in paths.iter().enumerate() {
            let l = norm[i].endpoints[y].0.to_integer() as usize;
            sets[y].extend(&path[at(l)..]);
        }
    }
    // gadgets: center on the degree-3 node and its three neighbours,
    // middles on an edge going out, leaves on the far node of that edge
    for (first, flip) in [(inst.t_min, false), (inst.t_max, true)] {
        let pos = |path: &Vec<usize>, k: usize| if flip { path[path.len() - 1 - k] } else { path[k] };
        sets[first] = vec![pos(&paths[0], 0)];
        for (i, path) in paths.iter().enumerate() {
            sets[first].push(pos(path, 1));
            sets[first + 1 + i] = vec![pos(path, 1), pos(path, 2)];
            sets[first + 4 + i] = vec![pos(path, 2)];
        }
    }
    let rep = Representation::new(host, sets);
    let report = verify_representation(&inst.graph, &rep)?;
    assert!(report.valid, "diamond representation failed verification: {:?}", report.violations);
    Ok(rep)
}

/// Two degree-3 nodes joined by three internally disjoint paths of a
/// pattern graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiamondWitness {
    pub d_min: usize,
    pub d_max: usize,
    /// Node lists from `d_min` to `d_max`.
    pub paths: [Vec<usize>; 3],
}

impl DiamondWitness {
    pub fn validate(&self, h: &Graph) -> Result<()> {
        let mut inner: Vec<usize> = Vec::new();
        let mut direct = 0;
        for p in &self.paths {
            if p.len() < 2 || p[0] != self.d_min || p[p.len() - 1] != self.d_max {
                return argument("witness path does not join d_min to d_max");
            }
            if p.windows(2).any(|w| w[0] >= h.n() || w[1] >= h.n() || !h.has_edge(w[0], w[1])) {
                return argument("witness path uses a non-edge");
            }
            if p.len() == 2 {
                direct += 1;
            }
            inner.extend(&p[1..p.len() - 1]);
        }
        let total = inner.len();
        inner.sort_unstable();
        inner.dedup();
        if self.d_min == self.d_max || direct > 1 || inner.len() != total || inner.contains(&self.d_min) || inner.contains(&self.d_max)
        {
            return argument("witness paths are not internally disjoint");
        }
        Ok(())
    }
}

/// First diamond subdivision found by exhaustive search over pairs of
/// nodes and triples of simple paths.
pub fn find_diamond_witness(h: &Graph) -> Option<DiamondWitness> {
    fn paths_between(h: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = vec![a];
        let mut used = vec![false; h.n()];
        used[a] = true;
        fn rec(h: &Graph, b: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            let x = *cur.last().unwrap();
            if x == b {
                out.push(cur.clone());
                return;
            }
            for &y in h.neighbors(x) {
                if !used[y] {
                    used[y] = true;
                    cur.push(y);
                    rec(h, b, cur, used, out);
                    cur.pop();
                    used[y] = false;
                }
            }
        }
        rec(h, b, &mut cur, &mut used, &mut out);
        out.sort_by_key(|p| p.len());
        out
    }
    for a in 0..h.n() {
        for b in 0..h.n() {
            if a == b || h.degree(a) < 3 || h.degree(b) < 3 {
                continue;
            }
            let ps = paths_between(h, a, b);
            for i in 0..ps.len() {
                for j in i + 1..ps.len() {
                    for k in j + 1..ps.len() {
                        let w = DiamondWitness { d_min: a, d_max: b, paths: [ps[i].clone(), ps[j].clone(), ps[k].clone()] };
                        if w.validate(h).is_ok() {
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}

const BLOCKER_STEPS: usize = 6;

/// The blocker graph built from a pattern and a diamond witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockerSpec {
    pub pattern: Graph,
    pub witness: DiamondWitness,
    /// The witness edges at `d_min`, as pattern edge indices.
    pub marked: [usize; 3],
    /// The pattern with the marked edges subdivided twice.
    pub b0: Graph,
    /// Middle edges of the subdivided marked edges, in `b0`.
    pub middle: [(usize, usize); 3],
    /// `b0` without the middle edges.
    pub b1: Graph,
    /// `b1` with every edge subdivided five times. Vertices `0..|V(b1)|`
    /// are the nodes of `b1`.
    pub blocker: Graph,
    /// Blocker vertices on the side of the witness holding `d_min`, and on
    /// the side holding `d_max`.
    pub d_min_side: Vec<usize>,
    pub d_max_side: Vec<usize>,
    /// A representation of the blocker on the pattern.
    pub representation: Representation,
}

impl BlockerSpec {
    /// Vertices of the blocker within distance 2 of pattern node `x`.
    pub fn z(&self, x: usize) -> Vec<usize> {
        let g = &self.blocker;
        let mut out = vec![x];
        for &y in g.neighbors(x) {
            out.push(y);
            out.extend(g.neighbors(y).iter().copied().filter(|&z| z != x));
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn edge_index(h: &Graph, u: usize, v: usize) -> usize {
    let e = (u.min(v), u.max(v));
    h.edges().iter().position(|&f| f == e).unwrap()
}

/// Builds the blocker for `h` and `witness`.
pub fn build_blocker(h: &Graph, witness: &DiamondWitness) -> Result<BlockerSpec> {
    witness.validate(h)?;
    let edges = h.edges();
    let marked = [0, 1, 2].map(|i| edge_index(h, witness.paths[i][0], witness.paths[i][1]));
    // b0: subdivide every marked edge twice; new nodes follow the old ones
    let hn = h.n();
    let mut b0_edges: Vec<(usize, usize)> = Vec::new();
    let mut middle = [(0, 0); 3];
    for (e, &(u, v)) in edges.iter().enumerate() {
        match marked.iter().position(|&m| m == e) {
            None => b0_edges.push((u, v)),
            Some(i) => {
                // orient from d_min
                let (a, b) = if u == witness.d_min { (u, v) } else { (v, u) };
                let (s, t) = (hn + 2 * i, hn + 2 * i + 1);
                b0_edges.extend([(a, s), (s, t), (t, b)]);
                middle[i] = (s, t);
            }
        }
    }
    let b0 = Graph::from_edges(hn + 6, &b0_edges)?;
    let b1_edges: Vec<(usize, usize)> =
        b0.edges().into_iter().filter(|&(u, v)| !middle.iter().any(|&(s, t)| (s.min(t), s.max(t)) == (u, v))).collect();
    let b1 = Graph::from_edges(hn + 6, &b1_edges)?;
    let sub = HostModel::subdivide(&b1, &vec![BLOCKER_STEPS - 1; b1.m()]);
    let blocker = sub.subdivision.clone();

    // sides: components of the witness (in b0) minus the middle edges
    let mut on_witness = vec![false; hn + 6];
    let mut witness_edges: Vec<(usize, usize)> = Vec::new();
    for (i, p) in witness.paths.iter().enumerate() {
        for &x in p {
            on_witness[x] = true;
        }
        let (s, t) = middle[i];
        on_witness[s] = true;
        on_witness[t] = true;
        witness_edges.push((p[0], s));
        witness_edges.extend(p[1..].windows(2).map(|w| (w[0], w[1])));
        witness_edges.push((t, p[1]));
    }
    let blocked: Vec<bool> = on_witness.iter().map(|&w| !w).collect();
    // reach ignores the middle edges because they are not in b1
    let wg_b1 = Graph::from_edges(hn + 6, &witness_edges.iter().copied().filter(|&(u, v)| b1.has_edge(u, v)).collect::<Vec<_>>())?;
    let side = |start: usize| -> Vec<usize> {
        let reach = wg_b1.reach(start, &blocked);
        let mut out: Vec<usize> = (0..hn + 6).filter(|&x| reach[x]).collect();
        for (e, &(u, v)) in b1.edges().iter().enumerate() {
            if reach[u] && reach[v] && wg_b1.has_edge(u, v) {
                out.extend(&sub.edge_paths[e][1..BLOCKER_STEPS]);
            }
        }
        out.sort_unstable();
        out
    };
    let d_min_side = side(witness.d_min);
    let d_max_side = side(witness.d_max);

    let representation = blocker_representation(h, &marked, witness, &b1, &sub);
    let report = verify_representation(&blocker, &representation)?;
    assert!(report.valid, "blocker representation failed verification: {:?}", report.violations);
    Ok(BlockerSpec {
        pattern: h.clone(),
        witness: witness.clone(),
        marked,
        b0,
        middle,
        b1,
        blocker,
        d_min_side,
        d_max_side,
        representation,
    })
}

/// The blocker sits inside a subdivision of `h`: every blocker vertex gets
/// its own node plus the halves of its blocker edges.
fn blocker_representation(
    h: &Graph,
    marked: &[usize; 3],
    witness: &DiamondWitness,
    b1: &Graph,
    sub: &HostModel,
) -> Representation {
    let steps = BLOCKER_STEPS;
    // each blocker edge becomes two host edges
    let counts: Vec<usize> = (0..h.m()).map(|e| if marked.contains(&e) { 3 * steps * 2 - 1 } else { steps * 2 - 1 }).collect();
    let host = HostModel::subdivide(h, &counts);
    let hn = h.n();
    let nb = sub.subdivision.n();
    // host node of every blocker vertex
    let mut node = vec![usize::MAX; nb];
    for x in 0..hn {
        node[x] = x;
    }
    // b1 node ids beyond hn lie on marked edges: 2i and 2i+1 on marked[i]
    let oriented = |e: usize| -> Vec<usize> {
        let p = &host.edge_paths[e];
        if let Some(i) = marked.iter().position(|&m| m == e) {
            if p[0] != witness.paths[i][0] {
                return p.iter().rev().copied().collect();
            }
        }
        p.clone()
    };
    for (i, &e) in marked.iter().enumerate() {
        let p = oriented(e);
        node[hn + 2 * i] = p[2 * steps];
        node[hn + 2 * i + 1] = p[4 * steps];
    }
    // blocker edge paths run between b1 nodes; place their interiors on
    // the host path between the two end nodes
    for (e, &(u, v)) in b1.edges().iter().enumerate() {
        let (a, b) = (node[u], node[v]);
        let path = host
            .edge_paths
            .iter()
            .find_map(|p| {
                let ia = p.iter().position(|&x| x == a)?;
                let ib = p.iter().position(|&x| x == b)?;
                Some(if ia < ib { p[ia..=ib].to_vec() } else { p[ib..=ia].iter().rev().copied().collect() })
            })
            .expect("blocker edges follow host paths");
        for (k, &w) in sub.edge_paths[e].iter().enumerate() {
            node[w] = path[2 * k];
        }
    }
    let host_graph = &host.subdivision;
    let sets: Vec<Vec<usize>> = (0..nb)
        .map(|w| {
            let mut s = vec![node[w]];
            for &y in sub.subdivision.neighbors(w) {
                let mid = host_graph.neighbors(node[w]).iter().copied().find(|&m| host_graph.has_edge(m, node[y])).unwrap();
                s.push(mid);
            }
            s
        })
        .collect();
    Representation::new(host, sets)
}

/// The poset's incomparability graph joined to the blocker: minima see
/// the `d_min` side, maxima the `d_max` side. Poset elements keep their
/// ids; blocker vertex `w` becomes `|P| + w`.
pub fn build_gstar(p: &Poset, spec: &BlockerSpec) -> Result<Graph> {
    let (minima, maxima) = p.height1_split()?;
    let n = p.n();
    let mut g = incomparability_graph(p).disjoint_union(&spec.blocker);
    for &x in &minima {
        for &w in &spec.d_min_side {
            g.add_edge(x, n + w);
        }
    }
    for &y in &maxima {
        for &w in &spec.d_max_side {
            g.add_edge(y, n + w);
        }
    }
    Ok(g)
}

/// Complement of the 2-subdivision of `g` with a representation on `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoSubdivision {
    /// Vertices: `v_i` at `i`, `a_k` at `n + k`, `b_k` at `n + m + k`,
    /// where edge `k` is `g.edges()[k]` and `a_k` sits next to its smaller
    /// end in the 2-subdivision.
    pub graph: Graph,
    pub representation: Representation,
    /// The three cliques covering the graph.
    pub cliques: [Vec<usize>; 3],
}

/// Builds the complement of the 2-subdivision of `g` and an H-representation,
/// given three connected parts of `h` with at least two edges between every
/// two of them.
pub fn complement_2subdiv_representation(g: &Graph, h: &Graph, parts: &[Vec<usize>; 3]) -> Result<CoSubdivision> {
    let mut part_of = vec![usize::MAX; h.n()];
    for (i, part) in parts.iter().enumerate() {
        for &x in part {
            if x >= h.n() || part_of[x] != usize::MAX {
                return argument(format!("node {x} is out of range or in two parts"));
            }
            part_of[x] = i;
        }
        if !h.is_connected_set(part) {
            return argument(format!("part {i} is empty or not connected"));
        }
    }
    if part_of.contains(&usize::MAX) {
        return argument("the parts do not cover the pattern");
    }
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    // two connector edges per pair of parts, oriented from the lower part
    let hedges = h.edges();
    let mut connectors: [Vec<(usize, bool)>; 3] = Default::default();
    for (e, &(u, v)) in hedges.iter().enumerate() {
        let (pu, pv) = (part_of[u], part_of[v]);
        if pu == pv {
            continue;
        }
        let slot = match (pu.min(pv), pu.max(pv)) {
            (0, 1) => 0,
            (0, 2) => 1,
            _ => 2,
        };
        if connectors[slot].len() < 2 {
            connectors[slot].push((e, pu > pv));
        }
    }
    if connectors.iter().any(|c| c.len() < 2) {
        return argument("every two parts need at least two connecting edges");
    }
    let mut counts = vec![0; h.m()];
    for (slot, cs) in connectors.iter().enumerate() {
        for &(e, _) in cs {
            counts[e] = if slot == 2 { m } else { n };
        }
    }
    let host = HostModel::subdivide(h, &counts);
    let path = |slot: usize, k: usize| -> Vec<usize> {
        let (e, flip) = connectors[slot][k];
        let p = &host.edge_paths[e];
        if flip {
            p.iter().rev().copied().collect()
        } else {
            p.clone()
        }
    };
    let (alpha, beta) = (path(0, 0), path(0, 1));
    let (gamma, eta) = (path(1, 0), path(1, 1));
    let (mu, nu) = (path(2, 0), path(2, 1));
    let range = |p: &Vec<usize>, lo: usize, hi: usize| -> Vec<usize> { (lo..=hi).filter(|&i| i >= 1).map(|i| p[i]).collect() };
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(n + 2 * m);
    for i in 1..=n {
        let mut s = parts[0].clone();
        s.extend(range(&alpha, 1, i));
        s.extend(range(&beta, 1, n - i));
        s.extend(range(&gamma, 1, i));
        s.extend(range(&eta, 1, n - i));
        sets.push(s);
    }
    for (j, &(u, _)) in edges.iter().enumerate() {
        let (j, l) = (j + 1, u + 1);
        let mut s = parts[1].clone();
        s.extend(range(&alpha, l + 1, n));
        s.extend(range(&beta, n - l + 1, n));
        s.extend(range(&mu, 1, j));
        s.extend(range(&nu, 1, m - j));
        sets.push(s);
    }
    for (j, &(_, v)) in edges.iter().enumerate() {
        let (j, r) = (j + 1, v + 1);
        let mut s = parts[2].clone();
        s.extend(range(&gamma, r + 1, n));
        s.extend(range(&eta, n - r + 1, n));
        s.extend(range(&mu, j + 1, m));
        s.extend(range(&nu, m - j + 1, m));
        sets.push(s);
    }
    let graph = complement_of_2subdivision(g);
    let representation = Representation::new(host, sets);
    let report = verify_representation(&graph, &representation)?;
    assert!(report.valid, "co-subdivision representation failed verification: {:?}", report.violations);
    let cliques = [(0..n).collect(), (n..n + m).collect(), (n + m..n + 2 * m).collect()];
    Ok(CoSubdivision { graph, representation, cliques })
}

/// The 2-subdivision of `g`, with the vertex layout of [`CoSubdivision`].
pub fn two_subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let mut out = Graph::new(n + 2 * m);
    for (k, &(u, v)) in edges.iter().enumerate() {
        out.add_edge(u, n + k);
        out.add_edge(n + k, n + m + k);
        out.add_edge(n + m + k, v);
    }
    out
}

pub fn complement_of_2subdivision(g: &Graph) -> Graph {
    two_subdivision(g).complement()
}

/// The wheel with hub 0 and rim `1..=k`.
pub fn wheel(k: usize) -> Graph {
    let mut g = Graph::star(k);
    for i in 1..=k {
        g.add_edge(i, i % k + 1);
    }
    g
}

/// A partition of the 4-wheel into the hub and two opposite rim edges.
pub fn wheel4_partition() -> [Vec<usize>; 3] {
    [vec![0], vec![1, 2], vec![3, 4]]
}
