//! Recognition of T-graphs for a fixed tree T.
//!
//! Every branching point of T gets a maximal clique `f(b)`. Components of
//! `G - C` (with `C` the union of the assigned cliques) that see both
//! `f(b) - f(b')` and `f(b') - f(b)` must sit on the path between `b` and
//! `b'`. They are laid out there with `f(b)` first and `f(b')` last, which
//! leaves a family of disjoint stars whose segments carry restrictions.
//! Placing the remaining components on those segments is a list coloring
//! problem on a co-comparability graph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chordal::{all_maximal_cliques, interval_order, interval_order_with_ends, is_chordal, Chordality, CliqueOrder};
use crate::error::{argument, Result};
use crate::graph::{check_vertices, connected_components, verify_representation, Graph, HostModel, Representation};
use crate::listcolor::solve_list_coloring_cocomparability;
use crate::order::incomparability_graph;
use crate::star::{build_branch_representation, classes_from_components, is_maximal_clique, ComponentPoset};

/// A maximal path of the tree whose interior nodes have degree 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Route {
    /// Tree nodes in order; `nodes[0]` is a branching point.
    pub nodes: Vec<usize>,
    pub to_leaf: bool,
}

/// Branching points of a tree and the routes between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeShape {
    pub branch_points: Vec<usize>,
    /// A route between two branching points starts at the smaller one.
    pub routes: Vec<Route>,
}

pub fn tree_shape(t: &Graph) -> Result<TreeShape> {
    if t.n() == 0 || t.m() + 1 != t.n() || !t.is_connected() {
        return argument("host pattern is not a tree");
    }
    let branch_points: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let mut routes = Vec::new();
    for &b in &branch_points {
        for &w in t.neighbors(b) {
            let mut nodes = vec![b, w];
            while t.degree(*nodes.last().unwrap()) == 2 {
                let cur = nodes[nodes.len() - 1];
                let prev = nodes[nodes.len() - 2];
                let next = t.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap();
                nodes.push(next);
            }
            let end = *nodes.last().unwrap();
            let to_leaf = t.degree(end) == 1;
            if to_leaf || b < end {
                routes.push(Route { nodes, to_leaf });
            }
        }
    }
    Ok(TreeShape { branch_points, routes })
}

/// Clique per branching point, plus what preprocessing did to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchAssignment {
    pub f: BTreeMap<usize, Vec<usize>>,
    /// Branching points sharing one clique, contracted to one node.
    pub contracted: Vec<Vec<usize>>,
    /// Routes whose two ends lie in different components of `G`.
    pub split: Vec<usize>,
}

impl BranchAssignment {
    pub fn new(f: BTreeMap<usize, Vec<usize>>) -> BranchAssignment {
        let f = f
            .into_iter()
            .map(|(b, mut c)| {
                c.sort_unstable();
                c.dedup();
                (b, c)
            })
            .collect();
        BranchAssignment { f, contracted: Vec::new(), split: Vec::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Preprocess,
    Middle,
    Stars,
    Coloring,
}

/// Why one assignment cannot be completed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub stage: Stage,
    pub reason: String,
}

fn refute<T>(stage: Stage, reason: impl Into<String>) -> std::result::Result<T, Refutation> {
    Err(Refutation { stage, reason: reason.into() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RouteKind {
    /// Both ends were contracted into the same group.
    Inside { group: usize },
    Leaf { group: usize },
    Between { from: usize, to: usize, split: bool },
}

/// An assignment after contraction: groups of branching points with their
/// cliques, and the role of every route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedInstance {
    pub shape: TreeShape,
    pub assignment: BranchAssignment,
    /// Group of each branching point (indexed like `shape.branch_points`).
    pub group_of: Vec<usize>,
    pub group_cliques: Vec<Vec<usize>>,
    pub kinds: Vec<RouteKind>,
    /// Vertex sets that can be represented independently.
    pub pieces: Vec<Vec<usize>>,
}

impl ReducedInstance {
    fn clique_union(&self, n: usize) -> Vec<usize> {
        let mut inside = vec![false; n];
        for c in &self.group_cliques {
            for &v in c {
                inside[v] = true;
            }
        }
        (0..n).filter(|&v| inside[v]).collect()
    }
}

pub fn preprocess(
    g: &Graph,
    t: &Graph,
    f: &BranchAssignment,
) -> Result<std::result::Result<ReducedInstance, Refutation>> {
    let shape = tree_shape(t)?;
    preprocess_shape(g, &shape, f)
}

fn preprocess_shape(
    g: &Graph,
    shape: &TreeShape,
    f: &BranchAssignment,
) -> Result<std::result::Result<ReducedInstance, Refutation>> {
    let bp = &shape.branch_points;
    if f.f.len() != bp.len() || bp.iter().any(|b| !f.f.contains_key(b)) {
        return argument("assignment must cover exactly the branching points");
    }
    for c in f.f.values() {
        check_vertices(g, c, "assigned clique")?;
        if !is_maximal_clique(g, c) {
            return argument("assigned set is not a maximal clique");
        }
    }
    let index = |b: usize| bp.binary_search(&b).unwrap();
    let k = bp.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for r in &shape.routes {
        if !r.to_leaf {
            let (a, b) = (index(r.nodes[0]), index(*r.nodes.last().unwrap()));
            if f.f[&bp[a]] == f.f[&bp[b]] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut root_group: BTreeMap<usize, usize> = BTreeMap::new();
    let mut group_of = vec![0; k];
    let mut group_cliques: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        let next = root_group.len();
        let gi = *root_group.entry(r).or_insert(next);
        if gi == group_cliques.len() {
            let c = &f.f[&bp[i]];
            if group_cliques.contains(c) {
                return Ok(refute(
                    Stage::Preprocess,
                    format!("f({}) repeats a clique used across a differently assigned branching point", bp[i]),
                ));
            }
            group_cliques.push(c.clone());
        }
        group_of[i] = gi;
    }
    let ng = group_cliques.len();
    let mut assignment = f.clone();
    assignment.contracted = (0..ng)
        .map(|gi| (0..k).filter(|&i| group_of[i] == gi).map(|i| bp[i]).collect::<Vec<_>>())
        .filter(|m| m.len() > 1)
        .collect();
    let comp_of = {
        let mut c = vec![0; g.n()];
        for (i, comp) in connected_components(g).iter().enumerate() {
            for &v in comp {
                c[v] = i;
            }
        }
        c
    };
    let mut kinds = Vec::with_capacity(shape.routes.len());
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); ng];
    for (ri, r) in shape.routes.iter().enumerate() {
        let from = group_of[index(r.nodes[0])];
        if r.to_leaf {
            kinds.push(RouteKind::Leaf { group: from });
            continue;
        }
        let to = group_of[index(*r.nodes.last().unwrap())];
        if from == to {
            kinds.push(RouteKind::Inside { group: from });
            continue;
        }
        let split = comp_of[group_cliques[from][0]] != comp_of[group_cliques[to][0]];
        if split {
            assignment.split.push(ri);
        }
        tree_adj[from].push(to);
        tree_adj[to].push(from);
        kinds.push(RouteKind::Between { from, to, split });
    }
    let c = {
        let mut all: Vec<usize> = group_cliques.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    };
    // the groups holding a vertex must form a subtree
    let holds = |v: usize| -> Vec<bool> { group_cliques.iter().map(|c| c.binary_search(&v).is_ok()).collect() };
    for &v in &c {
        let h = holds(v);
        let start = h.iter().position(|&x| x).unwrap();
        let mut seen = vec![false; ng];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &tree_adj[x] {
                if h[y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if (0..ng).any(|x| h[x] && !seen[x]) {
            return Ok(refute(Stage::Preprocess, format!("the branching points holding {v} are not connected")));
        }
    }
    for &u in &c {
        for &v in g.neighbors(u) {
            if v < u || c.binary_search(&v).is_err() {
                continue;
            }
            let (hu, hv) = (holds(u), holds(v));
            if (0..ng).any(|x| hu[x] && hv[x]) {
                continue;
            }
            let meet = (0..ng).any(|x| hu[x] && tree_adj[x].iter().any(|&y| hv[y]));
            if !meet {
                return Ok(refute(Stage::Preprocess, format!("{u} and {v} are adjacent but their subtrees cannot meet")));
            }
        }
    }
    let pieces = connected_components(g);
    Ok(Ok(ReducedInstance { shape: shape.clone(), assignment, group_of, group_cliques, kinds, pieces }))
}

/// Components of `G - C`: those forced onto each route, and the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MiddleComponents {
    /// Indexed like the routes; empty unless the route joins two groups.
    pub forced: Vec<Vec<Vec<usize>>>,
    pub unforced: Vec<Vec<usize>>,
}

pub fn middle_components(g: &Graph, red: &ReducedInstance) -> std::result::Result<MiddleComponents, Refutation> {
    let n = g.n();
    let c = red.clique_union(n);
    let mut blocked = vec![false; n];
    for &v in &c {
        blocked[v] = true;
    }
    let mut forced = vec![Vec::new(); red.kinds.len()];
    let mut unforced = Vec::new();
    for comp in g.components_avoiding(&blocked) {
        let sees = |set: &[usize], other: &[usize]| {
            set.iter().any(|&w| other.binary_search(&w).is_err() && comp.iter().any(|&u| g.has_edge(u, w)))
        };
        let mut home = None;
        for (ri, kind) in red.kinds.iter().enumerate() {
            if let RouteKind::Between { from, to, .. } = *kind {
                let (a, b) = (&red.group_cliques[from], &red.group_cliques[to]);
                if sees(a, b) && sees(b, a) {
                    if home.is_some() {
                        return refute(Stage::Middle, format!("component of {} is forced onto two routes", comp[0]));
                    }
                    home = Some(ri);
                }
            }
        }
        match home {
            Some(ri) => {
                let RouteKind::Between { from, to, .. } = red.kinds[ri] else { unreachable!() };
                let (a, b) = (&red.group_cliques[from], &red.group_cliques[to]);
                let outside = c.iter().any(|&w| {
                    a.binary_search(&w).is_err()
                        && b.binary_search(&w).is_err()
                        && comp.iter().any(|&u| g.has_edge(u, w))
                });
                if outside {
                    return refute(Stage::Middle, format!("component of {} sees a clique vertex off its route", comp[0]));
                }
                forced[ri].push(comp);
            }
            None => unforced.push(comp),
        }
    }
    Ok(MiddleComponents { forced, unforced })
}

/// One branch of a star `S(b)`: a leaf route, or the end of a route between
/// two groups up to the part reserved for its forced components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub route: usize,
    pub group: usize,
    pub at_start: bool,
    /// Vertices of the group's clique that run along the whole segment;
    /// every vertex placed here must see all of them.
    pub restriction: Vec<usize>,
}

/// Disjoint stars with restrictions, and the colored components to place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedStarInstance {
    /// Colors are indices into this list.
    pub segments: Vec<Segment>,
    /// Clique order for each route between two groups, first clique at the
    /// route's start.
    pub middles: Vec<Option<CliqueOrder>>,
    pub components: ComponentPoset,
    /// `L(X)` per class of `components`.
    pub lists: Vec<Vec<usize>>,
}

fn in_global(order: CliqueOrder, verts: &[usize]) -> CliqueOrder {
    CliqueOrder { cliques: order.cliques.into_iter().map(|q| q.into_iter().map(|i| verts[i]).collect()).collect() }
}

fn fits_after(g: &Graph, clique: &[usize], class: &[usize]) -> Result<bool> {
    let mut verts: Vec<usize> = clique.iter().chain(class).copied().collect();
    verts.sort_unstable();
    let sub = g.induced(&verts);
    let left: Vec<usize> = clique.iter().map(|v| verts.binary_search(v).unwrap()).collect();
    Ok(interval_order_with_ends(&sub, &left, None)?.is_ok())
}

pub fn build_restricted_stars(
    g: &Graph,
    red: &ReducedInstance,
    mids: &MiddleComponents,
) -> Result<std::result::Result<RestrictedStarInstance, Refutation>> {
    let n = g.n();
    let mut middles = vec![None; red.kinds.len()];
    let mut segments = Vec::new();
    for (ri, kind) in red.kinds.iter().enumerate() {
        match *kind {
            RouteKind::Inside { .. } => {}
            RouteKind::Leaf { group } => segments.push(Segment { route: ri, group, at_start: true, restriction: vec![] }),
            RouteKind::Between { from, to, .. } => {
                let (a, b) = (&red.group_cliques[from], &red.group_cliques[to]);
                let mut verts: Vec<usize> = a.iter().chain(b).chain(mids.forced[ri].iter().flatten()).copied().collect();
                verts.sort_unstable();
                verts.dedup();
                let sub = g.induced(&verts);
                let local = |s: &[usize]| -> Vec<usize> { s.iter().map(|v| verts.binary_search(v).unwrap()).collect() };
                let order = match interval_order_with_ends(&sub, &local(a), Some(&local(b)))? {
                    Ok(o) => in_global(o, &verts),
                    Err(_) => {
                        return Ok(refute(
                            Stage::Stars,
                            format!("route {ri} has no interval layout from f({}) to f({})", red.shape.routes[ri].nodes[0], red.shape.routes[ri].nodes.last().unwrap()),
                        ))
                    }
                };
                let q = &order.cliques;
                let m = q.len();
                let mut ra: Vec<usize> = a.iter().copied().filter(|v| q[1].contains(v)).collect();
                let mut rb: Vec<usize> = b.iter().copied().filter(|v| q[m - 2].contains(v)).collect();
                ra.sort_unstable();
                rb.sort_unstable();
                segments.push(Segment { route: ri, group: from, at_start: true, restriction: ra });
                segments.push(Segment { route: ri, group: to, at_start: false, restriction: rb });
                middles[ri] = Some(order);
            }
        }
    }
    let c = red.clique_union(n);
    let components = classes_from_components(g, c, mids.unforced.clone());
    let k = components.classes.len();
    let mut fit_cache: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut lists = Vec::with_capacity(k);
    for i in 0..k {
        let verts = components.class_vertices(i);
        let nb = &components.neighborhoods[i];
        let mut list = Vec::new();
        for (si, s) in segments.iter().enumerate() {
            let clique = &red.group_cliques[s.group];
            if !nb.iter().all(|v| clique.binary_search(v).is_ok()) {
                continue;
            }
            if !verts.iter().all(|&u| s.restriction.iter().all(|&w| g.has_edge(u, w))) {
                continue;
            }
            let fits = match fit_cache.get(&(i, s.group)) {
                Some(&x) => x,
                None => {
                    let x = fits_after(g, clique, &verts)?;
                    fit_cache.insert((i, s.group), x);
                    x
                }
            };
            if fits {
                list.push(si);
            }
        }
        if list.is_empty() {
            return Ok(refute(Stage::Stars, format!("the component class of {} fits on no segment", verts[0])));
        }
        lists.push(list);
    }
    Ok(Ok(RestrictedStarInstance { segments, middles, components, lists }))
}

/// Same-colored classes in chain order (closest to the branching point first).
pub fn chains_by_color(inst: &RestrictedStarInstance, coloring: &[usize]) -> Vec<Vec<usize>> {
    let rel = &inst.components.relation;
    let k = rel.n();
    let mut chains = vec![Vec::new(); inst.segments.len()];
    for (i, &col) in coloring.iter().enumerate() {
        chains[col].push(i);
    }
    for ch in &mut chains {
        ch.sort_by_key(|&a| std::cmp::Reverse((0..k).filter(|&b| rel.lt(a, b)).count()));
        for w in ch.windows(2) {
            assert!(rel.lt(w[0], w[1]), "classes of one color do not form a chain");
        }
    }
    chains
}

fn route_nodes(host: &HostModel, edge_index: &BTreeMap<(usize, usize), usize>, nodes: &[usize]) -> Vec<usize> {
    let mut seq = vec![nodes[0]];
    for w in nodes.windows(2) {
        let p = &host.edge_paths[edge_index[&(w[0].min(w[1]), w[0].max(w[1]))]];
        if p[0] == w[0] {
            seq.extend(&p[1..]);
        } else {
            seq.extend(p.iter().rev().skip(1));
        }
    }
    seq
}

fn edge_index(t: &Graph) -> BTreeMap<(usize, usize), usize> {
    t.edges().into_iter().enumerate().map(|(i, e)| (e, i)).collect()
}

/// Builds the representation from a solved instance and checks it.
pub fn assemble(
    g: &Graph,
    t: &Graph,
    red: &ReducedInstance,
    inst: &RestrictedStarInstance,
    coloring: &[usize],
) -> Result<Representation> {
    let n = g.n();
    let per_edge = 3 * n + 3;
    let host = HostModel::subdivide(t, &vec![per_edge; t.m()]);
    let eidx = edge_index(t);
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &b) in red.shape.branch_points.iter().enumerate() {
        for &v in &red.group_cliques[red.group_of[i]] {
            sets[v].push(b);
        }
    }
    let chains = chains_by_color(inst, coloring);
    let mut layouts = BTreeMap::new();
    for (si, s) in inst.segments.iter().enumerate() {
        let classes: Vec<Vec<usize>> = chains[si].iter().map(|&i| inst.components.class_vertices(i)).collect();
        let layout = build_branch_representation(g, &red.group_cliques[s.group], &classes)?;
        layouts.insert((s.route, s.at_start), (si, layout));
    }
    for (ri, route) in red.shape.routes.iter().enumerate() {
        let path = route_nodes(&host, &eidx, &route.nodes);
        let last = path.len() - 1;
        match red.kinds[ri] {
            RouteKind::Inside { group } => {
                for &v in &red.group_cliques[group] {
                    sets[v].extend(&path);
                }
            }
            RouteKind::Leaf { .. } => {
                let (_, layout) = &layouts[&(ri, true)];
                assert!(layout.len < last, "segment longer than its route");
                for &(v, a, b) in &layout.intervals {
                    sets[v].extend(&path[a..=b]);
                }
            }
            RouteKind::Between { .. } => {
                let (_, start) = &layouts[&(ri, true)];
                let (end_si, end) = &layouts[&(ri, false)];
                let order = inst.middles[ri].as_ref().unwrap();
                let m = order.cliques.len();
                assert!(start.len + m + end.len < last, "route too short for its layout");
                for &(v, a, b) in &start.intervals {
                    sets[v].extend(&path[a..=b]);
                }
                for &(v, a, b) in &end.intervals {
                    sets[v].extend(&path[last - b..=last - a]);
                }
                for (j, q) in order.cliques.iter().enumerate().take(m - 1).skip(1) {
                    for &v in q {
                        sets[v].push(path[start.len + j]);
                    }
                }
                for x in start.len + m - 1..last - end.len {
                    for &v in &inst.segments[*end_si].restriction {
                        sets[v].push(path[x]);
                    }
                }
            }
        }
    }
    let rep = Representation::new(host, sets);
    let report = verify_representation(g, &rep)?;
    assert!(report.valid, "tree layout failed verification: {:?}", report.violations);
    Ok(rep)
}

/// Number of assignments dropped at each stage.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StageCounts {
    pub preprocess: usize,
    pub middle: usize,
    pub stars: usize,
    pub coloring: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum TreeRecognition {
    Accepted { assignment: BranchAssignment, representation: Representation },
    NotChordal { hole: Vec<usize> },
    Rejected { candidates: usize, eliminated: StageCounts },
}

impl TreeRecognition {
    pub fn is_accepted(&self) -> bool {
        matches!(self, TreeRecognition::Accepted { .. })
    }

    pub fn representation(&self) -> Option<&Representation> {
        match self {
            TreeRecognition::Accepted { representation, .. } => Some(representation),
            _ => None,
        }
    }
}

/// Runs every stage for one assignment.
pub fn try_assignment(
    g: &Graph,
    t: &Graph,
    f: &BranchAssignment,
) -> Result<std::result::Result<(BranchAssignment, Representation), Refutation>> {
    let shape = tree_shape(t)?;
    try_shape(g, t, &shape, f)
}

fn try_shape(
    g: &Graph,
    t: &Graph,
    shape: &TreeShape,
    f: &BranchAssignment,
) -> Result<std::result::Result<(BranchAssignment, Representation), Refutation>> {
    let red = match preprocess_shape(g, shape, f)? {
        Ok(r) => r,
        Err(e) => return Ok(Err(e)),
    };
    let mids = match middle_components(g, &red) {
        Ok(m) => m,
        Err(e) => return Ok(Err(e)),
    };
    let inst = match build_restricted_stars(g, &red, &mids)? {
        Ok(i) => i,
        Err(e) => return Ok(Err(e)),
    };
    let co = incomparability_graph(&inst.components.relation);
    let coloring = match solve_list_coloring_cocomparability(&co, &inst.lists)? {
        Some(c) => c,
        None => return Ok(refute(Stage::Coloring, "no list coloring of the component classes")),
    };
    let rep = assemble(g, t, &red, &inst, &coloring)?;
    Ok(Ok((red.assignment, rep)))
}

fn path_representation(g: &Graph, t: &Graph) -> Option<Representation> {
    let n = g.n();
    let order = interval_order(g).ok()?;
    if t.n() == 1 {
        if order.cliques.len() > 1 {
            return None;
        }
        return Some(Representation::new(HostModel::trivial(t), vec![vec![0]; n]));
    }
    let host = HostModel::subdivide(t, &vec![n; t.m()]);
    let start = (0..t.n()).find(|&v| t.degree(v) == 1).unwrap();
    let mut nodes = vec![start];
    while nodes.len() < t.n() {
        let cur = *nodes.last().unwrap();
        let next = t.neighbors(cur).iter().copied().find(|x| !nodes.contains(x)).unwrap();
        nodes.push(next);
    }
    let path = route_nodes(&host, &edge_index(t), &nodes);
    let mut sets = vec![Vec::new(); n];
    for (j, q) in order.cliques.iter().enumerate() {
        for &v in q {
            sets[v].push(path[j]);
        }
    }
    Some(Representation::new(host, sets))
}

/// Decides whether `g` is a T-graph, trying assignments of maximal cliques
/// to branching points in lexicographic order.
pub fn recognize_tree(g: &Graph, t: &Graph) -> Result<TreeRecognition> {
    let shape = tree_shape(t)?;
    let n = g.n();
    if n == 0 {
        let rep = Representation::new(HostModel::trivial(t), vec![]);
        return Ok(TreeRecognition::Accepted { assignment: BranchAssignment::new(BTreeMap::new()), representation: rep });
    }
    if let Chordality::Hole(hole) = is_chordal(g) {
        return Ok(TreeRecognition::NotChordal { hole });
    }
    if shape.branch_points.is_empty() {
        return Ok(match path_representation(g, t) {
            Some(rep) => {
                let report = verify_representation(g, &rep)?;
                assert!(report.valid, "path layout failed verification: {:?}", report.violations);
                TreeRecognition::Accepted { assignment: BranchAssignment::new(BTreeMap::new()), representation: rep }
            }
            None => TreeRecognition::Rejected { candidates: 1, eliminated: StageCounts { stars: 1, ..Default::default() } },
        });
    }
    let cliques = all_maximal_cliques(g);
    let k = shape.branch_points.len();
    let mut digits = vec![0usize; k];
    let mut counts = StageCounts::default();
    let mut candidates = 0;
    loop {
        candidates += 1;
        let f: BTreeMap<usize, Vec<usize>> =
            shape.branch_points.iter().zip(&digits).map(|(&b, &d)| (b, cliques[d].clone())).collect();
        match try_shape(g, t, &shape, &BranchAssignment::new(f))? {
            Ok((assignment, representation)) => return Ok(TreeRecognition::Accepted { assignment, representation }),
            Err(r) => match r.stage {
                Stage::Preprocess => counts.preprocess += 1,
                Stage::Middle => counts.middle += 1,
                Stage::Stars => counts.stars += 1,
                Stage::Coloring => counts.coloring += 1,
            },
        }
        // odometer, last branching point fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(TreeRecognition::Rejected { candidates, eliminated: counts });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < cliques.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// A tree with two adjacent branching points, each carrying two leaves.
pub fn double_star() -> Graph {
    Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
}

/// A spider: `legs` paths of `len` edges glued at node 0.
pub fn spider(legs: usize, len: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, &edges).unwrap()
}
