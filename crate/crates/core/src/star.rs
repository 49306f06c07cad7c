//! Recognition of S_d-graphs: intersection graphs of subtrees of a
//! subdivided star.
//!
//! For a maximal clique `C` placed on the center, the components of
//! `G - C` go on the branches. A branch can carry a sequence of components
//! exactly when it is a chain of the dominance order on components and
//! each component alone admits an interval order starting with `C`.

use serde::Serialize;

use crate::chordal::{all_maximal_cliques, interval_order_with_ends, is_chordal, Chordality};
use crate::error::{argument, Result};
use crate::graph::{check_vertices, verify_representation, Graph, HostModel, Representation};
use crate::order::{min_chain_cover, Poset};

/// Components of `G - C` grouped into classes, with the strict dominance
/// order `X > X'` iff every vertex of `X` sees all of `N_C(X')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPoset {
    pub clique: Vec<usize>,
    /// Each class is a list of components (sorted vertex lists).
    pub classes: Vec<Vec<Vec<usize>>>,
    /// `N_C(X)` per class.
    pub neighborhoods: Vec<Vec<usize>>,
    /// `lt(a, b)` means class `a` dominates class `b` (sits closer to `C`).
    pub relation: Poset,
}

impl ComponentPoset {
    pub fn class_vertices(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.classes[i].iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }
}

pub fn is_maximal_clique(g: &Graph, c: &[usize]) -> bool {
    g.is_clique(c) && (0..g.n()).all(|v| c.contains(&v) || c.iter().any(|&u| !g.has_edge(u, v)))
}

fn clique_neighborhood(g: &Graph, c: &[usize], u: usize) -> Vec<usize> {
    c.iter().copied().filter(|&v| g.has_edge(u, v)).collect()
}

pub fn component_poset(g: &Graph, c: &[usize]) -> Result<ComponentPoset> {
    check_vertices(g, c, "clique")?;
    if !is_maximal_clique(g, c) {
        return argument("not a maximal clique");
    }
    Ok(component_classes(g, c))
}

/// Same grouping and dominance order for an arbitrary vertex set `c`.
pub fn component_classes(g: &Graph, c: &[usize]) -> ComponentPoset {
    let mut clique = c.to_vec();
    clique.sort_unstable();
    clique.dedup();
    let mut blocked = vec![false; g.n()];
    for &v in &clique {
        blocked[v] = true;
    }
    let comps = g.components_avoiding(&blocked);
    classes_from_components(g, clique, comps)
}

/// Groups the given components of `G - c` (`c` sorted) into classes.
pub(crate) fn classes_from_components(g: &Graph, clique: Vec<usize>, comps: Vec<Vec<usize>>) -> ComponentPoset {
    // components whose vertices all share one neighbourhood merge by that set
    let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut uniform_key: Vec<Option<Vec<usize>>> = Vec::new();
    for comp in comps {
        let first = clique_neighborhood(g, &clique, comp[0]);
        let uniform = comp.iter().all(|&u| clique_neighborhood(g, &clique, u) == first);
        if uniform {
            if let Some(i) = uniform_key.iter().position(|k| k.as_ref() == Some(&first)) {
                classes[i].push(comp);
                continue;
            }
            uniform_key.push(Some(first));
        } else {
            uniform_key.push(None);
        }
        classes.push(vec![comp]);
    }
    let k = classes.len();
    let verts: Vec<Vec<usize>> = classes
        .iter()
        .map(|cl| {
            let mut v: Vec<usize> = cl.iter().flatten().copied().collect();
            v.sort_unstable();
            v
        })
        .collect();
    let neighborhoods: Vec<Vec<usize>> = verts
        .iter()
        .map(|vs| clique.iter().copied().filter(|&w| vs.iter().any(|&u| g.has_edge(u, w))).collect())
        .collect();
    let mut pairs = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a != b
                && verts[a].iter().all(|&u| neighborhoods[b].iter().all(|&w| g.has_edge(u, w)))
            {
                pairs.push((a, b));
            }
        }
    }
    let relation = Poset::new(k, &pairs).expect("dominance between non-equivalent classes is a strict order");
    ComponentPoset { clique, classes, neighborhoods, relation }
}

/// Intervals on one branch: position 0 is the center node, positions
/// `1..=len` the branch nodes outward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchLayout {
    pub len: usize,
    /// `(vertex, first, last)`; clique vertices start at 0.
    pub intervals: Vec<(usize, usize, usize)>,
}

/// Lays the classes `chain` (nearest to `C` first) on one branch.
pub fn build_branch_representation(g: &Graph, c: &[usize], chain: &[Vec<usize>]) -> Result<BranchLayout> {
    check_vertices(g, c, "clique")?;
    if !is_maximal_clique(g, c) {
        return argument("not a maximal clique");
    }
    let nbhd = |vs: &[usize]| -> Vec<usize> { c.iter().copied().filter(|&w| vs.iter().any(|&u| g.has_edge(u, w))).collect() };
    let ns: Vec<Vec<usize>> = chain.iter().map(|x| nbhd(x)).collect();
    for i in 0..chain.len() {
        check_vertices(g, &chain[i], "chain class")?;
        for j in i + 1..chain.len() {
            if !chain[i].iter().all(|&u| ns[j].iter().all(|&w| g.has_edge(u, w))) {
                return argument(format!("class {i} does not dominate class {j}"));
            }
        }
    }
    let mut reach: Vec<Option<usize>> = vec![None; g.n()];
    for &v in c {
        reach[v] = Some(0);
    }
    let mut intervals = Vec::new();
    let mut offset = 0;
    for (i, x) in chain.iter().enumerate() {
        let mut verts: Vec<usize> = c.to_vec();
        verts.extend(x);
        verts.sort_unstable();
        let sub = g.induced(&verts);
        let local = |v: usize| verts.binary_search(&v).unwrap();
        let left: Vec<usize> = c.iter().map(|&v| local(v)).collect();
        let Ok(order) = interval_order_with_ends(&sub, &left, None)? else {
            return argument(format!("class {i} has no interval order starting with the clique"));
        };
        let spans = order.spans(sub.n());
        for &u in x {
            let (a, b) = spans[local(u)].unwrap();
            intervals.push((u, offset + a, offset + b));
        }
        for &v in &ns[i] {
            let (_, b) = spans[local(v)].unwrap();
            reach[v] = Some(offset + b);
        }
        offset += order.cliques.len() - 1;
    }
    for &v in c {
        intervals.push((v, 0, reach[v].unwrap()));
    }
    intervals.sort_unstable();
    Ok(BranchLayout { len: offset, intervals })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum CliqueFailure {
    /// These classes have no interval order with the clique first.
    #[serde(rename = "i")]
    NoLeftmostOrder { clique: Vec<usize>, classes: Vec<Vec<usize>> },
    /// The dominance order needs more chains than branches.
    #[serde(rename = "ii")]
    TooManyChains { clique: Vec<usize>, chains: usize, d: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum StarRecognition {
    Accepted { clique: Vec<usize>, representation: Representation },
    NotChordal { hole: Vec<usize> },
    Rejected { failures: Vec<CliqueFailure> },
}

impl StarRecognition {
    pub fn is_accepted(&self) -> bool {
        matches!(self, StarRecognition::Accepted { .. })
    }

    pub fn representation(&self) -> Option<&Representation> {
        match self {
            StarRecognition::Accepted { representation, .. } => Some(representation),
            _ => None,
        }
    }
}

/// Decides membership in the S_d-graphs, trying every maximal clique on the
/// center. Accepted answers carry a verified representation on `S_d` with
/// `3n` nodes per branch.
pub fn recognize_star(g: &Graph, d: usize) -> Result<StarRecognition> {
    if d < 2 {
        return argument("d must be at least 2");
    }
    let n = g.n();
    let star = Graph::star(d);
    if n == 0 {
        let host = HostModel::trivial(&star);
        return Ok(StarRecognition::Accepted { clique: vec![], representation: Representation::new(host, vec![]) });
    }
    if let Chordality::Hole(hole) = is_chordal(g) {
        return Ok(StarRecognition::NotChordal { hole });
    }
    let mut failures = Vec::new();
    for c in all_maximal_cliques(g) {
        match star_for_clique(g, &c, d)? {
            Ok(rep) => return Ok(StarRecognition::Accepted { clique: c, representation: rep }),
            Err(f) => failures.push(f),
        }
    }
    Ok(StarRecognition::Rejected { failures })
}

/// Representation with `c` on the center, or the violated condition.
pub fn star_for_clique(g: &Graph, c: &[usize], d: usize) -> Result<std::result::Result<Representation, CliqueFailure>> {
    let cp = component_poset(g, c)?;
    let k = cp.classes.len();
    let bad: Vec<Vec<usize>> = (0..k)
        .filter(|&i| build_branch_representation(g, &cp.clique, &[cp.class_vertices(i)]).is_err())
        .map(|i| cp.class_vertices(i))
        .collect();
    if !bad.is_empty() {
        return Ok(Err(CliqueFailure::NoLeftmostOrder { clique: cp.clique.clone(), classes: bad }));
    }
    let chains = min_chain_cover(&cp.relation);
    if chains.len() > d {
        return Ok(Err(CliqueFailure::TooManyChains { clique: cp.clique.clone(), chains: chains.len(), d }));
    }
    let n = g.n();
    let per_branch = 3 * n;
    let host = HostModel::subdivide(&Graph::star(d), &vec![per_branch; d]);
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &cp.clique {
        sets[v].push(0);
    }
    for (branch, chain) in chains.iter().enumerate() {
        // a chain is listed in order, but sort by the relation to be safe
        let mut chain = chain.clone();
        chain.sort_by_key(|&a| std::cmp::Reverse((0..k).filter(|&b| cp.relation.lt(a, b)).count()));
        let classes: Vec<Vec<usize>> = chain.iter().map(|&i| cp.class_vertices(i)).collect();
        let layout = build_branch_representation(g, &cp.clique, &classes)?;
        assert!(layout.len <= per_branch, "branch layout longer than the subdivision");
        let path = &host.edge_paths[branch];
        for &(v, a, b) in &layout.intervals {
            for pos in a..=b {
                sets[v].push(path[pos]);
            }
        }
    }
    let rep = Representation::new(host, sets);
    let report = verify_representation(g, &rep)?;
    assert!(report.valid, "star layout failed verification: {:?}", report.violations);
    Ok(Ok(rep))
}

/// Center node and branch paths (center first) of a representation on a
/// subdivided star.
pub fn star_branches(host: &HostModel) -> Result<(usize, Vec<Vec<usize>>)> {
    let h = &host.pattern;
    let center = (0..h.n()).find(|&v| h.degree(v) == h.m() && h.m() > 0);
    let Some(center) = center.filter(|_| h.m() + 1 == h.n()) else {
        return argument("host pattern is not a star");
    };
    let branches = host
        .edge_paths
        .iter()
        .map(|p| if p[0] == center { p.clone() } else { p.iter().rev().copied().collect() })
        .collect();
    Ok((center, branches))
}

/// Makes the set of vertices at the center node a maximal clique by
/// stretching subtrees toward it, keeping the intersection graph.
pub fn normalize_center(g: &Graph, rep: &Representation) -> Result<Representation> {
    let (center, branches) = star_branches(&rep.host)?;
    let n = g.n();
    let hn = rep.host.subdivision.n();
    let mut sets: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            let mut m = vec![false; hn];
            for &x in rep.set(v) {
                m[x] = true;
            }
            m
        })
        .collect();
    let at = |sets: &Vec<Vec<bool>>, x: usize| -> Vec<usize> { (0..n).filter(|&v| sets[v][x]).collect() };
    loop {
        let vb = at(&sets, center);
        if n == 0 || is_maximal_clique(g, &vb) {
            break;
        }
        let c = all_maximal_cliques(g).into_iter().find(|c| vb.iter().all(|v| c.contains(v))).unwrap();
        let common = (0..hn).find(|&x| c.iter().all(|&v| sets[v][x])).expect("subtrees of a tree are Helly");
        let path = branches.iter().find(|p| p.contains(&common)).unwrap();
        let stop = path.iter().position(|&x| x == common).unwrap();
        let (xi, vx) = (1..=stop)
            .map(|i| (i, at(&sets, path[i])))
            .find(|(_, vx)| vx.len() > vb.len())
            .expect("the common node carries more vertices");
        for v in vx {
            if !sets[v][center] {
                for &x in &path[..=xi] {
                    sets[v][x] = true;
                }
            }
        }
    }
    let lists = sets.iter().map(|m| (0..hn).filter(|&x| m[x]).collect()).collect();
    let out = Representation::new(rep.host.clone(), lists);
    debug_assert!(verify_representation(g, &out).unwrap().valid);
    Ok(out)
}
