//! Dominating sets, independent sets and independent dominating sets of
//! H-graphs with a given representation.
//!
//! On a subdivided star the center holds a maximal clique `C` and every
//! branch is an interval graph; the center vertices worth taking are found
//! per branch and combined by a small set cover over the branches. On a
//! general host the vertices touching high-degree nodes are enumerated,
//! together with the first and last chosen vertex on every low-degree path,
//! and each path is completed as an interval graph.

use serde::Serialize;

use crate::bits::{neighborhoods, Bits};
use crate::chordal::{domset_including, greedy_mis_interval, greedy_targeted_domination, CliqueOrder};
use crate::error::{argument, Result};
use crate::graph::{verify_representation, Graph, Representation};
use crate::star::{normalize_center, star_branches};

fn check_rep(g: &Graph, rep: &Representation) -> Result<()> {
    let report = verify_representation(g, rep)?;
    if !report.valid {
        return argument(format!("representation does not match the graph: {:?}", report.violations));
    }
    Ok(())
}

/// Clique order of the interval graph given by `spans` (positions on a
/// path), with vertex `i` of the result being `spans[i]`.
fn order_from_spans(spans: &[(usize, usize)]) -> CliqueOrder {
    let Some(end) = spans.iter().map(|s| s.1).max() else {
        return CliqueOrder { cliques: vec![] };
    };
    let at: Vec<Vec<usize>> =
        (0..=end).map(|p| (0..spans.len()).filter(|&i| spans[i].0 <= p && p <= spans[i].1).collect()).collect();
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for set in at {
        if runs.last() != Some(&set) {
            runs.push(set);
        }
    }
    let strict = |a: &Vec<usize>, b: &Vec<usize>| a.len() < b.len() && a.iter().all(|x| b.contains(x));
    let cliques = (0..runs.len())
        .filter(|&i| !runs[i].is_empty())
        .filter(|&i| !(i > 0 && strict(&runs[i], &runs[i - 1])) && !(i + 1 < runs.len() && strict(&runs[i], &runs[i + 1])))
        .map(|i| runs[i].clone())
        .collect();
    CliqueOrder { cliques }
}

/// Induced interval instance on `verts` with their spans.
fn local_instance(g: &Graph, verts: &[usize], span: impl Fn(usize) -> (usize, usize)) -> (Graph, CliqueOrder) {
    let sub = g.induced(verts);
    let spans: Vec<(usize, usize)> = verts.iter().map(|&v| span(v)).collect();
    let order = order_from_spans(&spans);
    debug_assert!(order.is_valid_for(&sub));
    (sub, order)
}

fn min_cover_by_masks(masks: &[u64], full: u64) -> Vec<usize> {
    let size = 1usize << full.count_ones();
    // compress the universe bits to 0..k
    let bits: Vec<u32> = (0..64).filter(|&b| full >> b & 1 == 1).collect();
    let squeeze = |m: u64| -> usize { bits.iter().enumerate().filter(|(_, &b)| m >> b & 1 == 1).map(|(i, _)| 1 << i).sum() };
    let sq: Vec<usize> = masks.iter().map(|&m| squeeze(m)).collect();
    let mut best: Vec<Option<(usize, usize, usize)>> = vec![None; size];
    best[0] = Some((0, usize::MAX, 0));
    for mask in 0..size {
        let Some((k, _, _)) = best[mask] else { continue };
        for (i, &s) in sq.iter().enumerate() {
            let next = mask | s;
            if next != mask && best[next].is_none_or(|(kk, _, _)| kk > k + 1) {
                best[next] = Some((k + 1, i, mask));
            }
        }
    }
    let mut out = Vec::new();
    let mut mask = size - 1;
    while mask != 0 {
        let (_, i, prev) = best[mask].expect("every branch is hit by some vertex");
        out.push(i);
        mask = prev;
    }
    out
}

/// Minimum dominating set of an S_d-graph from an S_d-representation.
pub fn min_domset_star(g: &Graph, rep: &Representation) -> Result<Vec<usize>> {
    check_rep(g, rep)?;
    let n = g.n();
    if n == 0 {
        return Ok(vec![]);
    }
    let rep = normalize_center(g, rep)?;
    let (center, branches) = star_branches(&rep.host)?;
    let hn = rep.host.subdivision.n();
    let c: Vec<usize> = (0..n).filter(|&v| rep.set(v).contains(&center)).collect();
    let d = branches.len();
    if d > 24 {
        return argument("star domination supports at most 24 branches");
    }
    let mut pos = vec![(usize::MAX, 0); hn];
    for (i, b) in branches.iter().enumerate() {
        for (p, &x) in b.iter().enumerate().skip(1) {
            pos[x] = (i, p);
        }
    }
    struct Branch {
        verts: Vec<usize>,
        graph: Graph,
        order: CliqueOrder,
        own: Vec<bool>,
        plain: Vec<usize>,
        with: Vec<Option<Vec<usize>>>,
        reach: Vec<usize>,
    }
    let mut data = Vec::with_capacity(d);
    for i in 0..d {
        let span_on = |v: usize| -> Option<(usize, usize)> {
            let ps: Vec<usize> = rep.set(v).iter().filter(|&&x| pos[x].0 == i).map(|&x| pos[x].1).collect();
            Some((*ps.iter().min()?, *ps.iter().max()?))
        };
        let verts: Vec<usize> = (0..n).filter(|&v| span_on(v).is_some()).collect();
        let (graph, order) = local_instance(g, &verts, |v| span_on(v).unwrap());
        let own: Vec<bool> = verts.iter().map(|v| c.binary_search(v).is_err()).collect();
        let plain: Vec<usize> = if verts.is_empty() {
            vec![]
        } else {
            greedy_targeted_domination(&graph, &order, &own, &own).expect("branch vertices dominate themselves")
        };
        let mut with = vec![None; c.len()];
        for (ci, &x) in c.iter().enumerate() {
            if let Ok(lx) = verts.binary_search(&x) {
                with[ci] = Some(domset_including(&graph, &order, lx, None)?);
            }
        }
        let reach = verts.iter().map(|&v| span_on(v).unwrap().1).collect();
        data.push(Branch { verts, graph, order, own, plain, with, reach });
    }
    // cost of branch i beyond the center vertex x
    let cost = |i: usize, ci: usize| -> usize {
        match &data[i].with[ci] {
            Some(s) => s.len() - 1,
            None => data[i].plain.len(),
        }
    };
    let mins: Vec<usize> = (0..d).map(|i| (0..c.len()).map(|ci| cost(i, ci)).min().unwrap()).collect();
    // B_i: the center vertices reaching the branch optimum
    let traces: Vec<u64> =
        (0..c.len()).map(|ci| (0..d).filter(|&i| cost(i, ci) == mins[i]).map(|i| 1u64 << i).sum()).collect();
    let mut distinct: Vec<(u64, usize)> = Vec::new();
    for (ci, &t) in traces.iter().enumerate() {
        if !distinct.iter().any(|&(m, _)| m == t) {
            distinct.push((t, ci));
        }
    }
    let full: u64 = (1u64 << d) - 1;
    let picked = min_cover_by_masks(&distinct.iter().map(|p| p.0).collect::<Vec<_>>(), full);
    let mut hitting: Vec<usize> = picked.iter().map(|&i| distinct[i].1).collect();
    if hitting.is_empty() {
        hitting.push(0);
    }
    let mut with_center: Vec<usize> = hitting.iter().map(|&ci| c[ci]).collect();
    for i in 0..d {
        let ci = *hitting.iter().find(|&&ci| traces[ci] >> i & 1 == 1).unwrap();
        let local = match &data[i].with[ci] {
            Some(s) => s.clone(),
            None => data[i].plain.clone(),
        };
        with_center.extend(local.iter().map(|&l| data[i].verts[l]));
    }
    with_center.sort_unstable();
    with_center.dedup();
    let mut best = with_center;
    // no center vertex at all: every branch optimal, and together they must
    // reach every vertex of C
    let plain_total: usize = data.iter().map(|b| b.plain.len()).sum();
    if plain_total <= best.len() {
        let mut without = Vec::new();
        let mut reached = vec![false; c.len()];
        for b in &data {
            let mut usable: Vec<usize> = Vec::new();
            for l in 0..b.verts.len() {
                if b.own[l] {
                    continue;
                }
                let mut targets = b.own.clone();
                targets[l] = true;
                if greedy_targeted_domination(&b.graph, &b.order, &targets, &b.own).is_some_and(|s| s.len() == b.plain.len()) {
                    usable.push(l);
                }
            }
            let Some(&shortest) = usable.iter().min_by_key(|&&l| (b.reach[l], l)) else {
                without.extend(b.plain.iter().map(|&l| b.verts[l]));
                continue;
            };
            let mut targets = b.own.clone();
            targets[shortest] = true;
            let s = greedy_targeted_domination(&b.graph, &b.order, &targets, &b.own).unwrap();
            for &l in &usable {
                reached[c.binary_search(&b.verts[l]).unwrap()] = true;
            }
            without.extend(s.iter().map(|&l| b.verts[l]));
        }
        without.sort_unstable();
        if reached.iter().all(|&r| r) && (without.len(), &without) < (best.len(), &best) {
            best = without;
        }
    }
    assert!(g.is_dominating(&best), "star domination produced a non-dominating set");
    Ok(best)
}

/// Choices made for one candidate solution on a general host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationState {
    /// Chosen vertices whose subtree touches a high-degree node.
    pub d_high: Vec<usize>,
    /// Per low-degree path: the first and last chosen vertex (equal for a
    /// single pick), or nothing.
    pub ends: Vec<Option<(usize, usize)>>,
    /// Per low-degree path: the remaining chosen vertices.
    pub completion: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HostSolution {
    pub set: Vec<usize>,
    pub state: DominationState,
}

/// Vertices split into those touching a high-degree node and those on one
/// low-degree path, with positions along the path.
struct HostLayout {
    high: Vec<usize>,
    paths: Vec<Vec<usize>>,
    span: Vec<(usize, usize)>,
}

fn host_layout(g: &Graph, rep: &Representation) -> Result<HostLayout> {
    check_rep(g, rep)?;
    let sub = &rep.host.subdivision;
    let hn = sub.n();
    let is_high: Vec<bool> = (0..hn).map(|x| sub.degree(x) >= 3).collect();
    let mut path_of = vec![usize::MAX; hn];
    let mut index = vec![0; hn];
    let mut npaths = 0;
    for s in 0..hn {
        if is_high[s] || path_of[s] != usize::MAX {
            continue;
        }
        let mut comp = vec![s];
        path_of[s] = npaths;
        let mut i = 0;
        while i < comp.len() {
            for &y in sub.neighbors(comp[i]) {
                if !is_high[y] && path_of[y] == usize::MAX {
                    path_of[y] = npaths;
                    comp.push(y);
                }
            }
            i += 1;
        }
        let low_deg = |x: usize| sub.neighbors(x).iter().filter(|&&y| !is_high[y]).count();
        let Some(&start) = comp.iter().find(|&&x| low_deg(x) <= 1) else {
            return argument("host has a cycle without high-degree nodes; use a circular-arc algorithm");
        };
        let (mut prev, mut cur) = (usize::MAX, start);
        for k in 0..comp.len() {
            index[cur] = k;
            let next = sub.neighbors(cur).iter().copied().find(|&y| !is_high[y] && y != prev);
            prev = cur;
            if let Some(y) = next {
                cur = y;
            }
        }
        npaths += 1;
    }
    let n = g.n();
    let mut high = Vec::new();
    let mut paths = vec![Vec::new(); npaths];
    let mut span = vec![(0, 0); n];
    for v in 0..n {
        let set = rep.set(v);
        if set.iter().any(|&x| is_high[x]) {
            high.push(v);
        } else {
            let p = path_of[set[0]];
            let ps = set.iter().map(|&x| index[x]);
            span[v] = (ps.clone().min().unwrap(), ps.max().unwrap());
            paths[p].push(v);
        }
    }
    Ok(HostLayout { high, paths, span })
}

/// One way to handle a low-degree path.
#[derive(Clone)]
struct PathOption {
    ends: Option<(usize, usize)>,
    completion: Vec<usize>,
    /// High vertices the ends reach.
    covers: Bits,
}

impl PathOption {
    fn cost(&self) -> usize {
        let e = match self.ends {
            None => 0,
            Some((a, b)) if a == b => 1,
            Some(_) => 2,
        };
        e + self.completion.len()
    }

    fn vertices(&self) -> Vec<usize> {
        let mut v = self.completion.clone();
        if let Some((a, b)) = self.ends {
            v.push(a);
            v.push(b);
        }
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Variant {
    Dominating,
    IndependentDominating,
}

/// Options for one path given the high part `dh` (dominated set `dom`).
fn path_options(
    g: &Graph,
    lay: &HostLayout,
    nb: &[Bits],
    p: usize,
    dh: &Bits,
    dom: &Bits,
    variant: Variant,
) -> Vec<PathOption> {
    let n = g.n();
    let verts = &lay.paths[p];
    let span = &lay.span;
    let independent = variant == Variant::IndependentDominating;
    let free = |v: usize| !independent || !nb[v].intersects(dh);
    let reach_high = |picks: &[usize]| {
        let mut b = Bits::new(n);
        for &v in picks {
            for &h in &lay.high {
                if g.has_edge(v, h) {
                    b.insert(h);
                }
            }
        }
        b
    };
    let undominated: Vec<usize> = verts.iter().copied().filter(|&v| !dom.contains(v)).collect();
    let mut out = Vec::new();
    if undominated.is_empty() {
        out.push(PathOption { ends: None, completion: vec![], covers: Bits::new(n) });
    }
    for &f in verts {
        if !free(f) {
            continue;
        }
        if undominated.iter().all(|&u| u == f || g.has_edge(u, f)) {
            out.push(PathOption { ends: Some((f, f)), completion: vec![], covers: reach_high(&[f]) });
        }
    }
    let (sub, order) = local_instance(g, verts, |v| span[v]);
    let local = |v: usize| verts.binary_search(&v).unwrap();
    for &f in verts {
        for &l in verts {
            if f == l || !free(f) || !free(l) {
                continue;
            }
            let (sf, sl) = (span[f], span[l]);
            let ordered = if independent { sf.1 < sl.0 } else { sf.0 <= sl.0 && sf.1 <= sl.1 && (sf, f) < (sl, l) };
            if !ordered {
                continue;
            }
            // nothing left of the first pick or right of the last may be
            // left for the completion
            let outside = |u: usize| span[u].1 < sf.0 || span[u].0 > sl.1;
            let left: Vec<usize> =
                undominated.iter().copied().filter(|&u| u != f && u != l && !g.has_edge(u, f) && !g.has_edge(u, l)).collect();
            if left.iter().any(|&u| outside(u)) {
                continue;
            }
            let completion = match variant {
                Variant::Dominating => {
                    let mut targets = vec![false; verts.len()];
                    for &u in &left {
                        targets[local(u)] = true;
                    }
                    let cands: Vec<bool> = verts.iter().map(|&m| span[m].0 >= sf.0 && span[m].1 <= sl.1).collect();
                    match greedy_targeted_domination(&sub, &order, &targets, &cands) {
                        Some(s) => s.into_iter().map(|i| verts[i]).filter(|&m| m != f && m != l).collect(),
                        None => continue,
                    }
                }
                Variant::IndependentDominating => {
                    let cands: Vec<usize> = verts
                        .iter()
                        .copied()
                        .filter(|&m| free(m) && span[m].0 > sf.1 && span[m].1 < sl.0)
                        .collect();
                    match independent_chain(&left, &cands, f, l, span) {
                        Some(s) => s,
                        None => continue,
                    }
                }
            };
            out.push(PathOption { ends: Some((f, l)), completion, covers: reach_high(&[f, l]) });
        }
    }
    // per coverage keep the cheapest option
    out.sort_by(|a, b| (a.cost(), a.vertices()).cmp(&(b.cost(), b.vertices())));
    let mut kept: Vec<PathOption> = Vec::new();
    for o in out {
        if !kept.iter().any(|k| o.covers.is_subset(&k.covers)) {
            kept.push(o);
        }
    }
    kept
}

/// Shortest chain `f = c_0, c_1, .., c_k = l` of pairwise disjoint
/// intervals from `cands` leaving no target in a gap; returns the inner
/// vertices.
fn independent_chain(targets: &[usize], cands: &[usize], f: usize, l: usize, span: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut nodes: Vec<usize> = vec![f];
    let mut inner = cands.to_vec();
    inner.sort_by_key(|&v| (span[v].1, v));
    nodes.extend(inner);
    nodes.push(l);
    let gap_ok = |a: usize, b: usize| !targets.iter().any(|&x| span[x].0 > span[a].1 && span[x].1 < span[b].0);
    let k = nodes.len();
    let mut best: Vec<Option<(usize, usize)>> = vec![None; k];
    best[0] = Some((0, usize::MAX));
    for j in 1..k {
        for i in 0..j {
            let Some((c, _)) = best[i] else { continue };
            if span[nodes[i]].1 < span[nodes[j]].0 && gap_ok(nodes[i], nodes[j]) && best[j].is_none_or(|(cc, _)| cc > c + 1) {
                best[j] = Some((c + 1, i));
            }
        }
    }
    best[k - 1]?;
    let mut out = Vec::new();
    let mut j = best[k - 1].unwrap().1;
    while j != 0 {
        out.push(nodes[j]);
        j = best[j].unwrap().1;
    }
    out.sort_unstable();
    Some(out)
}

fn subsets_up_to(items: &[usize], max: usize, pred: &dyn Fn(&[usize]) -> bool, out: &mut Vec<Vec<usize>>) {
    fn rec(items: &[usize], start: usize, max: usize, cur: &mut Vec<usize>, pred: &dyn Fn(&[usize]) -> bool, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            if pred(cur) {
                rec(items, i + 1, max, cur, pred, out);
            }
            cur.pop();
        }
    }
    rec(items, 0, max, &mut Vec::new(), pred, out);
}

fn solve_general(g: &Graph, rep: &Representation, variant: Variant) -> Result<HostSolution> {
    let lay = host_layout(g, rep)?;
    let n = g.n();
    let nb = neighborhoods(g);
    let e = rep.host.pattern.m();
    let cap = match variant {
        Variant::Dominating => 2 * e,
        Variant::IndependentDominating => lay.high.len(),
    };
    let independent = variant == Variant::IndependentDominating;
    let pred = |s: &[usize]| !independent || s.iter().all(|&a| s.iter().all(|&b| a == b || !g.has_edge(a, b)));
    let mut highs = Vec::new();
    subsets_up_to(&lay.high, cap, &pred, &mut highs);
    highs.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let mut best: Option<(Vec<usize>, DominationState)> = None;
    for dh_list in highs {
        if best.as_ref().is_some_and(|(b, _)| dh_list.len() > b.len()) {
            break;
        }
        let dh = Bits::from_slice(n, &dh_list);
        let mut dom = dh.clone();
        for &v in &dh_list {
            dom = dom.or(&nb[v]);
        }
        let options: Vec<Vec<PathOption>> =
            (0..lay.paths.len()).map(|p| path_options(g, &lay, &nb, p, &dh, &dom, variant)).collect();
        if options.iter().any(|o| o.is_empty()) {
            continue;
        }
        let need: Bits = Bits::from_slice(n, &lay.high).minus(&dom);
        // depth-first over paths, cheapest options first
        let mut choice = vec![0usize; options.len()];
        let mut stack_cov: Vec<Bits> = vec![Bits::new(n)];
        let mut cost: Vec<usize> = vec![dh_list.len()];
        let mut depth = 0;
        let rest_min: Vec<usize> = {
            let mins: Vec<usize> = options.iter().map(|o| o.iter().map(|x| x.cost()).min().unwrap()).collect();
            (0..=mins.len()).map(|i| mins[i..].iter().sum()).collect()
        };
        loop {
            if depth == options.len() {
                if need.is_subset(&stack_cov[depth]) {
                    let mut set = dh_list.clone();
                    let mut ends = Vec::new();
                    let mut completion = Vec::new();
                    for (p, &c) in choice.iter().enumerate() {
                        let o = &options[p][c];
                        set.extend(o.vertices());
                        ends.push(o.ends);
                        completion.push(o.completion.clone());
                    }
                    set.sort_unstable();
                    set.dedup();
                    if best.as_ref().is_none_or(|(b, _)| (set.len(), &set) < (b.len(), b)) {
                        best = Some((set, DominationState { d_high: dh_list.clone(), ends, completion }));
                    }
                }
            } else if choice[depth] < options[depth].len() {
                let o = &options[depth][choice[depth]];
                let c = cost[depth] + o.cost();
                let bound = c + rest_min[depth + 1];
                if best.as_ref().is_none_or(|(b, _)| bound <= b.len()) {
                    stack_cov.truncate(depth + 1);
                    cost.truncate(depth + 1);
                    stack_cov.push(stack_cov[depth].or(&o.covers));
                    cost.push(c);
                    depth += 1;
                    if depth < options.len() {
                        choice[depth] = 0;
                    }
                    continue;
                }
                choice[depth] = options[depth].len();
                continue;
            }
            if depth == 0 {
                break;
            }
            depth -= 1;
            choice[depth] += 1;
        }
    }
    let (set, state) = best.expect("the whole vertex set is a candidate");
    assert!(g.is_dominating(&set));
    if independent {
        assert!(g.is_independent(&set));
    }
    Ok(HostSolution { set, state })
}

/// Minimum dominating set from any representation whose host is not a cycle.
pub fn min_domset_hgraph(g: &Graph, rep: &Representation) -> Result<HostSolution> {
    solve_general(g, rep, Variant::Dominating)
}

/// Minimum independent dominating set, same enumeration.
pub fn min_independent_domset_hgraph(g: &Graph, rep: &Representation) -> Result<HostSolution> {
    solve_general(g, rep, Variant::IndependentDominating)
}

/// Maximum independent set: the high vertices are enumerated, each path
/// is then an interval graph solved greedily.
pub fn max_independent_set_hgraph(g: &Graph, rep: &Representation) -> Result<Vec<usize>> {
    let lay = host_layout(g, rep)?;
    let pred = |s: &[usize]| s.iter().all(|&a| s.iter().all(|&b| a == b || !g.has_edge(a, b)));
    let mut highs = Vec::new();
    subsets_up_to(&lay.high, lay.high.len(), &pred, &mut highs);
    let mut best: Vec<usize> = Vec::new();
    let mut first = true;
    for sh in highs {
        let mut set = sh.clone();
        for verts in &lay.paths {
            let free: Vec<usize> = verts.iter().copied().filter(|&v| sh.iter().all(|&h| !g.has_edge(v, h))).collect();
            if free.is_empty() {
                continue;
            }
            let (sub, order) = local_instance(g, &free, |v| lay.span[v]);
            set.extend(greedy_mis_interval(&sub, &order).into_iter().map(|i| free[i]));
        }
        set.sort_unstable();
        if first || set.len() > best.len() || (set.len() == best.len() && set < best) {
            best = set;
            first = false;
        }
    }
    assert!(g.is_independent(&best));
    Ok(best)
}

/// Chosen vertices whose subtree touches a node of degree at least 3.
pub fn high_part(rep: &Representation, set: &[usize]) -> Vec<usize> {
    let sub = &rep.host.subdivision;
    set.iter().copied().filter(|&v| rep.set(v).iter().any(|&x| sub.degree(x) >= 3)).collect()
}
