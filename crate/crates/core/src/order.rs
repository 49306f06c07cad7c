//! Posets, incomparability graphs, transitive orientation, chain covers and
//! interval dimension of height-1 posets.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{argument, structural, Error, Result};
use crate::graph::Graph;

/// Strict partial order on `0..n`, stored as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    lt: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    lt: Vec<[usize; 2]>,
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson { n: self.n, lt: self.pairs().into_iter().map(|(a, b)| [a, b]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PosetJson::deserialize(d)?;
        let pairs: Vec<(usize, usize)> = raw.lt.iter().map(|p| (p[0], p[1])).collect();
        Poset::new(raw.n, &pairs).map_err(serde::de::Error::custom)
    }
}

impl Poset {
    /// Builds the order from its full relation; rejects relations that are
    /// not irreflexive and transitive.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut lt = vec![false; n * n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return structural(format!("pair ({a},{b}) out of range"));
            }
            lt[a * n + b] = true;
        }
        let p = Poset { n, lt };
        for a in 0..n {
            if p.lt(a, a) {
                return structural(format!("{a} < {a}"));
            }
            for b in 0..n {
                if !p.lt(a, b) {
                    continue;
                }
                for c in 0..n {
                    if p.lt(b, c) && !p.lt(a, c) {
                        return structural(format!("not transitive: {a}<{b}<{c}"));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Transitive closure of the given pairs; fails on a cycle.
    pub fn from_cover(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut lt = vec![false; n * n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return structural(format!("pair ({a},{b}) out of range"));
            }
            lt[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if lt[i * n + k] {
                    for j in 0..n {
                        if lt[k * n + j] {
                            lt[i * n + j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| lt[i * n + i]) {
            return structural("relation has a cycle");
        }
        Ok(Poset { n, lt })
    }

    pub fn antichain(n: usize) -> Poset {
        Poset { n, lt: vec![false; n * n] }
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Poset::from_cover(n, &pairs).unwrap()
    }

    /// Minima `0..k`, maxima `k..2k`, with `i < k + j` exactly when `i != j`.
    pub fn standard_example(k: usize) -> Poset {
        let pairs: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, k + j))).collect();
        Poset::new(2 * k, &pairs).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.n + b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Length of the longest chain minus one (0 for an antichain, and for
    /// the empty poset).
    pub fn height(&self) -> usize {
        let order = self.linear_extension();
        let mut longest = vec![0usize; self.n];
        for &b in &order {
            for a in 0..self.n {
                if self.lt(a, b) {
                    longest[b] = longest[b].max(longest[a] + 1);
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        (0..self.n).all(|a| !self.lt(a, x))
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        (0..self.n).all(|b| !self.lt(x, b))
    }

    /// Split of a height-1 poset: isolated elements count as minima.
    pub fn height1_split(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        if self.height() > 1 {
            return argument("poset has height greater than 1");
        }
        let mins: Vec<usize> = (0..self.n).filter(|&x| self.is_minimal(x)).collect();
        let maxs: Vec<usize> = (0..self.n).filter(|&x| !self.is_minimal(x)).collect();
        Ok((mins, maxs))
    }

    /// A linear extension, smallest available element first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = (0..self.n).map(|b| (0..self.n).filter(|&a| self.lt(a, b)).count()).collect();
        let mut done = vec![false; self.n];
        let mut out = Vec::with_capacity(self.n);
        while out.len() < self.n {
            let x = (0..self.n).find(|&x| !done[x] && indeg[x] == 0).expect("acyclic");
            done[x] = true;
            out.push(x);
            for b in 0..self.n {
                if self.lt(x, b) {
                    indeg[b] -= 1;
                }
            }
        }
        out
    }

    /// Comparability graph: edges between comparable pairs.
    pub fn comparability_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.comparable(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn is_chain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<Poset> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Edges between incomparable pairs.
pub fn incomparability_graph(p: &Poset) -> Graph {
    p.comparability_graph().complement()
}

/// Transitive orientation by implication classes: pick an unoriented edge,
/// orient its whole class in the remaining graph, delete the class, repeat.
/// Returns the oriented edges `(a, b)` meaning `a < b`, or an edge whose
/// class forces it both ways.
pub fn transitive_orientation(g: &Graph) -> std::result::Result<Vec<(usize, usize)>, (usize, usize)> {
    let n = g.n();
    let mut alive = vec![false; n * n];
    for (u, v) in g.edges() {
        alive[u * n + v] = true;
        alive[v * n + u] = true;
    }
    let mut dir = vec![false; n * n];
    let mut out = Vec::new();
    for (u0, v0) in g.edges() {
        if !alive[u0 * n + v0] {
            continue;
        }
        // implication class of (u0, v0) in the remaining graph
        let mut mark = vec![0u8; n * n];
        let mut stack = vec![(u0, v0)];
        mark[u0 * n + v0] = 1;
        let mut class = vec![(u0, v0)];
        while let Some((a, b)) = stack.pop() {
            let mut push = |x: usize, y: usize, stack: &mut Vec<(usize, usize)>, class: &mut Vec<(usize, usize)>| {
                if mark[y * n + x] == 1 {
                    return Err((x, y));
                }
                if mark[x * n + y] == 0 {
                    mark[x * n + y] = 1;
                    stack.push((x, y));
                    class.push((x, y));
                }
                Ok(())
            };
            for c in 0..n {
                // a->b forces a->c when bc is absent, and c->b when ac is absent
                if c != b && alive[a * n + c] && !alive[b * n + c] {
                    push(a, c, &mut stack, &mut class)?;
                }
                if c != a && alive[c * n + b] && !alive[a * n + c] {
                    push(c, b, &mut stack, &mut class)?;
                }
            }
        }
        for &(a, b) in &class {
            dir[a * n + b] = true;
            out.push((a, b));
        }
        for &(a, b) in &class {
            alive[a * n + b] = false;
            alive[b * n + a] = false;
        }
    }
    debug_assert!(is_transitive_orientation(n, &dir));
    out.sort_unstable();
    Ok(out)
}

fn is_transitive_orientation(n: usize, dir: &[bool]) -> bool {
    (0..n).all(|a| (0..n).all(|b| !dir[a * n + b] || (0..n).all(|c| !dir[b * n + c] || dir[a * n + c])))
}

/// The poset of a transitive orientation of `g`, if `g` is a comparability graph.
pub fn comparability_poset(g: &Graph) -> Option<Poset> {
    let arcs = transitive_orientation(g).ok()?;
    Some(Poset::new(g.n(), &arcs).expect("transitive orientation is a strict order"))
}

/// Minimum chain partition: chains are the paths of a maximum matching in
/// the split graph `a -> b` for `a < b`.
pub fn min_chain_cover(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.n();
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    fn augment(p: &Poset, a: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for b in 0..p.n() {
            if p.lt(a, b) && !seen[b] {
                seen[b] = true;
                if match_right[b].is_none_or(|a2| augment(p, a2, seen, match_right)) {
                    match_right[b] = Some(a);
                    return true;
                }
            }
        }
        false
    }
    for a in 0..n {
        augment(p, a, &mut vec![false; n], &mut match_right);
    }
    let mut next = vec![None; n];
    for b in 0..n {
        if let Some(a) = match_right[b] {
            next[a] = Some(b);
        }
    }
    let mut chains = Vec::new();
    for start in 0..n {
        if match_right[start].is_some() {
            continue;
        }
        let mut chain = vec![start];
        let mut c = start;
        while let Some(d) = next[c] {
            chain.push(d);
            c = d;
        }
        chains.push(chain);
    }
    chains
}

/// Interval order given by closed intervals; `x < y` iff `right(x) < left(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalOrderSpec {
    pub endpoints: Vec<(Rational64, Rational64)>,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    endpoints: Vec<[String; 2]>,
}

impl Serialize for IntervalOrderSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpecJson { endpoints: self.endpoints.iter().map(|(l, r)| [l.to_string(), r.to_string()]).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntervalOrderSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SpecJson::deserialize(d)?;
        let mut endpoints = Vec::with_capacity(raw.endpoints.len());
        for [l, r] in raw.endpoints {
            let l: Rational64 = l.parse().map_err(|_| serde::de::Error::custom(format!("bad rational {l}")))?;
            let r: Rational64 = r.parse().map_err(|_| serde::de::Error::custom(format!("bad rational {r}")))?;
            endpoints.push((l, r));
        }
        IntervalOrderSpec::new(endpoints).map_err(serde::de::Error::custom)
    }
}

impl IntervalOrderSpec {
    pub fn new(endpoints: Vec<(Rational64, Rational64)>) -> Result<IntervalOrderSpec> {
        if let Some(i) = endpoints.iter().position(|(l, r)| l > r) {
            return structural(format!("interval {i} has left > right"));
        }
        Ok(IntervalOrderSpec { endpoints })
    }

    pub fn from_integers(endpoints: &[(i64, i64)]) -> Result<IntervalOrderSpec> {
        IntervalOrderSpec::new(endpoints.iter().map(|&(l, r)| (Rational64::from(l), Rational64::from(r))).collect())
    }

    /// Builds intervals from the sequence of endpoint events, left to right:
    /// `(element, is_left)`; each element must appear once as a left and
    /// then once as a right end.
    pub fn from_sequence(n: usize, events: &[(usize, bool)]) -> Result<IntervalOrderSpec> {
        let mut ends: Vec<(Option<i64>, Option<i64>)> = vec![(None, None); n];
        for (pos, &(x, is_left)) in events.iter().enumerate() {
            if x >= n {
                return structural(format!("element {x} out of range"));
            }
            let slot = if is_left { &mut ends[x].0 } else { &mut ends[x].1 };
            if slot.is_some() {
                return structural(format!("element {x} has a repeated endpoint"));
            }
            *slot = Some(pos as i64);
        }
        let mut out = Vec::with_capacity(n);
        for (x, e) in ends.into_iter().enumerate() {
            match e {
                (Some(l), Some(r)) => out.push((l, r)),
                _ => return structural(format!("element {x} lacks an endpoint")),
            }
        }
        IntervalOrderSpec::from_integers(&out)
    }

    pub fn n(&self) -> usize {
        self.endpoints.len()
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.endpoints[x].1 < self.endpoints[y].0
    }

    pub fn poset(&self) -> Poset {
        let n = self.n();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| self.lt(x, y)).collect();
        Poset::new(n, &pairs).expect("interval orders are strict orders")
    }

    /// Integer intervals for the min-max part of this order on a height-1
    /// poset: minima get `[0, a+1]` and maxima `[b+1, n]`, where `a` counts
    /// minima with a strictly larger up-set and `b` counts minima below.
    /// Pairs among minima, among maxima, and maximum-before-minimum are
    /// all dropped.
    pub fn normalized(&self, mins: &[usize], maxs: &[usize]) -> IntervalOrderSpec {
        let n = self.n();
        let up = |x: usize| -> Vec<usize> { maxs.iter().copied().filter(|&y| self.lt(x, y)).collect() };
        let ups: Vec<Vec<usize>> = (0..n).map(up).collect();
        let mut endpoints = vec![(Rational64::from(0), Rational64::from(0)); n];
        for &x in mins {
            let a = mins.iter().filter(|&&x2| ups[x2].len() > ups[x].len()).count() as i64;
            let r = if maxs.is_empty() { 0 } else { a + 1 };
            endpoints[x] = (Rational64::from(0), Rational64::from(r));
        }
        for &y in maxs {
            let b = mins.iter().filter(|&&x| self.lt(x, y)).count() as i64;
            endpoints[y] = (Rational64::from(b + 1), Rational64::from(n as i64));
        }
        IntervalOrderSpec { endpoints }
    }
}

/// Intersection of interval orders on a common ground set.
pub fn realizer_intersection(specs: &[IntervalOrderSpec], n: usize) -> Result<Poset> {
    if let Some(s) = specs.iter().find(|s| s.n() != n) {
        return argument(format!("realizer order on {} elements, expected {n}", s.n()));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && specs.iter().all(|s| s.lt(x, y)))
        .collect();
    Poset::new(n, &pairs)
}

/// Realizer with at most `k` interval orders for a height-1 poset, or
/// `None` when none exists.
///
/// Every interval order of a realizer may be taken to keep the minima
/// overlapping and the maxima overlapping, so it is a Ferrers relation on
/// minima x maxima containing the poset. The search assigns each
/// incomparable min-max pair to one order that must exclude it; an order
/// stays feasible while its threshold constraints (`f(x) > g(y)` for pairs
/// kept, `f(x) <= g(y)` for pairs excluded) have no directed cycle.
pub fn interval_dimension_height1(p: &Poset, k: usize) -> Result<Option<Vec<IntervalOrderSpec>>> {
    let (mins, maxs) = p.height1_split()?;
    let n = p.n();
    let open: Vec<(usize, usize)> =
        mins.iter().flat_map(|&x| maxs.iter().map(move |&y| (x, y))).filter(|&(x, y)| !p.lt(x, y)).collect();
    if open.is_empty() {
        if k == 0 && n > 0 {
            return Ok(None);
        }
        let spec = ferrers_spec(p, &mins, &maxs, &[]);
        return Ok(Some(if n == 0 { vec![] } else { vec![spec] }));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut excluded: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    if !assign(p, &mins, &maxs, &open, 0, &mut excluded) {
        return Ok(None);
    }
    let specs: Vec<IntervalOrderSpec> = excluded
        .iter()
        .filter(|e| !e.is_empty())
        .map(|e| ferrers_spec(p, &mins, &maxs, e))
        .collect();
    debug_assert_eq!(realizer_intersection(&specs, n).unwrap(), *p);
    Ok(Some(specs))
}

/// Smallest `k` admitting a realizer, with the realizer.
pub fn interval_dimension_of_height1(p: &Poset) -> Result<(usize, Vec<IntervalOrderSpec>)> {
    for k in 0..=p.n().max(1) {
        if let Some(r) = interval_dimension_height1(p, k)? {
            return Ok((r.len(), r));
        }
    }
    unreachable!("one order per incomparable pair always suffices")
}

fn assign(
    p: &Poset,
    mins: &[usize],
    maxs: &[usize],
    open: &[(usize, usize)],
    i: usize,
    excluded: &mut Vec<Vec<(usize, usize)>>,
) -> bool {
    if i == open.len() {
        return true;
    }
    let used = excluded.iter().filter(|e| !e.is_empty()).count();
    for c in 0..excluded.len().min(used + 1) {
        excluded[c].push(open[i]);
        if thresholds(p, mins, maxs, &excluded[c]).is_some() && assign(p, mins, maxs, open, i + 1, excluded) {
            return true;
        }
        excluded[c].pop();
    }
    false
}

/// Levels `f` on minima and `g` on maxima with `f(x) > g(y)` whenever
/// `x < y` and `f(x) <= g(y)` on `out`; indexed by element id.
fn thresholds(p: &Poset, mins: &[usize], maxs: &[usize], out: &[(usize, usize)]) -> Option<Vec<i64>> {
    let n = p.n();
    // arc u -> v with weight w means level(v) >= level(u) + w
    let mut arcs: Vec<(usize, usize, i64)> = Vec::new();
    for &x in mins {
        for &y in maxs {
            if p.lt(x, y) {
                arcs.push((y, x, 1));
            }
        }
    }
    for &(x, y) in out {
        arcs.push((x, y, 0));
    }
    // longest paths by Bellman-Ford; a positive cycle means infeasible
    let mut level = vec![0i64; n];
    for round in 0..=n {
        let mut changed = false;
        for &(u, v, w) in &arcs {
            if level[u] + w > level[v] {
                level[v] = level[u] + w;
                changed = true;
            }
        }
        if !changed {
            return Some(level);
        }
        if round == n {
            return None;
        }
    }
    None
}

fn ferrers_spec(p: &Poset, mins: &[usize], maxs: &[usize], out: &[(usize, usize)]) -> IntervalOrderSpec {
    let level = thresholds(p, mins, maxs, out).expect("feasible class");
    // x below y iff f(x) > g(y): right(x) = -f(x), left(y) = -g(y) + 1/2
    let half = Rational64::new(1, 2);
    let mut endpoints = vec![(Rational64::from(0), Rational64::from(0)); p.n()];
    let lo = -(p.n() as i64) - 2;
    let hi = 2;
    for &x in mins {
        endpoints[x] = (Rational64::from(lo), Rational64::from(-level[x]));
    }
    for &y in maxs {
        endpoints[y] = (Rational64::from(-level[y]) - half, Rational64::from(hi));
    }
    let raw = IntervalOrderSpec { endpoints };
    raw.normalized(mins, maxs)
}

/// The three interval orders of the standard example on three minima
/// (0,1,2) and three maxima (3,4,5), as left-to-right endpoint events.
pub fn standard_example_realizer() -> Vec<IntervalOrderSpec> {
    let seqs: [[(usize, bool); 12]; 3] = [
        [(0, true), (1, true), (2, true), (1, false), (2, false), (3, true), (0, false), (4, true), (5, true), (3, false), (4, false), (5, false)],
        [(0, true), (1, true), (2, true), (0, false), (2, false), (4, true), (1, false), (3, true), (5, true), (3, false), (4, false), (5, false)],
        [(0, true), (1, true), (2, true), (0, false), (1, false), (5, true), (2, false), (3, true), (4, true), (3, false), (4, false), (5, false)],
    ];
    seqs.iter().map(|s| IntervalOrderSpec::from_sequence(6, s).expect("well-formed event lists")).collect()
}
