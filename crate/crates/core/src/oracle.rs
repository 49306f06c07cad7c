//! Seeded instance generators and exhaustive oracles.
//!
//! The oracles here only share the graph and poset types with the rest of
//! the crate; each one is a direct search over the defining object, so that
//! agreement with the fast algorithms means something.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{canonical_subdivision, Graph, HostModel, Representation};
use crate::order::Poset;

/// SplitMix64. Constants: increment 0x9E3779B97F4A7C15, multipliers
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        ((self.next_u64() >> 11) as f64) / ((1u64 << 53) as f64) < p
    }

    pub fn shuffle<T>(&mut self, v: &mut [T]) {
        for i in (1..v.len()).rev() {
            let j = self.below(i + 1);
            v.swap(i, j);
        }
    }
}

pub fn random_graph(n: usize, p: f64, rng: &mut Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random connected node set: a random start node grown by randomized BFS
/// until it has `size` nodes (or its component is exhausted).
pub fn random_connected_set(host: &Graph, size: usize, rng: &mut Rng) -> Vec<usize> {
    let start = rng.below(host.n());
    let mut inside = vec![false; host.n()];
    let mut on_frontier = vec![false; host.n()];
    inside[start] = true;
    let mut set = vec![start];
    let mut frontier: Vec<usize> = Vec::new();
    for &w in host.neighbors(start) {
        on_frontier[w] = true;
        frontier.push(w);
    }
    while set.len() < size && !frontier.is_empty() {
        let i = rng.below(frontier.len());
        let x = frontier.swap_remove(i);
        inside[x] = true;
        set.push(x);
        for &w in host.neighbors(x) {
            if !inside[w] && !on_frontier[w] {
                on_frontier[w] = true;
                frontier.push(w);
            }
        }
    }
    set.sort_unstable();
    set
}

/// Random node sets of size `1..=max_size` on a given host; the graph is
/// their intersection graph.
pub fn random_rep_on(host: &HostModel, n: usize, max_size: usize, rng: &mut Rng) -> (Graph, Representation) {
    let sets: Vec<Vec<usize>> = (0..n)
        .map(|_| {
            let size = rng.range(1, max_size.max(1));
            random_connected_set(&host.subdivision, size, rng)
        })
        .collect();
    let rep = Representation::new(host.clone(), sets);
    (rep.intersection_graph(), rep)
}

/// `n` random connected node sets on the canonical subdivision of `h`
/// (sizes uniform in `1..=2n+1`).
pub fn random_subtree_rep(h: &Graph, n: usize, seed: u64) -> (Graph, Representation) {
    let mut rng = Rng::new(seed);
    let host = canonical_subdivision(h, n.max(1));
    if n == 0 {
        let rep = Representation::new(host, vec![]);
        return (Graph::new(0), rep);
    }
    random_rep_on(&host, n, 2 * n + 1, &mut rng)
}

/// Height-1 poset: `k` minima, the rest maxima, each min/max pair related
/// with probability `density`.
pub fn random_height1_poset(n_min: usize, n_max: usize, density: f64, seed: u64) -> Poset {
    let mut rng = Rng::new(seed);
    let n = rng.range(n_min, n_max);
    let k = if n == 0 { 0 } else { rng.range(0, n) };
    let mut pairs = Vec::new();
    for x in 0..k {
        for y in k..n {
            if rng.chance(density) {
                pairs.push((x, y));
            }
        }
    }
    Poset::new(n, &pairs).expect("bipartite relation is an order")
}

/// Random poset: pairs `i < j` of a random linear order kept with
/// probability `p`, then closed transitively.
pub fn random_poset(n: usize, p: f64, rng: &mut Rng) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(p) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_cover(n, &pairs).unwrap()
}

/// Incomparability graph of a random poset.
pub fn random_cocomparability(n: usize, p: f64, rng: &mut Rng) -> Graph {
    random_poset(n, p, rng).comparability_graph().complement()
}

pub fn random_tree(n: usize, rng: &mut Rng) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.below(v);
        g.add_edge(u, v);
    }
    g
}

/// Random cactus: a random tree of blocks, each block an edge or a cycle
/// of length 3..=5.
pub fn random_cactus(blocks: usize, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    let mut n = 1;
    for _ in 0..blocks {
        let at = rng.below(n);
        if rng.chance(0.5) {
            edges.push((at, n));
            n += 1;
        } else {
            let len = rng.range(3, 5);
            let mut prev = at;
            for _ in 1..len {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, at));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn cap<T>(what: &str, n: usize, limit: usize) -> Result<T> {
    Err(Error::Cap(format!("{what}: n={n} exceeds the limit {limit}")))
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order, stopping
/// when it returns true.
fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return false;
    }
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub const CLIQUE_CAP: usize = 63;
pub const SUBSET_CAP: usize = 24;

/// Largest clique, lexicographically smallest among the largest.
pub fn brute_max_clique(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > CLIQUE_CAP {
        return cap("brute_max_clique", g.n(), CLIQUE_CAP);
    }
    let nb = masks(g);
    let mut best: Vec<usize> = Vec::new();
    let mut cur = Vec::new();
    fn go(nb: &[u64], cand: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() + cand.count_ones() as usize <= best.len() {
            if cand == 0 && cur.len() > best.len() {
                *best = cur.clone();
            }
            return;
        }
        if cand == 0 {
            *best = cur.clone();
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if cur.len() + rest.count_ones() as usize <= best.len() {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cur.push(v);
            go(nb, rest & nb[v], cur, best);
            cur.pop();
        }
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    go(&nb, all, &mut cur, &mut best);
    Ok(best)
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn brute_maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n() > CLIQUE_CAP {
        return cap("brute_maximal_cliques", g.n(), CLIQUE_CAP);
    }
    let nb = masks(g);
    let mut out = Vec::new();
    // Grow cliques by increasing vertex; report those no vertex extends.
    fn go(nb: &[u64], n: usize, set: u64, common: u64, next: usize, out: &mut Vec<Vec<usize>>) {
        if common == 0 {
            out.push(bits(set));
            return;
        }
        for v in next..n {
            if common >> v & 1 == 1 {
                go(nb, n, set | 1 << v, common & nb[v], v + 1, out);
            }
        }
    }
    if g.n() == 0 {
        return Ok(vec![]);
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    go(&nb, g.n(), 0, all, 0, &mut out);
    out.sort();
    Ok(out)
}

fn first_subset_of_min_size(n: usize, ok: &mut dyn FnMut(&[usize]) -> bool) -> Vec<usize> {
    for k in 0..=n {
        let mut found = None;
        for_each_subset(n, k, &mut |s| {
            if ok(s) {
                found = Some(s.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return s;
        }
    }
    unreachable!("the full vertex set always qualifies")
}

/// Minimum dominating set, lexicographically smallest among the minimum.
pub fn brute_min_domset(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > SUBSET_CAP {
        return cap("brute_min_domset", g.n(), SUBSET_CAP);
    }
    let nb = masks(g);
    let all = (1u64 << g.n()) - 1;
    Ok(first_subset_of_min_size(g.n(), &mut |s| {
        s.iter().fold(0u64, |m, &v| m | nb[v] | 1 << v) == all
    }))
}

/// Every minimum dominating set.
pub fn brute_all_min_domsets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let k = brute_min_domset(g)?.len();
    let nb = masks(g);
    let all = (1u64 << g.n()) - 1;
    let mut out = Vec::new();
    for_each_subset(g.n(), k, &mut |s| {
        if s.iter().fold(0u64, |m, &v| m | nb[v] | 1 << v) == all {
            out.push(s.to_vec());
        }
        false
    });
    Ok(out)
}

/// Maximum independent set, lexicographically smallest among the maximum.
pub fn brute_mis(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > SUBSET_CAP {
        return cap("brute_mis", g.n(), SUBSET_CAP);
    }
    let nb = masks(g);
    for k in (0..=g.n()).rev() {
        let mut found = None;
        for_each_subset(g.n(), k, &mut |s| {
            let m = s.iter().fold(0u64, |m, &v| m | 1 << v);
            if s.iter().all(|&v| nb[v] & m == 0) {
                found = Some(s.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return Ok(s);
        }
    }
    Ok(vec![])
}

/// Minimum independent dominating set, lexicographically smallest.
pub fn brute_ids(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > SUBSET_CAP {
        return cap("brute_ids", g.n(), SUBSET_CAP);
    }
    let nb = masks(g);
    let all = (1u64 << g.n()) - 1;
    Ok(first_subset_of_min_size(g.n(), &mut |s| {
        let m = s.iter().fold(0u64, |m, &v| m | 1 << v);
        s.iter().all(|&v| nb[v] & m == 0) && s.iter().fold(m, |d, &v| d | nb[v]) == all
    }))
}

/// Backtracking list coloring in vertex order, smallest color first; the
/// first coloring found is the lexicographically smallest one.
pub fn brute_list_coloring(g: &Graph, lists: &[Vec<usize>]) -> Result<Option<Vec<usize>>> {
    if g.n() > 40 {
        return cap("brute_list_coloring", g.n(), 40);
    }
    let mut col = vec![usize::MAX; g.n()];
    fn go(g: &Graph, lists: &[Vec<usize>], v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        let mut opts = lists[v].clone();
        opts.sort_unstable();
        opts.dedup();
        for c in opts {
            if g.neighbors(v).iter().all(|&w| w > v || col[w] != c) {
                col[v] = c;
                if go(g, lists, v + 1, col) {
                    return true;
                }
            }
        }
        col[v] = usize::MAX;
        false
    }
    Ok(if go(g, lists, 0, &mut col) { Some(col) } else { None })
}

/// Smallest number of chains partitioning the poset, by a subset DP over
/// chains.
pub fn brute_chain_cover(p: &Poset) -> Result<usize> {
    let n = p.n();
    if n > 14 {
        return cap("brute_chain_cover", n, 14);
    }
    let full = (1usize << n) - 1;
    let is_chain: Vec<bool> = (0..=full)
        .map(|m| {
            let b = bits(m as u64);
            b.iter().enumerate().all(|(i, &a)| b[i + 1..].iter().all(|&c| p.lt(a, c) || p.lt(c, a)))
        })
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        // the chain through the lowest element of `m`
        let mut sub = rest;
        loop {
            let c = sub | low;
            if is_chain[c] && best[m ^ c] != usize::MAX {
                best[m] = best[m].min(best[m ^ c] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(best[full])
}

/// Largest antichain size by subset enumeration.
pub fn brute_max_antichain(p: &Poset) -> Result<usize> {
    let n = p.n();
    if n > SUBSET_CAP {
        return cap("brute_max_antichain", n, SUBSET_CAP);
    }
    let mut best = 0;
    for m in 0u64..(1u64 << n) {
        let b = bits(m);
        if b.len() > best && b.iter().enumerate().all(|(i, &a)| b[i + 1..].iter().all(|&c| !p.comparable(a, c))) {
            best = b.len();
        }
    }
    Ok(best)
}

fn separates(g: &Graph, removed: u64, u: usize, v: usize) -> bool {
    let blocked: Vec<bool> = (0..g.n()).map(|x| removed >> x & 1 == 1).collect();
    !g.reach(u, &blocked)[v]
}

/// All minimal separators straight from the definition: `S` separates some
/// nonadjacent pair `u, v` and no `S - x` does.
pub fn brute_minimal_separators(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > 14 {
        return cap("brute_minimal_separators", n, 14);
    }
    let mut out = Vec::new();
    for s in 0u64..(1u64 << n) {
        let mut minimal_for_some_pair = false;
        'pairs: for u in 0..n {
            if s >> u & 1 == 1 {
                continue;
            }
            for v in u + 1..n {
                if s >> v & 1 == 1 || g.has_edge(u, v) || !separates(g, s, u, v) {
                    continue;
                }
                if bits(s).iter().all(|&x| !separates(g, s & !(1 << x), u, v)) {
                    minimal_for_some_pair = true;
                    break 'pairs;
                }
            }
        }
        if minimal_for_some_pair {
            out.push(bits(s));
        }
    }
    out.sort();
    Ok(out)
}

/// Whether some ordering of the maximal cliques has every vertex in a
/// consecutive run, with the first clique containing `left` and the last
/// containing `right`. Tries all permutations.
pub fn brute_interval_order(g: &Graph, left: Option<&[usize]>, right: Option<&[usize]>) -> Result<bool> {
    let cliques = brute_maximal_cliques(g)?;
    let k = cliques.len();
    if k > 9 {
        return cap("brute_interval_order (cliques)", k, 9);
    }
    if k == 0 {
        return Ok(left.map_or(true, |l| l.is_empty()) && right.map_or(true, |r| r.is_empty()));
    }
    let cm: Vec<u64> = cliques.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let lm = left.map_or(0, |l| l.iter().fold(0u64, |m, &v| m | 1 << v));
    let rm = right.map_or(0, |r| r.iter().fold(0u64, |m, &v| m | 1 << v));
    let mut perm: Vec<usize> = (0..k).collect();
    fn ok(perm: &[usize], cm: &[u64], n: usize) -> bool {
        for v in 0..n {
            let pos: Vec<usize> = (0..perm.len()).filter(|&i| cm[perm[i]] >> v & 1 == 1).collect();
            if pos.len() != pos.last().unwrap() - pos[0] + 1 {
                return false;
            }
        }
        true
    }
    fn heap(i: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i <= 1 {
            return f(perm);
        }
        for j in 0..i {
            if heap(i - 1, perm, f) {
                return true;
            }
            if i % 2 == 0 {
                perm.swap(j, i - 1);
            } else {
                perm.swap(0, i - 1);
            }
        }
        false
    }
    let n = g.n();
    Ok(heap(k, &mut perm, &mut |p: &[usize]| {
        cm[p[0]] & lm == lm && cm[p[k - 1]] & rm == rm && ok(p, &cm, n)
    }))
}

/// Interval dimension search for a height-1 poset by enumerating endpoint
/// orders. With every minimum stretched to the far left and every maximum
/// to the far right, an interval order is fixed by the relative order of
/// the minima's right ends and the maxima's left ends; `ties` enumerates all
/// weak orders of those ends, otherwise all strict orders (minima's ends odd,
/// maxima's even, so no two coincide). Returns, if one exists, `k` or fewer
/// min-max relations (as `(x, y)` pair lists) whose intersection is `p`.
pub fn brute_interval_dimension(p: &Poset, k: usize, ties: bool) -> Result<Option<Vec<Vec<(usize, usize)>>>> {
    let n = p.n();
    if n > 9 {
        return cap("brute_interval_dimension", n, 9);
    }
    let (mins, maxs) = p.height1_split()?;
    let pairs: Vec<(usize, usize)> = mins.iter().flat_map(|&x| maxs.iter().map(move |&y| (x, y))).collect();
    let np = pairs.len();
    let required: u64 = (0..np).filter(|&i| p.lt(pairs[i].0, pairs[i].1)).fold(0, |m, i| m | 1 << i);
    let full: u64 = if np == 0 { 0 } else { (1u64 << np) - 1 };
    let mut found: HashSet<u64> = HashSet::new();
    let items = mins.len() + maxs.len();
    let mut val = vec![0usize; items];
    // values: minima first, then maxima; x < y iff end(x) < end(y)
    let mut record = |val: &[usize]| {
        let mut m = 0u64;
        for (i, &(x, y)) in pairs.iter().enumerate() {
            let ix = mins.iter().position(|&a| a == x).unwrap();
            let iy = mins.len() + maxs.iter().position(|&b| b == y).unwrap();
            if val[ix] < val[iy] {
                m |= 1 << i;
            }
        }
        if m & required == required {
            found.insert(m);
        }
    };
    if ties {
        // ordered set partitions of the ends: block i gets value i
        fn blocks(rest: u64, level: usize, val: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if rest == 0 {
                f(val);
                return;
            }
            let mut sub = rest;
            while sub != 0 {
                for i in bits(sub) {
                    val[i] = level;
                }
                blocks(rest & !sub, level + 1, val, f);
                sub = (sub - 1) & rest;
            }
        }
        let all_items = if items == 0 { 0 } else { (1u64 << items) - 1 };
        blocks(all_items, 0, &mut val, &mut record);
    } else {
        // strict orders: permutations of positions; minima odd, maxima even
        fn perms(i: usize, used: &mut Vec<bool>, val: &mut Vec<usize>, nmin: usize, f: &mut dyn FnMut(&[usize])) {
            if i == val.len() {
                let v2: Vec<usize> =
                    val.iter().enumerate().map(|(j, &v)| if j < nmin { 2 * v + 1 } else { 2 * v }).collect();
                f(&v2);
                return;
            }
            for v in 0..val.len() {
                if !used[v] {
                    used[v] = true;
                    val[i] = v;
                    perms(i + 1, used, val, nmin, f);
                    used[v] = false;
                }
            }
        }
        let mut used = vec![false; items];
        perms(0, &mut used, &mut val, mins.len(), &mut record);
    }
    let mut rels: Vec<u64> = found.into_iter().collect();
    rels.sort_unstable();
    let to_pairs = |m: u64| -> Vec<(usize, usize)> { (0..np).filter(|&i| m >> i & 1 == 1).map(|i| pairs[i]).collect() };
    // every order must lose each non-required pair somewhere
    for size in 1..=k.max(1) {
        let mut hit = None;
        for_each_subset(rels.len(), size, &mut |s| {
            let inter = s.iter().fold(full, |m, &i| m & rels[i]);
            if inter == required {
                hit = Some(s.iter().map(|&i| to_pairs(rels[i])).collect::<Vec<_>>());
                true
            } else {
                false
            }
        });
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Exact treewidth by the subset recurrence over elimination prefixes:
/// `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`.
pub fn brute_treewidth(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > 16 {
        return cap("brute_treewidth", n, 16);
    }
    if n == 0 {
        return Ok(0);
    }
    let nb = masks(g);
    // q(s, v): vertices outside s ∪ {v} reachable from v through s
    let q = |s: u64, v: usize| -> usize {
        let mut seen = 1u64 << v;
        let mut stack = vec![v];
        let mut out = 0u64;
        while let Some(x) = stack.pop() {
            let mut nbx = nb[x] & !seen;
            while nbx != 0 {
                let w = nbx.trailing_zeros() as usize;
                nbx &= nbx - 1;
                seen |= 1 << w;
                if s >> w & 1 == 1 {
                    stack.push(w);
                } else {
                    out |= 1 << w;
                }
            }
        }
        out.count_ones() as usize
    };
    let full = (1usize << n) - 1;
    let mut tw = vec![usize::MAX; full + 1];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        for v in bits(s as u64) {
            let prev = tw[s & !(1 << v)];
            best = best.min(prev.max(q((s & !(1 << v)) as u64, v)));
        }
        tw[s] = best;
    }
    Ok(tw[full])
}

/// Whether `g` has a `k`-clique, by subset enumeration.
pub fn brute_has_clique(g: &Graph, k: usize) -> Result<bool> {
    Ok(brute_max_clique(g)?.len() >= k)
}

/// Number of maximal cliques.
pub fn brute_count_maximal_cliques(g: &Graph) -> Result<usize> {
    Ok(brute_maximal_cliques(g)?.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Free,
    Junction(usize),
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: End,
    b: End,
    /// number of host nodes strictly between the two ends (a free end's
    /// leaf counts as inside)
    cap: usize,
}

/// Pattern reduced to junctions (degree ≥ 3, or one node per cycle
/// component) and the segments between them, each pattern edge subdivided
/// `l` times.
fn segments_of(h: &Graph, l: usize) -> (usize, Vec<Segment>) {
    let n = h.n();
    let mut junction = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if h.degree(v) >= 3 {
            junction[v] = count;
            count += 1;
        }
    }
    for comp in crate::graph::connected_components(h) {
        if comp.len() >= 3 && comp.iter().all(|&v| h.degree(v) == 2) {
            junction[comp[0]] = count;
            count += 1;
        }
    }
    let mut used = HashSet::new();
    let mut visited = vec![false; n];
    let mut segs = Vec::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for j in 0..n {
        if junction[j] == usize::MAX {
            continue;
        }
        visited[j] = true;
        for &w in h.neighbors(j) {
            if used.contains(&key(j, w)) {
                continue;
            }
            used.insert(key(j, w));
            let (mut prev, mut cur) = (j, w);
            let (mut edges, mut inner) = (1, 0);
            let end = loop {
                visited[cur] = true;
                if junction[cur] != usize::MAX {
                    break End::Junction(junction[cur]);
                }
                inner += 1;
                if h.degree(cur) == 1 {
                    break End::Free;
                }
                let next = *h.neighbors(cur).iter().find(|&&x| x != prev && !used.contains(&key(cur, x))).unwrap_or(&prev);
                used.insert(key(cur, next));
                edges += 1;
                prev = cur;
                cur = next;
            };
            segs.push(Segment { a: End::Junction(junction[j]), b: end, cap: inner + l * edges });
        }
    }
    for s in 0..n {
        if visited[s] || h.degree(s) > 1 {
            continue;
        }
        // path component (or isolated node) starting at an end
        visited[s] = true;
        let (mut nodes, mut edges) = (1, 0);
        let (mut prev, mut cur) = (usize::MAX, s);
        while let Some(&next) = h.neighbors(cur).iter().find(|&&x| x != prev) {
            visited[next] = true;
            nodes += 1;
            edges += 1;
            prev = cur;
            cur = next;
        }
        segs.push(Segment { a: End::Free, b: End::Free, cap: nodes + l * edges });
    }
    (count, segs)
}

/// Repeatedly deletes a vertex whose neighbourhood is a clique.
fn chordal_by_elimination(g: &Graph) -> bool {
    let nb = masks(g);
    let mut alive = if g.n() == 0 { 0 } else { u64::MAX >> (64 - g.n()) };
    'outer: while alive != 0 {
        for v in bits(alive) {
            let around = nb[v] & alive;
            if bits(around).iter().all(|&u| around & !nb[u] & !(1 << u) == 0) {
                alive &= !(1 << v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Vertices of `set` reachable from `start` inside `set`.
fn reach_in(nb: &[u64], set: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= nb[v] & set;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

fn components_in(nb: &[u64], set: u64) -> Vec<u64> {
    let mut rest = set;
    let mut out = Vec::new();
    while rest != 0 {
        let c = reach_in(nb, rest, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}

/// Interval test by definition-level characterisation: chordal (simplicial
/// elimination) and no asteroidal triple (checked over all triples).
fn is_interval_set(nb: &[u64], set: u64) -> bool {
    let mut alive = set;
    'outer: while alive != 0 {
        for v in bits(alive) {
            let around = nb[v] & alive;
            if bits(around).iter().all(|&u| around & !nb[u] & !(1 << u) == 0) {
                alive &= !(1 << v);
                continue 'outer;
            }
        }
        return false;
    }
    let vs = bits(set);
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if nb[a] >> b & 1 == 1 {
                continue;
            }
            for &c in &vs[j + 1..] {
                if nb[a] >> c & 1 == 1 || nb[b] >> c & 1 == 1 {
                    continue;
                }
                let avoid = |x: usize| set & !nb[x] & !(1 << x);
                let joined = |x: usize, y: usize, z: usize| reach_in(nb, avoid(z), x) >> y & 1 == 1;
                if joined(a, b, c) && joined(a, c, b) && joined(b, c, a) {
                    return false;
                }
            }
        }
    }
    true
}

/// Neighbourhoods inside `side` of the vertices of `comp` form a chain.
fn nested(nb: &[u64], comp: u64, side: u64) -> bool {
    let mut sets: Vec<u64> = bits(comp).iter().map(|&y| nb[y] & side).collect();
    sets.sort_by_key(|s| s.count_ones());
    sets.windows(2).all(|w| w[0] & !w[1] == 0)
}

pub const MEMBERSHIP_N_CAP: usize = 24;
pub const MEMBERSHIP_BUDGET: u64 = 200_000_000;

struct Membership {
    n: usize,
    all: u64,
    nb: Vec<u64>,
    eid: Vec<usize>,
    words: usize,
    edges: Vec<(usize, usize)>,
    segs: Vec<Segment>,
    junctions: usize,
    k: Vec<u64>,
    in_j: u64,
    not_j: u64,
    /// Vertices outside the junctions assigned to each segment.
    placed: Vec<u64>,
    steps: u64,
    budget: u64,
    failed: HashSet<Vec<u64>>,
}

impl Membership {
    fn kof(&self, e: End) -> u64 {
        match e {
            End::Free => 0,
            End::Junction(j) => self.k[j],
        }
    }

    fn cover(&self, covered: &mut [u64], s: u64) {
        let b = bits(s);
        for (i, &x) in b.iter().enumerate() {
            for &y in &b[i + 1..] {
                let e = self.eid[x * self.n + y];
                covered[e / 64] |= 1 << (e % 64);
            }
        }
    }

    /// All edges at the vertices of `set` are covered.
    fn finished(&self, set: u64, covered: &[u64]) -> bool {
        bits(set).into_iter().all(|x| bits(self.nb[x]).into_iter().all(|y| Self::is_covered(covered, self.eid[x * self.n + y])))
    }

    fn is_covered(covered: &[u64], e: usize) -> bool {
        covered[e / 64] >> (e % 64) & 1 == 1
    }

    /// Cliques `S` with `must ⊆ S ⊆ allowed`.
    fn cliques_between(&self, must: u64, allowed: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut cand = allowed & !must;
        for v in bits(must) {
            cand &= self.nb[v];
        }
        fn go(nb: &[u64], set: u64, cand: u64, out: &mut Vec<u64>) {
            out.push(set);
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                go(nb, set | 1 << v, rest & nb[v], out);
            }
        }
        go(&self.nb, must, cand, &mut out);
        out.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        out
    }

    fn can_appear(&self, x: usize, s: usize, local_used: u64) -> bool {
        let seg = self.segs[s];
        let ends = self.kof(seg.a) | self.kof(seg.b);
        ends >> x & 1 == 1 || (self.placed[s] >> x & 1 == 1 && local_used >> x & 1 == 0)
    }

    fn final_check(&self, local_used: u64, covered: &[u64], fulls: &[u64]) -> bool {
        if (0..self.edges.len()).any(|e| !Self::is_covered(covered, e)) {
            return false;
        }
        if (self.in_j | local_used) != self.all {
            return false;
        }
        let jj: Vec<(usize, usize)> = self
            .segs
            .iter()
            .filter_map(|s| match (s.a, s.b) {
                (End::Junction(a), End::Junction(b)) if a != b => Some((a, b)),
                _ => None,
            })
            .collect();
        for x in bits(self.in_j) {
            let js: Vec<usize> = (0..self.junctions).filter(|&j| self.k[j] >> x & 1 == 1).collect();
            let mut comp: Vec<usize> = (0..self.junctions).collect();
            fn root(c: &mut Vec<usize>, v: usize) -> usize {
                let mut r = v;
                while c[r] != r {
                    r = c[r];
                }
                c[v] = r;
                r
            }
            for (i, &(a, b)) in jj.iter().enumerate() {
                if fulls[i] >> x & 1 == 1 {
                    let (ra, rb) = (root(&mut comp, a), root(&mut comp, b));
                    comp[ra] = rb;
                }
            }
            let r0 = root(&mut comp, js[0]);
            if js.iter().any(|&j| root(&mut comp, j) != r0) {
                return false;
            }
        }
        true
    }

    fn seg_dfs(&mut self, s: usize, local_used: u64, covered: &[u64], fulls: &[u64]) -> Result<bool> {
        if s == self.segs.len() {
            return Ok(self.final_check(local_used, covered, fulls));
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if !Self::is_covered(covered, e)
                && !(s..self.segs.len()).any(|t| self.can_appear(u, t, local_used) && self.can_appear(v, t, local_used))
            {
                return Ok(false);
            }
        }
        if (self.all & !self.in_j & !local_used) != 0 && s == self.segs.len() {
            return Ok(false);
        }
        self.run_dfs(s, 0, 0, 0, 0, local_used, covered, fulls)
    }

    #[allow(clippy::too_many_arguments)]
    fn run_dfs(
        &mut self,
        s: usize,
        r: usize,
        cur: u64,
        prefix: u64,
        must: u64,
        local_used: u64,
        covered: &[u64],
        fulls: &[u64],
    ) -> Result<bool> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::Cap(format!("brute_membership: search budget of {} steps exhausted", self.budget)));
        }
        let seg = self.segs[s];
        let slack = (seg.cap - r).min(2 * self.n + 2);
        let mut key = vec![(s as u64) << 32 | slack as u64, cur, prefix, must, local_used];
        key.extend_from_slice(covered);
        key.extend_from_slice(fulls);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let a = self.kof(seg.a);
        let b = self.kof(seg.b);
        let pre = if r == 0 { a } else { prefix };
        // close the segment here
        let full = if seg.cap == 0 {
            a & b
        } else if r >= 1 {
            prefix & b
        } else {
            0
        };
        let mut f2 = fulls.to_vec();
        if let (End::Junction(x), End::Junction(y)) = (seg.a, seg.b) {
            if x != y {
                f2.push(full);
            }
        }
        // a vertex living on this segment alone has met all its neighbours
        // once it leaves
        let closable = self.placed[s] & !local_used == 0 && self.finished(cur & self.not_j, covered);
        if closable && self.seg_dfs(s + 1, local_used, covered, &f2)? {
            return Ok(true);
        }
        if r < seg.cap {
            let allowed = pre | must | (b & !cur) | (self.not_j & cur) | (self.placed[s] & !local_used);
            for next in self.cliques_between(must, allowed) {
                if next == 0 || next == cur || !self.finished(cur & self.not_j & !next, covered) {
                    continue;
                }
                let prefix2 = pre & next;
                let must2 = must | (next & b & !prefix2);
                let lu2 = local_used | (next & self.not_j);
                let mut cov2 = covered.to_vec();
                self.cover(&mut cov2, next);
                if self.run_dfs(s, r + 1, next, prefix2, must2, lu2, &cov2, fulls)? {
                    return Ok(true);
                }
            }
        }
        self.failed.insert(key);
        Ok(false)
    }

    /// Each component of the vertices outside the junctions lies inside
    /// one segment: it is an interval graph, its neighbours at junctions
    /// sit at that segment's ends, and the vertices held at one end only
    /// reach into the segment as nested prefixes. Returns the components
    /// with the segments each may use, or `None` if one has none.
    fn component_hosts(&self) -> Option<Vec<(u64, Vec<usize>)>> {
        let nb = &self.nb;
        components_in(nb, self.not_j)
            .into_iter()
            .map(|comp| {
                if !is_interval_set(nb, comp) {
                    return None;
                }
                let seen = bits(comp).iter().fold(0, |m, &y| m | nb[y]) & self.in_j;
                let fits: Vec<usize> = (0..self.segs.len())
                    .filter(|&s| {
                        let seg = self.segs[s];
                        let (a, b) = (self.kof(seg.a), self.kof(seg.b));
                        seg.cap > 0 && seen & !(a | b) == 0 && nested(nb, comp, a & !b) && nested(nb, comp, b & !a)
                    })
                    .collect();
                (!fits.is_empty()).then_some((comp, fits))
            })
            .collect()
    }

    /// Segments that the host automorphisms fixing the junctions can swap
    /// share a class; components go to classes in first-use order.
    fn segment_classes(&self) -> Vec<usize> {
        let key = |s: &Segment| {
            let e = |x: End| match x {
                End::Free => usize::MAX,
                End::Junction(j) => j,
            };
            let (a, b) = (e(s.a), e(s.b));
            (a.min(b), a.max(b), s.cap.min(2 * self.n + 2))
        };
        let keys: Vec<_> = self.segs.iter().map(key).collect();
        (0..keys.len()).map(|i| keys.iter().position(|k| *k == keys[i]).unwrap()).collect()
    }

    fn place_dfs(&mut self, i: usize, comps: &[(u64, Vec<usize>)], class: &[usize]) -> Result<bool> {
        if i == comps.len() {
            self.failed.clear();
            let mut covered = vec![0u64; self.words];
            for &c in &self.k.clone() {
                self.cover(&mut covered, c);
            }
            return self.seg_dfs(0, 0, &covered, &[]);
        }
        let (comp, fits) = &comps[i];
        for &s in fits {
            let seg = self.segs[s];
            let (a, b) = (self.kof(seg.a), self.kof(seg.b));
            let all_here = self.placed[s] | comp;
            if !nested(&self.nb, all_here, a & !b) || !nested(&self.nb, all_here, b & !a) {
                continue;
            }
            // an empty segment of a class is only tried if it is the first
            // empty one of that class
            if self.placed[s] == 0 && (0..s).any(|t| class[t] == class[s] && self.placed[t] == 0) {
                continue;
            }
            self.placed[s] |= comp;
            let found = self.place_dfs(i + 1, comps, class)?;
            self.placed[s] &= !comp;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn junction_dfs(&mut self, j: usize, cliques: &[u64]) -> Result<bool> {
        if j == self.junctions {
            self.in_j = self.k.iter().fold(0, |m, &c| m | c);
            self.not_j = self.all & !self.in_j;
            let Some(comps) = self.component_hosts() else {
                return Ok(false);
            };
            let class = self.segment_classes();
            self.placed = vec![0; self.segs.len()];
            return self.place_dfs(0, &comps, &class);
        }
        for &c in cliques {
            self.k[j] = c;
            if self.junction_dfs(j + 1, cliques)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exhaustive membership test: does `g` have a representation on the
/// pattern `h` with every edge subdivided `2·min(n, sub_cap)` times?
///
/// Along each host path only the sequence of distinct node contents
/// matters (repeating a node's content is free), so the search runs over
/// sequences of cliques of `g` and the node contents at junctions, with
/// the connectivity of every vertex's node set tracked exactly. Refuses
/// with [`Error::Cap`] when `n` or the search effort go past fixed limits.
pub fn brute_membership(g: &Graph, h: &Graph, sub_cap: usize) -> Result<bool> {
    brute_membership_with_budget(g, h, sub_cap, MEMBERSHIP_BUDGET)
}

pub fn brute_membership_with_budget(g: &Graph, h: &Graph, sub_cap: usize, budget: u64) -> Result<bool> {
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    // a vertex with the same closed neighbourhood as another can copy its
    // node set, so one per class is enough
    if n <= 64 {
        let closed: Vec<u64> = masks(g).iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        let keep: Vec<usize> = (0..n).filter(|&v| !(0..v).any(|u| closed[u] == closed[v])).collect();
        if keep.len() < n {
            return brute_membership_with_budget(&g.induced(&keep), h, sub_cap, budget);
        }
    }
    if n > MEMBERSHIP_N_CAP {
        return cap("brute_membership", n, MEMBERSHIP_N_CAP);
    }
    if h.n() == 0 {
        return Ok(false);
    }
    // subtrees of a tree meet in a chordal pattern
    let forest = h.m() + crate::graph::connected_components(h).len() == h.n();
    if forest && !chordal_by_elimination(g) {
        return Ok(false);
    }
    let l = 2 * n.min(sub_cap);
    let (junctions, segs) = segments_of(h, l);
    let edges = g.edges();
    let mut eid = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        eid[u * n + v] = i;
        eid[v * n + u] = i;
    }
    let nb = masks(g);
    let all = (1u64 << n) - 1;
    let mut search = Membership {
        n,
        all,
        nb,
        eid,
        words: edges.len().div_ceil(64).max(1),
        edges,
        segs,
        junctions,
        k: vec![0; junctions],
        in_j: 0,
        not_j: all,
        placed: Vec::new(),
        steps: 0,
        budget,
        failed: HashSet::new(),
    };
    let cliques = search.cliques_between(0, all);
    search.junction_dfs(0, &cliques)
}
