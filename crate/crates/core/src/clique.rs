//! Maximum cliques of Helly H-graphs (by bounded maximal-clique
//! enumeration) and of cactus-graphs (by clique-cutset decomposition).

use serde::{Deserialize, Serialize};

use crate::bits::{neighborhoods, Bits};
use crate::chordal::{is_chordal, maximal_cliques, Chordality, CliqueList};
use crate::error::{Error, Result};
use crate::graph::{Graph, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum HellyClique {
    Clique { clique: Vec<usize>, maximal_cliques: usize, bound: usize },
    /// More maximal cliques than any Helly representation on the pattern
    /// allows. Staying under the bound proves nothing either way.
    NotHelly { bound: usize },
}

/// Bound on the number of maximal cliques of a Helly H-graph.
pub fn helly_clique_bound(h: &Graph, n: usize) -> usize {
    h.n() + h.m() * n
}

/// Maximum clique of a graph promised to be a Helly H-graph; needs only
/// the pattern.
pub fn max_clique_helly(g: &Graph, h: &Graph) -> HellyClique {
    let bound = helly_clique_bound(h, g.n());
    match maximal_cliques(g, Some(bound)) {
        CliqueList::Overflow { .. } => HellyClique::NotHelly { bound },
        CliqueList::Cliques(cs) => {
            let clique = cs.iter().max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a))).cloned().unwrap_or_default();
            HellyClique::Clique { clique, maximal_cliques: cs.len(), bound }
        }
    }
}

/// Every maximal clique of the graph has a node shared by all its sets.
pub fn is_helly_representation(g: &Graph, rep: &Representation) -> bool {
    crate::chordal::all_maximal_cliques(g).iter().all(|c| {
        let Some((&first, rest)) = c.split_first() else { return true };
        rep.set(first).iter().any(|x| rest.iter().all(|&v| rep.set(v).binary_search(x).is_ok()))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomDecomposition {
    /// Vertex sets of the atoms, each sorted; the list is sorted.
    pub atoms: Vec<Vec<usize>>,
    /// Clique separators used, in the order they were found.
    pub separators: Vec<Vec<usize>>,
}

impl AtomDecomposition {
    /// Union is everything, every edge lies in an atom and atoms meet in
    /// cliques.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for a in &self.atoms {
            for &v in a {
                seen[v] = true;
            }
        }
        let edges_ok = g.edges().iter().all(|&(u, v)| self.atoms.iter().any(|a| a.binary_search(&u).is_ok() && a.binary_search(&v).is_ok()));
        let meets_ok = self.atoms.iter().enumerate().all(|(i, a)| {
            self.atoms[i + 1..].iter().all(|b| {
                let common: Vec<usize> = a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect();
                g.is_clique(&common)
            })
        });
        seen.iter().all(|&s| s) && edges_ok && meets_ok
    }
}

/// Minimal elimination ordering (MCS-M) with the fill graph it defines.
fn mcs_m(g: &Graph) -> (Vec<usize>, Vec<Vec<bool>>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = vec![0; n];
    let mut fill = vec![vec![false; n]; n];
    for i in (0..n).rev() {
        let v = (0..n).filter(|&u| !numbered[u]).max_by_key(|&u| (weight[u], std::cmp::Reverse(u))).unwrap();
        numbered[v] = true;
        order[i] = v;
        // u is reached if some path from v through unnumbered vertices of
        // smaller weight ends at u
        let mut hits = Vec::new();
        for u in 0..n {
            if numbered[u] {
                continue;
            }
            let limit = weight[u];
            let mut seen = vec![false; n];
            let mut stack = vec![v];
            seen[v] = true;
            let mut found = false;
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if y == u {
                        found = true;
                        break;
                    }
                    if !numbered[y] && !seen[y] && weight[y] < limit {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
                if found {
                    break;
                }
            }
            if found {
                hits.push(u);
            }
        }
        for u in hits {
            weight[u] += 1;
            fill[u][v] = true;
            fill[v][u] = true;
        }
    }
    (order, fill)
}

/// Clique-cutset decomposition along a minimal elimination ordering:
/// whenever the later neighbours of a vertex form a clique of the graph
/// that separates what is left, the vertex's side is split off.
pub fn clique_cutset_decomposition(g: &Graph) -> AtomDecomposition {
    let n = g.n();
    if n == 0 {
        return AtomDecomposition { atoms: vec![], separators: vec![] };
    }
    let (order, fill) = mcs_m(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut alive = vec![true; n];
    let mut atoms: Vec<Vec<usize>> = Vec::new();
    let mut separators = Vec::new();
    for &x in &order {
        if !alive[x] {
            continue;
        }
        let later: Vec<usize> = (0..n).filter(|&u| fill[x][u] && pos[u] > pos[x]).collect();
        if !g.is_clique(&later) {
            continue;
        }
        let mut blocked: Vec<bool> = alive.iter().map(|&a| !a).collect();
        for &c in &later {
            blocked[c] = true;
        }
        let reach = g.reach(x, &blocked);
        let side: Vec<usize> = (0..n).filter(|&v| reach[v]).collect();
        let rest = (0..n).filter(|&v| alive[v] && !reach[v] && !later.contains(&v)).count();
        if rest == 0 {
            continue;
        }
        let mut atom: Vec<usize> = side.iter().copied().chain(later.iter().copied()).collect();
        atom.sort_unstable();
        atoms.push(atom);
        separators.push(later.clone());
        for v in side {
            alive[v] = false;
        }
    }
    atoms.push((0..n).filter(|&v| alive[v]).collect());
    // drop atoms inside others
    let mut keep: Vec<Vec<usize>> = Vec::new();
    atoms.sort_by_key(|a| std::cmp::Reverse(a.len()));
    for a in atoms {
        if !keep.iter().any(|k| a.iter().all(|v| k.binary_search(v).is_ok())) {
            keep.push(a);
        }
    }
    keep.sort();
    AtomDecomposition { atoms: keep, separators }
}

/// Largest clique inside the atoms; the limit applies to each
/// non-chordal atom searched exactly.
pub const ATOM_SEARCH_CAP: usize = 400;

/// Maximum clique of a graph promised to be a cactus-graph: the largest
/// over its atoms.
pub fn max_clique_cactus(g: &Graph) -> Result<Vec<usize>> {
    let dec = clique_cutset_decomposition(g);
    let mut best: Vec<usize> = Vec::new();
    for atom in &dec.atoms {
        let sub = g.induced(atom);
        let local = match is_chordal(&sub) {
            Chordality::Peo(order) => peo_max_clique(&sub, &order),
            Chordality::Hole(_) => {
                if sub.n() > ATOM_SEARCH_CAP {
                    return Err(Error::Cap(format!("max_clique_cactus: atom of {} vertices exceeds {ATOM_SEARCH_CAP}", sub.n())));
                }
                max_clique_exact(&sub)
            }
        };
        let mut c: Vec<usize> = local.iter().map(|&i| atom[i]).collect();
        c.sort_unstable();
        if c.len() > best.len() || (c.len() == best.len() && c < best) {
            best = c;
        }
    }
    Ok(best)
}

/// Largest `{v} ∪ later neighbours` along a perfect elimination ordering.
fn peo_max_clique(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut best: Vec<usize> = Vec::new();
    for &v in order {
        let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        c.push(v);
        c.sort_unstable();
        if c.len() > best.len() || (c.len() == best.len() && c < best) {
            best = c;
        }
    }
    best
}

/// Exact maximum clique by branch and bound with a greedy colouring bound.
pub fn max_clique_exact(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let nb = neighborhoods(g);
    let mut best: Vec<usize> = Vec::new();
    let mut cur = Vec::new();
    fn colour_bound(nb: &[Bits], cand: &[usize]) -> Vec<(usize, usize)> {
        // (vertex, colour) in order of increasing colour
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cand {
            match classes.iter_mut().find(|c| c.iter().all(|&u| !nb[u].contains(v))) {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        classes.iter().enumerate().flat_map(|(k, c)| c.iter().map(move |&v| (v, k + 1))).collect()
    }
    fn expand(nb: &[Bits], cand: Vec<usize>, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        let coloured = colour_bound(nb, &cand);
        for i in (0..coloured.len()).rev() {
            let (v, colour) = coloured[i];
            if cur.len() + colour <= best.len() {
                return;
            }
            cur.push(v);
            let next: Vec<usize> = coloured[..i].iter().map(|&(u, _)| u).filter(|&u| nb[v].contains(u)).collect();
            if next.is_empty() {
                if cur.len() > best.len() {
                    *best = cur.clone();
                }
            } else {
                expand(nb, next, cur, best);
            }
            cur.pop();
        }
    }
    let mut cand: Vec<usize> = (0..n).collect();
    cand.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    expand(&nb, cand, &mut cur, &mut best);
    best.sort_unstable();
    best
}

/// The complement of a perfect matching on `2k` vertices (`i` and `k + i`
/// are the non-adjacent pairs); it has `2^k` maximal cliques.
pub fn cocktail_party(k: usize) -> Graph {
    let mut g = Graph::new(2 * k);
    for u in 0..2 * k {
        for v in u + 1..2 * k {
            if v != u + k {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_representation, HostModel};
    use crate::oracle::{brute_count_maximal_cliques, brute_max_clique, random_cactus, random_rep_on, Rng};

    #[test]
    fn complete_graph_on_k2() {
        match max_clique_helly(&Graph::complete(6), &Graph::path(2)) {
            HellyClique::Clique { clique, .. } => assert_eq!(clique.len(), 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cocktail_party_overflows_on_a_triangle() {
        let g = cocktail_party(6);
        assert_eq!(brute_count_maximal_cliques(&g).unwrap(), 64);
        assert_eq!(max_clique_helly(&g, &Graph::cycle(3)), HellyClique::NotHelly { bound: 3 + 3 * 12 });
        // it is a circular-arc graph: half circles on 12 points
        let k = 6;
        let host = HostModel::subdivide(&Graph::cycle(3), &[3, 3, 3]);
        let ring: Vec<usize> = {
            let mut r = host.edge_paths[0].clone();
            r.extend(host.edge_paths[2].iter().skip(1));
            r.extend(host.edge_paths[1].iter().rev().skip(1).take(3));
            r
        };
        assert_eq!(ring.len(), 2 * k);
        let sets: Vec<Vec<usize>> = (0..2 * k).map(|i| (0..k).map(|j| ring[(i + j) % (2 * k)]).collect()).collect();
        let rep = Representation::new(host, sets);
        assert!(verify_representation(&g, &rep).unwrap().valid);
    }

    #[test]
    fn decomposition_examples() {
        let c5 = clique_cutset_decomposition(&Graph::cycle(5));
        assert_eq!(c5.atoms, vec![vec![0, 1, 2, 3, 4]]);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = clique_cutset_decomposition(&bowtie);
        assert_eq!(d.atoms, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert!(d.is_valid_for(&bowtie));
        let two = Graph::new(2);
        assert_eq!(clique_cutset_decomposition(&two).atoms, vec![vec![0], vec![1]]);
    }

    fn has_clique_cutset(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|m| {
            let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            if !g.is_clique(&s) || s.len() + 1 >= n {
                return false;
            }
            let blocked: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
            g.components_avoiding(&blocked).len() > 1
        })
    }

    #[test]
    fn atoms_have_no_clique_cutset() {
        let mut rng = Rng::new(41);
        for _ in 0..150 {
            let n = rng.range(1, 11);
            let g = crate::oracle::random_graph(n, 0.35, &mut rng);
            let d = clique_cutset_decomposition(&g);
            assert!(d.is_valid_for(&g), "{}", g.to_json());
            assert!(d.atoms.len() <= n.max(1));
            for a in &d.atoms {
                assert!(!has_clique_cutset(&g.induced(a)), "{} atom {a:?}", g.to_json());
            }
        }
    }

    #[test]
    fn cactus_and_helly_against_brute_force() {
        let mut rng = Rng::new(42);
        for round in 0..150 {
            let c = random_cactus(rng.range(1, 4), &mut rng);
            let host = HostModel::subdivide(&c, &vec![rng.range(0, 3); c.m()]);
            let (g, rep) = random_rep_on(&host, rng.range(1, 16), rng.range(1, 6), &mut rng);
            let want = brute_max_clique(&g).unwrap().len();
            assert_eq!(max_clique_cactus(&g).unwrap().len(), want, "round {round}");
            assert_eq!(max_clique_exact(&g).len(), want);
            if is_helly_representation(&g, &rep) {
                match max_clique_helly(&g, &c) {
                    HellyClique::Clique { clique, maximal_cliques, bound } => {
                        assert_eq!(clique.len(), want);
                        assert!(maximal_cliques <= bound);
                    }
                    HellyClique::NotHelly { .. } => panic!("Helly instance overflowed"),
                }
            }
        }
    }
}
