//! Isomorphism testing for small graphs by pruned backtracking.
//!
//! Vertices are first split by colour refinement (degree, then the multiset
//! of neighbour colours, iterated to a fixed point) computed jointly on both
//! graphs so colours are comparable. The search only maps a vertex to a
//! vertex of the same colour and checks adjacency against every vertex
//! already mapped.

use std::collections::BTreeMap;

use crate::bitset::BitSet;
use crate::graph::Graph;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A bijection `phi` with `g.adjacent(u, w) == h.adjacent(phi[u], phi[w])`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let (cg, ch) = refine(g, h);
    let histogram = |c: &[usize]| {
        let mut m = BTreeMap::new();
        for &x in c {
            *m.entry(x).or_insert(0usize) += 1;
        }
        m
    };
    if histogram(&cg) != histogram(&ch) {
        return None;
    }

    let order = search_order(g, &cg);
    let mut state = Search {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: BitSet::new(n),
    };
    if state.extend(0) {
        Some(state.map)
    } else {
        None
    }
}

/// Joint colour refinement; returns stable colours for `g` and `h`.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = g.degrees();
    let mut ch: Vec<usize> = h.degrees();
    let mut classes = count_classes(&cg, &ch);
    loop {
        let sig = |graph: &Graph, colours: &[usize], u: usize| {
            let mut nb: Vec<usize> = graph.neighbors(u).iter().map(|w| colours[w]).collect();
            nb.sort_unstable();
            (colours[u], nb)
        };
        let sg: Vec<_> = (0..g.order()).map(|u| sig(g, &cg, u)).collect();
        let sh: Vec<_> = (0..h.order()).map(|u| sig(h, &ch, u)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        let now = count_classes(&cg, &ch);
        if now == classes {
            return (cg, ch);
        }
        classes = now;
    }
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Greedy order: next vertex has the most already-ordered neighbours, then
/// the rarest colour, then the smallest index.
fn search_order(g: &Graph, colours: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut freq = BTreeMap::new();
    for &c in colours {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = BitSet::new(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&u| !placed.contains(u))
            .min_by_key(|&u| {
                (
                    std::cmp::Reverse(g.neighbors(u).intersection_count(&placed)),
                    freq[&colours[u]],
                    u,
                )
            })
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: BitSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for x in 0..self.h.order() {
            if self.used.contains(x) || self.ch[x] != self.cg[u] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&w| {
                self.g.adjacent(u, w) == self.h.adjacent(x, self.map[w])
            });
            if !consistent {
                continue;
            }
            self.map[u] = x;
            self.used.insert(x);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(x);
            self.map[u] = usize::MAX;
        }
        false
    }
}
