//! Generic finite-poset machinery shared by the facial lattice and the
//! quotient lattices: reachability closure of a cover digraph, brute-force
//! meets and joins, Hasse reduction, and the Möbius function by recursion
//! over the order matrix.

use crate::bitset::RootSet;

/// A finite poset stored as down-sets: `down[i]` is `{j : j ≤ i}`.
pub struct FinitePoset {
    down: Vec<RootSet>,
}

impl FinitePoset {
    /// Builds the reachability order of a cover digraph (edges point from
    /// the smaller to the larger node).
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> FinitePoset {
        let mut up_adj: Vec<Vec<usize>> = vec![Vec::new(); size];
        let mut indegree = vec![0usize; size];
        for &(lo, hi) in covers {
            up_adj[lo].push(hi);
            indegree[hi] += 1;
        }
        // Process in a topological order so each node's down-set is a
        // union of complete predecessor down-sets.
        let mut order: Vec<usize> = (0..size).filter(|&v| indegree[v] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &next in &up_adj[v] {
                indegree[next] -= 1;
                if indegree[next] == 0 {
                    order.push(next);
                }
            }
        }
        assert_eq!(order.len(), size, "cover digraph has a cycle");

        let mut down: Vec<RootSet> = (0..size)
            .map(|i| {
                let mut set = RootSet::empty(size);
                set.insert(i);
                set
            })
            .collect();
        for &v in &order {
            let this = down[v].clone();
            for &next in &up_adj[v] {
                down[next] = down[next].union(&this);
            }
        }
        FinitePoset { down }
    }

    /// Builds directly from a comparison oracle.
    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> FinitePoset {
        let down = (0..size)
            .map(|i| {
                let mut set = RootSet::empty(size);
                for j in 0..size {
                    if leq(j, i) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        FinitePoset { down }
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn down_set(&self, i: usize) -> &RootSet {
        &self.down[i]
    }

    /// Cover pairs `(a, b)` with `a ⋖ b`, by transitive reduction.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let size = self.len();
        let mut covers = Vec::new();
        for b in 0..size {
            for a in self.down[b].iter() {
                if a == b {
                    continue;
                }
                let is_cover = self.down[b]
                    .iter()
                    .all(|c| c == a || c == b || !self.leq(a, c) || !self.leq(c, b));
                if is_cover {
                    covers.push((a, b));
                }
            }
        }
        covers
    }

    /// The unique maximal common lower bound, if the pair has one.
    pub fn brute_meet(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.down[a].intersection(&self.down[b]);
        let mut best = None;
        for c in common.iter() {
            if common.is_subset(&self.down[c]) {
                if best.is_some() {
                    return None;
                }
                best = Some(c);
            }
        }
        best
    }

    /// The unique minimal common upper bound, if the pair has one.
    pub fn brute_join(&self, a: usize, b: usize) -> Option<usize> {
        let uppers: Vec<usize> =
            (0..self.len()).filter(|&c| self.leq(a, c) && self.leq(b, c)).collect();
        let mut best = None;
        for &c in &uppers {
            if uppers.iter().all(|&d| self.leq(c, d)) {
                if best.is_some() {
                    return None;
                }
                best = Some(c);
            }
        }
        best
    }

    /// Möbius values `μ(bottom, q)` for every `q`, by the defining
    /// recursion; equivalent to the first row of the inverse zeta matrix.
    pub fn mobius_from(&self, bottom: usize) -> Vec<i64> {
        let size = self.len();
        // Process nodes in an order compatible with the poset.
        let mut nodes: Vec<usize> = (0..size).collect();
        nodes.sort_by_key(|&i| self.down[i].len());
        let mut mu = vec![0i64; size];
        for &q in &nodes {
            if q == bottom {
                mu[q] = 1;
            } else if self.leq(bottom, q) {
                let mut acc = 0i64;
                for r in self.down[q].iter() {
                    if r != q && self.leq(bottom, r) {
                        acc += mu[r];
                    }
                }
                mu[q] = -acc;
            }
        }
        mu
    }

    /// Elements covering exactly one node resp. covered by exactly one.
    pub fn irreducibles(&self) -> (Vec<usize>, Vec<usize>) {
        let covers = self.hasse_covers();
        let mut covered_count = vec![0usize; self.len()];
        let mut covering_count = vec![0usize; self.len()];
        for &(a, b) in &covers {
            covered_count[b] += 1;
            covering_count[a] += 1;
        }
        let join_irr = (0..self.len()).filter(|&i| covered_count[i] == 1).collect();
        let meet_irr = (0..self.len()).filter(|&i| covering_count[i] == 1).collect();
        (join_irr, meet_irr)
    }
}
