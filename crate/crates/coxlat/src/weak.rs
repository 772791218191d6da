//! The (right) weak order: comparison by inversion-set containment, meet
//! and join, and full group enumeration for the brute-force oracles.

use crate::bitset::RootSet;
use crate::element::Element;
use crate::error::Result;
use crate::system::CoxeterSystem;
use std::collections::HashMap;

/// `u ≤ v ⟺ N(u) ⊆ N(v)`.
pub fn weak_leq(system: &CoxeterSystem, u: &Element, v: &Element) -> bool {
    u.inversion_set(system).is_subset(&v.inversion_set(system))
}

/// Meet in the weak order by peeling common left descents: for any common
/// left descent `s`, `u ∧ v = s·(su ∧ sv)`; with no common left descent the
/// meet is the identity. Ties break to the smallest generator index, which
/// does not change the result.
pub fn weak_meet(system: &CoxeterSystem, u: &Element, v: &Element) -> Element {
    let mut prefix: Vec<usize> = Vec::new();
    let mut a = u.clone();
    let mut b = v.clone();
    loop {
        let common = a.left_descents(system).intersection(b.left_descents(system));
        match common.iter().next() {
            Some(s) => {
                prefix.push(s);
                a = a.left_multiply_gen(system, s);
                b = b.left_multiply_gen(system, s);
            }
            None => break,
        }
    }
    Element::from_word(system, &prefix)
}

/// Join via the anti-automorphism `w ↦ w·w∘`:
/// `u ∨ v = (u·w∘ ∧ v·w∘)·w∘`.
pub fn weak_join(system: &CoxeterSystem, u: &Element, v: &Element) -> Element {
    let w0 = Element::longest(system);
    let flipped =
        weak_meet(system, &u.multiply(system, &w0).unwrap(), &v.multiply(system, &w0).unwrap());
    flipped.multiply(system, &w0).unwrap()
}

/// The fully enumerated group with cached inversion sets, ordered by
/// `(length, lexicographic reduced word)`.
pub struct GroupOrder {
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    inversion_sets: Vec<RootSet>,
    /// `down_sets[i]` is the bit-set of `{j : elements[j] ≤ elements[i]}`.
    down_sets: Vec<RootSet>,
}

impl GroupOrder {
    pub fn enumerate(system: &CoxeterSystem) -> GroupOrder {
        let mut elements = vec![Element::identity(system)];
        let mut seen: HashMap<Element, usize> = HashMap::new();
        seen.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for s in 0..system.rank() {
                let next = current.right_multiply_gen(system, s);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        elements.sort_by_cached_key(|w| (w.length(), w.reduced_word(system)));

        let index: HashMap<Element, usize> =
            elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let inversion_sets: Vec<RootSet> =
            elements.iter().map(|w| w.inversion_set(system)).collect();
        let size = elements.len();
        let down_sets = (0..size)
            .map(|i| {
                let mut down = RootSet::empty(size);
                for j in 0..size {
                    if inversion_sets[j].is_subset(&inversion_sets[i]) {
                        down.insert(j);
                    }
                }
                down
            })
            .collect();
        GroupOrder { elements, index, inversion_sets, down_sets }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, w: &Element) -> usize {
        self.index[w]
    }

    pub fn inversion_set(&self, i: usize) -> &RootSet {
        &self.inversion_sets[i]
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.down_sets[j].contains(i)
    }

    /// Brute-force meet from the enumerated order: the unique maximal
    /// common lower bound. Panics if the poset fails to be a lattice,
    /// which would falsify the theory this crate is built on.
    pub fn brute_meet_idx(&self, a: usize, b: usize) -> usize {
        let common = self.down_sets[a].intersection(&self.down_sets[b]);
        let mut best: Option<usize> = None;
        for c in common.iter() {
            if common.is_subset(&self.down_sets[c]) {
                assert!(best.is_none(), "two distinct maximal lower bounds");
                best = Some(c);
            }
        }
        best.expect("nonempty set of lower bounds always contains the identity")
    }

    pub fn brute_join_idx(&self, a: usize, b: usize) -> usize {
        let mut candidates: Vec<usize> = (0..self.len())
            .filter(|&c| self.leq_idx(a, c) && self.leq_idx(b, c))
            .collect();
        let mut best: Option<usize> = None;
        for &c in &candidates {
            if candidates.iter().all(|&d| self.leq_idx(c, d)) {
                assert!(best.is_none(), "two distinct minimal upper bounds");
                best = Some(c);
            }
        }
        candidates.clear();
        best.expect("w∘ is always a common upper bound")
    }
}

/// `enumerate_group` plus nothing else; kept as a free function so callers
/// that only need the element list do not reach into the order structure.
pub fn enumerate_group(system: &CoxeterSystem) -> Vec<Element> {
    GroupOrder::enumerate(system).elements.clone()
}

/// Convenience used by several oracles: `u ≤ v` by the prefix definition
/// `ℓ(u) + ℓ(u⁻¹ v) = ℓ(v)`.
pub fn weak_leq_by_prefix(system: &CoxeterSystem, u: &Element, v: &Element) -> Result<bool> {
    let quotient = u.inverse(system).multiply(system, v)?;
    Ok(u.length() + quotient.length() == v.length())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(desc: &str) -> CoxeterSystem {
        CoxeterSystem::from_descriptor(desc).unwrap()
    }

    #[test]
    fn group_sizes() {
        assert_eq!(GroupOrder::enumerate(&sys("A2")).len(), 6);
        assert_eq!(GroupOrder::enumerate(&sys("B3")).len(), 48);
        assert_eq!(GroupOrder::enumerate(&sys("H3")).len(), 120);
        assert_eq!(GroupOrder::enumerate(&sys("I2:5")).len(), 10);
    }

    #[test]
    fn enumeration_sorted_by_length_then_word() {
        let a2 = sys("A2");
        let order = GroupOrder::enumerate(&a2);
        let words: Vec<Vec<usize>> =
            order.elements().iter().map(|w| w.reduced_word(&a2)).collect();
        assert_eq!(
            words,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 1],
                vec![1, 0],
                vec![0, 1, 0],
            ]
        );
    }

    #[test]
    fn leq_examples() {
        let a2 = sys("A2");
        let e = Element::identity(&a2);
        let s = Element::generator(&a2, 0);
        let t = Element::generator(&a2, 1);
        let ts = Element::from_word(&a2, &[1, 0]);
        let w0 = Element::longest(&a2);
        assert!(weak_leq(&a2, &e, &w0));
        assert!(!weak_leq(&a2, &s, &ts));
        assert!(weak_leq(&a2, &t, &ts));
        assert!(weak_leq(&a2, &w0, &w0));
    }

    #[test]
    fn meet_join_examples() {
        let a2 = sys("A2");
        let e = Element::identity(&a2);
        let s = Element::generator(&a2, 0);
        let t = Element::generator(&a2, 1);
        let st = Element::from_word(&a2, &[0, 1]);
        let ts = Element::from_word(&a2, &[1, 0]);
        let w0 = Element::longest(&a2);
        assert_eq!(weak_meet(&a2, &s, &t), e);
        assert_eq!(weak_join(&a2, &st, &ts), w0);
        assert_eq!(weak_meet(&a2, &st, &st), st);
        assert_eq!(weak_join(&a2, &e, &ts), ts);
    }

    #[test]
    fn meet_join_match_brute_force_exhaustively() {
        for desc in ["A2", "B2", "I2:5", "A3"] {
            let system = sys(desc);
            let order = GroupOrder::enumerate(&system);
            for a in 0..order.len() {
                for b in 0..order.len() {
                    let meet = weak_meet(&system, order.element(a), order.element(b));
                    assert_eq!(
                        order.index_of(&meet),
                        order.brute_meet_idx(a, b),
                        "{desc}: meet({a},{b})"
                    );
                    let join = weak_join(&system, order.element(a), order.element(b));
                    assert_eq!(
                        order.index_of(&join),
                        order.brute_join_idx(a, b),
                        "{desc}: join({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn leq_definitions_agree() {
        let b2 = sys("B2");
        let order = GroupOrder::enumerate(&b2);
        for a in 0..order.len() {
            for b in 0..order.len() {
                let by_inv = weak_leq(&b2, order.element(a), order.element(b));
                let by_prefix =
                    weak_leq_by_prefix(&b2, order.element(a), order.element(b)).unwrap();
                assert_eq!(by_inv, by_prefix);
                assert_eq!(by_inv, order.leq_idx(a, b));
            }
        }
    }
}
