//! Standard parabolic cosets `xW_I` and the Coxeter complex.
//!
//! A coset is always kept in canonical form: the stored representative is
//! the minimal-length one, so two cosets are equal iff their `(x, I)` pairs
//! are. The complex enumerates every coset once, ordered by
//! `(|I|, I as bit pattern, position of x in the group enumeration)`, and
//! caches root inversion sets, weight inversion sets, and tops.

use crate::bitset::{GenSet, RootSet};
use crate::element::{parabolic_decompose, Element};
use crate::error::Result;
use crate::system::{CoxeterSystem, Vector};
use crate::weak::GroupOrder;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicCoset {
    x: Element,
    i_set: GenSet,
}

impl ParabolicCoset {
    /// Canonicalizes an arbitrary representative: the coset `gW_I` keeps
    /// only the minimal-length part `g^I`.
    pub fn new(system: &CoxeterSystem, g: &Element, i_set: GenSet) -> Result<ParabolicCoset> {
        g.check_system(system)?;
        let (min_rep, _) = parabolic_decompose(system, g, i_set);
        Ok(ParabolicCoset { x: min_rep, i_set })
    }

    /// Wraps a representative already known to lie in `W^I`.
    pub fn from_minimal(x: Element, i_set: GenSet) -> ParabolicCoset {
        ParabolicCoset { x, i_set }
    }

    pub fn minimal(&self) -> &Element {
        &self.x
    }

    pub fn generators(&self) -> GenSet {
        self.i_set
    }

    /// The maximal element `x·w∘,I` of the coset interval.
    pub fn top(&self, system: &CoxeterSystem) -> Element {
        self.x
            .multiply(system, &Element::longest_parabolic(system, self.i_set))
            .expect("same system")
    }

    /// Root inversion set `R(xW_I) = x(Φ− ∪ Φ+_I)`.
    pub fn root_inversion_set(&self, system: &CoxeterSystem) -> RootSet {
        let p = system.num_positive_roots();
        let mut set = RootSet::empty(2 * p);
        for gamma in 0..p {
            // x(−γ) for every positive γ.
            set.insert(system.negate_root(self.x.apply_to_root(system, gamma)));
            if root_support(system, gamma).is_subset(self.i_set) {
                set.insert(self.x.apply_to_root(system, gamma));
            }
        }
        set
    }

    /// Weight inversion set `ω(xW_I) = {x(ω_s) : s ∉ I}`.
    pub fn weight_inversion_set(&self, system: &CoxeterSystem) -> Vec<Vector> {
        let word = self.x.reduced_word(system);
        (0..system.rank())
            .filter(|&s| !self.i_set.contains(s))
            .map(|s| system.apply_word_to_vector(&word, system.fundamental_weight(s)))
            .collect()
    }

    /// Root descent set `D(xW_I) = R(xW_I) ∩ ±Δ`.
    pub fn root_descent_set(&self, system: &CoxeterSystem) -> RootSet {
        let p = system.num_positive_roots();
        let r = self.root_inversion_set(system);
        let mut out = RootSet::empty(2 * p);
        for s in 0..system.rank() {
            if r.contains(s) {
                out.insert(s);
            }
            if r.contains(s + p) {
                out.insert(s + p);
            }
        }
        out
    }
}

/// Generators whose simple root appears in the support of the root.
pub fn root_support(system: &CoxeterSystem, root: usize) -> GenSet {
    let mut support = GenSet::EMPTY;
    for (s, coord) in system.root(root).iter().enumerate() {
        if !coord.is_zero() {
            support.insert(s);
        }
    }
    support
}

pub struct CoxeterComplex {
    order: GroupOrder,
    cosets: Vec<CosetRecord>,
    index: HashMap<(usize, GenSet), usize>,
    /// Distinct weight vectors appearing in any `ω(xW_I)`.
    weight_table: Vec<Vector>,
}

pub struct CosetRecord {
    pub coset: ParabolicCoset,
    /// Index of the minimal representative in the group enumeration.
    pub x: usize,
    pub i_set: GenSet,
    /// Index of `x·w∘,I` in the group enumeration.
    pub top: usize,
    pub root_set: RootSet,
    /// Weight inversion set as indices into the complex weight table.
    pub weight_set: Vec<usize>,
}

impl CoxeterComplex {
    pub fn build(system: &CoxeterSystem) -> CoxeterComplex {
        let order = GroupOrder::enumerate(system);
        let n = system.rank();
        let mut cosets = Vec::new();
        let mut index = HashMap::new();
        let mut weight_table: Vec<Vector> = Vec::new();
        let mut weight_index: HashMap<Vector, usize> = HashMap::new();

        let mut subsets: Vec<GenSet> = GenSet::all_subsets(n).collect();
        subsets.sort_by_key(|i| (i.len(), i.0));
        for i_set in subsets {
            for x_idx in 0..order.len() {
                let x = order.element(x_idx);
                if !x.right_descents(system).intersection(i_set).is_empty() {
                    continue;
                }
                let coset = ParabolicCoset::from_minimal(x.clone(), i_set);
                let top = order.index_of(&coset.top(system));
                let root_set = coset.root_inversion_set(system);
                let weight_set = coset
                    .weight_inversion_set(system)
                    .into_iter()
                    .map(|w| {
                        *weight_index.entry(w.clone()).or_insert_with(|| {
                            weight_table.push(w);
                            weight_table.len() - 1
                        })
                    })
                    .collect();
                index.insert((x_idx, i_set), cosets.len());
                cosets.push(CosetRecord { coset, x: x_idx, i_set, top, root_set, weight_set });
            }
        }
        CoxeterComplex { order, cosets, index, weight_table }
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn group(&self) -> &GroupOrder {
        &self.order
    }

    pub fn record(&self, i: usize) -> &CosetRecord {
        &self.cosets[i]
    }

    pub fn records(&self) -> &[CosetRecord] {
        &self.cosets
    }

    pub fn weight_vector(&self, id: usize) -> &Vector {
        &self.weight_table[id]
    }

    pub fn num_weights(&self) -> usize {
        self.weight_table.len()
    }

    pub fn index_of(&self, coset: &ParabolicCoset) -> usize {
        self.index[&(self.order.index_of(coset.minimal()), coset.generators())]
    }

    pub fn index_of_parts(&self, x_group_idx: usize, i_set: GenSet) -> Option<usize> {
        self.index.get(&(x_group_idx, i_set)).copied()
    }

    /// The coset of an arbitrary element and generator set, canonicalized.
    pub fn locate(&self, system: &CoxeterSystem, g: &Element, i_set: GenSet) -> Result<usize> {
        let coset = ParabolicCoset::new(system, g, i_set)?;
        Ok(self.index_of(&coset))
    }

    /// The index of the coset `{w}` of a group element.
    pub fn element_coset(&self, w_idx: usize) -> usize {
        self.index[&(w_idx, GenSet::EMPTY)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn sys(desc: &str) -> CoxeterSystem {
        CoxeterSystem::from_descriptor(desc).unwrap()
    }

    #[test]
    fn complex_sizes() {
        assert_eq!(CoxeterComplex::build(&sys("A2")).len(), 13);
        assert_eq!(CoxeterComplex::build(&sys("B2")).len(), 17);
        assert_eq!(CoxeterComplex::build(&sys("A3")).len(), 75);
    }

    #[test]
    fn canonicalization_picks_the_minimal_representative() {
        let a2 = sys("A2");
        // stW_{t} = sW_{t}: st has the right descent t.
        let st = Element::from_word(&a2, &[0, 1]);
        let coset = ParabolicCoset::new(&a2, &st, GenSet::singleton(1)).unwrap();
        assert_eq!(coset.minimal(), &Element::generator(&a2, 0));
        let direct =
            ParabolicCoset::new(&a2, &Element::generator(&a2, 0), GenSet::singleton(1)).unwrap();
        assert_eq!(coset, direct);
    }

    #[test]
    fn root_inversion_set_examples() {
        let a2 = sys("A2");
        let p = a2.num_positive_roots();
        let e = Element::identity(&a2);
        // R(eW_∅) = Φ−.
        let bottom = ParabolicCoset::new(&a2, &e, GenSet::EMPTY).unwrap();
        let r = bottom.root_inversion_set(&a2);
        assert_eq!(r.iter().collect::<Vec<_>>(), (p..2 * p).collect::<Vec<_>>());
        // R(eW_S) = Φ.
        let full = ParabolicCoset::new(&a2, &e, GenSet::full(2)).unwrap();
        assert_eq!(full.root_inversion_set(&a2), RootSet::full(2 * p));
        // R(sW_t) = {α_s, α_s + α_t, −α_t, −(α_s + α_t)}.
        let s_coset =
            ParabolicCoset::new(&a2, &Element::generator(&a2, 0), GenSet::singleton(1)).unwrap();
        let sum = a2.root_index(&vec![Scalar::one(), Scalar::one()]).unwrap();
        let mut expected = RootSet::empty(2 * p);
        expected.insert(0);
        expected.insert(sum);
        expected.insert(1 + p);
        expected.insert(sum + p);
        assert_eq!(s_coset.root_inversion_set(&a2), expected);
        // |R| = |Φ+| + |Φ+_I|.
        assert_eq!(s_coset.root_inversion_set(&a2).len(), p + 1);
    }

    #[test]
    fn weight_set_sizes_and_examples() {
        let a2 = sys("A2");
        let e = Element::identity(&a2);
        let all = ParabolicCoset::new(&a2, &e, GenSet::full(2)).unwrap();
        assert!(all.weight_inversion_set(&a2).is_empty());
        let bottom = ParabolicCoset::new(&a2, &e, GenSet::EMPTY).unwrap();
        let weights = bottom.weight_inversion_set(&a2);
        assert_eq!(weights.len(), 2);
        assert_eq!(&weights[0], a2.fundamental_weight(0));
        // sW_t has the single weight s(ω_s).
        let s_coset =
            ParabolicCoset::new(&a2, &Element::generator(&a2, 0), GenSet::singleton(1)).unwrap();
        let weights = s_coset.weight_inversion_set(&a2);
        assert_eq!(weights.len(), 1);
        assert_eq!(weights[0], a2.apply_word_to_vector(&[0], a2.fundamental_weight(0)));
    }

    #[test]
    fn root_descent_set_examples() {
        let a2 = sys("A2");
        let p = a2.num_positive_roots();
        let e = Element::identity(&a2);
        let bottom = ParabolicCoset::new(&a2, &e, GenSet::EMPTY).unwrap();
        assert_eq!(
            bottom.root_descent_set(&a2).iter().collect::<Vec<_>>(),
            vec![p, p + 1]
        );
        let w0 = Element::longest(&a2);
        let top = ParabolicCoset::new(&a2, &w0, GenSet::EMPTY).unwrap();
        assert_eq!(top.root_descent_set(&a2).iter().collect::<Vec<_>>(), vec![0, 1]);
        // D(sW_t) = {α_s, −α_t}.
        let s_coset =
            ParabolicCoset::new(&a2, &Element::generator(&a2, 0), GenSet::singleton(1)).unwrap();
        assert_eq!(
            s_coset.root_descent_set(&a2).iter().collect::<Vec<_>>(),
            vec![0, 1 + p]
        );
    }

    #[test]
    fn record_tops_and_split_formula() {
        // R(xW_I) = R(x) ∪ R(x·w∘,I), the bottom/top split.
        let b2 = sys("B2");
        let complex = CoxeterComplex::build(&b2);
        let p = b2.num_positive_roots();
        for record in complex.records() {
            let x = complex.group().element(record.x);
            let top = complex.group().element(record.top);
            let element_root_set = |w: &Element| {
                let inv = w.inversion_set(&b2);
                let mut r = RootSet::empty(2 * p);
                for j in 0..p {
                    if inv.contains(j) {
                        r.insert(j);
                    } else {
                        r.insert(j + p);
                    }
                }
                r
            };
            let union = element_root_set(x).union(&element_root_set(&top));
            assert_eq!(record.root_set, union);
        }
    }

    #[test]
    fn weight_table_is_deduplicated() {
        let a2 = sys("A2");
        let complex = CoxeterComplex::build(&a2);
        // Each of the 6 + 6 = 12 weight slots among vertex cosets collapses
        // to |W|·2 / |stabilizer| = 6 distinct weights in A2.
        assert_eq!(complex.num_weights(), 6);
        for record in complex.records() {
            assert_eq!(record.weight_set.len(), 2 - record.i_set.len());
        }
    }
}
