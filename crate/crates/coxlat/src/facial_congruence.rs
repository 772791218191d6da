//! Extension of a weak-order congruence to the facial weak order: the
//! coset projections `Π↑`/`Π↓`, the transported generators `σ↑`/`Σ↑`/`Σ↓`,
//! facial congruence classes with their root and weight sets, quotient
//! lattices, fan cones, singletons, and the non-sublattice witness.

use crate::bitset::{GenSet, RootSet};
use crate::cone::{in_cone, relative_interiors_intersect, span_rank};
use crate::congruence::{
    is_antisortable, is_sortable, Congruence, CoxeterWord, ProjectionPair,
};
use crate::coset::{CoxeterComplex, ParabolicCoset};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::facial::{anti_automorphism_left, facial_leq_minmax, facial_meet, facial_join};
use crate::poset::FinitePoset;
use crate::system::{CoxeterSystem, Vector};
use crate::weak::GroupOrder;

/// `Π↑(xW_I) = π↑(x) W_K` with `K = D_L(π↑(x)⁻¹ · π↑(x·w∘,I))`: the
/// biggest parabolic coset in `[π↑(x), π↑(x·w∘,I)]` containing `π↑(x)` as
/// its minimal element.
pub fn facial_proj_up(
    system: &CoxeterSystem,
    order: &GroupOrder,
    pair: &ProjectionPair,
    coset: &ParabolicCoset,
) -> ParabolicCoset {
    let x_up = order.element(pair.up[order.index_of(coset.minimal())]);
    let top_up = order.element(pair.up[order.index_of(&coset.top(system))]);
    let k_set = x_up
        .inverse(system)
        .multiply(system, top_up)
        .expect("same system")
        .left_descents(system);
    debug_assert!(x_up.right_descents(system).intersection(k_set).is_empty());
    ParabolicCoset::from_minimal(x_up.clone(), k_set)
}

/// The projection pair of the congruence transported along `u ↦ w∘·u`,
/// under which `Ψ1` exchanges the facial up and down projections.
pub fn conjugated_pair(
    system: &CoxeterSystem,
    order: &GroupOrder,
    pair: &ProjectionPair,
) -> ProjectionPair {
    let w0 = Element::longest(system);
    let flip = |i: usize| {
        order.index_of(&w0.multiply(system, order.element(i)).expect("same system"))
    };
    let size = order.len();
    ProjectionPair {
        up: (0..size).map(|i| flip(pair.down[flip(i)])).collect(),
        down: (0..size).map(|i| flip(pair.up[flip(i)])).collect(),
    }
}

/// `Π↓ = Ψ1 ∘ Π↑' ∘ Ψ1` where `Π↑'` belongs to the conjugated congruence.
pub fn facial_proj_down(
    system: &CoxeterSystem,
    order: &GroupOrder,
    pair: &ProjectionPair,
    conjugated: &ProjectionPair,
    coset: &ParabolicCoset,
) -> ParabolicCoset {
    let _ = pair;
    let mirrored = anti_automorphism_left(system, coset);
    let projected = facial_proj_up(system, order, conjugated, &mirrored);
    anti_automorphism_left(system, &projected)
}

/// Independent route for `Π↓`: among all parabolic cosets whose top is
/// `π↓(x·w∘,I)` and which contain `π↓(x)` in their interval, take the one
/// with the largest generator set. Quadratic in `2^n`, test use only.
pub fn facial_proj_down_by_search(
    system: &CoxeterSystem,
    order: &GroupOrder,
    pair: &ProjectionPair,
    coset: &ParabolicCoset,
) -> ParabolicCoset {
    let x_down = order.element(pair.down[order.index_of(coset.minimal())]).clone();
    let top_down = order.element(pair.down[order.index_of(&coset.top(system))]).clone();
    let mut candidates: Vec<(Element, GenSet)> = Vec::new();
    for k_set in GenSet::all_subsets(system.rank()) {
        let w0k = Element::longest_parabolic(system, k_set);
        let min_rep = top_down.multiply(system, &w0k).expect("same system");
        if min_rep.length() + w0k.length() != top_down.length() {
            continue; // top of min_rep W_K would not be top_down
        }
        if !min_rep.right_descents(system).intersection(k_set).is_empty() {
            continue;
        }
        if !crate::weak::weak_leq(system, &x_down, &min_rep) {
            continue;
        }
        candidates.push((min_rep, k_set));
    }
    let (min_rep, k_set) = candidates
        .iter()
        .max_by_key(|(_, k)| k.len())
        .cloned()
        .expect("K = ∅ always qualifies");
    assert!(
        candidates.iter().all(|(_, k)| k.is_subset(k_set)),
        "candidate cosets must have a unique maximum"
    );
    ParabolicCoset::from_minimal(min_rep, k_set)
}

/// The transported generator `σ↑(x,t)`: the unique
/// `s ∉ D_R(π↑(x))` with `xt ≤ π↑(x)·s` and `xt ≡ π↑(x)·s`.
pub fn sigma_up(
    system: &CoxeterSystem,
    order: &GroupOrder,
    pair: &ProjectionPair,
    x: &Element,
    t: usize,
) -> Result<usize> {
    let x_idx = order.index_of(x);
    let xt = x.right_multiply_gen(system, t);
    debug_assert!(!x.right_descents(system).contains(t), "t must be a right ascent of x");
    let xt_idx = order.index_of(&xt);
    if pair.down[x_idx] == pair.down[xt_idx] {
        return Err(Error::Contracted);
    }
    let up = order.element(pair.up[x_idx]);
    let mut found = None;
    for s in 0..system.rank() {
        if up.right_descents(system).contains(s) {
            continue;
        }
        let candidate = up.right_multiply_gen(system, s);
        let cand_idx = order.index_of(&candidate);
        if order.leq_idx(xt_idx, cand_idx) && pair.down[cand_idx] == pair.down[xt_idx] {
            assert!(found.is_none(), "transported generator must be unique");
            found = Some(s);
        }
    }
    Ok(found.expect("transport lemma guarantees existence"))
}

/// `Σ↑(x,I) = {σ↑(x,t) : t ∈ I, x ≢ xt}`, and the dual `Σ↓(x,I)` read off
/// the down projection of the coset.
pub fn sigma_sets(
    system: &CoxeterSystem,
    order: &GroupOrder,
    pair: &ProjectionPair,
    conjugated: &ProjectionPair,
    coset: &ParabolicCoset,
) -> (GenSet, GenSet) {
    let x = coset.minimal();
    let mut sigma_up_set = GenSet::EMPTY;
    for t in coset.generators().iter() {
        match sigma_up(system, order, pair, x, t) {
            Ok(s) => sigma_up_set.insert(s),
            Err(Error::Contracted) => {}
            Err(other) => unreachable!("unexpected error {other}"),
        }
    }
    let down_coset = facial_proj_down(system, order, pair, conjugated, coset);
    (sigma_up_set, down_coset.generators())
}

/// A lattice congruence of the facial weak order, stored over a complex.
pub struct FacialCongruence {
    pub base: Congruence,
    /// Coset index → class index.
    pub class_of: Vec<usize>,
    pub classes: Vec<FacialClass>,
    /// Coset index → coset index of `Π↑` resp. `Π↓`.
    pub up: Vec<usize>,
    pub down: Vec<usize>,
}

pub struct FacialClass {
    /// Complex index of the minimal coset.
    pub bottom: usize,
    /// Complex index of the maximal coset.
    pub top: usize,
    pub members: Vec<usize>,
}

impl FacialCongruence {
    /// Extends the base congruence to the cosets: classes are keyed by
    /// `(class(x), class(x·w∘,I))`, and the keying is cross-checked
    /// against the fibers of both facial projection maps.
    pub fn build(
        system: &CoxeterSystem,
        complex: &CoxeterComplex,
        base: Congruence,
    ) -> Result<FacialCongruence> {
        let order = complex.group();
        let conjugated = conjugated_pair(system, order, &base.pair);

        let mut up = Vec::with_capacity(complex.len());
        let mut down = Vec::with_capacity(complex.len());
        for record in complex.records() {
            let up_coset = facial_proj_up(system, order, &base.pair, &record.coset);
            up.push(complex.index_of(&up_coset));
            let down_coset =
                facial_proj_down(system, order, &base.pair, &conjugated, &record.coset);
            down.push(complex.index_of(&down_coset));
        }

        // Classes keyed by the pair of base classes, ordered by bottom.
        let mut keyed: std::collections::HashMap<(usize, usize), Vec<usize>> =
            std::collections::HashMap::new();
        for (idx, record) in complex.records().iter().enumerate() {
            let key = (base.class_of[record.x], base.class_of[record.top]);
            keyed.entry(key).or_default().push(idx);
        }
        let mut classes: Vec<FacialClass> = keyed
            .into_values()
            .map(|members| {
                let bottom = down[members[0]];
                let top = up[members[0]];
                FacialClass { bottom, top, members }
            })
            .collect();
        classes.sort_by_key(|c| c.bottom);
        let mut class_of = vec![usize::MAX; complex.len()];
        for (k, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = k;
            }
        }

        // Fibers of both projections must coincide with the keying.
        for (idx, _) in complex.records().iter().enumerate() {
            let k = class_of[idx];
            if down[idx] != classes[k].bottom || up[idx] != classes[k].top {
                return Err(Error::FiberMismatch(format!(
                    "coset {idx}: projections ({}, {}) disagree with class ({}, {})",
                    down[idx], up[idx], classes[k].bottom, classes[k].top
                )));
            }
            if class_of[down[idx]] != k || class_of[up[idx]] != k {
                return Err(Error::FiberMismatch(format!(
                    "projections of coset {idx} leave its keyed class"
                )));
            }
        }
        Ok(FacialCongruence { base, class_of, classes, up, down })
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Facial singletons by the closed criterion `π↑(x) = x` and
    /// `π↓(x·w∘,I) = x·w∘,I`.
    pub fn singletons(&self, complex: &CoxeterComplex) -> Vec<usize> {
        complex
            .records()
            .iter()
            .enumerate()
            .filter(|(_, record)| {
                self.base.pair.up[record.x] == record.x
                    && self.base.pair.down[record.top] == record.top
            })
            .map(|(idx, _)| idx)
            .collect()
    }

    /// Root inversion set of a class: `R(bottom) ∩ R(top)`.
    pub fn class_root_set(&self, complex: &CoxeterComplex, class: usize) -> RootSet {
        let c = &self.classes[class];
        complex.record(c.bottom).root_set.intersection(&complex.record(c.top).root_set)
    }

    /// Weight inversion set of a class: `ω(bottom) ∪ ω(top)`, as indices
    /// into the complex weight table.
    pub fn class_weight_set(&self, complex: &CoxeterComplex, class: usize) -> Vec<usize> {
        let c = &self.classes[class];
        let mut ids: Vec<usize> = complex
            .record(c.bottom)
            .weight_set
            .iter()
            .chain(&complex.record(c.top).weight_set)
            .copied()
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// One cone of the fan `F≡`: the class's weight vectors.
pub struct FanCone {
    pub class: usize,
    pub generators: Vec<Vector>,
    pub dim: usize,
}

/// One cone per congruence class, generated by the class weight set.
pub fn fan_cones(
    system: &CoxeterSystem,
    complex: &CoxeterComplex,
    fc: &FacialCongruence,
) -> Vec<FanCone> {
    (0..fc.num_classes())
        .map(|class| {
            let generators: Vec<Vector> = fc
                .class_weight_set(complex, class)
                .into_iter()
                .map(|id| complex.weight_vector(id).clone())
                .collect();
            let refs: Vec<&Vector> = generators.iter().collect();
            let dim = span_rank(&refs, system.rank());
            FanCone { class, generators, dim }
        })
        .collect()
}

/// Do two fan cones have intersecting relative interiors?
pub fn cones_share_interior(system: &CoxeterSystem, a: &FanCone, b: &FanCone) -> bool {
    let ga: Vec<&Vector> = a.generators.iter().collect();
    let gb: Vec<&Vector> = b.generators.iter().collect();
    relative_interiors_intersect(&ga, &gb, system.rank())
}

/// Equality of two cones given by generators, by mutual containment.
pub fn cones_equal(system: &CoxeterSystem, a: &[&Vector], b: &[&Vector]) -> bool {
    let _ = system;
    a.iter().all(|v| in_cone(b, v)) && b.iter().all(|v| in_cone(a, v))
}

/// The quotient of the facial weak order by a facial congruence: classes
/// ordered by comparing bottom cosets.
pub struct QuotientLattice {
    pub poset: FinitePoset,
    pub hasse: Vec<(usize, usize)>,
}

impl QuotientLattice {
    pub fn build(
        system: &CoxeterSystem,
        complex: &CoxeterComplex,
        fc: &FacialCongruence,
    ) -> QuotientLattice {
        let size = fc.num_classes();
        let poset = FinitePoset::from_leq(size, |a, b| {
            let ca = &complex.record(fc.classes[a].bottom).coset;
            let cb = &complex.record(fc.classes[b].bottom).coset;
            facial_leq_minmax(system, ca, cb)
        });
        let hasse = poset.hasse_covers();
        QuotientLattice { poset, hasse }
    }

    /// Meet of two classes through representatives.
    pub fn meet(
        &self,
        system: &CoxeterSystem,
        complex: &CoxeterComplex,
        fc: &FacialCongruence,
        a: usize,
        b: usize,
    ) -> Result<usize> {
        let ca = &complex.record(fc.classes[a].bottom).coset;
        let cb = &complex.record(fc.classes[b].bottom).coset;
        let meet = facial_meet(system, ca, cb)?;
        Ok(fc.class_of[complex.index_of(&meet)])
    }

    pub fn join(
        &self,
        system: &CoxeterSystem,
        complex: &CoxeterComplex,
        fc: &FacialCongruence,
        a: usize,
        b: usize,
    ) -> Result<usize> {
        let ca = &complex.record(fc.classes[a].bottom).coset;
        let cb = &complex.record(fc.classes[b].bottom).coset;
        let join = facial_join(system, ca, cb)?;
        Ok(fc.class_of[complex.index_of(&join)])
    }
}

/// Quotient of the plain weak order by an element congruence, ordered by
/// bottom representatives. Used for the element-level quotient view.
pub fn element_quotient(order: &GroupOrder, congruence: &Congruence) -> QuotientLattice {
    let size = congruence.num_classes();
    let poset = FinitePoset::from_leq(size, |a, b| {
        order.leq_idx(congruence.classes[a].bottom, congruence.classes[b].bottom)
    });
    let hasse = poset.hasse_covers();
    QuotientLattice { poset, hasse }
}

/// Reproduction of the non-sublattice counterexample in A3 with `c = srt`:
/// both inputs have sortable tops, yet the top of their facial meet is not
/// sortable, so the sortable-top cosets do not form a sublattice.
pub struct NonSublatticeReport {
    pub input_a: ParabolicCoset,
    pub input_b: ParabolicCoset,
    pub meet: ParabolicCoset,
    pub top_a_sortable: bool,
    pub top_b_sortable: bool,
    pub meet_is_expected: bool,
    pub meet_top_sortable: bool,
}

impl NonSublatticeReport {
    pub fn confirmed(&self) -> bool {
        self.top_a_sortable
            && self.top_b_sortable
            && self.meet_is_expected
            && !self.meet_top_sortable
    }
}

pub fn nonsublattice_witness(system: &CoxeterSystem) -> Result<NonSublatticeReport> {
    // Requires the standard A3 system: r,s,t with m(r,s) = m(s,t) = 3 and
    // m(r,t) = 2.
    let expected = crate::cartan::CoxeterMatrix::from_descriptor("A3")?;
    if system.matrix() != &expected {
        return Err(Error::Parse(
            "the non-sublattice witness is specific to the standard A3 system".into(),
        ));
    }
    let c = CoxeterWord::new(system, vec![1, 0, 2])?; // s, r, t
    let make = |letters: &[usize], gens: &[usize]| -> Result<ParabolicCoset> {
        let mut i_set = GenSet::EMPTY;
        for &g in gens {
            i_set.insert(g);
        }
        ParabolicCoset::new(system, &Element::from_word(system, letters), i_set)
    };
    let input_a = make(&[2, 1, 0], &[1, 2])?; // tsrW_{st}
    let input_b = make(&[1, 2, 1, 0], &[1])?; // stsrW_{s}
    let meet = facial_meet(system, &input_a, &input_b)?;
    let expected_meet = make(&[2, 1, 0], &[2])?; // tsrW_{t}
    Ok(NonSublatticeReport {
        top_a_sortable: is_sortable(system, &c, &input_a.top(system)),
        top_b_sortable: is_sortable(system, &c, &input_b.top(system)),
        meet_is_expected: meet == expected_meet,
        meet_top_sortable: is_sortable(system, &c, &meet.top(system)),
        input_a,
        input_b,
        meet,
    })
}
