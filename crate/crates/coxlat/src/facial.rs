//! The facial weak order on the Coxeter complex: cover relations, the
//! three equivalent order characterizations, meet and join, the lattice,
//! the Möbius function, irreducibles, and the (anti-)automorphisms.

use crate::bitset::GenSet;
use crate::coset::{CoxeterComplex, ParabolicCoset};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::system::CoxeterSystem;
use crate::weak::{weak_join, weak_leq, weak_meet};

/// The two kinds of cover relations.
///
/// Type 1 grows the parabolic: `xW_I ⋖ xW_{I∪{s}}`.
/// Type 2 shrinks it from the top: `xW_I ⋖ x·w∘,I·w∘,I∖{s} W_{I∖{s}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverType {
    GrowParabolic,
    ShrinkParabolic,
}

impl CoverType {
    pub fn tag(self) -> &'static str {
        match self {
            CoverType::GrowParabolic => "(1)",
            CoverType::ShrinkParabolic => "(2)",
        }
    }
}

/// All cosets covering `c` in the facial weak order, with their types.
pub fn facial_covers(
    system: &CoxeterSystem,
    c: &ParabolicCoset,
) -> Vec<(ParabolicCoset, CoverType)> {
    let x = c.minimal();
    let i_set = c.generators();
    let mut covers = Vec::new();
    for s in 0..system.rank() {
        if !i_set.contains(s) {
            // Type 1 requires x ∈ W^{I∪{s}}, i.e. s is not a right descent.
            if !x.right_descents(system).contains(s) {
                covers.push((
                    ParabolicCoset::from_minimal(x.clone(), i_set.with(s)),
                    CoverType::GrowParabolic,
                ));
            }
        } else {
            let shrunk = i_set.without(s);
            let rep = c
                .top(system)
                .multiply(system, &Element::longest_parabolic(system, shrunk))
                .expect("same system");
            covers.push((ParabolicCoset::from_minimal(rep, shrunk), CoverType::ShrinkParabolic));
        }
    }
    covers
}

/// Condition (ii): `R(a) ∖ R(b) ⊆ Φ−` and `R(b) ∖ R(a) ⊆ Φ+`.
pub fn facial_leq_roots(system: &CoxeterSystem, a: &ParabolicCoset, b: &ParabolicCoset) -> bool {
    let p = system.num_positive_roots();
    let ra = a.root_inversion_set(system);
    let rb = b.root_inversion_set(system);
    ra.difference(&rb).iter().all(|i| i >= p) && rb.difference(&ra).iter().all(|i| i < p)
}

/// Condition (iii): `x ≤ y` and `x·w∘,I ≤ y·w∘,J` in weak order.
pub fn facial_leq_minmax(system: &CoxeterSystem, a: &ParabolicCoset, b: &ParabolicCoset) -> bool {
    weak_leq(system, a.minimal(), b.minimal())
        && weak_leq(system, &a.top(system), &b.top(system))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeqMethod {
    Covers,
    Roots,
    MinMax,
}

/// Order test by any of the three characterizations. `Covers` needs the
/// built lattice.
pub fn facial_leq(
    system: &CoxeterSystem,
    a: &ParabolicCoset,
    b: &ParabolicCoset,
    method: LeqMethod,
    lattice: Option<(&CoxeterComplex, &FacialLattice)>,
) -> Result<bool> {
    a.minimal().check_system(system)?;
    b.minimal().check_system(system)?;
    match method {
        LeqMethod::Roots => Ok(facial_leq_roots(system, a, b)),
        LeqMethod::MinMax => Ok(facial_leq_minmax(system, a, b)),
        LeqMethod::Covers => {
            let (complex, lattice) = lattice.ok_or_else(|| {
                Error::Parse("the covers method needs a built facial lattice".into())
            })?;
            Ok(lattice.poset().leq(complex.index_of(a), complex.index_of(b)))
        }
    }
}

/// Meet by the closed formula: `z∧ = x ∧ y`,
/// `K∧ = D_L(z∧⁻¹ (x·w∘,I ∧ y·w∘,J))`, result `z∧ W_{K∧}`.
pub fn facial_meet(
    system: &CoxeterSystem,
    a: &ParabolicCoset,
    b: &ParabolicCoset,
) -> Result<ParabolicCoset> {
    a.minimal().check_system(system)?;
    b.minimal().check_system(system)?;
    let z = weak_meet(system, a.minimal(), b.minimal());
    let tops_meet = weak_meet(system, &a.top(system), &b.top(system));
    let k_set = z.inverse(system).multiply(system, &tops_meet)?.left_descents(system);
    debug_assert!(z.right_descents(system).intersection(k_set).is_empty());
    Ok(ParabolicCoset::from_minimal(z, k_set))
}

/// Join dually, re-canonicalized: with `z∨ = x·w∘,I ∨ y·w∘,J` and
/// `K∨ = D_L(z∨⁻¹ (x ∨ y))`, the result is the coset with top `z∨` and
/// minimal representative `z∨·w∘,K∨`.
pub fn facial_join(
    system: &CoxeterSystem,
    a: &ParabolicCoset,
    b: &ParabolicCoset,
) -> Result<ParabolicCoset> {
    a.minimal().check_system(system)?;
    b.minimal().check_system(system)?;
    let z = weak_join(system, &a.top(system), &b.top(system));
    let mins_join = weak_join(system, a.minimal(), b.minimal());
    let k_set = z.inverse(system).multiply(system, &mins_join)?.left_descents(system);
    let min_rep = z.multiply(system, &Element::longest_parabolic(system, k_set))?;
    debug_assert!(min_rep.right_descents(system).intersection(k_set).is_empty());
    Ok(ParabolicCoset::from_minimal(min_rep, k_set))
}

/// The built facial weak order: Hasse diagram plus its reachability order.
pub struct FacialLattice {
    covers: Vec<(usize, usize, CoverType)>,
    poset: FinitePoset,
}

/// Dense order matrices are kept up to this many cosets.
pub const DENSE_ORDER_LIMIT: usize = 1 << 13;

impl FacialLattice {
    /// Builds the cover digraph and its closure, then cross-checks the
    /// reachability order against both global characterizations on every
    /// pair of cosets. A disagreement is an implementation bug and is
    /// surfaced, never swallowed.
    pub fn build(system: &CoxeterSystem, complex: &CoxeterComplex) -> Result<FacialLattice> {
        let size = complex.len();
        if size > DENSE_ORDER_LIMIT {
            return Err(Error::Parse(format!(
                "complex with {size} cosets exceeds the dense order limit {DENSE_ORDER_LIMIT}; \
                 use on-demand minmax comparisons instead"
            )));
        }
        let mut covers = Vec::new();
        for (idx, record) in complex.records().iter().enumerate() {
            for (target, kind) in facial_covers(system, &record.coset) {
                covers.push((idx, complex.index_of(&target), kind));
            }
        }
        let plain: Vec<(usize, usize)> = covers.iter().map(|&(a, b, _)| (a, b)).collect();
        let poset = FinitePoset::from_covers(size, &plain);

        let p = system.num_positive_roots();
        for a in 0..size {
            for b in 0..size {
                let by_covers = poset.leq(a, b);
                let ra = &complex.record(a).root_set;
                let rb = &complex.record(b).root_set;
                let by_roots = ra.difference(rb).iter().all(|i| i >= p)
                    && rb.difference(ra).iter().all(|i| i < p);
                let by_minmax = complex.group().leq_idx(complex.record(a).x, complex.record(b).x)
                    && complex.group().leq_idx(complex.record(a).top, complex.record(b).top);
                if by_covers != by_roots || by_roots != by_minmax {
                    return Err(Error::CharacterizationMismatch(format!(
                        "cosets {a}, {b}: covers={by_covers} roots={by_roots} minmax={by_minmax}"
                    )));
                }
            }
        }
        Ok(FacialLattice { covers, poset })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn covers(&self) -> &[(usize, usize, CoverType)] {
        &self.covers
    }

    /// Hasse edges, i.e. the covers; the facial weak order's covers are
    /// exactly the defining relations.
    pub fn hasse_edges(&self) -> Vec<(usize, usize, CoverType)> {
        self.covers.clone()
    }
}

/// Closed-form Möbius value `μ(eW_∅, yW_J)`: `(−1)^{|J|}` when `y = e`,
/// zero otherwise.
pub fn mobius(complex: &CoxeterComplex, coset_idx: usize) -> i64 {
    let record = complex.record(coset_idx);
    if complex.group().element(record.x).is_identity() {
        if record.i_set.len() % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// Join- and meet-irreducible cosets by the closed criterion: `xW_∅` with
/// `x` irreducible, or `xW_{s}` with `xs` (join) resp. `x` (meet)
/// irreducible in the weak order.
pub fn irreducibles(system: &CoxeterSystem, complex: &CoxeterComplex) -> (Vec<usize>, Vec<usize>) {
    let n = system.rank();
    let mut join_irr = Vec::new();
    let mut meet_irr = Vec::new();
    for (idx, record) in complex.records().iter().enumerate() {
        let x = complex.group().element(record.x);
        match record.i_set.len() {
            0 => {
                if x.right_descents(system).len() == 1 {
                    join_irr.push(idx);
                }
                if n - x.right_descents(system).len() == 1 {
                    meet_irr.push(idx);
                }
            }
            1 => {
                let s = record.i_set.iter().next().unwrap();
                let xs = x.right_multiply_gen(system, s);
                if xs.right_descents(system).len() == 1 {
                    join_irr.push(idx);
                }
                if n - x.right_descents(system).len() == 1 {
                    meet_irr.push(idx);
                }
            }
            _ => {}
        }
    }
    (join_irr, meet_irr)
}

/// The conjugate generator `w∘ s w∘`.
pub fn conjugate_generator_by_longest(system: &CoxeterSystem, s: usize) -> usize {
    // w∘(α_s) = −α_{s'} for a unique simple s'.
    let image = Element::longest(system).apply_to_root(system, s);
    let back = system.negate_root(image);
    debug_assert!(back < system.rank());
    back
}

pub fn conjugate_set_by_longest(system: &CoxeterSystem, i_set: GenSet) -> GenSet {
    let mut out = GenSet::EMPTY;
    for s in i_set.iter() {
        out.insert(conjugate_generator_by_longest(system, s));
    }
    out
}

/// First anti-automorphism `Ψ1(xW_I) = w∘ x w∘,I W_I`; satisfies
/// `R(Ψ1(c)) = w∘(R(c))` and is an involution.
pub fn anti_automorphism_left(system: &CoxeterSystem, c: &ParabolicCoset) -> ParabolicCoset {
    let w0 = Element::longest(system);
    let rep = w0
        .multiply(system, &c.top(system))
        .expect("same system");
    debug_assert!(rep.right_descents(system).intersection(c.generators()).is_empty());
    ParabolicCoset::from_minimal(rep, c.generators())
}

/// Second anti-automorphism `Ψ2(xW_I) = x w∘,I w∘ W_{w∘Iw∘}`; satisfies
/// `R(Ψ2(c)) = −R(c)`.
pub fn anti_automorphism_right(system: &CoxeterSystem, c: &ParabolicCoset) -> ParabolicCoset {
    let w0 = Element::longest(system);
    let rep = c.top(system).multiply(system, &w0).expect("same system");
    let j_set = conjugate_set_by_longest(system, c.generators());
    debug_assert!(rep.right_descents(system).intersection(j_set).is_empty());
    ParabolicCoset::from_minimal(rep, j_set)
}

/// The automorphism `Θ(xW_I) = w∘ x w∘ W_{w∘Iw∘} = Ψ2 ∘ Ψ1`.
pub fn automorphism(system: &CoxeterSystem, c: &ParabolicCoset) -> ParabolicCoset {
    anti_automorphism_right(system, &anti_automorphism_left(system, c))
}
