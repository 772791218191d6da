//! Group elements stored as signed permutations of the positive roots.
//!
//! `perm[i]` is the root index of `w(root_i)` for each positive root `i`;
//! images of negative roots follow by negation. This gives `O(p)`
//! multiplication, canonical equality, and inversion sets for free: the
//! length is the number of positives sent negative.

use crate::bitset::{GenSet, RootSet};
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use std::fmt;
use std::hash::{Hash, Hasher};

#[derive(Clone, Eq)]
pub struct Element {
    signature: u64,
    perm: Box<[u32]>,
    length: u32,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature && self.perm == other.perm
    }
}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(len={}, perm={:?})", self.length, self.perm)
    }
}

impl Element {
    fn from_perm(system: &CoxeterSystem, perm: Vec<u32>) -> Self {
        let p = system.num_positive_roots();
        let length = perm.iter().filter(|&&img| img as usize >= p).count() as u32;
        Element { signature: system.signature(), perm: perm.into_boxed_slice(), length }
    }

    pub fn identity(system: &CoxeterSystem) -> Self {
        Self::from_perm(system, system.identity_perm())
    }

    pub fn generator(system: &CoxeterSystem, s: usize) -> Self {
        assert!(s < system.rank(), "generator index out of range");
        Self::from_perm(system, system.generator_perm(s))
    }

    pub fn longest(system: &CoxeterSystem) -> Self {
        Self::from_perm(system, system.longest_raw().to_vec())
    }

    /// Longest element `w∘,I` of the standard parabolic subgroup `W_I`.
    pub fn longest_parabolic(system: &CoxeterSystem, i_set: GenSet) -> Self {
        Self::from_perm(system, system.longest_perm(i_set))
    }

    pub fn from_word(system: &CoxeterSystem, word: &[usize]) -> Self {
        let mut perm = system.identity_perm();
        for &s in word {
            perm = system.compose(&perm, &system.generator_perm(s));
        }
        Self::from_perm(system, perm)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub(crate) fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub(crate) fn check_system(&self, system: &CoxeterSystem) -> Result<()> {
        if self.signature == system.signature() && self.perm.len() == system.num_positive_roots() {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub fn multiply(&self, system: &CoxeterSystem, rhs: &Element) -> Result<Element> {
        self.check_system(system)?;
        rhs.check_system(system)?;
        Ok(Element::from_perm(system, system.compose(&self.perm, &rhs.perm)))
    }

    pub fn inverse(&self, system: &CoxeterSystem) -> Element {
        let p = system.num_positive_roots();
        let mut inv = vec![0u32; p];
        for i in 0..p {
            let img = self.perm[i] as usize;
            if img < p {
                inv[img] = i as u32;
            } else {
                inv[img - p] = (i + p) as u32;
            }
        }
        Element::from_perm(system, inv)
    }

    /// Image root index of `γ` under this element.
    pub fn apply_to_root(&self, system: &CoxeterSystem, root: usize) -> usize {
        system.apply_perm(&self.perm, root)
    }

    pub fn right_multiply_gen(&self, system: &CoxeterSystem, s: usize) -> Element {
        Element::from_perm(system, system.compose(&self.perm, &system.generator_perm(s)))
    }

    pub fn left_multiply_gen(&self, system: &CoxeterSystem, s: usize) -> Element {
        Element::from_perm(system, system.compose(&system.generator_perm(s), &self.perm))
    }

    /// Left inversion set `N(w) = Φ+ ∩ w(Φ−)`, as a set of positive root
    /// indices inside the full signed universe.
    pub fn inversion_set(&self, system: &CoxeterSystem) -> RootSet {
        let p = system.num_positive_roots();
        let mut set = RootSet::empty(2 * p);
        for i in 0..p {
            let img = self.perm[i] as usize;
            if img >= p {
                set.insert(img - p);
            }
        }
        set
    }

    /// `s ∈ D_R(w) ⟺ ℓ(ws) < ℓ(w) ⟺ w(α_s) ∈ Φ−`.
    pub fn right_descents(&self, system: &CoxeterSystem) -> GenSet {
        let p = system.num_positive_roots();
        let mut set = GenSet::EMPTY;
        for s in 0..system.rank() {
            if self.perm[s] as usize >= p {
                set.insert(s);
            }
        }
        set
    }

    /// `s ∈ D_L(w) ⟺ α_s ∈ N(w)`.
    pub fn left_descents(&self, system: &CoxeterSystem) -> GenSet {
        let p = system.num_positive_roots();
        let n = system.rank();
        let mut set = GenSet::EMPTY;
        for i in 0..p {
            let img = self.perm[i] as usize;
            if img >= p && img - p < n {
                set.insert(img - p);
            }
        }
        set
    }

    /// Lexicographically smallest reduced word, via greedy peeling of the
    /// smallest left descent.
    pub fn reduced_word(&self, system: &CoxeterSystem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length as usize);
        let mut v = self.clone();
        while !v.is_identity() {
            let s = v
                .left_descents(system)
                .iter()
                .next()
                .expect("non-identity element has a left descent");
            word.push(s);
            v = v.left_multiply_gen(system, s);
        }
        word
    }
}

pub fn is_reduced(system: &CoxeterSystem, word: &[usize]) -> bool {
    Element::from_word(system, word).length() as usize == word.len()
}

/// Unique factorization `w = w^I · w_I` with `w^I ∈ W^I`, `w_I ∈ W_I`, and
/// `ℓ(w) = ℓ(w^I) + ℓ(w_I)`, computed by peeling right descents in `I`.
pub fn parabolic_decompose(
    system: &CoxeterSystem,
    w: &Element,
    i_set: GenSet,
) -> (Element, Element) {
    let mut min_rep = w.clone();
    let mut inside = Element::identity(system);
    loop {
        let descents = min_rep.right_descents(system).intersection(i_set);
        match descents.iter().next() {
            Some(s) => {
                min_rep = min_rep.right_multiply_gen(system, s);
                inside = inside.left_multiply_gen(system, s);
            }
            None => return (min_rep, inside),
        }
    }
}

/// Left-handed counterpart: `w = w_J · {}^J w` with `w_J ∈ W_J` and
/// `{}^J w` free of left descents in `J`.
pub fn left_parabolic_decompose(
    system: &CoxeterSystem,
    w: &Element,
    j_set: GenSet,
) -> (Element, Element) {
    let inv = w.inverse(system);
    let (min_rep, inside) = parabolic_decompose(system, &inv, j_set);
    (inside.inverse(system), min_rep.inverse(system))
}

pub fn is_minimal_coset_rep(system: &CoxeterSystem, x: &Element, i_set: GenSet) -> bool {
    x.right_descents(system).intersection(i_set).is_empty()
}

/// Outcome of Deodhar's lemma for `s`, `x ∈ W^I`: either `sx ∈ W^I`,
/// or `sx = xr` for a unique `r ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeodharStep {
    InMinimalReps(Element),
    Swap(usize),
}

pub fn deodhar_step(
    system: &CoxeterSystem,
    s: usize,
    x: &Element,
    i_set: GenSet,
) -> Result<DeodharStep> {
    x.check_system(system)?;
    if !is_minimal_coset_rep(system, x, i_set) {
        return Err(Error::NotMinimalRep);
    }
    let sx = x.left_multiply_gen(system, s);
    if is_minimal_coset_rep(system, &sx, i_set) {
        Ok(DeodharStep::InMinimalReps(sx))
    } else {
        // sx = xr means r = x⁻¹ s x, necessarily a generator in I here.
        let conjugate = x
            .inverse(system)
            .multiply(system, &sx)
            .expect("same system");
        let r = i_set
            .iter()
            .find(|&r| Element::generator(system, r) == conjugate)
            .expect("Deodhar's lemma: sx ∉ W^I forces sx = xr with r ∈ I");
        Ok(DeodharStep::Swap(r))
    }
}
