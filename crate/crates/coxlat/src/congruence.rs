//! Lattice congruences of the weak order through their projection pairs:
//! the generic validation framework, the descent congruence, and the
//! Cambrian congruences with their sortable elements.

use crate::bitset::GenSet;
use crate::element::{left_parabolic_decompose, Element};
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::weak::GroupOrder;

/// Up and down projections of a weak-order congruence, tabulated as index
/// arrays over the enumerated group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionPair {
    pub up: Vec<usize>,
    pub down: Vec<usize>,
}

impl ProjectionPair {
    pub fn from_maps(
        system: &CoxeterSystem,
        order: &GroupOrder,
        mut up: impl FnMut(&Element) -> Element,
        mut down: impl FnMut(&Element) -> Element,
    ) -> ProjectionPair {
        let up = order.elements().iter().map(|w| order.index_of(&up(w))).collect();
        let down = order.elements().iter().map(|w| order.index_of(&down(w))).collect();
        let _ = system;
        ProjectionPair { up, down }
    }

    pub fn identity(order: &GroupOrder) -> ProjectionPair {
        let ids: Vec<usize> = (0..order.len()).collect();
        ProjectionPair { up: ids.clone(), down: ids }
    }

    /// The congruence with a single class `[e, w∘]`.
    pub fn one_class(order: &GroupOrder) -> ProjectionPair {
        ProjectionPair { up: vec![order.len() - 1; order.len()], down: vec![0; order.len()] }
    }
}

/// First failed clause of the projection-map conditions, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectionIssue {
    /// `down(x) ≤ x ≤ up(x)` fails at `x`.
    Sandwich { x: usize },
    /// One of the four composition identities fails at `x`.
    Composition { identity: &'static str, x: usize },
    /// Order preservation fails on the pair `x ≤ y`.
    OrderPreserving { map: &'static str, x: usize, y: usize },
    /// Fibers of up and down differ at the pair.
    FiberCoincidence { x: usize, y: usize },
}

impl std::fmt::Display for ProjectionIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProjectionIssue::Sandwich { x } => write!(f, "sandwich clause fails at element {x}"),
            ProjectionIssue::Composition { identity, x } => {
                write!(f, "composition identity {identity} fails at element {x}")
            }
            ProjectionIssue::OrderPreserving { map, x, y } => {
                write!(f, "{map} is not order preserving on the pair ({x}, {y})")
            }
            ProjectionIssue::FiberCoincidence { x, y } => {
                write!(f, "fibers of up and down disagree on the pair ({x}, {y})")
            }
        }
    }
}

/// Exhaustive check of the three projection-map conditions, then of fiber
/// coincidence. Returns the first violation as a value, not an error.
pub fn validate_projections(order: &GroupOrder, pair: &ProjectionPair) -> Option<ProjectionIssue> {
    let size = order.len();
    for x in 0..size {
        if !order.leq_idx(pair.down[x], x) || !order.leq_idx(x, pair.up[x]) {
            return Some(ProjectionIssue::Sandwich { x });
        }
    }
    for x in 0..size {
        if pair.up[pair.up[x]] != pair.up[x] {
            return Some(ProjectionIssue::Composition { identity: "up∘up = up", x });
        }
        if pair.up[pair.down[x]] != pair.up[x] {
            return Some(ProjectionIssue::Composition { identity: "up∘down = up", x });
        }
        if pair.down[pair.down[x]] != pair.down[x] {
            return Some(ProjectionIssue::Composition { identity: "down∘down = down", x });
        }
        if pair.down[pair.up[x]] != pair.down[x] {
            return Some(ProjectionIssue::Composition { identity: "down∘up = down", x });
        }
    }
    for x in 0..size {
        for y in 0..size {
            if order.leq_idx(x, y) {
                if !order.leq_idx(pair.up[x], pair.up[y]) {
                    return Some(ProjectionIssue::OrderPreserving { map: "up", x, y });
                }
                if !order.leq_idx(pair.down[x], pair.down[y]) {
                    return Some(ProjectionIssue::OrderPreserving { map: "down", x, y });
                }
            }
        }
    }
    for x in 0..size {
        for y in 0..size {
            if (pair.up[x] == pair.up[y]) != (pair.down[x] == pair.down[y]) {
                return Some(ProjectionIssue::FiberCoincidence { x, y });
            }
        }
    }
    None
}

/// A weak-order congruence: the fiber partition of a validated projection
/// pair. Classes are ordered by their bottom element's index.
#[derive(Debug, Clone)]
pub struct Congruence {
    pub pair: ProjectionPair,
    /// `class_of[w]` is the class index of element `w`.
    pub class_of: Vec<usize>,
    pub classes: Vec<CongruenceClass>,
}

#[derive(Debug, Clone)]
pub struct CongruenceClass {
    pub bottom: usize,
    pub top: usize,
    pub members: Vec<usize>,
}

pub fn congruence_from_projections(
    order: &GroupOrder,
    pair: ProjectionPair,
) -> Result<Congruence> {
    if let Some(issue) = validate_projections(order, &pair) {
        return Err(Error::InvalidProjections(issue.to_string()));
    }
    let size = order.len();
    let mut bottoms: Vec<usize> = pair.down.clone();
    bottoms.sort_unstable();
    bottoms.dedup();
    let mut classes: Vec<CongruenceClass> = bottoms
        .iter()
        .map(|&bottom| CongruenceClass { bottom, top: pair.up[bottom], members: Vec::new() })
        .collect();
    let mut class_of = vec![0usize; size];
    for w in 0..size {
        let class = bottoms.binary_search(&pair.down[w]).expect("fiber bottom is recorded");
        class_of[w] = class;
        classes[class].members.push(w);
    }
    // Each class must be exactly the weak-order interval [bottom, top].
    for class in &classes {
        let interval: Vec<usize> = (0..size)
            .filter(|&w| order.leq_idx(class.bottom, w) && order.leq_idx(w, class.top))
            .collect();
        if interval != class.members {
            return Err(Error::InvalidProjections(format!(
                "class of element {} is not the interval [{}, {}]",
                class.members[0], class.bottom, class.top
            )));
        }
    }
    Ok(Congruence { pair, class_of, classes })
}

impl Congruence {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Elements alone in their class.
    pub fn singletons(&self) -> Vec<usize> {
        self.classes.iter().filter(|c| c.members.len() == 1).map(|c| c.bottom).collect()
    }
}

/// Descent congruence projections: `π↓(x) = w∘,D_L(x)` and
/// `π↑(x) = w∘,S∖D_L(x) · w∘`.
///
/// The up projection is the image of the opposite class bottom under the
/// anti-automorphism `z ↦ z·w∘`; multiplying the factors the other way
/// around lands in the wrong descent class whenever conjugation by `w∘`
/// moves generators.
pub fn descent_projections(system: &CoxeterSystem, order: &GroupOrder) -> ProjectionPair {
    let w0 = Element::longest(system);
    let all = GenSet::full(system.rank());
    ProjectionPair::from_maps(
        system,
        order,
        |x| {
            let complement = all.difference(x.left_descents(system));
            Element::longest_parabolic(system, complement)
                .multiply(system, &w0)
                .expect("same system")
        },
        |x| Element::longest_parabolic(system, x.left_descents(system)),
    )
}

/// A Coxeter element presented as a word listing every generator once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterWord(Vec<usize>);

impl CoxeterWord {
    pub fn new(system: &CoxeterSystem, letters: Vec<usize>) -> Result<CoxeterWord> {
        let n = system.rank();
        if letters.len() != n {
            return Err(Error::NotCoxeterElement(format!(
                "word has {} letters, rank is {n}",
                letters.len()
            )));
        }
        let mut seen = GenSet::EMPTY;
        for &s in &letters {
            if s >= n || seen.contains(s) {
                return Err(Error::NotCoxeterElement(
                    "each generator must appear exactly once".into(),
                ));
            }
            seen.insert(s);
        }
        Ok(CoxeterWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn element(&self, system: &CoxeterSystem) -> Element {
        Element::from_word(system, &self.0)
    }

    pub fn reversed(&self) -> CoxeterWord {
        CoxeterWord(self.0.iter().rev().copied().collect())
    }

    /// All Coxeter elements of the system, one canonical word each.
    pub fn all_distinct(system: &CoxeterSystem) -> Vec<CoxeterWord> {
        let n = system.rank();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let mut letters: Vec<usize> = (0..n).collect();
        permute(&mut letters, 0, &mut |word| {
            let element = Element::from_word(system, word);
            if seen.insert(element) {
                out.push(CoxeterWord(word.to_vec()));
            }
        });
        out
    }
}

fn permute(items: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    if from == items.len() {
        visit(items);
        return;
    }
    for i in from..items.len() {
        items.swap(from, i);
        permute(items, from + 1, visit);
        items.swap(from, i);
    }
}

/// The Cambrian down projection `π↓^c`, by the double recursion on length
/// and rank. The word operations mirror the recursion exactly: `scs` is
/// the rotation of the word and `sc` its tail.
pub fn cambrian_pi_down(system: &CoxeterSystem, word: &CoxeterWord, w: &Element) -> Element {
    pi_down_rec(system, word.letters(), w)
}

fn pi_down_rec(system: &CoxeterSystem, word: &[usize], w: &Element) -> Element {
    if w.is_identity() {
        return Element::identity(system);
    }
    debug_assert!(!word.is_empty(), "non-identity element in the trivial parabolic");
    let s = word[0];
    if w.left_descents(system).contains(s) {
        let mut rotated: Vec<usize> = word[1..].to_vec();
        rotated.push(s);
        let rest = pi_down_rec(system, &rotated, &w.left_multiply_gen(system, s));
        rest.left_multiply_gen(system, s)
    } else {
        let mut j_set = GenSet::EMPTY;
        for &t in &word[1..] {
            j_set.insert(t);
        }
        let (inside, _) = left_parabolic_decompose(system, w, j_set);
        pi_down_rec(system, &word[1..], &inside)
    }
}

/// `π↑_c(w) = (π↓^{c⁻¹}(w·w∘))·w∘`.
pub fn cambrian_pi_up(system: &CoxeterSystem, word: &CoxeterWord, w: &Element) -> Element {
    let w0 = Element::longest(system);
    let flipped = w.multiply(system, &w0).expect("same system");
    let projected = pi_down_rec(system, &word.reversed().0, &flipped);
    projected.multiply(system, &w0).expect("same system")
}

pub fn cambrian_projections(
    system: &CoxeterSystem,
    order: &GroupOrder,
    word: &CoxeterWord,
) -> ProjectionPair {
    ProjectionPair::from_maps(
        system,
        order,
        |w| cambrian_pi_up(system, word, w),
        |w| cambrian_pi_down(system, word, w),
    )
}

/// Greedy nested-support test: peel the leftmost subword of `c^∞` reducing
/// `w`, and require the per-pass supports to be weakly decreasing.
pub fn is_sortable(system: &CoxeterSystem, word: &CoxeterWord, w: &Element) -> bool {
    let mut v = w.clone();
    let mut previous = GenSet::full(system.rank());
    while !v.is_identity() {
        let mut support = GenSet::EMPTY;
        for &s in word.letters() {
            if v.left_descents(system).contains(s) {
                support.insert(s);
                v = v.left_multiply_gen(system, s);
            }
        }
        debug_assert!(!support.is_empty());
        if !support.is_subset(previous) {
            return false;
        }
        previous = support;
    }
    true
}

/// `w` is antisortable for `c` when `w·w∘` is sortable for `c⁻¹`.
pub fn is_antisortable(system: &CoxeterSystem, word: &CoxeterWord, w: &Element) -> bool {
    let w0 = Element::longest(system);
    let flipped = w.multiply(system, &w0).expect("same system");
    is_sortable(system, &word.reversed(), &flipped)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(desc: &str) -> CoxeterSystem {
        CoxeterSystem::from_descriptor(desc).unwrap()
    }

    fn a2_fixture() -> (CoxeterSystem, GroupOrder) {
        let system = sys("A2");
        let order = GroupOrder::enumerate(&system);
        (system, order)
    }

    #[test]
    fn identity_pair_is_valid_with_singleton_classes() {
        let (_, order) = a2_fixture();
        let pair = ProjectionPair::identity(&order);
        assert_eq!(validate_projections(&order, &pair), None);
        let congruence = congruence_from_projections(&order, pair).unwrap();
        assert_eq!(congruence.num_classes(), 6);
        assert!(congruence.classes.iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn one_class_pair_is_valid() {
        let (_, order) = a2_fixture();
        let pair = ProjectionPair::one_class(&order);
        assert_eq!(validate_projections(&order, &pair), None);
        let congruence = congruence_from_projections(&order, pair).unwrap();
        assert_eq!(congruence.num_classes(), 1);
        assert_eq!(congruence.classes[0].members.len(), 6);
    }

    #[test]
    fn constant_up_with_identity_down_is_invalid() {
        // up = const w∘ violates down∘up = down (and the maps cannot share
        // fibers); the validator reports the first broken clause.
        let (_, order) = a2_fixture();
        let pair =
            ProjectionPair { up: vec![order.len() - 1; order.len()], down: (0..order.len()).collect() };
        let issue = validate_projections(&order, &pair).expect("must be rejected");
        assert_eq!(issue, ProjectionIssue::Composition { identity: "down∘up = down", x: 0 });
        assert!(matches!(
            congruence_from_projections(&order, pair),
            Err(Error::InvalidProjections(_))
        ));
    }

    #[test]
    fn descent_projection_examples() {
        let (system, order) = a2_fixture();
        let pair = descent_projections(&system, &order);
        assert_eq!(validate_projections(&order, &pair), None);
        let e = order.index_of(&Element::identity(&system));
        assert_eq!(pair.down[e], e);
        assert_eq!(pair.up[e], e);
        // π↓(st) = s, π↑(st) = st.
        let st = order.index_of(&Element::from_word(&system, &[0, 1]));
        let s = order.index_of(&Element::generator(&system, 0));
        assert_eq!(pair.down[st], s);
        assert_eq!(pair.up[st], st);
        let w0 = order.index_of(&Element::longest(&system));
        assert_eq!(pair.down[w0], w0);
        // Classes: {e}, {s, st}, {t, ts}, {sts}.
        let congruence = congruence_from_projections(&order, pair).unwrap();
        assert_eq!(congruence.num_classes(), 4);
        let sizes: Vec<usize> = congruence.classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 1]);
    }

    #[test]
    fn descent_classes_group_by_left_descent_sets() {
        for desc in ["A2", "B2", "A3", "B3"] {
            let system = sys(desc);
            let order = GroupOrder::enumerate(&system);
            let pair = descent_projections(&system, &order);
            assert_eq!(validate_projections(&order, &pair), None, "{desc}");
            let congruence = congruence_from_projections(&order, pair).unwrap();
            for a in 0..order.len() {
                for b in 0..order.len() {
                    let same_descents = order.element(a).left_descents(&system)
                        == order.element(b).left_descents(&system);
                    assert_eq!(congruence.equivalent(a, b), same_descents, "{desc}");
                }
            }
            // The quotient is boolean: 2^n classes.
            assert_eq!(congruence.num_classes(), 1 << system.rank(), "{desc}");
        }
    }

    #[test]
    fn coxeter_word_validation() {
        let system = sys("A2");
        assert!(CoxeterWord::new(&system, vec![0, 1]).is_ok());
        assert!(CoxeterWord::new(&system, vec![0]).is_err());
        assert!(CoxeterWord::new(&system, vec![0, 0]).is_err());
        assert!(CoxeterWord::new(&system, vec![0, 2]).is_err());
        // A2 has two distinct Coxeter elements, A3 has four.
        assert_eq!(CoxeterWord::all_distinct(&system).len(), 2);
        assert_eq!(CoxeterWord::all_distinct(&sys("A3")).len(), 4);
    }

    #[test]
    fn cambrian_projection_examples_in_a2() {
        let (system, order) = a2_fixture();
        let c = CoxeterWord::new(&system, vec![0, 1]).unwrap();
        let e = Element::identity(&system);
        assert_eq!(cambrian_pi_down(&system, &c, &e), e);
        // π↓(ts) = t: the class {t, ts} has bottom t.
        let ts = Element::from_word(&system, &[1, 0]);
        assert_eq!(cambrian_pi_down(&system, &c, &ts), Element::generator(&system, 1));
        // sts = c_{K1} c_{K2} with K1 = {s,t}, K2 = {s} is sortable, hence
        // fixed.
        let sts = Element::longest(&system);
        assert_eq!(cambrian_pi_down(&system, &c, &sts), sts);
        // The pair validates and has 5 classes with {t, ts} merged.
        let pair = cambrian_projections(&system, &order, &c);
        assert_eq!(validate_projections(&order, &pair), None);
        let congruence = congruence_from_projections(&order, pair).unwrap();
        assert_eq!(congruence.num_classes(), 5);
        let t = order.index_of(&Element::generator(&system, 1));
        let ts_idx = order.index_of(&ts);
        assert!(congruence.equivalent(t, ts_idx));
    }

    #[test]
    fn sortable_examples_and_counts() {
        let (system, order) = a2_fixture();
        let c = CoxeterWord::new(&system, vec![0, 1]).unwrap();
        assert!(is_sortable(&system, &c, &Element::identity(&system)));
        assert!(is_sortable(&system, &c, &Element::from_word(&system, &[0, 1])));
        assert!(!is_sortable(&system, &c, &Element::from_word(&system, &[1, 0])));
        let count = order
            .elements()
            .iter()
            .filter(|w| is_sortable(&system, &c, w))
            .count();
        assert_eq!(count, 5);
    }

    #[test]
    fn sortables_are_pi_down_fixed_points() {
        for desc in ["A2", "B2", "A3"] {
            let system = sys(desc);
            let order = GroupOrder::enumerate(&system);
            for word in CoxeterWord::all_distinct(&system) {
                for w in order.elements() {
                    let fixed = cambrian_pi_down(&system, &word, w) == *w;
                    assert_eq!(fixed, is_sortable(&system, &word, w), "{desc}");
                    let up_fixed = cambrian_pi_up(&system, &word, w) == *w;
                    assert_eq!(up_fixed, is_antisortable(&system, &word, w), "{desc}");
                }
            }
        }
    }

    #[test]
    fn cambrian_pairs_validate_across_small_systems() {
        for desc in ["A2", "B2", "I2:5", "A3"] {
            let system = sys(desc);
            let order = GroupOrder::enumerate(&system);
            for word in CoxeterWord::all_distinct(&system) {
                let pair = cambrian_projections(&system, &order, &word);
                assert_eq!(validate_projections(&order, &pair), None, "{desc}");
            }
        }
    }
}

