//! Exact polyhedral-cone queries over `ℚ(√5)`.
//!
//! Everything here reduces to the feasibility of `{x ≥ 0 : Ax = b}` decided
//! by a phase-one simplex with Bland's rule, which terminates and is exact
//! over any ordered field. A Fourier–Motzkin elimination on the Farkas dual
//! is kept as an independent route for cross-checks.

use crate::bitset::RootSet;
use crate::scalar::Scalar;
use crate::system::{CoxeterSystem, Vector};

/// Feasibility of `{x ≥ 0 : Ax = b}`; on success returns one solution.
///
/// `a` has one row per equation; all rows must have `columns` entries.
pub fn solve_nonnegative(a: &[Vec<Scalar>], b: &[Scalar], columns: usize) -> Option<Vec<Scalar>> {
    let m = a.len();
    if columns == 0 {
        return b.iter().all(Scalar::is_zero).then(Vec::new);
    }

    // Tableau with artificial basis: rows are the equations (flipped so the
    // right-hand side is nonnegative), columns are the original variables
    // followed by the artificials.
    let total = columns + m;
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(m);
    let mut rhs: Vec<Scalar> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Scalar> = Vec::with_capacity(total);
        for j in 0..columns {
            row.push(if flip { -&a[i][j] } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Scalar::one() } else { Scalar::zero() });
        }
        rows.push(row);
        rhs.push(if flip { -&b[i] } else { b[i].clone() });
    }
    let mut basis: Vec<usize> = (columns..total).collect();

    // Phase-one objective `w = Σ artificials`, written in the nonbasic
    // variables: initially obj[j] = Σ_i rows[i][j] on the original columns.
    let mut obj: Vec<Scalar> = (0..total)
        .map(|j| {
            if j >= columns {
                Scalar::zero()
            } else {
                rows.iter().fold(Scalar::zero(), |acc, row| acc + row[j].clone())
            }
        })
        .collect();
    let mut obj_value: Scalar = rhs.iter().fold(Scalar::zero(), |acc, v| acc + v.clone());

    loop {
        // Bland: smallest column index that still decreases w.
        let entering = match (0..total).find(|&j| obj[j].is_positive()) {
            Some(j) => j,
            None => break,
        };
        // Ratio test; ties resolved by the smallest basic variable index.
        let mut leaving: Option<(usize, Scalar)> = None;
        for i in 0..m {
            if rows[i][entering].is_positive() {
                let ratio = &rhs[i] / &rows[i][entering];
                let better = match &leaving {
                    None => true,
                    Some((best_i, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && basis[i] < basis[*best_i])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let (pivot_row, _) = leaving.expect("phase-one objective is bounded below by zero");

        let scale = rows[pivot_row][entering].recip();
        for j in 0..total {
            rows[pivot_row][j] = &rows[pivot_row][j] * &scale;
        }
        rhs[pivot_row] = &rhs[pivot_row] * &scale;
        for i in 0..m {
            if i != pivot_row && !rows[i][entering].is_zero() {
                let factor = rows[i][entering].clone();
                for j in 0..total {
                    let delta = &rows[pivot_row][j] * &factor;
                    rows[i][j] = &rows[i][j] - &delta;
                }
                let delta = &rhs[pivot_row] * &factor;
                rhs[i] = &rhs[i] - &delta;
            }
        }
        if !obj[entering].is_zero() {
            let factor = obj[entering].clone();
            for j in 0..total {
                let delta = &rows[pivot_row][j] * &factor;
                obj[j] = &obj[j] - &delta;
            }
            let delta = &rhs[pivot_row] * &factor;
            obj_value = &obj_value - &delta;
        }
        basis[pivot_row] = entering;
    }

    if !obj_value.is_zero() {
        return None;
    }
    let mut solution = vec![Scalar::zero(); columns];
    for i in 0..m {
        if basis[i] < columns {
            solution[basis[i]] = rhs[i].clone();
        }
    }
    Some(solution)
}

/// `target ∈ cone(generators)`?
pub fn in_cone(generators: &[&Vector], target: &Vector) -> bool {
    let n = target.len();
    let a: Vec<Vec<Scalar>> =
        (0..n).map(|row| generators.iter().map(|g| g[row].clone()).collect()).collect();
    solve_nonnegative(&a, target, generators.len()).is_some()
}

/// Same question decided on the Farkas dual by Fourier–Motzkin: the target
/// lies in the cone iff no `ψ` satisfies `ψ·g ≥ 0` for all generators and
/// `ψ·target ≤ −1`. Exponential in dimension, fine for the small ranks the
/// cross-checks use.
pub fn in_cone_fourier_motzkin(generators: &[&Vector], target: &Vector) -> bool {
    let n = target.len();
    // Constraints `coef·ψ ≤ rhs`.
    let mut constraints: Vec<(Vec<Scalar>, Scalar)> = generators
        .iter()
        .map(|g| (g.iter().map(|c| -c).collect(), Scalar::zero()))
        .collect();
    constraints.push((target.clone(), -Scalar::one()));

    for var in 0..n {
        let mut kept: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
        let mut upper: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
        let mut lower: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
        for (coef, rhs) in constraints {
            match coef[var].sign() {
                std::cmp::Ordering::Equal => kept.push((coef, rhs)),
                std::cmp::Ordering::Greater => upper.push((coef, rhs)),
                std::cmp::Ordering::Less => lower.push((coef, rhs)),
            }
        }
        for (uc, ur) in &upper {
            for (lc, lr) in &lower {
                // Scale so the coefficients on `var` cancel.
                let pos = uc[var].clone();
                let neg = -lc[var].clone();
                let coef: Vec<Scalar> =
                    (0..n).map(|j| &uc[j] * &neg + &lc[j] * &pos).collect();
                let rhs = ur * &neg + lr * &pos;
                kept.push(normalize_constraint(coef, rhs));
            }
        }
        kept.sort();
        kept.dedup();
        constraints = kept;
    }

    // All variables eliminated: the target is in the cone iff the residual
    // system `0 ≤ rhs` is violated somewhere.
    constraints.iter().any(|(_, rhs)| rhs.is_negative())
}

fn normalize_constraint(coef: Vec<Scalar>, rhs: Scalar) -> (Vec<Scalar>, Scalar) {
    let lead = coef.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(|| rhs.abs());
    if lead.is_zero() {
        return (coef, rhs);
    }
    let scale = lead.abs().recip();
    (coef.iter().map(|c| c * &scale).collect(), &rhs * &scale)
}

fn restrict_half(system: &CoxeterSystem, x: &RootSet, positive: bool) -> Vec<usize> {
    let p = system.num_positive_roots();
    x.iter().filter(|&i| (i < p) == positive).collect()
}

fn half_closure(system: &CoxeterSystem, members: &[usize], positive: bool) -> RootSet {
    let p = system.num_positive_roots();
    let generators: Vec<&Vector> = members.iter().map(|&i| system.root(i)).collect();
    let range = if positive { 0..p } else { p..2 * p };
    let mut out = RootSet::empty(2 * p);
    for gamma in range {
        if members.contains(&gamma) || in_cone(&generators, system.root(gamma)) {
            out.insert(gamma);
        }
    }
    out
}

/// `⊕↑X = Φ+ ∩ cone(X ∩ Φ+)`. Restricting to the positive half first is
/// the reading under which `⊕↑(X ∩ Φ+) = ⊕↑X`, which the meet and join
/// root-set formulas rely on for mixed-sign arguments.
pub fn plus_up(system: &CoxeterSystem, x: &RootSet) -> RootSet {
    half_closure(system, &restrict_half(system, x, true), true)
}

/// `⊖↑X = Φ− ∩ cone(X ∩ Φ−)`.
pub fn minus_up(system: &CoxeterSystem, x: &RootSet) -> RootSet {
    half_closure(system, &restrict_half(system, x, false), false)
}

/// `⊕↓X = Φ+ ∖ ⊕↑(Φ+ ∖ X)`.
pub fn plus_down(system: &CoxeterSystem, x: &RootSet) -> RootSet {
    let p = system.num_positive_roots();
    let complement: Vec<usize> = (0..p).filter(|&i| !x.contains(i)).collect();
    let closed = half_closure(system, &complement, true);
    let mut out = RootSet::empty(2 * p);
    for i in 0..p {
        if !closed.contains(i) {
            out.insert(i);
        }
    }
    out
}

/// `⊖↓X = Φ− ∖ ⊖↑(Φ− ∖ X)`.
pub fn minus_down(system: &CoxeterSystem, x: &RootSet) -> RootSet {
    let p = system.num_positive_roots();
    let complement: Vec<usize> = (p..2 * p).filter(|&i| !x.contains(i)).collect();
    let closed = half_closure(system, &complement, false);
    let mut out = RootSet::empty(2 * p);
    for i in p..2 * p {
        if !closed.contains(i) {
            out.insert(i);
        }
    }
    out
}

/// Linear functional `ψ` (coefficients against the α-basis) with
/// `R = {α ∈ Φ : ψ(α) ≥ 0}`, or `None` when no such functional exists.
///
/// Strict inequalities carry margin 1; by homogeneity this loses nothing.
pub fn halfspace_witness(system: &CoxeterSystem, r: &RootSet) -> Option<Vec<Scalar>> {
    let p = system.num_positive_roots();
    for i in 0..p {
        if !r.contains(i) && !r.contains(i + p) {
            return None;
        }
    }
    let n = system.rank();
    let mut pending: Vec<(&Vector, bool)> = Vec::new();
    for alpha in 0..2 * p {
        let neg = system.negate_root(alpha);
        if r.contains(alpha) && r.contains(neg) {
            if alpha < neg {
                pending.push((system.root(alpha), false)); // ψ·α = 0
            }
        } else if r.contains(alpha) {
            pending.push((system.root(alpha), true)); // ψ·α ≥ 1
        }
    }
    // Variables: ψ = pos − neg (2n columns), then one slack per strict row.
    let strict_rows = pending.iter().filter(|(_, strict)| *strict).count();
    let columns = 2 * n + strict_rows;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut slack_seen = 0usize;
    for (root, strict) in pending {
        let mut row = vec![Scalar::zero(); columns];
        for j in 0..n {
            row[j] = root[j].clone();
            row[n + j] = -&root[j];
        }
        if strict {
            // ψ·α − slack = 1 with slack ≥ 0 realizes ψ·α ≥ 1.
            row[2 * n + slack_seen] = -Scalar::one();
            slack_seen += 1;
            rhs.push(Scalar::one());
        } else {
            rhs.push(Scalar::zero());
        }
        rows.push(row);
    }
    let solution = solve_nonnegative(&rows, &rhs, columns)?;
    Some((0..n).map(|j| &solution[j] - &solution[n + j]).collect())
}

/// Evaluates a functional from `halfspace_witness` on a vector.
pub fn eval_functional(psi: &[Scalar], v: &Vector) -> Scalar {
    psi.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

/// Do the relative interiors of `cone(g)` and `cone(h)` intersect?
///
/// A point lies in the relative interior exactly when it is a strictly
/// positive combination of all listed generators, so this is the
/// feasibility of `Gλ = Hμ` with `λ ≥ 1`, `μ ≥ 1` (homogeneity makes the
/// margin free).
pub fn relative_interiors_intersect(g: &[&Vector], h: &[&Vector], dim: usize) -> bool {
    let columns = g.len() + h.len();
    let mut a: Vec<Vec<Scalar>> = Vec::with_capacity(dim);
    let mut b: Vec<Scalar> = Vec::with_capacity(dim);
    for row in 0..dim {
        let mut coefs: Vec<Scalar> = Vec::with_capacity(columns);
        let mut constant = Scalar::zero();
        for v in g {
            coefs.push(v[row].clone());
            constant -= v[row].clone();
        }
        for v in h {
            coefs.push(-&v[row]);
            constant += v[row].clone();
        }
        a.push(coefs);
        b.push(constant);
    }
    solve_nonnegative(&a, &b, columns).is_some()
}

/// Dimension of the linear span of the vectors.
pub fn span_rank(vectors: &[&Vector], dim: usize) -> usize {
    let mut rows: Vec<Vector> = vectors.iter().map(|v| (*v).clone()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = rows[rank][col].recip();
        for j in 0..dim {
            rows[rank][j] = &rows[rank][j] * &scale;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in 0..dim {
                    let delta = &rows[rank][j] * &factor;
                    rows[r][j] = &rows[r][j] - &delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;
    use crate::weak::{weak_join, weak_meet};
    use proptest::prelude::*;

    fn sys(desc: &str) -> CoxeterSystem {
        CoxeterSystem::from_descriptor(desc).unwrap()
    }

    fn set(system: &CoxeterSystem, indices: &[usize]) -> RootSet {
        let mut s = RootSet::empty(system.num_roots());
        for &i in indices {
            s.insert(i);
        }
        s
    }

    #[test]
    fn plus_up_examples_in_a2() {
        let a2 = sys("A2");
        let sum = a2
            .root_index(&vec![Scalar::one(), Scalar::one()])
            .expect("α_s + α_t is a root of A2");
        assert!(plus_up(&a2, &set(&a2, &[])).is_empty());
        let closed = plus_up(&a2, &set(&a2, &[0, 1]));
        assert_eq!(closed.iter().collect::<Vec<_>>(), vec![0, 1, sum]);
        let all_pos = set(&a2, &[0, 1, sum]);
        assert_eq!(plus_up(&a2, &all_pos), all_pos);
    }

    #[test]
    fn mixed_sign_arguments_only_see_their_half() {
        let a2 = sys("A2");
        let p = a2.num_positive_roots();
        let sum = a2.root_index(&vec![Scalar::one(), Scalar::one()]).unwrap();
        // −α_s together with α_s + α_t would span α_t as a cone point, but
        // ⊕↑ must ignore the negative generator.
        let mixed = set(&a2, &[p, sum]);
        assert_eq!(plus_up(&a2, &mixed).iter().collect::<Vec<_>>(), vec![sum]);
    }

    #[test]
    fn down_closures_are_dual() {
        let a2 = sys("A2");
        let sum = a2.root_index(&vec![Scalar::one(), Scalar::one()]).unwrap();
        let x = set(&a2, &[0, sum]);
        assert_eq!(plus_down(&a2, &x), x);
        // {α_s + α_t} alone is not down-closed: the complement's closure
        // swallows it.
        let only_sum = set(&a2, &[sum]);
        assert!(plus_down(&a2, &only_sum).is_empty());
    }

    #[test]
    fn inversion_sets_of_meet_and_join_satisfy_the_closure_formulas() {
        // N(u ∧ v) = ⊕↓(N(u) ∩ N(v)) and N(u ∨ v) = ⊕↑(N(u) ∪ N(v)).
        for desc in ["A2", "B2"] {
            let system = sys(desc);
            let order = crate::weak::GroupOrder::enumerate(&system);
            for a in 0..order.len() {
                for b in 0..order.len() {
                    let u = order.element(a);
                    let v = order.element(b);
                    let meet = weak_meet(&system, u, v).inversion_set(&system);
                    let join = weak_join(&system, u, v).inversion_set(&system);
                    let inter = order.inversion_set(a).intersection(order.inversion_set(b));
                    let union = order.inversion_set(a).union(order.inversion_set(b));
                    assert_eq!(meet, plus_down(&system, &inter), "{desc} meet {a},{b}");
                    assert_eq!(join, plus_up(&system, &union), "{desc} join {a},{b}");
                }
            }
        }
    }

    #[test]
    fn halfspace_witness_for_extreme_sets() {
        let a2 = sys("A2");
        let p = a2.num_positive_roots();
        // Φ−: the root inversion set of the identity coset.
        let neg: RootSet = set(&a2, &(p..2 * p).collect::<Vec<_>>());
        let psi = halfspace_witness(&a2, &neg).expect("Φ− is a root inversion set");
        for i in 0..2 * p {
            let value = eval_functional(&psi, a2.root(i));
            assert_eq!(neg.contains(i), !value.is_negative());
        }
        // Φ: realized by ψ = 0.
        let all = RootSet::full(2 * p);
        let psi = halfspace_witness(&a2, &all).unwrap();
        assert!(psi.iter().all(Scalar::is_zero));
        // Pairing violation: neither α_s + α_t nor its negative present.
        let bad = set(&a2, &[0, 1 + p]);
        assert_eq!(halfspace_witness(&a2, &bad), None);
    }

    #[test]
    fn witness_exists_for_all_element_root_sets_of_a2() {
        // Every w gives R(w) = N(w) ∪ −(Φ+ ∖ N(w)), which must be a
        // halfspace set.
        let a2 = sys("A2");
        let p = a2.num_positive_roots();
        let order = crate::weak::GroupOrder::enumerate(&a2);
        for i in 0..order.len() {
            let inv = order.inversion_set(i);
            let mut r = RootSet::empty(2 * p);
            for j in 0..p {
                if inv.contains(j) {
                    r.insert(j);
                } else {
                    r.insert(j + p);
                }
            }
            let psi = halfspace_witness(&a2, &r).unwrap_or_else(|| panic!("element {i}"));
            for alpha in 0..2 * p {
                let value = eval_functional(&psi, a2.root(alpha));
                assert_eq!(r.contains(alpha), !value.is_negative());
            }
        }
    }

    #[test]
    fn relative_interior_queries() {
        let a2 = sys("A2");
        let e = Element::identity(&a2);
        let s = Element::generator(&a2, 0);
        let chamber = |w: &Element| -> Vec<Vector> {
            (0..2)
                .map(|g| a2.apply_word_to_vector(&w.reduced_word(&a2), a2.fundamental_weight(g)))
                .collect()
        };
        let ce = chamber(&e);
        let cs = chamber(&s);
        fn refs(v: &[Vector]) -> Vec<&Vector> {
            v.iter().collect()
        }
        // Adjacent chambers share a facet but not relative interior.
        assert!(!relative_interiors_intersect(&refs(&ce), &refs(&cs), 2));
        assert!(relative_interiors_intersect(&refs(&ce), &refs(&ce), 2));
        // ω_0 + ω_1 is interior to the fundamental chamber.
        let inner = vec![vec![Scalar::one(), Scalar::one()]];
        assert!(relative_interiors_intersect(&refs(&ce), &refs(&inner), 2));
        // But a boundary ray such as 3ω_0 = (2,1) is not.
        let boundary = vec![vec![Scalar::from_int(2), Scalar::from_int(1)]];
        assert!(!relative_interiors_intersect(&refs(&ce), &refs(&boundary), 2));
        // The zero cone only meets itself.
        assert!(relative_interiors_intersect(&[], &[], 2));
        assert!(!relative_interiors_intersect(&[], &refs(&ce), 2));
    }

    #[test]
    fn span_ranks() {
        let a3 = sys("A3");
        let all: Vec<&Vector> = (0..3).map(|i| a3.root(i)).collect();
        assert_eq!(span_rank(&all, 3), 3);
        assert_eq!(span_rank(&all[..2], 3), 2);
        assert_eq!(span_rank(&[], 3), 0);
        let v = vec![Scalar::one(), Scalar::one(), Scalar::zero()];
        let w = vec![Scalar::from_int(2), Scalar::from_int(2), Scalar::zero()];
        assert_eq!(span_rank(&[&v, &w], 3), 1);
    }

    fn arb_vec() -> impl Strategy<Value = Vector> {
        proptest::collection::vec(-4i64..5, 3)
            .prop_map(|cs| cs.into_iter().map(Scalar::from_int).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn simplex_and_fourier_motzkin_agree(
            gens in proptest::collection::vec(arb_vec(), 0..5),
            target in arb_vec(),
        ) {
            let refs: Vec<&Vector> = gens.iter().collect();
            prop_assert_eq!(in_cone(&refs, &target), in_cone_fourier_motzkin(&refs, &target));
        }

        #[test]
        fn cone_membership_is_sound_for_nonnegative_combinations(
            gens in proptest::collection::vec(arb_vec(), 1..4),
            coefs in proptest::collection::vec(0i64..4, 3),
        ) {
            let refs: Vec<&Vector> = gens.iter().collect();
            let mut target = vec![Scalar::zero(); 3];
            for (g, &c) in refs.iter().zip(&coefs) {
                for (slot, coord) in target.iter_mut().zip(g.iter()) {
                    *slot += coord * &Scalar::from_int(c);
                }
            }
            prop_assert!(in_cone(&refs, &target));
        }
    }
}
