//! Construction of a finite Coxeter system: the full root system, the
//! simple-reflection action tables, coroots, fundamental weights, the
//! `W`-invariant bilinear form, and the longest element.
//!
//! Roots are indexed `0..2p` with the `p` positive roots first; root
//! `i + p` is the negative of root `i`, and the simple root `α_s` sits at
//! index `s`. All coordinates are in the simple-root basis.

use crate::bitset::GenSet;
use crate::cartan::CoxeterMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::collections::HashMap;

const ROOT_CLOSURE_BOUND: usize = 100_000;

pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    signature: u64,
    n_pos: usize,
    /// Coordinates of roots `0..2p` in the simple-root basis.
    roots: Vec<Vector>,
    /// `simple_action[s][r]` is the index of `s(root_r)`.
    simple_action: Vec<Vec<u32>>,
    /// Coroots `α_s^∨` in the simple-root basis.
    coroots: Vec<Vector>,
    /// Fundamental weights `ω_s` in the simple-root basis.
    weights: Vec<Vector>,
    /// Gram matrix of the invariant form on the simple roots.
    form: Vec<Vec<Scalar>>,
    /// Longest element, as the signed permutation of positive root indices.
    longest: Vec<u32>,
    golden: bool,
}

impl CoxeterSystem {
    pub fn from_descriptor(desc: &str) -> Result<Self> {
        Self::build(CoxeterMatrix::from_descriptor(desc)?)
    }

    pub fn build(matrix: CoxeterMatrix) -> Result<Self> {
        matrix.require_supported()?;
        let n = matrix.rank();

        // Close the simple roots under all simple reflections.
        let mut roots: Vec<Vector> = Vec::new();
        let mut index: HashMap<Vector, usize> = HashMap::new();
        for s in 0..n {
            let mut alpha = vec![Scalar::zero(); n];
            alpha[s] = Scalar::one();
            index.insert(alpha.clone(), s);
            roots.push(alpha);
        }
        let mut head = 0;
        while head < roots.len() {
            let current = roots[head].clone();
            head += 1;
            for s in 0..n {
                let image = reflect(&matrix, s, &current);
                if !index.contains_key(&image) {
                    if roots.len() >= ROOT_CLOSURE_BOUND {
                        return Err(Error::NotFinite(
                            "root closure exceeded the safety bound".into(),
                        ));
                    }
                    index.insert(image.clone(), roots.len());
                    roots.push(image);
                }
            }
        }

        // Reindex: positive roots first (simple roots keep indices 0..n),
        // then pair each positive with its negative at offset p.
        let mut positives: Vec<Vector> = Vec::new();
        for root in &roots {
            match root_sign(root) {
                Some(true) => positives.push(root.clone()),
                Some(false) => {}
                None => unreachable!("root with mixed coordinate signs"),
            }
        }
        let n_pos = positives.len();
        if roots.len() != 2 * n_pos {
            return Err(Error::NotFinite("root system is not symmetric".into()));
        }
        let mut ordered: Vec<Vector> = positives;
        let negatives: Vec<Vector> =
            ordered.iter().map(|r| r.iter().map(|c| -c).collect()).collect();
        ordered.extend(negatives);
        let index: HashMap<Vector, usize> =
            ordered.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let simple_action: Vec<Vec<u32>> = (0..n)
            .map(|s| {
                ordered
                    .iter()
                    .map(|root| index[&reflect(&matrix, s, root)] as u32)
                    .collect()
            })
            .collect();

        // Symmetrizers d_s for the invariant form, propagated over the
        // Coxeter graph (finite-type graphs are forests, so this is
        // consistent).
        let mut sym: Vec<Option<Scalar>> = vec![None; n];
        for start in 0..n {
            if sym[start].is_some() {
                continue;
            }
            sym[start] = Some(Scalar::one());
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if j != i && matrix.get(i, j) >= 3 && sym[j].is_none() {
                        let d_i = sym[i].clone().unwrap();
                        sym[j] = Some(d_i * matrix.cartan_entry(i, j) / matrix.cartan_entry(j, i));
                        stack.push(j);
                    }
                }
            }
        }
        let sym: Vec<Scalar> = sym.into_iter().map(Option::unwrap).collect();
        let form: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| &sym[i] * &matrix.cartan_entry(i, j)).collect())
            .collect();

        // Coroot α_s^∨ = 2 α_s / ⟨α_s, α_s⟩ = α_s / d_s.
        let coroots: Vec<Vector> = (0..n)
            .map(|s| {
                let mut v = vec![Scalar::zero(); n];
                v[s] = Scalar::one() / sym[s].clone();
                v
            })
            .collect();

        // Fundamental weights: columns of the inverse Cartan matrix.
        let cartan: Vec<Vec<Scalar>> =
            (0..n).map(|i| (0..n).map(|j| matrix.cartan_entry(i, j)).collect()).collect();
        let inverse = invert(&cartan).expect("finite-type Cartan matrix is invertible");
        let weights: Vec<Vector> = (0..n).map(|t| (0..n).map(|j| inverse[j][t].clone()).collect()).collect();

        let golden = matrix.needs_golden_field();
        let signature = fnv1a(&matrix);
        let mut system = CoxeterSystem {
            matrix,
            signature,
            n_pos,
            roots: ordered,
            simple_action,
            coroots,
            weights,
            form,
            longest: Vec::new(),
            golden,
        };
        system.longest = system.longest_perm(GenSet::full(n));
        Ok(system)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn signature(&self) -> u64 {
        self.signature
    }

    pub fn num_positive_roots(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        2 * self.n_pos
    }

    pub fn uses_golden_field(&self) -> bool {
        self.golden
    }

    pub fn root(&self, index: usize) -> &Vector {
        &self.roots[index]
    }

    pub fn root_index(&self, coords: &Vector) -> Option<usize> {
        self.roots.iter().position(|r| r == coords)
    }

    pub fn is_positive_root(&self, index: usize) -> bool {
        index < self.n_pos
    }

    pub fn negate_root(&self, index: usize) -> usize {
        if index < self.n_pos {
            index + self.n_pos
        } else {
            index - self.n_pos
        }
    }

    pub fn simple_root_action(&self, s: usize, root: usize) -> usize {
        self.simple_action[s][root] as usize
    }

    pub fn coroot(&self, s: usize) -> &Vector {
        &self.coroots[s]
    }

    pub fn fundamental_weight(&self, s: usize) -> &Vector {
        &self.weights[s]
    }

    pub(crate) fn longest_raw(&self) -> &[u32] {
        &self.longest
    }

    /// `⟨u, v⟩` under the invariant form, both vectors in the α-basis.
    pub fn inner(&self, u: &Vector, v: &Vector) -> Scalar {
        let n = self.rank();
        let mut acc = Scalar::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !v[j].is_zero() {
                    acc += &u[i] * &(&self.form[i][j] * &v[j]);
                }
            }
        }
        acc
    }

    /// `⟨α_s^∨, v⟩`, the coefficient used by the reflection `s`.
    pub fn coroot_pairing(&self, s: usize, v: &Vector) -> Scalar {
        let mut acc = Scalar::zero();
        for j in 0..self.rank() {
            if !v[j].is_zero() {
                acc += &self.matrix.cartan_entry(s, j) * &v[j];
            }
        }
        acc
    }

    /// Applies a signed root permutation to an arbitrary root index.
    pub(crate) fn apply_perm(&self, perm: &[u32], root: usize) -> usize {
        if root < self.n_pos {
            perm[root] as usize
        } else {
            self.negate_root(perm[root - self.n_pos] as usize)
        }
    }

    /// `(u ∘ v)(γ) = u(v(γ))` on signed root permutations.
    pub(crate) fn compose(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        v.iter().map(|&img| self.apply_perm(u, img as usize) as u32).collect()
    }

    pub(crate) fn identity_perm(&self) -> Vec<u32> {
        (0..self.n_pos as u32).collect()
    }

    pub(crate) fn generator_perm(&self, s: usize) -> Vec<u32> {
        self.simple_action[s][..self.n_pos].to_vec()
    }

    /// Signed permutation of the longest element of the parabolic `W_I`,
    /// by greedy ascent inside `W_I`.
    pub(crate) fn longest_perm(&self, i_set: GenSet) -> Vec<u32> {
        let mut perm = self.identity_perm();
        loop {
            // An ascent s of w is one with w(α_s) still positive.
            match i_set.iter().find(|&s| (perm[s] as usize) < self.n_pos) {
                Some(s) => perm = self.compose(&perm, &self.generator_perm(s)),
                None => return perm,
            }
        }
    }

    /// Coordinates of the image of a vector under the element with the
    /// given reduced word (letters applied right to left).
    pub fn apply_word_to_vector(&self, word: &[usize], v: &Vector) -> Vector {
        let mut out = v.clone();
        for &s in word.iter().rev() {
            out = reflect(&self.matrix, s, &out);
        }
        out
    }
}

/// Image of `v` under the simple reflection `s`, in the α-basis.
fn reflect(matrix: &CoxeterMatrix, s: usize, v: &Vector) -> Vector {
    let n = matrix.rank();
    let mut pairing = Scalar::zero();
    for j in 0..n {
        if !v[j].is_zero() {
            pairing += &matrix.cartan_entry(s, j) * &v[j];
        }
    }
    let mut out = v.clone();
    out[s] = &v[s] - &pairing;
    out
}

/// `Some(true)` if all coordinates are ≥ 0, `Some(false)` if ≤ 0.
fn root_sign(v: &Vector) -> Option<bool> {
    let any_pos = v.iter().any(|c| c.is_positive());
    let any_neg = v.iter().any(|c| c.is_negative());
    match (any_pos, any_neg) {
        (true, false) => Some(true),
        (false, true) => Some(false),
        _ => None,
    }
}

/// Gaussian elimination over the exact field.
fn invert(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &scale;
            inv[col][j] = &inv[col][j] * &scale;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    let av = &a[col][j] * &factor;
                    a[r][j] = &a[r][j] - &av;
                    let iv = &inv[col][j] * &factor;
                    inv[r][j] = &inv[r][j] - &iv;
                }
            }
        }
    }
    Some(inv)
}

fn fnv1a(matrix: &CoxeterMatrix) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    let mut eat = |v: u64| {
        for byte in v.to_le_bytes() {
            hash ^= byte as u64;
            hash = hash.wrapping_mul(0x100000001b3);
        }
    };
    eat(matrix.rank() as u64);
    for i in 0..matrix.rank() {
        for j in 0..matrix.rank() {
            eat(matrix.get(i, j) as u64);
        }
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(desc: &str) -> CoxeterSystem {
        CoxeterSystem::from_descriptor(desc).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (desc, expected) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("D4", 12),
            ("F4", 24),
            ("G2", 6),
            ("I2:5", 5),
            ("H3", 15),
            ("H4", 60),
        ] {
            assert_eq!(sys(desc).num_positive_roots(), expected, "{desc}");
        }
    }

    #[test]
    fn unsupported_dihedral_is_rejected() {
        assert!(matches!(
            CoxeterSystem::from_descriptor("I2:7"),
            Err(Error::UnsupportedField(_))
        ));
    }

    #[test]
    fn roots_are_paired_and_simple_first() {
        let s = sys("B3");
        let p = s.num_positive_roots();
        for i in 0..s.num_roots() {
            let neg = s.negate_root(i);
            let negated: Vector = s.root(i).iter().map(|c| -c).collect();
            assert_eq!(s.root(neg), &negated);
            assert!(s.is_positive_root(i) != s.is_positive_root(neg));
        }
        for g in 0..3 {
            let alpha = s.root(g);
            assert!(alpha.iter().enumerate().all(|(j, c)| if j == g {
                *c == Scalar::one()
            } else {
                c.is_zero()
            }));
        }
        assert_eq!(s.num_roots(), 2 * p);
    }

    #[test]
    fn simple_action_is_an_involution_fixing_other_positives() {
        for desc in ["A3", "B3", "H3"] {
            let system = sys(desc);
            for s in 0..system.rank() {
                for r in 0..system.num_roots() {
                    let once = system.simple_root_action(s, r);
                    assert_eq!(system.simple_root_action(s, once), r);
                }
                // s sends α_s to −α_s and permutes the other positives.
                assert_eq!(system.simple_root_action(s, s), system.negate_root(s));
                for r in 0..system.num_positive_roots() {
                    if r != s {
                        assert!(system.is_positive_root(system.simple_root_action(s, r)));
                    }
                }
            }
        }
    }

    #[test]
    fn coroot_weight_duality() {
        for desc in ["A2", "B3", "F4", "G2", "H3"] {
            let system = sys(desc);
            for s in 0..system.rank() {
                for t in 0..system.rank() {
                    let pairing = system.coroot_pairing(s, system.fundamental_weight(t));
                    let expected = if s == t { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(pairing, expected, "{desc} ⟨α_{s}^∨, ω_{t}⟩");
                    // The stored coroot vector realizes the same pairing
                    // through the invariant form.
                    let via_form = system.inner(system.coroot(s), system.fundamental_weight(t));
                    assert_eq!(via_form, expected, "{desc} form pairing {s},{t}");
                }
            }
        }
    }

    #[test]
    fn form_is_symmetric_and_positive_on_roots() {
        for desc in ["A3", "B3", "G2", "H3"] {
            let system = sys(desc);
            let n = system.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        system.inner(system.root(i), system.root(j)),
                        system.inner(system.root(j), system.root(i))
                    );
                }
            }
            for r in 0..system.num_roots() {
                assert!(system.inner(system.root(r), system.root(r)).is_positive());
            }
        }
    }

    #[test]
    fn longest_element_negates_all_positive_roots() {
        for desc in ["A2", "B2", "A3", "B3", "I2:5", "H3"] {
            let system = sys(desc);
            let w0 = system.longest_raw();
            let p = system.num_positive_roots();
            assert!(
                (0..p).all(|i| w0[i] as usize >= p),
                "{desc}: w∘ must send Φ+ to Φ−"
            );
        }
    }
}
