//! Coxeter matrices, type descriptors, and the finite-type classification.
//!
//! Finiteness is decided by matching each connected component of the Coxeter
//! graph against the classified list (A, B/C, D, E6/7/8, F4, G2/I2(m), H3,
//! H4), never by speculative root closure.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

/// Symmetric matrix with `m[i][i] = 1` and `m[i][j] ≥ 2` off the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<u32>,
}

/// One irreducible factor of a finite Coxeter system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral of order `2m`; covers G2 = I2(6).
    I2(u32),
}

impl CoxeterMatrix {
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("rank must be positive".into()));
        }
        if n > 32 {
            return Err(Error::InvalidMatrix("rank above 32 is not supported".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for rank {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        let m = CoxeterMatrix { n, entries };
        for i in 0..n {
            if m.get(i, i) != 1 {
                return Err(Error::InvalidMatrix(format!("diagonal entry m[{i}][{i}] must be 1")));
            }
            for j in 0..n {
                if i != j {
                    if m.get(i, j) < 2 {
                        return Err(Error::InvalidMatrix(format!(
                            "off-diagonal entry m[{i}][{j}] must be at least 2"
                        )));
                    }
                    if m.get(i, j) != m.get(j, i) {
                        return Err(Error::InvalidMatrix(format!(
                            "matrix not symmetric at ({i},{j})"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Parses a descriptor such as `A3`, `B3`, `C2`, `D4`, `E6`, `F4`, `G2`,
    /// `H3`, `H4`, or `I2:m`.
    pub fn from_descriptor(desc: &str) -> Result<Self> {
        let desc = desc.trim();
        let fail = || Error::Parse(format!("unrecognized type descriptor `{desc}`"));
        if let Some(m_text) = desc.strip_prefix("I2:").or_else(|| desc.strip_prefix("i2:")) {
            let m: u32 = m_text.parse().map_err(|_| fail())?;
            if m < 2 {
                return Err(Error::Parse(format!("I2:{m} needs m ≥ 2")));
            }
            return Self::dihedral(m);
        }
        let (letter, rank_text) = desc.split_at(1);
        let rank: usize = rank_text.parse().map_err(|_| fail())?;
        match (letter.to_ascii_uppercase().as_str(), rank) {
            ("A", n) if n >= 1 => Ok(Self::path(n, &[])),
            ("B", n) | ("C", n) if n >= 2 => Ok(Self::path(n, &[(0, 4)])),
            ("D", n) if n >= 4 => Ok(Self::fork(n)),
            ("E", n) if (6..=8).contains(&n) => Ok(Self::e_type(n)),
            ("F", 4) => Ok(Self::path(4, &[(1, 4)])),
            ("G", 2) => Self::dihedral(6),
            ("H", n) if n == 3 || n == 4 => Ok(Self::path(n, &[(0, 5)])),
            _ => Err(fail()),
        }
    }

    /// Path diagram on `n` vertices, all bonds 3 except the listed
    /// `(edge index, label)` overrides.
    fn path(n: usize, marks: &[(usize, u32)]) -> Self {
        let mut m = Self::all_twos(n);
        for i in 0..n.saturating_sub(1) {
            let label = marks.iter().find(|&&(e, _)| e == i).map_or(3, |&(_, l)| l);
            m.set(i, i + 1, label);
        }
        m
    }

    /// D_n: path on `0..n-1` with the extra vertex `n-1` attached to vertex 1.
    fn fork(n: usize) -> Self {
        let mut m = Self::all_twos(n);
        for i in 0..n - 2 {
            m.set(i, i + 1, 3);
        }
        m.set(1, n - 1, 3);
        m
    }

    /// E_n: path on `0..n-1` with the extra vertex `n-1` attached to vertex 2.
    fn e_type(n: usize) -> Self {
        let mut m = Self::all_twos(n);
        for i in 0..n - 2 {
            m.set(i, i + 1, 3);
        }
        m.set(2, n - 1, 3);
        m
    }

    fn dihedral(m: u32) -> Result<Self> {
        let mut mat = Self::all_twos(2);
        mat.set(0, 1, m);
        Ok(mat)
    }

    fn all_twos(n: usize) -> Self {
        let mut entries = vec![2; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        CoxeterMatrix { n, entries }
    }

    /// Plain-text format: first line `n`, then `n` space-separated rows.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("first line must be the rank".into()))?;
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let line = lines.next().ok_or_else(|| Error::Parse("missing matrix row".into()))?;
            for tok in line.split_whitespace() {
                entries.push(
                    tok.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad matrix entry `{tok}`")))?,
                );
            }
        }
        CoxeterMatrix::new(n, entries)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = v;
    }

    /// Classifies the underlying graph, or reports why the group is infinite.
    /// Factors are returned with the vertex lists that realize them.
    pub fn classify(&self) -> Result<Vec<(FiniteType, Vec<usize>)>> {
        let mut seen = vec![false; self.n];
        let mut factors = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < component.len() {
                let v = component[head];
                head += 1;
                for u in 0..self.n {
                    if u != v && self.get(v, u) >= 3 && !seen[u] {
                        seen[u] = true;
                        component.push(u);
                    }
                }
            }
            component.sort_unstable();
            let ty = self.classify_component(&component)?;
            factors.push((ty, component));
        }
        Ok(factors)
    }

    fn classify_component(&self, verts: &[usize]) -> Result<FiniteType> {
        let k = verts.len();
        let edges: Vec<(usize, usize, u32)> = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .filter_map(|(a, b)| {
                let m = self.get(verts[a], verts[b]);
                (m >= 3).then_some((a, b, m))
            })
            .collect();

        if k == 1 {
            return Ok(FiniteType::A(1));
        }
        if k == 2 {
            let m = edges[0].2;
            return Ok(FiniteType::I2(m));
        }
        // Connected on k ≥ 3 vertices: a finite type must be a tree.
        if edges.len() != k - 1 {
            return Err(Error::NotFinite("Coxeter graph component contains a cycle".into()));
        }
        let mut degree = vec![0usize; k];
        for &(a, b, _) in &edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        let specials: Vec<&(usize, usize, u32)> = edges.iter().filter(|&&(_, _, m)| m >= 4).collect();
        if specials.len() > 1 {
            return Err(Error::NotFinite("more than one bond with label ≥ 4".into()));
        }
        let branch_vertices: Vec<usize> = (0..k).filter(|&v| degree[v] >= 3).collect();

        if let Some(&&(a, b, m)) = specials.first() {
            if !branch_vertices.is_empty() {
                return Err(Error::NotFinite("branch vertex together with a bond ≥ 4".into()));
            }
            // A path with one special bond.
            let end_a = degree[a] == 1;
            let end_b = degree[b] == 1;
            match m {
                4 if end_a || end_b => Ok(FiniteType::B(k)),
                4 if k == 4 => Ok(FiniteType::F4),
                4 => Err(Error::NotFinite("interior bond 4 on a path of length ≠ 4".into())),
                5 if (end_a || end_b) && (k == 3 || k == 4) => Ok(FiniteType::H(k)),
                5 => Err(Error::NotFinite("bond 5 only yields finite types H3 and H4".into())),
                _ => Err(Error::NotFinite(format!("bond {m} on a component of rank ≥ 3"))),
            }
        } else {
            // Simply laced: path or one of D/E.
            match branch_vertices.len() {
                0 => Ok(FiniteType::A(k)),
                1 => {
                    let center = branch_vertices[0];
                    if degree[center] != 3 {
                        return Err(Error::NotFinite("vertex of degree ≥ 4".into()));
                    }
                    let mut arms = arm_lengths(k, &edges, center);
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => Ok(FiniteType::D(k)),
                        [1, 2, 2] => Ok(FiniteType::E(6)),
                        [1, 2, 3] => Ok(FiniteType::E(7)),
                        [1, 2, 4] => Ok(FiniteType::E(8)),
                        _ => Err(Error::NotFinite("branched simply laced graph outside D/E".into())),
                    }
                }
                _ => Err(Error::NotFinite("more than one branch vertex".into())),
            }
        }
    }

    /// Errors unless every irreducible factor is finite and its Cartan
    /// entries live in `ℚ(√5)`.
    pub fn require_supported(&self) -> Result<Vec<(FiniteType, Vec<usize>)>> {
        let factors = self.classify()?;
        for (ty, _) in &factors {
            if let FiniteType::I2(m) = ty {
                if ![2, 3, 4, 5, 6].contains(m) {
                    return Err(Error::UnsupportedField(format!(
                        "I2({m}) needs cos(π/{m}) outside ℚ and ℚ(√5)"
                    )));
                }
            }
        }
        Ok(factors)
    }

    /// Whether any bond is 5, i.e. whether golden-field coordinates appear.
    pub fn needs_golden_field(&self) -> bool {
        (0..self.n).any(|i| (i + 1..self.n).any(|j| self.get(i, j) == 5))
    }

    /// Cartan entry `c(s,t) = ⟨α_s^∨, α_t⟩`.
    ///
    /// Bonds 4 and 6 use the asymmetric crystallographic normalization
    /// `(-1, -2)` resp. `(-1, -3)` with the `-1` on the smaller index, so
    /// that every entry stays in the field. Bond 5 is symmetric with entry
    /// `-φ`.
    pub fn cartan_entry(&self, s: usize, t: usize) -> Scalar {
        if s == t {
            return Scalar::from_int(2);
        }
        match self.get(s, t) {
            2 => Scalar::zero(),
            3 => Scalar::from_int(-1),
            4 => {
                if s < t {
                    Scalar::from_int(-1)
                } else {
                    Scalar::from_int(-2)
                }
            }
            5 => -Scalar::golden_ratio(),
            6 => {
                if s < t {
                    Scalar::from_int(-1)
                } else {
                    Scalar::from_int(-3)
                }
            }
            m => unreachable!("unsupported bond {m} must be rejected before construction"),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

fn arm_lengths(k: usize, edges: &[(usize, usize, u32)], center: usize) -> Vec<usize> {
    let mut adjacency = vec![Vec::new(); k];
    for &(a, b, _) in edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    adjacency[center]
        .iter()
        .map(|&first| {
            let mut len = 1;
            let mut prev = center;
            let mut cur = first;
            while let Some(&next) = adjacency[cur].iter().find(|&&v| v != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify_one(desc: &str) -> FiniteType {
        let m = CoxeterMatrix::from_descriptor(desc).unwrap();
        let factors = m.classify().unwrap();
        assert_eq!(factors.len(), 1, "{desc} should be irreducible");
        factors[0].0.clone()
    }

    #[test]
    fn descriptors_classify_back_to_themselves() {
        assert_eq!(classify_one("A1"), FiniteType::A(1));
        assert_eq!(classify_one("A3"), FiniteType::A(3));
        assert_eq!(classify_one("B2"), FiniteType::I2(4));
        assert_eq!(classify_one("B3"), FiniteType::B(3));
        assert_eq!(classify_one("C4"), FiniteType::B(4));
        assert_eq!(classify_one("D4"), FiniteType::D(4));
        assert_eq!(classify_one("D5"), FiniteType::D(5));
        assert_eq!(classify_one("E6"), FiniteType::E(6));
        assert_eq!(classify_one("E7"), FiniteType::E(7));
        assert_eq!(classify_one("E8"), FiniteType::E(8));
        assert_eq!(classify_one("F4"), FiniteType::F4);
        assert_eq!(classify_one("G2"), FiniteType::I2(6));
        assert_eq!(classify_one("H3"), FiniteType::H(3));
        assert_eq!(classify_one("H4"), FiniteType::H(4));
        assert_eq!(classify_one("I2:7"), FiniteType::I2(7));
    }

    #[test]
    fn reducible_types_split_into_factors() {
        // I2(2) is A1 × A1.
        let m = CoxeterMatrix::from_descriptor("I2:2").unwrap();
        let factors = m.classify().unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(t, _)| *t == FiniteType::A(1)));
    }

    #[test]
    fn affine_and_indefinite_types_are_rejected() {
        // Affine Ã2: a 3-cycle of bonds 3.
        let a2_affine = CoxeterMatrix::new(3, vec![1, 3, 3, 3, 1, 3, 3, 3, 1]).unwrap();
        assert!(matches!(a2_affine.classify(), Err(Error::NotFinite(_))));
        // Affine C̃2: path with two bonds 4.
        let c2_affine = CoxeterMatrix::new(3, vec![1, 4, 2, 4, 1, 4, 2, 4, 1]).unwrap();
        assert!(matches!(c2_affine.classify(), Err(Error::NotFinite(_))));
        // Affine B̃3-like: bond 4 next to a branch.
        let mixed = CoxeterMatrix::new(
            4,
            vec![1, 4, 2, 2, 4, 1, 3, 3, 2, 3, 1, 2, 2, 3, 2, 1],
        )
        .unwrap();
        assert!(matches!(mixed.classify(), Err(Error::NotFinite(_))));
        // Affine G̃2: path 6–3.
        let g2_affine = CoxeterMatrix::new(3, vec![1, 6, 2, 6, 1, 3, 2, 3, 1]).unwrap();
        assert!(matches!(g2_affine.classify(), Err(Error::NotFinite(_))));
        // H5 does not exist.
        let h5 = CoxeterMatrix::from_descriptor("A5")
            .map(|m| {
                let mut e = m.entries.clone();
                e[1] = 5;
                e[5] = 5;
                CoxeterMatrix::new(5, e).unwrap()
            })
            .unwrap();
        assert!(matches!(h5.classify(), Err(Error::NotFinite(_))));
    }

    #[test]
    fn unsupported_dihedral_fields() {
        let i7 = CoxeterMatrix::from_descriptor("I2:7").unwrap();
        assert!(matches!(i7.require_supported(), Err(Error::UnsupportedField(_))));
        for m in [2u32, 3, 4, 5, 6] {
            let ok = CoxeterMatrix::from_descriptor(&format!("I2:{m}")).unwrap();
            assert!(ok.require_supported().is_ok(), "I2({m}) should be supported");
        }
    }

    #[test]
    fn matrix_validation() {
        assert!(CoxeterMatrix::new(2, vec![1, 1, 1, 1]).is_err());
        assert!(CoxeterMatrix::new(2, vec![2, 3, 3, 2]).is_err());
        assert!(CoxeterMatrix::new(2, vec![1, 3, 4, 1]).is_err());
        assert!(CoxeterMatrix::new(2, vec![1, 3, 3]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = CoxeterMatrix::from_descriptor("B3").unwrap();
        let text = m.to_text();
        assert_eq!(CoxeterMatrix::from_text(&text).unwrap(), m);
        assert_eq!(text, "3\n1 4 2\n4 1 3\n2 3 1\n");
    }

    #[test]
    fn golden_field_detection() {
        assert!(CoxeterMatrix::from_descriptor("H3").unwrap().needs_golden_field());
        assert!(CoxeterMatrix::from_descriptor("I2:5").unwrap().needs_golden_field());
        assert!(!CoxeterMatrix::from_descriptor("F4").unwrap().needs_golden_field());
    }

    #[test]
    fn cartan_products_match_bond_labels() {
        // c(s,t)·c(t,s) must equal 4cos²(π/m): 0, 1, 2, φ², 3.
        let check = |desc: &str, expected: Scalar| {
            let m = CoxeterMatrix::from_descriptor(desc).unwrap();
            let prod = m.cartan_entry(0, 1) * m.cartan_entry(1, 0);
            assert_eq!(prod, expected, "{desc}");
        };
        check("I2:2", Scalar::zero());
        check("A2", Scalar::one());
        check("B2", Scalar::from_int(2));
        check("G2", Scalar::from_int(3));
        let phi = Scalar::golden_ratio();
        check("I2:5", &phi * &phi);
    }
}
