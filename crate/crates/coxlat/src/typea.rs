//! Type-A view: standard parabolic cosets of `A_{n−1}` are ordered set
//! partitions of `[n]`.
//!
//! The identification sends generator `g` (0-based) to the adjacent
//! transposition of the values `g+1` and `g+2`; a coset `xW_I` becomes the
//! sequence of images under `x` of the interval blocks cut out by `I`.

use crate::bitset::GenSet;
use crate::coset::ParabolicCoset;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use std::fmt;

/// Ordered partition of `[n]` with 1-based values, digits ascending inside
/// each block; renders as `2|13`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> OrderedPartition {
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
        }
        OrderedPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index (0-based) of a value.
    pub fn block_of(&self, value: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&value))
    }

    fn is_partition(&self) -> bool {
        let n = self.ground_size();
        let mut seen = vec![false; n + 1];
        for block in &self.blocks {
            if block.is_empty() {
                return false;
            }
            for &v in block {
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().concat())
            .collect();
        write!(f, "{}", rendered.join("|"))
    }
}

/// Checks that the system is the standard `A_{n−1}` path with the
/// conventional generator order.
pub fn require_type_a(system: &CoxeterSystem) -> Result<usize> {
    let n = system.rank();
    for i in 0..n {
        for j in i + 1..n {
            let expected = if j == i + 1 { 3 } else { 2 };
            if system.matrix().get(i, j) != expected {
                return Err(Error::NotTypeA);
            }
        }
    }
    Ok(n + 1)
}

/// The permutation `π` of `[n]` with `w(e_i) = e_{π(i)}`, 1-based.
fn to_permutation(system: &CoxeterSystem, w: &Element, n: usize) -> Vec<usize> {
    let mut pi: Vec<usize> = (0..=n).collect();
    // w = s_1 ⋯ s_k acts as π_{s_1} ∘ ⋯ ∘ π_{s_k} on values.
    for &g in w.reduced_word(system).iter().rev() {
        for slot in pi.iter_mut() {
            if *slot == g + 1 {
                *slot = g + 2;
            } else if *slot == g + 2 {
                *slot = g + 1;
            }
        }
    }
    pi
}

fn from_permutation(system: &CoxeterSystem, pi: &[usize]) -> Element {
    let mut pi = pi.to_vec();
    let mut letters = Vec::new();
    loop {
        match (1..pi.len() - 1).find(|&i| pi[i] > pi[i + 1]) {
            Some(i) => {
                letters.push(i - 1);
                pi.swap(i, i + 1);
            }
            None => break,
        }
    }
    letters.reverse();
    Element::from_word(system, &letters)
}

/// Encodes a coset of the standard `A_{n−1}` system as an ordered
/// partition of `[n]`.
pub fn encode(system: &CoxeterSystem, coset: &ParabolicCoset) -> Result<OrderedPartition> {
    let n = require_type_a(system)?;
    let pi = to_permutation(system, coset.minimal(), n);
    let i_set = coset.generators();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = vec![pi[1]];
    for v in 2..=n {
        // Generator v−2 links positions v−1 and v.
        if i_set.contains(v - 2) {
            current.push(pi[v]);
        } else {
            blocks.push(std::mem::take(&mut current));
            current.push(pi[v]);
        }
    }
    blocks.push(current);
    Ok(OrderedPartition::new(blocks))
}

/// Decodes an ordered partition back to the coset; inverse of `encode`.
pub fn decode(system: &CoxeterSystem, partition: &OrderedPartition) -> Result<ParabolicCoset> {
    let n = require_type_a(system)?;
    if partition.ground_size() != n || !partition.is_partition() {
        return Err(Error::Parse(format!("not an ordered partition of [{n}]")));
    }
    let mut i_set = GenSet::EMPTY;
    let mut pi = vec![0usize; n + 1];
    let mut position = 1usize;
    for block in partition.blocks() {
        for (offset, &value) in block.iter().enumerate() {
            if offset > 0 {
                i_set.insert(position - 2); // links positions −1 and this
            }
            pi[position] = value;
            position += 1;
        }
    }
    let x = from_permutation(system, &pi);
    ParabolicCoset::new(system, &x, i_set)
}

/// Parses `2|13` style literals.
pub fn parse_partition(text: &str) -> Result<OrderedPartition> {
    let mut blocks = Vec::new();
    for chunk in text.split('|') {
        let mut block = Vec::new();
        for c in chunk.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("bad partition digit `{c}`")))?;
            block.push(d as usize);
        }
        blocks.push(block);
    }
    Ok(OrderedPartition::new(blocks))
}

/// `inv(λ)_{i,j}` for `i < j`: −1 when i's block precedes j's, 0 when they
/// share a block, +1 otherwise.
pub fn inversion_table_entry(partition: &OrderedPartition, i: usize, j: usize) -> i8 {
    let bi = partition.block_of(i).expect("value in partition");
    let bj = partition.block_of(j).expect("value in partition");
    match bi.cmp(&bj) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// Covers of an ordered partition under the merge/split rules: merge two
/// adjacent blocks when the left one is entirely smaller, or split one
/// block with the larger values moving left.
pub fn partition_covers(partition: &OrderedPartition) -> Vec<OrderedPartition> {
    let blocks = partition.blocks();
    let mut out = Vec::new();
    // Type (1): merge λ_i, λ_{i+1} when λ_i ≪ λ_{i+1}.
    for i in 0..blocks.len().saturating_sub(1) {
        let max_left = *blocks[i].last().unwrap();
        let min_right = *blocks[i + 1].first().unwrap();
        if max_left < min_right {
            let mut merged: Vec<Vec<usize>> = blocks[..i].to_vec();
            let mut joined = blocks[i].clone();
            joined.extend(&blocks[i + 1]);
            merged.push(joined);
            merged.extend(blocks[i + 2..].iter().cloned());
            out.push(OrderedPartition::new(merged));
        }
    }
    // Type (2): split a block B into X|Y with Y ≪ X.
    for (i, block) in blocks.iter().enumerate() {
        for cut in 1..block.len() {
            let low: Vec<usize> = block[..cut].to_vec();
            let high: Vec<usize> = block[cut..].to_vec();
            let mut split: Vec<Vec<usize>> = blocks[..i].to_vec();
            split.push(high);
            split.push(low);
            split.extend(blocks[i + 1..].iter().cloned());
            out.push(OrderedPartition::new(split));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::CoxeterComplex;
    use crate::facial::facial_covers;
    use crate::names::parse_word;
    use crate::scalar::Scalar;

    fn sys(desc: &str) -> CoxeterSystem {
        CoxeterSystem::from_descriptor(desc).unwrap()
    }

    fn coset(system: &CoxeterSystem, word: &str, gens: &[usize]) -> ParabolicCoset {
        let letters = parse_word(system.rank(), word).unwrap();
        let mut i_set = GenSet::EMPTY;
        for &g in gens {
            i_set.insert(g);
        }
        ParabolicCoset::new(system, &Element::from_word(system, &letters), i_set).unwrap()
    }

    #[test]
    fn spec_examples_in_a2() {
        let a2 = sys("A2");
        assert_eq!(encode(&a2, &coset(&a2, "e", &[])).unwrap().to_string(), "1|2|3");
        assert_eq!(encode(&a2, &coset(&a2, "e", &[0, 1])).unwrap().to_string(), "123");
        assert_eq!(encode(&a2, &coset(&a2, "s", &[1])).unwrap().to_string(), "2|13");
    }

    #[test]
    fn non_type_a_is_rejected() {
        let b2 = sys("B2");
        let c = coset(&b2, "e", &[]);
        assert_eq!(encode(&b2, &c), Err(Error::NotTypeA));
    }

    #[test]
    fn codec_is_a_bijection_on_the_a3_complex() {
        let a3 = sys("A3");
        let complex = CoxeterComplex::build(&a3);
        let mut seen = std::collections::HashSet::new();
        for record in complex.records() {
            let partition = encode(&a3, &record.coset).unwrap();
            assert!(seen.insert(partition.to_string()), "duplicate {partition}");
            let back = decode(&a3, &partition).unwrap();
            assert_eq!(back, record.coset, "round trip of {partition}");
        }
        assert_eq!(seen.len(), 75);
    }

    #[test]
    fn inversion_table_matches_root_inversion_sets() {
        // inv(λ)_{i,j} = −1/0/+1 according to which of ±(e_i − e_j) lies in
        // R(xW_I).
        let a3 = sys("A3");
        let complex = CoxeterComplex::build(&a3);
        let n = 4;
        // Map each positive root to its (i, j) pair, i < j.
        let p = a3.num_positive_roots();
        let pair_of = |idx: usize| -> (usize, usize) {
            let coords = a3.root(idx);
            let mut e = vec![Scalar::zero(); n];
            for k in 0..n - 1 {
                e[k] += coords[k].clone();
                e[k + 1] -= coords[k].clone();
            }
            let i = e.iter().position(|c| c == &Scalar::one()).unwrap();
            let j = e.iter().position(|c| c == &(-Scalar::one())).unwrap();
            (i + 1, j + 1)
        };
        // In this basis the positive roots are e_i − e_j with i < j, so
        // value i precedes value j exactly when only the negative member
        // of the pair lies in R.
        for record in complex.records() {
            let partition = encode(&a3, &record.coset).unwrap();
            for idx in 0..p {
                let (i, j) = pair_of(idx);
                assert!(i < j);
                let has_pos = record.root_set.contains(idx); // e_i − e_j
                let has_neg = record.root_set.contains(idx + p); // e_j − e_i
                let expected = match (has_pos, has_neg) {
                    (true, false) => 1,
                    (true, true) => 0,
                    (false, true) => -1,
                    (false, false) => panic!("root pair absent from R"),
                };
                assert_eq!(inversion_table_entry(&partition, i, j), expected);
            }
        }
    }

    #[test]
    fn facial_covers_match_merge_split_rules() {
        let a3 = sys("A3");
        let complex = CoxeterComplex::build(&a3);
        for record in complex.records() {
            let partition = encode(&a3, &record.coset).unwrap();
            let mut by_rules: Vec<String> =
                partition_covers(&partition).iter().map(|p| p.to_string()).collect();
            by_rules.sort();
            let mut by_facial: Vec<String> = facial_covers(&a3, &record.coset)
                .into_iter()
                .map(|(c, _)| encode(&a3, &c).unwrap().to_string())
                .collect();
            by_facial.sort();
            assert_eq!(by_rules, by_facial, "covers of {partition}");
        }
    }

    #[test]
    fn partition_parsing() {
        let p = parse_partition("2|13").unwrap();
        assert_eq!(p.blocks(), &[vec![2], vec![1, 3]]);
        assert!(parse_partition("2|x3").is_err());
    }
}
