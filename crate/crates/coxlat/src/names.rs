//! Generator names for input and output.
//!
//! Ranks up to 12 use single letters ending at `t`, matching the usual
//! choices for small ranks: `s,t` in rank 2, `r,s,t` in rank 3, and so on.
//! Larger ranks fall back to `s0, s1, ...`. Numeric indices are always
//! accepted on input.

use crate::error::{Error, Result};

const LAST_LETTER: u8 = b't';
const MAX_LETTER_RANK: usize = 12;

pub fn generator_name(rank: usize, index: usize) -> String {
    debug_assert!(index < rank);
    if rank <= MAX_LETTER_RANK {
        let first = LAST_LETTER - (rank as u8 - 1);
        ((first + index as u8) as char).to_string()
    } else {
        format!("s{index}")
    }
}

pub fn parse_generator(rank: usize, name: &str) -> Result<usize> {
    let name = name.trim();
    if rank <= MAX_LETTER_RANK && name.len() == 1 {
        let c = name.as_bytes()[0].to_ascii_lowercase();
        let first = LAST_LETTER - (rank as u8 - 1);
        if (first..=LAST_LETTER).contains(&c) {
            return Ok((c - first) as usize);
        }
    }
    if let Some(rest) = name.strip_prefix('s') {
        if let Ok(i) = rest.parse::<usize>() {
            if i < rank {
                return Ok(i);
            }
        }
    }
    if let Ok(i) = name.parse::<usize>() {
        if i < rank {
            return Ok(i);
        }
    }
    Err(Error::Parse(format!("unknown generator `{name}` for rank {rank}")))
}

/// Comma-separated word, e.g. `t,s,r`; `e` or the empty string denote the
/// identity.
pub fn parse_word(rank: usize, text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(Vec::new());
    }
    text.split(',').map(|tok| parse_generator(rank, tok)).collect()
}

pub fn format_word(rank: usize, word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|&s| generator_name(rank, s)).collect::<Vec<_>>().join(",")
}

/// Compact form without separators, used in labels: `tsr`, `e`.
pub fn format_word_compact(rank: usize, word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    if rank <= MAX_LETTER_RANK {
        word.iter().map(|&s| generator_name(rank, s)).collect()
    } else {
        format_word(rank, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_end_at_t() {
        assert_eq!(generator_name(2, 0), "s");
        assert_eq!(generator_name(2, 1), "t");
        assert_eq!(generator_name(3, 0), "r");
        assert_eq!(generator_name(3, 2), "t");
        assert_eq!(generator_name(4, 0), "q");
        assert_eq!(generator_name(13, 5), "s5");
    }

    #[test]
    fn parsing_accepts_letters_and_indices() {
        assert_eq!(parse_generator(3, "r").unwrap(), 0);
        assert_eq!(parse_generator(3, "t").unwrap(), 2);
        assert_eq!(parse_generator(3, "0").unwrap(), 0);
        assert_eq!(parse_generator(3, "s2").unwrap(), 2);
        assert!(parse_generator(3, "x").is_err());
        assert!(parse_generator(3, "3").is_err());
    }

    #[test]
    fn words_round_trip() {
        assert_eq!(parse_word(3, "t,s,r").unwrap(), vec![2, 1, 0]);
        assert_eq!(parse_word(3, "e").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word(3, "").unwrap(), Vec::<usize>::new());
        assert_eq!(format_word(3, &[2, 1, 0]), "t,s,r");
        assert_eq!(format_word_compact(3, &[2, 1, 0]), "tsr");
        assert_eq!(format_word_compact(3, &[]), "e");
    }
}
