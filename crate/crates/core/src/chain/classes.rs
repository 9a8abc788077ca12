//! Class counting and enumeration over gesture-label sequences.

use super::{ChainClass, ChainError};

/// Number of chain classes: N^L with repetition, N*(N-1)^(L-1) without.
pub fn count_classes(n: u32, l: u32, repetition: bool) -> Result<u64, ChainError> {
    if n < 1 || l < 1 {
        return Err(ChainError::InvalidSpec(format!("N={n} L={l} must be >= 1")));
    }
    if !repetition && n == 1 && l > 1 {
        return Err(ChainError::NoValidChains);
    }
    let overflow = || ChainError::CountOverflow { n, l };
    if repetition {
        u64::from(n).checked_pow(l).ok_or_else(overflow)
    } else {
        u64::from(n - 1)
            .checked_pow(l - 1)
            .and_then(|tail| u64::from(n).checked_mul(tail))
            .ok_or_else(overflow)
    }
}

/// All classes in lexicographic label order, ids 0..C-1. Without repetition,
/// sequences with equal consecutive labels are excluded.
pub fn enumerate_classes(n: u32, l: u32, repetition: bool) -> Result<Vec<ChainClass>, ChainError> {
    let expected = count_classes(n, l, repetition)?;
    if expected > (1 << 24) {
        return Err(ChainError::CountOverflow { n, l });
    }
    let mut out = Vec::with_capacity(expected as usize);
    let mut labels = Vec::with_capacity(l as usize);
    fill(n, l as usize, repetition, &mut labels, &mut out);
    debug_assert_eq!(out.len() as u64, expected);
    Ok(out)
}

fn fill(n: u32, l: usize, repetition: bool, labels: &mut Vec<u32>, out: &mut Vec<ChainClass>) {
    if labels.len() == l {
        out.push(ChainClass { id: out.len() as u32, labels: labels.clone() });
        return;
    }
    for g in 0..n {
        if !repetition && labels.last() == Some(&g) {
            continue;
        }
        labels.push(g);
        fill(n, l, repetition, labels, out);
        labels.pop();
    }
}

/// Id of a label sequence in the canonical enumeration, the inverse of
/// `enumerate_classes`. Counts lexicographically smaller valid sequences.
pub fn class_id_of(labels: &[u32], n: u32, repetition: bool) -> Result<u32, ChainError> {
    let l = labels.len() as u32;
    let total = count_classes(n, l, repetition)?;
    let mut id: u64 = 0;
    for (i, &g) in labels.iter().enumerate() {
        if g >= n {
            return Err(ChainError::InvalidSpec(format!("label {g} out of range for N={n}")));
        }
        let remaining = (l as usize - i - 1) as u32;
        // Sequences per choice of this position's label.
        let per_branch = if repetition {
            u64::from(n).pow(remaining)
        } else {
            u64::from(n - 1).pow(remaining)
        };
        let smaller = if repetition || i == 0 {
            u64::from(g)
        } else {
            let prev = labels[i - 1];
            if g == prev {
                return Err(ChainError::InvalidSpec(
                    "consecutive repeat in repetition-free task".into(),
                ));
            }
            u64::from(g) - u64::from(g > prev)
        };
        id += smaller * per_branch;
    }
    debug_assert!(id < total);
    Ok(id as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_counts_match() {
        assert_eq!(count_classes(3, 4, true).unwrap(), 81);
        assert_eq!(count_classes(3, 6, false).unwrap(), 96);
        assert_eq!(count_classes(1, 1, true).unwrap(), 1);
        assert_eq!(count_classes(1, 1, false).unwrap(), 1);
    }

    #[test]
    fn impossible_chain_is_an_error() {
        assert!(matches!(count_classes(1, 2, false), Err(ChainError::NoValidChains)));
    }

    #[test]
    fn enumerates_two_by_two_with_repetition() {
        let classes = enumerate_classes(2, 2, true).unwrap();
        let labels: Vec<Vec<u32>> = classes.iter().map(|c| c.labels.clone()).collect();
        assert_eq!(labels, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(classes.iter().enumerate().all(|(i, c)| c.id as usize == i));
    }

    #[test]
    fn enumerates_two_by_two_without_repetition() {
        let classes = enumerate_classes(2, 2, false).unwrap();
        let labels: Vec<Vec<u32>> = classes.iter().map(|c| c.labels.clone()).collect();
        assert_eq!(labels, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn length_one_never_repeats() {
        assert_eq!(enumerate_classes(3, 1, false).unwrap().len(), 3);
    }

    #[test]
    fn enumeration_agrees_with_count_up_to_five_six() {
        for n in 1..=5u32 {
            for l in 1..=6u32 {
                for repetition in [true, false] {
                    match count_classes(n, l, repetition) {
                        Ok(c) => {
                            let classes = enumerate_classes(n, l, repetition).unwrap();
                            assert_eq!(classes.len() as u64, c, "N={n} L={l} rep={repetition}");
                            // Sorted lexicographically and ids dense.
                            assert!(classes.windows(2).all(|w| w[0].labels < w[1].labels));
                            if !repetition {
                                assert!(classes.iter().all(|cl| cl
                                    .labels
                                    .windows(2)
                                    .all(|w| w[0] != w[1])));
                            }
                        }
                        Err(ChainError::NoValidChains) => assert!(n == 1 && l > 1 && !repetition),
                        Err(e) => panic!("unexpected error: {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn class_id_round_trips() {
        for repetition in [true, false] {
            let classes = enumerate_classes(4, 4, repetition).unwrap();
            for c in &classes {
                assert_eq!(class_id_of(&c.labels, 4, repetition).unwrap(), c.id);
            }
        }
    }
}
