use crate::error::{Error, Result};
use crate::partitions::SetPartition;
use crate::seqcore::{Family, IntSequence};

use super::require_member;

/// Builds the partition left to right: `n` opens a new last block when
/// `a_n = a_{n-1}`, joins block `a_n` when `a_n > a_{n-1}`, and joins block
/// `a_n + 1` when `a_n < a_{n-1}`.
pub fn phi(seq: &IntSequence) -> Result<SetPartition> {
    let a = seq.entries();
    require_member(a, Family::Repetition, "phi")?;
    let mut blocks: Vec<Vec<u32>> = vec![vec![1]];
    for (i, w) in a.windows(2).enumerate() {
        let element = i as u32 + 2;
        let (prev, cur) = (w[0], w[1]);
        if cur == prev {
            blocks.push(vec![element]);
        } else {
            let block = if cur > prev { cur } else { cur + 1 } as usize;
            blocks[block - 1].push(element);
        }
    }
    let p = SetPartition::from_blocks_unchecked(blocks);
    debug_assert_eq!(Ok(&p), phi_top_down(seq).as_ref());
    Ok(p)
}

/// The same map, built by opening `1 + #repetitions` empty blocks and
/// dropping `n, n-1, ..., 2` and finally `1` into their blocks.
pub fn phi_top_down(seq: &IntSequence) -> Result<SetPartition> {
    let a = seq.entries();
    require_member(a, Family::Repetition, "phi")?;
    // reps_upto[i]: repetitions among the first i + 1 entries
    let mut reps_upto = vec![0usize; a.len()];
    for i in 1..a.len() {
        reps_upto[i] = reps_upto[i - 1] + (a[i] == a[i - 1]) as usize;
    }
    let mut blocks = vec![Vec::new(); 1 + reps_upto[a.len() - 1]];
    for i in (1..a.len()).rev() {
        let block = if a[i] == a[i - 1] {
            1 + reps_upto[i]
        } else if a[i] > a[i - 1] {
            a[i] as usize
        } else {
            a[i] as usize + 1
        };
        blocks[block - 1].push(i as u32 + 1);
    }
    blocks[0].push(1);
    blocks.iter_mut().for_each(|b| b.reverse());
    SetPartition::from_blocks(blocks)
}

/// Reads the placement of each element back off the partition: `m` opened a
/// block iff it is its block's minimum; otherwise with `b` its block index,
/// `a_m = b` if `b > a_{m-1}` and `a_m = b - 1` otherwise.
pub fn phi_inverse(p: &SetPartition) -> Result<IntSequence> {
    let n = p.size();
    if n == 0 {
        return Err(Error::Empty {
            what: "phi_inverse",
        });
    }
    let mut block_of = vec![0usize; n + 1];
    let mut is_min = vec![false; n + 1];
    for (b, block) in p.blocks().iter().enumerate() {
        is_min[block[0] as usize] = true;
        for &e in block {
            block_of[e as usize] = b + 1;
        }
    }
    let mut a = Vec::with_capacity(n);
    a.push(0u32);
    for m in 2..=n {
        let prev = a[m - 2];
        let next = if is_min[m] {
            prev
        } else {
            let b = block_of[m] as u32;
            if b > prev {
                b
            } else {
                b - 1
            }
        };
        a.push(next);
    }
    Ok(IntSequence::new(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_str(s: &str) -> String {
        phi(&s.parse().unwrap()).unwrap().to_string()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(phi_str("002"), "1/23");
        assert_eq!(phi_str("0020"), "14/23");
        assert_eq!(phi_str("0021"), "1/234");
        assert_eq!(phi_str("0022"), "1/23/4");
        assert_eq!(phi_str("0"), "1");
        assert_eq!(phi_str("00"), "1/2");
    }

    #[test]
    fn inverse_examples() {
        for (s, p) in [("0020", "14/23"), ("0021", "1/234"), ("0022", "1/23/4"), ("0", "1")] {
            let back = phi_inverse(&p.parse().unwrap()).unwrap();
            assert_eq!(back.to_compact(), s);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(phi(&"012".parse().unwrap()).is_err());
        assert!(phi(&IntSequence::empty()).is_err());
        assert!(phi_inverse(&SetPartition::default()).is_err());
    }

    #[test]
    fn top_down_agrees() {
        for s in ["0", "00", "0020", "0021", "0022", "000223303", "0001203"] {
            let seq: IntSequence = s.parse().unwrap();
            assert_eq!(phi(&seq).unwrap(), phi_top_down(&seq).unwrap(), "{s}");
        }
    }
}
