//! Stirling numbers of the second kind, Bell numbers and polynomials, and
//! exhaustive enumeration of set partitions and integer partitions.

use num::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default cap on set-partition enumeration (B(9) = 21147 objects).
pub const SET_PARTITION_BOUND: usize = 9;
/// Default cap on integer-partition enumeration.
pub const INTEGER_PARTITION_BOUND: usize = 30;

pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::from(1);
    for i in 2..=n {
        f *= i;
    }
    f
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::from(1);
    for i in 0..k {
        num *= n - i;
    }
    num / factorial(k)
}

/// `S(n, k)`: set partitions of n elements into exactly k non-empty blocks.
/// Computed per call by the recurrence `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    // row-by-row over k = 0..=k
    let mut row = vec![BigInt::from(0); k + 1];
    row[0] = BigInt::from(1);
    for _ in 1..=n {
        let mut next = vec![BigInt::from(0); k + 1];
        for j in 1..=k {
            next[j] = j * &row[j] + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// `B(n) = sum_k S(n, k)`, with `B(0) = 1`.
pub fn bell_number(n: usize) -> BigInt {
    let mut total = BigInt::from(0);
    for k in 0..=n {
        total += stirling2(n, k);
    }
    total
}

/// Coefficients of `B_n(y) = sum_k S(n,k) y^k`, index k = 0..n.
pub fn bell_polynomial(n: usize) -> Vec<Rational> {
    (0..=n).map(|k| Rational::from(stirling2(n, k))).collect()
}

/// A partition of `{1..n}` into non-empty blocks, stored canonically: each
/// block ascending, blocks ordered by minimum element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validate that `blocks` partitions `{1..n}` for n = total element count,
    /// then canonicalize.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition {
                    n,
                    message: "empty block".into(),
                });
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::InvalidPartition {
                        n,
                        message: format!("element {e} outside 1..={n}"),
                    });
                }
                if seen[e] {
                    return Err(Error::InvalidPartition {
                        n,
                        message: format!("element {e} repeated"),
                    });
                }
                seen[e] = true;
            }
        }
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Block sizes as an integer partition (the unlabelled shape).
    pub fn shape(&self) -> IntegerPartition {
        let mut parts: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }
}

/// All set partitions of `{1..n}` in restricted-growth-string order.
pub fn enumerate_set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    enumerate_set_partitions_with_bound(n, SET_PARTITION_BOUND)
}

pub fn enumerate_set_partitions_with_bound(n: usize, bound: usize) -> Result<Vec<SetPartition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "set-partition enumeration",
            n,
            bound,
        });
    }
    if n == 0 {
        return Ok(vec![SetPartition { blocks: vec![] }]);
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[..i]).
    // Value j collects block j; blocks come out sorted by minimum element.
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        let nblocks = maxes[n - 1] + 1;
        let mut blocks = vec![Vec::new(); nblocks];
        for (i, &j) in rgs.iter().enumerate() {
            blocks[j].push(i + 1);
        }
        out.push(SetPartition { blocks });

        // advance to the next RGS
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if rgs[i] <= maxes[i - 1] {
                break;
            }
            i -= 1;
        }
        rgs[i] += 1;
        maxes[i] = maxes[i - 1].max(rgs[i]);
        for j in i + 1..n {
            rgs[j] = 0;
            maxes[j] = maxes[j - 1];
        }
    }
}

/// A partition of n into positive parts, stored non-increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let n: usize = parts.iter().sum();
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                n,
                message: "zero part".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                n,
                message: "parts not sorted non-increasing".into(),
            });
        }
        Ok(IntegerPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// All integer partitions of n, descending lexicographic ([n] first).
pub fn enumerate_integer_partitions(n: usize) -> Result<Vec<IntegerPartition>> {
    enumerate_integer_partitions_with_bound(n, INTEGER_PARTITION_BOUND)
}

pub fn enumerate_integer_partitions_with_bound(
    n: usize,
    bound: usize,
) -> Result<Vec<IntegerPartition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "integer-partition enumeration",
            n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            descend(remaining - part, part, current, out);
            current.pop();
        }
    }
    descend(n, n.max(1), &mut current, &mut out);
    Ok(out)
}

/// Number of set partitions of `{1..n}` whose block sizes realize the shape:
/// `n! / (prod_i parts_i! * prod_j m_j!)` with `m_j` the multiplicity of part
/// size j. Summed over all shapes of n this gives `B(n)`.
pub fn partition_type_multiplicity(shape: &IntegerPartition) -> BigInt {
    let n = shape.n();
    let mut denom = BigInt::from(1);
    let mut run = 0usize;
    let mut prev = 0usize;
    for &p in shape.parts() {
        denom *= factorial(p);
        if p == prev {
            run += 1;
        } else {
            denom *= factorial(run);
            prev = p;
            run = 1;
        }
    }
    denom *= factorial(run);
    factorial(n) / denom
}
