//! Fibonacci numbers (`f_1 = f_2 = 1`), Zeckendorf decompositions, and the
//! out-degree rule `d⁺(v_n) = Σ f_{k-1}` over the Zeckendorf indices `k` of `n`.

use std::fmt;

use crate::error::{JacoError, Result};

/// Largest index whose Fibonacci number fits in a `u64`.
pub const MAX_FIB_INDEX: u32 = 93;

const FIB: [u64; MAX_FIB_INDEX as usize + 1] = {
    let mut t = [0u64; MAX_FIB_INDEX as usize + 1];
    t[1] = 1;
    t[2] = 1;
    let mut k = 3;
    while k <= MAX_FIB_INDEX as usize {
        t[k] = t[k - 1] + t[k - 2];
        k += 1;
    }
    t
};

pub fn fib(k: u32) -> Result<u64> {
    if k == 0 {
        return Err(JacoError::Domain(
            "Fibonacci indices start at 1 (f_1 = f_2 = 1)".to_owned(),
        ));
    }
    FIB.get(k as usize)
        .copied()
        .ok_or(JacoError::Overflow("Fibonacci number"))
}

/// Greedy Zeckendorf indices of `n`, largest first. Yields nothing for 0.
fn indices_of(mut n: u64) -> impl Iterator<Item = u32> {
    let mut k = MAX_FIB_INDEX;
    std::iter::from_fn(move || {
        if n == 0 {
            return None;
        }
        while FIB[k as usize] > n {
            k -= 1;
        }
        let found = k;
        n -= FIB[k as usize];
        // The remainder is below f_{k-1}, so the next index is at most k - 2.
        k -= 2;
        Some(found)
    })
}

/// Strictly decreasing, pairwise non-consecutive Fibonacci indices, each >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Zeckendorf {
    indices: Vec<u32>,
}

impl Zeckendorf {
    /// Validates a list of indices.
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.is_empty() {
            return Err(JacoError::InvalidZeckendorf("empty index list".to_owned()));
        }
        for &k in &indices {
            if !(2..=MAX_FIB_INDEX).contains(&k) {
                return Err(JacoError::InvalidZeckendorf(format!(
                    "index {k} outside 2..={MAX_FIB_INDEX}"
                )));
            }
        }
        for pair in indices.windows(2) {
            if pair[0] <= pair[1] {
                return Err(JacoError::InvalidZeckendorf(format!(
                    "indices must strictly decrease, found {} then {}",
                    pair[0], pair[1]
                )));
            }
            if pair[0] == pair[1] + 1 {
                return Err(JacoError::InvalidZeckendorf(format!(
                    "consecutive indices {} and {}",
                    pair[0], pair[1]
                )));
            }
        }
        let z = Zeckendorf { indices };
        z.value()?;
        Ok(z)
    }

    pub fn decompose(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(JacoError::Domain(
                "only positive integers have a Zeckendorf representation".to_owned(),
            ));
        }
        Ok(Zeckendorf {
            indices: indices_of(n).collect(),
        })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn value(&self) -> Result<u64> {
        self.indices.iter().try_fold(0u64, |acc, &k| {
            acc.checked_add(FIB[k as usize])
                .ok_or(JacoError::Overflow("Zeckendorf value"))
        })
    }

    /// Sum with every index shifted down by one.
    pub fn shifted_value(&self) -> u64 {
        self.indices.iter().map(|&k| FIB[k as usize - 1]).sum()
    }

    /// `"12 = f_6 + f_4 + f_2"`.
    pub fn canonical_form(&self) -> String {
        // value() only fails for hand-built inputs, which new() already rejected.
        let value = self.value().expect("validated on construction");
        format!("{value} = {self}")
    }
}

impl fmt::Display for Zeckendorf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, k) in self.indices.iter().enumerate() {
            if pos > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "f_{k}")?;
        }
        Ok(())
    }
}

/// Infinite-graph out-degree `d⁺(v_n)` from the index-shift rule.
pub fn bettina_out_degree(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(JacoError::vertices_from_one());
    }
    Ok(shifted_sum(n))
}

// Allocation-free form for hot loops; `n >= 1`.
pub(crate) fn shifted_sum(n: u64) -> u64 {
    indices_of(n).map(|k| FIB[k as usize - 1]).sum()
}

pub fn in_degree_bettina(n: u64) -> Result<u64> {
    Ok(n - bettina_out_degree(n)?)
}

/// `ε(J_n(1)) = n(n+1)/2 - 1 - Σ_{i=2}^{n} d⁺(v_i)`, with `ε(J_1) = 0`.
pub fn edges_zeckendorf(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(JacoError::vertices_from_one());
    }
    if n == 1 {
        return Ok(0);
    }
    let out_sum = out_degree_sum(n);
    let triangle = n as u128 * (n as u128 + 1) / 2;
    let eps = triangle
        .checked_sub(1 + out_sum)
        .ok_or_else(|| JacoError::Invariant(format!("negative edge count at n = {n}")))?;
    u64::try_from(eps).map_err(|_| JacoError::Overflow("edge count"))
}

/// `Σ_{i=2}^{n} d⁺(v_i)`.
pub fn out_degree_sum(n: u64) -> u128 {
    (2..=n).map(|i| shifted_sum(i) as u128).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(7).unwrap(), 13);
        assert_eq!(fib(2).unwrap(), 1);
        assert_eq!(fib(1).unwrap(), 1);
        assert_eq!(fib(9).unwrap(), 34);
        assert_eq!(fib(93).unwrap(), 12_200_160_415_121_876_738);
        assert!(matches!(fib(0), Err(JacoError::Domain(_))));
        assert_eq!(fib(94), Err(JacoError::Overflow("Fibonacci number")));
    }

    #[test]
    fn decompositions() {
        assert_eq!(Zeckendorf::decompose(12).unwrap().indices(), &[6, 4, 2]);
        assert_eq!(Zeckendorf::decompose(7).unwrap().indices(), &[5, 3]);
        assert_eq!(Zeckendorf::decompose(1).unwrap().indices(), &[2]);
        assert!(Zeckendorf::decompose(0).is_err());
        let top = Zeckendorf::decompose(u64::MAX).unwrap();
        assert_eq!(top.value().unwrap(), u64::MAX);
    }

    #[test]
    fn values_and_validation() {
        assert_eq!(Zeckendorf::new(vec![6, 4, 2]).unwrap().value().unwrap(), 12);
        assert_eq!(Zeckendorf::new(vec![2]).unwrap().value().unwrap(), 1);
        assert_eq!(Zeckendorf::new(vec![9]).unwrap().value().unwrap(), 34);
        for bad in [vec![], vec![5, 4], vec![2, 4], vec![4, 4], vec![1], vec![94]] {
            assert!(
                matches!(Zeckendorf::new(bad.clone()), Err(JacoError::InvalidZeckendorf(_))),
                "{bad:?}"
            );
        }
        assert_eq!(
            Zeckendorf::new(vec![93, 91, 89]),
            Err(JacoError::Overflow("Zeckendorf value"))
        );
    }

    #[test]
    fn canonical_text() {
        assert_eq!(Zeckendorf::decompose(12).unwrap().canonical_form(), "12 = f_6 + f_4 + f_2");
        assert_eq!(Zeckendorf::decompose(15).unwrap().canonical_form(), "15 = f_7 + f_3");
        assert_eq!(Zeckendorf::decompose(8).unwrap().canonical_form(), "8 = f_6");
    }

    #[test]
    fn out_degree_rule() {
        assert_eq!(bettina_out_degree(9).unwrap(), 6);
        assert_eq!(bettina_out_degree(15).unwrap(), 9);
        assert_eq!(bettina_out_degree(34).unwrap(), 21);
        assert_eq!(bettina_out_degree(1).unwrap(), 1);
        assert!(bettina_out_degree(0).is_err());
        assert_eq!(in_degree_bettina(18).unwrap(), 7);
        assert_eq!(in_degree_bettina(1).unwrap(), 0);
        assert_eq!(bettina_out_degree(11).unwrap(), 7);
    }

    #[test]
    fn second_formula() {
        assert_eq!(out_degree_sum(15), 75);
        assert_eq!(edges_zeckendorf(15).unwrap(), 44);
        assert_eq!(edges_zeckendorf(1).unwrap(), 0);
        assert_eq!(edges_zeckendorf(35).unwrap(), 236);
        assert!(edges_zeckendorf(0).is_err());
    }
}
