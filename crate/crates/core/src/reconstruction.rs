//! Edge count by degree-sum reconstruction around the Jaconian vertex.
//!
//! When `n = m + d⁺(v_m)` (with `m = d⁺(v_n)`), `J_n(1)` is `J_m(1)` plus the
//! arcs that were cut away: the `d⁺(v_m)` arcs out of `v_m`, the
//! `d⁺(v_m)(d⁺(v_m) - 1)` degree contributions inside the Hope graph, and the
//! bridging arcs from `v_{m-1}, v_{m-2}, ...`. Half the resulting degree sum is
//! `ε(J_n(1))`. When `n` is not of that form, `n + 1` is, and
//! `ε(J_n) = ε(J_{n+1}) - d⁻(v_{n+1})` with `d⁻(v_{n+1}) = d⁺(v_m)`.
//!
//! All out-degrees come from [`crate::zeckendorf::bettina_out_degree`].

use serde::Serialize;

use crate::error::{JacoError, Result};
use crate::zeckendorf::shifted_sum;

/// Base values `ε(J_1)`, `ε(J_2)`, `ε(J_3)`.
const SMALL_EDGES: [u64; 3] = [0, 1, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub n: u64,
    pub m: u64,
    /// The anchor belongs to `n + 1`, not `n`.
    pub via_successor: bool,
}

impl Anchor {
    /// The size the anchor is expressed for: `n`, or `n + 1` via the successor.
    pub fn target(&self) -> u64 {
        self.n + self.via_successor as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgingSum {
    /// `(i, d⁺(v_{m-i}) - i)` for `i = 0..=j_max`.
    pub terms: Vec<(u64, u64)>,
    pub j_max: u64,
}

impl BridgingSum {
    pub fn sum(&self) -> u64 {
        self.terms.iter().map(|&(_, v)| v).sum()
    }

    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.iter().map(|&(_, v)| v)
    }
}

fn direct_anchor(n: u64) -> Option<u64> {
    let m = shifted_sum(n);
    (m + shifted_sum(m) == n).then_some(m)
}

pub fn expressible_anchor(n: u64) -> Result<Anchor> {
    if n < 2 {
        return Err(JacoError::Domain(format!(
            "anchors are defined for n >= 2, got {n}"
        )));
    }
    if let Some(m) = direct_anchor(n) {
        return Ok(Anchor {
            n,
            m,
            via_successor: false,
        });
    }
    let succ = n
        .checked_add(1)
        .ok_or(JacoError::Overflow("successor of n"))?;
    match direct_anchor(succ) {
        Some(m) => Ok(Anchor {
            n,
            m,
            via_successor: true,
        }),
        None => Err(JacoError::Invariant(format!(
            "neither {n} nor {succ} can be written as m + d⁺(v_m) with m = d⁺(v_n)"
        ))),
    }
}

/// Terms `d⁺(v_{m-i}) - i` for `i = 0, 1, ...` while the term is at least 1
/// and `m - i >= 1`.
pub fn bridging_terms(m: u64) -> Result<BridgingSum> {
    if m == 0 {
        return Err(JacoError::vertices_from_one());
    }
    let mut terms = Vec::new();
    for i in 0..m {
        let out = shifted_sum(m - i);
        if out <= i {
            break;
        }
        terms.push((i, out - i));
    }
    // d⁺(v_m) >= 1 always, so offset 0 is present.
    let j_max = terms.last().map(|&(i, _)| i).unwrap_or(0);
    Ok(BridgingSum { terms, j_max })
}

/// The full degree sum `m(m+1)/2 + bridging(m) + d⁺(v_m)(d⁺(v_m) - 1)`,
/// which must equal `2 ε(J_n(1))`.
pub fn prop22_degree_sum(n: u64, m: u64) -> Result<u128> {
    if m == 0 {
        return Err(JacoError::vertices_from_one());
    }
    let out_m = shifted_sum(m);
    if m.checked_add(out_m) != Some(n) {
        return Err(JacoError::Domain(format!(
            "{n} is not m + d⁺(v_m) for m = {m} (d⁺(v_m) = {out_m})"
        )));
    }
    let m = m as u128;
    let out_m = out_m as u128;
    Ok(m * (m + 1) / 2 + bridging_terms(m as u64)?.sum() as u128 + out_m * (out_m - 1))
}

pub fn edges_prop22(n: u64, m: u64) -> Result<u64> {
    let total = prop22_degree_sum(n, m)?;
    if total % 2 != 0 {
        return Err(JacoError::Invariant(format!(
            "odd degree sum {total} for n = {n}, m = {m}"
        )));
    }
    u64::try_from(total / 2).map_err(|_| JacoError::Overflow("edge count"))
}

pub fn edges_reconstruction(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(JacoError::vertices_from_one());
    }
    if n <= SMALL_EDGES.len() as u64 {
        return Ok(SMALL_EDGES[(n - 1) as usize]);
    }
    let anchor = expressible_anchor(n)?;
    let eps = edges_prop22(anchor.target(), anchor.m)?;
    if anchor.via_successor {
        // d⁻(v_{n+1}) = d⁺(v_m)
        Ok(eps - shifted_sum(anchor.m))
    } else {
        Ok(eps)
    }
}
