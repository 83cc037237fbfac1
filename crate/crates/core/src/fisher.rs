//! Incremental row engine: one row `(i, d⁻, d⁺, Δ, ε)` per vertex in
//! amortized O(1).
//!
//! Rows 1 to 3 are seeds. From row 4 on:
//!
//! * `d⁻(v_i) = (i - 1) - Δ(J_{i-1})` (order of the Hope graph of `J_{i-1}`),
//! * `d⁺(v_i) = i - d⁻(v_i)`,
//! * `ε(J_i) = ε(J_{i-1}) + d⁻(v_i)`,
//! * `Δ(J_i) = max{m : 2m - d⁻(v_m) <= i}`, tracked by a pointer that moves
//!   by at most one per row.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{JacoError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FisherRow {
    pub i: u64,
    pub in_deg: u64,
    pub out_deg_inf: u64,
    pub delta: u64,
    pub eps: u64,
}

impl FisherRow {
    pub const fn new(i: u64, in_deg: u64, out_deg_inf: u64, delta: u64, eps: u64) -> Self {
        FisherRow {
            i,
            in_deg,
            out_deg_inf,
            delta,
            eps,
        }
    }
}

pub const SEED_ROWS: [FisherRow; 3] = [
    FisherRow::new(1, 0, 1, 0, 0),
    FisherRow::new(2, 1, 1, 1, 1),
    FisherRow::new(3, 1, 2, 2, 2),
];

pub fn seed_rows() -> [FisherRow; 3] {
    SEED_ROWS
}

/// Sequential row generator. Keeps every emitted in-degree because the
/// Δ pointer reads `d⁻(v_{Δ+1})`, roughly `i/φ` rows back.
#[derive(Debug, Clone, Default)]
pub struct FisherEngine {
    in_deg: Vec<u64>,
    last: Option<FisherRow>,
    delta_pointer: u64,
}

impl FisherEngine {
    /// An unseeded engine; [`FisherEngine::next_row`] fails until
    /// [`FisherEngine::seed`] is called.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn seeded() -> Self {
        let mut engine = Self::new();
        engine.seed();
        engine
    }

    pub fn seed(&mut self) -> [FisherRow; 3] {
        self.in_deg = SEED_ROWS.iter().map(|r| r.in_deg).collect();
        self.last = Some(SEED_ROWS[2]);
        self.delta_pointer = SEED_ROWS[2].delta;
        SEED_ROWS
    }

    pub fn last_row(&self) -> Option<FisherRow> {
        self.last
    }

    pub fn delta_pointer(&self) -> u64 {
        self.delta_pointer
    }

    pub fn next_row(&mut self) -> Result<FisherRow> {
        let prev = self.last.ok_or(JacoError::NotSeeded)?;
        let i = prev.i + 1;
        let in_deg = (i - 1) - prev.delta;
        let out_deg_inf = i - in_deg;
        let eps = prev
            .eps
            .checked_add(in_deg)
            .ok_or(JacoError::Overflow("edge count"))?;
        self.in_deg.push(in_deg);

        let candidate = prev.delta + 1;
        // candidate <= i - 2 for i >= 4, so its in-degree is already known.
        let reach = 2 * candidate - self.in_deg[(candidate - 1) as usize];
        let delta = if reach <= i { candidate } else { prev.delta };

        let row = FisherRow::new(i, in_deg, out_deg_inf, delta, eps);
        self.delta_pointer = delta;
        self.last = Some(row);
        Ok(row)
    }
}

/// Rows `1..=n`.
pub fn fisher_table(n: u64) -> Result<Vec<FisherRow>> {
    if n == 0 {
        return Err(JacoError::vertices_from_one());
    }
    let mut engine = FisherEngine::new();
    let mut rows: Vec<FisherRow> = engine.seed().into_iter().take(n as usize).collect();
    while (rows.len() as u64) < n {
        rows.push(engine.next_row()?);
    }
    Ok(rows)
}

/// `ε(J_n(1))` via `ε(J_n) = ε(J_{n-1}) + d⁻(v_n)`, without keeping the rows.
pub fn edges_recursive(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(JacoError::vertices_from_one());
    }
    if n <= 3 {
        return Ok(SEED_ROWS[(n - 1) as usize].eps);
    }
    let mut engine = FisherEngine::seeded();
    let mut row = SEED_ROWS[2];
    while row.i < n {
        row = engine.next_row()?;
    }
    Ok(row.eps)
}

pub const CSV_HEADER: &str = "i,in_degree,out_degree,delta,edges";

pub fn write_csv<W: Write + ?Sized>(rows: &[FisherRow], out: &mut W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{},{},{}", r.i, r.in_deg, r.out_deg_inf, r.delta, r.eps)?;
    }
    Ok(())
}

/// Right-aligned columns under a `i d- d+ Δ ε` header.
pub fn write_pretty<W: Write + ?Sized>(rows: &[FisherRow], out: &mut W) -> io::Result<()> {
    let header = ["i", "d-", "d+", "Δ", "ε"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [r.i, r.in_deg, r.out_deg_inf, r.delta, r.eps].map(|v| v.to_string())
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |vals: [&str; 5], out: &mut W| -> io::Result<()> {
        let parts: Vec<String> = vals
            .iter()
            .zip(widths)
            .map(|(v, w)| format!("{:>w$}", v, w = w))
            .collect();
        writeln!(out, "{}", parts.join("  "))
    };
    line(header, out)?;
    for row in &cells {
        line(
            [&row[0], &row[1], &row[2], &row[3], &row[4]].map(String::as_str),
            out,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        let s = seed_rows();
        assert_eq!(s[0], FisherRow::new(1, 0, 1, 0, 0));
        assert_eq!(s[1], FisherRow::new(2, 1, 1, 1, 1));
        assert_eq!(s[2], FisherRow::new(3, 1, 2, 2, 2));
    }

    #[test]
    fn unseeded_engine_errors() {
        assert_eq!(FisherEngine::new().next_row(), Err(JacoError::NotSeeded));
    }

    #[test]
    fn next_rows() {
        let mut e = FisherEngine::seeded();
        assert_eq!(e.next_row().unwrap(), FisherRow::new(4, 1, 3, 2, 3));
        let rows = fisher_table(35).unwrap();
        assert_eq!(rows[20], FisherRow::new(21, 8, 13, 13, 86));
        assert_eq!(rows[34], FisherRow::new(35, 13, 22, 21, 236));
    }

    #[test]
    fn pointer_tracks_last_delta() {
        let mut e = FisherEngine::seeded();
        for _ in 0..100 {
            let r = e.next_row().unwrap();
            assert_eq!(e.delta_pointer(), r.delta);
        }
    }

    #[test]
    fn table_prefixes() {
        assert_eq!(fisher_table(1).unwrap(), vec![FisherRow::new(1, 0, 1, 0, 0)]);
        assert_eq!(fisher_table(3).unwrap().len(), 3);
        assert!(fisher_table(0).is_err());
    }

    #[test]
    fn recursive_edges() {
        assert_eq!(edges_recursive(15).unwrap(), 44);
        assert_eq!(edges_recursive(1).unwrap(), 0);
        assert_eq!(edges_recursive(31).unwrap(), 186);
        assert!(edges_recursive(0).is_err());
        for (k, r) in fisher_table(60).unwrap().iter().enumerate() {
            assert_eq!(edges_recursive(k as u64 + 1).unwrap(), r.eps);
        }
    }

    #[test]
    fn renderers() {
        let rows = fisher_table(2).unwrap();
        let mut csv = Vec::new();
        write_csv(&rows, &mut csv).unwrap();
        assert_eq!(
            String::from_utf8(csv).unwrap(),
            "i,in_degree,out_degree,delta,edges\n1,0,1,0,0\n2,1,1,1,1\n"
        );
        let mut pretty = Vec::new();
        write_pretty(&fisher_table(10).unwrap(), &mut pretty).unwrap();
        let text = String::from_utf8(pretty).unwrap();
        assert_eq!(text.lines().next().unwrap(), " i  d-  d+  Δ   ε");
        assert_eq!(text.lines().last().unwrap(), "10   4   6  6  20");
    }
}
