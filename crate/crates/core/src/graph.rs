//! Brute-force construction of `J_n(1)` straight from the arc rule.
//!
//! Nothing here consults the row engine or the Zeckendorf machinery: the
//! in-degrees are obtained by actually laying down every arc, so this module
//! is the independent witness the faster methods are checked against.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{JacoError, Result};

/// A finite Jaco graph `J_n(1)`.
///
/// The out-neighbours of `v_i` are always the contiguous run
/// `v_{i+1}..=v_{out_hi(i)}`, so the arc set is stored in O(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoGraph {
    n: u64,
    // Both vectors are indexed by `i - 1`.
    in_deg: Vec<u64>,
    out_hi: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeRecord {
    pub index: u64,
    pub in_degree: u64,
    /// Out-degree after the vertices beyond `n` are cut away.
    pub out_degree_finite: u64,
    /// Out-degree in the infinite graph, `index - in_degree`.
    pub out_degree_infinite: u64,
    pub total_degree: u64,
}

/// Maximum degree and the vertices attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Jaconian {
    pub delta: u64,
    /// Smallest vertex index attaining `delta`.
    pub prime_index: u64,
    pub set: Vec<u64>,
}

/// The Hope graph: the subgraph induced by the vertices after the prime
/// Jaconian vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HopeView {
    pub start: u64,
    pub vertex_count: u64,
    pub induced_edge_count: u64,
}

impl JacoGraph {
    /// Builds `J_n(1)` by laying down arcs vertex by vertex.
    ///
    /// When `v_i` is reached every possible tail `v_{i'}`, `i' < i`, has
    /// already placed its arcs, so `in_deg[i]` is final and `v_i`'s own
    /// arcs can be placed. Runs in O(n + ε(J_n(1))) = O(n²).
    pub fn build(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(JacoError::vertices_from_one());
        }
        let len = usize::try_from(n).map_err(|_| JacoError::Overflow("graph size"))?;
        let mut in_deg = vec![0u64; len];
        let mut out_hi = vec![0u64; len];
        for i in 1..=n {
            let reach = (2 * i - in_deg[(i - 1) as usize]).min(n);
            out_hi[(i - 1) as usize] = reach;
            for j in (i + 1)..=reach {
                in_deg[(j - 1) as usize] += 1;
            }
        }
        Ok(JacoGraph { n, in_deg, out_hi })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    fn check_vertex(&self, vertex: u64) -> Result<usize> {
        if vertex == 0 || vertex > self.n {
            return Err(JacoError::VertexOutOfRange { vertex, n: self.n });
        }
        Ok((vertex - 1) as usize)
    }

    pub fn in_degree(&self, vertex: u64) -> Result<u64> {
        Ok(self.in_deg[self.check_vertex(vertex)?])
    }

    /// Highest head of an arc leaving `vertex`; `<= vertex` means no arcs.
    pub fn out_hi(&self, vertex: u64) -> Result<u64> {
        Ok(self.out_hi[self.check_vertex(vertex)?])
    }

    /// In-degrees of `v_1..=v_n`, in order.
    pub fn in_degrees(&self) -> &[u64] {
        &self.in_deg
    }

    pub fn arc_exists(&self, tail: u64, head: u64) -> Result<bool> {
        let t = self.check_vertex(tail)?;
        self.check_vertex(head)?;
        Ok(tail < head && head <= self.out_hi[t])
    }

    /// All arcs `(i, j)`, ascending by `(i, j)`.
    pub fn arcs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.out_hi
            .iter()
            .enumerate()
            .flat_map(|(k, &hi)| {
                let i = k as u64 + 1;
                ((i + 1)..=hi).map(move |j| (i, j))
            })
    }

    fn out_finite(&self, k: usize) -> u64 {
        self.out_hi[k].saturating_sub(k as u64 + 1)
    }

    pub fn degree_profile(&self) -> Vec<DegreeRecord> {
        (0..self.in_deg.len())
            .map(|k| {
                let index = k as u64 + 1;
                let in_degree = self.in_deg[k];
                let out_degree_finite = self.out_finite(k);
                DegreeRecord {
                    index,
                    in_degree,
                    out_degree_finite,
                    out_degree_infinite: index - in_degree,
                    total_degree: in_degree + out_degree_finite,
                }
            })
            .collect()
    }

    /// `ε(J_n(1))` as the sum of in-degrees.
    pub fn edge_count(&self) -> u64 {
        self.in_deg.iter().sum()
    }

    /// Sum of total degrees; always `2 ε`.
    pub fn degree_sum(&self) -> u64 {
        (0..self.in_deg.len())
            .map(|k| self.in_deg[k] + self.out_finite(k))
            .sum()
    }

    /// Maximum degree, taken as 0 for `J_1` where the lone vertex has no arcs.
    pub fn jaconian(&self) -> Jaconian {
        let degrees: Vec<u64> = (0..self.in_deg.len())
            .map(|k| self.in_deg[k] + self.out_finite(k))
            .collect();
        let delta = degrees.iter().copied().max().unwrap_or(0);
        let set: Vec<u64> = degrees
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == delta)
            .map(|(k, _)| k as u64 + 1)
            .collect();
        Jaconian {
            delta,
            prime_index: set[0],
            set,
        }
    }

    pub fn hope_view(&self) -> HopeView {
        // Δ(J_1) = 0 places the cut before v_1, so the Hope graph of J_1 is
        // v_1 itself and its order matches d⁻(v_2) = 1.
        let start = if self.n == 1 {
            1
        } else {
            self.jaconian().prime_index + 1
        };
        let induced_edge_count = ((start - 1) as usize..self.in_deg.len())
            .map(|k| self.out_finite(k))
            .sum();
        HopeView {
            start,
            vertex_count: self.n + 1 - start,
            induced_edge_count,
        }
    }

    /// One arc per line as `"i j"`, ascending.
    pub fn write_edge_list<W: Write + ?Sized>(&self, out: &mut W) -> io::Result<()> {
        for (i, j) in self.arcs() {
            writeln!(out, "{i} {j}")?;
        }
        Ok(())
    }

    pub fn write_dot<W: Write + ?Sized>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "digraph J_{} {{", self.n)?;
        for i in 1..=self.n {
            writeln!(out, "  v{i};")?;
        }
        for (i, j) in self.arcs() {
            writeln!(out, "  v{i} -> v{j};")?;
        }
        writeln!(out, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u64) -> JacoGraph {
        JacoGraph::build(n).unwrap()
    }

    #[test]
    fn zero_vertices_rejected() {
        assert_eq!(JacoGraph::build(0), Err(JacoError::vertices_from_one()));
    }

    #[test]
    fn small_graphs_match_table() {
        let one = g(1);
        assert_eq!(one.in_degrees(), &[0]);
        assert_eq!(one.arcs().count(), 0);
        assert_eq!(g(5).in_degrees(), &[0, 1, 1, 1, 2]);

        let four = g(4);
        assert_eq!(four.arcs().collect::<Vec<_>>(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(four.edge_count(), 3);
    }

    #[test]
    fn arc_queries() {
        let five = g(5);
        assert!(five.arc_exists(3, 4).unwrap());
        assert!(!five.arc_exists(2, 4).unwrap());
        assert!(!five.arc_exists(4, 4).unwrap());
        assert!(!five.arc_exists(4, 3).unwrap());
        assert_eq!(
            five.arc_exists(0, 2),
            Err(JacoError::VertexOutOfRange { vertex: 0, n: 5 })
        );
        assert_eq!(
            five.arc_exists(1, 6),
            Err(JacoError::VertexOutOfRange { vertex: 6, n: 5 })
        );
    }

    #[test]
    fn degree_profile_rows() {
        let p35 = g(35).degree_profile();
        assert_eq!(p35[34].in_degree, 13);
        assert_eq!(p35[34].out_degree_infinite, 22);

        let p31 = g(31).degree_profile();
        assert_eq!(p31[30].in_degree, 12);
        assert_eq!(p31[30].out_degree_finite, 0);
        assert_eq!(p31[30].total_degree, 12);

        let p1 = g(1).degree_profile();
        assert_eq!(
            p1[0],
            DegreeRecord {
                index: 1,
                in_degree: 0,
                out_degree_finite: 0,
                out_degree_infinite: 1,
                total_degree: 0
            }
        );
    }

    #[test]
    fn edge_counts() {
        assert_eq!(g(15).edge_count(), 44);
        assert_eq!(g(1).edge_count(), 0);
        assert_eq!(g(35).edge_count(), 236);
        assert_eq!(g(35).degree_sum(), 2 * 236);
    }

    #[test]
    fn jaconian_vertices() {
        assert_eq!(g(20).jaconian().delta, 12);
        assert_eq!(g(1).jaconian().delta, 0);
        let j17 = g(17).jaconian();
        assert_eq!(j17.set, vec![10, 11]);
        assert_eq!(j17.prime_index, 10);
        assert_eq!(j17.delta, 10);
    }

    #[test]
    fn hope_views() {
        assert_eq!(g(17).hope_view().vertex_count, 7);
        assert_eq!(g(4).hope_view().vertex_count, 2);
        let two = g(2).hope_view();
        assert_eq!((two.start, two.vertex_count), (2, 1));
        let one = g(1).hope_view();
        assert_eq!((one.start, one.vertex_count, one.induced_edge_count), (1, 1, 0));
        // J_17: v11..v17; arcs among them come from v11..v16.
        let expect: u64 = g(17)
            .arcs()
            .filter(|&(i, _)| i >= 11)
            .count() as u64;
        assert_eq!(g(17).hope_view().induced_edge_count, expect);
    }

    #[test]
    fn exports() {
        let mut buf = Vec::new();
        g(4).write_edge_list(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "1 2\n2 3\n3 4\n");

        let mut dot = Vec::new();
        g(3).write_dot(&mut dot).unwrap();
        assert_eq!(
            String::from_utf8(dot).unwrap(),
            "digraph J_3 {\n  v1;\n  v2;\n  v3;\n  v1 -> v2;\n  v2 -> v3;\n}\n"
        );

        let mut empty = Vec::new();
        g(1).write_edge_list(&mut empty).unwrap();
        assert!(empty.is_empty());
    }
}
