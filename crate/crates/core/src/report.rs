//! Running the edge-count methods side by side.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::fisher::edges_recursive;
use crate::graph::JacoGraph;
use crate::reconstruction::edges_reconstruction;
use crate::zeckendorf::edges_zeckendorf;

/// Largest `n` the quadratic oracle runs for unless forced.
pub const ORACLE_MAX_N: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Fisher,
    Zeckendorf,
    Reconstruction,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Oracle,
        Method::Fisher,
        Method::Zeckendorf,
        Method::Reconstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Fisher => "fisher",
            Method::Zeckendorf => "zeckendorf",
            Method::Reconstruction => "reconstruction",
        }
    }

    pub fn edges(self, n: u64) -> Result<u64> {
        match self {
            Method::Oracle => Ok(JacoGraph::build(n)?.edge_count()),
            Method::Fisher => edges_recursive(n),
            Method::Zeckendorf => edges_zeckendorf(n),
            Method::Reconstruction => edges_reconstruction(n),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn nanos<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_nanos().min(u64::MAX as u128) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodResult {
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<u64>,
    #[serde(rename = "elapsed_ns", serialize_with = "nanos")]
    pub elapsed: Duration,
    /// Why the method did not produce a value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCountReport {
    pub n: u64,
    pub results: Vec<MethodResult>,
    pub agree: bool,
}

impl EdgeCountReport {
    /// Runs `methods` in order. The oracle is skipped above [`ORACLE_MAX_N`]
    /// unless `force` is set; a method that errors is recorded as skipped
    /// with the error text.
    pub fn run(n: u64, methods: &[Method], force: bool) -> Self {
        let results = methods
            .iter()
            .map(|&method| {
                if method == Method::Oracle && n > ORACLE_MAX_N && !force {
                    return MethodResult {
                        method,
                        edges: None,
                        elapsed: Duration::ZERO,
                        skipped: Some(format!(
                            "oracle is quadratic; n > {ORACLE_MAX_N} needs --force"
                        )),
                    };
                }
                let start = Instant::now();
                let outcome = method.edges(n);
                let elapsed = start.elapsed();
                match outcome {
                    Ok(e) => MethodResult {
                        method,
                        edges: Some(e),
                        elapsed,
                        skipped: None,
                    },
                    Err(err) => MethodResult {
                        method,
                        edges: None,
                        elapsed,
                        skipped: Some(err.to_string()),
                    },
                }
            })
            .collect::<Vec<_>>();
        let agree = agreement(&results);
        EdgeCountReport { n, results, agree }
    }

    pub fn edges(&self, method: Method) -> Option<u64> {
        self.results
            .iter()
            .find(|r| r.method == method)
            .and_then(|r| r.edges)
    }

    /// True when some method errored for a reason other than the oracle guard.
    pub fn has_failure(&self) -> bool {
        self.results
            .iter()
            .any(|r| r.edges.is_none() && !(r.method == Method::Oracle && self.n > ORACLE_MAX_N))
    }
}

/// All present values are equal. A report with no values agrees vacuously.
fn agreement(results: &[MethodResult]) -> bool {
    let mut values = results.iter().filter_map(|r| r.edges);
    match values.next() {
        Some(first) => values.all(|v| v == first),
        None => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_methods_agree_on_example() {
        let r = EdgeCountReport::run(15, &Method::ALL, false);
        assert!(r.agree);
        for m in Method::ALL {
            assert_eq!(r.edges(m), Some(44));
        }
        assert!(!r.has_failure());
    }

    #[test]
    fn oracle_guard() {
        let r = EdgeCountReport::run(ORACLE_MAX_N + 1, &[Method::Oracle], false);
        assert_eq!(r.edges(Method::Oracle), None);
        assert!(r.results[0].skipped.as_deref().unwrap().contains("--force"));
        assert!(r.agree);
        assert!(!r.has_failure());
    }

    #[test]
    fn disagreement_detected() {
        let mk = |method, edges| MethodResult {
            method,
            edges: Some(edges),
            elapsed: Duration::ZERO,
            skipped: None,
        };
        assert!(!agreement(&[mk(Method::Oracle, 1), mk(Method::Fisher, 2)]));
        assert!(agreement(&[mk(Method::Oracle, 3), mk(Method::Fisher, 3)]));
    }

    #[test]
    fn json_shape() {
        let r = EdgeCountReport::run(1, &[Method::Fisher], false);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["n"], 1);
        assert_eq!(v["results"][0]["method"], "fisher");
        assert_eq!(v["results"][0]["edges"], 0);
        assert!(v["results"][0]["elapsed_ns"].is_u64());
        assert_eq!(v["agree"], true);
    }
}
