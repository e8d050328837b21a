//! Recursive stratification: restrict to each excluded prime and repeat.
//!
//! Nodes are identified by their generic point, a prime of the original
//! ring. The stratum of a node is the closed set of its generic point minus
//! the closed sets of its children.

use std::collections::VecDeque;

use serde::Serialize;

use super::{dec_ex, Discriminant};
use crate::analysis::Analysis;
use crate::arith::PrimeSpec;

#[derive(Clone, Debug, Serialize)]
pub struct StratumNode {
    pub generic_point: String,
    #[serde(skip)]
    pub prime: PrimeSpec,
    pub ring: String,
    pub algebra: String,
    pub discriminant: Option<Discriminant>,
    /// Why this node could not be analysed, if it could not.
    pub unresolved: Option<String>,
    /// Indices of child nodes.
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stratum {
    pub generic_point: String,
    pub description: String,
    pub unresolved: bool,
    /// Components of the node's discriminant whose status is unknown.
    pub unverified: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratificationTree {
    pub algebra: String,
    pub ring: String,
    pub nodes: Vec<StratumNode>,
}

impl StratificationTree {
    pub fn root(&self) -> &StratumNode {
        &self.nodes[0]
    }

    /// Flat table of strata, one per node.
    pub fn strata(&self) -> Vec<Stratum> {
        self.nodes
            .iter()
            .map(|n| {
                let base = if n.prime.is_generic() {
                    format!("Spec {}", self.ring)
                } else {
                    format!("V{}", n.generic_point)
                };
                let removed: Vec<String> = n.children.iter().map(|&c| format!("V{}", self.nodes[c].generic_point)).collect();
                let description = if removed.is_empty() {
                    base
                } else {
                    format!("{base} \\ ({})", removed.join(" u "))
                };
                Stratum {
                    generic_point: n.generic_point.clone(),
                    description,
                    unresolved: n.unresolved.is_some(),
                    unverified: n
                        .discriminant
                        .as_ref()
                        .map(|d| d.unknown().iter().map(|c| c.prime.clone()).collect())
                        .unwrap_or_default(),
                }
            })
            .collect()
    }

    /// Indices of the strata containing `q`; a cover has exactly one.
    pub fn locate(&self, q: &PrimeSpec) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| {
                let n = &self.nodes[i];
                n.prime.is_contained_in(q) && !n.children.iter().any(|&c| self.nodes[c].prime.is_contained_in(q))
            })
            .collect()
    }
}

fn node(prime: PrimeSpec, ring: String, algebra: String) -> StratumNode {
    StratumNode {
        generic_point: prime.to_string(),
        prime,
        ring,
        algebra,
        discriminant: None,
        unresolved: None,
        children: Vec::new(),
    }
}

/// Stratify `Spec R` by trivial-decomposition loci of the restrictions.
pub fn stratify(an: &Analysis) -> StratificationTree {
    let a = an.algebra();
    let root_ring = a.ring().clone();
    let mut nodes = vec![node(an.generic_prime(), root_ring.to_string(), a.name().to_string())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let xi = nodes[i].prime.clone();
        let (map, local) = if xi.is_generic() {
            (None, None)
        } else {
            match xi.restriction_map() {
                Ok(map) => {
                    let restricted = a.map_ring(&map, &format!("{}|{}", a.name(), xi));
                    nodes[i].ring = map.target().to_string();
                    nodes[i].algebra = restricted.name().to_string();
                    let local = Analysis::new(restricted, an.options());
                    (Some(map), Some(local))
                }
                Err(e) => {
                    nodes[i].unresolved = Some(e.to_string());
                    continue;
                }
            }
        };
        let here = local.as_ref().unwrap_or(an);
        let disc = match dec_ex(here) {
            Ok(d) => d,
            Err(e) => {
                nodes[i].unresolved = Some(e.to_string());
                continue;
            }
        };
        for p in disc.excluded() {
            let global = match &map {
                None => Ok(p.clone()),
                Some(m) => m.lift_prime(&xi, p),
            };
            let global = match global {
                Ok(g) => g,
                Err(e) => {
                    nodes[i].unresolved = Some(format!("cannot lift {p}: {e}"));
                    continue;
                }
            };
            let j = match nodes.iter().position(|n| n.prime == global) {
                Some(j) => j,
                None => {
                    nodes.push(node(global, String::new(), String::new()));
                    queue.push_back(nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            if !nodes[i].children.contains(&j) {
                nodes[i].children.push(j);
            }
        }
        nodes[i].discriminant = Some(disc);
    }
    StratificationTree {
        algebra: a.name().to_string(),
        ring: root_ring.to_string(),
        nodes,
    }
}
