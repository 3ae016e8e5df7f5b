//! Exhaustive runs over every crossed set Φ and every signed-permutation
//! involution of a root system.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::involution::{enumerate_signed_involutions, Involution};
use crate::parabolic::ParabolicCRAlgebra;
use crate::report::{analyze_unchecked, AnalysisReport};
use crate::roots::{RootId, RootSystem};

/// Parallel when the `parallel` feature is on, sequential otherwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Map `items` through `f`, keeping input order.
pub fn map_ordered<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InstanceKey {
    /// Crossed simple roots, as 1-based positions in the concatenated simple basis.
    pub crossed: Vec<usize>,
    /// Position of σ in the involution enumeration.
    pub sigma: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnumeratedInstance {
    pub key: InstanceKey,
    pub report: AnalysisReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub involutions: usize,
    /// Number of instances failing each cross-check; zero entries are kept.
    pub failures: BTreeMap<String, usize>,
    /// First failing instance per cross-check.
    pub first_failure: BTreeMap<String, InstanceKey>,
    /// How often each Levi order occurs.
    pub levi_orders: BTreeMap<String, usize>,
}

impl Summary {
    pub fn total_failures(&self) -> usize {
        self.failures.values().sum()
    }
}

pub struct Enumeration {
    pub rs: Arc<RootSystem>,
    pub involutions: Vec<Involution>,
    pub keys: Vec<InstanceKey>,
}

impl Enumeration {
    /// All Φ ⊆ B and the first `bound` involutions (all when `None`).
    pub fn new(rs: Arc<RootSystem>, bound: Option<usize>) -> Self {
        let mut involutions = enumerate_signed_involutions(&rs);
        if let Some(b) = bound {
            involutions.truncate(b);
        }
        let rank = rs.rank();
        let mut keys = Vec::with_capacity((1 << rank) * involutions.len());
        for mask in 0u64..(1 << rank) {
            let crossed: Vec<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            for sigma in 0..involutions.len() {
                keys.push(InstanceKey { crossed: crossed.clone(), sigma });
            }
        }
        keys.sort();
        Enumeration { rs, involutions, keys }
    }

    pub fn instance(&self, key: &InstanceKey) -> ParabolicCRAlgebra {
        let phi: Vec<RootId> = key.crossed.iter().map(|&i| self.rs.simple_roots()[i - 1]).collect();
        ParabolicCRAlgebra::build(Arc::clone(&self.rs), &phi, self.involutions[key.sigma].clone())
            .expect("enumerated data is valid")
    }

    pub fn run(&self, exec: Execution) -> Vec<EnumeratedInstance> {
        map_ordered(exec, &self.keys, |key| EnumeratedInstance {
            key: key.clone(),
            report: analyze_unchecked(&self.instance(key)),
        })
    }

    pub fn summarize(&self, results: &[EnumeratedInstance]) -> Summary {
        let mut s = Summary { instances: results.len(), involutions: self.involutions.len(), ..Summary::default() };
        for r in results {
            *s.levi_orders.entry(r.report.levi_order.to_string()).or_default() += 1;
            for (name, &ok) in &r.report.cross_checks {
                let count = s.failures.entry(name.clone()).or_default();
                if !ok {
                    *count += 1;
                    s.first_failure.entry(name.clone()).or_insert_with(|| r.key.clone());
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::Order;
    use crate::roots::CartanType;

    #[test]
    fn a1_orders() {
        let rs = Arc::new(RootSystem::build(CartanType::A, 1).unwrap());
        let e = Enumeration::new(rs, None);
        let results = e.run(Execution::Sequential);
        assert_eq!(results.len(), 4);
        for r in &results {
            assert!(matches!(r.report.levi_order, Order::Finite(0) | Order::Finite(1) | Order::Infinite));
        }
        assert_eq!(e.summarize(&results).total_failures(), 0);
    }

    #[test]
    fn bound_caps_involutions() {
        let rs = Arc::new(RootSystem::build(CartanType::B, 2).unwrap());
        let e = Enumeration::new(rs, Some(2));
        assert_eq!(e.involutions.len(), 2);
        assert_eq!(e.keys.len(), 8);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let rs = Arc::new(RootSystem::build(CartanType::A, 2).unwrap());
        let e = Enumeration::new(rs, None);
        let a = serde_json::to_string(&e.run(Execution::Sequential)).unwrap();
        let b = serde_json::to_string(&e.run(Execution::Parallel)).unwrap();
        assert_eq!(a, b);
    }
}
