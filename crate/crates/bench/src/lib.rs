//! Fixed workloads shared by the benchmarks.

use hecke_atlas::corpus::{
    normed_corpus, standard_ambients, standard_inventory, supercuspidal_corpus,
};
use hecke_atlas::weyl::{decoration_assignments, standard_levis, Decoration, LeviDescriptor};
use hecke_atlas::{Inventory, LDParameter};

/// Supercuspidal-shaped parameters of every standard ambient up to `max_dim`.
pub fn supercuspidal_workload(max_dim: u32) -> (Inventory, Vec<LDParameter>) {
    let inv = standard_inventory();
    let params = standard_ambients(max_dim)
        .iter()
        .flat_map(|g| supercuspidal_corpus(&inv, g))
        .collect();
    (inv, params)
}

/// Normed parameters of every standard ambient up to `max_dim`.
pub fn normed_workload(max_dim: u32) -> (Inventory, Vec<LDParameter>) {
    let inv = standard_inventory();
    let params = standard_ambients(max_dim)
        .iter()
        .flat_map(|g| normed_corpus(&inv, g))
        .collect();
    (inv, params)
}

/// Standard Levis of rank `n` with their decorations by at most `labels` labels.
pub fn decorated_levis(n: usize, labels: usize) -> Vec<(LeviDescriptor, Vec<Vec<Decoration>>)> {
    standard_levis(n)
        .into_iter()
        .map(|l| {
            let decs = decoration_assignments(&l, labels);
            (l, decs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_nonempty() {
        assert!(!supercuspidal_workload(6).1.is_empty());
        assert!(!normed_workload(6).1.is_empty());
        assert!(decorated_levis(2, 2).iter().all(|(_, d)| !d.is_empty()));
    }
}
