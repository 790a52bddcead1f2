//! Shared setup for the criterion benchmarks: one mid-sized synthetic
//! benchmark configuration so every bench exercises the same workload.

use sgi_core::{AttributeMode, Benchmark, BenchmarkConfig, ContextMotif, GroupMotif};

/// A 500-node separable benchmark with a dozen planted cliques.
pub fn standard_config(seed: u64) -> BenchmarkConfig {
    BenchmarkConfig {
        background_nodes: 500,
        background_edge_density: 3.0,
        groups: 12,
        group_size: (4, 8),
        motif: GroupMotif::Clique,
        context: ContextMotif::Square,
        overlap_fraction: 0.0,
        multiplicity: (2, 4),
        attributes: AttributeMode::Separable,
        training_samples: 3,
        seed,
    }
}

pub fn standard_benchmark(seed: u64) -> Benchmark {
    sgi_core::generate_benchmark(&standard_config(seed)).expect("valid benchmark config")
}

#[cfg(test)]
mod tests {
    #[test]
    fn standard_benchmark_builds() {
        let bench = super::standard_benchmark(1);
        assert_eq!(bench.truth.len(), 12);
    }
}
