//! Seeded random instances.
//!
//! The stream is xoshiro256++ seeded from the 64-bit seed through SplitMix64
//! (the reference seeding of that generator). Candidate edges are visited for
//! `u` ascending, `v` ascending from `u + 1` (from `u` when loops are allowed),
//! colors ascending; each consumes one output `x` and is kept when
//! `(x >> 11) * 2^-53 < p`.

use dualfvs_core::{Color, EdgeColoredGraph, VertexId};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub n: u32,
    /// At least 1.
    pub h: usize,
    /// In `[0, 1]`.
    pub p: f64,
    pub seed: u64,
    /// Without this flag, self-loops are candidates as well.
    pub simple: bool,
}

/// Vertices `1..=n`. Parallel edges are never drawn.
pub fn generate_instance(cfg: &GeneratorConfig) -> EdgeColoredGraph {
    assert!(cfg.h >= 1, "at least one color");
    assert!((0.0..=1.0).contains(&cfg.p), "probability outside [0, 1]");
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    let mut edges: Vec<(VertexId, VertexId, Color)> = Vec::new();
    for u in 1..=cfg.n {
        let first = if cfg.simple { u + 1 } else { u };
        for v in first..=cfg.n {
            for c in 1..=cfg.h {
                let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                if x < cfg.p {
                    edges.push((u, v, c));
                }
            }
        }
    }
    EdgeColoredGraph::new(cfg.h, 1..=cfg.n, edges).expect("colors and endpoints in range")
}
