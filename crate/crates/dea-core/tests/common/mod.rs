#![allow(dead_code)]

use dea_core::models::Dataset;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Panel with `n ∈ [2, max_n]`, `l, m ∈ [1, 3]` and entries uniform in [1, 10].
pub fn random_panel(rng: &mut impl Rng, max_n: usize) -> Dataset {
    let n = rng.gen_range(2..=max_n);
    let l = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=3);
    let mut matrix = |rows: usize| -> Vec<Vec<f64>> {
        (0..rows)
            .map(|_| (0..n).map(|_| rng.gen_range(1.0..10.0)).collect())
            .collect()
    };
    let inputs = matrix(l);
    let outputs = matrix(m);
    Dataset::new(names(n), inputs, outputs).unwrap()
}

/// One input, one output.
pub fn single_ratio_panel(rng: &mut impl Rng, n: usize) -> Dataset {
    let x = (0..n).map(|_| rng.gen_range(1.0..10.0)).collect();
    let y = (0..n).map(|_| rng.gen_range(1.0..10.0)).collect();
    Dataset::new(names(n), vec![x], vec![y]).unwrap()
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("DMU{}", i + 1)).collect()
}

pub fn panel(inputs: Vec<Vec<f64>>, outputs: Vec<Vec<f64>>) -> Dataset {
    let n = inputs[0].len();
    Dataset::new(names(n), inputs, outputs).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Twins 0 and 1 plus a dominated DMU.
pub fn twins() -> Dataset {
    panel(
        vec![vec![1.0, 1.0, 2.0], vec![1.0, 1.0, 2.0]],
        vec![vec![1.0, 1.0, 1.0]],
    )
}

/// DMU 1 has DMU 0's output with a strictly larger second input.
pub fn weakly_efficient() -> Dataset {
    panel(
        vec![vec![1.0, 1.0, 2.0], vec![1.0, 2.0, 1.0]],
        vec![vec![1.0, 1.0, 1.0]],
    )
}

/// DMU 2 is the midpoint of DMUs 0 and 1 (equal inputs).
pub fn midpoint() -> Dataset {
    panel(
        vec![vec![1.0, 1.0, 1.0]],
        vec![vec![3.0, 1.0, 2.0], vec![1.0, 3.0, 2.0]],
    )
}
