#![allow(dead_code)]

/// Published CCR scores, rows 1 to 21 of the bank panel.
pub const CCR_SCORES: [f64; 21] = [
    0.876, 0.911, 0.798, 0.905, 1.000, 0.869, 1.000, 0.952, 1.000, 0.744, 1.000, 0.962, 1.000,
    1.000, 1.000, 0.985, 0.926, 0.927, 0.900, 0.812, 1.000,
];

/// Ratios of every bank under Yokohama's printed CCR weights.
pub const REPLAY_CCR: [f64; 21] = [
    0.182, 0.327, 0.203, 0.669, 0.179, 0.418, 0.054, 0.310, 1.000, 0.473, 0.172, 0.559, 1.000,
    0.748, 0.514, 0.172, 0.423, 0.341, 0.223, 0.325, 0.673,
];

/// Ratios under Yokohama's printed rescaled super-efficiency weights.
pub const REPLAY_SUPER: [f64; 21] = [
    0.362, 0.547, 0.382, 0.720, 0.370, 0.584, 0.109, 0.480, 1.000, 0.599, 0.294, 0.526, 0.720,
    0.572, 0.552, 0.233, 0.492, 0.507, 0.279, 0.394, 0.600,
];

pub const PRINTED_CCR_U: [f64; 2] = [8.35e-5, 3.83e-7];
pub const PRINTED_CCR_V: [f64; 2] = [0.0, 4.83e-6];
pub const PRINTED_SUPER_U: [f64; 2] = [3.28e-5, 2.88e-6];
pub const PRINTED_SUPER_V: [f64; 2] = [0.0, 4.83e-6];

pub const YOKOHAMA: &str = "The Bank of Yokohama";
pub const YOKOHAMA_T_STAR: f64 = 0.720;
pub const SECOND_BEST: [&str; 2] = ["Resona Bank", "Hokuyo Bank (North Pacific Bank)"];
pub const EFFICIENT_BANKS: usize = 8;

pub const FIXTURE_SHA256: &str = "6546ff85828b668fdfcbc9935ae73e9d344c5c89713e0c033ab944978cb110b8";
