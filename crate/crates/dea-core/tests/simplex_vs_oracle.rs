use dea_core::lp::oracle::vertex_oracle;
use dea_core::lp::{solve, LinearProgram, Relation, Sense, FEAS_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_lp(rng: &mut ChaCha8Rng) -> LinearProgram {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(0..=8);
    let sense = if rng.gen_bool(0.5) {
        Sense::Maximize
    } else {
        Sense::Minimize
    };
    let mut lp = LinearProgram::new(
        sense,
        (0..n).map(|_| rng.gen_range(-9..=9) as f64).collect(),
    );
    for _ in 0..m {
        let row = (0..n).map(|_| rng.gen_range(-9..=9) as f64).collect();
        let rel = match rng.gen_range(0..3) {
            0 => Relation::Le,
            1 => Relation::Ge,
            _ => Relation::Eq,
        };
        lp.add(row, rel, rng.gen_range(-9..=9) as f64);
    }
    lp
}

#[test]
fn five_hundred_random_programs_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut seen = [0usize; 3];
    for case in 0..500 {
        let lp = random_lp(&mut rng);
        let fast = solve(&lp).unwrap();
        let slow = vertex_oracle(&lp).unwrap();
        assert_eq!(fast.status, slow.status, "case {case}: {lp:?}");
        seen[fast.status as usize] += 1;
        if fast.is_optimal() {
            let (a, b) = (fast.objective.unwrap(), slow.objective.unwrap());
            assert!((a - b).abs() <= FEAS_TOL, "case {case}: {a} vs {b}");
            assert!(lp.max_violation(&fast.primal) <= FEAS_TOL);
            assert!((a - fast.dual_objective(&lp)).abs() <= FEAS_TOL);
            assert!(fast.dual_sign_ok(&lp, FEAS_TOL), "case {case}");
            assert!(fast.dual_feasible(&lp, FEAS_TOL), "case {case}");
        }
    }
    // The generator must exercise every verdict.
    assert!(seen.iter().all(|&c| c > 20), "{seen:?}");
}

#[test]
fn two_variable_example_matches_enumeration() {
    let lp = LinearProgram::maximize(vec![3.0, 2.0])
        .le(vec![1.0, 1.0], 4.0)
        .le(vec![1.0, 3.0], 6.0);
    let oracle = vertex_oracle(&lp).unwrap().objective.unwrap();
    assert_eq!(oracle, 12.0);
    assert!((solve(&lp).unwrap().objective.unwrap() - oracle).abs() <= 1e-12);
}

#[test]
fn degenerate_duplicated_rows_match_enumeration() {
    let lp = LinearProgram::maximize(vec![1.0, 1.0, 1.0])
        .le(vec![1.0, 2.0, 0.0], 0.0)
        .le(vec![1.0, 2.0, 0.0], 0.0)
        .le(vec![1.0, 1.0, 1.0], 3.0)
        .le(vec![1.0, 1.0, 1.0], 3.0)
        .ge(vec![0.0, 0.0, 1.0], 0.0)
        .eq(vec![1.0, -1.0, 0.0], 0.0);
    let fast = solve(&lp).unwrap();
    let slow = vertex_oracle(&lp).unwrap();
    assert!(fast.iterations < dea_core::lp::ITERATION_LIMIT);
    assert!((fast.objective.unwrap() - slow.objective.unwrap()).abs() <= FEAS_TOL);
}

#[test]
fn degenerate_programs_terminate() {
    // Zero right-hand sides everywhere and repeated rows.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let mut lp =
            LinearProgram::maximize((0..n).map(|_| rng.gen_range(-3..=9) as f64).collect());
        for _ in 0..rng.gen_range(1..=4) {
            let row: Vec<f64> = (0..n).map(|_| rng.gen_range(-9..=9) as f64).collect();
            lp.add(row.clone(), Relation::Le, 0.0);
            lp.add(row, Relation::Le, 0.0);
        }
        lp.add(vec![1.0; n], Relation::Le, 1.0);
        let s = solve(&lp).expect("iteration cap hit");
        let o = vertex_oracle(&lp).unwrap();
        assert_eq!(s.status, o.status);
        if s.is_optimal() {
            assert!((s.objective.unwrap() - o.objective.unwrap()).abs() <= FEAS_TOL);
        }
    }
}
