//! Train the brickwall preparation for a range of grid sizes and seeds.
//!
//! cargo run --release -p qwave --example prep_scan -- 2 7 3 300

use std::time::Instant;

use qwave::prep::{optimize, ricker_target, BrickwallAnsatz, GridSpec, LbfgsConfig, OptimizerConfig, RickerParams};

fn main() -> qwave::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (lo, hi, seeds, iters) = match args.as_slice() {
        [a, b, c, d] => (*a, *b, *c, *d),
        _ => (2, 6, 3, 300),
    };
    for n in lo..=hi {
        let target = ricker_target(&GridSpec::new(n)?, &RickerParams::default())?;
        let ansatz = BrickwallAnsatz::new(n + 1)?;
        let mut infs = Vec::new();
        let start = Instant::now();
        for seed in 0..seeds as u64 {
            let cfg = OptimizerConfig {
                seed,
                lbfgs: LbfgsConfig {
                    max_iters: iters,
                    ..LbfgsConfig::default()
                },
                ..OptimizerConfig::default()
            };
            let r = optimize(&ansatz, &target, &cfg)?;
            infs.push(r.infidelity);
        }
        let mean = infs.iter().sum::<f64>() / infs.len() as f64;
        println!(
            "n={n} params={} mean={mean:.3e} runs={:?} {:.1}s",
            ansatz.num_params(),
            infs,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
