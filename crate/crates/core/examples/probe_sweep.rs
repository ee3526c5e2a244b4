use esic::experiments::{run_ensemble_fractions, sweep_specs, chessboard_spec};
use esic::sic::default_sics;
use std::time::Instant;

fn main() {
    let sics = default_sics();
    let t = Instant::now();
    let out = run_ensemble_fractions(&sweep_specs(800, 42, 7), sics).unwrap();
    for r in &out.report.rows {
        println!(
            "{}: ppt {:.2}% ccnr {:.2}% esic {:.2}% gap {:.2}pp",
            r.ensemble,
            100.0 * r.ppt_fraction,
            100.0 * r.ccnr_fraction,
            100.0 * r.esic_fraction,
            100.0 * (r.esic_fraction - r.ccnr_fraction)
        );
    }
    println!("sweep 800 took {:.2?}", t.elapsed());

    let t = Instant::now();
    let out = run_ensemble_fractions(&[chessboard_spec(20000, 7)], sics).unwrap();
    let r = &out.report.rows[0];
    println!(
        "chessboard 20k: ccnr {:.3}% esic {:.3}% (paper 18.36 / 20.37) [{:.2?}]",
        100.0 * r.ccnr_fraction, 100.0 * r.esic_fraction, t.elapsed()
    );
}
