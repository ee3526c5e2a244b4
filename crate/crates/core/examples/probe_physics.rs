use esic::criteria::{ccnr_value, esic_value, evaluate_all, DETECTION_MARGIN};
use esic::experiments::{run_ensemble_fractions, table_one_specs, chessboard_spec};
use esic::sic::default_sics;
use esic::states::{haar_random_pure, white_noise_mix, EnsembleKind, EnsembleSpec};
use esic::linalg::DensityMatrix;
use esic::rng::stream_rng;
use std::time::Instant;

fn main() {
    let sics = default_sics();

    // Pure-state identity at (4,4) with searched SICs.
    let t = Instant::now();
    let p4 = sics.get(4).unwrap();
    let mut max_res: f64 = 0.0;
    for i in 0..200u64 {
        let mut rng = stream_rng(1234, i);
        let psi = haar_random_pure(16, &mut rng);
        let rho = DensityMatrix::pure(&psi).unwrap().with_bipartition(4, 4).unwrap();
        for q in [1.0, 0.5, 0.2] {
            let m = white_noise_mix(&rho, q).unwrap();
            let c = ccnr_value(&m).unwrap().value;
            let p = esic_value(&m, &p4, &p4).unwrap().value;
            max_res = max_res.max(((c - 1.0) - 2.0 * (p - 1.0)).abs());
        }
    }
    println!("identity (4,4) max residual over 200x3: {max_res:.3e}  [{:.2?}]", t.elapsed());

    // Table-I fractions at 2000 samples.
    let t = Instant::now();
    let out = run_ensemble_fractions(&table_one_specs(2000, 42), sics).unwrap();
    for r in &out.report.rows {
        println!(
            "{}: ppt {:.2}% ccnr {:.2}% esic {:.2}% ccnr_not_esic {}",
            r.ensemble, 100.0 * r.ppt_fraction, 100.0 * r.ccnr_fraction,
            100.0 * r.esic_fraction, r.ccnr_not_esic
        );
    }
    println!("table-1 at 2000 took {:.2?}", t.elapsed());

    // Chessboard fractions at 2000 samples.
    let t = Instant::now();
    let out = run_ensemble_fractions(&[chessboard_spec(2000, 42)], sics).unwrap();
    let r = &out.report.rows[0];
    println!(
        "chessboard: ppt {:.2}% ccnr {:.2}% esic {:.2}% ccnr_not_esic {} [{:.2?}]",
        100.0 * r.ppt_fraction, 100.0 * r.ccnr_fraction, 100.0 * r.esic_fraction,
        r.ccnr_not_esic, t.elapsed()
    );

    // d=7 sweep timing: 50 samples.
    let t = Instant::now();
    let spec = EnsembleSpec::new(EnsembleKind::HilbertSchmidt, (7, 7), 50, 1).unwrap();
    let mut det = [0usize; 3];
    for rho in spec.states() {
        let (p, c, e) = evaluate_all(&rho, sics, DETECTION_MARGIN).unwrap();
        det[0] += p.detected as usize;
        det[1] += c.detected as usize;
        det[2] += e.detected as usize;
    }
    println!("hs(7x7) 50 samples: det {:?}, {:.2?} total", det, t.elapsed());
}
