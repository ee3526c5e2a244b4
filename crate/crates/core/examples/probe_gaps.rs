use esic::experiments::{run_ensemble_fractions, wilson_interval};
use esic::sic::default_sics;
use esic::states::{EnsembleKind, EnsembleSpec};
use std::time::Instant;

fn main() {
    let sics = default_sics();
    for (d, n) in [(2usize, 30000usize), (3, 30000), (4, 15000), (5, 6000)] {
        let t = Instant::now();
        let spec = EnsembleSpec::new(EnsembleKind::HilbertSchmidt, (d, d), n, 123).unwrap();
        let out = run_ensemble_fractions(&[spec], sics).unwrap();
        let r = &out.report.rows[0];
        let gap = r.esic_fraction - r.ccnr_fraction;
        let se = (gap.abs().max(0.001) * (1.0 - gap.abs()) / n as f64).sqrt();
        let (lo, hi) = wilson_interval(r.esic_detected - r.ccnr_detected, n);
        println!(
            "hs({d}x{d}) n={n}: ccnr {:.3}% esic {:.3}% gap {:.3}pp (se~{:.3}pp, wilson [{:.3},{:.3}]pp) [{:.1?}]",
            100.0 * r.ccnr_fraction, 100.0 * r.esic_fraction, 100.0 * gap,
            100.0 * se, 100.0 * lo, 100.0 * hi, t.elapsed()
        );
    }
}
