use esic::experiments::{run_boundary_curves, BoundaryConfig};
use esic::sic::default_sics;
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let report = run_boundary_curves(&BoundaryConfig::default(), default_sics()).unwrap();
    let mut max_sep: f64 = 0.0;
    let mut both = 0;
    let mut viol = 0;
    for row in &report.rows {
        if let (Some(qc), Some(qe)) = (row.q_ccnr, row.q_esic) {
            both += 1;
            max_sep = max_sep.max(qc - qe);
            if qe > qc + 1e-9 {
                viol += 1;
            }
        }
    }
    println!("49-point grid: {both} points with both curves, max q_ccnr - q_esic = {max_sep:.6}, violations {viol}");
    for row in report.rows.iter().step_by(8) {
        println!("x={:.3}: q_ccnr {:?} q_esic {:?}", row.x, row.q_ccnr, row.q_esic);
    }
    println!("took {:.2?}", t.elapsed());
}
