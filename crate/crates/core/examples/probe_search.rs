use esic::sic::{fiducial_search, sic_from_fiducial, verify_sic};
use std::time::Instant;

fn main() {
    for d in 2..=7usize {
        let t = Instant::now();
        match fiducial_search(d, 0x51c_f1d, 1e-9) {
            Ok(fid) => {
                let povm = sic_from_fiducial(&fid).unwrap();
                let v = verify_sic(&povm);
                println!(
                    "d={d}: residual {:.3e}, completeness {:.3e}, {:.2?}",
                    v.fidelity_residual,
                    v.completeness_residual,
                    t.elapsed()
                );
            }
            Err(e) => println!("d={d}: FAILED {e} after {:.2?}", t.elapsed()),
        }
    }
}
