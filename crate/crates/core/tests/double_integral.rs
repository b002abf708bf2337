use polylog_core::arith::{ratio, BigRat};
use polylog_core::linforms::coeffs_log_dilog;
use polylog_core::numerics::{constant, double_integral, polylog, remainder, Constant};
use num_traits::ToPrimitive;

fn to_f64(q: &BigRat) -> f64 {
    q.to_f64().unwrap()
}

fn form_side(n: usize, z: &BigRat) -> f64 {
    let row = coeffs_log_dilog(n, z).unwrap();
    let r = remainder(&row, 60).unwrap();
    r.r_tilde.unwrap().to_f64() - r.r.unwrap().to_f64() * to_f64(z).ln()
}

#[test]
fn beukers_integral() {
    let v = double_integral(0, &ratio(1, 1), 10).unwrap();
    assert!((v - constant(Constant::Zeta2, 20).to_f64()).abs() < 1e-9);
}

#[test]
fn trivial_index_closed_form() {
    // ∬ dx dy / (1 - x + zxy) = (Li_2(z) + log z · log(1 - z)) / z.
    let z = ratio(1, 2);
    let li2 = polylog(2, &z, 20).unwrap().to_f64();
    let l = std::f64::consts::LN_2;
    let v = double_integral(0, &z, 10).unwrap();
    assert!((v - (li2 + l * l) / 0.5).abs() < 1e-9);
}

#[test]
fn integral_carries_power_of_z() {
    for z in [ratio(1, 2), ratio(1, 3), ratio(3, 4)] {
        let zf = to_f64(&z);
        for n in 0..=4 {
            let v = double_integral(n, &z, 11).unwrap();
            let want = form_side(n, &z) / zf.powi(n as i32 + 1);
            assert!((v - want).abs() < 1e-9, "z={z} n={n}: {v} vs {want}");
        }
    }
}
