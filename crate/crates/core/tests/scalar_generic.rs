//! Single-precision instantiation of the generic core.

use entvol::algebra::generate_basis;
use entvol::bloch::{bell_density, coherence_vector, is_pure};
use entvol::entangle::{ppt_report, tr_rhod_sq_su4};
use entvol::euler::{compose_unitary, rho_d_su4, su4_euler};
use entvol::volume::{entangling_volume, fs_pullback_density, Chart};
use entvol::Group;

#[test]
fn f32_pipeline_works_at_reduced_tolerance() {
    let basis = generate_basis::<f32>(4).unwrap();
    let rho = bell_density::<f32>(1).unwrap();
    let n = coherence_vector(&rho, &basis).unwrap();
    assert!((n.component(3) - 1.0 / 6.0_f32.sqrt()).abs() < 1e-6);
    assert!(is_pure(&n, &basis, 1e-4).unwrap());

    let report = ppt_report(&rho, 1e-5_f32).unwrap();
    assert!(report.entangled);
    assert!((report.negativity - 0.5).abs() < 1e-5);

    let mut alpha = [0.0_f32; 15];
    alpha[5] = std::f32::consts::FRAC_PI_4;
    let u = compose_unitary(&su4_euler(&alpha).unwrap(), &basis).unwrap();
    assert!(u.is_unitary(1e-5));

    let theta = [0.7_f32, 1.1, 0.4];
    let direct = rho_d_su4(&theta).unwrap().purity();
    assert!((tr_rhod_sq_su4(&theta).unwrap() - direct).abs() < 1e-5);

    assert!((entangling_volume::<f32>(Group::Su4) - std::f32::consts::PI / 24.0).abs() < 1e-7);

    let chart = Chart::<f32>::cp1();
    let d = fs_pullback_density(&chart, &[0.8_f32, 2.0]).unwrap();
    assert!((d - 0.8_f32.cos() * 0.8_f32.sin()).abs() < 1e-2);
}
