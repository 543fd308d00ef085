//! Full verification suite behind `entvol verify`.
//!
//! Ten numbered criteria cover the basis fixture, the Bell-state
//! decompositions and generation paths, the closed-form partial-transpose
//! spectra and determinants, the purity formulas, the feasibility-region
//! soundness scan, the volume chain, the simplex measure, and determinism.
//! The report is plain text with no timestamps, so a fixed seed produces a
//! byte-identical report regardless of thread count.

use std::time::{Duration, Instant};

use entvol::algebra::generate_basis;
use entvol::bloch::{bell_density, coherence_vector};
use entvol::entangle::{
    char_constant_su4_family, epsilon0, ppt_report, pt_eigen_formula_su4, region_scan,
    su4_mixed_region_sin, su4_pt_det, su4_pt_spectrum, tr_rhod_sq_su4, tr_rhod_sq_su6,
};
use entvol::euler::{
    compose_unitary, conjugate, rho_d_su4, rho_d_su6, su4_euler, EulerFactorization,
};
use entvol::sampling::{random_density, sample_region_branch};
use entvol::volume::{
    cpn_volume, entangling_volume, flag_volume_constant, integrate_volume, symplex_bound_upper,
    symplex_factor, Chart, IntegrationMethod,
};
use entvol::{CMatrix64, Group, C64};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::output::fmt_f64;

pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub pass: bool,
    pub annotation: Option<String>,
    pub details: Vec<String>,
}

impl CriterionResult {
    fn new(index: usize, name: &'static str) -> Self {
        Self {
            index,
            name,
            pass: true,
            annotation: None,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.details.push(format!("FAIL: {}", failure()));
        }
    }

    fn note(&mut self, line: String) {
        self.details.push(line);
    }
}

pub struct VerifyReport {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "entvol verification report (seed {})\n\n",
            self.seed
        ));
        for c in &self.criteria {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let annotation = c
                .annotation
                .as_ref()
                .map(|a| format!(" ({a})"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{:2}  {:<42} {}{}\n",
                c.index, c.name, status, annotation
            ));
            for d in &c.details {
                out.push_str(&format!("      {d}\n"));
            }
        }
        let passed = self.criteria.iter().filter(|c| c.pass).count();
        out.push_str(&format!(
            "\n{passed}/{} criteria passed\n",
            self.criteria.len()
        ));
        out
    }
}

pub fn run(seed: u64) -> VerifyReport {
    let criteria = vec![
        basis_fixture(),
        bell_decompositions(),
        bell_generation(),
        closed_form_spectra(),
        determinant_expansion(seed),
        purity_formulas(seed),
        region_soundness(seed),
        volume_chain(seed),
        symplex_measure(seed),
        deterministic_replay(seed),
    ];
    VerifyReport { seed, criteria }
}

fn reference_su4_generators() -> Vec<CMatrix64> {
    let s3 = 1.0 / 3.0_f64.sqrt();
    let s6 = 1.0 / 6.0_f64.sqrt();
    let specs: Vec<Vec<(usize, usize, f64, f64)>> = vec![
        vec![(0, 1, 1.0, 0.0), (1, 0, 1.0, 0.0)],
        vec![(0, 1, 0.0, -1.0), (1, 0, 0.0, 1.0)],
        vec![(0, 0, 1.0, 0.0), (1, 1, -1.0, 0.0)],
        vec![(0, 2, 1.0, 0.0), (2, 0, 1.0, 0.0)],
        vec![(0, 2, 0.0, -1.0), (2, 0, 0.0, 1.0)],
        vec![(1, 2, 1.0, 0.0), (2, 1, 1.0, 0.0)],
        vec![(1, 2, 0.0, -1.0), (2, 1, 0.0, 1.0)],
        vec![(0, 0, s3, 0.0), (1, 1, s3, 0.0), (2, 2, -2.0 * s3, 0.0)],
        vec![(0, 3, 1.0, 0.0), (3, 0, 1.0, 0.0)],
        vec![(0, 3, 0.0, -1.0), (3, 0, 0.0, 1.0)],
        vec![(1, 3, 1.0, 0.0), (3, 1, 1.0, 0.0)],
        vec![(1, 3, 0.0, -1.0), (3, 1, 0.0, 1.0)],
        vec![(2, 3, 1.0, 0.0), (3, 2, 1.0, 0.0)],
        vec![(2, 3, 0.0, -1.0), (3, 2, 0.0, 1.0)],
        vec![
            (0, 0, s6, 0.0),
            (1, 1, s6, 0.0),
            (2, 2, s6, 0.0),
            (3, 3, -3.0 * s6, 0.0),
        ],
    ];
    specs
        .into_iter()
        .map(|entries| {
            let mut m = CMatrix64::zeros(4);
            for (r, c, re, im) in entries {
                m[(r, c)] = C64::new(re, im);
            }
            m
        })
        .collect()
}

fn basis_fixture() -> CriterionResult {
    let mut result = CriterionResult::new(1, "su4 basis reference fixture");
    let start = Instant::now();
    let basis = generate_basis::<f64>(4).unwrap();
    let mut worst = 0.0_f64;
    for (k, reference) in reference_su4_generators().iter().enumerate() {
        let diff = basis.generators()[k].max_abs_diff(reference);
        worst = worst.max(diff);
    }
    result.check(worst <= 1e-14, || {
        format!("entry deviation {} exceeds 1e-14", fmt_f64(worst))
    });
    result.check(start.elapsed() < Duration::from_secs(1), || {
        "construction exceeded 1 s".into()
    });
    result.note(format!("max entry deviation {}", fmt_f64(worst)));
    result
}

fn bell_decompositions() -> CriterionResult {
    let mut result = CriterionResult::new(2, "bell coherence decompositions");
    let basis = generate_basis::<f64>(4).unwrap();
    let r6 = 6.0_f64.sqrt();
    let r23 = (2.0_f64 / 3.0).sqrt();
    let r2 = 2.0_f64.sqrt();
    let expectations: [Vec<(usize, f64)>; 4] = [
        vec![
            (3, 1.0 / r6),
            (8, 1.0 / (3.0 * r2)),
            (9, r23),
            (15, -1.0 / 3.0),
        ],
        vec![
            (3, 1.0 / r6),
            (8, 1.0 / (3.0 * r2)),
            (9, -r23),
            (15, -1.0 / 3.0),
        ],
        vec![
            (3, -1.0 / r6),
            (6, r23),
            (8, -1.0 / (3.0 * r2)),
            (15, 1.0 / 3.0),
        ],
        vec![
            (3, -1.0 / r6),
            (6, -r23),
            (8, -1.0 / (3.0 * r2)),
            (15, 1.0 / 3.0),
        ],
    ];
    let mut worst = 0.0_f64;
    for (k, expected) in expectations.iter().enumerate() {
        let rho = bell_density::<f64>(k + 1).unwrap();
        let n = coherence_vector(&rho, &basis).unwrap();
        let indices: Vec<usize> = expected.iter().map(|(i, _)| *i).collect();
        for (i, v) in expected {
            worst = worst.max((n.component(*i) - v).abs());
        }
        for i in 1..=15 {
            if !indices.contains(&i) {
                worst = worst.max(n.component(i).abs());
            }
        }
    }
    result.check(worst <= 1e-12, || {
        format!("component deviation {}", fmt_f64(worst))
    });
    result.note(format!("max component deviation {}", fmt_f64(worst)));
    result
}

fn bell_generation() -> CriterionResult {
    let mut result = CriterionResult::new(3, "bell generation via euler angles");
    let basis = generate_basis::<f64>(4).unwrap();
    let rho_d = rho_d_su4(&[FRAC_PI_2; 3]).unwrap();
    let apply = |alpha: &[f64; 15]| -> CMatrix64 {
        let u = compose_unitary(&su4_euler(alpha).unwrap(), &basis).unwrap();
        conjugate(&u, &rho_d).unwrap().matrix().clone()
    };

    let mut worst = 0.0_f64;
    // Rotation alone reaches Bell 2.
    let mut alpha = [0.0_f64; 15];
    alpha[5] = FRAC_PI_4;
    worst = worst.max(apply(&alpha).max_abs_diff(bell_density::<f64>(2).unwrap().matrix()));

    // Two rotations reach Bell 3.
    let mut alpha = [0.0_f64; 15];
    alpha[1] = FRAC_PI_2;
    alpha[3] = FRAC_PI_4;
    worst = worst.max(apply(&alpha).max_abs_diff(bell_density::<f64>(3).unwrap().matrix()));

    // Cumulative phase beta in {pi, 3pi, 5pi} flips Bell 2 into Bell 1.
    for beta_parts in [[PI, 0.0, 0.0], [PI, PI, PI], [PI, 2.0 * PI, 2.0 * PI]] {
        let mut alpha = [0.0_f64; 15];
        alpha[0] = beta_parts[0];
        alpha[2] = beta_parts[1];
        alpha[4] = beta_parts[2];
        alpha[5] = FRAC_PI_4;
        worst = worst.max(apply(&alpha).max_abs_diff(bell_density::<f64>(1).unwrap().matrix()));
    }

    // |gamma| = pi flips Bell 3 into Bell 4.
    let mut alpha = [0.0_f64; 15];
    alpha[0] = PI;
    alpha[1] = FRAC_PI_2;
    alpha[2] = 2.0 * PI;
    alpha[3] = FRAC_PI_4;
    worst = worst.max(apply(&alpha).max_abs_diff(bell_density::<f64>(4).unwrap().matrix()));

    result.check(worst <= 1e-12, || {
        format!("entry deviation {}", fmt_f64(worst))
    });
    result.note(format!("max entry deviation {}", fmt_f64(worst)));
    result
}

fn closed_form_spectra() -> CriterionResult {
    let mut result = CriterionResult::new(4, "closed-form pt spectra and determinants");
    let basis = generate_basis::<f64>(4).unwrap();
    let rho_d = rho_d_su4(&[FRAC_PI_2; 3]).unwrap();
    let mut worst_spec = 0.0_f64;
    let mut worst_det = 0.0_f64;
    for k in 1..=100 {
        let angle = k as f64 / 101.0 * FRAC_PI_2;
        let (c, s) = (angle.cos(), angle.sin());
        let mut expected = vec![c * c, -c * s, c * s, s * s];
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for factors in [
            vec![(10usize, angle)],
            vec![(5usize, FRAC_PI_2), (2usize, angle)],
        ] {
            let u = compose_unitary(&EulerFactorization::new(4, factors), &basis).unwrap();
            let rho = conjugate(&u, &rho_d).unwrap();
            let report = ppt_report(&rho, 1e-10).unwrap();
            for (got, want) in report.spectrum.iter().zip(&expected) {
                worst_spec = worst_spec.max((got - want).abs());
            }
            worst_det =
                worst_det.max((report.char_constant - char_constant_su4_family(angle)).abs());
        }
    }
    result.check(worst_spec <= 1e-12, || {
        format!("spectrum deviation {}", fmt_f64(worst_spec))
    });
    result.check(worst_det <= 1e-12, || {
        format!("determinant deviation {}", fmt_f64(worst_det))
    });
    result.note(format!(
        "max spectrum deviation {}, max determinant deviation {}",
        fmt_f64(worst_spec),
        fmt_f64(worst_det)
    ));
    result
}

fn determinant_expansion(seed: u64) -> CriterionResult {
    let mut result = CriterionResult::new(5, "determinant expansion and phase invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51);

    // Nine-term expansion against the determinant on 1000 random points.
    let mut worst_rel = 0.0_f64;
    for _ in 0..1000 {
        let a1 = rng.gen::<f64>() * PI;
        let a2 = rng.gen::<f64>() * FRAC_PI_2;
        let a4 = rng.gen::<f64>() * FRAC_PI_2;
        let a5 = rng.gen::<f64>() * 2.0 * PI;
        let a6 = rng.gen::<f64>() * FRAC_PI_2;
        let mut alpha = [0.0_f64; 15];
        alpha[0] = a1;
        alpha[1] = a2;
        alpha[3] = a4;
        alpha[4] = a5;
        alpha[5] = a6;
        let det = su4_pt_det(&alpha);
        let formula = epsilon0(a2, a4, a6, 2.0 * a1 - a5);
        let scale = det.abs().max(1e-6);
        worst_rel = worst_rel.max((formula.re - det).abs() / scale);
        worst_rel = worst_rel.max(formula.im.abs() / scale);
    }
    result.check(worst_rel <= 1e-10, || {
        format!("relative deviation {}", fmt_f64(worst_rel))
    });
    result.note(format!(
        "expansion vs determinant: worst relative deviation {}",
        fmt_f64(worst_rel)
    ));

    // alpha_3 leaves the spectrum untouched.
    let mut worst_a3 = 0.0_f64;
    for _ in 0..100 {
        let mut alpha = [0.0_f64; 15];
        alpha[0] = rng.gen::<f64>() * PI;
        alpha[1] = rng.gen::<f64>() * FRAC_PI_2;
        alpha[3] = rng.gen::<f64>() * FRAC_PI_2;
        alpha[4] = rng.gen::<f64>() * 2.0 * PI;
        alpha[5] = rng.gen::<f64>() * FRAC_PI_2;
        let reference = su4_pt_spectrum(&alpha);
        for k in 1..=10 {
            alpha[2] = 0.63 * k as f64;
            for (a, b) in su4_pt_spectrum(&alpha).iter().zip(&reference) {
                worst_a3 = worst_a3.max((a - b).abs());
            }
        }
    }
    result.check(worst_a3 <= 1e-11, || {
        format!("alpha_3 spectrum drift {}", fmt_f64(worst_a3))
    });
    result.note(format!("alpha_3 spectrum drift {}", fmt_f64(worst_a3)));

    // The displayed eigenvalue formulas, evaluated verbatim: the psi pair is
    // expected to match the spectrum, the phi pair is tested and its status
    // recorded rather than asserted.
    let mut psi_all = true;
    let mut phi_all = true;
    for _ in 0..50 {
        let f = pt_eigen_formula_su4(
            rng.gen::<f64>() * PI,
            rng.gen::<f64>() * FRAC_PI_2,
            rng.gen::<f64>() * FRAC_PI_2,
            rng.gen::<f64>() * 2.0 * PI,
            rng.gen::<f64>() * FRAC_PI_2,
        );
        psi_all &= f.psi_matches;
        phi_all &= f.phi_matches;
    }
    result.check(psi_all, || "psi eigenvalue pair missed the spectrum".into());
    if phi_all {
        result.annotation = Some("phi formulas verified".into());
    } else {
        result.annotation =
            Some("verbatim phi formulas do not reproduce the spectrum; recorded".into());
    }
    result
}

fn purity_formulas(seed: u64) -> CriterionResult {
    let mut result = CriterionResult::new(6, "purity closed forms and invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x62);
    let mut worst4 = 0.0_f64;
    for _ in 0..1000 {
        let theta: Vec<f64> = (0..3).map(|_| rng.gen::<f64>() * FRAC_PI_2).collect();
        let direct = rho_d_su4(&theta).unwrap().purity();
        worst4 = worst4.max((tr_rhod_sq_su4(&theta).unwrap() - direct).abs());
    }
    let mut worst6 = 0.0_f64;
    for _ in 0..1000 {
        let theta: Vec<f64> = (0..5).map(|_| rng.gen::<f64>() * FRAC_PI_2).collect();
        let direct = rho_d_su6(&theta).unwrap().purity();
        worst6 = worst6.max((tr_rhod_sq_su6(&theta).unwrap() - direct).abs());
    }
    let basis = generate_basis::<f64>(4).unwrap();
    let mut worst_inv = 0.0_f64;
    for _ in 0..100 {
        let rho = random_density::<f64, _>(4, Some((2, 2)), &mut rng);
        let alpha: Vec<f64> = (0..15).map(|_| rng.gen::<f64>() * PI).collect();
        let u = compose_unitary(&su4_euler(&alpha).unwrap(), &basis).unwrap();
        let rotated = conjugate(&u, &rho).unwrap();
        worst_inv = worst_inv.max((rotated.purity() - rho.purity()).abs());
    }
    result.check(worst4 <= 1e-12, || {
        format!("two-qubit purity formula deviation {}", fmt_f64(worst4))
    });
    result.check(worst6 <= 1e-12, || {
        format!("qubit/qutrit purity formula deviation {}", fmt_f64(worst6))
    });
    result.check(worst_inv <= 1e-12, || {
        format!("conjugation purity drift {}", fmt_f64(worst_inv))
    });
    result.note(format!(
        "formula deviations {} (2x2), {} (2x3); conjugation drift {}",
        fmt_f64(worst4),
        fmt_f64(worst6),
        fmt_f64(worst_inv)
    ));
    result
}

fn region_soundness(seed: u64) -> CriterionResult {
    let mut result = CriterionResult::new(7, "feasibility region soundness");
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x73);
    let mut violations = 0u64;
    let mut misclassified = 0u64;
    for branch in 1..=6u8 {
        for _ in 0..10_000 {
            let s = sample_region_branch::<f64, _>(branch, &mut rng);
            if su4_mixed_region_sin(s) != Some(branch) {
                misclassified += 1;
            }
            let theta = [s[0].asin(), s[1].asin(), s[2].asin()];
            if tr_rhod_sq_su4(&theta).unwrap() <= 1.0 / 3.0 {
                violations += 1;
            }
        }
    }
    result.check(violations == 0, || {
        format!("{violations} samples violated the purity bound")
    });
    result.check(misclassified == 0, || {
        format!("{misclassified} samples fell outside their branch")
    });
    result.check(start.elapsed() < Duration::from_secs(30), || {
        "scan exceeded 30 s".into()
    });
    result.note("60000 in-branch samples, 0 violations".into());
    result
}

fn volume_chain(seed: u64) -> CriterionResult {
    let mut result = CriterionResult::new(8, "volume chain");
    // Closed forms.
    let v_cp3 = cpn_volume::<f64>(3).unwrap();
    let v_cp5 = cpn_volume::<f64>(5).unwrap();
    let ulp = |x: f64, y: f64| (x - y).abs() <= 4.0 * f64::EPSILON * x.abs().max(y.abs());
    result.check(ulp(v_cp3, PI.powi(3) / 6.0), || "cp3 volume".into());
    result.check(ulp(v_cp5, PI.powi(5) / 120.0), || "cp5 volume".into());
    let v4 = entangling_volume::<f64>(Group::Su4);
    let v6 = entangling_volume::<f64>(Group::Su6);
    result.check(ulp(v4, PI / 24.0) && ulp(v4 * 24.0 / PI, 1.0), || {
        "su4 entangling volume".into()
    });
    result.check(ulp(v6, PI / 2400.0) && ulp(v6 * 2400.0 / PI, 1.0), || {
        "su6 entangling volume".into()
    });
    result.check(ulp(v4, v_cp3 / (2.0 * PI * 2.0 * PI)), || {
        "su4 chain arithmetic".into()
    });
    result.check(ulp(v6, v_cp5 / (20.0 * PI.powi(4))), || {
        "su6 chain arithmetic".into()
    });
    result.check(v4 < 1.0 - 0.863, || {
        "pi/24 is not below the numerical lower bound 1 - 0.863".into()
    });
    let _ = flag_volume_constant::<f64>(Group::Su4);

    // Monte Carlo validation of the Fubini-Study machinery.
    let start = Instant::now();
    let cp1 = integrate_volume(
        &Chart::<f64>::cp1(),
        IntegrationMethod::MonteCarlo,
        1_000_000,
        seed ^ 0x81,
    )
    .unwrap();
    let rel1 = (cp1.value - PI).abs() / PI;
    result.check(rel1 < 0.005, || {
        format!("cp1 estimate off by {}", fmt_f64(rel1))
    });
    let cp3 = integrate_volume(
        &Chart::<f64>::cp3_inhomogeneous(),
        IntegrationMethod::MonteCarlo,
        1_000_000,
        seed ^ 0x82,
    )
    .unwrap();
    let rel3 = (cp3.value - v_cp3).abs() / v_cp3;
    result.check(rel3 < 0.01, || {
        format!("cp3 estimate off by {}", fmt_f64(rel3))
    });
    result.check(start.elapsed() < Duration::from_secs(60), || {
        "integration exceeded 60 s".into()
    });
    result.note(format!(
        "cp1 {} (rel {}), cp3 {} (rel {})",
        fmt_f64(cp1.value),
        fmt_f64(rel1),
        fmt_f64(cp3.value),
        fmt_f64(rel3)
    ));
    result.note(format!(
        "analytic: pi/24 = {}, pi/2400 = {}",
        fmt_f64(v4),
        fmt_f64(v6)
    ));
    result
}

fn symplex_measure(seed: u64) -> CriterionResult {
    let mut result = CriterionResult::new(9, "symplex measure and bounds");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x91);

    // Eigenvalue box from sampling the fourth feasibility branch.
    let mut lo = [f64::INFINITY; 4];
    let mut hi = [f64::NEG_INFINITY; 4];
    for _ in 0..2000 {
        let s = sample_region_branch::<f64, _>(4, &mut rng);
        let sq = [s[0] * s[0], s[1] * s[1], s[2] * s[2]];
        let p = [
            sq[0] * sq[1] * sq[2],
            (1.0 - sq[0]) * sq[1] * sq[2],
            (1.0 - sq[1]) * sq[2],
            1.0 - sq[2],
        ];
        for k in 0..4 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let ranges: Vec<[f64; 2]> = (0..4).map(|k| [lo[k], hi[k]]).collect();
    let s_param = 1.0;
    let alpha_s = 6.0;
    let factor = symplex_factor::<f64>(Group::Su4, s_param, alpha_s, &ranges).unwrap();

    // Monte Carlo oracle for the same product integral over the box.
    let oracle_samples = 200_000u64;
    let mut acc = 0.0;
    for _ in 0..oracle_samples {
        let mut f = alpha_s;
        for [l, h] in &ranges {
            let x = l + (h - l) * rng.gen::<f64>();
            f *= x.powf(s_param - 1.0);
        }
        acc += f;
    }
    let box_vol: f64 = ranges.iter().map(|[l, h]| h - l).product();
    let oracle = box_vol * acc / oracle_samples as f64;
    let rel = (oracle - factor.omega.abs()).abs() / factor.omega.abs();
    result.check(rel < 0.02, || {
        format!("oracle disagrees by {}", fmt_f64(rel))
    });
    result.note(format!(
        "omega {} vs oracle {} (rel {})",
        fmt_f64(factor.omega),
        fmt_f64(oracle),
        fmt_f64(rel)
    ));

    // The range product from the feasibility box sits inside the
    // hypothesized bound at s = 1.
    let product: f64 = ranges.iter().map(|[l, h]| (h - l).abs()).product();
    result.check(
        entvol::volume::symplex_bound_check::<f64>(Group::Su4, s_param, product),
        || {
            format!(
                "feasibility-box product {} violates the bound",
                fmt_f64(product)
            )
        },
    );

    // Bound limits at the ends of the s grid.
    for group in [Group::Su4, Group::Su6] {
        let small = symplex_bound_upper::<f64>(group, 1e-3);
        let large = symplex_bound_upper::<f64>(group, 10.0);
        let mid = symplex_bound_upper::<f64>(group, 0.2);
        result.check(small > 0.0 && small < 0.01 && small < mid, || {
            format!("{group} bound at s = 1e-3 is {}", fmt_f64(small))
        });
        result.check(large > 0.0 && large < 1e-10, || {
            format!("{group} bound at s = 10 is {}", fmt_f64(large))
        });
    }
    result.note(format!(
        "su4 bound: {} at s=1e-3, {} at s=10",
        fmt_f64(symplex_bound_upper::<f64>(Group::Su4, 1e-3)),
        fmt_f64(symplex_bound_upper::<f64>(Group::Su4, 10.0))
    ));
    result
}

fn deterministic_replay(seed: u64) -> CriterionResult {
    let mut result = CriterionResult::new(10, "deterministic replay");
    let run_mc = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            integrate_volume(
                &Chart::<f64>::cp1(),
                IntegrationMethod::MonteCarlo,
                100_000,
                seed,
            )
            .unwrap()
        })
    };
    let single = run_mc(1);
    let several = run_mc(4);
    result.check(
        single.value.to_bits() == several.value.to_bits()
            && single.std_error.to_bits() == several.std_error.to_bits(),
        || "volume estimate varies with worker count".into(),
    );

    let scan_a = region_scan::<f64>(20_000, seed);
    let scan_b = region_scan::<f64>(20_000, seed);
    let identical = scan_a.len() == scan_b.len()
        && scan_a.iter().zip(&scan_b).all(|(a, b)| {
            a.branch == b.branch
                && a.theta
                    .iter()
                    .zip(&b.theta)
                    .all(|(x, y)| x.to_bits() == y.to_bits())
                && a.tr_rho_d_sq.to_bits() == b.tr_rho_d_sq.to_bits()
        });
    result.check(identical, || "region scan replay differs".into());
    result.note(format!(
        "mc value {} reproduced across 1 and 4 workers",
        fmt_f64(single.value)
    ));
    result
}
