//! Acceptance criteria: one PASS/FAIL line each, non-zero exit on any FAIL.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dirac_osc::fock::{
    entropy_closed_form, expansion_coefficient, expansion_overlap, moments, purity_closed_form,
    quadrature, rho_reduced, rho_series, thermal_entropy, verify_fock_commutators, wigner_radius,
    SeriesState, ThermalState,
};
use dirac_osc::lie::{
    alge11, build_generator_set, check_isomorphism, clifford_residual,
    gamma5_anticommutation_residual, o33gen, table1_correspondence, verify_algebra, Family,
    GeneratorLabel, ALGEBRA_LABELS, SP4_LABELS,
};
use dirac_osc::phase_space::{
    eta_from_temperature, gaussian_entropy, gaussian_purity, generator_to_transform,
    temperature_from_eta, two_mode_squeeze, GaussianState,
};

const ETA_GRID: [f64; 4] = [0.25, 0.5, 1.0, 1.5];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.pass &= elapsed < budget;
    out.detail = format!(
        "{}; {:.3} s (budget {:?})",
        out.detail,
        elapsed.as_secs_f64(),
        budget
    );
    out
}

fn max_pairwise(values: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            worst = worst.max((a - b).abs());
        }
    }
    worst
}

fn squeezed_marginal(eta: f64) -> nalgebra::Matrix2<f64> {
    GaussianState::vacuum()
        .evolve(&two_mode_squeeze(eta))
        .reduce(1)
        .expect("oscillator 1")
}

fn sp4_algebra() -> Outcome {
    timed(Duration::from_secs(1), || {
        let table = alge11();
        let sp4 = verify_algebra(&build_generator_set(Family::Sp4), &table, 1e-12).unwrap();
        let o32 = verify_algebra(&build_generator_set(Family::O32), &table, 1e-12).unwrap();
        let fock = verify_fock_commutators(8, 1e-12).unwrap();
        outcome(
            sp4.pass && o32.pass && fock.pass,
            format!(
                "worst residual sp4_4 {:.1e}, o32_5 {:.1e}, fock(nmax=8) {:.1e}",
                sp4.worst_residual(),
                o32.worst_residual(),
                fock.worst_residual()
            ),
        )
    })
}

fn extended_algebra() -> Outcome {
    timed(Duration::from_secs(1), || {
        let table = o33gen();
        let sl4r = build_generator_set(Family::Sl4r);
        let o33 = build_generator_set(Family::O33);
        let a = verify_algebra(&sl4r, &table, 1e-12).unwrap();
        let b = verify_algebra(&o33, &table, 1e-12).unwrap();
        let iso = check_isomorphism(&sl4r, &o33, 1e-12).unwrap();
        outcome(
            a.pass && b.pass && iso.pass,
            format!(
                "worst residual sl4r_4 {:.1e}, o33_6 {:.1e}, table difference {:.1e}",
                a.worst_residual(),
                b.worst_residual(),
                iso.worst_residual()
            ),
        )
    })
}

fn correspondence() -> Outcome {
    let report = table1_correspondence(1e-12);
    let exact = report.count_printed("EXACT");
    let l1 = report.row(GeneratorLabel::L1).expect("L1 row");
    let ratio = l1.vs_printed.ratio();
    let l1_ok = ratio.is_some_and(|r| (r - num_complex::Complex64::new(0.0, 1.0)).norm() < 1e-12);
    let others_exact = report
        .rows
        .iter()
        .filter(|r| r.label != GeneratorLabel::L1)
        .all(|r| r.vs_printed.name() == "EXACT");
    outcome(
        exact == 14 && l1_ok && others_exact,
        format!(
            "{exact} EXACT, L1 {} ratio {}",
            l1.vs_printed.name(),
            ratio.map_or("none".into(), |r| format!("{}{:+}i", r.re, r.im))
        ),
    )
}

fn clifford() -> Outcome {
    let (c, g5) = (clifford_residual(), gamma5_anticommutation_residual());
    outcome(
        c <= 1e-14 && g5 <= 1e-14,
        format!("Clifford {c:.1e}, gamma5 {g5:.1e}"),
    )
}

fn purity() -> Outcome {
    let mut worst: f64 = 0.0;
    for eta in ETA_GRID {
        let series = moments(eta, 200).unwrap().purity;
        let gaussian = gaussian_purity(&squeezed_marginal(eta)).unwrap();
        worst = worst.max(max_pairwise(&[series, gaussian, purity_closed_form(eta)]));
    }
    let at_one = moments(1.0, 200).unwrap().purity;
    outcome(
        worst <= 1e-9 && (at_one - 0.265_802_2).abs() <= 1e-6,
        format!("max pairwise spread {worst:.1e}; purity(1) = {at_one:.10}"),
    )
}

fn entropy() -> Outcome {
    let mut worst: f64 = 0.0;
    for eta in ETA_GRID {
        let series = moments(eta, 200).unwrap().entropy;
        let gaussian = gaussian_entropy(&squeezed_marginal(eta)).unwrap();
        let thermal = thermal_entropy(temperature_from_eta(eta).unwrap()).unwrap();
        worst = worst.max(max_pairwise(&[
            series,
            gaussian,
            entropy_closed_form(eta),
            thermal,
        ]));
    }
    outcome(worst <= 1e-9, format!("max pairwise spread {worst:.1e}"))
}

fn expansion() -> Outcome {
    timed(Duration::from_secs(10), || {
        let mut worst: f64 = 0.0;
        for eta in [0.3, 0.8, 1.2] {
            for k in 0..=8 {
                let q = expansion_overlap(eta, k).unwrap();
                worst = worst.max((q - expansion_coefficient(eta, k)).abs());
            }
        }
        outcome(worst <= 1e-8, format!("max deviation {worst:.1e}"))
    })
}

fn density_matrix() -> Outcome {
    let eta: f64 = 0.8;
    let mut worst: f64 = 0.0;
    for i in 0..21 {
        for j in 0..21 {
            let x = -3.0 + 0.3 * i as f64;
            let xp = -3.0 + 0.3 * j as f64;
            let series = rho_series(eta, 60, x, xp).unwrap();
            worst = worst.max((series - rho_reduced(eta, x, xp)).abs());
        }
    }
    let c = (2.0 * eta).cosh();
    let trace = quadrature().integrate(1.0 / c, 0.0, |x| rho_reduced(eta, x, x));
    outcome(
        worst <= 1e-9 && (trace - 1.0).abs() <= 1e-9,
        format!(
            "max grid deviation {worst:.1e}; trace - 1 = {:.1e}",
            trace - 1.0
        ),
    )
}

fn canonical_split() -> Outcome {
    let mut canonical: f64 = 0.0;
    let mut extension = f64::INFINITY;
    let mut det: f64 = 0.0;
    let mut area: f64 = 0.0;
    let vacuum = GaussianState::vacuum();
    let (a1, a2) = vacuum.areas();
    let base = a1 * a2;
    for label in ALGEBRA_LABELS {
        let thetas: &[f64] = if SP4_LABELS.contains(&label) {
            &[0.7, -0.7]
        } else {
            &[0.5, 0.7, -0.7]
        };
        for &theta in thetas {
            let m = generator_to_transform(label, theta).unwrap();
            let dev = m.canonical_deviation();
            if SP4_LABELS.contains(&label) {
                canonical = canonical.max(dev);
            } else if theta == 0.5 {
                extension = extension.min(dev);
            }
            det = det.max((m.determinant() - 1.0).abs());
            let (b1, b2) = vacuum.evolve(&m).areas();
            area = area.max((b1 * b2 - base).abs());
        }
    }
    outcome(
        canonical <= 1e-12 && extension > 0.1 && det <= 1e-10 && area <= 1e-10,
        format!(
            "Sp(4) worst MJMᵀ-J {canonical:.1e}; extension least {extension:.3}; \
             det-1 {det:.1e}; area product drift {area:.1e} (base {:.6})",
            base / (PI * PI)
        ),
    )
}

fn thermal_bridge() -> Outcome {
    let mut round: f64 = 0.0;
    let mut weights: f64 = 0.0;
    let mut radius: f64 = 0.0;
    for t in [0.5, 1.0, 2.0, 5.0] {
        let eta = eta_from_temperature(t).unwrap();
        round = round.max((temperature_from_eta(eta).unwrap() - t).abs());
        let thermal = ThermalState::new(t).unwrap().weights(100);
        let series = SeriesState::new(eta, 100).unwrap().weights;
        for (a, b) in thermal.iter().zip(&series) {
            weights = weights.max((a - b).abs());
        }
        let r = wigner_radius(t).unwrap();
        radius = radius.max((r - (2.0 * eta).cosh().sqrt()).abs());
    }
    for eta in ETA_GRID {
        let back = eta_from_temperature(temperature_from_eta(eta).unwrap()).unwrap();
        round = round.max((back - eta).abs());
    }
    outcome(
        round <= 1e-12 && weights <= 1e-12 && radius <= 1e-12,
        format!("round trip {round:.1e}; weights {weights:.1e}; radius {radius:.1e}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 Sp(4) algebra on 4x4, 5x5 and Fock", sp4_algebra),
        (
            "2 SL(4,r) / O(3,3) algebra and isomorphism",
            extended_algebra,
        ),
        ("3 gamma-product correspondence pattern", correspondence),
        ("4 Clifford relations", clifford),
        ("5 purity identity", purity),
        ("6 entropy identity", entropy),
        ("7 expansion identity", expansion),
        ("8 reduced density matrix", density_matrix),
        ("9 canonical / non-canonical split", canonical_split),
        ("10 thermal bridge", thermal_bridge),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let out = run();
        let status = if out.pass { "PASS" } else { "FAIL" };
        println!("{status}  criterion {name}: {}", out.detail);
        failed += usize::from(!out.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
