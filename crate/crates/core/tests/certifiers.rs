use golden_bounds::certify::*;
use golden_bounds::constants::{fm_factor, ln_specht_exp};
use golden_bounds::matcore::{HermitianMatrix, PositiveDefiniteMatrix};
use golden_bounds::orders::joint_eigenvalues;
use golden_bounds::sampling::{Sampler, SamplerConfig, SamplingMode};

fn commuting_sampler(n: usize, seed: u64) -> Sampler {
    Sampler::new(SamplerConfig::new(n, seed, 0.5, 3.0, SamplingMode::Commuting)).unwrap()
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn assert_margins(rep: &InequalityReport, scalar_lhs: &[f64], scalar_rhs: &[f64]) {
    for i in 0..scalar_lhs.len() {
        let want = scalar_rhs[i] - scalar_lhs[i];
        let scale = scalar_lhs[i].abs().max(scalar_rhs[i].abs());
        assert!(
            (rep.margins[i] - want).abs() <= 1e-10 * scale,
            "{}: entry {i}: {} vs {want}",
            rep.inequality,
            rep.margins[i]
        );
    }
}

#[test]
fn commuting_gt_margins_match_scalar_inequality() {
    for seed in 0..20 {
        let n = 2 + seed as usize % 4;
        let mut smp = commuting_sampler(n, seed);
        let pair = smp.olson_exponential_pair(-1.0, 1.0).unwrap();
        let pairs = joint_eigenvalues(&pair.h, &pair.k).unwrap().unwrap();
        let (alpha, p) = (smp.uniform(0.0, 1.0), smp.uniform(0.1, 2.0));
        // commuting: both sides reduce to e^{(1-α)h_i + α k_i}
        let base = sorted_desc(pairs.iter().map(|(h, k)| ((1.0 - alpha) * h + alpha * k).exp()).collect());

        let rep = certify_gt_reverse_specht(&pair.h, &pair.k, pair.s, pair.t, alpha, p).unwrap();
        let f = ((ln_specht_exp(pair.s * p).max(ln_specht_exp(pair.t * p))) / p).exp();
        let rhs: Vec<f64> = base.iter().map(|x| f * x).collect();
        assert_margins(&rep, &base, &rhs);

        let rep = certify_gt_kantorovich_bounded(&pair.h, &pair.k, -1.0, 1.0, alpha, p).unwrap();
        let rhs: Vec<f64> = base.iter().map(|x| rep.factor * x).collect();
        assert_margins(&rep, &base, &rhs);
        assert!(rep.factor >= 1.0);
    }
}

#[test]
fn commuting_matrix_forms_match_scalar_inequality() {
    for seed in 0..20 {
        let n = 2 + seed as usize % 4;
        let mut smp = commuting_sampler(n, 100 + seed);
        let pair = smp.olson_sandwich_pair().unwrap();
        let pairs = joint_eigenvalues(pair.a.hermitian(), pair.b.hermitian()).unwrap().unwrap();
        let (alpha, r) = (smp.uniform(0.0, 1.0), smp.uniform(1.0, 3.0));
        let mean = |x: f64, y: f64| x.powf(1.0 - alpha) * y.powf(alpha);

        let rep = certify_eigen_power_high(&pair.a, &pair.b, pair.s, pair.t, alpha, r).unwrap();
        let lhs = sorted_desc(pairs.iter().map(|&(x, y)| mean(x, y).powf(r)).collect());
        let rhs: Vec<f64> = lhs.iter().map(|x| rep.factor * x).collect();
        assert_margins(&rep, &lhs, &rhs);

        let r_low = 1.0 / r;
        let rep = certify_specht_power_low(&pair.a, &pair.b, pair.s, pair.t, alpha, r_low).unwrap();
        // Loewner entries: eigenvalues of (factor - 1) · (A #_α B)^r, ascending
        let mut diff: Vec<f64> = pairs.iter().map(|&(x, y)| (rep.factor - 1.0) * mean(x, y).powf(r_low)).collect();
        diff.sort_by(|a, b| a.total_cmp(b));
        for (got, want) in rep.rhs_values.iter().zip(&diff) {
            assert!((got - want).abs() <= 1e-10 * rep.scales[0]);
        }
    }
}

#[test]
fn commuting_fm_forms_match_scalar_inequality() {
    let n = 4;
    let mut smp = commuting_sampler(n, 77);
    let (a, b) = smp.ordered_pd_pair(0.2, 1.0, golden_bounds::sampling::PairOrdering::Olson).unwrap();
    let pairs = joint_eigenvalues(a.hermitian(), b.hermitian()).unwrap().unwrap();
    let (alpha, q, p) = (0.35, 0.7, 1.6);
    let rep = certify_fm_eigen(&a, &b, 0.2, 1.0, alpha, FmExponents::Pair { q, p }).unwrap();
    let lhs = sorted_desc(pairs.iter().map(|&(x, y)| x.powf(1.0 - alpha) * y.powf(alpha)).collect());
    let f = fm_factor(5f64.powf(p), alpha, 1.0 / p).unwrap();
    assert!((rep.factor - f).abs() < 1e-15);
    let rhs: Vec<f64> = lhs.iter().map(|x| f * x).collect();
    assert_margins(&rep, &lhs, &rhs);
}

#[test]
fn eigenvalue_reports_propagate_to_ky_fan() {
    for id in [InequalityId::GtSpecht, InequalityId::GtKantorovich, InequalityId::GtFm, InequalityId::SpechtEigenHigh] {
        let res = run_campaign(&CampaignConfig::new(id, 9, 60)).unwrap();
        for o in &res.outcomes {
            assert!(o.report.holds);
            let kf = o.report.ky_fan_propagation().unwrap();
            assert!(kf.holds, "{id} instance {}", o.index);
            assert_eq!(kf.lhs_values.len(), o.n);
        }
    }
}

#[test]
fn reported_factors_are_at_least_one() {
    for id in InequalityId::ALL {
        let res = run_campaign(&CampaignConfig::new(id, 21, 40)).unwrap();
        for o in &res.outcomes {
            assert!(o.report.factor >= 1.0, "{id}: {}", o.report.factor);
            assert_eq!(o.report.lhs_values.len(), o.report.margins.len());
        }
    }
}

#[test]
fn hypothesis_failures_are_reported() {
    let h = HermitianMatrix::diagonal(&[0.0, 1.0]);
    let k = HermitianMatrix::diagonal(&[2.0, 0.0]);
    // K - H has eigenvalues 2 and -1, so s = -0.5 is too large
    assert!(matches!(
        certify_gt_reverse_specht(&h, &k, -0.5, 2.0, 0.5, 1.0),
        Err(golden_bounds::Error::HypothesisViolated(_))
    ));
    assert!(certify_gt_reverse_specht(&h, &k, -1.0, 2.0, 0.5, 1.0).unwrap().holds);
    assert!(matches!(
        certify_gt_kantorovich_squared(&h, &k, 0.0, 1.5),
        Err(golden_bounds::Error::HypothesisViolated(_))
    ));
    let a = PositiveDefiniteMatrix::identity(2);
    let b = PositiveDefiniteMatrix::identity(3);
    assert!(matches!(certify_ando_hiai(&a, &b, 0.5, 2.0), Err(golden_bounds::Error::DimMismatch { .. })));
}

#[test]
fn non_diagonal_commuting_pair_via_shared_basis() {
    let mut smp = commuting_sampler(3, 5);
    let u = smp.haar_unitary(3);
    let h = HermitianMatrix::diagonal(&[0.5, -0.2, 0.1]).congruence(&u).unwrap();
    let k = HermitianMatrix::diagonal(&[0.1, 0.3, -0.4]).congruence(&u).unwrap();
    let rep = certify_golden_thompson(&h, &k).unwrap();
    assert!(rep.margins[0].abs() < 1e-12 * rep.rhs_values[0]);
}
