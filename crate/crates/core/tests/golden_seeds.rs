//! Frozen sampler output. A change here means seeded reports are no longer
//! reproducible across versions.

use golden_bounds::sampling::{random_bounded_hermitian, random_pd, SamplerConfig, SamplingMode};

fn close(got: &[f64], want: &[f64]) {
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= 1e-12 * w.abs().max(1.0), "{got:?} vs {want:?}");
    }
}

#[test]
fn positive_definite_draws() {
    let cases: [(u64, [f64; 3]); 3] = [
        (1, [2.0467596457535056, 1.8667962828423708, 0.8825106457991673]),
        (42, [1.7851232394125602, 1.5254970155872145, 0.744534665836097]),
        (2024, [2.7272705006515503, 2.589421228365958, 2.275394448650469]),
    ];
    for (seed, want) in cases {
        let a = random_pd(&SamplerConfig::new(3, seed, 0.5, 3.0, SamplingMode::General)).unwrap();
        close(a.eigenvalues(), &want);
    }
    let a = random_pd(&SamplerConfig::new(3, 42, 0.5, 3.0, SamplingMode::General)).unwrap();
    let z = a.as_matrix()[(0, 1)];
    close(&[z.re, z.im], &[-0.12243115511057145, 0.2422847382238911]);
}

#[test]
fn bounded_hermitian_draws() {
    let cases: [(u64, [f64; 3]); 3] = [
        (1, [0.23740771660280424, 0.09343702627389663, -0.6939914833606661]),
        (42, [0.02809859153004822, -0.17960238753022836, -0.8043722673311224]),
        (2024, [0.7818164005212405, 0.6715369826927664, 0.4203155589203755]),
    ];
    for (seed, want) in cases {
        let h = random_bounded_hermitian(&SamplerConfig::new(3, seed, -1.0, 1.0, SamplingMode::Commuting)).unwrap();
        close(&h.eigenvalues_desc().unwrap(), &want);
    }
}
