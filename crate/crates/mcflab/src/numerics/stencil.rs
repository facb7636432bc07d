//! Non-uniform three-point difference stencils.
//!
//! `hm` is the spacing to the backward sample, `hp` to the forward sample.
//! Both formulas are second-order accurate on smooth data for arbitrary
//! spacing ratios.

/// First derivative at the center sample.
pub fn d1(fm: f64, f0: f64, fp: f64, hm: f64, hp: f64) -> f64 {
    let s = hm + hp;
    -fm * hp / (hm * s) + f0 * (hp - hm) / (hm * hp) + fp * hm / (hp * s)
}

/// Second derivative at the center sample.
pub fn d2(fm: f64, f0: f64, fp: f64, hm: f64, hp: f64) -> f64 {
    let s = hm + hp;
    2.0 * (fm / (hm * s) - f0 / (hm * hp) + fp / (hp * s))
}

/// Second derivative at `s = 0` of an even function sampled at `0, s1, s2`
/// (two-term even Taylor fit; the linear term is absent by symmetry).
pub fn d2_even(f0: f64, f1: f64, s1: f64, f2: f64, s2: f64) -> f64 {
    let (q1, q2) = (s1 * s1, s2 * s2);
    2.0 * ((f1 - f0) * q2 * q2 - (f2 - f0) * q1 * q1) / (q1 * q2 * (q2 - q1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonuniform_stencils_are_second_order() {
        let f = |t: f64| (1.7 * t).sin();
        let t0 = 0.4;
        for &(hm, hp) in &[(1e-3, 1e-3), (1e-3, 2.3e-3), (3e-3, 1.1e-3)] {
            let g1 = d1(f(t0 - hm), f(t0), f(t0 + hp), hm, hp);
            let g2 = d2(f(t0 - hm), f(t0), f(t0 + hp), hm, hp);
            let e1 = 1.7 * (1.7 * t0).cos();
            let e2 = -1.7 * 1.7 * (1.7 * t0).sin();
            assert!((g1 - e1).abs() < 1e-5, "{g1} vs {e1}");
            assert!((g2 - e2).abs() < 1e-2, "{g2} vs {e2}");
        }
    }

    #[test]
    fn even_fit_recovers_curvature_of_even_function() {
        let f = |t: f64| (0.9 * t).cos(); // even, f''(0) = -0.81
        let got = d2_even(f(0.0), f(0.01), 0.01, f(0.023), 0.023);
        assert!((got + 0.81).abs() < 1e-6, "{got}");
    }
}
