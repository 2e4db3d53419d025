//! Closed-form expressions on the β = γ slice, in the variable `a = α²`.
//!
//! Functions suffixed `_printed` transcribe formulas exactly as published so that
//! the audit can compare them against the simulation; they are not used to
//! compute any reported state property.

/// Root of 3 − 4a² in (0, 1): √3/2.
pub fn local_separability_root() -> f64 {
    3f64.sqrt() / 2.0
}

/// Root of 144a² − 208a + 39 in (0, 1): (26 − 5√13)/36.
pub fn nonlocal_inseparability_root() -> f64 {
    (26.0 - 5.0 * 13f64.sqrt()) / 36.0
}

/// W4 of ρ₁₄ (and ρ₂₅): (3 − 4a²)/6⁴.
pub fn w4_local(a: f64) -> f64 {
    (3.0 - 4.0 * a * a) / 1296.0
}

/// W4 of ρ₁₅ as published: [5(1+4a)(5−4a) − (8−8a)²]/36⁴.
pub fn w4_nonlocal_printed(a: f64) -> f64 {
    (-144.0 * a * a + 208.0 * a - 39.0) / 1_679_616.0
}

/// Full determinant of the partial transpose of ρ₁₅, including the middle block
/// factor ((13 − 8a)/36)².
pub fn w4_nonlocal(a: f64) -> f64 {
    let b = (13.0 - 8.0 * a) / 36.0;
    b * b * (-144.0 * a * a + 208.0 * a - 39.0) / 1296.0
}

/// 2·max((8−8a)/36 − √(5(1+4a)(5−4a))/36, 0).
pub fn concurrence_nonlocal(a: f64) -> f64 {
    let margin = (8.0 - 8.0 * a) / 36.0 - (5.0 * (1.0 + 4.0 * a) * (5.0 - 4.0 * a)).sqrt() / 36.0;
    2.0 * margin.max(0.0)
}

/// 2·max(1/6 − (1/6)√(4 − 4a²), 0).
pub fn concurrence_local(a: f64) -> f64 {
    2.0 * (1.0 / 6.0 - (4.0 - 4.0 * a * a).sqrt() / 6.0).max(0.0)
}

/// (8/27)(3 − a²).
pub fn linear_entropy_local(a: f64) -> f64 {
    8.0 / 27.0 * (3.0 - a * a)
}

/// Tr ρ₁₅² obtained by expanding the β = γ matrix: (168a² − 128a + 129)/324.
pub fn purity_nonlocal(a: f64) -> f64 {
    (168.0 * a * a - 128.0 * a + 129.0) / 324.0
}

pub fn linear_entropy_nonlocal(a: f64) -> f64 {
    4.0 / 3.0 * (1.0 - purity_nonlocal(a))
}

/// As published, with middle coefficient −12: (4/3)[1 − (168a² − 12a + 129)/324].
pub fn linear_entropy_nonlocal_printed(a: f64) -> f64 {
    4.0 / 3.0 * (1.0 - (168.0 * a * a - 12.0 * a + 129.0) / 324.0)
}

/// α² below which the non-local outputs are less mixed than the local ones:
/// root of 96a² − 128a + 21 in (0, 1).
pub fn mixedness_crossing() -> f64 {
    (128.0 - (128.0f64 * 128.0 - 4.0 * 96.0 * 21.0).sqrt()) / 192.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert!(w4_local(local_separability_root()).abs() < 1e-17);
        let r = nonlocal_inseparability_root();
        assert!(w4_nonlocal_printed(r).abs() < 1e-19);
        assert!(concurrence_nonlocal(r) < 1e-15);
        assert!((r - 0.221_451_211_741_112_6).abs() < 1e-15);
        let m = mixedness_crossing();
        assert!((linear_entropy_local(m) - linear_entropy_nonlocal(m)).abs() < 1e-15);
    }

    #[test]
    fn printed_and_expanded_entropies_agree_at_zero() {
        assert_eq!(
            linear_entropy_nonlocal_printed(0.0),
            linear_entropy_nonlocal(0.0)
        );
        assert!((linear_entropy_nonlocal(0.0) - 0.802_469_135_802_469_1).abs() < 1e-15);
    }
}
