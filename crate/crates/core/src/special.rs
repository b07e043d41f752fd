//! Special-function kernels shared by the L-function and explicit-formula
//! machinery: complex log-gamma and digamma (Stirling with recurrence shift),
//! Bernoulli numbers, and second-order jets for analytic s-derivatives.

use num_complex::Complex64;

/// Bernoulli numbers B_2, B_4, ..., B_32 (B_0 and B_1 omitted).
pub const BERNOULLI: [f64; 16] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
];

const LN_2PI_HALF: f64 = 0.918938533204672741780329736406; // ln(2π)/2
const SHIFT_RE: f64 = 12.0;
const STIRLING_TERMS: usize = 8;

/// Principal-branch log-gamma for Re z > 0, continuous along vertical lines.
///
/// Stirling series after shifting Re z above 12; the shift subtracts
/// principal logs of points in the right half-plane, so no branch jumps
/// occur while t varies.
pub fn lgamma(mut z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "lgamma requires Re z > 0, got {z}");
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < SHIFT_RE {
        shift += z.ln();
        z += 1.0;
    }
    let zinv2 = 1.0 / (z * z);
    let mut series = Complex64::new(0.0, 0.0);
    let mut zpow = 1.0 / z;
    for j in 1..=STIRLING_TERMS {
        let b = BERNOULLI[j - 1];
        series += zpow * (b / ((2 * j) as f64 * (2 * j - 1) as f64));
        zpow *= zinv2;
    }
    (z - 0.5) * z.ln() - z + LN_2PI_HALF + series - shift
}

/// Complex digamma ψ(z) for Re z > 0, |error| < 1e-12 on the domain used here.
pub fn digamma(mut z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "digamma requires Re z > 0, got {z}");
    let mut acc = Complex64::new(0.0, 0.0);
    while z.re < SHIFT_RE {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let zinv2 = 1.0 / (z * z);
    let mut series = Complex64::new(0.0, 0.0);
    let mut zpow = zinv2;
    for j in 1..=STIRLING_TERMS {
        series += zpow * (BERNOULLI[j - 1] / (2 * j) as f64);
        zpow *= zinv2;
    }
    acc + z.ln() - 0.5 / z - series
}

/// Second-order jet: value together with first and second derivatives with
/// respect to the underlying variable. Used to differentiate the
/// Euler-Maclaurin formula analytically instead of by finite differences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet2 {
    pub f: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl Jet2 {
    pub fn constant(c: Complex64) -> Self {
        Jet2 { f: c, d1: Complex64::new(0.0, 0.0), d2: Complex64::new(0.0, 0.0) }
    }

    pub fn real_constant(c: f64) -> Self {
        Self::constant(Complex64::new(c, 0.0))
    }

    /// The identity jet at s: value s, derivative 1.
    pub fn variable(s: Complex64) -> Self {
        Jet2 { f: s, d1: Complex64::new(1.0, 0.0), d2: Complex64::new(0.0, 0.0) }
    }

    pub fn zero() -> Self {
        Self::constant(Complex64::new(0.0, 0.0))
    }

    pub fn scale(self, c: f64) -> Self {
        Jet2 { f: self.f * c, d1: self.d1 * c, d2: self.d2 * c }
    }

    pub fn scale_c(self, c: Complex64) -> Self {
        Jet2 { f: self.f * c, d1: self.d1 * c, d2: self.d2 * c }
    }

    pub fn exp(self) -> Self {
        let e = self.f.exp();
        Jet2 { f: e, d1: e * self.d1, d2: e * (self.d1 * self.d1 + self.d2) }
    }

    pub fn recip(self) -> Self {
        let inv = 1.0 / self.f;
        let d1 = -self.d1 * inv * inv;
        let d2 = (2.0 * self.d1 * self.d1 * inv - self.d2) * inv * inv;
        Jet2 { f: inv, d1, d2 }
    }

    pub fn ln(self) -> Self {
        let r = self.d1 / self.f;
        Jet2 { f: self.f.ln(), d1: r, d2: self.d2 / self.f - r * r }
    }
}

impl std::ops::Add for Jet2 {
    type Output = Jet2;
    fn add(self, o: Jet2) -> Jet2 {
        Jet2 { f: self.f + o.f, d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }
}

impl std::ops::Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, o: Jet2) -> Jet2 {
        Jet2 { f: self.f - o.f, d1: self.d1 - o.d1, d2: self.d2 - o.d2 }
    }
}

impl std::ops::Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, o: Jet2) -> Jet2 {
        Jet2 {
            f: self.f * o.f,
            d1: self.d1 * o.f + self.f * o.d1,
            d2: self.d2 * o.f + 2.0 * self.d1 * o.d1 + self.f * o.d2,
        }
    }
}

impl std::ops::Div for Jet2 {
    type Output = Jet2;
    fn div(self, o: Jet2) -> Jet2 {
        let q = self.f / o.f;
        let d1 = (self.d1 - q * o.d1) / o.f;
        let d2 = (self.d2 - 2.0 * d1 * o.d1 - q * o.d2) / o.f;
        Jet2 { f: q, d1, d2 }
    }
}

impl std::ops::Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 { f: -self.f, d1: -self.d1, d2: -self.d2 }
    }
}

/// (base)^(-s) as a jet in s, for positive real base: exp(-s ln base).
pub fn pow_neg_s(ln_base: f64, s: Jet2) -> Jet2 {
    (-s.scale(ln_base)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

    #[test]
    fn lgamma_known_values() {
        // Γ(1/2) = √π
        let v = lgamma(Complex64::new(0.5, 0.0));
        assert!((v.re - 0.5 * PI.ln()).abs() < 1e-13);
        assert!(v.im.abs() < 1e-13);
        // Γ(5) = 24
        let v = lgamma(Complex64::new(5.0, 0.0));
        assert!((v.re - 24.0f64.ln()).abs() < 1e-13);
        // |Γ(1/2 + it)|² = π / cosh(πt)
        let t = 3.7;
        let v = lgamma(Complex64::new(0.5, t));
        let modulus_sq = (2.0 * v.re).exp();
        assert!((modulus_sq - PI / (PI * t).cosh()).abs() < 1e-13);
    }

    #[test]
    fn lgamma_functional_equation() {
        // lgamma(z+1) = lgamma(z) + ln z, including at large imaginary height
        for &(re, im) in &[(0.25, 50.0), (0.75, 1000.0), (1.5, 6500.0)] {
            let z = Complex64::new(re, im);
            let lhs = lgamma(z + 1.0);
            let rhs = lgamma(z) + z.ln();
            assert!((lhs - rhs).norm() < 1e-10 * (1.0 + lhs.norm()));
        }
    }

    #[test]
    fn digamma_known_values() {
        // ψ(1) = -γ
        let v = digamma(Complex64::new(1.0, 0.0));
        assert!((v.re + EULER_GAMMA).abs() < 1e-13);
        // ψ(1/2) = -γ - 2 ln 2
        let v = digamma(Complex64::new(0.5, 0.0));
        assert!((v.re + EULER_GAMMA + 2.0 * 2.0f64.ln()).abs() < 1e-13);
        // recurrence ψ(z+1) = ψ(z) + 1/z
        let z = Complex64::new(0.25, 17.0);
        let lhs = digamma(z + 1.0);
        let rhs = digamma(z) + 1.0 / z;
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn digamma_matches_lgamma_derivative() {
        // central difference of lgamma vs digamma
        let z = Complex64::new(1.3, 4.2);
        let h = 1e-5;
        let num = (lgamma(z + h) - lgamma(z - h)) / (2.0 * h);
        assert!((num - digamma(z)).norm() < 1e-9);
    }

    #[test]
    fn jet_arithmetic_matches_analytic_derivatives() {
        // f(s) = exp(-s ln 7) / s at s = 2+i: check against hand derivatives
        let s0 = Complex64::new(2.0, 1.0);
        let s = Jet2::variable(s0);
        let w = 7.0f64.ln();
        let f = pow_neg_s(w, s) / s;
        let e = (-s0 * w).exp();
        let f_exact = e / s0;
        let d1_exact = e * (-w / s0 - 1.0 / (s0 * s0));
        let d2_exact = e * (w * w / s0 + 2.0 * w / (s0 * s0) + 2.0 / (s0 * s0 * s0));
        assert!((f.f - f_exact).norm() < 1e-14);
        assert!((f.d1 - d1_exact).norm() < 1e-14);
        assert!((f.d2 - d2_exact).norm() < 1e-13);
    }

    #[test]
    fn jet_ln_exp_roundtrip() {
        let s = Jet2 {
            f: Complex64::new(1.5, 0.5),
            d1: Complex64::new(0.3, -0.2),
            d2: Complex64::new(0.1, 0.05),
        };
        let back = s.ln().exp();
        assert!((back.f - s.f).norm() < 1e-14);
        assert!((back.d1 - s.d1).norm() < 1e-14);
        assert!((back.d2 - s.d2).norm() < 1e-13);
    }
}
