//! Quadrature: Gauss-Legendre panels for smooth integrands and adaptive
//! Gauss-Kronrod 15(7) bisection for integrands with error control.

use num_complex::Complex64;
use std::sync::OnceLock;

/// 15-point Kronrod abscissae on [0,1]-half of [-1,1] (symmetric), QUADPACK dqk15.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One Gauss-Kronrod 15(7) panel. Returns (integral, error estimate).
pub fn gk15<F: FnMut(f64) -> Complex64>(a: f64, b: f64, f: &mut F) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kron += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let result = kron * half;
    let err = ((kron - gauss) * half).norm();
    (result, err)
}

/// Adaptive bisection on top of GK15 panels with an absolute tolerance.
/// Returns (integral, accumulated error estimate, evaluation count).
pub fn adaptive_gk15<F: FnMut(f64) -> Complex64>(
    a: f64,
    b: f64,
    abs_tol: f64,
    max_depth: u32,
    f: &mut F,
) -> (Complex64, f64, u64) {
    let mut evals = 0u64;
    let mut count = |x: f64, f: &mut F| {
        evals += 1;
        f(x)
    };
    fn rec<G: FnMut(f64, &mut F) -> Complex64, F: FnMut(f64) -> Complex64>(
        a: f64,
        b: f64,
        tol: f64,
        depth: u32,
        g: &mut G,
        f: &mut F,
    ) -> (Complex64, f64) {
        let mut wrapped = |x: f64| g(x, f);
        let (val, err) = gk15(a, b, &mut wrapped);
        if err <= tol || depth == 0 {
            return (val, err);
        }
        let mid = 0.5 * (a + b);
        let (l, el) = rec(a, mid, 0.5 * tol, depth - 1, g, f);
        let (r, er) = rec(mid, b, 0.5 * tol, depth - 1, g, f);
        (l + r, el + er)
    }
    let (val, err) = rec(a, b, abs_tol, max_depth, &mut count, f);
    (val, err, evals)
}

/// Integrate with fixed-width GK15 panels (escalating to bisection only where
/// a panel misses its share of the tolerance). Suited to mildly oscillatory
/// integrands where the panel width is chosen from the oscillation period.
pub fn paneled_gk15<F: FnMut(f64) -> Complex64>(
    a: f64,
    b: f64,
    panel_width: f64,
    abs_tol: f64,
    f: &mut F,
) -> (Complex64, f64, u64) {
    assert!(panel_width > 0.0 && b >= a);
    let n_panels = (((b - a) / panel_width).ceil() as usize).max(1);
    let per_panel_tol = abs_tol / n_panels as f64;
    let w = (b - a) / n_panels as f64;
    let mut total = Complex64::new(0.0, 0.0);
    let mut total_err = 0.0;
    let mut evals = 0u64;
    for i in 0..n_panels {
        let pa = a + i as f64 * w;
        let pb = if i + 1 == n_panels { b } else { pa + w };
        let (v, e, n) = adaptive_gk15(pa, pb, per_panel_tol, 18, f);
        total += v;
        total_err += e;
        evals += n;
    }
    (total, total_err, evals)
}

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre polynomial. Cached per order.
pub fn gauss_legendre(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<std::sync::Mutex<std::collections::HashMap<usize, &'static (Vec<f64>, Vec<f64>)>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(std::collections::HashMap::new()));
    let mut map = cache.lock().unwrap();
    if let Some(v) = map.get(&n) {
        return v;
    }
    let computed = Box::leak(Box::new(compute_gauss_legendre(n)));
    map.insert(n, computed);
    computed
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Chebyshev-like initial guess, then Newton on P_n
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..64 {
            let (p, d) = legendre_and_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Real-valued convenience wrapper: integrate a real integrand with composite
/// Gauss-Legendre panels of fixed width (no error estimate; the caller picks
/// the panel width from smoothness knowledge).
pub fn gl_panels<F: FnMut(f64) -> f64>(a: f64, b: f64, panel_width: f64, order: usize, f: &mut F) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let n_panels = (((b - a) / panel_width).ceil() as usize).max(1);
    let w = (b - a) / n_panels as f64;
    let mut total = 0.0;
    for i in 0..n_panels {
        let pa = a + i as f64 * w;
        let c = pa + 0.5 * w;
        let h = 0.5 * w;
        for (x, wt) in nodes.iter().zip(weights) {
            total += wt * h * f(c + h * x);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gk15_polynomial_exact() {
        // degree-13 polynomial integrated exactly by the Kronrod rule
        let mut f = |x: f64| Complex64::new(x.powi(13) + 3.0 * x.powi(4) - x + 2.0, 0.0);
        let (v, e) = gk15(-1.0, 1.0, &mut f);
        let exact = 2.0 * (3.0 / 5.0 + 2.0);
        assert!((v.re - exact).abs() < 1e-14, "got {} want {exact}", v.re);
        assert!(e < 1e-12);
    }

    #[test]
    fn adaptive_handles_oscillation() {
        let mut f = |x: f64| Complex64::new((40.0 * x).sin(), (40.0 * x).cos());
        let (v, _e, n) = adaptive_gk15(0.0, PI, 1e-12, 30, &mut f);
        let exact_re = (1.0 - (40.0 * PI).cos()) / 40.0;
        let exact_im = (40.0 * PI).sin() / 40.0;
        assert!((v.re - exact_re).abs() < 1e-11);
        assert!((v.im - exact_im).abs() < 1e-11);
        assert!(n > 15);
    }

    #[test]
    fn gauss_legendre_weights_sum_to_two() {
        for n in [6, 12, 16, 24] {
            let (nodes, weights) = gauss_legendre(n);
            let s: f64 = weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-13);
            for w in nodes.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn gl_panels_smooth_exp() {
        let mut f = |x: f64| (-x).exp();
        let v = gl_panels(0.0, 5.0, 1.0, 12, &mut f);
        assert!((v - (1.0 - (-5.0f64).exp())).abs() < 1e-13);
    }
}
