//! Gauss–Legendre and tanh–sinh rules.

use std::f64::consts::{FRAC_PI_2, PI};

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = x;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// `n`-point Gauss–Legendre approximation of `int_a^b f`.
pub fn integrate_gl<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    x.iter()
        .zip(&w)
        .map(|(&xi, &wi)| wi * f(mid + half * xi))
        .sum::<f64>()
        * half
}

/// Tanh–sinh (double exponential) rule on `[a, b]`, suited to integrable
/// endpoint singularities.
pub fn integrate_tanh_sinh<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, level: u32) -> f64 {
    integrate_tanh_sinh_gaps(|x, _, _| f(x), a, b, level)
}

/// Tanh–sinh rule where the integrand also receives the distances `x - a`
/// and `b - x`, formed without cancellation near either endpoint.
pub fn integrate_tanh_sinh_gaps<F: FnMut(f64, f64, f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    level: u32,
) -> f64 {
    let h = 2f64.powi(-(level as i32));
    let len = b - a;
    let half = 0.5 * len;
    let mut sum = 0.0;
    let steps = (4.0 / h) as i64;
    for k in -steps..=steps {
        let t = k as f64 * h;
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let weight = FRAC_PI_2 * t.cosh() / (cu * cu);
        // 1 - |tanh(u)|
        let gap = (-u.abs()).exp() / cu;
        let near = half * gap;
        if near == 0.0 || weight == 0.0 {
            continue;
        }
        let far = len - near;
        let (x, da, db) = if t < 0.0 {
            (a + near, near, far)
        } else {
            (b - near, far, near)
        };
        sum += weight * f(x, da, db);
    }
    sum * h * half
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_exact_for_polynomials() {
        let v = integrate_gl(|x| x.powi(9) - 3.0 * x * x + 1.0, -1.0, 2.0, 5);
        let exact = (2f64.powi(10) - 1.0) / 10.0 - (8.0 + 1.0) + 3.0;
        assert!((v - exact).abs() < 1e-12);
        let (x, w) = gauss_legendre(1);
        assert_eq!((x[0], w[0]), (0.0, 2.0));
    }

    #[test]
    fn tanh_sinh_log_singularity() {
        let v = integrate_tanh_sinh(|x| x.ln(), 0.0, 1.0, 6);
        assert!((v + 1.0).abs() < 1e-12, "{v}");
        let w = integrate_tanh_sinh_gaps(|_, da, db| 1.0 / (da * db).sqrt(), 0.0, 1.0, 6);
        assert!((w - PI).abs() < 1e-9, "{w}");
    }
}
