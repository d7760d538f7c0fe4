//! Asymptotic fits of partial sums against polynomials in log N, plus
//! independent numeric estimates of γ and ζ(k) used as test oracles.

use super::SeqError;

/// Least-squares fit of S(f)_n against powers of log n over the tail
/// window [N/2, N].
#[derive(Clone, Debug)]
pub struct FitReport {
    /// Coefficients of the fitted polynomial in log n, index = degree.
    pub coefficients: Vec<f64>,
    pub window: (usize, usize),
    pub max_residual: f64,
    /// Mean absolute residual over the first and second halves of the
    /// window; a decreasing pair supports the O((log N)^A / N) remainder.
    pub residual_first_half: f64,
    pub residual_second_half: f64,
    pub ill_conditioned: bool,
}

/// Fit S(f)_n ≈ P(log n) on the window [N/2, N] by ordinary least
/// squares. The caller picks the polynomial degree; N should be large
/// (10⁴ and up) for the log powers to separate.
pub fn asymptotic_fit(f: &[f64], degree: usize) -> Result<FitReport, SeqError> {
    let n = f.len();
    if n < 16 || n / 2 < degree + 2 {
        return Err(SeqError::TooShort {
            need: 16.max(2 * (degree + 2)),
            have: n,
        });
    }
    let lo = n / 2;
    // accumulate normal equations over the window
    let dim = degree + 1;
    let mut ata = vec![vec![0.0f64; dim]; dim];
    let mut aty = vec![0.0f64; dim];
    let mut prefix = 0.0f64;
    let mut rows: Vec<(f64, f64)> = Vec::with_capacity(n - lo + 1);
    for (idx, value) in f.iter().enumerate() {
        prefix += value;
        let pos = idx + 1;
        if pos < lo {
            continue;
        }
        let x = (pos as f64).ln();
        rows.push((x, prefix));
        let mut powers = vec![1.0; dim];
        for d in 1..dim {
            powers[d] = powers[d - 1] * x;
        }
        for i in 0..dim {
            for j in 0..dim {
                ata[i][j] += powers[i] * powers[j];
            }
            aty[i] += powers[i] * prefix;
        }
    }
    let (coefficients, ill_conditioned) = solve_normal(ata, aty);
    let eval = |x: f64| {
        let mut acc = 0.0;
        let mut p = 1.0;
        for c in &coefficients {
            acc += c * p;
            p *= x;
        }
        acc
    };
    let mut max_residual = 0.0f64;
    let half = rows.len() / 2;
    let mut sums = [0.0f64; 2];
    let mut counts = [0usize; 2];
    for (i, (x, y)) in rows.iter().enumerate() {
        let r = (y - eval(*x)).abs();
        max_residual = max_residual.max(r);
        let bucket = usize::from(i >= half);
        sums[bucket] += r;
        counts[bucket] += 1;
    }
    Ok(FitReport {
        coefficients,
        window: (lo, n),
        max_residual,
        residual_first_half: sums[0] / counts[0].max(1) as f64,
        residual_second_half: sums[1] / counts[1].max(1) as f64,
        ill_conditioned,
    })
}

/// Gaussian elimination with partial pivoting; flags near-singular
/// systems instead of failing.
fn solve_normal(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> (Vec<f64>, bool) {
    let n = b.len();
    let mut ill = false;
    let scale: f64 = a
        .iter()
        .flat_map(|row| row.iter().map(|x| x.abs()))
        .fold(0.0, f64::max)
        .max(1.0);
    for col in 0..n {
        let (pivot, mag) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag < 1e-12 * scale {
            ill = true;
            continue;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[r][col] / a[col][col];
            #[allow(clippy::needless_range_loop)]
            for c in col..n {
                a[r][c] -= factor * a[col][c];
            }
            b[r] -= factor * b[col];
        }
    }
    let x = (0..n)
        .map(|i| {
            if a[i][i].abs() < 1e-12 * scale {
                0.0
            } else {
                b[i] / a[i][i]
            }
        })
        .collect();
    (x, ill)
}

/// Euler's constant estimated from the harmonic tail: Σ_{k≤n} 1/k − ln n.
/// The error is ≈ 1/(2n).
pub fn euler_gamma_estimate(n: usize) -> f64 {
    let mut sum = 0.0;
    for k in 1..=n {
        sum += 1.0 / k as f64;
    }
    sum - (n as f64).ln()
}

/// ζ(k) estimated by a truncated sum with the integral tail correction
/// Σ_{j≤n} j^{−k} + n^{1−k}/(k−1) − n^{−k}/2.
pub fn zeta_estimate(k: u32, n: usize) -> f64 {
    assert!(k >= 2);
    let mut sum = 0.0;
    for j in 1..=n {
        sum += (j as f64).powi(-(k as i32));
    }
    let nf = n as f64;
    sum + nf.powi(1 - k as i32) / (k as f64 - 1.0) - nf.powi(-(k as i32)) / 2.0
}

/// The harmonic sequence 1, 1/2, 1/3, … as floats.
pub fn harmonic_sequence(n: usize) -> Vec<f64> {
    (1..=n).map(|k| 1.0 / k as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_estimate_is_stable() {
        let a = euler_gamma_estimate(100_000);
        let b = euler_gamma_estimate(1_000_000);
        // both near the true value; difference shrinks like 1/(2n)
        assert!((a - b).abs() < 1e-5);
        assert!((0.5 < a) && (a < 0.6));
    }

    #[test]
    fn zeta_two_estimate_matches_quadratic_tail() {
        let a = zeta_estimate(2, 10_000);
        let b = zeta_estimate(2, 100_000);
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }

    #[test]
    fn harmonic_fit_recovers_log_plus_gamma() {
        let n = 100_000;
        let f = harmonic_sequence(n);
        let report = asymptotic_fit(&f, 1).unwrap();
        assert!(!report.ill_conditioned);
        let gamma = euler_gamma_estimate(n);
        assert!(
            (report.coefficients[0] - gamma).abs() < 1e-4,
            "constant {} vs γ ≈ {gamma}",
            report.coefficients[0]
        );
        assert!((report.coefficients[1] - 1.0).abs() < 1e-4);
        assert!(report.residual_second_half <= report.residual_first_half);
    }

    #[test]
    fn eventually_constant_sums_fit_degree_zero() {
        let mut f = vec![0.0; 5_000];
        f[0] = 1.0;
        let report = asymptotic_fit(&f, 0).unwrap();
        assert!((report.coefficients[0] - 1.0).abs() < 1e-12);
        assert!(report.max_residual < 1e-12);
    }

    #[test]
    fn inverse_squares_fit_to_zeta_two() {
        let n = 200_000;
        let f: Vec<f64> = (1..=n).map(|k| 1.0 / (k as f64 * k as f64)).collect();
        let report = asymptotic_fit(&f, 0).unwrap();
        let z2 = zeta_estimate(2, 100_000);
        assert!(
            (report.coefficients[0] - z2).abs() < 1e-4,
            "{} vs ζ(2) ≈ {z2}",
            report.coefficients[0]
        );
        // remainder decays like 1/N
        assert!(report.residual_second_half < report.residual_first_half);
    }

    #[test]
    fn short_input_is_rejected() {
        assert!(matches!(
            asymptotic_fit(&[1.0; 8], 1),
            Err(SeqError::TooShort { .. })
        ));
    }
}
