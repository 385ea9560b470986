//! Sturm bisection eigensolver for symmetric tridiagonal matrices.

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix: main diagonal plus one off-diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTridiagonal {
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diagonal: Vec<f64>, off_diagonal: Vec<f64>) -> Self {
        assert_eq!(
            off_diagonal.len() + 1,
            diagonal.len(),
            "off-diagonal must be one shorter than the diagonal"
        );
        SymTridiagonal {
            diagonal,
            off_diagonal,
        }
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    /// Gershgorin bounds on the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::MAX;
        let mut hi = f64::MIN;
        for i in 0..n {
            let left = if i > 0 {
                self.off_diagonal[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.off_diagonal[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diagonal[i] - left - right);
            hi = hi.max(self.diagonal[i] + left + right);
        }
        (lo - 1.0, hi + 1.0)
    }
}

/// Number of eigenvalues strictly below `lambda`: count of negative
/// pivots in the LDLᵀ factorization of T − λI.
pub fn sturm_count(t: &SymTridiagonal, lambda: f64) -> usize {
    let n = t.dim();
    if n == 0 {
        return 0;
    }
    let guard = 1e-300;
    let mut count = 0;
    let mut q = t.diagonal[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < guard {
            if q >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            q
        };
        q = (t.diagonal[i] - lambda) - t.off_diagonal[i - 1] * t.off_diagonal[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `count` smallest eigenvalues, each bracketed by bisection on the
/// Sturm count down to absolute width `tol`.
pub fn eigenvalues_sturm(t: &SymTridiagonal, count: usize, tol: f64) -> Result<Vec<f64>> {
    if count < 1 || count > t.dim() {
        return Err(Error::EigenSolver(format!(
            "requested {count} eigenvalues of a {} x {} matrix",
            t.dim(),
            t.dim()
        )));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    if t.diagonal
        .iter()
        .chain(&t.off_diagonal)
        .any(|v| !v.is_finite())
    {
        return Err(Error::EigenSolver(
            "matrix entries must be finite to establish Gershgorin bounds".into(),
        ));
    }
    let (lo, hi) = t.gershgorin();
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(Error::EigenSolver(
            "Gershgorin bounds do not bracket the spectrum".into(),
        ));
    }
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut a = lo;
        let mut b = hi;
        while b - a > tol {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(t, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: eigenvalue counting through the leading
    /// principal minor recurrence of det(T − λI), with per-step
    /// rescaling, then the same bisection. A distinct route from the
    /// LDLᵀ pivots used by the implementation.
    fn charpoly_count(t: &SymTridiagonal, lambda: f64) -> usize {
        let n = t.dim();
        let mut p_prev = 1.0f64;
        let mut p = t.diagonal[0] - lambda;
        let mut sign_changes = if p < 0.0 { 1 } else { 0 };
        let mut last_sign = p >= 0.0;
        for i in 1..n {
            let e2 = t.off_diagonal[i - 1] * t.off_diagonal[i - 1];
            let mut next = (t.diagonal[i] - lambda) * p - e2 * p_prev;
            // rescale to dodge overflow; signs are all that matter
            let scale = next.abs().max(p.abs());
            if scale > 1e150 {
                next /= scale;
                p /= scale;
            }
            p_prev = p;
            p = next;
            let sign = if p == 0.0 { !last_sign } else { p >= 0.0 };
            if sign != last_sign {
                sign_changes += 1;
            }
            last_sign = sign;
        }
        sign_changes
    }

    fn charpoly_eigenvalues(t: &SymTridiagonal, count: usize) -> Vec<f64> {
        let (lo, hi) = t.gershgorin();
        (0..count)
            .map(|k| {
                let (mut a, mut b) = (lo, hi);
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    if charpoly_count(t, mid) <= k {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                0.5 * (a + b)
            })
            .collect()
    }

    fn splitmix(state: &mut u64) -> f64 {
        *state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        ((z ^ (z >> 31)) as f64) / (u64::MAX as f64)
    }

    #[test]
    fn two_by_two_closed_form() {
        let t = SymTridiagonal::new(vec![1.0, 3.0], vec![-1.0]);
        let ev = eigenvalues_sturm(&t, 2, 1e-12).unwrap();
        let s2 = 2.0f64.sqrt();
        assert!((ev[0] - (2.0 - s2)).abs() < 1e-10);
        assert!((ev[1] - (2.0 + s2)).abs() < 1e-10);
    }

    #[test]
    fn matches_charpoly_oracle_on_random_matrices() {
        let mut state = 0x5eed_u64;
        for trial in 0..6 {
            let n = 50;
            let diag: Vec<f64> = (0..n).map(|_| 4.0 * splitmix(&mut state) - 2.0).collect();
            let off: Vec<f64> = (0..n - 1)
                .map(|_| 2.0 * splitmix(&mut state) - 1.0)
                .collect();
            let t = SymTridiagonal::new(diag, off);
            let got = eigenvalues_sturm(&t, 8, 1e-12).unwrap();
            let expect = charpoly_eigenvalues(&t, 8);
            for (a, b) in got.iter().zip(&expect) {
                assert!((a - b).abs() < 1e-9, "trial {trial}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn count_is_consistent_with_eigenvalues() {
        let mut state = 0xfeed_u64;
        let n = 80;
        let diag: Vec<f64> = (0..n).map(|_| 4.0 * splitmix(&mut state)).collect();
        let off: Vec<f64> = (0..n - 1).map(|_| splitmix(&mut state) - 0.5).collect();
        let t = SymTridiagonal::new(diag, off);
        let ev = eigenvalues_sturm(&t, n, 1e-11).unwrap();
        for (k, lambda) in ev.iter().enumerate() {
            let below = sturm_count(&t, lambda + 1e-8);
            assert!(below > k, "count at eigenvalue {k} is {below}");
        }
    }

    #[test]
    fn rejects_bad_requests() {
        let t = SymTridiagonal::new(vec![1.0, 2.0], vec![0.5]);
        assert!(eigenvalues_sturm(&t, 0, 1e-10).is_err());
        assert!(eigenvalues_sturm(&t, 3, 1e-10).is_err());
        assert!(eigenvalues_sturm(&t, 1, 0.0).is_err());
        let bad = SymTridiagonal::new(vec![f64::NAN, 2.0], vec![0.5]);
        assert!(eigenvalues_sturm(&bad, 1, 1e-10).is_err());
    }
}
