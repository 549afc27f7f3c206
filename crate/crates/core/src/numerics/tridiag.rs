//! Symmetric tridiagonal eigenproblems.
//!
//! `diag` has length `n`, `off` has length `n − 1` with `off[i]` coupling rows
//! `i` and `i + 1`.

use crate::error::{Error, Result};

/// Number of eigenvalues strictly below `x` (Sturm count of `T − xI`).
pub fn count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let e2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    (lo, hi)
}

/// The `k`-th smallest eigenvalue (0-based) by bisection.
pub fn kth_eigenvalue(diag: &[f64], off: &[f64], k: usize) -> f64 {
    let (mut lo, mut hi) = gershgorin(diag, off);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The `count` smallest eigenvalues, ascending.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Vec<f64> {
    (0..count.min(diag.len()))
        .map(|k| kth_eigenvalue(diag, off, k))
        .collect()
}

/// Solves `(T − λI) x = b` by Gaussian elimination with partial pivoting.
fn shifted_solve(diag: &[f64], off: &[f64], lambda: f64, b: &mut [f64]) {
    let n = diag.len();
    // rows carry up to three nonzeros: a[i] at column i, c[i] at i+1, f[i] at i+2
    let mut a: Vec<f64> = diag.iter().map(|d| d - lambda).collect();
    let mut c: Vec<f64> = (0..n).map(|i| if i + 1 < n { off[i] } else { 0.0 }).collect();
    let mut f = vec![0.0; n];
    let mut sub: Vec<f64> = off.to_vec();
    let tiny = f64::EPSILON * diag.iter().fold(1.0f64, |m, d| m.max(d.abs()));
    for i in 0..n.saturating_sub(1) {
        if sub[i].abs() > a[i].abs() {
            // swap rows i and i+1
            let (ai, ci, fi, bi) = (a[i], c[i], f[i], b[i]);
            a[i] = sub[i];
            c[i] = a[i + 1];
            f[i] = c[i + 1];
            b[i] = b[i + 1];
            sub[i] = ai;
            a[i + 1] = ci;
            c[i + 1] = fi;
            b[i + 1] = bi;
        }
        if a[i] == 0.0 {
            a[i] = tiny;
        }
        let m = sub[i] / a[i];
        a[i + 1] -= m * c[i];
        c[i + 1] -= m * f[i];
        b[i + 1] -= m * b[i];
    }
    if a[n - 1] == 0.0 {
        a[n - 1] = tiny;
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        if i + 1 < n {
            s -= c[i] * b[i + 1];
        }
        if i + 2 < n {
            s -= f[i] * b[i + 2];
        }
        b[i] = s / a[i];
    }
}

/// Unit eigenvector for an (accurate) eigenvalue, by inverse iteration.
/// Sign is fixed so the first entry of significant size is positive.
pub fn eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7919) % 13) as f64).collect();
    for _ in 0..3 {
        shifted_solve(diag, off, lambda, &mut v);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
    }
    let peak = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    v
}

/// Implicit QL with Wilkinson shifts, returning all eigenvalues (ascending)
/// together with the first component of each unit eigenvector.
pub fn eigen_first_components(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    if n > 0 {
        z[0] = 1.0;
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Structural(format!(
                    "QL iteration did not converge at index {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let t = z[i + 1];
                z[i + 1] = s * z[i] + c * t;
                z[i] = c * z[i] - s * t;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    Ok((idx.iter().map(|&i| d[i]).collect(), idx.iter().map(|&i| z[i]).collect()))
}
