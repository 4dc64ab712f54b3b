//! Dense symmetric eigenvalue solver: Householder reduction to tridiagonal
//! form followed by implicitly shifted QL iteration with Wilkinson shifts.
//! Eigenvalues only; the entropy never needs eigenvectors.

use crate::error::{Error, Result};
use crate::matrices::SymMatrix;
use crate::spectral::Spectrum;

/// Default order cap for the dense solver. Worst-case runtime is O(n^3);
/// 4096 keeps it in the minutes range on one core.
pub const DEFAULT_DENSE_CAP: usize = 4096;

/// Default relative tolerance handed to [`eigenvalues_sym`] by the sweep
/// pipelines; the QL negligibility test floors it at machine epsilon, so this
/// asks for full accuracy.
pub const DEFAULT_EIG_TOL: f64 = f64::EPSILON;

const MAX_QL_SWEEPS: usize = 50;

/// All eigenvalues of a symmetric matrix, sorted descending, each accurate
/// to about `tol * ||m||` (floored at machine precision).
pub fn eigenvalues_sym(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    eigenvalues_sym_with_cap(m, tol, DEFAULT_DENSE_CAP)
}

/// [`eigenvalues_sym`] with an explicit order cap.
pub fn eigenvalues_sym_with_cap(m: &SymMatrix, tol: f64, cap: usize) -> Result<Spectrum> {
    let n = m.order();
    if n == 0 {
        return Err(Error::domain("eigenvalues of an empty matrix"));
    }
    if n > cap {
        return Err(Error::Resource(format!(
            "matrix order {n} exceeds dense eigensolver cap {cap}"
        )));
    }
    if m.data().iter().any(|x| !x.is_finite()) {
        return Err(Error::numeric("matrix has non-finite entries"));
    }

    let mut a = m.data().to_vec();
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    tridiagonalize(&mut a, n, &mut d, &mut e);
    // Shift the couplings so e[i] sits between d[i] and d[i+1].
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    ql_implicit(&mut d, &mut e, tol.max(f64::EPSILON))?;

    d.sort_unstable_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    Spectrum::new(d)
}

/// Householder reduction of a symmetric matrix (row-major, lower triangle
/// authoritative) to tridiagonal form. On return `d` holds the diagonal and
/// `e[1..]` the subdiagonal couplings `a(i, i-1)`.
fn tridiagonalize(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0f64;
        if l > 0 {
            let scale: f64 = a[i * n..i * n + l + 1].iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                e[i] = a[i * n + l];
            } else {
                for k in 0..=l {
                    let v = a[i * n + k] / scale;
                    a[i * n + k] = v;
                    h += v * v;
                }
                let f = a[i * n + l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;

                // p = A u / h over the leading (l+1) x (l+1) block, streaming
                // each lower-triangle row once to stay cache friendly.
                let (rows, urow) = a.split_at_mut(i * n);
                let u = &urow[..l + 1];
                for x in e[..=l].iter_mut() {
                    *x = 0.0;
                }
                for j in 0..=l {
                    let row = &rows[j * n..j * n + j + 1];
                    let uj = u[j];
                    let mut s = row[j] * uj;
                    for k in 0..j {
                        s += row[k] * u[k];
                        e[k] += row[k] * uj;
                    }
                    e[j] += s;
                }
                let mut f_acc = 0.0;
                for j in 0..=l {
                    e[j] /= h;
                    f_acc += e[j] * u[j];
                }
                // Rank-2 update A <- A - u q^T - q u^T with q = p - (u.p / 2h) u.
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = u[j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    let row = &mut rows[j * n..j * n + j + 1];
                    for k in 0..=j {
                        row[k] -= f * e[k] + g * u[k];
                    }
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[i * n + i];
    }
}

/// Implicit QL sweeps with Wilkinson shifts on a symmetric tridiagonal
/// matrix (`d` diagonal, `e` subdiagonal with `e[n-1]` unused). `tol` is the
/// relative negligibility threshold for off-diagonal entries.
fn ql_implicit(d: &mut [f64], e: &mut [f64], tol: f64) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= tol * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_SWEEPS {
                return Err(Error::numeric(format!(
                    "QL iteration did not converge within {MAX_QL_SWEEPS} sweeps"
                )));
            }
            // Wilkinson shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            let signed_r = if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + signed_r);
            let (mut s, mut c, mut p) = (1.0f64, 1.0f64, 0.0f64);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
