//! Sign-change scanning and bisection.

use super::{NumericsError, Scalar};
use crate::par;

/// Brackets [t₁, t₂] on the grid lo, lo+step, … ≤ hi where f changes sign.
///
/// Grid values are computed in parallel (when enabled) and the brackets are
/// returned in increasing order.
pub fn find_sign_changes<S, F>(f: F, lo: S, hi: S, step: S) -> Result<Vec<(S, S)>, NumericsError>
where
    S: Scalar,
    F: Fn(&S) -> S + Sync,
{
    if step <= S::zero() {
        return Err(NumericsError::Domain("step must be positive".into()));
    }
    if hi < lo {
        return Err(NumericsError::Domain("empty interval".into()));
    }
    let n = ((hi.clone() - lo.clone()) / step.clone()).to_f64().floor() as usize;
    let grid: Vec<S> = (0..=n)
        .map(|i| lo.clone() + step.clone() * S::from_i64(i as i64))
        .collect();
    let values = par::map(&grid, |t| f(t));
    let mut out = Vec::new();
    for i in 1..grid.len() {
        let (a, b) = (&values[i - 1], &values[i]);
        if sign(a) * sign(b) < 0 {
            out.push((grid[i - 1].clone(), grid[i].clone()));
        }
    }
    Ok(out)
}

fn sign<S: Scalar>(v: &S) -> i32 {
    if *v > S::zero() {
        1
    } else if *v < S::zero() {
        -1
    } else {
        0
    }
}

/// Bisection to bracket width `tol`; returns the midpoint.
pub fn refine_bracket<S, F>(f: F, bracket: (S, S), tol: f64) -> Result<S, NumericsError>
where
    S: Scalar,
    F: Fn(&S) -> S,
{
    let (mut a, mut b) = bracket;
    let mut fa = f(&a);
    let fb = f(&b);
    let (sa, sb) = (sign(&fa), sign(&fb));
    if sa == 0 {
        return Ok(a);
    }
    if sb == 0 {
        return Ok(b);
    }
    if sa * sb > 0 {
        return Err(NumericsError::Domain("refinement of a non-bracket".into()));
    }
    while (b.clone() - a.clone()).to_f64().abs() > tol {
        let m = (a.clone() + b.clone()) * S::half();
        let fm = f(&m);
        let sm = sign(&fm);
        if sm == 0 {
            return Ok(m);
        }
        if sm == sign(&fa) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok((a + b) * S::half())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosine_brackets() {
        let b = find_sign_changes(|t: &f64| t.cos(), 0.0, 10.0, 0.5).unwrap();
        assert_eq!(b.len(), 3);
        let roots: Vec<f64> = b
            .iter()
            .map(|br| refine_bracket(|t: &f64| t.cos(), *br, 1e-12).unwrap())
            .collect();
        let pi = std::f64::consts::PI;
        for (r, k) in roots.iter().zip([0.5, 1.5, 2.5]) {
            assert!((r - k * pi).abs() < 1e-10);
        }
    }

    #[test]
    fn no_sign_change() {
        assert!(find_sign_changes(|t: &f64| t * t + 1.0, 0.0, 10.0, 0.5)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn refine_to_half_pi() {
        let r = refine_bracket(|t: &f64| t.cos(), (1.0, 2.0), 1e-10).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    }

    #[test]
    fn bad_inputs() {
        assert!(find_sign_changes(|t: &f64| *t, 0.0, 1.0, 0.0).is_err());
        assert!(refine_bracket(|t: &f64| t * t + 1.0, (0.0, 1.0), 1e-6).is_err());
    }
}
