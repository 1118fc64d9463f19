//! Series acceleration: alternating sums and extrapolation to a limit.

use super::{NumericsError, Scalar, Vector};

#[derive(Clone, Debug)]
pub struct Accelerated<V> {
    pub value: V,
    pub error: f64,
    pub terms_used: usize,
}

/// Number of terms the alternating accelerator needs for `digits` digits.
///
/// The Cohen–Villegas–Zagier weights converge like 5.828^{−n}.
pub fn alternating_terms_for(digits: u32) -> usize {
    ((f64::from(digits) + 3.0) / 5.828f64.log10()).ceil() as usize + 2
}

/// Sum of an alternating series from its leading terms.
///
/// `terms[k]` are the signed terms t₀, t₁, … of ∑ t_k. Every term is used
/// once with a fixed weight (Cohen–Villegas–Zagier), so the method is linear
/// and applies unchanged to vector-valued terms such as jets. The error
/// estimate compares against a run on three quarters of the terms.
pub fn accelerate_alternating<S, V>(terms: &[V]) -> Result<Accelerated<V>, NumericsError>
where
    S: Scalar,
    V: Vector<S>,
{
    if terms.len() < 4 {
        return Err(NumericsError::Acceleration("need at least four terms".into()));
    }
    check_alternating(terms)?;
    let n = terms.len();
    let full = cvz::<S, V>(terms);
    let short = cvz::<S, V>(&terms[..(3 * n) / 4]);
    let lead = terms[0].norm();
    let bound = 2.0 * lead / 5.828f64.powi(n as i32);
    let err = full.sub(&short).norm().max(bound);
    Ok(Accelerated {
        value: full,
        error: err,
        terms_used: n,
    })
}

fn check_alternating<S, V: Vector<S>>(terms: &[V]) -> Result<(), NumericsError> {
    let signs: Vec<Option<i32>> = terms.iter().map(|t| t.sign()).collect();
    if signs.iter().all(|s| s.is_some()) {
        for (k, w) in signs.windows(2).enumerate() {
            let (a, b) = (w[0].unwrap(), w[1].unwrap());
            if a == 0 || b == 0 {
                continue;
            }
            if a == b {
                return Err(NumericsError::Acceleration(format!(
                    "terms {k} and {} have the same sign (not alternating)",
                    k + 1
                )));
            }
        }
    }
    // magnitudes must be (weakly) decreasing, allowing rounding noise
    let tail = &terms[terms.len() / 4..];
    for (k, w) in tail.windows(2).enumerate() {
        let (a, b) = (w[0].norm(), w[1].norm());
        if b > a * (1.0 + 1e-9) + 1e-300 {
            return Err(NumericsError::Acceleration(format!(
                "term magnitudes increase near index {} (not decreasing)",
                k + terms.len() / 4
            )));
        }
    }
    Ok(())
}

fn cvz<S: Scalar, V: Vector<S>>(terms: &[V]) -> V {
    let n = terms.len() as i64;
    let three_plus = S::from_i64(3) + S::from_i64(8).sqrt();
    let mut d = S::one();
    for _ in 0..n {
        d = d * three_plus.clone();
    }
    d = (d.clone() + S::one() / d) * S::half();
    let mut b = S::from_i64(-1);
    let mut c = -d.clone();
    let mut acc = terms[0].zero_like();
    for (k, t) in terms.iter().enumerate() {
        let k = k as i64;
        c = b.clone() - c;
        // the weights are for ∑(−1)^k a_k; our terms carry the sign already
        let a = if k % 2 == 0 {
            t.clone()
        } else {
            t.scale(&S::from_i64(-1))
        };
        acc = acc.add(&a.scale(&c));
        let num = S::from_i64((k + n) * (k - n));
        let den = (S::from_i64(k) + S::half()) * S::from_i64(k + 1);
        b = b * num / den;
    }
    acc.scale(&(S::one() / d))
}

/// Neville extrapolation of values v(h_i) to h = 0.
pub fn extrapolate_to_zero<S, V>(h: &[S], v: &[V]) -> Result<V, NumericsError>
where
    S: Scalar,
    V: Vector<S>,
{
    if h.len() != v.len() || h.is_empty() {
        return Err(NumericsError::Acceleration("mismatched extrapolation data".into()));
    }
    let mut p: Vec<V> = v.to_vec();
    let n = h.len();
    for m in 1..n {
        for i in 0..n - m {
            // P_{i..i+m}(0) = (h_{i+m} P_{i..i+m-1} − h_i P_{i+1..i+m}) / (h_{i+m} − h_i)
            let hi = h[i].clone();
            let hj = h[i + m].clone();
            let den = hj.clone() - hi.clone();
            let num = p[i].scale(&hj).sub(&p[i + 1].scale(&hi));
            p[i] = num.scale(&(S::one() / den));
        }
    }
    Ok(p[0].clone())
}

/// Extrapolation when the error is a combination of the given powers of h:
/// v(h) = v₀ + ∑ c_j h^{p_j}. Uses exactly `powers.len() + 1` samples (the
/// last ones supplied).
pub fn richardson_powers<S, V>(h: &[S], v: &[V], powers: &[i32]) -> Result<V, NumericsError>
where
    S: Scalar,
    V: Vector<S>,
{
    let m = powers.len() + 1;
    if h.len() < m || v.len() != h.len() {
        return Err(NumericsError::Acceleration(
            "not enough samples for extrapolation".into(),
        ));
    }
    let h = &h[h.len() - m..];
    let v = &v[v.len() - m..];
    // Solve the m×m system for the coefficient of the constant column via
    // Gaussian elimination on the transposed problem: find weights w with
    // ∑ w_i = 1 and ∑ w_i h_i^{p} = 0 for every p.
    let mut a: Vec<Vec<S>> = Vec::with_capacity(m);
    let mut row0 = vec![S::one(); m];
    row0.push(S::one());
    a.push(row0);
    for &p in powers {
        let mut row: Vec<S> = h.iter().map(|hi| powi(hi, p)).collect();
        row.push(S::zero());
        a.push(row);
    }
    let w = solve(a)?;
    let mut acc = v[0].zero_like();
    for (wi, vi) in w.iter().zip(v) {
        acc = acc.add(&vi.scale(wi));
    }
    Ok(acc)
}

fn powi<S: Scalar>(x: &S, p: i32) -> S {
    let mut r = S::one();
    for _ in 0..p {
        r = r * x.clone();
    }
    r
}

fn solve<S: Scalar>(mut a: Vec<Vec<S>>) -> Result<Vec<S>, NumericsError> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if a[piv][col].abs().to_f64() == 0.0 {
            return Err(NumericsError::Acceleration("singular extrapolation system".into()));
        }
        a.swap(col, piv);
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            for c in col..=n {
                let v = a[r][c].clone() - factor.clone() * a[col][c].clone();
                a[r][c] = v;
            }
        }
    }
    Ok((0..n).map(|i| a[i][n].clone() / a[i][i].clone()).collect())
}
