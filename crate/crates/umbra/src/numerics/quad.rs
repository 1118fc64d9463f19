//! Adaptive Gauss–Legendre quadrature.
//!
//! Each panel compares one n-point rule against the same rule on its two
//! halves; the halves are kept, so a split costs only 2n new evaluations.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{NumericsError, Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SemiInfinite {
    /// t = a + u/(1−u), u ∈ [0, 1).
    RationalMap,
    /// March panels of the given width until three in a row are negligible.
    /// Suited to exponentially decaying (possibly oscillating) integrands.
    Panels { width: f64 },
}

#[derive(Clone, Debug)]
pub enum Domain<S> {
    Finite(S, S),
    SemiInfinite(S),
}

#[derive(Clone, Debug)]
pub struct Quadrature {
    /// Absolute tolerance.
    pub tol: f64,
    pub max_subdivisions: usize,
    pub semi_infinite: SemiInfinite,
    /// Gauss–Legendre points per panel; 0 picks the scalar's default.
    pub order: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            tol: 1e-12,
            max_subdivisions: 4000,
            semi_infinite: SemiInfinite::RationalMap,
            order: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuadResult<V> {
    pub value: V,
    pub error: f64,
    /// False when the subdivision budget ran out before `tol` was met.
    pub converged: bool,
    pub evaluations: usize,
}

impl Quadrature {
    pub fn with_tol(tol: f64) -> Self {
        Quadrature {
            tol,
            ..Default::default()
        }
    }

    pub fn semi_infinite(mut self, mode: SemiInfinite) -> Self {
        self.semi_infinite = mode;
        self
    }

    pub fn integrate<S, V, F>(&self, f: F, domain: Domain<S>) -> Result<QuadResult<V>, NumericsError>
    where
        S: Scalar,
        V: Vector<S>,
        F: Fn(&S) -> V,
    {
        match domain {
            Domain::Finite(a, b) => self.finite(&f, a, b, self.tol),
            Domain::SemiInfinite(a) => match self.semi_infinite {
                SemiInfinite::RationalMap => {
                    let g = |u: &S| {
                        let one = S::one();
                        let d = one.clone() - u.clone();
                        let t = a.clone() + u.clone() / d.clone();
                        let jac = one / (d.clone() * d);
                        f(&t).scale(&jac)
                    };
                    self.finite(&g, S::zero(), S::one(), self.tol)
                }
                SemiInfinite::Panels { width } => self.march(&f, a, width),
            },
        }
    }

    fn march<S, V, F>(&self, f: &F, a: S, width: f64) -> Result<QuadResult<V>, NumericsError>
    where
        S: Scalar,
        V: Vector<S>,
        F: Fn(&S) -> V,
    {
        let w = S::from_f64(width);
        let mut lo = a;
        let mut total: Option<V> = None;
        let mut error = 0.0;
        let mut evals = 0;
        let mut quiet = 0;
        let mut converged = true;
        let mut k = 0usize;
        loop {
            let hi = lo.clone() + w.clone();
            let budget = self.tol / 2f64.powi((k as i32 + 1).min(60));
            let r = self.finite(f, lo.clone(), hi.clone(), budget.max(self.tol * 1e-3))?;
            evals += r.evaluations;
            error += r.error;
            converged &= r.converged;
            let size = r.value.norm();
            total = Some(match total {
                None => r.value,
                Some(t) => t.add(&r.value),
            });
            if size + r.error < self.tol * 1e-3 {
                quiet += 1;
                if quiet >= 3 {
                    break;
                }
            } else {
                quiet = 0;
            }
            k += 1;
            if k > self.max_subdivisions {
                converged = false;
                break;
            }
            lo = hi;
        }
        Ok(QuadResult {
            value: total.expect("at least one panel"),
            error,
            converged,
            evaluations: evals,
        })
    }

    fn finite<S, V, F>(&self, f: &F, a: S, b: S, tol: f64) -> Result<QuadResult<V>, NumericsError>
    where
        S: Scalar,
        V: Vector<S>,
        F: Fn(&S) -> V,
    {
        if a == b {
            let z = f(&a).zero_like();
            return Ok(QuadResult {
                value: z,
                error: 0.0,
                converged: true,
                evaluations: 1,
            });
        }
        if b < a {
            let r = self.finite(f, b, a, tol)?;
            return Ok(QuadResult {
                value: r.value.scale(&S::from_i64(-1)),
                ..r
            });
        }
        let n = if self.order == 0 { S::panel_order() } else { self.order };
        let rule = S::gauss_legendre(n);
        let mut evals = 0usize;
        let mut rule_on = |lo: &S, hi: &S| -> Result<(V, f64), NumericsError> {
            let half = S::half();
            let c = (lo.clone() + hi.clone()) * half.clone();
            let h = (hi.clone() - lo.clone()) * half;
            let mut acc: Option<V> = None;
            let mut mag = 0.0;
            for (x, w) in rule.iter() {
                let t = c.clone() + h.clone() * x.clone();
                let v = f(&t);
                if !v.is_finite() {
                    return Err(NumericsError::NonFinite(format!("integrand at t = {:?}", t.to_f64())));
                }
                mag += v.norm() * w.to_f64();
                let term = v.scale(w);
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term),
                });
            }
            evals += rule.len();
            Ok((acc.expect("rule has nodes").scale(&h), mag * h.to_f64().abs()))
        };

        let make = |lo: S,
                    hi: S,
                    coarse: V,
                    rule_on: &mut dyn FnMut(&S, &S) -> Result<(V, f64), NumericsError>|
         -> Result<Panel<S, V>, NumericsError> {
            let mid = (lo.clone() + hi.clone()) * S::half();
            let (l, lm) = rule_on(&lo, &mid)?;
            let (r, rm) = rule_on(&mid, &hi)?;
            let fine = l.add(&r);
            let err = coarse.sub(&fine).norm();
            let floor = 64.0 * S::unit_roundoff() * (lm + rm);
            Ok(Panel {
                lo,
                mid,
                hi,
                left: l,
                right: r,
                err,
                floor,
            })
        };

        let (coarse, _) = rule_on(&a, &b)?;
        let first = make(a, b, coarse, &mut rule_on)?;
        let mut heap = BinaryHeap::new();
        let mut total_err = first.err;
        let mut settled: Vec<Panel<S, V>> = Vec::new();
        heap.push(ByErr(first));
        let mut splits = 0usize;
        let mut converged = true;
        while total_err > tol {
            let Some(ByErr(p)) = heap.pop() else { break };
            if p.err <= p.floor {
                // rounding-limited: splitting further cannot help
                settled.push(p);
                continue;
            }
            if splits >= self.max_subdivisions {
                heap.push(ByErr(p));
                converged = false;
                break;
            }
            splits += 1;
            total_err -= p.err;
            let Panel {
                lo,
                mid,
                hi,
                left,
                right,
                ..
            } = p;
            let a1 = make(lo, mid.clone(), left, &mut rule_on)?;
            let a2 = make(mid, hi, right, &mut rule_on)?;
            total_err += a1.err + a2.err;
            heap.push(ByErr(a1));
            heap.push(ByErr(a2));
        }
        // Sum in a fixed order so results are independent of heap layout.
        let mut panels: Vec<Panel<S, V>> = heap.into_iter().map(|b| b.0).chain(settled).collect();
        panels.sort_by(|x, y| x.lo.partial_cmp(&y.lo).unwrap_or(Ordering::Equal));
        let mut error = 0.0;
        let mut value: Option<V> = None;
        for p in &panels {
            error += p.err;
            let v = p.left.add(&p.right);
            value = Some(match value {
                None => v,
                Some(acc) => acc.add(&v),
            });
        }
        let floor: f64 = panels.iter().map(|p| p.floor).sum();
        if error > tol && error <= floor {
            // the requested tolerance is below the rounding floor
            converged = true;
        }
        Ok(QuadResult {
            value: value.expect("at least one panel"),
            error,
            converged,
            evaluations: evals,
        })
    }
}

struct Panel<S, V> {
    lo: S,
    mid: S,
    hi: S,
    left: V,
    right: V,
    err: f64,
    floor: f64,
}

struct ByErr<S, V>(Panel<S, V>);

impl<S, V> PartialEq for ByErr<S, V> {
    fn eq(&self, other: &Self) -> bool {
        self.0.err.total_cmp(&other.0.err) == Ordering::Equal
    }
}
impl<S, V> Eq for ByErr<S, V> {}
impl<S, V> PartialOrd for ByErr<S, V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<S, V> Ord for ByErr<S, V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.err.total_cmp(&other.0.err)
    }
}

/// Convenience wrapper: finite or semi-infinite integral with default settings.
pub fn integrate<S, V, F>(f: F, domain: Domain<S>, tol: f64) -> Result<QuadResult<V>, NumericsError>
where
    S: Scalar,
    V: Vector<S>,
    F: Fn(&S) -> V,
{
    Quadrature::with_tol(tol).integrate(f, domain)
}
