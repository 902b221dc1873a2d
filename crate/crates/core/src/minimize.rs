//! One-dimensional minimisation: uniform scan followed by golden-section refinement.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search on `[lo, hi]`, assumed unimodal there. Stops once
/// the bracket is narrower than `tol`; returns `(x, f(x))`.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        // the bracket stops shrinking once x1, x2 hit adjacent floats
        if x1 >= x2 {
            break;
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Minimum of `f` over `[lo, hi]`: evaluate `points` equally spaced samples,
/// then golden-section inside the cells adjacent to the best sample.
pub fn scan_then_refine<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, points: usize, tol: f64) -> (f64, f64) {
    assert!(points >= 2 && hi > lo);
    let step = (hi - lo) / (points - 1) as f64;
    let at = |k: usize| if k == points - 1 { hi } else { lo + step * k as f64 };
    let (best_k, best_f) =
        (0..points).map(|k| (k, f(at(k)))).fold((0, f64::INFINITY), |acc, (k, v)| if v < acc.1 { (k, v) } else { acc });
    let a = at(best_k.saturating_sub(1));
    let b = at((best_k + 1).min(points - 1));
    let (x, fx) = golden_section(&f, a, b, tol);
    if fx <= best_f {
        (x, fx)
    } else {
        (at(best_k), best_f)
    }
}
