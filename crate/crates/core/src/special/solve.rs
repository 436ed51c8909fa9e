//! Bracketed Newton root finding shared by the generalized Lambert solvers.

/// Solve `f(w) = 0` on a bracket `[a, b]` with a sign change between the
/// endpoints. `f` returns `(value, derivative)`.
///
/// Newton steps are accepted only while they stay inside the bracket and
/// shrink at least as fast as bisection; otherwise the iteration bisects.
/// This keeps convergence guaranteed even where the residual grows
/// double-exponentially (q-exponentials near their cutoff).
pub fn newton_bisect<F>(f: F, a: f64, b: f64, abs_tol: f64) -> f64
where
    F: Fn(f64) -> (f64, f64),
{
    let (fa, _) = f(a);
    if fa == 0.0 {
        return a;
    }
    let (fb, _) = f(b);
    if fb == 0.0 {
        return b;
    }
    // xl carries f <= 0, xh carries f >= 0.
    let (mut xl, mut xh) = if fa < 0.0 { (a, b) } else { (b, a) };

    let mut w = 0.5 * (xl + xh);
    let mut dx_old = (xh - xl).abs();
    let mut dx = dx_old;
    let (mut fw, mut dfw) = f(w);

    for _ in 0..200 {
        if fw == 0.0 {
            return w;
        }
        if fw < 0.0 {
            xl = w;
        } else {
            xh = w;
        }

        let newton_in_bracket = ((w - xh) * dfw - fw) * ((w - xl) * dfw - fw) <= 0.0;
        let newton_fast = (2.0 * fw).abs() <= (dx_old * dfw).abs();
        dx_old = dx;
        if fw.is_finite() && dfw.is_finite() && dfw != 0.0 && newton_in_bracket && newton_fast {
            dx = fw / dfw;
            w -= dx;
        } else {
            dx = 0.5 * (xh - xl);
            w = 0.5 * (xl + xh);
        }
        if dx.abs() < abs_tol * (1.0 + w.abs()) {
            return w;
        }
        let r = f(w);
        fw = r.0;
        dfw = r.1;
    }
    w
}
