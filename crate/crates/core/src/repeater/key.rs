//! Error rates of the final pair and the asymptotic BB84 key fraction.

/// Binary entropy in bits.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// `(ē_z, ē_x)` for `n` segments.
pub fn qbers(n: usize, mu: f64, mu0: f64, f0: f64, dephasing_factor: f64) -> (f64, f64) {
    let depol = mu.powi(n as i32 - 1) * mu0.powi(n as i32);
    let e_z = 0.5 * (1.0 - depol);
    let e_x = 0.5 * (1.0 - depol * (2.0 * f0 - 1.0).powi(n as i32) * dephasing_factor);
    (e_z, e_x)
}

/// `max(0, 1 - h(ē_x) - h(ē_z))`.
pub fn secret_key_fraction(e_x: f64, e_z: f64) -> f64 {
    (1.0 - binary_entropy(e_x) - binary_entropy(e_z)).max(0.0)
}

/// The error rate `x*` with `h(x*) = 1/2`, below one half.
pub fn half_entropy_root() -> f64 {
    let (mut lo, mut hi) = (0.0, 0.5);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
