use logical_noise::poly::Poly;

const SIG_DIGITS: i32 = 12;

/// Decimal with 12 significant digits; scientific outside `[1e-6, 1e15)`.
pub fn num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-6..15).contains(&mag) {
        return format!("{:.*e}", (SIG_DIGITS - 1) as usize, x);
    }
    let decimals = (SIG_DIGITS - 1 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Coefficient `k` of `poly` as `num/den`.
pub fn coeff(poly: &Poly, k: usize) -> String {
    let c = poly.coeff(k);
    format!("{}/{}", c.numer(), c.denom())
}
