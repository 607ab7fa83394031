//! Elementary link and timing model.

/// Attenuation length of the fiber, km.
pub const L_ATT_KM: f64 = 22.0;
/// Refractive index of the fiber.
pub const REFRACTIVE_INDEX: f64 = 1.44;
/// Speed of light in vacuum, km/s.
pub const C_VACUUM_KM_S: f64 = 3.0e5;
/// Default clock time per distribution attempt, s.
pub const DEFAULT_CLOCK_S: f64 = 1e-6;

/// Signal speed in fiber, km/s.
pub fn fiber_speed() -> f64 {
    C_VACUUM_KM_S / REFRACTIVE_INDEX
}

/// `p0 e^(-L0 / L_att)`.
pub fn link_success_prob(l0_km: f64, p0: f64) -> f64 {
    p0 * (-l0_km / L_ATT_KM).exp()
}

/// Duration of one distribution attempt, s.
pub fn time_unit(l0_km: f64, tau_clock: f64) -> f64 {
    tau_clock + l0_km / fiber_speed()
}

/// Dephasing strength accumulated by one stored qubit per attempt.
pub fn alpha_per_step(l0_km: f64, t_c: f64, tau_clock: f64) -> f64 {
    time_unit(l0_km, tau_clock) / t_c
}
