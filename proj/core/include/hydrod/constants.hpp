#pragma once

#include <stdexcept>
#include <string>

// Internal unit system: Hartree atomic units (hbar = m_e = e = 1, lengths in
// Bohr radii). Conversions to the presentation units (eV, cm) live here.

namespace hydrod {

struct PhysicalConstants {
    static constexpr double hartree_in_ev = 27.211386;
    static constexpr double bohr_in_cm = 0.529177e-8;
};

constexpr double hartree_to_ev(double e_hartree) noexcept {
    return e_hartree * PhysicalConstants::hartree_in_ev;
}

constexpr double ev_to_hartree(double e_ev) noexcept {
    return e_ev / PhysicalConstants::hartree_in_ev;
}

/// Gamma(x) for x a positive integer or half-integer multiple of 1/2.
/// Evaluated by upward recurrence from Gamma(1/2) = sqrt(pi) and
/// Gamma(1) = 1; exact (to rounding) for the arguments this code uses
/// (x = D/2 with 3 <= D <= 30).
double gamma_half_integer(double x);

} // namespace hydrod
