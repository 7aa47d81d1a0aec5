#ifndef TREEGROWER_CLOSED_FORM_HPP
#define TREEGROWER_CLOSED_FORM_HPP

#include <cstdint>
#include <map>

#include "treegrower/exact.hpp"
#include "treegrower/tree.hpp"

namespace treegrower::closed_form {

/// n_t = 5^t (n0 - 1) + 1, for both growth operators.
BigInt vertex_count(const BigInt& n0, std::uint32_t t);

/// D_t = 3^t (d0 + 1) - 1 (each step wraps d0 via D = 2 + 3D).
BigInt diameter_phi(const BigInt& d0, std::uint32_t t);

/// D*_t = d0 + 2t.
BigInt diameter_phi_star(const BigInt& d0, std::uint32_t t);

/// Iterates W <- 75 W - 20 n^2 + 20 n alongside n <- 5n - 4, t times.
/// Exact integers throughout; W grows like 75^t.
BigInt wiener_recurrence(const BigInt& w0, const BigInt& n0, std::uint32_t t);

/// Direct evaluation of the closed-form mean hitting time
///   (2 / n_t) * { 75^t W0 - 4*5^t [ (15^t - 5^t)/10 (n0-1)^2 + (15^t - 1)/14 (n0-1) ] }
/// as an exact rational. The braces equal wiener_recurrence(w0, n0, t), i.e.
/// the value is exactly 2 W_t / n_t; tests enforce that identity.
BigRat mean_hitting_closed(const BigInt& w0, const BigInt& n0, std::uint32_t t);

/// Predicted exact degree census of the step-t tree grown from `seed`:
/// seed vertex of degree k contributes degree k*2^t; the A cohort born at
/// step j contributes 2(n_{j-1}-1) vertices of degree 2^{t-j+1}, the B cohort
/// as many of degree 2^{t-j}. Counts of equal degrees are summed.
std::map<BigInt, BigInt> degree_census_phi(const Tree& seed, std::uint32_t t);

/// Star-variant census: seed degree k becomes k*3^t; the cohort born at step
/// j contributes 4(n_{j-1}-1) leaves of degree 3^{t-j}.
std::map<BigInt, BigInt> degree_census_phi_star(const Tree& seed, std::uint32_t t);

struct ExponentSet {
    double gamma;              // ln5/ln2, cumulative-degree exponent
    double gamma_star;         // ln5/ln3
    double chi;                // 1 + ln3/ln5, mean-hitting scaling
    double diameter_exponent;  // ln3/ln5
    double chi_star;           // 1; star-variant hitting scales as n^1 up to a log factor
    bool chi_star_log_factor;  // true: the n^chi_star law carries an extra ln n
};

/// All values computed from logarithms, never hard-coded decimals.
ExponentSet predicted_exponents();

} // namespace treegrower::closed_form

#endif
