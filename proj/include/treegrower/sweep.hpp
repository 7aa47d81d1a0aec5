#ifndef TREEGROWER_SWEEP_HPP
#define TREEGROWER_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treegrower/exact.hpp"
#include "treegrower/growth.hpp"
#include "treegrower/random_walk.hpp"

namespace treegrower {

/// Scaling sweep: closed-form series for every t (cheap at any t), empirical
/// graph metrics where the tree fits the vertex budget, optional Monte Carlo
/// mean-hitting estimates. The paper-style log-log slopes come from the
/// closed-form hitting series for the subdivision operator and from the
/// empirical Wiener route for the star variant (which has no closed form).
struct ScalingConfig {
    GrowthOperator op = GrowthOperator::Phi;
    SeedSpec seed;
    std::uint32_t t_min = 0;
    std::uint32_t t_max = 6;
    std::uint64_t vertex_budget = kDefaultVertexBudget;

    bool monte_carlo = false;
    double mc_target_rel_se = 0.01;   // two-stage pilot sizes the main run
    std::uint64_t mc_pilot_pairs = 48;
    std::uint64_t mc_min_pairs = 64;
    std::uint64_t mc_max_pairs = 200'000;
    std::uint64_t walks_per_pair = 1;
    std::uint64_t master_seed = 1;
    unsigned workers = 1;
    std::uint64_t step_cap = kDefaultStepCap;

    /// Slope regression window [lo, hi]; defaults to [t_min, t_max].
    std::optional<std::pair<std::uint32_t, std::uint32_t>> slope_window;
};

struct ScalingRow {
    std::uint32_t t = 0;
    BigInt n;
    BigInt diameter_closed;
    std::optional<BigInt> wiener_closed;    // Phi only
    std::optional<BigRat> hitting_closed;   // Phi only
    std::optional<std::uint64_t> diameter_emp;
    std::optional<BigInt> wiener_emp;
    std::optional<BigRat> hitting_emp;      // 2 W_emp / n
    std::optional<WalkEstimate> mc;
    std::optional<double> dlog_hitting;     // increment slope vs previous row
    std::optional<double> dlog_diameter;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;
    std::optional<double> slope_hitting;    // OLS log<H> vs log n over window
    std::optional<double> slope_diameter;   // OLS log D vs log n over window
    std::pair<std::uint32_t, std::uint32_t> slope_window;
    std::string hitting_source;             // "closed_form" or "empirical"
};

ScalingResult run_scaling(const ScalingConfig& config);

/// RFC-4180-style rows (decimals, 15 significant digits) plus '#' footer
/// lines carrying the fitted slopes.
std::string scaling_to_csv(const ScalingResult& result);

/// Ordinary least squares; returns the slope of y on x.
double ols_slope(std::span<const double> xs, std::span<const double> ys);

} // namespace treegrower

#endif
