#ifndef TREEGROWER_METRICS_HPP
#define TREEGROWER_METRICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treegrower/exact.hpp"
#include "treegrower/growth.hpp"
#include "treegrower/tree.hpp"

namespace treegrower {

/// Exact unweighted shortest-path distances from `source` (iterative BFS).
std::vector<std::uint32_t> bfs_distances(const Tree& tree, VertexId source);

struct DiameterResult {
    std::uint64_t diameter = 0;
    VertexId endpoint_a = 0;
    VertexId endpoint_b = 0;
};

/// Two-sweep BFS; exact on trees. Ties broken toward the lowest vertex id.
DiameterResult diameter_double_bfs(const Tree& tree);

/// Wiener index in one pass: every edge contributes s*(n-s) with s the
/// subtree size on one side. Iterative traversal; handles path-shaped trees
/// of depth well beyond 10^6.
BigInt wiener_linear(const Tree& tree);

/// Definition oracle: all-pairs BFS sum of distances. Guarded to n <= 20000.
BigInt wiener_brute(const Tree& tree);

std::map<std::uint64_t, std::uint64_t> degree_histogram(const Tree& tree);

/// Points (k, P_cum(k)) at each distinct observed degree, ascending in k.
/// P_cum(k) = fraction of vertices with degree >= k; non-increasing and 1 at
/// the minimum degree.
std::vector<std::pair<std::uint64_t, double>> cumulative_degree(const Tree& tree);

/// OLS on (log k, log P_cum) restricted to k in [k_min, k_max]; returns the
/// slope magnitude, so a perfect P_cum ~ k^-g input yields g.
double fit_powerlaw_exponent(std::span<const std::pair<std::uint64_t, double>> points,
                             std::uint64_t k_min, std::uint64_t k_max);

/// One rooted pass (parents, depths, subtree sizes), then any hitting time in
/// O(path length): walking the u->v path, each directed edge (x,y) adds
/// 2*m_x + 1 where m_x is the edge count of x's component with {x,y} removed.
class HittingTimeOracle {
public:
    explicit HittingTimeOracle(const Tree& tree);

    /// Exact expected steps of a simple random walk from u until it first
    /// reaches v. Always a nonnegative integer on trees.
    BigInt hitting(VertexId u, VertexId v) const;

private:
    const Tree* tree_;
    std::vector<VertexId> parent_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> subtree_;
};

/// Convenience wrapper; builds the oracle for a single query.
BigInt exact_hitting_time(const Tree& tree, VertexId u, VertexId v);

/// 2 * W / n as an exact rational; equals the average of exact_hitting_time
/// over all ordered pairs.
BigRat mean_hitting_exact(const Tree& tree);

struct FitWindow {
    std::uint64_t k_min = 0;
    std::uint64_t k_max = 0;
};

/// Default window: drop the degree-1 class and the single largest degree
/// class (boundary cohorts deviate most from the asymptotic law).
std::optional<FitWindow> default_fit_window(
    std::span<const std::pair<std::uint64_t, double>> points);

struct AnalyzeOptions {
    std::optional<GrowthModel> model;  // attaches closed-form predictions
    bool fit_exponent = false;
    std::optional<FitWindow> fit_window;  // default_fit_window when absent
};

struct MetricsReport {
    std::uint64_t n = 0;
    std::uint64_t edge_count = 0;
    std::uint64_t diameter = 0;
    VertexId diameter_endpoint_a = 0;
    VertexId diameter_endpoint_b = 0;
    BigInt wiener;
    std::map<std::uint64_t, std::uint64_t> degree_hist;
    std::vector<std::pair<std::uint64_t, double>> cumulative_points;
    BigRat mean_hitting;
    std::optional<double> fitted_exponent;

    /// Closed-form counterparts and deltas, present when a growth model is
    /// attached. The star variant has no closed form for W and <H>, so those
    /// slots stay empty there.
    struct ClosedFormPairing {
        BigInt n;
        BigInt diameter;
        std::optional<BigInt> wiener;
        std::optional<BigRat> mean_hitting;
        BigInt delta_n;
        BigInt delta_diameter;
        std::optional<BigInt> delta_wiener;
        std::optional<BigRat> delta_mean_hitting;

        bool all_deltas_zero() const;
    };
    std::optional<ClosedFormPairing> closed_form;
};

MetricsReport analyze(const Tree& tree, const AnalyzeOptions& options = {});

/// JSON per the artifact schema: exact integers as decimal strings, rationals
/// as {"num","den"} string pairs.
std::string metrics_report_to_json(const MetricsReport& report);

} // namespace treegrower

#endif
