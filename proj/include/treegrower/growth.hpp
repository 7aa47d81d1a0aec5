#ifndef TREEGROWER_GROWTH_HPP
#define TREEGROWER_GROWTH_HPP

#include <cstdint>
#include <string_view>

#include "treegrower/tree.hpp"

namespace treegrower {

/// Phi: subdivide every edge with two new vertices (one per endpoint side)
/// and attach deg(v) new leaves to every existing vertex v.
/// PhiStar: attach all 2*deg(v) new vertices directly to v as leaves.
/// Both take n to 5n-4 per step.
enum class GrowthOperator { Phi, PhiStar };

GrowthOperator growth_operator_from_name(std::string_view name); // "phi" | "phi-star"
const char* growth_operator_name(GrowthOperator op);

/// Guard against runaway 5^t growth; overridable per call and via the CLI's
/// TREEGROWER_VERTEX_BUDGET. Vertex ids are 32-bit, which caps any budget.
inline constexpr std::uint64_t kDefaultVertexBudget = 50'000'000;
inline constexpr std::uint64_t kMaxVertices = 0xFFFFFFFFull;

struct GrowthModel {
    GrowthOperator op = GrowthOperator::Phi;
    std::uint32_t steps = 0;
    SeedSpec seed;
    std::uint64_t vertex_budget = kDefaultVertexBudget;
};

/// One growth step; `step` is the birth step stamped on new vertices.
/// New-vertex numbering: input vertices keep their ids; A ids follow in
/// ascending (parent, neighbor) order, then B ids in ascending parent order,
/// so outputs are reproducible byte for byte.
Tree grow_step_phi(const Tree& tree, std::uint32_t step,
                   std::uint64_t vertex_budget = kDefaultVertexBudget);
Tree grow_step_phi_star(const Tree& tree, std::uint32_t step,
                        std::uint64_t vertex_budget = kDefaultVertexBudget);

Tree grow_step(const Tree& tree, GrowthOperator op, std::uint32_t step,
               std::uint64_t vertex_budget = kDefaultVertexBudget);

/// Iterates the model's operator `steps` times from the resolved seed.
Tree grow(const GrowthModel& model);

} // namespace treegrower

#endif
