#include "treegrower/growth.hpp"

#include <algorithm>
#include <string>

namespace treegrower {

GrowthOperator growth_operator_from_name(std::string_view name) {
    if (name == "phi") return GrowthOperator::Phi;
    if (name == "phi-star" || name == "phi_star") return GrowthOperator::PhiStar;
    fail(errc::config_error, "unknown growth operator '" + std::string(name) + "'");
}

const char* growth_operator_name(GrowthOperator op) {
    return op == GrowthOperator::Phi ? "phi" : "phi-star";
}

namespace {

std::uint64_t next_vertex_count(const Tree& tree, std::uint64_t vertex_budget) {
    const std::uint64_t n = tree.vertex_count();
    const std::uint64_t next_n = 5 * n - 4;
    const std::uint64_t cap = std::min(vertex_budget, kMaxVertices);
    if (next_n > cap)
        fail(errc::capacity_exceeded, "growth step would produce " + std::to_string(next_n) +
                                          " vertices, over the budget of " + std::to_string(cap));
    return next_n;
}

} // namespace

Tree grow_step_phi(const Tree& tree, std::uint32_t step, std::uint64_t vertex_budget) {
    const std::uint64_t n = tree.vertex_count();
    const std::uint64_t new_n = next_vertex_count(tree, vertex_budget);
    const auto& old_offsets = tree.offsets();
    const std::uint64_t directed = 2 * (n - 1);

    // id layout: old vertices keep 0..n-1; the subdivision vertex on p's side
    // of edge {p,q} is n + (flat index of directed edge p->q); leaf i of p is
    // n + directed + old_offset(p) + i.
    const std::uint64_t a_base = n;
    const std::uint64_t b_base = n + directed;

    std::vector<std::uint64_t> offsets(new_n + 1);
    offsets[0] = 0;
    for (std::uint64_t p = 0; p < n; ++p)
        offsets[p + 1] = offsets[p] + 2 * tree.degree(static_cast<VertexId>(p));
    for (std::uint64_t a = a_base; a < b_base; ++a) offsets[a + 1] = offsets[a] + 2;
    for (std::uint64_t b = b_base; b < new_n; ++b) offsets[b + 1] = offsets[b] + 1;

    std::vector<VertexId> neighbors(offsets[new_n]);
    for (VertexId p = 0; p < n; ++p) {
        const auto adj = tree.neighbors(p);
        const std::uint64_t deg = adj.size();
        std::uint64_t w = offsets[p];
        // subdivision neighbors replace the old edges, then the new leaves
        for (std::uint64_t j = 0; j < deg; ++j)
            neighbors[w++] = static_cast<VertexId>(a_base + old_offsets[p] + j);
        for (std::uint64_t i = 0; i < deg; ++i)
            neighbors[w++] = static_cast<VertexId>(b_base + old_offsets[p] + i);

        for (std::uint64_t j = 0; j < deg; ++j) {
            const VertexId q = adj[j];
            // position of p in q's list locates the partner subdivision vertex
            const auto qadj = tree.neighbors(q);
            const std::uint64_t back =
                std::lower_bound(qadj.begin(), qadj.end(), p) - qadj.begin();
            const std::uint64_t a_pq = a_base + old_offsets[p] + j;
            const std::uint64_t a_qp = a_base + old_offsets[q] + back;
            neighbors[offsets[a_pq]] = p;
            neighbors[offsets[a_pq] + 1] = static_cast<VertexId>(a_qp);
            const std::uint64_t b_pi = b_base + old_offsets[p] + i_from_j(j);
            (void)b_pi;
        }
        for (std::uint64_t i = 0; i < deg; ++i)
            neighbors[offsets[b_base + old_offsets[p] + i]] = p;
    }

    std::vector<std::uint32_t> birth(new_n, step);
    std::vector<VertexClass> cls(new_n);
    for (VertexId p = 0; p < n; ++p) {
        birth[p] = tree.birth_step(p);
        cls[p] = tree.vertex_class(p);
    }
    std::fill(cls.begin() + a_base, cls.begin() + b_base, VertexClass::A);
    std::fill(cls.begin() + b_base, cls.end(), VertexClass::B);

    return Tree::from_csr(std::move(offsets), std::move(neighbors), std::move(birth),
                          std::move(cls));
}

Tree grow_step_phi_star(const Tree& tree, std::uint32_t step, std::uint64_t vertex_budget) {
    const std::uint64_t n = tree.vertex_count();
    const std::uint64_t new_n = next_vertex_count(tree, vertex_budget);
    const auto& old_offsets = tree.offsets();
    const std::uint64_t directed = 2 * (n - 1);

    const std::uint64_t a_base = n;
    const std::uint64_t b_base = n + directed;

    std::vector<std::uint64_t> offsets(new_n + 1);
    offsets[0] = 0;
    for (std::uint64_t p = 0; p < n; ++p)
        offsets[p + 1] = offsets[p] + 3 * tree.degree(static_cast<VertexId>(p));
    for (std::uint64_t v = a_base; v < new_n; ++v) offsets[v + 1] = offsets[v] + 1;

    std::vector<VertexId> neighbors(offsets[new_n]);
    for (VertexId p = 0; p < n; ++p) {
        const auto adj = tree.neighbors(p);
        const std::uint64_t deg = adj.size();
        std::uint64_t w = offsets[p];
        for (VertexId q : adj) neighbors[w++] = q; // edges survive unsubdivided
        for (std::uint64_t i = 0; i < deg; ++i) {
            const std::uint64_t a_pi = a_base + old_offsets[p] + i;
            neighbors[w++] = static_cast<VertexId>(a_pi);
            neighbors[offsets[a_pi]] = p;
        }
        for (std::uint64_t i = 0; i < deg; ++i) {
            const std::uint64_t b_pi = b_base + old_offsets[p] + i;
            neighbors[w++] = static_cast<VertexId>(b_pi);
            neighbors[offsets[b_pi]] = p;
        }
    }

    std::vector<std::uint32_t> birth(new_n, step);
    std::vector<VertexClass> cls(new_n);
    for (VertexId p = 0; p < n; ++p) {
        birth[p] = tree.birth_step(p);
        cls[p] = tree.vertex_class(p);
    }
    std::fill(cls.begin() + a_base, cls.begin() + b_base, VertexClass::A);
    std::fill(cls.begin() + b_base, cls.end(), VertexClass::B);

    return Tree::from_csr(std::move(offsets), std::move(neighbors), std::move(birth),
                          std::move(cls));
}

Tree grow_step(const Tree& tree, GrowthOperator op, std::uint32_t step,
               std::uint64_t vertex_budget) {
    return op == GrowthOperator::Phi ? grow_step_phi(tree, step, vertex_budget)
                                     : grow_step_phi_star(tree, step, vertex_budget);
}

Tree grow(const GrowthModel& model) {
    Tree tree = resolve_seed(model.seed);
    for (std::uint32_t s = 1; s <= model.steps; ++s)
        tree = grow_step(tree, model.op, s, model.vertex_budget);
    return tree;
}

} // namespace treegrower
