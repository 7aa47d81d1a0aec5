#ifndef TREEGROWER_TREE_HPP
#define TREEGROWER_TREE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treegrower/error.hpp"

namespace treegrower {

using VertexId = std::uint32_t;

/// Birth cohort of a vertex: SEED vertices exist at step 0; A vertices start
/// with degree 2 (edge subdivision) and B vertices with degree 1 (leaves).
/// Under the star-variant operator both cohorts attach as leaves.
enum class VertexClass : std::uint8_t { Seed = 0, A = 1, B = 2 };

const char* vertex_class_name(VertexClass c);
VertexClass vertex_class_from_name(std::string_view name);

struct Provenance {
    std::uint32_t birth_step = 0;
    VertexClass vclass = VertexClass::Seed;
};

/// Unrooted tree stored as a CSR adjacency structure with per-vertex
/// provenance. Immutable after construction. Adjacency lists are sorted
/// ascending, so every traversal and serialization is deterministic.
class Tree {
public:
    std::size_t vertex_count() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return neighbors_.size() / 2; }

    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }

    std::uint32_t birth_step(VertexId v) const { return birth_[v]; }
    VertexClass vertex_class(VertexId v) const { return class_[v]; }
    Provenance provenance(VertexId v) const { return {birth_[v], class_[v]}; }

    void require_vertex(VertexId v) const {
        if (v >= vertex_count())
            fail(errc::index_out_of_range,
                 "vertex id " + std::to_string(v) + " out of range (n=" +
                     std::to_string(vertex_count()) + ")");
    }

    /// Visits each undirected edge exactly once as (u, v) with u < v, in
    /// lexicographic order.
    template <typename F>
    void for_each_edge(F&& f) const {
        const auto n = vertex_count();
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v : neighbors(u))
                if (u < v) f(u, v);
    }

    const std::vector<std::uint64_t>& offsets() const { return offsets_; }
    const std::vector<VertexId>& flat_neighbors() const { return neighbors_; }

    /// Verifies tree-ness (connected, acyclic, symmetric adjacency, sorted
    /// lists) and provenance consistency; throws Error on violation.
    void check_invariants() const;

    /// Assembles a tree from prebuilt CSR arrays. Counts must be consistent;
    /// callers that did not derive the arrays from a valid tree should run
    /// check_invariants afterwards.
    static Tree from_csr(std::vector<std::uint64_t> offsets, std::vector<VertexId> neighbors,
                         std::vector<std::uint32_t> birth, std::vector<VertexClass> cls);

private:
    Tree() = default;

    std::vector<std::uint64_t> offsets_;   // n + 1
    std::vector<VertexId> neighbors_;      // 2 * (n - 1), each list ascending
    std::vector<std::uint32_t> birth_;
    std::vector<VertexClass> class_;
};

/// Builds a validated tree from an edge list. Vertex ids may be sparse; they
/// are compacted to 0..n-1 preserving numeric order. All vertices get SEED
/// provenance with birth step 0. Rejects self loops, duplicate edges, cycles
/// and disconnected input.
Tree validate_tree(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);
Tree validate_tree(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

/// Builds a validated tree and then overrides provenance (used by the JSON
/// and DOT readers, which carry cohort labels).
Tree validate_tree_with_provenance(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> edges,
    std::span<const Provenance> provenance);

enum class TreeFormat { Edgelist, Dot, Json };

TreeFormat tree_format_from_name(std::string_view name);
const char* tree_format_name(TreeFormat format);

/// Canonical text form. EDGELIST: one "u v" line per edge, u < v, sorted.
/// DOT: undirected graph with birth/class node attributes. JSON:
/// {"n":..., "edges":[[u,v],...], "provenance":[{"birth":..,"class":".."},..]}.
/// For every format, serialize(parse(serialize(t))) == serialize(t).
std::string serialize(const Tree& tree, TreeFormat format);

/// Parses the canonical form produced by serialize (EDGELIST additionally
/// accepts '#' comments, blank lines and arbitrary whitespace).
Tree parse_tree(std::string_view text, TreeFormat format);

/// Reads a tree file; format chosen by extension (.json, .dot/.gv, else
/// edge list) unless given explicitly.
Tree load_tree(const std::string& path);
Tree load_tree(const std::string& path, TreeFormat format);
void save_tree(const Tree& tree, const std::string& path, TreeFormat format);

/// Seed description: a builtin (edge, path:M, star:M) or an edge-list file.
struct SeedSpec {
    enum class Kind { Edge, Path, Star, File };

    Kind kind = Kind::Edge;
    std::uint64_t size = 2;   // vertex count for Path/Star (>= 2)
    std::string path;         // for File

    /// Accepts "edge", "path:M", "star:M", "file:PATH".
    static SeedSpec parse(std::string_view text);
    std::string to_string() const;
};

Tree resolve_seed(const SeedSpec& spec);

} // namespace treegrower

#endif
