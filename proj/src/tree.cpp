#include "treegrower/tree.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace treegrower {

const char* vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::Seed: return "SEED";
        case VertexClass::A: return "A";
        case VertexClass::B: return "B";
    }
    return "?";
}

VertexClass vertex_class_from_name(std::string_view name) {
    if (name == "SEED") return VertexClass::Seed;
    if (name == "A") return VertexClass::A;
    if (name == "B") return VertexClass::B;
    fail(errc::parse_error, "unknown vertex class '" + std::string(name) + "'");
}

Tree Tree::from_csr(std::vector<std::uint64_t> offsets, std::vector<VertexId> neighbors,
                    std::vector<std::uint32_t> birth, std::vector<VertexClass> cls) {
    Tree t;
    t.offsets_ = std::move(offsets);
    t.neighbors_ = std::move(neighbors);
    t.birth_ = std::move(birth);
    t.class_ = std::move(cls);
    return t;
}

void Tree::check_invariants() const {
    const std::size_t n = vertex_count();
    if (n == 0) fail(errc::empty_input, "tree has no vertices");
    if (neighbors_.size() != 2 * (n - 1))
        fail(errc::cycle_detected, "edge count != n - 1");
    if (birth_.size() != n || class_.size() != n)
        fail(errc::parse_error, "provenance arrays inconsistent with vertex count");

    for (VertexId v = 0; v < n; ++v) {
        auto adj = neighbors(v);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            if (adj[i] >= n) fail(errc::index_out_of_range, "neighbor id out of range");
            if (adj[i] == v) fail(errc::self_loop, "self loop in adjacency");
            if (i > 0 && adj[i - 1] >= adj[i])
                fail(errc::duplicate_edge, "adjacency list not strictly ascending");
            // symmetry: v must appear in adj(adj[i])
            auto other = neighbors(adj[i]);
            if (!std::binary_search(other.begin(), other.end(), v))
                fail(errc::parse_error, "adjacency not symmetric");
        }
        if (class_[v] == VertexClass::Seed) {
            if (birth_[v] != 0) fail(errc::parse_error, "SEED vertex with nonzero birth step");
        } else if (birth_[v] == 0) {
            fail(errc::parse_error, "A/B vertex with birth step 0");
        }
    }

    // connectivity: one BFS must reach everything
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue;
    queue.reserve(n);
    queue.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId w : neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != n) fail(errc::disconnected_input, "tree is not connected");
}

namespace {

Tree build_from_compacted_edges(const std::vector<std::pair<VertexId, VertexId>>& edges,
                                std::size_t n) {
    std::vector<std::uint64_t> offsets(n + 1, 0);
    for (auto [u, v] : edges) {
        ++offsets[u + 1];
        ++offsets[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

    std::vector<VertexId> neighbors(2 * edges.size());
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (auto [u, v] : edges) {
        neighbors[cursor[u]++] = v;
        neighbors[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(neighbors.begin() + offsets[i], neighbors.begin() + offsets[i + 1]);

    return Tree::from_csr(std::move(offsets), std::move(neighbors),
                          std::vector<std::uint32_t>(n, 0),
                          std::vector<VertexClass>(n, VertexClass::Seed));
}

} // namespace

Tree validate_tree(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
    if (edges.empty()) fail(errc::empty_input, "edge list is empty");

    // compact ids preserving numeric order
    std::vector<std::uint64_t> ids;
    ids.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u == v) fail(errc::self_loop, "self loop at vertex " + std::to_string(u));
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const std::size_t n = ids.size();
    if (n > 0xFFFFFFFFull) fail(errc::too_large, "too many vertices for 32-bit ids");

    std::unordered_map<std::uint64_t, VertexId> compact;
    compact.reserve(n);
    for (std::size_t i = 0; i < n; ++i) compact.emplace(ids[i], static_cast<VertexId>(i));

    std::vector<std::pair<VertexId, VertexId>> compacted;
    compacted.reserve(edges.size());
    std::unordered_set<std::uint64_t> seen_edges;
    seen_edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        VertexId cu = compact[u], cv = compact[v];
        if (cu > cv) std::swap(cu, cv);
        const std::uint64_t key = (static_cast<std::uint64_t>(cu) << 32) | cv;
        if (!seen_edges.insert(key).second)
            fail(errc::duplicate_edge,
                 "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        compacted.emplace_back(cu, cv);
    }

    Tree tree = build_from_compacted_edges(compacted, n);

    // connected + (n-1 edges) <=> tree; report disconnection before cycles
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue;
    queue.reserve(n);
    queue.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId w : tree.neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != n)
        fail(errc::disconnected_input, "input has more than one connected component");
    if (edges.size() != n - 1)
        fail(errc::cycle_detected, "connected input with " + std::to_string(edges.size()) +
                                       " edges on " + std::to_string(n) + " vertices");
    return tree;
}

Tree validate_tree(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
    return validate_tree(std::span<const std::pair<std::uint64_t, std::uint64_t>>(edges));
}

Tree validate_tree_with_provenance(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> edges,
    std::span<const Provenance> provenance) {
    Tree tree = validate_tree(edges);
    if (provenance.size() != tree.vertex_count())
        fail(errc::parse_error, "provenance length does not match vertex count");
    std::vector<std::uint32_t> birth(provenance.size());
    std::vector<VertexClass> cls(provenance.size());
    for (std::size_t i = 0; i < provenance.size(); ++i) {
        birth[i] = provenance[i].birth_step;
        cls[i] = provenance[i].vclass;
    }
    Tree out = Tree::from_csr(std::vector<std::uint64_t>(tree.offsets()),
                              std::vector<VertexId>(tree.flat_neighbors()), std::move(birth),
                              std::move(cls));
    out.check_invariants();
    return out;
}

TreeFormat tree_format_from_name(std::string_view name) {
    if (name == "edgelist") return TreeFormat::Edgelist;
    if (name == "dot") return TreeFormat::Dot;
    if (name == "json") return TreeFormat::Json;
    fail(errc::config_error, "unknown tree format '" + std::string(name) + "'");
}

const char* tree_format_name(TreeFormat format) {
    switch (format) {
        case TreeFormat::Edgelist: return "edgelist";
        case TreeFormat::Dot: return "dot";
        case TreeFormat::Json: return "json";
    }
    return "?";
}

namespace {

std::string serialize_edgelist(const Tree& tree) {
    std::string out;
    tree.for_each_edge([&](VertexId u, VertexId v) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    });
    return out;
}

std::string serialize_dot(const Tree& tree) {
    std::string out = "graph tree {\n";
    for (VertexId v = 0; v < tree.vertex_count(); ++v) {
        out += "  " + std::to_string(v) + " [birth=" + std::to_string(tree.birth_step(v)) +
               ", class=" + vertex_class_name(tree.vertex_class(v)) + "];\n";
    }
    tree.for_each_edge([&](VertexId u, VertexId v) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    });
    out += "}\n";
    return out;
}

std::string serialize_json(const Tree& tree) {
    nlohmann::json j;
    j["n"] = tree.vertex_count();
    auto& edges = j["edges"] = nlohmann::json::array();
    tree.for_each_edge([&](VertexId u, VertexId v) { edges.push_back({u, v}); });
    auto& prov = j["provenance"] = nlohmann::json::array();
    for (VertexId v = 0; v < tree.vertex_count(); ++v) {
        prov.push_back({{"birth", tree.birth_step(v)},
                        {"class", vertex_class_name(tree.vertex_class(v))}});
    }
    return j.dump() + "\n";
}

std::uint64_t parse_u64(std::string_view token, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        fail(errc::parse_error, std::string("invalid ") + what + " '" + std::string(token) + "'");
    return value;
}

Tree parse_edgelist(std::string_view text) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue; // blank or comment-only line
        if (!(fields >> b) || (fields >> extra))
            fail(errc::parse_error, "edge line must hold exactly two ids: '" + line + "'");
        edges.emplace_back(parse_u64(a, "vertex id"), parse_u64(b, "vertex id"));
    }
    return validate_tree(edges);
}

Tree parse_dot(std::string_view text) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    std::vector<std::pair<std::uint64_t, Provenance>> prov;
    std::istringstream in{std::string(text)};
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        std::string s = line;
        // trim
        const auto first = s.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = s.find_last_not_of(" \t\r");
        s = s.substr(first, last - first + 1);
        if (s.empty() || s == "}") continue;
        if (s.rfind("graph", 0) == 0) {
            saw_header = true;
            continue;
        }
        if (auto sep = s.find("--"); sep != std::string::npos) {
            std::string a = s.substr(0, sep);
            std::string b = s.substr(sep + 2);
            if (auto semi = b.find(';'); semi != std::string::npos) b.erase(semi);
            auto strip = [](std::string t) {
                const auto f = t.find_first_not_of(" \t");
                const auto l = t.find_last_not_of(" \t");
                return f == std::string::npos ? std::string() : t.substr(f, l - f + 1);
            };
            edges.emplace_back(parse_u64(strip(a), "vertex id"), parse_u64(strip(b), "vertex id"));
            continue;
        }
        if (auto bracket = s.find('['); bracket != std::string::npos) {
            const std::uint64_t id = parse_u64(
                s.substr(0, s.find_first_of(" \t[")), "vertex id");
            Provenance p;
            auto find_attr = [&](const char* key) -> std::string {
                const auto pos = s.find(key, bracket);
                if (pos == std::string::npos)
                    fail(errc::parse_error, "node line missing attribute: '" + s + "'");
                const auto eq = s.find('=', pos);
                auto end = s.find_first_of(",]", eq);
                return s.substr(eq + 1, end - eq - 1);
            };
            p.birth_step = static_cast<std::uint32_t>(parse_u64(find_attr("birth"), "birth step"));
            p.vclass = vertex_class_from_name(find_attr("class"));
            prov.emplace_back(id, p);
            continue;
        }
        fail(errc::parse_error, "unrecognized dot line: '" + s + "'");
    }
    if (!saw_header) fail(errc::parse_error, "missing 'graph' header");
    Tree plain = validate_tree(edges);
    if (prov.empty()) return plain;
    if (prov.size() != plain.vertex_count())
        fail(errc::parse_error, "dot node lines do not cover all vertices");
    std::vector<Provenance> ordered(prov.size());
    for (auto& [id, p] : prov) {
        if (id >= ordered.size()) fail(errc::parse_error, "dot node id out of range");
        ordered[id] = p;
    }
    return validate_tree_with_provenance(edges, ordered);
}

Tree parse_json_tree(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("invalid json: ") + e.what());
    }
    try {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>());
        std::vector<Provenance> prov;
        for (const auto& p : j.at("provenance"))
            prov.push_back({p.at("birth").get<std::uint32_t>(),
                            vertex_class_from_name(p.at("class").get<std::string>())});
        if (j.at("n").get<std::uint64_t>() != prov.size())
            fail(errc::parse_error, "json field 'n' disagrees with provenance length");
        return validate_tree_with_provenance(edges, prov);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("json tree schema violation: ") + e.what());
    }
}

} // namespace

std::string serialize(const Tree& tree, TreeFormat format) {
    switch (format) {
        case TreeFormat::Edgelist: return serialize_edgelist(tree);
        case TreeFormat::Dot: return serialize_dot(tree);
        case TreeFormat::Json: return serialize_json(tree);
    }
    fail(errc::config_error, "unknown format");
}

Tree parse_tree(std::string_view text, TreeFormat format) {
    switch (format) {
        case TreeFormat::Edgelist: return parse_edgelist(text);
        case TreeFormat::Dot: return parse_dot(text);
        case TreeFormat::Json: return parse_json_tree(text);
    }
    fail(errc::config_error, "unknown format");
}

namespace {

TreeFormat format_from_path(const std::string& path) {
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".json") return TreeFormat::Json;
    if (ext == ".dot" || ext == ".gv") return TreeFormat::Dot;
    return TreeFormat::Edgelist;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::file_not_found, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Tree load_tree(const std::string& path) { return load_tree(path, format_from_path(path)); }

Tree load_tree(const std::string& path, TreeFormat format) {
    return parse_tree(read_file(path), format);
}

void save_tree(const Tree& tree, const std::string& path, TreeFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::file_not_found, "cannot write '" + path + "'");
    out << serialize(tree, format);
}

SeedSpec SeedSpec::parse(std::string_view text) {
    SeedSpec spec;
    if (text == "edge") {
        spec.kind = Kind::Edge;
        return spec;
    }
    if (text.rfind("path:", 0) == 0 || text.rfind("star:", 0) == 0) {
        spec.kind = text[0] == 'p' ? Kind::Path : Kind::Star;
        spec.size = parse_u64(text.substr(5), "seed size");
        if (spec.size < 2)
            fail(errc::parse_error, "builtin seed needs at least 2 vertices");
        return spec;
    }
    if (text.rfind("file:", 0) == 0) {
        spec.kind = Kind::File;
        spec.path = std::string(text.substr(5));
        if (spec.path.empty()) fail(errc::parse_error, "empty seed file path");
        return spec;
    }
    fail(errc::parse_error,
         "seed must be edge, path:M, star:M or file:PATH (got '" + std::string(text) + "')");
}

std::string SeedSpec::to_string() const {
    switch (kind) {
        case Kind::Edge: return "edge";
        case Kind::Path: return "path:" + std::to_string(size);
        case Kind::Star: return "star:" + std::to_string(size);
        case Kind::File: return "file:" + path;
    }
    return "?";
}

Tree resolve_seed(const SeedSpec& spec) {
    switch (spec.kind) {
        case SeedSpec::Kind::Edge:
            return validate_tree({{std::pair<std::uint64_t, std::uint64_t>{0, 1}}});
        case SeedSpec::Kind::Path: {
            if (spec.size < 2) fail(errc::parse_error, "path seed needs at least 2 vertices");
            std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
            edges.reserve(spec.size - 1);
            for (std::uint64_t i = 0; i + 1 < spec.size; ++i) edges.emplace_back(i, i + 1);
            return validate_tree(edges);
        }
        case SeedSpec::Kind::Star: {
            if (spec.size < 2) fail(errc::parse_error, "star seed needs at least 2 vertices");
            std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
            edges.reserve(spec.size - 1);
            for (std::uint64_t i = 1; i < spec.size; ++i) edges.emplace_back(0, i);
            return validate_tree(edges);
        }
        case SeedSpec::Kind::File: return load_tree(spec.path);
    }
    fail(errc::config_error, "unknown seed kind");
}

const char* errc_name(errc code) {
    switch (code) {
        case errc::empty_input: return "EmptyInput";
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::cycle_detected: return "CycleDetected";
        case errc::disconnected_input: return "DisconnectedInput";
        case errc::file_not_found: return "FileNotFound";
        case errc::parse_error: return "ParseError";
        case errc::capacity_exceeded: return "CapacityExceeded";
        case errc::too_large: return "TooLarge";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::insufficient_points: return "InsufficientPoints";
        case errc::non_positive_value: return "NonPositiveValue";
        case errc::step_cap_exceeded: return "StepCapExceeded";
        case errc::config_error: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace treegrower
