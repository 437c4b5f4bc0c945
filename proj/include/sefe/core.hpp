#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sefe {

// Errors thrown by parsing and validation. Parsing rejects malformed
// input instead of repairing it.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edge label: shared (present in every input graph) or exclusive to
// input graph i, 1-based. The sunflower condition allows nothing else.
struct EdgeLabel {
    int graph = 0;  // 0 = shared, otherwise 1..k

    static EdgeLabel shared() { return EdgeLabel{0}; }
    static EdgeLabel exclusive(int i) { return EdgeLabel{i}; }

    bool is_shared() const { return graph == 0; }
    bool in_input(int i) const { return graph == 0 || graph == i; }

    auto operator<=>(const EdgeLabel&) const = default;
};

struct LabeledEdge {
    std::string u, v;  // stored with u < v
    EdgeLabel label;

    auto operator<=>(const LabeledEdge&) const = default;
};

// k input graphs on one vertex set, encoded as a labeled union graph.
// Immutable by convention after construction/validation.
struct SefeInstance {
    int k = 1;
    std::vector<std::string> vertices;            // sorted, unique
    std::vector<LabeledEdge> edges;               // sorted by (u, v)
    std::map<std::string, std::string> metadata;  // transformation provenance

    void canonicalize();
    // Throws ValidationError on any invariant violation (duplicate vertex,
    // unknown endpoint, self-loop, duplicate edge, label out of range).
    void validate() const;

    bool has_vertex(const std::string& v) const;
    bool has_edge(const std::string& u, const std::string& v) const;

    bool operator==(const SefeInstance&) const = default;
};

// Plain undirected simple graph view with string vertex ids. Adjacency
// lists are kept sorted; the vertex set is always the instance's full V.
struct GraphView {
    std::vector<std::string> vertices;         // sorted
    std::vector<std::vector<int>> adj;         // neighbor indices, sorted

    int index_of(const std::string& v) const;  // -1 if absent
    const std::string& id(int idx) const { return vertices[idx]; }
    int degree(int idx) const { return static_cast<int>(adj[idx].size()); }
    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted
    // Component id per vertex, ids numbered by least contained vertex index.
    std::vector<int> component_ids() const;
    int component_count() const;
};

enum class GraphSelector { Shared, Input, Union };

GraphView derive_graph(const SefeInstance& inst, GraphSelector which, int input = 0);
GraphView make_graph(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges);

SefeInstance parse_instance(const std::string& text);
std::string serialize_instance(const SefeInstance& inst);

// FNV-1a over the canonical serialization; stable across runs.
std::string instance_digest(const SefeInstance& inst);

std::string label_to_string(const EdgeLabel& label);

}  // namespace sefe
