#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mfb {

enum class VertexKind { line, point, string, arrowhead, plain };

enum class Sign { plus = 1, minus = -1 };

inline Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }
inline int to_int(Sign s) { return static_cast<int>(s); }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// Curve-configuration decoration (m; n, nu).
struct Decoration {
    long long m = 0;
    long long n = 0;
    long long nu = 0;
    friend bool operator==(const Decoration&, const Decoration&) = default;
};

struct Vertex {
    std::string id;
    long long genus = 0;
    std::optional<long long> euler;
    std::optional<long long> multiplicity;
    VertexKind kind = VertexKind::plain;
    std::optional<Decoration> decoration;

    bool is_arrowhead() const { return kind == VertexKind::arrowhead; }
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    std::string a;
    std::string b;
    Sign sign = Sign::plus;
    std::optional<int> type;
    bool is_arrow = false;

    bool is_loop() const { return a == b; }
    bool touches(const std::string& v) const { return a == v || b == v; }
    // The endpoint opposite to v (v itself for loops).
    const std::string& other(const std::string& v) const { return a == v ? b : a; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Decorated plumbing graph. Multi-edges and loops are representable; the
// operations that need a simple closed graph check for it themselves.
class PlumbingGraph {
public:
    PlumbingGraph() = default;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(const std::string& id) const { return index_.contains(id); }
    const Vertex& vertex(const std::string& id) const;
    Vertex& vertex(const std::string& id);

    // Throws InvalidInput on a duplicate id.
    void add_vertex(Vertex v);
    // Throws UnknownVertex on a dangling endpoint; recomputes is_arrow.
    void add_edge(Edge e);
    void remove_vertex(const std::string& id);  // also drops incident edges
    void remove_edge(std::size_t edge_index);

    std::vector<Edge>& mutable_edges() { return edges_; }

    // Loops count twice.
    std::size_t degree(const std::string& id) const;
    std::vector<std::size_t> incident_edges(const std::string& id) const;
    std::size_t loop_count(const std::string& id) const;

    bool has_arrowheads() const;
    bool is_closed() const;   // no arrowheads, every euler set
    bool is_simple() const;   // no loops and no parallel edges

    // Arrowhead degree and arrow-flag consistency; throws InvalidInput.
    void validate() const;

    friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    void reindex();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Line vertices first by line index, then each point vertex followed by the
// string vertices hosted on its edges (by line, then position from the line),
// then arrowheads, then anything else in natural id order.
std::vector<std::string> vertex_order(const PlumbingGraph& g);

// Strict weak order underlying vertex_order.
bool precedes(const PlumbingGraph& g, const std::string& a, const std::string& b);

// Same graph with vertices listed in vertex_order and edges sorted.
PlumbingGraph canonical_layout(const PlumbingGraph& g);

// |E| - |V| + #components over non-arrowhead vertices and non-arrow edges.
long long first_betti_of_graph(const PlumbingGraph& g);

std::string to_dot(const PlumbingGraph& g);

std::string kind_name(VertexKind kind);
VertexKind parse_kind(const std::string& name);

// Stable vertex ids used by the pipeline (1-based, as in the usual notation).
std::string line_id(std::size_t line);
std::string point_id(const std::vector<std::size_t>& lines);
std::string string_id(const std::string& line_vertex, const std::string& point_vertex,
                      std::size_t position);
std::string arrowhead_id(std::size_t line);

}  // namespace mfb
