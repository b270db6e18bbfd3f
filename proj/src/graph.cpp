#include "mfb/graph.hpp"

#include "mfb/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace mfb {

const Vertex& PlumbingGraph::vertex(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
    return vertices_[it->second];
}

Vertex& PlumbingGraph::vertex(const std::string& id) {
    const auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
    return vertices_[it->second];
}

void PlumbingGraph::add_vertex(Vertex v) {
    if (index_.contains(v.id)) {
        throw Error(ErrorCode::InvalidInput, "duplicate vertex id '" + v.id + "'");
    }
    index_.emplace(v.id, vertices_.size());
    vertices_.push_back(std::move(v));
}

void PlumbingGraph::add_edge(Edge e) {
    const bool a_arrow = vertex(e.a).is_arrowhead();
    const bool b_arrow = vertex(e.b).is_arrowhead();
    e.is_arrow = a_arrow != b_arrow;
    edges_.push_back(std::move(e));
}

void PlumbingGraph::remove_vertex(const std::string& id) {
    vertex(id);
    std::erase_if(edges_, [&](const Edge& e) { return e.touches(id); });
    std::erase_if(vertices_, [&](const Vertex& v) { return v.id == id; });
    reindex();
}

void PlumbingGraph::remove_edge(std::size_t edge_index) {
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(edge_index));
}

void PlumbingGraph::reindex() {
    index_.clear();
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i].id, i);
}

std::size_t PlumbingGraph::degree(const std::string& id) const {
    std::size_t d = 0;
    for (const auto& e : edges_) {
        if (e.a == id) ++d;
        if (e.b == id) ++d;
    }
    return d;
}

std::vector<std::size_t> PlumbingGraph::incident_edges(const std::string& id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].touches(id)) out.push_back(i);
    }
    return out;
}

std::size_t PlumbingGraph::loop_count(const std::string& id) const {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [&](const Edge& e) { return e.a == id && e.b == id; }));
}

bool PlumbingGraph::has_arrowheads() const {
    return std::any_of(vertices_.begin(), vertices_.end(),
                       [](const Vertex& v) { return v.is_arrowhead(); });
}

bool PlumbingGraph::is_closed() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) {
        return !v.is_arrowhead() && v.euler.has_value();
    });
}

bool PlumbingGraph::is_simple() const {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : edges_) {
        if (e.is_loop()) return false;
        auto key = std::minmax(e.a, e.b);
        if (!seen.emplace(key.first, key.second).second) return false;
    }
    return true;
}

void PlumbingGraph::validate() const {
    for (const auto& v : vertices_) {
        if (!v.is_arrowhead()) continue;
        if (v.genus != 0 || v.euler.has_value()) {
            throw Error(ErrorCode::InvalidInput,
                        "arrowhead '" + v.id + "' must have genus 0 and no euler number");
        }
        if (degree(v.id) != 1 || loop_count(v.id) != 0) {
            throw Error(ErrorCode::InvalidInput, "arrowhead '" + v.id + "' must have degree 1");
        }
    }
    for (const auto& e : edges_) {
        const bool expect = vertex(e.a).is_arrowhead() != vertex(e.b).is_arrowhead();
        if (e.is_arrow != expect) {
            throw Error(ErrorCode::InvalidInput,
                        "edge " + e.a + "--" + e.b + " has an inconsistent arrow flag");
        }
    }
}

namespace {

bool parse_number(const std::string& s, std::size_t& pos, long long& out) {
    const std::size_t start = pos;
    out = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        out = out * 10 + (s[pos] - '0');
        ++pos;
    }
    return pos > start;
}

// "w1_2_5" from position pos -> {1,2,5}
bool parse_point_lines(const std::string& s, std::size_t& pos, std::vector<long long>& lines) {
    if (pos >= s.size() || s[pos] != 'w') return false;
    ++pos;
    long long x = 0;
    if (!parse_number(s, pos, x)) return false;
    lines.push_back(x);
    while (pos < s.size() && s[pos] == '_') {
        ++pos;
        if (!parse_number(s, pos, x)) return false;
        lines.push_back(x);
    }
    return true;
}

int natural_compare(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            long long x = 0, y = 0;
            parse_number(a, i, x);
            parse_number(b, j, y);
            if (x != y) return x < y ? -1 : 1;
        } else {
            if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
            ++i;
            ++j;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

struct OrderKey {
    int cls = 3;
    std::vector<long long> point;
    int sub = 0;
    long long line = 0;
    long long pos = 0;
    std::string id;

    bool operator<(const OrderKey& o) const {
        const auto lhs = std::tie(cls, point, sub, line, pos);
        const auto rhs = std::tie(o.cls, o.point, o.sub, o.line, o.pos);
        if (lhs != rhs) return lhs < rhs;
        return natural_compare(id, o.id) < 0;
    }
};

OrderKey order_key(const Vertex& v) {
    OrderKey key;
    key.id = v.id;
    const std::string& s = v.id;
    std::size_t pos = 0;
    long long x = 0;
    if (s.empty()) return key;
    if (s[0] == 'v') {
        pos = 1;
        if (parse_number(s, pos, x) && pos == s.size()) {
            key.cls = 0;
            key.line = x;
        }
    } else if (s[0] == 'a') {
        pos = 1;
        if (parse_number(s, pos, x) && pos == s.size()) {
            key.cls = 2;
            key.line = x;
        }
    } else if (s[0] == 'w') {
        std::vector<long long> lines;
        if (parse_point_lines(s, pos, lines) && pos == s.size()) {
            key.cls = 1;
            key.point = std::move(lines);
        }
    } else if (s[0] == 's') {
        pos = 1;
        std::vector<long long> lines;
        long long p = 0;
        if (parse_number(s, pos, x) && pos < s.size() && s[pos] == ':' &&
            parse_point_lines(s, ++pos, lines) && pos < s.size() && s[pos] == '#' &&
            parse_number(s, ++pos, p) && pos == s.size()) {
            key.cls = 1;
            key.point = std::move(lines);
            key.sub = 1;
            key.line = x;
            key.pos = p;
        }
    }
    return key;
}

}  // namespace

std::vector<std::string> vertex_order(const PlumbingGraph& g) {
    std::vector<std::pair<OrderKey, std::string>> keyed;
    keyed.reserve(g.vertices().size());
    for (const auto& v : g.vertices()) keyed.emplace_back(order_key(v), v.id);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    out.reserve(keyed.size());
    for (auto& [key, id] : keyed) out.push_back(std::move(id));
    return out;
}

bool precedes(const PlumbingGraph& g, const std::string& a, const std::string& b) {
    return order_key(g.vertex(a)) < order_key(g.vertex(b));
}

PlumbingGraph canonical_layout(const PlumbingGraph& g) {
    const auto order = vertex_order(g);
    std::unordered_map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
    PlumbingGraph out;
    for (const auto& id : order) out.add_vertex(g.vertex(id));
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges) {
        if (rank.at(e.b) < rank.at(e.a)) std::swap(e.a, e.b);
    }
    std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
        return std::make_tuple(rank.at(x.a), rank.at(x.b), to_int(x.sign)) <
               std::make_tuple(rank.at(y.a), rank.at(y.b), to_int(y.sign));
    });
    for (auto& e : edges) out.add_edge(std::move(e));
    return out;
}

long long first_betti_of_graph(const PlumbingGraph& g) {
    std::unordered_map<std::string, std::size_t> idx;
    for (const auto& v : g.vertices()) {
        if (!v.is_arrowhead()) idx.emplace(v.id, idx.size());
    }
    std::vector<std::size_t> parent(idx.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    long long edges = 0;
    long long components = static_cast<long long>(idx.size());
    for (const auto& e : g.edges()) {
        if (e.is_arrow) continue;
        const auto ia = idx.find(e.a);
        const auto ib = idx.find(e.b);
        if (ia == idx.end() || ib == idx.end()) continue;
        ++edges;
        const auto ra = find(ia->second);
        const auto rb = find(ib->second);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return edges - static_cast<long long>(idx.size()) + components;
}

namespace {

std::string dot_label(const Vertex& v) {
    if (v.is_arrowhead()) {
        return v.multiplicity ? "(" + std::to_string(*v.multiplicity) + ")" : "";
    }
    std::string label;
    if (v.euler) label += std::to_string(*v.euler);
    if (v.genus != 0) label += (label.empty() ? "" : " ") + ("[" + std::to_string(v.genus) + "]");
    if (v.multiplicity) {
        label += (label.empty() ? "" : " ") + ("(" + std::to_string(*v.multiplicity) + ")");
    }
    if (v.decoration) {
        const auto& d = *v.decoration;
        label += (label.empty() ? "" : " ") + ("(" + std::to_string(d.m) + ";" +
                                                std::to_string(d.n) + "," + std::to_string(d.nu) +
                                                ")");
    }
    return label;
}

}  // namespace

std::string to_dot(const PlumbingGraph& g) {
    const PlumbingGraph ordered = canonical_layout(g);
    std::ostringstream out;
    out << "graph plumbing {\n";
    for (const auto& v : ordered.vertices()) {
        out << "  \"" << v.id << "\" [label=\"" << dot_label(v) << "\"";
        if (v.is_arrowhead()) out << ", shape=none, width=0, height=0";
        out << "];\n";
    }
    for (const auto& e : ordered.edges()) {
        std::string a = e.a, b = e.b;
        if (e.is_arrow && ordered.vertex(a).is_arrowhead()) std::swap(a, b);
        out << "  \"" << a << "\" -- \"" << b << "\" [label=\"" << sign_char(e.sign);
        if (e.type) out << "," << *e.type;
        out << "\"";
        if (e.is_arrow) out << ", dir=forward";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string kind_name(VertexKind kind) {
    switch (kind) {
        case VertexKind::line: return "line";
        case VertexKind::point: return "point";
        case VertexKind::string: return "string";
        case VertexKind::arrowhead: return "arrowhead";
        case VertexKind::plain: return "plain";
    }
    return "plain";
}

VertexKind parse_kind(const std::string& name) {
    if (name == "line") return VertexKind::line;
    if (name == "point") return VertexKind::point;
    if (name == "string") return VertexKind::string;
    if (name == "arrowhead") return VertexKind::arrowhead;
    if (name == "plain") return VertexKind::plain;
    throw Error(ErrorCode::ParseError, "unknown vertex kind '" + name + "'");
}

std::string line_id(std::size_t line) { return "v" + std::to_string(line + 1); }

std::string point_id(const std::vector<std::size_t>& lines) {
    std::string id = "w";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) id += "_";
        id += std::to_string(lines[i] + 1);
    }
    return id;
}

std::string string_id(const std::string& line_vertex, const std::string& point_vertex,
                      std::size_t position) {
    return "s" + line_vertex.substr(1) + ":" + point_vertex + "#" + std::to_string(position);
}

std::string arrowhead_id(std::size_t line) { return "a" + std::to_string(line + 1); }

}  // namespace mfb
