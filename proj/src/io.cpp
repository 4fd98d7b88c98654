#include "hypermatch/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypermatch {

Hypergraph parse_text(std::istream& in) {
    int64_t k = 0, n = 0, m = 0;
    if (!(in >> k >> n >> m)) throw std::invalid_argument("bad header, want 'k n m'");
    if (k < 2 || k > kMaxVertices || n < 0 || n > kMaxVertices || m < 0 || m > kMaxEdges)
        throw std::invalid_argument("header values out of range");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int64_t i = 0; i < m; ++i) {
        Edge e(k);
        for (int64_t j = 0; j < k; ++j) {
            int64_t v;
            if (!(in >> v)) throw std::invalid_argument("truncated edge list");
            if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
            e[j] = static_cast<uint16_t>(v);
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

Hypergraph parse_text(const std::string& s) {
    std::istringstream in(s);
    return parse_text(in);
}

std::string serialize_text(const Hypergraph& H) {
    std::ostringstream out;
    out << H.k() << ' ' << H.n() << ' ' << H.num_edges() << '\n';
    for (int i = 0; i < H.num_edges(); ++i) {
        auto e = H.edge(i);
        for (int j = 0; j < H.k(); ++j) out << (j ? " " : "") << e[j];
        out << '\n';
    }
    return out.str();
}

Hypergraph parse_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    int64_t k = j.at("k").get<int64_t>();
    int64_t n = j.at("n").get<int64_t>();
    if (k < 2 || k > kMaxVertices || n < 0 || n > kMaxVertices)
        throw std::invalid_argument("header values out of range");
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
        Edge e;
        for (const auto& jv : je) {
            int64_t v = jv.get<int64_t>();
            if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
            e.push_back(static_cast<uint16_t>(v));
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

std::string serialize_json(const Hypergraph& H) {
    nlohmann::json j;
    j["k"] = H.k();
    j["n"] = H.n();
    auto edges = nlohmann::json::array();
    for (int i = 0; i < H.num_edges(); ++i) {
        auto e = H.edge(i);
        edges.push_back(std::vector<int>(e.begin(), e.end()));
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

Hypergraph load_instance(const std::string& path, InstanceFormat fmt) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    if (fmt == InstanceFormat::text) return parse_text(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

void save_instance(const Hypergraph& H, std::ostream& out, InstanceFormat fmt) {
    out << (fmt == InstanceFormat::text ? serialize_text(H) : serialize_json(H));
    if (fmt == InstanceFormat::json) out << '\n';
}

}  // namespace hypermatch
