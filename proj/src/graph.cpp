#include "scoreh/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace scoreh {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool is_numeric(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

bool parse_int(const std::string& s, long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtol(s.c_str(), &end, 10);
    return end == s.c_str() + s.size();
}

}  // namespace

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

Graph parse_edge_list(std::istream& in) {
    Graph g;
    std::unordered_map<std::string, int> index;
    std::set<std::pair<int, int>> seen;

    auto node_id = [&](const std::string& tok) {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        const int id = g.n++;
        index.emplace(tok, id);
        g.names.push_back(tok);
        return id;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() < 2) {
            std::ostringstream os;
            os << "edge list line " << lineno << ": expected two node tokens, got "
               << toks.size();
            throw InputError(os.str());
        }
        if (toks.size() > 3) {
            std::ostringstream os;
            os << "edge list line " << lineno << ": too many tokens (" << toks.size() << ")";
            throw InputError(os.str());
        }
        if (toks.size() == 3) {
            if (!is_numeric(toks[2])) {
                std::ostringstream os;
                os << "edge list line " << lineno << ": third token must be a numeric weight";
                throw InputError(os.str());
            }
            ++g.stats.weighted_lines;
        }
        const int u = node_id(toks[0]);
        const int v = node_id(toks[1]);
        if (u == v) {
            ++g.stats.self_loops;
            continue;
        }
        const auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second) {
            ++g.stats.duplicate_edges;
            continue;
        }
    }
    g.edges.assign(seen.begin(), seen.end());
    if (g.n == 0) throw InputError("edge list describes an empty graph");
    return g;
}

std::vector<int> parse_labels(std::istream& in, Graph& graph, bool allow_new_nodes) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < graph.n; ++i) index.emplace(graph.names[static_cast<std::size_t>(i)], i);

    std::vector<std::optional<int>> raw(static_cast<std::size_t>(graph.n));
    std::unordered_map<long, int> dense;  // raw label -> dense id, first appearance
    std::vector<long> first_order;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 2) {
            std::ostringstream os;
            os << "label line " << lineno << ": expected \"node label\", got " << toks.size()
               << " tokens";
            throw InputError(os.str());
        }
        auto it = index.find(toks[0]);
        int node;
        if (it == index.end()) {
            if (!allow_new_nodes) {
                throw InputError("label line " + std::to_string(lineno) +
                                 ": unknown node token \"" + toks[0] + "\"");
            }
            node = graph.n++;
            index.emplace(toks[0], node);
            graph.names.push_back(toks[0]);
            raw.emplace_back();
        } else {
            node = it->second;
        }
        long value = 0;
        if (!parse_int(toks[1], value)) {
            throw InputError("label line " + std::to_string(lineno) + ": non-integer label \"" +
                             toks[1] + "\"");
        }
        raw[static_cast<std::size_t>(node)] = static_cast<int>(value);
        if (dense.find(value) == dense.end()) {
            dense.emplace(value, static_cast<int>(first_order.size()));
            first_order.push_back(value);
        }
    }

    std::vector<int> labels(static_cast<std::size_t>(graph.n));
    for (int i = 0; i < graph.n; ++i) {
        const auto& v = raw[static_cast<std::size_t>(i)];
        if (!v.has_value()) {
            throw InputError("node without label: \"" + graph.names[static_cast<std::size_t>(i)] +
                             "\"");
        }
        labels[static_cast<std::size_t>(i)] = dense.at(*v);
    }
    return labels;
}

AffinityMatrix affinity(const Graph& graph, int max_n) {
    if (graph.n > max_n) {
        std::ostringstream os;
        os << "graph has " << graph.n << " nodes, above the dense-matrix cap of " << max_n;
        throw InputError(os.str());
    }
    AffinityMatrix out;
    out.a = Matrix::Zero(graph.n, graph.n);
    for (auto [i, j] : graph.edges) {
        out.a(i, j) = 1.0;
        out.a(j, i) = 1.0;
    }
    out.degrees = out.a.rowwise().sum();
    out.d_max = graph.n > 0 ? out.degrees.maxCoeff() : 0.0;
    return out;
}

void serialize_edge_list(const Graph& graph, std::ostream& out) {
    // Emit edges so that re-parsing reproduces the node indexing: walk nodes in
    // index order and introduce each one through an edge whose partner is
    // already known (or through the (k, k+1) pair edge), then flush the rest.
    std::vector<std::vector<int>> lower(static_cast<std::size_t>(graph.n));
    std::set<std::pair<int, int>> remaining;
    for (auto [i, j] : graph.edges) {
        lower[static_cast<std::size_t>(j)].push_back(i);
        remaining.insert({i, j});
    }

    std::vector<bool> introduced(static_cast<std::size_t>(graph.n), false);
    auto emit = [&](int i, int j) {
        out << graph.names[static_cast<std::size_t>(i)] << ' '
            << graph.names[static_cast<std::size_t>(j)] << '\n';
        introduced[static_cast<std::size_t>(i)] = true;
        introduced[static_cast<std::size_t>(j)] = true;
        remaining.erase(std::minmax(i, j));
    };

    for (int k = 0; k < graph.n; ++k) {
        if (introduced[static_cast<std::size_t>(k)]) continue;
        auto& lows = lower[static_cast<std::size_t>(k)];
        if (!lows.empty()) {
            emit(*std::min_element(lows.begin(), lows.end()), k);
        } else if (k + 1 < graph.n &&
                   remaining.count({k, k + 1}) > 0) {
            emit(k, k + 1);
        }
        // nodes with no qualifying edge (isolated) cannot appear in an edge list
    }
    for (auto [i, j] : std::set<std::pair<int, int>>(remaining)) emit(i, j);
}

}  // namespace scoreh
