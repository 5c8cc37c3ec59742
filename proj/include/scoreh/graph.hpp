#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scoreh/linalg.hpp"

namespace scoreh {

/// Undirected simple graph. Nodes are dense 0-based indices in first-appearance
/// order of the source file; `names` maps an index back to its external token.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted, unique
    std::vector<std::string> names;
    std::optional<std::vector<int>> ground_truth;

    // ingestion bookkeeping
    struct ParseStats {
        std::size_t duplicate_edges = 0;
        std::size_t self_loops = 0;
        std::size_t weighted_lines = 0;
    };
    ParseStats stats;

    std::size_t m() const { return edges.size(); }
    std::vector<int> degrees() const;
};

struct AffinityMatrix {
    Matrix a;         // n x n, symmetric 0/1, zero diagonal
    Vector degrees;   // row sums
    double d_max = 0;

    Eigen::Index order() const { return a.rows(); }
};

/// Parse a whitespace-separated edge list. Lines starting with '#' and blank
/// lines are skipped; a numeric third token (weight) is accepted and ignored,
/// counted in ParseStats. Duplicate edges and self-loops are dropped with
/// counts recorded. Nodes are indexed densely in first-appearance order.
Graph parse_edge_list(std::istream& in);

/// Parse "node_token label_token" lines against an existing graph. Labels must
/// be integers; they are re-mapped to dense 0-based values in first-appearance
/// order. Every graph node must receive a label. With `allow_new_nodes`,
/// unknown node tokens are appended to the graph as isolated nodes instead of
/// raising an error.
std::vector<int> parse_labels(std::istream& in, Graph& graph, bool allow_new_nodes = false);

/// Build the 0/1 affinity matrix with degree vector and max degree.
/// `max_n` caps the dense allocation (default 20,000 nodes).
AffinityMatrix affinity(const Graph& graph, int max_n = 20000);

/// Write the graph back out as an edge list using node names.
void serialize_edge_list(const Graph& graph, std::ostream& out);

}  // namespace scoreh
