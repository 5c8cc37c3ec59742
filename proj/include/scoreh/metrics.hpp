#pragma once

#include <vector>

#include "scoreh/graph.hpp"

namespace scoreh {

/// Dense labelling of n nodes; cluster ids are 0..cluster_count-1.
struct Partition {
    std::vector<int> labels;
    int cluster_count = 0;

    static Partition from_labels(std::vector<int> labels);
    std::size_t size() const { return labels.size(); }
};

/// Newman-Girvan modularity Q = sum_s [ l_s/m - (d_s/2m)^2 ].
/// Throws on an edgeless graph or label/size mismatch.
double modularity(const Graph& graph, const Partition& p);

/// Mutual information (natural log) normalized by the arithmetic mean of the
/// two label entropies. Two constant partitions compare as 1.
double nmi(const Partition& a, const Partition& b);

}  // namespace scoreh
