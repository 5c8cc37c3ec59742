#include "scoreh/metrics.hpp"

#include <cmath>

namespace scoreh {

Partition Partition::from_labels(std::vector<int> labels) {
    Partition p;
    int hi = -1;
    for (int v : labels) {
        if (v < 0) throw InputError("partition labels must be non-negative");
        hi = std::max(hi, v);
    }
    p.labels = std::move(labels);
    p.cluster_count = hi + 1;
    return p;
}

double modularity(const Graph& graph, const Partition& p) {
    if (graph.m() == 0) throw InputError("modularity undefined for an edgeless graph");
    if (p.labels.size() != static_cast<std::size_t>(graph.n))
        throw InputError("modularity: partition size does not match graph");

    const double m = static_cast<double>(graph.m());
    std::vector<double> intra(static_cast<std::size_t>(p.cluster_count), 0.0);
    std::vector<double> degree_sum(static_cast<std::size_t>(p.cluster_count), 0.0);

    for (auto [i, j] : graph.edges) {
        const int si = p.labels[static_cast<std::size_t>(i)];
        const int sj = p.labels[static_cast<std::size_t>(j)];
        if (si == sj) intra[static_cast<std::size_t>(si)] += 1.0;
        degree_sum[static_cast<std::size_t>(si)] += 1.0;
        degree_sum[static_cast<std::size_t>(sj)] += 1.0;
    }

    double q = 0.0;
    for (int s = 0; s < p.cluster_count; ++s) {
        const double ls = intra[static_cast<std::size_t>(s)];
        const double ds = degree_sum[static_cast<std::size_t>(s)];
        q += ls / m - (ds / (2.0 * m)) * (ds / (2.0 * m));
    }
    return q;
}

double nmi(const Partition& a, const Partition& b) {
    if (a.labels.size() != b.labels.size()) throw InputError("nmi: partition sizes differ");
    if (a.labels.empty()) throw InputError("nmi: empty partitions");

    const std::size_t n = a.labels.size();
    const int ka = std::max(a.cluster_count, 1);
    const int kb = std::max(b.cluster_count, 1);

    std::vector<double> na(static_cast<std::size_t>(ka), 0.0);
    std::vector<double> nb(static_cast<std::size_t>(kb), 0.0);
    std::vector<double> nab(static_cast<std::size_t>(ka) * static_cast<std::size_t>(kb), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const int x = a.labels[i];
        const int y = b.labels[i];
        na[static_cast<std::size_t>(x)] += 1.0;
        nb[static_cast<std::size_t>(y)] += 1.0;
        nab[static_cast<std::size_t>(x) * static_cast<std::size_t>(kb) +
            static_cast<std::size_t>(y)] += 1.0;
    }

    const double dn = static_cast<double>(n);
    auto entropy = [&](const std::vector<double>& counts) {
        double h = 0.0;
        for (double c : counts) {
            if (c > 0.0) {
                const double p = c / dn;
                h -= p * std::log(p);
            }
        }
        return h;
    };

    const double ha = entropy(na);
    const double hb = entropy(nb);
    if (ha == 0.0 && hb == 0.0) return 1.0;  // two constant partitions agree as partitions

    double mi = 0.0;
    for (int x = 0; x < ka; ++x) {
        for (int y = 0; y < kb; ++y) {
            const double c = nab[static_cast<std::size_t>(x) * static_cast<std::size_t>(kb) +
                                 static_cast<std::size_t>(y)];
            if (c > 0.0) mi += (c / dn) * std::log(dn * c / (na[static_cast<std::size_t>(x)] *
                                                             nb[static_cast<std::size_t>(y)]));
        }
    }
    return mi / (0.5 * (ha + hb));
}

}  // namespace scoreh
