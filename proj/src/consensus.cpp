#include "didsim/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "didsim/errors.hpp"

namespace didsim {

LinkType ModeTopology::link_type(int i, int j) const {
    NodeKind a = node_kind(i);
    NodeKind b = node_kind(j);
    if (a == NodeKind::Ground && b == NodeKind::Ground) return LinkType::InterGround;
    if (a == NodeKind::Satellite && b == NodeKind::Satellite) return LinkType::InterSatellite;
    return LinkType::SatGround;
}

int ModeTopology::representative_index() const {
    if (mode_ != 2) throw config_error("representative_index is defined for mode 2 only");
    for (int i = 0; i < n_nodes(); ++i) {
        if (i != primary_ && kinds_[static_cast<std::size_t>(i)] == NodeKind::Ground) return i;
    }
    throw config_error("mode 2 topology has no non-primary ground node");
}

ModeTopology build_topology(int mode, int n, int primary_index) {
    if (mode < 1 || mode > 3) throw config_error("mode must be 1, 2 or 3");
    if (n < 4) throw config_error("topology needs at least 4 nodes (3f+1 with f=1)");
    if (primary_index < 0 || primary_index >= n)
        throw config_error("primary_index out of range");

    ModeTopology t;
    t.mode_ = mode;
    t.primary_ = primary_index;
    t.kinds_.assign(static_cast<std::size_t>(n),
                    mode == 3 ? NodeKind::Satellite : NodeKind::Ground);
    if (mode == 2) {
        t.kinds_.back() = NodeKind::Satellite;
        if (primary_index == n - 1)
            throw config_error("mode 2: the satellite node cannot be the primary");
    }
    return t;
}

LatencyMatrix::LatencyMatrix(int n) : n_(n) {
    if (n < 2) throw config_error("latency matrix needs at least 2 nodes");
    values_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   std::numeric_limits<double>::quiet_NaN());
}

void LatencyMatrix::set(int i, int j, double seconds) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw config_error("latency matrix: invalid pair index");
    if (!(seconds > 0.0) || !std::isfinite(seconds))
        throw config_error("latency matrix: entries must be positive and finite");
    values_[static_cast<std::size_t>(i) * n_ + j] = seconds;
    values_[static_cast<std::size_t>(j) * n_ + i] = seconds;
}

double LatencyMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw config_error("latency matrix: invalid pair index");
    double v = values_[static_cast<std::size_t>(i) * n_ + j];
    if (std::isnan(v)) {
        std::ostringstream os;
        os << "latency matrix: entry (" << i << "," << j << ") is not set";
        throw config_error(os.str());
    }
    return v;
}

PhaseLatencies pbft_overall_latency(const LatencyMatrix& m, int primary_index) {
    const int n = m.size();
    if (primary_index < 0 || primary_index >= n)
        throw config_error("pbft_overall_latency: primary index out of range");

    double broadcast_max = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) broadcast_max = std::max(broadcast_max, m.get(i, j));

    double reply_max = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == primary_index) continue;
        reply_max = std::max(reply_max, m.get(i, primary_index));
    }

    PhaseLatencies p;
    p.t1_s = broadcast_max;
    p.t2_s = broadcast_max;
    p.t3_s = broadcast_max;
    p.t4_s = reply_max;
    p.total_s = p.t1_s + p.t2_s + p.t3_s + p.t4_s;
    return p;
}

PhaseLatencies pbft_overall_latency(const ModeTopology& topology, const LatencyMatrix& m) {
    if (m.size() != topology.n_nodes())
        throw config_error("pbft_overall_latency: matrix size does not match topology");
    return pbft_overall_latency(m, topology.primary_index());
}

}  // namespace didsim
