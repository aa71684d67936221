#ifndef DIDSIM_CONSENSUS_HPP
#define DIDSIM_CONSENSUS_HPP

#include <vector>

namespace didsim {

enum class NodeKind { Ground, Satellite };
enum class LinkType { InterGround, SatGround, InterSatellite };

// Node roster for one deployment mode.
//   mode 1: all ground; mode 2: n-1 ground + one satellite (highest index,
//   never primary); mode 3: all satellite.
class ModeTopology {
public:
    int mode() const { return mode_; }
    int n_nodes() const { return static_cast<int>(kinds_.size()); }
    int primary_index() const { return primary_; }
    NodeKind node_kind(int i) const { return kinds_.at(static_cast<std::size_t>(i)); }
    LinkType link_type(int i, int j) const;

    // Mode 2 only: the ground node that talks to the satellite
    // (lowest-index non-primary ground node).
    int representative_index() const;

    friend ModeTopology build_topology(int mode, int n, int primary_index);

private:
    int mode_ = 1;
    int primary_ = 0;
    std::vector<NodeKind> kinds_;
};

ModeTopology build_topology(int mode, int n, int primary_index);

// Symmetric positive matrix of pairwise link latencies, seconds. Entries
// default to unset; reading an unset entry is a configuration error.
class LatencyMatrix {
public:
    explicit LatencyMatrix(int n);

    int size() const { return n_; }
    void set(int i, int j, double seconds);  // sets both (i,j) and (j,i)
    double get(int i, int j) const;

private:
    int n_;
    std::vector<double> values_;  // NaN = unset
};

struct PhaseLatencies {
    double t1_s = 0.0;  // pre-prepare
    double t2_s = 0.0;  // prepare
    double t3_s = 0.0;  // commit
    double t4_s = 0.0;  // reply
    double total_s = 0.0;
};

// Four-phase composition: phases 1-3 each take the max latency over all
// distinct pairs, phase 4 the max over links to the primary. Works for any
// n >= 2 (the topology type enforces n >= 4 separately).
PhaseLatencies pbft_overall_latency(const LatencyMatrix& link_latency_s, int primary_index);
PhaseLatencies pbft_overall_latency(const ModeTopology& topology,
                                    const LatencyMatrix& link_latency_s);

}  // namespace didsim

#endif
