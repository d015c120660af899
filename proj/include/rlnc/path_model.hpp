#pragma once

#include "rlnc/rng.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rlnc {

/// Directed multigraph: parallel links between a node pair are stored once
/// with a multiplicity (e.g. wavelengths per fiber). Delays are integer
/// time units per traversal.
struct MultiGraph {
    struct Link {
        int tail = 0;
        int head = 0;
        int multiplicity = 1;
        int delay = 1;
    };

    int nodeCount = 0;
    std::vector<Link> links;
};

/// Ascending multiset of end-to-end path delays.
class DelayVector {
public:
    DelayVector() = default;
    explicit DelayVector(std::vector<int> delays);

    int size() const { return static_cast<int>(delays_.size()); }
    int at(int index0) const { return delays_[static_cast<std::size_t>(index0)]; }
    const std::vector<int>& values() const { return delays_; }

    int dMin() const { return delays_.front(); }
    int dMax() const { return delays_.back(); }

    /// Number of entries equal to the minimal delay.
    int countMin() const;
    /// Number of entries equal to the maximal delay.
    int countMax() const;

    bool operator==(const DelayVector&) const = default;

private:
    std::vector<int> delays_;
};

/// An ordered selection of n = k + r paths out of a delay vector.
/// memberIndices are ascending 0-based positions into the vector, so member
/// delays are nondecreasing and every path occurs at most once.
struct PathSet {
    std::uint64_t alpha = 0;         // 1-based lexicographic rank of the combination
    std::vector<int> memberIndices;  // ascending, size k + r
    int k = 0;
    int r = 0;

    int n() const { return k + r; }
};

/// One loop-free route with its end-to-end delay and how many parallel
/// same-delay copies the link multiplicities support.
struct PathDescription {
    std::vector<int> nodes;
    int delay = 0;
    int multiplicity = 1;
};

struct PathEnumeration {
    std::vector<PathDescription> paths;  // sorted by (delay, node sequence)

    /// One delay entry per enumerated route.
    DelayVector reduced_vector() const;
    /// Each route repeated by its multiplicity (wavelength-expanded view).
    DelayVector expanded_vector() const;
};

/// All simple directed paths from s to d using at most maxHops links.
/// Parallel links contribute one representative route; their count is kept
/// as the path multiplicity (minimum over traversed links). Throws NoPath
/// when the destination is unreachable within the hop budget.
PathEnumeration enumerate_paths(const MultiGraph& g, int s, int d, int maxHops = 10);

/// Abstract benchmark network: F' paths with delays 1, 2, ..., F' tu.
DelayVector abstract_network(int fPrime);

/// Bernoulli path-availability model: each of F existing paths is usable
/// with probability 1 - blockingProbability, independently.
struct AvailabilityModel {
    int pathCount = 0;            // F
    double blockingProbability = 0.0;  // P_B

    double setupProbability() const { return 1.0 - blockingProbability; }
};

/// P(exactly j of the F paths are available): Binomial(F, 1 - P_B).
double availability_pmf(const AvailabilityModel& m, int j);

/// B(n): probability fewer than n paths are available, blocking the request.
double request_blocking(const AvailabilityModel& m, int n);

/// Mean number of available paths, F * (1 - P_B).
double mean_available(const AvailabilityModel& m);

/// E{N | N >= n}; throws DegenerateConditioning when B(n) = 1.
double mean_available_given_success(const AvailabilityModel& m, int n);

/// Sorted indices of the paths that came up in one Bernoulli draw.
std::vector<int> sample_available(const AvailabilityModel& m, RandomSource& rng);

/// Parses the line-based topology format:
///   node <id>
///   link <tail> <head> <multiplicity> <delay_tu>
/// '#' starts a comment. Node ids are dense 0-based integers.
MultiGraph parse_topology(std::istream& in);
MultiGraph load_topology(const std::string& fileOrBuiltin);

/// The 14-node, 21-fiber-link study topology (10 wavelengths per fiber,
/// 1 tu per hop).
MultiGraph builtin_nsfnet();

}  // namespace rlnc
