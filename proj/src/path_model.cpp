#include "rlnc/path_model.hpp"

#include "rlnc/combinatorics.hpp"
#include "rlnc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rlnc {

DelayVector::DelayVector(std::vector<int> delays) : delays_(std::move(delays)) {
    if (delays_.empty()) throw std::invalid_argument("DelayVector: must not be empty");
    for (int d : delays_)
        if (d < 0) throw std::invalid_argument("DelayVector: delays must be nonnegative");
    std::stable_sort(delays_.begin(), delays_.end());
}

int DelayVector::countMin() const {
    int c = 0;
    while (c < size() && delays_[static_cast<std::size_t>(c)] == dMin()) ++c;
    return c;
}

int DelayVector::countMax() const {
    int c = 0;
    while (c < size() && delays_[static_cast<std::size_t>(size() - 1 - c)] == dMax()) ++c;
    return c;
}

DelayVector PathEnumeration::reduced_vector() const {
    std::vector<int> d;
    d.reserve(paths.size());
    for (const auto& p : paths) d.push_back(p.delay);
    return DelayVector(std::move(d));
}

DelayVector PathEnumeration::expanded_vector() const {
    std::vector<int> d;
    for (const auto& p : paths)
        for (int i = 0; i < p.multiplicity; ++i) d.push_back(p.delay);
    return DelayVector(std::move(d));
}

namespace {

struct Arc {
    int head;
    int multiplicity;
    int delay;
};

void dfs_paths(const std::vector<std::vector<Arc>>& adj, int node, int dst, int hopsLeft,
               std::vector<int>& nodes, std::vector<char>& visited, int delaySoFar,
               int multiplicitySoFar, std::vector<PathDescription>& out) {
    if (node == dst) {
        out.push_back(PathDescription{nodes, delaySoFar, multiplicitySoFar});
        return;
    }
    if (hopsLeft == 0) return;
    for (const Arc& arc : adj[static_cast<std::size_t>(node)]) {
        if (visited[static_cast<std::size_t>(arc.head)]) continue;
        visited[static_cast<std::size_t>(arc.head)] = 1;
        nodes.push_back(arc.head);
        dfs_paths(adj, arc.head, dst, hopsLeft - 1, nodes, visited, delaySoFar + arc.delay,
                  std::min(multiplicitySoFar, arc.multiplicity), out);
        nodes.pop_back();
        visited[static_cast<std::size_t>(arc.head)] = 0;
    }
}

}  // namespace

PathEnumeration enumerate_paths(const MultiGraph& g, int s, int d, int maxHops) {
    if (s == d) throw std::invalid_argument("enumerate_paths: source equals destination");
    if (maxHops < 1) throw std::invalid_argument("enumerate_paths: maxHops must be >= 1");
    if (s < 0 || s >= g.nodeCount || d < 0 || d >= g.nodeCount)
        throw std::invalid_argument("enumerate_paths: node id out of range");

    // Collapse parallel links into one arc per (tail, head) pair; the copies
    // only raise the multiplicity, never add distinct routes.
    std::map<std::pair<int, int>, Arc> collapsed;
    for (const auto& link : g.links) {
        auto key = std::make_pair(link.tail, link.head);
        auto it = collapsed.find(key);
        if (it == collapsed.end()) {
            collapsed.emplace(key, Arc{link.head, link.multiplicity, link.delay});
        } else {
            it->second.multiplicity += link.multiplicity;
            it->second.delay = std::min(it->second.delay, link.delay);
        }
    }
    std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(g.nodeCount));
    for (const auto& [key, arc] : collapsed) adj[static_cast<std::size_t>(key.first)].push_back(arc);

    PathEnumeration result;
    std::vector<int> nodes{s};
    std::vector<char> visited(static_cast<std::size_t>(g.nodeCount), 0);
    visited[static_cast<std::size_t>(s)] = 1;
    dfs_paths(adj, s, d, maxHops, nodes, visited, 0, INT32_MAX, result.paths);

    if (result.paths.empty()) throw NoPath("enumerate_paths: no route within hop budget");

    // Canonical order regardless of link insertion order.
    std::sort(result.paths.begin(), result.paths.end(), [](const PathDescription& a, const PathDescription& b) {
        if (a.delay != b.delay) return a.delay < b.delay;
        return a.nodes < b.nodes;
    });
    return result;
}

DelayVector abstract_network(int fPrime) {
    if (fPrime < 1) throw std::invalid_argument("abstract_network: F' must be >= 1");
    std::vector<int> d(static_cast<std::size_t>(fPrime));
    for (int l = 0; l < fPrime; ++l) d[static_cast<std::size_t>(l)] = l + 1;
    return DelayVector(std::move(d));
}

double availability_pmf(const AvailabilityModel& m, int j) {
    if (j < 0 || j > m.pathCount) throw std::invalid_argument("availability_pmf: j out of range");
    const double pSetup = m.setupProbability();
    // Exact binomial coefficient; powers in double (probabilities, not counts).
    const double c = to_double(BigRat(binomial(m.pathCount, j)));
    return c * std::pow(pSetup, j) * std::pow(m.blockingProbability, m.pathCount - j);
}

double request_blocking(const AvailabilityModel& m, int n) {
    if (n < 1 || n > m.pathCount) throw std::invalid_argument("request_blocking: need 1 <= n <= F");
    double b = 0.0;
    for (int j = 0; j < n; ++j) b += availability_pmf(m, j);
    return std::min(b, 1.0);
}

double mean_available(const AvailabilityModel& m) {
    return static_cast<double>(m.pathCount) * m.setupProbability();
}

double mean_available_given_success(const AvailabilityModel& m, int n) {
    const double blocking = request_blocking(m, n);
    if (blocking >= 1.0) throw DegenerateConditioning("mean_available_given_success: B(n) = 1");
    double acc = 0.0;
    for (int j = n; j <= m.pathCount; ++j) acc += static_cast<double>(j) * availability_pmf(m, j);
    return acc / (1.0 - blocking);
}

std::vector<int> sample_available(const AvailabilityModel& m, RandomSource& rng) {
    std::vector<int> available;
    const double pSetup = m.setupProbability();
    for (int i = 0; i < m.pathCount; ++i)
        if (rng.bernoulli(pSetup)) available.push_back(i);
    return available;
}

MultiGraph parse_topology(std::istream& in) {
    MultiGraph g;
    int maxNode = -1;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        if (keyword == "node") {
            int id;
            if (!(ls >> id) || id < 0)
                throw TopologyError("topology line " + std::to_string(lineNo) + ": bad node id");
            maxNode = std::max(maxNode, id);
        } else if (keyword == "link") {
            MultiGraph::Link link;
            if (!(ls >> link.tail >> link.head >> link.multiplicity >> link.delay))
                throw TopologyError("topology line " + std::to_string(lineNo) + ": expected 'link tail head multiplicity delay'");
            if (link.multiplicity < 1)
                throw TopologyError("topology line " + std::to_string(lineNo) + ": multiplicity must be >= 1");
            if (link.delay < 0)
                throw TopologyError("topology line " + std::to_string(lineNo) + ": delay must be >= 0");
            maxNode = std::max({maxNode, link.tail, link.head});
            g.links.push_back(link);
        } else {
            throw TopologyError("topology line " + std::to_string(lineNo) + ": unknown keyword '" + keyword + "'");
        }
    }
    if (maxNode < 0) throw TopologyError("topology: no nodes or links");
    g.nodeCount = maxNode + 1;
    return g;
}

MultiGraph load_topology(const std::string& fileOrBuiltin) {
    if (fileOrBuiltin == "nsfnet") return builtin_nsfnet();
    std::ifstream in(fileOrBuiltin);
    if (!in) throw TopologyError("cannot open topology file: " + fileOrBuiltin);
    return parse_topology(in);
}

MultiGraph builtin_nsfnet() {
    // 14 nodes, 21 fiber links oriented in the direction of study traffic,
    // 10 wavelengths per fiber, 1 tu per hop.
    static constexpr int kEdges[21][2] = {
        {0, 1},  {0, 2},  {0, 7},  {1, 2},   {1, 3},   {2, 5},   {3, 4},
        {3, 10}, {4, 5},  {4, 6},  {6, 7},   {7, 8},   {8, 9},   {8, 12},
        {9, 5},  {10, 11}, {10, 12}, {11, 8}, {11, 13}, {12, 13}, {13, 5},
    };
    MultiGraph g;
    g.nodeCount = 14;
    for (const auto& e : kEdges) g.links.push_back(MultiGraph::Link{e[0], e[1], 10, 1});
    return g;
}

}  // namespace rlnc
