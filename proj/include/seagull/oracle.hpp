#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seagull/fib.hpp"

namespace seagull {

// Reference loop detectors. All of them agree on forwarding graphs where
// every non-destination node has exactly one outgoing edge (the shape every
// generated instance has); a destination self-loop row is tolerated and a
// self-loop anywhere else counts as a loop.
enum class LoopAlgorithm { kBfs, kDfs, kTopological, kTarjan, kDsu, kJohnson };

inline constexpr std::array<LoopAlgorithm, 6> kAllLoopAlgorithms = {
    LoopAlgorithm::kBfs,      LoopAlgorithm::kDfs, LoopAlgorithm::kTopological,
    LoopAlgorithm::kTarjan,   LoopAlgorithm::kDsu, LoopAlgorithm::kJohnson};

LoopAlgorithm loop_algorithm_from_name(std::string_view name);
std::string_view loop_algorithm_name(LoopAlgorithm algorithm);

bool loop_free_oracle(const ForwardingGraph& fib, LoopAlgorithm algorithm);

// Johnson's algorithm normally stops at the first elementary circuit; the
// full enumeration is only interesting for benchmark comparisons.
bool johnson_loop_free(const ForwardingGraph& fib, bool enumerate_all);

// Nodes the reverse-BFS from the destination never discovers; empty iff
// loop-free.
std::set<Asn> unreached_from_destination(const ForwardingGraph& fib);

struct WalkResult {
  bool reached = false;
  std::vector<Asn> path;  // nodes visited, starting at s, at most bound+1
};

// Deterministic next-hop walk from s toward d, at most `bound` steps.
WalkResult walk_oracle(const ForwardingGraph& fib, Asn s, Asn d,
                       std::uint32_t bound);

// Longest hop distance from any node to the destination (loop-free input).
std::size_t tree_depth(const ForwardingGraph& fib);

enum class GraphShape { kChain, kStar, kCaidaLike };

struct InstanceSpec {
  std::size_t n_min = 2;
  std::size_t n_max = 200;
  double loop_probability = 0.5;
  GraphShape shape = GraphShape::kCaidaLike;
  std::size_t count = 1;
};

struct LabeledInstance {
  ForwardingGraph graph;
  bool loop_free = true;
  std::vector<Asn> cycle;  // populated when a loop was injected
};

// Random labeled corpus. Chain and star are the degenerate extremes;
// caida-like grows a preferential-attachment tree, which stays wide and
// shallow like real AS forwarding trees.
std::vector<LabeledInstance> generate_instances(const InstanceSpec& spec,
                                                Rng& rng);

// Single loop-free tree of the given shape with n nodes (destination
// included).
ForwardingGraph generate_tree(GraphShape shape, std::size_t n, Rng& rng);

struct BenchmarkRow {
  std::size_t edge_count = 0;
  bool loop_free = true;
  bool algorithms_agree = true;
  std::array<double, 6> mean_millis{};  // indexed by kAllLoopAlgorithms order
};

// Times every detector `repetitions` times per graph and reports the means.
// Timings are informational; verdict agreement is the hard requirement and
// is recorded per row.
std::vector<BenchmarkRow> run_benchmark(std::span<const ForwardingGraph> graphs,
                                        std::size_t repetitions);

std::string format_benchmark_csv(std::span<const BenchmarkRow> rows);
std::string format_benchmark_table(std::span<const BenchmarkRow> rows);

}  // namespace seagull
