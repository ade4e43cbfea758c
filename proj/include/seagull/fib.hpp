#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seagull/rng.hpp"

namespace seagull {

using Asn = std::uint32_t;

// Undirected AS-level connectivity graph (CAIDA AS-links style).
struct AsTopology {
  std::set<Asn> nodes;
  std::set<std::pair<Asn, Asn>> edges;  // normalized: first < second

  bool has_edge(Asn a, Asn b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) > 0;
  }
};

struct FibEntry {
  Asn source;
  Asn next_hop;

  friend bool operator==(const FibEntry&, const FibEntry&) = default;
};

// Destination-based forwarding graph: one outgoing edge per non-destination
// source. The node universe (and hence the public ASN <-> index bijection)
// covers every ASN appearing in the entries plus the destination, indices
// assigned in ascending ASN order.
struct ForwardingGraph {
  Asn destination = 0;
  std::vector<FibEntry> entries;
  std::vector<Asn> index_to_asn;
  std::map<Asn, std::size_t> asn_to_index;

  std::size_t node_count() const { return index_to_asn.size(); }
  std::size_t row_count() const { return entries.size(); }
  std::size_t destination_index() const { return asn_to_index.at(destination); }

  std::optional<Asn> next_hop_of(Asn source) const {
    for (const FibEntry& e : entries)
      if (e.source == source) return e.next_hop;
    return std::nullopt;
  }

  void rebuild_index();  // recompute the bijection from entries + destination
};

// Construct a graph from explicit rows; enforces the one-outgoing-edge
// arity ("most recent wins" when a source repeats, matching how updates are
// retained).
ForwardingGraph make_forwarding_graph(Asn destination,
                                      std::vector<FibEntry> entries);

// A single policy change from AS `source`: its next hop becomes `new_next_hop`.
struct FibUpdate {
  Asn source;
  Asn new_next_hop;
};

// Whitespace-separated ASN pairs, one edge per line, '#' comments.
AsTopology parse_topology(std::string_view text);

// Shortest-path forwarding tree toward `destination` via BFS over the
// topology; equal-distance parent ties break toward the smallest ASN so the
// output is reproducible.
ForwardingGraph build_fib(const AsTopology& topology, Asn destination);

// Point `source`'s next hop somewhere else, keeping row order and universe.
ForwardingGraph rewire_entry(const ForwardingGraph& fib, Asn source,
                             Asn new_next_hop);

// Nodes whose path to the destination passes through `node` (including the
// node itself), i.e. its subtree in the reversed forwarding tree.
std::set<Asn> subtree_of(const ForwardingGraph& fib, Asn node);

struct LoopInjection {
  ForwardingGraph graph;
  std::vector<Asn> cycle;  // the nodes on the created cycle
};

// Redirect one entry into its own subtree, producing a cycle that is
// disconnected from the destination. Requires an internal node to exist
// (a pure star has none).
LoopInjection inject_loop(const ForwardingGraph& fib, Rng& rng);

// (s, nh) -> (nh, s), row order preserved. Involution.
std::vector<FibEntry> reverse_fib(const std::vector<FibEntry>& entries);

struct PruneResult {
  std::vector<FibEntry> entries;
  std::size_t removed = 0;
};

// Drop the rows of a reversed FIB whose next-hop field never occurs as a
// source, i.e. the leaves of the reversed tree. Single level by default;
// `to_fixpoint` repeats until nothing changes.
PruneResult prune_leaves(const std::vector<FibEntry>& reversed,
                         bool to_fixpoint = false);

// CSV formatting shared by files and golden tests: "source,next_hop" lines.
std::string format_entries_csv(const std::vector<FibEntry>& entries);

}  // namespace seagull
