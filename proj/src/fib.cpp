#include "seagull/fib.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "seagull/errors.hpp"

namespace seagull {

void ForwardingGraph::rebuild_index() {
  std::set<Asn> universe;
  universe.insert(destination);
  for (const FibEntry& e : entries) {
    universe.insert(e.source);
    universe.insert(e.next_hop);
  }
  index_to_asn.assign(universe.begin(), universe.end());
  asn_to_index.clear();
  for (std::size_t i = 0; i < index_to_asn.size(); ++i)
    asn_to_index[index_to_asn[i]] = i;
}

ForwardingGraph make_forwarding_graph(Asn destination,
                                      std::vector<FibEntry> entries) {
  ForwardingGraph g;
  g.destination = destination;
  // One outgoing edge per source: a repeated source replaces the earlier
  // row in place (the most recent observation is the one retained).
  for (const FibEntry& e : entries) {
    auto it = std::find_if(g.entries.begin(), g.entries.end(),
                           [&](const FibEntry& x) { return x.source == e.source; });
    if (it != g.entries.end())
      it->next_hop = e.next_hop;
    else
      g.entries.push_back(e);
  }
  g.rebuild_index();
  return g;
}

AsTopology parse_topology(std::string_view text) {
  AsTopology topo;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    std::string trimmed(line);
    std::istringstream in(trimmed);
    std::string a, b, extra;
    if (!(in >> a)) continue;        // blank line
    if (a[0] == '#') continue;       // comment
    if (!(in >> b))
      throw ParseError("topology line needs two ASN tokens", line_no);
    if (in >> extra && extra[0] != '#')
      throw ParseError("topology line has trailing tokens", line_no);

    auto parse_asn = [&](const std::string& tok) -> Asn {
      try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size() || v > std::numeric_limits<Asn>::max())
          throw std::invalid_argument(tok);
        return static_cast<Asn>(v);
      } catch (const std::exception&) {
        throw ParseError("invalid ASN token '" + tok + "'", line_no);
      }
    };

    Asn u = parse_asn(a);
    Asn v = parse_asn(b);
    if (u == v) throw ParseError("self-link is not a valid AS edge", line_no);
    topo.nodes.insert(u);
    topo.nodes.insert(v);
    topo.edges.insert({std::min(u, v), std::max(u, v)});
  }
  return topo;
}

namespace {

std::map<Asn, std::vector<Asn>> adjacency(const AsTopology& topo) {
  std::map<Asn, std::vector<Asn>> adj;
  for (auto [a, b] : topo.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [asn, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace

ForwardingGraph build_fib(const AsTopology& topology, Asn destination) {
  if (!topology.nodes.count(destination))
    throw std::invalid_argument("build_fib: unknown destination " +
                                std::to_string(destination));
  auto adj = adjacency(topology);

  std::map<Asn, std::size_t> dist;
  dist[destination] = 0;
  std::deque<Asn> frontier{destination};
  while (!frontier.empty()) {
    Asn u = frontier.front();
    frontier.pop_front();
    for (Asn v : adj[u]) {
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }

  // Parent = smallest-ASN neighbor one level closer to the destination.
  // Distance-first then tie-break keeps the tree independent of traversal
  // order.
  std::vector<FibEntry> entries;
  for (auto [node, d] : dist) {
    if (node == destination) continue;
    Asn parent = std::numeric_limits<Asn>::max();
    for (Asn nbr : adj[node]) {
      auto it = dist.find(nbr);
      if (it != dist.end() && it->second + 1 == d && nbr < parent) parent = nbr;
    }
    entries.push_back({node, parent});
  }
  return make_forwarding_graph(destination, std::move(entries));
}

ForwardingGraph rewire_entry(const ForwardingGraph& fib, Asn source,
                             Asn new_next_hop) {
  ForwardingGraph out = fib;
  bool found = false;
  for (FibEntry& e : out.entries) {
    if (e.source == source) {
      e.next_hop = new_next_hop;
      found = true;
      break;
    }
  }
  if (!found)
    throw std::invalid_argument("rewire_entry: no row for source " +
                                std::to_string(source));
  out.rebuild_index();
  return out;
}

std::set<Asn> subtree_of(const ForwardingGraph& fib, Asn node) {
  // Children in the reversed tree = sources forwarding to the node.
  std::map<Asn, std::vector<Asn>> children;
  for (const FibEntry& e : fib.entries) children[e.next_hop].push_back(e.source);

  std::set<Asn> out;
  std::deque<Asn> frontier{node};
  while (!frontier.empty()) {
    Asn u = frontier.front();
    frontier.pop_front();
    if (!out.insert(u).second) continue;  // guards against pre-existing cycles
    for (Asn c : children[u]) frontier.push_back(c);
  }
  return out;
}

LoopInjection inject_loop(const ForwardingGraph& fib, Rng& rng) {
  if (fib.node_count() < 4)  // destination plus at least 3 others
    throw std::invalid_argument("inject_loop: graph too small");

  // Candidates: nodes with at least one descendant, so the rewired edge can
  // land strictly inside the node's own subtree.
  std::vector<Asn> internal;
  for (const FibEntry& e : fib.entries) {
    if (e.next_hop == fib.destination) continue;
    if (fib.next_hop_of(e.next_hop).has_value() &&
        std::find(internal.begin(), internal.end(), e.next_hop) ==
            internal.end())
      internal.push_back(e.next_hop);
  }
  if (internal.empty())
    throw std::invalid_argument(
        "inject_loop: no internal node to loop through");
  std::sort(internal.begin(), internal.end());

  Asn pivot = internal[rng.next_below(internal.size())];
  std::set<Asn> subtree = subtree_of(fib, pivot);
  subtree.erase(pivot);
  std::vector<Asn> targets(subtree.begin(), subtree.end());
  Asn target = targets[rng.next_below(targets.size())];

  ForwardingGraph looped = rewire_entry(fib, pivot, target);

  // The cycle is the old path from the target up to the pivot plus the new
  // edge pivot -> target.
  std::vector<Asn> cycle{target};
  Asn cur = target;
  while (cur != pivot) {
    cur = *fib.next_hop_of(cur);
    cycle.push_back(cur);
  }
  return {std::move(looped), std::move(cycle)};
}

std::vector<FibEntry> reverse_fib(const std::vector<FibEntry>& entries) {
  std::vector<FibEntry> out;
  out.reserve(entries.size());
  for (const FibEntry& e : entries) out.push_back({e.next_hop, e.source});
  return out;
}

PruneResult prune_leaves(const std::vector<FibEntry>& reversed,
                         bool to_fixpoint) {
  PruneResult result{reversed, 0};
  for (;;) {
    std::set<Asn> sources;
    for (const FibEntry& e : result.entries) sources.insert(e.source);

    std::vector<FibEntry> kept;
    std::size_t removed_now = 0;
    for (const FibEntry& e : result.entries) {
      if (sources.count(e.next_hop))
        kept.push_back(e);
      else
        ++removed_now;  // next-hop never forwards onward: a leaf row
    }
    result.entries = std::move(kept);
    result.removed += removed_now;
    if (!to_fixpoint || removed_now == 0) break;
  }
  return result;
}

std::string format_entries_csv(const std::vector<FibEntry>& entries) {
  std::string out;
  for (const FibEntry& e : entries) {
    out += std::to_string(e.source);
    out += ',';
    out += std::to_string(e.next_hop);
    out += '\n';
  }
  return out;
}

}  // namespace seagull
