#include "seagull/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace seagull {

namespace {

// Index-compressed view: next[i] = forwarding successor of node i, or npos.
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct IndexedGraph {
  std::size_t n = 0;
  std::size_t dest = 0;
  std::vector<std::size_t> next;                  // out-edge per node
  std::vector<std::vector<std::size_t>> parents;  // reverse adjacency
  bool self_loop_off_destination = false;

  explicit IndexedGraph(const ForwardingGraph& fib) {
    n = fib.node_count();
    dest = fib.destination_index();
    next.assign(n, kNone);
    parents.assign(n, {});
    for (const FibEntry& e : fib.entries) {
      std::size_t s = fib.asn_to_index.at(e.source);
      std::size_t t = fib.asn_to_index.at(e.next_hop);
      if (s == t) {
        // A loopback row marks the origin; only the destination may carry
        // one without constituting a loop.
        if (s != dest) self_loop_off_destination = true;
        continue;
      }
      next[s] = t;
      parents[t].push_back(s);
    }
  }
};

bool bfs_loop_free(const IndexedGraph& g) {
  // Reverse BFS from the destination, discovering whole frontiers from the
  // edge list. Coverage of all n nodes is exactly loop-freedom.
  std::vector<char> visited(g.n, 0);
  visited[g.dest] = 1;
  std::size_t count = 1;
  std::deque<std::size_t> frontier{g.dest};
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop_front();
    for (std::size_t p : g.parents[u]) {
      if (!visited[p]) {
        visited[p] = 1;
        ++count;
        frontier.push_back(p);
      }
    }
  }
  return !g.self_loop_off_destination && count == g.n;
}

bool dfs_loop_free(const IndexedGraph& g) {
  // Color DFS over the functional graph; a gray-to-gray edge is a cycle.
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> color(g.n, kWhite);
  for (std::size_t start = 0; start < g.n; ++start) {
    if (color[start] != kWhite) continue;
    std::size_t u = start;
    std::vector<std::size_t> chain;
    while (u != kNone && color[u] == kWhite) {
      color[u] = kGray;
      chain.push_back(u);
      u = g.next[u];
    }
    if (u != kNone && color[u] == kGray) return false;  // back edge
    for (std::size_t v : chain) color[v] = kBlack;
  }
  return !g.self_loop_off_destination;
}

bool topological_loop_free(const IndexedGraph& g) {
  // Kahn completion: every node gets emitted iff the graph is acyclic.
  std::vector<std::size_t> indegree(g.n, 0);
  for (std::size_t u = 0; u < g.n; ++u)
    if (g.next[u] != kNone) ++indegree[g.next[u]];
  std::deque<std::size_t> ready;
  for (std::size_t u = 0; u < g.n; ++u)
    if (indegree[u] == 0) ready.push_back(u);
  std::size_t emitted = 0;
  while (!ready.empty()) {
    std::size_t u = ready.front();
    ready.pop_front();
    ++emitted;
    std::size_t v = g.next[u];
    if (v != kNone && --indegree[v] == 0) ready.push_back(v);
  }
  return !g.self_loop_off_destination && emitted == g.n;
}

// Iterative Tarjan SCC; loop iff a component has two or more nodes. With
// out-degree one the DFS "call stack" is just the current chain of nodes.
bool tarjan_loop_free(const IndexedGraph& g) {
  std::vector<std::size_t> index(g.n, kNone), lowlink(g.n, 0);
  std::vector<char> on_stack(g.n, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;

  for (std::size_t start = 0; start < g.n; ++start) {
    if (index[start] != kNone) continue;

    std::vector<std::size_t> chain;
    std::size_t u = start;
    for (;;) {  // descend along unvisited successors
      index[u] = lowlink[u] = counter++;
      stack.push_back(u);
      on_stack[u] = 1;
      chain.push_back(u);
      std::size_t v = g.next[u];
      if (v == kNone || index[v] != kNone) break;
      u = v;
    }
    while (!chain.empty()) {  // unwind, propagating lowlinks
      u = chain.back();
      chain.pop_back();
      std::size_t v = g.next[u];
      if (v != kNone) {
        if (index[v] > index[u])
          lowlink[u] = std::min(lowlink[u], lowlink[v]);  // tree edge
        else if (on_stack[v])
          lowlink[u] = std::min(lowlink[u], index[v]);  // back edge
      }
      if (lowlink[u] == index[u]) {
        std::size_t size = 0;
        for (;;) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          ++size;
          if (w == u) break;
        }
        if (size >= 2) return false;
      }
    }
  }
  return !g.self_loop_off_destination;
}

bool dsu_loop_free(const IndexedGraph& g) {
  // Union-find over the undirected version; a single component covering all
  // nodes is the connectivity criterion.
  std::vector<std::size_t> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = g.n;
  for (std::size_t u = 0; u < g.n; ++u) {
    if (g.next[u] == kNone) continue;
    std::size_t a = find(u);
    std::size_t b = find(g.next[u]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return !g.self_loop_off_destination && components == 1;
}

// Johnson's elementary-circuit algorithm with the usual blocked sets. The
// forwarding graphs have out-degree one, so the recursion depth is bounded
// by the longest simple path.
class JohnsonSearch {
 public:
  JohnsonSearch(const IndexedGraph& g, bool enumerate_all)
      : g_(g), enumerate_all_(enumerate_all) {}

  bool found_cycle() {
    for (std::size_t s = 0; s < g_.n; ++s) {
      blocked_.assign(g_.n, 0);
      block_list_.assign(g_.n, {});
      if (circuit(s, s) && !enumerate_all_) return true;
    }
    return cycles_ > 0;
  }

 private:
  bool circuit(std::size_t v, std::size_t s) {
    bool found = false;
    blocked_[v] = 1;
    std::size_t w = g_.next[v];
    if (w != kNone && w >= s) {  // consider only the subgraph of nodes >= s
      if (w == s) {
        ++cycles_;
        found = true;
      } else if (!blocked_[w]) {
        if (circuit(w, s)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else if (w != kNone && w >= s) {
      block_list_[w].push_back(v);
    }
    return found;
  }

  void unblock(std::size_t v) {
    blocked_[v] = 0;
    for (std::size_t w : block_list_[v])
      if (blocked_[w]) unblock(w);
    block_list_[v].clear();
  }

  const IndexedGraph& g_;
  bool enumerate_all_;
  std::vector<char> blocked_;
  std::vector<std::vector<std::size_t>> block_list_;
  std::size_t cycles_ = 0;
};

}  // namespace

LoopAlgorithm loop_algorithm_from_name(std::string_view name) {
  if (name == "bfs") return LoopAlgorithm::kBfs;
  if (name == "dfs") return LoopAlgorithm::kDfs;
  if (name == "topological") return LoopAlgorithm::kTopological;
  if (name == "tarjan") return LoopAlgorithm::kTarjan;
  if (name == "dsu") return LoopAlgorithm::kDsu;
  if (name == "johnson") return LoopAlgorithm::kJohnson;
  throw std::invalid_argument("unknown loop algorithm '" + std::string(name) +
                              "'");
}

std::string_view loop_algorithm_name(LoopAlgorithm algorithm) {
  switch (algorithm) {
    case LoopAlgorithm::kBfs: return "bfs";
    case LoopAlgorithm::kDfs: return "dfs";
    case LoopAlgorithm::kTopological: return "topological";
    case LoopAlgorithm::kTarjan: return "tarjan";
    case LoopAlgorithm::kDsu: return "dsu";
    case LoopAlgorithm::kJohnson: return "johnson";
  }
  throw std::invalid_argument("unknown loop algorithm");
}

bool johnson_loop_free(const ForwardingGraph& fib, bool enumerate_all) {
  IndexedGraph g(fib);
  if (g.self_loop_off_destination) return false;
  return !JohnsonSearch(g, enumerate_all).found_cycle();
}

bool loop_free_oracle(const ForwardingGraph& fib, LoopAlgorithm algorithm) {
  IndexedGraph g(fib);
  switch (algorithm) {
    case LoopAlgorithm::kBfs: return bfs_loop_free(g);
    case LoopAlgorithm::kDfs: return dfs_loop_free(g);
    case LoopAlgorithm::kTopological: return topological_loop_free(g);
    case LoopAlgorithm::kTarjan: return tarjan_loop_free(g);
    case LoopAlgorithm::kDsu: return dsu_loop_free(g);
    case LoopAlgorithm::kJohnson: return johnson_loop_free(fib, false);
  }
  throw std::invalid_argument("unknown loop algorithm");
}

std::set<Asn> unreached_from_destination(const ForwardingGraph& fib) {
  IndexedGraph g(fib);
  std::vector<char> visited(g.n, 0);
  visited[g.dest] = 1;
  std::deque<std::size_t> frontier{g.dest};
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop_front();
    for (std::size_t p : g.parents[u])
      if (!visited[p]) {
        visited[p] = 1;
        frontier.push_back(p);
      }
  }
  std::set<Asn> unreached;
  for (std::size_t i = 0; i < g.n; ++i)
    if (!visited[i]) unreached.insert(fib.index_to_asn[i]);
  return unreached;
}

WalkResult walk_oracle(const ForwardingGraph& fib, Asn s, Asn d,
                       std::uint32_t bound) {
  WalkResult result;
  result.path.push_back(s);
  if (s == d) {
    result.reached = true;
    return result;
  }
  Asn cur = s;
  for (std::uint32_t step = 0; step < bound; ++step) {
    auto nh = fib.next_hop_of(cur);
    if (!nh) return result;  // dangling: unreachable
    cur = *nh;
    result.path.push_back(cur);
    if (cur == d) {
      result.reached = true;
      return result;
    }
  }
  return result;
}

std::size_t tree_depth(const ForwardingGraph& fib) {
  IndexedGraph g(fib);
  std::vector<std::size_t> dist(g.n, kNone);
  dist[g.dest] = 0;
  std::deque<std::size_t> frontier{g.dest};
  std::size_t depth = 0;
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop_front();
    depth = std::max(depth, dist[u]);
    for (std::size_t p : g.parents[u])
      if (dist[p] == kNone) {
        dist[p] = dist[u] + 1;
        frontier.push_back(p);
      }
  }
  return depth;
}

namespace {

// Distinct pseudo-ASNs so the index map is exercised with gaps and
// out-of-order labels rather than the identity permutation.
std::vector<Asn> draw_asns(std::size_t n, Rng& rng) {
  std::set<Asn> chosen;
  while (chosen.size() < n)
    chosen.insert(static_cast<Asn>(1 + rng.next_below(4 * n + 16)));
  std::vector<Asn> out(chosen.begin(), chosen.end());
  // Fisher-Yates so structural roles are uncorrelated with ASN order.
  for (std::size_t i = out.size(); i > 1; --i)
    std::swap(out[i - 1], out[rng.next_below(i)]);
  return out;
}

}  // namespace

ForwardingGraph generate_tree(GraphShape shape, std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("generate_tree: need n >= 2");
  std::vector<Asn> asns = draw_asns(n, rng);
  Asn dest = asns[0];
  std::vector<FibEntry> entries;
  switch (shape) {
    case GraphShape::kChain:
      for (std::size_t i = 1; i < n; ++i)
        entries.push_back({asns[i], asns[i - 1]});
      break;
    case GraphShape::kStar:
      for (std::size_t i = 1; i < n; ++i) entries.push_back({asns[i], dest});
      break;
    case GraphShape::kCaidaLike: {
      // Preferential attachment: parent drawn with weight child_count + 1,
      // which keeps the tree wide and shallow.
      std::vector<std::size_t> weight{1};
      for (std::size_t i = 1; i < n; ++i) {
        std::size_t total = 0;
        for (std::size_t j = 0; j < i; ++j) total += weight[j];
        std::size_t pick = rng.next_below(total);
        std::size_t parent = 0;
        for (std::size_t j = 0; j < i; ++j) {
          if (pick < weight[j]) {
            parent = j;
            break;
          }
          pick -= weight[j];
        }
        entries.push_back({asns[i], asns[parent]});
        ++weight[parent];
        weight.push_back(1);
      }
      break;
    }
  }
  return make_forwarding_graph(dest, std::move(entries));
}

std::vector<LabeledInstance> generate_instances(const InstanceSpec& spec,
                                                Rng& rng) {
  if (spec.n_min < 2 || spec.n_max < spec.n_min)
    throw std::invalid_argument("generate_instances: bad size range");
  std::vector<LabeledInstance> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    std::size_t n =
        spec.n_min + rng.next_below(spec.n_max - spec.n_min + 1);
    bool want_loop =
        rng.next_below(1u << 30) < spec.loop_probability * (1u << 30);
    GraphShape shape = spec.shape;
    if (want_loop && (n < 4 || shape == GraphShape::kStar)) {
      // A pure star has no internal node to loop through; fall back to the
      // shallow random shape, and give up on a loop below n = 4.
      if (n < 4) want_loop = false;
      else shape = GraphShape::kCaidaLike;
    }
    LabeledInstance inst;
    inst.graph = generate_tree(shape, n, rng);
    if (want_loop) {
      LoopInjection injected = inject_loop(inst.graph, rng);
      inst.graph = std::move(injected.graph);
      inst.cycle = std::move(injected.cycle);
      inst.loop_free = false;
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<BenchmarkRow> run_benchmark(std::span<const ForwardingGraph> graphs,
                                        std::size_t repetitions) {
  if (repetitions < 1)
    throw std::invalid_argument("run_benchmark: need at least one repetition");
  std::vector<BenchmarkRow> rows;
  rows.reserve(graphs.size());
  for (const ForwardingGraph& fib : graphs) {
    BenchmarkRow row;
    row.edge_count = fib.row_count();
    std::array<bool, 6> verdicts{};
    for (std::size_t a = 0; a < kAllLoopAlgorithms.size(); ++a) {
      double total_ms = 0;
      bool verdict = true;
      for (std::size_t rep = 0; rep < repetitions; ++rep) {
        auto begin = std::chrono::steady_clock::now();
        verdict = loop_free_oracle(fib, kAllLoopAlgorithms[a]);
        auto end = std::chrono::steady_clock::now();
        total_ms +=
            std::chrono::duration<double, std::milli>(end - begin).count();
      }
      verdicts[a] = verdict;
      row.mean_millis[a] = total_ms / static_cast<double>(repetitions);
    }
    row.loop_free = verdicts[0];
    row.algorithms_agree = std::all_of(verdicts.begin(), verdicts.end(),
                                       [&](bool v) { return v == verdicts[0]; });
    rows.push_back(row);
  }
  return rows;
}

std::string format_benchmark_csv(std::span<const BenchmarkRow> rows) {
  std::string out = "edges,loop_free,bfs_ms,dfs_ms,topological_ms,tarjan_ms,"
                    "dsu_ms,johnson_ms\n";
  char buf[64];
  for (const BenchmarkRow& row : rows) {
    out += std::to_string(row.edge_count);
    out += row.loop_free ? ",true" : ",false";
    for (double ms : row.mean_millis) {
      std::snprintf(buf, sizeof buf, ",%.3f", ms);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string format_benchmark_table(std::span<const BenchmarkRow> rows) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%10s %10s %10s %12s %10s %10s %10s\n",
                "# Edges", "BFS", "DFS", "Topological", "Tarjan", "DSU",
                "Johnson");
  out << line;
  for (const BenchmarkRow& row : rows) {
    std::snprintf(line, sizeof line,
                  "%10zu %10.3f %10.3f %12.3f %10.3f %10.3f %10.3f\n",
                  row.edge_count, row.mean_millis[0], row.mean_millis[1],
                  row.mean_millis[2], row.mean_millis[3], row.mean_millis[4],
                  row.mean_millis[5]);
    out << line;
  }
  return out.str();
}

}  // namespace seagull
