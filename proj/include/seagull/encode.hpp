#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "seagull/fib.hpp"
#include "seagull/oblivious.hpp"
#include "seagull/shares.hpp"

namespace seagull {

template <typename ShareT>
struct SharedFibRowT {
  SharedOneHotT<ShareT> src;
  SharedOneHotT<ShareT> dst;
};

// The secret-shared forwarding table. Row count, node universe size and the
// destination index are public session metadata; which AS forwards to which
// is what the sharing hides.
template <typename ShareT>
struct SharedFibT {
  std::vector<SharedFibRowT<ShareT>> rows;
  std::size_t n = 0;
  std::size_t destination_index = 0;
};

template <typename ShareT>
struct SharedUpdateT {
  SharedOneHotT<ShareT> src;      // the updating AS
  SharedOneHotT<ShareT> new_dst;  // its proposed next hop
};

using SharedFib = SharedFibT<ShareSet>;
using SharedUpdate = SharedUpdateT<ShareSet>;

// Dealer-side sharing of a secret index as a one-hot vector.
inline SharedOneHot encode_onehot(std::size_t index, std::size_t n,
                                  std::size_t t, Rng& rng) {
  if (index >= n) throw std::out_of_range("encode_onehot: index >= n");
  SharedOneHot out;
  out.components.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    out.components.push_back(share(FieldElement(j == index ? 1 : 0), t, rng));
  return out;
}

// Shares every FIB row as a pair of one-hot encodings. Rows are shuffled
// first so the stored order carries no trace of ingestion order.
inline SharedFib encode_for_sharing(const ForwardingGraph& fib, std::size_t t,
                                    Rng& rng, bool permute_rows = true) {
  const std::size_t n = fib.node_count();
  std::vector<std::size_t> order(fib.row_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (permute_rows) {
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.next_below(i)]);
  }

  SharedFib shared;
  shared.n = n;
  shared.destination_index = fib.destination_index();
  shared.rows.reserve(fib.row_count());
  for (std::size_t i : order) {
    const FibEntry& e = fib.entries[i];
    auto src_it = fib.asn_to_index.find(e.source);
    auto dst_it = fib.asn_to_index.find(e.next_hop);
    if (src_it == fib.asn_to_index.end() || dst_it == fib.asn_to_index.end())
      throw std::invalid_argument("encode_for_sharing: ASN missing from index map");
    shared.rows.push_back(
        {encode_onehot(src_it->second, n, t, rng),
         encode_onehot(dst_it->second, n, t, rng)});
  }
  return shared;
}

inline SharedUpdate encode_update(const FibUpdate& update,
                                  const ForwardingGraph& fib, std::size_t t,
                                  Rng& rng) {
  auto src_it = fib.asn_to_index.find(update.source);
  auto dst_it = fib.asn_to_index.find(update.new_next_hop);
  if (src_it == fib.asn_to_index.end() || dst_it == fib.asn_to_index.end())
    throw std::invalid_argument(
        "encode_update: ASN outside the shared node universe");
  return {encode_onehot(src_it->second, fib.node_count(), t, rng),
          encode_onehot(dst_it->second, fib.node_count(), t, rng)};
}

// Test-side decoding: reconstruct a one-hot vector and return the index of
// its single 1, nullopt for all-zeros, and reject anything else.
inline std::optional<std::size_t> decode_onehot(const SharedOneHot& onehot) {
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < onehot.size(); ++j) {
    FieldElement v = reconstruct(onehot.components[j]);
    if (v == kOne) {
      if (hit) throw std::invalid_argument("decode_onehot: multiple ones");
      hit = j;
    } else if (!v.is_zero()) {
      throw std::invalid_argument("decode_onehot: non-boolean component");
    }
  }
  return hit;
}

// Reconstructs the plaintext rows in stored (permuted) order; mapping back
// to ASNs needs the public index map.
inline std::vector<FibEntry> decode_shared_fib(
    const SharedFib& shared, const std::vector<Asn>& index_to_asn) {
  std::vector<FibEntry> out;
  out.reserve(shared.rows.size());
  for (const auto& row : shared.rows) {
    auto src = decode_onehot(row.src);
    auto dst = decode_onehot(row.dst);
    if (!src || !dst)
      throw std::invalid_argument("decode_shared_fib: absent row endpoint");
    out.push_back({index_to_asn.at(*src), index_to_asn.at(*dst)});
  }
  return out;
}

}  // namespace seagull
