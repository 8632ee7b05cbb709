#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "scholz/ground_field.hpp"

namespace scholz {

/// Generators of the odd degree-one primes of F with norm <= bound, one per ideal,
/// ordered by (norm, root). Primary generators are used where they exist.
std::vector<RingElement> degree_one_primes(const GroundField& F, u64 bound);

struct PrimePair {
  RingElement pi1, pi2;
  u64 p = 0, q = 0;
};

/// Pairs with N pi1 < N pi2 <= bound, ordered by (N pi1, N pi2). pi1 is a fixed prime above p
/// (the canonical primary associate when there is one); pi2 runs over every prime above q.
std::vector<PrimePair> prime_pairs(const GroundField& F, u64 bound);

/// Applies fn to every item on `jobs` threads; results keep the input order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, unsigned jobs, Fn fn) -> std::vector<decltype(fn(items[0]))> {
  using R = decltype(fn(items[0]));
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) slots[i].emplace(fn(items[i]));
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace scholz
