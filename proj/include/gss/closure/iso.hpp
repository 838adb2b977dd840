#pragma once

#include <optional>

#include "gss/closure/space.hpp"

namespace gss::closure {

namespace detail {

// Per-element invariant: how many closed sets of each size contain the
// element, prefixed by whether its singleton is closed. Any homeomorphism
// must match these signatures.
inline std::vector<std::vector<int>> element_signatures(const Space& s) {
  std::vector<std::vector<int>> sig(static_cast<size_t>(s.size()),
                                    std::vector<int>(static_cast<size_t>(s.size()) + 2, 0));
  for (int i = 0; i < s.size(); ++i)
    sig[static_cast<size_t>(i)][0] = s.is_closed(Subset(1) << i) ? 1 : 0;
  for (Subset c : s.closed_family()) {
    int sz = popcount(c);
    for (int i = 0; i < s.size(); ++i)
      if (c & (Subset(1) << i)) sig[static_cast<size_t>(i)][static_cast<size_t>(sz) + 1]++;
  }
  return sig;
}

inline std::vector<int> family_size_profile(const Space& s) {
  std::vector<int> profile(static_cast<size_t>(s.size()) + 1, 0);
  for (Subset c : s.closed_family()) profile[static_cast<size_t>(popcount(c))]++;
  return profile;
}

inline bool extend_assignment(const Space& src, const Space& dst,
                              const std::vector<std::vector<int>>& src_sig,
                              const std::vector<std::vector<int>>& dst_sig,
                              const std::vector<int>& order, size_t depth,
                              std::vector<int>& table, std::vector<bool>& used) {
  if (depth == order.size()) {
    SpaceMap candidate(src, dst, table);
    return is_homeomorphism(candidate);
  }
  int e = order[depth];
  for (int d = 0; d < dst.size(); ++d) {
    if (used[static_cast<size_t>(d)]) continue;
    if (src_sig[static_cast<size_t>(e)] != dst_sig[static_cast<size_t>(d)]) continue;
    table[static_cast<size_t>(e)] = d;
    used[static_cast<size_t>(d)] = true;
    if (extend_assignment(src, dst, src_sig, dst_sig, order, depth + 1, table, used)) return true;
    used[static_cast<size_t>(d)] = false;
  }
  return false;
}

}  // namespace detail

// Search for a closed-family-preserving bijection. Invariant pre-filters
// (family size profile, per-element signatures) prune before backtracking.
// When `check` is given, only that map is verified.
inline std::optional<SpaceMap> find_homeomorphism(const Space& src, const Space& dst,
                                                  const std::optional<SpaceMap>& check = {}) {
  if (check) {
    if (is_homeomorphism(*check)) return check;
    return std::nullopt;
  }
  if (src.size() != dst.size()) return std::nullopt;
  if (src.closed_family().size() != dst.closed_family().size()) return std::nullopt;
  if (detail::family_size_profile(src) != detail::family_size_profile(dst)) return std::nullopt;

  auto src_sig = detail::element_signatures(src);
  auto dst_sig = detail::element_signatures(dst);
  {
    auto a = src_sig;
    auto b = dst_sig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Assign the rarest signatures first.
  std::vector<int> order(static_cast<size_t>(src.size()));
  for (int i = 0; i < src.size(); ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = 0, cb = 0;
    for (const auto& s : src_sig) {
      if (s == src_sig[static_cast<size_t>(a)]) ++ca;
      if (s == src_sig[static_cast<size_t>(b)]) ++cb;
    }
    if (ca != cb) return ca < cb;
    return src_sig[static_cast<size_t>(a)] < src_sig[static_cast<size_t>(b)];
  });

  std::vector<int> table(static_cast<size_t>(src.size()), -1);
  std::vector<bool> used(static_cast<size_t>(dst.size()), false);
  if (detail::extend_assignment(src, dst, src_sig, dst_sig, order, 0, table, used))
    return SpaceMap(src, dst, table);
  return std::nullopt;
}

}  // namespace gss::closure
