#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gss::closure {

// Ground elements are indexed; subsets are bitmasks over those indices.
using Subset = std::uint32_t;

// Exhaustive subset operations stay tractable only for small grounds.
inline constexpr int kMaxGround = 24;

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int popcount(Subset s) { return std::popcount(s); }

// A finite closure space, stored as its intersection-closed family of closed
// sets. The closure operator is recovered as smallest closed superset, which
// is well defined because the family is intersection-closed and contains the
// whole ground set.
class Space {
 public:
  Space() : full_(0) {}

  static Space from_masks(std::vector<std::string> ground, std::vector<Subset> family) {
    Space s;
    s.init_ground(std::move(ground));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    for (Subset c : family)
      if ((c & ~s.full_) != 0) throw ValidationError("closed set contains element outside ground");
    if (family.empty() || family.front() != 0)
      throw ValidationError("axiom (i) violated: empty set is not closed");
    if (std::find(family.begin(), family.end(), s.full_) == family.end())
      throw ValidationError("ground set is not closed");
    for (size_t i = 0; i < family.size(); ++i) {
      for (size_t j = i + 1; j < family.size(); ++j) {
        Subset inter = family[i] & family[j];
        if (!std::binary_search(family.begin(), family.end(), inter)) {
          throw ValidationError("family not intersection-closed: " + s.set_to_string(family[i]) +
                                " ∩ " + s.set_to_string(family[j]) + " = " +
                                s.set_to_string(inter) + " is missing");
        }
      }
    }
    s.closed_ = std::move(family);
    return s;
  }

  static Space from_closed_family(std::vector<std::string> ground,
                                  const std::vector<std::vector<std::string>>& family) {
    Space probe;
    probe.init_ground(ground);
    std::vector<Subset> masks;
    masks.reserve(family.size());
    for (const auto& set : family) masks.push_back(probe.mask_of(set));
    return from_masks(std::move(ground), std::move(masks));
  }

  static Space discrete(std::vector<std::string> ground) {
    Space probe;
    probe.init_ground(ground);
    if (probe.size() > 20) throw ValidationError("discrete space too large to enumerate");
    std::vector<Subset> family;
    for (Subset s = 0; s <= probe.full_; ++s) family.push_back(s);
    if (probe.full_ == 0) family = {0};
    return from_masks(std::move(ground), std::move(family));
  }

  static Space indiscrete(std::vector<std::string> ground) {
    Space probe;
    probe.init_ground(ground);
    std::vector<Subset> family = {0};
    if (probe.full_ != 0) family.push_back(probe.full_);
    return from_masks(std::move(ground), std::move(family));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  Subset full_mask() const { return full_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Subset>& closed_family() const { return closed_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw ValidationError("element outside ground: " + label);
    return it->second;
  }

  Subset mask_of(std::span<const std::string> labels) const {
    Subset m = 0;
    for (const auto& l : labels) m |= Subset(1) << index_of(l);
    return m;
  }
  Subset mask_of(std::initializer_list<std::string> labels) const {
    return mask_of(std::span<const std::string>(labels.begin(), labels.size()));
  }

  std::vector<std::string> labels_of(Subset s) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
      if (s & (Subset(1) << i)) out.push_back(labels_[static_cast<size_t>(i)]);
    return out;
  }

  std::string set_to_string(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (const auto& l : labels_of(s)) {
      if (!first) out += ",";
      out += l;
      first = false;
    }
    return out + "}";
  }

  bool is_closed(Subset s) const {
    return std::binary_search(closed_.begin(), closed_.end(), s);
  }

  // Smallest closed superset.
  Subset closure(Subset s) const {
    if ((s & ~full_) != 0) throw ValidationError("subset contains element outside ground");
    Subset acc = full_;
    for (Subset c : closed_)
      if ((s & ~c) == 0) acc &= c;
    return acc;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<Subset> closed_;
  Subset full_;

  void init_ground(std::vector<std::string> ground) {
    if (ground.size() > kMaxGround)
      throw ValidationError("ground set exceeds the supported maximum of 24 elements");
    labels_ = std::move(ground);
    for (size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
        throw ValidationError("duplicate ground label: " + labels_[i]);
    }
    full_ = labels_.empty() ? 0 : (Subset(1) << labels_.size()) - 1;
  }
};

// A total mapping between the grounds of two spaces, stored by index.
struct SpaceMap {
  Space source;
  Space target;
  std::vector<int> table;  // table[src index] = dst index

  SpaceMap(Space src, Space dst, std::vector<int> tbl)
      : source(std::move(src)), target(std::move(dst)), table(std::move(tbl)) {
    if (static_cast<int>(table.size()) != source.size())
      throw ValidationError("map table not total on source ground");
    for (int v : table)
      if (v < 0 || v >= target.size()) throw ValidationError("map image outside target ground");
  }

  static SpaceMap from_labels(Space src, Space dst,
                              const std::map<std::string, std::string>& tbl) {
    std::vector<int> t(static_cast<size_t>(src.size()));
    for (int i = 0; i < src.size(); ++i) {
      auto it = tbl.find(src.labels()[static_cast<size_t>(i)]);
      if (it == tbl.end())
        throw ValidationError("map table missing source element: " +
                              src.labels()[static_cast<size_t>(i)]);
      t[static_cast<size_t>(i)] = dst.index_of(it->second);
    }
    return SpaceMap(std::move(src), std::move(dst), std::move(t));
  }

  Subset image(Subset s) const {
    Subset out = 0;
    for (int i = 0; i < source.size(); ++i)
      if (s & (Subset(1) << i)) out |= Subset(1) << table[static_cast<size_t>(i)];
    return out;
  }

  Subset preimage(Subset s) const {
    Subset out = 0;
    for (int i = 0; i < source.size(); ++i)
      if (s & (Subset(1) << table[static_cast<size_t>(i)])) out |= Subset(1) << i;
    return out;
  }

  bool is_bijective() const {
    if (source.size() != target.size()) return false;
    std::vector<bool> hit(static_cast<size_t>(target.size()), false);
    for (int v : table) {
      if (hit[static_cast<size_t>(v)]) return false;
      hit[static_cast<size_t>(v)] = true;
    }
    return true;
  }

  SpaceMap inverse() const {
    if (!is_bijective()) throw ValidationError("inverse of a non-bijective map");
    std::vector<int> t(table.size());
    for (size_t i = 0; i < table.size(); ++i)
      t[static_cast<size_t>(table[i])] = static_cast<int>(i);
    return SpaceMap(target, source, std::move(t));
  }
};

// f is continuous iff the preimage of every closed set is closed.
inline bool is_continuous(const SpaceMap& f) {
  for (Subset c : f.target.closed_family())
    if (!f.source.is_closed(f.preimage(c))) return false;
  return true;
}

inline bool is_homeomorphism(const SpaceMap& f) {
  if (!f.is_bijective()) return false;
  std::vector<Subset> image_family;
  image_family.reserve(f.source.closed_family().size());
  for (Subset c : f.source.closed_family()) image_family.push_back(f.image(c));
  std::sort(image_family.begin(), image_family.end());
  return image_family == f.target.closed_family();
}

// Kuratowski test: for finite spaces, union additivity of the closure is
// equivalent to the closed family being union-closed.
inline bool is_topologizable(const Space& s) {
  const auto& fam = s.closed_family();
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      if (!s.is_closed(fam[i] | fam[j])) return false;
  return true;
}

struct SeparationFlags {
  bool t0 = false;
  bool t1 = false;
};

inline SeparationFlags separation_flags(const Space& s) {
  SeparationFlags flags;
  flags.t1 = true;
  for (int i = 0; i < s.size(); ++i)
    if (!s.is_closed(Subset(1) << i)) flags.t1 = false;
  flags.t0 = true;
  for (int i = 0; i < s.size() && flags.t0; ++i) {
    for (int j = i + 1; j < s.size() && flags.t0; ++j) {
      bool separated = false;
      for (Subset c : s.closed_family()) {
        bool has_i = (c >> i) & 1, has_j = (c >> j) & 1;
        if (has_i != has_j) {
          separated = true;
          break;
        }
      }
      if (!separated) flags.t0 = false;
    }
  }
  return flags;
}

// Pullback of the target structure along f: c(S) = f^{-1}(d(f(S))).
// The closed sets are exactly the preimages of closed sets.
inline Space pullback_space(std::vector<std::string> ground, const std::vector<int>& table,
                            const Space& target) {
  Space probe = Space::indiscrete(ground);
  SpaceMap f(probe, target, table);
  std::vector<Subset> family;
  family.reserve(target.closed_family().size());
  for (Subset c : target.closed_family()) family.push_back(f.preimage(c));
  return Space::from_masks(std::move(ground), std::move(family));
}

// Subspace structure on a: closed sets are the traces C ∩ a.
inline Space subspace(const Space& s, Subset a) {
  if ((a & ~s.full_mask()) != 0) throw ValidationError("subspace carrier outside ground");
  std::vector<std::string> ground = s.labels_of(a);
  // Re-index the trace of each closed set into the subspace coordinates.
  std::vector<int> position(static_cast<size_t>(s.size()), -1);
  int k = 0;
  for (int i = 0; i < s.size(); ++i)
    if (a & (Subset(1) << i)) position[static_cast<size_t>(i)] = k++;
  std::vector<Subset> family;
  for (Subset c : s.closed_family()) {
    Subset trace = 0;
    for (int i = 0; i < s.size(); ++i)
      if ((c & a) & (Subset(1) << i)) trace |= Subset(1) << position[static_cast<size_t>(i)];
    family.push_back(trace);
  }
  return Space::from_masks(std::move(ground), std::move(family));
}

}  // namespace gss::closure
