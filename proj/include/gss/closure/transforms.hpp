#pragma once

#include "gss/closure/space.hpp"

namespace gss::closure {

// t1 <-> t2 when they are equal or their two-point set is not closed ("tie"),
// and ~ is the transitive closure of the tie relation.
struct Equivalence {
  std::vector<std::vector<bool>> tie;    // symmetric, reflexive
  std::vector<int> class_of;             // element index -> class index
  std::vector<Subset> classes;           // class index -> member mask
};

inline bool tie_related(const Space& s, int i, int j) {
  if (i == j) return true;
  return !s.is_closed((Subset(1) << i) | (Subset(1) << j));
}

inline Equivalence equivalence_structure(const Space& s) {
  const int n = s.size();
  Equivalence eq;
  eq.tie.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      eq.tie[static_cast<size_t>(i)][static_cast<size_t>(j)] = tie_related(s, i, j);
  eq.class_of.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (eq.class_of[static_cast<size_t>(i)] >= 0) continue;
    int cls = static_cast<int>(eq.classes.size());
    // BFS over the tie graph; classes come out ordered by smallest member.
    std::vector<int> stack = {i};
    Subset members = 0;
    eq.class_of[static_cast<size_t>(i)] = cls;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      members |= Subset(1) << t;
      for (int j = 0; j < n; ++j) {
        if (eq.class_of[static_cast<size_t>(j)] < 0 &&
            eq.tie[static_cast<size_t>(t)][static_cast<size_t>(j)]) {
          eq.class_of[static_cast<size_t>(j)] = cls;
          stack.push_back(j);
        }
      }
    }
    eq.classes.push_back(members);
  }
  return eq;
}

struct TransformResult {
  Space g_space;  // one point per ~ class
  Space p_space;  // one point per distinct closure-of-class
  SpaceMap delta;  // g_space -> p_space, C(t) |-> c(C(t))
  std::vector<Subset> class_masks;    // base coordinates, indexed like g_space
  std::vector<Subset> closure_masks;  // base coordinates, indexed like p_space

  TransformResult(Space g, Space p, SpaceMap d, std::vector<Subset> cm, std::vector<Subset> km)
      : g_space(std::move(g)),
        p_space(std::move(p)),
        delta(std::move(d)),
        class_masks(std::move(cm)),
        closure_masks(std::move(km)) {}
};

// Both derived spaces of a closure space. The closed sets of the second
// space are the sets {p : p ⊆ D} for D closed in the base, and the first
// space carries the pullback structure along delta.
inline TransformResult transforms(const Space& s) {
  Equivalence eq = equivalence_structure(s);
  const int num_classes = static_cast<int>(eq.classes.size());

  std::vector<std::string> g_labels;
  g_labels.reserve(static_cast<size_t>(num_classes));
  for (const Subset& cls : eq.classes) g_labels.push_back(s.set_to_string(cls));

  std::vector<Subset> closure_masks;  // distinct, in first-seen order
  std::vector<int> delta_table(static_cast<size_t>(num_classes));
  for (int c = 0; c < num_classes; ++c) {
    Subset cl = s.closure(eq.classes[static_cast<size_t>(c)]);
    int idx = -1;
    for (size_t k = 0; k < closure_masks.size(); ++k)
      if (closure_masks[k] == cl) idx = static_cast<int>(k);
    if (idx < 0) {
      idx = static_cast<int>(closure_masks.size());
      closure_masks.push_back(cl);
    }
    delta_table[static_cast<size_t>(c)] = idx;
  }

  std::vector<std::string> p_labels;
  p_labels.reserve(closure_masks.size());
  for (Subset m : closure_masks) p_labels.push_back(s.set_to_string(m));

  // Closed sets of the p-transform: one per closed set of the base.
  std::vector<Subset> p_family;
  p_family.reserve(s.closed_family().size());
  for (Subset d : s.closed_family()) {
    Subset t = 0;
    for (size_t k = 0; k < closure_masks.size(); ++k)
      if ((closure_masks[k] & ~d) == 0) t |= Subset(1) << k;
    p_family.push_back(t);
  }
  Space p_space = Space::from_masks(p_labels, std::move(p_family));

  Space g_space = pullback_space(g_labels, delta_table, p_space);
  SpaceMap delta(g_space, p_space, delta_table);
  return TransformResult(std::move(g_space), std::move(p_space), std::move(delta),
                         std::move(eq.classes), std::move(closure_masks));
}

// Lifts of a homeomorphism to both transforms, with the commuting square
// delta_dst ∘ f_g = f_p ∘ delta_src.
struct LiftedMaps {
  SpaceMap f_g;
  SpaceMap f_p;
};

inline LiftedMaps lift_homeomorphism(const SpaceMap& f) {
  if (!is_homeomorphism(f))
    throw ValidationError("lift requires a verified homeomorphism");
  TransformResult src = transforms(f.source);
  TransformResult dst = transforms(f.target);
  Equivalence dst_eq = equivalence_structure(f.target);

  std::vector<int> g_table(src.class_masks.size());
  for (size_t c = 0; c < src.class_masks.size(); ++c) {
    Subset img = f.image(src.class_masks[c]);
    int rep = std::countr_zero(img);
    g_table[c] = dst_eq.class_of[static_cast<size_t>(rep)];
  }

  std::vector<int> p_table(src.closure_masks.size(), -1);
  for (size_t c = 0; c < src.class_masks.size(); ++c) {
    int src_p = src.delta.table[c];
    int dst_p = dst.delta.table[static_cast<size_t>(g_table[c])];
    if (p_table[static_cast<size_t>(src_p)] >= 0 &&
        p_table[static_cast<size_t>(src_p)] != dst_p)
      throw ValidationError("lift produced an inconsistent p-transform map");
    p_table[static_cast<size_t>(src_p)] = dst_p;
  }

  return LiftedMaps{SpaceMap(src.g_space, dst.g_space, std::move(g_table)),
                    SpaceMap(src.p_space, dst.p_space, std::move(p_table))};
}

}  // namespace gss::closure
