#pragma once

#include <vector>

#include "coarg/semantics.hpp"
#include "coarg/theory.hpp"

namespace coarg {

enum class DungSemantics { complete, preferred, stable, grounded };

/// Single-argument-target view of a normal theory. In a normal theory an
/// attack on a set always splits to an attack on one of its members, so the
/// classic acceptability machinery applies. Construction rejects non-normal
/// theories.
class DungView {
 public:
  explicit DungView(Theory t);

  const Theory& theory() const { return theory_; }

  /// The arguments allowable by gamma: { a | gamma does not attack {a} }.
  Bits bracket(Bits gamma) const;

  /// grounded = least fixpoint of gamma -> bracket(bracket(gamma)),
  /// reached by iteration from the empty set.
  Bits grounded() const;

  std::vector<Bits> extensions(DungSemantics semantics,
                               int max_universe = kMaxEnumUniverse) const;

 private:
  Theory theory_;
};

/// Outcome of comparing the theory-level notions with the classic ones:
/// stable sets against stable extensions, and p-stable pairs against
/// (complete extension, its bracket) pairs.
struct CorrespondenceReport {
  std::vector<Bits> stable_only_theory;   // stable sets with no stable extension
  std::vector<Bits> stable_only_dung;     // stable extensions with no stable set
  std::vector<PStablePair> pstable_only_theory;
  std::vector<PStablePair> pstable_only_dung;

  bool pass() const {
    return stable_only_theory.empty() && stable_only_dung.empty() &&
           pstable_only_theory.empty() && pstable_only_dung.empty();
  }
};

CorrespondenceReport check_normal_correspondence(const DungView& view,
                                                 int max_universe = kMaxEnumUniverse);

}  // namespace coarg
