#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coarg/bits.hpp"

namespace coarg {

/// One generator of the attack relation: `source` attacks `target`, and by
/// monotonicity so does every superset pair. Either side may be empty.
struct AttackPair {
  Bits source;
  Bits target;
  friend bool operator==(const AttackPair&, const AttackPair&) = default;
};

bool pair_less(const AttackPair& a, const AttackPair& b);

/// Subsumption-normalizes a generator list: drops every pair that is
/// componentwise dominated by another and sorts the survivors. The derived
/// attack relation is unchanged.
std::vector<AttackPair> normalize(std::vector<AttackPair> pairs);

/// A collective argumentation theory: a finite argument universe together
/// with a normalized attack base. Immutable after construction; all
/// operations on it are pure.
class Theory {
 public:
  Theory() = default;
  Theory(std::vector<std::string> universe, std::vector<AttackPair> generators);

  int size() const { return static_cast<int>(universe_.size()); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<AttackPair>& base() const { return base_; }
  Bits all() const { return Bits::full(size()); }

  /// Index of a named argument, or -1.
  int index_of(std::string_view name) const;
  /// Resolves names to a set; throws on unknown names.
  Bits set_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Bits set) const;

  /// True iff some base pair (A, B) has A ⊆ gamma and B ⊆ delta.
  bool attacks(Bits gamma, Bits delta) const;

  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<AttackPair> base_;
};

}  // namespace coarg
