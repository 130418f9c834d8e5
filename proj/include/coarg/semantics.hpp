#pragma once

#include <vector>

#include "coarg/theory.hpp"

namespace coarg {

/// Hard cap for 2^n / 3^n enumeration entry points. Overridable per call;
/// callers above 14 should expect long runtimes.
inline constexpr int kMaxEnumUniverse = 20;
inline constexpr int kEnumWarnUniverse = 14;

enum class AdmissibilityKind { plain, positive, negative };

/// gamma attacks delta once it may borrow delta's own arguments:
/// gamma ∪ delta attacks delta.
bool attacks_positively(const Theory& t, Bits gamma, Bits delta);

/// gamma's own arguments refute the addition of delta:
/// gamma attacks gamma ∪ delta.
bool attacks_negatively(const Theory& t, Bits gamma, Bits delta);

bool is_conflict_free(const Theory& t, Bits gamma);

/// The maximal elements of { delta | gamma does not attack delta }, computed
/// as complements of the minimal hitting sets of the targets triggered by
/// gamma. Empty iff gamma attacks the empty set.
std::vector<Bits> maximal_allowable(const Theory& t, Bits gamma);

/// Fixpoint test: gamma = { a | gamma does not attack gamma ∪ {a} }.
bool is_stable(const Theory& t, Bits gamma);
std::vector<Bits> stable_sets(const Theory& t, int max_universe = kMaxEnumUniverse);

/// Ordered pair (lower, upper) with lower ⊆ upper.
struct PStablePair {
  Bits lower;
  Bits upper;
  friend bool operator==(const PStablePair&, const PStablePair&) = default;
};

bool pstable_less(const PStablePair& a, const PStablePair& b);

/// Double fixpoint test: upper = { a | lower does not attack upper ∪ {a} }
/// and lower = { a | upper does not attack lower ∪ {a} }. Throws if
/// lower is not a subset of upper.
bool is_p_stable(const Theory& t, const PStablePair& pair);
std::vector<PStablePair> p_stable_pairs(const Theory& t, int max_universe = kMaxEnumUniverse);

/// Conflict-free (w.r.t. the plain relation) and counterattacks every
/// attacker under the chosen attack variant. Quantifies over the minimal
/// attackers only: for each base pair (A, B) of the variant's closure with
/// B ⊆ gamma, gamma must counterattack A.
bool is_admissible(const Theory& t, Bits gamma, AdmissibilityKind kind);
std::vector<Bits> admissible_sets(const Theory& t, AdmissibilityKind kind,
                                  bool maximal_only = false,
                                  int max_universe = kMaxEnumUniverse);

/// Least extension of the attack relation satisfying Importation
/// (if Γ attacks Δ ∪ Φ then Γ ∪ Δ attacks Φ). Base-level subset transfer:
/// every (A ∪ S, B ∖ S) for base pairs (A, B) and S ⊆ B.
Theory negative_closure(const Theory& t);

/// Least extension satisfying Exportation (if Γ ∪ Δ attacks Φ then Γ attacks
/// Δ ∪ Φ); transfers S ⊆ A out of the source instead.
Theory positive_closure(const Theory& t);

bool is_affirmative(const Theory& t);  // no set attacks the empty set
bool is_local(const Theory& t);        // attacks on unions split to a part
bool is_semi_local(const Theory& t);
bool is_positive(const Theory& t);
bool is_negative(const Theory& t);
bool is_normal(const Theory& t);       // affirmative and local

void sort_sets(std::vector<Bits>& sets);

}  // namespace coarg
