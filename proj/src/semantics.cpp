#include "coarg/semantics.hpp"

#include <algorithm>

#include "coarg/errors.hpp"

namespace coarg {

namespace {

void check_enum_cap(const Theory& t, int max_universe) {
  if (t.size() > max_universe)
    throw error("universe of " + std::to_string(t.size()) +
                " arguments exceeds the enumeration cap of " +
                std::to_string(max_universe));
}

bool insert_minimal_set(std::vector<Bits>& acc, Bits s) {
  for (Bits q : acc)
    if (q.subset_of(s)) return false;
  std::erase_if(acc, [&](Bits q) { return s.subset_of(q); });
  acc.push_back(s);
  return true;
}

bool hits_all(const std::vector<Bits>& family, Bits chosen) {
  for (Bits s : family)
    if (!s.intersects(chosen)) return false;
  return true;
}

void hitting_rec(const std::vector<Bits>& family, Bits chosen, std::vector<Bits>& out) {
  for (Bits s : family) {
    if (s.intersects(chosen)) continue;
    for (int e : s) hitting_rec(family, chosen.with(e), out);
    return;
  }
  out.push_back(chosen);
}

// All inclusion-minimal sets meeting every member of `family` (members
// non-empty and subsumption-minimal).
std::vector<Bits> minimal_hitting_sets(const std::vector<Bits>& family) {
  if (family.empty()) return {Bits::none()};
  std::vector<Bits> raw;
  hitting_rec(family, Bits::none(), raw);
  std::sort(raw.begin(), raw.end(), set_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Bits> out;
  for (Bits h : raw) {
    bool minimal = true;
    for (int e : h)
      if (hits_all(family, h.without(e))) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(h);
  }
  return out;
}

Bits stable_fix(const Theory& t, Bits gamma) {
  Bits fix;
  for (int a = 0; a < t.size(); ++a)
    if (!t.attacks(gamma, gamma.with(a))) fix = fix.with(a);
  return fix;
}

bool p_stable_equations(const Theory& t, Bits lower, Bits upper) {
  Bits upper_fix, lower_fix;
  for (int a = 0; a < t.size(); ++a) {
    if (!t.attacks(lower, upper.with(a))) upper_fix = upper_fix.with(a);
    if (!t.attacks(upper, lower.with(a))) lower_fix = lower_fix.with(a);
  }
  return upper_fix == upper && lower_fix == lower;
}

void p_stable_rec(const Theory& t, int next, Bits lower, Bits upper,
                  std::vector<PStablePair>& out) {
  // Once a nonempty partial set is attacked the fixpoint equation is already
  // lost for every completion (attacks are monotone).
  if (!upper.empty() && t.attacks(lower, upper)) return;
  if (!lower.empty() && t.attacks(upper, lower)) return;
  if (next == t.size()) {
    if (p_stable_equations(t, lower, upper)) out.push_back({lower, upper});
    return;
  }
  p_stable_rec(t, next + 1, lower, upper, out);                          // out
  p_stable_rec(t, next + 1, lower, upper.with(next), out);               // upper only
  p_stable_rec(t, next + 1, lower.with(next), upper.with(next), out);    // both
}

bool kind_attacks(const Theory& t, AdmissibilityKind kind, Bits gamma, Bits delta) {
  switch (kind) {
    case AdmissibilityKind::plain: return t.attacks(gamma, delta);
    case AdmissibilityKind::positive: return attacks_positively(t, gamma, delta);
    case AdmissibilityKind::negative: return attacks_negatively(t, gamma, delta);
  }
  return false;
}

// The theory whose plain relation is the kind's extended attack relation.
Theory kind_closure(const Theory& t, AdmissibilityKind kind) {
  switch (kind) {
    case AdmissibilityKind::plain: return t;
    case AdmissibilityKind::positive: return positive_closure(t);
    case AdmissibilityKind::negative: return negative_closure(t);
  }
  return t;
}

bool admissible_against(const Theory& t, const Theory& closed,
                        AdmissibilityKind kind, Bits gamma) {
  if (t.attacks(gamma, gamma)) return false;
  // Counterattack is monotone in its target, so the minimal attackers (the
  // sources of the closure's base pairs aimed inside gamma) suffice.
  for (const AttackPair& p : closed.base())
    if (p.target.subset_of(gamma) && !kind_attacks(t, kind, gamma, p.source))
      return false;
  return true;
}

void keep_maximal(std::vector<Bits>& sets) {
  std::vector<Bits> out;
  for (Bits s : sets) {
    bool maximal = true;
    for (Bits q : sets)
      if (s != q && s.subset_of(q)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  sets = std::move(out);
}

}  // namespace

void sort_sets(std::vector<Bits>& sets) {
  std::sort(sets.begin(), sets.end(), set_less);
}

bool attacks_positively(const Theory& t, Bits gamma, Bits delta) {
  return t.attacks(gamma | delta, delta);
}

bool attacks_negatively(const Theory& t, Bits gamma, Bits delta) {
  return t.attacks(gamma, gamma | delta);
}

bool is_conflict_free(const Theory& t, Bits gamma) {
  return !t.attacks(gamma, gamma);
}

std::vector<Bits> maximal_allowable(const Theory& t, Bits gamma) {
  std::vector<Bits> triggered;
  for (const AttackPair& p : t.base())
    if (p.source.subset_of(gamma)) {
      if (p.target.empty()) return {};  // even the empty set is attacked
      insert_minimal_set(triggered, p.target);
    }
  if (triggered.empty()) return {t.all()};
  std::vector<Bits> out;
  for (Bits h : minimal_hitting_sets(triggered)) out.push_back(t.all() - h);
  sort_sets(out);
  return out;
}

bool is_stable(const Theory& t, Bits gamma) {
  return stable_fix(t, gamma) == gamma;
}

std::vector<Bits> stable_sets(const Theory& t, int max_universe) {
  check_enum_cap(t, max_universe);
  std::vector<Bits> out;
  const std::uint64_t end = std::uint64_t{1} << t.size();
  for (std::uint64_t m = 0; m < end; ++m)
    if (is_stable(t, Bits{m})) out.push_back(Bits{m});
  sort_sets(out);
  return out;
}

bool pstable_less(const PStablePair& a, const PStablePair& b) {
  if (a.lower != b.lower) return set_less(a.lower, b.lower);
  return set_less(a.upper, b.upper);
}

bool is_p_stable(const Theory& t, const PStablePair& pair) {
  if (!pair.lower.subset_of(pair.upper))
    throw error("p-stable pair requires lower to be a subset of upper");
  return p_stable_equations(t, pair.lower, pair.upper);
}

std::vector<PStablePair> p_stable_pairs(const Theory& t, int max_universe) {
  check_enum_cap(t, max_universe);
  std::vector<PStablePair> out;
  p_stable_rec(t, 0, Bits::none(), Bits::none(), out);
  std::sort(out.begin(), out.end(), pstable_less);
  return out;
}

bool is_admissible(const Theory& t, Bits gamma, AdmissibilityKind kind) {
  return admissible_against(t, kind_closure(t, kind), kind, gamma);
}

std::vector<Bits> admissible_sets(const Theory& t, AdmissibilityKind kind,
                                  bool maximal_only, int max_universe) {
  check_enum_cap(t, max_universe);
  const Theory closed = kind_closure(t, kind);
  std::vector<Bits> out;
  const std::uint64_t end = std::uint64_t{1} << t.size();
  for (std::uint64_t m = 0; m < end; ++m)
    if (admissible_against(t, closed, kind, Bits{m})) out.push_back(Bits{m});
  if (maximal_only) keep_maximal(out);
  sort_sets(out);
  return out;
}

Theory negative_closure(const Theory& t) {
  std::vector<AttackPair> pairs;
  for (const AttackPair& p : t.base())
    for (Bits s : subsets_of(p.target)) pairs.push_back({p.source | s, p.target - s});
  return Theory(t.universe(), std::move(pairs));
}

Theory positive_closure(const Theory& t) {
  std::vector<AttackPair> pairs;
  for (const AttackPair& p : t.base())
    for (Bits s : subsets_of(p.source)) pairs.push_back({p.source - s, p.target | s});
  return Theory(t.universe(), std::move(pairs));
}

bool is_affirmative(const Theory& t) {
  for (const AttackPair& p : t.base())
    if (p.target.empty()) return false;
  return true;
}

bool is_local(const Theory& t) {
  // Base-level criterion: (A, B) must admit a sub-attack on ∅ or on a single
  // b in B. Pairs with B = ∅ pass through the first test by themselves.
  for (const AttackPair& p : t.base()) {
    if (t.attacks(p.source, Bits::none())) continue;
    bool split = false;
    for (int b : p.target)
      if (t.attacks(p.source, Bits::single(b))) {
        split = true;
        break;
      }
    if (!split) return false;
  }
  return true;
}

bool is_semi_local(const Theory& t) {
  for (const AttackPair& p : t.base())
    for (Bits s : subsets_of(p.target))
      if (!t.attacks(p.source | s, p.target - s) &&
          !t.attacks(p.source | (p.target - s), s))
        return false;
  return true;
}

bool is_positive(const Theory& t) { return positive_closure(t) == t; }

bool is_negative(const Theory& t) { return negative_closure(t) == t; }

bool is_normal(const Theory& t) { return is_affirmative(t) && is_local(t); }

}  // namespace coarg
