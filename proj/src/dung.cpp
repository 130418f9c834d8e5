#include "coarg/dung.hpp"

#include <algorithm>

#include "coarg/errors.hpp"

namespace coarg {

DungView::DungView(Theory t) : theory_(std::move(t)) {
  if (!is_normal(theory_))
    throw not_normal_error(
        "theory is not normal (affirmative and local); the single-argument "
        "semantics are not defined for it");
}

Bits DungView::bracket(Bits gamma) const {
  Bits out;
  for (int a = 0; a < theory_.size(); ++a)
    if (!theory_.attacks(gamma, Bits::single(a))) out = out.with(a);
  return out;
}

Bits DungView::grounded() const {
  // bracket is antitone, so its square is monotone and the iteration from
  // the empty set climbs to the least fixpoint.
  Bits cur;
  for (;;) {
    Bits next = bracket(bracket(cur));
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Bits> DungView::extensions(DungSemantics semantics, int max_universe) const {
  if (semantics == DungSemantics::grounded) return {grounded()};
  if (theory_.size() > max_universe)
    throw error("universe of " + std::to_string(theory_.size()) +
                " arguments exceeds the enumeration cap of " +
                std::to_string(max_universe));
  std::vector<Bits> out;
  const std::uint64_t end = std::uint64_t{1} << theory_.size();
  for (std::uint64_t m = 0; m < end; ++m) {
    const Bits g{m};
    switch (semantics) {
      case DungSemantics::complete:
      case DungSemantics::preferred:
        if (is_conflict_free(theory_, g) && bracket(bracket(g)) == g) out.push_back(g);
        break;
      case DungSemantics::stable:
        if (bracket(g) == g) out.push_back(g);
        break;
      case DungSemantics::grounded:
        break;
    }
  }
  if (semantics == DungSemantics::preferred) {
    std::vector<Bits> maximal;
    for (Bits g : out) {
      bool max = true;
      for (Bits q : out)
        if (g != q && g.subset_of(q)) {
          max = false;
          break;
        }
      if (max) maximal.push_back(g);
    }
    out = std::move(maximal);
  }
  sort_sets(out);
  return out;
}

CorrespondenceReport check_normal_correspondence(const DungView& view, int max_universe) {
  const Theory& t = view.theory();
  CorrespondenceReport report;

  std::vector<Bits> from_theory = stable_sets(t, max_universe);
  std::vector<Bits> from_dung = view.extensions(DungSemantics::stable, max_universe);
  for (Bits s : from_theory)
    if (std::find(from_dung.begin(), from_dung.end(), s) == from_dung.end())
      report.stable_only_theory.push_back(s);
  for (Bits s : from_dung)
    if (std::find(from_theory.begin(), from_theory.end(), s) == from_theory.end())
      report.stable_only_dung.push_back(s);

  std::vector<PStablePair> pairs = p_stable_pairs(t, max_universe);
  std::vector<PStablePair> expected;
  for (Bits g : view.extensions(DungSemantics::complete, max_universe))
    expected.push_back({g, view.bracket(g)});
  std::sort(expected.begin(), expected.end(), pstable_less);
  for (const PStablePair& p : pairs)
    if (std::find(expected.begin(), expected.end(), p) == expected.end())
      report.pstable_only_theory.push_back(p);
  for (const PStablePair& p : expected)
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end())
      report.pstable_only_dung.push_back(p);

  return report;
}

}  // namespace coarg
