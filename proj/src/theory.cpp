#include "coarg/theory.hpp"

#include <algorithm>

#include "coarg/errors.hpp"

namespace coarg {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto word = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '~';
  };
  if (name[0] >= '0' && name[0] <= '9') return false;
  return std::all_of(name.begin(), name.end(), word);
}

// Componentwise subset: everything (a, b) generates, (p) generates too.
bool dominates(const AttackPair& a, const AttackPair& p) {
  return a.source.subset_of(p.source) && a.target.subset_of(p.target);
}

// Keeps `acc` an antichain under domination. Returns false if p is redundant.
bool insert_minimal(std::vector<AttackPair>& acc, const AttackPair& p) {
  for (const AttackPair& q : acc)
    if (dominates(q, p)) return false;
  std::erase_if(acc, [&](const AttackPair& q) { return dominates(p, q); });
  acc.push_back(p);
  return true;
}

}  // namespace

bool pair_less(const AttackPair& a, const AttackPair& b) {
  if (a.source != b.source) return set_less(a.source, b.source);
  return set_less(a.target, b.target);
}

std::vector<AttackPair> normalize(std::vector<AttackPair> pairs) {
  std::vector<AttackPair> acc;
  acc.reserve(pairs.size());
  for (const AttackPair& p : pairs) insert_minimal(acc, p);
  std::sort(acc.begin(), acc.end(), pair_less);
  return acc;
}

Theory::Theory(std::vector<std::string> universe, std::vector<AttackPair> generators)
    : universe_(std::move(universe)) {
  if (universe_.size() > 64)
    throw error("universe too large: " + std::to_string(universe_.size()) +
                " arguments (at most 64 are representable)");
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!valid_name(universe_[i]))
      throw error("invalid argument name '" + universe_[i] + "'");
    for (std::size_t j = i + 1; j < universe_.size(); ++j)
      if (universe_[i] == universe_[j])
        throw error("duplicate argument name '" + universe_[i] + "'");
  }
  const Bits full = all();
  for (const AttackPair& p : generators)
    if (!p.source.subset_of(full) || !p.target.subset_of(full))
      throw error("attack pair mentions arguments outside the universe");
  base_ = normalize(std::move(generators));
}

int Theory::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (universe_[i] == name) return static_cast<int>(i);
  return -1;
}

Bits Theory::set_of(std::span<const std::string> names) const {
  Bits out;
  for (const std::string& name : names) {
    int i = index_of(name);
    if (i < 0) throw error("unknown argument '" + name + "'");
    out = out.with(i);
  }
  return out;
}

std::vector<std::string> Theory::names_of(Bits set) const {
  std::vector<std::string> out;
  for (int i : set) out.push_back(universe_.at(i));
  return out;
}

bool Theory::attacks(Bits gamma, Bits delta) const {
  for (const AttackPair& p : base_)
    if (p.source.subset_of(gamma) && p.target.subset_of(delta)) return true;
  return false;
}

}  // namespace coarg
