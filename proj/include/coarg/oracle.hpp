#pragma once

#include <random>
#include <vector>

#include "coarg/dlp.hpp"

namespace coarg::oracle {

/// Truth-table entailment: every interpretation over `atom_count` atoms that
/// satisfies all (positive) rules satisfies the disjunction. The empty
/// disjunction is falsum.
bool entails(const std::vector<Rule>& positive_rules, int atom_count, Bits disjunction);

/// Gelfond-Lifschitz reduct w.r.t. a candidate model: drop rules whose
/// negative body meets the model, strip the rest.
std::vector<Rule> gl_reduct(const Program& p, Bits interpretation);

inline constexpr int kMaxOracleAtoms = 12;

/// All interpretations that are minimal models of their own GL reduct,
/// minimality checked by enumerating proper subsets.
std::vector<Bits> stable_models(const Program& p, int max_atoms = kMaxOracleAtoms);

/// Mismatches of the bijection C -> {~a | a not in C} between the stable
/// models of a program and the stable sets of its compiled theory.
struct Theorem1Report {
  std::vector<Bits> models_without_set;  // stable models whose image is not a stable set
  std::vector<Bits> sets_without_model;  // stable sets not hit by any model
  bool pass() const { return models_without_set.empty() && sets_without_model.empty(); }
};

Theorem1Report check_theorem1(const Program& p, int max_atoms = kMaxOracleAtoms);

/// Seeded random program: uniform rule count up to max_rules, uniform
/// literal placement. May produce disjunctive heads and constraints.
Program random_program(std::mt19937_64& rng, int max_atoms = 5, int max_rules = 6);

/// Seeded random normal program: every head is a single atom, no constraints.
Program random_normal_program(std::mt19937_64& rng, int max_atoms = 5, int max_rules = 6);

}  // namespace coarg::oracle
