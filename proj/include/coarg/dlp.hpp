#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coarg/bits.hpp"
#include "coarg/theory.hpp"

namespace coarg {

/// Propositional disjunctive rule: head | ... :- pos, not neg, ... An empty
/// head is a constraint.
struct Rule {
  Bits head;
  Bits pos_body;
  Bits neg_body;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A ground disjunctive logic program over a fixed, ordered atom list.
class Program {
 public:
  Program() = default;
  Program(std::vector<std::string> atoms, std::vector<Rule> rules);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<Rule>& rules() const { return rules_; }
  Bits all() const { return Bits::full(atom_count()); }

  int index_of(std::string_view name) const;
  Bits atom_set(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Bits set) const;

  friend bool operator==(const Program&, const Program&) = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<Rule> rules_;
};

/// Grammar: rule `head.` | `head :- body.` | `:- body.`; head
/// `atom (| atom)*`; body `lit (, lit)*`; lit `atom` | `not atom`; atoms
/// match [a-z][a-zA-Z0-9_]*; `%` starts a comment. Atom order is first
/// appearance. Uppercase identifiers and parenthesized terms raise
/// non_ground_error.
Program parse_program(std::string_view text);

/// Keeps exactly the rules whose negative body is covered by the assumption
/// set and strips the negative bodies.
std::vector<Rule> reduct(const Program& p, Bits assumptions);

/// Hyperresolution closure of reduct(p, assumptions): the subsumption-minimal
/// positive clauses derivable with the assumptions in force. A fired
/// constraint contributes the empty clause.
std::vector<Bits> derive_clauses(const Program& p, Bits assumptions);

/// True iff some derived clause is contained in `disjunction`; this is the
/// operational reading of "the program plus assumptions derives the
/// disjunction".
bool derives(const Program& p, Bits assumptions, Bits disjunction);

inline constexpr int kMaxCompileAtoms = 12;

/// Materializes the attack relation induced by the program: argument ~a per
/// atom a, and for every assumption set F each derived clause E contributes
/// the generator (~F, ~E). The derived attacks agree with derives() on all
/// set pairs.
Theory compile(const Program& p, int max_atoms = kMaxCompileAtoms);

/// Answers the same attack relation as compile() directly through the
/// derivation engine, without materializing the base.
class LazyTheory {
 public:
  explicit LazyTheory(Program p);

  const Program& program() const { return program_; }
  std::vector<std::string> universe() const;

  bool attacks(Bits gamma, Bits delta) const;
  std::vector<Bits> stable_sets(int max_universe = 20) const;

 private:
  Program program_;
};

}  // namespace coarg
