#include "coarg/dlp.hpp"

#include <algorithm>
#include <map>

#include "coarg/errors.hpp"

namespace coarg {

namespace {

bool valid_atom(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

struct Token {
  enum Kind { ident, kw_not, pipe, comma, arrow, dot, eof } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blanks();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::eof, "", line, col};
    const char c = src_[pos_];
    if (c == '|') return advance(), Token{Token::pipe, "|", line, col};
    if (c == ',') return advance(), Token{Token::comma, ",", line, col};
    if (c == '.') return advance(), Token{Token::dot, ".", line, col};
    if (c == ':' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
      advance();
      advance();
      return {Token::arrow, ":-", line, col};
    }
    if (c == '(' || c == ')')
      throw non_ground_error("non-ground constructs are not supported", line, col);
    if (c >= 'A' && c <= 'Z')
      throw non_ground_error("variables are not supported", line, col);
    if (c >= 'a' && c <= 'z') {
      std::string word;
      while (pos_ < src_.size() && is_word(src_[pos_])) {
        word += src_[pos_];
        advance();
      }
      if (word == "not") return {Token::kw_not, word, line, col};
      return {Token::ident, word, line, col};
    }
    throw parse_error(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  static bool is_word(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  void skip_blanks() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { shift(); }

  Program parse() {
    while (tok_.kind != Token::eof) rule();
    return Program(std::move(atoms_), std::move(rules_));
  }

 private:
  void shift() { tok_ = lexer_.next(); }

  int atom_index(const Token& t) {
    auto it = index_.find(t.text);
    if (it != index_.end()) return it->second;
    if (atoms_.size() >= 64)
      throw parse_error("too many atoms (at most 64)", t.line, t.column);
    int id = static_cast<int>(atoms_.size());
    index_.emplace(t.text, id);
    atoms_.push_back(t.text);
    return id;
  }

  Bits expect_atom() {
    if (tok_.kind != Token::ident)
      throw parse_error("expected atom, found '" + tok_.text + "'", tok_.line, tok_.column);
    Bits b = Bits::single(atom_index(tok_));
    shift();
    return b;
  }

  void rule() {
    Rule r;
    if (tok_.kind != Token::arrow) {
      r.head = expect_atom();
      while (tok_.kind == Token::pipe) {
        shift();
        r.head = r.head | expect_atom();
      }
    }
    if (tok_.kind == Token::arrow) {
      shift();
      for (;;) {
        if (tok_.kind == Token::kw_not) {
          shift();
          r.neg_body = r.neg_body | expect_atom();
        } else {
          r.pos_body = r.pos_body | expect_atom();
        }
        if (tok_.kind != Token::comma) break;
        shift();
      }
    }
    if (tok_.kind != Token::dot)
      throw parse_error("expected '.', found '" +
                            (tok_.kind == Token::eof ? "end of input" : tok_.text) + "'",
                        tok_.line, tok_.column);
    shift();
    rules_.push_back(r);
  }

  Lexer lexer_;
  Token tok_;
  std::vector<std::string> atoms_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<Rule> rules_;
};

// Keeps `clauses` subsumption-minimal; returns true if the set changed.
bool insert_clause(std::vector<Bits>& clauses, Bits c) {
  for (Bits q : clauses)
    if (q.subset_of(c)) return false;
  std::erase_if(clauses, [&](Bits q) { return c.subset_of(q); });
  clauses.push_back(c);
  return true;
}

// Hyperresolution of one rule against the current clause set: every body
// atom consumed by a clause containing it, side literals carried over.
void resolve_rule(const std::vector<Bits>& snapshot, const std::vector<int>& body,
                  std::size_t depth, Bits partial, std::vector<Bits>& fresh) {
  if (depth == body.size()) {
    fresh.push_back(partial);
    return;
  }
  const int atom = body[depth];
  for (Bits clause : snapshot)
    if (clause.contains(atom))
      resolve_rule(snapshot, body, depth + 1, partial | clause.without(atom), fresh);
}

}  // namespace

Program::Program(std::vector<std::string> atoms, std::vector<Rule> rules)
    : atoms_(std::move(atoms)), rules_(std::move(rules)) {
  if (atoms_.size() > 64)
    throw error("too many atoms: " + std::to_string(atoms_.size()) + " (at most 64)");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!valid_atom(atoms_[i])) throw error("invalid atom name '" + atoms_[i] + "'");
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i] == atoms_[j]) throw error("duplicate atom '" + atoms_[i] + "'");
  }
  const Bits full = all();
  for (const Rule& r : rules_)
    if (!r.head.subset_of(full) || !r.pos_body.subset_of(full) ||
        !r.neg_body.subset_of(full))
      throw error("rule mentions atoms outside the program's atom list");
}

int Program::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return static_cast<int>(i);
  return -1;
}

Bits Program::atom_set(std::span<const std::string> names) const {
  Bits out;
  for (const std::string& name : names) {
    int i = index_of(name);
    if (i < 0) throw error("unknown atom '" + name + "'");
    out = out.with(i);
  }
  return out;
}

std::vector<std::string> Program::names_of(Bits set) const {
  std::vector<std::string> out;
  for (int i : set) out.push_back(atoms_.at(i));
  return out;
}

Program parse_program(std::string_view text) { return Parser(text).parse(); }

std::vector<Rule> reduct(const Program& p, Bits assumptions) {
  std::vector<Rule> out;
  for (const Rule& r : p.rules())
    if (r.neg_body.subset_of(assumptions))
      out.push_back({r.head, r.pos_body, Bits::none()});
  return out;
}

std::vector<Bits> derive_clauses(const Program& p, Bits assumptions) {
  const std::vector<Rule> rules = reduct(p, assumptions);
  std::vector<Bits> clauses;
  for (const Rule& r : rules)
    if (r.pos_body.empty()) insert_clause(clauses, r.head);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Bits> snapshot = clauses;
    std::vector<Bits> fresh;
    for (const Rule& r : rules) {
      if (r.pos_body.empty()) continue;
      std::vector<int> body = r.pos_body.members();
      resolve_rule(r, snapshot, body, 0, r.head, fresh);
    }
    for (Bits c : fresh)
      if (insert_clause(clauses, c)) grew = true;
  }
  std::sort(clauses.begin(), clauses.end(), set_less);
  return clauses;
}

bool derives(const Program& p, Bits assumptions, Bits disjunction) {
  for (Bits clause : derive_clauses(p, assumptions))
    if (clause.subset_of(disjunction)) return true;
  return false;
}

static std::vector<std::string> negated_names(const Program& p) {
  std::vector<std::string> names;
  names.reserve(p.atoms().size());
  for (const std::string& a : p.atoms()) names.push_back("~" + a);
  return names;
}

Theory compile(const Program& p, int max_atoms) {
  if (p.atom_count() > max_atoms)
    throw error("program has " + std::to_string(p.atom_count()) +
                " atoms, above the compilation cap of " + std::to_string(max_atoms));
  std::vector<AttackPair> pairs;
  const std::uint64_t end = std::uint64_t{1} << p.atom_count();
  for (std::uint64_t f = 0; f < end; ++f)
    for (Bits clause : derive_clauses(p, Bits{f}))
      pairs.push_back({Bits{f}, clause});
  return Theory(negated_names(p), std::move(pairs));
}

LazyTheory::LazyTheory(Program p) : program_(std::move(p)) {}

std::vector<std::string> LazyTheory::universe() const { return negated_names(program_); }

bool LazyTheory::attacks(Bits gamma, Bits delta) const {
  return derives(program_, gamma, delta);
}

std::vector<Bits> LazyTheory::stable_sets(int max_universe) const {
  if (program_.atom_count() > max_universe)
    throw error("universe of " + std::to_string(program_.atom_count()) +
                " arguments exceeds the enumeration cap of " +
                std::to_string(max_universe));
  std::vector<Bits> out;
  const std::uint64_t end = std::uint64_t{1} << program_.atom_count();
  for (std::uint64_t m = 0; m < end; ++m) {
    const Bits gamma{m};
    const std::vector<Bits> clauses = derive_clauses(program_, gamma);
    Bits fix;
    for (int a = 0; a < program_.atom_count(); ++a) {
      bool attacked = false;
      for (Bits clause : clauses)
        if (clause.subset_of(gamma.with(a))) {
          attacked = true;
          break;
        }
      if (!attacked) fix = fix.with(a);
    }
    if (fix == gamma) out.push_back(gamma);
  }
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

}  // namespace coarg
