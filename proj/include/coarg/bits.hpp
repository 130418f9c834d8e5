#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace coarg {

/// A finite set over a universe of at most 64 indexed elements, stored as a
/// bit mask. Used both for argument sets and for atom sets.
struct Bits {
  std::uint64_t mask = 0;

  constexpr Bits() = default;
  constexpr explicit Bits(std::uint64_t m) : mask(m) {}

  static constexpr Bits none() { return Bits{}; }
  static constexpr Bits single(int i) { return Bits{std::uint64_t{1} << i}; }
  static constexpr Bits full(int n) {
    return Bits{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr bool empty() const { return mask == 0; }
  constexpr int count() const { return std::popcount(mask); }
  constexpr bool contains(int i) const { return (mask >> i) & 1; }
  constexpr bool subset_of(Bits other) const { return (mask & ~other.mask) == 0; }
  constexpr bool intersects(Bits other) const { return (mask & other.mask) != 0; }

  constexpr Bits with(int i) const { return Bits{mask | (std::uint64_t{1} << i)}; }
  constexpr Bits without(int i) const { return Bits{mask & ~(std::uint64_t{1} << i)}; }

  friend constexpr Bits operator|(Bits a, Bits b) { return Bits{a.mask | b.mask}; }
  friend constexpr Bits operator&(Bits a, Bits b) { return Bits{a.mask & b.mask}; }
  friend constexpr Bits operator-(Bits a, Bits b) { return Bits{a.mask & ~b.mask}; }
  friend constexpr bool operator==(Bits a, Bits b) { return a.mask == b.mask; }
  friend constexpr bool operator!=(Bits a, Bits b) { return a.mask != b.mask; }

  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {mask}; }
  iterator end() const { return {0}; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i : *this) out.push_back(i);
    return out;
  }
};

/// Deterministic set order: by cardinality, then by the smallest element in
/// which the two sets differ.
constexpr bool set_less(Bits a, Bits b) {
  if (a.count() != b.count()) return a.count() < b.count();
  if (a == b) return false;
  std::uint64_t diff = a.mask ^ b.mask;
  return (a.mask >> std::countr_zero(diff)) & 1;
}

/// Enumerates every subset of `super`, the empty set first; the standard
/// s = (s - m) & m walk.
class SubsetRange {
 public:
  explicit SubsetRange(Bits super) : super_(super) {}

  struct iterator {
    std::uint64_t cur, super;
    bool done;
    Bits operator*() const { return Bits{cur}; }
    iterator& operator++() {
      cur = (cur - super) & super;
      if (cur == 0) done = true;
      return *this;
    }
    bool operator!=(const iterator& o) const { return done != o.done || cur != o.cur; }
  };
  iterator begin() const { return {0, super_.mask, false}; }
  iterator end() const { return {0, super_.mask, true}; }

 private:
  Bits super_;
};

inline SubsetRange subsets_of(Bits super) { return SubsetRange(super); }

}  // namespace coarg
