#pragma once

#include <string>
#include <string_view>

#include "coarg/theory.hpp"

namespace coarg {

/// Theory text format: a header line `args: a b c` fixing the universe and
/// its order, then one attack per line, `A1 A2 -> B1 B2` with
/// whitespace-separated names; either side may be empty. `#` starts a
/// comment. parse(print(t)) round-trips byte-stable for normalized theories.
Theory parse_theory(std::string_view text);
std::string print_theory(const Theory& t);

}  // namespace coarg
