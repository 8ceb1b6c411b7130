#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpalg/rational.hpp"

namespace lpalg {

using VarNames = std::vector<std::string>;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar: integers, declared names (letters, digits, '_', trailing primes),
// + - * / ^, parentheses. Exponents are integers and may be negative.
RationalFn parse_rational(std::string_view text, const VarNames& names);
// As parse_rational, but the value must lie in Z[x^{+-1}].
LaurentPoly parse_laurent(std::string_view text, const VarNames& names);

// Terms are printed in decreasing monomial order. Negative exponents are
// gathered into a monomial denominator: "(b + 1)/(a*c)".
std::string to_string(const LaurentPoly& p, const VarNames& names);
std::string to_string(const LaurentMonomial& m, const VarNames& names);
std::string to_string(const RationalFn& f, const VarNames& names);

bool is_valid_name(std::string_view name);

}  // namespace lpalg
