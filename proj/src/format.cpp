#include "lpalg/format.hpp"

#include <cctype>
#include <sstream>

namespace lpalg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarNames& names) : s_(text), names_(names) {}

  RationalFn run() {
    RationalFn v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFn expr() {
    RationalFn acc = term();
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RationalFn term() {
    RationalFn acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        RationalFn d = factor();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFn factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RationalFn base = atom();
    if (accept('^')) {
      int e = exponent();
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  int exponent() {
    bool paren = accept('(');
    bool neg = accept('-');
    if (!neg) accept('+');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  RationalFn atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFn v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFn::constant(names_.size(), Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return RationalFn::variable(names_.size(), i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

std::string power_factors(const Exponents& e, const VarNames& names, int* count = nullptr) {
  std::string out;
  int k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
    ++k;
  }
  if (count) *count = k;
  return out;
}

std::string body(const LaurentPoly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono = power_factors(e, names);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  std::size_t i = 1;
  while (i < name.size() && (std::isalnum(static_cast<unsigned char>(name[i])) || name[i] == '_')) ++i;
  while (i < name.size() && name[i] == '\'') ++i;
  return i == name.size();
}

RationalFn parse_rational(std::string_view text, const VarNames& names) {
  return Parser(text, names).run();
}

LaurentPoly parse_laurent(std::string_view text, const VarNames& names) {
  RationalFn f = parse_rational(text, names);
  auto p = f.as_laurent();
  if (!p) throw ParseError("\"" + std::string(text) + "\" is not a Laurent polynomial");
  return *p;
}

std::string to_string(const LaurentPoly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  Exponents d = p.min_exponents();
  bool laurent = false;
  for (int& v : d) {
    v = v < 0 ? -v : 0;
    laurent = laurent || v > 0;
  }
  if (!laurent) return body(p, names);
  LaurentPoly num = p.shifted(d);
  int factors = 0;
  std::string den = power_factors(d, names, &factors);
  std::string n = body(num, names);
  if (num.size() > 1) n = "(" + n + ")";
  if (factors > 1) den = "(" + den + ")";
  return n + "/" + den;
}

std::string to_string(const LaurentMonomial& m, const VarNames& names) {
  return to_string(LaurentPoly::monomial(m), names);
}

std::string to_string(const RationalFn& f, const VarNames& names) {
  if (auto p = f.as_laurent()) return to_string(*p, names);
  std::string n = body(f.num(), names);
  if (f.num().size() > 1) n = "(" + n + ")";
  return n + "/(" + body(f.den(), names) + ")";
}

}  // namespace lpalg
