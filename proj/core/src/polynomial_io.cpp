#include <cctype>
#include <sstream>

#include "json_support.hpp"
#include "milnor/errors.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

namespace {

void write_monomial(std::ostream& os, Monomial m, int nvars) {
  bool first = true;
  for (int k = 0; k < nvars; ++k) {
    unsigned e = m.exponent(k);
    if (e == 0) continue;
    if (!first) os << '*';
    os << 't' << k + 1;
    if (e > 1) os << '^' << e;
    first = false;
  }
}

class Parser {
 public:
  Parser(std::string_view text, int nvars) : s_(text), nvars_(nvars) {}

  Polynomial parse() {
    skip();
    if (at_end()) throw ParseError("empty polynomial text");
    Polynomial result = expression();
    skip();
    if (!at_end()) fail("unexpected character");
    return result;
  }

 private:
  Polynomial expression() {
    Polynomial result(nvars_);
    skip();
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) negative = get() == '-';
    for (;;) {
      Polynomial t = term();
      result += negative ? -t : t;
      skip();
      if (at_end() || (peek() != '+' && peek() != '-')) return result;
      negative = get() == '-';
    }
  }

  Polynomial term() {
    Polynomial acc = Polynomial::constant(nvars_, 1);
    for (;;) {
      acc *= factor();
      skip();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      return acc;
    }
  }

  Polynomial factor() {
    skip();
    if (at_end()) fail("unexpected end of input");
    if (peek() == '(') {
      get();
      Polynomial inner = expression();
      skip();
      if (at_end() || get() != ')') fail("expected ')'");
      return pow(inner, exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Polynomial::constant(nvars_, Integer(digits()));
    if (peek() != 't') fail("expected a coefficient or a variable t<k>");
    get();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    int k = std::stoi(digits());
    if (k < 1 || k > nvars_) fail("variable index outside the ring");
    return Polynomial::monomial(nvars_, Monomial::variable(k - 1, exponent()));
  }

  unsigned exponent() {
    skip();
    if (at_end() || peek() != '^') return 1;
    get();
    skip();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(digits()));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    bool neg = t.coeff < 0;
    Integer mag = abs(t.coeff);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (t.monomial.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      write_monomial(os, t.monomial, nvars_);
    }
    first = false;
  }
  return os.str();
}

Polynomial Polynomial::parse(std::string_view text, int nvars) { return Parser(text, nvars).parse(); }

std::string Polynomial::to_json() const { return detail::polynomial_to_json(*this).dump(); }

Polynomial Polynomial::from_json(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return detail::polynomial_from_json(j);
}

namespace detail {

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const Term& t : p.terms()) {
    json exps = json::array();
    for (int k = 0; k < p.nvars(); ++k) exps.push_back(t.monomial.exponent(k));
    terms.push_back({{"exp", exps}, {"coeff", t.coeff.get_str()}});
  }
  return {{"n", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      std::vector<int> exps = t.at("exp").get<std::vector<int>>();
      if (static_cast<int>(exps.size()) != n) throw ParseError("exponent vector length differs from n");
      Integer c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw ParseError("bad integer coefficient");
      terms.push_back({Monomial::from_exponents(exps.data(), n), c});
    }
    return Polynomial(n, std::move(terms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace detail

}  // namespace milnor
