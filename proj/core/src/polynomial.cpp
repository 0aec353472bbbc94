#include "milnor/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "milnor/errors.hpp"
#include "milnor/linear_form.hpp"

namespace milnor {

namespace {

bool term_order(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Rings must agree, except that a zero-variable constant adapts to the other side.
int common_nvars(int na, bool a_const, int nb, bool b_const) {
  if (na == nb) return na;
  if (na == 0 && a_const) return nb;
  if (nb == 0 && b_const) return na;
  throw InvalidArgument("polynomials live in rings with different variable counts");
}

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw InvalidArgument("polynomial rings support 0..8 variables");
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  check_nvars(nvars);
  for (const Term& t : terms_)
    for (int k = nvars; k < Monomial::kMaxVars; ++k)
      if (t.monomial.exponent(k) != 0) throw InvalidArgument("monomial uses a variable outside the ring");
  canonicalize();
}

Polynomial Polynomial::constant(int nvars, const Integer& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  if (k < 1 || k > nvars) throw InvalidArgument("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(k - 1), 1});
  return p;
}

Polynomial Polynomial::monomial(int nvars, Monomial m, const Integer& c) {
  return Polynomial(nvars, {Term{m, c}});
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term acc = std::move(terms_[i]);
    std::size_t j = i + 1;
    for (; j < terms_.size() && terms_[j].monomial == acc.monomial; ++j) acc.coeff += terms_[j].coeff;
    if (acc.coeff != 0) terms_[out++] = std::move(acc);
    i = j;
  }
  terms_.resize(out);
}

void Polynomial::adopt_nvars(const Polynomial& o) {
  nvars_ = common_nvars(nvars_, is_constant(), o.nvars_, o.is_constant());
}

Integer Polynomial::constant_term() const { return coefficient(Monomial{}); }

Integer Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_order);
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

int Polynomial::degree_in(int k) const {
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.monomial.exponent(k - 1)));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.back().monomial.degree() == terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous_of(int d) const {
  return terms_.empty() || (is_homogeneous() && degree() == d);
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const Term& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer c = content();
  if (terms_.front().coeff < 0) c = -c;
  return divided_by(c);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  adopt_nvars(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.nvars_ = common_nvars(a.nvars_, a.is_constant(), b.nvars_, b.is_constant());
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() == 1 || b.size() == 1) {
    const Polynomial& single = a.size() == 1 ? a : b;
    const Polynomial& other = a.size() == 1 ? b : a;
    const Term& s = single.terms_.front();
    r.terms_.reserve(other.size());
    // Multiplying by a monomial preserves the order.
    for (const Term& t : other.terms_) r.terms_.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
    return r;
  }
  std::unordered_map<Monomial, Integer> acc;
  acc.reserve(a.size() * b.size());
  Integer prod;
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      mpz_mul(prod.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
      acc[x.monomial * y.monomial] += prod;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(), term_order);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_ != b.terms_) return false;
  return a.nvars_ == b.nvars_ || a.is_constant();
}

Polynomial Polynomial::divided_by(const Integer& c) const {
  if (c == 0) throw DivisionByZero("polynomial divided by zero");
  Polynomial r = *this;
  for (Term& t : r.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
      throw InvalidArgument("coefficient not divisible by integer");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Polynomial Polynomial::substitute_variable(int k, int j) const {
  if (k < 1 || k > nvars_ || j < 1 || j > nvars_) throw InvalidArgument("variable index out of range");
  if (k == j) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    unsigned ek = t.monomial.exponent(k - 1);
    Monomial m = t.monomial.with_exponent(k - 1, 0);
    m = m.with_exponent(j - 1, m.exponent(j - 1) + ek);
    out.push_back({m, t.coeff});
  }
  return Polynomial(nvars_, std::move(out));
}

Polynomial Polynomial::substitute_zero(int k) const {
  if (k < 1 || k > nvars_) throw InvalidArgument("variable index out of range");
  Polynomial r(nvars_);
  for (const Term& t : terms_)
    if (t.monomial.exponent(k - 1) == 0) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::substitute(int k, const Polynomial& value) const {
  if (k < 1 || k > nvars_) throw InvalidArgument("variable index out of range");
  std::map<unsigned, Polynomial> by_power;
  for (const Term& t : terms_) {
    unsigned e = t.monomial.exponent(k - 1);
    auto [it, inserted] = by_power.try_emplace(e, nvars_);
    it->second.terms_.push_back({t.monomial.with_exponent(k - 1, 0), t.coeff});
  }
  Polynomial result(nvars_);
  Polynomial vpow = constant(nvars_, 1);
  unsigned at = 0;
  for (auto& [e, coeff] : by_power) {
    while (at < e) {
      vpow *= value;
      ++at;
    }
    coeff.canonicalize();
    result += coeff * vpow;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InvalidArgument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (int k = 0; k < nvars_; ++k) {
      unsigned e = t.monomial.exponent(k);
      for (unsigned r = 0; r < e; ++r) v *= point[k];
    }
    sum += v;
  }
  return sum;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial permute(const Permutation& sigma, const Polynomial& p) {
  if (sigma.size() != p.nvars()) throw InvalidArgument("permutation degree differs from variable count");
  std::vector<Term> out;
  out.reserve(p.size());
  int exps[Monomial::kMaxVars];
  for (const Term& t : p.terms()) {
    for (int k = 0; k < Monomial::kMaxVars; ++k) exps[k] = 0;
    for (int k = 1; k <= p.nvars(); ++k) exps[sigma(k) - 1] = static_cast<int>(t.monomial.exponent(k - 1));
    out.push_back({Monomial::from_exponents(exps, p.nvars()), t.coeff});
  }
  return Polynomial(p.nvars(), std::move(out));
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const int nvars = p.nvars() ? p.nvars() : q.nvars();
  if (p.is_zero()) return Polynomial(nvars);
  const Term& lead = q.leading_term();
  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const Term& t : p.terms()) {
      if (!lead.monomial.divides(t.monomial) || !mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
      out.push_back({t.monomial / lead.monomial, std::move(c)});
    }
    return Polynomial(nvars, std::move(out));
  }
  std::map<Monomial, Integer, std::greater<>> rem;
  for (const Term& t : p.terms()) rem.emplace(t.monomial, t.coeff);
  std::vector<Term> quotient;
  Integer c, prod;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.monomial.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    Monomial m = it->first / lead.monomial;
    rem.erase(it);
    for (std::size_t i = 1; i < q.size(); ++i) {
      const Term& t = q.terms()[i];
      mpz_mul(prod.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
      auto [pos, inserted] = rem.try_emplace(t.monomial * m);
      pos->second -= prod;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({m, c});
  }
  return Polynomial(nvars, std::move(quotient));
}

Polynomial normalize_sign(const Polynomial& p) {
  if (!p.is_zero() && p.leading_term().coeff < 0) return -p;
  return p;
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(std::vector<long> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; }))
    throw InvalidArgument("the zero linear form is not allowed");
  if (coeffs_.size() > static_cast<std::size_t>(Monomial::kMaxVars))
    throw InvalidArgument("linear form has too many variables");
}

LinearForm LinearForm::root(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) throw InvalidArgument("root alpha_ij needs distinct i, j in 1..n");
  std::vector<long> c(n, 0);
  c[i - 1] = 1;
  c[j - 1] = -1;
  return LinearForm(std::move(c));
}

bool LinearForm::is_primitive() const {
  long g = 0;
  for (long c : coeffs_) g = std::gcd(g, c < 0 ? -c : c);
  return g == 1;
}

bool LinearForm::is_canonical() const {
  for (long c : coeffs_)
    if (c != 0) return c > 0;
  return false;
}

LinearForm LinearForm::canonical() const { return is_canonical() ? *this : -*this; }

bool LinearForm::proportional_to(const LinearForm& other) const {
  if (other.nvars() != nvars()) return false;
  // Cross-multiplied 2x2 minors all vanish.
  for (int a = 0; a < nvars(); ++a)
    for (int b = a + 1; b < nvars(); ++b)
      if (coeffs_[a] * other.coeffs_[b] != coeffs_[b] * other.coeffs_[a]) return false;
  return true;
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> terms;
  for (int k = 0; k < nvars(); ++k)
    if (coeffs_[k] != 0) terms.push_back({Monomial::variable(k), Integer(coeffs_[k])});
  return Polynomial(nvars(), std::move(terms));
}

std::string LinearForm::to_string() const { return to_polynomial().to_string(); }

LinearForm LinearForm::operator-() const {
  std::vector<long> c = coeffs_;
  for (long& x : c) x = -x;
  return LinearForm(std::move(c));
}

bool divides(const LinearForm& alpha, const Polynomial& p) {
  if (!alpha.is_primitive()) throw InvalidArgument("divisibility test needs a primitive linear form");
  if (p.nvars() != alpha.nvars() && !(p.nvars() == 0 && p.is_constant()))
    throw InvalidArgument("linear form and polynomial live in different rings");
  if (p.is_zero()) return true;
  const int n = alpha.nvars();
  int unit_var = 0;
  int support = 0;
  for (int k = 1; k <= n; ++k) {
    if (alpha.coeff(k) != 0) ++support;
    if (unit_var == 0 && (alpha.coeff(k) == 1 || alpha.coeff(k) == -1)) unit_var = k;
  }
  if (unit_var == 0) return divide_exact(p, alpha.to_polynomial()).has_value();
  if (support == 1) return p.substitute_zero(unit_var).is_zero();
  if (support == 2) {
    int other = 0;
    for (int k = 1; k <= n; ++k)
      if (k != unit_var && alpha.coeff(k) != 0) other = k;
    // a t_u + b t_o = 0 with a = +-1 gives t_u = -(b/a) t_o.
    long ratio = -alpha.coeff(other) * alpha.coeff(unit_var);
    if (ratio == 1) return p.substitute_variable(unit_var, other).is_zero();
  }
  // t_u := -(sum_{k != u} c_k t_k) / c_u, integral because c_u = +-1.
  std::vector<long> rest(n, 0);
  for (int k = 1; k <= n; ++k)
    if (k != unit_var) rest[k - 1] = -alpha.coeff(k) * alpha.coeff(unit_var);
  Polynomial value(n);
  for (int k = 1; k <= n; ++k)
    if (rest[k - 1] != 0) value += Polynomial::variable(n, k) * Integer(rest[k - 1]);
  return p.substitute(unit_var, value).is_zero();
}

}  // namespace milnor
