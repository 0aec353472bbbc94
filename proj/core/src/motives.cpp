#include "milnor/motives.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/cycles.hpp"
#include "milnor/errors.hpp"

namespace milnor {

bool all_pass(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

void require_all(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (!v.pass) throw VerificationError(v.name + (v.detail.empty() ? "" : ": " + v.detail));
}

namespace {

std::size_t index_of(const ChowModel& model, int m, const std::string& label) {
  const auto& labels = model.labels.at(m);
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::logic_error("basis label " + label + " missing in degree " + std::to_string(m));
  return static_cast<std::size_t>(it - labels.begin());
}

std::string h_label(int a) { return a == 0 ? "1" : a == 1 ? "h" : "h^" + std::to_string(a); }

int sign_eps(int n) { return (n - 2) % 2 == 0 ? 1 : -1; }

// Collects "name" pass/fail with the failing cases listed in the detail.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
    ++count_;
  }
  Verdict verdict() const {
    Verdict v{name_, failures_.empty(), {}};
    if (failures_.empty()) {
      v.detail = std::to_string(count_) + " case" + (count_ == 1 ? "" : "s");
    } else {
      std::string d = "fails for";
      for (std::size_t k = 0; k < failures_.size() && k < 8; ++k) d += (k ? ", " : " ") + failures_[k];
      if (failures_.size() > 8) d += ", ...";
      v.detail = d;
    }
    return v;
  }

 private:
  std::string name_;
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

std::string sub(const std::string& base, int i) { return base + "_" + std::to_string(i); }

void finish(std::vector<Verdict>& verdicts, bool strict) {
  if (strict) require_all(verdicts);
}

}  // namespace

ManinSystem manin_system(int n, bool strict) {
  OracleRings rings = oracle_ring(n);
  auto X = rings.X;
  auto P = rings.P;
  std::vector<IntMatrix> pull;
  for (int m = 0; m <= P->dim; ++m) {
    IntMatrix b(X->rank(m), 1);
    b(index_of(*X, m, h_label(m)), 0) = 1;
    pull.push_back(std::move(b));
  }
  Correspondence pullback(P, X, 0, std::move(pull));
  const int top = n - 2;
  std::vector<Correspondence> g, f(top + 1, Correspondence::zero(X, P, 0));
  for (int i = 0; i <= top; ++i) g.push_back(compose(Correspondence::multiplication(X, 0, i), pullback));
  f[top] = transpose(pullback);
  for (int i = top - 1; i >= 0; --i) {
    Correspondence s = Correspondence::identity(X);
    for (int k = i + 1; k <= top; ++k) s = s - compose(g[k], f[k]);
    f[i] = compose(f[top], compose(Correspondence::multiplication(X, 0, top - i), s));
  }
  std::vector<Correspondence> p;
  for (int k = 0; k <= top; ++k) p.push_back(compose(g[top - k], f[top - k]));

  std::vector<Verdict> verdicts;
  Check fg("f_i o g_j = delta_ij Delta_P");
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      Correspondence c = compose(f[i], g[j]);
      fg.expect(i == j ? c.is_identity() : c.is_zero(), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  verdicts.push_back(fg.verdict());

  Correspondence sum = Correspondence::zero(X, X, 0);
  for (const auto& q : p) sum = sum + q;
  Check complete("sum_i p_i = Delta_X");
  complete.expect(sum.is_identity(), "the sum");
  verdicts.push_back(complete.verdict());

  Check orth("p_i o p_j = delta_ij p_i");
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top; ++j) {
      Correspondence c = compose(p[i], p[j]);
      orth.expect(i == j ? c == p[i] : c.is_zero(), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  verdicts.push_back(orth.verdict());

  Check image("image of p_i is a copy of CH(P^{n-1}) starting in degree n-2-i");
  for (int i = 0; i <= top; ++i) {
    auto r = p[i].image_ranks();
    bool ok = true;
    for (int m = 0; m <= X->dim; ++m) {
      std::size_t want = (m >= top - i && m <= top - i + n - 1) ? 1 : 0;
      if (r[m] != want) ok = false;
    }
    image.expect(ok, sub("p", i));
  }
  verdicts.push_back(image.verdict());
  finish(verdicts, strict);
  return ManinSystem{n, rings, std::move(pullback), std::move(f), std::move(g), std::move(p), std::move(verdicts)};
}

RestrictedSystem restricted_system(const ManinSystem& manin, int jobs, bool strict) {
  const int n = manin.n;
  const int top = n - 2;
  auto X = manin.rings.X;
  auto P = manin.rings.P;
  auto Y = y_model(n, jobs);
  std::vector<IntMatrix> res;
  for (int m = 0; m <= X->dim; ++m) {
    IntMatrix b(Y->rank(m), X->rank(m));
    if (m <= Y->dim) {
      for (std::size_t j = 0; j < X->reps[m].size(); ++j) {
        auto c = Y->coordinates(restrict_to_Y(X->reps[m][j]), jobs);
        for (std::size_t i = 0; i < c.size(); ++i) b(i, j) = c[i];
      }
    }
    res.push_back(std::move(b));
  }
  Correspondence restriction(X, Y, 0, std::move(res));
  Correspondence gysin = transpose(restriction);
  std::vector<Correspondence> fbar, gbar, pbar;
  for (int i = 0; i <= top; ++i) {
    fbar.push_back(compose(manin.f[i], gysin));
    gbar.push_back(compose(restriction, manin.g[i]));
  }
  for (int i = 0; i + 1 <= top; ++i) pbar.push_back(compose(gbar[i], fbar[i + 1]));
  Correspondence rest = Correspondence::identity(Y);
  for (const auto& q : pbar) rest = rest - q;

  std::vector<Verdict> verdicts;
  Check one("i_*(1) = H");
  {
    const IntMatrix& b = gysin.block(0);
    std::size_t hH = index_of(*X, 1, "H");
    bool ok = b.cols() == 1;
    for (std::size_t i = 0; ok && i < b.rows(); ++i) ok = b(i, 0) == (i == hH ? 1 : 0);
    one.expect(ok, "degree 0");
  }
  verdicts.push_back(one.verdict());

  Check proj("i_* o i^* = c_H");
  proj.expect(compose(gysin, restriction) == Correspondence::multiplication(X, 0, 1), "X");
  verdicts.push_back(proj.verdict());

  Check cg("c_H o g_j = g_{j+1}");
  for (int j = 0; j + 1 <= top; ++j)
    cg.expect(compose(Correspondence::multiplication(X, 0, 1), manin.g[j]) == manin.g[j + 1], sub("j", j));
  verdicts.push_back(cg.verdict());

  Check fg("fbar_{i+1} o gbar_j = delta_ij Delta_P");
  for (int i = 0; i + 1 <= top; ++i)
    for (int j = 0; j + 1 <= top; ++j) {
      Correspondence c = compose(fbar[i + 1], gbar[j]);
      fg.expect(i == j ? c.is_identity() : c.is_zero(), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  verdicts.push_back(fg.verdict());

  Check idem("pbar_i o pbar_j = delta_ij pbar_i");
  for (std::size_t i = 0; i < pbar.size(); ++i)
    for (std::size_t j = 0; j < pbar.size(); ++j) {
      Correspondence c = compose(pbar[i], pbar[j]);
      idem.expect(i == j ? c == pbar[i] : c.is_zero(), "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  verdicts.push_back(idem.verdict());

  Check image("image of pbar_i is a copy of CH(P^{n-1}) starting in degree i");
  for (std::size_t i = 0; i < pbar.size(); ++i) {
    auto r = pbar[i].image_ranks();
    bool ok = true;
    for (int m = 0; m <= Y->dim; ++m) {
      std::size_t want = (m >= static_cast<int>(i) && m <= static_cast<int>(i) + n - 1) ? 1 : 0;
      if (r[m] != want) ok = false;
    }
    image.expect(ok, sub("pbar", static_cast<int>(i)));
  }
  verdicts.push_back(image.verdict());

  Check remainder("pbar = Delta_Y - sum pbar_i is a non-zero idempotent of rank n in degree n-2");
  {
    auto r = rest.image_ranks();
    bool conc = true;
    for (int m = 0; m <= Y->dim; ++m)
      if (r[m] != (m == top ? static_cast<std::size_t>(n) : 0)) conc = false;
    remainder.expect(!rest.is_zero(), "non-zero");
    remainder.expect(rest.is_idempotent(), "idempotent");
    remainder.expect(conc, "rank profile");
  }
  verdicts.push_back(remainder.verdict());
  finish(verdicts, strict);
  return RestrictedSystem{n,           Y,       std::move(restriction), std::move(gysin), std::move(fbar),
                          std::move(gbar), std::move(pbar), std::move(rest), std::move(verdicts)};
}

Correspondence monodromy_action(int n, int k, int jobs) {
  auto Y = y_model(n, jobs);
  MonodromyElement s = MonodromyElement::eta_power(n, k);
  std::vector<IntMatrix> blocks;
  for (int m = 0; m <= Y->dim; ++m) {
    IntMatrix b(Y->rank(m), Y->rank(m));
    for (std::size_t j = 0; j < Y->reps[m].size(); ++j) {
      auto c = Y->coordinates(act(s, Y->reps[m][j]), jobs);
      for (std::size_t i = 0; i < c.size(); ++i) b(i, j) = c[i];
    }
    blocks.push_back(std::move(b));
  }
  return Correspondence(Y, Y, 0, std::move(blocks));
}

ArtinIdempotent artin_idempotent(int n, int jobs, bool strict) {
  auto Y = y_model(n, jobs);
  auto L = spec_l_model(n);
  const int mid = n - 2;
  const int eps = sign_eps(n);
  const IntMatrix& G = Y->gram[mid];
  std::vector<Correspondence> terms;
  for (int l = 0; l < n; ++l) {
    Correspondence t = Correspondence::zero(Y, Y, 0);
    std::vector<IntMatrix> blocks = t.blocks();
    for (std::size_t j = 0; j < Y->rank(mid); ++j) blocks[mid](l, j) = eps * G(j, l);
    terms.emplace_back(Y, Y, 0, std::move(blocks));
  }
  Correspondence p = Correspondence::zero(Y, Y, 0);
  for (const auto& t : terms) p = p + t;

  std::vector<IntMatrix> fb;
  {
    IntMatrix b(Y->rank(mid), n);
    for (int k = 0; k < n; ++k) {
      auto c = Y->coordinates(act(MonodromyElement::eta_power(n, k), gamma(n, 1)), jobs);
      for (std::size_t i = 0; i < c.size(); ++i) b(i, k) = c[i];
    }
    fb.push_back(std::move(b));
  }
  Correspondence f_L(L, Y, mid, std::move(fb));
  Correspondence g_L = Integer(eps) * transpose(f_L);
  std::vector<Correspondence> mono;
  for (int k = 0; k < n; ++k) mono.push_back(monodromy_action(n, k, jobs));

  std::vector<Verdict> verdicts;
  Check single("each eps gamma_l x gamma_l is idempotent");
  for (int l = 0; l < n; ++l) single.expect(terms[l].is_idempotent(), sub("l", l + 1));
  verdicts.push_back(single.verdict());

  Check idem("p o p = p");
  idem.expect(p.is_idempotent(), "p");
  verdicts.push_back(idem.verdict());

  Check rank("p has rank n concentrated in degree n-2");
  {
    auto r = p.image_ranks();
    bool ok = true;
    for (int m = 0; m <= Y->dim; ++m)
      if (r[m] != (m == mid ? static_cast<std::size_t>(n) : 0)) ok = false;
    rank.expect(ok, "rank profile");
  }
  verdicts.push_back(rank.verdict());

  Check descent("eps <gamma_1, sigma gamma_1> = delta_{id,sigma}");
  for (int k = 0; k < n; ++k) {
    Polynomial v = pairing(gamma(n, 1), act(MonodromyElement::eta_power(n, k), gamma(n, 1)), jobs);
    descent.expect(v == Polynomial::constant(n, k == 0 ? eps : 0), "eta^" + std::to_string(k));
  }
  verdicts.push_back(descent.verdict());

  Check circ("composition through Spec L: (eps <sigma gamma_1, tau gamma_1>) = identity");
  circ.expect(compose(g_L, f_L).is_identity(), "g o f");
  verdicts.push_back(circ.verdict());

  Check split("f o g through Spec L equals p");
  split.expect(compose(f_L, g_L) == p, "f o g");
  verdicts.push_back(split.verdict());

  Check stable("monodromy commutes with p");
  Check perm("monodromy permutes the terms eps gamma_l x gamma_l");
  Check trivial("monodromy is trivial outside degree n-2");
  Check fixed("monodromy fixes the classes h^a H^b");
  for (int k = 0; k < n; ++k) {
    const Correspondence& M = mono[k];
    std::string tag = "eta^" + std::to_string(k);
    stable.expect(compose(M, p) == compose(p, M), tag);
    Permutation eta = Permutation::cycle(n).power(k);
    for (int l = 0; l < n; ++l)
      perm.expect(compose(M, terms[l]) == compose(terms[eta(l + 1) - 1], M), tag + " l=" + std::to_string(l + 1));
    for (int m = 0; m <= Y->dim; ++m) {
      const IntMatrix& b = M.block(m);
      if (m != mid) {
        trivial.expect(b.is_identity(), tag + " degree " + std::to_string(m));
        continue;
      }
      for (std::size_t j = n; j < Y->rank(mid); ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < b.rows(); ++i) ok = ok && b(i, j) == (i == j ? 1 : 0);
        fixed.expect(ok, tag + " " + Y->labels[mid][j]);
      }
    }
  }
  verdicts.push_back(stable.verdict());
  verdicts.push_back(perm.verdict());
  verdicts.push_back(trivial.verdict());
  verdicts.push_back(fixed.verdict());
  finish(verdicts, strict);
  return ArtinIdempotent{n,         Y,          L,          std::move(p), std::move(terms),
                         std::move(f_L), std::move(g_L), std::move(mono), std::move(verdicts)};
}

namespace {

std::vector<EquivariantClass> h_family(int n) {
  auto h = restrict_to_Y(lift_h(n));
  auto H = restrict_to_Y(lift_H(n));
  std::vector<EquivariantClass> out;
  for (int i = 0; i <= n - 3; ++i) out.push_back(multiply(power(h, i + 1), power(H, n - 3 - i)));
  return out;
}

Integer integer_pairing(const EquivariantClass& a, const EquivariantClass& b, int jobs) {
  Polynomial p = pairing(a, b, jobs);
  if (!p.is_constant()) throw std::logic_error("complementary-degree pairing is not a constant");
  return p.constant_term();
}

}  // namespace

IntMatrix h_family_gram(int n, int jobs) {
  auto fam = h_family(n);
  IntMatrix g(fam.size(), fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i; j < fam.size(); ++j) g(i, j) = g(j, i) = integer_pairing(fam[i], fam[j], jobs);
  return g;
}

IntMatrix cross_gram(int n, int jobs) {
  auto fam = h_family(n);
  IntMatrix g(n, fam.size());
  for (int l = 1; l <= n; ++l)
    for (std::size_t j = 0; j < fam.size(); ++j) g(l - 1, j) = integer_pairing(gamma(n, l), fam[j], jobs);
  return g;
}

std::vector<Verdict> orthogonality_check(const RestrictedSystem& restricted, const ArtinIdempotent& artin, int jobs,
                                         bool strict) {
  const int n = restricted.n;
  const auto& Y = restricted.Y;
  std::vector<Verdict> verdicts;

  Check orth("p o pbar_j = pbar_j o p = 0");
  for (std::size_t j = 0; j < restricted.pbar.size(); ++j) {
    orth.expect(compose(artin.p, restricted.pbar[j]).is_zero(), "p o " + sub("pbar", static_cast<int>(j)));
    orth.expect(compose(restricted.pbar[j], artin.p).is_zero(), sub("pbar", static_cast<int>(j)) + " o p");
  }
  verdicts.push_back(orth.verdict());

  Correspondence sum = artin.p;
  for (const auto& q : restricted.pbar) sum = sum + q;
  Check complete("p + sum_j pbar_j = Delta_Y");
  complete.expect(sum.is_identity(), "the sum");
  verdicts.push_back(complete.verdict());

  Check same("p = pbar over L, equal ranks");
  same.expect(artin.p == restricted.rest, "p - pbar");
  same.expect(artin.p.image_ranks() == restricted.rest.image_ranks(), "rank profiles");
  verdicts.push_back(same.verdict());

  IntMatrix hg = h_family_gram(n, jobs);
  const std::size_t r = hg.rows();
  Check delta("h-family Gram equals the anti-diagonal delta_{i+i', n-3}");
  Check tri("h-family Gram is unit anti-triangular");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + hg(i, j).get_str();
      delta.expect(hg(i, j) == (i + j == r - 1 ? 1 : 0), at);
      if (i + j >= r - 1) tri.expect(hg(i, j) == (i + j == r - 1 ? 1 : 0), at);
    }
  verdicts.push_back(delta.verdict());
  verdicts.push_back(tri.verdict());

  Check cross("cross block <gamma_l, h^{i+1} H^j> vanishes");
  IntMatrix cg = cross_gram(n, jobs);
  cross.expect(cg.is_zero(), "cross block");
  verdicts.push_back(cross.verdict());

  Check hx("<gamma_l, h x> = 0 for every x in CH^{n-3}(Y)");
  auto h = restrict_to_Y(lift_h(n));
  for (const auto& x : Y->reps[n - 3]) {
    EquivariantClass hx_class = multiply(h, x);
    for (int l = 1; l <= n; ++l)
      hx.expect(integer_pairing(gamma(n, l), hx_class, jobs) == 0, "l=" + std::to_string(l));
  }
  verdicts.push_back(hx.verdict());
  finish(verdicts, strict);
  return verdicts;
}

}  // namespace milnor
