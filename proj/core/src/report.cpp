#include "milnor/report.hpp"

#include <set>
#include <sstream>

#include "json_support.hpp"
#include "milnor/cocycle.hpp"
#include "milnor/cycles.hpp"
#include "milnor/errors.hpp"

namespace milnor {

namespace {

Verdict make(std::string name, bool pass, std::string detail = {}) { return {std::move(name), pass, std::move(detail)}; }

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

template <class F>
Verdict guarded(const std::string& name, F body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return make(name, false, std::string("error: ") + e.what());
  }
}

ReportSection cocycle_section(int n) {
  ReportSection s{"cocycle", {}};
  if (n > 64) return s;
  CocycleReport r = verify_cocycle(CyclicAlgebraSpec(n));
  for (const auto& id : r.identities) s.verdicts.push_back(make(id.identity + " (k=" + std::to_string(id.k) + ")", id.pass));
  s.verdicts.push_back(make("diagonal entries of rho_u pairwise distinct", r.distinct_eigenvalues));

  std::vector<std::vector<std::size_t>> perms;
  for (int k = 0; k < n; ++k) perms.push_back(fixed_point_permutation(n, k));
  bool hom = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (std::size_t v = 0; v < perms[0].size(); ++v)
        if (perms[a][perms[b][v]] != perms[(a + b) % n][v]) hom = false;
  s.verdicts.push_back(make("k -> fixed-point permutation is a homomorphism Z/n -> Sym", hom));
  bool identity0 = true;
  for (std::size_t v = 0; v < perms[0].size(); ++v) identity0 = identity0 && perms[0][v] == v;
  bool order = identity0;
  for (int k = 1; k < n; ++k) {
    bool id = true;
    for (std::size_t v = 0; v < perms[k].size(); ++v) id = id && perms[k][v] == v;
    if (id) order = false;
  }
  s.verdicts.push_back(make("eta acts on fixed points with order n", order));

  for (Variety var : {Variety::X, Variety::Y}) {
    auto g = shared_graph(n, var);
    std::set<std::tuple<std::size_t, std::size_t, EdgeKind>> edges;
    for (const Edge& e : g->edges()) edges.insert({e.u, e.v, e.kind});
    bool ok = true;
    for (int k = 0; k < n; ++k)
      for (const Edge& e : g->edges()) {
        std::size_t a = perms[k][e.u], b = perms[k][e.v];
        if (!edges.count({std::min(a, b), std::max(a, b), e.kind})) ok = false;
      }
    s.verdicts.push_back(make("fixed-point permutation maps edges of " + to_string(var) + " to edges of the same kind", ok));
  }
  return s;
}

ReportSection graph_section(int n) {
  ReportSection s{"gkm graph", {}};
  auto X = shared_graph(n, Variety::X);
  auto Y = shared_graph(n, Variety::Y);
  for (const auto& g : {X, Y}) {
    std::string v = to_string(g->variety());
    s.verdicts.push_back(make(v + " has n(n-1) vertices", g->vertex_count() == static_cast<std::size_t>(n * (n - 1))));
    bool val = true, euler = true;
    for (std::size_t i = 0; i < g->vertex_count(); ++i) {
      if (static_cast<int>(g->incident_edges(i).size()) != g->dimension()) val = false;
      auto [a, b] = g->vertices()[i];
      Polynomial e = Polynomial::constant(n, 1);
      for (int t = 1; t <= n; ++t)
        if (t != a && t != b) e *= LinearForm::root(n, a, t).to_polynomial() * LinearForm::root(n, t, b).to_polynomial();
      if (g->variety() == Variety::X) e *= LinearForm::root(n, a, b).to_polynomial();
      if (!(g->euler_class(i) == e)) euler = false;
    }
    s.verdicts.push_back(make(v + " valency equals dimension " + std::to_string(g->dimension()), val));
    s.verdicts.push_back(make(v + " Euler classes equal prod alpha_is alpha_sj" +
                                  std::string(g->variety() == Variety::X ? " times alpha_ij" : ""),
                              euler));
    s.verdicts.push_back(make(v + " tangent weights pairwise non-proportional", g->weights_pairwise_independent()));
  }
  std::vector<std::tuple<std::size_t, std::size_t, EdgeKind>> xe, ye;
  for (const Edge& e : X->edges())
    if (e.kind != EdgeKind::RootConic) xe.push_back({e.u, e.v, e.kind});
  for (const Edge& e : Y->edges()) ye.push_back({e.u, e.v, e.kind});
  s.verdicts.push_back(make("Y graph is the X graph without root conics", xe == ye));
  return s;
}

ReportSection cycles_section(int n, int jobs) {
  ReportSection s{"cycles and monodromy", {}};
  const int eps = (n - 2) % 2 == 0 ? 1 : -1;
  std::vector<EquivariantClass> g;
  for (int l = 1; l <= n; ++l) g.push_back(gamma(n, l));

  bool gkm = true;
  for (const auto& c : g) gkm = gkm && is_gkm(c).ok;
  s.verdicts.push_back(make("gamma_l is a GKM class for all l", gkm));

  bool mono = true;
  for (int k = 0; k < n; ++k) {
    auto m = MonodromyElement::eta_power(n, k);
    for (int l = 1; l <= n; ++l)
      if (!(act(m, g[l - 1]) == g[m.sigma()(l) - 1])) mono = false;
  }
  s.verdicts.push_back(make("eta^k gamma_l = gamma_{eta^k(l)}", mono));

  s.verdicts.push_back(guarded("<gamma_k, gamma_l> = (-1)^{n-2} delta_kl", [&] {
    bool ok = true;
    for (int k = 0; k < n; ++k)
      for (int l = k; l < n; ++l)
        if (!(pairing(g[k], g[l], jobs) == Polynomial::constant(n, k == l ? eps : 0))) ok = false;
    return make("<gamma_k, gamma_l> = (-1)^{n-2} delta_kl", ok);
  }));

  s.verdicts.push_back(guarded("Lagrange interpolation gives (-1)^{n-2} at the n-1 nodes and agrees with the pairing", [&] {
    bool ok = true;
    RationalFunction want(Polynomial::constant(n, eps));
    for (int l = 1; l <= n; ++l) {
      RationalFunction f = lagrange_sum(n, l);
      for (int i = 1; i <= n; ++i) {
        if (i == l) continue;
        auto at = f.substitute(l, Polynomial::variable(n, i));
        if (!at || !(*at == want)) ok = false;
      }
      if (!(f == want) || !(f == pairing_rational(g[l - 1], g[l - 1]))) ok = false;
    }
    return make("Lagrange interpolation gives (-1)^{n-2} at the n-1 nodes and agrees with the pairing", ok);
  }));

  bool disjoint = true;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (k != l && !multiply(g[k], g[l]).is_zero()) disjoint = false;
  s.verdicts.push_back(make("gamma_k gamma_l = 0 for k != l", disjoint));

  auto h = lift_h(n);
  auto H = lift_H(n);
  s.verdicts.push_back(make("h' and H' are GKM classes on X", is_gkm(h).ok && is_gkm(H).ok));
  s.verdicts.push_back(
      make("h' and H' restrict to GKM classes on Y", is_gkm(restrict_to_Y(h)).ok && is_gkm(restrict_to_Y(H)).ok));
  bool hinv = true;
  for (int k = 0; k < n; ++k)
    if (!(act(MonodromyElement::eta_power(n, k), H) == H)) hinv = false;
  s.verdicts.push_back(make("eta^k H' = H'", hinv));
  bool hg = true;
  auto hy = restrict_to_Y(h);
  for (int l = 1; l <= n; ++l) {
    Polynomial t = Polynomial::variable(n, l) - Polynomial::variable(n, 1);
    auto lhs = multiply(hy, g[l - 1]);
    if (l == 1 ? !lhs.is_zero() : !(lhs == scale(t, g[l - 1]))) hg = false;
  }
  s.verdicts.push_back(make("h' gamma_l = (t_l - t_1) gamma_l", hg));
  bool pres = true;
  for (int k = 0; k < n; ++k)
    if (!is_gkm(act(MonodromyElement::eta_power(n, k), h)).ok) pres = false;
  s.verdicts.push_back(make("monodromy preserves GKM classes (h')", pres));
  // away from the middle degree the action is trivial after forgetting the
  // torus: eta^k h' - h' is the same polynomial at every vertex
  bool triv = true;
  for (int k = 0; k < n; ++k) {
    auto d = add(act(MonodromyElement::eta_power(n, k), h), scale(Integer(-1), h));
    for (const Polynomial& v : d.values())
      if (!(v == d.value(std::size_t{0}))) triv = false;
  }
  s.verdicts.push_back(make("eta^k h' - h' is a torus constant", triv));
  return s;
}

ReportSection ranks_section(int n, const ReportOptions& o, DecompositionReport& report) {
  ReportSection s{"ranks", {}};
  std::string model = " [" + to_string(o.ranks.model) + " model]";
  for (Variety var : {Variety::X, Variety::Y}) {
    std::string v = to_string(var);
    auto want = var == Variety::X ? expected_x_ranks(n) : expected_y_ranks(n);
    s.verdicts.push_back(guarded("Chow ranks of " + v + " equal " + join(want) + model, [&] {
      auto g = shared_graph(n, var);
      GradedRankTable t = chow_ranks(*g, g->dimension(), o.ranks);
      (var == Variety::X ? report.x_ranks : report.y_ranks) = t.chow_ranks;
      return make("Chow ranks of " + v + " equal " + join(want) + model, t.chow_ranks == want,
                  "computed " + join(t.chow_ranks) + ", total " + std::to_string(t.total()));
    }));
    s.verdicts.push_back(make("total Chow rank of " + v + " is n(n-1)",
                              (var == Variety::X ? report.x_ranks : report.y_ranks).size() > 0 &&
                                  [&] {
                                    long t = 0;
                                    for (long b : var == Variety::X ? report.x_ranks : report.y_ranks) t += b;
                                    return t == static_cast<long>(n) * (n - 1);
                                  }()));
  }
  s.verdicts.push_back(guarded("middle Gram of gamma and h-family is unimodular of size 2n-2", [&] {
    MiddleBasisVerdict m = middle_basis_check(n, {o.ranks.model, o.ranks.field, o.jobs});
    return make("middle Gram of gamma and h-family is unimodular of size 2n-2", m.ok(),
                "det " + m.det.get_str() + ", middle rank " + std::to_string(m.middle_rank));
  }));
  if (n <= 5) {
    s.verdicts.push_back(guarded("integer constraint matrices have unit invariant factors (degrees <= n)", [&] {
      bool ok = true;
      for (Variety var : {Variety::X, Variety::Y}) {
        auto g = shared_graph(n, var);
        for (int d = 0; d <= std::min(n, g->dimension()); ++d)
          if (!smith_check(*g, d).torsion_free()) ok = false;
      }
      return make("integer constraint matrices have unit invariant factors (degrees <= n)", ok);
    }));
  }
  return s;
}

ReportSection oracle_section(int n, int jobs) {
  ReportSection s{"ring oracle", {}};
  s.verdicts.push_back(guarded("deg(h^a H^b) by localization equals the ring presentation", [&] {
    auto h = lift_h(n);
    auto H = lift_H(n);
    auto one = EquivariantClass::constant(h.graph_ptr(), 1);
    bool ok = true;
    std::string detail;
    for (int a = 0; a <= 2 * n - 3; ++a) {
      Polynomial loc = pairing(multiply(power(h, a), power(H, 2 * n - 3 - a)), one, jobs);
      Integer want = oracle_degree(n, a, 2 * n - 3 - a);
      if (!(loc == Polynomial::constant(n, want))) ok = false;
      detail += (a ? " " : "") + want.get_str();
    }
    return make("deg(h^a H^b) by localization equals the ring presentation", ok, "degrees " + detail);
  }));
  s.verdicts.push_back(guarded("X Gram matrices by localization equal the ring presentation", [&] {
    auto loc = x_localization_gram(n, jobs);
    auto X = oracle_ring(n).X;
    bool ok = true;
    for (int m = 0; m <= X->dim; ++m) ok = ok && loc[m] == X->gram[m];
    return make("X Gram matrices by localization equal the ring presentation", ok);
  }));
  return s;
}

}  // namespace

RationalFunction lagrange_sum(int n, int ell) {
  if (ell < 1 || ell > n) throw InvalidArgument("index out of range");
  RationalFunction f{Polynomial(n)};
  for (int j = 1; j <= n; ++j) {
    if (j == ell) continue;
    Polynomial num = Polynomial::constant(n, 1), den = Polynomial::constant(n, 1);
    for (int s = 1; s <= n; ++s) {
      if (s == ell || s == j) continue;
      num *= LinearForm::root(n, ell, s).to_polynomial();
      den *= LinearForm::root(n, s, j).to_polynomial();
    }
    f += rational(num, den);
  }
  return f;
}

std::vector<long> expected_x_ranks(int n) {
  std::vector<long> b(2 * n - 2, 0);
  for (int i = 0; i <= n - 2; ++i) {
    b[i] += i + 1;
    b[2 * n - 3 - i] += i + 1;
  }
  return b;
}

std::vector<long> expected_y_ranks(int n) {
  const int dim = 2 * n - 4;
  std::vector<long> b(dim + 1, 0);
  for (int m = 0; m <= dim; ++m) b[m] = std::min(m, dim - m) + 1;
  b[n - 2] = 2 * n - 2;
  return b;
}

ReportOptions default_report_options(int n, int jobs) {
  ReportOptions o;
  o.ranks.model = default_rank_model(n);
  o.ranks.jobs = jobs;
  o.jobs = jobs;
  return o;
}

std::string ascii_diagram(int n) {
  const int dim = 2 * n - 4;
  const int width = 4;
  auto col = [&](int m) { return 10 + width * m; };
  std::ostringstream os;
  std::string axis(col(dim) + 1, ' ');
  axis.replace(0, 6, "degree");
  for (int m = 0; m <= dim; ++m) {
    std::string d = std::to_string(m);
    axis.replace(col(m), d.size(), d);
  }
  std::vector<std::string> rows;
  std::string artin(col(dim) + 1, ' ');
  artin[col(n - 2)] = '@';
  rows.push_back(artin + "   M(Spec L)(" + std::to_string(n - 2) + ")");
  for (int i = n - 3; i >= 0; --i) {
    std::string r(col(dim) + 1, ' ');
    for (int m = i; m <= i + n - 1; ++m) {
      r[col(m)] = '*';
      if (m < i + n - 1)
        for (int k = 1; k < width; ++k) r[col(m) + k] = '-';
    }
    rows.push_back(r + "   M(SB(A))" + (i ? "(" + std::to_string(i) + ")" : ""));
  }
  for (auto& r : rows) os << r << '\n';
  os << axis << '\n';
  return os.str();
}

bool DecompositionReport::ok() const { return failures().empty(); }

std::size_t DecompositionReport::check_count() const {
  std::size_t c = 0;
  for (const auto& s : sections) c += s.verdicts.size();
  return c;
}

std::vector<std::string> DecompositionReport::failures() const {
  std::vector<std::string> out;
  for (const auto& s : sections)
    for (const auto& v : s.verdicts)
      if (!v.pass) out.push_back(s.name + ": " + v.name + (v.detail.empty() ? "" : " (" + v.detail + ")"));
  return out;
}

std::string DecompositionReport::to_text() const {
  std::ostringstream os;
  os << "M(Y) for n = " << n << ": ";
  for (std::size_t i = 0; i < idempotents.size(); ++i) os << (i ? " + " : "") << idempotents[i].motive;
  os << "\n\nChow ranks over L (" << to_string(rank_model) << " model)\n";
  os << "  X: " << join(x_ranks) << "\n  Y: " << join(y_ranks) << "\n\nidempotents on Y\n";
  for (const auto& e : idempotents) {
    std::vector<long> r(e.ranks.begin(), e.ranks.end());
    os << "  " << e.label << std::string(e.label.size() < 8 ? 8 - e.label.size() : 1, ' ') << e.motive
       << std::string(e.motive.size() < 18 ? 18 - e.motive.size() : 1, ' ') << "rank " << e.total << "  " << join(r)
       << '\n';
  }
  os << '\n' << diagram << '\n';
  for (const auto& s : sections) {
    os << s.name << '\n';
    for (const auto& v : s.verdicts) {
      os << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.name;
      if (!v.detail.empty()) os << "  (" << v.detail << ")";
      os << '\n';
    }
  }
  auto f = failures();
  os << '\n' << check_count() << " checks, " << f.size() << " failed\n";
  return os.str();
}

std::string DecompositionReport::to_json() const {
  using detail::json;
  json idem = json::array();
  for (const auto& e : idempotents)
    idem.push_back({{"label", e.label}, {"motive", e.motive}, {"ranks", e.ranks}, {"total", e.total}});
  json secs = json::array();
  for (const auto& s : sections) {
    json vs = json::array();
    for (const auto& v : s.verdicts) vs.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    secs.push_back({{"name", s.name}, {"verdicts", vs}});
  }
  json j = {{"n", n},
            {"rank_model", to_string(rank_model)},
            {"x_ranks", x_ranks},
            {"y_ranks", y_ranks},
            {"idempotents", idem},
            {"diagram", diagram},
            {"sections", secs},
            {"checks", check_count()},
            {"failed", failures().size()},
            {"ok", ok()}};
  return j.dump();
}

DecompositionReport decomposition_report(int n, const ReportOptions& options) {
  if (n < 3 || n > Monomial::kMaxVars) throw InvalidArgument("n must lie in 3..8");
  DecompositionReport report;
  report.n = n;
  report.rank_model = options.ranks.model;
  report.sections.push_back(cocycle_section(n));
  report.sections.push_back(graph_section(n));
  report.sections.push_back(cycles_section(n, options.jobs));
  report.sections.push_back(ranks_section(n, options, report));
  report.sections.push_back(oracle_section(n, options.jobs));

  ReportSection manin_s{"projective bundle system on X", {}};
  ReportSection restricted_s{"restricted system on Y", {}};
  ReportSection artin_s{"Artin idempotent", {}};
  ReportSection orth_s{"orthogonality", {}};
  try {
    ManinSystem manin = manin_system(n, false);
    manin_s.verdicts = manin.verdicts;
    RestrictedSystem restricted = restricted_system(manin, options.jobs, false);
    restricted_s.verdicts = restricted.verdicts;
    ArtinIdempotent artin = artin_idempotent(n, options.jobs, false);
    artin_s.verdicts = artin.verdicts;
    orth_s.verdicts = orthogonality_check(restricted, artin, options.jobs, false);
    for (std::size_t i = 0; i < restricted.pbar.size(); ++i) {
      const auto& q = restricted.pbar[i];
      report.idempotents.push_back({"pbar_" + std::to_string(i),
                                    i == 0 ? "M(SB(A))" : "M(SB(A))(" + std::to_string(i) + ")", q.image_ranks(),
                                    q.image_rank()});
    }
    report.idempotents.push_back(
        {"p", "M(Spec L)(" + std::to_string(n - 2) + ")", artin.p.image_ranks(), artin.p.image_rank()});
  } catch (const std::exception& e) {
    manin_s.verdicts.push_back(make("correspondence calculus", false, std::string("error: ") + e.what()));
  }
  report.sections.push_back(std::move(manin_s));
  report.sections.push_back(std::move(restricted_s));
  report.sections.push_back(std::move(artin_s));
  report.sections.push_back(std::move(orth_s));

  std::vector<long> sum(2 * n - 3, 0);
  for (const auto& e : report.idempotents)
    for (std::size_t m = 0; m < e.ranks.size() && m < sum.size(); ++m) sum[m] += static_cast<long>(e.ranks[m]);
  report.sections.push_back(
      {"completeness", {make("idempotent ranks add up to the Chow ranks of Y", sum == report.y_ranks, join(sum))}});
  report.diagram = ascii_diagram(n);
  return report;
}

}  // namespace milnor
