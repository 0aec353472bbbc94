#include "milnor/equivariant.hpp"

#include <map>
#include <mutex>
#include <set>

#include "json_support.hpp"
#include "milnor/errors.hpp"
#include "milnor/parallel.hpp"

namespace milnor {

std::shared_ptr<const GkmGraph> shared_graph(int n, Variety variety) {
  static std::mutex mu;
  static std::map<std::pair<int, Variety>, std::shared_ptr<const GkmGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, variety}];
  if (!slot) slot = std::make_shared<const GkmGraph>(n, variety);
  return slot;
}

EquivariantClass::EquivariantClass(std::shared_ptr<const GkmGraph> graph, int degree, std::vector<Polynomial> values)
    : graph_(std::move(graph)), degree_(degree), values_(std::move(values)) {
  if (!graph_) throw InvalidArgument("equivariant class without a graph");
  if (degree_ < 0) throw InvalidArgument("negative class degree");
  if (values_.size() != graph_->vertex_count())
    throw InvalidArgument("class has " + std::to_string(values_.size()) + " values for " +
                          std::to_string(graph_->vertex_count()) + " vertices");
  for (std::size_t v = 0; v < values_.size(); ++v) {
    Polynomial& p = values_[v];
    if (p.is_constant() && p.nvars() != graph_->n()) p = Polynomial::constant(graph_->n(), p.constant_term());
    if (p.nvars() != graph_->n()) throw InvalidArgument("class value lives in the wrong polynomial ring");
    if (!p.is_homogeneous_of(degree_))
      throw InvalidArgument("value at [" + graph_->vertices()[v].label() + "] is not homogeneous of degree " +
                            std::to_string(degree_));
  }
}

EquivariantClass EquivariantClass::zero(std::shared_ptr<const GkmGraph> graph, int degree) {
  std::size_t count = graph->vertex_count();
  int n = graph->n();
  return EquivariantClass(std::move(graph), degree, std::vector<Polynomial>(count, Polynomial(n)));
}

EquivariantClass EquivariantClass::constant(std::shared_ptr<const GkmGraph> graph, const Integer& c) {
  std::size_t count = graph->vertex_count();
  int n = graph->n();
  return EquivariantClass(std::move(graph), 0, std::vector<Polynomial>(count, Polynomial::constant(n, c)));
}

bool EquivariantClass::is_zero() const {
  for (const auto& p : values_)
    if (!p.is_zero()) return false;
  return true;
}

EquivariantClass EquivariantClass::on(std::shared_ptr<const GkmGraph> graph) const {
  if (graph->n() != graph_->n()) throw InvalidArgument("graphs of different degree n");
  return EquivariantClass(std::move(graph), degree_, values_);
}

std::string EquivariantClass::to_json() const {
  detail::json vals = detail::json::object();
  for (std::size_t v = 0; v < values_.size(); ++v) vals[graph_->vertices()[v].label()] = values_[v].to_string();
  detail::json j = {{"n", graph_->n()}, {"variety", to_string(graph_->variety())}, {"degree", degree_}, {"values", vals}};
  return j.dump();
}

std::string EquivariantClass::to_text() const {
  std::string out;
  for (std::size_t v = 0; v < values_.size(); ++v)
    out += "[" + graph_->vertices()[v].label() + "] " + values_[v].to_string() + "\n";
  return out;
}

bool operator==(const EquivariantClass& a, const EquivariantClass& b) {
  return a.graph_->n() == b.graph_->n() && a.graph_->variety() == b.graph_->variety() && a.degree_ == b.degree_ &&
         a.values_ == b.values_;
}

GkmCheck is_gkm(const EquivariantClass& c) {
  GkmCheck out;
  const auto& edges = c.graph().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    if (!divides(edge.weight, c.value(edge.u) - c.value(edge.v))) {
      out.ok = false;
      out.violated_edges.push_back(e);
    }
  }
  return out;
}

namespace {

void require_same_graph(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.graph().n() != b.graph().n() || a.graph().variety() != b.graph().variety())
    throw InvalidArgument("classes live on different graphs");
}

// The distinct canonical roots over all vertices and, per vertex, the
// product of the roots missing there.
struct CommonDenominator {
  std::vector<LinearForm> roots;
  std::vector<Polynomial> cofactors;
};

const CommonDenominator& common_denominator(const GkmGraph& g) {
  static std::mutex mu;
  static std::map<std::pair<int, Variety>, std::unique_ptr<CommonDenominator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{g.n(), g.variety()}];
  if (slot) return *slot;
  auto cd = std::make_unique<CommonDenominator>();
  std::set<LinearForm> all;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (const auto& r : g.canonical_roots(v)) all.insert(r);
  cd->roots.assign(all.begin(), all.end());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& here = g.canonical_roots(v);
    Polynomial cof = Polynomial::constant(g.n(), g.euler_sign(v));
    for (const auto& r : cd->roots)
      if (std::find(here.begin(), here.end(), r) == here.end()) cof *= r.to_polynomial();
    cd->cofactors.push_back(std::move(cof));
  }
  slot = std::move(cd);
  return *slot;
}

}  // namespace

Polynomial pairing(const EquivariantClass& c1, const EquivariantClass& c2, int jobs) {
  require_same_graph(c1, c2);
  const GkmGraph& g = c1.graph();
  const CommonDenominator& cd = common_denominator(g);
  std::vector<Polynomial> parts(g.vertex_count(), Polynomial(g.n()));
  parallel_for(g.vertex_count(), jobs, [&](std::size_t v) {
    if (c1.value(v).is_zero() || c2.value(v).is_zero()) return;
    parts[v] = c1.value(v) * c2.value(v) * cd.cofactors[v];
  });
  Polynomial num(g.n());
  for (const auto& p : parts) num += p;
  for (const auto& r : cd.roots) {
    if (num.is_zero()) break;
    auto q = divide_exact(num, r.to_polynomial());
    if (!q) {
      throw IntegralityViolation("localization sum on " + to_string(g.variety()) + " (n=" + std::to_string(g.n()) +
                                 ") has a pole along " + r.to_string());
    }
    num = std::move(*q);
  }
  return num;
}

RationalFunction pairing_rational(const EquivariantClass& c1, const EquivariantClass& c2) {
  require_same_graph(c1, c2);
  const GkmGraph& g = c1.graph();
  RationalFunction sum(Polynomial(g.n()));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Polynomial p = c1.value(v) * c2.value(v);
    if (p.is_zero()) continue;
    sum += rational(p, g.euler_class(v));
  }
  return sum;
}

EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_graph(a, b);
  std::vector<Polynomial> vals;
  vals.reserve(a.values().size());
  for (std::size_t v = 0; v < a.values().size(); ++v) vals.push_back(a.value(v) * b.value(v));
  return EquivariantClass(a.graph_ptr(), a.degree() + b.degree(), std::move(vals));
}

EquivariantClass add(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_graph(a, b);
  if (a.degree() != b.degree()) throw InvalidArgument("adding classes of different degree");
  std::vector<Polynomial> vals;
  vals.reserve(a.values().size());
  for (std::size_t v = 0; v < a.values().size(); ++v) vals.push_back(a.value(v) + b.value(v));
  return EquivariantClass(a.graph_ptr(), a.degree(), std::move(vals));
}

EquivariantClass scale(const Integer& k, const EquivariantClass& c) {
  std::vector<Polynomial> vals;
  for (const auto& p : c.values()) vals.push_back(p * k);
  return EquivariantClass(c.graph_ptr(), c.degree(), std::move(vals));
}

EquivariantClass scale(const Polynomial& p, const EquivariantClass& c) {
  if (!p.is_homogeneous()) throw InvalidArgument("scaling by a non-homogeneous polynomial");
  if (p.is_zero()) return EquivariantClass::zero(c.graph_ptr(), c.degree());
  std::vector<Polynomial> vals;
  for (const auto& x : c.values()) vals.push_back(p * x);
  return EquivariantClass(c.graph_ptr(), c.degree() + p.degree(), std::move(vals));
}

EquivariantClass power(const EquivariantClass& c, int e) {
  if (e < 0) throw InvalidArgument("negative power of a class");
  EquivariantClass r = EquivariantClass::constant(c.graph_ptr(), 1);
  for (int k = 0; k < e; ++k) r = multiply(r, c);
  return r;
}

}  // namespace milnor
