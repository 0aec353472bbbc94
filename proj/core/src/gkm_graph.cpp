#include "milnor/gkm_graph.hpp"

#include <sstream>

#include "json_support.hpp"
#include "milnor/errors.hpp"

namespace milnor {

std::string to_string(Variety v) { return v == Variety::X ? "X" : "Y"; }

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::RootConic:
      return "RootConic";
    case EdgeKind::PlaneII:
      return "PlaneII";
    case EdgeKind::PlaneIII:
      return "PlaneIII";
  }
  return "?";
}

Variety parse_variety(std::string_view s) {
  if (s == "X" || s == "x") return Variety::X;
  if (s == "Y" || s == "y") return Variety::Y;
  throw InvalidArgument("variety must be X or Y, got '" + std::string(s) + "'");
}

GkmGraph::GkmGraph(int n, Variety variety) : n_(n), variety_(variety) {
  if (n < 3) throw InvalidArgument("GKM graph needs n >= 3");
  if (n > Monomial::kMaxVars) throw InvalidArgument("GKM graph supports n <= 8");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) vertices_.push_back({i, j});
  incident_.resize(vertices_.size());

  auto add = [&](std::size_t u, Vertex w, EdgeKind kind, LinearForm weight) {
    std::size_t v = index(w);
    if (v < u) return;  // recorded from the smaller endpoint
    incident_[u].push_back(edges_.size());
    incident_[v].push_back(edges_.size());
    edges_.push_back({u, v, kind, std::move(weight)});
  };
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    auto [i, j] = vertices_[u];
    // Neighbours in lexicographic order so the edge list is sorted by (u, v).
    std::vector<std::pair<Vertex, std::pair<EdgeKind, LinearForm>>> nbrs;
    if (variety == Variety::X) nbrs.push_back({{j, i}, {EdgeKind::RootConic, LinearForm::root(n, i, j)}});
    for (int k = 1; k <= n; ++k) {
      if (k == i || k == j) continue;
      nbrs.push_back({{i, k}, {EdgeKind::PlaneII, LinearForm::root(n, k, j)}});
      nbrs.push_back({{k, j}, {EdgeKind::PlaneIII, LinearForm::root(n, i, k)}});
    }
    std::sort(nbrs.begin(), nbrs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [w, kw] : nbrs) add(u, w, kw.first, kw.second);
  }

  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    Polynomial e = Polynomial::constant(n, 1);
    std::vector<LinearForm> roots;
    int sign = 1;
    for (const LinearForm& w : tangent_weights(v)) {
      e *= w.to_polynomial();
      if (!w.is_canonical()) sign = -sign;
      roots.push_back(w.canonical());
    }
    euler_.push_back(std::move(e));
    roots_.push_back(std::move(roots));
    signs_.push_back(sign);
  }
}

std::size_t GkmGraph::index(Vertex v) const {
  if (v.i < 1 || v.i > n_ || v.j < 1 || v.j > n_ || v.i == v.j)
    throw InvalidArgument("[" + v.label() + "] is not a vertex for n = " + std::to_string(n_));
  return static_cast<std::size_t>((v.i - 1) * (n_ - 1) + (v.j - 1) - (v.j > v.i ? 1 : 0));
}

std::vector<LinearForm> GkmGraph::tangent_weights(std::size_t v) const {
  std::vector<LinearForm> out;
  for (std::size_t e : incident_[v]) out.push_back(weight_at(edges_[e], v));
  return out;
}

bool GkmGraph::weights_pairwise_independent() const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    auto w = tangent_weights(v);
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b)
        if (w[a].proportional_to(w[b])) return false;
  }
  return true;
}

std::string GkmGraph::to_dot() const {
  std::ostringstream os;
  os << "graph " << to_string(variety_) << n_ << " {\n";
  for (const Vertex& v : vertices_) os << "  \"" << v.label() << "\";\n";
  for (const Edge& e : edges_) {
    os << "  \"" << vertices_[e.u].label() << "\" -- \"" << vertices_[e.v].label() << "\" [label=\""
       << to_string(e.kind) << ' ' << e.weight.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string GkmGraph::to_json() const {
  using detail::json;
  json verts = json::array();
  for (const Vertex& v : vertices_) verts.push_back({v.i, v.j});
  json edges = json::array();
  for (const Edge& e : edges_) {
    const Vertex& a = vertices_[e.u];
    const Vertex& b = vertices_[e.v];
    edges.push_back({{"u", {a.i, a.j}}, {"v", {b.i, b.j}}, {"kind", to_string(e.kind)}, {"weight", e.weight.to_string()}});
  }
  json j = {{"n", n_}, {"variety", to_string(variety_)}, {"vertices", verts}, {"edges", edges}};
  return j.dump();
}

GkmGraph build_graph(int n, Variety variety) { return GkmGraph(n, variety); }

Polynomial euler_class(const GkmGraph& g, Vertex v) { return g.euler_class(g.index(v)); }

}  // namespace milnor
