#include "milnor/cycles.hpp"

#include "milnor/errors.hpp"

namespace milnor {

MonodromyElement MonodromyElement::eta_power(int n, long k) {
  long r = ((k % n) + n) % n;
  return {Permutation::cycle(n).power(r), static_cast<int>(r)};
}

MonodromyElement::MonodromyElement(Permutation sigma) : sigma_(std::move(sigma)), exponent_(-1) {
  int n = sigma_.size();
  if (n < 1) throw InvalidArgument("empty permutation");
  // eta^k sends 1 to 1 + k.
  int k = sigma_(1) - 1;
  if (!(Permutation::cycle(n).power(k) == sigma_))
    throw InvalidArgument(sigma_.to_string() + " is not a power of the cycle (1 2 ... n)");
  exponent_ = k;
}

MonodromyElement operator*(const MonodromyElement& a, const MonodromyElement& b) {
  if (a.n() != b.n()) throw InvalidArgument("monodromy elements of different degree");
  return MonodromyElement::eta_power(a.n(), a.exponent_ + b.exponent_);
}

EquivariantClass gamma(int n, int ell) {
  auto g = shared_graph(n, Variety::Y);
  if (ell < 1 || ell > n) throw InvalidArgument("gamma index must lie in 1.." + std::to_string(n));
  std::vector<Polynomial> vals(g->vertex_count(), Polynomial(n));
  for (int j = 1; j <= n; ++j) {
    if (j == ell) continue;
    Polynomial p = Polynomial::constant(n, 1);
    for (int s = 1; s <= n; ++s)
      if (s != ell && s != j) p *= LinearForm::root(n, ell, s).to_polynomial();
    vals[g->index({ell, j})] = std::move(p);
  }
  return EquivariantClass(g, n - 2, std::move(vals));
}

EquivariantClass lift_h(int n) {
  auto g = shared_graph(n, Variety::X);
  std::vector<Polynomial> vals;
  for (const Vertex& v : g->vertices())
    vals.push_back(Polynomial::variable(n, v.i) - Polynomial::variable(n, 1));
  return EquivariantClass(g, 1, std::move(vals));
}

EquivariantClass lift_H(int n) {
  auto g = shared_graph(n, Variety::X);
  std::vector<Polynomial> vals;
  for (const Vertex& v : g->vertices()) vals.push_back(LinearForm::root(n, v.i, v.j).to_polynomial());
  return EquivariantClass(g, 1, std::move(vals));
}

EquivariantClass restrict_to_Y(const EquivariantClass& c) {
  if (c.graph().variety() == Variety::Y) return c;
  return c.on(shared_graph(c.graph().n(), Variety::Y));
}

EquivariantClass act(const MonodromyElement& m, const EquivariantClass& c) {
  const GkmGraph& g = c.graph();
  if (m.n() != g.n()) throw InvalidArgument("monodromy element and class have different n");
  const Permutation& s = m.sigma();
  Permutation inv = s.inverse();
  std::vector<Polynomial> vals;
  vals.reserve(g.vertex_count());
  for (const Vertex& v : g.vertices()) vals.push_back(permute(s, c.value(Vertex{inv(v.i), inv(v.j)})));
  return EquivariantClass(c.graph_ptr(), c.degree(), std::move(vals));
}

}  // namespace milnor
