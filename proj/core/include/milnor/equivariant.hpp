#pragma once

#include <memory>
#include <string>
#include <vector>

#include "milnor/gkm_graph.hpp"
#include "milnor/rational_function.hpp"

namespace milnor {

// Shared immutable graph for (n, variety), built once per process.
std::shared_ptr<const GkmGraph> shared_graph(int n, Variety variety);

// A homogeneous polynomial of a fixed degree at every vertex of a graph.
class EquivariantClass {
 public:
  // Throws InvalidArgument if the value count differs from the vertex count,
  // or a value is not homogeneous of `degree`, or lives in the wrong ring.
  EquivariantClass(std::shared_ptr<const GkmGraph> graph, int degree, std::vector<Polynomial> values);

  static EquivariantClass zero(std::shared_ptr<const GkmGraph> graph, int degree);
  static EquivariantClass constant(std::shared_ptr<const GkmGraph> graph, const Integer& c);

  const GkmGraph& graph() const { return *graph_; }
  const std::shared_ptr<const GkmGraph>& graph_ptr() const { return graph_; }
  int degree() const { return degree_; }
  const std::vector<Polynomial>& values() const { return values_; }
  const Polynomial& value(std::size_t v) const { return values_[v]; }
  const Polynomial& value(Vertex v) const { return values_[graph_->index(v)]; }
  bool is_zero() const;

  // Same values read on the graph of the other variety (same n).
  EquivariantClass on(std::shared_ptr<const GkmGraph> graph) const;

  // {"n":..,"variety":..,"degree":..,"values":{"12":"t1 - t2",..}}
  std::string to_json() const;
  std::string to_text() const;

  friend bool operator==(const EquivariantClass& a, const EquivariantClass& b);

 private:
  std::shared_ptr<const GkmGraph> graph_;
  int degree_;
  std::vector<Polynomial> values_;
};

struct GkmCheck {
  bool ok = true;
  std::vector<std::size_t> violated_edges;  // indices into graph().edges()
};

GkmCheck is_gkm(const EquivariantClass& c);

// Localization pairing sum_v c1(v) c2(v) / e(v), over the common denominator
// of all vertex Euler classes. Throws InvalidArgument on mismatched graphs and
// IntegralityViolation if the sum is not a polynomial.
Polynomial pairing(const EquivariantClass& c1, const EquivariantClass& c2, int jobs = 1);
// The same sum accumulated term by term as reduced rational functions.
RationalFunction pairing_rational(const EquivariantClass& c1, const EquivariantClass& c2);

EquivariantClass multiply(const EquivariantClass& a, const EquivariantClass& b);
EquivariantClass add(const EquivariantClass& a, const EquivariantClass& b);
EquivariantClass scale(const Integer& k, const EquivariantClass& c);
// Multiplication by a homogeneous polynomial (an equivariant constant).
EquivariantClass scale(const Polynomial& p, const EquivariantClass& c);
EquivariantClass power(const EquivariantClass& c, int e);

}  // namespace milnor
