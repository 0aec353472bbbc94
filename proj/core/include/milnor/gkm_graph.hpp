#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/linear_form.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

enum class Variety { X, Y };
enum class EdgeKind { RootConic, PlaneII, PlaneIII };

std::string to_string(Variety v);
std::string to_string(EdgeKind k);
// Accepts "X" or "Y"; throws InvalidArgument otherwise.
Variety parse_variety(std::string_view s);

// Fixed point [ij], 1-based, i != j.
struct Vertex {
  int i = 0;
  int j = 0;

  std::string label() const { return std::to_string(i) + std::to_string(j); }
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t u;  // vertex index, u < v
  std::size_t v;
  EdgeKind kind;
  LinearForm weight;  // at u; the weight at v is its negative
};

class GkmGraph {
 public:
  // Throws InvalidArgument if n < 3 or n > 8.
  GkmGraph(int n, Variety variety);

  int n() const { return n_; }
  Variety variety() const { return variety_; }
  int dimension() const { return variety_ == Variety::X ? 2 * n_ - 3 : 2 * n_ - 4; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  // Throws InvalidArgument if v is not a vertex.
  std::size_t index(Vertex v) const;
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_[v]; }
  // Weight of edge e read at endpoint v.
  LinearForm weight_at(const Edge& e, std::size_t v) const { return v == e.u ? e.weight : -e.weight; }
  std::vector<LinearForm> tangent_weights(std::size_t v) const;
  // Product of the tangent weights at v.
  const Polynomial& euler_class(std::size_t v) const { return euler_[v]; }
  // Tangent weights made canonical (first non-zero coefficient positive),
  // and the sign s with euler_class(v) = s * product of canonical roots.
  const std::vector<LinearForm>& canonical_roots(std::size_t v) const { return roots_[v]; }
  int euler_sign(std::size_t v) const { return signs_[v]; }

  // True when the weights at every vertex are pairwise non-proportional.
  bool weights_pairwise_independent() const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  int n_;
  Variety variety_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Polynomial> euler_;
  std::vector<std::vector<LinearForm>> roots_;
  std::vector<int> signs_;
};

GkmGraph build_graph(int n, Variety variety);

// Throws InvalidArgument if v is not a vertex of g.
Polynomial euler_class(const GkmGraph& g, Vertex v);

}  // namespace milnor
