#pragma once

// Independent vertex sets of Dynkin diagrams. For an ADE germ, choosing
// delta - h pairwise disjoint vanishing cycles is choosing delta - h
// pairwise non-adjacent vertices of its diagram.

#include "severi/ade.hpp"
#include "severi/genus_transform.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace severi {

class SimpleGraph {
public:
  // Throws InvalidArgument on loops, repeated edges, or out-of-range ends.
  SimpleGraph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  static SimpleGraph path(std::size_t n);
  // A_n: path; D_n: path of n-1 with an extra leaf on the second vertex;
  // E_n: path of n-1 with an extra leaf on the third vertex.
  static SimpleGraph dynkin(const AdeType& t);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_.at(v); }
  bool is_forest() const;

private:
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Independence polynomial coefficients i_0 .. i_m (i_k = number of
// k-element independent sets), by tree DP. Requires a forest.
std::vector<BigInt> independence_polynomial(const SimpleGraph& g);

BigInt independent_set_count(const SimpleGraph& g, std::size_t k);

// n_h := number of independent (delta - h)-sets of the diagram.
NhVector dynkin_nh(const AdeType& t);

} // namespace severi
