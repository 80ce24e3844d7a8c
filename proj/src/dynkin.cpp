#include "severi/dynkin.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace severi {

SimpleGraph::SimpleGraph(std::size_t vertices,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : edges_(std::move(edges)), adjacency_(vertices) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges_) {
    if (u >= vertices || v >= vertices)
      throw InvalidArgument("edge endpoint out of range");
    if (u == v)
      throw InvalidArgument("loops are not allowed");
    if (!seen.insert(std::minmax(u, v)).second)
      throw InvalidArgument("repeated edge");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::dynkin(const AdeType& t) {
  const auto n = static_cast<std::size_t>(t.index());
  if (t.family() == AdeFamily::A)
    return path(n);
  // Chain 0 .. n-2 plus vertex n-1 hanging off vertex 1 (D) or 2 (E).
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 2 < n; ++i)
    e.emplace_back(i, i + 1);
  e.emplace_back(t.family() == AdeFamily::D ? 1 : 2, n - 1);
  return SimpleGraph(n, std::move(e));
}

bool SimpleGraph::is_forest() const {
  // A graph is a forest iff |E| = |V| - #components.
  std::vector<std::size_t> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges_) {
    const auto ru = find(u), rv = find(v);
    if (ru == rv)
      return false;
    parent[ru] = rv;
  }
  return true;
}

namespace {

using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      r[i + j] += p[i] * q[j];
  return r;
}

Poly poly_add(Poly p, const Poly& q) {
  if (q.size() > p.size())
    p.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    p[i] += q[i];
  return p;
}

} // namespace

std::vector<BigInt> independence_polynomial(const SimpleGraph& g) {
  if (!g.is_forest())
    throw InvalidArgument("independent_set_count: tree DP needs a forest");
  const std::size_t n = g.vertex_count();
  // Iterative DFS gives an elimination order where children precede parents.
  std::vector<std::size_t> order, parent(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (auto w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          stack.push_back(w);
        }
    }
  }
  // with[v]: sets in v's subtree containing v; without[v]: not containing v.
  std::vector<Poly> with(n, Poly{0, 1}), without(n, Poly{1});
  Poly total{1};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = *it;
    const Poly subtree = poly_add(with[v], without[v]);
    if (parent[v] == n) {
      total = poly_mul(total, subtree);
    } else {
      with[parent[v]] = poly_mul(with[parent[v]], without[v]);
      without[parent[v]] = poly_mul(without[parent[v]], subtree);
    }
  }
  while (total.size() > 1 && total.back() == 0)
    total.pop_back();
  return total;
}

BigInt independent_set_count(const SimpleGraph& g, std::size_t k) {
  const auto p = independence_polynomial(g);
  return k < p.size() ? p[k] : BigInt(0);
}

NhVector dynkin_nh(const AdeType& t) {
  const auto p = independence_polynomial(SimpleGraph::dynkin(t));
  std::vector<BigInt> v;
  for (int h = 0; h <= t.delta(); ++h) {
    const auto k = static_cast<std::size_t>(t.delta() - h);
    v.push_back(k < p.size() ? p[k] : BigInt(0));
  }
  return NhVector(NhKind::Local, 0, std::move(v));
}

} // namespace severi
