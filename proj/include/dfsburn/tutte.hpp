#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "parking.hpp"
#include "trees.hpp"

namespace dfsburn {

/// Dense integer polynomial; coefficients[i] multiplies y^i.
struct DegreePolynomial {
  std::vector<std::int64_t> coefficients;

  DegreePolynomial reversed() const {
    return {std::vector<std::int64_t>(coefficients.rbegin(), coefficients.rend())};
  }

  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto c : coefficients) s += c;
    return s;
  }

  friend bool operator==(const DegreePolynomial&, const DegreePolynomial&) = default;
};

/// Coefficients separated by single spaces, lowest degree first.
inline std::string format_polynomial(const DegreePolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.coefficients[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DegreePolynomial& p) {
  return os << '[' << format_polynomial(p) << ']';
}

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Tutte evaluation");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in Tutte evaluation");
  return r;
}

/// base^exponent with 0^0 = 1.
inline std::int64_t checked_pow(std::int64_t base, std::size_t exponent) {
  std::int64_t r = 1;
  for (std::size_t k = 0; k < exponent; ++k) r = checked_mul(r, base);
  return r;
}

inline void require_subset_budget(const Graph& g, const Budget& budget) {
  if (g.n_edges() > budget.max_edges || g.n_edges() >= 63)
    throw BudgetExceededError("edge-subset sums limited to " + std::to_string(budget.max_edges) +
                              " edges, graph has " + std::to_string(g.n_edges()));
}

/// Calls visit(components, |A|) for every edge subset A of g.
template <typename Visit>
void for_each_edge_subset(const Graph& g, Visit visit) {
  const std::size_t n = g.n_vertices();
  const auto edges = g.edges();
  std::vector<Vertex> uf(n);
  auto find = [&uf](Vertex v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    for (Vertex v = 0; v < n; ++v) uf[v] = v;
    std::size_t components = n;
    std::size_t size = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      ++size;
      const Vertex a = find(edges[k].u);
      const Vertex b = find(edges[k].v);
      if (a != b) {
        uf[a] = b;
        --components;
      }
    }
    visit(components, size);
  }
}

}  // namespace detail

/// T(G; x, y) as the literal sum over edge subsets A of
/// (x-1)^(c(A)-1) (y-1)^(c(A)+|A|-|V|), in exact integers with 0^0 = 1.
inline std::int64_t tutte_evaluate(const Graph& g, std::int64_t x, std::int64_t y, const Budget& budget = {}) {
  detail::require_subset_budget(g, budget);
  const std::size_t n = g.n_vertices();
  std::int64_t total = 0;
  detail::for_each_edge_subset(g, [&](std::size_t components, std::size_t size) {
    const std::int64_t term = detail::checked_mul(detail::checked_pow(x - 1, components - 1),
                                                  detail::checked_pow(y - 1, components + size - n));
    total = detail::checked_add(total, term);
  });
  return total;
}

/// Coefficients of T(G; 1, y). Only connected subsets survive at x = 1; each
/// contributes (y-1)^nullity, expanded binomially.
inline DegreePolynomial tutte_one_y(const Graph& g, const Budget& budget = {}) {
  detail::require_subset_budget(g, budget);
  const std::size_t rank = circuit_rank(g);
  std::vector<std::int64_t> by_nullity(rank + 1, 0);
  detail::for_each_edge_subset(g, [&](std::size_t components, std::size_t size) {
    if (components == 1) ++by_nullity[size + 1 - g.n_vertices()];
  });

  // binom[k][i] for k <= rank.
  std::vector<std::vector<std::int64_t>> binom(rank + 1, std::vector<std::int64_t>(rank + 1, 0));
  for (std::size_t k = 0; k <= rank; ++k) {
    binom[k][0] = 1;
    for (std::size_t i = 1; i <= k; ++i) binom[k][i] = binom[k - 1][i - 1] + (i < k ? binom[k - 1][i] : 0);
  }
  DegreePolynomial out{std::vector<std::int64_t>(rank + 1, 0)};
  for (std::size_t k = 0; k <= rank; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      const std::int64_t sign = (k - i) % 2 == 0 ? 1 : -1;
      out.coefficients[i] = detail::checked_add(
          out.coefficients[i], detail::checked_mul(by_nullity[k], detail::checked_mul(binom[k][i], sign)));
    }
  }
  return out;
}

/// Coefficient d counts the parking functions of degree d.
inline DegreePolynomial pf_degree_generating_function(const Graph& g, const Budget& budget = {}) {
  DegreePolynomial out{std::vector<std::int64_t>(circuit_rank(g) + 1, 0)};
  for (const ParkingFunction& p : enumerate_parking_functions(g, budget)) {
    const auto d = degree(p);
    if (d >= out.coefficients.size()) out.coefficients.resize(d + 1, 0);
    ++out.coefficients[d];
  }
  return out;
}

/// Coefficient i counts the spanning trees with kappa-number i.
inline DegreePolynomial kappa_generating_function(const Graph& g, const Budget& budget = {}) {
  DegreePolynomial out{std::vector<std::int64_t>(circuit_rank(g) + 1, 0)};
  for (const RootedTree& t : enumerate_spanning_trees(g, budget)) {
    const auto k = kappa_number(g, t);
    if (k >= out.coefficients.size()) out.coefficients.resize(k + 1, 0);
    ++out.coefficients[k];
  }
  return out;
}

}  // namespace dfsburn
