#pragma once

// Independent reference computations for the unit tests. Everything here is
// deliberately naive: permutation sums, explicit matrix commutators and
// exhaustive subset searches.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "singlocus/roots.hpp"

namespace oracle {

using singlocus::Element;
using singlocus::LieAlgebraData;
using singlocus::Mat;
using singlocus::Rat;
using singlocus::operator+;

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

inline Rat leibniz_det(const Mat& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rat total = 0;
  do {
    Rat term = permutation_sign(p);
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Rat permanent(const Mat& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rat total = 0;
  do {
    Rat term = 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

/// Matrix of an element in the defining representation, summed by hand.
inline Mat rep_of(const Element& x) {
  const LieAlgebraData& L = *x.algebra();
  Mat m(L.rep_dim, L.rep_dim);
  for (std::size_t i = 0; i < L.n; ++i)
    if (x.coords()[i] != 0) m = m + x.coords()[i] * L.rep[i];
  return m;
}

/// Killing form as trace(ad x ad y), with ad computed through matrix commutators
/// and coordinates recovered by least-squares-free exact solving.
inline Rat killing_via_matrices(const Element& x, const Element& y) {
  const LieAlgebraData& L = *x.algebra();
  // Coordinates of a matrix in the basis: solve the linear system entrywise.
  Mat basis_cols(L.rep_dim * L.rep_dim, L.n);
  for (std::size_t j = 0; j < L.n; ++j)
    for (std::size_t a = 0; a < L.rep_dim; ++a)
      for (std::size_t b = 0; b < L.rep_dim; ++b) basis_cols(a * L.rep_dim + b, j) = L.rep[j](a, b);
  auto coords = [&](const Mat& m) {
    singlocus::Vec rhs(L.rep_dim * L.rep_dim);
    for (std::size_t a = 0; a < L.rep_dim; ++a)
      for (std::size_t b = 0; b < L.rep_dim; ++b) rhs[a * L.rep_dim + b] = m(a, b);
    return *singlocus::solve(basis_cols, rhs);
  };
  const Mat X = rep_of(x), Y = rep_of(y);
  Rat trace = 0;
  for (std::size_t j = 0; j < L.n; ++j) {
    const Mat inner = commutator(Y, L.rep[j]);
    const Mat outer = commutator(X, inner);
    trace += coords(outer)[j];
  }
  return trace;
}

/// Gram determinant (w_1 ^ ... ^ w_k, v_1 ^ ... ^ v_k) = det (w_i, v_j).
inline Rat gram_pairing(const std::vector<Element>& w, const std::vector<Element>& v) {
  Mat g(w.size(), v.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) g(i, j) = singlocus::killing_form(w[i], v[j]);
  return leibniz_det(g);
}

/// All perfect matchings of {0..2r-1} with the sign of the flattened permutation.
inline std::vector<std::pair<std::vector<std::pair<int, int>>, int>> matchings(int r) {
  std::vector<std::pair<std::vector<std::pair<int, int>>, int>> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> left) {
    if (left.empty()) {
      std::vector<int> flat;
      for (auto [a, b] : cur) {
        flat.push_back(a);
        flat.push_back(b);
      }
      out.emplace_back(cur, permutation_sign(flat));
      return;
    }
    const int a = left.front();
    for (std::size_t k = 1; k < left.size(); ++k) {
      std::vector<int> rest;
      for (std::size_t t = 1; t < left.size(); ++t)
        if (t != k) rest.push_back(left[t]);
      cur.emplace_back(a, left[k]);
      rec(rest);
      cur.pop_back();
    }
  };
  std::vector<int> all(2 * r);
  std::iota(all.begin(), all.end(), 0);
  rec(all);
  return out;
}

/// Pfaffian of ([w_a, w_b], x) by summing over matchings.
inline Rat gamma_value(const std::vector<Element>& w, const Element& x) {
  Rat total = 0;
  for (const auto& [pairs, sign] : matchings(static_cast<int>(w.size() / 2))) {
    Rat term = sign;
    for (auto [a, b] : pairs) term *= singlocus::killing_form(singlocus::bracket(w[a], w[b]), x);
    total += term;
  }
  return total;
}

inline long partitions(int m, int largest) {
  if (m == 0) return 1;
  long total = 0;
  for (int part = std::min(m, largest); part >= 1; --part) total += partitions(m - part, part);
  return total;
}

/// Ideals of the positive roots with k elements by exhaustive search over
/// subsets, with closure tested through root sums.
inline std::vector<std::vector<std::size_t>> ideals(const singlocus::RootDatum& D, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t r = D.r;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << r); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) != k) continue;
    bool closed = true;
    for (std::size_t a = 0; a < r && closed; ++a) {
      if (!(m >> a & 1)) continue;
      for (std::size_t b = 0; b < r && closed; ++b) {
        const auto s = D.find_root(D.roots[a] + D.roots[b]);
        if (s && *s < r && !(m >> *s & 1)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> ideal;
    for (std::size_t a = 0; a < r; ++a)
      if (m >> a & 1) ideal.push_back(a);
    out.push_back(ideal);
  }
  return out;
}

}  // namespace oracle
