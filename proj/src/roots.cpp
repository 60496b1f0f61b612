#include "singlocus/roots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace singlocus {

std::optional<std::size_t> RootDatum::find_root(const Vec& values) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == values) return k;
  return std::nullopt;
}

Rat RootDatum::pair(const Vec& lambda, const Vec& mu) const { return dot(lambda, form * mu); }

Vec RootDatum::cartan_coords(const Element& h) const {
  std::vector<Vec> cols;
  for (const auto& c : cartan) cols.push_back(c.coords());
  auto t = solve(Mat::from_cols(cols, alg->n), h.coords());
  if (!t) throw std::invalid_argument("element is not in the Cartan subalgebra");
  return *t;
}

Rat RootDatum::value(const Vec& phi, const Element& h) const { return dot(phi, cartan_coords(h)); }

Vec RootDatum::to_simple_coords(const Vec& weight) const {
  std::vector<Vec> cols;
  for (auto s : simples) cols.push_back(roots[s]);
  auto c = solve(Mat::from_cols(cols, ell), weight);
  if (!c) throw std::invalid_argument("weight is not in the span of the simple roots");
  return *c;
}

namespace {

// Coordinates of ad(h) restricted to the invariant subspace spanned by the
// columns of basis.
Mat restricted_action(const Mat& ad, const Mat& basis) {
  const std::size_t d = basis.cols();
  const Echelon e = bareiss_echelon(basis.transpose());
  Mat sub(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) sub(k, j) = basis(e.pivots[k], j);
  const Mat image = ad * basis;
  Mat rhs(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) rhs(k, j) = image(e.pivots[k], j);
  const Mat a = inverse(sub) * rhs;
  if (!(basis * a == image)) throw std::logic_error("subspace is not ad-invariant");
  return a;
}

struct Eigenspace {
  Vec values;
  Mat basis;  // columns
};

// Splits each space by the integer eigenvalues of ad(h).
std::vector<Eigenspace> refine(const std::vector<Eigenspace>& spaces, const Mat& ad) {
  std::vector<Eigenspace> out;
  for (const auto& s : spaces) {
    const std::size_t d = s.basis.cols();
    const Mat a = restricted_action(ad, s.basis);
    Rat bound = 0;
    for (std::size_t i = 0; i < d; ++i) {
      Rat row = 0;
      for (std::size_t j = 0; j < d; ++j) row += abs(a(i, j));
      bound = std::max(bound, row);
    }
    const long b = static_cast<long>(mpz_class(bound.get_num() / bound.get_den()).get_si()) + 1;
    std::size_t found = 0;
    for (long lam = -b; lam <= b && found < d; ++lam) {
      Mat shifted = a;
      for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= Rat(lam);
      const auto ker = kernel_basis(shifted);
      if (ker.empty()) continue;
      found += ker.size();
      std::vector<Vec> cols;
      for (const auto& k : ker) cols.push_back(s.basis * k);
      Eigenspace e;
      e.values = s.values;
      e.values.push_back(Rat(lam));
      e.basis = Mat::from_cols(cols, s.basis.rows());
      out.push_back(std::move(e));
    }
    if (found != d) throw std::logic_error("ad-action has non-integral or non-semisimple spectrum");
  }
  return out;
}

bool lex_desc(const Vec& a, const Vec& b) { return b < a; }

}  // namespace

RootDatum compute_root_datum(const LieAlgebraData& L) {
  RootDatum D;
  D.alg = &L;
  D.ell = L.ell;
  D.r = L.r;
  const std::size_t n = L.n;

  const Element chamber(&L, L.chamber);
  bool leading_cartan = true;
  for (std::size_t i = 0; i < L.ell && leading_cartan; ++i) {
    const Element h = Element::basis(L, i);
    if (!bracket(h, chamber).is_zero()) leading_cartan = false;
  }
  if (leading_cartan) {
    for (std::size_t i = 0; i < L.ell; ++i) D.cartan.push_back(Element::basis(L, i));
  } else {
    D.cartan = centralizer(chamber);
  }
  if (D.cartan.size() != L.ell) throw std::logic_error("chamber element is not regular semisimple");

  std::vector<Eigenspace> spaces{{Vec{}, Mat::identity(n)}};
  for (const auto& h : D.cartan) spaces = refine(spaces, ad_matrix(h));

  const Vec chamber_t = [&] {
    std::vector<Vec> cols;
    for (const auto& c : D.cartan) cols.push_back(c.coords());
    auto t = solve(Mat::from_cols(cols, n), L.chamber);
    if (!t) throw std::logic_error("chamber is not in the Cartan subalgebra");
    return *t;
  }();

  struct Found {
    Vec values;
    Vec vec;
  };
  std::vector<Found> pos, neg;
  for (const auto& s : spaces) {
    if (is_zero(s.values)) {
      if (s.basis.cols() != L.ell) throw std::logic_error("zero weight space is not the Cartan");
      continue;
    }
    if (s.basis.cols() != 1) throw std::logic_error("root space is not one-dimensional");
    Vec v = clear_denominators(s.basis.col(0));
    const auto nz = std::count_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
    if (nz == 1)
      for (auto& x : v) x = abs(x);
    const Rat c = dot(s.values, chamber_t);
    if (c == 0) throw std::logic_error("chamber element vanishes on a root");
    (c > 0 ? pos : neg).push_back({s.values, v});
  }
  if (pos.size() != L.r || neg.size() != L.r) throw std::logic_error("wrong number of roots");

  // Simple roots and their order: by basis position when available.
  std::vector<std::size_t> simple;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    bool decomposable = false;
    for (std::size_t b = 0; b < pos.size() && !decomposable; ++b)
      for (std::size_t c = b; c < pos.size() && !decomposable; ++c)
        if (pos[b].values + pos[c].values == pos[a].values) decomposable = true;
    if (!decomposable) simple.push_back(a);
  }
  if (simple.size() != L.ell) throw std::logic_error("wrong number of simple roots");
  auto first_nonzero = [](const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return v.size();
  };
  std::stable_sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) {
    return first_nonzero(pos[a].vec) < first_nonzero(pos[b].vec);
  });
  std::vector<Vec> simple_cols;
  for (auto s : simple) simple_cols.push_back(pos[s].values);
  const Mat simple_mat = Mat::from_cols(simple_cols, L.ell);

  struct Positive {
    Vec values, vec, coeffs;
    int height = 0;
  };
  std::vector<Positive> ordered;
  for (const auto& p : pos) {
    auto c = solve(simple_mat, p.values);
    if (!c) throw std::logic_error("root outside the simple-root lattice");
    Rat h = 0;
    for (const auto& x : *c) {
      if (x < 0 || x.get_den() != 1) throw std::logic_error("positive root with bad simple coordinates");
      h += x;
    }
    ordered.push_back({p.values, p.vec, *c, static_cast<int>(h.get_num().get_si())});
  }
  std::stable_sort(ordered.begin(), ordered.end(), [](const Positive& a, const Positive& b) {
    if (a.height != b.height) return a.height < b.height;
    return lex_desc(a.coeffs, b.coeffs);
  });

  const std::size_t r = L.r;
  D.roots.resize(2 * r);
  D.root_vectors.resize(2 * r);
  D.simple_coords.resize(2 * r);
  D.heights.resize(2 * r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto& p = ordered[k];
    const Vec minus = Rat(-1) * p.values;
    auto it = std::find_if(neg.begin(), neg.end(), [&](const Found& f) { return f.values == minus; });
    if (it == neg.end()) throw std::logic_error("root without a negative");
    D.roots[k] = p.values;
    D.roots[r + k] = minus;
    D.simple_coords[k] = p.coeffs;
    D.simple_coords[r + k] = Rat(-1) * p.coeffs;
    D.heights[k] = p.height;
    D.heights[r + k] = -p.height;
    const Element e(&L, p.vec);
    Element f(&L, it->vec);
    const Rat s = killing_form(e, f);
    if (s == 0) throw std::logic_error("root vectors are Killing-orthogonal");
    D.root_vectors[k] = e;
    D.root_vectors[r + k] = (Rat(1) / s) * f;
  }
  for (std::size_t k = 0; k < r; ++k)
    if (D.heights[k] == 1) D.simples.push_back(k);
  // Order simples as the simple-root coordinate axes.
  std::sort(D.simples.begin(), D.simples.end(), [&](std::size_t a, std::size_t b) {
    return first_nonzero(D.simple_coords[a]) < first_nonzero(D.simple_coords[b]);
  });

  D.basis_index.assign(2 * r, npos);
  for (std::size_t k = 0; k < 2 * r; ++k) {
    const Vec& v = D.root_vectors[k].coords();
    std::size_t idx = npos, count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) {
        idx = i;
        ++count;
      }
    if (count == 1) D.basis_index[k] = idx;
  }

  D.cartan_gram = Mat(L.ell, L.ell);
  for (std::size_t i = 0; i < L.ell; ++i)
    for (std::size_t j = 0; j < L.ell; ++j) D.cartan_gram(i, j) = killing_form(D.cartan[i], D.cartan[j]);
  D.form = inverse(D.cartan_gram);

  D.rho = Vec(L.ell, Rat(0));
  for (std::size_t k = 0; k < r; ++k) D.rho = D.rho + D.roots[k];
  D.rho = Rat(1, 2) * D.rho;

  D.positive_sum.assign(r, std::vector<std::size_t>(r, npos));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      auto k = D.find_root(D.roots[a] + D.roots[b]);
      if (k && *k < r) D.positive_sum[a][b] = *k;
    }

  // Weights of the basis elements, when the basis is made of weight vectors.
  std::vector<Mat> ads;
  for (const auto& h : D.cartan) ads.push_back(ad_matrix(h));
  bool weight_basis = true;
  std::vector<Vec> weights(n);
  for (std::size_t j = 0; j < n && weight_basis; ++j) {
    Vec w;
    for (const auto& ad : ads) {
      const Vec col = ad.col(j);
      for (std::size_t i = 0; i < n; ++i)
        if (i != j && col[i] != 0) weight_basis = false;
      w.push_back(col[j]);
    }
    weights[j] = w;
  }
  if (weight_basis) D.basis_weights = std::move(weights);
  return D;
}

std::vector<int> exponents_from_degrees(std::vector<int> degrees, std::size_t r) {
  std::sort(degrees.begin(), degrees.end());
  std::vector<int> m;
  long sum = 0;
  for (int d : degrees) {
    m.push_back(d - 1);
    sum += d - 1;
  }
  if (sum != static_cast<long>(r)) throw std::logic_error("exponents do not sum to r");
  return m;
}

bool is_upward_closed(const RootDatum& D, const IdealSet& phi) {
  std::vector<bool> in(D.r, false);
  for (auto k : phi) in.at(k) = true;
  for (auto k : phi)
    for (std::size_t a = 0; a < D.r; ++a) {
      const auto s = D.positive_sum[k][a];
      if (s != npos && !in[s]) return false;
    }
  return true;
}

namespace {

void sort_ideals(const RootDatum& D, std::vector<IdealSet>& ideals) {
  auto key = [&](const IdealSet& s) {
    std::vector<int> h;
    for (auto k : s) h.push_back(D.heights[k]);
    std::sort(h.rbegin(), h.rend());
    return h;
  };
  std::sort(ideals.begin(), ideals.end(), [&](const IdealSet& a, const IdealSet& b) {
    const auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return a < b;
  });
}

}  // namespace

std::vector<IdealSet> enumerate_ideals(const RootDatum& D, std::size_t k) {
  if (k > D.r) throw std::invalid_argument("ideal size exceeds the number of positive roots");
  // Decide roots from the top of the poset down; a root may join only when
  // everything above it that it generates is already in.
  std::vector<std::size_t> order(D.r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return D.heights[a] > D.heights[b]; });
  std::vector<IdealSet> out;
  std::vector<bool> in(D.r, false);
  IdealSet current;
  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (current.size() == k) {
      IdealSet s = current;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    if (pos == order.size() || current.size() + (order.size() - pos) < k) return;
    const std::size_t root = order[pos];
    bool allowed = true;
    for (std::size_t a = 0; a < D.r && allowed; ++a) {
      const auto s = D.positive_sum[root][a];
      if (s != npos && !in[s]) allowed = false;
    }
    if (allowed) {
      in[root] = true;
      current.push_back(root);
      go(pos + 1);
      current.pop_back();
      in[root] = false;
    }
    go(pos + 1);
  };
  go(0);
  sort_ideals(D, out);
  return out;
}

std::vector<IdealSet> enumerate_ideals_brute_force(const RootDatum& D, std::size_t k) {
  if (D.r > 20) throw std::invalid_argument("too many positive roots for brute force");
  std::vector<IdealSet> out;
  for (unsigned long mask = 0; mask < (1UL << D.r); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k) continue;
    IdealSet s;
    for (std::size_t i = 0; i < D.r; ++i)
      if (mask & (1UL << i)) s.push_back(i);
    if (is_upward_closed(D, s)) out.push_back(std::move(s));
  }
  sort_ideals(D, out);
  return out;
}

bool is_abelian(const RootDatum& D, const IdealSet& phi) {
  for (auto a : phi)
    for (auto b : phi)
      if (D.find_root(D.roots[a] + D.roots[b])) return false;
  return true;
}

Vec weight_sum(const RootDatum& D, const IdealSet& phi) {
  Vec w(D.ell, Rat(0));
  for (auto k : phi) w = w + D.roots.at(k);
  return w;
}

bool is_dominant_integral(const RootDatum& D, const Vec& lambda) {
  for (auto s : D.simples) {
    const Rat c = 2 * D.pair(lambda, D.roots[s]) / D.pair(D.roots[s], D.roots[s]);
    if (c < 0 || c.get_den() != 1) return false;
  }
  return true;
}

Integer weyl_dimension(const RootDatum& D, const Vec& lambda) {
  if (!is_dominant_integral(D, lambda)) throw std::invalid_argument("weight is not dominant integral");
  const Vec shifted = lambda + D.rho;
  Rat dim = 1;
  for (std::size_t k = 0; k < D.r; ++k) dim *= D.pair(shifted, D.roots[k]) / D.pair(D.rho, D.roots[k]);
  if (dim.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return dim.get_num();
}

Rat casimir_value(const RootDatum& D, const Vec& lambda) {
  return D.pair(lambda, lambda + Rat(2) * D.rho);
}

Integer partition_count(unsigned m) {
  if (m > 64) throw std::invalid_argument("partition_count: argument above 64");
  std::vector<Integer> p(m + 1, 0);
  p[0] = 1;
  for (unsigned i = 1; i <= m; ++i) {
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > static_cast<long>(i)) break;
      const bool plus = k % 2 == 1;
      p[i] += plus ? p[i - g1] : -p[i - g1];
      if (g2 <= static_cast<long>(i)) p[i] += plus ? p[i - g2] : -p[i - g2];
    }
  }
  return p[m];
}

}  // namespace singlocus
