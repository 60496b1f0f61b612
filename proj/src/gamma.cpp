#include "singlocus/gamma.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace singlocus {

int Matching::sign() const {
  std::vector<int> p;
  for (const auto& [a, b] : pairs) {
    p.push_back(a);
    p.push_back(b);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<int> Matching::permutation() const {
  std::vector<int> p;
  for (const auto& [a, b] : pairs) {
    p.push_back(a);
    p.push_back(b);
  }
  if (sign() < 0) std::swap(p[0], p[1]);
  return p;
}

std::vector<Matching> enumerate_matchings(int r) {
  if (r < 0 || r > 8) throw std::invalid_argument("enumerate_matchings supports 0 <= r <= 8");
  std::vector<Matching> out;
  Matching current;
  std::vector<bool> used(2 * r + 1, false);
  std::function<void()> go = [&] {
    int first = 1;
    while (first <= 2 * r && used[first]) ++first;
    if (first > 2 * r) {
      out.push_back(current);
      return;
    }
    used[first] = true;
    for (int b = first + 1; b <= 2 * r; ++b) {
      if (used[b]) continue;
      used[b] = true;
      current.pairs.emplace_back(first, b);
      go();
      current.pairs.pop_back();
      used[b] = false;
    }
    used[first] = false;
  };
  go();
  return out;
}

namespace {

std::vector<std::vector<Polynomial>> bracket_matrix(const std::vector<Element>& w) {
  const std::size_t m = w.size();
  std::vector<std::vector<Polynomial>> a(m, std::vector<Polynomial>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = Polynomial::linear(bracket(w[i], w[j]));
  return a;
}

}  // namespace

Polynomial gamma_matching(const std::vector<Element>& w) {
  if (w.empty() || w.size() % 2) throw std::invalid_argument("gamma_matching needs an even, nonzero number of arguments");
  if (w.size() > 32) throw std::invalid_argument("too many arguments");
  const auto a = bracket_matrix(w);
  const Polynomial zero(*w.front().algebra());
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::uint32_t)> pf = [&](std::uint32_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(zero, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int first = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << first);
    std::vector<Polynomial> subs;
    std::vector<std::pair<std::size_t, bool>> picks;
    subs.reserve(w.size());
    int position = 0;
    for (std::size_t j = first + 1; j < w.size(); ++j) {
      if (!(rest & (1u << j))) continue;
      const bool plus = position++ % 2 == 0;
      if (a[first][j].is_zero()) continue;
      Polynomial sub = pf(rest & ~(1u << j));
      if (sub.is_zero()) continue;
      subs.push_back(std::move(sub));
      picks.emplace_back(j, plus);
    }
    std::vector<ScaledProduct> products;
    for (std::size_t k = 0; k < subs.size(); ++k)
      products.push_back({picks[k].second ? Rat(1) : Rat(-1), &a[first][picks[k].first], &subs[k]});
    Polynomial total = sum_of_products(products, zero);
    memo.emplace(mask, total);
    return total;
  };
  const std::uint32_t full = w.size() == 32 ? ~0u : (1u << w.size()) - 1;
  return pf(full);
}

Polynomial gamma_matching_enumerated(const std::vector<Element>& w) {
  if (w.empty() || w.size() % 2) throw std::invalid_argument("gamma_matching needs an even, nonzero number of arguments");
  const int r = static_cast<int>(w.size() / 2);
  Polynomial total(*w.front().algebra());
  for (const auto& m : enumerate_matchings(r)) {
    const auto p = m.permutation();
    Polynomial t = Polynomial::constant(total, 1);
    for (int k = 0; k < r && !t.is_zero(); ++k)
      t = t * Polynomial::linear(bracket(w[p[2 * k] - 1], w[p[2 * k + 1] - 1]));
    total = total + t;
  }
  return total;
}

Rat gamma_pairing(const Multivector& zeta, const Element& x) {
  const LieAlgebraData& L = *x.algebra();
  const int r = static_cast<int>(L.r);
  if (!zeta.is_zero() && zeta.grade() != 2 * r) throw std::invalid_argument("gamma_pairing expects a 2r-vector");
  Rat factorial = 1;
  for (int k = 2; k <= r; ++k) factorial *= k;
  const Rat s = (r % 2 ? Rat(-1) : Rat(1)) / factorial;
  return s * ext_pairing(power(coboundary_d(x), r), zeta);
}

GammaTable::GammaTable(const LieAlgebraData& alg) : alg_(&alg) {}

const Polynomial& GammaTable::of_basis(Mask subset) {
  auto it = cache_.find(subset);
  if (it != cache_.end()) return it->second;
  std::vector<Element> w;
  Mask rest = subset;
  while (rest) {
    const int j = __builtin_ctzll(rest);
    rest &= rest - 1;
    w.push_back(Element::basis(*alg_, j));
  }
  return cache_.emplace(subset, gamma_matching(w)).first->second;
}

Polynomial GammaTable::of(const Multivector& zeta) {
  Polynomial total(*alg_);
  for (const auto& [m, c] : zeta.terms()) {
    if (static_cast<std::size_t>(popcount(m)) != 2 * alg_->r) throw std::invalid_argument("Gamma expects a 2r-vector");
    total = total + c * of_basis(m);
  }
  return total;
}

std::pair<Rat, Rat> transpose_check(const std::vector<Element>& y, const Multivector& zeta) {
  GammaTable table(*zeta.algebra());
  return transpose_check(y, zeta, table);
}

std::pair<Rat, Rat> transpose_check(const std::vector<Element>& y, const Multivector& zeta, GammaTable& table) {
  const LieAlgebraData& L = *zeta.algebra();
  if (y.size() != L.r) throw std::invalid_argument("transpose_check needs r elements");
  Multivector dy = Multivector::scalar(L, 1);
  for (const auto& v : y) dy = wedge(dy, coboundary_d(v));
  const Rat lhs = pair_with_product(y, table.of(zeta));
  const Rat rhs = (L.r % 2 ? Rat(-1) : Rat(1)) * ext_pairing(dy, zeta);
  return {lhs, rhs};
}

ModuleM build_M(const RootDatum& D, GammaTable& gamma) {
  const LieAlgebraData& L = *D.alg;
  ModuleM out;
  for (auto& block : weight_blocks(D, 2 * L.r)) {
    GammaBlock gb;
    gb.block = std::move(block);
    std::map<Monomial, std::size_t> rows;
    for (Mask m : gb.block.subsets) {
      gb.images.push_back(gamma.of_basis(m));
      for (const auto& t : gb.images.back().terms()) rows.emplace(t.first, 0);
    }
    std::size_t idx = 0;
    for (auto& [mono, i] : rows) i = idx++;
    Mat a(rows.size(), gb.block.subsets.size());
    for (std::size_t c = 0; c < gb.images.size(); ++c)
      for (const auto& [mono, coef] : gb.images[c].terms()) a(rows.at(mono), c) = coef;
    if (rows.empty()) {
      for (std::size_t c = 0; c < gb.images.size(); ++c) {
        Vec e(gb.images.size(), Rat(0));
        e[c] = 1;
        gb.kernel.push_back(e);
      }
    } else {
      gb.pivots = bareiss_echelon(a).pivots;
      gb.kernel = kernel_basis(a);
    }
    for (auto p : gb.pivots) out.basis.push_back(gb.images[p]);
    out.dim += gb.pivots.size();
    out.kernel_dim += gb.kernel.size();
    out.total += gb.block.subsets.size();
    out.blocks.push_back(std::move(gb));
  }
  return out;
}

std::vector<Polynomial> adjoint_closure(const std::vector<Polynomial>& seeds) {
  if (seeds.empty()) return {};
  const LieAlgebraData& L = *seeds.front().algebra();
  SparseSpan<Monomial> span;
  auto as_sparse = [](const Polynomial& f) {
    SparseSpan<Monomial>::Vector v;
    for (const auto& [m, c] : f.terms()) v.emplace(m, c);
    return v;
  };
  std::vector<Polynomial> basis;
  for (const auto& s : seeds)
    if (span.insert(as_sparse(s))) basis.push_back(s);
  for (std::size_t q = 0; q < basis.size(); ++q) {
    for (std::size_t i = 0; i < L.n; ++i) {
      Polynomial t = theta(Element::basis(L, i), basis[q]);
      if (span.insert(as_sparse(t))) basis.push_back(std::move(t));
    }
  }
  return basis;
}

std::vector<Multivector> adjoint_closure(const std::vector<Multivector>& seeds) {
  if (seeds.empty()) return {};
  const LieAlgebraData& L = *seeds.front().algebra();
  SparseSpan<Mask> span;
  auto as_sparse = [](const Multivector& v) {
    SparseSpan<Mask>::Vector s(v.terms().begin(), v.terms().end());
    return s;
  };
  std::vector<Multivector> basis;
  for (const auto& s : seeds)
    if (span.insert(as_sparse(s))) basis.push_back(s);
  for (std::size_t q = 0; q < basis.size(); ++q) {
    for (std::size_t i = 0; i < L.n; ++i) {
      Multivector t = theta_basis(i, basis[q]);
      if (span.insert(as_sparse(t))) basis.push_back(std::move(t));
    }
  }
  return basis;
}

namespace {

Vec monomial_weight(const RootDatum& D, const Monomial& m) {
  Vec w(D.ell, Rat(0));
  for (std::size_t i = 0; i < D.alg->n; ++i)
    if (m[i]) w = w + Rat(m[i]) * D.basis_weights[i];
  return w;
}

Vec mask_weight(const RootDatum& D, Mask m) {
  Vec w(D.ell, Rat(0));
  while (m) {
    const int j = __builtin_ctzll(m);
    m &= m - 1;
    w = w + D.basis_weights[j];
  }
  return w;
}

// Closure with one span per weight; every stored vector is a weight vector.
template <class Key, class V, class Split, class Act>
std::vector<V> weighted_closure(const RootDatum& D, const std::vector<V>& seeds, Split split, Act act) {
  if (D.basis_weights.empty()) throw std::logic_error("basis does not consist of weight vectors");
  std::map<Vec, SparseSpan<Key>> spans;
  std::vector<std::pair<Vec, V>> basis;
  auto offer = [&](const Vec& w, V v, const typename SparseSpan<Key>::Vector& sparse) {
    if (spans[w].insert(sparse)) basis.emplace_back(w, std::move(v));
  };
  for (const auto& s : seeds)
    for (auto& [w, part] : split(s)) offer(w, part.first, part.second);
  for (std::size_t q = 0; q < basis.size(); ++q) {
    for (std::size_t i = 0; i < D.alg->n; ++i) {
      V t = act(i, basis[q].second);
      if (t.is_zero()) continue;
      const Vec w = basis[q].first + D.basis_weights[i];
      auto sparse = typename SparseSpan<Key>::Vector();
      for (const auto& [k, c] : t.terms()) sparse.emplace(k, c);
      offer(w, std::move(t), sparse);
    }
  }
  std::vector<V> out;
  for (auto& [w, v] : basis) out.push_back(std::move(v));
  return out;
}

}  // namespace

std::vector<Polynomial> adjoint_closure(const RootDatum& D, const std::vector<Polynomial>& seeds) {
  auto split = [&](const Polynomial& f) {
    std::map<Vec, std::vector<Polynomial::Term>> parts;
    for (const auto& t : f.terms()) parts[monomial_weight(D, t.first)].push_back(t);
    std::map<Vec, std::pair<Polynomial, SparseSpan<Monomial>::Vector>> out;
    for (auto& [w, terms] : parts) {
      Polynomial p = f.zero_like();
      SparseSpan<Monomial>::Vector sparse;
      for (const auto& [m, c] : terms) sparse.emplace(m, c);
      p.assign(std::move(terms));
      out.emplace(w, std::make_pair(std::move(p), std::move(sparse)));
    }
    return out;
  };
  auto act = [&](std::size_t i, const Polynomial& f) { return theta(Element::basis(*D.alg, i), f); };
  return weighted_closure<Monomial, Polynomial>(D, seeds, split, act);
}

std::vector<Multivector> adjoint_closure(const RootDatum& D, const std::vector<Multivector>& seeds) {
  auto split = [&](const Multivector& u) {
    std::map<Vec, std::pair<Multivector, SparseSpan<Mask>::Vector>> out;
    for (const auto& [m, c] : u.terms()) {
      auto [it, fresh] = out.try_emplace(mask_weight(D, m), Multivector(*D.alg), SparseSpan<Mask>::Vector());
      it->second.first.add(m, c);
      it->second.second.emplace(m, c);
    }
    return out;
  };
  auto act = [](std::size_t i, const Multivector& u) { return theta_basis(i, u); };
  return weighted_closure<Mask, Multivector>(D, seeds, split, act);
}

std::vector<HighestWeightVector> highest_weight_vectors(const RootDatum& D, std::size_t k) {
  const LieAlgebraData& L = *D.alg;
  std::vector<HighestWeightVector> out;
  for (const auto& block : weight_blocks(D, k)) {
    std::map<std::pair<std::size_t, Mask>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::pair<std::size_t, Mask>, Rat>>> cols;
    for (Mask m : block.subsets) {
      std::vector<std::pair<std::pair<std::size_t, Mask>, Rat>> col;
      const Multivector x = Multivector::basis(L, m);
      for (std::size_t s = 0; s < D.simples.size(); ++s) {
        const Multivector t = theta(D.root_vectors[D.simples[s]], x);
        for (const auto& [mm, c] : t.terms()) {
          rows.emplace(std::make_pair(s, mm), 0);
          col.push_back({{s, mm}, c});
        }
      }
      cols.push_back(std::move(col));
    }
    std::size_t idx = 0;
    for (auto& [key, i] : rows) i = idx++;
    Mat a(rows.size(), block.subsets.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [key, v] : cols[c]) a(rows.at(key), c) += v;
    std::vector<Vec> ker;
    if (rows.empty()) {
      for (std::size_t c = 0; c < block.subsets.size(); ++c) {
        Vec e(block.subsets.size(), Rat(0));
        e[c] = 1;
        ker.push_back(e);
      }
    } else {
      ker = kernel_basis(a);
    }
    for (const auto& v : ker) out.push_back({block.weight, from_block_coords(L, block, v)});
  }
  return out;
}

Multivector ideal_wedge(const RootDatum& D, const IdealSet& phi) {
  std::vector<Element> xs;
  for (auto k : phi) xs.push_back(D.root_vectors.at(k));
  return Multivector::wedge_of(*D.alg, xs);
}

Element random_element(const LieAlgebraData& alg, std::mt19937_64& rng) {
  Vec c(alg.n);
  for (auto& x : c) x = static_cast<long>(rng() % 19) - 9;
  return Element(&alg, std::move(c));
}

Element random_regular_element(const LieAlgebraData& alg, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Element x = random_element(alg, rng);
    if (is_regular(x)) return x;
  }
  throw std::logic_error("no regular element found");
}

KappaFit fit_kappa(const InvariantSet& inv, std::size_t trials, std::mt19937_64& rng) {
  const LieAlgebraData& L = *inv.generators.front().algebra();
  KappaFit fit;
  for (std::size_t t = 0; t < trials; ++t) {
    KappaTrial trial;
    std::vector<Vec> rows;
    do {
      trial.w.clear();
      rows.clear();
      for (std::size_t a = 0; a < 2 * L.r; ++a) {
        trial.w.push_back(random_element(L, rng));
        rows.push_back(killing_coords(trial.w.back()));
      }
    } while (rank(Mat::from_rows(rows)) < 2 * L.r);
    for (auto& k : kernel_basis(Mat::from_rows(rows))) trial.u.emplace_back(&L, std::move(k));

    const Polynomial g = gamma_matching(trial.w);
    const PsiMinor psi = psi_minor(inv, trial.u);
    if (g.is_zero() && psi.value.is_zero()) {
      trial.skipped = true;
      fit.trials.push_back(std::move(trial));
      continue;
    }
    if (!psi.value.is_zero()) {
      if (auto c = proportionality(g, psi.value)) {
        trial.proportional = true;
        trial.raw = *c;
      }
    }
    const Multivector ww = Multivector::wedge_of(L, trial.w);
    const Multivector su = star(Multivector::wedge_of(L, trial.u));
    const auto& [m0, c0] = *ww.terms().begin();
    trial.volume = su.coefficient(m0) / c0;
    if (!(su == trial.volume * ww)) throw std::logic_error("star of the complement is not proportional to the wedge");
    trial.normalized = trial.raw * trial.volume;
    if (!trial.proportional && fit.failure.empty())
      fit.failure = "trial " + std::to_string(t) + ": Gamma(w) is not a multiple of psi(u)";
    fit.trials.push_back(std::move(trial));
  }
  fit.consistent = fit.failure.empty();
  for (const auto& tr : fit.trials) {
    if (tr.skipped || !tr.proportional) continue;
    if (!fit.kappa) {
      fit.kappa = tr.normalized;
    } else if (*fit.kappa != tr.normalized) {
      fit.consistent = false;
      if (fit.failure.empty()) fit.failure = "normalized constant differs between trials";
    }
  }
  if (!fit.kappa) {
    fit.consistent = false;
    if (fit.failure.empty()) fit.failure = "every trial was skipped";
  }
  return fit;
}

}  // namespace singlocus
