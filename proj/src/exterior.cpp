#include "singlocus/exterior.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace singlocus {

namespace {

using Accumulator = std::unordered_map<Mask, Rat>;

Multivector from_accumulator(const LieAlgebraData& alg, Accumulator&& acc) {
  Multivector out(alg);
  for (auto& [m, c] : acc)
    if (c != 0) out.add(m, c);
  return out;
}

void accumulate(Accumulator& acc, Mask m, const Rat& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

const LieAlgebraData& algebra_of(const Multivector& a, const Multivector& b) {
  if (!a.algebra() || a.algebra() != b.algebra()) throw std::invalid_argument("algebra mismatch");
  return *a.algebra();
}

// Sign of moving the factor at index `from` to the slot of index `to` inside
// the sorted factor set `rest` (which contains neither).
int move_sign(Mask rest, std::size_t from, std::size_t to) {
  const std::size_t lo = std::min(from, to), hi = std::max(from, to);
  const Mask between = rest & (((Mask(1) << hi) - 1) & ~((Mask(1) << (lo + 1)) - 1));
  return popcount(between) % 2 ? -1 : 1;
}

}  // namespace

Multivector::Multivector(const LieAlgebraData& alg) : alg_(&alg) {
  if (alg.n > 64) throw std::invalid_argument("algebra too large for bitmask multivectors");
}

Multivector Multivector::scalar(const LieAlgebraData& alg, const Rat& c) {
  Multivector m(alg);
  m.add(0, c);
  return m;
}

Multivector Multivector::basis(const LieAlgebraData& alg, Mask mask) {
  Multivector m(alg);
  m.add(mask, 1);
  return m;
}

Multivector Multivector::from_element(const Element& x) {
  Multivector m(*x.algebra());
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x.coords()[i] != 0) m.add(Mask(1) << i, x.coords()[i]);
  return m;
}

Multivector Multivector::wedge_of(const LieAlgebraData& alg, const std::vector<Element>& xs) {
  Multivector out = scalar(alg, 1);
  for (const auto& x : xs) out = wedge(out, from_element(x));
  return out;
}

bool Multivector::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int g = popcount(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [g](const auto& t) { return popcount(t.first) == g; });
}

int Multivector::grade() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw std::logic_error("multivector has mixed grade");
  return popcount(terms_.begin()->first);
}

Rat Multivector::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Multivector::add(Mask m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  algebra_of(a, b);
  Multivector out(a);
  for (const auto& [m, c] : b.terms_) out.add(m, c);
  return out;
}

Multivector operator-(const Multivector& a) {
  Multivector out(a);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

Multivector operator*(const Rat& s, const Multivector& a) {
  Multivector out(*a.alg_);
  if (s == 0) return out;
  out.terms_ = a.terms_;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  while (b) {
    const int j = __builtin_ctzll(b);
    b &= b - 1;
    inversions += popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  const LieAlgebraData& L = algebra_of(a, b);
  Accumulator acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      accumulate(acc, ma | mb, s > 0 ? Rat(ca * cb) : Rat(-(ca * cb)));
    }
  }
  return from_accumulator(L, std::move(acc));
}

Multivector power(const Multivector& omega, unsigned k) {
  Multivector out = Multivector::scalar(*omega.algebra(), 1);
  for (unsigned i = 0; i < k && !out.is_zero(); ++i) out = wedge(out, omega);
  return out;
}

namespace {

// x_J -> wedge over j in J of sum_i (x_i, x_j) x_i; the coefficient of x_I in
// the result is det of the Killing matrix on rows I, columns J.
Multivector lower(const Multivector& v) {
  const LieAlgebraData& L = *v.algebra();
  std::vector<Multivector> rows;
  for (std::size_t j = 0; j < L.n; ++j) {
    Multivector r(L);
    for (std::size_t i = 0; i < L.n; ++i)
      if (L.killing(i, j) != 0) r.add(Mask(1) << i, L.killing(i, j));
    rows.push_back(std::move(r));
  }
  Accumulator acc;
  for (const auto& [m, c] : v.terms()) {
    Multivector t = Multivector::scalar(L, c);
    Mask rest = m;
    while (rest && !t.is_zero()) {
      const int j = __builtin_ctzll(rest);
      rest &= rest - 1;
      t = wedge(t, rows[j]);
    }
    for (const auto& [mm, cc] : t.terms()) accumulate(acc, mm, cc);
  }
  return from_accumulator(L, std::move(acc));
}

}  // namespace

Rat ext_pairing(const Multivector& u, const Multivector& v) {
  algebra_of(u, v);
  if (u.is_zero() || v.is_zero()) return 0;
  const Multivector lv = lower(v);
  Rat total = 0;
  for (const auto& [m, c] : u.terms()) {
    const Rat d = lv.coefficient(m);
    if (d != 0) total += c * d;
  }
  return total;
}

Multivector interior(const Element& y, const Multivector& w) {
  const LieAlgebraData& L = *w.algebra();
  require_same_algebra(y.algebra(), &L);
  const Vec k = killing_coords(y);
  Accumulator acc;
  for (const auto& [m, c] : w.terms()) {
    Mask rest = m;
    int position = 0;
    while (rest) {
      const int j = __builtin_ctzll(rest);
      rest &= rest - 1;
      if (k[j] != 0) accumulate(acc, m & ~(Mask(1) << j), position % 2 ? Rat(-(c * k[j])) : Rat(c * k[j]));
      ++position;
    }
  }
  return from_accumulator(L, std::move(acc));
}

Multivector interior(const Multivector& u, const Multivector& w) {
  const LieAlgebraData& L = algebra_of(u, w);
  Multivector out(L);
  for (const auto& [m, c] : u.terms()) {
    Multivector t = c * w;
    Mask rest = m;
    while (rest && !t.is_zero()) {
      const int j = __builtin_ctzll(rest);
      rest &= rest - 1;
      t = interior(Element::basis(L, j), t);
    }
    out = out + t;
  }
  return out;
}

Multivector coboundary_d(const Element& x, const std::vector<Element>& w, const std::vector<Element>& z) {
  const LieAlgebraData& L = *x.algebra();
  if (w.size() != L.n || z.size() != L.n) throw std::invalid_argument("coboundary_d needs a full dual pair");
  Multivector out(L);
  for (std::size_t i = 0; i < L.n; ++i)
    out = out + wedge(Multivector::from_element(w[i]), Multivector::from_element(bracket(z[i], x)));
  return Rat(1, 2) * out;
}

Multivector coboundary_d(const Element& x) {
  const LieAlgebraData& L = *x.algebra();
  std::vector<Element> w;
  for (std::size_t i = 0; i < L.n; ++i) w.push_back(Element::basis(L, i));
  return coboundary_d(x, w, dual_basis(w));
}

Multivector theta_basis(std::size_t i, const Multivector& u) {
  const LieAlgebraData& L = *u.algebra();
  Accumulator acc;
  for (const auto& [m, c] : u.terms()) {
    Mask rest = m;
    while (rest) {
      const int s = __builtin_ctzll(rest);
      rest &= rest - 1;
      const Mask others = m & ~(Mask(1) << s);
      for (const auto& [k, a] : L.structure[i][s]) {
        if (others & (Mask(1) << k)) continue;
        const int sign = move_sign(others, s, k);
        accumulate(acc, others | (Mask(1) << k), sign > 0 ? Rat(c * a) : Rat(-(c * a)));
      }
    }
  }
  return from_accumulator(L, std::move(acc));
}

Multivector theta(const Element& x, const Multivector& u) {
  const LieAlgebraData& L = *u.algebra();
  require_same_algebra(x.algebra(), &L);
  Multivector out(L);
  for (std::size_t i = 0; i < L.n; ++i)
    if (x.coords()[i] != 0) out = out + x.coords()[i] * theta_basis(i, u);
  return out;
}

VolumeData volume(const LieAlgebraData& alg) {
  VolumeData v;
  const Mask full = alg.n == 64 ? ~Mask(0) : (Mask(1) << alg.n) - 1;
  v.mu = Multivector::basis(alg, full);
  v.mu_norm_sq = det(alg.killing);
  return v;
}

Multivector star(const Multivector& u) { return interior(u, volume(*u.algebra()).mu); }

std::vector<Element> radical(const Multivector& omega) {
  const LieAlgebraData& L = *omega.algebra();
  Mat m(L.n, L.n);
  for (std::size_t i = 0; i < L.n; ++i) {
    const Multivector v = interior(Element::basis(L, i), omega);
    for (const auto& [mask, c] : v.terms()) {
      if (popcount(mask) != 1) throw std::invalid_argument("radical expects a 2-vector");
      m(__builtin_ctzll(mask), i) = c;
    }
  }
  std::vector<Element> out;
  for (auto& k : kernel_basis(m)) out.emplace_back(&L, std::move(k));
  return out;
}

std::vector<Mask> k_subsets(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask(1) << i;
    out.push_back(m);
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

namespace {

struct CasimirTerm {
  std::size_t i, j;
  Rat c;
};

// Cas = sum_{i,j} Kinv(j, i) theta(x_j) theta(x_i).
std::vector<CasimirTerm> casimir_terms(const LieAlgebraData& L) {
  std::vector<CasimirTerm> t;
  for (std::size_t i = 0; i < L.n; ++i)
    for (std::size_t j = 0; j < L.n; ++j)
      if (L.killing_inverse(j, i) != 0) t.push_back({i, j, L.killing_inverse(j, i)});
  return t;
}

Multivector apply_casimir(const LieAlgebraData& L, const std::vector<CasimirTerm>& terms, Mask m) {
  const Multivector x = Multivector::basis(L, m);
  std::vector<Multivector> first(L.n);
  std::vector<bool> have(L.n, false);
  Multivector out(L);
  for (const auto& t : terms) {
    if (!have[t.i]) {
      first[t.i] = theta_basis(t.i, x);
      have[t.i] = true;
    }
    if (first[t.i].is_zero()) continue;
    out = out + t.c * theta_basis(t.j, first[t.i]);
  }
  return out;
}

}  // namespace

Multivector casimir(const Multivector& u) {
  const LieAlgebraData& L = *u.algebra();
  const auto terms = casimir_terms(L);
  Multivector out(L);
  for (const auto& [m, c] : u.terms()) out = out + c * apply_casimir(L, terms, m);
  return out;
}

Mat casimir_matrix(const LieAlgebraData& alg, std::size_t k) {
  const auto subsets = k_subsets(alg.n, k);
  std::map<Mask, std::size_t> pos;
  for (std::size_t i = 0; i < subsets.size(); ++i) pos[subsets[i]] = i;
  const auto terms = casimir_terms(alg);
  Mat m(subsets.size(), subsets.size());
  for (std::size_t col = 0; col < subsets.size(); ++col) {
    const Multivector v = apply_casimir(alg, terms, subsets[col]);
    for (const auto& [mask, c] : v.terms()) m(pos.at(mask), col) = c;
  }
  return m;
}

std::vector<WeightBlock> weight_blocks(const RootDatum& D, std::size_t k) {
  if (D.basis_weights.empty()) throw std::logic_error("basis does not consist of weight vectors");
  std::map<Vec, std::vector<Mask>> by_weight;
  for (Mask m : k_subsets(D.alg->n, k)) {
    Vec w(D.ell, Rat(0));
    Mask rest = m;
    while (rest) {
      const int j = __builtin_ctzll(rest);
      rest &= rest - 1;
      w = w + D.basis_weights[j];
    }
    by_weight[w].push_back(m);
  }
  std::vector<WeightBlock> out;
  for (auto& [w, masks] : by_weight) out.push_back({w, std::move(masks)});
  return out;
}

Vec block_coords(const Multivector& u, const WeightBlock& block) {
  Vec c(block.subsets.size(), Rat(0));
  std::size_t matched = 0;
  for (std::size_t i = 0; i < block.subsets.size(); ++i) {
    c[i] = u.coefficient(block.subsets[i]);
    if (c[i] != 0) ++matched;
  }
  if (matched != u.terms().size()) throw std::invalid_argument("multivector has components outside the block");
  return c;
}

Multivector from_block_coords(const LieAlgebraData& alg, const WeightBlock& block, const Vec& c) {
  Multivector out(alg);
  for (std::size_t i = 0; i < block.subsets.size(); ++i) out.add(block.subsets[i], c.at(i));
  return out;
}

Mat casimir_block(const LieAlgebraData& alg, const WeightBlock& block) {
  const auto terms = casimir_terms(alg);
  std::map<Mask, std::size_t> pos;
  for (std::size_t i = 0; i < block.subsets.size(); ++i) pos[block.subsets[i]] = i;
  Mat m(block.subsets.size(), block.subsets.size());
  for (std::size_t col = 0; col < block.subsets.size(); ++col) {
    const Multivector v = apply_casimir(alg, terms, block.subsets[col]);
    for (const auto& [mask, c] : v.terms()) {
      auto it = pos.find(mask);
      if (it == pos.end()) throw std::logic_error("Casimir does not preserve the weight block");
      m(it->second, col) = c;
    }
  }
  return m;
}

}  // namespace singlocus
