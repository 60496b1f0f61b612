#include "singlocus/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace singlocus {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(m.data()), m.size()));
  }
};

using Accumulator = std::unordered_map<Monomial, Rat, MonomialHash>;

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.algebra() != b.algebra() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomials live in different rings");
}

Polynomial from_accumulator(const Polynomial& like, Accumulator&& acc) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  Polynomial out = like.zero_like();
  out.assign(std::move(terms));
  return out;
}

void add_term(Accumulator& acc, const Monomial& m, const Rat& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

}  // namespace

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Polynomial::Polynomial(const LieAlgebraData& alg) : alg_(&alg), nvars_(alg.n) {
  if (nvars_ > kMaxVars) throw std::invalid_argument("too many variables");
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars_ > kMaxVars) throw std::invalid_argument("too many variables");
}

Polynomial Polynomial::zero_like() const {
  Polynomial p;
  p.alg_ = alg_;
  p.nvars_ = nvars_;
  return p;
}

Polynomial Polynomial::constant(const Polynomial& like, const Rat& c) {
  Polynomial p = like.zero_like();
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(const Polynomial& like, std::size_t i) {
  if (i >= like.nvars_) throw std::out_of_range("variable index");
  Polynomial p = like.zero_like();
  Monomial m{};
  m[i] = 1;
  p.terms_.emplace_back(m, Rat(1));
  return p;
}

Polynomial Polynomial::linear(const Element& v) {
  Polynomial p(*v.algebra());
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v.coords()[i] == 0) continue;
    Monomial m{};
    m[i] = 1;
    terms.emplace_back(m, v.coords()[i]);
  }
  p.assign(std::move(terms));
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, monomial_degree(t.first));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = monomial_degree(terms_.front().first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return monomial_degree(t.first) == d; });
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

void Polynomial::assign(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  terms_.clear();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  std::vector<Polynomial::Term> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  Polynomial out = a.zero_like();
  out.assign(std::move(terms));
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a);
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Rat& s, const Polynomial& a) {
  if (s == 0) return a.zero_like();
  Polynomial out(a);
  for (auto& t : out.terms_) t.second *= s;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rat c;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        const unsigned e = unsigned(ma[i]) + mb[i];
        if (e > 255) throw std::overflow_error("exponent overflow");
        m[i] = static_cast<std::uint8_t>(e);
      }
      c = ca * cb;
      add_term(acc, m, c);
    }
  }
  return from_accumulator(a, std::move(acc));
}

Polynomial sum_of_products(const std::vector<ScaledProduct>& products, const Polynomial& like) {
  Accumulator acc;
  Rat c;
  for (const auto& [s, a, b] : products) {
    check_compatible(*a, like);
    check_compatible(*b, like);
    for (const auto& [ma, ca] : a->terms()) {
      for (const auto& [mb, cb] : b->terms()) {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
          const unsigned e = unsigned(ma[i]) + mb[i];
          if (e > 255) throw std::overflow_error("exponent overflow");
          m[i] = static_cast<std::uint8_t>(e);
        }
        c = ca * cb;
        c *= s;
        add_term(acc, m, c);
      }
    }
  }
  return from_accumulator(like, std::move(acc));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.alg_ == b.alg_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& f, unsigned k) {
  Polynomial out = Polynomial::constant(f, 1);
  for (unsigned i = 0; i < k; ++i) out = out * f;
  return out;
}

Rat evaluate_vars(const Polynomial& f, const Vec& values) {
  if (values.size() != f.nvars()) throw std::invalid_argument("wrong number of values");
  std::vector<std::vector<Rat>> powers(f.nvars());
  Rat acc = 0;
  for (const auto& [m, c] : f.terms()) {
    Rat t = c;
    for (std::size_t i = 0; i < f.nvars() && t != 0; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rat(1));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * values[i]);
      t *= pw[m[i]];
    }
    acc += t;
  }
  return acc;
}

Rat evaluate(const Polynomial& f, const Element& y) {
  require_same_algebra(f.algebra(), y.algebra());
  return evaluate_vars(f, killing_coords(y));
}

Polynomial partial_var(const Polynomial& f, std::size_t k) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[k] == 0) continue;
    Monomial d = m;
    --d[k];
    terms.emplace_back(d, c * m[k]);
  }
  Polynomial out = f.zero_like();
  out.assign(std::move(terms));
  return out;
}

namespace {

// Derivative along the direction whose Killing coordinates are w.
Polynomial derivative_along(const Polynomial& f, const Vec& w) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0) support.push_back(k);
  Accumulator acc;
  for (const auto& [m, c] : f.terms()) {
    for (auto k : support) {
      if (m[k] == 0) continue;
      Monomial d = m;
      --d[k];
      add_term(acc, d, c * w[k] * m[k]);
    }
  }
  return from_accumulator(f, std::move(acc));
}

}  // namespace

Polynomial partial_derivative(const Polynomial& f, const Element& v) {
  require_same_algebra(f.algebra(), v.algebra());
  return derivative_along(f, killing_coords(v));
}

Polynomial apply_diffop(const Polynomial& p, const Polynomial& f) {
  check_compatible(p, f);
  if (!f.algebra()) throw std::invalid_argument("apply_diffop needs polynomials on g");
  const LieAlgebraData& L = *f.algebra();
  const int fdeg = f.degree();
  std::map<Monomial, Polynomial> cache;
  std::function<const Polynomial&(const Monomial&)> D = [&](const Monomial& beta) -> const Polynomial& {
    auto it = cache.find(beta);
    if (it != cache.end()) return it->second;
    std::size_t last = kMaxVars;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (beta[i]) {
        last = i;
        break;
      }
    Polynomial value;
    if (last == kMaxVars) {
      value = f;
    } else {
      Monomial prev = beta;
      --prev[last];
      value = derivative_along(D(prev), L.killing.row(last));
    }
    return cache.emplace(beta, std::move(value)).first->second;
  };
  Polynomial out = f.zero_like();
  for (const auto& [beta, c] : p.terms()) {
    if (monomial_degree(beta) > fdeg) continue;
    const Polynomial& d = D(beta);
    if (!d.is_zero()) out = out + c * d;
  }
  return out;
}

Rat sym_pairing(const Polynomial& f, const Polynomial& g) {
  check_compatible(f, g);
  Rat total = 0;
  std::map<int, std::vector<Polynomial::Term>> fparts, gparts;
  for (const auto& t : f.terms()) fparts[monomial_degree(t.first)].push_back(t);
  for (const auto& t : g.terms()) gparts[monomial_degree(t.first)].push_back(t);
  for (auto& [d, ft] : fparts) {
    auto it = gparts.find(d);
    if (it == gparts.end()) continue;
    Polynomial fp = f.zero_like(), gp = g.zero_like();
    fp.assign(ft);
    gp.assign(it->second);
    total += apply_diffop(fp, gp).coefficient(Monomial{});
  }
  return total;
}

Rat pair_with_product(const std::vector<Element>& y, const Polynomial& g) {
  Polynomial h = g;
  for (const auto& v : y) {
    h = partial_derivative(h, v);
    if (h.is_zero()) return 0;
  }
  return h.coefficient(Monomial{});
}

Polynomial theta(const Element& y, const Polynomial& f) {
  require_same_algebra(f.algebra(), y.algebra());
  const Mat ad = ad_matrix(y);
  const std::size_t n = f.nvars();
  std::vector<std::vector<std::pair<std::size_t, Rat>>> cols(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (ad(k, i) != 0) cols[i].emplace_back(k, ad(k, i));
  Accumulator acc;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      for (const auto& [k, a] : cols[i]) {
        Monomial d = m;
        --d[i];
        ++d[k];
        add_term(acc, d, c * a * m[i]);
      }
    }
  }
  return from_accumulator(f, std::move(acc));
}

Polynomial directional_invariance_defect(const Polynomial& f, const Element& y) { return -theta(y, f); }

Polynomial substitute_linear(const Polynomial& f, const std::vector<Polynomial>& forms) {
  if (forms.size() != f.nvars()) throw std::invalid_argument("one form per variable expected");
  if (forms.empty()) return f;
  const Polynomial& like = forms.front();
  std::vector<std::vector<Polynomial>> powers(forms.size());
  auto power = [&](std::size_t k, unsigned e) -> const Polynomial& {
    auto& pw = powers[k];
    if (pw.empty()) pw.push_back(Polynomial::constant(like, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * forms[k]);
    return pw[e];
  };
  Accumulator acc;
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(like, c);
    for (std::size_t k = 0; k < forms.size() && !t.is_zero(); ++k)
      if (m[k]) t = t * power(k, m[k]);
    for (const auto& [mm, cc] : t.terms()) add_term(acc, mm, cc);
  }
  return from_accumulator(like, std::move(acc));
}

Polynomial restrict(const Polynomial& f, const std::vector<Element>& subspace) {
  const std::size_t m = subspace.size();
  Polynomial like(m);
  std::vector<Vec> kc;
  for (const auto& s : subspace) {
    require_same_algebra(f.algebra(), s.algebra());
    kc.push_back(killing_coords(s));
  }
  std::vector<Polynomial> forms;
  for (std::size_t k = 0; k < f.nvars(); ++k) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < m; ++i) {
      if (kc[i][k] == 0) continue;
      Monomial mono{};
      mono[i] = 1;
      terms.emplace_back(mono, kc[i][k]);
    }
    Polynomial form = like.zero_like();
    form.assign(std::move(terms));
    forms.push_back(std::move(form));
  }
  return substitute_linear(f, forms);
}

Polynomial product_of_linear_forms(const std::vector<Vec>& forms, std::size_t nvars) {
  Polynomial like(nvars);
  Polynomial out = Polynomial::constant(like, 1);
  for (const auto& v : forms) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (v.at(i) == 0) continue;
      Monomial mono{};
      mono[i] = 1;
      terms.emplace_back(mono, v[i]);
    }
    Polynomial form = like.zero_like();
    form.assign(std::move(terms));
    out = out * form;
  }
  return out;
}

std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [m, c] : f.terms()) {
    os << c.get_str();
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (m[i] == 0) continue;
      os << " x" << i;
      if (m[i] > 1) os << '^' << unsigned(m[i]);
    }
    os << '\n';
  }
  return os.str();
}

Polynomial parse_text(const std::string& text, const Polynomial& like) {
  std::istringstream in(text);
  std::string line;
  std::vector<Polynomial::Term> terms;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    const Rat c = parse_rat(tok);
    Monomial m{};
    while (ls >> tok) {
      if (tok.size() < 2 || tok[0] != 'x') throw std::invalid_argument("bad factor '" + tok + "'");
      const auto caret = tok.find('^');
      const std::size_t var = std::stoul(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      const unsigned e = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
      if (var >= like.nvars()) throw std::invalid_argument("variable out of range in '" + tok + "'");
      if (m[var] + e > 255) throw std::invalid_argument("exponent too large");
      m[var] = static_cast<std::uint8_t>(m[var] + e);
    }
    terms.emplace_back(m, c);
  }
  Polynomial out = like.zero_like();
  out.assign(std::move(terms));
  return out;
}

std::optional<Rat> proportionality(const Polynomial& f, const Polynomial& g) {
  check_compatible(f, g);
  if (g.is_zero()) throw std::invalid_argument("proportionality: zero reference polynomial");
  const auto& [m, c] = g.terms().front();
  const Rat ratio = f.coefficient(m) / c;
  if (f == ratio * g) return ratio;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

using PolyMat = std::vector<std::vector<Polynomial>>;

PolyMat multiply(const PolyMat& a, const PolyMat& b, const Polynomial& zero) {
  const std::size_t N = a.size();
  PolyMat c(N, std::vector<Polynomial>(N, zero));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j)
        if (!b[k][j].is_zero()) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

// tr(A B) without forming the product.
Polynomial trace_of_product(const PolyMat& a, const PolyMat& b, const Polynomial& zero) {
  Polynomial t = zero;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!a[i][j].is_zero() && !b[j][i].is_zero()) t = t + a[i][j] * b[j][i];
  return t;
}

Polynomial pfaffian(const PolyMat& a, const Polynomial& zero) {
  const std::size_t N = a.size();
  if (N % 2) return zero;
  std::map<std::uint64_t, Polynomial> memo;
  std::function<Polynomial(std::uint64_t)> pf = [&](std::uint64_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(zero, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int first = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & ~(1ULL << first);
    Polynomial total = zero;
    int position = 0;
    for (std::size_t j = first + 1; j < N; ++j) {
      if (!(rest & (1ULL << j))) continue;
      const bool plus = position % 2 == 0;
      ++position;
      if (a[first][j].is_zero()) continue;
      const Polynomial term = a[first][j] * pf(rest & ~(1ULL << j));
      total = plus ? total + term : total - term;
    }
    memo.emplace(mask, total);
    return total;
  };
  return pf((N == 64 ? ~0ULL : (1ULL << N) - 1));
}

Polynomial killing_quadratic_half(const LieAlgebraData& L) {
  Polynomial p(L);
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < L.n; ++i)
    for (std::size_t j = i; j < L.n; ++j) {
      const Rat& k = L.killing_inverse(i, j);
      if (k == 0) continue;
      Monomial m{};
      ++m[i];
      ++m[j];
      terms.emplace_back(m, i == j ? k / 2 : k);
    }
  p.assign(std::move(terms));
  return p;
}

}  // namespace

std::vector<int> invariant_degrees(const AlgebraLabel& label) {
  const int l = label.rank;
  std::vector<int> d;
  switch (label.family) {
    case Family::A:
      for (int k = 2; k <= l + 1; ++k) d.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= l; ++k) d.push_back(2 * k);
      break;
    case Family::D:
      for (int k = 1; k < l; ++k) d.push_back(2 * k);
      d.push_back(l);
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

InvariantSet invariant_generators(const LieAlgebraData& L) {
  const std::size_t N = L.rep_dim;
  const Polynomial zero(L);

  // rho(y) = sum_j (x_j, y) rho(z_j) with z_j the dual basis.
  std::vector<Mat> dual_rep(L.n, Mat(N, N));
  for (std::size_t j = 0; j < L.n; ++j)
    for (std::size_t k = 0; k < L.n; ++k)
      if (L.killing_inverse(k, j) != 0) dual_rep[j] = dual_rep[j] + L.killing_inverse(k, j) * L.rep[k];
  PolyMat P(N, std::vector<Polynomial>(N, zero));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t j = 0; j < L.n; ++j) {
        if (dual_rep[j](a, b) == 0) continue;
        Monomial m{};
        m[j] = 1;
        terms.emplace_back(m, dual_rep[j](a, b));
      }
      P[a][b].assign(std::move(terms));
    }

  const bool type_d = L.label.family == Family::D;
  // Degrees produced from characteristic coefficients; type D adds the Pfaffian.
  std::vector<int> char_degrees;
  for (int d : invariant_degrees(L.label)) char_degrees.push_back(d);
  if (type_d) char_degrees.erase(std::find(char_degrees.begin(), char_degrees.end(), L.label.rank));
  const int top = char_degrees.back();

  // Power traces tr(P^k) for k <= top, from matrix powers up to ceil(top/2).
  std::vector<PolyMat> powers{PolyMat{}, P};
  const int half = (top + 1) / 2;
  for (int k = 2; k <= half; ++k) powers.push_back(multiply(powers.back(), P, zero));
  std::vector<Polynomial> tr(top + 1, zero);
  for (int k = 1; k <= top; ++k) {
    const int a = (k + 1) / 2, b = k - a;
    if (b == 0) {
      Polynomial t = zero;
      for (std::size_t i = 0; i < N; ++i) t = t + powers[a][i][i];
      tr[k] = t;
    } else {
      tr[k] = trace_of_product(powers[a], powers[b], zero);
    }
  }
  // Newton's identities: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} tr_i.
  std::vector<Polynomial> e(top + 1, zero);
  e[0] = Polynomial::constant(zero, 1);
  for (int k = 1; k <= top; ++k) {
    Polynomial s = zero;
    for (int i = 1; i <= k; ++i) {
      const Polynomial term = e[k - i] * tr[i];
      s = (i % 2 == 1) ? s + term : s - term;
    }
    e[k] = Rat(1, k) * s;
  }

  struct Generator {
    int degree;
    Polynomial poly;
    std::string how;
  };
  std::vector<Generator> gens;
  for (int d : char_degrees) {
    if (d == 2) {
      gens.push_back({d, killing_quadratic_half(L), "Killing quadratic / 2"});
    } else {
      gens.push_back({d, e[d], "characteristic coefficient e_" + std::to_string(d) + " of the defining representation"});
    }
  }
  if (type_d) {
    PolyMat A(N, std::vector<Polynomial>(N, zero));
    const Mat& S = *L.rep_form;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k)
          if (S(i, k) != 0 && !P[k][j].is_zero()) A[i][j] = A[i][j] + S(i, k) * P[k][j];
    gens.push_back({L.label.rank, pfaffian(A, zero), "Pfaffian of S rho(y)"});
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) { return a.degree < b.degree; });

  InvariantSet inv;
  std::ostringstream desc;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    desc << (j ? "; " : "") << "degree " << gens[j].degree << ": " << gens[j].how;
    inv.generators.push_back(std::move(gens[j].poly));
    inv.degrees.push_back(gens[j].degree);
  }
  inv.description = desc.str();
  for (std::size_t j = 0; j < inv.generators.size(); ++j) {
    const auto& g = inv.generators[j];
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != inv.degrees[j])
      throw std::logic_error("invariant generator of degree " + std::to_string(inv.degrees[j]) + " is degenerate");
  }
  return inv;
}

PsiMinor psi_minor(const InvariantSet& inv, const std::vector<Element>& u) {
  const std::size_t l = inv.generators.size();
  if (u.size() != l) throw std::invalid_argument("psi_minor needs one vector per generator");
  const Polynomial zero = inv.generators.front().zero_like();
  PsiMinor out;
  std::vector<Vec> rows;
  for (const auto& v : u) rows.push_back(v.coords());
  if (rank(Mat::from_rows(rows)) < l) {
    out.value = zero;
    out.degenerate = true;
    return out;
  }
  std::vector<std::vector<Polynomial>> m(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) m[i].push_back(partial_derivative(inv.generators[j], u[i]));
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total = zero;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = a + 1; b < l; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial t = Polynomial::constant(zero, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < l && !t.is_zero(); ++i) t = t * m[i][perm[i]];
    total = total + t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.value = total;
  return out;
}

}  // namespace singlocus
