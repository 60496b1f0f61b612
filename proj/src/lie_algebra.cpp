#include "singlocus/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "singlocus/roots.hpp"

namespace singlocus {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
  }
  return '?';
}

std::string AlgebraLabel::str() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void check_supported(const AlgebraLabel& label) {
  const int k = label.rank;
  bool ok = false;
  switch (label.family) {
    case Family::A: ok = k >= 1 && k <= 4; break;
    case Family::B: ok = k >= 2 && k <= 4; break;
    case Family::C: ok = k >= 2 && k <= 4; break;
    case Family::D: ok = k >= 3 && k <= 4; break;
    case Family::G: ok = k == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument("unsupported algebra " + label.str() +
                                " (supported: A1-A4, B2-B4, C2-C4, D3-D4, G2)");
  }
}

AlgebraLabel parse_label(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad algebra label '" + text + "'");
  AlgebraLabel label;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': label.family = Family::A; break;
    case 'B': label.family = Family::B; break;
    case 'C': label.family = Family::C; break;
    case 'D': label.family = Family::D; break;
    case 'G': label.family = Family::G; break;
    default: throw std::invalid_argument("unknown family in '" + text + "'");
  }
  const std::string digits = text.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) ||
      digits.size() > 2) {
    throw std::invalid_argument("bad rank in '" + text + "'");
  }
  label.rank = std::stoi(digits);
  check_supported(label);
  return label;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const LieAlgebraData* alg, Vec coords) : alg_(alg), coords_(std::move(coords)) {
  if (alg_ && coords_.size() != alg_->n) {
    throw std::invalid_argument("element has " + std::to_string(coords_.size()) +
                                " coordinates, algebra dimension is " + std::to_string(alg_->n));
  }
}

Element Element::zero(const LieAlgebraData& alg) { return Element(&alg, Vec(alg.n, Rat(0))); }

Element Element::basis(const LieAlgebraData& alg, std::size_t i) {
  Vec v(alg.n, Rat(0));
  v.at(i) = 1;
  return Element(&alg, std::move(v));
}

void require_same_algebra(const LieAlgebraData* a, const LieAlgebraData* b) {
  if (a != b) throw std::invalid_argument("algebra mismatch");
}

Element operator+(const Element& a, const Element& b) {
  require_same_algebra(a.alg_, b.alg_);
  return Element(a.alg_, a.coords_ + b.coords_);
}

Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a.alg_, b.alg_);
  return Element(a.alg_, a.coords_ - b.coords_);
}

Element operator-(const Element& a) { return Element(a.alg_, Rat(-1) * a.coords_); }

Element operator*(const Rat& s, const Element& a) { return Element(a.alg_, s * a.coords_); }

// ---------------------------------------------------------------------------
// Matrix realizations

namespace {

Mat unit(std::size_t dim, std::size_t i, std::size_t j) {
  Mat m(dim, dim);
  m(i, j) = 1;
  return m;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat diagonal(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat scale_primitive(const Mat& m) {
  Vec flat;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
  const Vec p = clear_denominators(flat);
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = p[i * m.cols() + j];
  return out;
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

struct RootPair {
  Mat pos;
  Mat neg;
};

struct Realization {
  std::size_t dim = 0;
  std::vector<Mat> cartan;
  std::vector<RootPair> pairs;
  Mat chamber;
  std::optional<Mat> form;
};

Realization realize_A(int rank) {
  const std::size_t N = static_cast<std::size_t>(rank) + 1;
  Realization R;
  R.dim = N;
  for (std::size_t i = 0; i + 1 < N; ++i) R.cartan.push_back(unit(N, i, i) - unit(N, i + 1, i + 1));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) R.pairs.push_back({unit(N, i, j), unit(N, j, i)});
  Vec d;
  for (std::size_t i = 0; i < N; ++i) d.push_back(Rat(static_cast<long>(N) - 1 - 2 * static_cast<long>(i)));
  R.chamber = diagonal(d);
  return R;
}

// Orthogonal/symplectic realizations use indices 0..l-1 for +eps_i, l..2l-1
// for -eps_i, and (type B) 2l for the zero weight.
Realization realize_BCD(Family family, int rank) {
  const std::size_t l = static_cast<std::size_t>(rank);
  const std::size_t N = family == Family::B ? 2 * l + 1 : 2 * l;
  Realization R;
  R.dim = N;
  Mat S(N, N);
  for (std::size_t i = 0; i < l; ++i) {
    if (family == Family::C) {
      S(i, l + i) = 1;
      S(l + i, i) = -1;
    } else {
      S(i, l + i) = 1;
      S(l + i, i) = 1;
    }
  }
  if (family == Family::B) S(2 * l, 2 * l) = 1;
  R.form = S;

  for (std::size_t i = 0; i < l; ++i) R.cartan.push_back(unit(N, i, i) - unit(N, l + i, l + i));

  const Rat sgn = family == Family::C ? Rat(1) : Rat(-1);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      // eps_i - eps_j
      R.pairs.push_back({unit(N, i, j) - unit(N, l + j, l + i), unit(N, j, i) - unit(N, l + i, l + j)});
      // eps_i + eps_j
      R.pairs.push_back({unit(N, i, l + j) + sgn * unit(N, j, l + i),
                         unit(N, l + j, i) + sgn * unit(N, l + i, j)});
    }
  }
  if (family == Family::C) {
    for (std::size_t i = 0; i < l; ++i) R.pairs.push_back({unit(N, i, l + i), unit(N, l + i, i)});
  }
  if (family == Family::B) {
    const std::size_t m = 2 * l;
    for (std::size_t i = 0; i < l; ++i)
      R.pairs.push_back({unit(N, i, m) - unit(N, m, l + i), unit(N, l + i, m) - unit(N, m, i)});
  }

  Vec d(N, Rat(0));
  for (std::size_t i = 0; i < l; ++i) {
    d[i] = Rat(static_cast<long>(l - i));
    d[l + i] = -d[i];
  }
  R.chamber = diagonal(d);
  return R;
}

std::size_t matrix_span_closure_dim(const std::vector<Mat>& generators, std::size_t limit) {
  SparseSpan<std::size_t> span;
  auto as_sparse = [](const Mat& m) {
    SparseSpan<std::size_t>::Vector v;
    const Vec f = flatten(m);
    for (std::size_t k = 0; k < f.size(); ++k)
      if (f[k] != 0) v.emplace(k, f[k]);
    return v;
  };
  std::vector<Mat> queue;
  for (const auto& g : generators)
    if (span.insert(as_sparse(g))) queue.push_back(g);
  for (std::size_t q = 0; q < queue.size() && span.dim() <= limit; ++q) {
    for (const auto& g : generators) {
      Mat c = commutator(g, queue[q]);
      if (span.insert(as_sparse(c))) queue.push_back(std::move(c));
    }
  }
  return span.dim();
}

// G2 as the subalgebra of so(7) generated by the long simple root vector
// e_{eps1-eps2} and a short one mixing e_{eps2} with e_{-eps1-eps3}; the
// mixing coefficients are found by requiring a 14-dimensional closure.
Realization realize_G2() {
  const Realization b3 = realize_BCD(Family::B, 3);
  const std::size_t N = 7, l = 3, m = 6;
  auto pos_diff = [&](std::size_t i, std::size_t j) { return unit(N, i, j) - unit(N, l + j, l + i); };
  auto neg_diff = [&](std::size_t i, std::size_t j) { return unit(N, j, i) - unit(N, l + i, l + j); };
  auto pos_sum = [&](std::size_t i, std::size_t j) { return unit(N, i, l + j) - unit(N, j, l + i); };
  auto neg_sum = [&](std::size_t i, std::size_t j) { return unit(N, l + j, i) - unit(N, l + i, j); };
  auto pos_short = [&](std::size_t i) { return unit(N, i, m) - unit(N, m, l + i); };
  auto neg_short = [&](std::size_t i) { return unit(N, l + i, m) - unit(N, m, i); };

  const Mat eb = pos_diff(0, 1);
  const Mat fb = neg_diff(0, 1);
  const std::vector<Rat> candidates = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2)};
  for (const auto& c : candidates) {
    for (const auto& cp : candidates) {
      const Mat ea = pos_short(1) + c * neg_sum(0, 2);
      const Mat fa = neg_short(1) + cp * pos_sum(0, 2);
      if (matrix_span_closure_dim({ea, eb, fa, fb}, 21) != 14) continue;

      Realization R;
      R.dim = N;
      R.form = b3.form;
      R.cartan = {scale_primitive(commutator(ea, fa)), scale_primitive(commutator(eb, fb))};
      const Mat eab = commutator(ea, eb), fab = commutator(fa, fb);
      const Mat e2ab = commutator(ea, eab), f2ab = commutator(fa, fab);
      const Mat e3ab = commutator(ea, e2ab), f3ab = commutator(fa, f2ab);
      const Mat e3a2b = commutator(eb, e3ab), f3a2b = commutator(fb, f3ab);
      R.pairs = {{ea, fa}, {eb, fb}, {eab, fab}, {e2ab, f2ab}, {e3ab, f3ab}, {e3a2b, f3a2b}};
      for (const auto& p : R.pairs) {
        if (p.pos.is_zero() || p.neg.is_zero()) throw std::logic_error("G2: vanishing root vector");
      }
      // Chamber: small integer combination of the two coroots positive on
      // every listed positive root.
      for (int a = -8; a <= 8 && R.chamber.rows() == 0; ++a) {
        for (int b = -8; b <= 8; ++b) {
          const Mat h = Rat(a) * R.cartan[0] + Rat(b) * R.cartan[1];
          bool ok = true;
          for (const auto& p : R.pairs) {
            const Mat c2 = commutator(h, p.pos);
            // eigenvalue at the first nonzero entry
            Rat val = 0;
            for (std::size_t i = 0; i < N && val == 0; ++i)
              for (std::size_t j = 0; j < N; ++j)
                if (p.pos(i, j) != 0) {
                  val = c2(i, j) / p.pos(i, j);
                  break;
                }
            if (val <= 0) ok = false;
          }
          if (ok) {
            R.chamber = h;
            break;
          }
        }
      }
      if (R.chamber.rows() == 0) throw std::logic_error("G2: no chamber element found");
      return R;
    }
  }
  throw std::logic_error("G2: no embedding into so(7) found");
}

// Solves for basis coordinates of matrices in the span of a fixed basis
// by restricting to a set of entries on which the basis is independent.
class CoordinateSolver {
 public:
  explicit CoordinateSolver(const std::vector<Mat>& basis) : basis_(basis) {
    const std::size_t n = basis.size();
    std::vector<Vec> rows;
    for (const auto& b : basis) rows.push_back(flatten(b));
    const Mat bt = Mat::from_rows(rows);  // n x N^2
    const Echelon e = bareiss_echelon(bt);
    if (e.pivots.size() != n) throw std::logic_error("basis matrices are dependent");
    entries_ = e.pivots;
    Mat sub(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) sub(k, i) = rows[i][entries_[k]];
    inverse_ = inverse(sub);
  }

  Vec coords(const Mat& m) const {
    const Vec f = flatten(m);
    Vec rhs;
    for (auto k : entries_) rhs.push_back(f[k]);
    Vec c = inverse_ * rhs;
    Mat back(m.rows(), m.cols());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) back = back + c[i] * basis_[i];
    if (!(back == m)) throw std::invalid_argument("matrix is not in the span of the basis");
    return c;
  }

 private:
  std::vector<Mat> basis_;
  std::vector<std::size_t> entries_;
  Mat inverse_;
};

Rat eigenvalue_on(const Mat& h, const Mat& x) {
  const Mat c = commutator(h, x);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != 0) {
        const Rat val = c(i, j) / x(i, j);
        if (!(c == val * x)) throw std::logic_error("matrix is not a root vector");
        return val;
      }
  throw std::logic_error("zero root vector");
}

std::pair<std::size_t, std::size_t> first_entry(const Mat& x) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != 0) return {i, j};
  return {x.rows(), x.cols()};
}

std::vector<std::vector<SparseCoords>> structure_from(const CoordinateSolver& solver,
                                                      const std::vector<Mat>& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<SparseCoords>> s(n, std::vector<SparseCoords>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec c = solver.coords(commutator(basis[i], basis[j]));
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k] == 0) continue;
        s[i][j].push_back({k, c[k]});
        s[j][i].push_back({k, -c[k]});
      }
    }
  }
  return s;
}

std::string root_name(char prefix, const Vec& coeffs) {
  std::ostringstream os;
  os << prefix << '[';
  for (std::size_t k = 0; k < coeffs.size(); ++k) os << (k ? "," : "") << coeffs[k].get_str();
  os << ']';
  return os.str();
}

AlgebraPtr assemble(const AlgebraLabel& label, Realization R) {
  const std::size_t l = R.cartan.size();
  const std::size_t npos = R.pairs.size();

  struct RootInfo {
    Mat pos, neg;
    Vec values;  // phi(H_i)
    Vec coeffs;  // simple-root coordinates
    long height = 0;
  };
  std::vector<RootInfo> info;
  for (auto& p : R.pairs) {
    RootInfo ri;
    ri.pos = scale_primitive(p.pos);
    ri.neg = scale_primitive(p.neg);
    if (eigenvalue_on(R.chamber, ri.pos) < 0) std::swap(ri.pos, ri.neg);
    if (eigenvalue_on(R.chamber, ri.pos) <= 0) throw std::logic_error("chamber is not regular");
    for (const auto& h : R.cartan) {
      const Rat v = eigenvalue_on(h, ri.pos);
      if (eigenvalue_on(h, ri.neg) != -v) throw std::logic_error("unpaired root vectors");
      ri.values.push_back(v);
    }
    info.push_back(std::move(ri));
  }

  // Simple roots: positive roots that are not a sum of two positive roots.
  std::vector<std::size_t> simple;
  for (std::size_t a = 0; a < npos; ++a) {
    bool decomposable = false;
    for (std::size_t b = 0; b < npos && !decomposable; ++b)
      for (std::size_t c = b; c < npos && !decomposable; ++c)
        if (info[b].values + info[c].values == info[a].values) decomposable = true;
    if (!decomposable) simple.push_back(a);
  }
  if (simple.size() != l) throw std::logic_error("wrong number of simple roots");
  std::sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) {
    return first_entry(info[a].pos) < first_entry(info[b].pos);
  });
  {
    std::vector<Vec> cols;
    for (auto s : simple) cols.push_back(info[s].values);
    const Mat sm = Mat::from_cols(cols, l);
    for (auto& ri : info) {
      auto c = solve(sm, ri.values);
      if (!c) throw std::logic_error("root outside the simple-root lattice");
      ri.coeffs = *c;
      Rat h = 0;
      for (const auto& x : ri.coeffs) {
        if (x < 0 || x.get_den() != 1) throw std::logic_error("positive root with bad coefficients");
        h += x;
      }
      ri.height = h.get_num().get_si();
    }
  }
  std::sort(info.begin(), info.end(), [](const RootInfo& a, const RootInfo& b) {
    if (a.height != b.height) return a.height < b.height;
    return b.coeffs < a.coeffs;
  });

  std::vector<Mat> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < l; ++i) {
    basis.push_back(R.cartan[i]);
    names.push_back("h" + std::to_string(i + 1));
  }
  for (const auto& ri : info) {
    basis.push_back(ri.pos);
    names.push_back(root_name('e', ri.coeffs));
  }
  for (const auto& ri : info) {
    basis.push_back(ri.neg);
    names.push_back(root_name('f', ri.coeffs));
  }

  auto alg = std::make_shared<LieAlgebraData>();
  alg->label = label;
  alg->n = basis.size();
  alg->ell = l;
  alg->r = npos;
  alg->rep_dim = R.dim;
  alg->rep_form = R.form;
  alg->basis_names = names;

  CoordinateSolver solver(basis);
  alg->structure = structure_from(solver, basis);
  alg->killing = killing_from_structure(*alg);
  alg->killing_inverse = inverse(alg->killing);
  alg->rep = basis;
  alg->chamber = solver.coords(R.chamber);

  const StructureCheck chk = check_structure(*alg);
  if (!chk.ok()) throw std::logic_error(label.str() + " failed structure check: " + chk.counterexample);
  return alg;
}

}  // namespace

AlgebraPtr build_classical(const AlgebraLabel& label) {
  check_supported(label);
  switch (label.family) {
    case Family::A: return assemble(label, realize_A(label.rank));
    case Family::B:
    case Family::C:
    case Family::D: return assemble(label, realize_BCD(label.family, label.rank));
    case Family::G: return assemble(label, realize_G2());
  }
  throw std::invalid_argument("unsupported family");
}

AlgebraPtr build_classical(Family family, int rank) { return build_classical(AlgebraLabel{family, rank}); }

// ---------------------------------------------------------------------------
// Bracket, Killing form, centralizers

Element bracket(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  const LieAlgebraData& L = *x.algebra();
  Vec out(L.n, Rat(0));
  const Vec& a = x.coords();
  const Vec& b = y.coords();
  for (std::size_t i = 0; i < L.n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < L.n; ++j) {
      if (b[j] == 0) continue;
      const Rat ab = a[i] * b[j];
      for (const auto& [k, c] : L.structure[i][j]) out[k] += ab * c;
    }
  }
  return Element(&L, std::move(out));
}

Vec killing_coords(const Element& y) { return y.algebra()->killing * y.coords(); }

Rat killing_form(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return dot(x.coords(), killing_coords(y));
}

std::vector<Element> dual_basis(const std::vector<Element>& basis) {
  if (basis.empty()) return {};
  const LieAlgebraData* alg = basis.front().algebra();
  const std::size_t n = basis.size();
  if (n != alg->n) throw std::domain_error("dual_basis: input does not have dim g elements");
  Mat gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_algebra(alg, basis[i].algebra());
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = killing_form(basis[i], basis[j]);
  }
  if (det(gram) == 0) throw std::domain_error("dual_basis: singular Gram matrix");
  const Mat ginv = inverse(gram);
  std::vector<Element> out;
  for (std::size_t j = 0; j < n; ++j) {
    Element z = Element::zero(*alg);
    for (std::size_t k = 0; k < n; ++k)
      if (ginv(k, j) != 0) z = z + ginv(k, j) * basis[k];
    out.push_back(std::move(z));
  }
  return out;
}

Mat ad_matrix(const Element& x) {
  const LieAlgebraData& L = *x.algebra();
  Mat m(L.n, L.n);
  const Vec& a = x.coords();
  for (std::size_t i = 0; i < L.n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < L.n; ++j)
      for (const auto& [k, c] : L.structure[i][j]) m(k, j) += a[i] * c;
  }
  return m;
}

std::vector<Element> centralizer(const Element& x) {
  std::vector<Element> out;
  for (auto& v : kernel_basis(ad_matrix(x))) out.emplace_back(x.algebra(), std::move(v));
  return out;
}

bool is_regular(const Element& x) { return rank(ad_matrix(x)) + x.algebra()->ell == x.algebra()->n; }

Element element_from_matrix(const LieAlgebraData& alg, const Mat& m) {
  CoordinateSolver solver(alg.rep);
  return Element(&alg, solver.coords(m));
}

Mat to_matrix(const Element& x) {
  const LieAlgebraData& L = *x.algebra();
  Mat m(L.rep_dim, L.rep_dim);
  for (std::size_t i = 0; i < L.n; ++i)
    if (x.coords()[i] != 0) m = m + x.coords()[i] * L.rep[i];
  return m;
}

Mat killing_from_structure(const LieAlgebraData& alg) {
  const std::size_t n = alg.n;
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(Element::basis(alg, i)));
  Mat k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rat t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (ads[i](a, b) != 0 && ads[j](b, a) != 0) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  }
  return k;
}

StructureCheck check_structure(const LieAlgebraData& L) {
  StructureCheck out;
  const std::size_t n = L.n;
  auto e = [&](std::size_t i) { return Element::basis(L, i); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(bracket(e(i), e(j)) == -bracket(e(j), e(i)))) {
        out.antisymmetric = false;
        out.counterexample = "antisymmetry fails at (" + L.basis_names[i] + ", " + L.basis_names[j] + ")";
        return out;
      }
      if (L.killing(i, j) != L.killing(j, i)) {
        out.killing_symmetric = false;
        out.counterexample = "Killing form not symmetric at (" + L.basis_names[i] + ", " + L.basis_names[j] + ")";
        return out;
      }
    }
  }
  std::vector<std::vector<Element>> br(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) br[i].push_back(bracket(e(i), e(j)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++out.triples_checked;
        const Element s = bracket(e(i), br[j][k]) + bracket(e(j), br[k][i]) + bracket(e(k), br[i][j]);
        if (!s.is_zero()) {
          out.jacobi = false;
          out.counterexample = "Jacobi fails at (" + L.basis_names[i] + ", " + L.basis_names[j] + ", " +
                               L.basis_names[k] + ")";
          return out;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (killing_form(br[i][j], e(k)) + killing_form(e(j), br[i][k]) != 0) {
          out.killing_invariant = false;
          out.counterexample = "Killing form not invariant at (" + L.basis_names[i] + ", " +
                               L.basis_names[j] + ", " + L.basis_names[k] + ")";
          return out;
        }
      }
  if (det(L.killing) == 0) {
    out.killing_nondegenerate = false;
    out.counterexample = "Killing form is degenerate";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Principal nilpotent and its singular hyperplane

Element principal_nilpotent(const RootDatum& D) {
  const LieAlgebraData& L = *D.alg;
  Element e = Element::zero(L);
  for (auto s : D.simples) e = e + D.root_vectors[s];
  if (!is_regular(e)) throw std::logic_error("sum of simple root vectors is not regular");
  Mat power = ad_matrix(e);
  const Mat ad = power;
  for (std::size_t k = 1; k <= L.n && !power.is_zero(); ++k) power = power * ad;
  if (!power.is_zero()) throw std::logic_error("principal nilpotent is not ad-nilpotent");
  return e;
}

SingularFunctional singular_functional(const RootDatum& D, const Element& e) {
  const LieAlgebraData& L = *D.alg;
  SingularFunctional out;
  out.centralizer_basis = centralizer(e);
  const std::size_t l = out.centralizer_basis.size();
  if (l != L.ell) throw std::logic_error("singular_functional: e is not regular");

  // Coordinates that vanish on [n, n]: everything but the positive root
  // vectors of height >= 2.
  std::vector<bool> in_nn(L.n, false);
  for (std::size_t p = 0; p < D.r; ++p) {
    if (D.heights[p] < 2) continue;
    if (D.basis_index[p] == npos) throw std::logic_error("root vectors are not basis elements");
    in_nn[D.basis_index[p]] = true;
  }
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < L.n; ++k) {
    if (in_nn[k]) continue;
    Vec row;
    for (const auto& s : out.centralizer_basis) row.push_back(s.coords()[k]);
    rows.push_back(std::move(row));
  }
  const Mat P = Mat::from_rows(rows);
  if (rank(P) != 1) throw std::logic_error("centralizer of e meets [n,n] in a non-hyperplane");
  for (const auto& row : rows) {
    if (!singlocus::is_zero(row)) {
      out.xi = clear_denominators(row);
      break;
    }
  }
  for (const auto& t : kernel_basis(P)) {
    Element k = Element::zero(L);
    for (std::size_t i = 0; i < l; ++i)
      if (t[i] != 0) k = k + t[i] * out.centralizer_basis[i];
    out.kernel.push_back(std::move(k));
  }
  return out;
}

}  // namespace singlocus
