#include "singlocus/suite.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "singlocus/cache.hpp"
#include "singlocus/decomposition.hpp"
#include "singlocus/jacobian.hpp"
#include "singlocus/sampling.hpp"

namespace singlocus {

using nlohmann::json;

namespace {

// r above which polynomial checks on S^r(g) are skipped.
constexpr std::size_t kDeskScale = 6;

const std::vector<CheckInfo> kRegistry = {
    {"structure", "antisymmetry, Jacobi and Killing invariance on all basis triples; Killing form equals trace(ad ad); dim g^x >= rank", 100, 0},
    {"root-system", "root decomposition, (e_phi, e_-phi) = 1, simple roots, principal nilpotent and its singular functional", 0, 0},
    {"ideal-count", "ideals of the positive roots with rank many elements: abelian, distinct dominant weights, partition count in type A", 0, 0},
    {"invariants", "basic invariants are invariant, have the expected degrees, exponents sum to r, gradients independent", 0, 0},
    {"exterior-identities", "eps(y) iota(z) + iota(z) eps(y) = (y, z); wedge and interior are transposes; star scales the pairing by (mu, mu); d is basis independent", 10, 0},
    {"radical-centralizer", "radical of d x equals the centralizer of x", 25, 0},
    {"cartan-coboundary", "d h = sum over positive roots of phi(h) e_phi ^ e_-phi for Cartan h", 5, 0},
    {"casimir-maximal", "largest Casimir value on the rank-th exterior power is the rank; its eigenspace has the Weyl dimension sum of the ideals", 0, 0},
    {"gamma-transpose", "(y_1...y_r, Gamma(zeta)) = (-1)^r (d y_1 ^ ... ^ d y_r, zeta)", 10, kDeskScale},
    {"gamma-forms-agree", "Pfaffian form of Gamma agrees with the pairing form and alternates", 20, kDeskScale},
    {"singular-locus", "(d x)^r = 0 and the vanishing of M both characterize singular elements", 25, kDeskScale},
    {"gamma-psi-kappa", "Gamma(w) = kappa psi(u) with one normalized constant for random tuples and basis complements", 20, kDeskScale},
    {"harmonicity", "p(d) f = 0 for every basic invariant p and every f in M", 0, kDeskScale},
    {"cartan-restriction", "every f in M restricts to the Cartan as a multiple of the product of the positive roots", 0, kDeskScale},
    {"principal-restriction", "every f in M restricts to the centralizer of a principal nilpotent as a multiple of xi^r", 0, kDeskScale},
    {"jacobian-wedge", "wedge of invariant gradients: on the Cartan a multiple of the root product; its star a multiple of (-d x)^r / r!", 10, 0},
    {"decomposition", "kernel of Gamma is the annihilator of the top Casimir eigenspace; star matches eigenspaces; orbit dimensions", 0, kDeskScale},
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string describe(const Element& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (i) s += ", ";
    s += to_string(x.coords()[i]);
  }
  return s + "]";
}

std::string describe(const LieAlgebraData& L, Mask m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < L.n; ++i)
    if (m >> i & 1) {
      if (!first) s += ", ";
      s += L.basis_names[i];
      first = false;
    }
  return s + "}";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::int64_t as_i64(const Integer& z) { return z.get_si(); }

std::size_t span_rank(const std::vector<Element>& xs) {
  if (xs.empty()) return 0;
  std::vector<Vec> rows;
  for (const auto& x : xs) rows.push_back(x.coords());
  return rank(Mat::from_rows(rows));
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = span_rank(a);
  return ra == span_rank(b) && ra == span_rank(both);
}

Rat factorial(std::size_t k) {
  Rat f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// If a = c * b for nonzero b, returns c.
std::optional<Rat> ratio(const Multivector& a, const Multivector& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [m, c] = *b.terms().begin();
  const Rat q = a.coefficient(m) / c;
  if (!(a == q * b)) return std::nullopt;
  return q;
}

class Context {
 public:
  Context(AlgebraPtr alg, const RunConfig& cfg)
      : alg_(std::move(alg)), cfg_(cfg), D(compute_root_datum(*alg_)) {}

  const LieAlgebraData& L() const { return *alg_; }
  const RunConfig& config() const { return cfg_; }

  const InvariantSet& invariants() {
    if (!inv_) inv_ = invariant_generators(*alg_);
    return *inv_;
  }
  GammaTable& gamma() {
    if (!table_) table_ = std::make_unique<GammaTable>(*alg_);
    return *table_;
  }
  const ModuleM& module() {
    if (!M_) M_ = build_M(D, gamma());
    return *M_;
  }
  const Gradients& gradients() {
    if (!grads_) grads_ = invariant_gradients(invariants());
    return *grads_;
  }

  std::mt19937_64 rng(const std::string& check) const {
    return std::mt19937_64(splitmix(cfg_.seed ^ fnv1a(alg_->name() + ":" + check)));
  }

  std::size_t samples(const CheckInfo& info) const {
    auto it = cfg_.sample_counts.find(info.id);
    return it == cfg_.sample_counts.end() ? info.default_samples : it->second;
  }

 private:
  AlgebraPtr alg_;
  const RunConfig& cfg_;

 public:
  const RootDatum D;

 private:
  std::optional<InvariantSet> inv_;
  std::unique_ptr<GammaTable> table_;
  std::optional<ModuleM> M_;
  std::optional<Gradients> grads_;
};

struct Run {
  CheckRecord& rec;
  void fail(const std::string& what, const std::string& counterexample = {}) {
    if (rec.status == Status::fail) return;
    rec.status = Status::fail;
    rec.detail = what;
    rec.counterexample = counterexample;
  }
  bool failed() const { return rec.status == Status::fail; }
};

Multivector random_multivector(const LieAlgebraData& L, std::size_t grade, std::mt19937_64& rng) {
  Multivector m(L);
  const auto subsets = k_subsets(L.n, grade);
  if (subsets.empty()) return m;
  for (int t = 0; t < 3; ++t) m.add(subsets[rng() % subsets.size()], static_cast<long>(rng() % 19) - 9);
  return m;
}

std::vector<Element> random_basis(const LieAlgebraData& L, std::mt19937_64& rng) {
  while (true) {
    std::vector<Element> w;
    for (std::size_t i = 0; i < L.n; ++i) w.push_back(random_element(L, rng));
    if (span_rank(w) == L.n) return w;
  }
}

void check_structure_suite(Context& c, Run& run, std::size_t samples) {
  const LieAlgebraData& L = c.L();
  const StructureCheck sc = check_structure(L);
  run.rec.dimensions["dim"] = L.n;
  run.rec.dimensions["rank"] = L.ell;
  run.rec.dimensions["positive_roots"] = L.r;
  run.rec.dimensions["triples_checked"] = sc.triples_checked;
  if (!sc.ok()) return run.fail("structure constants fail verification", sc.counterexample);
  if (!(killing_from_structure(L) == L.killing)) return run.fail("Killing form differs from trace(ad ad)");
  if (L.n != L.ell + 2 * L.r) return run.fail("dim g != rank + 2 r");
  auto rng = c.rng("structure");
  const auto singular = singular_samples(c.D, samples / 2, rng);
  for (std::size_t s = 0; s < samples; ++s) {
    const Element x = s % 2 ? singular[s / 2].x : random_element(L, rng);
    const std::size_t cz = centralizer(x).size();
    if (cz < L.ell) return run.fail("centralizer smaller than the rank", describe(x));
    if (cz + rank(ad_matrix(x)) != L.n) return run.fail("dim g^x + rank ad x != dim g", describe(x));
  }
  run.rec.samples = samples;
}

void check_root_system(Context& c, Run& run, std::size_t) {
  const RootDatum& D = c.D;
  const LieAlgebraData& L = c.L();
  if (D.r != L.r || D.roots.size() != 2 * D.r) return run.fail("wrong number of roots");
  if (D.simples.size() != D.ell) return run.fail("wrong number of simple roots");
  int max_height = 0;
  for (std::size_t k = 0; k < D.r; ++k) {
    if (killing_form(D.root_vectors[k], D.root_vectors[k + D.r]) != 1)
      return run.fail("(e_phi, e_-phi) != 1", L.basis_names[D.basis_index[k]]);
    if (D.heights[k] < 1) return run.fail("positive root of non-positive height", L.basis_names[D.basis_index[k]]);
    for (const auto& a : D.simple_coords[k])
      if (a < 0 || a.get_den() != 1) return run.fail("positive root not a nonnegative integer combination of simples");
    max_height = std::max(max_height, D.heights[k]);
  }
  for (std::size_t k = 0; k < 2 * D.r; ++k)
    for (std::size_t i = 0; i < D.ell; ++i)
      if (!(bracket(D.cartan[i], D.root_vectors[k]) == D.roots[k][i] * D.root_vectors[k]))
        return run.fail("[h, e_phi] != phi(h) e_phi", L.basis_names[D.basis_index[k]]);
  const Element e = principal_nilpotent(D);
  if (!is_regular(e)) return run.fail("principal nilpotent is not regular", describe(e));
  const SingularFunctional sf = singular_functional(D, e);
  if (sf.kernel.size() + 1 != D.ell) return run.fail("singular functional kernel has the wrong dimension");
  run.rec.dimensions["positive_roots"] = D.r;
  run.rec.dimensions["simple_roots"] = D.simples.size();
  run.rec.dimensions["coxeter_number"] = max_height + 1;
}

void check_ideals(Context& c, Run& run, std::size_t) {
  const RootDatum& D = c.D;
  const auto ideals = enumerate_ideals(D, D.ell);
  run.rec.dimensions["ideals"] = ideals.size();
  if (D.r <= 16) {
    const auto brute = enumerate_ideals_brute_force(D, D.ell);
    run.rec.dimensions["ideals_brute_force"] = brute.size();
    if (std::set<IdealSet>(ideals.begin(), ideals.end()) != std::set<IdealSet>(brute.begin(), brute.end()))
      return run.fail("ideal enumeration disagrees with the brute-force filter");
  }
  std::set<Vec> weights;
  for (const auto& phi : ideals) {
    std::string name;
    for (auto k : phi) name += (name.empty() ? "" : " ") + c.L().basis_names[D.basis_index[k]];
    if (!is_upward_closed(D, phi)) return run.fail("ideal is not upward closed", name);
    if (!is_abelian(D, phi)) return run.fail("ideal is not abelian", name);
    const Vec w = weight_sum(D, phi);
    if (!is_dominant_integral(D, w)) return run.fail("ideal weight is not dominant", name);
    if (!weights.insert(w).second) return run.fail("two ideals share a weight", name);
  }
  if (c.L().label.family == Family::A) {
    const Integer p = partition_count(static_cast<unsigned>(D.ell));
    run.rec.dimensions["partition_count"] = as_i64(p);
    if (Integer(static_cast<unsigned long>(ideals.size())) != p) return run.fail("ideal count differs from the partition count");
  }
}

void check_invariants(Context& c, Run& run, std::size_t) {
  const LieAlgebraData& L = c.L();
  const InvariantSet& inv = c.invariants();
  const auto expected = invariant_degrees(L.label);
  if (inv.degrees != expected) return run.fail("generator degrees " + join(inv.degrees) + ", expected " + join(expected));
  std::vector<int> exps;
  try {
    exps = exponents_from_degrees(inv.degrees, L.r);
  } catch (const std::logic_error& e) {
    return run.fail(e.what());
  }
  for (std::size_t j = 0; j < inv.generators.size(); ++j) {
    const Polynomial& p = inv.generators[j];
    if (!p.is_homogeneous() || p.degree() != inv.degrees[j]) return run.fail("generator is not homogeneous of its degree");
    for (std::size_t i = 0; i < L.n; ++i)
      if (!theta(Element::basis(L, i), p).is_zero())
        return run.fail("generator of degree " + std::to_string(inv.degrees[j]) + " is not invariant", L.basis_names[i]);
  }
  auto rng = c.rng("invariants");
  const Element x = random_regular_element(L, rng);
  if (jacobian_wedge(c.gradients(), x).is_zero()) return run.fail("gradients are dependent at a regular element", describe(x));
  run.rec.detail = "degrees " + join(inv.degrees) + "; exponents " + join(exps);
  for (std::size_t j = 0; j < inv.degrees.size(); ++j)
    run.rec.dimensions["terms_degree_" + std::to_string(inv.degrees[j])] = inv.generators[j].terms().size();
}

void check_exterior(Context& c, Run& run, std::size_t samples) {
  const LieAlgebraData& L = c.L();
  auto rng = c.rng("exterior-identities");
  const VolumeData vol = volume(L);
  run.rec.constants["mu_norm_sq"] = to_string(vol.mu_norm_sq);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t g = rng() % 4, q = rng() % 3;
    const Multivector u = random_multivector(L, g, rng), v = random_multivector(L, g, rng);
    const Element y = random_element(L, rng), z = random_element(L, rng);
    const Multivector Y = Multivector::from_element(y);
    if (!(wedge(Y, interior(z, u)) + interior(z, wedge(Y, u)) == killing_form(y, z) * u))
      return run.fail("eps(y) iota(z) + iota(z) eps(y) != (y, z)", describe(y) + " " + describe(z));
    const Multivector a = random_multivector(L, q, rng), b = random_multivector(L, g + q, rng);
    if (ext_pairing(wedge(a, u), b) != ext_pairing(u, interior(a, b)))
      return run.fail("wedge and interior are not transposes");
    if (ext_pairing(star(u), star(v)) != vol.mu_norm_sq * ext_pairing(u, v))
      return run.fail("(star u, star v) != (mu, mu) (u, v)");
    if (s < 3) {
      const auto w = random_basis(L, rng);
      if (!(coboundary_d(y) == coboundary_d(y, w, dual_basis(w))))
        return run.fail("d x depends on the choice of basis", describe(y));
    }
  }
  run.rec.samples = samples;
}

void check_radical(Context& c, Run& run, std::size_t samples) {
  auto rng = c.rng("radical-centralizer");
  const auto singular = singular_samples(c.D, samples / 2, rng);
  std::size_t singular_seen = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Element x = s % 2 ? singular[s / 2].x : random_element(c.L(), rng);
    const auto cz = centralizer(x);
    if (cz.size() > c.L().ell) ++singular_seen;
    if (!same_span(radical(coboundary_d(x)), cz)) return run.fail("Rad d x != g^x", describe(x));
  }
  run.rec.samples = samples;
  run.rec.dimensions["singular_samples"] = singular_seen;
}

void check_cartan_coboundary(Context& c, Run& run, std::size_t samples) {
  const RootDatum& D = c.D;
  const LieAlgebraData& L = c.L();
  auto rng = c.rng("cartan-coboundary");
  for (std::size_t s = 0; s < samples; ++s) {
    Element h = Element::zero(L);
    for (std::size_t i = 0; i < D.ell; ++i) h = h + Rat(static_cast<long>(rng() % 19) - 9) * D.cartan[i];
    Multivector expected(L);
    for (std::size_t k = 0; k < D.r; ++k)
      expected = expected + D.value(D.roots[k], h) * wedge(Multivector::from_element(D.root_vectors[k]),
                                                            Multivector::from_element(D.root_vectors[k + D.r]));
    if (!(coboundary_d(h) == expected)) return run.fail("d h differs from the root formula", describe(h));
  }
  run.rec.samples = samples;
}

void check_casimir(Context& c, Run& run, std::size_t) {
  const CasimirReport rep = casimir_maximal(c.D);
  run.rec.constants["max_casimir"] = to_string(rep.max_casimir);
  run.rec.dimensions["eigenspace"] = rep.eigenspace_dim;
  run.rec.dimensions["weyl_sum"] = as_i64(rep.weyl_sum);
  run.rec.dimensions["highest_weight_vectors"] = rep.highest_count;
  run.rec.dimensions["ideals"] = rep.ideals.size();
  for (std::size_t i = 0; i < rep.ideals.size(); ++i)
    run.rec.dimensions["weyl_dim_" + std::to_string(i)] = as_i64(rep.ideals[i].weyl_dim);
  if (!rep.ok) run.fail(rep.failure);
}

void check_gamma_transpose(Context& c, Run& run, std::size_t samples) {
  const LieAlgebraData& L = c.L();
  auto rng = c.rng("gamma-transpose");
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Element> y;
    for (std::size_t i = 0; i < L.r; ++i) y.push_back(random_element(L, rng));
    const Multivector zeta = random_multivector(L, 2 * L.r, rng);
    const auto [lhs, rhs] = transpose_check(y, zeta, c.gamma());
    if (lhs != rhs) {
      std::string ce;
      for (const auto& [m, coef] : zeta.terms()) ce += to_string(coef) + " " + describe(L, m) + "; ";
      return run.fail("transpose identity fails: " + to_string(lhs) + " vs " + to_string(rhs), ce);
    }
  }
  run.rec.samples = samples;
}

void check_gamma_forms(Context& c, Run& run, std::size_t samples) {
  const LieAlgebraData& L = c.L();
  auto rng = c.rng("gamma-forms-agree");
  std::vector<Element> w;
  Polynomial g;
  Multivector ww;
  for (std::size_t s = 0; s < samples; ++s) {
    if (s % 10 == 0) {
      w.clear();
      for (std::size_t a = 0; a < 2 * L.r; ++a) w.push_back(random_element(L, rng));
      g = gamma_matching(w);
      ww = Multivector::wedge_of(L, w);
      if (s == 0) {
        std::vector<Element> swapped = w;
        std::swap(swapped[0], swapped[1]);
        if (!(gamma_matching(swapped) == -g)) return run.fail("Gamma does not alternate");
      }
      if (L.r <= 4 && !(gamma_matching_enumerated(w) == g))
        return run.fail("Pfaffian and matching sum disagree");
    }
    const Element x = random_element(L, rng);
    if (evaluate(g, x) != gamma_pairing(ww, x)) return run.fail("matching form and pairing form disagree", describe(x));
  }
  run.rec.samples = samples;
}

void check_singular_locus(Context& c, Run& run, std::size_t samples) {
  const LieAlgebraData& L = c.L();
  auto rng = c.rng("singular-locus");
  const ModuleM& M = c.module();
  auto probe = [&](const Element& x, bool expect_singular, const std::string& kind) {
    const bool singular = centralizer(x).size() > L.ell;
    if (singular != expect_singular) {
      run.fail("sample of kind " + kind + " has the wrong regularity", describe(x));
      return;
    }
    const bool power_zero = power(coboundary_d(x), static_cast<unsigned>(L.r)).is_zero();
    bool all_vanish = true;
    for (const auto& f : M.basis)
      if (evaluate(f, x) != 0) {
        all_vanish = false;
        break;
      }
    if (power_zero != singular) run.fail("(d x)^r = 0 disagrees with singularity", describe(x));
    else if (all_vanish != singular) run.fail("vanishing of M disagrees with singularity", describe(x));
  };
  for (const auto& s : singular_samples(c.D, samples, rng)) {
    probe(s.x, true, s.kind);
    if (run.failed()) return;
  }
  for (const auto& x : regular_samples(L, samples, rng)) {
    probe(x, false, "regular");
    if (run.failed()) return;
  }
  run.rec.samples = 2 * samples;
  run.rec.dimensions["singular_samples"] = samples;
  run.rec.dimensions["regular_samples"] = samples;
  run.rec.dimensions["dim_M"] = M.dim;
}

void check_kappa(Context& c, Run& run, std::size_t samples) {
  const LieAlgebraData& L = c.L();
  const InvariantSet& inv = c.invariants();
  auto rng = c.rng("gamma-psi-kappa");
  const KappaFit fit = fit_kappa(inv, samples, rng);
  run.rec.samples = samples;
  std::size_t skipped = 0;
  for (const auto& t : fit.trials) skipped += t.skipped;
  run.rec.dimensions["skipped_trials"] = skipped;
  if (fit.kappa) run.rec.constants["kappa"] = to_string(*fit.kappa);
  if (!fit.consistent) {
    for (const auto& t : fit.trials)
      if (!t.skipped && !t.proportional) {
        std::string ce;
        for (const auto& x : t.w) ce += describe(x) + " ";
        return run.fail(fit.failure, ce);
      }
    return run.fail(fit.failure);
  }

  // Basis complements: Gamma(x_S) against psi of the dual vectors indexed by the complement of S.
  const std::vector<Element> dual = dual_basis([&] {
    std::vector<Element> b;
    for (std::size_t i = 0; i < L.n; ++i) b.push_back(Element::basis(L, i));
    return b;
  }());
  const Mask all = L.n == 64 ? ~Mask(0) : (Mask(1) << L.n) - 1;
  std::size_t nonzero = 0;
  for (Mask S : k_subsets(L.n, 2 * L.r)) {
    std::vector<Element> u;
    for (std::size_t i = 0; i < L.n; ++i)
      if ((all & ~S) >> i & 1) u.push_back(dual[i]);
    const Polynomial& g = c.gamma().of_basis(S);
    const PsiMinor psi = psi_minor(inv, u);
    if (g.is_zero() != psi.value.is_zero()) return run.fail("Gamma and psi vanish on different subsets", describe(L, S));
    if (g.is_zero()) continue;
    ++nonzero;
    const auto raw = proportionality(g, psi.value);
    if (!raw) return run.fail("Gamma(x_S) is not a multiple of psi on the complement", describe(L, S));
    const auto vol = ratio(star(Multivector::wedge_of(L, u)), Multivector::basis(L, S));
    if (!vol) return run.fail("star of the complement is not a multiple of x_S", describe(L, S));
    if (*raw * *vol != *fit.kappa) return run.fail("basis complement constant differs from kappa", describe(L, S));
  }
  run.rec.dimensions["basis_complements_nonzero"] = nonzero;
  run.rec.constants["kappa_basis"] = to_string(*fit.kappa);
}

void check_harmonic(Context& c, Run& run, std::size_t) {
  const ModuleM& M = c.module();
  const InvariantSet& inv = c.invariants();
  for (std::size_t b = 0; b < M.basis.size(); ++b)
    for (std::size_t j = 0; j < inv.generators.size(); ++j)
      if (!apply_diffop(inv.generators[j], M.basis[b]).is_zero())
        return run.fail("invariant of degree " + std::to_string(inv.degrees[j]) + " does not annihilate an element of M",
                        "basis element " + std::to_string(b));
  run.rec.dimensions["dim_M"] = M.basis.size();
  run.rec.dimensions["generators"] = inv.generators.size();
}

template <class Restrict>
void check_restriction(Run& run, const ModuleM& M, const Polynomial& target, Restrict restrict_one,
                       const std::string& what) {
  std::size_t nonzero = 0;
  std::set<Rat> multiples;
  std::optional<Rat> first;
  for (std::size_t b = 0; b < M.basis.size(); ++b) {
    const Polynomial g = restrict_one(M.basis[b]);
    if (g.is_zero()) continue;
    const auto m = proportionality(g, target);
    if (!m) return run.fail("restriction is not a multiple of " + what, "basis element " + std::to_string(b));
    ++nonzero;
    multiples.insert(*m);
    if (!first) first = *m;
  }
  run.rec.dimensions["dim_M"] = M.basis.size();
  run.rec.dimensions["nonzero_restrictions"] = nonzero;
  run.rec.dimensions["distinct_multiples"] = multiples.size();
  if (first) run.rec.constants["first_multiple"] = to_string(*first);
  if (nonzero == 0) run.fail("M restricts to zero");
}

void check_cartan_restriction(Context& c, Run& run, std::size_t) {
  const RootDatum& D = c.D;
  check_restriction(run, c.module(), root_product(D), [&](const Polynomial& f) { return restrict(f, D.cartan); },
                    "the root product");
}

void check_principal_restriction(Context& c, Run& run, std::size_t) {
  const RootDatum& D = c.D;
  const SingularFunctional sf = singular_functional(D, principal_nilpotent(D));
  const Polynomial xi_r = product_of_linear_forms(std::vector<Vec>(D.r, sf.xi), D.ell);
  check_restriction(run, c.module(), xi_r, [&](const Polynomial& f) { return restrict(f, sf.centralizer_basis); },
                    "xi^r");
}

void check_jacobian(Context& c, Run& run, std::size_t samples) {
  const LieAlgebraData& L = c.L();
  const Gradients& grads = c.gradients();
  const JacobianOnCartan jc = jacobian_on_cartan(c.D, grads);
  if (jc.constant) run.rec.constants["kappa_cartan"] = to_string(*jc.constant);
  if (!jc.failure.empty()) return run.fail(jc.failure);
  if (L.r > kDeskScale) {
    run.rec.detail = "Cartan restriction only; pointwise star comparison skipped above r = " + std::to_string(kDeskScale);
    return;
  }
  auto rng = c.rng("jacobian-wedge");
  const Rat scale = (L.r % 2 ? Rat(-1) : Rat(1)) / factorial(L.r);
  std::optional<Rat> kappa_o;
  for (std::size_t s = 0; s < samples; ++s) {
    const Element x = random_regular_element(L, rng);
    const Multivector lhs = star(jacobian_wedge(grads, x));
    const Multivector rhs = scale * power(coboundary_d(x), static_cast<unsigned>(L.r));
    const auto q = ratio(lhs, rhs);
    if (!q) return run.fail("star of the gradient wedge is not a multiple of (-d x)^r / r!", describe(x));
    if (!kappa_o) kappa_o = *q;
    if (*q != *kappa_o) return run.fail("gradient wedge constant varies between points", describe(x));
  }
  if (kappa_o) run.rec.constants["kappa_o"] = to_string(*kappa_o);
  run.rec.samples = samples;
}

void check_decomposition(Context& c, Run& run, std::size_t) {
  auto rng = c.rng("decomposition");
  const Element x = random_regular_element(c.L(), rng);
  const DecompositionReport rep = decompose_and_verify(c.D, c.module(), c.gamma(), x);
  run.rec.dimensions["eigenspace_low"] = rep.eig_low;
  run.rec.dimensions["eigenspace_top"] = rep.eig_top;
  run.rec.dimensions["star_image"] = rep.star_image_rank;
  run.rec.dimensions["dim_M"] = rep.gamma_image;
  run.rec.dimensions["kernel"] = rep.gamma_kernel;
  run.rec.dimensions["total"] = rep.total;
  run.rec.dimensions["weyl_sum"] = as_i64(rep.weyl_sum);
  run.rec.dimensions["centralizer_closure"] = rep.centralizer_closure;
  run.rec.dimensions["coboundary_closure"] = rep.coboundary_closure;
  run.rec.dimensions["ideals"] = rep.ideals.size();
  for (std::size_t i = 0; i < rep.ideals.size(); ++i)
    run.rec.dimensions["orbit_dim_" + std::to_string(i)] = rep.ideals[i].orbit_dim;
  if (!rep.ok) run.fail(rep.failure, describe(x));
}

using CheckFn = void (*)(Context&, Run&, std::size_t);

CheckFn dispatch(const std::string& id) {
  static const std::map<std::string, CheckFn> table = {
      {"structure", check_structure_suite},
      {"root-system", check_root_system},
      {"ideal-count", check_ideals},
      {"invariants", check_invariants},
      {"exterior-identities", check_exterior},
      {"radical-centralizer", check_radical},
      {"cartan-coboundary", check_cartan_coboundary},
      {"casimir-maximal", check_casimir},
      {"gamma-transpose", check_gamma_transpose},
      {"gamma-forms-agree", check_gamma_forms},
      {"singular-locus", check_singular_locus},
      {"gamma-psi-kappa", check_kappa},
      {"harmonicity", check_harmonic},
      {"cartan-restriction", check_cartan_restriction},
      {"principal-restriction", check_principal_restriction},
      {"jacobian-wedge", check_jacobian},
      {"decomposition", check_decomposition},
  };
  return table.at(id);
}

CheckRecord run_in_context(Context& c, const CheckInfo& info) {
  CheckRecord rec;
  rec.check = info.id;
  if (info.max_positive_roots && c.L().r > info.max_positive_roots) {
    rec.status = Status::skip;
    rec.detail = "desk-scale limit: r = " + std::to_string(c.L().r) + " > " + std::to_string(info.max_positive_roots);
    return rec;
  }
  rec.status = Status::pass;
  const auto start = std::chrono::steady_clock::now();
  Run run{rec};
  try {
    dispatch(info.id)(c, run, c.samples(info));
  } catch (const std::exception& e) {
    run.fail(std::string("exception: ") + e.what());
  }
  if (c.config().timings)
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<const CheckInfo*> ordered_checks(const RunConfig& config) {
  std::set<std::string> wanted(config.checks.begin(), config.checks.end());
  for (const auto& id : wanted)
    if (!find_check(id)) throw std::invalid_argument("unknown check: " + id);
  std::vector<const CheckInfo*> out;
  for (const auto& info : kRegistry)
    if (wanted.count(info.id)) out.push_back(&info);
  return out;
}

AlgebraRecord run_algebra(const AlgebraLabel& label, const RunConfig& config,
                          const std::vector<const CheckInfo*>& checks) {
  AlgebraRecord out;
  out.algebra = label.str();
  if (label.rank > config.max_rank) {
    for (const auto* info : checks)
      out.checks.push_back({info->id, Status::skip, "rank above --max-rank", {}, {}, 0, {}, std::nullopt});
    return out;
  }
  AlgebraPtr alg;
  try {
    alg = load_or_build(label, config.cache_dir);
  } catch (const std::exception& e) {
    for (const auto* info : checks)
      out.checks.push_back({info->id, Status::fail, std::string("algebra construction failed: ") + e.what(), {}, {}, 0,
                            {}, std::nullopt});
    return out;
  }
  out.dim = alg->n;
  out.rank = alg->ell;
  out.positive_roots = alg->r;
  if (checks.empty()) return out;
  Context ctx(alg, config);
  for (const auto* info : checks) out.checks.push_back(run_in_context(ctx, *info));
  return out;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() { return kRegistry; }

const CheckInfo* find_check(const std::string& id) {
  for (const auto& info : kRegistry)
    if (info.id == id) return &info;
  return nullptr;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "skip";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skip") return Status::skip;
  throw std::invalid_argument("unknown status: " + s);
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& a : algebras)
    for (const auto& c : a.checks) n += c.status == s;
  return n;
}

CheckRecord run_check(const AlgebraLabel& label, const std::string& check, const RunConfig& config) {
  const CheckInfo* info = find_check(check);
  if (!info) throw std::invalid_argument("unknown check: " + check);
  Context ctx(load_or_build(label, config.cache_dir), config);
  return run_in_context(ctx, *info);
}

VerificationReport run_suite(const RunConfig& config) {
  VerificationReport rep;
  rep.seed = config.seed;
  const auto checks = ordered_checks(config);
  for (const auto* info : checks) rep.checks.push_back(info->id);
  if (checks.empty()) return rep;
  std::vector<std::future<AlgebraRecord>> jobs;
  for (const auto& label : config.algebras)
    jobs.push_back(std::async(std::launch::async, run_algebra, label, std::cref(config), std::cref(checks)));
  for (auto& j : jobs) rep.algebras.push_back(j.get());
  return rep;
}

nlohmann::json to_json(const VerificationReport& rep) {
  json j;
  j["seed"] = rep.seed;
  j["checks"] = rep.checks;
  j["summary"] = {{"pass", rep.count(Status::pass)}, {"fail", rep.count(Status::fail)}, {"skip", rep.count(Status::skip)}};
  json algs = json::array();
  for (const auto& a : rep.algebras) {
    json ja;
    ja["algebra"] = a.algebra;
    ja["dim"] = a.dim;
    ja["rank"] = a.rank;
    ja["positiveRoots"] = a.positive_roots;
    json checks = json::array();
    for (const auto& c : a.checks) {
      json jc;
      jc["check"] = c.check;
      jc["status"] = to_string(c.status);
      jc["detail"] = c.detail;
      jc["constants"] = c.constants;
      jc["dimensions"] = c.dimensions;
      jc["samples"] = c.samples;
      jc["counterexample"] = c.counterexample;
      if (c.seconds) jc["seconds"] = *c.seconds;
      checks.push_back(std::move(jc));
    }
    ja["results"] = std::move(checks);
    algs.push_back(std::move(ja));
  }
  j["algebras"] = std::move(algs);
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport rep;
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.checks = j.at("checks").get<std::vector<std::string>>();
  for (const auto& ja : j.at("algebras")) {
    AlgebraRecord a;
    a.algebra = ja.at("algebra").get<std::string>();
    a.dim = ja.at("dim").get<std::size_t>();
    a.rank = ja.at("rank").get<std::size_t>();
    a.positive_roots = ja.at("positiveRoots").get<std::size_t>();
    for (const auto& jc : ja.at("results")) {
      CheckRecord c;
      c.check = jc.at("check").get<std::string>();
      c.status = parse_status(jc.at("status").get<std::string>());
      c.detail = jc.at("detail").get<std::string>();
      c.constants = jc.at("constants").get<std::map<std::string, std::string>>();
      c.dimensions = jc.at("dimensions").get<std::map<std::string, std::int64_t>>();
      c.samples = jc.at("samples").get<std::size_t>();
      c.counterexample = jc.at("counterexample").get<std::string>();
      if (jc.contains("seconds")) c.seconds = jc.at("seconds").get<double>();
      a.checks.push_back(std::move(c));
    }
    rep.algebras.push_back(std::move(a));
  }
  return rep;
}

std::string emit_json(const VerificationReport& rep) { return to_json(rep).dump(2) + "\n"; }

std::string emit_markdown(const VerificationReport& rep) {
  bool timed = false;
  for (const auto& a : rep.algebras)
    for (const auto& c : a.checks) timed |= c.seconds.has_value();
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "Seed " << rep.seed << ". " << rep.count(Status::pass) << " passed, " << rep.count(Status::fail)
      << " failed, " << rep.count(Status::skip) << " skipped.\n\n";
  out << "| Algebra | Check | Status | Constants | Dimensions | Samples | Notes |" << (timed ? " Seconds |" : "") << "\n";
  out << "|---|---|---|---|---|---|---|" << (timed ? "---|" : "") << "\n";
  auto cell = [](std::string s) {
    for (std::size_t p = 0; (p = s.find('|', p)) != std::string::npos; p += 2) s.replace(p, 1, "\\|");
    return s;
  };
  for (const auto& a : rep.algebras) {
    for (const auto& c : a.checks) {
      std::string consts, dims;
      for (const auto& [k, v] : c.constants) consts += (consts.empty() ? "" : ", ") + k + " = " + v;
      for (const auto& [k, v] : c.dimensions) dims += (dims.empty() ? "" : ", ") + k + " = " + std::to_string(v);
      std::string notes = c.detail;
      if (!c.counterexample.empty()) notes += (notes.empty() ? "" : "; ") + std::string("counterexample: ") + c.counterexample;
      out << "| " << a.algebra << " | " << c.check << " | " << to_string(c.status) << " | " << cell(consts) << " | "
          << cell(dims) << " | " << c.samples << " | " << cell(notes) << " |";
      if (timed) out << " " << (c.seconds ? std::to_string(*c.seconds) : "") << " |";
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace singlocus
