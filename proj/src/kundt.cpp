#include "kundt/kundt.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kundt {

std::string to_string(KundtVerdict v) {
  switch (v) {
    case KundtVerdict::KundtPair: return "KundtPair";
    case KundtVerdict::LocallyKundtOnly: return "LocallyKundtOnly";
    case KundtVerdict::NotLocallyKundt: return "NotLocallyKundt";
  }
  return "?";
}

std::string to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::Empty: return "Empty";
    case SolutionKind::SingleLine: return "SingleLine";
    case SolutionKind::TwoLines: return "TwoLines";
    case SolutionKind::DoubleLine: return "DoubleLine";
    case SolutionKind::ConicCurve: return "ConicCurve";
    case SolutionKind::All: return "All";
  }
  return "?";
}

template <class F>
Subspace<F> orthogonal(const MetricLieAlgebra<F>& m, const Subspace<F>& s) {
  if (s.ambient_dim() != m.dim()) throw InputError("orthogonal: subspace lives in the wrong dimension");
  if (s.dim() == 0) return Subspace<F>::whole(m.dim());
  return Subspace<F>(kernel_basis(Matrix<F>(s.basis().transpose() * m.metric())));
}

template <class F>
bool is_degenerate(const MetricLieAlgebra<F>& m, const Subspace<F>& s) {
  if (s.ambient_dim() != m.dim()) throw InputError("is_degenerate: subspace lives in the wrong dimension");
  const Matrix<F> gram = restricted_gram(s.basis(), m.metric());
  return rank(gram) < s.dim();
}

template <class F>
KundtVectorReport<F> check_kundt_vector(const MetricLieAlgebra<F>& m, const Vec<F>& v) {
  const std::size_t n = m.dim();
  if (v.size() != n) throw InputError("check_kundt_vector: vector length mismatch");
  if (is_zero_vector(v)) throw InputError("check_kundt_vector: zero vector");

  KundtVectorReport<F> r;
  r.v = v;
  r.norm_vv = m.inner(v, v);
  r.vdotv = m.product(v, v);

  // A(x) = x•v as a matrix on basis coordinates; A* = G^-1 A^t G.
  std::vector<Vec<F>> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(m.product(unit_vector<F>(n, j), v));
  const Matrix<F> a = Matrix<F>::from_columns(n, cols);
  const Matrix<F> g_inv = inverse(m.metric());
  auto adjoint = [&](const Matrix<F>& x) { return g_inv * x.transpose() * m.metric(); };
  const Matrix<F> a_star = adjoint(a);
  const F half = F(1) / F(2);
  const Matrix<F> b = (a + a_star).scaled(half);
  const Matrix<F> c = (a - a_star).scaled(half);
  r.k1_traces.trace_a = a.trace();
  r.k1_traces.norm_b = (b * adjoint(b)).trace();
  r.k1_traces.norm_c = (c * adjoint(c)).trace();
  r.k1_traces.norm_vdotv = m.inner(r.vdotv, r.vdotv);
  r.k1_holds = is_zero(r.norm_vv) && r.k1_traces.all_zero();

  const Subspace<F> line = Subspace<F>::from_basis(n, {v});
  const Subspace<F> perp = orthogonal(m, line);
  RecurrenceForm<F> alpha{perp.basis(), {}};
  bool recurrent = true;
  std::size_t lead = 0;
  while (is_zero(v[lead])) ++lead;
  for (std::size_t j = 0; j < perp.dim() && recurrent; ++j) {
    Vec<F> xv = m.product(perp.basis_vector(j), v);
    if (!line.contains(xv)) {
      recurrent = false;
      break;
    }
    alpha.values.push_back(F(xv[lead] / v[lead]));
  }
  if (recurrent) r.recurrence_alpha = std::move(alpha);
  r.k2_holds = is_zero(r.norm_vv) && recurrent && is_zero_vector(r.vdotv);
  return r;
}

namespace {

template <class F>
void require_hyperplane_subalgebra(const LieAlgebra& g, const Subspace<F>& h) {
  if (h.ambient_dim() != g.dim()) throw InputError("subspace lives in the wrong dimension");
  if (h.dim() + 1 != g.dim()) throw InputError("subspace does not have codimension one");
  if (!is_subalgebra(g, h)) throw InputError("subspace is not a subalgebra");
}

template <class F>
bool ad_image_inside(const LieAlgebra& g, const Vec<F>& e, const Subspace<F>& h) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!h.contains(bracket(g, e, unit_vector<F>(g.dim(), i)))) return false;
  return true;
}

}  // namespace

template <class F>
KundtPairReport<F> check_kundt_pair(const MetricLieAlgebra<F>& m, const Subspace<F>& h) {
  const LieAlgebra& g = m.algebra();
  require_hyperplane_subalgebra(g, h);
  KundtPairReport<F> r{h, false, false, false, std::nullopt, std::nullopt, false, false, std::nullopt, KundtVerdict::NotLocallyKundt};
  r.abelian = is_abelian(g, h);

  const Matrix<F> gram = restricted_gram(h.basis(), m.metric());
  const Matrix<F> radical = kernel_basis(gram);
  r.degenerate = radical.cols() > 0;

  r.product_stable = true;
  for (std::size_t a = 0; a < h.dim() && r.product_stable; ++a)
    for (std::size_t b = 0; b < h.dim() && r.product_stable; ++b)
      r.product_stable = h.contains(m.product(h.basis_vector(a), h.basis_vector(b)));

  if (r.degenerate) {
    Vec<F> e = primitive_integer(h.basis() * radical.column(0));
    r.e_dot_e = m.product(e, e);
    r.e_dot_e_zero = is_zero_vector(*r.e_dot_e);
    r.ad_e_into_h = ad_image_inside(g, e, h);
    r.e_generator = std::move(e);
  }
  if (!r.abelian) r.derived_equals_perp = derived_subspace(g, h) == orthogonal(m, h);

  if (r.degenerate && r.product_stable)
    r.verdict = r.e_dot_e_zero ? KundtVerdict::KundtPair : KundtVerdict::LocallyKundtOnly;
  return r;
}

template <class F>
bool check_dim3_criterion(const MetricLieAlgebra<F>& m, const Subspace<F>& h) {
  const LieAlgebra& g = m.algebra();
  if (g.dim() != 3) throw InputError("check_dim3_criterion needs a 3-dimensional algebra");
  require_hyperplane_subalgebra(g, h);
  const Subspace<F> perp = orthogonal(m, h);
  const Vec<F> e = perp.basis_vector(0);
  if (!ad_image_inside(g, e, h)) return false;
  if (is_abelian(g, h)) return is_degenerate(m, h);
  return derived_subspace(g, h) == perp;
}

const std::vector<Rational>& sample_parameters() {
  static const std::vector<Rational> samples = {Rational(-2), Rational(-1), make_rational(-1, 2),
                                                make_rational(1, 2), Rational(1), Rational(2)};
  return samples;
}

Subspace<Rational> HyperplaneFamily::pencil_member(std::size_t pencil, const Rational& t) const {
  const Matrix<Rational>& pq = pencils.at(pencil);
  return Subspace<Rational>::hyperplane(primitive_integer(add(pq.column(0), scale(t, pq.column(1)))));
}

Subspace<Rational> HyperplaneFamily::pencil_end(std::size_t pencil) const {
  return Subspace<Rational>::hyperplane(primitive_integer(pencils.at(pencil).column(1)));
}

namespace {

Matrix<Rational> hyperplane_conic(const LieAlgebra& g) {
  // Coefficient of φ_i φ_m is c^m_{jk} for the cyclic successor pair (j,k) of i.
  Matrix<Rational> raw(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    for (std::size_t mm = 0; mm < 3; ++mm) raw(i, mm) = g.c(j, k, mm);
  }
  return (raw + raw.transpose()).scaled(make_rational(1, 2));
}

/// Plane of covectors {φ : ℓ·φ = 0} as a 3x2 basis matrix.
Matrix<Rational> covector_plane(const Vec<Rational>& ell) {
  Matrix<Rational> row(1, 3);
  for (std::size_t j = 0; j < 3; ++j) row(0, j) = ell[j];
  return kernel_basis(row);
}

/// Primitive integer points on Q = 0 with max-norm <= bound, first nonzero
/// coordinate positive.
std::vector<Vec<Rational>> search_conic_points(const Matrix<Rational>& conic, int bound) {
  mpz_class den = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) den = lcm(den, mpz_class(conic(i, j).get_den()));
  long long s[3][3];
  bool small = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      mpz_class v = conic(i, j).get_num() * (den / conic(i, j).get_den());
      small = small && v.fits_slong_p() && abs(v) < (1L << 40);
      s[i][j] = small ? v.get_si() : 0;
    }
  std::vector<Vec<Rational>> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c) {
        int lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead <= 0) continue;
        if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
        const long long x[3] = {a, b, c};
        bool on_conic;
        if (small) {
          __int128 q = 0;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q += static_cast<__int128>(s[i][j]) * x[i] * x[j];
          on_conic = q == 0;
        } else {
          Vec<Rational> phi = {Rational(a), Rational(b), Rational(c)};
          on_conic = is_zero(bilinear(conic, phi, phi));
        }
        if (on_conic) out.push_back({Rational(a), Rational(b), Rational(c)});
      }
  return out;
}

bool lex_less(const Vec<Rational>& x, const Vec<Rational>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

HyperplaneFamily enumerate_hyperplane_subalgebras(const LieAlgebra& g, int search_bound) {
  if (g.dim() != 3) throw InputError("hyperplane enumeration needs a 3-dimensional algebra");
  HyperplaneFamily fam;
  fam.conic = hyperplane_conic(g);
  const SignatureTriple sig = signature(fam.conic);
  const std::size_t r = sig.positive + sig.negative;
  const bool definite = sig.positive == 0 || sig.negative == 0;

  std::optional<Vec<Rational>> vertex;
  if (r == 2) vertex = primitive_integer(kernel_basis(fam.conic).column(0));

  if (r == 0) {
    fam.solution_kind = SolutionKind::All;
  } else if (r == 1) {
    fam.solution_kind = SolutionKind::DoubleLine;
    std::size_t i = 0;
    while (is_zero(fam.conic(i, i))) ++i;
    fam.pencils.push_back(covector_plane(fam.conic.row(i)));
  } else if (r == 2 && definite) {
    fam.solution_kind = SolutionKind::SingleLine;
    fam.points.push_back(*vertex);
  } else if (r == 2) {
    fam.solution_kind = SolutionKind::TwoLines;
    // Restrict Q to a complement {e_a, e_b} of the vertex and factor the
    // binary form a s^2 + 2 b s t + c t^2.
    std::size_t ia = 0, ib = 1;
    for (std::size_t drop = 0; drop < 3; ++drop) {
      if (is_zero((*vertex)[drop])) continue;
      ia = drop == 0 ? 1 : 0;
      ib = drop == 2 ? 1 : 2;
      break;
    }
    const Rational a = fam.conic(ia, ia), b = fam.conic(ia, ib), c = fam.conic(ib, ib);
    const Rational disc = b * b - a * c;
    auto direction = [&](const Rational& s, const Rational& t) {
      Vec<Rational> d(3, Rational(0));
      d[ia] = s;
      d[ib] = t;
      return d;
    };
    std::vector<Vec<Rational>> dirs;
    if (auto root = exact_sqrt(disc)) {
      if (!is_zero(a)) {
        dirs.push_back(direction(Rational((-b + *root) / a), Rational(1)));
        dirs.push_back(direction(Rational((-b - *root) / a), Rational(1)));
      } else {
        dirs.push_back(direction(Rational(1), Rational(0)));
        dirs.push_back(direction(Rational(-c), Rational(2 * b)));
      }
      for (const auto& d : dirs)
        fam.pencils.push_back(Matrix<Rational>::from_columns(3, {primitive_integer(d), *vertex}));
    } else {
      fam.irrational_pencils = true;
      fam.points.push_back(*vertex);
    }
  } else if (!definite) {
    fam.solution_kind = SolutionKind::ConicCurve;
    fam.points = search_conic_points(fam.conic, search_bound);
  } else {
    fam.solution_kind = SolutionKind::Empty;
  }

  std::map<Vec<Rational>, Subspace<Rational>, decltype(&lex_less)> reps(&lex_less);
  auto add_rep = [&](const Subspace<Rational>& s) { reps.emplace(s.covector(), s); };
  for (std::size_t p = 0; p < fam.pencils.size(); ++p) {
    add_rep(fam.pencil_member(p, Rational(0)));
    for (const auto& t : sample_parameters()) add_rep(fam.pencil_member(p, t));
    add_rep(fam.pencil_end(p));
  }
  for (const auto& pt : fam.points) add_rep(Subspace<Rational>::hyperplane(pt));
  if (fam.solution_kind == SolutionKind::All) {
    for (const auto& pt : std::vector<Vec<Rational>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})
      add_rep(Subspace<Rational>::hyperplane(pt));
  }
  for (auto& [cov, s] : reps) fam.representatives.push_back(s);
  return fam;
}

namespace {

template <class F>
int compare(const Vec<F>& x, const Vec<F>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    int s = sign(F(x[i] - y[i]));
    if (s != 0) return s;
  }
  return 0;
}

/// Roots in F of a t^2 + b t + c = 0 (not all coefficients zero).
template <class F>
std::vector<F> quadratic_roots(const F& a, const F& b, const F& c) {
  if (is_zero(a)) {
    if (is_zero(b)) return {};
    return {F(-c / b)};
  }
  F disc = b * b - F(4) * a * c;
  if (sign(disc) < 0) return {};
  auto root = exact_sqrt(disc);
  if (!root) return {};
  F two_a = F(2) * a;
  if (is_zero(*root)) return {F(-b / two_a)};
  return {F((-b + *root) / two_a), F((-b - *root) / two_a)};
}

}  // namespace

template <class F>
std::vector<KundtPairReport<F>> classify_kundt_structures(const MetricLieAlgebra<F>& m) {
  const HyperplaneFamily fam = enumerate_hyperplane_subalgebras(m.algebra());
  // h = ker φ is degenerate iff φ is null for the inverse metric.
  const Matrix<F> h_inv = inverse(m.metric());
  std::vector<Vec<F>> covectors;
  for (const auto& rep : fam.representatives) covectors.push_back(convert<F>(rep.covector()));
  for (const auto& pencil : fam.pencils) {
    const Vec<F> p = convert<F>(pencil.column(0));
    const Vec<F> q = convert<F>(pencil.column(1));
    const F a = bilinear(h_inv, q, q);
    const F b = F(2) * bilinear(h_inv, p, q);
    const F c = bilinear(h_inv, p, p);
    if (is_zero(a) && is_zero(b) && is_zero(c)) continue;  // whole pencil degenerate; samples cover it
    for (const F& t : quadratic_roots(a, b, c)) covectors.push_back(primitive_integer(add(p, scale(t, q))));
  }
  if (fam.solution_kind == SolutionKind::All) {
    const int bound = 8;
    for (int x = -bound; x <= bound; ++x)
      for (int y = -bound; y <= bound; ++y)
        for (int z = -bound; z <= bound; ++z) {
          Vec<F> phi = {F(x), F(y), F(z)};
          if (is_zero_vector(phi)) continue;
          if (is_zero(bilinear(h_inv, phi, phi))) covectors.push_back(primitive_integer(phi));
        }
  }
  std::sort(covectors.begin(), covectors.end(), [](const Vec<F>& x, const Vec<F>& y) { return compare(x, y) < 0; });
  covectors.erase(std::unique(covectors.begin(), covectors.end(), [](const Vec<F>& x, const Vec<F>& y) { return compare(x, y) == 0; }),
                  covectors.end());
  std::vector<KundtPairReport<F>> reports;
  for (const auto& phi : covectors) reports.push_back(check_kundt_pair(m, Subspace<F>::hyperplane(phi)));
  return reports;
}

#define KUNDT_INSTANTIATE_KUNDT(F)                                                                  \
  template Subspace<F> orthogonal(const MetricLieAlgebra<F>&, const Subspace<F>&);                  \
  template bool is_degenerate(const MetricLieAlgebra<F>&, const Subspace<F>&);                      \
  template KundtVectorReport<F> check_kundt_vector(const MetricLieAlgebra<F>&, const Vec<F>&);      \
  template KundtPairReport<F> check_kundt_pair(const MetricLieAlgebra<F>&, const Subspace<F>&);     \
  template bool check_dim3_criterion(const MetricLieAlgebra<F>&, const Subspace<F>&);               \
  template std::vector<KundtPairReport<F>> classify_kundt_structures(const MetricLieAlgebra<F>&);

KUNDT_INSTANTIATE_KUNDT(Rational)
KUNDT_INSTANTIATE_KUNDT(QSqrt2)

}  // namespace kundt
