#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kundt/connection.hpp"

namespace kundt {

/// Metric-orthogonal complement of s.
template <class F>
Subspace<F> orthogonal(const MetricLieAlgebra<F>& m, const Subspace<F>& s);

/// True iff the Gram matrix of the metric restricted to s is singular.
template <class F>
bool is_degenerate(const MetricLieAlgebra<F>& m, const Subspace<F>& s);

/// The K1 scalars other than <V,V>, for A(x) = x•v with g-symmetric part B
/// and g-skew part C; g(F,F) = tr(F F*).
template <class F>
struct K1Scalars {
  F trace_a;
  F norm_b;
  F norm_c;
  F norm_vdotv;

  bool all_zero() const { return is_zero(trace_a) && is_zero(norm_b) && is_zero(norm_c) && is_zero(norm_vdotv); }
};

/// x•v = alpha(x) v on a basis of v^perp.
template <class F>
struct RecurrenceForm {
  Matrix<F> perp_basis;  // columns span v^perp
  Vec<F> values;         // alpha on each column
  bool is_zero() const { return is_zero_vector(values); }
};

template <class F>
struct KundtVectorReport {
  Vec<F> v;
  F norm_vv;
  Vec<F> vdotv;
  std::optional<RecurrenceForm<F>> recurrence_alpha;
  K1Scalars<F> k1_traces;
  bool k1_holds = false;
  bool k2_holds = false;
};

/// Evaluates the K1 scalar conditions and the K2 recurrence conditions for the
/// left-invariant field generated by v. Throws InputError for v = 0.
template <class F>
KundtVectorReport<F> check_kundt_vector(const MetricLieAlgebra<F>& m, const Vec<F>& v);

enum class KundtVerdict { KundtPair, LocallyKundtOnly, NotLocallyKundt };
std::string to_string(KundtVerdict v);

template <class F>
struct KundtPairReport {
  Subspace<F> h;
  bool abelian = false;
  bool degenerate = false;
  bool product_stable = false;
  /// Spans h^perp = radical of h; present only when h is degenerate.
  std::optional<Vec<F>> e_generator;
  /// e•e, the witness for the last condition.
  std::optional<Vec<F>> e_dot_e;
  bool e_dot_e_zero = false;
  bool ad_e_into_h = false;
  /// [h,h] == h^perp; nullopt for abelian h.
  std::optional<bool> derived_equals_perp;
  KundtVerdict verdict = KundtVerdict::NotLocallyKundt;
};

/// Kundt-pair test for a codimension-one subalgebra h in any dimension.
/// Throws InputError when h is not a codimension-one subalgebra.
template <class F>
KundtPairReport<F> check_kundt_pair(const MetricLieAlgebra<F>& m, const Subspace<F>& h);

/// Dimension-3 characterization: abelian h needs degeneracy and
/// ad_e(g) ⊂ h; non-abelian h needs h^perp = [h,h] and ad_e(g) ⊂ h.
/// Never touches the Levi-Civita product.
template <class F>
bool check_dim3_criterion(const MetricLieAlgebra<F>& m, const Subspace<F>& h);

/// How the real zero set of the hyperplane conic Q on covectors looks.
/// SingleLine: one covector direction (one hyperplane); TwoLines/DoubleLine:
/// one-parameter pencils of hyperplanes; ConicCurve: a smooth conic.
enum class SolutionKind { Empty, SingleLine, TwoLines, DoubleLine, ConicCurve, All };
std::string to_string(SolutionKind k);

/// Hyperplane subalgebras of a 3-dimensional algebra. ker φ is a subalgebra
/// iff Q(φ) = sum over cyclic (i,j,k) of φ_i φ_m c^m_{jk} vanishes.
struct HyperplaneFamily {
  Matrix<Rational> conic;
  SolutionKind solution_kind = SolutionKind::Empty;
  /// Each pencil is a 3x2 matrix whose columns p, q span a plane of
  /// solution covectors; members are ker(p + t q) and ker(q).
  std::vector<Matrix<Rational>> pencils;
  /// Isolated solution covectors, or rational sample points on a ConicCurve.
  std::vector<Vec<Rational>> points;
  /// TwoLines whose lines are not defined over Q; only the vertex is rational.
  bool irrational_pencils = false;
  std::vector<Subspace<Rational>> representatives;

  Rational q(const Vec<Rational>& covector) const { return bilinear(conic, covector, covector); }
  /// Q(φ) = 0, i.e. ker φ belongs to the family.
  bool contains(const Vec<Rational>& covector) const { return is_zero(q(covector)); }
  Subspace<Rational> pencil_member(std::size_t pencil, const Rational& t) const;
  Subspace<Rational> pencil_end(std::size_t pencil) const;
};

/// Rational values at which parametric families are sampled.
const std::vector<Rational>& sample_parameters();

/// Throws InputError unless dim == 3.
HyperplaneFamily enumerate_hyperplane_subalgebras(const LieAlgebra& g, int search_bound = 32);

/// Enumerates hyperplane subalgebras (representatives plus every exactly
/// solvable degenerate pencil member) and reports each one, sorted by
/// covector.
template <class F>
std::vector<KundtPairReport<F>> classify_kundt_structures(const MetricLieAlgebra<F>& m);

}  // namespace kundt
