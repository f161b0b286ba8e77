#pragma once

#include <random>

#include "kundt/lie_algebra.hpp"

namespace kundt {

using Rng = std::mt19937_64;

/// p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(Rng& rng, int num_bound = 3, int den_bound = 2);

Vec<Rational> random_vector(Rng& rng, std::size_t dim, int num_bound = 3);

/// Random nonzero element of s.
Vec<Rational> random_element(Rng& rng, const Subspace<Rational>& s);

/// Symmetric matrix with small rational entries, redrawn until its
/// signature is (dim-1, 1, 0).
Matrix<Rational> random_lorentzian_metric(Rng& rng, std::size_t dim);

/// Random Lorentzian metric for which the hyperplane h is degenerate. With
/// kundt_bias the radical direction e is drawn from the vectors the
/// dimension-3 criterion needs ([h,h], or ad_e(g) ⊂ h for abelian h), so
/// Kundt pairs come up often; otherwise e is a random element of h.
Matrix<Rational> metric_with_degenerate_hyperplane(Rng& rng, const LieAlgebra& g, const Subspace<Rational>& h,
                                                   bool kundt_bias);

}  // namespace kundt
