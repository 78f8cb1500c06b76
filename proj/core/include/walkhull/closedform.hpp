#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace walkhull {

/// Exact rational p/q in lowest terms with q > 0.
struct Rational {
    boost::multiprecision::cpp_int num;
    boost::multiprecision::cpp_int den;

    double to_double() const;
    std::string str() const;
};

/// P(0 not in conv{X_1..X_N}) for N i.i.d. symmetric absolutely-continuous
/// points in R^n: 2^{-(N-1)} * sum_{k=0}^{n-1} C(N-1, k), exactly.
Rational wendel(std::size_t n, std::size_t N);

struct QuadratureSpec {
    /// Gauss-Legendre nodes per panel.
    int node_count = 32;
    /// Apply the w = sin^2(theta) substitution that removes both endpoint
    /// singularities of the arcsine integrand.
    bool endpoint_transform = true;
};

/// P(W(t_i) > 0 for all Poisson(alpha) sample times) of a 1-D Brownian
/// motion on [0,1]: (1/pi) * int_0^1 e^{-alpha w} / sqrt(w(1-w)) dw.
/// Evaluated by composite Gauss-Legendre after the sin^2 substitution,
/// with the panel count scaled to resolve the O(1/sqrt(alpha)) feature;
/// absolute error below 1e-10.
double stay_positive_probability(double alpha, const QuadratureSpec& spec = {});

/// P(W(t_i) >= 0 for all Poisson(alpha) sample times) of a 0-0 bridge on
/// [0,1]: E[1/N] over N ~ Poisson(alpha), with the vacuous N = 0 case
/// contributing probability 1. Series truncated at relative tail < 1e-12.
double bridge_positive_probability(double alpha);

/// Density of the maximal value of a Brownian bridge from a (time 0) to b
/// (time horizon): 1{y outside [a,b]} * 4 (y - (a+b)/2)/T * e^{-2(y-a)(y-b)/T}.
double bridge_max_density(double a, double b, double horizon, double y);

/// P(max of a 0-0 bridge on [0,horizon] > u) = e^{-2u^2/horizon}, the
/// closed-form integral of the density above.
double bridge_max_tail(double horizon, double u);

/// One-sided stay-positive bound 10 n / sqrt(N) for the projected lattice
/// walk; requires N > 2.
double discrete_walk_bound(std::size_t n, std::size_t N);

/// One-sided bound 2 ln(N) / N for the projected lattice bridge; requires
/// N > 2.
double discrete_bridge_bound(std::size_t N);

/// Leading-order facet density at a point of the open simplex, given by
/// the first n coordinates r_1..r_n with r_{n+1} = 1 - sum r_j:
/// (prod_{j=2}^{n} 1/(alpha r_j)) * (1/pi) / sqrt(alpha r_1 * alpha r_{n+1}).
/// Correction factors (1 + O(1/(alpha r_j))) are dropped; diagnostic use
/// only.
double facet_density(const std::vector<double>& r, double alpha);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace walkhull
