#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ildt/digraph.hpp"

namespace ildt {

// Default cap on the number of complex values held by a spectrum or curve
// sample (the cardinality doubles every step).
inline constexpr int64_t kDefaultMaxValues = int64_t{1} << 24;

// Largest matrix handled by the exact characteristic-polynomial path.
inline constexpr NodeId kSpectralNodeBound = 64;

// Per-step growth factor of large eigenvalues; normalization divides step-t
// values by this to the t-th power.
inline const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;

using Complex = std::complex<double>;

// Multiset of eigenvalues (or their one-step images), sorted by (re, im) for
// deterministic output.
struct Spectrum {
    std::vector<Complex> values;
    uint32_t t = 0;
    bool normalized = false;
};

// The two images of z under one cloning step:
//   (z +- sqrt(z^2 + 4 (z + 1)^2)) / 2
// with the principal complex square root. Both branches are always
// collected, so the branch order only affects output ordering.
std::pair<Complex, Complex> step_map(Complex z);

// All n eigenvalues of the 0/1 adjacency matrix (n <= 64), via an exact
// integer characteristic polynomial and a simultaneous root iteration run in
// extended precision. Deterministic; fails loudly (with the worst residual)
// if the iteration does not converge to relative residual < 1e-12.
Spectrum initial_spectrum(const Digraph& g);

// t-fold application of step_map to every value, collecting both branches;
// cardinality doubles each step. Fails if the final cardinality would exceed
// max_values. Refuses normalized input (the recursion acts on raw values).
Spectrum spectrum_iterate(const Spectrum& s0, uint32_t t, int64_t max_values = kDefaultMaxValues);

// Divides every value by kGoldenRatio^t and sets the flag. Refuses input
// that is already normalized.
Spectrum normalize_spectrum(const Spectrum& s);

// Image of m equally spaced unit-circle points under t steps of the map,
// both branches at every step.
struct CurveSample {
    std::vector<Complex> points;  // sorted by (re, im)
    uint32_t t = 0;
    uint32_t seeds = 0;
    bool normalized = false;
    // True when a doubling overflowed max_points and the population was
    // reduced to one representative per small spatial cell. Thinning
    // preserves the set of occupied cells (the visible support) rather than
    // sampling branches uniformly, which would starve rare visible branches.
    bool thinned = false;
};

CurveSample curve_sample(uint32_t t, uint32_t m, bool normalized = false,
                         int64_t max_points = kDefaultMaxValues);

// Dense 0/1 adjacency matrix of a small graph (n <= 64).
std::vector<std::vector<int>> adjacency_matrix(const Digraph& g);

// One cloning step at the matrix level: [[A, A+I], [A+I, 0]]. Equals the
// adjacency matrix of the stepped graph under the library's id scheme;
// validation helper for small sizes (n <= 64).
std::vector<std::vector<int>> compose_adjacency(const std::vector<std::vector<int>>& a);

// Worst per-value distance when greedily pairing two equal-size multisets:
// both sides are sorted by (modulus, phase), then each value of a is matched
// to the nearest unused value of b. Index-wise pairing after the sort would
// misreport equal-modulus clusters whose internal order is jittered.
double spectrum_match_error(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace ildt
