#include "ildt/spectral.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <unordered_set>

#include "ildt/checked.hpp"
#include "ildt/error.hpp"

namespace ildt {

namespace {

constexpr int kMpfBits = 256;        // working precision of the root iteration
constexpr int kMaxSweeps = 1000;     // root-iteration sweep cap
constexpr double kStepTol = 1e-25;   // sweep stop: max |dz| < kStepTol * (1 + max |z|)
constexpr double kResidualTol = 1e-12;  // relative-residual acceptance per root

bool complex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Exact characteristic polynomial det(xI - A) of an integer matrix by the
// trace recurrence: M starts as I, and for k = 1..n the coefficient of
// x^(n-k) is -tr(A M)/k (exact division), after which M becomes A M + c_k I.
std::vector<mpz_class> characteristic_polynomial(const std::vector<std::vector<int>>& a) {
    const size_t n = a.size();
    std::vector<std::vector<size_t>> nbr(n);  // column indices of the 1-entries
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (a[i][j] != 0) nbr[i].push_back(j);

    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;

    std::vector<mpz_class> c(n + 1);
    c[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<mpz_class>> am(n, std::vector<mpz_class>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t l : nbr[i])
                for (size_t j = 0; j < n; ++j) am[i][j] += m[l][j];
        mpz_class tr = 0;
        for (size_t i = 0; i < n; ++i) tr += am[i][i];
        if (tr % static_cast<long>(k) != 0)
            throw Error("internal characteristic-polynomial error: inexact trace division");
        c[k] = -(tr / static_cast<long>(k));
        if (k < n) {
            m = std::move(am);
            for (size_t i = 0; i < n; ++i) m[i][i] += c[k];
        }
    }
    return c;
}

// Rational polynomial, coefficients in descending powers, leading one nonzero
// (the empty vector is the zero polynomial). Used only for the square-free
// decomposition below; monic divisors of a monic integer polynomial have
// integer coefficients again, so the rational detour is exact bookkeeping.
using QPoly = std::vector<mpq_class>;

QPoly q_trim(QPoly p) {
    size_t lead = 0;
    while (lead < p.size() && p[lead] == 0) ++lead;
    p.erase(p.begin(), p.begin() + static_cast<ptrdiff_t>(lead));
    return p;
}

QPoly q_monic(QPoly p) {
    p = q_trim(std::move(p));
    if (!p.empty() && p[0] != 1) {
        const mpq_class lead = p[0];
        for (mpq_class& c : p) c /= lead;
    }
    return p;
}

QPoly q_derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    const size_t deg = p.size() - 1;
    QPoly d(deg);
    for (size_t k = 0; k < deg; ++k)
        d[k] = p[k] * mpq_class(static_cast<unsigned long>(deg - k));
    return q_trim(std::move(d));
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t k = 0; k < a.size(); ++k) r[r.size() - a.size() + k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) r[r.size() - b.size() + k] -= b[k];
    return q_trim(std::move(r));
}

// Long division; quotient and remainder, both trimmed.
std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
    a = q_trim(std::move(a));
    if (b.empty()) throw Error("internal polynomial division by zero");
    if (a.size() < b.size()) return {{}, std::move(a)};
    QPoly quot(a.size() - b.size() + 1, mpq_class(0));
    for (size_t k = 0; k + b.size() <= a.size(); ++k) {
        const mpq_class f = a[k] / b[0];
        quot[k] = f;
        if (f != 0)
            for (size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
    }
    QPoly rem(a.end() - static_cast<ptrdiff_t>(b.size() - 1), a.end());
    return {q_trim(std::move(quot)), q_trim(std::move(rem))};
}

QPoly q_div_exact(const QPoly& a, const QPoly& b) {
    auto [quot, rem] = q_divmod(a, b);
    if (!rem.empty()) throw Error("internal square-free decomposition error: inexact division");
    return quot;
}

QPoly q_gcd(QPoly a, QPoly b) {
    a = q_monic(std::move(a));
    b = q_monic(std::move(b));
    while (!b.empty()) {
        QPoly r = q_divmod(a, b).second;
        a = std::move(b);
        b = q_monic(std::move(r));
    }
    return a;  // monic, or empty when both inputs were zero
}

// Yun's square-free decomposition of a monic integer polynomial: returns
// pairwise-coprime monic integer factors with their exact multiplicities,
// p = prod factor_i ^ mult_i. The root iteration then only ever meets simple
// roots, where it converges quadratically; repeated roots would stall it at a
// precision-dependent plateau.
std::vector<std::pair<std::vector<mpz_class>, int>> square_free_decompose(
    const std::vector<mpz_class>& coeff) {
    QPoly p(coeff.size());
    for (size_t k = 0; k < coeff.size(); ++k) p[k] = mpq_class(coeff[k]);

    auto to_integer = [](const QPoly& f) {
        std::vector<mpz_class> zf(f.size());
        for (size_t k = 0; k < f.size(); ++k) {
            if (f[k].get_den() != 1)
                throw Error("internal square-free decomposition error: non-integer factor");
            zf[k] = f[k].get_num();
        }
        return zf;
    };

    std::vector<std::pair<std::vector<mpz_class>, int>> out;
    const QPoly dp = q_derivative(p);
    const QPoly g = q_gcd(p, dp);
    if (g.size() <= 1) {
        out.emplace_back(to_integer(q_monic(std::move(p))), 1);
        return out;
    }
    QPoly b = q_div_exact(p, g);
    QPoly d = q_sub(q_div_exact(dp, g), q_derivative(b));
    for (int i = 1; b.size() > 1; ++i) {
        const QPoly a = q_gcd(b, d);
        if (a.size() > 1) out.emplace_back(to_integer(a), i);
        b = q_div_exact(b, a);
        d = q_sub(q_div_exact(d, a), q_derivative(b));
    }
    return out;
}

struct Cmpf {
    mpf_class re, im;
};

Cmpf operator-(const Cmpf& a, const Cmpf& b) { return {a.re - b.re, a.im - b.im}; }
Cmpf operator*(const Cmpf& a, const Cmpf& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cmpf operator/(const Cmpf& a, const Cmpf& b) {
    mpf_class d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class abs(const Cmpf& a) {
    mpf_class d = a.re * a.re + a.im * a.im;
    return sqrt(d);
}

// Simultaneous root iteration on a monic integer polynomial with no zero and
// no repeated roots (callers deflate zeros and split off multiplicities
// exactly first; on simple roots the iteration converges quadratically).
// Deterministic start: points on a circle of radius min(Cauchy bound,
// Fujiwara bound) with a fixed phase offset, updated in place each sweep.
// Extended precision keeps the step/residual tolerances honest for clustered
// roots of high-degree factors.
std::vector<Complex> durand_kerner(const std::vector<mpz_class>& coeff) {
    const size_t deg = coeff.size() - 1;
    mpf_set_default_prec(kMpfBits);

    double max_abs = 0, fujiwara = 0;
    for (size_t k = 1; k <= deg; ++k) {
        double ck = std::abs(mpz_get_d(coeff[k].get_mpz_t()));
        max_abs = std::max(max_abs, ck);
        fujiwara = std::max(fujiwara, std::pow(ck, 1.0 / static_cast<double>(k)));
    }
    const double radius = std::min(1.0 + max_abs, 2.0 * fujiwara);

    std::vector<mpf_class> cf(deg + 1);
    for (size_t k = 0; k <= deg; ++k) cf[k] = mpf_class(coeff[k]);

    std::vector<Cmpf> z(deg);
    for (size_t j = 0; j < deg; ++j) {
        double theta = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(deg) + 0.4;
        z[j] = {mpf_class(radius * std::cos(theta)), mpf_class(radius * std::sin(theta))};
    }

    auto horner = [&](const Cmpf& x) {
        Cmpf acc{cf[0], mpf_class(0)};
        for (size_t k = 1; k <= deg; ++k) {
            acc = acc * x;
            acc.re += cf[k];
        }
        return acc;
    };

    bool converged = false;
    mpf_class worst_step;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        mpf_class max_step = 0, max_mod = 0;
        for (size_t i = 0; i < deg; ++i) {
            Cmpf den{mpf_class(1), mpf_class(0)};
            for (size_t j = 0; j < deg; ++j)
                if (j != i) den = den * (z[i] - z[j]);
            if (den.re == 0 && den.im == 0) {
                // Deterministic nudge off a collision (not observed in
                // practice for these polynomials).
                z[i].re += mpf_class(radius * 1e-18);
                continue;
            }
            Cmpf dz = horner(z[i]) / den;
            z[i] = z[i] - dz;
            mpf_class step = abs(dz), mod = abs(z[i]);
            if (step > max_step) max_step = step;
            if (mod > max_mod) max_mod = mod;
        }
        worst_step = max_step;
        converged = max_step < mpf_class(kStepTol) * (1 + max_mod);
    }
    if (!converged) {
        char step_text[32];
        snprintf(step_text, sizeof step_text, "%.3e", mpf_get_d(worst_step.get_mpf_t()));
        throw Error("eigenvalue iteration did not converge within " + std::to_string(kMaxSweeps) +
                    " sweeps (last step size " + step_text + ")");
    }

    for (size_t i = 0; i < deg; ++i) {
        mpf_class num = abs(horner(z[i]));
        mpf_class zi = abs(z[i]);
        mpf_class scale = 0, power = 1;  // sum of |c_k| |z|^(deg-k), built upward
        for (size_t k = deg + 1; k-- > 0;) {
            scale += ::abs(cf[k]) * power;
            if (k > 0) power *= zi;
        }
        if (!(num < mpf_class(kResidualTol) * scale))
            throw Error("eigenvalue iteration residual too large: " +
                        std::to_string(mpf_get_d(mpf_class(num / scale).get_mpf_t())));
    }

    std::vector<Complex> roots(deg);
    for (size_t i = 0; i < deg; ++i)
        roots[i] = Complex(mpf_get_d(z[i].re.get_mpf_t()), mpf_get_d(z[i].im.get_mpf_t()));
    return roots;
}

}  // namespace

std::pair<Complex, Complex> step_map(Complex z) {
    Complex w = std::sqrt(z * z + 4.0 * (z + 1.0) * (z + 1.0));
    return {(z + w) / 2.0, (z - w) / 2.0};
}

std::vector<std::vector<int>> adjacency_matrix(const Digraph& g) {
    const NodeId n = g.node_count();
    if (n < 1 || n > kSpectralNodeBound)
        throw Error("adjacency matrix limited to 1.." + std::to_string(kSpectralNodeBound) +
                    " nodes; got " + std::to_string(n));
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.out_neighbors(u)) a[u][v] = 1;
    return a;
}

std::vector<std::vector<int>> compose_adjacency(const std::vector<std::vector<int>>& a) {
    const size_t n = a.size();
    if (n < 1 || n > kSpectralNodeBound)
        throw Error("matrix composition limited to 1.." + std::to_string(kSpectralNodeBound) +
                    " nodes; got " + std::to_string(n));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error("matrix composition requires a square matrix");
        for (size_t j = 0; j < n; ++j) {
            if (a[i][j] != 0 && a[i][j] != 1) throw Error("matrix entries must be 0 or 1");
            if (i == j && a[i][j] != 0) throw Error("adjacency matrices have zero diagonal");
        }
    }
    std::vector<std::vector<int>> b(2 * n, std::vector<int>(2 * n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int plus_i = a[i][j] + (i == j ? 1 : 0);
            b[i][j] = a[i][j];
            b[i][n + j] = plus_i;
            b[n + i][j] = plus_i;
        }
    return b;
}

Spectrum initial_spectrum(const Digraph& g) {
    std::vector<mpz_class> coeff = characteristic_polynomial(adjacency_matrix(g));

    // Zero roots correspond to trailing zero coefficients; deflate them
    // exactly so the residual scale stays meaningful.
    size_t deg = coeff.size() - 1;
    size_t zero_roots = 0;
    while (deg > 0 && coeff[deg] == 0) {
        --deg;
        ++zero_roots;
    }
    coeff.resize(deg + 1);

    std::vector<Complex> values;
    if (deg > 0) {
        for (const auto& [factor, mult] : square_free_decompose(coeff))
            for (const Complex& root : durand_kerner(factor))
                values.insert(values.end(), static_cast<size_t>(mult), root);
    }
    values.insert(values.end(), zero_roots, Complex(0.0, 0.0));
    if (values.size() != g.node_count())
        throw Error("internal eigenvalue bookkeeping error: " + std::to_string(values.size()) +
                    " values for " + std::to_string(g.node_count()) + " nodes");
    std::sort(values.begin(), values.end(), complex_less);
    return Spectrum{std::move(values), 0, false};
}

Spectrum spectrum_iterate(const Spectrum& s0, uint32_t t, int64_t max_values) {
    if (s0.normalized)
        throw Error("cannot iterate a normalized spectrum; iterate first, then normalize");
    int64_t target = static_cast<int64_t>(s0.values.size());
    for (uint32_t s = 0; s < t; ++s) {
        target = checked_mul(target, 2);
        if (target > max_values)
            throw Error("spectrum memory guard exceeded: " + std::to_string(target) +
                        " values (cap " + std::to_string(max_values) + ")");
    }
    if (t == 0) return s0;

    std::vector<Complex> values = s0.values;
    for (uint32_t s = 0; s < t; ++s) {
        std::vector<Complex> next;
        next.reserve(values.size() * 2);
        for (Complex z : values) {
            auto [plus, minus] = step_map(z);
            next.push_back(plus);
            next.push_back(minus);
        }
        values.swap(next);
    }
    std::sort(values.begin(), values.end(), complex_less);
    return Spectrum{std::move(values), s0.t + t, false};
}

Spectrum normalize_spectrum(const Spectrum& s) {
    if (s.normalized) throw Error("spectrum is already normalized");
    const double factor = std::pow(kGoldenRatio, static_cast<double>(s.t));
    Spectrum out{s.values, s.t, true};
    for (Complex& z : out.values) z /= factor;
    return out;
}

CurveSample curve_sample(uint32_t t, uint32_t m, bool normalized, int64_t max_points) {
    if (m < 1) throw Error("curve sampling needs at least one seed point");
    if (static_cast<int64_t>(m) > max_points)
        throw Error("curve memory guard exceeded: " + std::to_string(m) + " seeds (cap " +
                    std::to_string(max_points) + ")");

    std::vector<Complex> points;
    points.reserve(m);
    for (uint32_t k = 0; k < m; ++k) {
        double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
        points.emplace_back(std::cos(theta), std::sin(theta));
    }

    bool thinned = false;
    for (uint32_t step = 0; step < t; ++step) {
        const int64_t doubled = checked_mul(static_cast<int64_t>(points.size()), 2);
        std::vector<Complex> next;
        if (doubled <= max_points) {
            next.reserve(static_cast<size_t>(doubled));
            for (Complex z : points) {
                auto [plus, minus] = step_map(z);
                next.push_back(plus);
                next.push_back(minus);
            }
        } else {
            // Keep the first point landing in each cell of a grid whose pitch
            // tracks the per-step growth factor; this preserves every
            // occupied cell of the (normalized) picture while bounding the
            // population.
            thinned = true;
            const double h = 2e-4 * std::pow(kGoldenRatio, static_cast<double>(step + 1));
            std::unordered_set<uint64_t> cells;
            cells.reserve(static_cast<size_t>(max_points / 4));
            auto consider = [&](Complex c) {
                const auto cx = static_cast<int64_t>(std::floor(c.real() / h));
                const auto cy = static_cast<int64_t>(std::floor(c.imag() / h));
                const uint64_t key =
                    (static_cast<uint64_t>(cx) << 32) ^ (static_cast<uint64_t>(cy) & 0xffffffffu);
                if (cells.insert(key).second) next.push_back(c);
            };
            for (Complex z : points) {
                auto [plus, minus] = step_map(z);
                consider(plus);
                consider(minus);
            }
            if (static_cast<int64_t>(next.size()) > max_points)
                throw Error("curve memory guard exceeded: " + std::to_string(next.size()) +
                            " occupied cells after thinning (cap " + std::to_string(max_points) +
                            ")");
        }
        points.swap(next);
    }

    if (normalized) {
        const double factor = std::pow(kGoldenRatio, static_cast<double>(t));
        for (Complex& z : points) z /= factor;
    }
    std::sort(points.begin(), points.end(), complex_less);
    return CurveSample{std::move(points), t, m, normalized, thinned};
}

double spectrum_match_error(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size())
        throw Error("spectrum comparison requires equal cardinalities (" +
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    auto by_modulus_phase = [](const Complex& x, const Complex& y) {
        double mx = std::abs(x), my = std::abs(y);
        if (mx != my) return mx < my;
        double px = std::arg(x), py = std::arg(y);
        if (px != py) return px < py;
        return complex_less(x, y);
    };
    std::vector<Complex> sa = a, sb = b;
    std::sort(sa.begin(), sa.end(), by_modulus_phase);
    std::sort(sb.begin(), sb.end(), by_modulus_phase);

    std::vector<bool> used(sb.size(), false);
    double worst = 0;
    for (const Complex& x : sa) {
        size_t best = sb.size();
        double best_d = 0;
        for (size_t j = 0; j < sb.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(x - sb[j]);
            if (best == sb.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

}  // namespace ildt
