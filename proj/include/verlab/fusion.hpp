#pragma once

// Fusion ring of Ver_p: the semisimplification of tilting modules, with
// simples L_0 .. L_{p-2}.

#include "verlab/arith.hpp"
#include "verlab/charlab.hpp"
#include "verlab/tiltring.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace verlab {

namespace detail {

inline void check_verp_index(Prime p, std::int64_t a)
{
    if (a < 0 || a > p.value() - 2)
        throw Error(ErrorCode::IndexOutOfRange,
                    "L_" + std::to_string(a) + " is not a simple of Ver_" + std::to_string(p.value()));
}

// The oracles also take the label p-1: T_{p-1} dies in Ver_p, so every
// coefficient involving it is 0 (its S-matrix row vanishes).
inline void check_oracle_label(Prime p, std::int64_t a)
{
    if (a < 0 || a > p.value() - 1)
        throw Error(ErrorCode::IndexOutOfRange,
                    "label " + std::to_string(a) + " is outside 0.." + std::to_string(p.value() - 1));
}

} // namespace detail

/// Multiset of simples of Ver_p with arbitrary-precision multiplicities.
class FusionElement {
public:
    explicit FusionElement(Prime p) : p_(p), mults_(static_cast<std::size_t>(p.value() - 1)) {}

    static FusionElement simple(Prime p, std::int64_t a, BigInt mult = 1)
    {
        FusionElement x(p);
        x.add(a, std::move(mult));
        return x;
    }

    Prime prime() const noexcept { return p_; }
    std::int64_t rank() const noexcept { return static_cast<std::int64_t>(mults_.size()); }

    const BigInt& mult(std::int64_t a) const
    {
        detail::check_verp_index(p_, a);
        return mults_[static_cast<std::size_t>(a)];
    }

    void add(std::int64_t a, const BigInt& mult)
    {
        detail::check_verp_index(p_, a);
        if (mult < 0)
            throw Error(ErrorCode::InvalidArgument, "fusion multiplicities are non-negative");
        mults_[static_cast<std::size_t>(a)] += mult;
    }

    /// Composition length: sum of multiplicities.
    BigInt length() const
    {
        BigInt total = 0;
        for (const auto& m : mults_)
            total += m;
        return total;
    }

    const std::vector<BigInt>& mults() const noexcept { return mults_; }

    friend bool operator==(const FusionElement&, const FusionElement&) = default;

private:
    Prime p_;
    std::vector<BigInt> mults_;
};

/// L_a (x) L_b, computed by splitting T_a (x) T_b into tiltings and dropping
/// the negligible summands T_m with m >= p-1.
inline FusionElement fuse(Prime p, std::int64_t a, std::int64_t b)
{
    detail::check_verp_index(p, a);
    detail::check_verp_index(p, b);
    FusionElement out(p);
    for (const auto& [m, mult] : tensor_decompose_tilt(p, a, b))
        if (!is_negligible(p, 1, m))
            out.add(m, mult);
    return out;
}

/// Truncated Clebsch-Gordan rule: N_ab^c = 1 iff c = a+b mod 2 and
/// |a-b| <= c <= min(a+b, 2(p-2)-(a+b)).
inline std::int64_t truncated_cg_coefficient(Prime p, std::int64_t a, std::int64_t b, std::int64_t c)
{
    detail::check_oracle_label(p, a);
    detail::check_oracle_label(p, b);
    detail::check_oracle_label(p, c);
    if (a == p.value() - 1 || b == p.value() - 1 || c == p.value() - 1)
        return 0;
    const std::int64_t lo = a > b ? a - b : b - a;
    const std::int64_t hi = std::min(a + b, 2 * (p.value() - 2) - (a + b));
    return (c >= lo && c <= hi && (a + b - c) % 2 == 0) ? 1 : 0;
}

/// N_ab^c from the Verlinde formula with S_xy = sqrt(2/p) sin((x+1)(y+1)pi/p).
inline std::int64_t verlinde_oracle(Prime p, std::int64_t a, std::int64_t b, std::int64_t c)
{
    detail::check_oracle_label(p, a);
    detail::check_oracle_label(p, b);
    detail::check_oracle_label(p, c);
    const double pp = static_cast<double>(p.value());
    const double norm = std::sqrt(2.0 / pp);
    auto s = [&](std::int64_t x, std::int64_t y) {
        return norm * std::sin(static_cast<double>((x + 1) * (y + 1)) * std::numbers::pi / pp);
    };
    double total = 0.0;
    for (std::int64_t j = 0; j <= p.value() - 2; ++j)
        total += s(a, j) * s(b, j) * s(c, j) / s(0, j);
    const double rounded = std::round(total);
    if (std::abs(total - rounded) >= 1e-6)
        throw Error(ErrorCode::NumericalInstability, "Verlinde sum " + std::to_string(total) + " is not near an integer");
    return static_cast<std::int64_t>(rounded);
}

/// Categorical dimension of L_a in F_p: (a+1) mod p.
inline std::int64_t dim_fp(Prime p, std::int64_t a)
{
    detail::check_verp_index(p, a);
    return dimension_mod(weyl_char(a), p);
}

/// Cached fusion table of Ver_p.
class FusionRing {
public:
    explicit FusionRing(Prime p) : p_(p)
    {
        const std::int64_t r = p.value() - 1;
        table_.resize(static_cast<std::size_t>(r * r), FusionElement(p));
        for (std::int64_t a = 0; a < r; ++a)
            for (std::int64_t b = 0; b < r; ++b)
                table_[static_cast<std::size_t>(a * r + b)] = fuse(p, a, b);
    }

    Prime prime() const noexcept { return p_; }
    std::int64_t rank() const noexcept { return p_.value() - 1; }

    const FusionElement& product(std::int64_t a, std::int64_t b) const
    {
        detail::check_verp_index(p_, a);
        detail::check_verp_index(p_, b);
        return table_[static_cast<std::size_t>(a * rank() + b)];
    }

    std::int64_t coefficient(std::int64_t a, std::int64_t b, std::int64_t c) const
    {
        return product(a, b).mult(c).convert_to<std::int64_t>();
    }

    FusionElement multiply(const FusionElement& x, const FusionElement& y) const
    {
        if (x.prime() != p_ || y.prime() != p_)
            throw Error(ErrorCode::InvalidArgument, "fusion elements belong to a different Ver_p");
        FusionElement out(p_);
        for (std::int64_t a = 0; a < rank(); ++a) {
            const BigInt& xa = x.mults()[static_cast<std::size_t>(a)];
            if (xa == 0)
                continue;
            for (std::int64_t b = 0; b < rank(); ++b) {
                const BigInt& yb = y.mults()[static_cast<std::size_t>(b)];
                if (yb == 0)
                    continue;
                const FusionElement& ab = product(a, b);
                const BigInt w = xa * yb;
                for (std::int64_t c = 0; c < rank(); ++c)
                    if (ab.mults()[static_cast<std::size_t>(c)] != 0)
                        out.add(c, w * ab.mults()[static_cast<std::size_t>(c)]);
            }
        }
        return out;
    }

    /// Matrix of left multiplication by L_a: entry (b, c) is N_ab^c.
    std::vector<std::vector<double>> fusion_matrix(std::int64_t a) const
    {
        std::vector<std::vector<double>> m(static_cast<std::size_t>(rank()), std::vector<double>(static_cast<std::size_t>(rank())));
        for (std::int64_t b = 0; b < rank(); ++b)
            for (std::int64_t c = 0; c < rank(); ++c)
                m[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = static_cast<double>(coefficient(a, b, c));
        return m;
    }

private:
    Prime p_;
    std::vector<FusionElement> table_;
};

/// Frobenius-Perron dimension of L_a as the top eigenvalue of its fusion matrix.
///
/// Fusion graphs of Ver_p are bipartite, so -lambda is also an eigenvalue;
/// iterating with N + I separates the top one. Stops once the relative
/// residual |Nv - lambda v| / lambda drops below 1e-10.
inline double fpdim(const FusionRing& ring, std::int64_t a, int max_iterations = 100000)
{
    const auto n = ring.fusion_matrix(a);
    const std::size_t r = n.size();
    std::vector<double> v(r, 1.0);
    std::vector<double> w(r);
    for (int it = 0; it < max_iterations; ++it) {
        double norm = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < r; ++j)
                s += n[i][j] * v[j];
            w[i] = s;
        }
        // Rayleigh quotient and residual of N itself
        double vv = 0.0, vw = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            vv += v[i] * v[i];
            vw += v[i] * w[i];
        }
        const double lambda = vw / vv;
        double res = 0.0;
        for (std::size_t i = 0; i < r; ++i)
            res += (w[i] - lambda * v[i]) * (w[i] - lambda * v[i]);
        if (std::sqrt(res / vv) <= 1e-10 * std::abs(lambda))
            return lambda;
        for (std::size_t i = 0; i < r; ++i) {
            w[i] += v[i];
            norm += w[i] * w[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < r; ++i)
            v[i] = w[i] / norm;
    }
    throw Error(ErrorCode::NonConvergence, "power iteration did not converge in " + std::to_string(max_iterations) + " steps");
}

inline double fpdim(Prime p, std::int64_t a)
{
    detail::check_verp_index(p, a);
    return fpdim(FusionRing(p), a);
}

struct GdEstimate {
    std::vector<BigInt> lengths; // l(x^n) for n = 1..n_max
    std::vector<double> roots;   // l(x^n)^(1/n)
    double final_value = 0.0;
};

/// Growth dimension estimate: the raw sequence l(x^(x)n)^(1/n), n = 1..n_max.
inline GdEstimate gd_estimate(const FusionRing& ring, const FusionElement& x, std::int64_t n_max)
{
    if (n_max < 1)
        throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
    if (x.length() == 0)
        throw Error(ErrorCode::InvalidArgument, "growth dimension of the zero object is undefined");
    GdEstimate out;
    FusionElement power = x;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (n > 1)
            power = ring.multiply(power, x);
        BigInt len = power.length();
        out.roots.push_back(std::exp(log_big(len) / static_cast<double>(n)));
        out.lengths.push_back(std::move(len));
    }
    out.final_value = out.roots.back();
    return out;
}

inline GdEstimate gd_estimate(Prime p, const FusionElement& x, std::int64_t n_max)
{
    return gd_estimate(FusionRing(p), x, n_max);
}

} // namespace verlab
