#pragma once

// Symmetric growth dimension: length providers n -> l(Sym^n X) and a
// finite-n estimator for limsup log l(Sym^{<=n} X) / log n.

#include "verlab/arith.hpp"
#include "verlab/charlab.hpp"
#include "verlab/decompose.hpp"
#include "verlab/error.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace verlab {

/// Composition length of the Weyl module of highest weight m, by splitting
/// its character into simple characters.
inline std::int64_t nabla_length(Prime p, std::int64_t m)
{
    return decompose(weyl_char(m), Basis::simple(p)).total_length();
}

/// l(nabla(m)) for m = 0..m_max via the digit recursion. Writing
/// m = m0 + p m1 with 0 <= m0 < p:
///   l(m) = l(m1)                 if m0 = p-1,
///   l(m) = l(m1) + l(m1 - 1)     otherwise (l(-1) = 0),
/// with l(m) = 1 for m < p.
inline std::vector<BigInt> nabla_lengths(Prime p, std::int64_t m_max)
{
    std::vector<BigInt> len(static_cast<std::size_t>(std::max<std::int64_t>(m_max + 1, 0)));
    const std::int64_t q = p.value();
    for (std::int64_t m = 0; m <= m_max; ++m) {
        if (m < q) {
            len[static_cast<std::size_t>(m)] = 1;
            continue;
        }
        const std::int64_t m0 = m % q;
        const std::int64_t m1 = m / q;
        BigInt l = len[static_cast<std::size_t>(m1)];
        if (m0 != q - 1)
            l += len[static_cast<std::size_t>(m1 - 1)];
        len[static_cast<std::size_t>(m)] = std::move(l);
    }
    return len;
}

/// Partition numbers p(0..n_max) by Euler's pentagonal recurrence.
inline std::vector<BigInt> partition_counts(std::int64_t n_max)
{
    std::vector<BigInt> p(static_cast<std::size_t>(std::max<std::int64_t>(n_max + 1, 0)));
    if (n_max < 0)
        return p;
    p[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        BigInt total = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                term += p[static_cast<std::size_t>(n - g2)];
            if (k % 2 == 1)
                total += term;
            else
                total -= term;
        }
        p[static_cast<std::size_t>(n)] = std::move(total);
    }
    return p;
}

inline BigInt partition_count(std::int64_t n)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "partition count of a negative integer");
    return partition_counts(n).back();
}

enum class ProviderKind { Binomial, Partitions, Sl2Sym, Constant, Table };

inline std::string_view provider_kind_name(ProviderKind kind)
{
    switch (kind) {
    case ProviderKind::Binomial: return "binomial";
    case ProviderKind::Partitions: return "partitions";
    case ProviderKind::Sl2Sym: return "sl2_sym";
    case ProviderKind::Constant: return "constant";
    case ProviderKind::Table: return "table";
    }
    return "?";
}

/// Source of l(Sym^n X) for n = 0, 1, 2, ...
class LengthProvider {
public:
    /// Returns l(Sym^n X) for n = 0..n_max.
    using Generator = std::function<std::vector<BigInt>(std::int64_t)>;

    LengthProvider(std::string name, ProviderKind kind, Generator generator, std::optional<std::int64_t> hom_dim = std::nullopt)
        : name_(std::move(name)), kind_(kind), generator_(std::move(generator)), hom_dim_(hom_dim)
    {
    }

    /// Polynomial ring in m variables: l(Sym^n) = C(n+m-1, m-1).
    static LengthProvider binomial(std::int64_t m)
    {
        if (m < 0)
            throw Error(ErrorCode::InvalidArgument, "binomial provider needs m >= 0");
        return {"binomial(" + std::to_string(m) + ")", ProviderKind::Binomial, [m](std::int64_t n_max) {
                    std::vector<BigInt> out(static_cast<std::size_t>(n_max + 1));
                    out[0] = 1;
                    for (std::int64_t n = 1; n <= n_max; ++n)
                        out[static_cast<std::size_t>(n)] = (m == 0) ? BigInt(0) : out[static_cast<std::size_t>(n - 1)] * (n + m - 1) / n;
                    return out;
                }};
    }

    /// l(Sym^n X) = number of partitions of n.
    static LengthProvider partitions()
    {
        return {"partitions", ProviderKind::Partitions, [](std::int64_t n_max) { return partition_counts(n_max); }};
    }

    /// Natural representation V of SL2 in characteristic p: Sym^n V = nabla(n).
    static LengthProvider sl2_sym(Prime p)
    {
        return {"sl2_sym(" + std::to_string(p.value()) + ")", ProviderKind::Sl2Sym,
                [p](std::int64_t n_max) { return nabla_lengths(p, n_max); }};
    }

    /// l(Sym^n X) = 1 for all n.
    static LengthProvider constant()
    {
        return {"constant", ProviderKind::Constant,
                [](std::int64_t n_max) { return std::vector<BigInt>(static_cast<std::size_t>(n_max + 1), BigInt(1)); }};
    }

    /// Finite table of lengths starting at n = 0.
    static LengthProvider from_table(std::string name, std::vector<BigInt> lengths)
    {
        if (lengths.empty())
            throw Error(ErrorCode::InvalidArgument, "empty length table");
        return {std::move(name), ProviderKind::Table, [lengths = std::move(lengths)](std::int64_t n_max) {
                    if (n_max >= static_cast<std::int64_t>(lengths.size()))
                        throw Error(ErrorCode::InvalidArgument, "length table stops at n = " + std::to_string(lengths.size() - 1));
                    return std::vector<BigInt>(lengths.begin(), lengths.begin() + n_max + 1);
                }};
    }

    /// CSV with header `n,length` and rows n = 0, 1, 2, ... in order.
    static LengthProvider from_csv(std::istream& in, std::string name)
    {
        std::string line;
        if (!std::getline(in, line))
            throw Error(ErrorCode::ParseError, "empty CSV");
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line != "n,length")
            throw Error(ErrorCode::ParseError, "expected header 'n,length', got '" + line + "'");
        std::vector<BigInt> lengths;
        std::int64_t row = 1;
        while (std::getline(in, line)) {
            ++row;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw Error(ErrorCode::ParseError, "row " + std::to_string(row) + ": missing comma");
            try {
                const std::int64_t n = std::stoll(line.substr(0, comma));
                if (n != static_cast<std::int64_t>(lengths.size()))
                    throw Error(ErrorCode::ParseError, "row " + std::to_string(row) + ": expected n = " + std::to_string(lengths.size()));
                lengths.emplace_back(line.substr(comma + 1));
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, "row " + std::to_string(row) + ": malformed '" + line + "'");
            }
        }
        return from_table(std::move(name), std::move(lengths));
    }

    const std::string& name() const noexcept { return name_; }
    ProviderKind kind() const noexcept { return kind_; }
    const std::optional<std::int64_t>& hom_dim() const noexcept { return hom_dim_; }

    LengthProvider with_hom_dim(std::int64_t d) const
    {
        LengthProvider copy = *this;
        copy.hom_dim_ = d;
        return copy;
    }

    /// l(Sym^n X), n = 0..n_max, checked: l(Sym^0) = 1 and no negative lengths.
    std::vector<BigInt> lengths(std::int64_t n_max) const
    {
        if (n_max < 0)
            throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
        auto out = generator_(n_max);
        if (static_cast<std::int64_t>(out.size()) != n_max + 1)
            throw Error(ErrorCode::InvalidArgument, "provider returned the wrong number of lengths");
        if (out[0] != 1)
            throw Error(ErrorCode::InvalidArgument, "l(Sym^0) must be 1");
        for (const auto& l : out)
            if (l < 0)
                throw Error(ErrorCode::InvalidArgument, "negative length");
        return out;
    }

    /// l(Sym^{<=n} X), n = 0..n_max.
    std::vector<BigInt> cumulative(std::int64_t n_max) const
    {
        auto out = lengths(n_max);
        for (std::size_t i = 1; i < out.size(); ++i)
            out[i] += out[i - 1];
        return out;
    }

private:
    std::string name_;
    ProviderKind kind_;
    Generator generator_;
    std::optional<std::int64_t> hom_dim_;
};

/// Thresholds used to label an estimate.
struct GrowthConfig {
    /// exponential when l(Sym^n)^(1/n) exceeds 1 + this at the last sample...
    double exponential_ratio = 1e-3;
    /// ...and the per-degree rate log l(Sym^n) / n has not decayed below this
    /// fraction of its value at n/2 (e^(c sqrt n) decays by 1/sqrt 2 per doubling).
    double exponential_persistence = 0.9;
    /// superpolynomial when, per doubling of n, both the log-ratio estimate and
    /// the local slope (log s_n - log s_{n/2}) / log 2 still grow by more than this
    double slope_drift = 0.05;
    /// samples used by the tail fit
    std::size_t tail = 5;
};

enum class GrowthClass { Polynomial, Superpolynomial, Exponential };

inline std::string_view growth_class_name(GrowthClass c)
{
    switch (c) {
    case GrowthClass::Polynomial: return "polynomial";
    case GrowthClass::Superpolynomial: return "superpolynomial";
    case GrowthClass::Exponential: return "exponential";
    }
    return "?";
}

struct GrowthSample {
    std::int64_t n;
    BigInt cumulative;
    double estimate; // log cumulative / log n
};

struct GrowthEstimate {
    std::vector<GrowthSample> samples;
    double final_value = 0.0;
    GrowthClass classification = GrowthClass::Polynomial;
    std::string diagnostics;
};

/// Samples log l(Sym^{<=n}) / log n at n = 2, 4, ..., 2^K <= n_max. The final
/// value is the intercept of the least-squares line through the last `tail`
/// samples as a function of 1/log n, which removes the constant term of
/// log l(Sym^{<=n}) ~ d log n + C.
inline GrowthEstimate sgd_estimate(const LengthProvider& provider, std::int64_t n_max, const GrowthConfig& config = {})
{
    if (n_max < 16)
        throw Error(ErrorCode::InvalidArgument, "n_max must be at least 16");
    const auto lengths = provider.lengths(n_max);
    std::vector<BigInt> cumulative = lengths;
    for (std::size_t i = 1; i < cumulative.size(); ++i)
        cumulative[i] += cumulative[i - 1];

    GrowthEstimate out;
    for (std::int64_t n = 2; n <= n_max; n *= 2) {
        const auto& s = cumulative[static_cast<std::size_t>(n)];
        out.samples.push_back({n, s, log_big(s) / std::log(static_cast<double>(n))});
    }

    const std::size_t k = std::min(config.tail, out.samples.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = out.samples.size() - k; i < out.samples.size(); ++i) {
        const double x = 1.0 / std::log(static_cast<double>(out.samples[i].n));
        const double y = out.samples[i].estimate;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double kk = static_cast<double>(k);
    const double slope = (kk * sxy - sx * sy) / (kk * sxx - sx * sx);
    out.final_value = (sy - slope * sx) / kk;

    const std::int64_t n_last = out.samples.back().n;
    const auto& l_last = lengths[static_cast<std::size_t>(n_last)];
    const auto& l_half = lengths[static_cast<std::size_t>(n_last / 2)];
    const double rate_last = log_big(l_last) / static_cast<double>(n_last);
    const double rate_half = log_big(l_half) / static_cast<double>(n_last / 2);
    const std::size_t last = out.samples.size() - 1;
    const double drift = out.samples[last].estimate - out.samples[last - 1].estimate;
    auto local_slope = [&](std::size_t i) {
        return (log_big(out.samples[i].cumulative) - log_big(out.samples[i - 1].cumulative)) / std::log(2.0);
    };
    const double slope_drift = local_slope(last) - local_slope(last - 1);

    std::ostringstream diag;
    diag << "tail n=" << n_last << " root=" << std::exp(rate_last) << " rate_ratio="
         << (rate_half > 0 ? rate_last / rate_half : 0.0) << " drift=" << drift << " local_slope=" << local_slope(last)
         << " local_slope_drift=" << slope_drift << " fit_slope=" << slope;

    if (rate_last > std::log1p(config.exponential_ratio) && rate_half > 0 &&
        rate_last >= config.exponential_persistence * rate_half) {
        out.classification = GrowthClass::Exponential;
    } else if (drift > config.slope_drift && slope_drift > config.slope_drift) {
        out.classification = GrowthClass::Superpolynomial;
    } else {
        out.classification = GrowthClass::Polynomial;
    }
    diag << " class=" << growth_class_name(out.classification);
    out.diagnostics = diag.str();
    return out;
}

enum class EqualityVerdict { Holds, StrictGap, Inconclusive };

inline std::string_view verdict_name(EqualityVerdict v)
{
    switch (v) {
    case EqualityVerdict::Holds: return "Holds";
    case EqualityVerdict::StrictGap: return "StrictGap";
    case EqualityVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct MnReport {
    GrowthEstimate estimate;
    double sgd = 0.0; // +inf for non-polynomial growth
    std::int64_t hom_dim = 0;
    bool inequality_ok = false;
    EqualityVerdict verdict = EqualityVerdict::Inconclusive;
};

/// Compares the estimated sgd with dim Hom(X, 1): the inequality
/// dim Hom(X, 1) <= sgd(X) must hold, and equality is the maximal-nilpotence
/// condition at X.
inline MnReport mn_diagnostic(const LengthProvider& provider, std::int64_t n_max, const GrowthConfig& config = {})
{
    if (!provider.hom_dim())
        throw Error(ErrorCode::MissingHomDim, "provider " + provider.name() + " has no dim Hom(X, 1)");
    constexpr double tolerance = 0.05;
    MnReport r;
    r.estimate = sgd_estimate(provider, n_max, config);
    r.hom_dim = *provider.hom_dim();
    r.sgd = r.estimate.classification == GrowthClass::Polynomial ? r.estimate.final_value
                                                                   : std::numeric_limits<double>::infinity();
    const double h = static_cast<double>(r.hom_dim);
    r.inequality_ok = r.sgd >= h - tolerance;
    if (std::abs(r.sgd - h) <= tolerance)
        r.verdict = EqualityVerdict::Holds;
    else if (r.sgd > h + tolerance)
        r.verdict = EqualityVerdict::StrictGap;
    else
        r.verdict = EqualityVerdict::Inconclusive;
    return r;
}

} // namespace verlab
