#pragma once

// Truncated power series over F_p, p-adic digit vectors, and the p-adic
// dimension Dim+ read off from the Hilbert series of a symmetric algebra:
//     HS_X(t) = (1 - t)^(-Dim+ X),   (1 - t)^d := prod_j (1 - t^(p^j))^(d_j).

#include "verlab/arith.hpp"
#include "verlab/error.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace verlab {

inline constexpr std::int64_t default_truncation = 64;

/// Power series c_0 + c_1 t + ... + c_N t^N with coefficients in F_p.
class FpSeries {
public:
    FpSeries(Prime p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw Error(ErrorCode::InvalidArgument, "a series needs at least the constant coefficient");
        for (auto& c : coeffs_)
            c = detail::mod(c, p);
    }

    /// The constant series 1 truncated at t^N.
    static FpSeries one(Prime p, std::int64_t truncation)
    {
        if (truncation < 0)
            throw Error(ErrorCode::InvalidArgument, "truncation must be non-negative");
        std::vector<std::int64_t> c(static_cast<std::size_t>(truncation + 1), 0);
        c[0] = 1;
        return FpSeries(p, std::move(c));
    }

    Prime prime() const noexcept { return p_; }
    std::int64_t truncation() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t operator[](std::int64_t i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// Highest index with a non-zero coefficient, or -1.
    std::int64_t degree() const noexcept
    {
        for (std::int64_t i = truncation(); i >= 0; --i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0)
                return i;
        return -1;
    }

    /// Sum of the stored coefficients, i.e. the value at t = 1 of the truncation.
    std::int64_t value_at_one() const noexcept
    {
        std::int64_t s = 0;
        for (auto c : coeffs_)
            s = (s + c) % p_.value();
        return s;
    }

    /// In-place multiplication by (1 - t^s).
    void mul_one_minus_tpow(std::int64_t s)
    {
        for (std::int64_t i = truncation(); i >= s; --i) {
            auto& c = coeffs_[static_cast<std::size_t>(i)];
            c = detail::mod(c - coeffs_[static_cast<std::size_t>(i - s)], p_.value());
        }
    }

    /// In-place division by (1 - t): prefix sums.
    void div_one_minus_t()
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            coeffs_[i] = (coeffs_[i] + coeffs_[i - 1]) % p_.value();
    }

    friend FpSeries operator*(const FpSeries& a, const FpSeries& b)
    {
        if (a.p_ != b.p_)
            throw Error(ErrorCode::InvalidArgument, "series over different primes");
        const std::int64_t n = std::min(a.truncation(), b.truncation());
        std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
        for (std::int64_t i = 0; i <= n; ++i) {
            if (a.coeffs_[static_cast<std::size_t>(i)] == 0)
                continue;
            for (std::int64_t j = 0; i + j <= n; ++j)
                c[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
            for (auto& x : c)
                x %= a.p_.value();
        }
        return FpSeries(a.p_, std::move(c));
    }

    friend bool operator==(const FpSeries&, const FpSeries&) = default;

private:
    Prime p_;
    std::vector<std::int64_t> coeffs_;
};

/// Element of Z_p known modulo p^M, stored as digits d_0 .. d_{M-1}.
class PadicDigits {
public:
    PadicDigits(Prime p, std::vector<std::int64_t> digits) : p_(p), digits_(std::move(digits))
    {
        for (auto d : digits_)
            if (d < 0 || d >= p.value())
                throw Error(ErrorCode::DigitOutOfRange, "p-adic digit " + std::to_string(d) + " outside [0, p)");
    }

    /// Digits of x mod p^M; negative x wrap around (e.g. -1 is all p-1).
    static PadicDigits from_int(const BigInt& x, Prime p, std::int64_t precision)
    {
        if (precision < 1)
            throw Error(ErrorCode::InvalidArgument, "precision must be at least 1");
        const BigInt modulus = boost::multiprecision::pow(BigInt(p.value()), static_cast<unsigned>(precision));
        BigInt r = x % modulus;
        if (r < 0)
            r += modulus;
        std::vector<std::int64_t> digits;
        for (std::int64_t j = 0; j < precision; ++j) {
            digits.push_back(static_cast<std::int64_t>(r % p.value()));
            r /= p.value();
        }
        return PadicDigits(p, std::move(digits));
    }

    Prime prime() const noexcept { return p_; }
    std::int64_t precision() const noexcept { return static_cast<std::int64_t>(digits_.size()); }
    const std::vector<std::int64_t>& digits() const noexcept { return digits_; }

    /// Representative in [0, p^M).
    BigInt to_unsigned() const
    {
        BigInt r = 0;
        for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
            r = r * p_.value() + *it;
        return r;
    }

    /// Representative in [-p^M / 2, p^M / 2).
    BigInt to_signed() const
    {
        const BigInt modulus = boost::multiprecision::pow(BigInt(p_.value()), static_cast<unsigned>(precision()));
        BigInt r = to_unsigned();
        if (2 * r >= modulus)
            r -= modulus;
        return r;
    }

    PadicDigits truncated(std::int64_t precision) const
    {
        if (precision > this->precision())
            throw Error(ErrorCode::InsufficientPrecision, "cannot extend a p-adic number beyond its precision");
        return PadicDigits(p_, {digits_.begin(), digits_.begin() + precision});
    }

    friend PadicDigits operator+(const PadicDigits& a, const PadicDigits& b)
    {
        if (a.p_ != b.p_)
            throw Error(ErrorCode::InvalidArgument, "p-adic numbers over different primes");
        const std::size_t m = std::min(a.digits_.size(), b.digits_.size());
        std::vector<std::int64_t> out(m);
        std::int64_t carry = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const std::int64_t s = a.digits_[j] + b.digits_[j] + carry;
            out[j] = s % a.p_.value();
            carry = s / a.p_.value();
        }
        return PadicDigits(a.p_, std::move(out));
    }

    friend PadicDigits operator-(const PadicDigits& a)
    {
        return from_int(-a.to_unsigned(), a.p_, a.precision());
    }

    friend bool operator==(const PadicDigits&, const PadicDigits&) = default;

private:
    Prime p_;
    std::vector<std::int64_t> digits_;
};

inline PadicDigits padic_of_int(const BigInt& x, Prime p, std::int64_t precision)
{
    return PadicDigits::from_int(x, p, precision);
}

/// Least M with p^M > N: the digits needed to pin (1 - t)^d modulo t^(N+1).
inline std::int64_t precision_for(Prime p, std::int64_t truncation)
{
    std::int64_t m = 0;
    BigInt power = 1;
    while (power <= truncation) {
        power *= p.value();
        ++m;
    }
    return std::max<std::int64_t>(m, 1);
}

/// Truncation from VERLAB_PREC when set to a positive integer, else 64.
inline std::int64_t truncation_from_env()
{
    if (const char* env = std::getenv("VERLAB_PREC")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw Error(ErrorCode::InvalidArgument, std::string("VERLAB_PREC must be a positive integer, got '") + env + "'");
        return v;
    }
    return default_truncation;
}

/// (1 - t)^d = prod_{p^j <= N} (1 - t^(p^j))^(d_j), truncated at t^N.
inline FpSeries one_minus_t_pow(const PadicDigits& d, std::int64_t truncation)
{
    const Prime p = d.prime();
    if (truncation < 0)
        throw Error(ErrorCode::InvalidArgument, "truncation must be non-negative");
    const BigInt reach = boost::multiprecision::pow(BigInt(p.value()), static_cast<unsigned>(d.precision()));
    if (reach <= truncation)
        throw Error(ErrorCode::InsufficientPrecision, std::to_string(d.precision()) + " digits do not determine (1-t)^d up to t^" +
                                                          std::to_string(truncation));
    FpSeries out = FpSeries::one(p, truncation);
    std::int64_t step = 1;
    for (std::int64_t j = 0; j < d.precision() && step <= truncation; ++j) {
        for (std::int64_t k = 0; k < d.digits()[static_cast<std::size_t>(j)]; ++k)
            out.mul_one_minus_tpow(step);
        step *= p.value();
    }
    return out;
}

/// Exponent e with s = (1 - t)^e, recovered one p-adic digit at a time.
/// The result has precision M with p^(M-1) <= N < p^M. Dim+ is -e.
inline PadicDigits dimplus_exponent(const FpSeries& s)
{
    const Prime p = s.prime();
    if (s.truncation() < 1)
        throw Error(ErrorCode::InsufficientPrecision, "need at least the t^1 coefficient");
    if (s[0] != 1)
        throw Error(ErrorCode::NotAPurePower, "constant coefficient is " + std::to_string(s[0]) + ", not 1");

    std::vector<std::int64_t> digits;
    std::vector<std::int64_t> cur = s.coeffs();
    while (cur.size() >= 2) {
        // (1-t)^d g(t^p) has t-coefficient -d
        const std::int64_t d = detail::mod(-cur[1], p);
        FpSeries level(p, cur);
        for (std::int64_t k = 0; k < d; ++k)
            level.div_one_minus_t();
        const auto& c = level.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (i % static_cast<std::size_t>(p.value()) != 0 && c[i] != 0)
                throw Error(ErrorCode::NotAPurePower, "after removing (1-t^" + std::to_string(detail::ipow(p, static_cast<std::int64_t>(digits.size()))) +
                                                          ")^" + std::to_string(d) + " the series is not a function of t^p");
        std::vector<std::int64_t> next;
        for (std::size_t i = 0; i < c.size(); i += static_cast<std::size_t>(p.value()))
            next.push_back(c[i]);
        digits.push_back(d);
        cur = std::move(next);
    }
    if (cur[0] != 1)
        throw Error(ErrorCode::NotAPurePower, "leftover constant is not 1");
    return PadicDigits(p, std::move(digits));
}

/// Dim+ X from its Hilbert series: the negated exponent.
inline PadicDigits dimplus_from_series(const FpSeries& hilbert)
{
    return -dimplus_exponent(hilbert);
}

/// Dim+ X = -top when Sym^top X is the last non-zero symmetric power.
inline std::int64_t dimplus_of_finite_sym(std::int64_t top)
{
    if (top < 0)
        throw Error(ErrorCode::InvalidArgument, "top symmetric degree must be non-negative");
    return -top;
}

/// Hilbert series (1 - t)^top of a finite symmetric algebra with top degree
/// `top`, truncated at t^truncation. For top >= 1 its value at t = 1 must
/// vanish in F_p (the symmetric algebra has dimension zero); a violation
/// throws InvalidArgument.
inline FpSeries finite_sym_hilbert(Prime p, std::int64_t top, std::int64_t truncation)
{
    if (top < 0)
        throw Error(ErrorCode::InvalidArgument, "top symmetric degree must be non-negative");
    const std::int64_t n = std::max(truncation, top);
    FpSeries hs = one_minus_t_pow(padic_of_int(top, p, precision_for(p, n)), n);
    if (top >= 1 && hs.value_at_one() != 0)
        throw Error(ErrorCode::InvalidArgument, "dim Sym(X) is not zero for top degree " + std::to_string(top));
    return hs;
}

namespace detail {

inline void require_p_power(Prime p, std::int64_t length)
{
    if (length < 1 || log_exact(length, p) < 0)
        throw Error(ErrorCode::NotPPower, std::to_string(length) + " is not a power of " + std::to_string(p.value()));
}

} // namespace detail

/// Dim+ of a non-split extension 0 -> 1 -> E -> V -> 0 whose image of Sym 1
/// has length `length` (a power of p):
///   Dim+ E = Dim+ V + 1 - length,   Dim+ E^dual = Dim+ V^dual + 1.
inline std::pair<BigInt, BigInt> extension_transform(Prime p, std::int64_t length, const BigInt& dimplus_v, const BigInt& dimplus_vdual)
{
    detail::require_p_power(p, length);
    return {dimplus_v + 1 - length, dimplus_vdual + 1};
}

inline std::pair<PadicDigits, PadicDigits> extension_transform(std::int64_t length, const PadicDigits& dimplus_v,
                                                              const PadicDigits& dimplus_vdual)
{
    const Prime p = dimplus_v.prime();
    detail::require_p_power(p, length);
    const auto shift_e = PadicDigits::from_int(BigInt(1 - length), p, dimplus_v.precision());
    const auto shift_d = PadicDigits::from_int(BigInt(1), p, dimplus_vdual.precision());
    return {dimplus_v + shift_e, dimplus_vdual + shift_d};
}

/// HS_E = (1 + t + ... + t^(length-1)) HS_V.
inline FpSeries extension_series(std::int64_t length, const FpSeries& hs_v)
{
    detail::require_p_power(hs_v.prime(), length);
    std::vector<std::int64_t> geometric(static_cast<std::size_t>(hs_v.truncation() + 1), 0);
    for (std::int64_t i = 0; i < length && i <= hs_v.truncation(); ++i)
        geometric[static_cast<std::size_t>(i)] = 1;
    return FpSeries(hs_v.prime(), std::move(geometric)) * hs_v;
}

/// Dim+ E computed through Hilbert series: build HS_V from Dim+ V, multiply
/// by the geometric factor and read Dim+ back off.
inline PadicDigits extension_dimplus_via_series(std::int64_t length, const PadicDigits& dimplus_v, std::int64_t truncation)
{
    const FpSeries hs_v = one_minus_t_pow(-dimplus_v, truncation);
    return dimplus_from_series(extension_series(length, hs_v));
}

/// Dimension shadow of Sym^i X = (Sym^(d-i) X)^dual (x) Sym^d X for a finite
/// symmetric algebra with top degree d: hs[i] = hs[d-i] * hs[d] in F_p.
inline bool frobenius_palindromy_check(Prime p, const std::vector<std::int64_t>& hs, std::int64_t top)
{
    if (top < 0 || static_cast<std::int64_t>(hs.size()) != top + 1)
        throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(top + 1) + " Hilbert coefficients");
    if (detail::mod(hs[0], p) != 1)
        throw Error(ErrorCode::InvalidArgument, "Sym^0 must have dimension 1");
    const std::int64_t last = detail::mod(hs[static_cast<std::size_t>(top)], p);
    if (last != 1 && last != p.value() - 1)
        throw Error(ErrorCode::BadTopDim, "top dimension " + std::to_string(last) + " is not +-1 mod p");
    for (std::int64_t i = 0; i <= top; ++i)
        if (detail::mod(hs[static_cast<std::size_t>(i)], p) !=
            detail::mod(hs[static_cast<std::size_t>(top - i)] * last, p))
            return false;
    return true;
}

} // namespace verlab
