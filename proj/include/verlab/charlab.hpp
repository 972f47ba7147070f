#pragma once

// Character ring of SL2. A character is a symmetric Laurent polynomial in q,
// stored folded: the coefficient at weight w > 0 multiplies q^w + q^-w and the
// coefficient at weight 0 is the constant term.

#include "verlab/arith.hpp"
#include "verlab/error.hpp"
#include "verlab/memo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace verlab {

template <class Coeff>
class BasicCharacter {
public:
    struct Term {
        std::int64_t weight;
        Coeff coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    BasicCharacter() = default;

    static BasicCharacter unit() { return orbit(0, Coeff{1}); }

    /// coeff * (q^w + q^-w), or coeff alone when w == 0.
    static BasicCharacter orbit(std::int64_t weight, Coeff coeff = Coeff{1})
    {
        BasicCharacter c;
        c.add_term(weight, std::move(coeff));
        return c;
    }

    static BasicCharacter from_terms(const std::vector<Term>& terms)
    {
        BasicCharacter c;
        for (const auto& t : terms)
            c.add_term(t.weight, t.coeff);
        return c;
    }

    /// Terms with non-zero coefficient, sorted by increasing weight.
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }

    /// Highest weight with a non-zero coefficient, or -1 for the zero character.
    std::int64_t top_weight() const noexcept { return terms_.empty() ? -1 : terms_.back().weight; }

    Coeff coeff(std::int64_t weight) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), weight,
                                   [](const Term& t, std::int64_t w) { return t.weight < w; });
        return (it != terms_.end() && it->weight == weight) ? it->coeff : Coeff{0};
    }

    void add_term(std::int64_t weight, Coeff coeff)
    {
        if (weight < 0)
            throw Error(ErrorCode::InvalidArgument, "folded character weights must be non-negative");
        if (coeff == 0)
            return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), weight,
                                   [](const Term& t, std::int64_t w) { return t.weight < w; });
        if (it != terms_.end() && it->weight == weight) {
            it->coeff = detail::checked_add(it->coeff, coeff);
            if (it->coeff == 0)
                terms_.erase(it);
        } else {
            terms_.insert(it, Term{weight, std::move(coeff)});
        }
    }

    BasicCharacter& operator+=(const BasicCharacter& other) { return merge(other, Coeff{1}); }
    BasicCharacter& operator-=(const BasicCharacter& other) { return merge(other, Coeff{-1}); }

    friend BasicCharacter operator+(BasicCharacter a, const BasicCharacter& b) { return a += b; }
    friend BasicCharacter operator-(BasicCharacter a, const BasicCharacter& b) { return a -= b; }

    friend BasicCharacter operator*(const BasicCharacter& a, const BasicCharacter& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        const std::int64_t span = detail::checked_add(a.top_weight(), b.top_weight());
        const auto pairs = static_cast<std::int64_t>(a.terms_.size() * b.terms_.size());
        if (span <= 4 * pairs + 4096)
            return multiply_into(a, b, std::vector<Coeff>(static_cast<std::size_t>(span + 1), Coeff{0}));
        return multiply_into(a, b, std::map<std::int64_t, Coeff>{});
    }

    BasicCharacter scaled(const Coeff& factor) const
    {
        if (factor == 0)
            return {};
        BasicCharacter out = *this;
        for (auto& t : out.terms_)
            t.coeff = detail::checked_mul(t.coeff, factor);
        return out;
    }

    friend bool operator==(const BasicCharacter&, const BasicCharacter&) = default;

private:
    // Accumulates the folded product into `acc` (a dense vector or a map keyed by weight).
    template <class Acc>
    static BasicCharacter multiply_into(const BasicCharacter& a, const BasicCharacter& b, Acc acc)
    {
        auto bump = [&acc](std::int64_t w, const Coeff& v) {
            auto& slot = acc[static_cast<typename Acc::size_type>(w)];
            slot = detail::checked_add(slot, v);
        };
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                const Coeff prod = detail::checked_mul(ca, cb);
                bump(wa + wb, prod);
                if (wa == 0 || wb == 0)
                    continue;
                if (wa == wb)
                    bump(0, detail::checked_mul(Coeff{2}, prod));
                else
                    bump(wa > wb ? wa - wb : wb - wa, prod);
            }
        }
        BasicCharacter out;
        if constexpr (requires { acc.data(); }) {
            for (std::size_t w = 0; w < acc.size(); ++w)
                if (acc[w] != 0)
                    out.terms_.push_back(Term{static_cast<std::int64_t>(w), std::move(acc[w])});
        } else {
            for (auto& [w, c] : acc)
                if (c != 0)
                    out.terms_.push_back(Term{w, std::move(c)});
        }
        return out;
    }

    BasicCharacter& merge(const BasicCharacter& other, const Coeff& sign)
    {
        std::vector<Term> out;
        out.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        while (a != terms_.end() || b != other.terms_.end()) {
            if (b == other.terms_.end() || (a != terms_.end() && a->weight < b->weight)) {
                out.push_back(*a++);
            } else if (a == terms_.end() || b->weight < a->weight) {
                out.push_back(Term{b->weight, detail::checked_mul(sign, b->coeff)});
                ++b;
            } else {
                Coeff c = detail::checked_add(a->coeff, detail::checked_mul(sign, b->coeff));
                if (c != 0)
                    out.push_back(Term{a->weight, std::move(c)});
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    std::vector<Term> terms_;
};

using Character = BasicCharacter<std::int64_t>;

/// q^m + q^(m-2) + ... + q^-m.
inline Character weyl_char(std::int64_t m)
{
    if (m < 0)
        throw Error(ErrorCode::InvalidArgument, "highest weight must be non-negative");
    std::vector<Character::Term> terms;
    for (std::int64_t w = m % 2; w <= m; w += 2)
        terms.push_back({w, 1});
    return Character::from_terms(terms);
}

template <class Coeff>
BasicCharacter<Coeff> mul_chars(const BasicCharacter<Coeff>& a, const BasicCharacter<Coeff>& b)
{
    return a * b;
}

/// Substitution q -> q^p.
template <class Coeff>
BasicCharacter<Coeff> frobenius_twist(const BasicCharacter<Coeff>& c, std::int64_t p)
{
    BasicCharacter<Coeff> out;
    for (const auto& [w, coeff] : c.terms())
        out.add_term(detail::checked_mul(w, p), coeff);
    return out;
}

/// Steinberg factorisation: the product over base-p digits m_j of the j-fold
/// Frobenius twist of the Weyl character of m_j.
inline const Character& simple_char(Prime p, std::int64_t m)
{
    if (m < 0)
        throw Error(ErrorCode::InvalidArgument, "highest weight must be non-negative");
    static detail::MemoTable<std::pair<std::int64_t, std::int64_t>, Character> cache;
    return cache.get_or_compute({p.value(), m}, [&] {
        Character result = Character::unit();
        std::int64_t scale = 1;
        for (std::int64_t digit : detail::digits_lsb(m, p)) {
            if (digit != 0)
                result = result * frobenius_twist(weyl_char(digit), scale);
            scale = detail::checked_mul(scale, p.value());
        }
        return result;
    });
}

/// Value at q = 1.
template <class Coeff>
Coeff dimension(const BasicCharacter<Coeff>& c)
{
    Coeff total{0};
    for (const auto& [w, coeff] : c.terms())
        total = detail::checked_add(total, w == 0 ? coeff : detail::checked_mul(Coeff{2}, coeff));
    return total;
}

/// Value at q = exp(i*pi/p); magnitudes below 1e-9 are returned as exact 0.
template <class Coeff>
double quantum_dimension(const BasicCharacter<Coeff>& c, std::int64_t p)
{
    double total = 0.0;
    for (const auto& [w, coeff] : c.terms()) {
        const double value = static_cast<double>(coeff);
        total += (w == 0) ? value
                          : value * 2.0 * std::cos(static_cast<double>(w) * std::numbers::pi / static_cast<double>(p));
    }
    return std::abs(total) < 1e-9 ? 0.0 : total;
}

/// Residue of the integer dimension in F_p.
template <class Coeff>
std::int64_t dimension_mod(const BasicCharacter<Coeff>& c, std::int64_t p)
{
    const Coeff d = dimension(c) % Coeff{p};
    const auto r = static_cast<std::int64_t>(d);
    return r < 0 ? r + p : r;
}

enum class BasisKind { Weyl, Simple, Tilting };

inline std::string_view basis_name(BasisKind kind)
{
    switch (kind) {
    case BasisKind::Weyl: return "weyl";
    case BasisKind::Simple: return "simple";
    case BasisKind::Tilting: return "tilting";
    }
    return "?";
}

/// Which family of characters to expand in. Simple and Tilting need a prime.
struct Basis {
    BasisKind kind = BasisKind::Weyl;
    std::optional<Prime> p;

    static Basis weyl() { return {BasisKind::Weyl, std::nullopt}; }
    static Basis simple(Prime p) { return {BasisKind::Simple, p}; }
    static Basis tilting(Prime p) { return {BasisKind::Tilting, p}; }
};

/// A single basis element: Weyl chi_m, simple L(m) or tilting T(m).
struct BasisLabel {
    BasisKind kind;
    std::int64_t m;
    std::int64_t p; // 0 for Weyl

    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

template <class Coeff>
struct BasicDecomposition {
    Basis basis;
    std::map<std::int64_t, Coeff> terms; // highest weight -> multiplicity >= 1

    Coeff total_length() const
    {
        Coeff total{0};
        for (const auto& [m, mult] : terms)
            total = detail::checked_add(total, mult);
        return total;
    }

    std::vector<std::pair<BasisLabel, Coeff>> labelled() const
    {
        std::vector<std::pair<BasisLabel, Coeff>> out;
        const std::int64_t p = basis.p ? basis.p->value() : 0;
        for (const auto& [m, mult] : terms)
            out.push_back({BasisLabel{basis.kind, m, p}, mult});
        return out;
    }
};

using Decomposition = BasicDecomposition<std::int64_t>;

/// Greedy top-weight peeling against a unitriangular family. basis_char(m)
/// must return a character whose top term is exactly 1 * orbit(m). Any
/// negative multiplicity aborts with NegativeCoefficient.
template <class Coeff, class BasisCharFn>
BasicDecomposition<Coeff> peel(const BasicCharacter<Coeff>& c, Basis basis, BasisCharFn&& basis_char)
{
    BasicDecomposition<Coeff> out{basis, {}};
    if (c.is_zero())
        return out;

    // Dense scratch indexed by weight; basis characters are subtracted term by term.
    std::vector<Coeff> work(static_cast<std::size_t>(c.top_weight() + 1), Coeff{0});
    for (const auto& [w, coeff] : c.terms())
        work[static_cast<std::size_t>(w)] = coeff;

    for (std::int64_t top = c.top_weight(); top >= 0; --top) {
        const Coeff mult = work[static_cast<std::size_t>(top)];
        if (mult == 0)
            continue;
        if (mult < 0)
            throw Error(ErrorCode::NegativeCoefficient,
                        "multiplicity " + detail::to_string(mult) + " at highest weight " +
                            std::to_string(top) + " in the " + std::string(basis_name(basis.kind)) + " basis");
        const BasicCharacter<Coeff>& b = basis_char(top);
        if (b.top_weight() != top || b.coeff(top) != 1)
            throw Error(ErrorCode::InvalidArgument, "basis character is not unitriangular at weight " + std::to_string(top));
        for (const auto& [w, coeff] : b.terms()) {
            auto& slot = work[static_cast<std::size_t>(w)];
            slot = detail::checked_add(slot, -detail::checked_mul(mult, coeff));
        }
        out.terms.emplace(top, mult);
    }
    return out;
}

/// Sum of multiplicity times basis character.
template <class Coeff, class BasisCharFn>
BasicCharacter<Coeff> reconstruct(const BasicDecomposition<Coeff>& d, BasisCharFn&& basis_char)
{
    BasicCharacter<Coeff> out;
    for (const auto& [m, mult] : d.terms)
        out += BasicCharacter<Coeff>(basis_char(m)).scaled(mult);
    return out;
}

} // namespace verlab
