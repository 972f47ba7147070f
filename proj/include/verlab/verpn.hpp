#pragma once

// Simple objects of the higher Verlinde category Ver_{p^n}: index bounds,
// Steinberg digit factorisation, the embedding Ver_{p^n} -> Ver_{p^{n+1}},
// the odd line, and a rule base for vanishing of symmetric powers.

#include "verlab/arith.hpp"
#include "verlab/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace verlab {

/// Largest simple index of Ver_{p^n}: p^(n-1) (p-1) - 1.
inline std::int64_t max_index(Prime p, std::int64_t n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "level n must be positive");
    return detail::checked_mul(detail::ipow(p, n - 1), p.value() - 1) - 1;
}

/// A simple object L_index of Ver_{p^n}.
class VerpnSimple {
public:
    VerpnSimple(Prime p, std::int64_t n, std::int64_t index) : p_(p), n_(n), index_(index)
    {
        if (index < 0 || index > max_index(p, n))
            throw Error(ErrorCode::IndexOutOfRange, "L_" + std::to_string(index) + " is not a simple of Ver_" +
                                                        std::to_string(p.value()) + "^" + std::to_string(n));
    }

    Prime prime() const noexcept { return p_; }
    std::int64_t level() const noexcept { return n_; }
    std::int64_t index() const noexcept { return index_; }
    bool is_unit() const noexcept { return index_ == 0; }

    friend bool operator==(const VerpnSimple&, const VerpnSimple&) = default;

private:
    Prime p_;
    std::int64_t n_;
    std::int64_t index_;
};

/// Base-p digits (i_1, ..., i_n) of the index, most significant first.
inline std::vector<std::int64_t> steinberg_digits(Prime p, std::int64_t n, std::int64_t index)
{
    const VerpnSimple simple(p, n, index);
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
    std::int64_t rest = index;
    for (std::int64_t j = n - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = rest % p.value();
        rest /= p.value();
    }
    return digits;
}

/// L_{p^(n-1) i_1} (x) ... (x) L_{i_n}, which is the simple with index sum_j p^(n-j) i_j.
inline VerpnSimple steinberg_product(Prime p, std::int64_t n, const std::vector<std::int64_t>& digits)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "level n must be positive");
    if (static_cast<std::int64_t>(digits.size()) != n)
        throw Error(ErrorCode::DigitOutOfRange, "expected " + std::to_string(n) + " digits, got " + std::to_string(digits.size()));
    std::int64_t index = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        const std::int64_t bound = (j == 0) ? p.value() - 2 : p.value() - 1;
        if (digits[j] < 0 || digits[j] > bound)
            throw Error(ErrorCode::DigitOutOfRange,
                        "digit " + std::to_string(j + 1) + " = " + std::to_string(digits[j]) + " outside [0, " + std::to_string(bound) + "]");
        index = detail::checked_add(detail::checked_mul(index, p.value()), digits[j]);
    }
    return VerpnSimple(p, n, index);
}

/// Index of L_i of Ver_{p^n} viewed inside Ver_{p^(n+1)}.
inline std::int64_t embed(Prime p, std::int64_t n, std::int64_t index)
{
    const VerpnSimple simple(p, n, index);
    return detail::checked_mul(index, p.value());
}

/// Index p^(n-1) (p-2) of the odd line generating sVec inside Ver_{p^n}.
inline std::int64_t odd_line(Prime p, std::int64_t n)
{
    if (p.value() == 2)
        throw Error(ErrorCode::EvenPrime, "Ver_{2^n} has no odd line");
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "level n must be positive");
    return detail::checked_mul(detail::ipow(p, n - 1), p.value() - 2);
}

/// Simples of dimension +-1: the unit, and the odd line for odd p.
inline bool is_invertible(const VerpnSimple& s)
{
    return s.is_unit() || (s.prime().value() > 2 && s.index() == odd_line(s.prime(), s.level()));
}

enum class SymKind { Zero, IsUnit, HasUnitSummand, IsSimple, Unknown };

inline std::string_view sym_kind_name(SymKind kind)
{
    switch (kind) {
    case SymKind::Zero: return "Zero";
    case SymKind::IsUnit: return "IsUnit";
    case SymKind::HasUnitSummand: return "HasUnitSummand";
    case SymKind::IsSimple: return "IsSimple";
    case SymKind::Unknown: return "Unknown";
    }
    return "?";
}

inline SymKind parse_sym_kind(std::string_view name)
{
    for (SymKind k : {SymKind::Zero, SymKind::IsUnit, SymKind::HasUnitSummand, SymKind::IsSimple, SymKind::Unknown})
        if (sym_kind_name(k) == name)
            return k;
    throw Error(ErrorCode::ParseError, "unknown symmetric-power status '" + std::string(name) + "'");
}

/// A recorded statement Sym^power L_index = (status) in Ver_{p^n}.
struct SymFact {
    std::int64_t p;
    std::int64_t n;
    std::int64_t index;
    std::int64_t power;
    SymKind status;
    std::optional<std::int64_t> target; // for IsSimple: Sym^power L_index = L_target
    std::string statement;

    friend bool operator==(const SymFact&, const SymFact&) = default;
};

/// Versioned table of explicit facts. Mirrors data/sym_power_facts.json.
struct SymFactTable {
    int version = 1;
    std::vector<SymFact> facts;
    std::vector<std::string> comments;

    friend bool operator==(const SymFactTable&, const SymFactTable&) = default;
};

inline const SymFactTable& builtin_sym_facts()
{
    static const SymFactTable table{
        1,
        {
            {3, 2, 3, 2, SymKind::Zero, std::nullopt, "Ver_9: L_3 is the odd line, so Sym^2 L_3 = 0"},
            {3, 2, 4, 2, SymKind::IsUnit, std::nullopt, "Ver_9: L_4 = L_3 (x) L_1, so Sym^2 L_4 = Wedge^2 L_1 = 1"},
            {3, 2, 4, 3, SymKind::Zero, std::nullopt, "Ver_9: Sym^3 L_4 = 0, since Sym^2 L_4 = 1 is invertible"},
            {3, 2, 1, 2, SymKind::IsSimple, 2, "Ver_9: Sym^2 L_1 = L_2 (image of Sym^2 T_1 = T_2)"},
            {3, 2, 5, 2, SymKind::IsSimple, 2, "Ver_9: L_5 = L_3 (x) L_2, so Sym^2 L_5 = Wedge^2 L_2 = L_2"},
            {2, 3, 2, 2, SymKind::IsUnit, std::nullopt, "Ver_8: V = L_2 (from Ver_4) has Sym^2 V = 1"},
            {2, 3, 2, 3, SymKind::Zero, std::nullopt, "Ver_8: V = L_2 has Sym^3 V = 0"},
        },
        {
            "Ver_9: Sym^2 L_2 is the image of Sym^2 T_2 = T_4, the projective cover of 1 (length 3, L_4 in the middle)",
            "Ver_{p^n}, p > 2: dim Ext^1(L_a, 1) = 1 iff a = p^i + p^(i-1) (p-2) for some 1 <= i <= n-1, else 0",
            "Ver_{p^2}, p > 2: 1 is a direct summand of Sym^2 L_{2p-2} (family rule, not a table row)",
        },
    };
    return table;
}

/// Outcome of a symmetric-power query. `rule` names the rule that fired;
/// `premise` names the rule that supplied its input, when there is one.
struct SymStatus {
    SymKind kind = SymKind::Unknown;
    std::string rule;
    std::string provenance;
    std::optional<std::int64_t> target;
    std::optional<std::string> premise;
    std::optional<std::int64_t> threshold; // for Zero: the least power known to vanish
};

/// Rule base for Sym^k of simples of Ver_{p^n}. Rules, in evaluation order:
///   degree-zero / unit-object / degree-one   trivial
///   fact-table          explicit table rows, exact power
///   unit-summand        Ver_{p^2}, p > 2: 1 is a summand of Sym^2 L_{2p-2}
///   vanishing-p-power   Sym^(p^(n-i) - 1) L_{p^i} = 0,                0 <= i < n
///   vanishing-digit     Sym^(p-i) L_{p^(n-1) i} = 0,                  0 < i < p-1
///   vanishing-odd-twist Sym^(i+2) L_{p^(n-1)(p-2) + p^j i} = 0,        0 <= j < n-1, 0 <= i < p, p odd
///   invertible-power    Sym^k L = 1 for non-invertible L, k > 1  =>  Sym^(k+1) L = 0
///   upward-closure      Sym^a L = 0  =>  Sym^k L = 0 for k >= a
/// Anything else is Unknown.
class SymPowerKB {
public:
    explicit SymPowerKB(SymFactTable table = builtin_sym_facts()) : table_(std::move(table)) {}

    const SymFactTable& table() const noexcept { return table_; }

    SymStatus status(Prime p, std::int64_t n, std::int64_t index, std::int64_t k) const
    {
        const VerpnSimple simple(p, n, index);
        if (k < 0)
            throw Error(ErrorCode::InvalidArgument, "symmetric power must be non-negative");

        if (k == 0)
            return {SymKind::IsUnit, "degree-zero", "Sym^0 X = 1", std::nullopt, std::nullopt, std::nullopt};
        if (index == 0)
            return {SymKind::IsUnit, "unit-object", "Sym^k 1 = 1", std::nullopt, std::nullopt, std::nullopt};
        if (k == 1)
            return {SymKind::IsSimple, "degree-one", "Sym^1 L = L", index, std::nullopt, std::nullopt};

        for (const auto& f : table_.facts)
            if (f.p == p.value() && f.n == n && f.index == index && f.power == k)
                return {f.status, "fact-table", f.statement, f.target, std::nullopt, f.status == SymKind::Zero ? std::optional(k) : std::nullopt};

        if (p.value() > 2 && n == 2 && index == 2 * p.value() - 2 && k == 2)
            return {SymKind::HasUnitSummand, "unit-summand", "Ver_{p^2}: 1 is a direct summand of Sym^2 L_{2p-2}",
                    std::nullopt, std::nullopt, std::nullopt};

        const auto candidates = vanishing_rules(simple);
        for (const auto& c : candidates)
            if (c.threshold.value() == k)
                return c;
        const SymStatus* best = nullptr;
        for (const auto& c : candidates)
            if (c.threshold.value() < k && (!best || c.threshold.value() < best->threshold.value()))
                best = &c;
        if (best) {
            SymStatus up = *best;
            up.premise = best->rule;
            up.rule = "upward-closure";
            up.provenance = "Sym^" + std::to_string(*best->threshold) + " L_" + std::to_string(index) +
                            " = 0 (" + best->rule + ") and Sym^k is a quotient of Sym^a (x) Sym^(k-a)";
            return up;
        }
        return {SymKind::Unknown, "none", "no rule applies", std::nullopt, std::nullopt, std::nullopt};
    }

    /// Least power at which some rule proves vanishing, if any.
    std::optional<std::int64_t> vanishing_threshold(Prime p, std::int64_t n, std::int64_t index) const
    {
        const VerpnSimple simple(p, n, index);
        std::optional<std::int64_t> best;
        for (const auto& c : vanishing_rules(simple))
            if (!best || *c.threshold < *best)
                best = c.threshold;
        return best;
    }

private:
    /// Every rule that proves Sym^a L = 0 for this simple, in evaluation order.
    std::vector<SymStatus> vanishing_rules(const VerpnSimple& s) const
    {
        const std::int64_t p = s.prime().value();
        const std::int64_t n = s.level();
        const std::int64_t index = s.index();
        std::vector<SymStatus> out;
        auto zero = [&](std::int64_t a, std::string rule, std::string why, std::optional<std::string> premise = std::nullopt) {
            out.push_back({SymKind::Zero, std::move(rule), std::move(why), std::nullopt, std::move(premise), a});
        };

        for (const auto& f : table_.facts)
            if (f.p == p && f.n == n && f.index == index && f.status == SymKind::Zero)
                zero(f.power, "fact-table", f.statement);

        // L_{p^i}, 0 <= i < n
        if (const std::int64_t i = detail::log_exact(index, p); i >= 0 && i < n)
            zero(detail::ipow(p, n - i) - 1, "vanishing-p-power",
                 "Sym^(p^(n-i)-1) L_{p^i} = 0 with i = " + std::to_string(i));

        // L_{p^(n-1) i}, 0 < i < p-1
        const std::int64_t top = detail::ipow(p, n - 1);
        if (index % top == 0) {
            const std::int64_t i = index / top;
            if (i > 0 && i < p - 1)
                zero(p - i, "vanishing-digit", "Sym^(p-i) L_{p^(n-1) i} = 0 with i = " + std::to_string(i));
        }

        // L_{p^(n-1)(p-2) + p^j i}: the odd line twisted by a single digit
        if (p > 2 && n >= 2 && index >= top * (p - 2)) {
            const std::int64_t v = index - top * (p - 2);
            std::int64_t j = 0, i = v;
            if (v > 0)
                while (i % p == 0) {
                    i /= p;
                    ++j;
                }
            if (i < p && j <= n - 2)
                zero(i + 2, "vanishing-odd-twist",
                     "Sym^(i+2) L_{p^(n-1)(p-2) + p^j i} = 0 with j = " + std::to_string(j) + ", i = " + std::to_string(i));
        }

        // Sym^k L invertible with k > 1 and L not invertible forces Sym^(k+1) L = 0.
        if (!is_invertible(s))
            for (const auto& f : table_.facts)
                if (f.p == p && f.n == n && f.index == index && f.status == SymKind::IsUnit && f.power > 1)
                    zero(f.power + 1, "invertible-power",
                         "Sym^" + std::to_string(f.power) + " L_" + std::to_string(index) + " = 1 with L_" +
                             std::to_string(index) + " not invertible",
                         "fact-table");
        return out;
    }

    SymFactTable table_;
};

inline SymStatus sym_power_status(Prime p, std::int64_t n, std::int64_t index, std::int64_t k)
{
    static const SymPowerKB kb;
    return kb.status(p, n, index, k);
}

} // namespace verlab
