// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "verlab/verlab.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace verlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds; // <= 0: no limit
    std::function<Outcome()> body;
};

Outcome ac1()
{
    Outcome out;
    const auto [e, e_dual] = extension_transform(Prime(2), 4, -2, -2);
    out.require(e == -5, "Dim+ E = " + e.str());
    out.require(e_dual == -1, "Dim+ E^dual = " + e_dual.str());
    return out;
}

Outcome ac2()
{
    Outcome out;
    std::vector<std::string> skipped;
    const std::vector<std::pair<std::int64_t, std::int64_t>> grid{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                                  {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}};
    for (auto [p, n] : grid) {
        const std::int64_t q = detail::ipow(p, n);
        const std::int64_t d = dimplus_of_finite_sym(q - 2);
        const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
        out.require(d == 2 - q, tag + ": Dim+ = " + std::to_string(d));
        const std::int64_t trunc = std::max<std::int64_t>(default_truncation, q);
        const FpSeries hs = one_minus_t_pow(padic_of_int(-d, Prime(p), precision_for(Prime(p), trunc)), trunc);
        out.require(hs.degree() == q - 2, tag + ": degree " + std::to_string(hs.degree()));
        // L_1 exists only when max_index >= 1, i.e. p^n >= 3; in Ver_2 the
        // polynomial is the constant 1 and there is no Sym(L_1) to have dimension 0.
        if (max_index(Prime(p), n) >= 1)
            out.require(hs.value_at_one() == 0, tag + ": value at t=1 is " + std::to_string(hs.value_at_one()));
        else
            skipped.push_back(tag);
    }
    if (out.ok)
        for (const auto& t : skipped)
            out.detail += "(" + t + ": no L_1 in Ver_2, dim Sym = 0 check not applicable) ";
    return out;
}

Outcome ac3()
{
    Outcome out;
    const GrowthEstimate e = sgd_estimate(LengthProvider::sl2_sym(Prime(2)), std::int64_t{1} << 16);
    out.require(e.classification == GrowthClass::Polynomial, "classified " + std::string(growth_class_name(e.classification)));
    out.require(std::abs(e.final_value - std::log2(3.0)) <= 0.05, "final " + std::to_string(e.final_value));
    if (out.ok)
        out.detail = "final " + std::to_string(e.final_value);
    return out;
}

Outcome ac4()
{
    Outcome out;
    std::int64_t triples = 0, mismatches = 0;
    for (std::int64_t p = 2; p <= 31; ++p) {
        if (!Prime::is_prime(p))
            continue;
        const Prime prime(p);
        const FusionRing ring(prime);
        for (std::int64_t a = 0; a <= p - 2; ++a)
            for (std::int64_t b = 0; b <= p - 2; ++b)
                for (std::int64_t c = 0; c <= p - 2; ++c) {
                    ++triples;
                    const std::int64_t n = ring.coefficient(a, b, c);
                    if (n != verlinde_oracle(prime, a, b, c) || n != truncated_cg_coefficient(prime, a, b, c)) {
                        ++mismatches;
                        out.require(false, "mismatch at p=" + std::to_string(p) + " (" + std::to_string(a) + "," +
                                               std::to_string(b) + "," + std::to_string(c) + ")");
                    }
                }
    }
    if (out.ok)
        out.detail = std::to_string(triples) + " triples, " + std::to_string(mismatches) + " mismatches";
    return out;
}

Outcome ac5()
{
    Outcome out;
    std::int64_t violations = 0;
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t n : {1, 2}) {
            const Prime prime(p);
            const std::int64_t q = detail::ipow(p, n);
            for (std::int64_t k = 0; k <= 3 * q; ++k)
                for (const auto& [m, mult] : tensor_decompose_tilt(prime, q - 1, k))
                    if (m < q - 1) {
                        ++violations;
                        out.require(false, "T_" + std::to_string(q - 1) + " (x) T_" + std::to_string(k) + " contains T_" +
                                               std::to_string(m) + " (p=" + std::to_string(p) + ")");
                    }
        }
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t m = p - 1; m <= 200; ++m)
            if (dimension_mod(tilting_char(Prime(p), m), p) != 0) {
                ++violations;
                out.require(false, "dim T_" + std::to_string(m) + " not divisible by " + std::to_string(p));
            }
    if (out.ok)
        out.detail = std::to_string(violations) + " violations";
    return out;
}

Outcome ac6()
{
    Outcome out;
    std::int64_t queries = 0;
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t n = 1; n <= 3; ++n) {
            const Prime prime(p);
            const std::int64_t top = detail::ipow(p, n - 1);
            const std::string tag = " (p=" + std::to_string(p) + " n=" + std::to_string(n) + ")";
            for (std::int64_t i = 0; i < n; ++i) {
                ++queries;
                const std::int64_t k = detail::ipow(p, n - i) - 1;
                out.require(sym_power_status(prime, n, detail::ipow(p, i), k).kind == SymKind::Zero,
                            "Sym^" + std::to_string(k) + " L_" + std::to_string(detail::ipow(p, i)) + tag);
            }
            for (std::int64_t j = 0; j <= n - 2; ++j)
                for (std::int64_t i = 0; i < p; ++i) {
                    const std::int64_t idx = top * (p - 2) + detail::ipow(p, j) * i;
                    if (idx > max_index(prime, n))
                        continue;
                    ++queries;
                    out.require(sym_power_status(prime, n, idx, i + 2).kind == SymKind::Zero,
                                "Sym^" + std::to_string(i + 2) + " L_" + std::to_string(idx) + tag);
                }
            for (std::int64_t i = 1; i < p - 1; ++i) {
                ++queries;
                out.require(sym_power_status(prime, n, top * i, p - i).kind == SymKind::Zero,
                            "Sym^" + std::to_string(p - i) + " L_" + std::to_string(top * i) + tag);
            }
        }

    const Prime three(3);
    out.require(sym_power_status(three, 2, 4, 2).kind == SymKind::IsUnit, "Ver_9 Sym^2 L_4");
    out.require(sym_power_status(three, 2, 4, 3).kind == SymKind::Zero, "Ver_9 Sym^3 L_4");
    for (std::int64_t idx : {1, 5}) {
        const SymStatus s = sym_power_status(three, 2, idx, 2);
        out.require(s.kind == SymKind::IsSimple && s.target == 2, "Ver_9 Sym^2 L_" + std::to_string(idx));
    }
    bool l2_comment = false;
    for (const auto& c : builtin_sym_facts().comments)
        l2_comment = l2_comment || c.find("Sym^2 L_2") != std::string::npos;
    out.require(l2_comment, "no recorded comment on Sym^2 L_2");
    if (out.ok)
        out.detail = std::to_string(queries + 4) + " queries";
    return out;
}

Outcome ac7()
{
    Outcome out;
    std::mt19937_64 rng(0xACCE97);
    const std::int64_t n = 64;
    for (std::int64_t p : {2, 3, 5}) {
        const Prime prime(p);
        const std::int64_t m = precision_for(prime, n);
        auto random_digits = [&] {
            std::uniform_int_distribution<std::int64_t> digit(0, p - 1);
            std::vector<std::int64_t> d(static_cast<std::size_t>(m));
            for (auto& x : d)
                x = digit(rng);
            return PadicDigits(prime, std::move(d));
        };
        for (int i = 0; i < 100; ++i) {
            const PadicDigits d = random_digits();
            out.require(dimplus_exponent(one_minus_t_pow(d, n)) == d, "roundtrip failed at p=" + std::to_string(p));
            out.require(dimplus_from_series(one_minus_t_pow(-d, n)) == d, "Dim+ roundtrip failed at p=" + std::to_string(p));
        }
        for (int i = 0; i < 200; ++i) {
            const PadicDigits a = random_digits(), b = random_digits();
            out.require(one_minus_t_pow(a, n) * one_minus_t_pow(b, n) == one_minus_t_pow(a + b, n),
                        "homomorphism failed at p=" + std::to_string(p));
        }
    }
    return out;
}

Outcome ac8()
{
    Outcome out;
    // dim Hom(X, 1) <= sgd(X) for every shipped provider
    std::vector<LengthProvider> providers;
    for (std::int64_t m = 0; m <= 6; ++m)
        providers.push_back(LengthProvider::binomial(m).with_hom_dim(m));
    providers.push_back(LengthProvider::partitions().with_hom_dim(1));
    providers.push_back(LengthProvider::constant().with_hom_dim(1));
    for (std::int64_t p : {2, 3, 5, 7})
        providers.push_back(LengthProvider::sl2_sym(Prime(p)).with_hom_dim(0));
    for (const auto& provider : providers)
        out.require(mn_diagnostic(provider, std::int64_t{1} << 14).inequality_ok, "inequality violated by " + provider.name());

    // fusion ring axioms
    std::mt19937_64 rng(0xACCE98);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        const Prime prime(p);
        const FusionRing ring(prime);
        std::uniform_int_distribution<std::int64_t> index(0, p - 2), mult(1, 3), count(1, 3);
        auto element = [&] {
            FusionElement x(prime);
            for (std::int64_t k = count(rng); k > 0; --k)
                x.add(index(rng), mult(rng));
            return x;
        };
        const FusionElement unit = FusionElement::simple(prime, 0);
        for (int i = 0; i < 500; ++i) {
            const FusionElement x = element(), y = element(), z = element();
            out.require(ring.multiply(x, y) == ring.multiply(y, x), "commutativity at p=" + std::to_string(p));
            out.require(ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z)),
                        "associativity at p=" + std::to_string(p));
            out.require(ring.multiply(unit, x) == x, "unit at p=" + std::to_string(p));
        }
    }

    // unitriangularity of simple and tilting characters
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t m = 0; m <= 200; ++m) {
            out.require((simple_char(Prime(p), m) - weyl_char(m)).top_weight() < m, "simple L_" + std::to_string(m));
            out.require((tilting_char(Prime(p), m) - weyl_char(m)).top_weight() < m, "tilting T_" + std::to_string(m));
        }
    return out;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "p-adic dimensions of the Ver_8 extension are (-5, -1)", 0.001, ac1},
        {2, "Dim+ L_1 = 2 - p^n with a degree p^n - 2 Hilbert polynomial vanishing at t=1", 1.0, ac2},
        {3, "sgd of the natural SL2 representation in characteristic 2 is log2(3)", 30.0, ac3},
        {4, "fusion coefficients equal both oracles for p <= 31", 60.0, ac4},
        {5, "negligible ideal closure and dimension divisibility", 30.0, ac5},
        {6, "symmetric-power vanishing rules and Ver_9 facts", 1.0, ac6},
        {7, "Hilbert series roundtrip and homomorphism at N = 64", 5.0, ac7},
        {8, "property suite: Hom/sgd inequality, fusion ring axioms, unitriangularity", 0.0, ac8},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.ok = false;
            o.detail = "runtime " + std::to_string(secs) + " s over the " + std::to_string(c.limit_seconds) + " s limit";
        }
        failures += o.ok ? 0 : 1;
        std::printf("AC%d %s: %s [%.4f s%s]%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                    c.limit_seconds > 0 ? (", limit " + std::to_string(c.limit_seconds).substr(0, 5) + " s").c_str() : "",
                    o.detail.empty() ? "" : " ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
