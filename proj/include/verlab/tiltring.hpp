#pragma once

// Split Grothendieck ring of tilting modules for SL2 in characteristic p.

#include "verlab/arith.hpp"
#include "verlab/charlab.hpp"
#include "verlab/memo.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace verlab {

/// Character of the indecomposable tilting module T(m).
///
/// For m <= p-1 this is chi_m; for p <= m <= 2p-2 it is chi_m + chi_{2p-2-m}.
/// Beyond that, m = m0 + p*m1 with m0 the unique value in [p-1, 2p-2] of the
/// right residue, and T(m) = T(m0) (x) T(m1)^[1] (Frobenius twist).
inline const Character& tilting_char(Prime p, std::int64_t m)
{
    if (m < 0)
        throw Error(ErrorCode::InvalidArgument, "highest weight must be non-negative");
    static detail::MemoTable<std::pair<std::int64_t, std::int64_t>, Character> cache;
    return cache.get_or_compute({p.value(), m}, [&]() -> Character {
        const std::int64_t q = p.value();
        if (m <= q - 1)
            return weyl_char(m);
        if (m <= 2 * q - 2)
            return weyl_char(m) + weyl_char(2 * q - 2 - m);
        // m0 in [p-1, 2p-2] with m0 = m mod p
        std::int64_t m0 = (m - (q - 1)) % q + (q - 1);
        const std::int64_t m1 = (m - m0) / q;
        return tilting_char(p, m0) * frobenius_twist(tilting_char(p, m1), q);
    });
}

using TiltDecomposition = std::map<std::int64_t, std::int64_t>;

/// Decomposition of T(a) (x) T(b) into indecomposable tilting modules.
inline TiltDecomposition tensor_decompose_tilt(Prime p, std::int64_t a, std::int64_t b)
{
    const Character product = tilting_char(p, a) * tilting_char(p, b);
    return peel(product, Basis::tilting(p), [p](std::int64_t m) -> const Character& { return tilting_char(p, m); })
        .terms;
}

/// True iff T(m) lies in the tensor ideal generated by T(p^n - 1), i.e. maps
/// to zero in Ver_{p^n}.
inline bool is_negligible(Prime p, std::int64_t n, std::int64_t m)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "level n must be positive");
    if (m < 0)
        throw Error(ErrorCode::InvalidArgument, "highest weight must be non-negative");
    return m >= detail::ipow(p, n) - 1;
}

} // namespace verlab
