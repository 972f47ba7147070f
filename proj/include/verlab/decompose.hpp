#pragma once

#include "verlab/charlab.hpp"
#include "verlab/tiltring.hpp"

namespace verlab {

/// Character of the basis element of highest weight m.
inline Character basis_char(const Basis& basis, std::int64_t m)
{
    switch (basis.kind) {
    case BasisKind::Weyl:
        return weyl_char(m);
    case BasisKind::Simple:
        return simple_char(basis.p.value(), m);
    case BasisKind::Tilting:
        return tilting_char(basis.p.value(), m);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown basis");
}

/// Exact expansion of c in the requested basis. Throws NegativeCoefficient
/// when c is not a non-negative combination of basis characters.
inline Decomposition decompose(const Character& c, const Basis& basis)
{
    if (basis.kind != BasisKind::Weyl && !basis.p)
        throw Error(ErrorCode::InvalidArgument, "simple and tilting bases need a prime");
    switch (basis.kind) {
    case BasisKind::Weyl: {
        // Weyl characters have no memo table; keep the last one alive for the peel.
        Character current;
        return peel(c, basis, [&current](std::int64_t m) -> const Character& { return current = weyl_char(m); });
    }
    case BasisKind::Simple:
        return peel(c, basis, [p = *basis.p](std::int64_t m) -> const Character& { return simple_char(p, m); });
    case BasisKind::Tilting:
        return peel(c, basis, [p = *basis.p](std::int64_t m) -> const Character& { return tilting_char(p, m); });
    }
    throw Error(ErrorCode::InvalidArgument, "unknown basis");
}

inline Character reconstruct(const Decomposition& d)
{
    return reconstruct(d, [&d](std::int64_t m) { return basis_char(d.basis, m); });
}

} // namespace verlab
