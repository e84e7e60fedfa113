#pragma once

// Coordinates of field elements in the Q-basis (1) of Q or (1, sqrt d) of Q(sqrt d).

#include <vector>

#include "starpull/kernel/field.hpp"
#include "starpull/lattice.hpp"

namespace starpull {

inline std::size_t field_degree(long d) { return d == 1 ? 1 : 2; }

inline lattice::QRow to_coords(const FieldElem& a, long d)
{
    if (d == 1) {
        if (!a.is_rational())
            throw mismatched_field(1, a.tag());
        return {a.rational_part()};
    }
    if (a.tag() != 1 && a.tag() != d)
        throw mismatched_field(d, a.tag());
    return {a.rational_part(), a.surd_part()};
}

inline FieldElem from_coords(const lattice::QRow& v, long d)
{
    if (d == 1)
        return FieldElem(v.at(0));
    return FieldElem(v.at(0), v.at(1), d);
}

} // namespace starpull
