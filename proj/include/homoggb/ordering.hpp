#pragma once

#include "homoggb/monomial.hpp"

namespace homoggb {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Graded lexicographic comparison: weighted degree first; ties broken by
/// exponents read from the greatest-precedence variable down (commutative)
/// or by the leftmost differing letter (free).
Cmp compare_gr(const RingDescriptor& ring, const Monomial& u, const Monomial& v);

/// Ordering on K[x..,t] extending graded lex: t^r1·w1 < t^r2·w2 iff
/// w1 <_gr w2, or w1 = w2 and r1 < r2. Total and multiplicative but not
/// graded (t^r < w for every r > 0 and w != 1).
Cmp compare_t_gr(const RingDescriptor& ring, const Monomial& u, const Monomial& v);

/// Graded lex on K<X..,T> words with T least; graded, since T has weight 1.
Cmp compare_T_gr(const RingDescriptor& ring, const Monomial& u, const Monomial& v);

/// The ring's canonical term order: compare_gr on plain rings, compare_t_gr /
/// compare_T_gr on extended commutative / free rings.
Cmp mono_compare(const RingDescriptor& ring, const Monomial& u, const Monomial& v);

inline bool mono_less(const RingDescriptor& ring, const Monomial& u, const Monomial& v) {
    return mono_compare(ring, u, v) == Cmp::LT;
}

}  // namespace homoggb
