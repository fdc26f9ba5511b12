#include "homoggb/ordering.hpp"

#include <algorithm>

namespace homoggb {

namespace {

Cmp cmp_long(long a, long b) {
    if (a < b) return Cmp::LT;
    if (a > b) return Cmp::GT;
    return Cmp::EQ;
}

// Lex tie-break among equal-degree commutative monomials: compare exponents
// variable by variable, greatest precedence first.
Cmp lex_commutative(const RingDescriptor& ring, const Monomial& u, const Monomial& v) {
    for (std::size_t i : ring.lex_order) {
        if (u.data[i] != v.data[i]) return u.data[i] > v.data[i] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

// Leftmost-letter lex among equal-degree words. Distinct equal-degree words
// always differ at some shared position (positive weights), so running off
// one word's end implies equality.
Cmp lex_free(const RingDescriptor& ring, const Monomial& u, const Monomial& v) {
    std::size_t n = std::min(u.data.size(), v.data.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u.data[i] != v.data[i])
            return ring.prec_rank[u.data[i]] > ring.prec_rank[v.data[i]] ? Cmp::GT : Cmp::LT;
    }
    if (u.data.size() != v.data.size())
        throw error("equal-degree words with a proper prefix relation cannot exist");
    return Cmp::EQ;
}

}  // namespace

Cmp compare_gr(const RingDescriptor& ring, const Monomial& u, const Monomial& v) {
    Cmp d = cmp_long(mono_degree(ring, u), mono_degree(ring, v));
    if (d != Cmp::EQ) return d;
    return ring.is_commutative() ? lex_commutative(ring, u, v) : lex_free(ring, u, v);
}

Cmp compare_t_gr(const RingDescriptor& ring, const Monomial& u, const Monomial& v) {
    if (!ring.homog_index) throw error("compare_t_gr needs a homogenizing variable");
    if (!ring.is_commutative()) throw error("compare_t_gr needs a commutative ring");
    Monomial wu = u, wv = v;
    wu.data[*ring.homog_index] = 0;
    wv.data[*ring.homog_index] = 0;
    Cmp c = compare_gr(ring, wu, wv);
    if (c != Cmp::EQ) return c;
    return cmp_long(u.data[*ring.homog_index], v.data[*ring.homog_index]);
}

Cmp compare_T_gr(const RingDescriptor& ring, const Monomial& u, const Monomial& v) {
    if (!ring.homog_index) throw error("compare_T_gr needs a homogenizing variable");
    if (ring.is_commutative()) throw error("compare_T_gr needs a free ring");
    // T already carries the least precedence rank, so this is plain graded lex.
    return compare_gr(ring, u, v);
}

Cmp mono_compare(const RingDescriptor& ring, const Monomial& u, const Monomial& v) {
    if (!ring.homog_index) return compare_gr(ring, u, v);
    return ring.is_commutative() ? compare_t_gr(ring, u, v) : compare_T_gr(ring, u, v);
}

}  // namespace homoggb
