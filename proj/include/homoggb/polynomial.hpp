#pragma once

#include <utility>
#include <vector>

#include "homoggb/ordering.hpp"

namespace homoggb {

struct Term {
    Scalar coeff;
    Monomial mono;
};

/// Immutable polynomial in canonical form: terms strictly descending under
/// the ring's term order, no zero coefficients, no duplicate monomials.
/// The first term is the leading term.
class Polynomial {
public:
    static Polynomial zero(RingPtr ring);
    /// Canonicalizes: validates monomials, sorts, merges duplicates, drops zeros.
    static Polynomial make(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const;
    const Scalar& leading_coeff() const;

    /// Maximal weighted degree over all terms. Rejects the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;  // zero counts as homogeneous
    bool is_constant() const;     // nonzero scalar (identity monomial only)

    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& f, const Polynomial& g);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial neg(const Polynomial& f);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial scalar_mul(const Scalar& c, const Polynomial& f);
/// c * m * f  (= f * c * m in the commutative kind).
Polynomial term_mul(const Scalar& c, const Monomial& m, const Polynomial& f);
/// c * u * f * v in the free kind.
Polynomial sandwich_mul(const Scalar& c, const Monomial& u, const Polynomial& f,
                        const Monomial& v);

/// Leading homogeneous part: the sum of all terms of maximal weighted degree.
Polynomial lh(const Polynomial& f);
/// Decomposition into homogeneous components, degrees strictly descending.
std::vector<std::pair<long, Polynomial>> homogeneous_components(const Polynomial& f);

/// Total order on polynomials of one ring, for canonical set storage:
/// leading monomials first, then remaining terms, then coefficients.
int poly_total_compare(const Polynomial& f, const Polynomial& g);

/// Sorts descending under poly_total_compare and drops exact duplicates.
std::vector<Polynomial> canonical_set(std::vector<Polynomial> polys);

std::string poly_list_str(const std::vector<Polynomial>& polys, const char* sep = ", ");

}  // namespace homoggb
