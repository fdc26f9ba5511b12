#pragma once

#include "homoggb/polynomial.hpp"

namespace homoggb {

/// The maps f -> f* and F -> F_* between a commutative ring K[x..] and its
/// extension K[x..,t] by a central homogenizing variable of weight 1.
class CentralHomogenizer {
public:
    /// Builds the extended ring from the base ring (appends t, weight 1,
    /// lowest precedence).
    CentralHomogenizer(RingPtr base, const std::string& homog_name);

    const RingPtr& base() const { return base_; }
    const RingPtr& extended() const { return ext_; }

    /// f* = f_p + t f_{p-1} + ... + t^s f_{p-s}: homogeneous of degree
    /// deg(f), t does not divide it, and dehomogenize(f*) == f.
    Polynomial homogenize(const Polynomial& f) const;

    /// F_* : substitutes t := 1 and recanonicalizes (terms may merge/cancel).
    Polynomial dehomogenize(const Polynomial& F) const;

    /// Elementwise homogenization of a set, duplicates collapsed.
    std::vector<Polynomial> homogenize_set(const std::vector<Polynomial>& S) const;

    /// Lifts a t-free extended monomial back to the base ring.
    Monomial restrict_monomial(const Monomial& m) const;
    /// Embeds a base monomial with an explicit t-exponent.
    Monomial extend_monomial(const Monomial& m, std::uint32_t t_exp) const;

private:
    RingPtr base_;
    RingPtr ext_;
};

}  // namespace homoggb
