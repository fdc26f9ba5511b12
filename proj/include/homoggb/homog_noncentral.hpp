#pragma once

#include "homoggb/polynomial.hpp"

namespace homoggb {

/// The maps f -> f~ and F -> F_~ between a free algebra K<X1..Xn> and its
/// extension K<X1..Xn,T> by a non-commuting homogenizing letter T of weight 1,
/// together with the commutator set {X_i T - T X_i}.
class NoncentralHomogenizer {
public:
    NoncentralHomogenizer(RingPtr base, const std::string& homog_name);

    const RingPtr& base() const { return base_; }
    const RingPtr& extended() const { return ext_; }

    /// f~ = f_p + T f_{p-1} + ... + T^s f_{p-s}, T-powers on the left.
    Polynomial homogenize(const Polynomial& f) const;

    /// F_~ : deletes every T letter, recanonicalizes (cancellation possible).
    Polynomial dehomogenize(const Polynomial& F) const;

    /// The commutators X_i T - T X_i, homogeneous of degree weight(X_i) + 1.
    /// They form a Groebner basis with LM(X_i T - T X_i) = X_i T.
    const std::vector<Polynomial>& commutators() const { return commutators_; }

    /// S~ : elementwise homogenization united with the full commutator set.
    std::vector<Polynomial> homogenize_set(const std::vector<Polynomial>& S) const;

    struct Decomposition {
        Polynomial commutator_part;  // L, an explicit member of the commutator ideal
        Polynomial normal_part;      // H, unique; every word is T^r * (T-free word)
        long t_power = 0;            // r with H = T^r * (H_~)~ when H != 0
    };
    /// Division of a homogeneous F by the commutator basis: F = L + H.
    Decomposition decompose_mod_commutators(const Polynomial& F) const;

    Monomial restrict_word(const Monomial& w) const;   // w must be T-free
    Monomial extend_word(const Monomial& w, std::uint32_t t_prefix) const;  // T^r . w

private:
    RingPtr base_;
    RingPtr ext_;
    std::vector<Polynomial> commutators_;
};

}  // namespace homoggb
