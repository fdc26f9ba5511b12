#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homoggb/scalar.hpp"

namespace homoggb {

enum class RingKind { Commutative, Free };

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

/// Describes one of the two concrete rings: a commutative polynomial ring
/// K[x1..xn] or a free algebra K<X1..Xn>, each with a positive weight per
/// variable and optionally extended by a homogenizing variable of weight 1.
///
/// Monomial comparisons use graded lex. Variables listed first are greatest
/// in the lex tie-break; the homogenizing variable is always least.
class RingDescriptor {
public:
    RingKind kind;
    std::vector<std::string> vars;   // declaration order
    std::vector<long> weights;       // per variable, all > 0
    std::optional<std::size_t> homog_index;  // index of the homogenizing variable
    FieldSpec field;
    std::vector<long> prec_rank;     // lex rank per variable; larger = greater
    std::vector<std::size_t> lex_order;  // variable indices by descending rank (derived)

    static RingPtr commutative(std::vector<std::string> names,
                               FieldSpec field = FieldSpec::rationals(),
                               std::vector<long> weights = {});
    static RingPtr free_algebra(std::vector<std::string> names,
                                FieldSpec field = FieldSpec::rationals(),
                                std::vector<long> weights = {});

    /// Same ring with one extra variable of weight 1, lowest precedence,
    /// marked as the homogenizing variable.
    RingPtr with_homog_var(const std::string& name) const;
    /// Strips the homogenizing variable.
    RingPtr base_ring() const;

    /// Reorders lex precedence: names listed first are greatest. Every ring
    /// variable except the homogenizing one must appear exactly once.
    RingPtr with_precedence(const std::vector<std::string>& names_desc) const;

    std::size_t nvars() const { return vars.size(); }
    bool is_extended() const { return homog_index.has_value(); }
    bool is_commutative() const { return kind == RingKind::Commutative; }

    std::optional<std::size_t> var_index(std::string_view name) const;
    bool same_ring(const RingDescriptor& o) const;

private:
    static void validate(const RingDescriptor& r);
};

}  // namespace homoggb
