#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homoggb/ring.hpp"

namespace homoggb {

/// A monomial of either kind, interpreted through its ring:
///  - commutative: data[i] is the exponent of vars[i] (size == nvars);
///  - free: data is the word, left to right, as variable indices.
/// The identity is the all-zero vector / the empty word.
struct Monomial {
    std::vector<std::uint32_t> data;

    bool operator==(const Monomial&) const = default;
};

Monomial identity_monomial(const RingDescriptor& ring);
bool is_identity(const RingDescriptor& ring, const Monomial& m);
void validate_monomial(const RingDescriptor& ring, const Monomial& m);

/// Weighted degree: sum of weight(v) * multiplicity(v).
long mono_degree(const RingDescriptor& ring, const Monomial& m);

/// Product: exponent sum (commutative) or word concatenation (free).
Monomial mono_mul(const RingDescriptor& ring, const Monomial& a, const Monomial& b);

// Commutative divisibility (componentwise).
bool mono_divides(const RingDescriptor& ring, const Monomial& divisor, const Monomial& m);
Monomial mono_quotient(const RingDescriptor& ring, const Monomial& m, const Monomial& divisor);
Monomial mono_lcm(const RingDescriptor& ring, const Monomial& a, const Monomial& b);

// Free-word helpers.
Monomial word_slice(const Monomial& w, std::size_t begin, std::size_t end);
/// Leftmost occurrence of `needle` in `hay` at position >= from, if any.
std::optional<std::size_t> find_subword(const Monomial& hay, const Monomial& needle,
                                        std::size_t from = 0);
/// Subword divisibility for the free kind; delegates to mono_divides for
/// the commutative kind so callers can stay kind-generic.
bool mono_divides_kind(const RingDescriptor& ring, const Monomial& divisor, const Monomial& m);

/// Multiplicity of the homogenizing variable (t-exponent / count of T letters).
std::uint32_t homog_multiplicity(const RingDescriptor& ring, const Monomial& m);

std::string mono_str(const RingDescriptor& ring, const Monomial& m);

}  // namespace homoggb
