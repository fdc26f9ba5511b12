#pragma once

#include <optional>
#include <span>

#include "homoggb/polynomial.hpp"

namespace homoggb {

/// A set of basis polynomials plus status flags. Elements are monic and kept
/// sorted descending under poly_total_compare.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;
    bool reduced = false;
    bool complete = false;
    std::optional<long> truncation_degree;  // set by degree-truncated completions

    bool is_unit_ideal() const;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;  // aligned with the divisor list
    Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
/// any LM(g_i) and LM(q_i g_i) <= LM(f). The divisor applied to each leading
/// term is the first match in a fixed sorted order, so the result does not
/// depend on the order of G.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> G);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G);

/// Buchberger S-polynomial: the lcm-cancellation combination of f and g.
Polynomial spoly(const Polynomial& f, const Polynomial& g);

struct BuchbergerOptions {
    bool interreduce = true;  // return the canonical reduced basis
};

/// Buchberger completion with the normal pair-selection strategy (minimal
/// lcm degree first, ties by creation order), pruned by the coprime-LM and
/// chain criteria. Deterministic.
GroebnerBasis buchberger(std::vector<Polynomial> S, const BuchbergerOptions& opts = {});

/// Completion that also returns, for every basis element, its explicit
/// representation as a combination of the (monic) inputs. Used by tests to
/// certify <output> subset of <input>.
struct CertifiedBasis {
    GroebnerBasis basis;
    std::vector<Polynomial> inputs;                // monic, deduplicated
    std::vector<std::vector<Polynomial>> cofactors;  // element k = sum_j cofactors[k][j] * inputs[j]
};
CertifiedBasis buchberger_certified(std::vector<Polynomial> S,
                                    const BuchbergerOptions& opts = {});

/// Minimalizes and tail-reduces a complete basis; the result is the unique
/// reduced Groebner basis of the ideal.
GroebnerBasis reduce_basis(const GroebnerBasis& G);

struct CheckFailure {
    std::size_t i = 0, j = 0;  // indices into G
    Polynomial remainder;      // nonzero witness
};

struct CheckReport {
    bool ok = true;
    std::vector<CheckFailure> failures;
};

/// True iff every S-polynomial of every pair reduces to 0 by G. The serial
/// loop is the reference; the OpenMP kernel partitions the pair list and
/// must produce an identical report.
CheckReport is_groebner_serial(std::span<const Polynomial> G);
CheckReport is_groebner_parallel(std::span<const Polynomial> G, int threads);
CheckReport is_groebner(std::span<const Polynomial> G, int threads = 1);

}  // namespace homoggb
