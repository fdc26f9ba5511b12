#pragma once

#include "homoggb/gb_comm.hpp"

namespace homoggb {

struct NcReductionStep {
    Scalar coeff;
    Monomial left;
    std::size_t divisor;  // index into the caller's divisor list
    Monomial right;
};

struct NcDivisionResult {
    Polynomial remainder;
    std::vector<NcReductionStep> trace;  // f = sum coeff * left * g * right + remainder
};

/// Two-sided division by subword matching: rewrites the current leading word
/// at the leftmost occurrence of the first matching divisor (fixed sorted
/// order) until no word of the remainder contains any LM(g) as a subword.
NcDivisionResult nc_divide(const Polynomial& f, std::span<const Polynomial> G);
Polynomial nc_normal_form(const Polynomial& f, std::span<const Polynomial> G);

/// A genuine overlap or containment of two leading words:
/// left_i·LM(g_i)·right_i = left_j·LM(g_j)·right_j = word.
struct Obstruction {
    enum class Kind { Overlap, Containment };
    std::size_t i = 0, j = 0;
    Monomial left_i, right_i;
    Monomial left_j, right_j;
    Monomial word;
    Kind kind = Kind::Overlap;
};

/// All proper suffix-prefix overlaps (both directions, self-overlaps for
/// identical arguments) and containments between LM(g1) and LM(g2).
/// Disjoint placements are never reported.
std::vector<Obstruction> find_obstructions(const Polynomial& g1, const Polynomial& g2,
                                           std::size_t i = 0, std::size_t j = 1);

/// The leading-word cancellation combination of an obstruction.
Polynomial obstruction_spoly(const Obstruction& o, std::span<const Polynomial> G);

struct NcCompleteOptions {
    bool interreduce = true;
};

/// Degree-truncated overlap completion. Every obstruction whose overlap word
/// has degree <= max_degree reduces to 0 by the output; complete is true iff
/// no unresolved obstruction above max_degree was generated (an obstruction
/// whose S-polynomial is syntactically zero is resolved at any degree).
/// Homogeneous inputs yield a homogeneous basis that is a full Groebner
/// basis up to max_degree. Deterministic.
GroebnerBasis nc_complete(std::vector<Polynomial> S, long max_degree,
                          const NcCompleteOptions& opts = {});

/// True iff every obstruction of overlap degree <= max_degree reduces to 0.
/// Serial reference plus an OpenMP kernel with identical reports.
CheckReport is_nc_groebner_serial(std::span<const Polynomial> G, long max_degree);
CheckReport is_nc_groebner_parallel(std::span<const Polynomial> G, long max_degree, int threads);
CheckReport is_nc_groebner(std::span<const Polynomial> G, long max_degree, int threads = 1);

}  // namespace homoggb
