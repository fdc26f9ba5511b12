#include "homoggb/monomial.hpp"

#include <algorithm>

namespace homoggb {

Monomial identity_monomial(const RingDescriptor& ring) {
    Monomial m;
    if (ring.is_commutative()) m.data.assign(ring.nvars(), 0);
    return m;
}

bool is_identity(const RingDescriptor& ring, const Monomial& m) {
    if (ring.is_commutative())
        return std::all_of(m.data.begin(), m.data.end(), [](std::uint32_t e) { return e == 0; });
    return m.data.empty();
}

void validate_monomial(const RingDescriptor& ring, const Monomial& m) {
    if (ring.is_commutative()) {
        if (m.data.size() != ring.nvars()) throw error("exponent vector length mismatch");
        return;
    }
    for (std::uint32_t v : m.data)
        if (v >= ring.nvars()) throw error("word letter out of range");
}

long mono_degree(const RingDescriptor& ring, const Monomial& m) {
    long d = 0;
    if (ring.is_commutative()) {
        for (std::size_t i = 0; i < m.data.size(); ++i)
            d += ring.weights[i] * static_cast<long>(m.data[i]);
    } else {
        for (std::uint32_t v : m.data) d += ring.weights[v];
    }
    return d;
}

Monomial mono_mul(const RingDescriptor& ring, const Monomial& a, const Monomial& b) {
    Monomial m;
    if (ring.is_commutative()) {
        m.data.resize(a.data.size());
        for (std::size_t i = 0; i < a.data.size(); ++i) m.data[i] = a.data[i] + b.data[i];
    } else {
        m.data = a.data;
        m.data.insert(m.data.end(), b.data.begin(), b.data.end());
    }
    return m;
}

bool mono_divides(const RingDescriptor& ring, const Monomial& divisor, const Monomial& m) {
    if (!ring.is_commutative()) throw error("componentwise divisibility needs a commutative ring");
    for (std::size_t i = 0; i < m.data.size(); ++i)
        if (divisor.data[i] > m.data[i]) return false;
    return true;
}

Monomial mono_quotient(const RingDescriptor& ring, const Monomial& m, const Monomial& divisor) {
    if (!mono_divides(ring, divisor, m)) throw error("monomial quotient does not exist");
    Monomial q;
    q.data.resize(m.data.size());
    for (std::size_t i = 0; i < m.data.size(); ++i) q.data[i] = m.data[i] - divisor.data[i];
    return q;
}

Monomial mono_lcm(const RingDescriptor& ring, const Monomial& a, const Monomial& b) {
    if (!ring.is_commutative()) throw error("lcm needs a commutative ring");
    Monomial m;
    m.data.resize(a.data.size());
    for (std::size_t i = 0; i < a.data.size(); ++i) m.data[i] = std::max(a.data[i], b.data[i]);
    return m;
}

Monomial word_slice(const Monomial& w, std::size_t begin, std::size_t end) {
    Monomial m;
    m.data.assign(w.data.begin() + static_cast<long>(begin), w.data.begin() + static_cast<long>(end));
    return m;
}

std::optional<std::size_t> find_subword(const Monomial& hay, const Monomial& needle,
                                        std::size_t from) {
    if (needle.data.empty()) return from <= hay.data.size() ? std::optional(from) : std::nullopt;
    if (needle.data.size() > hay.data.size()) return std::nullopt;
    for (std::size_t p = from; p + needle.data.size() <= hay.data.size(); ++p) {
        if (std::equal(needle.data.begin(), needle.data.end(), hay.data.begin() + static_cast<long>(p)))
            return p;
    }
    return std::nullopt;
}

bool mono_divides_kind(const RingDescriptor& ring, const Monomial& divisor, const Monomial& m) {
    if (ring.is_commutative()) return mono_divides(ring, divisor, m);
    return find_subword(m, divisor).has_value();
}

std::uint32_t homog_multiplicity(const RingDescriptor& ring, const Monomial& m) {
    if (!ring.homog_index) throw error("ring has no homogenizing variable");
    if (ring.is_commutative()) return m.data[*ring.homog_index];
    std::uint32_t c = 0;
    for (std::uint32_t v : m.data)
        if (v == *ring.homog_index) ++c;
    return c;
}

std::string mono_str(const RingDescriptor& ring, const Monomial& m) {
    std::string out;
    auto append_factor = [&](std::size_t var, std::uint32_t exp) {
        if (exp == 0) return;
        if (!out.empty()) out += '*';
        out += ring.vars[var];
        if (exp > 1) out += '^' + std::to_string(exp);
    };
    if (ring.is_commutative()) {
        for (std::size_t i = 0; i < m.data.size(); ++i) append_factor(i, m.data[i]);
    } else {
        // run-length compress repeated letters: Y Y Y -> Y^3
        std::size_t i = 0;
        while (i < m.data.size()) {
            std::size_t j = i;
            while (j < m.data.size() && m.data[j] == m.data[i]) ++j;
            append_factor(m.data[i], static_cast<std::uint32_t>(j - i));
            i = j;
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace homoggb
