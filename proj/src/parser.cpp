#include "homoggb/parser.hpp"

#include <cctype>

namespace homoggb {

namespace {

class LineParser {
public:
    LineParser(const RingPtr& ring, std::string_view text, int line_no)
        : ring_(ring), text_(text), line_(line_no) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (get() == '-');
        for (;;) {
            terms.push_back(parse_term(negative));
            skip_ws();
            if (at_end()) break;
            char c = get();
            if (c == '+') {
                negative = false;
            } else if (c == '-') {
                negative = true;
            } else {
                fail("expected '+' or '-'", pos_ - 1);
            }
            skip_ws();
        }
        return Polynomial::make(ring_, std::move(terms));
    }

private:
    Term parse_term(bool negative) {
        skip_ws();
        if (at_end()) fail("expected a term", pos_);
        Scalar coeff = Scalar::one(ring_->field);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            have_coeff = true;
        }
        Monomial mono = identity_monomial(*ring_);
        bool have_factor = false;
        if (!have_coeff) {
            mono = parse_factors(mono);
            have_factor = true;
        } else {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                mono = parse_factors(mono);
                have_factor = true;
            }
        }
        if (!have_coeff && !have_factor) fail("expected a term", pos_);
        if (negative) coeff = -coeff;
        return Term{std::move(coeff), std::move(mono)};
    }

    Scalar parse_coefficient() {
        mpz_class num = parse_integer();
        skip_ws();
        if (peek() == '/') {
            std::size_t at = pos_;
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected denominator", pos_);
            mpz_class den = parse_integer();
            if (sgn(den) == 0) fail("zero denominator", at);
            return Scalar::fraction(num, den, ring_->field);
        }
        return Scalar::fraction(num, 1, ring_->field);
    }

    Monomial parse_factors(Monomial acc) {
        acc = parse_factor(std::move(acc));
        for (;;) {
            skip_ws();
            std::size_t save = pos_;
            if (peek() != '*') return acc;
            ++pos_;
            skip_ws();
            if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
                pos_ = save;
                fail("expected a variable after '*'", pos_ + 1);
            }
            acc = parse_factor(std::move(acc));
        }
    }

    Monomial parse_factor(Monomial acc) {
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            fail("expected a variable", pos_);
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += get();
        auto idx = ring_->var_index(name);
        if (!idx) fail("unknown variable " + name, start);
        std::uint32_t exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent", pos_);
            mpz_class e = parse_integer();
            if (!e.fits_uint_p()) fail("exponent too large", pos_);
            exp = static_cast<std::uint32_t>(e.get_ui());
        }
        if (ring_->is_commutative()) {
            acc.data[*idx] += exp;
        } else {
            for (std::uint32_t k = 0; k < exp; ++k)
                acc.data.push_back(static_cast<std::uint32_t>(*idx));
        }
        return acc;
    }

    mpz_class parse_integer() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        return mpz_class(digits);
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) {
        throw parse_error(msg, line_, static_cast<int>(at) + 1);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    RingPtr ring_;
    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line_no) {
    return LineParser(ring, text, line_no).parse();
}

ParsedSystem parse_system(const RingPtr& ring, std::string_view text) {
    ParsedSystem out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++line_no;
        std::string_view body = line.substr(0, line.find('#'));
        bool blank = body.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            if (auto r = body.find('\r'); r != std::string_view::npos) body = body.substr(0, r);
            Polynomial p = parse_polynomial(ring, body, line_no);
            if (p.is_zero()) {
                out.warnings.push_back("zero polynomial at line " + std::to_string(line_no) +
                                       " skipped");
            } else {
                out.polys.push_back(std::move(p));
            }
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace homoggb
