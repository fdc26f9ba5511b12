#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace homoggb {

/// Base error type for all library failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, Prime };

/// Coefficient field: the rationals, or Z/p for a prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    unsigned long modulus = 0;  // p when kind == Prime, else 0

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(unsigned long p);

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues are kept in [0, p). Arithmetic between
/// scalars of different fields throws.
class Scalar {
public:
    Scalar() : field_{FieldSpec::rationals()}, v_(0) {}

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    static Scalar of_int(long n, const FieldSpec& f) { return Scalar(f, mpq_class(n)); }
    static Scalar rational(long num, long den = 1);
    static Scalar residue(long v, unsigned long p);
    /// num/den in the given field (den inverted mod p for prime fields).
    static Scalar fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    /// Negative as printed (prime-field residues are never negative).
    bool is_negative() const { return field_.kind == FieldKind::Rationals && sgn(v_) < 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar abs() const;

    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Order on the underlying value; used only for canonical tie-breaks.
    int cmp(const Scalar& o) const;

    std::string str() const;

private:
    Scalar(const FieldSpec& f, mpq_class v);
    void canonicalize();
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class v_;
};

}  // namespace homoggb
