#include "homoggb/scalar.hpp"

namespace homoggb {

FieldSpec FieldSpec::prime(unsigned long p) {
    if (p < 2) throw error("field modulus must be a prime >= 2");
    if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 32) == 0)
        throw error("field modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = FieldKind::Prime;
    f.modulus = p;
    return f;
}

std::string FieldSpec::str() const {
    return kind == FieldKind::Rationals ? "q" : "fp:" + std::to_string(modulus);
}

Scalar::Scalar(const FieldSpec& f, mpq_class v) : field_(f), v_(std::move(v)) {
    canonicalize();
}

void Scalar::canonicalize() {
    v_.canonicalize();
    if (field_.kind == FieldKind::Prime) {
        if (v_.get_den() != 1) throw error("non-integral residue in prime field");
        mpz_class r;
        mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(field_.modulus).get_mpz_t());
        v_ = mpq_class(r);
    }
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw error("scalar field mismatch");
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw error("zero denominator");
    return Scalar(FieldSpec::rationals(), mpq_class(num, den));
}

Scalar Scalar::residue(long v, unsigned long p) {
    return Scalar(FieldSpec::prime(p), mpq_class(v));
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& f) {
    if (sgn(den) == 0) throw error("zero denominator");
    if (f.kind == FieldKind::Rationals) {
        mpq_class q(num);
        q /= mpq_class(den);
        return Scalar(f, q);
    }
    Scalar d(f, mpq_class(den));
    if (d.is_zero()) throw error("denominator is zero in the prime field");
    return Scalar(f, mpq_class(num)) * d.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw error("division by zero scalar");
    if (field_.kind == FieldKind::Rationals) return Scalar(field_, v_ / o.v_);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("zero scalar has no inverse");
    if (field_.kind == FieldKind::Rationals) return Scalar(field_, 1 / v_);
    mpz_class inv;
    int ok = mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(),
                        mpz_class(field_.modulus).get_mpz_t());
    if (!ok) throw error("residue not invertible");  // cannot happen for prime modulus
    return Scalar(field_, mpq_class(inv));
}

Scalar Scalar::abs() const {
    return is_negative() ? -*this : *this;
}

int Scalar::cmp(const Scalar& o) const {
    check_same_field(o);
    return ::cmp(v_, o.v_);
}

std::string Scalar::str() const {
    return v_.get_str();
}

}  // namespace homoggb
