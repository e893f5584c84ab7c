#include "symchain/scalar.hpp"

#include <boost/multiprecision/integer.hpp>

namespace symchain {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CoefficientSpec CoefficientSpec::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
        throw std::invalid_argument("prime_field: modulus must be a prime below 2^31, got " + std::to_string(p));
    return {CoeffKind::PrimeField, p};
}

std::string CoefficientSpec::describe() const {
    switch (kind) {
        case CoeffKind::PrimeField: return "F_" + std::to_string(p);
        case CoeffKind::Rationals: return "Q";
        case CoeffKind::Integers: return "Z";
    }
    return "?";
}

void require_same_backend(const CoefficientSpec& a, const CoefficientSpec& b) {
    if (!(a == b))
        throw BackendMismatch("coefficient backends differ: " + a.describe() + " vs " + b.describe());
}

static Int mod_reduce(const Int& v, std::int64_t p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

/* Inverse of a mod p via extended gcd; a must be a unit. */
static Int mod_inverse(const Int& a, std::int64_t p) {
    Int r0 = p, r1 = mod_reduce(a, p), s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw MathError("not invertible mod " + std::to_string(p));
    return mod_reduce(s0, p);
}

Rational canonical_value(const CoefficientSpec& spec, const Rational& v) {
    switch (spec.kind) {
        case CoeffKind::Rationals:
            return v;  // cpp_rational keeps gcd-reduced, positive-denominator form
        case CoeffKind::Integers:
            if (denominator(v) != 1)
                throw MathError("non-integer value over Z: " + rational_to_string(v));
            return v;
        case CoeffKind::PrimeField: {
            Int num = mod_reduce(numerator(v), spec.p);
            Int den = mod_reduce(denominator(v), spec.p);
            if (den == 0) throw MathError("denominator not a unit mod " + std::to_string(spec.p));
            if (den != 1) num = mod_reduce(num * mod_inverse(den, spec.p), spec.p);
            return Rational(num);
        }
    }
    throw MathError("bad backend");
}

Scalar scalar_of(const CoefficientSpec& spec, long v) { return Scalar(spec, Rational(v)); }
Scalar scalar_of(const CoefficientSpec& spec, const Int& v) { return Scalar(spec, Rational(v)); }

Rational raw_add(const CoefficientSpec& spec, const Rational& a, const Rational& b) {
    return spec.kind == CoeffKind::PrimeField ? Rational(mod_reduce(numerator(a) + numerator(b), spec.p))
                                              : Rational(a + b);
}

Rational raw_sub(const CoefficientSpec& spec, const Rational& a, const Rational& b) {
    return spec.kind == CoeffKind::PrimeField ? Rational(mod_reduce(numerator(a) - numerator(b), spec.p))
                                              : Rational(a - b);
}

Rational raw_mul(const CoefficientSpec& spec, const Rational& a, const Rational& b) {
    return spec.kind == CoeffKind::PrimeField ? Rational(mod_reduce(numerator(a) * numerator(b), spec.p))
                                              : Rational(a * b);
}

Rational raw_neg(const CoefficientSpec& spec, const Rational& a) {
    return spec.kind == CoeffKind::PrimeField ? Rational(mod_reduce(-numerator(a), spec.p)) : Rational(-a);
}

Rational raw_inv(const CoefficientSpec& spec, const Rational& a) {
    if (a == 0) throw MathError("inverse of zero");
    switch (spec.kind) {
        case CoeffKind::PrimeField: return Rational(mod_inverse(numerator(a), spec.p));
        case CoeffKind::Rationals: return Rational(1) / a;
        case CoeffKind::Integers: throw MathError("inverse over Z is not defined (field operation)");
    }
    throw MathError("bad backend");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_backend(a.spec, b.spec);
    Scalar r; r.spec = a.spec; r.value = raw_add(a.spec, a.value, b.value);
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_backend(a.spec, b.spec);
    Scalar r; r.spec = a.spec; r.value = raw_sub(a.spec, a.value, b.value);
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_backend(a.spec, b.spec);
    Scalar r; r.spec = a.spec; r.value = raw_mul(a.spec, a.value, b.value);
    return r;
}

Scalar operator-(const Scalar& a) {
    Scalar r; r.spec = a.spec; r.value = raw_neg(a.spec, a.value);
    return r;
}

Scalar inverse(const Scalar& a) {
    Scalar r; r.spec = a.spec; r.value = raw_inv(a.spec, a.value);
    return r;
}

std::string rational_to_string(const Rational& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

std::string to_string(const Scalar& a) { return rational_to_string(a.value); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    auto slash = text.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("bad integer literal: " + t);
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad integer literal: " + t);
    };
    // cpp_int's string constructor rejects an explicit leading '+'
    auto to_int = [](const std::string& t) { return Int(t[0] == '+' ? t.substr(1) : t); };
    if (slash == std::string::npos) {
        check_int(text);
        return to_int(text);
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d = to_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(to_int(num), d);
}

Scalar parse_scalar(const CoefficientSpec& spec, const std::string& text) {
    return Scalar(spec, parse_rational(text));
}

Int as_integer(const Rational& v) {
    if (denominator(v) != 1) throw MathError("expected integer, got " + rational_to_string(v));
    return numerator(v);
}

}  // namespace symchain
