#pragma once

/* Exact coefficient arithmetic over F_p, Q and Z.
 *
 * A CoefficientSpec names the ring every other layer computes over; it is
 * carried once per matrix/complex, never per entry.  Scalar is the public
 * value type: a canonical representative together with its spec.  Canonical
 * forms: F_p residues live in [0, p); Z values have denominator 1; Q values
 * are gcd-reduced with positive denominator (maintained by cpp_rational).
 * Mixing backends in one operation throws BackendMismatch.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symchain {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct BackendMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CoeffKind { PrimeField, Rationals, Integers };

struct CoefficientSpec {
    CoeffKind kind = CoeffKind::Integers;
    std::int64_t p = 0;  // set iff kind == PrimeField

    static CoefficientSpec prime_field(std::int64_t p);
    static CoefficientSpec rationals() { return {CoeffKind::Rationals, 0}; }
    static CoefficientSpec integers() { return {CoeffKind::Integers, 0}; }

    bool is_field() const { return kind != CoeffKind::Integers; }
    bool operator==(const CoefficientSpec&) const = default;
    std::string describe() const;
};

void require_same_backend(const CoefficientSpec& a, const CoefficientSpec& b);

/* Canonical representative of v in the given ring.  For F_p this reduces the
 * numerator times the inverse denominator mod p; the denominator must be a
 * unit mod p. */
Rational canonical_value(const CoefficientSpec& spec, const Rational& v);

struct Scalar {
    CoefficientSpec spec;
    Rational value;  // always canonical for spec

    Scalar() = default;
    Scalar(CoefficientSpec s, Rational v) : spec(s), value(canonical_value(s, std::move(v))) {}

    bool is_zero() const { return value == 0; }
    bool is_one() const { return value == 1; }
    bool operator==(const Scalar&) const = default;
};

Scalar scalar_of(const CoefficientSpec& spec, long v);
Scalar scalar_of(const CoefficientSpec& spec, const Int& v);

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);

/* Multiplicative inverse; fields only.  Over Z (or of 0) throws MathError. */
Scalar inverse(const Scalar& a);

/* Decimal string forms: "3", "-7", "2/5". */
std::string to_string(const Scalar& a);
std::string rational_to_string(const Rational& v);
Rational parse_rational(const std::string& text);
Scalar parse_scalar(const CoefficientSpec& spec, const std::string& text);

/* Raw-value helpers used by the matrix layer (values canonical for spec). */
Rational raw_add(const CoefficientSpec& spec, const Rational& a, const Rational& b);
Rational raw_sub(const CoefficientSpec& spec, const Rational& a, const Rational& b);
Rational raw_mul(const CoefficientSpec& spec, const Rational& a, const Rational& b);
Rational raw_neg(const CoefficientSpec& spec, const Rational& a);
Rational raw_inv(const CoefficientSpec& spec, const Rational& a);

/* Exact numerator of an integer-valued rational; throws if denominator != 1. */
Int as_integer(const Rational& v);

bool is_prime(std::int64_t n);

}  // namespace symchain
