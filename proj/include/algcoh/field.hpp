#ifndef ALGCOH_FIELD_HPP
#define ALGCOH_FIELD_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "algcoh/error.hpp"

namespace algcoh {

/// Exact field element. Values are kept canonical by FieldSpec:
/// rationals in lowest terms with positive denominator, prime-field
/// representatives as integers in [0, p-1].
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// The coefficient field: F_p for a prime p, or Q.
///
/// All scalar arithmetic goes through this object so that prime-field
/// values stay reduced. Instances are small values, freely copyable.
class FieldSpec {
public:
    enum class Kind { prime_field, rationals };

    /// F_p. Throws Error(invalid_argument) unless p is prime.
    static FieldSpec prime_field(long p);
    static FieldSpec rationals();

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime_field; }
    /// p for F_p, 0 for Q.
    long characteristic() const { return p_; }

    bool operator==(const FieldSpec& other) const = default;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_long(long v) const { return canon(Scalar(v)); }

    /// Canonical form: reduce mod p (inverting the denominator when needed),
    /// or lowest terms over Q.
    Scalar canon(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
    Scalar neg(const Scalar& a) const { return canon(-a); }
    /// Multiplicative inverse; throws Error(invalid_argument) on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
    bool is_one(const Scalar& a) const { return a == 1; }

    /// Scalar text syntax: decimal integers for F_p; "a" or "a/b" (b > 0,
    /// lowest terms on output) for Q. Parsing is lenient about non-canonical
    /// input and reduces; formatting always emits the canonical form.
    Scalar parse_scalar(std::string_view text) const;
    std::string format_scalar(const Scalar& x) const;

    /// "2", "3", ... or "Q" — the token used in presentation files.
    std::string to_string() const;
    static FieldSpec parse_spec(std::string_view token);

private:
    FieldSpec(Kind kind, long p) : kind_(kind), p_(p) {}

    Kind kind_;
    long p_; // 0 for Q
};

// Small vector helpers shared by the linear-algebra layer.

Vec vec_zero(int n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const FieldSpec& f, const Vec& a, const Vec& b);
Vec vec_sub(const FieldSpec& f, const Vec& a, const Vec& b);
Vec vec_scale(const FieldSpec& f, const Scalar& c, const Vec& v);
/// a += c*b
void vec_axpy(const FieldSpec& f, Vec& a, const Scalar& c, const Vec& b);
Vec vec_unit(int n, int i);

} // namespace algcoh

#endif
