#include "algcoh/field.hpp"

#include <cctype>

namespace algcoh {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime_field(long p) {
    if (!is_prime(p))
        fail(Error::Kind::invalid_argument, std::to_string(p) + " is not prime");
    return FieldSpec(Kind::prime_field, p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::rationals, 0); }

Scalar FieldSpec::canon(const Scalar& x) const {
    if (kind_ == Kind::rationals) {
        Scalar r = x;
        r.canonicalize();
        return r;
    }
    mpz_class p(p_);
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = x.get_den() % p;
    if (den < 0) den += p;
    if (den == 0)
        fail(Error::Kind::invalid_argument,
             "denominator divisible by " + std::to_string(p_));
    if (den != 1) {
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num = (num * dinv) % p;
    }
    return Scalar(num);
}

Scalar FieldSpec::inv(const Scalar& a) const {
    if (is_zero(a))
        fail(Error::Kind::invalid_argument, "division by zero");
    if (kind_ == Kind::rationals) {
        Scalar r = 1 / a;
        r.canonicalize();
        return r;
    }
    Scalar c = canon(a);
    mpz_class p(p_), r;
    mpz_invert(r.get_mpz_t(), c.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

Scalar FieldSpec::parse_scalar(std::string_view text) const {
    std::string s(text);
    if (s.empty())
        fail(Error::Kind::parse, "empty scalar");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            fail(Error::Kind::parse, "bad scalar '" + s + "'");
    auto slash = s.find('/');
    if (slash != std::string::npos && kind_ == Kind::prime_field)
        fail(Error::Kind::parse, "prime-field scalar '" + s + "' must be a decimal integer");
    try {
        Scalar v(s, 10);
        return canon(v);
    } catch (const std::invalid_argument&) {
        fail(Error::Kind::parse, "bad scalar '" + s + "'");
    }
}

std::string FieldSpec::format_scalar(const Scalar& x) const {
    return canon(x).get_str();
}

std::string FieldSpec::to_string() const {
    return kind_ == Kind::rationals ? "Q" : std::to_string(p_);
}

FieldSpec FieldSpec::parse_spec(std::string_view token) {
    if (token == "Q" || token == "q")
        return rationals();
    std::string s(token);
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            fail(Error::Kind::parse, "bad field '" + s + "' (expected a prime or Q)");
    long p = 0;
    try {
        p = std::stol(s);
    } catch (...) {
        fail(Error::Kind::parse, "bad field '" + s + "'");
    }
    return prime_field(p);
}

Vec vec_zero(int n) { return Vec(static_cast<size_t>(n), Scalar(0)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vec vec_add(const FieldSpec& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const FieldSpec& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const FieldSpec& f, const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = f.mul(c, v[i]);
    return r;
}

void vec_axpy(const FieldSpec& f, Vec& a, const Scalar& c, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(c, b[i]));
}

Vec vec_unit(int n, int i) {
    Vec v = vec_zero(n);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

} // namespace algcoh
