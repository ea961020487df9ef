#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sixv {

using Rational = mpq_class;
using Integer = mpz_class;

// Model parameter on the critical line a = 1-x, b = 1+x, c = 2.
// Holds an exact rational strictly inside (-1, 1), stored in lowest terms
// with positive denominator (mpq_class canonical form).
class RationalParameter {
public:
    RationalParameter() : x_(0) {}

    explicit RationalParameter(Rational x) : x_(std::move(x)) {
        x_.canonicalize();
        if (abs(x_) >= 1)
            throw std::domain_error("RationalParameter: |x| < 1 required, got " + to_string(x_));
    }

    RationalParameter(long num, long den) : RationalParameter(Rational(num, den)) {}

    // Parses "p/q" or "p". Throws std::invalid_argument on malformed input,
    // std::domain_error if |x| >= 1.
    static RationalParameter parse(const std::string& s) {
        Rational r;
        if (r.set_str(s, 10) != 0)
            throw std::invalid_argument("cannot parse rational '" + s + "'");
        if (r.get_den() == 0)
            throw std::invalid_argument("zero denominator in '" + s + "'");
        return RationalParameter(r);
    }

    const Rational& value() const { return x_; }
    double to_double() const { return x_.get_d(); }
    std::string str() const { return to_string(x_); }

    RationalParameter negated() const { return RationalParameter(-x_); }

    // a = 1-x and b = 1+x, both positive for |x| < 1
    Rational weight_a() const { return 1 - x_; }
    Rational weight_b() const { return 1 + x_; }

    static std::string to_string(const Rational& r) { return r.get_str(); }

    friend bool operator==(const RationalParameter& p, const RationalParameter& q) {
        return p.x_ == q.x_;
    }

private:
    Rational x_;
};

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;  // base canonical => powers canonical
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace sixv
