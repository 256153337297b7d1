#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "turnover/errors.hpp"

namespace turnover {

enum class Backend { exact, floating };

// Element p + q*sqrt(d) of a real quadratic field, exact rational parts.
// d == 0 marks a plain rational (q is forced to 0); nonzero d is 2 or 3.
// d == 0 acts as a wildcard under arithmetic: it merges with any field.
class QuadExt {
public:
    QuadExt() : p_(0), q_(0), d_(0) {}
    QuadExt(const mpq_class& rational) : p_(rational), q_(0), d_(0) { canonicalize(); }
    QuadExt(long n) : p_(n), q_(0), d_(0) {}
    QuadExt(long num, long den);
    QuadExt(const mpq_class& p, const mpq_class& q, int d);

    static QuadExt sqrt_of(int d) { return QuadExt(0, 1, d); }

    const mpq_class& rational_part() const { return p_; }
    const mpq_class& radical_part() const { return q_; }
    int radicand() const { return d_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }
    bool is_one() const { return q_ == 0 && p_ == 1; }

    // Sign of the real number under the embedding with sqrt(d) > 0.
    int sign() const;

    double to_double() const;

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    QuadExt inverse() const;
    // Galois conjugate p - q*sqrt(d).
    QuadExt conjugate() const { return QuadExt(p_, -q_, d_); }
    QuadExt abs() const { return sign() >= 0 ? *this : -*this; }

    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

    // "p/q" or "p/q+r/s*sqrtD"; denominators of 1 are omitted.
    std::string str() const;
    static QuadExt parse(const std::string& text);

private:
    void canonicalize();
    static int merge_radicand(int a, int b);

    mpq_class p_, q_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

// One number carried on either the exact or the floating backend.
// Arithmetic never crosses backends; comparisons against zero on the
// floating backend always take an explicit tolerance.
class Scalar {
public:
    Scalar() : v_(QuadExt()) {}
    Scalar(const QuadExt& x) : v_(x) {}
    Scalar(const mpq_class& x) : v_(QuadExt(x)) {}
    Scalar(long n) : v_(QuadExt(n)) {}

    static Scalar exact(const QuadExt& x) { return Scalar(x); }
    static Scalar exact(long num, long den) { return Scalar(QuadExt(num, den)); }
    static Scalar floating(double x) { Scalar s; s.v_ = x; return s; }

    Backend backend() const {
        return std::holds_alternative<QuadExt>(v_) ? Backend::exact : Backend::floating;
    }
    bool is_exact() const { return backend() == Backend::exact; }

    const QuadExt& exact_value() const;
    double float_value() const;
    double to_double() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    // Exact backend ignores tol; floating backend requires it.
    bool is_zero(std::optional<double> tol = std::nullopt) const;
    // Structural equality: same backend, same value (bitwise for floating).
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::variant<QuadExt, double> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

} // namespace turnover
