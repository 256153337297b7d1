#include "turnover/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace turnover {

namespace {

bool valid_radicand(int d) { return d == 0 || d == 2 || d == 3; }

} // namespace

QuadExt::QuadExt(long num, long den) : p_(num, den), q_(0), d_(0) {
    if (den == 0) throw domain_error("rational with zero denominator");
    p_.canonicalize();
}

QuadExt::QuadExt(const mpq_class& p, const mpq_class& q, int d) : p_(p), q_(q), d_(d) {
    if (!valid_radicand(d)) throw field_mismatch("unsupported radicand " + std::to_string(d));
    if (q_ != 0 && d_ == 0) throw field_mismatch("radical part requires a nonzero radicand");
    canonicalize();
}

void QuadExt::canonicalize() {
    p_.canonicalize();
    q_.canonicalize();
    if (q_ == 0) d_ = 0;
}

int QuadExt::merge_radicand(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b)
        throw field_mismatch("cannot mix sqrt(" + std::to_string(a) + ") with sqrt(" +
                             std::to_string(b) + ")");
    return a;
}

int QuadExt::sign() const {
    int sp = sgn(p_);
    int sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 against q^2*d. Equality would force
    // sqrt(d) rational, impossible for d in {2,3} with q != 0.
    mpq_class lhs = p_ * p_;
    mpq_class rhs = q_ * q_ * d_;
    int c = cmp(lhs, rhs);
    if (c == 0) throw internal_error("sqrt(d) collapsed to a rational");
    return c > 0 ? sp : sq;
}

double QuadExt::to_double() const {
    double out = p_.get_d();
    if (q_ != 0) out += q_.get_d() * std::sqrt(static_cast<double>(d_));
    return out;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    int d = merge_radicand(d_, o.d_);
    return QuadExt(p_ + o.p_, q_ + o.q_, d);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    int d = merge_radicand(d_, o.d_);
    return QuadExt(p_ - o.p_, q_ - o.q_, d);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    int d = merge_radicand(d_, o.d_);
    return QuadExt(p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, d);
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw domain_error("division by exact zero");
    // (p + q sqrt d)^-1 = (p - q sqrt d) / (p^2 - q^2 d); the norm is
    // nonzero because sqrt(d) is irrational.
    mpq_class norm = p_ * p_ - q_ * q_ * d_;
    if (norm == 0) throw internal_error("zero field norm for nonzero element");
    return QuadExt(p_ / norm, -q_ / norm, d_);
}

QuadExt QuadExt::operator/(const QuadExt& o) const { return *this * o.inverse(); }

bool QuadExt::operator==(const QuadExt& o) const {
    if (p_ != o.p_ || q_ != o.q_) return false;
    if (q_ == 0) return true;
    return d_ == o.d_;
}

namespace {

std::string rational_str(const mpq_class& x) {
    std::ostringstream os;
    os << x.get_num();
    if (x.get_den() != 1) os << "/" << x.get_den();
    return os.str();
}

// Parses "num" or "num/den" starting at pos; advances pos past the token.
mpq_class parse_rational(const std::string& s, size_t& pos) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
        throw parse_error("expected a rational in '" + s + "' at offset " + std::to_string(start));
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw parse_error("missing denominator in '" + s + "'");
        den = s.substr(dstart, pos - dstart);
    }
    mpq_class out(num + "/" + den);
    out.canonicalize();
    if (negative) out = -out;
    return out;
}

} // namespace

std::string QuadExt::str() const {
    if (q_ == 0) return rational_str(p_);
    std::string out = rational_str(p_);
    if (sgn(q_) >= 0) out += "+";
    out += rational_str(q_) + "*sqrt" + std::to_string(d_);
    return out;
}

QuadExt QuadExt::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty scalar literal");
    size_t pos = 0;
    mpq_class p = parse_rational(s, pos);
    if (pos == s.size()) return QuadExt(p, 0, 0);
    if (s[pos] != '+' && s[pos] != '-')
        throw parse_error("unexpected character in scalar literal '" + text + "'");
    mpq_class q = parse_rational(s, pos);
    if (pos >= s.size() || s[pos] != '*')
        throw parse_error("expected '*sqrtD' in scalar literal '" + text + "'");
    ++pos;
    if (s.compare(pos, 4, "sqrt") != 0)
        throw parse_error("expected 'sqrt' in scalar literal '" + text + "'");
    pos += 4;
    if (pos >= s.size()) throw parse_error("missing radicand in scalar literal '" + text + "'");
    int d = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        d = d * 10 + (s[pos] - '0');
        ++pos;
    }
    if (pos != s.size()) throw parse_error("trailing characters in scalar literal '" + text + "'");
    return QuadExt(p, q, d);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

const QuadExt& Scalar::exact_value() const {
    if (const auto* q = std::get_if<QuadExt>(&v_)) return *q;
    throw backend_mismatch("floating scalar has no exact value");
}

double Scalar::float_value() const {
    if (const auto* d = std::get_if<double>(&v_)) return *d;
    throw backend_mismatch("exact scalar accessed as floating");
}

double Scalar::to_double() const {
    if (const auto* d = std::get_if<double>(&v_)) return *d;
    return std::get<QuadExt>(v_).to_double();
}

namespace {

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op, const char* name) {
    if (a.backend() != b.backend())
        throw backend_mismatch(std::string("mixed backends in scalar ") + name);
    if (a.is_exact()) return Scalar(op(a.exact_value(), b.exact_value()));
    return Scalar::floating(op(a.float_value(), b.float_value()));
}

} // namespace

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-exact_value());
    return Scalar::floating(-float_value());
}

Scalar Scalar::operator+(const Scalar& o) const {
    return binary(*this, o, [](const auto& x, const auto& y) { return x + y; }, "addition");
}

Scalar Scalar::operator-(const Scalar& o) const {
    return binary(*this, o, [](const auto& x, const auto& y) { return x - y; }, "subtraction");
}

Scalar Scalar::operator*(const Scalar& o) const {
    return binary(*this, o, [](const auto& x, const auto& y) { return x * y; }, "multiplication");
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (backend() != o.backend()) throw backend_mismatch("mixed backends in scalar division");
    if (is_exact()) return Scalar(exact_value() / o.exact_value());
    double d = o.float_value();
    if (d == 0.0) throw domain_error("floating division by zero");
    return Scalar::floating(float_value() / d);
}

bool Scalar::is_zero(std::optional<double> tol) const {
    if (is_exact()) return exact_value().is_zero();
    if (!tol) throw config_error("zero test on the floating backend requires a tolerance");
    return std::fabs(float_value()) <= *tol;
}

bool Scalar::operator==(const Scalar& o) const {
    if (backend() != o.backend()) return false;
    if (is_exact()) return exact_value() == o.exact_value();
    return float_value() == o.float_value();
}

std::string Scalar::str() const {
    if (is_exact()) return exact_value().str();
    std::ostringstream os;
    os.precision(17);
    os << float_value();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

} // namespace turnover
