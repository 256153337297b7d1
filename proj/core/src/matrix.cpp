#include "turnover/matrix.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace turnover {

namespace {

void check_square_size(int n) {
    if (n < 0) throw dimension_error("negative matrix size");
}

} // namespace

SquareMatrix SquareMatrix::zero(int n, Backend backend) {
    check_square_size(n);
    SquareMatrix m;
    m.n_ = n;
    if (backend == Backend::exact)
        m.e_ = std::vector<QuadExt>(static_cast<size_t>(n) * n);
    else
        m.e_ = std::vector<double>(static_cast<size_t>(n) * n, 0.0);
    return m;
}

SquareMatrix SquareMatrix::identity(int n, Backend backend) {
    SquareMatrix m = zero(n, backend);
    for (int i = 0; i < n; ++i) m.set(i, i, backend == Backend::exact ? Scalar(1) : Scalar::floating(1.0));
    return m;
}

SquareMatrix SquareMatrix::from_exact(int n, std::vector<QuadExt> entries) {
    check_square_size(n);
    if (entries.size() != static_cast<size_t>(n) * n)
        throw dimension_error("entry count does not match matrix size");
    SquareMatrix m;
    m.n_ = n;
    m.e_ = std::move(entries);
    return m;
}

SquareMatrix SquareMatrix::from_float(int n, std::vector<double> entries) {
    check_square_size(n);
    if (entries.size() != static_cast<size_t>(n) * n)
        throw dimension_error("entry count does not match matrix size");
    SquareMatrix m;
    m.n_ = n;
    m.e_ = std::move(entries);
    return m;
}

SquareMatrix SquareMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int n = static_cast<int>(rows.size());
    std::vector<QuadExt> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw dimension_error("ragged row in matrix literal");
        for (long v : row) entries.emplace_back(v);
    }
    return from_exact(n, std::move(entries));
}

void SquareMatrix::check_range(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw dimension_error("matrix index out of range");
}

Scalar SquareMatrix::at(int i, int j) const {
    check_range(i, j);
    if (is_exact()) return Scalar(std::get<std::vector<QuadExt>>(e_)[idx(i, j)]);
    return Scalar::floating(std::get<std::vector<double>>(e_)[idx(i, j)]);
}

void SquareMatrix::set(int i, int j, const Scalar& value) {
    check_range(i, j);
    if (value.backend() != backend())
        throw backend_mismatch("entry backend does not match matrix backend");
    if (is_exact())
        std::get<std::vector<QuadExt>>(e_)[idx(i, j)] = value.exact_value();
    else
        std::get<std::vector<double>>(e_)[idx(i, j)] = value.float_value();
}

const std::vector<QuadExt>& SquareMatrix::exact_entries() const {
    if (const auto* v = std::get_if<std::vector<QuadExt>>(&e_)) return *v;
    throw backend_mismatch("floating matrix has no exact entries");
}

const std::vector<double>& SquareMatrix::float_entries() const {
    if (const auto* v = std::get_if<std::vector<double>>(&e_)) return *v;
    throw backend_mismatch("exact matrix has no floating entries");
}

std::vector<QuadExt>& SquareMatrix::exact_entries() {
    if (auto* v = std::get_if<std::vector<QuadExt>>(&e_)) return *v;
    throw backend_mismatch("floating matrix has no exact entries");
}

std::vector<double>& SquareMatrix::float_entries() {
    if (auto* v = std::get_if<std::vector<double>>(&e_)) return *v;
    throw backend_mismatch("exact matrix has no floating entries");
}

namespace {

void check_compatible(const SquareMatrix& a, const SquareMatrix& b, const char* op) {
    if (a.size() != b.size())
        throw dimension_error(std::string("size mismatch in matrix ") + op);
    if (a.backend() != b.backend())
        throw backend_mismatch(std::string("mixed backends in matrix ") + op);
}

} // namespace

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
    check_compatible(*this, o, "addition");
    SquareMatrix out = *this;
    if (is_exact()) {
        auto& e = out.exact_entries();
        const auto& f = o.exact_entries();
        for (size_t k = 0; k < e.size(); ++k) e[k] += f[k];
    } else {
        auto& e = out.float_entries();
        const auto& f = o.float_entries();
        for (size_t k = 0; k < e.size(); ++k) e[k] += f[k];
    }
    return out;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
    check_compatible(*this, o, "subtraction");
    SquareMatrix out = *this;
    if (is_exact()) {
        auto& e = out.exact_entries();
        const auto& f = o.exact_entries();
        for (size_t k = 0; k < e.size(); ++k) e[k] -= f[k];
    } else {
        auto& e = out.float_entries();
        const auto& f = o.float_entries();
        for (size_t k = 0; k < e.size(); ++k) e[k] -= f[k];
    }
    return out;
}

SquareMatrix SquareMatrix::operator-() const {
    SquareMatrix out = *this;
    if (is_exact())
        for (auto& x : out.exact_entries()) x = -x;
    else
        for (auto& x : out.float_entries()) x = -x;
    return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    check_compatible(*this, o, "multiplication");
    SquareMatrix out = zero(n_, backend());
    if (is_exact()) {
        const auto& a = exact_entries();
        const auto& b = o.exact_entries();
        auto& c = out.exact_entries();
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const QuadExt& aik = a[idx(i, k)];
                if (aik.is_zero()) continue;
                for (int j = 0; j < n_; ++j) c[idx(i, j)] += aik * b[o.idx(k, j)];
            }
    } else {
        const auto& a = float_entries();
        const auto& b = o.float_entries();
        auto& c = out.float_entries();
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                double aik = a[idx(i, k)];
                if (aik == 0.0) continue;
                for (int j = 0; j < n_; ++j) c[idx(i, j)] += aik * b[o.idx(k, j)];
            }
    }
    return out;
}

SquareMatrix SquareMatrix::scaled(const Scalar& c) const {
    if (c.backend() != backend()) throw backend_mismatch("scale factor backend mismatch");
    SquareMatrix out = *this;
    if (is_exact()) {
        for (auto& x : out.exact_entries()) x *= c.exact_value();
    } else {
        for (auto& x : out.float_entries()) x *= c.float_value();
    }
    return out;
}

std::vector<Scalar> SquareMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != n_) throw dimension_error("vector size mismatch");
    std::vector<Scalar> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        Scalar acc = is_exact() ? Scalar(0) : Scalar::floating(0.0);
        for (int j = 0; j < n_; ++j) acc += at(i, j) * v[j];
        out.push_back(acc);
    }
    return out;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix out = zero(n_, backend());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.set(j, i, at(i, j));
    return out;
}

Scalar SquareMatrix::trace() const {
    Scalar acc = is_exact() ? Scalar(0) : Scalar::floating(0.0);
    for (int i = 0; i < n_; ++i) acc += at(i, i);
    return acc;
}

Scalar SquareMatrix::determinant() const {
    if (n_ == 0) return is_exact() ? Scalar(1) : Scalar::floating(1.0);
    if (is_exact()) {
        // Ordinary elimination over the field; pivots collected as a product.
        std::vector<QuadExt> a = exact_entries();
        QuadExt det(1);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (!a[idx(r, col)].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Scalar(QuadExt(0));
            if (pivot != col) {
                for (int j = 0; j < n_; ++j) std::swap(a[idx(pivot, j)], a[idx(col, j)]);
                det = -det;
            }
            det *= a[idx(col, col)];
            QuadExt inv = a[idx(col, col)].inverse();
            for (int r = col + 1; r < n_; ++r) {
                QuadExt factor = a[idx(r, col)] * inv;
                if (factor.is_zero()) continue;
                for (int j = col; j < n_; ++j) a[idx(r, j)] -= factor * a[idx(col, j)];
            }
        }
        return Scalar(det);
    }
    std::vector<double> a = float_entries();
    double det = 1.0;
    for (int col = 0; col < n_; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n_; ++r)
            if (std::fabs(a[idx(r, col)]) > std::fabs(a[idx(pivot, col)])) pivot = r;
        if (a[idx(pivot, col)] == 0.0) return Scalar::floating(0.0);
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(a[idx(pivot, j)], a[idx(col, j)]);
            det = -det;
        }
        det *= a[idx(col, col)];
        for (int r = col + 1; r < n_; ++r) {
            double factor = a[idx(r, col)] / a[idx(col, col)];
            if (factor == 0.0) continue;
            for (int j = col; j < n_; ++j) a[idx(r, j)] -= factor * a[idx(col, j)];
        }
    }
    return Scalar::floating(det);
}

SquareMatrix SquareMatrix::inverse() const {
    if (is_exact()) {
        std::vector<QuadExt> a = exact_entries();
        SquareMatrix inv = identity(n_, Backend::exact);
        auto& b = inv.exact_entries();
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (!a[idx(r, col)].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw singular_matrix("exact matrix is singular");
            if (pivot != col)
                for (int j = 0; j < n_; ++j) {
                    std::swap(a[idx(pivot, j)], a[idx(col, j)]);
                    std::swap(b[idx(pivot, j)], b[idx(col, j)]);
                }
            QuadExt pinv = a[idx(col, col)].inverse();
            for (int j = 0; j < n_; ++j) {
                a[idx(col, j)] *= pinv;
                b[idx(col, j)] *= pinv;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col) continue;
                QuadExt factor = a[idx(r, col)];
                if (factor.is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    a[idx(r, j)] -= factor * a[idx(col, j)];
                    b[idx(r, j)] -= factor * b[idx(col, j)];
                }
            }
        }
        return inv;
    }
    std::vector<double> a = float_entries();
    SquareMatrix inv = identity(n_, Backend::floating);
    auto& b = inv.float_entries();
    for (int col = 0; col < n_; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n_; ++r)
            if (std::fabs(a[idx(r, col)]) > std::fabs(a[idx(pivot, col)])) pivot = r;
        if (a[idx(pivot, col)] == 0.0) throw singular_matrix("floating matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(a[idx(pivot, j)], a[idx(col, j)]);
                std::swap(b[idx(pivot, j)], b[idx(col, j)]);
            }
        double pinv = 1.0 / a[idx(col, col)];
        for (int j = 0; j < n_; ++j) {
            a[idx(col, j)] *= pinv;
            b[idx(col, j)] *= pinv;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col) continue;
            double factor = a[idx(r, col)];
            if (factor == 0.0) continue;
            for (int j = 0; j < n_; ++j) {
                a[idx(r, j)] -= factor * a[idx(col, j)];
                b[idx(r, j)] -= factor * b[idx(col, j)];
            }
        }
    }
    return inv;
}

SquareMatrix SquareMatrix::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    SquareMatrix acc = identity(n_, backend());
    SquareMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

double SquareMatrix::sup_norm() const {
    double best = 0.0;
    if (is_exact()) {
        for (const auto& x : exact_entries()) best = std::max(best, std::fabs(x.to_double()));
    } else {
        for (double x : float_entries()) best = std::max(best, std::fabs(x));
    }
    return best;
}

double SquareMatrix::max_abs_diff(const SquareMatrix& o) const {
    check_compatible(*this, o, "comparison");
    return (*this - o).sup_norm();
}

bool SquareMatrix::exact_equals(const SquareMatrix& o) const {
    if (n_ != o.n_) return false;
    if (!is_exact() || !o.is_exact())
        throw backend_mismatch("exact_equals requires exact matrices");
    const auto& a = exact_entries();
    const auto& b = o.exact_entries();
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

bool SquareMatrix::is_identity(std::optional<double> tol) const {
    if (is_exact()) return exact_equals(identity(n_, Backend::exact));
    if (!tol) throw config_error("identity test on the floating backend requires a tolerance");
    return max_abs_diff(identity(n_, Backend::floating)) <= *tol;
}

SquareMatrix SquareMatrix::to_float() const {
    if (!is_exact()) return *this;
    std::vector<double> entries;
    entries.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& x : exact_entries()) entries.push_back(x.to_double());
    return from_float(n_, std::move(entries));
}

std::string SquareMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 < n_ ? ",\n" : "");
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) { return os << m.str(); }

} // namespace turnover
