#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "turnover/scalar.hpp"

namespace turnover {

// Dense n x n matrix whose entries all live on one backend.
// Exact entries may mix radicand 0 with one nonzero radicand; two
// different nonzero radicands cannot meet in one matrix or product.
class SquareMatrix {
public:
    SquareMatrix() : n_(0), e_(std::vector<QuadExt>{}) {}

    static SquareMatrix zero(int n, Backend backend);
    static SquareMatrix identity(int n, Backend backend);
    static SquareMatrix from_exact(int n, std::vector<QuadExt> entries);
    static SquareMatrix from_float(int n, std::vector<double> entries);
    // Rows of integer literals, exact backend.
    static SquareMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    int size() const { return n_; }
    Backend backend() const {
        return std::holds_alternative<std::vector<QuadExt>>(e_) ? Backend::exact
                                                                : Backend::floating;
    }
    bool is_exact() const { return backend() == Backend::exact; }

    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& value);

    const std::vector<QuadExt>& exact_entries() const;
    const std::vector<double>& float_entries() const;
    std::vector<QuadExt>& exact_entries();
    std::vector<double>& float_entries();

    SquareMatrix operator+(const SquareMatrix& o) const;
    SquareMatrix operator-(const SquareMatrix& o) const;
    SquareMatrix operator*(const SquareMatrix& o) const;
    SquareMatrix operator-() const;
    SquareMatrix scaled(const Scalar& c) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    SquareMatrix transpose() const;
    Scalar trace() const;
    Scalar determinant() const;
    // Exact backend: fraction-free elimination; floating: partial pivoting.
    SquareMatrix inverse() const;
    SquareMatrix pow(int k) const;

    // Largest entry magnitude as a double (exact entries are converted).
    double sup_norm() const;
    double max_abs_diff(const SquareMatrix& o) const;

    bool exact_equals(const SquareMatrix& o) const;
    bool is_identity(std::optional<double> tol = std::nullopt) const;

    SquareMatrix to_float() const;

    std::string str() const;

private:
    int idx(int i, int j) const { return i * n_ + j; }
    void check_range(int i, int j) const;

    int n_;
    std::variant<std::vector<QuadExt>, std::vector<double>> e_;
};

std::ostream& operator<<(std::ostream& os, const SquareMatrix& m);

} // namespace turnover
