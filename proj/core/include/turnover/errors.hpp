#pragma once

#include <stdexcept>
#include <string>

namespace turnover {

// Base class for every error this library raises on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing exact and floating operands in one operation.
class backend_mismatch : public error {
public:
    explicit backend_mismatch(const std::string& what) : error(what) {}
};

// Mixing two different quadratic fields (sqrt(2) vs sqrt(3)).
class field_mismatch : public error {
public:
    explicit field_mismatch(const std::string& what) : error(what) {}
};

// A required tolerance was not supplied for a floating-point operation.
class config_error : public error {
public:
    explicit config_error(const std::string& what) : error(what) {}
};

// Argument outside the mathematical domain of the operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

class dimension_error : public error {
public:
    explicit dimension_error(const std::string& what) : error(what) {}
};

// Unimodularity precondition failed.
class determinant_error : public error {
public:
    explicit determinant_error(const std::string& what) : error(what) {}
};

class singular_matrix : public error {
public:
    explicit singular_matrix(const std::string& what) : error(what) {}
};

class numeric_overflow : public error {
public:
    explicit numeric_overflow(const std::string& what) : error(what) {}
};

// Input lacks the block structure an operation requires.
class unsupported_reduction : public error {
public:
    explicit unsupported_reduction(const std::string& what) : error(what) {}
};

// Two internally computed quantities disagree; indicates a bug, not bad input.
class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error(what) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace turnover
