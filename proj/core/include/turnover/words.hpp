#pragma once

#include <array>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "turnover/errors.hpp"

namespace turnover {

// Freely reduced word over two generators. Letters: 'a', 'b' and their
// inverses 'A', 'B'. The empty word is the identity.
class Word {
public:
    Word() = default;

    static Word parse(const std::string& letters);
    static Word gen(char letter, int exponent = 1);

    const std::string& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_identity() const { return letters_.empty(); }

    Word operator*(const Word& o) const;
    Word inverse() const;
    Word pow(int k) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }
    bool operator<(const Word& o) const {
        if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
        return letters_ < o.letters_;
    }

    std::string str() const { return letters_.empty() ? "1" : letters_; }

private:
    explicit Word(std::string reduced) : letters_(std::move(reduced)) {}
    std::string letters_;
};

bool is_generator_letter(char c);
char invert_letter(char c);

// Free reduction of an arbitrary letter string.
Word reduce(const std::string& raw);

// Index-two subgroup generators for the triangle turnover: a^2 b and b a^2.
std::pair<Word, Word> gamma0_generators();

// Group with presentation < a, b | a^n1 = b^n2 = (ab)^n3 = 1 >.
struct TurnoverPresentation {
    int n1, n2, n3;

    TurnoverPresentation(int n1_, int n2_, int n3_);

    // Sum of reciprocal orders against 1 decides the geometry.
    enum class Geometry { spherical, euclidean, hyperbolic };
    Geometry geometry() const;
    bool is_euclidean() const { return geometry() == Geometry::euclidean; }

    std::array<Word, 3> relators() const;
    // Generators of the three turnover cone subgroups: a, b, ab.
    std::array<Word, 3> cone_generators() const;

    bool operator==(const TurnoverPresentation& o) const {
        return n1 == o.n1 && n2 == o.n2 && n3 == o.n3;
    }
};

// Finite rational combination of group elements, kept normalized:
// words sorted, coefficients nonzero.
class GroupRingElement {
public:
    GroupRingElement() = default;
    GroupRingElement(const mpq_class& c, const Word& w);

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return GroupRingElement(1, Word()); }

    const std::vector<std::pair<mpq_class, Word>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement scaled(const mpq_class& c) const;
    // Left translation by a group element.
    GroupRingElement translated(const Word& w) const;
    GroupRingElement operator*(const GroupRingElement& o) const;

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    void normalize();
    std::vector<std::pair<mpq_class, Word>> terms_;
};

// Free differential with respect to 'a' or 'b': additive on products via
// d(uv) = du + u dv, with dg = 1 and d(g^-1) = -g^-1 on the generator.
GroupRingElement fox_derivative(const Word& w, char generator);

// Words of length at most `radius` in the free group, shortlex order.
std::vector<Word> word_ball(int radius);

} // namespace turnover
