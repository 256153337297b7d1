#include "turnover/words.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace turnover {

bool is_generator_letter(char c) { return c == 'a' || c == 'A' || c == 'b' || c == 'B'; }

char invert_letter(char c) {
    switch (c) {
        case 'a': return 'A';
        case 'A': return 'a';
        case 'b': return 'B';
        case 'B': return 'b';
        default: throw parse_error(std::string("invalid generator letter '") + c + "'");
    }
}

Word reduce(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (!is_generator_letter(c))
            throw parse_error(std::string("invalid generator letter '") + c + "'");
        if (!out.empty() && out.back() == invert_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return Word::parse(out);
}

Word Word::parse(const std::string& letters) {
    for (size_t i = 0; i < letters.size(); ++i) {
        if (!is_generator_letter(letters[i]))
            throw parse_error(std::string("invalid generator letter '") + letters[i] + "'");
        if (i + 1 < letters.size() && letters[i + 1] == invert_letter(letters[i]))
            return reduce(letters);
    }
    return Word(letters);
}

Word Word::gen(char letter, int exponent) {
    if (!is_generator_letter(letter))
        throw parse_error(std::string("invalid generator letter '") + letter + "'");
    if (exponent < 0) return Word(std::string(-exponent, invert_letter(letter)));
    return Word(std::string(exponent, letter));
}

Word Word::operator*(const Word& o) const { return reduce(letters_ + o.letters_); }

Word Word::inverse() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back(invert_letter(*it));
    return Word(out);
}

Word Word::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Word acc;
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

std::pair<Word, Word> gamma0_generators() {
    return {Word::parse("aab"), Word::parse("baa")};
}

TurnoverPresentation::TurnoverPresentation(int n1_, int n2_, int n3_)
    : n1(n1_), n2(n2_), n3(n3_) {
    if (n1 < 2 || n2 < 2 || n3 < 2)
        throw domain_error("turnover orders must all be at least 2");
}

TurnoverPresentation::Geometry TurnoverPresentation::geometry() const {
    // Compare 1/n1 + 1/n2 + 1/n3 with 1 exactly.
    mpq_class sum = mpq_class(1, n1) + mpq_class(1, n2) + mpq_class(1, n3);
    int c = cmp(sum, mpq_class(1));
    if (c > 0) return Geometry::spherical;
    if (c == 0) return Geometry::euclidean;
    return Geometry::hyperbolic;
}

std::array<Word, 3> TurnoverPresentation::relators() const {
    return {Word::gen('a', n1), Word::gen('b', n2),
            (Word::gen('a') * Word::gen('b')).pow(n3)};
}

std::array<Word, 3> TurnoverPresentation::cone_generators() const {
    return {Word::gen('a'), Word::gen('b'), Word::gen('a') * Word::gen('b')};
}

GroupRingElement::GroupRingElement(const mpq_class& c, const Word& w) {
    if (c != 0) terms_.push_back({c, w});
}

void GroupRingElement::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    std::vector<std::pair<mpq_class, Word>> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().second == t.second)
            out.back().first += t.first;
        else
            out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.first == 0; }),
              out.end());
    terms_ = std::move(out);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement out;
    out.terms_ = terms_;
    out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
    out.normalize();
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out = *this;
    for (auto& t : out.terms_) t.first = -t.first;
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    return *this + (-o);
}

GroupRingElement GroupRingElement::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    GroupRingElement out = *this;
    for (auto& t : out.terms_) t.first *= c;
    return out;
}

GroupRingElement GroupRingElement::translated(const Word& w) const {
    GroupRingElement out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = w * t.second;
    out.normalize();
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement out;
    for (const auto& s : terms_)
        for (const auto& t : o.terms_)
            out.terms_.push_back({s.first * t.first, s.second * t.second});
    out.normalize();
    return out;
}

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, w] : terms_) {
        if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        mpq_class a = abs(c);
        if (a != 1 || w.is_identity()) {
            os << a.get_num();
            if (a.get_den() != 1) os << "/" << a.get_den();
            if (!w.is_identity()) os << "*";
        }
        if (!w.is_identity()) os << w.str();
    }
    return os.str();
}

GroupRingElement fox_derivative(const Word& w, char generator) {
    if (generator != 'a' && generator != 'b')
        throw domain_error("fox derivative is taken with respect to 'a' or 'b'");
    GroupRingElement out;
    Word prefix;
    for (char c : w.letters()) {
        if (c == generator)
            out = out + GroupRingElement(1, prefix);
        else if (c == invert_letter(generator))
            out = out - GroupRingElement(1, prefix * Word::gen(c));
        prefix = prefix * Word::gen(c);
    }
    return out;
}

std::vector<Word> word_ball(int radius) {
    if (radius < 0) throw domain_error("negative ball radius");
    std::vector<Word> out{Word()};
    size_t layer_start = 0;
    static const char alphabet[4] = {'a', 'A', 'b', 'B'};
    for (int r = 0; r < radius; ++r) {
        size_t layer_end = out.size();
        for (size_t i = layer_start; i < layer_end; ++i)
            for (char c : alphabet) {
                Word next = out[i] * Word::gen(c);
                if (next.length() == out[i].length() + 1) out.push_back(next);
            }
        layer_start = layer_end;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace turnover
