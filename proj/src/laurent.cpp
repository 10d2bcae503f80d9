#include "polyinv/laurent.hpp"

#include "polyinv/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace polyinv {

namespace mp = boost::multiprecision;

LaurentPolynomial LaurentPolynomial::constant(std::size_t num_vars, const Rational& c) {
    LaurentPolynomial p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& exponent, const Rational& c) {
    LaurentPolynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

bool LaurentPolynomial::is_nonzero_constant() const {
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](auto e) { return e == 0; });
}

void LaurentPolynomial::add_term(const Exponent& exponent, const Rational& c) {
    if (exponent.size() != num_vars_) {
        throw InputError("exponent of length " + std::to_string(exponent.size()) + " in a polynomial of " +
                         std::to_string(num_vars_) + " variables");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational LaurentPolynomial::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

void require_same_vars(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.num_vars() != b.num_vars()) {
        throw InputError("polynomials in different numbers of variables");
    }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw InputError("exponent overflow");
    }
    return out;
}

}  // namespace

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_vars(a, b);
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.terms()) {
        out.add_term(e, c);
    }
    return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_vars(a, b);
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.terms()) {
        out.add_term(e, -c);
    }
    return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    require_same_vars(a, b);
    LaurentPolynomial out(a.num_vars());
    Exponent e(a.num_vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = checked_add(ea[i], eb[i]);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

PolySystem::PolySystem(std::size_t num_vars, std::vector<LaurentPolynomial> polys, std::vector<std::string> names)
    : num_vars_(num_vars), polys_(std::move(polys)), names_(std::move(names)) {
    for (const auto& p : polys_) {
        if (p.num_vars() != num_vars_) {
            throw InputError("system polynomial in " + std::to_string(p.num_vars()) + " variables, expected " +
                             std::to_string(num_vars_));
        }
    }
    if (names_.empty()) {
        names_ = indexed_names(num_vars_);
    } else if (names_.size() != num_vars_) {
        throw InputError("variable name list does not match the variable count");
    }
}

std::vector<std::string> indexed_names(std::size_t num_vars) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= num_vars; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct RawTerm {
    Rational coefficient = 1;
    std::map<std::size_t, std::int64_t> powers;
};

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    std::vector<RawTerm> run(std::size_t& max_index) {
        std::vector<RawTerm> terms;
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = take() == '-';
            skip_ws();
        }
        terms.push_back(term(negative));
        while (true) {
            skip_ws();
            if (at_end()) {
                break;
            }
            const char c = peek();
            if (c != '+' && c != '-') {
                fail(std::string("expected '+' or '-', found '") + c + "'");
            }
            take();
            skip_ws();
            terms.push_back(term(c == '-'));
        }
        max_index = max_index_;
        return terms;
    }

private:
    RawTerm term(bool negative) {
        RawTerm t;
        factor(t);
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*') {
                break;
            }
            take();
            skip_ws();
            factor(t);
        }
        if (negative) {
            t.coefficient = -t.coefficient;
        }
        return t;
    }

    void factor(RawTerm& t) {
        if (at_end()) {
            fail("expected a coefficient or a variable");
        }
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                take();
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                    fail("expected a denominator");
                }
                den = Integer(digits());
                if (den == 0) {
                    fail("zero denominator");
                }
            }
            t.coefficient *= Rational(num, den);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t line = line_, column = column_;
            const std::string name = identifier();
            const std::size_t index = resolve(name, line, column);
            std::int64_t power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                take();
                skip_ws();
                power = exponent();
            }
            auto& slot = t.powers[index];
            if (__builtin_add_overflow(slot, power, &slot)) {
                fail("exponent overflow");
            }
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::int64_t exponent() {
        bool paren = false;
        if (!at_end() && peek() == '(') {
            paren = true;
            take();
            skip_ws();
        }
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = take() == '-';
            skip_ws();
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected an integer exponent");
        }
        const std::size_t line = line_, column = column_;
        const std::string text = digits();
        std::int64_t value = 0;
        for (char d : text) {
            if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, d - '0', &value)) {
                throw ParseError("exponent overflow", line, column);
            }
        }
        if (paren) {
            skip_ws();
            if (at_end() || peek() != ')') {
                fail("expected ')'");
            }
            take();
        }
        return negative ? -value : value;
    }

    std::size_t resolve(const std::string& name, std::size_t line, std::size_t column) {
        if (!names_.empty()) {
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) {
                throw ParseError("unknown variable '" + name + "'", line, column);
            }
            return static_cast<std::size_t>(it - names_.begin());
        }
        if (name.size() < 2 || name[0] != 'x' ||
            !std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
            name[1] == '0') {
            throw ParseError("variable '" + name + "' is not of the form x<k> with k >= 1", line, column);
        }
        if (name.size() > 7) {
            throw ParseError("variable index too large", line, column);
        }
        const std::size_t index = std::stoul(name.substr(1));
        max_index_ = std::max(max_index_, index);
        return index - 1;
    }

    std::string digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out.push_back(take());
        }
        return out;
    }

    std::string identifier() {
        std::string out;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            out.push_back(take());
        }
        return out;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            take();
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    std::size_t max_index_ = 0;
};

}  // namespace

LaurentPolynomial parse(std::string_view text, const std::vector<std::string>& names, std::size_t min_vars) {
    Parser parser(text, names);
    std::size_t max_index = 0;
    const std::vector<RawTerm> raw = parser.run(max_index);
    const std::size_t n = names.empty() ? std::max(max_index, min_vars) : names.size();
    LaurentPolynomial p(n);
    for (const auto& t : raw) {
        Exponent e(n, 0);
        for (const auto& [index, power] : t.powers) {
            e[index] = power;
        }
        p.add_term(e, t.coefficient);
    }
    return p;
}

std::string render(const LaurentPolynomial& p, const std::vector<std::string>& names_in) {
    if (p.is_zero()) {
        return "0";
    }
    const std::vector<std::string> names = names_in.empty() ? indexed_names(p.num_vars()) : names_in;
    if (names.size() != p.num_vars()) {
        throw InputError("variable name list does not match the polynomial");
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational magnitude = negative ? Rational(-c) : c;
        const bool is_constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        bool need_star = false;
        if (magnitude != 1 || is_constant) {
            out << to_string(magnitude);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            out << (need_star ? "*" : "") << names[i];
            if (e[i] != 1) {
                out << "^" << e[i];
            }
            need_star = true;
        }
    }
    return out.str();
}

LatticePolytope newton_polytope(const LaurentPolynomial& p) {
    std::vector<LatticePoint> pts;
    pts.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        IntVector v;
        v.reserve(e.size());
        for (auto x : e) {
            v.emplace_back(x);
        }
        pts.emplace_back(std::move(v));
    }
    return LatticePolytope::hull(pts, p.num_vars());
}

LaurentPolynomial derivative(const LaurentPolynomial& p, std::size_t index) {
    if (index >= p.num_vars()) {
        throw InputError("derivative index out of range");
    }
    LaurentPolynomial out(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[index] == 0) {
            continue;
        }
        Exponent shifted = e;
        shifted[index] = checked_add(shifted[index], -1);
        out.add_term(shifted, c * e[index]);
    }
    return out;
}

std::vector<LatticePolytope> support_shift_partials(const LaurentPolynomial& p) {
    std::vector<LatticePolytope> out;
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
        out.push_back(newton_polytope(derivative(p, i)));
    }
    return out;
}

PolySystem restrict_to_stratum(const PolySystem& system, const std::vector<std::size_t>& zero_set) {
    const std::size_t n = system.num_vars();
    std::vector<bool> zeroed(n, false);
    for (std::size_t i : zero_set) {
        if (i >= n) {
            throw InputError("stratum variable index out of range");
        }
        zeroed[i] = true;
    }
    std::vector<std::size_t> kept;
    std::vector<std::string> kept_names;
    for (std::size_t i = 0; i < n; ++i) {
        if (!zeroed[i]) {
            kept.push_back(i);
            kept_names.push_back(system.names()[i]);
        }
    }
    std::vector<LaurentPolynomial> restricted;
    for (const auto& p : system.polys()) {
        LaurentPolynomial q(kept.size());
        for (const auto& [e, c] : p.terms()) {
            bool survives = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (!zeroed[i]) {
                    continue;
                }
                if (e[i] < 0) {
                    throw DomainError("variable " + system.names()[i] +
                                      " has a negative exponent and cannot be set to zero");
                }
                if (e[i] > 0) {
                    survives = false;
                }
            }
            if (!survives) {
                continue;
            }
            Exponent projected;
            projected.reserve(kept.size());
            for (std::size_t i : kept) {
                projected.push_back(e[i]);
            }
            q.add_term(projected, c);
        }
        restricted.push_back(std::move(q));
    }
    return PolySystem(kept.size(), std::move(restricted), std::move(kept_names));
}

namespace {

void enumerate_exponents(std::size_t num_vars, std::size_t index, std::int64_t remaining, bool exact, Exponent& current,
                         LaurentPolynomial& out) {
    if (index == num_vars) {
        if (!exact || remaining == 0) {
            out.add_term(current, 1);
        }
        return;
    }
    for (std::int64_t k = 0; k <= remaining; ++k) {
        current[index] = k;
        enumerate_exponents(num_vars, index + 1, remaining - k, exact, current, out);
    }
    current[index] = 0;
}

}  // namespace

LaurentPolynomial dense_polynomial(std::size_t num_vars, std::size_t degree, bool homogeneous,
                                   const Rational& constant) {
    LaurentPolynomial p(num_vars);
    Exponent current(num_vars, 0);
    enumerate_exponents(num_vars, 0, static_cast<std::int64_t>(degree), homogeneous, current, p);
    if (constant != 0) {
        const Exponent origin(num_vars, 0);
        p.add_term(origin, constant - p.coefficient(origin));
    }
    return p;
}

}  // namespace polyinv
