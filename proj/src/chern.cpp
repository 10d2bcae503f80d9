#include "polyinv/chern.hpp"

#include "polyinv/error.hpp"

namespace polyinv {

namespace mp = boost::multiprecision;

RingElement::RingElement(std::size_t n) : coeffs_(n + 1, Rational(0)) {}

RingElement RingElement::one(std::size_t n) {
    RingElement r(n);
    r.coeffs_[0] = 1;
    return r;
}

RingElement RingElement::generator(std::size_t n, const Rational& k) {
    RingElement r(n);
    if (n >= 1) {
        r.coeffs_[1] = k;
    }
    return r;
}

RingElement RingElement::from_coefficients(std::vector<Rational> coeffs) {
    if (coeffs.empty()) {
        throw InputError("ring element needs at least a constant coefficient");
    }
    RingElement r(coeffs.size() - 1);
    r.coeffs_ = std::move(coeffs);
    return r;
}

RingElement RingElement::inverse_one_plus() const {
    if (coeffs_[0] != 0) {
        throw DomainError("(1 + x)^-1 needs x without constant term");
    }
    const std::size_t n = dimension();
    RingElement result = one(n);
    RingElement power = one(n);
    for (std::size_t j = 1; j <= n; ++j) {
        power = power * *this;
        result = j % 2 == 1 ? result - power : result + power;
    }
    return result;
}

Rational RingElement::evaluate(const Integer& deg_top) const { return coeffs_.back() * Rational(deg_top); }

namespace {

void require_same(const RingElement& a, const RingElement& b) {
    if (a.dimension() != b.dimension()) {
        throw InputError("ring elements of different dimensions");
    }
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    RingElement r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] += b.coeffs_[i];
    }
    return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    RingElement r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] -= b.coeffs_[i];
    }
    return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same(a, b);
    const std::size_t n = a.dimension();
    RingElement r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

RingElement operator*(const Rational& k, const RingElement& a) {
    RingElement r = a;
    for (auto& c : r.coeffs_) {
        c *= k;
    }
    return r;
}

void validate(const IntersectionData& data) {
    if (data.n < 1) {
        throw InputError("manifold dimension must be at least 1");
    }
    if (data.chern.size() != data.n + 1) {
        throw InputError("expected " + std::to_string(data.n + 1) + " Chern coefficients, got " +
                         std::to_string(data.chern.size()));
    }
    if (data.chern[0] != 1) {
        throw InputError("Chern coefficient gamma_0 must be 1");
    }
    if (data.deg_top < 1) {
        throw InputError("deg_top must be positive");
    }
    if (data.d < 1) {
        throw InputError("divisor multiple d must be positive (D must be effective and nonzero)");
    }
    if (data.h_inf < 1) {
        throw InputError("hyperplane-at-infinity multiple must be positive");
    }
    if (mp::denominator(data.chern[data.n] * Rational(data.deg_top)) != 1) {
        throw InputError("chi(M) = gamma_n * deg_top is not an integer");
    }
}

namespace {

Integer integral(const Rational& v, const char* what) {
    if (mp::denominator(v) != 1) {
        throw InputError(std::string("inconsistent intersection data: ") + what + " evaluates to " + to_string(v));
    }
    return mp::numerator(v);
}

/// D (1 + D)^{-1}
RingElement divisor_factor(std::size_t n, const Integer& k) {
    const RingElement x = RingElement::generator(n, Rational(k));
    return x * x.inverse_one_plus();
}

Integer two_divisors(const IntersectionData& data, const Integer& d1, const Integer& d2) {
    const RingElement e = total_chern(data) * divisor_factor(data.n, d1) * divisor_factor(data.n, d2);
    return integral(e.evaluate(data.deg_top), "chi(D1 . D2)");
}

IntersectionData with_divisor(IntersectionData data, const Integer& d) {
    data.d = d;
    return data;
}

}  // namespace

RingElement total_chern(const IntersectionData& data) {
    validate(data);
    return RingElement::from_coefficients(data.chern);
}

RingElement chern_of_divisor(const IntersectionData& data) {
    return total_chern(data) * divisor_factor(data.n, data.d);
}

Integer chi_manifold(const IntersectionData& data) {
    validate(data);
    return mp::numerator(data.chern[data.n] * Rational(data.deg_top));
}

Integer chi_divisor_sum(const IntersectionData& data) {
    validate(data);
    Rational sum = 0;
    for (std::size_t i = 0; i < data.n; ++i) {
        const std::size_t k = data.n - i;
        Rational term = data.chern[i] * Rational(mp::pow(data.d, static_cast<unsigned>(k))) * Rational(data.deg_top);
        sum += (k - 1) % 2 == 0 ? term : -term;
    }
    return integral(sum, "chi(D)");
}

Integer chi_divisor(const IntersectionData& data) {
    const Integer ring = integral(chern_of_divisor(data).evaluate(data.deg_top), "chi(D)");
    if (ring != chi_divisor_sum(data)) {
        throw Error("internal: ring and explicit sum disagree on chi(D)");
    }
    return ring;
}

Integer chi_two_divisors(const IntersectionData& data, const Integer& d1, const Integer& d2) {
    validate(data);
    if (data.n < 2) {
        throw InputError("chi of a double intersection needs n >= 2");
    }
    if (d1 < 1 || d2 < 1) {
        throw InputError("divisor multiples must be positive");
    }
    return two_divisors(data, d1, d2);
}

Integer chi_affine_divisor(const IntersectionData& data) {
    validate(data);
    if (data.n < 2) {
        throw InputError("affine part of a divisor needs n >= 2");
    }
    return chi_divisor(data) - two_divisors(data, data.d, data.h_inf);
}

Integer mu_from_chern(const IntersectionData& data, const Integer& chi_M) {
    validate(data);
    if (chi_M != chi_manifold(data)) {
        throw InputError("chi(M) = " + to_string(chi_M) + " does not match gamma_n * deg_top = " +
                         to_string(chi_manifold(data)));
    }
    const Integer chi_h = chi_divisor(with_divisor(data, data.h_inf));
    const Integer chi_d = chi_divisor(data);
    // D . H_inf is empty on a curve.
    const Integer chi_dh = data.n >= 2 ? two_divisors(data, data.d, data.h_inf) : Integer(0);
    const Integer alternating = chi_M - chi_h - chi_d + chi_dh;
    return data.n % 2 == 0 ? alternating : Integer(-alternating);
}

Integer mu_from_chern(const IntersectionData& data) { return mu_from_chern(data, chi_manifold(data)); }

IntersectionData projective_space(std::size_t n, const Integer& d, const Integer& h_inf) {
    IntersectionData data;
    data.n = n;
    data.deg_top = 1;
    data.d = d;
    data.h_inf = h_inf;
    Integer binom = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        data.chern.emplace_back(binom);
        binom = binom * (n + 1 - i) / (i + 1);
    }
    return data;
}

}  // namespace polyinv
