#include "polyinv/chi.hpp"

#include "polyinv/error.hpp"
#include "polyinv/mixed_volume.hpp"

#include <numeric>

namespace polyinv {

namespace mp = boost::multiprecision;

namespace {

std::size_t total_degree(const ChiSeries::Monomial& m) { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }

void require_compatible(const ChiSeries& a, const ChiSeries& b) {
    if (a.num_symbols() != b.num_symbols() || a.truncation() != b.truncation()) {
        throw InputError("series over different symbol sets or truncations");
    }
}

}  // namespace

ChiSeries::ChiSeries(std::size_t num_symbols, std::size_t truncation)
    : num_symbols_(num_symbols), truncation_(truncation) {}

ChiSeries ChiSeries::one(std::size_t num_symbols, std::size_t truncation) {
    ChiSeries s(num_symbols, truncation);
    s.add_term(Monomial(num_symbols, 0), 1);
    return s;
}

ChiSeries ChiSeries::symbol(std::size_t num_symbols, std::size_t truncation, std::size_t index) {
    if (index >= num_symbols) {
        throw InputError("series symbol index out of range");
    }
    ChiSeries s(num_symbols, truncation);
    Monomial m(num_symbols, 0);
    m[index] = 1;
    s.add_term(m, 1);
    return s;
}

ChiSeries ChiSeries::geometric_fraction(std::size_t num_symbols, std::size_t truncation, std::size_t index) {
    if (index >= num_symbols) {
        throw InputError("series symbol index out of range");
    }
    ChiSeries s(num_symbols, truncation);
    Monomial m(num_symbols, 0);
    for (std::size_t j = 1; j <= truncation; ++j) {
        m[index] = static_cast<unsigned>(j);
        s.add_term(m, j % 2 == 1 ? 1 : -1);
    }
    return s;
}

Rational ChiSeries::coefficient(const Monomial& m) const {
    auto it = coefficients_.find(m);
    return it == coefficients_.end() ? Rational(0) : it->second;
}

void ChiSeries::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != num_symbols_) {
        throw InputError("series monomial has the wrong number of symbols");
    }
    if (c == 0 || total_degree(m) > truncation_) {
        return;
    }
    auto [it, inserted] = coefficients_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            coefficients_.erase(it);
        }
    }
}

ChiSeries ChiSeries::inverse_one_plus() const {
    if (coefficient(Monomial(num_symbols_, 0)) != 0) {
        throw DomainError("(1 + s)^-1 needs a series without constant term");
    }
    // 1 - s + s^2 - ...; s^j vanishes past the truncation degree.
    ChiSeries result = one(num_symbols_, truncation_);
    ChiSeries power = one(num_symbols_, truncation_);
    for (std::size_t j = 1; j <= truncation_; ++j) {
        power = power * *this;
        result = j % 2 == 1 ? result - power : result + power;
    }
    return result;
}

ChiSeries ChiSeries::homogeneous_part(std::size_t degree) const {
    ChiSeries out(num_symbols_, truncation_);
    for (const auto& [m, c] : coefficients_) {
        if (total_degree(m) == degree) {
            out.add_term(m, c);
        }
    }
    return out;
}

ChiSeries operator+(const ChiSeries& a, const ChiSeries& b) {
    require_compatible(a, b);
    ChiSeries out = a;
    for (const auto& [m, c] : b.coefficients()) {
        out.add_term(m, c);
    }
    return out;
}

ChiSeries operator-(const ChiSeries& a, const ChiSeries& b) {
    require_compatible(a, b);
    ChiSeries out = a;
    for (const auto& [m, c] : b.coefficients()) {
        out.add_term(m, -c);
    }
    return out;
}

ChiSeries operator*(const ChiSeries& a, const ChiSeries& b) {
    require_compatible(a, b);
    ChiSeries out(a.num_symbols(), a.truncation());
    ChiSeries::Monomial m(a.num_symbols());
    for (const auto& [ma, ca] : a.coefficients()) {
        const std::size_t da = total_degree(ma);
        for (const auto& [mb, cb] : b.coefficients()) {
            if (da + total_degree(mb) > a.truncation()) {
                continue;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

ChiSeries operator*(const Rational& k, const ChiSeries& a) {
    ChiSeries out(a.num_symbols(), a.truncation());
    for (const auto& [m, c] : a.coefficients()) {
        out.add_term(m, k * c);
    }
    return out;
}

Rational evaluate_series(const ChiSeries& s, const std::vector<LatticePolytope>& polys) {
    if (polys.size() != s.num_symbols()) {
        throw InputError("series has " + std::to_string(s.num_symbols()) + " symbols but " +
                         std::to_string(polys.size()) + " polytopes were given");
    }
    if (polys.empty()) {
        throw InputError("series evaluation needs at least one polytope");
    }
    const std::size_t n = polys.front().ambient_dim();
    for (const auto& p : polys) {
        if (p.ambient_dim() != n) {
            throw InputError("series evaluation over polytopes of different dimensions");
        }
        if (p.empty()) {
            throw InputError("series evaluation over an empty polytope");
        }
    }
    Rational total = 0;
    for (const auto& [m, c] : s.coefficients()) {
        if (total_degree(m) != n) {
            continue;
        }
        PolytopeTuple tuple;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (unsigned rep = 0; rep < m[i]; ++rep) {
                tuple.push_back(polys[i]);
            }
        }
        total += c * Rational(mixed_volume_normalized(tuple));
    }
    return total;
}

Integer chi_torus_ci(const std::vector<LatticePolytope>& polys) {
    const std::size_t k = polys.size();
    if (k == 0) {
        throw InputError("complete intersection with no equations");
    }
    const std::size_t n = polys.front().ambient_dim();
    if (k > n) {
        throw DomainError("generic system of " + std::to_string(k) + " equations in " + std::to_string(n) +
                          " variables is overdetermined");
    }
    ChiSeries product = ChiSeries::one(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        product = product * ChiSeries::geometric_fraction(k, n, i);
    }
    const Rational value = evaluate_series(product, polys);
    if (mp::denominator(value) != 1) {
        throw Error("internal: non-integral Euler characteristic");
    }
    return mp::numerator(value);
}

namespace {

std::string stratum_label(const std::vector<std::size_t>& zero_set, const std::vector<std::string>& names) {
    bool single_letters = true;
    for (const auto& n : names) {
        single_letters = single_letters && n.size() == 1;
    }
    std::string label = "Z_{";
    for (std::size_t j = 0; j < zero_set.size(); ++j) {
        if (j > 0 && !single_letters) {
            label += ",";
        }
        label += names[zero_set[j]];
    }
    return label + "}";
}

}  // namespace

AffineChi chi_affine_ci(const PolySystem& system) {
    const std::size_t n = system.num_vars();
    const std::size_t k = system.size();
    if (k == 0) {
        throw InputError("complete intersection with no equations");
    }
    if (k > n) {
        throw DomainError("generic system of " + std::to_string(k) + " equations in " + std::to_string(n) +
                          " variables is overdetermined");
    }
    if (n > 20) {
        throw InputError("too many variables for a stratum decomposition");
    }
    for (const auto& p : system.polys()) {
        for (const auto& [e, c] : p.terms()) {
            for (auto x : e) {
                if (x < 0) {
                    throw DomainError("affine Euler characteristic needs nonnegative exponents");
                }
            }
        }
    }

    AffineChi result;
    result.total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        StratumChi stratum;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                stratum.zero_set.push_back(i);
            }
        }
        stratum.label = stratum_label(stratum.zero_set, system.names());
        stratum.chi = 0;

        const PolySystem restricted = restrict_to_stratum(system, stratum.zero_set);
        const std::size_t remaining = restricted.num_vars();
        bool has_constant = false, has_zero = false;
        for (const auto& p : restricted.polys()) {
            has_constant = has_constant || p.is_nonzero_constant();
            has_zero = has_zero || p.is_zero();
        }
        if (has_constant) {
            stratum.reason = "nonzero constant equation";
        } else if (has_zero) {
            throw GenericityError("equation vanishes identically on stratum " + stratum.label);
        } else if (k > remaining) {
            stratum.reason = "overdetermined";
        } else {
            std::vector<LatticePolytope> polys;
            for (const auto& p : restricted.polys()) {
                polys.push_back(newton_polytope(p));
            }
            bool monomial = false;
            for (const auto& p : polys) {
                monomial = monomial || p.vertices().size() == 1;
            }
            if (monomial) {
                stratum.reason = "monomial equation";
            } else {
                stratum.chi = chi_torus_ci(polys);
            }
        }
        result.total += stratum.chi;
        result.strata.push_back(std::move(stratum));
    }
    return result;
}

}  // namespace polyinv
