// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "polyinv/chern.hpp"
#include "polyinv/chi.hpp"
#include "polyinv/crit.hpp"
#include "polyinv/error.hpp"
#include "polyinv/laurent.hpp"
#include "polyinv/mixed_volume.hpp"
#include "polyinv/orbit.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace polyinv;

namespace {

struct Result {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            detail << what;
        }
        ok = ok && cond;
    }
};

const std::vector<std::string> kVars{"a", "b", "c", "d"};

Result sl2_degree() {
    Result r;
    const auto D = unit_simplex(4);
    for (long n = 1; n <= 5; ++n) {
        const Integer mv = mixed_volume_normalized({dilate(D, 2), dilate(D, n), dilate(D, n), dilate(D, n)});
        r.expect(mv == 2 * n * n * n, "n=" + std::to_string(n) + " gave " + mv.str());
    }
    return r;
}

Result sl2_section() {
    Result r;
    for (long n = 1; n <= 5; ++n) {
        PolySystem s(4, {parse("a^2+b^2+c^2+d^2-1", kVars), dense_polynomial(4, n, true, -1)}, kVars);
        const AffineChi chi = chi_affine_ci(s);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        r.expect(chi.total == 2 * n * n * n - 4 * n * n + 4 * n, tag + "total " + chi.total.str());
        for (const auto& st : chi.strata) {
            Integer want = 0;
            switch (st.zero_set.size()) {
                case 0: want = 2 * n * n * n + 4 * n * n + 8 * n; break;
                case 1: want = -2 * n * n - 4 * n; break;
                case 2: want = 2 * n; break;
                default: break;
            }
            r.expect(st.chi == want, tag + st.label + " gave " + st.chi.str());
        }
    }
    return r;
}

Result hypersurface_sign() {
    Result r;
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        const auto P = oracle::random_full_polytope(rng, n, 2 + static_cast<std::size_t>(i % 3), n == 4 ? 1 : 2);
        const Integer vol = normalized_volume(P);
        if (n == 2) {
            r.expect(vol == oracle::shoelace_twice_area(P.vertices()), "volume disagrees with shoelace");
        }
        const Integer chi = chi_torus_ci({P});
        const Integer want = n % 2 == 1 ? vol : Integer(-vol);
        r.expect(chi == want, "dim " + std::to_string(n) + ": " + chi.str() + " vs " + want.str());
    }
    return r;
}

Result bkk_oracles() {
    Result r;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        std::mt19937_64 rng(seed);
        CritOptions opt;
        opt.seed = seed;
        std::uniform_int_distribution<std::int64_t> ex(-6, 6);
        for (int i = 0; i < 30; ++i) {
            std::vector<std::int64_t> support;
            while (support.size() < 2 || std::all_of(support.begin(), support.end(),
                                                     [&](auto v) { return v == support[0]; })) {
                support.push_back(ex(rng));
            }
            LaurentPolynomial p(1);
            for (auto e : support) {
                p.add_term({e}, 1);
            }
            const Integer bkk = bkk_count(PolySystem(1, {p}));
            const auto numeric = univariate_root_count(support, opt);
            r.expect(Integer(numeric.count) == bkk, "univariate mismatch, seed " + std::to_string(seed));
        }
        std::uniform_int_distribution<int> e2(0, 3);
        int done = 0;
        while (done < 20) {
            std::vector<LaurentPolynomial> polys;
            for (int k = 0; k < 2; ++k) {
                LaurentPolynomial p(2);
                for (int t = 0; t < 3 + done % 3; ++t) {
                    p.add_term({e2(rng), e2(rng)}, 1);
                }
                polys.push_back(p);
            }
            PolySystem s(2, polys);
            if (newton_polytope(s[0]).affine_dim() < 2 || newton_polytope(s[1]).affine_dim() < 2) {
                continue;
            }
            opt.seed = seed * 1000 + static_cast<std::uint64_t>(done);
            const auto numeric = bivariate_root_count(s, opt);
            r.expect(Integer(numeric.count) == bkk_count(s), "bivariate mismatch, seed " + std::to_string(seed));
            ++done;
        }
    }
    return r;
}

Result crit_counts() {
    Result r;
    std::mt19937_64 rng(77);
    std::normal_distribution<double> g(0.0, 1.0);
    for (std::size_t n = 2; n <= 6; ++n) {
        ComplexVector f(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < f.size(); ++i) {
            f(i) = Complex(g(rng), g(rng));
        }
        const auto rep = quadric_crit(f, 1.0);
        r.expect(rep.count == 2 && rep.max_residual < 1e-8, "quadric n=" + std::to_string(n));
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto N = static_cast<Eigen::Index>(n);
        ComplexMatrix F(N, N);
        for (Eigen::Index i = 0; i < N; ++i) {
            for (Eigen::Index j = 0; j < N; ++j) {
                F(i, j) = Complex(g(rng), g(rng));
            }
        }
        const auto rep = det_crit(F, 1.0);
        r.expect(rep.count == n && rep.max_residual < 1e-8, "det n=" + std::to_string(n));
    }
    return r;
}

std::vector<LatticePoint> interior_origin_weights(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        auto w = oracle::random_points(rng, n, n + 1 + rng() % 4, -3, 3);
        if (oracle::origin_strictly_interior(w, n)) {
            return w;
        }
    }
}

Result torus_identity() {
    Result r;
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        const WeightSet w{n, interior_origin_weights(rng, n)};
        const Integer deg = torus_orbit_degree(w);
        const Integer crit = torus_crit_count(w);
        r.expect(deg == crit, "dim " + std::to_string(n) + ": " + crit.str() + " vs " + deg.str());
    }
    return r;
}

Result closedness() {
    Result r;
    std::mt19937_64 rng(31337);
    int closed = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        const auto pts = oracle::random_points(rng, n, 2 + static_cast<std::size_t>(i % 5), -3, 3);
        const bool want = oracle::origin_strictly_interior(pts, n);
        closed += want ? 1 : 0;
        r.expect(is_closed_orbit_embedding({n, pts}) == want, "set " + std::to_string(i));
    }
    r.expect(closed > 0 && closed < 50, "sample did not contain both outcomes");
    return r;
}

Result section_pipeline() {
    Result r;
    for (long n = 2; n <= 5; ++n) {
        const Integer want = (n * n) % 2 == 0 ? Integer(n) : Integer(-n);
        r.expect(section_chi(0, n * n - 1, n) == want, "SL(" + std::to_string(n) + ")");
    }
    r.expect(section_chi(0, 26, 3) == -3, "E6");
    r.expect(catalog_section_chi(23, {2, 0}) == 2, "catalog entry 23");
    PolySystem s(4, {parse("a^2+b^2+c^2+d^2-1", kVars), dense_polynomial(4, 1, true, -1)}, kVars);
    r.expect(catalog_section_chi(23, {2, 0}) == chi_affine_ci(s).total, "entry 23 vs strata engine at n=1");
    return r;
}

Result chern_pipeline() {
    Result r;
    for (long d = 1; d <= 6; ++d) {
        const Integer got = chi_divisor(projective_space(2, d));
        r.expect(got == 3 * d - d * d && got == 2 - (d - 1) * (d - 2), "P2 d=" + std::to_string(d));
    }
    IntersectionData q;
    q.n = 2;
    q.deg_top = 2;
    q.chern = {1, 2, 2};
    q.d = 1;
    ComplexVector f(3);
    f << Complex(0.3, -1.1), Complex(1.7, 0.2), Complex(-0.4, 0.9);
    const auto rep = quadric_crit(f, 1.0);
    r.expect(mu_from_chern(q) == 2 && Integer(rep.count) == mu_from_chern(q), "quadric surface mu");
    for (std::size_t d = 1; d <= 2; ++d) {
        PolySystem curve(2, {dense_polynomial(2, d, false, 1)});
        const Integer affine = chi_affine_divisor(projective_space(2, static_cast<long>(d)));
        r.expect(affine == chi_affine_ci(curve).total, "affine plane curve d=" + std::to_string(d));
    }
    return r;
}

LatticePolytope small_polytope(std::mt19937_64& rng, std::size_t n) {
    return oracle::random_full_polytope(rng, n, n == 4 ? 1 : 2, n == 4 ? 1 : 2);
}

Result mixed_volume_properties() {
    Result r;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> shift(-5, 5);
    std::uniform_int_distribution<long> scale(0, 3);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
        PolytopeTuple t;
        for (std::size_t k = 0; k < n; ++k) {
            t.push_back(small_polytope(rng, n));
        }
        const Integer base = mixed_volume_normalized(t);
        const std::string tag = "instance " + std::to_string(i) + ": ";

        PolytopeTuple perm = t;
        std::shuffle(perm.begin(), perm.end(), rng);
        r.expect(mixed_volume_normalized(perm) == base, tag + "symmetry");

        const auto extra = small_polytope(rng, n);
        PolytopeTuple sum = t, other = t;
        sum[0] = minkowski_sum(t[0], extra);
        other[0] = extra;
        r.expect(mixed_volume_normalized(sum) == base + mixed_volume_normalized(other), tag + "multilinearity");

        const long k = scale(rng);
        PolytopeTuple dil = t;
        dil[0] = dilate(t[0], k);
        r.expect(mixed_volume_normalized(dil) == k * base, tag + "dilation");

        PolytopeTuple moved = t;
        polyinv::IntVector v;
        for (std::size_t j = 0; j < n; ++j) {
            v.push_back(shift(rng));
        }
        moved[n - 1] = translate(t[n - 1], LatticePoint(v));
        r.expect(mixed_volume_normalized(moved) == base, tag + "translation");

        r.expect(mixed_volume_normalized(PolytopeTuple(n, t[0])) == normalized_volume(t[0]), tag + "diagonal");
    }
    return r;
}

Result parser_round_trip() {
    Result r;
    std::mt19937_64 rng(1111);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        const auto p = oracle::random_laurent(rng, n, 1 + static_cast<std::size_t>(i % 7), -5, 5);
        const std::string text = render(p);
        r.expect(parse(text, {}, n) == p, "round trip of " + text);
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"SL2 degree is 2n^3 for n = 1..5", sl2_degree},
        {"SL2 section chi and strata for n = 1..5", sl2_section},
        {"hypersurface chi sign on 50 random polytopes", hypersurface_sign},
        {"BKK agrees with numeric root counts over 3 seeds", bkk_oracles},
        {"quadric and det critical point counts", crit_counts},
        {"torus critical count equals orbit degree on 50 weight sets", torus_identity},
        {"closedness agrees with the LP oracle on 50 weight sets", closedness},
        {"section chi for SL(n), E6 and catalog entry 23", section_pipeline},
        {"Chern pipeline on P2 and the quadric surface", chern_pipeline},
        {"mixed volume properties on 100 instances", mixed_volume_properties},
        {"parse and render round trip on 200 polynomials", parser_round_trip},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s (%.2fs)", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
        if (!r.ok) {
            std::printf(" [%s]", r.detail.str().c_str());
            ++failures;
        }
        std::printf("\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
