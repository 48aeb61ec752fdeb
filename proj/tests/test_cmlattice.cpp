#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cmlat/cm_lattice.hpp"
#include "cmlat/det.hpp"

using namespace cmlat;

namespace {

std::vector<std::vector<Integer>> gram(const std::vector<AmbientVector>& vs) {
    std::vector<std::vector<Integer>> g(vs.size(), std::vector<Integer>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) g[i][j] = vs[i].dot(vs[j]);
    return g;
}

std::vector<AmbientVector> tail_ws(const ChangemakerLatticeSpec& spec) {
    return {spec.w.begin() + 1, spec.w.end()};
}

}  // namespace

TEST_CASE("lattice data for 107/5") {
    auto spec = build_cm_lattice(Rational(107, 5), {1, 2, 4});
    CHECK(spec.n == 22);
    CHECK(spec.r == 3);
    CHECK(spec.a == std::vector<long long>{22, 2, 3});
    CHECK(spec.m_indices == std::vector<long long>{0, 1, 3});
    CHECK(spec.s == 3);
    CHECK(spec.t() == 3);
    CHECK(spec.l() == 2);
    CHECK(spec.ambient_dim() == 7);
    CHECK(spec.rank() == 4);
    CHECK(spec.frac_top() == 1);
    CHECK(spec.p() == 107);
    CHECK(spec.q() == 5);

    REQUIRE(spec.w.size() == 3);
    CHECK(spec.w[0].f == std::vector<long long>{1, 2, 4});
    CHECK(spec.w[0].e == std::vector<long long>{1, 0, 0, 0});
    CHECK(spec.w[1].e == std::vector<long long>{-1, 1, 0, 0});
    CHECK(spec.w[2].e == std::vector<long long>{0, -1, 1, 1});

    auto frac = fractional_basis(spec);
    REQUIRE(frac.size() == 2);
    CHECK(frac[0].e == std::vector<long long>{1, 1, 1, 0});
    CHECK(frac[1].e == std::vector<long long>{0, 0, -1, 1});
}

TEST_CASE("lattice data for the half-integer 43/2") {
    auto spec = build_cm_lattice(Rational(43, 2), {1, 2, 4});
    CHECK(spec.n == 22);
    CHECK(spec.r == 1);
    CHECK(spec.a == std::vector<long long>{22, 2});
    CHECK(spec.m_indices == std::vector<long long>{0, 1});
    CHECK(spec.s == 1);
    CHECK(spec.ambient_dim() == 5);
    CHECK(spec.rank() == 3);
    CHECK(spec.frac_top() == 0);
    auto frac = fractional_basis(spec);
    REQUIRE(frac.size() == 1);
    CHECK(frac[0].e == std::vector<long long>{1, 1});
}

TEST_CASE("lattice data for 9/2 sits in rank six ambient space") {
    auto spec = build_cm_lattice(Rational(9, 2), {1, 1, 1, 1});
    CHECK(spec.n == 5);
    CHECK(spec.a == std::vector<long long>{5, 2});
    CHECK(spec.ambient_dim() == 6);
    CHECK(spec.rank() == 4);
}

TEST_CASE("all-twos expansion gives a single fractional vector") {
    auto spec = build_cm_lattice(Rational(5, 4), {1});
    CHECK(spec.a == std::vector<long long>{2, 2, 2, 2});
    CHECK(spec.m_indices == std::vector<long long>{0, 1, 2, 3});
    CHECK(spec.frac_top() == 0);
    auto frac = fractional_basis(spec);
    REQUIRE(frac.size() == 1);
    CHECK(frac[0].e == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(build_cm_lattice(Rational(107, 5), {1, 2, 3}), InputError);
    CHECK_THROWS_AS(build_cm_lattice(Rational(107, 5), {1, 3, 4}), InputError);
    CHECK_THROWS_AS(build_cm_lattice(Rational(22), {1, 2, 4}), InputError);
    CHECK_THROWS_AS(build_cm_lattice(Rational(1, 2), {}), InputError);
    CHECK_THROWS_AS(build_cm_lattice(Rational(-107, 5), {1, 2, 4}), InputError);
}

TEST_CASE("basis spans the full orthogonal complement: Gram determinant is p") {
    struct Case {
        Rational pq;
        SigmaTail sigma;
    };
    std::vector<Case> cases = {
        {Rational(107, 5), {1, 2, 4}}, {Rational(43, 2), {1, 2, 4}},
        {Rational(9, 2), {1, 1, 1, 1}}, {Rational(5, 4), {1}},
        {Rational(13, 5), {1, 1}},      {Rational(7, 4), {1}},
        {Rational(7, 2), {1, 1, 1}},    {Rational(31, 7), {1, 1, 1, 1}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.pq.str());
        auto spec = build_cm_lattice(c.pq, c.sigma);
        auto basis = lattice_basis(spec);
        REQUIRE(static_cast<long long>(basis.size()) == spec.rank());
        auto g = gram(basis);
        CHECK(is_positive_definite(g));
        CHECK(bareiss_det(g) == spec.p());
    }
}

TEST_CASE("fractional coefficients round-trip and detect non-members") {
    auto spec = build_cm_lattice(Rational(107, 5), {1, 2, 4});
    auto frac = fractional_basis(spec);

    for (long long c0 = -3; c0 <= 3; ++c0)
        for (long long c1 = -3; c1 <= 3; ++c1) {
            AmbientVector x(3, 4);
            for (std::size_t i = 0; i < 4; ++i)
                x.e[i] = c0 * frac[0].e[i] + c1 * frac[1].e[i];
            auto coeffs = frac_coefficients(spec, x);
            REQUIRE(coeffs.has_value());
            CHECK(*coeffs == std::vector<long long>{c0, c1});
        }

    AmbientVector e0_only(3, 4);
    e0_only.e[0] = 1;
    CHECK(!frac_coefficients(spec, e0_only).has_value());
    AmbientVector e3_only(3, 4);
    e3_only.e[3] = 1;
    CHECK(!frac_coefficients(spec, e3_only).has_value());
}

TEST_CASE("chain sums are exactly the irreducible fractional vectors") {
    // Frozen shapes, then an exhaustive cross-check against the
    // search-free decomposition oracle.
    auto spec = build_cm_lattice(Rational(7, 4), {1});  // three chain vectors
    auto frac = fractional_basis(spec);
    REQUIRE(frac.size() == 3);

    CHECK(is_irreducible_LF(spec, frac[0]));
    CHECK(is_irreducible_LF(spec, frac[1]));
    CHECK(is_irreducible_LF(spec, frac[0] + frac[1]));
    CHECK(is_irreducible_LF(spec, frac[0] + frac[1] + frac[2]));
    CHECK(is_irreducible_LF(spec, -(frac[1] + frac[2])));
    CHECK(!is_irreducible_LF(spec, frac[0] - frac[1]));
    CHECK(!is_irreducible_LF(spec, frac[0] + frac[2]));
    CHECK(!is_irreducible_LF(spec, frac[0] + frac[0]));
    CHECK(!is_irreducible_LF(spec, AmbientVector(1, 4)));

    AmbientVector off_support(1, 4);
    off_support.f[0] = 1;
    CHECK_THROWS_AS(is_irreducible_LF(spec, off_support), InputError);

    for (const Rational& pq : {Rational(7, 4), Rational(107, 5)}) {
        auto s = build_cm_lattice(pq, pq == Rational(7, 4) ? SigmaTail{1} : SigmaTail{1, 2, 4});
        auto vs = fractional_basis(s);
        auto ws = tail_ws(s);
        std::vector<long long> c(vs.size(), -2);
        while (true) {
            AmbientVector x(static_cast<std::size_t>(s.t()),
                            static_cast<std::size_t>(s.s) + 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = 0; j < x.e.size(); ++j) x.e[j] += c[i] * vs[i].e[j];
            if (!x.is_zero() && x.norm() <= 14) {
                CAPTURE(c);
                CHECK(is_irreducible_LF(s, x) == brute_force_irreducible(x, ws, true));
            }
            std::size_t i = 0;
            while (i < c.size() && c[i] == 2) c[i++] = -2;
            if (i == c.size()) break;
            ++c[i];
        }
    }
}

TEST_CASE("exhaustive irreducibility oracle guards its own domain") {
    auto spec = build_cm_lattice(Rational(107, 5), {1, 2, 4});
    auto frac = fractional_basis(spec);
    auto ws = tail_ws(spec);
    CHECK(!brute_force_irreducible(AmbientVector(3, 4), ws, true));
    AmbientVector big = frac[0] + frac[0] + frac[0];
    CHECK_THROWS_AS(brute_force_irreducible(big, ws, true, 8), InputError);
    AmbientVector outside(3, 4);
    outside.e[0] = 1;
    CHECK_THROWS_AS(brute_force_irreducible(outside, ws, true), InputError);
}

TEST_CASE("indecomposability tracks strictly positive tails") {
    CHECK(is_indecomposable(build_cm_lattice(Rational(107, 5), {1, 2, 4})));
    CHECK(is_indecomposable(build_cm_lattice(Rational(5, 4), {1})));
}
