#include <doctest.h>

#include "support/oracle.hpp"

using namespace szq;
using oracle::pi;

namespace {

double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b) {
    double d = 0.0;
    for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
    return d;
}

}  // namespace

TEST_SUITE("poly") {
    TEST_CASE("reciprocal of z with n = 1 is 1") {
        CHECK(reciprocal(ComplexPoly::monomial(1), 1) == ComplexPoly::constant(1.0));
    }

    TEST_CASE("reciprocal conjugates and reverses") {
        const ComplexPoly p({1.0, cplx(0, 2), 1.0});
        const ComplexPoly expect({1.0, cplx(0, -2), 1.0});
        CHECK(reciprocal(p, 2) == expect);
    }

    TEST_CASE("reciprocal pads to the nominal degree") {
        const ComplexPoly r = reciprocal(ComplexPoly::constant(cplx(2, 1)), 3);
        CHECK(r.degree() == 3);
        CHECK(r.coeff(3) == cplx(2, -1));
    }

    TEST_CASE("reciprocal is an involution") {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 50; ++t) {
            std::vector<cplx> c(6);
            for (auto& x : c) x = oracle::random_disk(rng, 0.0, 3.0);
            const ComplexPoly p(c);
            CHECK(reciprocal(reciprocal(p, 7), 7) == p);
        }
    }

    TEST_CASE("Rogers-Szego reciprocal identity rho*(z) = q^{-1} rho(qz) for n = 2") {
        const double q = 0.5;
        const ComplexPoly rho = oracle::rogers_szego_poly(2, q);
        std::vector<cplx> scaled(3);
        for (int j = 0; j <= 2; ++j) scaled[j] = rho.coeff(j) * std::pow(q, j) / q;
        CHECK(max_coeff_diff(reciprocal(rho, 2), ComplexPoly(scaled)) < 1e-15);
    }

    TEST_CASE("from_roots and evaluation agree") {
        const ComplexPoly p = ComplexPoly::from_roots({cplx(1, 1), cplx(-2, 0.5)});
        CHECK(p.is_monic());
        CHECK(std::abs(p(cplx(1, 1))) < 1e-15);
        CHECK(std::abs(p(cplx(-2, 0.5))) < 1e-15);
    }
}

TEST_SUITE("szego_from_schur") {
    TEST_CASE("zero parameters give monomials") {
        const auto rho = szego_from_schur(SchurSequence::from_parameters(std::vector<cplx>(4, 0.0)), 4);
        for (int k = 0; k <= 4; ++k) CHECK(rho[k] == ComplexPoly::monomial(k));
    }

    TEST_CASE("Rogers-Szego closed form") {
        const double q = 0.5;
        std::vector<cplx> d;
        for (int k = 1; k <= 6; ++k) d.push_back((k % 2 ? -1.0 : 1.0) * std::pow(q, 0.5 * k));
        const auto rho = szego_from_schur(SchurSequence::from_parameters(d), 6);
        for (int k = 0; k <= 6; ++k) CHECK(max_coeff_diff(rho[k], oracle::rogers_szego_poly(k, q)) < 1e-14);
    }

    TEST_CASE("constant term equals the parameter") {
        std::mt19937_64 rng(11);
        std::vector<cplx> d;
        for (int k = 0; k < 8; ++k) d.push_back(oracle::random_disk(rng, 0.0, 0.95));
        const auto rho = szego_from_schur(SchurSequence::from_parameters(d), 8);
        for (int k = 1; k <= 8; ++k) {
            CHECK(rho[k].is_monic());
            CHECK(std::abs(rho[k].coeff(0) - d[k - 1]) < 1e-15);
        }
    }

    TEST_CASE("parameter on the circle is rejected") {
        CHECK_THROWS_AS(SchurSequence::from_parameters({cplx(1.0, 0.0)}), Error);
    }
}

TEST_SUITE("schur_from_moments") {
    TEST_CASE("Lebesgue gives zero parameters and unit norms") {
        const SchurSequence s = schur_from_moments(moments(MeasureSpec(), 6), 6);
        for (int k = 1; k <= 6; ++k) {
            CHECK(std::abs(s.delta[k]) == 0.0);
            CHECK(s.norms[k] == doctest::Approx(1.0));
        }
    }

    TEST_CASE("Rogers-Szego parameters alternate in sign") {
        const double q = 0.5;
        const SchurSequence s = schur_from_moments(moments(oracle::rogers_szego(q), 16), 16);
        for (int k = 1; k <= 16; ++k) CHECK(std::abs(s.delta[k] - (k % 2 ? -1.0 : 1.0) * std::pow(q, 0.5 * k)) < 1e-13);
    }

    TEST_CASE("half-circle arc: delta_1 = -mu_1 = -2/pi") {
        const MeasureSpec m(ArcLebesgue{-pi / 2, pi / 2});
        const MomentSequence mu = moments(m, 3);
        const SchurSequence s = schur_from_moments(mu, 3);
        CHECK(std::abs(s.delta[1] + 2.0 / pi) < 1e-15);
        const ComplexPoly rho1 = szego_from_schur(s, 1)[1];
        const ComplexPoly gs = oracle::gram_schmidt(MomentSequence(oracle::arc_moments_numeric(-pi / 2, pi / 2, 3)), 1);
        CHECK(max_coeff_diff(rho1, gs) < 1e-13);
    }

    TEST_CASE("agrees with a direct Toeplitz solve on arc measures") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> start(0.0, 2 * pi), len(pi, 1.8 * pi);
        for (int t = 0; t < 10; ++t) {
            const double a = start(rng), b = a + len(rng);
            const MomentSequence mu = moments(MeasureSpec(ArcLebesgue{a, b}), 8);
            const auto rho = szego_from_schur(schur_from_moments(mu, 8), 8);
            for (int k = 1; k <= 8; ++k) CHECK(max_coeff_diff(rho[k], oracle::gram_schmidt(mu, k)) < 1e-9);
        }
    }

    TEST_CASE("orthogonality residual and norm identity") {
        for (const MeasureSpec& m : {oracle::rogers_szego(0.3), oracle::rogers_szego(0.8),
                                      MeasureSpec(ArcLebesgue{0.4, 5.0})}) {
            const MomentSequence mu = moments(m, 12);
            const SchurSequence s = schur_from_moments(mu, 12);
            const auto rho = szego_from_schur(s, 12);
            for (int k = 1; k <= 12; ++k) {
                for (int j = 0; j < k; ++j) CHECK(std::abs(inner_product(rho[k], ComplexPoly::monomial(j), mu)) <= 1e-12);
                // rounding in the quadratic form scales with the squared l1 norm of the coefficients
                double l1 = 0.0;
                for (int j = 0; j <= k; ++j) l1 += std::abs(rho[k].coeff(j));
                CHECK(std::abs(inner_product(rho[k], rho[k], mu) - s.norms[k]) <= 1e-13 * l1 * l1);
            }
        }
    }

    TEST_CASE("non positive-definite moments are refused") {
        const MomentSequence bad({1.0, 1.0, 0.0});
        CHECK_THROWS_AS(schur_from_moments(bad, 2), Error);
        try {
            schur_from_moments(bad, 2);
        } catch (const Error& e) {
            CHECK(e.condition() == Condition::measure_not_positive_definite);
        }
    }
}

TEST_SUITE("inner_product") {
    TEST_CASE("<1, 1> under Lebesgue") {
        CHECK(inner_product(ComplexPoly::constant(1.0), ComplexPoly::constant(1.0), moments(MeasureSpec(), 0)) == cplx(1.0));
    }

    TEST_CASE("<z, 1> under Rogers-Szego") {
        const MomentSequence mu = moments(oracle::rogers_szego(0.5), 2);
        CHECK(std::abs(inner_product(ComplexPoly::monomial(1), ComplexPoly::constant(1.0), mu) - std::sqrt(0.5)) < 1e-15);
    }

    TEST_CASE("insufficient moments raise range") {
        const MomentSequence mu = moments(MeasureSpec(), 1);
        CHECK_THROWS_AS(inner_product(ComplexPoly::monomial(2), ComplexPoly::constant(1.0), mu), Error);
    }
}

TEST_SUITE("blaschke") {
    TEST_CASE("Lebesgue F_n is z^n") {
        const SchurSequence s = schur_from_moments(moments(MeasureSpec(), 4), 4);
        CHECK(std::abs(blaschke_eval(s, 4, std::polar(1.0, pi / 4)) + 1.0) < 1e-15);
        CHECK(std::abs(blaschke_eval(s, 4, 1.0) - 1.0) < 1e-15);
    }

    TEST_CASE("matches the polynomial quotient") {
        const SchurSequence s = schur_from_moments(moments(oracle::rogers_szego(0.5), 3), 3);
        const ComplexPoly rho2 = szego_from_schur(s, 2)[2];
        for (double th : {0.0, 0.7, 2.9, 4.4}) {
            const cplx z = std::polar(1.0, th);
            const cplx direct = z * rho2(z) / reciprocal(rho2, 2)(z);
            CHECK(std::abs(blaschke_eval(s, 3, z) - direct) < 1e-14);
            CHECK(std::abs(std::abs(blaschke_eval(s, 3, z)) - 1.0) < 1e-12);
        }
    }

    TEST_CASE("off-circle argument is a domain error") {
        const SchurSequence s = schur_from_moments(moments(MeasureSpec(), 2), 2);
        CHECK_THROWS_AS(blaschke_eval(s, 2, cplx(0.5, 0.0)), Error);
    }

    TEST_CASE("z^4 = -1") {
        const SchurSequence s = schur_from_moments(moments(MeasureSpec(), 4), 4);
        const auto r = blaschke_solve(s, 4, -1.0);
        REQUIRE(r.size() == 4);
        for (int k = 0; k < 4; ++k) CHECK(r[k].theta() == doctest::Approx((2 * k + 1) * pi / 4).epsilon(1e-14));
    }

    TEST_CASE("cube roots of unity") {
        const SchurSequence s = schur_from_moments(moments(MeasureSpec(), 3), 3);
        const auto r = blaschke_solve(s, 3, 1.0);
        REQUIRE(r.size() == 3);
        for (int k = 0; k < 3; ++k) CHECK(oracle::angle_distance(r[k].theta(), 2 * pi * k / 3) < 1e-14);
    }

    TEST_CASE("agrees with companion-matrix roots") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 30; ++t) {
            const int n = 2 + t % 12;
            std::vector<cplx> d;
            for (int k = 1; k < n; ++k) d.push_back(oracle::random_disk(rng, 0.0, 0.9));
            const SchurSequence s = SchurSequence::from_parameters(d);
            const cplx target = oracle::random_unit(rng);
            const ComplexPoly rho = szego_from_schur(s, n - 1).back();
            const ComplexPoly eq = rho.shifted(1) - target * reciprocal(rho, n - 1);
            auto roots = oracle::companion_roots(eq);
            const auto got = blaschke_solve(s, n, target);
            REQUIRE(static_cast<int>(got.size()) == n);
            for (const auto& p : got) {
                double best = 1e9;
                for (cplx r : roots) best = std::min(best, std::abs(r - p.z()));
                CHECK(best < 1e-9);
            }
            for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].theta() < got[i].theta());
        }
    }
}

TEST_SUITE("schur_cohn") {
    TEST_CASE("single zero inside") {
        const auto r = schur_cohn(ComplexPoly::from_roots({0.5}));
        CHECK(r.stable);
        REQUIRE(r.params.size() == 1);
        CHECK(std::abs(r.params[0] + 0.5) < 1e-15);
    }

    TEST_CASE("z^2 has zero parameters") {
        const auto r = schur_cohn(ComplexPoly::monomial(2));
        CHECK(r.stable);
        for (cplx k : r.params) CHECK(std::abs(k) == 0.0);
    }

    TEST_CASE("constant is trivially stable") {
        const auto r = schur_cohn(ComplexPoly::constant(1.0));
        CHECK(r.stable);
        CHECK(r.params.empty());
    }

    TEST_CASE("reflected pair is boundary-degenerate") {
        try {
            schur_cohn(ComplexPoly({1.0, -2.5, 1.0}));
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.condition() == Condition::boundary_degenerate);
        }
    }

    TEST_CASE("verdict matches companion-matrix root moduli") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<int> deg(1, 6);
        std::uniform_real_distribution<double> r(0.05, 1.6);
        int checked = 0;
        for (int t = 0; t < 300; ++t) {
            std::vector<cplx> roots;
            const int n = deg(rng);
            for (int i = 0; i < n; ++i) roots.push_back(r(rng) * oracle::random_unit(rng));
            const ComplexPoly p = ComplexPoly::from_roots(roots);
            bool inside = true;
            for (cplx z : oracle::companion_roots(p)) inside = inside && std::abs(z) < 1.0;
            try {
                CHECK(schur_cohn(p).stable == inside);
                ++checked;
            } catch (const Error& e) {
                CHECK(e.condition() == Condition::boundary_degenerate);
            }
        }
        CHECK(checked > 250);
    }
}
