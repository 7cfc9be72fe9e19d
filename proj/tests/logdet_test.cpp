#include <catch2/catch_amalgamated.hpp>

#include <cstddef>

#include <l2torsion/logdet.hpp>

using namespace l2torsion;

TEST_CASE("logdet_closed frozen values") {
    const struct { int n, j; const char* exact; } cases[] = {
        {1, 0, "1/6 * pi^-1"},
        {2, 0, "-14/45 * pi^-2"},
        {2, 1, "17/45 * pi^-2"},
        {3, 0, "123/140 * pi^-3"},
        {3, 1, "-38/35 * pi^-3"},
        {3, 2, "167/140 * pi^-3"},
    };
    for (const auto& c : cases) {
        const LogDetDensity d = logdet_closed(c.n, c.j);
        INFO("n=" << c.n << " j=" << c.j);
        CHECK(d.value.exact_str() == c.exact);
        CHECK(d.a == c.n - c.j);
        CHECK(d.sign == ((d.a % 2 == 1) ? 1 : -1));
    }
}

TEST_CASE("logdet vanishes at top degree") {
    for (int n = 1; n <= 6; ++n) {
        const LogDetDensity closed = logdet_closed(n, n);
        const LogDetDensity direct = logdet_integral(n, n);
        CHECK(closed.value.is_zero());
        CHECK(closed.sign == 0);
        CHECK(direct.value.is_zero());
        CHECK(closed.value.exact_str() == "0");
    }
}

TEST_CASE("logdet_integrand frozen polynomials") {
    CHECK(logdet_integrand(1, 0) ==
          Polynomial{Rational(0), Rational(0), Rational(-1)});
    CHECK(logdet_integrand(2, 1) ==
          Polynomial{Rational(0), Rational(0), Rational(-4), Rational(0), Rational(1)});
    // j = n divides out the k = 0 factor instead.
    CHECK(logdet_integrand(2, 2) ==
          Polynomial{Rational(4), Rational(0), Rational(-5), Rational(0), Rational(1)});
    for (int n = 1; n <= 8; ++n)
        for (int j = 0; j <= n; ++j)
            CHECK(logdet_integrand(n, j).degree() == 2 * n);
}

TEST_CASE("closed and integral routes agree exactly") {
    for (int n = 1; n <= 10; ++n) {
        for (int j = 0; j <= n; ++j) {
            INFO("n=" << n << " j=" << j);
            CHECK(logdet_closed(n, j).value == logdet_integral(n, j).value);
        }
    }
}

TEST_CASE("fr_decomposition frozen cases") {
    SECTION("n=1 a=1") {
        const FrDecomposition f = fr_decomposition(1, 1);
        REQUIRE(f.pieces.size() == 1);
        CHECK(f.pieces[0] == Polynomial{Rational(0), Rational(0), Rational(-1)});
        REQUIRE(f.integrals.size() == 1);
        CHECK(f.integrals[0] == Rational(-1, 3));
        CHECK(f.total == Rational(-1, 3));
    }
    SECTION("n=2 a=1") {
        const FrDecomposition f = fr_decomposition(2, 1);
        REQUIRE(f.integrals.size() == 1);
        CHECK(f.integrals[0] == Rational(17, 15));
        CHECK(f.total == Rational(-17, 15));
    }
    SECTION("n=2 a=2") {
        const FrDecomposition f = fr_decomposition(2, 2);
        REQUIRE(f.integrals.size() == 2);
        CHECK(f.integrals[0] == Rational(2, 15));
        CHECK(f.integrals[1] == Rational(-58, 15));
        CHECK(f.total == Rational(56, 15));
    }
}

TEST_CASE("fr pieces have degree 2n and integer coefficients by construction") {
    for (int n = 1; n <= 6; ++n) {
        for (int a = 1; a <= n; ++a) {
            const FrDecomposition f = fr_decomposition(n, a);
            REQUIRE(f.pieces.size() == static_cast<std::size_t>(a));
            for (const auto& p : f.pieces) {
                CHECK(p.degree() == 2 * n);
                for (int i = 0; i <= p.degree(); ++i)
                    CHECK(p.coeff(i).is_integer());
            }
        }
    }
}

TEST_CASE("logdet argument validation") {
    CHECK_THROWS_AS(logdet_closed(0, 0), InvalidDegree);
    CHECK_THROWS_AS(logdet_closed(3, -1), InvalidDegree);
    CHECK_THROWS_AS(logdet_closed(3, 4), InvalidDegree);
    CHECK_THROWS_AS(logdet_integral(0, 0), InvalidDegree);
    CHECK_THROWS_AS(logdet_integrand(2, 3), InvalidDegree);
    CHECK_THROWS_AS(fr_decomposition(0, 1), InvalidDegree);
    CHECK_THROWS_AS(fr_decomposition(2, 0), InvalidShift);
    CHECK_THROWS_AS(fr_decomposition(2, 3), InvalidShift);
    CHECK_THROWS_AS(verify_sign_lemma(0), InvalidDegree);
}

TEST_CASE("verify_sign_lemma passes through n=12") {
    for (int n = 1; n <= 12; ++n) {
        const auto rep = verify_sign_lemma(n);
        INFO("n=" << n);
        CHECK(rep.all_passed());
        CHECK(rep.checks().size() == 5 * static_cast<std::size_t>(n));
    }
}
