#include <catch2/catch_amalgamated.hpp>

#include <l2torsion/decimal.hpp>

using namespace l2torsion;

TEST_CASE("decimal_exponent") {
    CHECK(decimal_exponent(Rational(1)) == 0);
    CHECK(decimal_exponent(Rational(9)) == 0);
    CHECK(decimal_exponent(Rational(10)) == 1);
    CHECK(decimal_exponent(Rational(99)) == 1);
    CHECK(decimal_exponent(Rational(100)) == 2);
    CHECK(decimal_exponent(Rational(1, 10)) == -1);
    CHECK(decimal_exponent(Rational(99, 100)) == -1);
    CHECK(decimal_exponent(Rational(1, 100)) == -2);
    CHECK(decimal_exponent(Rational(-49326)) == 4);
    CHECK(decimal_exponent(Rational(pow_int(Int(10), 150))) == 150);
    CHECK(decimal_exponent(Rational(Int(1), pow_int(Int(10), 150))) == -150);
    CHECK_THROWS_AS(decimal_exponent(Rational(0)), std::invalid_argument);
}

TEST_CASE("format_sigfigs fixed-point") {
    CHECK(format_sigfigs(Rational(1, 3), 6) == "0.333333");
    CHECK(format_sigfigs(Rational(2, 3), 6) == "0.666667");
    CHECK(format_sigfigs(Rational(-1, 3), 6) == "-0.333333");
    CHECK(format_sigfigs(Rational(0), 6) == "0");
    CHECK(format_sigfigs(Rational(141729, 1000), 6) == "141.729");
    CHECK(format_sigfigs(Rational(49326037, 1000), 6) == "49326.0");
    CHECK(format_sigfigs(Rational(2527012, 10), 6) == "252701");
    CHECK(format_sigfigs(Rational(1, 100000), 6) == "0.0000100000");
    CHECK(format_sigfigs(Rational(5), 3) == "5.00");
    CHECK(format_sigfigs(Rational(500), 3) == "500");
    CHECK(format_sigfigs(Rational(500), 2) == "500"); // padded, no decimal point
}

TEST_CASE("format_sigfigs rounds half to even") {
    CHECK(format_sigfigs(Rational(25, 10), 1) == "2");
    CHECK(format_sigfigs(Rational(35, 10), 1) == "4");
    CHECK(format_sigfigs(Rational(125, 1000), 2) == "0.12");
    CHECK(format_sigfigs(Rational(135, 1000), 2) == "0.14");
    CHECK(format_sigfigs(Rational(1255, 1000), 3) == "1.26");
    CHECK(format_sigfigs(Rational(-25, 10), 1) == "-2");
}

TEST_CASE("format_sigfigs scientific from 1e6") {
    CHECK(format_sigfigs(Rational(13745769, 10), 6) == "1.37458e6");
    CHECK(format_sigfigs(Rational(79123564, 10), 6) == "7.91236e6");
    CHECK(format_sigfigs(Rational(48052339), 6) == "4.80523e7");
    CHECK(format_sigfigs(Rational(999999), 6) == "999999"); // just below the threshold
    CHECK(format_sigfigs(Rational(1000000), 6) == "1.00000e6");
    CHECK(format_sigfigs(Rational(25000000), 1) == "2e7"); // ties to even, no point
    CHECK(format_sigfigs(Rational(-1234567), 3) == "-1.23e6");
}

TEST_CASE("format_sigfigs decade-boundary rounding") {
    // 999999.5 rounds up across the decade and must gain an exponent
    CHECK(format_sigfigs(Rational(1999999, 2), 6) == "1.00000e6");
    CHECK(format_sigfigs(Rational(999, 10), 2) == "100");
    CHECK(format_sigfigs(Rational(99999, 100000), 3) == "1.00");
    CHECK_THROWS_AS(format_sigfigs(Rational(1), 0), std::invalid_argument);
}

TEST_CASE("render_sigfigs proves its rounding") {
    CHECK(render_sigfigs(PiMonomial::pi_power(Rational(1, 3), -1), 6) == "0.106103");
    CHECK(render_sigfigs(PiMonomial::pi_power(Rational(62, 45), -2), 6) == "0.139598");
    CHECK(render_sigfigs(PiMonomial::pi_power(Rational(1), 1), 6) == "3.14159");
    CHECK(render_sigfigs(PiMonomial::pi_power(Rational(1), 1), 16) == "3.141592653589793");
    CHECK(render_sigfigs(PiMonomial::pi_power(Rational(-1), 1), 4) == "-3.142");
    CHECK(render_sigfigs(PiMonomial::zero(), 6) == "0");
    // rational monomials render exactly, including ties
    CHECK(render_sigfigs(PiMonomial::pi_power(Rational(25, 10), 0), 1) == "2");
    // a deliberately tiny starting precision still terminates
    CHECK(render_sigfigs(PiMonomial::pi_power(Rational(1), -1), 6, 4) == "0.318310");
}
