#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <string>

#include <l2torsion/golden.hpp>

using namespace l2torsion;

TEST_CASE("golden table shape") {
    const auto& table = golden_table();
    REQUIRE(table.size() == 18);
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].d == 3 + 2 * static_cast<int>(i));
        CHECK(table[i].decimal != nullptr);
        if (table[i].d <= 11)
            CHECK(table[i].exact != nullptr);
        else
            CHECK(table[i].exact == nullptr);
    }
}

TEST_CASE("within_sixth_figure unit behavior") {
    // ref = 49326 -> exponent 4 -> one unit in the 6th figure is 0.1
    const Rational big = Rational::from_decimal("49326");
    CHECK(within_sixth_figure(Rational::from_decimal("49326.05"), big));
    CHECK(within_sixth_figure(Rational::from_decimal("49326.1"), big));
    CHECK_FALSE(within_sixth_figure(Rational::from_decimal("49326.2"), big));
    // ref = 0.106103 -> exponent -1 -> one unit in the 6th figure is 1e-6
    const Rational small = Rational::from_decimal("0.106103");
    CHECK(within_sixth_figure(Rational::from_decimal("0.1061035"), small));
    CHECK_FALSE(within_sixth_figure(Rational::from_decimal("0.106105"), small));
}

TEST_CASE("verify_table matches every reference row") {
    const auto rep = verify_table();
    CHECK(rep.all_passed());
    // 18 decimal checks plus 5 exact checks for d <= 11.
    CHECK(rep.checks().size() == 23);
}

TEST_CASE("verify_table honors d_max") {
    const auto rep = verify_table(11);
    CHECK(rep.all_passed());
    CHECK(rep.checks().size() == 10);
    CHECK_THROWS_AS(verify_table(12), InvalidDimension);
}

TEST_CASE("reference decimals pin their dimension uniquely") {
    // Each decimal-only reference row must match alpha at its own dimension
    // and fail against the neighboring dimensions, so a row shifted by one
    // slot could never pass.
    const auto& table = golden_table();
    for (const GoldenEntry& entry : table) {
        if (entry.exact != nullptr) continue;
        const Rational ref = Rational::from_decimal(entry.decimal);
        const auto ours = [](int d) {
            return Rational::from_decimal(alpha(d, 6).decimal);
        };
        INFO("d=" << entry.d);
        CHECK(within_sixth_figure(ours(entry.d), ref));
        CHECK_FALSE(within_sixth_figure(ours(entry.d - 2), ref));
        if (entry.d + 2 <= 37)
            CHECK_FALSE(within_sixth_figure(ours(entry.d + 2), ref));
    }
}
