#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "lomat/error.hpp"
#include "lomat/steinitz.hpp"

using namespace lomat;

namespace {

Steinitz st(const std::string& s) { return st_parse(s); }

bool throws_code(const std::function<void()>& f, Errc c) {
    try {
        f();
    } catch (const Error& e) {
        return e.code == c;
    }
    return false;
}

} // namespace

TEST_CASE("primality of small inputs") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(1009));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(1000));
}

TEST_CASE("canonical string form round-trips") {
    for (const char* s : {"1", "2", "2^inf", "2^inf*3^2*5", "3^4*1009", "7^inf*11^inf"})
        CHECK(st_str(st_parse(s)) == s);
    CHECK(st_str(Steinitz{}) == "1");
}

TEST_CASE("parser rejects malformed literals") {
    for (const char* s : {"", "4", "3*2", "2*2", "2^0", "2^", "x", "2^inf*", "*2", "2^-1"})
        CHECK(throws_code([s] { st_parse(s); }, Errc::parse_error));
}

TEST_CASE("factorization of naturals") {
    // [DERIVED] 360 = 2^3 * 3^2 * 5
    CHECK(st_str(st_from_nat(360)) == "2^3*3^2*5");
    CHECK(st_from_nat(1) == Steinitz{});
    CHECK(st_str(st_from_nat(1009)) == "1009");
    CHECK(throws_code([] { st_from_nat(0); }, Errc::bad_parameters));
}

TEST_CASE("product absorbs infinite exponents") {
    CHECK(st_str(st_mul(st("2^inf*3"), st("3^2*5"))) == "2^inf*3^3*5");
    CHECK(st_mul(st("2^inf"), st("2^5")) == st("2^inf"));
    CHECK(st_mul(st("2^inf"), st("2^inf")) == st("2^inf"));
    CHECK(st_mul(Steinitz{}, st("7")) == st("7"));
}

TEST_CASE("divisibility and the lattice operations") {
    // [DERIVED] exponentwise max / min of 2^3*3 and 2*3^inf
    CHECK(st_str(st_lcm(st("2^3*3"), st("2*3^inf"))) == "2^3*3^inf");
    CHECK(st_str(st_gcd(st("2^3*3"), st("2*3^inf"))) == "2*3");
    CHECK(st_divides(st("2^3"), st("2^inf")));
    CHECK_FALSE(st_divides(st("2^inf"), st("2^3")));
    CHECK(st_divides(Steinitz{}, st("2^inf*3")));
    CHECK(st_divides(st("5^2"), st("5^2")));
    CHECK_FALSE(st_divides(st("7"), st("5^2")));
    CHECK(st_gcd(st("2^inf"), st("2^inf")) == st("2^inf"));
}

TEST_CASE("local finiteness detects an infinite exponent") {
    CHECK(st_is_locally_finite(st("2^3*3^2*1009")));
    CHECK(st_is_locally_finite(Steinitz{}));
    // [DERIVED] an infinite exponent is exactly what locally finite rules out
    CHECK_FALSE(st_is_locally_finite(st("2^inf")));
    CHECK_FALSE(st_is_locally_finite(st("3*5^inf")));
}

TEST_CASE("corner formula scales exponents and reports deficits") {
    // [TRIVIAL: formula] (2/6) * 2^inf*3 = 2^inf
    CHECK(st_str(st_corner(st("2^inf*3"), 2, 6)) == "2^inf");
    // [DERIVED] (3/9) * 2^inf*3^2 = 2^inf*3
    CHECK(st_str(st_corner(st("2^inf*3^2"), 3, 9)) == "2^inf*3");
    CHECK(st_corner(st("5"), 1, 1) == st("5"));
    CHECK(throws_code([] { st_corner(st("3^2"), 1, 2); }, Errc::not_divisible));
    CHECK(throws_code([] { st_corner(st("2^inf"), 0, 2); }, Errc::bad_parameters));
    CHECK(throws_code([] { st_corner(st("2^inf"), 3, 2); }, Errc::bad_parameters));
}

TEST_CASE("tower supremum separates prefix and cycle contributions") {
    TowerDescriptor fin;
    fin.n1 = 6;
    fin.prefix = {2};
    fin.cycle = {1};
    // [DERIVED] stages 6, 12, 12, ... so the supremum is st(12)
    CHECK(st_str(st_of_tower(fin)) == "2^2*3");

    TowerDescriptor car;
    car.n1 = 2;
    car.cycle = {2};
    CHECK(st_str(st_of_tower(car)) == "2^inf");

    TowerDescriptor mixed;
    mixed.n1 = 3;
    mixed.prefix = {4};
    mixed.cycle = {6};
    // [DERIVED] cycle multiplier 6 pushes both 2 and 3 to infinity
    CHECK(st_str(st_of_tower(mixed)) == "2^inf*3^inf");
}
