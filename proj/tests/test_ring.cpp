#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vbraid/bigint.hpp"
#include "vbraid/laurent.hpp"
#include "vbraid/permutation.hpp"
#include "vbraid/poly_matrix.hpp"

using namespace vbraid;

TEST_CASE("bigint basic arithmetic and io", "[bigint]") {
    REQUIRE(bigint(0).to_string() == "0");
    REQUIRE(bigint(-1).to_string() == "-1");
    REQUIRE((bigint(123456789) * bigint(987654321)).to_string() == "121932631112635269");

    // 25! computed by repeated multiplication, known value
    bigint f(1);
    for (int k = 2; k <= 25; ++k) f *= bigint(k);
    REQUIRE(f.to_string() == "15511210043330985984000000");
    REQUIRE_FALSE(f.fits_int64());
    REQUIRE(bigint::from_string(f.to_string()) == f);
    REQUIRE(bigint::from_string("-15511210043330985984000000") == -f);

    REQUIRE((f - f).is_zero());
    REQUIRE((f + (-f)).is_zero());
    REQUIRE(bigint(37).fits_int64());
    REQUIRE(bigint(-37).to_int64() == -37);
    REQUIRE(bigint::from_string("9223372036854775807").to_int64() == 9223372036854775807LL);
    REQUIRE_FALSE(bigint::from_string("9223372036854775808").fits_int64());
    REQUIRE(bigint::from_string("-9223372036854775808").fits_int64());

    REQUIRE(bigint(5) < bigint(7));
    REQUIRE(bigint(-7) < bigint(5));
    REQUIRE_THROWS_AS(bigint::from_string("12x"), std::invalid_argument);
}

TEST_CASE("bigint randomized against int64", "[bigint]") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int k = 0; k < 2000; ++k) {
        long long a = d(rng), b = d(rng);
        REQUIRE((bigint(a) + bigint(b)).to_int64() == a + b);
        REQUIRE((bigint(a) - bigint(b)).to_int64() == a - b);
        REQUIRE((bigint(a) * bigint(b)).to_int64() == a * b);  // fits, |ab| <= 1e18
    }
}

TEST_CASE("laurent polynomial basics", "[laurent]") {
    auto R = make_ring({"q", "t"});
    auto q = laurent_poly::var(R, "q");
    auto t = laurent_poly::var(R, "t");
    auto one = laurent_poly::one(R);

    SECTION("difference of squares") {
        REQUIRE((t + q) * (t - q) == t * t - q * q);
    }
    SECTION("inverse variable cancels") {
        auto tinv = laurent_poly::var(R, "t", -1);
        REQUIRE(t * tinv == one);
        REQUIRE((t * tinv).text() == "1");
    }
    SECTION("collection of like terms") {
        // t q (q - 1) + t q = t q^2
        auto lhs = t * q * (q - one) + t * q;
        REQUIRE(lhs == laurent_poly::monomial(R, {2, 1}, 1));
        REQUIRE(lhs.text() == "q^2*t");
    }
    SECTION("text form") {
        REQUIRE(laurent_poly::zero(R).text() == "0");
        REQUIRE((one - q + q * q).text() == "1-q+q^2");
        REQUIRE((-(t * t)).text() == "-t^2");
        REQUIRE((q * t * laurent_poly::constant(R, 2)).text() == "2*q*t");
        REQUIRE(laurent_poly::var(R, "t", -1).text() == "t^-1");
    }
    SECTION("ring mismatch throws") {
        auto S = make_ring({"x"});
        REQUIRE_THROWS_AS(t + laurent_poly::var(S, "x"), std::invalid_argument);
    }
    SECTION("structurally equal rings compare equal") {
        auto R2 = make_ring({"q", "t"});
        REQUIRE(laurent_poly::var(R2, "t") == t);
    }
}

TEST_CASE("laurent substitution", "[laurent]") {
    auto R = make_ring({"q", "t"});
    auto q = laurent_poly::var(R, "q");
    auto t = laurent_poly::var(R, "t");
    auto one = laurent_poly::one(R);

    // q -> -1, t -> t
    std::map<std::string, laurent_poly> sp{{"q", laurent_poly::constant(R, -1)},
                                           {"t", t}};
    auto p = t * q * (q - one) + t * q;  // t q^2
    REQUIRE(p.substitute(sp) == t);
    REQUIRE((q * q * q).substitute(sp) == -one);

    // t1 -> t collapse into another ring
    auto S = make_ring({"t", "t1"});
    auto t1 = laurent_poly::var(S, "t1");
    auto ts = laurent_poly::var(S, "t");
    std::map<std::string, laurent_poly> collapse{{"t", ts}, {"t1", ts}};
    REQUIRE((ts * t1).substitute(collapse) == ts * ts);

    std::map<std::string, laurent_poly> bad{{"q", one + q}, {"t", t}};
    REQUIRE_THROWS_AS(p.substitute(bad), std::domain_error);
    std::map<std::string, laurent_poly> missing{{"q", q}};
    REQUIRE_THROWS_AS(p.substitute(missing), std::invalid_argument);
}

namespace {

laurent_poly random_poly(const ring_ctx& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expo(-2, 2), coef(-3, 3);
    auto p = laurent_poly::zero(R);
    for (int k = nterms(rng); k >= 0; --k) {
        std::vector<int> e(R->size());
        for (auto& x : e) x = expo(rng);
        p += laurent_poly::monomial(R, e, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("ring axioms on random triples", "[laurent]") {
    auto R = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(99);
    for (int k = 0; k < 1000; ++k) {
        auto a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == laurent_poly::zero(R));
        REQUIRE(a * laurent_poly::one(R) == a);
    }
}

TEST_CASE("permutation composition is apply leftmost first", "[permutation]") {
    auto s1 = permutation::transposition(3, 1, 2);
    auto s2 = permutation::transposition(3, 2, 3);

    auto p12 = compose_then(s1, s2);
    REQUIRE(p12.images() == std::vector<int>{3, 1, 2});
    auto p21 = compose_then(s2, s1);
    REQUIRE(p21.images() == std::vector<int>{2, 3, 1});
    auto p121 = compose_then(p12, s1);
    REQUIRE(p121.images() == std::vector<int>{3, 2, 1});

    REQUIRE(p12.order() == 3);
    REQUIRE(p121.order() == 2);
    REQUIRE(compose_then(p12, p12.inverse()).is_identity());
    REQUIRE(p12.cycle_text() == "(1 3 2)");
    REQUIRE(permutation::identity(4).cycle_text() == "()");
    REQUIRE(p121.fixed_points() == std::vector<int>{2});
    REQUIRE(p12.pow(3).is_identity());
    REQUIRE(p12.pow(-1) == p12.inverse());
}

TEST_CASE("matrix multiply and power", "[matrix]") {
    auto R = make_ring({"t"});
    auto t = laurent_poly::var(R, "t");
    std::vector<std::string> basis{"e(1)", "e(2)"};

    auto m = poly_matrix::zero(R, basis);
    m.at(0, 1) = laurent_poly::one(R);
    m.at(1, 0) = t;

    auto m2 = matrix_mul(m, m);
    REQUIRE(m2.is_diagonal());
    REQUIRE(m2.at(0, 0) == t);
    REQUIRE(m2.at(1, 1) == t);
    REQUIRE(m2.diag_text() == "diag(t, t)");

    REQUIRE(matrix_pow(m, 0).is_identity());
    REQUIRE(matrix_pow(m, 4) == matrix_mul(m2, m2));
    REQUIRE(matrix_pow(m, 7) == matrix_mul(matrix_pow(m, 3), matrix_pow(m, 4)));
    REQUIRE_THROWS_AS(matrix_pow(m, -1), std::invalid_argument);
}

TEST_CASE("monomial decomposition round trip", "[matrix]") {
    auto R = make_ring({"t", "t1"});
    auto t1 = laurent_poly::var(R, "t1");
    std::vector<std::string> basis{"e(1,2)", "e(1,3)", "e(2,3)"};

    auto m = poly_matrix::zero(R, basis);
    m.at(0, 0) = laurent_poly::one(R);
    m.at(1, 2) = t1;
    m.at(2, 1) = laurent_poly::var(R, "t1", -1);

    auto md = monomial_decompose(m);
    REQUIRE(md.perm.images() == std::vector<int>{1, 3, 2});
    REQUIRE(md.scalars[1] == t1);
    REQUIRE(monomial_reconstruct(R, basis, md) == m);

    auto bad = m;
    bad.at(0, 1) = t1;  // two entries in one row
    REQUIRE_THROWS_WITH(monomial_decompose(bad), "not monomial");
    auto bad2 = m;
    bad2.at(1, 2) = t1 + laurent_poly::one(R);  // two terms in one entry
    REQUIRE_THROWS_WITH(monomial_decompose(bad2), "not monomial");
    auto bad3 = m;
    bad3.at(2, 1) = laurent_poly::zero(R);  // empty row
    REQUIRE_THROWS_WITH(monomial_decompose(bad3), "not monomial");
}
