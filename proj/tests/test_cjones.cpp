#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotlab/cjones.hpp"

using namespace knotlab;
using namespace knotlab::cjones;

namespace {
const int kPrec = [] {
    BigReal::default_precision(50);
    return 0;
}();

BigComplex two_pi_i() { return BigComplex(BigReal(0), 2 * const_pi()); }
}  // namespace

TEST_CASE("N=1 gives 1 (empty product)") {
    BigComplex q(BigReal("1.7"), BigReal("0.3"));
    CHECK(abs(cjones_fig8(1, q) - 1) == 0);
    CHECK(abs(cjones_trefoil(1, q) - 1) == 0);
}

TEST_CASE("N=2 symbolic expansions") {
    BigReal tol = default_tolerance();
    for (auto q : {BigComplex(BigReal("0.9"), BigReal("0.4")),
                   BigComplex(BigReal("-1.2"), BigReal("0.8"))}) {
        BigComplex qi = BigComplex(1) / q;
        // q^2 - q + 1 - q^-1 + q^-2
        BigComplex f8 = q * q - q + 1 - qi + qi * qi;
        CHECK(abs(cjones_fig8(2, q) - f8) < tol * 10);
        // q^-1 + q^-3 - q^-4
        BigComplex tr = qi + qi * qi * qi - qi * qi * qi * qi;
        CHECK(abs(cjones_trefoil(2, q) - tr) < tol * 10);
    }
}

TEST_CASE("Kashaev N=2 value is 5") {
    CHECK(abs(cjones_fig8(2, BigComplex(BigReal(-1))) - 5) < default_tolerance());
    CHECK(abs(eval_at_theta(KnotTag::fig8(), 2, two_pi_i()) - 5) < default_tolerance());
}

TEST_CASE("q = 1 collapses the trefoil sum to 1") {
    for (int N : {2, 5, 17}) CHECK(abs(cjones_trefoil(N, BigComplex(1)) - 1) == 0);
    CHECK(abs(eval_at_theta(KnotTag::trefoil(), 9, BigComplex(0)) - 1) < default_tolerance());
}

TEST_CASE("q = 0 rejected") {
    CHECK_THROWS_AS(cjones_fig8(3, BigComplex(0)), std::domain_error);
    CHECK_THROWS_AS(cjones_trefoil(3, BigComplex(0)), std::domain_error);
}

TEST_CASE("fig8 sum is invariant under q <-> 1/q") {
    BigReal tol = pow(BigReal(10), -static_cast<int>(current_precision() - 10));
    for (auto q : {BigComplex(BigReal("1.31"), BigReal("0.41")),
                   BigComplex(BigReal("0.35"), BigReal("-0.72")),
                   BigComplex(BigReal("-0.62"), BigReal("0.55"))}) {
        for (int N : {3, 7, 12}) {
            BigComplex a = cjones_fig8(N, q);
            BigComplex b = cjones_fig8(N, BigComplex(1) / q);
            CHECK(abs(a - b) < tol * (1 + abs(a)));
        }
    }
}

TEST_CASE("fig8 at primitive N-th roots of unity is real") {
    BigReal tol = pow(BigReal(10), -static_cast<int>(current_precision() - 10));
    for (int N : {3, 5, 8, 13}) {
        BigComplex q = exp(two_pi_i() / N);
        BigComplex v = cjones_fig8(N, q);
        CHECK(abs(v.imag()) < tol * (1 + abs(v)));
    }
}

TEST_CASE("torus tag validation and dispatch") {
    CHECK_THROWS_AS(KnotTag::torus(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(KnotTag::torus(1, 3), std::invalid_argument);
    // (2,3) is the trefoil and is supported
    BigComplex v1 = eval_at_theta(KnotTag::torus(2, 3), 7, BigComplex(BigReal("0.3")));
    BigComplex v2 = eval_at_theta(KnotTag::trefoil(), 7, BigComplex(BigReal("0.3")));
    CHECK(abs(v1 - v2) == 0);
    CHECK_THROWS_AS(eval_at_theta(KnotTag::torus(2, 5), 7, BigComplex(1)),
                    std::invalid_argument);
}

TEST_CASE("precision auto-raise keeps cancellation under control") {
    // complex theta with positive real part: alternating phases cancel heavily
    BigComplex theta(BigReal("0.8"), BigReal("-0.8"));
    CHECK(required_digits(400, theta) >= 50 + unsigned(0.7 * 400 * 0.8 / 2.302585));
    CHECK(required_digits(400, -theta) == required_digits(400, theta));
    BigComplex v50 = eval_at_theta(KnotTag::trefoil(), 400, theta);
    {
        PrecisionGuard g(100);
        BigComplex theta2(BigReal("0.8"), BigReal("-0.8"));
        BigComplex v100 = eval_at_theta(KnotTag::trefoil(), 400, theta2);
        BigReal rel = abs(to_precision(v50, 100) - v100) / abs(v100);
        CHECK(rel < pow(BigReal(10), -45));
    }
}

TEST_CASE("doubling the working precision is a no-op to 10^-(p-5)") {
    BigComplex theta(BigReal("0.5"));
    BigComplex a = eval_at_theta(KnotTag::fig8(), 60, theta);
    BigComplex b;
    {
        PrecisionGuard g(100);
        b = eval_at_theta(KnotTag::fig8(), 60, to_precision(theta, 100));
    }
    CHECK(abs(to_precision(a, 100) - b) / abs(b) < pow(BigReal(10), -45));
}

TEST_CASE("jsequence") {
    auto seq = jsequence(KnotTag::fig8(), two_pi_i(), 2, 4, 1);
    REQUIRE(seq.values.size() == 3);
    CHECK(seq.values[0].first == 2);
    CHECK(abs(seq.values[0].second - 5) < default_tolerance());
    auto ones = jsequence(KnotTag::trefoil(), BigComplex(0), 2, 10, 1);
    for (auto& [N, v] : ones.values) CHECK(abs(v - 1) < default_tolerance());
    CHECK_THROWS_AS(jsequence(KnotTag::fig8(), two_pi_i(), 5, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(jsequence(KnotTag::fig8(), two_pi_i(), 1, 5, 1), std::invalid_argument);
}

TEST_CASE("growth along the volume conjecture direction") {
    // 2 pi (log|J_N| - 3/2 log N)/N converges to 2.0298...; the bare rate
    // carries the N^{3/2} correction
    BigComplex v = eval_at_theta(KnotTag::fig8(), 60, two_pi_i());
    BigReal corrected = 2 * const_pi() * (log(abs(v)) - BigReal(3) / 2 * log(BigReal(60))) / 60;
    CHECK(abs(corrected - BigReal("2.0298832128")) < BigReal("0.05"));
}
