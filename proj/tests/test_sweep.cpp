#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hfsurg/sweep.hpp"

using namespace hfsurg;

TEST_CASE("families") {
    const auto t2 = torus2_family(9);
    REQUIRE(t2.size() == 4);
    CHECK(t2.front().label == "T(2,3)");
    CHECK(t2.back().genus() == 4);
    const auto std_family = standard_family();
    CHECK(std_family.size() == 18);
    CHECK(std_family.back().label == "T(4,5)");
}

TEST_CASE("admissible jobs") {
    const auto knots = torus2_family(7);
    const auto jobs = admissible_jobs(knots);
    // T(2,3): none, T(2,5): 2,3 and negatives, T(2,7): 2..5 and negatives
    CHECK(jobs.size() == 0 + 4 + 8);
    CHECK(jobs.front().knot == 1);
    CHECK(jobs.front().p == -3);
    CHECK(jobs.back().p == 5);
}

TEST_CASE("fan out keeps order and captures errors") {
    for (auto exec : {Execution::Serial, Execution::Parallel}) {
        const auto out = fan_out<int>(
            50,
            [](std::size_t k) {
                if (k % 7 == 3) throw std::runtime_error("job " + std::to_string(k));
                return static_cast<int>(k * k);
            },
            exec);
        REQUIRE(out.size() == 50);
        for (std::size_t k = 0; k < out.size(); ++k) {
            if (k % 7 == 3) {
                CHECK_FALSE(out[k].ok());
                CHECK(out[k].error == "job " + std::to_string(k));
            } else {
                CHECK(*out[k].value == static_cast<int>(k * k));
            }
        }
    }
}

TEST_CASE("parallel and serial sweeps agree") {
    const auto knots = standard_family();
    const auto jobs = admissible_jobs(knots);
    const auto a = obstruct_sweep(knots, jobs, Execution::Serial);
    const auto b = obstruct_sweep(knots, jobs, Execution::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        REQUIRE(a[k].ok());
        REQUIRE(b[k].ok());
        CHECK(a[k].value->overall == b[k].value->overall);
        CHECK(a[k].value->orders.size() == b[k].value->orders.size());
        CHECK(a[k].value->note == b[k].value->note);
    }

    const auto va = verify_sweep(knots, jobs, Execution::Serial);
    const auto vb = verify_sweep(knots, jobs, Execution::Parallel);
    for (std::size_t k = 0; k < va.size(); ++k) {
        REQUIRE(va[k].ok());
        CHECK(*va[k].value == "");
        CHECK(*vb[k].value == *va[k].value);
    }
}

TEST_CASE("verification outside the obstruction range") {
    const auto knots = torus2_family(11);
    for (const auto& k : knots) {
        for (int p : {-13, -1, 1, 2 * k.genus() - 1, 2 * k.genus() + 4}) CHECK(verify_slope(k, p) == "");
    }
}
