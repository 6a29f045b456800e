#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hfsurg/cone.hpp"
#include "oracle.hpp"

using namespace hfsurg;

namespace {

StaircaseKnot torus(int a, int b) { return staircase_from_alexander(torus_knot_alexander(a, b)); }

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

GradedModule module(std::optional<Grading> tower, std::vector<TorsionSummand> torsion) {
    return GradedModule{tower, std::move(torsion)}.canonical();
}

}  // namespace

TEST_CASE("residues") {
    CHECK(spinc_residue(-1, 3) == 2);
    CHECK(spinc_residue(4, -3) == 1);
    CHECK(spinc_residue(0, 5) == 0);
    CHECK_THROWS_AS(spinc_residue(1, 0), InputError);
}

TEST_CASE("cone shapes") {
    // genus 2, p = 3: one A node per class, no B nodes
    for (int s = 0; s < 3; ++s) {
        const auto d = cone_shape(2, 3, s);
        CHECK(d.nodes.size() == 1);
        CHECK(d.edges.empty());
    }
    CHECK(cone_shape(2, 3, 2).a_indices() == std::vector<int>{-1});

    // genus 2, p = 2, class 1: A_-1 -> B_1 <- A_1
    const auto d = cone_shape(2, 2, 1);
    CHECK(d.a_indices() == std::vector<int>{-1, 1});
    CHECK(d.b_indices() == std::vector<int>{1});
    REQUIRE(d.nodes.size() == 3);
    CHECK(d.nodes[1].kind == NodeKind::B);

    // genus 2, p = -3, class 0: B_-3, A_0, B_0 in path order
    const auto n = cone_shape(2, -3, 0);
    REQUIRE(n.nodes.size() == 3);
    CHECK(n.nodes[0].kind == NodeKind::B);
    CHECK(n.nodes[0].index == -3);
    CHECK(n.nodes[1].kind == NodeKind::A);
    CHECK(n.nodes[2].index == 0);
    CHECK(n.edges.size() == 2);

    // the trivial knot is truncated as genus one
    CHECK(cone_shape(0, 1, 0).nodes.size() == 1);
    CHECK(cone_shape(0, -1, 0).nodes.size() == 3);
}

TEST_CASE("every class cone is a path for a range of genera and slopes") {
    for (int g = 0; g <= 7; ++g) {
        for (int p = -20; p <= 20; ++p) {
            if (p == 0) continue;
            for (int s = 0; s < std::abs(p); ++s) CHECK_NOTHROW(cone_shape(g, p, s));
        }
    }
}

TEST_CASE("staircase cone offsets are consistent with the exponents") {
    const auto k = torus(3, 5);
    for (int p : {-7, -3, 2, 5, 7}) {
        for (int s = 0; s < std::abs(p); ++s) {
            const auto d = build_truncated_cone(k, p, s);
            CHECK_NOTHROW(d.tower_map().validate());
            for (const auto& e : d.edges) {
                CHECK(d.nodes[e.to].offset == d.nodes[e.from].offset - 1 + 2 * e.exponent);
                const int t = d.nodes[e.from].index;
                CHECK(e.exponent == (e.vertical ? k.V(t) : k.H(t)));
            }
        }
    }
}

TEST_CASE("hat dimensions of small examples") {
    CHECK(hat_dims(torus(2, 5), 2).dims == std::vector<std::size_t>{1, 3});
    CHECK(hat_dims(torus(2, 5), 3).dims == std::vector<std::size_t>{1, 1, 1});
    CHECK(hat_dims(torus(2, 5), -3).dims == std::vector<std::size_t>{3, 3, 3});
    CHECK(closed_form_hat_dims(torus(2, 5), 2).dims == std::vector<std::size_t>{1, 3});
    CHECK(closed_form_hat_dims(torus(2, 11), -9).dims == std::vector<std::size_t>(9, 3));
    CHECK_THROWS_AS(closed_form_hat_dims(torus(2, 5), 4), InputError);
    CHECK_THROWS_AS(closed_form_hat_dims(torus(2, 5), 1), InputError);
}

TEST_CASE("figure eight from its model complex") {
    const auto fig8 = load_cfk_file(fixture("fig8.json"));
    CHECK(hat_dims(fig8, 1).dims == std::vector<std::size_t>{3});
    CHECK(hat_dims(fig8, 2).dims == std::vector<std::size_t>{3, 1});
    CHECK(hat_dims(fig8, -2).dims == std::vector<std::size_t>{3, 1});
    CHECK(hat_dims(fig8, 5).dims == std::vector<std::size_t>{3, 1, 1, 1, 1});
    CHECK_THROWS_AS(build_truncated_cone(fig8, 2, 0, Flavor::Plus), InputError);
}

TEST_CASE("hat dimensions: complex engine, node count and closed form agree") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int g = 1 + trial % 5;
        const auto k = staircase_from_steps(oracle::random_steps(rng, g));
        for (int p = -(2 * g + 1); p <= 2 * g + 1; ++p) {
            if (p == 0) continue;
            INFO("g " << g << " p " << p);
            const auto nodes = hat_dims(k, p);
            CHECK(hat_dims(k.complex(), p) == nodes);
            if (std::abs(p) > 1 && std::abs(p) <= 2 * g - 1) CHECK(closed_form_hat_dims(k, p) == nodes);
            for (int r = 0; r < std::abs(p); ++r) {
                CHECK(nodes.dims[r] == nodes.dims[spinc_residue(-r, p)]);
            }
        }
    }
    for (const char* name : {"unknot.json", "trefoil.json", "t25.json", "t27.json"}) {
        const auto cx = load_cfk_file(fixture(name));
        for (int p : {-3, -1, 1, 2, 4}) {
            std::size_t total = 0;
            for (auto d : hat_dims(cx, p).dims) total += d;
            CHECK(total >= static_cast<std::size_t>(std::abs(p)));
        }
    }
}

TEST_CASE("plus modules of small examples") {
    const auto t25 = torus(2, 5);
    const auto neg3 = hf_plus_direct(t25, -3);
    CHECK(neg3.modules[0] == module(0, {{1, -1}}));
    CHECK(neg3.modules[1] == module(0, {{1, -3}}));
    CHECK(neg3.modules[2] == module(0, {{1, -3}}));
    CHECK(hf_plus_closed(t25, -3) == neg3);

    const auto t23 = torus(2, 3);
    CHECK(hf_plus(t23, 1, Engine::Both).modules[0] == module(0, {}));
    CHECK(hf_plus(t23, -1, Engine::Both).modules[0] == module(0, {{1, -1}}));

    const StaircaseKnot unknot;
    for (const auto& m : hf_plus_direct(unknot, 4).modules) CHECK(m == module(0, {}));
    CHECK_THROWS_AS(hf_plus_closed(t25, 2), InputError);
}

TEST_CASE("closed and direct plus engines agree where the closed form applies") {
    for (int q = 3; q <= 21; q += 2) {
        const auto k = torus(2, q);
        for (int p = -(2 * k.genus() - 1); p <= 2 * k.genus() - 1; ++p) {
            if (!closed_form_plus_applies(k, p)) continue;
            INFO("T(2," << q << ") p " << p);
            CHECK(hf_plus_closed(k, p) == hf_plus_direct(k, p));
        }
    }
    for (auto [a, b] : {std::pair{3, 4}, {3, 5}, {4, 5}, {3, 7}}) {
        const auto k = torus(a, b);
        for (int p = -(2 * k.genus() - 1); p <= 2 * k.genus() - 1; ++p) {
            if (closed_form_plus_applies(k, p)) CHECK(hf_plus(k, p, Engine::Both) == hf_plus_direct(k, p));
        }
    }
}

TEST_CASE("plus modules respect conjugation and have one tower per class") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int g = 1 + trial % 6;
        const auto k = staircase_from_steps(oracle::random_steps(rng, g));
        for (int p = -(2 * g); p <= 2 * g; ++p) {
            if (p == 0) continue;
            const auto t = hf_plus_direct(k, p);
            for (int r = 0; r < std::abs(p); ++r) {
                CHECK(t.modules[r].tower_bottom == Grading{0});
                CHECK(t.modules[r] == t.modules[spinc_residue(-r, p)]);
            }
        }
    }
}

TEST_CASE("z steps") {
    CHECK(z_step(2, 3) == 4);
    CHECK(z_step(0, 3) == 0);
    CHECK(z_step(-1, 3) == 0);
    CHECK(z_step(-5, 3) == -4);
    CHECK(z_step(5, -3) == 10);
    CHECK(z_step(-1, -3) == -8);
    CHECK(z_step(1, -3) == -2);
}

TEST_CASE("z gradings match the direct cone offsets") {
    const auto k = torus(2, 11);
    for (int p : {-9, -3, 2, 3, 4, 9}) {
        const auto z = z_gradings(k, p);
        for (int r = 0; r < std::abs(p); ++r) {
            const auto d = build_truncated_cone(k, p, r);
            std::optional<Grading> shift;
            for (const auto& n : d.nodes) {
                if (n.kind != NodeKind::A || std::abs(n.index) > k.genus() - 1) continue;
                const Grading zg = n.offset + 2 * (k.min_VH(n.index) - 1);
                const auto& e = z.classes[r].at(n.index);
                if (!shift) shift = zg - e.z;
                CHECK(zg - e.z == *shift);
                CHECK(e.y == e.z + 2);
                CHECK(e.x == e.y + 2 * std::abs(n.index));
            }
        }
    }
}

TEST_CASE("coker U: counting against the direct engine") {
    const auto k = torus(2, 11);
    const auto count = check_hf_counting(k, 3);
    CHECK(count == check_hf_direct(k, 3));
    CHECK(count.coker[0].dim(*count.bottom(0)) == 2);
    CHECK(count.coker[1].dim(*count.bottom(1)) == 1);
    CHECK(count.coker[2].dim(*count.bottom(2)) == 1);
    CHECK(check_hf_counting(k, -3) == check_hf_direct(k, -3));
    CHECK_THROWS_AS(check_hf_counting(k, 9), InputError);
    CHECK_THROWS_AS(check_hf_counting(k, 2), InputError);
}

TEST_CASE("d-invariants of large surgeries") {
    CHECK(d_invariant_large(torus(2, 3), 1, 0) == Rational(-2));
    CHECK(d_invariant_large(StaircaseKnot{}, 5, 0) == Rational(1));
    CHECK(d_invariant_large(StaircaseKnot{}, 5, 2) == Rational(-1, 5));
    const auto k = torus(3, 4);
    for (int N = 5; N <= 13; ++N) {
        for (int s = 0; 2 * s <= N - 1; ++s) CHECK(d_invariant_large(k, N, s) == d_invariant_large(k, N, -s));
    }
    CHECK_THROWS_AS(d_invariant_large(k, 3, 0), InputError);
    CHECK_THROWS_AS(d_invariant_large(k, 5, 3), InputError);
}

TEST_CASE("knot models") {
    const auto t = resolve_knot(parse_knot_spec("torus:2,7"));
    CHECK(t.is_staircase());
    CHECK(t.genus() == 3);
    const auto f = resolve_knot(parse_knot_spec("cfk:" + fixture("fig8.json")));
    CHECK_FALSE(f.is_staircase());
    CHECK(f.genus() == 1);
    CHECK(hat_dims(f, 3).dims == std::vector<std::size_t>{3, 1, 1});
}
