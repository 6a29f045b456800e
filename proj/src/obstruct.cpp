#include "hfsurg/obstruct.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hfsurg {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Obstructed:
            return "OBSTRUCTED";
        case Verdict::NotObstructed:
            return "NOT OBSTRUCTED";
        case Verdict::Inconclusive:
            return "INCONCLUSIVE";
        case Verdict::OutOfRange:
            return "OUT OF RANGE";
    }
    return "?";
}

namespace {

const char* kCaveat =
    "verdicts use Floer-theoretic data only; hyperbolicity and the other topological hypotheses are not checked";

void check_order(int q, int r) {
    if (r < 1 || r >= q || q % r != 0) {
        throw InputError("invalid summand order r = " + std::to_string(r) + " for |p| = " + std::to_string(q));
    }
}

void check_range(int genus, int p) {
    const int q = std::abs(p);
    if (q <= 1 || q > 2 * genus - 1) {
        throw InputError("slope " + std::to_string(p) + " outside 1 < |p| <= 2g - 1 = " + std::to_string(2 * genus - 1));
    }
}

Witness make_witness(int a, int b, const std::string& what_a, const std::string& what_b, const std::string& label) {
    std::ostringstream os;
    if (a > b) {
        std::swap(a, b);
        os << label << ": [" << a << "] " << what_b << ", [" << b << "] " << what_a;
    } else {
        os << label << ": [" << a << "] " << what_a << ", [" << b << "] " << what_b;
    }
    return Witness{a, b, os.str()};
}

Verdict combine(const std::vector<OrderVerdict>& orders) {
    if (orders.empty()) return Verdict::Inconclusive;
    bool all = true;
    bool any_clear = false;
    for (const auto& o : orders) {
        all = all && o.verdict == Verdict::Obstructed;
        any_clear = any_clear || o.verdict == Verdict::NotObstructed;
    }
    if (all) return Verdict::Obstructed;
    return any_clear ? Verdict::NotObstructed : Verdict::Inconclusive;
}

std::size_t coker_dim_at(const CheckTable& table, int residue, bool bottom_level, int q) {
    const auto level = bottom_level ? table.bottom(residue) : table.top(residue);
    if (!level) return 0;
    const Grading n = bottom_level ? *level : *level - 2 * q;
    return table.coker[static_cast<std::size_t>(residue)].dim(n);
}

}  // namespace

std::vector<int> candidate_orders(int p) {
    const int q = std::abs(p);
    std::vector<int> out;
    for (int r = 1; 2 * r <= q; ++r) {
        if (q % r == 0) out.push_back(r);
    }
    return out;
}

PeriodicityResult periodicity_test(const HatTable& table, int r) {
    const int q = static_cast<int>(table.dims.size());
    check_order(q, r);
    for (int s = 0; s < q; ++s) {
        const int t = (s + r) % q;
        if (table.dims[s] != table.dims[t]) {
            return {Verdict::Obstructed, make_witness(s, t, "dim " + std::to_string(table.dims[s]),
                                                      "dim " + std::to_string(table.dims[t]), "HF-hat")};
        }
    }
    return {Verdict::NotObstructed, std::nullopt};
}

PeriodicityResult periodicity_test(const PlusTable& table, int r) {
    const int q = static_cast<int>(table.modules.size());
    check_order(q, r);
    for (int s = 0; s < q; ++s) {
        const int t = (s + r) % q;
        if (!relatively_isomorphic(table.modules[s], table.modules[t])) {
            return {Verdict::Obstructed,
                    make_witness(s, t, to_string(table.modules[s]), to_string(table.modules[t]), "HF+")};
        }
    }
    return {Verdict::NotObstructed, std::nullopt};
}

int descent_class(const HatTable& table) {
    const int q = static_cast<int>(table.dims.size());
    std::vector<int> found;
    for (int s = 0; s < q; ++s) {
        if (table.dims[(s - 1 + q) % q] > table.dims[s]) found.push_back(s);
    }
    if (found.size() != 1) throw InputError("no unique class with dim HF-hat([s-1]) > dim HF-hat([s])");
    return found.front();
}

SlopeVerdict divisibility_obstruction(const StaircaseKnot& knot, int p) {
    const int g = knot.genus();
    check_range(g, p);
    SlopeVerdict out;
    if ((2 * g - 1) % p == 0) {
        for (int r : candidate_orders(p)) out.orders.push_back({r, Verdict::Inconclusive, "divisibility", std::nullopt});
        out.verdict = Verdict::Inconclusive;
        return out;
    }

    const int q = std::abs(p);
    const auto table = hat_dims(knot, p);
    const int c = descent_class(table);
    if (c != spinc_residue(g, p)) throw std::logic_error("descent class differs from the class of g");
    auto drop = [&](int s) {
        return std::to_string(table.dims[(s - 1 + q) % q]) + " -> " + std::to_string(table.dims[s]);
    };
    for (int r : candidate_orders(p)) {
        const int other = (c + r) % q;
        out.orders.push_back({r, Verdict::Obstructed, "divisibility",
                              make_witness(c, other, drop(c), drop(other), "dim HF-hat([s-1]) -> dim HF-hat([s])")});
    }
    out.verdict = Verdict::Obstructed;
    return out;
}

SlopeVerdict graded_slope_eliminator(const StaircaseKnot& knot, int p) {
    const int g = knot.genus();
    check_range(g, p);
    if ((2 * g - 1) % p != 0) throw InputError("graded slope eliminator needs p | 2g - 1");

    const int q = std::abs(p);
    const auto plus = hf_plus_direct(knot, p);
    SlopeVerdict out;
    if (p == 2 * g - 1) {
        for (int r : candidate_orders(p)) {
            const auto res = periodicity_test(plus, r);
            out.orders.push_back({r, res.verdict, "HF+ periodicity", res.witness});
        }
        out.verdict = combine(out.orders);
        return out;
    }

    CheckTable check;
    if (p != 1 - 2 * g) check = check_hf_direct(knot, p);
    for (int r : candidate_orders(p)) {
        OrderVerdict ov{r, Verdict::NotObstructed, "", std::nullopt};
        if (p == 1 - 2 * g) {
            ov.method = "graded module";
            if (!(plus.modules[0] == plus.modules[r])) {
                ov.verdict = Verdict::Obstructed;
                ov.witness = make_witness(0, r, to_string(plus.modules[0]), to_string(plus.modules[r]), "HF+");
            }
        } else {
            const bool bottom_level = p > 0;
            const int other = p > 0 ? q - r : r;
            const auto da = coker_dim_at(check, 0, bottom_level, q);
            const auto db = coker_dim_at(check, other, bottom_level, q);
            ov.method = bottom_level ? "coker U at gr_bot" : "coker U at gr_top - 2|p|";
            if (da != db) {
                ov.verdict = Verdict::Obstructed;
                ov.witness = make_witness(0, other, "dim " + std::to_string(da), "dim " + std::to_string(db),
                                          bottom_level ? "coker U at gr_bot" : "coker U at gr_top - 2|p|");
            }
        }
        if (ov.verdict != Verdict::Obstructed) {
            const auto res = periodicity_test(plus, r);
            ov.method = "HF+ periodicity";
            ov.verdict = res.verdict;
            ov.witness = res.witness;
        }
        out.orders.push_back(ov);
    }
    out.verdict = combine(out.orders);
    return out;
}

Verdict genus_one_check(std::size_t a0_dim) {
    if (a0_dim == 0) throw InputError("dim Â_0 must be odd and positive");
    return a0_dim > 1 ? Verdict::Obstructed : Verdict::Inconclusive;
}

TwoSlopesResult two_slopes_check(const std::array<std::size_t, 3>& dims, int rank_theta) {
    if (rank_theta != 0 && rank_theta != 1) throw InputError("rank θ must be 0 or 1");
    const auto am = static_cast<std::int64_t>(dims[0]);
    const auto a0 = static_cast<std::int64_t>(dims[1]);
    const auto a1 = static_cast<std::int64_t>(dims[2]);

    TwoSlopesResult out;
    out.two_surgery_relation = am + a1 + 1 - 2 * rank_theta == a0;
    out.three_surgery_relation = am == a0 && a0 == a1;
    if (!out.two_surgery_relation || !out.three_surgery_relation) {
        out.verdict = Verdict::Obstructed;
        out.reason = "periodicity relations for slopes 2 and 3 have no common solution";
        return out;
    }

    // Only dim Â_0 = 1, rank θ = 1 survives: 3-surgery is an L-space, so K is a genus two
    // L-space knot, and slope 2 must then be eliminated for every such staircase.
    for (const auto& knot : all_staircases_of_genus(2)) {
        KnotModel model;
        model.label = knot.alexander().to_string();
        model.staircase = knot;
        if (full_report(model, 2).overall != Verdict::Obstructed) {
            out.verdict = Verdict::Inconclusive;
            out.reason = "slope 2 not eliminated for " + model.label;
            return out;
        }
    }
    out.verdict = Verdict::Obstructed;
    out.reason = "dim Â_0 = 1 makes 3-surgery an L-space; slope 2 is then obstructed for every genus two staircase";
    return out;
}

ObstructionReport full_report(const KnotModel& knot, int p) {
    if (p == 0) throw InputError("p = 0 unsupported");
    const int g = knot.genus();
    if (g == 0) throw InputError("trivial knot: obstructions need a non-trivial knot");

    ObstructionReport rep;
    rep.knot = knot.label;
    rep.genus = g;
    rep.p = p;
    rep.caveat = kCaveat;
    const int q = std::abs(p);
    if (q <= 1 || q > 2 * g - 1) {
        rep.overall = Verdict::OutOfRange;
        rep.note = "slope outside obstruction range: need 1 < |p| <= 2g - 1 = " + std::to_string(2 * g - 1);
        return rep;
    }

    if (!knot.staircase) {
        const auto table = hat_dims(*knot.complex, p);
        for (int r : candidate_orders(p)) {
            const auto res = periodicity_test(table, r);
            rep.orders.push_back({r, res.verdict == Verdict::Obstructed ? Verdict::Obstructed : Verdict::Inconclusive,
                                  "HF-hat periodicity", res.witness});
        }
        rep.overall = combine(rep.orders);
        rep.note = "general complex: only hat periodicity is tested";
        return rep;
    }

    const auto div = divisibility_obstruction(*knot.staircase, p);
    if (div.verdict == Verdict::Obstructed) {
        rep.orders = div.orders;
        rep.note = "p does not divide 2g - 1 = " + std::to_string(2 * g - 1);
    } else {
        rep.orders = graded_slope_eliminator(*knot.staircase, p).orders;
        rep.note = "p divides 2g - 1 = " + std::to_string(2 * g - 1);
    }
    rep.overall = combine(rep.orders);
    return rep;
}

ObstructionReport full_report(const KnotSpec& spec, int p) { return full_report(resolve_knot(spec), p); }

}  // namespace hfsurg
