#include "hfsurg/sweep.hpp"

#include <cstdlib>
#include <sstream>

#include "hfsurg/complex_ops.hpp"

namespace hfsurg {

std::vector<SweepJob> admissible_jobs(const std::vector<KnotModel>& knots) {
    std::vector<SweepJob> jobs;
    for (std::size_t k = 0; k < knots.size(); ++k) {
        const int top = 2 * knots[k].genus() - 1;
        for (int p = -top; p <= top; ++p) {
            if (std::abs(p) > 1) jobs.push_back({k, p});
        }
    }
    return jobs;
}

std::vector<Outcome<ObstructionReport>> obstruct_sweep(const std::vector<KnotModel>& knots,
                                                        const std::vector<SweepJob>& jobs, Execution exec) {
    return fan_out<ObstructionReport>(
        jobs.size(), [&](std::size_t k) { return full_report(knots[jobs[k].knot], jobs[k].p); }, exec);
}

namespace {

std::string where(const KnotModel& knot, int p, int residue) {
    std::ostringstream os;
    os << knot.label << ", p = " << p << ", class [" << residue << "]: ";
    return os.str();
}

std::string verify_hat(const KnotModel& knot, int p) {
    const int q = std::abs(p);
    const int g = knot.genus();
    const auto direct = hat_dims(knot, p);
    if (knot.staircase) {
        if (q > 1 && q <= 2 * g - 1) {
            const auto closed = closed_form_hat_dims(*knot.staircase, p);
            for (int r = 0; r < q; ++r) {
                if (closed.dims[r] != direct.dims[r]) {
                    return where(knot, p, r) + "hat closed form " + std::to_string(closed.dims[r]) + ", node count " +
                           std::to_string(direct.dims[r]);
                }
            }
        }
        const auto chain = hat_dims(knot.staircase->complex(), p);
        for (int r = 0; r < q; ++r) {
            if (chain.dims[r] != direct.dims[r]) {
                return where(knot, p, r) + "hat chain-level " + std::to_string(chain.dims[r]) + ", node count " +
                       std::to_string(direct.dims[r]);
            }
        }
    }
    for (int r = 0; r < q; ++r) {
        const int c = spinc_residue(-r, p);
        if (direct.dims[r] != direct.dims[c]) {
            return where(knot, p, r) + "hat dim differs from conjugate class [" + std::to_string(c) + "]";
        }
    }
    return {};
}

std::string verify_plus(const StaircaseKnot& knot, const KnotModel& model, int p) {
    const int q = std::abs(p);
    const int g = knot.genus();
    const auto direct = hf_plus_direct(knot, p);
    if (closed_form_plus_applies(knot, p)) {
        const auto closed = hf_plus_closed(knot, p);
        for (int r = 0; r < q; ++r) {
            if (!(closed.modules[r] == direct.modules[r])) {
                return where(model, p, r) + "HF+ closed " + to_string(closed.modules[r]) + ", direct " +
                       to_string(direct.modules[r]);
            }
        }
        if (p != 2 * g - 1 && p != 1 - 2 * g) {
            const auto counted = check_hf_counting(knot, p);
            for (int r = 0; r < q; ++r) {
                if (!(counted.coker[r] == direct.modules[r].coker_u())) {
                    return where(model, p, r) + "coker U by counting differs from the direct engine";
                }
            }
        }
    }
    for (int r = 0; r < q; ++r) {
        const int c = spinc_residue(-r, p);
        if (!(direct.modules[r] == direct.modules[c])) {
            return where(model, p, r) + "HF+ " + to_string(direct.modules[r]) + " differs from conjugate class [" +
                   std::to_string(c) + "] " + to_string(direct.modules[c]);
        }
    }

    // z gradings against the tower offsets of the diagram, up to one shift per class.
    const auto zs = z_gradings(knot, p);
    for (int r = 0; r < q; ++r) {
        const auto diagram = build_truncated_cone(knot, p, r);
        std::optional<Grading> shift;
        for (const auto& node : diagram.nodes) {
            const auto it = zs.classes[r].find(node.index);
            if (node.kind != NodeKind::A || it == zs.classes[r].end()) continue;
            const Grading from_offsets = node.offset + 2 * (knot.min_VH(node.index) - 1);
            const Grading d = from_offsets - it->second.z;
            if (shift && *shift != d) {
                return where(model, p, r) + "gr(z_" + std::to_string(node.index) + ") disagrees with tower offsets";
            }
            shift = d;
        }
    }
    return {};
}

}  // namespace

std::string verify_slope(const KnotModel& knot, int p) {
    if (p == 0) throw InputError("p = 0 unsupported");
    if (auto msg = verify_hat(knot, p); !msg.empty()) return msg;
    if (knot.staircase && !knot.staircase->is_trivial()) return verify_plus(*knot.staircase, knot, p);
    return {};
}

std::vector<Outcome<std::string>> verify_sweep(const std::vector<KnotModel>& knots, const std::vector<SweepJob>& jobs,
                                               Execution exec) {
    return fan_out<std::string>(
        jobs.size(), [&](std::size_t k) { return verify_slope(knots[jobs[k].knot], jobs[k].p); }, exec);
}

std::vector<KnotModel> torus2_family(int max_q) {
    std::vector<KnotModel> out;
    for (int q = 3; q <= max_q; q += 2) out.push_back(resolve_knot(torus_spec(2, q)));
    return out;
}

std::vector<KnotModel> standard_family() {
    auto out = torus2_family(31);
    for (auto [a, b] : {std::pair{3, 4}, std::pair{3, 5}, std::pair{4, 5}}) out.push_back(resolve_knot(torus_spec(a, b)));
    return out;
}

}  // namespace hfsurg
