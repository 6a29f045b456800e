#include "hfsurg/cone.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hfsurg/complex_ops.hpp"

namespace hfsurg {

int spinc_residue(int s, int p) {
    if (p == 0) throw InputError("p = 0 unsupported");
    const int q = std::abs(p);
    return ((s % q) + q) % q;
}

namespace {

// Members of [lo, hi] congruent to r mod q, ascending.
std::vector<int> congruent_in(int lo, int hi, int r, int q) {
    std::vector<int> out;
    for (int t = lo + spinc_residue(r - lo, q); t <= hi; t += q) out.push_back(t);
    return out;
}

std::vector<int> class_a_indices(int genus, int p, int residue) {
    const int g = std::max(genus, 1);
    return congruent_in(1 - g, std::max(g - 1, p - g), residue, std::abs(p));
}

std::vector<int> class_b_indices(int genus, int p, int residue) {
    const int g = std::max(genus, 1);
    return congruent_in(1 - g + p, g - 1, residue, std::abs(p));
}

// Indices t with |t| <= g - 1 in the class, ascending.
std::vector<int> z_indices(int genus, int p, int residue) {
    return congruent_in(1 - genus, genus - 1, residue, std::abs(p));
}

void require_nontrivial(const StaircaseKnot& knot) {
    if (knot.is_trivial()) throw InputError("trivial knot (Δ = 1) is not supported here");
}

}  // namespace

std::vector<int> ConeDiagram::a_indices() const {
    std::vector<int> out;
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::A) out.push_back(n.index);
    }
    return out;
}

std::vector<int> ConeDiagram::b_indices() const {
    std::vector<int> out;
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::B) out.push_back(n.index);
    }
    return out;
}

MonomialTowerMap ConeDiagram::tower_map() const {
    MonomialTowerMap m;
    for (const auto& n : nodes) m.nodes.push_back(TowerNode{n.kind, n.index, n.offset});
    for (const auto& e : edges) m.entries.push_back(TowerEntry{e.from, e.to, e.exponent});
    return m;
}

ConeDiagram cone_shape(int genus, int p, int s) {
    ConeDiagram d;
    d.residue = spinc_residue(s, p);
    d.p = p;
    d.genus = genus;

    for (int t : class_a_indices(genus, p, d.residue)) d.nodes.push_back(ConeNode{NodeKind::A, t, 0});
    for (int t : class_b_indices(genus, p, d.residue)) d.nodes.push_back(ConeNode{NodeKind::B, t, 0});
    // Path order: by index; at a tie B_t comes first when p > 0 (B_t sits between A_{t-p}
    // and A_t), A_t first when p < 0.
    std::sort(d.nodes.begin(), d.nodes.end(), [p](const ConeNode& a, const ConeNode& b) {
        if (a.index != b.index) return a.index < b.index;
        const bool a_first = p > 0 ? a.kind == NodeKind::B : a.kind == NodeKind::A;
        return a_first && a.kind != b.kind;
    });

    std::map<int, std::size_t> b_at;
    for (std::size_t k = 0; k < d.nodes.size(); ++k) {
        if (d.nodes[k].kind == NodeKind::B) b_at[d.nodes[k].index] = k;
    }
    for (std::size_t k = 0; k < d.nodes.size(); ++k) {
        if (d.nodes[k].kind != NodeKind::A) continue;
        const int t = d.nodes[k].index;
        if (auto it = b_at.find(t); it != b_at.end()) d.edges.push_back(ConeEdge{k, it->second, true, 0});
        if (auto it = b_at.find(t + p); it != b_at.end()) d.edges.push_back(ConeEdge{k, it->second, false, 0});
    }

    if (d.edges.size() + 1 != d.nodes.size()) {
        throw std::logic_error("truncated cone is not a path (p = " + std::to_string(p) + ")");
    }
    for (const auto& e : d.edges) {
        const std::size_t lo = std::min(e.from, e.to);
        const std::size_t hi = std::max(e.from, e.to);
        if (hi != lo + 1) throw std::logic_error("truncated cone edges do not follow the path order");
    }
    return d;
}

ConeDiagram build_truncated_cone(const StaircaseKnot& knot, int p, int s) {
    ConeDiagram d = cone_shape(knot.genus(), p, s);
    for (auto& e : d.edges) {
        const int t = d.nodes[e.from].index;
        e.exponent = e.vertical ? knot.V(t) : knot.H(t);
    }

    std::size_t anchor = 0;
    for (std::size_t k = 0; k < d.nodes.size(); ++k) {
        if (d.nodes[k].kind == NodeKind::B) {
            anchor = k;
            break;
        }
    }
    // Edge k joins nodes k and k + 1 once sorted by position.
    std::vector<const ConeEdge*> link(d.nodes.size(), nullptr);
    for (const auto& e : d.edges) link[std::min(e.from, e.to)] = &e;
    auto step = [&](std::size_t known, std::size_t next, const ConeEdge& e) {
        const Grading shift = 2 * e.exponent - 1;
        d.nodes[next].offset =
            d.nodes[known].kind == NodeKind::A ? d.nodes[known].offset + shift : d.nodes[known].offset - shift;
    };
    d.nodes[anchor].offset = 0;
    for (std::size_t k = anchor; k + 1 < d.nodes.size(); ++k) step(k, k + 1, *link[k]);
    for (std::size_t k = anchor; k > 0; --k) step(k, k - 1, *link[k - 1]);
    return d;
}

ConeDiagram build_truncated_cone(const BifilteredComplex& complex, int p, int s, Flavor flavor) {
    if (flavor == Flavor::Plus) {
        throw InputError("plus flavor needs a staircase knot; general complexes support the hat flavor only");
    }
    return cone_shape(complex_genus(complex), p, s);
}

F2Matrix assemble_hat_cone(const BifilteredComplex& complex, const ConeDiagram& diagram) {
    std::vector<HatSubquotient> parts;
    std::vector<std::size_t> start;
    std::size_t total = 0;
    for (const auto& n : diagram.nodes) {
        parts.push_back(n.kind == NodeKind::A ? a_hat(complex, n.index) : b_hat(complex));
        start.push_back(total);
        total += parts.back().size();
    }

    F2Matrix d(total, total);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (const auto& [r, c] : parts[k].complex.d.entries()) d.set(start[k] + r, start[k] + c);
    }
    for (const auto& e : diagram.edges) {
        const auto& a = parts[e.from];
        const int t = diagram.nodes[e.from].index;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const std::size_t x = a.generator[k];
            const auto& gx = complex.generator(x);
            if (e.vertical) {
                // v̂_t keeps U^n x with n = i(x); it lands on B̂'s copy of x.
                if (a.shift[k] == gx.i) d.toggle(start[e.to] + x, start[e.from] + k);
            } else {
                // ĥ_t keeps U^n x with j(x) - n = t, shifts by U^t and applies the flip.
                if (gx.j - a.shift[k] == t) d.toggle(start[e.to] + complex.flip(x), start[e.from] + k);
            }
        }
    }
    return d;
}

std::optional<Grading> CheckTable::bottom(int residue) const {
    const auto& v = coker.at(static_cast<std::size_t>(residue));
    if (v.empty()) return std::nullopt;
    return v.min_grading();
}

std::optional<Grading> CheckTable::top(int residue) const {
    const auto& v = coker.at(static_cast<std::size_t>(residue));
    if (v.empty()) return std::nullopt;
    return v.max_grading();
}

HatTable hat_dims(const StaircaseKnot& knot, int p) {
    HatTable out;
    out.p = p;
    for (int r = 0; r < std::abs(p); ++r) out.dims.push_back(cone_shape(knot.genus(), p, r).nodes.size());
    return out;
}

HatTable hat_dims(const BifilteredComplex& complex, int p) {
    HatTable out;
    out.p = p;
    for (int r = 0; r < std::abs(p); ++r) {
        const auto d = build_truncated_cone(complex, p, r, Flavor::Hat);
        out.dims.push_back(total_homology_dim(assemble_hat_cone(complex, d)));
    }
    return out;
}

HatTable closed_form_hat_dims(const StaircaseKnot& knot, int p) {
    const int g = knot.genus();
    const int q = std::abs(p);
    if (q <= 1 || q > 2 * g - 1) {
        throw InputError("closed-form hat dimensions need 1 < |p| <= 2g - 1 (p = " + std::to_string(p) +
                         ", g = " + std::to_string(g) + ")");
    }
    const int k = (2 * g - 1) % q;
    const std::size_t f = static_cast<std::size_t>((2 * g - 1) / q);
    HatTable out;
    out.p = p;
    out.dims.assign(static_cast<std::size_t>(q), 0);
    for (int s = g - k; s < g - k + q; ++s) {
        std::size_t dim;
        if (p > 0) {
            dim = s < g ? 2 * f + 1 : 2 * f - 1;
        } else {
            dim = s < g ? 2 * f + 3 : 2 * f + 1;
        }
        out.dims[static_cast<std::size_t>(spinc_residue(s, p))] = dim;
    }
    return out;
}

bool closed_form_plus_applies(const StaircaseKnot& knot, int p) {
    if (knot.is_trivial() || p == 0) return false;
    return (2 * knot.genus() - 1) % p == 0;
}

PlusTable hf_plus_direct(const StaircaseKnot& knot, int p) {
    PlusTable out;
    out.p = p;
    for (int r = 0; r < std::abs(p); ++r) {
        out.modules.push_back(tower_cone_homology(build_truncated_cone(knot, p, r).tower_map()).normalized());
    }
    return out;
}

Grading z_step(int t, int p) {
    if (p > 0) {
        if (t >= 0) return 2 * t;
        if (t + p <= 0) return 2 * (t + p);
        return 0;
    }
    if (t + p >= 0) return 2 * t;
    if (t <= 0) return 2 * (t + p);
    return 2 * (2 * t + p);
}

ZElements z_gradings(const StaircaseKnot& knot, int p) {
    if (p == 0) throw InputError("p = 0 unsupported");
    const int g = knot.genus();
    const int q = std::abs(p);
    ZElements out;
    out.p = p;
    for (int r = 0; r < q; ++r) {
        std::map<int, ZGrading> cls;
        const auto ts = z_indices(g, p, r);
        Grading z = 0;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            const int t = ts[k];
            if (k > 0) {
                const int prev = ts[k - 1];
                z = p > 0 ? z + z_step(prev, p) : z - z_step(t, p);
            }
            cls[t] = ZGrading{z + 2 + 2 * std::abs(t), z + 2, z};
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

namespace {

// Tower bottom of class r in the z-grading frame, for slopes where the closed form applies.
Grading closed_tower_bottom(const StaircaseKnot& knot, int p, int r, const std::map<int, ZGrading>& zs) {
    if (p > 0) {
        const int s = 2 * r < p ? r : r - p;
        return zs.at(s).z - 2 * (knot.min_VH(s) - 1);
    }
    // The tower is B_{t0}/ker U^n with t0 = t* - |p|. The part of the image lying in B_{t0}
    // is U^{H_{t*}} applied to ker U^c, where c accumulates along the chain of A nodes.
    std::int64_t c = 0;
    for (auto it = zs.rbegin(); it != zs.rend(); ++it) {
        const int t = it->first;
        c = it == zs.rbegin() ? knot.V(t) : knot.V(t) + std::max<std::int64_t>(0, c - knot.H(t + std::abs(p)));
    }
    const int first = zs.begin()->first;
    const std::int64_t n = std::max<std::int64_t>(0, c - knot.H(first));
    const Grading a_bottom = zs.begin()->second.z - 2 * (knot.min_VH(first) - 1);
    return a_bottom - 1 + 2 * knot.H(first) + 2 * n;
}

}  // namespace

PlusTable hf_plus_closed(const StaircaseKnot& knot, int p) {
    require_nontrivial(knot);
    if (!closed_form_plus_applies(knot, p)) {
        throw InputError("closed-form plus needs p | 2g - 1 (p = " + std::to_string(p) + ")");
    }
    const int g = knot.genus();
    const int q = std::abs(p);
    PlusTable out;
    out.p = p;
    if (p == 2 * g - 1) {
        out.modules.assign(static_cast<std::size_t>(q), GradedModule{Grading{0}, {}});
        return out;
    }
    if (p == 1 - 2 * g) {
        for (int r = 0; r < q; ++r) {
            const int s = r <= g - 1 ? r : r - q;
            GradedModule m{Grading{0}, {TorsionSummand{knot.min_VH(s), -2 * std::abs(s) - 1}}};
            out.modules.push_back(m.canonical());
        }
        return out;
    }

    const auto zs = z_gradings(knot, p);
    for (int r = 0; r < q; ++r) {
        const auto& cls = zs.classes[static_cast<std::size_t>(r)];
        GradedModule m;
        m.tower_bottom = closed_tower_bottom(knot, p, r, cls);
        const int s = 2 * r < p ? r : r - p;
        for (const auto& [t, zg] : cls) {
            if (p > 0 && t == s) continue;
            m.torsion.push_back(TorsionSummand{knot.min_VH(t), zg.z});
        }
        out.modules.push_back(m.normalized());
    }
    return out;
}

PlusTable hf_plus(const StaircaseKnot& knot, int p, Engine engine) {
    switch (engine) {
        case Engine::Closed:
            return hf_plus_closed(knot, p);
        case Engine::Direct:
            return hf_plus_direct(knot, p);
        case Engine::Both:
            break;
    }
    auto direct = hf_plus_direct(knot, p);
    if (!closed_form_plus_applies(knot, p)) return direct;
    const auto closed = hf_plus_closed(knot, p);
    for (std::size_t r = 0; r < direct.modules.size(); ++r) {
        if (!(direct.modules[r] == closed.modules[r])) {
            std::ostringstream os;
            os << "plus engines disagree at p = " << p << ", class [" << r << "]: direct "
               << to_string(direct.modules[r]) << ", closed " << to_string(closed.modules[r]);
            throw EngineMismatch(os.str());
        }
    }
    return direct;
}

CheckTable check_hf_counting(const StaircaseKnot& knot, int p) {
    require_nontrivial(knot);
    const int g = knot.genus();
    if (!closed_form_plus_applies(knot, p) || p == 2 * g - 1 || p == 1 - 2 * g) {
        throw InputError("counting description of coker U needs p | 2g - 1 with p not ±(2g - 1)");
    }
    const auto zs = z_gradings(knot, p);
    CheckTable out;
    out.p = p;
    for (int r = 0; r < std::abs(p); ++r) {
        const auto& cls = zs.classes[static_cast<std::size_t>(r)];
        const Grading base = closed_tower_bottom(knot, p, r, cls);
        GradedVectorSpace v;
        for (const auto& [t, zg] : cls) {
            if (p > 0 && 2 * std::abs(t) <= p) continue;
            v.add(zg.z - base);
        }
        out.coker.push_back(v);
    }
    return out;
}

CheckTable check_hf_direct(const StaircaseKnot& knot, int p) {
    const auto plus = hf_plus_direct(knot, p);
    CheckTable out;
    out.p = p;
    for (const auto& m : plus.modules) out.coker.push_back(m.coker_u());
    return out;
}

int KnotModel::genus() const {
    if (staircase) return staircase->genus();
    return complex_genus(*complex);
}

KnotModel resolve_knot(const KnotSpec& spec) {
    KnotModel out;
    out.label = spec.label;
    if (const auto* t = std::get_if<TorusKnot>(&spec.value)) {
        out.staircase = staircase_from_alexander(torus_knot_alexander(t->a, t->b));
    } else if (const auto* a = std::get_if<AlexanderKnot>(&spec.value)) {
        out.staircase = staircase_from_alexander(a->alexander);
    } else {
        out.complex = std::get<ComplexKnot>(spec.value).complex;
    }
    return out;
}

HatTable hat_dims(const KnotModel& knot, int p) {
    return knot.staircase ? hat_dims(*knot.staircase, p) : hat_dims(*knot.complex, p);
}

Rational d_invariant_large(const StaircaseKnot& knot, int N, int s) {
    const int g = knot.genus();
    if (N < 1 || N < 2 * g - 1) {
        throw InputError("d_invariant_large needs N >= 2g - 1 (N = " + std::to_string(N) + ")");
    }
    if (2 * std::abs(s) > N - 1) throw InputError("d_invariant_large needs |s| <= (N - 1)/2");
    const std::int64_t n = N;
    const std::int64_t ss = s;
    return Rational(-2 * knot.V(s) - ss) + Rational(4 * ss * ss + n * n - n, 4 * n);
}

}  // namespace hfsurg
