#include "hfsurg/report.hpp"

#include <cstdlib>
#include <sstream>

namespace hfsurg {

Json document(const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

std::string rational_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::optional<Rational> class_d_invariant(const StaircaseKnot& knot, int p, int residue) {
    if (p < 1 || p < 2 * knot.genus() - 1) return std::nullopt;
    const int s = 2 * residue <= p - 1 ? residue : residue - p;
    if (2 * std::abs(s) > p - 1) return std::nullopt;
    return d_invariant_large(knot, p, s);
}

Json hat_classes_json(const HatTable& table) {
    Json j = Json::object();
    for (std::size_t r = 0; r < table.dims.size(); ++r) j[std::to_string(r)] = table.dims[r];
    return j;
}

Json plus_classes_json(const PlusTable& table, const std::optional<StaircaseKnot>& knot) {
    Json j = Json::object();
    for (std::size_t r = 0; r < table.modules.size(); ++r) {
        const auto m = table.modules[r].canonical();
        Json c;
        c["tower_bottom"] = m.tower_bottom ? Json(*m.tower_bottom) : Json(nullptr);
        Json torsion = Json::array();
        for (const auto& t : m.torsion) torsion.push_back(Json{{"length", t.length}, {"top", t.top}});
        c["torsion"] = torsion;
        Json coker = Json::object();
        const auto cu = m.coker_u();
        for (const auto& [n, d] : cu.dims()) coker[std::to_string(n)] = d;
        c["coker_u"] = coker;
        if (knot) {
            const auto d = class_d_invariant(*knot, table.p, static_cast<int>(r));
            c["d"] = d ? Json(rational_string(*d)) : Json(nullptr);
        }
        j[std::to_string(r)] = c;
    }
    return j;
}

Json report_json(const ObstructionReport& report) {
    Json j;
    j["slope"] = report.p;
    j["genus"] = report.genus;
    j["verdict"] = to_string(report.overall);
    j["note"] = report.note;
    Json orders = Json::array();
    for (const auto& o : report.orders) {
        Json e;
        e["r"] = o.r;
        e["lens_order"] = std::abs(report.p) / o.r;
        e["verdict"] = to_string(o.verdict);
        e["method"] = o.method;
        if (o.witness) {
            e["witness"] = Json{{"classes", Json::array({o.witness->first, o.witness->second})}, {"line", o.witness->line}};
        } else {
            e["witness"] = nullptr;
        }
        orders.push_back(e);
    }
    j["orders"] = orders;
    j["caveat"] = report.caveat;
    return j;
}

std::string hat_text(const HatTable& table) {
    std::ostringstream os;
    os << "p = " << table.p << "  dim HF-hat by class\n";
    for (std::size_t r = 0; r < table.dims.size(); ++r) os << "  [" << r << "]  " << table.dims[r] << "\n";
    return os.str();
}

std::string plus_text(const PlusTable& table, const std::optional<StaircaseKnot>& knot) {
    std::ostringstream os;
    os << "p = " << table.p << "  HF+ by class (tower bottom normalized to 0)\n";
    for (std::size_t r = 0; r < table.modules.size(); ++r) {
        os << "  [" << r << "]  " << to_string(table.modules[r]);
        if (knot) {
            if (const auto d = class_d_invariant(*knot, table.p, static_cast<int>(r))) os << "   d = " << rational_string(*d);
        }
        os << "\n";
    }
    return os.str();
}

std::string report_text(const ObstructionReport& report) {
    std::ostringstream os;
    os << report.knot << "  p = " << report.p << "  (g = " << report.genus << "): " << to_string(report.overall) << "\n";
    if (!report.note.empty()) os << "  " << report.note << "\n";
    for (const auto& o : report.orders) {
        os << "  r = " << o.r << " (lens order " << std::abs(report.p) / o.r << "): " << to_string(o.verdict) << " by "
           << o.method;
        if (o.witness) os << "; " << o.witness->line;
        os << "\n";
    }
    os << "  note: " << report.caveat << "\n";
    return os.str();
}

}  // namespace hfsurg
