#include "hfsurg/knotio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hfsurg {

ParseError::ParseError(const std::string& what, std::size_t position)
    : InputError(what + " at position " + std::to_string(position)), position_(position) {}

SymmetricLaurent::SymmetricLaurent(std::map<int, std::int64_t> coefficients) {
    std::erase_if(coefficients, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [k, a] : coefficients) {
        auto it = coefficients.find(-k);
        if (it == coefficients.end() || it->second != a) {
            throw InputError("Alexander polynomial is not symmetric: coefficient of t^" + std::to_string(k) +
                             " differs from that of t^" + std::to_string(-k));
        }
    }
    std::int64_t at_one = 0;
    for (const auto& [k, a] : coefficients) at_one += a;
    if (at_one != 1) throw InputError("Alexander polynomial must satisfy Δ(1) = 1, got " + std::to_string(at_one));
    coeffs_ = std::move(coefficients);
}

std::int64_t SymmetricLaurent::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

int SymmetricLaurent::genus() const { return coeffs_.rbegin()->first; }

std::string SymmetricLaurent::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto [k, a] = *it;
        const std::int64_t mag = a < 0 ? -a : a;
        if (first) os << (a < 0 ? "-" : "");
        else os << (a < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "t";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

namespace {

class AlexanderParser {
public:
    explicit AlexanderParser(const std::string& text) : text_(text) {}

    std::map<int, std::int64_t> parse() {
        std::map<int, std::int64_t> out;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            auto [exponent, coeff] = term();
            out[exponent] += sign * coeff;
            skip_ws();
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::int64_t number() {
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > (std::int64_t{1} << 40)) throw ParseError("number too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return v;
    }

    // c | c*t[^k] | t[^k]
    std::pair<int, std::int64_t> term() {
        if (at_end()) throw ParseError("expected a term", pos_);
        std::int64_t coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            skip_ws();
            if (at_end() || peek() != '*') return {0, coeff};
            ++pos_;
            skip_ws();
        }
        if (at_end() || peek() != 't') throw ParseError("expected 't'", pos_);
        ++pos_;
        skip_ws();
        if (at_end() || peek() != '^') return {1, coeff};
        ++pos_;
        skip_ws();
        int sign = 1;
        if (!at_end() && peek() == '-') {
            sign = -1;
            ++pos_;
            skip_ws();
        }
        const std::size_t at = pos_;
        const std::int64_t e = number();
        if (e > 100000) throw ParseError("exponent too large", at);
        return {static_cast<int>(sign * e), coeff};
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

using Poly = std::vector<std::int64_t>;  // index = degree

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic divisor.
Poly poly_div_exact(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    Poly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const std::int64_t c = num[k];
        q[k - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    if (std::any_of(num.begin(), num.end(), [](std::int64_t v) { return v != 0; })) {
        throw std::logic_error("torus_knot_alexander: inexact division");
    }
    return q;
}

Poly t_power_minus_one(int n) {
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

}  // namespace

SymmetricLaurent parse_alexander(const std::string& text) {
    AlexanderParser parser(text);
    return SymmetricLaurent(parser.parse());
}

SymmetricLaurent torus_knot_alexander(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a < 2) throw InputError("torus knot parameters must be >= 2");
    if (std::gcd(a, b) != 1) throw InputError("torus knot parameters must be coprime");
    if (static_cast<long long>(a) * b > 20000) throw InputError("torus knot parameters too large");
    const Poly num = poly_mul(t_power_minus_one(a * b), t_power_minus_one(1));
    const Poly den = poly_mul(t_power_minus_one(a), t_power_minus_one(b));
    const Poly q = poly_div_exact(num, den);
    const int shift = static_cast<int>(q.size() - 1) / 2;
    std::map<int, std::int64_t> coeffs;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] != 0) coeffs[static_cast<int>(k) - shift] = q[k];
    }
    return SymmetricLaurent(std::move(coeffs));
}

BifilteredComplex::BifilteredComplex(std::vector<Generator> generators,
                                     std::vector<std::vector<std::size_t>> differential,
                                     std::vector<std::size_t> flip)
    : gens_(std::move(generators)), diff_(std::move(differential)), flip_(std::move(flip)) {
    for (auto& targets : diff_) std::sort(targets.begin(), targets.end());
    validate();
}

std::size_t BifilteredComplex::index_of(const std::string& name) const {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (gens_[k].name == name) return k;
    }
    throw InputError("unknown generator '" + name + "'");
}

void BifilteredComplex::validate() const {
    const std::size_t n = gens_.size();
    if (n == 0) throw InputError("complex has no generators");
    if (diff_.size() != n || flip_.size() != n) throw InputError("complex: differential/flip size mismatch");

    static const std::regex name_re("[A-Za-z0-9_]+");
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (!std::regex_match(g.name, name_re)) throw InputError("invalid generator name '" + g.name + "'");
        if (!names.insert(g.name).second) throw InputError("duplicate generator name '" + g.name + "'");
    }

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t k = 0; k < diff_[x].size(); ++k) {
            const std::size_t y = diff_[x][k];
            if (y >= n) throw InputError("differential target out of range");
            if (k > 0 && diff_[x][k - 1] == y) throw InputError("repeated differential target " + gens_[y].name);
            const auto& gx = gens_[x];
            const auto& gy = gens_[y];
            if (gy.i > gx.i || gy.j > gx.j) {
                throw InputError("filtration violation: d(" + gx.name + ") contains " + gy.name);
            }
            if (gy.gr != gx.gr - 1) {
                throw InputError("grading violation: d(" + gx.name + ") contains " + gy.name +
                                 " but the grading drop is not 1");
            }
        }
    }

    // d∘d = 0 over F_2
    for (std::size_t x = 0; x < n; ++x) {
        std::map<std::size_t, int> count;
        for (std::size_t y : diff_[x])
            for (std::size_t z : diff_[y]) count[z] ^= 1;
        for (const auto& [z, c] : count) {
            if (c) throw InputError("d∘d != 0: d(d(" + gens_[x].name + ")) contains " + gens_[z].name);
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t fx = flip_[x];
        if (fx >= n || flip_[fx] != x) throw InputError("flip is not an involution at " + gens_[x].name);
        const auto& a = gens_[x];
        const auto& b = gens_[fx];
        if (b.i != a.j || b.j != a.i) throw InputError("flip does not exchange i and j at " + a.name);
        if (b.gr != a.gr) throw InputError("flip does not preserve the grading at " + a.name);
        std::vector<std::size_t> image;
        for (std::size_t y : diff_[x]) image.push_back(flip_[y]);
        std::sort(image.begin(), image.end());
        if (image != diff_[fx]) throw InputError("flip does not commute with d at " + a.name);
    }
}

BifilteredComplex parse_cfk(const std::string& document) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("CFK document is not valid JSON: ") + e.what());
    }
    auto schema = [](const std::string& msg) { return InputError("CFK schema violation: " + msg); };
    if (!doc.is_object()) throw schema("top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "generators" && key != "differential" && key != "flip") throw schema("unknown key '" + key + "'");
    }
    if (!doc.contains("generators") || !doc["generators"].is_array()) throw schema("'generators' must be an array");
    if (!doc.contains("differential") || !doc["differential"].is_object()) {
        throw schema("'differential' must be an object");
    }

    std::vector<Generator> gens;
    std::map<std::string, std::size_t> index;
    for (const auto& g : doc["generators"]) {
        if (!g.is_object()) throw schema("each generator must be an object");
        for (const char* field : {"name", "i", "j", "gr"}) {
            if (!g.contains(field)) throw schema(std::string("generator missing '") + field + "'");
        }
        if (!g["name"].is_string() || !g["i"].is_number_integer() || !g["j"].is_number_integer() ||
            !g["gr"].is_number_integer()) {
            throw schema("generator fields have the wrong types");
        }
        Generator gen{g["name"].get<std::string>(), g["i"].get<int>(), g["j"].get<int>(), g["gr"].get<int>()};
        if (index.count(gen.name)) throw schema("duplicate generator '" + gen.name + "'");
        index[gen.name] = gens.size();
        gens.push_back(std::move(gen));
    }
    auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) throw schema("unknown generator '" + name + "'");
        return it->second;
    };

    std::vector<std::vector<std::size_t>> diff(gens.size());
    for (const auto& [name, targets] : doc["differential"].items()) {
        if (!targets.is_array()) throw schema("differential of '" + name + "' must be an array");
        auto& out = diff[lookup(name)];
        for (const auto& t : targets) {
            if (!t.is_string()) throw schema("differential targets must be names");
            out.push_back(lookup(t.get<std::string>()));
        }
    }

    std::vector<std::size_t> flip(gens.size());
    std::iota(flip.begin(), flip.end(), std::size_t{0});
    if (doc.contains("flip")) {
        if (!doc["flip"].is_object()) throw schema("'flip' must be an object");
        for (const auto& [name, target] : doc["flip"].items()) {
            if (!target.is_string()) throw schema("flip targets must be names");
            flip[lookup(name)] = lookup(target.get<std::string>());
        }
    } else {
        for (const auto& g : gens) {
            if (g.i != g.j) throw schema("'flip' is required unless every generator has i = j");
        }
    }
    return BifilteredComplex(std::move(gens), std::move(diff), std::move(flip));
}

BifilteredComplex load_cfk_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open CFK file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cfk(buf.str());
}

std::string serialize_cfk(const BifilteredComplex& cx) {
    using nlohmann::json;
    json doc;
    doc["generators"] = json::array();
    doc["differential"] = json::object();
    doc["flip"] = json::object();
    for (std::size_t k = 0; k < cx.size(); ++k) {
        const auto& g = cx.generator(k);
        doc["generators"].push_back({{"name", g.name}, {"i", g.i}, {"j", g.j}, {"gr", g.gr}});
        if (!cx.boundary(k).empty()) {
            json targets = json::array();
            for (std::size_t y : cx.boundary(k)) targets.push_back(cx.generator(y).name);
            doc["differential"][g.name] = targets;
        }
        doc["flip"][g.name] = cx.generator(cx.flip(k)).name;
    }
    return doc.dump(2);
}

KnotSpec torus_spec(int a, int b) {
    if (a > b) std::swap(a, b);
    torus_knot_alexander(a, b);  // validates
    return KnotSpec{TorusKnot{a, b}, "T(" + std::to_string(a) + "," + std::to_string(b) + ")"};
}

KnotSpec parse_knot_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("knot spec must be torus:a,b | alex:\"...\" | cfk:path");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "torus") {
        static const std::regex re(R"(\s*(\d{1,6})\s*,\s*(\d{1,6})\s*)");
        std::smatch m;
        if (!std::regex_match(rest, m, re)) throw InputError("torus spec must look like torus:a,b");
        return torus_spec(std::stoi(m[1]), std::stoi(m[2]));
    }
    if (kind == "alex") {
        auto poly = parse_alexander(rest);
        return KnotSpec{AlexanderKnot{poly}, "alex(" + poly.to_string() + ")"};
    }
    if (kind == "cfk") {
        return KnotSpec{ComplexKnot{load_cfk_file(rest), rest}, "cfk(" + rest + ")"};
    }
    throw InputError("unknown knot spec kind '" + kind + "'");
}

}  // namespace hfsurg
