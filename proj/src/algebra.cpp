#include "hfsurg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hfsurg {

namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

struct BitRows {
    std::size_t cols = 0;
    std::size_t words = 0;
    std::vector<std::vector<Word>> rows;

    explicit BitRows(const F2Matrix& m)
        : cols(m.cols()), words((m.cols() + kWordBits - 1) / kWordBits),
          rows(m.rows(), std::vector<Word>(words, 0)) {
        for (const auto& [r, c] : m.entries()) rows[r][c / kWordBits] |= Word{1} << (c % kWordBits);
    }

    bool bit(std::size_t r, std::size_t c) const {
        return (rows[r][c / kWordBits] >> (c % kWordBits)) & 1U;
    }
};

// Row-reduces in place; returns the pivot column of each pivot row in order.
std::vector<std::size_t> row_reduce(BitRows& m) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols && next < m.rows.size(); ++c) {
        std::size_t found = next;
        while (found < m.rows.size() && !m.bit(found, c)) ++found;
        if (found == m.rows.size()) continue;
        std::swap(m.rows[found], m.rows[next]);
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (r != next && m.bit(r, c)) {
                for (std::size_t w = 0; w < m.words; ++w) m.rows[r][w] ^= m.rows[next][w];
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

void F2Matrix::check_bounds(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        std::ostringstream os;
        os << "F2Matrix position (" << r << ", " << c << ") outside " << rows_ << "x" << cols_;
        throw AlgebraError(os.str());
    }
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    check_bounds(r, c);
    if (value) entries_.insert({r, c});
    else entries_.erase({r, c});
}

void F2Matrix::toggle(std::size_t r, std::size_t c) {
    check_bounds(r, c);
    auto [it, inserted] = entries_.insert({r, c});
    if (!inserted) entries_.erase(it);
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (const auto& [r, c] : entries_) t.entries_.insert({c, r});
    return t;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw AlgebraError("F2Matrix product: dimension mismatch");
    // Row index of each column of *this, grouped by column.
    std::vector<std::vector<std::size_t>> by_col(cols_);
    for (const auto& [r, c] : entries_) by_col[c].push_back(r);
    F2Matrix out(rows_, rhs.cols_);
    for (const auto& [k, j] : rhs.entries_) {
        for (std::size_t r : by_col[k]) out.toggle(r, j);
    }
    return out;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.set(k, k);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw AlgebraError("F2Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] & 1) m.set(r, c);
        }
    }
    return m;
}

std::size_t f2_rank(const F2Matrix& m) {
    if (m.is_zero()) return 0;
    BitRows bits(m);
    return row_reduce(bits).size();
}

std::vector<std::vector<std::size_t>> f2_nullspace(const F2Matrix& m) {
    BitRows bits(m);
    const auto pivots = row_reduce(bits);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::size_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::size_t> v{free};
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            if (bits.bit(k, free)) v.push_back(pivots[k]);
        }
        std::sort(v.begin(), v.end());
        basis.push_back(std::move(v));
    }
    return basis;
}

void GradedVectorSpace::add(Grading n, std::size_t count) {
    if (count == 0) return;
    dims_[n] += count;
}

std::size_t GradedVectorSpace::dim(Grading n) const {
    auto it = dims_.find(n);
    return it == dims_.end() ? 0 : it->second;
}

std::size_t GradedVectorSpace::total() const {
    std::size_t t = 0;
    for (const auto& [n, d] : dims_) t += d;
    return t;
}

Grading GradedVectorSpace::min_grading() const {
    if (dims_.empty()) throw AlgebraError("min_grading of the zero vector space");
    return dims_.begin()->first;
}

Grading GradedVectorSpace::max_grading() const {
    if (dims_.empty()) throw AlgebraError("max_grading of the zero vector space");
    return dims_.rbegin()->first;
}

GradedVectorSpace GradedVectorSpace::shifted(Grading by) const {
    GradedVectorSpace out;
    for (const auto& [n, d] : dims_) out.add(n + by, d);
    return out;
}

namespace {

// Submatrix of d with rows in grading n-1 and columns in grading n.
F2Matrix graded_block(const ChainComplexF2& cx, const std::map<Grading, std::vector<std::size_t>>& by_grading,
                      Grading n) {
    auto src = by_grading.find(n);
    auto dst = by_grading.find(n - 1);
    if (src == by_grading.end()) return F2Matrix(dst == by_grading.end() ? 0 : dst->second.size(), 0);
    if (dst == by_grading.end()) return F2Matrix(0, src->second.size());

    std::map<std::size_t, std::size_t> col_of, row_of;
    for (std::size_t k = 0; k < src->second.size(); ++k) col_of[src->second[k]] = k;
    for (std::size_t k = 0; k < dst->second.size(); ++k) row_of[dst->second[k]] = k;
    F2Matrix block(dst->second.size(), src->second.size());
    for (const auto& [r, c] : cx.d.entries()) {
        auto ci = col_of.find(c);
        if (ci == col_of.end()) continue;
        block.set(row_of.at(r), ci->second);
    }
    return block;
}

}  // namespace

GradedVectorSpace chain_homology_f2(const ChainComplexF2& cx) {
    const std::size_t n = cx.gradings.size();
    if (cx.d.rows() != n || cx.d.cols() != n) throw AlgebraError("chain complex: differential is not n x n");
    for (const auto& [r, c] : cx.d.entries()) {
        if (cx.gradings[r] != cx.gradings[c] - 1) {
            std::ostringstream os;
            os << "chain complex: differential from generator " << c << " (grading " << cx.gradings[c]
               << ") to " << r << " (grading " << cx.gradings[r] << ") does not drop grading by 1";
            throw AlgebraError(os.str());
        }
    }
    if (!(cx.d * cx.d).is_zero()) throw AlgebraError("chain complex: d∘d != 0");

    std::map<Grading, std::vector<std::size_t>> by_grading;
    for (std::size_t k = 0; k < n; ++k) by_grading[cx.gradings[k]].push_back(k);

    std::map<Grading, std::size_t> rank_out;
    for (const auto& [g, gens] : by_grading) rank_out[g] = f2_rank(graded_block(cx, by_grading, g));

    GradedVectorSpace h;
    for (const auto& [g, gens] : by_grading) {
        const std::size_t in = by_grading.count(g + 1) ? rank_out[g + 1] : 0;
        h.add(g, gens.size() - rank_out[g] - in);
    }
    return h;
}

std::size_t chain_homology_f2(const F2Matrix& incoming, const F2Matrix& outgoing) {
    if (incoming.rows() != outgoing.cols()) throw AlgebraError("chain_homology_f2: dimension mismatch");
    if (!(outgoing * incoming).is_zero()) throw AlgebraError("chain_homology_f2: composite of differentials is non-zero");
    return outgoing.cols() - f2_rank(outgoing) - f2_rank(incoming);
}

std::size_t total_homology_dim(const F2Matrix& d) {
    if (d.rows() != d.cols()) throw AlgebraError("total_homology_dim: differential is not square");
    if (!(d * d).is_zero()) throw AlgebraError("total_homology_dim: d∘d != 0");
    return d.cols() - 2 * f2_rank(d);
}

GradedModule GradedModule::canonical() const {
    GradedModule out = *this;
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

GradedModule GradedModule::shifted(Grading by) const {
    GradedModule out = *this;
    if (out.tower_bottom) *out.tower_bottom += by;
    for (auto& t : out.torsion) t.top += by;
    return out;
}

GradedModule GradedModule::normalized() const {
    GradedModule out = tower_bottom ? shifted(-*tower_bottom) : *this;
    return out.canonical();
}

std::size_t GradedModule::dim(Grading n) const {
    std::size_t d = 0;
    if (tower_bottom && n >= *tower_bottom && (n - *tower_bottom) % 2 == 0) ++d;
    for (const auto& t : torsion) {
        if (n <= t.top && n >= t.bottom() && (t.top - n) % 2 == 0) ++d;
    }
    return d;
}

GradedVectorSpace GradedModule::coker_u() const {
    GradedVectorSpace v;
    for (const auto& t : torsion) v.add(t.top);
    return v;
}

GradedVectorSpace GradedModule::ker_u() const {
    GradedVectorSpace v;
    if (tower_bottom) v.add(*tower_bottom);
    for (const auto& t : torsion) v.add(t.bottom());
    return v;
}

GradedVectorSpace GradedModule::reduced() const {
    GradedVectorSpace v;
    for (const auto& t : torsion) {
        for (Grading n = t.bottom(); n <= t.top; n += 2) v.add(n);
    }
    return v;
}

bool GradedModule::operator==(const GradedModule& other) const {
    const auto a = canonical();
    const auto b = other.canonical();
    return a.tower_bottom == b.tower_bottom && a.torsion == b.torsion;
}

std::string to_string(const GradedModule& m) {
    std::ostringstream os;
    const auto c = m.canonical();
    bool first = true;
    if (c.tower_bottom) {
        os << "T+[" << *c.tower_bottom << "]";
        first = false;
    }
    for (const auto& t : c.torsion) {
        if (!first) os << " + ";
        os << "F[U]/U^" << t.length << "[" << t.top << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool relatively_isomorphic(const GradedModule& a, const GradedModule& b) {
    if (a.tower_bottom.has_value() != b.tower_bottom.has_value()) return false;
    if (a.torsion.size() != b.torsion.size()) return false;
    if (a.tower_bottom) return a.normalized() == b.normalized();
    if (a.torsion.empty()) return true;
    // Without a tower, align the highest top.
    auto top_of = [](const GradedModule& m) {
        Grading best = m.torsion.front().top;
        for (const auto& t : m.torsion) best = std::max(best, t.top);
        return best;
    };
    return a.shifted(-top_of(a)) == b.shifted(-top_of(b));
}

void MonomialTowerMap::validate() const {
    std::vector<int> degree(nodes.size(), 0);
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : entries) {
        if (e.from >= nodes.size() || e.to >= nodes.size()) throw AlgebraError("tower map: entry refers to a missing node");
        if (nodes[e.from].kind != NodeKind::A || nodes[e.to].kind != NodeKind::B) {
            throw AlgebraError("tower map: entries must run from A nodes to B nodes");
        }
        if (e.exponent < 0) throw AlgebraError("tower map: negative U exponent");
        if (!seen.insert({e.from, e.to}).second) throw AlgebraError("tower map: repeated entry (cyclic node graph)");
        if (nodes[e.to].offset != nodes[e.from].offset - 1 + 2 * e.exponent) {
            std::ostringstream os;
            os << "tower map: entry " << e.from << " -> " << e.to << " with U^" << e.exponent
               << " is not homogeneous of degree -1 (offsets " << nodes[e.from].offset << ", "
               << nodes[e.to].offset << ")";
            throw AlgebraError(os.str());
        }
        if (++degree[e.from] > 2 || ++degree[e.to] > 2) throw AlgebraError("tower map: node of degree > 2");
        const auto ra = find(e.from);
        const auto rb = find(e.to);
        if (ra == rb) throw AlgebraError("tower map: cyclic node graph");
        parent[ra] = rb;
    }
}

GradedModule tower_cone_homology(const MonomialTowerMap& map) {
    map.validate();
    // Between two fixed nodes a homogeneous entry is 0 or a single power of U, so the map is a
    // 0/1 pattern. Repeatedly take an entry of least exponent as pivot: unipotent column
    // operations move the pivot's other edge onto the A nodes sharing its B node, and row
    // operations then clear the pivot column. Each step splits off one (A, B) pair.
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> live;
    for (const auto& e : map.entries) live[{e.from, e.to}] = e.exponent;

    std::vector<bool> paired(map.nodes.size(), false);
    GradedModule out;
    while (!live.empty()) {
        auto pivot = live.begin();
        for (auto it = live.begin(); it != live.end(); ++it) {
            if (it->second < pivot->second) pivot = it;
        }
        const auto [a, b] = pivot->first;
        const std::int64_t e = pivot->second;

        std::vector<std::pair<std::size_t, std::int64_t>> a_out, b_in;
        for (const auto& [key, ex] : live) {
            if (key.first == a && key.second != b) a_out.emplace_back(key.second, ex);
            if (key.second == b && key.first != a) b_in.emplace_back(key.first, ex);
        }
        for (const auto& [other_a, f] : b_in) {
            live.erase({other_a, b});
            for (const auto& [other_b, g] : a_out) {
                const std::int64_t ex = f - e + g;
                auto [it, inserted] = live.emplace(std::make_pair(other_a, other_b), ex);
                if (!inserted) {
                    if (it->second != ex) throw AlgebraError("tower_cone_homology: inconsistent exponents");
                    live.erase(it);
                }
            }
        }
        for (const auto& [other_b, g] : a_out) live.erase({a, other_b});
        live.erase({a, b});

        paired[a] = paired[b] = true;
        if (e > 0) out.torsion.push_back({e, map.nodes[a].offset + 2 * (e - 1)});
    }

    for (std::size_t k = 0; k < map.nodes.size(); ++k) {
        if (paired[k]) continue;
        // Unmatched A: its whole tower is in the kernel. Unmatched B: nothing hits it.
        if (out.tower_bottom) throw AlgebraError("tower_cone_homology: more than one tower survives");
        out.tower_bottom = map.nodes[k].offset;
    }
    return out.canonical();
}

}  // namespace hfsurg
