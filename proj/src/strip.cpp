#include "ribbon/strip.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace ribbon {

const char* to_string(StripStatus status) {
    switch (status) {
        case StripStatus::ok: return "ok";
        case StripStatus::repeated_entry: return "repeated entry";
        case StripStatus::negative_entry: return "negative entry";
        case StripStatus::not_partition: return "not a partition after offset subtraction";
    }
    return "?";
}

/*
 * Bead model. With c = conjugate(p) and the offset delta = (m-1,...,1,0) the
 * sums c_i + delta_i are m distinct bead positions, one per column of p. A
 * strip move shifts each chosen bead by k (up when adding, down when
 * removing); the move is legal iff the shifted positions stay nonnegative and
 * pairwise distinct. Re-sorting and subtracting delta gives the conjugate of
 * the resulting partition. The inversion count I of the sorting permutation
 * counts the beads jumped over, which is exactly the rows the ribbons fail to
 * span, so the strip spin comes out as spin2 = (k-1)*w - I.
 */
namespace {

// Shared tail: checks the shifted bead positions, counts sorting inversions,
// and rebuilds the partition.
StripResult finish_strip(std::vector<int>&& v, int k, int weight) {
    const int m = static_cast<int>(v.size());
    for (int value : v)
        if (value < 0) return {StripStatus::negative_entry, {}};
    // m stays small (the first part plus the strip width), so the quadratic
    // scan is fine and doubles as the duplicate check.
    int inversions = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)])
                return {StripStatus::repeated_entry, {}};
            if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(j)]) ++inversions;
        }
    std::sort(v.begin(), v.end(), std::greater<int>());
    for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] -= m - 1 - i;
    auto normalized = Partition::try_normalized(std::move(v));
    if (!normalized) return {StripStatus::not_partition, {}};

    StripResult res;
    res.outcome.shape = normalized->conjugate();
    res.outcome.weight = weight;
    res.outcome.spin2 = (k - 1) * weight - inversions;
    return res;
}

}  // namespace

StripResult apply_strip(const Partition& p, std::span<const int> pos, int k, StripMode mode) {
    if (k < 1) throw std::invalid_argument("ribbon order must be at least 1");
    const int fill = mode == StripMode::add ? k : -k;
    long long total = 0;
    for (int e : pos) {
        if (e != 0 && e != fill) throw std::invalid_argument("positions entries must be 0 or +-k");
        total += std::abs(e);
    }
    if (total == 0) throw std::invalid_argument("positions vector has no nonzero entry");
    const int weight = static_cast<int>(total / k);

    const Partition conj = p.conjugate();
    const int m = std::max(conj.rows(), static_cast<int>(pos.size()));
    std::vector<int> v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int e = i < static_cast<int>(pos.size()) ? pos[static_cast<size_t>(i)] : 0;
        v[static_cast<size_t>(i)] = conj.part(i + 1) + (m - 1 - i) + e;
    }
    return finish_strip(std::move(v), k, weight);
}

Ribbon make_ribbon(std::vector<Cell> cells, int label) {
    if (cells.empty()) throw std::invalid_argument("ribbon needs at least one cell");
    std::sort(cells.begin(), cells.end());
    for (size_t i = 1; i < cells.size(); ++i)
        if (cells[i] == cells[i - 1]) throw std::invalid_argument("ribbon has repeated cells");

    // Row segments must be contiguous, sit on consecutive rows, and each row
    // must end in the column where the row above starts (exactly one shared
    // column, which rules out 2x2 blocks).
    struct Segment {
        int row, first, last;
    };
    std::vector<Segment> segs;
    for (const Cell& c : cells) {
        if (!segs.empty() && segs.back().row == c.row) {
            if (c.col != segs.back().last + 1)
                throw std::invalid_argument("ribbon row is not contiguous");
            segs.back().last = c.col;
        } else {
            segs.push_back({c.row, c.col, c.col});
        }
    }
    for (size_t i = 1; i < segs.size(); ++i) {
        if (segs[i].row != segs[i - 1].row + 1)
            throw std::invalid_argument("ribbon skips a row");
        if (segs[i].last != segs[i - 1].first)
            throw std::invalid_argument("ribbon rows must overlap in exactly one column");
    }

    Ribbon r;
    r.label = label;
    r.tail = {segs.front().row, segs.front().last};
    r.head = {segs.back().row, segs.back().first};
    r.spin2 = static_cast<int>(segs.size()) - 1;
    r.cells = std::move(cells);
    return r;
}

namespace {

// Values of a not present in b; both inputs sorted ascending.
std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<Ribbon> strip_tiling(const Partition& outer, const Partition& inner, int k) {
    if (k < 1) throw std::invalid_argument("ribbon order must be at least 1");
    if (!outer.contains(inner)) throw NotAStrip("inner shape does not fit inside outer");
    const long long cells = outer.cell_count() - inner.cell_count();
    if (cells == 0) return {};
    if (cells % k != 0) throw NotAStrip("cell count is not divisible by the ribbon order");
    const int weight = static_cast<int>(cells / k);

    const int m = std::max(outer.part(1), inner.part(1));
    const Partition co = outer.conjugate();
    const Partition ci = inner.conjugate();
    std::vector<int> beta_outer, beta_inner;
    for (int i = 0; i < m; ++i) {
        beta_outer.push_back(co.part(i + 1) + (m - 1 - i));
        beta_inner.push_back(ci.part(i + 1) + (m - 1 - i));
    }
    std::sort(beta_outer.begin(), beta_outer.end());
    std::sort(beta_inner.begin(), beta_inner.end());
    std::vector<int> sources = sorted_difference(beta_outer, beta_inner);
    std::vector<int> targets = sorted_difference(beta_inner, beta_outer);
    if (static_cast<int>(sources.size()) != weight || sources.size() != targets.size())
        throw NotAStrip("shape is not a single k-ribbon strip");
    for (size_t i = 0; i < sources.size(); ++i)
        if (sources[i] - k != targets[i]) throw NotAStrip("shape is not a single k-ribbon strip");

    // Peel one ribbon per moved bead, smallest bead first (rightmost head
    // column first); later moves can then never collide with a pending one.
    Partition cur = outer;
    std::vector<Ribbon> out;
    for (int source : sources) {
        const Partition c = cur.conjugate();
        int idx = -1;
        for (int i = 0; i < m; ++i)
            if (c.part(i + 1) + (m - 1 - i) == source) {
                idx = i;
                break;
            }
        if (idx < 0) throw NotAStrip("shape is not a single k-ribbon strip");
        std::vector<int> pos(static_cast<size_t>(idx) + 1, 0);
        pos[static_cast<size_t>(idx)] = -k;
        StripResult step = apply_strip(cur, pos, k, StripMode::remove);
        if (!step.ok()) throw NotAStrip("strip does not peel into single ribbons");
        std::vector<Cell> ribbon_cells;
        for (int row = 1; row <= cur.rows(); ++row)
            for (int col = step.outcome.shape.part(row) + 1; col <= cur.part(row); ++col)
                ribbon_cells.push_back({row, col});
        out.push_back(make_ribbon(std::move(ribbon_cells)));
        cur = std::move(step.outcome.shape);
    }
    if (cur != inner) throw NotAStrip("shape is not a single k-ribbon strip");
    std::sort(out.begin(), out.end(),
              [](const Ribbon& a, const Ribbon& b) { return a.head.col < b.head.col; });
    return out;
}

namespace detail {

bool first_combination(std::vector<int>& combo, int n, int w) {
    if (w < 0 || w > n) return false;
    combo.resize(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) combo[static_cast<size_t>(i)] = i;
    return true;
}

bool next_combination(std::vector<int>& combo, int n) {
    const int w = static_cast<int>(combo.size());
    for (int i = w - 1; i >= 0; --i) {
        if (combo[static_cast<size_t>(i)] < n - (w - i)) {
            ++combo[static_cast<size_t>(i)];
            for (int j = i + 1; j < w; ++j)
                combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j) - 1] + 1;
            return true;
        }
    }
    return false;
}

StripResult remove_strip_by_columns(const Partition& conj, std::span<const int> columns, int k) {
    const int m = conj.rows();
    std::vector<int> v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = conj.part(i + 1) + (m - 1 - i);
    for (int c : columns) v[static_cast<size_t>(c)] -= k;
    return finish_strip(std::move(v), k, static_cast<int>(columns.size()));
}

}  // namespace detail

PositionSetStream::PositionSetStream(const Partition& p, int k, int w)
    : ncols_(p.part(1)), k_(k), w_(w) {
    if (k < 1) throw std::invalid_argument("ribbon order must be at least 1");
    if (w_ <= 0 || w_ > ncols_) done_ = true;
}

std::optional<std::vector<int>> PositionSetStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (!detail::first_combination(combo_, ncols_, w_)) {
            done_ = true;
            return std::nullopt;
        }
    } else if (!detail::next_combination(combo_, ncols_)) {
        done_ = true;
        return std::nullopt;
    }
    std::vector<int> pos(static_cast<size_t>(ncols_), 0);
    for (int c : combo_) pos[static_cast<size_t>(c)] = -k_;
    return pos;
}

}  // namespace ribbon
