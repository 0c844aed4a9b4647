#include "ribbon/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ribbon {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition::from_parts(parts));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> rows;
    auto rec = [&](auto&& self, int row, int bound) -> void {
        out.push_back(Partition::normalized(rows));
        if (row > outer.rows()) return;
        for (int len = std::min(bound, outer.part(row)); len >= 1; --len) {
            rows.push_back(len);
            self(self, row + 1, len);
            rows.pop_back();
        }
    };
    rec(rec, 1, outer.part(1));
    return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(parts);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            parts.push_back(part);
            self(self, remaining - part);
            parts.pop_back();
        }
    };
    if (n == 0) out.push_back({});
    if (n > 0) rec(rec, n);
    return out;
}

namespace {

// Ribbons are staircase paths: from the tail cell, each step goes one column
// left or one row down. Every such path is a valid ribbon and vice versa.
struct PathRibbon {
    std::vector<Cell> cells;  // row-major
};

std::vector<Cell> path_cells(Cell tail, unsigned word, int k) {
    std::vector<Cell> cells{tail};
    Cell cur = tail;
    for (int step = 0; step < k - 1; ++step) {
        if (word >> step & 1u)
            ++cur.row;
        else
            --cur.col;
        cells.push_back(cur);
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

BruteEnumerator::BruteEnumerator(const SkewShape& shape, int k) : shape_(shape), k_(k) {
    if (k < 1) throw std::invalid_argument("ribbon order must be at least 1");
    nrows_ = shape.outer().rows();
    ncols_ = shape.outer().part(1);
    if (ncols_ > 62) throw std::invalid_argument("brute enumeration caps at 62 columns");
    if (shape.cell_count() % k != 0) return;

    std::vector<uint64_t> free_rows(static_cast<size_t>(nrows_) + 2, 0);
    for (const Cell& c : shape.cells())
        free_rows[static_cast<size_t>(c.row)] |= uint64_t{1} << (c.col - 1);

    auto in_free = [&](const Cell& c) {
        return c.row >= 1 && c.row <= nrows_ && c.col >= 1 &&
               (free_rows[static_cast<size_t>(c.row)] >> (c.col - 1) & 1u);
    };
    auto make_brute = [&](std::vector<Cell> cells) {
        BruteRibbon r;
        r.cells = std::move(cells);
        r.row_masks.assign(static_cast<size_t>(nrows_) + 2, 0);
        int first_row = r.cells.front().row, last_row = r.cells.back().row;
        int head_col = ncols_ + 1, tail_col = 0;
        for (const Cell& c : r.cells) {
            r.row_masks[static_cast<size_t>(c.row)] |= uint64_t{1} << (c.col - 1);
            if (c.row == last_row) head_col = std::min(head_col, c.col);
            if (c.row == first_row) tail_col = std::max(tail_col, c.col);
        }
        r.head = {last_row, head_col};
        r.tail = {first_row, tail_col};
        r.spin2 = last_row - first_row;
        return r;
    };

    std::vector<BruteRibbon> placed;
    auto rec = [&](auto&& self) -> void {
        Cell target{0, 0};
        for (int row = 1; row <= nrows_ && target.row == 0; ++row)
            if (free_rows[static_cast<size_t>(row)])
                target = {row, std::countr_zero(free_rows[static_cast<size_t>(row)]) + 1};
        if (target.row == 0) {
            tilings_.push_back(placed);
            return;
        }
        for (int tr = 1; tr <= target.row; ++tr)
            for (int tc = 1; tc <= ncols_; ++tc)
                for (unsigned word = 0; word < (1u << (k_ - 1)); ++word) {
                    std::vector<Cell> cells = path_cells({tr, tc}, word, k_);
                    bool fits = std::find(cells.begin(), cells.end(), target) != cells.end();
                    for (const Cell& c : cells)
                        if (!fits || !in_free(c)) {
                            fits = false;
                            break;
                        }
                    if (!fits) continue;
                    BruteRibbon r = make_brute(std::move(cells));
                    for (int row = 1; row <= nrows_; ++row)
                        free_rows[static_cast<size_t>(row)] &= ~r.row_masks[static_cast<size_t>(row)];
                    placed.push_back(std::move(r));
                    self(self);
                    const BruteRibbon& undo = placed.back();
                    for (int row = 1; row <= nrows_; ++row)
                        free_rows[static_cast<size_t>(row)] |= undo.row_masks[static_cast<size_t>(row)];
                    placed.pop_back();
                }
    };
    rec(rec);

    auto key = [](const Tiling& t) {
        std::vector<std::vector<Cell>> cells;
        for (const BruteRibbon& r : t) cells.push_back(r.cells);
        std::sort(cells.begin(), cells.end());
        return cells;
    };
    std::sort(tilings_.begin(), tilings_.end(),
              [&](const Tiling& a, const Tiling& b) { return key(a) < key(b); });
    for (Tiling& t : tilings_)
        std::sort(t.begin(), t.end(), [](const BruteRibbon& a, const BruteRibbon& b) {
            return a.cells < b.cells;
        });
}

std::optional<int> BruteEnumerator::max_tiling_spin2() const {
    std::optional<int> best;
    for (const Tiling& t : tilings_) {
        int spin2 = 0;
        for (const BruteRibbon& r : t) spin2 += r.spin2;
        if (!best || spin2 > *best) best = spin2;
    }
    return best;
}

// Assigns labels from the top down. The ribbons given label j are removed
// from the running shape, which must stay a partition diagram, and within the
// removed batch no head may sit directly above a cell of another batch
// member.
template <class Fn>
void BruteEnumerator::for_each_labeling(std::span<const int> weight, Fn&& fn) const {
    long long total = 0;
    for (int w : weight) {
        if (w < 1) throw std::invalid_argument("weight entries must be positive");
        total += w;
    }
    if (total * k_ != shape_.cell_count()) return;

    const Partition& inner = shape_.inner();
    std::vector<uint64_t> inner_rows(static_cast<size_t>(nrows_) + 2, 0);
    for (int row = 1; row <= nrows_; ++row)
        inner_rows[static_cast<size_t>(row)] =
            inner.part(row) == 0 ? 0 : (uint64_t{1} << inner.part(row)) - 1;

    for (size_t ti = 0; ti < tilings_.size(); ++ti) {
        const Tiling& tiling = tilings_[ti];
        const int count = static_cast<int>(tiling.size());
        std::vector<uint64_t> current(static_cast<size_t>(nrows_) + 2, 0);
        for (int row = 1; row <= nrows_; ++row) {
            current[static_cast<size_t>(row)] = inner_rows[static_cast<size_t>(row)];
            for (const BruteRibbon& r : tiling)
                current[static_cast<size_t>(row)] |= r.row_masks[static_cast<size_t>(row)];
        }

        std::vector<int> labels(static_cast<size_t>(count), 0);
        std::vector<int> unassigned(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) unassigned[static_cast<size_t>(i)] = i;

        auto is_partition_diagram = [&]() {
            int prev = ncols_ + 1;
            for (int row = 1; row <= nrows_; ++row) {
                const uint64_t mask = current[static_cast<size_t>(row)];
                const int len = std::popcount(mask);
                if (mask != (len == 0 ? 0 : (uint64_t{1} << len) - 1)) return false;
                if (len > prev) return false;
                prev = len;
            }
            return true;
        };

        auto rec = [&](auto&& self, int level) -> void {
            if (level < 0) {
                fn(tiling, labels);
                return;
            }
            const int need = weight[static_cast<size_t>(level)];
            const int avail = static_cast<int>(unassigned.size());
            std::vector<int> pick;
            if (!detail::first_combination(pick, avail, need)) return;
            do {
                std::vector<int> batch;
                for (int slot : pick) batch.push_back(unassigned[static_cast<size_t>(slot)]);
                bool valid = true;
                // internal strip condition: a head with another batch ribbon
                // directly below it is forbidden
                for (size_t a = 0; a < batch.size() && valid; ++a) {
                    const Cell& head = tiling[static_cast<size_t>(batch[a])].head;
                    if (head.row + 1 > nrows_) continue;
                    const uint64_t bit = uint64_t{1} << (head.col - 1);
                    for (size_t b = 0; b < batch.size(); ++b)
                        if (a != b &&
                            (tiling[static_cast<size_t>(batch[b])]
                                 .row_masks[static_cast<size_t>(head.row) + 1] &
                             bit)) {
                            valid = false;
                            break;
                        }
                }
                if (valid) {
                    for (int r : batch)
                        for (int row = 1; row <= nrows_; ++row)
                            current[static_cast<size_t>(row)] &=
                                ~tiling[static_cast<size_t>(r)].row_masks[static_cast<size_t>(row)];
                    if (is_partition_diagram()) {
                        for (int r : batch) labels[static_cast<size_t>(r)] = level + 1;
                        std::vector<int> saved = unassigned;
                        std::vector<int> rest;
                        for (int slot = 0; slot < avail; ++slot)
                            if (std::find(pick.begin(), pick.end(), slot) == pick.end())
                                rest.push_back(unassigned[static_cast<size_t>(slot)]);
                        unassigned = std::move(rest);
                        self(self, level - 1);
                        unassigned = std::move(saved);
                        for (int r : batch) labels[static_cast<size_t>(r)] = 0;
                    }
                    for (int r : batch)
                        for (int row = 1; row <= nrows_; ++row)
                            current[static_cast<size_t>(row)] |=
                                tiling[static_cast<size_t>(r)].row_masks[static_cast<size_t>(row)];
                }
            } while (detail::next_combination(pick, avail));
        };
        rec(rec, static_cast<int>(weight.size()) - 1);
    }
}

std::vector<std::vector<Ribbon>> BruteEnumerator::tilings() const {
    std::vector<std::vector<Ribbon>> out;
    for (const Tiling& t : tilings_) {
        std::vector<Ribbon> ribbons;
        for (const BruteRibbon& r : t)
            ribbons.push_back(Ribbon{0, r.cells, r.head, r.tail, r.spin2});
        out.push_back(std::move(ribbons));
    }
    return out;
}

std::vector<RibbonTableau> BruteEnumerator::tableaux(std::span<const int> weight) const {
    std::vector<RibbonTableau> out;
    for_each_labeling(weight, [&](const Tiling& tiling, const std::vector<int>& labels) {
        std::vector<Ribbon> ribbons;
        for (size_t i = 0; i < tiling.size(); ++i)
            ribbons.push_back(
                Ribbon{labels[i], tiling[i].cells, tiling[i].head, tiling[i].tail,
                       tiling[i].spin2});
        out.emplace_back(shape_, k_, std::move(ribbons));
    });
    return out;
}

SpinPolynomial BruteEnumerator::spin_poly(std::span<const int> weight) const {
    SpinPolynomial poly;
    for_each_labeling(weight, [&](const Tiling& tiling, const std::vector<int>&) {
        int spin2 = 0;
        for (const BruteRibbon& r : tiling) spin2 += r.spin2;
        poly.add_term(spin2, 1);
    });
    return poly;
}

std::vector<std::pair<std::vector<std::vector<int>>, int>> BruteEnumerator::head_arrays(
    std::span<const int> weight) const {
    std::vector<std::pair<std::vector<std::vector<int>>, int>> out;
    const Partition& outer = shape_.outer();
    const Partition& inner = shape_.inner();
    for_each_labeling(weight, [&](const Tiling& tiling, const std::vector<int>& labels) {
        std::vector<std::vector<int>> rows;
        for (int row = 1; row <= outer.rows(); ++row) {
            std::vector<int> cells(static_cast<size_t>(outer.part(row)), 0);
            for (int c = 0; c < inner.part(row); ++c) cells[static_cast<size_t>(c)] = -1;
            rows.push_back(std::move(cells));
        }
        int spin2 = 0;
        for (size_t i = 0; i < tiling.size(); ++i) {
            rows[static_cast<size_t>(tiling[i].head.row) - 1]
                [static_cast<size_t>(tiling[i].head.col) - 1] = labels[i];
            spin2 += tiling[i].spin2;
        }
        out.emplace_back(std::move(rows), spin2);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Ribbon>> brute_tilings(const SkewShape& shape, int k) {
    return BruteEnumerator(shape, k).tilings();
}

std::vector<RibbonTableau> brute_tableaux(const SkewShape& shape, int k,
                                          std::span<const int> weight) {
    return BruteEnumerator(shape, k).tableaux(weight);
}

SpinPolynomial brute_spin_poly(const SkewShape& shape, int k, std::span<const int> weight) {
    return BruteEnumerator(shape, k).spin_poly(weight);
}

}  // namespace ribbon
