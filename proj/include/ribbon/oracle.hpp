#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ribbon/head_array.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/strip.hpp"

// Brute-force reference implementations. These re-derive ribbon geometry,
// strip validity, and spins directly from cell sets, sharing nothing with the
// bead-model algebra, so agreement between the two paths is evidence rather
// than tautology. Deliberately naive: exponential in the number of cells.
namespace ribbon {

std::vector<Partition> partitions_of(int n);
std::vector<Partition> subpartitions(const Partition& outer);
std::vector<std::vector<int>> compositions_of(int n);

// All k-ribbon tilings found by exhaustive placement over the lexicographically
// first uncovered cell; canonically sorted.
std::vector<std::vector<Ribbon>> brute_tilings(const SkewShape& shape, int k);

std::vector<RibbonTableau> brute_tableaux(const SkewShape& shape, int k,
                                          std::span<const int> weight);

SpinPolynomial brute_spin_poly(const SkewShape& shape, int k, std::span<const int> weight);

// Tilings for one shape computed once, then reused across weights.
class BruteEnumerator {
public:
    BruteEnumerator(const SkewShape& shape, int k);

    size_t tiling_count() const { return tilings_.size(); }
    std::optional<int> max_tiling_spin2() const;

    std::vector<std::vector<Ribbon>> tilings() const;
    std::vector<RibbonTableau> tableaux(std::span<const int> weight) const;
    SpinPolynomial spin_poly(std::span<const int> weight) const;
    // Head matrices built from the oracle's own head cells, paired with the
    // tiling spin, canonically sorted. Comparable with HeadArray::rows().
    std::vector<std::pair<std::vector<std::vector<int>>, int>> head_arrays(
        std::span<const int> weight) const;

private:
    struct BruteRibbon {
        std::vector<Cell> cells;
        Cell head;  // bottom row, leftmost cell
        Cell tail;  // top row, rightmost cell
        int spin2 = 0;
        std::vector<uint64_t> row_masks;
    };
    using Tiling = std::vector<BruteRibbon>;

    template <class Fn>
    void for_each_labeling(std::span<const int> weight, Fn&& fn) const;

    SkewShape shape_;
    int k_;
    int nrows_ = 0;
    int ncols_ = 0;
    std::vector<Tiling> tilings_;
};

}  // namespace ribbon
