#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ribbon/head_array.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

struct ShapeWeightMismatch : std::runtime_error {
    explicit ShapeWeightMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoTiling : std::runtime_error {
    explicit NoTiling(const std::string& msg) : std::runtime_error(msg) {}
};

struct GenOptions {
    bool memoized = true;
    int threads = 1;
};

// Per-label traversal statistics: states retained after each label is
// processed (labels in decreasing order) and the number of distinct remaining
// partitions among them.
struct LevelStats {
    std::vector<BigInt> nodes;
    std::vector<long long> distinct_shapes;
};

// Returns false to stop the stream early.
using TableauSink = std::function<bool(const HeadArray&, int spin2)>;

// Streams every k-ribbon tableau of the shape and weight exactly once, as its
// head array plus spin. Deterministic order: labels descending, column
// subsets lexicographic; with several worker threads the emitted order is
// unchanged (workers buffer and merge).
void enumerate_tableaux(const SkewShape& shape, int k, std::span<const int> weight,
                        const TableauSink& sink, const GenOptions& options = {});

// Sum of q^spin over all tableaux, exponents doubled. Memoized mode runs a
// level-synchronous recurrence keyed on the remaining partition; plain mode
// walks every tableau. Both agree exactly.
SpinPolynomial spin_polynomial(const SkewShape& shape, int k, std::span<const int> weight,
                               const GenOptions& options = {});

// Mirror of the spin polynomial pivoted at the maximum tiling spin.
SpinPolynomial cospin_polynomial(const SkewShape& shape, int k, std::span<const int> weight,
                                 const GenOptions& options = {});

// Twice the maximum spin over all k-ribbon tilings of the shape, via a
// max-plus recurrence over single-ribbon removals. Throws NoTiling when the
// shape has no tiling.
int max_spin2(const SkewShape& shape, int k, const GenOptions& options = {});

LevelStats level_stats(const SkewShape& shape, int k, std::span<const int> weight,
                       const GenOptions& options = {});

}  // namespace ribbon
