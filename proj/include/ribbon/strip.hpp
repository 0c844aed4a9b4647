#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/partition.hpp"

namespace ribbon {

enum class StripMode { add, remove };

enum class StripStatus { ok, repeated_entry, negative_entry, not_partition };

const char* to_string(StripStatus status);

struct StripOutcome {
    Partition shape;  // the partition after the strip is added or removed
    int spin2 = 0;    // twice the strip spin
    int weight = 0;   // number of ribbons in the strip
};

struct StripResult {
    StripStatus status = StripStatus::ok;
    StripOutcome outcome;
    bool ok() const { return status == StripStatus::ok; }
};

// Adds or removes a k-ribbon strip. pos[i] drives column i+1: +k marks a
// ribbon tail (add mode), -k a ribbon head (remove mode). Failure statuses
// mean no strip exists with the requested tail/head columns.
StripResult apply_strip(const Partition& p, std::span<const int> pos, int k, StripMode mode);

// A k-ribbon: connected staircase of k cells with no 2x2 block. The head is
// the bottom-left end cell, the tail the top-right end cell, and
// spin2 = rows spanned - 1.
struct Ribbon {
    int label = 0;            // 0 while unlabeled
    std::vector<Cell> cells;  // sorted row-major
    Cell head;
    Cell tail;
    int spin2 = 0;
};

// Validates the cell set and fills head/tail/spin2. Throws
// std::invalid_argument if the cells are not a k-ribbon for any k.
Ribbon make_ribbon(std::vector<Cell> cells, int label = 0);

struct NotAStrip : std::runtime_error {
    explicit NotAStrip(const std::string& msg) : std::runtime_error(msg) {}
};

// The unique head-driven tiling of the strip outer/inner, ordered by head
// column. Throws NotAStrip when outer/inner is not a k-ribbon strip.
std::vector<Ribbon> strip_tiling(const Partition& outer, const Partition& inner, int k);

// Streams every remove-mode positions vector with w heads over the columns
// of p. Column subsets come out in lexicographic order; vectors have length
// equal to the first part of p.
class PositionSetStream {
public:
    PositionSetStream(const Partition& p, int k, int w);
    std::optional<std::vector<int>> next();

private:
    int ncols_;
    int k_;
    int w_;
    std::vector<int> combo_;
    bool done_ = false;
    bool started_ = false;
};

namespace detail {
// w-subsets of {0..n-1} in lexicographic order.
bool first_combination(std::vector<int>& combo, int n, int w);
bool next_combination(std::vector<int>& combo, int n);

// Remove-mode fast path for enumeration loops: the conjugate is precomputed
// by the caller and the heads are given as 0-based columns within its range.
StripResult remove_strip_by_columns(const Partition& conj, std::span<const int> columns, int k);
}  // namespace detail

}  // namespace ribbon
