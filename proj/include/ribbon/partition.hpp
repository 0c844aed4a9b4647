#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

struct NotAPartition : std::runtime_error {
    explicit NotAPartition(const std::string& msg) : std::runtime_error(msg) {}
};

// Integer partition with weakly decreasing positive parts; {} is the empty
// partition. Immutable value type, ordered lexicographically so it can key
// maps shared between worker threads.
class Partition {
public:
    Partition() = default;

    static Partition from_parts(std::vector<int> parts);
    // Strips trailing zeros and validates: (3,3,0,0) -> (3,3).
    static Partition normalized(std::vector<int> v);
    static std::optional<Partition> try_normalized(std::vector<int> v);
    // Comma-separated literal, e.g. "8,7,6,5,1"; "" and "-" give the empty
    // partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based; rows past the end have length 0.
    int part(int row) const {
        return row >= 1 && row <= rows() ? parts_[static_cast<size_t>(row) - 1] : 0;
    }
    long long cell_count() const;

    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    std::string to_string() const;  // "-" for the empty partition

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// 1-based cell coordinates. Row 1 is the longest row; "above" means a smaller
// row index, "left" a smaller column index.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

class SkewShape {
public:
    SkewShape() = default;
    // Throws std::invalid_argument unless outer contains inner.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    long long cell_count() const { return outer_.cell_count() - inner_.cell_count(); }
    std::vector<Cell> cells() const;  // row-major

    auto operator<=>(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

}  // namespace ribbon
