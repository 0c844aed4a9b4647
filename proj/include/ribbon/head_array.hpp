#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/strip.hpp"

namespace ribbon {

struct InvalidCoding : std::runtime_error {
    explicit InvalidCoding(const std::string& msg) : std::runtime_error(msg) {}
};

// Row order for matrix text I/O. Internally row 1 is always the longest row;
// bottom_up reverses the printed rows (shortest first).
enum class Orientation { top_down, bottom_up };

// Matrix coding of a k-ribbon tableau. One ragged row per row of the outer
// shape; entry -1 on the cells of the inner shape, the label p at the head
// cell of every ribbon labelled p, and 0 elsewhere. The shape can be read
// straight off the row lengths and the -1 region, and the cell counts tie the
// coding to the ribbon order: #nonnegative = k * #positive.
class HeadArray {
public:
    HeadArray(int k, std::vector<std::vector<int>> rows);

    int k() const { return k_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int max_label() const { return max_label_; }

    std::vector<Cell> cells_with_label(int label) const;

    // One line per row, space-separated entries.
    static HeadArray parse_text(std::string_view text, int k,
                                Orientation orientation = Orientation::top_down);
    std::string to_text(Orientation orientation = Orientation::top_down) const;

    // {"k": int, "rows": [[int, ...], ...]}
    static HeadArray from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    bool operator==(const HeadArray&) const = default;

private:
    int k_ = 1;
    std::vector<std::vector<int>> rows_;
    Partition outer_;
    Partition inner_;
    int max_label_ = 0;
};

// Explicit labelled tiling. Construction checks that the ribbons exactly
// cover the skew diagram and that the labels form a gap-free range 1..p;
// whether the labelling is a valid tableau is validate()'s job.
class RibbonTableau {
public:
    RibbonTableau(SkewShape shape, int k, std::vector<Ribbon> ribbons);

    const SkewShape& shape() const { return shape_; }
    int k() const { return k_; }
    const std::vector<Ribbon>& ribbons() const { return ribbons_; }
    int max_label() const { return max_label_; }

private:
    SkewShape shape_;
    int k_ = 1;
    std::vector<Ribbon> ribbons_;  // sorted by (label, head column)
    int max_label_ = 0;
};

// Peels labels in decreasing order, checking at each step that the marked
// heads sit on the frontier of the remaining shape and drive a removable
// strip. Throws InvalidCoding otherwise.
RibbonTableau decode(const HeadArray& array);

HeadArray encode(const RibbonTableau& tableau);

struct ValidationReport {
    bool ok = true;
    int first_bad_label = 0;  // highest label whose strip fails, 0 when ok
    std::string message;
};

// Chain check: for each label in decreasing order the head columns must give
// a removable strip whose tiling matches the tableau's own ribbons.
ValidationReport validate(const RibbonTableau& tableau);

int tableau_spin2(const RibbonTableau& tableau);
std::vector<int> tableau_weight(const RibbonTableau& tableau);

// Rebuilds a tableau from a grid that carries each cell's ribbon label (-1 on
// inner cells). The label classes must form a chain of strips; the ribbons
// are recovered with strip_tiling. Throws InvalidCoding otherwise.
RibbonTableau tableau_from_grid(std::string_view text, int k,
                                Orientation orientation = Orientation::top_down);

// Character grid with one label per cell and borders between ribbons.
std::string render_text(const RibbonTableau& tableau);

}  // namespace ribbon
