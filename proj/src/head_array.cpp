#include "ribbon/head_array.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace ribbon {

HeadArray::HeadArray(int k, std::vector<std::vector<int>> rows) : k_(k), rows_(std::move(rows)) {
    if (k_ < 1) throw InvalidCoding("ribbon order must be at least 1");
    std::vector<int> outer_parts, inner_parts;
    long long nonnegative = 0, positive = 0;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw InvalidCoding("row " + std::to_string(r + 1) + " is empty");
        int inner_len = 0;
        bool in_prefix = true;
        for (size_t c = 0; c < row.size(); ++c) {
            const int e = row[c];
            if (e < -1) throw InvalidCoding("entry below -1");
            if (e == -1) {
                if (!in_prefix)
                    throw InvalidCoding("inner cells must form a prefix of row " +
                                        std::to_string(r + 1));
                ++inner_len;
            } else {
                in_prefix = false;
                ++nonnegative;
                if (e > 0) {
                    ++positive;
                    max_label_ = std::max(max_label_, e);
                }
            }
        }
        outer_parts.push_back(static_cast<int>(row.size()));
        if (inner_len > 0) inner_parts.push_back(inner_len);
        if (inner_len > 0 && static_cast<size_t>(r) != inner_parts.size() - 1)
            throw InvalidCoding("inner cells must sit in the top rows");
    }
    auto outer = Partition::try_normalized(std::move(outer_parts));
    if (!outer) throw InvalidCoding("row lengths do not form a partition");
    auto inner = Partition::try_normalized(std::move(inner_parts));
    if (!inner || !outer->contains(*inner))
        throw InvalidCoding("inner cells do not form a contained partition");
    outer_ = *std::move(outer);
    inner_ = *std::move(inner);

    if (nonnegative != static_cast<long long>(k_) * positive)
        throw InvalidCoding("cell counts do not match the ribbon order: " +
                            std::to_string(nonnegative) + " cells for " +
                            std::to_string(positive) + " heads of " + std::to_string(k_) +
                            "-ribbons");
    std::vector<long long> counts(static_cast<size_t>(max_label_) + 1, 0);
    for (const auto& row : rows_)
        for (int e : row)
            if (e > 0) ++counts[static_cast<size_t>(e)];
    for (int label = 1; label <= max_label_; ++label)
        if (counts[static_cast<size_t>(label)] == 0)
            throw InvalidCoding("label " + std::to_string(label) + " is never used");
}

std::vector<Cell> HeadArray::cells_with_label(int label) const {
    std::vector<Cell> out;
    for (size_t r = 0; r < rows_.size(); ++r)
        for (size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == label)
                out.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
    return out;
}

namespace {

std::vector<std::vector<int>> parse_int_matrix(std::string_view text, Orientation orientation) {
    std::vector<std::vector<int>> rows;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        std::vector<int> row;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            int value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
            if (ec != std::errc{} || ptr != line.data() + j)
                throw InvalidCoding("bad matrix entry: '" + std::string(line.substr(i, j - i)) +
                                    "'");
            row.push_back(value);
            i = j;
        }
        if (!row.empty()) rows.push_back(std::move(row));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (orientation == Orientation::bottom_up) std::reverse(rows.begin(), rows.end());
    return rows;
}

}  // namespace

HeadArray HeadArray::parse_text(std::string_view text, int k, Orientation orientation) {
    return HeadArray(k, parse_int_matrix(text, orientation));
}

std::string HeadArray::to_text(Orientation orientation) const {
    std::string out;
    auto append_row = [&](const std::vector<int>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(row[c]);
        }
        out += '\n';
    };
    if (orientation == Orientation::top_down) {
        for (const auto& row : rows_) append_row(row);
    } else {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) append_row(*it);
    }
    return out;
}

HeadArray HeadArray::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("rows"))
        throw InvalidCoding("expected {\"k\": int, \"rows\": [[int, ...], ...]}");
    return HeadArray(j.at("k").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

nlohmann::json HeadArray::to_json() const {
    return nlohmann::json{{"k", k_}, {"rows", rows_}};
}

RibbonTableau::RibbonTableau(SkewShape shape, int k, std::vector<Ribbon> ribbons)
    : shape_(std::move(shape)), k_(k), ribbons_(std::move(ribbons)) {
    if (k_ < 1) throw std::invalid_argument("ribbon order must be at least 1");
    std::vector<Cell> covered;
    for (const Ribbon& r : ribbons_) {
        if (r.label < 1) throw std::invalid_argument("ribbon labels must be positive");
        if (static_cast<int>(r.cells.size()) != k_)
            throw std::invalid_argument("ribbon size differs from the ribbon order");
        covered.insert(covered.end(), r.cells.begin(), r.cells.end());
        max_label_ = std::max(max_label_, r.label);
    }
    std::sort(covered.begin(), covered.end());
    std::vector<Cell> expected = shape_.cells();
    if (covered != expected)
        throw std::invalid_argument("ribbons do not tile the skew diagram exactly");
    std::vector<int> seen(static_cast<size_t>(max_label_) + 1, 0);
    for (const Ribbon& r : ribbons_) ++seen[static_cast<size_t>(r.label)];
    for (int label = 1; label <= max_label_; ++label)
        if (seen[static_cast<size_t>(label)] == 0)
            throw std::invalid_argument("label " + std::to_string(label) + " is never used");
    std::sort(ribbons_.begin(), ribbons_.end(), [](const Ribbon& a, const Ribbon& b) {
        return a.label != b.label ? a.label < b.label : a.head.col < b.head.col;
    });
}

namespace {

// Shared by decode and validate: peel the strip for one label. The marked
// head cells must sit on the frontier of the remaining partition, one per
// column.
Partition peel_label(const Partition& current, const Partition& inner,
                     const std::vector<Cell>& heads, int k, int label,
                     std::vector<Ribbon>* ribbons_out) {
    const Partition conj = current.conjugate();
    int max_col = 0;
    for (const Cell& head : heads) {
        if (conj.part(head.col) != head.row)
            throw InvalidCoding("label " + std::to_string(label) + ": head at row " +
                                std::to_string(head.row) + ", column " + std::to_string(head.col) +
                                " is not on the frontier of " + current.to_string());
        max_col = std::max(max_col, head.col);
    }
    std::vector<int> pos(static_cast<size_t>(max_col), 0);
    for (const Cell& head : heads) {
        if (pos[static_cast<size_t>(head.col) - 1] != 0)
            throw InvalidCoding("label " + std::to_string(label) + ": two heads share column " +
                                std::to_string(head.col));
        pos[static_cast<size_t>(head.col) - 1] = -k;
    }
    StripResult res = apply_strip(current, pos, k, StripMode::remove);
    if (!res.ok())
        throw InvalidCoding("label " + std::to_string(label) +
                            ": heads do not drive a removable strip (" + to_string(res.status) +
                            ")");
    if (!res.outcome.shape.contains(inner))
        throw InvalidCoding("label " + std::to_string(label) +
                            ": strip removal cuts into the inner shape");
    if (ribbons_out) {
        for (Ribbon& r : strip_tiling(current, res.outcome.shape, k)) {
            r.label = label;
            ribbons_out->push_back(std::move(r));
        }
    }
    return res.outcome.shape;
}

}  // namespace

RibbonTableau decode(const HeadArray& array) {
    Partition current = array.outer();
    std::vector<Ribbon> ribbons;
    for (int label = array.max_label(); label >= 1; --label)
        current = peel_label(current, array.inner(), array.cells_with_label(label), array.k(),
                             label, &ribbons);
    if (current != array.inner())
        throw InvalidCoding("leftover shape " + current.to_string() +
                            " differs from the inner shape " + array.inner().to_string());
    return RibbonTableau(SkewShape(array.outer(), array.inner()), array.k(), std::move(ribbons));
}

HeadArray encode(const RibbonTableau& tableau) {
    const Partition& outer = tableau.shape().outer();
    const Partition& inner = tableau.shape().inner();
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= outer.rows(); ++r) {
        std::vector<int> row(static_cast<size_t>(outer.part(r)), 0);
        for (int c = 0; c < inner.part(r); ++c) row[static_cast<size_t>(c)] = -1;
        rows.push_back(std::move(row));
    }
    for (const Ribbon& r : tableau.ribbons())
        rows[static_cast<size_t>(r.head.row) - 1][static_cast<size_t>(r.head.col) - 1] = r.label;
    return HeadArray(tableau.k(), std::move(rows));
}

ValidationReport validate(const RibbonTableau& tableau) {
    std::map<int, std::vector<const Ribbon*>> by_label;
    for (const Ribbon& r : tableau.ribbons()) by_label[r.label].push_back(&r);

    Partition current = tableau.shape().outer();
    for (int label = tableau.max_label(); label >= 1; --label) {
        std::vector<Cell> heads;
        for (const Ribbon* r : by_label[label]) heads.push_back(r->head);
        std::vector<Ribbon> strip;
        try {
            current = peel_label(current, tableau.shape().inner(), heads, tableau.k(), label,
                                 &strip);
        } catch (const InvalidCoding& e) {
            return {false, label, e.what()};
        }
        for (size_t i = 0; i < strip.size(); ++i)
            if (strip[i].cells != by_label[label][i]->cells)
                return {false, label,
                        "label " + std::to_string(label) +
                            ": ribbons differ from the strip tiling"};
    }
    if (current != tableau.shape().inner())
        return {false, 1, "leftover shape differs from the inner shape"};
    return {};
}

int tableau_spin2(const RibbonTableau& tableau) {
    int total = 0;
    for (const Ribbon& r : tableau.ribbons()) total += r.spin2;
    return total;
}

std::vector<int> tableau_weight(const RibbonTableau& tableau) {
    std::vector<int> counts(static_cast<size_t>(tableau.max_label()), 0);
    for (const Ribbon& r : tableau.ribbons()) ++counts[static_cast<size_t>(r.label) - 1];
    return counts;
}

RibbonTableau tableau_from_grid(std::string_view text, int k, Orientation orientation) {
    const std::vector<std::vector<int>> grid = parse_int_matrix(text, orientation);
    std::vector<int> outer_parts, inner_parts;
    int max_label = 0;
    for (size_t r = 0; r < grid.size(); ++r) {
        int inner_len = 0;
        bool in_prefix = true;
        for (int entry : grid[r]) {
            if (entry == -1) {
                if (!in_prefix) throw InvalidCoding("inner cells must form a row prefix");
                ++inner_len;
            } else if (entry >= 1) {
                in_prefix = false;
                max_label = std::max(max_label, entry);
            } else {
                throw InvalidCoding("grid cells must carry a positive label or -1");
            }
        }
        outer_parts.push_back(static_cast<int>(grid[r].size()));
        if (inner_len > 0) inner_parts.push_back(inner_len);
        if (inner_len > 0 && r != inner_parts.size() - 1)
            throw InvalidCoding("inner cells must sit in the top rows");
    }
    auto outer = Partition::try_normalized(std::move(outer_parts));
    auto inner = Partition::try_normalized(std::move(inner_parts));
    if (!outer || !inner || !outer->contains(*inner))
        throw InvalidCoding("grid rows do not form a skew shape");

    // Partition chain by label threshold: cells labelled <= j together with
    // the inner shape must be left-justified with weakly decreasing rows.
    std::vector<Partition> chain;  // chain[j] for thresholds 0..max_label
    for (int threshold = 0; threshold <= max_label; ++threshold) {
        std::vector<int> rows;
        for (size_t r = 0; r < grid.size(); ++r) {
            int len = inner->part(static_cast<int>(r) + 1);
            int max_col = len;
            int count = 0;
            for (size_t c = 0; c < grid[r].size(); ++c)
                if (grid[r][c] >= 1 && grid[r][c] <= threshold) {
                    ++count;
                    max_col = std::max(max_col, static_cast<int>(c) + 1);
                }
            if (max_col != len + count)
                throw InvalidCoding("cells labelled up to " + std::to_string(threshold) +
                                    " are not left-justified in row " + std::to_string(r + 1));
            rows.push_back(len + count);
        }
        auto partial = Partition::try_normalized(std::move(rows));
        if (!partial)
            throw InvalidCoding("cells labelled up to " + std::to_string(threshold) +
                                " do not form a partition");
        chain.push_back(*std::move(partial));
    }

    std::vector<Ribbon> ribbons;
    for (int label = 1; label <= max_label; ++label) {
        std::vector<Ribbon> strip;
        try {
            strip = strip_tiling(chain[static_cast<size_t>(label)],
                                 chain[static_cast<size_t>(label) - 1], k);
        } catch (const NotAStrip& e) {
            throw InvalidCoding("label " + std::to_string(label) + ": " + e.what());
        }
        if (strip.empty())
            throw InvalidCoding("label " + std::to_string(label) + " is never used");
        for (Ribbon& r : strip) {
            r.label = label;
            ribbons.push_back(std::move(r));
        }
    }
    return RibbonTableau(SkewShape(*outer, *inner), k, std::move(ribbons));
}

std::string render_text(const RibbonTableau& tableau) {
    const Partition& outer = tableau.shape().outer();
    const Partition& inner = tableau.shape().inner();
    const int nrows = outer.rows();
    if (nrows == 0) return "";
    const int ncols = outer.part(1);

    // Owner per cell: 0 outside, -1 inner, ribbon index + 1 otherwise.
    std::vector<std::vector<int>> owner(static_cast<size_t>(nrows) + 2,
                                        std::vector<int>(static_cast<size_t>(ncols) + 2, 0));
    std::vector<std::vector<int>> label(owner);
    for (int r = 1; r <= nrows; ++r)
        for (int c = 1; c <= inner.part(r); ++c) owner[static_cast<size_t>(r)][static_cast<size_t>(c)] = -1;
    for (size_t i = 0; i < tableau.ribbons().size(); ++i)
        for (const Cell& cell : tableau.ribbons()[i].cells) {
            owner[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col)] =
                static_cast<int>(i) + 1;
            label[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col)] =
                tableau.ribbons()[i].label;
        }

    int cell_width = 1;
    for (const Ribbon& r : tableau.ribbons())
        cell_width = std::max(cell_width, static_cast<int>(std::to_string(r.label).size()));

    auto hborder = [&](int r, int c) {  // between rows r and r+1 at column c
        return owner[static_cast<size_t>(r)][static_cast<size_t>(c)] !=
               owner[static_cast<size_t>(r) + 1][static_cast<size_t>(c)];
    };
    auto vborder = [&](int r, int c) {  // between columns c and c+1 in row r
        return owner[static_cast<size_t>(r)][static_cast<size_t>(c)] !=
               owner[static_cast<size_t>(r)][static_cast<size_t>(c) + 1];
    };

    std::string out;
    auto rstrip_line = [&](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    };
    for (int r = 0; r <= nrows; ++r) {
        std::string sep;
        for (int c = 0; c <= ncols; ++c) {
            const bool vert = (r >= 1 && vborder(r, c)) || (r < nrows && vborder(r + 1, c));
            const bool horiz = (c >= 1 && hborder(r, c)) || (c < ncols && hborder(r, c + 1));
            sep += vert && horiz ? '+' : vert ? '|' : horiz ? '-' : ' ';
            if (c < ncols) sep += std::string(static_cast<size_t>(cell_width),
                                              hborder(r, c + 1) ? '-' : ' ');
        }
        rstrip_line(sep);
        if (r == nrows) break;
        std::string content;
        for (int c = 0; c <= ncols; ++c) {
            content += vborder(r + 1, c) ? '|' : ' ';
            if (c < ncols) {
                const int lbl = label[static_cast<size_t>(r) + 1][static_cast<size_t>(c) + 1];
                std::string text = lbl > 0 ? std::to_string(lbl) : "";
                content += std::string(static_cast<size_t>(cell_width) - text.size(), ' ') + text;
            }
        }
        rstrip_line(content);
    }
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace ribbon
