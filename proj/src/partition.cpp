#include "ribbon/partition.hpp"

#include <charconv>

namespace ribbon {

Partition Partition::from_parts(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw NotAPartition("parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw NotAPartition("parts must be weakly decreasing");
    }
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::normalized(std::vector<int> v) {
    auto p = try_normalized(std::move(v));
    if (!p) throw NotAPartition("sequence does not normalize to a partition");
    return *std::move(p);
}

std::optional<Partition> Partition::try_normalized(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) return std::nullopt;
        if (i > 0 && v[i] > v[i - 1]) return std::nullopt;
    }
    Partition p;
    p.parts_ = std::move(v);
    return p;
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view tok = trim(text.substr(start, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - start));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw NotAPartition("bad partition literal: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return normalized(std::move(parts));
}

long long Partition::cell_count() const {
    long long n = 0;
    for (int p : parts_) n += p;
    return n;
}

Partition Partition::conjugate() const {
    Partition c;
    if (parts_.empty()) return c;
    c.parts_.resize(static_cast<size_t>(parts_[0]));
    for (int col = 1; col <= parts_[0]; ++col) {
        int count = 0;
        for (int p : parts_) {
            if (p < col) break;
            ++count;
        }
        c.parts_[static_cast<size_t>(col) - 1] = count;
    }
    return c;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner partition " + inner_.to_string() +
                                    " does not fit inside " + outer_.to_string());
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(cell_count()));
    for (int row = 1; row <= outer_.rows(); ++row)
        for (int col = inner_.part(row) + 1; col <= outer_.part(row); ++col)
            out.push_back({row, col});
    return out;
}

}  // namespace ribbon
