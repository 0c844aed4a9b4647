#include "ribbon/generator.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <utility>

#include "ribbon/strip.hpp"

namespace ribbon {

namespace {

void check_instance(const SkewShape& shape, int k, std::span<const int> weight) {
    if (k < 1) throw std::invalid_argument("ribbon order must be at least 1");
    long long total = 0;
    for (int w : weight) {
        if (w < 1) throw std::invalid_argument("weight entries must be positive");
        total += w;
    }
    if (total * k != shape.cell_count())
        throw ShapeWeightMismatch("shape has " + std::to_string(shape.cell_count()) +
                                  " cells but the weight needs k*sum(weight) = " +
                                  std::to_string(k) + "*" + std::to_string(total) + " = " +
                                  std::to_string(total * k));
}

// Fans out every retained strip removal of `count` ribbons from `shape`.
// yield(columns, conj, next_shape, strip_spin2) -> false stops the loop.
// Column subsets are visited in lexicographic order, which fixes the
// traversal order everywhere downstream.
template <class Yield>
void for_each_removal(const Partition& shape, const Partition& inner, int k, int count,
                      Yield&& yield) {
    const int ncols = shape.part(1);
    const Partition conj = shape.conjugate();
    std::vector<int> combo;
    if (!detail::first_combination(combo, ncols, count)) return;
    do {
        StripResult res = detail::remove_strip_by_columns(conj, combo, k);
        if (res.ok() && res.outcome.shape.contains(inner))
            if (!yield(combo, conj, std::move(res.outcome.shape), res.outcome.spin2)) return;
    } while (detail::next_combination(combo, ncols));
}

// One level of the shape-keyed recurrence. States with the same remaining
// partition expand identically, so the frontier folds them together; shift
// applies one strip's spin to a value and combine folds a value into a map.
// Worker maps merge in slice order, and since combine is associative and
// commutative on exact values the result is identical for any thread count.
template <class V, class Shift, class Combine>
std::map<Partition, V> advance_level(const std::map<Partition, V>& front, const Partition& inner,
                                     int k, int count, int threads, Shift shift,
                                     Combine combine) {
    std::vector<const std::pair<const Partition, V>*> items;
    items.reserve(front.size());
    for (const auto& kv : front) items.push_back(&kv);

    auto expand = [&](size_t begin, size_t end, std::map<Partition, V>& out) {
        for (size_t i = begin; i < end; ++i)
            for_each_removal(items[i]->first, inner, k, count,
                             [&](const std::vector<int>&, const Partition&, Partition&& next,
                                 int spin2) {
                                 combine(out, std::move(next), shift(items[i]->second, spin2));
                                 return true;
                             });
    };

    const size_t n = items.size();
    const size_t nthreads = std::min<size_t>(std::max(threads, 1), std::max<size_t>(n, 1));
    if (nthreads <= 1) {
        std::map<Partition, V> out;
        expand(0, n, out);
        return out;
    }
    std::vector<std::map<Partition, V>> locals(nthreads);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) {
        const size_t begin = n * t / nthreads;
        const size_t end = n * (t + 1) / nthreads;
        pool.emplace_back([&, begin, end, t] { expand(begin, end, locals[t]); });
    }
    for (auto& th : pool) th.join();
    std::map<Partition, V> out = std::move(locals[0]);
    for (size_t t = 1; t < nthreads; ++t)
        for (auto& [key, value] : locals[t]) combine(out, Partition(key), std::move(value));
    return out;
}

template <class V>
void combine_add(std::map<Partition, V>& out, Partition&& key, V&& value) {
    auto it = out.find(key);
    if (it == out.end())
        out.emplace(std::move(key), std::move(value));
    else
        it->second += value;
}

}  // namespace

void enumerate_tableaux(const SkewShape& shape, int k, std::span<const int> weight,
                        const TableauSink& sink, const GenOptions& options) {
    check_instance(shape, k, weight);
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    const int levels = static_cast<int>(weight.size());

    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= outer.rows(); ++r) {
        std::vector<int> row(static_cast<size_t>(outer.part(r)), 0);
        for (int c = 0; c < inner.part(r); ++c) row[static_cast<size_t>(c)] = -1;
        rows.push_back(std::move(row));
    }
    if (levels == 0) {
        sink(HeadArray(k, rows), 0);
        return;
    }

    // level counts down; label written for level j is j+1
    auto dfs = [&](auto&& self, std::vector<std::vector<int>>& grid, const Partition& cur,
                   int level, int spin2, auto&& emit) -> bool {
        if (level < 0) return emit(grid, spin2);
        bool keep = true;
        for_each_removal(cur, inner, k, weight[static_cast<size_t>(level)],
                         [&](const std::vector<int>& combo, const Partition& conj,
                             Partition&& next, int s2) {
                             for (int c : combo)
                                 grid[static_cast<size_t>(conj.part(c + 1)) - 1]
                                     [static_cast<size_t>(c)] = level + 1;
                             keep = self(self, grid, next, level - 1, spin2 + s2, emit);
                             for (int c : combo)
                                 grid[static_cast<size_t>(conj.part(c + 1)) - 1]
                                     [static_cast<size_t>(c)] = 0;
                             return keep;
                         });
        return keep;
    };

    if (options.threads <= 1) {
        auto emit = [&](const std::vector<std::vector<int>>& grid, int spin2) {
            return sink(HeadArray(k, grid), spin2);
        };
        dfs(dfs, rows, outer, levels - 1, 0, emit);
        return;
    }

    // Parallel mode: split on the first level, let workers fill per-branch
    // buffers, then emit buffers in branch order so the stream is identical
    // to the sequential one.
    struct Branch {
        std::vector<std::pair<int, int>> writes;
        Partition next;
        int spin2 = 0;
    };
    std::vector<Branch> branches;
    for_each_removal(outer, inner, k, weight[static_cast<size_t>(levels) - 1],
                     [&](const std::vector<int>& combo, const Partition& conj, Partition&& next,
                         int s2) {
                         Branch b;
                         for (int c : combo) b.writes.emplace_back(conj.part(c + 1) - 1, c);
                         b.next = std::move(next);
                         b.spin2 = s2;
                         branches.push_back(std::move(b));
                         return true;
                     });

    std::vector<std::vector<std::pair<HeadArray, int>>> buffers(branches.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        std::vector<std::vector<int>> grid;
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= branches.size()) return;
            grid = rows;
            for (auto [r, c] : branches[i].writes)
                grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = levels;
            auto emit = [&](const std::vector<std::vector<int>>& g, int spin2) {
                buffers[i].emplace_back(HeadArray(k, g), spin2);
                return true;
            };
            dfs(dfs, grid, branches[i].next, levels - 2, branches[i].spin2, emit);
        }
    };
    std::vector<std::thread> pool;
    const size_t nthreads = std::min<size_t>(static_cast<size_t>(options.threads),
                                             std::max<size_t>(branches.size(), 1));
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& buffer : buffers)
        for (const auto& [array, spin2] : buffer)
            if (!sink(array, spin2)) return;
}

namespace {

SpinPolynomial plain_polynomial(const SkewShape& shape, int k, std::span<const int> weight) {
    SpinPolynomial acc;
    auto rec = [&](auto&& self, const Partition& cur, int level, int spin2) -> void {
        if (level < 0) {
            if (cur == shape.inner()) acc.add_term(spin2, 1);
            return;
        }
        for_each_removal(cur, shape.inner(), k, weight[static_cast<size_t>(level)],
                         [&](const std::vector<int>&, const Partition&, Partition&& next,
                             int s2) {
                             self(self, next, level - 1, spin2 + s2);
                             return true;
                         });
    };
    rec(rec, shape.outer(), static_cast<int>(weight.size()) - 1, 0);
    return acc;
}

SpinPolynomial memoized_polynomial(const SkewShape& shape, int k, std::span<const int> weight,
                                   int threads) {
    std::map<Partition, SpinPolynomial> front;
    front.emplace(shape.outer(), SpinPolynomial::one());
    for (int level = static_cast<int>(weight.size()) - 1; level >= 0 && !front.empty(); --level)
        front = advance_level(
            front, shape.inner(), k, weight[static_cast<size_t>(level)], threads,
            [](const SpinPolynomial& p, int spin2) { return p.shifted(spin2); },
            combine_add<SpinPolynomial>);
    auto it = front.find(shape.inner());
    return it == front.end() ? SpinPolynomial{} : it->second;
}

}  // namespace

SpinPolynomial spin_polynomial(const SkewShape& shape, int k, std::span<const int> weight,
                               const GenOptions& options) {
    check_instance(shape, k, weight);
    return options.memoized ? memoized_polynomial(shape, k, weight, options.threads)
                            : plain_polynomial(shape, k, weight);
}

SpinPolynomial cospin_polynomial(const SkewShape& shape, int k, std::span<const int> weight,
                                 const GenOptions& options) {
    SpinPolynomial spin = spin_polynomial(shape, k, weight, options);
    if (spin.is_zero()) return spin;
    return spin.mirrored(max_spin2(shape, k, options));
}

int max_spin2(const SkewShape& shape, int k, const GenOptions& options) {
    if (k < 1) throw std::invalid_argument("ribbon order must be at least 1");
    const long long cells = shape.cell_count();
    if (cells % k != 0)
        throw NoTiling("cell count " + std::to_string(cells) + " is not divisible by " +
                       std::to_string(k));
    std::map<Partition, int> front;
    front.emplace(shape.outer(), 0);
    for (long long step = 0; step < cells / k && !front.empty(); ++step)
        front = advance_level(
            front, shape.inner(), k, 1, options.threads,
            [](int best, int spin2) { return best + spin2; },
            [](std::map<Partition, int>& out, Partition&& key, int value) {
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(std::move(key), value);
                else
                    it->second = std::max(it->second, value);
            });
    auto it = front.find(shape.inner());
    if (it == front.end())
        throw NoTiling("shape admits no " + std::to_string(k) + "-ribbon tiling");
    return it->second;
}

LevelStats level_stats(const SkewShape& shape, int k, std::span<const int> weight,
                       const GenOptions& options) {
    check_instance(shape, k, weight);
    LevelStats stats;
    std::map<Partition, BigInt> front;
    front.emplace(shape.outer(), 1);
    for (int level = static_cast<int>(weight.size()) - 1; level >= 0; --level) {
        front = advance_level(
            front, shape.inner(), k, weight[static_cast<size_t>(level)], options.threads,
            [](const BigInt& count, int) { return count; }, combine_add<BigInt>);
        BigInt nodes = 0;
        for (const auto& [key, count] : front) nodes += count;
        stats.nodes.push_back(std::move(nodes));
        stats.distinct_shapes.push_back(static_cast<long long>(front.size()));
    }
    return stats;
}

}  // namespace ribbon
