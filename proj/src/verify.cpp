#include "ribbon/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "ribbon/generator.hpp"
#include "ribbon/oracle.hpp"

namespace ribbon {

std::string SweepReport::summary() const {
    std::ostringstream os;
    os << shapes << " shapes, " << instances << " instances, " << tableaux << " tableaux";
    if (clean()) {
        os << ", zero mismatches";
    } else {
        os << "; MISMATCHES: poly=" << poly_mismatches << " parity=" << parity_failures
           << " sets=" << set_mismatches << " roundtrip=" << roundtrip_failures
           << " spin=" << spin_mismatches << " mirror=" << mirror_failures
           << " maxspin=" << max_spin_mismatches;
        if (!first_issue.empty()) os << "; first: " << first_issue;
    }
    return os.str();
}

void SweepReport::absorb(const SweepReport& other) {
    shapes += other.shapes;
    instances += other.instances;
    tableaux += other.tableaux;
    poly_mismatches += other.poly_mismatches;
    parity_failures += other.parity_failures;
    set_mismatches += other.set_mismatches;
    roundtrip_failures += other.roundtrip_failures;
    spin_mismatches += other.spin_mismatches;
    mirror_failures += other.mirror_failures;
    max_spin_mismatches += other.max_spin_mismatches;
    if (first_issue.empty()) first_issue = other.first_issue;
}

namespace {

void note(SweepReport& report, long long SweepReport::*counter, const std::string& what) {
    ++(report.*counter);
    if (report.first_issue.empty()) report.first_issue = what;
}

std::string instance_name(const SkewShape& shape, int k, std::span<const int> weight) {
    std::string s = shape.outer().to_string();
    if (!shape.inner().empty()) s += " / " + shape.inner().to_string();
    s += ", k=" + std::to_string(k) + ", weight=";
    for (size_t i = 0; i < weight.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weight[i]);
    }
    return s;
}

void check_weight(const SkewShape& shape, int k, const BruteEnumerator& brute,
                  std::span<const int> weight, const SweepOptions& options,
                  SweepReport& report) {
    ++report.instances;
    const std::string name = instance_name(shape, k, weight);

    std::vector<std::pair<std::vector<std::vector<int>>, int>> generated;
    enumerate_tableaux(shape, k, weight, [&](const HeadArray& array, int spin2) {
        generated.emplace_back(array.rows(), spin2);
        return true;
    });
    std::sort(generated.begin(), generated.end());
    report.tableaux += static_cast<long long>(generated.size());

    const auto expected = brute.head_arrays(weight);
    if (generated != expected)
        note(report, &SweepReport::set_mismatches,
             name + ": generated tableaux differ from the oracle set (" +
                 std::to_string(generated.size()) + " vs " + std::to_string(expected.size()) +
                 ")");

    const SpinPolynomial memoized = spin_polynomial(shape, k, weight, {.memoized = true});
    const SpinPolynomial plain = spin_polynomial(shape, k, weight, {.memoized = false});
    const SpinPolynomial reference = brute.spin_poly(weight);
    if (memoized != plain)
        note(report, &SweepReport::poly_mismatches, name + ": memoized and plain modes differ");
    if (memoized != reference)
        note(report, &SweepReport::poly_mismatches, name + ": polynomial differs from oracle");
    if (!memoized.is_zero()) {
        const int parity = memoized.min_exponent2() % 2;
        for (const auto& [e2, c] : memoized.terms())
            if (e2 % 2 != parity) {
                note(report, &SweepReport::parity_failures, name + ": mixed exponent parity");
                break;
            }
    }

    if (options.check_roundtrip) {
        for (const auto& [rows, spin2] : generated) {
            const HeadArray array(k, rows);
            try {
                const RibbonTableau tableau = decode(array);
                if (encode(tableau) != array)
                    note(report, &SweepReport::roundtrip_failures,
                         name + ": decode/encode round trip changed the array");
                if (tableau_spin2(tableau) != spin2)
                    note(report, &SweepReport::spin_mismatches,
                         name + ": decoded spin differs from the emitted spin");
            } catch (const InvalidCoding& e) {
                note(report, &SweepReport::roundtrip_failures,
                     name + ": generated array fails to decode: " + e.what());
            }
        }
    }

    if (options.check_mirror && !memoized.is_zero()) {
        const int pivot2 = max_spin2(shape, k);
        const SpinPolynomial cospin = cospin_polynomial(shape, k, weight);
        if (cospin.mirrored(pivot2) != memoized)
            note(report, &SweepReport::mirror_failures, name + ": mirror relation fails");
    }
}

void check_shape(const SkewShape& shape, int k, const SweepOptions& options,
                 SweepReport& report) {
    ++report.shapes;
    const long long cells = shape.cell_count();
    if (cells % k != 0) return;
    BruteEnumerator brute(shape, k);

    if (options.check_mirror) {
        const auto oracle_max = brute.max_tiling_spin2();
        if (oracle_max) {
            try {
                if (max_spin2(shape, k) != *oracle_max)
                    note(report, &SweepReport::max_spin_mismatches,
                         shape.outer().to_string() + " / " + shape.inner().to_string() + ", k=" +
                             std::to_string(k) + ": max tiling spin differs from oracle");
            } catch (const NoTiling&) {
                note(report, &SweepReport::max_spin_mismatches,
                     shape.outer().to_string() + " / " + shape.inner().to_string() + ", k=" +
                         std::to_string(k) + ": no tiling found where the oracle has one");
            }
        }
    }

    for (const auto& weight : compositions_of(static_cast<int>(cells / k)))
        check_weight(shape, k, brute, weight, options, report);
}

}  // namespace

SweepReport oracle_sweep(const SweepOptions& options) {
    struct Task {
        Partition outer;
        Partition inner;
        int k;
    };
    std::vector<Task> tasks;
    for (int n = 0; n <= options.max_cells; ++n)
        for (const Partition& outer : partitions_of(n))
            for (const Partition& inner : subpartitions(outer))
                for (int k : options.ribbon_orders)
                    if ((outer.cell_count() - inner.cell_count()) % k == 0)
                        tasks.push_back({outer, inner, k});

    const size_t nthreads =
        std::min<size_t>(std::max(options.threads, 1), std::max<size_t>(tasks.size(), 1));
    if (nthreads <= 1) {
        SweepReport report;
        for (const Task& t : tasks)
            check_shape(SkewShape(t.outer, t.inner), t.k, options, report);
        return report;
    }

    std::vector<SweepReport> partial(nthreads);
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] {
            for (;;) {
                const size_t i = cursor.fetch_add(1);
                if (i >= tasks.size()) return;
                check_shape(SkewShape(tasks[i].outer, tasks[i].inner), tasks[i].k, options,
                            partial[t]);
            }
        });
    for (auto& th : pool) th.join();
    SweepReport report;
    for (const SweepReport& p : partial) report.absorb(p);
    return report;
}

SweepReport verify_instance(const SkewShape& shape, int k,
                            const std::optional<std::vector<int>>& weight,
                            const SweepOptions& options) {
    SweepReport report;
    if (!weight) {
        check_shape(shape, k, options, report);
        return report;
    }
    ++report.shapes;
    BruteEnumerator brute(shape, k);
    check_weight(shape, k, brute, *weight, options, report);
    return report;
}

}  // namespace ribbon
