#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/partition.hpp"

namespace ribbon {

struct SweepOptions {
    int max_cells = 12;                     // bound on the outer partition size
    std::vector<int> ribbon_orders = {1, 2, 3};
    int threads = 1;
    bool check_roundtrip = true;            // decode(encode) and spin agreement
    bool check_mirror = true;               // mirror relation and max tiling spin
};

struct SweepReport {
    long long shapes = 0;     // (outer, inner, k) triples visited
    long long instances = 0;  // weights checked
    long long tableaux = 0;   // tableaux produced by the generator
    long long poly_mismatches = 0;
    long long parity_failures = 0;
    long long set_mismatches = 0;
    long long roundtrip_failures = 0;
    long long spin_mismatches = 0;
    long long mirror_failures = 0;
    long long max_spin_mismatches = 0;
    std::string first_issue;

    bool clean() const {
        return poly_mismatches + parity_failures + set_mismatches + roundtrip_failures +
                   spin_mismatches + mirror_failures + max_spin_mismatches ==
               0;
    }
    std::string summary() const;
    void absorb(const SweepReport& other);
};

// Checks the generator against the brute-force oracle on every skew shape
// whose outer partition has at most max_cells cells, for every ribbon order
// in the list and every weight composition.
SweepReport oracle_sweep(const SweepOptions& options);

// Same checks for a single shape; all weights when none is given.
SweepReport verify_instance(const SkewShape& shape, int k,
                            const std::optional<std::vector<int>>& weight,
                            const SweepOptions& options = {});

}  // namespace ribbon
