#ifndef TDIST_REPORT_HPP
#define TDIST_REPORT_HPP

#include <cstdint>
#include <string>

#include "tdist/exact_search.hpp"

namespace tdist {

/// Inputs of the bound table: H_0..H_max_k followed by `random_rows` seeded
/// random tournaments with orders cycling through 3..7 (row i gets order
/// 3 + i mod 5 and seed `seed` + i). Output is byte-identical across runs
/// for identical options.
struct ReportOptions {
    int max_k = 2;
    int random_rows = 0;
    std::uint64_t seed = 1;
    bool csv = false;
    bool module_filter = false;  // Prop.-4 pruning on the H_k rows
    SearchBudget budget;
};

/// One row per input: n, source, rho, floor(n/2), det, floor(n/3),
/// rho_prime, floor(7n/36)+3, and whether every witness re-verified.
std::string build_report(const ReportOptions& options);

}  // namespace tdist

#endif
