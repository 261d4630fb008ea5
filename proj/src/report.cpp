#include "tdist/report.hpp"

#include <algorithm>
#include <vector>

#include "tdist/constructions.hpp"
#include "tdist/labeling.hpp"
#include "tdist/tournament.hpp"

namespace tdist {

namespace {

struct Row {
    std::vector<std::string> cells;
};

const char* const kColumns[] = {"n",   "source",    "rho",       "rho_bound", "det",
                                "det_bound", "rho_prime", "rho_prime_bound", "verified"};

Row make_row(const Tournament& t, const std::string& source, const ReportOptions& options,
             bool is_hk) {
    VertexSetResult rho = rho_exact(t, options.budget);
    VertexSetResult det = det_exact(t, options.budget);
    RhoPrimeOptions rp_options;
    rp_options.budget = options.budget;
    rp_options.module_filter = options.module_filter && is_hk;
    ArcSetResult rho_prime = rho_prime_exact(t, rp_options);

    bool verified = rho.value && det.value && rho_prime.value &&
                    is_distinguishing_class(t, rho.witness) && is_determining_set(t, det.witness) &&
                    is_distinguishing_arc(t, ArcLabeling::from_black_arcs(rho_prime.witness))
                        .distinguishing;

    int n = t.order();
    Row row;
    row.cells.push_back(std::to_string(n));
    row.cells.push_back(source);
    row.cells.push_back(rho.value ? std::to_string(*rho.value) : "?");
    row.cells.push_back(std::to_string(n / 2));
    row.cells.push_back(det.value ? std::to_string(*det.value) : "?");
    row.cells.push_back(std::to_string(n / 3));
    row.cells.push_back(rho_prime.value ? std::to_string(*rho_prime.value) : "?");
    row.cells.push_back(std::to_string(7 * n / 36 + 3));
    row.cells.push_back(verified ? "yes" : "no");
    return row;
}

}  // namespace

std::string build_report(const ReportOptions& options) {
    std::vector<Row> rows;
    for (int k = 0; k <= options.max_k; ++k)
        rows.push_back(make_row(Tournament::hk(k), "H_" + std::to_string(k), options, k >= 1));
    for (int i = 0; i < options.random_rows; ++i) {
        int n = 3 + i % 5;
        std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
        rows.push_back(make_row(Tournament::random(n, seed), "random(seed=" + std::to_string(seed) + ")",
                                options, false));
    }

    constexpr std::size_t ncols = std::size(kColumns);
    std::string out;
    if (options.csv) {
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c) out += ',';
            out += kColumns[c];
        }
        out += '\n';
        for (const Row& row : rows) {
            for (std::size_t c = 0; c < ncols; ++c) {
                if (c) out += ',';
                out += row.cells[c];
            }
            out += '\n';
        }
        return out;
    }

    std::vector<std::size_t> width(ncols);
    for (std::size_t c = 0; c < ncols; ++c) width[c] = std::string(kColumns[c]).size();
    for (const Row& row : rows)
        for (std::size_t c = 0; c < ncols; ++c) width[c] = std::max(width[c], row.cells[c].size());

    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c) out += "  ";
            out += cells[c];
            if (c + 1 < ncols) out.append(width[c] - cells[c].size(), ' ');
        }
        out += '\n';
    };
    emit({kColumns, kColumns + ncols});
    for (const Row& row : rows) emit(row.cells);
    return out;
}

}  // namespace tdist
