#include "awnev/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "awnev/errors.hpp"

namespace awnev {
namespace decomp {

DegreeMultiset::DegreeMultiset(std::vector<int> ds) : degrees(std::move(ds)) {
    if (degrees.empty()) throw BadArity("DegreeMultiset: empty");
    for (int d : degrees)
        if (d < 1) throw DomainError("DegreeMultiset: degrees must be >= 1");
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
}

int DegreeMultiset::total() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

int Decomposition::max_degree() const {
    return *std::max_element(bin_degrees.begin(), bin_degrees.end());
}

std::pair<Decomposition, StageTrace> greedy_decompose(const DegreeMultiset& ds, int bins) {
    const int s = ds.count();
    if (bins < 1 || bins > s) throw BadArity("greedy_decompose: need 1 <= bins <= item count");

    Decomposition dec;
    dec.bins.assign(static_cast<std::size_t>(bins), {});
    dec.bin_degrees.assign(static_cast<std::size_t>(bins), 0);

    StageTrace trace;
    int used_degree = 0;
    int used_count = 0;
    std::size_t next = 0;
    const int kmax = ds.degrees[0];
    for (int k = kmax; k >= 1; --k) {
        while (next < ds.degrees.size() && ds.degrees[next] == k) {
            const int item = static_cast<int>(next) + 1;  // 1-based, descending order
            std::size_t target;
            if (item <= bins) {
                target = static_cast<std::size_t>(item) - 1;  // seeding step
            } else {
                target = 0;
                for (std::size_t j = 1; j < dec.bin_degrees.size(); ++j)
                    if (dec.bin_degrees[j] < dec.bin_degrees[target]) target = j;
            }
            dec.bins[target].push_back(item);
            dec.bin_degrees[target] += k;
            used_degree += k;
            ++used_count;
            ++next;
        }
        auto [lo, hi] = std::minmax_element(dec.bin_degrees.begin(), dec.bin_degrees.end());
        trace.rows.push_back({k, used_degree, used_count, *hi, *lo});
    }
    return {std::move(dec), std::move(trace)};
}

int degree_bound(int d, int s, int bins) {
    if (!(1 <= bins && bins <= s && s <= d))
        throw BadArity("degree_bound: need 1 <= bins <= s <= d");
    return std::max(d - s + 1, (d + bins - 1) / bins);
}

namespace {

// Restricted-growth enumeration of partitions into exactly `bins` blocks.
void enumerate_partitions(const std::vector<int>& degrees, int bins, std::size_t item,
                          int blocks_open, std::vector<int>& block_degree, int current_max,
                          int& best) {
    if (current_max >= best) return;  // cannot improve
    const int remaining = static_cast<int>(degrees.size() - item);
    if (bins - blocks_open > remaining) return;  // cannot open enough blocks
    if (item == degrees.size()) {
        if (blocks_open == bins) best = current_max;
        return;
    }
    const int d = degrees[item];
    for (int b = 0; b < blocks_open; ++b) {
        block_degree[static_cast<std::size_t>(b)] += d;
        enumerate_partitions(degrees, bins, item + 1, blocks_open, block_degree,
                             std::max(current_max, block_degree[static_cast<std::size_t>(b)]),
                             best);
        block_degree[static_cast<std::size_t>(b)] -= d;
    }
    if (blocks_open < bins) {
        block_degree[static_cast<std::size_t>(blocks_open)] = d;
        enumerate_partitions(degrees, bins, item + 1, blocks_open + 1, block_degree,
                             std::max(current_max, d), best);
        block_degree[static_cast<std::size_t>(blocks_open)] = 0;
    }
}

}  // namespace

int brute_force_minmax(const DegreeMultiset& ds, int bins) {
    const int s = ds.count();
    if (bins < 1 || bins > s) throw BadArity("brute_force_minmax: need 1 <= bins <= item count");
    if (s > 12) throw TooLarge("brute_force_minmax: exhaustive enumeration capped at 12 items");
    // Seed the search with the greedy value; every partition it beats is real.
    int best = greedy_decompose(ds, bins).first.max_degree() + 1;
    std::vector<int> block_degree(static_cast<std::size_t>(bins), 0);
    enumerate_partitions(ds.degrees, bins, 0, 0, block_degree, 0, best);
    return best;
}

std::vector<MPoly> polynomial_decompose(const Hypersurface& Q, int bins) {
    if (!Q.has_factors())
        throw DomainError("polynomial_decompose: hypersurface carries no factorization");
    const int s = Q.distinct_factor_count();
    if (bins < 1) throw BadArity("polynomial_decompose: need at least one bin");
    if (s < bins)
        throw NotEnoughFactors("polynomial_decompose: " + std::to_string(s) +
                               " distinct factors for " + std::to_string(bins) + " bins");
    // One atomic item per distinct factor, weight = multiplicity * degree.
    std::vector<int> order(static_cast<std::size_t>(s));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& fa = Q.factors[static_cast<std::size_t>(a)];
        const auto& fb = Q.factors[static_cast<std::size_t>(b)];
        return fa.second * fa.first.total_degree() > fb.second * fb.first.total_degree();
    });
    std::vector<int> degs;
    degs.reserve(order.size());
    for (int idx : order) {
        const auto& [f, mult] = Q.factors[static_cast<std::size_t>(idx)];
        degs.push_back(mult * f.total_degree());
    }
    auto [dec, trace] = greedy_decompose(DegreeMultiset(degs), bins);
    std::vector<MPoly> out;
    const std::vector<int> unit(static_cast<std::size_t>(Q.poly.nvars()), 0);
    for (const auto& bin : dec.bins) {
        MPoly prod = MPoly::monomial(unit, Rat(1));
        for (int item : bin) {
            const auto& [f, mult] = Q.factors[static_cast<std::size_t>(order[
                static_cast<std::size_t>(item - 1)])];
            prod = prod * f.pow(mult);
        }
        out.push_back(std::move(prod));
    }
    return out;
}

std::string render_stage_table(const DegreeMultiset& ds, int bins) {
    auto [dec, trace] = greedy_decompose(ds, bins);
    // Reconstruct, per stage, the items each bin received ("6_1", "5_2+5_4").
    const int kmax = ds.degrees[0];
    std::vector<std::vector<std::string>> cells(
        trace.rows.size(), std::vector<std::string>(static_cast<std::size_t>(bins)));
    for (std::size_t b = 0; b < dec.bins.size(); ++b) {
        for (int item : dec.bins[b]) {
            int k = ds.degrees[static_cast<std::size_t>(item - 1)];
            std::size_t row = static_cast<std::size_t>(kmax - k);
            std::string piece = std::to_string(k) + "_" + std::to_string(item);
            auto& cell = cells[row][b];
            if (!cell.empty()) cell += "+";
            cell += piece;
        }
    }
    std::vector<std::string> header = {"stage"};
    for (int b = 1; b <= bins; ++b) header.push_back("R" + std::to_string(b));
    header.insert(header.end(), {"d(k)", "s(k)", "Imax", "Imin"});

    std::vector<std::vector<std::string>> grid;
    grid.push_back(header);
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const StageRow& row = trace.rows[i];
        std::vector<std::string> line = {"k=" + std::to_string(row.k)};
        for (std::size_t b = 0; b < static_cast<std::size_t>(bins); ++b)
            line.push_back(cells[i][b]);
        line.push_back(std::to_string(row.d));
        line.push_back(std::to_string(row.s));
        line.push_back(std::to_string(row.i_max));
        line.push_back(std::to_string(row.i_min));
        grid.push_back(std::move(line));
    }

    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& line : grid)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream os;
    for (const auto& line : grid) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) os << " | ";
            os << line[c];
            for (std::size_t pad = line[c].size(); pad < width[c]; ++pad) os << ' ';
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace decomp
}  // namespace awnev
