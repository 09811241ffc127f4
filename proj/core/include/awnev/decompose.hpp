#pragma once

#include <string>
#include <vector>

#include "awnev/mpoly.hpp"

namespace awnev {
namespace decomp {

// Factor degrees d_1 >= d_2 >= ... >= d_s >= 1 (normalized on construction).
struct DegreeMultiset {
    std::vector<int> degrees;

    explicit DegreeMultiset(std::vector<int> ds);
    int total() const;
    int count() const { return static_cast<int>(degrees.size()); }
};

// Assignment of the items 1..s (descending-degree order) to bins 1..s'.
struct Decomposition {
    std::vector<std::vector<int>> bins;  // 1-based item indices, per bin
    std::vector<int> bin_degrees;

    int max_degree() const;
};

// Snapshot after all items of value k have been placed: the degree sum and
// count of used items, and the extreme bin degrees (unseeded bins count 0).
struct StageRow {
    int k;
    int d;
    int s;
    int i_max;
    int i_min;
};
struct StageTrace {
    std::vector<StageRow> rows;  // k descending from the largest degree to 1
};

// Greedy distribution: seed bin j with item j for j = 1..bins, then send
// each remaining item (descending) to a bin of minimum degree, ties broken
// by lowest bin index. Throws BadArity when bins exceeds the item count.
std::pair<Decomposition, StageTrace> greedy_decompose(const DegreeMultiset& ds, int bins);

// max{d - s + 1, ceil(d / bins)}: the certified cap on the greedy maximum.
int degree_bound(int d, int s, int bins);

// Exact minimum over all partitions of the items into `bins` nonempty
// groups of the maximum group degree. Exhaustive; items capped at 12
// (TooLarge beyond).
int brute_force_minmax(const DegreeMultiset& ds, int bins);

// Groups the hypersurface's irreducible factors by the greedy rule; a factor
// of multiplicity m stays atomic (one item of degree m * deg), so no two
// output polynomials share a factor. Throws NotEnoughFactors when the
// distinct factor count is below `bins`.
std::vector<MPoly> polynomial_decompose(const Hypersurface& Q, int bins);

// Fixed-width text rendering of the stage table (byte-stable).
std::string render_stage_table(const DegreeMultiset& ds, int bins);

}  // namespace decomp
}  // namespace awnev
