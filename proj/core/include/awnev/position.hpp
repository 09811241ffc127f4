#pragma once

#include <vector>

#include "awnev/mpoly.hpp"

namespace awnev {
namespace smt {

// Every (n+1)-subset of the forms has exact rank n+1. Requires at least
// n+1 forms (TooFew otherwise).
bool general_position_check(const HyperplaneSet& H, int n);

// Every (l+1)-subset has exact rank n+1, i.e. empty common zero set in P^n.
// Requires p >= l+1 >= n+1.
bool subgeneral_position_check(const HyperplaneSet& H, int n, int l);

// Position verdict for hypersurfaces. Exact routes: degree-1 forms (rank)
// and n = 1 (pairwise coprimality of binary forms). Anything else falls
// back to a deterministic sample search for near-common zeros and is
// flagged as heuristic.
struct PositionResult {
    bool ok;
    bool exact;
};
PositionResult hypersurface_position_check(const std::vector<Hypersurface>& Ds, int n, int l);

// No homogeneous polynomial relation P(f_0, ..., f_n) == 0 of total degree
// <= max_relation_degree, decided by exact rank of the monomial products.
// This is the computable face of algebraic independence for polynomial data.
bool algebraically_nondegenerate(const ProjCurveRep& curve, int max_relation_degree);

}  // namespace smt
}  // namespace awnev
