#pragma once

#include <optional>

#include "arithgraph/intmat.hpp"

namespace arithgraph {

// Smith normal form u * m * v == d with u, v unimodular and d diagonal.
// Diagonal entries are nonnegative, each divides the next, zeros last.
// u_inv and v_inv are the exact integer inverses of u and v.
struct SnfDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
    std::size_t rank = 0;  // number of nonzero diagonal entries

    IntVec diagonal() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

// Primitive generator of a one-dimensional rational kernel, sign-normalized
// so the first nonzero entry is positive.
// Throws NoKernel (kernel dimension 0) or NotRankDeficientByOne (dimension >= 2).
IntVec integer_kernel_primitive(const IntMatrix& m);

// Some integer solution of m x = b, or nullopt when b is not in the integer
// image of m. Free coordinates are pinned to zero in SNF coordinates, so the
// representative is deterministic.
std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b);

}  // namespace arithgraph
