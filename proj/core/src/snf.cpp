#include "arithgraph/snf.hpp"

#include <algorithm>
#include <cassert>

#include "arithgraph/errors.hpp"

namespace arithgraph {

namespace {

// Elementary row/column operations applied to the working matrix while the
// transforms and their inverses are kept in sync. Invariant throughout:
// u * m * v == d, u * u_inv == I, v * v_inv == I.
struct Worker {
    IntMatrix d, u, v, u_inv, v_inv;

    explicit Worker(const IntMatrix& m)
        : d(m),
          u(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          u_inv(IntMatrix::identity(m.rows())),
          v_inv(IntMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
        for (std::size_t i = 0; i < u_inv.rows(); ++i) std::swap(u_inv(i, a), u_inv(i, b));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
        for (std::size_t j = 0; j < v_inv.cols(); ++j) std::swap(v_inv(a, j), v_inv(b, j));
    }

    // row a += c * row b
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) += c * d(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) += c * u(b, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, b) -= c * u_inv(i, a);
    }

    // col a += c * col b
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < d.rows(); ++i) d(i, a) += c * d(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) += c * v(i, b);
        for (std::size_t j = 0; j < v_inv.cols(); ++j) v_inv(b, j) -= c * v_inv(a, j);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) = -d(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, a) = -u_inv(i, a);
    }

    // Nonzero entry of minimal absolute value in the trailing submatrix,
    // smallest row then column index on ties.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j) {
                if (d(i, j) == 0) continue;
                Int a = abs(d(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

}  // namespace

IntVec SnfDecomposition::diagonal() const {
    const std::size_t k = std::min(d.rows(), d.cols());
    IntVec out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = d(i, i);
    return out;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    const std::size_t bound = std::min(m.rows(), m.cols());
    std::size_t rank = 0;

    for (std::size_t t = 0; t < bound; ++t) {
        std::size_t pi = t, pj = t;
        if (!w.find_pivot(t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot; truncated quotients leave
            // remainders strictly smaller than the pivot, so re-selecting the
            // minimal pivot makes progress.
            bool dirty = false;
            for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
                if (w.d(i, t) == 0) continue;
                Int q = w.d(i, t) / w.d(t, t);
                w.add_row(i, t, -q);
                if (w.d(i, t) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t qi = t, qj = t;
                w.find_pivot(t, qi, qj);
                w.swap_rows(t, qi);
                w.swap_cols(t, qj);
                continue;
            }
            for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
                if (w.d(t, j) == 0) continue;
                Int q = w.d(t, j) / w.d(t, t);
                w.add_col(j, t, -q);
                if (w.d(t, j) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t qi = t, qj = t;
                w.find_pivot(t, qi, qj);
                w.swap_rows(t, qi);
                w.swap_cols(t, qj);
                continue;
            }
            // Pivot must divide the rest of the submatrix for the divisibility
            // chain; pulling an offending row up creates a reducible entry.
            bool divides = true;
            for (std::size_t i = t + 1; i < w.d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < w.d.cols() && divides; ++j)
                    if (w.d(i, j) % w.d(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }

        if (w.d(t, t) < 0) w.negate_row(t);
        ++rank;
    }

    SnfDecomposition out;
    out.u = std::move(w.u);
    out.d = std::move(w.d);
    out.v = std::move(w.v);
    out.u_inv = std::move(w.u_inv);
    out.v_inv = std::move(w.v_inv);
    out.rank = rank;
    return out;
}

IntVec integer_kernel_primitive(const IntMatrix& m) {
    const SnfDecomposition snf = smith_normal_form(m);
    const std::size_t dim = m.cols() - snf.rank;
    if (dim == 0) fail("NoKernel", "matrix has trivial kernel");
    if (dim >= 2) fail("NotRankDeficientByOne", "kernel dimension is " + std::to_string(dim));

    IntVec k = snf.v.col(snf.rank);
    Int g = vec_gcd(k);
    assert(g == 1);  // columns of a unimodular matrix are primitive
    for (const Int& x : k) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : k) y = -y;
        break;
    }
    return k;
}

std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b) {
    if (b.size() != m.rows()) fail("LengthMismatch", "right-hand side has wrong length");
    const SnfDecomposition snf = smith_normal_form(m);
    const IntVec c = snf.u * b;
    IntVec y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < snf.rank) {
            Int r;
            mpz_tdiv_r(r.get_mpz_t(), c[i].get_mpz_t(), snf.d(i, i).get_mpz_t());
            if (r != 0) return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf.d(i, i).get_mpz_t());
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.v * y;
}

}  // namespace arithgraph
