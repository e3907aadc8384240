#include "support/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace testsupport {

using namespace arithgraph;

namespace {

Int det_rec(const IntMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.empty()) return 1;
    Int acc = 0;
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        const Int& entry = m(row, cols[pick]);
        if (entry == 0) continue;
        std::size_t removed = cols[pick];
        cols.erase(cols.begin() + static_cast<long>(pick));
        Int sub = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(pick), removed);
        if (pick % 2 == 0)
            acc += entry * sub;
        else
            acc -= entry * sub;
    }
    return acc;
}

// next k-combination of {0..n-1} in lexicographic order
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

}  // namespace

Int oracle_determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::logic_error("oracle determinant needs a square matrix");
    std::vector<std::size_t> cols = first_combination(m.cols());
    return det_rec(m, cols, 0);
}

Int gcd_of_minors(const IntMatrix& m, std::size_t k) {
    if (k == 0) return 1;
    if (k > m.rows() || k > m.cols()) return 0;
    Int g = 0;
    std::vector<std::size_t> rows = first_combination(k);
    do {
        std::vector<std::size_t> cols = first_combination(k);
        do {
            Int d = oracle_determinant(submatrix(m, rows, cols));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return g;
}

IntVec minors_invariant_prediction(const IntMatrix& m) {
    IntVec factors;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Int g = gcd_of_minors(m, k);
        if (g == 0) break;
        Int e;
        mpz_divexact(e.get_mpz_t(), g.get_mpz_t(), prev.get_mpz_t());
        factors.push_back(e);
        prev = g;
    }
    return factors;
}

std::optional<std::vector<Rational>> rational_solve(const IntMatrix& m, const IntVec& b) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));
        a[i][cols] = Rational(b[i]);
    }

    std::vector<long> pivot_col(rows, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        const Rational inv = 1 / a[rank][col];
        for (std::size_t j = col; j <= cols; ++j) a[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j <= cols; ++j) a[i][j] -= factor * a[rank][j];
        }
        pivot_col[rank] = static_cast<long>(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;

    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) x[static_cast<std::size_t>(pivot_col[i])] = a[i][cols];
    return x;
}

bool oracle_is_principal(const ArithStructure& st, const Divisor& d) {
    if (dot(d.values, st.r) != 0) return false;
    const auto solution = rational_solve(laplacian(st), d.values);
    if (!solution) return false;

    // common denominator of the particular solution
    Int denom = 1;
    for (const Rational& f : *solution)
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), f.get_den().get_mpz_t());
    if (denom > 1000000) throw std::logic_error("oracle denominator too large for brute search");

    // L(f + (c/denom) r) = L f; integral iff denom divides every p_i + c r_i
    IntVec scaled(solution->size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        Rational s = (*solution)[i] * Rational(denom);
        scaled[i] = s.get_num();  // denominator is 1 after scaling
    }
    for (Int c = 0; c < denom; ++c) {
        bool integral = true;
        for (std::size_t i = 0; i < scaled.size(); ++i)
            if (mod_floor(scaled[i] + c * st.r[i], denom) != 0) {
                integral = false;
                break;
            }
        if (integral) return true;
    }
    return false;
}

std::vector<std::pair<IntVec, IntVec>> oracle_structures(const Graph& g, long max_r) {
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<IntVec, IntVec>> found;
    std::vector<long> r(n, 1);
    for (;;) {
        IntVec rv(r.begin(), r.end());
        if (vec_gcd(rv) == 1) {
            IntVec sv(n);
            bool ok = true;
            for (std::size_t v = 0; v < n && ok; ++v) {
                Int sum = 0;
                for (int w : g.neighbors(static_cast<int>(v))) sum += rv[static_cast<std::size_t>(w)];
                if (sum % rv[v] != 0)
                    ok = false;
                else
                    sv[v] = sum / rv[v];
            }
            if (ok) found.emplace_back(std::move(rv), std::move(sv));
        }
        std::size_t pos = n;
        while (pos > 0 && r[pos - 1] == max_r) r[--pos] = 1;
        if (pos == 0) break;
        ++r[pos - 1];
    }
    return found;
}

bool oracle_adjacency_identity(const Graph& domain, const Graph& codomain,
                               const std::vector<int>& map) {
    const int n2 = static_cast<int>(domain.vertex_count());
    const int n1 = static_cast<int>(codomain.vertex_count());

    for (int v = 0; v < n2; ++v) {
        const int image = map[static_cast<std::size_t>(v)];
        long vertical = 0;
        for (int w : domain.neighbors(v))
            if (map[static_cast<std::size_t>(w)] == image) ++vertical;

        // mu from the first codomain edge incident to the image vertex
        int anchor = -1;
        for (const Edge& f : codomain.edges()) {
            if (f.first == image) {
                anchor = f.second;
                break;
            }
            if (f.second == image) {
                anchor = f.first;
                break;
            }
        }
        long mu = 0;
        for (int w : domain.neighbors(v))
            if (map[static_cast<std::size_t>(w)] == anchor) ++mu;

        for (int x = 0; x < n1; ++x) {
            long lhs = 0;
            for (int w : domain.neighbors(v))
                if (map[static_cast<std::size_t>(w)] == x) ++lhs;
            long rhs = (x == image ? vertical : 0) + (codomain.adjacent(image, x) ? mu : 0);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

long oracle_class_count(const ArithStructure& st, long radius) {
    const std::size_t n = st.graph.vertex_count();
    std::vector<IntVec> representatives;
    std::vector<long> values(n, -radius);
    for (;;) {
        IntVec d(values.begin(), values.end());
        if (dot(d, st.r) == 0) {
            bool known = false;
            for (const IntVec& rep : representatives) {
                if (oracle_is_principal(st, Divisor{st.graph, d - rep})) {
                    known = true;
                    break;
                }
            }
            if (!known) representatives.push_back(std::move(d));
        }
        std::size_t pos = n;
        while (pos > 0 && values[pos - 1] == radius) values[--pos] = -radius;
        if (pos == 0) break;
        ++values[pos - 1];
    }
    return static_cast<long>(representatives.size());
}

}  // namespace testsupport
