#include "arithgraph/arith.hpp"

#include <stdexcept>
#include <utility>

#include "arithgraph/errors.hpp"
#include "arithgraph/snf.hpp"

namespace arithgraph {

namespace {

void check_positive(const Graph& g, const IntVec& v, const char* which) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] <= 0)
            fail("NonPositiveEntry", std::string(which) + "(" + g.label(static_cast<int>(i)) +
                                         ") = " + v[i].get_str() + " is not positive");
}

void check_lengths(const Graph& g, const IntVec& v) {
    if (v.size() != g.vertex_count())
        fail("LengthMismatch", "vector length " + std::to_string(v.size()) +
                                   " does not match vertex count " +
                                   std::to_string(g.vertex_count()));
}

}  // namespace

ArithStructure validate_structure(const Graph& g, IntVec r, IntVec s) {
    check_lengths(g, r);
    check_lengths(g, s);
    check_positive(g, r, "r");
    check_positive(g, s, "s");
    if (vec_gcd(r) != 1) fail("GcdNotOne", "gcd of r is " + vec_gcd(r).get_str());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Int sum = 0;
        for (int w : g.neighbors(static_cast<int>(v))) sum += r[static_cast<std::size_t>(w)];
        if (s[v] * r[v] != sum)
            fail("DefiningEquationViolated",
                 "at vertex " + g.label(static_cast<int>(v)) + ": s*r = " + Int(s[v] * r[v]).get_str() +
                     " but neighbor sum is " + sum.get_str());
    }

    ArithStructure st{g, std::move(r), std::move(s)};
    // Rank n-1 is guaranteed for a connected graph once the defining
    // equations hold; a violation here is a library bug.
    if (smith_normal_form(laplacian(st)).rank != g.vertex_count() - 1)
        throw std::logic_error("arithmetical Laplacian does not have rank n-1");
    return st;
}

ArithStructure natural_structure(const Graph& g) {
    IntVec r(g.vertex_count(), 1);
    return validate_structure(g, std::move(r), g.degree_vector());
}

ArithStructure structure_from_r(const Graph& g, IntVec r) {
    check_lengths(g, r);
    check_positive(g, r, "r");
    if (vec_gcd(r) != 1) fail("GcdNotOne", "gcd of r is " + vec_gcd(r).get_str());
    IntVec s(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Int sum = 0;
        for (int w : g.neighbors(static_cast<int>(v))) sum += r[static_cast<std::size_t>(w)];
        Int rem;
        mpz_tdiv_r(rem.get_mpz_t(), sum.get_mpz_t(), r[v].get_mpz_t());
        if (rem != 0)
            fail("DivisibilityFails", "at vertex " + g.label(static_cast<int>(v)) +
                                          ": neighbor sum " + sum.get_str() +
                                          " is not divisible by r = " + r[v].get_str());
        mpz_divexact(s[v].get_mpz_t(), sum.get_mpz_t(), r[v].get_mpz_t());
    }
    return validate_structure(g, std::move(r), std::move(s));
}

ArithStructure structure_from_s(const Graph& g, IntVec s) {
    check_lengths(g, s);
    check_positive(g, s, "s");
    IntMatrix l = IntMatrix::diagonal(s) - g.adjacency_matrix();
    IntVec r;
    try {
        r = integer_kernel_primitive(l);
    } catch (const DomainError& e) {
        fail("NotRankDeficientByOne",
             "s does not define an arithmetical structure (" + std::string(e.code()) + ")");
    }
    for (std::size_t v = 0; v < r.size(); ++v)
        if (r[v] <= 0)
            fail("KernelNotPositive", "kernel entry at vertex " + g.label(static_cast<int>(v)) +
                                          " is " + r[v].get_str());
    return validate_structure(g, std::move(r), std::move(s));
}

IntMatrix laplacian(const ArithStructure& st) {
    return IntMatrix::diagonal(st.s) - st.graph.adjacency_matrix();
}

std::vector<ArithStructure> enumerate_structures(const Graph& g, long max_r) {
    if (max_r < 1) fail("InvalidBound", "max_r must be at least 1");
    const std::size_t n = g.vertex_count();
    std::vector<ArithStructure> found;
    std::vector<long> r(n, 1);
    for (;;) {
        IntVec candidate(r.begin(), r.end());
        if (vec_gcd(candidate) == 1) {
            try {
                found.push_back(structure_from_r(g, std::move(candidate)));
            } catch (const DomainError&) {
                // candidate fails divisibility; skip
            }
        }
        std::size_t pos = n;
        while (pos > 0 && r[pos - 1] == max_r) r[--pos] = 1;
        if (pos == 0) break;
        ++r[pos - 1];
    }
    return found;
}

}  // namespace arithgraph
