#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace arithgraph {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;

IntVec ivec(std::initializer_list<long> values);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVec& d);
    static IntMatrix from(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMatrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);

Int dot(const IntVec& a, const IntVec& b);
Int vec_gcd(const IntVec& v);
bool is_zero(const IntVec& v);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);

// a mod m with result in [0, m); requires m > 0.
Int mod_floor(const Int& a, const Int& m);

std::string to_string(const IntVec& v);
std::string to_string(const IntMatrix& m);
std::vector<std::string> decimal_strings(const IntVec& v);

}  // namespace arithgraph
