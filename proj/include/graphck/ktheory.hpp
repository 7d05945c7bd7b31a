#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphck/graph.hpp"

namespace graphck {

using Integer = boost::multiprecision::cpp_int;

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> data;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static IntMatrix identity(std::size_t n);

    Integer& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// |V| × |V_reg|; the column of a regular vertex v is A(v, ·)ᵀ − χ_v.
IntMatrix reg_matrix(const Graph& g);

struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    std::size_t rank = 0;
};

/// S = U·M·V with S diagonal, nonnegative, d1 | d2 | ... and zeros last.
/// The identity, unimodularity of U and V and the divisibility chain are
/// re-checked on every call; a failure throws InternalError.
SmithForm smith_normal_form(const IntMatrix& m);

struct KTheoryPair {
    std::vector<Integer> k0_invariant_factors;  // all > 1, divisibility order
    std::size_t k0_free_rank = 0;
    std::size_t k1_free_rank = 0;

    friend bool operator==(const KTheoryPair&, const KTheoryPair&) = default;
};

/// K0 = coker(reg_matrix), K1 = ker(reg_matrix).
KTheoryPair k_groups(const Graph& g);

/// Coordinates of a K0 element in the diagonal presentation: entry i lies in
/// [0, moduli[i]) when moduli[i] > 0 and is free when moduli[i] == 0.
struct K0Class {
    std::vector<Integer> residues;
    std::vector<Integer> moduli;

    bool is_zero() const;

    friend bool operator==(const K0Class&, const K0Class&) = default;
    friend K0Class operator+(const K0Class& a, const K0Class& b);
};

/// Reduction of integer vectors over g's vertices to canonical K0 classes.
class K0Presentation {
public:
    explicit K0Presentation(const Graph& g);

    std::size_t dimension() const { return U_.rows; }
    K0Class reduce(const std::vector<Integer>& x) const;
    K0Class zero() const;

private:
    IntMatrix U_;
    std::vector<Integer> moduli_;
};

K0Class k0_reduce(const Graph& g, const std::vector<Integer>& x);

} // namespace graphck
