#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitclass/numeric.hpp"

namespace orbitclass {

// Exact rational matrix, r rows by n columns, r <= n.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols, std::vector<std::vector<Rat>> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rat& at(int i, int j) const { return entries_[i][j]; }  // 0-based

  private:
    int rows_, cols_;
    std::vector<std::vector<Rat>> entries_;
};

// Rank by exact elimination.
int matrix_rank(const RationalMatrix& m);

// Collection of bases of a matroid on ground set {1..n}, each an r-subset
// stored as a bitmask (bit j-1 for element j). Validated against the basis
// exchange axiom on construction. Ground sets are capped at 16 elements.
class Matroid {
  public:
    static Matroid from_bases(int n, int r, std::vector<std::uint32_t> bases);
    static Matroid uniform(int r, int n);

    int n() const { return n_; }
    int rank() const { return r_; }
    const std::vector<std::uint32_t>& bases() const { return bases_; }

    bool is_basis(std::uint32_t s) const;
    // True when s is contained in some basis.
    bool is_independent(std::uint32_t s) const { return independent_[s]; }
    bool is_uniform() const;

    // Greedy scan of the permutation (1-based entries), keeping each element
    // whose addition preserves independence; the result is always a basis.
    std::uint32_t lex_first_basis(const std::vector<int>& perm) const;

    // All unordered pairs of bases differing in exactly one element (the
    // edges of the base polytope).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exchange_edges() const;

    bool operator==(const Matroid& o) const {
        return n_ == o.n_ && r_ == o.r_ && bases_ == o.bases_;
    }
    bool operator!=(const Matroid& o) const { return !(*this == o); }

  private:
    Matroid() = default;

    int n_ = 0, r_ = 0;
    std::vector<std::uint32_t> bases_;  // sorted ascending as integers
    std::vector<char> independent_;     // downward closure, indexed by bitmask
};

// Bases = column subsets with a nonzero maximal minor; errors RankDeficient
// when the matrix's rank is below its row count.
Matroid matroid_of_matrix(const RationalMatrix& v);

// All r-subsets of {1..n} as bitmasks, ascending as integers.
std::vector<std::uint32_t> all_subsets(int n, int r);

// Sorted 1-based element list of a bitmask.
std::vector<int> subset_elements(std::uint32_t s);
// Bitmask of a 1-based element list; validates range and distinctness.
std::uint32_t subset_of_elements(const std::vector<int>& elems, int n);

}  // namespace orbitclass
