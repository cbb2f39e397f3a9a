#include "orbitclass/matroid.hpp"

#include <algorithm>
#include <bit>

#include "orbitclass/error.hpp"

namespace orbitclass {

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<std::vector<Rat>> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 1 || cols < rows)
        throw Error(ErrorKind::InvalidArgument, "matrix requires 1 <= rows <= cols");
    if (static_cast<int>(entries_.size()) != rows)
        throw Error(ErrorKind::InvalidArgument, "entry row count mismatch");
    for (const auto& row : entries_)
        if (static_cast<int>(row.size()) != cols)
            throw Error(ErrorKind::InvalidArgument, "entry column count mismatch");
}

namespace {

// Exact Gaussian elimination rank of an arbitrary rational matrix given as
// row vectors; mutates its copy of the rows.
int rank_of_rows(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const int m = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < w && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = rank + 1; i < m; ++i) {
            if (rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (int j = col; j < w; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int matrix_rank(const RationalMatrix& m) {
    std::vector<std::vector<Rat>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    }
    return rank_of_rows(std::move(rows));
}

Matroid Matroid::from_bases(int n, int r, std::vector<std::uint32_t> bases) {
    if (n < 1 || n > 16)
        throw Error(ErrorKind::SizeLimit, "ground set size must be between 1 and 16");
    if (r < 0 || r > n)
        throw Error(ErrorKind::InvalidArgument, "rank must satisfy 0 <= r <= n");
    if (bases.empty())
        throw Error(ErrorKind::InvalidArgument, "a matroid has at least one basis");

    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t b : bases) {
        if ((b & ~full) != 0)
            throw Error(ErrorKind::InvalidArgument, "basis uses elements outside the ground set");
        if (std::popcount(b) != r)
            throw Error(ErrorKind::InvalidArgument, "every basis must have exactly r elements");
    }

    // Basis exchange: for B, B' and i in B \ B' there is j in B' \ B with
    // B - i + j a basis.
    for (std::uint32_t b1 : bases)
        for (std::uint32_t b2 : bases) {
            std::uint32_t out = b1 & ~b2;
            while (out) {
                std::uint32_t i = out & (~out + 1);
                out &= out - 1;
                bool found = false;
                std::uint32_t in = b2 & ~b1;
                while (in && !found) {
                    std::uint32_t j = in & (~in + 1);
                    in &= in - 1;
                    found = std::binary_search(bases.begin(), bases.end(), (b1 & ~i) | j);
                }
                if (!found)
                    throw Error(ErrorKind::InvalidArgument,
                                "basis list violates the exchange axiom");
            }
        }

    Matroid m;
    m.n_ = n;
    m.r_ = r;
    m.bases_ = std::move(bases);
    m.independent_.assign(std::size_t(1) << n, 0);
    for (std::uint32_t b : m.bases_) {
        // Mark every subset of b independent.
        std::uint32_t s = b;
        while (true) {
            m.independent_[s] = 1;
            if (s == 0) break;
            s = (s - 1) & b;
        }
    }
    return m;
}

Matroid Matroid::uniform(int r, int n) {
    return from_bases(n, r, all_subsets(n, r));
}

bool Matroid::is_basis(std::uint32_t s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool Matroid::is_uniform() const {
    std::uint64_t count = 1;
    for (int i = 0; i < r_; ++i) count = count * (n_ - i) / (i + 1);
    return bases_.size() == count;
}

std::uint32_t Matroid::lex_first_basis(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw Error(ErrorKind::InvalidArgument, "permutation length must equal the ground set size");
    std::uint32_t seen = 0, kept = 0;
    for (int e : perm) {
        if (e < 1 || e > n_ || (seen & (1u << (e - 1))))
            throw Error(ErrorKind::InvalidArgument, "not a permutation of the ground set");
        seen |= 1u << (e - 1);
        std::uint32_t cand = kept | (1u << (e - 1));
        if (independent_[cand]) kept = cand;
    }
    return kept;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Matroid::exchange_edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t i = 0; i < bases_.size(); ++i)
        for (std::size_t j = i + 1; j < bases_.size(); ++j)
            if (std::popcount(bases_[i] ^ bases_[j]) == 2)
                edges.emplace_back(bases_[i], bases_[j]);
    return edges;
}

Matroid matroid_of_matrix(const RationalMatrix& v) {
    const int r = v.rows(), n = v.cols();
    if (n > 16)
        throw Error(ErrorKind::SizeLimit, "ground set size must be between 1 and 16");
    int rk = matrix_rank(v);
    if (rk < r)
        throw Error(ErrorKind::RankDeficient,
                    "matrix rank is " + std::to_string(rk) + ", expected full row rank " +
                        std::to_string(r));

    std::vector<std::uint32_t> bases;
    for (std::uint32_t s : all_subsets(n, r)) {
        std::vector<std::vector<Rat>> cols_rows(r, std::vector<Rat>(r));
        int c = 0;
        for (int j = 0; j < n; ++j)
            if (s & (1u << j)) {
                for (int i = 0; i < r; ++i) cols_rows[i][c] = v.at(i, j);
                ++c;
            }
        if (rank_of_rows(std::move(cols_rows)) == r) bases.push_back(s);
    }
    return Matroid::from_bases(n, r, std::move(bases));
}

std::vector<std::uint32_t> all_subsets(int n, int r) {
    std::vector<std::uint32_t> out;
    if (r < 0 || r > n) return out;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        std::uint32_t s = 0;
        for (int i : idx) s |= 1u << i;
        out.push_back(s);
        int k = r - 1;
        while (k >= 0 && idx[k] == n - r + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> subset_elements(std::uint32_t s) {
    std::vector<int> out;
    for (int j = 0; s; ++j, s >>= 1)
        if (s & 1u) out.push_back(j + 1);
    return out;
}

std::uint32_t subset_of_elements(const std::vector<int>& elems, int n) {
    std::uint32_t s = 0;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw Error(ErrorKind::InvalidArgument,
                        "element " + std::to_string(e) + " outside the ground set [1," +
                            std::to_string(n) + "]");
        std::uint32_t bit = 1u << (e - 1);
        if (s & bit)
            throw Error(ErrorKind::InvalidArgument,
                        "repeated element " + std::to_string(e) + " in subset");
        s |= bit;
    }
    return s;
}

}  // namespace orbitclass
