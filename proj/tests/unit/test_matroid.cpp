#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "orbitclass/matroid.hpp"

using namespace orbitclass;

namespace {

RationalMatrix mat(int rows, int cols, std::vector<std::vector<long>> entries) {
    std::vector<std::vector<Rat>> conv(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (long v : entries[i]) conv[i].push_back(Rat(v));
    return RationalMatrix(rows, cols, std::move(conv));
}

}  // namespace

TEST_CASE("matroid_of_matrix identity") {
    Matroid m = matroid_of_matrix(mat(2, 2, {{1, 0}, {0, 1}}));
    CHECK(m.n() == 2);
    CHECK(m.rank() == 2);
    CHECK(m.bases() == std::vector<std::uint32_t>{0b11u});
}

TEST_CASE("matroid_of_matrix generic 2x4 is uniform") {
    Matroid m = matroid_of_matrix(mat(2, 4, {{1, 1, 1, 1}, {0, 1, 2, 3}}));
    CHECK(m == Matroid::uniform(2, 4));
    CHECK(m.is_uniform());
}

TEST_CASE("matroid_of_matrix with two parallel pairs") {
    Matroid m = matroid_of_matrix(mat(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(m.bases().size() == 4);
    CHECK_FALSE(m.is_basis(0b0011u));  // {1,2}
    CHECK_FALSE(m.is_basis(0b1100u));  // {3,4}
    CHECK(m.is_basis(0b0101u));
    CHECK_FALSE(m.is_uniform());
}

TEST_CASE("matroid_of_matrix rejects rank-deficient input") {
    try {
        matroid_of_matrix(mat(2, 3, {{1, 2, 3}, {2, 4, 6}}));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RankDeficient);
        CHECK(std::string(e.what()).find("rank") != std::string::npos);
    }
}

TEST_CASE("is_uniform corner cases") {
    CHECK(Matroid::uniform(2, 4).is_uniform());
    // r = n: the single full basis is all of C(n,n).
    Matroid full = matroid_of_matrix(mat(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(full.is_uniform());
}

TEST_CASE("lex_first_basis greedy scan") {
    // Uniform: the first r scanned elements always form a basis.
    CHECK(Matroid::uniform(2, 4).lex_first_basis({3, 1, 4, 2}) == 0b0101u);  // {1,3}

    // With {1,2} dependent, element 2 is rejected and 3 is kept.
    std::vector<std::uint32_t> bases;
    for (std::uint32_t b : all_subsets(4, 2))
        if (b != 0b0011u) bases.push_back(b);
    Matroid m = Matroid::from_bases(4, 2, bases);
    CHECK(m.lex_first_basis({1, 2, 3, 4}) == 0b0101u);  // {1,3}

    // Identity permutation returns the lex-minimal basis (element-list order).
    std::vector<std::vector<int>> lists;
    for (std::uint32_t b : m.bases()) lists.push_back(subset_elements(b));
    std::vector<int> lexmin = *std::min_element(lists.begin(), lists.end());
    CHECK(m.lex_first_basis({1, 2, 3, 4}) == subset_of_elements(lexmin, 4));
}

TEST_CASE("lex_first_basis validates the permutation") {
    Matroid m = Matroid::uniform(2, 4);
    CHECK_THROWS_AS(m.lex_first_basis({1, 2, 3}), Error);
    CHECK_THROWS_AS(m.lex_first_basis({1, 2, 3, 3}), Error);
}

TEST_CASE("lex_first_basis partitions the symmetric group") {
    for (const Matroid& m : {Matroid::uniform(2, 4),
                             Matroid::from_bases(4, 2, {0b0101u, 0b1001u, 0b0110u,
                                                        0b1010u, 0b1100u})}) {
        std::map<std::uint32_t, int> block_size;
        std::vector<int> perm(4);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::uint32_t B = m.lex_first_basis(perm);
            CHECK(m.is_basis(B));
            ++block_size[B];
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Every basis is hit, and the total is 4!.
        CHECK(block_size.size() == m.bases().size());
        int total = 0;
        for (const auto& [B, c] : block_size) total += c;
        CHECK(total == 24);
        // Uniform blocks have size r!(n-r)! = 4 each.
        if (m.is_uniform())
            for (const auto& [B, c] : block_size) CHECK(c == 4);
    }
}

TEST_CASE("exchange_edges") {
    CHECK(Matroid::uniform(1, 2).exchange_edges().size() == 1);
    CHECK(Matroid::uniform(2, 3).exchange_edges().size() == 3);
    CHECK(Matroid::from_bases(2, 2, {0b11u}).exchange_edges().empty());
}

TEST_CASE("from_bases enforces the exchange axiom") {
    // {1,2} and {3,4} alone do not satisfy basis exchange.
    CHECK_THROWS_AS(Matroid::from_bases(4, 2, {0b0011u, 0b1100u}), Error);
}

TEST_CASE("from_bases enforces the ground-set size limit") {
    try {
        Matroid::from_bases(17, 1, {1u});
        FAIL("expected SizeLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
}

TEST_CASE("matroid is invariant under row operations and column scaling") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> entry(-4, 4);
    auto base = mat(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    Matroid expect = matroid_of_matrix(base);
    int checked = 0;
    while (checked < 10) {
        // Random invertible g over Q and nonzero column scalars.
        long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        if (a * d - b * c == 0) continue;
        std::vector<long> scale(4);
        for (auto& s : scale) {
            do { s = entry(rng); } while (s == 0);
        }
        std::vector<std::vector<Rat>> rows(2, std::vector<Rat>(4));
        for (int j = 0; j < 4; ++j) {
            Rat x = base.at(0, j), y = base.at(1, j);
            rows[0][j] = (Rat(a) * x + Rat(b) * y) * Rat(scale[j]);
            rows[1][j] = (Rat(c) * x + Rat(d) * y) * Rat(scale[j]);
        }
        CHECK(matroid_of_matrix(RationalMatrix(2, 4, rows)) == expect);
        ++checked;
    }
}

TEST_CASE("independence queries") {
    Matroid m = matroid_of_matrix(mat(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(m.is_independent(0u));
    CHECK(m.is_independent(0b0001u));
    CHECK(m.is_independent(0b0011u) == false);  // {1,2} parallel
    CHECK(m.is_independent(0b0101u));
}

TEST_CASE("subset helpers") {
    CHECK(all_subsets(4, 2).size() == 6);
    CHECK(subset_elements(0b0101u) == std::vector<int>{1, 3});
    CHECK(subset_of_elements({1, 3}, 4) == 0b0101u);
    CHECK_THROWS_AS(subset_of_elements({0, 1}, 4), Error);
    CHECK_THROWS_AS(subset_of_elements({1, 1}, 4), Error);
    CHECK_THROWS_AS(subset_of_elements({5}, 4), Error);
}
