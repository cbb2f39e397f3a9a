#include "doctest.h"
#include "orbitclass/partition.hpp"

using namespace orbitclass;

TEST_CASE("partition construction and accessors") {
    Partition empty;
    CHECK(empty.empty());
    CHECK(empty.weight() == 0);
    CHECK(empty.num_parts() == 0);
    CHECK(empty.part(1) == 0);

    Partition lam({3, 1});
    CHECK(lam.weight() == 4);
    CHECK(lam.num_parts() == 2);
    CHECK(lam.part(1) == 3);
    CHECK(lam.part(2) == 1);
    CHECK(lam.part(3) == 0);

    CHECK_THROWS_AS(Partition({1, 2}), Error);       // not weakly decreasing
    CHECK_THROWS_AS(Partition({2, 0, 1}), Error);    // zero before positive
    CHECK_THROWS_AS(Partition({2, -1}), Error);      // negative part
}

TEST_CASE("partition ordering is by weight then lex") {
    CHECK(Partition() < Partition({1}));
    CHECK(Partition({1, 1}) < Partition({2}));
    CHECK(Partition({2}) < Partition({1, 1, 1}));
    CHECK_FALSE(Partition({2}) < Partition({2}));
}

TEST_CASE("transpose") {
    CHECK(Partition({2, 1}).transpose() == Partition({2, 1}));
    CHECK(Partition({3}).transpose() == Partition({1, 1, 1}));
    CHECK(Partition({2, 2}).transpose() == Partition({2, 2}));
    CHECK(Partition().transpose() == Partition());
}

TEST_CASE("fits_in") {
    CHECK(Partition({2, 1}).fits_in(2, 2));
    CHECK_FALSE(Partition({3}).fits_in(2, 2));
    CHECK_FALSE(Partition({1, 1, 1}).fits_in(2, 2));
    CHECK(Partition().fits_in(0, 0));
}

TEST_CASE("sst_enumerate of a single cell with two letters") {
    auto ts = sst_enumerate(Partition({1}), 2);
    CHECK(ts.size() == 2);
}

TEST_CASE("sst_enumerate of (2,1) with two letters") {
    // The only fillings are 11/2 and 12/2.
    auto ts = sst_enumerate(Partition({2, 1}), 2);
    CHECK(ts.size() == 2);
}

TEST_CASE("sst_enumerate with an impossible column") {
    CHECK(sst_enumerate(Partition({1, 1, 1}), 2).empty());
}

TEST_CASE("sst_enumerate of the empty shape") {
    CHECK(sst_enumerate(Partition(), 3).size() == 1);
}

TEST_CASE("partitions_in_box") {
    auto ps = partitions_in_box(2, 2);
    CHECK(ps.size() == 6);  // {}, (1), (2), (1,1), (2,1), (2,2)
    CHECK(ps.front() == Partition());
    // Sorted ascending with no repeats.
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);

    // Degenerate boxes hold only the empty partition.
    CHECK(partitions_in_box(0, 3) == std::vector<Partition>{Partition()});
    CHECK(partitions_in_box(3, 0) == std::vector<Partition>{Partition()});
}

TEST_CASE("subpartitions") {
    auto ss = subpartitions(Partition({2, 1}));
    CHECK(ss.size() == 5);  // {}, (1), (2), (1,1), (2,1)
}

TEST_CASE("rect_complement basics") {
    CHECK(rect_complement(Partition(), 1, 1) == Partition({1}));
    CHECK(rect_complement(Partition({1}), 1, 1) == Partition());
    // Rotating the complement of a single cell in the 2x2 square leaves (2,1).
    CHECK(rect_complement(Partition({1}), 2, 2) == Partition({2, 1}));
    CHECK_THROWS_AS(rect_complement(Partition({3}), 2, 2), Error);
}

TEST_CASE("rect_complement error kind") {
    try {
        rect_complement(Partition({1, 1, 1}), 2, 2);
        FAIL("expected DoesNotFit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DoesNotFit);
    }
}

TEST_CASE("rect_complement is an involution") {
    for (int rows = 0; rows <= 3; ++rows)
        for (int cols = 0; cols <= 3; ++cols)
            for (const Partition& lam : partitions_in_box(rows, cols))
                CHECK(rect_complement(rect_complement(lam, rows, cols), rows, cols) == lam);
}
