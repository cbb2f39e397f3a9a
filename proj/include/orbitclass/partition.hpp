#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "orbitclass/error.hpp"

namespace orbitclass {

// Weakly decreasing sequence of positive integers; empty = the zero partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int num_parts() const { return static_cast<int>(parts.size()); }
    int weight() const;                       // sum of parts
    int part(int i) const {                   // 1-indexed, 0 beyond the end
        return (i >= 1 && i <= num_parts()) ? parts[i - 1] : 0;
    }
    bool empty() const { return parts.empty(); }
    bool fits_in(int rows, int cols) const {
        return num_parts() <= rows && (parts.empty() || parts[0] <= cols);
    }

    Partition transpose() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const {  // by weight, then lex
        if (weight() != o.weight()) return weight() < o.weight();
        return parts < o.parts;
    }

    std::string to_string() const;
};

// Semistandard filling: rows weakly increase left to right, columns strictly
// increase top to bottom.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
};

// All semistandard tableaux of the given shape with entries in {1..max_entry}.
std::vector<Tableau> sst_enumerate(const Partition& shape, int max_entry);

// All partitions fitting in a rows x cols box, sorted by (weight, lex).
std::vector<Partition> partitions_in_box(int rows, int cols);

// All partitions contained in lam (diagram containment), sorted by (weight, lex).
std::vector<Partition> subpartitions(const Partition& lam);

// 180-degree rotated complement inside a rows x cols box; errors DoesNotFit.
Partition rect_complement(const Partition& lam, int rows, int cols);

}  // namespace orbitclass
