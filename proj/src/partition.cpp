#include "orbitclass/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace orbitclass {

static void validate_parts(const std::vector<int>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0)
            throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw Error(ErrorKind::InvalidArgument, "partition parts must weakly decrease");
    }
}

Partition::Partition(std::initializer_list<int> p) : parts(p) { validate_parts(parts); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    validate_parts(parts);
}

int Partition::weight() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

Partition Partition::transpose() const {
    if (parts.empty()) return {};
    std::vector<int> tr(parts[0], 0);
    for (int i = 0; i < parts[0]; ++i)
        for (int p : parts)
            if (p > i) ++tr[i];
    return Partition(std::move(tr));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < num_parts(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Tableau> sst_enumerate(const Partition& shape, int max_entry) {
    std::vector<Tableau> out;
    if (shape.empty()) {
        out.push_back({shape, {}});
        return out;
    }
    if (shape.num_parts() > max_entry) return out;  // strict column increase impossible
    std::vector<std::vector<int>> fill(shape.num_parts());
    for (int i = 0; i < shape.num_parts(); ++i) fill[i].assign(shape.parts[i], 0);

    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == shape.num_parts()) {
            out.push_back({shape, fill});
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= shape.parts[i]) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[i][j - 1]);
        if (i > 0 && j < shape.parts[i - 1]) lo = std::max(lo, fill[i - 1][j] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            fill[i][j] = v;
            rec(ni, nj);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    if (rows <= 0 || cols <= 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    std::function<void(int, int)> rec2 = [&](int i, int maxp) {
        std::vector<int> p = cur;
        out.emplace_back(std::move(p));
        if (i == rows) return;
        for (int v = maxp; v >= 1; --v) {
            cur.push_back(v);
            rec2(i + 1, v);
            cur.pop_back();
        }
    };
    rec2(0, cols);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        std::vector<int> p = cur;
        out.emplace_back(std::move(p));
        if (i == lam.num_parts()) return;
        int hi = std::min(lam.parts[i], cur.empty() ? lam.parts[0] : cur.back());
        for (int v = hi; v >= 1; --v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition rect_complement(const Partition& lam, int rows, int cols) {
    if (!lam.fits_in(rows, cols))
        throw Error(ErrorKind::DoesNotFit, "partition does not fit the box");
    std::vector<int> mu;
    for (int i = 1; i <= rows; ++i) {
        int v = cols - lam.part(rows + 1 - i);
        if (v > 0) mu.push_back(v);
    }
    return Partition(std::move(mu));
}

}  // namespace orbitclass
