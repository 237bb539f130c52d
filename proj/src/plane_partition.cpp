#include "rkc/plane_partition.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "rkc/errors.hpp"
#include "rkc/partition.hpp"

namespace rkc {

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty())
            throw PreconditionError("plane partition has an empty row above a nonempty one");
        if (i > 0 && row.size() > rows_[i - 1].size())
            throw PreconditionError("plane partition row lengths must weakly decrease");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] <= 0)
                throw PreconditionError("plane partition entries must be positive");
            if (j > 0 && row[j] > row[j - 1])
                throw PreconditionError("plane partition rows must weakly decrease");
            if (i > 0 && row[j] > rows_[i - 1][j])
                throw PreconditionError("plane partition columns must weakly decrease");
            size_ += row[j];
        }
    }
}

std::vector<PlanePartition::Point> PlanePartition::lattice_points() const
{
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(size_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            for (int h = 1; h <= rows_[i][j]; ++h)
                pts.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, h});
    return pts;
}

PlanePartition PlanePartition::from_lattice_points(const std::vector<Point>& points)
{
    int max_i = 0, max_j = 0;
    for (const auto& p : points) {
        if (p[0] < 1 || p[1] < 1 || p[2] < 1)
            throw PreconditionError("lattice points must have positive coordinates");
        max_i = std::max(max_i, p[0]);
        max_j = std::max(max_j, p[1]);
    }
    std::vector<std::vector<int>> height(static_cast<std::size_t>(max_i), std::vector<int>(static_cast<std::size_t>(max_j), 0));
    for (const auto& p : points) {
        auto& h = height[static_cast<std::size_t>(p[0] - 1)][static_cast<std::size_t>(p[1] - 1)];
        h = std::max(h, p[2]);
    }
    std::vector<std::vector<int>> rows;
    for (auto& row : height) {
        while (!row.empty() && row.back() == 0)
            row.pop_back();
        rows.push_back(row);
    }
    PlanePartition pp(std::move(rows));
    // Downward closure holds iff every stack is full and the counts agree.
    if (static_cast<std::size_t>(pp.size()) != points.size())
        throw PreconditionError("lattice points are not an order ideal");
    return pp;
}

std::string PlanePartition::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            os << (j ? "," : "") << rows_[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Rows are chosen top to bottom; each row is a partition with at most `cols`
// parts contained in the row above.
template <typename Visit>
void rect_rec(int remaining, int rows_left, const std::vector<int>& above, int cols,
              std::vector<std::vector<int>>& cur, Visit&& visit)
{
    if (remaining == 0) {
        visit(cur);
        return;
    }
    if (rows_left == 0)
        return;
    std::vector<int> bound(static_cast<std::size_t>(cols), remaining);
    if (!cur.empty())
        for (std::size_t j = 0; j < bound.size(); ++j)
            bound[j] = j < above.size() ? std::min(remaining, above[j]) : 0;
    const Partition inside(bound);
    // Lower rows can hold at most (rows_left - 1) copies of this row's sum.
    for (int m = remaining; m >= 1 && static_cast<long>(m) * rows_left >= remaining; --m) {
        for (const auto& p : partitions_of(m, inside)) {
            std::vector<int> row(p.parts().begin(), p.parts().end());
            cur.push_back(row);
            rect_rec(remaining - m, rows_left - 1, row, cols, cur, visit);
            cur.pop_back();
        }
    }
}

} // namespace

std::vector<PlanePartition> plane_partitions_in_rect(int k, int rows, int cols)
{
    std::vector<PlanePartition> out;
    if (k < 0)
        return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (rows <= 0 || cols <= 0)
        return out;
    std::vector<std::vector<int>> cur;
    rect_rec(k, rows, {}, cols, cur, [&](const std::vector<std::vector<int>>& r) { out.emplace_back(r); });
    return out;
}

BigInt count_plane_partitions_in_rect(int k, int rows, int cols)
{
    if (k < 0)
        return 0;
    if (k == 0)
        return 1;
    if (rows <= 0 || cols <= 0)
        return 0;
    std::uint64_t n = 0;
    std::vector<std::vector<int>> cur;
    rect_rec(k, rows, {}, cols, cur, [&](const std::vector<std::vector<int>>&) { ++n; });
    return BigInt(static_cast<unsigned long>(n));
}

namespace {

struct BoxWalker {
    int r, s, t;
    std::vector<int> grid; // r*s, row-major
    std::vector<std::uint64_t> counts;

    void rec(int cell, int size)
    {
        if (cell == r * s) {
            ++counts[static_cast<std::size_t>(size)];
            return;
        }
        const int i = cell / s, j = cell % s;
        int cap = t;
        if (i > 0)
            cap = std::min(cap, grid[static_cast<std::size_t>(cell - s)]);
        if (j > 0)
            cap = std::min(cap, grid[static_cast<std::size_t>(cell - 1)]);
        for (int h = 0; h <= cap; ++h) {
            grid[static_cast<std::size_t>(cell)] = h;
            rec(cell + 1, size + h);
        }
    }
};

} // namespace

std::vector<BigInt> plane_partitions_in_box(const BoxSpec& box)
{
    if (box.r < 0 || box.s < 0 || box.t < 0)
        throw PreconditionError("box sides must be nonnegative");
    const int cells = box.r * box.s;
    BoxWalker w{box.r, box.s, box.t, std::vector<int>(static_cast<std::size_t>(cells), 0),
                std::vector<std::uint64_t>(static_cast<std::size_t>(cells * box.t + 1), 0)};
    w.rec(0, 0);
    std::vector<BigInt> out;
    out.reserve(w.counts.size());
    for (auto c : w.counts)
        out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

} // namespace rkc
