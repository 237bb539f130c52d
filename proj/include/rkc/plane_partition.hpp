#ifndef RKC_PLANE_PARTITION_HPP
#define RKC_PLANE_PARTITION_HPP

#include <array>
#include <string>
#include <vector>

#include "rkc/integer.hpp"

namespace rkc {

// A plane partition stored row-major: each row weakly decreasing and
// positive, row lengths weakly decreasing, columns weakly decreasing.
class PlanePartition {
public:
    using Point = std::array<int, 3>;

    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int num_cols() const noexcept { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
    [[nodiscard]] int height() const noexcept { return rows_.empty() ? 0 : rows_.front().front(); }

    // The order ideal in N^3: all (i, j, h), 1-based, with h <= entry(i, j).
    [[nodiscard]] std::vector<Point> lattice_points() const;
    static PlanePartition from_lattice_points(const std::vector<Point>& points);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

private:
    std::vector<std::vector<int>> rows_;
    int size_ = 0;
};

// Side lengths of the box B(r, s, t): base r x s, entries at most t.
struct BoxSpec {
    int r = 0;
    int s = 0;
    int t = 0;
};

// All plane partitions of k whose base fits in `rows` x `cols` (height unbounded).
std::vector<PlanePartition> plane_partitions_in_rect(int k, int rows, int cols);

// Number of plane partitions of k in a rows x cols rectangle, without materializing them.
BigInt count_plane_partitions_in_rect(int k, int rows, int cols);

// Size distribution of all plane partitions inside the box, by direct
// enumeration: entry m is the number of size m. Length r*s*t + 1.
std::vector<BigInt> plane_partitions_in_box(const BoxSpec& box);

} // namespace rkc

#endif
