#pragma once

#include "nesthilb/charalg.hpp"

#include <compare>
#include <string>
#include <vector>

namespace nesthilb {

/// Integer partition stored as weakly decreasing positive parts. Row j has
/// parts()[j] boxes; box (i, j) carries the monomial t1^i t2^j.
class Partition {
  public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Length of row j (0 past the last part).
    int row(int j) const;
    /// Height of column i.
    int column(int i) const;
    bool contains_box(int i, int j) const { return i >= 0 && j >= 0 && i < row(j); }

    /// Boxwise containment: other is a sub-diagram of *this.
    bool contains(const Partition &other) const;

    Partition conjugate() const;

    auto operator<=>(const Partition &o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition &o) const { return parts_ == o.parts_; }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::string to_string(const Partition &mu);

/// Signed arm length of box (i, j) relative to mu; negative outside mu.
int arm(const Partition &mu, int i, int j);
/// Signed leg length of box (i, j) relative to mu.
int leg(const Partition &mu, int i, int j);

/// A pair of partitions at one fixed point: outer = mu1 (length n1 side),
/// inner = mu2. Configurations on the nested scheme require inner within
/// outer; on the product of Hilbert schemes the two are independent.
struct NestedPair {
    Partition outer;
    Partition inner;

    bool is_nested() const { return outer.contains(inner); }

    auto operator<=>(const NestedPair &) const = default;
    bool operator==(const NestedPair &) const = default;
};

/// All partitions of n in lexicographically descending order.
std::vector<Partition> partitions_of(int n);

/// p(n) by Euler's pentagonal recurrence.
long long partition_count(int n);

/// All nested pairs (mu1 |- n1, mu2 |- n2, mu2 within mu1). Throws
/// InvalidNesting when n1 < n2 or either is negative.
std::vector<NestedPair> nested_pairs(int n1, int n2);

/// Sum over boxes of t1^i t2^j.
LocalCharacter box_char(const Partition &mu);

} // namespace nesthilb
