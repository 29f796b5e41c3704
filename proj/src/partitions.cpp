#include "nesthilb/partitions.hpp"

#include "nesthilb/error.hpp"

#include <numeric>
#include <stdexcept>

namespace nesthilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row(int j) const { return j >= 0 && j < length() ? parts_[j] : 0; }

int Partition::column(int i) const {
    int h = 0;
    while (h < length() && parts_[h] > i)
        ++h;
    return h;
}

bool Partition::contains(const Partition &other) const {
    if (other.length() > length())
        return false;
    for (int j = 0; j < other.length(); ++j)
        if (other.parts_[j] > parts_[j])
            return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    for (int i = 0; i < row(0); ++i)
        cols.push_back(column(i));
    return Partition(std::move(cols));
}

std::string to_string(const Partition &mu) {
    std::string out = "[";
    for (int j = 0; j < mu.length(); ++j) {
        if (j)
            out += ",";
        out += std::to_string(mu.parts()[j]);
    }
    return out + "]";
}

int arm(const Partition &mu, int i, int j) { return mu.row(j) - i - 1; }
int leg(const Partition &mu, int i, int j) { return mu.column(i) - j - 1; }

namespace {

void generate(int remaining, int max_part, std::vector<int> &prefix, std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        generate(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

long long partition_count(int n) {
    if (n < 0)
        return 0;
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[m - g1];
            if (g2 <= m)
                total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return p[n];
}

std::vector<NestedPair> nested_pairs(int n1, int n2) {
    if (n2 < 0 || n1 < n2)
        throw Error(ErrorKind::InvalidNesting,
                    "need n1 >= n2 >= 0, got (" + std::to_string(n1) + ", " + std::to_string(n2) + ")");
    std::vector<NestedPair> out;
    const auto inners = partitions_of(n2);
    for (const auto &outer : partitions_of(n1))
        for (const auto &inner : inners)
            if (outer.contains(inner))
                out.push_back({outer, inner});
    return out;
}

LocalCharacter box_char(const Partition &mu) {
    LocalCharacter out;
    for (int j = 0; j < mu.length(); ++j)
        for (int i = 0; i < mu.row(j); ++i)
            out.add_term({i, j}, 1);
    return out;
}

} // namespace nesthilb
