#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace chiy {

// Integer partition: a nonincreasing list of positive parts. Indexes the
// Chern-class monomial c_{p1} c_{p2} ... ; the empty partition is the
// constant monomial 1.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // Multiset union of parts; the index of a product of monomials.
    Partition merged(const Partition& o) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    // Comma-joined parts, e.g. "2,1,1"; the empty partition prints as "".
    std::string str() const;
    static Partition parse(const std::string& s);

private:
    std::vector<int> parts_;
};

// All partitions of weight exactly n with parts at most max_part,
// in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_part);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

}  // namespace chiy
