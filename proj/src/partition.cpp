#include "chiy/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chiy {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::merged(const Partition& o) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& s) {
    if (s.empty()) return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, comma - pos);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: malformed key '" + s + "'");
        }
        if (used != tok.size() || v <= 0)
            throw std::invalid_argument("Partition: malformed key '" + s + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n, int max_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

}  // namespace chiy
