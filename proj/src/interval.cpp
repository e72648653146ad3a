#include "clawpart/interval.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace clawpart {

IntervalFamily::IntervalFamily(std::vector<Interval> intervals) {
    for (const Interval& iv : intervals) add(iv);
}

void IntervalFamily::add(Interval iv) {
    if (iv.id < 0) {
        throw std::invalid_argument("interval id must be non-negative, got " +
                                    std::to_string(iv.id));
    }
    if (iv.left >= iv.right) {
        throw std::invalid_argument("interval " + std::to_string(iv.id) +
                                    " has empty extent (" + std::to_string(iv.left) +
                                    ", " + std::to_string(iv.right) + ")");
    }
    auto [it, inserted] = index_.emplace(iv.id, intervals_.size());
    if (!inserted) {
        throw std::invalid_argument("duplicate interval id " + std::to_string(iv.id));
    }
    intervals_.push_back(iv);
}

std::optional<std::size_t> IntervalFamily::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const Interval& IntervalFamily::get(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw std::out_of_range("no interval with id " + std::to_string(id));
    }
    return intervals_[it->second];
}

std::vector<int> IntervalFamily::ids() const {
    std::vector<int> result;
    result.reserve(intervals_.size());
    for (const Interval& iv : intervals_) result.push_back(iv.id);
    return result;
}

IntervalFamily IntervalFamily::induced(const std::vector<int>& member_ids) const {
    std::unordered_set<int> wanted;
    wanted.reserve(member_ids.size());
    for (int id : member_ids) {
        if (!contains_id(id)) {
            throw std::invalid_argument("induced: id " + std::to_string(id) +
                                        " is not in the family");
        }
        wanted.insert(id);
    }
    IntervalFamily sub;
    for (const Interval& iv : intervals_) {
        if (wanted.count(iv.id)) sub.add(iv);
    }
    return sub;
}

IntervalFamily IntervalFamily::without(int id) const {
    IntervalFamily sub;
    for (const Interval& iv : intervals_) {
        if (iv.id != id) sub.add(iv);
    }
    return sub;
}

}  // namespace clawpart
