#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace clawpart {

using Coord = std::int64_t;

/// Open interval (left, right) with integer endpoints; one vertex of the graph.
struct Interval {
    int id = 0;
    Coord left = 0;
    Coord right = 1;

    Coord length() const { return right - left; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Two open intervals intersect iff they share an interior point.
/// Intervals touching only at an endpoint do not intersect.
inline bool intersects(const Interval& a, const Interval& b) {
    return a.left < b.right && b.left < a.right;
}

/// a properly contains b: superset as point sets, strict on at least one end.
/// An interval never properly contains an exact copy of itself.
inline bool properly_contains(const Interval& a, const Interval& b) {
    return a.left <= b.left && b.right <= a.right &&
           (a.left < b.left || b.right < a.right);
}

/// Ordered family of open intervals with unique ids. Iteration order is the
/// construction order, so equal construction sequences give equal behavior.
/// Duplicate coordinates are allowed, duplicate ids are not.
class IntervalFamily {
public:
    IntervalFamily() = default;
    explicit IntervalFamily(std::vector<Interval> intervals);

    void add(Interval iv);
    void add(int id, Coord left, Coord right) { add(Interval{id, left, right}); }

    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }

    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    auto begin() const { return intervals_.begin(); }
    auto end() const { return intervals_.end(); }

    bool contains_id(int id) const { return index_.count(id) != 0; }
    std::optional<std::size_t> index_of(int id) const;
    /// Interval with the given id; throws std::out_of_range if absent.
    const Interval& get(int id) const;

    std::vector<int> ids() const;

    /// Subfamily with exactly the given ids, in family order.
    /// Unknown ids throw std::invalid_argument.
    IntervalFamily induced(const std::vector<int>& member_ids) const;

    /// Copy with one id removed, preserving order of the rest.
    IntervalFamily without(int id) const;

private:
    std::vector<Interval> intervals_;
    std::unordered_map<int, std::size_t> index_;
};

}  // namespace clawpart
