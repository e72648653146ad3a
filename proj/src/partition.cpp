#include "clawpart/partition.hpp"

#include <stdexcept>
#include <string>

namespace clawpart {

Partition make_partition(const std::map<int, int>& raw, int v) {
    if (v < 1) throw std::invalid_argument("make_partition: v must be positive");
    std::map<int, int> renumber;
    for (const auto& [id, part] : raw) {
        (void)id;
        if (part < 1) throw std::invalid_argument("make_partition: part indices must be >= 1");
        renumber.emplace(part, 0);
    }
    int next = 0;
    for (auto& [part, compact] : renumber) {
        (void)part;
        compact = ++next;
    }
    Partition result;
    result.v = v;
    result.parts_count = next;
    for (const auto& [id, part] : raw) {
        result.assignment.emplace(id, renumber.at(part));
    }
    return result;
}

std::vector<int> part_ids(const Partition& partition, int part) {
    std::vector<int> result;
    for (const auto& [id, p] : partition.assignment) {
        if (p == part) result.push_back(id);
    }
    return result;
}

std::optional<ClawWitness> verify_partition(const IntervalFamily& family,
                                            const Partition& partition, int v) {
    if (partition.assignment.size() != family.size()) {
        throw std::invalid_argument("verify_partition: partition covers " +
                                    std::to_string(partition.assignment.size()) +
                                    " ids but the family has " +
                                    std::to_string(family.size()));
    }
    for (const Interval& iv : family) {
        if (!partition.assignment.count(iv.id)) {
            throw std::invalid_argument("verify_partition: family id " +
                                        std::to_string(iv.id) +
                                        " missing from the partition");
        }
    }
    for (int part = 1; part <= partition.parts_count; ++part) {
        IntervalFamily sub = family.induced(part_ids(partition, part));
        if (auto witness = find_claw(sub, v)) return witness;
    }
    return std::nullopt;
}

}  // namespace clawpart
