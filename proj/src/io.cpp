#include "clawpart/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace clawpart {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

// Reads exactly n decimal integers from the line, nothing else.
std::vector<std::int64_t> parse_ints(const std::string& line, int n, int lineno) {
    std::istringstream ss(line);
    std::vector<std::int64_t> values;
    std::int64_t x;
    while (ss >> x) values.push_back(x);
    std::string trailing;
    if (!ss.eof()) {
        ss.clear();
        ss >> trailing;
    }
    if (!trailing.empty() || static_cast<int>(values.size()) != n) {
        throw parse_error(lineno, "expected " + std::to_string(n) +
                                      " integers, got '" + line + "'");
    }
    return values;
}

}  // namespace

IntervalFamily parse_family(std::istream& in) {
    IntervalFamily family;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        auto v = parse_ints(line, 3, lineno);
        if (v[0] < 0) throw parse_error(lineno, "interval id must be non-negative");
        if (v[0] > std::numeric_limits<int>::max()) {
            throw parse_error(lineno, "interval id out of range");
        }
        if (v[1] >= v[2]) {
            throw parse_error(lineno, "interval must satisfy left < right");
        }
        try {
            family.add(static_cast<int>(v[0]), v[1], v[2]);
        } catch (const std::invalid_argument& e) {
            throw parse_error(lineno, e.what());
        }
    }
    return family;
}

IntervalFamily parse_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_family(in);
}

void write_family(std::ostream& out, const IntervalFamily& family) {
    for (const Interval& iv : family) {
        out << iv.id << ' ' << iv.left << ' ' << iv.right << '\n';
    }
}

void write_family_file(const std::string& path, const IntervalFamily& family) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_family(out, family);
}

std::map<int, int> parse_partition_assignment(std::istream& in) {
    std::map<int, int> assignment;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        auto v = parse_ints(line, 2, lineno);
        if (v[0] < 0 || v[0] > std::numeric_limits<int>::max()) {
            throw parse_error(lineno, "interval id out of range");
        }
        if (v[1] < 1 || v[1] > std::numeric_limits<int>::max()) {
            throw parse_error(lineno, "part index must be a positive integer");
        }
        auto [it, inserted] = assignment.emplace(static_cast<int>(v[0]),
                                                 static_cast<int>(v[1]));
        if (!inserted) throw parse_error(lineno, "duplicate id " + std::to_string(v[0]));
    }
    return assignment;
}

std::map<int, int> parse_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_partition_assignment(in);
}

void write_partition_assignment(std::ostream& out, const std::map<int, int>& assignment) {
    for (const auto& [id, part] : assignment) {
        out << id << ' ' << part << '\n';
    }
}

}  // namespace clawpart
