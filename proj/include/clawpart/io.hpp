#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "clawpart/interval.hpp"

namespace clawpart {

/// Input error with the 1-based line number where it occurred.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Interval family text format: one `<id> <left> <right>` per line,
/// ASCII decimal integers separated by single spaces. Lines starting
/// with `#` and blank lines are ignored.
IntervalFamily parse_family(std::istream& in);
IntervalFamily parse_family_file(const std::string& path);
void write_family(std::ostream& out, const IntervalFamily& family);
void write_family_file(const std::string& path, const IntervalFamily& family);

/// Partition text format: one `<id> <part>` per line, sorted by id,
/// parts 1-based. `#` comments and blank lines are ignored.
std::map<int, int> parse_partition_assignment(std::istream& in);
std::map<int, int> parse_partition_file(const std::string& path);
void write_partition_assignment(std::ostream& out, const std::map<int, int>& assignment);

}  // namespace clawpart
