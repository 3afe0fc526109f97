#pragma once

#include <stdexcept>
#include <string>

#include "umet/cantor.hpp"
#include "umet/embedding.hpp"
#include "umet/finite_space.hpp"

namespace umet {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
        : std::runtime_error(message), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Range set: one comma-separated list, e.g. "0,1/2,1,2". Unsorted input or
// a missing leading 0 is rejected.
RangeSet parse_range_set(const std::string& text);
std::string to_text(const RangeSet& range);

// Step function: a "range: ..." line, then one "bits value" line per cell,
// the root cell written "-". Non-partition cell sets and values outside the
// declared range set are rejected.
StepFunction parse_step_function(const std::string& text);
std::string to_text(const StepFunction& fn);

// Matrix: point labels on the first line, then one lower-triangle row per
// remaining point. An optional leading "range: ..." line declares a range
// set; otherwise it is derived from the entries.
FiniteUltraSpace parse_matrix(const std::string& text, bool strict);
std::string to_text(const FiniteUltraSpace& space);

// Sequence: one comma-separated weakly decreasing list; the zero tail is
// implicit ("0" denotes the zero sequence).
DecreasingSequence parse_sequence(const std::string& text);
std::string to_text(const DecreasingSequence& sequence);

}  // namespace umet
