#include "umet/range_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace umet {

RangeSet::RangeSet(std::vector<Rat> values) : values_(std::move(values)) {
    if (values_.empty() || !values_.front().is_zero())
        throw std::invalid_argument("range set: first value must be 0");
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (!(values_[i - 1] < values_[i]))
            throw std::invalid_argument("range set: values must be strictly increasing");
}

RangeSet RangeSet::closure(std::vector<Rat> values) {
    values.push_back(Rat(0));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return RangeSet(std::move(values));
}

bool RangeSet::contains(const Rat& value) const {
    return std::binary_search(values_.begin(), values_.end(), value);
}

TenuousList::TenuousList(std::vector<Rat> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].is_zero())
            throw std::invalid_argument("tenuous list: values must be positive");
        if (i > 0 && !(values_[i] < values_[i - 1]))
            throw std::invalid_argument("tenuous list: values must be strictly decreasing");
    }
}

TenuousList TenuousList::normalized(std::vector<Rat> values) {
    std::erase_if(values, [](const Rat& v) { return v.is_zero(); });
    std::sort(values.begin(), values.end(), [](const Rat& a, const Rat& b) { return b < a; });
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return TenuousList(std::move(values));
}

const Rat& TenuousList::smallest() const {
    if (values_.empty()) throw std::logic_error("tenuous list: empty");
    return values_.back();
}

TenuousList tenuous_union(const TenuousList& a, const TenuousList& b) {
    std::vector<Rat> merged = a.values();
    merged.insert(merged.end(), b.values().begin(), b.values().end());
    return TenuousList::normalized(std::move(merged));
}

Rat nearly_discrete(const Rat& x, const Rat& y) {
    if (x == y) return Rat(0);
    return rat_max(x, y);
}

Rat sep_infimum(const Rat& x, const Rat& y) {
    std::vector<Rat> candidates{Rat(0), x, y};
    std::sort(candidates.begin(), candidates.end());
    for (const Rat& eps : candidates)
        if (x <= rat_max(y, eps) && y <= rat_max(x, eps)) return eps;
    return rat_max(x, y);  // unreachable: the largest candidate always works
}

}  // namespace umet
