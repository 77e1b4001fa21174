#include "concordium/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace concordium {

CrossingList::CrossingList(std::vector<std::string> components, std::vector<Crossing> crossings)
    : components_(std::move(components)), crossings_(std::move(crossings)) {
    for (std::size_t i = 0; i < components_.size(); ++i)
        for (std::size_t j = i + 1; j < components_.size(); ++j)
            if (components_[i] == components_[j])
                throw std::invalid_argument("duplicate component label: " + components_[i]);
    std::map<std::pair<std::string, std::string>, int> inter_count;
    for (const Crossing& c : crossings_) {
        if (c.sign != 1 && c.sign != -1)
            throw std::invalid_argument("crossing sign must be +1 or -1");
        if (!has_component(c.over)) throw std::invalid_argument("unknown component: " + c.over);
        if (!has_component(c.under)) throw std::invalid_argument("unknown component: " + c.under);
        if (c.over != c.under) {
            auto key = std::minmax(c.over, c.under);
            ++inter_count[{key.first, key.second}];
        }
    }
    for (const auto& [pair, count] : inter_count)
        if (count % 2 != 0)
            throw std::invalid_argument("components " + pair.first + " and " + pair.second +
                                        " meet in an odd number of crossings");
}

bool CrossingList::has_component(const std::string& label) const {
    return std::find(components_.begin(), components_.end(), label) != components_.end();
}

int linking_number(const CrossingList& d, const std::string& a, const std::string& b) {
    if (!d.has_component(a)) throw std::invalid_argument("unknown component: " + a);
    if (!d.has_component(b)) throw std::invalid_argument("unknown component: " + b);
    if (a == b) throw std::invalid_argument("linking number needs two distinct components");
    int sum = 0;
    for (const Crossing& c : d.crossings())
        if ((c.over == a && c.under == b) || (c.over == b && c.under == a)) sum += c.sign;
    return sum / 2;  // exact: the constructor guarantees an even crossing count
}

int writhe(const CrossingList& d, const std::string& a) {
    if (!d.has_component(a)) throw std::invalid_argument("unknown component: " + a);
    int sum = 0;
    for (const Crossing& c : d.crossings())
        if (c.over == a && c.under == a) sum += c.sign;
    return sum;
}

}  // namespace concordium
