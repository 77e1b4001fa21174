#ifndef CONCORDIUM_DIAGRAM_HPP
#define CONCORDIUM_DIAGRAM_HPP

// Link diagrams reduced to signed, component-labeled crossing lists;
// enough structure for writhe and linking numbers. Planarity is not
// modeled or validated.

#include <string>
#include <vector>

namespace concordium {

struct Crossing {
    int sign = 1;  // +1 or -1
    std::string over;
    std::string under;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

class CrossingList {
public:
    // Throws std::invalid_argument when a crossing label is not declared,
    // a sign is not +-1, a component label repeats, or some pair of
    // components meets in an odd number of crossings (the linking number
    // would not be an integer).
    CrossingList(std::vector<std::string> components, std::vector<Crossing> crossings);

    const std::vector<std::string>& components() const { return components_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    bool has_component(const std::string& label) const;

    friend bool operator==(const CrossingList&, const CrossingList&) = default;

private:
    std::vector<std::string> components_;
    std::vector<Crossing> crossings_;
};

// Half the signed count of crossings between the two (distinct) components.
int linking_number(const CrossingList& d, const std::string& a, const std::string& b);

// Signed count of self-crossings of one component.
int writhe(const CrossingList& d, const std::string& a);

}  // namespace concordium

#endif
