#pragma once

#include "hyperlab/harness.hpp"

#include <initializer_list>

namespace fx {

using namespace hyperlab;

inline ElementSet set(std::initializer_list<Element> xs) {
    ElementSet s;
    for (auto x : xs) s.insert(x);
    return s;
}

inline const FiniteHyperring& H1() {
    static const FiniteHyperring h = seed_H1();
    return h;
}

inline const FiniteHyperring& H3() {
    static const FiniteHyperring h = seed_H3();
    return h;
}

/// Default instance family cut at the given order.
inline std::vector<Instance> instances_up_to(std::size_t order) {
    InstanceConfig c;
    c.max_order = order;
    return generate_instances(c);
}

} // namespace fx
