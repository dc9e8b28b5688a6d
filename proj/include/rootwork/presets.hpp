#pragma once

// Named weighted-diagram presets: the unipotent supports of the cuspidal
// unipotent characters in types G2, F4, E8 and E7, plus the diagram carried
// by the D5 x A3 subsystem of E8 on its own simple roots.

#include "rootwork/grading.hpp"
#include "rootwork/root_system.hpp"

#include <string>
#include <vector>

namespace rootwork {

struct DiagramPreset {
    std::string name;
    SimpleType type;
    std::vector<int> weights;
};

inline const std::vector<DiagramPreset>& diagram_presets() {
    static const std::vector<DiagramPreset> presets = {
        {"g2-cuspidal", {Family::G, 2}, {0, 2}},
        {"f4-cuspidal", {Family::F, 4}, {0, 2, 0, 0}},
        {"e8-cuspidal", {Family::E, 8}, {0, 0, 0, 0, 2, 0, 0, 0}},
        {"e7-cuspidal", {Family::E, 7}, {1, 0, 0, 1, 0, 1, 0}},
    };
    return presets;
}

inline const DiagramPreset& diagram_preset(const std::string& name) {
    for (const DiagramPreset& p : diagram_presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown diagram preset \"" + name + "\"");
}

/// Simple system (Pi \ {alpha_6}) u {-alpha_0} of the kernel subsystem of
/// the order-4 torus element in E8, in the order (1,2,3,4,5,7,8,-highest).
inline std::vector<Root> d5a3_base(const RootSystem& e8) {
    if (e8.type() != SimpleType{Family::E, 8})
        throw std::invalid_argument("d5a3_base: expected an E8 system");
    std::vector<Root> base;
    for (int i = 0; i < 8; ++i)
        if (i != 5) base.push_back(Root::simple(8, i));
    base.push_back(-e8.highest_root());
    return base;
}

/// Weighted diagram of the distinguished unipotent class of the D5 x A3
/// subsystem: weight 0 on alpha_4, weight 2 on every other base root.
inline SubsystemDiagram d5a3_cuspidal(const RootSystem& e8) {
    std::vector<Root> base = d5a3_base(e8);
    std::vector<int> weights(base.size(), 2);
    weights[3] = 0;  // alpha_4
    return SubsystemDiagram::make(e8, std::move(base), std::move(weights));
}

/// The support of the distinguished unipotent representative in the
/// D5 x A3 subsystem: {a1, a5, a2, a3+a4, a4+a5, a7, a8, -a0}.
inline std::vector<Root> d5a3_support(const RootSystem& e8) {
    auto simple = [&](int i) { return Root::simple(8, i - 1); };
    std::vector<Root> s;
    s.push_back(simple(1));
    s.push_back(simple(5));
    s.push_back(simple(2));
    s.push_back(simple(3) + simple(4));
    s.push_back(simple(4) + simple(5));
    s.push_back(simple(7));
    s.push_back(simple(8));
    s.push_back(-e8.highest_root());
    return s;
}

/// The five support roots of Mizuno's representative in E7
/// (numbers 20, 21, 24, 28, 30 in his enumeration of the positive roots).
inline std::vector<Root> mizuno_support(const RootSystem& e7) {
    if (e7.type() != SimpleType{Family::E, 7})
        throw std::invalid_argument("mizuno_support: expected an E7 system");
    auto mk = [&](std::vector<int> c) {
        Root r(std::move(c));
        if (!e7.is_root(r)) throw std::logic_error("mizuno_support: not a root of E7");
        return r;
    };
    return {
        mk({1, 1, 1, 1, 0, 0, 0}),  // 20: a1+a2+a3+a4
        mk({1, 0, 1, 1, 1, 0, 0}),  // 21: a1+a3+a4+a5
        mk({0, 1, 0, 1, 1, 1, 0}),  // 24: a2+a4+a5+a6
        mk({0, 1, 1, 2, 1, 0, 0}),  // 28: a2+a3+2a4+a5
        mk({0, 0, 1, 1, 1, 1, 1}),  // 30: a3+a4+a5+a6+a7
    };
}

}  // namespace rootwork
