// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Criteria 1-8 pin the case-study values exactly; criterion 9 runs the
// property suites (reflection-closure equality, pairing linearity on 10^4
// random pairs, solver/box-search agreement, saturation constancy) under a
// 60 second budget.

#include "oracles.hpp"
#include "rootwork/classify.hpp"
#include "rootwork/grading.hpp"
#include "rootwork/multiplicity.hpp"
#include "rootwork/ohmori.hpp"
#include "rootwork/presets.hpp"
#include "rootwork/scenarios.hpp"
#include "rootwork/torus.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace rootwork;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<SimpleType> all_types_rank_le_8() {
    std::vector<SimpleType> types;
    for (int r = 1; r <= 8; ++r) types.push_back({Family::A, r});
    for (int r = 2; r <= 8; ++r) {
        types.push_back({Family::B, r});
        types.push_back({Family::C, r});
        types.push_back({Family::D, r});
    }
    for (int r : {6, 7, 8}) types.push_back({Family::E, r});
    types.push_back({Family::F, 4});
    types.push_back({Family::G, 2});
    return types;
}

std::vector<long long> as_longs(const IntVector& v) {
    std::vector<long long> out;
    for (const BigInt& x : v) out.push_back(static_cast<long long>(x));
    return out;
}

OhmoriSystem e8_subsystem_system(const RootSystem& e8) {
    const SubsystemDiagram d1 = d5a3_cuspidal(e8);
    const CyclicParams cp = CyclicParams::make(13, 1);
    std::vector<long long> exps(8, 0);
    exps[5] = cp.modulus() / 4;
    const Subsystem kernel = kernel_subsystem(TorusElement::make(cp, exps), e8);
    std::vector<Root> zero_domain;
    for (const Root& r : kernel.positive_members())
        if (d1.extend(r) == 0) zero_domain.push_back(r);
    return build_system(e8, d5a3_support(e8), 1, zero_domain);
}

void criterion_1_e8_system() {
    const RootSystem e8 = RootSystem::build({Family::E, 8});
    const OhmoriSystem sys = e8_subsystem_system(e8);
    const auto start = std::chrono::steady_clock::now();
    const OhmoriSolution sol = solve(sys);
    const double elapsed = seconds_since(start);
    const bool value_ok = sol.status == OhmoriSolution::Status::unique &&
                          as_longs(*sol.point) ==
                              std::vector<long long>{1, 1, 1, 0, 1, -5, 1, 1};
    criterion(1, "E8 subsystem support system: unique solution (1,1,1,0,1,-5,1,1) in < 1 s",
              value_ok && elapsed < 1.0);
}

void criterion_2_e7_system() {
    const RootSystem e7 = RootSystem::build({Family::E, 7});
    const auto wdd = WeightedDynkinDiagram::make(e7, {1, 0, 0, 1, 0, 1, 0});
    const std::vector<Root> support = mizuno_support(e7);
    bool weights_ok = true;
    for (const Root& r : support) weights_ok = weights_ok && wdd.extend(r) == 2;

    const OhmoriSystem sys = build_system(wdd, support, 2, Grading::of(wdd).levi_positive());
    const auto start = std::chrono::steady_clock::now();
    const OhmoriSolution sol = solve(sys);
    const double elapsed = seconds_since(start);
    const bool value_ok = sol.status == OhmoriSolution::Status::unique &&
                          as_longs(*sol.point) == std::vector<long long>{1, 0, 0, 1, 0, 1, 0};
    criterion(2,
              "E7 target-2 system: unique solution (1,0,0,1,0,1,0) in < 1 s, "
              "all five support roots at weight 2",
              value_ok && weights_ok && elapsed < 1.0);
}

void criterion_3_regular() {
    bool ok = true;
    for (SimpleType t : all_types_rank_le_8()) {
        const RootSystem rs = RootSystem::build(t);
        const auto wdd = WeightedDynkinDiagram::make(rs, std::vector<int>(rs.rank(), 2));
        std::vector<Root> support;
        for (int i = 0; i < rs.rank(); ++i) support.push_back(Root::simple(rs.rank(), i));
        const OhmoriSolution sol =
            solve(build_system(wdd, support, 1, Grading::of(wdd).levi_positive()));
        ok = ok && sol.status == OhmoriSolution::Status::unique &&
             *sol.point == IntVector(rs.rank(), 1);
    }
    criterion(3, "regular-class systems solve to all-ones for every simple type of rank <= 8", ok);
}

void criterion_4_single_node() {
    bool ok = true;
    for (const char* name : {"g2-cuspidal", "f4-cuspidal", "e8-cuspidal"}) {
        const DiagramPreset& p = diagram_preset(name);
        const RootSystem rs = RootSystem::build(p.type);
        const auto wdd = WeightedDynkinDiagram::make(rs, p.weights);
        const Grading g = Grading::of(wdd);
        const int node = static_cast<int>(
            std::find(p.weights.begin(), p.weights.end(), 2) - p.weights.begin());
        const OhmoriSolution sol =
            solve(build_system(wdd, g.level(2), 1, g.levi_positive()));
        IntVector unit(rs.rank(), 0);
        unit[node] = 1;
        ok = ok && sol.status == OhmoriSolution::Status::unique && *sol.point == unit;
        for (const Root& r : g.level(2)) ok = ok && r[node] == 1;
    }
    criterion(4,
              "single weight-2 node diagrams (G2, F4, E8): unit-vector solutions and "
              "node coefficient 1 on every weight-2 root",
              ok);
}

void criterion_5_kernel() {
    const RootSystem e8 = RootSystem::build({Family::E, 8});
    bool ok = true;
    for (auto [p, e] : std::vector<std::pair<long long, int>>{{13, 1}, {5, 2}}) {
        const CyclicParams cp = CyclicParams::make(p, e);  // q = 1 mod 4 in both presets
        std::vector<long long> exps(8, 0);
        exps[5] = cp.modulus() / 4;
        const TorusElement s = TorusElement::make(cp, exps);
        ok = ok && order(s) == 4;
        const Subsystem kernel = kernel_subsystem(s, e8);
        const auto types = classify_type(kernel);
        ok = ok && types == std::vector<SimpleType>{{Family::A, 3}, {Family::D, 5}};
        ok = ok && is_simple_system(kernel, d5a3_base(e8));
    }
    criterion(5,
              "order-4 torus element: kernel of type D5 x A3 with simple system "
              "(Pi minus alpha_6) + (-highest root)",
              ok);
}

void criterion_6_torus_orders() {
    const std::vector<long long> n{1, 0, 0, 1, 0, 1, 0};
    const TorusElement t1 = make_ohmori_torus(CyclicParams::make(5, 2), n, true);
    const TorusElement t2 = make_ohmori_torus(CyclicParams::make(13, 2), n, true);
    criterion(6, "torus orders: 8 at (p,q) = (5,25) and 24 at (13,169)",
              order(t1) == 8 && order(t2) == 24);
}

void criterion_7_multiplicity() {
    bool ok = pair_set(3).pairs.size() == 8 && pair_set(4).pairs.size() == 21 &&
              pair_set(5).pairs.size() == 39;
    for (int n = 3; n <= 5; ++n) {
        for (const CycleType& x : classes(n)) {
            long long sum_sq = 0;
            for (long long d : irr_degrees(centralizer(x))) sum_sq += d * d;
            ok = ok && sum_sq == centralizer(x).order();
        }
        const MultiplicityTable t = kawanaka_table(n);
        for (size_t r = 0; r < t.rows.size(); ++r)
            for (size_t c = 0; c < t.cols.size(); ++c)
                if (!(t.rows[r].x == t.cols[c])) ok = ok && t.entries[r][c] == 0;
    }
    criterion(7,
              "multiplicity tables: pair-set sizes (8,21,39), per-class sum of squares, "
              "zero off the class diagonal",
              ok);
}

void criterion_8_index_exponents() {
    bool ok = true;
    for (const DiagramPreset& p : diagram_presets()) {
        const RootSystem rs = RootSystem::build(p.type);
        ok = ok && index_exponent(WeightedDynkinDiagram::make(rs, p.weights)) % 2 == 0;
    }
    // the subsystem diagram has even weights, so its level-1 set is empty
    const RootSystem e8 = RootSystem::build({Family::E, 8});
    const SubsystemDiagram d1 = d5a3_cuspidal(e8);
    int level1 = 0;
    for (const Root& r : e8.all_roots()) {
        const auto d = d1.extend(r);
        if (d && *d == 1 && r.is_positive()) ++level1;
    }
    ok = ok && level1 == 0;

    // m0 = q^{k/2} is an odd integer for all odd q presets
    const RootSystem e7 = RootSystem::build({Family::E, 7});
    const int k = index_exponent(WeightedDynkinDiagram::make(e7, {1, 0, 0, 1, 0, 1, 0}));
    for (auto [p, e] : std::vector<std::pair<long long, int>>{{5, 1}, {5, 2}, {13, 1}, {13, 2}}) {
        const CyclicParams cp = CyclicParams::make(p, e);
        BigInt m0 = 1;
        for (int i = 0; i < k / 2; ++i) m0 *= cp.q;
        ok = ok && m0 % 2 == 1;
    }
    criterion(8, "index exponents even for every shipped diagram; q^{k/2} odd for odd q", ok);
}

void criterion_9_property_suites() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;

    // reflection-closure equality for every type of rank <= 8
    for (SimpleType t : all_types_rank_le_8()) {
        const RootSystem rs = RootSystem::build(t);
        std::set<std::vector<int>> generated;
        for (const Root& r : rs.all_roots()) generated.insert(r.coeffs);
        ok = ok && generated == oracles::reflection_closure(rs.cartan());
    }

    // pairing/extension linearity on 10^4 random root pairs
    {
        std::mt19937 rng(123456);
        const RootSystem e8 = RootSystem::build({Family::E, 8});
        const RootSystem f4 = RootSystem::build({Family::F, 4});
        const auto wdd8 = WeightedDynkinDiagram::make(e8, diagram_preset("e8-cuspidal").weights);
        const auto wdd4 = WeightedDynkinDiagram::make(f4, diagram_preset("f4-cuspidal").weights);
        int checked = 0;
        while (checked < 10000) {
            const bool use8 = rng() % 2 == 0;
            const RootSystem& rs = use8 ? e8 : f4;
            const WeightedDynkinDiagram& wdd = use8 ? wdd8 : wdd4;
            const auto all = rs.all_roots();
            const Root& a = all[rng() % all.size()];
            const Root& b = all[rng() % all.size()];
            const Root sum = a + b;
            if (sum.is_zero() || !rs.is_root(sum)) continue;
            for (int j = 0; j < rs.rank(); ++j)
                ok = ok && rs.coweight_pairing(sum, j) ==
                               rs.coweight_pairing(a, j) + rs.coweight_pairing(b, j);
            ok = ok && wdd.extend(sum) == wdd.extend(a) + wdd.extend(b);
            ++checked;
        }
    }

    // solver/box-search agreement on the case-study systems
    {
        const RootSystem e8 = RootSystem::build({Family::E, 8});
        const RootSystem e7 = RootSystem::build({Family::E, 7});
        std::vector<OhmoriSystem> systems;
        systems.push_back(e8_subsystem_system(e8));
        {
            const auto wdd = WeightedDynkinDiagram::make(e7, {1, 0, 0, 1, 0, 1, 0});
            systems.push_back(
                build_system(wdd, mizuno_support(e7), 2, Grading::of(wdd).levi_positive()));
        }
        for (const char* name : {"g2-cuspidal", "f4-cuspidal", "e8-cuspidal"}) {
            const DiagramPreset& p = diagram_preset(name);
            const RootSystem rs = RootSystem::build(p.type);
            const auto wdd = WeightedDynkinDiagram::make(rs, p.weights);
            const Grading g = Grading::of(wdd);
            systems.push_back(build_system(wdd, g.level(2), 1, g.levi_positive()));
        }
        for (SimpleType t : {SimpleType{Family::E, 8}, SimpleType{Family::B, 5}}) {
            const RootSystem rs = RootSystem::build(t);
            const auto wdd = WeightedDynkinDiagram::make(rs, std::vector<int>(rs.rank(), 2));
            std::vector<Root> support;
            for (int i = 0; i < rs.rank(); ++i) support.push_back(Root::simple(rs.rank(), i));
            systems.push_back(build_system(wdd, support, 1, {}));
        }
        for (const OhmoriSystem& sys : systems) {
            const auto box = oracles::box_solutions(sys, 8);
            const OhmoriSolution sol = solve(sys);
            ok = ok && box.size() == 1 && sol.status == OhmoriSolution::Status::unique &&
                 as_longs(*sol.point) == box[0];
        }
    }

    // saturation constancy: solutions stay at the target on the closed support
    {
        const RootSystem e7 = RootSystem::build({Family::E, 7});
        const auto wdd = WeightedDynkinDiagram::make(e7, {1, 0, 0, 1, 0, 1, 0});
        const OhmoriSystem sys =
            build_system(wdd, mizuno_support(e7), 2, Grading::of(wdd).levi_positive());
        const OhmoriSolution sol = solve(sys);
        ok = ok && sol.status == OhmoriSolution::Status::unique;
        if (sol.point) {
            for (const Root& r : saturate_support(SupportSpec::make(wdd, mizuno_support(e7)))) {
                BigInt value = 0;
                for (int j = 0; j < 7; ++j) value += r[j] * (*sol.point)[j];
                ok = ok && value == 2;
            }
        }
    }

    const double elapsed = seconds_since(start);
    criterion(9, "property suites green in < 60 s (took " + std::to_string(elapsed) + " s)",
              ok && elapsed < 60.0);
}

}  // namespace

int main() {
    criterion_1_e8_system();
    criterion_2_e7_system();
    criterion_3_regular();
    criterion_4_single_node();
    criterion_5_kernel();
    criterion_6_torus_orders();
    criterion_7_multiplicity();
    criterion_8_index_exponents();
    criterion_9_property_suites();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
