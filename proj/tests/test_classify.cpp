#include "rootwork/classify.hpp"

#include "rootwork/torus.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace rootwork;

namespace {

std::vector<std::string> type_names(const std::vector<SimpleType>& types) {
    std::vector<std::string> names;
    for (SimpleType t : types) names.push_back(t.to_string());
    return names;
}

}  // namespace

TEST_CASE("whole systems classify as themselves") {
    for (const char* name : {"A5", "B3", "C4", "D6", "E6", "E7", "E8", "F4", "G2"}) {
        const RootSystem rs = RootSystem::build(SimpleType::parse(name));
        const auto types = classify_type(Subsystem::whole(rs));
        REQUIRE(types.size() == 1);
        CHECK(types[0].to_string() == name);
    }
}

TEST_CASE("renumbered isomorphs get their canonical labels") {
    // D2 is two orthogonal A1's, D3 is A3 renumbered, C2 is B2 renumbered
    CHECK(type_names(classify_type(Subsystem::whole(RootSystem::build({Family::D, 2})))) ==
          std::vector<std::string>{"A1", "A1"});
    CHECK(type_names(classify_type(Subsystem::whole(RootSystem::build({Family::D, 3})))) ==
          std::vector<std::string>{"A3"});
    CHECK(type_names(classify_type(Subsystem::whole(RootSystem::build({Family::C, 2})))) ==
          std::vector<std::string>{"B2"});
}

TEST_CASE("kernel of the trivial torus element classifies as the parent") {
    const RootSystem e7 = RootSystem::build({Family::E, 7});
    const CyclicParams cp = CyclicParams::make(5, 1);
    const TorusElement identity = TorusElement::make(cp, std::vector<long long>(7, 0));
    const Subsystem kernel = kernel_subsystem(identity, e7);
    CHECK(kernel.members.size() == e7.all_roots().size());
    CHECK(type_names(classify_type(kernel)) == std::vector<std::string>{"E7"});
}

TEST_CASE("order-4 torus kernel in E8 is D5 x A3") {
    const RootSystem e8 = RootSystem::build({Family::E, 8});
    const CyclicParams cp = CyclicParams::make(13, 1);
    std::vector<long long> exps(8, 0);
    exps[5] = cp.modulus() / 4;
    const TorusElement s = TorusElement::make(cp, exps);
    const Subsystem kernel = kernel_subsystem(s, e8);
    CHECK(kernel.members.size() == 52);  // 2*(20 + 6)
    CHECK(type_names(classify_type(kernel)) == std::vector<std::string>{"A3", "D5"});
}

TEST_CASE("simple system testing") {
    const RootSystem e8 = RootSystem::build({Family::E, 8});

    SECTION("the defining simple system passes") {
        std::vector<Root> pi;
        for (int i = 0; i < 8; ++i) pi.push_back(Root::simple(8, i));
        CHECK(is_simple_system(Subsystem::whole(e8), pi));
    }

    SECTION("dropping a simple root fails") {
        std::vector<Root> pi;
        for (int i = 1; i < 8; ++i) pi.push_back(Root::simple(8, i));
        CHECK_FALSE(is_simple_system(Subsystem::whole(e8), pi));
    }

    SECTION("(Pi minus alpha_6) plus -highest passes for the order-4 kernel") {
        const CyclicParams cp = CyclicParams::make(13, 1);
        std::vector<long long> exps(8, 0);
        exps[5] = cp.modulus() / 4;
        const Subsystem kernel = kernel_subsystem(TorusElement::make(cp, exps), e8);
        std::vector<Root> candidate;
        for (int i = 0; i < 8; ++i)
            if (i != 5) candidate.push_back(Root::simple(8, i));
        candidate.push_back(-e8.highest_root());
        CHECK(is_simple_system(kernel, candidate));
        // but the raw Pi is not even inside the kernel
        CHECK_THROWS_AS(is_simple_system(kernel, {Root::simple(8, 5)}), std::invalid_argument);
    }
}

TEST_CASE("classification is stable under renumbering the members") {
    const RootSystem e8 = RootSystem::build({Family::E, 8});
    const CyclicParams cp = CyclicParams::make(13, 1);
    std::vector<long long> exps(8, 0);
    exps[5] = cp.modulus() / 4;
    const Subsystem kernel = kernel_subsystem(TorusElement::make(cp, exps), e8);
    const auto reference = classify_type(kernel);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Root> shuffled = kernel.members;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const Subsystem again = Subsystem::make(e8, shuffled);
        CHECK(classify_type(again) == reference);
    }
}

TEST_CASE("catalogue matching is permutation-invariant and unambiguous") {
    std::mt19937 rng(2718);
    std::vector<SimpleType> catalogue;
    for (int r = 1; r <= 8; ++r)
        for (SimpleType t : rootwork::detail::connected_catalogue(r)) catalogue.push_back(t);

    for (SimpleType t : catalogue) {
        const CartanMatrix cat = CartanMatrix::of(t);
        const int r = t.rank;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> sigma(r);
            std::iota(sigma.begin(), sigma.end(), 0);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            std::vector<std::vector<int>> permuted(r, std::vector<int>(r));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) permuted[i][j] = cat(sigma[i], sigma[j]);

            // exactly one catalogue entry of this rank matches
            std::vector<std::string> matches;
            for (SimpleType u : rootwork::detail::connected_catalogue(r)) {
                const CartanMatrix other = CartanMatrix::of(u);
                if (rootwork::detail::DiagramSignature::of(permuted) ==
                        rootwork::detail::DiagramSignature::of(other.entries) &&
                    rootwork::detail::permutation_match(permuted, other))
                    matches.push_back(u.to_string());
            }
            INFO(t.to_string());
            CHECK(matches == std::vector<std::string>{t.to_string()});
        }
    }
}

TEST_CASE("long-root subsystems of the non-simply-laced types") {
    // the long roots always form a closed subsystem
    const RootSystem g2 = RootSystem::build({Family::G, 2});
    std::vector<Root> longs;
    for (const Root& r : g2.all_roots())
        if (g2.inner(r, r) == 6) longs.push_back(r);
    CHECK(type_names(classify_type(Subsystem::make(g2, longs))) ==
          std::vector<std::string>{"A2"});

    const RootSystem f4 = RootSystem::build({Family::F, 4});
    longs.clear();
    for (const Root& r : f4.all_roots())
        if (f4.inner(r, r) == 4) longs.push_back(r);
    CHECK(type_names(classify_type(Subsystem::make(f4, longs))) ==
          std::vector<std::string>{"D4"});
}
