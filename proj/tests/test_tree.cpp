#include <doctest.h>

#include <random>

#include "recur/forest.hpp"
#include "recur/hoeffding_tree.hpp"
#include "test_support.hpp"

using namespace recur;
using namespace recur::tree;

TEST_CASE("information gain of simple splits") {
    const std::array<std::uint64_t, 2> parent{5, 5};
    const std::vector<std::array<std::uint64_t, 2>> perfect{{5, 0}, {0, 5}};
    const std::vector<std::array<std::uint64_t, 2>> useless{{2, 2}, {3, 3}};
    CHECK(information_gain(parent, perfect) == doctest::Approx(1.0));
    CHECK(information_gain(parent, useless) == doctest::Approx(0.0));
}

TEST_CASE("hoeffding bound") {
    CHECK(hoeffding_bound(1e-7, 200) == doctest::Approx(std::sqrt(std::log(1e7) / 400.0)));
    CHECK(hoeffding_bound(0.01, 1000) < hoeffding_bound(0.01, 100));
}

TEST_CASE("a new tree is a single root split") {
    const auto space = AttributeSpace::uniform(4, 3);
    HoeffdingTree t(space, 2);
    CHECK(t.split_count() == 1);
    CHECK(t.leaf_count() == 3);
    CHECK(t.depth() == 1);
    CHECK(t.classify(std::vector<Value>{0, 0, 0, 0}) == 0);
    const auto paths = t.paths();
    REQUIRE(paths.size() == 3);
    for (std::uint32_t v = 0; v < 3; ++v) {
        CHECK(paths[v].symbols[2] == v);
        CHECK(paths[v].symbols[0] == fourier::kWildcard);
    }
    CHECK_THROWS(HoeffdingTree(space, 4));
}

TEST_CASE("leaves predict their majority and empty leaves defer upwards") {
    const auto space = AttributeSpace::uniform(2, 2);
    HoeffdingTree t(space, 0);
    t.learn({{0, 0}, 1});
    t.learn({{0, 1}, 1});
    CHECK(t.classify(std::vector<Value>{0, 0}) == 1);
    // The x0 = 1 leaf is empty: the root has seen two 1s.
    CHECK(t.classify(std::vector<Value>{1, 0}) == 1);
    t.learn({{1, 0}, 0});
    t.learn({{1, 1}, 0});
    CHECK(t.classify(std::vector<Value>{1, 1}) == 0);
    CHECK(t.leaf_counts(std::vector<Value>{1, 1}) == std::array<std::uint64_t, 2>{2, 0});
}

TEST_CASE("out-of-space records are rejected without learning") {
    const auto space = AttributeSpace::uniform(2, 2);
    HoeffdingTree t(space, 0);
    CHECK(t.learn({{0, 2}, 1}) == LearnOutcome::kRejected);
    CHECK(t.learn({{0, 1}, 2}) == LearnOutcome::kRejected);
    CHECK(t.rejected() == 2);
    CHECK(t.instances_seen() == 0);
}

TEST_CASE("the tree learns a conjunction") {
    const auto space = AttributeSpace::uniform(4, 2);
    HoeffdingTree t(space, 3);
    std::mt19937_64 rng(1);
    auto target = [](std::span<const Value> x) { return static_cast<std::uint8_t>(x[0] == 1 && x[1] == 1); };
    for (int i = 0; i < 20000; ++i) {
        std::vector<Value> x{static_cast<Value>(rng() % 2), static_cast<Value>(rng() % 2),
                             static_cast<Value>(rng() % 2), static_cast<Value>(rng() % 2)};
        t.learn({x, target(x)});
    }
    int wrong = 0;
    testing::for_each_input(space, [&](std::span<const Value> x) { wrong += t.classify(x) != target(x); });
    CHECK(wrong == 0);
    CHECK(t.split_count() >= 3);
    // Paths cover the space exactly once and agree with traversal.
    const auto paths = t.paths();
    testing::for_each_input(space, [&](std::span<const Value> x) {
        int hits = 0;
        for (const auto& p : paths) {
            if (p.matches(x)) {
                ++hits;
                CHECK(static_cast<int>(p.label) == t.classify(x));
            }
        }
        CHECK(hits == 1);
    });
}

TEST_CASE("no split without may_split, and reset restores the root") {
    const auto space = AttributeSpace::uniform(3, 2);
    HoeffdingTree t(space, 0);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 5000; ++i) {
        std::vector<Value> x{static_cast<Value>(rng() % 2), static_cast<Value>(rng() % 2),
                             static_cast<Value>(rng() % 2)};
        CHECK(t.learn({x, static_cast<std::uint8_t>(x[1])}, false) != LearnOutcome::kSplit);
    }
    CHECK(t.split_count() == 1);
    t.reset();
    CHECK(t.split_count() == 1);
    CHECK(t.instances_seen() == 0);
    CHECK(t.classify(std::vector<Value>{1, 1, 1}) == 0);
}

TEST_CASE("forest plants one tree per attribute and enforces the budget") {
    const auto space = AttributeSpace::uniform(5, 2);
    CHECK_THROWS(Forest(space, 4));
    Forest f(space, 7);
    CHECK(f.size() == 5);
    CHECK(f.node_count() == 5);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.tree(i).root_attribute() == i);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 30000; ++i) {
        std::vector<Value> x(5);
        for (auto& v : x) v = static_cast<Value>(rng() % 2);
        f.learn({x, static_cast<std::uint8_t>((x[0] ^ x[1]) | (x[2] & x[3]))});
        CHECK(f.node_count() <= 7);
    }
    CHECK(f.budget_exhausted());
    std::size_t total = 0;
    for (const auto& t : f.trees()) total += t.split_count();
    CHECK(total == f.node_count());

    f.reset_tree(0);
    CHECK(f.tree(0).split_count() == 1);
    std::size_t after = 0;
    for (const auto& t : f.trees()) after += t.split_count();
    CHECK(after == f.node_count());
}
