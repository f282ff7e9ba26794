#include <doctest.h>

#include <sstream>

#include "recur/fourier.hpp"
#include "recur/fourier_oracle.hpp"
#include "recur/spectrum_io.hpp"
#include "test_support.hpp"

using namespace recur;
using namespace recur::fourier;

namespace {

constexpr std::uint32_t W = kWildcard;

// x3 = 0 -> 1; x3 = 1 -> (x1 = 0 -> 1, x1 = 1 -> 0).
std::vector<Schema> figure_tree() {
    return {{{W, W, 0}, 1.0}, {{0, W, 1}, 1.0}, {{1, W, 1}, 0.0}};
}

double figure_f(std::span<const Value> x) { return (x[0] == 1 && x[2] == 1) ? 0.0 : 1.0; }

bool near(Coefficient a, Coefficient b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("unit roots are exact at quarter turns") {
    CHECK(unit_root(0.0) == Coefficient(1.0, 0.0));
    CHECK(unit_root(0.25) == Coefficient(0.0, 1.0));
    CHECK(unit_root(0.5) == Coefficient(-1.0, 0.0));
    CHECK(unit_root(0.75) == Coefficient(0.0, -1.0));
    CHECK(near(unit_root(1.0 / 3.0), std::polar(1.0, 2.0 * testing::kPi / 3.0), 1e-15));
}

TEST_CASE("basis of a ternary attribute") {
    const auto space = AttributeSpace::uniform(1, 3);
    const std::vector<std::uint32_t> j{1};
    const std::vector<Value> x{2};
    CHECK(near(basis(j, x, space), std::polar(1.0, 4.0 * testing::kPi / 3.0), 1e-15));
}

TEST_CASE("basis_sum uses the wildcard shortcut") {
    const auto space = AttributeSpace::uniform(3, 2);
    const Schema s{{W, W, 0}, 1.0};
    const std::vector<std::uint32_t> j001{0, 0, 1};
    const std::vector<std::uint32_t> j100{1, 0, 0};
    CHECK(basis_sum(j001, s, space) == Coefficient(4.0, 0.0));
    CHECK(basis_sum(j100, s, space) == Coefficient(0.0, 0.0));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto sp = testing::random_space(rng, 4096, 6);
        Schema schema;
        for (std::size_t m = 0; m < sp.dimension(); ++m) {
            schema.symbols.push_back(rng() % 2 ? W : static_cast<std::uint32_t>(rng() % sp.cardinality(m)));
        }
        std::vector<std::uint32_t> jj(sp.dimension());
        for (std::size_t m = 0; m < jj.size(); ++m) jj[m] = rng() % 3 == 0 ? 0 : rng() % sp.cardinality(m);
        CHECK(near(basis_sum(jj, schema, sp), testing::naive_basis_sum(jj, schema, sp), 1e-9));
    }
}

TEST_CASE("schema weight and matching") {
    const auto space = AttributeSpace::uniform(3, 2);
    const Schema s{{0, W, 1}, 1.0};
    CHECK(s.weight(space) == doctest::Approx(0.25));
    CHECK(s.matches(std::vector<Value>{0, 1, 1}));
    CHECK_FALSE(s.matches(std::vector<Value>{1, 1, 1}));
}

TEST_CASE("three-feature tree coefficients") {
    const auto space = AttributeSpace::uniform(3, 2);
    const auto paths = figure_tree();
    const auto s = dft_from_tree(paths, space, 1.0);
    const std::vector<std::uint32_t> j000{0, 0, 0}, j001{0, 0, 1}, j100{1, 0, 0}, j101{1, 0, 1}, j010{0, 1, 0};
    CHECK(near(s.coefficient(j000), 0.75, 1e-12));
    CHECK(near(s.coefficient(j001), 0.25, 1e-12));
    CHECK(near(s.coefficient(j100), 0.25, 1e-12));
    CHECK(near(s.coefficient(j101), -0.25, 1e-12));
    CHECK(s.coefficient(j010) == Coefficient(0.0, 0.0));
    CHECK(s.size() == 4);
    // x2 is never tested, so it is not part of the local attribute set.
    CHECK(s.attr_set() == std::vector<std::size_t>{0, 2});

    const std::vector<Value> x010{0, 1, 0};
    CHECK(inverse_classify(s, x010) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.classify(x010) == 1);
    testing::for_each_input(space, [&](std::span<const Value> x) {
        CHECK(s.score(x) == doctest::Approx(figure_f(x)).epsilon(1e-12));
    });
}

TEST_CASE("energy thresholding keeps whole orders") {
    const auto space = AttributeSpace::uniform(3, 2);
    const auto paths = figure_tree();
    const auto full = dft_from_tree(paths, space, 1.0);
    CHECK(total_energy(full) == doctest::Approx(0.75));
    CHECK(spectral_energy(full) == doctest::Approx(0.75));

    const auto t75 = energy_threshold(full, 0.75);
    REQUIRE(t75.size() == 1);
    CHECK(near(t75.coefficient(std::vector<std::uint32_t>{0, 0, 0}), 0.75, 1e-12));

    const auto t90 = energy_threshold(full, 0.9);
    CHECK(t90.size() == 3);
    CHECK(near(t90.coefficient(std::vector<std::uint32_t>{0, 0, 1}), 0.25, 1e-12));
    CHECK(near(t90.coefficient(std::vector<std::uint32_t>{1, 0, 0}), 0.25, 1e-12));
    CHECK(t90.coefficient(std::vector<std::uint32_t>{1, 0, 1}) == Coefficient(0.0, 0.0));

    CHECK(energy_threshold(full, 1.0).size() == 4);
    CHECK(dft_from_tree(paths, space, 0.9) == t90);
}

TEST_CASE("the oracle itself agrees with the literal double loop") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto space = testing::random_space(rng, 200, 5);
        const auto tree = testing::random_tree(space, rng, 3, 0.6);
        auto f = [&](std::span<const Value> x) { return static_cast<double>(tree.classify(x)); };
        const auto oracle = dft_brute_force(f, space);
        for (const auto& [j, w] : testing::naive_dft(f, space)) {
            CHECK(near(oracle.coefficient(j), w, 1e-12));
        }
    }
}

TEST_CASE("transform of random trees matches the oracle") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto space = testing::random_space(rng, 1 << 10, 8);
        const auto tree = testing::random_tree(space, rng, 4, 0.5);
        const auto paths = tree.paths(space.dimension());
        const auto s = dft_from_tree(paths, space, 1.0);
        const auto oracle =
            dft_brute_force([&](std::span<const Value> x) { return static_cast<double>(tree.classify(x)); }, space);
        for (const auto& [local, w] : oracle.coefficients()) {
            CHECK(near(s.coefficient(oracle.to_full(local)), w, 1e-9));
        }
        for (const auto& [local, w] : s.coefficients()) {
            CHECK(near(oracle.coefficient(s.to_full(local)), w, 1e-9));
        }
        // Parseval for {0,1} outputs.
        CHECK(spectral_energy(s) == doctest::Approx(total_energy(s)).epsilon(1e-9));
        testing::for_each_input(space, [&](std::span<const Value> x) { CHECK(s.classify(x) == tree.classify(x)); });
    }
}

TEST_CASE("thresholding contract on random trees") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto space = testing::random_space(rng, 1 << 10, 8);
        const auto tree = testing::random_tree(space, rng, 4, 0.6);
        const auto full = dft_from_tree(tree.paths(space.dimension()), space, 1.0);
        for (double et : {0.5, 0.75, 0.9, 0.95, 1.0}) {
            const auto t = energy_threshold(full, et);
            CHECK(spectral_energy(t) >= et * total_energy(full) - 1e-12);
            std::size_t kept_order = 0;
            for (const auto& [j, w] : t.coefficients()) kept_order = std::max(kept_order, order(j));
            for (const auto& [j, w] : full.coefficients()) {
                if (order(j) <= kept_order) CHECK(t.coefficients().count(j) == 1);
                if (order(j) > kept_order) CHECK(t.coefficients().count(j) == 0);
            }
        }
    }
}

TEST_CASE("expansion keeps every score") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto space = testing::random_space(rng, 1 << 9, 7);
        const auto tree = testing::random_tree(space, rng, 3, 0.5);
        const auto s = dft_from_tree(tree.paths(space.dimension()), space, 1.0);
        std::vector<std::size_t> added;
        for (std::size_t m = 0; m < space.dimension(); ++m) {
            if (std::find(s.attr_set().begin(), s.attr_set().end(), m) == s.attr_set().end()) added.push_back(m);
        }
        const auto e = expand_spectrum(s, added);
        CHECK(e.attr_set().size() == space.dimension());
        CHECK(e.size() == s.size());
        testing::for_each_input(space, [&](std::span<const Value> x) { CHECK(e.score(x) == s.score(x)); });
    }
}

TEST_CASE("aggregation is linear in scores") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto space = testing::random_space(rng, 1 << 9, 7);
        const auto a = dft_from_tree(testing::random_tree(space, rng, 3, 0.5).paths(space.dimension()), space, 1.0);
        const auto b = dft_from_tree(testing::random_tree(space, rng, 3, 0.5).paths(space.dimension()), space, 1.0);
        const double wa = 0.3 + 0.7 * testing::kPi / 4.0, wb = 0.61;
        const auto [ea, eb] = align(a, b);
        const auto sum = aggregate(aggregate(Spectrum::empty(space, ea.attr_set()), ea, wa), eb, wb);
        testing::for_each_input(space, [&](std::span<const Value> x) {
            CHECK(sum.score(x) == doctest::Approx(wa * a.score(x) + wb * b.score(x)).epsilon(1e-9));
        });
    }
}

TEST_CASE("self aggregation leaves normalized predictions unchanged") {
    const auto space = AttributeSpace::uniform(3, 2);
    const auto f = dft_from_tree(figure_tree(), space, 1.0);
    const double a = 0.8;
    const auto twice = aggregate(aggregate(Spectrum::empty(space, f.attr_set()), f, a), f, a);
    testing::for_each_input(space, [&](std::span<const Value> x) {
        CHECK(twice.score(x) / (2.0 * a) == doctest::Approx(f.score(x)).epsilon(1e-12));
    });
}

TEST_CASE("aggregate rejects mismatched operands") {
    const auto space = AttributeSpace::uniform(3, 2);
    const auto f = dft_from_tree(figure_tree(), space, 1.0);
    CHECK_THROWS(aggregate(Spectrum::empty(space, {0}), f, 1.0));
    CHECK_THROWS(aggregate(f, f, -1.0));
}

TEST_CASE("dft_from_tree rejects non-binary labels") {
    const auto space = AttributeSpace::uniform(2, 2);
    const std::vector<Schema> bad{{{0, W}, 0.5}, {{1, W}, 1.0}};
    CHECK_THROWS(dft_from_tree(bad, space, 1.0));
}

TEST_CASE("spectrum text format round-trips") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto space = testing::random_space(rng, 1 << 8, 6);
        const auto s = dft_from_tree(testing::random_tree(space, rng, 3, 0.5).paths(space.dimension()), space, 0.9);
        std::stringstream io;
        write_spectrum(io, s);
        const auto back = read_spectrum(io);
        CHECK(back == s);
        CHECK(back.energy_threshold() == s.energy_threshold());
    }
    std::stringstream bad("spectrum\ndimension 2\n");
    CHECK_THROWS(read_spectrum(bad));
}

TEST_CASE("digits print compactly for small cardinalities") {
    const auto space = AttributeSpace::uniform(3, 2);
    const auto s = dft_from_tree(figure_tree(), space, 1.0);
    CHECK(format_digits(s, Digits{1, 1}) == "11");
    const auto wide = AttributeSpace::uniform(2, 12);
    const auto e = Spectrum::empty(wide, {0, 1});
    CHECK(format_digits(e, Digits{11, 3}) == "11-3");
}
