#pragma once

// Independent reference code shared by the unit and acceptance tests. Nothing
// here calls into the library's transform code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "recur/attribute_space.hpp"
#include "recur/fourier.hpp"

namespace testing {

using recur::AttributeSpace;
using recur::Value;
using recur::fourier::Schema;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// A decision tree kept as plain nodes, built at random.
struct RefTree {
    struct Node {
        int attribute = -1;  // -1 for a leaf
        int label = 0;
        std::vector<int> children;
    };
    std::vector<Node> nodes;

    int classify(std::span<const Value> x) const {
        int n = 0;
        while (nodes[n].attribute >= 0) n = nodes[n].children[x[nodes[n].attribute]];
        return nodes[n].label;
    }

    std::vector<Schema> paths(std::size_t d) const {
        std::vector<Schema> out;
        std::vector<std::uint32_t> symbols(d, recur::fourier::kWildcard);
        walk(0, symbols, out);
        return out;
    }

  private:
    void walk(int n, std::vector<std::uint32_t>& symbols, std::vector<Schema>& out) const {
        if (nodes[n].attribute < 0) {
            out.push_back({symbols, static_cast<double>(nodes[n].label)});
            return;
        }
        const auto a = static_cast<std::size_t>(nodes[n].attribute);
        for (std::size_t v = 0; v < nodes[n].children.size(); ++v) {
            symbols[a] = static_cast<std::uint32_t>(v);
            walk(nodes[n].children[v], symbols, out);
        }
        symbols[a] = recur::fourier::kWildcard;
    }
};

inline RefTree random_tree(const AttributeSpace& space, std::mt19937_64& rng, int max_depth, double p_split) {
    RefTree t;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::function<int(int, std::vector<bool>&)> grow = [&](int depth, std::vector<bool>& used) -> int {
        const int id = static_cast<int>(t.nodes.size());
        t.nodes.emplace_back();
        std::vector<int> free;
        for (std::size_t m = 0; m < space.dimension(); ++m) {
            if (!used[m]) free.push_back(static_cast<int>(m));
        }
        // The root always splits so that every tree uses at least one attribute.
        const bool split = !free.empty() && depth < max_depth && (depth == 0 || u(rng) < p_split);
        if (!split) {
            t.nodes[id].label = static_cast<int>(rng() % 2);
            return id;
        }
        const int a = free[rng() % free.size()];
        t.nodes[id].attribute = a;
        used[a] = true;
        std::vector<int> kids;
        for (std::uint32_t v = 0; v < space.cardinality(a); ++v) kids.push_back(grow(depth + 1, used));
        used[a] = false;
        t.nodes[id].children = kids;
        return id;
    };
    std::vector<bool> used(space.dimension(), false);
    grow(0, used);
    return t;
}

// Mixed cardinalities in {2,3,4}, product at most max_size.
inline AttributeSpace random_space(std::mt19937_64& rng, std::uint64_t max_size, std::size_t max_dim = 16) {
    std::vector<recur::Attribute> attrs;
    std::uint64_t size = 1;
    const std::size_t target = 2 + rng() % (max_dim - 1);
    while (attrs.size() < target) {
        const std::uint32_t lambda = 2 + static_cast<std::uint32_t>(rng() % 3);
        if (size * lambda > max_size) break;
        size *= lambda;
        attrs.push_back({"a" + std::to_string(attrs.size()), lambda});
    }
    return AttributeSpace(std::move(attrs));
}

inline void for_each_input(const AttributeSpace& space, const std::function<void(std::span<const Value>)>& fn) {
    std::vector<Value> x(space.dimension(), 0);
    while (true) {
        fn(x);
        std::size_t m = 0;
        while (m < x.size() && ++x[m] == space.cardinality(m)) x[m++] = 0;
        if (m == x.size()) return;
    }
}

inline cplx psi(std::span<const std::uint32_t> j, std::span<const Value> x, const AttributeSpace& space) {
    // Each phase is reduced modulo its cardinality first so large digit
    // products do not cost precision.
    long double turns = 0.0L;
    for (std::size_t m = 0; m < j.size(); ++m) {
        const auto lambda = space.cardinality(m);
        turns += static_cast<long double>((static_cast<std::uint64_t>(j[m]) * x[m]) % lambda) / lambda;
    }
    turns -= std::floor(turns);
    const long double angle = 2.0L * 3.141592653589793238462643383279502884L * turns;
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

// Literal double loop: every partition against every input. Small spaces only.
inline std::vector<std::pair<std::vector<std::uint32_t>, cplx>> naive_dft(
    const std::function<double(std::span<const Value>)>& f, const AttributeSpace& space) {
    std::vector<std::pair<std::vector<std::uint32_t>, cplx>> out;
    const auto n = static_cast<double>(space.input_space_size());
    for_each_input(space, [&](std::span<const Value> j) {
        cplx w = 0.0;
        for_each_input(space, [&](std::span<const Value> x) { w += f(x) * psi(j, x, space); });
        out.emplace_back(std::vector<std::uint32_t>(j.begin(), j.end()), w / n);
    });
    return out;
}

// Sum of psi_j over every completion of a schema, enumerated explicitly.
inline cplx naive_basis_sum(std::span<const std::uint32_t> j, const Schema& s, const AttributeSpace& space) {
    std::vector<std::size_t> wild;
    std::vector<Value> x(space.dimension(), 0);
    for (std::size_t m = 0; m < x.size(); ++m) {
        if (s.symbols[m] == recur::fourier::kWildcard) {
            wild.push_back(m);
        } else {
            x[m] = s.symbols[m];
        }
    }
    std::complex<long double> total = 0.0L;
    while (true) {
        const auto p = psi(j, x, space);
        total += std::complex<long double>(p.real(), p.imag());
        std::size_t k = 0;
        while (k < wild.size() && ++x[wild[k]] == space.cardinality(wild[k])) x[wild[k++]] = 0;
        if (k == wild.size()) return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
    }
}

}  // namespace testing
