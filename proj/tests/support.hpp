#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// The oracles deliberately avoid the library's code paths: medians come from
// raw poset computations or direct definitional scans.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "medalg/algebra.hpp"
#include "medalg/generators.hpp"
#include "medalg/order.hpp"

namespace support {

using medalg::Element;
using medalg::MedianAlgebra;
using medalg::ProductAlgebra;

// Four-element tree: 0 < 1, 1 < 2, 1 < 3 (a stem with two prongs).
inline medalg::SemilatticePresentation fork_presentation() {
    medalg::SemilatticePresentation p;
    p.size = 4;
    p.covers = {{0, 1}, {1, 2}, {1, 3}};
    p.labels = {"a", "b", "c", "d"};
    return p;
}

// Five-element non-tree: the 2x2 diamond 0 < 1,2 < 3 with an extra top 4.
inline medalg::SemilatticePresentation diamond_top_presentation() {
    medalg::SemilatticePresentation p;
    p.size = 5;
    p.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}};
    p.labels = {"a", "b", "c", "d", "d'"};
    return p;
}

// The nondistributive lattice M3: bottom, three atoms, top.
inline medalg::SemilatticePresentation m3_presentation() {
    medalg::SemilatticePresentation p;
    p.size = 5;
    p.covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    return p;
}

inline MedianAlgebra from_presentation(const medalg::SemilatticePresentation& p) {
    auto result = medalg::algebra_from_semilattice(p);
    return std::get<MedianAlgebra>(result);
}

inline MedianAlgebra fork() { return from_presentation(fork_presentation()); }
inline MedianAlgebra diamond_top() { return from_presentation(diamond_top_presentation()); }

// {0,1}^2 with the componentwise majority.
inline MedianAlgebra two_squared() {
    return medalg::make_product({medalg::chain(2), medalg::chain(2)}).flat();
}

struct NamedAlgebra {
    std::string name;
    MedianAlgebra algebra;
};

// Deterministic random parent arrays (plain modulo keeps the draw identical
// across standard libraries).
inline std::vector<std::vector<int>> random_parent_arrays() {
    std::mt19937 rng(20240611u);
    std::vector<std::vector<int>> out;
    for (int size = 2; size <= 7; ++size) {
        for (int copy = 0; copy < 2; ++copy) {
            std::vector<int> parents(static_cast<std::size_t>(size - 1));
            for (int i = 0; i + 1 < size; ++i) {
                parents[static_cast<std::size_t>(i)] =
                    static_cast<int>(rng() % static_cast<std::uint32_t>(i + 1));
            }
            out.push_back(std::move(parents));
        }
    }
    return out;
}

// The generator suite the properties and acceptance criteria run over:
// chains up to 6, stars up to 4 arms, random trees up to size 7, products of
// two chains up to 3x3, the fork, the diamond-plus-top and {0,1}^2.
inline const std::vector<NamedAlgebra>& suite() {
    static const std::vector<NamedAlgebra> algebras = [] {
        std::vector<NamedAlgebra> out;
        for (int n = 1; n <= 6; ++n) {
            out.push_back({"chain" + std::to_string(n), medalg::chain(n)});
        }
        for (int k = 1; k <= 4; ++k) {
            out.push_back({"star" + std::to_string(k), medalg::star(k)});
        }
        int idx = 0;
        for (const auto& parents : random_parent_arrays()) {
            out.push_back({"tree" + std::to_string(idx++),
                           medalg::tree_from_parents(parents)});
        }
        for (int a = 2; a <= 3; ++a) {
            for (int b = 2; b <= 3; ++b) {
                out.push_back({"chain" + std::to_string(a) + "x" + std::to_string(b),
                               medalg::make_product({medalg::chain(a), medalg::chain(b)}).flat()});
            }
        }
        out.push_back({"fork", fork()});
        out.push_back({"diamond_top", diamond_top()});
        return out;
    }();
    return algebras;
}

// ---- independent oracles ----

// le closure of a cover list, no library involvement.
inline std::vector<std::uint8_t> closure_of_covers(
    int n, const std::vector<std::pair<Element, Element>>& covers) {
    std::vector<std::uint8_t> le(static_cast<std::size_t>(n) * n, 0);
    auto set = [&](Element x, Element y) { le[static_cast<std::size_t>(x) * n + y] = 1; };
    auto get = [&](Element x, Element y) {
        return le[static_cast<std::size_t>(x) * n + y] != 0;
    };
    for (Element x = 0; x < n; ++x) set(x, x);
    for (auto [c, p] : covers) set(c, p);
    for (Element k = 0; k < n; ++k)
        for (Element i = 0; i < n; ++i)
            if (get(i, k))
                for (Element j = 0; j < n; ++j)
                    if (get(k, j)) set(i, j);
    return le;
}

// Median from a raw le matrix: naive glb of each pair, then the least common
// upper bound of the three meets. Returns -1 when a meet or the bound is
// missing.
inline Element oracle_poset_median(int n, const std::vector<std::uint8_t>& le,
                                   Element x, Element y, Element z) {
    auto leq = [&](Element a, Element b) {
        return le[static_cast<std::size_t>(a) * n + b] != 0;
    };
    auto meet = [&](Element a, Element b) {
        Element best = -1;
        for (Element c = 0; c < n; ++c) {
            if (leq(c, a) && leq(c, b)) {
                bool greatest = true;
                for (Element d = 0; d < n; ++d) {
                    if (leq(d, a) && leq(d, b) && !leq(d, c)) {
                        greatest = false;
                        break;
                    }
                }
                if (greatest) {
                    best = c;
                    break;
                }
            }
        }
        return best;
    };
    Element m1 = meet(x, y), m2 = meet(x, z), m3 = meet(z, y);
    // least common upper bound of the three meets
    Element best = -1;
    for (Element c = 0; c < n; ++c) {
        if (leq(m1, c) && leq(m2, c) && leq(m3, c)) {
            bool least = true;
            for (Element d = 0; d < n; ++d) {
                if (leq(m1, d) && leq(m2, d) && leq(m3, d) && !leq(c, d)) {
                    least = false;
                    break;
                }
            }
            if (least) {
                best = c;
                break;
            }
        }
    }
    return best;
}

// Every value vector dom -> cod that preserves the median, by the definition.
inline std::vector<std::vector<Element>> brute_force_homs(const MedianAlgebra& dom,
                                                          const MedianAlgebra& cod) {
    const int n = dom.size();
    const int m = cod.size();
    std::vector<std::vector<Element>> homs;
    std::vector<Element> values(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) {
            for (Element y = 0; y < n && ok; ++y) {
                for (Element z = 0; z < n; ++z) {
                    if (values[static_cast<std::size_t>(dom.median(x, y, z))] !=
                        cod.median(values[static_cast<std::size_t>(x)],
                                   values[static_cast<std::size_t>(y)],
                                   values[static_cast<std::size_t>(z)])) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) homs.push_back(values);
        int i = n - 1;
        while (i >= 0 && values[static_cast<std::size_t>(i)] == m - 1) {
            values[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++values[static_cast<std::size_t>(i)];
    }
    return homs;
}

// Nondecreasing or nonincreasing with respect to the natural 0..n-1 orders.
inline bool oracle_monotone(const std::vector<Element>& values) {
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[i - 1]) inc = false;
        if (values[i] > values[i - 1]) dec = false;
    }
    return inc || dec;
}

// Relabels an algebra along a bijection: m'(p(x),p(y),p(z)) = p(m(x,y,z)).
inline MedianAlgebra relabel(const MedianAlgebra& a, const std::vector<Element>& perm) {
    const int n = a.size();
    std::vector<Element> table(static_cast<std::size_t>(n) * n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                table[(static_cast<std::size_t>(perm[static_cast<std::size_t>(x)]) * n +
                       perm[static_cast<std::size_t>(y)]) * n +
                      perm[static_cast<std::size_t>(z)]] =
                    perm[static_cast<std::size_t>(a.median(x, y, z))];
    return MedianAlgebra(n, std::move(table));
}

}  // namespace support
