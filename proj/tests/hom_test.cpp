#include <doctest.h>

#include <algorithm>

#include "medalg/generators.hpp"
#include "medalg/hom.hpp"
#include "support.hpp"

using namespace medalg;
using support::suite;

namespace {

Mapping simple_map(const MedianAlgebra& dom, const MedianAlgebra& cod,
                   std::vector<Element> values) {
    return Mapping(ProductAlgebra({dom}), ProductAlgebra({cod}), std::move(values));
}

}  // namespace

TEST_CASE("apply is a table lookup") {
    Mapping id = simple_map(chain(3), chain(3), {0, 1, 2});
    CHECK(id(1) == 1);
    CHECK_THROWS_AS(id(3), IndexOutOfRange);

    Mapping constant = simple_map(chain(3), chain(3), {2, 2, 2});
    for (Element x = 0; x < 3; ++x) CHECK(constant(x) == 2);
}

TEST_CASE("constant and identity maps are median homs") {
    CHECK(is_median_hom(simple_map(chain(3), chain(3), {2, 2, 2})));
    CHECK(is_median_hom(simple_map(support::fork(), support::fork(), {0, 1, 2, 3})));
}

TEST_CASE("collapsing the fork stem is not a median hom") {
    // 0, 1 -> 0 and the prongs fixed: m(1,2,3) = 1 maps to 0, but the image
    // median m(0,2,3) is 1. The smallest witness replaces the stem by the
    // root, which violates for the same reason.
    MedianAlgebra a1 = support::fork();
    Mapping f = simple_map(a1, a1, {0, 0, 2, 3});
    auto witness = median_hom_witness(f);
    REQUIRE(witness.has_value());
    CHECK(*witness == Triple{0, 2, 3});
    CHECK(a1.median(1, 2, 3) == 1);
    CHECK(a1.median(0, 2, 3) == 1);
    // The stem triple is a violation as well.
    CHECK(f(a1.median(1, 2, 3)) != a1.median(f(1), f(2), f(3)));

    HomReport r = hom_report(f);
    CHECK(!r.median_hom);
    CHECK(r.order_hom_at[0]);        // order-hom at the root basepoint
    CHECK(!r.order_hom_all);
    CHECK(!r.semilattice_hom_some);  // tree domain: no good basepoint either
}

TEST_CASE("the 0-else-1 map is 2-median but not median") {
    ProductAlgebra dom = make_product({chain(2), chain(2)});
    Mapping f(dom, ProductAlgebra({chain(2)}), {0, 1, 1, 1});
    CHECK(is_n_median_hom(f));
    auto witness = median_hom_witness(f);
    REQUIRE(witness.has_value());
    CHECK(*witness == Triple{0, 1, 2});

    // Projections are median homs and n-median homs.
    Mapping proj1(dom, ProductAlgebra({chain(2)}), {0, 0, 1, 1});
    CHECK(is_median_hom(proj1));
    CHECK(is_n_median_hom(proj1));
}

TEST_CASE("unary sections fix all but one coordinate") {
    ProductAlgebra dom = make_product({chain(2), chain(3)});
    std::vector<Element> values(6);
    for (Element e = 0; e < 6; ++e) values[static_cast<std::size_t>(e)] = e % 3;
    Mapping f(dom, ProductAlgebra({chain(3)}), values);  // second projection
    Mapping section = unary_section(f, 1, {1, 0});
    CHECK(section.values() == std::vector<Element>{0, 1, 2});
    Mapping fixed = unary_section(f, 0, {0, 2});
    CHECK(fixed.values() == std::vector<Element>{2, 2});
    CHECK_THROWS_AS(unary_section(f, 2, {0, 0}), IndexOutOfRange);
}

TEST_CASE("identity report is all-positive") {
    MedianAlgebra a1 = support::fork();
    HomReport r = hom_report(simple_map(a1, a1, {0, 1, 2, 3}));
    CHECK(r.median_hom);
    CHECK(r.semilattice_hom_all);
    CHECK(r.order_hom_all);
    CHECK(r.interval_preserving);
    CHECK(r.semilattice_hom_some);
    CHECK(r.good_p == 0);
    CHECK(r.interval_lattice_hom);
    CHECK(r.essential == std::vector<int>{0});
    REQUIRE(r.isotone_on_intervals.has_value());  // tree to tree
    CHECK(*r.isotone_on_intervals);
}

TEST_CASE("level map off the diamond-plus-top into a 4-chain") {
    // Sends the bottom to 0, the three middle elements to 1 and the top to 3.
    // A semilattice hom for the top basepoint, not for the bottom one, and
    // not a median hom.
    MedianAlgebra a2 = support::diamond_top();
    Mapping f = simple_map(a2, chain(4), {0, 1, 1, 1, 3});
    HomReport r = hom_report(f);
    CHECK(r.semilattice_hom_at[4]);
    CHECK(!r.semilattice_hom_at[0]);
    CHECK(r.semilattice_hom_some);
    CHECK(!r.median_hom);
    REQUIRE(r.median_witness.has_value());
    CHECK(*r.median_witness == Triple{0, 1, 2});
    CHECK(r.order_hom_at[0]);

    // The witness arithmetic: m(1,2,0) = 0 maps to 0, the image median is 1.
    CHECK(a2.median(1, 2, 0) == 0);
    CHECK(chain(4).median(1, 1, 0) == 1);
}

TEST_CASE("raising the diamond join breaks the top-basepoint condition") {
    // The variant that sends the diamond join to 3 as well: under the top
    // basepoint the meet of the two incomparable middles is the join element,
    // whose image 3 disagrees with m(3,1,1) = 1.
    MedianAlgebra a2 = support::diamond_top();
    Mapping f = simple_map(a2, chain(4), {0, 1, 1, 3, 3});
    HomReport r = hom_report(f);
    CHECK(!r.semilattice_hom_at[4]);
    CHECK(!r.semilattice_hom_some);
    CHECK(r.order_hom_at[0]);
    CHECK(!r.order_hom_all);
    CHECK(!r.median_hom);
}

TEST_CASE("essential coordinate detection") {
    ProductAlgebra dom23 = make_product({chain(2), chain(3)});
    std::vector<Element> proj2(6);
    for (Element e = 0; e < 6; ++e) proj2[static_cast<std::size_t>(e)] = e % 3;
    CHECK(essential_coordinates(Mapping(dom23, ProductAlgebra({chain(3)}), proj2)) ==
          std::vector<int>{1});

    CHECK(essential_coordinates(
              Mapping(dom23, ProductAlgebra({chain(3)}), {1, 1, 1, 1, 1, 1})) ==
          std::vector<int>{});

    ProductAlgebra dom22 = make_product({chain(2), chain(2)});
    Mapping square(dom22, ProductAlgebra({support::two_squared()}), {0, 1, 2, 3});
    CHECK(essential_coordinates(square) == std::vector<int>{0, 1});
}

TEST_CASE("codomain split components and recomposition") {
    ProductAlgebra cod = make_product({chain(2), chain(2)});
    Mapping diagonal(ProductAlgebra({chain(2)}), cod, {0, 3});  // x -> (x,x)
    CodomainSplit split = decompose_codomain(diagonal);
    REQUIRE(split.components.size() == 2);
    CHECK(split.components[0].values() == std::vector<Element>{0, 1});
    CHECK(split.components[1].values() == std::vector<Element>{0, 1});

    Mapping single(ProductAlgebra({chain(3)}), ProductAlgebra({chain(2)}), {0, 0, 1});
    CHECK(decompose_codomain(single).components[0].values() == single.values());

    // Identity on a product: the components are the projections.
    ProductAlgebra sq = make_product({chain(2), chain(2)});
    Mapping identity(sq, sq, {0, 1, 2, 3});
    CodomainSplit proj = decompose_codomain(identity);
    CHECK(proj.components[0].values() == std::vector<Element>{0, 0, 1, 1});
    CHECK(proj.components[1].values() == std::vector<Element>{0, 1, 0, 1});
    CHECK(is_median_hom(proj.components[0]));
    CHECK(is_median_hom(proj.components[1]));
}

TEST_CASE("split hom verdicts agree in both directions") {
    ProductAlgebra dom = make_product({chain(2)});
    ProductAlgebra cod = make_product({chain(2), chain(2)});
    for (Element v0 = 0; v0 < 4; ++v0) {
        for (Element v1 = 0; v1 < 4; ++v1) {
            Mapping f(dom, cod, {v0, v1});
            CodomainSplit split = decompose_codomain(f);
            bool all = std::all_of(split.components.begin(), split.components.end(),
                                   [](const Mapping& g) { return is_median_hom(g); });
            CHECK(all == is_median_hom(f));
        }
    }
}

TEST_CASE("unary decomposition over tree codomains") {
    ProductAlgebra dom = make_product({chain(2), chain(3)});
    std::vector<Element> proj1(6);
    for (Element e = 0; e < 6; ++e) proj1[static_cast<std::size_t>(e)] = e / 3;
    Mapping f(dom, ProductAlgebra({chain(2)}), proj1);
    auto dec = decompose_to_unary(f);
    REQUIRE(dec.has_value());
    CHECK(dec->coordinate == std::vector<int>{0});
    CHECK(dec->factors[0].values() == std::vector<Element>{0, 1});

    // Constant components use coordinate 0 by convention.
    Mapping constant(dom, ProductAlgebra({chain(2)}), std::vector<Element>(6, 1));
    auto dec2 = decompose_to_unary(constant);
    REQUIRE(dec2.has_value());
    CHECK(dec2->coordinate == std::vector<int>{0});

    // Non-tree codomain factor: not applicable, no guessing.
    ProductAlgebra dom22 = make_product({chain(2), chain(2)});
    Mapping into_square(dom22, ProductAlgebra({support::two_squared()}), {0, 1, 2, 3});
    REQUIRE(is_median_hom(into_square));
    CHECK(!decompose_to_unary(into_square).has_value());

    // Not a hom: rejected.
    Mapping bad(dom22, ProductAlgebra({chain(2)}), {0, 1, 1, 1});
    CHECK_THROWS_AS(decompose_to_unary(bad), NotAHom);
}

TEST_CASE("hom enumeration over small pairs") {
    // Two elements to two elements: both constants, identity and the swap.
    auto r = enumerate_homs(make_product({chain(2)}), chain(2));
    CHECK(r.homs.size() == 4);

    // Value vectors come out in lexicographic order.
    for (std::size_t i = 1; i < r.homs.size(); ++i) {
        CHECK(r.homs[i - 1].values() < r.homs[i].values());
    }
}

TEST_CASE("enumeration matches the brute-force oracle") {
    ProductAlgebra dom = make_product({chain(2), chain(2)});
    MedianAlgebra s3 = star(3);
    auto oracle = support::brute_force_homs(dom.flat(), s3);
    CHECK(oracle.size() == 28);

    auto r = enumerate_homs(dom, s3);
    REQUIRE(r.homs.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        CHECK(r.homs[i].values() == oracle[i]);
    }

    CHECK(enumerate_homs(dom, s3, HomFilter::essentially_unary).homs.size() == 28);
    CHECK(enumerate_homs(dom, s3, HomFilter::non_unary).homs.empty());

    // Every hom into the star decomposes through one coordinate.
    for (const Mapping& h : r.homs) {
        CHECK(essential_coordinates(h).size() <= 1);
        CHECK(decompose_to_unary(h).has_value());
    }
}

TEST_CASE("enumeration filters partition the homs into a non-tree codomain") {
    ProductAlgebra dom = make_product({chain(2), chain(2)});
    MedianAlgebra b4 = support::two_squared();
    auto all = enumerate_homs(dom, b4);
    auto unary = enumerate_homs(dom, b4, HomFilter::essentially_unary);
    auto non_unary = enumerate_homs(dom, b4, HomFilter::non_unary);
    CHECK(all.homs.size() == support::brute_force_homs(dom.flat(), b4).size());
    CHECK(all.homs.size() == unary.homs.size() + non_unary.homs.size());
    CHECK(!non_unary.homs.empty());

    auto square = square_counterexample(b4);
    REQUIRE(square.has_value());
    bool found = false;
    for (const Mapping& h : non_unary.homs) {
        if (h.values() == square->values()) found = true;
    }
    CHECK(found);
}

TEST_CASE("enumeration respects the node limit") {
    ProductAlgebra dom = make_product({chain(2), chain(2)});
    CHECK_THROWS_AS(enumerate_homs(dom, star(3), HomFilter::all, 3), SearchLimitExceeded);
}

TEST_CASE("square counterexample construction") {
    MedianAlgebra b4 = support::two_squared();
    auto square = square_counterexample(b4);
    REQUIRE(square.has_value());
    CHECK(square->values() == std::vector<Element>{0, 1, 2, 3});
    CHECK(is_median_hom(*square));
    CHECK(essential_coordinates(*square) == std::vector<int>{0, 1});

    CHECK(!square_counterexample(star(3)).has_value());
    CHECK(!square_counterexample(chain(5)).has_value());
    CHECK(!square_counterexample(support::fork()).has_value());

    auto diamond = square_counterexample(support::diamond_top());
    REQUIRE(diamond.has_value());
    CHECK(diamond->values() == std::vector<Element>{0, 1, 2, 3});
    CHECK(is_median_hom(*diamond));
}

TEST_CASE("squares exist exactly off the tree class") {
    for (const auto& [name, algebra] : suite()) {
        CAPTURE(name);
        CHECK(square_counterexample(algebra).has_value() !=
              tree_report(algebra).all_tree);
    }
}

TEST_CASE("chain maps: median hom coincides with monotone") {
    Mapping id = simple_map(chain(5), chain(5), {0, 1, 2, 3, 4});
    auto r = chain_monotone_equiv(id);
    CHECK(r.median_hom);
    CHECK(r.monotone);
    CHECK(!r.small_domain);

    Mapping reversal = simple_map(chain(5), chain(5), {4, 3, 2, 1, 0});
    r = chain_monotone_equiv(reversal);
    CHECK(r.median_hom);
    CHECK(r.monotone);

    Mapping zigzag = simple_map(chain(5), chain(2), {0, 1, 0, 1, 0});
    r = chain_monotone_equiv(zigzag);
    CHECK(!r.median_hom);
    CHECK(!r.monotone);

    Mapping small = simple_map(chain(4), chain(2), {0, 0, 1, 1});
    CHECK(chain_monotone_equiv(small).small_domain);

    Mapping off = simple_map(support::two_squared(), chain(2), {0, 0, 1, 1});
    CHECK_THROWS_AS(chain_monotone_equiv(off), NotAChain);
    Mapping off2 = simple_map(chain(5), support::two_squared(),
                              {0, 0, 0, 0, 0});
    CHECK_THROWS_AS(chain_monotone_equiv(off2), NotAChain);
}

TEST_CASE("chain detection survives relabeling") {
    std::vector<Element> perm = {3, 0, 4, 1, 2};
    MedianAlgebra scrambled = support::relabel(chain(5), perm);
    auto seq = chain_order(scrambled);
    REQUIRE(seq.has_value());
    // The sequence must list each element once and walk the chain end to end.
    std::vector<Element> sorted = *seq;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Element>{0, 1, 2, 3, 4});
    CHECK(!chain_order(star(3)).has_value());
}

TEST_CASE("report verdicts coincide on exhaustive small maps") {
    MedianAlgebra c3 = chain(3);
    for (const auto& values : [] {
             std::vector<std::vector<Element>> all;
             for (Element a = 0; a < 3; ++a)
                 for (Element b = 0; b < 3; ++b)
                     for (Element c = 0; c < 3; ++c) all.push_back({a, b, c});
             return all;
         }()) {
        Mapping f = simple_map(c3, c3, values);
        HomReport r = hom_report(f);
        CHECK(r.median_hom == r.semilattice_hom_all);
        CHECK(r.median_hom == r.order_hom_all);
        CHECK(r.median_hom == r.interval_preserving);
    }
}

TEST_CASE("median homs are lattice homs on every interval") {
    // Exhaustive on the stem-to-square pair plus the enumerated star homs.
    MedianAlgebra b4 = support::two_squared();
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            for (Element c = 0; c < 4; ++c)
                for (Element d = 0; d < 4; ++d) {
                    Mapping f = simple_map(support::fork(), b4, {a, b, c, d});
                    HomReport r = hom_report(f);
                    if (r.median_hom) CHECK(r.interval_lattice_hom);
                }
    for (const Mapping& h :
         enumerate_homs(make_product({chain(2), chain(2)}), star(3)).homs) {
        CHECK(hom_report(h).interval_lattice_hom);
        CHECK(is_n_median_hom(h));  // sections of homs are homs
    }
}

TEST_CASE("between trees, median hom means isotone on every interval") {
    MedianAlgebra a1 = support::fork();
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            for (Element c = 0; c < 4; ++c)
                for (Element d = 0; d < 4; ++d) {
                    HomReport r = hom_report(simple_map(a1, a1, {a, b, c, d}));
                    REQUIRE(r.isotone_on_intervals.has_value());
                    CHECK(*r.isotone_on_intervals == r.median_hom);
                }
}

TEST_CASE("homs from products into chains and trees are essentially unary") {
    std::vector<std::pair<ProductAlgebra, MedianAlgebra>> cases = {
        {make_product({chain(2), chain(2)}), chain(3)},
        {make_product({chain(2), chain(3)}), chain(2)},
        {make_product({chain(2), chain(2)}), support::fork()},
        {make_product({chain(2), chain(2), chain(2)}), chain(2)},
    };
    for (const auto& [dom, cod] : cases) {
        for (const Mapping& h : enumerate_homs(dom, cod).homs) {
            CHECK(essential_coordinates(h).size() <= 1);
        }
    }
}

TEST_CASE("two-coordinate homs from the square exist exactly off the tree class") {
    ProductAlgebra dom = make_product({chain(2), chain(2)});
    for (const auto& [name, algebra] : suite()) {
        CAPTURE(name);
        auto non_unary = enumerate_homs(dom, algebra, HomFilter::non_unary);
        CHECK(non_unary.homs.empty() == tree_report(algebra).all_tree);
    }
}
