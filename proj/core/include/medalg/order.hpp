#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "medalg/algebra.hpp"

namespace medalg {

/// The basepoint order of a median algebra: x <=_p y iff m(p,x,y) = x.
/// p is the least element and x /\_p y = m(p,x,y) is the binary meet.
class InducedOrder {
public:
    InducedOrder(MedianAlgebra algebra, Element basepoint);

    int size() const noexcept { return algebra_.size(); }
    Element basepoint() const noexcept { return basepoint_; }
    const MedianAlgebra& algebra() const noexcept { return algebra_; }

    bool le(Element x, Element y) const { return le_[index(x, y)] != 0; }
    Element meet(Element x, Element y) const { return meet_[index(x, y)]; }
    bool comparable(Element x, Element y) const { return le(x, y) || le(y, x); }

private:
    std::size_t index(Element x, Element y) const {
        return static_cast<std::size_t>(x) * algebra_.size() + y;
    }
    MedianAlgebra algebra_;
    Element basepoint_;
    std::vector<std::uint8_t> le_;
    std::vector<Element> meet_;
};

inline InducedOrder induced_order(const MedianAlgebra& a, Element p) {
    return InducedOrder(a, p);
}

/// Least upper bound of {x, y} when it exists, nullopt when x and y have no
/// common upper bound. Throws AmbiguousJoin when upper bounds exist but none
/// is least (impossible in a valid median semilattice).
std::optional<Element> partial_join(const InducedOrder& o, Element x, Element y);

/// Convex hull of {a, b}: all t with m(a,t,b) = t, sorted ascending.
struct Interval {
    Element a = 0;
    Element b = 0;
    std::vector<Element> members;
    bool contains(Element t) const;
};

Interval interval(const MedianAlgebra& alg, Element a, Element b);

/// One violated lattice law on <[a,b], /\_a, /\_b>.
struct LatticeViolation {
    std::string law;
    std::vector<Element> assignment;
    Element left = 0;
    Element right = 0;
    std::string describe() const;
};

/// Verifies that <[a,b], /\_a, /\_b> is a bounded distributive lattice:
/// closure, semilattice laws for both operations, the two absorption laws,
/// both distributive laws, a least and b greatest. Violations are only
/// possible on corrupted tables.
std::optional<LatticeViolation> interval_lattice_check(const MedianAlgebra& alg,
                                                       Element a, Element b);

/// (x /\ y) v (x /\ z) v (z /\ y) computed in the given order. Equals the
/// algebra's median for every basepoint. Throws JoinDoesNotExist or
/// AmbiguousJoin on corrupt input.
Element median_from_order(const InducedOrder& o, Element x, Element y, Element z);

/// A finite poset given by Hasse cover pairs, intended as a meet-semilattice.
struct SemilatticePresentation {
    int size = 0;
    /// (child, parent) pairs: child is covered by parent.
    std::vector<std::pair<Element, Element>> covers;
    std::vector<std::string> labels;
};

struct SemilatticeRejection {
    enum class Reason {
        cyclic,                   // cover closure relates x <= y <= x for x != y
        not_meet_semilattice,     // some pair has no greatest lower bound
        ideal_not_distributive,   // a principal ideal fails a lattice law
        missing_supremum,         // pairwise-bounded meets without a supremum
    };
    Reason reason;
    std::vector<Element> witness;
    std::string message() const;
};

/// Checks the median-semilattice conditions (principal ideals distributive;
/// pairwise-bounded meets of any triple have a supremum) and builds the median
/// table from the order formula. The result passes validate_axioms.
std::variant<MedianAlgebra, SemilatticeRejection>
algebra_from_semilattice(const SemilatticePresentation& p);

/// Smallest triple whose median is not one of the three pairwise meets.
std::optional<Triple> two_three_witness(const InducedOrder& o);
bool is_23_semilattice(const InducedOrder& o);

/// Two incomparable elements with a common upper bound.
struct UpperBoundWitness {
    Element x = 0;
    Element y = 0;
    Element upper = 0;
};

std::optional<UpperBoundWitness> tree_witness(const InducedOrder& o);
bool is_tree(const InducedOrder& o);

/// The five equivalent tree characterisations, each evaluated independently:
/// (2:3) for some / all basepoints, tree for some / all basepoints, and every
/// interval lattice a chain. They coincide on every valid median algebra.
struct TreeReport {
    bool exists_23 = false;
    bool all_23 = false;
    bool exists_tree = false;
    bool all_tree = false;
    bool intervals_chains = false;

    /// First failing (basepoint, triple) for the (2:3) scans, if any.
    std::optional<std::pair<Element, Triple>> witness_23;
    /// First failing (basepoint, witness) for the tree scans, if any.
    std::optional<std::pair<Element, UpperBoundWitness>> witness_tree;
    /// First (a, b, s, t) with s, t in [a,b] incomparable under <=_a.
    std::optional<std::array<Element, 4>> witness_interval;

    bool consistent() const {
        return exists_23 == all_23 && all_23 == exists_tree &&
               exists_tree == all_tree && all_tree == intervals_chains;
    }
};

TreeReport tree_report(const MedianAlgebra& a);

/// Hasse cover pairs (child, parent) of the induced order, sorted.
std::vector<std::pair<Element, Element>> cover_pairs(const InducedOrder& o);

/// Presentation extracted from an induced order; feeding it back through
/// algebra_from_semilattice reproduces the original table.
SemilatticePresentation presentation_from_order(const InducedOrder& o);

}  // namespace medalg
