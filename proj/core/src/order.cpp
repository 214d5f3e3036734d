#include "medalg/order.hpp"

#include <algorithm>
#include <sstream>

namespace medalg {

InducedOrder::InducedOrder(MedianAlgebra algebra, Element basepoint)
    : algebra_(std::move(algebra)), basepoint_(basepoint) {
    const int n = algebra_.size();
    if (basepoint_ < 0 || basepoint_ >= n) {
        throw IndexOutOfRange("basepoint " + std::to_string(basepoint_) +
                              " out of range for size " + std::to_string(n));
    }
    le_.resize(static_cast<std::size_t>(n) * n);
    meet_.resize(static_cast<std::size_t>(n) * n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            Element m = algebra_.median(basepoint_, x, y);
            meet_[index(x, y)] = m;
            le_[index(x, y)] = (m == x) ? 1 : 0;
        }
    }
}

std::optional<Element> partial_join(const InducedOrder& o, Element x, Element y) {
    const int n = o.size();
    if (x < 0 || x >= n || y < 0 || y >= n) {
        throw IndexOutOfRange("partial_join argument out of range");
    }
    std::vector<Element> upper;
    for (Element u = 0; u < n; ++u) {
        if (o.le(x, u) && o.le(y, u)) {
            upper.push_back(u);
        }
    }
    if (upper.empty()) {
        return std::nullopt;
    }
    for (Element c : upper) {
        bool least = true;
        for (Element u : upper) {
            if (!o.le(c, u)) {
                least = false;
                break;
            }
        }
        if (least) {
            return c;
        }
    }
    throw AmbiguousJoin("elements " + std::to_string(x) + " and " + std::to_string(y) +
                        " have upper bounds but no least one (corrupt input)");
}

bool Interval::contains(Element t) const {
    return std::binary_search(members.begin(), members.end(), t);
}

Interval interval(const MedianAlgebra& alg, Element a, Element b) {
    const int n = alg.size();
    Interval out;
    out.a = a;
    out.b = b;
    for (Element t = 0; t < n; ++t) {
        if (alg.median(a, t, b) == t) {
            out.members.push_back(t);
        }
    }
    // Prop-style sanity: the membership test and the image set agree.
    std::vector<Element> image;
    for (Element t = 0; t < n; ++t) {
        image.push_back(alg.median(a, t, b));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != out.members) {
        throw Error("interval membership test disagrees with the image set (corrupt table)");
    }
    return out;
}

std::string LatticeViolation::describe() const {
    std::ostringstream out;
    out << law << " fails at (";
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (i > 0) out << ", ";
        out << assignment[i];
    }
    out << "): " << left << " != " << right;
    return out.str();
}

std::optional<LatticeViolation> interval_lattice_check(const MedianAlgebra& alg,
                                                       Element a, Element b) {
    Interval iv = interval(alg, a, b);
    const std::vector<Element>& s = iv.members;
    auto meet = [&](Element x, Element y) { return alg.median(a, x, y); };
    auto join = [&](Element x, Element y) { return alg.median(b, x, y); };
    auto in = [&](Element x) { return iv.contains(x); };

    for (Element x : s) {
        for (Element y : s) {
            if (!in(meet(x, y))) {
                return LatticeViolation{"meet-closure", {x, y}, meet(x, y), -1};
            }
            if (!in(join(x, y))) {
                return LatticeViolation{"join-closure", {x, y}, join(x, y), -1};
            }
        }
    }
    for (Element x : s) {
        if (meet(x, x) != x) {
            return LatticeViolation{"meet-idempotent", {x}, meet(x, x), x};
        }
        if (join(x, x) != x) {
            return LatticeViolation{"join-idempotent", {x}, join(x, x), x};
        }
    }
    for (Element x : s) {
        for (Element y : s) {
            if (meet(x, y) != meet(y, x)) {
                return LatticeViolation{"meet-commutative", {x, y}, meet(x, y), meet(y, x)};
            }
            if (join(x, y) != join(y, x)) {
                return LatticeViolation{"join-commutative", {x, y}, join(x, y), join(y, x)};
            }
        }
    }
    for (Element x : s) {
        for (Element y : s) {
            for (Element z : s) {
                Element l = meet(meet(x, y), z);
                Element r = meet(x, meet(y, z));
                if (l != r) {
                    return LatticeViolation{"meet-associative", {x, y, z}, l, r};
                }
                l = join(join(x, y), z);
                r = join(x, join(y, z));
                if (l != r) {
                    return LatticeViolation{"join-associative", {x, y, z}, l, r};
                }
            }
        }
    }
    for (Element x : s) {
        for (Element y : s) {
            if (meet(x, join(x, y)) != x) {
                return LatticeViolation{"absorption-meet-join", {x, y}, meet(x, join(x, y)), x};
            }
            if (join(x, meet(x, y)) != x) {
                return LatticeViolation{"absorption-join-meet", {x, y}, join(x, meet(x, y)), x};
            }
        }
    }
    for (Element x : s) {
        for (Element y : s) {
            for (Element z : s) {
                Element l = meet(x, join(y, z));
                Element r = join(meet(x, y), meet(x, z));
                if (l != r) {
                    return LatticeViolation{"distributive-meet-over-join", {x, y, z}, l, r};
                }
                l = join(x, meet(y, z));
                r = meet(join(x, y), join(x, z));
                if (l != r) {
                    return LatticeViolation{"distributive-join-over-meet", {x, y, z}, l, r};
                }
            }
        }
    }
    for (Element x : s) {
        if (meet(a, x) != a) {
            return LatticeViolation{"least-element", {x}, meet(a, x), a};
        }
        if (join(b, x) != b) {
            return LatticeViolation{"greatest-element", {x}, join(b, x), b};
        }
    }
    return std::nullopt;
}

Element median_from_order(const InducedOrder& o, Element x, Element y, Element z) {
    const int n = o.size();
    if (x < 0 || x >= n || y < 0 || y >= n || z < 0 || z >= n) {
        throw IndexOutOfRange("median_from_order argument out of range");
    }
    Element m1 = o.meet(x, y);
    Element m2 = o.meet(x, z);
    Element m3 = o.meet(z, y);
    auto j1 = partial_join(o, m1, m2);
    if (!j1) {
        throw JoinDoesNotExist("no join for the pairwise meets " + std::to_string(m1) +
                               ", " + std::to_string(m2));
    }
    auto j2 = partial_join(o, *j1, m3);
    if (!j2) {
        throw JoinDoesNotExist("no join for " + std::to_string(*j1) + " and the meet " +
                               std::to_string(m3));
    }
    return *j2;
}

std::string SemilatticeRejection::message() const {
    std::ostringstream out;
    switch (reason) {
        case Reason::cyclic:
            out << "not a poset: cover closure relates " << witness.at(0) << " <= "
                << witness.at(1) << " <= " << witness.at(0);
            break;
        case Reason::not_meet_semilattice:
            out << "not-a-meet-semilattice: elements " << witness.at(0) << " and "
                << witness.at(1) << " have no greatest lower bound";
            break;
        case Reason::ideal_not_distributive:
            out << "not-median: the principal ideal below " << witness.at(0)
                << " is not a distributive lattice (witness " << witness.at(1) << ", "
                << witness.at(2) << ", " << witness.at(3) << ")";
            break;
        case Reason::missing_supremum:
            out << "not-median: the pairwise meets of (" << witness.at(0) << ", "
                << witness.at(1) << ", " << witness.at(2)
                << ") are pairwise bounded but have no supremum";
            break;
    }
    return out.str();
}

namespace {

// Poset helper over an explicit le matrix.
struct Poset {
    int n;
    std::vector<std::uint8_t> le;  // n*n
    bool leq(Element x, Element y) const {
        return le[static_cast<std::size_t>(x) * n + y] != 0;
    }

    // Greatest lower bound as the unique maximum of the common down-set.
    std::optional<Element> meet(Element x, Element y) const {
        std::vector<Element> down;
        for (Element z = 0; z < n; ++z) {
            if (leq(z, x) && leq(z, y)) down.push_back(z);
        }
        for (Element c : down) {
            bool greatest = true;
            for (Element z : down) {
                if (!leq(z, c)) {
                    greatest = false;
                    break;
                }
            }
            if (greatest) return c;
        }
        return std::nullopt;
    }

    // Least element of the set of common upper bounds, if any.
    std::optional<Element> sup(const std::vector<Element>& xs) const {
        std::vector<Element> upper;
        for (Element u = 0; u < n; ++u) {
            bool above = true;
            for (Element x : xs) {
                if (!leq(x, u)) {
                    above = false;
                    break;
                }
            }
            if (above) upper.push_back(u);
        }
        for (Element c : upper) {
            bool least = true;
            for (Element u : upper) {
                if (!leq(c, u)) {
                    least = false;
                    break;
                }
            }
            if (least) return c;
        }
        return std::nullopt;
    }

    bool bounded_above(Element x, Element y) const {
        for (Element u = 0; u < n; ++u) {
            if (leq(x, u) && leq(y, u)) return true;
        }
        return false;
    }
};

}  // namespace

std::variant<MedianAlgebra, SemilatticeRejection>
algebra_from_semilattice(const SemilatticePresentation& p) {
    const int n = p.size;
    if (n < 1) {
        throw MalformedTable("semilattice size must be at least 1");
    }
    if (n > MedianAlgebra::kMaxSize) {
        throw SizeLimitExceeded("semilattice size exceeds the cap of " +
                                std::to_string(MedianAlgebra::kMaxSize));
    }
    for (const auto& [c, q] : p.covers) {
        if (c < 0 || c >= n || q < 0 || q >= n) {
            throw MalformedTable("cover pair (" + std::to_string(c) + ", " +
                                 std::to_string(q) + ") out of range");
        }
        if (c == q) {
            throw MalformedTable("cover pair relates an element to itself");
        }
    }
    if (!p.labels.empty() && p.labels.size() != static_cast<std::size_t>(n)) {
        throw MalformedTable("labels length does not match size");
    }

    // Reflexive-transitive closure of the covers.
    Poset poset{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
    auto set_le = [&](Element x, Element y) {
        poset.le[static_cast<std::size_t>(x) * n + y] = 1;
    };
    for (Element x = 0; x < n; ++x) set_le(x, x);
    for (const auto& [c, q] : p.covers) set_le(c, q);
    for (Element k = 0; k < n; ++k) {
        for (Element i = 0; i < n; ++i) {
            if (!poset.leq(i, k)) continue;
            for (Element j = 0; j < n; ++j) {
                if (poset.leq(k, j)) set_le(i, j);
            }
        }
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
            if (poset.leq(x, y) && poset.leq(y, x)) {
                return SemilatticeRejection{SemilatticeRejection::Reason::cyclic, {x, y}};
            }
        }
    }

    // All binary meets must exist.
    std::vector<Element> meet_table(static_cast<std::size_t>(n) * n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            auto m = poset.meet(x, y);
            if (!m) {
                return SemilatticeRejection{
                    SemilatticeRejection::Reason::not_meet_semilattice, {std::min(x, y), std::max(x, y)}};
            }
            meet_table[static_cast<std::size_t>(x) * n + y] = *m;
        }
    }
    auto meet = [&](Element x, Element y) {
        return meet_table[static_cast<std::size_t>(x) * n + y];
    };

    // Every principal ideal must be a distributive lattice. Joins inside an
    // ideal always exist once meets do (finite, with a top), so the check is
    // distributivity with ideal-relative joins.
    for (Element top = 0; top < n; ++top) {
        std::vector<Element> ideal;
        for (Element z = 0; z < n; ++z) {
            if (poset.leq(z, top)) ideal.push_back(z);
        }
        auto join_in = [&](Element x, Element y) -> std::optional<Element> {
            std::vector<Element> upper;
            for (Element u : ideal) {
                if (poset.leq(x, u) && poset.leq(y, u)) upper.push_back(u);
            }
            for (Element c : upper) {
                bool least = true;
                for (Element u : upper) {
                    if (!poset.leq(c, u)) {
                        least = false;
                        break;
                    }
                }
                if (least) return c;
            }
            return std::nullopt;
        };
        for (Element x : ideal) {
            for (Element y : ideal) {
                for (Element z : ideal) {
                    auto jyz = join_in(y, z);
                    if (!jyz) {
                        return SemilatticeRejection{
                            SemilatticeRejection::Reason::ideal_not_distributive, {top, x, y, z}};
                    }
                    Element lhs = meet(x, *jyz);
                    auto rhs = join_in(meet(x, y), meet(x, z));
                    if (!rhs || lhs != *rhs) {
                        return SemilatticeRejection{
                            SemilatticeRejection::Reason::ideal_not_distributive, {top, x, y, z}};
                    }
                }
            }
        }
    }

    // Pairwise-bounded meets of every triple must have a supremum.
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            for (Element c = 0; c < n; ++c) {
                Element m1 = meet(a, b), m2 = meet(b, c), m3 = meet(c, a);
                if (poset.bounded_above(m1, m2) && poset.bounded_above(m2, m3) &&
                    poset.bounded_above(m3, m1)) {
                    if (!poset.sup({m1, m2, m3})) {
                        return SemilatticeRejection{
                            SemilatticeRejection::Reason::missing_supremum, {a, b, c}};
                    }
                }
            }
        }
    }

    // Median table from the order formula; the suprema above are guaranteed
    // because the three meets of (x, y, z) are pairwise bounded by x, y, z.
    std::vector<Element> table(static_cast<std::size_t>(n) * n * n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                auto s = poset.sup({meet(x, y), meet(x, z), meet(z, y)});
                if (!s) {
                    return SemilatticeRejection{
                        SemilatticeRejection::Reason::missing_supremum, {x, y, z}};
                }
                table[(static_cast<std::size_t>(x) * n + y) * n + z] = *s;
            }
        }
    }
    return MedianAlgebra(n, std::move(table), p.labels);
}

std::optional<Triple> two_three_witness(const InducedOrder& o) {
    const int n = o.size();
    const MedianAlgebra& a = o.algebra();
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                Element m = a.median(x, y, z);
                if (m != o.meet(x, y) && m != o.meet(y, z) && m != o.meet(z, x)) {
                    return Triple{x, y, z};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_23_semilattice(const InducedOrder& o) {
    return !two_three_witness(o).has_value();
}

std::optional<UpperBoundWitness> tree_witness(const InducedOrder& o) {
    const int n = o.size();
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
            if (o.comparable(x, y)) continue;
            for (Element u = 0; u < n; ++u) {
                if (o.le(x, u) && o.le(y, u)) {
                    return UpperBoundWitness{x, y, u};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_tree(const InducedOrder& o) {
    return !tree_witness(o).has_value();
}

TreeReport tree_report(const MedianAlgebra& a) {
    const int n = a.size();
    TreeReport r;
    r.exists_23 = false;
    r.all_23 = true;
    r.exists_tree = false;
    r.all_tree = true;

    std::vector<InducedOrder> orders;
    orders.reserve(n);
    for (Element p = 0; p < n; ++p) {
        orders.emplace_back(a, p);
    }

    for (Element p = 0; p < n; ++p) {
        auto w23 = two_three_witness(orders[p]);
        if (w23) {
            r.all_23 = false;
            if (!r.witness_23) r.witness_23 = {p, *w23};
        } else {
            r.exists_23 = true;
        }
        auto wt = tree_witness(orders[p]);
        if (wt) {
            r.all_tree = false;
            if (!r.witness_tree) r.witness_tree = {p, *wt};
        } else {
            r.exists_tree = true;
        }
    }

    r.intervals_chains = true;
    for (Element x = 0; x < n && r.intervals_chains; ++x) {
        const InducedOrder& o = orders[x];
        for (Element y = 0; y < n && r.intervals_chains; ++y) {
            Interval iv = interval(a, x, y);
            for (std::size_t i = 0; i < iv.members.size() && r.intervals_chains; ++i) {
                for (std::size_t j = i + 1; j < iv.members.size(); ++j) {
                    if (!o.comparable(iv.members[i], iv.members[j])) {
                        r.intervals_chains = false;
                        r.witness_interval = {x, y, iv.members[i], iv.members[j]};
                        break;
                    }
                }
            }
        }
    }
    return r;
}

std::vector<std::pair<Element, Element>> cover_pairs(const InducedOrder& o) {
    const int n = o.size();
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (x == y || !o.le(x, y)) continue;
            bool cover = true;
            for (Element z = 0; z < n; ++z) {
                if (z != x && z != y && o.le(x, z) && o.le(z, y)) {
                    cover = false;
                    break;
                }
            }
            if (cover) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SemilatticePresentation presentation_from_order(const InducedOrder& o) {
    SemilatticePresentation p;
    p.size = o.size();
    p.covers = cover_pairs(o);
    if (o.algebra().has_labels()) {
        p.labels = o.algebra().labels();
    }
    return p;
}

}  // namespace medalg
