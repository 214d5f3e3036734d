#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "medalg/errors.hpp"

namespace medalg {

using Element = int;
using Triple = std::array<Element, 3>;

/// Finite median algebra: elements are 0..size-1 and the ternary operation is
/// stored as a flat table in lexicographic (x, y, z) order.
///
/// Values are immutable after construction and cheap enough to copy at desk
/// scale (size is capped at kMaxSize).
class MedianAlgebra {
public:
    static constexpr int kMaxSize = 64;

    /// Checks well-formedness, the two defining identities and full argument
    /// symmetry. Throws MalformedTable / SizeLimitExceeded / NotMedian.
    MedianAlgebra(int size, std::vector<Element> table,
                  std::vector<std::string> labels = {});

    /// Skips the identity and symmetry checks, for deliberately corrupted
    /// tables. Well-formedness (length, range, size cap) is still enforced.
    static MedianAlgebra unchecked(int size, std::vector<Element> table,
                                   std::vector<std::string> labels = {});

    int size() const noexcept { return size_; }

    /// Table lookup; throws IndexOutOfRange on bad indices.
    Element median(Element x, Element y, Element z) const;

    const std::vector<Element>& table() const noexcept { return table_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Display name of an element: the stored label, or the index as text.
    std::string label(Element x) const;

    /// Structural equality: size and table; labels are presentation only.
    friend bool operator==(const MedianAlgebra& a, const MedianAlgebra& b) {
        return a.size_ == b.size_ && a.table_ == b.table_;
    }
    friend bool operator!=(const MedianAlgebra& a, const MedianAlgebra& b) {
        return !(a == b);
    }

private:
    MedianAlgebra(int size, std::vector<Element> table,
                  std::vector<std::string> labels, bool check);

    int size_ = 0;
    std::vector<Element> table_;
    std::vector<std::string> labels_;
};

/// Violation of one of the two defining identities.
struct AxiomWitness {
    enum class Identity { absorption, kolibiar };
    Identity identity;
    /// (x, y) for absorption, (x, y, z, w) for the 4-variable identity.
    std::vector<Element> assignment;
    Element left = 0;
    Element right = 0;

    /// Re-evaluates the named identity at the stored assignment.
    std::pair<Element, Element> evaluate(const MedianAlgebra& a) const;
    std::string describe() const;
};

/// m(x,y,z) disagrees with one of its argument permutations.
struct SymmetryWitness {
    Triple base{};
    Triple permuted{};
    Element left = 0;
    Element right = 0;
    std::string describe() const;
};

/// Exhaustive check of the two identities (absorption first, then the
/// 4-variable identity over all size^4 assignments). Returns the
/// lexicographically smallest witness, or nullopt when both hold.
std::optional<AxiomWitness> validate_axioms(const MedianAlgebra& a);

/// Exhaustive check that the table agrees on all 6 argument permutations.
std::optional<SymmetryWitness> check_symmetry(const MedianAlgebra& a);

/// Smallest triple with m(x,y,z) outside {x,y,z}, if any.
std::optional<Triple> conservative_witness(const MedianAlgebra& a);
bool is_conservative(const MedianAlgebra& a);

/// [a,b] cap [b,c] cap [a,c], each interval computed by the membership test
/// t = m(a,t,b). Sorted ascending. Equals {m(a,b,c)} on valid algebras.
std::vector<Element> median_interval_intersection(const MedianAlgebra& a,
                                                  Element x, Element y, Element z);

/// Product of median algebras. Elements are tuples encoded as a single index
/// in mixed radix, first factor most significant. The median is componentwise
/// and the flattened table is built (and validated) eagerly.
class ProductAlgebra {
public:
    explicit ProductAlgebra(std::vector<MedianAlgebra> factors);

    int size() const noexcept { return flat_.size(); }
    int factor_count() const noexcept { return static_cast<int>(factors_.size()); }
    const MedianAlgebra& factor(int i) const;
    const std::vector<MedianAlgebra>& factors() const noexcept { return factors_; }

    std::vector<Element> decode(Element x) const;
    Element encode(const std::vector<Element>& tuple) const;

    /// Componentwise median; agrees with flat().median on encoded indices.
    Element median(Element x, Element y, Element z) const;

    /// The same algebra as a single MedianAlgebra over encoded indices.
    const MedianAlgebra& flat() const noexcept { return flat_; }

    friend bool operator==(const ProductAlgebra& a, const ProductAlgebra& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const ProductAlgebra& a, const ProductAlgebra& b) {
        return !(a == b);
    }

private:
    std::vector<MedianAlgebra> factors_;
    MedianAlgebra flat_;
};

ProductAlgebra make_product(std::vector<MedianAlgebra> factors);

}  // namespace medalg
