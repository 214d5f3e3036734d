#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "medalg/algebra.hpp"
#include "medalg/order.hpp"

namespace medalg {

/// A mapping from a product of median algebras to a (possibly product) median
/// algebra, value-table encoded over the domain's mixed-radix indices. A plain
/// codomain is represented as a single-factor product.
class Mapping {
public:
    Mapping(ProductAlgebra domain, ProductAlgebra codomain, std::vector<Element> values);

    const ProductAlgebra& domain() const noexcept { return domain_; }
    const ProductAlgebra& codomain() const noexcept { return codomain_; }
    const std::vector<Element>& values() const noexcept { return values_; }

    /// Table lookup; throws IndexOutOfRange.
    Element operator()(Element x) const;
    Element apply_tuple(const std::vector<Element>& tuple) const;

    friend bool operator==(const Mapping& a, const Mapping& b) {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
               a.values_ == b.values_;
    }

private:
    ProductAlgebra domain_;
    ProductAlgebra codomain_;
    std::vector<Element> values_;
};

/// Smallest domain triple where f(m(x,y,z)) != m(f(x),f(y),f(z)).
std::optional<Triple> median_hom_witness(const Mapping& f);
bool is_median_hom(const Mapping& f);

struct BasepointPairWitness {
    Element p = 0;
    Element x = 0;
    Element y = 0;
};

struct IntervalHomWitness {
    Element a = 0;
    Element b = 0;
    Element t = 0;
};

struct IntervalLatticeHomWitness {
    Element a = 0;
    Element b = 0;
    Element s = 0;
    Element t = 0;
    bool join_side = false;  // false: /\_a failed, true: /\_b failed
};

/// Verdicts for the equivalent homomorphism conditions, each checked
/// exhaustively and independently of the others:
///   median_hom             f(m(x,y,z)) = m(fx,fy,fz) for all triples
///   semilattice_hom_all    f(x /\_p y) = f(x) /\_{f(p)} f(y) for all p
///   order_hom_all          x <=_p y implies f(x) <=_{f(p)} f(y) for all p
///   interval_preserving    f([a,b]) subseteq [f(a),f(b)]
///   semilattice_hom_some   the existential variant, with the first good p
///   interval_lattice_hom   f preserves /\_a and /\_b on every [a,b]
/// Per-basepoint verdict vectors back the report output, and the essential
/// coordinate set records which arguments the mapping depends on.
struct HomReport {
    bool median_hom = false;
    std::optional<Triple> median_witness;

    bool semilattice_hom_all = false;
    std::vector<bool> semilattice_hom_at;
    std::optional<BasepointPairWitness> semilattice_witness;

    bool order_hom_all = false;
    std::vector<bool> order_hom_at;
    std::optional<BasepointPairWitness> order_witness;

    bool interval_preserving = false;
    std::optional<IntervalHomWitness> interval_witness;

    bool semilattice_hom_some = false;
    std::optional<Element> good_p;

    bool interval_lattice_hom = false;
    std::optional<IntervalLatticeHomWitness> lattice_witness;

    std::vector<int> essential;

    /// Isotone-between-chains condition, evaluated only when both domain and
    /// codomain are trees.
    std::optional<bool> isotone_on_intervals;
};

HomReport hom_report(const Mapping& f);

/// The unary map obtained by fixing every coordinate of `context` except i.
Mapping unary_section(const Mapping& f, int coordinate,
                      const std::vector<Element>& context);

/// True iff every unary section over every context is a median hom.
bool is_n_median_hom(const Mapping& f);

/// Coordinates i for which two tuples differing only at i map differently.
std::vector<int> essential_coordinates(const Mapping& f);

/// Lemma-style split along the codomain factors: components[j] = pi_j o f.
struct CodomainSplit {
    std::vector<Mapping> components;
};

CodomainSplit decompose_codomain(const Mapping& f);

/// Full unary form: codomain factor j is driven by domain coordinate
/// coordinate[j] through the unary median hom factors[j]. Constant components
/// use coordinate 0 by convention.
struct UnaryDecomposition {
    std::vector<int> coordinate;
    std::vector<Mapping> factors;
};

/// Requires f to be a median hom (throws NotAHom otherwise). Returns nullopt
/// without guessing when some codomain factor is not a tree.
std::optional<UnaryDecomposition> decompose_to_unary(const Mapping& f);

enum class HomFilter { all, essentially_unary, non_unary };

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

struct EnumerationResult {
    std::vector<Mapping> homs;       // lexicographic value order
    std::uint64_t nodes = 0;         // assignments attempted
};

/// Backtracking enumeration of all median homs domain -> codomain: values are
/// assigned in element-index order and a branch is pruned as soon as a fully
/// assigned triple violates median preservation. Throws SearchLimitExceeded
/// past node_limit.
EnumerationResult enumerate_homs(const ProductAlgebra& domain,
                                 const MedianAlgebra& codomain,
                                 HomFilter filter = HomFilter::all,
                                 std::uint64_t node_limit = kDefaultNodeLimit);

/// Streaming variant; emit returns false to stop early. Returns nodes visited.
std::uint64_t enumerate_homs(const ProductAlgebra& domain,
                             const MedianAlgebra& codomain,
                             HomFilter filter, std::uint64_t node_limit,
                             const std::function<bool(const Mapping&)>& emit);

/// Searches basepoint 0 first and then every basepoint for incomparable a, b
/// with a common upper bound; with q = a /\ b and p = a v b, returns the
/// mapping {0,1}^2 -> B with (0,0) -> q, (0,1) -> a, (1,0) -> b, (1,1) -> p
/// (a median hom with both coordinates essential, by construction of the
/// square). Returns nullopt exactly when B is a tree. The square chosen is the
/// lexicographically first (q, a, b, p) at the first basepoint admitting one.
std::optional<Mapping> square_counterexample(const MedianAlgebra& b);

/// Ascending element sequence of a chain algebra (some basepoint order is
/// total), or nullopt when the algebra is not a chain.
std::optional<std::vector<Element>> chain_order(const MedianAlgebra& a);

struct ChainMonotoneReport {
    bool median_hom = false;
    std::optional<Triple> median_witness;
    bool monotone = false;
    /// Set when the domain chain has fewer than five elements, where the
    /// median-hom/monotone equivalence is not guaranteed.
    bool small_domain = false;
};

/// Both verdicts evaluated independently on a map between chains.
/// Throws NotAChain when either side is not a chain.
ChainMonotoneReport chain_monotone_equiv(const Mapping& f);

}  // namespace medalg
