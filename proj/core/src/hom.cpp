#include "medalg/hom.hpp"

#include <algorithm>

#include "medalg/generators.hpp"

namespace medalg {

Mapping::Mapping(ProductAlgebra domain, ProductAlgebra codomain,
                 std::vector<Element> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(domain_.size())) {
        throw MalformedTable("mapping has " + std::to_string(values_.size()) +
                             " values but the domain has " +
                             std::to_string(domain_.size()) + " elements");
    }
    for (Element v : values_) {
        if (v < 0 || v >= codomain_.size()) {
            throw MalformedTable("mapping value " + std::to_string(v) +
                                 " is outside the codomain");
        }
    }
}

Element Mapping::operator()(Element x) const {
    if (x < 0 || x >= domain_.size()) {
        throw IndexOutOfRange("mapping argument out of range");
    }
    return values_[static_cast<std::size_t>(x)];
}

Element Mapping::apply_tuple(const std::vector<Element>& tuple) const {
    return (*this)(domain_.encode(tuple));
}

std::optional<Triple> median_hom_witness(const Mapping& f) {
    const MedianAlgebra& dom = f.domain().flat();
    const MedianAlgebra& cod = f.codomain().flat();
    const int n = dom.size();
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                if (f(dom.median(x, y, z)) != cod.median(f(x), f(y), f(z))) {
                    return Triple{x, y, z};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_median_hom(const Mapping& f) {
    return !median_hom_witness(f).has_value();
}

HomReport hom_report(const Mapping& f) {
    const MedianAlgebra& dom = f.domain().flat();
    const MedianAlgebra& cod = f.codomain().flat();
    const int n = dom.size();

    HomReport r;

    r.median_witness = median_hom_witness(f);
    r.median_hom = !r.median_witness.has_value();

    std::vector<InducedOrder> cod_orders;
    cod_orders.reserve(cod.size());
    for (Element q = 0; q < cod.size(); ++q) {
        cod_orders.emplace_back(cod, q);
    }

    // Semilattice condition per basepoint: f(x /\_p y) = f(x) /\_{f(p)} f(y).
    r.semilattice_hom_at.assign(n, true);
    for (Element p = 0; p < n; ++p) {
        const InducedOrder& co = cod_orders[f(p)];
        for (Element x = 0; x < n && r.semilattice_hom_at[p]; ++x) {
            for (Element y = 0; y < n; ++y) {
                if (f(dom.median(p, x, y)) != co.meet(f(x), f(y))) {
                    r.semilattice_hom_at[p] = false;
                    if (!r.semilattice_witness) r.semilattice_witness = {p, x, y};
                    break;
                }
            }
        }
    }
    r.semilattice_hom_all =
        std::all_of(r.semilattice_hom_at.begin(), r.semilattice_hom_at.end(),
                    [](bool b) { return b; });
    for (Element p = 0; p < n; ++p) {
        if (r.semilattice_hom_at[p]) {
            r.semilattice_hom_some = true;
            r.good_p = p;
            break;
        }
    }

    // Order condition per basepoint: x <=_p y implies f(x) <=_{f(p)} f(y).
    r.order_hom_at.assign(n, true);
    for (Element p = 0; p < n; ++p) {
        const InducedOrder& co = cod_orders[f(p)];
        for (Element x = 0; x < n && r.order_hom_at[p]; ++x) {
            for (Element y = 0; y < n; ++y) {
                if (dom.median(p, x, y) == x && !co.le(f(x), f(y))) {
                    r.order_hom_at[p] = false;
                    if (!r.order_witness) r.order_witness = {p, x, y};
                    break;
                }
            }
        }
    }
    r.order_hom_all = std::all_of(r.order_hom_at.begin(), r.order_hom_at.end(),
                                  [](bool b) { return b; });

    // Interval preservation: t in [a,b] implies f(t) in [f(a),f(b)].
    r.interval_preserving = true;
    for (Element a = 0; a < n && r.interval_preserving; ++a) {
        for (Element b = 0; b < n && r.interval_preserving; ++b) {
            for (Element t = 0; t < n; ++t) {
                if (dom.median(a, t, b) == t &&
                    cod.median(f(a), f(t), f(b)) != f(t)) {
                    r.interval_preserving = false;
                    r.interval_witness = {a, b, t};
                    break;
                }
            }
        }
    }

    // Lattice homomorphism on every interval: both /\_a and /\_b preserved.
    r.interval_lattice_hom = true;
    for (Element a = 0; a < n && r.interval_lattice_hom; ++a) {
        for (Element b = 0; b < n && r.interval_lattice_hom; ++b) {
            std::vector<Element> members;
            for (Element t = 0; t < n; ++t) {
                if (dom.median(a, t, b) == t) members.push_back(t);
            }
            for (std::size_t i = 0; i < members.size() && r.interval_lattice_hom; ++i) {
                for (std::size_t j = 0; j < members.size(); ++j) {
                    Element s = members[i], t = members[j];
                    if (f(dom.median(a, s, t)) != cod.median(f(a), f(s), f(t))) {
                        r.interval_lattice_hom = false;
                        r.lattice_witness = {a, b, s, t, false};
                        break;
                    }
                    if (f(dom.median(b, s, t)) != cod.median(f(b), f(s), f(t))) {
                        r.interval_lattice_hom = false;
                        r.lattice_witness = {a, b, s, t, true};
                        break;
                    }
                }
            }
        }
    }

    r.essential = essential_coordinates(f);

    // Isotone-between-chains condition, meaningful when both sides are trees.
    if (tree_report(dom).all_tree && tree_report(cod).all_tree) {
        bool ok = true;
        std::vector<InducedOrder> dom_orders;
        dom_orders.reserve(n);
        for (Element p = 0; p < n; ++p) dom_orders.emplace_back(dom, p);
        for (Element a = 0; a < n && ok; ++a) {
            const InducedOrder& da = dom_orders[a];
            const InducedOrder& ca = cod_orders[f(a)];
            for (Element b = 0; b < n && ok; ++b) {
                std::vector<Element> members;
                for (Element t = 0; t < n; ++t) {
                    if (dom.median(a, t, b) == t) members.push_back(t);
                }
                for (Element s : members) {
                    if (cod.median(f(a), f(s), f(b)) != f(s)) {
                        ok = false;  // image leaves [f(a), f(b)]
                        break;
                    }
                }
                if (!ok) break;
                for (Element s : members) {
                    for (Element t : members) {
                        if (da.le(s, t) && !ca.le(f(s), f(t))) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        r.isotone_on_intervals = ok;
    }

    return r;
}

Mapping unary_section(const Mapping& f, int coordinate,
                      const std::vector<Element>& context) {
    const ProductAlgebra& dom = f.domain();
    if (coordinate < 0 || coordinate >= dom.factor_count()) {
        throw IndexOutOfRange("section coordinate out of range");
    }
    if (context.size() != static_cast<std::size_t>(dom.factor_count())) {
        throw IndexOutOfRange("section context arity does not match the domain");
    }
    const MedianAlgebra& fi = dom.factor(coordinate);
    std::vector<Element> tuple = context;
    std::vector<Element> values;
    values.reserve(fi.size());
    for (Element v = 0; v < fi.size(); ++v) {
        tuple[static_cast<std::size_t>(coordinate)] = v;
        values.push_back(f.apply_tuple(tuple));
    }
    return Mapping(ProductAlgebra({fi}), f.codomain(), std::move(values));
}

bool is_n_median_hom(const Mapping& f) {
    const ProductAlgebra& dom = f.domain();
    const MedianAlgebra& cod = f.codomain().flat();
    const int k = dom.factor_count();
    for (Element e = 0; e < dom.size(); ++e) {
        std::vector<Element> context = dom.decode(e);
        for (int i = 0; i < k; ++i) {
            // One representative context per section.
            if (context[static_cast<std::size_t>(i)] != 0) continue;
            const MedianAlgebra& fi = dom.factor(i);
            std::vector<Element> section(fi.size());
            std::vector<Element> tuple = context;
            for (Element v = 0; v < fi.size(); ++v) {
                tuple[static_cast<std::size_t>(i)] = v;
                section[static_cast<std::size_t>(v)] = f.apply_tuple(tuple);
            }
            for (Element x = 0; x < fi.size(); ++x) {
                for (Element y = 0; y < fi.size(); ++y) {
                    for (Element z = 0; z < fi.size(); ++z) {
                        Element lhs = section[static_cast<std::size_t>(fi.median(x, y, z))];
                        if (lhs != cod.median(section[x], section[y], section[z])) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

std::vector<int> essential_coordinates(const Mapping& f) {
    const ProductAlgebra& dom = f.domain();
    const int k = dom.factor_count();
    std::vector<int> out;
    for (int i = 0; i < k; ++i) {
        bool essential = false;
        for (Element e = 0; e < dom.size() && !essential; ++e) {
            std::vector<Element> tuple = dom.decode(e);
            if (tuple[static_cast<std::size_t>(i)] != 0) continue;
            Element base = f(e);
            for (Element v = 1; v < dom.factor(i).size(); ++v) {
                tuple[static_cast<std::size_t>(i)] = v;
                if (f.apply_tuple(tuple) != base) {
                    essential = true;
                    break;
                }
            }
        }
        if (essential) out.push_back(i);
    }
    return out;
}

CodomainSplit decompose_codomain(const Mapping& f) {
    const ProductAlgebra& cod = f.codomain();
    const int k = cod.factor_count();
    CodomainSplit split;
    split.components.reserve(k);
    for (int j = 0; j < k; ++j) {
        std::vector<Element> values;
        values.reserve(f.values().size());
        for (Element v : f.values()) {
            values.push_back(cod.decode(v)[static_cast<std::size_t>(j)]);
        }
        split.components.emplace_back(f.domain(), ProductAlgebra({cod.factor(j)}),
                                      std::move(values));
    }
    // Recomposition must reproduce the original values exactly.
    for (Element e = 0; e < f.domain().size(); ++e) {
        std::vector<Element> tuple(k);
        for (int j = 0; j < k; ++j) {
            tuple[static_cast<std::size_t>(j)] = split.components[static_cast<std::size_t>(j)](e);
        }
        if (cod.encode(tuple) != f(e)) {
            throw Error("codomain decomposition failed to recompose");
        }
    }
    return split;
}

std::optional<UnaryDecomposition> decompose_to_unary(const Mapping& f) {
    if (auto w = median_hom_witness(f)) {
        throw NotAHom("input is not a median homomorphism; witness (" +
                      std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) + ", " +
                      std::to_string((*w)[2]) + ")");
    }
    const ProductAlgebra& cod = f.codomain();
    for (int j = 0; j < cod.factor_count(); ++j) {
        if (!tree_report(cod.factor(j)).all_tree) {
            return std::nullopt;
        }
    }

    CodomainSplit split = decompose_codomain(f);
    UnaryDecomposition dec;
    const int k = cod.factor_count();
    dec.coordinate.reserve(k);
    dec.factors.reserve(k);
    for (int j = 0; j < k; ++j) {
        const Mapping& g = split.components[static_cast<std::size_t>(j)];
        std::vector<int> ess = essential_coordinates(g);
        if (ess.size() > 1) {
            // Ruled out for homs into trees; indicates corrupt input.
            throw Error("component depends on more than one coordinate");
        }
        int coord = ess.empty() ? 0 : ess[0];
        const MedianAlgebra& fi = f.domain().factor(coord);
        std::vector<Element> context(f.domain().factor_count(), 0);
        std::vector<Element> values;
        values.reserve(fi.size());
        for (Element v = 0; v < fi.size(); ++v) {
            context[static_cast<std::size_t>(coord)] = v;
            values.push_back(g.apply_tuple(context));
        }
        dec.coordinate.push_back(coord);
        dec.factors.emplace_back(ProductAlgebra({fi}), ProductAlgebra({cod.factor(j)}),
                                 std::move(values));
    }

    // Recomposition check: f(t) = (g_1(t[c_1]), ..., g_k(t[c_k])).
    for (Element e = 0; e < f.domain().size(); ++e) {
        std::vector<Element> tuple = f.domain().decode(e);
        std::vector<Element> image(k);
        for (int j = 0; j < k; ++j) {
            image[static_cast<std::size_t>(j)] =
                dec.factors[static_cast<std::size_t>(j)](
                    tuple[static_cast<std::size_t>(dec.coordinate[static_cast<std::size_t>(j)])]);
        }
        if (cod.encode(image) != f(e)) {
            throw Error("unary decomposition failed to recompose");
        }
    }
    return dec;
}

namespace {

// Triples scheduled at the step where their last participant gets a value.
struct TripleCheck {
    Element x, y, z, med;
};

std::vector<std::vector<TripleCheck>> build_schedule(const MedianAlgebra& dom) {
    const int n = dom.size();
    std::vector<std::vector<TripleCheck>> schedule(static_cast<std::size_t>(n));
    for (Element x = 0; x < n; ++x) {
        for (Element y = x; y < n; ++y) {
            for (Element z = y; z < n; ++z) {
                Element m = dom.median(x, y, z);
                Element step = std::max(z, m);
                schedule[static_cast<std::size_t>(step)].push_back({x, y, z, m});
            }
        }
    }
    return schedule;
}

struct Enumerator {
    const MedianAlgebra& dom;
    const MedianAlgebra& cod;
    const std::vector<std::vector<TripleCheck>>& schedule;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    std::vector<Element> values;
    bool stopped = false;
    const std::function<bool(const std::vector<Element>&)>& found;

    bool consistent_at(int step) const {
        for (const TripleCheck& c : schedule[static_cast<std::size_t>(step)]) {
            if (values[static_cast<std::size_t>(c.med)] !=
                cod.median(values[static_cast<std::size_t>(c.x)],
                           values[static_cast<std::size_t>(c.y)],
                           values[static_cast<std::size_t>(c.z)])) {
                return false;
            }
        }
        return true;
    }

    void run(int step) {
        if (stopped) return;
        if (step == dom.size()) {
            if (!found(values)) stopped = true;
            return;
        }
        for (Element v = 0; v < cod.size(); ++v) {
            if (++nodes > node_limit) {
                throw SearchLimitExceeded("enumeration exceeded the node limit of " +
                                          std::to_string(node_limit));
            }
            values[static_cast<std::size_t>(step)] = v;
            if (consistent_at(step)) {
                run(step + 1);
                if (stopped) return;
            }
        }
    }
};

}  // namespace

std::uint64_t enumerate_homs(const ProductAlgebra& domain,
                             const MedianAlgebra& codomain,
                             HomFilter filter, std::uint64_t node_limit,
                             const std::function<bool(const Mapping&)>& emit) {
    const MedianAlgebra& dom = domain.flat();
    auto schedule = build_schedule(dom);

    std::function<bool(const std::vector<Element>&)> found =
        [&](const std::vector<Element>& values) {
            Mapping m(domain, ProductAlgebra({codomain}), values);
            if (filter != HomFilter::all) {
                std::size_t ess = essential_coordinates(m).size();
                if (filter == HomFilter::essentially_unary && ess > 1) return true;
                if (filter == HomFilter::non_unary && ess <= 1) return true;
            }
            return emit(m);
        };

    Enumerator e{dom, codomain, schedule, node_limit, 0,
                 std::vector<Element>(static_cast<std::size_t>(dom.size())), false, found};
    e.run(0);
    return e.nodes;
}

EnumerationResult enumerate_homs(const ProductAlgebra& domain,
                                 const MedianAlgebra& codomain,
                                 HomFilter filter, std::uint64_t node_limit) {
    EnumerationResult result;
    result.nodes = enumerate_homs(domain, codomain, filter, node_limit,
                                  [&](const Mapping& m) {
                                      result.homs.push_back(m);
                                      return true;
                                  });
    return result;
}

std::optional<Mapping> square_counterexample(const MedianAlgebra& b) {
    const int n = b.size();
    for (Element p0 = 0; p0 < n; ++p0) {
        InducedOrder o(b, p0);
        std::optional<std::array<Element, 4>> best;  // (q, a, b, p)
        for (Element x = 0; x < n; ++x) {
            for (Element y = x + 1; y < n; ++y) {
                if (o.comparable(x, y)) continue;
                auto join = partial_join(o, x, y);
                if (!join) continue;
                std::array<Element, 4> square{o.meet(x, y), x, y, *join};
                if (!best || square < *best) best = square;
            }
        }
        if (best) {
            auto [q, x, y, top] = *best;
            MedianAlgebra two = chain(2);
            Mapping m(ProductAlgebra({two, two}), ProductAlgebra({b}),
                      {q, x, y, top});
            // The four square elements are median-closed and match the
            // componentwise medians of {0,1}^2, so this is always a hom with
            // both coordinates essential.
            if (!is_median_hom(m) || essential_coordinates(m).size() != 2) {
                throw Error("square construction produced an invalid mapping");
            }
            return m;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Element>> chain_order(const MedianAlgebra& a) {
    const int n = a.size();
    for (Element p = 0; p < n; ++p) {
        InducedOrder o(a, p);
        bool total = true;
        for (Element x = 0; x < n && total; ++x) {
            for (Element y = x + 1; y < n; ++y) {
                if (!o.comparable(x, y)) {
                    total = false;
                    break;
                }
            }
        }
        if (!total) continue;
        std::vector<Element> seq(static_cast<std::size_t>(n));
        for (Element x = 0; x < n; ++x) {
            int rank = 0;
            for (Element y = 0; y < n; ++y) {
                if (y != x && o.le(y, x)) ++rank;
            }
            seq[static_cast<std::size_t>(rank)] = x;
        }
        return seq;
    }
    return std::nullopt;
}

ChainMonotoneReport chain_monotone_equiv(const Mapping& f) {
    auto dom_seq = chain_order(f.domain().flat());
    if (!dom_seq) {
        throw NotAChain("domain is not a chain");
    }
    auto cod_seq = chain_order(f.codomain().flat());
    if (!cod_seq) {
        throw NotAChain("codomain is not a chain");
    }

    ChainMonotoneReport r;
    r.small_domain = f.domain().size() < 5;
    r.median_witness = median_hom_witness(f);
    r.median_hom = !r.median_witness.has_value();

    std::vector<int> pos(cod_seq->size());
    for (std::size_t i = 0; i < cod_seq->size(); ++i) {
        pos[static_cast<std::size_t>((*cod_seq)[i])] = static_cast<int>(i);
    }
    bool nondecreasing = true, nonincreasing = true;
    for (std::size_t i = 1; i < dom_seq->size(); ++i) {
        int prev = pos[static_cast<std::size_t>(f((*dom_seq)[i - 1]))];
        int cur = pos[static_cast<std::size_t>(f((*dom_seq)[i]))];
        if (cur < prev) nondecreasing = false;
        if (cur > prev) nonincreasing = false;
    }
    r.monotone = nondecreasing || nonincreasing;
    return r;
}

}  // namespace medalg
