// medalg: inspect finite median algebras and the homomorphisms between them.
//
// Subcommands: check algebra, check hom, enumerate, decompose, gen,
// counterexample square, export dot. Reports go to stdout (plain key: value
// lines, or one JSON object with --json); errors go to stderr.
//
// Exit codes: 0 = the checked property holds / output was produced,
//             1 = the checked property fails (witness printed),
//             2 = input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "medalg/generators.hpp"
#include "medalg/graph.hpp"
#include "medalg/hom.hpp"
#include "medalg/io.hpp"
#include "medalg/order.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace medalg;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file: " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const char* fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fmt_triple(const Triple& t) {
    return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
           std::to_string(t[2]) + ")";
}

json triple_json(const Triple& t) { return json::array({t[0], t[1], t[2]}); }

struct CheckAlgebraCmd {
    std::string file;
    int basepoint = 0;
    bool as_json = false;

    int run() const {
        ParsedAlgebra parsed = parse_algebra(read_file(file));
        MedianAlgebra a = to_algebra(parsed);
        if (basepoint < 0 || basepoint >= a.size()) {
            throw IndexOutOfRange("basepoint " + std::to_string(basepoint) +
                                  " out of range for size " + std::to_string(a.size()));
        }
        auto conservative = conservative_witness(a);
        TreeReport tr = tree_report(a);
        InducedOrder view(a, basepoint);
        auto covers = cover_pairs(view);

        if (as_json) {
            json out;
            out["size"] = a.size();
            out["axioms"] = "ok";
            out["conservative"] = !conservative.has_value();
            if (conservative) out["conservative_witness"] = triple_json(*conservative);
            out["two_three"] = tr.all_23;
            out["tree"] = tr.all_tree;
            out["tree_report"] = {{"exists_23", tr.exists_23},
                                  {"all_23", tr.all_23},
                                  {"exists_tree", tr.exists_tree},
                                  {"all_tree", tr.all_tree},
                                  {"intervals_chains", tr.intervals_chains}};
            out["basepoint"] = basepoint;
            json cov = json::array();
            for (auto [c, p] : covers) cov.push_back(json::array({c, p}));
            out["covers"] = std::move(cov);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "size: " << a.size() << "\n";
            std::cout << "axioms: ok\n";
            std::cout << "conservative: " << fmt_bool(!conservative.has_value()) << "\n";
            if (conservative) {
                std::cout << "conservative_witness: " << fmt_triple(*conservative) << "\n";
            }
            std::cout << "two_three: " << fmt_bool(tr.all_23) << "\n";
            std::cout << "tree: " << fmt_bool(tr.all_tree) << "\n";
            std::cout << "tree_report: exists_23=" << fmt_bool(tr.exists_23)
                      << " all_23=" << fmt_bool(tr.all_23)
                      << " exists_tree=" << fmt_bool(tr.exists_tree)
                      << " all_tree=" << fmt_bool(tr.all_tree)
                      << " intervals_chains=" << fmt_bool(tr.intervals_chains) << "\n";
            std::cout << "basepoint: " << basepoint << "\n";
            std::cout << "covers:";
            for (auto [c, p] : covers) std::cout << " (" << c << "," << p << ")";
            std::cout << "\n";
        }
        return 0;
    }
};

struct CheckHomCmd {
    std::string file;
    bool as_json = false;

    int run() const {
        Mapping f = parse_mapping(read_file(file));
        HomReport r = hom_report(f);
        bool n_median = is_n_median_hom(f);

        if (as_json) {
            json out;
            out["median_hom"] = r.median_hom;
            if (r.median_witness) out["median_witness"] = triple_json(*r.median_witness);
            out["n_median_hom"] = n_median;
            out["semilattice_hom_all"] = r.semilattice_hom_all;
            out["semilattice_hom_at"] = r.semilattice_hom_at;
            if (r.semilattice_witness) {
                out["semilattice_witness"] = {{"p", r.semilattice_witness->p},
                                              {"x", r.semilattice_witness->x},
                                              {"y", r.semilattice_witness->y}};
            }
            out["order_hom_all"] = r.order_hom_all;
            out["order_hom_at"] = r.order_hom_at;
            if (r.order_witness) {
                out["order_witness"] = {{"p", r.order_witness->p},
                                        {"x", r.order_witness->x},
                                        {"y", r.order_witness->y}};
            }
            out["interval_preserving"] = r.interval_preserving;
            if (r.interval_witness) {
                out["interval_witness"] = {{"a", r.interval_witness->a},
                                           {"b", r.interval_witness->b},
                                           {"t", r.interval_witness->t}};
            }
            out["semilattice_hom_some"] = r.semilattice_hom_some;
            if (r.good_p) out["good_p"] = *r.good_p;
            out["interval_lattice_hom"] = r.interval_lattice_hom;
            out["essential_coordinates"] = r.essential;
            if (r.isotone_on_intervals) {
                out["isotone_on_intervals"] = *r.isotone_on_intervals;
            } else {
                out["isotone_on_intervals"] = nullptr;
            }
            std::cout << out.dump(2) << "\n";
        } else {
            auto bool_list = [](const std::vector<bool>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i > 0) s += " ";
                    s += std::to_string(i) + "=" + fmt_bool(v[i]);
                }
                return s;
            };
            std::cout << "median_hom: " << fmt_bool(r.median_hom) << "\n";
            if (r.median_witness) {
                std::cout << "median_witness: " << fmt_triple(*r.median_witness) << "\n";
            }
            std::cout << "n_median_hom: " << fmt_bool(n_median) << "\n";
            std::cout << "semilattice_hom_all: " << fmt_bool(r.semilattice_hom_all) << "\n";
            std::cout << "semilattice_hom_at: " << bool_list(r.semilattice_hom_at) << "\n";
            if (r.semilattice_witness) {
                std::cout << "semilattice_witness: p=" << r.semilattice_witness->p
                          << " x=" << r.semilattice_witness->x
                          << " y=" << r.semilattice_witness->y << "\n";
            }
            std::cout << "order_hom_all: " << fmt_bool(r.order_hom_all) << "\n";
            std::cout << "order_hom_at: " << bool_list(r.order_hom_at) << "\n";
            if (r.order_witness) {
                std::cout << "order_witness: p=" << r.order_witness->p
                          << " x=" << r.order_witness->x << " y=" << r.order_witness->y
                          << "\n";
            }
            std::cout << "interval_preserving: " << fmt_bool(r.interval_preserving) << "\n";
            if (r.interval_witness) {
                std::cout << "interval_witness: a=" << r.interval_witness->a
                          << " b=" << r.interval_witness->b
                          << " t=" << r.interval_witness->t << "\n";
            }
            std::cout << "semilattice_hom_some: " << fmt_bool(r.semilattice_hom_some)
                      << "\n";
            if (r.good_p) std::cout << "good_p: " << *r.good_p << "\n";
            std::cout << "interval_lattice_hom: " << fmt_bool(r.interval_lattice_hom)
                      << "\n";
            std::cout << "essential_coordinates:";
            if (r.essential.empty()) {
                std::cout << " none";
            } else {
                for (int c : r.essential) std::cout << " " << c;
            }
            std::cout << "\n";
            std::cout << "isotone_on_intervals: "
                      << (r.isotone_on_intervals ? fmt_bool(*r.isotone_on_intervals)
                                                 : "n/a")
                      << "\n";
        }
        return r.median_hom ? 0 : 1;
    }
};

struct EnumerateCmd {
    std::vector<std::string> domain_files;
    std::string codomain_file;
    std::string filter = "all";
    std::uint64_t limit = kDefaultNodeLimit;
    bool as_json = false;

    int run() const {
        std::vector<MedianAlgebra> factors;
        factors.reserve(domain_files.size());
        for (const auto& path : domain_files) {
            factors.push_back(to_algebra(parse_algebra(read_file(path))));
        }
        ProductAlgebra domain(std::move(factors));
        MedianAlgebra codomain = to_algebra(parse_algebra(read_file(codomain_file)));

        HomFilter f = HomFilter::all;
        if (filter == "unary") {
            f = HomFilter::essentially_unary;
        } else if (filter == "non-unary") {
            f = HomFilter::non_unary;
        } else if (filter != "all") {
            throw ParseError("unknown filter \"" + filter + "\"");
        }

        EnumerationResult result = enumerate_homs(domain, codomain, f, limit);

        if (as_json) {
            json out;
            out["domain_size"] = domain.size();
            out["codomain_size"] = codomain.size();
            out["filter"] = filter;
            out["count"] = result.homs.size();
            json homs = json::array();
            for (const Mapping& h : result.homs) homs.push_back(h.values());
            out["homs"] = std::move(homs);
            out["nodes"] = result.nodes;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "domain_size: " << domain.size() << "\n";
            std::cout << "codomain_size: " << codomain.size() << "\n";
            std::cout << "filter: " << filter << "\n";
            std::cout << "count: " << result.homs.size() << "\n";
            for (std::size_t i = 0; i < result.homs.size(); ++i) {
                std::cout << "hom " << i << ":";
                for (Element v : result.homs[i].values()) std::cout << " " << v;
                std::cout << "\n";
            }
            std::cout << "nodes: " << result.nodes << "\n";
        }
        return 0;
    }
};

struct DecomposeCmd {
    std::string file;
    bool as_json = false;

    int run() const {
        Mapping f = parse_mapping(read_file(file));
        auto witness = median_hom_witness(f);
        CodomainSplit split = decompose_codomain(f);
        std::optional<UnaryDecomposition> unary;
        if (!witness) {
            unary = decompose_to_unary(f);
        }

        if (as_json) {
            json out;
            out["median_hom"] = !witness.has_value();
            if (witness) out["median_witness"] = triple_json(*witness);
            json components = json::array();
            for (const Mapping& g : split.components) {
                components.push_back({{"values", g.values()},
                                      {"median_hom", is_median_hom(g)},
                                      {"essential", essential_coordinates(g)}});
            }
            out["components"] = std::move(components);
            if (witness) {
                out["unary"] = nullptr;
            } else if (!unary) {
                out["unary"] = {{"applicable", false}};
            } else {
                json maps = json::array();
                for (std::size_t j = 0; j < unary->factors.size(); ++j) {
                    maps.push_back({{"coordinate", unary->coordinate[j]},
                                    {"values", unary->factors[j].values()}});
                }
                out["unary"] = {{"applicable", true}, {"maps", std::move(maps)}};
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "median_hom: " << fmt_bool(!witness.has_value()) << "\n";
            if (witness) {
                std::cout << "median_witness: " << fmt_triple(*witness) << "\n";
            }
            std::cout << "components: " << split.components.size() << "\n";
            for (std::size_t j = 0; j < split.components.size(); ++j) {
                const Mapping& g = split.components[j];
                std::cout << "component " << j << ": values";
                for (Element v : g.values()) std::cout << " " << v;
                std::cout << " median_hom=" << fmt_bool(is_median_hom(g)) << "\n";
            }
            if (witness) {
                std::cout << "unary: n/a (not a median hom)\n";
            } else if (!unary) {
                std::cout << "unary: not-applicable (a codomain factor is not a tree)\n";
            } else {
                for (std::size_t j = 0; j < unary->factors.size(); ++j) {
                    std::cout << "unary " << j << ": coordinate "
                              << unary->coordinate[j] << " values";
                    for (Element v : unary->factors[j].values()) std::cout << " " << v;
                    std::cout << "\n";
                }
            }
        }
        return witness ? 1 : 0;
    }
};

struct GenCmd {
    std::string kind;
    int n = 0;
    std::vector<int> parents;

    int run() const {
        MedianAlgebra a = [&] {
            if (kind == "chain") return chain(n);
            if (kind == "star") return star(n);
            if (static_cast<int>(parents.size()) != n - 1) {
                throw ParseError("tree with --n " + std::to_string(n) + " needs " +
                                 std::to_string(n - 1) + " parents");
            }
            return tree_from_parents(parents);
        }();
        std::cout << serialize_algebra(a);
        return 0;
    }
};

struct SquareCmd {
    std::string codomain_file;
    bool as_json = false;

    int run() const {
        MedianAlgebra b = to_algebra(parse_algebra(read_file(codomain_file)));
        auto square = square_counterexample(b);
        if (!square) {
            std::cerr << "no square: the codomain is a tree, every hom from a "
                         "product into it is essentially unary\n";
            return 1;
        }
        std::cout << serialize_mapping(*square);
        return 0;
    }
};

struct ExportDotCmd {
    std::string file;
    int basepoint = 0;

    int run() const {
        MedianAlgebra a = to_algebra(parse_algebra(read_file(file)));
        CoveringGraph g = covering_graph(a, basepoint);
        std::cout << export_dot(g, a.has_labels() ? a.labels()
                                                  : std::vector<std::string>{});
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite median algebras: axioms, orders, trees and homomorphisms"};
    app.require_subcommand(1);

    std::function<int()> action;

    CheckAlgebraCmd check_algebra;
    CheckHomCmd check_hom;
    auto* check = app.add_subcommand("check", "validate and classify an input file");
    check->require_subcommand(1);
    auto* ca = check->add_subcommand("algebra", "axioms, conservativeness, (2:3), tree");
    ca->add_option("file", check_algebra.file, "algebra file")->required();
    ca->add_option("--basepoint", check_algebra.basepoint, "basepoint for the order view");
    ca->add_flag("--json", check_algebra.as_json, "machine-readable report");
    ca->callback([&] { action = [&] { return check_algebra.run(); }; });

    auto* ch = check->add_subcommand("hom", "homomorphism conditions for a mapping");
    ch->add_option("file", check_hom.file, "mapping file")->required();
    ch->add_flag("--json", check_hom.as_json, "machine-readable report");
    ch->callback([&] { action = [&] { return check_hom.run(); }; });

    EnumerateCmd enumerate;
    auto* en = app.add_subcommand("enumerate", "all median homs domain -> codomain");
    en->add_option("--domain", enumerate.domain_files, "domain factor file (repeatable)")
        ->required();
    en->add_option("--codomain", enumerate.codomain_file, "codomain file")->required();
    en->add_option("--filter", enumerate.filter, "all | unary | non-unary");
    en->add_option("--limit", enumerate.limit, "search node limit");
    en->add_flag("--json", enumerate.as_json, "machine-readable report");
    en->callback([&] { action = [&] { return enumerate.run(); }; });

    DecomposeCmd decompose;
    auto* de = app.add_subcommand("decompose", "split a mapping along codomain factors");
    de->add_option("file", decompose.file, "mapping file")->required();
    de->add_flag("--json", decompose.as_json, "machine-readable report");
    de->callback([&] { action = [&] { return decompose.run(); }; });

    GenCmd gen;
    auto* ge = app.add_subcommand("gen", "emit a generated algebra file");
    ge->require_subcommand(1);
    auto* gc = ge->add_subcommand("chain", "chain 0 < 1 < ... < n-1");
    gc->add_option("--n", gen.n, "number of elements")->required();
    gc->callback([&] {
        gen.kind = "chain";
        action = [&] { return gen.run(); };
    });
    auto* gs = ge->add_subcommand("star", "bottom with n incomparable atoms");
    gs->add_option("--n", gen.n, "number of atoms")->required();
    gs->callback([&] {
        gen.kind = "star";
        action = [&] { return gen.run(); };
    });
    auto* gt = ge->add_subcommand("tree", "rooted tree from a parent array");
    gt->add_option("--n", gen.n, "number of elements")->required();
    gt->add_option("--parents", gen.parents, "parent of element i+1 (n-1 entries)")
        ->required()
        ->delimiter(',');
    gt->callback([&] {
        gen.kind = "tree";
        action = [&] { return gen.run(); };
    });

    SquareCmd square;
    auto* cx = app.add_subcommand("counterexample", "constructions off the tree class");
    cx->require_subcommand(1);
    auto* sq = cx->add_subcommand(
        "square", "two-coordinate hom from {0,1}^2 into a non-tree codomain");
    sq->add_option("--codomain", square.codomain_file, "codomain file")->required();
    sq->add_flag("--json", square.as_json, "machine-readable output");
    sq->callback([&] { action = [&] { return square.run(); }; });

    ExportDotCmd export_dot_cmd;
    auto* ex = app.add_subcommand("export", "export views of an algebra");
    ex->require_subcommand(1);
    auto* ed = ex->add_subcommand("dot", "covering graph as DOT text");
    ed->add_option("file", export_dot_cmd.file, "algebra file")->required();
    ed->add_option("--basepoint", export_dot_cmd.basepoint, "order basepoint");
    ed->callback([&] { action = [&] { return export_dot_cmd.run(); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const medalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
