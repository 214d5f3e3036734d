#include "medalg/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace medalg {

namespace {

std::size_t cube(int n) {
    return static_cast<std::size_t>(n) * n * n;
}

void check_well_formed(int size, const std::vector<Element>& table,
                       const std::vector<std::string>& labels) {
    if (size < 1) {
        throw MalformedTable("size must be at least 1, got " + std::to_string(size));
    }
    if (size > MedianAlgebra::kMaxSize) {
        throw SizeLimitExceeded("size " + std::to_string(size) + " exceeds the cap of " +
                                std::to_string(MedianAlgebra::kMaxSize));
    }
    if (table.size() != cube(size)) {
        throw MalformedTable("table length " + std::to_string(table.size()) +
                             " does not equal size^3 = " + std::to_string(cube(size)));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] < 0 || table[i] >= size) {
            throw MalformedTable("table entry " + std::to_string(table[i]) +
                                 " at position " + std::to_string(i) + " is out of range");
        }
    }
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(size)) {
        throw MalformedTable("labels length " + std::to_string(labels.size()) +
                             " does not match size " + std::to_string(size));
    }
}

// Raw lookup for the exhaustive scans below.
struct Table {
    const Element* t;
    int n;
    Element operator()(Element x, Element y, Element z) const {
        return t[(static_cast<std::size_t>(x) * n + y) * n + z];
    }
};

}  // namespace

MedianAlgebra::MedianAlgebra(int size, std::vector<Element> table,
                             std::vector<std::string> labels)
    : MedianAlgebra(size, std::move(table), std::move(labels), true) {}

MedianAlgebra MedianAlgebra::unchecked(int size, std::vector<Element> table,
                                       std::vector<std::string> labels) {
    return MedianAlgebra(size, std::move(table), std::move(labels), false);
}

MedianAlgebra::MedianAlgebra(int size, std::vector<Element> table,
                             std::vector<std::string> labels, bool check)
    : size_(size), table_(std::move(table)), labels_(std::move(labels)) {
    check_well_formed(size_, table_, labels_);
    if (check) {
        if (auto w = validate_axioms(*this)) {
            throw NotMedian(w->describe());
        }
        if (auto w = check_symmetry(*this)) {
            throw NotMedian(w->describe());
        }
    }
}

Element MedianAlgebra::median(Element x, Element y, Element z) const {
    if (x < 0 || x >= size_ || y < 0 || y >= size_ || z < 0 || z >= size_) {
        throw IndexOutOfRange("median argument out of range for size " +
                              std::to_string(size_));
    }
    return table_[(static_cast<std::size_t>(x) * size_ + y) * size_ + z];
}

std::string MedianAlgebra::label(Element x) const {
    if (x < 0 || x >= size_) {
        throw IndexOutOfRange("label index out of range");
    }
    if (!labels_.empty()) {
        return labels_[static_cast<std::size_t>(x)];
    }
    return std::to_string(x);
}

std::pair<Element, Element> AxiomWitness::evaluate(const MedianAlgebra& a) const {
    Table m{a.table().data(), a.size()};
    if (identity == Identity::absorption) {
        Element x = assignment.at(0), y = assignment.at(1);
        return {m(x, x, y), x};
    }
    Element x = assignment.at(0), y = assignment.at(1);
    Element z = assignment.at(2), w = assignment.at(3);
    return {m(m(x, w, z), y, z), m(m(y, z, w), x, z)};
}

std::string AxiomWitness::describe() const {
    std::ostringstream out;
    if (identity == Identity::absorption) {
        out << "absorption fails at (x=" << assignment.at(0) << ", y=" << assignment.at(1)
            << "): m(x,x,y) = " << left << " but x = " << right;
    } else {
        out << "kolibiar identity fails at (x=" << assignment.at(0)
            << ", y=" << assignment.at(1) << ", z=" << assignment.at(2)
            << ", w=" << assignment.at(3) << "): m(m(x,w,z),y,z) = " << left
            << " but m(m(y,z,w),x,z) = " << right;
    }
    return out.str();
}

std::string SymmetryWitness::describe() const {
    std::ostringstream out;
    out << "symmetry fails: m(" << base[0] << "," << base[1] << "," << base[2]
        << ") = " << left << " but m(" << permuted[0] << "," << permuted[1] << ","
        << permuted[2] << ") = " << right;
    return out.str();
}

std::optional<AxiomWitness> validate_axioms(const MedianAlgebra& a) {
    const int n = a.size();
    Table m{a.table().data(), n};
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            Element v = m(x, x, y);
            if (v != x) {
                return AxiomWitness{AxiomWitness::Identity::absorption, {x, y}, v, x};
            }
        }
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                for (Element w = 0; w < n; ++w) {
                    Element lhs = m(m(x, w, z), y, z);
                    Element rhs = m(m(y, z, w), x, z);
                    if (lhs != rhs) {
                        return AxiomWitness{
                            AxiomWitness::Identity::kolibiar, {x, y, z, w}, lhs, rhs};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<SymmetryWitness> check_symmetry(const MedianAlgebra& a) {
    const int n = a.size();
    Table m{a.table().data(), n};
    static constexpr int perms[5][3] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                Element base = m(x, y, z);
                Element args[3] = {x, y, z};
                for (const auto& p : perms) {
                    Element v = m(args[p[0]], args[p[1]], args[p[2]]);
                    if (v != base) {
                        return SymmetryWitness{
                            {x, y, z}, {args[p[0]], args[p[1]], args[p[2]]}, base, v};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Triple> conservative_witness(const MedianAlgebra& a) {
    const int n = a.size();
    Table m{a.table().data(), n};
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                Element v = m(x, y, z);
                if (v != x && v != y && v != z) {
                    return Triple{x, y, z};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_conservative(const MedianAlgebra& a) {
    return !conservative_witness(a).has_value();
}

std::vector<Element> median_interval_intersection(const MedianAlgebra& a,
                                                  Element x, Element y, Element z) {
    const int n = a.size();
    std::vector<Element> out;
    for (Element t = 0; t < n; ++t) {
        if (a.median(x, t, y) == t && a.median(y, t, z) == t && a.median(x, t, z) == t) {
            out.push_back(t);
        }
    }
    return out;
}

ProductAlgebra::ProductAlgebra(std::vector<MedianAlgebra> factors)
    : factors_(std::move(factors)),
      flat_([&]() -> MedianAlgebra {
          if (factors_.empty()) {
              throw MalformedTable("product needs at least one factor");
          }
          long long total = 1;
          for (const auto& f : factors_) {
              total *= f.size();
              if (total > MedianAlgebra::kMaxSize) {
                  throw SizeLimitExceeded("product size exceeds the cap of " +
                                          std::to_string(MedianAlgebra::kMaxSize));
              }
          }
          const int n = static_cast<int>(total);
          const int k = static_cast<int>(factors_.size());

          std::vector<std::vector<Element>> tuples(n, std::vector<Element>(k));
          for (Element e = 0; e < n; ++e) {
              Element rest = e;
              for (int i = k - 1; i >= 0; --i) {
                  tuples[e][i] = rest % factors_[i].size();
                  rest /= factors_[i].size();
              }
          }

          std::vector<Element> table(cube(n));
          std::vector<Element> med(k);
          for (Element x = 0; x < n; ++x) {
              for (Element y = 0; y < n; ++y) {
                  for (Element z = 0; z < n; ++z) {
                      for (int i = 0; i < k; ++i) {
                          med[i] = factors_[i].median(tuples[x][i], tuples[y][i], tuples[z][i]);
                      }
                      Element enc = 0;
                      for (int i = 0; i < k; ++i) {
                          enc = enc * factors_[i].size() + med[i];
                      }
                      table[(static_cast<std::size_t>(x) * n + y) * n + z] = enc;
                  }
              }
          }

          std::vector<std::string> labels;
          labels.reserve(n);
          for (Element e = 0; e < n; ++e) {
              std::string s = "(";
              for (int i = 0; i < k; ++i) {
                  if (i > 0) s += ",";
                  s += factors_[i].label(tuples[e][i]);
              }
              s += ")";
              labels.push_back(std::move(s));
          }
          return MedianAlgebra(n, std::move(table), std::move(labels));
      }()) {}

const MedianAlgebra& ProductAlgebra::factor(int i) const {
    if (i < 0 || i >= factor_count()) {
        throw IndexOutOfRange("factor index out of range");
    }
    return factors_[static_cast<std::size_t>(i)];
}

std::vector<Element> ProductAlgebra::decode(Element x) const {
    if (x < 0 || x >= size()) {
        throw IndexOutOfRange("element out of range for product of size " +
                              std::to_string(size()));
    }
    std::vector<Element> tuple(factors_.size());
    Element rest = x;
    for (int i = factor_count() - 1; i >= 0; --i) {
        tuple[i] = rest % factors_[i].size();
        rest /= factors_[i].size();
    }
    return tuple;
}

Element ProductAlgebra::encode(const std::vector<Element>& tuple) const {
    if (tuple.size() != factors_.size()) {
        throw IndexOutOfRange("tuple arity does not match factor count");
    }
    Element enc = 0;
    for (int i = 0; i < factor_count(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= factors_[i].size()) {
            throw IndexOutOfRange("tuple component out of range");
        }
        enc = enc * factors_[i].size() + tuple[i];
    }
    return enc;
}

Element ProductAlgebra::median(Element x, Element y, Element z) const {
    return flat_.median(x, y, z);
}

ProductAlgebra make_product(std::vector<MedianAlgebra> factors) {
    return ProductAlgebra(std::move(factors));
}

}  // namespace medalg
