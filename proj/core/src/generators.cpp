#include "medalg/generators.hpp"

#include <algorithm>

#include "medalg/order.hpp"

namespace medalg {

MedianAlgebra chain(int n) {
    if (n < 1) {
        throw MalformedTable("chain needs at least 1 element");
    }
    if (n > MedianAlgebra::kMaxSize) {
        throw SizeLimitExceeded("chain size exceeds the cap of " +
                                std::to_string(MedianAlgebra::kMaxSize));
    }
    std::vector<Element> table(static_cast<std::size_t>(n) * n * n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                Element lo = std::min(x, std::min(y, z));
                Element hi = std::max(x, std::max(y, z));
                table[(static_cast<std::size_t>(x) * n + y) * n + z] =
                    x + y + z - lo - hi;
            }
        }
    }
    return MedianAlgebra(n, std::move(table));
}

namespace {

MedianAlgebra from_presentation(const SemilatticePresentation& p) {
    auto result = algebra_from_semilattice(p);
    // Generated presentations always satisfy the median-semilattice
    // conditions; a rejection here means the generator itself is broken.
    if (auto* rej = std::get_if<SemilatticeRejection>(&result)) {
        throw Error("generator produced an invalid presentation: " + rej->message());
    }
    return std::get<MedianAlgebra>(std::move(result));
}

}  // namespace

MedianAlgebra star(int arms) {
    if (arms < 1) {
        throw MalformedTable("star needs at least 1 arm");
    }
    SemilatticePresentation p;
    p.size = arms + 1;
    for (int i = 1; i <= arms; ++i) {
        p.covers.emplace_back(0, i);
    }
    return from_presentation(p);
}

MedianAlgebra tree_from_parents(const std::vector<int>& parents) {
    SemilatticePresentation p;
    p.size = static_cast<int>(parents.size()) + 1;
    for (std::size_t i = 0; i < parents.size(); ++i) {
        const int child = static_cast<int>(i) + 1;
        if (parents[i] < 0 || parents[i] > static_cast<int>(i)) {
            throw MalformedTable("parents[" + std::to_string(i) + "] = " +
                                 std::to_string(parents[i]) +
                                 " must lie in [0, " + std::to_string(i) + "]");
        }
        p.covers.emplace_back(parents[i], child);
    }
    return from_presentation(p);
}

}  // namespace medalg
