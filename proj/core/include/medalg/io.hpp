#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "medalg/algebra.hpp"
#include "medalg/hom.hpp"

namespace medalg {

/// Parsed algebra file: plain algebras keep their table form, product files
/// keep their factor structure.
using ParsedAlgebra = std::variant<MedianAlgebra, ProductAlgebra>;

/// Parses an algebra file. Supported kinds:
///   {"kind":"table","size":n,"table":[n^3 ints],"labels":[...]?}
///   {"kind":"semilattice","size":n,"covers":[[child,parent],...],"labels":[...]?}
///   {"kind":"product","factors":[<algebra>,...]}
///   {"kind":"gen","gen":"chain"|"star"|"tree","n":...,"parents":[...]?}
/// Tables are validated eagerly; semilattice presentations go through the
/// median-semilattice conditions. Unknown keys are rejected. Throws ParseError
/// / MalformedTable / NotMedian.
ParsedAlgebra parse_algebra(std::string_view text);

/// The parsed algebra as a single flat MedianAlgebra.
MedianAlgebra to_algebra(const ParsedAlgebra& p);
/// The parsed algebra as a product (single-factor wrap for plain algebras).
ProductAlgebra to_product(const ParsedAlgebra& p);

/// Parses {"domain":[<algebra>,...],"codomain":<algebra>,"values":[ints]}.
/// Each domain entry becomes one factor (products are flattened into a single
/// factor); a product codomain keeps its factors.
Mapping parse_mapping(std::string_view text);

/// Canonical serialization: plain algebras as "table" files, products as
/// "product" files of table factors. parse(serialize(x)) == x.
std::string serialize_algebra(const MedianAlgebra& a);
std::string serialize_algebra(const ProductAlgebra& a);
std::string serialize_algebra(const ParsedAlgebra& a);
std::string serialize_mapping(const Mapping& f);

}  // namespace medalg
