#pragma once

#include <stdexcept>
#include <string>

namespace medalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Table has the wrong length, an out-of-range entry, or a bad size/label list.
class MalformedTable : public Error {
public:
    using Error::Error;
};

/// Carrier larger than the supported desk-scale bound (table memory is n^3).
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Element or coordinate index outside the carrier.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Eager construction found an identity or symmetry violation.
class NotMedian : public Error {
public:
    using Error::Error;
};

/// Upper bounds exist but no least one; cannot occur on valid input.
class AmbiguousJoin : public Error {
public:
    using Error::Error;
};

/// A join required by the median formula is missing; corrupt input only.
class JoinDoesNotExist : public Error {
public:
    using Error::Error;
};

class DisconnectedGraph : public Error {
public:
    using Error::Error;
};

class SearchLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Operation requires a median homomorphism as input.
class NotAHom : public Error {
public:
    using Error::Error;
};

/// Operation requires a chain-shaped algebra on one side.
class NotAChain : public Error {
public:
    using Error::Error;
};

class LabelMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace medalg
