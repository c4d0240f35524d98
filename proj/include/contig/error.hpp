#pragma once

#include <stdexcept>
#include <string>

namespace contig {

/// Malformed input: bad documents, mismatched shapes, non-simplicial
/// assignments, unknown vertex names.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size or search cap was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace contig
