#pragma once

#include <stdexcept>
#include <string>

namespace lgd {

/// An internal consistency check failed: a computed identity did not verify,
/// a rewrite budget was exhausted, or an exact division left a remainder.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A representation or search would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lgd
