#pragma once

#include <stdexcept>

namespace mol {

/// Bad sizes, mismatched shapes, out-of-domain arguments, non-finite input data.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An algorithm failed to converge or produced non-finite values.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mol
