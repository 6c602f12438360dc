#pragma once

#include <stdexcept>

namespace hitq {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotApplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UndefinedMapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotACycleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// a computed object contradicts a structural fact the code relies on
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace hitq
