#ifndef TORICSTAB_ERRORS_HPP
#define TORICSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input data.
struct ValidationError : Error {
    using Error::Error;
};

// A band scan whose result changed when the window was enlarged.
struct WindowError : Error {
    using Error::Error;
};

}  // namespace toric

#endif
