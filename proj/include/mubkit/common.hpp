#ifndef MUBKIT_COMMON_HPP
#define MUBKIT_COMMON_HPP

#include <stdexcept>
#include <string>

namespace mubkit {

// All library failures carry a stable machine-readable code ("NotPrime",
// "DimensionMismatch", ...) so callers and tests can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace mubkit

#endif
