#ifndef VDUAL_ERRORS_HPP
#define VDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace vdual {

// Library errors carry a stable machine-readable code next to the human
// message; the CLI maps codes into per-analysis JSON error entries.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw AlgebraError(code, message);
}

} // namespace vdual

#endif
