#ifndef TREEGROWER_ERROR_HPP
#define TREEGROWER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace treegrower {

enum class errc {
    empty_input,
    self_loop,
    duplicate_edge,
    cycle_detected,
    disconnected_input,
    file_not_found,
    parse_error,
    capacity_exceeded,
    too_large,
    index_out_of_range,
    insufficient_points,
    non_positive_value,
    step_cap_exceeded,
    config_error,
};

const char* errc_name(errc code);

/// Library failure with a stable code; the CLI maps codes to exit codes.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace treegrower

#endif
