#pragma once

#include <stdexcept>
#include <string>

namespace deltasys {

enum class Errc {
    invalid_argument,
    signature_mismatch,
    unknown_element,
    kernel_undefined,
    below_threshold,
    budget_exhausted,
    no_amalgam,
    extension_failed,
    beta_unavailable,
    dap_violation,
    exact_refused,
    parse_error,
    schema_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace deltasys
