#include "deltasys/error.hpp"

namespace deltasys {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::signature_mismatch: return "signature_mismatch";
    case Errc::unknown_element: return "unknown_element";
    case Errc::kernel_undefined: return "kernel_undefined";
    case Errc::below_threshold: return "below_threshold";
    case Errc::budget_exhausted: return "budget_exhausted";
    case Errc::no_amalgam: return "no_amalgam";
    case Errc::extension_failed: return "extension_failed";
    case Errc::beta_unavailable: return "beta_unavailable";
    case Errc::dap_violation: return "dap_violation";
    case Errc::exact_refused: return "exact_refused";
    case Errc::parse_error: return "parse_error";
    case Errc::schema_error: return "schema_error";
    }
    return "unknown";
}

} // namespace deltasys
