#include "tubecc/error.hpp"

namespace tubecc {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::validation: return "validation error";
        case ErrorKind::parse: return "parse error";
        case ErrorKind::precondition: return "precondition error";
        case ErrorKind::verification: return "verification failure";
        case ErrorKind::decomposition: return "decomposition failure";
    }
    return "unknown error";
}

}  // namespace tubecc
