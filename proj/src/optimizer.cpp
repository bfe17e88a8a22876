#include "iwso/optimizer.hpp"

#include <string>

#include "iwso/error.hpp"

namespace iwso {

std::string_view to_string(StopReason reason) noexcept {
    switch (reason) {
    case StopReason::budget:
        return "budget";
    case StopReason::stall:
        return "stall";
    case StopReason::target:
        return "target";
    }
    return "budget";
}

StopReason parse_stop_reason(std::string_view name) {
    if (name == "budget") {
        return StopReason::budget;
    }
    if (name == "stall") {
        return StopReason::stall;
    }
    if (name == "target") {
        return StopReason::target;
    }
    throw LookupError("unknown stop reason '" + std::string(name) + "'");
}

} // namespace iwso
