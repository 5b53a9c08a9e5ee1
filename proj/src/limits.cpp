#include "matcharr/limits.hpp"

#include <utility>

namespace matcharr {

GuardError::GuardError(std::string guard, std::size_t actual, std::size_t limit)
    : std::runtime_error("guard '" + guard + "' exceeded: " + std::to_string(actual) + " > " +
                         std::to_string(limit)),
      guard_(std::move(guard)), actual_(actual), limit_(limit) {}

void check_guard(const std::string& guard, std::size_t actual, std::size_t limit)
{
    if (actual > limit)
        throw GuardError(guard, actual, limit);
}

} // namespace matcharr
