#pragma once

#include <cstdint>
#include <string_view>

namespace teq {

// Total is the terminating effect (written `!`), General may diverge (`?`).
enum class Effect : std::uint8_t { Total, General };

constexpr std::string_view effect_symbol(Effect e) {
    return e == Effect::Total ? "!" : "?";
}

}  // namespace teq
