#include "teq/core/context.hpp"

namespace teq {

Context Context::extended(std::string name, AType type) const {
    Context c = *this;
    c.push(std::move(name), std::move(type));
    return c;
}

std::optional<AType> Context::lookup(const std::string& x) const {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
        if (it->name == x) return it->type;
    return std::nullopt;
}

NameSet Context::names() const {
    NameSet out;
    for (const auto& b : bindings_) out.insert(b.name);
    return out;
}

}  // namespace teq
