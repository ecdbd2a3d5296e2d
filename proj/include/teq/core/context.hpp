#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teq/core/syntax.hpp"

namespace teq {

struct Binding {
    std::string name;
    AType type;
};

// Γ: ordered bindings, most recent last.
class Context {
public:
    Context() = default;
    explicit Context(std::vector<Binding> bs) : bindings_(std::move(bs)) {}

    Context extended(std::string name, AType type) const;
    void push(std::string name, AType type) { bindings_.push_back({std::move(name), std::move(type)}); }

    std::optional<AType> lookup(const std::string& x) const;
    bool binds(const std::string& x) const { return lookup(x).has_value(); }
    NameSet names() const;

    const std::vector<Binding>& bindings() const { return bindings_; }
    std::size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }

private:
    std::vector<Binding> bindings_;
};

}  // namespace teq
