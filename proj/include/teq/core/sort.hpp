#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace teq {

// Simple sorts of W': nat, A -> A, and solver variables.
class Sort {
public:
    enum class Tag : std::uint8_t { Nat, Arrow, Var };

    static Sort nat();
    static Sort arrow(Sort dom, Sort cod);
    static Sort var(std::uint32_t id);

    Tag tag() const;
    bool is_nat() const { return tag() == Tag::Nat; }
    bool is_arrow() const { return tag() == Tag::Arrow; }
    bool is_var() const { return tag() == Tag::Var; }

    const Sort& dom() const;
    const Sort& cod() const;
    std::uint32_t var_id() const;

    bool contains_var() const;

    friend bool operator==(const Sort& a, const Sort& b);

private:
    struct Node;
    explicit Sort(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const Sort& s);

}  // namespace teq
