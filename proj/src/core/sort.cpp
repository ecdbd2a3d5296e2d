#include "teq/core/sort.hpp"

namespace teq {

struct Sort::Node {
    Tag tag;
    std::uint32_t id = 0;
    std::shared_ptr<const Sort> dom;
    std::shared_ptr<const Sort> cod;
};

Sort::Tag Sort::tag() const { return node_->tag; }
std::uint32_t Sort::var_id() const { return node_->id; }

Sort Sort::nat() {
    static const Sort n(std::make_shared<const Node>(Node{Tag::Nat, 0, nullptr, nullptr}));
    return n;
}

Sort Sort::arrow(Sort dom, Sort cod) {
    return Sort(std::make_shared<const Node>(Node{Tag::Arrow, 0,
                                                  std::make_shared<const Sort>(std::move(dom)),
                                                  std::make_shared<const Sort>(std::move(cod))}));
}

Sort Sort::var(std::uint32_t id) {
    return Sort(std::make_shared<const Node>(Node{Tag::Var, id, nullptr, nullptr}));
}

const Sort& Sort::dom() const { return *node_->dom; }
const Sort& Sort::cod() const { return *node_->cod; }

bool Sort::contains_var() const {
    switch (tag()) {
    case Tag::Nat:
        return false;
    case Tag::Var:
        return true;
    case Tag::Arrow:
        return dom().contains_var() || cod().contains_var();
    }
    return false;
}

bool operator==(const Sort& a, const Sort& b) {
    if (a.node_ == b.node_) return true;
    if (a.tag() != b.tag()) return false;
    switch (a.tag()) {
    case Sort::Tag::Nat:
        return true;
    case Sort::Tag::Var:
        return a.var_id() == b.var_id();
    case Sort::Tag::Arrow:
        return a.dom() == b.dom() && a.cod() == b.cod();
    }
    return false;
}

std::string to_string(const Sort& s) {
    switch (s.tag()) {
    case Sort::Tag::Nat:
        return "nat";
    case Sort::Tag::Var:
        return "'a" + std::to_string(s.var_id());
    case Sort::Tag::Arrow: {
        std::string d = to_string(s.dom());
        if (s.dom().is_arrow()) d = "(" + d + ")";
        return d + " -> " + to_string(s.cod());
    }
    }
    return {};
}

}  // namespace teq
