#pragma once

#include <string>
#include <vector>

#include "lamb/print.hpp"
#include "lamb/reduce.hpp"
#include "lamb/term.hpp"

namespace lamb {

// Finite Boehm-tree approximant. Bottom marks unexplored depth or a position
// where no head normal form was found within fuel. A node is the shape of a
// head normal form \x1..xn.xi A1..Ak with the Ai approximated below it.
struct BohmApprox {
    bool is_bottom = true;
    std::vector<std::string> binders;
    std::string head;
    std::vector<BohmApprox> children;

    static BohmApprox bottom() { return {}; }
    static BohmApprox node(std::vector<std::string> binders, std::string head,
                           std::vector<BohmApprox> children) {
        BohmApprox n;
        n.is_bottom = false;
        n.binders = std::move(binders);
        n.head = std::move(head);
        n.children = std::move(children);
        return n;
    }

    friend bool operator==(const BohmApprox& a, const BohmApprox& b) {
        if (a.is_bottom != b.is_bottom) return false;
        if (a.is_bottom) return true;
        return a.binders == b.binders && a.head == b.head && a.children == b.children;
    }
    friend bool operator!=(const BohmApprox& a, const BohmApprox& b) { return !(a == b); }
};

// Refinement order: Bottom is below everything, nodes compare structurally.
inline bool refines(const BohmApprox& lo, const BohmApprox& hi) {
    if (lo.is_bottom) return true;
    if (hi.is_bottom) return false;
    if (lo.binders != hi.binders || lo.head != hi.head ||
        lo.children.size() != hi.children.size())
        return false;
    for (std::size_t i = 0; i < lo.children.size(); ++i)
        if (!refines(lo.children[i], hi.children[i])) return false;
    return true;
}

inline std::string to_string(const BohmApprox& a) {
    if (a.is_bottom) return "_|_";
    std::string out;
    if (!a.binders.empty()) {
        out += '\\';
        for (std::size_t i = 0; i < a.binders.size(); ++i) {
            if (i) out += ' ';
            out += a.binders[i];
        }
        out += '.';
    }
    out += a.head;
    for (const BohmApprox& c : a.children) {
        out += ' ';
        bool leaf = c.is_bottom || (c.binders.empty() && c.children.empty());
        if (!leaf) out += '(';
        out += to_string(c);
        if (!leaf) out += ')';
    }
    return out;
}

namespace detail {

// Binder names depend only on the path from the root (free names plus
// enclosing binders), never on sibling subtrees, so deepening the
// approximant refines it without renaming what was already there.
inline BohmApprox bohm_rec(const Term& m, int depth, long fuel,
                           std::vector<std::string>& ctx, const std::set<std::string>& avoid) {
    if (depth <= 0) return BohmApprox::bottom();
    auto r = normalize(m, Strategy::HeadOrder, fuel);
    if (!r.finished) return BohmApprox::bottom();

    std::set<std::string> taken = avoid;
    taken.insert(ctx.begin(), ctx.end());
    NameGenerator gen(std::move(taken));

    std::size_t outer = ctx.size();
    const Term* cur = &r.term;
    std::vector<std::string> binders;
    while (cur->is_lam()) {
        binders.push_back(gen.fresh());
        ctx.push_back(binders.back());
        cur = &cur->body();
    }
    std::vector<const Term*> args;
    while (cur->is_app()) {
        args.push_back(&cur->arg());
        cur = &cur->fn();
    }
    std::string head;
    if (cur->is_free()) {
        head = cur->name();
    } else {
        auto i = static_cast<std::size_t>(cur->index());
        head = i < ctx.size() ? ctx[ctx.size() - 1 - i] : "!" + std::to_string(cur->index());
    }
    std::vector<BohmApprox> children;
    children.reserve(args.size());
    for (auto it = args.rbegin(); it != args.rend(); ++it)
        children.push_back(bohm_rec(**it, depth - 1, fuel, ctx, avoid));
    ctx.resize(outer);
    return BohmApprox::node(std::move(binders), std::move(head), std::move(children));
}

} // namespace detail

// Depth- and fuel-bounded Boehm approximant, monotone in both budgets under
// the refinement order.
inline BohmApprox bohm_approximant(const Term& m, int depth, long fuel) {
    std::vector<std::string> ctx;
    return detail::bohm_rec(m, depth, fuel, ctx, free_variables(m));
}

} // namespace lamb
