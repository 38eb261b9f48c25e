#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lamb/error.hpp"

namespace lamb {

// Element of a graph-model web: a named atom, or the free pair (A, r) over a
// finite set A of elements and a result element. Pairs keep their argument
// set canonical (sorted, deduplicated), so equality is structural and the
// total order below makes enumeration output deterministic.
class WebElem {
public:
    WebElem() = default;

    static WebElem atom(std::string name);
    static WebElem pair(std::vector<WebElem> args, WebElem result);

    explicit operator bool() const { return node_ != nullptr; }
    bool is_atom() const;
    bool is_pair() const;
    const std::string& name() const;
    const std::vector<WebElem>& args() const;
    const WebElem& result() const;
    int rank() const;

    friend bool operator==(const WebElem& a, const WebElem& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const WebElem& a, const WebElem& b) { return cmp(a, b) != 0; }
    // Atoms sort before pairs; atoms by name; pairs by (args, result).
    friend bool operator<(const WebElem& a, const WebElem& b) { return cmp(a, b) < 0; }

    std::string str() const {
        if (is_atom()) return name();
        std::string out = "({";
        for (std::size_t i = 0; i < args().size(); ++i) {
            if (i) out += ',';
            out += args()[i].str();
        }
        out += "}\xe2\x86\x92";  // right arrow
        out += result().str();
        out += ')';
        return out;
    }

private:
    struct Node;

    explicit WebElem(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static int cmp(const WebElem& a, const WebElem& b);

    std::shared_ptr<const Node> node_;
};

struct WebElem::Node {
    bool is_pair = false;
    std::string name;
    std::vector<WebElem> args;
    WebElem result;
    int rank = 0;
};

inline WebElem WebElem::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->name = std::move(name);
    n->rank = 0;
    return WebElem(std::move(n));
}

inline WebElem WebElem::pair(std::vector<WebElem> args, WebElem result) {
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    auto n = std::make_shared<Node>();
    int r = result.rank();
    for (const WebElem& a : args) r = std::max(r, a.rank());
    n->rank = r + 1;
    n->args = std::move(args);
    n->result = std::move(result);
    n->is_pair = true;
    return WebElem(std::move(n));
}

inline bool WebElem::is_atom() const { return !node_->is_pair; }
inline bool WebElem::is_pair() const { return node_->is_pair; }
inline const std::string& WebElem::name() const { return node_->name; }
inline const std::vector<WebElem>& WebElem::args() const { return node_->args; }
inline const WebElem& WebElem::result() const { return node_->result; }
inline int WebElem::rank() const { return node_->rank; }

inline int WebElem::cmp(const WebElem& a, const WebElem& b) {
    if (a.node_ == b.node_) return 0;
    if (a.is_atom() != b.is_atom()) return a.is_atom() ? -1 : 1;
    if (a.is_atom()) return a.name().compare(b.name());
    std::size_t n = std::min(a.args().size(), b.args().size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = cmp(a.args()[i], b.args()[i])) return c;
    if (a.args().size() != b.args().size())
        return a.args().size() < b.args().size() ? -1 : 1;
    return cmp(a.result(), b.result());
}

using WebSet = std::vector<WebElem>;  // sorted, unique

inline WebSet make_web_set(std::vector<WebElem> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

inline bool web_set_contains(const WebSet& s, const WebElem& e) {
    return std::binary_search(s.begin(), s.end(), e);
}

// Parses the canonical element syntax: `a`, `({a,b}->c)`; the unicode arrow
// is accepted as well.
inline WebElem parse_web_elem(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::function<WebElem()> elem = [&]() -> WebElem {
        skip();
        if (pos >= text.size()) throw ParseError("expected a web element", pos);
        if (text[pos] == '(') {
            ++pos;
            skip();
            if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{'", pos);
            ++pos;
            std::vector<WebElem> args;
            skip();
            if (pos < text.size() && text[pos] != '}') {
                while (true) {
                    args.push_back(elem());
                    skip();
                    if (pos < text.size() && text[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            skip();
            if (pos >= text.size() || text[pos] != '}') throw ParseError("expected '}'", pos);
            ++pos;
            skip();
            if (text.substr(pos, 2) == "->") pos += 2;
            else if (text.substr(pos, 3) == "\xe2\x86\x92") pos += 3;
            else throw ParseError("expected '->'", pos);
            WebElem result = elem();
            skip();
            if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return WebElem::pair(std::move(args), std::move(result));
        }
        if (!std::isalnum(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected an atom name", pos);
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '\''))
            ++pos;
        return WebElem::atom(std::string(text.substr(start, pos - start)));
    };
    WebElem e = elem();
    skip();
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    return e;
}

// A finite seed for free completion: declared symbols plus a partial coding.
// A coding entry states p({args...}, result) = name, all four referring to
// declared symbols; the completion adds every remaining pair freely.
struct WebCoding {
    std::vector<std::string> args;  // sorted, unique
    std::string result;
    std::string name;
    int line = 0;  // source line when loaded from a file, 0 otherwise
};

struct PartialWeb {
    std::vector<std::string> atoms;  // sorted, unique
    std::vector<WebCoding> codings;
};

// Line format: `atom <name>` / `code <name> = { e1, e2, ... } -> <e>`.
// Blank lines and lines starting with '#' are ignored.
inline PartialWeb parse_partial_web(std::string_view text) {
    PartialWeb pw;
    std::set<std::string> declared;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < sv.size() && std::isspace(static_cast<unsigned char>(sv[pos]))) ++pos;
        };
        auto ident = [&]() -> std::string {
            skip();
            std::size_t start = pos;
            while (pos < sv.size() &&
                   (std::isalnum(static_cast<unsigned char>(sv[pos])) || sv[pos] == '_' ||
                    sv[pos] == '\''))
                ++pos;
            if (pos == start) throw WebFormatError("expected a name", lineno);
            return std::string(sv.substr(start, pos - start));
        };
        auto expect = [&](char c) {
            skip();
            if (pos >= sv.size() || sv[pos] != c)
                throw WebFormatError(std::string("expected '") + c + "'", lineno);
            ++pos;
        };
        skip();
        if (pos >= sv.size() || sv[pos] == '#') continue;
        std::string keyword = ident();
        if (keyword == "atom") {
            std::string name = ident();
            skip();
            if (pos != sv.size()) throw WebFormatError("trailing input after atom", lineno);
            if (!declared.insert(name).second)
                throw WebFormatError("duplicate declaration of '" + name + "'", lineno);
            pw.atoms.push_back(std::move(name));
        } else if (keyword == "code") {
            WebCoding c;
            c.line = lineno;
            c.name = ident();
            expect('=');
            expect('{');
            skip();
            if (pos < sv.size() && sv[pos] != '}') {
                while (true) {
                    c.args.push_back(ident());
                    skip();
                    if (pos < sv.size() && sv[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            expect('}');
            skip();
            if (sv.substr(pos, 2) == "->") pos += 2;
            else throw WebFormatError("expected '->'", lineno);
            c.result = ident();
            skip();
            if (pos != sv.size()) throw WebFormatError("trailing input after code", lineno);
            for (const std::string& n : c.args)
                if (!declared.count(n))
                    throw WebFormatError("undeclared name '" + n + "'", lineno);
            if (!declared.count(c.result))
                throw WebFormatError("undeclared name '" + c.result + "'", lineno);
            if (!declared.count(c.name))
                throw WebFormatError("undeclared name '" + c.name + "'", lineno);
            std::sort(c.args.begin(), c.args.end());
            c.args.erase(std::unique(c.args.begin(), c.args.end()), c.args.end());
            pw.codings.push_back(std::move(c));
        } else {
            throw WebFormatError("unknown directive '" + keyword + "'", lineno);
        }
    }
    std::sort(pw.atoms.begin(), pw.atoms.end());
    return pw;
}

// Engeler-style seed: n plain atoms, no precoding.
inline PartialWeb engeler_web(int atom_count) {
    PartialWeb pw;
    for (int i = 0; i < atom_count; ++i) {
        std::string name(1, static_cast<char>('a' + i % 26));
        if (i >= 26) name += std::to_string(i / 26);
        pw.atoms.push_back(std::move(name));
    }
    std::sort(pw.atoms.begin(), pw.atoms.end());
    return pw;
}

// The free completion of a partial web. The carrier is the least set holding
// every declared name plus all pairs over it; the coding p maps a precoded
// pair to its name and every other pair to the free Pair node, hence total
// and injective.
class CompletedWeb {
public:
    explicit CompletedWeb(PartialWeb base) : base_(std::move(base)) {
        for (const std::string& a : base_.atoms) atoms_.insert(a);
        for (const WebCoding& c : base_.codings) {
            std::vector<WebElem> args;
            args.reserve(c.args.size());
            for (const std::string& n : c.args) args.push_back(WebElem::atom(n));
            auto key = std::make_pair(make_web_set(std::move(args)), WebElem::atom(c.result));
            if (!code_of_.emplace(key, c.name).second)
                throw InjectivityViolation("pair coded twice: p(" +
                                           WebElem::pair(key.first, key.second).str() +
                                           ") declared again as '" + c.name + "'");
            if (!decode_of_.emplace(c.name, key).second)
                throw InjectivityViolation("name '" + c.name +
                                           "' codes two distinct pairs; coding must be injective");
        }
    }

    const PartialWeb& base() const { return base_; }

    bool has_atom(const std::string& name) const { return atoms_.count(name) > 0; }

    // p(A, r): the precoded name when present, the free pair otherwise.
    WebElem code(WebSet args, WebElem result) const {
        auto it = code_of_.find(std::make_pair(args, result));
        if (it != code_of_.end()) return WebElem::atom(it->second);
        return WebElem::pair(std::move(args), std::move(result));
    }

    // Inverse of the coding where defined: pairs decode to their components,
    // precoded names to the pair they stand for, plain atoms to nothing.
    std::optional<std::pair<WebSet, WebElem>> decode(const WebElem& e) const {
        if (e.is_pair()) return std::make_pair(e.args(), e.result());
        auto it = decode_of_.find(e.name());
        if (it != decode_of_.end()) return it->second;
        return std::nullopt;
    }

    bool contains(const WebElem& e) const {
        if (e.is_atom()) return has_atom(e.name());
        if (code_of_.count(std::make_pair(e.args(), e.result()))) return false;
        for (const WebElem& a : e.args())
            if (!contains(a)) return false;
        return contains(e.result());
    }

    bool is_precoded(const WebSet& args, const WebElem& result) const {
        return code_of_.count(std::make_pair(args, result)) > 0;
    }

    // name -> (args, result) for every precoded entry.
    const std::map<std::string, std::pair<WebSet, WebElem>>& precoded() const {
        return decode_of_;
    }

    // Exactly the carrier elements of rank <= rank_bound, in canonical order.
    // The count is doubly exponential in the bound; requests whose subset
    // work would exceed `limit` throw instead of running.
    WebSet enumerate(int rank_bound, std::uint64_t limit = 1u << 22) const {
        WebSet level;
        level.reserve(atoms_.size());
        for (const std::string& a : atoms_) level.push_back(WebElem::atom(a));
        std::sort(level.begin(), level.end());
        for (int r = 1; r <= rank_bound; ++r) {
            if (level.size() >= 64 || (level.size() > 0 &&
                (std::uint64_t{1} << level.size()) > limit / (level.size() + 1)))
                throw Error("web enumeration too large at rank " + std::to_string(r) + " (" +
                            std::to_string(level.size()) + " elements below)");
            WebSet next = level;
            std::uint64_t subsets = std::uint64_t{1} << level.size();
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                std::vector<WebElem> args;
                for (std::size_t i = 0; i < level.size(); ++i)
                    if (mask & (std::uint64_t{1} << i)) args.push_back(level[i]);
                for (const WebElem& res : level) {
                    if (code_of_.count(std::make_pair(args, res))) continue;
                    WebElem p = WebElem::pair(args, res);
                    if (p.rank() <= rank_bound) next.push_back(p);
                }
            }
            next = make_web_set(std::move(next));
            if (next == level) break;  // no growth; higher ranks add nothing
            level = std::move(next);
        }
        return level;
    }

private:
    PartialWeb base_;
    std::set<std::string> atoms_;
    std::map<std::pair<WebSet, WebElem>, std::string> code_of_;
    std::map<std::string, std::pair<WebSet, WebElem>> decode_of_;
};

inline CompletedWeb free_completion(PartialWeb pw) { return CompletedWeb(std::move(pw)); }

} // namespace lamb
