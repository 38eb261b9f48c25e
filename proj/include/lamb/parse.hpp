#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamb/error.hpp"
#include "lamb/term.hpp"

namespace lamb {

// Prelude constants, expanded at parse time.
inline const std::map<std::string, Term>& prelude() {
    static const std::map<std::string, Term> table = {
        {"K", combinators::K()},   {"S", combinators::S()}, {"I", combinators::I()},
        {"T", combinators::T()},   {"F", combinators::F()}, {"Omega", combinators::Omega()},
    };
    return table;
}

namespace detail {

// term := abs | app ; abs := ("\" | "λ") var+ "." term ;
// app := atom atom* ; atom := var | "(" term ")" ;
// var := letter (letter | digit | "_")*
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Term parse() {
        Term t = term({});
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_lambda() {
        if (pos_ < text_.size() && text_[pos_] == '\\') return true;
        // UTF-8 lambda
        return text_.substr(pos_, 2) == "\xce\xbb";
    }

    void consume_lambda() { pos_ += text_[pos_] == '\\' ? 1 : 2; }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::optional<std::string> identifier() {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Term term(std::vector<std::string> binders) {
        skip_ws();
        if (at_lambda()) return abstraction(std::move(binders));
        return application(binders);
    }

    Term abstraction(std::vector<std::string> binders) {
        consume_lambda();
        std::size_t nvars = 0;
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            auto name = identifier();
            if (!name) {
                if (nvars == 0) throw ParseError("expected binder after lambda", at);
                break;
            }
            binders.push_back(*name);
            ++nvars;
        }
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '.')
            throw ParseError("expected '.' after binders", pos_);
        ++pos_;
        Term body = term(binders);
        for (std::size_t i = 0; i < nvars; ++i) body = Term::lam(body);
        return body;
    }

    Term application(const std::vector<std::string>& binders) {
        skip_ws();
        std::size_t at = pos_;
        auto first = atom(binders);
        if (!first) throw ParseError("expected a term", at);
        Term t = *first;
        while (true) {
            auto next = atom(binders);
            if (!next) return t;
            t = Term::app(t, *next);
        }
    }

    std::optional<Term> atom(const std::vector<std::string>& binders) {
        skip_ws();
        if (pos_ >= text_.size()) return std::nullopt;
        if (text_[pos_] == '(') {
            ++pos_;
            Term t = term(binders);
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return t;
        }
        std::size_t at = pos_;
        auto name = identifier();
        if (!name) return std::nullopt;
        // Innermost binder wins; binders shadow the prelude.
        for (std::size_t i = binders.size(); i-- > 0;) {
            if (binders[i] == *name) return Term::bound(static_cast<int>(binders.size() - 1 - i));
        }
        if (auto it = prelude().find(*name); it != prelude().end()) return it->second;
        if (std::isupper(static_cast<unsigned char>((*name)[0]))) throw UnknownNameError(*name, at);
        return Term::free(*name);
    }
};

} // namespace detail

inline Term parse(std::string_view text) { return detail::Parser(text).parse(); }

} // namespace lamb
