#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braid/errors.hpp"
#include "braid/word.hpp"

namespace braid::expr {

/// Surface syntax for braid words:
///   expr    := atom*
///   atom    := primary ('^' INT)*          (stacked exponents multiply)
///   primary := 's' INT                      generator
///            | 'D' INT                      half twist on that many strands
///            | 'W' INT                      block crossing with that block size
///            | 'F' INT                      full twist on that many strands
///            | 'A' INT ',' INT              pure-braid generator
///            | '(' expr ')'
/// INT is positive except in exponents.  Whitespace separates tokens but is optional.

struct GenAtom {
    int index;
    bool operator==(const GenAtom&) const = default;
};

struct NamedAtom {
    char tag;  // 'D', 'W', 'F' or 'A'
    int a;
    int b;  // second index for 'A', otherwise 0
    bool operator==(const NamedAtom&) const = default;
};

struct Expr;

struct Atom {
    std::variant<GenAtom, NamedAtom, std::shared_ptr<const Expr>> primary;
    int exponent = 1;

    bool operator==(const Atom& o) const;
};

struct Expr {
    std::vector<Atom> atoms;
    bool operator==(const Expr&) const = default;
};

inline bool Atom::operator==(const Atom& o) const {
    if (exponent != o.exponent) return false;
    if (primary.index() != o.primary.index()) return false;
    if (auto* g = std::get_if<GenAtom>(&primary)) return *g == std::get<GenAtom>(o.primary);
    if (auto* n = std::get_if<NamedAtom>(&primary)) return *n == std::get<NamedAtom>(o.primary);
    return *std::get<std::shared_ptr<const Expr>>(primary) ==
           *std::get<std::shared_ptr<const Expr>>(o.primary);
}

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_top() {
        Expr e = parse_sequence();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected ')'", pos_);
        return e;
    }

private:
    Expr parse_sequence() {
        Expr e;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == ')') return e;
            e.atoms.push_back(parse_atom());
        }
    }

    Atom parse_atom() {
        Atom a;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = std::make_shared<Expr>(parse_sequence());
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError("missing ')'", pos_);
            ++pos_;
            a.primary = std::shared_ptr<const Expr>(std::move(inner));
        } else if (c == 's') {
            ++pos_;
            a.primary = GenAtom{parse_int(false)};
        } else if (c == 'D' || c == 'W' || c == 'F') {
            ++pos_;
            a.primary = NamedAtom{c, parse_int(false), 0};
        } else if (c == 'A') {
            ++pos_;
            const int i = parse_int(false);
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ',')
                throw SyntaxError("expected ',' in pure-braid atom", pos_);
            ++pos_;
            a.primary = NamedAtom{'A', i, parse_int(false)};
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
        }
        // Exponents; stacked ones multiply, since (w^a)^b = w^(ab).
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '^') break;
            ++pos_;
            a.exponent *= parse_int(true);
        }
        return a;
    }

    int parse_int(bool allow_negative) {
        skip_ws();
        const std::size_t start = pos_;
        bool neg = false;
        if (allow_negative && pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected an integer", start);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw SyntaxError("integer too large", start);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline void append_letters(std::vector<int>& out, const std::vector<int>& letters, bool invert) {
    if (!invert) {
        out.insert(out.end(), letters.begin(), letters.end());
    } else {
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(-*it);
    }
}

inline std::vector<int> elaborate_letters(const Expr& e, int strands);

inline std::vector<int> atom_letters(const Atom& a, int strands) {
    std::vector<int> base;
    if (auto* g = std::get_if<GenAtom>(&a.primary)) {
        if (g->index < 1 || g->index > strands - 1)
            throw IndexError("generator index exceeds strands-1");
        base.push_back(g->index);
    } else if (auto* n = std::get_if<NamedAtom>(&a.primary)) {
        switch (n->tag) {
            case 'D':
                if (n->a < 1 || n->a > strands) throw IndexError("half twist wider than the declared strands");
                base = delta(n->a).letters();
                break;
            case 'F':
                if (n->a < 1 || n->a > strands) throw IndexError("full twist wider than the declared strands");
                base = full_twist(n->a).letters();
                break;
            case 'W':
                if (n->a < 1 || 2 * n->a > strands)
                    throw IndexError("block crossing wider than the declared strands");
                base = omega(n->a).letters();
                break;
            case 'A': base = a_gen(n->a, n->b, strands).letters(); break;
            default: throw InternalError("unknown named atom");
        }
    } else {
        base = elaborate_letters(*std::get<std::shared_ptr<const Expr>>(a.primary), strands);
    }

    std::vector<int> out;
    const int reps = std::abs(a.exponent);
    out.reserve(base.size() * reps);
    for (int r = 0; r < reps; ++r) append_letters(out, base, a.exponent < 0);
    return out;
}

inline std::vector<int> elaborate_letters(const Expr& e, int strands) {
    std::vector<int> out;
    for (const Atom& a : e.atoms) {
        const std::vector<int> part = atom_letters(a, strands);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace detail

/// Parses surface syntax to an AST.
inline Expr parse(std::string_view text) { return detail::Parser(text).parse_top(); }

/// Renders an AST back to text; parse(print(e)) == e.
inline std::string print(const Expr& e) {
    std::string out;
    for (const Atom& a : e.atoms) {
        if (!out.empty()) out += ' ';
        if (auto* g = std::get_if<GenAtom>(&a.primary)) {
            out += 's' + std::to_string(g->index);
        } else if (auto* n = std::get_if<NamedAtom>(&a.primary)) {
            out += n->tag;
            out += std::to_string(n->a);
            if (n->tag == 'A') out += ',' + std::to_string(n->b);
        } else {
            out += '(';
            out += print(*std::get<std::shared_ptr<const Expr>>(a.primary));
            out += ')';
        }
        if (a.exponent != 1) out += '^' + std::to_string(a.exponent);
    }
    return out;
}

/// Elaborates an AST to the literal braid word on the declared strands; nothing is
/// reduced, so the letters mirror the expression exactly.
inline BraidWord elaborate(const Expr& e, int strands) {
    if (strands < 1) throw IndexError("strand count must be >= 1");
    return BraidWord(strands, detail::elaborate_letters(e, strands));
}

/// parse + elaborate.
inline BraidWord parse_braid(std::string_view text, int strands) {
    return elaborate(parse(text), strands);
}

/// Renders a braid word in the surface syntax ("s2 s3 s1^-1").
inline std::string print_word(const BraidWord& w) {
    std::string out;
    for (int e : w.letters()) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(std::abs(e));
        if (e < 0) out += "^-1";
    }
    return out;
}

}  // namespace braid::expr
