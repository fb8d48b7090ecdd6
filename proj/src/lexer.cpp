#include "c2r/c_frontend.hpp"

#include <array>
#include <cctype>

namespace c2r {

namespace {

constexpr std::array<std::string_view, 8> kAllowedIncludes = {
    "<stdint.h>", "<stdbool.h>", "<stddef.h>", "<stdlib.h>",
    "<string.h>", "<stdio.h>", "<assert.h>", "\"c2r_runtime.h\"",
};

// Longest match first.
constexpr std::array<std::string_view, 46> kPuncts = {
    "<<=", ">>=", "->", "++", "--", "==", "!=", "<=", ">=", "&&", "||", "<<", ">>",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "+", "-", "*", "/", "%",
    "&", "|", "^", "~", "!", "=", "<", ">", "?", ":", "#",
};

class Lexer {
public:
    Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        bool line_start = true;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                advance();
                line_start = true;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                SourceLoc start = loc();
                advance();
                advance();
                while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) advance();
                if (pos_ >= src_.size()) throw CompileError("lex-error", start, "unterminated comment");
                advance();
                advance();
                continue;
            }
            if (c == '#') {
                if (!line_start) throw CompileError("lex-error", loc(), "stray '#'");
                directive();
                continue;
            }
            line_start = false;
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                out.push_back(identifier());
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number());
                continue;
            }
            if (c == '(' && void_cast_ahead()) {
                Token t{TokKind::void_cast, "(void)", 0, loc()};
                while (src_[pos_] != ')') advance();
                advance();
                out.push_back(t);
                continue;
            }
            out.push_back(punct());
        }
        out.push_back(Token{TokKind::eof, "", 0, loc()});
        return out;
    }

private:
    char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    SourceLoc loc() const { return SourceLoc{file_, line_, col_}; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void directive() {
        SourceLoc start = loc();
        std::size_t end = src_.find('\n', pos_);
        if (end == std::string_view::npos) end = src_.size();
        std::string_view line = src_.substr(pos_, end - pos_);
        std::string compact;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
        bool ok = false;
        for (auto inc : kAllowedIncludes)
            if (compact == "#include" + std::string(inc)) ok = true;
        if (!ok)
            throw CompileError("subset-error", start,
                               "preprocessor directive outside the include allowlist: " + std::string(line));
        while (pos_ < end) advance();
    }

    bool void_cast_ahead() const {
        std::size_t p = pos_ + 1;
        auto skip = [&] {
            while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t')) ++p;
        };
        skip();
        if (src_.substr(p, 4) != "void") return false;
        p += 4;
        skip();
        if (p >= src_.size() || src_[p] != ')') return false;
        ++p;
        skip();
        return p < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[p])) || src_[p] == '_');
    }

    Token identifier() {
        Token t{TokKind::ident, "", 0, loc()};
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            t.text += src_[pos_];
            advance();
        }
        return t;
    }

    Token number() {
        Token t{TokKind::integer, "", 0, loc()};
        int radix = 10;
        if (src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            radix = 16;
            t.text += "0x";
            advance();
            advance();
        }
        uint64_t v = 0;
        bool any = false;
        while (pos_ < src_.size()) {
            char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_])));
            int digit;
            if (ch >= '0' && ch <= '9') digit = ch - '0';
            else if (radix == 16 && ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
            else break;
            v = v * static_cast<uint64_t>(radix) + static_cast<uint64_t>(digit);
            t.text += src_[pos_];
            any = true;
            advance();
        }
        if (!any) throw CompileError("lex-error", t.loc, "malformed integer literal");
        while (pos_ < src_.size() && (src_[pos_] == 'u' || src_[pos_] == 'U' || src_[pos_] == 'l' || src_[pos_] == 'L'))
            advance();
        if (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            throw CompileError("lex-error", loc(), "invalid suffix on integer literal");
        t.value = v;
        return t;
    }

    Token punct() {
        for (auto p : kPuncts) {
            if (src_.substr(pos_, p.size()) == p) {
                Token t{TokKind::punct, std::string(p), 0, loc()};
                for (std::size_t i = 0; i < p.size(); ++i) advance();
                return t;
            }
        }
        throw CompileError("lex-error", loc(), std::string("unrecognized character '") + src_[pos_] + "'");
    }

    std::string_view src_;
    std::string file_;
    std::size_t pos_ = 0;
    uint32_t line_ = 1;
    uint32_t col_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
    return Lexer(source, file).run();
}

} // namespace c2r
