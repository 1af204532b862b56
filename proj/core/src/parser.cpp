#include "bohl/parser.hpp"

#include <cctype>
#include <vector>

#include "bohl/errors.hpp"

namespace bohl {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Rational value;        // Number
    bool is_integer = false;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const Token& at, const std::string& expected) const {
        std::string got = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
        throw ParseError(at.line, at.column, "expected " + expected + ", found " + got);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
        current_ = Token{};
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': single(Tok::Plus, c); return;
            case '-': single(Tok::Minus, c); return;
            case '*': single(Tok::Star, c); return;
            case '/': single(Tok::Slash, c); return;
            case '^': single(Tok::Caret, c); return;
            case '(': single(Tok::LParen, c); return;
            case ')': single(Tok::RParen, c); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            lex_ident();
            return;
        }
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
    }

    void single(Tok kind, char c) {
        current_.kind = kind;
        current_.text = c;
        consume(1);
    }

    void lex_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        bool decimal = false;
        std::size_t int_end = pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            decimal = true;
            ++pos_;
            std::size_t frac_start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == frac_start)
                throw ParseError(line_, column_, "expected digits after decimal point");
        }
        std::string text(text_.substr(start, pos_ - start));
        current_.kind = Tok::Number;
        current_.text = text;
        current_.is_integer = !decimal;
        if (decimal) {
            // 12.345 -> 12345 / 10^3, exact.
            std::string digits = text.substr(0, int_end - start) + text.substr(int_end - start + 1);
            mpz_class num(digits, 10);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - (int_end - start) - 1);
            current_.value = Rational(num, den);
        } else {
            current_.value = Rational(mpz_class(text, 10), 1);
        }
        column_ += static_cast<int>(pos_ - start);
    }

    void lex_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        current_.kind = Tok::Ident;
        current_.text = std::string(text_.substr(start, pos_ - start));
        column_ += static_cast<int>(pos_ - start);
    }

    void consume(std::size_t n) {
        pos_ += n;
        column_ += static_cast<int>(n);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

std::unique_ptr<ExprAst> node(ExprAst::Kind kind) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    std::unique_ptr<ExprAst> run() {
        auto e = expr();
        if (lex_.peek().kind != Tok::End) lex_.fail(lex_.peek(), "'+', '-', '*' or end of input");
        return e;
    }

private:
    std::unique_ptr<ExprAst> expr() {
        auto left = term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            auto n = node(op == Tok::Plus ? ExprAst::Kind::Add : ExprAst::Kind::Sub);
            n->lhs = std::move(left);
            n->rhs = term();
            left = std::move(n);
        }
        return left;
    }

    std::unique_ptr<ExprAst> term() {
        auto left = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            auto n = node(ExprAst::Kind::Mul);
            n->lhs = std::move(left);
            n->rhs = factor();
            left = std::move(n);
        }
        return left;
    }

    std::unique_ptr<ExprAst> factor() {
        auto base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token e = lex_.peek();
            if (e.kind != Tok::Number || !e.is_integer)
                lex_.fail(e, "a nonnegative integer exponent");
            lex_.take();
            auto n = node(ExprAst::Kind::Pow);
            n->exponent = static_cast<unsigned>(e.value.numerator().get_ui());
            n->lhs = std::move(base);
            base = std::move(n);
        }
        return base;
    }

    std::unique_ptr<ExprAst> atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                Token num = lex_.take();
                // rational := int ('/' uint)?
                if (num.is_integer && lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    Token den = lex_.peek();
                    if (den.kind != Tok::Number || !den.is_integer)
                        lex_.fail(den, "an integer denominator");
                    if (den.value.is_zero())
                        throw ParseError(den.line, den.column, "zero denominator");
                    lex_.take();
                    auto n = node(ExprAst::Kind::Number);
                    n->number = num.value / den.value;
                    return n;
                }
                auto n = node(ExprAst::Kind::Number);
                n->number = num.value;
                return n;
            }
            case Tok::Minus: {
                lex_.take();
                auto n = node(ExprAst::Kind::Neg);
                n->lhs = atom();
                return n;
            }
            case Tok::LParen: {
                lex_.take();
                auto inner = expr();
                if (lex_.peek().kind != Tok::RParen) lex_.fail(lex_.peek(), "')'");
                lex_.take();
                return inner;
            }
            case Tok::Ident: {
                Token id = lex_.take();
                if (id.text == "i") return node(ExprAst::Kind::Imag);
                if (id.text == "t") return node(ExprAst::Kind::Time);
                if (id.text == "exp") {
                    if (lex_.peek().kind != Tok::LParen) lex_.fail(lex_.peek(), "'(' after exp");
                    lex_.take();
                    auto n = node(ExprAst::Kind::Exp);
                    n->lhs = expr();
                    if (lex_.peek().kind != Tok::RParen) lex_.fail(lex_.peek(), "')'");
                    lex_.take();
                    return n;
                }
                auto n = node(ExprAst::Kind::Generator);
                n->name = id.text;
                return n;
            }
            default:
                lex_.fail(t, "a number, 'i', 't', a generator, 'exp(', '(' or '-'");
        }
    }

    Lexer lex_;
};

// Lowering works in an extended term domain that additionally carries a
// monomial in the generator symbols, so bare generators are legal inside
// subexpressions and rejected with a precise diagnostic only where they
// cannot be eliminated.
struct LKey {
    Monomial gens;
    unsigned power = 0;
    Exponent exponent;

    bool operator<(const LKey& o) const {
        if (gens != o.gens) return gens < o.gens;
        if (power != o.power) return power < o.power;
        return exponent < o.exponent;
    }
};

using LVal = std::map<LKey, GaussianRational>;

void lval_add_term(LVal& v, const LKey& key, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

LVal lval_add(const LVal& a, const LVal& b) {
    LVal out = a;
    for (const auto& [key, c] : b) lval_add_term(out, key, c);
    return out;
}

LVal lval_neg(const LVal& a) {
    LVal out;
    for (const auto& [key, c] : a) out.emplace(key, -c);
    return out;
}

LVal lval_mul(const LVal& a, const LVal& b) {
    LVal out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            LKey key;
            key.gens = ka.gens;
            for (const auto& [name, pw] : kb.gens) {
                auto [it, inserted] = key.gens.emplace(name, pw);
                if (!inserted) it->second += pw;
            }
            key.power = ka.power + kb.power;
            key.exponent = ka.exponent + kb.exponent;
            lval_add_term(out, key, ca * cb);
        }
    }
    return out;
}

LVal lval_constant(GaussianRational c) {
    LVal out;
    if (!c.is_zero()) out.emplace(LKey{}, std::move(c));
    return out;
}

Exponent exponent_from_argument(const LVal& arg) {
    Rational growth;
    Rational rational_freq;
    std::map<std::string, Rational> coords;
    for (const auto& [key, c] : arg) {
        if (!key.exponent.is_zero())
            throw LoweringError(
                "exponential argument is not linear in t: it contains an exponential");
        if (key.power > 1)
            throw LoweringError("exponential argument is not linear in t: found t^" +
                                std::to_string(key.power));
        if (key.power == 0) {
            if (key.gens.empty())
                throw LoweringError(
                    "exponential argument has a constant part; only multiples of t are "
                    "representable");
            throw LoweringError("exponential argument contains generator '" +
                                key.gens.begin()->first + "' without a factor of t");
        }
        if (key.gens.empty()) {
            growth += c.re();
            rational_freq += c.im();
        } else if (key.gens.size() == 1 && key.gens.begin()->second == 1) {
            if (!c.re().is_zero())
                throw LoweringError("generator '" + key.gens.begin()->first +
                                    "' would give an irrational growth rate; only imaginary "
                                    "generator frequencies are representable");
            coords[key.gens.begin()->first] += c.im();
        } else {
            throw LoweringError("exponential argument is nonlinear in generator '" +
                                key.gens.begin()->first + "'");
        }
    }
    return Exponent(growth, FreqVector(rational_freq, std::move(coords)));
}

LVal lower_node(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::Number:
            return lval_constant(GaussianRational(ast.number));
        case ExprAst::Kind::Imag:
            return lval_constant(GaussianRational::i());
        case ExprAst::Kind::Time: {
            LVal out;
            out.emplace(LKey{{}, 1, Exponent()}, GaussianRational(Rational(1)));
            return out;
        }
        case ExprAst::Kind::Generator: {
            LVal out;
            out.emplace(LKey{Monomial{{ast.name, 1}}, 0, Exponent()},
                        GaussianRational(Rational(1)));
            return out;
        }
        case ExprAst::Kind::Exp: {
            Exponent e = exponent_from_argument(lower_node(*ast.lhs));
            LVal out;
            out.emplace(LKey{{}, 0, std::move(e)}, GaussianRational(Rational(1)));
            return out;
        }
        case ExprAst::Kind::Neg:
            return lval_neg(lower_node(*ast.lhs));
        case ExprAst::Kind::Add:
            return lval_add(lower_node(*ast.lhs), lower_node(*ast.rhs));
        case ExprAst::Kind::Sub:
            return lval_add(lower_node(*ast.lhs), lval_neg(lower_node(*ast.rhs)));
        case ExprAst::Kind::Mul:
            return lval_mul(lower_node(*ast.lhs), lower_node(*ast.rhs));
        case ExprAst::Kind::Pow: {
            LVal base = lower_node(*ast.lhs);
            LVal out = lval_constant(GaussianRational(Rational(1)));
            for (unsigned k = 0; k < ast.exponent; ++k) out = lval_mul(out, base);
            return out;
        }
    }
    throw LoweringError("unknown expression construct");
}

}  // namespace

std::unique_ptr<ExprAst> parse(std::string_view text) { return Parser(text).run(); }

BohlFunction lower(const ExprAst& ast) {
    LVal value = lower_node(ast);
    std::vector<Term> terms;
    terms.reserve(value.size());
    for (const auto& [key, c] : value) {
        if (!key.gens.empty())
            throw LoweringError("generator '" + key.gens.begin()->first +
                                "' used outside an exponential argument");
        terms.push_back({c, key.power, key.exponent});
    }
    return BohlFunction::normalize(terms);
}

BohlFunction lower_expression(std::string_view text) { return lower(*parse(text)); }

}  // namespace bohl
