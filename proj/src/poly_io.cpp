#include "tca/poly_io.hpp"

#include <cctype>

#include "tca/errors.hpp"

namespace tca {

namespace {

class Parser {
public:
    Parser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), text_(text) {}

    Poly run() {
        skipWs();
        if (atEnd()) raise(ErrorCode::SyntaxError, "empty input");
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            advance();
        }
        Poly total = parseTerm();
        if (negative) total = -total;
        skipWs();
        while (!atEnd()) {
            const char op = peek();
            if (op != '+' && op != '-')
                raise(ErrorCode::SyntaxError, std::string("unexpected character '") + op + "'");
            advance();
            Poly term = parseTerm();
            total = op == '+' ? total + term : total - term;
            skipWs();
        }
        return total;
    }

private:
    RingPtr ring_;
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipWs() {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void raise(ErrorCode code, const std::string& msg) {
        fail(code, msg + " at " + std::to_string(line_) + ":" + std::to_string(col_));
    }

    BigInt parseUInt(ErrorCode onMissing, const char* what) {
        skipWs();
        if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek())))
            raise(onMissing, std::string("expected ") + what);
        std::string digits;
        while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        // Base must be pinned: the default auto-detection would read a
        // leading zero as octal.
        return BigInt(digits, 10);
    }

    int parseIndex() {
        BigInt n = parseUInt(ErrorCode::IndexError, "index");
        if (n > 1000000) raise(ErrorCode::IndexError, "index out of range");
        return static_cast<int>(n.get_si());
    }

    void expect(char c, ErrorCode code) {
        skipWs();
        if (atEnd() || peek() != c)
            raise(code, std::string("expected '") + c + "'");
        advance();
    }

    // var [ '^' uint ]; applies index normalization and range checks.
    Poly parseFactor() {
        skipWs();
        if (atEnd()) raise(ErrorCode::SyntaxError, "expected variable");
        const char kind = peek();
        if (kind != 'x' && kind != 'y' && kind != 't')
            raise(ErrorCode::SyntaxError, std::string("expected variable, got '") + kind + "'");
        advance();
        Poly base;
        if (kind == 't') {
            const int k = parseIndex();
            if (k < 1 || k > ring_->auxVars())
                raise(ErrorCode::IndexError, "t" + std::to_string(k) + " out of range");
            base = Poly::tVar(ring_, k);
        } else {
            expect('[', ErrorCode::IndexError);
            const int i = parseIndex();
            expect(',', ErrorCode::IndexError);
            const int j = parseIndex();
            expect(']', ErrorCode::IndexError);
            const int bound = kind == 'x' ? ring_->symDim() : ring_->skewDim();
            if (i < 1 || j < 1 || i > bound || j > bound)
                raise(ErrorCode::IndexError, std::string(1, kind) + "[" + std::to_string(i) +
                                                 "," + std::to_string(j) + "] out of range");
            base = kind == 'x' ? Poly::xVar(ring_, i, j) : Poly::yVar(ring_, i, j);
        }
        skipWs();
        if (!atEnd() && peek() == '^') {
            advance();
            BigInt e = parseUInt(ErrorCode::SyntaxError, "exponent");
            if (e > 60000) raise(ErrorCode::SyntaxError, "exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Poly parseTerm() {
        skipWs();
        if (atEnd()) raise(ErrorCode::SyntaxError, "expected term");
        Poly acc;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            BigInt num = parseUInt(ErrorCode::SyntaxError, "integer");
            BigInt den = 1;
            skipWs();
            if (!atEnd() && peek() == '/') {
                advance();
                den = parseUInt(ErrorCode::SyntaxError, "denominator");
                if (sgn(den) == 0) raise(ErrorCode::SyntaxError, "zero denominator");
            }
            acc = Poly::constant(ring_, makeRational(num, den));
        } else {
            acc = parseFactor();
        }
        skipWs();
        while (!atEnd() && peek() == '*') {
            advance();
            acc = acc * parseFactor();
        }
        return acc;
    }
};

std::string formatMonomial(const Ring& ring, const Monomial& m) {
    std::string out;
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        if (m.exps[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.varName(static_cast<int>(v));
        if (m.exps[v] > 1) out += "^" + std::to_string(m.exps[v]);
    }
    return out;
}

}  // namespace

Poly parsePoly(RingPtr ring, const std::string& text) {
    return Parser(std::move(ring), text).run();
}

std::string printPoly(const Poly& f) {
    if (f.isZero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const Term& t = f.terms()[i];
        const bool negative = sgn(t.coeff) < 0;
        if (i == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        const std::string mono = formatMonomial(*f.ring(), t.mono);
        if (mono.empty()) {
            out += toString(mag);
        } else if (isOne(mag)) {
            out += mono;
        } else {
            out += toString(mag) + "*" + mono;
        }
    }
    return out;
}

}  // namespace tca
