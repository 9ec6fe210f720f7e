#include "tca/functor.hpp"

#include <algorithm>
#include <functional>

#include "tca/errors.hpp"

namespace tca {

SuperSpace SuperSpace::fromText(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        fail(ErrorCode::SyntaxError, "super space text must be 'r,s'");
    try {
        const int r = std::stoi(text.substr(0, comma));
        const int s = std::stoi(text.substr(comma + 1));
        if (r < 0 || s < 0) fail(ErrorCode::IndexError, "dimensions must be nonnegative");
        return SuperSpace{r, s};
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::SyntaxError, "bad super space text '" + text + "'");
    } catch (const std::out_of_range&) {
        fail(ErrorCode::SyntaxError, "bad super space text '" + text + "'");
    }
}

PolyFunctor::PolyFunctor(std::map<Partition, long> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
        } else if (it->second < 0) {
            fail(ErrorCode::IndexError, "functor multiplicities must be positive");
        } else {
            ++it;
        }
    }
}

PolyFunctor PolyFunctor::schur(Partition lambda, long mult) {
    std::map<Partition, long> terms;
    if (mult != 0) terms.emplace(std::move(lambda), mult);
    return PolyFunctor(std::move(terms));
}

PolyFunctor PolyFunctor::sym(int n) {
    if (n < 0) fail(ErrorCode::IndexError, "sym degree must be nonnegative");
    if (n == 0) return schur(Partition());
    return schur(Partition({n}));
}

PolyFunctor PolyFunctor::wedge(int n) {
    if (n < 0) fail(ErrorCode::IndexError, "wedge degree must be nonnegative");
    if (n == 0) return schur(Partition());
    return schur(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

namespace {

// "(3,1)" -> partition; "()" -> empty.
Partition parseParenPartition(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '(')
        fail(ErrorCode::SyntaxError, "expected '(' in functor text");
    ++pos;
    std::vector<int> parts;
    while (pos < text.size() && text[pos] != ')') {
        std::size_t len = 0;
        while (pos + len < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + len]))) ++len;
        if (len == 0) fail(ErrorCode::SyntaxError, "expected digit in partition");
        parts.push_back(std::stoi(text.substr(pos, len)));
        pos += len;
        if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) fail(ErrorCode::SyntaxError, "unterminated partition");
    ++pos;  // ')'
    return Partition(std::move(parts));
}

}  // namespace

PolyFunctor PolyFunctor::fromText(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.rfind("sym:", 0) == 0) return sym(std::stoi(text.substr(4)));
    if (text.rfind("wedge:", 0) == 0) return wedge(std::stoi(text.substr(6)));
    if (text.empty() || text.front() != '{' || text.back() != '}')
        fail(ErrorCode::SyntaxError, "functor text must be sym:n, wedge:n or {...}");
    std::map<Partition, long> terms;
    std::size_t pos = 1;
    while (pos < text.size() && text[pos] != '}') {
        Partition lambda = parseParenPartition(text, pos);
        if (pos >= text.size() || text[pos] != ':')
            fail(ErrorCode::SyntaxError, "expected ':' after partition");
        ++pos;
        std::size_t len = 0;
        while (pos + len < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + len]))) ++len;
        if (len == 0) fail(ErrorCode::SyntaxError, "expected multiplicity");
        terms[lambda] += std::stol(text.substr(pos, len));
        pos += len;
        if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) fail(ErrorCode::SyntaxError, "unterminated functor text");
    return PolyFunctor(std::move(terms));
}

std::string PolyFunctor::toText() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [lambda, mult] : terms_) {
        if (!first) out += ',';
        first = false;
        out += '(';
        for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
            if (i) out += ',';
            out += std::to_string(lambda.parts()[i]);
        }
        out += "):" + std::to_string(mult);
    }
    return out + "}";
}

PolyFunctor PolyFunctor::plus(const PolyFunctor& other) const {
    std::map<Partition, long> terms = terms_;
    for (const auto& [lambda, mult] : other.terms_) terms[lambda] += mult;
    return PolyFunctor(std::move(terms));
}

bool schurNonzero(const Partition& lambda, SuperSpace v) {
    return lambda.part(v.even + 1) <= v.odd;
}

namespace {

// Backtracking enumeration of super semistandard tableaux. Letters are
// encoded 1..r (even) and r+1..r+s (odd). The visitor receives the content
// vector (counts per letter) of each completed filling; returns the count.
long enumerateSuperTableaux(const Partition& shape, int evenLetters, int oddLetters,
                            const std::function<void(const std::vector<int>&)>& visit) {
    const int rows = shape.length();
    if (rows == 0) {
        if (visit) visit(std::vector<int>(static_cast<std::size_t>(evenLetters + oddLetters), 0));
        return 1;
    }
    const int letters = evenLetters + oddLetters;
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.part(r + 1)), 0);
    std::vector<int> content(static_cast<std::size_t>(letters), 0);
    long count = 0;

    std::function<void(int, int)> place = [&](int row, int col) {
        if (row == rows) {
            ++count;
            if (visit) visit(content);
            return;
        }
        int nextRow = row, nextCol = col + 1;
        if (nextCol >= shape.part(row + 1)) {
            nextRow = row + 1;
            nextCol = 0;
        }
        const int left = col > 0 ? fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)] : 0;
        const int up = row > 0 && col < shape.part(row)
                           ? fill[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)]
                           : 0;
        for (int v = std::max({1, left, up}); v <= letters; ++v) {
            const bool odd = v > evenLetters;
            if (v == left && odd) continue;   // odd letters strict along rows
            if (v == up && !odd) continue;    // even letters strict down columns
            fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            place(nextRow, nextCol);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    place(0, 0);
    return count;
}

}  // namespace

BigInt schurDim(const Partition& lambda, SuperSpace v) {
    if (!schurNonzero(lambda, v)) return 0;
    return BigInt(enumerateSuperTableaux(lambda, v.even, v.odd, nullptr));
}

BigInt functorDim(const PolyFunctor& f, SuperSpace v) {
    BigInt total = 0;
    for (const auto& [lambda, mult] : f.terms()) total += mult * schurDim(lambda, v);
    return total;
}

int maxdeg(const PolyFunctor& f) {
    if (f.isZero()) fail(ErrorCode::ZeroFunctor, "maxdeg of the zero functor");
    int d = 0;
    for (const auto& [lambda, mult] : f.terms()) d = std::max(d, lambda.size());
    return d;
}

int width(const PolyFunctor& f) {
    int w = 0;
    for (const auto& [lambda, mult] : f.terms()) w = std::max(w, lambda.width());
    return w;
}

std::map<int, PolyFunctor> shiftDecompose(const PolyFunctor& f) {
    std::map<int, std::map<Partition, long>> buckets;
    for (const auto& [lambda, mult] : f.terms()) {
        // All mu with lambda/mu a horizontal strip: lambda_{i+1} <= mu_i <= lambda_i.
        std::vector<int> mu(static_cast<std::size_t>(lambda.length()), 0);
        std::function<void(int)> rec = [&](int row) {
            if (row == lambda.length()) {
                std::vector<int> parts = mu;
                Partition m(std::move(parts));
                buckets[lambda.size() - m.size()][m] += mult;
                return;
            }
            const int lo = lambda.part(row + 2);
            const int hi = lambda.part(row + 1);
            for (int p = lo; p <= hi; ++p) {
                mu[static_cast<std::size_t>(row)] = p;
                rec(row + 1);
            }
        };
        rec(0);
    }
    std::map<int, PolyFunctor> out;
    for (auto& [weight, terms] : buckets) out.emplace(weight, PolyFunctor(std::move(terms)));
    return out;
}

BigInt schurDimEven(const Partition& lambda, const BigInt& n) {
    if (sgn(n) < 0) fail(ErrorCode::IndexError, "dimension must be nonnegative");
    // Product over cells of (n + j - i) / hook(i,j). A zero factor appears in
    // the first column exactly when length(lambda) > n.
    Rational result(1);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            const int arm = lambda.part(i) - j;
            int leg = 0;
            for (int r = i + 1; r <= lambda.length(); ++r)
                if (lambda.part(r) >= j) ++leg;
            const int hook = arm + leg + 1;
            result *= makeRational(n + (j - i), BigInt(hook));
        }
    }
    if (!isInteger(result) || sgn(result) < 0)
        fail(ErrorCode::Internal, "hook product is not a nonnegative integer");
    return result.get_num();
}

BigInt functorDimOdd(const PolyFunctor& f, const BigInt& n) {
    BigInt total = 0;
    for (const auto& [lambda, mult] : f.terms())
        total += mult * schurDimEven(transpose(lambda), n);
    return total;
}

std::map<std::vector<int>, long> weightMultiplicities(const Partition& lambda, int n) {
    std::map<std::vector<int>, long> out;
    if (lambda.length() > n) return out;
    enumerateSuperTableaux(lambda, n, 0,
                           [&](const std::vector<int>& content) { ++out[content]; });
    return out;
}

}  // namespace tca
