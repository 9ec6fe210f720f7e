#include "tca/partition.hpp"

#include <algorithm>
#include <numeric>

#include "tca/errors.hpp"

namespace tca {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            fail(ErrorCode::IndexError, "partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            fail(ErrorCode::IndexError, "partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        fail(ErrorCode::EmptyRectangle,
             "rectangle requires positive row and column counts");
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

Partition Partition::fromText(const std::string& text) {
    if (text.empty() || text == "0") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string piece = text.substr(pos, next - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::SyntaxError, "bad partition text '" + text + "'");
        parts.push_back(std::stoi(piece));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::toText() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int row) const {
    if (row < 1 || row > length()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (lambda.length() > mu.length()) return false;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) > mu.part(i)) return false;
    return true;
}

Partition unite(const Partition& lambda, const Partition& mu) {
    const int n = std::max(lambda.length(), mu.length());
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        parts.push_back(std::max(lambda.part(i), mu.part(i)));
    return Partition(std::move(parts));
}

Partition intersect(const Partition& lambda, const Partition& mu) {
    const int n = std::min(lambda.length(), mu.length());
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        parts.push_back(std::min(lambda.part(i), mu.part(i)));
    return Partition(std::move(parts));
}

std::vector<std::pair<int, int>> corners(const Partition& lambda) {
    if (lambda.empty())
        fail(ErrorCode::EmptyPartition, "the empty partition has no corners");
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda.part(r + 1) < lambda.part(r)) out.emplace_back(r, lambda.part(r));
    return out;
}

Partition doubled(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p *= 2;
    return Partition(std::move(parts));
}

Partition transpose(const Partition& lambda) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(lambda.width()));
    for (int col = 1; col <= lambda.width(); ++col) {
        int rows = 0;
        while (rows < lambda.length() && lambda.part(rows + 1) >= col) ++rows;
        parts.push_back(rows);
    }
    return Partition(std::move(parts));
}

}  // namespace tca
