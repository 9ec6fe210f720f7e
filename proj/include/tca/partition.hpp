#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tca {

// A partition: weakly decreasing sequence of positive integers. Trailing
// zeros are stripped on construction, so equality is structural and the empty
// partition has a unique representation.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // r rows of length s. Throws EmptyRectangle when r or s is zero.
    static Partition rectangle(int rows, int cols);

    // Comma-separated parts, e.g. "3,1"; "0" or "" denotes the empty partition.
    static Partition fromText(const std::string& text);
    std::string toText() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int width() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }
    // |lambda|
    int size() const;
    // 1-based row access; rows past the end are 0.
    int part(int row) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// true iff lambda_i <= mu_i for all i (lambda sits inside mu).
bool contains(const Partition& lambda, const Partition& mu);

// Lattice join/meet for the containment order (componentwise max/min).
Partition unite(const Partition& lambda, const Partition& mu);
Partition intersect(const Partition& lambda, const Partition& mu);

// Boxes (r,s) with nothing below or to the right; increasing in r, hence
// decreasing in s. Throws EmptyPartition on the empty partition.
std::vector<std::pair<int, int>> corners(const Partition& lambda);

Partition doubled(const Partition& lambda);
Partition transpose(const Partition& lambda);

}  // namespace tca
