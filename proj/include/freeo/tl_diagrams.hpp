#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "freeo/real.hpp"

namespace freeo {

using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr int kDefaultDiagramCap = 12;

/// Temperley-Lieb diagram on 2k points, stored as a noncrossing fixed-point-free
/// involution: match[i] is the point joined to i by a string (0-based).
class Diagram {
  public:
    /// Validates the involution and noncrossing properties; throws InputError.
    explicit Diagram(std::vector<std::uint8_t> match);

    int k() const noexcept { return static_cast<int>(match_.size() / 2); }
    std::size_t points() const noexcept { return match_.size(); }
    int partner(std::size_t i) const { return match_[i]; }
    const std::vector<std::uint8_t>& match() const noexcept { return match_; }

    /// Mirror image i -> 2k-1-i.
    Diagram reflected() const;

    /// Compact form "(0 3)(1 2)", strings listed by left endpoint.
    std::string to_string() const;

    friend auto operator<=>(const Diagram&, const Diagram&) = default;

  private:
    struct Unchecked {};
    Diagram(std::vector<std::uint8_t> match, Unchecked) : match_(std::move(match)) {}
    friend std::vector<Diagram> enumerate_diagrams(int k, int cap);

    std::vector<std::uint8_t> match_;
};

/// All noncrossing pair partitions of {0..2k-1}, lexicographic in the match array.
/// The result has Catalan(k) entries. Throws SizeLimitError for k > cap.
std::vector<Diagram> enumerate_diagrams(int k, int cap = kDefaultDiagramCap);

/// Number of closed loops formed by superposing the strings of p and q.
int loop_count(const Diagram& p, const Diagram& q);

/// Product of F[idx[l], idx[r]] over the strings {l < r} of p. Indices are 1-based.
Real delta_weight(const Diagram& p, const RealMatrix& f, std::span<const int> idx);

/// Catalan number C_k (exact for k <= 30).
std::uint64_t catalan(int k);

}  // namespace freeo
