#include "freeo/tl_diagrams.hpp"

#include <string>

#include "freeo/errors.hpp"

namespace freeo {

namespace {

using Match = std::vector<std::uint8_t>;

// Noncrossing pairings of the points lo, lo+1, ..., lo+2m-1, in lexicographic order.
// The first point pairs with an odd-offset partner; inside and outside recurse.
std::vector<Match> pairings(int lo, int m) {
    if (m == 0) return {Match{}};
    std::vector<Match> out;
    for (int inner = 0; inner < m; ++inner) {
        const int partner = lo + 2 * inner + 1;
        const auto inside = pairings(lo + 1, inner);
        const auto outside = pairings(partner + 1, m - 1 - inner);
        for (const auto& in : inside)
            for (const auto& o : outside) {
                Match pm;
                pm.reserve(static_cast<std::size_t>(2 * m));
                pm.push_back(static_cast<std::uint8_t>(partner));
                pm.insert(pm.end(), in.begin(), in.end());
                pm.push_back(static_cast<std::uint8_t>(lo));
                pm.insert(pm.end(), o.begin(), o.end());
                out.push_back(std::move(pm));
            }
    }
    return out;
}

}  // namespace

Diagram::Diagram(std::vector<std::uint8_t> match) : match_(std::move(match)) {
    const std::size_t n = match_.size();
    if (n == 0 || n % 2 != 0) throw InputError("diagram needs a positive even number of points");
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = match_[i];
        if (j >= n || j == i || match_[j] != i) throw InputError("diagram match is not a fixed-point-free involution");
    }
    // Noncrossing: every string {i < j} encloses only points paired among themselves.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = match_[i];
        if (j < i) continue;
        for (std::size_t t = i + 1; t < j; ++t)
            if (match_[t] < i || match_[t] > j) throw InputError("diagram strings cross");
    }
}

Diagram Diagram::reflected() const {
    const std::size_t n = match_.size();
    Match out(n);
    for (std::size_t i = 0; i < n; ++i) out[n - 1 - i] = static_cast<std::uint8_t>(n - 1 - match_[i]);
    return Diagram(std::move(out), Unchecked{});
}

std::string Diagram::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < match_.size(); ++i)
        if (match_[i] > i) out += "(" + std::to_string(i) + " " + std::to_string(match_[i]) + ")";
    return out;
}

std::vector<Diagram> enumerate_diagrams(int k, int cap) {
    if (k < 1) throw InputError("enumerate_diagrams needs k >= 1");
    if (k > cap) throw SizeLimitError("diagram enumeration k=" + std::to_string(k) + " exceeds cap " + std::to_string(cap), cap);
    std::vector<Diagram> out;
    for (auto& m : pairings(0, k)) out.push_back(Diagram(std::move(m), Diagram::Unchecked{}));
    return out;
}

int loop_count(const Diagram& p, const Diagram& q) {
    if (p.k() != q.k()) throw DimensionError("loop_count of diagrams with different k");
    const std::size_t n = p.points();
    std::vector<bool> seen(n, false);
    int loops = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++loops;
        // Alternate p-strings and q-strings until the cycle closes.
        std::size_t at = start;
        do {
            seen[at] = true;
            const std::size_t mid = static_cast<std::size_t>(p.partner(at));
            seen[mid] = true;
            at = static_cast<std::size_t>(q.partner(mid));
        } while (at != start);
    }
    return loops;
}

Real delta_weight(const Diagram& p, const RealMatrix& f, std::span<const int> idx) {
    if (f.rows() != f.cols()) throw InputError("delta_weight needs a square F");
    if (idx.size() != p.points()) throw DimensionError("multi-index length must be 2k");
    const int n = static_cast<int>(f.rows());
    for (int v : idx)
        if (v < 1 || v > n) throw InputError("multi-index entry out of range 1..n");
    Real w = 1;
    for (std::size_t l = 0; l < p.points(); ++l) {
        const auto r = static_cast<std::size_t>(p.partner(l));
        if (r > l) w *= f(idx[l] - 1, idx[r] - 1);
    }
    return w;
}

std::uint64_t catalan(int k) {
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
    return c;
}

}  // namespace freeo
