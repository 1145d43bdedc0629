#pragma once

// Point sets in general position on the integer grid, represented as
// permutations: point j (0-based, x = j) sits at (j, y[j]). Distinct x by
// construction, distinct y by bijectivity, so no two points ever share a
// coordinate. Includes staircase constructors, the 8-element square symmetry
// group, canonical orbit representatives, and canonical enumeration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lshape {

struct PointSet {
    std::vector<std::uint8_t> y;  // y[j] in 0..n-1

    PointSet() = default;
    explicit PointSet(std::vector<std::uint8_t> perm) : y(std::move(perm)) {}

    int size() const { return static_cast<int>(y.size()); }

    bool valid() const {
        int n = size();
        if (n == 0 || n > 128) return false;
        std::uint64_t seen[2] = {0, 0};
        for (std::uint8_t v : y) {
            if (v >= n) return false;
            std::uint64_t& w = seen[v >> 6];
            std::uint64_t bit = 1ull << (v & 63);
            if (w & bit) return false;
            w |= bit;
        }
        return true;
    }

    // Comma-separated 1-based values, e.g. "3,4,1,2".
    std::string to_string() const {
        std::string s;
        for (int j = 0; j < size(); ++j) {
            if (j) s += ',';
            s += std::to_string(y[j] + 1);
        }
        return s;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend auto operator<=>(const PointSet& a, const PointSet& b) { return a.y <=> b.y; }
};

inline PointSet parse_point_set(const std::string& text) {
    std::vector<std::uint8_t> vals;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        int v = std::stoi(text.substr(pos, next - pos));
        if (v < 1 || v > 128) throw std::invalid_argument("point set value out of range: " + text);
        vals.push_back(static_cast<std::uint8_t>(v - 1));
        pos = next + 1;
    }
    PointSet p(std::move(vals));
    if (!p.valid()) throw std::invalid_argument("not a permutation: " + text);
    return p;
}

// ---------------------------------------------------------------------------
// Staircases

struct StaircaseSpec {
    std::vector<int> box_sizes;  // a_1..a_k, all >= 1

    int total() const {
        int n = 0;
        for (int a : box_sizes) n += a;
        return n;
    }
    bool valid() const {
        if (box_sizes.empty()) return false;
        for (int a : box_sizes) {
            if (a < 1) return false;
        }
        return total() <= 128;
    }
    // Parenthesized comma list, e.g. "(2,2,2,1,2,2,2)".
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < box_sizes.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(box_sizes[i]);
        }
        return s + ")";
    }
    friend bool operator==(const StaircaseSpec&, const StaircaseSpec&) = default;
};

inline StaircaseSpec parse_staircase(const std::string& text) {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("staircase spec must look like (a1,a2,...): " + text);
    StaircaseSpec spec;
    std::size_t pos = 1;
    while (pos < text.size() - 1) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos || next > text.size() - 1) next = text.size() - 1;
        spec.box_sizes.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (!spec.valid()) throw std::invalid_argument("invalid staircase spec: " + text);
    return spec;
}

// Boxes ordered from top-left to bottom-right; box i holds the next a_i
// x-positions, its y-values lie strictly above box i+1, and within a box both
// coordinates ascend.
inline PointSet staircase_points(const StaircaseSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("invalid staircase spec");
    int n = spec.total();
    std::vector<std::uint8_t> y(n);
    int x = 0, top = n;
    for (int a : spec.box_sizes) {
        for (int t = 0; t < a; ++t) y[x + t] = static_cast<std::uint8_t>(top - a + t);
        x += a;
        top -= a;
    }
    return PointSet(std::move(y));
}

// Recovers the box structure if p is exactly a staircase.
inline std::optional<StaircaseSpec> staircase_of(const PointSet& p) {
    StaircaseSpec spec;
    int n = p.size();
    for (int j = 0; j < n;) {
        int k = j + 1;
        while (k < n && p.y[k] == p.y[k - 1] + 1) ++k;
        spec.box_sizes.push_back(k - j);
        j = k;
    }
    if (staircase_points(spec) == p) return spec;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Square symmetries (dihedral group of order 8)

enum class Symmetry : std::uint8_t {
    id,
    rot90,  // counterclockwise
    rot180,
    rot270,
    mirror_h,   // flip left-right
    mirror_v,   // flip top-bottom
    diag_main,  // reflect across y = x
    diag_anti,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::id,       Symmetry::rot90,    Symmetry::rot180,    Symmetry::rot270,
    Symmetry::mirror_h, Symmetry::mirror_v, Symmetry::diag_main, Symmetry::diag_anti};

inline constexpr std::array<Symmetry, 4> kRotations = {Symmetry::id, Symmetry::rot90,
                                                       Symmetry::rot180, Symmetry::rot270};

// Every element acts as (x,y) -> maybe-swap, then independent coordinate flips.
struct SymmetryAction {
    bool swap, flip_x, flip_y;
};

inline constexpr SymmetryAction symmetry_action(Symmetry s) {
    switch (s) {
        case Symmetry::id: return {false, false, false};
        case Symmetry::rot90: return {true, true, false};   // (x,y) -> (n-1-y, x)
        case Symmetry::rot180: return {false, true, true};
        case Symmetry::rot270: return {true, false, true};  // (x,y) -> (y, n-1-x)
        case Symmetry::mirror_h: return {false, true, false};
        case Symmetry::mirror_v: return {false, false, true};
        case Symmetry::diag_main: return {true, false, false};
        case Symmetry::diag_anti: return {true, true, true};
    }
    return {false, false, false};
}

inline constexpr Symmetry symmetry_from_action(SymmetryAction a) {
    for (Symmetry s : kAllSymmetries) {
        SymmetryAction b = symmetry_action(s);
        if (b.swap == a.swap && b.flip_x == a.flip_x && b.flip_y == a.flip_y) return s;
    }
    return Symmetry::id;
}

// compose(a, b) acts as "apply b, then a".
inline constexpr Symmetry compose(Symmetry a, Symmetry b) {
    SymmetryAction A = symmetry_action(a), B = symmetry_action(b);
    SymmetryAction c;
    c.swap = A.swap != B.swap;
    if (A.swap) {
        c.flip_x = B.flip_y != A.flip_x;
        c.flip_y = B.flip_x != A.flip_y;
    } else {
        c.flip_x = B.flip_x != A.flip_x;
        c.flip_y = B.flip_y != A.flip_y;
    }
    return symmetry_from_action(c);
}

inline constexpr Symmetry inverse(Symmetry s) {
    for (Symmetry g : kAllSymmetries) {
        if (compose(g, s) == Symmetry::id) return g;
    }
    return Symmetry::id;
}

// Transforms the point set; optionally reports where each point index went
// (index_map[old point index] = new point index).
inline PointSet apply_symmetry(Symmetry s, const PointSet& p, std::vector<int>* index_map = nullptr) {
    int n = p.size();
    SymmetryAction a = symmetry_action(s);
    PointSet out;
    out.y.resize(n);
    if (index_map) index_map->resize(n);
    for (int j = 0; j < n; ++j) {
        int x = j, y = p.y[j];
        if (a.swap) std::swap(x, y);
        if (a.flip_x) x = n - 1 - x;
        if (a.flip_y) y = n - 1 - y;
        out.y[x] = static_cast<std::uint8_t>(y);
        if (index_map) (*index_map)[j] = x;
    }
    return out;
}

enum class SymmetryGroup { full8, rotations4 };

namespace detail {
inline bool image_is_smaller(Symmetry s, const PointSet& p) {
    // Compares apply_symmetry(s, p) < p without materializing the image.
    int n = p.size();
    SymmetryAction a = symmetry_action(s);
    std::array<std::uint8_t, 128> img;
    for (int j = 0; j < n; ++j) {
        int x = j, y = p.y[j];
        if (a.swap) std::swap(x, y);
        if (a.flip_x) x = n - 1 - x;
        if (a.flip_y) y = n - 1 - y;
        img[x] = static_cast<std::uint8_t>(y);
    }
    for (int j = 0; j < n; ++j) {
        if (img[j] != p.y[j]) return img[j] < p.y[j];
    }
    return false;
}
}  // namespace detail

inline bool is_canonical(const PointSet& p, SymmetryGroup group) {
    auto ops = group == SymmetryGroup::full8
                   ? std::vector<Symmetry>(kAllSymmetries.begin() + 1, kAllSymmetries.end())
                   : std::vector<Symmetry>(kRotations.begin() + 1, kRotations.end());
    for (Symmetry s : ops) {
        if (detail::image_is_smaller(s, p)) return false;
    }
    return true;
}

// Lexicographically smallest permutation in the orbit of p.
inline PointSet canonical_form(const PointSet& p, SymmetryGroup group) {
    PointSet best = p;
    for (Symmetry s : kAllSymmetries) {
        if (group == SymmetryGroup::rotations4 && (s == Symmetry::mirror_h || s == Symmetry::mirror_v ||
                                                   s == Symmetry::diag_main || s == Symmetry::diag_anti))
            continue;
        PointSet img = apply_symmetry(s, p);
        if (img.y < best.y) best = img;
    }
    return best;
}

// Streams one representative per orbit, in lexicographic order of the
// representative. Callback may return void or bool (false stops early).
template <class F>
void enumerate_canonical_pointsets(int n, SymmetryGroup group, F&& yield) {
    if (n < 1) throw std::invalid_argument("point set size must be >= 1");
    std::vector<std::uint8_t> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i);
    PointSet p;
    do {
        p.y = perm;
        if (is_canonical(p, group)) {
            if constexpr (std::is_same_v<decltype(yield(p)), bool>) {
                if (!yield(p)) return;
            } else {
                yield(p);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::uint64_t count_canonical_pointsets(int n, SymmetryGroup group) {
    std::uint64_t count = 0;
    enumerate_canonical_pointsets(n, group, [&](const PointSet&) { ++count; });
    return count;
}

}  // namespace lshape
