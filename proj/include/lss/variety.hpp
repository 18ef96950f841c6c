#ifndef LSS_VARIETY_HPP
#define LSS_VARIETY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lss/graph.hpp"
#include "lss/rational.hpp"

namespace lss {

/// Deterministic 64-bit linear congruential generator (Knuth's MMIX
/// constants: a = 6364136223846793005, c = 1442695040888963407), so samples
/// are bit-reproducible across implementations.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Small signed integer in [-9, 9].
    long long small_int() { return static_cast<long long>(next() % 19) - 9; }

private:
    uint64_t state_;
};

/// Exact-rational point of the component variety V_S for the given graph:
/// vertices in S and in non-bipartite components of graph \ S map to the
/// origin; each bipartite component picks a direction (a, b) and places one
/// block on the line through (a, b), the other on the perpendicular line
/// through (-b, a).
struct RepresentationSample {
    std::vector<int> S;
    std::map<int, std::pair<Rational, Rational>> assignment;
    std::vector<ComponentData> comps;  // components of graph \ S
};

inline RepresentationSample sample_VS(const Graph& gbar, const std::vector<int>& S,
                                      uint64_t seed) {
    RepresentationSample sample;
    sample.S = S;
    std::sort(sample.S.begin(), sample.S.end());
    sample.comps = components(gbar, sample.S);
    SampleRng rng(seed);

    for (int v : sample.S) sample.assignment[v] = {Rational(0), Rational(0)};
    for (const auto& comp : sample.comps) {
        if (!comp.is_bipartite) {
            for (int v : comp.vertices) sample.assignment[v] = {Rational(0), Rational(0)};
            continue;
        }
        long long a = 0, b = 0;
        while (a == 0 && b == 0) {
            a = rng.small_int();
            b = rng.small_int();
        }
        for (int v : comp.blocks[0]) {
            Rational s(rng.small_int());
            sample.assignment[v] = {s * Rational(a), s * Rational(b)};
        }
        for (int v : comp.blocks[1]) {
            Rational s(rng.small_int());
            sample.assignment[v] = {s * Rational(-b), s * Rational(a)};
        }
    }
    return sample;
}

/// True iff every generator x_i x_j + y_i y_j of L_gbar evaluates to exactly
/// zero at the sample.
inline bool check_vanishing(const RepresentationSample& sample, const Graph& gbar) {
    for (const auto& [i, j] : gbar.edges()) {
        const auto& [xi, yi] = sample.assignment.at(i);
        const auto& [xj, yj] = sample.assignment.at(j);
        if (!(xi * xj + yi * yj).is_zero()) return false;
    }
    return true;
}

/// Exact orthogonal-lines check per bipartite component: same-block images
/// pairwise linearly dependent (zero determinant), cross-block images
/// orthogonal (zero dot product).
inline bool orthogonal_lines_ok(const RepresentationSample& sample) {
    for (const auto& comp : sample.comps) {
        if (!comp.is_bipartite) continue;
        for (int side = 0; side < 2; ++side) {
            const auto& block = comp.blocks[side];
            for (size_t a = 0; a < block.size(); ++a)
                for (size_t b = a + 1; b < block.size(); ++b) {
                    const auto& [x1, y1] = sample.assignment.at(block[a]);
                    const auto& [x2, y2] = sample.assignment.at(block[b]);
                    if (!(x1 * y2 - x2 * y1).is_zero()) return false;
                }
        }
        for (int u : comp.blocks[0])
            for (int v : comp.blocks[1]) {
                const auto& [x1, y1] = sample.assignment.at(u);
                const auto& [x2, y2] = sample.assignment.at(v);
                if (!(x1 * x2 + y1 * y2).is_zero()) return false;
            }
    }
    return true;
}

}  // namespace lss

#endif
