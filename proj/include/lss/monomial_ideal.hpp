#ifndef LSS_MONOMIAL_IDEAL_HPP
#define LSS_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lss/monomial.hpp"

namespace lss {

struct MonomialIdealStats {
    int height = 0;
    bool is_squarefree = false;
    /// Minimal primes of the monomial ideal, as sets of variable indices
    /// (minimal transversals of the generator supports).
    std::vector<std::vector<int>> minimal_primes;
};

/// Height, squarefree-ness and minimal primes of a monomial ideal, by exact
/// set-cover enumeration over the support variables. Desk scale only.
inline MonomialIdealStats monomial_ideal_stats(const std::vector<Monomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("monomial_ideal_stats: empty generator list");
    for (const auto& m : gens)
        if (m.is_one())
            throw std::invalid_argument("monomial_ideal_stats: unit generator");

    // minimal generators only
    std::vector<Monomial> min_gens;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
        }
        if (!redundant) min_gens.push_back(gens[i]);
    }

    MonomialIdealStats stats;
    stats.is_squarefree =
        std::all_of(min_gens.begin(), min_gens.end(), [](const Monomial& m) { return m.is_squarefree(); });

    // compress supports onto the variables that actually occur
    std::vector<int> vars;
    for (const auto& m : min_gens)
        for (int v : m.support())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    if (vars.size() > 63) throw std::invalid_argument("monomial_ideal_stats: too many variables");

    std::vector<uint64_t> supports;
    for (const auto& m : min_gens) {
        uint64_t mask = 0;
        for (int v : m.support()) {
            size_t k = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
            mask |= 1ULL << k;
        }
        supports.push_back(mask);
    }

    auto is_cover = [&](uint64_t mask) {
        for (uint64_t s : supports)
            if ((s & mask) == 0) return false;
        return true;
    };

    // enumerate subsets by increasing size; a cover is minimal iff it
    // contains no smaller recorded cover
    size_t nv = vars.size();
    std::vector<uint64_t> minimal_masks;
    bool height_set = false;
    for (size_t k = 1; k <= nv; ++k) {
        // all masks with popcount k via combination walking
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            uint64_t mask = 0;
            for (size_t i : idx) mask |= 1ULL << i;
            if (is_cover(mask)) {
                bool contains_smaller = false;
                for (uint64_t m : minimal_masks)
                    if ((m & mask) == m) {
                        contains_smaller = true;
                        break;
                    }
                if (!contains_smaller) {
                    minimal_masks.push_back(mask);
                    if (!height_set) {
                        stats.height = static_cast<int>(k);
                        height_set = true;
                    }
                }
            }
            // next combination
            size_t i = k;
            while (i-- > 0) {
                if (idx[i] + (k - i) < nv) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = static_cast<size_t>(-1);
                    break;
                }
            }
            if (i == static_cast<size_t>(-1)) break;
        }
    }

    for (uint64_t mask : minimal_masks) {
        std::vector<int> prime;
        for (size_t k = 0; k < nv; ++k)
            if (mask & (1ULL << k)) prime.push_back(vars[k]);
        stats.minimal_primes.push_back(std::move(prime));
    }
    return stats;
}

}  // namespace lss

#endif
