#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotvol/faces.hpp"
#include "knotvol/pd.hpp"

namespace knotvol {

struct chain_error : diagram_error {
    using diagram_error::diagram_error;
};

/// Census of maximal bigon chains.  t[i] counts chains of crossing length i;
/// g(i) = number of chains of crossing length >= i; twist_number = g(1).
struct TwistStats {
    int twist_number = 0;
    std::vector<int> chain_lengths;  ///< sorted descending
    std::map<int, int> t;

    int t_of(int i) const {
        auto it = t.find(i);
        return it == t.end() ? 0 : it->second;
    }

    int g(int i) const {
        int sum = 0;
        for (const auto& [len, cnt] : t) {
            if (len >= i) sum += cnt;
        }
        return sum;
    }
};

/// One maximal bigon chain: the crossings it passes through (in order), the
/// bigon faces joining them, and the two faces flanking the twist region.
/// A crossing on no bigon forms a chain of crossing length 1.
struct BigonChain {
    std::vector<int> crossings;
    std::vector<int> bigon_faces;
    std::vector<int> side_faces;  ///< the faces across the bigons' edges (2 when well formed)
    /// Opposite-corner face pairs usable as the chain's axis in a flype
    /// template; one pair for bigon chains, both corner pairs for singletons.
    std::vector<std::pair<int, int>> side_pairs;

    int crossing_length() const { return static_cast<int>(crossings.size()); }
};

struct ChainCensus {
    std::vector<BigonChain> chains;
    TwistStats stats;
};

/// Build maximal bigon chains by joining bigons that meet a crossing at
/// opposite corners.  Ambiguous configurations are errors, never guessed:
/// a crossing on three or more bigons, side-by-side bigons at one crossing,
/// a bigon with both corners on one crossing, and chains that close up into
/// a cycle (as in the standard trefoil) are all reported.
inline ChainCensus bigon_chain_stats(const LinkDiagram& d, const FaceDecomposition& f) {
    const int c = d.crossing_count();

    std::vector<int> bigons;
    for (int fid = 0; fid < f.face_count(); ++fid) {
        if (f.face_size(fid) == 2) bigons.push_back(fid);
    }

    struct End {
        int bigon;
        int slot;  // corner slot at the crossing
    };
    std::vector<std::vector<End>> at(static_cast<std::size_t>(c));
    std::map<int, std::pair<int, int>> bigon_ends;  // bigon -> its two crossings
    for (int fid : bigons) {
        const auto& corners = f.faces[static_cast<std::size_t>(fid)].corners;
        const Dart c1 = corners[0];
        const Dart c2 = corners[1];
        if (c1.x == c2.x) {
            throw chain_error("bigon face has both corners at crossing " + std::to_string(c1.x) +
                              "; the chain closes on itself");
        }
        bigon_ends[fid] = {c1.x, c2.x};
        at[static_cast<std::size_t>(c1.x)].push_back({fid, c1.p});
        at[static_cast<std::size_t>(c2.x)].push_back({fid, c2.p});
    }
    for (int x = 0; x < c; ++x) {
        const auto& lst = at[static_cast<std::size_t>(x)];
        if (lst.size() > 2) {
            throw chain_error("crossing " + std::to_string(x) + " lies on " +
                              std::to_string(lst.size()) + " bigons");
        }
        if (lst.size() == 2 && (lst[0].slot - lst[1].slot + 4) % 4 != 2) {
            throw chain_error("side-by-side bigons at crossing " + std::to_string(x));
        }
    }

    ChainCensus out;
    std::vector<char> used(static_cast<std::size_t>(c), 0);
    // start chains from endpoints (degree < 2); anything left is a cycle
    for (int x = 0; x < c; ++x) {
        const auto& lst = at[static_cast<std::size_t>(x)];
        if (used[static_cast<std::size_t>(x)] || lst.size() == 2) continue;
        used[static_cast<std::size_t>(x)] = 1;
        BigonChain ch;
        ch.crossings.push_back(x);
        int prev_bigon = -1;
        int cur = x;
        while (true) {
            const End* next = nullptr;
            for (const End& e : at[static_cast<std::size_t>(cur)]) {
                if (e.bigon != prev_bigon) next = &e;
            }
            if (!next) break;
            const auto [e1, e2] = bigon_ends[next->bigon];
            const int other = e1 == cur ? e2 : e1;
            if (used[static_cast<std::size_t>(other)]) {
                throw chain_error("cyclic bigon chain at crossing " + std::to_string(other));
            }
            ch.bigon_faces.push_back(next->bigon);
            ch.crossings.push_back(other);
            used[static_cast<std::size_t>(other)] = 1;
            prev_bigon = next->bigon;
            cur = other;
        }
        out.chains.push_back(std::move(ch));
    }
    for (int x = 0; x < c; ++x) {
        if (!used[static_cast<std::size_t>(x)]) {
            throw chain_error("cyclic bigon chain through crossing " + std::to_string(x));
        }
    }

    // side faces and flype-template side pairs
    for (BigonChain& ch : out.chains) {
        if (!ch.bigon_faces.empty()) {
            std::vector<int> sides;
            for (int fid : ch.bigon_faces) {
                for (const Dart& side : f.faces[static_cast<std::size_t>(fid)].sides) {
                    sides.push_back(f.dart_face[static_cast<std::size_t>(dart_id(d.twin(side)))]);
                }
            }
            std::sort(sides.begin(), sides.end());
            sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
            ch.side_faces = sides;
            if (sides.size() == 2) ch.side_pairs.push_back({sides[0], sides[1]});
        } else {
            const auto& cf = f.corner_face[static_cast<std::size_t>(ch.crossings[0])];
            ch.side_pairs.push_back({std::min(cf[0], cf[2]), std::max(cf[0], cf[2])});
            ch.side_pairs.push_back({std::min(cf[1], cf[3]), std::max(cf[1], cf[3])});
        }
    }

    for (const BigonChain& ch : out.chains) ++out.stats.t[ch.crossing_length()];
    out.stats.twist_number = static_cast<int>(out.chains.size());
    for (const BigonChain& ch : out.chains) out.stats.chain_lengths.push_back(ch.crossing_length());
    std::sort(out.stats.chain_lengths.begin(), out.stats.chain_lengths.end(), std::greater<>());
    return out;
}

/// Necessary-condition check for twist reducedness: two distinct maximal
/// chains sharing both side faces match the direct flype template, so the
/// diagram is certainly not twist reduced.  A clean pass does not certify
/// twist reducedness (general flype detection is out of scope); callers
/// assert it explicitly.
struct FlypeSuspect {
    int chain_a = -1;
    int chain_b = -1;
    std::pair<int, int> shared_sides{-1, -1};
};

inline std::optional<FlypeSuspect> find_flype_suspect(const ChainCensus& census) {
    std::map<std::pair<int, int>, int> seen;
    for (int i = 0; i < static_cast<int>(census.chains.size()); ++i) {
        for (const auto& sp : census.chains[static_cast<std::size_t>(i)].side_pairs) {
            auto [it, inserted] = seen.try_emplace(sp, i);
            if (!inserted && it->second != i) {
                return FlypeSuspect{it->second, i, sp};
            }
        }
    }
    return std::nullopt;
}

}  // namespace knotvol
