#pragma once

// Standard-table alternating diagrams used across the test and acceptance
// suites.  The PD codes were generated from the rational-tangle / pretzel
// structure of each link and cross-validated against an independent
// combinatorial implementation: crossing and component counts, alternation,
// reducedness, the face census, and the chain census below all match that
// oracle.  Expected bound values are frozen from the same oracle.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fixtures {

struct Fixture {
    std::string name;
    std::string pd;
    int crossings;
    int components;
    bool alternating;
    bool reduced;
    std::map<int, int> census;                ///< face-size histogram
    std::vector<int> chain_lengths;           ///< descending; empty = census must error
    bool flype_suspect;                        ///< two chains share both side faces
    std::optional<double> fcb;                ///< face-centered bound, max{r,s} applied
    std::optional<double> fcb_raw;
    std::optional<double> fcb_drilled;
    std::optional<double> dt;                 ///< when chains exist
    std::optional<double> bcb_value;          ///< formula value ignoring gates
};

inline const std::vector<Fixture>& corpus() {
    static const std::vector<Fixture> all = {
        {"3_1", "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)",
         3, 1, true, true, {{2, 3}, {3, 2}}, {}, false,
         0.0, 4.059766426, std::nullopt, std::nullopt, std::nullopt},
        {"4_1", "X(8,5,1,6),X(4,1,5,2),X(6,4,7,3),X(2,8,3,7)",
         4, 1, true, true, {{2, 2}, {3, 4}}, {2, 2}, false,
         2.029883213, 8.119532851, 2.029883213, 6.089649638, 1.014941606},
        {"5_1", "X(10,5,1,6),X(6,1,7,2),X(2,7,3,8),X(8,3,9,4),X(4,9,5,10)",
         5, 1, true, true, {{2, 5}, {5, 2}}, {}, false,
         0.0, 9.973546914, std::nullopt, std::nullopt, std::nullopt},
        {"5_2", "X(10,7,1,8),X(6,1,7,2),X(2,5,3,6),X(8,3,9,4),X(4,9,5,10)",
         5, 1, true, true, {{2, 3}, {3, 2}, {4, 2}}, {3, 2}, false,
         3.044824819, 11.387491179, 3.044824819, 7.104591245, 3.856626847},
        {"whitehead", "X(4,10,1,5),X(5,1,6,2),X(9,6,10,7),X(2,9,3,8),X(7,4,8,3)",
         5, 2, true, true, {{2, 2}, {3, 4}, {4, 1}}, {2, 2, 1}, false,
         4.059766426, 11.783395228, 4.059766426, 10.149416064, 4.678803983},
        {"6_1", "X(12,9,1,10),X(8,1,9,2),X(2,7,3,8),X(6,3,7,4),X(10,6,11,5),X(4,12,5,11)",
         6, 1, true, true, {{2, 4}, {3, 2}, {5, 2}}, {4, 2}, false,
         4.059766426, 14.033313340, 4.059766426, 6.089649638, 5.039901319},
        {"6_2", "X(12,7,1,8),X(8,1,9,2),X(2,9,3,10),X(6,3,7,4),X(10,6,11,5),X(4,12,5,11)",
         6, 1, true, true, {{2, 3}, {3, 3}, {4, 1}, {5, 1}}, {3, 2, 1}, false,
         5.074708032, 14.740285472, 5.074708032, 11.164357671, 7.520489224},
        {"6_3", "X(12,8,1,7),X(8,2,9,1),X(6,10,7,9),X(2,5,3,6),X(10,3,11,4),X(4,11,5,12)",
         6, 1, true, true, {{2, 2}, {3, 4}, {4, 2}}, {2, 2, 1, 1}, false,
         6.089649638, 15.447257605, 6.089649638, 14.209182490, 8.342666360},
        {"6^2_2", "X(6,12,1,7),X(11,1,12,2),X(2,10,3,11),X(7,3,8,4),X(4,8,5,9),X(9,5,10,6)",
         6, 2, true, true, {{2, 4}, {4, 4}}, {3, 3}, false,
         4.059766426, 14.655449507, 4.059766426, 9.134474458, 5.621954417},
        {"6^2_3", "X(4,12,1,5),X(5,1,6,2),X(11,6,12,7),X(7,10,8,11),X(2,8,3,9),X(9,3,10,4)",
         6, 2, true, true, {{2, 3}, {3, 2}, {4, 3}}, {2, 2, 2}, false,
         5.693745590, 15.051353556, 5.693745590, 12.179299277, 7.104591245},
        {"borromean", "X(4,8,1,5),X(2,7,3,6),X(12,2,9,1),X(10,3,11,4),X(5,9,6,10),X(7,12,8,11)",
         6, 3, true, true, {{3, 8}}, {1, 1, 1, 1, 1, 1}, false,
         8.119532851, 16.239065703, 8.119532851, 18.268948915, 6.485974260},
        {"7_1", "X(14,7,1,8),X(8,1,9,2),X(2,9,3,10),X(10,3,11,4),X(4,11,5,12),X(12,5,13,6),X(6,13,7,14)",
         7, 1, true, true, {{2, 7}, {7, 2}}, {}, false,
         0.0, 14.065144108, std::nullopt, std::nullopt, std::nullopt},
        {"7_2", "X(14,11,1,12),X(10,1,11,2),X(2,9,3,10),X(8,3,9,4),X(4,7,5,8),X(12,5,13,6),X(6,13,7,14)",
         7, 1, true, true, {{2, 5}, {3, 2}, {6, 2}}, {5, 2}, false,
         4.059766426, 16.239065703, 8.119532851, 6.089649638, 4.128065703},
        {"7_3", "X(14,8,1,7),X(8,2,9,1),X(2,10,3,9),X(10,4,11,3),X(6,12,7,11),X(12,6,13,5),X(4,14,5,13)",
         7, 1, true, true, {{2, 5}, {4, 2}, {5, 2}}, {4, 3}, false,
         5.074708032, 17.301271667, 5.074708032, 8.119532851, 6.805228889},
        {"7_4", "X(14,10,1,9),X(8,2,9,1),X(2,8,3,7),X(10,4,11,3),X(6,12,7,11),X(12,6,13,5),X(4,14,5,13)",
         7, 1, true, true, {{2, 4}, {3, 2}, {4, 2}, {6, 1}}, {3, 3, 1}, false,
         6.089649638, 17.477140818, 6.089649638, 13.194240883, 9.285816794},
        {"7_5", "X(14,9,1,10),X(10,1,11,2),X(2,11,3,12),X(8,3,9,4),X(4,7,5,8),X(12,5,13,6),X(6,13,7,14)",
         7, 1, true, true, {{2, 4}, {3, 1}, {4, 3}, {5, 1}}, {3, 2, 2}, false,
         6.708687196, 18.008243800, 6.708687196, 13.194240883, 9.946276485},
        {"7_6", "X(14,9,1,10),X(8,1,9,2),X(10,8,11,7),X(6,12,7,11),X(2,5,3,6),X(12,3,13,4),X(4,13,5,14)",
         7, 1, true, true, {{2, 3}, {3, 3}, {4, 2}, {5, 1}}, {2, 2, 2, 1}, false,
         7.723628802, 18.404147849, 7.723628802, 16.239065703, 10.768453622},
        {"7_7", "X(14,10,1,9),X(8,2,9,1),X(10,7,11,8),X(2,11,3,12),X(6,3,7,4),X(12,6,13,5),X(4,14,5,13)",
         7, 1, true, true, {{2, 2}, {3, 5}, {4, 1}, {5, 1}}, {2, 2, 1, 1, 1}, false,
         8.119532851, 18.800051898, 8.119532851, 18.268948915, 12.006528737},
        {"8_1", "X(16,13,1,14),X(12,1,13,2),X(2,11,3,12),X(10,3,11,4),X(4,9,5,10),X(8,5,9,6),X(14,8,15,7),X(6,16,7,15)",
         8, 1, true, true, {{2, 6}, {3, 2}, {7, 2}}, {6, 2}, false,
         4.059766426, 18.124910533, 8.119532851, 6.089649638, 4.128065703},
        {"pretzel_1_2_1_2", "X(6,4,1,3),X(2,12,3,7),X(8,2,7,1),X(12,8,11,9),X(10,6,9,5),X(4,10,5,11)",
         6, 2, true, true, {{2, 2}, {3, 4}, {4, 2}}, {2, 2, 1, 1}, true,
         6.089649638, 15.447257605, 6.089649638, 14.209182490, 8.342666360},
    };
    return all;
}

inline const Fixture& get(const std::string& name) {
    for (const auto& f : corpus()) {
        if (f.name == name) return f;
    }
    throw std::runtime_error("unknown fixture " + name);
}

/// A trefoil with one Reidemeister-I kink added on an edge (crossing 3).
inline const char* kinked_trefoil_pd() {
    return "X(8,4,2,5),X(3,6,4,7),X(5,2,6,3),X(7,9,9,8)";
}

/// One crossing, one kink: the simplest valid diagram.
inline const char* one_kink_pd() { return "X(1,2,2,1)"; }

/// Two-crossing clasp: every face is a bigon, so every crossing lies on
/// four bigons and the chain census must refuse it.
inline const char* hopf_pd() { return "X(1,3,2,4),X(3,1,4,2)"; }

}  // namespace fixtures
