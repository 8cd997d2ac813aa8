#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "knotvol/chains.hpp"
#include "knotvol/faces.hpp"
#include "knotvol/pd.hpp"
#include "support/fixtures.hpp"

using namespace knotvol;

TEST_CASE("parse_pd: the standard trefoil") {
    const auto d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
    CHECK(d.crossing_count() == 3);
    CHECK(d.edge_count() == 6);
    CHECK(d.component_count() == 1);
}

TEST_CASE("parse_pd: whitespace and case tolerance") {
    const auto d = parse_pd("  X( 1, 4,2,5 ) ,\tX(3,6,4,1), x(5,2,6,3)  ");
    CHECK(d.crossing_count() == 3);
}

TEST_CASE("parse_pd: malformed inputs") {
    CHECK_THROWS_AS(parse_pd(""), parse_error);
    CHECK_THROWS_AS(parse_pd("   "), parse_error);
    CHECK_THROWS_AS(parse_pd("X(1,1,1,1)"), parse_error);           // label 4 times
    CHECK_THROWS_AS(parse_pd("X(1,2,3"), parse_error);              // truncated
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4,5)"), parse_error);         // five entries
    CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), parse_error);           // wrong head
    CHECK_THROWS_AS(parse_pd("X(0,1,0,1)"), parse_error);           // non-positive label
    CHECK_THROWS_AS(
        parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3),"
                 "X(7,10,8,11),X(9,12,10,7),X(11,8,12,9)"),
        parse_error);                                               // disconnected union
}

TEST_CASE("components of multi-component fixtures") {
    CHECK(parse_pd(fixtures::get("whitehead").pd).component_count() == 2);
    CHECK(parse_pd(fixtures::get("borromean").pd).component_count() == 3);
}

TEST_CASE("compute_faces: figure-eight census") {
    const auto d = parse_pd(fixtures::get("4_1").pd);
    const auto f = compute_faces(d);
    CHECK(f.b.at(2) == 2);
    CHECK(f.b.at(3) == 4);
    CHECK(f.face_count() == 6);
}

TEST_CASE("compute_faces: trefoil census") {
    const auto d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
    const auto f = compute_faces(d);
    CHECK(f.b.at(2) == 3);
    CHECK(f.b.at(3) == 2);
}

TEST_CASE("compute_faces is deterministic") {
    const auto d = parse_pd(fixtures::get("7_5").pd);
    const auto f1 = compute_faces(d);
    const auto f2 = compute_faces(d);
    CHECK(f1.b == f2.b);
    CHECK(f1.corner_face == f2.corner_face);
    CHECK(f1.dart_face == f2.dart_face);
}

TEST_CASE("face counts and Euler identities across the corpus") {
    for (const auto& fix : fixtures::corpus()) {
        const auto d = parse_pd(fix.pd);
        const auto f = compute_faces(d);
        INFO(fix.name);
        CHECK(d.crossing_count() == fix.crossings);
        CHECK(d.component_count() == fix.components);
        CHECK(f.b == fix.census);
        CHECK(f.face_count() == d.crossing_count() + 2);
        int edge_sum = 0, euler = 0;
        for (const auto& [i, cnt] : f.b) {
            edge_sum += i * cnt;
            euler += (4 - i) * cnt;
        }
        CHECK(edge_sum == 4 * d.crossing_count());
        CHECK(euler == 8);
    }
}

TEST_CASE("is_alternating") {
    CHECK(is_alternating(parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)")));
    // one quadruple rotated by one slot flips its over/under assignment
    CHECK_FALSE(is_alternating(parse_pd("X(4,2,5,1),X(3,6,4,1),X(5,2,6,3)")));
    // a single-crossing kink alternates vacuously
    CHECK(is_alternating(parse_pd(fixtures::one_kink_pd())));
    for (const auto& fix : fixtures::corpus()) {
        INFO(fix.name);
        CHECK(is_alternating(parse_pd(fix.pd)) == fix.alternating);
    }
}

TEST_CASE("reducedness_check") {
    {
        const auto d = parse_pd(fixtures::get("4_1").pd);
        const auto rep = reducedness_check(d, compute_faces(d));
        CHECK(rep.reduced);
        CHECK(rep.offenders.empty());
    }
    {
        const auto d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
        CHECK(reducedness_check(d, compute_faces(d)).reduced);
    }
    {
        const auto d = parse_pd(fixtures::kinked_trefoil_pd());
        const auto rep = reducedness_check(d, compute_faces(d));
        CHECK_FALSE(rep.reduced);
        REQUIRE(rep.offenders.size() == 1);
        CHECK(rep.offenders[0] == 3);  // the kink crossing
    }
}

TEST_CASE("no face repeats among a crossing's corners in reduced alternating diagrams") {
    for (const auto& fix : fixtures::corpus()) {
        if (!fix.alternating || !fix.reduced) continue;
        const auto d = parse_pd(fix.pd);
        const auto f = compute_faces(d);
        for (int x = 0; x < d.crossing_count(); ++x) {
            const auto& cf = f.corner_face[static_cast<std::size_t>(x)];
            const std::set<int> uniq(cf.begin(), cf.end());
            INFO(fix.name << " crossing " << x);
            CHECK(uniq.size() == 4);
        }
    }
}

TEST_CASE("bigon chains: figure-eight") {
    const auto d = parse_pd(fixtures::get("4_1").pd);
    const auto f = compute_faces(d);
    const auto census = bigon_chain_stats(d, f);
    CHECK(census.stats.twist_number == 2);
    CHECK(census.stats.t_of(2) == 2);
    CHECK(census.stats.t_of(1) == 0);
    CHECK(census.stats.g(2) == 2);
    CHECK(census.stats.g(3) == 0);
}

TEST_CASE("bigon chains: borromean rings have six singletons") {
    const auto d = parse_pd(fixtures::get("borromean").pd);
    const auto census = bigon_chain_stats(d, compute_faces(d));
    CHECK(census.stats.twist_number == 6);
    CHECK(census.stats.t_of(1) == 6);
}

TEST_CASE("bigon chains: cyclic and ambiguous configurations are errors") {
    {
        const auto d = parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");  // trefoil wraps
        CHECK_THROWS_AS(bigon_chain_stats(d, compute_faces(d)), chain_error);
    }
    {
        const auto d = parse_pd(fixtures::hopf_pd());  // four bigons at each crossing
        CHECK_THROWS_AS(bigon_chain_stats(d, compute_faces(d)), chain_error);
    }
}

TEST_CASE("chain census across the corpus") {
    for (const auto& fix : fixtures::corpus()) {
        const auto d = parse_pd(fix.pd);
        const auto f = compute_faces(d);
        INFO(fix.name);
        if (fix.chain_lengths.empty()) {
            CHECK_THROWS_AS(bigon_chain_stats(d, f), chain_error);
            continue;
        }
        const auto census = bigon_chain_stats(d, f);
        CHECK(census.stats.chain_lengths == fix.chain_lengths);
        int total = 0;
        for (int len : census.stats.chain_lengths) total += len;
        CHECK(total == d.crossing_count());
        // g is nonincreasing with g_1 = t(P), and t_i = g_i - g_{i+1}
        CHECK(census.stats.g(1) == census.stats.twist_number);
        for (int i = 1; i <= 8; ++i) {
            CHECK(census.stats.g(i) >= census.stats.g(i + 1));
            CHECK(census.stats.t_of(i) == census.stats.g(i) - census.stats.g(i + 1));
        }
        CHECK(find_flype_suspect(census).has_value() == fix.flype_suspect);
    }
}

TEST_CASE("the direct flype template is detected") {
    const auto d = parse_pd(fixtures::get("pretzel_1_2_1_2").pd);
    const auto census = bigon_chain_stats(d, compute_faces(d));
    const auto sus = find_flype_suspect(census);
    REQUIRE(sus.has_value());
    // the two singleton crossings share both side faces across the tangle
    const auto& a = census.chains[static_cast<std::size_t>(sus->chain_a)];
    const auto& b = census.chains[static_cast<std::size_t>(sus->chain_b)];
    CHECK(a.crossing_length() == 1);
    CHECK(b.crossing_length() == 1);
}

TEST_CASE("borromean_detect") {
    {
        const auto d = parse_pd(fixtures::get("borromean").pd);
        CHECK(borromean_detect(d, compute_faces(d)));
    }
    for (const char* name : {"4_1", "6^2_2", "pretzel_1_2_1_2"}) {
        const auto d = parse_pd(fixtures::get(name).pd);
        INFO(name);
        CHECK_FALSE(borromean_detect(d, compute_faces(d)));
    }
}
