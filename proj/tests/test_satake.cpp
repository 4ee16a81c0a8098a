#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limroot/errors.hpp>
#include <limroot/satake.hpp>

using namespace limroot;

namespace {

RealFormDescriptor d1(Family fam, Field f, long n) { return {fam, f, n}; }

RealFormDescriptor d2(Family fam, Field f, long p, long q) {
    RealFormDescriptor d{fam, f};
    d.p = p;
    d.q = q;
    return d;
}

std::vector<RealFormDescriptor> diagram_corpus() {
    std::vector<RealFormDescriptor> out;
    for (long n = 2; n <= 7; ++n) {
        out.push_back(d1(Family::SL, Field::R, n));
        out.push_back(d1(Family::SL, Field::C, n));
        out.push_back(d1(Family::SL, Field::H, n));
    }
    for (long p = 1; p <= 6; ++p)
        for (long q = 1; q <= p; ++q) {
            out.push_back(d2(Family::SU, Field::C, p, q));
            if (p + q >= 3) out.push_back(d2(Family::SO_pq, Field::R, p, q));
            out.push_back(d2(Family::Sp_pq, Field::H, p, q));
        }
    for (long n = 1; n <= 6; ++n) {
        out.push_back(d1(Family::SpF, Field::R, n));
        out.push_back(d1(Family::SpF, Field::C, n));
    }
    for (long n = 3; n <= 8; ++n) out.push_back(d1(Family::SOC, Field::C, n));
    for (long n = 2; n <= 7; ++n) out.push_back(d1(Family::SOstar, Field::H, n));
    return out;
}

}  // namespace

TEST_CASE("catalog diagram shapes, frozen") {
    auto sl4 = satake_of(d1(Family::SL, Field::R, 4));
    CHECK(sl4.vertices.size() == 3);
    CHECK(sl4.white_count() == 3);
    CHECK(sl4.arrows.empty());

    auto su31 = satake_of(d2(Family::SU, Field::C, 3, 1));
    CHECK(su31.vertices.size() == 3);
    CHECK(su31.white_count() == 2);
    CHECK(su31.is_black(2));
    REQUIRE(su31.arrows.size() == 1);
    CHECK(su31.arrows[0] == std::pair<int, int>(1, 3));

    auto sl2h = satake_of(d1(Family::SL, Field::H, 2));  // A_3, odd vertices black
    CHECK(sl2h.vertices.size() == 3);
    CHECK(sl2h.is_black(1));
    CHECK(!sl2h.is_black(2));
    CHECK(sl2h.is_black(3));

    auto su22 = satake_of(d2(Family::SU, Field::C, 2, 2));
    CHECK(su22.white_count() == 3);
    REQUIRE(su22.arrows.size() == 1);
    CHECK(restrict_simple(su22).size() == 2);
}

TEST_CASE("white classes match restricted simple count") {
    for (const auto& d : diagram_corpus()) {
        INFO(d.to_string());
        auto diag = satake_of(d);
        std::size_t n_simples = 0;
        try {
            n_simples = build_restricted_system(d).simples.size();
        } catch (const RankZero&) {
            continue;
        }
        CHECK(restrict_simple(diag).size() == n_simples);
    }
}

TEST_CASE("restrict_simple classes are disjoint, white, arrow-closed") {
    for (const auto& d : diagram_corpus()) {
        auto diag = satake_of(d);
        auto classes = restrict_simple(diag);
        std::set<int> seen;
        for (const auto& c : classes) {
            CHECK((c.vertex_ids.size() == 1 || c.vertex_ids.size() == 2));
            for (int id : c.vertex_ids) {
                CHECK(!diag.is_black(id));
                CHECK(seen.insert(id).second);
            }
        }
        CHECK(seen.size() == diag.white_count());
    }
}

TEST_CASE("delete rules") {
    auto su22 = satake_of(d2(Family::SU, Field::C, 2, 2));  // A_3, arrow 1<->3
    auto unchanged = delete_white(su22, {});
    CHECK(diagram_isomorphic(unchanged, su22));

    auto res = delete_white(su22, {1});  // arrow closure removes 3 too
    CHECK(res.vertices.size() == 1);
    CHECK(res.vertices[0].id == 2);
    CHECK(res.arrows.empty());

    auto sl4 = satake_of(d1(Family::SL, Field::R, 4));
    auto two_comps = delete_white(sl4, {2});
    CHECK(two_comps.vertices.size() == 2);
    CHECK(two_comps.edges.empty());

    auto sl2h = satake_of(d1(Family::SL, Field::H, 2));
    CHECK_THROWS_AS(delete_white(sl2h, {1}), NotWhite);
}

TEST_CASE("deletion is order independent on classes") {
    auto su33 = satake_of(d2(Family::SU, Field::C, 3, 3));
    auto both = delete_white(su33, {1, 2});
    auto seq = delete_white(delete_white(su33, {1}), {2});
    CHECK(canonical_key(both) == canonical_key(seq));
}

TEST_CASE("canonical_key identifies isomorphic diagrams and separates others") {
    auto sl4 = satake_of(d1(Family::SL, Field::R, 4));
    CHECK(canonical_key(delete_white(sl4, {1})) == canonical_key(delete_white(sl4, {3})));
    CHECK(canonical_key(delete_white(sl4, {1})) != canonical_key(delete_white(sl4, {2})));
    // orientation of multi-bond edges matters from rank 3 on (B_2 = C_2)
    auto so43 = satake_of(d2(Family::SO_pq, Field::R, 4, 3));   // B_3 all white
    auto sp3r = satake_of(d1(Family::SpF, Field::R, 3));        // C_3 all white
    CHECK(canonical_key(so43) != canonical_key(sp3r));
    auto so32 = satake_of(d2(Family::SO_pq, Field::R, 3, 2));   // B_2 all white
    auto sp2r = satake_of(d1(Family::SpF, Field::R, 2));        // C_2 all white
    CHECK(canonical_key(so32) == canonical_key(sp2r));
    // but B_2 is iso to C_2 with reversed labels; keys are label-free
    auto su21 = satake_of(d2(Family::SU, Field::C, 2, 1));
    auto su12 = satake_of(d2(Family::SU, Field::C, 1, 2));
    CHECK(canonical_key(su21) == canonical_key(su12));
}

TEST_CASE("parabolic_components frozen examples") {
    auto a1 = satake_of(d1(Family::SL, Field::R, 2));
    CHECK(parabolic_components(a1).size() == 2);  // A_1 and empty

    auto a2 = satake_of(d1(Family::SL, Field::R, 3));
    CHECK(parabolic_components(a2).size() == 3);  // A_2, A_1, empty

    auto su21 = satake_of(d2(Family::SU, Field::C, 2, 1));
    CHECK(parabolic_components(su21).size() == 2);  // full and empty
}

TEST_CASE("fork handling: D-type deletions") {
    auto so44 = satake_of(d2(Family::SO_pq, Field::R, 4, 4));  // D_4 all white
    auto comps = parabolic_components(so44);
    CHECK(comps.size() >= 5);
    // deleting the fork handle leaves A_3; its two labelings agree
    auto h1 = delete_white(so44, {3});
    CHECK(h1.vertices.size() == 3);
}

TEST_CASE("strip_black_components") {
    auto sl3h = satake_of(d1(Family::SL, Field::H, 3));  // A_5 alternating
    auto res = delete_white(sl3h, {2, 4});               // leaves blacks 1,3,5
    auto stripped = strip_black_components(res);
    CHECK(stripped.vertices.empty());
    auto partial = strip_black_components(delete_white(sl3h, {2}));
    CHECK(partial.vertices.size() == 3);  // black-1 component merged with white 4? no:
    // deleting vertex 2 leaves components {1} (black) and {3,4,5} (b-w-b)
    for (const auto& v : partial.vertices) CHECK(v.id >= 3);
}

TEST_CASE("dot output is deterministic and mentions every vertex") {
    auto su31 = satake_of(d2(Family::SU, Field::C, 3, 1));
    auto dot1 = to_dot(su31);
    auto dot2 = to_dot(satake_of(d2(Family::SU, Field::C, 3, 1)));
    CHECK(dot1 == dot2);
    CHECK(dot1.find("v1") != std::string::npos);
    CHECK(dot1.find("style=dashed") != std::string::npos);
    CHECK(dot1.find("fillcolor=black") != std::string::npos);
}
