#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limroot/dirsys.hpp>
#include <limroot/errors.hpp>
#include <limroot/oracle.hpp>

using namespace limroot;

namespace {

DiagonalSystemDescriptor make_desc(Family fam, Field f, std::vector<long> initial,
                                   std::vector<long> r, std::vector<long> s,
                                   std::vector<long> t, std::size_t depth) {
    DiagonalSystemDescriptor d;
    d.family = fam;
    d.field = f;
    d.initial = std::move(initial);
    d.r = std::move(r);
    d.s = std::move(s);
    d.depth = depth;
    if (unitary_family(fam)) {
        d.t1 = t;
        d.t2 = std::move(t);
    } else {
        d.t = std::move(t);
    }
    return d;
}

DiagonalSystemDescriptor unitary_desc(Family fam, Field f, long p, long q, std::vector<long> r,
                                      std::vector<long> t1, std::vector<long> t2,
                                      std::size_t depth) {
    DiagonalSystemDescriptor d;
    d.family = fam;
    d.field = f;
    d.initial = {p, q};
    d.r = std::move(r);
    d.t1 = std::move(t1);
    d.t2 = std::move(t2);
    d.depth = depth;
    return d;
}

std::size_t n_pos(const WeightedRootSystem& sys) { return sys.positives.size(); }

}  // namespace

TEST_CASE("dimension recursion frozen examples") {
    auto sl = make_desc(Family::SL, Field::R, {2}, {1}, {}, {1}, 3);
    auto dims = generate_dims(sl);
    REQUIRE(dims.size() == 4);
    CHECK(dims[0] == std::vector<long>{2});
    CHECK(dims[3] == std::vector<long>{5});

    auto su = unitary_desc(Family::SU, Field::C, 2, 1, {1}, {1}, {1}, 3);
    auto udims = generate_dims(su);
    CHECK(udims[1] == std::vector<long>{3, 2});
    CHECK(udims[3] == std::vector<long>{5, 4});
    for (const auto& d : udims) CHECK(mu_of(su, d) == 1);

    auto doubling = make_desc(Family::SL, Field::R, {2}, {2}, {}, {}, 3);
    auto ddims = generate_dims(doubling);
    CHECK(ddims == std::vector<std::vector<long>>{{2}, {4}, {8}, {16}});

    auto spf = make_desc(Family::SpF, Field::R, {2}, {1}, {}, {1}, 2);
    CHECK(generate_dims(spf)[2] == std::vector<long>{4});
}

TEST_CASE("descriptor validation") {
    auto bad_t = unitary_desc(Family::SU, Field::C, 2, 1, {1}, {}, {}, 1);
    bad_t.t = {1};
    CHECK_THROWS_AS(generate_dims(bad_t), InputError);

    auto quat = unitary_desc(Family::Sp_pq, Field::H, 1, 1, {1}, {1}, {1}, 1);
    quat.s = {1};
    CHECK_THROWS_AS(generate_dims(quat), InvariantViolation);

    auto zero_step = make_desc(Family::SL, Field::R, {2}, {0}, {0}, {1}, 1);
    CHECK_THROWS_AS(generate_dims(zero_step), InvariantViolation);

    auto even_oc = make_desc(Family::OC, Field::C, {3}, {1}, {}, {1}, 1);  // 3 -> 4
    CHECK_THROWS_AS(generate_dims(even_oc), InvariantViolation);
    auto odd_oc = make_desc(Family::OC, Field::C, {3}, {1}, {}, {2}, 2);  // 3,5,7
    CHECK(generate_dims(odd_oc).size() == 3);

    auto no_r = make_desc(Family::SL, Field::R, {2}, {}, {}, {1}, 1);
    CHECK_THROWS_AS(generate_dims(no_r), InputError);
}

TEST_CASE("level data frozen examples") {
    auto sl = make_desc(Family::SL, Field::R, {2}, {1}, {}, {1}, 2);
    auto levels = generate_levels(sl);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].system.type_label == "A_1");
    CHECK(levels[2].system.type_label == "A_3");
    CHECK(levels[1].rho_n == Vec{Rat(1), Rat(0), Rat(-1)});
    for (const auto& lv : levels) CHECK(lv.m_system.positives.empty());  // split m

    auto su = unitary_desc(Family::SU, Field::C, 4, 1, {1}, {1}, {1}, 1);
    auto ulv = generate_levels(su);
    CHECK(ulv[0].mu == 3);
    CHECK(ulv[0].m_system.type_label == "A_2");      // su(3) part of m
    CHECK(ulv[0].m_system.ambient_dim == 3);
    CHECK(n_pos(ulv[0].m_system) == 3);

    auto so = unitary_desc(Family::SO_pq, Field::R, 5, 2, {1}, {1}, {1}, 1);
    CHECK(generate_levels(so)[0].m_system.type_label == "B_1");  // so(3)

    auto sp = unitary_desc(Family::Sp_pq, Field::H, 3, 1, {1}, {1}, {1}, 1);
    CHECK(generate_levels(sp)[0].m_system.type_label == "C_2");  // sp(2)

    auto slh = make_desc(Family::SL, Field::H, {2}, {1}, {}, {1}, 1);
    CHECK(generate_levels(slh)[0].m_system.type_label == "A_1^2");  // sp(1)^2

    auto rank0 = unitary_desc(Family::SU, Field::C, 2, 0, {1}, {1}, {0}, 1);
    CHECK(generate_levels(rank0)[0].rank_zero);
}

TEST_CASE("m-system table agrees with the matrix oracle m-dimension") {
    struct Case {
        Family fam;
        Field f;
        std::vector<long> dims;
    };
    std::vector<Case> cases = {
        {Family::SU, Field::C, {3, 1}},   {Family::SU, Field::C, {2, 2}},
        {Family::SU, Field::C, {2, 1}},   {Family::SU, Field::C, {4, 1}},
        {Family::SO_pq, Field::R, {3, 2}}, {Family::SO_pq, Field::R, {4, 2}},
        {Family::SO_pq, Field::R, {3, 1}}, {Family::SO_pq, Field::R, {5, 2}},
        {Family::Sp_pq, Field::H, {1, 1}}, {Family::Sp_pq, Field::H, {2, 1}},
    };
    for (const auto& c : cases) {
        DiagonalSystemDescriptor d;
        d.family = c.fam;
        d.field = c.f;
        d.initial = c.dims;
        d.r = {1};
        if (unitary_family(c.fam)) {
            d.t1 = {1};
            d.t2 = {1};
        } else {
            d.t = {1};
        }
        auto lv = generate_levels(d)[0];
        long m = std::min(c.dims[0], c.dims[1]);
        long mu = std::max(c.dims[0], c.dims[1]) - m;
        long su_mu_dim = static_cast<long>(lv.m_system.rank) + 2 * static_cast<long>(n_pos(lv.m_system));
        long expected = 0;
        // M has per-pair U(1)/Sp(1) factors over C/H plus the SU(mu;F) block;
        // over C the determinant-one condition removes one torus dimension.
        if (c.f == Field::R) expected = su_mu_dim;
        if (c.f == Field::C) expected = m - 1 + (mu >= 1 ? su_mu_dim + 1 : 0);
        if (c.f == Field::H) expected = 3 * m + su_mu_dim;
        INFO(level_descriptor(d, c.dims).to_string());
        CHECK(m_dimension(realize(level_descriptor(d, c.dims))) == expected);
    }
    // sl(n;H): m = sp(1)^n, dim 3n
    auto slh = make_desc(Family::SL, Field::H, {2}, {1}, {}, {1}, 0);
    auto lv = generate_levels(slh)[0];
    CHECK(m_dimension(realize(level_descriptor(slh, {2}))) ==
          static_cast<long>(lv.m_system.rank) + 2 * static_cast<long>(n_pos(lv.m_system)));
}

TEST_CASE("iwasawa alignment") {
    auto sl = make_desc(Family::SL, Field::R, {2}, {2}, {}, {1}, 3);
    auto rep = iwasawa_aligned(sl);
    CHECK(rep.overall);
    CHECK(rep.per_level == std::vector<bool>{true, true, true});

    // mu sequence (3,1,2,2)
    auto su = unitary_desc(Family::SU, Field::C, 4, 1, {1}, {0, 3, 1}, {2, 2, 1}, 3);
    auto urep = iwasawa_aligned(su);
    CHECK(urep.mu == std::vector<long>{3, 1, 2, 2});
    CHECK(urep.per_level == std::vector<bool>{false, true, true});
    CHECK(!urep.overall);
    CHECK(extract_cofinal_aligned(su) == std::vector<std::size_t>{1, 2, 3});

    auto constant = unitary_desc(Family::SU, Field::C, 2, 1, {1}, {1}, {1}, 3);
    CHECK(iwasawa_aligned(constant).overall);
    CHECK(extract_cofinal_aligned(constant) == std::vector<std::size_t>{0, 1, 2, 3});

    // mu strictly decreasing (2,1,0)
    auto dec = unitary_desc(Family::SU, Field::C, 3, 1, {1}, {0}, {1}, 2);
    CHECK(iwasawa_aligned(dec).mu == std::vector<long>{2, 1, 0});
    CHECK_THROWS_AS(extract_cofinal_aligned(dec), DepthTooSmall);
}

TEST_CASE("classical type thresholds") {
    CHECK(is_classical_type(make_desc(Family::SL, Field::R, {2}, {1}, {}, {1}, 4)).value);
    CHECK(is_classical_type(make_desc(Family::SL, Field::R, {2}, {1}, {}, {1}, 4)).threshold == 0);
    auto settle = make_desc(Family::SL, Field::R, {2}, {2, 1}, {}, {1}, 4);
    auto ct = is_classical_type(settle);
    CHECK(ct.value);
    CHECK(ct.threshold == 1);
    CHECK(!is_classical_type(make_desc(Family::SL, Field::R, {2}, {2}, {}, {1}, 4)).value);
}

TEST_CASE("restriction fiber counts") {
    auto unit = make_desc(Family::SL, Field::R, {3}, {1}, {}, {1}, 1);
    CHECK(restriction_fiber_count(unit, 0) == 1);

    auto dbl = make_desc(Family::SL, Field::R, {2}, {2}, {}, {}, 1);
    CHECK(restriction_fiber_count(dbl, 0) >= 2);

    auto rank0 = unitary_desc(Family::SU, Field::C, 2, 0, {1}, {1}, {0}, 1);
    CHECK(restriction_fiber_count(rank0, 0) == kInfiniteFibers);

    // fiber count >= r+s at each level on a small corpus
    std::vector<DiagonalSystemDescriptor> corpus = {
        make_desc(Family::SL, Field::R, {2}, {1, 2}, {}, {1}, 2),
        make_desc(Family::SL, Field::C, {2}, {1, 1}, {0, 1}, {1}, 2),
        make_desc(Family::SpF, Field::R, {2}, {2}, {}, {1}, 1),
        unitary_desc(Family::SU, Field::C, 2, 1, {2}, {1}, {1}, 1),
        make_desc(Family::SOstar, Field::H, {3}, {1}, {}, {2}, 2),
    };
    for (const auto& d : corpus)
        for (std::size_t lvl = 0; lvl < d.depth; ++lvl) {
            long fibers = restriction_fiber_count(d, lvl);
            StepParams p = step_params(d, lvl + 1);
            INFO("level " << lvl);
            CHECK((fibers == kInfiniteFibers || fibers >= p.r + p.s));
        }
}

TEST_CASE("weak parabolicity of unit steps") {
    struct Case {
        DiagonalSystemDescriptor desc;
        bool expected;
    };
    std::vector<Case> cases = {
        {make_desc(Family::SL, Field::R, {2}, {1}, {}, {1}, 3), true},
        {make_desc(Family::SL, Field::C, {2}, {1}, {}, {2}, 2), true},
        {make_desc(Family::SL, Field::H, {2}, {0}, {1}, {1}, 2), true},  // delta-twisted
        {make_desc(Family::SL, Field::R, {2}, {2}, {}, {}, 3), false},
        {unitary_desc(Family::SU, Field::C, 2, 1, {1}, {1}, {1}, 2), true},
        {unitary_desc(Family::SU, Field::C, 2, 1, {1}, {2}, {0}, 2), false},  // lopsided
        {unitary_desc(Family::SO_pq, Field::R, 3, 2, {1}, {1}, {1}, 2), true},
        {unitary_desc(Family::Sp_pq, Field::H, 1, 1, {1}, {1}, {1}, 2), true},
        {unitary_desc(Family::Sp_pq, Field::H, 2, 1, {1}, {0}, {0}, 2), true},  // identity steps
        {make_desc(Family::SpF, Field::R, {2}, {1}, {}, {1}, 2), true},
        {make_desc(Family::SpF, Field::C, {1}, {1}, {}, {2}, 2), true},
        {make_desc(Family::SOC, Field::C, {4}, {1}, {}, {2}, 2), true},
        {make_desc(Family::SOC, Field::C, {5}, {1}, {}, {2}, 2), true},
        {make_desc(Family::SOC, Field::C, {4}, {1}, {}, {1}, 2), false},
        {make_desc(Family::SOstar, Field::H, {4}, {1}, {}, {2}, 2), true},
        {make_desc(Family::SOstar, Field::H, {5}, {1}, {}, {2}, 2), true},
        {make_desc(Family::SOstar, Field::H, {4}, {1}, {}, {1}, 2), false},
    };
    for (const auto& c : cases) {
        INFO(family_name(c.desc.family) << "/" << field_name(c.desc.field) << " d0="
                                        << c.desc.initial[0]);
        auto res = is_weakly_parabolic(c.desc);
        CHECK(res.value == c.expected);
        for (const auto& cert : res.steps) {
            if (cert.vacuous) continue;
            CHECK(cert.agree);  // the three criteria never disagree
            if (cert.centralizer) CHECK(*cert.centralizer == cert.rho);
            if (cert.component) CHECK(*cert.component == cert.rho);
        }
        if (!c.expected) CHECK(!res.steps.back().rho);
    }
}

TEST_CASE("weakly parabolic implies classical type (small sweep)") {
    for (long r = 0; r <= 2; ++r)
        for (long s = 0; s <= 2; ++s)
            for (long t = 0; t <= 2; ++t) {
                if (r + s == 0) continue;
                auto d = make_desc(Family::SL, Field::R, {2}, {r}, {s}, {t}, 3);
                if (is_weakly_parabolic(d).value) CHECK(is_classical_type(d).value);
            }
}

TEST_CASE("canonicalize frozen examples") {
    auto sl = make_desc(Family::SL, Field::R, {2}, {1}, {}, {1}, 3);
    auto form = canonicalize(sl);
    CHECK(form.family_case == 'a');
    CHECK(!form.delta_variant);
    CHECK(form.base_params == std::vector<long>{2});
    CHECK(form.notes.empty());

    auto so = unitary_desc(Family::SO_pq, Field::R, 2, 1, {1}, {1}, {1}, 2);
    CHECK(canonicalize(so).family_case == 'b');

    auto spf2 = make_desc(Family::SpF, Field::R, {1}, {1}, {}, {2}, 2);
    auto f = canonicalize(spf2);
    CHECK(f.family_case == 'f');
    REQUIRE(f.notes.size() == 1);  // canonical (f) step has t = 1
    CHECK(f.notes[0].find("interpolated") != std::string::npos);
    CHECK(canonicalize(make_desc(Family::SpF, Field::R, {1}, {1}, {}, {1}, 2)).notes.empty());

    CHECK(canonicalize(make_desc(Family::SOC, Field::C, {4}, {1}, {}, {2}, 2)).family_case == 'c');
    CHECK(canonicalize(unitary_desc(Family::SU, Field::C, 2, 1, {1}, {1}, {1}, 2)).family_case ==
          'd');
    CHECK(canonicalize(unitary_desc(Family::Sp_pq, Field::H, 1, 1, {1}, {1}, {1}, 2)).family_case ==
          'e');
    CHECK(canonicalize(make_desc(Family::SOstar, Field::H, {4}, {1}, {}, {2}, 2)).family_case ==
          'g');

    auto twisted = make_desc(Family::SL, Field::R, {2}, {0}, {1}, {1}, 2);
    CHECK(canonicalize(twisted).delta_variant);

    CHECK_THROWS_AS(canonicalize(make_desc(Family::SL, Field::R, {2}, {2}, {}, {}, 2)),
                    NotClassifiable);
}

TEST_CASE("canonicalize idempotence") {
    std::vector<DiagonalSystemDescriptor> descs = {
        make_desc(Family::SL, Field::R, {2}, {1}, {}, {2, 1}, 3),
        make_desc(Family::SL, Field::H, {2}, {0}, {1}, {1}, 2),
        unitary_desc(Family::SU, Field::C, 3, 1, {1}, {2}, {2}, 2),
        make_desc(Family::SOstar, Field::H, {4}, {1}, {}, {4}, 2),
        make_desc(Family::SpF, Field::C, {2}, {1}, {}, {3}, 2),
    };
    for (const auto& d : descs) {
        auto once = canonicalize(d);
        auto twice = canonicalize(to_descriptor(once, d.depth));
        CHECK(once.family_case == twice.family_case);
        CHECK(once.family == twice.family);
        CHECK(once.field == twice.field);
        CHECK(once.delta_variant == twice.delta_variant);
        CHECK(once.base_params == twice.base_params);
        CHECK(twice.notes.empty());  // canonical descriptors need no normalization
    }
}

TEST_CASE("lp parameter check") {
    auto sl = make_desc(Family::SL, Field::R, {3}, {1}, {}, {1}, 2);
    Vec rho0{Rat(1), Rat(0), Rat(-1)};
    CHECK(lp_parameter_check(sl, false, 2, rho0).accepted);
    CHECK(!lp_parameter_check(sl, false, 2, scale(Rat(2), rho0)).accepted);
    CHECK(lp_parameter_check(sl, false, 1, scale(Rat(2), rho0)).accepted);  // (2/1) rho
    CHECK(lp_parameter_check(sl, true, 0, Vec(3, Rat(0))).accepted);
    CHECK(!lp_parameter_check(sl, true, 0, rho0).accepted);

    auto bad = make_desc(Family::SL, Field::R, {2}, {2}, {}, {}, 2);
    Vec rho_bad{Rat(1) / 2, Rat(-1) / 2};
    CHECK(!lp_parameter_check(bad, false, 2, rho_bad).accepted);
    CHECK(lp_parameter_check(bad, true, 0, Vec(2, Rat(0))).accepted);  // p=inf stays transparent

    CHECK_THROWS_AS(lp_parameter_check(sl, false, Rat(1) / 2, rho0), InputError);
}

TEST_CASE("system verdict assembly") {
    auto good = unitary_desc(Family::SU, Field::C, 2, 1, {1}, {1}, {1}, 2);
    auto v = system_verdict(good);
    CHECK(v.alignment.overall);
    CHECK(v.classical.value);
    CHECK(v.weakly_parabolic.value);
    REQUIRE(v.canonical.has_value());
    CHECK(v.canonical->family_case == 'd');

    auto bad = make_desc(Family::SL, Field::R, {2}, {2}, {}, {}, 2);
    auto vb = system_verdict(bad);
    CHECK(!vb.weakly_parabolic.value);
    CHECK(!vb.classical.value);
    CHECK(!vb.canonical.has_value());
    CHECK(!vb.notes.empty());
}
