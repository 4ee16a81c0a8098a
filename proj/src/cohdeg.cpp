#include <limroot/cohdeg.hpp>
#include <limroot/errors.hpp>

#include <algorithm>
#include <set>

namespace limroot {

namespace {

bool half_integer(const Rat& r) { return is_integer(r + Rat(1) / 2); }

void check_integrality(const Vec& v, SystemKind kind) {
    bool bcd = kind == SystemKind::B || kind == SystemKind::C || kind == SystemKind::D;
    bool all_int = std::all_of(v.begin(), v.end(), [](const Rat& c) { return is_integer(c); });
    if (all_int) return;
    if (bcd && std::all_of(v.begin(), v.end(), [](const Rat& c) { return half_integer(c); }))
        return;
    throw InputError(bcd ? "weight coordinates must be all integers or all half-integers"
                         : "weight coordinates must be integers");
}

// Zero-pad to the ambient dimension of a later level (coordinate inclusion).
Vec pad_to(Vec v, std::size_t dim) {
    v.resize(dim, Rat(0));
    return v;
}

std::set<Vec> inverted_set(const Vec& shifted, const WeightedRootSystem& m_sys, std::size_t dim) {
    std::set<Vec> out;
    for (const auto& gamma : m_sys.positives)
        if (dot(shifted, gamma) < 0) out.insert(pad_to(gamma, dim));
    return out;
}

}  // namespace

Vec pullback(const WeightSpec& nu, const LevelData& level) {
    const WeightedRootSystem& m = level.m_system;
    Vec v(m.ambient_dim, Rat(0));
    for (const auto& [idx, value] : nu.coords) {
        if (idx == 0) throw InputError("weight coordinates are 1-based");
        if (idx > m.ambient_dim) {
            if (value != 0)
                throw UnsupportedTruncation("nonzero weight coordinate " + std::to_string(idx) +
                                            " beyond torus rank " + std::to_string(m.ambient_dim));
            continue;
        }
        v[idx - 1] = value;
    }
    check_integrality(v, m.kind);
    for (std::size_t idx : nu.psi) {
        if (idx >= m.simples.size()) continue;  // that simple root is not present yet
        if (dot(v, m.simples[idx]) < 0)
            throw InputError("weight is not dominant for Psi simple root " + std::to_string(idx));
    }
    return v;
}

DegreeRecord degree(const Vec& nu_i, const WeightedRootSystem& m_sys) {
    if (nu_i.size() != m_sys.ambient_dim) throw InputError("degree: weight dimension mismatch");
    DegreeRecord rec;
    Vec shifted = add(nu_i, rho(m_sys));
    for (const auto& gamma : m_sys.positives)
        if (dot(shifted, gamma) < 0) ++rec.q;
    DominantResult dom = make_dominant(shifted, m_sys);
    rec.singular = dom.singular();
    rec.annihilating_root = dom.singular_root;
    rec.word = dom.word;
    rec.length = dom.length;
    rec.nu_tilde = sub(dom.dominant, rho(m_sys));
    return rec;
}

std::string kind_name(FinitenessKind k) {
    switch (k) {
        case FinitenessKind::CohomologicallyFinite:
            return "cohomologically finite";
        case FinitenessKind::ClassicallyCohomologicallyFinite:
            return "classically cohomologically finite";
        case FinitenessKind::NotFiniteWithinDepth:
            return "not finite within depth";
        case FinitenessKind::SingularTail:
            return "singular tail";
    }
    return "?";
}

DegreeReport finiteness_verdict(const WeightSpec& nu, const DiagonalSystemDescriptor& desc) {
    auto levels = generate_levels(desc);
    DegreeReport rep;
    std::vector<std::set<Vec>> inverted;
    std::size_t final_dim = levels.back().m_system.ambient_dim;
    for (const auto& lv : levels) {
        Vec nu_i = pullback(nu, lv);
        DegreeRecord rec = degree(nu_i, lv.m_system);
        rec.i = lv.n;
        inverted.push_back(inverted_set(add(nu_i, rho(lv.m_system)), lv.m_system, final_dim));
        rep.levels.push_back(std::move(rec));
    }
    rep.notes.push_back("finite-prefix evidence over " + std::to_string(levels.size()) +
                        " level(s), not a proof");

    const DegreeRecord& last = rep.levels.back();
    if (last.singular) {
        rep.verdict = FinitenessKind::SingularTail;
        return rep;
    }
    std::size_t run_start = rep.levels.size() - 1;
    while (run_start > 0 && !rep.levels[run_start - 1].singular &&
           rep.levels[run_start - 1].q == last.q)
        --run_start;
    if (rep.levels.size() > 1 && run_start + 1 == rep.levels.size()) {
        if (rep.levels[run_start - 1].singular) {
            rep.verdict = FinitenessKind::SingularTail;
            rep.notes.push_back("singularity persists next to the end of the prefix");
        } else {
            rep.verdict = FinitenessKind::NotFiniteWithinDepth;
            rep.notes.push_back("degree sequence has no stable suffix within depth");
        }
        return rep;
    }
    rep.q = last.q;
    rep.threshold = run_start;
    bool stable_words = true;
    for (std::size_t i = run_start; i < inverted.size(); ++i)
        stable_words = stable_words && inverted[i] == inverted.back();
    if (stable_words) {
        rep.verdict = FinitenessKind::ClassicallyCohomologicallyFinite;
        rep.stable_word = last.word;
    } else {
        rep.verdict = FinitenessKind::CohomologicallyFinite;
    }
    return rep;
}

}  // namespace limroot
