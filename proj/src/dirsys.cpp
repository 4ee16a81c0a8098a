#include <limroot/dirsys.hpp>
#include <limroot/errors.hpp>
#include <limroot/satake.hpp>

#include <algorithm>

namespace limroot {

bool unitary_family(Family f) {
    return f == Family::SU || f == Family::U || f == Family::SO_pq || f == Family::O_pq ||
           f == Family::Sp_pq;
}

namespace {

long seq_at(const std::vector<long>& seq, std::size_t n) {  // n >= 1, repeat last entry
    if (seq.empty()) return 0;
    return seq[std::min(n - 1, seq.size() - 1)];
}

bool symplectic_like(const DiagonalSystemDescriptor& d) {
    return d.family == Family::SpF || d.family == Family::Sp_pq;
}

WeightedRootSystem empty_system(std::size_t ambient, SystemKind kind, std::string label) {
    return make_system(ambient, ambient, kind, std::move(label), {}, {});
}

WeightedRootSystem a1_product(std::size_t count) {
    std::map<Vec, long> pos;
    std::vector<Vec> simples;
    for (std::size_t i = 0; i < count; ++i) {
        Vec v(count, Rat(0));
        v[i] = 2;
        pos[v] = 1;
        simples.push_back(std::move(v));
    }
    return make_system(count, count, SystemKind::Other, "A_1^" + std::to_string(count), pos,
                       std::move(simples));
}

// Restricted root system of m_n on its torus, for the cohomological degree
// machinery. Unitary families carry the SU(mu;F) simple part; SL(n;H) and
// SO*(2n) carry products of sp(1)'s; the remaining families have abelian m.
WeightedRootSystem m_system_of(const DiagonalSystemDescriptor& desc,
                               const std::vector<long>& dims) {
    if (unitary_family(desc.family)) {
        long mu = std::max(dims[0], dims[1]) - std::min(dims[0], dims[1]);
        std::size_t u = static_cast<std::size_t>(mu);
        switch (desc.field) {
            case Field::C:
                if (mu <= 1) return make_system(u, 0, SystemKind::A, "A_0", {}, {});
                return linear_system(u, 1);
            case Field::R: {
                std::size_t k = u / 2;
                if (k == 0) return empty_system(0, SystemKind::Other, "0");
                if (mu % 2 == 1) return classical_system(SystemKind::B, k, 1, 1, 0);
                return k == 1 ? empty_system(1, SystemKind::D, "D_1")
                              : classical_system(SystemKind::D, k, 1, 0, 0);
            }
            case Field::H:
                if (mu == 0) return empty_system(0, SystemKind::Other, "0");
                return classical_system(SystemKind::C, u, 1, 0, 1);
        }
    }
    if ((desc.family == Family::SL || desc.family == Family::GL) && desc.field == Field::H)
        return a1_product(static_cast<std::size_t>(dims[0]));
    if (desc.family == Family::SOstar)
        return a1_product(static_cast<std::size_t>(dims[0] / 2));
    return empty_system(0, SystemKind::Other, "0");
}

char case_letter(Family f) {
    switch (f) {
        case Family::SL:
        case Family::GL:
            return 'a';
        case Family::SO_pq:
        case Family::O_pq:
            return 'b';
        case Family::SOC:
        case Family::OC:
            return 'c';
        case Family::SU:
        case Family::U:
            return 'd';
        case Family::Sp_pq:
            return 'e';
        case Family::SpF:
            return 'f';
        case Family::SOstar:
            return 'g';
    }
    throw UnsupportedFamily("unknown family");
}

bool has_delta_variant(char c) { return c != 'e' && c != 'f'; }

// Canonical identity-entry count of the unit weakly-parabolic step.
long unit_t(char c) { return (c == 'c' || c == 'g') ? 2 : 1; }

LevelData build_level(const DiagonalSystemDescriptor& desc, std::size_t n,
                      const std::vector<long>& dims) {
    LevelData lv;
    lv.n = n;
    lv.dims = dims;
    lv.mu = mu_of(desc, dims);
    try {
        lv.system = build_restricted_system(level_descriptor(desc, dims));
        lv.rho_n = rho(lv.system);
    } catch (const RankZero&) {
        lv.rank_zero = true;
    }
    lv.m_system = m_system_of(desc, dims);
    return lv;
}

}  // namespace

StepParams step_params(const DiagonalSystemDescriptor& desc, std::size_t n) {
    return {seq_at(desc.r, n), seq_at(desc.s, n), seq_at(desc.t, n), seq_at(desc.t1, n),
            seq_at(desc.t2, n)};
}

void validate_descriptor(const DiagonalSystemDescriptor& desc) {
    bool two_sided = unitary_family(desc.family);
    if (desc.initial.size() != (two_sided ? 2u : 1u))
        throw InputError("descriptor: initial must have " + std::string(two_sided ? "2" : "1") +
                         " entries for this family");
    for (long d : desc.initial)
        if (d < 0) throw InputError("descriptor: negative initial dimension");
    long total0 = desc.initial[0] + (two_sided ? desc.initial[1] : 0);
    if (total0 < 1) throw InputError("descriptor: initial dimension must be positive");
    if (desc.r.empty()) throw InputError("descriptor: r sequence required");
    for (const auto* seq : {&desc.r, &desc.s, &desc.t, &desc.t1, &desc.t2})
        for (long v : *seq)
            if (v < 0) throw InputError("descriptor: negative sequence entry");
    if (two_sided && !desc.t.empty())
        throw InputError("descriptor: unitary families use t1/t2, not t");
    if (!two_sided && (!desc.t1.empty() || !desc.t2.empty()))
        throw InputError("descriptor: t1/t2 are for unitary families only");
    // field/family compatibility via the real-form rules
    RealFormDescriptor probe{desc.family, desc.field};
    if (two_sided) {
        probe.p = std::max(desc.initial[0], 1l);
        probe.q = desc.initial[1];
    } else {
        probe.n = std::max(desc.initial[0], 1l);
    }
    if (desc.family == Family::O_pq) probe.q += (probe.p + probe.q) % 2 ? 0 : 1;
    if (desc.family == Family::OC) probe.n += probe.n % 2 ? 0 : 1;
    check_descriptor(probe);
    for (std::size_t n = 1; n <= desc.depth; ++n) {
        StepParams p = step_params(desc, n);
        require(p.r + p.s > 0, "descriptor: r_n + s_n must be positive at step " +
                                   std::to_string(n));
        if (symplectic_like(desc))
            require(p.s == 0, "descriptor: s_n must vanish for this family (step " +
                                  std::to_string(n) + ")");
    }
}

std::vector<std::vector<long>> generate_dims(const DiagonalSystemDescriptor& desc) {
    validate_descriptor(desc);
    std::vector<std::vector<long>> dims{desc.initial};
    for (std::size_t n = 1; n <= desc.depth; ++n) {
        StepParams p = step_params(desc, n);
        long k = p.r + p.s;
        std::vector<long> next;
        if (unitary_family(desc.family))
            next = {dims.back()[0] * k + p.t1, dims.back()[1] * k + p.t2};
        else if (desc.family == Family::SpF)
            next = {dims.back()[0] * p.r + p.t};
        else
            next = {dims.back()[0] * k + p.t};
        dims.push_back(std::move(next));
    }
    for (const auto& d : dims) {
        long total = d[0] + (d.size() > 1 ? d[1] : 0);
        if (desc.family == Family::O_pq || desc.family == Family::OC)
            require(total % 2 == 1, "descriptor: O/OC dimensions must stay odd");
    }
    return dims;
}

long mu_of(const DiagonalSystemDescriptor& desc, const std::vector<long>& dims) {
    if (!unitary_family(desc.family)) return 0;
    return std::max(dims[0], dims[1]) - std::min(dims[0], dims[1]);
}

RealFormDescriptor level_descriptor(const DiagonalSystemDescriptor& desc,
                                    const std::vector<long>& dims) {
    RealFormDescriptor d{desc.family, desc.field};
    if (unitary_family(desc.family)) {
        d.p = dims[0];
        d.q = dims[1];
    } else {
        d.n = dims[0];
    }
    return d;
}

std::vector<LevelData> generate_levels(const DiagonalSystemDescriptor& desc) {
    auto dims = generate_dims(desc);
    std::vector<LevelData> levels;
    for (std::size_t n = 0; n <= desc.depth; ++n) levels.push_back(build_level(desc, n, dims[n]));
    return levels;
}

AEmbedding step_embedding(const DiagonalSystemDescriptor& desc, const LevelData& lower,
                          const LevelData& upper, const StepParams& p) {
    std::size_t dl = lower.rank_zero ? 0 : lower.system.ambient_dim;
    std::size_t du = upper.system.ambient_dim;
    require(!upper.rank_zero || dl == 0, "step_embedding: nontrivial lower over empty upper");
    Mat iota(du, Vec(dl, Rat(0)));
    std::size_t copies = static_cast<std::size_t>(p.r + p.s);
    if (dl > 0) {
        bool a_kind = lower.system.kind == SystemKind::A;
        bool d_kind = lower.system.kind == SystemKind::D;
        // A-type copies occupy leading blocks (diag{g,...,1}); the isotropic
        // flag families grow at the front, so those copies occupy trailing
        // blocks. Twisted copies apply delta on a: A-type x -> -reverse(x),
        // D-type flips the last coordinate, trivial otherwise.
        std::size_t offset = a_kind ? 0 : du - copies * dl;
        for (std::size_t c = 0; c < copies; ++c) {
            bool twisted = c >= static_cast<std::size_t>(p.r);
            std::size_t base = offset + c * dl;
            for (std::size_t j = 0; j < dl; ++j) {
                if (twisted && a_kind)
                    iota[base + (dl - 1 - j)][j] = -1;
                else if (twisted && d_kind && j + 1 == dl)
                    iota[base + j][j] = -1;
                else
                    iota[base + j][j] = 1;
            }
        }
    }
    return make_embedding(lower.rank_zero ? WeightedRootSystem{} : lower.system, upper.system,
                          std::move(iota));
}

AlignmentReport iwasawa_aligned(const DiagonalSystemDescriptor& desc) {
    auto dims = generate_dims(desc);
    AlignmentReport rep;
    for (const auto& d : dims) rep.mu.push_back(mu_of(desc, d));
    bool uni = unitary_family(desc.family);
    for (std::size_t n = 0; n < desc.depth; ++n) {
        bool ok = !uni || rep.mu[n] <= rep.mu[n + 1];
        rep.per_level.push_back(ok);
        rep.overall = rep.overall && ok;
    }
    return rep;
}

std::vector<std::size_t> extract_cofinal_aligned(const DiagonalSystemDescriptor& desc) {
    auto rep = iwasawa_aligned(desc);
    std::vector<std::size_t> kept;
    long bound = -1;  // mu of the next kept index, scanning backwards
    for (std::size_t i = rep.mu.size(); i-- > 0;) {
        if (bound < 0 || rep.mu[i] <= bound) {
            kept.push_back(i);
            bound = rep.mu[i];
        }
    }
    std::reverse(kept.begin(), kept.end());
    if (kept.size() < 2)
        throw DepthTooSmall("no two aligned indices within depth " + std::to_string(desc.depth));
    return kept;
}

ClassicalTypeResult is_classical_type(const DiagonalSystemDescriptor& desc) {
    validate_descriptor(desc);
    std::size_t threshold = 0;
    for (std::size_t n = 1; n <= desc.depth; ++n) {
        StepParams p = step_params(desc, n);
        if (p.r + p.s != 1) threshold = n;  // step n is exceptional
    }
    // r+s of the repeated tail entry decides beyond the explicit prefix
    StepParams tail = step_params(desc, desc.depth == 0 ? 1 : desc.depth);
    return {tail.r + tail.s == 1, threshold};
}

long restriction_fiber_count(const DiagonalSystemDescriptor& desc, std::size_t level) {
    auto dims = generate_dims(desc);
    if (level + 1 > desc.depth) throw InputError("restriction_fiber_count: level out of depth");
    LevelData lower = build_level(desc, level, dims[level]);
    LevelData upper = build_level(desc, level + 1, dims[level + 1]);
    if (lower.rank_zero || lower.system.positives.empty()) return kInfiniteFibers;
    AEmbedding e = step_embedding(desc, lower, upper, step_params(desc, level + 1));
    long minimum = -1;
    for (const auto& gamma : lower.system.positives) {
        Vec target = canonical_covector(lower.system, gamma);
        long count = 0;
        for (const auto& [up, mult] : upper.system.roots) {
            (void)mult;
            if (restrict_functional(e, up) == target) ++count;
        }
        if (minimum < 0 || count < minimum) minimum = count;
    }
    return minimum;
}

WeakParabolicResult is_weakly_parabolic(const DiagonalSystemDescriptor& desc) {
    auto dims = generate_dims(desc);
    WeakParabolicResult res;
    std::optional<LevelData> prev;
    for (std::size_t n = 1; n <= desc.depth; ++n) {
        if (!prev) prev = build_level(desc, n - 1, dims[n - 1]);
        StepCertificate cert;
        cert.level = n - 1;
        if (prev->rank_zero || prev->system.positives.empty()) {
            cert.vacuous = true;
            res.steps.push_back(cert);
            prev.reset();  // next iteration rebuilds level n as the new lower
            continue;
        }
        LevelData upper = build_level(desc, n, dims[n]);
        AEmbedding e = step_embedding(desc, *prev, upper, step_params(desc, n));
        cert.rho = rho_restriction_holds(e);
        if (upper.system.rank <= 6) {
            cert.centralizer = centralizer_condition(e);
            cert.component =
                is_parabolic_component(e, satake_of(level_descriptor(desc, prev->dims)),
                                       satake_of(level_descriptor(desc, upper.dims)));
            cert.agree = (*cert.centralizer == cert.rho) && (*cert.component == cert.rho);
        }
        res.steps.push_back(cert);
        if (!cert.rho) {
            res.value = false;
            break;  // lazy: never build the (possibly huge) deeper levels
        }
        prev = std::move(upper);
    }
    return res;
}

CanonicalForm canonicalize(const DiagonalSystemDescriptor& desc) {
    auto wp = is_weakly_parabolic(desc);
    if (!wp.value) throw NotClassifiable("system is not weakly parabolic within depth");
    auto ct = is_classical_type(desc);
    if (!ct.value) throw NotClassifiable("system is not of classical type within depth");

    CanonicalForm form;
    form.family = desc.family;
    form.field = desc.field;
    form.family_case = case_letter(desc.family);
    auto dims = generate_dims(desc);
    form.base_params = dims[ct.threshold];
    if (ct.threshold > 0)
        form.notes.push_back("dropped " + std::to_string(ct.threshold) +
                             " step(s) before the classical suffix");
    if (desc.depth == 0) {
        form.notes.push_back("no steps within depth");
        return form;
    }

    if (has_delta_variant(form.family_case)) {
        bool eventual = step_params(desc, desc.depth).s > 0;
        form.delta_variant = eventual;
        for (std::size_t n = ct.threshold + 1; n <= desc.depth; ++n)
            if ((step_params(desc, n).s > 0) != eventual) {
                form.notes.push_back(
                    "mixed twist pattern within depth; eventual (trailing) pattern selected");
                break;
            }
    }

    long unit = unit_t(form.family_case);
    bool interpolated = false, stationary = false;
    for (std::size_t n = ct.threshold + 1; n <= desc.depth; ++n) {
        StepParams p = step_params(desc, n);
        if (unitary_family(desc.family)) {
            interpolated = interpolated || p.t1 > unit || p.t2 > unit;
            stationary = stationary || (p.t1 == 0 && p.t2 == 0);
        } else {
            interpolated = interpolated || p.t > unit;
            stationary = stationary || p.t == 0;
        }
    }
    if (interpolated)
        form.notes.push_back("interpolated oversized t-steps onto unit steps (t=" +
                             std::to_string(unit) + ")");
    if (stationary) form.notes.push_back("stationary steps within depth");
    return form;
}

DiagonalSystemDescriptor to_descriptor(const CanonicalForm& form, std::size_t depth) {
    DiagonalSystemDescriptor d;
    d.family = form.family;
    d.field = form.field;
    d.initial = form.base_params;
    d.depth = depth;
    d.r = {form.delta_variant ? 0l : 1l};
    d.s = {form.delta_variant ? 1l : 0l};
    if (unitary_family(form.family)) {
        d.t1 = {unit_t(form.family_case)};
        d.t2 = {unit_t(form.family_case)};
    } else {
        d.t = {unit_t(form.family_case)};
    }
    return d;
}

LpReport lp_parameter_check(const DiagonalSystemDescriptor& desc, bool p_infinite, const Rat& p,
                            const Vec& sigma_real_base) {
    auto levels = generate_levels(desc);
    LpReport rep;
    for (const auto& lv : levels) rep.rho_levels.push_back(lv.rho_n);
    if (p_infinite) {
        rep.accepted = is_zero(sigma_real_base);
        rep.reason = rep.accepted ? "L_infinity: sigma is purely imaginary"
                                  : "L_infinity requires vanishing real part";
        return rep;
    }
    if (p < 1) throw InputError("lp_parameter_check: p must be in [1, infinity]");
    const auto& base = levels.front();
    if (sigma_real_base.size() != base.system.ambient_dim)
        throw InputError("lp_parameter_check: sigma dimension mismatch at level 0");
    Vec target = scale(Rat(2) / p, base.rho_n.empty() ? Vec(base.system.ambient_dim, Rat(0))
                                                      : base.rho_n);
    bool matches = canonical_covector(base.system, sigma_real_base) ==
                   canonical_covector(base.system, target);
    if (!matches) {
        rep.reason = "sigma real part differs from (2/p) rho at level 0";
        return rep;
    }
    auto wp = is_weakly_parabolic(desc);
    if (!wp.value) {
        rep.reason = "rho-restriction fails at some step within depth";
        return rep;
    }
    rep.accepted = true;
    rep.reason = "sigma = (2/p) rho and rho-restriction holds at every step";
    return rep;
}

SystemVerdict system_verdict(const DiagonalSystemDescriptor& desc) {
    SystemVerdict v;
    v.alignment = iwasawa_aligned(desc);
    v.classical = is_classical_type(desc);
    v.weakly_parabolic = is_weakly_parabolic(desc);
    if (v.weakly_parabolic.value && v.classical.value) {
        try {
            v.canonical = canonicalize(desc);
        } catch (const NotClassifiable& ex) {
            v.notes.push_back(ex.what());
        }
    } else {
        v.notes.push_back("not classifiable: weakly parabolic and classical type required");
    }
    return v;
}

}  // namespace limroot
