#include <limroot/errors.hpp>
#include <limroot/root_system.hpp>

#include <algorithm>

namespace limroot {

namespace {

Vec e(std::size_t dim, std::size_t i) {  // 0-based index
    Vec v(dim, Rat(0));
    v[i] = 1;
    return v;
}

long field_dim(Field f) { return f == Field::R ? 1 : f == Field::C ? 2 : 4; }

}  // namespace

WeightedRootSystem linear_system(std::size_t n, long m) {
    require(n >= 2, "linear_system: need n >= 2");
    std::map<Vec, long> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pos[sub(e(n, i), e(n, j))] = m;
    std::vector<Vec> simples;
    for (std::size_t i = 0; i + 1 < n; ++i) simples.push_back(sub(e(n, i), e(n, i + 1)));
    return make_system(n, n - 1, SystemKind::A, "A_" + std::to_string(n - 1), pos,
                       std::move(simples));
}

WeightedRootSystem classical_system(SystemKind kind, std::size_t r, long a, long b, long c) {
    std::map<Vec, long> pos;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            pos[sub(e(r, i), e(r, j))] = a;
            pos[add(e(r, i), e(r, j))] = a;
        }
        if (kind == SystemKind::B || kind == SystemKind::BC) pos[e(r, i)] = b;
        if (kind == SystemKind::C || kind == SystemKind::BC) pos[scale(Rat(2), e(r, i))] = c;
    }
    std::vector<Vec> simples;
    for (std::size_t i = 0; i + 1 < r; ++i) simples.push_back(sub(e(r, i), e(r, i + 1)));
    switch (kind) {
        case SystemKind::B:
        case SystemKind::BC:
            simples.push_back(e(r, r - 1));
            break;
        case SystemKind::C:
            simples.push_back(scale(Rat(2), e(r, r - 1)));
            break;
        case SystemKind::D:
            if (r >= 2) simples.push_back(add(e(r, r - 2), e(r, r - 1)));
            break;
        default:
            require(false, "classical_system: bad kind");
    }
    return make_system(r, r, kind, kind_name(kind) + "_" + std::to_string(r), pos,
                       std::move(simples));
}


WeightedRootSystem build_restricted_system(const RealFormDescriptor& d) {
    check_descriptor(d);
    long m = std::min(d.p, d.q);
    long mu = std::max(d.p, d.q) - m;
    switch (d.family) {
        case Family::SL:
        case Family::GL:
            if (d.n < 2) throw RankZero(d.to_string() + ": no restricted roots");
            return linear_system(static_cast<std::size_t>(d.n), field_dim(d.field));
        case Family::SU:
        case Family::U:
            if (m == 0) throw RankZero(d.to_string() + ": compact form");
            if (mu > 0) return classical_system(SystemKind::BC, m, 2, 2 * mu, 1);
            return classical_system(SystemKind::C, m, 2, 0, 1);
        case Family::SO_pq:
        case Family::O_pq:
            if (m == 0) throw RankZero(d.to_string() + ": compact form");
            if (mu > 0) return classical_system(SystemKind::B, m, 1, mu, 0);
            return classical_system(SystemKind::D, m, 1, 0, 0);
        case Family::Sp_pq:
            if (m == 0) throw RankZero(d.to_string() + ": compact form");
            if (mu > 0) return classical_system(SystemKind::BC, m, 4, 4 * mu, 3);
            return classical_system(SystemKind::C, m, 4, 0, 3);
        case Family::SpF:
            return classical_system(SystemKind::C, d.n, field_dim(d.field), 0, field_dim(d.field));
        case Family::SOC:
        case Family::OC: {
            if (d.n < 2) throw RankZero(d.to_string() + ": no split part");
            std::size_t r = static_cast<std::size_t>(d.n / 2);
            if (d.n % 2 == 1) return classical_system(SystemKind::B, r, 2, 2, 0);
            return classical_system(SystemKind::D, r, 2, 0, 0);
        }
        case Family::SOstar: {
            if (d.n < 2) throw RankZero(d.to_string() + ": compact form");
            std::size_t r = static_cast<std::size_t>(d.n / 2);
            if (d.n % 2 == 1) return classical_system(SystemKind::BC, r, 4, 4, 1);
            return classical_system(SystemKind::C, r, 4, 0, 1);
        }
    }
    throw UnsupportedFamily(d.to_string());
}

}  // namespace limroot
