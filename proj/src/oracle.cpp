#include <limroot/errors.hpp>
#include <limroot/oracle.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace limroot {

namespace {

QMat qzero(long n) { return QMat(n, std::vector<Quat>(n)); }

std::size_t var_index(long n, long fdim, long a, long b, long c) {
    return static_cast<std::size_t>((a * n + b) * fdim + c);
}

Vec flatten(const MatrixAlgebraModel& m, const QMat& X) {
    Vec v(static_cast<std::size_t>(m.n * m.n * m.fdim), Rat(0));
    for (long a = 0; a < m.n; ++a)
        for (long b = 0; b < m.n; ++b)
            for (long c = 0; c < m.fdim; ++c)
                v[var_index(m.n, m.fdim, a, b, c)] = X[a][b].component(static_cast<int>(c));
    return v;
}

QMat unflatten(const MatrixAlgebraModel& m, const Vec& v) {
    QMat X = qzero(m.n);
    for (long a = 0; a < m.n; ++a)
        for (long b = 0; b < m.n; ++b) {
            Quat q;
            q.w = v[var_index(m.n, m.fdim, a, b, 0)];
            if (m.fdim > 1) q.x = v[var_index(m.n, m.fdim, a, b, 1)];
            if (m.fdim > 3) {
                q.y = v[var_index(m.n, m.fdim, a, b, 2)];
                q.z = v[var_index(m.n, m.fdim, a, b, 3)];
            }
            X[a][b] = q;
        }
    return X;
}

// Defining equations of the algebra as R-linear rows over flattened entries.
Mat build_constraints(const MatrixAlgebraModel& m) {
    long n = m.n, fdim = m.fdim;
    std::size_t nvars = static_cast<std::size_t>(n * n * fdim);
    // rows keyed by (output entry, output component); assembled densely.
    std::map<std::pair<long, long>, Vec> rows;  // key: (i*n+j, comp)
    auto row = [&](long i, long j, long comp) -> Vec& {
        auto key = std::make_pair(i * n + j, comp);
        auto it = rows.find(key);
        if (it == rows.end()) it = rows.emplace(key, Vec(nvars, Rat(0))).first;
        return it->second;
    };
    auto accumulate = [&](long i, long j, const Quat& coeff_times_unit, std::size_t var) {
        // contribution coeff_times_unit (a quaternion) to output entry (i,j)
        for (long comp = 0; comp < fdim; ++comp) {
            Rat c = coeff_times_unit.component(static_cast<int>(comp));
            if (c != 0) row(i, j, comp)[var] += c;
        }
    };
    if (m.form != MatrixAlgebraModel::FormKind::None) {
        bool herm = m.form == MatrixAlgebraModel::FormKind::Hermitian;
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                for (long c = 0; c < fdim; ++c) {
                    std::size_t v = var_index(n, fdim, a, b, c);
                    Quat u = Quat::unit(static_cast<int>(c));
                    Quat ut = herm ? u.conj() : u;  // entry (b,a) of X* resp. X^t
                    for (long j = 0; j < n; ++j) {
                        // (X* S)_{b,j} or (X^t S)_{b,j}
                        if (!m.gram[a][j].is_zero()) accumulate(b, j, ut * m.gram[a][j], v);
                        // (S X)_{j,b}
                        if (!m.gram[j][a].is_zero()) accumulate(j, b, m.gram[j][a] * u, v);
                    }
                }
    }
    Mat out;
    for (auto& [key, r] : rows) out.push_back(std::move(r));
    for (long comp = 0; comp < m.trace_components; ++comp) {
        Vec r(nvars, Rat(0));
        for (long a = 0; a < n; ++a) r[var_index(n, fdim, a, a, comp)] = 1;
        out.push_back(std::move(r));
    }
    return out;
}

struct CoreSpec {
    long n;            // matrix size over F
    Field field;
    long fdim;
    std::size_t ambient;
    std::size_t rank;
    std::vector<Vec> slot_weight;
    MatrixAlgebraModel::FormKind form = MatrixAlgebraModel::FormKind::None;
    QMat gram;
    long trace_components = 0;
};

Vec basis_vec(std::size_t dim, std::size_t k) {
    Vec v(dim, Rat(0));
    v[k] = 1;
    return v;
}

// Slot layout for split (p,q)-type forms: m slots +e_1..+e_m, mu neutral
// slots, m slots -e_m..-e_1; pairing Gram couples +e_k with -e_k.
void split_layout(CoreSpec& cs, long mcount, long mu, const Quat& middle, bool antisym) {
    long n = cs.n;
    cs.ambient = cs.rank = static_cast<std::size_t>(mcount);
    cs.slot_weight.assign(n, Vec(cs.ambient, Rat(0)));
    for (long k = 0; k < mcount; ++k) {
        cs.slot_weight[k] = basis_vec(cs.ambient, static_cast<std::size_t>(k));
        cs.slot_weight[mcount + mu + (mcount - 1 - k)] =
            neg(basis_vec(cs.ambient, static_cast<std::size_t>(k)));
    }
    cs.gram = qzero(n);
    for (long k = 0; k < mcount; ++k) {
        long partner = mcount + mu + (mcount - 1 - k);
        cs.gram[k][partner] = Quat(Rat(1));
        cs.gram[partner][k] = antisym ? Quat(Rat(-1)) : Quat(Rat(1));
    }
    for (long t = 0; t < mu; ++t) cs.gram[mcount + t][mcount + t] = middle;
}

CoreSpec core_spec(const RealFormDescriptor& in) {
    // Central directions carry no root data: model the trace-zero core.
    RealFormDescriptor d = in;
    if (d.family == Family::GL) d.family = Family::SL;
    if (d.family == Family::U) d.family = Family::SU;
    if (d.family == Family::O_pq) d.family = Family::SO_pq;
    if (d.family == Family::OC) d.family = Family::SOC;
    CoreSpec cs;
    long m = std::min(d.p, d.q);
    long mu = std::max(d.p, d.q) - m;
    switch (d.family) {
        case Family::SL: {
            if (d.n < 2) throw RankZero(in.to_string() + ": no restricted roots");
            cs.n = d.n;
            cs.field = d.field;
            cs.fdim = d.field == Field::R ? 1 : d.field == Field::C ? 2 : 4;
            cs.ambient = static_cast<std::size_t>(d.n);
            cs.rank = cs.ambient - 1;
            for (long a = 0; a < d.n; ++a)
                cs.slot_weight.push_back(basis_vec(cs.ambient, static_cast<std::size_t>(a)));
            cs.trace_components = d.field == Field::C ? 2 : 1;  // H: Re tr = 0
            return cs;
        }
        case Family::SU:
            if (m == 0) throw RankZero(in.to_string() + ": compact form");
            cs.n = d.p + d.q;
            cs.field = Field::C;
            cs.fdim = 2;
            cs.form = MatrixAlgebraModel::FormKind::Hermitian;
            split_layout(cs, m, mu, Quat(Rat(d.p > d.q ? 1 : -1)), false);
            cs.trace_components = 2;
            return cs;
        case Family::SO_pq:
            if (m == 0) throw RankZero(in.to_string() + ": compact form");
            cs.n = d.p + d.q;
            cs.field = Field::R;
            cs.fdim = 1;
            cs.form = MatrixAlgebraModel::FormKind::Bilinear;
            split_layout(cs, m, mu, Quat(Rat(d.p > d.q ? 1 : -1)), false);
            return cs;
        case Family::Sp_pq:
            if (m == 0) throw RankZero(in.to_string() + ": compact form");
            cs.n = d.p + d.q;
            cs.field = Field::H;
            cs.fdim = 4;
            cs.form = MatrixAlgebraModel::FormKind::Hermitian;
            split_layout(cs, m, mu, Quat(Rat(d.p > d.q ? 1 : -1)), false);
            return cs;
        case Family::SpF:
            cs.n = 2 * d.n;
            cs.field = d.field;
            cs.fdim = d.field == Field::R ? 1 : 2;
            cs.form = MatrixAlgebraModel::FormKind::Bilinear;
            split_layout(cs, d.n, 0, Quat(), true);
            return cs;
        case Family::SOC: {
            if (d.n < 2) throw RankZero(in.to_string() + ": no split part");
            cs.n = d.n;
            cs.field = Field::C;
            cs.fdim = 2;
            cs.form = MatrixAlgebraModel::FormKind::Bilinear;
            split_layout(cs, d.n / 2, d.n % 2, Quat(Rat(1)), false);
            return cs;
        }
        case Family::SOstar: {
            if (d.n < 2) throw RankZero(in.to_string() + ": compact form");
            cs.n = d.n;
            cs.field = Field::H;
            cs.fdim = 4;
            cs.form = MatrixAlgebraModel::FormKind::Hermitian;
            // skew-hermitian pairing: +e_k / -e_k hyperbolic, odd slot gets i
            split_layout(cs, d.n / 2, d.n % 2, Quat(Rat(0), Rat(1)), true);
            return cs;
        }
        default:
            throw UnsupportedFamily(in.to_string());
    }
}

}  // namespace

long default_oracle_bound() {
    if (const char* env = std::getenv("LIMROOT_ORACLE_BOUND")) {
        long b = std::atol(env);
        if (b > 0) return b;
    }
    return 8;
}

QMat bracket(const QMat& X, const QMat& Y) {
    std::size_t n = X.size();
    QMat Z = qzero(static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Quat s;
            for (std::size_t k = 0; k < n; ++k) s = s + X[i][k] * Y[k][j] - Y[i][k] * X[k][j];
            Z[i][j] = s;
        }
    return Z;
}

MatrixAlgebraModel realize(const RealFormDescriptor& desc, long bound) {
    check_descriptor(desc);
    CoreSpec cs = core_spec(desc);
    if (cs.n > bound)
        throw SizeBound(desc.to_string() + ": matrix size " + std::to_string(cs.n) +
                        " exceeds bound " + std::to_string(bound));
    MatrixAlgebraModel m;
    m.desc = desc;
    m.n = cs.n;
    m.field = cs.field;
    m.fdim = cs.fdim;
    m.ambient_dim = cs.ambient;
    m.rank = cs.rank;
    m.slot_weight = cs.slot_weight;
    m.form = cs.form;
    m.gram = cs.gram;
    m.trace_components = cs.trace_components;
    m.constraints = build_constraints(m);

    for (const auto& x : nullspace(m.constraints)) m.basis.push_back(unflatten(m, x));
    m.real_dim = static_cast<long>(m.basis.size());

    // a: real diagonal matrices matching the slot-weight pattern.
    bool a_type = desc.family == Family::SL || desc.family == Family::GL;
    for (std::size_t k = 0; k < m.rank; ++k) {
        QMat xi = qzero(m.n);
        if (a_type) {
            xi[k][k] = Quat(Rat(1));
            xi[k + 1][k + 1] = Quat(Rat(-1));
        } else {
            for (long s = 0; s < m.n; ++s) xi[s][s] = Quat(m.slot_weight[s][k]);
        }
        Vec flat = flatten(m, xi);
        require(is_zero(mat_vec(m.constraints, flat)),
                "realize: a_basis element violates the defining equations");
        m.a_basis.push_back(std::move(xi));
    }
    for (std::size_t i = 0; i < m.a_basis.size(); ++i)
        for (std::size_t j = i + 1; j < m.a_basis.size(); ++j) {
            QMat br = bracket(m.a_basis[i], m.a_basis[j]);
            require(is_zero(flatten(m, br)), "realize: a_basis not abelian");
        }
    return m;
}

bool bracket_in_span(const MatrixAlgebraModel& model, const QMat& X, const QMat& Y) {
    Vec target = flatten(model, bracket(X, Y));
    Mat rows;  // span membership by rank comparison
    for (const auto& b : model.basis) rows.push_back(flatten(model, b));
    std::size_t r0 = rank(rows);
    rows.push_back(target);
    return rank(rows) == r0;
}

namespace {

struct Buckets {
    // functional -> flattened variable indices
    std::map<Vec, std::vector<std::size_t>> vars;
};

Buckets make_buckets(const MatrixAlgebraModel& m) {
    Buckets bk;
    for (long a = 0; a < m.n; ++a)
        for (long b = 0; b < m.n; ++b) {
            Vec f = sub(m.slot_weight[a], m.slot_weight[b]);
            for (long c = 0; c < m.fdim; ++c)
                bk.vars[f].push_back(var_index(m.n, m.fdim, a, b, c));
        }
    return bk;
}

// Local system of all constraint rows touching the bucket; rows must not
// couple distinct buckets (ad(a) acts diagonally on entries).
long bucket_nullity(const MatrixAlgebraModel& m, const std::vector<std::size_t>& vars,
                    const Mat& extra_rows) {
    std::set<std::size_t> in_bucket(vars.begin(), vars.end());
    Mat local;
    auto add_row = [&](const Vec& row) {
        Vec lr;
        bool touches = false;
        for (auto v : vars) {
            lr.push_back(row[v]);
            if (row[v] != 0) touches = true;
        }
        if (!touches) return;
        for (std::size_t v = 0; v < row.size(); ++v)
            require(row[v] == 0 || in_bucket.count(v),
                    "restricted_roots: constraint row couples distinct ad-eigenspaces");
        local.push_back(std::move(lr));
    };
    for (const auto& row : m.constraints) add_row(row);
    for (const auto& row : extra_rows) add_row(row);
    if (local.empty()) return static_cast<long>(vars.size());
    return static_cast<long>(vars.size()) - static_cast<long>(rank(local));
}

}  // namespace

WeightedRootSystem restricted_roots(const MatrixAlgebraModel& m) {
    Buckets bk = make_buckets(m);
    std::map<Vec, long> mults;  // all nonzero functionals with positive nullity
    for (const auto& [f, vars] : bk.vars) {
        if (is_zero(f)) continue;
        long nullity = bucket_nullity(m, vars, {});
        if (nullity > 0) mults[f] = nullity;
    }
    std::map<Vec, long> positive_mults;
    for (const auto& [f, mult] : mults) {
        auto it = mults.find(neg(f));
        require(it != mults.end() && it->second == mult,
                "restricted_roots: multiplicities not negation-symmetric");
        bool positive = false;
        for (const auto& c : f) {
            if (c > 0) { positive = true; break; }
            if (c < 0) break;
        }
        if (positive) positive_mults[f] = mult;
    }
    // simples: positives not expressible as a sum of two positives
    std::vector<Vec> simples;
    for (const auto& [p, mult] : positive_mults) {
        (void)mult;
        bool decomposable = false;
        for (const auto& [q, mq] : positive_mults) {
            (void)mq;
            if (positive_mults.count(sub(p, q)) && !is_zero(sub(p, q))) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(p);
    }
    return make_system(m.ambient_dim, m.rank, SystemKind::Other, "oracle", positive_mults,
                       std::move(simples));
}

long centralizer_dimension(const MatrixAlgebraModel& m) {
    Buckets bk = make_buckets(m);
    auto it = bk.vars.find(Vec(m.ambient_dim, Rat(0)));
    if (it == bk.vars.end()) return 0;
    return bucket_nullity(m, it->second, {});
}

namespace {

// rows over all variables forcing X* = sign * X on the centralizer entries
Mat star_rows(const MatrixAlgebraModel& m, int sign) {
    Mat rows;
    std::size_t nvars = static_cast<std::size_t>(m.n * m.n * m.fdim);
    for (long a = 0; a < m.n; ++a)
        for (long b = 0; b < m.n; ++b) {
            if (!(m.slot_weight[a] == m.slot_weight[b])) continue;
            if (a > b) continue;  // one row set per unordered pair
            for (long c = 0; c < m.fdim; ++c) {
                // (X*)_{ab} = conj(X_{ba}): component c picks up a sign flip
                // for c >= 1. Condition: conj(X_{ba}) - sign*X_{ab} = 0.
                Rat conj_sign = (c == 0) ? 1 : -1;
                Vec r(nvars, Rat(0));
                r[var_index(m.n, m.fdim, b, a, c)] += conj_sign;
                r[var_index(m.n, m.fdim, a, b, c)] -= Rat(sign);
                if (!is_zero(r)) rows.push_back(std::move(r));
            }
        }
    return rows;
}

long centralizer_part(const MatrixAlgebraModel& m, int sign) {
    Buckets bk = make_buckets(m);
    auto it = bk.vars.find(Vec(m.ambient_dim, Rat(0)));
    if (it == bk.vars.end()) return 0;
    return bucket_nullity(m, it->second, star_rows(m, sign));
}

}  // namespace

long m_dimension(const MatrixAlgebraModel& m) { return centralizer_part(m, -1); }

long split_part_dimension(const MatrixAlgebraModel& m) { return centralizer_part(m, +1); }

}  // namespace limroot
