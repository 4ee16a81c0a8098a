#include <limroot/errors.hpp>
#include <limroot/root_system.hpp>

#include <algorithm>

namespace limroot {

std::string kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::A: return "A";
        case SystemKind::B: return "B";
        case SystemKind::C: return "C";
        case SystemKind::D: return "D";
        case SystemKind::BC: return "BC";
        case SystemKind::Other: return "Other";
    }
    return "?";
}

WeightedRootSystem make_system(std::size_t ambient_dim, std::size_t rank, SystemKind kind,
                               std::string type_label, const std::map<Vec, long>& positive_mults,
                               std::vector<Vec> simples) {
    WeightedRootSystem sys;
    sys.ambient_dim = ambient_dim;
    sys.rank = rank;
    sys.kind = kind;
    sys.type_label = std::move(type_label);
    sys.simples = std::move(simples);
    for (const auto& [root, mult] : positive_mults) {
        require(!is_zero(root), "make_system: zero root");
        require(mult > 0, "make_system: nonpositive multiplicity");
        sys.roots[root] = mult;
        sys.roots[neg(root)] = mult;
        sys.positives.push_back(root);
    }
    std::sort(sys.positives.begin(), sys.positives.end());
    return sys;
}

static bool lex_positive(const Vec& v) {
    for (const auto& x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

void validate(const WeightedRootSystem& sys) {
    for (const auto& [root, mult] : sys.roots) {
        require(root.size() == sys.ambient_dim, "validate: root dimension mismatch");
        require(mult > 0, "validate: nonpositive multiplicity");
        auto it = sys.roots.find(neg(root));
        require(it != sys.roots.end() && it->second == mult,
                "validate: roots not closed under negation with equal multiplicity");
    }
    require(sys.positives.size() * 2 == sys.roots.size(),
            "validate: positives do not halve the root set");
    for (const auto& p : sys.positives) {
        require(sys.roots.count(p) == 1, "validate: positive not a root");
        require(lex_positive(p), "validate: positive root not lexicographically positive");
    }
    // Every positive root must be a nonnegative integer combination of simples.
    for (const auto& p : sys.positives) {
        Vec residual = p;
        bool progress = true;
        std::size_t guard = 0;
        while (!is_zero(residual) && progress && guard++ < 1000) {
            progress = false;
            for (const auto& s : sys.simples) {
                // greedy peel: subtract s while the result stays a root or zero
                Vec cand = sub(residual, s);
                if (is_zero(cand) || sys.roots.count(cand)) {
                    residual = cand;
                    progress = true;
                    break;
                }
            }
        }
        require(is_zero(residual), "validate: positive root not generated by simples");
    }
    if (sys.kind != SystemKind::BC && sys.kind != SystemKind::Other) {
        for (const auto& [root, mult] : sys.roots) {
            (void)mult;
            require(!sys.roots.count(scale(Rat(2), root)), "validate: non-BC system not reduced");
        }
    }
}

Vec rho(const WeightedRootSystem& sys) {
    Vec r(sys.ambient_dim, Rat(0));
    for (const auto& p : sys.positives) r = add(r, scale(Rat(sys.roots.at(p)), p));
    return scale(Rat(1, 2), r);
}

std::vector<RhoProdRow> rho_prod_check(const WeightedRootSystem& sys) {
    Vec r = rho(sys);
    std::vector<RhoProdRow> rows;
    for (const auto& psi : sys.simples) {
        RhoProdRow row;
        row.simple = psi;
        row.lhs = Rat(2) * dot(r, psi) / dot(psi, psi);
        row.rhs = Rat(sys.mult(psi)) + Rat(2) * Rat(sys.mult(scale(Rat(2), psi)));
        row.equal = row.lhs == row.rhs;
        rows.push_back(std::move(row));
    }
    return rows;
}

Vec reflect(const Vec& v, const Vec& root) {
    if (is_zero(root)) throw ZeroRoot("reflect: zero root");
    return sub(v, scale(Rat(2) * dot(v, root) / dot(root, root), root));
}

std::size_t inversion_count(const Vec& v, const WeightedRootSystem& sys) {
    // Counts indivisible positives only: in BC systems e_i and 2e_i flip
    // under the same reflection, so l(w) counts the pair once.
    std::size_t n = 0;
    for (const auto& p : sys.positives) {
        if (sys.roots.count(scale(Rat(1, 2), p))) continue;
        if (dot(v, p) < 0) ++n;
    }
    return n;
}

DominantResult make_dominant(const Vec& v, const WeightedRootSystem& sys) {
    DominantResult res;
    res.dominant = v;
    for (const auto& p : sys.positives) {
        if (dot(v, p) == 0) {
            res.singular_root = p;
            break;
        }
    }
    // Repeatedly reflect by the lowest-index simple pairing negatively.
    bool moved = true;
    std::size_t guard = 0;
    while (moved && guard++ < 100000) {
        moved = false;
        for (std::size_t i = 0; i < sys.simples.size(); ++i) {
            if (dot(res.dominant, sys.simples[i]) < 0) {
                res.dominant = reflect(res.dominant, sys.simples[i]);
                res.word.push_back(i);
                moved = true;
                break;
            }
        }
    }
    require(guard < 100000, "make_dominant: failed to terminate");
    res.length = res.word.size();
    return res;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::SL: return "SL";
        case Family::GL: return "GL";
        case Family::SU: return "SU";
        case Family::U: return "U";
        case Family::SO_pq: return "SO";
        case Family::O_pq: return "O";
        case Family::Sp_pq: return "Sp";
        case Family::SpF: return "SpF";
        case Family::SOC: return "SOC";
        case Family::OC: return "OC";
        case Family::SOstar: return "SOstar";
    }
    return "?";
}

std::string field_name(Field f) {
    switch (f) {
        case Field::R: return "R";
        case Field::C: return "C";
        case Field::H: return "H";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "SL") return Family::SL;
    if (s == "GL") return Family::GL;
    if (s == "SU") return Family::SU;
    if (s == "U") return Family::U;
    if (s == "SO" || s == "SO_pq") return Family::SO_pq;
    if (s == "O" || s == "O_pq") return Family::O_pq;
    if (s == "Sp" || s == "Sp_pq") return Family::Sp_pq;
    if (s == "SpF") return Family::SpF;
    if (s == "SOC") return Family::SOC;
    if (s == "OC") return Family::OC;
    if (s == "SOstar" || s == "SO*") return Family::SOstar;
    throw UnsupportedFamily("unknown family: '" + s + "'");
}

Field field_from_string(const std::string& s) {
    if (s == "R") return Field::R;
    if (s == "C") return Field::C;
    if (s == "H") return Field::H;
    throw UnsupportedFamily("unknown field: '" + s + "'");
}

std::string RealFormDescriptor::to_string() const {
    std::string s = family_name(family);
    switch (family) {
        case Family::SL:
        case Family::GL:
        case Family::SpF:
            s += "(" + std::to_string(n) + ";" + field_name(field) + ")";
            break;
        case Family::SOC:
        case Family::OC:
            s += "(" + std::to_string(n) + ";C)";
            break;
        case Family::SOstar:
            s += "(" + std::to_string(2 * n) + ")";
            break;
        default:
            s += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return s;
}

void check_descriptor(const RealFormDescriptor& d) {
    auto bad = [&](const std::string& why) {
        throw UnsupportedFamily(d.to_string() + ": " + why);
    };
    switch (d.family) {
        case Family::SL:
        case Family::GL:
            if (d.family == Family::GL && d.field == Field::H)
                bad("GL supported over R and C only");
            if (d.n < 1) bad("n must be positive");
            break;
        case Family::SU:
        case Family::U:
            if (d.field != Field::C) bad("unitary family is over C");
            if (d.p < 0 || d.q < 0 || d.p + d.q < 1) bad("bad signature");
            break;
        case Family::SO_pq:
        case Family::O_pq:
            if (d.field != Field::R) bad("orthogonal (p,q) family is over R");
            if (d.p < 0 || d.q < 0 || d.p + d.q < 1) bad("bad signature");
            if (d.family == Family::O_pq && (d.p + d.q) % 2 == 0)
                bad("O family requires odd total dimension");
            break;
        case Family::Sp_pq:
            if (d.field != Field::H) bad("Sp(p,q) is over H");
            if (d.p < 0 || d.q < 0 || d.p + d.q < 1) bad("bad signature");
            break;
        case Family::SpF:
            if (d.field == Field::H) bad("Sp(n;F) supported for F = R or C");
            if (d.n < 1) bad("n must be positive");
            break;
        case Family::SOC:
        case Family::OC:
            if (d.field != Field::C) bad("complex orthogonal family is over C");
            if (d.n < 1) bad("n must be positive");
            if (d.family == Family::OC && d.n % 2 == 0)
                bad("OC family requires odd dimension");
            break;
        case Family::SOstar:
            if (d.field != Field::H) bad("SO*(2n) is quaternionic");
            if (d.n < 1) bad("n must be positive");
            break;
    }
}

}  // namespace limroot
