#include <limroot/errors.hpp>
#include <limroot/parabolic.hpp>

#include <algorithm>

namespace limroot {

ParabolicSplit split(const ParabolicDescriptor& p) {
    for (auto i : p.phi)
        if (i >= p.system.simples.size())
            throw InputError("split: phi index out of range");
    ParabolicSplit out;
    out.levi_rank = p.phi.size();
    std::vector<Vec> phi_roots;
    for (auto i : p.phi) {
        phi_roots.push_back(p.system.simples[i]);
        out.a_phi_equations.push_back(p.system.simples[i]);
    }
    // m_Phi: roots lying in the rational (= integer, for root subsystems
    // with base Phi) span of Phi.
    Mat span_rows = phi_roots;
    std::size_t base_rank = span_rows.empty() ? 0 : rank(span_rows);
    for (const auto& [root, mult] : p.system.roots) {
        Mat probe = span_rows;
        probe.push_back(root);
        bool in_span = !span_rows.empty() && rank(probe) == base_rank;
        if (in_span)
            out.m_phi_roots[root] = mult;
    }
    for (const auto& pos : p.system.positives) {
        Vec negv = neg(pos);
        if (!out.m_phi_roots.count(negv)) out.n_phi_roots[negv] = p.system.roots.at(negv);
    }
    return out;
}

Vec canonical_covector(const WeightedRootSystem& sys, Vec covec) {
    if (!sys.has_central_direction() || covec.empty()) return covec;
    Rat mean = 0;
    for (const auto& c : covec) mean += c;
    mean /= Rat(static_cast<long>(covec.size()));
    for (auto& c : covec) c -= mean;
    return covec;
}

namespace {

// Basis of the a-subspace of the ambient coordinate space.
std::vector<Vec> a_space_basis(const WeightedRootSystem& sys) {
    std::vector<Vec> basis;
    if (sys.has_central_direction()) {
        for (std::size_t i = 0; i + 1 < sys.ambient_dim; ++i) {
            Vec v(sys.ambient_dim, Rat(0));
            v[i] = 1;
            v[i + 1] = -1;
            basis.push_back(std::move(v));
        }
    } else {
        for (std::size_t i = 0; i < sys.ambient_dim; ++i) {
            Vec v(sys.ambient_dim, Rat(0));
            v[i] = 1;
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

Vec apply_inclusion(const Mat& iota, const Vec& x) {
    Vec y(iota.size(), Rat(0));
    for (std::size_t i = 0; i < iota.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += iota[i][j] * x[j];
    return y;
}

}  // namespace

Vec restrict_functional(const AEmbedding& e, const Vec& upper_covec) {
    Vec r(e.lower.ambient_dim, Rat(0));
    for (std::size_t j = 0; j < e.lower.ambient_dim; ++j)
        for (std::size_t i = 0; i < e.upper.ambient_dim; ++i)
            r[j] += e.inclusion[i][j] * upper_covec[i];
    return canonical_covector(e.lower, std::move(r));
}

AEmbedding make_embedding(WeightedRootSystem lower, WeightedRootSystem upper, Mat inclusion) {
    AEmbedding e;
    e.lower = std::move(lower);
    e.upper = std::move(upper);
    e.inclusion = std::move(inclusion);
    if (e.inclusion.size() != e.upper.ambient_dim)
        throw InputError("make_embedding: inclusion row count != upper ambient dim");
    for (const auto& row : e.inclusion)
        if (row.size() != e.lower.ambient_dim)
            throw InputError("make_embedding: inclusion column count != lower ambient dim");

    std::vector<Vec> image;
    for (const auto& b : a_space_basis(e.lower)) image.push_back(apply_inclusion(e.inclusion, b));
    Mat image_rows = image;
    if (!image.empty() && rank(image_rows) != image.size())
        throw InputError("make_embedding: inclusion not injective on a_i");

    e.complement = orthogonal_complement(a_space_basis(e.upper), image);
    e.complement_dim = e.complement.size();

    // every lower root must be the restriction of at least one upper root
    for (const auto& pos : e.lower.positives) {
        Vec target = canonical_covector(e.lower, pos);
        bool covered = false;
        for (const auto& [gamma, mult] : e.upper.roots) {
            (void)mult;
            if (restrict_functional(e, gamma) == target) {
                covered = true;
                break;
            }
        }
        if (!covered) throw InputError("make_embedding: lower root not covered by restriction");
    }
    return e;
}

AEmbedding embedding_from_phi(const WeightedRootSystem& sys, const std::set<std::size_t>& phi) {
    ParabolicSplit sp = split({sys, phi});
    std::size_t L = phi.size();
    std::vector<Vec> psis;
    for (auto i : phi) psis.push_back(sys.simples[i]);

    // iota columns are the Phi simples; lower coordinates are the pairings
    // with them, so the lower a-space is all of Q^L.
    Mat iota(sys.ambient_dim, Vec(L, Rat(0)));
    for (std::size_t j = 0; j < L; ++j)
        for (std::size_t i = 0; i < sys.ambient_dim; ++i) iota[i][j] = psis[j][i];

    std::map<Vec, long> lower_pos;
    for (const auto& [gamma, mult] : sp.m_phi_roots) {
        bool positive = std::binary_search(sys.positives.begin(), sys.positives.end(), gamma);
        if (!positive) continue;
        Vec r(L, Rat(0));
        for (std::size_t j = 0; j < L; ++j) r[j] = dot(gamma, psis[j]);
        lower_pos[r] = mult;
    }
    std::vector<Vec> lower_simples;
    for (std::size_t j = 0; j < L; ++j) {
        Vec r(L, Rat(0));
        for (std::size_t k = 0; k < L; ++k) r[k] = dot(psis[j], psis[k]);
        lower_simples.push_back(std::move(r));
    }
    WeightedRootSystem lower =
        make_system(L, L, SystemKind::Other, "m_phi", lower_pos, std::move(lower_simples));
    return make_embedding(std::move(lower), sys, std::move(iota));
}

bool rho_restriction_holds(const AEmbedding& e) {
    return restrict_functional(e, rho(e.upper)) == canonical_covector(e.lower, rho(e.lower));
}

std::vector<RhoWitness> rho_restriction_witnesses(const AEmbedding& e) {
    Vec rho_up = rho(e.upper);
    Vec rho_low = rho(e.lower);
    std::vector<RhoWitness> out;
    for (const auto& psi : e.lower.simples) {
        RhoWitness w;
        w.lower_coroot = scale(Rat(2) / dot(psi, psi), psi);
        w.upper_coroot = apply_inclusion(e.inclusion, w.lower_coroot);
        w.upper_value = dot(rho_up, w.upper_coroot);
        w.lower_value = dot(rho_low, w.lower_coroot);
        w.equal = w.upper_value == w.lower_value;
        out.push_back(std::move(w));
    }
    return out;
}

bool centralizer_condition(const AEmbedding& e) {
    std::map<Vec, long> vanishing_sums;
    for (const auto& [gamma, mult] : e.upper.roots) {
        bool vanishes = true;
        for (const auto& c : e.complement)
            if (dot(gamma, c) != 0) {
                vanishes = false;
                break;
            }
        if (!vanishes) continue;
        Vec r = restrict_functional(e, gamma);
        require(!is_zero(r), "centralizer_condition: upper root vanishing on all of a_k");
        vanishing_sums[r] += mult;
    }
    std::map<Vec, long> lower_canon;
    for (const auto& [beta, mult] : e.lower.roots)
        lower_canon[canonical_covector(e.lower, beta)] += mult;
    return vanishing_sums == lower_canon;
}

namespace {

// Sorted (squared length, multiplicity) pairs over a positive half of a root
// multiset; the invariant compared between m_Phi and the embedded lower.
std::vector<std::pair<Rat, long>> length_mult_profile(const std::vector<std::pair<Vec, long>>& v) {
    std::vector<std::pair<Rat, long>> out;
    for (const auto& [root, mult] : v) out.push_back({dot(root, root), mult});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_parabolic_component(const AEmbedding& e, const SatakeDiagram& lower_diag,
                            const SatakeDiagram& upper_diag) {
    auto upper_classes = restrict_simple(upper_diag);
    if (upper_classes.size() != e.upper.simples.size())
        throw DiagramMismatch("is_parabolic_component: upper diagram classes != upper simples");
    if (restrict_simple(lower_diag).size() != e.lower.simples.size())
        throw DiagramMismatch("is_parabolic_component: lower diagram classes != lower simples");

    // Embedded lower root vectors transported to a_k: the unique extension
    // vanishing on the complement, v in span(iota(a_i)) with
    // <v, iota(b)> = <beta, b>. Solved through the Gram matrix of the image.
    std::vector<Vec> image;
    std::vector<Vec> lower_basis = a_space_basis(e.lower);
    for (const auto& b : lower_basis) image.push_back(apply_inclusion(e.inclusion, b));
    // Gram solve for each lower positive
    std::size_t k = image.size();
    Mat gram(k, Vec(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(image[i], image[j]);
    std::vector<std::pair<Vec, long>> embedded;
    for (const auto& beta : e.lower.positives) {
        Vec beta_c = canonical_covector(e.lower, beta);
        Vec rhs(k, Rat(0));
        for (std::size_t i = 0; i < k; ++i) rhs[i] = dot(beta_c, lower_basis[i]);
        Vec coeff = k ? solve(gram, rhs) : Vec{};
        Vec v(e.upper.ambient_dim, Rat(0));
        for (std::size_t i = 0; i < k; ++i) v = add(v, scale(coeff[i], image[i]));
        embedded.push_back({std::move(v), e.lower.roots.at(beta)});
    }
    auto embedded_profile = length_mult_profile(embedded);

    std::string lower_key = canonical_key(strip_black_components(lower_diag));

    std::size_t nsimples = e.upper.simples.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << nsimples); ++mask) {
        std::set<std::size_t> phi;
        for (std::size_t i = 0; i < nsimples; ++i)
            if (mask & (std::size_t{1} << i)) phi.insert(i);
        if (phi.size() != e.lower.rank) continue;
        ParabolicSplit sp = split({e.upper, phi});
        std::vector<std::pair<Vec, long>> mphi_pos;
        for (const auto& [gamma, mult] : sp.m_phi_roots)
            if (std::binary_search(e.upper.positives.begin(), e.upper.positives.end(), gamma))
                mphi_pos.push_back({gamma, mult});
        if (mphi_pos.size() != embedded.size()) continue;
        if (length_mult_profile(mphi_pos) != embedded_profile) continue;
        // Satake deletion: remove the classes outside Phi, compare mod black.
        std::set<int> S;
        for (std::size_t i = 0; i < nsimples; ++i)
            if (!phi.count(i))
                S.insert(upper_classes[i].vertex_ids.begin(), upper_classes[i].vertex_ids.end());
        SatakeDiagram res = strip_black_components(delete_white(upper_diag, S));
        if (canonical_key(res) == lower_key) return true;
    }
    return false;
}

}  // namespace limroot
