#pragma once

#include <limroot/root_system.hpp>
#include <limroot/satake.hpp>

#include <map>
#include <set>
#include <vector>

namespace limroot {

// Real parabolic p_Phi from a subset Phi of simple restricted roots.
struct ParabolicDescriptor {
    WeightedRootSystem system;
    std::set<std::size_t> phi;  // 0-based indices into system.simples
};

struct ParabolicSplit {
    std::vector<Vec> a_phi_equations;  // the functionals psi(.) = 0 cutting out a_Phi
    std::map<Vec, long> m_phi_roots;   // roots in the integer span of Phi, with mults
    std::map<Vec, long> n_phi_roots;   // negative roots outside m_Phi
    std::size_t levi_rank = 0;
};

ParabolicSplit split(const ParabolicDescriptor& p);

// a_k = a_i (+) a_{k,i}: lower system on a_i, upper on a_k, inclusion map
// iota: lower ambient coords -> upper ambient coords. The complement a_{k,i}
// is fixed canonically as the orthogonal complement of iota(a_i) inside the
// a_k-subspace; when a_{k,i} centralizes g_i this is that complement.
struct AEmbedding {
    WeightedRootSystem lower;
    WeightedRootSystem upper;
    Mat inclusion;                // upper_ambient x lower_ambient, injective on a_i
    std::vector<Vec> complement;  // basis of a_{k,i} in upper coordinates
    std::size_t complement_dim = 0;
};

AEmbedding make_embedding(WeightedRootSystem lower, WeightedRootSystem upper, Mat inclusion);

// Builds the embedding of the semisimple Levi component determined by Phi.
AEmbedding embedding_from_phi(const WeightedRootSystem& sys, const std::set<std::size_t>& phi);

// Covectors on an A-type ambient space represent functionals on the
// trace-zero a only modulo constants; fix the mean-zero representative.
Vec canonical_covector(const WeightedRootSystem& sys, Vec covec);

// iota^T followed by lower canonicalization: the restriction of an upper
// functional to a_i expressed in lower coordinates.
Vec restrict_functional(const AEmbedding& e, const Vec& upper_covec);

// Criterion 1: rho_upper restricted to a_i equals rho_lower.
bool rho_restriction_holds(const AEmbedding& e);

// Pairing of both rho's with each embedded lower simple coroot (the
// quantitative witness when the criterion fails).
struct RhoWitness {
    Vec lower_coroot;   // in lower coordinates
    Vec upper_coroot;   // its image under iota
    Rat upper_value;    // <rho_upper, iota h>
    Rat lower_value;    // <rho_lower, h>
    bool equal;
};
std::vector<RhoWitness> rho_restriction_witnesses(const AEmbedding& e);

// Criterion 2: per nonzero functional on a_i, the total multiplicity of
// upper roots vanishing on a_{k,i} matches the lower multiplicity.
bool centralizer_condition(const AEmbedding& e);

// Criterion 3: some Phi-subset of the upper simples yields an m_Phi whose
// weighted root datum matches the embedded lower datum and whose Satake
// deletion matches lower_diag modulo black components.
bool is_parabolic_component(const AEmbedding& e, const SatakeDiagram& lower_diag,
                            const SatakeDiagram& upper_diag);

}  // namespace limroot
