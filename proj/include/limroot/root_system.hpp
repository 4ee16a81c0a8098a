#pragma once

#include <limroot/linalg.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace limroot {

// Root vectors are exact rational coordinate vectors (Vec) in an ambient
// orthonormal basis. A-type systems use the trace-zero hyperplane of Q^n.

enum class SystemKind { A, B, C, D, BC, Other };

std::string kind_name(SystemKind k);

struct WeightedRootSystem {
    std::size_t ambient_dim = 0;
    std::size_t rank = 0;  // dim of the underlying a (ambient_dim - 1 for A-type)
    SystemKind kind = SystemKind::Other;
    std::string type_label;           // e.g. "BC_2", "A_1 x A_1"
    std::map<Vec, long> roots;        // root -> multiplicity
    std::vector<Vec> positives;       // lexicographically positive roots, sorted
    std::vector<Vec> simples;         // Bourbaki order

    long mult(const Vec& v) const {
        auto it = roots.find(v);
        return it == roots.end() ? 0 : it->second;
    }
    bool has_central_direction() const { return kind == SystemKind::A; }
};

// Assembles positives/simples bookkeeping from a positive-roots-with-mult map.
WeightedRootSystem make_system(std::size_t ambient_dim, std::size_t rank, SystemKind kind,
                               std::string type_label, const std::map<Vec, long>& positive_mults,
                               std::vector<Vec> simples);

// Throws InvariantViolation when the structural invariants fail.
void validate(const WeightedRootSystem& sys);

Vec rho(const WeightedRootSystem& sys);

struct RhoProdRow {
    Vec simple;
    Rat lhs;  // 2<rho,psi>/<psi,psi>
    Rat rhs;  // mult(psi) + 2 mult(2 psi)
    bool equal;
};
std::vector<RhoProdRow> rho_prod_check(const WeightedRootSystem& sys);

Vec reflect(const Vec& v, const Vec& root);

struct DominantResult {
    Vec dominant;
    std::vector<std::size_t> word;  // simple reflection indices, applied left to right
    std::size_t length = 0;
    std::optional<Vec> singular_root;  // positive root annihilating v, if any
    bool singular() const { return singular_root.has_value(); }
};
DominantResult make_dominant(const Vec& v, const WeightedRootSystem& sys);

std::size_t inversion_count(const Vec& v, const WeightedRootSystem& sys);

// Descriptors for the supported classical real forms.
enum class Family { SL, GL, SU, U, SO_pq, O_pq, Sp_pq, SpF, SOC, OC, SOstar };
enum class Field { R, C, H };

std::string family_name(Family f);
std::string field_name(Field f);
Family family_from_string(const std::string& s);
Field field_from_string(const std::string& s);

struct RealFormDescriptor {
    Family family;
    Field field;
    long n = 0;  // for one-parameter families
    long p = 0, q = 0;  // for (p,q) families
    std::string to_string() const;
};

// Validates the family/field/params combination; throws UnsupportedFamily.
void check_descriptor(const RealFormDescriptor& desc);

// Catalog of restricted root systems with multiplicities (validated against
// the matrix oracle by the test suite, never trusted blindly).
WeightedRootSystem build_restricted_system(const RealFormDescriptor& desc);

// A_{n-1} in the trace-zero hyperplane of Q^n, uniform multiplicity.
WeightedRootSystem linear_system(std::size_t n, long mult);

// B/C/D/BC of the given rank with mults (pair roots, e_i, 2e_i).
WeightedRootSystem classical_system(SystemKind kind, std::size_t rank, long pair_mult,
                                    long short_mult, long long_mult);

}  // namespace limroot
