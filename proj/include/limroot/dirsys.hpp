#pragma once

#include <limroot/parabolic.hpp>
#include <limroot/root_system.hpp>

#include <optional>
#include <string>
#include <vector>

namespace limroot {

// A diagonal-embedding direct system: g -> diag{g,...,g; delta(g),...; 1,...}
// with r_n plain copies, s_n twisted copies and t_n (resp. t'_n/t''_n)
// identity entries per step. Sequence prefixes repeat their last entry.
struct DiagonalSystemDescriptor {
    Family family = Family::SL;
    Field field = Field::R;
    std::vector<long> initial;          // {d_0} or {d'_0, d''_0}
    std::vector<long> r, s, t, t1, t2;  // step sequences, 1-based steps
    std::size_t depth = 0;
};

// SU/U, SO(p,q)/O(p,q), Sp(p,q): two-sided forms with (d', d'') bookkeeping.
bool unitary_family(Family f);

struct StepParams {
    long r = 0, s = 0, t = 0, t1 = 0, t2 = 0;
};
StepParams step_params(const DiagonalSystemDescriptor& desc, std::size_t n);  // n in [1, depth]

// Structural checks; throws InputError for malformed shapes and
// InvariantViolation for the family rules (r+s > 0, s = 0 over H and for
// symplectic groups, odd dimensions for O/OC).
void validate_descriptor(const DiagonalSystemDescriptor& desc);

// Dimension recursion only: d_{n+1} = d_n(r+s) + t componentwise; cheap
// enough for large enumerations where full systems are never needed.
std::vector<std::vector<long>> generate_dims(const DiagonalSystemDescriptor& desc);

long mu_of(const DiagonalSystemDescriptor& desc, const std::vector<long>& dims);

RealFormDescriptor level_descriptor(const DiagonalSystemDescriptor& desc,
                                    const std::vector<long>& dims);

struct LevelData {
    std::size_t n = 0;
    std::vector<long> dims;
    long mu = 0;
    bool rank_zero = false;          // compact/degenerate level, empty system
    WeightedRootSystem system;       // restricted system Sigma(g_n, a_n)
    Vec rho_n;
    WeightedRootSystem m_system;     // restricted system of m_n on its torus
};

std::vector<LevelData> generate_levels(const DiagonalSystemDescriptor& desc);

// The a_n -> a_{n+1} coordinate map of step n+1 (blocks trailing for
// B/C/BC/D coordinates, leading for A-type; twisted copies act by delta).
AEmbedding step_embedding(const DiagonalSystemDescriptor& desc, const LevelData& lower,
                          const LevelData& upper, const StepParams& p);

struct AlignmentReport {
    std::vector<bool> per_level;  // level n: mu_n <= mu_{n+1} (unitary), else true
    bool overall = true;
    std::vector<long> mu;
};
AlignmentReport iwasawa_aligned(const DiagonalSystemDescriptor& desc);

// Greedy longest suffix-compatible subsequence of levels along which mu is
// nondecreasing; throws DepthTooSmall when fewer than two survive.
std::vector<std::size_t> extract_cofinal_aligned(const DiagonalSystemDescriptor& desc);

struct ClassicalTypeResult {
    bool value = false;
    std::size_t threshold = 0;  // first level from which every step has r+s = 1
};
ClassicalTypeResult is_classical_type(const DiagonalSystemDescriptor& desc);

// Minimum, over the roots of level n, of the number of level-(n+1) roots
// restricting to it; kInfiniteFibers for a rootless lower level.
inline constexpr long kInfiniteFibers = -1;
long restriction_fiber_count(const DiagonalSystemDescriptor& desc, std::size_t level);

struct StepCertificate {
    std::size_t level = 0;  // embedding level -> level+1
    bool vacuous = false;   // rootless lower level
    bool rho = true;
    std::optional<bool> centralizer;  // criteria 2/3 evaluated at small rank
    std::optional<bool> component;
    bool agree = true;
};

struct WeakParabolicResult {
    bool value = true;
    std::vector<StepCertificate> steps;  // stops at the first failing step
};
WeakParabolicResult is_weakly_parabolic(const DiagonalSystemDescriptor& desc);

struct CanonicalForm {
    char family_case = '?';  // 'a'..'g'
    Family family = Family::SL;
    Field field = Field::R;
    bool delta_variant = false;
    std::vector<long> base_params;  // dims at the start of the canonical suffix
    std::vector<std::string> notes;
};

CanonicalForm canonicalize(const DiagonalSystemDescriptor& desc);

// The unit-step descriptor realizing a canonical form (used for the
// idempotence property and by the CLI).
DiagonalSystemDescriptor to_descriptor(const CanonicalForm& form, std::size_t depth);

struct LpReport {
    bool accepted = false;
    std::string reason;
    std::vector<Vec> rho_levels;  // the coherent family rho_{i,a}
};
// p_infinite: the L_infinity case (sigma must vanish); otherwise p >= 1 and
// acceptance needs sigma = (2/p) rho at level 0 plus rho-restriction at
// every step within depth.
LpReport lp_parameter_check(const DiagonalSystemDescriptor& desc, bool p_infinite, const Rat& p,
                            const Vec& sigma_real_base);

struct SystemVerdict {
    AlignmentReport alignment;
    ClassicalTypeResult classical;
    WeakParabolicResult weakly_parabolic;
    std::optional<CanonicalForm> canonical;
    std::vector<std::string> notes;
};
SystemVerdict system_verdict(const DiagonalSystemDescriptor& desc);

}  // namespace limroot
