#pragma once

#include <limroot/dirsys.hpp>
#include <limroot/root_system.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace limroot {

// A weight on the limit torus, given by finitely many exact coordinates
// (1-based, identified across levels by coordinate inclusion with new torus
// coordinates appended at the end) and an optional dominance set Psi of
// simple m-root indices.
struct WeightSpec {
    std::map<std::size_t, Rat> coords;
    std::vector<std::size_t> psi;
};

// Truncation of the weight to the level's m-torus coordinates. Throws
// UnsupportedTruncation when a nonzero coordinate would be dropped and
// InputError when the integrality or Psi-dominance conventions fail.
Vec pullback(const WeightSpec& nu, const LevelData& level);

struct DegreeRecord {
    std::size_t i = 0;  // level index
    bool singular = false;
    std::optional<Vec> annihilating_root;
    std::size_t q = 0;  // |{gamma > 0 : <nu + rho, gamma> < 0}|
    std::size_t length = 0;
    std::vector<std::size_t> word;  // reduced word of w_i
    Vec nu_tilde;                   // w(nu + rho) - rho
};

DegreeRecord degree(const Vec& nu_i, const WeightedRootSystem& m_sys);

enum class FinitenessKind {
    CohomologicallyFinite,
    ClassicallyCohomologicallyFinite,
    NotFiniteWithinDepth,
    SingularTail,
};
std::string kind_name(FinitenessKind k);

struct DegreeReport {
    std::vector<DegreeRecord> levels;
    FinitenessKind verdict = FinitenessKind::NotFiniteWithinDepth;
    std::size_t q = 0;          // stable degree for the finite verdicts
    std::size_t threshold = 0;  // first level of the stable suffix
    std::vector<std::size_t> stable_word;  // for the classical verdict
    std::vector<std::string> notes;
};

// Finite-prefix evidence: per-level degrees plus a verdict over the suffix.
// Singular levels before the stable suffix are tolerated; a singular final
// level forces SingularTail. The classical verdict additionally requires the
// inverted positive-root sets to stabilize under coordinate inclusion.
DegreeReport finiteness_verdict(const WeightSpec& nu, const DiagonalSystemDescriptor& desc);

}  // namespace limroot
