#pragma once

#include <limroot/cohdeg.hpp>
#include <limroot/dirsys.hpp>
#include <limroot/root_system.hpp>
#include <limroot/satake.hpp>

#include <json.hpp>

#include <string>

namespace limroot {

// Insertion-ordered so emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as "p" / "p/q" strings (ints also accepted on input).
Rat rat_from_json(const Json& j);
Json rat_json(const Rat& r);
Json vec_json(const Vec& v);

// {"family": str, "field": str, "params": [n] | [p, q]}
RealFormDescriptor real_form_from_json(const Json& j);
Json real_form_json(const RealFormDescriptor& d);

// {"family", "field", "initial": int | [int,int], "r": [int], "s": [int]|null,
//  "t": [int]|null, "t1": [int]|null, "t2": [int]|null, "depth": int};
// sequence prefixes shorter than depth repeat their last entry.
DiagonalSystemDescriptor diagonal_system_from_json(const Json& j);
Json diagonal_system_json(const DiagonalSystemDescriptor& d);

// {"coords": {"1": -2, ...}, "psi": [int]}
WeightSpec weight_spec_from_json(const Json& j);
Json weight_spec_json(const WeightSpec& w);

Json system_json(const WeightedRootSystem& sys);  // roots, rho, rho_prod table
Json satake_json(const SatakeDiagram& d);
Json alignment_json(const AlignmentReport& r);
Json weak_parabolic_json(const WeakParabolicResult& r);
Json canonical_form_json(const CanonicalForm& f);
Json system_verdict_json(const SystemVerdict& v);
Json degree_report_json(const DegreeReport& r);
Json lp_report_json(const LpReport& r);

// Wraps nlohmann parse errors into InputError.
Json parse_json(const std::string& text);

}  // namespace limroot
