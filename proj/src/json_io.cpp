#include <limroot/errors.hpp>
#include <limroot/json_io.hpp>

namespace limroot {

namespace {

long to_long(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + " must be an integer");
    return j.get<long>();
}

std::vector<long> to_seq(const Json& j, const std::string& what) {
    if (j.is_null()) return {};
    if (!j.is_array()) throw InputError(what + " must be an array of integers or null");
    std::vector<long> out;
    for (const auto& e : j) out.push_back(to_long(e, what + " entry"));
    return out;
}

Json seq_json(const std::vector<long>& v) {
    if (v.empty()) return nullptr;
    return Json(v);
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("rational must be an integer or a \"p/q\" string");
}

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(rat_json(c));
    return out;
}

RealFormDescriptor real_form_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("real form descriptor must be a JSON object");
    if (!j.contains("family") || !j.contains("field") || !j.contains("params"))
        throw InputError("real form descriptor needs family, field, params");
    RealFormDescriptor d;
    d.family = family_from_string(j.at("family").get<std::string>());
    d.field = field_from_string(j.at("field").get<std::string>());
    auto params = to_seq(j.at("params"), "params");
    if (params.size() == 1) {
        d.n = params[0];
    } else if (params.size() == 2) {
        d.p = params[0];
        d.q = params[1];
        d.n = d.p + d.q;
    } else {
        throw InputError("params must be [n] or [p, q]");
    }
    check_descriptor(d);
    return d;
}

Json real_form_json(const RealFormDescriptor& d) {
    Json out;
    out["family"] = family_name(d.family);
    out["field"] = field_name(d.field);
    if (unitary_family(d.family))
        out["params"] = Json::array({d.p, d.q});
    else
        out["params"] = Json::array({d.n});
    return out;
}

DiagonalSystemDescriptor diagonal_system_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("system descriptor must be a JSON object");
    for (const char* key : {"family", "field", "initial", "r", "depth"})
        if (!j.contains(key))
            throw InputError(std::string("system descriptor needs \"") + key + "\"");
    DiagonalSystemDescriptor d;
    d.family = family_from_string(j.at("family").get<std::string>());
    d.field = field_from_string(j.at("field").get<std::string>());
    const Json& init = j.at("initial");
    if (init.is_array())
        d.initial = to_seq(init, "initial");
    else
        d.initial = {to_long(init, "initial")};
    d.r = to_seq(j.at("r"), "r");
    if (j.contains("s")) d.s = to_seq(j.at("s"), "s");
    if (j.contains("t")) d.t = to_seq(j.at("t"), "t");
    if (j.contains("t1")) d.t1 = to_seq(j.at("t1"), "t1");
    if (j.contains("t2")) d.t2 = to_seq(j.at("t2"), "t2");
    long depth = to_long(j.at("depth"), "depth");
    if (depth < 0) throw InputError("depth must be nonnegative");
    d.depth = static_cast<std::size_t>(depth);
    validate_descriptor(d);
    return d;
}

Json diagonal_system_json(const DiagonalSystemDescriptor& d) {
    Json out;
    out["family"] = family_name(d.family);
    out["field"] = field_name(d.field);
    if (d.initial.size() == 1)
        out["initial"] = d.initial[0];
    else
        out["initial"] = Json(d.initial);
    out["r"] = Json(d.r);
    out["s"] = seq_json(d.s);
    if (unitary_family(d.family)) {
        out["t"] = nullptr;
        out["t1"] = seq_json(d.t1);
        out["t2"] = seq_json(d.t2);
    } else {
        out["t"] = seq_json(d.t);
        out["t1"] = nullptr;
        out["t2"] = nullptr;
    }
    out["depth"] = d.depth;
    return out;
}

WeightSpec weight_spec_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("weight spec must be a JSON object");
    WeightSpec w;
    if (j.contains("coords")) {
        const Json& coords = j.at("coords");
        if (!coords.is_object()) throw InputError("coords must map index strings to rationals");
        for (const auto& [key, value] : coords.items()) {
            std::size_t idx = 0;
            try {
                idx = std::stoul(key);
            } catch (const std::exception&) {
                throw InputError("coords key is not a coordinate index: '" + key + "'");
            }
            w.coords[idx] = rat_from_json(value);
        }
    }
    if (j.contains("psi"))
        for (long v : to_seq(j.at("psi"), "psi")) {
            if (v < 0) throw InputError("psi indices must be nonnegative");
            w.psi.push_back(static_cast<std::size_t>(v));
        }
    return w;
}

Json weight_spec_json(const WeightSpec& w) {
    Json coords = Json::object();
    for (const auto& [idx, value] : w.coords) coords[std::to_string(idx)] = rat_json(value);
    Json out;
    out["coords"] = coords;
    out["psi"] = Json(w.psi);
    return out;
}

Json system_json(const WeightedRootSystem& sys) {
    Json out;
    out["type"] = sys.type_label;
    out["kind"] = kind_name(sys.kind);
    out["ambient_dim"] = sys.ambient_dim;
    out["rank"] = sys.rank;
    Json positives = Json::array();
    for (const auto& gamma : sys.positives) {
        Json row;
        row["root"] = vec_json(gamma);
        row["mult"] = sys.mult(gamma);
        positives.push_back(row);
    }
    out["positives"] = positives;
    Json simples = Json::array();
    for (const auto& psi : sys.simples) simples.push_back(vec_json(psi));
    out["simples"] = simples;
    out["rho"] = vec_json(rho(sys));
    Json table = Json::array();
    for (const auto& row : rho_prod_check(sys)) {
        Json r;
        r["simple"] = vec_json(row.simple);
        r["two_rho_pairing"] = rat_json(row.lhs);
        r["mult_sum"] = rat_json(row.rhs);
        r["equal"] = row.equal;
        table.push_back(r);
    }
    out["rho_prod"] = table;
    return out;
}

Json satake_json(const SatakeDiagram& d) {
    Json out;
    Json vertices = Json::array();
    for (const auto& v : d.vertices) {
        Json row;
        row["id"] = v.id;
        row["black"] = v.black;
        vertices.push_back(row);
    }
    out["vertices"] = vertices;
    Json edges = Json::array();
    for (const auto& e : d.edges) {
        Json row;
        row["a"] = e.a;
        row["b"] = e.b;
        row["bond"] = e.bond;
        if (e.bond >= 2) row["shortward"] = e.shortward;
        edges.push_back(row);
    }
    out["edges"] = edges;
    Json arrows = Json::array();
    for (const auto& [a, b] : d.arrows) arrows.push_back(Json::array({a, b}));
    out["arrows"] = arrows;
    out["canonical_key"] = canonical_key(d);
    return out;
}

Json alignment_json(const AlignmentReport& r) {
    Json out;
    out["mu"] = Json(r.mu);
    out["per_level"] = Json(r.per_level);
    out["overall"] = r.overall;
    return out;
}

Json weak_parabolic_json(const WeakParabolicResult& r) {
    Json out;
    out["value"] = r.value;
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json row;
        row["level"] = s.level;
        row["vacuous"] = s.vacuous;
        row["rho"] = s.rho;
        row["centralizer"] = s.centralizer ? Json(*s.centralizer) : Json(nullptr);
        row["component"] = s.component ? Json(*s.component) : Json(nullptr);
        row["agree"] = s.agree;
        steps.push_back(row);
    }
    out["steps"] = steps;
    return out;
}

Json canonical_form_json(const CanonicalForm& f) {
    Json out;
    out["case"] = std::string(1, f.family_case);
    out["family"] = family_name(f.family);
    out["field"] = field_name(f.field);
    out["delta_variant"] = f.delta_variant;
    out["base_params"] = Json(f.base_params);
    out["notes"] = Json(f.notes);
    return out;
}

Json system_verdict_json(const SystemVerdict& v) {
    Json out;
    out["alignment"] = alignment_json(v.alignment);
    Json classical;
    classical["value"] = v.classical.value;
    classical["threshold"] = v.classical.threshold;
    out["classical_type"] = classical;
    out["weakly_parabolic"] = weak_parabolic_json(v.weakly_parabolic);
    out["canonical_form"] = v.canonical ? canonical_form_json(*v.canonical) : Json(nullptr);
    out["notes"] = Json(v.notes);
    return out;
}

Json degree_report_json(const DegreeReport& r) {
    Json out;
    Json levels = Json::array();
    for (const auto& rec : r.levels) {
        Json row;
        row["level"] = rec.i;
        row["singular"] = rec.singular;
        row["annihilating_root"] =
            rec.annihilating_root ? vec_json(*rec.annihilating_root) : Json(nullptr);
        row["q"] = rec.q;
        row["length"] = rec.length;
        row["word"] = Json(rec.word);
        row["nu_tilde"] = vec_json(rec.nu_tilde);
        levels.push_back(row);
    }
    out["levels"] = levels;
    out["verdict"] = kind_name(r.verdict);
    bool finite = r.verdict == FinitenessKind::CohomologicallyFinite ||
                  r.verdict == FinitenessKind::ClassicallyCohomologicallyFinite;
    out["q"] = finite ? Json(r.q) : Json(nullptr);
    out["threshold"] = finite ? Json(r.threshold) : Json(nullptr);
    out["stable_word"] = r.verdict == FinitenessKind::ClassicallyCohomologicallyFinite
                             ? Json(r.stable_word)
                             : Json(nullptr);
    out["notes"] = Json(r.notes);
    return out;
}

Json lp_report_json(const LpReport& r) {
    Json out;
    out["accepted"] = r.accepted;
    out["reason"] = r.reason;
    Json rhos = Json::array();
    for (const auto& v : r.rho_levels) rhos.push_back(vec_json(v));
    out["rho_levels"] = rhos;
    return out;
}

}  // namespace limroot
