#include <limroot/cohdeg.hpp>
#include <limroot/dirsys.hpp>
#include <limroot/errors.hpp>
#include <limroot/json_io.hpp>
#include <limroot/oracle.hpp>
#include <limroot/parabolic.hpp>
#include <limroot/satake.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

namespace {

using namespace limroot;

// Inline JSON (leading '{') or a path to a JSON file.
Json load_input(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') return parse_json(arg);
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read input file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::string vec_text(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

std::vector<long> parse_index_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw InputError("not an index list: '" + s + "'");
        }
    }
    return out;
}

Vec parse_vec(const std::string& s) {
    Vec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(rat_from_string(item));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_system_text(const WeightedRootSystem& sys) {
    std::cout << "restricted system " << sys.type_label << " (ambient dim " << sys.ambient_dim
              << ", rank " << sys.rank << ")\n";
    std::cout << "positive roots (root : mult):\n";
    for (const auto& gamma : sys.positives)
        std::cout << "  " << vec_text(gamma) << " : " << sys.mult(gamma) << "\n";
    std::cout << "rho = " << vec_text(rho(sys)) << "\n";
    std::cout << "rho pairing identity (2<rho,psi>/<psi,psi> vs mult(psi) + 2 mult(2psi)):\n";
    for (const auto& row : rho_prod_check(sys))
        std::cout << "  " << vec_text(row.simple) << " : " << rat_to_string(row.lhs) << " vs "
                  << rat_to_string(row.rhs) << (row.equal ? "  ok" : "  MISMATCH") << "\n";
}

int cmd_roots(const std::string& input, const std::string& format) {
    auto desc = real_form_from_json(load_input(input));
    auto sys = build_restricted_system(desc);
    if (format == "json") {
        Json out;
        out["descriptor"] = real_form_json(desc);
        out["system"] = system_json(sys);
        emit(out);
    } else {
        std::cout << desc.to_string() << "\n";
        print_system_text(sys);
    }
    return 0;
}

int cmd_oracle(const std::string& input, const std::string& format, long bound) {
    auto desc = real_form_from_json(load_input(input));
    auto model = realize(desc, bound);
    auto oracle = restricted_roots(model);
    auto catalog = build_restricted_system(desc);
    bool match = oracle.roots == catalog.roots && oracle.rank == catalog.rank &&
                 oracle.ambient_dim == catalog.ambient_dim;
    if (format == "json") {
        Json out;
        out["descriptor"] = real_form_json(desc);
        out["catalog"] = system_json(catalog);
        out["oracle"] = system_json(oracle);
        out["match"] = match;
        emit(out);
    } else {
        std::cout << desc.to_string() << ": oracle " << (match ? "matches" : "DIFFERS from")
                  << " catalog\n";
        std::cout << "catalog " << catalog.type_label << ", oracle " << oracle.type_label << "\n";
        for (const auto& [root, mult] : catalog.roots) {
            long om = oracle.mult(root);
            if (om != mult)
                std::cout << "  " << vec_text(root) << ": catalog mult " << mult
                          << ", oracle mult " << om << "\n";
        }
        for (const auto& [root, mult] : oracle.roots)
            if (catalog.mult(root) == 0)
                std::cout << "  " << vec_text(root) << ": oracle-only root, mult " << mult << "\n";
    }
    if (!match) throw InvariantViolation("matrix oracle disagrees with the catalog");
    return 0;
}

int cmd_satake(const std::string& input, const std::string& format, const std::string& del,
               bool dot) {
    auto desc = real_form_from_json(load_input(input));
    auto diagram = satake_of(desc);
    if (!del.empty()) {
        std::set<int> S;
        for (long id : parse_index_list(del)) S.insert(static_cast<int>(id));
        diagram = delete_white(diagram, S);
    }
    if (dot) {
        std::cout << to_dot(diagram);
    } else if (format == "json") {
        Json out;
        out["descriptor"] = real_form_json(desc);
        out["diagram"] = satake_json(diagram);
        emit(out);
    } else {
        std::cout << desc.to_string() << ": " << diagram.vertices.size() << " vertices, "
                  << diagram.white_count() << " white\n";
        std::cout << "canonical key: " << canonical_key(diagram) << "\n";
    }
    return 0;
}

int cmd_parabolic(const std::string& input, const std::string& format, const std::string& phi_arg) {
    auto desc = real_form_from_json(load_input(input));
    auto sys = build_restricted_system(desc);
    ParabolicDescriptor p;
    p.system = sys;
    for (long idx : parse_index_list(phi_arg)) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= sys.simples.size())
            throw InputError("phi index out of range: " + std::to_string(idx));
        p.phi.insert(static_cast<std::size_t>(idx));
    }
    auto sp = split(p);
    auto emb = embedding_from_phi(sys, p.phi);
    bool rho_ok = rho_restriction_holds(emb);
    bool cent_ok = centralizer_condition(emb);
    auto upper_diag = satake_of(desc);
    auto classes = restrict_simple(upper_diag);
    std::set<int> removed;
    for (const auto& cls : classes)
        if (!p.phi.count(cls.simple_index - 1))
            for (int id : cls.vertex_ids) removed.insert(id);
    auto lower_diag = delete_white(upper_diag, removed);
    bool comp_ok = is_parabolic_component(emb, lower_diag, upper_diag);
    if (format == "json") {
        Json out;
        out["descriptor"] = real_form_json(desc);
        out["phi"] = Json(std::vector<std::size_t>(p.phi.begin(), p.phi.end()));
        out["levi_rank"] = sp.levi_rank;
        out["m_root_count"] = sp.m_phi_roots.size();
        out["n_root_count"] = sp.n_phi_roots.size();
        out["rho_restriction"] = rho_ok;
        out["centralizer_condition"] = cent_ok;
        out["parabolic_component"] = comp_ok;
        out["agree"] = (rho_ok == cent_ok) && (cent_ok == comp_ok);
        emit(out);
    } else {
        std::cout << desc.to_string() << ", Phi = {";
        bool first = true;
        for (auto idx : p.phi) {
            if (!first) std::cout << ", ";
            std::cout << idx;
            first = false;
        }
        std::cout << "}\n";
        std::cout << "levi rank " << sp.levi_rank << ", m-roots " << sp.m_phi_roots.size()
                  << ", n-roots " << sp.n_phi_roots.size() << "\n";
        std::cout << "rho restriction:       " << (rho_ok ? "true" : "false") << "\n";
        std::cout << "centralizer condition: " << (cent_ok ? "true" : "false") << "\n";
        std::cout << "parabolic component:   " << (comp_ok ? "true" : "false") << "\n";
    }
    return 0;
}

DiagonalSystemDescriptor load_descriptor(const std::string& input, long depth_override) {
    auto desc = diagonal_system_from_json(load_input(input));
    if (depth_override >= 0) {
        desc.depth = static_cast<std::size_t>(depth_override);
        validate_descriptor(desc);
    }
    return desc;
}

int cmd_dirsys(const std::string& input, const std::string& format, long depth_override) {
    auto desc = load_descriptor(input, depth_override);
    auto verdict = system_verdict(desc);
    if (format == "json") {
        Json out;
        out["descriptor"] = diagonal_system_json(desc);
        out["verdict"] = system_verdict_json(verdict);
        emit(out);
    } else {
        std::cout << "aligned:          " << (verdict.alignment.overall ? "true" : "false") << "\n";
        std::cout << "classical type:   " << (verdict.classical.value ? "true" : "false");
        if (verdict.classical.value)
            std::cout << " (from level " << verdict.classical.threshold << ")";
        std::cout << "\n";
        std::cout << "weakly parabolic: " << (verdict.weakly_parabolic.value ? "true" : "false")
                  << "\n";
        if (verdict.canonical)
            std::cout << "canonical case:   (" << verdict.canonical->family_case << ")"
                      << (verdict.canonical->delta_variant ? " delta variant" : "") << "\n";
        for (const auto& note : verdict.notes) std::cout << "note: " << note << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& input, const std::string& format, long depth_override) {
    auto desc = load_descriptor(input, depth_override);
    auto form = canonicalize(desc);
    if (format == "json") {
        emit(canonical_form_json(form));
    } else {
        std::cout << "case (" << form.family_case << "): " << family_name(form.family) << " over "
                  << field_name(form.field) << (form.delta_variant ? ", delta variant" : "")
                  << ", base dims";
        for (long d : form.base_params) std::cout << " " << d;
        std::cout << "\n";
        for (const auto& note : form.notes) std::cout << "note: " << note << "\n";
    }
    return 0;
}

int cmd_cohdeg(const std::string& input, const std::string& weight_arg, const std::string& format,
               long depth_override) {
    auto desc = load_descriptor(input, depth_override);
    auto nu = weight_spec_from_json(load_input(weight_arg));
    auto rep = finiteness_verdict(nu, desc);
    if (format == "json") {
        Json out;
        out["descriptor"] = diagonal_system_json(desc);
        out["weight"] = weight_spec_json(nu);
        out["report"] = degree_report_json(rep);
        emit(out);
    } else {
        std::cout << "level  singular  q  length\n";
        for (const auto& rec : rep.levels)
            std::cout << "  " << rec.i << "      " << (rec.singular ? "yes" : "no ") << "     "
                      << rec.q << "  " << rec.length << "\n";
        std::cout << "verdict: " << kind_name(rep.verdict);
        if (rep.verdict == FinitenessKind::CohomologicallyFinite ||
            rep.verdict == FinitenessKind::ClassicallyCohomologicallyFinite)
            std::cout << " (q = " << rep.q << ", from level " << rep.threshold << ")";
        std::cout << "\n";
        for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    }
    return 0;
}

int cmd_lp(const std::string& input, const std::string& p_arg, const std::string& sigma_arg,
           const std::string& format, long depth_override) {
    auto desc = load_descriptor(input, depth_override);
    bool p_inf = p_arg == "inf" || p_arg == "infinity" || p_arg == "oo";
    Rat p = 0;
    if (!p_inf) {
        try {
            p = rat_from_string(p_arg);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    Vec sigma = sigma_arg.empty() ? Vec{} : parse_vec(sigma_arg);
    auto rep = lp_parameter_check(desc, p_inf, p, sigma);
    if (format == "json") {
        Json out;
        out["descriptor"] = diagonal_system_json(desc);
        out["p"] = p_inf ? Json("inf") : rat_json(p);
        out["sigma"] = vec_json(sigma);
        out["report"] = lp_report_json(rep);
        emit(out);
    } else {
        std::cout << (rep.accepted ? "accepted" : "rejected") << ": " << rep.reason << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with restricted root systems of classical real forms and "
                 "their diagonal direct limits"};
    app.require_subcommand(1);

    std::string input, format = "text", del, phi_arg, weight_arg, p_arg, sigma_arg;
    long depth_override = -1;
    long bound = default_oracle_bound();
    bool dot = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* roots = app.add_subcommand("roots", "restricted root system, rho, pairing table");
    roots->add_option("descriptor", input, "real form JSON (inline or file)")->required();
    add_format(roots);

    auto* oracle = app.add_subcommand("oracle", "matrix-oracle vs catalog comparison");
    oracle->add_option("descriptor", input, "real form JSON (inline or file)")->required();
    oracle->add_option("--bound", bound, "matrix size bound");
    add_format(oracle);

    auto* satake = app.add_subcommand("satake", "Satake diagram, optionally after deletion");
    satake->add_option("descriptor", input, "real form JSON (inline or file)")->required();
    satake->add_option("--delete", del, "white vertex ids to delete, comma separated");
    satake->add_flag("--dot", dot, "emit DOT instead of text/json");
    add_format(satake);

    auto* parabolic = app.add_subcommand("parabolic", "Phi-split and the three component criteria");
    parabolic->add_option("descriptor", input, "real form JSON (inline or file)")->required();
    parabolic->add_option("--phi", phi_arg, "simple root indices kept in the Levi")->required();
    add_format(parabolic);

    auto* dirsys = app.add_subcommand("dirsys", "full verdict for a diagonal direct system");
    dirsys->add_option("config", input, "system JSON (inline or file)")->required();
    dirsys->add_option("--depth", depth_override, "override the descriptor depth");
    add_format(dirsys);

    auto* classify = app.add_subcommand("classify", "canonical form of a classical-type system");
    classify->add_option("config", input, "system JSON (inline or file)")->required();
    classify->add_option("--depth", depth_override, "override the descriptor depth");
    add_format(classify);

    auto* cohdeg = app.add_subcommand("cohdeg", "per-level degrees and finiteness verdict");
    cohdeg->add_option("config", input, "system JSON (inline or file)")->required();
    cohdeg->add_option("--weight", weight_arg, "weight JSON (inline or file)")->required();
    cohdeg->add_option("--depth", depth_override, "override the descriptor depth");
    add_format(cohdeg);

    auto* lp = app.add_subcommand("lp", "L_p parameter acceptance check");
    lp->add_option("config", input, "system JSON (inline or file)")->required();
    lp->add_option("--p", p_arg, "integrability parameter (rational or inf)")->required();
    lp->add_option("--sigma", sigma_arg, "real part of sigma at level 0, comma separated");
    lp->add_option("--depth", depth_override, "override the descriptor depth");
    add_format(lp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (roots->parsed()) return cmd_roots(input, format);
        if (oracle->parsed()) return cmd_oracle(input, format, bound);
        if (satake->parsed()) return cmd_satake(input, format, del, dot);
        if (parabolic->parsed()) return cmd_parabolic(input, format, phi_arg);
        if (dirsys->parsed()) return cmd_dirsys(input, format, depth_override);
        if (classify->parsed()) return cmd_classify(input, format, depth_override);
        if (cohdeg->parsed()) return cmd_cohdeg(input, weight_arg, format, depth_override);
        if (lp->parsed()) return cmd_lp(input, p_arg, sigma_arg, format, depth_override);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
