// cartan-invariants: command-line front end over the cartan library.
#include "cartan/char_classes.hpp"
#include "cartan/exterior.hpp"
#include "cartan/models.hpp"
#include "cartan/poly_parser.hpp"
#include "cartan/relations.hpp"
#include "cartan/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cartan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotExact = 1;
constexpr int kExitUsage = 2;

struct ModelArgs {
    std::string model;
    int n = -1, p = -1, q = -1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("model", model, "family name or path to a model JSON file")->required();
        cmd->add_option("--n", n, "dimension parameter (projective, lagrangian, conformal)");
        cmd->add_option("--p", p, "first block size (grassmannian, foliated, split)");
        cmd->add_option("--q", q, "second block size (grassmannian, foliated, split)");
    }

    ModelBundle load() const {
        if (std::filesystem::is_regular_file(model)) return parse_model_file(model);
        std::vector<int> params;
        auto need = [&](int v, const char* flag) {
            if (v < 0) throw std::invalid_argument(model + " needs " + flag);
            params.push_back(v);
        };
        if (model == "projective" || model == "lagrangian" || model == "conformal") need(n, "--n");
        else if (model == "grassmannian" || model == "foliated" || model == "split") need(p, "--p"), need(q, "--q");
        return build_model(model, params);
    }
};

const Rep& pick_rep(const ModelBundle& b, const std::string& label) {
    return b.rep(label.empty() ? default_rep_label(b) : label);
}

std::string grade_str(Grade g) { return g.str(); }

void print_form(std::ostream& os, const std::string& label, const Form& f, const LieModel& m) {
    os << label << " = " << (f.is_zero() ? std::string("0") : f.str(m.names())) << "\n";
}

std::vector<ChernMonomial> parse_monomial_list(const std::string& text, int k) {
    std::vector<ChernMonomial> all = chern_monomials(k), out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        auto it = std::find_if(all.begin(), all.end(), [&](const ChernMonomial& m) { return m.str() == item; });
        if (it == all.end()) throw std::invalid_argument("'" + item + "' is not a Chern monomial of degree " + std::to_string(k));
        out.push_back(*it);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic forms of flat Cartan geometry models, in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false, expect_exact = false;
    app.add_flag("--json", json, "emit JSON");
    app.add_flag("--expect-exact", expect_exact, "exit 1 when a primitive search finds no primitive");

    // model build | validate
    auto* model_cmd = app.add_subcommand("model", "build or validate models");
    model_cmd->require_subcommand(1);
    ModelArgs build_args, validate_args;
    std::string out_path;
    auto* build_cmd = model_cmd->add_subcommand("build", "emit a built-in model as JSON");
    build_args.add_to(build_cmd);
    build_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");
    auto* validate_cmd = model_cmd->add_subcommand("validate", "check Jacobi, splitting conditions and representations");
    validate_args.add_to(validate_cmd);

    ModelArgs report_args;
    auto* report_cmd = app.add_subcommand("report", "d and dS of every dual generator");
    report_args.add_to(report_cmd);

    ModelArgs chern_args;
    std::string chern_rep;
    int chern_max = 0;
    bool chern_classes = false;
    auto* chern_cmd = app.add_subcommand("chern", "Chern forms and the relations among them");
    chern_args.add_to(chern_cmd);
    chern_cmd->add_option("--rep", chern_rep, "representation label");
    chern_cmd->add_option("--max", chern_max, "highest degree (default: rep dimension)");
    chern_cmd->add_flag("--modulo-exact", chern_classes, "report relations modulo dS-exact forms");

    ModelArgs cs_args;
    std::string cs_rep, cs_poly;
    bool cs_full = false, cs_literal = false;
    auto* cs_cmd = app.add_subcommand("cs", "Chern-Simons class or full transgression form");
    cs_args.add_to(cs_cmd);
    cs_cmd->add_option("--rep", cs_rep, "representation label");
    cs_cmd->add_option("--poly", cs_poly, "invariant polynomial, e.g. ch3 or 5^5*c5-3*c1^5")->required();
    cs_cmd->add_flag("--full", cs_full, "print the full transgression form instead of its top plus-count part");
    cs_cmd->add_flag("--literal-coefficients", cs_literal, "use a_j with (2 M^M)^j in the full form");

    ModelArgs rel_args;
    std::string rel_rep, rel_monomials;
    int rel_degree = 0;
    bool rel_classes = false, rel_all = false;
    auto* rel_cmd = app.add_subcommand("relations", "linear relations among Chern monomials of one degree");
    rel_args.add_to(rel_cmd);
    rel_cmd->add_option("--rep", rel_rep, "representation label");
    rel_cmd->add_option("--degree", rel_degree, "degree k")->required()->check(CLI::PositiveNumber);
    rel_cmd->add_option("--monomials", rel_monomials, "comma separated subset, e.g. c2,c1^2");
    rel_cmd->add_flag("--modulo-exact", rel_classes, "relations modulo dS-exact forms at grade (k,0,k)");
    rel_cmd->add_flag("--no-invariant", rel_all, "with --modulo-exact, search all cochains, not only invariant ones");

    ModelArgs prim_args;
    std::string prim_rep, prim_target, prim_of = "cs";
    int prim_min_minus = 0;
    bool prim_all = false;
    auto* prim_cmd = app.add_subcommand("primitive", "solve dS psi = target");
    prim_args.add_to(prim_cmd);
    prim_cmd->add_option("--rep", prim_rep, "representation label");
    prim_cmd->add_option("--target", prim_target, "invariant polynomial f")->required();
    prim_cmd->add_option("--of", prim_of, "cs: target the Chern-Simons class of f; chern: the Chern form of f")
        ->check(CLI::IsMember({"cs", "chern"}));
    prim_cmd->add_option("--min-minus", prim_min_minus, "minimum number of minus factors in psi")->check(CLI::NonNegativeNumber);
    prim_cmd->add_flag("--no-invariant", prim_all, "search all cochains, not only g0-invariant ones");

    ModelArgs audit_args;
    std::string audit_rep;
    auto* audit_cmd = app.add_subcommand("audit", "dS-exactness of Chern forms of a restricted g-module");
    audit_args.add_to(audit_cmd);
    audit_cmd->add_option("--rep", audit_rep, "representation label (default: V)");

    int coeff_n = 0;
    auto* coeff_cmd = app.add_subcommand("conformal-coeffs", "coefficients a_1..a_n of the conformal generating function");
    coeff_cmd->add_option("n", coeff_n, "dimension")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ostream& out = std::cout;
    try {
        if (*build_cmd) {
            std::string text = dump_model(build_args.load());
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(out_path);
                if (!f) throw std::invalid_argument("cannot write '" + out_path + "'");
                f << text;
            }
            return kExitOk;
        }

        if (*validate_cmd) {
            ModelBundle b = validate_args.load();
            ValidationReport rep = validate_model(b.model);
            std::vector<std::pair<std::string, ValidationReport>> reps;
            for (const auto& r : b.reps) reps.emplace_back(r.label, validate_rep(b.model, r));
            bool ok = rep.ok() && std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.second.ok(); });
            auto failures_json = [&](const ValidationReport& r) {
                Json arr = Json::array();
                for (const auto& f : r.failures) {
                    Json w = Json::array();
                    for (int g : f.witnesses) w.push_back(b.model.names().at(static_cast<std::size_t>(g)));
                    arr.push_back({{"condition", f.condition}, {"witnesses", w}, {"detail", f.detail}});
                }
                return arr;
            };
            if (json) {
                Json j;
                j["valid"] = ok;
                j["model"] = failures_json(rep);
                Json rj = Json::object();
                for (const auto& [label, r] : reps) rj[label] = failures_json(r);
                j["reps"] = rj;
                out << j.dump(2) << "\n";
            } else {
                out << (ok ? "valid" : "INVALID") << "\n";
                for (const auto& f : rep.failures) out << "  model: " << f.condition << " " << f.detail << "\n";
                for (const auto& [label, r] : reps)
                    for (const auto& f : r.failures) out << "  rep " << label << ": " << f.condition << " " << f.detail << "\n";
            }
            return ok ? kExitOk : kExitNotExact;
        }

        if (*report_cmd) {
            ModelBundle b = report_args.load();
            const LieModel& m = b.model;
            Json rows = Json::array();
            for (int g = 0; g < m.total_dim(); ++g) {
                Form gen = Form::generator(g);
                Grade gr = natural_grade(m, g);
                Form d = ce_differential(m, gen), ds = slovak_d(m, gen, gr);
                const std::string& name = m.generator(g).name;
                if (json) {
                    rows.push_back({{"name", name},
                                    {"part", part_symbol(m.generator(g).part)},
                                    {"grade", grade_str(gr)},
                                    {"d", to_json(d, m.names())},
                                    {"dS", to_json(ds, m.names())}});
                } else {
                    print_form(out, "d " + name, d, m);
                    print_form(out, "dS " + name, ds, m);
                }
            }
            if (json) out << Json{{"generators", rows}}.dump(2) << "\n";
            return kExitOk;
        }

        if (*chern_cmd) {
            ModelBundle b = chern_args.load();
            const Rep& rep = pick_rep(b, chern_rep);
            int kmax = chern_max > 0 ? chern_max : rep.dim;
            if (kmax > rep.dim) throw std::invalid_argument("--max exceeds the representation dimension");
            std::vector<Form> c = chern_forms(b.model, rep, kmax);
            Json forms = Json::array(), rels = Json::array();
            for (int k = 1; k <= kmax; ++k) {
                forms.push_back({{"k", k}, {"form", to_json(c[static_cast<std::size_t>(k - 1)], b.model.names())}});
                if (!json) print_form(out, "c" + std::to_string(k), c[static_cast<std::size_t>(k - 1)], b.model);
            }
            for (int k = 1; k <= kmax; ++k) {
                auto rs = find_relations(b.model, rep, k, RelationOptions{chern_classes, true});
                Json arr = Json::array();
                for (const auto& r : rs) {
                    arr.push_back(to_json(r));
                    if (!json) out << "relation (degree " << k << "): " << r.str() << "\n";
                }
                rels.push_back({{"degree", k}, {"relations", arr}});
            }
            if (json) out << Json{{"rep", rep.label}, {"chern", forms}, {"relations", rels}}.dump(2) << "\n";
            return kExitOk;
        }

        if (*cs_cmd) {
            ModelBundle b = cs_args.load();
            const Rep& rep = pick_rep(b, cs_rep);
            InvPoly f = parse_poly(cs_poly);
            int k = f.degree();
            if (k < 1) throw std::invalid_argument("--poly must be homogeneous of degree >= 1");
            Form form = cs_full ? chern_simons_form(b.model, rep, f, cs_literal) : cs_class(b.model, rep, f);
            if (json) {
                Json j{{"poly", f.str()}, {"degree", k}};
                if (cs_full) j["chern_simons"] = to_json(form, b.model.names());
                else {
                    j["grade"] = grade_str(Grade{k - 1, 1, k - 1});
                    j["cs_class"] = to_json(form, b.model.names());
                }
                out << j.dump(2) << "\n";
            } else {
                print_form(out, (cs_full ? "CS[" : "T[") + f.str() + "]", form, b.model);
            }
            return kExitOk;
        }

        if (*rel_cmd) {
            ModelBundle b = rel_args.load();
            const Rep& rep = pick_rep(b, rel_rep);
            RelationOptions opts{rel_classes, !rel_all};
            auto rs = rel_monomials.empty() ? find_relations(b.model, rep, rel_degree, opts)
                                            : find_relations(b.model, rep, rel_degree, parse_monomial_list(rel_monomials, rel_degree), opts);
            if (json) {
                Json arr = Json::array();
                for (const auto& r : rs) arr.push_back(to_json(r));
                out << Json{{"relations", arr}}.dump() << "\n";
            } else {
                if (rs.empty()) out << "no relations in degree " << rel_degree << "\n";
                for (const auto& r : rs) out << r.str() << "\n";
            }
            return kExitOk;
        }

        if (*prim_cmd) {
            ModelBundle b = prim_args.load();
            const Rep& rep = pick_rep(b, prim_rep);
            InvPoly f = parse_poly(prim_target);
            int k = f.degree();
            if (k < 1) throw std::invalid_argument("--target must be homogeneous of degree >= 1");
            bool of_cs = prim_of == "cs";
            Form target = of_cs ? cs_class(b.model, rep, f) : characteristic_form(b.model, rep, f);
            Grade g = of_cs ? Grade{k - 1, 1, k - 1} : Grade{k, 0, k};
            PrimitiveResult r = find_primitive(b.model, target, g, {!prim_all, prim_min_minus});
            if (json) {
                Json j{{"target", to_json(target, b.model.names())}, {"grade", grade_str(g)}};
                Json res = to_json(r, b.model.names());
                for (const auto& [key, v] : res.items()) j[key] = v;
                out << j.dump(2) << "\n";
            } else {
                print_form(out, "target at " + grade_str(g), target, b.model);
                if (!r.target_closed) out << "warning: target is not dS-closed\n";
                if (r.exact) print_form(out, "psi", *r.primitive, b.model);
                else out << "not exact\n";
                out << "search space " << r.certificate.unknowns << ", rank " << r.certificate.rank << ", augmented rank "
                    << r.certificate.rank_augmented << "\n";
            }
            if (!r.target_closed) std::cerr << "warning: target is not dS-closed\n";
            return (expect_exact && !r.exact) ? kExitNotExact : kExitOk;
        }

        if (*audit_cmd) {
            ModelBundle b = audit_args.load();
            const Rep& rep = b.rep(audit_rep.empty() ? "V" : audit_rep);
            auto entries = exactness_audit(b.model, rep);
            bool all_exact = true;
            Json arr = Json::array();
            for (const auto& e : entries) {
                all_exact = all_exact && e.result.exact;
                if (json) {
                    Json j{{"degree", e.degree}, {"zero_form", e.zero_form}, {"exact", e.result.exact}};
                    Json res = to_json(e.result, b.model.names());
                    for (const auto& [key, v] : res.items()) j[key] = v;
                    arr.push_back(j);
                } else {
                    out << "c" << e.degree << ": " << (e.zero_form ? "zero form" : (e.result.exact ? "exact" : "not exact"))
                        << " (search space " << e.result.certificate.unknowns << ")\n";
                }
            }
            if (json) out << Json{{"rep", rep.label}, {"audit", arr}}.dump(2) << "\n";
            return (expect_exact && !all_exact) ? kExitNotExact : kExitOk;
        }

        if (*coeff_cmd) {
            auto a = conformal_coefficients(coeff_n);
            if (json) {
                Json arr = Json::array();
                for (const auto& x : a) arr.push_back(x.str());
                out << Json{{"n", coeff_n}, {"coefficients", arr}}.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < a.size(); ++i) out << (i ? " " : "") << a[i];
                out << "\n";
            }
            return kExitOk;
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
