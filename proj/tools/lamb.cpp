// lamb: a workbench for untyped lambda calculus and two of its models.
//
// Every subcommand prints one JSON document on stdout (keys sorted, so the
// output is byte-identical across runs) and a wall-clock measurement on
// stderr. `--pretty` switches stdout to a human rendering.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lamb/lamb.hpp"

using json = nlohmann::ordered_json;

namespace {

// Sorted keys make the document deterministic; build objects through this.
json obj() { return json::object(); }

struct Budgets {
    long fuel = 10000;
    int rank = 3;
    int size = 6;
};

struct ModelSpec {
    enum class Kind { Engeler, WebFile, Relational } kind = Kind::Engeler;
    int atom_count = 1;
    std::string path;
};

ModelSpec parse_model(const std::string& text) {
    ModelSpec m;
    if (text == "rel") {
        m.kind = ModelSpec::Kind::Relational;
        return m;
    }
    if (text.rfind("engeler:", 0) == 0) {
        m.kind = ModelSpec::Kind::Engeler;
        m.atom_count = std::stoi(text.substr(8));
        if (m.atom_count < 1) throw lamb::Error("atom count must be >= 1");
        return m;
    }
    if (text.rfind("web:", 0) == 0) {
        m.kind = ModelSpec::Kind::WebFile;
        m.path = text.substr(4);
        return m;
    }
    throw lamb::Error("bad model '" + text + "': expected engeler:<n>, web:<path> or rel");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lamb::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

lamb::PartialWeb load_web(const std::string& path) {
    return lamb::parse_partial_web(slurp(path));
}

lamb::CompletedWeb make_web(const ModelSpec& m) {
    if (m.kind == ModelSpec::Kind::Engeler)
        return lamb::free_completion(lamb::engeler_web(m.atom_count));
    return lamb::free_completion(load_web(m.path));
}

// Environment file: `var = { e1, e2, ... }` lines, '#' comments.
lamb::GEnv load_genv(const std::string& path, const lamb::CompletedWeb& web) {
    lamb::GEnv env;
    std::istringstream in(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos || line[i] == '#') continue;
        std::size_t eq = line.find('=');
        std::size_t lb = line.find('{', eq);
        std::size_t rb = line.rfind('}');
        if (eq == std::string::npos || lb == std::string::npos || rb == std::string::npos ||
            rb < lb)
            throw lamb::WebFormatError("expected `var = { elements }`", lineno);
        std::string name = line.substr(i, eq - i);
        name.erase(name.find_last_not_of(" \t") + 1);
        std::vector<lamb::WebElem> elems;
        std::string body = line.substr(lb + 1, rb - lb - 1);
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t j = 0; j <= body.size(); ++j) {
            bool split = j == body.size() || (body[j] == ',' && depth == 0);
            if (j < body.size()) {
                if (body[j] == '(' || body[j] == '{') ++depth;
                if (body[j] == ')' || body[j] == '}') --depth;
            }
            if (!split) continue;
            std::string piece = body.substr(start, j - start);
            start = j + 1;
            std::size_t b = piece.find_first_not_of(" \t");
            if (b == std::string::npos) continue;
            piece = piece.substr(b, piece.find_last_not_of(" \t") - b + 1);
            lamb::WebElem e = lamb::parse_web_elem(piece);
            if (!web.contains(e))
                throw lamb::WebFormatError("element " + e.str() + " is not in the carrier",
                                           lineno);
            elems.push_back(std::move(e));
        }
        env[name] = lamb::make_web_set(std::move(elems));
    }
    return env;
}

json bohm_to_json(const lamb::BohmApprox& b) {
    if (b.is_bottom) {
        json j = obj();
        j["bottom"] = true;
        return j;
    }
    json j = obj();
    j["binders"] = b.binders;
    j["head"] = b.head;
    json kids = json::array();
    for (const lamb::BohmApprox& c : b.children) kids.push_back(bohm_to_json(c));
    j["children"] = std::move(kids);
    return j;
}

json context_to_json(const lamb::TypingContext& ctx) {
    json j = obj();
    for (const auto& [name, m] : ctx) {
        json ms = json::array();
        for (const lamb::DElem& e : m) ms.push_back(e.str());
        j[name] = std::move(ms);
    }
    return j;
}

json relpair_to_json(const lamb::RelPair& p) {
    json j = obj();
    j["context"] = context_to_json(p.first);
    j["element"] = p.second.str();
    return j;
}

const char* verdict_name(lamb::CompareVerdict v) {
    switch (v) {
        case lamb::CompareVerdict::EqualUpTo: return "equal-up-to-bound";
        case lamb::CompareVerdict::LeftExtra: return "left-extra";
        case lamb::CompareVerdict::RightExtra: return "right-extra";
        case lamb::CompareVerdict::Incomparable: return "incomparable";
    }
    return "?";
}

const char* axiom_name(lamb::AxiomStatus s) {
    switch (s) {
        case lamb::AxiomStatus::Holds: return "holds";
        case lamb::AxiomStatus::Unknown: return "unknown";
        case lamb::AxiomStatus::Fails: return "fails";
    }
    return "?";
}

json axiom_to_json(const lamb::AxiomCheck& c) {
    json j = obj();
    j["status"] = axiom_name(c.status);
    if (c.witness) {
        j["witness"] = json::array({lamb::to_string(c.witness->first),
                                    lamb::to_string(c.witness->second)});
    }
    return j;
}

struct Report {
    json doc = obj();
    int exit_code = 0;
    bool pretty = false;
    std::vector<std::string> pretty_lines;

    void emit() const {
        if (pretty) {
            for (const std::string& line : pretty_lines) std::cout << line << "\n";
        } else {
            std::cout << doc.dump(2) << "\n";
        }
    }
};

} // namespace

int main(int argc, char** argv) {
    auto started = std::chrono::steady_clock::now();

    CLI::App app{"workbench for untyped lambda calculus, graph models and the relational model"};
    app.require_subcommand(1);

    Budgets budgets;
    std::string model_text = "engeler:1";
    std::string env_path;
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable rendering instead of JSON");

    auto add_common = [&](CLI::App* cmd, bool with_model) {
        cmd->add_option("--fuel", budgets.fuel, "beta-step budget")->capture_default_str();
        if (with_model) {
            cmd->add_option("--rank", budgets.rank, "rank bound (web models)")
                ->capture_default_str();
            cmd->add_option("--size", budgets.size, "size bound (relational model)")
                ->capture_default_str();
            cmd->add_option("--model", model_text, "engeler:<n> | web:<path> | rel")
                ->capture_default_str();
            cmd->add_option("--env", env_path, "environment file (web models)");
        }
    };

    std::string term_text, term2_text, elem_text, op_text, path_text;
    std::string strategy_text = "normal";
    int depth = 3;

    CLI::App* cmd_parse = app.add_subcommand("parse", "parse and print a term");
    cmd_parse->add_option("term", term_text, "lambda term")->required();

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "normalize a term");
    cmd_reduce->add_option("term", term_text)->required();
    cmd_reduce->add_option("--strategy", strategy_text, "normal | head")->capture_default_str();
    add_common(cmd_reduce, false);

    CLI::App* cmd_solvable = app.add_subcommand("solvable", "head-normalization semi-decision");
    cmd_solvable->add_option("term", term_text)->required();
    add_common(cmd_solvable, false);

    CLI::App* cmd_bohm = app.add_subcommand("bohm", "Boehm approximant");
    cmd_bohm->add_option("term", term_text)->required();
    cmd_bohm->add_option("--depth", depth, "tree depth")->capture_default_str();
    add_common(cmd_bohm, false);

    CLI::App* cmd_cl = app.add_subcommand("cl", "combinatory logic: reduce or translate");
    cmd_cl->add_option("term", term_text, "CL term (or lambda term with --from-lambda)")
        ->required();
    bool from_lambda = false;
    cmd_cl->add_flag("--from-lambda", from_lambda, "translate a lambda term to CL");
    add_common(cmd_cl, false);

    CLI::App* cmd_central = app.add_subcommand("central", "centrality report for a closed term");
    cmd_central->add_option("term", term_text)->required();
    add_common(cmd_central, false);

    CLI::App* cmd_bool = app.add_subcommand("bool", "boolean operations of the central algebra");
    cmd_bool->add_option("op", op_text, "or | and | not")->required();
    cmd_bool->add_option("e", term_text)->required();
    cmd_bool->add_option("d", term2_text);
    add_common(cmd_bool, false);

    CLI::App* cmd_interp = app.add_subcommand("interp", "interpret a term in a model");
    cmd_interp->add_option("term", term_text)->required();
    add_common(cmd_interp, true);

    CLI::App* cmd_member = app.add_subcommand("member", "membership in a web interpretation");
    cmd_member->add_option("element", elem_text)->required();
    cmd_member->add_option("term", term_text)->required();
    add_common(cmd_member, true);

    CLI::App* cmd_compare = app.add_subcommand("compare", "compare two interpretations");
    cmd_compare->add_option("term1", term_text)->required();
    cmd_compare->add_option("term2", term2_text)->required();
    add_common(cmd_compare, true);

    CLI::App* cmd_web = app.add_subcommand("web", "partial web utilities");
    CLI::App* cmd_web_check = cmd_web->add_subcommand("check", "validate a partial web file");
    cmd_web_check->add_option("path", path_text)->required();
    cmd_web->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report report;
    report.pretty = pretty;
    json& doc = report.doc;
    json argv_echo = json::array();
    for (int i = 1; i < argc; ++i) argv_echo.push_back(argv[i]);
    json inputs = obj();
    json result = obj();
    auto line = [&](std::string s) { report.pretty_lines.push_back(std::move(s)); };

    try {
        if (*cmd_parse) {
            doc["command"] = "parse";
            lamb::Term t = lamb::parse(term_text);
            inputs["term"] = lamb::to_string(t);
            result["term"] = lamb::to_string(t);
            json fv = json::array();
            for (const std::string& v : lamb::free_variables(t)) fv.push_back(v);
            result["free_variables"] = std::move(fv);
            result["closed"] = lamb::is_closed(t);
            line(lamb::to_string(t));
        } else if (*cmd_reduce) {
            doc["command"] = "reduce";
            lamb::Term t = lamb::parse(term_text);
            inputs["term"] = lamb::to_string(t);
            inputs["strategy"] = strategy_text;
            lamb::Strategy strat;
            if (strategy_text == "normal") strat = lamb::Strategy::NormalOrder;
            else if (strategy_text == "head") strat = lamb::Strategy::HeadOrder;
            else throw lamb::Error("bad strategy '" + strategy_text + "'");
            auto r = lamb::normalize(t, strat, budgets.fuel);
            result["status"] = r.finished ? "finished" : "exhausted";
            result["steps"] = r.steps;
            result["term"] = lamb::to_string(r.term);
            report.exit_code = r.finished ? 0 : 1;
            line((r.finished ? "finished after " : "exhausted after ") +
                 std::to_string(r.steps) + " steps: " + lamb::to_string(r.term));
        } else if (*cmd_solvable) {
            doc["command"] = "solvable";
            lamb::Term t = lamb::parse(term_text);
            inputs["term"] = lamb::to_string(t);
            auto hnf = lamb::is_solvable(t, budgets.fuel);
            if (hnf) {
                result["solvable"] = "yes";
                result["hnf"] = lamb::to_string(*hnf);
                line("solvable, hnf: " + lamb::to_string(*hnf));
            } else {
                result["solvable"] = "unknown";
                report.exit_code = 1;
                line("unknown (no hnf within fuel)");
            }
        } else if (*cmd_bohm) {
            doc["command"] = "bohm";
            lamb::Term t = lamb::parse(term_text);
            inputs["term"] = lamb::to_string(t);
            inputs["depth"] = depth;
            lamb::BohmApprox b = lamb::bohm_approximant(t, depth, budgets.fuel);
            result["approximant"] = lamb::to_string(b);
            result["tree"] = bohm_to_json(b);
            line(lamb::to_string(b));
        } else if (*cmd_cl) {
            doc["command"] = "cl";
            if (from_lambda) {
                lamb::Term t = lamb::parse(term_text);
                inputs["term"] = lamb::to_string(t);
                lamb::CLTerm cl = lamb::lambda_to_cl(t);
                result["cl"] = lamb::to_string(cl);
                line(lamb::to_string(cl));
            } else {
                lamb::CLTerm t = lamb::parse_cl(term_text);
                inputs["term"] = lamb::to_string(t);
                auto r = lamb::cl_reduce(t, budgets.fuel);
                result["status"] = r.finished ? "finished" : "exhausted";
                result["steps"] = r.steps;
                result["term"] = lamb::to_string(r.term);
                result["lambda_image"] = lamb::to_string(lamb::cl_to_lambda(r.term));
                report.exit_code = r.finished ? 0 : 1;
                line((r.finished ? "finished: " : "exhausted: ") + lamb::to_string(r.term));
            }
        } else if (*cmd_central) {
            doc["command"] = "central";
            lamb::Term t = lamb::parse(term_text);
            inputs["term"] = lamb::to_string(t);
            lamb::CentralityReport rep = lamb::is_central(t, budgets.fuel);
            const char* verdict = rep.verdict == lamb::CentralityVerdict::Central ? "central"
                                  : rep.verdict == lamb::CentralityVerdict::NotCentral
                                      ? "not-central"
                                      : "inconclusive";
            result["verdict"] = verdict;
            json axioms = obj();
            axioms["i"] = axiom_to_json(rep.axiom_i);
            axioms["ii"] = axiom_to_json(rep.axiom_ii);
            axioms["iii"] = axiom_to_json(rep.axiom_iii);
            axioms["iv"] = axiom_to_json(rep.axiom_iv);
            result["axioms"] = std::move(axioms);
            report.exit_code = rep.verdict == lamb::CentralityVerdict::Inconclusive ? 1 : 0;
            line(std::string("verdict: ") + verdict);
        } else if (*cmd_bool) {
            doc["command"] = "bool";
            lamb::Term e = lamb::parse(term_text);
            inputs["e"] = lamb::to_string(e);
            lamb::Term built;
            if (op_text == "not") {
                built = lamb::bool_not(e);
            } else {
                if (term2_text.empty()) throw lamb::Error("'" + op_text + "' needs two terms");
                lamb::Term d = lamb::parse(term2_text);
                inputs["d"] = lamb::to_string(d);
                if (op_text == "or") built = lamb::bool_or(e, d);
                else if (op_text == "and") built = lamb::bool_and(e, d);
                else throw lamb::Error("bad op '" + op_text + "': expected or | and | not");
            }
            inputs["op"] = op_text;
            result["term"] = lamb::to_string(built);
            auto r = lamb::normalize(built, lamb::Strategy::NormalOrder, budgets.fuel);
            if (r.finished) result["normal_form"] = lamb::to_string(r.term);
            line(lamb::to_string(built));
        } else if (*cmd_interp) {
            doc["command"] = "interp";
            lamb::Term t = lamb::parse(term_text);
            inputs["term"] = lamb::to_string(t);
            ModelSpec model = parse_model(model_text);
            inputs["model"] = model_text;
            if (model.kind == ModelSpec::Kind::Relational) {
                if (!env_path.empty())
                    throw lamb::Error("--env applies to web models only");
                lamb::RelInterp rel = lamb::interp_d(t, budgets.size, budgets.fuel);
                result["count"] = rel.size();
                json entries = json::array();
                for (const lamb::RelPair& p : rel) entries.push_back(relpair_to_json(p));
                result["relation"] = std::move(entries);
                for (const lamb::RelPair& p : rel) line(lamb::to_string(p));
            } else {
                lamb::CompletedWeb web = make_web(model);
                lamb::GEnv env;
                if (!env_path.empty()) env = load_genv(env_path, web);
                lamb::WebSet elems =
                    lamb::interp_elements(t, env, web, budgets.rank, budgets.fuel);
                result["count"] = elems.size();
                json list = json::array();
                for (const lamb::WebElem& e : elems) list.push_back(e.str());
                result["elements"] = std::move(list);
                for (const lamb::WebElem& e : elems) line(e.str());
            }
        } else if (*cmd_member) {
            doc["command"] = "member";
            ModelSpec model = parse_model(model_text);
            if (model.kind == ModelSpec::Kind::Relational)
                throw lamb::Error("member queries apply to web models only");
            lamb::Term t = lamb::parse(term_text);
            lamb::WebElem e = lamb::parse_web_elem(elem_text);
            inputs["term"] = lamb::to_string(t);
            inputs["element"] = e.str();
            inputs["model"] = model_text;
            lamb::CompletedWeb web = make_web(model);
            lamb::GEnv env;
            if (!env_path.empty()) env = load_genv(env_path, web);
            lamb::Tri m = lamb::member(e, t, env, web, budgets.fuel);
            const char* name = m == lamb::Tri::Yes ? "yes" : m == lamb::Tri::No ? "no" : "unknown";
            result["membership"] = name;
            report.exit_code = m == lamb::Tri::Unknown ? 1 : 0;
            line(name);
        } else if (*cmd_compare) {
            doc["command"] = "compare";
            lamb::Term t1 = lamb::parse(term_text);
            lamb::Term t2 = lamb::parse(term2_text);
            inputs["term1"] = lamb::to_string(t1);
            inputs["term2"] = lamb::to_string(t2);
            ModelSpec model = parse_model(model_text);
            inputs["model"] = model_text;
            if (model.kind == ModelSpec::Kind::Relational) {
                auto r = lamb::compare_in_d(t1, t2, budgets.size, budgets.fuel);
                result["verdict"] = verdict_name(r.verdict);
                json lo = json::array(), ro = json::array();
                for (const lamb::RelPair& p : r.left_only) lo.push_back(relpair_to_json(p));
                for (const lamb::RelPair& p : r.right_only) ro.push_back(relpair_to_json(p));
                result["left_only"] = std::move(lo);
                result["right_only"] = std::move(ro);
                line(verdict_name(r.verdict));
            } else {
                lamb::CompletedWeb web = make_web(model);
                lamb::GEnv env;
                if (!env_path.empty()) env = load_genv(env_path, web);
                auto r = lamb::compare_in_web(t1, t2, web, budgets.rank, budgets.fuel, env);
                result["verdict"] = verdict_name(r.verdict);
                json lo = json::array(), ro = json::array();
                for (const lamb::WebElem& e : r.left_only) lo.push_back(e.str());
                for (const lamb::WebElem& e : r.right_only) ro.push_back(e.str());
                result["left_only"] = std::move(lo);
                result["right_only"] = std::move(ro);
                line(verdict_name(r.verdict));
            }
        } else if (*cmd_web_check) {
            doc["command"] = "web check";
            inputs["path"] = path_text;
            lamb::PartialWeb pw = load_web(path_text);
            lamb::CompletedWeb web = lamb::free_completion(pw);
            result["atoms"] = pw.atoms.size();
            result["codings"] = pw.codings.size();
            result["ok"] = true;
            line("ok: " + std::to_string(pw.atoms.size()) + " atoms, " +
                 std::to_string(pw.codings.size()) + " codings");
        }
    } catch (const lamb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    json b = obj();
    b["fuel"] = budgets.fuel;
    if (*cmd_interp || *cmd_member || *cmd_compare) {
        if (model_text == "rel") b["size"] = budgets.size;
        else b["rank"] = budgets.rank;
    }
    if (*cmd_bohm) b["depth"] = depth;
    doc["argv"] = std::move(argv_echo);
    doc["inputs"] = std::move(inputs);
    doc["budgets"] = std::move(b);
    doc["result"] = std::move(result);

    report.emit();

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "wall_ms=" << elapsed << "\n";
    return report.exit_code;
}
