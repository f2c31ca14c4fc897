#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordelab/catalog.hpp"
#include "ordelab/chains.hpp"
#include "ordelab/embedding.hpp"
#include "ordelab/error.hpp"
#include "ordelab/oracle.hpp"
#include "ordelab/poset_io.hpp"
#include "ordelab/verify.hpp"

namespace {

using nlohmann::ordered_json;

int exit_for(const ord::Error& e) {
    switch (e.code()) {
        case ord::Errc::BudgetExhausted:
        case ord::Errc::CapExceeded:
        case ord::Errc::WitnessSearchExhausted:
            return 2;
        default:
            return 1;
    }
}

int exit_for(ord::Status s) {
    switch (s) {
        case ord::Status::Verified: return 0;
        case ord::Status::Refuted: return 1;
        case ord::Status::UnknownAtDepth: return 2;
    }
    return 2;
}

std::string strip_catalog(const std::string& src) {
    return src.rfind("catalog:", 0) == 0 ? src.substr(8) : src;
}

ord::FinitePoset load_poset(const std::string& src) {
    if (src.rfind("catalog:", 0) == 0)
        return ord::make(ord::parse_family_spec(src.substr(8))).poset;
    std::ifstream in(src);
    if (!in) throw ord::Error(ord::Errc::BadInput, "cannot open " + src);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ord::poset_from_json(ss.str());
}

std::uint64_t resolve_budget(std::uint64_t flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("ORDELAB_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return std::uint64_t(v);
        } catch (const std::exception&) {
        }
        throw ord::Error(ord::Errc::BadSpec, std::string("ORDELAB_BUDGET: bad value '") + env + "'");
    }
    return ord::default_embed_budget;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw ord::Error(ord::Errc::BadInput, "cannot write " + out);
    f << text;
}

void emit(const ordered_json& doc, const std::string& out) { emit(doc.dump(2), out); }

ordered_json element_json(const ord::OraclePoset& o, std::uint64_t e) {
    return ordered_json{{"code", e}, {"name", o.describe(e)}, {"level", o.level(e)}};
}

ordered_json bits_json(const ord::Bits& b) {
    ordered_json arr = ordered_json::array();
    b.for_each([&](int i) { arr.push_back(i); });
    return arr;
}

struct VerifyArgs {
    std::string id;
    int max_size = 6;
    std::uint64_t seed = 1729;
    int k = -1;
    bool list = false;
};

int run_verify(const VerifyArgs& a) {
    if (a.list) {
        for (const std::string& id : ord::verify_ids()) std::cout << id << "\n";
        return 0;
    }
    if (a.id.empty())
        throw ord::Error(ord::Errc::BadSpec, "verify needs a theorem id (or --list)");
    ord::VerifyReport rep = ord::verify_theorem(a.id, a.max_size, a.seed, a.k);
    ordered_json doc{{"command", "verify"}, {"id", rep.id},      {"maxSize", a.max_size},
                     {"seed", a.seed},      {"ok", rep.ok},      {"cases", rep.cases},
                     {"detail", rep.detail}};
    if (a.k >= 0) doc["k"] = a.k;
    emit(doc, "");
    return rep.ok ? 0 : 1;
}

struct GenArgs {
    std::string spec;
    std::string format = "json";
    std::string out;
};

int run_gen(const GenArgs& a) {
    ord::CatalogEntry entry = ord::make(ord::parse_family_spec(strip_catalog(a.spec)));
    if (a.format == "dot")
        emit(ord::hasse_dot(entry.poset), a.out);
    else
        emit(ord::poset_to_json(entry.poset), a.out);
    std::cerr << "# " << entry.canonical_spec << ": n=" << entry.poset.size()
              << (entry.semi ? ", join-semilattice" : "") << "\n";
    return 0;
}

struct EmbedArgs {
    std::string mode = "join";
    std::string a, b;
    std::uint64_t budget = 0;
};

int run_embed(const EmbedArgs& a) {
    std::uint64_t budget = resolve_budget(a.budget);
    ord::FinitePoset pa = load_poset(a.a), pb = load_poset(a.b);
    ord::EmbedResult res;
    if (a.mode == "order") {
        res = ord::order_embed(pa, pb, budget);
    } else {
        ord::JoinSemilattice la = ord::JoinSemilattice::from_poset(pa);
        ord::JoinSemilattice lb = ord::JoinSemilattice::from_poset(pb);
        res = a.mode == "join" ? ord::join_embed(la, lb, budget)
                               : ord::sublattice_embed(la, lb, budget);
    }
    ordered_json doc{{"command", "embed"}, {"mode", a.mode},   {"a", strip_catalog(a.a)},
                     {"b", strip_catalog(a.b)}, {"found", bool(res.map)}, {"nodes", res.nodes}};
    if (res.map) doc["map"] = *res.map;
    emit(doc, "");
    return res.map ? 0 : 1;
}

struct ExtractArgs {
    std::string lemma;
    std::string family = "fin_sets";
    int k = 3;
    int depth = 20;
    int m = 4;
    std::string out;
};

int run_extract(const ExtractArgs& a) {
    ordered_json doc{{"command", "extract"}, {"lemma", a.lemma}, {"family", strip_catalog(a.family)}};
    if (a.lemma == "3.1") {
        auto o = ord::oracle(ord::parse_family_spec(strip_catalog(a.family)));
        ord::ExtractResult res = ord::lemma_3_1_extract(*o, a.k, a.depth);
        doc["k"] = a.k;
        doc["depth"] = a.depth;
        ordered_json xs = ordered_json::array();
        for (auto e : res.xs) xs.push_back(element_json(*o, e));
        doc["xs"] = xs;
        doc["chainIndices"] = res.chain_indices;
        doc["independent"] = res.independent;
        emit(doc, a.out);
        return res.independent ? 0 : 1;
    }
    if (a.lemma == "3.2") {
        auto o = ord::oracle(ord::parse_family_spec(strip_catalog(a.family)));
        ord::Lemma32Result res = ord::lemma_3_2_extract(*o, a.k, a.depth);
        doc["k"] = a.k;
        doc["depth"] = a.depth;
        doc["status"] = ord::status_name(res.status);
        doc["case"] = res.case_one ? "I" : "II";
        ordered_json xs = ordered_json::array(), ys = ordered_json::array();
        for (auto e : res.xs) xs.push_back(element_json(*o, e));
        for (auto e : res.ys) ys.push_back(element_json(*o, e));
        doc["xs"] = xs;
        doc["chainIndices"] = res.chain_indices;
        if (!res.case_one) doc["ys"] = ys;
        doc["conditionsOk"] = res.conditions_ok;
        doc["fInjective"] = res.f_injective;
        doc["fJoinPreserving"] = res.f_join_preserving;
        emit(doc, a.out);
        return exit_for(res.status);
    }
    if (a.lemma == "prop1.2") {
        ord::DescentFixture fix = ord::remark414_descent_fixture(a.m, std::max(a.depth, a.m + 2));
        ord::DescentResult res = ord::prop_1_2_descent(fix.q, fix.chain, fix.xs, a.m);
        doc["m"] = a.m;
        ordered_json ys = ordered_json::array();
        for (const auto& y : res.ys) ys.push_back(bits_json(y));
        doc["ys"] = ys;
        doc["iOmega"] = bits_json(res.i_omega);
        doc["qPrime"] = bits_json(res.q_prime);
        doc["dropWitness"] = res.drop_witness;
        ordered_json names = ordered_json::array();
        for (const auto& s : fix.labels) names.push_back(s);
        doc["groundNames"] = names;
        emit(doc, a.out);
        return 0;
    }
    if (a.lemma == "ramsey") {
        auto fam = ord::family_oracle(ord::parse_family_spec(strip_catalog(a.family)));
        ord::RamseyResult res = ord::ramsey_extract(*fam, a.m);
        doc["m"] = a.m;
        doc["stable"] = res.stable;
        ordered_json f = ordered_json::array();
        for (int i = 0; i <= a.m; ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j <= a.m; ++j)
                row.push_back(j > i ? ordered_json(fam->ground().describe(res.f[i][j]))
                                    : ordered_json(nullptr));
            f.push_back(row);
        }
        doc["f"] = f;
        ordered_json drops = ordered_json::array();
        for (const auto& [pos, witness] : res.drops)
            drops.push_back(ordered_json{{"position", pos},
                                         {"witness", fam->ground().describe(witness)}});
        doc["drops"] = drops;
        emit(doc, a.out);
        return res.drops.empty() ? 1 : 0;
    }
    throw ord::Error(ord::Errc::BadSpec, "unknown lemma '" + a.lemma + "'");
}

struct DiagnoseArgs {
    std::string family;
    int depth = 20;
    bool csv = false;
    std::uint64_t budget = 0;
    std::string out;
};

int run_diagnose(const DiagnoseArgs& a) {
    auto o = ord::oracle(ord::parse_family_spec(strip_catalog(a.family)));
    std::vector<ord::DiagnoseRow> rows = ord::diagnose(*o, a.depth, resolve_budget(a.budget));
    if (a.csv) {
        emit(ord::diagnose_csv(rows), a.out);
        return 0;
    }
    ordered_json table = ordered_json::array();
    for (const auto& r : rows)
        table.push_back(ordered_json{{"depth", r.depth},
                                     {"boolK", r.boolK},
                                     {"omegaK", r.omegaK},
                                     {"width", r.width},
                                     {"chainSteps", r.chainSteps}});
    emit(ordered_json{{"command", "diagnose"},
                      {"family", strip_catalog(a.family)},
                      {"rows", table}},
         a.out);
    return 0;
}

struct ExportArgs {
    std::string input;
    std::string format = "dot";
    std::string out;
};

int run_export(const ExportArgs& a) {
    ord::FinitePoset p = load_poset(a.input);
    emit(a.format == "json" ? ord::poset_to_json(p) : ord::hasse_dot(p), a.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordelab: posets, semilattices, ideal chains and their embeddings"};
    app.require_subcommand(1);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run a theorem sweep");
    verify->add_option("id", va.id, "theorem id (see --list)");
    verify->add_flag("--list", va.list, "print the known theorem ids and exit");
    verify->add_option("--max-size", va.max_size, "exhaustive sweep bound")->capture_default_str();
    verify->add_option("--seed", va.seed, "seed for randomized families")->capture_default_str();
    verify->add_option("--k", va.k, "pattern size for thm1.4 (default: sweep 2 and 3)");

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "build a catalog poset");
    gen->add_option("spec", ga.spec, "family spec, e.g. boolean:n=3")->required();
    gen->add_option("--export", ga.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    gen->add_option("--out", ga.out, "output file (stdout when absent)");

    EmbedArgs ea;
    CLI::App* embed = app.add_subcommand("embed", "search for an embedding of A into B");
    embed->add_option("--mode", ea.mode, "order, join or sublattice")
        ->check(CLI::IsMember({"order", "join", "sublattice"}))
        ->capture_default_str();
    embed->add_option("a", ea.a, "catalog:<spec> or a JSON poset file")->required();
    embed->add_option("b", ea.b, "catalog:<spec> or a JSON poset file")->required();
    embed->add_option("--budget", ea.budget, "search node budget (0 = env/default)");

    ExtractArgs xa;
    CLI::App* extract = app.add_subcommand("extract", "run a witness extraction");
    extract->add_option("--lemma", xa.lemma, "3.1, 3.2, prop1.2 or ramsey")
        ->check(CLI::IsMember({"3.1", "3.2", "prop1.2", "ramsey"}))
        ->required();
    extract->add_option("--family", xa.family, "oracle family spec")->capture_default_str();
    extract->add_option("--k", xa.k, "target independent-set / pattern size")
        ->capture_default_str();
    extract->add_option("--depth", xa.depth, "level search bound")->capture_default_str();
    extract->add_option("--m", xa.m, "chain length for prop1.2 / ramsey")->capture_default_str();
    extract->add_option("--out", xa.out, "output file (stdout when absent)");

    DiagnoseArgs da;
    CLI::App* diagnose = app.add_subcommand("diagnose", "growth indicators over truncations");
    diagnose->add_option("--family", da.family, "oracle family spec")->required();
    diagnose->add_option("--depth", da.depth, "max truncation depth")->capture_default_str();
    diagnose->add_flag("--csv", da.csv, "emit CSV instead of JSON");
    diagnose->add_option("--budget", da.budget, "per-embedding node budget (0 = env/default)");
    diagnose->add_option("--out", da.out, "output file (stdout when absent)");

    ExportArgs oa;
    CLI::App* exp = app.add_subcommand("export", "re-emit a poset as JSON or DOT");
    exp->add_option("input", oa.input, "catalog:<spec> or a JSON poset file")->required();
    exp->add_option("--format", oa.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    exp->add_option("--out", oa.out, "output file (stdout when absent)");

    int code = 0;
    auto started = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
        if (verify->parsed()) code = run_verify(va);
        else if (gen->parsed()) code = run_gen(ga);
        else if (embed->parsed()) code = run_embed(ea);
        else if (extract->parsed()) code = run_extract(xa);
        else if (diagnose->parsed()) code = run_diagnose(da);
        else if (exp->parsed()) code = run_export(oa);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ord::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = exit_for(e);
    }
    auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
    std::cerr << "# wall_ms=" << wall << "\n";
    return code;
}
