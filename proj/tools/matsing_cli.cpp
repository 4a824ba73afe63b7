// Command-line front end: assemble a session from flags or a JSON file,
// run it, print the canonical JSON report.
//
// Exit codes: 0 computed, 1 error, 2 computed with a
// not-finitely-determined verdict, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "matsing/session.hpp"

namespace {

using matsing::Json;

struct CommonFlags {
    std::string ring_vars;
    std::string field = "QQ";
    std::string matrix;
    std::string file;
    std::string group = "cglr";
    std::string space = "full";
    int j = -1;
    int rank = -1;
    std::string ders;
    std::string ideal;
    std::string by;
    unsigned jet_degree = 0;
    unsigned power_bound = 16;
    unsigned long long seed = 42;
    unsigned cases = 25;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--ring", f.ring_vars, "comma-separated variable names, e.g. x1,x2");
    cmd->add_option("--field", f.field, "QQ or GFp:<p> (default QQ)");
    cmd->add_option("--matrix", f.matrix,
                    "matrix entries: rows separated by ';', entries by ',', "
                    "e.g. \"x2,x1^2;x1^3,x2\"");
    cmd->add_option("--file", f.file, "session JSON file (flags override its fields)");
    cmd->add_option("--group", f.group, "gl|gr|glr|gcongr|aut|cgl|cgr|cglr|cgcongr");
    cmd->add_option("--space", f.space, "full|sym|skew");
    cmd->add_option("--j", f.j, "minor size / annihilator order");
    cmd->add_option("--rank", f.rank, "expected height for the singular-locus ideal");
    cmd->add_option("--ders", f.ders, "derivation family: full|m|m2");
    cmd->add_option("--ideal", f.ideal, "comma-separated ideal generators");
    cmd->add_option("--by", f.by, "comma-separated generators of the saturating ideal");
    cmd->add_option("--jet-degree", f.jet_degree, "truncation override for oracle checks");
    cmd->add_option("--power-bound", f.power_bound, "radical membership power bound");
    cmd->add_option("--seed", f.seed, "random seed for the property suite");
    cmd->add_option("--cases", f.cases, "case count per property");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Json session_doc(const CommonFlags& f, const std::string& task) {
    Json doc;
    if (!f.file.empty()) {
        std::ifstream in(f.file);
        if (!in) throw matsing::input_error("cannot open session file: " + f.file);
        std::ostringstream ss;
        ss << in.rdbuf();
        doc = Json::parse(ss.str());
    }
    doc["schema"] = "1";
    doc["task"] = task;
    if (!f.ring_vars.empty()) {
        Json vars = Json::array();
        for (auto& v : split(f.ring_vars, ',')) vars.push_back(v);
        doc["ring"] = Json{{"vars", vars}, {"field", f.field}};
    } else if (doc.contains("ring") && !doc["ring"].contains("field")) {
        doc["ring"]["field"] = f.field;
    }
    if (!f.matrix.empty()) {
        Json rows = Json::array();
        for (auto& row : split(f.matrix, ';')) {
            Json r = Json::array();
            for (auto& e : split(row, ',')) r.push_back(e);
            rows.push_back(r);
        }
        doc["matrix"] = rows;
    }
    doc["group"] = f.group;
    doc["space"] = f.space;
    Json& o = doc["options"];
    if (!o.is_object()) o = Json::object();
    if (f.j >= 0) o["j"] = f.j;
    if (f.rank >= 0) o["rank"] = f.rank;
    if (!f.ders.empty()) o["ders"] = f.ders;
    if (!f.ideal.empty()) {
        Json arr = Json::array();
        for (auto& g : split(f.ideal, ',')) arr.push_back(g);
        o["ideal"] = arr;
    }
    if (!f.by.empty()) {
        Json arr = Json::array();
        for (auto& g : split(f.by, ',')) arr.push_back(g);
        o["by"] = arr;
    }
    o["jet_degree"] = f.jet_degree;
    o["power_bound"] = f.power_bound;
    o["seed"] = f.seed;
    o["cases"] = f.cases;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"determinacy invariants of matrices over local rings"};
    app.require_subcommand(1);

    const std::vector<std::string> tasks = {"minors", "anncoker", "sing", "sat",
                                            "loewy", "t1", "verdict", "suite"};
    const std::map<std::string, std::string> descriptions = {
        {"minors", "determinantal ideals I_j with heights"},
        {"anncoker", "annihilator of the cokernel (generalized with --j)"},
        {"sing", "singular-locus ideal of expected height --rank"},
        {"sat", "saturation of --ideal by --by"},
        {"loewy", "cofiniteness and Loewy length of --ideal"},
        {"t1", "annihilator of the tangent module for --group"},
        {"verdict", "full determinacy report for --group"},
        {"suite", "randomized property suite (seeded)"},
    };
    std::map<std::string, CommonFlags> flags;
    for (const auto& t : tasks) add_common(app.add_subcommand(t, descriptions.at(t)), flags[t]);

    CLI11_PARSE(app, argc, argv);

    const std::string task = app.get_subcommands().front()->get_name();
    try {
        Json doc = session_doc(flags[task], task);
        matsing::Session s = matsing::parse_session(doc);
        matsing::RunResult r = matsing::run(s);
        std::cout << r.report.dump(2) << "\n";
        return r.exit_code;
    } catch (const matsing::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
