#include "matsing/session.hpp"

#include <algorithm>
#include <chrono>

#include "matsing/suite.hpp"

namespace matsing {

namespace {

SpaceTag parse_space(const std::string& s) {
    if (s == "full") return SpaceTag::Full;
    if (s == "sym") return SpaceTag::Symmetric;
    if (s == "skew") return SpaceTag::SkewSymmetric;
    throw input_error("space: expected full, sym, or skew, got '" + s + "'");
}

std::vector<Polynomial> parse_gens(const RingPtr& ring, const Json& arr, const std::string& where) {
    if (!arr.is_array()) throw input_error(where + ": expected an array of polynomial strings");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string())
            throw input_error(where + "[" + std::to_string(i) + "]: expected a string");
        try {
            out.push_back(parse_poly(ring, arr[i].get<std::string>()));
        } catch (const input_error& e) {
            throw input_error(where + "[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

}  // namespace

Session parse_session(const Json& doc) {
    if (!doc.is_object()) throw input_error("session: expected a JSON object");
    if (doc.contains("schema") && doc["schema"] != "1")
        throw input_error("schema: only version \"1\" is supported");

    Session s;
    if (!doc.contains("ring") || !doc["ring"].is_object())
        throw input_error("ring: missing or not an object");
    const Json& ring = doc["ring"];
    if (!ring.contains("vars") || !ring["vars"].is_array() || ring["vars"].empty())
        throw input_error("ring.vars: expected a non-empty array of names");
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < ring["vars"].size(); ++i) {
        if (!ring["vars"][i].is_string())
            throw input_error("ring.vars[" + std::to_string(i) + "]: expected a string");
        vars.push_back(ring["vars"][i].get<std::string>());
    }
    Field field = Field::rationals();
    if (ring.contains("field")) {
        if (!ring["field"].is_string()) throw input_error("ring.field: expected a string");
        field = Field::parse(ring["field"].get<std::string>());
    }
    s.ring = Ring::make(vars, field);

    SpaceTag tag = SpaceTag::Full;
    if (doc.contains("space")) {
        if (!doc["space"].is_string()) throw input_error("space: expected a string");
        tag = parse_space(doc["space"].get<std::string>());
    }

    if (doc.contains("matrix")) {
        const Json& mat = doc["matrix"];
        if (!mat.is_array() || mat.empty()) throw input_error("matrix: expected a non-empty array");
        std::size_t rows = mat.size();
        std::size_t cols = 0;
        std::vector<Polynomial> entries;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!mat[i].is_array())
                throw input_error("matrix[" + std::to_string(i) + "]: expected an array");
            if (i == 0) {
                cols = mat[i].size();
                if (cols == 0) throw input_error("matrix[0]: empty row");
            } else if (mat[i].size() != cols) {
                throw input_error("matrix[" + std::to_string(i) + "]: row length " +
                                  std::to_string(mat[i].size()) + " differs from " +
                                  std::to_string(cols));
            }
            for (std::size_t jj = 0; jj < cols; ++jj) {
                const std::string where =
                    "matrix[" + std::to_string(i) + "][" + std::to_string(jj) + "]";
                if (!mat[i][jj].is_string()) throw input_error(where + ": expected a string");
                try {
                    entries.push_back(parse_poly(s.ring, mat[i][jj].get<std::string>()));
                } catch (const input_error& e) {
                    throw input_error(where + ": " + e.what());
                }
            }
        }
        try {
            s.matrix = PolyMatrix(s.ring, rows, cols, std::move(entries), tag);
        } catch (const input_error& e) {
            throw input_error(std::string("matrix: ") + e.what());
        }
    }

    if (doc.contains("group")) {
        if (!doc["group"].is_string()) throw input_error("group: expected a string");
        s.group = parse_group(doc["group"].get<std::string>());
    }
    if (doc.contains("task")) {
        if (!doc["task"].is_string()) throw input_error("task: expected a string");
        s.task = doc["task"].get<std::string>();
    }
    static const std::vector<std::string> tasks = {"minors", "anncoker", "sing", "sat",
                                                   "loewy", "t1", "verdict", "suite"};
    if (std::find(tasks.begin(), tasks.end(), s.task) == tasks.end())
        throw input_error("task: unknown task '" + s.task + "'");

    if (doc.contains("options")) {
        const Json& o = doc["options"];
        if (!o.is_object()) throw input_error("options: expected an object");
        if (o.contains("j")) s.j = o["j"].get<int>();
        if (o.contains("rank")) s.rank = o["rank"].get<int>();
        if (o.contains("ders")) {
            std::string d = o["ders"].get<std::string>();
            if (d == "full") s.ders = DerivationSet::full();
            else if (d == "m") s.ders = DerivationSet::in_max();
            else if (d == "m2") s.ders = DerivationSet::in_max_sq();
            else throw input_error("options.ders: expected full, m, or m2");
        }
        if (o.contains("ideal")) s.ideal_gens = parse_gens(s.ring, o["ideal"], "options.ideal");
        if (o.contains("by")) s.by_gens = parse_gens(s.ring, o["by"], "options.by");
        if (o.contains("jet_degree")) s.jet_degree = o["jet_degree"].get<std::uint32_t>();
        if (o.contains("power_bound")) s.power_bound = o["power_bound"].get<std::uint32_t>();
        if (o.contains("seed")) s.seed = o["seed"].get<std::uint64_t>();
        if (o.contains("cases")) s.cases = o["cases"].get<std::uint32_t>();
    }
    return s;
}

Session parse_session_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("session JSON: ") + e.what());
    }
    return parse_session(doc);
}

Json ideal_to_json(const Ideal& I) {
    Json arr = Json::array();
    for (const auto& s : I.canonical_strings()) arr.push_back(s);
    return arr;
}

Json report_to_json(const DeterminacyReport& rep) {
    Json r;
    r["group"] = group_token(rep.group);
    r["space"] = space_tag_name(rep.space);
    r["m"] = rep.m;
    r["n"] = rep.n;
    r["p"] = rep.p;
    if (rep.transposed) r["transposed"] = true;
    Json hs = Json::array();
    for (const auto& h : rep.heights) {
        Json row;
        row["j"] = h.j;
        row["height"] = h.height;
        if (h.applicable) row["expected"] = h.expected;
        row["pass"] = h.pass;
        hs.push_back(row);
    }
    r["heights"] = hs;
    if (rep.lower) r["lower"] = ideal_to_json(*rep.lower);
    if (rep.exact) r["exact"] = ideal_to_json(*rep.exact);
    if (rep.upper) r["upper"] = ideal_to_json(*rep.upper);
    Json cof;
    cof["cofinite"] = rep.exact_cofinite;
    if (rep.exact_loewy) cof["loewy"] = *rep.exact_loewy;
    r["annihilator"] = cof;
    if (rep.bounds) {
        r["order_bounds"] = Json{{"lo", rep.bounds->first}, {"hi", rep.bounds->second}};
    }
    r["verdict"] = rep.verdict;
    if (!rep.reason.empty()) r["reason"] = rep.reason;
    Json checks;
    if (rep.lower_in_exact) checks["lower_in_exact"] = *rep.lower_in_exact;
    if (rep.exact_in_upper) checks["exact_in_upper"] = *rep.exact_in_upper;
    if (!checks.empty()) r["checks"] = checks;
    return r;
}

namespace {

const PolyMatrix& need_matrix(const Session& s) {
    if (!s.matrix) throw input_error("this task needs a matrix");
    return *s.matrix;
}

Ideal session_ideal(const Session& s) {
    if (s.ideal_gens) return Ideal(s.ring, *s.ideal_gens);
    if (s.matrix && s.j) return minors(*s.matrix, *s.j);
    throw input_error("this task needs options.ideal, or a matrix with options.j");
}

Json run_task(const Session& s, int& exit_code) {
    Json out;
    if (s.task == "minors") {
        const PolyMatrix& A = need_matrix(s);
        Json list = Json::array();
        auto one = [&](int j) {
            Ideal I = minors(A, j);
            Json e;
            e["j"] = j;
            e["gens"] = ideal_to_json(I);
            e["height"] = height(I);
            list.push_back(e);
        };
        if (s.j) one(*s.j);
        else
            for (int j = 1; j <= static_cast<int>(std::min(A.rows(), A.cols())); ++j) one(j);
        out["minors"] = list;
    } else if (s.task == "anncoker") {
        const PolyMatrix& A = need_matrix(s);
        Ideal I = s.j ? ann_coker_j(A, *s.j) : ann_coker(A);
        if (s.j) out["j"] = *s.j;
        out["anncoker"] = ideal_to_json(I);
    } else if (s.task == "sing") {
        if (!s.rank) throw input_error("sing needs options.rank");
        Ideal J = session_ideal(s);
        Ideal S = sing(J, *s.rank, s.ders);
        out["rank"] = *s.rank;
        out["ders"] = s.ders.name();
        out["sing"] = ideal_to_json(S);
    } else if (s.task == "sat") {
        if (!s.ideal_gens || !s.by_gens)
            throw input_error("sat needs options.ideal and options.by");
        auto r = saturate(Ideal(s.ring, *s.ideal_gens), Ideal(s.ring, *s.by_gens));
        out["saturation"] = ideal_to_json(r.ideal);
        out["iterations"] = r.iterations;
    } else if (s.task == "loewy") {
        Ideal I = session_ideal(s);
        auto w = contains_power_of_max(I);
        out["cofinite"] = w.has_value();
        if (w) out["loewy"] = loewy_length(I);
    } else if (s.task == "t1") {
        const PolyMatrix& A = need_matrix(s);
        Ideal I = t1_ann(s.group, A);
        out["group"] = group_token(s.group);
        out["t1_ann"] = ideal_to_json(I);
        auto w = contains_power_of_max(I);
        out["cofinite"] = w.has_value();
        if (w) out["loewy"] = loewy_length(I);
    } else if (s.task == "verdict") {
        DeterminacyReport rep = verdict(s.group, need_matrix(s));
        out = report_to_json(rep);
        if (rep.verdict == "not-finitely-determined") exit_code = 2;
    } else if (s.task == "suite") {
        SuiteConfig cfg;
        cfg.field = s.ring->field;
        cfg.seed = s.seed;
        cfg.cases = s.cases;
        cfg.power_bound = s.power_bound;
        auto results = run_suite(cfg);
        Json list = Json::array();
        bool all = true;
        for (const auto& r : results) {
            Json e;
            e["name"] = r.name;
            e["pass"] = r.pass;
            e["cases"] = r.cases;
            if (!r.detail.empty()) e["detail"] = r.detail;
            all &= r.pass;
            list.push_back(e);
        }
        out["seed"] = s.seed;
        out["properties"] = list;
        out["all_pass"] = all;
        if (!all) exit_code = 1;
    }
    return out;
}

}  // namespace

RunResult run(const Session& s) {
    Json report;
    report["schema"] = "1";
    report["task"] = s.task;
    auto t0 = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        report["result"] = run_task(s, exit_code);
        report["ok"] = true;
    } catch (const budget_exceeded& e) {
        report["ok"] = false;
        report["error"] = e.what();
        report["work_spent"] = e.work_spent;
        exit_code = 3;
    }
    auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return {std::move(report), exit_code};
}

}  // namespace matsing
