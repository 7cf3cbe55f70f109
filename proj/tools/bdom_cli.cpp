// bdom: command-line front end.
//
//   bdom invariant --family torus:3,4 --which Gamma --method both
//   bdom verify --family cycle --n 3..12 --which Gamma_b
//   bdom classify --graph tree.edges --oracle
//   bdom enumerate-check --max-n 9 --random 200
//   bdom generate --family lobster:12:2,A;5,C;8,B;11,C --out tree.edges
//
// Exit codes: 0 ok, 1 input error, 2 budget/capability, 3 verification mismatch.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdom/closed_forms.hpp"
#include "bdom/diametrical.hpp"
#include "bdom/errors.hpp"
#include "bdom/family.hpp"
#include "bdom/graph_io.hpp"
#include "bdom/solvers.hpp"
#include "bdom/trees.hpp"

using namespace bdom;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kCapability = 2;
constexpr int kMismatch = 3;

struct Common {
    std::string graph_file;
    std::string family;
    std::string out;
    std::uint64_t budget = 0;
    int max_vertices = 25;
};

SolverLimits limits_from(const Common& c) {
    SolverLimits l;
    l.max_vertices = c.max_vertices;
    if (const char* env = std::getenv("BD_BUDGET_NODES")) {
        try {
            std::size_t used = 0;
            l.node_budget = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw InputError(std::string("BD_BUDGET_NODES must be a non-negative integer, got '") + env + "'");
        }
    }
    if (c.budget > 0) l.node_budget = c.budget;
    return l;
}

Graph load_graph(const Common& c) {
    if (!c.graph_file.empty() && !c.family.empty()) throw InputError("give either --graph or --family, not both");
    if (!c.graph_file.empty()) return read_edge_list_file(c.graph_file);
    if (!c.family.empty()) return parse_family(c.family).build();
    throw InputError("a graph source is required: --graph FILE or --family SPEC");
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write '" + out + "'");
    f << text;
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

json formula_json(Invariant inv, const FormulaResult& r) {
    return {{"invariant", to_string(inv)},
            {"value", r.value},
            {"method", to_string(Method::closed_form)},
            {"source", r.source},
            {"applicability", r.applicability}};
}

// ---- invariant ------------------------------------------------------------

struct InvariantCmd {
    Common common;
    std::string which;
    std::string method = "exact";
};

int run_invariant(const InvariantCmd& cmd) {
    const Invariant inv = invariant_from_string(cmd.which);
    const bool want_exact = cmd.method != "closed-form";
    const bool want_formula = cmd.method != "exact";

    std::optional<FormulaResult> formula;
    if (want_formula) {
        if (cmd.common.family.empty()) throw CapabilityError("closed forms need a --family graph");
        formula = closed_form(parse_family(cmd.common.family), inv);
    }
    std::optional<InvariantReport> exact;
    if (want_exact) exact = solve(inv, load_graph(cmd.common), limits_from(cmd.common));

    if (exact && formula) {
        const bool match = exact->value == formula->value;
        emit(pretty({{"exact", to_json(*exact)}, {"closed_form", formula_json(inv, *formula)}, {"match", match}}),
             cmd.common.out);
        return match ? kOk : kMismatch;
    }
    emit(pretty(exact ? to_json(*exact) : formula_json(inv, *formula)), cmd.common.out);
    return kOk;
}

// ---- verify ---------------------------------------------------------------

struct Range {
    int lo = 0, hi = -1;
};

Range parse_range(const std::string& s, const std::string& what) {
    Range r;
    try {
        const auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
        } else {
            const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
            r.lo = std::stoi(a, &used);
            if (used != a.size()) throw std::invalid_argument(s);
            r.hi = std::stoi(b, &used);
            if (used != b.size()) throw std::invalid_argument(s);
        }
    } catch (const std::exception&) {
        throw InputError(what + " range '" + s + "' should look like 3..12 or 5");
    }
    if (r.lo > r.hi) throw InputError(what + " range '" + s + "' is empty");
    return r;
}

struct VerifyCmd {
    std::string family;
    std::string which;
    std::string m_range;
    std::string n_range;
    std::string format = "csv";
    std::string out;
    bool timing = false;
    int jobs = 1;
    std::uint64_t budget = 0;
    int max_vertices = 25;
};

struct Row {
    std::string family;
    std::optional<int> m;
    int n = 0;
    std::string invariant;
    std::string closed_form;
    std::string exact;
    std::string match;  // "true", "false" or "" when either side was skipped
    std::optional<std::uint64_t> nodes;
    long long millis = 0;
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

Row verify_point(const Family& fam, const std::string& which, const SolverLimits& limits, bool timing) {
    Row row;
    row.family = to_string(fam.kind);
    if (fam.kind == Family::Kind::grid || fam.kind == Family::Kind::torus) row.m = fam.m;
    row.n = fam.n;
    row.invariant = which;

    const bool diam = which == "diametrical";
    try {
        row.closed_form = diam ? bool_str(closed_form_diametrical(fam))
                               : std::to_string(closed_form(fam, invariant_from_string(which)).value);
    } catch (const DomainError&) {
        row.closed_form = "skipped:domain";
    } catch (const CapabilityError&) {
        // Known family but only a bound is stated at this point.
        row.closed_form = "skipped:domain";
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const Graph g = fam.build();
        if (diam) {
            row.exact = bool_str(is_diametrical_exact(g, limits));
        } else {
            auto r = solve(invariant_from_string(which), g, limits);
            row.exact = std::to_string(r.value);
            row.nodes = r.nodes;
        }
    } catch (const CapabilityError&) {
        row.exact = "skipped:budget";
    } catch (const DomainError&) {
        row.exact = "skipped:domain";
    }
    if (timing) {
        row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
    }
    if (row.closed_form.rfind("skipped", 0) != 0 && row.exact.rfind("skipped", 0) != 0) {
        row.match = bool_str(row.closed_form == row.exact);
    }
    return row;
}

int run_verify(const VerifyCmd& cmd) {
    const Family::Kind kind = family_kind_from_string(cmd.family);
    if (kind == Family::Kind::lobster) throw InputError("verify does not sweep lobsters; use classify");
    if (cmd.which != "diametrical") invariant_from_string(cmd.which);
    if (cmd.format != "csv" && cmd.format != "json") throw InputError("--format must be csv or json");
    if (cmd.n_range.empty()) throw InputError("verify needs --n");
    const bool two_params = kind == Family::Kind::grid || kind == Family::Kind::torus;
    if (two_params && cmd.m_range.empty()) throw InputError("verify needs --m for " + cmd.family);
    if (!two_params && !cmd.m_range.empty()) throw InputError("--m only applies to grid and torus sweeps");

    Common common;
    common.budget = cmd.budget;
    common.max_vertices = cmd.max_vertices;
    const SolverLimits limits = limits_from(common);

    // Points are visited in (m, n) order, so the report is the same however
    // the work is scheduled.
    const Range nr = parse_range(cmd.n_range, "--n");
    const Range mr = two_params ? parse_range(cmd.m_range, "--m") : Range{0, 0};
    std::vector<Row> rows;
    for (int m = mr.lo; m <= mr.hi; ++m) {
        for (int n = nr.lo; n <= nr.hi; ++n) {
            if (two_params && m > n) continue;
            Family fam;
            fam.kind = kind;
            fam.m = two_params ? m : 0;
            fam.n = n;
            rows.push_back(verify_point(fam, cmd.which, limits, cmd.timing));
        }
    }
    if (rows.empty()) throw InputError("the sweep has no points with m <= n");

    bool mismatch = false;
    std::ostringstream os;
    if (cmd.format == "csv") {
        os << "family,m,n,invariant,closed_form,exact,match,nodes,millis\n";
        for (const auto& r : rows) {
            os << r.family << ',' << (r.m ? std::to_string(*r.m) : "") << ',' << r.n << ',' << r.invariant << ','
               << r.closed_form << ',' << r.exact << ',' << r.match << ','
               << (r.nodes ? std::to_string(*r.nodes) : "") << ',' << r.millis << '\n';
            mismatch = mismatch || r.match == "false";
        }
    } else {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"family", r.family},
                           {"m", r.m ? json(*r.m) : json(nullptr)},
                           {"n", r.n},
                           {"invariant", r.invariant},
                           {"closed_form", r.closed_form},
                           {"exact", r.exact},
                           {"match", r.match.empty() ? json(nullptr) : json(r.match == "true")},
                           {"nodes", r.nodes ? json(*r.nodes) : json(nullptr)},
                           {"millis", r.millis}});
            mismatch = mismatch || r.match == "false";
        }
        os << arr.dump(2) << '\n';
    }
    emit(os.str(), cmd.out);
    return mismatch ? kMismatch : kOk;
}

// ---- classify -------------------------------------------------------------

struct ClassifyCmd {
    Common common;
    bool oracle = false;
};

int run_classify(const ClassifyCmd& cmd) {
    const Graph t = load_graph(cmd.common);
    const Verdict v = classify_tree(t);
    json j = to_json(v);
    int code = kOk;
    if (cmd.oracle) {
        const bool exact = is_diametrical_exact(t, limits_from(cmd.common));
        j["oracle"] = {{"diametrical", exact}, {"diameter", t.order() > 1 ? metrics(t).diameter() : 0}};
        j["match"] = exact == v.diametrical;
        if (exact != v.diametrical) code = kMismatch;
    }
    emit(pretty(j), cmd.common.out);
    return code;
}

// ---- enumerate-check --------------------------------------------------------

struct EnumerateCmd {
    int max_n = 9;
    int random = 0;
    int random_min = 10;
    int random_max = 14;
    std::uint64_t seed = 0;
    std::string dump_dir = "disagreements";
    std::string out;
    std::uint64_t budget = 0;
    int max_vertices = 25;
};

int run_enumerate(const EnumerateCmd& cmd) {
    if (cmd.max_n < 1) throw InputError("--max-n must be at least 1");
    if (cmd.random < 0) throw InputError("--random must be non-negative");
    Common common;
    common.budget = cmd.budget;
    common.max_vertices = cmd.max_vertices;
    const SolverLimits limits = limits_from(common);

    struct Tally {
        int trees = 0, diametrical = 0, agreements = 0, disagreements = 0;
        json to_json() const {
            return {{"trees", trees}, {"diametrical", diametrical}, {"agreements", agreements},
                    {"disagreements", disagreements}};
        }
    };
    Tally exhaustive, sampled;
    json dumped = json::array();

    auto check = [&](const Graph& t, Tally& tally, const std::string& name) {
        const bool claimed = classify_tree(t).diametrical;
        const bool exact = is_diametrical_exact(t, limits);
        ++tally.trees;
        tally.diametrical += exact;
        if (claimed == exact) {
            ++tally.agreements;
            return;
        }
        ++tally.disagreements;
        std::filesystem::create_directories(cmd.dump_dir);
        const std::string path = (std::filesystem::path(cmd.dump_dir) / (name + ".edges")).string();
        std::ostringstream header;
        header << "# classifier " << (claimed ? "diametrical" : "non-diametrical") << ", oracle "
               << (exact ? "diametrical" : "non-diametrical") << "\n";
        std::ofstream f(path);
        if (!f) throw InputError("cannot write '" + path + "'");
        f << header.str() << serialize(t);
        dumped.push_back(path);
    };

    TreeEnumerator trees(cmd.max_n);
    int index = 0;
    while (auto t = trees.next()) check(*t, exhaustive, "exhaustive-n" + std::to_string(t->order()) + "-" + std::to_string(index++));
    if (cmd.random > 0) {
        auto sample = seeded_random_trees(cmd.random, cmd.random_min, cmd.random_max, cmd.seed);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            check(sample[i], sampled, "random-seed" + std::to_string(cmd.seed) + "-" + std::to_string(i));
        }
    }

    Tally total;
    for (const Tally* t : {&exhaustive, &sampled}) {
        total.trees += t->trees;
        total.diametrical += t->diametrical;
        total.agreements += t->agreements;
        total.disagreements += t->disagreements;
    }
    json j = total.to_json();
    j["exhaustive"] = exhaustive.to_json();
    j["exhaustive"]["max_n"] = cmd.max_n;
    j["random"] = sampled.to_json();
    j["random"]["seed"] = cmd.seed;
    j["random"]["orders"] = {cmd.random_min, cmd.random_max};
    j["dumped"] = dumped;
    emit(pretty(j), cmd.out);
    return total.disagreements == 0 ? kOk : kMismatch;
}

// ---- generate ---------------------------------------------------------------

struct GenerateCmd {
    std::string family;
    std::string format = "edges";
    std::string out;
};

int run_generate(const GenerateCmd& cmd) {
    const Graph g = parse_family(cmd.family).build();
    if (cmd.format == "edges") {
        emit(serialize(g), cmd.out);
    } else if (cmd.format == "json") {
        emit(pretty(to_json(g)), cmd.out);
    } else {
        throw InputError("--format must be edges or json");
    }
    return kOk;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--graph", c.graph_file, "Edge-list file");
    sub->add_option("--family", c.family, "Family spec, e.g. torus:3,4 or lobster:6:1,C;3,C");
    sub->add_option("--out", c.out, "Output file (default stdout)");
    sub->add_option("--budget", c.budget, "Search-node cap (overrides BD_BUDGET_NODES)");
    sub->add_option("--max-vertices", c.max_vertices, "Vertex cap for exact solvers")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domination and broadcast-domination invariants of small graphs"};
    app.require_subcommand(1);

    InvariantCmd inv;
    auto* inv_cmd = app.add_subcommand("invariant", "Compute gamma, Gamma, gamma_b or Gamma_b");
    add_common(inv_cmd, inv.common);
    inv_cmd->add_option("--which", inv.which, "gamma | Gamma | gamma_b | Gamma_b")->required();
    inv_cmd->add_option("--method", inv.method, "exact | closed-form | both")
        ->check(CLI::IsMember({"exact", "closed-form", "both"}))
        ->capture_default_str();

    VerifyCmd ver;
    auto* ver_cmd = app.add_subcommand("verify", "Sweep a family, closed form against exact search");
    ver_cmd->add_option("--family", ver.family, "cycle | path | star | grid | torus")->required();
    ver_cmd->add_option("--which", ver.which, "gamma | Gamma | gamma_b | Gamma_b | diametrical")->required();
    ver_cmd->add_option("--m", ver.m_range, "Row range a..b (grid, torus)");
    ver_cmd->add_option("--n", ver.n_range, "Range a..b")->required();
    ver_cmd->add_option("--format", ver.format, "csv | json")->capture_default_str();
    ver_cmd->add_option("--out", ver.out, "Output file (default stdout)");
    ver_cmd->add_flag("--timing", ver.timing, "Fill the millis column with wall time");
    ver_cmd->add_option("--jobs", ver.jobs, "Accepted for compatibility; points run sequentially");
    ver_cmd->add_option("--budget", ver.budget, "Search-node cap (overrides BD_BUDGET_NODES)");
    ver_cmd->add_option("--max-vertices", ver.max_vertices, "Vertex cap for exact solvers")->capture_default_str();

    ClassifyCmd cls;
    auto* cls_cmd = app.add_subcommand("classify", "Classify a tree as diametrical or not");
    add_common(cls_cmd, cls.common);
    cls_cmd->add_flag("--oracle", cls.oracle, "Also decide Gamma_b == diam by exact search");

    EnumerateCmd en;
    auto* en_cmd = app.add_subcommand("enumerate-check", "Classifier against the exact oracle on many trees");
    en_cmd->add_option("--max-n", en.max_n, "Exhaustive up to this many vertices")->capture_default_str();
    en_cmd->add_option("--random", en.random, "Number of seeded random trees")->capture_default_str();
    en_cmd->add_option("--random-min", en.random_min, "Smallest random order")->capture_default_str();
    en_cmd->add_option("--random-max", en.random_max, "Largest random order")->capture_default_str();
    en_cmd->add_option("--seed", en.seed, "Random seed")->capture_default_str();
    en_cmd->add_option("--dump-dir", en.dump_dir, "Where disagreeing trees are written")->capture_default_str();
    en_cmd->add_option("--out", en.out, "Output file (default stdout)");
    en_cmd->add_option("--budget", en.budget, "Search-node cap (overrides BD_BUDGET_NODES)");

    GenerateCmd gen;
    auto* gen_cmd = app.add_subcommand("generate", "Write a family member as an edge list");
    gen_cmd->add_option("--family", gen.family, "Family spec")->required();
    gen_cmd->add_option("--format", gen.format, "edges | json")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInput;
    }

    try {
        if (inv_cmd->parsed()) return run_invariant(inv);
        if (ver_cmd->parsed()) return run_verify(ver);
        if (cls_cmd->parsed()) return run_classify(cls);
        if (en_cmd->parsed()) return run_enumerate(en);
        if (gen_cmd->parsed()) return run_generate(gen);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapability;
    }
    return kInput;
}
