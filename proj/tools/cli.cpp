#include "cli.hpp"

#include "suites/suites.hpp"

#include "deltasys/ages.hpp"
#include "deltasys/catalog.hpp"
#include "deltasys/error.hpp"
#include "deltasys/json_io.hpp"
#include "deltasys/linorders.hpp"
#include "deltasys/setworld.hpp"
#include "deltasys/sunflower_property.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

namespace deltasys::cli {

namespace {

using io::Json;

struct Options {
    std::string input;
    std::string age;
    std::string target;
    std::string witness;
    std::string left;
    std::string right;
    std::string term;
    std::string suite;
    std::string property = "all";
    std::string mode = "exact";
    std::string subset;
    std::size_t arity = 2;
    std::size_t colors = 2;
    std::optional<std::size_t> max_size;
    std::size_t min_size = 1;
    std::size_t size = 3;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> ceiling;
    bool exhaustive = false;
    bool text = false;
};

struct Outcome {
    Json result;
    int code = Exit::ok;
};

// Catalog names accepted wherever a structure file is expected.
std::optional<Structure> catalog_structure(const std::string& arg) {
    if (arg.size() < 2 || !std::all_of(arg.begin() + 1, arg.end(), ::isdigit)) {
        return std::nullopt;
    }
    const auto n = static_cast<std::size_t>(std::stoul(arg.substr(1)));
    switch (arg[0]) {
    case 'K': return complete_graph(n);
    case 'E': return empty_graph(n);
    case 'P': return path_graph(n);
    case 'C': return chain(n);
    default: return std::nullopt;
    }
}

Json load(const std::string& path, const char* flag) {
    if (path.empty()) {
        throw Error(Errc::invalid_argument, std::string("missing required option ") + flag);
    }
    return io::read_file(path);
}

Structure load_structure(const std::string& arg, const char* flag) {
    if (!std::filesystem::exists(arg)) {
        if (auto s = catalog_structure(arg)) {
            return *s;
        }
    }
    const auto doc = load(arg, flag);
    const auto kind = io::detect_schema(doc);
    if (kind == "plan") {
        return io::plan_from_json(doc).witness;
    }
    if (kind != "structure") {
        throw Error(Errc::schema_error, std::string(flag) + ": expected a structure, found a " + kind + " document");
    }
    return io::structure_from_json(doc);
}

AgeDescriptor load_age(const Options& o) {
    if (!o.age.empty()) {
        return parse_builtin_age(o.age);
    }
    return io::age_from_json(load(o.input, "--input or --age"));
}

std::uint64_t ceiling(const Options& o) { return o.ceiling ? *o.ceiling : exact_ceiling_from_env(); }

Json check_json(const PropertyCheck& c) {
    Json ce = Json::array();
    for (const auto& s : c.counterexample) {
        ce.push_back(io::to_json(s));
    }
    return {{"holds", c.holds},  {"method", c.method},          {"cases", c.cases},
            {"detail", c.detail}, {"counterexample", ce}};
}

// ------------------------------------------------------------ handlers

Outcome sunflower_find(const Options& o) {
    const auto family = io::family_from_json(load(o.input, "--input"));
    if (family.size() == 0) {
        throw Error(Errc::invalid_argument, "the family is empty");
    }
    const auto w = max_sunflower(family);
    Json r = io::to_json(w, family);
    r["min_size"] = o.min_size;
    return {r, w.indices.size() >= o.min_size ? Exit::ok : Exit::negative};
}

Outcome sunflower_extract(const Options& o) {
    const auto family = io::family_from_json(load(o.input, "--input"));
    Json r = {{"size", o.size}, {"threshold", erdos_rado_threshold(family.size() ? family[0].size() : 0, o.size)}};
    try {
        r["sunflower"] = io::to_json(erdos_rado_extract(family, o.size), family);
        return {r, Exit::ok};
    } catch (const Error& e) {
        if (e.code() != Errc::below_threshold) {
            throw;
        }
        r["error"] = e.what();
        return {r, Exit::exhausted};
    }
}

Outcome structured_find(const Options& o) {
    const auto lab = io::labeling_from_json(load(o.input, "--input"));
    const auto target = load_structure(o.target, "--target");
    const auto found = find_structured_sunflower(lab, target);
    Json r = {{"found", found.has_value()}};
    if (found) {
        Json map = Json::object();
        for (Element i = 0; i < target.size(); ++i) {
            map[target.id(i)] = lab.base().id(found->embedding[i]);
        }
        Json kernel = Json::array();
        for (const auto& a : found->witness.kernel) {
            kernel.push_back(io::atom_to_json(a));
        }
        r["embedding"] = map;
        r["kernel"] = kernel;
    }
    return {r, found ? Exit::ok : Exit::negative};
}

Outcome age_check(const Options& o) {
    const auto age = load_age(o);
    const std::size_t m = o.max_size.value_or(4);
    Json r = Json::object();
    bool all = true;
    auto run = [&](const std::string& name, const std::function<PropertyCheck()>& f) {
        if (o.property == "all" || o.property == name) {
            const auto c = f();
            r[name] = check_json(c);
            all = all && c.holds;
        }
    };
    run("hp", [&] { return check_hp(age, m); });
    run("jep", [&] { return check_jep(age, m); });
    run("dap3", [&] {
        return check_dap3(age, m, o.exhaustive ? DapStrategy::exhaustive : DapStrategy::automatic);
    });
    run("unary", [&] { return check_unique_unary(age, m); });
    if (r.empty()) {
        throw Error(Errc::invalid_argument, "unknown property '" + o.property + "' (hp, jep, dap3, unary, all)");
    }
    return {{{"max_size", m}, {"properties", r}}, all ? Exit::ok : Exit::negative};
}

Outcome age_witness(const Options& o) {
    const auto age = load_age(o);
    const auto a = load_structure(o.target, "--target");
    const std::size_t s = o.max_size.value_or(6);
    const auto w = find_indivisibility_witness(age, a, o.colors, s);
    Json r = {{"colors", o.colors}, {"max_size", s}, {"found", w.has_value()}};
    if (w) {
        r["witness"] = io::to_json(w->structure);
        r["size"] = w->size;
    }
    return {r, w ? Exit::ok : Exit::exhausted};
}

Outcome age_bootstrap(const Options& o) {
    const auto age = load_age(o);
    const auto a = load_structure(o.target, "--target");
    const auto res = bootstrap_order_n(age, a, o.colors, o.max_size.value_or(8));
    Json chain_json = Json::array();
    Json sizes = Json::array();
    for (const auto& s : res.chain) {
        chain_json.push_back(io::to_json(s));
        sizes.push_back(s.size());
    }
    return {{{"colors", o.colors}, {"chain", chain_json}, {"sizes", sizes}, {"final_verified", res.final_verified}},
            res.final_verified ? Exit::ok : Exit::negative};
}

Outcome age_amalgam(const Options& o) {
    const auto age = load_age(o);
    const auto a = load_structure(o.left, "--left");
    const auto b = load_structure(o.right, "--right");
    try {
        return {{{"amalgam", io::to_json(disjoint_amalgam(age, a, b))}}, Exit::ok};
    } catch (const Error& e) {
        if (e.code() != Errc::no_amalgam) {
            throw;
        }
        return {{{"amalgam", nullptr}, {"error", e.what()}}, Exit::negative};
    }
}

Outcome sfp_build(const Options& o) {
    const auto age = load_age(o);
    const auto a = load_structure(o.target, "--target");
    BetaSource beta(age, o.max_size.value_or(13));
    try {
        const auto plan = build_witness(age, a, o.arity, beta);
        const auto violations = plan_violations(age, plan);
        return {{{"plan", io::to_json(plan)}, {"violations", violations}, {"witness_size", plan.witness.size()}},
                violations.empty() ? Exit::ok : Exit::negative};
    } catch (const Error& e) {
        if (e.code() == Errc::beta_unavailable) {
            return {{{"error", e.what()}}, Exit::exhausted};
        }
        if (e.code() == Errc::dap_violation) {
            return {{{"error", e.what()}}, Exit::negative};
        }
        throw;
    }
}

Outcome sfp_verify(const Options& o) {
    const auto b = load_structure(o.witness, "--witness");
    const auto a = load_structure(o.target, "--target");
    VerifyMode mode;
    if (o.mode == "exact") {
        mode = VerifyMode::exhaustive();
    } else if (o.mode == "random") {
        mode = VerifyMode::randomized(o.trials, o.seed);
    } else {
        throw Error(Errc::invalid_argument, "--mode must be exact or random");
    }
    try {
        const auto report = verify_witness(b, a, o.arity, mode, ceiling(o));
        const int code = report.verdict == Verdict::verified  ? Exit::ok
                         : report.verdict == Verdict::refuted ? Exit::negative
                                                              : Exit::exhausted;
        return {io::to_json(report), code};
    } catch (const Error& e) {
        if (e.code() != Errc::exact_refused) {
            throw;
        }
        return {{{"verdict", "refused"}, {"error", e.what()}, {"ceiling", ceiling(o)}}, Exit::exhausted};
    }
}

Outcome sfp_attack(const Options& o) {
    const auto b = load_structure(o.witness, "--witness");
    const auto a = load_structure(o.target, "--target");
    const auto found = counterexample_search(b, a, o.arity, o.trials, o.seed);
    Json r = {{"trials", o.trials}, {"refutation", found ? io::to_json(*found) : Json(nullptr)}};
    return {r, found ? Exit::negative : Exit::exhausted};
}

Json attrs_json(const OrderAttrs& a) {
    return {{"is_empty", a.is_empty},
            {"finite_size", a.finite_size ? Json(*a.finite_size) : Json(nullptr)},
            {"embeds_omega", a.embeds_omega},
            {"embeds_omega_star", a.embeds_omega_star},
            {"embeds_eta", a.embeds_eta},
            {"is_omega", a.is_omega},
            {"is_omega_star", a.is_omega_star}};
}

Json rank_json(const OrderTerm& t) {
    const auto r = scattered_rank(t);
    return r ? Json(*r) : Json("not scattered");
}

Outcome lo_classify(const Options& o) {
    const auto t = parse_term(o.term);
    const auto c = classify_sunflowerable(t);
    Json r = {{"term", to_string(t)},
              {"verdict", c.sunflowerable ? "sunflowerable" : "not_sunflowerable"},
              {"reason", c.reason ? Json(reason_name(*c.reason)) : Json(nullptr)},
              {"attrs", attrs_json(attrs(t))},
              {"scattered_rank", rank_json(t)}};
    return {r, c.sunflowerable ? Exit::ok : Exit::negative};
}

Outcome lo_rank(const Options& o) {
    const auto t = parse_term(o.term);
    return {{{"term", to_string(t)}, {"scattered_rank", rank_json(t)}},
            scattered_rank(t) ? Exit::ok : Exit::negative};
}

Outcome lo_prefix(const Options& o) {
    const auto t = parse_term(o.term);
    const auto r = prefix_realize(t, o.max_size.value_or(8));
    return {{{"term", to_string(t)}, {"order", io::to_json(r.order)}, {"block", r.block}}, Exit::ok};
}

Outcome encode_partition(const Options& o) {
    const auto c = io::coloring_from_json(load(o.input, "--input"));
    return {{{"labeling", io::to_json(partition_encoding(c.base, c))}}, Exit::ok};
}

Outcome encode_split(const Options& o) {
    const auto b = load_structure(o.input, "--input");
    std::vector<std::string> e;
    std::stringstream list(o.subset);
    for (std::string id; std::getline(list, id, ',');) {
        if (!id.empty()) {
            e.push_back(id);
        }
    }
    return {{{"labeling", io::to_json(split_encoding(b, e))}}, Exit::ok};
}

Outcome encode_blocks(const Options& o) {
    std::vector<std::pair<std::string, Structure>> blocks;
    if (!o.term.empty()) {
        blocks = realization_blocks(prefix_realize(parse_term(o.term), o.max_size.value_or(8)));
    } else {
        blocks = io::blocks_from_json(load(o.input, "--input or --term"));
    }
    return {{{"labeling", io::to_json(scattered_block_encoding(blocks))}}, Exit::ok};
}

Outcome suite_run(const Options& o) {
    const auto report = suites::run_suite(o.suite);
    Json list = Json::array();
    for (const auto& a : report.assertions) {
        list.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    }
    return {{{"suite", report.name}, {"assertions", list}, {"pass", report.pass()}, {"time_limit_s", report.limit}},
            report.pass() ? Exit::ok : Exit::negative};
}

Outcome suite_list(const Options&) { return {{{"suites", suites::suite_names()}}, Exit::ok}; }

int error_code(Errc c) {
    switch (c) {
    case Errc::budget_exhausted:
    case Errc::exact_refused:
    case Errc::beta_unavailable: return Exit::exhausted;
    case Errc::no_amalgam:
    case Errc::dap_violation:
    case Errc::extension_failed: return Exit::negative;
    default: return Exit::usage;
    }
}

void print_fields(std::ostream& out, const Json& obj, const std::string& indent) {
    for (const auto& [key, value] : obj.items()) {
        if (key == "assertions") {
            continue;
        }
        out << indent << key << ":";
        if (value.is_string()) {
            out << " " << value.get<std::string>() << "\n";
        } else if (value.is_primitive() || (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) {
                                                return v.is_primitive();
                                            }))) {
            out << " " << value.dump() << "\n";
        } else if (value.is_object() && !value.contains("universe")) {
            out << "\n";
            print_fields(out, value, indent + "  ");
        } else if (value.is_object()) {
            out << " structure of size " << value["universe"].size() << "\n";
        } else {
            out << " " << value.size() << " entries\n";
        }
    }
}

void print_text(std::ostream& out, const std::string& command, const Json& result, int code) {
    out << command << ": exit " << code << "\n";
    if (!result.is_object()) {
        return;
    }
    print_fields(out, result, "  ");
    if (result.contains("assertions")) {
        for (const auto& a : result["assertions"]) {
            out << "  [" << (a["pass"].get<bool>() ? "pass" : "FAIL") << "] " << a["name"].get<std::string>();
            if (!a["detail"].get<std::string>().empty()) {
                out << " (" << a["detail"].get<std::string>() << ")";
            }
            out << "\n";
        }
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deltasys: sunflowers, ages and the n-sunflower property at desk scale", "deltasys"};
    app.require_subcommand(1);
    Options o;
    std::string command;
    std::function<Outcome(const Options&)> handler;
    Json echo = Json::object();

    auto verb = [&](CLI::App* group, const std::string& name, const std::string& help,
                    std::function<Outcome(const Options&)> fn) {
        auto* sub = group->add_subcommand(name, help);
        sub->callback([&, group, name, fn] {
            command = group->get_name() + " " + name;
            handler = fn;
        });
        sub->add_flag("--text", o.text, "Human-readable output instead of JSON");
        sub->add_flag("--json", [&](std::int64_t) { o.text = false; }, "JSON output (default)");
        return sub;
    };
    auto input = [&](CLI::App* s, const std::string& help) { s->add_option("-i,--input", o.input, help); };
    auto age_opt = [&](CLI::App* s) {
        s->add_option("-i,--input", o.input, "Age file (age/1)");
        s->add_option("--age", o.age, "Builtin age tag instead of a file");
    };
    auto target = [&](CLI::App* s) {
        s->add_option("--target", o.target, "Target structure file, or K<n>, E<n>, P<n>, C<n>")->required();
    };
    auto max_size = [&](CLI::App* s, const std::string& help) { s->add_option("--max-size", o.max_size, help); };

    auto* sunflower = app.add_subcommand("sunflower", "Sunflowers in set families");
    sunflower->require_subcommand(1);
    auto* s_find = verb(sunflower, "find", "Largest sunflower", sunflower_find);
    input(s_find, "Family file (family/1)");
    s_find->add_option("--min-size", o.min_size, "Exit 0 only if a sunflower this large exists");
    auto* s_extract = verb(sunflower, "extract", "Erdos-Rado extraction", sunflower_extract);
    input(s_extract, "Family file of equal-size sets");
    s_extract->add_option("--size", o.size, "Sunflower size k");

    auto* structured = app.add_subcommand("structured", "Structured sunflowers in labeled structures");
    structured->require_subcommand(1);
    auto* st_find = verb(structured, "find", "Copy of the target whose labels form a sunflower", structured_find);
    input(st_find, "Labeling file (labeling/1)");
    target(st_find);

    auto* age = app.add_subcommand("age", "Age properties and constructions");
    age->require_subcommand(1);
    auto* a_check = verb(age, "check", "HP, JEP, DAP(3), unique unary types", age_check);
    age_opt(a_check);
    a_check->add_option("--property", o.property, "hp, jep, dap3, unary or all");
    max_size(a_check, "Member size bound m (default 4)");
    a_check->add_flag("--exhaustive", o.exhaustive, "DAP(3) without the locality shortcut");
    auto* a_witness = verb(age, "witness", "Smallest indivisibility witness", age_witness);
    age_opt(a_witness);
    target(a_witness);
    a_witness->add_option("--colors", o.colors, "Number of colors");
    max_size(a_witness, "Search bound (default 6)");
    auto* a_boot = verb(age, "bootstrap", "Chain of 2-color witnesses", age_bootstrap);
    age_opt(a_boot);
    target(a_boot);
    a_boot->add_option("--colors", o.colors, "Number of colors");
    max_size(a_boot, "Search bound per link (default 8)");
    auto* a_amalgam = verb(age, "amalgam", "Disjoint amalgam of two members", age_amalgam);
    age_opt(a_amalgam);
    a_amalgam->add_option("--left", o.left, "First structure")->required();
    a_amalgam->add_option("--right", o.right, "Second structure")->required();

    auto* sfp = app.add_subcommand("sfp", "The n-sunflower property");
    sfp->require_subcommand(1);
    auto* f_build = verb(sfp, "build", "Inductive witness construction", sfp_build);
    age_opt(f_build);
    target(f_build);
    f_build->add_option("--arity", o.arity, "Label size n");
    max_size(f_build, "Indivisibility search bound (default 13)");
    auto* f_verify = verb(sfp, "verify", "Check a witness over n-set labelings", sfp_verify);
    f_verify->add_option("--witness", o.witness, "Witness structure or plan")->required();
    target(f_verify);
    f_verify->add_option("--arity", o.arity, "Label size n");
    f_verify->add_option("--mode", o.mode, "exact or random");
    f_verify->add_option("--trials", o.trials, "Random trials");
    f_verify->add_option("--seed", o.seed, "Random seed (default 0)");
    f_verify->add_option("--ceiling", o.ceiling, "Exact-mode labeling ceiling");
    auto* f_attack = verb(sfp, "attack", "Adversarial labeling search", sfp_attack);
    f_attack->add_option("--witness", o.witness, "Witness structure or plan")->required();
    target(f_attack);
    f_attack->add_option("--arity", o.arity, "Label size n");
    f_attack->add_option("--trials", o.trials, "Trials");
    f_attack->add_option("--seed", o.seed, "Random seed (default 0)");

    auto* lo = app.add_subcommand("lo", "Countable linear order terms");
    lo->require_subcommand(1);
    auto* l_classify = verb(lo, "classify", "Sunflowerability of the order", lo_classify);
    l_classify->add_option("term", o.term, "Order term, e.g. \"w + 3 + w*\"")->required();
    auto* l_rank = verb(lo, "rank", "Scattered construction rank", lo_rank);
    l_rank->add_option("term", o.term, "Order term")->required();
    auto* l_prefix = verb(lo, "prefix", "Finite sample of the order", lo_prefix);
    l_prefix->add_option("term", o.term, "Order term")->required();
    max_size(l_prefix, "Number of elements (default 8)");

    auto* encode = app.add_subcommand("encode", "Labelings from the counterexample encodings");
    encode->require_subcommand(1);
    auto* e_partition = verb(encode, "partition", "Coloring to 2-set labeling", encode_partition);
    input(e_partition, "Coloring file (coloring/1)");
    auto* e_split = verb(encode, "split", "Two-tag labeling of a subset", encode_split);
    input(e_split, "Structure file");
    e_split->add_option("--subset", o.subset, "Comma-separated element ids");
    auto* e_blocks = verb(encode, "blocks", "Block-sum labeling", encode_blocks);
    input(e_blocks, "Blocks file (blocks/1)");
    e_blocks->add_option("--term", o.term, "Realize an order term instead");
    max_size(e_blocks, "Elements to realize with --term (default 8)");

    auto* suite = app.add_subcommand("suite", "Acceptance experiments");
    suite->require_subcommand(1);
    auto* u_run = verb(suite, "run", "Run one suite", suite_run);
    u_run->add_option("name", o.suite, "Suite name")->required();
    verb(suite, "list", "List suites", suite_list);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return Exit::usage;
    }
    if (!handler) {
        err << "error: no command given\n" << app.help();
        return Exit::usage;
    }

    for (const auto* sub : app.get_subcommands()) {
        for (const auto* leaf : sub->get_subcommands()) {
            for (const auto* opt : leaf->get_options()) {
                if (opt->count() > 0 && opt->get_name() != "--help" && opt->get_name() != "--text" &&
                    opt->get_name() != "--json") {
                    const auto values = opt->results();
                    auto key = opt->get_name();
                    if (key.rfind("--", 0) == 0) {
                        key = key.substr(2);
                    }
                    echo[key] = values.size() == 1 ? Json(values.front()) : Json(values);
                }
            }
        }
    }

    Outcome outcome;
    try {
        outcome = handler(o);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return error_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Exit::usage;
    }
    if (o.text) {
        print_text(out, command, outcome.result, outcome.code);
    } else {
        Json report = {{"command", command}, {"inputs", echo}, {"result", outcome.result}, {"exit_code", outcome.code}};
        if (command == "sfp attack" || (command == "sfp verify" && o.mode == "random")) {
            report["seed"] = o.seed;
        }
        out << io::dump(report);
    }
    return outcome.code;
}

} // namespace deltasys::cli
