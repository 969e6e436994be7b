#include "deltasys/json_io.hpp"

#include "deltasys/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace deltasys::io {

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& what) {
    throw Error(Errc::schema_error, "at " + (at.empty() ? std::string("/") : at) + ": " + what);
}

std::string child(const std::string& at, const std::string& key) {
    std::string escaped;
    for (const char c : key) {
        if (c == '~') {
            escaped += "~0";
        } else if (c == '/') {
            escaped += "~1";
        } else {
            escaped += c;
        }
    }
    return at + "/" + escaped;
}

std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& need_object(const Json& doc, const std::string& at) {
    if (!doc.is_object()) {
        fail(at, "expected an object");
    }
    return doc;
}

const Json& need_array(const Json& doc, const std::string& at) {
    if (!doc.is_array()) {
        fail(at, "expected an array");
    }
    return doc;
}

const Json& field(const Json& doc, const std::string& key, const std::string& at) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        fail(child(at, key), "missing required field");
    }
    return *it;
}

std::string need_string(const Json& doc, const std::string& at) {
    if (!doc.is_string()) {
        fail(at, "expected a string");
    }
    return doc.get<std::string>();
}

std::size_t need_natural(const Json& doc, const std::string& at) {
    if (!doc.is_number_unsigned() && !(doc.is_number_integer() && doc.get<std::int64_t>() >= 0)) {
        fail(at, "expected a non-negative integer");
    }
    return doc.get<std::size_t>();
}

void allow_only(const Json& doc, std::initializer_list<const char*> keys, const std::string& at) {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.count(key)) {
            fail(child(at, key), "unknown field");
        }
    }
}

void check_schema(const Json& doc, const std::string& kind, const std::string& at) {
    const auto it = doc.find("schema");
    if (it == doc.end()) {
        return;
    }
    const auto tag = need_string(*it, child(at, "schema"));
    if (tag != kind + "/1") {
        fail(child(at, "schema"), "expected \"" + kind + "/1\", found \"" + tag + "\"");
    }
}

Signature signature_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    allow_only(doc, {"relations"}, at);
    const auto rel_at = child(at, "relations");
    const auto& rels = need_array(field(doc, "relations", at), rel_at);
    std::vector<RelationSymbol> out;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const auto here = child(rel_at, i);
        need_object(rels[i], here);
        allow_only(rels[i], {"name", "arity"}, here);
        RelationSymbol r;
        r.name = need_string(field(rels[i], "name", here), child(here, "name"));
        r.arity = need_natural(field(rels[i], "arity", here), child(here, "arity"));
        out.push_back(std::move(r));
    }
    try {
        return Signature(std::move(out));
    } catch (const Error& e) {
        fail(rel_at, e.what());
    }
}

Json signature_to_json(const Signature& sig) {
    Json rels = Json::array();
    for (const auto& r : sig.relations()) {
        rels.push_back({{"name", r.name}, {"arity", r.arity}});
    }
    return {{"relations", rels}};
}

Atom atom_from_json(const Json& doc, const std::string& at) {
    if (doc.is_number_integer()) {
        return Atom(doc.get<std::int64_t>());
    }
    if (doc.is_string()) {
        return Atom(doc.get<std::string>());
    }
    fail(at, "atoms are integers or strings");
}

AtomSet atom_set_from_json(const Json& doc, const std::string& at) {
    need_array(doc, at);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        atoms.push_back(atom_from_json(doc[i], child(at, i)));
    }
    const auto n = atoms.size();
    auto set = make_atom_set(std::move(atoms));
    if (set.size() != n) {
        fail(at, "repeated atom");
    }
    return set;
}

Json atom_set_to_json(const AtomSet& s) {
    Json out = Json::array();
    for (const auto& a : s) {
        out.push_back(atom_to_json(a));
    }
    return out;
}

// The structure fields of a document that may carry more (labels, parts).
Structure structure_fields(const Json& doc, const std::string& at) {
    const auto sig = signature_from_json(field(doc, "signature", at), child(at, "signature"));
    const auto uni_at = child(at, "universe");
    const auto& uni = need_array(field(doc, "universe", at), uni_at);
    std::vector<std::string> universe;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < uni.size(); ++i) {
        universe.push_back(need_string(uni[i], child(uni_at, i)));
        if (!seen.insert(universe.back()).second) {
            fail(child(uni_at, i), "duplicate element id '" + universe.back() + "'");
        }
    }
    const auto tab_at = child(at, "tables");
    const Json empty = Json::object();
    const auto& tables = doc.contains("tables") ? need_object(doc["tables"], tab_at) : empty;
    for (const auto& [name, value] : tables.items()) {
        if (!sig.find(name)) {
            fail(child(tab_at, name), "relation not in signature");
        }
    }
    StructureBuilder builder(sig);
    for (const auto& id : universe) {
        builder.add_element(id);
    }
    std::unordered_map<std::string, Element> index;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        index.emplace(universe[i], static_cast<Element>(i));
    }
    for (std::size_t r = 0; r < sig.size(); ++r) {
        const auto& name = sig[r].name;
        if (!tables.contains(name)) {
            continue;
        }
        const auto rel_at = child(tab_at, name);
        const auto& tuples = need_array(tables[name], rel_at);
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            const auto tup_at = child(rel_at, t);
            need_array(tuples[t], tup_at);
            if (tuples[t].size() != sig[r].arity) {
                fail(tup_at, "tuple " + std::to_string(t) + " of relation '" + name + "' has arity " +
                                 std::to_string(tuples[t].size()) + ", expected " + std::to_string(sig[r].arity));
            }
            Tuple tuple;
            for (std::size_t p = 0; p < tuples[t].size(); ++p) {
                const auto id = need_string(tuples[t][p], child(tup_at, p));
                const auto it = index.find(id);
                if (it == index.end()) {
                    fail(child(tup_at, p), "element not in universe: '" + id + "'");
                }
                tuple.push_back(it->second);
            }
            builder.add_tuple(r, std::move(tuple));
        }
    }
    return builder.build();
}

Json structure_body(const Structure& s) {
    Json tables = Json::object();
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        Json tuples = Json::array();
        for (const auto& t : s.table(r).tuples()) {
            Json row = Json::array();
            for (const auto e : t) {
                row.push_back(s.id(e));
            }
            tuples.push_back(row);
        }
        tables[s.signature()[r].name] = tuples;
    }
    return {{"signature", signature_to_json(s.signature())}, {"universe", s.universe()}, {"tables", tables}};
}

Json optional_structure(const std::optional<Structure>& s) { return s ? to_json(*s) : Json(nullptr); }

std::vector<std::string> id_list(const Json& doc, const std::string& at) {
    need_array(doc, at);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        out.push_back(need_string(doc[i], child(at, i)));
    }
    return out;
}

} // namespace

Json atom_to_json(const Atom& a) { return a.is_integer() ? Json(a.integer()) : Json(a.text()); }

std::string detect_schema(const Json& doc) {
    if (!doc.is_object()) {
        fail("", "expected an object");
    }
    if (const auto it = doc.find("schema"); it != doc.end()) {
        const auto tag = need_string(*it, "/schema");
        const auto slash = tag.find('/');
        const auto kind = tag.substr(0, slash);
        static const std::set<std::string> known = {"structure", "labeling", "family", "age",
                                                    "coloring",  "blocks",   "plan",   "report"};
        if (slash == std::string::npos || tag.substr(slash) != "/1" || !known.count(kind)) {
            fail("/schema", "unsupported schema \"" + tag + "\"");
        }
        return kind;
    }
    if (doc.contains("members")) return "family";
    if (doc.contains("labels")) return "labeling";
    if (doc.contains("parts")) return "coloring";
    if (doc.contains("kind")) return "age";
    if (doc.contains("blocks")) return "blocks";
    if (doc.contains("verdict")) return "report";
    if (doc.contains("clause")) return "plan";
    if (doc.contains("universe")) return "structure";
    fail("", "cannot infer the document kind");
}

// ---------------------------------------------------------------- structure

Json to_json(const Structure& s) {
    auto doc = structure_body(s);
    doc["schema"] = "structure/1";
    return doc;
}

Structure structure_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "structure", at);
    allow_only(doc, {"schema", "signature", "universe", "tables"}, at);
    return structure_fields(doc, at);
}

// ---------------------------------------------------------------- labeling

Json to_json(const SetLabeling& lab) {
    auto doc = structure_body(lab.base());
    Json labels = Json::object();
    for (Element e = 0; e < lab.base().size(); ++e) {
        labels[lab.base().id(e)] = atom_set_to_json(lab.label(e));
    }
    doc["labels"] = labels;
    if (lab.uniform_size()) {
        doc["uniform_size"] = *lab.uniform_size();
    }
    doc["schema"] = "labeling/1";
    return doc;
}

SetLabeling labeling_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "labeling", at);
    allow_only(doc, {"schema", "signature", "universe", "tables", "labels", "uniform_size"}, at);
    auto base = structure_fields(doc, at);
    const auto lab_at = child(at, "labels");
    const auto& labels = need_object(field(doc, "labels", at), lab_at);
    for (const auto& [id, value] : labels.items()) {
        if (!base.index_of(id)) {
            fail(child(lab_at, id), "element not in universe");
        }
    }
    std::vector<AtomSet> sets;
    for (const auto& id : base.universe()) {
        if (!labels.contains(id)) {
            fail(child(lab_at, id), "missing label");
        }
        sets.push_back(atom_set_from_json(labels[id], child(lab_at, id)));
    }
    std::optional<std::size_t> uniform;
    if (doc.contains("uniform_size")) {
        uniform = need_natural(doc["uniform_size"], child(at, "uniform_size"));
    }
    try {
        return SetLabeling(std::move(base), std::move(sets), uniform);
    } catch (const Error& e) {
        fail(lab_at, e.what());
    }
}

// ---------------------------------------------------------------- family

Json to_json(const SetFamily& family) {
    Json members = Json::array();
    for (const auto& m : family.members()) {
        members.push_back(atom_set_to_json(m));
    }
    return {{"schema", "family/1"}, {"members", members}};
}

SetFamily family_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "family", at);
    allow_only(doc, {"schema", "members"}, at);
    const auto mem_at = child(at, "members");
    const auto& members = need_array(field(doc, "members", at), mem_at);
    std::vector<AtomSet> sets;
    for (std::size_t i = 0; i < members.size(); ++i) {
        sets.push_back(atom_set_from_json(members[i], child(mem_at, i)));
    }
    try {
        return SetFamily(std::move(sets));
    } catch (const Error& e) {
        fail(mem_at, e.what());
    }
}

Json to_json(const SunflowerWitness& w, const SetFamily& family) {
    Json members = Json::array();
    for (const auto i : w.indices) {
        members.push_back(atom_set_to_json(family[i]));
    }
    return {{"indices", w.indices}, {"kernel", atom_set_to_json(w.kernel)}, {"members", members},
            {"size", w.indices.size()}};
}

// ---------------------------------------------------------------- age

Json to_json(const AgeDescriptor& age) {
    if (age.predicate && age.tag.empty()) {
        throw Error(Errc::invalid_argument, "ages given by a custom predicate have no JSON form");
    }
    Json kind;
    if (!age.tag.empty()) {
        kind = {{"builtin", age.tag}};
    } else {
        Json forbidden = Json::array();
        for (const auto& f : age.forbidden) {
            forbidden.push_back(to_json(f));
        }
        kind = {{"forbidden", forbidden}};
        switch (age.base) {
        case AgeBase::graphs: kind["within"] = "graphs"; break;
        case AgeBase::linear_orders: kind["within"] = "linear_orders"; break;
        case AgeBase::hypergraph: kind["within"] = "hypergraph:" + std::to_string(age.hyper_arity); break;
        case AgeBase::all: break;
        }
    }
    return {{"schema", "age/1"},
            {"signature", signature_to_json(age.signature)},
            {"kind", kind},
            {"max_enumeration_size", age.max_enumeration_size}};
}

AgeDescriptor age_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "age", at);
    allow_only(doc, {"schema", "signature", "kind", "max_enumeration_size"}, at);
    const auto kind_at = child(at, "kind");
    const auto& kind = need_object(field(doc, "kind", at), kind_at);
    std::optional<Signature> sig;
    if (doc.contains("signature")) {
        sig = signature_from_json(doc["signature"], child(at, "signature"));
    }
    AgeDescriptor age;
    auto builtin = [&](const Json& tag, const std::string& here) {
        try {
            return parse_builtin_age(need_string(tag, here));
        } catch (const Error& e) {
            fail(here, e.what());
        }
    };
    if (kind.contains("builtin")) {
        allow_only(kind, {"builtin"}, kind_at);
        age = builtin(kind["builtin"], child(kind_at, "builtin"));
        if (sig && *sig != age.signature) {
            fail(child(at, "signature"), "does not match the builtin age");
        }
    } else if (kind.contains("forbidden")) {
        allow_only(kind, {"forbidden", "within"}, kind_at);
        std::optional<AgeDescriptor> base;
        if (kind.contains("within")) {
            base = builtin(kind["within"], child(kind_at, "within"));
            if (sig && *sig != base->signature) {
                fail(child(at, "signature"), "does not match the base age");
            }
        } else if (!sig) {
            fail(child(at, "signature"), "missing required field");
        }
        const auto f_at = child(kind_at, "forbidden");
        const auto& list = need_array(kind["forbidden"], f_at);
        std::vector<Structure> forbidden;
        for (std::size_t i = 0; i < list.size(); ++i) {
            forbidden.push_back(structure_from_json(list[i], child(f_at, i)));
            if (forbidden.back().signature() != (base ? base->signature : *sig)) {
                fail(child(f_at, i), "signature differs from the age's");
            }
        }
        age = AgeDescriptor::forbidding(base ? *base : AgeDescriptor::all(*sig), std::move(forbidden));
    } else if (kind.contains("all")) {
        allow_only(kind, {"all"}, kind_at);
        if (!sig) {
            fail(child(at, "signature"), "missing required field");
        }
        age = AgeDescriptor::all(*sig);
    } else {
        fail(kind_at, "expected one of \"builtin\", \"forbidden\", \"all\"");
    }
    if (doc.contains("max_enumeration_size")) {
        age.max_enumeration_size = need_natural(doc["max_enumeration_size"], child(at, "max_enumeration_size"));
    }
    return age;
}

// ---------------------------------------------------------------- coloring

Json to_json(const Coloring& coloring) {
    auto doc = structure_body(coloring.base);
    Json parts = Json::object();
    for (Element e = 0; e < coloring.base.size(); ++e) {
        parts[coloring.base.id(e)] = coloring.parts.at(e);
    }
    doc["parts"] = parts;
    doc["colors"] = coloring.colors;
    doc["schema"] = "coloring/1";
    return doc;
}

Coloring coloring_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "coloring", at);
    allow_only(doc, {"schema", "signature", "universe", "tables", "parts", "colors"}, at);
    Coloring c;
    c.base = structure_fields(doc, at);
    const auto parts_at = child(at, "parts");
    const auto& parts = need_object(field(doc, "parts", at), parts_at);
    for (const auto& [id, value] : parts.items()) {
        if (!c.base.index_of(id)) {
            fail(child(parts_at, id), "element not in universe");
        }
    }
    std::size_t top = 0;
    for (const auto& id : c.base.universe()) {
        if (!parts.contains(id)) {
            fail(child(parts_at, id), "coloring must be total");
        }
        c.parts.push_back(need_natural(parts[id], child(parts_at, id)));
        top = std::max(top, c.parts.back() + 1);
    }
    c.colors = doc.contains("colors") ? need_natural(doc["colors"], child(at, "colors")) : top;
    if (c.colors < top) {
        fail(child(at, "colors"), "a part index is out of range");
    }
    return c;
}

// ---------------------------------------------------------------- blocks

Json to_json(const std::vector<std::pair<std::string, Structure>>& blocks) {
    Json list = Json::array();
    for (const auto& [id, order] : blocks) {
        list.push_back({{"id", id}, {"order", to_json(order)}});
    }
    return {{"schema", "blocks/1"}, {"blocks", list}};
}

std::vector<std::pair<std::string, Structure>> blocks_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "blocks", at);
    allow_only(doc, {"schema", "blocks"}, at);
    const auto b_at = child(at, "blocks");
    const auto& list = need_array(field(doc, "blocks", at), b_at);
    std::vector<std::pair<std::string, Structure>> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto here = child(b_at, i);
        need_object(list[i], here);
        allow_only(list[i], {"id", "order"}, here);
        out.emplace_back(need_string(field(list[i], "id", here), child(here, "id")),
                         structure_from_json(field(list[i], "order", here), child(here, "order")));
    }
    return out;
}

// ---------------------------------------------------------------- plan

Json to_json(const WitnessPlan& plan) {
    Json levels = Json::array();
    for (const auto& l : plan.levels) {
        levels.push_back({{"k", l.k}, {"valid", l.valid}, {"partial", to_json(l.partial)}});
    }
    return {{"schema", "plan/1"},
            {"target", to_json(plan.target)},
            {"enumeration", plan.enumeration},
            {"arity", plan.arity},
            {"clause", plan.clause},
            {"block_minus", optional_structure(plan.block_minus)},
            {"block", optional_structure(plan.block)},
            {"colors", plan.colors},
            {"levels", levels},
            {"witness", to_json(plan.witness)},
            {"gamma_trace", plan.gamma_trace},
            {"size_bound", plan.size_bound},
            {"inner", plan.inner.empty() ? Json(nullptr) : to_json(plan.inner.front())}};
}

WitnessPlan plan_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "plan", at);
    allow_only(doc,
               {"schema", "target", "enumeration", "arity", "clause", "block_minus", "block", "colors", "levels",
                "witness", "gamma_trace", "size_bound", "inner"},
               at);
    WitnessPlan p;
    p.target = structure_from_json(field(doc, "target", at), child(at, "target"));
    p.enumeration = id_list(field(doc, "enumeration", at), child(at, "enumeration"));
    p.arity = need_natural(field(doc, "arity", at), child(at, "arity"));
    p.clause = need_string(field(doc, "clause", at), child(at, "clause"));
    if (p.clause != "arity_one" && p.clause != "pair" && p.clause != "construction") {
        fail(child(at, "clause"), "unknown clause \"" + p.clause + "\"");
    }
    for (const char* key : {"block_minus", "block"}) {
        if (doc.contains(key) && !doc[key].is_null()) {
            auto s = structure_from_json(doc[key], child(at, key));
            (std::string(key) == "block" ? p.block : p.block_minus) = std::move(s);
        }
    }
    p.colors = doc.contains("colors") ? need_natural(doc["colors"], child(at, "colors")) : 0;
    const auto lv_at = child(at, "levels");
    const Json none = Json::array();
    const auto& levels = doc.contains("levels") ? need_array(doc["levels"], lv_at) : none;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto here = child(lv_at, i);
        need_object(levels[i], here);
        allow_only(levels[i], {"k", "valid", "partial"}, here);
        WitnessLevel l;
        l.k = need_natural(field(levels[i], "k", here), child(here, "k"));
        const auto v_at = child(here, "valid");
        const auto& valid = need_array(field(levels[i], "valid", here), v_at);
        for (std::size_t j = 0; j < valid.size(); ++j) {
            l.valid.push_back(id_list(valid[j], child(v_at, j)));
        }
        l.partial = structure_from_json(field(levels[i], "partial", here), child(here, "partial"));
        p.levels.push_back(std::move(l));
    }
    p.witness = structure_from_json(field(doc, "witness", at), child(at, "witness"));
    const auto g_at = child(at, "gamma_trace");
    const auto& gamma = need_array(field(doc, "gamma_trace", at), g_at);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        p.gamma_trace.push_back(need_natural(gamma[i], child(g_at, i)));
    }
    p.size_bound = need_natural(field(doc, "size_bound", at), child(at, "size_bound"));
    if (doc.contains("inner") && !doc["inner"].is_null()) {
        p.inner.push_back(plan_from_json(doc["inner"], child(at, "inner")));
    }
    return p;
}

// ---------------------------------------------------------------- report

Json to_json(const VerificationReport& report) {
    Json mode = report.mode.exact ? Json{{"kind", "exact"}}
                                  : Json{{"kind", "random"}, {"trials", report.mode.trials}, {"seed", report.mode.seed}};
    return {{"schema", "report/1"},
            {"verdict", verdict_name(report.verdict)},
            {"mode", mode},
            {"refutation", report.refutation ? to_json(*report.refutation) : Json(nullptr)},
            {"labelings", report.labelings},
            {"space_estimate", report.space_estimate},
            {"note", report.note}};
}

VerificationReport report_from_json(const Json& doc, const std::string& at) {
    need_object(doc, at);
    check_schema(doc, "report", at);
    allow_only(doc, {"schema", "verdict", "mode", "refutation", "labelings", "space_estimate", "note"}, at);
    VerificationReport r;
    const auto verdict = need_string(field(doc, "verdict", at), child(at, "verdict"));
    if (verdict == "verified") {
        r.verdict = Verdict::verified;
    } else if (verdict == "refuted") {
        r.verdict = Verdict::refuted;
    } else if (verdict == "inconclusive") {
        r.verdict = Verdict::inconclusive;
    } else {
        fail(child(at, "verdict"), "unknown verdict \"" + verdict + "\"");
    }
    const auto m_at = child(at, "mode");
    const auto& mode = need_object(field(doc, "mode", at), m_at);
    allow_only(mode, {"kind", "trials", "seed"}, m_at);
    const auto kind = need_string(field(mode, "kind", m_at), child(m_at, "kind"));
    if (kind == "exact") {
        r.mode = VerifyMode::exhaustive();
    } else if (kind == "random") {
        r.mode = VerifyMode::randomized(need_natural(field(mode, "trials", m_at), child(m_at, "trials")),
                                        need_natural(field(mode, "seed", m_at), child(m_at, "seed")));
    } else {
        fail(child(m_at, "kind"), "expected \"exact\" or \"random\"");
    }
    if (doc.contains("refutation") && !doc["refutation"].is_null()) {
        r.refutation = labeling_from_json(doc["refutation"], child(at, "refutation"));
    }
    if (doc.contains("labelings")) {
        r.labelings = need_natural(doc["labelings"], child(at, "labelings"));
    }
    if (doc.contains("space_estimate")) {
        if (!doc["space_estimate"].is_number()) {
            fail(child(at, "space_estimate"), "expected a number");
        }
        r.space_estimate = doc["space_estimate"].get<double>();
    }
    if (doc.contains("note")) {
        r.note = need_string(doc["note"], child(at, "note"));
    }
    return r;
}

// ---------------------------------------------------------------- files

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::parse_error, "cannot read '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace deltasys::io
