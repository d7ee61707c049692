#include "quiver/io.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace quiver {

namespace {

using json = nlohmann::ordered_json;

std::string provenance_name(Provenance p) {
    return p == Provenance::Inserted ? "inserted" : "original";
}

json quiver_to_json(const Quiver& q) {
    json vertices = json::array();
    for (const VertexInfo& v : q.vertices())
        vertices.push_back({{"label", v.label}, {"provenance", provenance_name(v.provenance)}});
    json arrows = json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"from", q.vertex(a.tail).label},
                          {"to", q.vertex(a.head).label},
                          {"mult", a.multiplicity}});
    return {{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

const json& field(const json& j, const std::string& at, const std::string& name) {
    if (!j.is_object())
        throw SchemaError(at, "expected an object");
    const auto it = j.find(name);
    if (it == j.end())
        throw SchemaError(at + "." + name, "missing field");
    return *it;
}

std::string string_field(const json& j, const std::string& at, const std::string& name) {
    const json& value = field(j, at, name);
    if (!value.is_string())
        throw SchemaError(at + "." + name, "expected a string");
    return value.get<std::string>();
}

std::int64_t int_field(const json& j, const std::string& at, const std::string& name) {
    const json& value = field(j, at, name);
    if (!value.is_number_integer())
        throw SchemaError(at + "." + name, "expected an integer");
    return value.get<std::int64_t>();
}

Quiver quiver_from_json(const json& j, const std::string& at) {
    const json& vertices = field(j, at, "vertices");
    if (!vertices.is_array())
        throw SchemaError(at + ".vertices", "expected an array");

    std::vector<VertexInfo> infos;
    std::map<std::string, VertexId> index_of;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string vat = at + ".vertices[" + std::to_string(i) + "]";
        const std::string label = string_field(vertices[i], vat, "label");
        const std::string prov = string_field(vertices[i], vat, "provenance");
        if (prov != "original" && prov != "inserted")
            throw SchemaError(vat + ".provenance", "expected \"original\" or \"inserted\"");
        if (!index_of.emplace(label, static_cast<VertexId>(i)).second)
            throw SchemaError(vat + ".label", "duplicate label \"" + label + "\"");
        infos.push_back(
            {label, prov == "inserted" ? Provenance::Inserted : Provenance::Original});
    }

    const json& arrows = field(j, at, "arrows");
    if (!arrows.is_array())
        throw SchemaError(at + ".arrows", "expected an array");

    std::vector<Arrow> list;
    std::map<std::pair<VertexId, VertexId>, bool> seen;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const std::string aat = at + ".arrows[" + std::to_string(i) + "]";
        const std::string from = string_field(arrows[i], aat, "from");
        const std::string to = string_field(arrows[i], aat, "to");
        const auto from_it = index_of.find(from);
        if (from_it == index_of.end())
            throw SchemaError(aat + ".from", "unknown vertex \"" + from + "\"");
        const auto to_it = index_of.find(to);
        if (to_it == index_of.end())
            throw SchemaError(aat + ".to", "unknown vertex \"" + to + "\"");
        if (from_it->second == to_it->second)
            throw SchemaError(aat, "loop at vertex \"" + from + "\"");
        Entry mult = 1;
        if (arrows[i].is_object() && arrows[i].contains("mult"))
            mult = int_field(arrows[i], aat, "mult");
        if (mult < 1)
            throw SchemaError(aat + ".mult", "multiplicity must be positive");
        const std::pair<VertexId, VertexId> key{from_it->second, to_it->second};
        if (seen.contains(key))
            throw SchemaError(aat, "duplicate arrow \"" + from + "\" -> \"" + to + "\"");
        if (seen.contains({key.second, key.first}))
            throw SchemaError(aat, "2-cycle between \"" + from + "\" and \"" + to + "\"");
        seen[key] = true;
        list.push_back({key.first, key.second, mult});
    }
    return Quiver::from_arrows(std::move(infos), list);
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("document", e.what());
    }
}

} // namespace

Quiver parse_quiver(const std::string& text) {
    return quiver_from_json(parse_document(text), "quiver");
}

std::string serialize_quiver(const Quiver& q) { return quiver_to_json(q).dump(2) + "\n"; }

std::string serialize_trace(const Trace& trace) {
    const Quiver& final_q = trace.final_quiver;
    const auto label = [&](VertexId v) { return final_q.vertex(v).label; };

    json events = json::array();
    for (const MutationEvent& event : trace.events) {
        if (const auto* ins = std::get_if<InsertVertexEvent>(&event)) {
            events.push_back({{"kind", "insert_vertex"},
                              {"vertex", label(ins->vertex)},
                              {"head", label(ins->head)},
                              {"tail", label(ins->tail)}});
        } else if (const auto* mut = std::get_if<MutateAtEvent>(&event)) {
            events.push_back({{"kind", "mutate_at"}, {"vertex", label(mut->vertex)}});
        } else {
            const auto& srcs = std::get<MutateSourcesEvent>(event);
            json names = json::array();
            for (const VertexId s : srcs.vertices)
                names.push_back(label(s));
            events.push_back({{"kind", "mutate_sources"}, {"vertices", std::move(names)}});
        }
    }

    json doc = {{"input", quiver_to_json(trace.input)},
                {"ell", trace.ell},
                {"j", trace.j},
                {"events", std::move(events)},
                {"final", quiver_to_json(final_q)}};
    return doc.dump(2) + "\n";
}

Trace parse_trace(const std::string& text) {
    const json doc = parse_document(text);

    Trace trace;
    trace.input = quiver_from_json(field(doc, "trace", "input"), "trace.input");
    trace.final_quiver = quiver_from_json(field(doc, "trace", "final"), "trace.final");
    trace.ell = static_cast<int>(int_field(doc, "trace", "ell"));
    trace.j = static_cast<int>(int_field(doc, "trace", "j"));
    if (trace.ell < 0)
        throw SchemaError("trace.ell", "must be non-negative");
    if (trace.j < 0)
        throw SchemaError("trace.j", "must be non-negative");

    if (trace.final_quiver.vertex_count() < trace.input.vertex_count())
        throw SchemaError("trace.final.vertices", "fewer vertices than the input");
    for (int i = 0; i < trace.input.vertex_count(); ++i)
        if (trace.final_quiver.vertex(i) != trace.input.vertex(i))
            throw SchemaError("trace.final.vertices[" + std::to_string(i) + "]",
                              "does not match the input vertex of the same index");

    const auto resolve = [&](const std::string& label, const std::string& at) {
        const auto idx = trace.final_quiver.index_of(label);
        if (!idx)
            throw SchemaError(at, "unknown vertex \"" + label + "\"");
        return *idx;
    };

    const json& events = field(doc, "trace", "events");
    if (!events.is_array())
        throw SchemaError("trace.events", "expected an array");
    for (std::size_t i = 0; i < events.size(); ++i) {
        const std::string eat = "trace.events[" + std::to_string(i) + "]";
        const std::string kind = string_field(events[i], eat, "kind");
        if (kind == "insert_vertex") {
            trace.events.push_back(InsertVertexEvent{
                resolve(string_field(events[i], eat, "vertex"), eat + ".vertex"),
                resolve(string_field(events[i], eat, "head"), eat + ".head"),
                resolve(string_field(events[i], eat, "tail"), eat + ".tail")});
        } else if (kind == "mutate_at") {
            trace.events.push_back(MutateAtEvent{
                resolve(string_field(events[i], eat, "vertex"), eat + ".vertex")});
        } else if (kind == "mutate_sources") {
            const json& names = field(events[i], eat, "vertices");
            if (!names.is_array() || names.empty())
                throw SchemaError(eat + ".vertices", "expected a non-empty array");
            MutateSourcesEvent srcs;
            for (std::size_t s = 0; s < names.size(); ++s) {
                if (!names[s].is_string())
                    throw SchemaError(eat + ".vertices[" + std::to_string(s) + "]",
                                      "expected a string");
                srcs.vertices.push_back(resolve(names[s].get<std::string>(),
                                                eat + ".vertices[" + std::to_string(s) + "]"));
            }
            trace.events.push_back(std::move(srcs));
        } else {
            throw SchemaError(eat + ".kind", "unknown event kind \"" + kind + "\"");
        }
    }
    return trace;
}

std::string emit_dot(const Quiver& q) {
    const auto quoted = [](const std::string& label) {
        std::string out = "\"";
        for (const char c : label) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };

    std::string out = "digraph quiver {\n";
    for (const VertexInfo& v : q.vertices()) {
        out += "  " + quoted(v.label);
        if (v.provenance == Provenance::Inserted)
            out += " [style=dashed]";
        out += ";\n";
    }
    for (const Arrow& a : q.arrows())
        for (Entry copy = 0; copy < a.multiplicity; ++copy)
            out += "  " + quoted(q.vertex(a.tail).label) + " -> " +
                   quoted(q.vertex(a.head).label) + ";\n";
    out += "}\n";
    return out;
}

} // namespace quiver
