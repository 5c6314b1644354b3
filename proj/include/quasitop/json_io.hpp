#ifndef QUASITOP_JSON_IO_HPP
#define QUASITOP_JSON_IO_HPP

#include "ground.hpp"
#include "order.hpp"
#include "topo.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasitop {

using json = nlohmann::json;

/// Malformed or invalid input document. The message carries the position
/// (byte offset for syntax errors, JSON path otherwise).
class DocumentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline json to_json(Subset s, const GroundSet& ground)
{
    json out = json::array();
    s.for_each([&](std::size_t i) { out.push_back(ground.label(i)); });
    return out;
}

inline json to_json(const SetFamily& family, const GroundSet& ground)
{
    json out = json::array();
    for (Subset s : family) {
        out.push_back(to_json(s, ground));
    }
    return out;
}

inline json to_json(const GroundSet& ground) { return ground.labels(); }

/// {"n": n, "rows": [...]} where rows[x] is the bitmask of the up-set of x.
inline json to_json(const Quasiorder& q)
{
    return json{{"n", q.size()}, {"rows", q.rows()}};
}

inline json to_json(const GenTopology& t)
{
    return json{{"ground", to_json(t.carrier())}, {"open_sets", to_json(t.opens(), t.carrier())}};
}

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

enum class DocumentKind { family, open_sets, quasiorder };

/// A ground set with exactly one of: a family, a list of open sets, or a quasiorder.
struct SpaceDocument {
    std::optional<std::string> name;
    GroundSet ground;
    DocumentKind kind = DocumentKind::family;
    SetFamily family; // the family, or the open sets
    std::optional<Quasiorder> order;
    std::size_t closure_added = 0; // pairs added by reflexive-transitive closure on load

    GenTopology space() const { return GenTopology(ground, family); }
};

namespace detail {

inline std::string path_join(const std::string& path, const std::string& key) { return path + "/" + key; }

inline std::string read_label(const json& j, const std::string& where)
{
    if (!j.is_string()) {
        throw DocumentError(where + ": expected an element label (string), got " + j.dump());
    }
    return j.get<std::string>();
}

inline Subset read_subset(const json& j, const GroundSet& ground, const std::string& where)
{
    if (!j.is_array()) {
        throw DocumentError(where + ": expected an array of labels, got " + j.dump());
    }
    Mask m = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = path_join(where, std::to_string(i));
        const std::string label = read_label(j[i], at);
        auto idx = ground.index_of(label);
        if (!idx) {
            throw DocumentError(at + ": label \"" + label + "\" is not in the ground set");
        }
        m |= Mask{1} << *idx;
    }
    return Subset(m);
}

inline SetFamily read_family(const json& j, const GroundSet& ground, const std::string& where)
{
    if (!j.is_array()) {
        throw DocumentError(where + ": expected an array of subsets");
    }
    std::vector<Subset> members;
    for (std::size_t i = 0; i < j.size(); ++i) {
        members.push_back(read_subset(j[i], ground, path_join(where, std::to_string(i))));
    }
    return SetFamily(std::move(members));
}

inline std::pair<Quasiorder, std::size_t> read_pairs(const json& j, const GroundSet& ground, const std::string& where)
{
    if (!j.is_array()) {
        throw DocumentError(where + ": expected an array of [x, y] pairs");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = path_join(where, std::to_string(i));
        if (!j[i].is_array() || j[i].size() != 2) {
            throw DocumentError(at + ": expected a pair [x, y]");
        }
        std::size_t ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
            const std::string label = read_label(j[i][k], path_join(at, std::to_string(k)));
            auto idx = ground.index_of(label);
            if (!idx) {
                throw DocumentError(at + ": label \"" + label + "\" is not in the ground set");
            }
            ends[k] = *idx;
        }
        pairs.emplace_back(ends[0], ends[1]);
    }
    const std::size_t n = ground.size();
    Quasiorder q = Quasiorder::closure_of(n, pairs);
    // How many pairs the closure had to add beyond the listed ones and the diagonal.
    std::vector<Mask> listed(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        listed[x] |= Mask{1} << x;
    }
    for (auto [x, y] : pairs) {
        listed[x] |= Mask{1} << y;
    }
    std::size_t given = 0;
    for (Mask r : listed) {
        given += popcount(r);
    }
    return {q, q.pair_count() - given};
}

inline std::pair<Quasiorder, std::size_t> read_quasiorder(const json& j, const GroundSet& ground,
                                                          const std::string& where)
{
    if (j.is_array()) {
        return read_pairs(j, ground, where);
    }
    if (!j.is_object()) {
        throw DocumentError(where + ": expected a pair list or an object");
    }
    if (j.contains("pairs")) {
        return read_pairs(j["pairs"], ground, path_join(where, "pairs"));
    }
    if (!j.contains("rows") || !j["rows"].is_array()) {
        throw DocumentError(where + ": expected \"pairs\" or \"rows\"");
    }
    if (j.contains("n") && (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() != ground.size())) {
        throw DocumentError(where + "/n: does not match the ground set size");
    }
    std::vector<Mask> rows;
    for (std::size_t i = 0; i < j["rows"].size(); ++i) {
        const auto& r = j["rows"][i];
        if (!r.is_number_unsigned()) {
            throw DocumentError(where + "/rows/" + std::to_string(i) + ": expected an unsigned integer");
        }
        rows.push_back(r.get<Mask>());
    }
    if (rows.size() != ground.size()) {
        throw DocumentError(where + "/rows: expected one row per ground element");
    }
    try {
        return {Quasiorder::from_rows(std::move(rows)), 0};
    } catch (const DomainError& e) {
        throw DocumentError(where + "/rows: " + e.what());
    }
}

} // namespace detail

inline SpaceDocument parse_document(const json& j)
{
    if (!j.is_object()) {
        throw DocumentError("/: expected a JSON object");
    }
    SpaceDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) {
            throw DocumentError("/name: expected a string");
        }
        doc.name = j["name"].get<std::string>();
    }
    if (!j.contains("ground") || !j["ground"].is_array()) {
        throw DocumentError("/ground: expected an array of element labels");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < j["ground"].size(); ++i) {
        labels.push_back(detail::read_label(j["ground"][i], "/ground/" + std::to_string(i)));
    }
    try {
        doc.ground = GroundSet(std::move(labels));
    } catch (const DomainError& e) {
        throw DocumentError(std::string("/ground: ") + e.what());
    }

    const int present = int(j.contains("family")) + int(j.contains("open_sets")) + int(j.contains("quasiorder"));
    if (present != 1) {
        throw DocumentError("/: expected exactly one of \"family\", \"open_sets\", \"quasiorder\"");
    }
    if (j.contains("family")) {
        doc.kind = DocumentKind::family;
        doc.family = detail::read_family(j["family"], doc.ground, "/family");
    } else if (j.contains("open_sets")) {
        doc.kind = DocumentKind::open_sets;
        doc.family = detail::read_family(j["open_sets"], doc.ground, "/open_sets");
        if (auto v = find_gentopology_violation(doc.family)) {
            if (v->missing_empty) {
                throw DocumentError("/open_sets: not a generalized topology: the empty set is missing");
            }
            throw DocumentError("/open_sets: not a generalized topology: the union of "
                                + to_string(v->pair->first, doc.ground) + " and "
                                + to_string(v->pair->second, doc.ground) + " is missing");
        }
    } else {
        doc.kind = DocumentKind::quasiorder;
        auto [q, added] = detail::read_quasiorder(j["quasiorder"], doc.ground, "/quasiorder");
        doc.order = std::move(q);
        doc.closure_added = added;
    }
    return doc;
}

inline SpaceDocument parse_document_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return parse_document(j);
}

inline json document_to_json(const SpaceDocument& doc)
{
    json out;
    if (doc.name) {
        out["name"] = *doc.name;
    }
    out["ground"] = to_json(doc.ground);
    switch (doc.kind) {
    case DocumentKind::family:
        out["family"] = to_json(doc.family, doc.ground);
        break;
    case DocumentKind::open_sets:
        out["open_sets"] = to_json(doc.family, doc.ground);
        break;
    case DocumentKind::quasiorder:
        out["quasiorder"] = to_json(*doc.order);
        break;
    }
    return out;
}

} // namespace quasitop

#endif
