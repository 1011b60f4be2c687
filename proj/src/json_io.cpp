#include "crystalkit/json_io.hpp"

namespace crystalkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

Rank parse_rank(const json& doc) {
    if (!doc.contains("rank")) throw ParseError("document is missing \"rank\"");
    return Rank(require_int(doc.at("rank"), "rank"));
}

Multisegment parse_ms(const json& doc) {
    Rank rank = parse_rank(doc);
    if (!doc.contains("segments") || !doc.at("segments").is_array())
        throw ParseError("ms document needs a \"segments\" array");
    Multisegment out(rank);
    Segment prev{0, 0};
    for (const auto& item : doc.at("segments")) {
        if (!item.is_array() || item.size() != 3)
            throw ParseError("each segment must be a [start,end,mult] triple");
        Segment seg{require_int(item[0], "segment start"), require_int(item[1], "segment end")};
        int mult = require_int(item[2], "segment multiplicity");
        if (mult < 1) throw ValidationError("segment multiplicity must be at least 1");
        if (std::pair(seg.start, seg.end) <= std::pair(prev.start, prev.end))
            throw ValidationError("segments must be strictly sorted by (start, end)");
        prev = seg;
        out = out.add(seg, mult);
    }
    return out;
}

Tableau parse_tab(const json& doc) {
    Rank rank = parse_rank(doc);
    if (!doc.contains("rows") || !doc.at("rows").is_array())
        throw ParseError("tab document needs a \"rows\" array");
    std::vector<std::vector<int>> rows;
    for (const auto& row : doc.at("rows")) {
        if (!row.is_array()) throw ParseError("each row must be an array");
        std::vector<int> cells;
        cells.reserve(row.size());
        for (const auto& cell : row) cells.push_back(require_int(cell, "entry"));
        rows.push_back(std::move(cells));
    }
    return Tableau(rank, std::move(rows));
}

LusztigDatum parse_pbw(const json& doc) {
    Rank rank = parse_rank(doc);
    if (!doc.contains("exponents") || !doc.at("exponents").is_array())
        throw ParseError("pbw document needs an \"exponents\" array");
    std::vector<int> exps;
    for (const auto& cell : doc.at("exponents")) exps.push_back(require_int(cell, "exponent"));
    return LusztigDatum(rank, std::move(exps));
}

}  // namespace

Document parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(err.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string())
        throw ParseError("document is missing a string \"kind\"");
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "ms") return parse_ms(doc);
    if (kind == "tab") return parse_tab(doc);
    if (kind == "pbw") return parse_pbw(doc);
    throw ParseError("unknown document kind \"" + kind + "\"");
}

nlohmann::ordered_json to_json(const Multisegment& m) {
    nlohmann::ordered_json doc;
    doc["kind"] = "ms";
    doc["rank"] = m.rank().n();
    auto segs = nlohmann::ordered_json::array();
    for (const auto& [seg, mult] : m.entries())
        segs.push_back({seg.start, seg.end, mult});
    doc["segments"] = std::move(segs);
    return doc;
}

nlohmann::ordered_json to_json(const Tableau& b) {
    nlohmann::ordered_json doc;
    doc["kind"] = "tab";
    doc["rank"] = b.rank().n();
    doc["rows"] = b.rows();
    return doc;
}

nlohmann::ordered_json to_json(const LusztigDatum& a) {
    nlohmann::ordered_json doc;
    doc["kind"] = "pbw";
    doc["rank"] = a.rank().n();
    doc["exponents"] = a.exponents();
    return doc;
}

nlohmann::ordered_json to_json(const Document& d) {
    return std::visit([](const auto& value) { return to_json(value); }, d);
}

std::string serialize(const Document& d) { return to_json(d).dump(); }

std::string to_text(const Multisegment& m) {
    if (m.empty()) return "∅";
    std::string out;
    for (const auto& [seg, mult] : m.entries()) {
        if (!out.empty()) out += ' ';
        out += '[' + std::to_string(seg.start) + ',' + std::to_string(seg.end) + ']';
        if (mult > 1) out += '^' + std::to_string(mult);
    }
    return out;
}

std::string to_text(const Tableau& b) {
    if (b.rows().empty()) return "∅";
    std::string out;
    for (const auto& row : b.rows()) {
        if (!out.empty()) out += '/';
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(row[c]);
        }
    }
    return out;
}

std::string to_text(const LusztigDatum& a) {
    std::string out = "(";
    for (std::size_t p = 0; p < a.exponents().size(); ++p) {
        if (p > 0) out += ',';
        out += std::to_string(a.exponents()[p]);
    }
    out += ')';
    return out;
}

}  // namespace crystalkit
