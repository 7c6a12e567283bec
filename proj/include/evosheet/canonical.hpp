#pragma once

// Bit-exact canonical workbook interchange format (.grid.json). The writer is
// fully deterministic: fixed key order, sheets in stored order, cells sorted
// by (row, col). The workbook id is a hash of everything but the id field
// itself, so it can be recomputed from any serialization.

#include <cstdint>
#include <string>

#include "evosheet/core.hpp"
#include "json.hpp"

namespace evosheet {

namespace detail {

inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline nlohmann::ordered_json sheets_to_json(const Workbook& wb) {
    nlohmann::ordered_json sheets = nlohmann::ordered_json::array();
    for (const auto& ws : wb.sheets) {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& [ref, v] : ws.cells()) {
            nlohmann::ordered_json c;
            c["r"] = ref.row;
            c["c"] = ref.col;
            c["kind"] = to_string(v.kind);
            c["text"] = v.text;
            if (v.numeric) c["num"] = *v.numeric;
            if (v.formula_src) c["formula"] = *v.formula_src;
            cells.push_back(std::move(c));
        }
        nlohmann::ordered_json s;
        s["name"] = ws.name();
        s["cells"] = std::move(cells);
        sheets.push_back(std::move(s));
    }
    return sheets;
}

}  // namespace detail

// Content hash over filename + sheet payload, independent of wb.id.
inline std::string compute_id(const Workbook& wb) {
    nlohmann::ordered_json body;
    body["filename"] = wb.filename;
    body["sheets"] = detail::sheets_to_json(wb);
    return detail::fnv1a_hex(body.dump());
}

inline void finalize_id(Workbook& wb) { wb.id = compute_id(wb); }

inline std::string save_canonical(const Workbook& wb) {
    nlohmann::ordered_json doc;
    doc["id"] = wb.id;
    doc["filename"] = wb.filename;
    doc["sheets"] = detail::sheets_to_json(wb);
    return doc.dump();
}

inline Workbook load_canonical(const std::string& bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("canonical JSON parse error at byte " + std::to_string(e.byte) +
                          ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc.contains("filename") ||
        !doc.contains("sheets") || !doc["sheets"].is_array())
        throw validation_error("canonical JSON: missing id/filename/sheets");

    Workbook wb;
    wb.id = doc["id"].get<std::string>();
    wb.filename = doc["filename"].get<std::string>();
    for (const auto& sj : doc["sheets"]) {
        if (!sj.is_object() || !sj.contains("name") || !sj.contains("cells"))
            throw validation_error("canonical JSON: sheet missing name/cells");
        Worksheet ws(sj["name"].get<std::string>());
        for (const auto& cj : sj["cells"]) {
            if (!cj.contains("r") || !cj.contains("c") || !cj.contains("kind") ||
                !cj.contains("text"))
                throw validation_error("canonical JSON: cell missing r/c/kind/text in sheet '" +
                                       ws.name() + "'");
            int r = cj["r"].get<int>();
            int c = cj["c"].get<int>();
            auto where = [&] { return "sheet '" + ws.name() + "' cell " + a1(r, c); };
            if (r < 0 || c < 0)
                throw validation_error("cell out of range at " + where());
            auto kind = cell_kind_from(cj["kind"].get<std::string>());
            if (!kind)
                throw validation_error("unknown cell kind at " + where());
            CellValue v;
            v.kind = *kind;
            v.text = cj["text"].get<std::string>();
            if (cj.contains("num")) v.numeric = cj["num"].get<double>();
            if (cj.contains("formula")) v.formula_src = cj["formula"].get<std::string>();
            if ((v.kind == CellKind::number || v.kind == CellKind::date ||
                 v.kind == CellKind::boolean) &&
                !v.numeric)
                throw validation_error("missing num for " + std::string(to_string(v.kind)) +
                                       " cell at " + where());
            if (v.kind == CellKind::formula && !v.formula_src)
                throw validation_error("missing formula source at " + where());
            if (v.kind == CellKind::text) {
                bool ws_only = true;
                for (unsigned char ch : v.text)
                    if (!std::isspace(ch)) { ws_only = false; break; }
                if (ws_only)
                    throw validation_error("blank text cell must be absent at " + where());
            }
            if (ws.cell(r, c))
                throw validation_error("duplicate cell at " + where());
            ws.set_cell(r, c, std::move(v));
        }
        wb.sheets.push_back(std::move(ws));
    }
    wb.check_invariants();
    if (std::string expect = compute_id(wb); wb.id != expect)
        throw validation_error("workbook id '" + wb.id + "' does not match content hash '" +
                               expect + "'");
    return wb;
}

}  // namespace evosheet
