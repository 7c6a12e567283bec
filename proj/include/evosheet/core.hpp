#pragma once

// Canonical in-memory model of spreadsheet content. Everything downstream
// (feature extraction, similarity, clustering) works on these types and never
// touches a binary spreadsheet format.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evosheet {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input bytes that do not parse at all (JSON, zip, XML...).
struct parse_error : error {
    using error::error;
};

// Structurally parseable input that violates a model invariant.
struct validation_error : error {
    using error::error;
};

enum class CellKind { text, number, date, boolean, formula, error };

inline const char* to_string(CellKind k) {
    switch (k) {
    case CellKind::text: return "text";
    case CellKind::number: return "number";
    case CellKind::date: return "date";
    case CellKind::boolean: return "boolean";
    case CellKind::formula: return "formula";
    case CellKind::error: return "error";
    }
    return "?";
}

inline std::optional<CellKind> cell_kind_from(const std::string& s) {
    if (s == "text") return CellKind::text;
    if (s == "number") return CellKind::number;
    if (s == "date") return CellKind::date;
    if (s == "boolean") return CellKind::boolean;
    if (s == "formula") return CellKind::formula;
    if (s == "error") return CellKind::error;
    return std::nullopt;
}

// One non-blank cell. Blank cells are absent from the grid, never stored.
// Dates carry both the ISO-8601 text and the serial number; formula cells
// carry the formula source plus the cached result (numeric when the file
// cached one).
struct CellValue {
    CellKind kind = CellKind::text;
    std::string text;
    std::optional<double> numeric;
    std::optional<std::string> formula_src;

    bool operator==(const CellValue&) const = default;
};

// The kind a cell behaves as during header extraction: a formula cell stands
// for its cached result (formulas compute data, not headers).
inline CellKind effective_kind(const CellValue& v) {
    if (v.kind == CellKind::formula)
        return v.numeric ? CellKind::number : CellKind::text;
    return v.kind;
}

struct CellRef {
    int row = 0;
    int col = 0;
    auto operator<=>(const CellRef&) const = default;
};

// "C7"-style reference, used in logs and debug dumps only.
inline std::string a1(int row, int col) {
    std::string s;
    for (int c = col + 1; c > 0;) {
        int d = (c - 1) % 26;
        s.insert(s.begin(), static_cast<char>('A' + d));
        c = (c - 1) / 26;
    }
    return s + std::to_string(row + 1);
}

inline std::string a1_range(int top, int left, int bottom, int right) {
    return a1(top, left) + ":" + a1(bottom, right);
}

class Worksheet {
public:
    Worksheet() = default;
    explicit Worksheet(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // Whitespace-only text is normalized to blank, i.e. the cell is dropped.
    void set_cell(int row, int col, CellValue v) {
        if (row < 0 || col < 0)
            throw validation_error("negative cell coordinate in sheet '" + name_ + "'");
        if (v.kind == CellKind::text) {
            bool ws_only = true;
            for (unsigned char c : v.text)
                if (!std::isspace(c)) { ws_only = false; break; }
            if (ws_only) return;
        }
        cells_[CellRef{row, col}] = std::move(v);
        if (row >= n_rows_) n_rows_ = row + 1;
        if (col >= n_cols_) n_cols_ = col + 1;
    }

    const CellValue* cell(int row, int col) const {
        auto it = cells_.find(CellRef{row, col});
        return it == cells_.end() ? nullptr : &it->second;
    }

    const std::map<CellRef, CellValue>& cells() const { return cells_; }
    int n_rows() const { return n_rows_; }
    int n_cols() const { return n_cols_; }
    bool empty() const { return cells_.empty(); }

    bool operator==(const Worksheet&) const = default;

private:
    std::string name_;
    std::map<CellRef, CellValue> cells_;  // sorted by (row, col)
    int n_rows_ = 0;
    int n_cols_ = 0;
};

// Tight used-range extents: (0,0) for an empty sheet, otherwise the smallest
// box containing every cell.
inline std::pair<int, int> used_range(const Worksheet& ws) {
    return {ws.n_rows(), ws.n_cols()};
}

struct Workbook {
    std::string id;        // content hash, filled in by finalize_id()
    std::string filename;  // original base name
    std::vector<Worksheet> sheets;

    const Worksheet* sheet(const std::string& name) const {
        for (const auto& s : sheets)
            if (s.name() == name) return &s;
        return nullptr;
    }

    void check_invariants() const {
        for (size_t i = 0; i < sheets.size(); ++i)
            for (size_t j = i + 1; j < sheets.size(); ++j)
                if (sheets[i].name() == sheets[j].name())
                    throw validation_error("duplicate sheet name '" + sheets[i].name() +
                                           "' in workbook '" + filename + "'");
    }

    bool operator==(const Workbook&) const = default;
};

}  // namespace evosheet
