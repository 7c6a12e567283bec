#pragma once

// Header-string and worksheet-name normalization: stop words, special
// characters, numbers/dates, URLs and mail addresses are stripped, survivors
// are Porter-stemmed. An entire header cell becomes one composite vocabulary
// term ("Pipe/Service" -> "pipe servic", never two words).

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evosheet/core.hpp"

namespace evosheet {

// ---------------------------------------------------------------------------
// Porter stemmer, the 1980 algorithm with all five steps. Operates on
// lowercase alphabetic words; words of length <= 2 are returned unchanged.

class PorterStemmer {
public:
    std::string stem(const std::string& word) {
        b_ = word;
        k_ = static_cast<int>(b_.size()) - 1;
        if (k_ <= 1) return b_;
        step1ab();
        step1c();
        step2();
        step3();
        step4();
        step5();
        return b_.substr(0, k_ + 1);
    }

private:
    std::string b_;
    int k_ = 0;
    int j_ = 0;

    bool cons(int i) const {
        char c = b_[i];
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
        if (c == 'y') return i == 0 ? true : !cons(i - 1);
        return true;
    }

    // Number of vowel-consonant transitions in [0, j_].
    int m() const {
        int n = 0, i = 0;
        while (true) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool doublec(int j) const {
        if (j < 1) return false;
        if (b_[j] != b_[j - 1]) return false;
        return cons(j);
    }

    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char c = b_[i];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(const char* s) {
        int len = static_cast<int>(std::char_traits<char>::length(s));
        if (len > k_ + 1) return false;
        if (b_.compare(k_ - len + 1, len, s) != 0) return false;
        j_ = k_ - len;
        return true;
    }

    void setto(const char* s) {
        int len = static_cast<int>(std::char_traits<char>::length(s));
        b_.replace(j_ + 1, k_ - j_, s);
        k_ = j_ + len;
    }

    void r(const char* s) {
        if (m() > 0) setto(s);
    }

    void step1ab() {
        if (b_[k_] == 's') {
            if (ends("sses")) k_ -= 2;
            else if (ends("ies")) setto("i");
            else if (b_[k_ - 1] != 's') --k_;
        }
        if (ends("eed")) {
            if (m() > 0) --k_;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            if (ends("at")) setto("ate");
            else if (ends("bl")) setto("ble");
            else if (ends("iz")) setto("ize");
            else if (doublec(k_)) {
                char c = b_[k_];
                if (c != 'l' && c != 's' && c != 'z') --k_;
            } else if (m() == 1 && cvc(k_)) {
                setto("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
    }

    void step2() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
        case 'a':
            if (ends("ational")) { r("ate"); break; }
            if (ends("tional")) { r("tion"); break; }
            break;
        case 'c':
            if (ends("enci")) { r("ence"); break; }
            if (ends("anci")) { r("ance"); break; }
            break;
        case 'e':
            if (ends("izer")) { r("ize"); break; }
            break;
        case 'l':
            if (ends("bli")) { r("ble"); break; }
            if (ends("alli")) { r("al"); break; }
            if (ends("entli")) { r("ent"); break; }
            if (ends("eli")) { r("e"); break; }
            if (ends("ousli")) { r("ous"); break; }
            break;
        case 'o':
            if (ends("ization")) { r("ize"); break; }
            if (ends("ation")) { r("ate"); break; }
            if (ends("ator")) { r("ate"); break; }
            break;
        case 's':
            if (ends("alism")) { r("al"); break; }
            if (ends("iveness")) { r("ive"); break; }
            if (ends("fulness")) { r("ful"); break; }
            if (ends("ousness")) { r("ous"); break; }
            break;
        case 't':
            if (ends("aliti")) { r("al"); break; }
            if (ends("iviti")) { r("ive"); break; }
            if (ends("biliti")) { r("ble"); break; }
            break;
        case 'g':
            if (ends("logi")) { r("log"); break; }
            break;
        }
    }

    void step3() {
        switch (b_[k_]) {
        case 'e':
            if (ends("icate")) { r("ic"); break; }
            if (ends("ative")) { r(""); break; }
            if (ends("alize")) { r("al"); break; }
            break;
        case 'i':
            if (ends("iciti")) { r("ic"); break; }
            break;
        case 'l':
            if (ends("ical")) { r("ic"); break; }
            if (ends("ful")) { r(""); break; }
            break;
        case 's':
            if (ends("ness")) { r(""); break; }
            break;
        }
    }

    void step4() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
        case 'a':
            if (ends("al")) break;
            return;
        case 'c':
            if (ends("ance")) break;
            if (ends("ence")) break;
            return;
        case 'e':
            if (ends("er")) break;
            return;
        case 'i':
            if (ends("ic")) break;
            return;
        case 'l':
            if (ends("able")) break;
            if (ends("ible")) break;
            return;
        case 'n':
            if (ends("ant")) break;
            if (ends("ement")) break;
            if (ends("ment")) break;
            if (ends("ent")) break;
            return;
        case 'o':
            if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) break;
            if (ends("ou")) break;
            return;
        case 's':
            if (ends("ism")) break;
            return;
        case 't':
            if (ends("ate")) break;
            if (ends("iti")) break;
            return;
        case 'u':
            if (ends("ous")) break;
            return;
        case 'v':
            if (ends("ive")) break;
            return;
        case 'z':
            if (ends("ize")) break;
            return;
        default:
            return;
        }
        if (m() > 1) k_ = j_;
    }

    void step5() {
        j_ = k_;
        if (b_[k_] == 'e') {
            int a = m();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (b_[k_] == 'l' && doublec(k_) && m() > 1) --k_;
    }
};

inline std::string porter_stem(const std::string& word) {
    PorterStemmer st;
    return st.stem(word);
}

// ---------------------------------------------------------------------------
// Token classification tables.

namespace detail {

inline const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {
        "a", "about", "above", "after", "again", "against", "ain", "all", "am", "an",
        "and", "any", "are", "aren", "as", "at", "be", "because", "been", "before",
        "being", "below", "between", "both", "but", "by", "can", "cannot", "could",
        "couldn", "d", "did", "didn", "do", "does", "doesn", "doing", "don", "down",
        "during", "each", "few", "for", "from", "further", "had", "hadn", "has",
        "hasn", "have", "haven", "having", "he", "her", "here", "hers", "herself",
        "him", "himself", "his", "how", "i", "if", "in", "into", "is", "isn", "it",
        "its", "itself", "just", "ll", "m", "ma", "me", "mightn", "more", "most",
        "mustn", "my", "myself", "needn", "no", "nor", "not", "now", "o", "of",
        "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves",
        "out", "over", "own", "re", "s", "same", "shan", "she", "should", "shouldn",
        "so", "some", "such", "t", "than", "that", "the", "their", "theirs", "them",
        "themselves", "then", "there", "these", "they", "this", "those", "through",
        "to", "too", "under", "until", "up", "ve", "very", "was", "wasn", "we",
        "were", "weren", "what", "when", "where", "which", "while", "who", "whom",
        "why", "will", "with", "won", "would", "wouldn", "y", "you", "your",
        "yours", "yourself", "yourselves",
    };
    return words;
}

inline const std::set<std::string>& default_artifact_words() {
    static const std::set<std::string> words = {"sheet", "worksheet", "tab", "chart"};
    return words;
}

inline const std::set<std::string>& error_literals() {
    static const std::set<std::string> lits = {
        "#NAME?", "#REF!", "#VALUE!", "#DIV/0!", "#N/A", "#NUM!", "#NULL!",
    };
    return lits;
}

inline const std::set<std::string>& month_words() {
    static const std::set<std::string> months = {
        "january", "february", "march", "april", "may", "june", "july", "august",
        "september", "october", "november", "december", "jan", "feb", "mar", "apr",
        "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec",
    };
    return months;
}

inline std::string to_lower(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

// \d{1,4}[-/.]\d{1,2}([-/.]\d{1,4})? over a whole token, e.g. "2000/7/5".
inline bool date_pattern(const std::string& tok) {
    size_t i = 0;
    auto digits = [&](size_t lo, size_t hi) {
        size_t n = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])) && n < hi) {
            ++i;
            ++n;
        }
        return n >= lo;
    };
    auto sep = [&] {
        if (i < tok.size() && (tok[i] == '-' || tok[i] == '/' || tok[i] == '.')) {
            ++i;
            return true;
        }
        return false;
    };
    if (!digits(1, 4) || !sep() || !digits(1, 2)) return false;
    if (i == tok.size()) return true;
    if (!sep() || !digits(1, 4)) return false;
    return i == tok.size();
}

inline bool is_url(const std::string& tok) {
    if (tok.find("://") != std::string::npos) return true;
    std::string low = to_lower(tok);
    return low.rfind("www.", 0) == 0;
}

inline bool is_mail(const std::string& tok) {
    size_t at = tok.find('@');
    if (at == std::string::npos || at != tok.rfind('@')) return false;
    return tok.find('.', at + 1) != std::string::npos;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(static_cast<char>(c));
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// Runs of [A-Za-z0-9]; every other character is a separator.
inline std::vector<std::string> split_special(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : s) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(c));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline std::string letters_only(const std::string& s) {
    std::string out;
    for (unsigned char c : s)
        if (std::isalpha(c)) out.push_back(static_cast<char>(c));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

using KeywordSet = std::set<std::string>;

// Normalization tables. Defaults are embedded; word lists can be overridden
// from plain-text files (one word per line).
struct TextNorm {
    std::set<std::string> stopwords = detail::default_stopwords();
    std::set<std::string> artifact_words = detail::default_artifact_words();

    static std::set<std::string> load_word_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw error("cannot read word list: " + path);
        std::set<std::string> words;
        std::string line;
        while (std::getline(in, line)) {
            line = detail::trim(line);
            if (!line.empty()) words.insert(detail::to_lower(line));
        }
        return words;
    }
};

inline const TextNorm& default_textnorm() {
    static const TextNorm norm;
    return norm;
}

inline bool is_default_sheet_name(const std::string& name) {
    std::string low = detail::to_lower(name);
    size_t i = 5;
    if (low.rfind("sheet", 0) != 0 || low.size() <= 5) return false;
    size_t d0 = i;
    while (i < low.size() && std::isdigit(static_cast<unsigned char>(low[i]))) ++i;
    if (i == d0) return false;
    if (i == low.size()) return true;
    if (low[i] != '(') return false;
    ++i;
    d0 = i;
    while (i < low.size() && std::isdigit(static_cast<unsigned char>(low[i]))) ++i;
    if (i == d0) return false;
    return i + 1 == low.size() && low[i] == ')';
}

namespace detail {

// Shared token pipeline: lowercase, drop numbers/dates/stop/artifact words,
// keep the alphabetic part of mixed tokens ("FY2000" -> "fy"), stem the rest.
inline std::vector<std::string> meaningful_tokens(const std::string& raw, const TextNorm& norm) {
    std::vector<std::string> out;
    for (const std::string& tok : split_ws(raw)) {
        if (is_url(tok) || is_mail(tok)) continue;
        if (date_pattern(tok)) continue;
        for (const std::string& sub : split_special(tok)) {
            std::string low = to_lower(sub);
            if (all_digits(low)) continue;
            std::string word = letters_only(low);
            if (word.empty()) continue;
            if (norm.stopwords.count(word)) continue;
            if (norm.artifact_words.count(word)) continue;
            if (month_words().count(word)) continue;
            out.push_back(porter_stem(word));
        }
    }
    return out;
}

}  // namespace detail

// One composite vocabulary term per header cell, or nothing if every token is
// meaningless.
inline std::optional<std::string> normalize_header(const std::string& raw,
                                                   const TextNorm& norm = default_textnorm()) {
    std::string trimmed = detail::trim(raw);
    if (detail::error_literals().count(trimmed)) return std::nullopt;
    std::vector<std::string> toks = detail::meaningful_tokens(trimmed, norm);
    if (toks.empty()) return std::nullopt;
    std::string joined = toks[0];
    for (size_t i = 1; i < toks.size(); ++i) {
        joined += ' ';
        joined += toks[i];
    }
    return joined;
}

// Stemmed meaningful words of a worksheet name.
inline KeywordSet sheet_keywords(const std::string& name,
                                 const TextNorm& norm = default_textnorm()) {
    KeywordSet set;
    for (std::string& t : detail::meaningful_tokens(name, norm))
        set.insert(std::move(t));
    return set;
}

}  // namespace evosheet
