#pragma once

// Computed tables, their md/csv/json renderings, and comparison with the
// transcribed reference tables.

#include "zlat/golden.hpp"
#include "zlat/sextic_id.hpp"

#include <json.hpp>

#include <sstream>

namespace zlat {

using Json = nlohmann::ordered_json;

struct Table {
    std::string id, title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<Json> records;  // optional structured record per row
};

inline const std::vector<std::string>& tableIds() {
    static const std::vector<std::string> ids{"1A", "1B", "1C", "2",  "3A", "3B", "4",  "5A", "5B", "5C", "5D", "5E",
                                              "5F", "5G", "5H", "5I", "5J", "6A", "6B", "7A", "7B", "8A", "8B", "8C"};
    return ids;
}

// ---------------------------------------------------------------------------
// Text helpers.

// ASCII expression -> <n> as angle brackets and A2 as A with a subscript.
inline std::string prettyExpr(const std::string& expr, bool ascii) {
    if (ascii) return expr;
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (std::size_t i = 0; i < expr.size(); ++i) {
        char c = expr[i];
        if (c == '<') out += "⟨";
        else if (c == '>') out += "⟩";
        else if ((c == 'A' || c == 'D' || c == 'E') && i + 1 < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i + 1]))) {
            out += c;
            while (i + 1 < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i + 1]))) out += digits[expr[++i] - '0'];
        } else if (c == '-' && i > 0 && expr[i - 1] == '<') out += "−";
        else out += c;
    }
    return out;
}

// Accepts the pretty forms back: angle brackets and the minus sign.
inline std::string asciiExpr(std::string s) {
    const std::vector<std::pair<std::string, std::string>> subs{{"⟨", "<"}, {"⟩", ">"}, {"−", "-"}, {"₀", "0"},
                                                                {"₁", "1"}, {"₂", "2"}, {"₃", "3"}, {"₄", "4"},
                                                                {"₅", "5"}, {"₆", "6"}, {"₇", "7"}, {"₈", "8"},
                                                                {"₉", "9"}};
    for (const auto& [from, to] : subs)
        for (std::size_t pos; (pos = s.find(from)) != std::string::npos;) s.replace(pos, from.size(), to);
    return s;
}

inline std::string pairText(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

inline std::string deltasText(const std::vector<int>& ds) {
    std::string s;
    for (int d : ds) s += (s.empty() ? "" : ",") + std::to_string(d);
    return s;
}

inline std::string pqListText(const std::vector<std::pair<int, int>>& pq) {
    std::string s;
    for (const auto& [p, q] : pq) s += (s.empty() ? "" : ",") + pairText(p, q);
    return s;
}

inline bool sameGenus(const Lattice& a, const Lattice& b) { return a.rank() == b.rank() && genusTag(a) == genusTag(b); }

// ---------------------------------------------------------------------------
// Records.

inline Json halfRecord(const HalfWitness& w) {
    return Json{{"expr", w.lattice.expr}, {"r", w.inv.r},         {"r2", w.inv.r2},
                {"delta2", w.inv.delta2}, {"p", w.inv.p},          {"q", w.inv.q}};
}

inline Json tPairRecord(std::size_t index) {
    const auto& e = census()[index];
    Json j{{"tPlus", halfRecord(e.pair.tPlus)}, {"tMinus", halfRecord(e.pair.tMinus)}, {"reversible", e.reversible}};
    j["partnerIndex"] = e.partnerIndex ? Json(*e.partnerIndex) : Json(nullptr);
    j["tableRef"] = e.tableRef;
    return j;
}

inline Json codeTree(const CompleteCode& code) {
    switch (code.kind) {
        case CompleteCode::Kind::Null: return Json{{"kind", "null"}};
        case CompleteCode::Kind::ThreeNest: return Json{{"kind", "threeNest"}};
        default: break;
    }
    CompleteCode c = normalized(code);
    auto groups = [](const std::vector<OvalGroup>& gs) {
        Json a = Json::array();
        for (const auto& g : gs) a.push_back(Json{{"count", g.count}, {"k", g.k}});
        return a;
    };
    Json j{{"kind", "ovals"}, {"outer", groups(c.outer)}};
    j["ambient"] = c.ambient ? Json(*c.ambient) : Json(nullptr);
    j["inner"] = groups(c.inner);
    return j;
}

inline Json idRecord(const SexticID& id, const std::string& tableRef, bool ascii) {
    CubicTopology t = cubicTopology(id);
    return Json{{"code", renderCode(id.code, ascii)},
                {"codeTree", codeTree(id.code)},
                {"type", curveTypeText(id.type)},
                {"o", signText(id.o)},
                {"nuR", id.nuR},
                {"chi", t.chi},
                {"handles", t.handles},
                {"tableRef", tableRef}};
}

inline SexticID censusID(std::size_t index) {
    const auto& e = census()[index];
    return idFromInvariants(e.pair.tPlus.inv, e.reversible);
}

// Quintuples that could complete t to an ascending pair, on either side.
inline std::vector<THalfInvariants> possibleComplements(const THalfInvariants& t) {
    std::vector<THalfInvariants> out;
    if (t.r2 <= std::min(t.r, 8 - t.r)) out.push_back(complementOf(t));
    if (t.delta2 == 1 && t.r2 >= 1)
        for (int d = 0; d <= 1; ++d) out.push_back({9 - t.r, t.r2 - 1, d, 1 - t.p, 3 - t.q});
    return out;
}

// ---------------------------------------------------------------------------
// Half tables: which (r2, p) each of 5A..5J covers.

struct HalfTableSpec {
    std::vector<int> r2s;
    int p;
};

inline HalfTableSpec halfTableSpec(const std::string& id) {
    static const std::map<std::string, HalfTableSpec> specs{
        {"5A", {{0}, 0}},    {"5B", {{0}, 1}},    {"5C", {{1}, 0}}, {"5D", {{1}, 1}}, {"5E", {{2}, 0}},
        {"5F", {{2}, 1}},    {"5G", {{3, 5}, 0}}, {"5H", {{3, 5}, 1}}, {"5I", {{4}, 0}}, {"5J", {{4}, 1}},
    };
    auto it = specs.find(id);
    if (it == specs.end()) throw std::invalid_argument("unknown half table " + id);
    return it->second;
}

// "-" violates a restriction, "*" passes but completes no admissible pair.
inline std::string halfCell(const THalfInvariants& t) {
    if (!passesRestrictions(t)) return "-";
    if (!isTHalf(t)) return "*";
    return witnessLattice(t).lattice.expr;
}

struct HalfTableRowKey {
    int r, r2, delta2;
};

inline std::vector<HalfTableRowKey> halfTableRows(const std::string& id) {
    HalfTableSpec spec = halfTableSpec(id);
    std::vector<HalfTableRowKey> rows;
    for (int r = 1; r <= 9; ++r)
        for (int r2 : spec.r2s)
            for (int d = 0; d <= 1; ++d) {
                bool any = false;
                for (int q = 0; q <= 3; ++q) {
                    THalfInvariants t{r, r2, d, spec.p, q};
                    if (structuralViolation(t).empty() && isTHalf(t)) any = true;
                }
                if (any) rows.push_back({r, r2, d});
            }
    std::sort(rows.begin(), rows.end(), [](const HalfTableRowKey& a, const HalfTableRowKey& b) {
        return std::tie(a.r, a.r2, a.delta2) < std::tie(b.r, b.r2, b.delta2);
    });
    return rows;
}

// All distinct halves occurring in the census, either side.
inline std::vector<HalfWitness> censusHalves() {
    std::map<THalfInvariants, HalfWitness> m;
    for (const auto& e : census()) {
        m.emplace(e.pair.tPlus.inv, e.pair.tPlus);
        m.emplace(e.pair.tMinus.inv, e.pair.tMinus);
    }
    std::vector<HalfWitness> out;
    for (auto& [k, w] : m) out.push_back(w);
    std::sort(out.begin(), out.end(), [](const HalfWitness& a, const HalfWitness& b) {
        return std::make_tuple(a.inv.r2, a.inv.r, a.inv.delta2, a.inv.p, a.inv.q) <
               std::make_tuple(b.inv.r2, b.inv.r, b.inv.delta2, b.inv.p, b.inv.q);
    });
    return out;
}

// The simplified conditions of Nikulin's criterion used for the exception
// tables: r2 < r or r2 = r > 2, and r3 <= r - 2.
inline bool simplifiedTwoRankCondition(const THalfInvariants& t) { return t.r2 < t.r || (t.r2 == t.r && t.r > 2); }
inline bool simplifiedThreeRankCondition(const THalfInvariants& t) { return t.r3() + 2 <= t.r; }

// Census rows for 7A/7B in reference order; unmatched rows are appended.
inline std::vector<std::size_t> pairTableOrder(const std::string& id) {
    const int p = id == "7A" ? 0 : 1;
    const auto& gold = id == "7A" ? golden::table7A() : golden::table7B();
    const auto& c = census();
    std::vector<std::size_t> order;
    std::set<std::size_t> used;
    for (const auto& g : gold)
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto& t = c[i].pair.tPlus.inv;
            if (!used.count(i) && t.p == p && t.delta2 == g.delta2 && t.r == g.r && t.r2 == g.r2 && t.q == g.q) {
                order.push_back(i);
                used.insert(i);
                break;
            }
        }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!used.count(i) && c[i].pair.tPlus.inv.p == p) order.push_back(i);
    return order;
}

// ---------------------------------------------------------------------------
// Builders.

inline Table buildTable(const std::string& id, bool ascii = false) {
    Table t;
    t.id = id;
    auto E = [&](const std::string& s) { return prettyExpr(s, ascii); };
    const auto& c = census();

    if (id == "1A" || id == "1B" || id == "1C") {
        t.title = id == "1A" ? "IDs of sextics from irreversible pairs"
                             : (id == "1B" ? "IDs with o = -, aligned with 8B" : "IDs with o = +, aligned with 8C");
        t.columns = {"#", "simple code", "nu_r"};
        if (id == "1A") t.columns.push_back("o");
        t.columns.insert(t.columns.end(), {"complete code", "type"});
        const std::string src = id == "1A" ? "8A" : (id == "1B" ? "8B" : "8C");
        int n = 0;
        for (std::size_t i : censusRowsOf(src)) {
            SexticID sid = censusID(i);
            std::vector<std::string> row{std::to_string(++n), renderSimpleCode(sid.code, ascii), std::to_string(sid.nuR)};
            if (id == "1A") row.push_back(signText(sid.o));
            row.insert(row.end(), {renderCode(sid.code, ascii), curveTypeText(sid.type)});
            t.rows.push_back(row);
            t.records.push_back(idRecord(sid, c[i].tableRef, ascii));
        }
    } else if (id == "2") {
        t.title = "S-pairs";
        t.columns = {"nu_i", "o", "S+", "S-", "rank S+", "rank S-", "discr S+", "discr S-"};
        auto discrText = [&](const Lattice& L) { return L.rank() ? renderForm(discriminantForm(L), ascii) : "0"; };
        for (Sign o : {Sign::Minus, Sign::Plus})
            for (int nu = 0; nu <= 3; ++nu) {
                SPair s = sPair(nu, o);
                t.rows.push_back({std::to_string(nu), signText(o), E(s.sPlus.expr), E(s.sMinus.expr),
                                  std::to_string(s.sPlus.rank()), std::to_string(s.sMinus.rank()), discrText(s.sPlus),
                                  discrText(s.sMinus)});
            }
    } else if (id == "3A" || id == "3B") {
        t.title = id == "3A" ? "(r, r2) of the smaller half" : "(r, r2) of the larger half";
        t.columns = {"(r,r2)", "delta2"};
        std::map<std::pair<int, int>, std::set<int>> ds;
        for (const auto& ip : admissibleInvariants()) ds[{ip.t1.r, ip.t1.r2}].insert(ip.t1.delta2);
        std::vector<std::tuple<int, int, int, std::vector<int>>> rows;  // (kind, r2, r, deltas)
        for (auto& [rk, s] : ds) {
            std::vector<int> v(s.begin(), s.end());
            int kind = v.size() == 2 ? 2 : v[0];
            rows.emplace_back(kind, rk.second, rk.first, v);
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& [kind, r2, r, v] : rows) {
            if (id == "3A") t.rows.push_back({pairText(r, r2), deltasText(v)});
            else t.rows.push_back({pairText(9 - r, r2 + 1), "1"});
        }
    } else if (id == "4") {
        t.title = "Admissible invariants of ascending pairs";
        t.columns = {"delta2", "(r,r2)", "(p,q)", "(r',r2')", "(p',q')"};
        for (const auto& g : groupedAdmissible()) {
            std::vector<std::pair<int, int>> comp;
            for (const auto& [p, q] : g.pq) comp.emplace_back(1 - p, 3 - q);
            t.rows.push_back({deltasText(g.deltas), pairText(g.r, g.r2), pqListText(g.pq), pairText(9 - g.r, g.r2 + 1),
                              pqListText(comp)});
        }
    } else if (id.size() == 2 && id[0] == '5') {
        HalfTableSpec spec = halfTableSpec(id);
        t.title = "T-halves with p = " + std::to_string(spec.p);
        t.columns = {"(r,r2)", "delta2", "q=0", "q=1", "q=2", "q=3"};
        for (const auto& k : halfTableRows(id)) {
            std::vector<std::string> row{pairText(k.r, k.r2), std::to_string(k.delta2)};
            for (int q = 0; q <= 3; ++q) row.push_back(E(halfCell({k.r, k.r2, k.delta2, spec.p, q})));
            t.rows.push_back(row);
        }
    } else if (id == "6A" || id == "6B") {
        t.title = id == "6A" ? "Halves failing the 2-rank condition" : "Halves failing only the 3-rank condition";
        t.columns = {"delta2", "(r,r2)", "(p,q)", "T", "certified by"};
        for (const auto& w : censusHalves()) {
            bool two = simplifiedTwoRankCondition(w.inv), three = simplifiedThreeRankCondition(w.inv);
            bool take = id == "6A" ? !two : (two && !three);
            if (!take) continue;
            t.rows.push_back({std::to_string(w.inv.delta2), pairText(w.inv.r, w.inv.r2), pairText(w.inv.p, w.inv.q),
                              E(w.lattice.expr), stabilityRule(w.lattice)});
        }
    } else if (id == "7A" || id == "7B") {
        t.title = id == "7A" ? "Ascending pairs with p = 0" : "Ascending pairs with p = 1";
        t.columns = {"#", "delta2", "(r,r2)", "q", "T+", "T-"};
        int n = 0;
        for (std::size_t i : pairTableOrder(id)) {
            const auto& e = c[i];
            const auto& inv = e.pair.tPlus.inv;
            t.rows.push_back({std::to_string(++n), std::to_string(inv.delta2), pairText(inv.r, inv.r2),
                              std::to_string(inv.q), E(e.pair.tPlus.lattice.expr), E(e.pair.tMinus.lattice.expr)});
            t.records.push_back(tPairRecord(i));
        }
    } else if (id == "8A" || id == "8B" || id == "8C") {
        t.title = id == "8A" ? "Irreversible pairs" : (id == "8B" ? "Reversible pairs with p = 0" : "Their reversion partners");
        if (id == "8A") t.columns = {"#", "delta2", "(r,r2)", "(p,q)", "(r',r2')", "(p',q')", "T1", "T2"};
        else if (id == "8B") t.columns = {"#", "(r,r2)", "q", "delta2", "T1", "T2"};
        else t.columns = {"#", "(r,r2)", "T1", "T2"};
        int n = 0;
        for (std::size_t i : censusRowsOf(id)) {
            const auto& e = c[i];
            const auto &a = e.pair.tPlus.inv, &b = e.pair.tMinus.inv;
            const std::string t1 = E(e.pair.tPlus.lattice.expr), t2 = E(e.pair.tMinus.lattice.expr);
            const std::string num = std::to_string(++n);
            if (id == "8A")
                t.rows.push_back({num, std::to_string(a.delta2), pairText(a.r, a.r2), pairText(a.p, a.q), pairText(b.r, b.r2),
                                  pairText(b.p, b.q), t1, t2});
            else if (id == "8B")
                t.rows.push_back({num, pairText(a.r, a.r2), std::to_string(a.q), std::to_string(a.delta2), t1, t2});
            else t.rows.push_back({num, pairText(a.r, a.r2), t1, t2});
            t.records.push_back(tPairRecord(i));
        }
    } else {
        throw std::invalid_argument("unknown table id: " + id);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Rendering.

inline std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

inline Json tableJson(const Table& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        Json cells = Json::object();
        for (std::size_t j = 0; j < t.columns.size(); ++j) cells[t.columns[j]] = t.rows[i][j];
        Json row{{"cells", cells}};
        if (i < t.records.size()) row["record"] = t.records[i];
        rows.push_back(row);
    }
    return Json{{"id", t.id}, {"title", t.title}, {"columns", t.columns}, {"rows", rows}};
}

inline std::string renderTable(const Table& t, const std::string& format) {
    std::ostringstream os;
    if (format == "md") {
        os << "Table " << t.id << ". " << t.title << "\n\n|";
        for (const auto& c : t.columns) os << " " << c << " |";
        os << "\n|";
        for (std::size_t j = 0; j < t.columns.size(); ++j) os << "---|";
        os << "\n";
        for (const auto& r : t.rows) {
            os << "|";
            for (const auto& x : r) os << " " << x << " |";
            os << "\n";
        }
    } else if (format == "csv") {
        for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << csvField(t.columns[j]);
        os << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << csvField(r[j]);
            os << "\n";
        }
    } else if (format == "json") {
        os << tableJson(t).dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return os.str();
}

// Minimal structural check of an emitted table document.
inline std::string validateTableJson(const Json& j) {
    if (!j.is_object()) return "not an object";
    for (const char* k : {"id", "title", "columns", "rows"})
        if (!j.contains(k)) return std::string("missing key ") + k;
    if (!j["columns"].is_array() || !j["rows"].is_array()) return "columns/rows not arrays";
    for (const auto& row : j["rows"]) {
        if (!row.contains("cells") || !row["cells"].is_object()) return "row without cells";
        for (const auto& c : j["columns"])
            if (!row["cells"].contains(c.get<std::string>())) return "row missing column " + c.get<std::string>();
        if (row.contains("record")) {
            const auto& r = row["record"];
            if (r.contains("tPlus")) {
                for (const char* k : {"tPlus", "tMinus", "reversible", "partnerIndex", "tableRef"})
                    if (!r.contains(k)) return std::string("pair record missing ") + k;
                for (const char* half : {"tPlus", "tMinus"})
                    for (const char* k : {"expr", "r", "r2", "delta2", "p", "q"})
                        if (!r[half].contains(k)) return std::string("half record missing ") + k;
            } else {
                for (const char* k : {"code", "codeTree", "type", "o", "nuR", "chi", "handles", "tableRef"})
                    if (!r.contains(k)) return std::string("id record missing ") + k;
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Comparison with the reference tables.

struct Discrepancy {
    std::string table;
    int row = 0;  // 1-based reference row, 0 for table-level findings
    std::string key;
    std::string detail;
    bool documented = false;
};

// Defects of the reference tables known in advance, by (table, row, key).
inline const std::vector<std::tuple<std::string, int, std::string>>& documentedDefects() {
    static const std::vector<std::tuple<std::string, int, std::string>> d{
        {"5B", 4, "q=0"},          // U+E6 is not a T-half: its complement would need q = 3 at rank 1
        {"5E", 7, "q=0"},          // (8,2) odd, p = 0, q = 0 printed "-"; <2>+E7 realizes it
        {"5I", 3, "q=2"},          // printed lattice has rank 5
        {"7A", 32, "T-"},          // rank 4 instead of 5
        {"7B", 1, "T-"},           // printed U+3A2 has rank 8; the complement of U(3) has rank 7
        {"7B", 0, "missing-row"},  // (4,4) even, p = 1 pair absent
        {"8C", 3, "T2"},           // same misprint as 7B row 1
        {"8B", 13, "q"},           // printed 2, actual 0
        {"8B", 21, "q"},           // printed 2, actual 0
    };
    return d;
}

inline std::vector<Discrepancy> diffGolden(const std::string& id) {
    std::vector<Discrepancy> out;
    auto add = [&](int row, const std::string& key, const std::string& detail) {
        Discrepancy d{id, row, key, detail, false};
        for (const auto& [t, r, k] : documentedDefects())
            if (t == id && r == row && k == key) d.documented = true;
        out.push_back(d);
    };
    auto genusMismatch = [](const std::string& goldExpr, const Lattice& computed) {
        return !sameGenus(parseLatticeExpr(goldExpr), computed);
    };
    const auto& c = census();
    Table t = buildTable(id, true);

    if (id == "1A" || id == "1B" || id == "1C") {
        const auto& g = id == "1A" ? golden::table1A() : (id == "1B" ? golden::table1B() : golden::table1C());
        if (g.size() != t.rows.size()) add(0, "rows", std::to_string(t.rows.size()) + " vs " + std::to_string(g.size()));
        const std::string src = id == "1A" ? "8A" : (id == "1B" ? "8B" : "8C");
        auto idx = censusRowsOf(src);
        for (std::size_t i = 0; i < std::min(g.size(), idx.size()); ++i) {
            SexticID sid = censusID(idx[i]);
            const int row = static_cast<int>(i + 1);
            if (renderSimpleCode(sid.code, true) != g[i].simple) add(row, "simple", renderSimpleCode(sid.code, true) + " vs " + g[i].simple);
            if (renderCode(sid.code, true) != g[i].complete) add(row, "complete", renderCode(sid.code, true) + " vs " + g[i].complete);
            if (sid.nuR != g[i].nuR) add(row, "nu_r", std::to_string(sid.nuR) + " vs " + std::to_string(g[i].nuR));
            if (signText(sid.o)[0] != g[i].o) add(row, "o", std::string(signText(sid.o)) + " vs " + g[i].o);
            if (curveTypeText(sid.type) != g[i].type) add(row, "type", std::string(curveTypeText(sid.type)) + " vs " + g[i].type);
        }
    } else if (id == "2") {
        const auto& g = golden::table2();
        for (std::size_t i = 0; i < g.size(); ++i) {
            SPair s = sPair(g[i].nuI, g[i].o == '+' ? Sign::Plus : Sign::Minus);
            const int row = static_cast<int>(i + 1);
            if (s.sPlus.expr != g[i].sPlus) add(row, "S+", s.sPlus.expr + " vs " + g[i].sPlus);
            if (s.sMinus.expr != g[i].sMinus) add(row, "S-", s.sMinus.expr + " vs " + g[i].sMinus);
        }
    } else if (id == "3A" || id == "3B") {
        const auto& g = id == "3A" ? golden::table3A() : golden::table3B();
        if (g.size() != t.rows.size()) add(0, "rows", std::to_string(t.rows.size()) + " vs " + std::to_string(g.size()));
        for (std::size_t i = 0; i < std::min(g.size(), t.rows.size()); ++i) {
            std::string want = pairText(g[i].r, g[i].r2), wantD = deltasText(g[i].deltas);
            if (t.rows[i][0] != want || t.rows[i][1] != wantD)
                add(static_cast<int>(i + 1), "row", t.rows[i][0] + " " + t.rows[i][1] + " vs " + want + " " + wantD);
        }
    } else if (id == "4") {
        const auto& g = golden::table4();
        if (g.size() != t.rows.size()) add(0, "rows", std::to_string(t.rows.size()) + " vs " + std::to_string(g.size()));
        for (std::size_t i = 0; i < std::min(g.size(), t.rows.size()); ++i) {
            std::vector<std::string> want{deltasText(g[i].deltas), pairText(g[i].r, g[i].r2), pqListText(g[i].pq)};
            for (std::size_t j = 0; j < want.size(); ++j)
                if (t.rows[i][j] != want[j]) add(static_cast<int>(i + 1), t.columns[j], t.rows[i][j] + " vs " + want[j]);
        }
    } else if (id.size() == 2 && id[0] == '5') {
        HalfTableSpec spec = halfTableSpec(id);
        int row = 0;
        std::set<std::tuple<int, int, int>> seen;
        for (const auto& g : golden::table5()) {
            if (g.table != id) continue;
            ++row;
            seen.insert({g.r, g.r2, g.delta2});
            for (int q = 0; q <= 3; ++q) {
                THalfInvariants pos{g.r, g.r2, g.delta2, spec.p, q};
                const std::string& cell = g.cells[q];
                const std::string key = "q=" + std::to_string(q);
                std::string mine = halfCell(pos);
                if (cell == "-" || cell == "*") {
                    if (mine != cell) add(row, key, (mine == "-" || mine == "*" ? mine : "T-half") + " vs " + cell);
                    continue;
                }
                auto inv = tHalfInvariants(parseLatticeExpr(cell));
                if (!inv || *inv != pos) add(row, key, cell + " has invariants " + (inv ? inv->text() : "none"));
                else if (mine == "-" || mine == "*") add(row, key, mine + " vs " + cell);
                else if (genusMismatch(cell, witnessLattice(pos).lattice)) add(row, key, "genus of " + cell);
            }
        }
        for (const auto& k : halfTableRows(id))
            if (!seen.count({k.r, k.r2, k.delta2}))
                add(0, "extra-row", pairText(k.r, k.r2) + " delta2=" + std::to_string(k.delta2));
    } else if (id == "6A" || id == "6B") {
        const auto& g = id == "6A" ? golden::table6A() : golden::table6B();
        if (g.size() != t.rows.size()) add(0, "rows", std::to_string(t.rows.size()) + " vs " + std::to_string(g.size()));
        for (std::size_t i = 0; i < std::min(g.size(), t.rows.size()); ++i) {
            const auto& x = g[i];
            std::vector<std::string> want{std::to_string(x.delta2), pairText(x.r, x.r2), pairText(x.p, x.q)};
            for (std::size_t j = 0; j < want.size(); ++j)
                if (t.rows[i][j] != want[j]) add(static_cast<int>(i + 1), t.columns[j], t.rows[i][j] + " vs " + want[j]);
            if (genusMismatch(x.lattice, parseLatticeExpr(t.rows[i][3]))) add(static_cast<int>(i + 1), "T", "genus of " + x.lattice);
        }
    } else if (id == "7A" || id == "7B") {
        const auto& g = id == "7A" ? golden::table7A() : golden::table7B();
        auto order = pairTableOrder(id);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const int row = static_cast<int>(i + 1);
            if (i >= order.size()) {
                add(row, "row", "no census pair");
                continue;
            }
            const auto& e = c[order[i]];
            const auto& inv = e.pair.tPlus.inv;
            if (inv.delta2 != g[i].delta2 || inv.r != g[i].r || inv.r2 != g[i].r2 || inv.q != g[i].q) {
                add(row, "row", "no census pair with these invariants");
                continue;
            }
            if (genusMismatch(g[i].tPlus, e.pair.tPlus.lattice)) add(row, "T+", "genus of " + g[i].tPlus);
            if (genusMismatch(g[i].tMinus, e.pair.tMinus.lattice)) add(row, "T-", "genus of " + g[i].tMinus);
        }
        for (std::size_t i = g.size(); i < order.size(); ++i)
            add(0, "missing-row", c[order[i]].pair.tPlus.lattice.expr + " / " + c[order[i]].pair.tMinus.lattice.expr);
    } else if (id == "8A" || id == "8B" || id == "8C") {
        auto idx = censusRowsOf(id);
        std::size_t n = id == "8A" ? golden::table8A().size() : (id == "8B" ? golden::table8B().size() : golden::table8C().size());
        if (n != idx.size()) add(0, "rows", std::to_string(idx.size()) + " vs " + std::to_string(n));
        for (std::size_t i = 0; i < std::min(n, idx.size()); ++i) {
            const auto& e = c[idx[i]];
            const auto& a = e.pair.tPlus.inv;
            const int row = static_cast<int>(i + 1);
            std::string t1, t2;
            if (id == "8A") {
                const auto& g = golden::table8A()[i];
                THalfInvariants w1{g.r, g.r2, g.delta2, g.p, g.q};
                if (a != w1) add(row, "T1 invariants", a.text() + " vs " + w1.text());
                const auto& b = e.pair.tMinus.inv;
                if (b.r != g.rPrime || b.r2 != g.r2Prime || b.p != g.pPrime || b.q != g.qPrime)
                    add(row, "T2 invariants", b.text());
                t1 = g.t1;
                t2 = g.t2;
            } else if (id == "8B") {
                const auto& g = golden::table8B()[i];
                if (a.r != g.r || a.r2 != g.r2 || a.delta2 != g.delta2) add(row, "(r,r2,delta2)", a.text());
                if (a.q != g.q) add(row, "q", std::to_string(a.q) + " vs printed " + std::to_string(g.q));
                t1 = g.t1;
                t2 = g.t2;
            } else {
                const auto& g = golden::table8C()[i];
                if (a.r != g.r || a.r2 != g.r2) add(row, "(r,r2)", a.text());
                t1 = g.t1;
                t2 = g.t2;
            }
            if (genusMismatch(t1, e.pair.tPlus.lattice)) add(row, "T1", "genus of " + t1);
            if (genusMismatch(t2, e.pair.tMinus.lattice)) add(row, "T2", "genus of " + t2);
        }
    } else {
        throw std::invalid_argument("unknown table id: " + id);
    }
    return out;
}

}  // namespace zlat
