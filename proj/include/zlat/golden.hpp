#pragma once

// Reference tables transcribed verbatim, misprints included. Computed tables
// are compared against these by invariants and genus, never by Gram matrix.

#include <string>
#include <utility>
#include <vector>

namespace zlat::golden {

struct IdRow {
    std::string simple;
    int nuR;
    char o;  // '+' or '-'
    std::string complete;
    std::string type;
};

inline const std::vector<IdRow>& table1A() {
    static const std::vector<IdRow> t{
        {"1<4>", 0, '-', "1<4>", "I"},  {"1<3>", 1, '-', "1_1<3>", "II"}, {"1<2>", 1, '+', "1<1_1+1>", "I"},
        {"1<2>", 2, '-', "1_2<2>", "II"}, {"1<1>", 3, '-', "1_3<1>", "II"}, {"1<1>", 0, '+', "1<1>", "II"},
    };
    return t;
}

inline const std::vector<IdRow>& table1B() {
    static const std::vector<IdRow> t{
        {"3+1<1>", 3, '-', "3_1+1<1>", "I"},       {"2+1<2>", 2, '-', "2_1+1<2>", "I"},
        {"1+1<3>", 1, '-', "1_1+1<3>", "I"},       {"4", 3, '-', "3_1+1", "II"},
        {"2+1<1>", 3, '-', "2_1+1_1<1>", "II"},    {"2+1<1>", 2, '-', "2_1+1<1>", "II"},
        {"1+1<2>", 2, '-', "1_1+1_1<2>", "II"},    {"1+1<2>", 1, '-', "1_1+1<2>", "II"},
        {"1<3>", 0, '-', "1<3>", "II"},            {"3", 3, '-', "3_1", "I"},
        {"3", 3, '-', "3_1", "II"},                {"3", 2, '-', "2_1+1", "II"},
        {"1+1<1>", 3, '-', "1_1+1_2<1>", "II"},    {"1+1<1>", 2, '-', "1_1+1_1<1>", "I"},
        {"1+1<1>", 2, '-', "1_1+1_1<1>", "II"},    {"1+1<1>", 1, '-', "1_1+1<1>", "II"},
        {"1<1<1>>", 0, '-', "1<1<1>>", "I"},       {"1<2>", 1, '-', "1_1<2>", "I"},
        {"1<2>", 1, '-', "1_1<2>", "II"},          {"1<2>", 0, '-', "1<2>", "II"},
        {"2", 3, '-', "1_2+1_1", "II"},            {"2", 2, '-', "2_1", "II"},
        {"2", 1, '-', "1_1+1", "II"},              {"1<1>", 2, '-', "1_2<1>", "II"},
        {"1<1>", 1, '-', "1_1<1>", "II"},          {"1<1>", 0, '-', "1<1>", "II"},
        {"1", 3, '-', "1_3", "II"},                {"1", 2, '-', "1_2", "II"},
        {"1", 1, '-', "1_1", "II"},                {"1", 0, '-', "1", "II"},
        {"0", 0, '-', "0", "II"},
    };
    return t;
}

inline const std::vector<IdRow>& table1C() {
    static const std::vector<IdRow> t{
        {"1+1<3>", 3, '+', "1+1<3_1>", "I"},          {"2+1<2>", 2, '+', "2+1<2_1>", "I"},
        {"3+1<1>", 1, '+', "3+1<1_1>", "I"},          {"1<3>", 3, '+', "1<3_1>", "II"},
        {"1+1<2>", 3, '+', "1+1_{-1}<2_1>", "II"},    {"1+1<2>", 2, '+', "1+1<2_1>", "II"},
        {"2+1<1>", 2, '+', "2+1_{-1}<1_1>", "II"},    {"2+1<1>", 1, '+', "2+1<1_1>", "II"},
        {"4", 0, '+', "4", "II"},                     {"1<2>", 3, '+', "1_{-1}<2_1>", "I"},
        {"1<2>", 3, '+', "1_{-1}<2_1>", "II"},        {"1<2>", 2, '+', "1<2_1>", "II"},
        {"1+1<1>", 3, '+', "1+1_{-2}<1_1>", "II"},    {"1+1<1>", 2, '+', "1+1_{-1}<1_1>", "I"},
        {"1+1<1>", 2, '+', "1+1_{-1}<1_1>", "II"},    {"1+1<1>", 1, '+', "1+1<1_1>", "II"},
        {"1<1<1>>", 0, '+', "1<1<1>>", "I"},          {"3", 1, '+', "1_{-1}+2", "I"},
        {"3", 1, '+', "1_{-1}+2", "II"},              {"3", 0, '+', "3", "II"},
        {"1<1>", 3, '+', "1_{-2}<1_1>", "II"},        {"1<1>", 2, '+', "1_{-1}<1_1>", "II"},
        {"1<1>", 1, '+', "1<1_1>", "II"},             {"2", 2, '+', "1_{-2}+1", "II"},
        {"2", 1, '+', "1_{-1}+1", "II"},              {"2", 0, '+', "2", "II"},
        {"1", 3, '+', "1_{-3}", "II"},                {"1", 2, '+', "1_{-2}", "II"},
        {"1", 1, '+', "1_{-1}", "II"},                {"1", 0, '+', "1", "II"},
        {"0", 0, '+', "0", "II"},
    };
    return t;
}

// S-pairs by (nu_i, o): S+ and S- in bracket notation, s = the master vector.
struct SPairRow {
    int nuI;
    char o;
    std::string sPlus, sMinus;
};

inline const std::vector<SPairRow>& table2() {
    static const std::vector<SPairRow> t{
        {0, '-', "0", "[6A2]_{s/3}"},
        {1, '-', "A2(2)", "[4A2+A2(2)]_{s/3}"},
        {2, '-', "2A2(2)", "[2A2+2A2(2)]_{s/3}"},
        {3, '-', "3A2(2)", "[3A2(2)]_{s/3}"},
        {0, '+', "[6<-6>]_{s/3}", "6A1"},
        {1, '+', "[A2(2)+4<-6>]_{s/3}", "4A1+A2(2)"},
        {2, '+', "[2A2(2)+2<-6>]_{s/3}", "2A1+2A2(2)"},
        {3, '+', "[3A2(2)]_{s/3}", "3A2(2)"},
    };
    return t;
}

struct RankPairRow {
    int r, r2;
    std::vector<int> deltas;
};

// Possible (r, r2) of the smaller half with the parities that occur.
inline const std::vector<RankPairRow>& table3A() {
    static const std::vector<RankPairRow> t{
        {2, 0, {0}},    {4, 0, {0}},    {6, 0, {0}},    {8, 0, {0}},    {1, 1, {1}},
        {3, 1, {1}},    {5, 1, {1}},    {7, 1, {1}},    {3, 3, {1}},    {5, 3, {1}},
        {2, 2, {0, 1}}, {4, 2, {0, 1}}, {6, 2, {0, 1}}, {4, 4, {0, 1}},
    };
    return t;
}

// The same for the larger half; always odd.
inline const std::vector<RankPairRow>& table3B() {
    static const std::vector<RankPairRow> t{
        {7, 1, {1}}, {5, 1, {1}}, {3, 1, {1}}, {1, 1, {1}}, {8, 2, {1}}, {6, 2, {1}}, {4, 2, {1}}, {2, 2, {1}},
        {6, 4, {1}}, {4, 4, {1}}, {7, 3, {1}}, {5, 3, {1}}, {3, 3, {1}}, {5, 5, {1}},
    };
    return t;
}

struct AdmissibleRow {
    std::vector<int> deltas;
    int r, r2;
    std::vector<std::pair<int, int>> pq;
};

inline const std::vector<AdmissibleRow>& table4() {
    static const std::vector<AdmissibleRow> t{
        {{0}, 2, 0, {{0, 0}, {1, 1}}},
        {{0}, 4, 0, {{0, 1}, {1, 2}}},
        {{0}, 6, 0, {{0, 2}, {1, 3}}},
        {{0}, 8, 0, {{0, 3}}},
        {{1}, 1, 1, {{0, 0}, {1, 0}}},
        {{1}, 3, 1, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}},
        {{1}, 5, 1, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}},
        {{1}, 7, 1, {{0, 2}, {0, 3}, {1, 3}}},
        {{0, 1}, 2, 2, {{0, 0}, {1, 1}}},
        {{1}, 2, 2, {{0, 1}, {1, 0}}},
        {{0}, 4, 2, {{0, 3}, {1, 0}}},
        {{0, 1}, 4, 2, {{0, 1}, {1, 2}}},
        {{1}, 4, 2, {{0, 0}, {0, 2}, {1, 1}, {1, 3}}},
        {{0}, 6, 2, {{1, 1}}},
        {{0, 1}, 6, 2, {{0, 2}, {1, 3}}},
        {{1}, 6, 2, {{0, 1}, {0, 3}, {1, 2}}},
        {{1}, 3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}},
        {{1}, 5, 3, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}}},
        {{0, 1}, 4, 4, {{0, 3}, {1, 0}}},
        {{1}, 4, 4, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3}}},
    };
    return t;
}

// One row of a T-half table: cells for q = 0..3; "-" excluded by the
// restrictions, "*" allowed alone but without an admissible complement.
struct HalfTableRow {
    std::string table;
    int r, r2, delta2, p;
    std::vector<std::string> cells;
};

inline const std::vector<HalfTableRow>& table5() {
    static const std::vector<HalfTableRow> t{
        {"5A", 2, 0, 0, 0, {"U", "-", "-", "-"}},
        {"5A", 4, 0, 0, 0, {"-", "U+A2", "-", "-"}},
        {"5A", 6, 0, 0, 0, {"-", "-", "U+2A2", "-"}},
        {"5A", 8, 0, 0, 0, {"-", "-", "-", "U+3A2"}},
        {"5B", 2, 0, 0, 1, {"-", "U(3)", "-", "-"}},
        {"5B", 4, 0, 0, 1, {"-", "-", "U(3)+A2", "-"}},
        {"5B", 6, 0, 0, 1, {"-", "-", "-", "U(3)+2A2"}},
        {"5B", 8, 0, 0, 1, {"U+E6", "-", "-", "-"}},
        {"5C", 1, 1, 1, 0, {"<2>", "-", "-", "-"}},
        {"5C", 3, 1, 1, 0, {"U+A1", "<2>+A2", "-", "-"}},
        {"5C", 5, 1, 1, 0, {"-", "U+A2+A1", "<2>+2A2", "-"}},
        {"5C", 7, 1, 1, 0, {"-", "-", "U+2A2+A1", "<2>+3A2"}},
        {"5D", 1, 1, 1, 1, {"<6>", "-", "-", "-"}},
        {"5D", 3, 1, 1, 1, {"-", "<6>+A2", "U(3)+<-6>", "-"}},
        {"5D", 5, 1, 1, 1, {"-", "-", "<6>+2A2", "U(3)+A2+<-6>"}},
        {"5D", 7, 1, 1, 1, {"*", "-", "-", "<6>+3A2"}},
        {"5E", 2, 2, 0, 0, {"U(2)", "-", "-", "-"}},
        {"5E", 2, 2, 1, 0, {"<2>+A1", "<2>+<-6>", "-", "-"}},
        {"5E", 4, 2, 0, 0, {"-", "U(2)+A2", "-", "U(3)+A2(2)"}},
        {"5E", 4, 2, 1, 0, {"U+2A1", "U+A1+<-6>", "U+2<-6>", "-"}},
        {"5E", 6, 2, 0, 0, {"*", "-", "U(2)+2A2", "-"}},
        {"5E", 6, 2, 1, 0, {"-", "U+A2+2A1", "U+A2+<-6>+A1", "U+A2+2<-6>"}},
        {"5E", 8, 2, 1, 0, {"-", "-", "*", "<2>+3A2+A1"}},
        {"5F", 2, 2, 0, 1, {"-", "U(6)", "-", "-"}},
        {"5F", 2, 2, 1, 1, {"<6>+A1", "<6>+<-6>", "-", "-"}},
        {"5F", 4, 2, 0, 1, {"U+A2(2)", "-", "U(6)+A2", "-"}},
        {"5F", 4, 2, 1, 1, {"-", "U(3)+2A1", "U(3)+A1+<-6>", "U(3)+2<-6>"}},
        {"5F", 6, 2, 0, 1, {"-", "U(3)+D4", "-", "U(6)+2A2"}},
        {"5F", 6, 2, 1, 1, {"*", "-", "U(3)+A2+2A1", "U(3)+A2+A1+<-6>"}},
        {"5F", 8, 2, 1, 1, {"*", "*", "-", "U(3)+2A2+2A1"}},
        {"5G", 3, 3, 1, 0, {"<2>+2A1", "<2>+A1+<-6>", "<2>+2<-6>", "-"}},
        {"5G", 5, 3, 1, 0, {"U+3A1", "U+2A1+<-6>", "U+A1+2<-6>", "U+3<-6>"}},
        {"5G", 5, 5, 1, 0, {"U(2)+3A1", "U(2)+2A1+<-6>", "U(2)+A1+2<-6>", "U(2)+3<-6>"}},
        {"5G", 7, 3, 1, 0, {"*", "*", "U+A2+<-6>+2A1", "U+A2+2<-6>+A1"}},
        {"5H", 3, 3, 1, 1, {"<6>+2A1", "<6>+A1+<-6>", "<6>+2<-6>", "-"}},
        {"5H", 5, 3, 1, 1, {"<6>+D4", "U(3)+3A1", "U(3)+2A1+<-6>", "U(3)+A1+2<-6>"}},
        {"5H", 5, 5, 1, 1, {"<6>+4A1", "U(6)+3A1", "U(6)+2A1+<-6>", "U(6)+A1+2<-6>"}},
        {"5H", 7, 3, 1, 1, {"*", "*", "U(3)+A2+3A1", "U(3)+A2+<-6>+2A1"}},
        {"5I", 4, 4, 0, 0, {"-", "-", "-", "U(6)+A2(2)"}},
        {"5I", 4, 4, 1, 0, {"<2>+3A1", "<2>+2A1+<-6>", "<2>+A1+2<-6>", "<2>+3<-6>"}},
        {"5I", 6, 4, 1, 0, {"*", "U+<-6>+3A1", "U+2<-6>+A1", "U+3<-6>+A1"}},
        {"5J", 4, 4, 0, 1, {"U(2)+A2(2)", "-", "-", "-"}},
        {"5J", 4, 4, 1, 1, {"<6>+3A1", "<6>+<-6>+2A1", "<6>+2<-6>+A1", "<6>+3<-6>"}},
        {"5J", 6, 4, 1, 1, {"*", "U(3)+4A1", "U(3)+<-6>+3A1", "U(3)+2<-6>+2A1"}},
    };
    return t;
}

struct HalfRow {
    int delta2, r, r2, p, q;
    std::string lattice;
};

// Halves failing the simplified 2-rank condition of Nikulin's criterion.
inline const std::vector<HalfRow>& table6A() {
    static const std::vector<HalfRow> t{
        {1, 1, 1, 0, 0, "<2>"},     {1, 1, 1, 1, 0, "<6>"},     {0, 2, 2, 0, 0, "U(2)"},
        {0, 2, 2, 1, 1, "U(6)"},    {1, 2, 2, 0, 0, "<2>+A1"},  {1, 2, 2, 0, 1, "<2>+<-6>"},
        {1, 2, 2, 1, 0, "<6>+A1"},  {1, 2, 2, 1, 1, "<6>+<-6>"},
    };
    return t;
}

// Halves failing only the 3-rank condition r3 <= r - 2.
inline const std::vector<HalfRow>& table6B() {
    static const std::vector<HalfRow> t{
        {0, 2, 0, 1, 1, "U(3)"},
        {0, 4, 0, 1, 2, "U(3)+A2"},
        {1, 3, 1, 1, 1, "U(3)+A1"},
        {1, 3, 1, 1, 2, "U(3)+<-6>"},
        {1, 5, 1, 1, 3, "U(3)+A2+<-6>"},
        {0, 4, 2, 0, 3, "U(3)+A2(2)"},
        {0, 4, 2, 1, 2, "U(6)+A2"},
        {1, 4, 2, 1, 2, "U(3)+A1+<-6>"},
        {1, 4, 2, 1, 3, "U(3)+2<-6>"},
        {1, 3, 3, 0, 2, "<2>+2<-6>"},
        {1, 3, 3, 1, 1, "<6>+A1+<-6>"},
        {1, 3, 3, 1, 2, "<6>+2<-6>"},
        {1, 5, 3, 1, 3, "U(3)+A1+2<-6>"},
        {0, 4, 4, 0, 3, "U(6)+A2(2)"},
        {1, 4, 4, 0, 3, "<2>+3<-6>"},
        {1, 4, 4, 1, 2, "<6>+A1+2<-6>"},
        {1, 4, 4, 1, 3, "<6>+3<-6>"},
        {1, 5, 5, 1, 3, "U(6)+A1+2<-6>"},
    };
    return t;
}

struct PairRow {
    int delta2, r, r2, q;
    std::string tPlus, tMinus;
};

inline const std::vector<PairRow>& table7A() {
    static const std::vector<PairRow> t{
        {0, 2, 0, 0, "U", "U(3)+2A2+A1"},
        {0, 4, 0, 1, "U+A2", "U(3)+A2+A1"},
        {0, 6, 0, 2, "U+2A2", "U(3)+A1"},
        {0, 8, 0, 3, "U+3A2", "<6>"},
        {1, 1, 1, 0, "<2>", "U(3)+2A2+2A1"},
        {1, 3, 1, 0, "U+A1", "<6>+<-6>+2A2"},
        {1, 3, 1, 1, "U+<-6>", "U(3)+A2+2A1"},
        {1, 5, 1, 1, "U+A2+A1", "<6>+<-6>+A2"},
        {1, 5, 1, 2, "<2>+2A2", "U(3)+2A1"},
        {1, 7, 1, 2, "U+2A2+A1", "<6>+<-6>"},
        {1, 7, 1, 3, "<2>+3A2", "<6>+A1"},
        {0, 2, 2, 0, "U(2)", "<6>+<-6>+2A2+A1"},
        {1, 2, 2, 0, "<2>+A1", "<6>+<-6>+2A2+A1"},
        {1, 2, 2, 1, "<2>+<-6>", "<6>+2A2+2A1"},
        {0, 4, 2, 3, "U(3)+A2(2)", "U+A2(2)+A1"},
        {1, 4, 2, 0, "U+2A1", "<6>+2<-6>+A2"},
        {1, 4, 2, 1, "<2>+A2+A1", "<6>+<-6>+A2+A1"},
        {1, 4, 2, 2, "U+2<-6>", "U(3)+3A1"},
        {0, 4, 2, 1, "U(2)+A2", "<6>+<-6>+A2+A1"},
        {0, 6, 2, 2, "U(2)+2A2", "<6>+<-6>+A1"},
        {1, 6, 2, 2, "U+A2+<-6>+A1", "<6>+<-6>+A1"},
        {1, 6, 2, 3, "<2>+2A2+<-6>", "<6>+2A1"},
        {1, 6, 2, 1, "U+A2+2A1", "<6>+2<-6>"},
        {1, 3, 3, 0, "<2>+2A1", "<6>+2<-6>+A2+A1"},
        {1, 3, 3, 1, "<2>+A1+<-6>", "<6>+<-6>+A2+2A1"},
        {1, 3, 3, 2, "<2>+2<-6>", "U(3)+4A1"},
        {1, 5, 3, 3, "U+3<-6>", "<6>+3A1"},
        {1, 5, 3, 2, "<2>+A2+A1+<-6>", "<6>+<-6>+2A1"},
        {1, 5, 3, 1, "<2>+A2+2A1", "<6>+2<-6>+A1"},
        {1, 5, 3, 0, "U+3A1", "<6>+3<-6>"},
        {1, 4, 4, 0, "<2>+3A1", "<6>+3<-6>+A1"},
        {1, 4, 4, 1, "<2>+2A1+<-6>", "<6>+2<-6>+A1"},
        {1, 4, 4, 2, "<2>+A1+2<-6>", "<6>+<-6>+3A1"},
        {1, 4, 4, 3, "<2>+3<-6>", "<6>+4A1"},
        {0, 4, 4, 3, "U(6)+A2(2)", "<6>+4A1"},
    };
    return t;
}

inline const std::vector<PairRow>& table7B() {
    static const std::vector<PairRow> t{
        {0, 2, 0, 1, "U(3)", "U+3A2"},
        {0, 4, 0, 2, "U(3)+A2", "U+A2+A1"},
        {0, 6, 0, 3, "U(3)+2A2", "U+A1"},
        {1, 1, 1, 0, "<6>", "U+2A2+A1+<-6>"},
        {1, 3, 1, 1, "<6>+A2", "<2>+2A2+A1"},
        {1, 3, 1, 2, "U(3)+<-6>", "U+A2+2A1"},
        {1, 5, 1, 2, "U(3)+A2+A1", "U+<-6>+A1"},
        {1, 5, 1, 3, "U(3)+A2+<-6>", "U+2A1"},
        {1, 7, 1, 3, "<6>+3A2", "<2>+A1"},
        {0, 2, 2, 1, "U(6)", "U(2)+2A2+A1"},
        {1, 2, 2, 1, "<6>+<-6>", "U+A2+2A1+<-6>"},
        {1, 2, 2, 0, "<6>+A1", "<2>+2A2+A1+<-6>"},
        {0, 4, 2, 0, "U+A2(2)", "U(3)+A2(2)+A1"},
        {0, 4, 2, 2, "U(6)+A2", "U(2)+A2+A1"},
        {1, 4, 2, 2, "<6>+A2+<-6>", "<2>+A2+2A1"},
        {1, 4, 2, 1, "<6>+A2+A1", "<2>+<-6>+A2+A1"},
        {1, 4, 4, 3, "<6>+3<-6>", "<2>+4A1"},
        {1, 4, 2, 3, "U(3)+2<-6>", "U+3A1"},
        {0, 6, 2, 3, "U(6)+2A2", "U(2)+A1"},
        {0, 6, 2, 1, "U(3)+D4", "<6>+A2(2)"},
        {1, 6, 2, 2, "<6>+2A2+A1", "<2>+A1+<-6>"},
        {1, 6, 2, 3, "U(3)+A2+A1+<-6>", "<2>+2A1"},
        {1, 3, 3, 0, "<6>+2A1", "<2>+2<-6>+A2+A1"},
        {1, 3, 3, 1, "<6>+A1+<-6>", "<2>+A2+2A1+<-6>"},
        {1, 3, 3, 2, "<6>+2<-6>", "U+<-6>+3A1"},
        {1, 5, 3, 0, "<6>+D4", "<6>+A2(2)+<-6>"},
        {1, 5, 3, 1, "<6>+A2+2A1", "<2>+A1+2<-6>"},
        {1, 5, 3, 3, "<6>+A2+2<-6>", "<2>+3A1"},
        {1, 5, 3, 2, "<6>+A2+A1+<-6>", "<2>+2A1+<-6>"},
        {1, 4, 4, 0, "<6>+3A1", "<2>+A1+3<-6>"},
        {1, 4, 4, 1, "<6>+<-6>+2A1", "<2>+2A1+2<-6>"},
        {1, 4, 4, 2, "<6>+A1+2<-6>", "<2>+3A1+<-6>"},
    };
    return t;
}

struct IrreversibleRow {
    int delta2, r, r2, p, q, rPrime, r2Prime, pPrime, qPrime;
    std::string t1, t2;
};

inline const std::vector<IrreversibleRow>& table8A() {
    static const std::vector<IrreversibleRow> t{
        {0, 8, 0, 0, 3, 1, 1, 1, 0, "U+3A2", "<6>"},
        {1, 7, 1, 0, 2, 2, 2, 1, 1, "U+2A2+A1", "<6>+<-6>"},
        {0, 6, 2, 1, 1, 3, 3, 0, 2, "U(3)+D4", "<6>+A2(2)"},
        {1, 6, 2, 0, 1, 3, 3, 1, 2, "U+A2+2A1", "<6>+2<-6>"},
        {1, 5, 3, 0, 0, 4, 4, 1, 3, "U+3A1", "<6>+3<-6>"},
        {1, 5, 3, 1, 0, 4, 4, 0, 3, "<6>+D4", "<2>+3<-6>"},
    };
    return t;
}

// q as printed.
struct ReversibleRow {
    int r, r2, q, delta2;
    std::string t1, t2;
};

inline const std::vector<ReversibleRow>& table8B() {
    static const std::vector<ReversibleRow> t{
        {2, 0, 0, 0, "U", "U(3)+2A2+A1"},
        {4, 0, 1, 0, "U+A2", "U(3)+A2+A1"},
        {6, 0, 2, 0, "U+2A2", "U(3)+A1"},
        {1, 1, 0, 1, "<2>", "U(3)+2A2+2A1"},
        {3, 1, 0, 1, "U+A1", "<6>+<-6>+2A2"},
        {3, 1, 1, 1, "U+<-6>", "U(3)+A2+2A1"},
        {5, 1, 1, 1, "U+A2+A1", "<6>+<-6>+A2"},
        {5, 1, 2, 1, "<2>+2A2", "U(3)+2A1"},
        {7, 1, 3, 1, "<2>+3A2", "<6>+A1"},
        {2, 2, 0, 0, "U(2)", "<6>+2A2+<-6>+A1"},
        {2, 2, 0, 1, "<2>+A1", "<6>+2A2+<-6>+A1"},
        {2, 2, 1, 1, "<2>+<-6>", "<6>+2A2+2A1"},
        {4, 2, 2, 1, "U+2A1", "<6>+2<-6>+A2"},
        {4, 2, 1, 0, "U(2)+A2", "<6>+<-6>+A2+A1"},
        {4, 2, 1, 1, "<2>+A2+A1", "<6>+<-6>+A2+A1"},
        {4, 2, 2, 1, "U+2<-6>", "U(3)+3A1"},
        {4, 2, 3, 0, "U(3)+A2(2)", "U+A2(2)+A1"},
        {6, 2, 2, 0, "U(2)+2A2", "<6>+<-6>+A1"},
        {6, 2, 2, 1, "U+A2+<-6>+A1", "<6>+<-6>+A1"},
        {6, 2, 3, 1, "<2>+2A2+<-6>", "<6>+2A1"},
        {3, 3, 2, 1, "<2>+2A1", "<6>+2<-6>+A2+A1"},
        {3, 3, 1, 1, "<2>+<-6>+A1", "<6>+<-6>+A2+2A1"},
        {3, 3, 2, 1, "<2>+2<-6>", "U(3)+4A1"},
        {5, 3, 1, 1, "<2>+A2+2A1", "<6>+2<-6>+A1"},
        {5, 3, 2, 1, "<2>+A2+<-6>+A1", "<6>+<-6>+2A1"},
        {5, 3, 3, 1, "U+3<-6>", "<6>+3A1"},
        {4, 4, 0, 1, "<2>+3A1", "<6>+3<-6>+A1"},
        {4, 4, 1, 1, "<2>+<-6>+2A1", "<6>+2<-6>+2A1"},
        {4, 4, 2, 1, "<2>+2<-6>+A1", "<6>+<-6>+3A1"},
        {4, 4, 3, 1, "<2>+3<-6>", "<6>+4A1"},
        {4, 4, 3, 0, "U(6)+A2(2)", "<6>+4A1"},
    };
    return t;
}

struct PartnerRow {
    int r, r2;
    std::string t1, t2;
};

inline const std::vector<PartnerRow>& table8C() {
    static const std::vector<PartnerRow> t{
        {6, 0, "U(3)+2A2", "U+A1"},
        {4, 0, "U(3)+A2", "U+A2+A1"},
        {2, 0, "U(3)", "U+3A2"},
        {7, 1, "<6>+3A2", "<2>+A1"},
        {5, 1, "U(3)+A2+<-6>", "U+2A1"},
        {5, 1, "U(3)+A2+A1", "U+<-6>+A1"},
        {3, 1, "U(3)+<-6>", "U+A2+2A1"},
        {3, 1, "<6>+A2", "<2>+2A2+A1"},
        {1, 1, "<6>", "U+2A2+A1+<-6>"},
        {6, 2, "U(6)+2A2", "<2>+2A1"},
        {6, 2, "U(3)+A2+A1+<-6>", "<2>+2A1"},
        {6, 2, "<6>+2A2+A1", "<2>+A1+<-6>"},
        {4, 2, "U(3)+2<-6>", "U+3A1"},
        {4, 2, "U(6)+A2", "<2>+A2+2A1"},
        {4, 2, "<6>+A2+<-6>", "<2>+A2+2A1"},
        {4, 2, "<6>+A2+A1", "<2>+<-6>+A2+A1"},
        {4, 2, "U+A2(2)", "U(3)+A2(2)+A1"},
        {2, 2, "U(6)", "U+A2+2A1+<-6>"},
        {2, 2, "<6>+<-6>", "U+A2+2A1+<-6>"},
        {2, 2, "<6>+A1", "<2>+2A2+A1+<-6>"},
        {5, 3, "<6>+A2+2<-6>", "<2>+3A1"},
        {5, 3, "<6>+A2+A1+<-6>", "<2>+2A1+<-6>"},
        {5, 3, "<6>+A2+2A1", "<2>+A1+2<-6>"},
        {3, 3, "<6>+2<-6>", "U+<-6>+3A1"},
        {3, 3, "<6>+A1+<-6>", "<2>+A2+2A1+<-6>"},
        {3, 3, "<6>+2A1", "<2>+2<-6>+A2+A1"},
        {4, 4, "<6>+3<-6>", "<2>+4A1"},
        {4, 4, "<6>+A1+2<-6>", "<2>+3A1+<-6>"},
        {4, 4, "<6>+<-6>+2A1", "<2>+2A1+2<-6>"},
        {4, 4, "<6>+3A1", "<2>+A1+3<-6>"},
        {4, 4, "U(2)+A2(2)", "<2>+A1+3<-6>"},
    };
    return t;
}

// Isomorphisms between different presentations of T-halves.
inline const std::vector<std::pair<std::string, std::string>>& presentationIsomorphisms() {
    static const std::vector<std::pair<std::string, std::string>> t{
        {"<6>+A2", "U(3)+A1"},
        {"<2>+A2", "U+<-6>"},
        {"<6>+A2(2)", "<2>+2<-6>"},
        {"<2>+A2(2)", "<6>+2A1"},
    };
    return t;
}

// U(2)+L = <2>+A1+L and U(6)+L = <6>+<-6>+L for L = A1 or <-6>.
inline const std::vector<std::pair<std::string, std::string>>& rewritingRules() {
    static const std::vector<std::pair<std::string, std::string>> t{
        {"U(2)+A1", "<2>+2A1"},
        {"U(2)+<-6>", "<2>+A1+<-6>"},
        {"U(6)+A1", "<6>+<-6>+A1"},
        {"U(6)+<-6>", "<6>+2<-6>"},
    };
    return t;
}

}  // namespace zlat::golden
