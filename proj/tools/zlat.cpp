// zlat: tables, lattice inspection, gluing, pair lookup and verification.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include "zlat/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace zlat;

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Options {
    bool ascii = false;
    // tables
    std::string tableId, format = "md";
    bool diffGolden = false;
    // lattice
    std::string expr, show = "gram,invariants,discr";
    // glue
    std::string l1, l2;
    bool autoGlue = false;
    std::vector<long> primes;
    // pair / partner
    std::string tPlus, tMinus, row;
    bool json = false;
    // verify
    std::string suite = "all";
};

std::vector<std::string> splitList(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Lattice readLattice(const std::string& text) { return parseLatticeExpr(asciiExpr(text)); }

void printGram(const IntMatrix& g) {
    std::vector<std::string> cells;
    std::size_t w = 1;
    for (const auto& x : g.a) {
        cells.push_back(x.get_str());
        w = std::max(w, cells.back().size());
    }
    for (std::size_t i = 0; i < g.rows; ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < g.cols; ++j) {
            const auto& c = cells[i * g.cols + j];
            std::cout << (j ? " " : "") << std::string(w - c.size(), ' ') << c;
        }
        std::cout << "]\n";
    }
}

std::string signatureText(const Lattice& L) {
    Signature s = signature(L);
    return "(" + std::to_string(s.nPlus) + "," + std::to_string(s.nMinus) + ")";
}

void printInvariants(const Lattice& L) {
    std::cout << "rank: " << L.rank() << "\n"
              << "det: " << L.det().get_str() << "\n"
              << "signature: " << signatureText(L) << "\n"
              << "even: " << (L.isEven() ? "yes" : "no") << "\n";
    if (!L.isEven() || L.rank() == 0) return;
    FQF F = discriminantForm(L);
    std::cout << "brown: " << brown(F) << "\n";
    for (long p : primesOf(F)) std::cout << "rank_" << p << ": " << pRank(F, p) << "\n";
    if (auto h = analyzeHalf(L)) {
        const auto& t = h->inv;
        std::cout << "quintuple (r,r2,delta2,p,q): (" << t.r << "," << t.r2 << "," << t.delta2 << "," << t.p << "," << t.q << ")\n"
                  << "T-half: " << (isTHalf(t) ? "yes" : "no") << "\n";
    }
    std::string rule = stabilityRule(L);
    std::cout << "unique in genus: " << (rule.empty() ? "not certified" : "yes (" + rule + ")") << "\n";
}

int cmdTables(const Options& o) {
    const auto& ids = tableIds();
    if (std::find(ids.begin(), ids.end(), o.tableId) == ids.end()) {
        std::cerr << "unknown table id: " << o.tableId << "\n";
        return kUsage;
    }
    if (o.diffGolden) {
        auto diffs = diffGolden(o.tableId);
        bool unexplained = false;
        for (const auto& d : diffs) {
            std::cout << (d.documented ? "documented " : "UNEXPLAINED ") << d.table << " row " << d.row << " " << d.key << ": "
                      << d.detail << "\n";
            unexplained |= !d.documented;
        }
        std::cout << o.tableId << ": " << diffs.size() << " discrepancies\n";
        return unexplained ? kFail : kOk;
    }
    std::cout << renderTable(buildTable(o.tableId, o.ascii), o.format);
    return kOk;
}

int cmdLattice(const Options& o) {
    Lattice L = readLattice(o.expr);
    std::cout << "lattice: " << prettyExpr(asciiExpr(o.expr), o.ascii) << "\n";
    for (const auto& what : splitList(o.show)) {
        if (what == "gram") {
            std::cout << "gram:\n";
            printGram(L.gram);
        } else if (what == "invariants") {
            printInvariants(L);
        } else if (what == "discr") {
            if (!L.isEven()) {
                std::cout << "discr: (odd lattice)\n";
                continue;
            }
            FQF F = discriminantForm(L);
            std::cout << "discr: " << (F.size() == 1 ? "0" : renderForm(F, o.ascii)) << "\n";
        } else {
            std::cerr << "unknown --show item: " << what << "\n";
            return kUsage;
        }
    }
    return kOk;
}

int cmdGlue(const Options& o) {
    if (o.autoGlue == !o.primes.empty()) {
        std::cerr << "glue: give exactly one of --auto or --primes\n";
        return kUsage;
    }
    Lattice a = readLattice(o.l1), b = readLattice(o.l2);
    Lattice g;
    if (o.autoGlue) {
        FQF Fa = discriminantForm(a), Fb = discriminantForm(b);
        auto anti = findAntiIsomorphism(Fa, Fb);
        if (!anti) {
            std::cerr << "glue: the discriminant forms are not anti-isometric\n";
            return kFail;
        }
        g = glue(a, b, graphOf(Fa, *anti));
    } else {
        g = glueAlongParts(a, b, o.primes).overlattice.lattice;
    }
    std::cout << "glued: " << prettyExpr(a.expr, o.ascii) << " with " << prettyExpr(b.expr, o.ascii) << "\ngram:\n";
    printGram(g.gram);
    printInvariants(g);
    FQF F = discriminantForm(g);
    std::cout << "discr: " << (F.size() == 1 ? "0" : renderForm(F, o.ascii)) << "\n";
    return kOk;
}

Json entryJson(std::size_t index, bool ascii) {
    const auto& e = census()[index];
    Json j = tPairRecord(index);
    j["id"] = idRecord(censusID(index), e.tableRef, ascii);
    if (e.root) {
        Json root = Json::array();
        for (const auto& x : *e.root) root.push_back(x.get_si());
        j["reversionRoot"] = root;
    }
    return j;
}

void printEntry(std::size_t index, bool ascii) {
    const auto& e = census()[index];
    SexticID id = censusID(index);
    std::cout << e.tableRef << "\n"
              << "  T+: " << prettyExpr(e.pair.tPlus.lattice.expr, ascii) << "  " << e.pair.tPlus.inv.text() << "\n"
              << "  T-: " << prettyExpr(e.pair.tMinus.lattice.expr, ascii) << "  " << e.pair.tMinus.inv.text() << "\n"
              << "  ID: " << renderCode(id.code, ascii) << ", type " << curveTypeText(id.type) << ", o = " << signText(id.o)
              << ", nu_r = " << id.nuR << "\n"
              << "  reversible: " << (e.reversible ? "yes (partner " + census()[*e.partnerIndex].tableRef + ")" : "no") << "\n";
}

int cmdPair(const Options& o) {
    Lattice tp = readLattice(o.tPlus);
    auto inv = tHalfInvariants(tp);
    if (!inv) {
        std::cerr << "pair: not an even hyperbolic lattice with 2- and 3-elementary discriminant\n";
        return kFail;
    }
    if (!o.tMinus.empty()) {
        auto bad = pairViolations(tp, readLattice(o.tMinus));
        for (const auto& b : bad) std::cout << "violation: " << b << "\n";
        if (!bad.empty()) return kFail;
    }
    const auto& c = census();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].pair.tPlus.inv != *inv) continue;
        if (isomorphicInGenus(tp, c[i].pair.tPlus.lattice) != Verdict::Yes) continue;
        if (!o.tMinus.empty() && isomorphicInGenus(readLattice(o.tMinus), c[i].pair.tMinus.lattice) != Verdict::Yes) continue;
        if (o.json) {
            std::cout << entryJson(i, o.ascii).dump(2) << "\n";
        } else {
            printEntry(i, o.ascii);
            RealizationReport rep = realizePair(c[i].pair);
            std::cout << "  K3 realization: " << (rep.stageC ? "ok" : rep.failure) << "\n";
        }
        return kOk;
    }
    std::cerr << "pair: " << inv->text() << " is not the smaller half of a census pair\n";
    return kFail;
}

int cmdPartner(const Options& o) {
    auto idx = censusIndexByRef(o.row);
    if (!idx) {
        std::cerr << "partner: no census row " << o.row << "\n";
        return kUsage;
    }
    const auto& e = census()[*idx];
    if (!e.reversible) {
        std::cerr << "partner: " << o.row << " is irreversible\n";
        return kFail;
    }
    if (o.json) {
        Json j{{"row", entryJson(*idx, o.ascii)}, {"partner", entryJson(*e.partnerIndex, o.ascii)}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    printEntry(*idx, o.ascii);
    std::cout << "  reversion root v in T-:";
    for (const auto& x : *e.root) std::cout << " " << x.get_str();
    std::cout << "\npartner:\n";
    printEntry(*e.partnerIndex, o.ascii);
    return kOk;
}

int cmdVerify(const Options& o) {
    const auto& names = suiteNames();
    if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
        std::cerr << "unknown suite: " << o.suite << "\n";
        return kUsage;
    }
    auto results = runSuite(o.suite);
    for (const auto& r : results) {
        std::cout << (r.diagnostic ? "DIAG" : (r.passed ? "PASS" : "FAIL")) << "  " << r.name << "  [" << r.count << " cases, "
                  << std::to_string(r.seconds).substr(0, 5) << " s]";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
    }
    long failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.diagnostic && !r.passed; });
    std::cout << (failed ? std::to_string(failed) + " check(s) failed\n" : "all checks passed\n");
    return failed ? kFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Even lattices, T-pairs of real sextics and their tables"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_flag("--ascii", o.ascii, "ASCII output instead of UTF-8 brackets and subscripts");

    auto* tables = app.add_subcommand("tables", "Emit a computed table");
    tables->add_option("--id", o.tableId, "Table id: 1A-1C, 2, 3A, 3B, 4, 5A-5J, 6A, 6B, 7A, 7B, 8A-8C")->required();
    tables->add_option("--format", o.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    tables->add_flag("--diff-golden", o.diffGolden, "Compare with the reference table and list discrepancies");

    auto* lattice = app.add_subcommand("lattice", "Inspect a lattice expression");
    lattice->add_option("expr", o.expr, "e.g. \"U(3)+2A2\"")->required();
    lattice->add_option("--show", o.show, "Comma list of gram, invariants, discr");

    auto* glueCmd = app.add_subcommand("glue", "Glue two lattices along their discriminants");
    glueCmd->add_option("--l1", o.l1)->required();
    glueCmd->add_option("--l2", o.l2)->required();
    glueCmd->add_flag("--auto", o.autoGlue, "Search an anti-isometry of the full discriminant forms");
    glueCmd->add_option("--primes", o.primes, "Glue along the full p-parts for these primes")->delimiter(',');

    auto* pair = app.add_subcommand("pair", "Look up the census pair with a given smaller half");
    pair->add_option("--t-plus", o.tPlus)->required();
    pair->add_option("--t-minus", o.tMinus, "Optional larger half, checked against the pair conditions");
    pair->add_flag("--json", o.json);

    auto* partner = app.add_subcommand("partner", "Reversion partner of a census row");
    partner->add_option("--row", o.row, "e.g. 8B:1")->required();
    partner->add_flag("--json", o.json);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite, "all, forms, gluing, stability, census or ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*tables) return cmdTables(o);
        if (*lattice) return cmdLattice(o);
        if (*glueCmd) return cmdGlue(o);
        if (*pair) return cmdPair(o);
        if (*partner) return cmdPartner(o);
        if (*verify) return cmdVerify(o);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
