// Command-line front end: trace reduction, Goldman brackets, bi-vectors,
// surface models, pullbacks and the golden verification driver.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "goldman/data_io.hpp"
#include "goldman/maps.hpp"
#include "goldman/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <fstream>
#include <iostream>

using namespace goldman;

namespace {

std::pair<int, int> parseSurface(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("surface", "expected n,g (e.g. 5,0)");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

std::string renderPoly(const Poly& p, const std::string& format) {
    if (format == "latex") return p.latex();
    return p.text();
}

struct MapBundle {
    FreeHom hom;
    GenNames sourceNames, targetNames;
    int sn = 0, sg = 0, tn = 0, tg = 0;
    bool haveSurfaces = false;
};

MapBundle loadMapBundle(const std::string& path, const std::string& sourceArg,
                        const std::string& targetArg) {
    MapBundle b;
    // Surfaces come from the flags when given, else from the map file itself.
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    auto surfaceOf = [&](const char* key, const std::string& arg, int& n, int& g) {
        if (!arg.empty()) {
            auto [pn, pg] = parseSurface(arg);
            n = pn;
            g = pg;
            return true;
        }
        if (j.contains(key)) {
            n = j[key].at("n").get<int>();
            g = j[key].at("g").get<int>();
            return true;
        }
        return false;
    };
    int sn = 0, sg = 0, tn = 0, tg = 0;
    const bool haveS = surfaceOf("source_surface", sourceArg, sn, sg);
    const bool haveT = surfaceOf("target_surface", targetArg, tn, tg);
    const int sourceRank = j.at("source_rank").get<int>();
    const int targetRank = j.at("target_rank").get<int>();
    b.sourceNames = haveS ? GenNames::surface(sn, sg) : GenNames::rankDefault(sourceRank);
    b.targetNames = haveT ? GenNames::surface(tn, tg) : GenNames::rankDefault(targetRank);
    b.hom = loadFreeHom(path, b.sourceNames, b.targetNames);
    b.sn = sn;
    b.sg = sg;
    b.tn = tn;
    b.tg = tg;
    b.haveSurfaces = haveS && haveT;
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldman bracket engine for SL(2,C) character varieties"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // reduce
    auto* cmdReduce = app.add_subcommand("reduce", "reduce tr(w) to canonical coordinates");
    int reduceRank = 4;
    std::string reduceWord;
    bool reduceLatex = false;
    cmdReduce->add_option("--rank", reduceRank, "free group rank (1..4)");
    cmdReduce->add_option("word", reduceWord, "word, e.g. \"c1 c3 c2\"")->required();
    cmdReduce->add_flag("--latex", reduceLatex, "LaTeX output");

    // bracket
    auto* cmdBracket = app.add_subcommand("bracket", "Goldman bracket of two loops");
    std::string brSurface = "5,0", brA, brB, brDiagram;
    bool brLatex = false;
    cmdBracket->add_option("--surface", brSurface, "surface n,g");
    cmdBracket->add_option("alpha", brA, "first loop word");
    cmdBracket->add_option("beta", brB, "second loop word");
    cmdBracket->add_option("--from-diagram", brDiagram, "diagram record instead of the engine");
    cmdBracket->add_flag("--latex", brLatex, "LaTeX output");

    // bivector
    auto* cmdBivector = app.add_subcommand("bivector", "full Poisson bi-vector");
    std::string bvSurface = "5,0";
    bool bvCheckTheorem = false, bvScan = false, bvLatex = false;
    int bvJobs = 1;
    cmdBivector->add_option("--surface", bvSurface, "surface n,g");
    cmdBivector->add_flag("--check-theorem", bvCheckTheorem,
                          "compare with the symmetric-form expansion");
    cmdBivector->add_flag("--symmetry-scan", bvScan, "scan all boundary permutations");
    cmdBivector->add_flag("--latex", bvLatex, "LaTeX entries");
    cmdBivector->add_option("--jobs", bvJobs, "worker threads");

    // surface
    auto* cmdSurface = app.add_subcommand("surface", "combinatorial surface model");
    int sn = 5, sg = 0;
    bool sPrint = false;
    cmdSurface->add_option("--n", sn, "boundary components")->required();
    cmdSurface->add_option("--g", sg, "genus");
    cmdSurface->add_flag("--print", sPrint, "print cyclic order and boundary words");

    // dimension
    auto* cmdDim = app.add_subcommand("dimension", "character variety dimension");
    std::string dimSurface = "5,0", dimGroup = "sl2", dimParams;
    cmdDim->add_option("--surface", dimSurface, "surface n,g")->required();
    cmdDim->add_option("--group", dimGroup, "group name (sl2)");
    cmdDim->add_option("--params", dimParams, "custom dimG,r,s");

    // pullback
    auto* cmdPull = app.add_subcommand("pullback", "induced map on coordinate rings");
    std::string pbMap, pbPoly, pbSource, pbTarget;
    cmdPull->add_option("--map", pbMap, "map file")->required();
    cmdPull->add_option("--poly", pbPoly, "polynomial over source coordinates")->required();
    cmdPull->add_option("--source", pbSource, "source surface n,g (else from map file)");
    cmdPull->add_option("--target", pbTarget, "target surface n,g (else from map file)");

    // poisson-check
    auto* cmdCheck = app.add_subcommand("poisson-check", "verify the (anti-)Poisson property");
    std::string pcMap, pcSource, pcTarget;
    int pcTrials = 200;
    std::uint64_t pcSeed = 42;
    int pcJobs = 1;
    cmdCheck->add_option("--map", pcMap, "map file")->required();
    cmdCheck->add_option("--source", pcSource, "source surface n,g");
    cmdCheck->add_option("--target", pcTarget, "target surface n,g");
    cmdCheck->add_option("--trials", pcTrials, "random representations");
    cmdCheck->add_option("--seed", pcSeed, "rng seed");
    cmdCheck->add_option("--jobs", pcJobs, "worker threads");

    // oracle
    auto* cmdOracle = app.add_subcommand("oracle", "numeric reduction oracle");
    std::string orWord;
    int orSamples = 100, orRank = 4;
    std::uint64_t orSeed = 7;
    cmdOracle->add_option("--word", orWord, "word to check")->required();
    cmdOracle->add_option("--samples", orSamples, "representations");
    cmdOracle->add_option("--seed", orSeed, "rng seed");
    cmdOracle->add_option("--rank", orRank, "free group rank");

    // verify-paper
    auto* cmdVerify = app.add_subcommand("verify-paper",
                                         "golden brackets, symmetric form, casimirs, scan");
    std::string vpSurface = "5,0";
    std::uint64_t vpSeed = 2024;
    int vpJobs = 1;
    cmdVerify->add_option("--surface", vpSurface, "surface n,g (5,0)");
    cmdVerify->add_option("--seed", vpSeed, "rng seed");
    cmdVerify->add_option("--jobs", vpJobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage/help
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*cmdReduce) {
            TraceReducer red(reduceRank);
            Word w = parseWord(reduceWord, GenNames::rankDefault(reduceRank));
            Poly p = red.reduce(w);
            std::cout << renderPoly(p, reduceLatex ? "latex" : format) << "\n";
            return 0;
        }

        if (*cmdBracket) {
            auto [n, g] = parseSurface(brSurface);
            FatGraph fat = standardModel(n, g);
            TraceReducer red(fat.rank);
            Poly p;
            if (!brDiagram.empty()) {
                DiagramData d = loadDiagram(brDiagram, fat.names);
                p = bracketFromData(d, red);
            } else {
                if (brA.empty() || brB.empty()) {
                    std::cerr << "error: two loop words (or --from-diagram) required\n";
                    return 2;
                }
                p = bracket(fat, parseWord(brA, fat.names), parseWord(brB, fat.names), red);
            }
            std::cout << renderPoly(p, brLatex ? "latex" : format) << "\n";
            return 0;
        }

        if (*cmdBivector) {
            auto [n, g] = parseSurface(bvSurface);
            FatGraph fat = standardModel(n, g);
            Bivector bv = computeBivector(fat, bvJobs);
            int rc = 0;
            if (format == "json" && !bvCheckTheorem && !bvScan) {
                std::cout << bivectorToJson(bv) << "\n";
            } else {
                std::cout << "surface (" << n << "," << g << "), " << bv.coordinates.size()
                          << " coordinates, " << bv.entries.size() << " nonzero entries\n";
                for (const auto& [key, p] : bv.entries)
                    std::cout << "{" << key.first.text() << "," << key.second.text()
                              << "} = " << renderPoly(p, bvLatex ? "latex" : "text") << "\n";
                auto cas = casimirs(bv);
                std::cout << "casimirs:";
                for (const auto& v : cas) std::cout << " " << v.text();
                std::cout << "\n";
            }
            if (bvCheckTheorem) {
                if (!(n == 5 && g == 0))
                    throw CLI::ValidationError("--check-theorem", "only for the 5,0 surface");
                auto terms =
                    loadSymmetricForm(dataDir() + "/golden/sigma_5_0_bivector_form.json");
                auto exp = compareExpansion(bv, expandSymmetricForm(terms, 5, 0));
                std::cout << "symmetric form: " << exp.exact << "/" << exp.total
                          << " slots exact";
                for (const auto& s : exp.modularSlots)
                    std::cout << "; " << s << " equal modulo the defining relations";
                std::cout << (exp.pass() ? " [ok]" : " [mismatch]") << "\n";
                if (!exp.pass()) rc = 1;
            }
            if (bvScan) {
                if (!(n == 5 && g == 0))
                    throw CLI::ValidationError("--symmetry-scan", "only for the 5,0 surface");
                auto scan = symmetryExhaustion(bv);
                std::cout << "preserving relabelings (" << scan.preservingCount << "/120):";
                for (const auto& p : scan.preserving) std::cout << " " << p.cycles();
                std::cout << "\n";
            }
            return rc;
        }

        if (*cmdSurface) {
            FatGraph fat = standardModel(sn, sg);
            std::cout << "rank " << fat.rank << ", euler characteristic "
                      << fat.eulerCharacteristic() << "\n";
            if (sPrint) {
                std::cout << "cyclic order:";
                for (const HalfEnd& e : fat.order)
                    std::cout << " " << fat.names.names[e.gen - 1] << (e.out ? "-out" : "-in");
                std::cout << "\nboundary words:\n";
                for (const CyclicWord& w : fat.boundaryWords())
                    std::cout << "  " << formatWord(w.rep(), fat.names) << "\n";
            }
            return 0;
        }

        if (*cmdDim) {
            auto [n, g] = parseSurface(dimSurface);
            GroupParams params = GroupParams::sl2();
            if (!dimParams.empty()) {
                auto c1 = dimParams.find(',');
                auto c2 = dimParams.find(',', c1 + 1);
                params.dimG = std::stoi(dimParams.substr(0, c1));
                params.r = std::stoi(dimParams.substr(c1 + 1, c2 - c1 - 1));
                params.s = std::stoi(dimParams.substr(c2 + 1));
            } else if (dimGroup != "sl2") {
                throw CLI::ValidationError("--group", "only sl2 is built in; use --params");
            }
            std::cout << dimension(n, g, params) << "\n";
            return 0;
        }

        if (*cmdPull) {
            MapBundle b = loadMapBundle(pbMap, pbSource, pbTarget);
            TraceReducer red(b.hom.targetRank);
            Poly p = pullback(b.hom, parsePoly(pbPoly), red);
            std::cout << renderPoly(p, format) << "\n";
            return 0;
        }

        if (*cmdCheck) {
            MapBundle b = loadMapBundle(pcMap, pcSource, pcTarget);
            if (!b.haveSurfaces)
                throw CLI::ValidationError("--source/--target",
                                           "surfaces required (flags or map file)");
            FatGraph source = standardModel(b.sn, b.sg);
            FatGraph target = standardModel(b.tn, b.tg);
            auto rep = poissonCheck(b.hom, source, target, pcTrials, pcSeed, pcJobs);
            std::cout << (rep.pass ? "PASS" : "FAIL") << " sign "
                      << (rep.expectedSign > 0 ? "+1" : "-1") << ", " << rep.trials
                      << " trials, worst residual " << std::scientific << std::setprecision(3)
                      << rep.worstResidual;
            if (!rep.worstPair.empty()) std::cout << " at " << rep.worstPair;
            std::cout << "\n";
            return rep.pass ? 0 : 1;
        }

        if (*cmdOracle) {
            TraceReducer red(orRank);
            Word w = parseWord(orWord, GenNames::rankDefault(orRank));
            auto rep = red.oracle(w, orSamples, orSeed);
            std::cout << (rep.pass ? "PASS" : "FAIL") << " max relative residual "
                      << std::scientific << std::setprecision(3) << rep.maxResidual << " over "
                      << rep.samples << " samples\n";
            return rep.pass ? 0 : 1;
        }

        if (*cmdVerify) {
            auto [n, g] = parseSurface(vpSurface);
            if (!(n == 5 && g == 0))
                throw CLI::ValidationError("--surface", "verification targets the 5,0 surface");
            const std::string dd = dataDir();
            FatGraph fat = standardModel(5, 0);
            bool ok = true;

            Bivector bv = computeBivector(fat, vpJobs);
            auto cmp = compareGolden(bv, loadGoldenBrackets(dd + "/golden/sigma_5_0_brackets.json"));
            std::cout << "golden brackets: " << cmp.exact << "/" << cmp.total << " exact"
                      << (cmp.pass() ? " [ok]" : " [mismatch]") << "\n";
            for (const auto& m : cmp.mismatches) std::cout << "  " << m << "\n";
            ok = ok && cmp.pass();

            auto terms = loadSymmetricForm(dd + "/golden/sigma_5_0_bivector_form.json");
            auto exp = compareExpansion(bv, expandSymmetricForm(terms, 5, 0), 200, vpSeed);
            std::cout << "symmetric form: " << exp.exact << "/" << exp.total << " slots exact";
            for (const auto& s : exp.modularSlots)
                std::cout << "; " << s << " equal modulo the defining relations";
            std::cout << (exp.pass() ? " [ok]" : " [mismatch]") << "\n";
            ok = ok && exp.pass();

            auto cas = checkCasimirs(bv, fat);
            std::cout << "casimirs: variable rows "
                      << (cas.variablesPass ? "zero" : "NONZERO") << ", boundary curve brackets "
                      << (cas.boundaryPass ? "zero" : "NONZERO") << ", boundary derivation "
                      << (cas.derivationOnVarietyPass ? "vanishes on the variety"
                                                      : "FAILS on the variety")
                      << "\n";
            ok = ok && cas.variablesPass && cas.boundaryPass && cas.derivationOnVarietyPass;

            auto scan = symmetryExhaustion(bv, 40, vpSeed);
            std::cout << "symmetry scan: " << scan.preservingCount
                      << "/120 relabelings preserve the table:";
            for (const auto& p : scan.preserving) std::cout << " " << p.cycles();
            std::cout << "\n";
            ok = ok && scan.preservingCount < 120;

            std::cout << (ok ? "VERIFY-PAPER: PASS" : "VERIFY-PAPER: FAIL") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
