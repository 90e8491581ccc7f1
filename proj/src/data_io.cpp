#include "goldman/data_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace goldman {

using nlohmann::json;

namespace {

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace

std::string dataDir() {
    if (const char* env = std::getenv("GOLDMAN_DATA_DIR"); env && *env) return env;
#ifdef GOLDMAN_SOURCE_DATA_DIR
    if (std::filesystem::exists(GOLDMAN_SOURCE_DATA_DIR)) return GOLDMAN_SOURCE_DATA_DIR;
#endif
    return "data";
}

DiagramData loadDiagram(const std::string& path, const GenNames& names) {
    json j = readJsonFile(path);
    DiagramData d;
    try {
        d.figure = j.at("figure").get<std::string>();
        d.lhs = parseWord(j.at("lhs").get<std::string>(), names);
        d.rhs = parseWord(j.at("rhs").get<std::string>(), names);
        for (const auto& p : j.at("points")) {
            IntersectionDatum pt;
            pt.sign = p.at("sign").get<int>();
            if (pt.sign != 1 && pt.sign != -1)
                throw std::runtime_error("sign must be +1 or -1");
            pt.resolved = parseWord(p.at("word").get<std::string>(), names);
            d.points.push_back(std::move(pt));
        }
    } catch (const std::exception& e) {
        const std::string label = j.contains("figure") ? j["figure"].get<std::string>() : path;
        throw std::runtime_error("malformed diagram record (figure " + label + "): " + e.what());
    }
    return d;
}

std::vector<DiagramData> loadDiagramDir(const std::string& dir, const GenNames& names) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::vector<DiagramData> out;
    for (const std::string& f : files) out.push_back(loadDiagram(f, names));
    std::sort(out.begin(), out.end(),
              [](const DiagramData& a, const DiagramData& b) { return a.figure < b.figure; });
    return out;
}

std::vector<GoldenBracket> loadGoldenBrackets(const std::string& path) {
    json j = readJsonFile(path);
    std::vector<GoldenBracket> out;
    for (const auto& e : j.at("brackets")) {
        GoldenBracket g;
        g.u = parseTraceVar(e.at("u").get<std::string>());
        g.v = parseTraceVar(e.at("v").get<std::string>());
        g.poly = parsePoly(e.at("poly").get<std::string>());
        g.source = e.value("source", "");
        if (e.contains("poly_as_printed"))
            g.polyAsPrinted = parsePoly(e.at("poly_as_printed").get<std::string>());
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<SymmetricFormTerm> loadSymmetricForm(const std::string& path) {
    json j = readJsonFile(path);
    const auto& base = j.at("base");
    std::vector<SymmetricFormTerm> out;
    for (const auto& t : j.at("terms")) {
        SymmetricFormTerm term;
        const std::string coeff = t.at("coeff").get<std::string>();
        term.coefficient = parsePoly(base.at(coeff).get<std::string>());
        term.u = parseTraceVar(t.at("u").get<std::string>());
        term.v = parseTraceVar(t.at("v").get<std::string>());
        if (t.contains("op") && !t.at("op").is_null()) {
            const std::string op = t.at("op").get<std::string>();
            if (op == "sigma1")
                term.op = "sigma1";
            else if (op == "sigma2")
                term.op = "sigma2";
            else if (op == "sigma3")
                term.op = "sigma3";
            else
                throw std::runtime_error("unknown operator in " + path + ": " + op);
        } else {
            term.op = nullptr;
        }
        out.push_back(std::move(term));
    }
    return out;
}

FreeHom loadFreeHom(const std::string& path, const GenNames& sourceNames,
                    const GenNames& targetNames) {
    json j = readJsonFile(path);
    FreeHom h;
    h.sourceRank = j.at("source_rank").get<int>();
    h.targetRank = j.at("target_rank").get<int>();
    const std::string orient = j.at("orientation").get<std::string>();
    if (orient == "preserving")
        h.orientationPreserving = true;
    else if (orient == "reversing")
        h.orientationPreserving = false;
    else
        throw std::runtime_error("orientation must be preserving|reversing in " + path);
    if (sourceNames.rank() != h.sourceRank || targetNames.rank() != h.targetRank)
        throw std::runtime_error("generator name tables do not match ranks in " + path);
    const auto& images = j.at("images");
    for (int i = 1; i <= h.sourceRank; ++i) {
        const std::string key = sourceNames.names[i - 1];
        if (!images.contains(key))
            throw std::runtime_error("missing image for generator " + key + " in " + path);
        h.images.push_back(parseWord(images.at(key).get<std::string>(), targetNames));
    }
    return h;
}

std::string bivectorToJson(const Bivector& bv) {
    json j;
    j["surface"] = {{"n", bv.n}, {"g", bv.g}};
    j["coordinates"] = json::array();
    for (const TraceVar& v : bv.coordinates) j["coordinates"].push_back(v.text());
    j["entries"] = json::array();
    for (const auto& [key, p] : bv.entries)
        j["entries"].push_back(
            {{"u", key.first.text()}, {"v", key.second.text()}, {"poly", p.text()}});
    return j.dump(2);
}

Bivector bivectorFromJson(const std::string& text) {
    json j = json::parse(text);
    Bivector bv;
    bv.n = j.at("surface").at("n").get<int>();
    bv.g = j.at("surface").at("g").get<int>();
    bv.rank = 2 * bv.g + bv.n - 1;
    for (const auto& c : j.at("coordinates"))
        bv.coordinates.push_back(parseTraceVar(c.get<std::string>()));
    for (const auto& e : j.at("entries"))
        bv.setEntry(parseTraceVar(e.at("u").get<std::string>()),
                    parseTraceVar(e.at("v").get<std::string>()),
                    parsePoly(e.at("poly").get<std::string>()));
    return bv;
}

}  // namespace goldman
