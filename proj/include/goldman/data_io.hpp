#pragma once

#include "goldman/bivector.hpp"
#include "goldman/intersect.hpp"
#include "goldman/maps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace goldman {

/// Dataset root: GOLDMAN_DATA_DIR env var, else the checked-in data directory.
std::string dataDir();

/// Loads `{ "figure": ..., "lhs": ..., "rhs": ..., "points": [...] }`.
/// Malformed records are rejected with the figure label in the message.
DiagramData loadDiagram(const std::string& path, const GenNames& names);

/// All diagram records of a directory, sorted by figure label.
std::vector<DiagramData> loadDiagramDir(const std::string& dir, const GenNames& names);

/// One golden bracket: the unordered pair and its expected polynomial. When a
/// printed variant of disputed provenance exists it rides along.
struct GoldenBracket {
    TraceVar u, v;
    Poly poly;
    std::string source;
    std::optional<Poly> polyAsPrinted;
};

std::vector<GoldenBracket> loadGoldenBrackets(const std::string& path);

/// The symmetric-form data: seven base coefficients with their slots and
/// operators.
std::vector<SymmetricFormTerm> loadSymmetricForm(const std::string& path);

FreeHom loadFreeHom(const std::string& path, const GenNames& sourceNames,
                    const GenNames& targetNames);

std::string bivectorToJson(const Bivector& bv);
Bivector bivectorFromJson(const std::string& text);

}  // namespace goldman
