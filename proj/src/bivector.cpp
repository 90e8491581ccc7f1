#include "goldman/bivector.hpp"

#include "goldman/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace goldman {

Perm Perm::identity(int k) {
    Perm p;
    for (int i = 1; i <= k; ++i) p.image.push_back(i);
    return p;
}

Perm Perm::inverse() const {
    Perm out = identity(size());
    for (int i = 1; i <= size(); ++i) out.image[(*this)(i)-1] = i;
    return out;
}

Perm Perm::after(const Perm& first) const {
    Perm out = identity(size());
    for (int i = 1; i <= size(); ++i) out.image[i - 1] = (*this)(first(i));
    return out;
}

std::string Perm::cycles() const {
    std::vector<bool> seen(size(), false);
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        if (seen[i - 1] || (*this)(i) == i) continue;
        std::string cyc = "(" + std::to_string(i);
        seen[i - 1] = true;
        for (int j = (*this)(i); j != i; j = (*this)(j)) {
            seen[j - 1] = true;
            cyc += " " + std::to_string(j);
        }
        out += cyc + ")";
    }
    return out.empty() ? "()" : out;
}

Perm parseCycles(const std::string& text, int k) {
    Perm p = Perm::identity(k);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw std::invalid_argument("bad cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        std::string cur;
        bool spaced = text.find(' ', i) != std::string::npos &&
                      text.find(' ', i) < text.find(')', i);
        while (i < text.size() && text[i] != ')') {
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (spaced)
                    cur += c;
                else
                    cyc.push_back(c - '0');
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) {
                    cyc.push_back(std::stoi(cur));
                    cur.clear();
                }
            } else {
                throw std::invalid_argument("bad cycle notation: " + text);
            }
            ++i;
        }
        if (!cur.empty()) cyc.push_back(std::stoi(cur));
        if (i == text.size()) throw std::invalid_argument("unterminated cycle: " + text);
        ++i;  // skip ')'
        for (int v : cyc)
            if (v < 1 || v > k) throw std::invalid_argument("cycle entry out of range: " + text);
        for (std::size_t t = 0; t + 1 < cyc.size(); ++t) p.image[cyc[t] - 1] = cyc[t + 1];
        if (cyc.size() > 1) p.image[cyc.back() - 1] = cyc.front();
    }
    return p;
}

Poly Bivector::entry(const TraceVar& u, const TraceVar& v) const {
    if (u == v) return Poly();
    const bool flip = v < u;
    auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
    auto it = entries.find(key);
    if (it == entries.end()) return Poly();
    return flip ? -it->second : it->second;
}

void Bivector::setEntry(const TraceVar& u, const TraceVar& v, Poly p) {
    if (u == v) throw std::invalid_argument("bi-vector never pairs a variable with itself");
    const bool flip = v < u;
    auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
    if (p.isZero()) {
        entries.erase(key);
        return;
    }
    entries[key] = flip ? -p : p;
}

Word coordinateWord(const TraceVar& v) {
    Letters ls;
    for (int i : v.indices()) ls.emplace_back(i, +1);
    return Word::fromLetters(std::move(ls));
}

Bivector computeBivector(const FatGraph& fat, int threads) {
    if (fat.rank > 4)
        throw std::invalid_argument("bi-vector computation needs rank <= 4");
    Bivector bv;
    bv.n = fat.n;
    bv.g = fat.g;
    bv.rank = fat.rank;
    bv.coordinates = canonicalVariables(fat.rank);

    const auto& coords = bv.coordinates;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j)
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    std::vector<Poly> results(pairs.size());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(pairs.size())));
    if (workers == 1) {
        TraceReducer red(fat.rank);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            results[k] = bracket(fat, coordinateWord(coords[pairs[k].first]),
                                 coordinateWord(coords[pairs[k].second]), red);
    } else {
        std::mutex mtx;
        std::size_t next = 0;
        auto work = [&]() {
            TraceReducer red(fat.rank);  // per-thread memo table
            for (;;) {
                std::size_t k;
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (next >= pairs.size()) return;
                    k = next++;
                }
                results[k] = bracket(fat, coordinateWord(coords[pairs[k].first]),
                                     coordinateWord(coords[pairs[k].second]), red);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!results[k].isZero())
            bv.setEntry(coords[pairs[k].first], coords[pairs[k].second], results[k]);
    return bv;
}

std::vector<TraceVar> casimirs(const Bivector& bv) {
    std::vector<TraceVar> out;
    for (const TraceVar& u : bv.coordinates) {
        bool allZero = true;
        for (const TraceVar& v : bv.coordinates) {
            if (u == v) continue;
            if (!bv.entry(u, v).isZero()) {
                allZero = false;
                break;
            }
        }
        if (allZero) out.push_back(u);
    }
    return out;
}

TraceVar applyPerm(const Perm& sigma, const TraceVar& v) {
    std::vector<int> idx;
    for (int i : v.indices()) idx.push_back(sigma(i));
    std::sort(idx.begin(), idx.end());
    return TraceVar(std::move(idx));
}

Poly applyPerm(const Perm& sigma, const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial img;
        for (const auto& [v, e] : m.factors()) img.multiplyBy(applyPerm(sigma, v), e);
        out += Poly::monomial(c, img);
    }
    return out;
}

SymOperator sigma1() {
    SymOperator op;
    op.name = "sigma1";
    for (const char* c : {"()", "(34)", "(23)", "(123)", "(124)", "(142)", "(143)", "(13)(24)",
                          "(1234)", "(1342)", "(1324)", "(1432)"})
        op.perms.push_back(parseCycles(c, 4));
    return op;
}

SymOperator sigma2() {
    SymOperator op;
    op.name = "sigma2";
    for (const char* c : {"()", "(1234)", "(13)(24)", "(1432)"})
        op.perms.push_back(parseCycles(c, 4));
    return op;
}

SymOperator sigma3() {
    SymOperator op;
    op.name = "sigma3";
    for (const char* c : {"()", "(1432)"}) op.perms.push_back(parseCycles(c, 4));
    return op;
}

Bivector expandSymmetricForm(const std::vector<SymmetricFormTerm>& terms, int n, int g) {
    Bivector bv;
    bv.n = n;
    bv.g = g;
    bv.rank = 2 * g + n - 1;
    bv.coordinates = canonicalVariables(bv.rank);

    auto addSlot = [&](const TraceVar& u, const TraceVar& v, Poly p) {
        if (u == v) throw std::invalid_argument("symmetric form wrote a diagonal slot");
        const bool flip = v < u;
        auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
        Poly oriented = flip ? -p : p;
        auto it = bv.entries.find(key);
        if (it != bv.entries.end()) {
            if (!(it->second == oriented))
                throw std::runtime_error("symmetric form wrote conflicting polynomials to slot {" +
                                         key.first.text() + "," + key.second.text() + "}");
            return;
        }
        if (!oriented.isZero()) bv.entries.emplace(key, std::move(oriented));
    };

    for (const SymmetricFormTerm& t : terms) {
        std::vector<Perm> perms;
        if (t.op == nullptr)
            perms.push_back(Perm::identity(4));
        else if (std::string(t.op) == "sigma1")
            perms = sigma1().perms;
        else if (std::string(t.op) == "sigma2")
            perms = sigma2().perms;
        else if (std::string(t.op) == "sigma3")
            perms = sigma3().perms;
        else
            throw std::invalid_argument("unknown symmetry operator");
        for (const Perm& s : perms)
            addSlot(applyPerm(s, t.u), applyPerm(s, t.v), applyPerm(s, t.coefficient));
    }
    return bv;
}

Poly poissonBracketPoly(const Poly& p, const Poly& q, const Bivector& bv) {
    Poly out;
    for (const auto& [key, e] : bv.entries) {
        const auto& [u, v] = key;
        out += (p.partial(u) * q.partial(v) - p.partial(v) * q.partial(u)) * e;
    }
    return out;
}

namespace {

// Ring map t[I] -> image polynomial, for a full boundary permutation of the
// five-holed sphere (label 5 is the dependent boundary (c1c2c3c4)^-1).
std::map<TraceVar, Poly> inducedCoordinateImages(const Perm& sigma5, int rank,
                                                 TraceReducer& red) {
    auto imageWord = [&](int i) {
        const int s = sigma5(i);
        if (s <= rank) return Word::fromLetters({Letter(s, +1)});
        Letters rel;
        for (int k = rank; k >= 1; --k) rel.emplace_back(k, -1);
        return Word::fromLetters(std::move(rel));  // (c1..c4)^-1
    };
    std::map<TraceVar, Poly> images;
    for (const TraceVar& v : canonicalVariables(rank)) {
        Word w;
        for (int i : v.indices()) w = w.concat(imageWord(i));
        images[v] = red.reduce(w);
    }
    return images;
}

}  // namespace

SymmetryScanReport symmetryExhaustion(const Bivector& bv, int samples, std::uint64_t seed) {
    if (!(bv.n == 5 && bv.g == 0))
        throw std::invalid_argument("symmetry exhaustion targets the five-holed sphere");
    const int rank = bv.rank;
    TraceReducer red(rank);
    const std::vector<TraceVar>& coords = bv.coordinates;
    const int nc = static_cast<int>(coords.size());
    auto indexOf = [&](const TraceVar& v) {
        return static_cast<int>(std::find(coords.begin(), coords.end(), v) - coords.begin());
    };

    // On-variety sample points, plus the entry values there.
    std::vector<std::map<TraceVar, Complex>> points;
    for (int s = 0; s < samples; ++s)
        points.push_back(coordinateValues(sampleRepresentation(rank, seed, s), rank));
    struct EntryRef {
        int u, v;
        const Poly* p;
        std::vector<Complex> vals;
    };
    std::vector<EntryRef> entryRefs;
    for (const auto& [key, e] : bv.entries) {
        EntryRef r{indexOf(key.first), indexOf(key.second), &e, {}};
        for (const auto& pt : points) r.vals.push_back(e.eval(pt));
        entryRefs.push_back(std::move(r));
    }

    SymmetryScanReport report;
    std::vector<int> image{1, 2, 3, 4, 5};
    do {
        Perm sigma;
        sigma.image = image;
        SymmetryScanEntry scan;
        scan.sigma = sigma;
        const bool fixesLast = sigma(5) == 5;

        bool exact = false;
        if (fixesLast) {
            Perm sigma4;
            sigma4.image.assign(image.begin(), image.begin() + 4);
            exact = true;
            for (int i = 0; i < nc && exact; ++i)
                for (int j = i + 1; j < nc && exact; ++j)
                    if (!(applyPerm(sigma4, bv.entry(coords[i], coords[j])) ==
                          bv.entry(applyPerm(sigma4, coords[i]), applyPerm(sigma4, coords[j]))))
                        exact = false;
        }

        bool ok = exact;
        if (!exact) {
            // Numeric test at on-variety points: the induced ring map commutes
            // with the bracket up to 1e-8 relative.
            std::map<TraceVar, Poly> images = inducedCoordinateImages(sigma, rank, red);
            // Image values and image partial values at each point.
            std::vector<std::vector<Complex>> imgVal(nc);          // [coord][pt]
            std::vector<std::vector<std::vector<Complex>>> imgPar(nc);  // [coord][var][pt]
            for (int i = 0; i < nc; ++i) {
                const Poly& im = images.at(coords[i]);
                for (const auto& pt : points) imgVal[i].push_back(im.eval(pt));
                imgPar[i].resize(nc);
                for (int x = 0; x < nc; ++x) {
                    Poly d = im.partial(coords[x]);
                    for (const auto& pt : points) imgPar[i][x].push_back(d.eval(pt));
                }
            }
            ok = true;
            for (int i = 0; i < nc && ok; ++i) {
                for (int j = i + 1; j < nc && ok; ++j) {
                    const Poly lhsPoly = bv.entry(coords[i], coords[j]);
                    for (std::size_t s = 0; s < points.size(); ++s) {
                        const Complex a = lhsPoly.eval([&](const TraceVar& v) {
                            return imgVal[indexOf(v)][s];
                        });
                        Complex b = 0.0;
                        for (const EntryRef& r : entryRefs)
                            b += (imgPar[i][r.u][s] * imgPar[j][r.v][s] -
                                  imgPar[i][r.v][s] * imgPar[j][r.u][s]) *
                                 r.vals[s];
                        const double rel =
                            std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
                        scan.residual = std::max(scan.residual, rel);
                        if (rel > 1e-8) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
        }

        scan.preserves = ok;
        if (ok) {
            ++report.preservingCount;
            report.preserving.push_back(sigma);
        }
        report.entries.push_back(std::move(scan));
    } while (std::next_permutation(image.begin(), image.end()));
    return report;
}

}  // namespace goldman
