#include "goldman/surface.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace goldman {

int FatGraph::position(int gen, bool out) const {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i].gen == gen && order[i].out == out) return static_cast<int>(i);
    throw std::invalid_argument("half end not in fat graph");
}

std::vector<CyclicWord> FatGraph::boundaryWords() const {
    // Directed edges are letters; after arriving at end e the boundary departs
    // from the clockwise neighbour of e.
    const int m = circleSize();
    auto pred = [&](int p) { return (p - 1 + m) % m; };
    std::vector<Letter> all;
    for (int gen = 1; gen <= rank; ++gen) {
        all.emplace_back(gen, +1);
        all.emplace_back(gen, -1);
    }
    auto nextLetter = [&](const Letter& l) {
        const int dep = pred(arrival(l));
        const HalfEnd& e = order[dep];
        return Letter(e.gen, e.out ? +1 : -1);
    };
    std::vector<CyclicWord> faces;
    std::vector<Letter> seen;
    for (const Letter& start : all) {
        if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
        Letters face;
        Letter cur = start;
        do {
            face.push_back(cur);
            seen.push_back(cur);
            cur = nextLetter(cur);
        } while (!(cur == start));
        faces.push_back(CyclicWord(Word::fromLetters(std::move(face))));
    }
    return faces;
}

FatGraph standardModel(int n, int g) {
    if (n < 1) throw std::invalid_argument("bounded surfaces only (n >= 1)");
    if (g < 0) throw std::invalid_argument("genus must be non-negative");
    if (n == 1 && g == 0) throw std::invalid_argument("the disk is simply connected");

    FatGraph f;
    f.n = n;
    f.g = g;
    f.rank = 2 * g + n - 1;
    f.names = GenNames::surface(n, g);

    if (g == 0) {
        for (int j = 1; j <= n - 1; ++j) {
            f.order.push_back({j, true});
            f.order.push_back({j, false});
        }
        return f;
    }

    // Generators: a_i = 2i-1, b_i = 2i, c_j = 2g + j.
    auto aGen = [&](int i) { return 2 * i - 1; };
    auto bGen = [&](int i) { return 2 * i; };
    auto cGen = [&](int j) { return 2 * g + j; };

    // Circle chosen so the traced faces are the c_j (inverted) singletons plus
    // the full relator prod [a_i,b_i] prod c_j, and the (a_i, b_i) crossing at
    // the vertex is positively oriented.
    f.order.push_back({aGen(1), true});
    for (int j = n - 1; j >= 1; --j) {
        f.order.push_back({cGen(j), false});
        f.order.push_back({cGen(j), true});
    }
    for (int i = g; i >= 2; --i) {
        f.order.push_back({bGen(i), true});
        f.order.push_back({aGen(i), false});
        f.order.push_back({bGen(i), false});
        f.order.push_back({aGen(i), true});
    }
    f.order.push_back({bGen(1), true});
    f.order.push_back({aGen(1), false});
    f.order.push_back({bGen(1), false});
    if (static_cast<int>(f.order.size()) != 2 * f.rank)
        throw std::logic_error("fat graph construction lost half ends");
    return f;
}

int dimension(int n, int g, const GroupParams& p) {
    if (n == 0 && g == 0) throw std::invalid_argument("the sphere is simply connected");
    if (n == 1 && g == 0) throw std::invalid_argument("the disk is simply connected");
    const int chi = 2 - 2 * g - n;
    int zeta = 0;
    if (n > 0) {
        zeta = (2 * g + n >= 3) ? p.s : p.r + p.s;
    } else {
        zeta = (g >= 2) ? 2 * p.s : 2 * (p.r + p.s);
    }
    return -chi * p.dimG + zeta;
}

}  // namespace goldman
