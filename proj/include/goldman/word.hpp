#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldman {

/// One letter of a free-group word: generator index (1-based) with exponent ±1.
struct Letter {
    int gen = 0;
    int exp = +1;

    Letter() = default;
    Letter(int g, int e) : gen(g), exp(e) {}

    Letter inverse() const { return Letter(gen, -exp); }

    friend bool operator==(const Letter&, const Letter&) = default;

    // Order: index ascending, positive exponent before negative.
    friend auto operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.gen <=> b.gen; c != 0) return c;
        return b.exp <=> a.exp;
    }
};

using Letters = std::vector<Letter>;

/// Freely reduced word. Construction always reduces.
class Word {
public:
    Word() = default;
    explicit Word(Letters raw);

    static Word fromLetters(Letters raw) { return Word(std::move(raw)); }

    const Letters& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    Word inverted() const;
    Word concat(const Word& other) const;

    /// True when additionally the first and last letters are not mutually inverse.
    bool cyclicallyReduced() const;

    /// Moves the first k letters to the end. Requires a cyclically reduced word.
    Word rotated(int k) const;

    int maxGenerator() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    Letters letters_;
};

/// Conjugacy-class representative: cyclically reduced, canonical rotation
/// (lexicographically least under the Letter order).
class CyclicWord {
public:
    CyclicWord() = default;
    /// Cyclically reduces w and picks the canonical rotation.
    explicit CyclicWord(const Word& w);

    const Word& rep() const { return rep_; }
    std::size_t size() const { return rep_.size(); }
    bool empty() const { return rep_.empty(); }

    CyclicWord inverted() const { return CyclicWord(rep_.inverted()); }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) { return a.rep_ <=> b.rep_; }

private:
    Word rep_;
};

Word freeReduce(const Letters& raw);

/// w = conjugator · core · conjugator^{-1} with core cyclically reduced.
struct CyclicReduction {
    CyclicWord core;
    Word conjugator;
};
CyclicReduction cyclicReduce(const Word& w);

/// Generator naming scheme for parsing and printing ("c1", or "a1 b1 ... c1 ..."
/// for positive-genus surface models).
struct GenNames {
    std::vector<std::string> names;  // names[i] is generator i+1

    static GenNames rankDefault(int rank);          // c1..cRank
    static GenNames surface(int n, int g);          // a1 b1 .. ag bg c1 .. c_{n-1}

    int rank() const { return static_cast<int>(names.size()); }
    int indexOf(const std::string& name) const;     // 1-based, throws if unknown
};

/// Parses whitespace-separated letters: `c1 c2 c3^-1`. An empty string is the
/// empty word. `^k` repeats the generator |k| times with the sign of k.
Word parseWord(const std::string& text, const GenNames& names);
std::string formatWord(const Word& w, const GenNames& names);

}  // namespace goldman
