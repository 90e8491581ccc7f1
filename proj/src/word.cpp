#include "goldman/word.hpp"

#include <algorithm>
#include <sstream>

namespace goldman {

Word freeReduce(const Letters& raw) { return Word(raw); }

Word::Word(Letters raw) {
    for (const Letter& l : raw) {
        if (l.gen <= 0) throw std::invalid_argument("generator indices must be positive");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

Word Word::inverted() const {
    Letters out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return Word::fromLetters(std::move(out));
}

Word Word::concat(const Word& other) const {
    Letters out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word::fromLetters(std::move(out));
}

bool Word::cyclicallyReduced() const {
    if (letters_.size() < 2) return true;
    const Letter& f = letters_.front();
    const Letter& b = letters_.back();
    return !(f.gen == b.gen && f.exp == -b.exp);
}

Word Word::rotated(int k) const {
    if (!cyclicallyReduced())
        throw std::invalid_argument("rotate requires a cyclically reduced word");
    if (letters_.empty()) return *this;
    const int n = static_cast<int>(letters_.size());
    k = ((k % n) + n) % n;
    Letters out;
    out.reserve(letters_.size());
    out.insert(out.end(), letters_.begin() + k, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + k);
    return Word::fromLetters(std::move(out));
}

int Word::maxGenerator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

namespace {

// Strips conjugation: w = conj . core . conj^{-1}, core cyclically reduced.
void stripConjugation(const Word& w, Letters& core, Letters& conj) {
    core = w.letters();
    conj.clear();
    while (core.size() >= 2 && core.front().gen == core.back().gen &&
           core.front().exp == -core.back().exp) {
        conj.push_back(core.front());
        core.erase(core.begin());
        core.pop_back();
    }
}

Word canonicalRotation(const Word& w) {
    if (w.empty()) return w;
    const int n = static_cast<int>(w.size());
    Word best = w;
    for (int k = 1; k < n; ++k) {
        Word r = w.rotated(k);
        if (r < best) best = r;
    }
    return best;
}

}  // namespace

CyclicReduction cyclicReduce(const Word& w) {
    Letters core, conj;
    stripConjugation(w, core, conj);
    CyclicReduction r;
    r.core = CyclicWord(Word::fromLetters(std::move(core)));
    r.conjugator = Word::fromLetters(std::move(conj));
    return r;
}

CyclicWord::CyclicWord(const Word& w) {
    Letters core, conj;
    stripConjugation(w, core, conj);
    rep_ = canonicalRotation(Word::fromLetters(std::move(core)));
}

GenNames GenNames::rankDefault(int rank) {
    GenNames g;
    for (int i = 1; i <= rank; ++i) g.names.push_back("c" + std::to_string(i));
    return g;
}

GenNames GenNames::surface(int n, int g) {
    GenNames out;
    for (int i = 1; i <= g; ++i) {
        out.names.push_back("a" + std::to_string(i));
        out.names.push_back("b" + std::to_string(i));
    }
    for (int j = 1; j <= n - 1; ++j) out.names.push_back("c" + std::to_string(j));
    return out;
}

int GenNames::indexOf(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i) + 1;
    throw std::invalid_argument("unknown generator name: " + name);
}

Word parseWord(const std::string& text, const GenNames& names) {
    Letters out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;  // identity element
        std::string base = tok;
        long expo = 1;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            base = tok.substr(0, pos);
            std::string e = tok.substr(pos + 1);
            try {
                expo = std::stol(e);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in token: " + tok);
            }
        }
        const int gen = names.indexOf(base);
        const int sign = expo >= 0 ? +1 : -1;
        for (long i = 0; i < std::labs(expo); ++i) out.emplace_back(gen, sign);
    }
    return Word::fromLetters(std::move(out));
}

std::string formatWord(const Word& w, const GenNames& names) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += ' ';
        if (l.gen < 1 || l.gen > names.rank())
            throw std::invalid_argument("letter index out of range for name table");
        out += names.names[l.gen - 1];
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

}  // namespace goldman
