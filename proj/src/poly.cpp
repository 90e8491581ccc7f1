#include "goldman/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace goldman {

TraceVar::TraceVar(std::vector<int> indices) : idx_(std::move(indices)) {
    if (idx_.empty() || idx_.size() > 3)
        throw std::invalid_argument("trace variable needs 1..3 indices");
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 1) throw std::invalid_argument("trace variable index must be positive");
        if (i > 0 && idx_[i] <= idx_[i - 1])
            throw std::invalid_argument("trace variable indices must be strictly increasing");
    }
}

std::string TraceVar::text() const {
    std::string s = "t[";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx_[i]);
    }
    return s + "]";
}

std::string TraceVar::latex() const {
    std::string s = "t_{\\{";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx_[i]);
    }
    return s + "\\}}";
}

TraceVar parseTraceVar(const std::string& text) {
    if (text.size() < 4 || text.substr(0, 2) != "t[" || text.back() != ']')
        throw std::invalid_argument("bad trace variable: " + text);
    std::vector<int> idx;
    std::string body = text.substr(2, text.size() - 3);
    std::istringstream in(body);
    std::string piece;
    while (std::getline(in, piece, ',')) idx.push_back(std::stoi(piece));
    return TraceVar(std::move(idx));
}

std::vector<TraceVar> canonicalVariables(int rank) {
    std::vector<TraceVar> out;
    for (int i = 1; i <= rank; ++i) out.push_back(TraceVar::single(i));
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j) out.push_back(TraceVar::pair(i, j));
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            for (int k = j + 1; k <= rank; ++k) out.push_back(TraceVar::triple(i, j, k));
    return out;
}

void Monomial::multiplyBy(const TraceVar& v, int exp) {
    if (exp <= 0) throw std::invalid_argument("monomial exponents must be positive");
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const auto& f, const TraceVar& x) { return f.first < x; });
    if (it != factors_.end() && it->first == v)
        it->second += exp;
    else
        factors_.insert(it, {v, exp});
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out = *this;
    for (const auto& [v, e] : other.factors_) out.multiplyBy(v, e);
    return out;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponentOf(const TraceVar& v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // Lexicographic on the exponent sequence read in variable order.
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first != ib->first) return ib->first < ia->first;  // earlier var => larger
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    return ia == a.factors_.end() && ib != b.factors_.end();
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[Monomial()] = c;
}

Poly Poly::var(const TraceVar& v) {
    Poly p;
    Monomial m;
    m.multiplyBy(v);
    p.terms_[m] = 1;
    return p;
}

Poly Poly::monomial(const Rational& c, const Monomial& m) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

int Poly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Poly::trim() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& p) {
    for (const auto& [m, c] : p.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) it->second += c;
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& p) {
    for (const auto& [m, c] : p.terms_) {
        auto [it, fresh] = terms_.emplace(m, -c);
        if (!fresh) it->second -= c;
    }
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma.times(mb);
            auto [it, fresh] = out.terms_.emplace(std::move(m), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    out.trim();
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

Poly Poly::partial(const TraceVar& v) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponentOf(v);
        if (e == 0) continue;
        Monomial d;
        for (const auto& [w, k] : m.factors()) {
            if (w == v) {
                if (k > 1) d.multiplyBy(w, k - 1);
            } else {
                d.multiplyBy(w, k);
            }
        }
        auto [it, fresh] = out.terms_.emplace(std::move(d), c * e);
        if (!fresh) it->second += c * e;
    }
    out.trim();
    return out;
}

std::vector<TraceVar> Poly::variables() const {
    std::vector<TraceVar> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Poly Poly::substituted(const std::function<const Poly*(const TraceVar&)>& assignment) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Poly term{c};
        for (const auto& [v, e] : m.factors()) {
            const Poly* img = assignment(v);
            if (!img)
                throw std::invalid_argument("substitution missing variable " + v.text());
            for (int i = 0; i < e; ++i) term *= *img;
        }
        out += term;
    }
    return out;
}

Poly Poly::substituted(const std::map<TraceVar, Poly>& assignment) const {
    return substituted([&](const TraceVar& v) -> const Poly* {
        auto it = assignment.find(v);
        return it == assignment.end() ? nullptr : &it->second;
    });
}

Complex Poly::eval(const std::function<Complex(const TraceVar&)>& values) const {
    Complex out = 0.0;
    for (const auto& [m, c] : terms_) {
        Complex term = static_cast<double>(c.convert_to<double>());
        for (const auto& [v, e] : m.factors())
            for (int i = 0; i < e; ++i) term *= values(v);
        out += term;
    }
    return out;
}

Complex Poly::eval(const std::map<TraceVar, Complex>& values) const {
    return eval([&](const TraceVar& v) -> Complex {
        auto it = values.find(v);
        if (it == values.end())
            throw std::invalid_argument("evaluation missing variable " + v.text());
        return it->second;
    });
}

std::string rationalText(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string Poly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending graded-lex.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string factors;
        for (const auto& [v, e] : m.factors()) {
            if (!factors.empty()) factors += '*';
            factors += v.text();
            if (e > 1) factors += '^' + std::to_string(e);
        }
        if (factors.empty())
            out += rationalText(a);
        else if (a == 1)
            out += factors;
        else
            out += rationalText(a) + "*" + factors;
    }
    return out;
}

std::string Poly::latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string coeff;
        if (denominator(a) != 1)
            coeff = "\\frac{" + numerator(a).str() + "}{" + denominator(a).str() + "}";
        else if (numerator(a) != 1 || m.isConstant())
            coeff = numerator(a).str();
        std::string factors;
        for (const auto& [v, e] : m.factors()) {
            if (!factors.empty()) factors += ' ';
            factors += v.latex();
            if (e > 1) factors += "^{" + std::to_string(e) + "}";
        }
        if (!coeff.empty() && !factors.empty())
            out += coeff + " " + factors;
        else
            out += coeff + factors;
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skipWs() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skipWs();
        return i >= s.size();
    }
    char peek() {
        skipWs();
        return i < s.size() ? s[i] : '\0';
    }

    Rational parseRational() {
        skipWs();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected number in polynomial: " + s);
        std::string num = s.substr(start, i - start);
        if (peek() == '/') {
            ++i;
            skipWs();
            std::size_t d0 = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (d0 == i) throw std::invalid_argument("expected denominator: " + s);
            return Rational(boost::multiprecision::cpp_int(num),
                            boost::multiprecision::cpp_int(s.substr(d0, i - d0)));
        }
        return Rational(boost::multiprecision::cpp_int(num));
    }

    TraceVar parseVar() {
        skipWs();
        if (s[i] != 't') throw std::invalid_argument("expected variable: " + s);
        std::size_t start = i;
        while (i < s.size() && s[i] != ']') ++i;
        if (i == s.size()) throw std::invalid_argument("unterminated variable: " + s);
        ++i;
        return parseTraceVar(s.substr(start, i - start));
    }

    Poly parseTerm() {
        Rational coeff = 1;
        Monomial m;
        bool sawFactor = false;
        for (;;) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parseRational();
                sawFactor = true;
            } else if (c == 't') {
                TraceVar v = parseVar();
                int e = 1;
                if (peek() == '^') {
                    ++i;
                    e = static_cast<int>(parseRational().convert_to<long>());
                }
                m.multiplyBy(v, e);
                sawFactor = true;
            } else {
                throw std::invalid_argument("expected term factor in polynomial: " + s);
            }
            if (peek() == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!sawFactor) throw std::invalid_argument("empty term in polynomial: " + s);
        return Poly::monomial(coeff, m);
    }

    Poly parse() {
        Poly out;
        if (eof()) return out;
        // Leading sign.
        int sign = +1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : +1;
            ++i;
        }
        if (eof()) throw std::invalid_argument("dangling sign in polynomial: " + s);
        out += parseTerm().scaled(sign);
        while (!eof()) {
            char c = peek();
            if (c == '+')
                sign = +1;
            else if (c == '-')
                sign = -1;
            else
                throw std::invalid_argument("expected +/- between terms: " + s);
            ++i;
            out += parseTerm().scaled(sign);
        }
        return out;
    }
};

}  // namespace

Poly parsePoly(const std::string& text) {
    std::string t = text;
    // Allow "0" as the zero polynomial.
    PolyParser p(t);
    if (p.eof()) return Poly();
    Poly out = p.parse();
    return out;
}

}  // namespace goldman
