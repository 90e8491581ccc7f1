#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace goldman {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Canonical trace coordinate t[I]: a strictly increasing index set, 1..3 indices.
/// Ordering: singles before pairs before triples, lexicographic inside each block.
class TraceVar {
public:
    TraceVar() = default;
    explicit TraceVar(std::vector<int> indices);
    static TraceVar single(int i) { return TraceVar({i}); }
    static TraceVar pair(int i, int j) { return TraceVar({i, j}); }
    static TraceVar triple(int i, int j, int k) { return TraceVar({i, j, k}); }

    const std::vector<int>& indices() const { return idx_; }
    int size() const { return static_cast<int>(idx_.size()); }
    int maxIndex() const { return idx_.empty() ? 0 : idx_.back(); }

    std::string text() const;   // t[1,3]
    std::string latex() const;  // t_{\{1,3\}}

    friend bool operator==(const TraceVar&, const TraceVar&) = default;
    friend auto operator<=>(const TraceVar& a, const TraceVar& b) {
        if (auto c = a.idx_.size() <=> b.idx_.size(); c != 0) return c;
        return a.idx_ <=> b.idx_;
    }

private:
    std::vector<int> idx_;
};

TraceVar parseTraceVar(const std::string& text);

/// All canonical coordinates for a free group of the given rank, in order.
std::vector<TraceVar> canonicalVariables(int rank);

/// Power product of TraceVars, exponents >= 1, factors sorted by variable.
class Monomial {
public:
    Monomial() = default;

    void multiplyBy(const TraceVar& v, int exp = 1);
    Monomial times(const Monomial& other) const;

    int degree() const;
    int exponentOf(const TraceVar& v) const;
    const std::vector<std::pair<TraceVar, int>>& factors() const { return factors_; }
    bool isConstant() const { return factors_.empty(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded-lexicographic order over the TraceVar order.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<TraceVar, int>> factors_;
};

/// Exact multivariate polynomial over the rationals in trace coordinates.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}
    static Poly var(const TraceVar& v);
    static Poly monomial(const Rational& c, const Monomial& m);

    bool isZero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    int degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& p);
    Poly& operator-=(const Poly& p);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& p) { return *this = *this * p; }
    Poly scaled(const Rational& c) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Formal partial derivative.
    Poly partial(const TraceVar& v) const;

    std::vector<TraceVar> variables() const;

    /// Homomorphic substitution; every variable of the polynomial must be assigned.
    Poly substituted(const std::function<const Poly*(const TraceVar&)>& assignment) const;
    Poly substituted(const std::map<TraceVar, Poly>& assignment) const;

    /// Evaluation; every variable must have a value.
    Complex eval(const std::function<Complex(const TraceVar&)>& values) const;
    Complex eval(const std::map<TraceVar, Complex>& values) const;

    /// Canonical text: terms in descending graded-lex order, e.g.
    /// "1/2*t[1]^2*t[2,3] - 2*t[1,2,4]". The zero polynomial renders as "0".
    std::string text() const;
    std::string latex() const;

private:
    void trim();
    std::map<Monomial, Rational> terms_;  // nonzero coefficients only
};

/// Parses the canonical text produced by Poly::text (and free-form sums of
/// rational-coefficient monomials in t[...] variables).
Poly parsePoly(const std::string& text);

std::string rationalText(const Rational& r);

}  // namespace goldman
