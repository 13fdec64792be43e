#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kplane {

/// Exact rational exponent, with +infinity admitted as a tag value.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool inf = false;

    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    static Rational infinity();

    static Rational parse(const std::string& text);  // "2", "4/3", "inf"
    std::string str() const;

    Rational operator+(const Rational&) const;
    Rational operator-(const Rational&) const;
    Rational operator*(const Rational&) const;
    Rational operator/(const Rational&) const;
    bool operator==(const Rational&) const;
    bool operator<(const Rational&) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }
};

struct ExponentQuery {
    int d = 2;
    int k = 1;
    Rational p{1}, q{1}, t{1};
};

enum class AdmissibilityStatus { NecessaryViolated, SufficientBy, OpenRegion };

struct Verdict {
    AdmissibilityStatus status = AdmissibilityStatus::OpenRegion;
    std::vector<std::string> reasons;  // nonempty iff NecessaryViolated
    std::string source;                // set iff SufficientBy
    std::optional<Rational> scaling_t;
    std::string to_json() const;
};

/// The t forced by d/p - (d-k)/t = k, when d/p > k; none otherwise.
std::optional<Rational> scaling_t(int d, int k, const Rational& p);

/// Classifies (d,k,p,q,t) against the necessary conditions
/// (p < d/k, the scaling identity, q <= (d-k)p') and the known sufficient
/// regions in order: Fubini p=t=1; full characterization at k=d-1;
/// Christ for 1 <= k <= d-2; Drury diagonal t=q. Exact rational arithmetic
/// throughout.
Verdict check(const ExponentQuery& query);

}  // namespace kplane
