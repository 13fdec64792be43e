#include "kplane/admissibility.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace kplane {

Rational::Rational(std::int64_t n) : num(n), den(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::infinity() {
    Rational r;
    r.inf = true;
    r.num = 1;
    return r;
}

Rational Rational::parse(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "oo")
        return infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)),
                        std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse exponent '" + text + "'");
    }
}

std::string Rational::str() const {
    if (inf) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::operator+(const Rational& o) const {
    if (inf || o.inf) return infinity();
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    if (inf) return infinity();
    if (o.inf) throw std::invalid_argument("subtracting infinity");
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    if (inf || o.inf) return infinity();
    return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.inf) return Rational(0);
    if (inf) return infinity();
    if (o.num == 0) throw std::invalid_argument("division by zero");
    return Rational(num * o.den, den * o.num);
}

bool Rational::operator==(const Rational& o) const {
    if (inf || o.inf) return inf == o.inf;
    return num == o.num && den == o.den;
}

bool Rational::operator<(const Rational& o) const {
    if (inf) return false;
    if (o.inf) return true;
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::optional<Rational> scaling_t(int d, int k, const Rational& p) {
    Rational dk(d, 1);
    if (p.inf) return std::nullopt;
    Rational slope = dk / p - Rational(k);  // d/p - k
    if (!(Rational(0) < slope)) return std::nullopt;
    return Rational(d - k) / slope;
}

static std::string require_valid(const ExponentQuery& q) {
    if (q.d < 2) return "d must be >= 2";
    if (q.k < 1 || q.k > q.d - 1) return "k must satisfy 1 <= k <= d-1";
    if (!(Rational(1) <= q.p)) return "p must be >= 1";
    if (!(Rational(1) <= q.q)) return "q must be >= 1";
    if (!(Rational(1) <= q.t)) return "t must be >= 1";
    return "";
}

Verdict check(const ExponentQuery& query) {
    if (auto msg = require_valid(query); !msg.empty())
        throw std::invalid_argument(msg);
    const int d = query.d, k = query.k;
    const Rational &p = query.p, &q = query.q, &t = query.t;

    Verdict v;
    v.scaling_t = scaling_t(d, k, p);

    // necessary conditions
    if (!(p < Rational(d, k)))
        v.reasons.push_back("p >= d/k = " + Rational(d, k).str());
    if (t.inf) {
        if (!p.inf && !(Rational(d) / p == Rational(k)))
            v.reasons.push_back("scaling d/p - (d-k)/t = k fails at t = inf");
    } else if (!v.scaling_t || !(t == *v.scaling_t)) {
        std::string must = v.scaling_t ? v.scaling_t->str() : "(none)";
        v.reasons.push_back("scaling d/p - (d-k)/t = k forces t = " + must);
    }
    // q <= (d-k) p', with p' = inf when p = 1
    if (!(p == Rational(1))) {
        Rational pprime = p / (p - Rational(1));
        Rational bound = Rational(d - k) * pprime;
        if (!(q <= bound))
            v.reasons.push_back("q > (d-k)p' = " + bound.str());
    }
    if (!v.reasons.empty()) {
        v.status = AdmissibilityStatus::NecessaryViolated;
        return v;
    }

    v.status = AdmissibilityStatus::SufficientBy;
    Rational christ_a(d + 1, k + 1);
    if (p == Rational(1) && t == Rational(1)) {
        v.source = "Fubini (p = 1, t = 1)";
    } else if (k == d - 1) {
        v.source = "Oberlin-Stein (k = d-1, necessary conditions are sufficient)";
    } else if (p <= christ_a) {
        v.source = "Christ (p <= (d+1)/(k+1))";
    } else if (p <= Rational(2) && p < Rational(d, k)) {
        v.source = "Christ (p <= 2 and p < d/k)";
    } else if (t == q && k == 1 && p < Rational(d + 1, 2)) {
        v.source = "Drury (x-ray diagonal, endpoint p = (d+1)/2 excluded)";
    } else if (t == q && 2 * k >= d - 1 && p <= christ_a) {
        v.source = "Drury (diagonal, k >= (d-1)/2)";
    } else {
        v.status = AdmissibilityStatus::OpenRegion;
    }
    return v;
}

std::string Verdict::to_json() const {
    nlohmann::ordered_json j;
    switch (status) {
        case AdmissibilityStatus::NecessaryViolated: j["status"] = "NecessaryViolated"; break;
        case AdmissibilityStatus::SufficientBy: j["status"] = "SufficientBy"; break;
        case AdmissibilityStatus::OpenRegion: j["status"] = "OpenRegion"; break;
    }
    j["reasons"] = reasons;
    if (!source.empty()) j["source"] = source;
    if (scaling_t)
        j["scaling_t"] = scaling_t->str();
    else
        j["scaling_t"] = nullptr;
    return j.dump();
}

}  // namespace kplane
