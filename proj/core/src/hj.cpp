#include "qsfill/hj.hpp"

#include <numeric>
#include <sstream>

#include "qsfill/checked.hpp"
#include "qsfill/errors.hpp"

namespace qsfill {

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string HJExpansion::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? "," : "") << terms[i];
    os << ']';
    return os.str();
}

HJExpansion hj_expand(std::int64_t n, std::int64_t q) {
    if (!(0 < q && q < n))
        throw DomainError("hj_expand: need 0 < q < n, got n=" + std::to_string(n) +
                          " q=" + std::to_string(q));
    if (std::gcd(n, q) != 1)
        throw DomainError("hj_expand: n and q must be coprime");
    HJExpansion out;
    // ceiling division; remainder b*q - n lies in [0, q)
    while (q > 0) {
        std::int64_t b = n / q + (n % q != 0 ? 1 : 0);
        out.terms.push_back(b);
        std::int64_t next = checked::sub(checked::mul(b, q), n);
        n = q;
        q = next;
    }
    return out;
}

Rational hj_eval(const HJExpansion& e) {
    if (e.terms.empty()) throw DomainError("hj_eval: empty expansion");
    for (auto t : e.terms)
        if (t < 2) throw DomainError("hj_eval: term below 2");
    // p/r holds the tail value, evaluated from the back
    std::int64_t p = e.terms.back(), r = 1;
    for (auto it = e.terms.rbegin() + 1; it != e.terms.rend(); ++it) {
        std::int64_t np = checked::sub(checked::mul(*it, p), r);
        r = p;
        p = np;
    }
    std::int64_t g = std::gcd(p, r);
    return {p / g, r / g};
}

HJExpansion hj_dual(std::int64_t n, std::int64_t q) {
    hj_expand(n, q);  // validates
    return hj_expand(n, n - q);
}

HJExpansion hj_dual(const HJExpansion& e) {
    Rational v = hj_eval(e);
    if (v.den == 1) {
        // n/1: dual is a chain of n-1 twos
        return HJExpansion{std::vector<std::int64_t>(static_cast<std::size_t>(v.num - 1), 2)};
    }
    return hj_expand(v.num, v.num - v.den);
}

}  // namespace qsfill
