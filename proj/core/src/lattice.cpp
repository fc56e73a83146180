#include "qsfill/lattice.hpp"

#include <sstream>

#include "qsfill/checked.hpp"
#include "qsfill/errors.hpp"

namespace qsfill {

std::string to_string(BaseModel b) {
    switch (b) {
        case BaseModel::ProjectivePlane: return "P2";
        case BaseModel::Quadric: return "Q";
        case BaseModel::Plumbing: return "plumbing";
    }
    return "?";
}

std::string to_string(CurveKind k) {
    return k == CurveKind::EmbeddedSphere ? "sphere" : "cuspidal";
}

AmbientLattice AmbientLattice::projective_plane(int blowups) {
    AmbientLattice l;
    l.base_ = BaseModel::ProjectivePlane;
    l.gram_ = {{1}};
    l.c1_ = {3};
    for (int i = 0; i < blowups; ++i) l.add_exceptional();
    return l;
}

AmbientLattice AmbientLattice::quadric(int blowups) {
    AmbientLattice l;
    l.base_ = BaseModel::Quadric;
    l.gram_ = {{0, 1}, {1, 0}};
    l.c1_ = {2, 2};
    for (int i = 0; i < blowups; ++i) l.add_exceptional();
    return l;
}

AmbientLattice AmbientLattice::plumbing(std::vector<Coeffs> gram, Coeffs c1) {
    if (gram.size() != c1.size()) throw DomainError("plumbing: gram and c1 sizes differ");
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (gram[i].size() != gram.size()) throw DomainError("plumbing: gram not square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw DomainError("plumbing: gram not symmetric");
    }
    AmbientLattice l;
    l.base_ = BaseModel::Plumbing;
    l.gram_ = std::move(gram);
    l.c1_ = std::move(c1);
    return l;
}

std::int64_t AmbientLattice::form(int i, int j) const {
    int r = base_rank();
    if (i < r && j < r) return gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return i == j ? -1 : 0;
}

Coeffs AmbientLattice::unit(int i) const {
    Coeffs c = zero();
    c[static_cast<std::size_t>(i)] = 1;
    return c;
}

std::int64_t AmbientLattice::pair(const Coeffs& a, const Coeffs& b) const {
    auto n = static_cast<std::size_t>(rank());
    if (a.size() != n || b.size() != n) throw DomainError("pair: class does not belong to this lattice");
    std::int64_t s = 0;
    auto r = static_cast<std::size_t>(base_rank());
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j)
            if (gram_[i][j] != 0) s = checked::add(s, checked::mul(checked::mul(a[i], gram_[i][j]), b[j]));
    }
    for (std::size_t i = r; i < n; ++i) s = checked::sub(s, checked::mul(a[i], b[i]));
    return s;
}

std::int64_t AmbientLattice::c1_pairing(const Coeffs& a) const {
    if (a.size() != c1_.size()) throw DomainError("c1_pairing: class does not belong to this lattice");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], c1_[i]));
    return s;
}

std::int64_t AmbientLattice::c1_squared() const {
    if (base_ == BaseModel::Plumbing) throw DomainError("c1_squared: undefined for a plumbing lattice");
    // the form G satisfies G*G = 1, so the class dual to the covector f is G f
    Coeffs k = zero();
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) k[static_cast<std::size_t>(i)] += form(i, j) * c1_[static_cast<std::size_t>(j)];
    return pair(k, k);
}

std::vector<std::string> AmbientLattice::basis_names() const {
    std::vector<std::string> names;
    switch (base_) {
        case BaseModel::ProjectivePlane: names = {"h"}; break;
        case BaseModel::Quadric: names = {"f1", "f2"}; break;
        case BaseModel::Plumbing:
            for (int i = 0; i < base_rank(); ++i) names.push_back("v" + std::to_string(i + 1));
            break;
    }
    for (int i = 0; i < blowups_; ++i) names.push_back("e" + std::to_string(i + 1));
    return names;
}

void AmbientLattice::add_exceptional() {
    ++blowups_;
    c1_.push_back(1);
}

void AmbientLattice::drop_exceptional(int idx) {
    if (idx < base_rank() || idx >= rank()) throw DomainError("drop_exceptional: not an exceptional index");
    c1_.erase(c1_.begin() + idx);
    --blowups_;
}

void AmbientLattice::shift_c1(const Coeffs& e) {
    // new covector f'(v) = f(v) + E.v
    for (int i = 0; i < rank(); ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < rank(); ++j) s += form(i, j) * e[static_cast<std::size_t>(j)];
        c1_[static_cast<std::size_t>(i)] += s;
    }
    ++contractions_;
}

std::int64_t pair(const AmbientLattice& lat, const CurveClass& a, const CurveClass& b) {
    return lat.pair(a.coeffs, b.coeffs);
}

std::int64_t c1_pairing(const AmbientLattice& lat, const CurveClass& a) {
    return lat.c1_pairing(a.coeffs);
}

std::int64_t self_intersection(const AmbientLattice& lat, const CurveClass& a) {
    return lat.pair(a.coeffs, a.coeffs);
}

bool adjunction_check(const AmbientLattice& lat, const CurveClass& a) {
    std::int64_t c1 = c1_pairing(lat, a);
    std::int64_t sq = self_intersection(lat, a);
    return a.kind == CurveKind::EmbeddedSphere ? c1 == sq + 2 : c1 == sq;
}

std::string format_class(const AmbientLattice& lat, const Coeffs& c) {
    auto names = lat.basis_names();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        std::int64_t v = c[i];
        if (v < 0) os << '-';
        else if (!first) os << '+';
        if (v != 1 && v != -1) os << (v < 0 ? -v : v);
        os << names[i];
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

void AmbientLattice::restore(Coeffs c1, int contractions) {
    if (c1.size() != c1_.size()) throw DomainError("c1 has the wrong rank");
    c1_ = std::move(c1);
    contractions_ = contractions;
}

}  // namespace qsfill
