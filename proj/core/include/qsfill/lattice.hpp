#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsfill {

// Plumbing is the local lattice of a curve configuration given only by its
// intersection graph; it is used for compactifying divisors, which do not
// come with an ambient rational surface.
enum class BaseModel { ProjectivePlane, Quadric, Plumbing };

std::string to_string(BaseModel b);

enum class CurveKind { EmbeddedSphere, CuspidalRational };

std::string to_string(CurveKind k);

using Coeffs = std::vector<std::int64_t>;

// Base block (h, or f1 f2, or plumbing vertices) followed by exceptional
// classes e_1..e_N with e_i.e_i = -1.  c1 is kept as a covector so that
// plumbing lattices with a degenerate form are handled too.
class AmbientLattice {
public:
    static AmbientLattice projective_plane(int blowups = 0);
    static AmbientLattice quadric(int blowups = 0);
    // gram: symmetric base block; c1: c1 pairing of each base vector.
    static AmbientLattice plumbing(std::vector<Coeffs> gram, Coeffs c1);

    BaseModel base_model() const { return base_; }
    int base_rank() const { return static_cast<int>(gram_.size()); }
    int blowup_count() const { return blowups_; }
    int rank() const { return base_rank() + blowups_; }

    std::int64_t form(int i, int j) const;
    std::int64_t c1_coeff(int i) const { return c1_[static_cast<std::size_t>(i)]; }
    const Coeffs& c1_covector() const { return c1_; }

    std::int64_t pair(const Coeffs& a, const Coeffs& b) const;
    std::int64_t c1_pairing(const Coeffs& a) const;
    // c1.c1; only defined for ProjectivePlane and Quadric, whose form is
    // its own inverse.
    std::int64_t c1_squared() const;
    std::vector<std::string> basis_names() const;

    // Appends e_{N+1}.
    void add_exceptional();
    // Drops the exceptional coordinate idx (absolute index).
    void drop_exceptional(int idx);
    // After contracting a -1 class E that is not a basis vector the lattice
    // keeps its rank but c1 becomes c1 + E.
    void shift_c1(const Coeffs& e);
    int contractions() const { return contractions_; }
    // Deserialization only: overwrite c1 and the contraction counter.
    void restore(Coeffs c1, int contractions);

    bool operator==(const AmbientLattice&) const = default;

    Coeffs zero() const { return Coeffs(static_cast<std::size_t>(rank()), 0); }
    Coeffs unit(int i) const;

private:
    BaseModel base_ = BaseModel::ProjectivePlane;
    std::vector<Coeffs> gram_;
    Coeffs c1_;
    int blowups_ = 0;
    int contractions_ = 0;
};

struct CurveClass {
    Coeffs coeffs;
    CurveKind kind = CurveKind::EmbeddedSphere;

    bool operator==(const CurveClass&) const = default;
};

std::int64_t pair(const AmbientLattice& lat, const CurveClass& a, const CurveClass& b);
std::int64_t c1_pairing(const AmbientLattice& lat, const CurveClass& a);
std::int64_t self_intersection(const AmbientLattice& lat, const CurveClass& a);
bool adjunction_check(const AmbientLattice& lat, const CurveClass& a);

// Human readable class, e.g. "3h-2e1".
std::string format_class(const AmbientLattice& lat, const Coeffs& c);

}  // namespace qsfill
