#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace enriched {

/// Arithmetic in the prime field with q elements; values live in [0, q).
struct Fq {
    unsigned q;

    explicit Fq(unsigned q_);

    unsigned add(unsigned a, unsigned b) const { return (a + b) % q; }
    unsigned sub(unsigned a, unsigned b) const { return (a + q - b % q) % q; }
    unsigned neg(unsigned a) const { return (q - a % q) % q; }
    unsigned mul(unsigned a, unsigned b) const {
        return static_cast<unsigned>(static_cast<unsigned long long>(a) * b % q);
    }
    unsigned pow(unsigned a, unsigned long long e) const;
    unsigned inv(unsigned a) const;
};

using FVec = std::vector<unsigned>;

/// Linear subspace of F_q^n held as a reduced row echelon basis, so equal
/// subspaces compare equal structurally.
class Subspace {
public:
    Subspace(unsigned q, unsigned ambient);  // zero subspace
    static Subspace span(unsigned q, unsigned ambient, const std::vector<FVec>& gens);

    unsigned field_order() const { return q_; }
    unsigned ambient() const { return ambient_; }
    unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
    const std::vector<FVec>& basis() const { return rows_; }
    bool contains(const FVec& v) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return q_ == o.q_ && ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    unsigned q_, ambient_;
    std::vector<FVec> rows_;
};

// Kernel of the functional with the given coefficient vector (not all zero).
Subspace hyperplane_kernel(const Fq& f, const FVec& coeffs);

// Sum of subspaces pushed into F_q^ambient along coordinate inclusions;
// inclusion[i][j] is the ambient position of local coordinate j of part i.
Subspace subspace_sum(const Fq& f, unsigned ambient,
                      const std::vector<Subspace>& parts,
                      const std::vector<std::vector<unsigned>>& inclusions);

// First nonzero coordinate scaled to 1. Rejects the zero vector.
FVec normalize_proj(const Fq& f, FVec v);

// All points of P^{n-1}(F_q) in normalized form, lexicographic order.
std::vector<FVec> enumerate_proj(const Fq& f, unsigned n);

}  // namespace enriched
